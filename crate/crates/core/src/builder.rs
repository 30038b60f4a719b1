//! Connection sets `S = T^a ∪ T^b` making `H` an `(a,b)`-regular set.
//!
//! `T^a ⊆ H∖{1}` is an inverse-closed set of size `a`, which gives every
//! vertex of `H` exactly `a` neighbours in `H`. `T^b` is the union over all
//! blocks of a bundle of `b` disjoint right transversals, so every coset
//! `Hy ≠ H` meets `T^b` in `b` elements and every outside vertex sees `b`
//! vertices of `H`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cosets::{ClassDecomposition, Subgroup};
use crate::error::{Error, Result};
use crate::factorization::LayeredCosetGraph;
use crate::group::ElementId;
use crate::perfect_code::is_perfect_code;
use crate::transversals::{bundle_for_block, TransversalBundle};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildOptions {
    /// Run the perfect-code criterion before building when `b` is odd,
    /// instead of failing at the first offending block.
    pub strict_precheck: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectionSet {
    pub a: usize,
    pub b: usize,
    /// `T^a`, sorted.
    pub inner: Vec<ElementId>,
    /// `T^b`, sorted.
    pub outer: Vec<ElementId>,
    /// `S = inner ∪ outer`, sorted.
    pub elements: Vec<ElementId>,
    pub blocks: Vec<TransversalBundle>,
}

impl ConnectionSet {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

fn check_a(h: &Subgroup<'_>, a: usize) -> Result<()> {
    let order = h.order();
    if a > order - 1 {
        return Err(Error::AOutOfRange { a, max: order - 1 });
    }
    if order % 2 == 1 && a % 2 == 1 {
        return Err(Error::ParityViolation { a, order });
    }
    Ok(())
}

/// An inverse-closed `T^a ⊆ H∖{1}` with `|T^a| = a`.
///
/// Involutions come first (increasing id), then inverse pairs by their smaller
/// member. If that would cut a pair in half, the last involution is traded for
/// the whole pair; `|H|` even guarantees an odd, hence nonzero, number of
/// involutions whenever `a` is odd.
pub fn inner_set(h: &Subgroup<'_>, a: usize) -> Result<Vec<ElementId>> {
    check_a(h, a)?;
    let g = h.group();
    let involutions: Vec<ElementId> = h.members().iter().copied().filter(|&y| g.is_involution(y)).collect();
    let pairs: Vec<(ElementId, ElementId)> = h
        .members()
        .iter()
        .map(|&y| (y, g.inv(y)))
        .filter(|&(y, yi)| y < yi)
        .collect();
    let mut out = Vec::with_capacity(a);
    if a <= involutions.len() {
        out.extend_from_slice(&involutions[..a]);
    } else {
        let mut singles = involutions.len();
        if (a - singles) % 2 == 1 {
            singles -= 1;
        }
        out.extend_from_slice(&involutions[..singles]);
        for &(y, yi) in &pairs[..(a - singles) / 2] {
            out.push(y);
            out.push(yi);
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Block decomposition and layered graphs of one subgroup, reusable across `(a, b)`.
#[derive(Debug, Clone)]
pub struct ConnectionBuilder<'a, 'g> {
    h: &'a Subgroup<'g>,
    decomposition: ClassDecomposition,
    graphs: Vec<LayeredCosetGraph>,
    options: BuildOptions,
}

impl<'a, 'g> ConnectionBuilder<'a, 'g> {
    pub fn new(h: &'a Subgroup<'g>) -> Result<Self> {
        Self::with_options(h, BuildOptions::default())
    }

    pub fn with_options(h: &'a Subgroup<'g>, options: BuildOptions) -> Result<Self> {
        let decomposition = h.class_decomposition()?;
        let graphs = decomposition
            .blocks
            .iter()
            .map(|block| LayeredCosetGraph::build(h, block))
            .collect();
        Ok(ConnectionBuilder {
            h,
            decomposition,
            graphs,
            options,
        })
    }

    pub fn decomposition(&self) -> &ClassDecomposition {
        &self.decomposition
    }

    pub fn graphs(&self) -> &[LayeredCosetGraph] {
        &self.graphs
    }

    pub fn build(&self, a: usize, b: usize) -> Result<ConnectionSet> {
        let order = self.h.order();
        if b > order {
            return Err(Error::BOutOfRange { b, max: order });
        }
        let inner = inner_set(self.h, a)?;
        if b % 2 == 1 && self.options.strict_precheck {
            if let Some(v) = is_perfect_code(self.h)?.violation {
                return Err(Error::PerfectCodeRequired {
                    rep: v.rep,
                    m: v.m,
                    t: v.t,
                    b,
                });
            }
        }
        let mut blocks = Vec::with_capacity(self.graphs.len());
        for graph in &self.graphs {
            let bundle = bundle_for_block(graph, b).map_err(|e| match e {
                Error::OddBNeedsInvolution { rep, b } => Error::PerfectCodeRequired {
                    rep,
                    m: graph.block().m,
                    t: graph.block().t,
                    b,
                },
                other => other,
            })?;
            blocks.push(bundle);
        }
        let outer: BTreeSet<ElementId> = blocks.iter().flat_map(|bd| bd.elements.iter().copied()).collect();
        let elements: BTreeSet<ElementId> = outer.iter().chain(&inner).copied().collect();
        let set = ConnectionSet {
            a,
            b,
            inner,
            outer: outer.into_iter().collect(),
            elements: elements.into_iter().collect(),
            blocks,
        };
        debug_assert_eq!(set.size(), a + b * (self.h.index() - 1));
        Ok(set)
    }
}

pub fn build_connection_set(h: &Subgroup<'_>, a: usize, b: usize) -> Result<ConnectionSet> {
    ConnectionBuilder::new(h)?.build(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn inner_set_examples() {
        let g = catalog("cyclic:3").unwrap();
        let h = Subgroup::whole(&g);
        assert_eq!(inner_set(&h, 0).unwrap(), Vec::<ElementId>::new());
        assert_eq!(inner_set(&h, 2).unwrap(), vec![1, 2]);
        assert_eq!(inner_set(&h, 1), Err(Error::ParityViolation { a: 1, order: 3 }));
        assert_eq!(inner_set(&h, 3), Err(Error::AOutOfRange { a: 3, max: 2 }));
    }

    #[test]
    fn inner_set_trades_involution_for_pair() {
        // Z4 = {0, 1, 2, 3} with 2 the only involution and {1, 3} a pair.
        let g = catalog("cyclic:4").unwrap();
        let h = Subgroup::whole(&g);
        assert_eq!(inner_set(&h, 1).unwrap(), vec![2]);
        assert_eq!(inner_set(&h, 2).unwrap(), vec![1, 3]);
        assert_eq!(inner_set(&h, 3).unwrap(), vec![1, 2, 3]);
    }

    #[test]
    fn empty_connection_set() {
        let g = catalog("cyclic:6").unwrap();
        let h = Subgroup::from_members(&g, [0, 3]).unwrap();
        let s = build_connection_set(&h, 0, 0).unwrap();
        assert!(s.elements.is_empty());
    }

    #[test]
    fn z6_one_one() {
        let g = catalog("cyclic:6").unwrap();
        let h = Subgroup::from_members(&g, [0, 3]).unwrap();
        let s = build_connection_set(&h, 1, 1).unwrap();
        assert_eq!(s.elements, vec![1, 3, 5]);
        assert_eq!(s.inner, vec![3]);
    }

    #[test]
    fn q8_center() {
        let g = catalog("quaternion:8").unwrap();
        let minus_one = g.involutions().next().unwrap();
        let h = Subgroup::from_members(&g, [0, minus_one]).unwrap();
        let err = build_connection_set(&h, 1, 1).unwrap_err();
        assert!(matches!(err, Error::PerfectCodeRequired { m: 2, t: 1, b: 1, .. }), "{err:?}");
        let s = build_connection_set(&h, 1, 2).unwrap();
        assert_eq!(s.size(), 7);
        assert_eq!(s.elements, (1..8).collect::<Vec<_>>());

        let strict = ConnectionBuilder::with_options(&h, BuildOptions { strict_precheck: true })
            .unwrap()
            .build(0, 1)
            .unwrap_err();
        assert!(matches!(strict, Error::PerfectCodeRequired { .. }));
    }

    #[test]
    fn b_out_of_range() {
        let g = catalog("cyclic:6").unwrap();
        let h = Subgroup::from_members(&g, [0, 3]).unwrap();
        assert_eq!(
            build_connection_set(&h, 0, 3),
            Err(Error::BOutOfRange { b: 3, max: 2 })
        );
    }
}
