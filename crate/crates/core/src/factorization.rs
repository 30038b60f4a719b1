//! The coset multigraph of a block, its split into simple layers, and the
//! closed-form 1-factorizations used on those layers.
//!
//! Vertices are the right cosets of the block, indexed as in
//! [`ClassBlock::cosets`]. Two distinct cosets `Hy`, `Hz` are joined by one
//! edge per element `w ∈ Hy` with `w⁻¹ ∈ Hz`; for a self-paired block every
//! pair of distinct cosets is eligible, otherwise only pairs with one coset on
//! each side (`HxH` against `Hx⁻¹H`). Every eligible pair carries exactly `m`
//! edges. Edge `j` of every pair (ordered by the id of the element on the
//! lower-index side) makes up layer `j`, which is a `K_t` or a `K_{t,t}`.
//!
//! An edge stands for the element pair `(w, w⁻¹)`; mapping a matching through
//! that correspondence yields a set with at most one element per coset and
//! closed under inverses. Elements whose inverse lies in their own coset are
//! never on an edge; they form the per-coset diagonal core.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cosets::{ClassBlock, Subgroup};
use crate::error::{Error, Result};
use crate::group::ElementId;

/// An edge of layer `layer` (0-based) between coset indices `a` and `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LayerEdge {
    pub a: usize,
    pub b: usize,
    pub layer: usize,
}

impl LayerEdge {
    pub fn new(a: usize, b: usize, layer: usize) -> Self {
        LayerEdge { a, b, layer }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub edges: Vec<LayerEdge>,
    /// `(w, w⁻¹)` with `w` in coset `edges[k].a`.
    pub element_pairs: Vec<(ElementId, ElementId)>,
}

impl Matching {
    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.element_pairs.iter().flat_map(|&(w, wi)| [w, wi])
    }
}

/// `(Hy)⁻¹ ∩ Hy` for one coset: involutions by increasing id, then inverse
/// pairs `(s, s⁻¹)` with `s < s⁻¹`, ordered by `s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagonalCore {
    pub involutions: Vec<ElementId>,
    pub pairs: Vec<(ElementId, ElementId)>,
}

impl DiagonalCore {
    pub fn len(&self) -> usize {
        self.involutions.len() + 2 * self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Position `p` in the order r₁..r_c, s₁, s₁⁻¹, s₂, s₂⁻¹, ...
    pub fn at(&self, p: usize) -> ElementId {
        let c = self.involutions.len();
        if p < c {
            self.involutions[p]
        } else {
            let (s, si) = self.pairs[(p - c) / 2];
            if (p - c) % 2 == 0 {
                s
            } else {
                si
            }
        }
    }
}

#[derive(Debug, Clone)]
struct PairEdges {
    a: usize,
    b: usize,
    /// `(w, w⁻¹)` with `w` in coset `a`, sorted by `w`.
    labeled: Vec<(ElementId, ElementId)>,
}

/// The multigraph of one block with its layers and element correspondence.
#[derive(Debug, Clone)]
pub struct LayeredCosetGraph {
    block: ClassBlock,
    cosets: Vec<Vec<ElementId>>,
    pairs: Vec<PairEdges>,
    /// Index into `pairs` for the unordered coset pair, `v × v` row-major.
    pair_index: Vec<Option<usize>>,
    cores: Vec<DiagonalCore>,
}

impl LayeredCosetGraph {
    pub fn build(h: &Subgroup<'_>, block: &ClassBlock) -> Self {
        let g = h.group();
        let cosets: Vec<Vec<ElementId>> = block.cosets.iter().map(|&r| h.right_coset(r)).collect();
        let v = cosets.len();
        let slot_of = |y: ElementId| {
            let rep = h.coset_rep(y);
            block.cosets.iter().position(|&r| r == rep)
        };

        let mut pair_index = vec![None; v * v];
        let mut pairs = Vec::new();
        let mut cores = Vec::new();
        for a in 0..v {
            let mut by_partner: Vec<Vec<(ElementId, ElementId)>> = vec![Vec::new(); v];
            for &w in &cosets[a] {
                let wi = g.inv(w);
                let b = slot_of(wi).expect("inverse stays inside the block");
                by_partner[b].push((w, wi));
            }
            if block.self_paired {
                let own = &by_partner[a];
                let mut core = DiagonalCore {
                    involutions: own.iter().filter(|(w, wi)| w == wi).map(|&(w, _)| w).collect(),
                    pairs: own
                        .iter()
                        .filter(|(w, wi)| w < wi)
                        .copied()
                        .collect(),
                };
                core.involutions.sort_unstable();
                core.pairs.sort_unstable();
                cores.push(core);
            }
            for (b, mut labeled) in by_partner.into_iter().enumerate() {
                if b <= a || labeled.is_empty() {
                    continue;
                }
                labeled.sort_unstable();
                pair_index[a * v + b] = Some(pairs.len());
                pair_index[b * v + a] = Some(pairs.len());
                pairs.push(PairEdges { a, b, labeled });
            }
        }
        LayeredCosetGraph {
            block: block.clone(),
            cosets,
            pairs,
            pair_index,
            cores,
        }
    }

    pub fn block(&self) -> &ClassBlock {
        &self.block
    }

    pub fn vertex_count(&self) -> usize {
        self.cosets.len()
    }

    pub fn coset(&self, index: usize) -> &[ElementId] {
        &self.cosets[index]
    }

    /// Number of layers, `m`.
    pub fn layer_count(&self) -> usize {
        self.block.m
    }

    /// Unordered coset pairs `(a, b)`, `a < b`, that carry edges.
    pub fn eligible_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().map(|p| (p.a, p.b))
    }

    /// All labelled element pairs between cosets `a` and `b`, oriented from `a`.
    pub fn parallel_edges(&self, a: usize, b: usize) -> Vec<(ElementId, ElementId)> {
        let v = self.vertex_count();
        if a >= v || b >= v {
            return Vec::new();
        }
        match self.pair_index[a * v + b] {
            Some(i) if self.pairs[i].a == a => self.pairs[i].labeled.clone(),
            Some(i) => self.pairs[i].labeled.iter().map(|&(w, wi)| (wi, w)).collect(),
            None => Vec::new(),
        }
    }

    /// The element pair behind `edge`, oriented `(w ∈ coset a, w⁻¹ ∈ coset b)`.
    pub fn phi(&self, edge: LayerEdge) -> Result<(ElementId, ElementId)> {
        let missing = || Error::EdgeNotFound {
            a: edge.a,
            b: edge.b,
            layer: edge.layer,
        };
        let v = self.vertex_count();
        if edge.a >= v || edge.b >= v {
            return Err(missing());
        }
        let i = self.pair_index[edge.a * v + edge.b].ok_or_else(missing)?;
        let pair = &self.pairs[i];
        let &(w, wi) = pair.labeled.get(edge.layer).ok_or_else(missing)?;
        Ok(if pair.a == edge.a { (w, wi) } else { (wi, w) })
    }

    /// Edges of layer `j`, one per eligible pair.
    pub fn layer_edges(&self, layer: usize) -> Vec<LayerEdge> {
        if layer >= self.layer_count() {
            return Vec::new();
        }
        self.pairs.iter().map(|p| LayerEdge::new(p.a, p.b, layer)).collect()
    }

    /// Resolves a set of layer edges into a [`Matching`].
    pub fn matching(&self, edges: Vec<LayerEdge>) -> Result<Matching> {
        let mut used = vec![false; self.vertex_count()];
        let mut element_pairs = Vec::with_capacity(edges.len());
        for &e in &edges {
            element_pairs.push(self.phi(e)?);
            for end in [e.a, e.b] {
                if used[end] {
                    return Err(Error::InvalidInput {
                        reason: format!("coset {end} covered twice by a matching"),
                    });
                }
                used[end] = true;
            }
        }
        Ok(Matching {
            edges,
            element_pairs,
        })
    }

    /// The element set corresponding to a set of layer edges.
    pub fn matching_to_elements(&self, edges: &[LayerEdge]) -> Result<BTreeSet<ElementId>> {
        let mut out = BTreeSet::new();
        for &e in edges {
            let (w, wi) = self.phi(e)?;
            out.insert(w);
            out.insert(wi);
        }
        Ok(out)
    }

    /// Diagonal core of coset `index`; empty for blocks that are not self-paired.
    pub fn core(&self, index: usize) -> Option<&DiagonalCore> {
        self.cores.get(index)
    }

    pub fn dump(&self) -> LayerDump {
        let reps = &self.block.cosets;
        let mut edges = Vec::new();
        for p in &self.pairs {
            for (label, &(w, wi)) in p.labeled.iter().enumerate() {
                edges.push(DumpEdge {
                    pair: [reps[p.a], reps[p.b]],
                    label: label + 1,
                    elements: [w, wi],
                });
            }
        }
        LayerDump {
            block: self.block.clone(),
            layer_count: self.layer_count(),
            edges,
        }
    }
}

pub fn build_layered_graph(h: &Subgroup<'_>, block: &ClassBlock) -> LayeredCosetGraph {
    LayeredCosetGraph::build(h, block)
}

#[derive(Debug, Clone, Serialize)]
pub struct DumpEdge {
    /// Coset representatives of the two endpoints.
    pub pair: [ElementId; 2],
    /// 1-based layer label.
    pub label: usize,
    pub elements: [ElementId; 2],
}

#[derive(Debug, Clone, Serialize)]
pub struct LayerDump {
    pub block: ClassBlock,
    pub layer_count: usize,
    pub edges: Vec<DumpEdge>,
}

/// The `t` perfect matchings of `K_{t,t}`: factor `k` joins left `i` to right `(i + k) mod t`.
pub fn one_factorize_bipartite(t: usize) -> Vec<Vec<(usize, usize)>> {
    (0..t)
        .map(|k| (0..t).map(|i| (i, (i + k) % t)).collect())
        .collect()
}

/// The `2n − 1` perfect matchings of `K_{2n}` by the circle method.
///
/// Vertex `2n − 1` stays fixed; round `r` joins it to `r` and pairs
/// `(r + i) mod (2n − 1)` with `(r − i) mod (2n − 1)` for `1 ≤ i < n`.
pub fn one_factorize_complete_even(order: usize) -> Vec<Vec<(usize, usize)>> {
    assert!(order >= 2 && order % 2 == 0, "K_{order} has no 1-factorization");
    let q = order - 1;
    let n = order / 2;
    (0..q)
        .map(|r| {
            std::iter::once((q, r))
                .chain((1..n).map(|i| ((r + i) % q, (r + q - i) % q)))
                .collect()
        })
        .collect()
}

/// Near-perfect matching `E_i` of `K_{2n+1}` on vertices `1..=2n+1`, missing vertex `i`:
/// `{ {i − l, i + l} : 1 ≤ l ≤ n }` with indices reduced into `1..=2n+1`.
pub fn near_one_factorization_odd(order: usize, i: usize) -> Result<Vec<(usize, usize)>> {
    if order % 2 == 0 {
        return Err(Error::InvalidInput {
            reason: format!("K_{order} is not of odd order"),
        });
    }
    if i == 0 || i > order {
        return Err(Error::IndexOutOfRange { index: i, order });
    }
    let n = order / 2;
    // bar(a) in 1..=order
    let bar = |a: isize| (a - 1).rem_euclid(order as isize) as usize + 1;
    Ok((1..=n)
        .map(|l| (bar(i as isize - l as isize), bar((i + l) as isize)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use std::collections::HashSet;

    fn norm(e: (usize, usize)) -> (usize, usize) {
        (e.0.min(e.1), e.0.max(e.1))
    }

    #[test]
    fn bipartite_small_cases() {
        assert_eq!(one_factorize_bipartite(1), vec![vec![(0, 0)]]);
        assert_eq!(
            one_factorize_bipartite(2),
            vec![vec![(0, 0), (1, 1)], vec![(0, 1), (1, 0)]]
        );
        let f = one_factorize_bipartite(4);
        let all: HashSet<_> = f.iter().flatten().copied().collect();
        assert_eq!(f.len(), 4);
        assert_eq!(all.len(), 16);
    }

    #[test]
    fn circle_method_small_cases() {
        assert_eq!(one_factorize_complete_even(2), vec![vec![(1, 0)]]);
        for order in [4, 6] {
            let f = one_factorize_complete_even(order);
            assert_eq!(f.len(), order - 1);
            let all: HashSet<_> = f.iter().flatten().map(|&e| norm(e)).collect();
            assert_eq!(all.len(), order * (order - 1) / 2);
            for m in &f {
                assert_eq!(m.len(), order / 2);
                let verts: HashSet<_> = m.iter().flat_map(|&(a, b)| [a, b]).collect();
                assert_eq!(verts.len(), order);
            }
        }
    }

    #[test]
    fn near_factor_small_cases() {
        assert_eq!(near_one_factorization_odd(1, 1).unwrap(), vec![]);
        assert_eq!(near_one_factorization_odd(3, 1).unwrap(), vec![(3, 2)]);
        let all: HashSet<_> = (1..=5)
            .flat_map(|i| near_one_factorization_odd(5, i).unwrap())
            .map(norm)
            .collect();
        assert_eq!(all.len(), 10);
        assert_eq!(
            near_one_factorization_odd(5, 6),
            Err(Error::IndexOutOfRange { index: 6, order: 5 })
        );
        assert!(near_one_factorization_odd(5, 0).is_err());
    }

    fn z6_graph(g: &crate::group::GroupTable) -> LayeredCosetGraph {
        let h = Subgroup::from_members(g, [0, 3]).unwrap();
        let block = h.class_decomposition().unwrap().blocks.remove(0);
        LayeredCosetGraph::build(&h, &block)
    }

    #[test]
    fn z6_block_edges() {
        // Catalog Z6 ids are powers of the generator, so id k is k mod 6.
        let g = catalog("cyclic:6").unwrap();
        let graph = z6_graph(&g);
        assert_eq!(graph.eligible_pairs().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(graph.parallel_edges(0, 1), vec![(1, 5), (4, 2)]);
        assert_eq!(graph.phi(LayerEdge::new(0, 1, 0)).unwrap(), (1, 5));
        assert_eq!(graph.phi(LayerEdge::new(1, 0, 1)).unwrap(), (2, 4));
        assert_eq!(
            graph.matching_to_elements(&[LayerEdge::new(0, 1, 0)]).unwrap(),
            BTreeSet::from([1, 5])
        );
        assert!(graph.matching_to_elements(&[]).unwrap().is_empty());
        assert_eq!(
            graph.phi(LayerEdge::new(0, 1, 2)),
            Err(Error::EdgeNotFound { a: 0, b: 1, layer: 2 })
        );
    }

    #[test]
    fn q8_block_has_no_pairs() {
        let g = catalog("quaternion:8").unwrap();
        let minus_one = g.involutions().next().unwrap();
        let h = Subgroup::from_members(&g, [0, minus_one]).unwrap();
        let block = h.class_decomposition().unwrap().blocks.remove(0);
        let graph = LayeredCosetGraph::build(&h, &block);
        assert_eq!(graph.vertex_count(), 1);
        assert_eq!(graph.eligible_pairs().count(), 0);
        let core = graph.core(0).unwrap();
        assert!(core.involutions.is_empty());
        assert_eq!(core.pairs.len(), 1);
        let (s, si) = core.pairs[0];
        assert_eq!(g.inv(s), si);
    }

    #[test]
    fn s4_block_is_triangle() {
        let g = catalog("symmetric:4").unwrap();
        let c = g.id_of_images(&[1, 2, 0, 3]).unwrap();
        let x = g.id_of_images(&[3, 1, 2, 0]).unwrap();
        let h = Subgroup::closure(&g, [c]).unwrap();
        let dec = h.class_decomposition().unwrap();
        let block = dec
            .blocks
            .iter()
            .find(|b| b.cosets.contains(&h.coset_rep(x)))
            .unwrap();
        let graph = LayeredCosetGraph::build(&h, block);
        assert_eq!(graph.layer_count(), 1);
        assert_eq!(graph.eligible_pairs().count(), 3);
        for (a, b) in graph.eligible_pairs() {
            assert_eq!(graph.parallel_edges(a, b).len(), 1);
        }
    }

    #[test]
    fn matching_rejects_repeated_vertex() {
        let g = catalog("cyclic:6").unwrap();
        let graph = z6_graph(&g);
        let err = graph
            .matching(vec![LayerEdge::new(0, 1, 0), LayerEdge::new(0, 1, 1)])
            .unwrap_err();
        assert!(matches!(err, Error::InvalidInput { .. }));
        let m = graph.matching(vec![LayerEdge::new(0, 1, 1)]).unwrap();
        assert_eq!(m.element_pairs, vec![(4, 2)]);
    }
}
