//! Per-block unions of `b` pairwise disjoint right transversals of `H` whose
//! union is inverse-closed.
//!
//! Three shapes of block, three constructions:
//!
//! * not self-paired: each of the `m` layers is a `K_{t,t}`; its `t` shift
//!   matchings give `m·t = |H|` individually inverse-closed transversals.
//! * self-paired, `t = 2n`: each layer is a `K_{2n}`; the circle method gives
//!   `m(2n − 1) = |H| − m` of them. The remaining elements (the diagonal
//!   cores) are themselves a union of `m` transversals.
//! * self-paired, `t = 2n + 1`: near-perfect matchings `E_i` of each `K_{2n+1}`
//!   layer, completed at the uncovered coset `i` by a core involution
//!   (`T` sets, one transversal) or a core inverse pair over two layers
//!   (`R` sets, two transversals).

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cosets::ClassBlock;
use crate::error::{Error, Result};
use crate::factorization::{
    near_one_factorization_odd, one_factorize_bipartite, one_factorize_complete_even, LayerEdge,
    LayeredCosetGraph,
};
use crate::group::ElementId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    NonSelfPaired,
    SelfPairedEven,
    SelfPairedOdd,
}

impl BlockKind {
    pub fn of(block: &ClassBlock) -> Self {
        match (block.self_paired, block.t % 2) {
            (false, _) => BlockKind::NonSelfPaired,
            (true, 0) => BlockKind::SelfPairedEven,
            (true, _) => BlockKind::SelfPairedOdd,
        }
    }
}

/// `b` disjoint right transversals of `H` inside one block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransversalBundle {
    pub rep: ElementId,
    pub kind: BlockKind,
    pub b: usize,
    /// Union of the parts, sorted.
    pub elements: Vec<ElementId>,
    /// Each part meets every coset of the block once; sorted ids.
    pub parts: Vec<Vec<ElementId>>,
    #[serde(skip)]
    pub block: ClassBlock,
}

impl TransversalBundle {
    fn assemble(graph: &LayeredCosetGraph, b: usize, parts: Vec<Vec<ElementId>>) -> Self {
        let block = graph.block().clone();
        let elements: BTreeSet<ElementId> = parts.iter().flatten().copied().collect();
        debug_assert_eq!(elements.len(), parts.iter().map(Vec::len).sum::<usize>());
        TransversalBundle {
            rep: block.rep_x,
            kind: BlockKind::of(&block),
            b,
            elements: elements.into_iter().collect(),
            parts,
            block,
        }
    }
}

fn edges_to_part(graph: &LayeredCosetGraph, edges: &[LayerEdge]) -> Result<Vec<ElementId>> {
    Ok(graph.matching_to_elements(edges)?.into_iter().collect())
}

fn check_b(graph: &LayeredCosetGraph, b: usize) -> Result<()> {
    let max = graph.block().subgroup_order;
    if b > max {
        return Err(Error::BOutOfRange { b, max });
    }
    Ok(())
}

/// The `|H|` inverse-closed transversals of a block that is not self-paired,
/// layer-major, factor-minor.
pub fn base_transversals_non_self_paired(graph: &LayeredCosetGraph) -> Result<Vec<Vec<ElementId>>> {
    let block = graph.block();
    let t = block.t;
    let factors = one_factorize_bipartite(t);
    let mut out = Vec::with_capacity(block.m * t);
    for layer in 0..block.m {
        for factor in &factors {
            let edges: Vec<LayerEdge> = factor
                .iter()
                .map(|&(i, j)| LayerEdge::new(i, t + j, layer))
                .collect();
            out.push(edges_to_part(graph, &edges)?);
        }
    }
    Ok(out)
}

/// The `|H| − m` inverse-closed transversals of a self-paired block with even
/// `t`, layer-major, round-minor.
pub fn base_transversals_self_paired_even(graph: &LayeredCosetGraph) -> Result<Vec<Vec<ElementId>>> {
    let block = graph.block();
    let rounds = one_factorize_complete_even(block.t);
    let mut out = Vec::with_capacity(block.m * rounds.len());
    for layer in 0..block.m {
        for round in &rounds {
            let edges: Vec<LayerEdge> = round
                .iter()
                .map(|&(a, b)| LayerEdge::new(a, b, layer))
                .collect();
            out.push(edges_to_part(graph, &edges)?);
        }
    }
    Ok(out)
}

/// The diagonal cores split by position into `m` transversals: part `p` takes
/// the `p`-th core element of every coset.
pub fn diagonal_parts(graph: &LayeredCosetGraph) -> Vec<Vec<ElementId>> {
    let m = graph.block().m;
    (0..m)
        .map(|p| {
            let mut part: Vec<ElementId> = (0..graph.vertex_count())
                .map(|i| graph.core(i).expect("self-paired block").at(p))
                .collect();
            part.sort_unstable();
            part
        })
        .collect()
}

pub fn bundle_non_self_paired(graph: &LayeredCosetGraph, b: usize) -> Result<TransversalBundle> {
    check_b(graph, b)?;
    let mut parts = base_transversals_non_self_paired(graph)?;
    parts.truncate(b);
    Ok(TransversalBundle::assemble(graph, b, parts))
}

/// Self-paired block with even `t`.
///
/// Up to `|H| − m` parts come straight from the factorization. Beyond that,
/// all base parts are kept and the excess `e` is drawn from the diagonal
/// parts in inverse-closed units: single involution positions first, then
/// `(s, s⁻¹)` position pairs. Only when `c = 0` and `e` is odd is that
/// impossible, and the bundle becomes all of the diagonal plus the first
/// `b − m` base parts.
pub fn bundle_self_paired_even(graph: &LayeredCosetGraph, b: usize) -> Result<TransversalBundle> {
    check_b(graph, b)?;
    let block = graph.block();
    if !block.self_paired || block.t % 2 != 0 {
        return Err(Error::TOddInternal { rep: block.rep_x });
    }
    let mut base = base_transversals_self_paired_even(graph)?;
    if b <= base.len() {
        base.truncate(b);
        return Ok(TransversalBundle::assemble(graph, b, base));
    }
    let excess = b - base.len();
    let c = block.involutions_per_coset();
    let diagonal = diagonal_parts(graph);
    let single = c.min(excess);
    let single = if (excess - single) % 2 == 0 {
        Some(single)
    } else {
        single.checked_sub(1)
    };
    let parts = match single {
        Some(i) => {
            let pairs = (excess - i) / 2;
            let mut parts = base;
            parts.extend(diagonal[..i].iter().cloned());
            parts.extend(diagonal[c..c + 2 * pairs].iter().cloned());
            parts
        }
        None => {
            let rest = b - block.m;
            let mut parts = diagonal;
            parts.extend(base.into_iter().take(rest));
            parts
        }
    };
    Ok(TransversalBundle::assemble(graph, b, parts))
}

/// The `T` and `R` families of a self-paired block with odd `t = 2n + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddFamilies {
    /// `T_{i,j}` in `(j, i)` order: one involution at coset `i` plus `E_i` in layer `j`.
    pub t_sets: Vec<Vec<ElementId>>,
    /// `R_{i,l}` in `(l, i)` order, as its two transversals.
    pub r_sets: Vec<[Vec<ElementId>; 2]>,
}

pub fn odd_families(graph: &LayeredCosetGraph) -> Result<OddFamilies> {
    let block = graph.block();
    let t = block.t;
    let c = block.involutions_per_coset();
    let d = block.d.unwrap_or(0);
    let near: Vec<Vec<(usize, usize)>> = (1..=t)
        .map(|i| near_one_factorization_odd(t, i))
        .collect::<Result<_>>()?;
    let matched = |i: usize, layer: usize| -> Result<Vec<ElementId>> {
        let edges: Vec<LayerEdge> = near[i]
            .iter()
            .map(|&(u, v)| LayerEdge::new(u - 1, v - 1, layer))
            .collect();
        edges_to_part(graph, &edges)
    };
    let core = |i: usize| graph.core(i).expect("self-paired block");

    let mut t_sets = Vec::with_capacity(c * t);
    for j in 0..c {
        for i in 0..t {
            let mut part = matched(i, j)?;
            part.push(core(i).involutions[j]);
            part.sort_unstable();
            t_sets.push(part);
        }
    }
    let mut r_sets = Vec::with_capacity(d * t);
    for l in 0..d {
        for i in 0..t {
            let (s, s_inv) = core(i).pairs[l];
            let mut first = matched(i, c + 2 * l)?;
            first.push(s);
            first.sort_unstable();
            let mut second = matched(i, c + 2 * l + 1)?;
            second.push(s_inv);
            second.sort_unstable();
            r_sets.push([first, second]);
        }
    }
    Ok(OddFamilies { t_sets, r_sets })
}

/// Self-paired block with odd `t`.
///
/// Even `b`: `b/2` `R` sets while they last, then `T` sets. Odd `b`: `T_{1,1}`
/// first, then as for `b − 1`. Odd `b` needs `c ≥ 1`.
pub fn bundle_self_paired_odd(graph: &LayeredCosetGraph, b: usize) -> Result<TransversalBundle> {
    check_b(graph, b)?;
    let block = graph.block();
    if b % 2 == 1 && block.involutions_per_coset() == 0 {
        return Err(Error::OddBNeedsInvolution {
            rep: block.rep_x,
            b,
        });
    }
    let families = odd_families(graph)?;
    let r_total = families.r_sets.len();
    let (r_count, t_count) = if b / 2 <= r_total {
        (b / 2, b % 2)
    } else {
        (r_total, b - 2 * r_total)
    };
    let mut t_iter = families.t_sets.into_iter();
    let mut parts = Vec::with_capacity(b);
    if b % 2 == 1 {
        parts.push(t_iter.next().expect("c ≥ 1"));
    }
    for [first, second] in families.r_sets.into_iter().take(r_count) {
        parts.push(first);
        parts.push(second);
    }
    parts.extend(t_iter.take(t_count - b % 2));
    Ok(TransversalBundle::assemble(graph, b, parts))
}

pub fn bundle_for_block(graph: &LayeredCosetGraph, b: usize) -> Result<TransversalBundle> {
    match BlockKind::of(graph.block()) {
        BlockKind::NonSelfPaired => bundle_non_self_paired(graph, b),
        BlockKind::SelfPairedEven => bundle_self_paired_even(graph, b),
        BlockKind::SelfPairedOdd => bundle_self_paired_odd(graph, b),
    }
}
