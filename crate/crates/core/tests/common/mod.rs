#![allow(dead_code)]

use std::collections::BTreeSet;

use regset::{all_subgroups, catalog, ElementId, GroupTable, Subgroup};

/// The desk-scale catalog: cyclic up to 16, dihedral up to 16, S3, S4, A4,
/// Q8, Z2×Z4 and Z2³.
pub fn sweep_names() -> Vec<String> {
    let mut names: Vec<String> = (2..=16).map(|n| format!("cyclic:{n}")).collect();
    names.extend((4..=16).step_by(2).map(|n| format!("dihedral:{n}")));
    names.extend(
        [
            "symmetric:3",
            "symmetric:4",
            "alternating:4",
            "quaternion:8",
            "cyclic:2*cyclic:4",
            "elementary-abelian:2^3",
        ]
        .map(String::from),
    );
    names
}

pub fn sweep_groups() -> Vec<GroupTable> {
    sweep_names().iter().map(|n| catalog(n).unwrap()).collect()
}

pub fn proper_nontrivial(g: &GroupTable) -> Vec<Subgroup<'_>> {
    all_subgroups(g)
        .into_iter()
        .filter(|h| !h.is_trivial() && h.is_proper())
        .collect()
}

/// `a` values allowed for `|H| = order`.
pub fn admissible_a(order: usize) -> Vec<usize> {
    (0..order).filter(|a| order % 2 == 0 || a % 2 == 0).collect()
}

/// `{k·x : k ∈ H}`, computed straight from the table.
pub fn coset(h: &Subgroup<'_>, x: ElementId) -> BTreeSet<ElementId> {
    h.members().iter().map(|&k| h.group().mul(k, x)).collect()
}

/// Neighbour counts into `H` for every vertex of `Cay(G, S)`, from scratch.
pub fn neighbour_counts(g: &GroupTable, s: &[ElementId], h: &Subgroup<'_>) -> Vec<usize> {
    let s: BTreeSet<ElementId> = s.iter().copied().collect();
    g.elements()
        .map(|v| {
            h.members()
                .iter()
                .filter(|&&w| s.contains(&g.mul(w, g.inv(v))))
                .count()
        })
        .collect()
}
