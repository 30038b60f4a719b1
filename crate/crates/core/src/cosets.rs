//! Subgroups, right cosets, double cosets and the decomposition of `G∖H`
//! into blocks `HxH ∪ Hx⁻¹H`.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{ElementId, GroupTable, IDENTITY};

/// A subgroup `H` of a [`GroupTable`], with its right cosets precomputed.
#[derive(Debug, Clone)]
pub struct Subgroup<'g> {
    group: &'g GroupTable,
    members: Vec<ElementId>,
    contains: Vec<bool>,
    /// `coset_rep[y]` is the minimal id of `Hy`.
    coset_rep: Vec<ElementId>,
}

impl PartialEq for Subgroup<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.group, other.group) && self.members == other.members
    }
}

impl Eq for Subgroup<'_> {}

impl<'g> Subgroup<'g> {
    /// Validates that `members` is closed under products and inverses.
    pub fn from_members(group: &'g GroupTable, members: impl IntoIterator<Item = ElementId>) -> Result<Self> {
        let mut contains = vec![false; group.order()];
        for id in members {
            group.check_id(id)?;
            contains[id] = true;
        }
        let not_sub = |reason: String| Error::NotASubgroup { reason };
        if !contains[IDENTITY] {
            return Err(not_sub("identity missing".into()));
        }
        let members: Vec<ElementId> = group.elements().filter(|&i| contains[i]).collect();
        for &a in &members {
            if !contains[group.inv(a)] {
                return Err(not_sub(format!("inverse of {a} missing")));
            }
            for &b in &members {
                let ab = group.mul(a, b);
                if !contains[ab] {
                    return Err(not_sub(format!("{a}·{b} = {ab} missing")));
                }
            }
        }
        Ok(Self::from_closed(group, contains))
    }

    fn from_closed(group: &'g GroupTable, contains: Vec<bool>) -> Self {
        let members: Vec<ElementId> = group.elements().filter(|&i| contains[i]).collect();
        assert_eq!(group.order() % members.len(), 0, "Lagrange violated");
        let mut coset_rep = vec![usize::MAX; group.order()];
        for y in group.elements() {
            if coset_rep[y] == usize::MAX {
                for &k in &members {
                    coset_rep[group.mul(k, y)] = y;
                }
            }
        }
        Subgroup {
            group,
            members,
            contains,
            coset_rep,
        }
    }

    pub fn trivial(group: &'g GroupTable) -> Self {
        let mut contains = vec![false; group.order()];
        contains[IDENTITY] = true;
        Self::from_closed(group, contains)
    }

    pub fn whole(group: &'g GroupTable) -> Self {
        Self::from_closed(group, vec![true; group.order()])
    }

    pub fn group(&self) -> &'g GroupTable {
        self.group
    }

    /// Sorted member ids.
    pub fn members(&self) -> &[ElementId] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.group.order() / self.members.len()
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.contains[x]
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_proper(&self) -> bool {
        self.members.len() < self.group.order()
    }

    /// Minimal id of the right coset `Hx`.
    pub fn coset_rep(&self, x: ElementId) -> ElementId {
        self.coset_rep[x]
    }

    /// Minimal ids of all right cosets, increasing.
    pub fn coset_reps(&self) -> Vec<ElementId> {
        self.group.elements().filter(|&y| self.coset_rep[y] == y).collect()
    }

    /// `Hx` as a sorted id list.
    pub fn right_coset(&self, x: ElementId) -> Vec<ElementId> {
        let mut out: Vec<ElementId> = self.members.iter().map(|&k| self.group.mul(k, x)).collect();
        out.sort_unstable();
        out
    }

    /// `|H ∩ H^x|` and the intersection itself, where `H^x = {x⁻¹kx : k ∈ H}`.
    pub fn conj_intersection(&self, x: ElementId) -> (usize, Subgroup<'g>) {
        let g = self.group;
        let xi = g.inv(x);
        let mut contains = vec![false; g.order()];
        for &k in &self.members {
            let c = g.mul(g.mul(xi, k), x);
            if self.contains[c] {
                contains[c] = true;
            }
        }
        let sub = Self::from_closed(g, contains);
        (sub.order(), sub)
    }

    /// `HxH` as a sorted id list.
    pub fn double_coset(&self, x: ElementId) -> Result<Vec<ElementId>> {
        self.group.check_id(x)?;
        if self.contains[x] {
            return Err(Error::XInSubgroup { x });
        }
        Ok(self.double_coset_unchecked(x))
    }

    fn double_coset_unchecked(&self, x: ElementId) -> Vec<ElementId> {
        let g = self.group;
        let set: BTreeSet<ElementId> = self
            .members
            .iter()
            .flat_map(|&k| self.members.iter().map(move |&k2| g.mul(g.mul(k, x), k2)))
            .collect();
        set.into_iter().collect()
    }

    /// Non-identity elements `y ∈ Hx` with `y² = 1`, increasing.
    pub fn involutions_in_coset(&self, x: ElementId) -> Vec<ElementId> {
        self.right_coset(x)
            .into_iter()
            .filter(|&y| self.group.is_involution(y))
            .collect()
    }

    /// `(Hx)⁻¹ ∩ Hx`, defined when `HxH = Hx⁻¹H`.
    pub fn inverse_closed_core(&self, x: ElementId) -> Result<Vec<ElementId>> {
        self.group.check_id(x)?;
        let g = self.group;
        if !self.contains[x] && !self.double_coset_unchecked(x).contains(&g.inv(x)) {
            return Err(Error::NotSelfPaired { x });
        }
        let rep = self.coset_rep(x);
        Ok(self
            .right_coset(x)
            .into_iter()
            .filter(|&y| self.coset_rep(g.inv(y)) == rep)
            .collect())
    }

    /// Smallest subgroup containing `seeds`.
    pub fn closure(group: &'g GroupTable, seeds: impl IntoIterator<Item = ElementId>) -> Result<Self> {
        let mut contains = vec![false; group.order()];
        contains[IDENTITY] = true;
        let mut gens = Vec::new();
        for s in seeds {
            group.check_id(s)?;
            gens.push(s);
        }
        // Finite group: closing under right multiplication by generators suffices.
        let mut frontier = vec![IDENTITY];
        while let Some(y) = frontier.pop() {
            for &s in &gens {
                let z = group.mul(y, s);
                if !contains[z] {
                    contains[z] = true;
                    frontier.push(z);
                }
            }
        }
        Ok(Self::from_closed(group, contains))
    }

    /// Decomposes `G∖H` into blocks `HxH ∪ Hx⁻¹H`, sweeping ids upward.
    pub fn class_decomposition(&self) -> Result<ClassDecomposition> {
        if !self.is_proper() {
            return Err(Error::SubgroupNotProper);
        }
        if self.is_trivial() {
            return Err(Error::SubgroupTrivial);
        }
        let g = self.group;
        let mut visited = self.contains.clone();
        let mut blocks = Vec::new();
        for x in g.elements() {
            if visited[x] {
                continue;
            }
            let forward = self.double_coset_unchecked(x);
            let self_paired = forward.binary_search(&g.inv(x)).is_ok();
            let reps_of = |set: &[ElementId]| -> Vec<ElementId> {
                let mut r: Vec<ElementId> = set.iter().map(|&y| self.coset_rep(y)).collect();
                r.sort_unstable();
                r.dedup();
                r
            };
            let mut cosets = reps_of(&forward);
            for &y in &forward {
                visited[y] = true;
            }
            if !self_paired {
                let backward = self.double_coset_unchecked(g.inv(x));
                for &y in &backward {
                    visited[y] = true;
                }
                cosets.extend(reps_of(&backward));
            }
            let (m, _) = self.conj_intersection(x);
            let t = self.order() / m;
            let involutions = if self_paired {
                let core = self.inverse_closed_core(x)?;
                let c = core.iter().filter(|&&y| g.is_involution(y)).count();
                assert_eq!(core.len(), m, "inverse-closed core of {x} has wrong size");
                for &rep in &cosets {
                    assert_eq!(
                        self.involutions_in_coset(rep).len(),
                        c,
                        "involution count differs across the double coset of {x}"
                    );
                }
                Some(c)
            } else {
                None
            };
            blocks.push(ClassBlock {
                rep_x: x,
                cosets,
                self_paired,
                m,
                t,
                c: involutions,
                d: involutions.map(|c| (m - c) / 2),
                subgroup_order: self.order(),
            });
        }
        Ok(ClassDecomposition { blocks })
    }
}

/// One block `HxH ∪ Hx⁻¹H` of `G∖H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassBlock {
    #[serde(rename = "rep")]
    pub rep_x: ElementId,
    pub self_paired: bool,
    /// `|H ∩ H^x|`.
    pub m: usize,
    /// `|H| / m`, the number of right cosets in `HxH`.
    pub t: usize,
    /// Involutions per right coset of `HxH`; only defined for self-paired blocks.
    pub c: Option<usize>,
    /// Inverse pairs in the core of each coset (`c + 2d = m`); self-paired only.
    pub d: Option<usize>,
    /// Minimal-id coset representatives. Self-paired: the `t` cosets of `HxH`.
    /// Otherwise the `t` cosets of `HxH` followed by the `t` of `Hx⁻¹H`.
    pub cosets: Vec<ElementId>,
    #[serde(skip)]
    pub subgroup_order: usize,
}

impl ClassBlock {
    pub fn size(&self) -> usize {
        self.cosets.len() * self.subgroup_order
    }

    pub fn involutions_per_coset(&self) -> usize {
        self.c.unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ClassDecomposition {
    pub blocks: Vec<ClassBlock>,
}

/// All subgroups of `group`, ordered by (order, member list).
///
/// Joins cyclic subgroups until nothing new appears; fine at desk scale.
pub fn all_subgroups(group: &GroupTable) -> Vec<Subgroup<'_>> {
    let mut seen: HashSet<Vec<ElementId>> = HashSet::new();
    let mut cyclic: Vec<Subgroup<'_>> = Vec::new();
    for x in group.elements() {
        let s = Subgroup::closure(group, [x]).expect("ids in range");
        if seen.insert(s.members.clone()) {
            cyclic.push(s);
        }
    }
    let mut all = cyclic.clone();
    let mut frontier = cyclic.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for c in &cyclic {
                if c.members.iter().all(|&y| a.contains(y)) {
                    continue;
                }
                let joined = Subgroup::closure(group, a.members.iter().chain(&c.members).copied())
                    .expect("ids in range");
                if seen.insert(joined.members.clone()) {
                    next.push(joined);
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    fn z6() -> GroupTable {
        catalog("cyclic:6").unwrap()
    }

    /// Id of `k` in a cyclic catalog group (generator has id 1, ids follow powers).
    fn power_ids(g: &GroupTable) -> Vec<ElementId> {
        let mut ids = vec![0];
        let mut cur = 0;
        for _ in 1..g.order() {
            cur = g.mul(cur, 1);
            ids.push(cur);
        }
        ids
    }

    fn by_images(g: &GroupTable, images: &[usize]) -> ElementId {
        g.id_of_images(images).unwrap()
    }

    #[test]
    fn empty_closure_is_trivial() {
        let g = z6();
        let h = Subgroup::closure(&g, []).unwrap();
        assert_eq!(h.members(), &[0]);
        assert!(Subgroup::closure(&g, [9]).is_err());
    }

    #[test]
    fn closure_of_transposition_in_s3() {
        let g = catalog("symmetric:3").unwrap();
        let t = by_images(&g, &[1, 0, 2]);
        let h = Subgroup::closure(&g, [t]).unwrap();
        assert_eq!(h.members(), &[0, t]);
    }

    #[test]
    fn closure_of_minus_one_in_q8() {
        let g = catalog("quaternion:8").unwrap();
        let minus_one = g.involutions().next().unwrap();
        let h = Subgroup::closure(&g, [minus_one]).unwrap();
        assert_eq!(h.order(), 2);
        for x in g.elements() {
            assert_eq!(g.mul(x, minus_one), g.mul(minus_one, x));
        }
    }

    #[test]
    fn from_members_rejects_non_subgroups() {
        let g = z6();
        assert!(matches!(
            Subgroup::from_members(&g, [0, 1]),
            Err(Error::NotASubgroup { .. })
        ));
        assert!(Subgroup::from_members(&g, [1]).is_err());
    }

    #[test]
    fn z6_cosets() {
        let g = z6();
        let p = power_ids(&g);
        let h = Subgroup::closure(&g, [p[3]]).unwrap();
        let mut expected = vec![p[1], p[4]];
        expected.sort();
        assert_eq!(h.right_coset(p[1]), expected);
        assert_eq!(h.right_coset(p[3]), h.members().to_vec());
        assert_eq!(h.double_coset(p[1]).unwrap(), expected);
        assert_eq!(h.double_coset(p[3]), Err(Error::XInSubgroup { x: p[3] }));
    }

    #[test]
    fn s3_coset_of_transposition() {
        let g = catalog("symmetric:3").unwrap();
        let a = by_images(&g, &[1, 0, 2]);
        let b = by_images(&g, &[2, 1, 0]);
        let h = Subgroup::from_members(&g, [0, a]).unwrap();
        let mut expected = vec![b, g.mul(a, b)];
        expected.sort();
        assert_eq!(h.right_coset(b), expected);
    }

    #[test]
    fn conj_intersection_examples() {
        let s3 = catalog("symmetric:3").unwrap();
        let a = by_images(&s3, &[1, 0, 2]);
        let r = by_images(&s3, &[1, 2, 0]);
        let h = Subgroup::from_members(&s3, [0, a]).unwrap();
        assert_eq!(h.conj_intersection(a).0, 2);
        assert_eq!(h.conj_intersection(r).0, 1);
        assert_eq!(h.double_coset(r).unwrap().len(), 4);

        let q8 = catalog("quaternion:8").unwrap();
        let minus_one = q8.involutions().next().unwrap();
        let center = Subgroup::from_members(&q8, [0, minus_one]).unwrap();
        let i = q8.elements().find(|&x| !center.contains(x)).unwrap();
        assert_eq!(center.conj_intersection(i).0, 2);
        assert_eq!(center.involutions_in_coset(i).len(), 0);
        let core = center.inverse_closed_core(i).unwrap();
        assert_eq!(core, center.right_coset(i));
    }

    #[test]
    fn d8_double_coset_of_rotation() {
        let g = catalog("dihedral:8").unwrap();
        let r = by_images(&g, &[1, 2, 3, 0]);
        let s = by_images(&g, &[0, 3, 2, 1]);
        let h = Subgroup::closure(&g, [s]).unwrap();
        let r3 = g.mul(g.mul(r, r), r);
        let mut expected = vec![r, r3, g.mul(s, r), g.mul(s, r3)];
        expected.sort();
        assert_eq!(h.double_coset(r).unwrap(), expected);
        // r² is central of order 2, so Hr² = {r², sr²} holds two involutions.
        let r2 = g.mul(r, r);
        let mut expected = vec![r2, g.mul(s, r2)];
        expected.sort();
        assert_eq!(h.involutions_in_coset(r2), expected);
    }

    #[test]
    fn z2_coset_is_h() {
        let g = catalog("cyclic:2").unwrap();
        let h = Subgroup::whole(&g);
        assert_eq!(h.involutions_in_coset(0), vec![1]);
    }

    #[test]
    fn decomposition_rejects_degenerate_subgroups() {
        let g = z6();
        assert_eq!(Subgroup::whole(&g).class_decomposition(), Err(Error::SubgroupNotProper));
        assert_eq!(Subgroup::trivial(&g).class_decomposition(), Err(Error::SubgroupTrivial));
    }

    #[test]
    fn z6_decomposition() {
        let g = z6();
        let p = power_ids(&g);
        let h = Subgroup::closure(&g, [p[3]]).unwrap();
        let dec = h.class_decomposition().unwrap();
        assert_eq!(dec.blocks.len(), 1);
        let b = &dec.blocks[0];
        assert!(!b.self_paired);
        assert_eq!((b.m, b.t, b.c, b.d), (2, 1, None, None));
        assert_eq!(b.cosets, vec![h.coset_rep(p[1]), h.coset_rep(p[5])]);
    }

    #[test]
    fn q8_center_decomposition() {
        let g = catalog("quaternion:8").unwrap();
        let minus_one = g.involutions().next().unwrap();
        let h = Subgroup::from_members(&g, [0, minus_one]).unwrap();
        let dec = h.class_decomposition().unwrap();
        assert_eq!(dec.blocks.len(), 3);
        for b in &dec.blocks {
            assert!(b.self_paired);
            assert_eq!((b.m, b.t, b.c, b.d), (2, 1, Some(0), Some(1)));
        }
    }

    #[test]
    fn s4_block_at_transposition() {
        let g = catalog("symmetric:4").unwrap();
        let c = by_images(&g, &[1, 2, 0, 3]);
        let x = by_images(&g, &[3, 1, 2, 0]);
        let h = Subgroup::closure(&g, [c]).unwrap();
        let dec = h.class_decomposition().unwrap();
        let block = dec
            .blocks
            .iter()
            .find(|b| b.cosets.contains(&h.coset_rep(x)))
            .unwrap();
        assert!(block.self_paired);
        assert_eq!((block.m, block.t, block.c, block.d), (1, 3, Some(1), Some(0)));
        assert_eq!(h.inverse_closed_core(x).unwrap(), vec![x]);
    }

    #[test]
    fn s3_normal_subgroup_core() {
        let g = catalog("symmetric:3").unwrap();
        let r = by_images(&g, &[1, 2, 0]);
        let a = by_images(&g, &[1, 0, 2]);
        let h = Subgroup::closure(&g, [r]).unwrap();
        let core = h.inverse_closed_core(a).unwrap();
        assert_eq!(core.len(), 3);
        assert!(core.iter().all(|&y| g.is_involution(y)));
    }

    #[test]
    fn core_requires_self_pairing() {
        let g = z6();
        let p = power_ids(&g);
        let h = Subgroup::closure(&g, [p[3]]).unwrap();
        assert_eq!(h.inverse_closed_core(p[1]), Err(Error::NotSelfPaired { x: p[1] }));
    }

    #[test]
    fn subgroup_counts() {
        // Known subgroup counts: S3 6, S4 30, Q8 6, D8 10, Z12 6.
        for (name, count) in [
            ("symmetric:3", 6),
            ("symmetric:4", 30),
            ("quaternion:8", 6),
            ("dihedral:8", 10),
            ("cyclic:12", 6),
            ("alternating:4", 10),
        ] {
            let g = catalog(name).unwrap();
            assert_eq!(all_subgroups(&g).len(), count, "{name}");
        }
    }
}
