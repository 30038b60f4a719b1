//! Finite groups as element-indexed multiplication tables.
//!
//! Elements are plain `usize` ids in `[0, order)`, and the identity is always
//! id 0. Tables come either from a raw Cayley table (relabelled so that the
//! identity lands on 0) or from the closure of a set of permutations.
//!
//! Permutations compose left to right: `(p·q)(i) = q(p(i))`.

use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type ElementId = usize;

pub const IDENTITY: ElementId = 0;

/// Size limits applied while ingesting a group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupLimits {
    /// Largest order accepted from generator closure.
    pub order_cap: usize,
    /// Tables up to this order get an exhaustive associativity check; larger
    /// ones get a seeded random spot-check of `10·n²` triples.
    pub assoc_full_limit: usize,
}

impl Default for GroupLimits {
    fn default() -> Self {
        GroupLimits {
            order_cap: 10_000,
            assoc_full_limit: 512,
        }
    }
}

const ASSOC_SPOT_SEED: u64 = 0x5eed_ca11_7ab1_e000;

/// A bijection on `[0, degree)` stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation {
                reason: "degree must be positive".into(),
            });
        }
        let mut seen = vec![false; images.len()];
        for &v in &images {
            if v >= images.len() || seen[v] {
                return Err(Error::InvalidPermutation {
                    reason: format!("{images:?} is not a bijection on 0..{}", images.len()),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]` for `(0 1 2)`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let q = cycle[(k + 1) % cycle.len()];
                if p >= degree || q >= degree {
                    return Err(Error::InvalidPermutation {
                        reason: format!("cycle entry out of range for degree {degree}"),
                    });
                }
                images[p] = q;
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&p| other.images[p]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Embeds into a larger degree, shifting the support by `offset`.
    pub fn shifted(&self, offset: usize, degree: usize) -> Permutation {
        let mut images: Vec<usize> = (0..degree).collect();
        for (i, &p) in self.images.iter().enumerate() {
            images[i + offset] = p + offset;
        }
        Permutation { images }
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

/// Cycle notation; fixed points omitted, identity printed as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
                first = false;
                p = self.images[p];
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A finite group given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    /// Row-major `order × order`; `table[i * order + j]` is the id of `xᵢ·xⱼ`.
    table: Vec<ElementId>,
    inv: Vec<ElementId>,
    /// Present when the group was generated by permutations.
    permutations: Option<Vec<Permutation>>,
    name: Option<String>,
}

impl GroupTable {
    /// Accepts a raw Cayley table, relabelling so the identity becomes id 0.
    pub fn from_table(order: usize, table: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_table_with(order, table, &GroupLimits::default())
    }

    pub fn from_table_with(
        order: usize,
        table: Vec<Vec<usize>>,
        limits: &GroupLimits,
    ) -> Result<Self> {
        let not_a_group = |reason: String, triple: Option<[usize; 3]>| Error::NotAGroup { reason, triple };
        if order == 0 {
            return Err(not_a_group("order must be positive".into(), None));
        }
        if table.len() != order || table.iter().any(|row| row.len() != order) {
            return Err(not_a_group(format!("table is not {order}×{order}"), None));
        }
        for (i, row) in table.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(not_a_group(
                        format!("entry {v} at ({i}, {j}) is outside [0, {order})"),
                        Some([i, j, v]),
                    ));
                }
            }
        }

        let e = (0..order)
            .find(|&e| (0..order).all(|j| table[e][j] == j && table[j][e] == j))
            .ok_or_else(|| not_a_group("no two-sided identity".into(), None))?;

        let mut inv = vec![usize::MAX; order];
        for i in 0..order {
            let j = (0..order)
                .find(|&j| table[i][j] == e)
                .ok_or_else(|| not_a_group(format!("no inverse for {i}"), None))?;
            if table[j][i] != e {
                return Err(not_a_group(
                    format!("{j} is a right but not a left inverse of {i}"),
                    Some([i, j, e]),
                ));
            }
            inv[i] = j;
        }

        let assoc_fails = |i: usize, j: usize, k: usize| table[table[i][j]][k] != table[i][table[j][k]];
        let assoc_err = |i, j, k| not_a_group(format!("({i}·{j})·{k} ≠ {i}·({j}·{k})"), Some([i, j, k]));
        if order <= limits.assoc_full_limit {
            for i in 0..order {
                for j in 0..order {
                    for k in 0..order {
                        if assoc_fails(i, j, k) {
                            return Err(assoc_err(i, j, k));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(ASSOC_SPOT_SEED);
            for _ in 0..10 * order * order {
                let (i, j, k) = (
                    rng.gen_range(0..order),
                    rng.gen_range(0..order),
                    rng.gen_range(0..order),
                );
                if assoc_fails(i, j, k) {
                    return Err(assoc_err(i, j, k));
                }
            }
        }

        // Swap e and 0.
        let relabel = |v: usize| {
            if v == e {
                0
            } else if v == 0 {
                e
            } else {
                v
            }
        };
        let mut flat = vec![0; order * order];
        let mut new_inv = vec![0; order];
        for i in 0..order {
            for j in 0..order {
                flat[relabel(i) * order + relabel(j)] = relabel(table[i][j]);
            }
            new_inv[relabel(i)] = relabel(inv[i]);
        }
        Ok(GroupTable {
            order,
            table: flat,
            inv: new_inv,
            permutations: None,
            name: None,
        })
    }

    /// Closure of `gens` under composition, enumerated breadth first.
    ///
    /// Ids: identity, then the generators in the given order (duplicates and
    /// the identity skipped), then each further BFS layer sorted by image array.
    pub fn from_permutation_generators(degree: usize, gens: &[Permutation]) -> Result<Self> {
        Self::from_permutation_generators_with(degree, gens, &GroupLimits::default())
    }

    pub fn from_permutation_generators_with(
        degree: usize,
        gens: &[Permutation],
        limits: &GroupLimits,
    ) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGeneratorSet);
        }
        if degree == 0 {
            return Err(Error::InvalidPermutation {
                reason: "degree must be positive".into(),
            });
        }
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidPermutation {
                reason: format!("generator {g} has degree {}, expected {degree}", g.degree()),
            });
        }

        let mut elements = vec![Permutation::identity(degree)];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        // parent[y] = (p, g) with elements[y] = elements[p]·gens[g]
        let mut parent: Vec<(usize, usize)> = vec![(0, usize::MAX)];

        let mut layer = Vec::new();
        for (gi, g) in gens.iter().enumerate() {
            if !index.contains_key(g) {
                index.insert(g.clone(), elements.len());
                layer.push(elements.len());
                elements.push(g.clone());
                parent.push((0, gi));
            }
        }
        if elements.len() > limits.order_cap {
            return Err(Error::OrderCapExceeded { cap: limits.order_cap });
        }

        while !layer.is_empty() {
            let mut fresh: Vec<(Permutation, usize, usize)> = Vec::new();
            let mut fresh_seen: HashMap<Permutation, ()> = HashMap::new();
            for &x in &layer {
                for (gi, g) in gens.iter().enumerate() {
                    let y = elements[x].then(g);
                    if !index.contains_key(&y) && !fresh_seen.contains_key(&y) {
                        fresh_seen.insert(y.clone(), ());
                        fresh.push((y, x, gi));
                    }
                }
            }
            fresh.sort_by(|a, b| a.0.cmp(&b.0));
            layer.clear();
            for (y, p, gi) in fresh {
                index.insert(y.clone(), elements.len());
                layer.push(elements.len());
                elements.push(y);
                parent.push((p, gi));
                if elements.len() > limits.order_cap {
                    return Err(Error::OrderCapExceeded { cap: limits.order_cap });
                }
            }
        }

        let n = elements.len();
        // right[g][z] = id of z·gens[g]
        let right: Vec<Vec<usize>> = gens
            .iter()
            .map(|g| elements.iter().map(|z| index[&z.then(g)]).collect())
            .collect();

        // Column y of the table from column parent(y): x·y = (x·p)·g.
        let mut table = vec![0; n * n];
        for x in 0..n {
            table[x * n] = x;
        }
        for y in 1..n {
            let (p, gi) = parent[y];
            for x in 0..n {
                table[x * n + y] = right[gi][table[x * n + p]];
            }
        }
        let inv = elements.iter().map(|p| index[&p.inverse()]).collect();

        Ok(GroupTable {
            order: n,
            table,
            inv,
            permutations: Some(elements),
            name: None,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> ElementId {
        IDENTITY
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.order
    }

    /// Unchecked product; panics on out-of-range ids.
    #[inline]
    pub fn mul(&self, i: ElementId, j: ElementId) -> ElementId {
        self.table[i * self.order + j]
    }

    /// Unchecked inverse; panics on out-of-range ids.
    #[inline]
    pub fn inv(&self, i: ElementId) -> ElementId {
        self.inv[i]
    }

    pub fn multiply(&self, i: ElementId, j: ElementId) -> Result<ElementId> {
        self.check_id(i)?;
        self.check_id(j)?;
        Ok(self.mul(i, j))
    }

    pub fn inverse_of(&self, i: ElementId) -> Result<ElementId> {
        self.check_id(i)?;
        Ok(self.inv(i))
    }

    pub fn check_id(&self, id: ElementId) -> Result<()> {
        if id < self.order {
            Ok(())
        } else {
            Err(Error::IdOutOfRange {
                id,
                order: self.order,
            })
        }
    }

    pub fn is_involution(&self, i: ElementId) -> bool {
        i != IDENTITY && self.inv(i) == i
    }

    pub fn involutions(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.elements().filter(|&i| self.is_involution(i))
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ElementId]> {
        self.table.chunks(self.order)
    }

    pub fn permutations(&self) -> Option<&[Permutation]> {
        self.permutations.as_deref()
    }

    pub fn permutation(&self, id: ElementId) -> Option<&Permutation> {
        self.permutations.as_ref().and_then(|p| p.get(id))
    }

    /// Id of the element with the given image array, for permutation-built groups.
    pub fn id_of_images(&self, images: &[usize]) -> Option<ElementId> {
        self.permutations
            .as_ref()?
            .iter()
            .position(|p| p.images() == images)
    }
}
