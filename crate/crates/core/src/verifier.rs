//! Brute-force checks on `Cay(G, S)`, where `y ~ x` iff `y·x⁻¹ ∈ S`.

use rayon::prelude::*;
use serde::Serialize;

use crate::cosets::Subgroup;
use crate::error::{Error, Result};
use crate::group::{ElementId, GroupTable, IDENTITY};

pub const DEFAULT_SEARCH_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexViolation {
    pub vertex: ElementId,
    pub in_code: bool,
    pub expected: usize,
    pub observed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularSetReport {
    pub ok: bool,
    /// Common neighbour count in `H` of the vertices of `H`, if uniform.
    pub a_observed: Option<usize>,
    /// Common neighbour count in `H` of the vertices outside `H`, if uniform.
    pub b_observed: Option<usize>,
    pub violations: Vec<VertexViolation>,
    pub degree: usize,
    /// `[[a, |S|−a], [b, |S|−b]]` from the observed counts, when both are uniform.
    pub quotient_matrix: Option<[[i64; 2]; 2]>,
    /// Integer eigenvalues of the quotient matrix, largest first.
    pub eigenvalues: Option<[i64; 2]>,
    pub second_eigenvalue: Option<i64>,
}

/// Rejects `S` containing the identity or not closed under inverses.
pub fn validate_connection_set(g: &GroupTable, s: &[ElementId]) -> Result<Vec<bool>> {
    let mut member = vec![false; g.order()];
    for &y in s {
        g.check_id(y)?;
        member[y] = true;
    }
    if member[IDENTITY] {
        return Err(Error::IdentityInS);
    }
    for &y in s {
        if !member[g.inv(y)] {
            return Err(Error::NotInverseClosed {
                element: y,
                inverse: g.inv(y),
            });
        }
    }
    Ok(member)
}

/// Number of neighbours in `H` for every vertex of `Cay(G, S)`.
fn neighbours_in_code(g: &GroupTable, member: &[bool], h: &Subgroup<'_>) -> Vec<usize> {
    (0..g.order())
        .into_par_iter()
        .map(|v| {
            let vi = g.inv(v);
            h.members().iter().filter(|&&w| member[g.mul(w, vi)]).count()
        })
        .collect()
}

fn uniform(values: impl Iterator<Item = usize>) -> Option<usize> {
    let mut it = values;
    let first = it.next()?;
    it.all(|v| v == first).then_some(first)
}

fn isqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    (r * r == n).then_some(r)
}

/// Integer roots of `λ² − tr·λ + det` for a 2×2 integer matrix, largest first.
pub fn integer_eigenvalues(m: [[i64; 2]; 2]) -> Option<[i64; 2]> {
    let tr = m[0][0] + m[1][1];
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let root = isqrt(tr * tr - 4 * det)?;
    if (tr + root) % 2 != 0 {
        return None;
    }
    Some([(tr + root) / 2, (tr - root) / 2])
}

pub fn check_regular_set(
    g: &GroupTable,
    s: &[ElementId],
    h: &Subgroup<'_>,
    a: usize,
    b: usize,
) -> Result<RegularSetReport> {
    let member = validate_connection_set(g, s)?;
    let degree = member.iter().filter(|&&m| m).count();
    let counts = neighbours_in_code(g, &member, h);

    let violations: Vec<VertexViolation> = g
        .elements()
        .filter_map(|v| {
            let in_code = h.contains(v);
            let expected = if in_code { a } else { b };
            (counts[v] != expected).then_some(VertexViolation {
                vertex: v,
                in_code,
                expected,
                observed: counts[v],
            })
        })
        .collect();
    let a_observed = uniform(g.elements().filter(|&v| h.contains(v)).map(|v| counts[v]));
    let b_observed = uniform(g.elements().filter(|&v| !h.contains(v)).map(|v| counts[v]));

    let quotient_matrix = a_observed.zip(b_observed).map(|(ao, bo)| {
        let k = degree as i64;
        let (ao, bo) = (ao as i64, bo as i64);
        [[ao, k - ao], [bo, k - bo]]
    });
    let eigenvalues = quotient_matrix.and_then(integer_eigenvalues);
    let second_eigenvalue = eigenvalues.map(|[hi, lo]| if hi == degree as i64 { lo } else { hi });

    Ok(RegularSetReport {
        ok: violations.is_empty(),
        a_observed,
        b_observed,
        violations,
        degree,
        quotient_matrix,
        eigenvalues,
        second_eigenvalue,
    })
}

/// First inverse-closed `S ⊆ G∖{1}` (in bitmask order over involutions and
/// inverse pairs) making `H` an `(a, b)`-regular set, if any.
pub fn exhaustive_regular_search(
    g: &GroupTable,
    h: &Subgroup<'_>,
    a: usize,
    b: usize,
    cap: usize,
) -> Result<Option<Vec<ElementId>>> {
    if g.order() > cap {
        return Err(Error::CapExceeded {
            cap,
            order: g.order(),
        });
    }
    let orbits: Vec<Vec<ElementId>> = g
        .elements()
        .filter(|&y| y != IDENTITY && y <= g.inv(y))
        .map(|y| if g.inv(y) == y { vec![y] } else { vec![y, g.inv(y)] })
        .collect();
    let target = a + b * (h.index() - 1);
    let mut member = vec![false; g.order()];
    for mask in 0u64..(1u64 << orbits.len()) {
        let size: usize = orbits
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, o)| o.len())
            .sum();
        if size != target {
            continue;
        }
        member.iter_mut().for_each(|m| *m = false);
        for (k, orbit) in orbits.iter().enumerate() {
            if mask >> k & 1 == 1 {
                for &y in orbit {
                    member[y] = true;
                }
            }
        }
        let hit = g.elements().all(|v| {
            let vi = g.inv(v);
            let count = h.members().iter().filter(|&&w| member[g.mul(w, vi)]).count();
            count == if h.contains(v) { a } else { b }
        });
        if hit {
            return Ok(Some(g.elements().filter(|&y| member[y]).collect()));
        }
    }
    Ok(None)
}
