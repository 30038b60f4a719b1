//! Deciding whether a subgroup is a perfect code.
//!
//! `H` is a perfect code of `G` exactly when every self-paired block
//! (`HxH = Hx⁻¹H`) with an odd number `t` of right cosets has an involution
//! in `Hx`. An independent backtracking search for an inverse-closed right
//! transversal serves as the oracle.

use serde::Serialize;

use crate::cosets::Subgroup;
use crate::error::{Error, Result};
use crate::group::{ElementId, IDENTITY};

pub const DEFAULT_ORACLE_CAP: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvolutionWitness {
    pub rep: ElementId,
    pub involution: ElementId,
}

/// A self-paired block with odd `t` and no involution in `Hx`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rep: ElementId,
    pub m: usize,
    pub t: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerfectCodeVerdict {
    pub is_perfect_code: bool,
    /// One involution per self-paired odd-`t` block; set iff the verdict is true.
    pub witnesses: Option<Vec<InvolutionWitness>>,
    /// First failing block; set iff the verdict is false.
    pub violation: Option<Violation>,
}

pub fn is_perfect_code(h: &Subgroup<'_>) -> Result<PerfectCodeVerdict> {
    let decomposition = h.class_decomposition()?;
    let mut witnesses = Vec::new();
    for block in decomposition.blocks.iter().filter(|b| b.self_paired && b.t % 2 == 1) {
        match h.involutions_in_coset(block.rep_x).first() {
            Some(&y) => witnesses.push(InvolutionWitness {
                rep: block.rep_x,
                involution: y,
            }),
            None => {
                return Ok(PerfectCodeVerdict {
                    is_perfect_code: false,
                    witnesses: None,
                    violation: Some(Violation {
                        rep: block.rep_x,
                        m: block.m,
                        t: block.t,
                    }),
                })
            }
        }
    }
    Ok(PerfectCodeVerdict {
        is_perfect_code: true,
        witnesses: Some(witnesses),
        violation: None,
    })
}

/// Backtracking search for an inverse-closed right transversal of `H` in `G`.
///
/// Cosets are filled in minimal-id order and candidates tried in increasing id.
/// Picking `w` in `Hy` also fixes `w⁻¹` in its own coset; a coset paired with
/// itself only accepts involutions (or the identity, for `H`).
pub fn oracle_inverse_closed_transversal(
    h: &Subgroup<'_>,
    cap: usize,
) -> Result<Option<Vec<ElementId>>> {
    let g = h.group();
    if g.order() > cap {
        return Err(Error::OracleCapExceeded {
            cap,
            order: g.order(),
        });
    }
    let reps = h.coset_reps();
    let slot_of = |y: ElementId| reps.binary_search(&h.coset_rep(y)).expect("coset rep listed");
    let candidates: Vec<Vec<ElementId>> = reps.iter().map(|&r| h.right_coset(r)).collect();
    let mut choice: Vec<Option<ElementId>> = vec![None; reps.len()];
    choice[slot_of(IDENTITY)] = Some(IDENTITY);

    fn search(
        slot: usize,
        choice: &mut Vec<Option<ElementId>>,
        candidates: &[Vec<ElementId>],
        inv: &dyn Fn(ElementId) -> ElementId,
        slot_of: &dyn Fn(ElementId) -> usize,
    ) -> bool {
        let Some(slot) = (slot..choice.len()).find(|&s| choice[s].is_none()) else {
            return true;
        };
        for &w in &candidates[slot] {
            let wi = inv(w);
            let partner = slot_of(wi);
            if partner == slot {
                if wi != w {
                    continue;
                }
                choice[slot] = Some(w);
                if search(slot + 1, choice, candidates, inv, slot_of) {
                    return true;
                }
                choice[slot] = None;
            } else if choice[partner].is_none() {
                choice[slot] = Some(w);
                choice[partner] = Some(wi);
                if search(slot + 1, choice, candidates, inv, slot_of) {
                    return true;
                }
                choice[slot] = None;
                choice[partner] = None;
            }
        }
        false
    }

    let inv = |y: ElementId| g.inv(y);
    if search(0, &mut choice, &candidates, &inv, &slot_of) {
        let mut t: Vec<ElementId> = choice.into_iter().map(|c| c.expect("filled")).collect();
        t.sort_unstable();
        Ok(Some(t))
    } else {
        Ok(None)
    }
}
