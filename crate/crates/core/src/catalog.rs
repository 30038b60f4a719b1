//! Named groups built from standard permutation generators.
//!
//! | name                   | degree | generators                                   |
//! |------------------------|--------|----------------------------------------------|
//! | `cyclic:n` (n ≥ 2)     | n      | `i ↦ i+1`                                    |
//! | `dihedral:2n` (n ≥ 3)  | n      | rotation `i ↦ i+1`, reflection `i ↦ -i`      |
//! | `dihedral:4`           | 4      | `(0 1)(2 3)`, `(0 2)(1 3)`                   |
//! | `symmetric:n` (n ≥ 2)  | n      | `i ↦ i+1`, `(0 1)`                           |
//! | `alternating:n` (n ≥ 3)| n      | `(0 1 i)` for `2 ≤ i < n`                    |
//! | `quaternion:8`         | 8      | right-regular action of `i` and `j`          |
//! | `elementary-abelian:p^k` | p·k  | one p-cycle per block of p points            |
//!
//! Direct products join factors with `*` (or `×`), e.g. `cyclic:2*cyclic:4`;
//! factor generators act on disjoint point blocks in factor order.

use crate::error::{Error, Result};
use crate::group::{GroupTable, Permutation};

pub fn catalog(name: &str) -> Result<GroupTable> {
    let (degree, gens) = catalog_generators(name)?;
    Ok(GroupTable::from_permutation_generators(degree, &gens)?.with_name(name))
}

/// Degree and generators behind a catalog name.
pub fn catalog_generators(name: &str) -> Result<(usize, Vec<Permutation>)> {
    let factors: Vec<&str> = name.split(['*', '×']).map(str::trim).collect();
    if factors.len() == 1 {
        return factor_generators(factors[0], name);
    }
    let parts = factors
        .iter()
        .map(|f| factor_generators(f, name))
        .collect::<Result<Vec<_>>>()?;
    let degree: usize = parts.iter().map(|(d, _)| d).sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for (d, fgens) in parts {
        gens.extend(fgens.iter().map(|g| g.shifted(offset, degree)));
        offset += d;
    }
    Ok((degree, gens))
}

fn factor_generators(factor: &str, full: &str) -> Result<(usize, Vec<Permutation>)> {
    let unknown = || Error::UnknownCatalogName { name: full.to_string() };
    let (family, param) = factor.split_once(':').ok_or_else(unknown)?;
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| unknown());
    match family.trim() {
        "cyclic" => {
            let n = num(param)?;
            if n < 2 {
                return Err(unknown());
            }
            Ok((n, vec![rotation(n)]))
        }
        "dihedral" => {
            let order = num(param)?;
            if order < 4 || order % 2 != 0 {
                return Err(unknown());
            }
            let n = order / 2;
            if n == 2 {
                let a = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]])?;
                let b = Permutation::from_cycles(4, &[&[0, 2], &[1, 3]])?;
                return Ok((4, vec![a, b]));
            }
            let reflection = Permutation::new((0..n).map(|i| (n - i) % n).collect())?;
            Ok((n, vec![rotation(n), reflection]))
        }
        "symmetric" => {
            let n = num(param)?;
            if n < 2 {
                return Err(unknown());
            }
            let swap = Permutation::from_cycles(n, &[&[0, 1]])?;
            if n == 2 {
                return Ok((2, vec![swap]));
            }
            Ok((n, vec![rotation(n), swap]))
        }
        "alternating" => {
            let n = num(param)?;
            if n < 3 {
                return Err(unknown());
            }
            let gens = (2..n)
                .map(|i| Permutation::from_cycles(n, &[&[0, 1, i]]))
                .collect::<Result<Vec<_>>>()?;
            Ok((n, gens))
        }
        "quaternion" => {
            if num(param)? != 8 {
                return Err(unknown());
            }
            Ok((8, quaternion_generators()))
        }
        "elementary-abelian" => {
            let (p, k) = param.split_once('^').ok_or_else(unknown)?;
            let (p, k) = (num(p)?, num(k)?);
            if !is_prime(p) || k == 0 {
                return Err(unknown());
            }
            let degree = p * k;
            let cycle = rotation(p);
            Ok((degree, (0..k).map(|b| cycle.shifted(b * p, degree)).collect()))
        }
        _ => Err(unknown()),
    }
}

fn rotation(n: usize) -> Permutation {
    Permutation::new((0..n).map(|i| (i + 1) % n).collect()).expect("rotation is a bijection")
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

// Units 1, i, j, k as 0..4; element id = 4·sign + unit.
fn quaternion_mul(a: usize, b: usize) -> usize {
    // (sign, unit) of unit products, rows = left factor.
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let (sa, ua) = (a / 4, a % 4);
    let (sb, ub) = (b / 4, b % 4);
    let (s, u) = UNIT[ua][ub];
    4 * ((sa + sb + s) % 2) + u
}

fn quaternion_generators() -> Vec<Permutation> {
    [1usize, 2]
        .iter()
        .map(|&g| {
            Permutation::new((0..8).map(|x| quaternion_mul(x, g)).collect())
                .expect("right multiplication is a bijection")
        })
        .collect()
}
