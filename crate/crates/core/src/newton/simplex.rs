//! Exact phase-one simplex for `A x = b, x ≥ 0` over the rationals.
//!
//! Pivoting follows Bland's rule (lowest-index entering column, ties in the
//! ratio test broken by lowest basic variable index), so the method
//! terminates without cycling. When the system is infeasible the final
//! simplex multipliers give a Farkas vector `z` with `zᵀA ≥ 0` and
//! `zᵀb < 0`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// A basic feasible solution.
    Feasible(Vec<BigRational>),
    /// A Farkas certificate `z` with `zᵀA ≥ 0` and `zᵀb < 0`.
    Infeasible(Vec<BigRational>),
}

/// Decides feasibility of `A x = b, x ≥ 0`. `a` is row-major, one row per
/// equation.
pub fn feasibility(a: &[Vec<BigRational>], b: &[BigRational]) -> Result<Feasibility> {
    let m = a.len();
    if b.len() != m {
        return Err(Error::Contract(format!(
            "simplex: {m} rows but {} right-hand sides",
            b.len()
        )));
    }
    let nvars = a.first().map_or(0, Vec::len);
    if a.iter().any(|r| r.len() != nvars) {
        return Err(Error::Contract("simplex: ragged constraint matrix".into()));
    }

    // Columns: original variables, then one artificial per row, then rhs.
    let width = nvars + m + 1;
    let rhs = width - 1;
    let mut flipped = vec![false; m];
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        let neg = bi.is_negative();
        flipped[i] = neg;
        let mut t = Vec::with_capacity(width);
        t.extend(row.iter().map(|v| if neg { -v } else { v.clone() }));
        t.extend((0..m).map(|k| {
            if k == i {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        }));
        t.push(if neg { -bi } else { bi.clone() });
        tab.push(t);
    }
    let mut basis: Vec<usize> = (nvars..nvars + m).collect();

    // Reduced costs for minimising the sum of artificials; entry `rhs`
    // holds minus the current objective value.
    let mut cost = vec![BigRational::zero(); width];
    for k in 0..m {
        cost[nvars + k] = BigRational::one();
    }
    for row in &tab {
        for (c, v) in cost.iter_mut().zip(row) {
            *c -= v;
        }
    }
    // Artificial reduced costs start at 1 - 1 = 0; rhs entry is -Σb.

    while let Some(enter) = (0..rhs).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, row) in tab.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[rhs] / &row[enter];
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let Some((r, _)) = leave else {
            // Phase one is bounded below by zero, so an improving column
            // always has a positive entry.
            return Err(Error::Inconsistency(
                "phase-one simplex reported an unbounded direction".into(),
            ));
        };
        pivot(&mut tab, &mut cost, r, enter);
        basis[r] = enter;
    }

    let objective = -cost[rhs].clone();
    if objective.is_zero() {
        let mut x = vec![BigRational::zero(); nvars];
        for (i, &bv) in basis.iter().enumerate() {
            if bv < nvars {
                x[bv] = tab[i][rhs].clone();
            }
        }
        Ok(Feasibility::Feasible(x))
    } else {
        // Multiplier of row i is 1 - (reduced cost of artificial i); the
        // Farkas vector is its negation, undone for rows we flipped.
        let z = (0..m)
            .map(|i| {
                let y = BigRational::one() - &cost[nvars + i];
                if flipped[i] {
                    y
                } else {
                    -y
                }
            })
            .collect();
        Ok(Feasibility::Infeasible(z))
    }
}

fn pivot(tab: &mut [Vec<BigRational>], cost: &mut [BigRational], r: usize, c: usize) {
    let p = tab[r][c].clone();
    for v in tab[r].iter_mut() {
        *v /= &p;
    }
    let prow = tab[r].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (v, pv) in row.iter_mut().zip(&prow) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for (v, pv) in cost.iter_mut().zip(&prow) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| q(v, 1)).collect())
            .collect()
    }

    fn check_farkas(a: &[Vec<BigRational>], b: &[BigRational], z: &[BigRational]) {
        let ncols = a[0].len();
        for j in 0..ncols {
            let s: BigRational = (0..a.len()).map(|i| &z[i] * &a[i][j]).sum();
            assert!(!s.is_negative(), "column {j} has zᵀA < 0");
        }
        let zb: BigRational = z.iter().zip(b).map(|(x, y)| x * y).sum();
        assert!(zb.is_negative());
    }

    #[test]
    fn feasible_midpoint() {
        // x1*(2,0) + x2*(0,2) + r = (1,1), x1 + x2 = 1
        let a = mat(&[&[2, 0, 1, 0], &[0, 2, 0, 1], &[1, 1, 0, 0]]);
        let b = vec![q(1, 1), q(1, 1), q(1, 1)];
        match feasibility(&a, &b).unwrap() {
            Feasibility::Feasible(x) => {
                for (i, row) in a.iter().enumerate() {
                    let s: BigRational = row.iter().zip(&x).map(|(u, v)| u * v).sum();
                    assert_eq!(s, b[i]);
                }
                assert!(x.iter().all(|v| !v.is_negative()));
            }
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_gives_farkas() {
        let a = mat(&[&[2, 0, 1, 0], &[0, 2, 0, 1], &[1, 1, 0, 0]]);
        let b = vec![q(1, 1), q(0, 1), q(1, 1)];
        match feasibility(&a, &b).unwrap() {
            Feasibility::Infeasible(z) => check_farkas(&a, &b, &z),
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn negative_rhs_rows() {
        // -x = -3 feasible; x = -1 infeasible
        let a = mat(&[&[-1]]);
        assert_eq!(
            feasibility(&a, &[q(-3, 1)]).unwrap(),
            Feasibility::Feasible(vec![q(3, 1)])
        );
        let a = mat(&[&[1]]);
        match feasibility(&a, &[q(-1, 1)]).unwrap() {
            Feasibility::Infeasible(z) => check_farkas(&a, &[q(-1, 1)], &z),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn degenerate_redundant_rows() {
        // duplicated equation: x + y = 1 twice
        let a = mat(&[&[1, 1], &[1, 1]]);
        let b = vec![q(1, 1), q(1, 1)];
        assert!(matches!(
            feasibility(&a, &b).unwrap(),
            Feasibility::Feasible(_)
        ));
    }

    #[test]
    fn shape_errors() {
        let a = mat(&[&[1, 1], &[1]]);
        assert!(feasibility(&a, &[q(1, 1), q(1, 1)]).is_err());
        assert!(feasibility(&mat(&[&[1]]), &[]).is_err());
    }
}
