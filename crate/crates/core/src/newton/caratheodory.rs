//! Carathéodory reduction of a convex combination to an affinely
//! independent support.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rational::RationalPoint;
use crate::error::{Error, Result};

/// Shrinks the support of the convex combination `Σ wᵢ·pᵢ` until the
/// remaining points are affinely independent, keeping the combination
/// point unchanged.
///
/// Each round takes an affine dependence `Σ cᵢ·pᵢ = 0, Σ cᵢ = 0`, picks the
/// index maximising `cᵢ/wᵢ` over `cᵢ > 0` (lowest index on ties), and
/// substitutes that point away: `wᵢ ← wᵢ − w_* · cᵢ / c_*`.
pub fn caratheodory_reduce(
    points: &[RationalPoint],
    weights: &[BigRational],
) -> Result<(Vec<RationalPoint>, Vec<BigRational>)> {
    if points.len() != weights.len() {
        return Err(Error::Contract(format!(
            "{} points but {} weights",
            points.len(),
            weights.len()
        )));
    }
    if points.is_empty() {
        return Err(Error::Contract("empty convex combination".into()));
    }
    let dim = points[0].dim();
    if points.iter().any(|p| p.dim() != dim) {
        return Err(Error::Contract("points of mixed dimension".into()));
    }
    if weights.iter().any(Signed::is_negative) {
        return Err(Error::Contract("negative convex weight".into()));
    }
    if weights.iter().sum::<BigRational>() != BigRational::one() {
        return Err(Error::Contract("weights do not sum to 1".into()));
    }

    let mut pts: Vec<RationalPoint> = Vec::new();
    let mut ws: Vec<BigRational> = Vec::new();
    for (p, w) in points.iter().zip(weights) {
        if w.is_positive() {
            pts.push(p.clone());
            ws.push(w.clone());
        }
    }

    while let Some(c) = affine_dependence(&pts) {
        let mut star: Option<(usize, BigRational)> = None;
        for (i, (ci, wi)) in c.iter().zip(&ws).enumerate() {
            if !ci.is_positive() {
                continue;
            }
            let ratio = ci / wi;
            if star.as_ref().is_none_or(|(_, r)| ratio > *r) {
                star = Some((i, ratio));
            }
        }
        let (s, _) = star.expect("a nonzero dependence with zero sum has a positive entry");
        let factor = &ws[s] / &c[s];
        let mut next_pts = Vec::with_capacity(pts.len() - 1);
        let mut next_ws = Vec::with_capacity(pts.len() - 1);
        for (i, (p, w)) in pts.iter().zip(&ws).enumerate() {
            if i == s {
                continue;
            }
            let nw = w - &factor * &c[i];
            debug_assert!(!nw.is_negative());
            if nw.is_positive() {
                next_pts.push(p.clone());
                next_ws.push(nw);
            }
        }
        pts = next_pts;
        ws = next_ws;
    }
    Ok((pts, ws))
}

/// A nonzero `c` with `Σ cᵢ·pᵢ = 0` and `Σ cᵢ = 0`, if one exists.
pub fn affine_dependence(points: &[RationalPoint]) -> Option<Vec<BigRational>> {
    let k = points.len();
    if k == 0 {
        return None;
    }
    let dim = points[0].dim();
    // Rows: the coordinates, then the all-ones row; columns: points.
    let mut m: Vec<Vec<BigRational>> = (0..dim)
        .map(|r| points.iter().map(|p| p.coords()[r].clone()).collect())
        .collect();
    m.push(vec![BigRational::one(); k]);
    kernel_vector(m, k)
}

/// Affine rank test: `true` iff no affine dependence exists.
pub fn affinely_independent(points: &[RationalPoint]) -> bool {
    affine_dependence(points).is_none()
}

fn kernel_vector(mut m: Vec<Vec<BigRational>>, ncols: usize) -> Option<Vec<BigRational>> {
    let nrows = m.len();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let pv = m[row][col].clone();
        for v in m[row].iter_mut() {
            *v /= &pv;
        }
        let prow = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r != row && !other[col].is_zero() {
                let f = other[col].clone();
                for (v, pv) in other.iter_mut().zip(&prow) {
                    *v -= &f * pv;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    let free = (0..ncols).find(|c| !pivot_cols.contains(c))?;
    let mut x = vec![BigRational::zero(); ncols];
    x[free] = BigRational::one();
    for (r, &pc) in pivot_cols.iter().enumerate() {
        x[pc] = -m[r][free].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::rational::parse_rational;

    fn pts(s: &[&str]) -> Vec<RationalPoint> {
        s.iter().map(|p| p.parse().unwrap()).collect()
    }

    fn ws(s: &[&str]) -> Vec<BigRational> {
        s.iter().map(|w| parse_rational(w).unwrap()).collect()
    }

    fn combo(p: &[RationalPoint], w: &[BigRational]) -> RationalPoint {
        p.iter()
            .zip(w)
            .fold(RationalPoint::zero(p[0].dim()), |acc, (pi, wi)| acc.add(&pi.scaled(wi)))
    }

    #[test]
    fn independent_input_unchanged() {
        let p = pts(&["2,0", "0,2"]);
        let w = ws(&["1/2", "1/2"]);
        let (rp, rw) = caratheodory_reduce(&p, &w).unwrap();
        assert_eq!(rp, p);
        assert_eq!(rw, w);
    }

    #[test]
    fn collinear_triple() {
        let p = pts(&["2,0", "0,2", "1,1"]);
        let w = ws(&["1/4", "1/4", "1/2"]);
        let (rp, rw) = caratheodory_reduce(&p, &w).unwrap();
        assert!(affinely_independent(&rp));
        assert_eq!(combo(&rp, &rw), "1,1".parse().unwrap());
        assert_eq!(rw.iter().sum::<BigRational>(), BigRational::one());
        assert!(rp.len() <= 2);
    }

    #[test]
    fn one_dimensional_four_points() {
        let p = pts(&["0", "1", "3", "4"]);
        let w = ws(&["1/4", "1/4", "1/4", "1/4"]);
        let (rp, rw) = caratheodory_reduce(&p, &w).unwrap();
        assert_eq!(rp.len(), 2);
        assert!(affinely_independent(&rp));
        assert_eq!(combo(&rp, &rw), "2".parse().unwrap());
    }

    #[test]
    fn contract_errors() {
        let p = pts(&["0", "1"]);
        assert!(caratheodory_reduce(&p, &ws(&["1"])).is_err());
        assert!(caratheodory_reduce(&p, &ws(&["1/2", "1/3"])).is_err());
        assert!(caratheodory_reduce(&p, &ws(&["3/2", "-1/2"])).is_err());
    }

    #[test]
    fn repeated_point_collapses() {
        let p = pts(&["1,2", "1,2"]);
        let (rp, rw) = caratheodory_reduce(&p, &ws(&["1/3", "2/3"])).unwrap();
        assert_eq!(rp, pts(&["1,2"]));
        assert_eq!(rw, ws(&["1"]));
    }
}
