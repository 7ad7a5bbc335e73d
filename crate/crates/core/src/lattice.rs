//! Exponent vectors, the componentwise order and monomial ideals as
//! antichains of minimal generators.
//!
//! Text encoding: a vector is comma-separated decimals (`2,0,1`), an ideal
//! is semicolon-separated vectors (`2,0;1,1;0,2`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The exponent `α` of a monomial `x^α`, a point of `ℕⁿ`.
///
/// The derived `Ord` is lexicographic and is the enumeration order used
/// everywhere output must be reproducible.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u64>);

impl ExponentVector {
    pub fn new(coords: Vec<u64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyVector);
        }
        Ok(Self(coords))
    }

    pub fn zero(dim: usize) -> Self {
        assert!(dim > 0, "dimension must be positive");
        Self(vec![0; dim])
    }

    /// The unit vector `e_i` (0-based index).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = 1;
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u64> {
        self.0
    }

    pub fn degree(&self) -> u128 {
        self.0.iter().map(|&c| c as u128).sum()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_dims(self, other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("vector sum")))
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    /// `self - other` if `other ≤_pr self`.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if self.dim() != other.dim() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }

    pub fn checked_scale(&self, k: u64) -> Result<Self> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow("vector scaling")))
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    /// Integer dot product with a weight vector, widened to avoid overflow.
    pub fn weighted(&self, weights: &[u64]) -> u128 {
        debug_assert_eq!(self.dim(), weights.len());
        self.0
            .iter()
            .zip(weights)
            .map(|(&a, &w)| a as u128 * w as u128)
            .sum()
    }
}

impl From<ExponentVector> for Vec<u64> {
    fn from(v: ExponentVector) -> Self {
        v.0
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for ExponentVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<u64>()
                    .map_err(|_| Error::Parse(format!("not a nonnegative integer: {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(coords)
    }
}

impl Serialize for ExponentVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExponentVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn check_dims(a: &ExponentVector, b: &ExponentVector) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(())
}

/// Componentwise order: `a ≤_pr b` iff `aᵢ ≤ bᵢ` for every `i`.
pub fn le_pr(a: &ExponentVector, b: &ExponentVector) -> Result<bool> {
    check_dims(a, b)?;
    Ok(le_pr_unchecked(a, b))
}

#[inline]
pub(crate) fn le_pr_unchecked(a: &ExponentVector, b: &ExponentVector) -> bool {
    a.0.iter().zip(&b.0).all(|(x, y)| x <= y)
}

/// The `≤_pr`-minimal elements of `points`, sorted in descending
/// lexicographic order. An empty input gives an empty output.
///
/// Panics if the points do not share a dimension; use
/// [`MonomialIdeal::new`] for checked construction.
pub fn minimalize<I>(points: I) -> Vec<ExponentVector>
where
    I: IntoIterator<Item = ExponentVector>,
{
    let mut pts: Vec<ExponentVector> = points.into_iter().collect();
    if let Some(first) = pts.first() {
        let d = first.dim();
        assert!(
            pts.iter().all(|p| p.dim() == d),
            "minimalize: mixed dimensions"
        );
    }
    // A strict dominator has strictly larger degree, so scanning by degree
    // only ever compares against already accepted minima.
    pts.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    pts.dedup();
    let mut kept: Vec<ExponentVector> = Vec::new();
    for p in pts {
        if !kept.iter().any(|k| le_pr_unchecked(k, &p)) {
            kept.push(p);
        }
    }
    kept.sort_unstable_by(|a, b| b.cmp(a));
    kept
}

/// A nonzero monomial ideal, stored as its minimal generators.
///
/// `Γ(I)` is the up-closure of the generators in `ℕⁿ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, discarding redundant generators.
    pub fn new<I>(gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        let gens: Vec<ExponentVector> = gens.into_iter().collect();
        let first = gens.first().ok_or(Error::ZeroIdeal)?;
        let dim = first.dim();
        for g in &gens {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.dim(),
                });
            }
        }
        Ok(Self {
            dim,
            gens: minimalize(gens),
        })
    }

    /// The unit ideal `(1)` in `n` variables.
    pub fn unit(dim: usize) -> Self {
        Self {
            dim,
            gens: vec![ExponentVector::zero(dim)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Minimal generators in descending lexicographic order.
    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn contains(&self, a: &ExponentVector) -> Result<bool> {
        contains_monomial(self, a)
    }

    /// Componentwise maximum of the generators.
    pub fn corner(&self) -> ExponentVector {
        let mut m = vec![0u64; self.dim];
        for g in &self.gens {
            for (mj, gj) in m.iter_mut().zip(g.coords()) {
                *mj = (*mj).max(*gj);
            }
        }
        ExponentVector(m)
    }

    /// `Γ(self) ⊆ Γ(other)`, i.e. every generator of `self` lies in `other`.
    pub fn is_subideal_of(&self, other: &MonomialIdeal) -> Result<bool> {
        for g in &self.gens {
            if !contains_monomial(other, g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for MonomialIdeal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        let gens = s
            .split(';')
            .filter(|t| !t.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<ExponentVector>>>()?;
        Self::new(gens)
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `x^a ∈ I` iff some generator divides it.
pub fn contains_monomial(ideal: &MonomialIdeal, a: &ExponentVector) -> Result<bool> {
    if a.dim() != ideal.dim {
        return Err(Error::DimensionMismatch {
            expected: ideal.dim,
            found: a.dim(),
        });
    }
    Ok(ideal.gens.iter().any(|g| le_pr_unchecked(g, a)))
}

/// Lexicographic walk over the box `0 ≤ α ≤_pr bounds`.
#[derive(Debug, Clone)]
pub struct BoxIter {
    bounds: Vec<u64>,
    next: Option<Vec<u64>>,
}

impl BoxIter {
    pub fn new(bounds: &ExponentVector) -> Self {
        Self {
            bounds: bounds.coords().to_vec(),
            next: Some(vec![0; bounds.dim()]),
        }
    }
}

impl Iterator for BoxIter {
    type Item = ExponentVector;

    fn next(&mut self) -> Option<ExponentVector> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if succ[i] < self.bounds[i] {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(ExponentVector(cur))
    }
}

/// Every point of the box `0 ≤ α ≤_pr bounds` satisfying `predicate`, in
/// lexicographic order.
pub fn box_enumerate<'a, P>(
    bounds: &ExponentVector,
    mut predicate: P,
) -> impl Iterator<Item = ExponentVector> + 'a
where
    P: FnMut(&ExponentVector) -> bool + 'a,
{
    BoxIter::new(bounds).filter(move |a| predicate(a))
}

/// Number of points in the box `0 ≤ α ≤_pr bounds`.
pub fn box_size(bounds: &ExponentVector) -> Result<usize> {
    bounds.coords().iter().try_fold(1usize, |acc, &b| {
        usize::try_from(b)
            .ok()
            .and_then(|b| b.checked_add(1))
            .and_then(|b| acc.checked_mul(b))
            .ok_or(Error::Overflow("box size"))
    })
}

/// Dense membership table over a box, indexed in lexicographic order.
#[derive(Debug, Clone)]
pub(crate) struct BoxTable {
    bounds: Vec<u64>,
    strides: Vec<usize>,
    cells: Vec<bool>,
}

impl BoxTable {
    pub(crate) fn new(bounds: &ExponentVector) -> Result<Self> {
        let n = bounds.dim();
        let mut strides = vec![1usize; n];
        for i in (0..n.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1]
                .checked_mul(bounds.coords()[i + 1] as usize + 1)
                .ok_or(Error::Overflow("box size"))?;
        }
        let size = box_size(bounds)?;
        Ok(Self {
            bounds: bounds.coords().to_vec(),
            strides,
            cells: vec![false; size],
        })
    }

    pub(crate) fn len(&self) -> usize {
        self.cells.len()
    }

    pub(crate) fn point(&self, mut idx: usize) -> ExponentVector {
        let mut c = vec![0u64; self.bounds.len()];
        for (ci, s) in c.iter_mut().zip(&self.strides) {
            *ci = (idx / s) as u64;
            idx %= s;
        }
        ExponentVector(c)
    }

    #[cfg(test)]
    pub(crate) fn index(&self, a: &ExponentVector) -> Option<usize> {
        let mut idx = 0usize;
        for ((&ai, &bi), s) in a.coords().iter().zip(&self.bounds).zip(&self.strides) {
            if ai > bi {
                return None;
            }
            idx += ai as usize * s;
        }
        Some(idx)
    }

    /// Whether some `α − eⱼ` of the cell at `idx` is set.
    pub(crate) fn lower_neighbour_set(&self, idx: usize) -> bool {
        let mut rest = idx;
        self.strides.iter().any(|&s| {
            let c = rest / s;
            rest %= s;
            c > 0 && self.cells[idx - s]
        })
    }

    pub(crate) fn set(&mut self, idx: usize, v: bool) {
        self.cells[idx] = v;
    }

    /// Minimal elements of an up-closed table: set cells none of whose
    /// lower neighbours `α − e_j` are set.
    pub(crate) fn minimal_elements(&self) -> Vec<ExponentVector> {
        let mut out = Vec::new();
        for idx in 0..self.cells.len() {
            if !self.cells[idx] {
                continue;
            }
            let p = self.point(idx);
            let minimal = p
                .coords()
                .iter()
                .zip(&self.strides)
                .all(|(&c, &s)| c == 0 || !self.cells[idx - s]);
            if minimal {
                out.push(p);
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(s: &str) -> ExponentVector {
        s.parse().unwrap()
    }

    #[test]
    fn le_pr_examples() {
        assert!(le_pr(&ev("1,1"), &ev("2,1")).unwrap());
        assert!(!le_pr(&ev("2,0"), &ev("0,2")).unwrap());
        assert!(le_pr(&ev("3,5"), &ev("3,5")).unwrap());
        assert!(matches!(
            le_pr(&ev("1,1"), &ev("1,1,1")),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn minimalize_examples() {
        let out = minimalize(["2,0", "1,1", "2,1", "0,2"].map(ev));
        assert_eq!(out, ["2,0", "1,1", "0,2"].map(ev).to_vec());
        assert_eq!(minimalize([ev("1,0")]), vec![ev("1,0")]);
        assert_eq!(minimalize(["0,0", "5,5"].map(ev)), vec![ev("0,0")]);
        assert!(minimalize(Vec::<ExponentVector>::new()).is_empty());
    }

    #[test]
    fn contains_examples() {
        let i: MonomialIdeal = "2,0;0,2".parse().unwrap();
        assert!(contains_monomial(&i, &ev("3,5")).unwrap());
        assert!(!contains_monomial(&i, &ev("1,1")).unwrap());
        let unit = MonomialIdeal::unit(3);
        assert!(contains_monomial(&unit, &ev("0,0,0")).unwrap());
        assert!(contains_monomial(&unit, &ev("4,1,7")).unwrap());
        assert!(contains_monomial(&i, &ev("1,1,1")).is_err());
    }

    #[test]
    fn box_examples() {
        let all: Vec<_> = box_enumerate(&ev("1,1"), |_| true).collect();
        assert_eq!(all, ["0,0", "0,1", "1,0", "1,1"].map(ev).to_vec());
        let sum2 = box_enumerate(&ev("2,2"), |a| a.degree() >= 2).count();
        // exhaustive count: of the 9 points only (0,0),(0,1),(1,0) fail
        let oracle = (0..=2u64)
            .flat_map(|x| (0..=2u64).map(move |y| x + y))
            .filter(|&s| s >= 2)
            .count();
        assert_eq!(sum2, oracle);
        assert_eq!(sum2, 6);
        let origin: Vec<_> = box_enumerate(&ev("0,0,0"), |_| true).collect();
        assert_eq!(origin, vec![ev("0,0,0")]);
    }

    #[test]
    fn zero_ideal_rejected() {
        assert_eq!(MonomialIdeal::new(vec![]), Err(Error::ZeroIdeal));
        assert_eq!("".parse::<MonomialIdeal>(), Err(Error::ZeroIdeal));
        assert!(ExponentVector::new(vec![]).is_err());
        assert!("1,x".parse::<ExponentVector>().is_err());
        assert!(MonomialIdeal::new(vec![ev("1,0"), ev("1")]).is_err());
    }

    #[test]
    fn text_encoding() {
        let i: MonomialIdeal = "0,2; 1,1 ;2,0".parse().unwrap();
        assert_eq!(i.to_string(), "2,0;1,1;0,2");
        assert_eq!(i.corner(), ev("2,2"));
    }

    #[test]
    fn box_table_minima() {
        let i: MonomialIdeal = "2,0;1,1;0,2".parse().unwrap();
        let mut t = BoxTable::new(&ev("3,3")).unwrap();
        for idx in 0..t.len() {
            let p = t.point(idx);
            assert_eq!(t.index(&p), Some(idx));
            t.set(idx, i.contains(&p).unwrap());
        }
        assert_eq!(t.minimal_elements(), i.generators().to_vec());
    }
}
