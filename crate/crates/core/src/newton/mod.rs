//! Newton polyhedra of monomial ideals: certified membership, integral
//! closure, powers and the normality decision by powers.
//!
//! `Γ(Ī) = NP(I) ∩ ℕⁿ`, where `NP(I) = conv(generators) + ℝ≥ⁿ`. Membership
//! of a lattice point is an exact rational feasibility problem.

pub mod caratheodory;
pub mod certificate;
pub mod rational;
pub mod simplex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{le_pr_unchecked, minimalize, BoxIter, BoxTable, ExponentVector, MonomialIdeal};

pub use caratheodory::{affine_dependence, affinely_independent, caratheodory_reduce};
pub use certificate::{MembershipCertificate, WeightedGenerator};
pub use rational::RationalPoint;
use simplex::{feasibility, Feasibility};

/// `NP(I)` in V-representation: the generators of `I` plus the orthant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    ideal: MonomialIdeal,
}

impl NewtonPolyhedron {
    pub fn new(ideal: MonomialIdeal) -> Self {
        Self { ideal }
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn contains(&self, a: &ExponentVector) -> Result<MembershipCertificate> {
        np_contains(self, a)
    }
}

fn int(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Decides `a ∈ NP(I)` and returns a certificate for the verdict.
///
/// Solves `Σ cₖ·gₖ + r = a, Σ cₖ = 1, c, r ≥ 0` exactly. A feasible basis
/// yields the convex weights; infeasibility yields a separating weight
/// vector `w` normalised so that `min_g w·g = 1`.
pub fn np_contains(np: &NewtonPolyhedron, a: &ExponentVector) -> Result<MembershipCertificate> {
    let ideal = &np.ideal;
    let n = ideal.dim();
    if a.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: a.dim(),
        });
    }
    let gens = ideal.generators();

    if let Some(g) = gens.iter().find(|g| le_pr_unchecked(g, a)) {
        let slack = a.checked_sub(g).expect("g ≤ a");
        return Ok(MembershipCertificate::inside(
            a.clone(),
            vec![WeightedGenerator(g.clone(), BigRational::one())],
            RationalPoint::from(&slack),
        ));
    }

    let k = gens.len();
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(n + 1);
    for j in 0..n {
        let mut row: Vec<BigRational> = gens.iter().map(|g| int(g.coords()[j])).collect();
        row.extend((0..n).map(|s| if s == j { BigRational::one() } else { BigRational::zero() }));
        rows.push(row);
    }
    let mut sum_row = vec![BigRational::one(); k];
    sum_row.extend(std::iter::repeat_n(BigRational::zero(), n));
    rows.push(sum_row);
    let mut rhs: Vec<BigRational> = a.coords().iter().map(|&v| int(v)).collect();
    rhs.push(BigRational::one());

    let cert = match feasibility(&rows, &rhs)? {
        Feasibility::Feasible(x) => {
            let weights = gens
                .iter()
                .zip(&x[..k])
                .filter(|(_, c)| !c.is_zero())
                .map(|(g, c)| WeightedGenerator(g.clone(), c.clone()))
                .collect();
            MembershipCertificate::inside(a.clone(), weights, RationalPoint::new(x[k..].to_vec()))
        }
        Feasibility::Infeasible(z) => {
            let v = -z[n].clone();
            let w = RationalPoint::new(z[..n].iter().map(|u| u / &v).collect());
            let min = gens
                .iter()
                .map(|g| w.dot_int(g))
                .min()
                .expect("ideal has generators");
            MembershipCertificate::Outside {
                point: a.clone(),
                w: w.scaled(&(BigRational::one() / min)),
            }
        }
    };
    if !cert.verify(ideal)? {
        return Err(Error::Inconsistency(format!(
            "membership certificate for {a} failed verification"
        )));
    }
    Ok(cert)
}

/// Minimal generators of the integral closure `Ī`.
///
/// Minimal generators of `Ī` lie in the box below `M`, the componentwise
/// maximum of the generators of `I`: if `αⱼ > Mⱼ` and `α ∈ NP(I)`, every
/// certificate for `α` has slack at least 1 in coordinate `j`, so
/// `α − eⱼ ∈ NP(I)` too.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let table = closure_table(ideal)?;
    MonomialIdeal::new(table.minimal_elements())
}

/// Separating vectors found so far; any `w` with `w·α < 1` proves
/// `α ∉ NP(I)` without another LP.
#[derive(Default)]
struct Separators(Vec<RationalPoint>);

impl Separators {
    fn excludes(&self, a: &ExponentVector) -> bool {
        self.0.iter().any(|w| w.dot_int(a) < BigRational::one())
    }

    /// Membership of `a`, consulting and extending the cache.
    fn contains(&mut self, np: &NewtonPolyhedron, a: &ExponentVector) -> Result<bool> {
        if self.excludes(a) {
            return Ok(false);
        }
        match np_contains(np, a)? {
            MembershipCertificate::Inside { .. } => Ok(true),
            MembershipCertificate::Outside { w, .. } => {
                self.0.push(w);
                Ok(false)
            }
        }
    }
}

/// Fills the box below `M` in lexicographic order, so every lower
/// neighbour `α − eⱼ` is decided before `α`; `NP(I)` is up-closed, so a
/// set lower neighbour settles `α` without an LP.
fn closure_table(ideal: &MonomialIdeal) -> Result<BoxTable> {
    let bound = ideal.corner();
    let mut table = BoxTable::new(&bound)?;
    let np = NewtonPolyhedron::new(ideal.clone());
    let mut seps = Separators::default();
    for idx in 0..table.len() {
        let p = table.point(idx);
        let inside = table.lower_neighbour_set(idx)
            || ideal.generators().iter().any(|g| le_pr_unchecked(g, &p))
            || seps.contains(&np, &p)?;
        table.set(idx, inside);
    }
    Ok(table)
}

/// Minimal generators of `I^m`. `m = 0` gives the unit ideal.
pub fn power(ideal: &MonomialIdeal, m: u32) -> Result<MonomialIdeal> {
    if m == 0 {
        return Ok(MonomialIdeal::unit(ideal.dim()));
    }
    let mut acc = ideal.clone();
    for _ in 1..m {
        let mut sums = Vec::with_capacity(acc.generators().len() * ideal.generators().len());
        for a in acc.generators() {
            for g in ideal.generators() {
                sums.push(a.checked_add(g)?);
            }
        }
        acc = MonomialIdeal::new(minimalize(sums))?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosednessVerdict {
    pub integrally_closed: bool,
    /// Some `α ∈ Γ(Ī) ∖ Γ(I)` when not closed, chosen minimal in `Γ(Ī)`.
    pub witness: Option<ExponentVector>,
}

/// Decides `Ī = I` by testing only the box-maximal non-members of `I`:
/// points `α ≤ M` outside `I` with `α + eⱼ ∈ I` whenever `αⱼ < Mⱼ`. Walking
/// upward from a missing closure generator inside the box ends at such a
/// point, and it lies in `Ī` because `Ī` is up-closed. A witness found
/// there is then lowered coordinate by coordinate while it stays in `Ī`.
pub fn is_integrally_closed(ideal: &MonomialIdeal) -> Result<ClosednessVerdict> {
    let bound = ideal.corner();
    let np = NewtonPolyhedron::new(ideal.clone());
    let mut seps = Separators::default();
    let in_ideal = |a: &ExponentVector| ideal.generators().iter().any(|g| le_pr_unchecked(g, a));
    let mut found = None;
    for a in BoxIter::new(&bound) {
        if in_ideal(&a) {
            continue;
        }
        let maximal = (0..a.dim()).all(|j| {
            a.coords()[j] == bound.coords()[j] || in_ideal(&a.checked_add(&ExponentVector::unit(a.dim(), j)).expect("small"))
        });
        if maximal && seps.contains(&np, &a)? {
            found = Some(a);
            break;
        }
    }
    let Some(mut witness) = found else {
        return Ok(ClosednessVerdict {
            integrally_closed: true,
            witness: None,
        });
    };
    'lower: loop {
        for j in 0..witness.dim() {
            if let Some(b) = witness.checked_sub(&ExponentVector::unit(witness.dim(), j)) {
                if seps.contains(&np, &b)? {
                    witness = b;
                    continue 'lower;
                }
            }
        }
        break;
    }
    Ok(ClosednessVerdict {
        integrally_closed: false,
        witness: Some(witness),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerNormality {
    pub normal: bool,
    /// Powers checked, `1..=max(1, n − 1)`, up to the first failure.
    pub checked_powers: u32,
    pub failing_power: Option<u32>,
    pub witness: Option<ExponentVector>,
}

/// Normality by powers: if `I^m` is integrally closed for
/// `m = 1, …, n − 1` then every power is.
pub fn is_normal(ideal: &MonomialIdeal) -> Result<PowerNormality> {
    let top = (ideal.dim() as u32).saturating_sub(1).max(1);
    for m in 1..=top {
        let verdict = is_integrally_closed(&power(ideal, m)?)?;
        if !verdict.integrally_closed {
            return Ok(PowerNormality {
                normal: false,
                checked_powers: m,
                failing_power: Some(m),
                witness: verdict.witness,
            });
        }
    }
    Ok(PowerNormality {
        normal: true,
        checked_powers: top,
        failing_power: None,
        witness: None,
    })
}

/// Integral closure of `I^m`.
pub fn power_closure(ideal: &MonomialIdeal, m: u32) -> Result<MonomialIdeal> {
    integral_closure(&power(ideal, m)?)
}
