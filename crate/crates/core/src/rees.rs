//! The Rees semigroup `S(I(λ)) ⊆ ℕⁿ⁺¹`, its non-coordinate facet form
//! `σ(α, d) = ω·α − L·d`, the height-one monomial primes of `R[It]` and
//! condition R₁.
//!
//! `R[It] ≅ K[S]` with `S` generated by `(eᵢ, 0)` and `(βⱼ, 1)` for the
//! minimal generators `βⱼ` of `I(λ)`.

use std::collections::HashMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ilambda::{ilambda_generators, LambdaSpec};
use crate::lattice::{le_pr_unchecked, ExponentVector};
use crate::monoid::{almost_quasinormal, FractionalMonoid};

/// `σ(α, d) = ω·α − L·d`, with its primitive form `σ/scale`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaForm {
    /// `(ω₁, …, ωₙ, −L)`.
    pub coefficients: Vec<i128>,
    /// `gcd(ω, L)`.
    pub scale: u64,
    /// `coefficients / scale`.
    pub primitive: Vec<i128>,
}

impl SigmaForm {
    fn new(spec: &LambdaSpec) -> Self {
        let mut coefficients: Vec<i128> = spec.omega().iter().map(|&w| w as i128).collect();
        coefficients.push(-(spec.lcm() as i128));
        let scale = spec.omega_gcd().gcd(&spec.lcm());
        let primitive = coefficients.iter().map(|c| c / scale as i128).collect();
        Self {
            coefficients,
            scale,
            primitive,
        }
    }

    pub fn eval(&self, v: &[i64]) -> i128 {
        self.coefficients
            .iter()
            .zip(v)
            .map(|(c, &x)| c * x as i128)
            .sum()
    }

    pub fn eval_nat(&self, v: &ExponentVector) -> i128 {
        self.coefficients
            .iter()
            .zip(v.coords())
            .map(|(c, &x)| c * x as i128)
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesSemigroup {
    spec: LambdaSpec,
    ideal_generators: Vec<ExponentVector>,
    generators: Vec<ExponentVector>,
    sigma: SigmaForm,
}

impl ReesSemigroup {
    pub fn spec(&self) -> &LambdaSpec {
        &self.spec
    }

    /// `(e₁,0), …, (eₙ,0)` followed by `(βⱼ,1)` in the ideal's order.
    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    /// The minimal generators `βⱼ` of `I(λ)`.
    pub fn ideal_generators(&self) -> &[ExponentVector] {
        &self.ideal_generators
    }

    pub fn sigma(&self) -> &SigmaForm {
        &self.sigma
    }

    /// Generators `(β, 1)` of `S ∩ H_σ`, i.e. those with `ω·β = L`.
    pub fn facet_generators(&self) -> Vec<ExponentVector> {
        self.generators
            .iter()
            .filter(|g| self.sigma.eval_nat(g) == 0)
            .cloned()
            .collect()
    }
}

pub fn build_semigroup(spec: &LambdaSpec) -> Result<ReesSemigroup> {
    let n = spec.dim();
    let ideal = ilambda_generators(spec)?;
    let mut generators = Vec::with_capacity(n + ideal.generators().len());
    for i in 0..n {
        generators.push(ExponentVector::unit(n + 1, i));
    }
    for b in ideal.generators() {
        let mut c = b.coords().to_vec();
        c.push(1);
        generators.push(ExponentVector::new(c)?);
    }
    Ok(ReesSemigroup {
        spec: spec.clone(),
        ideal_generators: ideal.generators().to_vec(),
        generators,
        sigma: SigmaForm::new(spec),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PrimeLabel {
    /// `Pᵢ`, 1-based.
    Coordinate(usize),
    /// `P_{n+1}`, generated by the `x^β t`.
    Rees,
    Sigma,
}

/// A height-one monomial prime of `R[It]` as a listing of generators: ring
/// variables `xᵢ` (1-based) and monomials `x^β t` (by exponent `β`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialPrime {
    #[serde(skip)]
    pub label: PrimeLabel,
    pub ring_vars: Vec<usize>,
    pub t_generators: Vec<ExponentVector>,
}

impl MonomialPrime {
    pub fn name(&self, n: usize) -> String {
        match self.label {
            PrimeLabel::Coordinate(i) => format!("P_{i}"),
            PrimeLabel::Rees => format!("P_{}", n + 1),
            PrimeLabel::Sigma => "P_sigma".to_string(),
        }
    }
}

/// `Pᵢ = (xᵢ) + (x^β t : eᵢ ≤ β)`, `P_{n+1} = (x^β t)`,
/// `P_σ = (x₁, …, xₙ) + (x^β t : σ(β, 1) > 0)`.
pub fn height_one_primes(s: &ReesSemigroup) -> Vec<MonomialPrime> {
    let n = s.spec.dim();
    let betas = &s.ideal_generators;
    let mut out = Vec::with_capacity(n + 2);
    for i in 0..n {
        out.push(MonomialPrime {
            label: PrimeLabel::Coordinate(i + 1),
            ring_vars: vec![i + 1],
            t_generators: betas.iter().filter(|b| b.coords()[i] >= 1).cloned().collect(),
        });
    }
    out.push(MonomialPrime {
        label: PrimeLabel::Rees,
        ring_vars: vec![],
        t_generators: betas.clone(),
    });
    let l = s.spec.lcm() as u128;
    out.push(MonomialPrime {
        label: PrimeLabel::Sigma,
        ring_vars: (1..=n).collect(),
        t_generators: betas.iter().filter(|b| s.spec.weight(b) > l).cloned().collect(),
    });
    out
}

/// Primes as a JSON object keyed `P_1`, …, `P_{n+1}`, `P_sigma`.
pub fn primes_json(s: &ReesSemigroup) -> serde_json::Value {
    let n = s.spec.dim();
    let mut map = serde_json::Map::new();
    for p in height_one_primes(s) {
        map.insert(p.name(n), serde_json::to_value(&p).expect("serializable"));
    }
    serde_json::Value::Object(map)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct R1Verdict {
    pub lambda: LambdaSpec,
    pub r1: bool,
    /// A semigroup generator with `σ`-value 1.
    pub witness: Option<ExponentVector>,
    pub almost_quasinormal: bool,
}

/// `R[It]` satisfies R₁ iff some generator of `S` has `σ`-value 1. The
/// answer is cross-checked against the coin-problem test `L + 1 ∈ ⟨ω⟩`;
/// disagreement is reported as [`Error::Inconsistency`].
pub fn r1_satisfied(spec: &LambdaSpec) -> Result<R1Verdict> {
    let s = build_semigroup(spec)?;
    let witness = s
        .generators
        .iter()
        .find(|g| s.sigma.eval_nat(g) == 1)
        .cloned();
    let aqn = almost_quasinormal(&FractionalMonoid::new(spec.clone()))?;
    let r1 = witness.is_some();
    if r1 != aqn {
        return Err(Error::Inconsistency(format!(
            "lambda {spec}: sigma-value scan says r1={r1} but L+1 membership says {aqn}"
        )));
    }
    Ok(R1Verdict {
        lambda: spec.clone(),
        r1,
        witness,
        almost_quasinormal: aqn,
    })
}

/// An integer combination `Σ cₖ·hₖ` of generators `hₖ` of `S ∩ H_σ`.
pub type FacetCombination = Vec<(i64, ExponentVector)>;

/// Writes an integer point of `H_σ` as an integer combination of
/// generators of `S ∩ H_σ`: first subtract `qᵢ·(λᵢeᵢ, 1)` to bring every
/// coordinate into `[0, λᵢ)`, then split the remainder `(r, d)` into `d`
/// generators `(β, 1)` with `ω·β = L`.
pub fn express_on_facet(s: &ReesSemigroup, point: &[i64]) -> Result<Option<FacetCombination>> {
    let n = s.spec.dim();
    if point.len() != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            found: point.len(),
        });
    }
    if s.sigma.eval(point) != 0 {
        return Ok(None);
    }
    let mut combo: FacetCombination = Vec::new();
    let mut rest = Vec::with_capacity(n);
    let mut d = point[n];
    for i in 0..n {
        let lam = s.spec.lambda()[i] as i64;
        let (q, r) = (point[i].div_euclid(lam), point[i].rem_euclid(lam));
        rest.push(r as u64);
        d -= q;
        if q != 0 {
            let mut c = vec![0u64; n + 1];
            c[i] = lam as u64;
            c[n] = 1;
            combo.push((q, ExponentVector::new(c)?));
        }
    }
    if d < 0 {
        return Ok(None);
    }
    let face: Vec<ExponentVector> = s
        .facet_generators()
        .into_iter()
        .map(|g| ExponentVector::new(g.coords()[..n].to_vec()).expect("n ≥ 1"))
        .collect();
    let rest = ExponentVector::new(rest)?;
    let mut memo = HashMap::new();
    let Some(parts) = split_on_face(&face, &rest, d as u64, &mut memo) else {
        return Ok(None);
    };
    for b in parts {
        let mut c = b.into_coords();
        c.push(1);
        combo.push((1, ExponentVector::new(c)?));
    }
    Ok(Some(combo))
}

fn split_on_face(
    face: &[ExponentVector],
    r: &ExponentVector,
    d: u64,
    memo: &mut HashMap<(ExponentVector, u64), bool>,
) -> Option<Vec<ExponentVector>> {
    if d == 0 {
        return r.coords().iter().all(|&c| c == 0).then(Vec::new);
    }
    if memo.get(&(r.clone(), d)) == Some(&false) {
        return None;
    }
    for b in face {
        if !le_pr_unchecked(b, r) {
            continue;
        }
        let rest = r.checked_sub(b).expect("b ≤ r");
        if let Some(mut parts) = split_on_face(face, &rest, d - 1, memo) {
            parts.push(b.clone());
            return Some(parts);
        }
    }
    memo.insert((r.clone(), d), false);
    None
}

/// Verifies `grp(S ∩ H_σ) = grp(S) ∩ H_σ` on every integer point of `H_σ`
/// with all coordinates in `[−radius, radius]`: each must be expressed by
/// [`express_on_facet`] and the combination must reproduce it exactly.
pub fn grp_facet_check(s: &ReesSemigroup, radius: u32) -> Result<bool> {
    let n = s.spec.dim();
    let r = radius as i64;
    let width = (2 * r + 1) as usize;
    let total = width
        .checked_pow((n + 1) as u32)
        .ok_or(Error::Overflow("sample count"))?;
    let mut point = vec![0i64; n + 1];
    for mut idx in 0..total {
        for c in point.iter_mut().rev() {
            *c = (idx % width) as i64 - r;
            idx /= width;
        }
        if s.sigma.eval(&point) != 0 {
            continue;
        }
        let Some(combo) = express_on_facet(s, &point)? else {
            return Ok(false);
        };
        let mut sum = vec![0i64; n + 1];
        for (c, g) in &combo {
            if s.sigma.eval_nat(g) != 0 || !s.generators.contains(g) {
                return Ok(false);
            }
            for (acc, &x) in sum.iter_mut().zip(g.coords()) {
                *acc += c * x as i64;
            }
        }
        if sum != point {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> LambdaSpec {
        s.parse().unwrap()
    }

    fn gens(s: &ReesSemigroup) -> Vec<String> {
        s.generators().iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn semigroup_examples() {
        let s = build_semigroup(&spec("2,2")).unwrap();
        assert_eq!(gens(&s), ["1,0,0", "0,1,0", "2,0,1", "1,1,1", "0,2,1"]);
        assert_eq!(s.sigma().coefficients, vec![1, 1, -2]);

        let s = build_semigroup(&spec("1,3")).unwrap();
        let g = "1,0,1".parse().unwrap();
        assert!(s.generators().contains(&g));
        assert_eq!(s.sigma().eval_nat(&g), 0);

        let s = build_semigroup(&spec("2,3")).unwrap();
        let values: Vec<i128> = ["2,0,1", "1,2,1", "0,3,1"]
            .iter()
            .map(|g| s.sigma().eval_nat(&g.parse().unwrap()))
            .collect();
        assert_eq!(values, vec![0, 1, 0]);
        assert_eq!(s.sigma().scale, 1);
    }

    #[test]
    fn prime_examples() {
        let s = build_semigroup(&spec("2,2")).unwrap();
        let primes = height_one_primes(&s);
        let t = |p: &MonomialPrime| p.t_generators.iter().map(|g| g.to_string()).collect::<Vec<_>>();
        assert_eq!(primes[0].ring_vars, vec![1]);
        assert_eq!(t(&primes[0]), ["2,0", "1,1"]);
        assert_eq!(t(&primes[2]), ["2,0", "1,1", "0,2"]);
        assert_eq!(primes[3].ring_vars, vec![1, 2]);
        assert!(primes[3].t_generators.is_empty());
        let js = primes_json(&s);
        assert_eq!(
            js["P_sigma"],
            serde_json::json!({"ring_vars": [1, 2], "t_generators": []})
        );

        let s = build_semigroup(&spec("2,3")).unwrap();
        assert_eq!(t(&height_one_primes(&s)[3]), ["1,2"]);

        let s = build_semigroup(&spec("4")).unwrap();
        let primes = height_one_primes(&s);
        assert_eq!(primes.len(), 3);
        // eᵢ ≤ β holds for β = (4), so x⁴t belongs to P₁ as well
        assert_eq!(primes[0].ring_vars, vec![1]);
        assert_eq!(t(&primes[0]), ["4"]);
        assert_eq!(t(&primes[1]), ["4"]);
        assert_eq!(primes[2].ring_vars, vec![1]);
        assert!(primes[2].t_generators.is_empty());
    }

    #[test]
    fn r1_examples() {
        let v = r1_satisfied(&spec("2,3,5")).unwrap();
        assert!(v.r1);
        assert_eq!(v.witness.unwrap().to_string(), "1,1,1,1");
        assert!(!r1_satisfied(&spec("2,3,7")).unwrap().r1);
        let v = r1_satisfied(&spec("1,1")).unwrap();
        assert!(v.r1);
        assert_eq!(v.witness.unwrap().to_string(), "1,0,0");
    }

    #[test]
    fn facet_examples() {
        let s = build_semigroup(&spec("2,2")).unwrap();
        assert!(grp_facet_check(&s, 3).unwrap());
        let combo = express_on_facet(&s, &[1, -1, 0]).unwrap().unwrap();
        let mut sum = vec![0i64; 3];
        for (c, g) in &combo {
            for (a, &x) in sum.iter_mut().zip(g.coords()) {
                *a += c * x as i64;
            }
        }
        assert_eq!(sum, vec![1, -1, 0]);
        assert!(grp_facet_check(&build_semigroup(&spec("2,3")).unwrap(), 3).unwrap());
        assert_eq!(express_on_facet(&s, &[0, 0, 0]).unwrap(), Some(vec![]));
        assert_eq!(express_on_facet(&s, &[1, 0, 0]).unwrap(), None);
    }
}
