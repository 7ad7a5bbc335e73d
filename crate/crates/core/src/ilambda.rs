//! The ideals `J(λ) = (x₁^λ₁, …, xₙ^λₙ)` and `I(λ) = closure of J(λ)`.
//!
//! With `L = lcm(λ)` and `ωᵢ = L/λᵢ`, the exponent set of `I(λ)` is
//! `Γ = {α ∈ ℕⁿ : ω·α ≥ L}`. Normality of `I(λ)` reduces to splitting the
//! points `α` with `αᵢ < λᵢ` and `ω·α ≥ pL`, `1 ≤ p < n`, into `p` members
//! of `Γ`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{le_pr_unchecked, BoxIter, BoxTable, ExponentVector, MonomialIdeal};

/// A vector `λ` of positive integers with its derived data.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LambdaSpec {
    lambda: Vec<u64>,
    l: u64,
    omega: Vec<u64>,
    g: u64,
}

impl LambdaSpec {
    pub fn new(lambda: Vec<u64>) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::InvalidLambda("lambda must have at least one entry".into()));
        }
        if let Some(bad) = lambda.iter().find(|&&v| v == 0) {
            return Err(Error::InvalidLambda(format!("entries must be positive, got {bad}")));
        }
        let l = checked_lcm(&lambda)?;
        let omega: Vec<u64> = lambda.iter().map(|&v| l / v).collect();
        let g = omega.iter().fold(0u64, |acc, &w| acc.gcd(&w));
        Ok(Self { lambda, l, omega, g })
    }

    pub fn dim(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda(&self) -> &[u64] {
        &self.lambda
    }

    /// `L = lcm(λ₁, …, λₙ)`.
    pub fn lcm(&self) -> u64 {
        self.l
    }

    /// `ωᵢ = L / λᵢ`.
    pub fn omega(&self) -> &[u64] {
        &self.omega
    }

    /// `gcd(ω₁, …, ωₙ)`.
    pub fn omega_gcd(&self) -> u64 {
        self.g
    }

    pub fn lambda_gcd(&self) -> u64 {
        self.lambda.iter().fold(0u64, |acc, &v| acc.gcd(&v))
    }

    pub fn pairwise_coprime(&self) -> bool {
        let n = self.lambda.len();
        (0..n).all(|i| (i + 1..n).all(|j| self.lambda[i].gcd(&self.lambda[j]) == 1))
    }

    /// `ω·α` in widened arithmetic.
    pub fn weight(&self, a: &ExponentVector) -> u128 {
        a.weighted(&self.omega)
    }

    fn check_dim(&self, a: &ExponentVector) -> Result<()> {
        if a.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: a.dim(),
            });
        }
        Ok(())
    }
}

fn checked_lcm(values: &[u64]) -> Result<u64> {
    values.iter().try_fold(1u64, |acc, &v| {
        (acc / acc.gcd(&v))
            .checked_mul(v)
            .ok_or(Error::Overflow("lcm of lambda"))
    })
}

impl fmt::Display for LambdaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lambda.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for LambdaSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("not a positive integer: {:?}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }
}

impl Serialize for LambdaSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.lambda.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LambdaSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Self::new(Vec::<u64>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// `J(λ) = (x₁^λ₁, …, xₙ^λₙ)`.
pub fn j_ideal(spec: &LambdaSpec) -> MonomialIdeal {
    let n = spec.dim();
    let gens = (0..n).map(|i| {
        let mut c = vec![0u64; n];
        c[i] = spec.lambda[i];
        ExponentVector::new(c).expect("n ≥ 1")
    });
    MonomialIdeal::new(gens).expect("nonempty")
}

/// `ω·a ≥ L`.
pub fn in_gamma(spec: &LambdaSpec, a: &ExponentVector) -> Result<bool> {
    spec.check_dim(a)?;
    Ok(spec.weight(a) >= spec.l as u128)
}

/// Minimal generators of `I(λ)`, read off the box `0 ≤ α ≤ λ`.
pub fn ilambda_generators(spec: &LambdaSpec) -> Result<MonomialIdeal> {
    let bound = ExponentVector::new(spec.lambda.clone())?;
    let mut table = BoxTable::new(&bound)?;
    let l = spec.l as u128;
    for idx in 0..table.len() {
        let p = table.point(idx);
        table.set(idx, spec.weight(&p) >= l);
    }
    MonomialIdeal::new(table.minimal_elements())
}

/// Memoised search for splittings `a = β₁ + ⋯ + β_p` with every `βⱼ ∈ Γ`.
///
/// `a ∈ pΓ` iff some minimal generator `g ≤ a` of `I(λ)` leaves
/// `a − g ∈ (p−1)Γ`: any split can trade its first part for a minimal
/// generator below it, pushing the excess into the second part, since `Γ`
/// is closed under adding `ℕⁿ`.
#[derive(Debug)]
pub struct Decomposer<'a> {
    spec: &'a LambdaSpec,
    gens: Vec<ExponentVector>,
    memo: HashMap<(Vec<u64>, u32), Option<usize>>,
}

impl<'a> Decomposer<'a> {
    pub fn new(spec: &'a LambdaSpec) -> Result<Self> {
        let ideal = ilambda_generators(spec)?;
        Ok(Self::with_generators(spec, ideal.generators().to_vec()))
    }

    pub(crate) fn with_generators(spec: &'a LambdaSpec, gens: Vec<ExponentVector>) -> Self {
        Self {
            spec,
            gens,
            memo: HashMap::new(),
        }
    }

    pub fn decompose(&mut self, a: &ExponentVector, p: u32) -> Result<Option<Vec<ExponentVector>>> {
        self.spec.check_dim(a)?;
        if p == 0 {
            return Err(Error::Contract("decompose needs p ≥ 1".into()));
        }
        if !self.splits(a, p) {
            return Ok(None);
        }
        let mut parts = Vec::with_capacity(p as usize);
        let mut rest = a.clone();
        for q in (2..=p).rev() {
            let gi = self.memo[&(rest.coords().to_vec(), q)].expect("recorded split");
            let g = self.gens[gi].clone();
            rest = rest.checked_sub(&g).expect("g ≤ rest");
            parts.push(g);
        }
        parts.push(rest);
        Ok(Some(parts))
    }

    /// Whether `a ∈ pΓ`, recording the chosen generator for `p ≥ 2`.
    pub fn splits(&mut self, a: &ExponentVector, p: u32) -> bool {
        let l = self.spec.l as u128;
        if self.spec.weight(a) < p as u128 * l {
            return false;
        }
        if p == 1 {
            return true;
        }
        let key = (a.coords().to_vec(), p);
        if let Some(hit) = self.memo.get(&key) {
            return hit.is_some();
        }
        let mut found = None;
        for gi in 0..self.gens.len() {
            if !le_pr_unchecked(&self.gens[gi], a) {
                continue;
            }
            let rest = a.checked_sub(&self.gens[gi]).expect("g ≤ a");
            if self.splits(&rest, p - 1) {
                found = Some(gi);
                break;
            }
        }
        self.memo.insert(key, found);
        found.is_some()
    }
}

/// One-shot form of [`Decomposer::decompose`].
pub fn decompose(spec: &LambdaSpec, a: &ExponentVector, p: u32) -> Result<Option<Vec<ExponentVector>>> {
    Decomposer::new(spec)?.decompose(a, p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormalityMethod {
    /// `n ≤ 2`: integrally closed ideals in two variables are normal.
    DimensionAtMostTwo,
    /// `n ≥ 3` and `gcd(λ) > n − 2`.
    GcdFastPath,
    /// Exhaustive splitting over the open box `αᵢ < λᵢ`, `1 ≤ p < n`.
    BoundedDecomposition,
}

impl NormalityMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::DimensionAtMostTwo => "dimension-at-most-2",
            Self::GcdFastPath => "gcd-fast-path",
            Self::BoundedDecomposition => "bounded-decomposition",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NonNormalWitness {
    pub p: u32,
    pub alpha: ExponentVector,
}

impl fmt::Display for NonNormalWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={};alpha={}", self.p, self.alpha)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaVerdict {
    pub lambda: LambdaSpec,
    pub normal: bool,
    pub witness: Option<NonNormalWitness>,
    pub method: NormalityMethod,
}

/// Decides normality of `I(λ)`.
///
/// Unless `force_enumeration` is set, `n ≤ 2` and `gcd(λ) > n − 2` answer
/// immediately. Otherwise the first `(p, α)` in `(p, lex α)` order with
/// `αᵢ < λᵢ`, `ω·α ≥ pL` and `α ∉ pΓ` is reported.
pub fn is_normal_lambda(spec: &LambdaSpec, force_enumeration: bool) -> Result<LambdaVerdict> {
    let n = spec.dim();
    let verdict = |normal, witness, method| LambdaVerdict {
        lambda: spec.clone(),
        normal,
        witness,
        method,
    };
    if !force_enumeration {
        if n <= 2 {
            return Ok(verdict(true, None, NormalityMethod::DimensionAtMostTwo));
        }
        if spec.lambda_gcd() > (n as u64) - 2 {
            return Ok(verdict(true, None, NormalityMethod::GcdFastPath));
        }
    }
    let open_box = ExponentVector::new(spec.lambda.iter().map(|&v| v - 1).collect())?;
    let mut dec = Decomposer::new(spec)?;
    let l = spec.l as u128;
    // p = 1 always holds: ω·α ≥ L is membership in Γ.
    for p in 2..(n as u32) {
        for alpha in BoxIter::new(&open_box) {
            if spec.weight(&alpha) < p as u128 * l {
                continue;
            }
            if !dec.splits(&alpha, p) {
                return Ok(verdict(
                    false,
                    Some(NonNormalWitness { p, alpha }),
                    NormalityMethod::BoundedDecomposition,
                ));
            }
        }
    }
    Ok(verdict(true, None, NormalityMethod::BoundedDecomposition))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CongruenceRelation {
    /// `I(λ)` normal iff `I(λ′)` normal.
    Equivalent,
    /// Only `I(λ′)` normal implies `I(λ)` normal.
    ForwardOnly,
}

impl CongruenceRelation {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Equivalent => "equivalent",
            Self::ForwardOnly => "forward-only",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Congruence {
    pub lambda: LambdaSpec,
    /// 0-based index of the entry that was shifted.
    pub index: usize,
    /// `ℓ`, the lcm of the other entries.
    pub ell: u64,
    pub lambda_prime: LambdaSpec,
    pub relation: CongruenceRelation,
}

/// Replaces `λᵢ` by `λᵢ + ℓ` with `ℓ = lcm(λⱼ : j ≠ i)`. The two ideals are
/// equally normal when `λᵢ ≥ ℓ`; otherwise normality only transfers from
/// `λ′` to `λ`. `index` is 0-based.
pub fn congruence_reduce(spec: &LambdaSpec, index: usize) -> Result<Congruence> {
    if index >= spec.dim() {
        return Err(Error::Contract(format!(
            "index {} out of range for {} entries",
            index + 1,
            spec.dim()
        )));
    }
    let others: Vec<u64> = spec
        .lambda
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != index)
        .map(|(_, &v)| v)
        .collect();
    let ell = checked_lcm(&others)?;
    let mut shifted = spec.lambda.clone();
    shifted[index] = shifted[index]
        .checked_add(ell)
        .ok_or(Error::Overflow("shifted lambda"))?;
    let relation = if spec.lambda[index] >= ell {
        CongruenceRelation::Equivalent
    } else {
        CongruenceRelation::ForwardOnly
    };
    Ok(Congruence {
        lambda: spec.clone(),
        index,
        ell,
        lambda_prime: LambdaSpec::new(shifted)?,
        relation,
    })
}
