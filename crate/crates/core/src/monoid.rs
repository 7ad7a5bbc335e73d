//! The fractional monoid `Λ = ⟨1/λ₁, …, 1/λₙ⟩ ⊆ ℚ≥`.
//!
//! Everything is computed after scaling by `L`: `x ∈ Λ` corresponds to
//! `s = L·x ∈ M = ⟨ω₁, …, ωₙ⟩ ⊆ ℕ`, and `x ≥ 1` to `s ≥ L`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ilambda::{is_normal_lambda, LambdaSpec};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FractionalMonoid {
    spec: LambdaSpec,
}

impl FractionalMonoid {
    pub fn new(spec: LambdaSpec) -> Self {
        Self { spec }
    }

    pub fn spec(&self) -> &LambdaSpec {
        &self.spec
    }

    pub fn generators(&self) -> &[u64] {
        self.spec.omega()
    }
}

/// Membership table of `⟨gens⟩` over `0..=bound`.
pub fn coin_table(gens: &[u64], bound: u64) -> Result<Vec<bool>> {
    let len = usize::try_from(bound)
        .ok()
        .and_then(|b| b.checked_add(1))
        .ok_or(Error::Overflow("membership table size"))?;
    let mut table = vec![false; len];
    table[0] = true;
    for s in 1..len {
        table[s] = gens
            .iter()
            .any(|&w| w as usize <= s && w > 0 && table[s - w as usize]);
    }
    Ok(table)
}

/// Whether `s` is a nonnegative integer combination of `ω₁, …, ωₙ`.
pub fn in_m(mon: &FractionalMonoid, s: u64) -> Result<bool> {
    Ok(coin_table(mon.generators(), s)?[s as usize])
}

/// `1 + 1/L ∈ Λ`, i.e. `L + 1 ∈ ⟨ω⟩`.
pub fn almost_quasinormal(mon: &FractionalMonoid) -> Result<bool> {
    let l = mon.spec.lcm().checked_add(1).ok_or(Error::Overflow("L + 1"))?;
    in_m(mon, l)
}

/// Least `c` such that every multiple of `g = gcd(ω)` that is `≥ c` lies
/// in `M`. Always finite since `gcd(ω/g) = 1`.
pub fn conductor(mon: &FractionalMonoid) -> Result<u64> {
    let g = mon.spec.omega_gcd();
    let reduced: Vec<u64> = mon.generators().iter().map(|&w| w / g).collect();
    let min = *reduced.iter().min().expect("n ≥ 1");
    if min == 1 {
        return Ok(0);
    }
    let max = *reduced.iter().max().expect("n ≥ 1");
    // Frobenius number of coprime a₁ < … < a_k is at most (a₁−1)(a_k−1) − 1.
    let horizon = (min - 1)
        .checked_mul(max - 1)
        .and_then(|v| v.checked_add(min))
        .ok_or(Error::Overflow("conductor horizon"))?;
    let table = coin_table(&reduced, horizon)?;
    let last_gap = table.iter().rposition(|&m| !m).expect("1 ∉ M when min > 1") as u64;
    Ok((last_gap + 1) * g)
}

/// `max(4·n·L, 2·(L + conductor·g))`.
pub fn default_bound(mon: &FractionalMonoid) -> Result<u64> {
    let spec = &mon.spec;
    let l = spec.lcm();
    let c = conductor(mon)?;
    let a = (4 * spec.dim() as u64)
        .checked_mul(l)
        .ok_or(Error::Overflow("default bound"))?;
    let b = c
        .checked_mul(spec.omega_gcd())
        .and_then(|v| v.checked_add(l))
        .and_then(|v| v.checked_mul(2))
        .ok_or(Error::Overflow("default bound"))?;
    Ok(a.max(b))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum WindowVerdict {
    /// Every `s ∈ M ∩ [L, bound]` splits into `⌊s/L⌋` parts of `M`, each `≥ L`.
    QuasinormalOnWindow { bound: u64 },
    /// `s ∈ M`, `s ≥ pL`, with no split into `p` parts `≥ L`. Proves `Λ`
    /// is not quasinormal.
    Failure { s: u64, p: u64, bound: u64 },
    /// The window `[L, bound]` is empty.
    Vacuous { bound: u64 },
}

impl WindowVerdict {
    pub fn is_failure(&self) -> bool {
        matches!(self, Self::Failure { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Self::QuasinormalOnWindow { .. } => "quasinormal-on-window",
            Self::Failure { .. } => "failure",
            Self::Vacuous { .. } => "vacuous",
        }
    }
}

/// Windowed semi-decision of quasinormality of `Λ`.
///
/// Only the largest `p = ⌊s/L⌋` needs checking: two adjacent parts of a
/// `p`-part split merge into one, since `M` is additively closed and sums
/// of parts `≥ L` stay `≥ L`. The largest achievable part count comes from
/// a table over `0..=bound`.
pub fn quasinormal_window(mon: &FractionalMonoid, bound: u64) -> Result<WindowVerdict> {
    let l = mon.spec.lcm();
    if bound < l {
        return Ok(WindowVerdict::Vacuous { bound });
    }
    let member = coin_table(mon.generators(), bound)?;
    let len = member.len();
    let lu = l as usize;
    let parts: Vec<usize> = (lu..len).filter(|&t| member[t]).collect();
    // max_parts[s]: most parts (each in M and ≥ L) summing to s; -1 if none.
    let mut max_parts = vec![-1i64; len];
    max_parts[0] = 0;
    for s in lu..len {
        let mut best = -1i64;
        for &t in &parts {
            if t > s {
                break;
            }
            let rest = max_parts[s - t];
            if rest >= 0 && rest + 1 > best {
                best = rest + 1;
            }
        }
        max_parts[s] = best;
    }
    for s in lu..len {
        if !member[s] {
            continue;
        }
        let p = (s / lu) as i64;
        if max_parts[s] < p {
            return Ok(WindowVerdict::Failure {
                s: s as u64,
                p: p as u64,
                bound,
            });
        }
    }
    Ok(WindowVerdict::QuasinormalOnWindow { bound })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuasinormalStatus {
    /// Established through normality of `I(λ)` with pairwise coprime `λ`.
    Quasinormal,
    /// A window failure was found.
    NotQuasinormal,
    QuasinormalOnWindow,
    Vacuous,
}

/// Combines the window check with the theorem-grade route available for
/// pairwise coprime `λ`, where quasinormality of `Λ` and normality of
/// `I(λ)` coincide.
pub fn quasinormal_status(mon: &FractionalMonoid, bound: u64) -> Result<(QuasinormalStatus, WindowVerdict)> {
    let window = quasinormal_window(mon, bound)?;
    let status = match &window {
        WindowVerdict::Failure { .. } => QuasinormalStatus::NotQuasinormal,
        WindowVerdict::Vacuous { .. } => QuasinormalStatus::Vacuous,
        WindowVerdict::QuasinormalOnWindow { .. } => {
            if mon.spec.pairwise_coprime() && is_normal_lambda(&mon.spec, false)?.normal {
                QuasinormalStatus::Quasinormal
            } else {
                QuasinormalStatus::QuasinormalOnWindow
            }
        }
    };
    Ok((status, window))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mon(s: &str) -> FractionalMonoid {
        FractionalMonoid::new(s.parse().unwrap())
    }

    #[test]
    fn membership_examples() {
        let m = mon("2,3");
        assert!(in_m(&m, 7).unwrap());
        assert!(in_m(&m, 0).unwrap());
        assert!(!in_m(&m, 1).unwrap());
        assert!(in_m(&mon("2,3,7"), 0).unwrap());
    }

    #[test]
    fn almost_quasinormal_examples() {
        assert!(almost_quasinormal(&mon("2,3")).unwrap());
        assert!(almost_quasinormal(&mon("2,2")).unwrap());
        assert!(!almost_quasinormal(&mon("2,3,7")).unwrap());
    }

    #[test]
    fn conductor_examples() {
        assert_eq!(conductor(&mon("2,3")).unwrap(), 2);
        assert_eq!(conductor(&mon("2,2")).unwrap(), 0);
        assert_eq!(conductor(&mon("1,1")).unwrap(), 0);
        // ⟨21,14,6⟩: independent scan far past the horizon
        let c = conductor(&mon("2,3,7")).unwrap();
        let t = coin_table(&[21, 14, 6], 2000).unwrap();
        let last_gap = t.iter().rposition(|&m| !m).unwrap() as u64;
        assert_eq!(c, last_gap + 1);
    }

    #[test]
    fn window_examples() {
        assert_eq!(
            quasinormal_window(&mon("2,2"), 20).unwrap(),
            WindowVerdict::QuasinormalOnWindow { bound: 20 }
        );
        assert_eq!(
            quasinormal_window(&mon("1,1"), 10).unwrap(),
            WindowVerdict::QuasinormalOnWindow { bound: 10 }
        );
        // 84 = 42 + 42 is the only two-part candidate up to 84; the first
        // failure is 85 = 21 + 14·2 + 6·6, which has no split 42 + 43.
        assert_eq!(
            quasinormal_window(&mon("2,3,7"), 84).unwrap(),
            WindowVerdict::QuasinormalOnWindow { bound: 84 }
        );
        assert_eq!(
            quasinormal_window(&mon("2,3,7"), 85).unwrap(),
            WindowVerdict::Failure { s: 85, p: 2, bound: 85 }
        );
        assert_eq!(
            quasinormal_window(&mon("2,3,7"), 41).unwrap(),
            WindowVerdict::Vacuous { bound: 41 }
        );
    }

    #[test]
    fn json_shape() {
        let v = WindowVerdict::Failure { s: 1, p: 2, bound: 3 };
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"verdict":"failure","s":1,"p":2,"bound":3}"#
        );
    }
}
