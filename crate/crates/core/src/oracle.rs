//! Brute-force reference computations.
//!
//! These deliberately avoid the production code paths (no simplex, no
//! minimal-generator pruning, no part-count tables) and are only meant for
//! small instances: tests compare against them and `--seed-fixtures`
//! freezes their answers.

use std::collections::{HashMap, HashSet};

use crate::ilambda::LambdaSpec;
use crate::lattice::{minimalize, BoxIter, ExponentVector, MonomialIdeal};

/// `a ∈ Γ(I^m)`: some multiset of `m` generators sums to at most `a`.
pub fn in_power(gens: &[ExponentVector], a: &ExponentVector, m: u32) -> bool {
    // Multisets as nondecreasing index sequences; prune once the partial
    // sum leaves the box below `a`.
    fn go(gens: &[ExponentVector], room: &[u64], from: usize, m: u32) -> bool {
        if m == 0 {
            return true;
        }
        (from..gens.len()).any(|i| {
            let g = gens[i].coords();
            if g.iter().zip(room).any(|(x, r)| x > r) {
                return false;
            }
            let rest: Vec<u64> = room.iter().zip(g).map(|(r, x)| r - x).collect();
            go(gens, &rest, i, m - 1)
        })
    }
    go(gens, a.coords(), 0, m)
}

/// The least `m ≤ max_power` with `m·a ∈ Γ(I^m)`.
pub fn closure_power(ideal: &MonomialIdeal, a: &ExponentVector, max_power: u32) -> Option<u32> {
    (1..=max_power).find(|&m| {
        let ma = a.checked_scale(m as u64).expect("small instance");
        in_power(ideal.generators(), &ma, m)
    })
}

/// `minimalize{α ≤ M : ∃ m ≤ max_power, m·α ∈ Γ(I^m)}` with `M` the
/// componentwise maximum of the generators.
pub fn closure(ideal: &MonomialIdeal, max_power: u32) -> Vec<ExponentVector> {
    minimalize(BoxIter::new(&ideal.corner()).filter(|a| closure_power(ideal, a, max_power).is_some()))
}

/// `ω·a ≥ L`, computed without `LambdaSpec::weight`.
pub fn in_gamma(spec: &LambdaSpec, a: &ExponentVector) -> bool {
    let lhs: u128 = a
        .coords()
        .iter()
        .zip(spec.lambda())
        .map(|(&x, &lam)| x as u128 * (spec.lcm() / lam) as u128)
        .sum();
    lhs >= spec.lcm() as u128
}

/// `a ∈ pΓ` by trying every first part `β ≤ a` in `Γ`.
pub fn splits(spec: &LambdaSpec, a: &ExponentVector, p: u32) -> bool {
    fn go(
        spec: &LambdaSpec,
        a: &ExponentVector,
        p: u32,
        memo: &mut HashMap<(ExponentVector, u32), bool>,
    ) -> bool {
        if p == 1 {
            return in_gamma(spec, a);
        }
        if let Some(&v) = memo.get(&(a.clone(), p)) {
            return v;
        }
        let v = BoxIter::new(a)
            .filter(|b| in_gamma(spec, b))
            .any(|b| go(spec, &a.checked_sub(&b).expect("b ≤ a"), p - 1, memo));
        memo.insert((a.clone(), p), v);
        v
    }
    go(spec, a, p, &mut HashMap::new())
}

/// First `(p, α)` in `(p, lex α)` order with `1 ≤ p < n`, `αᵢ < λᵢ`,
/// `ω·α ≥ pL` and `α ∉ pΓ`.
pub fn bounded_witness(spec: &LambdaSpec) -> Option<(u32, ExponentVector)> {
    let n = spec.dim();
    let open: Vec<u64> = spec.lambda().iter().map(|&v| v - 1).collect();
    let open = ExponentVector::new(open).expect("n ≥ 1");
    for p in 1..n as u32 {
        for a in BoxIter::new(&open) {
            let scaled = spec.lcm() as u128 * p as u128;
            let w: u128 = a
                .coords()
                .iter()
                .zip(spec.omega())
                .map(|(&x, &o)| x as u128 * o as u128)
                .sum();
            if w >= scaled && !splits(spec, &a, p) {
                return Some((p, a));
            }
        }
    }
    None
}

/// All sums `Σ cᵢ·gensᵢ ≤ bound`, by breadth-first closure.
pub fn semigroup_elements(gens: &[u64], bound: u64) -> HashSet<u64> {
    let mut seen = HashSet::from([0u64]);
    let mut frontier = vec![0u64];
    while let Some(s) = frontier.pop() {
        for &g in gens {
            let t = s + g;
            if g > 0 && t <= bound && seen.insert(t) {
                frontier.push(t);
            }
        }
    }
    seen
}

/// First `s ∈ M ∩ [L, bound]` that cannot be written as exactly `⌊s/L⌋`
/// parts from `M`, each `≥ L`.
pub fn quasinormal_failure(spec: &LambdaSpec, bound: u64) -> Option<(u64, u64)> {
    let l = spec.lcm();
    let members = semigroup_elements(spec.omega(), bound);
    let mut parts: Vec<u64> = members.iter().copied().filter(|&t| t >= l).collect();
    parts.sort_unstable();
    fn exact(s: u64, p: u64, parts: &[u64], memo: &mut HashMap<(u64, u64), bool>) -> bool {
        if p == 0 {
            return s == 0;
        }
        if let Some(&v) = memo.get(&(s, p)) {
            return v;
        }
        let v = parts
            .iter()
            .take_while(|&&t| t <= s)
            .any(|&t| exact(s - t, p - 1, parts, memo));
        memo.insert((s, p), v);
        v
    }
    let mut memo = HashMap::new();
    let mut candidates: Vec<u64> = members.into_iter().filter(|&s| s >= l).collect();
    candidates.sort_unstable();
    candidates
        .into_iter()
        .find(|&s| !exact(s, s / l, &parts, &mut memo))
        .map(|s| (s, s / l))
}

/// Largest integer not in `⟨gens⟩`, scanning up to `horizon`; `None` if
/// every integer up to the horizon is a member.
pub fn frobenius(gens: &[u64], horizon: u64) -> Option<u64> {
    let members = semigroup_elements(gens, horizon);
    (0..=horizon).rev().find(|s| !members.contains(s))
}
