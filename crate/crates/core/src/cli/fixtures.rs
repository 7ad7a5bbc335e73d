//! `--seed-fixtures`: freezes brute-force reference answers into JSON so
//! the test suite can compare the production routes against them.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{CliError, CliResult};
use crate::ilambda::LambdaSpec;
use crate::lattice::{ExponentVector, MonomialIdeal};
use crate::monoid::{default_bound, FractionalMonoid};
use crate::oracle;

pub const FIXTURE_FILE: &str = "oracle_fixtures.json";

/// Power bound used by the closure oracle.
pub const ORACLE_MAX_POWER: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureFixture {
    pub ideal: MonomialIdeal,
    pub closure: Vec<ExponentVector>,
    pub max_power: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFixture {
    pub p: u32,
    pub alpha: ExponentVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowFixture {
    pub s: u64,
    pub p: u64,
    pub bound: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaFixture {
    pub lambda: LambdaSpec,
    pub lcm: u64,
    pub omega: Vec<u64>,
    /// Members of `⟨ω⟩` in `[0, L + 1]`.
    pub coin_members: Vec<u64>,
    pub almost_qn: bool,
    pub bounded_witness: Option<WitnessFixture>,
    pub window_failure: Option<WindowFixture>,
    /// Largest non-member of `⟨ω⟩`, if any.
    pub frobenius: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleFixtures {
    pub closures: Vec<ClosureFixture>,
    pub lambdas: Vec<LambdaFixture>,
}

const CLOSURE_CASES: &[&str] = &[
    "2,0;0,2",
    "1,0",
    "3,0;0,3",
    "2,0;1,1;0,2",
    "4,0;0,3",
    "3,1;0,4;4,0",
    "2,0,0;0,3,0;0,0,4",
    "2,0,0;0,2,0;0,0,2",
];

const LAMBDA_CASES: &[&[u64]] = &[&[2, 3], &[2, 2], &[1, 1], &[2, 3, 5], &[2, 3, 7], &[2, 2, 2], &[3, 4, 5]];

pub fn closure_fixture(ideal: &MonomialIdeal) -> ClosureFixture {
    ClosureFixture {
        ideal: ideal.clone(),
        closure: oracle::closure(ideal, ORACLE_MAX_POWER),
        max_power: ORACLE_MAX_POWER,
    }
}

pub fn lambda_fixture(spec: &LambdaSpec) -> crate::Result<LambdaFixture> {
    let l = spec.lcm();
    let members = oracle::semigroup_elements(spec.omega(), l + 1);
    let mut coin_members: Vec<u64> = members.iter().copied().collect();
    coin_members.sort_unstable();
    let bound = default_bound(&FractionalMonoid::new(spec.clone()))?;
    let min = *spec.omega().iter().min().expect("n ≥ 1");
    let max = *spec.omega().iter().max().expect("n ≥ 1");
    let horizon = min.saturating_mul(max) + min;
    Ok(LambdaFixture {
        lambda: spec.clone(),
        lcm: l,
        omega: spec.omega().to_vec(),
        almost_qn: members.contains(&(l + 1)),
        coin_members,
        bounded_witness: oracle::bounded_witness(spec).map(|(p, alpha)| WitnessFixture { p, alpha }),
        window_failure: oracle::quasinormal_failure(spec, bound).map(|(s, p)| WindowFixture { s, p, bound }),
        frobenius: oracle::frobenius(spec.omega(), horizon),
    })
}

pub fn build_fixtures() -> crate::Result<OracleFixtures> {
    let closures = CLOSURE_CASES
        .iter()
        .map(|s| s.parse().map(|i| closure_fixture(&i)))
        .collect::<crate::Result<Vec<_>>>()?;
    let lambdas = LAMBDA_CASES
        .iter()
        .map(|l| LambdaSpec::new(l.to_vec()).and_then(|s| lambda_fixture(&s)))
        .collect::<crate::Result<Vec<_>>>()?;
    Ok(OracleFixtures { closures, lambdas })
}

pub fn seed_fixtures(dir: &Path) -> CliResult<Vec<PathBuf>> {
    let fixtures = build_fixtures()?;
    fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    let path = dir.join(FIXTURE_FILE);
    let mut text = serde_json::to_string_pretty(&fixtures).expect("serializable");
    text.push('\n');
    fs::write(&path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Ok(vec![path])
}

pub fn load_fixtures(path: &Path) -> CliResult<OracleFixtures> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}
