// The Rees semigroup `S(I(λ))`: its facet form, height-one primes, Serre's
// R₁ and the facet group check.
//
// ```bash
// cargo run --example rees_semigroup
// ```

use monomial_normality::rees::primes_json;
use monomial_normality::{build_semigroup, grp_facet_check, r1_satisfied, LambdaSpec};

pub fn run_example() -> monomial_normality::Result<()> {
    for text in ["2,3,5", "2,3,7"] {
        let spec: LambdaSpec = text.parse()?;
        let s = build_semigroup(&spec)?;
        let r1 = r1_satisfied(&spec)?;
        println!(
            "λ = ({spec}): {} semigroup generators, {} on the σ facet",
            s.generators().len(),
            s.facet_generators().len()
        );
        match &r1.witness {
            Some(g) => println!("  R1 holds: generator {g} has σ-value 1"),
            None => println!("  R1 fails: no generator has σ-value 1"),
        }
        println!("  facet group check at radius 3: {}", grp_facet_check(&s, 3)?);
    }
    let s = build_semigroup(&"2,3".parse()?)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&primes_json(&s)).expect("primes serialize")
    );
    Ok(())
}

fn main() -> monomial_normality::Result<()> {
    run_example()
}
