// The ideals `I(λ)`: generators, bounded decompositions and the normality
// verdict with a reproducible witness.
//
// ```bash
// cargo run --example ilambda_normality
// ```

use monomial_normality::{decompose, ilambda_generators, is_normal_lambda, LambdaSpec};

pub fn run_example() -> monomial_normality::Result<()> {
    for text in ["2,3", "2,3,5", "2,2,2", "2,3,7", "3,4,5"] {
        let spec: LambdaSpec = text.parse()?;
        let gens = ilambda_generators(&spec)?;
        let verdict = is_normal_lambda(&spec, false)?;
        println!(
            "λ = ({spec}): L = {}, ω = {:?}, {} generators, normal = {} [{}]",
            spec.lcm(),
            spec.omega(),
            gens.generators().len(),
            verdict.normal,
            verdict.method.as_str()
        );
        if let Some(w) = verdict.witness {
            println!("  witness {w}: weight {} ≥ {}·L but no split", spec.weight(&w.alpha), w.p);
        }
    }

    let spec: LambdaSpec = "2,3,5".parse()?;
    let alpha = "1,2,4".parse()?;
    if let Some(parts) = decompose(&spec, &alpha, 2)? {
        let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
        println!("(1,2,4) = {} in Γ(I(2,3,5))", parts.join(" + "));
    }
    Ok(())
}

fn main() -> monomial_normality::Result<()> {
    run_example()
}
