// Shifting one entry of `λ` by the lcm of the others, and how normality
// transfers across the shift.
//
// ```bash
// cargo run --example congruence
// ```

use monomial_normality::{congruence_reduce, is_normal_lambda, LambdaSpec};

pub fn run_example() -> monomial_normality::Result<()> {
    for text in ["2,3,7", "2,3,5", "3,4,13"] {
        let spec: LambdaSpec = text.parse()?;
        for index in 0..spec.dim() {
            let c = congruence_reduce(&spec, index)?;
            println!(
                "({spec}) entry {}: ℓ = {}, λ′ = ({}), {}; normal {} / {}",
                index + 1,
                c.ell,
                c.lambda_prime,
                c.relation.as_str(),
                is_normal_lambda(&spec, false)?.normal,
                is_normal_lambda(&c.lambda_prime, false)?.normal
            );
        }
    }
    Ok(())
}

fn main() -> monomial_normality::Result<()> {
    run_example()
}
