// The monoid `⟨1/λ₁, …, 1/λₙ⟩`: membership, almost quasinormality and the
// windowed quasinormality check.
//
// ```bash
// cargo run --example fractional_monoid
// ```

use monomial_normality::monoid::{default_bound, quasinormal_status};
use monomial_normality::{almost_quasinormal, conductor, in_m, FractionalMonoid};

pub fn run_example() -> monomial_normality::Result<()> {
    for text in ["2,3", "2,3,5", "2,3,7", "3,4,5"] {
        let mon = FractionalMonoid::new(text.parse()?);
        let l = mon.spec().lcm();
        let bound = default_bound(&mon)?;
        let (status, window) = quasinormal_status(&mon, bound)?;
        println!(
            "λ = ({text}): M = ⟨{:?}⟩, conductor {}, L + 1 = {} ∈ M: {}",
            mon.generators(),
            conductor(&mon)?,
            l + 1,
            in_m(&mon, l + 1)?
        );
        println!(
            "  almost quasinormal {}, status {status:?}, window {}",
            almost_quasinormal(&mon)?,
            serde_json::to_string(&window).expect("verdict serializes")
        );
    }
    Ok(())
}

fn main() -> monomial_normality::Result<()> {
    run_example()
}
