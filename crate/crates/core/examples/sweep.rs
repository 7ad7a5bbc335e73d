// A deterministic sweep over `λ ∈ [1, 4]³`, printed as CSV.
//
// ```bash
// cargo run --example sweep
// ```

use monomial_normality::cli::{cmd_sweep, SweepOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let opts = SweepOptions {
        n: 3,
        max_lambda: 4,
        bound: None,
        force_enumeration: false,
        workers: Some(2),
    };
    let csv = cmd_sweep(&opts)?;
    print!("{csv}");
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
