// Normality of a monomial ideal by checking its first `n − 1` powers.
//
// ```bash
// cargo run --example normality_by_powers
// ```

use monomial_normality::{integral_closure, is_normal, power, MonomialIdeal};

pub fn run_example() -> monomial_normality::Result<()> {
    // (ideal, whether to replace it by its integral closure first)
    let cases = [
        ("2,0;0,2", false),
        ("2,0;0,2", true),
        ("2,0,0;0,3,0;0,0,5", true),
        ("2,0,0;0,3,0;0,0,7", true),
    ];
    for (text, close) in cases {
        let mut ideal: MonomialIdeal = text.parse()?;
        if close {
            ideal = integral_closure(&ideal)?;
        }
        let verdict = is_normal(&ideal)?;
        print!("({ideal}): ");
        match verdict.failing_power {
            None => println!("normal (powers 1..={} closed)", verdict.checked_powers),
            Some(m) => {
                let gens = power(&ideal, m)?.generators().len();
                println!(
                    "not normal, power {m} ({gens} generators) misses {}",
                    verdict.witness.expect("failure carries a witness")
                );
            }
        }
    }
    Ok(())
}

fn main() -> monomial_normality::Result<()> {
    run_example()
}
