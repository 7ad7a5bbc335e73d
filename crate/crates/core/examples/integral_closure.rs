// Integral closure of monomial ideals through their Newton polyhedra.
//
// ```bash
// cargo run --example integral_closure
// ```

use monomial_normality::{integral_closure, is_integrally_closed, MonomialIdeal};

pub fn run_example() -> monomial_normality::Result<()> {
    for text in ["2,0;0,2", "3,0;0,3", "4,0;0,3", "2,0,0;0,3,0;0,0,7"] {
        let ideal: MonomialIdeal = text.parse()?;
        let closure = integral_closure(&ideal)?;
        let verdict = is_integrally_closed(&ideal)?;
        println!("I = ({ideal})");
        println!("  closure   = ({closure})");
        match verdict.witness {
            Some(w) => println!("  not closed, {w} lies in the closure but not in I"),
            None => println!("  integrally closed"),
        }
    }
    Ok(())
}

fn main() -> monomial_normality::Result<()> {
    run_example()
}
