// Reducing a rational convex combination to an affinely independent
// support without changing the point it represents.
//
// ```bash
// cargo run --example caratheodory
// ```

use monomial_normality::newton::affinely_independent;
use monomial_normality::{caratheodory_reduce, RationalPoint};
use num_rational::BigRational;

pub fn run_example() -> monomial_normality::Result<()> {
    let points: Vec<RationalPoint> = ["0,0", "2,0", "0,2", "2,2", "1,1"]
        .iter()
        .map(|s| s.parse())
        .collect::<monomial_normality::Result<_>>()?;
    let weights = vec![BigRational::new(1.into(), 5.into()); points.len()];
    let target = points
        .iter()
        .zip(&weights)
        .fold(RationalPoint::zero(2), |acc, (p, w)| acc.add(&p.scaled(w)));

    let (support, reduced) = caratheodory_reduce(&points, &weights)?;
    let rebuilt = support
        .iter()
        .zip(&reduced)
        .fold(RationalPoint::zero(2), |acc, (p, w)| acc.add(&p.scaled(w)));
    println!("target {target}");
    for (p, w) in support.iter().zip(&reduced) {
        println!("  {w} · ({p})");
    }
    println!(
        "rebuilt {rebuilt}, affinely independent: {}",
        affinely_independent(&support)
    );
    Ok(())
}

fn main() -> monomial_normality::Result<()> {
    run_example()
}
