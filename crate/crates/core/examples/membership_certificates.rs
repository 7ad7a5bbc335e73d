// Exact membership certificates for the Newton polyhedron, serialized as
// JSON and re-verified independently of the solver.
//
// ```bash
// cargo run --example membership_certificates
// ```

use monomial_normality::{MonomialIdeal, NewtonPolyhedron};

pub fn run_example() -> monomial_normality::Result<()> {
    let ideal: MonomialIdeal = "4,0;0,3".parse()?;
    let np = NewtonPolyhedron::new(ideal.clone());
    for point in ["2,2", "3,1", "1,1", "0,5"] {
        let cert = np.contains(&point.parse()?)?;
        let json = serde_json::to_string(&cert).expect("certificate serializes");
        println!("{point}: {json}");
        if let Some(d) = cert.denominator() {
            println!("  denominator {d}: {d}·({point}) dominates a sum of {d} generators");
        }
        assert!(cert.verify(&ideal)?);
    }
    Ok(())
}

fn main() -> monomial_normality::Result<()> {
    run_example()
}
