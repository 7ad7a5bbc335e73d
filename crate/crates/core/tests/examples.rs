//! Every runnable example is compiled in here and executed once.

macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(integral_closure, "integral_closure.rs");
example!(membership_certificates, "membership_certificates.rs");
example!(normality_by_powers, "normality_by_powers.rs");
example!(ilambda_normality, "ilambda_normality.rs");
example!(fractional_monoid, "fractional_monoid.rs");
example!(rees_semigroup, "rees_semigroup.rs");
example!(congruence, "congruence.rs");
example!(sweep, "sweep.rs");
example!(caratheodory, "caratheodory.rs");

#[test]
fn integral_closure_example_runs() {
    integral_closure::run_example().unwrap();
}

#[test]
fn membership_certificates_example_runs() {
    membership_certificates::run_example().unwrap();
}

#[test]
fn normality_by_powers_example_runs() {
    normality_by_powers::run_example().unwrap();
}

#[test]
fn ilambda_normality_example_runs() {
    ilambda_normality::run_example().unwrap();
}

#[test]
fn fractional_monoid_example_runs() {
    fractional_monoid::run_example().unwrap();
}

#[test]
fn rees_semigroup_example_runs() {
    rees_semigroup::run_example().unwrap();
}

#[test]
fn congruence_example_runs() {
    congruence::run_example().unwrap();
}

#[test]
fn sweep_example_runs() {
    sweep::run_example().unwrap();
}

#[test]
fn caratheodory_example_runs() {
    caratheodory::run_example().unwrap();
}
