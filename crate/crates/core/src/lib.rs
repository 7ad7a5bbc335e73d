//! Exact integral closure and normality decisions for monomial ideals.
//!
//! The crate works entirely over the integers and rationals:
//!
//! - [`lattice`]: exponent vectors, the componentwise order, monomial ideals
//!   stored as antichains of minimal generators.
//! - [`newton`]: Newton polyhedron membership with verifiable certificates,
//!   Carathéodory reduction, integral closure, powers and normality by powers.
//! - [`ilambda`]: the ideals `I(λ)` = closure of `(x₁^λ₁, …, xₙ^λₙ)`, their
//!   bounded normality test and the congruence shift `λᵢ ↦ λᵢ + ℓ`.
//! - [`monoid`]: the monoid `Λ = ⟨1/λ₁, …, 1/λₙ⟩` via the coin problem for
//!   `⟨ω⟩`: almost quasinormality and a windowed quasinormality check.
//! - [`rees`]: the Rees semigroup `S(I(λ))`, its height-one monomial primes
//!   and condition R₁.
//! - [`oracle`]: brute-force reference checks used by tests and fixtures.
//! - [`cli`]: the command implementations behind the `normality` binary.

pub mod cli;
pub mod error;
pub mod ilambda;
pub mod lattice;
pub mod monoid;
pub mod newton;
pub mod oracle;
pub mod rees;

pub use error::{Error, Result};
pub use ilambda::{
    congruence_reduce, decompose, ilambda_generators, in_gamma, is_normal_lambda, j_ideal,
    Congruence, CongruenceRelation, LambdaSpec, LambdaVerdict, NonNormalWitness, NormalityMethod,
};
pub use lattice::{box_enumerate, contains_monomial, le_pr, minimalize, ExponentVector, MonomialIdeal};
pub use monoid::{
    almost_quasinormal, conductor, in_m, quasinormal_window, FractionalMonoid, WindowVerdict,
};
pub use newton::{
    caratheodory_reduce, integral_closure, is_integrally_closed, is_normal, np_contains, power,
    MembershipCertificate, NewtonPolyhedron, RationalPoint,
};
pub use rees::{build_semigroup, grp_facet_check, height_one_primes, r1_satisfied, ReesSemigroup};
