//! Exact symbolic kernel for the two-parameter coloured quantum plane.
//!
//! The kernel implements, over an exact rational scalar type:
//!
//! * the coefficient ring ℚ[q^e, h, (q-1)^(-1)] with affine colour exponents
//!   and the singular limit q → 1 ([`coeff`]);
//! * the colour-tagged generator alphabet and noncommutative polynomials
//!   ([`algebra`]);
//! * oriented rewrite rules for every commutation relation of the coloured
//!   FRT algebra, quantum plane, hyperplane and differential calculus, with
//!   a terminating normalizer and a local-confluence (overlap) tester
//!   ([`rewrite`]);
//! * symbolic 4×4/8×8 matrices, Kronecker products, Yang-Baxter and RTT
//!   verification, and expansion of matrix-form relations into components
//!   ([`matrices`]);
//! * coalgebra maps, quantum determinant, antipode and coaction checks
//!   ([`hopf`]);
//! * the exterior differential with nilpotency and Leibniz checks
//!   ([`calculus`]);
//! * the g-transform contraction to the coloured h-plane and the hybrid
//!   (q,h)-plane ([`contraction`]);
//! * an expression grammar, JSON/LaTeX rendering and a named-check suite
//!   runner ([`parse`], [`render`], [`suite`]).
//!
//! All core math is generic over [`scalar::Scalar`]; the aliases below fix
//! the default arbitrary-precision instantiation.
//!
//! Everything is immutable after construction and operations are pure, so
//! values can be shared freely across threads.

pub mod algebra;
pub mod calculus;
pub mod coeff;
pub mod colour;
pub mod contraction;
pub mod hopf;
pub mod matrices;
pub mod parse;
pub mod render;
pub mod rewrite;
pub mod scalar;
pub mod suite;

pub use scalar::Scalar;

/// Default exact scalar: arbitrary-precision rationals.
pub type Rat = num_rational::BigRational;
/// Fixed-width alternative for speed-sensitive experimentation.
pub type Rat64 = num_rational::Rational64;

pub type Coeff = coeff::CoeffPoly<Rat>;
pub type Exponent = coeff::ExponentForm<Rat>;
pub type Limit = coeff::ColourPoly<Rat>;
pub type Colour = colour::ColourSymbol<Rat>;
pub type Gen = algebra::Generator<Rat>;
pub type Poly = algebra::NcPoly<Rat>;
pub type Matrix = matrices::CMatrix<Rat>;

#[cfg(test)]
mod thread_safety {
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn core_values_are_send_and_sync() {
        assert_send_sync::<crate::Coeff>();
        assert_send_sync::<crate::Poly>();
        assert_send_sync::<crate::rewrite::RewriteSystem<crate::Rat>>();
    }
}
