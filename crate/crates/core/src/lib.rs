//! Terms, semantics and decision procedures for meadows: commutative rings
//! with a total multiplicative inverse (`0⁻¹ = 0`) or total division
//! (`x ÷ 0 = 0`), their arithmetical variants without additive inverse, and
//! the partial algebras and three-valued logics obtained by making inverse
//! or division at zero undefined.

pub mod axioms;
pub mod convention;
pub mod logic3;
pub mod normalize;
pub mod partial;
pub mod presentations;
pub mod projection;
pub mod random;
pub mod rational;
pub mod semantics;
pub mod syntax;
pub mod term;

pub use axioms::{Equation, PresentationId};
pub use rational::Q0Value;
pub use semantics::{eval, eval_model, eval_q0, Assignment, FiniteMeadow, Meadow, Q0};
pub use syntax::{parse_term, render, ParseError};
pub use term::{numeral, power, subst, SignatureId, Term};
