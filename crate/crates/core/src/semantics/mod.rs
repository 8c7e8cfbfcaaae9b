//! Evaluation of terms in meadows.
//!
//! [`Q0`] is the zero-totalized field of rationals; [`FiniteMeadow`] covers
//! the zero-totalized prime fields and the expansions of finite regular
//! rings. Both implement [`Meadow`], and everything that evaluates terms is
//! generic over it.

mod finite;
mod witness;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::rational::Q0Value;
use crate::term::Term;

pub use finite::{
    all_assignments, check_axioms, check_equations, expand_regular_ring, is_prime,
    squarefree_meadow, zp_meadow, AxiomFailure, ExpansionError, FiniteMeadow, FiniteRing,
    ModelError,
};
pub use witness::{corollary_witness, two_squares, two_squares_all, WitnessError};

/// Variable assignment into a carrier.
pub type Assignment<V> = BTreeMap<String, V>;

/// A total meadow: a commutative ring with a total inverse.
///
/// Division and binary subtraction have default derived readings
/// `x ÷ y = x · y⁻¹` and `x − y = x + (−y)`.
pub trait Meadow {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
}

/// The zero-totalized field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Q0;

impl Meadow for Q0 {
    type Elem = Q0Value;

    fn zero(&self) -> Q0Value {
        Q0Value::zero()
    }
    fn one(&self) -> Q0Value {
        Q0Value::one()
    }
    fn add(&self, a: &Q0Value, b: &Q0Value) -> Q0Value {
        a + b
    }
    fn mul(&self, a: &Q0Value, b: &Q0Value) -> Q0Value {
        a * b
    }
    fn neg(&self, a: &Q0Value) -> Q0Value {
        -a
    }
    fn inv(&self, a: &Q0Value) -> Q0Value {
        a.inv()
    }
    fn div(&self, a: &Q0Value, b: &Q0Value) -> Q0Value {
        a / b
    }
    fn sub(&self, a: &Q0Value, b: &Q0Value) -> Q0Value {
        a - b
    }
    fn is_zero(&self, a: &Q0Value) -> bool {
        a.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),
}

/// Evaluates `t` in `m` under `a`.
pub fn eval<M: Meadow>(m: &M, t: &Term, a: &Assignment<M::Elem>) -> Result<M::Elem, EvalError> {
    Ok(match t {
        Term::Zero => m.zero(),
        Term::One => m.one(),
        Term::Var(v) => a
            .get(v)
            .cloned()
            .ok_or_else(|| EvalError::MissingAssignment(v.clone()))?,
        Term::Add(l, r) => m.add(&eval(m, l, a)?, &eval(m, r, a)?),
        Term::Mul(l, r) => m.mul(&eval(m, l, a)?, &eval(m, r, a)?),
        Term::Neg(x) => m.neg(&eval(m, x, a)?),
        Term::Inv(x) => m.inv(&eval(m, x, a)?),
        Term::Div(l, r) => m.div(&eval(m, l, a)?, &eval(m, r, a)?),
        Term::Sub(l, r) => m.sub(&eval(m, l, a)?, &eval(m, r, a)?),
    })
}

pub fn eval_q0(t: &Term, a: &Assignment<Q0Value>) -> Result<Q0Value, EvalError> {
    eval(&Q0, t, a)
}

pub fn eval_model(t: &Term, m: &FiniteMeadow, a: &Assignment<usize>) -> Result<usize, EvalError> {
    eval(m, t, a)
}

/// Builds an assignment from `(name, value)` pairs.
pub fn assignment<V, S: Into<String>>(pairs: impl IntoIterator<Item = (S, V)>) -> Assignment<V> {
    pairs.into_iter().map(|(k, v)| (k.into(), v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_term;
    use crate::term::{numeral, SignatureId};

    fn q(s: &str) -> Q0Value {
        s.parse().unwrap()
    }

    #[test]
    fn q0_examples() {
        let none = Assignment::new();
        assert_eq!(eval_q0(&Term::inv(Term::Zero), &none).unwrap(), q("0"));
        assert_eq!(
            eval_q0(&Term::div(numeral(5), Term::Zero), &none).unwrap(),
            q("0")
        );
        assert_eq!(eval_q0(&Term::inv(numeral(2)), &none).unwrap(), q("1/2"));
        let t = parse_term("(1 + x^2 + y^2) * (1 + x^2 + y^2)^-1", SignatureId::Iamd).unwrap();
        let a = assignment([("x", q("2")), ("y", q("3"))]);
        assert_eq!(eval_q0(&t, &a).unwrap(), q("1"));
    }

    #[test]
    fn missing_variable() {
        let err = eval_q0(&Term::var("z"), &Assignment::new()).unwrap_err();
        assert_eq!(err, EvalError::MissingAssignment("z".into()));
    }

    #[test]
    fn model_examples() {
        let z5 = zp_meadow(5).unwrap();
        let none = Assignment::new();
        assert_eq!(eval_model(&Term::inv(numeral(2)), &z5, &none).unwrap(), 3);
        let z3 = zp_meadow(3).unwrap();
        let t = Term::mul(Term::var("x"), Term::inv(Term::var("x")));
        assert_eq!(eval_model(&t, &z3, &assignment([("x", 0)])).unwrap(), 0);
        let z2 = zp_meadow(2).unwrap();
        assert_eq!(eval_model(&numeral(2), &z2, &none).unwrap(), 0);
    }

    #[test]
    fn derived_subtraction_and_division() {
        let t = parse_term("(1 - 1) - (1 / (1 - 1))", SignatureId::Rd).unwrap();
        assert_eq!(eval_q0(&t, &Assignment::new()).unwrap(), q("0"));
        let t = parse_term("1 - (1 / (1 - (1 - 1) / 1))", SignatureId::Rd).unwrap();
        assert_eq!(eval_q0(&t, &Assignment::new()).unwrap(), q("0"));
    }
}
