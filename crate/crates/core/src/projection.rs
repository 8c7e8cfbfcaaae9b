//! Translations between the inversive, divisive and reduced divisive
//! notations.

use std::fmt;

use crate::term::{check_signature, SignatureError, SignatureId, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProjectionId {
    /// `p ÷ q ↦ p · q⁻¹`.
    DmnToImn,
    /// `p⁻¹ ↦ 1 ÷ p`.
    ImnToDmn,
    /// Inversive terms into `{1, −, ÷}`.
    ImnToRdmn,
}

impl ProjectionId {
    pub const ALL: [ProjectionId; 3] = [
        ProjectionId::DmnToImn,
        ProjectionId::ImnToDmn,
        ProjectionId::ImnToRdmn,
    ];

    pub fn source(self) -> SignatureId {
        match self {
            ProjectionId::DmnToImn => SignatureId::Dmd,
            ProjectionId::ImnToDmn | ProjectionId::ImnToRdmn => SignatureId::Imd,
        }
    }

    pub fn target(self) -> SignatureId {
        match self {
            ProjectionId::DmnToImn => SignatureId::Imd,
            ProjectionId::ImnToDmn => SignatureId::Dmd,
            ProjectionId::ImnToRdmn => SignatureId::Rd,
        }
    }
}

impl fmt::Display for ProjectionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProjectionId::DmnToImn => "dmn→imn",
            ProjectionId::ImnToDmn => "imn→dmn",
            ProjectionId::ImnToRdmn => "imn→rdmn",
        })
    }
}

/// Applies the projection `which` to `t`, which must conform to its source
/// signature.
pub fn project(t: &Term, which: ProjectionId) -> Result<Term, SignatureError> {
    check_signature(t, which.source())?;
    Ok(match which {
        ProjectionId::DmnToImn => dmn_to_imn(t),
        ProjectionId::ImnToDmn => imn_to_dmn(t),
        ProjectionId::ImnToRdmn => imn_to_rdmn(t),
    })
}

fn dmn_to_imn(t: &Term) -> Term {
    match t {
        Term::Div(p, q) => Term::mul(dmn_to_imn(p), Term::inv(dmn_to_imn(q))),
        _ => map_children(t, dmn_to_imn),
    }
}

fn imn_to_dmn(t: &Term) -> Term {
    match t {
        Term::Inv(p) => Term::div(Term::One, imn_to_dmn(p)),
        _ => map_children(t, imn_to_dmn),
    }
}

fn rd_zero() -> Term {
    Term::sub(Term::One, Term::One)
}

fn imn_to_rdmn(t: &Term) -> Term {
    let go = imn_to_rdmn;
    match t {
        Term::Zero => rd_zero(),
        Term::One | Term::Var(_) => t.clone(),
        Term::Add(p, q) => Term::sub(go(p), Term::sub(rd_zero(), go(q))),
        Term::Mul(p, q) => Term::div(go(p), Term::div(Term::One, go(q))),
        Term::Neg(p) => Term::sub(rd_zero(), go(p)),
        Term::Inv(p) => Term::div(Term::One, go(p)),
        Term::Div(..) | Term::Sub(..) => unreachable!("source signature checked"),
    }
}

fn map_children(t: &Term, f: fn(&Term) -> Term) -> Term {
    let b = |x: &Term| Box::new(f(x));
    match t {
        Term::Zero | Term::One | Term::Var(_) => t.clone(),
        Term::Add(p, q) => Term::Add(b(p), b(q)),
        Term::Mul(p, q) => Term::Mul(b(p), b(q)),
        Term::Neg(p) => Term::Neg(b(p)),
        Term::Inv(p) => Term::Inv(b(p)),
        Term::Div(p, q) => Term::Div(b(p), b(q)),
        Term::Sub(p, q) => Term::Sub(b(p), b(q)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::conforms;

    fn v(n: &str) -> Term {
        Term::var(n)
    }

    #[test]
    fn clauses() {
        assert_eq!(
            project(&Term::div(v("x"), v("y")), ProjectionId::DmnToImn).unwrap(),
            Term::mul(v("x"), Term::inv(v("y")))
        );
        assert_eq!(
            project(&Term::inv(v("x")), ProjectionId::ImnToDmn).unwrap(),
            Term::div(Term::One, v("x"))
        );
        assert_eq!(
            project(&Term::add(v("x"), v("y")), ProjectionId::ImnToRdmn).unwrap(),
            Term::sub(v("x"), Term::sub(rd_zero(), v("y")))
        );
        assert_eq!(
            project(&Term::Zero, ProjectionId::ImnToRdmn).unwrap(),
            rd_zero()
        );
        assert_eq!(
            project(&Term::mul(v("x"), v("y")), ProjectionId::ImnToRdmn).unwrap(),
            Term::div(v("x"), Term::div(Term::One, v("y")))
        );
    }

    #[test]
    fn rejects_wrong_source() {
        let err = project(&Term::inv(v("x")), ProjectionId::DmnToImn).unwrap_err();
        assert_eq!(err.to_string(), "⁻¹ not in Σ_dmd");
        assert!(project(&Term::div(v("x"), v("y")), ProjectionId::ImnToRdmn).is_err());
    }

    #[test]
    fn output_conforms_to_target() {
        let t = Term::neg(Term::inv(Term::add(Term::Zero, Term::mul(v("x"), Term::One))));
        for which in [ProjectionId::ImnToDmn, ProjectionId::ImnToRdmn] {
            assert!(conforms(&project(&t, which).unwrap(), which.target()));
        }
        let d = Term::div(Term::neg(v("x")), Term::add(Term::Zero, v("y")));
        assert!(conforms(
            &project(&d, ProjectionId::DmnToImn).unwrap(),
            SignatureId::Imd
        ));
    }
}
