//! Syntactic definedness (the sets Def and Nz) and compliance with the
//! conventions that forbid using `q⁻¹` or `p ÷ q` when `q = 0`.

use std::fmt;

use thiserror::Error;

use crate::partial::PunchVariant;
use crate::rational::Q0Value;
use crate::semantics::{eval_q0, Assignment};
use crate::term::{check_signature, SignatureError, SignatureId, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DefNzClass {
    /// Syntactically nonzero (and hence defined).
    InNz,
    /// Syntactically defined, not known nonzero.
    InDef,
    Neither,
}

impl fmt::Display for DefNzClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DefNzClass::InNz => "Nz",
            DefNzClass::InDef => "Def",
            DefNzClass::Neither => "neither",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum ClassifierMode {
    /// `x + y ∈ Nz` needs one summand in Nz and the other in Def.
    #[default]
    Strict,
    /// `x + y ∈ Nz` as soon as one summand is in Nz. Places `1 + 0⁻¹` in
    /// Nz, so it is not sound for punched evaluation.
    Literal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Classifier {
    pub mode: ClassifierMode,
    /// Treat bare variables as members of Def.
    pub vars_defined: bool,
}

impl Classifier {
    pub fn literal() -> Classifier {
        Classifier {
            mode: ClassifierMode::Literal,
            vars_defined: false,
        }
    }

    pub fn classify(&self, t: &Term) -> Result<DefNzClass, SignatureError> {
        check_signature(t, SignatureId::Iamdz)?;
        let (nz, def) = self.flags(t);
        Ok(if nz {
            DefNzClass::InNz
        } else if def {
            DefNzClass::InDef
        } else {
            DefNzClass::Neither
        })
    }

    /// `(t ∈ Nz, t ∈ Def)`.
    fn flags(&self, t: &Term) -> (bool, bool) {
        let (nz, def) = match t {
            Term::One => (true, true),
            Term::Zero => (false, true),
            Term::Var(_) => (false, self.vars_defined),
            Term::Add(x, y) => {
                let ((nx, dx), (ny, dy)) = (self.flags(x), self.flags(y));
                let nz = match self.mode {
                    ClassifierMode::Literal => nx || ny,
                    ClassifierMode::Strict => (nx && dy) || (dx && ny),
                };
                (nz, dx && dy)
            }
            Term::Mul(x, y) => {
                let ((nx, dx), (ny, dy)) = (self.flags(x), self.flags(y));
                (nx && ny, dx && dy)
            }
            Term::Inv(x) => (self.flags(x).0, false),
            _ => unreachable!("signature checked"),
        };
        (nz, nz || def)
    }
}

/// Classifies `t` in strict mode with variables outside Def.
pub fn classify(t: &Term) -> Result<DefNzClass, SignatureError> {
    Classifier::default().classify(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConventionId {
    /// `q⁻¹` is not used with `q = 0`.
    RelevantInversive,
    /// `p ÷ q` is not used with `q = 0`.
    RelevantDivision,
    /// `p ÷ q` is not used with `q = 0` if `p ≠ 0`.
    LiberalRelevantDivision,
}

impl ConventionId {
    pub const ALL: [ConventionId; 3] = [
        ConventionId::RelevantInversive,
        ConventionId::RelevantDivision,
        ConventionId::LiberalRelevantDivision,
    ];

    pub fn variant(self) -> PunchVariant {
        match self {
            ConventionId::RelevantInversive => PunchVariant::InvZero,
            ConventionId::RelevantDivision => PunchVariant::DivZeroAll,
            ConventionId::LiberalRelevantDivision => PunchVariant::DivZeroNonzeroNum,
        }
    }

    pub fn signature(self) -> SignatureId {
        self.variant().signature()
    }

    /// Command-line name: `inv`, `div` or `div-liberal`.
    pub fn name(self) -> &'static str {
        match self {
            ConventionId::RelevantInversive => "inv",
            ConventionId::RelevantDivision => "div",
            ConventionId::LiberalRelevantDivision => "div-liberal",
        }
    }

    pub fn from_name(name: &str) -> Option<ConventionId> {
        ConventionId::ALL.into_iter().find(|c| c.name() == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Compliance {
    Compliant,
    Violation {
        /// The offending `q⁻¹` or `p ÷ q`.
        subterm: Term,
        /// Value of `p` for a division, `None` for an inverse.
        numerator: Option<Q0Value>,
        /// Value of `q`; always zero.
        denominator: Q0Value,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConventionError {
    #[error("compliance is only decided for closed terms")]
    OpenTerm,
    #[error(transparent)]
    Signature(#[from] SignatureError),
}

/// Checks a closed term against `c`, reporting the first violation in
/// leftmost-innermost order.
pub fn closed_compliance(t: &Term, c: ConventionId) -> Result<Compliance, ConventionError> {
    check_signature(t, c.signature())?;
    if !t.is_closed() {
        return Err(ConventionError::OpenTerm);
    }
    Ok(first_violation(t, c).unwrap_or(Compliance::Compliant))
}

fn first_violation(t: &Term, c: ConventionId) -> Option<Compliance> {
    if let Some(v) = t.children().into_iter().find_map(|s| first_violation(s, c)) {
        return Some(v);
    }
    let value = |s: &Term| eval_q0(s, &Assignment::new()).expect("closed term");
    let (numerator, denominator) = match t {
        Term::Inv(q) => (None, value(q)),
        Term::Div(p, q) => (Some(value(p)), value(q)),
        _ => return None,
    };
    let violates = denominator.is_zero()
        && match c {
            ConventionId::LiberalRelevantDivision => {
                !numerator.as_ref().is_some_and(Q0Value::is_zero)
            }
            _ => true,
        };
    violates.then(|| Compliance::Violation {
        subterm: t.clone(),
        numerator,
        denominator,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OpenCompliance {
    /// Every inverse is applied to a syntactically nonzero term.
    CertifiedCompliant,
    /// The criterion does not apply; the term may or may not comply.
    Unknown,
}

/// Sound syntactic check of the relevant inversive convention: certifies
/// `t` when the argument of every `⁻¹` is in Nz.
pub fn open_compliance_sufficient(
    t: &Term,
    classifier: &Classifier,
) -> Result<OpenCompliance, SignatureError> {
    check_signature(t, SignatureId::Iamdz)?;
    let certified = !t.any(&|s| match s {
        Term::Inv(q) => !classifier.flags(q).0,
        _ => false,
    });
    Ok(if certified {
        OpenCompliance::CertifiedCompliant
    } else {
        OpenCompliance::Unknown
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_term;
    use crate::term::numeral;

    fn iz(s: &str) -> Term {
        parse_term(s, SignatureId::Iamdz).unwrap()
    }

    #[test]
    fn classification_examples() {
        let t = iz("1 + x");
        assert_eq!(classify(&t).unwrap(), DefNzClass::Neither);
        assert_eq!(Classifier::literal().classify(&t).unwrap(), DefNzClass::InNz);
        assert_eq!(classify(&Term::Zero).unwrap(), DefNzClass::InDef);
        assert_eq!(classify(&iz("0^-1")).unwrap(), DefNzClass::Neither);
        assert_eq!(classify(&iz("(1 + 1)^-1")).unwrap(), DefNzClass::InNz);
        assert_eq!(classify(&iz("0 * 1 + 0")).unwrap(), DefNzClass::InDef);
    }

    #[test]
    fn literal_sum_rule_is_unsound() {
        let t = iz("1 + 0^-1");
        assert_eq!(Classifier::literal().classify(&t).unwrap(), DefNzClass::InNz);
        assert_eq!(classify(&t).unwrap(), DefNzClass::Neither);
    }

    #[test]
    fn variables_defined_flag() {
        let c = Classifier {
            vars_defined: true,
            ..Default::default()
        };
        assert_eq!(c.classify(&iz("x")).unwrap(), DefNzClass::InDef);
        assert_eq!(c.classify(&iz("1 + x")).unwrap(), DefNzClass::InNz);
        assert_eq!(c.classify(&iz("x^-1")).unwrap(), DefNzClass::Neither);
    }

    #[test]
    fn closed_compliance_examples() {
        let d = |s: &str| parse_term(s, SignatureId::Dmd).unwrap();
        match closed_compliance(&d("1 / 0"), ConventionId::RelevantDivision).unwrap() {
            Compliance::Violation {
                subterm,
                denominator,
                ..
            } => {
                assert_eq!(subterm, d("1 / 0"));
                assert!(denominator.is_zero());
            }
            c => panic!("{c:?}"),
        }
        assert_eq!(
            closed_compliance(&d("0 / 0"), ConventionId::LiberalRelevantDivision).unwrap(),
            Compliance::Compliant
        );
        assert_eq!(
            closed_compliance(&d("2 / 2"), ConventionId::RelevantDivision).unwrap(),
            Compliance::Compliant
        );
        assert_eq!(
            closed_compliance(&d("x / 1"), ConventionId::RelevantDivision),
            Err(ConventionError::OpenTerm)
        );
    }

    #[test]
    fn violations_are_leftmost_innermost() {
        let t = parse_term("(1 / (1 / 0 + 0)) / (0 / 0)", SignatureId::Dmd).unwrap();
        match closed_compliance(&t, ConventionId::RelevantDivision).unwrap() {
            Compliance::Violation { subterm, .. } => {
                assert_eq!(subterm, Term::div(Term::One, Term::Zero))
            }
            c => panic!("{c:?}"),
        }
        let t = parse_term("(1 - 1)^-1 * 0^-1", SignatureId::Imd).unwrap();
        match closed_compliance(&t, ConventionId::RelevantInversive).unwrap() {
            Compliance::Violation {
                subterm, numerator, ..
            } => {
                assert_eq!(subterm, Term::inv(Term::add(Term::One, Term::neg(Term::One))));
                assert_eq!(numerator, None);
            }
            c => panic!("{c:?}"),
        }
    }

    #[test]
    fn open_criterion_examples() {
        let strict = Classifier::default();
        let t = iz("(1 + x * x)^-1");
        assert_eq!(
            open_compliance_sufficient(&t, &strict).unwrap(),
            OpenCompliance::Unknown
        );
        assert_eq!(
            open_compliance_sufficient(&t, &Classifier::literal()).unwrap(),
            OpenCompliance::CertifiedCompliant
        );
        assert_eq!(
            open_compliance_sufficient(&Term::inv(numeral(3)), &strict).unwrap(),
            OpenCompliance::CertifiedCompliant
        );
        assert_eq!(
            open_compliance_sufficient(&iz("x^-1"), &strict).unwrap(),
            OpenCompliance::Unknown
        );
    }
}
