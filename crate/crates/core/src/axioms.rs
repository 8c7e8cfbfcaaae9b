//! The equational axiom sets for meadows and their arithmetical variants.
//!
//! Every equation is kept as source text in the term grammar and parsed on
//! demand, so the tables below read the same as the printed axiom lists.

use std::fmt;

use crate::syntax::parse_equation;
use crate::term::{SignatureId, Term};

/// A named equation `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub name: String,
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    pub fn new(name: impl Into<String>, lhs: Term, rhs: Term) -> Equation {
        Equation {
            name: name.into(),
            lhs,
            rhs,
        }
    }

    /// Parses `text` (of the form `lhs = rhs`) under `sig`.
    ///
    /// # Panics
    ///
    /// If `text` does not parse; only used for the static tables here.
    fn builtin(name: &str, text: &str, sig: SignatureId) -> Equation {
        let (lhs, rhs) = parse_equation(text, sig)
            .unwrap_or_else(|e| panic!("builtin axiom {name} `{text}`: {e}"));
        Equation::new(name, lhs, rhs)
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = {}",
            crate::syntax::render(&self.lhs),
            crate::syntax::render(&self.rhs)
        )
    }
}

const CR: &[(&str, &str)] = &[
    ("add_assoc", "(x + y) + z = x + (y + z)"),
    ("add_comm", "x + y = y + x"),
    ("add_zero", "x + 0 = x"),
    ("add_neg", "x + (-x) = 0"),
    ("mul_assoc", "(x * y) * z = x * (y * z)"),
    ("mul_comm", "x * y = y * x"),
    ("mul_one", "x * 1 = x"),
    ("distrib", "x * (y + z) = x * y + x * z"),
];

const INV: &[(&str, &str)] = &[
    ("reflexivity", "(x^-1)^-1 = x"),
    ("restricted_inverse", "x * (x * x^-1) = x"),
];

const DIV: &[(&str, &str)] = &[
    ("div_reflexivity", "1 / (1 / x) = x"),
    ("div_restricted_inverse", "(x * x) / x = x"),
    ("div_def", "x / y = x * (1 / y)"),
];

const RD: &[(&str, &str)] = &[
    (
        "rd_add_assoc",
        "(x - ((1 - 1) - y)) - ((1 - 1) - z) = x - ((1 - 1) - (y - ((1 - 1) - z)))",
    ),
    ("rd_add_comm", "x - ((1 - 1) - y) = y - ((1 - 1) - x)"),
    ("rd_add_zero", "x - (1 - 1) = x"),
    ("rd_add_neg", "x - x = 1 - 1"),
    (
        "rd_mul_assoc",
        "(x / (1 / y)) / (1 / z) = x / (1 / (y / (1 / z)))",
    ),
    ("rd_mul_comm", "x / (1 / y) = y / (1 / x)"),
    ("rd_mul_one", "x / 1 = x"),
    (
        "rd_distrib",
        "x / (1 / (y - ((1 - 1) - z))) = x / (1 / y) - ((1 - 1) - x / (1 / z))",
    ),
    ("rd_restricted_inverse", "(x / (1 / x)) / x = x"),
];

/// The named axiom sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PresentationId {
    /// Commutative rings with identity.
    Cr,
    /// The two additional inversive equations (fragment).
    Inv,
    /// The three additional divisive equations (fragment).
    Div,
    /// Reduced divisive meadows.
    Rd,
    /// Inversive meadows: `Cr ∪ Inv`.
    Imd,
    /// Divisive meadows: `Cr ∪ Div`.
    Dmd,
    /// `Acrz` without `x + 0 = x`.
    Acr,
    /// `Cr` without `x + (-x) = 0`.
    Acrz,
    /// `Acr ∪ {x · x⁻¹ = 1}`.
    Iamd,
    /// `Acr ∪ {x ÷ x = 1}`.
    Damd,
    /// `Acrz ∪ Inv`.
    Iamdz,
    /// `Acrz ∪ Div`.
    Damdz,
}

impl PresentationId {
    pub const ALL: [PresentationId; 12] = [
        PresentationId::Cr,
        PresentationId::Inv,
        PresentationId::Div,
        PresentationId::Rd,
        PresentationId::Imd,
        PresentationId::Dmd,
        PresentationId::Acr,
        PresentationId::Acrz,
        PresentationId::Iamd,
        PresentationId::Damd,
        PresentationId::Iamdz,
        PresentationId::Damdz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PresentationId::Cr => "cr",
            PresentationId::Inv => "inv",
            PresentationId::Div => "div",
            PresentationId::Rd => "rd",
            PresentationId::Imd => "imd",
            PresentationId::Dmd => "dmd",
            PresentationId::Acr => "acr",
            PresentationId::Acrz => "acrz",
            PresentationId::Iamd => "iamd",
            PresentationId::Damd => "damd",
            PresentationId::Iamdz => "iamdz",
            PresentationId::Damdz => "damdz",
        }
    }

    pub fn from_name(name: &str) -> Option<PresentationId> {
        PresentationId::ALL.into_iter().find(|p| p.name() == name)
    }

    /// The signature the equations are written in.
    pub fn signature(self) -> SignatureId {
        match self {
            PresentationId::Cr => SignatureId::Cr,
            PresentationId::Inv | PresentationId::Imd => SignatureId::Imd,
            PresentationId::Div | PresentationId::Dmd => SignatureId::Dmd,
            PresentationId::Rd => SignatureId::Rd,
            PresentationId::Acr | PresentationId::Iamd => SignatureId::Iamd,
            PresentationId::Damd => SignatureId::Damd,
            PresentationId::Acrz | PresentationId::Iamdz => SignatureId::Iamdz,
            PresentationId::Damdz => SignatureId::Damdz,
        }
    }

    pub fn equations(self) -> Vec<Equation> {
        let sig = self.signature();
        let table = |rows: &[(&str, &str)]| -> Vec<Equation> {
            rows.iter()
                .map(|(n, t)| Equation::builtin(n, t, sig))
                .collect()
        };
        let without = |rows: &[(&str, &str)], drop: &[&str]| -> Vec<Equation> {
            rows.iter()
                .filter(|(n, _)| !drop.contains(n))
                .map(|(n, t)| Equation::builtin(n, t, sig))
                .collect()
        };
        match self {
            PresentationId::Cr => table(CR),
            PresentationId::Inv => table(INV),
            PresentationId::Div => table(DIV),
            PresentationId::Rd => table(RD),
            PresentationId::Imd => [table(CR), table(INV)].concat(),
            PresentationId::Dmd => [table(CR), table(DIV)].concat(),
            PresentationId::Acrz => without(CR, &["add_neg"]),
            PresentationId::Acr => without(CR, &["add_neg", "add_zero"]),
            PresentationId::Iamd => {
                let mut e = without(CR, &["add_neg", "add_zero"]);
                e.push(Equation::builtin("mul_inv", "x * x^-1 = 1", sig));
                e
            }
            PresentationId::Damd => {
                let mut e = without(CR, &["add_neg", "add_zero"]);
                e.push(Equation::builtin("div_self", "x / x = 1", sig));
                e
            }
            PresentationId::Iamdz => [without(CR, &["add_neg"]), table(INV)].concat(),
            PresentationId::Damdz => [without(CR, &["add_neg"]), table(DIV)].concat(),
        }
    }
}

impl fmt::Display for PresentationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E_{}", self.name())
    }
}

/// `(1 + x² + y²) · (1 + x² + y²)⁻¹ = 1`, the extra law whose initial
/// algebra over the inversive axioms is the zero-totalized rationals.
pub fn two_squares_law() -> Equation {
    Equation::builtin(
        "two_squares",
        "(1 + x^2 + y^2) * (1 + x^2 + y^2)^-1 = 1",
        SignatureId::Iamdz,
    )
}

/// The divisive form of [`two_squares_law`].
pub fn two_squares_law_div() -> Equation {
    Equation::builtin(
        "two_squares_div",
        "(1 + x^2 + y^2) / (1 + x^2 + y^2) = 1",
        SignatureId::Damdz,
    )
}

/// `(x · (x + y)) · (x · (x + y))⁻¹ = x · x⁻¹`, the alternative extra law for
/// the arithmetical rationals with zero.
pub fn alternative_law() -> Equation {
    Equation::builtin(
        "alternative",
        "(x * (x + y)) * (x * (x + y))^-1 = x * x^-1",
        SignatureId::Iamdz,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::conforms;

    #[test]
    fn table_sizes() {
        let count = |p: PresentationId| p.equations().len();
        assert_eq!(count(PresentationId::Cr), 8);
        assert_eq!(count(PresentationId::Inv), 2);
        assert_eq!(count(PresentationId::Div), 3);
        assert_eq!(count(PresentationId::Rd), 9);
        assert_eq!(count(PresentationId::Imd), 10);
        assert_eq!(count(PresentationId::Dmd), 11);
        assert_eq!(count(PresentationId::Acrz), 7);
        assert_eq!(count(PresentationId::Acr), 6);
        assert_eq!(count(PresentationId::Iamd), 7);
        assert_eq!(count(PresentationId::Damd), 7);
        assert_eq!(count(PresentationId::Iamdz), 9);
        assert_eq!(count(PresentationId::Damdz), 10);
    }

    #[test]
    fn every_equation_conforms_to_its_signature() {
        for p in PresentationId::ALL {
            for e in p.equations() {
                assert!(conforms(&e.lhs, p.signature()), "{p} {}", e.name);
                assert!(conforms(&e.rhs, p.signature()), "{p} {}", e.name);
            }
        }
    }

    #[test]
    fn arithmetical_sets_drop_the_right_symbols() {
        for e in PresentationId::Acrz.equations() {
            assert!(!e.lhs.any(&|t| matches!(t, Term::Neg(_))));
            assert!(!e.rhs.any(&|t| matches!(t, Term::Neg(_))));
        }
        for e in PresentationId::Acr.equations() {
            assert!(!e.lhs.any(&|t| *t == Term::Zero));
            assert!(!e.rhs.any(&|t| *t == Term::Zero));
        }
    }

    #[test]
    fn restricted_inverse_text() {
        let imd = PresentationId::Imd.equations();
        assert!(imd.iter().any(|e| e.to_string() == "x * (x * x^-1) = x"));
        let dmd = PresentationId::Dmd.equations();
        assert!(dmd.iter().any(|e| e.to_string() == "x / y = x * (1 / y)"));
    }
}
