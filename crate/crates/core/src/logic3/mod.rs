//! Three-valued first-order logic over punched meadows.
//!
//! Atoms are equations between possibly non-denoting terms; the
//! [`Equality`] mode decides their truth value when a side is undefined.
//! Connectives and quantifiers come in the Bochvar (strict), McCarthy
//! (sequential) and Kleene (strong) flavours. Quantifiers range over an
//! explicit finite domain.

mod parse;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::partial::{punch_eval, PartialValue, PunchError, PunchVariant};
use crate::semantics::{Assignment, Meadow};
use crate::syntax::render;
use crate::term::{free_vars, Term};

pub use parse::parse_formula;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TruthValue3 {
    T,
    F,
    U,
}

impl TruthValue3 {
    pub const ALL: [TruthValue3; 3] = [TruthValue3::T, TruthValue3::F, TruthValue3::U];

    pub fn from_bool(b: bool) -> TruthValue3 {
        if b {
            TruthValue3::T
        } else {
            TruthValue3::F
        }
    }

    /// `Some(true)` for T, `Some(false)` for F, `None` for U.
    pub fn as_bool(self) -> Option<bool> {
        match self {
            TruthValue3::T => Some(true),
            TruthValue3::F => Some(false),
            TruthValue3::U => None,
        }
    }

    pub fn not(self) -> TruthValue3 {
        match self {
            TruthValue3::T => TruthValue3::F,
            TruthValue3::F => TruthValue3::T,
            TruthValue3::U => TruthValue3::U,
        }
    }
}

impl fmt::Display for TruthValue3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TruthValue3::T => "T",
            TruthValue3::F => "F",
            TruthValue3::U => "U",
        })
    }
}

/// How `t = t′` is valued when a side is undefined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Equality {
    /// U if either side is undefined.
    Weak,
    /// T if both sides are undefined, F if exactly one is.
    Strong,
    /// F if either side is undefined.
    Existential,
}

impl Equality {
    pub fn name(self) -> &'static str {
        match self {
            Equality::Weak => "weak",
            Equality::Strong => "strong",
            Equality::Existential => "exist",
        }
    }

    pub fn from_name(name: &str) -> Option<Equality> {
        [Equality::Weak, Equality::Strong, Equality::Existential]
            .into_iter()
            .find(|e| e.name() == name)
    }

    pub fn compare<V: PartialEq>(self, l: &PartialValue<V>, r: &PartialValue<V>) -> TruthValue3 {
        use PartialValue::{Defined, Undefined};
        match (l, r) {
            (Defined(a), Defined(b)) => TruthValue3::from_bool(a == b),
            (Undefined, Undefined) if self == Equality::Strong => TruthValue3::T,
            _ => match self {
                Equality::Weak => TruthValue3::U,
                Equality::Strong | Equality::Existential => TruthValue3::F,
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Connectives {
    /// Any U operand gives U.
    Bochvar,
    /// Left-sequential: the left operand is evaluated first and may decide.
    McCarthy,
    /// As McCarthy with the operands' roles swapped.
    McCarthyReversed,
    /// Strong Kleene: U only when the determined operands do not decide.
    Kleene,
}

impl Connectives {
    pub const ALL: [Connectives; 4] = [
        Connectives::Bochvar,
        Connectives::McCarthy,
        Connectives::McCarthyReversed,
        Connectives::Kleene,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Connectives::Bochvar => "bochvar",
            Connectives::McCarthy => "mccarthy",
            Connectives::McCarthyReversed => "mccarthy-rev",
            Connectives::Kleene => "kleene",
        }
    }

    pub fn from_name(name: &str) -> Option<Connectives> {
        Connectives::ALL.into_iter().find(|c| c.name() == name)
    }

    pub fn not(self, a: TruthValue3) -> TruthValue3 {
        a.not()
    }

    pub fn and(self, a: TruthValue3, b: TruthValue3) -> TruthValue3 {
        use TruthValue3::*;
        match self {
            Connectives::Bochvar => match (a, b) {
                (U, _) | (_, U) => U,
                _ => TruthValue3::from_bool(a == T && b == T),
            },
            Connectives::McCarthy => match a {
                F => F,
                U => U,
                T => b,
            },
            Connectives::McCarthyReversed => Connectives::McCarthy.and(b, a),
            Connectives::Kleene => match (a, b) {
                (F, _) | (_, F) => F,
                (T, T) => T,
                _ => U,
            },
        }
    }

    pub fn or(self, a: TruthValue3, b: TruthValue3) -> TruthValue3 {
        // The dual of `and` in every suite.
        self.and(a.not(), b.not()).not()
    }

    /// `¬a ∨ b`.
    pub fn implies(self, a: TruthValue3, b: TruthValue3) -> TruthValue3 {
        self.or(a.not(), b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantifiers {
    /// U if any instance is U, classical otherwise.
    BochvarQ,
    /// Folds with the Kleene connectives.
    KleeneQ,
}

impl Quantifiers {
    pub fn name(self) -> &'static str {
        match self {
            Quantifiers::BochvarQ => "bochvar",
            Quantifiers::KleeneQ => "kleene",
        }
    }

    pub fn from_name(name: &str) -> Option<Quantifiers> {
        [Quantifiers::BochvarQ, Quantifiers::KleeneQ]
            .into_iter()
            .find(|q| q.name() == name)
    }

    fn connectives(self) -> Connectives {
        match self {
            Quantifiers::BochvarQ => Connectives::Bochvar,
            Quantifiers::KleeneQ => Connectives::Kleene,
        }
    }

    pub fn forall(self, instances: impl IntoIterator<Item = TruthValue3>) -> TruthValue3 {
        let c = self.connectives();
        instances.into_iter().fold(TruthValue3::T, |acc, v| c.and(acc, v))
    }

    pub fn exists(self, instances: impl IntoIterator<Item = TruthValue3>) -> TruthValue3 {
        let c = self.connectives();
        instances.into_iter().fold(TruthValue3::F, |acc, v| c.or(acc, v))
    }
}

/// A logic: equality mode, connectives, quantifiers and a finite domain for
/// the quantifiers to range over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicConfig<V> {
    pub equality: Equality,
    pub connectives: Connectives,
    pub quantifiers: Quantifiers,
    pub domain: Vec<V>,
}

impl<V> LogicConfig<V> {
    /// The logic of partial meadows: weak equality, McCarthy connectives,
    /// Bochvar quantifiers.
    pub fn lpmd(domain: Vec<V>) -> LogicConfig<V> {
        LogicConfig {
            equality: Equality::Weak,
            connectives: Connectives::McCarthy,
            quantifiers: Quantifiers::BochvarQ,
            domain,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Eq(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

impl Formula {
    pub fn eq(l: Term, r: Term) -> Formula {
        Formula::Eq(l, r)
    }

    /// `l ≠ r`, read as `¬(l = r)`.
    pub fn neq(l: Term, r: Term) -> Formula {
        Formula::negate(Formula::Eq(l, r))
    }

    pub fn negate(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn forall(v: impl Into<String>, body: Formula) -> Formula {
        Formula::Forall(v.into(), Box::new(body))
    }

    pub fn exists(v: impl Into<String>, body: Formula) -> Formula {
        Formula::Exists(v.into(), Box::new(body))
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        match self {
            Formula::Eq(l, r) => free_vars(l).union(&free_vars(r)).cloned().collect(),
            Formula::Not(a) => a.free_vars(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.free_vars().union(&b.free_vars()).cloned().collect()
            }
            Formula::Forall(v, body) | Formula::Exists(v, body) => {
                let mut s = body.free_vars();
                s.remove(v);
                s
            }
        }
    }

    pub fn is_sentence(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Every term in the formula, left to right.
    pub fn terms(&self) -> Vec<&Term> {
        match self {
            Formula::Eq(l, r) => vec![l, r],
            Formula::Not(a) | Formula::Forall(_, a) | Formula::Exists(_, a) => a.terms(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                let mut v = a.terms();
                v.extend(b.terms());
                v
            }
        }
    }

    fn level(&self) -> u8 {
        match self {
            Formula::Forall(..) | Formula::Exists(..) => 0,
            Formula::Implies(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            Formula::Eq(..) | Formula::Not(_) => 4,
        }
    }

    fn write(&self, min: u8, out: &mut String) {
        if self.level() < min {
            out.push('(');
            self.write(0, out);
            out.push(')');
            return;
        }
        let mut bin = |a: &Formula, op: &str, b: &Formula, la: u8, lb: u8| {
            a.write(la, out);
            out.push_str(op);
            b.write(lb, out);
        };
        match self {
            Formula::Eq(l, r) => {
                out.push_str(&render(l));
                out.push_str(" = ");
                out.push_str(&render(r));
            }
            Formula::Not(a) => match &**a {
                Formula::Eq(l, r) => {
                    out.push_str(&render(l));
                    out.push_str(" != ");
                    out.push_str(&render(r));
                }
                _ => {
                    out.push('~');
                    a.write(4, out);
                }
            },
            Formula::And(a, b) => bin(a, " & ", b, 3, 4),
            Formula::Or(a, b) => bin(a, " | ", b, 2, 3),
            Formula::Implies(a, b) => bin(a, " -> ", b, 2, 1),
            Formula::Forall(v, body) | Formula::Exists(v, body) => {
                let q = if matches!(self, Formula::Forall(..)) {
                    "forall"
                } else {
                    "exists"
                };
                out.push_str(&format!("{q} {v}. "));
                body.write(0, out);
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write(0, &mut s);
        f.write_str(&s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("the quantifier domain is empty")]
    EmptyDomain,
    #[error("formula has free variables: {}", .0.iter().cloned().collect::<Vec<_>>().join(", "))]
    OpenFormula(BTreeSet<String>),
    #[error(transparent)]
    Punch(#[from] PunchError),
}

/// Evaluates `f` in the partial meadow obtained from `m` by `variant`.
pub fn eval_formula<M: Meadow>(
    f: &Formula,
    cfg: &LogicConfig<M::Elem>,
    variant: PunchVariant,
    m: &M,
    a: &Assignment<M::Elem>,
) -> Result<TruthValue3, LogicError> {
    if cfg.domain.is_empty() {
        return Err(LogicError::EmptyDomain);
    }
    let mut a = a.clone();
    eval_in(f, cfg, variant, m, &mut a)
}

fn eval_in<M: Meadow>(
    f: &Formula,
    cfg: &LogicConfig<M::Elem>,
    variant: PunchVariant,
    m: &M,
    a: &mut Assignment<M::Elem>,
) -> Result<TruthValue3, LogicError> {
    let c = cfg.connectives;
    Ok(match f {
        Formula::Eq(l, r) => {
            let lv = punch_eval(m, l, variant, a)?;
            let rv = punch_eval(m, r, variant, a)?;
            cfg.equality.compare(&lv, &rv)
        }
        Formula::Not(x) => c.not(eval_in(x, cfg, variant, m, a)?),
        Formula::And(x, y) => {
            let (x, y) = (eval_in(x, cfg, variant, m, a)?, eval_in(y, cfg, variant, m, a)?);
            c.and(x, y)
        }
        Formula::Or(x, y) => {
            let (x, y) = (eval_in(x, cfg, variant, m, a)?, eval_in(y, cfg, variant, m, a)?);
            c.or(x, y)
        }
        Formula::Implies(x, y) => {
            let (x, y) = (eval_in(x, cfg, variant, m, a)?, eval_in(y, cfg, variant, m, a)?);
            c.implies(x, y)
        }
        Formula::Forall(v, body) | Formula::Exists(v, body) => {
            let saved = a.remove(v);
            let mut instances = Vec::with_capacity(cfg.domain.len());
            for d in &cfg.domain {
                a.insert(v.clone(), d.clone());
                instances.push(eval_in(body, cfg, variant, m, a)?);
            }
            restore(a, v, saved);
            match f {
                Formula::Forall(..) => cfg.quantifiers.forall(instances),
                _ => cfg.quantifiers.exists(instances),
            }
        }
    })
}

fn restore<V>(a: &mut Assignment<V>, v: &str, saved: Option<V>) {
    match saved {
        Some(x) => a.insert(v.to_string(), x),
        None => a.remove(v),
    };
}

/// Whether a sentence gets a classical truth value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwoValuedCheck {
    /// T or F.
    Compliant(TruthValue3),
    /// The sentence is U and may not be used.
    Violation,
}

pub fn two_valued_convention_check<M: Meadow>(
    f: &Formula,
    cfg: &LogicConfig<M::Elem>,
    variant: PunchVariant,
    m: &M,
) -> Result<TwoValuedCheck, LogicError> {
    let open = f.free_vars();
    if !open.is_empty() {
        return Err(LogicError::OpenFormula(open));
    }
    Ok(match eval_formula(f, cfg, variant, m, &Assignment::new())? {
        TruthValue3::U => TwoValuedCheck::Violation,
        v => TwoValuedCheck::Compliant(v),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Q0Value;
    use crate::semantics::Q0;
    use crate::term::SignatureId;
    use TruthValue3::{F, T, U};

    fn f(s: &str) -> Formula {
        parse_formula(s, SignatureId::Dmd).unwrap()
    }

    fn domain() -> Vec<Q0Value> {
        (0..3).map(Q0Value::from).collect()
    }

    fn cfg(eq: Equality, c: Connectives, q: Quantifiers) -> LogicConfig<Q0Value> {
        LogicConfig {
            equality: eq,
            connectives: c,
            quantifiers: q,
            domain: domain(),
        }
    }

    fn truth(s: &str, cfg: &LogicConfig<Q0Value>) -> TruthValue3 {
        eval_formula(&f(s), cfg, PunchVariant::DivZeroAll, &Q0, &Assignment::new()).unwrap()
    }

    #[test]
    fn equality_modes() {
        use Connectives::McCarthy as M;
        use Quantifiers::BochvarQ as B;
        assert_eq!(truth("1/0 = 1/0 + 1", &cfg(Equality::Strong, M, B)), T);
        assert_eq!(truth("1/0 = 1/0", &cfg(Equality::Existential, M, B)), F);
        assert_eq!(truth("1/0 = 1/0", &cfg(Equality::Weak, M, B)), U);
        assert_eq!(truth("1/0 = 1", &cfg(Equality::Strong, M, B)), F);
        assert_eq!(truth("1 = 1", &cfg(Equality::Existential, M, B)), T);
    }

    #[test]
    fn connective_claims() {
        let w = |c| cfg(Equality::Weak, c, Quantifiers::BochvarQ);
        let imp = "0 != 0 -> 0/0 = 1";
        assert_eq!(truth(imp, &w(Connectives::McCarthy)), T);
        assert_eq!(truth(imp, &w(Connectives::Bochvar)), U);
        let or = "0/0 = 1 | 0 = 0";
        assert_eq!(truth(or, &w(Connectives::McCarthy)), U);
        assert_eq!(truth(or, &w(Connectives::Kleene)), T);
        assert_eq!(truth(or, &w(Connectives::McCarthyReversed)), T);
    }

    #[test]
    fn quantifier_claims() {
        let k = cfg(Equality::Weak, Connectives::McCarthy, Quantifiers::KleeneQ);
        assert_eq!(truth("forall x. x/x = 1", &k), U);
        assert_eq!(truth("exists x. x/x = 1", &k), T);
        let b = cfg(Equality::Weak, Connectives::McCarthy, Quantifiers::BochvarQ);
        assert_eq!(truth("exists x. x/x = 1", &b), U);
    }

    #[test]
    fn two_valued_convention() {
        let l = LogicConfig::lpmd(domain());
        let check = |s: &str| {
            two_valued_convention_check(&f(s), &l, PunchVariant::DivZeroAll, &Q0).unwrap()
        };
        assert_eq!(check("forall x. x != 0 -> x/x = 1"), TwoValuedCheck::Compliant(T));
        assert_eq!(check("0 = 0 | 0/0 = 1"), TwoValuedCheck::Compliant(T));
        assert_eq!(check("forall x. x/x = 1"), TwoValuedCheck::Violation);
        assert!(matches!(
            two_valued_convention_check(&f("x = x"), &l, PunchVariant::DivZeroAll, &Q0),
            Err(LogicError::OpenFormula(_))
        ));
    }

    #[test]
    fn empty_domain_is_an_error() {
        let mut l = LogicConfig::lpmd(domain());
        l.domain.clear();
        assert_eq!(
            eval_formula(&f("1 = 1"), &l, PunchVariant::DivZeroAll, &Q0, &Assignment::new()),
            Err(LogicError::EmptyDomain)
        );
    }

    #[test]
    fn bound_variable_shadows_and_restores() {
        let l = LogicConfig::lpmd(domain());
        let a = crate::semantics::assignment([("x", Q0Value::from(5))]);
        let g = f("(exists x. x = 2) & x = 5");
        assert_eq!(eval_formula(&g, &l, PunchVariant::DivZeroAll, &Q0, &a).unwrap(), T);
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "forall x. x != 0 -> x / x = 1",
            "0 = 0 | 0 / 0 = 1",
            "~(1 = 1 & 0 = 0) | (exists y. y = 1)",
            "(1 = 1 -> 0 = 0) -> 1 = 0",
        ] {
            let g = f(s);
            assert_eq!(g.to_string(), s);
            assert_eq!(f(&g.to_string()), g);
        }
    }
}
