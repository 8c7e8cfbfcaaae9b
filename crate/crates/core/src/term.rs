//! Terms over the meadow signatures.
//!
//! A single [`Term`] type covers every signature in this crate; which
//! constructors are admissible is decided separately by [`SignatureId`] and
//! [`conforms`]. Structural equality (`==`) is plain tree equality and does
//! not quotient by associativity or commutativity.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// A term over the union of all meadow signatures.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Zero,
    One,
    Var(String),
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
    /// Unary additive inverse.
    Neg(Box<Term>),
    /// Postfix multiplicative inverse.
    Inv(Box<Term>),
    Div(Box<Term>, Box<Term>),
    /// Binary subtraction. Only primitive in the reduced divisive signature;
    /// everywhere else `p - q` is read as `p + (-q)` by the parser.
    Sub(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn add(l: Term, r: Term) -> Term {
        Term::Add(Box::new(l), Box::new(r))
    }

    pub fn mul(l: Term, r: Term) -> Term {
        Term::Mul(Box::new(l), Box::new(r))
    }

    pub fn neg(t: Term) -> Term {
        Term::Neg(Box::new(t))
    }

    pub fn inv(t: Term) -> Term {
        Term::Inv(Box::new(t))
    }

    pub fn div(l: Term, r: Term) -> Term {
        Term::Div(Box::new(l), Box::new(r))
    }

    pub fn sub(l: Term, r: Term) -> Term {
        Term::Sub(Box::new(l), Box::new(r))
    }

    /// The constructor at the root, or `None` for a variable.
    pub fn head(&self) -> Option<Symbol> {
        Some(match self {
            Term::Zero => Symbol::Zero,
            Term::One => Symbol::One,
            Term::Var(_) => return None,
            Term::Add(..) => Symbol::Add,
            Term::Mul(..) => Symbol::Mul,
            Term::Neg(_) => Symbol::Neg,
            Term::Inv(_) => Symbol::Inv,
            Term::Div(..) => Symbol::Div,
            Term::Sub(..) => Symbol::Sub,
        })
    }

    /// Immediate subterms, left to right.
    pub fn children(&self) -> Vec<&Term> {
        match self {
            Term::Zero | Term::One | Term::Var(_) => vec![],
            Term::Neg(a) | Term::Inv(a) => vec![a],
            Term::Add(a, b) | Term::Mul(a, b) | Term::Div(a, b) | Term::Sub(a, b) => vec![a, b],
        }
    }

    pub fn is_closed(&self) -> bool {
        match self {
            Term::Zero | Term::One => true,
            Term::Var(_) => false,
            Term::Neg(a) | Term::Inv(a) => a.is_closed(),
            Term::Add(a, b) | Term::Mul(a, b) | Term::Div(a, b) | Term::Sub(a, b) => {
                a.is_closed() && b.is_closed()
            }
        }
    }

    /// Height of the tree; leaves have depth 0.
    pub fn depth(&self) -> usize {
        self.children()
            .into_iter()
            .map(|c| c.depth() + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        1 + self.children().into_iter().map(Term::size).sum::<usize>()
    }

    /// Whether any node satisfies `pred`.
    pub fn any(&self, pred: &impl Fn(&Term) -> bool) -> bool {
        pred(self) || self.children().into_iter().any(|c| c.any(pred))
    }

    /// If this term is literally `numeral(n)` for some `n`, returns `n`.
    pub fn as_numeral(&self) -> Option<u64> {
        match self {
            Term::Zero => Some(0),
            Term::One => Some(1),
            Term::Add(l, r) if **r == Term::One => match l.as_numeral()? {
                0 => None,
                n => Some(n + 1),
            },
            _ => None,
        }
    }
}

/// The non-variable symbols that can occur in a [`Term`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Zero,
    One,
    Add,
    Mul,
    Neg,
    Inv,
    Div,
    Sub,
}

impl Symbol {
    pub const ALL: [Symbol; 8] = [
        Symbol::Zero,
        Symbol::One,
        Symbol::Add,
        Symbol::Mul,
        Symbol::Neg,
        Symbol::Inv,
        Symbol::Div,
        Symbol::Sub,
    ];

    pub fn arity(self) -> usize {
        match self {
            Symbol::Zero | Symbol::One => 0,
            Symbol::Neg | Symbol::Inv => 1,
            Symbol::Add | Symbol::Mul | Symbol::Div | Symbol::Sub => 2,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symbol::Zero => "0",
            Symbol::One => "1",
            Symbol::Add => "+",
            Symbol::Mul => "·",
            Symbol::Neg => "− (unary)",
            Symbol::Inv => "⁻¹",
            Symbol::Div => "÷",
            Symbol::Sub => "− (binary)",
        })
    }
}

/// The signatures studied for meadows and their arithmetical variants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignatureId {
    /// Commutative rings with identity: `0 1 + · −`.
    Cr,
    /// Inversive meadows: `Cr ∪ {⁻¹}`.
    Imd,
    /// Divisive meadows: `Cr ∪ {÷}`.
    Dmd,
    /// Inversive arithmetical meadows: `1 + · ⁻¹`.
    Iamd,
    /// Divisive arithmetical meadows: `1 + · ÷`.
    Damd,
    /// Inversive arithmetical meadows with zero: `0 1 + · ⁻¹`.
    Iamdz,
    /// Divisive arithmetical meadows with zero: `0 1 + · ÷`.
    Damdz,
    /// Reduced divisive meadows: `1`, binary `−`, `÷`.
    Rd,
}

impl SignatureId {
    pub const ALL: [SignatureId; 8] = [
        SignatureId::Cr,
        SignatureId::Imd,
        SignatureId::Dmd,
        SignatureId::Iamd,
        SignatureId::Damd,
        SignatureId::Iamdz,
        SignatureId::Damdz,
        SignatureId::Rd,
    ];

    pub fn symbols(self) -> &'static [Symbol] {
        use Symbol::*;
        match self {
            SignatureId::Cr => &[Zero, One, Add, Mul, Neg],
            SignatureId::Imd => &[Zero, One, Add, Mul, Neg, Inv],
            SignatureId::Dmd => &[Zero, One, Add, Mul, Neg, Div],
            SignatureId::Iamd => &[One, Add, Mul, Inv],
            SignatureId::Damd => &[One, Add, Mul, Div],
            SignatureId::Iamdz => &[Zero, One, Add, Mul, Inv],
            SignatureId::Damdz => &[Zero, One, Add, Mul, Div],
            SignatureId::Rd => &[One, Sub, Div],
        }
    }

    pub fn contains(self, s: Symbol) -> bool {
        self.symbols().contains(&s)
    }

    /// Short lowercase name, as accepted on the command line.
    pub fn name(self) -> &'static str {
        match self {
            SignatureId::Cr => "cr",
            SignatureId::Imd => "imd",
            SignatureId::Dmd => "dmd",
            SignatureId::Iamd => "iamd",
            SignatureId::Damd => "damd",
            SignatureId::Iamdz => "iamdz",
            SignatureId::Damdz => "damdz",
            SignatureId::Rd => "rd",
        }
    }

    pub fn from_name(name: &str) -> Option<SignatureId> {
        SignatureId::ALL.into_iter().find(|s| s.name() == name)
    }

    /// Whether binary `-` in surface syntax is the primitive [`Term::Sub`].
    pub fn primitive_sub(self) -> bool {
        self == SignatureId::Rd
    }
}

impl fmt::Display for SignatureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Σ_{}", self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{symbol} not in {signature}")]
pub struct SignatureError {
    pub symbol: Symbol,
    pub signature: SignatureId,
}

/// The first symbol of `t` (pre-order) that is outside `sig`, if any.
pub fn first_violation(t: &Term, sig: SignatureId) -> Option<Symbol> {
    if let Some(h) = t.head() {
        if !sig.contains(h) {
            return Some(h);
        }
    }
    t.children()
        .into_iter()
        .find_map(|c| first_violation(c, sig))
}

pub fn conforms(t: &Term, sig: SignatureId) -> bool {
    first_violation(t, sig).is_none()
}

/// Like [`conforms`], but reports the offending symbol.
pub fn check_signature(t: &Term, sig: SignatureId) -> Result<(), SignatureError> {
    match first_violation(t, sig) {
        None => Ok(()),
        Some(symbol) => Err(SignatureError {
            symbol,
            signature: sig,
        }),
    }
}

/// The numeral `n`: `0`, `1`, `1 + 1`, `(1 + 1) + 1`, ...
pub fn numeral(n: u64) -> Term {
    match n {
        0 => Term::Zero,
        _ => (1..n).fold(Term::One, |acc, _| Term::add(acc, Term::One)),
    }
}

/// `t^0 = 1`, `t^(n+1) = t^n · t`.
pub fn power(t: &Term, n: u32) -> Term {
    (0..n).fold(Term::One, |acc, _| Term::mul(acc, t.clone()))
}

/// Replaces every occurrence of the variable `v` by `replacement`.
pub fn subst(t: &Term, v: &str, replacement: &Term) -> Term {
    let go = |a: &Term| Box::new(subst(a, v, replacement));
    match t {
        Term::Var(name) if name == v => replacement.clone(),
        Term::Zero | Term::One | Term::Var(_) => t.clone(),
        Term::Add(a, b) => Term::Add(go(a), go(b)),
        Term::Mul(a, b) => Term::Mul(go(a), go(b)),
        Term::Neg(a) => Term::Neg(go(a)),
        Term::Inv(a) => Term::Inv(go(a)),
        Term::Div(a, b) => Term::Div(go(a), go(b)),
        Term::Sub(a, b) => Term::Sub(go(a), go(b)),
    }
}

pub fn free_vars(t: &Term) -> BTreeSet<String> {
    fn walk(t: &Term, out: &mut BTreeSet<String>) {
        if let Term::Var(v) = t {
            out.insert(v.clone());
        }
        for c in t.children() {
            walk(c, out);
        }
    }
    let mut out = BTreeSet::new();
    walk(t, &mut out);
    out
}

/// Whether `name` is a legal variable identifier: `[a-z][a-z0-9_]*`, not a
/// reserved word.
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some('a'..='z'))
        && chars.all(|c| matches!(c, 'a'..='z' | '0'..='9' | '_'))
        && !RESERVED.contains(&name)
}

/// Words that the term and formula grammars use as keywords.
pub const RESERVED: &[&str] = &["inv", "forall", "exists"];

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Term {
        Term::var("x")
    }

    #[test]
    fn numerals_are_left_nested() {
        assert_eq!(numeral(0), Term::Zero);
        assert_eq!(numeral(1), Term::One);
        assert_eq!(numeral(2), Term::add(Term::One, Term::One));
        assert_eq!(
            numeral(3),
            Term::add(Term::add(Term::One, Term::One), Term::One)
        );
        for n in 0..20 {
            assert_eq!(numeral(n).as_numeral(), Some(n));
        }
        assert_eq!(Term::add(Term::Zero, Term::One).as_numeral(), None);
        assert_eq!(Term::add(Term::One, numeral(2)).as_numeral(), None);
    }

    #[test]
    fn powers() {
        assert_eq!(power(&x(), 0), Term::One);
        assert_eq!(power(&x(), 2), Term::mul(Term::mul(Term::One, x()), x()));
        assert_eq!(
            power(&numeral(2), 1),
            Term::mul(Term::One, Term::add(Term::One, Term::One))
        );
    }

    #[test]
    fn conformance() {
        assert!(!conforms(&Term::inv(x()), SignatureId::Dmd));
        assert!(conforms(&Term::div(Term::One, Term::Zero), SignatureId::Dmd));
        assert!(!conforms(&Term::neg(Term::One), SignatureId::Iamd));
        assert!(!conforms(&Term::Zero, SignatureId::Iamd));
        assert!(conforms(&Term::sub(Term::One, x()), SignatureId::Rd));
        assert!(!conforms(&Term::sub(Term::One, x()), SignatureId::Imd));
        assert!(!conforms(&Term::Zero, SignatureId::Rd));
        let err = check_signature(&Term::div(x(), x()), SignatureId::Imd).unwrap_err();
        assert_eq!(err.to_string(), "÷ not in Σ_imd");
    }

    #[test]
    fn conformance_is_monotone_along_the_arithmetical_chain() {
        use SignatureId::*;
        for s in Iamd.symbols() {
            assert!(Iamdz.contains(*s));
        }
        for s in Iamdz.symbols() {
            assert!(Imd.contains(*s));
        }
        for s in Damd.symbols() {
            assert!(Damdz.contains(*s));
        }
        for s in Damdz.symbols() {
            assert!(Dmd.contains(*s));
        }
    }

    #[test]
    fn substitution() {
        let t = Term::mul(x(), Term::inv(x()));
        assert_eq!(
            subst(&t, "x", &Term::Zero),
            Term::mul(Term::Zero, Term::inv(Term::Zero))
        );
        assert_eq!(subst(&Term::var("y"), "x", &Term::One), Term::var("y"));
        assert_eq!(
            subst(&Term::add(x(), x()), "x", &numeral(2)),
            Term::add(numeral(2), numeral(2))
        );
    }

    #[test]
    fn free_variables() {
        let t = Term::mul(x(), Term::inv(Term::var("y")));
        assert_eq!(
            free_vars(&t).into_iter().collect::<Vec<_>>(),
            vec!["x".to_string(), "y".to_string()]
        );
        assert!(free_vars(&numeral(5)).is_empty());
        assert_eq!(free_vars(&Term::add(x(), x())).len(), 1);
    }

    #[test]
    fn identifiers() {
        assert!(is_identifier("x"));
        assert!(is_identifier("x_1"));
        assert!(!is_identifier("X"));
        assert!(!is_identifier("1x"));
        assert!(!is_identifier(""));
        assert!(!is_identifier("inv"));
    }
}
