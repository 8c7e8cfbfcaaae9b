//! Normal forms and decision procedures for arithmetical meadows.
//!
//! Over `{1, +, ·, ⁻¹}` every term equals `r₁ · r₂⁻¹` with `r₁, r₂`
//! inverse-free, and two terms are provably equal exactly when the
//! cross-multiplied polynomials `t₁·u₂` and `u₁·t₂` coincide after
//! collecting like terms. With zero added, terms first collapse to `0` or to
//! a zero-free term, and the general inverse law reduces the open case to a
//! finite split over which variables are zero.

mod poly;

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use thiserror::Error;

use crate::projection::{project, ProjectionId};
use crate::term::{check_signature, free_vars, subst, SignatureError, SignatureId, Term};

pub use poly::{Monomial, PolyFrac, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalizeError {
    #[error(transparent)]
    Signature(#[from] SignatureError),
    #[error("term contains an inverse; expected an inverse-free term")]
    InverseFound,
    #[error("term has free variables; expected a closed term")]
    OpenTerm,
    #[error("normal forms are defined for Σ_iamd and Σ_iamdz only, not {0}")]
    UnsupportedSignature(SignatureId),
    #[error(
        "deciding E_iamdz without the general inverse law is an open problem; \
         use iamdz-gil"
    )]
    OpenProblem,
}

/// Splits an arithmetical term into numerator and denominator polynomials.
pub fn to_polyfrac(t: &Term) -> Result<PolyFrac, NormalizeError> {
    check_signature(t, SignatureId::Iamd)?;
    Ok(polyfrac(t))
}

fn polyfrac(t: &Term) -> PolyFrac {
    match t {
        Term::One => PolyFrac::new(Polynomial::one(), Polynomial::one()),
        Term::Var(v) => PolyFrac::new(Polynomial::var(v.clone()), Polynomial::one()),
        Term::Add(p, q) => {
            let (p, q) = (polyfrac(p), polyfrac(q));
            PolyFrac::new(
                p.num.mul(&q.den).add(&q.num.mul(&p.den)),
                p.den.mul(&q.den),
            )
        }
        Term::Mul(p, q) => {
            let (p, q) = (polyfrac(p), polyfrac(q));
            PolyFrac::new(p.num.mul(&q.num), p.den.mul(&q.den))
        }
        Term::Inv(p) => {
            let p = polyfrac(p);
            PolyFrac::new(p.den, p.num)
        }
        _ => unreachable!("signature checked"),
    }
}

/// Fully expands an inverse-free arithmetical term.
pub fn expand_poly(t: &Term) -> Result<Polynomial, NormalizeError> {
    check_signature(t, SignatureId::Iamd)?;
    if t.any(&|s| matches!(s, Term::Inv(_))) {
        return Err(NormalizeError::InverseFound);
    }
    Ok(expand(t))
}

fn expand(t: &Term) -> Polynomial {
    match t {
        Term::One => Polynomial::one(),
        Term::Var(v) => Polynomial::var(v.clone()),
        Term::Add(p, q) => expand(p).add(&expand(q)),
        Term::Mul(p, q) => expand(p).mul(&expand(q)),
        _ => unreachable!("checked inverse-free Σ_iamd term"),
    }
}

/// The evidence behind a [`decide_iamd`] verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IamdDecision {
    pub holds: bool,
    pub left: PolyFrac,
    pub right: PolyFrac,
    /// `t₁ · u₂`.
    pub left_cross: Polynomial,
    /// `u₁ · t₂`.
    pub right_cross: Polynomial,
}

pub fn decide_iamd_report(t: &Term, u: &Term) -> Result<IamdDecision, NormalizeError> {
    let left = to_polyfrac(t)?;
    let right = to_polyfrac(u)?;
    let left_cross = left.num.mul(&right.den);
    let right_cross = right.num.mul(&left.den);
    Ok(IamdDecision {
        holds: left_cross == right_cross,
        left,
        right,
        left_cross,
        right_cross,
    })
}

/// Whether `E_iamd ⊢ t = u`.
pub fn decide_iamd(t: &Term, u: &Term) -> Result<bool, NormalizeError> {
    Ok(decide_iamd_report(t, u)?.holds)
}

/// Normal form of a closed arithmetical term: `0`, or `n · m⁻¹` in lowest
/// terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NormalForm {
    ZeroNF,
    /// Coprime positive numerator and denominator.
    Frac(BigUint, BigUint),
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalForm::ZeroNF => f.write_str("0"),
            NormalForm::Frac(n, m) if *m == BigUint::from(1u32) => write!(f, "{n}"),
            NormalForm::Frac(n, m) => write!(f, "{n}/{m}"),
        }
    }
}

pub fn normal_form_closed(t: &Term, sig: SignatureId) -> Result<NormalForm, NormalizeError> {
    if !matches!(sig, SignatureId::Iamd | SignatureId::Iamdz) {
        return Err(NormalizeError::UnsupportedSignature(sig));
    }
    check_signature(t, sig)?;
    if !t.is_closed() {
        return Err(NormalizeError::OpenTerm);
    }
    let s = match zero_eliminate(t)? {
        ZeroElim::Zero => return Ok(NormalForm::ZeroNF),
        ZeroElim::Term(s) => s,
    };
    let pf = polyfrac(&s);
    let (n, m) = match (pf.num.as_constant(), pf.den.as_constant()) {
        (Some(n), Some(m)) => (n.clone(), m.clone()),
        _ => unreachable!("closed terms expand to constants"),
    };
    let g = n.gcd(&m);
    Ok(NormalForm::Frac(n / &g, m / &g))
}

/// Result of removing `0` from a term over `{0, 1, +, ·, ⁻¹}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeroElim {
    /// The term equals `0`.
    Zero,
    /// An equal term without `0`.
    Term(Term),
}

/// Rewrites with `0 · x = 0`, `x + 0 = x` and `0⁻¹ = 0` (modulo
/// commutativity) until no `0` is left or the whole term is `0`.
pub fn zero_eliminate(t: &Term) -> Result<ZeroElim, NormalizeError> {
    check_signature(t, SignatureId::Iamdz)?;
    Ok(eliminate(t))
}

fn eliminate(t: &Term) -> ZeroElim {
    use ZeroElim::{Term as T, Zero};
    match t {
        Term::Zero => Zero,
        Term::One | Term::Var(_) => T(t.clone()),
        Term::Add(p, q) => match (eliminate(p), eliminate(q)) {
            (Zero, r) | (r, Zero) => r,
            (T(p), T(q)) => T(Term::add(p, q)),
        },
        Term::Mul(p, q) => match (eliminate(p), eliminate(q)) {
            (Zero, _) | (_, Zero) => Zero,
            (T(p), T(q)) => T(Term::mul(p, q)),
        },
        Term::Inv(p) => match eliminate(p) {
            Zero => Zero,
            T(p) => T(Term::inv(p)),
        },
        _ => unreachable!("signature checked"),
    }
}

/// Whether `t = u` follows from `E_iamdz`, the alternative law
/// `(x·(x+y))·(x·(x+y))⁻¹ = x·x⁻¹` and the general inverse law
/// `x ≠ 0 ⟹ x·x⁻¹ = 1`.
pub fn decide_iamdz_gil(t: &Term, u: &Term) -> Result<bool, NormalizeError> {
    check_signature(t, SignatureId::Iamdz)?;
    check_signature(u, SignatureId::Iamdz)?;
    Ok(gil(t, u))
}

fn gil(t: &Term, u: &Term) -> bool {
    if t.is_closed() && u.is_closed() {
        let nf = |x| normal_form_closed(x, SignatureId::Iamdz).expect("closed Σ_iamdz term");
        return nf(t) == nf(u);
    }
    match (eliminate(t), eliminate(u)) {
        (ZeroElim::Zero, ZeroElim::Zero) => true,
        (ZeroElim::Zero, _) | (_, ZeroElim::Zero) => false,
        (ZeroElim::Term(s), ZeroElim::Term(s2)) => {
            let vars = free_vars(&s).into_iter().chain(free_vars(&s2));
            let mut vars: Vec<String> = vars.collect();
            vars.sort();
            vars.dedup();
            vars.iter()
                .all(|x| gil(&subst(&s, x, &Term::Zero), &subst(&s2, x, &Term::Zero)))
                && polyfrac_equal(&s, &s2)
        }
    }
}

fn polyfrac_equal(t: &Term, u: &Term) -> bool {
    let (a, b) = (polyfrac(t), polyfrac(u));
    a.num.mul(&b.den) == b.num.mul(&a.den)
}

/// The theories with a decision procedure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theory {
    Iamd,
    /// Without the general inverse law. No procedure is known.
    Iamdz,
    IamdzGil,
    Damd,
    DamdzGil,
}

impl Theory {
    pub const ALL: [Theory; 5] = [
        Theory::Iamd,
        Theory::Iamdz,
        Theory::IamdzGil,
        Theory::Damd,
        Theory::DamdzGil,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theory::Iamd => "iamd",
            Theory::Iamdz => "iamdz",
            Theory::IamdzGil => "iamdz-gil",
            Theory::Damd => "damd",
            Theory::DamdzGil => "damdz-gil",
        }
    }

    pub fn from_name(name: &str) -> Option<Theory> {
        Theory::ALL.into_iter().find(|t| t.name() == name)
    }

    pub fn signature(self) -> SignatureId {
        match self {
            Theory::Iamd => SignatureId::Iamd,
            Theory::Iamdz | Theory::IamdzGil => SignatureId::Iamdz,
            Theory::Damd => SignatureId::Damd,
            Theory::DamdzGil => SignatureId::Damdz,
        }
    }
}

/// The divisive theories handled by [`decide_divisive`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DivisiveTheory {
    Damd,
    DamdzGil,
}

/// Decides a divisive equation by projecting both sides to inversive
/// notation.
pub fn decide_divisive(t: &Term, u: &Term, theory: DivisiveTheory) -> Result<bool, NormalizeError> {
    let sig = match theory {
        DivisiveTheory::Damd => SignatureId::Damd,
        DivisiveTheory::DamdzGil => SignatureId::Damdz,
    };
    check_signature(t, sig)?;
    check_signature(u, sig)?;
    let t = project(t, ProjectionId::DmnToImn)?;
    let u = project(u, ProjectionId::DmnToImn)?;
    match theory {
        DivisiveTheory::Damd => decide_iamd(&t, &u),
        DivisiveTheory::DamdzGil => decide_iamdz_gil(&t, &u),
    }
}

/// Dispatches on `theory`.
pub fn decide(t: &Term, u: &Term, theory: Theory) -> Result<bool, NormalizeError> {
    match theory {
        Theory::Iamd => decide_iamd(t, u),
        Theory::Iamdz => Err(NormalizeError::OpenProblem),
        Theory::IamdzGil => decide_iamdz_gil(t, u),
        Theory::Damd => decide_divisive(t, u, DivisiveTheory::Damd),
        Theory::DamdzGil => decide_divisive(t, u, DivisiveTheory::DamdzGil),
    }
}
