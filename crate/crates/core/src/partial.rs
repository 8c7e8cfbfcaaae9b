//! Partial meadows obtained by making inverse or division at zero undefined.
//!
//! Evaluation is strict: an undefined operand makes every enclosing
//! operation undefined.

use std::fmt;

use thiserror::Error;

use crate::projection::{project, ProjectionId};
use crate::rational::Q0Value;
use crate::semantics::{Assignment, EvalError, Meadow, Q0};
use crate::term::{check_signature, SignatureError, SignatureId, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PunchVariant {
    /// `0⁻¹` is undefined.
    InvZero,
    /// `q ÷ 0` is undefined for every `q`.
    DivZeroAll,
    /// `q ÷ 0` is undefined for `q ≠ 0`; `0 ÷ 0 = 0`.
    DivZeroNonzeroNum,
}

impl PunchVariant {
    pub const ALL: [PunchVariant; 3] = [
        PunchVariant::InvZero,
        PunchVariant::DivZeroAll,
        PunchVariant::DivZeroNonzeroNum,
    ];

    pub fn signature(self) -> SignatureId {
        match self {
            PunchVariant::InvZero => SignatureId::Imd,
            PunchVariant::DivZeroAll | PunchVariant::DivZeroNonzeroNum => SignatureId::Dmd,
        }
    }

    /// Command-line name: `inv0`, `div0` or `div0lib`.
    pub fn name(self) -> &'static str {
        match self {
            PunchVariant::InvZero => "inv0",
            PunchVariant::DivZeroAll => "div0",
            PunchVariant::DivZeroNonzeroNum => "div0lib",
        }
    }

    pub fn from_name(name: &str) -> Option<PunchVariant> {
        PunchVariant::ALL.into_iter().find(|v| v.name() == name)
    }

    fn is_divisive(self) -> bool {
        self != PunchVariant::InvZero
    }
}

impl fmt::Display for PunchVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PartialValue<V> {
    Defined(V),
    Undefined,
}

impl<V> PartialValue<V> {
    pub fn is_defined(&self) -> bool {
        matches!(self, PartialValue::Defined(_))
    }

    pub fn defined(&self) -> Option<&V> {
        match self {
            PartialValue::Defined(v) => Some(v),
            PartialValue::Undefined => None,
        }
    }

    pub fn into_option(self) -> Option<V> {
        match self {
            PartialValue::Defined(v) => Some(v),
            PartialValue::Undefined => None,
        }
    }
}

impl<V> From<Option<V>> for PartialValue<V> {
    fn from(o: Option<V>) -> Self {
        o.map_or(PartialValue::Undefined, PartialValue::Defined)
    }
}

impl<V: fmt::Display> fmt::Display for PartialValue<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartialValue::Defined(v) => write!(f, "{v}"),
            PartialValue::Undefined => f.write_str("undefined"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PunchError {
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Signature(#[from] SignatureError),
}

/// Evaluates `t` in the partial meadow obtained from `m` by `variant`.
pub fn punch_eval<M: Meadow>(
    m: &M,
    t: &Term,
    variant: PunchVariant,
    a: &Assignment<M::Elem>,
) -> Result<PartialValue<M::Elem>, PunchError> {
    check_signature(t, variant.signature())?;
    Ok(go(m, t, variant, a)?.into())
}

/// [`punch_eval`] in the rationals.
pub fn punch_eval_q0(
    t: &Term,
    variant: PunchVariant,
    a: &Assignment<Q0Value>,
) -> Result<PartialValue<Q0Value>, PunchError> {
    punch_eval(&Q0, t, variant, a)
}

fn go<M: Meadow>(
    m: &M,
    t: &Term,
    variant: PunchVariant,
    a: &Assignment<M::Elem>,
) -> Result<Option<M::Elem>, EvalError> {
    let kids = t
        .children()
        .into_iter()
        .map(|c| go(m, c, variant, a))
        .collect::<Result<Vec<_>, _>>()?;
    let Some(k) = kids.into_iter().collect::<Option<Vec<_>>>() else {
        return Ok(None);
    };
    Ok(match t {
        Term::Zero => Some(m.zero()),
        Term::One => Some(m.one()),
        Term::Var(v) => Some(
            a.get(v)
                .cloned()
                .ok_or_else(|| EvalError::MissingAssignment(v.clone()))?,
        ),
        Term::Add(..) => Some(m.add(&k[0], &k[1])),
        Term::Mul(..) => Some(m.mul(&k[0], &k[1])),
        Term::Neg(_) => Some(m.neg(&k[0])),
        Term::Sub(..) => Some(m.sub(&k[0], &k[1])),
        Term::Inv(_) => {
            if variant == PunchVariant::InvZero && m.is_zero(&k[0]) {
                None
            } else {
                Some(m.inv(&k[0]))
            }
        }
        Term::Div(..) => {
            let undefined = m.is_zero(&k[1])
                && match variant {
                    PunchVariant::DivZeroAll => true,
                    PunchVariant::DivZeroNonzeroNum => !m.is_zero(&k[0]),
                    PunchVariant::InvZero => false,
                };
            if undefined {
                None
            } else {
                Some(m.div(&k[0], &k[1]))
            }
        }
    })
}

/// Outcome of comparing a punched meadow with the projection of another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecoveryReport<V> {
    /// `t` translated into the source notation.
    pub projected: Term,
    /// `t` evaluated under the destination variant.
    pub dst_value: PartialValue<V>,
    /// The projected term evaluated under the source variant.
    pub src_value: PartialValue<V>,
    pub agree: bool,
}

/// Checks whether the projection recovers the `dst` partial meadow from the
/// `src` one at `t`: compares `t` under `dst` with the projection of `t`
/// evaluated under `src`, in the rationals.
///
/// The projection direction follows the two variants' notations; when both
/// use the same notation the term is compared with itself.
pub fn recovery_check(
    src: PunchVariant,
    dst: PunchVariant,
    t: &Term,
    a: &Assignment<Q0Value>,
) -> Result<RecoveryReport<Q0Value>, PunchError> {
    recovery_check_in(&Q0, src, dst, t, a)
}

/// [`recovery_check`] in an arbitrary meadow.
pub fn recovery_check_in<M: Meadow>(
    m: &M,
    src: PunchVariant,
    dst: PunchVariant,
    t: &Term,
    a: &Assignment<M::Elem>,
) -> Result<RecoveryReport<M::Elem>, PunchError> {
    let dst_value = punch_eval(m, t, dst, a)?;
    let projected = match (src.is_divisive(), dst.is_divisive()) {
        (false, true) => project(t, ProjectionId::DmnToImn)?,
        (true, false) => project(t, ProjectionId::ImnToDmn)?,
        _ => t.clone(),
    };
    let src_value = punch_eval(m, &projected, src, a)?;
    Ok(RecoveryReport {
        agree: src_value == dst_value,
        projected,
        dst_value,
        src_value,
    })
}
