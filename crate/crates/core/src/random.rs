//! Random terms and assignments for fuzzing and property tests.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::rational::Q0Value;
use crate::semantics::Assignment;
use crate::term::{SignatureId, Symbol, Term};

/// Shape parameters for [`random_term`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TermShape {
    /// Maximum nesting depth; a leaf has depth 0.
    pub max_depth: usize,
    /// Probability of stopping at a leaf above the depth limit.
    pub leaf_prob: f64,
}

impl Default for TermShape {
    fn default() -> Self {
        TermShape {
            max_depth: 6,
            leaf_prob: 0.35,
        }
    }
}

/// A random term over `sig` with variables drawn from `vars`.
pub fn random_term<R: Rng + ?Sized>(
    rng: &mut R,
    sig: SignatureId,
    vars: &[&str],
    shape: TermShape,
) -> Term {
    let (leaves, ops): (Vec<Symbol>, Vec<Symbol>) =
        sig.symbols().iter().partition(|s| s.arity() == 0);
    gen(rng, &leaves, &ops, vars, shape.max_depth, shape.leaf_prob)
}

fn gen<R: Rng + ?Sized>(
    rng: &mut R,
    leaves: &[Symbol],
    ops: &[Symbol],
    vars: &[&str],
    depth: usize,
    leaf_prob: f64,
) -> Term {
    if depth == 0 || rng.gen_bool(leaf_prob) {
        let k = rng.gen_range(0..leaves.len() + vars.len());
        return match leaves.get(k) {
            Some(Symbol::Zero) => Term::Zero,
            Some(_) => Term::One,
            None => Term::var(vars[k - leaves.len()]),
        };
    }
    let op = *ops.choose(rng).expect("signature has an operation");
    let mut sub = || gen(rng, leaves, ops, vars, depth - 1, leaf_prob);
    match op {
        Symbol::Neg => Term::neg(sub()),
        Symbol::Inv => Term::inv(sub()),
        Symbol::Add => Term::add(sub(), sub()),
        Symbol::Mul => Term::mul(sub(), sub()),
        Symbol::Div => Term::div(sub(), sub()),
        Symbol::Sub => Term::sub(sub(), sub()),
        Symbol::Zero | Symbol::One => unreachable!("leaves are separated"),
    }
}

/// A rational that is `0`, `1` and `-1` with probability 1/8 each and
/// otherwise a fraction with numerator and denominator of modest size.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Q0Value {
    match rng.gen_range(0..8) {
        0 => Q0Value::zero(),
        1 => Q0Value::one(),
        2 => -Q0Value::one(),
        _ => {
            let n: i64 = rng.gen_range(-20..=20);
            let d: i64 = rng.gen_range(1..=12);
            Q0Value::new(n, d)
        }
    }
}

/// A non-negative rational that is `0` with probability `zero_prob`.
pub fn random_nonneg_rational<R: Rng + ?Sized>(rng: &mut R, zero_prob: f64) -> Q0Value {
    if rng.gen_bool(zero_prob) {
        return Q0Value::zero();
    }
    let n: i64 = rng.gen_range(1..=20);
    let d: i64 = rng.gen_range(1..=12);
    Q0Value::new(n, d)
}

pub fn random_assignment<R: Rng + ?Sized>(rng: &mut R, vars: &[&str]) -> Assignment<Q0Value> {
    vars.iter()
        .map(|v| (v.to_string(), random_rational(rng)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::conforms;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn terms_conform_and_respect_depth() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for sig in SignatureId::ALL {
            for _ in 0..200 {
                let t = random_term(&mut rng, sig, &["x", "y"], TermShape::default());
                assert!(conforms(&t, sig), "{t:?} in {sig}");
                assert!(t.depth() <= 6);
            }
        }
    }

    #[test]
    fn special_values_are_frequent() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let samples: Vec<Q0Value> = (0..4000).map(|_| random_rational(&mut rng)).collect();
        for special in [Q0Value::zero(), Q0Value::one(), -Q0Value::one()] {
            let hits = samples.iter().filter(|q| **q == special).count();
            assert!(hits >= 4000 / 8, "{special}: {hits}");
        }
    }
}
