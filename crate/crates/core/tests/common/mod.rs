#![allow(dead_code)]

use std::collections::BTreeMap;

use meadow_core::random::{random_term, TermShape};
use meadow_core::term::free_vars;
use meadow_core::{SignatureId, Term};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

pub type Env = BTreeMap<String, BigRational>;

fn r(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Direct evaluation in the rationals with `0⁻¹ = 0` and `x ÷ 0 = 0`.
pub fn oracle_eval(t: &Term, env: &Env) -> BigRational {
    let recip = |v: BigRational| if v.is_zero() { v } else { v.recip() };
    match t {
        Term::Zero => BigRational::zero(),
        Term::One => BigRational::one(),
        Term::Var(v) => env[v].clone(),
        Term::Add(a, b) => oracle_eval(a, env) + oracle_eval(b, env),
        Term::Mul(a, b) => oracle_eval(a, env) * oracle_eval(b, env),
        Term::Neg(a) => -oracle_eval(a, env),
        Term::Inv(a) => recip(oracle_eval(a, env)),
        Term::Div(a, b) => oracle_eval(a, env) * recip(oracle_eval(b, env)),
        Term::Sub(a, b) => oracle_eval(a, env) - oracle_eval(b, env),
    }
}

/// Per-variable degree bounds `(numerator, denominator)` for a term over
/// `1 + · ⁻¹` read as a fraction of polynomials.
fn degree_bound(t: &Term, x: &str) -> (u32, u32) {
    match t {
        Term::Var(v) if v == x => (1, 0),
        Term::Var(_) | Term::One | Term::Zero => (0, 0),
        Term::Add(a, b) => {
            let ((an, ad), (bn, bd)) = (degree_bound(a, x), degree_bound(b, x));
            ((an + bd).max(bn + ad), ad + bd)
        }
        Term::Mul(a, b) => {
            let ((an, ad), (bn, bd)) = (degree_bound(a, x), degree_bound(b, x));
            (an + bn, ad + bd)
        }
        Term::Inv(a) => {
            let (n, d) = degree_bound(a, x);
            (d, n)
        }
        other => panic!("not an arithmetical term: {other:?}"),
    }
}

/// Deterministic identity test for `Σ_iamd` terms: the cross-multiplied
/// numerators agree as polynomials iff they agree on the grid
/// `{1, …, D_x + 1}` in each variable `x`, with `D_x` the degree bound of
/// the cross products in `x`.
pub fn grid_identity(t: &Term, u: &Term) -> bool {
    let mut vars: Vec<String> = free_vars(t).into_iter().collect();
    vars.extend(free_vars(u));
    vars.sort();
    vars.dedup();
    let bounds: Vec<i64> = vars
        .iter()
        .map(|x| {
            let ((tn, td), (un, ud)) = (degree_bound(t, x), degree_bound(u, x));
            i64::from((tn + ud).max(un + td)) + 1
        })
        .collect();
    let mut point = vec![1i64; vars.len()];
    loop {
        let env: Env = vars.iter().cloned().zip(point.iter().map(|&k| r(k))).collect();
        if oracle_eval(t, &env) != oracle_eval(u, &env) {
            return false;
        }
        let mut i = 0;
        loop {
            if i == point.len() {
                return true;
            }
            if point[i] < bounds[i] {
                point[i] += 1;
                break;
            }
            point[i] = 1;
            i += 1;
        }
    }
}

fn random_small<R: Rng>(rng: &mut R, vars: &[&str]) -> Term {
    random_term(
        rng,
        SignatureId::Iamd,
        vars,
        TermShape {
            max_depth: 1,
            leaf_prob: 0.5,
        },
    )
}

/// Applies one law of the arithmetical inversive meadows at a random
/// position, so the result is provably equal to `t`.
pub fn rewrite_once<R: Rng>(rng: &mut R, t: &Term, vars: &[&str]) -> Term {
    let children = t.children();
    if !children.is_empty() && rng.gen_bool(0.6) {
        let k = rng.gen_range(0..children.len());
        let new = rewrite_once(rng, children[k], vars);
        return match (t, k) {
            (Term::Add(_, b), 0) => Term::add(new, (**b).clone()),
            (Term::Add(a, _), _) => Term::add((**a).clone(), new),
            (Term::Mul(_, b), 0) => Term::mul(new, (**b).clone()),
            (Term::Mul(a, _), _) => Term::mul((**a).clone(), new),
            (Term::Inv(_), _) => Term::inv(new),
            _ => unreachable!(),
        };
    }
    match (rng.gen_range(0..6), t) {
        (0, Term::Add(a, b)) => Term::add((**b).clone(), (**a).clone()),
        (0, Term::Mul(a, b)) => Term::mul((**b).clone(), (**a).clone()),
        (1, Term::Mul(a, b)) => match &**b {
            Term::Add(c, d) => Term::add(
                Term::mul((**a).clone(), (**c).clone()),
                Term::mul((**a).clone(), (**d).clone()),
            ),
            _ => Term::mul((**a).clone(), (**b).clone()),
        },
        (2, Term::Inv(a)) => match &**a {
            Term::Mul(c, d) => Term::mul(Term::inv((**c).clone()), Term::inv((**d).clone())),
            Term::Inv(c) => (**c).clone(),
            _ => Term::inv(Term::inv(t.clone())),
        },
        (3, _) => {
            let s = random_small(rng, vars);
            Term::mul(t.clone(), Term::mul(s.clone(), Term::inv(s)))
        }
        (4, Term::Add(a, b)) => match &**a {
            Term::Add(c, d) => Term::add((**c).clone(), Term::add((**d).clone(), (**b).clone())),
            _ => Term::mul(t.clone(), Term::One),
        },
        _ => Term::mul(t.clone(), Term::One),
    }
}

/// A random term over `Σ_iamd` together with a partner that is either a
/// chain of sound rewrites of it, a perturbed chain, or an independent term.
pub fn iamd_pair<R: Rng>(rng: &mut R, vars: &[&str], max_depth: usize) -> (Term, Term) {
    loop {
        let shape = TermShape {
            max_depth: rng.gen_range(3..=max_depth),
            leaf_prob: 0.35,
        };
        let t = random_term(rng, SignatureId::Iamd, vars, shape);
        let u = match rng.gen_range(0..3) {
            0 => random_term(rng, SignatureId::Iamd, vars, shape),
            kind => {
                let mut u = t.clone();
                for _ in 0..rng.gen_range(1..4) {
                    u = rewrite_once(rng, &u, vars);
                }
                if kind == 2 {
                    u = Term::add(u, Term::mul(Term::One, Term::One));
                    if rng.gen_bool(0.5) {
                        u = Term::inv(Term::inv(u));
                    }
                }
                u
            }
        };
        if t.depth() <= max_depth && u.depth() <= max_depth {
            return (t, u);
        }
    }
}

pub fn env_from(pairs: &[(&str, BigRational)]) -> Env {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

pub fn to_big(q: &meadow_core::Q0Value) -> BigRational {
    q.as_big_rational().clone()
}

pub fn env_of(a: &meadow_core::Assignment<meadow_core::Q0Value>) -> Env {
    a.iter().map(|(k, v)| (k.clone(), to_big(v))).collect()
}

/// Squarefree test by trial division.
pub fn squarefree(n: u64) -> bool {
    (2..=n).take_while(|d| d * d <= n).all(|d| n % (d * d) != 0)
}

pub fn primes_below(n: u64) -> Vec<u64> {
    (2..n).filter(|&k| (2..k).take_while(|d| d * d <= k).all(|d| k % d != 0)).collect()
}
