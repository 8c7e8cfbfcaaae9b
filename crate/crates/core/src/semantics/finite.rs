use std::fmt;

use thiserror::Error;

use super::{eval, Assignment, Meadow};
use crate::axioms::{Equation, PresentationId};
use crate::term::free_vars;

/// A finite commutative ring with identity on the carrier `0..n`, given by
/// its operation tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRing {
    n: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
    one: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not squarefree")]
    NotSquarefree(u64),
    #[error("the carrier must be nonempty")]
    Empty,
    #[error("table `{table}` is not total over 0..{n}")]
    NotTotal { table: &'static str, n: usize },
}

impl FiniteRing {
    /// Builds a ring from explicit tables. `add` and `mul` are row-major
    /// `n × n`. Only totality is checked; use [`check_equations`] for the
    /// ring laws.
    pub fn from_tables(
        n: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
        neg: Vec<usize>,
        zero: usize,
        one: usize,
    ) -> Result<FiniteRing, ModelError> {
        if n == 0 {
            return Err(ModelError::Empty);
        }
        let total = |table: &'static str, t: &[usize], len: usize| {
            if t.len() == len && t.iter().all(|&v| v < n) {
                Ok(())
            } else {
                Err(ModelError::NotTotal { table, n })
            }
        };
        total("+", &add, n * n)?;
        total("·", &mul, n * n)?;
        total("−", &neg, n)?;
        total("0", &[zero], 1)?;
        total("1", &[one], 1)?;
        Ok(FiniteRing {
            n,
            add,
            mul,
            neg,
            zero,
            one,
        })
    }

    /// The ring of integers modulo `n`.
    pub fn zn(n: usize) -> Result<FiniteRing, ModelError> {
        if n == 0 {
            return Err(ModelError::Empty);
        }
        let cells = |f: &dyn Fn(usize, usize) -> usize| -> Vec<usize> {
            (0..n * n).map(|i| f(i / n, i % n)).collect()
        };
        FiniteRing::from_tables(
            n,
            cells(&|a, b| (a + b) % n),
            cells(&|a, b| (a * b) % n),
            (0..n).map(|a| (n - a) % n).collect(),
            0,
            1 % n,
        )
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    /// Adds an inverse table. Only totality is checked.
    pub fn with_inverse(self, inv: Vec<usize>) -> Result<FiniteMeadow, ModelError> {
        if inv.len() != self.n || inv.iter().any(|&v| v >= self.n) {
            return Err(ModelError::NotTotal {
                table: "⁻¹",
                n: self.n,
            });
        }
        Ok(FiniteMeadow { ring: self, inv })
    }
}

/// A finite ring together with a total inverse table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMeadow {
    ring: FiniteRing,
    inv: Vec<usize>,
}

impl FiniteMeadow {
    pub fn size(&self) -> usize {
        self.ring.n
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        self.ring.elements()
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn inverse_table(&self) -> &[usize] {
        &self.inv
    }
}

impl Meadow for FiniteMeadow {
    type Elem = usize;

    fn zero(&self) -> usize {
        self.ring.zero
    }
    fn one(&self) -> usize {
        self.ring.one
    }
    fn add(&self, a: &usize, b: &usize) -> usize {
        self.ring.add(*a, *b)
    }
    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.ring.mul(*a, *b)
    }
    fn neg(&self, a: &usize) -> usize {
        self.ring.neg(*a)
    }
    fn inv(&self, a: &usize) -> usize {
        self.inv[*a]
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// The zero-totalized prime field `Z_p`.
pub fn zp_meadow(p: u64) -> Result<FiniteMeadow, ModelError> {
    if !is_prime(p) {
        return Err(ModelError::NotPrime(p));
    }
    // Fermat: x^(p-2) inverts x ≠ 0.
    let inv = (0..p)
        .map(|x| if x == 0 { 0 } else { pow_mod(x, p - 2, p) as usize })
        .collect();
    FiniteRing::zn(p as usize)?.with_inverse(inv)
}

/// `Z_n` for squarefree `n`, with the inverse assembled componentwise over
/// the prime factors by the Chinese remainder theorem. `n = 1` gives the
/// trivial meadow.
pub fn squarefree_meadow(n: u64) -> Result<FiniteMeadow, ModelError> {
    if n == 0 {
        return Err(ModelError::Empty);
    }
    let factors = prime_factors(n);
    if factors.iter().any(|&(_, e)| e > 1) {
        return Err(ModelError::NotSquarefree(n));
    }
    let inv = (0..n)
        .map(|x| {
            // Sum over components of inv_p(x mod p) · e_p, with e_p the CRT
            // idempotent for p.
            factors
                .iter()
                .map(|&(p, _)| {
                    let m = n / p;
                    let e_p = m * pow_mod(m % p, p - 2, p) % n;
                    let xi = pow_mod(x % p, p - 2, p);
                    let xi = if x % p == 0 { 0 } else { xi };
                    xi * e_p % n
                })
                .fold(0, |acc, c| (acc + c) % n) as usize
        })
        .collect();
    FiniteRing::zn(n as usize)?.with_inverse(inv)
}

/// Every assignment of `carrier` values to `vars`, in odometer order with
/// the first variable most significant.
pub fn all_assignments<'a, V: Clone>(
    vars: &'a [String],
    carrier: &'a [V],
) -> impl Iterator<Item = Assignment<V>> + 'a {
    let k = carrier.len();
    let total = if vars.is_empty() {
        1
    } else if k == 0 {
        0
    } else {
        k.checked_pow(vars.len() as u32).expect("assignment space too large")
    };
    (0..total).map(move |mut idx| {
        let mut digits = vec![0; vars.len()];
        for d in digits.iter_mut().rev() {
            *d = idx % k.max(1);
            idx /= k.max(1);
        }
        vars.iter()
            .zip(digits)
            .map(|(v, d)| (v.clone(), carrier[d].clone()))
            .collect()
    })
}

/// A failed equation with the first falsifying assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub equation: Equation,
    pub witness: Assignment<usize>,
    pub lhs_value: usize,
    pub rhs_value: usize,
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self
            .witness
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(
            f,
            "{} `{}` fails at {{{}}}: {} ≠ {}",
            self.equation.name,
            self.equation,
            w.join(", "),
            self.lhs_value,
            self.rhs_value
        )
    }
}

/// Checks each equation over every assignment to its variables. Returns one
/// failure per failing equation, in the given order, carrying the first
/// witness in assignment order.
pub fn check_equations(m: &FiniteMeadow, equations: &[Equation]) -> Vec<AxiomFailure> {
    let carrier: Vec<usize> = m.elements().collect();
    equations
        .iter()
        .filter_map(|e| {
            let vars: Vec<String> = free_vars(&e.lhs)
                .union(&free_vars(&e.rhs))
                .cloned()
                .collect();
            let failure = all_assignments(&vars, &carrier).find_map(|a| {
                let l = eval(m, &e.lhs, &a).expect("all variables assigned");
                let r = eval(m, &e.rhs, &a).expect("all variables assigned");
                (l != r).then(|| AxiomFailure {
                    equation: e.clone(),
                    witness: a,
                    lhs_value: l,
                    rhs_value: r,
                })
            });
            failure
        })
        .collect()
}

pub fn check_axioms(m: &FiniteMeadow, axioms: PresentationId) -> Vec<AxiomFailure> {
    check_equations(m, &axioms.equations())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpansionError {
    #[error("not a commutative ring: {0}")]
    NotRing(String),
    #[error("not regular: no inverse candidate for {element}")]
    NotRegular { element: usize },
    #[error("inverse of {element} is not unique: candidates {} and {}", candidates.0, candidates.1)]
    NotUnique {
        element: usize,
        candidates: (usize, usize),
    },
}

/// Expands a finite commutative regular ring to a meadow.
///
/// For each `x` the inverse is the `y` with `x·(x·y) = x` and `y·(y·x) = y`;
/// the search is exhaustive, so both absence and ambiguity are detected.
pub fn expand_regular_ring(ring: &FiniteRing) -> Result<FiniteMeadow, ExpansionError> {
    // Any inverse table will do for checking the ring laws, which do not
    // mention it.
    let probe = ring
        .clone()
        .with_inverse(vec![ring.zero; ring.n])
        .map_err(|e| ExpansionError::NotRing(e.to_string()))?;
    if let Some(f) = check_axioms(&probe, PresentationId::Cr).into_iter().next() {
        return Err(ExpansionError::NotRing(f.to_string()));
    }
    let mut inv = Vec::with_capacity(ring.n);
    for x in ring.elements() {
        let mut found = ring
            .elements()
            .filter(|&y| ring.mul(x, ring.mul(x, y)) == x && ring.mul(y, ring.mul(y, x)) == y);
        match (found.next(), found.next()) {
            (None, _) => return Err(ExpansionError::NotRegular { element: x }),
            (Some(a), Some(b)) => {
                return Err(ExpansionError::NotUnique {
                    element: x,
                    candidates: (a, b),
                })
            }
            (Some(y), None) => inv.push(y),
        }
    }
    Ok(FiniteMeadow {
        ring: ring.clone(),
        inv,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zp_inverse_tables() {
        assert_eq!(zp_meadow(5).unwrap().inverse_table(), &[0, 1, 3, 2, 4]);
        assert_eq!(zp_meadow(2).unwrap().inverse_table(), &[0, 1]);
        assert_eq!(zp_meadow(4), Err(ModelError::NotPrime(4)));
        assert_eq!(zp_meadow(1), Err(ModelError::NotPrime(1)));
    }

    #[test]
    fn zp_satisfies_imd() {
        for p in [2, 3, 5, 7] {
            assert!(check_axioms(&zp_meadow(p).unwrap(), PresentationId::Imd).is_empty());
        }
    }

    #[test]
    fn z6_identity_inverse() {
        let m = FiniteRing::zn(6)
            .unwrap()
            .with_inverse((0..6).collect())
            .unwrap();
        assert!(check_axioms(&m, PresentationId::Imd).is_empty());
        let e = expand_regular_ring(&FiniteRing::zn(6).unwrap()).unwrap();
        assert_eq!(e.inverse_table(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn z4_identity_inverse_fails_restricted_inverse() {
        let m = FiniteRing::zn(4)
            .unwrap()
            .with_inverse((0..4).collect())
            .unwrap();
        let report = check_axioms(&m, PresentationId::Imd);
        assert_eq!(report.len(), 1);
        assert_eq!(report[0].equation.name, "restricted_inverse");
        assert_eq!(report[0].witness.get("x"), Some(&2));
    }

    #[test]
    fn non_regular_rings() {
        let not_regular = |n| expand_regular_ring(&FiniteRing::zn(n).unwrap()).unwrap_err();
        assert_eq!(not_regular(4), ExpansionError::NotRegular { element: 2 });
        assert_eq!(not_regular(9), ExpansionError::NotRegular { element: 3 });
    }

    #[test]
    fn crt_construction_matches_expansion() {
        for n in [1u64, 2, 6, 10, 15, 30] {
            let crt = squarefree_meadow(n).unwrap();
            let exp = expand_regular_ring(&FiniteRing::zn(n as usize).unwrap()).unwrap();
            assert_eq!(crt, exp, "n = {n}");
        }
        assert_eq!(squarefree_meadow(12), Err(ModelError::NotSquarefree(12)));
    }

    #[test]
    fn rejects_non_rings() {
        // Addition that is not associative.
        let mut ring = FiniteRing::zn(3).unwrap();
        ring.add[1 * 3 + 1] = 0;
        assert!(matches!(
            expand_regular_ring(&ring),
            Err(ExpansionError::NotRing(_))
        ));
    }

    #[test]
    fn odometer_order() {
        let vars = vec!["x".to_string(), "y".to_string()];
        let all: Vec<_> = all_assignments(&vars, &[0, 1])
            .map(|a| (a["x"], a["y"]))
            .collect();
        assert_eq!(all, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
        assert_eq!(all_assignments(&[], &[0, 1]).count(), 1);
    }
}
