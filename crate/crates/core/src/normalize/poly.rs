use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::rational::Q0Value;
use crate::semantics::Assignment;

/// A power product `x₁^i₁ ··· x_m^i_m` with every exponent at least 1.
///
/// Ordered degree-lexicographically: total degree first, then exponents
/// compared variable by variable in alphabetical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(BTreeMap<String, u32>);

impl Monomial {
    pub fn unit() -> Monomial {
        Monomial::default()
    }

    pub fn var(name: impl Into<String>) -> Monomial {
        Monomial(BTreeMap::from([(name.into(), 1)]))
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn exponent(&self, v: &str) -> u32 {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&str, u32)> {
        self.0.iter().map(|(k, &e)| (k.as_str(), e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (v, e) in &other.0 {
            *out.entry(v.clone()).or_insert(0) += e;
        }
        Monomial(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            // Walk both sorted maps together; an absent variable has
            // exponent 0, below every stored exponent.
            let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
            loop {
                match (a.peek(), b.peek()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some((ka, ea)), Some((kb, eb))) => match ka.cmp(kb) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal if ea != eb => return ea.cmp(eb),
                        Ordering::Equal => {
                            a.next();
                            b.next();
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            match e {
                1 => write!(f, "{v}")?,
                _ => write!(f, "{v}^{e}")?,
            }
        }
        Ok(())
    }
}

/// A nonzero polynomial with positive integer coefficients.
///
/// There is no zero polynomial: the constructors and both operations keep
/// at least one term, matching terms over `1, +, ·`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial(BTreeMap<Monomial, BigUint>);

impl Polynomial {
    pub fn one() -> Polynomial {
        Polynomial::constant(1u32)
    }

    /// # Panics
    ///
    /// If `k` is zero.
    pub fn constant(k: impl Into<BigUint>) -> Polynomial {
        let k = k.into();
        assert!(k != BigUint::ZERO, "coefficients are positive");
        Polynomial(BTreeMap::from([(Monomial::unit(), k)]))
    }

    pub fn var(name: impl Into<String>) -> Polynomial {
        Polynomial(BTreeMap::from([(Monomial::var(name), BigUint::one())]))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.0.clone();
        for (m, k) in &other.0 {
            *out.entry(m.clone()).or_default() += k;
        }
        Polynomial(out)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out: BTreeMap<Monomial, BigUint> = BTreeMap::new();
        for (m1, k1) in &self.0 {
            for (m2, k2) in &other.0 {
                *out.entry(m1.mul(m2)).or_default() += k1 * k2;
            }
        }
        Polynomial(out)
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigUint)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The coefficient of the unit monomial if this is a constant.
    pub fn as_constant(&self) -> Option<&BigUint> {
        match self.0.iter().next() {
            Some((m, k)) if self.0.len() == 1 && m.is_unit() => Some(k),
            _ => None,
        }
    }

    /// Largest exponent of `v` in any term.
    pub fn degree_in(&self, v: &str) -> u32 {
        self.0.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Value at a rational point; variables missing from `a` are an error.
    pub fn eval(&self, a: &Assignment<Q0Value>) -> Option<Q0Value> {
        let mut acc = Q0Value::zero();
        for (m, k) in &self.0 {
            let mut term = Q0Value::from_integer(num_bigint::BigInt::from(k.clone()));
            for (v, e) in m.exponents() {
                let x = a.get(v)?;
                for _ in 0..e {
                    term = &term * x;
                }
            }
            acc = &acc + &term;
        }
        Some(acc)
    }
}

impl fmt::Display for Polynomial {
    /// Descending monomial order, e.g. `x^2 + 2*x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (m, k)) in self.0.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match (m.is_unit(), k.is_one()) {
                (true, _) => write!(f, "{k}")?,
                (false, true) => write!(f, "{m}")?,
                (false, false) => write!(f, "{k}*{m}")?,
            }
        }
        Ok(())
    }
}

/// `num · den⁻¹` with both components inverse-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyFrac {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl PolyFrac {
    pub fn new(num: Polynomial, den: Polynomial) -> PolyFrac {
        PolyFrac { num, den }
    }
}

impl fmt::Display for PolyFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) * ({})^-1", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Polynomial {
        Polynomial::var("x")
    }

    #[test]
    fn binomial() {
        let p = x().add(&Polynomial::one());
        assert_eq!(p.mul(&p).to_string(), "x^2 + 2*x + 1");
    }

    #[test]
    fn degree_lex_order() {
        let m = |pairs: &[(&str, u32)]| {
            Monomial(pairs.iter().map(|(v, e)| (v.to_string(), *e)).collect())
        };
        assert!(m(&[("x", 2)]) > m(&[("x", 1), ("y", 1)]));
        assert!(m(&[("x", 1), ("y", 1)]) > m(&[("y", 1)]));
        assert!(m(&[("x", 1), ("y", 1)]) < m(&[("x", 2)]));
        assert!(m(&[("x", 1), ("y", 1)]) > m(&[("y", 2)]));
        assert!(m(&[("z", 3)]) > m(&[("x", 2)]));
        assert!(m(&[]) < m(&[("a", 1)]));
        let p = Polynomial::var("y")
            .mul(&Polynomial::var("y"))
            .add(&x().mul(&Polynomial::var("y")))
            .add(&x());
        assert_eq!(p.to_string(), "x*y + y^2 + x");
    }

    #[test]
    fn constants() {
        let three = Polynomial::one().add(&Polynomial::one()).add(&Polynomial::one());
        assert_eq!(three.as_constant(), Some(&BigUint::from(3u32)));
        assert_eq!(x().as_constant(), None);
        assert_eq!(three.to_string(), "3");
    }
}
