//! Witnesses for the sums-of-two-squares facts about prime fields.

use thiserror::Error;

use super::finite::is_prime;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("residue {u} is out of range for p = {p}")]
    ResidueOutOfRange { p: u64, u: u64 },
    /// No witness exists. Cannot happen for a prime modulus.
    #[error("no witness found for u = {u} modulo {p}")]
    NotFound { p: u64, u: u64 },
}

/// Smallest square root of each residue modulo `p`, if it has one.
fn square_roots(p: u64) -> Vec<Option<u64>> {
    let mut roots = vec![None; p as usize];
    for v in 0..p {
        let r = (v * v % p) as usize;
        if roots[r].is_none() {
            roots[r] = Some(v);
        }
    }
    roots
}

fn search(p: u64, u: u64, roots: &[Option<u64>]) -> Option<(u64, u64)> {
    if let Some(v) = roots[u as usize] {
        return Some((v, 0));
    }
    (0..p).find_map(|v| {
        let rest = (u + p - v * v % p) % p;
        roots[rest as usize].map(|w| (v, w))
    })
}

/// Finds `(v, w)` with `v² + w² ≡ u (mod p)`.
///
/// Solutions with `w = 0` are preferred (smallest `v`); otherwise the
/// lexicographically smallest pair is returned.
pub fn two_squares(p: u64, u: u64) -> Result<(u64, u64), WitnessError> {
    if !is_prime(p) {
        return Err(WitnessError::NotPrime(p));
    }
    if u >= p {
        return Err(WitnessError::ResidueOutOfRange { p, u });
    }
    search(p, u, &square_roots(p)).ok_or(WitnessError::NotFound { p, u })
}

/// Every residue's witness for one prime, sharing the square-root table.
pub fn two_squares_all(p: u64) -> Result<Vec<(u64, u64)>, WitnessError> {
    if !is_prime(p) {
        return Err(WitnessError::NotPrime(p));
    }
    let roots = square_roots(p);
    (0..p)
        .map(|u| search(p, u, &roots).ok_or(WitnessError::NotFound { p, u }))
        .collect()
}

/// Finds naturals `(u, v, w)` with `u, v < p` and `w·p = u² + v² + 1`.
pub fn corollary_witness(p: u64) -> Result<(u64, u64, u64), WitnessError> {
    if !is_prime(p) {
        return Err(WitnessError::NotPrime(p));
    }
    let (u, v) = two_squares(p, p - 1)?;
    let s = u * u + v * v + 1;
    debug_assert_eq!(s % p, 0);
    Ok((u, v, s / p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(two_squares(7, 3), Ok((1, 3)));
        assert_eq!(two_squares(2, 1), Ok((1, 0)));
        assert_eq!(two_squares(5, 0), Ok((0, 0)));
        assert_eq!(corollary_witness(7), Ok((2, 3, 2)));
        assert_eq!(corollary_witness(2), Ok((1, 0, 1)));
        assert_eq!(corollary_witness(3), Ok((1, 1, 1)));
    }

    #[test]
    fn bad_inputs() {
        assert_eq!(two_squares(9, 1), Err(WitnessError::NotPrime(9)));
        assert_eq!(
            two_squares(7, 7),
            Err(WitnessError::ResidueOutOfRange { p: 7, u: 7 })
        );
        assert_eq!(corollary_witness(1), Err(WitnessError::NotPrime(1)));
        assert_eq!(corollary_witness(0), Err(WitnessError::NotPrime(0)));
    }

    #[test]
    fn batch_agrees_with_single() {
        for p in [2, 3, 5, 11, 13] {
            let all = two_squares_all(p).unwrap();
            for u in 0..p {
                assert_eq!(two_squares(p, u).unwrap(), all[u as usize]);
            }
        }
    }
}
