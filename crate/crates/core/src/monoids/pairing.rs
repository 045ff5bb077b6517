//! Bijection between pairs `(n, m)` with `n >= 1`, `m` odd, and the odd primes.

use crate::error::{invalid, Result};

/// Primes above this are not inverted by the pairing (counting primes below them is too slow).
pub const PAIRING_PRIME_LIMIT: u64 = 20_000_000;

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn cantor(i: u64, j: u64) -> u64 {
    (i + j) * (i + j + 1) / 2 + j
}

fn cantor_inverse(k: u64) -> (u64, u64) {
    let mut w = (((8 * k + 1) as f64).sqrt() as u64).saturating_sub(1) / 2;
    while (w + 1) * (w + 2) / 2 <= k {
        w += 1;
    }
    while w * (w + 1) / 2 > k {
        w -= 1;
    }
    let j = k - w * (w + 1) / 2;
    (w - j, j)
}

/// The `(k+1)`-th odd prime.
fn nth_odd_prime(k: u64) -> u64 {
    let mut count = 0;
    let mut p = 3;
    loop {
        if is_prime_u64(p) {
            if count == k {
                return p;
            }
            count += 1;
        }
        p += 2;
    }
}

/// Zero-based index of an odd prime among the odd primes.
fn odd_prime_index(p: u64) -> u64 {
    if p < 1000 {
        return (3..p).step_by(2).filter(|&q| is_prime_u64(q)).count() as u64;
    }
    // Sieve of Eratosthenes over odd numbers below p.
    let half = (p / 2) as usize;
    let mut composite = vec![false; half];
    let mut i = 1;
    while (2 * i + 1) * (2 * i + 1) < p as usize {
        if !composite[i] {
            let q = 2 * i + 1;
            let mut j = q * q / 2;
            while j < half {
                composite[j] = true;
                j += q;
            }
        }
        i += 1;
    }
    composite[1..].iter().filter(|c| !**c).count() as u64
}

/// The odd prime paired with `(n, m)`.
pub fn pairing_prime(n: u64, m: u64) -> Result<u64> {
    if n == 0 {
        return invalid("pairing needs n >= 1");
    }
    if m % 2 == 0 {
        return invalid(format!("pairing needs odd m, got {m}"));
    }
    Ok(nth_odd_prime(cantor(n - 1, (m - 1) / 2)))
}

/// The pair `(n, m)` of an odd prime, or `None` if `p` is not an odd prime within the limit.
pub fn pairing_inverse(p: u64) -> Option<(u64, u64)> {
    if p == 2 || p > PAIRING_PRIME_LIMIT || !is_prime_u64(p) {
        return None;
    }
    let (i, j) = cantor_inverse(odd_prime_index(p));
    Some((i + 1, 2 * j + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(pairing_prime(1, 1).unwrap(), 3);
        assert_eq!(pairing_prime(1, 3).unwrap(), 7);
        assert_eq!(pairing_prime(2, 1).unwrap(), 5);
        assert!(pairing_prime(1, 2).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        for n in 1..=12 {
            for m in (1..=25).step_by(2) {
                let p = pairing_prime(n, m).unwrap();
                assert_eq!(pairing_inverse(p), Some((n, m)));
            }
        }
        assert_eq!(pairing_inverse(9), None);
        assert_eq!(odd_prime_index(1009), (3..1009).step_by(2).filter(|&q| is_prime_u64(q)).count() as u64);
    }
}
