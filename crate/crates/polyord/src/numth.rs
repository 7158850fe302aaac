//! Integer number theory: factorization, divisors, Euler phi, Moebius,
//! and multiplicative orders modulo m. Trial division throughout; inputs
//! stay below 2^63 so u128 intermediates never overflow.

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Least common multiple. Panics on overflow; callers bound their inputs.
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b)).checked_mul(b).expect("lcm overflow")
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Checked base^exp for u64.
pub(crate) fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Prime factorization as (prime, exponent) pairs, ascending by prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    /// Reconstructs the factored integer.
    pub fn value(&self) -> u64 {
        self.pairs
            .iter()
            .fold(1u64, |acc, &(p, e)| acc * p.pow(e))
    }
}

/// Complete factorization by trial division up to sqrt(m). m = 1 gives the
/// empty product.
pub fn factorize(m: u64) -> Factorization {
    debug_assert!((1..1u64 << 63).contains(&m));
    let mut pairs = Vec::new();
    let mut rest = m;
    let mut d = 2u64;
    while d * d <= rest {
        if rest % d == 0 {
            let mut e = 0u32;
            while rest % d == 0 {
                rest /= d;
                e += 1;
            }
            pairs.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    Factorization { pairs }
}

/// All positive divisors of m, ascending.
pub fn divisors(m: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for &(p, e) in factorize(m).pairs() {
        let snapshot = divs.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            divs.extend(snapshot.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    divs
}

/// Euler totient via the factorization.
pub fn euler_phi(m: u64) -> u64 {
    let mut phi = m;
    for &(p, _) in factorize(m).pairs() {
        phi = phi / p * (p - 1);
    }
    phi
}

/// Moebius function: 0 on square factors, else (-1)^(number of primes).
pub fn moebius(m: u64) -> i64 {
    let f = factorize(m);
    if f.pairs().iter().any(|&(_, e)| e > 1) {
        return 0;
    }
    if f.pairs().len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Smallest e >= 1 with q^e = 1 (mod m), by iterating q, q^2, ... mod m.
/// The order exists iff gcd(q, m) = 1; m = 1 gives 1 by convention.
pub fn mult_order_mod(q: u64, m: u64) -> Result<u64> {
    if m == 1 {
        return Ok(1);
    }
    let q = q % m;
    if gcd(q, m) != 1 {
        return Err(Error::NotCoprime(q, m));
    }
    let mut x = q;
    let mut e = 1u64;
    while x != 1 {
        x = mul_mod(x, q, m);
        e += 1;
        debug_assert!(e <= m, "order exceeds Euler bound");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_basics() {
        assert_eq!(factorize(12).pairs(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(1).pairs(), &[]);
        assert_eq!(factorize(21).pairs(), &[(3, 1), (7, 1)]);
        assert_eq!(factorize(1).value(), 1);
        assert_eq!(factorize(98_304).value(), 98_304);
    }

    #[test]
    fn divisors_ascending() {
        assert_eq!(divisors(21), vec![1, 3, 7, 21]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(15), vec![1, 3, 5, 15]);
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
    }

    #[test]
    fn divisor_count_matches_exponents() {
        for m in 1..2000u64 {
            let expected: usize = factorize(m)
                .pairs()
                .iter()
                .map(|&(_, e)| e as usize + 1)
                .product();
            assert_eq!(divisors(m).len(), expected, "m = {m}");
        }
    }

    #[test]
    fn phi_basics() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(15), 8);
        assert_eq!(euler_phi(8), 4);
    }

    #[test]
    fn phi_sums_over_divisors() {
        for m in 1..=10_000u64 {
            let total: u64 = divisors(m).into_iter().map(euler_phi).sum();
            assert_eq!(total, m, "m = {m}");
        }
    }

    #[test]
    fn moebius_basics() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(4), 0);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(30), -1);
    }

    #[test]
    fn mult_order_examples() {
        assert_eq!(mult_order_mod(2, 5).unwrap(), 4);
        assert_eq!(mult_order_mod(2, 21).unwrap(), 6);
        assert_eq!(mult_order_mod(7, 1).unwrap(), 1);
        assert_eq!(mult_order_mod(0, 1).unwrap(), 1);
        assert_eq!(mult_order_mod(2, 4), Err(Error::NotCoprime(2, 4)));
    }

    #[test]
    fn mult_order_divides_phi() {
        for m in 2..300u64 {
            for q in 2..30u64 {
                if gcd(q % m, m) == 1 && q % m != 0 {
                    let e = mult_order_mod(q, m).unwrap();
                    assert_eq!(euler_phi(m) % e, 0, "q = {q}, m = {m}");
                }
            }
        }
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
    }
}
