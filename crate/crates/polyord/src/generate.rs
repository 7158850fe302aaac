//! Deriving every monic irreducible of a dividing degree from one
//! primitive polynomial: if f is primitive of degree d over F_q and m' is
//! a divisor of q^d' - 1 with ord_{m'}(q) = d' for d' dividing d, then the
//! matrices B = A^((q^d - 1)/m' * l) over coprime l <= m' (A the companion
//! matrix of f) have minimal polynomial an irreducible g of degree d' and
//! order m', characteristic polynomial g^(d/d'), and every such g arises
//! exactly d' times. The number of degree-d' irreducibles of order m' is
//! phi(m')/d'.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::irred;
use crate::numth;
use crate::poly::Poly;

/// Generated polynomials of one order: each distinct g with the number of
/// exponents l that produced it.
#[derive(Clone, Debug)]
pub struct OrderBucket {
    pub order: u64,
    pub polys: BTreeMap<Poly, u32>,
    /// Whether char_poly(B) = min_poly(B)^s held for every generated B.
    pub char_consistent: bool,
}

/// Full record of one generation run.
#[derive(Clone, Debug)]
pub struct GenerationReport {
    source: Poly,
    target_degree: usize,
    buckets: BTreeMap<u64, OrderBucket>,
}

impl GenerationReport {
    pub fn source(&self) -> &Poly {
        &self.source
    }

    pub fn target_degree(&self) -> usize {
        self.target_degree
    }

    /// Buckets keyed by order m', ascending.
    pub fn buckets(&self) -> impl Iterator<Item = &OrderBucket> {
        self.buckets.values()
    }

    pub fn bucket(&self, order: u64) -> Option<&OrderBucket> {
        self.buckets.get(&order)
    }

    /// All distinct generated polynomials, ascending.
    pub fn polys(&self) -> Vec<Poly> {
        let mut out: Vec<Poly> = self
            .buckets
            .values()
            .flat_map(|b| b.polys.keys().cloned())
            .collect();
        out.sort();
        out
    }

    /// Every distinct polynomial must arise exactly target_degree times.
    pub fn multiplicities_ok(&self) -> bool {
        self.buckets
            .values()
            .flat_map(|b| b.polys.values())
            .all(|&n| n as usize == self.target_degree)
    }

    /// Distinct count per bucket must equal phi(m')/d'.
    pub fn counts_ok(&self) -> bool {
        self.buckets.values().all(|b| {
            b.polys.len() as u64 == numth::euler_phi(b.order) / self.target_degree as u64
        })
    }

    pub fn char_consistent(&self) -> bool {
        self.buckets.values().all(|b| b.char_consistent)
    }

    /// The full self-check reported to callers.
    pub fn self_check(&self) -> bool {
        self.multiplicities_ok() && self.counts_ok() && self.char_consistent()
    }
}

/// Divisors m' of q^dprime - 1 whose multiplicative order of q is exactly
/// dprime, ascending: the orders that degree-dprime irreducibles can have.
pub fn admissible_orders(field: &FieldSpec, dprime: usize) -> Result<Vec<u64>> {
    let bound = capacity_q_pow_minus_1(field, dprime)?;
    Ok(numth::divisors(bound)
        .into_iter()
        .filter(|&m| numth::mult_order_mod(field.q(), m) == Ok(dprime as u64))
        .collect())
}

/// Number of monic irreducibles of degree d and order m over the field:
/// phi(m)/d when ord_m(q) = d, otherwise 0.
pub fn count_by_order(field: &FieldSpec, d: usize, m: u64) -> Result<u64> {
    capacity_q_pow_minus_1(field, d)?;
    match numth::mult_order_mod(field.q(), m) {
        Ok(e) if e == d as u64 => {
            let phi = numth::euler_phi(m);
            debug_assert_eq!(phi % d as u64, 0);
            Ok(phi / d as u64)
        }
        _ => Ok(0),
    }
}

/// Generates all monic irreducibles of degree dprime (a divisor of deg f)
/// from a primitive f, bucketed by order, with the multiplicity of each
/// polynomial across the coprime exponents recorded.
pub fn generate_from_primitive(f: &Poly, dprime: usize) -> Result<GenerationReport> {
    let verdict = irred::test_irreducible(f)?;
    if !verdict.is_irreducible() || !verdict.primitive {
        return Err(Error::NotPrimitive);
    }
    let d = f.degree();
    if dprime == 0 || d % dprime != 0 {
        return Err(Error::NotADivisor { dprime, d });
    }
    let s = (d / dprime) as u32;
    let qd_minus_1 = verdict.order;
    let companion = f.companion_matrix()?;

    let mut buckets = BTreeMap::new();
    for m_prime in admissible_orders(f.field(), dprime)? {
        let stride = qd_minus_1 / m_prime;
        let mut polys: BTreeMap<Poly, u32> = BTreeMap::new();
        let mut char_consistent = true;
        for l in 1..=m_prime {
            if numth::gcd(l, m_prime) != 1 {
                continue;
            }
            let b = companion.pow(stride * l);
            let g = b.min_poly();
            debug_assert_eq!(g.degree(), dprime);
            char_consistent &= g.pow(s) == b.char_poly();
            *polys.entry(g).or_insert(0) += 1;
        }
        buckets.insert(
            m_prime,
            OrderBucket {
                order: m_prime,
                polys,
                char_consistent,
            },
        );
    }

    Ok(GenerationReport {
        source: f.clone(),
        target_degree: dprime,
        buckets,
    })
}

fn capacity_q_pow_minus_1(field: &FieldSpec, d: usize) -> Result<u64> {
    let q = field.q() as u128;
    let qd = q
        .checked_pow(d as u32)
        .filter(|&v| v - 1 < 1 << 63)
        .ok_or_else(|| {
            Error::CapacityExceeded(format!(
                "q^d - 1 = {}^{} - 1 does not fit in 63 bits",
                field.q(),
                d
            ))
        })?;
    Ok((qd - 1) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn p2(coeffs: &[u64]) -> Poly {
        Poly::from_scalars(&f2(), coeffs)
    }

    #[test]
    fn admissible_orders_examples() {
        let f2 = f2();
        assert_eq!(admissible_orders(&f2, 1).unwrap(), vec![1]);
        assert_eq!(admissible_orders(&f2, 2).unwrap(), vec![3]);
        assert_eq!(admissible_orders(&f2, 4).unwrap(), vec![5, 15]);
    }

    #[test]
    fn count_by_order_examples() {
        let f2 = f2();
        assert_eq!(count_by_order(&f2, 4, 15).unwrap(), 2);
        assert_eq!(count_by_order(&f2, 4, 5).unwrap(), 1);
        assert_eq!(count_by_order(&f2, 4, 3).unwrap(), 0);
        // order not coprime to q: no such irreducibles
        assert_eq!(count_by_order(&f2, 4, 6).unwrap(), 0);
    }

    #[test]
    fn degree_one_from_quadratic_seed() {
        // [f]^3 = E for f = t^2+t+1, so the only bucket is m' = 1 with t+1
        let report = generate_from_primitive(&p2(&[1, 1, 1]), 1).unwrap();
        let bucket = report.bucket(1).unwrap();
        assert_eq!(bucket.polys.len(), 1);
        assert_eq!(bucket.polys.get(&p2(&[1, 1])), Some(&1));
        assert!(report.self_check());
    }

    #[test]
    fn degree_two_from_quartic_seed() {
        let report = generate_from_primitive(&p2(&[1, 1, 0, 0, 1]), 2).unwrap();
        let bucket = report.bucket(3).unwrap();
        assert_eq!(bucket.polys.len(), 1);
        // the single quadratic irreducible arises once per coprime l
        assert_eq!(bucket.polys.get(&p2(&[1, 1, 1])), Some(&2));
        assert!(report.self_check());
    }

    #[test]
    fn degree_four_from_quartic_seed() {
        let report = generate_from_primitive(&p2(&[1, 1, 0, 0, 1]), 4).unwrap();
        let b5 = report.bucket(5).unwrap();
        assert_eq!(b5.polys.len(), 1);
        assert_eq!(b5.polys.get(&p2(&[1, 1, 1, 1, 1])), Some(&4));
        let b15 = report.bucket(15).unwrap();
        assert_eq!(b15.polys.len(), 2);
        assert_eq!(b15.polys.get(&p2(&[1, 1, 0, 0, 1])), Some(&4));
        assert_eq!(b15.polys.get(&p2(&[1, 0, 0, 1, 1])), Some(&4));
        assert!(report.self_check());
        assert_eq!(report.polys().len(), 3);
    }

    #[test]
    fn rejects_non_primitive_seed() {
        assert!(matches!(
            generate_from_primitive(&p2(&[1, 0, 1]), 1),
            Err(Error::NotPrimitive)
        ));
        // irreducible but not primitive
        assert!(matches!(
            generate_from_primitive(&p2(&[1, 1, 1, 1, 1]), 2),
            Err(Error::NotPrimitive)
        ));
    }

    #[test]
    fn rejects_non_divisor_degree() {
        assert!(matches!(
            generate_from_primitive(&p2(&[1, 1, 0, 0, 1]), 3),
            Err(Error::NotADivisor { dprime: 3, d: 4 })
        ));
    }
}
