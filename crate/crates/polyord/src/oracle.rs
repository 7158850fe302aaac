//! Brute-force ground truth, deliberately independent of the verdict
//! pipeline: trial-division irreducibility, exhaustive enumeration in a
//! fixed counter order, the Moebius count of irreducibles, and the
//! product identity t^(q^d) - t = product of all monic irreducibles of
//! dividing degree.

use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::numth;
use crate::poly::Poly;

/// Iterator over all monic polynomials of one degree, in counter order:
/// the coefficient vector (a_0, ..., a_{d-1}) runs through base-q values
/// ascending, a_0 the least significant digit.
#[derive(Clone, Debug)]
pub struct EnumCursor {
    field: FieldSpec,
    degree: usize,
    next: u64,
    total: u64,
}

impl EnumCursor {
    pub fn new(field: &FieldSpec, degree: usize) -> Result<Self> {
        let total = checked_q_pow(field, degree)?;
        Ok(EnumCursor {
            field: field.clone(),
            degree,
            next: 0,
            total,
        })
    }
}

impl Iterator for EnumCursor {
    type Item = Poly;

    fn next(&mut self) -> Option<Poly> {
        if self.next >= self.total {
            return None;
        }
        let q = self.field.q();
        let mut coeffs = Vec::with_capacity(self.degree + 1);
        let mut rest = self.next;
        for _ in 0..self.degree {
            coeffs.push(self.field.element_from_index(rest % q));
            rest /= q;
        }
        coeffs.push(self.field.one());
        self.next += 1;
        Some(Poly::from_coeffs(&self.field, coeffs).expect("same field"))
    }
}

/// Trial division: true iff no monic polynomial of degree 1..=d/2 divides
/// f. Correctness over speed; this is the reference the pipeline is
/// checked against and must stay independent of it.
pub fn brute_force_irreducible(f: &Poly) -> Result<bool> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let d = f.degree();
    if d == 0 {
        return Err(Error::DegreeZero);
    }
    for cand_degree in 1..=d / 2 {
        for cand in EnumCursor::new(f.field(), cand_degree)? {
            if f.divisible_by(&cand)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All monic irreducibles of the degree, in counter order.
pub fn enumerate_irreducibles(field: &FieldSpec, degree: usize) -> Result<Vec<Poly>> {
    let total = checked_q_pow(field, degree)?;
    if total > 1 << 24 {
        return Err(Error::CapacityExceeded(format!(
            "enumeration of {total} monic polynomials is beyond desk scale"
        )));
    }
    let mut out = Vec::new();
    for f in EnumCursor::new(field, degree)? {
        if brute_force_irreducible(&f)? {
            out.push(f);
        }
    }
    Ok(out)
}

/// Moebius count of monic irreducibles of degree d over F_q:
/// (1/d) * sum over e | d of mu(e) * q^(d/e).
pub fn necklace_count(field: &FieldSpec, degree: usize) -> Result<u64> {
    checked_q_pow(field, degree)?;
    let q = field.q() as i128;
    let d = degree as u64;
    let mut sum = 0i128;
    for e in numth::divisors(d) {
        sum += numth::moebius(e) as i128 * q.pow((d / e) as u32);
    }
    debug_assert!(sum > 0 && sum % d as i128 == 0);
    Ok((sum / d as i128) as u64)
}

/// Verifies that the product of all monic irreducibles of degree dividing
/// d, each once, equals t^(q^d) - t.
pub fn binomial_product_check(field: &FieldSpec, degree: usize) -> Result<bool> {
    let qd = checked_q_pow(field, degree)?;
    if qd > 1 << 16 {
        return Err(Error::CapacityExceeded(format!(
            "expanding a degree-{qd} product is beyond desk scale"
        )));
    }
    let mut product = Poly::one(field);
    for dprime in numth::divisors(degree as u64) {
        for g in enumerate_irreducibles(field, dprime as usize)? {
            product = product.mul(&g)?;
        }
    }
    let binomial = Poly::monomial(field, qd as usize).sub(&Poly::monomial(field, 1))?;
    Ok(product == binomial)
}

fn checked_q_pow(field: &FieldSpec, degree: usize) -> Result<u64> {
    (field.q() as u128)
        .checked_pow(degree as u32)
        .filter(|&v| v <= u64::MAX as u128)
        .map(|v| v as u64)
        .ok_or_else(|| {
            Error::CapacityExceeded(format!(
                "q^d = {}^{} does not fit in 64 bits",
                field.q(),
                degree
            ))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn f3() -> FieldSpec {
        FieldSpec::prime(3).unwrap()
    }

    fn p2(coeffs: &[u64]) -> Poly {
        Poly::from_scalars(&f2(), coeffs)
    }

    #[test]
    fn cursor_visits_each_monic_once() {
        let polys: Vec<Poly> = EnumCursor::new(&f2(), 3).unwrap().collect();
        assert_eq!(polys.len(), 8);
        assert!(polys.iter().all(|f| f.is_monic() && f.degree() == 3));
        // ascending counter order, first is t^3, last is t^3+t^2+t+1
        assert_eq!(polys[0], p2(&[0, 0, 0, 1]));
        assert_eq!(polys[7], p2(&[1, 1, 1, 1]));
    }

    #[test]
    fn trial_division_examples() {
        assert!(brute_force_irreducible(&p2(&[1, 1, 1])).unwrap());
        assert!(!brute_force_irreducible(&p2(&[1, 0, 1])).unwrap());
        let t2_plus_1_f3 = Poly::from_scalars(&f3(), &[1, 0, 1]);
        assert!(brute_force_irreducible(&t2_plus_1_f3).unwrap());
        assert_eq!(
            brute_force_irreducible(&Poly::from_scalars(&f3(), &[1, 2])),
            Err(Error::NotMonic)
        );
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_irreducibles(&f2(), 2).unwrap(), vec![p2(&[1, 1, 1])]);
        assert_eq!(
            enumerate_irreducibles(&f2(), 3).unwrap(),
            vec![p2(&[1, 1, 0, 1]), p2(&[1, 0, 1, 1])]
        );
        assert_eq!(
            enumerate_irreducibles(&f2(), 4).unwrap(),
            vec![
                p2(&[1, 1, 0, 0, 1]),
                p2(&[1, 0, 0, 1, 1]),
                p2(&[1, 1, 1, 1, 1]),
            ]
        );
    }

    #[test]
    fn necklace_examples() {
        assert_eq!(necklace_count(&f2(), 4).unwrap(), 3);
        assert_eq!(necklace_count(&f2(), 1).unwrap(), 2);
        assert_eq!(necklace_count(&f3(), 2).unwrap(), 3);
        assert_eq!(necklace_count(&f2(), 8).unwrap(), 30);
    }

    #[test]
    fn product_identity_examples() {
        assert!(binomial_product_check(&f2(), 2).unwrap());
        assert!(binomial_product_check(&f2(), 1).unwrap());
        assert!(binomial_product_check(&f3(), 2).unwrap());
    }
}
