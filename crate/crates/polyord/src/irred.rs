//! The verdict pipeline: decide irreducibility and primitivity of a monic
//! polynomial over F_q from the multiplicative order of its companion
//! matrix, plus the same test applied to an arbitrary nonsingular matrix
//! (deciding its characteristic polynomial), and closed-form order
//! predictions for known factorizations.
//!
//! For f monic of degree d with nonzero constant term and m the order of
//! its companion matrix A:
//!   - m <= q^d - 1, with equality exactly when f is primitive irreducible;
//!   - f is irreducible iff p does not divide m, the multiplicative order
//!     of q mod m equals d, and rank(A^l - E) = d for every nontrivial
//!     divisor l of m with l < m.
//!
//! The pipeline evaluates these conditions in order and records which step
//! decided, together with witness data.

use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::matrix::{Mat, StripState};
use crate::numth;
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Irreducible,
    Reducible,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Outcome::Irreducible => write!(f, "IRREDUCIBLE"),
            Outcome::Reducible => write!(f, "REDUCIBLE"),
        }
    }
}

/// Data pinning down a reducibility decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Step 4: the multiplicative order e of q mod m differs from d.
    OrderModMismatch { e: u64 },
    /// Step 5: rank(A^divisor - E) = rank < d.
    RankDeficiency { divisor: u64, rank: usize },
}

/// Outcome of the pipeline.
///
/// `order` is the multiplicative order m of the matrix; the single input
/// without one (f = t, whose companion matrix is singular) reports 0.
/// `decided_at_step` is 2 (primitive shortcut), 3 (p divides m),
/// 4 (order of q mod m), 5 (divisor ranks) or 0 for the zero-constant-term
/// short circuit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub primitive: bool,
    pub order: u64,
    pub degree: usize,
    pub decided_at_step: u8,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn is_irreducible(&self) -> bool {
        self.outcome == Outcome::Irreducible
    }
}

/// Optional deviations from the plain pipeline. Defaults keep the faithful
/// behaviour: iterative order search and the full ascending divisor scan.
#[derive(Clone, Copy, Debug, Default)]
pub struct PipelineOptions {
    /// Compute the matrix order by factoring a known multiple instead of
    /// plain iteration.
    pub fast_order: bool,
    /// Step 5 checks only the maximal proper divisors m/rho for primes
    /// rho dividing m (a sufficient subset) instead of all divisors.
    pub max_divisors_only: bool,
}

/// Step 5 walks powers through the strip recurrence when the largest
/// divisor to check stays under this bound, and falls back to
/// square-and-multiply per divisor otherwise.
fn strip_threshold(d: usize) -> u64 {
    4 * (d as u64) * (d as u64)
}

/// Decides irreducibility and primitivity of a monic polynomial.
pub fn test_irreducible(f: &Poly) -> Result<Verdict> {
    test_irreducible_with(f, &PipelineOptions::default())
}

pub fn test_irreducible_with(f: &Poly, opts: &PipelineOptions) -> Result<Verdict> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let d = f.degree();
    if d == 0 {
        return Err(Error::DegreeZero);
    }

    // Zero constant term: f is divisible by t, so it is reducible unless it
    // is t itself (irreducible, with no defined order).
    if f.constant_coeff().is_zero() {
        let is_t = d == 1;
        return Ok(Verdict {
            outcome: if is_t {
                Outcome::Irreducible
            } else {
                Outcome::Reducible
            },
            primitive: false,
            order: 0,
            degree: d,
            decided_at_step: 0,
            witness: None,
        });
    }

    let cap = order_cap(f.field(), d)?;
    let companion = f.companion_matrix()?;
    decide(&companion, cap, opts)
}

/// Applies the pipeline to an arbitrary nonsingular matrix; the verdict
/// describes its characteristic polynomial. The order search cap is q^d,
/// one above the provable bound, so an internal inconsistency surfaces as
/// CapExceeded instead of a wrong answer.
pub fn test_matrix(a: &Mat) -> Result<Verdict> {
    test_matrix_with(a, &PipelineOptions::default())
}

pub fn test_matrix_with(a: &Mat, opts: &PipelineOptions) -> Result<Verdict> {
    if a.rank() < a.dim() {
        return Err(Error::Singular);
    }
    let cap = order_cap(a.field(), a.dim())?;
    decide(a, cap + 1, opts)
}

fn order_cap(field: &FieldSpec, d: usize) -> Result<u64> {
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

fn decide(a: &Mat, cap: u64, opts: &PipelineOptions) -> Result<Verdict> {
    let field = a.field();
    let d = a.dim();
    let p = field.p();
    let q = field.q();
    let qd_minus_1 = order_cap(field, d)?;

    // Steps 1-2: order of the matrix; maximal order means primitive.
    let m = if opts.fast_order {
        a.order_factored(cap)?
    } else {
        a.order(cap)?
    };
    if m == qd_minus_1 {
        return Ok(Verdict {
            outcome: Outcome::Irreducible,
            primitive: true,
            order: m,
            degree: d,
            decided_at_step: 2,
            witness: None,
        });
    }

    // Step 3: the order of an irreducible's root is prime to p.
    if m % p == 0 {
        return Ok(Verdict {
            outcome: Outcome::Reducible,
            primitive: false,
            order: m,
            degree: d,
            decided_at_step: 3,
            witness: None,
        });
    }

    // Step 4: roots of order m live in degree ord_m(q) extensions.
    let e = numth::mult_order_mod(q, m)?;
    if e != d as u64 {
        return Ok(Verdict {
            outcome: Outcome::Reducible,
            primitive: false,
            order: m,
            degree: d,
            decided_at_step: 4,
            witness: Some(Witness::OrderModMismatch { e }),
        });
    }

    // Step 5: every nontrivial proper divisor l of m must leave A^l - E
    // nonsingular. (A deficiency at l = 1 would mean t - 1 divides the
    // characteristic polynomial, which step 4 already excludes whenever m
    // has no nontrivial proper divisor, and which otherwise propagates to
    // every divisor; so scanning l > 1 loses nothing.)
    let targets: Vec<u64> = if opts.max_divisors_only {
        let mut v: Vec<u64> = numth::factorize(m)
            .primes()
            .map(|rho| m / rho)
            .filter(|&l| l > 1)
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    } else {
        numth::divisors(m)
            .into_iter()
            .filter(|&l| l > 1 && l < m)
            .collect()
    };

    if let Some((divisor, rank)) = first_rank_deficiency(a, &targets)? {
        return Ok(Verdict {
            outcome: Outcome::Reducible,
            primitive: false,
            order: m,
            degree: d,
            decided_at_step: 5,
            witness: Some(Witness::RankDeficiency { divisor, rank }),
        });
    }

    Ok(Verdict {
        outcome: Outcome::Irreducible,
        primitive: false,
        order: m,
        degree: d,
        decided_at_step: 5,
        witness: None,
    })
}

/// Scans the divisors ascending and reports the first l with
/// rank(A^l - E) < d, walking the strip recurrence when the divisors are
/// dense and using square-and-multiply otherwise.
fn first_rank_deficiency(a: &Mat, targets: &[u64]) -> Result<Option<(u64, usize)>> {
    let d = a.dim();
    let identity = Mat::identity(a.field(), d);
    let largest = match targets.last() {
        Some(&l) => l,
        None => return Ok(None),
    };

    let use_strip = a.is_companion() && largest < strip_threshold(d);
    let mut strip = if use_strip {
        Some(StripState::from_companion(a))
    } else {
        None
    };

    for &l in targets {
        let power = match strip.as_mut() {
            Some(s) => {
                while s.power() < l {
                    s.advance();
                }
                s.window_matrix()
            }
            None => a.pow(l),
        };
        let rank = power.sub(&identity)?.rank();
        if rank < d {
            return Ok(Some((l, rank)));
        }
    }
    Ok(None)
}

/// Order of the companion matrix of the product of powers of known monic
/// irreducibles: p^r * lcm of the factor orders, where r is the smallest
/// integer with p^r >= s_i over the factors with multiplicity s_i >= 2
/// (and 0 when every multiplicity is 1).
pub fn predicted_order(factors: &[(Poly, u32)], field: &FieldSpec) -> Result<u64> {
    if factors.is_empty() {
        return Err(Error::NotIrreducibleFactor);
    }
    let mut total_degree = 0usize;
    for (g, s) in factors {
        if g.field() != field {
            return Err(Error::FieldMismatch);
        }
        if *s == 0 {
            return Err(Error::NotIrreducibleFactor);
        }
        total_degree += g.degree() * *s as usize;
    }
    // Bounds every intermediate: the result divides q^d - 1 scaled by p^r.
    order_cap(field, total_degree)?;

    let p = field.p();
    let mut lcm_orders = 1u64;
    let mut r = 0u32;
    for (g, s) in factors {
        let m_prime = factor_order(g)?;
        lcm_orders = numth::lcm(lcm_orders, m_prime);
        if *s >= 2 {
            r = r.max(min_p_power_exponent(p, *s as u64));
        }
    }
    Ok(p.pow(r) * lcm_orders)
}

/// Order of one repeated-factor block: p^r * ord(g) with r minimal such
/// that p^r >= s, and r = 0 when s = 1. (A block with s diagonal copies of
/// the companion of g is E + N at the power ord(g), with N nilpotent of
/// index s, so the remaining factor is the p-power that kills N.)
pub fn jordan_block_order(g: &Poly, s: u32) -> Result<u64> {
    if s == 0 {
        return Err(Error::NotIrreducibleFactor);
    }
    let m_prime = factor_order(g)?;
    if s == 1 {
        return Ok(m_prime);
    }
    let p = g.field().p();
    let r = min_p_power_exponent(p, s as u64);
    p.pow(r)
        .checked_mul(m_prime)
        .ok_or_else(|| Error::CapacityExceeded("block order does not fit in 64 bits".into()))
}

/// Validates one factor (monic irreducible, nonzero constant term) and
/// returns its order.
fn factor_order(g: &Poly) -> Result<u64> {
    let verdict = test_irreducible(g).map_err(|_| Error::NotIrreducibleFactor)?;
    if !verdict.is_irreducible() || verdict.order == 0 {
        return Err(Error::NotIrreducibleFactor);
    }
    Ok(verdict.order)
}

/// Smallest r with p^r >= target.
fn min_p_power_exponent(p: u64, target: u64) -> u32 {
    let mut r = 0u32;
    let mut pw = 1u64;
    while pw < target {
        pw *= p;
        r += 1;
    }
    r
}
