//! Exact arithmetic for prime fields F_p and one-level extensions F_{p^n}
//! in a polynomial basis. Elements carry their field identity; mixing
//! elements of different fields is a hard error, never a coercion.

use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::numth;
use crate::poly::Poly;

/// Characteristic bound: residues and products must stay in u64 range.
pub const MAX_CHARACTERISTIC: u64 = 1 << 16;

type Coeffs = SmallVec<[u64; 4]>;

#[derive(Debug)]
struct FieldData {
    p: u64,
    n: usize,
    q: u64,
    /// Monic modulus coefficients a_0..a_n over F_p; empty when n = 1.
    modulus: Vec<u64>,
}

/// Description of a finite field F_q, q = p^n. Cheap to clone (shared).
///
/// Equality is structural: two specs describe the same field exactly when
/// p, n and the modulus coefficients agree.
#[derive(Clone, Debug)]
pub struct FieldSpec(Arc<FieldData>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.n == other.0.n
                && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.n == 1 {
            write!(f, "{}", self.0.p)
        } else {
            write!(f, "{}^{}", self.0.p, self.0.n)
        }
    }
}

impl FieldSpec {
    /// The prime field F_p.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= MAX_CHARACTERISTIC {
            return Err(Error::CapacityExceeded(format!(
                "characteristic {p} is not below 2^16"
            )));
        }
        if !numth::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec(Arc::new(FieldData {
            p,
            n: 1,
            q: p,
            modulus: Vec::new(),
        })))
    }

    /// The extension field F_{p^n}, n >= 2. When no modulus is supplied the
    /// first monic irreducible of degree n in enumeration order (ascending
    /// value of a_0 + a_1 p + ... + a_{n-1} p^{n-1}) is used.
    pub fn extension(p: u64, n: usize, modulus: Option<&Poly>) -> Result<Self> {
        let base = FieldSpec::prime(p)?;
        if n < 2 {
            return Err(Error::CapacityExceeded(format!(
                "extension degree must be at least 2, got {n}"
            )));
        }
        let q = numth::checked_pow(p, n as u32).ok_or_else(|| {
            Error::CapacityExceeded(format!("{p}^{n} does not fit in 64 bits"))
        })?;

        let modulus_coeffs = match modulus {
            Some(m) => {
                if m.field() != &base {
                    return Err(Error::InvalidModulus {
                        p,
                        expected: n,
                        reason: "modulus is not over the prime subfield".into(),
                    });
                }
                if m.degree() != n || m.is_zero() {
                    return Err(Error::InvalidModulus {
                        p,
                        expected: n,
                        reason: format!("degree is {}", m.degree()),
                    });
                }
                if !m.is_monic() {
                    return Err(Error::InvalidModulus {
                        p,
                        expected: n,
                        reason: "not monic".into(),
                    });
                }
                if !crate::oracle::brute_force_irreducible(m)? {
                    return Err(Error::ModulusReducible { p });
                }
                m.coeffs().iter().map(|c| c.coeffs()[0]).collect()
            }
            None => find_modulus(&base, n)?,
        };

        Ok(FieldSpec(Arc::new(FieldData {
            p,
            n,
            q,
            modulus: modulus_coeffs,
        })))
    }

    /// Parses the field spec text form: "p" or "p^n".
    pub fn parse(text: &str) -> Result<Self> {
        let parse_err = |message: &str, position: usize| Error::Parse {
            position,
            message: message.into(),
        };
        match text.split_once('^') {
            None => {
                let p = text
                    .trim()
                    .parse::<u64>()
                    .map_err(|_| parse_err("expected a prime", 0))?;
                FieldSpec::prime(p)
            }
            Some((ps, ns)) => {
                let p = ps
                    .trim()
                    .parse::<u64>()
                    .map_err(|_| parse_err("expected a prime", 0))?;
                let n = ns
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| parse_err("expected an extension degree", ps.len() + 1))?;
                if n == 1 {
                    FieldSpec::prime(p)
                } else {
                    FieldSpec::extension(p, n, None)
                }
            }
        }
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    /// Extension degree n (1 for prime fields).
    pub fn extension_degree(&self) -> usize {
        self.0.n
    }

    /// Field cardinality q = p^n.
    pub fn q(&self) -> u64 {
        self.0.q
    }

    pub fn prime_subfield(&self) -> FieldSpec {
        if self.0.n == 1 {
            self.clone()
        } else {
            FieldSpec::prime(self.0.p).expect("characteristic is prime")
        }
    }

    /// The defining modulus as a polynomial over F_p (None for prime fields).
    pub fn modulus(&self) -> Option<Poly> {
        if self.0.n == 1 {
            None
        } else {
            let base = self.prime_subfield();
            Some(Poly::from_scalars(&base, &self.0.modulus))
        }
    }

    pub(crate) fn modulus_coeffs(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coeffs: std::iter::repeat_n(0, self.0.n).collect(),
        }
    }

    pub fn one(&self) -> FieldElement {
        self.scalar(1)
    }

    /// Embeds the integer c as c mod p (a prime-subfield element).
    pub fn scalar(&self, c: u64) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = c % self.0.p;
        e
    }

    /// Element with the given basis coefficients (each must be < p; short
    /// vectors are zero-padded).
    pub fn element_from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.0.n {
            return Err(Error::CoefficientOutOfRange {
                value: coeffs[self.0.n],
                p: self.0.p,
            });
        }
        let mut e = self.zero();
        for (i, &c) in coeffs.iter().enumerate() {
            if c >= self.0.p {
                return Err(Error::CoefficientOutOfRange { value: c, p: self.0.p });
            }
            e.coeffs[i] = c;
        }
        Ok(e)
    }

    /// Element number idx in enumeration order: the base-p digits of idx are
    /// the basis coefficients, least significant digit first.
    pub fn element_from_index(&self, idx: u64) -> FieldElement {
        debug_assert!(idx < self.0.q);
        let mut e = self.zero();
        let mut rest = idx;
        for i in 0..self.0.n {
            e.coeffs[i] = rest % self.0.p;
            rest /= self.0.p;
        }
        e
    }

    /// All q elements in enumeration order (0, 1, ..., counter order).
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.q).map(move |i| self.element_from_index(i))
    }
}

/// Enumeration-order search for the first monic irreducible of degree n
/// over F_p; used when no modulus is supplied.
fn find_modulus(base: &FieldSpec, n: usize) -> Result<Vec<u64>> {
    let p = base.p();
    let total = numth::checked_pow(p, n as u32).ok_or_else(|| {
        Error::CapacityExceeded(format!("{p}^{n} does not fit in 64 bits"))
    })?;
    for idx in 0..total {
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut rest = idx;
        for _ in 0..n {
            coeffs.push(rest % p);
            rest /= p;
        }
        coeffs.push(1);
        let candidate = Poly::from_scalars(base, &coeffs);
        if crate::oracle::brute_force_irreducible(&candidate)? {
            return Ok(coeffs);
        }
    }
    unreachable!("irreducibles of every degree exist over F_p")
}

/// An element of F_q: n residues mod p, coefficient of the basis power i
/// at index i.
#[derive(Clone, Debug)]
pub struct FieldElement {
    field: FieldSpec,
    coeffs: Coeffs,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.extension_degree() == 1 {
            write!(f, "{}", self.coeffs[0])
        } else {
            write!(f, "[")?;
            for (i, c) in self.coeffs.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, "]")
        }
    }
}

impl FieldElement {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// Position in enumeration order: sum of coeff_i * p^i.
    pub fn index(&self) -> u64 {
        let p = self.field.p();
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * p + c)
    }

    fn check_same_field(&self, rhs: &FieldElement) -> Result<()> {
        if self.field == rhs.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.check_same_field(rhs)?;
        Ok(self.add_raw(rhs))
    }

    pub fn sub(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.check_same_field(rhs)?;
        Ok(self.sub_raw(rhs))
    }

    pub fn mul(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.check_same_field(rhs)?;
        Ok(self.mul_raw(rhs))
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.field.p();
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c = (p - *c) % p;
        }
        out
    }

    /// Multiplicative inverse via a^(q-2); Lagrange gives a^(q-1) = 1.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.field.q() - 2))
    }

    /// Square-and-multiply power; a^0 = 1 for every a including 0.
    pub fn pow(&self, mut k: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_raw(&base);
            }
            base = base.mul_raw(&base);
            k >>= 1;
        }
        acc
    }

    // Raw kernels: same-field is the caller's responsibility (checked once
    // at container boundaries, asserted here).

    pub(crate) fn add_raw(&self, rhs: &FieldElement) -> FieldElement {
        debug_assert!(self.field == rhs.field);
        let p = self.field.p();
        let mut out = self.clone();
        for (c, r) in out.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *c = (*c + r) % p;
        }
        out
    }

    pub(crate) fn sub_raw(&self, rhs: &FieldElement) -> FieldElement {
        debug_assert!(self.field == rhs.field);
        let p = self.field.p();
        let mut out = self.clone();
        for (c, r) in out.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *c = (*c + p - r) % p;
        }
        out
    }

    pub(crate) fn mul_raw(&self, rhs: &FieldElement) -> FieldElement {
        debug_assert!(self.field == rhs.field);
        let p = self.field.p();
        let n = self.field.extension_degree();
        if n == 1 {
            let mut out = self.clone();
            out.coeffs[0] = self.coeffs[0] * rhs.coeffs[0] % p;
            return out;
        }
        // Schoolbook product of the coefficient polynomials, then reduction
        // by the monic modulus: t^n = -(m_0 + m_1 t + ... + m_{n-1} t^{n-1}).
        let mut buf: SmallVec<[u64; 8]> = SmallVec::from_elem(0, 2 * n - 1);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                buf[i + j] = (buf[i + j] + a * b) % p;
            }
        }
        let modulus = self.field.modulus_coeffs();
        for i in (n..2 * n - 1).rev() {
            let c = buf[i];
            if c == 0 {
                continue;
            }
            buf[i] = 0;
            for j in 0..n {
                if modulus[j] != 0 {
                    buf[i - n + j] = (buf[i - n + j] + c * (p - modulus[j])) % p;
                }
            }
        }
        let mut out = self.field.zero();
        out.coeffs.copy_from_slice(&buf[..n]);
        out
    }
}
