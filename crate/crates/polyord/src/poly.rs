//! Dense polynomials over a field: ring arithmetic, division with
//! remainder, two text grammars, and the companion-matrix bridge.
//!
//! Coefficients are stored constant-term first; the zero polynomial is the
//! single zero coefficient. Text forms: the coefficient list "1,1,0,1"
//! (a_0 first) and the symbolic sum "t^3+t+1". Extension-field
//! coefficients are written as bracketed digit lists, e.g. "[1 1]" for
//! x+1 in F_4.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::matrix::Mat;

#[derive(Clone, Debug)]
pub struct Poly {
    field: FieldSpec,
    /// coeffs[i] holds the coefficient of t^i; last entry nonzero unless
    /// this is the zero polynomial (a single zero coefficient).
    coeffs: Vec<FieldElement>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Poly {
    /// Enumeration order: degree first, then coefficient vectors compared
    /// as base-q counters (most significant coefficient first). Distinct
    /// fields compare by (p, n, modulus) so the order is total.
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |p: &Poly| {
            (
                p.field.p(),
                p.field.extension_degree(),
                p.field.modulus_coeffs().to_vec(),
            )
        };
        key(self)
            .cmp(&key(other))
            .then(self.degree().cmp(&other.degree()))
            .then_with(|| {
                for i in (0..self.coeffs.len()).rev() {
                    let ord = self.coeffs[i].index().cmp(&other.coeffs[i].index());
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
                Ordering::Equal
            })
    }
}

impl Poly {
    /// Builds a polynomial from coefficients (a_0 first), dropping trailing
    /// zeros. All coefficients must belong to `field`.
    pub fn from_coeffs(field: &FieldSpec, coeffs: Vec<FieldElement>) -> Result<Self> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        let mut p = Poly {
            field: field.clone(),
            coeffs,
        };
        p.normalize();
        Ok(p)
    }

    /// Convenience: coefficients given as integers, each embedded mod p.
    pub fn from_scalars(field: &FieldSpec, scalars: &[u64]) -> Self {
        let coeffs = scalars.iter().map(|&c| field.scalar(c)).collect();
        let mut p = Poly {
            field: field.clone(),
            coeffs,
        };
        p.normalize();
        p
    }

    pub fn zero(field: &FieldSpec) -> Self {
        Poly {
            field: field.clone(),
            coeffs: vec![field.zero()],
        }
    }

    pub fn one(field: &FieldSpec) -> Self {
        Poly {
            field: field.clone(),
            coeffs: vec![field.one()],
        }
    }

    /// The monomial t^k.
    pub fn monomial(field: &FieldSpec, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = field.one();
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn constant(value: FieldElement) -> Self {
        Poly {
            field: value.field().clone(),
            coeffs: vec![value],
        }
    }

    fn normalize(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().unwrap().is_zero() {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(self.field.zero());
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Degree as length - 1; the zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().unwrap().is_one()
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of t^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_coeff(&self) -> &FieldElement {
        self.coeffs.last().unwrap()
    }

    pub fn constant_coeff(&self) -> &FieldElement {
        &self.coeffs[0]
    }

    fn check_same_field(&self, rhs: &Poly) -> Result<()> {
        if self.field == rhs.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, rhs: &Poly) -> Result<Poly> {
        self.check_same_field(rhs)?;
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.coeff(i).add_raw(&rhs.coeff(i)))
            .collect();
        let mut out = Poly {
            field: self.field.clone(),
            coeffs,
        };
        out.normalize();
        Ok(out)
    }

    pub fn sub(&self, rhs: &Poly) -> Result<Poly> {
        self.check_same_field(rhs)?;
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.coeff(i).sub_raw(&rhs.coeff(i)))
            .collect();
        let mut out = Poly {
            field: self.field.clone(),
            coeffs,
        };
        out.normalize();
        Ok(out)
    }

    pub fn neg(&self) -> Poly {
        let coeffs = self.coeffs.iter().map(|c| c.neg()).collect();
        Poly {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn mul(&self, rhs: &Poly) -> Result<Poly> {
        self.check_same_field(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add_raw(&a.mul_raw(b));
            }
        }
        let mut out = Poly {
            field: self.field.clone(),
            coeffs,
        };
        out.normalize();
        Ok(out)
    }

    /// self^k by repeated squaring; self^0 = 1.
    pub fn pow(&self, mut k: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            k >>= 1;
        }
        acc
    }

    /// Long division: self = q*rhs + r with deg r < deg rhs.
    pub fn divrem(&self, rhs: &Poly) -> Result<(Poly, Poly)> {
        self.check_same_field(rhs)?;
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.degree() < rhs.degree() || self.is_zero() {
            return Ok((Poly::zero(&self.field), self.clone()));
        }
        let lead_inv = rhs.leading_coeff().inv()?;
        let mut rem = self.coeffs.clone();
        let dq = self.degree() - rhs.degree();
        let mut quot = vec![self.field.zero(); dq + 1];
        for k in (0..=dq).rev() {
            let top = rem[k + rhs.degree()].clone();
            if top.is_zero() {
                continue;
            }
            let factor = top.mul_raw(&lead_inv);
            for (i, b) in rhs.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].sub_raw(&factor.mul_raw(b));
            }
            quot[k] = factor;
        }
        let mut q = Poly {
            field: self.field.clone(),
            coeffs: quot,
        };
        let mut r = Poly {
            field: self.field.clone(),
            coeffs: rem,
        };
        q.normalize();
        r.normalize();
        debug_assert!(r.is_zero() || r.degree() < rhs.degree());
        Ok((q, r))
    }

    /// Whether rhs divides self exactly.
    pub fn divisible_by(&self, rhs: &Poly) -> Result<bool> {
        Ok(self.divrem(rhs)?.1.is_zero())
    }

    /// The d x d companion matrix of a monic polynomial of degree d >= 1:
    /// ones on the superdiagonal, last row (-a_0, ..., -a_{d-1}). Its
    /// characteristic polynomial is the polynomial itself.
    pub fn companion_matrix(&self) -> Result<Mat> {
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        let d = self.degree();
        if d == 0 {
            return Err(Error::DegreeZero);
        }
        let mut m = Mat::zero(&self.field, d);
        for i in 0..d - 1 {
            m.set(i, i + 1, self.field.one());
        }
        for j in 0..d {
            m.set(d - 1, j, self.coeffs[j].neg());
        }
        Ok(m)
    }

    /// Machine form: comma-separated coefficients, constant term first.
    pub fn to_list_string(&self) -> String {
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses either grammar; anything containing 't' or a sign is
    /// symbolic, the rest is a coefficient list.
    pub fn parse(text: &str, field: &FieldSpec) -> Result<Poly> {
        if text.contains(['t', '+', '-']) {
            parse_symbolic(text, field)
        } else {
            parse_list(text, field)
        }
    }
}

impl fmt::Display for Poly {
    /// Symbolic form, highest power first: "t^3 + t + 1". Extension-field
    /// coefficients appear bracketed: "[1 1]*t^2 + [0 1]".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{c}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{c}*t^{i}")?,
            }
        }
        Ok(())
    }
}

// --- text grammars -------------------------------------------------------

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| self.error("integer too large"))
    }

    /// "[d d ...]" with each digit a residue < p.
    fn bracket_element(&mut self, field: &FieldSpec) -> Result<FieldElement> {
        self.skip_ws();
        debug_assert_eq!(self.bytes.get(self.pos), Some(&b'['));
        self.pos += 1;
        let mut digits = Vec::new();
        loop {
            match self.peek() {
                Some(b']') => {
                    self.pos += 1;
                    break;
                }
                Some(b) if b.is_ascii_digit() => digits.push(self.integer()?),
                _ => return Err(self.error("expected a digit or ']'")),
            }
        }
        if digits.len() > field.extension_degree() {
            return Err(self.error(format!(
                "too many digits for extension degree {}",
                field.extension_degree()
            )));
        }
        field.element_from_coeffs(&digits)
    }

    /// Integer residue (range-checked against p) or bracketed element.
    fn coefficient(&mut self, field: &FieldSpec) -> Result<FieldElement> {
        match self.peek() {
            Some(b'[') => self.bracket_element(field),
            Some(b) if b.is_ascii_digit() => {
                let v = self.integer()?;
                if v >= field.p() {
                    return Err(Error::CoefficientOutOfRange {
                        value: v,
                        p: field.p(),
                    });
                }
                Ok(field.scalar(v))
            }
            _ => Err(self.error("expected a coefficient")),
        }
    }
}

fn parse_list(text: &str, field: &FieldSpec) -> Result<Poly> {
    let mut s = Scanner::new(text);
    let mut coeffs = Vec::new();
    loop {
        coeffs.push(s.coefficient(field)?);
        match s.peek() {
            Some(b',') => {
                s.pos += 1;
            }
            None => break,
            _ => return Err(s.error("expected ',' or end of input")),
        }
    }
    Poly::from_coeffs(field, coeffs)
}

/// Sum of terms c, c*t^k, t^k, t with '+'/'-' separators; whitespace is
/// ignored and coefficients are reduced in the field's characteristic.
fn parse_symbolic(text: &str, field: &FieldSpec) -> Result<Poly> {
    let mut s = Scanner::new(text);
    let mut acc: Vec<FieldElement> = Vec::new();
    let mut negate = false;
    if s.peek() == Some(b'-') {
        s.pos += 1;
        negate = true;
    }
    loop {
        // coefficient, if present
        let coeff = match s.peek() {
            Some(b'[') => Some(s.bracket_element(field)?),
            Some(b) if b.is_ascii_digit() => Some(field.scalar(s.integer()?)),
            _ => None,
        };
        // optional '*' then the variable part
        let mut exponent = None;
        if coeff.is_some() && s.peek() == Some(b'*') {
            s.pos += 1;
            if s.peek() != Some(b't') {
                return Err(s.error("expected 't' after '*'"));
            }
        }
        if s.peek() == Some(b't') {
            s.pos += 1;
            if s.peek() == Some(b'^') {
                s.pos += 1;
                let k = s.integer()?;
                if k > u32::MAX as u64 {
                    return Err(s.error("exponent too large"));
                }
                exponent = Some(k as usize);
            } else {
                exponent = Some(1);
            }
        }
        let (c, k) = match (coeff, exponent) {
            (Some(c), Some(k)) => (c, k),
            (Some(c), None) => (c, 0),
            (None, Some(k)) => (field.one(), k),
            (None, None) => return Err(s.error("expected a term")),
        };
        let c = if negate { c.neg() } else { c };
        if acc.len() <= k {
            acc.resize(k + 1, field.zero());
        }
        acc[k] = acc[k].add_raw(&c);

        match s.peek() {
            Some(b'+') => {
                s.pos += 1;
                negate = false;
            }
            Some(b'-') => {
                s.pos += 1;
                negate = true;
            }
            None => break,
            _ => return Err(s.error("expected '+', '-' or end of input")),
        }
    }
    Poly::from_coeffs(field, acc)
}
