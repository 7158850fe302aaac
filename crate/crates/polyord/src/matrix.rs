//! Dense exact linear algebra over a finite field: products and powers,
//! rank by row echelon, characteristic polynomial via Hessenberg
//! reduction, minimal polynomial via Krylov dependence, multiplicative
//! order, and the row-recurrence ("vertical strip") computation of
//! successive companion-matrix powers.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::numth;
use crate::poly::Poly;

/// Square matrix over a field, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    field: FieldSpec,
    dim: usize,
    entries: Vec<FieldElement>,
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn zero(field: &FieldSpec, dim: usize) -> Self {
        assert!(dim >= 1, "matrices have dimension at least 1");
        Mat {
            field: field.clone(),
            dim,
            entries: vec![field.zero(); dim * dim],
        }
    }

    pub fn identity(field: &FieldSpec, dim: usize) -> Self {
        let mut m = Mat::zero(field, dim);
        for i in 0..dim {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `rows.len()`
    /// and every entry must belong to `field`.
    pub fn from_rows(field: &FieldSpec, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch);
        }
        let entries: Vec<FieldElement> = rows.into_iter().flatten().collect();
        if entries.iter().any(|e| e.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Mat {
            field: field.clone(),
            dim,
            entries,
        })
    }

    /// Convenience: entries given as integers, embedded mod p.
    pub fn from_scalar_rows(field: &FieldSpec, rows: &[&[u64]]) -> Self {
        let dim = rows.len();
        assert!(dim >= 1 && rows.iter().all(|r| r.len() == dim));
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| field.scalar(v)))
            .collect();
        Mat {
            field: field.clone(),
            dim,
            entries,
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, i: usize, j: usize) -> &FieldElement {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: FieldElement) {
        self.entries[i * self.dim + j] = value;
    }

    /// Row entries as enumeration indices (the plain residues over a prime
    /// field); handy in tests.
    pub fn row_scalars(&self, i: usize) -> Vec<u64> {
        (0..self.dim).map(|j| self.at(i, j).index()).collect()
    }

    pub fn is_identity(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let e = self.at(i, j);
                if i == j {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Companion shape: ones on the superdiagonal, zeros elsewhere above
    /// the last row. Every 1x1 matrix is the companion of t - c.
    pub fn is_companion(&self) -> bool {
        for i in 0..self.dim.saturating_sub(1) {
            for j in 0..self.dim {
                let e = self.at(i, j);
                if j == i + 1 {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    fn check_compatible(&self, rhs: &Mat) -> Result<()> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch);
        }
        Ok(())
    }

    pub fn mul(&self, rhs: &Mat) -> Result<Mat> {
        self.check_compatible(rhs)?;
        let d = self.dim;
        let mut out = Mat::zero(&self.field, d);
        for i in 0..d {
            for k in 0..d {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j).add_raw(&a.mul_raw(b));
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Mat) -> Result<Mat> {
        self.check_compatible(rhs)?;
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(rhs.entries.iter()) {
            *a = a.add_raw(b);
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Mat) -> Result<Mat> {
        self.check_compatible(rhs)?;
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(rhs.entries.iter()) {
            *a = a.sub_raw(b);
        }
        Ok(out)
    }

    /// Square-and-multiply power; self^0 is the identity.
    pub fn pow(&self, mut k: u64) -> Mat {
        let mut base = self.clone();
        let mut acc = Mat::identity(&self.field, self.dim);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same shape");
            }
            base = base.mul(&base).expect("same shape");
            k >>= 1;
        }
        acc
    }

    /// Rank by row-echelon reduction with exact field inverses.
    pub fn rank(&self) -> usize {
        let d = self.dim;
        let mut rows: Vec<Vec<FieldElement>> = (0..d)
            .map(|i| (0..d).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut rank = 0;
        for col in 0..d {
            let pivot = (rank..d).find(|&r| !rows[r][col].is_zero());
            let Some(pivot) = pivot else { continue };
            rows.swap(rank, pivot);
            let inv = rows[rank][col].inv().expect("pivot is nonzero");
            for r in rank + 1..d {
                if rows[r][col].is_zero() {
                    continue;
                }
                let factor = rows[r][col].mul_raw(&inv);
                for c in col..d {
                    let v = rows[r][c].sub_raw(&factor.mul_raw(&rows[rank][c]));
                    rows[r][c] = v;
                }
            }
            rank += 1;
            if rank == d {
                break;
            }
        }
        rank
    }

    /// Solves self * X = rhs by Gaussian elimination on the augmented
    /// system. Errors with Singular when self has no inverse.
    pub fn solve(&self, rhs: &Mat) -> Result<Mat> {
        self.check_compatible(rhs)?;
        let d = self.dim;
        let mut a: Vec<Vec<FieldElement>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| self.at(i, j).clone())
                    .chain((0..d).map(|j| rhs.at(i, j).clone()))
                    .collect()
            })
            .collect();
        for col in 0..d {
            let pivot = (col..d)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::Singular)?;
            a.swap(col, pivot);
            let inv = a[col][col].inv().expect("pivot is nonzero");
            for c in col..2 * d {
                a[col][c] = a[col][c].mul_raw(&inv);
            }
            for r in 0..d {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in col..2 * d {
                    let v = a[r][c].sub_raw(&factor.mul_raw(&a[col][c]));
                    a[r][c] = v;
                }
            }
        }
        let mut out = Mat::zero(&self.field, d);
        for i in 0..d {
            for j in 0..d {
                out.set(i, j, a[i][d + j].clone());
            }
        }
        Ok(out)
    }

    /// Characteristic polynomial det(tE - A), monic of degree d. The matrix
    /// is first brought to upper Hessenberg form by similarity, then the
    /// leading-minor recurrence assembles the polynomial.
    pub fn char_poly(&self) -> Poly {
        let d = self.dim;
        let mut h: Vec<Vec<FieldElement>> = (0..d)
            .map(|i| (0..d).map(|j| self.at(i, j).clone()).collect())
            .collect();

        // Similarity reduction: clear column j below the subdiagonal, each
        // row operation paired with the inverse column operation.
        for j in 0..d.saturating_sub(2) {
            let Some(pivot) = (j + 1..d).find(|&r| !h[r][j].is_zero()) else {
                continue;
            };
            if pivot != j + 1 {
                h.swap(pivot, j + 1);
                for row in h.iter_mut() {
                    row.swap(pivot, j + 1);
                }
            }
            let inv = h[j + 1][j].inv().expect("pivot is nonzero");
            for r in j + 2..d {
                if h[r][j].is_zero() {
                    continue;
                }
                let factor = h[r][j].mul_raw(&inv);
                for c in 0..d {
                    let v = h[r][c].sub_raw(&factor.mul_raw(&h[j + 1][c]));
                    h[r][c] = v;
                }
                for r2 in 0..d {
                    let v = h[r2][j + 1].add_raw(&factor.mul_raw(&h[r2][r]));
                    h[r2][j + 1] = v;
                }
            }
        }

        // p_k = (t - h[k-1][k-1]) p_{k-1}
        //       - sum_m h[m][k-1] * (prod of subdiagonal entries) * p_m
        let field = &self.field;
        let mut minors: Vec<Poly> = vec![Poly::one(field)];
        for k in 1..=d {
            let t_shift = Poly::from_coeffs(
                field,
                vec![h[k - 1][k - 1].neg(), field.one()],
            )
            .expect("same field");
            let mut p = t_shift.mul(&minors[k - 1]).expect("same field");
            let mut subdiag = field.one();
            for m in (0..k - 1).rev() {
                subdiag = subdiag.mul_raw(&h[m + 1][m]);
                if subdiag.is_zero() {
                    break;
                }
                let w = h[m][k - 1].mul_raw(&subdiag);
                if w.is_zero() {
                    continue;
                }
                let term = minors[m]
                    .mul(&Poly::constant(w))
                    .expect("same field");
                p = p.sub(&term).expect("same field");
            }
            minors.push(p);
        }
        minors.pop().unwrap()
    }

    /// Minimal polynomial: the least-degree monic mu with mu(A) = 0, found
    /// by the first linear dependence among E, A, A^2, ... viewed as
    /// vectors of length d^2 (Gaussian elimination with tracked
    /// combinations; Cayley-Hamilton bounds the degree by d).
    pub fn min_poly(&self) -> Poly {
        let d = self.dim;
        let field = &self.field;
        // (reduced vector, pivot index, combination over original powers)
        let mut basis: Vec<(Vec<FieldElement>, usize, Vec<FieldElement>)> = Vec::new();
        let mut power = Mat::identity(field, d);
        for k in 0..=d {
            let mut vec: Vec<FieldElement> = power.entries.clone();
            let mut combo = vec![field.zero(); k + 1];
            combo[k] = field.one();
            for (bvec, bpivot, bcombo) in &basis {
                let factor = vec[*bpivot].clone();
                if factor.is_zero() {
                    continue;
                }
                for (v, b) in vec.iter_mut().zip(bvec.iter()) {
                    *v = v.sub_raw(&factor.mul_raw(b));
                }
                for (c, b) in combo.iter_mut().zip(bcombo.iter()) {
                    *c = c.sub_raw(&factor.mul_raw(b));
                }
            }
            match vec.iter().position(|e| !e.is_zero()) {
                None => {
                    return Poly::from_coeffs(field, combo).expect("same field");
                }
                Some(pivot) => {
                    let inv = vec[pivot].inv().expect("pivot is nonzero");
                    for v in vec.iter_mut() {
                        *v = v.mul_raw(&inv);
                    }
                    for c in combo.iter_mut() {
                        *c = c.mul_raw(&inv);
                    }
                    basis.push((vec, pivot, combo));
                }
            }
            power = power.mul(self).expect("same shape");
        }
        unreachable!("a dependence arises by degree d")
    }

    /// Multiplicative order: the least m >= 1 with self^m = E, found by
    /// plain iteration (one row-recurrence step per candidate for
    /// companion matrices, one multiplication otherwise). Requires a
    /// nonsingular matrix; errors with CapExceeded past `cap` candidates.
    pub fn order(&self, cap: u64) -> Result<u64> {
        debug_assert!(cap >= 1);
        if self.rank() < self.dim {
            return Err(Error::Singular);
        }
        if self.is_companion() {
            let mut strip = StripState::from_companion(self);
            for m in 1..=cap {
                if strip.window_is_identity() {
                    return Ok(m);
                }
                strip.advance();
            }
            return Err(Error::CapExceeded { cap });
        }
        let mut acc = self.clone();
        for m in 1..=cap {
            if acc.is_identity() {
                return Ok(m);
            }
            acc = acc.mul(self).expect("same shape");
        }
        Err(Error::CapExceeded { cap })
    }

    /// Order via a factored multiple: M = p^ceil(log_p d) * lcm(q^i - 1,
    /// i = 1..d) is a multiple of every nonsingular order (block-order
    /// composition), so stripping prime factors of M while self^(M/rho)
    /// stays the identity pins the order exactly. Falls back to plain
    /// iteration when M overflows.
    pub fn order_factored(&self, cap: u64) -> Result<u64> {
        if self.rank() < self.dim {
            return Err(Error::Singular);
        }
        let Some(multiple) = self.order_multiple() else {
            return self.order(cap);
        };
        debug_assert!(self.pow(multiple).is_identity());
        let mut m = multiple;
        for rho in numth::factorize(multiple).primes() {
            while m % rho == 0 && self.pow(m / rho).is_identity() {
                m /= rho;
            }
        }
        Ok(m)
    }

    /// p^ceil(log_p d) * lcm(q^i - 1 for i in 1..=d), if it fits in u64.
    fn order_multiple(&self) -> Option<u64> {
        let p = self.field.p();
        let q = self.field.q();
        let d = self.dim as u64;
        let mut ppow = 1u64;
        while ppow < d {
            ppow = ppow.checked_mul(p)?;
        }
        let mut acc = ppow;
        let mut qi = 1u64;
        for _ in 1..=d {
            qi = qi.checked_mul(q)?;
            let g = numth::gcd(acc, qi - 1);
            acc = (acc / g).checked_mul(qi - 1)?;
        }
        Some(acc)
    }
}

/// Rolling window over the row recurrence that generates successive powers
/// of a companion matrix: each step appends the row
/// -a_{d-1} * last - a_{d-2} * penultimate - ... - a_0 * (d-th from end)
/// and slides the window down one row. After l advances the window equals
/// the (l+1)-th power of the companion matrix.
#[derive(Clone, Debug)]
pub struct StripState {
    field: FieldSpec,
    dim: usize,
    neg_coeffs: Vec<FieldElement>,
    window: VecDeque<Vec<FieldElement>>,
    advances: u64,
}

impl StripState {
    /// Initializes the window to the companion matrix of a monic f.
    pub fn new(f: &Poly) -> Result<Self> {
        Ok(StripState::from_companion(&f.companion_matrix()?))
    }

    pub(crate) fn from_companion(companion: &Mat) -> Self {
        debug_assert!(companion.is_companion());
        let d = companion.dim();
        let window = (0..d)
            .map(|i| (0..d).map(|j| companion.at(i, j).clone()).collect())
            .collect();
        // The last row already stores -a_0 .. -a_{d-1}.
        let neg_coeffs = (0..d)
            .map(|j| companion.at(d - 1, j).clone())
            .collect();
        StripState {
            field: companion.field().clone(),
            dim: d,
            neg_coeffs,
            window,
            advances: 0,
        }
    }

    /// Number of advances so far.
    pub fn advances(&self) -> u64 {
        self.advances
    }

    /// The window currently holds this power of the companion matrix.
    pub fn power(&self) -> u64 {
        self.advances + 1
    }

    /// Appends one recurrence row and slides the window.
    pub fn advance(&mut self) {
        let d = self.dim;
        let mut row = vec![self.field.zero(); d];
        for (i, c) in self.neg_coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (dst, src) in row.iter_mut().zip(self.window[i].iter()) {
                *dst = dst.add_raw(&c.mul_raw(src));
            }
        }
        self.window.pop_front();
        self.window.push_back(row);
        self.advances += 1;
    }

    pub fn window_matrix(&self) -> Mat {
        let rows: Vec<Vec<FieldElement>> = self.window.iter().cloned().collect();
        Mat::from_rows(&self.field, rows).expect("window is square")
    }

    pub fn window_is_identity(&self) -> bool {
        for (i, row) in self.window.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if i == j {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }
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
    fn multiplication_examples() {
        let f2 = f2();
        let a = Mat::from_scalar_rows(&f2, &[&[0, 1], &[1, 1]]);
        let id = Mat::identity(&f2, 2);
        assert_eq!(a.mul(&id).unwrap(), a);
        assert_eq!(
            a.mul(&a).unwrap(),
            Mat::from_scalar_rows(&f2, &[&[1, 1], &[1, 0]])
        );
        let f3 = f3();
        let b = Mat::from_scalar_rows(&f3, &[&[2]]);
        assert_eq!(b.mul(&b).unwrap(), Mat::identity(&f3, 1));
    }

    #[test]
    fn power_examples() {
        let a = p2(&[1, 1, 1]).companion_matrix().unwrap();
        assert_eq!(a.pow(0), Mat::identity(&f2(), 2));
        assert_eq!(a.pow(3), Mat::identity(&f2(), 2));
        assert_eq!(
            a.pow(2),
            Mat::from_scalar_rows(&f2(), &[&[1, 1], &[1, 0]])
        );
        let b = Mat::from_scalar_rows(&f3(), &[&[2]]);
        assert_eq!(b.pow(2), Mat::identity(&f3(), 1));
    }

    #[test]
    fn strip_examples() {
        let f = p2(&[1, 1, 1]);
        let mut s = StripState::new(&f).unwrap();
        assert_eq!(s.window_matrix(), f.companion_matrix().unwrap());
        s.advance();
        assert_eq!(
            s.window_matrix(),
            Mat::from_scalar_rows(&f2(), &[&[1, 1], &[1, 0]])
        );
        assert_eq!(s.window_matrix(), f.companion_matrix().unwrap().pow(2));
        s.advance();
        assert!(s.window_is_identity());
        assert_eq!(s.power(), 3);
    }

    #[test]
    fn strip_matches_pow_for_small_f2_polys() {
        // every monic f with nonzero constant term, deg <= 6, window vs pow
        let f2 = f2();
        for deg in 1..=6usize {
            for idx in 0..(1u64 << (deg - 1)) {
                let mut coeffs = vec![1u64];
                for b in 0..deg - 1 {
                    coeffs.push((idx >> b) & 1);
                }
                coeffs.push(1);
                let f = Poly::from_scalars(&f2, &coeffs);
                let a = f.companion_matrix().unwrap();
                let mut s = StripState::new(&f).unwrap();
                for l in 1..=20u64 {
                    assert_eq!(s.window_matrix(), a.pow(l), "f = {f}, l = {l}");
                    s.advance();
                }
            }
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Mat::identity(&f2(), 4).rank(), 4);
        assert_eq!(Mat::zero(&f2(), 3).rank(), 0);
        let a = p2(&[1, 1, 1]).companion_matrix().unwrap();
        let diff = a.sub(&Mat::identity(&f2(), 2)).unwrap();
        assert_eq!(diff.rank(), 2);
        let full = Mat::from_scalar_rows(&f3(), &[&[1, 0, 0], &[1, 1, 0], &[1, 1, 1]]);
        assert_eq!(full.rank(), 3);
        // rows (1,2,0) and (2,1,0) are dependent mod 3
        let deficient = Mat::from_scalar_rows(&f3(), &[&[1, 2, 0], &[2, 1, 0], &[0, 0, 1]]);
        assert_eq!(deficient.rank(), 2);
    }

    #[test]
    fn char_poly_examples() {
        let f = p2(&[1, 1, 0, 1]);
        assert_eq!(f.companion_matrix().unwrap().char_poly(), f);
        assert_eq!(
            Mat::identity(&f2(), 2).char_poly(),
            p2(&[1, 0, 1]) // (t-1)^2 = t^2+1 over F_2
        );
        let diag = Mat::from_scalar_rows(&f3(), &[&[1, 0], &[0, 2]]);
        assert_eq!(diag.char_poly(), Poly::from_scalars(&f3(), &[2, 0, 1]));
    }

    #[test]
    fn char_poly_of_companions_exhaustive_f3() {
        let f3 = f3();
        for deg in 1..=4usize {
            for idx in 0..3u64.pow(deg as u32) {
                let mut coeffs = Vec::new();
                let mut rest = idx;
                for _ in 0..deg {
                    coeffs.push(rest % 3);
                    rest /= 3;
                }
                coeffs.push(1);
                let f = Poly::from_scalars(&f3, &coeffs);
                assert_eq!(f.companion_matrix().unwrap().char_poly(), f, "f = {f}");
            }
        }
    }

    #[test]
    fn min_poly_examples() {
        let f = p2(&[1, 1, 1]);
        assert_eq!(f.companion_matrix().unwrap().min_poly(), f);
        assert_eq!(Mat::identity(&f2(), 3).min_poly(), p2(&[1, 1]));

        // fifth power of the companion of the primitive quartic t^4+t+1 has
        // order 3, hence minimal polynomial t^2+t+1
        let a = p2(&[1, 1, 0, 0, 1]).companion_matrix().unwrap().pow(5);
        assert_eq!(a.min_poly(), p2(&[1, 1, 1]));
        assert_eq!(a.char_poly(), p2(&[1, 1, 1]).pow(2));
    }

    #[test]
    fn min_poly_divides_char_poly() {
        let a = Mat::from_scalar_rows(&f3(), &[&[1, 2, 0], &[0, 1, 1], &[1, 0, 2]]);
        let (_, r) = a.char_poly().divrem(&a.min_poly()).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn order_examples() {
        let qd_cap = |d: u32| 2u64.pow(d) - 1;
        let a = p2(&[1, 1, 1]).companion_matrix().unwrap();
        assert_eq!(a.order(qd_cap(2)).unwrap(), 3);
        let b = p2(&[1, 1, 1, 1, 1]).companion_matrix().unwrap();
        assert_eq!(b.order(qd_cap(4)).unwrap(), 5);
        let c = Mat::from_scalar_rows(&f3(), &[&[2]]);
        assert_eq!(c.order(2).unwrap(), 2);
        assert_eq!(Mat::zero(&f2(), 2).order(3), Err(Error::Singular));
        // order 5 exceeds a cap of 4
        assert_eq!(b.order(4), Err(Error::CapExceeded { cap: 4 }));
    }

    #[test]
    fn order_factored_agrees_with_iteration() {
        let polys = [
            p2(&[1, 1, 1]),
            p2(&[1, 0, 1]),
            p2(&[1, 1, 0, 0, 1]),
            p2(&[1, 1, 0, 0, 1, 0, 1]),
            Poly::from_scalars(&f3(), &[1, 1]),
            Poly::from_scalars(&f3(), &[2, 2, 1]),
            Poly::from_scalars(&f3(), &[1, 0, 2, 1]),
        ];
        for f in polys {
            let a = f.companion_matrix().unwrap();
            let cap = f.field().q().pow(f.degree() as u32) - 1;
            assert_eq!(
                a.order_factored(cap).unwrap(),
                a.order(cap).unwrap(),
                "f = {f}"
            );
        }
    }

    #[test]
    fn order_divides_identity_exponents() {
        let a = p2(&[1, 1, 0, 0, 1, 0, 1]).companion_matrix().unwrap();
        let m = a.order(63).unwrap();
        assert_eq!(m, 21);
        for k in 1..=63u64 {
            assert_eq!(a.pow(k).is_identity(), k % m == 0, "k = {k}");
        }
    }

    #[test]
    fn solve_and_conjugation() {
        let f2 = f2();
        let a = p2(&[1, 1, 1]).companion_matrix().unwrap();
        let p = Mat::from_scalar_rows(&f2, &[&[1, 1], &[0, 1]]);
        let conj = p.solve(&a.mul(&p).unwrap()).unwrap();
        // conjugation preserves order, rank of A - E, and char poly
        assert_eq!(conj.order(3).unwrap(), a.order(3).unwrap());
        assert_eq!(conj.char_poly(), a.char_poly());
        let id = Mat::identity(&f2, 2);
        assert_eq!(
            conj.sub(&id).unwrap().rank(),
            a.sub(&id).unwrap().rank()
        );
        assert_eq!(Mat::zero(&f2, 2).solve(&id), Err(Error::Singular));
    }
}
