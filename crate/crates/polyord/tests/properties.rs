//! Randomized invariants over the arithmetic kernels.

use proptest::prelude::*;

use polyord::gf::FieldSpec;
use polyord::matrix::Mat;
use polyord::poly::Poly;

fn small_prime_field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(2u64), Just(3), Just(5)].prop_map(|p| FieldSpec::prime(p).unwrap())
}

/// (field, scalar coefficient vector) pairs; scalars reduce mod p on entry.
fn poly_with_field(max_len: usize) -> impl Strategy<Value = (FieldSpec, Poly)> {
    (small_prime_field(), prop::collection::vec(0u64..16, 1..=max_len))
        .prop_map(|(field, scalars)| {
            let p = Poly::from_scalars(&field, &scalars);
            (field, p)
        })
}

fn monic_poly(max_degree: usize) -> impl Strategy<Value = Poly> {
    (small_prime_field(), 1..=max_degree)
        .prop_flat_map(|(field, degree)| {
            prop::collection::vec(0u64..16, degree).prop_map(move |mut scalars| {
                scalars.push(1);
                Poly::from_scalars(&field, &scalars)
            })
        })
}

fn square_matrix(max_dim: usize) -> impl Strategy<Value = Mat> {
    (small_prime_field(), 1..=max_dim)
        .prop_flat_map(|(field, dim)| {
            prop::collection::vec(0u64..16, dim * dim).prop_map(move |vals| {
                let mut m = Mat::zero(&field, dim);
                for i in 0..dim {
                    for j in 0..dim {
                        m.set(i, j, field.scalar(vals[i * dim + j]));
                    }
                }
                m
            })
        })
}

/// Cofactor-expansion determinant, independent of the library's
/// elimination kernels.
fn det_by_cofactors(m: &[Vec<polyord::FieldElement>]) -> polyord::FieldElement {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let field = m[0][0].field().clone();
    let mut acc = field.zero();
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<polyord::FieldElement>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = entry.mul(&det_by_cofactors(&minor)).unwrap();
        acc = if j % 2 == 0 {
            acc.add(&term).unwrap()
        } else {
            acc.sub(&term).unwrap()
        };
    }
    acc
}

/// Sum of all k x k principal minors.
fn principal_minor_sum(a: &Mat, k: usize) -> polyord::FieldElement {
    let d = a.dim();
    let field = a.field().clone();
    if k == 0 {
        return field.one();
    }
    let mut acc = field.zero();
    // iterate k-subsets of 0..d as bitmasks
    for mask in 0u32..(1 << d) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let rows: Vec<usize> = (0..d).filter(|i| mask & (1 << i) != 0).collect();
        let sub: Vec<Vec<polyord::FieldElement>> = rows
            .iter()
            .map(|&i| rows.iter().map(|&j| a.at(i, j).clone()).collect())
            .collect();
        acc = acc.add(&det_by_cofactors(&sub)).unwrap();
    }
    acc
}

proptest! {
    #[test]
    fn parse_format_round_trip((_, p) in poly_with_field(9)) {
        let symbolic = p.to_string();
        prop_assert_eq!(&Poly::parse(&symbolic, p.field()).unwrap(), &p);
        let list = p.to_list_string();
        prop_assert_eq!(&Poly::parse(&list, p.field()).unwrap(), &p);
    }

    #[test]
    fn divrem_recombines((_, a) in poly_with_field(9), (_, b) in poly_with_field(6)) {
        // move b into a's field so division is defined
        let b = Poly::from_scalars(
            a.field(),
            &b.coeffs().iter().map(|c| c.index()).collect::<Vec<_>>(),
        );
        prop_assume!(!b.is_zero());
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(&q.mul(&b).unwrap().add(&r).unwrap(), &a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn companion_characteristic_round_trip(f in monic_poly(6)) {
        let a = f.companion_matrix().unwrap();
        prop_assert_eq!(a.char_poly(), f);
    }

    #[test]
    fn char_poly_coefficients_are_signed_minor_sums(a in square_matrix(4)) {
        // det(tE - A): the coefficient of t^k is (-1)^(d-k) times the sum
        // of the (d-k) x (d-k) principal minors
        let d = a.dim();
        let chi = a.char_poly();
        prop_assert!(chi.is_monic());
        prop_assert_eq!(chi.degree(), d);
        for k in 0..d {
            let mut expected = principal_minor_sum(&a, d - k);
            if (d - k) % 2 == 1 {
                expected = expected.neg();
            }
            prop_assert_eq!(chi.coeff(k), expected, "coefficient of t^{}", k);
        }
    }

    #[test]
    fn min_poly_divides_char_poly(a in square_matrix(4)) {
        let mu = a.min_poly();
        let chi = a.char_poly();
        let (_, r) = chi.divrem(&mu).unwrap();
        prop_assert!(r.is_zero());
        prop_assert!(mu.is_monic());
    }

    #[test]
    fn order_divides_exactly_the_identity_powers(f in monic_poly(5)) {
        prop_assume!(!f.constant_coeff().is_zero());
        let a = f.companion_matrix().unwrap();
        let cap = f.field().q().pow(f.degree() as u32) - 1;
        let m = a.order(cap).unwrap();
        let upper = (3 * m).min(cap);
        for k in 1..=upper {
            prop_assert_eq!(a.pow(k).is_identity(), k % m == 0);
        }
    }

    #[test]
    fn conjugation_preserves_order_rank_charpoly(
        f in monic_poly(4),
        seed in prop::collection::vec(0u64..16, 16),
    ) {
        prop_assume!(!f.constant_coeff().is_zero());
        let field = f.field().clone();
        let d = f.degree();
        let a = f.companion_matrix().unwrap();

        // deterministic invertible matrix derived from the seed bytes
        let mut p = Mat::identity(&field, d);
        let mut k = 0;
        for i in 0..d {
            for j in 0..d {
                if i != j {
                    p.set(i, j, field.scalar(seed[k % seed.len()]));
                    k += 1;
                }
            }
        }
        prop_assume!(p.rank() == d);
        let conj = p.solve(&a.mul(&p).unwrap()).unwrap();

        let cap = field.q().pow(d as u32) - 1;
        prop_assert_eq!(conj.order(cap).unwrap(), a.order(cap).unwrap());
        prop_assert_eq!(conj.char_poly(), a.char_poly());
        let e = Mat::identity(&field, d);
        prop_assert_eq!(
            conj.sub(&e).unwrap().rank(),
            a.sub(&e).unwrap().rank()
        );
    }
}
