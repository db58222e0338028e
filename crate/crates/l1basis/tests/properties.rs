//! Property tests for the exact substrate and the analysis layers.

mod common;

use num::Integer;
use proptest::prelude::*;

use l1basis::basis::Basis;
use l1basis::constructions::{random_basis, RandomMode};
use l1basis::matrix::Matrix;
use l1basis::perturbation::{bp_criterion, perturbation_radius};
use l1basis::scalar::Scalar;
use l1basis::unconditional::unconditional_constant;
use l1basis::vector::{lp_norm, NormValue, PNorm, Vector};
use l1basis::BasisFile;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| Scalar::new(n, d))
}

fn vector(max_dim: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(scalar(), 1..=max_dim).prop_map(Vector::new)
}

fn square_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(scalar(), n * n).prop_map(move |cells| {
        let rows = cells.chunks(n).map(|c| c.to_vec()).collect();
        Matrix::from_rows(rows).unwrap()
    })
}

fn invertible_basis() -> impl Strategy<Value = Basis> {
    (1usize..=4)
        .prop_flat_map(square_matrix)
        .prop_filter_map("singular draw", |m| Basis::new(m).ok())
}

proptest! {
    #[test]
    fn scalar_ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn scalar_stays_reduced(a in scalar(), b in scalar()) {
        let x = &a * &b;
        prop_assert!(x.denom() > &num::BigInt::from(0));
        prop_assert!(x.numer().gcd(x.denom()) == num::BigInt::from(1) || x.is_zero());
    }

    #[test]
    fn norms_decrease_in_p(v in vector(6)) {
        // 1 <= p <= q <= infinity implies ||v||_q <= ||v||_p
        let exponents = [
            PNorm::one(),
            PNorm::Finite(Scalar::from(2)),
            PNorm::Finite(Scalar::from(3)),
            PNorm::Finite(Scalar::from(5)),
            PNorm::Infinity,
        ];
        for (i, p) in exponents.iter().enumerate() {
            for q in &exponents[i..] {
                let np = lp_norm(&v, p).unwrap();
                let nq = lp_norm(&v, q).unwrap();
                prop_assert_eq!(nq.le(&np), Some(true), "p = {}, q = {}", p, q);
            }
        }
    }

    #[test]
    fn single_support_vectors_have_equal_norms(x in scalar(), n in 1usize..6, j in 0usize..6) {
        let j = j % n;
        let v = Vector::standard(n, j).scale(&x);
        let magnitude = x.abs();
        for p in [PNorm::one(), PNorm::Infinity] {
            prop_assert_eq!(
                lp_norm(&v, &p).unwrap(),
                NormValue::Exact { value: magnitude.clone() }
            );
        }
        match lp_norm(&v, &PNorm::two()).unwrap() {
            NormValue::Power { pow, .. } => prop_assert_eq!(pow, magnitude.pow(2)),
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }

    #[test]
    fn inversion_is_involutive_and_two_sided(b in invertible_basis()) {
        let m = b.matrix();
        let inv = b.inverse();
        prop_assert!(m.mul(inv).is_identity());
        prop_assert!(inv.mul(m).is_identity());
        prop_assert_eq!(&inv.invert().unwrap(), m);
    }

    #[test]
    fn operator_norm_matches_signed_vertex_oracle(n in 1usize..5, ms in prop::collection::vec(scalar(), 25)) {
        let rows = (0..n).map(|i| ms[i * n..(i + 1) * n].to_vec()).collect();
        let m = Matrix::from_rows(rows).unwrap();
        prop_assert_eq!(m.operator_norm_l1(), common::opnorm_bruteforce(&m));
    }

    #[test]
    fn biorthogonality_is_exact(b in invertible_basis()) {
        let duals = b.coefficient_functionals();
        let n = b.dimension();
        for j in 0..n {
            for i in 0..n {
                let want = if i == j { Scalar::one() } else { Scalar::zero() };
                prop_assert_eq!(duals.apply(j, &b.vector(i)), want);
            }
        }
    }

    #[test]
    fn equivalence_constants_bound_every_combination(
        b in invertible_basis(),
        coeffs in prop::collection::vec(scalar(), 4),
    ) {
        let n = b.dimension();
        let alpha = Vector::new(coeffs[..n].to_vec());
        let ec = b.equivalence_constants();
        let image_norm = b.matrix().mul_vector(&alpha).l1_norm();
        let alpha_norm = alpha.l1_norm();
        prop_assert!(image_norm <= &ec.k2 * &alpha_norm);
        prop_assert!(image_norm >= &ec.k1 * &alpha_norm);
        // both optima are attained
        prop_assert_eq!(b.vector(ec.k2_witness).l1_norm(), ec.k2);
        let witness = b.k1_witness_coefficients();
        prop_assert_eq!(witness.l1_norm(), Scalar::one());
        prop_assert_eq!(b.matrix().mul_vector(&witness).l1_norm(), ec.k1);
    }

    #[test]
    fn constants_scale_with_the_basis(b in invertible_basis(), num in 1i64..8, den in 1i64..8) {
        let c = Scalar::new(num, den);
        let scaled = Basis::new({
            let mut m = b.matrix().clone();
            for j in 0..b.dimension() {
                m.scale_column(j, &c);
            }
            m
        })
        .unwrap();
        let before = b.equivalence_constants();
        let after = scaled.equivalence_constants();
        prop_assert_eq!(after.k1, &before.k1 * &c);
        prop_assert_eq!(after.k2, &before.k2 * &c);
        if b.dimension() <= 3 {
            prop_assert_eq!(
                unconditional_constant(&b).unwrap().value,
                unconditional_constant(&scaled).unwrap().value
            );
        }
    }

    #[test]
    fn constants_ignore_vector_order(b in invertible_basis(), rotate in 0usize..4) {
        let n = b.dimension();
        let rotate = rotate % n;
        let mut columns = b.vectors();
        columns.rotate_left(rotate);
        let permuted = Basis::from_columns(&columns).unwrap();
        let before = b.equivalence_constants();
        let after = permuted.equivalence_constants();
        prop_assert_eq!(before.k1, after.k1);
        prop_assert_eq!(before.k2, after.k2);
        if n <= 3 {
            prop_assert_eq!(
                unconditional_constant(&b).unwrap().value,
                unconditional_constant(&permuted).unwrap().value
            );
        }
    }

    #[test]
    fn unconditional_constant_is_at_least_one(b in invertible_basis()) {
        prop_assert!(unconditional_constant(&b).unwrap().value >= Scalar::one());
    }

    #[test]
    fn perturbation_radius_is_metric_like(
        (x, y, z) in (1usize..=4).prop_flat_map(|n| {
            (square_matrix(n), square_matrix(n), square_matrix(n))
        }).prop_filter_map("singular draw", |(a, b, c)| {
            Some((Basis::new(a).ok()?, Basis::new(b).ok()?, Basis::new(c).ok()?))
        })
    ) {
        let one = Scalar::one();
        let xy = perturbation_radius(&x, &y.vectors(), &one).unwrap().radius;
        let yx = perturbation_radius(&y, &x.vectors(), &one).unwrap().radius;
        prop_assert_eq!(&xy, &yx);
        let self_distance = perturbation_radius(&x, &x.vectors(), &one).unwrap().radius;
        prop_assert!(self_distance.is_zero());
        if xy.is_zero() {
            prop_assert_eq!(x.matrix(), y.matrix());
        }
        // triangle inequality through a third system
        let xz = perturbation_radius(&x, &z.vectors(), &one).unwrap().radius;
        let zy = perturbation_radius(&z, &y.vectors(), &one).unwrap().radius;
        prop_assert!(xy <= xz + zy);
    }

    #[test]
    fn passing_small_perturbations_are_invertible(n in 2usize..6, seed in 0u64..4096) {
        let y = random_basis(
            n,
            seed,
            &RandomMode::NearStandard { radius: Scalar::new(1, 2 * n as i64) },
        )
        .unwrap();
        let standard = Basis::standard(n);
        let bp = bp_criterion(&standard, &y.vectors()).unwrap();
        prop_assert!(bp.passes);
        prop_assert!(Basis::from_columns(&y.vectors()).is_ok());
    }

    #[test]
    fn basis_file_roundtrips_values(b in invertible_basis()) {
        let file = BasisFile::from_basis(&b);
        let text = file.serialize();
        let reparsed = BasisFile::parse(&text).unwrap();
        prop_assert_eq!(&reparsed, &file);
        prop_assert_eq!(reparsed.serialize(), text);
        let json = file.to_json();
        prop_assert_eq!(&BasisFile::parse(&json).unwrap(), &file);
    }
}
