//! Property tests for the kernel contracts: every case is generated from a
//! seed so failures shrink to a reproducible (seed, order) pair.

use cpbound_core::{
    hermitian_eigen, is_psd, matrix_abs, polar_decompose, random_ginibre, random_unitary,
    ratio_p, schatten_norm, trace_inner, ComplexMatrix,
};
use proptest::prelude::*;

fn ginibre(n: usize, seed: u64) -> ComplexMatrix {
    random_ginibre(n, seed).expect("order is positive")
}

fn hermitian(n: usize, seed: u64) -> ComplexMatrix {
    let g = ginibre(n, seed);
    &g + &g.adjoint()
}

proptest! {
    #[test]
    fn schatten_is_unitarily_invariant(seed in any::<u64>(), n in 1usize..=6) {
        let a = ginibre(n, seed);
        let u = random_unitary(n, seed ^ 0x55).unwrap();
        let v = random_unitary(n, seed ^ 0xAA).unwrap();
        let rotated = &(&u * &a) * &v;
        for p in [1.0, 2.0, 3.5, f64::INFINITY] {
            let base = schatten_norm(&a, p).unwrap();
            let moved = schatten_norm(&rotated, p).unwrap();
            prop_assert!(
                (base - moved).abs() <= 1e-9 * (1.0 + base),
                "p = {p}: {base} vs {moved}"
            );
        }
    }

    #[test]
    fn schatten_is_nonincreasing_in_p(seed in any::<u64>(), n in 1usize..=6) {
        let a = ginibre(n, seed);
        let grid = [1.0, 1.5, 2.0, 3.0, 6.0, 12.0, f64::INFINITY];
        let norms: Vec<f64> = grid
            .iter()
            .map(|&p| schatten_norm(&a, p).unwrap())
            .collect();
        for w in norms.windows(2) {
            // Ties (rank one) are exact up to powf roundoff.
            prop_assert!(w[1] <= w[0] * (1.0 + 1e-12) + 1e-15, "{} then {}", w[0], w[1]);
        }
    }

    #[test]
    fn schatten_triangle_inequality(sa in any::<u64>(), sb in any::<u64>(), n in 1usize..=6) {
        let a = ginibre(n, sa);
        let b = ginibre(n, sb);
        for p in [1.0, 2.0, f64::INFINITY] {
            let sum = schatten_norm(&(&a + &b), p).unwrap();
            let bound = schatten_norm(&a, p).unwrap() + schatten_norm(&b, p).unwrap();
            prop_assert!(sum <= bound * (1.0 + 1e-12) + 1e-12);
        }
    }

    #[test]
    fn matrix_abs_squares_back_to_the_gram_matrix(seed in any::<u64>(), n in 1usize..=8) {
        let a = ginibre(n, seed);
        let abs = matrix_abs(&a).unwrap();
        let gram = &a.adjoint() * &a;
        let residual = (&(&abs * &abs) - &gram).frobenius_norm();
        let scale = 1.0 + a.frobenius_norm().powi(2);
        prop_assert!(residual <= 1e-10 * scale, "residual {residual:.3e}");
        prop_assert!(is_psd(&abs, 1e-9).unwrap());
    }

    #[test]
    fn polar_reconstructs_with_unitary_factor(seed in any::<u64>(), n in 1usize..=8) {
        let a = ginibre(n, seed);
        let p = polar_decompose(&a).unwrap();
        let scale = 1.0 + a.frobenius_norm();
        prop_assert!((&(&p.unitary * &p.psd) - &a).frobenius_norm() <= 1e-10 * scale);
        let eye = ComplexMatrix::identity(n).unwrap();
        prop_assert!((&(&p.unitary.adjoint() * &p.unitary) - &eye).frobenius_norm() <= 1e-11);
        prop_assert!(is_psd(&p.psd, 1e-9).unwrap());
        // Singular values are sorted and nonnegative.
        for w in p.singular_values.windows(2) {
            prop_assert!(w[0] >= w[1]);
        }
        prop_assert!(*p.singular_values.last().unwrap() >= 0.0);
    }

    #[test]
    fn abs_routes_agree(seed in any::<u64>(), n in 1usize..=8) {
        // Gram route promises absolute accuracy ~sqrt(eps) near the kernel,
        // so the agreement bound is loose compared to the SVD route's own
        // contracts.
        let a = ginibre(n, seed);
        let gram_route = matrix_abs(&a).unwrap();
        let svd_route = polar_decompose(&a).unwrap().psd;
        let diff = (&gram_route - &svd_route).frobenius_norm();
        prop_assert!(diff <= 1e-7 * (1.0 + a.frobenius_norm()), "diff {diff:.3e}");
    }

    #[test]
    fn eigen_reconstructs_hermitian_input(seed in any::<u64>(), n in 1usize..=8) {
        let h = hermitian(n, seed);
        let e = hermitian_eigen(&h).unwrap();
        let scale = 1.0 + h.frobenius_norm();
        prop_assert!((&e.reconstruct() - &h).frobenius_norm() <= 1e-11 * scale);
        let eye = ComplexMatrix::identity(n).unwrap();
        prop_assert!((&(&e.vectors.adjoint() * &e.vectors) - &eye).frobenius_norm() <= 1e-12);
        for w in e.values.windows(2) {
            prop_assert!(w[0] >= w[1]);
        }
    }

    #[test]
    fn trace_inner_is_conjugate_symmetric(sa in any::<u64>(), sb in any::<u64>(), n in 1usize..=6) {
        let s = ginibre(n, sa);
        let t = ginibre(n, sb);
        let fwd = trace_inner(&s, &t).unwrap();
        let bwd = trace_inner(&t, &s).unwrap().conj();
        prop_assert!((fwd - bwd).norm() <= 1e-13 * (1.0 + fwd.norm()));
    }

    #[test]
    fn ratio_is_scale_and_unitary_invariant(seed in any::<u64>(), n in 1usize..=5) {
        let a = ginibre(n, seed ^ 1);
        let b = ginibre(n, seed ^ 2);
        let base = ratio_p(&a, &b, 2.0).unwrap();

        let scaled = ratio_p(&a.scale(3.75), &b.scale(3.75), 2.0).unwrap();
        prop_assert!((base - scaled).abs() <= 1e-12 * (1.0 + base));

        let u = random_unitary(n, seed ^ 3).unwrap();
        let v = random_unitary(n, seed ^ 4).unwrap();
        let moved = ratio_p(&(&(&u * &a) * &v), &(&(&u * &b) * &v), 2.0).unwrap();
        prop_assert!((base - moved).abs() <= 1e-9 * (1.0 + base));
    }
}
