//! Randomized invariants driven by proptest shrinking.

use gramq_core::frames::{gram_matrix, gramian, Frame};
use gramq_core::tensor::{flat_to_pair, hs_inner, kron, pair_to_flat, vec_op};
use gramq_core::{cholesky, eigh, matrix::inner, ComplexMatrix, Scalar};
use proptest::prelude::*;

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| Scalar::new(re, im))
}

fn matrix_strategy(rows: usize, cols: usize) -> impl Strategy<Value = ComplexMatrix> {
    proptest::collection::vec(scalar_strategy(), rows * cols)
        .prop_map(move |entries| ComplexMatrix::new(rows, cols, entries).unwrap())
}

fn frame_strategy(k: usize, d: usize) -> impl Strategy<Value = Frame> {
    proptest::collection::vec(proptest::collection::vec(scalar_strategy(), d), k)
        .prop_map(move |vectors| Frame::new(d, vectors).unwrap())
}

proptest! {
    #[test]
    fn kron_trace_multiplicative(a in matrix_strategy(3, 3), b in matrix_strategy(2, 2)) {
        let k = kron(&a, &b);
        let expected = a.trace() * b.trace();
        prop_assert!((k.trace() - expected).norm() < 1e-12);
    }

    #[test]
    fn hs_inner_matches_vec(a in matrix_strategy(3, 2), b in matrix_strategy(3, 2)) {
        let lhs = hs_inner(&a, &b).unwrap();
        let rhs = inner(&vec_op(&a), &vec_op(&b));
        prop_assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn index_round_trip(d1 in 1usize..7, d2 in 1usize..7, raw in 0usize..48) {
        let alpha = raw % (d1 * d2) + 1;
        let (i, j) = flat_to_pair(alpha, d1, d2).unwrap();
        prop_assert_eq!(pair_to_flat(i, j, d1, d2).unwrap(), alpha);
    }

    #[test]
    fn gram_is_psd_and_gramian_nonnegative(f in frame_strategy(3, 4)) {
        let g = gram_matrix(&f);
        prop_assert!(g.matrix.is_hermitian(1e-12));
        let min = eigh(&g.matrix).unwrap().values.last().copied().unwrap();
        prop_assert!(min >= -1e-10 * g.matrix.frobenius_norm().max(1.0));
        prop_assert!(gramian(&f) >= 0.0);
    }

    #[test]
    fn hermitian_eig_reconstructs(a in matrix_strategy(4, 4)) {
        let h = a.add(&a.dagger()).unwrap().scale(Scalar::new(0.5, 0.0));
        let e = eigh(&h).unwrap();
        let residual = e.reconstruct().sub(&h).unwrap().frobenius_norm();
        prop_assert!(residual < 1e-10 * h.frobenius_norm().max(1.0));
    }

    #[test]
    fn psd_cholesky_reconstructs(m in matrix_strategy(4, 2)) {
        let a = m.mul(&m.dagger()).unwrap();
        let h = ComplexMatrix::from_fn(4, 4, |i, j| (a[(i, j)] + a[(j, i)].conj()) * 0.5);
        let l = cholesky::cholesky_psd0(&h).unwrap();
        let residual = l.reconstruct().sub(&h).unwrap().frobenius_norm();
        prop_assert!(residual < 1e-10 * h.frobenius_norm().max(1.0));
    }
}
