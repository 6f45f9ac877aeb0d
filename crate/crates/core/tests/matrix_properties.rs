use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use stmodk_core::abgroup::{AbGroup, GroupOrder};
use stmodk_core::oracle::{brute_mod_kernel, determinantal_divisors};
use stmodk_core::ZMatrix;

fn matrix(rows: usize, cols: usize, bound: i64) -> impl Strategy<Value = ZMatrix> {
    prop::collection::vec(prop::collection::vec(-bound..=bound, cols), rows)
        .prop_map(|rows| ZMatrix::from_rows(rows).unwrap())
}

fn any_matrix(max: usize, bound: i64) -> impl Strategy<Value = ZMatrix> {
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| matrix(r, c, bound))
}

fn square(max: usize, bound: i64) -> impl Strategy<Value = ZMatrix> {
    (1..=max).prop_flat_map(move |n| matrix(n, n, bound))
}

/// A product of elementary integer operations: swaps, sign flips and
/// `row_j += k * row_i`.
fn unimodular(n: usize) -> impl Strategy<Value = ZMatrix> {
    prop::collection::vec((0..n, 0..n, -3i64..=3, 0u8..3), 0..12).prop_map(move |ops| {
        let mut u = ZMatrix::identity(n);
        for (i, j, k, kind) in ops {
            let mut e = ZMatrix::identity(n);
            match kind {
                0 => {
                    e.set(i, i, 0);
                    e.set(j, j, 0);
                    e.set(i, j, 1);
                    e.set(j, i, 1);
                }
                1 => e.set(i, i, -1),
                _ if i != j => e.set(j, i, k),
                _ => {}
            }
            u = e.try_mul(&u).unwrap();
        }
        u
    })
}

fn is_divisibility_chain(d: &[BigInt]) -> bool {
    d.windows(2).all(|w| {
        if w[0].is_zero() {
            w[1].is_zero()
        } else {
            (&w[1] % &w[0]).is_zero()
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn snf_reconstructs(m in any_matrix(6, 20)) {
        let r = m.snf();
        prop_assert_eq!(r.u.try_mul(&m).unwrap().try_mul(&r.v).unwrap(), r.d.clone());
        prop_assert!(r.d.is_diagonal());
        prop_assert!(r.u.det().unwrap().abs().is_one());
        prop_assert!(r.v.det().unwrap().abs().is_one());
        let diag = r.d.diagonal();
        prop_assert!(diag.iter().all(|x| !x.is_negative()));
        prop_assert!(is_divisibility_chain(&diag));
    }

    #[test]
    fn snf_invariant_under_unimodular_change(
        (m, u, v) in (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
            (matrix(r, c, 9), unimodular(r), unimodular(c))
        })
    ) {
        let moved = u.try_mul(&m).unwrap().try_mul(&v).unwrap();
        prop_assert_eq!(moved.snf().d.diagonal(), m.snf().d.diagonal());
    }

    #[test]
    fn snf_matches_determinantal_divisors(m in any_matrix(5, 9)) {
        let oracle = determinantal_divisors(&m).unwrap().invariant_factors();
        prop_assert_eq!(m.snf().d.diagonal(), oracle);
    }

    #[test]
    fn det_is_multiplicative((a, b) in (1usize..=5).prop_flat_map(|n| (matrix(n, n, 9), matrix(n, n, 9)))) {
        let ab = a.try_mul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn det_of_transpose(m in square(7, 9)) {
        prop_assert_eq!(m.det().unwrap(), m.transpose().det().unwrap());
    }

    #[test]
    fn abs_det_is_product_of_invariant_factors(m in square(6, 9)) {
        let product: BigInt = m.snf().d.diagonal().iter().product();
        prop_assert_eq!(m.det().unwrap().abs(), product);
    }

    #[test]
    fn rank_matches_snf(m in any_matrix(6, 3)) {
        prop_assert_eq!(m.rank(), m.snf().rank());
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kron_det((a, b) in (1usize..=3, 1usize..=3).prop_flat_map(|(p, q)| (matrix(p, p, 5), matrix(q, q, 5)))) {
        // det(A ⊗ B) = det(A)^q det(B)^p
        let (p, q) = (a.rows() as u32, b.rows() as u32);
        let want = a.det().unwrap().pow(q) * b.det().unwrap().pow(p);
        prop_assert_eq!(a.kron(&b).det().unwrap(), want);
    }

    #[test]
    fn cokernel_finite_iff_det_nonzero(m in square(5, 9)) {
        let det = m.det().unwrap();
        let coker = AbGroup::cokernel(&m);
        prop_assert_eq!(coker.is_finite(), !det.is_zero());
        if !det.is_zero() {
            prop_assert_eq!(coker.order(), GroupOrder::Finite(det.abs()));
        }
    }

    #[test]
    fn integer_kernel_rank(m in any_matrix(5, 4)) {
        let k = AbGroup::integer_kernel(&m);
        prop_assert_eq!(k.free_rank(), m.cols() - m.rank());
        prop_assert!(!k.has_torsion());
    }

    #[test]
    fn mod_action_kernel_and_cokernel_have_equal_order(m in square(6, 30), modulus in 2u64..=60) {
        let (ker, coker) = AbGroup::mod_action_kernel_cokernel(&m, &BigInt::from(modulus)).unwrap();
        prop_assert_eq!(ker.order(), coker.order());
        prop_assert!(ker.is_finite());
        // |ker| divides m^N
        if let GroupOrder::Finite(o) = ker.order() {
            let bound = BigInt::from(modulus).pow(m.rows() as u32);
            prop_assert!((bound % o).is_zero());
        }
    }

    #[test]
    fn mod_action_matches_enumeration(m in square(3, 12), modulus in 2u64..=12) {
        let fast = AbGroup::mod_action_kernel_cokernel(&m, &BigInt::from(modulus)).unwrap();
        prop_assert_eq!(fast, brute_mod_kernel(&m, modulus).unwrap());
    }

    #[test]
    fn mod_action_of_diagonal(diag in prop::collection::vec(-40i64..=40, 1..=5), modulus in 2u64..=50) {
        let m = ZMatrix::from_diagonal(diag.iter().copied()).unwrap();
        let (ker, _) = AbGroup::mod_action_kernel_cokernel(&m, &BigInt::from(modulus)).unwrap();
        let want = AbGroup::from_cyclic_orders(
            0,
            diag.iter().map(|&d| BigInt::from(d).gcd(&BigInt::from(modulus))),
        );
        prop_assert_eq!(ker, want);
    }
}
