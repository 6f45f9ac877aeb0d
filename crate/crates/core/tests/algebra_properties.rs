use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use stmodk_core::abgroup::AbGroup;
use stmodk_core::algebras::GradedAlgebraDescriptor;
use stmodk_core::cluster::{cluster_phi, parity_check, tau_inverse_matrix};
use stmodk_core::ktheory::{k0_consistency, quillen_k, stable_kh, FiniteFieldSpec};
use stmodk_core::oracle::{determinantal_divisors, nakayama_cartan_oracle};
use stmodk_core::phimat::{build_phi, exterior_phi, koszul_column, verify_snf_claim};
use stmodk_core::{PhiConvention, PhiSpec, ZMatrix};

fn group() -> impl Strategy<Value = AbGroup> {
    (0usize..3, prop::collection::vec(0i64..40, 0..4)).prop_map(|(r, orders)| {
        AbGroup::from_cyclic_orders(r, orders.into_iter().map(BigInt::from))
    })
}

fn local_algebra() -> impl Strategy<Value = GradedAlgebraDescriptor> {
    prop_oneof![
        (1u32..=12).prop_map(|g| GradedAlgebraDescriptor::exterior(g).unwrap()),
        (2u64..=40).prop_map(|m| GradedAlgebraDescriptor::truncated_poly(m).unwrap()),
        (prop::sample::select(vec![2u64, 3, 5, 7]), 1u32..=4)
            .prop_map(|(p, r)| GradedAlgebraDescriptor::elem_abelian_group_algebra(p, r).unwrap()),
    ]
}

fn small_algebra() -> impl Strategy<Value = GradedAlgebraDescriptor> {
    prop_oneof![
        local_algebra(),
        (1usize..=4, 2usize..=5)
            .prop_map(|(n, l)| GradedAlgebraDescriptor::nakayama(n, l).unwrap()),
    ]
}

fn field() -> impl Strategy<Value = FiniteFieldSpec> {
    prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9])
        .prop_map(|q| FiniteFieldSpec::new(q).unwrap())
}

fn snf_diag(m: &ZMatrix) -> Vec<BigInt> {
    m.snf().d.diagonal()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn direct_sum_commutes(a in group(), b in group()) {
        prop_assert_eq!(a.direct_sum(&b), b.direct_sum(&a));
    }

    #[test]
    fn direct_sum_associates(a in group(), b in group(), c in group()) {
        prop_assert_eq!(a.direct_sum(&b).direct_sum(&c), a.direct_sum(&b.direct_sum(&c)));
    }

    #[test]
    fn trivial_is_identity(a in group()) {
        prop_assert_eq!(a.direct_sum(&AbGroup::trivial()), a);
    }

    #[test]
    fn group_string_round_trip(a in group()) {
        let parsed: AbGroup = a.to_string().parse().unwrap();
        prop_assert_eq!(parsed, a);
    }

    #[test]
    fn canonical_torsion_is_a_chain(a in group()) {
        let t = a.torsion();
        prop_assert!(t.iter().all(|x| *x >= BigInt::from(2)));
        prop_assert!(t.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
    }

    #[test]
    fn cartan_entries_sum_to_dim(a in small_algebra()) {
        prop_assert_eq!(&a.cartan().sum_entries(), a.total_dim());
    }

    #[test]
    fn local_cartan_det_is_dim(a in local_algebra()) {
        prop_assert!(a.is_local());
        prop_assert_eq!(&a.cartan().det().unwrap(), a.total_dim());
    }

    #[test]
    fn tensor_is_commutative_up_to_snf(a in small_algebra(), b in small_algebra()) {
        let ab = GradedAlgebraDescriptor::tensor(&a, &b).unwrap();
        let ba = GradedAlgebraDescriptor::tensor(&b, &a).unwrap();
        prop_assert_eq!(snf_diag(ab.cartan()), snf_diag(ba.cartan()));
        prop_assert_eq!(ab.total_dim(), &(a.total_dim() * b.total_dim()));
        prop_assert_eq!(ab.gorenstein_param(), a.gorenstein_param() + b.gorenstein_param());
    }

    #[test]
    fn tensor_is_associative(a in local_algebra(), b in small_algebra(), c in local_algebra()) {
        let left = GradedAlgebraDescriptor::tensor(&GradedAlgebraDescriptor::tensor(&a, &b).unwrap(), &c).unwrap();
        let right = GradedAlgebraDescriptor::tensor(&a, &GradedAlgebraDescriptor::tensor(&b, &c).unwrap()).unwrap();
        prop_assert!(left.same_data(&right));
    }

    #[test]
    fn k0_agrees_with_cokernel(a in small_algebra(), f in field()) {
        prop_assert!(k0_consistency(&a, &f).unwrap().holds);
    }

    /// For a 1x1 Cartan matrix `c`, degrees `2j-1` and `2j` both carry
    /// `Z/gcd(c, q^j - 1)`.
    #[test]
    fn local_higher_groups_closed_form(a in local_algebra(), f in field()) {
        let res = stable_kh(&a, &f, 8).unwrap();
        let c = a.cartan().get(0, 0).clone();
        for j in 1..=4u32 {
            let t = BigInt::from(f.q).pow(j) - 1u32;
            let want = AbGroup::cyclic(c.gcd(&t));
            prop_assert_eq!(&res.groups[2 * j as usize - 1].group, &want);
            prop_assert_eq!(&res.groups[2 * j as usize].group, &want);
        }
        prop_assert!(!res.any_ambiguous());
    }

    #[test]
    fn coprime_dim_has_trivial_higher_groups(a in local_algebra(), f in field()) {
        let dim = a.total_dim().clone();
        let res = stable_kh(&a, &f, 9).unwrap();
        for d in &res.groups[1..] {
            let j = d.degree.div_ceil(2);
            let t = BigInt::from(f.q).pow(j) - 1u32;
            if dim.gcd(&t).is_one() {
                prop_assert!(d.group.is_trivial());
            }
        }
    }

    #[test]
    fn quillen_orders(f in field(), i in 0u32..30) {
        let k = quillen_k(&f, i);
        match i {
            0 => prop_assert_eq!(k, AbGroup::free(1)),
            _ if i % 2 == 0 => prop_assert!(k.is_trivial()),
            _ => prop_assert_eq!(k, AbGroup::cyclic(BigInt::from(f.q).pow(i.div_ceil(2)) - 1u32)),
        }
    }

    #[test]
    fn nakayama_cartan_is_circulant((n, len) in (1usize..=8).prop_flat_map(|n| (Just(n), 2..=64 / n))) {
        let a = GradedAlgebraDescriptor::nakayama(n, len).unwrap();
        let c = a.cartan();
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(c.get(i, j), c.get((i + 1) % n, (j + 1) % n));
            }
        }
        prop_assert_eq!(c, &nakayama_cartan_oracle(n, len).unwrap());
    }

    #[test]
    fn phi_with_zero_column_is_triangular(n in 1usize..=3, abs_a in 1usize..=2, shift in any::<bool>()) {
        let size = n * abs_a;
        let convention = if shift { PhiConvention::ShiftOrbit } else { PhiConvention::Desuspended };
        let spec = PhiSpec { n_simples: n, abs_a, last_column: ZMatrix::zeros(size, n), convention };
        let phi = build_phi(&spec).unwrap();
        let sign = if size % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(phi.det().unwrap(), BigInt::from(sign));
    }

    #[test]
    fn phi_det_agrees_with_divisor_oracle(col in prop::collection::vec(-20i64..=20, 1..=6), shift in any::<bool>()) {
        let convention = if shift { PhiConvention::ShiftOrbit } else { PhiConvention::Desuspended };
        let size = col.len();
        let spec = PhiSpec {
            n_simples: 1,
            abs_a: size,
            last_column: ZMatrix::column(col.iter().copied()).unwrap(),
            convention,
        };
        let phi = build_phi(&spec).unwrap();
        let det = phi.det().unwrap();
        let top = determinantal_divisors(&phi).unwrap().chain.last().cloned().unwrap();
        prop_assert_eq!(det.abs(), top);
        // The first size-1 columns are unimodular, so the Smith form is (1, ..., 1, |det|).
        let mut want = vec![BigInt::one(); size - 1];
        want.push(det.abs());
        prop_assert_eq!(snf_diag(&phi), want);
    }
}

#[test]
fn exterior_phi_structure() {
    for g in 1..=12u32 {
        let phi = exterior_phi(g).unwrap();
        let dim = BigInt::from(2).pow(g);
        assert_eq!(phi.det().unwrap(), BigInt::from(-2).pow(g));
        let cartan = GradedAlgebraDescriptor::exterior(g)
            .unwrap()
            .cartan()
            .clone();
        let verdict = verify_snf_claim(&phi, &cartan).unwrap();
        assert!(verdict.holds, "g={g}");
        assert_eq!(verdict.phi_diagonal.last(), Some(&dim));
        let psi = koszul_column(g).unwrap().psi;
        let alternating: BigInt = psi.iter().sum();
        // Σ_i (-1)^{i+1} C(g, i+1) = -(1 - (1-1)^g) = -1
        assert_eq!(alternating, BigInt::from(-1));
    }
}

#[test]
fn cluster_parity_through_forty() {
    let rows = parity_check(40).unwrap();
    assert_eq!(rows.len(), 39);
    for r in rows {
        assert_eq!(r.direct, BigInt::from(u8::from(r.n % 2 == 0)), "n={}", r.n);
    }
}

#[test]
fn cluster_cokernel_parity() {
    for n in 2..=24 {
        let phi = cluster_phi(n).unwrap();
        let coker = AbGroup::cokernel(&phi);
        if n % 2 == 0 {
            assert!(coker.is_trivial(), "n={n}");
        } else {
            assert_eq!(coker, AbGroup::free(1), "n={n}");
        }
    }
}

#[test]
fn tau_inverse_has_order_n_plus_one() {
    for n in 2..=12 {
        let t = tau_inverse_matrix(n).unwrap();
        assert_eq!(t.pow(n as u32 + 1).unwrap(), ZMatrix::identity(n));
        for k in 1..=n as u32 {
            assert_ne!(t.pow(k).unwrap(), ZMatrix::identity(n), "n={n} k={k}");
        }
    }
}

#[test]
fn nakayama_oracle_full_range() {
    for n in 1..=64usize {
        for len in 2..=64 / n {
            let built = GradedAlgebraDescriptor::nakayama(n, len).unwrap();
            assert_eq!(
                built.cartan(),
                &nakayama_cartan_oracle(n, len).unwrap(),
                "({n},{len})"
            );
            assert!(built.total_dim() > &BigInt::zero());
        }
    }
}
