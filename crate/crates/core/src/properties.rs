//! Crate-wide invariants checked with proptest and exhaustive sweeps.

use crate::arith::integer::{icbrt, primes_up_to};
use crate::arith::{represent_eisenstein, HasOmega};
use crate::diophantine::{
    canonical_form, mkl_to_xyz, orbit, pagliani, pagliani_identity_holds, search, xyz_to_mkl,
    SolutionMKL, SymmetryElement,
};
use crate::elliptic::{
    base_change_t_u3, omega_sigma1, section_to_xyz, sigma1, xyz_residual,
};
use crate::fibration::{classify_fibers, components_excess, euler_total, HeightContext};
use crate::modular::{
    alpha_from_beta, ap_closed_form, chi2, eta_quotient, hecke_expand, lattice_sum,
    normalize_pi, EtaQuotientSpec, Variant,
};
use crate::pointcount::{brute_count_elliptic, FiniteField};
use crate::{
    EisensteinInt, Field, FunctionFieldCurve, NfElem, Omega, Point, Rational, RationalFunctionPoint,
    Zeta12,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

type W = NfElem<Omega>;

fn eis() -> impl Strategy<Value = EisensteinInt> {
    (-1000i64..1000, -1000i64..1000).prop_map(|(a, b)| EisensteinInt::new(a, b))
}

fn odd_eis() -> impl Strategy<Value = EisensteinInt> {
    eis().prop_filter("odd norm", |z| z.mod2() != (0, 0))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-500i64..500, 1i64..60).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn eisenstein_norm_is_multiplicative(z in eis(), w in eis()) {
        prop_assert_eq!((&z * &w).norm(), z.norm() * w.norm());
        prop_assert_eq!(z.conj().conj(), z.clone());
        prop_assert_eq!(&z * &z.conj(), EisensteinInt::new(z.norm(), 0));
    }

    #[test]
    fn rationals_form_a_field(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((&a + &b) * &c, &a * &c + &b * &c);
        prop_assert_eq!(&a * (&b * &c), (&a * &b) * &c);
        if !a.is_zero() {
            prop_assert_eq!(Field::inv(&a).unwrap() * &a, Rational::one());
        }
    }

    #[test]
    fn chi2_is_multiplicative(u in odd_eis(), v in odd_eis()) {
        for variant in [Variant::Plus, Variant::Minus] {
            let uv = &u * &v;
            prop_assert_eq!(chi2(&uv, variant).unwrap(), chi2(&u, variant).unwrap() * chi2(&v, variant).unwrap());
        }
    }

    #[test]
    fn mkl_round_trip(m in -10_000i64..10_000, k in 1i64..10_000, l in -10_000i64..10_000) {
        let s = SolutionMKL { m: m.into(), k: k.into(), l: l.into() };
        prop_assert_eq!(xyz_to_mkl(&mkl_to_xyz(&s)).unwrap(), s);
    }

    #[test]
    fn extension_frobenius_is_a_ring_map(a in 0u64..169, b in 0u64..169) {
        let f = FiniteField::new(13, 2).unwrap();
        prop_assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
        prop_assert_eq!(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
    }
}

#[test]
fn sqrt_minus_three_squares_to_minus_three() {
    let s = EisensteinInt::sqrt_minus3();
    assert_eq!(&s * &s, EisensteinInt::new(-3, 0));
}

#[test]
fn zeta12_relations() {
    type Z = NfElem<Zeta12>;
    let z = Z::gen();
    let one = Z::one();
    assert_eq!(z.powu(4), z.powu(2) - one.clone());
    assert_eq!(z.powu(12), one.clone());
    let zi = Field::inv(&z).unwrap();
    assert_eq!((z.clone() + zi).powu(2), Z::from_int(3));
    assert_eq!(z.powu(3).powu(2), -one.clone());
    let w = z.powu(4);
    assert_eq!(w.powu(2) + w + one, Z::zero());
    assert_eq!(Z::omega(), z.powu(4));
}

#[test]
fn icbrt_matches_decrement() {
    let mut root = 0i64;
    for n in 0..=100_000i64 {
        while (root + 1).pow(3) <= n {
            root += 1;
        }
        let (r, exact) = icbrt(&BigInt::from(n)).unwrap();
        assert_eq!(r, BigInt::from(root), "n = {n}");
        assert_eq!(exact, root.pow(3) == n);
    }
}

#[test]
fn eisenstein_representations() {
    for p in primes_up_to(10_000).into_iter().filter(|p| p % 3 == 1) {
        let (m, n) = represent_eisenstein(p).unwrap();
        assert_eq!(&m * &m - &m * &n + &n * &n, BigInt::from(p));
    }
}

#[test]
fn orbits_preserve_the_equation_and_canonical_form() {
    for s in search(&BigInt::from(200), false).unwrap() {
        let c = canonical_form(&s);
        for g in SymmetryElement::all() {
            let image = g.apply(&s);
            assert!(image.is_valid(), "{image:?}");
            assert_eq!(canonical_form(&image), c);
        }
        let members = orbit(&s);
        for t in &members {
            if let Ok(mkl) = xyz_to_mkl(t) {
                assert!(members.contains(&mkl_to_xyz(&mkl)));
            }
        }
    }
}

#[test]
fn pagliani_members_are_solutions() {
    for u in (-50i64..=50).filter(|u| u % 3 != 0) {
        let s = pagliani(&BigInt::from(u)).unwrap();
        assert!(s.is_valid(), "u = {u}");
    }
    assert!(pagliani_identity_holds());
}

#[test]
fn search_results_verify() {
    let bound = BigInt::from(1000);
    for s in search(&bound, true).unwrap() {
        assert!(s.is_valid());
        assert!(s.x >= s.y && s.y >= BigInt::one() && s.x <= bound);
    }
}

fn section_set() -> Vec<RationalFunctionPoint<W>> {
    let e = FunctionFieldCurve::<W>::e_t();
    let s = sigma1::<W>();
    let w = omega_sigma1::<W>();
    vec![
        Point::Infinity,
        s.clone(),
        w.clone(),
        e.double(&s).unwrap(),
        e.negate(&s),
        e.add(&s, &w).unwrap(),
    ]
}

#[test]
fn group_law() {
    let e = FunctionFieldCurve::<W>::e_t();
    let set = section_set();
    for p in &set {
        assert!(e.contains(p));
        assert!(e.add(p, &e.negate(p)).unwrap().is_infinity());
        for q in &set {
            let pq = e.add(p, q).unwrap();
            assert!(e.contains(&pq));
            assert_eq!(pq, e.add(q, p).unwrap());
            assert_eq!(e.cm_omega(&pq).unwrap(), e.add(&e.cm_omega(p).unwrap(), &e.cm_omega(q).unwrap()).unwrap());
            let e2 = FunctionFieldCurve::<W>::e_prime_u();
            assert_eq!(base_change_t_u3(&pq), e2.add(&base_change_t_u3(p), &base_change_t_u3(q)).unwrap());
        }
    }
    for p in &set[1..4] {
        for q in &set[1..4] {
            for r in &set[1..4] {
                let left = e.add(&e.add(p, q).unwrap(), r).unwrap();
                let right = e.add(p, &e.add(q, r).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }
    let e2 = FunctionFieldCurve::<W>::e_prime_u();
    for p in &set {
        let w = e.cm_omega(p).unwrap();
        assert_eq!(base_change_t_u3(&w), e2.cm_omega(&base_change_t_u3(p)).unwrap());
    }
}

#[test]
fn sections_map_onto_the_cubic_surface() {
    let set = section_set();
    for p in set.iter().skip(1) {
        let triple = section_to_xyz(p).unwrap();
        assert!(xyz_residual(&triple).is_zero());
    }
}

#[test]
fn height_is_bilinear() {
    let ctx = HeightContext::<W>::e_t();
    let e = &ctx.curve;
    let s = sigma1::<W>();
    let w = omega_sigma1::<W>();
    let set = [s.clone(), w.clone(), e.add(&s, &w).unwrap(), e.double(&s).unwrap()];
    for p in &set {
        for q in &set {
            assert_eq!(ctx.height_pairing(p, q).unwrap(), ctx.height_pairing(q, p).unwrap());
            let pq = e.add(p, q).unwrap();
            if pq.is_infinity() {
                continue;
            }
            for r in &set {
                let lhs = ctx.height_pairing(&pq, r).unwrap();
                let rhs = ctx.height_pairing(p, r).unwrap() + ctx.height_pairing(q, r).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn minimal_height_over_small_combinations() {
    let ctx = HeightContext::<W>::e_t();
    let e = &ctx.curve;
    let s = sigma1::<W>();
    let w = omega_sigma1::<W>();
    let mut heights = Vec::new();
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            if a == 0 && b == 0 {
                continue;
            }
            let p = e.add(&e.mul(a, &s).unwrap(), &e.mul(b, &w).unwrap()).unwrap();
            heights.push(ctx.height_pairing(&p, &p).unwrap());
        }
    }
    assert_eq!(heights.len(), 48);
    let min = heights.into_iter().min().unwrap();
    assert_eq!(min, Rational::new(2.into(), 3.into()));
}

#[test]
fn fiber_sums() {
    let fibers = classify_fibers(&FunctionFieldCurve::e_t()).unwrap();
    assert_eq!(euler_total(&fibers), 24);
    assert_eq!(components_excess(&fibers), 16);
}

#[test]
fn ap_is_independent_of_the_representative() {
    for p in primes_up_to(500).into_iter().filter(|&p| p % 3 == 1 && p >= 7) {
        let (m, n) = represent_eisenstein(p).unwrap();
        let expected = ap_closed_form(p).unwrap();
        for beta in EisensteinInt::new(m, n).associates_and_conjugates() {
            assert_eq!(alpha_from_beta(&beta, p).trace(), expected, "p = {p}, β = {beta}");
        }
    }
}

#[test]
fn weil_bound() {
    for p in primes_up_to(1000).into_iter().filter(|&p| p >= 5) {
        let ap = ap_closed_form(p).unwrap();
        assert!(&ap * &ap < BigInt::from(4 * p * p), "p = {p}");
    }
}

#[test]
fn normalized_pi_counts_points() {
    for p in primes_up_to(200).into_iter().filter(|&p| p % 3 == 1) {
        let pi = normalize_pi(p, Variant::Plus).unwrap();
        assert_eq!(brute_count_elliptic(1, p).unwrap(), BigInt::from(p + 1) - pi.trace(), "p = {p}");
    }
}

#[test]
fn three_expansions_agree() {
    let n = 240;
    let eta = eta_quotient(&EtaQuotientSpec::weight_three_level_48(), n).unwrap();
    assert_eq!(eta, hecke_expand(n));
    assert_eq!(eta, lattice_sum(n).unwrap().series);
}
