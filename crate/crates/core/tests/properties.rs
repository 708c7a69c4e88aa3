mod common;

use num::{BigInt, One, Signed, Zero};
use proptest::prelude::*;

use zetafix::algebra::{
    classify_eigenvalues, has_root_of_unity_eigenvalue, Polynomial, Rational, RationalMatrix,
    DEFAULT_TOLERANCE,
};
use zetafix::congruence::{check_dold_lefschetz, check_euler, check_gauss, divisors, mobius};
use zetafix::fixtures::{builtin_fixtures, torus_fifth_root_map};
use zetafix::invariants::{numbers_table, Extended};
use zetafix::manifold::{
    compute_plus_split, is_virtually_unipotent, reidemeister_zeta_defined, AffineMapSpec,
    Definedness, ManifoldSpec, SPLIT_TOLERANCE,
};
use zetafix::suite::{
    lefschetz_zeta, nielsen_zeta, nielsen_zeta_direct, one_in_spectrum, radius_report,
    reidemeister_zeta, verify_functional_equation, Settings,
};
use zetafix::zeta::{
    log_terms_of_series, min_linear_recurrence, zeta_from_slice, zeta_from_terms, FnSequence,
    RationalFunction,
};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

fn rational_matrix(dim: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec((-5i64..=5, 1i64..=4), dim * dim).prop_map(move |v| {
        RationalMatrix::new(dim, v.into_iter().map(|(p, q)| ratio(p, q)).collect()).unwrap()
    })
}

fn integer_matrix(dim: usize, bound: i64) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(-bound..=bound, dim * dim).prop_map(move |v| {
        RationalMatrix::new(dim, v.into_iter().map(|x| Rational::from_integer(x.into())).collect()).unwrap()
    })
}

fn matrix_pair(max_dim: usize) -> impl Strategy<Value = (RationalMatrix, RationalMatrix)> {
    (1..=max_dim).prop_flat_map(|d| (rational_matrix(d), rational_matrix(d)))
}

fn one_minus(lam: i64) -> RationalFunction {
    RationalFunction::from_polynomial(Polynomial::from_ints(&[1, -lam]))
}

/// `∏ (1 - λ z)^{±1}` together with `a_n = Σ ∓λⁿ`.
fn product_of_factors(factors: &[(i64, bool)]) -> RationalFunction {
    factors.iter().fold(RationalFunction::one(), |acc, &(lam, up)| {
        if up {
            acc.mul(&one_minus(lam))
        } else {
            acc.div(&one_minus(lam)).unwrap()
        }
    })
}

fn power_sum(factors: &[(i64, bool)], n: u64) -> Rational {
    let mut s = BigInt::zero();
    for &(lam, up) in factors {
        let t = BigInt::from(lam).pow(n as u32);
        if up {
            s -= t;
        } else {
            s += t;
        }
    }
    Rational::from_integer(s)
}

fn corpus(seed: u64, size: usize) -> Vec<common::Instance> {
    let mut rng = common::rng(seed);
    (0..size).map(|i| common::random_instance(&mut rng, i)).collect()
}

fn all_pairs(seed: u64, size: usize) -> Vec<(ManifoldSpec, AffineMapSpec)> {
    let mut v: Vec<_> = builtin_fixtures().into_iter().map(|f| (f.spec, f.map)).collect();
    v.extend(corpus(seed, size).into_iter().map(|c| (c.spec, c.map)));
    v
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn determinant_is_multiplicative((a, b) in matrix_pair(5)) {
        prop_assert_eq!((&a * &b).det(), a.det() * b.det());
    }

    #[test]
    fn cayley_hamilton(m in (1usize..=4).prop_flat_map(rational_matrix)) {
        prop_assert_eq!(m.eval_poly(&m.char_poly()), RationalMatrix::zero(m.dim()));
    }

    #[test]
    fn exterior_power_is_multiplicative((a, b) in matrix_pair(4)) {
        let ab = &a * &b;
        for i in 0..=a.dim() {
            prop_assert_eq!(
                &a.exterior_power(i).unwrap() * &b.exterior_power(i).unwrap(),
                ab.exterior_power(i).unwrap()
            );
        }
    }

    #[test]
    fn alternating_trace_sum(m in (1usize..=5).prop_flat_map(rational_matrix)) {
        let mut s = Rational::zero();
        for i in 0..=m.dim() {
            let t = m.exterior_power(i).unwrap().trace();
            s += if i % 2 == 0 { t } else { -t };
        }
        prop_assert_eq!(s, (&RationalMatrix::identity(m.dim()) - &m).det());
    }

    #[test]
    fn classification_is_similarity_invariant(
        (m, p) in (1usize..=3).prop_flat_map(|d| (integer_matrix(d, 3), rational_matrix(d)))
    ) {
        prop_assume!(!p.det().is_zero());
        let a = classify_eigenvalues(&m, DEFAULT_TOLERANCE).unwrap();
        let b = classify_eigenvalues(&m.conjugate_by(&p).unwrap(), DEFAULT_TOLERANCE).unwrap();
        prop_assert_eq!((a.p, a.n, a.unit_modulus_count), (b.p, b.n, b.unit_modulus_count));
    }

    #[test]
    fn finite_order_matrices_have_root_of_unity_eigenvalues(seed in any::<u64>(), dim in 1usize..=4) {
        let mut rng = common::rng(seed);
        let all = common::signed_permutations(dim);
        let m = &all[rand::Rng::gen_range(&mut rng, 0..all.len())];
        prop_assert!(has_root_of_unity_eigenvalue(m));
    }

    #[test]
    fn zeta_round_trip(factors in prop::collection::vec((-4i64..=4, any::<bool>()), 1..=5)) {
        let f = product_of_factors(&factors);
        let b = factors.len();
        let seq = FnSequence::new(b, |n| Ok(power_sum(&factors, n)));
        prop_assert_eq!(zeta_from_terms(&seq).unwrap(), f.clone());
        let series = f.series(3 * b + 4).unwrap();
        let terms = log_terms_of_series(&series);
        for (n, t) in terms.iter().enumerate() {
            prop_assert_eq!(t, &power_sum(&factors, n as u64 + 1));
        }
    }

    #[test]
    fn zeta_of_sum_is_product(
        a in prop::collection::vec((-4i64..=4, any::<bool>()), 1..=3),
        b in prop::collection::vec((-4i64..=4, any::<bool>()), 1..=3),
    ) {
        let sa = FnSequence::new(a.len(), |n| Ok(power_sum(&a, n)));
        let sb = FnSequence::new(b.len(), |n| Ok(power_sum(&b, n)));
        let sab = FnSequence::new(a.len() + b.len(), |n| Ok(power_sum(&a, n) + power_sum(&b, n)));
        let lhs = zeta_from_terms(&sa).unwrap().mul(&zeta_from_terms(&sb).unwrap());
        prop_assert_eq!(lhs, zeta_from_terms(&sab).unwrap());
    }

    #[test]
    fn radius_matches_growth(
        top in 1i64..=4,
        negate in any::<bool>(),
        others in prop::collection::vec((-3i64..=3, any::<bool>()), 0..=3),
    ) {
        let dominant = if negate { -top } else { top };
        // keep the dominant pole simple and uncancelled
        let mut factors = vec![(dominant, false)];
        let mut used = vec![top];
        for (lam, up) in others {
            if lam.abs() < top && !used.contains(&lam.abs()) {
                used.push(lam.abs());
                factors.push((lam, up));
            }
        }
        let f = product_of_factors(&factors);
        let growth = (50..=60u64)
            .map(|n| {
                let a: f64 = power_sum(&factors, n).to_integer().to_string().parse().unwrap();
                a.abs().powf(1.0 / n as f64)
            })
            .fold(0.0f64, f64::max);
        prop_assert!((f.radius_of_convergence() * growth - 1.0).abs() < 1e-6);
    }

    #[test]
    fn minimal_recurrence_divides_denominator(
        den in prop::collection::vec(prop::sample::select(vec![-4i64, -3, -2, -1, 1, 2, 3, 4]), 1..=4),
        num in prop::collection::vec(-4i64..=4, 0..=3),
    ) {
        let mut q = Polynomial::one();
        for lam in &den {
            q = &q * &Polynomial::from_ints(&[1, -lam]);
        }
        let num: Vec<i64> = num.into_iter().take(den.len() - 1).collect();
        let mut p = Polynomial::from_ints(&[1]);
        for lam in &num {
            p = &p * &Polynomial::from_ints(&[1, -lam]);
        }
        let f = RationalFunction::new(p, q.clone()).unwrap();
        let coeffs = f.series(4 * den.len() + 4).unwrap();
        let r = min_linear_recurrence(&coeffs).unwrap();
        let target = f.denominator().reversed_with_degree(f.denominator().degree().unwrap_or(0));
        prop_assert!(r.divides(&target), "{r:?} does not divide {target:?}");
        prop_assert!(r.divides(&q.reversed_with_degree(den.len())));
    }

    #[test]
    fn plus_split_is_conjugation_invariant(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let inst = common::random_instance(&mut rng, 0);
        let dim = inst.spec.dimension();
        let p = common::random_unimodular(&mut rng, dim);
        let conj = |m: &RationalMatrix| m.conjugate_by(&p).unwrap();
        let elements = inst
            .spec
            .holonomy()
            .iter()
            .map(|h| (h.label.clone(), conj(&h.matrix)))
            .collect();
        let spec2 = ManifoldSpec::new("conjugated", dim, elements).unwrap();
        let map2 = AffineMapSpec::new("f", conj(&inst.map.d));
        let a = compute_plus_split(&inst.spec, &inst.map, SPLIT_TOLERANCE).unwrap();
        let b = compute_plus_split(&spec2, &map2, SPLIT_TOLERANCE).unwrap();
        prop_assert_eq!(a.plus_membership, b.plus_membership);
        prop_assert_eq!((a.is_proper, a.p, a.n, a.expanding_dim), (b.is_proper, b.p, b.n, b.expanding_dim));
    }

    #[test]
    fn trichotomy_on_random_cyclic_instances(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let inst = common::random_cyclic_instance(&mut rng, 0);
        let t = zetafix::invariants::coincidence_trichotomy(&inst.spec, &inst.f, &inst.g).unwrap();
        let c = zetafix::invariants::coincidence_numbers(&inst.spec, &inst.f, &inst.g, 1).unwrap();
        prop_assert_eq!(Some(t.predicted_nielsen), c.nielsen);
    }

    #[test]
    fn gauss_and_euler_agree_at_prime_powers(
        seq in prop::collection::vec(-50i64..=50, 27),
        p in prop::sample::select(vec![2u64, 3]),
    ) {
        let seq: Vec<Extended<BigInt>> = seq.into_iter().map(|x| Extended::Finite(x.into())).collect();
        let r_max = if p == 2 { 4 } else { 3 };
        let gauss = check_gauss(&seq, 27).unwrap();
        let euler = check_euler(&seq, p, r_max).unwrap();
        for r in 1..=r_max {
            let q = p.pow(r);
            let g = gauss.violations.iter().any(|v| v.modulus == q);
            let e = euler.violations.iter().any(|v| v.modulus == q);
            prop_assert_eq!(g, e, "modulus {}", q);
        }
    }
}

#[test]
fn holonomy_determinants_are_units_and_plus_is_a_subgroup() {
    for (spec, map) in all_pairs(0x5eed_0101, 100) {
        for m in spec.matrices() {
            assert!(m.det().abs().is_one());
        }
        let split = compute_plus_split(&spec, &map, SPLIT_TOLERANCE).unwrap();
        let plus = split.plus_group(&spec);
        assert!(plus.iter().any(|m| m.is_identity()));
        for a in &plus {
            for b in &plus {
                let ab = *a * *b;
                assert!(plus.contains(&&ab), "{}: plus part not closed", spec.name());
            }
        }
        assert!(split.plus_order() * 2 >= spec.order());
        assert_eq!(spec.order() % split.plus_order(), 0);
        if split.expanding_dim == 0 {
            assert!(!split.is_proper);
        }
    }
}

#[test]
fn defined_reidemeister_zeta_has_finite_terms() {
    for (spec, map) in all_pairs(0x5eed_0102, 100) {
        if reidemeister_zeta_defined(&spec, &map, 64) == Definedness::Defined {
            for row in numbers_table(&spec, &map, 12).unwrap() {
                assert!(row.reidemeister.is_finite(), "{}: R(f^{}) infinite", spec.name(), row.n);
            }
        }
    }
}

#[test]
fn averaging_bounds() {
    for (spec, map) in all_pairs(0x5eed_0103, 100) {
        for row in numbers_table(&spec, &map, 12).unwrap() {
            assert!(row.nielsen >= row.lefschetz.abs());
            assert!(!row.nielsen.is_negative());
            if spec.order() == 1 {
                assert_eq!(row.nielsen, row.lefschetz.abs());
            }
        }
    }
}

#[test]
fn zeta_identities_on_fixtures_and_random_maps() {
    let s = Settings::default();
    for (spec, map) in all_pairs(0x5eed_0104, 60) {
        let n = nielsen_zeta(&spec, &map, &s).unwrap();
        assert_eq!(n.function, nielsen_zeta_direct(&spec, &map, &s).unwrap().function);
        if let Ok(r) = reidemeister_zeta(&spec, &map, &s) {
            assert_eq!(r.function, n.function, "{}", spec.name());
        }
        if !one_in_spectrum(&map) {
            let rr = radius_report(&map, &n, DEFAULT_TOLERANCE).unwrap();
            assert!(rr.checked);
        }
    }
}

#[test]
fn functional_equation_on_orientable_fixtures() {
    let s = Settings::default();
    let mut checked = 0;
    for f in builtin_fixtures() {
        // T2/<-I> is an orbifold with Euler characteristic 2, not a manifold
        if f.map2.is_some() || !f.spec.orientable() || f.map.d.det().is_zero() {
            continue;
        }
        for z in [
            lefschetz_zeta(&f.spec, &f.map, &s).unwrap(),
            nielsen_zeta(&f.spec, &f.map, &s).unwrap(),
        ] {
            let r = verify_functional_equation(&f.spec, &f.map, &z)
                .unwrap_or_else(|e| panic!("{}: {} {e}", f.name, z.function));
            assert!(r.holds, "{}", f.name);
            assert!(r.unit_degree_consistent(), "{}: epsilon {}", f.name, r.epsilon);
            checked += 1;
        }
    }
    assert!(checked >= 8);
}

#[test]
fn virtually_unipotent_maps_have_equal_zetas() {
    let s = Settings::default();
    let mut maps = vec![torus_fifth_root_map()];
    for k in [3, 4, 6] {
        maps.push((
            ManifoldSpec::trivial("torus", 2),
            AffineMapSpec::new(format!("rot{k}"), common::rotation_block(k)),
        ));
    }
    for (spec, map) in maps {
        assert!(is_virtually_unipotent(&map, DEFAULT_TOLERANCE).unwrap());
        let l = lefschetz_zeta(&spec, &map, &s).unwrap();
        let n = nielsen_zeta(&spec, &map, &s).unwrap();
        assert_eq!(l.function, n.function, "{}", map.label);
    }
}

#[test]
fn gauss_on_finite_nielsen_sequences() {
    for f in builtin_fixtures() {
        let rows = numbers_table(&f.spec, &f.map, 24).unwrap();
        if rows.iter().any(|r| !r.reidemeister.is_finite()) {
            continue;
        }
        let seq: Vec<Extended<BigInt>> = rows.into_iter().map(|r| Extended::Finite(r.nielsen)).collect();
        let g = check_gauss(&seq, 24).unwrap();
        assert!(g.passes(), "{}: {:?}", f.name, g.violations);
    }
}

#[test]
fn dold_on_random_maps() {
    for inst in corpus(0x5eed_0105, 100) {
        assert!(check_dold_lefschetz(&inst.spec, &inst.map, 30).unwrap().passes());
    }
}

#[test]
fn mobius_sums_vanish() {
    for n in 1..=1000u64 {
        let s: i64 = divisors(n).into_iter().map(|d| mobius(d) as i64).sum();
        assert_eq!(s, if n == 1 { 1 } else { 0 }, "n = {n}");
    }
}

#[test]
fn round_trip_through_slice() {
    let f = product_of_factors(&[(2, false), (-1, true), (3, false)]);
    let terms: Vec<Rational> = (1..=12).map(|n| power_sum(&[(2, false), (-1, true), (3, false)], n)).collect();
    assert_eq!(zeta_from_slice(&terms, 3).unwrap(), f);
    assert!(f.denominator().coeff(0).is_one());
}
