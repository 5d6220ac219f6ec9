use proptest::prelude::*;

use berger_core::bifurcation::{degeneracy_surd, gap_critical_point, gap_function, morse_index};
use berger_core::numerics::quadratic::{eval_quadratic, solve_quadratic_positive};
use berger_core::numerics::rational::{rat, ratio, Rational};
use berger_core::spectra::{branch_value, is_admissible};
use berger_core::{threshold, Family, FiberScale, Surd};

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![
        (1u32..6).prop_map(|n| Family::u(n).unwrap()),
        (1u32..6).prop_map(|n| Family::sp(n).unwrap()),
        Just(Family::spin9()),
    ]
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..5000, 1i64..1000).prop_map(|(p, q)| ratio(p, q))
}

fn admissible_pair() -> impl Strategy<Value = (u32, u32)> {
    (0u32..30).prop_flat_map(|k| (Just(k), 0..=k / 2).prop_map(|(k, i)| (k, k - 2 * i)))
}

proptest! {
    #[test]
    fn quadratic_root_substitutes_to_zero(a in 1i64..500, b in -500i64..500, c in -500i64..-1) {
        let (a, b, c) = (rat(a), rat(b), rat(c));
        let root = solve_quadratic_positive(&a, &b, &c).unwrap();
        prop_assert!(root.signum() > 0);
        prop_assert!(eval_quadratic(&a, &b, &c, &root).is_zero());
        let tiny = ratio(1, 1_000_000_000_000_000) * ratio(1, 1_000_000_000_000_000);
        let x = root.enclose(&tiny);
        let poly = x.mul(&x).scale(&a).add(&x.scale(&b)).shift(&c);
        let bound = ratio(1, 1_000_000_000_000) * ratio(1, 10_000_000_000_000);
        prop_assert!(poly.lo() >= &-bound.clone() && poly.hi() <= &bound);
    }

    #[test]
    fn surd_order_agrees_with_floats(
        a in -50i64..50, b in -20i64..20, d in 2i64..200,
        c in -50i64..50, e in -20i64..20,
    ) {
        let x = Surd::new(rat(a), rat(b), rat(d));
        let y = Surd::new(rat(c), rat(e), rat(d));
        let (fx, fy) = (x.to_f64(), y.to_f64());
        if (fx - fy).abs() > 1e-9 {
            prop_assert_eq!(x < y, fx < fy);
        }
        prop_assert_eq!(&x - &y + y.clone(), x);
    }

    #[test]
    fn gap_is_threshold_minus_branch(f in family(), (k, j) in admissible_pair(), s in positive_rational()) {
        let g = gap_function(&f, k, j).unwrap();
        let scale = FiberScale::from_s(Surd::rational(s.clone())).unwrap();
        let direct = threshold(&f, &scale) - branch_value(&f, k, j, &scale).unwrap();
        prop_assert_eq!(Surd::rational(g.eval_rational(&s)), direct);
        prop_assert_eq!(g.p.clone() < rat(0), j >= 1);
    }

    #[test]
    fn fiber_branches_never_exceed_threshold_from_below(
        f in family(), (k, j) in admissible_pair(), s in positive_rational(),
    ) {
        prop_assume!(j >= 1);
        let g = gap_function(&f, k, j).unwrap();
        let cp = gap_critical_point(&g).unwrap();
        prop_assert!(cp.value.signum() <= 0);
        prop_assert!(Surd::rational(g.eval_rational(&s)) <= cp.value);
    }

    #[test]
    fn morse_index_is_non_increasing(f in family(), s1 in positive_rational(), s2 in positive_rational()) {
        let (lo, hi) = if s1 <= s2 { (s1, s2) } else { (s2, s1) };
        let at = |s: Rational| morse_index(&f, &FiberScale::from_s(Surd::rational(s / rat(100))).unwrap()).unwrap();
        prop_assert!(at(lo) >= at(hi));
    }

    #[test]
    fn base_branches_do_not_move(f in family(), q in 0u32..15, s in positive_rational()) {
        let scale = FiberScale::from_s(Surd::rational(s)).unwrap();
        prop_assert_eq!(
            branch_value(&f, 2 * q, 0, &scale).unwrap(),
            branch_value(&f, 2 * q, 0, &FiberScale::one()).unwrap()
        );
    }

    #[test]
    fn admissibility_is_parity_and_order(k in 0u32..100, j in 0u32..100) {
        prop_assert_eq!(is_admissible(k, j), j <= k && (k - j) % 2 == 0);
    }
}

#[test]
fn degeneracy_values_decrease_to_zero() {
    for f in [Family::sp(1).unwrap(), Family::sp(4).unwrap(), Family::spin9()] {
        let values: Vec<Surd> = (0..=30).map(|q| degeneracy_surd(&f, q).unwrap()).collect();
        assert!(values.windows(2).all(|w| w[1] < w[0]), "{f}");
        assert!(values[30].to_f64() < 1e-3, "{f}");
    }
}
