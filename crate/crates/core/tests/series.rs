use nsc_core::rational::{frac, int, Rational};
use nsc_core::{LaurentSeries, ParamChange, Ring, SeriesError};
use proptest::prelude::*;

type S = LaurentSeries<Rational>;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

fn series(low: std::ops::Range<i64>) -> impl Strategy<Value = S> {
    (low, prop::collection::vec(small_rational(), 1..6), 2i64..6).prop_map(|(lo, mut c, extra)| {
        if c[0].is_zero() {
            c[0] = int(1);
        }
        let high = lo + extra;
        S::new("t", lo, c, high)
    })
}

fn param_change() -> impl Strategy<Value = ParamChange<Rational>> {
    (prop::collection::vec(small_rational(), 0..4), 4i64..8)
        .prop_map(|(c, order)| ParamChange::from_higher("u", c, order))
}

fn agree_on_common_window(a: &S, b: &S) -> bool {
    let hi = a.high().min(b.high());
    let lo = a.valuation().min(b.valuation()).min(hi);
    (lo..hi).all(|k| a.coefficient(k).unwrap() == b.coefficient(k).unwrap())
}

proptest! {
    #[test]
    fn field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        if !a.is_zero() {
            prop_assert_eq!(&a * (int(1) / &a), int(1));
        }
    }

    #[test]
    fn substitution_is_multiplicative(a in series(-3..1), b in series(-3..1), pc in param_change()) {
        let prod = &a * &b;
        let h = |x: &S| x.high().min(x.valuation() + pc.order() - 1);
        let lhs = prod.substitute(&pc, h(&prod)).unwrap();
        let sa = a.substitute(&pc, h(&a)).unwrap();
        let sb = b.substitute(&pc, h(&b)).unwrap();
        prop_assert!(agree_on_common_window(&lhs, &(&sa * &sb)));
    }

    #[test]
    fn substitution_is_additive(a in series(-3..1), b in series(-3..1), pc in param_change()) {
        let s = &a + &b;
        let h = |x: &S| x.high().min(x.valuation() + pc.order() - 1);
        let sa = a.substitute(&pc, h(&a)).unwrap();
        let sb = b.substitute(&pc, h(&b)).unwrap();
        if !s.is_zero() {
            let ss = s.substitute(&pc, h(&s)).unwrap();
            prop_assert!(agree_on_common_window(&ss, &(&sa + &sb)));
        }
    }

    #[test]
    fn substitution_round_trips(a in series(-3..1), pc in param_change()) {
        let back = pc.revert().unwrap();
        let h1 = a.high().min(a.valuation() + pc.order() - 1);
        let there = a.substitute(&pc, h1).unwrap().with_var("t");
        let h2 = there.high().min(there.valuation() + back.order() - 1);
        let again = there.substitute(&back, h2).unwrap().with_var("t");
        prop_assert!(agree_on_common_window(&again, &a));
    }

    #[test]
    fn revert_is_an_involution(pc in param_change()) {
        let inv = pc.revert().unwrap();
        prop_assert_eq!(inv.revert().unwrap(), pc.clone());
        prop_assert!(pc.compose(&inv).unwrap().is_identity());
    }

    #[test]
    fn inverse_times_self_is_one(a in series(-3..3)) {
        let inv = a.inverse().unwrap();
        let p = &a * &inv;
        prop_assert_eq!(p.coefficient(0).unwrap(), int(1));
        for k in 1..p.high() {
            prop_assert!(p.coefficient(k).unwrap().is_zero());
        }
    }
}

/// Lagrange inversion: `[t^n] u(t) = (1/n) [u^{n-1}] (u / t(u))^n`.
#[test]
fn revert_matches_lagrange_inversion() {
    let pc = ParamChange::from_higher("u", vec![frac(2, 3), int(-1), frac(1, 5)], 7);
    let inv = pc.revert().unwrap();
    let unit = S::new("u", 0, (1..7).map(|k| pc.coefficient(k).unwrap()).collect(), 6);
    let ratio = unit.inverse().unwrap();
    for n in 1..7i64 {
        let p = ratio.pow(n).unwrap();
        let want = p.coefficient(n - 1).unwrap() / int(n);
        assert_eq!(inv.coefficient(n).unwrap(), want, "n = {n}");
    }
}

#[test]
fn shortfall_is_reported_not_fabricated() {
    let s = S::new("t", -2, vec![int(1), int(3)], 1);
    assert!(matches!(s.coefficient(1), Err(SeriesError::TruncationShortfall { .. })));
    let pc = ParamChange::correction("u", int(1), 2, 3);
    assert!(matches!(s.substitute(&pc, 1), Err(SeriesError::TruncationShortfall { .. })));
}
