use kstep_core::sequences::{recurrence_holds, kbonacci, LinearRecurrence};
use kstep_core::{BigInt, IntPoly};
use num_traits::Zero;
use proptest::prelude::*;

fn poly_strategy(max_degree: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-100i64..=100, 0..=max_degree + 1).prop_map(|c| IntPoly::from_i64s(&c))
}

fn monic_strategy(max_degree: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-100i64..=100, 0..=max_degree).prop_map(|mut c| {
        c.push(1);
        IntPoly::from_i64s(&c)
    })
}

fn normalized(p: &IntPoly) -> bool {
    p.coeffs().last().is_none_or(|c| !c.is_zero())
}

proptest! {
    #[test]
    fn product_evaluates_to_product_of_values(
        a in poly_strategy(40),
        b in poly_strategy(40),
        xs in prop::collection::vec(-50i64..=50, 20),
    ) {
        let ab = &a * &b;
        prop_assert!(normalized(&ab));
        for x in xs {
            let x = BigInt::from(x);
            prop_assert_eq!(ab.eval(&x), a.eval(&x) * b.eval(&x));
        }
    }

    #[test]
    fn divrem_round_trip(num in poly_strategy(40), den in monic_strategy(12)) {
        let (q, r) = num.divrem(&den).unwrap();
        prop_assert!(normalized(&q) && normalized(&r));
        prop_assert!(r.degree().is_none_or(|d| d < den.degree().unwrap()));
        prop_assert_eq!(&(&den * &q) + &r, num);
    }

    #[test]
    fn compose_power_then_evaluate(p in poly_strategy(15), k in 1usize..5, x in -6i64..=6) {
        let x = BigInt::from(x);
        let xk = num_traits::pow(x.clone(), k);
        prop_assert_eq!(p.compose_power(k).eval(&x), p.eval(&xk));
    }

    #[test]
    fn add_sub_neg_stay_normalized(a in poly_strategy(20), b in poly_strategy(20)) {
        let s = &a + &b;
        let d = &a - &b;
        prop_assert!(normalized(&s) && normalized(&d) && normalized(&(-&a)));
        prop_assert_eq!(&d + &b, a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn reverse_is_an_involution(mut c in prop::collection::vec(-20i64..=20, 1..12), extra in 0usize..4) {
        if c[0] == 0 {
            c[0] = 1;
        }
        let p = IntPoly::from_i64s(&c);
        let n = p.degree().unwrap_or(0) + extra;
        prop_assert_eq!(p.reverse(n).unwrap().reverse(n).unwrap(), p);
    }

    #[test]
    fn windows_are_shift_consistent(
        coeffs in prop::collection::vec(-3i64..=3, 1..5),
        seeds in prop::collection::vec(-9i64..=9, 5),
        lo in -10i64..10,
        len in 0i64..30,
        cut_lo in 0i64..10,
        cut_hi in 0i64..10,
    ) {
        let k = coeffs.len();
        let coeffs: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        let initial: Vec<BigInt> = seeds[..k].iter().map(|&s| BigInt::from(s)).collect();
        let rec = LinearRecurrence::new(coeffs, initial, 0).unwrap();
        let hi = lo + len;
        let lo = lo.max(0);
        let hi = hi.max(lo);
        let full = rec.evaluate_window(lo, hi).unwrap();
        let (a, b) = ((lo + cut_lo).min(hi), (hi - cut_hi).max(lo));
        if a <= b {
            prop_assert_eq!(full.slice(a, b).unwrap(), rec.evaluate_window(a, b).unwrap());
        }
        prop_assert!(recurrence_holds(&rec, &full));
    }
}

#[test]
fn kbonacci_windows_hold_on_both_sides_of_the_seeds() {
    for k in 2..=8 {
        let rec = kbonacci(k).unwrap();
        let w = rec.evaluate_window(-40, 60).unwrap();
        assert!(recurrence_holds(&rec, &w), "k = {k}");
    }
}
