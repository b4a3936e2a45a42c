mod common;

use std::cmp::Ordering;

use common::{brute_b, rational_rank, Decimal};
use proptest::prelude::*;
use sturmian::{
    b_direct, b_parity, b_recurrence, char_prefix, eigen_multiplicity, factor_set,
    factor_set_window, gram_matrix, height_sum_formula, nullity, Factor, Slope,
};

prop_compose! {
    fn quadratic()(a in -30i64..=30, b in prop_oneof![-6i64..=-1, 1i64..=6],
                   c in 1i64..=25, d in 2i64..=60) -> Option<Slope> {
        Slope::quadratic(a, b, c, d).ok()
    }
}

fn slope() -> impl Strategy<Value = Slope> {
    quadratic().prop_filter_map("rational input", |s| s)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn floor_brackets_the_product(s in slope(), k in 0i64..1_000_000) {
        let f = s.floor_mul_signed(k).unwrap();
        prop_assert_eq!(f, Decimal::of(&s).floor_mul(k));
        let lower = if k == 0 { Ordering::Equal } else { Ordering::Greater };
        prop_assert_eq!(s.cmp_multiple(k, f).unwrap(), lower);
        prop_assert_eq!(s.cmp_multiple(k, f + 1).unwrap(), Ordering::Less);
    }

    #[test]
    fn negative_multiples_floor_correctly(s in slope(), k in 1i64..100_000) {
        prop_assert_eq!(s.floor_mul_signed(-k).unwrap(), -s.floor_mul_signed(k).unwrap() - 1);
    }

    #[test]
    fn frac_cmp_matches_decimals(s in slope(), j in 0u64..2000, k in 0u64..2000) {
        let d = Decimal::of(&s);
        let expected = d.frac(j as i64).cmp(&d.frac(k as i64));
        prop_assert_eq!(s.frac_cmp(j, k).unwrap(), expected);
        prop_assert_eq!(s.frac_cmp(k, j).unwrap(), expected.reverse());
        if j > 0 && k > 0 && j != k {
            prop_assert_eq!(s.complement().frac_cmp(j, k).unwrap(), expected.reverse());
        }
        prop_assert_eq!(expected == Ordering::Equal, j == k);
    }

    #[test]
    fn complement_is_an_involution(s in slope(), k in 1u64..100_000) {
        let c = s.complement();
        prop_assert_eq!(c.complement(), s);
        prop_assert_eq!(s.floor_mul(k).unwrap() + c.floor_mul(k).unwrap(), k as i64 - 1);
    }

    #[test]
    fn canonical_display_round_trips(s in slope()) {
        prop_assert_eq!(s.to_string().parse::<Slope>().unwrap(), s);
    }

    #[test]
    fn factor_string_round_trips(bits in proptest::collection::vec(0u8..=1, 1..200)) {
        let f = Factor::from_bits(&bits);
        let text = f.to_string();
        prop_assert_eq!(text.parse::<Factor>().unwrap(), f.clone());
        prop_assert_eq!(f.height() as usize, bits.iter().filter(|&&b| b == 1).count());
        prop_assert_eq!(f.reverse().reverse(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn factor_sets_are_sturmian(s in slope(), n in 1usize..60) {
        let fs = factor_set(&s, n).unwrap();
        prop_assert_eq!(fs.len(), n + 1);
        prop_assert!(fs.factors().windows(2).all(|w| w[0] < w[1]));
        for w in fs.factors() {
            prop_assert!(fs.contains(&w.reverse()));
        }
        let pals = fs.palindromes();
        if n % 2 == 1 {
            prop_assert_eq!(pals.len(), 2);
        } else {
            prop_assert!(pals.iter().all(|p| p.height() % 2 == 0));
        }
        prop_assert_eq!(fs.height_sum() % 2, n as u64 % 2);
        let prefix = char_prefix(&s, 4 * n).unwrap();
        for w in prefix.windows(n) {
            prop_assert!(fs.contains(&Factor::from_bits(w)));
        }
    }

    #[test]
    fn construction_agrees_with_sliding_window(s in slope(), n in 1usize..40) {
        prop_assert_eq!(factor_set(&s, n).unwrap(), factor_set_window(&s, n).unwrap());
    }

    #[test]
    fn b_routes_agree(s in slope(), k in 1u64..300) {
        let direct = b_direct(&s, k).unwrap();
        prop_assert_eq!(direct, brute_b(&Decimal::of(&s), k as i64));
        prop_assert_eq!(direct + b_direct(&s.complement(), k).unwrap(), k - 1);
        prop_assert_eq!(direct % 2, b_parity(&s, k).unwrap() as u64);
        let recs = b_recurrence(&s, k).unwrap();
        prop_assert_eq!(recs.len() as u64, k);
        prop_assert_eq!(recs.last().unwrap().value, direct);
    }

    #[test]
    fn height_sum_closed_form(s in slope(), n in 1u64..120) {
        let fs = factor_set(&s, n as usize).unwrap();
        prop_assert_eq!(height_sum_formula(&s, n).unwrap(), fs.height_sum());
        prop_assert_eq!(gram_matrix(&fs).trace(), fs.height_sum());
    }

    #[test]
    fn gram_has_no_negative_integer_eigenvalues(s in slope(), n in 1usize..16) {
        let g = gram_matrix(&factor_set(&s, n).unwrap());
        for lambda in -5..=-1 {
            prop_assert_eq!(eigen_multiplicity(&g, lambda), 0);
        }
        let total: usize = (0..=g.trace() as i64).map(|l| eigen_multiplicity(&g, l)).sum();
        prop_assert!(total <= n + 1);
    }

    #[test]
    fn nullity_matches_rational_elimination(
        rows in (1usize..=8).prop_flat_map(|n| proptest::collection::vec(
            proptest::collection::vec(-5i64..=5, n), n))
    ) {
        prop_assert_eq!(nullity(&rows), rows.len() - rational_rank(&rows));
    }
}

#[test]
fn rational_slopes_inside_their_guard_agree_with_decimals() {
    let s = Slope::rational(21, 55).unwrap();
    let d = Decimal::of(&s);
    for k in 1..55 {
        assert_eq!(b_direct(&s, k).unwrap(), brute_b(&d, k as i64));
        assert_eq!(s.floor_mul(k).unwrap(), d.floor_mul(k as i64));
    }
}
