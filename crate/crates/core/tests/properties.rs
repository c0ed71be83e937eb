use proptest::prelude::*;

use cpo_core::funcspace::{canonical_iso, eval_segment, scott_opens};
use cpo_core::order::{OrderAtom, OrderWord};
use cpo_core::strings::{MonotypicString, PairString};

fn atom() -> impl Strategy<Value = OrderAtom> {
    prop_oneof![
        (1u64..4).prop_map(OrderAtom::Fin),
        Just(OrderAtom::Omega),
        Just(OrderAtom::OmegaStar)
    ]
}

fn word() -> impl Strategy<Value = OrderWord> {
    prop::collection::vec(atom(), 1..6).prop_map(|a| OrderWord::new(a).unwrap())
}

fn mono() -> impl Strategy<Value = MonotypicString> {
    prop_oneof![
        (0u64..200).prop_map(MonotypicString::left),
        (0u64..200).prop_map(MonotypicString::right),
        Just(MonotypicString::all_zeros_left()),
        Just(MonotypicString::all_ones_right()),
    ]
}

proptest! {
    #[test]
    fn segments_are_up_sets_in_inclusion_order(w in word()) {
        let fs = scott_opens(&w);
        let xs = w.window(6);
        let segs = fs.segments(3);
        let rows: Vec<Vec<u8>> = segs.iter().map(|s| xs.iter().map(|&x| eval_segment(&w, s, x).unwrap()).collect()).collect();
        for r in &rows {
            prop_assert!(r.windows(2).all(|p| p[0] <= p[1]), "not an up-set: {r:?}");
        }
        for pair in rows.windows(2) {
            prop_assert!(pair[0].iter().zip(&pair[1]).all(|(a, b)| a <= b));
        }
        prop_assert!(rows[0].iter().all(|&v| v == 0));
    }

    #[test]
    fn canonical_iso_is_monotone_and_invertible(w in word()) {
        if let Ok(iso) = canonical_iso(&w) {
            let fs = iso.function_space();
            let xs = w.window(4);
            for pair in xs.windows(2) {
                let (a, b) = (iso.apply(pair[0]).unwrap(), iso.apply(pair[1]).unwrap());
                prop_assert_eq!(fs.compare(&a, &b).unwrap(), std::cmp::Ordering::Less);
            }
            for &x in &xs {
                prop_assert_eq!(iso.inverse(&iso.apply(x).unwrap()).unwrap(), x);
            }
        }
    }

    #[test]
    fn pair_opp_is_an_involution(a in mono(), b in mono()) {
        let p = PairString::new(a, b);
        prop_assert_eq!(p.opp().opp(), p);
        let text = p.to_ascii();
        prop_assert_eq!(text.parse::<PairString>().unwrap(), p);
    }
}
