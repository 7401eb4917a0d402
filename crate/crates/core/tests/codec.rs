mod common;

use common::{deinterleave_prefix, interleave_prefix, q, rational_digits};
use proptest::prelude::*;
use redim_core::codec::{deinterleave, interleave, segment};
use redim_core::expansion::to_expansion;
use redim_core::ExactRational;

fn unit() -> impl Strategy<Value = ExactRational> {
    (1u64..=200)
        .prop_flat_map(|q| (1..=q, Just(q)))
        .prop_map(|(p, q)| ExactRational::new(p, q).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn segmentation_is_sound(x in unit()) {
        let e = to_expansion(&x).unwrap();
        let g = segment(&e);
        for group in g.groups().take(g.preperiod().len() + 3 * g.period().len()) {
            let text = group.to_string();
            let (zeros, last) = text.split_at(text.len() - 1);
            prop_assert!(zeros.bytes().all(|b| b == b'0'));
            prop_assert!(last != "0");
        }
        let len = e.preperiod().len() + 3 * e.period().len();
        let rendered: Vec<u8> = g
            .groups()
            .flat_map(|grp| grp.to_string().into_bytes())
            .map(|b| b - b'0')
            .take(len)
            .collect();
        prop_assert_eq!(rendered, e.prefix(len));
        prop_assert_eq!(g.to_expansion(), e);
    }

    #[test]
    fn deinterleave_inverts_interleave(a in unit(), b in unit()) {
        let (ga, gb) = (segment(&to_expansion(&a).unwrap()), segment(&to_expansion(&b).unwrap()));
        let y = interleave(&ga, &gb).unwrap();
        // exact reconstruction of a rational: the joint cycle closed
        prop_assert_eq!(to_expansion(&y.value()).unwrap(), y.clone());
        prop_assert_eq!(deinterleave(&y), (ga, gb));
    }

    #[test]
    fn interleave_inverts_deinterleave(y in unit()) {
        let e = to_expansion(&y).unwrap();
        let (a, b) = deinterleave(&e);
        prop_assert_eq!(interleave(&a, &b).unwrap(), e);
    }

    #[test]
    fn matches_digit_prefix_oracle(a in unit(), b in unit()) {
        let y = interleave(
            &segment(&to_expansion(&a).unwrap()),
            &segment(&to_expansion(&b).unwrap()),
        )
        .unwrap();
        let want = interleave_prefix(&rational_digits(&a, 400), &rational_digits(&b, 400), 60);
        prop_assert_eq!(y.prefix(60), want);
        let (da, db) = deinterleave_prefix(&y.prefix(2000));
        prop_assert_eq!(&da[..30], &rational_digits(&a, 30)[..]);
        prop_assert_eq!(&db[..30], &rational_digits(&b, 30)[..]);
    }
}

#[test]
fn sevenths_by_brute_interleave() {
    // 12 unrolled groups of 1/7 with itself, then period minimization
    let seventh = rational_digits(&q("1/7"), 12);
    let brute = interleave_prefix(&seventh, &seventh, 24);
    assert_eq!(&brute[..12], &brute[12..]);
    let y = interleave(
        &segment(&to_expansion(&q("1/7")).unwrap()),
        &segment(&to_expansion(&q("1/7")).unwrap()),
    )
    .unwrap();
    assert_eq!(y.period(), &brute[..12]);
    assert_eq!(y.value(), ExactRational::new(114422885577i64, 999999999999i64).unwrap());
}

#[test]
fn singleton_groups_of_one_seventh() {
    let digits = rational_digits(&q("1/7"), 18);
    let brute = common::groups(&digits);
    assert_eq!(brute.len(), 18);
    let g = segment(&to_expansion(&q("1/7")).unwrap());
    assert!(g.preperiod().is_empty());
    let ours: Vec<Vec<u8>> = g.period().iter().map(|x| vec![x.terminal()]).collect();
    assert_eq!(ours, brute[..6]);
}
