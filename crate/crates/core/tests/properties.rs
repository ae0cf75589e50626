use num_bigint::BigInt;
use proptest::prelude::*;
use qpart_core::{
    expand_reciprocal, forward_map, inverse_map, mu, PartContext, Partition, ProductSpec,
    TruncatedSeries,
};

fn series(len: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-50i64..50, len).prop_map(|c| TruncatedSeries::from_i64s(&c).unwrap())
}

fn odd_context(class_p2: bool) -> impl Strategy<Value = PartContext> {
    (1u64..=6, 1u64..=8).prop_map(move |(h, l)| {
        let y = 2 * h + 1;
        if class_p2 {
            PartContext::p2(y, l).unwrap()
        } else {
            PartContext::p1(y, l).unwrap()
        }
    })
}

fn partition_in(ctx: PartContext) -> impl Strategy<Value = Partition> {
    let parts = ctx.parts();
    prop::collection::vec(0u64..6, parts.len()).prop_map(move |freqs| {
        let entries = parts
            .iter()
            .zip(freqs)
            .map(|(p, f)| ((p.residue, p.block), f));
        Partition::new(ctx, entries).unwrap()
    })
}

proptest! {
    #[test]
    fn mul_commutes_and_associates(a in series(12), b in series(12), c in series(12)) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn expansion_truncates_consistently(
        residues in prop::collection::vec(1u64..20, 0..5),
        modulus in 1u64..25,
        l in 1u64..4,
        short in 0usize..40,
    ) {
        let spec = ProductSpec::new(residues, modulus, l).unwrap();
        let long = expand_reciprocal(&spec, 60);
        prop_assert_eq!(long.truncate(short).unwrap(), expand_reciprocal(&spec, short));
        prop_assert_eq!(long.coeff(0), &BigInt::from(1));
        prop_assert!(long.negatives().next().is_none());
    }

    #[test]
    fn text_form_round_trips(p in odd_context(false).prop_flat_map(partition_in)) {
        let back = Partition::parse(*p.context(), &p.to_string()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn forward_inverse_round_trip(p2 in odd_context(true).prop_flat_map(partition_in)) {
        let (p1, trace) = forward_map(&p2).unwrap();
        prop_assert_eq!(p1.norm(), p2.norm());
        prop_assert!(trace.mu >= 0);
        let (back, _) = inverse_map(&p1).unwrap().unwrap();
        prop_assert_eq!(back, p2);
    }

    #[test]
    fn mu_decides_membership(p1 in odd_context(false).prop_flat_map(partition_in)) {
        let m = mu(&p1).unwrap();
        prop_assert_eq!(m % 2, 0);
        let inv = inverse_map(&p1).unwrap();
        prop_assert_eq!(inv.is_some(), m >= 0);
        if let Some((p2, _)) = inv {
            prop_assert_eq!(forward_map(&p2).unwrap().0, p1);
        }
    }
}
