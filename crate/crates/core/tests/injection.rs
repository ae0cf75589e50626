use std::collections::HashSet;

use num_bigint::BigInt;
use qpart_core::verify::main_difference;
use qpart_core::{
    composed_map, enumerate, expand_reciprocal, forward_map, inverse_map, mu, x_shift_inverse,
    x_shift_map, PartContext, Partition,
};

const YS: [u64; 4] = [3, 5, 7, 9];
const LS: [u64; 4] = [1, 2, 3, 4];
const N: u64 = 60;

#[test]
fn forward_preserves_norm_and_round_trips() {
    for y in YS {
        for l in LS {
            let ctx = PartContext::p2(y, l).unwrap();
            let mut images = HashSet::new();
            for n in 0..=N {
                for p2 in enumerate(&ctx, n) {
                    let (p1, trace) = forward_map(&p2).unwrap();
                    assert_eq!(p1.norm(), n, "{p2}");
                    assert!(trace.mu >= 0 && trace.mu % 2 == 0, "{p2} -> {p1}");
                    assert_eq!(trace.mu, mu(&p1).unwrap());
                    for t in &trace.parts {
                        assert_eq!(t.frequency, 2 * t.quotient + t.remainder);
                        assert!(t.remainder <= 1);
                    }
                    let (back, _) = inverse_map(&p1).unwrap().expect("image has a preimage");
                    assert_eq!(back, p2);
                    assert!(images.insert(p1));
                }
            }
        }
    }
}

#[test]
fn image_is_exactly_nonnegative_mu() {
    for y in YS {
        for l in LS {
            let ctx = PartContext::p1(y, l).unwrap();
            let diff = main_difference(l, y, N).unwrap();
            for n in 0..=N {
                let mut outside = 0u64;
                for p1 in enumerate(&ctx, n) {
                    let m = mu(&p1).unwrap();
                    assert_eq!(m % 2, 0, "{p1}");
                    match inverse_map(&p1).unwrap() {
                        Some((p2, trace)) => {
                            assert!(m >= 0);
                            assert_eq!(trace.mu, m);
                            assert_eq!(forward_map(&p2).unwrap().0, p1);
                        }
                        None => {
                            assert!(m < 0, "{p1}");
                            outside += 1;
                        }
                    }
                }
                assert_eq!(
                    diff.coeff(n as usize),
                    &BigInt::from(outside),
                    "(L, y, n) = ({l}, {y}, {n})"
                );
            }
        }
    }
}

fn check(y: u64, l: u64, src: Vec<((u64, u64), u64)>, dst: Vec<((u64, u64), u64)>) {
    let p2 = Partition::new(PartContext::p2(y, l).unwrap(), src).unwrap();
    let p1 = Partition::new(PartContext::p1(y, l).unwrap(), dst).unwrap();
    assert_eq!(forward_map(&p2).unwrap().0, p1, "y = {y}, L = {l}, {p2}");
}

#[test]
fn example_mapping_schemas() {
    for y in YS {
        for l in 1..=6u64 {
            let (h, hh) = (l / 2, l.div_ceil(2));
            let top = 2 * y + 1;
            for i in 0..=3u64 {
                for k in 1..=h {
                    check(y, l, vec![((top, k), 2 * i)], vec![((2 * y, 2 * k), i)]);
                    check(
                        y,
                        l,
                        vec![((top, k), 2 * i + 1)],
                        vec![((1, 1), y - 1), ((y + 2, k), 1), ((2 * y, 2 * k), i)],
                    );
                }
                for k in 1..=hh {
                    check(y, l, vec![((y, k), 2 * i)], vec![((2 * y, 2 * k - 1), i)]);
                }
                for k in 2..=hh {
                    check(
                        y,
                        l,
                        vec![((y, k), 2 * i + 1)],
                        vec![((1, 1), y - 1), ((1, k), 1), ((2 * y, 2 * k - 1), i)],
                    );
                }
                check(
                    y,
                    l,
                    vec![((y, 1), 2 * i + 1)],
                    vec![((1, 1), y), ((2 * y, 1), i)],
                );
            }
            for k in h + 1..=l {
                check(
                    y,
                    l,
                    vec![((top, k), 1)],
                    vec![((1, 1), y - 1), ((y + 2, k), 1)],
                );
            }
            for k in hh + 1..=l {
                check(y, l, vec![((y, k), 1)], vec![((1, 1), y - 1), ((1, k), 1)]);
            }
            for k in 1..=l {
                let dst = if k % 2 == 1 {
                    vec![((1, k.div_ceil(2)), 2)]
                } else {
                    vec![((y + 2, k / 2), 2)]
                };
                check(y, l, vec![((2, k), 1)], dst);
            }
        }
    }
}

#[test]
fn golden_table() {
    let c1 = PartContext::p1(3, 2).unwrap();
    let c2 = PartContext::p2(3, 2).unwrap();
    let rows = [
        (Some("<3_1,3_2>"), "<1_1^5,1_2>", 0),
        (Some("<2_1^2,2_2>"), "<1_1^4,5_1^2>", 4),
        (Some("<7_1^2>"), "<6_2>", 0),
        (Some("<2_1^2,3_1,7_1>"), "<1_1^9,5_1>", 4),
        (Some("<2_1,3_1^4>"), "<1_1^2,6_1^2>", 2),
        (Some("<2_1^4,3_1^2>"), "<1_1^8,6_1>", 8),
        (Some("<2_1^7>"), "<1_1^14>", 14),
        (None, "<1_1,5_2>", -4),
        (None, "<5_1,1_2>", -4),
        (None, "<1_1^3,5_1,6_1>", -2),
    ];
    let all1: HashSet<String> = enumerate(&c1, 14).iter().map(|p| p.to_string()).collect();
    let all2: HashSet<String> = enumerate(&c2, 14).iter().map(|p| p.to_string()).collect();
    assert_eq!(all1.len(), 10);
    assert_eq!(all2.len(), 7);
    for (src, dst, m) in rows {
        let p1 = Partition::parse(c1, dst).unwrap();
        assert!(all1.contains(&p1.to_string()), "{dst}");
        assert_eq!(mu(&p1).unwrap(), m, "{dst}");
        if let Some(src) = src {
            let p2 = Partition::parse(c2, src).unwrap();
            assert!(all2.contains(&p2.to_string()), "{src}");
            assert_eq!(forward_map(&p2).unwrap().0, p1);
        } else {
            assert!(inverse_map(&p1).unwrap().is_none());
        }
    }
}

#[test]
fn x_shift_suite() {
    for y in YS {
        for l in LS {
            let c1 = PartContext::p1(y, l).unwrap();
            let c2 = PartContext::p2(y, l).unwrap();
            let s1 = expand_reciprocal(&c1.product_spec(), N as usize);
            let s2 = expand_reciprocal(&c2.product_spec(), N as usize);
            for x in 2..=y + 2 {
                let cx = PartContext::p1_prime(y, l, x).unwrap();
                let sx = expand_reciprocal(&cx.product_spec(), N as usize);
                for n in 0..=N as usize {
                    assert!(sx.coeff(n) >= s1.coeff(n) && s1.coeff(n) >= s2.coeff(n));
                }
                let mut images = HashSet::new();
                for n in (0..=N).step_by(7) {
                    for p in enumerate(&c1, n) {
                        let img = x_shift_map(&p, x).unwrap();
                        assert_eq!(img.norm(), n);
                        assert_eq!(img.context(), &cx);
                        assert_eq!(x_shift_inverse(&img).unwrap().as_ref(), Some(&p));
                        assert!(images.insert(img));
                    }
                    for p in enumerate(&cx, n) {
                        if let Some(pre) = x_shift_inverse(&p).unwrap() {
                            assert_eq!(x_shift_map(&pre, x).unwrap(), p);
                        }
                    }
                }
                for p2 in enumerate(&c2, 30) {
                    assert_eq!(composed_map(&p2, x).unwrap().norm(), 30);
                }
            }
        }
    }
}
