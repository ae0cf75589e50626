//! The injection from `P2` partitions into `P1` partitions, its inverse, the `mu`
//! statistic, and the x-shift map into `P1'`.
//!
//! All maps work on frequencies. Index ranges such as `k <= L/2` or
//! `(L+1)/2 < k` are read as comparisons between the integer `k` and the rational
//! bound, so `k <= L/2` becomes `k <= floor(L/2)`. Empty ranges give empty sums.
//!
//! Every map requires odd `y > 1`; `(y - 1)` is then even, which is what makes
//! `mu` even and the halving in the inverse exact.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partition::{PartClass, PartContext, PartIndex, Partition};

/// `nu(s_t) = 2 Q(s_t) + R(s_t)` for one part of the source partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartTrace {
    pub part: PartIndex,
    pub frequency: u64,
    pub quotient: u64,
    pub remainder: u64,
}

/// The four auxiliary sums of a map. The forward map uses `A, B, C, D`, the
/// inverse and `mu` use `W, X, Y, Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceSums {
    Forward { a: u64, b: u64, c: u64, d: u64 },
    Inverse { w: u64, x: u64, y: u64, z: u64 },
}

impl TraceSums {
    pub fn labelled(&self) -> [(&'static str, u64); 4] {
        match *self {
            TraceSums::Forward { a, b, c, d } => [("A", a), ("B", b), ("C", c), ("D", d)],
            TraceSums::Inverse { w, x, y, z } => [("W", w), ("X", x), ("Y", y), ("Z", z)],
        }
    }

    pub fn total(&self) -> u64 {
        self.labelled().iter().map(|(_, v)| v).sum()
    }
}

/// Intermediate quantities of one application of the forward or inverse map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingTrace {
    /// One entry per part present in the source partition, ascending by value.
    pub parts: Vec<PartTrace>,
    pub sums: TraceSums,
    /// `mu` of the `P1` partition involved (the image for the forward map).
    pub mu: i64,
}

fn part_traces(p: &Partition) -> Vec<PartTrace> {
    p.iter()
        .map(|(part, f)| PartTrace {
            part,
            frequency: f,
            quotient: f / 2,
            remainder: f % 2,
        })
        .collect()
}

fn require_class(p: &Partition, class: PartClass) -> Result<()> {
    if p.context().class() != class {
        return Err(Error::ClassMismatch {
            expected: class.to_string(),
            found: p.context().class().to_string(),
        });
    }
    Ok(())
}

fn require_odd_y(ctx: &PartContext) -> Result<()> {
    if ctx.y().is_multiple_of(2) {
        return Err(Error::InvalidContext(format!(
            "the injection is defined for odd y only, got y = {}",
            ctx.y()
        )));
    }
    Ok(())
}

/// `(floor(L/2), floor((L+1)/2))`.
fn half_bounds(l: u64) -> (u64, u64) {
    (l / 2, l.div_ceil(2))
}

fn to_i64(v: u64) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::OutOfRange(format!("{v} does not fit in i64")))
}

/// Maps a `P2` partition to the `P1` partition of the same norm.
pub fn forward_map(p2: &Partition) -> Result<(Partition, MappingTrace)> {
    require_class(p2, PartClass::P2)?;
    let ctx = *p2.context();
    require_odd_y(&ctx)?;
    let (y, l) = (ctx.y(), ctx.l());
    let (h, hh) = half_bounds(l);

    let twos = |k| p2.freq(2, k);
    let ys = |k| p2.freq(y, k);
    let tops = |k| p2.freq(2 * y + 1, k);

    let a: u64 = (1..=h).map(|b| tops(b) % 2).sum();
    let b: u64 = (h + 1..=l).map(tops).sum();
    let c: u64 = (1..=hh).map(|b| ys(b) % 2).sum();
    let d: u64 = (hh + 1..=l).map(ys).sum();

    let mut image = BTreeMap::new();
    for k in 1..=l {
        let evens = if k % 2 == 0 {
            tops(k / 2) / 2
        } else {
            ys(k.div_ceil(2)) / 2
        };
        image.insert(PartIndex::new(2 * y, k), evens);

        let mids = if k > h {
            tops(k)
        } else {
            2 * twos(2 * k) + tops(k) % 2
        };
        image.insert(PartIndex::new(y + 2, k), mids);

        let ones = if k > hh {
            ys(k)
        } else if k > 1 {
            2 * twos(2 * k - 1) + ys(k) % 2
        } else {
            ys(1) % 2 + 2 * twos(1) + (y - 1) * (a + b + c + d)
        };
        image.insert(PartIndex::new(1, k), ones);
    }
    let image = Partition::from_map_unchecked(PartContext::p1(y, l)?, image);
    let trace = MappingTrace {
        parts: part_traces(p2),
        sums: TraceSums::Forward { a, b, c, d },
        mu: mu(&image)?,
    };
    Ok((image, trace))
}

fn inverse_sums(p1: &Partition) -> TraceSums {
    let ctx = p1.context();
    let (y, l) = (ctx.y(), ctx.l());
    let (h, hh) = half_bounds(l);
    TraceSums::Inverse {
        w: (1..=h).map(|b| p1.freq(y + 2, b) % 2).sum(),
        x: (h + 1..=l).map(|b| p1.freq(y + 2, b)).sum(),
        y: (1..=hh).map(|b| p1.freq(1, b) % 2).sum(),
        z: (hh + 1..=l).map(|b| p1.freq(1, b)).sum(),
    }
}

/// `mu(pi_1) = nu(1_1) - R(1_1) - (y - 1)(W + X + Y + Z)`; non-negative exactly on
/// the image of [`forward_map`].
pub fn mu(p1: &Partition) -> Result<i64> {
    require_class(p1, PartClass::P1)?;
    require_odd_y(p1.context())?;
    let y = p1.context().y();
    let ones = p1.freq(1, 1);
    let base = to_i64(ones - ones % 2)?;
    let penalty = to_i64((y - 1) * inverse_sums(p1).total())?;
    Ok(base - penalty)
}

/// The inverse-map trace of a `P1` partition, available whether or not the
/// partition lies in the image.
pub fn inverse_trace(p1: &Partition) -> Result<MappingTrace> {
    let mu = mu(p1)?;
    Ok(MappingTrace {
        parts: part_traces(p1),
        sums: inverse_sums(p1),
        mu,
    })
}

fn halve(numerator: i64, what: &str) -> Result<u64> {
    if numerator < 0 || numerator % 2 != 0 {
        return Err(Error::Inconsistency(format!(
            "{what}: numerator {numerator} is not a non-negative even number"
        )));
    }
    Ok((numerator / 2) as u64)
}

/// Recovers the `P2` preimage of a `P1` partition, or `None` when `mu < 0`.
///
/// The candidate preimage is pushed back through [`forward_map`] and compared with
/// the input; a mismatch is reported as [`Error::Inconsistency`].
pub fn inverse_map(p1: &Partition) -> Result<Option<(Partition, MappingTrace)>> {
    let trace = inverse_trace(p1)?;
    if trace.mu < 0 {
        return Ok(None);
    }
    let ctx = *p1.context();
    let (y, l) = (ctx.y(), ctx.l());
    let (h, hh) = half_bounds(l);
    let ones = |k| p1.freq(1, k);
    let mids = |k| p1.freq(y + 2, k);
    let evens = |k| p1.freq(2 * y, k);

    let mut pre = BTreeMap::new();
    for k in 1..=l {
        let tops = if k <= h {
            2 * evens(2 * k) + mids(k) % 2
        } else {
            mids(k)
        };
        pre.insert(PartIndex::new(2 * y + 1, k), tops);

        let ys = if k <= hh {
            2 * evens(2 * k - 1) + ones(k) % 2
        } else {
            ones(k)
        };
        pre.insert(PartIndex::new(y, k), ys);

        let twos = if k % 2 == 0 {
            let j = k / 2;
            (mids(j) - mids(j) % 2) / 2
        } else if k > 1 {
            let j = k.div_ceil(2);
            (ones(j) - ones(j) % 2) / 2
        } else {
            halve(trace.mu, "nu(2_1)")?
        };
        pre.insert(PartIndex::new(2, k), twos);
    }
    let pre = Partition::from_map_unchecked(PartContext::p2(y, l)?, pre);
    let (back, _) = forward_map(&pre)?;
    if &back != p1 {
        return Err(Error::Inconsistency(format!(
            "inverse of {p1} gave {pre}, which maps forward to {back}"
        )));
    }
    Ok(Some((pre, trace)))
}

/// Relabels `(y+2)_k` as `x_k` and moves the lost weight `(y + 2 - x)` per part
/// onto `1_1`.
pub fn x_shift_map(p1: &Partition, x: u64) -> Result<Partition> {
    require_class(p1, PartClass::P1)?;
    let ctx = *p1.context();
    let y = ctx.y();
    if x <= 1 || x > y + 2 {
        return Err(Error::OutOfRange(format!(
            "x = {x} must satisfy 1 < x <= y + 2 = {}",
            y + 2
        )));
    }
    let target = PartContext::p1_prime(y, ctx.l(), x)?;
    let mut moved = 0;
    let mut freq = BTreeMap::new();
    for (part, f) in p1.freq_map() {
        let key = if part.residue == y + 2 {
            moved += f;
            PartIndex::new(x, part.block)
        } else {
            *part
        };
        *freq.entry(key).or_insert(0) += f;
    }
    *freq.entry(PartIndex::new(1, 1)).or_insert(0) += (y + 2 - x) * moved;
    Ok(Partition::from_map_unchecked(target, freq))
}

/// Undoes [`x_shift_map`]; `None` when the partition is not in its image.
pub fn x_shift_inverse(p1x: &Partition) -> Result<Option<Partition>> {
    let ctx = *p1x.context();
    let PartClass::P1Prime(x) = ctx.class() else {
        return Err(Error::ClassMismatch {
            expected: "P1'".into(),
            found: ctx.class().to_string(),
        });
    };
    let y = ctx.y();
    let shifted: u64 = (1..=ctx.l()).map(|b| p1x.freq(x, b)).sum();
    let Some(ones) = p1x.freq(1, 1).checked_sub((y + 2 - x) * shifted) else {
        return Ok(None);
    };
    let mut freq = BTreeMap::new();
    for (part, f) in p1x.freq_map() {
        let key = if part.residue == x {
            PartIndex::new(y + 2, part.block)
        } else {
            *part
        };
        *freq.entry(key).or_insert(0) += f;
    }
    freq.insert(PartIndex::new(1, 1), ones);
    Ok(Some(Partition::from_map_unchecked(
        PartContext::p1(y, ctx.l())?,
        freq,
    )))
}

/// `pi_2 -> pi_1 -> pi_1'`.
pub fn composed_map(p2: &Partition, x: u64) -> Result<Partition> {
    let (p1, _) = forward_map(p2)?;
    x_shift_map(&p1, x)
}
