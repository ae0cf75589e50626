//! Partitions in indexed-part notation.
//!
//! With modulus `M = 2y + 2`, the indexed part `s_t` stands for the integer
//! `s + (t - 1) M`. A partition stores the frequency of each `s_t`; absent keys
//! have frequency zero. Partitions are immutable values.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::ProductSpec;

/// `s + (t - 1)(2y + 2)`.
pub fn part_value(s: u64, t: u64, y: u64) -> u64 {
    s + (t - 1) * (2 * y + 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartClass {
    /// Parts congruent to `1, y+2, 2y` mod `2y+2`.
    P1,
    /// Parts congruent to `2, y, 2y+1` mod `2y+2`.
    P2,
    /// Parts congruent to `1, x, 2y` mod `2y+2`, with `1 < x <= y+2`.
    P1Prime(u64),
}

impl fmt::Display for PartClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartClass::P1 => write!(f, "P1"),
            PartClass::P2 => write!(f, "P2"),
            PartClass::P1Prime(x) => write!(f, "P1'(x={x})"),
        }
    }
}

/// The parameters `(y, L)` together with a partition class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PartContext {
    y: u64,
    l: u64,
    class: PartClass,
}

impl PartContext {
    pub fn new(y: u64, l: u64, class: PartClass) -> Result<Self> {
        if y < 2 {
            return Err(Error::InvalidContext(format!("y = {y} must exceed 1")));
        }
        if l == 0 {
            return Err(Error::InvalidContext("L must be positive".into()));
        }
        if let PartClass::P1Prime(x) = class {
            if x <= 1 || x > y + 2 {
                return Err(Error::InvalidContext(format!(
                    "x = {x} must satisfy 1 < x <= y + 2 = {}",
                    y + 2
                )));
            }
        }
        Ok(Self { y, l, class })
    }

    pub fn p1(y: u64, l: u64) -> Result<Self> {
        Self::new(y, l, PartClass::P1)
    }

    pub fn p2(y: u64, l: u64) -> Result<Self> {
        Self::new(y, l, PartClass::P2)
    }

    pub fn p1_prime(y: u64, l: u64, x: u64) -> Result<Self> {
        Self::new(y, l, PartClass::P1Prime(x))
    }

    pub fn y(&self) -> u64 {
        self.y
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn class(&self) -> PartClass {
        self.class
    }

    pub fn modulus(&self) -> u64 {
        2 * self.y + 2
    }

    /// Residues in ascending order.
    pub fn residues(&self) -> [u64; 3] {
        let y = self.y;
        let mut r = match self.class {
            PartClass::P1 => [1, y + 2, 2 * y],
            PartClass::P2 => [2, y, 2 * y + 1],
            PartClass::P1Prime(x) => [1, x, 2 * y],
        };
        r.sort_unstable();
        r
    }

    pub fn has_residue(&self, s: u64) -> bool {
        self.residues().contains(&s)
    }

    pub fn max_part(&self) -> u64 {
        let top = self.modulus() * self.l;
        match self.class {
            PartClass::P2 => top - 1,
            PartClass::P1 | PartClass::P1Prime(_) => top - 2,
        }
    }

    /// All allowed indexed parts, ascending by value.
    pub fn parts(&self) -> Vec<PartIndex> {
        let residues = self.residues();
        (1..=self.l)
            .flat_map(|t| residues.iter().map(move |&s| PartIndex::new(s, t)))
            .collect()
    }

    pub fn value(&self, part: PartIndex) -> u64 {
        part_value(part.residue, part.block, self.y)
    }

    /// Splits a plain part value into its indexed form, if it is allowed here.
    pub fn index_of(&self, value: u64) -> Option<PartIndex> {
        if value == 0 {
            return None;
        }
        let m = self.modulus();
        let (s, t) = ((value - 1) % m + 1, (value - 1) / m + 1);
        (t <= self.l && self.has_residue(s)).then_some(PartIndex::new(s, t))
    }

    pub fn product_spec(&self) -> ProductSpec {
        ProductSpec::new(self.residues().to_vec(), self.modulus(), self.l)
            .expect("context residues are positive")
    }
}

/// An indexed part `s_t`. Ordering follows the integer value the part denotes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartIndex {
    // field order matters for the derived Ord: residue < modulus, so (block, residue)
    // sorts by value
    pub block: u64,
    pub residue: u64,
}

impl PartIndex {
    pub fn new(residue: u64, block: u64) -> Self {
        Self { block, residue }
    }
}

impl fmt::Display for PartIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.residue, self.block)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    ctx: PartContext,
    freq: BTreeMap<PartIndex, u64>,
}

impl Partition {
    pub fn empty(ctx: PartContext) -> Self {
        Self {
            ctx,
            freq: BTreeMap::new(),
        }
    }

    /// Builds a partition from `((s, t), frequency)` entries. Zero frequencies are
    /// dropped and repeated keys are summed.
    pub fn new<I>(ctx: PartContext, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((u64, u64), u64)>,
    {
        let mut freq = BTreeMap::new();
        for ((s, t), f) in entries {
            if !ctx.has_residue(s) {
                return Err(Error::InvalidPartition(format!(
                    "residue {s} is not allowed in class {} with y = {}",
                    ctx.class, ctx.y
                )));
            }
            if t == 0 || t > ctx.l {
                return Err(Error::InvalidPartition(format!(
                    "block {t} is outside 1..={}",
                    ctx.l
                )));
            }
            if f > 0 {
                *freq.entry(PartIndex::new(s, t)).or_insert(0) += f;
            }
        }
        Ok(Self { ctx, freq })
    }

    /// Builds a partition from plain part values, e.g. `[7, 2]`.
    pub fn from_values(ctx: PartContext, values: &[u64]) -> Result<Self> {
        let mut freq = BTreeMap::new();
        for &v in values {
            let idx = ctx.index_of(v).ok_or_else(|| {
                Error::InvalidPartition(format!("part {v} is not allowed in class {}", ctx.class))
            })?;
            *freq.entry(idx).or_insert(0) += 1;
        }
        Ok(Self { ctx, freq })
    }

    pub(crate) fn from_map_unchecked(ctx: PartContext, mut freq: BTreeMap<PartIndex, u64>) -> Self {
        freq.retain(|_, f| *f > 0);
        debug_assert!(freq
            .keys()
            .all(|k| ctx.has_residue(k.residue) && (1..=ctx.l).contains(&k.block)));
        Self { ctx, freq }
    }

    /// Parses the canonical text form, e.g. `<1_1^5,1_2>`. A missing block index
    /// or exponent defaults to 1; whitespace is ignored.
    pub fn parse(ctx: PartContext, input: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = input
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '\u{27e8}' => '<',
                '\u{27e9}' => '>',
                c => c,
            })
            .collect();
        let body = compact
            .strip_prefix('<')
            .and_then(|s| s.strip_suffix('>'))
            .ok_or_else(|| err("expected the form <s_t^f,...>"))?;
        let mut entries = Vec::new();
        if !body.is_empty() {
            for item in body.split(',') {
                let (base, f) = match item.split_once('^') {
                    Some((b, f)) => (b, parse_num(f).ok_or_else(|| err("bad exponent"))?),
                    None => (item, 1),
                };
                if f == 0 {
                    return Err(err("exponents must be positive"));
                }
                let (s, t) = match base.split_once('_') {
                    Some((s, t)) => (
                        parse_num(s).ok_or_else(|| err("bad residue"))?,
                        parse_num(t).ok_or_else(|| err("bad block index"))?,
                    ),
                    None => (parse_num(base).ok_or_else(|| err("bad part"))?, 1),
                };
                entries.push(((s, t), f));
            }
        }
        Self::new(ctx, entries)
    }

    pub fn context(&self) -> &PartContext {
        &self.ctx
    }

    /// `nu(s_t)`.
    pub fn freq(&self, s: u64, t: u64) -> u64 {
        self.freq.get(&PartIndex::new(s, t)).copied().unwrap_or(0)
    }

    /// Present parts with their frequencies, ascending by value.
    pub fn iter(&self) -> impl Iterator<Item = (PartIndex, u64)> + '_ {
        self.freq.iter().map(|(&k, &f)| (k, f))
    }

    pub fn is_empty(&self) -> bool {
        self.freq.is_empty()
    }

    pub fn norm(&self) -> u64 {
        self.iter().map(|(k, f)| self.ctx.value(k) * f).sum()
    }

    /// Total number of parts counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.freq.values().sum()
    }

    /// Plain part values in descending order.
    pub fn values_desc(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.len() as usize);
        for (k, f) in self.freq.iter().rev() {
            let v = self.ctx.value(*k);
            out.extend(std::iter::repeat_n(v, *f as usize));
        }
        out
    }

    pub(crate) fn freq_map(&self) -> &BTreeMap<PartIndex, u64> {
        &self.freq
    }
}

fn parse_num(s: &str) -> Option<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, (k, n)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
            if n > 1 {
                write!(f, "^{n}")?;
            }
        }
        write!(f, ">")
    }
}

/// Every partition of `n` in the class of `ctx`, ordered lexicographically
/// descending on the descending list of part values.
pub fn enumerate(ctx: &PartContext, n: u64) -> Vec<Partition> {
    let mut parts: Vec<(PartIndex, u64)> = ctx
        .parts()
        .into_iter()
        .map(|p| (p, ctx.value(p)))
        .filter(|&(_, v)| v <= n)
        .collect();
    parts.reverse();
    let mut out = Vec::new();
    let mut current = BTreeMap::new();
    descend(ctx, &parts, 0, n, &mut current, &mut out);
    out
}

fn descend(
    ctx: &PartContext,
    parts: &[(PartIndex, u64)],
    idx: usize,
    remaining: u64,
    current: &mut BTreeMap<PartIndex, u64>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            ctx: *ctx,
            freq: current.clone(),
        });
        return;
    }
    let Some(&(part, value)) = parts.get(idx) else {
        return;
    };
    for f in (0..=remaining / value).rev() {
        if f > 0 {
            current.insert(part, f);
        } else {
            current.remove(&part);
        }
        descend(ctx, parts, idx + 1, remaining - f * value, current, out);
    }
    current.remove(&part);
}

/// Number of partitions of `n` into parts from a strictly increasing list, each
/// part usable any number of times.
pub fn count_from_sequence(parts: &[u64], n: u64) -> Result<BigUint> {
    if let Some(&p) = parts.iter().find(|&&p| p == 0) {
        return Err(Error::OutOfRange(format!("part {p} is not positive")));
    }
    if parts.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::OutOfRange(
            "part list must be strictly increasing".into(),
        ));
    }
    let usable: Vec<u64> = parts.iter().copied().filter(|&p| p <= n).collect();
    let mut memo = HashMap::new();
    Ok(count_using(&usable, usable.len(), n, &mut memo))
}

// partitions of `n` using only the first `k` parts
fn count_using(
    parts: &[u64],
    k: usize,
    n: u64,
    memo: &mut HashMap<(usize, u64), BigUint>,
) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    if k == 0 {
        return BigUint::zero();
    }
    if let Some(c) = memo.get(&(k, n)) {
        return c.clone();
    }
    let p = parts[k - 1];
    let mut total = BigUint::zero();
    let mut rest = n;
    loop {
        total += count_using(parts, k - 1, rest, memo);
        if rest < p {
            break;
        }
        rest -= p;
    }
    memo.insert((k, n), total.clone());
    total
}
