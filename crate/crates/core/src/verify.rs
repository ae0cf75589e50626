//! Theorem checks, strictness witnesses and parameter scans.
//!
//! Positivity is only ever checked up to a caller-supplied degree `N`; every
//! report carries that bound.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::injection::mu;
use crate::partition::{count_from_sequence, PartContext, Partition};
use crate::series::{expand_product, expand_reciprocal, ProductSpec, TruncatedSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subject {
    ThmBg,
    ThmAndrewsMod8,
    ThmMain,
    ThmXshift,
    ThmAndrews1971,
    Conj1,
    Proposal1,
    Borwein,
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subject::ThmBg => "THM_BG",
            Subject::ThmAndrewsMod8 => "THM_ANDREWS_MOD8",
            Subject::ThmMain => "THM_MAIN",
            Subject::ThmXshift => "THM_XSHIFT",
            Subject::ThmAndrews1971 => "THM_ANDREWS_1971",
            Subject::Conj1 => "CONJ_1",
            Subject::Proposal1 => "PROPOSAL_1",
            Subject::Borwein => "BORWEIN",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReportStatus {
    Confirmed,
    Counterexample,
    Mixed,
}

impl fmt::Display for ReportStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportStatus::Confirmed => "CONFIRMED",
            ReportStatus::Counterexample => "COUNTEREXAMPLE",
            ReportStatus::Mixed => "MIXED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Finding {
    /// A negative coefficient.
    Negative {
        n: u64,
        value: BigInt,
    },
    /// A vanishing coefficient outside the predicted zero set.
    UnexpectedZero {
        n: u64,
    },
    /// A predicted zero that is not one.
    MissingZero {
        n: u64,
        value: BigInt,
    },
    /// A coefficient whose sign disagrees with the predicted sign pattern.
    SignViolation {
        n: u64,
        value: BigInt,
    },
    /// `rho(T; n) < rho(S; n)`.
    Domination {
        n: u64,
        dominant: BigUint,
        dominated: BigUint,
    },
    Witness(Witness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub subject: Subject,
    /// Named parameters in a fixed order.
    pub parameters: Vec<(String, String)>,
    pub max_degree: u64,
    pub status: ReportStatus,
    /// Whether the outcome is the one the statement predicts. A counterexample can
    /// be expected, e.g. when the divisibility condition of the BG theorem fails.
    pub as_expected: bool,
    /// Observed zero set on `[1, N]`, for subjects that predict one.
    pub zero_set: Option<Vec<u64>>,
    pub findings: Vec<Finding>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn new(subject: Subject, parameters: &[(&str, u64)], max_degree: u64) -> Self {
        Self {
            subject,
            parameters: parameters
                .iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
            max_degree,
            status: ReportStatus::Confirmed,
            as_expected: true,
            zero_set: None,
            findings: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn parameter(&self, key: &str) -> Option<&str> {
        self.parameters
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn negatives(&self) -> impl Iterator<Item = (u64, &BigInt)> + '_ {
        self.findings.iter().filter_map(|f| match f {
            Finding::Negative { n, value } => Some((*n, value)),
            _ => None,
        })
    }
}

/// Which strictness construction produced a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WitnessCase {
    S1a,
    S1b,
    S1c,
    S1d,
    S1e,
    S1f,
    Case2,
    Case3,
}

impl WitnessCase {
    pub const ALL: [WitnessCase; 8] = [
        WitnessCase::S1a,
        WitnessCase::S1b,
        WitnessCase::S1c,
        WitnessCase::S1d,
        WitnessCase::S1e,
        WitnessCase::S1f,
        WitnessCase::Case2,
        WitnessCase::Case3,
    ];
}

impl fmt::Display for WitnessCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessCase::S1a => "S1A",
            WitnessCase::S1b => "S1B",
            WitnessCase::S1c => "S1C",
            WitnessCase::S1d => "S1D",
            WitnessCase::S1e => "S1E",
            WitnessCase::S1f => "S1F",
            WitnessCase::Case2 => "CASE2",
            WitnessCase::Case3 => "CASE3",
        })
    }
}

/// A `P1` partition of norm `n` outside the image of the injection, which shows
/// `a(L, y, n) > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub partition: Partition,
    pub mu_value: i64,
    pub subcase: WitnessCase,
    /// Number of `1_1` parts.
    pub ones: u64,
    /// Number of `(2y)_1` parts.
    pub evens: u64,
}

impl Witness {
    /// The value of `mu` the construction predicts in closed form.
    pub fn predicted_mu(&self) -> i64 {
        let ctx = self.partition.context();
        predicted_mu(self.subcase, ctx.y(), ctx.l(), self.ones)
    }
}

/// Closed-form `mu` of the witness shape for `subcase` with `ones` parts `1_1`.
pub fn predicted_mu(subcase: WitnessCase, y: u64, l: u64, ones: u64) -> i64 {
    let (y, b) = (y as i64, ones as i64);
    match subcase {
        WitnessCase::S1a => b - (2 * y - 1),
        WitnessCase::S1b | WitnessCase::S1c => -y - 1,
        WitnessCase::S1d => b - (y - 1),
        WitnessCase::S1e => b - y,
        WitnessCase::S1f if l > 1 => -4,
        WitnessCase::S1f => -2 * y - 2,
        WitnessCase::Case2 => -2,
        WitnessCase::Case3 => -6,
    }
}

/// `expand_reciprocal(a) - expand_reciprocal(b)` to degree `max_degree`.
pub fn diff_coefficients(a: &ProductSpec, b: &ProductSpec, max_degree: usize) -> TruncatedSeries {
    expand_reciprocal(a, max_degree)
        .sub(&expand_reciprocal(b, max_degree))
        .expect("both expansions share the degree")
}

fn require_odd_y(y: u64) -> Result<()> {
    if y < 3 || y.is_multiple_of(2) {
        return Err(Error::OutOfRange(format!(
            "y = {y} must be odd and greater than 1 (use the proposal scan for even y)"
        )));
    }
    Ok(())
}

fn require_positive(name: &str, v: u64) -> Result<()> {
    if v == 0 {
        return Err(Error::OutOfRange(format!("{name} must be positive")));
    }
    Ok(())
}

fn degree(n: u64) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::OutOfRange(format!("degree {n} is too large")))
}

/// Coefficients `a(L, y, n)` of the `P1` minus `P2` product difference. `y` may be
/// odd or even.
pub fn main_difference(l: u64, y: u64, max_degree: u64) -> Result<TruncatedSeries> {
    let p1 = PartContext::p1(y, l)?.product_spec();
    let p2 = PartContext::p2(y, l)?.product_spec();
    Ok(diff_coefficients(&p1, &p2, degree(max_degree)?))
}

/// The predicted zero set of `a(L, y, .)`, for odd `y`.
pub fn main_zero_set(l: u64, y: u64) -> BTreeSet<u64> {
    let mut zeros: BTreeSet<u64> = (2..=y + 1).step_by(2).collect();
    zeros.insert(y);
    if (l, y) == (1, 3) {
        zeros.insert(9);
    }
    zeros
}

/// The predicted zero set of `a(L, y, ., x)`.
pub fn xshift_zero_set(l: u64, y: u64, x: u64) -> BTreeSet<u64> {
    let mut zeros: BTreeSet<u64> = (2..x).step_by(2).collect();
    if y < x {
        zeros.insert(y);
    }
    if (l, y, x) == (1, 3, 5) {
        zeros.insert(9);
    }
    zeros
}

fn check_zero_set(
    report: &mut VerificationReport,
    diff: &TruncatedSeries,
    expected: &BTreeSet<u64>,
) {
    let n_max = diff.max_degree();
    let mut observed = Vec::new();
    for n in 1..=n_max {
        let c = diff.coeff(n);
        let key = n as u64;
        if c.is_negative() {
            report.findings.push(Finding::Negative {
                n: key,
                value: c.clone(),
            });
        }
        if c.is_zero() {
            observed.push(key);
            if !expected.contains(&key) {
                report.findings.push(Finding::UnexpectedZero { n: key });
            }
        } else if expected.contains(&key) {
            report.findings.push(Finding::MissingZero {
                n: key,
                value: c.clone(),
            });
        }
    }
    report.zero_set = Some(observed);
    if !report.findings.is_empty() {
        report.status = ReportStatus::Counterexample;
        report.as_expected = false;
    }
}

/// Non-negativity of `a(L, y, n)` for `n <= N` and its exact zero set.
pub fn verify_main_theorem(l: u64, y: u64, max_degree: u64) -> Result<VerificationReport> {
    require_positive("L", l)?;
    require_odd_y(y)?;
    let diff = main_difference(l, y, max_degree)?;
    let mut report = VerificationReport::new(Subject::ThmMain, &[("L", l), ("y", y)], max_degree);
    check_zero_set(&mut report, &diff, &main_zero_set(l, y));
    Ok(report)
}

/// Non-negativity of `a(L, y, n, x)` for `n <= N` and its exact zero set.
pub fn verify_xshift_theorem(
    l: u64,
    y: u64,
    x: u64,
    max_degree: u64,
) -> Result<VerificationReport> {
    require_positive("L", l)?;
    require_odd_y(y)?;
    let p1x = PartContext::p1_prime(y, l, x)
        .map_err(|_| Error::OutOfRange(format!("x = {x} must satisfy 1 < x <= y + 2")))?;
    let p2 = PartContext::p2(y, l)?;
    let diff = diff_coefficients(&p1x.product_spec(), &p2.product_spec(), degree(max_degree)?);
    let mut report = VerificationReport::new(
        Subject::ThmXshift,
        &[("L", l), ("y", y), ("x", x)],
        max_degree,
    );
    check_zero_set(&mut report, &diff, &xshift_zero_set(l, y, x));
    Ok(report)
}

struct Shape {
    case: WitnessCase,
    applies: bool,
    /// Fixed parts `((s, t), f)` besides the free `1_1^b` and `(2y)_1^m`.
    fixed: Vec<((u64, u64), u64)>,
    ones_ok: Box<dyn Fn(u64) -> bool>,
}

fn shapes(l: u64, y: u64) -> Vec<Shape> {
    let mid = y + 2;
    let odd = |b: u64| b % 2 == 1;
    vec![
        Shape {
            case: WitnessCase::S1a,
            applies: true,
            fixed: vec![((mid, 1), 1)],
            ones_ok: Box::new(move |b| odd(b) && b < 2 * y - 1),
        },
        Shape {
            case: WitnessCase::S1b,
            applies: l == 1,
            fixed: vec![((mid, 1), 2)],
            ones_ok: Box::new(move |b| b + 3 == y),
        },
        Shape {
            case: WitnessCase::S1c,
            applies: l > 1,
            fixed: vec![((1, 2), 1)],
            ones_ok: Box::new(move |b| b + 2 == y),
        },
        Shape {
            case: WitnessCase::S1d,
            applies: true,
            fixed: vec![((mid, 1), 1)],
            ones_ok: Box::new(move |b| !odd(b) && b + 1 < y),
        },
        Shape {
            case: WitnessCase::S1e,
            applies: true,
            fixed: vec![],
            ones_ok: Box::new(move |b| odd(b) && b < y),
        },
        Shape {
            case: WitnessCase::S1f,
            applies: y > 3,
            fixed: vec![((mid, 1), 2)],
            ones_ok: Box::new(move |b| b + 4 == y),
        },
        Shape {
            case: WitnessCase::Case2,
            applies: y == 3 && l > 1,
            fixed: vec![((1, 2), 1)],
            ones_ok: Box::new(|b| b == 0),
        },
        Shape {
            case: WitnessCase::Case3,
            applies: y == 3 && l == 1,
            fixed: vec![((5, 1), 3)],
            ones_ok: Box::new(|b| b == 0),
        },
    ]
}

/// Builds a `P1` partition of norm `n` with negative `mu`.
///
/// Shapes are tried in subcase order; for each, the number `m` of `(2y)_1` parts is
/// the smallest that leaves an admissible count of `1_1` parts.
pub fn build_witness(l: u64, y: u64, n: u64) -> Result<Witness> {
    require_positive("L", l)?;
    require_odd_y(y)?;
    if n == 0 || main_zero_set(l, y).contains(&n) {
        return Err(Error::NoWitness { n });
    }
    let ctx = PartContext::p1(y, l)?;
    let step = 2 * y;
    for shape in shapes(l, y).into_iter().filter(|s| s.applies) {
        let fixed: u64 = shape
            .fixed
            .iter()
            .map(|&((s, t), f)| crate::partition::part_value(s, t, y) * f)
            .sum();
        let mut m = 0;
        while fixed + step * m <= n {
            let ones = n - fixed - step * m;
            if (shape.ones_ok)(ones) {
                let mut entries = shape.fixed.clone();
                entries.push(((1, 1), ones));
                entries.push(((step, 1), m));
                let partition = Partition::new(ctx, entries)?;
                let mu_value = mu(&partition)?;
                return Ok(Witness {
                    partition,
                    mu_value,
                    subcase: shape.case,
                    ones,
                    evens: m,
                });
            }
            m += 1;
        }
    }
    Err(Error::Inconsistency(format!(
        "no witness shape fits (L, y, n) = ({l}, {y}, {n})"
    )))
}

fn scan_nonnegative(report: &mut VerificationReport, diff: &TruncatedSeries) {
    for (n, c) in diff.negatives() {
        report.findings.push(Finding::Negative {
            n: n as u64,
            value: c.clone(),
        });
    }
}

/// `1/(q, q^{m-1}; q^m)_L - 1/(q^r, q^{m-r}; q^m)_L`, whose coefficients are all
/// non-negative iff `r` and `m - r` do not divide each other.
pub fn verify_bg_theorem(l: u64, m: u64, r: u64, max_degree: u64) -> Result<VerificationReport> {
    require_positive("L", l)?;
    if !(r > 1 && r + 1 < m) {
        return Err(Error::OutOfRange(format!(
            "need 1 < r < m - 1, got m = {m}, r = {r}"
        )));
    }
    let a = ProductSpec::new(vec![1, m - 1], m, l)?;
    let b = ProductSpec::new(vec![r, m - r], m, l)?;
    let diff = diff_coefficients(&a, &b, degree(max_degree)?);
    let mut report =
        VerificationReport::new(Subject::ThmBg, &[("L", l), ("m", m), ("r", r)], max_degree);
    let expect_nonneg = !(m - r).is_multiple_of(r) && !r.is_multiple_of(m - r);
    if expect_nonneg {
        scan_nonnegative(&mut report, &diff);
        if !report.findings.is_empty() {
            report.status = ReportStatus::Counterexample;
            report.as_expected = false;
        }
    } else {
        report
            .notes
            .push("divisibility condition fails: a negative coefficient is expected".into());
        match diff.negatives().next() {
            Some((n, c)) => {
                report.status = ReportStatus::Counterexample;
                report.findings.push(Finding::Negative {
                    n: n as u64,
                    value: c.clone(),
                });
            }
            None => {
                report.status = ReportStatus::Mixed;
                report.as_expected = false;
                report
                    .notes
                    .push(format!("no negative coefficient found up to {max_degree}"));
            }
        }
    }
    Ok(report)
}

/// `1/(q, q^5, q^6; q^8)_L - 1/(q^2, q^3, q^7; q^8)_L` has non-negative coefficients.
pub fn verify_andrews_mod8(l: u64, max_degree: u64) -> Result<VerificationReport> {
    require_positive("L", l)?;
    let a = ProductSpec::new(vec![1, 5, 6], 8, l)?;
    let b = ProductSpec::new(vec![2, 3, 7], 8, l)?;
    let diff = diff_coefficients(&a, &b, degree(max_degree)?);
    let mut report = VerificationReport::new(Subject::ThmAndrewsMod8, &[("L", l)], max_degree);
    scan_nonnegative(&mut report, &diff);
    if !report.findings.is_empty() {
        report.status = ReportStatus::Counterexample;
        report.as_expected = false;
    }
    Ok(report)
}

fn join(parts: &[u64]) -> String {
    parts
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// `rho(T; n) >= rho(S; n)` for `n <= N`, where `T` starts at 1 and is pointwise at
/// most `S`.
///
/// The lists stand for their sequences; only parts up to `N` matter, so an `S` that
/// outruns `T` is accepted as long as its extra parts exceed `N`.
pub fn verify_andrews_1971(
    s_parts: &[u64],
    t_parts: &[u64],
    max_degree: u64,
) -> Result<VerificationReport> {
    for (name, seq) in [("S", s_parts), ("T", t_parts)] {
        if seq.first() == Some(&0) || seq.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Hypothesis(format!(
                "{name} must be a strictly increasing list of positive integers"
            )));
        }
    }
    if t_parts.first() != Some(&1) {
        return Err(Error::Hypothesis("T must start with 1".into()));
    }
    for (i, &a) in s_parts.iter().enumerate() {
        match t_parts.get(i) {
            Some(&b) if a < b => {
                return Err(Error::Hypothesis(format!(
                    "S[{i}] = {a} is smaller than T[{i}] = {b}"
                )))
            }
            None if a <= max_degree => {
                return Err(Error::Hypothesis(format!(
                    "T has no element to match S[{i}] = {a}"
                )))
            }
            _ => {}
        }
    }
    let mut report = VerificationReport::new(Subject::ThmAndrews1971, &[], max_degree);
    report.parameters = vec![("S".into(), join(s_parts)), ("T".into(), join(t_parts))];
    for n in 0..=max_degree {
        let dominant = count_from_sequence(t_parts, n)?;
        let dominated = count_from_sequence(s_parts, n)?;
        if dominant < dominated {
            report.findings.push(Finding::Domination {
                n,
                dominant,
                dominated,
            });
            report.status = ReportStatus::Counterexample;
            report.as_expected = false;
            break;
        }
    }
    Ok(report)
}

/// One admissible parameter tuple of the three-residue conjecture.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConjectureParams {
    pub l: u64,
    pub z: u64,
    pub y: u64,
    pub x: u64,
    pub m: u64,
}

impl ConjectureParams {
    pub fn new(l: u64, z: u64, y: u64, x: u64, m: u64) -> Result<Self> {
        require_positive("L", l)?;
        if z < 2 {
            return Err(Error::OutOfRange(format!("z = {z} must exceed 1")));
        }
        if y <= z {
            return Err(Error::OutOfRange(format!("y = {y} must exceed z = {z}")));
        }
        if x <= y || x > y + z {
            return Err(Error::OutOfRange(format!(
                "x = {x} must satisfy y < x <= y + z = {}",
                y + z
            )));
        }
        if m < y * z + 2 {
            return Err(Error::OutOfRange(format!(
                "m = {m} must be at least yz + 2 = {}",
                y * z + 2
            )));
        }
        Ok(Self { l, z, y, x, m })
    }

    pub fn z_divides_y(&self) -> bool {
        self.y.is_multiple_of(self.z)
    }

    pub fn specs(&self) -> (ProductSpec, ProductSpec) {
        let yz = self.y * self.z;
        let a = ProductSpec::new(vec![1, self.x, yz], self.m, self.l).expect("positive residues");
        let b = ProductSpec::new(vec![self.z, self.y, yz + 1], self.m, self.l)
            .expect("positive residues");
        (a, b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XRule {
    Fixed(u64),
    /// Every `x` with `y < x <= y + z`.
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MRule {
    Fixed(u64),
    /// `m = yz + 2`.
    Minimal,
}

/// Scans one conjecture tuple.
///
/// When `z | y` the finitely-many-negatives claim is judged by a heuristic: the
/// negatives are taken as settled if none lies in `(N/2, N]`.
pub fn conjecture_report(params: ConjectureParams, max_degree: u64) -> Result<VerificationReport> {
    let (a, b) = params.specs();
    let diff = diff_coefficients(&a, &b, degree(max_degree)?);
    let ConjectureParams { l, z, y, x, m } = params;
    let mut report = VerificationReport::new(
        Subject::Conj1,
        &[("L", l), ("z", z), ("y", y), ("x", x), ("m", m)],
        max_degree,
    );
    scan_nonnegative(&mut report, &diff);
    let last = report.negatives().map(|(n, _)| n).max();
    if !params.z_divides_y() {
        if last.is_some() {
            report.status = ReportStatus::Counterexample;
            report.as_expected = false;
        }
        return Ok(report);
    }
    report
        .notes
        .push("z divides y: finitely many negative coefficients expected".into());
    match last {
        None => {
            report.status = ReportStatus::Mixed;
            report.as_expected = false;
            report
                .notes
                .push(format!("no negative coefficient up to {max_degree}"));
        }
        Some(n) if 2 * n > max_degree => {
            report.status = ReportStatus::Mixed;
            report.as_expected = false;
            report.notes.push(format!(
                "heuristic: negatives persist into (N/2, N], last at n = {n}"
            ));
        }
        Some(n) => {
            report.status = ReportStatus::Counterexample;
            report.notes.push(format!(
                "heuristic: no negative coefficient in (N/2, N], last at n = {n}"
            ));
        }
    }
    Ok(report)
}

/// All admissible tuples of the given ranges, ordered by `(L, z, y, x, m)`.
///
/// Tuples with `y <= z` are skipped; a fixed `x` or `m` that is inadmissible for
/// some remaining tuple is an error.
pub fn conjecture_tuples(
    l_range: RangeInclusive<u64>,
    y_range: RangeInclusive<u64>,
    x_rule: XRule,
    z_range: RangeInclusive<u64>,
    m_rule: MRule,
) -> Result<Vec<ConjectureParams>> {
    let mut out = Vec::new();
    for l in l_range {
        for z in z_range.clone() {
            for y in y_range.clone().filter(|&y| y > z) {
                let xs: Vec<u64> = match x_rule {
                    XRule::Fixed(x) => vec![x],
                    XRule::All => (y + 1..=y + z).collect(),
                };
                for x in xs {
                    let m = match m_rule {
                        MRule::Fixed(m) => m,
                        MRule::Minimal => y * z + 2,
                    };
                    out.push(ConjectureParams::new(l, z, y, x, m)?);
                }
            }
        }
    }
    Ok(out)
}

/// Evaluates every tuple, in parallel on the current rayon pool, returning the
/// reports in tuple order.
pub fn conjecture_scan(
    l_range: RangeInclusive<u64>,
    y_range: RangeInclusive<u64>,
    x_rule: XRule,
    z_range: RangeInclusive<u64>,
    m_rule: MRule,
    max_degree: u64,
) -> Result<Vec<VerificationReport>> {
    let tuples = conjecture_tuples(l_range, y_range, x_rule, z_range, m_rule)?;
    tuples
        .into_par_iter()
        .map(|p| conjecture_report(p, max_degree))
        .collect()
}

/// For even `y > 2`: the only negative coefficient of the `P1 - P2` difference on
/// `[1, N]` is `a(L, y, y) = -1`. Reported as `MIXED` when `N < y`.
pub fn proposal_scan(l: u64, y: u64, max_degree: u64) -> Result<VerificationReport> {
    require_positive("L", l)?;
    if y <= 2 || y % 2 == 1 {
        return Err(Error::OutOfRange(format!(
            "y = {y} must be even and greater than 2 (use the main theorem check for odd y)"
        )));
    }
    let diff = main_difference(l, y, max_degree)?;
    let mut report = VerificationReport::new(Subject::Proposal1, &[("L", l), ("y", y)], max_degree);
    scan_nonnegative(&mut report, &diff);
    let expected = [(y, BigInt::from(-1))];
    let seen: Vec<(u64, BigInt)> = report.negatives().map(|(n, c)| (n, c.clone())).collect();
    if max_degree < y {
        report.status = ReportStatus::Mixed;
        report.as_expected = false;
        report
            .notes
            .push(format!("n = y = {y} lies beyond the scanned range"));
        if !seen.is_empty() {
            report.status = ReportStatus::Counterexample;
        }
    } else if seen != expected {
        report.status = ReportStatus::Counterexample;
        report.as_expected = false;
    }
    Ok(report)
}

/// Runs [`proposal_scan`] for every even `y` in `y_range` (odd values are skipped)
/// and every `L`, ordered by `(y, L)`.
pub fn proposal_grid(
    l_range: RangeInclusive<u64>,
    y_range: RangeInclusive<u64>,
    max_degree: u64,
) -> Result<Vec<VerificationReport>> {
    let tuples: Vec<(u64, u64)> = y_range
        .filter(|y| y % 2 == 0)
        .flat_map(|y| l_range.clone().map(move |l| (l, y)))
        .collect();
    tuples
        .into_par_iter()
        .map(|(l, y)| proposal_scan(l, y, max_degree))
        .collect()
}

/// Sign pattern of `(q, q^2; q^3)_L`: non-negative at multiples of 3 and
/// non-positive elsewhere.
pub fn borwein_scan(l: u64, max_degree: u64) -> Result<VerificationReport> {
    require_positive("L", l)?;
    let spec = ProductSpec::new(vec![1, 2], 3, l)?;
    let series = expand_product(&spec, degree(max_degree)?);
    let mut report = VerificationReport::new(Subject::Borwein, &[("L", l)], max_degree);
    for (n, c) in series.coeffs().iter().enumerate() {
        let ok = if n % 3 == 0 {
            !c.is_negative()
        } else {
            !c.is_positive()
        };
        if !ok {
            report.findings.push(Finding::SignViolation {
                n: n as u64,
                value: c.clone(),
            });
        }
    }
    if !report.findings.is_empty() {
        report.status = ReportStatus::Counterexample;
        report.as_expected = false;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeros(r: &VerificationReport) -> Vec<u64> {
        r.zero_set.clone().unwrap()
    }

    #[test]
    fn main_theorem_small() {
        let r = verify_main_theorem(1, 3, 100).unwrap();
        assert_eq!(r.status, ReportStatus::Confirmed);
        assert_eq!(zeros(&r), vec![2, 3, 4, 9]);
        let r = verify_main_theorem(2, 3, 100).unwrap();
        assert_eq!(zeros(&r), vec![2, 3, 4]);
        let r = verify_main_theorem(1, 5, 100).unwrap();
        assert_eq!(r.status, ReportStatus::Confirmed);
        assert_eq!(zeros(&r), vec![2, 4, 5, 6]);
        assert!(verify_main_theorem(1, 4, 100).is_err());
        assert!(verify_main_theorem(0, 3, 100).is_err());
    }

    #[test]
    fn xshift_small() {
        let r = verify_xshift_theorem(1, 3, 5, 100).unwrap();
        assert_eq!(r.status, ReportStatus::Confirmed);
        assert_eq!(zeros(&r), vec![2, 3, 4, 9]);
        assert_eq!(
            zeros(&verify_xshift_theorem(1, 5, 3, 100).unwrap()),
            vec![2]
        );
        assert!(zeros(&verify_xshift_theorem(2, 3, 2, 100).unwrap()).is_empty());
        assert!(verify_xshift_theorem(1, 3, 6, 100).is_err());
        assert!(verify_xshift_theorem(1, 3, 1, 100).is_err());
    }

    #[test]
    fn witness_examples() {
        let w = build_witness(1, 5, 7).unwrap();
        assert_eq!(w.partition.to_string(), "<7_1>");
        assert_eq!((w.mu_value, w.subcase), (-4, WitnessCase::S1d));
        let w = build_witness(1, 3, 15).unwrap();
        assert_eq!(w.partition.to_string(), "<5_1^3>");
        assert_eq!((w.mu_value, w.subcase), (-6, WitnessCase::Case3));
        let w = build_witness(2, 3, 14).unwrap();
        assert_eq!(w.partition.to_string(), "<1_1^3,5_1,6_1>");
        assert_eq!(w.mu_value, -2);
        assert!(matches!(
            build_witness(1, 3, 9),
            Err(Error::NoWitness { n: 9 })
        ));
        assert!(matches!(
            build_witness(2, 5, 4),
            Err(Error::NoWitness { .. })
        ));
        assert!(build_witness(2, 4, 11).is_err());
    }

    #[test]
    fn bg_examples() {
        for l in 1..=3 {
            assert_eq!(
                verify_bg_theorem(l, 5, 2, 100).unwrap().status,
                ReportStatus::Confirmed
            );
        }
        let r = verify_bg_theorem(2, 6, 2, 100).unwrap();
        assert_eq!(r.status, ReportStatus::Counterexample);
        assert!(r.as_expected);
        assert_eq!(r.findings.len(), 1);
        assert_eq!(
            verify_bg_theorem(1, 7, 3, 100).unwrap().status,
            ReportStatus::Confirmed
        );
        assert!(verify_bg_theorem(1, 5, 1, 100).is_err());
        assert!(verify_bg_theorem(1, 5, 4, 100).is_err());
    }

    #[test]
    fn mod8_examples() {
        for l in [1, 3] {
            assert_eq!(
                verify_andrews_mod8(l, 200).unwrap().status,
                ReportStatus::Confirmed
            );
        }
        assert_eq!(
            verify_andrews_mod8(1, 0).unwrap().status,
            ReportStatus::Confirmed
        );
    }

    #[test]
    fn andrews_1971_examples() {
        let r = verify_andrews_1971(&[2, 3, 5], &[1, 3, 5], 20).unwrap();
        assert_eq!(r.status, ReportStatus::Confirmed);
        let all: Vec<u64> = (1..=30).collect();
        assert_eq!(
            verify_andrews_1971(&all, &all, 30).unwrap().status,
            ReportStatus::Confirmed
        );
        assert!(verify_andrews_1971(&[2, 3], &[2, 3], 10).is_err());
        assert!(verify_andrews_1971(&[1, 2], &[1, 3], 10).is_err());
        assert!(verify_andrews_1971(&[1, 2, 5], &[1, 2], 10).is_err());
        assert!(verify_andrews_1971(&[1, 2, 50], &[1, 2], 10).is_ok());
    }

    #[test]
    fn conjecture_examples() {
        let r = conjecture_report(ConjectureParams::new(1, 2, 3, 5, 8).unwrap(), 200).unwrap();
        assert_eq!(r.status, ReportStatus::Confirmed);
        let r = conjecture_report(ConjectureParams::new(1, 2, 4, 6, 10).unwrap(), 200).unwrap();
        assert_eq!(r.negatives().next(), Some((4, &BigInt::from(-1))));
        assert!(r.as_expected);
        let r = conjecture_report(ConjectureParams::new(1, 3, 4, 7, 14).unwrap(), 300).unwrap();
        assert_eq!(r.status, ReportStatus::Confirmed);
        assert!(ConjectureParams::new(1, 2, 2, 3, 8).is_err());
        assert!(ConjectureParams::new(1, 2, 3, 3, 8).is_err());
        assert!(ConjectureParams::new(1, 2, 3, 5, 7).is_err());
    }

    #[test]
    #[allow(clippy::reversed_empty_ranges)]
    fn conjecture_tuple_order() {
        let t = conjecture_tuples(1..=2, 2..=4, XRule::All, 2..=3, MRule::Minimal).unwrap();
        assert!(t.windows(2).all(|w| w[0] < w[1]));
        assert!(t.iter().all(|p| p.y > p.z));
        assert_eq!(t.len(), 2 * (2 + 2 + 3));
        assert!(conjecture_tuples(1..=1, 3..=4, XRule::Fixed(5), 2..=2, MRule::Minimal).is_ok());
        assert!(conjecture_tuples(1..=1, 3..=5, XRule::Fixed(5), 2..=2, MRule::Minimal).is_err());
        assert!(
            conjecture_tuples(1..=0, 3..=5, XRule::All, 2..=2, MRule::Minimal)
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn proposal_examples() {
        for (l, y) in [(1, 4), (2, 6)] {
            let r = proposal_scan(l, y, 200).unwrap();
            assert_eq!(r.status, ReportStatus::Confirmed, "{l} {y}");
        }
        let r = proposal_scan(1, 4, 3).unwrap();
        assert_eq!(r.status, ReportStatus::Mixed);
        assert!(proposal_scan(1, 5, 100).is_err());
        assert!(proposal_scan(1, 2, 100).is_err());
        let g = proposal_grid(1..=2, 4..=8, 50).unwrap();
        let ys: Vec<_> = g
            .iter()
            .map(|r| r.parameter("y").unwrap().to_string())
            .collect();
        assert_eq!(ys, ["4", "4", "6", "6", "8", "8"]);
    }

    #[test]
    fn borwein_examples() {
        assert_eq!(borwein_scan(1, 3).unwrap().status, ReportStatus::Confirmed);
        assert_eq!(
            borwein_scan(6, 100).unwrap().status,
            ReportStatus::Confirmed
        );
        assert_eq!(borwein_scan(3, 0).unwrap().status, ReportStatus::Confirmed);
    }
}
