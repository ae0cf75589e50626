use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

/// An inclusive integer range written `a..b`, or a single value `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span(pub RangeInclusive<u64>);

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("{t:?} is not a non-negative integer"))
        };
        match s.split_once("..") {
            Some((lo, hi)) => {
                let hi = hi.strip_prefix('=').unwrap_or(hi);
                Ok(Span(num(lo)?..=num(hi)?))
            }
            None => {
                let v = num(s)?;
                Ok(Span(v..=v))
            }
        }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.0.start(), self.0.end())
    }
}

/// Comma-separated list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct List(pub Vec<u64>);

impl FromStr for List {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Ok(List(Vec::new()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| format!("{t:?} is not a non-negative integer"))
            })
            .collect::<Result<_, _>>()
            .map(List)
    }
}

/// `x` for the conjecture scan: a value or `all`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XArg {
    Fixed(u64),
    All,
}

impl FromStr for XArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(XArg::All),
            _ => s
                .parse()
                .map(XArg::Fixed)
                .map_err(|_| format!("expected an integer or `all`, got {s:?}")),
        }
    }
}

/// `m` for the conjecture scan: a value or `min` (`yz + 2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MArg {
    Fixed(u64),
    Min,
}

impl FromStr for MArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "min" => Ok(MArg::Min),
            _ => s
                .parse()
                .map(MArg::Fixed)
                .map_err(|_| format!("expected an integer or `min`, got {s:?}")),
        }
    }
}
