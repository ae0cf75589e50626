//! Dense truncated power series over the integers and finite q-product expansion.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A power series `sum c_n q^n` kept exactly up to `q^max_degree`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(max_degree: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); max_degree + 1],
        }
    }

    pub fn one(max_degree: usize) -> Self {
        let mut s = Self::zero(max_degree);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Builds a series from its coefficient list; `coeffs[n]` multiplies `q^n`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidSpec(
                "a truncated series needs at least the constant coefficient".into(),
            ));
        }
        Ok(Self { coeffs })
    }

    /// Convenience constructor for small literal series.
    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`. Panics if `n > max_degree`.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Drops every term above `q^max_degree`. Truncating upward is not possible and
    /// is reported as an error.
    pub fn truncate(&self, max_degree: usize) -> Result<Self> {
        if max_degree > self.max_degree() {
            return Err(Error::DegreeMismatch {
                left: self.max_degree(),
                right: max_degree,
            });
        }
        Ok(Self {
            coeffs: self.coeffs[..=max_degree].to_vec(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Iterator over `(n, coefficient)` for every strictly negative coefficient.
    pub fn negatives(&self) -> impl Iterator<Item = (usize, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_negative())
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.max_degree() != other.max_degree() {
            return Err(Error::DegreeMismatch {
                left: self.max_degree(),
                right: other.max_degree(),
            });
        }
        Ok(())
    }

    /// Cauchy product truncated at the common degree.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let n = self.max_degree();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Coefficientwise difference.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Multiplies in place by `1/(1 - q^part)`, i.e. allows `part` with unbounded
    /// repetition.
    fn mul_geometric(&mut self, part: usize) {
        let n = self.max_degree();
        if part == 0 || part > n {
            return;
        }
        for i in part..=n {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - part];
        }
    }

    /// Multiplies in place by `(1 - q^part)`.
    fn mul_binomial(&mut self, part: usize) {
        let n = self.max_degree();
        if part == 0 || part > n {
            return;
        }
        for i in (part..=n).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] -= &lo[i - part];
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (n, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{n}")?,
                (_, false) => write!(f, "{mag}q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.max_degree() + 1)
    }
}

pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.mul(b)
}

pub fn series_sub(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.sub(b)
}

/// The finite product `prod_i (q^{r_i}; q^m)_L`, described by its residues, modulus
/// and number of factors per residue.
///
/// Residues are not reduced and may repeat; a repeated residue contributes its
/// factors twice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductSpec {
    residues: Vec<u64>,
    modulus: u64,
    factors: u64,
}

impl ProductSpec {
    pub fn new(residues: Vec<u64>, modulus: u64, factors: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidSpec("modulus must be positive".into()));
        }
        if factors == 0 {
            return Err(Error::InvalidSpec(
                "number of factors per residue must be positive".into(),
            ));
        }
        if let Some(r) = residues.iter().find(|&&r| r == 0) {
            return Err(Error::InvalidSpec(format!("residue {r} is not positive")));
        }
        Ok(Self {
            residues,
            modulus,
            factors,
        })
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn factors(&self) -> u64 {
        self.factors
    }

    /// The allowed parts `r_i + j*m` for `0 <= j < L`, as an ascending multiset.
    pub fn parts(&self) -> Vec<u64> {
        let mut parts: Vec<u64> = self
            .residues
            .iter()
            .flat_map(|&r| (0..self.factors).map(move |j| r + j * self.modulus))
            .collect();
        parts.sort_unstable();
        parts
    }
}

/// Expands `1 / prod_{p in parts} (1 - q^p)` to degree `max_degree`. Factors are
/// applied in ascending part order.
pub fn expand_reciprocal_parts(parts: &[u64], max_degree: usize) -> TruncatedSeries {
    let mut sorted = parts.to_vec();
    sorted.sort_unstable();
    let mut s = TruncatedSeries::one(max_degree);
    for p in sorted {
        s.mul_geometric(usize::try_from(p).unwrap_or(usize::MAX));
    }
    s
}

/// Expands `prod_{p in parts} (1 - q^p)` to degree `max_degree`.
pub fn expand_product_parts(parts: &[u64], max_degree: usize) -> TruncatedSeries {
    let mut sorted = parts.to_vec();
    sorted.sort_unstable();
    let mut s = TruncatedSeries::one(max_degree);
    for p in sorted {
        s.mul_binomial(usize::try_from(p).unwrap_or(usize::MAX));
    }
    s
}

/// Generating function of partitions into the allowed parts of `spec`, each
/// usable any number of times.
pub fn expand_reciprocal(spec: &ProductSpec, max_degree: usize) -> TruncatedSeries {
    expand_reciprocal_parts(&spec.parts(), max_degree)
}

/// The product itself; its `q^n` coefficient counts partitions of `n` into an even
/// number of distinct allowed parts minus those with an odd number.
pub fn expand_product(spec: &ProductSpec, max_degree: usize) -> TruncatedSeries {
    expand_product_parts(&spec.parts(), max_degree)
}
