//! The size-sum certificate.
//!
//! For a covering with `c` bicliques, let `s_v` count the bicliques that
//! miss vertex `v`. Each row of the covering matrix is compatible with
//! `2^{s_v}` of the `2^c` binary strings, and in a complete covering no
//! string is compatible with two rows, so `Σ 2^{s_v} <= 2^c`. Convexity
//! then gives `Σ|B_i| = c·n − Σ s_v >= n·log2(n)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::CoverError;
use crate::log2::{cmp_with_mul_log2, mul_log2_approx};
use crate::model::Covering;
use crate::verify::{is_complete_matrix, RowMatrix};

/// The real number `n·log2(n)`, compared exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LogThreshold {
    pub n: u64,
}

impl LogThreshold {
    pub fn approx(&self) -> f64 {
        mul_log2_approx(self.n, self.n)
    }

    /// `value <=> n·log2(n)`.
    pub fn cmp_value(&self, value: u64) -> Ordering {
        cmp_with_mul_log2(value as u128, self.n, self.n)
    }

    pub fn is_met_by(&self, value: u64) -> bool {
        self.cmp_value(value) != Ordering::Less
    }
}

impl fmt::Display for LogThreshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{0}·log2({0}) ≈ {1:.6}", self.n, self.approx())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub n: u32,
    /// Number of bicliques.
    pub c: usize,
    pub size_sum: u64,
    /// Per-vertex count of bicliques not containing the vertex.
    pub star_counts: Vec<u32>,
    /// `Σ_v 2^{s_v}`.
    pub copies_sum: BigUint,
    /// `2^c`.
    pub holes: BigUint,
    pub threshold: LogThreshold,
    pub complete: bool,
}

impl CertificateReport {
    pub fn pigeonhole_holds(&self) -> bool {
        self.copies_sum <= self.holes
    }

    pub fn size_bound_holds(&self) -> bool {
        self.threshold.is_met_by(self.size_sum)
    }

    /// `size_sum = n·log2(n)` exactly.
    pub fn size_bound_tight(&self) -> bool {
        self.threshold.cmp_value(self.size_sum) == Ordering::Equal
    }

    /// Both inequalities hold, or the covering is incomplete and exempt.
    pub fn consistent(&self) -> bool {
        !self.complete || (self.pigeonhole_holds() && self.size_bound_holds())
    }
}

pub fn size_sum_certificate(cov: &Covering) -> Result<CertificateReport, CoverError> {
    let matrix = RowMatrix::build(cov)?;
    let complete = is_complete_matrix(cov)?.is_complete();
    let n = cov.n;
    let c = cov.bicliques.len();

    let star_counts: Vec<u32> = (0..n as usize).map(|v| matrix.star_count(v)).collect();
    let copies_sum = star_counts.iter().fold(BigUint::zero(), |acc, &s| {
        acc + (BigUint::one() << s as usize)
    });
    let holes = BigUint::one() << c;
    let size_sum = cov.size_sum();

    let stars: u64 = star_counts.iter().map(|&s| s as u64).sum();
    assert_eq!(
        size_sum,
        c as u64 * n as u64 - stars,
        "size sum must equal the number of 0/1 entries in the covering matrix"
    );

    Ok(CertificateReport {
        n,
        c,
        size_sum,
        star_counts,
        copies_sum,
        holes,
        threshold: LogThreshold { n: n as u64 },
        complete,
    })
}
