//! Closed-form bounds on the number `m` of bicliques with component size at
//! most `x` needed to cover `K_n`.
//!
//! All values are integer ceilings. Logarithms are evaluated exactly (see
//! [`crate::log2`]), so tight cases such as `n = 4, x = 2` come out exact.

use num_rational::Ratio;

use crate::error::CoverError;
use crate::log2::{ceil_log2, ceil_mul_log2_div};

fn check_args(n: u64, x: u64) {
    assert!(
        n >= 1 && x >= 1,
        "bounds need n >= 1 and x >= 1 (got n = {n}, x = {x})"
    );
}

/// `⌈n(n−1) / 2x²⌉`: every biclique has at most `x²` edges.
pub fn lower_bound_edges(n: u64, x: u64) -> u64 {
    check_args(n, x);
    let edges = n as u128 * (n as u128 - 1);
    let per = 2 * x as u128 * x as u128;
    edges.div_ceil(per) as u64
}

/// `⌈n·log2(n) / 2x⌉`: the size sum is at least `n·log2(n)` and each
/// biclique has size at most `2x`.
pub fn lower_bound_size(n: u64, x: u64) -> u64 {
    check_args(n, x);
    ceil_mul_log2_div(n, n, 2 * x)
}

/// `⌈n·log2(2x) / 2x⌉`, the weaker form of [`lower_bound_size`].
pub fn lower_bound_size_stated(n: u64, x: u64) -> u64 {
    check_args(n, x);
    ceil_mul_log2_div(n, 2 * x, 2 * x)
}

/// `4·C(g, 2) + g·⌈log2 2x⌉` with `g = ⌈n / 2x⌉`.
pub fn upper_bound_formula(n: u64, x: u64) -> u64 {
    check_args(n, x);
    let g = n.div_ceil(2 * x);
    2 * g * (g - 1) + g * ceil_log2(2 * x) as u64
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: u64,
    pub x: u64,
    pub lower_edges: u64,
    pub lower_size: u64,
    pub lower_size_stated: u64,
    pub lower_combined: u64,
    pub upper_formula: u64,
    pub achieved: Option<u64>,
    /// `upper_formula / lower_combined`; `None` when the lower bound is 0.
    pub ratio: Option<Ratio<u64>>,
}

impl BoundsReport {
    pub const CSV_HEADER: [&'static str; 9] = [
        "n",
        "x",
        "lower_edges",
        "lower_size",
        "lower_combined",
        "upper_formula",
        "achieved",
        "ratio",
        "ratio_exact",
    ];

    /// Ratio rounded half-up to 6 decimals, or `undefined`.
    pub fn ratio_decimal(&self) -> String {
        match self.ratio {
            None => "undefined".to_string(),
            Some(r) => {
                let (num, den) = (*r.numer() as u128, *r.denom() as u128);
                let micros = (num * 1_000_000 * 2 + den) / (2 * den);
                format!("{}.{:06}", micros / 1_000_000, micros % 1_000_000)
            }
        }
    }

    /// Reduced fraction `p/q`, or `undefined`.
    pub fn ratio_exact(&self) -> String {
        match self.ratio {
            None => "undefined".to_string(),
            Some(r) => format!("{}/{}", r.numer(), r.denom()),
        }
    }

    /// Fields in [`Self::CSV_HEADER`] order; `achieved` is blank when absent.
    pub fn csv_record(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.x.to_string(),
            self.lower_edges.to_string(),
            self.lower_size.to_string(),
            self.lower_combined.to_string(),
            self.upper_formula.to_string(),
            self.achieved.map(|a| a.to_string()).unwrap_or_default(),
            self.ratio_decimal(),
            self.ratio_exact(),
        ]
    }

    /// `lower_combined <= achieved <= upper_formula`, vacuous without `achieved`.
    pub fn sandwiched(&self) -> bool {
        self.achieved
            .is_none_or(|a| self.lower_combined <= a && a <= self.upper_formula)
    }
}

/// All bounds for `(n, x)`. A supplied `achieved` count below the combined
/// lower bound is reported as an inconsistency.
pub fn bounds_report(n: u64, x: u64, achieved: Option<u64>) -> Result<BoundsReport, CoverError> {
    if n == 0 || x == 0 {
        return Err(CoverError::InvalidInput(format!(
            "n and x must be at least 1 (got n = {n}, x = {x})"
        )));
    }
    let lower_edges = lower_bound_edges(n, x);
    let lower_size = lower_bound_size(n, x);
    let lower_combined = lower_edges.max(lower_size);
    let upper_formula = upper_bound_formula(n, x);
    if let Some(a) = achieved.filter(|&a| a < lower_combined) {
        return Err(CoverError::Inconsistent {
            n,
            x,
            achieved: a,
            lower: lower_combined,
        });
    }
    let ratio = (lower_combined > 0).then(|| Ratio::new(upper_formula, lower_combined));
    Ok(BoundsReport {
        n,
        x,
        lower_edges,
        lower_size,
        lower_size_stated: lower_bound_size_stated(n, x),
        lower_combined,
        upper_formula,
        achieved,
        ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_bound_examples() {
        assert_eq!(lower_bound_edges(2, 1), 1);
        assert_eq!(lower_bound_edges(4, 1), 6);
        assert_eq!(lower_bound_edges(1, 5), 0);
    }

    #[test]
    fn size_bound_examples() {
        assert_eq!(lower_bound_size(2, 1), 1);
        assert_eq!(lower_bound_size(4, 2), 2);
        assert_eq!(lower_bound_size(1, 1), 0);
        // 6·log2(6)/6 = 2.585 → 3
        assert_eq!(lower_bound_size(6, 3), 3);
        // 6·log2(6)/6 stated form: 6·log2(6)/6 as well
        assert_eq!(lower_bound_size_stated(6, 3), 3);
        // 16·log2(4)/4 = 8 versus 16·log2(16)/4 = 16
        assert_eq!(lower_bound_size_stated(16, 2), 8);
        assert_eq!(lower_bound_size(16, 2), 16);
    }

    #[test]
    fn upper_formula_examples() {
        assert_eq!(upper_bound_formula(4, 1), 6);
        assert_eq!(upper_bound_formula(10, 2), 18);
        for x in 1..50u64 {
            assert_eq!(upper_bound_formula(2 * x, x), ceil_log2(2 * x) as u64);
        }
    }

    #[test]
    fn report_examples() {
        let r = bounds_report(4, 2, Some(2)).unwrap();
        assert_eq!((r.lower_combined, r.upper_formula), (2, 2));
        assert_eq!(r.ratio, Some(Ratio::from_integer(1)));
        assert_eq!(r.ratio_decimal(), "1.000000");
        assert_eq!(r.ratio_exact(), "1/1");

        let r = bounds_report(2, 1, None).unwrap();
        assert_eq!((r.lower_combined, r.upper_formula), (1, 1));

        let r = bounds_report(1, 1, None).unwrap();
        assert_eq!(r.ratio, None);
        assert_eq!(r.csv_record()[6..], ["", "undefined", "undefined"]);

        assert!(matches!(
            bounds_report(4, 1, Some(5)),
            Err(CoverError::Inconsistent { lower: 6, .. })
        ));
        assert!(bounds_report(0, 1, None).is_err());
    }

    #[test]
    fn decimal_rounding() {
        let mut r = bounds_report(3, 1, None).unwrap();
        r.ratio = Some(Ratio::new(2, 3));
        assert_eq!(r.ratio_decimal(), "0.666667");
        r.ratio = Some(Ratio::new(1, 3));
        assert_eq!(r.ratio_decimal(), "0.333333");
    }
}
