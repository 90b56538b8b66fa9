//! Small exact rationals and the extended line `ℚ ∪ {∞}`.

use core::fmt;
use core::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Signed;

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseRationalError {
    Empty,
    BadInteger,
    ZeroDenominator,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseRationalError::Empty => f.write_str("empty rational"),
            ParseRationalError::BadInteger => f.write_str("malformed integer in rational"),
            ParseRationalError::ZeroDenominator => f.write_str("zero denominator"),
        }
    }
}

impl core::error::Error for ParseRationalError {}

/// Parses `"a"` or `"a/b"` with `b ≠ 0`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: i64 = num.parse().map_err(|_| ParseRationalError::BadInteger)?;
    let den: i64 = den.parse().map_err(|_| ParseRationalError::BadInteger)?;
    if den == 0 {
        return Err(ParseRationalError::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

/// A rational number or the point at infinity (a degenerate fiber slope).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtRational {
    Finite(Rational),
    Infinity,
}

impl ExtRational {
    /// `num/den`, with `den = 0` mapping to infinity.
    pub fn from_fraction(num: i64, den: i64) -> Self {
        if den == 0 {
            ExtRational::Infinity
        } else {
            ExtRational::Finite(Rational::new(num, den))
        }
    }
}

impl From<Rational> for ExtRational {
    fn from(r: Rational) -> Self {
        ExtRational::Finite(r)
    }
}

impl FromStr for ExtRational {
    type Err = ParseRationalError;

    /// Accepts `inf`, `∞` or anything [`parse_rational`] accepts.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            Ok(ExtRational::Infinity)
        } else {
            parse_rational(t).map(ExtRational::Finite)
        }
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Finite(r) => write!(f, "{r}"),
            ExtRational::Infinity => f.write_str("inf"),
        }
    }
}

/// Splits `r` into `floor(r)` and the fractional part in `[0, 1)`.
pub fn floor_fract(r: Rational) -> (i64, Rational) {
    let fl = r.numer().div_floor(r.denom());
    (fl, r - Rational::from_integer(fl))
}

/// True when `0 < r < 1`.
pub fn in_open_unit(r: Rational) -> bool {
    r.is_positive() && r < Rational::from_integer(1)
}

/// Compares `r` with `a/k` without constructing a reduced ratio.
pub fn lt_frac(r: Rational, a: i64, k: i64) -> bool {
    debug_assert!(k > 0);
    (*r.numer() as i128) * (k as i128) < (a as i128) * (*r.denom() as i128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn parses_fractions_and_infinity() {
        assert_eq!(parse_rational("3/6").unwrap(), Rational::new(1, 2));
        assert_eq!(parse_rational(" -4 ").unwrap(), Rational::from_integer(-4));
        assert_eq!(parse_rational("1/0"), Err(ParseRationalError::ZeroDenominator));
        assert_eq!(parse_rational("a/2"), Err(ParseRationalError::BadInteger));
        assert_eq!("inf".parse::<ExtRational>().unwrap(), ExtRational::Infinity);
        assert_eq!("2/3".parse::<ExtRational>().unwrap(), ExtRational::Finite(Rational::new(2, 3)));
    }

    #[test]
    fn floor_fract_handles_negatives() {
        assert_eq!(floor_fract(Rational::new(3, 2)), (1, Rational::new(1, 2)));
        assert_eq!(floor_fract(Rational::new(-1, 3)), (-1, Rational::new(2, 3)));
        assert_eq!(floor_fract(Rational::from_integer(-2)), (-2, Rational::zero()));
    }

    #[test]
    fn strict_fraction_comparison() {
        assert!(lt_frac(Rational::new(1, 3), 2, 5));
        assert!(!lt_frac(Rational::new(1, 2), 1, 2));
        assert!(lt_frac(Rational::zero(), 1, 7));
    }
}
