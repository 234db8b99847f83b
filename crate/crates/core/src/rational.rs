//! Exact rational scalars: parsing, formatting, and integer-root helpers.
//!
//! Every coordinate in this crate is a [`Rat`]. Predicates downstream are
//! sign computations on these values, so nothing here may round.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// `v` as an exact rational.
pub fn rat_i64(v: i64) -> Rat {
    BigRational::from_integer(BigInt::from(v))
}

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRatError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses `"p/q"`, decimal (`"-3.25"`), or integer literals exactly.
///
/// Decimals are scaled by the matching power of ten, never via floating
/// point, so `"0.1"` is exactly 1/10.
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRatError::Empty);
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| ParseRatError::Invalid(s.to_string()))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| ParseRatError::Invalid(s.to_string()))?;
        if d.is_zero() {
            return Err(ParseRatError::ZeroDenominator(s.to_string()));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let (sign, int_digits) = match int_part.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        if !frac_part.chars().all(|c| c.is_ascii_digit()) || frac_part.is_empty() {
            return Err(ParseRatError::Invalid(s.to_string()));
        }
        let int_val: BigInt = if int_digits.is_empty() {
            BigInt::zero()
        } else {
            int_digits
                .parse()
                .map_err(|_| ParseRatError::Invalid(s.to_string()))?
        };
        let frac_val: BigInt = frac_part
            .parse()
            .map_err(|_| ParseRatError::Invalid(s.to_string()))?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let numer = int_val * &scale + frac_val;
        return Ok(BigRational::new(numer * BigInt::from(sign), scale));
    }
    let n: BigInt = s
        .parse()
        .map_err(|_| ParseRatError::Invalid(s.to_string()))?;
    Ok(BigRational::from_integer(n))
}

/// Canonical form: reduced `"p/q"`, or just `"p"` for integers.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Square root of a nonnegative rational: the exact value when it is
/// rational, otherwise a lower bound within relative error 2^-32.
///
/// Returns `(value, exact)`. A lower bound is always safe for the tiling:
/// shrinking the grid side only increases the cell-count constant.
pub fn sqrt_exact_or_lower(x: &Rat) -> (Rat, bool) {
    assert!(!x.is_negative(), "sqrt of negative rational");
    if x.is_zero() {
        return (Rat::zero(), true);
    }
    let n = x.numer().clone();
    let d = x.denom().clone();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &sn * &sn == n && &sd * &sd == d {
        return (BigRational::new(sn, sd), true);
    }
    // Scale so the integer under the root has >= 128 bits; the floor of its
    // root is then within relative 2^-63 of the true value, well inside spec.
    let nb = n.bits() as i64;
    let db = d.bits() as i64;
    let m = ((128 + db - nb).max(0) as u64 + 1) / 2 + 1;
    let scaled: BigInt = (n << (2 * m)) / d;
    let root = scaled.sqrt();
    (BigRational::new(root, BigInt::one() << m), false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_decimals_integers() {
        assert_eq!(parse_rat("3/2").unwrap(), ratio(3, 2));
        assert_eq!(parse_rat("-3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rat("3/-2").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rat("0.1").unwrap(), ratio(1, 10));
        assert_eq!(parse_rat("-2.50").unwrap(), ratio(-5, 2));
        assert_eq!(parse_rat(".5").unwrap(), ratio(1, 2));
        assert_eq!(parse_rat("17").unwrap(), rat_i64(17));
        assert_eq!(parse_rat(" -4 ").unwrap(), rat_i64(-4));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a.b").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn formats_reduced() {
        assert_eq!(fmt_rat(&ratio(4, 2)), "2");
        assert_eq!(fmt_rat(&ratio(-10, 4)), "-5/2");
        assert_eq!(fmt_rat(&Rat::zero()), "0");
    }

    #[test]
    fn roundtrip_parse_fmt() {
        for (n, d) in [(0, 1), (7, 3), (-22, 7), (1000000, 999999)] {
            let r = ratio(n, d);
            assert_eq!(parse_rat(&fmt_rat(&r)).unwrap(), r);
        }
    }

    #[test]
    fn sqrt_exact_cases() {
        let (v, exact) = sqrt_exact_or_lower(&ratio(9, 4));
        assert!(exact);
        assert_eq!(v, ratio(3, 2));
        let (v, exact) = sqrt_exact_or_lower(&Rat::zero());
        assert!(exact);
        assert!(v.is_zero());
    }

    #[test]
    fn sqrt_lower_bound_tightness() {
        // sqrt(2): bound from below, within 2^-32 relative.
        let (v, exact) = sqrt_exact_or_lower(&rat_i64(2));
        assert!(!exact);
        assert!(&v * &v <= rat_i64(2), "must be a lower bound");
        let tol = ratio(1, 1 << 30);
        let upper = &v * (Rat::one() + tol);
        assert!(&upper * &upper > rat_i64(2), "bound not tight enough");
        // A tiny value keeps its relative precision.
        let tiny = ratio(3, 1_000_000_007);
        let (v, exact) = sqrt_exact_or_lower(&tiny);
        assert!(!exact);
        assert!(&v * &v <= tiny);
        let upper = &v * (Rat::one() + ratio(1, 1 << 30));
        assert!(&upper * &upper > tiny);
    }
}
