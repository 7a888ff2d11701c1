use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact normalized fraction. `num_rational` keeps the denominator positive
/// and the pair reduced after every operation.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p`, `+p` or `p/q` with `q > 0`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = |msg: &str| Error::parse(0, format!("{msg}: {text:?}"));
    let (sign, body) = match text.as_bytes().first() {
        Some(b'-') => (-1, &text[1..]),
        Some(b'+') => (1, &text[1..]),
        _ => (1, text),
    };
    let (num_s, den_s) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num_s) {
        return Err(bad("malformed rational"));
    }
    let mut num: BigInt = num_s.parse().map_err(|_| bad("malformed rational"))?;
    if sign < 0 {
        num = -num;
    }
    let den: BigInt = match den_s {
        None => BigInt::one(),
        Some(d) if digits(d) => d.parse().map_err(|_| bad("malformed rational"))?,
        Some(_) => return Err(bad("malformed denominator")),
    };
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Least common multiple of the denominators of `xs` (1 for an empty slice).
pub fn common_denominator(xs: &[Rational]) -> BigInt {
    xs.iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Truncated decimal rendering with up to 12 fractional digits, display only.
pub fn approx_decimal(x: &Rational) -> String {
    const DIGITS: u32 = 12;
    let neg = x.is_negative();
    let a = x.abs();
    let scale = BigInt::from(10u64).pow(DIGITS);
    let scaled = (a.numer() * &scale) / a.denom();
    let (int_part, frac_part) = scaled.div_rem(&scale);
    let mut frac = format!("{:0>width$}", frac_part.to_string(), width = DIGITS as usize);
    while frac.ends_with('0') {
        frac.pop();
    }
    let sign = if neg && !(int_part.is_zero() && frac.is_empty()) {
        "-"
    } else {
        ""
    };
    if frac.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac}")
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_literals() {
        assert_eq!(parse_rational("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rational("-2").unwrap(), rat(-2));
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("+5").unwrap(), rat(5));
        assert_eq!(parse_rational("-0").unwrap(), rat(0));
        let big = parse_rational("123456789012345678901234567890/3").unwrap();
        assert_eq!(big.denom(), &BigInt::one());
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", "-", "3/", "/4", "3/0", "3/-4", "1.5", "a", "1/2/3", " 1", "--1"] {
            assert!(parse_rational(s).is_err(), "{s:?} should fail");
        }
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(approx_decimal(&ratio(3, 2)), "1.5");
        assert_eq!(approx_decimal(&ratio(-1, 3)), "-0.333333333333");
        assert_eq!(approx_decimal(&rat(7)), "7");
        assert_eq!(approx_decimal(&ratio(-5, 2)), "-2.5");
    }

    #[test]
    fn lcm_of_denominators() {
        let xs = [ratio(1, 2), ratio(1, 3), rat(4)];
        assert_eq!(common_denominator(&xs), BigInt::from(6));
        assert_eq!(common_denominator(&[]), BigInt::one());
    }
}
