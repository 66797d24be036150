//! Small helpers around exact rationals.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn from_biguint(v: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v.clone()))
}

/// `d! * value / index^d`.
pub fn normalize(value: &BigInt, index: u32, d: usize) -> BigRational {
    let denom = num_traits::pow(BigInt::from(index), d);
    BigRational::new(factorial(d) * value, denom)
}

/// Always `p/q`, including integers (`3/1`).
pub fn to_fraction_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q`, an integer, or a finite decimal such as `0.05`.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !whole_digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let digits: BigInt = format!("{whole_digits}{frac}").parse().ok()?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let value = BigRational::new(digits, scale);
        return Some(if negative { -value } else { value });
    }
    text.parse::<BigInt>().ok().map(BigRational::from_integer)
}

/// `|a - b| <= tol * max(|a|, |b|)`; two zeros agree.
pub fn within_relative(a: &BigRational, b: &BigRational, tol: &BigRational) -> bool {
    let scale = a.abs().max(b.abs());
    (a - b).abs() <= tol * scale
}

pub fn approx_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("1/20"), Some(q(1, 20)));
        assert_eq!(parse_rational("0.05"), Some(q(1, 20)));
        assert_eq!(parse_rational("-1.5"), Some(q(-3, 2)));
        assert_eq!(parse_rational(" 7 "), Some(q(7, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational("1."), None);
    }

    #[test]
    fn fraction_text() {
        assert_eq!(to_fraction_string(&q(10, 8)), "5/4");
        assert_eq!(to_fraction_string(&q(3, 1)), "3/1");
    }

    #[test]
    fn normalization() {
        assert_eq!(normalize(&BigInt::from(10), 4, 2), q(5, 4));
        assert_eq!(normalize(&BigInt::from(3), 9, 0), q(3, 1));
    }

    #[test]
    fn relative_tolerance() {
        let tol = q(1, 20);
        assert!(within_relative(&q(100, 1), &q(96, 1), &tol));
        assert!(!within_relative(&q(100, 1), &q(94, 1), &tol));
        assert!(within_relative(&q(0, 1), &q(0, 1), &tol));
        assert!(!within_relative(&q(0, 1), &q(1, 1000), &tol));
    }
}
