//! Exact rational scalars and the rising-factorial family built on them.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseRationalError;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// `num/den` as a [`Rational`]. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`. Decimal notation is rejected on purpose: every
/// value entering the pipeline has to be exact.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    let bad = || ParseRationalError(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Canonical `"p/q"` (or `"p"` for integers) rendering.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Floating approximation, for display only.
pub fn approx(x: &Rational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // numerator/denominator beyond f64 range: scale both down first
        let shift = x.numer().bits().max(x.denom().bits()).saturating_sub(1000);
        let n = (x.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (x.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Rising factorial `(x)_n = x (x+1) ... (x+n-1)`, with `(x)_0 = 1`.
pub fn pochhammer(x: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut factor = x.clone();
    for _ in 0..n {
        if factor.is_zero() {
            return Rational::zero();
        }
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

/// `n!` as an exact rational.
pub fn factorial(n: u32) -> Rational {
    pochhammer(&Rational::one(), n)
}

/// Binomial coefficient with arbitrary rational upper argument,
/// `C(x, m) = (x - m + 1)_m / m!`.
pub fn gen_binomial(x: &Rational, m: u32) -> Rational {
    let start = x - Rational::from_integer(BigInt::from(m)) + Rational::one();
    pochhammer(&start, m) / factorial(m)
}

/// `(-1)^k` as a rational.
pub fn sign_power(k: u64) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `-1`, `0` or `1`.
pub fn signum(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat(1, 2), 3), rat(15, 8));
        assert_eq!(pochhammer(&rat(7, 3), 0), int(1));
        assert_eq!(pochhammer(&int(-2), 4), int(0));
        assert_eq!(pochhammer(&int(-2), 2), int(2));
    }

    #[test]
    fn gen_binomial_examples() {
        assert_eq!(gen_binomial(&rat(9, 4), 0), int(1));
        assert_eq!(gen_binomial(&int(5), 2), int(10));
        assert_eq!(gen_binomial(&rat(1, 2), 2), rat(-1, 8));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-33/100").unwrap(), rat(-33, 100));
        assert_eq!(parse_rational("4/2").unwrap(), int(2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&rat(6, -4)), "-3/2");
        assert_eq!(format_rational(&int(-5)), "-5");
    }

    #[test]
    fn approx_survives_huge_values() {
        let big = Rational::new(BigInt::from(3) << 5000u32, BigInt::from(2) << 5000u32);
        assert!((approx(&big) - 1.5).abs() < 1e-12);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-60i64..60, 1i64..13).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn pochhammer_splits(x in small_rational(), m in 0u32..6, n in 0u32..6) {
            let lhs = pochhammer(&x, m + n);
            let rhs = pochhammer(&x, m) * pochhammer(&(&x + int(m as i64)), n);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn gen_binomial_matches_pascal(n in 0u32..30, m in 0u32..30) {
            prop_assume!(m <= n);
            let mut row = vec![BigInt::one()];
            for _ in 0..n {
                let mut next = vec![BigInt::one(); row.len() + 1];
                for i in 1..row.len() {
                    next[i] = &row[i - 1] + &row[i];
                }
                row = next;
            }
            prop_assert_eq!(gen_binomial(&int(n as i64), m), Rational::from_integer(row[m as usize].clone()));
        }
    }
}
