//! Exact rational scalars.
//!
//! `Q` is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator; both invariants are maintained by the underlying
//! representation on every operation.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::{Error, Result};

/// The base field: arbitrary-precision rationals.
pub type Q = BigRational;

/// Integer as a rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rational from an integer pair. Panics on zero denominator.
pub fn qr(num: i64, den: i64) -> Q {
    assert!(den != 0, "zero denominator");
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Parse "p", "-p" or "p/q" into a rational.
pub fn parse_rational(s: &str) -> Result<Q> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer `{num}`")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer `{den}`")))?;
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Q::new(n, d))
}

/// Render as "p" or "p/q" (lowest terms, denominator positive).
pub fn format_rational(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Render with an explicit leading sign, used by polynomial printers.
pub fn format_signed_coeff(x: &Q) -> (bool, String) {
    (x.is_negative(), format_rational(&x.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["3", "-7", "2/3", "-5/4", " 9/12 "] {
            let v = parse_rational(s).unwrap();
            let v2 = parse_rational(&format_rational(&v)).unwrap();
            assert_eq!(v, v2);
        }
        assert_eq!(parse_rational("9/12").unwrap(), qr(3, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    proptest! {
        // Exactness: (a/b + c/d) * (b*d) == a*d + c*b.
        #[test]
        fn addition_is_exact(a in -1000i64..1000, b in 1i64..100, c in -1000i64..1000, d in 1i64..100) {
            let x = qr(a, b);
            let y = qr(c, d);
            let lhs = (x + y) * q(b) * q(d);
            let rhs = q(a) * q(d) + q(c) * q(b);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
