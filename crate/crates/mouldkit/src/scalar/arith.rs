//! Bernoulli numbers, divisor sums and small combinatorial helpers.

use num::bigint::BigInt;
use num::{One, Zero};

use super::rational::Q;
use crate::{Error, Result};

/// n! as a rational.
pub fn factorial(n: u32) -> Q {
    let mut acc = BigInt::one();
    for k in 2..=n as u64 {
        acc *= k;
    }
    Q::from_integer(acc)
}

/// Binomial coefficient C(n, k) as a rational.
pub fn binomial(n: u32, k: u32) -> Q {
    if k > n {
        return Q::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as u64 {
        num *= n as u64 - i;
        den *= i + 1;
    }
    Q::new(num, den)
}

/// Bernoulli number B_n in the convention with B_1 = -1/2, i.e. the
/// coefficients of z/(e^z - 1) = sum B_n z^n / n!.
///
/// Computed by inverting the series (e^z - 1)/z = sum z^k/(k+1)! rather
/// than by the Pascal-triangle recurrence, so tests can use the recurrence
/// as an independent oracle.
pub fn bernoulli(n: u32) -> Q {
    bernoulli_upto(n).pop().unwrap()
}

/// B_0, ..., B_n by series inversion of (e^z - 1)/z.
pub fn bernoulli_upto(n: u32) -> Vec<Q> {
    // a_k = 1/(k+1)! are the coefficients of (e^z-1)/z; find b with
    // (sum a_k z^k)(sum b_k z^k) = 1, then B_k = k! * b_k.
    let n = n as usize;
    let a: Vec<Q> = (0..=n).map(|k| factorial(k as u32 + 1).recip()).collect();
    let mut b: Vec<Q> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = if k == 0 { Q::one() } else { Q::zero() };
        for j in 0..k {
            acc -= &a[k - j] * &b[j];
        }
        b.push(acc); // a[0] = 1
    }
    b.iter()
        .enumerate()
        .map(|(k, bk)| bk * factorial(k as u32))
        .collect()
}

/// Divisor power sum sigma_l(n) = sum over d | n of d^l.
pub fn sigma(l: u32, n: i64) -> Result<BigInt> {
    if n <= 0 {
        return Err(Error::Domain(format!("sigma requires n >= 1, got {n}")));
    }
    let n = n as u64;
    let mut total = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            total += BigInt::from(d).pow(l);
            let e = n / d;
            if e != d {
                total += BigInt::from(e).pow(l);
            }
        }
        d += 1;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::{q, qr};

    /// Independent oracle: sum_{j<n} C(n+1, j) B_j = 0 for n >= 1.
    fn bernoulli_by_recurrence(n: u32) -> Vec<Q> {
        let mut b = vec![Q::one()];
        for m in 1..=n {
            let mut acc = Q::zero();
            for j in 0..m {
                acc += binomial(m + 1, j) * &b[j as usize];
            }
            b.push(-acc / q(m as i64 + 1));
        }
        b
    }

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli(0), q(1));
        assert_eq!(bernoulli(1), qr(-1, 2));
        assert_eq!(bernoulli(4), qr(-1, 30)); // frozen from the recurrence oracle
        assert_eq!(bernoulli(2), qr(1, 6));
        assert_eq!(bernoulli(3), q(0));
        assert_eq!(bernoulli(12), qr(-691, 2730));
    }

    #[test]
    fn bernoulli_matches_recurrence_oracle() {
        let oracle = bernoulli_by_recurrence(24);
        let ours = bernoulli_upto(24);
        assert_eq!(ours, oracle);
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(3, 1).unwrap(), BigInt::from(1));
        assert_eq!(sigma(3, 2).unwrap(), BigInt::from(9));
        // oracle: divisors of 6 are 1, 2, 3, 6
        assert_eq!(sigma(1, 6).unwrap(), BigInt::from(12));
        assert_eq!(sigma(0, 12).unwrap(), BigInt::from(6));
        assert!(sigma(1, 0).is_err());
        assert!(sigma(1, -4).is_err());
    }

    #[test]
    fn sigma_matches_enumeration() {
        for n in 1..=60i64 {
            for l in 0..=5u32 {
                let brute: BigInt = (1..=n)
                    .filter(|d| n % d == 0)
                    .map(|d| BigInt::from(d).pow(l))
                    .sum();
                assert_eq!(sigma(l, n).unwrap(), brute);
            }
        }
    }

    #[test]
    fn binomial_pascal() {
        for n in 1..=12u32 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
        assert_eq!(binomial(5, 7), q(0));
    }
}
