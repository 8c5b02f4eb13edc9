//! Exact arithmetic in the formal variable `q`: integer polynomials, truncated
//! power series, and rational functions whose denominators are products of
//! `(1 - q^a)`, plus the `q -> 1` limit that turns a volume generating
//! function into a tableau count.

mod poly;
mod ratfn;
mod series;

use alloc::vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use poly::QPoly;
pub use ratfn::{count_from_gf, limit_at_one, QRationalFn};
pub use series::QSeries;

pub type Int = BigInt;
pub type Rat = BigRational;

/// Default truncation order for series cross-checks.
pub const DEFAULT_ORDER: usize = 20;

pub fn factorial(n: usize) -> Int {
    (1..=n).fold(Int::one(), |acc, i| acc * Int::from(i))
}

/// Ordinary binomial coefficient; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Gaussian binomial `[a, b]_q`; the zero polynomial when `b < 0` or `b > a`.
pub fn qbinom(a: usize, b: i64) -> QPoly {
    if b < 0 || b as usize > a {
        return QPoly::zero();
    }
    let b = b as usize;
    // Pascal rule [i, j] = [i-1, j-1] + q^j [i-1, j], one row at a time.
    let mut row = vec![QPoly::one()];
    for i in 1..=a {
        let mut next = vec![QPoly::zero(); i + 1];
        for j in 0..=i {
            let mut v = QPoly::zero();
            if j >= 1 {
                v = &v + &row[j - 1];
            }
            if j < i {
                v = &v + &row[j].shift(j);
            }
            next[j] = v;
        }
        row = next;
    }
    row.swap_remove(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_binomials() {
        assert_eq!(qbinom(3, 1), QPoly::from_i64s(&[1, 1, 1]));
        assert_eq!(qbinom(4, 2), QPoly::from_i64s(&[1, 1, 2, 1, 1]));
        assert_eq!(qbinom(2, 3), QPoly::zero());
        assert_eq!(qbinom(2, -1), QPoly::zero());
        assert_eq!(qbinom(0, 0), QPoly::one());
    }

    #[test]
    fn qbinom_against_product_formula() {
        // [a,b] = Π_{i=1..b} (1 - q^{a-b+i}) / (1 - q^i)
        for a in 0..9 {
            for b in 0..=a {
                let num: QPoly = (1..=b).map(|i| QPoly::one_minus_q_pow(a - b + i)).product();
                let den: QPoly = (1..=b).map(QPoly::one_minus_q_pow).product();
                assert_eq!(qbinom(a, b as i64), num.div_exact(&den).unwrap(), "[{a},{b}]");
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), Int::from(10));
        assert_eq!(binomial(2, 5), Int::zero());
        assert_eq!(factorial(5), Int::from(120));
    }
}
