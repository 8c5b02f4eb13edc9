use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Int, Rat, QSeries};
use crate::error::{Error, Result};

/// Dense polynomial in `q` with integer coefficients; index = degree.
/// Never stores a trailing zero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<Int>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Int::one())
    }

    pub fn constant(c: Int) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c · q^e`.
    pub fn monomial(c: Int, e: usize) -> Self {
        let mut coeffs = vec![Int::zero(); e + 1];
        coeffs[e] = c;
        Self::from_coeffs(coeffs)
    }

    /// `q^e`.
    pub fn q_pow(e: usize) -> Self {
        Self::monomial(Int::one(), e)
    }

    /// `1 - q^a`.
    pub fn one_minus_q_pow(a: usize) -> Self {
        let mut coeffs = vec![Int::zero(); a + 1];
        coeffs[0] += 1;
        coeffs[a] -= 1;
        Self::from_coeffs(coeffs)
    }

    /// `q^a - q^b`.
    pub fn binomial(a: usize, b: usize) -> Self {
        let mut coeffs = vec![Int::zero(); a.max(b) + 1];
        coeffs[a] += 1;
        coeffs[b] -= 1;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Int {
        self.coeffs.get(i).cloned().unwrap_or_else(Int::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest power of `q` with a nonzero coefficient.
    pub fn q_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval_one(&self) -> Int {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, q: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * q + Rat::from_integer(c.clone()))
    }

    pub fn eval_f64(&self, q: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * q + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Multiply by `q^e`.
    pub fn shift(&self, e: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Int::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    pub fn scale(&self, c: &Int) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `q -> q^k`.
    pub fn dilate(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return Self::constant(self.eval_one());
        }
        let mut coeffs = vec![Int::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    /// Quotient when `divisor` divides `self` exactly over the integers.
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::SingularDenominator);
        };
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Err(Error::Domain("polynomial division is not exact".into()));
        }
        let mut quot = vec![Int::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd];
            if c.is_zero() {
                continue;
            }
            if !(c % lead).is_zero() {
                return Err(Error::Domain("polynomial division is not exact".into()));
            }
            let qc = c / lead;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &qc * d;
            }
            quot[i] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::Domain("polynomial division is not exact".into()));
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Splits `self = (1-q)^v · r` with `r(1) != 0`. Zero has no such split.
    pub fn split_at_one(&self) -> Option<(usize, QPoly)> {
        if self.is_zero() {
            return None;
        }
        let mut v = 0;
        let mut cur = self.clone();
        while cur.eval_one().is_zero() {
            // synthetic division by (q - 1), then negate for (1 - q)
            let d = cur.coeffs.len() - 1;
            let mut b = vec![Int::zero(); d];
            let mut carry = Int::zero();
            for i in (1..=d).rev() {
                carry += &cur.coeffs[i];
                b[i - 1] = carry.clone();
            }
            cur = -QPoly::from_coeffs(b);
            v += 1;
        }
        Some((v, cur))
    }

    pub fn to_series(&self, order: usize) -> QSeries {
        QSeries::from_coeffs(self.coeffs.clone(), order)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::constant(BigInt::from(c))
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{abs}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{abs}q^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: QPoly) -> QPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QPoly> for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: &QPoly) -> QPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl core::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |a, b| a + b)
    }
}

impl core::iter::Product for QPoly {
    fn product<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::one(), |a, b| a * b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn arithmetic() {
        let a = QPoly::from_i64s(&[1, 1]);
        let b = QPoly::from_i64s(&[1, -1]);
        assert_eq!(&a * &b, QPoly::one_minus_q_pow(2));
        assert_eq!(&a - &a, QPoly::zero());
        assert_eq!((&a + &b).coeffs(), &[Int::from(2)]);
    }

    #[test]
    fn exact_division() {
        let num = QPoly::one_minus_q_pow(6);
        let q = num.div_exact(&QPoly::one_minus_q_pow(2)).unwrap();
        assert_eq!(q, QPoly::from_i64s(&[1, 0, 1, 0, 1]));
        assert!(QPoly::one_minus_q_pow(5).div_exact(&QPoly::one_minus_q_pow(2)).is_err());
        assert_eq!(QPoly::one().div_exact(&QPoly::zero()), Err(Error::SingularDenominator));
    }

    #[test]
    fn split_at_one() {
        let p = QPoly::one_minus_q_pow(3) * QPoly::one_minus_q_pow(2);
        let (v, r) = p.split_at_one().unwrap();
        assert_eq!(v, 2);
        assert_eq!(r.eval_one(), Int::from(6));
        assert_eq!(QPoly::one_minus_q_pow(1).pow(2).scale(&Int::from(3)) * r.clone(), p.scale(&Int::from(3)));
    }

    #[test]
    fn display() {
        assert_eq!(QPoly::from_i64s(&[1, -2, 0, 1]).to_string(), "1 - 2q + q^3");
        assert_eq!(QPoly::zero().to_string(), "0");
    }
}
