use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::{Int, QPoly};
use crate::error::{Error, Result};

/// Power series in `q` known exactly through `q^order`.
///
/// Binary operations produce a result of the smaller of the two orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<Int>,
    order: usize,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries { coeffs: vec![Int::zero(); order + 1], order }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Int::one();
        s
    }

    /// Pads with zeros or truncates to `order`.
    pub fn from_coeffs(mut coeffs: Vec<Int>, order: usize) -> Self {
        coeffs.resize(order + 1, Int::zero());
        QSeries { coeffs, order }
    }

    pub fn from_u64s(coeffs: &[u64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Int::from(c)).collect(), order)
    }

    /// `Π 1/(1 - q^a)` over the given exponents.
    pub fn inverse_product(exponents: &[usize], order: usize) -> Self {
        let mut s = Self::one(order);
        for &a in exponents {
            s.div_one_minus_q_pow(a);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Int {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot extend a truncated series");
        Self::from_coeffs(self.coeffs[..=order].to_vec(), order)
    }

    /// Polynomial of the known coefficients.
    pub fn to_poly(&self) -> QPoly {
        QPoly::from_coeffs(self.coeffs.clone())
    }

    pub fn add_assign_shifted(&mut self, other: &QSeries, shift: usize) {
        let order = self.order.min(other.order);
        self.coeffs.truncate(order + 1);
        self.order = order;
        for i in shift..=order {
            self.coeffs[i] += &other.coeffs[i - shift];
        }
    }

    /// Adds `c · q^shift · p`, dropping terms above the order.
    pub fn add_poly_shifted(&mut self, p: &QPoly, shift: usize) {
        for (i, c) in p.coeffs().iter().enumerate() {
            let Some(slot) = self.coeffs.get_mut(i + shift) else { break };
            *slot += c;
        }
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let mut s = self.clone();
        s.add_assign_shifted(other, 0);
        s
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QSeries {
        QSeries { coeffs: self.coeffs.iter().map(|c| -c).collect(), order: self.order }
    }

    pub fn scale(&self, c: &Int) -> QSeries {
        QSeries { coeffs: self.coeffs.iter().map(|x| x * c).collect(), order: self.order }
    }

    pub fn mul(&self, other: &QSeries) -> QSeries {
        let order = self.order.min(other.order);
        let mut out = vec![Int::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        QSeries { coeffs: out, order }
    }

    pub fn mul_poly(&self, p: &QPoly) -> QSeries {
        self.mul(&p.to_series(self.order))
    }

    /// Multiply by `q^e` in place of a full product.
    pub fn shift(&self, e: usize) -> QSeries {
        let mut out = Self::zero(self.order);
        for i in e..=self.order {
            out.coeffs[i] = self.coeffs[i - e].clone();
        }
        out
    }

    /// Multiply in place by `1/(1 - q^a)`, `a >= 1`.
    pub fn div_one_minus_q_pow(&mut self, a: usize) {
        assert!(a >= 1, "1/(1-q^0) has no power series");
        for i in a..=self.order {
            let prev = self.coeffs[i - a].clone();
            self.coeffs[i] += prev;
        }
    }

    /// Multiply in place by `1 - q^a`.
    pub fn mul_one_minus_q_pow(&mut self, a: usize) {
        for i in (a..=self.order).rev() {
            let prev = self.coeffs[i - a].clone();
            self.coeffs[i] -= prev;
        }
    }

    /// Series quotient; the divisor's constant term must be `±1`.
    pub fn div(&self, divisor: &QSeries) -> Result<QSeries> {
        let order = self.order.min(divisor.order);
        let c0 = &divisor.coeffs[0];
        if !c0.abs().is_one() {
            return Err(Error::NonUnitDenominator);
        }
        let mut out = vec![Int::zero(); order + 1];
        for i in 0..=order {
            let mut acc = self.coeffs[i].clone();
            for j in 1..=i {
                if !divisor.coeffs[j].is_zero() {
                    acc -= &divisor.coeffs[j] * &out[i - j];
                }
            }
            out[i] = acc * c0;
        }
        Ok(QSeries { coeffs: out, order })
    }

    /// Lowest index with a nonzero coefficient.
    pub fn q_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Coefficientwise agreement through the smaller of the two orders.
    pub fn agrees_with(&self, other: &QSeries) -> bool {
        let order = self.order.min(other.order);
        self.coeffs[..=order] == other.coeffs[..=order]
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(q^{})", self.to_poly(), self.order + 1)
    }
}
