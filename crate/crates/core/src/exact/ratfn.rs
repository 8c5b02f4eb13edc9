use alloc::collections::BTreeMap;

use num_traits::{Signed, Zero};

use super::{Int, QPoly, QSeries, Rat};
use crate::error::{Error, Result};

/// `num / (Π_a (1 - q^a)^{m_a} · extra)`.
///
/// Keeping the cyclotomic-type factors separate makes the `(1-q)`-valuation and
/// the residual values at `q = 1` exact bookkeeping. `extra` absorbs whatever
/// else sits in the denominator, typically a signed power of `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QRationalFn {
    num: QPoly,
    den: BTreeMap<usize, usize>,
    extra: QPoly,
}

impl QRationalFn {
    pub fn from_poly(num: QPoly) -> Self {
        QRationalFn { num, den: BTreeMap::new(), extra: QPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    /// `Π 1/(1 - q^a)` over `exponents` (repeats allowed).
    pub fn inverse_product<I: IntoIterator<Item = usize>>(exponents: I) -> Self {
        let mut f = Self::one();
        for a in exponents {
            f = f.with_factor(a, 1);
        }
        f
    }

    /// Multiply by `(1 - q^a)^{-mult}`.
    pub fn with_factor(mut self, a: usize, mult: usize) -> Self {
        assert!(a >= 1, "denominator factors need a >= 1");
        if mult > 0 {
            *self.den.entry(a).or_insert(0) += mult;
        }
        self
    }

    /// Divide by an arbitrary polynomial.
    pub fn over(mut self, p: &QPoly) -> Self {
        self.extra = &self.extra * p;
        self
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn factors(&self) -> &BTreeMap<usize, usize> {
        &self.den
    }

    pub fn extra(&self) -> &QPoly {
        &self.extra
    }

    pub fn mul(&self, other: &QRationalFn) -> QRationalFn {
        let mut den = self.den.clone();
        for (&a, &m) in &other.den {
            *den.entry(a).or_insert(0) += m;
        }
        QRationalFn { num: &self.num * &other.num, den, extra: &self.extra * &other.extra }
    }

    pub fn mul_poly(&self, p: &QPoly) -> QRationalFn {
        QRationalFn { num: &self.num * p, ..self.clone() }
    }

    /// Sum over the union of the factor multisets.
    pub fn add(&self, other: &QRationalFn) -> QRationalFn {
        let mut den = self.den.clone();
        for (&a, &m) in &other.den {
            let e = den.entry(a).or_insert(0);
            *e = (*e).max(m);
        }
        let lift = |f: &QRationalFn| -> QPoly {
            den.iter()
                .map(|(&a, &m)| QPoly::one_minus_q_pow(a).pow(m - f.den.get(&a).copied().unwrap_or(0)))
                .product()
        };
        let (extra, n1, n2) = if self.extra == other.extra {
            (self.extra.clone(), self.num.clone(), other.num.clone())
        } else {
            (&self.extra * &other.extra, &self.num * &other.extra, &other.num * &self.extra)
        };
        QRationalFn { num: n1 * lift(self) + n2 * lift(other), den, extra }
    }

    /// `(1-q)`-adic valuation of the denominator minus that of the numerator.
    /// `None` for the zero function.
    pub fn pole_order_at_one(&self) -> Result<Option<i64>> {
        let Some((ve, _)) = self.extra.split_at_one() else {
            return Err(Error::SingularDenominator);
        };
        let Some((vn, _)) = self.num.split_at_one() else {
            return Ok(None);
        };
        let vd: usize = self.den.values().sum::<usize>() + ve;
        Ok(Some(vd as i64 - vn as i64))
    }

    /// Power series through `q^order`.
    pub fn expand(&self, order: usize) -> Result<QSeries> {
        let Some(v) = self.extra.q_valuation() else {
            return Err(Error::SingularDenominator);
        };
        let work = order + v;
        let mut s = self.num.to_series(work);
        for (&a, &m) in &self.den {
            for _ in 0..m {
                s.div_one_minus_q_pow(a);
            }
        }
        let unit = QPoly::from_coeffs(self.extra.coeffs()[v..].to_vec());
        let s = s.div(&unit.to_series(work))?;
        if s.coeffs()[..v].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotAPowerSeries);
        }
        Ok(QSeries::from_coeffs(s.coeffs()[v..].to_vec(), order))
    }

    /// Exact value at a rational point away from the poles.
    pub fn eval(&self, q: &Rat) -> Result<Rat> {
        let mut den = self.extra.eval(q);
        for (&a, &m) in &self.den {
            den *= QPoly::one_minus_q_pow(a).pow(m).eval(q);
        }
        if den.is_zero() {
            return Err(Error::SingularDenominator);
        }
        Ok(self.num.eval(q) / den)
    }

    pub fn eval_f64(&self, q: f64) -> f64 {
        let mut den = self.extra.eval_f64(q);
        for (&a, &m) in &self.den {
            let mut f = 1.0;
            let mut qa = 1.0;
            for _ in 0..a {
                qa *= q;
            }
            for _ in 0..m {
                f *= 1.0 - qa;
            }
            den *= f;
        }
        self.num.eval_f64(q) / den
    }
}

/// `lim_{q -> 1} (1-q)^n f(q)`, exactly.
///
/// Each `(1 - q^a)` contributes one power of `(1-q)` and the residual
/// `1 + q + ... + q^{a-1}`, which is `a` at `q = 1`.
pub fn limit_at_one(f: &QRationalFn, n: usize) -> Result<Rat> {
    let Some((ve, re)) = f.extra.split_at_one() else {
        return Err(Error::SingularDenominator);
    };
    let Some((vn, rn)) = f.num.split_at_one() else {
        return Ok(Rat::zero());
    };
    let vd = f.den.values().sum::<usize>() + ve;
    let found = vd as i64 - vn as i64;
    if found != n as i64 {
        return Err(Error::ValuationMismatch { expected: n, found });
    }
    let mut den = re.eval_one();
    for (&a, &m) in &f.den {
        for _ in 0..m {
            den *= Int::from(a);
        }
    }
    Ok(Rat::new(rn.eval_one(), den))
}

/// `n! · lim_{q -> 1} (1-q)^n f(q)`, which must be a nonnegative integer.
pub fn count_from_gf(f: &QRationalFn, n: usize) -> Result<Int> {
    let value = limit_at_one(f, n)? * Rat::from_integer(super::factorial(n));
    if !value.is_integer() || value.is_negative() {
        return Err(Error::NonIntegerResult);
    }
    Ok(value.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::factorial;
    use num_traits::One;

    #[test]
    fn expansions() {
        let f = QRationalFn::inverse_product([1]);
        assert_eq!(f.expand(3).unwrap(), QSeries::from_u64s(&[1, 1, 1, 1], 3));
        let f = QRationalFn::inverse_product([1, 2]);
        assert_eq!(f.expand(4).unwrap(), QSeries::from_u64s(&[1, 1, 2, 2, 3], 4));
        let f = QRationalFn::from_poly(QPoly::from_i64s(&[1, 1])).with_factor(3, 1);
        assert_eq!(f.expand(3).unwrap(), QSeries::from_u64s(&[1, 1, 0, 1], 3));
    }

    #[test]
    fn monomial_denominators() {
        // q^2 (1+q) / (q^2 (1-q)) = (1+q)/(1-q)
        let f = QRationalFn::from_poly(QPoly::from_i64s(&[0, 0, 1, 1]))
            .with_factor(1, 1)
            .over(&QPoly::q_pow(2));
        assert_eq!(f.expand(3).unwrap(), QSeries::from_u64s(&[1, 2, 2, 2], 3));
        let g = QRationalFn::one().over(&QPoly::q_pow(1));
        assert_eq!(g.expand(3), Err(Error::NotAPowerSeries));
        // -q in the denominator flips the sign
        let h = QRationalFn::from_poly(QPoly::q_pow(1)).over(&QPoly::from_i64s(&[0, -1]));
        assert_eq!(h.expand(2).unwrap().coeffs()[0], Int::from(-1));
    }

    #[test]
    fn limits() {
        let f = QRationalFn::inverse_product([1, 2]);
        assert_eq!(limit_at_one(&f, 2).unwrap(), Rat::new(1.into(), 2.into()));
        let f = QRationalFn::inverse_product(1..=5);
        assert_eq!(limit_at_one(&f, 5).unwrap(), Rat::new(1.into(), 120.into()));
        let f = QRationalFn::inverse_product([2]);
        assert_eq!(limit_at_one(&f, 2), Err(Error::ValuationMismatch { expected: 2, found: 1 }));
    }

    #[test]
    fn counts() {
        assert_eq!(count_from_gf(&QRationalFn::inverse_product([1, 2]), 2).unwrap(), Int::from(1));
        assert_eq!(count_from_gf(&QRationalFn::inverse_product(1..=5), 5).unwrap(), Int::from(1));
        assert_eq!(count_from_gf(&QRationalFn::inverse_product([1, 1]), 2).unwrap(), Int::from(2));
        // 1/(1-q)^2 (1-q^3) with N = 3 gives 3!/3 = 2
        let f = QRationalFn::inverse_product([1, 1, 3]);
        assert_eq!(count_from_gf(&f, 3).unwrap(), Int::from(2));
        // 1/(1-q^4) at N = 1: 1/4 is not an integer
        assert_eq!(count_from_gf(&QRationalFn::inverse_product([4]), 1), Err(Error::NonIntegerResult));
        assert_eq!(factorial(0), Int::one());
    }

    #[test]
    fn cancellation_in_numerator() {
        // (1 - q^2) / (1 - q)^3 has pole order 2 with limit 2
        let f = QRationalFn::from_poly(QPoly::one_minus_q_pow(2)).with_factor(1, 3);
        assert_eq!(f.pole_order_at_one().unwrap(), Some(2));
        assert_eq!(limit_at_one(&f, 2).unwrap(), Rat::from_integer(2.into()));
    }

    #[test]
    fn sums_share_denominators() {
        let a = QRationalFn::inverse_product([1]);
        let b = QRationalFn::inverse_product([2]);
        let s = a.add(&b);
        let want = QRationalFn::inverse_product([1]).expand(10).unwrap().add(&b.expand(10).unwrap());
        assert_eq!(s.expand(10).unwrap(), want);
    }
}
