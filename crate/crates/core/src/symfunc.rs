//! Schur functions at `q`-power specializations, RSK, and sums of Schur
//! functions over partitions of bounded length.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::closed::g_shifted;
use crate::error::{Error, Result};
use crate::exact::{factorial, Int, QPoly, QRationalFn, QSeries, Rat};
use crate::oracle::ssyt_series;
use crate::shape::{partitions_of, Partition};

/// Variables `(q^{a_1}, ..., q^{a_p})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPowerSpec(Vec<usize>);

impl QPowerSpec {
    pub fn new(exponents: Vec<usize>) -> Self {
        QPowerSpec(exponents)
    }

    /// `(q^start, q^{start+1}, ..., q^{start+count-1})`.
    pub fn principal(start: usize, count: usize) -> Self {
        QPowerSpec((start..start + count).collect())
    }

    pub fn exponents(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn has_repeats(&self) -> bool {
        let mut e = self.0.clone();
        e.sort_unstable();
        e.windows(2).any(|w| w[0] == w[1])
    }
}

/// Determinant over `Z[q]` by fraction-free elimination.
pub fn det(mut m: Vec<Vec<QPoly>>) -> Result<QPoly> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Domain("determinant of a non-square matrix".into()));
    }
    let mut sign = false;
    let mut prev = QPoly::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Ok(QPoly::zero());
        };
        if piv != k {
            m.swap(piv, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = v.div_exact(&prev)?;
            }
            m[i][k] = QPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = if n == 0 { QPoly::one() } else { m[n - 1][n - 1].clone() };
    Ok(if sign { -d } else { d })
}

/// `Π_{i<j} (x_i - x_j)` at the specialization.
fn vandermonde(spec: &QPowerSpec) -> QPoly {
    let e = spec.exponents();
    let mut acc = QPoly::one();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            acc = acc * QPoly::binomial(e[i], e[j]);
        }
    }
    acc
}

/// `s_λ` at the specialization, as a ratio of alternants.
pub fn schur_eval(lambda: &Partition, spec: &QPowerSpec) -> QPoly {
    let p = spec.len();
    if lambda.len() > p {
        return QPoly::zero();
    }
    if spec.has_repeats() {
        let max = spec.exponents().iter().copied().max().unwrap_or(0);
        return ssyt_series(lambda, &Partition::empty(), spec.exponents(), lambda.size() * max).to_poly();
    }
    let e = spec.exponents();
    let m: Vec<Vec<QPoly>> = (0..p)
        .map(|i| (0..p).map(|j| QPoly::q_pow(e[i] * (lambda.get(j) + p - 1 - j))).collect())
        .collect();
    let num = det(m).expect("square matrix");
    num.div_exact(&vandermonde(spec)).expect("alternant is divisible by the Vandermonde product")
}

/// `s_{λ/μ}` at the specialization, peeling one variable at a time: the boxes
/// holding the largest entry form a horizontal strip.
pub fn skew_schur_eval(lambda: &Partition, mu: &Partition, spec: &QPowerSpec) -> Result<QPoly> {
    if !mu.is_contained_in(lambda) {
        return Err(Error::InnerNotContained);
    }
    fn rec(lambda: &[usize], mu: &Partition, exps: &[usize]) -> QPoly {
        let size: usize = lambda.iter().sum();
        if size == mu.size() {
            return QPoly::one();
        }
        let Some((&last, rest)) = exps.split_last() else {
            return QPoly::zero();
        };
        // ν with μ ⊆ ν ⊆ λ and λ_{i+1} <= ν_i <= λ_i
        let mut total = QPoly::zero();
        let mut nu = vec![0; lambda.len()];
        fn strips(i: usize, lambda: &[usize], mu: &Partition, nu: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
            if i == lambda.len() {
                f(nu);
                return;
            }
            let lo = lambda.get(i + 1).copied().unwrap_or(0).max(mu.get(i));
            for v in lo..=lambda[i] {
                nu[i] = v;
                strips(i + 1, lambda, mu, nu, f);
            }
        }
        strips(0, lambda, mu, &mut nu, &mut |nu| {
            let removed = size - nu.iter().sum::<usize>();
            let sub = rec(nu, mu, rest);
            if !sub.is_zero() {
                total = &total + &sub.shift(removed * last);
            }
        });
        total
    }
    Ok(rec(lambda.parts(), mu, spec.exponents()))
}

/// Complete homogeneous `h_l` at the specialization.
pub fn homog_eval(l: usize, spec: &QPowerSpec) -> QPoly {
    // h^{(i)}_d = Σ_j h^{(i-1)}_{d-j} x_i^j, all degrees up to l at once
    let mut h: Vec<QPoly> = (0..=l).map(|d| if d == 0 { QPoly::one() } else { QPoly::zero() }).collect();
    for &a in spec.exponents() {
        let mut next = h.clone();
        for d in 1..=l {
            next[d] = &h[d] + &next[d - 1].shift(a);
        }
        h = next;
    }
    h.swap_remove(l)
}

/// `c_s = Σ_l h_l h_{l+|s|}` at the specialization, through `q^order`.
pub fn c_series(s: i64, spec: &QPowerSpec, order: usize) -> Result<QSeries> {
    if spec.exponents().contains(&0) {
        return Err(Error::NonconvergentSpec);
    }
    let s = s.unsigned_abs() as usize;
    if spec.is_empty() {
        return Ok(if s == 0 { QSeries::one(order) } else { QSeries::zero(order) });
    }
    // every variable has degree >= 1, so h_l starts at q^l
    let top = order + s;
    let mut h: Vec<QSeries> = (0..=top).map(|d| if d == 0 { QSeries::one(order) } else { QSeries::zero(order) }).collect();
    for &a in spec.exponents() {
        for d in 1..=top {
            let prev = h[d - 1].clone();
            h[d].add_assign_shifted(&prev, a);
        }
    }
    let mut out = QSeries::zero(order);
    for l in 0..=order {
        out = out.add(&h[l].mul(&h[l + s]));
    }
    Ok(out)
}

/// Nonnegative integer matrix, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: Vec<Vec<u64>>,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self> {
        let w = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != w) {
            return Err(Error::ShapeMismatch("matrix rows differ in length".into()));
        }
        Ok(IntMatrix { rows })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows: vec![vec![0; cols]; rows] }
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n_rows()).all(|i| (0..self.n_cols()).all(|j| self.rows.get(j).and_then(|r| r.get(i)) == Some(&self.rows[i][j])))
    }

    pub fn row_sums(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<u64> {
        (0..self.n_cols()).map(|j| self.rows.iter().map(|r| r[j]).sum()).collect()
    }

    /// Pairs `(i, j)`, 1-based, repeated `A[i][j]` times in lexicographic order.
    pub fn two_line_array(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            for (j, &a) in r.iter().enumerate() {
                for _ in 0..a {
                    out.push((i as u64 + 1, j as u64 + 1));
                }
            }
        }
        out
    }
}

/// Semistandard tableau of straight shape: rows weakly increase, columns strictly.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Tableau {
    pub rows: Vec<Vec<u64>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u64>>) -> Self {
        Tableau { rows }
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len)).unwrap_or_else(|_| Partition::empty())
    }

    pub fn is_semistandard(&self) -> bool {
        if Partition::new(self.rows.iter().map(Vec::len)).is_err() {
            return false;
        }
        self.rows.iter().enumerate().all(|(i, r)| {
            r.windows(2).all(|w| w[0] <= w[1]) && (i == 0 || r.iter().zip(&self.rows[i - 1]).all(|(b, a)| a < b))
        })
    }

    /// Multiplicity of each entry `1..=max`.
    pub fn content(&self, max: usize) -> Vec<u64> {
        let mut c = vec![0; max];
        for &v in self.rows.iter().flatten() {
            if v >= 1 && (v as usize) <= max {
                c[v as usize - 1] += 1;
            }
        }
        c
    }
}

/// Row insertion of the two-line array.
pub fn rsk(a: &IntMatrix) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<u64>> = Vec::new();
    let mut q: Vec<Vec<u64>> = Vec::new();
    for (i, j) in a.two_line_array() {
        let mut x = j;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![i]);
                break;
            }
            match p[row].iter().position(|&y| y > x) {
                Some(pos) => {
                    x = core::mem::replace(&mut p[row][pos], x);
                    row += 1;
                }
                None => {
                    p[row].push(x);
                    q[row].push(i);
                    break;
                }
            }
        }
    }
    (Tableau::new(p), Tableau::new(q))
}

/// Matrix with `rows × cols` entries whose insertion gives `(p, q)`.
pub fn rsk_inverse(p: &Tableau, q: &Tableau, rows: usize, cols: usize) -> Result<IntMatrix> {
    if p.shape() != q.shape() || p.rows.iter().map(Vec::len).ne(q.rows.iter().map(Vec::len)) {
        return Err(Error::ShapeMismatch("P and Q must have the same shape".into()));
    }
    if !p.is_semistandard() || !q.is_semistandard() {
        return Err(Error::Domain("P and Q must be semistandard".into()));
    }
    let mut p = p.rows.clone();
    let mut q = q.rows.clone();
    let mut m = IntMatrix::zero(rows, cols);
    loop {
        // largest entry of Q, rightmost among equals; it sits at the end of its row
        let Some((r, _)) = q
            .iter()
            .enumerate()
            .filter_map(|(r, row)| row.last().map(|&v| (r, v)))
            .max_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0).reverse()))
        else {
            break;
        };
        let i = q[r].pop().expect("nonempty row");
        let mut x = p[r].pop().expect("same shape");
        for row in (0..r).rev() {
            let pos = p[row].iter().rposition(|&y| y < x).expect("bumped entry exists");
            x = core::mem::replace(&mut p[row][pos], x);
        }
        if q[r].is_empty() {
            q.pop();
            p.pop();
        }
        let (ii, jj) = (i as usize, x as usize);
        if ii == 0 || jj == 0 || ii > rows || jj > cols {
            return Err(Error::EntryOutOfRange { entry: i.max(x), max: rows.max(cols) as u64 });
        }
        m.rows[ii - 1][jj - 1] += 1;
    }
    Ok(m)
}

/// Longest weakly increasing and longest strictly decreasing subsequence of
/// the bottom line of the two-line array.
pub fn schensted_stats(a: &IntMatrix) -> (usize, usize) {
    let word: Vec<u64> = a.two_line_array().into_iter().map(|(_, j)| j).collect();
    let mut inc = vec![1usize; word.len()];
    let mut dec = vec![1usize; word.len()];
    for k in 0..word.len() {
        for l in 0..k {
            if word[l] <= word[k] {
                inc[k] = inc[k].max(inc[l] + 1);
            }
            if word[l] > word[k] {
                dec[k] = dec[k].max(dec[l] + 1);
            }
        }
    }
    (inc.into_iter().max().unwrap_or(0), dec.into_iter().max().unwrap_or(0))
}

/// `Σ_{l(λ) <= r} s_λ(q^{1+s}, ..., q^{p+s})` through `q^order`.
pub fn restricted_schur_sum(r: usize, p: usize, s: usize, order: usize) -> QSeries {
    let spec = QPowerSpec::principal(1 + s, p);
    let mut out = QSeries::zero(order);
    for size in 0..=order / (1 + s) {
        for lam in partitions_of(size, r.min(p), size) {
            // lowest term is q^{(1+s)|λ| + n(λ)}
            let low: usize = (1 + s) * size + lam.parts().iter().enumerate().map(|(i, l)| i * l).sum::<usize>();
            if low > order {
                continue;
            }
            out = out.add(&schur_eval(&lam, &spec).to_series(order));
        }
    }
    out
}

/// The product `E_1(r, p, s)` governing the `q -> 1` limit of restricted sums.
pub fn e1(r: usize, p: usize, s: usize) -> Result<Rat> {
    if r > p {
        return Err(Error::Domain(format!("need r <= p, got r={r}, p={p}")));
    }
    if r == 0 {
        return Ok(Rat::one());
    }
    if r % 2 == 1 {
        let h = (r - 1) / 2;
        let ratio = Rat::new(factorial(h + s), factorial(p - h + s));
        return Ok(ratio * e1(r - 1, p, s)?);
    }
    let mut den = Int::one();
    for l in r + 1..2 * p - r + 2 {
        den *= Int::from(l + 2 * s).pow((r / 2) as u32);
    }
    for l in 2..=r {
        den *= Int::from((l + 2 * s) * (2 * p - l + 2 + 2 * s)).pow((l / 2) as u32);
    }
    Ok(Rat::new(Int::one(), den))
}

/// `lim (1-q)^N Σ_{l(λ) <= r} s_λ(q^{1+s}, ..., q^{p+s})` with `N = rp - C(r,2)`.
pub fn restricted_schur_limit(r: usize, p: usize, s: usize) -> Result<Rat> {
    if r == 0 || r > p {
        return Err(Error::Domain(format!("need 1 <= r <= p, got r={r}, p={p}")));
    }
    let n = r * p - r * (r - 1) / 2;
    let top = Partition::new((p - r + 1..=p).rev())?;
    let g = Rat::new(g_shifted(&top)?, factorial(n));
    Ok(g * e1(r, p, s)? / e1(r, p, 0)?)
}

/// `Σ_{l(λ) <= mmax} s_λ(x)` as an exact rational function, from the
/// determinant `det[x_i^{n-j} - (-1)^m [j > m] x_i^{n-m+j-1}]` over
/// `Π_{i<j} (x_i - x_j)(1 - x_i x_j) Π_i (1 - x_i)`.
pub fn king_rational(mmax: usize, spec: &QPowerSpec) -> Result<QRationalFn> {
    let e = spec.exponents();
    let n = e.len();
    if e.contains(&0) || spec.has_repeats() {
        return Err(Error::SingularDenominator);
    }
    let sign_neg = mmax.is_multiple_of(2);
    let m: Vec<Vec<QPoly>> = (0..n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let mut entry = QPoly::q_pow(e[i] * (n - j));
                    if j > mmax {
                        let other = QPoly::q_pow(e[i] * (n + j - mmax - 1));
                        // subtract (-1)^m x^{...}
                        entry = if sign_neg { entry - other } else { entry + other };
                    }
                    entry
                })
                .collect()
        })
        .collect();
    let num = det(m)?;
    let mut f = QRationalFn::from_poly(num).over(&vandermonde(spec));
    for i in 0..n {
        f = f.with_factor(e[i], 1);
        for j in i + 1..n {
            f = f.with_factor(e[i] + e[j], 1);
        }
    }
    Ok(f)
}

/// Series of [`king_rational`] through `q^order`.
pub fn king_restricted_sum(mmax: usize, spec: &QPowerSpec, order: usize) -> Result<QSeries> {
    king_rational(mmax, spec)?.expand(order)
}
