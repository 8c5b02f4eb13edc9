//! Brute-force ground truth: linear extensions, plane-partition series and
//! direct enumeration of the Schur-type sums that the closed forms replace.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{Int, QSeries};
use crate::shape::{partitions_of, Cell, Partition, TruncatedShape};

/// Cell budget for [`count_syt_oracle`].
pub const DEFAULT_SYT_BUDGET: usize = 22;
/// Cell budget for the plane-partition series oracle.
pub const DEFAULT_PP_BUDGET: usize = 40;

/// Nonnegative integers on the cells of a truncated shape, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Filling {
    shape: TruncatedShape,
    rows: Vec<Vec<u64>>,
}

impl Filling {
    pub fn new(shape: TruncatedShape, rows: Vec<Vec<u64>>) -> Result<Self> {
        let mut rows = rows;
        // trailing empty rows may be omitted by the caller
        while rows.len() < shape.rows() && shape.row_len(rows.len() + 1) == 0 {
            rows.push(Vec::new());
        }
        if rows.len() != shape.rows() {
            return Err(Error::ShapeMismatch(format!(
                "{} rows given, shape has {}",
                rows.len(),
                shape.rows()
            )));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != shape.row_len(i + 1) {
                return Err(Error::ShapeMismatch(format!(
                    "row {} has {} entries, shape wants {}",
                    i + 1,
                    r.len(),
                    shape.row_len(i + 1)
                )));
            }
        }
        Ok(Filling { shape, rows })
    }

    pub fn zero(shape: TruncatedShape) -> Self {
        let rows = shape.row_lens().iter().map(|&l| vec![0; l]).collect();
        Filling { shape, rows }
    }

    pub fn shape(&self) -> &TruncatedShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn get(&self, cell: Cell) -> u64 {
        self.rows[cell.row - 1][cell.pos - 1]
    }

    pub fn sum(&self) -> u64 {
        self.rows.iter().flatten().sum()
    }

    /// Weakly decreasing along rows and down grid columns.
    pub fn is_plane_partition(&self) -> bool {
        let cells = self.shape.cells();
        self.shape.poset().covers.iter().all(|&(a, b)| self.get(cells[a]) >= self.get(cells[b]))
    }

    /// A bijection onto `1..=N` increasing along rows and down columns.
    pub fn is_standard(&self) -> bool {
        let n = self.shape.size() as u64;
        let mut seen = vec![false; n as usize + 1];
        for &v in self.rows.iter().flatten() {
            if v == 0 || v > n || seen[v as usize] {
                return false;
            }
            seen[v as usize] = true;
        }
        let cells = self.shape.cells();
        self.shape.poset().covers.iter().all(|&(a, b)| self.get(cells[a]) < self.get(cells[b]))
    }
}

fn check_budget(size: usize, budget: usize) -> Result<()> {
    if size > budget {
        Err(Error::TooLarge { size, budget })
    } else {
        Ok(())
    }
}

/// Number of standard fillings, i.e. linear extensions of the cell poset.
///
/// Order ideals of a truncated shape are recorded by how many boxes of each
/// row are filled; the DP advances one box at a time.
pub fn count_syt_oracle(shape: &TruncatedShape, budget: usize) -> Result<Int> {
    check_budget(shape.size(), budget)?;
    let rows = shape.rows();
    let mut layer: BTreeMap<Vec<usize>, Int> = BTreeMap::new();
    layer.insert(vec![0; rows], Int::one());
    for _ in 0..shape.size() {
        let mut next: BTreeMap<Vec<usize>, Int> = BTreeMap::new();
        for (frontier, ways) in &layer {
            for r in 0..rows {
                let cell = Cell::new(r + 1, frontier[r] + 1);
                if !shape.contains(cell) {
                    continue;
                }
                if let Some(up) = shape.above(cell) {
                    if frontier[up.row - 1] < up.pos {
                        continue;
                    }
                }
                let mut f = frontier.clone();
                f[r] += 1;
                *next.entry(f).or_insert_with(Int::zero) += ways;
            }
        }
        layer = next;
    }
    Ok(layer.into_values().fold(Int::zero(), |a, b| a + b))
}

/// `Σ q^{|T|}` over plane partitions `T` of `shape`, through `q^order`.
pub fn pp_series_oracle(shape: &TruncatedShape, order: usize) -> Result<QSeries> {
    pp_series_with_fixed(shape, order, &[], DEFAULT_PP_BUDGET)
}

/// As [`pp_series_oracle`], restricted to fillings with the given cells
/// pinned to the given values.
///
/// Transfer matrix over rows: the state is the previous row's filling, the
/// value is the series of all partial fillings ending in it.
pub fn pp_series_with_fixed(
    shape: &TruncatedShape,
    order: usize,
    fixed: &[(Cell, u64)],
    budget: usize,
) -> Result<QSeries> {
    check_budget(shape.size(), budget)?;
    for &(c, _) in fixed {
        if !shape.contains(c) {
            return Err(Error::ShapeMismatch(format!("fixed cell ({}, {}) is not in the shape", c.row, c.pos)));
        }
    }
    let mut states: BTreeMap<Vec<u64>, QSeries> = BTreeMap::new();
    states.insert(Vec::new(), QSeries::one(order));
    for row in 1..=shape.rows() {
        let len = shape.row_len(row);
        let mut next: BTreeMap<Vec<u64>, QSeries> = BTreeMap::new();
        for (prev, series) in &states {
            let Some(low) = series.q_valuation() else { continue };
            let cap = (order - low) as u64;
            let mut bounds = Vec::with_capacity(len);
            let mut pinned = Vec::with_capacity(len);
            for pos in 1..=len {
                let cell = Cell::new(row, pos);
                bounds.push(shape.above(cell).map_or(cap, |up| prev[up.pos - 1].min(cap)));
                pinned.push(fixed.iter().find(|(c, _)| *c == cell).map(|&(_, v)| v));
            }
            let mut cur = Vec::with_capacity(len);
            each_row(&bounds, &pinned, cap, cap, &mut cur, &mut |vals, sum| {
                let slot = next.entry(vals.to_vec()).or_insert_with(|| QSeries::zero(order));
                slot.add_assign_shifted(series, sum as usize);
            });
        }
        states = next;
    }
    Ok(states.into_values().fold(QSeries::zero(order), |a, b| a.add(&b)))
}

/// Weakly decreasing rows under per-position bounds with total at most `cap`.
fn each_row(
    bounds: &[u64],
    pinned: &[Option<u64>],
    left: u64,
    cap: u64,
    cur: &mut Vec<u64>,
    emit: &mut dyn FnMut(&[u64], u64),
) {
    let j = cur.len();
    if j == bounds.len() {
        emit(cur, cap - left);
        return;
    }
    let hi = bounds[j].min(cur.last().copied().unwrap_or(u64::MAX)).min(left);
    let range = match pinned[j] {
        Some(v) if v <= hi => v..=v,
        Some(_) => return,
        None => 0..=hi,
    };
    for v in range {
        cur.push(v);
        each_row(bounds, pinned, left - v, cap, cur, emit);
        cur.pop();
    }
}

/// Every plane partition of `shape` with entries at most `max_entry`.
pub fn plane_partitions(shape: &TruncatedShape, max_entry: u64) -> Vec<Filling> {
    fn rec(shape: &TruncatedShape, cells: &[Cell], idx: usize, max: u64, rows: &mut Vec<Vec<u64>>, out: &mut Vec<Filling>) {
        let Some(&c) = cells.get(idx) else {
            out.push(Filling { shape: shape.clone(), rows: rows.clone() });
            return;
        };
        let mut hi = max;
        if c.pos > 1 {
            hi = hi.min(rows[c.row - 1][c.pos - 2]);
        }
        if let Some(up) = shape.above(c) {
            hi = hi.min(rows[up.row - 1][up.pos - 1]);
        }
        for v in 0..=hi {
            rows[c.row - 1][c.pos - 1] = v;
            rec(shape, cells, idx + 1, max, rows, out);
        }
    }
    let mut rows: Vec<Vec<u64>> = shape.row_lens().iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    rec(shape, &shape.cells(), 0, max_entry, &mut rows, &mut out);
    out
}

/// `Σ_T Π q^{weights[T(u) - 1]}` over semistandard fillings `T` of `outer/inner`
/// with entries in `1..=weights.len()`, through `q^order`. Plain backtracking.
pub(crate) fn ssyt_series(outer: &Partition, inner: &Partition, weights: &[usize], order: usize) -> QSeries {
    let mut cells = Vec::new();
    for i in 0..outer.len() {
        for j in inner.get(i)..outer.get(i) {
            cells.push((i, j));
        }
    }
    let min_w = weights.iter().copied().min().unwrap_or(0);
    let mut grid: Vec<Vec<usize>> = (0..outer.len()).map(|i| vec![0; outer.get(i)]).collect();
    let mut out = vec![0u64; order + 1];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        cells: &[(usize, usize)],
        idx: usize,
        inner: &Partition,
        weights: &[usize],
        min_w: usize,
        weight: usize,
        order: usize,
        grid: &mut Vec<Vec<usize>>,
        out: &mut [u64],
    ) {
        if weight + (cells.len() - idx) * min_w > order {
            return;
        }
        let Some(&(i, j)) = cells.get(idx) else {
            out[weight] += 1;
            return;
        };
        let mut lo = 1;
        if j > inner.get(i) {
            lo = lo.max(grid[i][j - 1]);
        }
        if i > 0 && j >= inner.get(i - 1) {
            lo = lo.max(grid[i - 1][j] + 1);
        }
        for v in lo..=weights.len() {
            grid[i][j] = v;
            rec(cells, idx + 1, inner, weights, min_w, weight + weights[v - 1], order, grid, out);
        }
        grid[i][j] = 0;
    }
    if inner.is_contained_in(outer) {
        rec(&cells, 0, inner, weights, min_w, 0, order, &mut grid, &mut out);
    }
    QSeries::from_u64s(&out, order)
}

/// Partitions of size at most `max_size` with at most `max_len` parts.
fn partitions_up_to(max_size: usize, max_len: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(|s| partitions_of(s, max_len, s)).collect()
}

/// Partitions `λ ⊇ μ` with `l(λ) <= max_len` and `|λ/μ| <= extra`.
fn supersets(inner: &Partition, max_len: usize, extra: usize) -> Vec<Partition> {
    partitions_up_to(inner.size() + extra, max_len)
        .into_iter()
        .filter(|l| inner.is_contained_in(l))
        .collect()
}

/// `Σ_{λ ⊇ μ} s_{λ/μ}(q, ..., q^{n-k-1}) q^{(n-k)|μ|}` with `l(λ) <= n` and
/// `l(μ) <= k+1`, by listing every skew tableau.
pub fn s_sum_oracle(n: usize, k: usize, order: usize) -> Result<QSeries> {
    if k >= n {
        return Err(Error::Domain("need k < n".into()));
    }
    check_budget(order, 60)?;
    let vars: Vec<usize> = (1..n - k).collect();
    let shift = n - k;
    let mut total = QSeries::zero(order);
    for mu in partitions_up_to(order / shift, k + 1) {
        let base = shift * mu.size();
        let room = order - base;
        let lams = if vars.is_empty() { vec![mu.clone()] } else { supersets(&mu, n, room) };
        for lam in lams {
            let s = ssyt_series(&lam, &mu, &vars, room);
            total.add_assign_shifted(&QSeries::from_coeffs(s.coeffs().to_vec(), order), base);
        }
    }
    Ok(total)
}

/// `Σ s_λ(1, q, ..., q^{m-1}) s_{λ/μ}(q, ..., q^{n-k-1}) q^{(n-k)|μ|}` with
/// `l(λ) <= n`, `l(μ) <= k+1`, by listing tableaux.
pub fn d_sum_oracle(n: usize, m: usize, k: usize, order: usize) -> Result<QSeries> {
    if k >= n {
        return Err(Error::Domain("need k < n".into()));
    }
    check_budget(order, 60)?;
    let x: Vec<usize> = (1..n - k).collect();
    let z: Vec<usize> = (0..m).collect();
    let shift = n - k;
    let empty = Partition::empty();
    let mut total = QSeries::zero(order);
    for mu in partitions_up_to(order / shift, k + 1) {
        let base = shift * mu.size();
        let room = order - base;
        // every box of λ/μ carries weight at least 1
        let lams = if x.is_empty() { vec![mu.clone()] } else { supersets(&mu, n, room) };
        for lam in lams {
            let skew = ssyt_series(&lam, &mu, &x, room);
            if skew.q_valuation().is_none() {
                continue;
            }
            let straight = ssyt_series(&lam, &empty, &z, room);
            let term = skew.mul(&straight);
            total.add_assign_shifted(&QSeries::from_coeffs(term.coeffs().to_vec(), order), base);
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::Kind;

    fn shape(outer: &[usize], trunc: &[usize], kind: Kind) -> TruncatedShape {
        TruncatedShape::new(Partition::new(outer.iter().copied()).unwrap(), Partition::new(trunc.iter().copied()).unwrap(), kind)
            .unwrap()
    }

    #[test]
    fn syt_examples() {
        let s = TruncatedShape::shifted_staircase(3, 1).unwrap();
        assert_eq!(count_syt_oracle(&s, 22).unwrap(), Int::from(1));
        let s = TruncatedShape::rect_minus_staircase(3, 3, 1).unwrap();
        assert_eq!(count_syt_oracle(&s, 22).unwrap(), Int::from(12));
        let s = shape(&[3, 3, 3], &[2, 1], Kind::Straight);
        assert_eq!(count_syt_oracle(&s, 22).unwrap(), Int::from(2));
        let s = TruncatedShape::straight(Partition::empty());
        assert_eq!(count_syt_oracle(&s, 22).unwrap(), Int::from(1));
    }

    #[test]
    fn syt_budget() {
        let s = TruncatedShape::straight(Partition::rectangle(5, 5));
        assert_eq!(count_syt_oracle(&s, 22), Err(Error::TooLarge { size: 25, budget: 22 }));
    }

    #[test]
    fn syt_by_permutations() {
        // fill with every permutation of 1..N and keep the standard ones
        fn permutations(n: u64) -> Vec<Vec<u64>> {
            if n == 0 {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for i in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(i, n);
                    out.push(q);
                }
            }
            out
        }
        let shapes = [
            shape(&[3, 3, 3], &[1], Kind::Straight),
            shape(&[4, 3, 1], &[2], Kind::Shifted),
            shape(&[3, 3, 2], &[3], Kind::Straight),
            TruncatedShape::shifted_staircase(3, 0).unwrap(),
        ];
        for s in shapes {
            let n = s.size();
            let mut count = 0u64;
            for p in permutations(n as u64) {
                let mut rows = Vec::new();
                let mut it = p.into_iter();
                for &l in s.row_lens() {
                    rows.push(it.by_ref().take(l).collect());
                }
                if Filling::new(s.clone(), rows).unwrap().is_standard() {
                    count += 1;
                }
            }
            assert_eq!(count_syt_oracle(&s, 22).unwrap(), Int::from(count), "{s:?}");
        }
    }

    #[test]
    fn pp_series_examples() {
        let one = TruncatedShape::straight(Partition::new([1]).unwrap());
        assert_eq!(pp_series_oracle(&one, 3).unwrap(), QSeries::from_u64s(&[1, 1, 1, 1], 3));
        let row = TruncatedShape::straight(Partition::new([2]).unwrap());
        assert_eq!(pp_series_oracle(&row, 4).unwrap(), QSeries::from_u64s(&[1, 1, 2, 2, 3], 4));
        let chain = TruncatedShape::shifted_staircase(3, 1).unwrap();
        assert_eq!(pp_series_oracle(&chain, 5).unwrap(), QSeries::inverse_product(&[1, 2, 3, 4, 5], 5));
    }

    #[test]
    fn pp_series_counts_enumeration() {
        let s = TruncatedShape::rect_minus_staircase(3, 3, 1).unwrap();
        let order = 6;
        let mut want = vec![0u64; order + 1];
        for t in plane_partitions(&s, order as u64) {
            if t.sum() as usize <= order {
                want[t.sum() as usize] += 1;
            }
        }
        assert_eq!(pp_series_oracle(&s, order).unwrap(), QSeries::from_u64s(&want, order));
    }

    #[test]
    fn fixed_cells() {
        let one = TruncatedShape::straight(Partition::new([1]).unwrap());
        let s = pp_series_with_fixed(&one, 5, &[(Cell::new(1, 1), 2)], 40).unwrap();
        assert_eq!(s, QSeries::from_u64s(&[0, 0, 1], 5));
        let sq = TruncatedShape::straight(Partition::rectangle(2, 2));
        let s = pp_series_with_fixed(&sq, 8, &[(Cell::new(1, 2), 0)], 40).unwrap();
        // top-right zero forces the bottom-right zero: a 2-chain (1,1) ≥ (2,1)
        assert_eq!(s, QSeries::inverse_product(&[1, 2], 8));
    }

    #[test]
    fn filling_validation() {
        let s = TruncatedShape::shifted_staircase(3, 1).unwrap();
        assert!(Filling::new(s.clone(), vec![vec![3, 2], vec![2, 1], vec![1]]).unwrap().is_plane_partition());
        assert!(!Filling::new(s.clone(), vec![vec![3, 2], vec![3, 1], vec![1]]).unwrap().is_plane_partition());
        assert!(matches!(Filling::new(s, vec![vec![1]]), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn zero_coefficient_is_one() {
        for s in [
            TruncatedShape::shifted_staircase(4, 1).unwrap(),
            TruncatedShape::rect_minus_almost_square(3, 3, 2).unwrap(),
        ] {
            assert_eq!(pp_series_oracle(&s, 4).unwrap().coeff(0), &Int::one());
        }
    }

    #[test]
    fn skew_tableaux_series() {
        // s_{21/1}(1, q): two independent cells
        let s = ssyt_series(&Partition::new([2, 1]).unwrap(), &Partition::new([1]).unwrap(), &[0, 1], 6);
        assert_eq!(s, QSeries::from_u64s(&[1, 2, 1], 6));
        // s_{21}(1, q, q^2) has 8 tableaux
        let s = ssyt_series(&Partition::new([2, 1]).unwrap(), &Partition::empty(), &[0, 1, 2], 10);
        assert_eq!(s.to_poly().eval_one(), Int::from(8));
    }

    #[test]
    fn schur_sums_match_plane_partitions() {
        let s = s_sum_oracle(3, 1, 8).unwrap();
        assert_eq!(s, pp_series_oracle(&TruncatedShape::shifted_staircase(3, 1).unwrap(), 8).unwrap());
        let s = s_sum_oracle(4, 1, 8).unwrap();
        assert_eq!(s, pp_series_oracle(&TruncatedShape::shifted_staircase(4, 1).unwrap(), 8).unwrap());
        for (n, m, k, order) in [(2, 2, 1, 6), (3, 3, 1, 6), (2, 3, 0, 6), (3, 4, 1, 6), (3, 3, 2, 6)] {
            let d = d_sum_oracle(n, m, k, order).unwrap();
            let pp = pp_series_oracle(&TruncatedShape::rect_minus_staircase(m, n, k).unwrap(), order).unwrap();
            assert_eq!(d, pp, "({n},{m},{k})");
        }
    }
}
