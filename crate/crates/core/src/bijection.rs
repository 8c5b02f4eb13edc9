//! Diagonal bijection between truncated plane partitions and reverse skew
//! semistandard tableaux.
//!
//! Reading a shifted plane partition by within-row position gives a chain of
//! partitions `λ^1 ⊇ λ^2 ⊇ ...` with `λ^j_i = T[i,j]`; labelling the boxes of
//! `λ^j / λ^{j+1}` by `j` yields a reverse tableau, and the chain is recovered
//! by counting labels.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::oracle::Filling;
use crate::shape::{Kind, Partition, TruncatedShape};

/// Skew tableau stored row by row, listing only the boxes of `outer/inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    pub outer: Partition,
    pub inner: Partition,
    pub rows: Vec<Vec<u64>>,
}

impl SkewTableau {
    pub fn new(outer: Partition, inner: Partition, rows: Vec<Vec<u64>>) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(Error::InnerNotContained);
        }
        let mut rows = rows;
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.len() > outer.len() {
            return Err(Error::ShapeMismatch(format!("{} rows for {} parts", rows.len(), outer.len())));
        }
        rows.resize(outer.len(), Vec::new());
        for (i, r) in rows.iter().enumerate() {
            if r.len() != outer.get(i) - inner.get(i) {
                return Err(Error::ShapeMismatch(format!("row {} has {} entries", i + 1, r.len())));
            }
        }
        Ok(SkewTableau { outer, inner, rows })
    }

    pub fn empty() -> Self {
        SkewTableau { outer: Partition::empty(), inner: Partition::empty(), rows: Vec::new() }
    }

    /// Entry in row `i`, absolute column `j` (both 0-based), if that box is in the skew shape.
    pub fn at(&self, i: usize, j: usize) -> Option<u64> {
        let start = self.inner.get(i);
        (j >= start && j < self.outer.get(i)).then(|| self.rows[i][j - start])
    }

    pub fn sum(&self) -> u64 {
        self.rows.iter().flatten().sum()
    }

    pub fn max_entry(&self) -> u64 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Weakly decreasing rows, strictly decreasing columns, entries positive.
    pub fn is_reverse_semistandard(&self) -> bool {
        for i in 0..self.outer.len() {
            for j in self.inner.get(i)..self.outer.get(i) {
                let v = self.at(i, j).unwrap_or(0);
                if v == 0 {
                    return false;
                }
                if let Some(left) = j.checked_sub(1).and_then(|l| self.at(i, l)) {
                    if left < v {
                        return false;
                    }
                }
                if let Some(up) = i.checked_sub(1).and_then(|u| self.at(u, j)) {
                    if up <= v {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Diagonal encoding of rows `T[i, 1..]`: the tableau of shape `λ^1/λ^depth`.
fn encode(rows: &[Vec<u64>], depth: usize) -> Result<SkewTableau> {
    let diag = |j: usize| -> Result<Partition> {
        let parts: Vec<usize> = rows.iter().filter(|r| r.len() >= j).map(|r| r[j - 1] as usize).collect();
        Partition::new(parts).map_err(|_| {
            Error::Domain(format!("position {j} of the rows is not weakly decreasing; the diagonals do not form partitions"))
        })
    };
    let chain: Vec<Partition> = (1..=depth).map(diag).collect::<Result<_>>()?;
    let (outer, inner) = (chain[0].clone(), chain[depth - 1].clone());
    let mut out = Vec::with_capacity(outer.len());
    for i in 0..outer.len() {
        let mut row = Vec::new();
        for j in 1..depth {
            let (hi, lo) = (chain[j - 1].get(i), chain[j].get(i));
            if lo > hi {
                return Err(Error::Domain("consecutive diagonals are not nested".into()));
            }
            row.extend(core::iter::repeat_n(j as u64, hi - lo));
        }
        // labels were pushed left to right in increasing order; reverse rows decrease
        row.reverse();
        out.push(row);
    }
    SkewTableau::new(outer, inner, out)
}

/// Inverse of [`encode`] for the given row lengths.
fn decode(p: &SkewTableau, row_lens: &[usize]) -> Result<Vec<Vec<u64>>> {
    if p.outer.len() > row_lens.len() {
        return Err(Error::LengthRestriction { length: p.outer.len(), max: row_lens.len() });
    }
    let rows = row_lens
        .iter()
        .enumerate()
        .map(|(i, &len)| {
            let labels: &[u64] = p.rows.get(i).map_or(&[], |r| r.as_slice());
            (1..=len as u64)
                .map(|j| (p.inner.get(i) + labels.iter().filter(|&&v| v >= j).count()) as u64)
                .collect()
        })
        .collect();
    Ok(rows)
}

fn staircase_params(shape: &TruncatedShape) -> Result<(usize, usize)> {
    let n = shape.outer().len();
    let k = shape.trunc().len();
    if shape.kind() != Kind::Shifted || *shape.outer() != Partition::staircase(n) || *shape.trunc() != Partition::staircase(k) {
        return Err(Error::ShapeMismatch("expected a shifted staircase truncated by a staircase".into()));
    }
    Ok((n, k))
}

fn check_entries(p: &SkewTableau, max: u64) -> Result<()> {
    match p.rows.iter().flatten().copied().find(|&v| v == 0 || v > max) {
        Some(v) => Err(Error::EntryOutOfRange { entry: v, max }),
        None if !p.is_reverse_semistandard() => {
            Err(Error::Domain("not a reverse semistandard tableau".into()))
        }
        None => Ok(()),
    }
}

/// Reverse skew tableau of a plane partition of shifted `δ_n ∖ δ_k`, with
/// entries in `1..=n-k-1`.
pub fn shifted_to_tableau(t: &Filling) -> Result<SkewTableau> {
    let (n, k) = staircase_params(t.shape())?;
    if !t.is_plane_partition() {
        return Err(Error::Domain("filling is not a plane partition".into()));
    }
    encode(t.rows(), n - k)
}

/// Plane partition of shifted `δ_n ∖ δ_k` with the given tableau.
pub fn tableau_to_shifted(p: &SkewTableau, n: usize, k: usize) -> Result<Filling> {
    if k >= n {
        return Err(Error::Domain("need k < n".into()));
    }
    check_entries(p, (n - k - 1) as u64)?;
    if p.outer.len() > n {
        return Err(Error::LengthRestriction { length: p.outer.len(), max: n });
    }
    if p.inner.len() > k + 1 {
        return Err(Error::LengthRestriction { length: p.inner.len(), max: k + 1 });
    }
    let shape = TruncatedShape::shifted_staircase(n, k)?;
    let rows = decode(p, shape.row_lens())?;
    Filling::new(shape, rows)
}

/// Parameters `(m, n, k)` of `m` rows of length `n` truncated by `δ_k`.
fn rect_params(shape: &TruncatedShape) -> Result<(usize, usize, usize)> {
    let m = shape.outer().len();
    let n = shape.outer().get(0);
    let k = shape.trunc().len();
    if shape.kind() != Kind::Straight || *shape.outer() != Partition::rectangle(m, n) || *shape.trunc() != Partition::staircase(k) {
        return Err(Error::ShapeMismatch("expected a rectangle truncated by a staircase".into()));
    }
    Ok((m, n, k))
}

/// The pair of tableaux of a plane partition of `n^m ∖ δ_k`, `n <= m`: the
/// part on and above the main diagonal, and the transpose of the part on
/// and below it.
pub fn straight_to_pair(t: &Filling) -> Result<(SkewTableau, SkewTableau)> {
    let (m, n, k) = rect_params(t.shape())?;
    if n > m {
        return Err(Error::RequiresNLeqM { n, m });
    }
    if k >= n {
        return Err(Error::Domain("need k < n".into()));
    }
    if !t.is_plane_partition() {
        return Err(Error::Domain("filling is not a plane partition".into()));
    }
    let rows = t.rows();
    let upper: Vec<Vec<u64>> = (0..n).map(|i| rows[i][i..].to_vec()).collect();
    let lower: Vec<Vec<u64>> = (0..n).map(|j| (j..m).map(|i| rows[i][j]).collect()).collect();
    Ok((encode(&upper, n - k)?, encode(&lower, m + 1)?))
}

/// Inverse of [`straight_to_pair`].
pub fn pair_to_straight(p: &SkewTableau, q: &SkewTableau, n: usize, m: usize, k: usize) -> Result<Filling> {
    if n > m {
        return Err(Error::RequiresNLeqM { n, m });
    }
    if k >= n {
        return Err(Error::Domain("need k < n".into()));
    }
    if p.outer != q.outer || !q.inner.is_empty() {
        return Err(Error::ShapeMismatch("the two tableaux must share their outer shape".into()));
    }
    check_entries(p, (n - k - 1) as u64)?;
    check_entries(q, m as u64)?;
    if p.outer.len() > n {
        return Err(Error::LengthRestriction { length: p.outer.len(), max: n });
    }
    if p.inner.len() > k + 1 {
        return Err(Error::LengthRestriction { length: p.inner.len(), max: k + 1 });
    }
    let upper_lens: Vec<usize> = TruncatedShape::shifted_staircase(n, k)?.row_lens().to_vec();
    let lower_lens: Vec<usize> = (0..n).map(|j| m - j).collect();
    let upper = decode(p, &upper_lens)?;
    let lower = decode(q, &lower_lens)?;
    let shape = TruncatedShape::rect_minus_staircase(m, n, k)?;
    let mut rows: Vec<Vec<u64>> = shape.row_lens().iter().map(|&l| vec![0; l]).collect();
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = if j >= i { upper[i][j - i] } else { lower[j][i - j] };
        }
    }
    let t = Filling::new(shape, rows)?;
    if !t.is_plane_partition() {
        return Err(Error::Domain("tableaux do not assemble into a plane partition".into()));
    }
    Ok(t)
}
