//! Partitions, truncated straight and shifted diagrams, and the cell order
//! that every enumeration in this crate works against.
//!
//! A truncated shape `λ∖μ` keeps `λ_i - μ_i` boxes in row `i`. Straight rows are
//! left justified; shifted row `i` starts in grid column `i`. Cells are addressed
//! by `(row, pos)`, both 1-based, where `pos` counts boxes from the start of the
//! row. The grid column is derived from that.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new<I: IntoIterator<Item = usize>>(parts: I) -> Result<Self> {
        let mut parts: Vec<usize> = parts.into_iter().collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The staircase `(k, k-1, ..., 1)`.
    pub fn staircase(k: usize) -> Self {
        Partition((1..=k).rev().collect())
    }

    /// `rows` parts each equal to `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based); zero past the end.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// `self ⊆ outer` as Young diagrams.
    pub fn is_contained_in(&self, outer: &Partition) -> bool {
        self.len() <= outer.len() && self.0.iter().zip(&outer.0).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.get(0);
        Partition((0..width).map(|j| self.0.iter().take_while(|&&p| p > j).count()).collect())
    }

    /// Hook length of box `(i, j)`, 0-based, in the straight diagram.
    pub fn hook(&self, i: usize, j: usize) -> usize {
        let arm = self.0[i] - j - 1;
        let leg = self.0[i + 1..].iter().take_while(|&&p| p > j).count();
        arm + leg + 1
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` with at most `max_len` parts, each at most `max_part`,
/// in reverse lexicographic order.
pub fn partitions_of(n: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    fn rec(n: usize, max_len: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if max_len == 0 {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            // the remaining parts can hold at most p * (max_len - 1)
            if n - p > p * (max_len - 1) {
                break;
            }
            cur.push(p);
            rec(n - p, max_len - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_len, max_part, &mut Vec::new(), &mut out);
    out
}

/// All partitions contained in the `rows × cols` box.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 0..=rows * cols {
        out.extend(partitions_of(n, rows, cols));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Straight,
    Shifted,
}

/// A box of a truncated diagram: 1-based row and 1-based position within the row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub pos: usize,
}

impl Cell {
    pub fn new(row: usize, pos: usize) -> Self {
        Cell { row, pos }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedShape {
    outer: Partition,
    trunc: Partition,
    kind: Kind,
    row_lens: Vec<usize>,
}

impl TruncatedShape {
    pub fn new(outer: Partition, trunc: Partition, kind: Kind) -> Result<Self> {
        if kind == Kind::Shifted && !outer.is_strict() {
            return Err(Error::ShiftedNeedsDistinctParts);
        }
        if trunc.len() > outer.len() {
            return Err(Error::TruncationTooLarge { row: outer.len() + 1 });
        }
        let mut row_lens = Vec::with_capacity(outer.len());
        for i in 0..outer.len() {
            let (l, m) = (outer.get(i), trunc.get(i));
            if m > l {
                return Err(Error::TruncationTooLarge { row: i + 1 });
            }
            row_lens.push(l - m);
        }
        Ok(TruncatedShape { outer, trunc, kind, row_lens })
    }

    pub fn straight(outer: Partition) -> Self {
        Self::new(outer, Partition::empty(), Kind::Straight).expect("empty truncation always fits")
    }

    /// Shifted staircase `δ_n` truncated by `δ_k`.
    pub fn shifted_staircase(n: usize, k: usize) -> Result<Self> {
        Self::new(Partition::staircase(n), Partition::staircase(k), Kind::Shifted)
    }

    /// `m` rows of length `n`, truncated by `δ_k`.
    pub fn rect_minus_staircase(m: usize, n: usize, k: usize) -> Result<Self> {
        Self::new(Partition::rectangle(m, n), Partition::staircase(k), Kind::Straight)
    }

    /// `m` rows of length `n`, truncated by a `k × k` square missing its
    /// lower-left box, i.e. by `(k^{k-1}, k-1)`.
    pub fn rect_minus_almost_square(m: usize, n: usize, k: usize) -> Result<Self> {
        Self::new(Partition::rectangle(m, n), almost_square(k), Kind::Straight)
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn trunc(&self) -> &Partition {
        &self.trunc
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Number of rows, counting empty ones.
    pub fn rows(&self) -> usize {
        self.row_lens.len()
    }

    /// Boxes in row `row` (1-based); zero outside.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.row_lens.get(row - 1).copied().unwrap_or(0)
    }

    pub fn row_lens(&self) -> &[usize] {
        &self.row_lens
    }

    /// Grid column of the first box of `row`.
    pub fn row_start(&self, row: usize) -> usize {
        match self.kind {
            Kind::Straight => 1,
            Kind::Shifted => row,
        }
    }

    pub fn size(&self) -> usize {
        self.row_lens.iter().sum()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.pos >= 1 && cell.pos <= self.row_len(cell.row)
    }

    pub fn grid_col(&self, cell: Cell) -> usize {
        self.row_start(cell.row) + cell.pos - 1
    }

    /// The cell of `row` sitting in grid column `col`, if present.
    pub fn cell_at(&self, row: usize, col: usize) -> Option<Cell> {
        let start = self.row_start(row);
        if row == 0 || col < start {
            return None;
        }
        let cell = Cell::new(row, col - start + 1);
        self.contains(cell).then_some(cell)
    }

    /// Cell directly below in the same grid column.
    pub fn below(&self, cell: Cell) -> Option<Cell> {
        self.cell_at(cell.row + 1, self.grid_col(cell))
    }

    /// Cell directly above in the same grid column.
    pub fn above(&self, cell: Cell) -> Option<Cell> {
        if cell.row <= 1 {
            return None;
        }
        self.cell_at(cell.row - 1, self.grid_col(cell))
    }

    /// All cells in row-major order, which is a linear extension of the poset.
    pub fn cells(&self) -> Vec<Cell> {
        self.row_lens
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
            .collect()
    }

    pub fn poset(&self) -> ShapePoset {
        ShapePoset::of(self)
    }
}

/// `(k^{k-1}, k-1)`.
pub fn almost_square(k: usize) -> Partition {
    if k == 0 {
        return Partition::empty();
    }
    let mut parts = vec![k; k - 1];
    parts.push(k - 1);
    Partition::new(parts).expect("weakly decreasing by construction")
}

/// Covering relations of a truncated shape: row successors and the cell
/// directly below in the same grid column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapePoset {
    pub elements: Vec<Cell>,
    /// Index pairs `(smaller, larger)` into `elements`.
    pub covers: Vec<(usize, usize)>,
}

impl ShapePoset {
    pub fn of(shape: &TruncatedShape) -> Self {
        let elements = shape.cells();
        let index = |c: Cell| elements.binary_search(&c).expect("cell of this shape");
        let mut covers = Vec::new();
        for (a, &c) in elements.iter().enumerate() {
            let right = Cell::new(c.row, c.pos + 1);
            if shape.contains(right) {
                covers.push((a, index(right)));
            }
            if let Some(b) = shape.below(c) {
                covers.push((a, index(b)));
            }
        }
        ShapePoset { elements, covers }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Kahn's algorithm; `None` if there is a cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.len();
        let mut indeg = vec![0usize; n];
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in &self.covers {
            indeg[b] += 1;
            succ[a].push(b);
        }
        let mut ready: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop() {
            order.push(v);
            for &w in &succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(w);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Reflexive-transitive closure as a dense relation matrix.
    pub fn relation(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        let mut rel = vec![vec![false; n]; n];
        for (i, row) in rel.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in &self.covers {
            rel[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if rel[i][k] {
                    for j in 0..n {
                        if rel[k][j] {
                            rel[i][j] = true;
                        }
                    }
                }
            }
        }
        rel
    }
}
