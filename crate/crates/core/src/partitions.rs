//! Young diagrams.
//!
//! Cells use 1-based `(row, column)` coordinates: `(i, j)` with
//! `1 <= i <= len(Y)` and `1 <= j <= Y_i`.

use std::cmp::Ordering;
use std::fmt;

/// A partition `Y_1 >= Y_2 >= ... > 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

/// Arm and leg of a cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellStats {
    pub row: usize,
    pub col: usize,
    pub arm: usize,
    pub leg: usize,
}

impl CellStats {
    pub fn hook(&self) -> usize {
        self.arm + self.leg + 1
    }
}

#[derive(Debug, thiserror::Error)]
#[error("parts {0:?} are not a weakly decreasing list of positive integers")]
pub struct InvalidPartition(pub Vec<usize>);

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Self, InvalidPartition> {
        if rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(InvalidPartition(rows));
        }
        Ok(Partition(rows))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    /// Row length `Y_i`, 1-based; zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Y~_j = #{i : Y_i >= j}`.
    pub fn transpose(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((1..=width).map(|j| self.0.iter().take_while(|&&y| y >= j).count()).collect())
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &y)| (1..=y).map(move |j| (i + 1, j)))
    }

    pub fn cell_stats(&self) -> Vec<CellStats> {
        let tr = self.transpose();
        self.cells()
            .map(|(i, j)| CellStats { row: i, col: j, arm: self.row(i) - j, leg: tr.row(j) - i })
            .collect()
    }

    /// `sum_i Y_i^2`.
    pub fn sum_squares(&self) -> usize {
        self.0.iter().map(|y| y * y).sum()
    }

    /// Dominance order; `None` for incomparable partitions or different sizes.
    pub fn dominance_cmp(&self, other: &Partition) -> Option<Ordering> {
        if self.size() != other.size() {
            return None;
        }
        let (mut ge, mut le) = (true, true);
        let (mut a, mut b) = (0usize, 0usize);
        for i in 1..=self.len().max(other.len()) {
            a += self.row(i);
            b += other.row(i);
            ge &= a >= b;
            le &= a <= b;
        }
        match (ge, le) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Greater),
            (false, true) => Some(Ordering::Less),
            (false, false) => None,
        }
    }

    /// Multiplicity of each part size, indexed from 1.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut out = vec![0; self.0.first().copied().unwrap_or(0) + 1];
        for &y in &self.0 {
            out[y] += 1;
        }
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, y) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{y}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `n` in reverse-lexicographic order (`[n]` first,
/// `[1, ..., 1]` last). `n = 0` yields only the empty partition.
pub fn enumerate(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}
