//! Integer partitions, Young diagram cells and growth paths.
//!
//! Cells are 1-indexed `(row, col)`. The empty partition is a valid value and
//! seeds every growth path.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, Error, Result};
use crate::exact::{factorial, int, Alpha, Scalar};

/// A weakly decreasing sequence of positive integers.
///
/// The derived ordering is lexicographic on the parts, which for partitions of
/// the same size is a linear extension of dominance order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A cell of a Young diagram, 1-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// `col - row`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    /// `alpha (col - 1) - (row - 1)`; equals [`Cell::content`] at `alpha = 1`.
    pub fn alpha_content(&self, alpha: &Alpha) -> Scalar {
        alpha.value() * int(self.col as i64 - 1) - int(self.row as i64 - 1)
    }

    pub fn alpha_content_f64(&self, alpha: f64) -> f64 {
        alpha * (self.col as f64 - 1.0) - (self.row as f64 - 1.0)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return domain(format!("partition parts must be positive: {parts:?}"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("partition parts must be weakly decreasing: {parts:?}"));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// `(2, 1^{n-2})`, the cycle type of a transposition in `S_n`.
    pub fn transposition_type(n: usize) -> Result<Self> {
        if n < 2 {
            return domain(format!("no transpositions in S_{n}"));
        }
        let mut parts = vec![2];
        parts.extend(std::iter::repeat_n(1, n - 2));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` for a 1-based row index, 0 past the last row.
    pub fn part(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts `l(λ)`.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// `λ'_c`, the length of column `c` (1-based).
    pub fn column_length(&self, col: usize) -> usize {
        if col == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= col).count()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// Whether the diagram of `other` lies inside that of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length()
            && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |c| Cell::new(i + 1, c)))
    }

    fn check_cell(&self, cell: Cell) -> Result<()> {
        if self.contains_cell(cell) {
            Ok(())
        } else {
            domain(format!("cell {cell} is outside the diagram of {self}"))
        }
    }

    pub fn arm(&self, cell: Cell) -> Result<usize> {
        self.check_cell(cell)?;
        Ok(self.part(cell.row) - cell.col)
    }

    pub fn leg(&self, cell: Cell) -> Result<usize> {
        self.check_cell(cell)?;
        Ok(self.column_length(cell.col) - cell.row)
    }

    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        Ok(self.arm(cell)? + self.leg(cell)? + 1)
    }

    /// Arm and leg of every cell, row-major. Avoids the per-cell bound checks.
    pub(crate) fn arm_legs(&self) -> Vec<(Cell, usize, usize)> {
        let conj = self.conjugate();
        self.cells()
            .map(|c| (c, self.parts[c.row - 1] - c.col, conj.parts[c.col - 1] - c.row))
            .collect()
    }

    pub fn hook_product(&self) -> BigUint {
        self.arm_legs()
            .into_iter()
            .fold(BigUint::one(), |acc, (_, a, l)| acc * BigUint::from(a + l + 1))
    }

    /// Number of standard Young tableaux, `n! / Π h(x)`.
    pub fn syt_count(&self) -> BigUint {
        factorial(self.size()) / self.hook_product()
    }

    /// Cells that can be added keeping a partition, top row first.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for row in 1..=self.length() + 1 {
            let len = self.part(row);
            if row == 1 || self.part(row - 1) > len {
                out.push(Cell::new(row, len + 1));
            }
        }
        out
    }

    /// Inner corners, top row first.
    pub fn removable_cells(&self) -> Vec<Cell> {
        (1..=self.length())
            .filter(|&row| self.part(row) > self.part(row + 1))
            .map(|row| Cell::new(row, self.part(row)))
            .collect()
    }

    pub fn with_cell(&self, cell: Cell) -> Result<Partition> {
        if !self.addable_cells().contains(&cell) {
            return domain(format!("cell {cell} is not addable to {self}"));
        }
        let mut parts = self.parts.clone();
        if cell.row > parts.len() {
            parts.push(1);
        } else {
            parts[cell.row - 1] += 1;
        }
        Ok(Partition { parts })
    }

    pub fn without_cell(&self, cell: Cell) -> Result<Partition> {
        if !self.removable_cells().contains(&cell) {
            return domain(format!("cell {cell} is not removable from {self}"));
        }
        let mut parts = self.parts.clone();
        parts[cell.row - 1] -= 1;
        if parts[cell.row - 1] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// All partitions obtained by adding one cell, paired with that cell.
    pub fn up_covers(&self) -> Vec<(Cell, Partition)> {
        self.addable_cells()
            .into_iter()
            .map(|c| (c, self.with_cell(c).expect("addable")))
            .collect()
    }

    /// All partitions obtained by removing one cell, paired with that cell.
    pub fn down_covers(&self) -> Vec<(Cell, Partition)> {
        self.removable_cells()
            .into_iter()
            .map(|c| (c, self.without_cell(c).expect("removable")))
            .collect()
    }

    /// If `self` covers `smaller` (one extra cell), that cell.
    pub fn cover_cell(&self, smaller: &Partition) -> Option<Cell> {
        if self.size() != smaller.size() + 1 || !self.contains(smaller) {
            return None;
        }
        (1..=self.length())
            .find(|&r| self.part(r) != smaller.part(r))
            .map(|r| Cell::new(r, self.part(r)))
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    pub fn content_sum(&self) -> i64 {
        self.cells().map(|c| c.content()).sum()
    }

    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 1..=self.length().max(other.length()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Appends `k` parts equal to 1.
    pub fn plus_ones(&self, k: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat_n(1, k));
        Partition { parts }
    }

    /// Removes `k` parts equal to 1; `None` when fewer than `k` exist.
    pub fn minus_ones(&self, k: usize) -> Option<Partition> {
        if self.multiplicity(1) < k {
            return None;
        }
        let mut parts = self.parts.clone();
        parts.truncate(parts.len() - k);
        Some(Partition { parts })
    }

    /// The partition with all parts equal to 1 removed.
    pub fn without_fixed_points(&self) -> Partition {
        Partition {
            parts: self.parts.iter().copied().filter(|&p| p > 1).collect(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in reverse-lexicographic order: `(n)` first,
/// `(1^n)` last. `n = 0` yields the empty partition once.
pub fn partitions_of(n: usize) -> PartitionIter {
    PartitionIter {
        next: Some(Partition::row(n)),
    }
}

pub struct PartitionIter {
    next: Option<Partition>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = prev_revlex(&current);
        Some(current)
    }
}

/// Lexicographic predecessor among partitions of the same size.
fn prev_revlex(p: &Partition) -> Option<Partition> {
    let parts = &p.parts;
    // rightmost part greater than 1
    let idx = parts.iter().rposition(|&x| x > 1)?;
    let mut out: Vec<usize> = parts[..idx].to_vec();
    let k = parts[idx] - 1;
    out.push(k);
    let mut rest = parts.len() - idx; // ones after idx plus the unit taken from parts[idx]
    while rest > 0 {
        let take = rest.min(k);
        out.push(take);
        rest -= take;
    }
    Some(Partition { parts: out })
}

/// A chain `∅ = λ(0) ⊂ λ(1) ⊂ … ⊂ λ(n)` adding one cell per step.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrowthPath {
    chain: Vec<Partition>,
}

impl GrowthPath {
    pub fn new(chain: Vec<Partition>) -> Result<Self> {
        match chain.first() {
            Some(p) if p.is_empty() => {}
            _ => return domain("growth path must start at the empty partition"),
        }
        for w in chain.windows(2) {
            if w[1].cover_cell(&w[0]).is_none() {
                return domain(format!("{} does not cover {}", w[1], w[0]));
            }
        }
        Ok(GrowthPath { chain })
    }

    /// Builds the path from the cells in the order they were added.
    pub fn from_cells(cells: &[Cell]) -> Result<Self> {
        let mut chain = vec![Partition::empty()];
        for &c in cells {
            let next = chain.last().expect("nonempty").with_cell(c)?;
            chain.push(next);
        }
        Ok(GrowthPath { chain })
    }

    /// Every partition including the empty seed; `shapes()[j]` has size `j`.
    pub fn shapes(&self) -> &[Partition] {
        &self.chain
    }

    /// `λ(j)`.
    pub fn shape(&self, j: usize) -> &Partition {
        &self.chain[j]
    }

    pub fn len(&self) -> usize {
        self.chain.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn endpoint(&self) -> &Partition {
        self.chain.last().expect("nonempty")
    }

    /// The cell added at step `j = 1..=n`; index 0 holds the first cell.
    pub fn added_cells(&self) -> Vec<Cell> {
        self.chain
            .windows(2)
            .map(|w| w[1].cover_cell(&w[0]).expect("validated"))
            .collect()
    }
}

/// Every standard Young tableau of shape `shape`, as a growth path.
pub fn syt_enumerate(shape: &Partition) -> impl Iterator<Item = GrowthPath> {
    let mut out = Vec::new();
    let mut stack = vec![shape.clone()];
    collect_paths(&mut stack, &mut out);
    out.into_iter()
}

fn collect_paths(stack: &mut Vec<Partition>, out: &mut Vec<GrowthPath>) {
    let top = stack.last().expect("nonempty").clone();
    if top.is_empty() {
        let chain = stack.iter().rev().cloned().collect();
        out.push(GrowthPath { chain });
        return;
    }
    for (_, smaller) in top.down_covers() {
        stack.push(smaller);
        collect_paths(stack, out);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Partition numbers from Euler's pentagonal recurrence.
    fn partition_numbers(max: usize) -> Vec<u64> {
        let mut p = vec![0i64; max + 1];
        p[0] = 1;
        for n in 1..=max {
            let mut acc = 0i64;
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * p[n - g1];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= n {
                    acc += sign * p[n - g2];
                }
            }
            p[n] = acc;
        }
        p.into_iter().map(|x| x as u64).collect()
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("3,x".parse::<Partition>().is_err());
        assert_eq!(p("-"), Partition::empty());
        assert_eq!(p("4,2,1").to_string(), "4,2,1");
        assert_eq!(Partition::empty().to_string(), "-");
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("4,2,1").conjugate(), p("3,2,1,1"));
        assert_eq!(p("5").conjugate(), Partition::column(5));
        assert_eq!(p("3,2").conjugate(), p("2,2,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn hooks_arms_legs() {
        let l = p("4,2,1");
        assert_eq!(l.hook_length(Cell::new(1, 1)).unwrap(), 6);
        assert_eq!(l.hook_length(Cell::new(2, 2)).unwrap(), 1);
        assert_eq!(l.arm(Cell::new(1, 2)).unwrap(), 2);
        assert_eq!(l.leg(Cell::new(1, 2)).unwrap(), 1);
        assert_eq!(l.hook_length(Cell::new(1, 2)).unwrap(), 4);
        let hooks: Vec<_> = l.cells().map(|c| l.hook_length(c).unwrap()).collect();
        assert_eq!(hooks, vec![6, 4, 2, 1, 3, 1, 1]);
        assert_eq!(l.hook_product(), BigUint::from(144u32));
        assert_eq!(p("1").hook_length(Cell::new(1, 1)).unwrap(), 1);
        let m = p("3,2");
        assert_eq!((m.arm(Cell::new(1, 1)).unwrap(), m.leg(Cell::new(1, 1)).unwrap()), (2, 1));
        assert_eq!((m.arm(Cell::new(1, 3)).unwrap(), m.leg(Cell::new(1, 3)).unwrap()), (0, 0));
        assert!(matches!(m.hook_length(Cell::new(2, 3)), Err(Error::Domain(_))));
        assert!(m.arm(Cell::new(0, 1)).is_err());
    }

    #[test]
    fn contents() {
        assert_eq!(Cell::new(1, 1).content(), 0);
        assert_eq!(Cell::new(2, 1).content(), -1);
        assert_eq!(Cell::new(1, 4).content(), 3);
        let a = Alpha::from_ratio(5, 3).unwrap();
        assert_eq!(Cell::new(1, 2).alpha_content(&a), a.value().clone());
        assert_eq!(Cell::new(2, 1).alpha_content(&a), int(-1));
        assert_eq!(Cell::new(3, 3).alpha_content(&Alpha::one()), int(0));
    }

    #[test]
    fn corners() {
        assert_eq!(p("1").addable_cells(), vec![Cell::new(1, 2), Cell::new(2, 1)]);
        assert_eq!(p("3,2").removable_cells(), vec![Cell::new(1, 3), Cell::new(2, 2)]);
        assert_eq!(Partition::empty().addable_cells(), vec![Cell::new(1, 1)]);
        assert!(Partition::empty().removable_cells().is_empty());
        assert!(p("2,2").with_cell(Cell::new(2, 3)).is_err());
        assert_eq!(p("2,2").with_cell(Cell::new(3, 1)).unwrap(), p("2,2,1"));
        assert_eq!(p("2,1").without_cell(Cell::new(2, 1)).unwrap(), p("2"));
        assert_eq!(p("3,1").cover_cell(&p("3")), Some(Cell::new(2, 1)));
        assert_eq!(p("3,1").cover_cell(&p("2,1,1")), None);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(partitions_of(4).count(), 5);
        assert_eq!(partitions_of(0).collect::<Vec<_>>(), vec![Partition::empty()]);
        assert_eq!(partitions_of(10).count(), 42);
        let numbers = partition_numbers(20);
        for n in 0..=20 {
            assert_eq!(partitions_of(n).count() as u64, numbers[n], "n = {n}");
        }
        let four: Vec<String> = partitions_of(4).map(|q| q.to_string()).collect();
        assert_eq!(four, vec!["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
    }

    #[test]
    fn enumeration_is_strictly_decreasing_and_valid() {
        for n in 0..=15 {
            let all: Vec<_> = partitions_of(n).collect();
            for w in all.windows(2) {
                assert!(w[0] > w[1]);
            }
            assert!(all.iter().all(|q| q.size() == n));
        }
    }

    #[test]
    fn syt_examples() {
        assert_eq!(syt_enumerate(&p("2,1")).count(), 2);
        assert_eq!(p("2,1").syt_count(), BigUint::from(2u32));
        assert_eq!(p("6").syt_count(), BigUint::one());
        assert_eq!(p("4,2,1").syt_count(), BigUint::from(35u32));
        assert_eq!(syt_enumerate(&p("4,2,1")).count(), 35);
    }

    #[test]
    fn n_stat_examples() {
        assert_eq!(p("5").n_stat(), 0);
        assert_eq!(p("1,1,1").n_stat(), 3);
        assert_eq!(p("3,2").n_stat(), 2);
    }

    #[test]
    fn exhaustive_invariants_to_twelve() {
        for n in 0..=12 {
            for l in partitions_of(n) {
                let c = l.conjugate();
                assert_eq!(c.conjugate(), l);
                assert_eq!(l.content_sum(), c.n_stat() as i64 - l.n_stat() as i64);
                for cell in l.cells() {
                    let (a, g) = (l.arm(cell).unwrap(), l.leg(cell).unwrap());
                    assert_eq!(l.hook_length(cell).unwrap(), a + g + 1);
                    let t = Cell::new(cell.col, cell.row);
                    assert_eq!(a, c.leg(t).unwrap());
                    assert_eq!(g, c.arm(t).unwrap());
                }
            }
        }
    }

    #[test]
    fn syt_count_matches_path_enumeration_to_twelve() {
        // number of saturated chains from ∅, by dynamic programming over levels
        use std::collections::HashMap;
        let mut ways: HashMap<Partition, BigUint> = HashMap::new();
        ways.insert(Partition::empty(), BigUint::one());
        for n in 0..12 {
            let mut next: HashMap<Partition, BigUint> = HashMap::new();
            for l in partitions_of(n) {
                let w = ways[&l].clone();
                for (_, big) in l.up_covers() {
                    *next.entry(big).or_default() += &w;
                }
            }
            for l in partitions_of(n + 1) {
                assert_eq!(next[&l], l.syt_count(), "{l}");
            }
            ways = next;
        }
        for n in 0..=7 {
            for l in partitions_of(n) {
                let paths: Vec<_> = syt_enumerate(&l).collect();
                assert_eq!(BigUint::from(paths.len()), l.syt_count());
                for path in &paths {
                    assert_eq!(path.endpoint(), &l);
                    assert_eq!(path.len(), n);
                }
            }
        }
    }

    #[test]
    fn growth_path_validation() {
        let path = GrowthPath::from_cells(&[Cell::new(1, 1), Cell::new(2, 1), Cell::new(1, 2)]).unwrap();
        assert_eq!(path.endpoint(), &p("2,1"));
        assert_eq!(path.added_cells()[1], Cell::new(2, 1));
        assert!(GrowthPath::from_cells(&[Cell::new(1, 2)]).is_err());
        assert!(GrowthPath::new(vec![p("1"), p("2")]).is_err());
        assert!(GrowthPath::new(vec![Partition::empty(), p("2")]).is_err());
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1usize..8, 0..8).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(l in arb_partition()) {
            prop_assert_eq!(l.to_string().parse::<Partition>().unwrap(), l);
        }

        #[test]
        fn add_then_remove_is_identity(l in arb_partition()) {
            for (cell, big) in l.up_covers() {
                prop_assert!(big.removable_cells().contains(&cell));
                prop_assert_eq!(big.without_cell(cell).unwrap(), l.clone());
            }
        }

        #[test]
        fn dominance_is_implied_by_transpose_reversal(a in arb_partition(), b in arb_partition()) {
            if a.size() == b.size() {
                prop_assert_eq!(a.dominates(&b), b.conjugate().dominates(&a.conjugate()));
                if a.dominates(&b) {
                    prop_assert!(a >= b);
                }
            }
        }
    }
}
