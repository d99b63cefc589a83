//! Fillings of Ferrers diagrams (French notation: row 1 is the bottom row).

use std::fmt;

use super::partition::{Composition, Partition};
use crate::error::{Error, Result};

/// Which filling rules a tableau satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableauKind {
    /// Entries 1..N decreasing along rows and up columns.
    Rsyt,
    /// Entries 1..N decreasing along rows only.
    Rst,
    /// Arbitrary nonnegative entries.
    Filling,
}

/// A filling; `rows[0]` is the bottom row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
    kind: TableauKind,
    /// (row, col), 1-based, for the entry i at index i−1 (standard kinds only).
    pos: Vec<(u32, u32)>,
}

impl Tableau {
    /// Builds a tableau from rows listed bottom row first, validating the kind.
    pub fn from_rows(rows: Vec<Vec<u32>>, kind: TableauKind) -> Result<Tableau> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())
            .map_err(|_| Error::InvalidShape(format!("row lengths of {rows:?} are not a partition")))?;
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidShape("empty row".into()));
        }
        let mut pos = Vec::new();
        if kind != TableauKind::Filling {
            let n: usize = rows.iter().map(|r| r.len()).sum();
            pos = vec![(0, 0); n];
            for (r, row) in rows.iter().enumerate() {
                for (c, &e) in row.iter().enumerate() {
                    if e == 0 || e as usize > n || pos[e as usize - 1] != (0, 0) {
                        return Err(Error::InvalidShape(format!("entries of {rows:?} are not 1..{n}")));
                    }
                    pos[e as usize - 1] = (r as u32 + 1, c as u32 + 1);
                }
            }
            if rows.iter().any(|row| row.windows(2).any(|w| w[0] <= w[1])) {
                return Err(Error::InvalidShape(format!("{rows:?} is not decreasing along rows")));
            }
            if kind == TableauKind::Rsyt {
                for r in 1..rows.len() {
                    for c in 0..rows[r].len() {
                        if rows[r][c] >= rows[r - 1][c] {
                            return Err(Error::InvalidShape(format!("{rows:?} is not decreasing up columns")));
                        }
                    }
                }
            }
        }
        Ok(Tableau { shape, rows, kind, pos })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn kind(&self) -> TableauKind {
        self.kind
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Number of cells.
    pub fn n(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Row of entry i (1-based).
    pub fn row(&self, i: usize) -> usize {
        self.pos[i - 1].0 as usize
    }

    /// Column of entry i (1-based).
    pub fn col(&self, i: usize) -> usize {
        self.pos[i - 1].1 as usize
    }

    /// c(i) = col − row.
    pub fn content(&self, i: usize) -> i32 {
        self.pos[i - 1].1 as i32 - self.pos[i - 1].0 as i32
    }

    pub fn contents(&self) -> Vec<i32> {
        (1..=self.n()).map(|i| self.content(i)).collect()
    }

    /// Entry at 1-based (row, col).
    pub fn entry(&self, row: usize, col: usize) -> Option<u32> {
        self.rows.get(row - 1)?.get(col - 1).copied()
    }

    /// The tableau with entries i and i+1 exchanged, if it keeps the kind.
    pub fn swapped(&self, i: usize) -> Option<Tableau> {
        let mut rows = self.rows.clone();
        let (a, b) = (self.pos[i - 1], self.pos[i]);
        rows[a.0 as usize - 1][a.1 as usize - 1] = i as u32 + 1;
        rows[b.0 as usize - 1][b.1 as usize - 1] = i as u32;
        Tableau::from_rows(rows, self.kind).ok()
    }

    /// inv: pairs i < j with c(i) ≥ c(j) + 2.
    pub fn inv(&self) -> usize {
        let c = self.contents();
        let mut k = 0;
        for i in 0..c.len() {
            for j in i + 1..c.len() {
                if c[i] >= c[j] + 2 {
                    k += 1;
                }
            }
        }
        k
    }

    /// inv₀: pairs i < j with row(i) < row(j).
    pub fn inv0(&self) -> usize {
        let n = self.n();
        let mut k = 0;
        for i in 1..=n {
            for j in i + 1..=n {
                if self.row(i) < self.row(j) {
                    k += 1;
                }
            }
        }
        k
    }

    /// α(S)_i = v(row(i)) with v(1) = 0 and v(j) = m + (j−2)m₀.
    pub fn alpha(&self, m: u32, m0: u32) -> Composition {
        Composition::new(
            (1..=self.n())
                .map(|i| match self.row(i) {
                    1 => 0,
                    r => m + (r as u32 - 2) * m0,
                })
                .collect(),
        )
    }

    /// Rebuilds the RSYT of the given shape from its content vector.
    pub fn from_contents(shape: &Partition, c: &[i32]) -> Result<Tableau> {
        let n = shape.size() as usize;
        if c.len() != n {
            return Err(Error::InvalidShape(format!("{} contents for {} cells", c.len(), n)));
        }
        let target = shape.rows();
        let mut rows: Vec<Vec<u32>> = vec![Vec::new(); target.len()];
        for i in (1..=n).rev() {
            let slot = (0..rows.len()).find(|&r| {
                let len = rows[r].len();
                let addable = len < target[r] as usize && (r == 0 || rows[r - 1].len() > len);
                addable && len as i32 - r as i32 == c[i - 1]
            });
            match slot {
                Some(r) => rows[r].push(i as u32),
                None => return Err(Error::InvalidShape(format!("content vector {c:?} does not fit {shape}"))),
            }
        }
        Tableau::from_rows(rows, TableauKind::Rsyt)
    }

    /// All RSYT of shape τ, sorted by content vector.
    pub fn enumerate_rsyt(shape: &Partition) -> Vec<Tableau> {
        fn rec(target: &[u32], rows: &mut Vec<Vec<u32>>, next: u32, out: &mut Vec<Vec<Vec<u32>>>) {
            if next == 0 {
                out.push(rows.clone());
                return;
            }
            for r in 0..target.len() {
                let len = rows[r].len();
                if len < target[r] as usize && (r == 0 || rows[r - 1].len() > len) {
                    rows[r].push(next);
                    rec(target, rows, next - 1, out);
                    rows[r].pop();
                }
            }
        }
        let target = shape.rows();
        let mut raw = Vec::new();
        rec(target, &mut vec![Vec::new(); target.len()], shape.size(), &mut raw);
        let mut out: Vec<Tableau> = raw
            .into_iter()
            .map(|r| Tableau::from_rows(r, TableauKind::Rsyt).expect("valid RSYT"))
            .collect();
        out.sort_by_key(|t| t.contents());
        out
    }

    /// All reverse row-ordered standard tableaux of shape τ.
    pub fn enumerate_rst(shape: &Partition) -> Vec<Tableau> {
        fn rec(target: &[u32], rows: &mut Vec<Vec<u32>>, next: u32, out: &mut Vec<Vec<Vec<u32>>>) {
            if next == 0 {
                out.push(rows.clone());
                return;
            }
            for r in 0..target.len() {
                if rows[r].len() < target[r] as usize {
                    rows[r].push(next);
                    rec(target, rows, next - 1, out);
                    rows[r].pop();
                }
            }
        }
        let target = shape.rows();
        let mut raw = Vec::new();
        rec(target, &mut vec![Vec::new(); target.len()], shape.size(), &mut raw);
        let mut out: Vec<Tableau> = raw
            .into_iter()
            .map(|r| Tableau::from_rows(r, TableauKind::Rst).expect("valid RST"))
            .collect();
        out.sort();
        out
    }

    /// The inv-maximal RSYT: N, N−1, …, 1 entered column by column.
    pub fn s0(shape: &Partition) -> Tableau {
        let target = shape.rows();
        let mut rows: Vec<Vec<u32>> = target.iter().map(|&p| vec![0; p as usize]).collect();
        let mut next = shape.size();
        for c in 0..target.first().copied().unwrap_or(0) as usize {
            for row in rows.iter_mut() {
                if c < row.len() {
                    row[c] = next;
                    next -= 1;
                }
            }
        }
        Tableau::from_rows(rows, TableauKind::Rsyt).expect("valid RSYT")
    }

    /// The inv-minimal RSYT: N, N−1, …, 1 entered row by row.
    pub fn s1(shape: &Partition) -> Tableau {
        let mut next = shape.size();
        let rows = shape
            .rows()
            .iter()
            .map(|&p| {
                (0..p)
                    .map(|_| {
                        next -= 1;
                        next + 1
                    })
                    .collect()
            })
            .collect();
        Tableau::from_rows(rows, TableauKind::Rsyt).expect("valid RSYT")
    }

    /// The RST with the same entries as an RSYT, viewed without column conditions.
    pub fn as_rst(&self) -> Tableau {
        Tableau { kind: TableauKind::Rst, ..self.clone() }
    }

    /// ⌊α, S⌋: the cell holding i receives α⁺_i.
    pub fn fill_floor(alpha: &Composition, s: &Tableau) -> Result<Tableau> {
        if alpha.len() != s.n() {
            return Err(Error::ShapeMismatch(format!("{} parts for {} cells", alpha.len(), s.n())));
        }
        let plus = alpha.sorted();
        let rows = s.rows.iter().map(|row| row.iter().map(|&e| plus.parts()[e as usize - 1]).collect()).collect();
        Tableau::from_rows(rows, TableauKind::Filling)
    }

    /// Entries increase up columns and weakly increase along rows.
    pub fn is_column_strict(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = (1..self.rows.len()).all(|r| (0..self.rows[r].len()).all(|c| self.rows[r][c] > self.rows[r - 1][c]));
        rows_ok && cols_ok
    }

    /// Parses rows separated by `/`, top row first, e.g. `4,3,1/7,6,5,2`.
    pub fn parse(s: &str, kind: TableauKind) -> Result<Tableau> {
        let mut rows = Vec::new();
        for r in s.split('/').rev() {
            let row: std::result::Result<Vec<u32>, _> = r.split(',').map(|e| e.trim().parse::<u32>()).collect();
            rows.push(row.map_err(|_| Error::Parse(format!("bad tableau row '{r}'")))?);
        }
        Tableau::from_rows(rows, kind)
    }
}

impl fmt::Display for Tableau {
    /// Row lists with the bottom row last.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .rev()
            .map(|r| format!("[{}]", r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn contents_and_examples() {
        let s = Tableau::parse("4,3,1/7,6,5,2", TableauKind::Rsyt).unwrap();
        assert_eq!(s.contents(), vec![1, 3, 0, -1, 2, 1, 0]);
        let ts = Tableau::enumerate_rsyt(&shape("2,1"));
        assert_eq!(ts.len(), 2);
        assert_eq!(Tableau::s0(&shape("2,1")).to_string(), "[[2],[3,1]]");
        assert_eq!(Tableau::s1(&shape("2,1")).to_string(), "[[1],[3,2]]");
        assert_eq!(Tableau::enumerate_rsyt(&shape("4")).len(), 1);
        assert_eq!(Tableau::enumerate_rsyt(&shape("3,2")).len(), 5);
    }

    #[test]
    fn inversion_counts() {
        let y = Tableau::parse("4,3/5,2,1", TableauKind::Rst).unwrap();
        assert_eq!(y.inv0(), 4);
        assert_eq!(Tableau::s1(&shape("3,2")).inv0(), 0);
        assert_eq!(Tableau::s0(&shape("3,3")).inv0(), 3);
        for t in Tableau::enumerate_rsyt(&shape("3,2,1")) {
            assert!(t.inv() <= Tableau::s0(&shape("3,2,1")).inv());
            assert!(t.inv() >= Tableau::s1(&shape("3,2,1")).inv());
        }
    }

    #[test]
    fn reverse_lattice_permutation() {
        let s = Tableau::parse("7/8,2/9,4/10,6,5,3,1", TableauKind::Rsyt).unwrap();
        assert_eq!(s.alpha(2, 1).parts(), &[0, 3, 0, 2, 0, 0, 4, 3, 2, 0]);
        assert_eq!(Tableau::s1(&shape("3,3")).alpha(2, 2).parts(), &[2, 2, 2, 0, 0, 0]);
        assert!(Tableau::s0(&shape("5")).alpha(2, 1).parts().iter().all(|&a| a == 0));
    }

    #[test]
    fn floors() {
        let s = Tableau::parse("3,2/5,4,1", TableauKind::Rsyt).unwrap();
        let f = Tableau::fill_floor(&Composition::parse("1,4,2,0,3").unwrap(), &s).unwrap();
        assert_eq!(f.to_string(), "[[2,3],[0,1,4]]");
        let lam = Composition::parse("3,2,2,1,1,0,0,0,0,0").unwrap();
        let s1 = Tableau::s1(&shape("5,2,2,1"));
        let f = Tableau::fill_floor(&lam, &s1).unwrap();
        assert_eq!(f.to_string(), "[[3],[2,2],[1,1],[0,0,0,0,0]]");
        assert!(f.is_column_strict());
        let z = Tableau::fill_floor(&Composition::zero(3), &Tableau::s0(&shape("2,1"))).unwrap();
        assert!(!z.is_column_strict());
    }

    #[test]
    fn content_round_trip() {
        for n in 1..=6 {
            for p in Partition::all(n) {
                let ts = Tableau::enumerate_rsyt(&p);
                assert_eq!(ts.len() as u64, p.hook_count());
                for t in &ts {
                    assert_eq!(&Tableau::from_contents(&p, &t.contents()).unwrap(), t);
                }
            }
        }
    }
}
