//! Grid-product graphs and the 2-limited broadcast algebra.
//!
//! A [`Grid`] is the Cartesian product of a row factor (path or cycle on
//! `m` vertices) with a column factor (path or cycle on `n` vertices).
//! Vertices are addressed 1-based as `(row, col)`, matching the usual
//! drawing with row 1 at the top and column 1 at the left.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

/// Path or cycle factor of a grid product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorKind {
    Path,
    Cycle,
}

impl FactorKind {
    /// Distance between positions `a` and `b` (1-based) in a factor of
    /// the given length.
    #[inline]
    pub fn distance(self, len: u16, a: u16, b: u16) -> u32 {
        let d = a.abs_diff(b) as u32;
        match self {
            FactorKind::Path => d,
            FactorKind::Cycle => d.min(len as u32 - d),
        }
    }
}

impl std::fmt::Display for FactorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FactorKind::Path => write!(f, "path"),
            FactorKind::Cycle => write!(f, "cycle"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GridError {
    #[error("grid dimensions must be positive, got {rows}x{cols}")]
    EmptyDimension { rows: u16, cols: u16 },
    #[error("cycle factors need length >= 3, got {len}")]
    ShortCycle { len: u16 },
    #[error("vertex ({row},{col}) outside {rows}x{cols} grid")]
    VertexOutOfRange {
        row: u16,
        col: u16,
        rows: u16,
        cols: u16,
    },
    #[error("broadcasts live on different grids")]
    GridMismatch,
}

/// A vertex `(row, col)`, both coordinates 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub row: u16,
    pub col: u16,
}

impl Vertex {
    pub fn new(row: u16, col: u16) -> Vertex {
        Vertex { row, col }
    }
}

impl std::fmt::Display for Vertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The product graph `(P_m or C_m) x (P_n or C_n)`.
///
/// `(i1,j1) ~ (i2,j2)` iff the vertices agree in one coordinate and are
/// adjacent in the other factor; cycle adjacency wraps `{1, len}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Grid {
    row_factor: FactorKind,
    col_factor: FactorKind,
    rows: u16,
    cols: u16,
}

impl Grid {
    pub fn new(
        row_factor: FactorKind,
        rows: u16,
        col_factor: FactorKind,
        cols: u16,
    ) -> Result<Grid, GridError> {
        if rows == 0 || cols == 0 {
            return Err(GridError::EmptyDimension { rows, cols });
        }
        if row_factor == FactorKind::Cycle && rows < 3 {
            return Err(GridError::ShortCycle { len: rows });
        }
        if col_factor == FactorKind::Cycle && cols < 3 {
            return Err(GridError::ShortCycle { len: cols });
        }
        Ok(Grid {
            row_factor,
            col_factor,
            rows,
            cols,
        })
    }

    pub fn rows(&self) -> u16 {
        self.rows
    }

    pub fn cols(&self) -> u16 {
        self.cols
    }

    pub fn row_factor(&self) -> FactorKind {
        self.row_factor
    }

    pub fn col_factor(&self) -> FactorKind {
        self.col_factor
    }

    pub fn vertex_count(&self) -> usize {
        self.rows as usize * self.cols as usize
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GridError> {
        if v.row == 0 || v.col == 0 || v.row > self.rows || v.col > self.cols {
            return Err(GridError::VertexOutOfRange {
                row: v.row,
                col: v.col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    /// Row-major 0-based index of a vertex.
    #[inline]
    pub fn index_of(&self, v: Vertex) -> usize {
        debug_assert!(self.check_vertex(v).is_ok());
        (v.row as usize - 1) * self.cols as usize + (v.col as usize - 1)
    }

    /// Inverse of [`Grid::index_of`].
    #[inline]
    pub fn vertex_at(&self, index: usize) -> Vertex {
        debug_assert!(index < self.vertex_count());
        Vertex {
            row: (index / self.cols as usize) as u16 + 1,
            col: (index % self.cols as usize) as u16 + 1,
        }
    }

    /// Shortest-path distance, the sum of the factor distances.
    #[inline]
    pub fn distance(&self, u: Vertex, v: Vertex) -> u32 {
        debug_assert!(self.check_vertex(u).is_ok() && self.check_vertex(v).is_ok());
        self.row_factor.distance(self.rows, u.row, v.row)
            + self.col_factor.distance(self.cols, u.col, v.col)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (1..=self.rows).flat_map(move |i| (1..=self.cols).map(move |j| Vertex::new(i, j)))
    }

    /// Neighbours of `v` in a fixed deterministic order.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(4);
        let mut push_row = |r: u16| out.push(Vertex::new(r, v.col));
        match self.row_factor {
            FactorKind::Path => {
                if v.row > 1 {
                    push_row(v.row - 1);
                }
                if v.row < self.rows {
                    push_row(v.row + 1);
                }
            }
            FactorKind::Cycle => {
                // rows >= 3, wrap {1, rows}
                push_row(if v.row == 1 { self.rows } else { v.row - 1 });
                push_row(if v.row == self.rows { 1 } else { v.row + 1 });
            }
        }
        let mut push_col = |c: u16| out.push(Vertex::new(v.row, c));
        match self.col_factor {
            FactorKind::Path => {
                if v.col > 1 {
                    push_col(v.col - 1);
                }
                if v.col < self.cols {
                    push_col(v.col + 1);
                }
            }
            FactorKind::Cycle => {
                push_col(if v.col == 1 { self.cols } else { v.col - 1 });
                push_col(if v.col == self.cols { 1 } else { v.col + 1 });
            }
        }
        out.sort();
        out.dedup();
        out
    }

    pub fn edge_count(&self) -> usize {
        self.vertices()
            .map(|v| self.neighbors(v).len())
            .sum::<usize>()
            / 2
    }
}

impl std::fmt::Display for Grid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let letter = |k: FactorKind| match k {
            FactorKind::Path => 'P',
            FactorKind::Cycle => 'C',
        };
        write!(
            f,
            "{}{} x {}{}",
            letter(self.row_factor),
            self.rows,
            letter(self.col_factor),
            self.cols
        )
    }
}

/// A set of vertices of a particular grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    grid: Grid,
    members: BTreeSet<Vertex>,
}

impl VertexSet {
    pub fn empty(grid: Grid) -> VertexSet {
        VertexSet {
            grid,
            members: BTreeSet::new(),
        }
    }

    pub fn full(grid: Grid) -> VertexSet {
        VertexSet {
            grid,
            members: grid.vertices().collect(),
        }
    }

    pub fn from_vertices(
        grid: Grid,
        vertices: impl IntoIterator<Item = Vertex>,
    ) -> Result<VertexSet, GridError> {
        let mut members = BTreeSet::new();
        for v in vertices {
            grid.check_vertex(v)?;
            members.insert(v);
        }
        Ok(VertexSet { grid, members })
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.contains(&v)
    }

    pub fn insert(&mut self, v: Vertex) -> Result<(), GridError> {
        self.grid.check_vertex(v)?;
        self.members.insert(v);
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.members.iter().copied()
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.grid, other.grid);
        VertexSet {
            grid: self.grid,
            members: self.members.union(&other.members).copied().collect(),
        }
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet {
            grid: self.grid,
            members: self
                .grid
                .vertices()
                .filter(|v| !self.members.contains(v))
                .collect(),
        }
    }
}

/// A 2-limited broadcast: a strength in `{0,1,2}` for every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Broadcast {
    grid: Grid,
    strength: Vec<u8>,
}

impl Broadcast {
    pub fn zero(grid: Grid) -> Broadcast {
        Broadcast {
            grid,
            strength: vec![0; grid.vertex_count()],
        }
    }

    pub fn from_assignments(
        grid: Grid,
        assignments: impl IntoIterator<Item = (Vertex, u8)>,
    ) -> Result<Broadcast, GridError> {
        let mut b = Broadcast::zero(grid);
        for (v, s) in assignments {
            b.set(v, s)?;
        }
        Ok(b)
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    #[inline]
    pub fn strength(&self, v: Vertex) -> u8 {
        self.strength[self.grid.index_of(v)]
    }

    pub fn set(&mut self, v: Vertex, s: u8) -> Result<(), GridError> {
        self.grid.check_vertex(v)?;
        assert!(s <= 2, "strength must be in {{0,1,2}}");
        let ix = self.grid.index_of(v);
        self.strength[ix] = s;
        Ok(())
    }

    pub fn cost(&self) -> u32 {
        self.strength.iter().map(|&s| s as u32).sum()
    }

    /// Vertices broadcasting at positive strength, row-major order.
    pub fn support(&self) -> impl Iterator<Item = (Vertex, u8)> + '_ {
        self.strength
            .iter()
            .enumerate()
            .filter(|(_, &s)| s > 0)
            .map(move |(ix, &s)| (self.grid.vertex_at(ix), s))
    }

    /// The set of vertices that hear some transmitter.
    pub fn range_of(&self) -> VertexSet {
        let mut members = BTreeSet::new();
        for (tx, s) in self.support() {
            for u in self.grid.vertices() {
                if self.grid.distance(tx, u) <= s as u32 {
                    members.insert(u);
                }
            }
        }
        VertexSet {
            grid: self.grid,
            members,
        }
    }

    /// True iff every vertex of `targets` hears some transmitter.
    pub fn dominates(&self, targets: &VertexSet) -> bool {
        debug_assert_eq!(self.grid, targets.grid);
        targets.iter().all(|u| {
            self.support()
                .any(|(tx, s)| self.grid.distance(tx, u) <= s as u32)
        })
    }

    /// Pointwise maximum of two broadcasts on the same grid.
    pub fn combine(&self, other: &Broadcast) -> Result<Broadcast, GridError> {
        if self.grid != other.grid {
            return Err(GridError::GridMismatch);
        }
        let strength = self
            .strength
            .iter()
            .zip(other.strength.iter())
            .map(|(&a, &b)| a.max(b))
            .collect();
        Ok(Broadcast {
            grid: self.grid,
            strength,
        })
    }

    /// Zero out `self` wherever `other` broadcasts.
    pub fn subtract(&self, other: &Broadcast) -> Result<Broadcast, GridError> {
        if self.grid != other.grid {
            return Err(GridError::GridMismatch);
        }
        let strength = self
            .strength
            .iter()
            .zip(other.strength.iter())
            .map(|(&a, &b)| if b > 0 { 0 } else { a })
            .collect();
        Ok(Broadcast {
            grid: self.grid,
            strength,
        })
    }

    /// Restriction of `self` to `x`: equal on `x`, zero elsewhere.
    pub fn induce(&self, x: &VertexSet) -> Broadcast {
        debug_assert_eq!(self.grid, x.grid);
        let mut out = Broadcast::zero(self.grid);
        for v in x.iter() {
            let ix = self.grid.index_of(v);
            out.strength[ix] = self.strength[ix];
        }
        out
    }

    /// Strengths as a `rows x cols` matrix of text rows, for reports.
    pub fn strength_matrix(&self) -> Vec<String> {
        (1..=self.grid.rows)
            .map(|i| {
                (1..=self.grid.cols)
                    .map(|j| char::from(b'0' + self.strength(Vertex::new(i, j))))
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(rk: FactorKind, m: u16, ck: FactorKind, n: u16) -> Grid {
        Grid::new(rk, m, ck, n).unwrap()
    }

    #[test]
    fn build_rejects_bad_dimensions() {
        assert!(matches!(
            Grid::new(FactorKind::Path, 0, FactorKind::Path, 3),
            Err(GridError::EmptyDimension { .. })
        ));
        assert!(matches!(
            Grid::new(FactorKind::Cycle, 2, FactorKind::Path, 3),
            Err(GridError::ShortCycle { len: 2 })
        ));
        assert!(matches!(
            Grid::new(FactorKind::Path, 3, FactorKind::Cycle, 2),
            Err(GridError::ShortCycle { len: 2 })
        ));
    }

    #[test]
    fn degenerate_and_toroidal_edge_counts() {
        let single = grid(FactorKind::Path, 1, FactorKind::Path, 1);
        assert_eq!(single.vertex_count(), 1);
        assert_eq!(single.edge_count(), 0);

        // C3 x C3: 4-regular on 9 vertices.
        let torus = grid(FactorKind::Cycle, 3, FactorKind::Cycle, 3);
        assert_eq!(torus.vertex_count(), 9);
        assert_eq!(torus.edge_count(), 18);
    }

    #[test]
    fn cycle_wrap_adjacency() {
        let g = grid(FactorKind::Path, 5, FactorKind::Cycle, 4);
        assert_eq!(g.vertex_count(), 20);
        assert_eq!(g.distance(Vertex::new(1, 1), Vertex::new(1, 4)), 1);
        assert!(g.neighbors(Vertex::new(1, 1)).contains(&Vertex::new(1, 4)));
    }

    #[test]
    fn closed_form_distances() {
        let g = grid(FactorKind::Path, 1, FactorKind::Path, 1);
        assert_eq!(g.distance(Vertex::new(1, 1), Vertex::new(1, 1)), 0);

        let g = grid(FactorKind::Cycle, 3, FactorKind::Cycle, 6);
        assert_eq!(g.distance(Vertex::new(1, 1), Vertex::new(3, 4)), 4);

        let g = grid(FactorKind::Path, 5, FactorKind::Cycle, 4);
        assert_eq!(g.distance(Vertex::new(2, 1), Vertex::new(4, 4)), 3);
    }

    /// Breadth-first-search oracle for distances.
    fn bfs_distance(g: Grid, from: Vertex) -> Vec<u32> {
        let mut dist = vec![u32::MAX; g.vertex_count()];
        dist[g.index_of(from)] = 0;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            let du = dist[g.index_of(u)];
            for w in g.neighbors(u) {
                let ix = g.index_of(w);
                if dist[ix] == u32::MAX {
                    dist[ix] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    #[test]
    fn distance_matches_bfs_on_small_grids() {
        let kinds = [FactorKind::Path, FactorKind::Cycle];
        for rk in kinds {
            for ck in kinds {
                for m in 1..=6u16 {
                    for n in 1..=6u16 {
                        if m as usize * n as usize > 30 {
                            continue;
                        }
                        let Ok(g) = Grid::new(rk, m, ck, n) else {
                            continue;
                        };
                        for u in g.vertices() {
                            let d = bfs_distance(g, u);
                            for v in g.vertices() {
                                assert_eq!(
                                    g.distance(u, v),
                                    d[g.index_of(v)],
                                    "{g} {u} -> {v}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn range_examples() {
        let g = grid(FactorKind::Path, 5, FactorKind::Path, 5);
        assert!(Broadcast::zero(g).range_of().is_empty());

        // Strength 2 at the center of P5 x P5 reaches the 13-vertex ball.
        let f =
            Broadcast::from_assignments(g, [(Vertex::new(3, 3), 2)]).unwrap();
        assert_eq!(f.range_of().len(), 13);

        let all_ones =
            Broadcast::from_assignments(g, g.vertices().map(|v| (v, 1))).unwrap();
        assert_eq!(all_ones.range_of().len(), g.vertex_count());
    }

    #[test]
    fn dominates_vacuous_and_zero() {
        let g = grid(FactorKind::Cycle, 3, FactorKind::Path, 2);
        let zero = Broadcast::zero(g);
        assert!(zero.dominates(&VertexSet::empty(g)));
        assert!(!zero.dominates(&VertexSet::full(g)));
    }

    #[test]
    fn algebra_identities() {
        let g = grid(FactorKind::Path, 3, FactorKind::Cycle, 4);
        let f = Broadcast::from_assignments(
            g,
            [(Vertex::new(1, 1), 1), (Vertex::new(2, 3), 2)],
        )
        .unwrap();
        let zero = Broadcast::zero(g);

        assert_eq!(f.combine(&zero).unwrap(), f);
        assert_eq!(f.combine(&f).unwrap(), f);
        assert_eq!(f.subtract(&zero).unwrap(), f);

        let one = Broadcast::from_assignments(g, [(Vertex::new(1, 1), 1)]).unwrap();
        let two = Broadcast::from_assignments(g, [(Vertex::new(1, 1), 2)]).unwrap();
        assert_eq!(one.combine(&two).unwrap().strength(Vertex::new(1, 1)), 2);

        // f subtract f is zero on the support.
        assert_eq!(f.subtract(&f).unwrap().cost(), 0);

        // induce splits cost over a set and its complement.
        let x = VertexSet::from_vertices(g, [Vertex::new(1, 1)]).unwrap();
        let gx = f.induce(&x);
        let gy = f.induce(&x.complement());
        assert_eq!(gx.cost() + gy.cost(), f.cost());
        assert_eq!(f.induce(&VertexSet::full(g)), f);
        assert_eq!(f.induce(&VertexSet::empty(g)).cost(), 0);

        // (f - g) + g restores f when g is induced.
        assert_eq!(f.subtract(&gx).unwrap().combine(&gx).unwrap(), f);
    }

    #[test]
    fn grid_mismatch_is_rejected() {
        let a = Broadcast::zero(grid(FactorKind::Path, 2, FactorKind::Path, 2));
        let b = Broadcast::zero(grid(FactorKind::Path, 2, FactorKind::Path, 3));
        assert_eq!(a.combine(&b), Err(GridError::GridMismatch));
        assert_eq!(a.subtract(&b), Err(GridError::GridMismatch));
    }
}
