//! Windows, symmetry-reduced case enumeration, and the forbidden
//! broadcast patterns.
//!
//! A window is the graph `(P_m or C_m) x P_k` whose middle `r = k - 8`
//! columns (labels `c_5 .. c_{k-4}`) form the active region: the only
//! columns a case may broadcast from. The four margin columns on each
//! side are wide enough to contain every vertex able to reach into the
//! active region.
//!
//! Cases of a given cost are enumerated one representative per orbit of
//! the rectangle symmetries {identity, row flip, column flip, both},
//! keeping the representative whose row-major strength sequence is
//! lexicographically maximum. The group is fixed to these four
//! reflections even when the row factor is a cycle; the published case
//! counts assume exactly this reduction.

use crate::grid::{Broadcast, FactorKind, Grid, GridError, Vertex};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WindowError {
    #[error("window needs at least 9 columns (4-column margins around an active region), got {k}")]
    TooNarrow { k: u16 },
    #[error(transparent)]
    Grid(#[from] GridError),
}

/// The case-analysis window `(family)_rows x P_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Window {
    family: FactorKind,
    rows: u16,
    k: u16,
}

impl Window {
    pub fn new(family: FactorKind, rows: u16, k: u16) -> Result<Window, WindowError> {
        if k < 9 {
            return Err(WindowError::TooNarrow { k });
        }
        // Validates the row factor (cycle length, positivity).
        Grid::new(family, rows, FactorKind::Path, k)?;
        Ok(Window { family, rows, k })
    }

    pub fn family(&self) -> FactorKind {
        self.family
    }

    pub fn rows(&self) -> u16 {
        self.rows
    }

    pub fn k(&self) -> u16 {
        self.k
    }

    /// Width of the active region.
    pub fn active_width(&self) -> u16 {
        self.k - 8
    }

    /// Column labels of the active region, `c_5 ..= c_{k-4}`.
    pub fn active_cols(&self) -> std::ops::RangeInclusive<u16> {
        5..=self.k - 4
    }

    /// Column labels that a case must dominate, `c_7 ..= c_{k-6}`.
    pub fn middle_cols(&self) -> std::ops::RangeInclusive<u16> {
        7..=self.k - 6
    }

    pub fn graph(&self) -> Grid {
        Grid::new(self.family, self.rows, FactorKind::Path, self.k)
            .expect("validated at construction")
    }

    /// Number of active-region cells.
    pub fn cell_count(&self) -> usize {
        self.rows as usize * self.active_width() as usize
    }

    /// Vertex of an active cell (cells are row-major over the active
    /// region).
    pub fn cell_vertex(&self, cell: usize) -> Vertex {
        let r = self.active_width() as usize;
        Vertex::new((cell / r) as u16 + 1, (cell % r) as u16 + 5)
    }

    /// Active cell of a vertex, if it lies in the active region.
    pub fn cell_of(&self, v: Vertex) -> Option<usize> {
        let r = self.active_width();
        if v.col >= 5 && v.col <= self.k - 4 && v.row >= 1 && v.row <= self.rows {
            Some((v.row as usize - 1) * r as usize + (v.col as usize - 5))
        } else {
            None
        }
    }

    /// Cell permutations realizing the four rectangle symmetries
    /// (identity omitted): row flip, column flip, both.
    fn symmetry_perms(&self) -> [Vec<usize>; 3] {
        let m = self.rows as usize;
        let r = self.active_width() as usize;
        let n = m * r;
        let mut row_flip = vec![0usize; n];
        let mut col_flip = vec![0usize; n];
        let mut both = vec![0usize; n];
        for i in 0..m {
            for j in 0..r {
                let cell = i * r + j;
                row_flip[cell] = (m - 1 - i) * r + j;
                col_flip[cell] = i * r + (r - 1 - j);
                both[cell] = (m - 1 - i) * r + (r - 1 - j);
            }
        }
        [row_flip, col_flip, both]
    }

    /// Extract the active-region strength sequence of a broadcast whose
    /// support lies in the active columns.
    pub fn sequence_of(&self, f: &Broadcast) -> Vec<u8> {
        debug_assert_eq!(f.grid(), self.graph());
        let mut seq = vec![0u8; self.cell_count()];
        for (v, s) in f.support() {
            let cell = self
                .cell_of(v)
                .expect("support must lie in the active columns");
            seq[cell] = s;
        }
        seq
    }

    pub fn case_to_broadcast(&self, seq: &[u8]) -> Broadcast {
        Broadcast::from_assignments(
            self.graph(),
            seq.iter()
                .enumerate()
                .filter(|(_, &s)| s > 0)
                .map(|(cell, &s)| (self.cell_vertex(cell), s)),
        )
        .expect("cells map to window vertices")
    }
}

/// Is the sequence lexicographically >= all its symmetry images?
fn seq_is_canonical(seq: &[u8], perms: &[Vec<usize>; 3]) -> bool {
    'outer: for perm in perms {
        for (pos, &image_pos) in perm.iter().enumerate() {
            let a = seq[pos];
            let b = seq[image_pos];
            if a > b {
                continue 'outer;
            }
            if a < b {
                return false;
            }
        }
    }
    true
}

/// True iff the case is the chosen representative of its symmetry
/// orbit. The broadcast's support must lie in the active columns.
pub fn is_canonical(w: &Window, f: &Broadcast) -> bool {
    seq_is_canonical(&w.sequence_of(f), &w.symmetry_perms())
}

/// One canonical case: a strength assignment on the active region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowCase {
    pub strengths: Vec<u8>,
    pub cost: u32,
}

impl WindowCase {
    pub fn support(&self) -> impl Iterator<Item = (usize, u8)> + '_ {
        self.strengths
            .iter()
            .enumerate()
            .filter(|(_, &s)| s > 0)
            .map(|(cell, &s)| (cell, s))
    }
}

/// Raw lexicographic enumeration of `{0,1,2}` sequences with a fixed
/// sum. Yields sequences in ascending lexicographic order and can be
/// fast-forwarded to resume strictly after a given sequence.
pub(crate) struct RawEnumerator {
    seq: Vec<u8>,
    cost: u32,
    started: bool,
    exhausted: bool,
}

impl RawEnumerator {
    pub fn new(cells: usize, cost: u32) -> RawEnumerator {
        RawEnumerator {
            seq: vec![0; cells],
            cost,
            started: false,
            exhausted: cost > 2 * cells as u32,
        }
    }

    /// Resume enumeration strictly after `after` (which must be a valid
    /// sequence of the right cost).
    pub fn resuming_after(cells: usize, cost: u32, after: &[u8]) -> RawEnumerator {
        debug_assert_eq!(after.len(), cells);
        debug_assert_eq!(after.iter().map(|&s| s as u32).sum::<u32>(), cost);
        RawEnumerator {
            seq: after.to_vec(),
            cost,
            started: true,
            exhausted: false,
        }
    }

    /// Lexicographically smallest suffix of the given sum on
    /// `seq[from..]`; `sum` must fit.
    fn fill_min_suffix(seq: &mut [u8], from: usize, mut sum: u32) {
        for s in seq[from..].iter_mut() {
            *s = 0;
        }
        let mut pos = seq.len();
        while sum > 0 {
            pos -= 1;
            let take = sum.min(2) as u8;
            seq[pos] = take;
            sum -= take as u32;
        }
    }

    pub fn next_seq(&mut self) -> Option<&[u8]> {
        if self.exhausted {
            return None;
        }
        if !self.started {
            self.started = true;
            Self::fill_min_suffix(&mut self.seq, 0, self.cost);
            return Some(&self.seq);
        }
        // Find the rightmost position we can increment while the
        // remaining suffix can still absorb the leftover sum.
        let n = self.seq.len();
        let mut suffix_sum = 0u32;
        for pos in (0..n).rev() {
            let s = self.seq[pos];
            suffix_sum += s as u32;
            if s < 2 && suffix_sum >= s as u32 + 1 {
                let after = suffix_sum - s as u32 - 1;
                if after <= 2 * (n - pos - 1) as u32 {
                    self.seq[pos] = s + 1;
                    Self::fill_min_suffix(&mut self.seq, pos + 1, after);
                    return Some(&self.seq);
                }
            }
        }
        self.exhausted = true;
        None
    }
}

/// Stream of canonical cases with costs in `[lo, hi]`, cost-ascending
/// then lexicographically ascending by row-major strength sequence.
pub struct CaseStream {
    window: Window,
    perms: [Vec<usize>; 3],
    hi: u32,
    cost: u32,
    raw: RawEnumerator,
}

impl CaseStream {
    fn at(window: Window, cost: u32, hi: u32, raw: RawEnumerator) -> CaseStream {
        CaseStream {
            perms: window.symmetry_perms(),
            window,
            hi,
            cost,
            raw,
        }
    }
}

/// All canonical cases of cost `lo ..= hi` on the active region.
pub fn enumerate_cases(w: &Window, lo: u32, hi: u32) -> CaseStream {
    let cells = w.cell_count();
    CaseStream::at(*w, lo, hi, RawEnumerator::new(cells, lo))
}

/// Enumeration resuming strictly after the case `(cost, seq)`.
pub fn enumerate_cases_after(w: &Window, cost: u32, seq: &[u8], hi: u32) -> CaseStream {
    let cells = w.cell_count();
    CaseStream::at(
        *w,
        cost,
        hi,
        RawEnumerator::resuming_after(cells, cost, seq),
    )
}

impl Iterator for CaseStream {
    type Item = WindowCase;

    fn next(&mut self) -> Option<WindowCase> {
        loop {
            if self.cost > self.hi {
                return None;
            }
            match self.raw.next_seq() {
                Some(seq) => {
                    if seq_is_canonical(seq, &self.perms) {
                        return Some(WindowCase {
                            strengths: seq.to_vec(),
                            cost: self.cost,
                        });
                    }
                }
                None => {
                    self.cost += 1;
                    if self.cost > self.hi {
                        return None;
                    }
                    self.raw = RawEnumerator::new(self.window.cell_count(), self.cost);
                }
            }
        }
    }
}

/// Number of symmetry orbits of cost-exactly-`cost` assignments on the
/// active region, by Burnside's lemma: average over the four group
/// elements of the number of assignments each fixes.
pub fn orbit_count(w: &Window, cost: u32) -> u64 {
    let perms = w.symmetry_perms();
    let n = w.cell_count();
    let identity: Vec<usize> = (0..n).collect();
    let mut total = 0u64;
    for perm in std::iter::once(&identity).chain(perms.iter()) {
        total += fixed_assignments(perm, cost);
    }
    debug_assert_eq!(total % 4, 0);
    total / 4
}

/// Assignments invariant under `perm` with total strength `cost`: the
/// assignment must be constant on each permutation orbit, so count by a
/// subset-sum DP over orbit sizes.
fn fixed_assignments(perm: &[usize], cost: u32) -> u64 {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut orbit_sizes = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut size = 0u32;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            size += 1;
            v = perm[v];
        }
        orbit_sizes.push(size);
    }
    let mut ways = vec![0u64; cost as usize + 1];
    ways[0] = 1;
    for size in orbit_sizes {
        let mut next = vec![0u64; cost as usize + 1];
        for (c, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for strength in 0..=2u32 {
                let c2 = c as u32 + strength * size;
                if c2 <= cost {
                    next[c2 as usize] += w;
                }
            }
        }
        ways = next;
    }
    ways[cost as usize]
}

/// The four local broadcast patterns that can be rewritten away without
/// raising cost or shrinking range, hence excluded from cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    /// (a) A strength-1 vertex adjacent to a strength-2 vertex: drop
    /// the strength-1 transmitter.
    WeakBesideStrong,
    /// (b) Two strength-1 vertices in the same row or column at
    /// distance 2: replace with strength 2 at the vertex between them.
    WeakPairGap,
    /// (c) Two strength-1 vertices differing by one in both
    /// coordinates: replace with strength 2 at a common neighbour.
    WeakPairDiagonal,
    /// (d) Two adjacent strength-1 vertices: replace with strength 2 at
    /// either one.
    WeakPairAdjacent,
}

impl Pattern {
    pub const ALL: [Pattern; 4] = [
        Pattern::WeakBesideStrong,
        Pattern::WeakPairGap,
        Pattern::WeakPairDiagonal,
        Pattern::WeakPairAdjacent,
    ];
}

/// An occurrence of a pattern: the two transmitters and the vertex that
/// receives strength 2 in the rewrite (for pattern (a) the kept
/// strength-2 transmitter).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PatternMatch {
    pub first: Vertex,
    pub second: Vertex,
    pub rewrite_at: Vertex,
}

/// Smallest common neighbour of two vertices at distance 2.
fn common_neighbor(g: &Grid, u: Vertex, v: Vertex) -> Vertex {
    debug_assert_eq!(g.distance(u, v), 2);
    g.neighbors(u)
        .into_iter()
        .find(|&w| g.distance(w, v) == 1)
        .expect("distance-2 vertices share a neighbour")
}

/// First occurrence of `pattern` in `f`, scanning transmitter pairs in
/// row-major order.
pub fn find_pattern(f: &Broadcast, pattern: Pattern) -> Option<PatternMatch> {
    let g = f.grid();
    let support: Vec<(Vertex, u8)> = f.support().collect();
    for (i, &(u, su)) in support.iter().enumerate() {
        for &(v, sv) in support.iter().skip(i + 1) {
            let d = g.distance(u, v);
            let hit = match pattern {
                Pattern::WeakBesideStrong => {
                    d == 1 && su.min(sv) == 1 && su.max(sv) == 2
                }
                Pattern::WeakPairGap => {
                    d == 2 && su == 1 && sv == 1 && (u.row == v.row || u.col == v.col)
                }
                Pattern::WeakPairDiagonal => {
                    d == 2 && su == 1 && sv == 1 && u.row != v.row && u.col != v.col
                }
                Pattern::WeakPairAdjacent => d == 1 && su == 1 && sv == 1,
            };
            if !hit {
                continue;
            }
            let rewrite_at = match pattern {
                Pattern::WeakBesideStrong => {
                    if su == 2 {
                        u
                    } else {
                        v
                    }
                }
                Pattern::WeakPairGap | Pattern::WeakPairDiagonal => common_neighbor(&g, u, v),
                Pattern::WeakPairAdjacent => u,
            };
            return Some(PatternMatch {
                first: u,
                second: v,
                rewrite_at,
            });
        }
    }
    None
}

/// Does `f` exhibit any of the four forbidden patterns?
///
/// Equivalently: some strength-1 transmitter lies within distance 2 of
/// another transmitter of any strength... except that a strength-2
/// vertex at distance exactly 2 from a strength-1 vertex is allowed;
/// only the four listed shapes are forbidden.
pub fn forbidden_broadcast(f: &Broadcast) -> bool {
    let g = f.grid();
    let support: Vec<(Vertex, u8)> = f.support().collect();
    for (i, &(u, su)) in support.iter().enumerate() {
        for &(v, sv) in support.iter().skip(i + 1) {
            if su == 2 && sv == 2 {
                continue;
            }
            let d = g.distance(u, v);
            if d == 1 && su.max(sv) >= 1 {
                // patterns (a) and (d)
                return true;
            }
            if d == 2 && su == 1 && sv == 1 {
                // patterns (b) and (c)
                return true;
            }
        }
    }
    false
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("pattern not present in the broadcast")]
    NotPresent,
}

/// Apply the rewrite for `pattern` to its first occurrence in `f` and
/// check that it keeps the cost and extends the range: returns true iff
/// the rewritten broadcast costs no more than `f` and its range
/// contains the range of `f`.
pub fn replacement_check(f: &Broadcast, pattern: Pattern) -> Result<bool, PatternError> {
    let m = find_pattern(f, pattern).ok_or(PatternError::NotPresent)?;
    let mut rewritten = f.clone();
    match pattern {
        Pattern::WeakBesideStrong => {
            let weak = if f.strength(m.first) == 1 {
                m.first
            } else {
                m.second
            };
            rewritten.set(weak, 0).expect("weak vertex is in the grid");
        }
        _ => {
            rewritten.set(m.first, 0).expect("in grid");
            rewritten.set(m.second, 0).expect("in grid");
            rewritten
                .set(m.rewrite_at, 2)
                .expect("rewrite vertex is in the grid");
        }
    }
    let cost_ok = rewritten.cost() <= f.cost();
    let range_ok = f.range_of().is_subset_of(&rewritten.range_of());
    Ok(cost_ok && range_ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::FactorKind::{Cycle, Path};

    fn window(family: FactorKind, m: u16, k: u16) -> Window {
        Window::new(family, m, k).unwrap()
    }

    #[test]
    fn geometry_of_c3_k14() {
        let w = window(Cycle, 3, 14);
        assert_eq!(w.active_width(), 6);
        assert_eq!(w.active_cols(), 5..=10);
        assert_eq!(w.middle_cols(), 7..=8);
        assert_eq!(w.cell_count(), 18);
        assert_eq!(w.cell_vertex(0), Vertex::new(1, 5));
        assert_eq!(w.cell_vertex(17), Vertex::new(3, 10));
        assert_eq!(w.cell_of(Vertex::new(2, 7)), Some(8));
        assert_eq!(w.cell_of(Vertex::new(2, 4)), None);
    }

    #[test]
    fn raw_enumeration_orders_and_counts() {
        // 3 cells, cost 2: lexicographically ascending.
        let mut raw = RawEnumerator::new(3, 2);
        let mut got = Vec::new();
        while let Some(s) = raw.next_seq() {
            got.push(s.to_vec());
        }
        assert_eq!(
            got,
            vec![
                vec![0, 0, 2],
                vec![0, 1, 1],
                vec![0, 2, 0],
                vec![1, 0, 1],
                vec![1, 1, 0],
                vec![2, 0, 0],
            ]
        );
        // Resume midway.
        let mut raw = RawEnumerator::resuming_after(3, 2, &[0, 2, 0]);
        assert_eq!(raw.next_seq().unwrap(), &[1, 0, 1]);
    }

    #[test]
    fn zero_cost_single_case() {
        let w = window(Cycle, 3, 14);
        let cases: Vec<_> = enumerate_cases(&w, 0, 0).collect();
        assert_eq!(cases.len(), 1);
        assert_eq!(cases[0].cost, 0);
        assert_eq!(orbit_count(&w, 0), 1);
    }

    #[test]
    fn published_case_counts() {
        let c3 = window(Cycle, 3, 14);
        assert_eq!(enumerate_cases(&c3, 2, 2).count(), 54);
        assert_eq!(enumerate_cases(&c3, 3, 3).count(), 302);
        let c4 = window(Cycle, 4, 14);
        assert_eq!(enumerate_cases(&c4, 2, 2).count(), 84);
        assert_eq!(orbit_count(&c4, 3), 644);
    }

    #[test]
    fn burnside_matches_enumeration() {
        for (family, m, k) in [(Cycle, 3, 14), (Cycle, 4, 13), (Path, 4, 13), (Path, 5, 13)] {
            let w = window(family, m, k);
            for cost in 0..=3u32 {
                assert_eq!(
                    orbit_count(&w, cost),
                    enumerate_cases(&w, cost, cost).count() as u64,
                    "{family:?} m={m} k={k} cost={cost}"
                );
            }
        }
    }

    #[test]
    fn canonical_cases_are_canonical_and_distinct_orbits() {
        let w = window(Cycle, 3, 14);
        let cases: Vec<_> = enumerate_cases(&w, 2, 2).collect();
        let perms = w.symmetry_perms();
        for case in &cases {
            assert!(seq_is_canonical(&case.strengths, &perms));
            assert!(is_canonical(&w, &w.case_to_broadcast(&case.strengths)));
        }
        // No two cases share an orbit: apply all transforms and check
        // for collisions.
        let mut seen = std::collections::HashSet::new();
        for case in &cases {
            let mut orbit: Vec<Vec<u8>> = vec![case.strengths.clone()];
            for perm in &perms {
                let img: Vec<u8> = (0..case.strengths.len())
                    .map(|pos| case.strengths[perm[pos]])
                    .collect();
                orbit.push(img);
            }
            orbit.sort();
            orbit.dedup();
            assert!(seen.insert(orbit), "two cases in one orbit");
        }
    }

    #[test]
    fn orbit_membership_count() {
        // Exactly one member of each orbit passes the canonicity test.
        let w = window(Cycle, 4, 13);
        let perms = w.symmetry_perms();
        let seq = {
            let mut s = vec![0u8; w.cell_count()];
            s[0] = 2;
            s[7] = 1;
            s
        };
        let mut orbit: Vec<Vec<u8>> = vec![seq.clone()];
        for perm in &perms {
            orbit.push((0..seq.len()).map(|pos| seq[perm[pos]]).collect());
        }
        orbit.sort();
        orbit.dedup();
        assert_eq!(orbit.len(), 4);
        let canonical = orbit
            .iter()
            .filter(|s| seq_is_canonical(s, &perms))
            .count();
        assert_eq!(canonical, 1);
    }

    fn broadcast(g: Grid, assignments: &[((u16, u16), u8)]) -> Broadcast {
        Broadcast::from_assignments(
            g,
            assignments
                .iter()
                .map(|&((i, j), s)| (Vertex::new(i, j), s)),
        )
        .unwrap()
    }

    #[test]
    fn forbidden_pattern_examples() {
        let g = Grid::new(Path, 5, Path, 9).unwrap();
        // Adjacent strength-1 pair: forbidden (pattern d).
        assert!(forbidden_broadcast(&broadcast(
            g,
            &[((1, 1), 1), ((1, 2), 1)]
        )));
        // Strength 2 beside strength 1: forbidden (pattern a).
        assert!(forbidden_broadcast(&broadcast(
            g,
            &[((1, 1), 2), ((1, 2), 1)]
        )));
        // Two adjacent strength-2 vertices: allowed.
        assert!(!forbidden_broadcast(&broadcast(
            g,
            &[((1, 1), 2), ((1, 2), 2)]
        )));
        // A single strength-2 vertex: allowed.
        assert!(!forbidden_broadcast(&broadcast(g, &[((1, 1), 2)])));
        // Collinear gap (b) and diagonal (c) strength-1 pairs: forbidden.
        assert!(forbidden_broadcast(&broadcast(
            g,
            &[((2, 3), 1), ((2, 5), 1)]
        )));
        assert!(forbidden_broadcast(&broadcast(
            g,
            &[((2, 3), 1), ((3, 4), 1)]
        )));
        // Strength 1 at distance 2 from strength 2: allowed.
        assert!(!forbidden_broadcast(&broadcast(
            g,
            &[((2, 3), 2), ((2, 5), 1)]
        )));
    }

    #[test]
    fn forbidden_equals_weak_pair_within_two() {
        // The four patterns together are exactly: a strength-1
        // transmitter within distance 2 of another strength-1, or
        // adjacent to a strength-2.
        let g = Grid::new(Cycle, 4, Path, 9).unwrap();
        let verts: Vec<Vertex> = g.vertices().collect();
        for &u in &verts {
            for &v in &verts {
                if u >= v {
                    continue;
                }
                for (su, sv) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                    let f = broadcast(g, &[((u.row, u.col), su), ((v.row, v.col), sv)]);
                    let d = g.distance(u, v);
                    let expect = match (su, sv) {
                        (1, 1) => d <= 2,
                        (2, 2) => false,
                        _ => d <= 1,
                    };
                    assert_eq!(forbidden_broadcast(&f), expect, "{u} {v} {su} {sv}");
                    let by_patterns = Pattern::ALL
                        .iter()
                        .any(|&p| find_pattern(&f, p).is_some());
                    assert_eq!(by_patterns, expect, "{u} {v} {su} {sv}");
                }
            }
        }
    }

    #[test]
    fn replacement_checks_hold() {
        let g = Grid::new(Path, 5, Path, 9).unwrap();
        // (d) two adjacent interior strength-1 vertices.
        let f = broadcast(g, &[((3, 4), 1), ((3, 5), 1)]);
        assert_eq!(replacement_check(&f, Pattern::WeakPairAdjacent), Ok(true));
        // (a) cost strictly drops.
        let f = broadcast(g, &[((3, 4), 2), ((3, 5), 1)]);
        assert_eq!(replacement_check(&f, Pattern::WeakBesideStrong), Ok(true));
        // (b) at a grid boundary.
        let f = broadcast(g, &[((1, 1), 1), ((1, 3), 1)]);
        assert_eq!(replacement_check(&f, Pattern::WeakPairGap), Ok(true));
        // (c) diagonal.
        let f = broadcast(g, &[((1, 1), 1), ((2, 2), 1)]);
        assert_eq!(replacement_check(&f, Pattern::WeakPairDiagonal), Ok(true));
        // Pattern not present.
        let f = broadcast(g, &[((1, 1), 2)]);
        assert_eq!(
            replacement_check(&f, Pattern::WeakPairAdjacent),
            Err(PatternError::NotPresent)
        );
    }
}
