//! The proof engine: derived parameters, the six per-case elimination
//! schemes, and the lower-bound certification loop.
//!
//! A proof run enumerates every canonical case of cost `s..=t` on the
//! window's active region and applies, in order: the domination
//! requirement, the forbidden-pattern filter, the optimality test, the
//! column-deletion induction, the forced-broadcast augmentation, and
//! finally exhaustive extension sub-cases. A case surviving all six
//! refutes the run; otherwise the per-step tallies form the report.

use crate::bitset::Mask;
use crate::bounds::{compute_m_vector, compute_t, BoundSpec, MValue, MVector};
use crate::grid::{Broadcast, FactorKind, Grid, GridError, Vertex, VertexSet};
use crate::report::{CaseReport, StepCounts, Survivor};
use crate::solver::{gamma2, SolverCtx, SolverError};
use crate::window::{enumerate_cases, forbidden_support, Window, WindowError};
use std::collections::{BTreeSet, HashMap};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CertifierError {
    #[error(transparent)]
    Window(#[from] WindowError),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("window must have k >= 13 columns for a proof, got {k}")]
    WindowTooNarrow { k: u16 },
    #[error("induction start n0={n0} must be at least k+3={}", *k as u32 + 3)]
    InductionStartTooEarly { n0: u32, k: u16 },
    #[error("supplied {name}={got} does not match derived value {derived}")]
    OverrideMismatch {
        name: &'static str,
        got: String,
        derived: String,
    },
    #[error("cannot delete all columns")]
    NoColumnsLeft,
    #[error("cycle column factor needs at least 3 surviving columns, {left} left")]
    SplicedCycleTooShort { left: u16 },
}

/// Everything a proof run needs: the window, the bound being certified,
/// and the derived search parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofParams {
    pub window: Window,
    pub bound: BoundSpec,
    pub s: u32,
    pub t: u32,
    pub mvec: MVector,
}

/// `s = gamma2` of the graph on the window's middle `k - 12` columns:
/// any case dominating those columns costs at least this much.
pub fn compute_s(w: &Window) -> Result<u32, CertifierError> {
    if w.k() < 13 {
        return Err(CertifierError::WindowTooNarrow { k: w.k() });
    }
    let middle = Grid::new(w.family(), w.rows(), FactorKind::Path, w.k() - 12)?;
    Ok(gamma2(middle)?)
}

impl ProofParams {
    /// Derive `s`, `t`, and the m-vector from the window and bound.
    pub fn derive(window: Window, bound: BoundSpec) -> Result<ProofParams, CertifierError> {
        if window.k() < 13 {
            return Err(CertifierError::WindowTooNarrow { k: window.k() });
        }
        if bound.n0 < window.k() as u32 + 3 {
            return Err(CertifierError::InductionStartTooEarly {
                n0: bound.n0,
                k: window.k(),
            });
        }
        let s = compute_s(&window)?;
        let t = compute_t(&bound, bound.n0, window.k());
        let mvec = compute_m_vector(&bound, bound.n0, window.k());
        Ok(ProofParams {
            window,
            bound,
            s,
            t,
            mvec,
        })
    }

    /// Derive parameters and insist any supplied overrides agree.
    pub fn derive_checked(
        window: Window,
        bound: BoundSpec,
        s: Option<u32>,
        t: Option<u32>,
        mvec: Option<&MVector>,
    ) -> Result<ProofParams, CertifierError> {
        let derived = ProofParams::derive(window, bound)?;
        if let Some(s) = s {
            if s != derived.s {
                return Err(CertifierError::OverrideMismatch {
                    name: "s",
                    got: s.to_string(),
                    derived: derived.s.to_string(),
                });
            }
        }
        if let Some(t) = t {
            if t != derived.t {
                return Err(CertifierError::OverrideMismatch {
                    name: "t",
                    got: t.to_string(),
                    derived: derived.t.to_string(),
                });
            }
        }
        if let Some(mvec) = mvec {
            if *mvec != derived.mvec {
                return Err(CertifierError::OverrideMismatch {
                    name: "m_vector",
                    got: mvec.to_string(),
                    derived: derived.mvec.to_string(),
                });
            }
        }
        Ok(derived)
    }
}

/// Decision memo shared by the solver calls of one worker. Keyed by the
/// spliced column count, the target mask, and the budget.
#[derive(Default)]
pub struct SolveCache {
    map: HashMap<(u16, Mask, u32), bool>,
    pub hits: u64,
    pub misses: u64,
}

impl SolveCache {
    pub fn new() -> SolveCache {
        SolveCache::default()
    }
}

/// Precomputed geometry and solver state for one window, shared by all
/// per-case work.
pub struct ProofContext {
    window: Window,
    grid: Grid,
    mvec: Vec<MValue>,
    /// Solver contexts for the window with `i` columns deleted;
    /// `spliced[0]` is the full window.
    spliced: Vec<SolverCtx>,
    /// Ball masks per vertex index and strength (index `2v + s - 1`).
    ball: Vec<Mask>,
    /// Vertex mask of each column, by 0-based column.
    col_mask: Vec<Mask>,
    middle_mask: Mask,
    cell_vertex: Vec<u16>,
    vertex_of_cell: Vec<Vertex>,
}

/// One enumerated case in compact form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseSeed {
    pub cost: u32,
    /// `(active cell, strength)` pairs.
    pub support: Vec<(u16, u8)>,
}

/// The first pipeline step that resolved a case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Resolution {
    DoesNotDominate,
    ForbiddenBroadcast,
    HasBroadcast,
    InductiveArgument,
    NecessaryHasBroadcast,
    NecessaryInductive,
    /// Every extension sub-case resolved; counts per resolving test.
    Subcases { has_broadcast: u64, inductive: u64 },
    Survived,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NecessaryOutcome {
    HasBroadcast,
    Inductive,
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SubcaseTally {
    pub has_broadcast: u64,
    pub inductive: u64,
}

impl ProofContext {
    pub fn new(window: Window, mvec: &MVector) -> Result<ProofContext, CertifierError> {
        let grid = window.graph();
        let k = window.k();
        let full_ctx = SolverCtx::new(grid)?;
        let mut spliced = vec![full_ctx];
        for deleted in 1..k {
            spliced.push(SolverCtx::new(Grid::new(
                window.family(),
                window.rows(),
                FactorKind::Path,
                k - deleted,
            )?)?);
        }
        let n = grid.vertex_count();
        let mut ball = vec![Mask::EMPTY; 2 * n];
        for v in 0..n {
            ball[2 * v] = *spliced[0].ball(v, 1);
            ball[2 * v + 1] = *spliced[0].ball(v, 2);
        }
        let mut col_mask = vec![Mask::EMPTY; k as usize];
        for v in grid.vertices() {
            col_mask[v.col as usize - 1].insert(grid.index_of(v));
        }
        let mut middle_mask = Mask::EMPTY;
        for c in window.middle_cols() {
            middle_mask.union_in_place(&col_mask[c as usize - 1]);
        }
        let cells = window.cell_count();
        let mut cell_vertex = Vec::with_capacity(cells);
        let mut vertex_of_cell = Vec::with_capacity(cells);
        for cell in 0..cells {
            let v = window.cell_vertex(cell);
            cell_vertex.push(grid.index_of(v) as u16);
            vertex_of_cell.push(v);
        }
        Ok(ProofContext {
            window,
            grid,
            mvec: mvec.0.clone(),
            spliced,
            ball,
            col_mask,
            middle_mask,
            cell_vertex,
            vertex_of_cell,
        })
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    #[inline]
    fn ball_of(&self, vertex_ix: usize, strength: u8) -> &Mask {
        &self.ball[2 * vertex_ix + strength as usize - 1]
    }

    fn vertex(&self, ix: usize) -> Vertex {
        self.grid.vertex_at(ix)
    }

    fn covered_by(&self, support: &[(u16, u8)]) -> Mask {
        let mut covered = Mask::EMPTY;
        for &(v, s) in support {
            covered.union_in_place(self.ball_of(v as usize, s));
        }
        covered
    }

    /// Decision query with memoization: can `targets` be dominated on
    /// the window with `deleted` columns spliced out at cost <= budget?
    fn decide(&self, cache: &mut SolveCache, deleted: u16, targets: &Mask, budget: i64) -> bool {
        if budget < 0 {
            return false;
        }
        if targets.is_empty() {
            return true;
        }
        let key = (deleted, *targets, budget as u32);
        if let Some(&hit) = cache.map.get(&key) {
            cache.hits += 1;
            return hit;
        }
        cache.misses += 1;
        let result = self.spliced[deleted as usize].decide(targets, budget);
        cache.map.insert(key, result);
        result
    }

    /// Some vertex of the middle columns is outside the covered set.
    fn does_not_dominate_mask(&self, covered: &Mask) -> bool {
        !self.middle_mask.is_subset_of(covered)
    }

    fn support_vertices(&self, support: &[(u16, u8)]) -> Vec<(Vertex, u8)> {
        support
            .iter()
            .map(|&(v, s)| (self.vertex(v as usize), s))
            .collect()
    }

    /// The column-deletion induction on target set `r` with case cost
    /// `x`: delete the `i` fullest target columns for `i = 1, 2, ...`
    /// and ask for a cover of the surviving targets within `x - m_i`.
    fn inductive(&self, cache: &mut SolveCache, r: &Mask, x: u32) -> bool {
        let k = self.window.k() as usize;
        // Columns holding targets, fullest first, ties to the left.
        let mut cols: Vec<(u32, u16)> = (0..k)
            .filter_map(|c| {
                let count = self.col_mask[c].intersect(r).len();
                (count > 0).then_some((count, c as u16))
            })
            .collect();
        cols.sort_by_key(|&(count, c)| (std::cmp::Reverse(count), c));

        let mut deleted = vec![false; k];
        for (i, &(_, col)) in cols.iter().enumerate() {
            deleted[col as usize] = true;
            let di = i + 1;
            let MValue::Finite(mi) = self.mvec[di - 1] else {
                continue;
            };
            let budget = x as i64 - mi as i64;
            if budget < 0 {
                continue;
            }
            // Relabel surviving columns left to right.
            let mut new_col = vec![0u16; k];
            let mut next = 0u16;
            for c in 0..k {
                if !deleted[c] {
                    new_col[c] = next;
                    next += 1;
                }
            }
            let k2 = k - di;
            let mut projected = Mask::EMPTY;
            for ix in r.iter() {
                let col = ix % k;
                if !deleted[col] {
                    projected.insert((ix / k) * k2 + new_col[col] as usize);
                }
            }
            if self.decide(cache, di as u16, &projected, budget) {
                return true;
            }
        }
        false
    }

    /// Rows of `col` (0-based) whose vertex is not covered.
    fn uncovered_rows(&self, covered: &Mask, col: usize) -> Vec<u16> {
        let k = self.window.k() as usize;
        (0..self.window.rows())
            .filter(|&row| !covered.contains(row as usize * k + col))
            .collect()
    }

    /// The forced augmentation: every vertex of column `c_6` (resp.
    /// `c_{k-5}`) outside the range forces strength 2 at the same-row
    /// vertex of column `c_4` (resp. `c_{k-3}`).
    fn necessary_additions(&self, covered: &Mask) -> Vec<(u16, u8)> {
        let k = self.window.k() as usize;
        let mut adds = Vec::new();
        for row in self.uncovered_rows(covered, 5) {
            adds.push(((row as usize * k + 3) as u16, 2));
        }
        for row in self.uncovered_rows(covered, k - 6) {
            adds.push(((row as usize * k + (k - 4)) as u16, 2));
        }
        adds
    }

    /// Candidate extension transmitters able to reach the boundary
    /// active column on one side, with the boundary-column rows each
    /// one dominates.
    fn side_candidates(
        &self,
        covered: &Mask,
        support: &[(u16, u8)],
        left: bool,
    ) -> (Vec<u16>, Vec<(u16, u8, Mask)>) {
        let k = self.window.k() as usize;
        let boundary_col = if left { 4 } else { k - 5 };
        let near_col = if left { 3 } else { k - 4 };
        let far_col = if left { 2 } else { k - 3 };
        let undominated = self.uncovered_rows(covered, boundary_col);
        if undominated.is_empty() {
            return (undominated, Vec::new());
        }
        let boundary_mask = &self.col_mask[boundary_col];
        let occupied: Mask = support.iter().map(|&(v, _)| v as usize).collect();
        let mut cands = Vec::new();
        for row in 0..self.window.rows() as usize {
            let near = (row * k + near_col) as u16;
            if !occupied.contains(near as usize) {
                for s in [1u8, 2] {
                    let dom = self.ball_of(near as usize, s).intersect(boundary_mask);
                    cands.push((near, s, dom));
                }
            }
            let far = (row * k + far_col) as u16;
            if !occupied.contains(far as usize) {
                let dom = self.ball_of(far as usize, 2).intersect(boundary_mask);
                cands.push((far, 2, dom));
            }
        }
        (undominated, cands)
    }

    /// All extension sets on one side: subsets of the candidates that
    /// dominate every undominated boundary vertex, with no candidate's
    /// dominated boundary set contained in another's (such a candidate
    /// is redundant), and introducing no forbidden pattern.
    fn side_extensions(
        &self,
        support: &[(u16, u8)],
        undominated_rows: &[u16],
        cands: &[(u16, u8, Mask)],
    ) -> Vec<Vec<(u16, u8)>> {
        if undominated_rows.is_empty() {
            return vec![Vec::new()];
        }
        let k = self.window.k() as usize;
        let need: Mask = undominated_rows
            .iter()
            .map(|&row| {
                let col = cands
                    .first()
                    .map(|&(v, _, _)| {
                        // boundary col is shared by all candidates' dom masks
                        let _ = v;
                    })
                    .unwrap_or(());
                let _ = col;
                row as usize
            })
            .map(|_| 0usize) // placeholder, replaced below
            .collect();
        let _ = need;
        // Build the needed mask directly from the boundary column.
        let boundary_col = {
            // Recover from any candidate's dom mask: all candidates share
            // the same boundary column; fall back to computing from rows.
            // The caller knows the side, so recompute from it instead.
            unreachable!()
        };
        #[allow(unreachable_code)]
        {
            let _ = boundary_col;
            let _ = k;
            Vec::new()
        }
    }

    fn support_occupied(&self, support: &[(u16, u8)]) -> Mask {
        support.iter().map(|&(v, _)| v as usize).collect()
    }

    /// Full per-case pipeline.
    pub fn resolve(&self, cache: &mut SolveCache, seed: &CaseSeed) -> Resolution {
        let mut support: Vec<(u16, u8)> = seed
            .support
            .iter()
            .map(|&(cell, s)| (self.cell_vertex[cell as usize], s))
            .collect();
        let covered = self.covered_by(&support);
        if self.does_not_dominate_mask(&covered) {
            return Resolution::DoesNotDominate;
        }
        let verts = self.support_vertices(&support);
        if forbidden_support(&self.grid, &verts) {
            return Resolution::ForbiddenBroadcast;
        }
        let cost = seed.cost;
        if self.decide(cache, 0, &covered, cost as i64 - 1) {
            return Resolution::HasBroadcast;
        }
        if self.inductive(cache, &covered, cost) {
            return Resolution::InductiveArgument;
        }
        // Necessary broadcasts.
        let adds = self.necessary_additions(&covered);
        let mut covered2 = covered;
        for &(v, s) in &adds {
            covered2.union_in_place(self.ball_of(v as usize, s));
        }
        let cost2 = cost + adds.iter().map(|&(_, s)| s as u32).sum::<u32>();
        support.extend_from_slice(&adds);
        if self.decide(cache, 0, &covered2, cost2 as i64 - 1) {
            return Resolution::NecessaryHasBroadcast;
        }
        if self.inductive(cache, &covered2, cost2) {
            return Resolution::NecessaryInductive;
        }
        // All extension sub-cases.
        match self.subcases(cache, &support, &covered2, cost2) {
            Some(tally) => Resolution::Subcases {
                has_broadcast: tally.has_broadcast,
                inductive: tally.inductive,
            },
            None => Resolution::Survived,
        }
    }

    /// Enumerate and resolve every extension of the augmented case;
    /// `None` when some extension survives both tests.
    fn subcases(
        &self,
        cache: &mut SolveCache,
        support: &[(u16, u8)],
        covered: &Mask,
        cost: u32,
    ) -> Option<SubcaseTally> {
        let lefts = self.one_side_extensions(support, covered, true);
        let rights = self.one_side_extensions(support, covered, false);
        let mut tally = SubcaseTally::default();
        for left in &lefts {
            for right in &rights {
                let mut covered3 = *covered;
                let mut cost3 = cost;
                for &(v, s) in left.iter().chain(right.iter()) {
                    covered3.union_in_place(self.ball_of(v as usize, s));
                    cost3 += s as u32;
                }
                if self.decide(cache, 0, &covered3, cost3 as i64 - 1) {
                    tally.has_broadcast += 1;
                } else if self.inductive(cache, &covered3, cost3) {
                    tally.inductive += 1;
                } else {
                    return None;
                }
            }
        }
        Some(tally)
    }

    /// Valid extension sets for one side (empty set when nothing on
    /// that side is undominated).
    fn one_side_extensions(
        &self,
        support: &[(u16, u8)],
        covered: &Mask,
        left: bool,
    ) -> Vec<Vec<(u16, u8)>> {
        let (undominated, cands) = self.side_candidates(covered, support, left);
        if undominated.is_empty() {
            return vec![Vec::new()];
        }
        let k = self.window.k() as usize;
        let boundary_col = if left { 4 } else { k - 5 };
        let mut need = Mask::EMPTY;
        for &row in &undominated {
            need.insert(row as usize * k + boundary_col);
        }
        // Suffix unions for cover pruning.
        let mut suffix = vec![Mask::EMPTY; cands.len() + 1];
        for i in (0..cands.len()).rev() {
            suffix[i] = suffix[i + 1].union(&cands[i].2);
        }
        let mut out = Vec::new();
        let mut chosen: Vec<usize> = Vec::new();
        self.extend_side(
            support,
            &need,
            &cands,
            &suffix,
            0,
            Mask::EMPTY,
            &mut chosen,
            &mut out,
        );
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_side(
        &self,
        support: &[(u16, u8)],
        need: &Mask,
        cands: &[(u16, u8, Mask)],
        suffix: &[Mask],
        ix: usize,
        dominated: Mask,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<(u16, u8)>>,
    ) {
        if need.is_subset_of(&dominated) {
            // A covering set; adding more would leave a redundant
            // candidate only if incomparability failed, which the
            // recursion checks, so keep extending as well as recording.
            let adds: Vec<(u16, u8)> = chosen.iter().map(|&c| (cands[c].0, cands[c].1)).collect();
            if !self.extension_forbidden(support, &adds) {
                out.push(adds);
            }
        }
        if ix == cands.len() {
            return;
        }
        if !need.is_subset_of(&dominated.union(&suffix[ix])) {
            return;
        }
        // Option 1: skip candidate ix.
        self.extend_side(support, need, cands, suffix, ix + 1, dominated, chosen, out);
        // Option 2: take it, if no chosen candidate's boundary coverage
        // contains or is contained in its coverage, and the same vertex
        // is not already used.
        let (v, _, dom) = &cands[ix];
        let usable = chosen.iter().all(|&c| {
            cands[c].0 != *v
                && !cands[c].2.is_subset_of(dom)
                && !dom.is_subset_of(&cands[c].2)
        });
        if usable {
            chosen.push(ix);
            self.extend_side(
                support,
                need,
                cands,
                suffix,
                ix + 1,
                dominated.union(dom),
                chosen,
                out,
            );
            chosen.pop();
        }
    }

    fn extension_forbidden(&self, support: &[(u16, u8)], adds: &[(u16, u8)]) -> bool {
        let mut verts = self.support_vertices(support);
        verts.extend(adds.iter().map(|&(v, s)| (self.vertex(v as usize), s)));
        forbidden_support(&self.grid, &verts)
    }
}

/// Does the case fail to dominate some vertex of the middle columns
/// `c_7 ..= c_{k-6}`?
pub fn does_not_dominate(w: &Window, g: &Broadcast) -> bool {
    debug_assert_eq!(g.grid(), w.graph());
    let range = g.range_of();
    !w.middle_cols().all(|col| {
        (1..=w.rows()).all(|row| range.contains(Vertex::new(row, col)))
    })
}

fn seed_of(w: &Window, g: &Broadcast) -> CaseSeed {
    let mut support = Vec::new();
    for (v, s) in g.support() {
        let cell = w
            .cell_of(v)
            .expect("case support must lie in the active columns");
        support.push((cell as u16, s));
    }
    CaseSeed {
        cost: g.cost(),
        support,
    }
}

/// The induction test on an explicit target set (library surface; proof
/// runs use the shared context directly).
pub fn inductive_argument(
    w: &Window,
    targets: &VertexSet,
    x: u32,
    mvec: &MVector,
) -> Result<bool, CertifierError> {
    let ctx = ProofContext::new(*w, mvec)?;
    let mut cache = SolveCache::new();
    let grid = w.graph();
    let mask: Mask = targets.iter().map(|v| grid.index_of(v)).collect();
    Ok(ctx.inductive(&mut cache, &mask, x))
}

/// The forced-broadcast test: augment `g` with the strength-2
/// transmitters its uncovered `c_6`/`c_{k-5}` vertices force, then try
/// the optimality and induction tests on the augmented case.
pub fn necessary_broadcast(
    w: &Window,
    g: &Broadcast,
    mvec: &MVector,
) -> Result<NecessaryOutcome, CertifierError> {
    let ctx = ProofContext::new(*w, mvec)?;
    let mut cache = SolveCache::new();
    let seed = seed_of(w, g);
    let support: Vec<(u16, u8)> = seed
        .support
        .iter()
        .map(|&(cell, s)| (ctx.cell_vertex[cell as usize], s))
        .collect();
    let covered = ctx.covered_by(&support);
    let adds = ctx.necessary_additions(&covered);
    let mut covered2 = covered;
    for &(v, s) in &adds {
        covered2.union_in_place(ctx.ball_of(v as usize, s));
    }
    let cost2 = seed.cost + adds.iter().map(|&(_, s)| s as u32).sum::<u32>();
    if ctx.decide(&mut cache, 0, &covered2, cost2 as i64 - 1) {
        Ok(NecessaryOutcome::HasBroadcast)
    } else if ctx.inductive(&mut cache, &covered2, cost2) {
        Ok(NecessaryOutcome::Inductive)
    } else {
        Ok(NecessaryOutcome::Neither)
    }
}

/// Resolve every extension sub-case of `g`'s augmented broadcast.
/// Returns `(true, tally)` when all of them fall to one of the two
/// tests.
pub fn all_subcases(
    w: &Window,
    g: &Broadcast,
    mvec: &MVector,
) -> Result<(bool, SubcaseTally), CertifierError> {
    let ctx = ProofContext::new(*w, mvec)?;
    let mut cache = SolveCache::new();
    let seed = seed_of(w, g);
    let mut support: Vec<(u16, u8)> = seed
        .support
        .iter()
        .map(|&(cell, s)| (ctx.cell_vertex[cell as usize], s))
        .collect();
    let covered = ctx.covered_by(&support);
    let adds = ctx.necessary_additions(&covered);
    let mut covered2 = covered;
    for &(v, s) in &adds {
        covered2.union_in_place(ctx.ball_of(v as usize, s));
    }
    let cost2 = seed.cost + adds.iter().map(|&(_, s)| s as u32).sum::<u32>();
    support.extend_from_slice(&adds);
    match ctx.subcases(&mut cache, &support, &covered2, cost2) {
        Some(tally) => Ok((true, tally)),
        None => Ok((false, SubcaseTally::default())),
    }
}

/// Run the whole certification loop serially. The parallel runner in
/// [`crate::runner`] produces bit-identical reports.
pub fn proved_lower_bound(params: &ProofParams) -> Result<(bool, CaseReport), CertifierError> {
    let ctx = ProofContext::new(params.window, &params.mvec)?;
    let mut cache = SolveCache::new();
    let mut report = CaseReport::empty(params.s, params.t);
    for case in enumerate_cases(&params.window, params.s, params.t) {
        let seed = CaseSeed {
            cost: case.cost,
            support: case.support().map(|(c, s)| (c as u16, s)).collect(),
        };
        let counts = report.counts_for_mut(case.cost);
        counts.total_cases += 1;
        match ctx.resolve(&mut cache, &seed) {
            Resolution::DoesNotDominate => counts.does_not_dominate += 1,
            Resolution::ForbiddenBroadcast => counts.forbidden_broadcast += 1,
            Resolution::HasBroadcast => counts.has_broadcast += 1,
            Resolution::InductiveArgument => counts.inductive_argument += 1,
            Resolution::NecessaryHasBroadcast => counts.necessary_has_broadcast += 1,
            Resolution::NecessaryInductive => counts.necessary_inductive += 1,
            Resolution::Subcases {
                has_broadcast,
                inductive,
            } => {
                counts.all_subcases_parents += 1;
                counts.all_subcases_has_broadcast += has_broadcast;
                counts.all_subcases_inductive += inductive;
            }
            Resolution::Survived => {
                report.verdict = false;
                report.survivor = Some(Survivor {
                    cost: case.cost,
                    strengths: case.strengths.clone(),
                });
                return Ok((false, report));
            }
        }
    }
    Ok((true, report))
}

/// Delete a set of columns (1-based labels) and rejoin the survivors in
/// their left-to-right order. Returns the spliced grid and the map from
/// surviving original labels to new labels.
pub fn splice_columns(
    grid: &Grid,
    delete: &BTreeSet<u16>,
) -> Result<(Grid, Vec<Option<u16>>), CertifierError> {
    let n = grid.cols();
    let keep = n as usize - delete.len();
    if keep == 0 {
        return Err(CertifierError::NoColumnsLeft);
    }
    if grid.col_factor() == FactorKind::Cycle && keep < 3 {
        return Err(CertifierError::SplicedCycleTooShort { left: keep as u16 });
    }
    let spliced = Grid::new(
        grid.row_factor(),
        grid.rows(),
        grid.col_factor(),
        keep as u16,
    )?;
    let mut map = vec![None; n as usize + 1];
    let mut next = 1u16;
    for c in 1..=n {
        if !delete.contains(&c) {
            map[c as usize] = Some(next);
            next += 1;
        }
    }
    Ok((spliced, map))
}

/// The restrict-and-relocate construction: restrict `f` to the spliced
/// grid, then move each deleted-column transmitter to the nearest
/// surviving same-row vertex (ties toward lower column index), keeping
/// the larger strength where transmitters land together.
pub fn restrict_and_patch(
    f: &Broadcast,
    delete: &BTreeSet<u16>,
) -> Result<Broadcast, CertifierError> {
    let grid = f.grid();
    let (spliced, map) = splice_columns(&grid, delete)?;
    let col_factor = grid.col_factor();
    let n = grid.cols();
    let mut out = Broadcast::zero(spliced);
    let mut raise = |v: Vertex, s: u8, out: &mut Broadcast| {
        let cur = out.strength(v);
        if s > cur {
            out.set(v, s).expect("vertex in spliced grid");
        }
    };
    for (v, s) in f.support() {
        match map[v.col as usize] {
            Some(new_col) => raise(Vertex::new(v.row, new_col), s, &mut out),
            None => {
                // Nearest surviving column in the original column
                // factor, ties toward the lower index.
                let target = (1..=n)
                    .filter(|c| map[*c as usize].is_some())
                    .min_by_key(|&c| (col_factor.distance(n, v.col, c), c))
                    .expect("at least one column survives");
                let new_col = map[target as usize].expect("target survives");
                raise(Vertex::new(v.row, new_col), s, &mut out);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SweepRow {
    pub n: u32,
    pub gamma: u32,
    pub bound: u32,
    pub ok: bool,
}

/// Compare exact domination numbers of `(family)_rows x C_n` against
/// the bound formula over a range of `n`.
pub fn base_case_sweep(
    row_factor: FactorKind,
    rows: u16,
    bound: &BoundSpec,
    n_lo: u32,
    n_hi: u32,
) -> Result<Vec<SweepRow>, CertifierError> {
    let mut out = Vec::new();
    for n in n_lo..=n_hi {
        let grid = Grid::new(row_factor, rows, FactorKind::Cycle, n as u16)?;
        let gamma = gamma2(grid)?;
        let b = bound.eval(n);
        out.push(SweepRow {
            n,
            gamma,
            bound: b,
            ok: gamma == b,
        });
    }
    Ok(out)
}
