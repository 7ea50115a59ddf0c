//! Exact minimum-cost 2-limited broadcast covers.
//!
//! `min_cost_cover` finds a cheapest broadcast whose range contains a
//! given target set; `gamma2` is the special case where the targets are
//! all vertices. The search is branch-and-bound over candidate
//! (vertex, strength) balls with two admissible lower bounds: a greedy
//! packing of pairwise-uncoverable targets, and a density bound from
//! the best coverage-per-unit-cost still available. Results are exact
//! and deterministic.

use crate::bitset::Mask;
use crate::grid::{Broadcast, Grid, GridError, Vertex, VertexSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("{grid} has {vertices} vertices; exact solver handles at most {max}")]
    GridTooLarge {
        grid: Grid,
        vertices: usize,
        max: usize,
    },
    #[error("brute-force oracle limited to {max} vertices, got {vertices}")]
    OracleTooLarge { vertices: usize, max: usize },
    #[error(transparent)]
    Grid(#[from] GridError),
}

/// A cover query: dominate `targets` inside `grid`, optionally within a
/// cost budget.
#[derive(Debug, Clone)]
pub struct CoverInstance {
    pub grid: Grid,
    pub targets: VertexSet,
    pub budget: Option<u32>,
}

/// Result of an exact cover solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverSolution {
    /// A cheapest cover. The witness dominates the targets, costs
    /// exactly `cost`, and has the lexicographically least support in
    /// `(row, col, strength)` order among optimal covers.
    Optimal { cost: u32, witness: Broadcast },
    /// No cover exists within the supplied budget.
    InfeasibleWithinBudget,
}

impl CoverSolution {
    pub fn cost(&self) -> Option<u32> {
        match self {
            CoverSolution::Optimal { cost, .. } => Some(*cost),
            CoverSolution::InfeasibleWithinBudget => None,
        }
    }
}

/// Per-grid precomputation shared by every solve on that grid.
///
/// Candidate `2*v + (strength-1)` is the ball of radius `strength`
/// around the vertex with row-major index `v`.
pub struct SolverCtx {
    grid: Grid,
    cand_ball: Vec<Mask>,
    cand_cost: Vec<u8>,
    coverers: Vec<Vec<u16>>,
    conflict: Vec<Mask>,
    full: Mask,
}

impl SolverCtx {
    pub fn new(grid: Grid) -> Result<SolverCtx, SolverError> {
        let n = grid.vertex_count();
        if n > Mask::CAPACITY {
            return Err(SolverError::GridTooLarge {
                grid,
                vertices: n,
                max: Mask::CAPACITY,
            });
        }
        let verts: Vec<Vertex> = grid.vertices().collect();
        let mut cand_ball = vec![Mask::EMPTY; 2 * n];
        let mut cand_cost = vec![0u8; 2 * n];
        for (vi, &v) in verts.iter().enumerate() {
            for (ui, &u) in verts.iter().enumerate() {
                let d = grid.distance(v, u);
                if d <= 1 {
                    cand_ball[2 * vi].insert(ui);
                }
                if d <= 2 {
                    cand_ball[2 * vi + 1].insert(ui);
                }
            }
            cand_cost[2 * vi] = 1;
            cand_cost[2 * vi + 1] = 2;
        }
        let mut coverers = vec![Vec::new(); n];
        let mut conflict = vec![Mask::EMPTY; n];
        for c in 0..2 * n {
            for u in cand_ball[c].iter() {
                coverers[u].push(c as u16);
                conflict[u].union_in_place(&cand_ball[c]);
            }
        }
        Ok(SolverCtx {
            grid,
            cand_ball,
            cand_cost,
            coverers,
            conflict,
            full: Mask::all_below(n),
        })
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn full_mask(&self) -> Mask {
        self.full
    }

    /// Ball of the given radius (1 or 2) around a vertex index.
    #[inline]
    pub fn ball(&self, vertex_index: usize, strength: u8) -> &Mask {
        &self.cand_ball[2 * vertex_index + strength as usize - 1]
    }

    pub fn mask_of(&self, set: &VertexSet) -> Mask {
        set.iter().map(|v| self.grid.index_of(v)).collect()
    }

    pub fn set_of(&self, mask: &Mask) -> VertexSet {
        VertexSet::from_vertices(self.grid, mask.iter().map(|i| self.grid.vertex_at(i)))
            .expect("mask indices are grid vertices")
    }

    /// Admissible lower bound on the cost of covering `uncovered`.
    fn lower_bound(&self, uncovered: &Mask) -> u32 {
        // Greedy packing: targets no single ball can cover in pairs
        // each force one unit of cost.
        let mut packed = 0u32;
        let mut blocked = Mask::EMPTY;
        for u in uncovered.iter() {
            if !blocked.contains(u) {
                packed += 1;
                blocked.union_in_place(&self.conflict[u]);
            }
        }
        // Density: each cost unit covers at most max(2*|ball1|, |ball2|)/2
        // uncovered targets.
        let total = uncovered.len();
        let mut best_per_two = 1u32;
        for c in 0..self.cand_ball.len() {
            let pop = self.cand_ball[c].intersect(uncovered).len();
            let scaled = if self.cand_cost[c] == 1 { 2 * pop } else { pop };
            best_per_two = best_per_two.max(scaled);
        }
        let density = (2 * total).div_ceil(best_per_two);
        packed.max(density)
    }

    /// Uncovered target with the fewest usable candidates, plus its
    /// candidate list. `None` means some target cannot be covered.
    fn pick_branch_target(&self, uncovered: &Mask, banned: &[bool]) -> Option<Vec<u16>> {
        let mut best: Option<(usize, usize)> = None; // (count, vertex)
        for u in uncovered.iter() {
            let count = self.coverers[u]
                .iter()
                .filter(|&&c| !banned[c as usize])
                .count();
            if count == 0 {
                return None;
            }
            if best.map_or(true, |(bc, _)| count < bc) {
                best = Some((count, u));
                if count == 1 {
                    break;
                }
            }
        }
        let (_, v) = best?;
        let mut cands: Vec<u16> = self.coverers[v]
            .iter()
            .copied()
            .filter(|&c| !banned[c as usize])
            .collect();
        // Most coverage per unit cost first; ties by candidate id for
        // determinism.
        cands.sort_by_key(|&c| {
            let pop = self.cand_ball[c as usize].intersect(uncovered).len();
            let scaled = if self.cand_cost[c as usize] == 1 {
                2 * pop
            } else {
                pop
            };
            (std::cmp::Reverse(scaled), c)
        });
        Some(cands)
    }

    fn decide_rec(&self, uncovered: Mask, budget: u32, banned: &mut Vec<bool>) -> bool {
        if uncovered.is_empty() {
            return true;
        }
        if budget == 0 || self.lower_bound(&uncovered) > budget {
            return false;
        }
        let Some(cands) = self.pick_branch_target(&uncovered, banned) else {
            return false;
        };
        let mut newly_banned = Vec::with_capacity(cands.len());
        let mut found = false;
        for &c in &cands {
            let cost = self.cand_cost[c as usize] as u32;
            if cost <= budget
                && self.decide_rec(uncovered.minus(&self.cand_ball[c as usize]), budget - cost, banned)
            {
                found = true;
                break;
            }
            // Later branches may not reuse this candidate anywhere.
            banned[c as usize] = true;
            newly_banned.push(c);
        }
        for c in newly_banned {
            banned[c as usize] = false;
        }
        found
    }

    /// Can `targets` be dominated with cost at most `budget`?
    pub fn decide(&self, targets: &Mask, budget: i64) -> bool {
        if budget < 0 {
            return false;
        }
        let budget = budget.min(u32::MAX as i64) as u32;
        let mut banned = vec![false; self.cand_ball.len()];
        self.decide_rec(*targets, budget, &mut banned)
    }

    /// `decide` restricted to candidate ids `>= floor` with `extra`
    /// candidates banned. Used for lexicographic witness extraction.
    fn decide_suffix(&self, targets: &Mask, budget: u32, floor: usize, extra: &[u16]) -> bool {
        let mut banned = vec![false; self.cand_ball.len()];
        for c in 0..floor.min(banned.len()) {
            banned[c] = true;
        }
        for &c in extra {
            banned[c as usize] = true;
        }
        self.decide_rec(*targets, budget, &mut banned)
    }

    fn greedy_cover(&self, targets: &Mask) -> Vec<u16> {
        let mut chosen = Vec::new();
        let mut uncovered = *targets;
        while !uncovered.is_empty() {
            let mut best: (u32, u16) = (0, 0);
            let mut best_key = 0u32;
            for c in 0..self.cand_ball.len() {
                let pop = self.cand_ball[c].intersect(&uncovered).len();
                if pop == 0 {
                    continue;
                }
                let scaled = if self.cand_cost[c] == 1 { 2 * pop } else { pop };
                if scaled > best_key {
                    best_key = scaled;
                    best = (pop, c as u16);
                }
            }
            debug_assert!(best_key > 0);
            chosen.push(best.1);
            uncovered = uncovered.minus(&self.cand_ball[best.1 as usize]);
        }
        chosen
    }

    fn min_rec(&self, uncovered: Mask, cost_so_far: u32, best: &mut u32, banned: &mut Vec<bool>) {
        if uncovered.is_empty() {
            *best = (*best).min(cost_so_far);
            return;
        }
        if cost_so_far + self.lower_bound(&uncovered) >= *best {
            return;
        }
        let Some(cands) = self.pick_branch_target(&uncovered, banned) else {
            return;
        };
        let mut newly_banned = Vec::with_capacity(cands.len());
        for &c in &cands {
            let cost = self.cand_cost[c as usize] as u32;
            if cost_so_far + cost < *best {
                self.min_rec(
                    uncovered.minus(&self.cand_ball[c as usize]),
                    cost_so_far + cost,
                    best,
                    banned,
                );
            }
            banned[c as usize] = true;
            newly_banned.push(c);
        }
        for c in newly_banned {
            banned[c as usize] = false;
        }
    }

    /// Exact minimum cover cost of `targets`, if it does not exceed
    /// `cap` (pass `None` for the unconstrained optimum).
    pub fn min_cost(&self, targets: &Mask, cap: Option<u32>) -> Option<u32> {
        if targets.is_empty() {
            return Some(0);
        }
        let greedy = self.greedy_cover(targets);
        let greedy_cost: u32 = greedy
            .iter()
            .map(|&c| self.cand_cost[c as usize] as u32)
            .sum();
        // One past the cheapest acceptable answer so min_rec can settle it.
        let mut best = match cap {
            Some(cap) => cap.min(greedy_cost.saturating_sub(1)) + 1,
            None => greedy_cost,
        };
        let mut banned = vec![false; self.cand_ball.len()];
        self.min_rec(*targets, 0, &mut best, &mut banned);
        if greedy_cost < best {
            best = greedy_cost;
        }
        match cap {
            Some(cap) if best > cap => None,
            _ => Some(best),
        }
    }

    /// Lexicographically least support achieving the optimal cost.
    fn lexmin_support(&self, targets: &Mask, optimal: u32) -> Vec<u16> {
        let mut chosen: Vec<u16> = Vec::new();
        let mut siblings: Vec<u16> = Vec::new();
        let mut remaining = *targets;
        let mut budget = optimal;
        let mut floor = 0usize;
        while !remaining.is_empty() {
            let mut committed = false;
            for c in floor..self.cand_ball.len() {
                let cost = self.cand_cost[c] as u32;
                if cost > budget || !self.cand_ball[c].intersects(&remaining) {
                    continue;
                }
                let rest = remaining.minus(&self.cand_ball[c]);
                let mut extra = siblings.clone();
                extra.push(self.sibling(c));
                if self.decide_suffix(&rest, budget - cost, c + 1, &extra) {
                    chosen.push(c as u16);
                    siblings.push(self.sibling(c));
                    remaining = rest;
                    budget -= cost;
                    floor = c + 1;
                    committed = true;
                    break;
                }
            }
            assert!(committed, "optimal cost admits a witness");
        }
        chosen
    }

    fn sibling(&self, c: usize) -> u16 {
        (c ^ 1) as u16
    }

    fn support_to_broadcast(&self, support: &[u16]) -> Broadcast {
        Broadcast::from_assignments(
            self.grid,
            support.iter().map(|&c| {
                (
                    self.grid.vertex_at(c as usize / 2),
                    self.cand_cost[c as usize],
                )
            }),
        )
        .expect("support vertices are grid vertices")
    }
}

/// Minimum-cost broadcast dominating `targets`; always feasible when no
/// budget is given (strength 1 everywhere dominates everything).
pub fn min_cost_cover(grid: Grid, targets: &VertexSet) -> Result<CoverSolution, SolverError> {
    solve(&CoverInstance {
        grid,
        targets: targets.clone(),
        budget: None,
    })
}

pub fn solve(instance: &CoverInstance) -> Result<CoverSolution, SolverError> {
    let ctx = SolverCtx::new(instance.grid)?;
    let mask = ctx.mask_of(&instance.targets);
    match ctx.min_cost(&mask, instance.budget) {
        None => Ok(CoverSolution::InfeasibleWithinBudget),
        Some(cost) => {
            let support = ctx.lexmin_support(&mask, cost);
            Ok(CoverSolution::Optimal {
                cost,
                witness: ctx.support_to_broadcast(&support),
            })
        }
    }
}

/// Can `targets` be dominated on `grid` with cost at most `x`?
///
/// Negative budgets are always unsatisfiable, even for empty targets.
pub fn has_broadcast(grid: Grid, targets: &VertexSet, x: i64) -> Result<bool, SolverError> {
    if x < 0 {
        return Ok(false);
    }
    let ctx = SolverCtx::new(grid)?;
    let mask = ctx.mask_of(targets);
    Ok(ctx.decide(&mask, x))
}

/// The 2-limited broadcast domination number of `grid`.
pub fn gamma2(grid: Grid) -> Result<u32, SolverError> {
    let ctx = SolverCtx::new(grid)?;
    let full = ctx.full_mask();
    Ok(ctx
        .min_cost(&full, None)
        .expect("uncapped cover always exists"))
}

const ORACLE_MAX_VERTICES: usize = 14;

/// Exhaustive-enumeration oracle for `gamma2`, usable up to 14 vertices.
///
/// Deliberately avoids the branch-and-bound machinery: iterative
/// deepening over exact costs with a plain distance check per
/// assignment.
pub fn brute_force_gamma2(grid: Grid) -> Result<u32, SolverError> {
    let n = grid.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(SolverError::OracleTooLarge {
            vertices: n,
            max: ORACLE_MAX_VERTICES,
        });
    }
    let verts: Vec<Vertex> = grid.vertices().collect();
    let mut strengths = vec![0u8; n];
    for cost in 0..=(2 * n as u32) {
        if assign_exact_cost(&grid, &verts, &mut strengths, 0, cost) {
            return Ok(cost);
        }
    }
    unreachable!("strength 2 everywhere dominates");
}

fn assign_exact_cost(
    grid: &Grid,
    verts: &[Vertex],
    strengths: &mut [u8],
    pos: usize,
    remaining: u32,
) -> bool {
    if pos == verts.len() {
        return remaining == 0 && dominates_all(grid, verts, strengths);
    }
    let slots_left = (verts.len() - pos) as u32;
    if remaining > 2 * slots_left {
        return false;
    }
    for s in 0..=2u8.min(remaining as u8) {
        strengths[pos] = s;
        if assign_exact_cost(grid, verts, strengths, pos + 1, remaining - s as u32) {
            return true;
        }
    }
    strengths[pos] = 0;
    false
}

fn dominates_all(grid: &Grid, verts: &[Vertex], strengths: &[u8]) -> bool {
    verts.iter().all(|&u| {
        verts
            .iter()
            .zip(strengths.iter())
            .any(|(&v, &s)| s > 0 && grid.distance(u, v) <= s as u32)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::FactorKind::{Cycle, Path};

    fn grid(rk: crate::grid::FactorKind, m: u16, ck: crate::grid::FactorKind, n: u16) -> Grid {
        Grid::new(rk, m, ck, n).unwrap()
    }

    #[test]
    fn empty_targets_cost_zero() {
        let g = grid(Path, 3, Path, 3);
        let sol = min_cost_cover(g, &VertexSet::empty(g)).unwrap();
        assert_eq!(sol.cost(), Some(0));
    }

    #[test]
    fn single_vertex_grid() {
        let g = grid(Path, 1, Path, 1);
        let sol = min_cost_cover(g, &VertexSet::full(g)).unwrap();
        assert_eq!(sol.cost(), Some(1));
    }

    #[test]
    fn paper_gamma_values() {
        assert_eq!(gamma2(grid(Cycle, 3, Path, 2)).unwrap(), 2);
        assert_eq!(gamma2(grid(Cycle, 3, Cycle, 3)).unwrap(), 2);
        assert_eq!(gamma2(grid(Cycle, 5, Path, 4)).unwrap(), 5);
        assert_eq!(gamma2(grid(Cycle, 6, Path, 4)).unwrap(), 5);
        assert_eq!(gamma2(grid(Path, 4, Path, 6)).unwrap(), 6);
    }

    #[test]
    fn paper_gamma_p5p7() {
        assert_eq!(gamma2(grid(Path, 5, Path, 7)).unwrap(), 8);
    }

    #[test]
    fn has_broadcast_edges() {
        let g = grid(Cycle, 3, Path, 2);
        assert!(has_broadcast(g, &VertexSet::empty(g), 0).unwrap());
        assert!(!has_broadcast(g, &VertexSet::empty(g), -1).unwrap());
        assert!(!has_broadcast(g, &VertexSet::full(g), 1).unwrap());
        assert!(has_broadcast(g, &VertexSet::full(g), 2).unwrap());
    }

    #[test]
    fn witness_dominates_and_is_lexmin() {
        let g = grid(Path, 3, Path, 3);
        let sol = min_cost_cover(g, &VertexSet::full(g)).unwrap();
        let CoverSolution::Optimal { cost, witness } = sol else {
            panic!("always feasible");
        };
        assert_eq!(cost, witness.cost());
        assert!(witness.dominates(&VertexSet::full(g)));
        // gamma2(P3xP3) = 2 and no cost-2 support starting before the
        // center completes, so the lexmin witness is strength 2 at (2,2).
        assert_eq!(cost, 2);
        let support: Vec<_> = witness.support().collect();
        assert_eq!(support, vec![(Vertex::new(2, 2), 2)]);
    }

    #[test]
    fn budget_caps_are_honored() {
        let g = grid(Path, 4, Path, 4);
        let opt = gamma2(g).unwrap();
        let capped = solve(&CoverInstance {
            grid: g,
            targets: VertexSet::full(g),
            budget: Some(opt - 1),
        })
        .unwrap();
        assert_eq!(capped, CoverSolution::InfeasibleWithinBudget);
        let exact = solve(&CoverInstance {
            grid: g,
            targets: VertexSet::full(g),
            budget: Some(opt),
        })
        .unwrap();
        assert_eq!(exact.cost(), Some(opt));
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_gamma2(grid(Path, 1, Path, 3)).unwrap(), 1);
        assert_eq!(brute_force_gamma2(grid(Path, 2, Path, 2)).unwrap(), 2);
        let g = grid(Path, 3, Path, 4);
        assert_eq!(brute_force_gamma2(g).unwrap(), gamma2(g).unwrap());
    }

    #[test]
    fn brute_force_rejects_oversized() {
        let g = grid(Path, 4, Path, 4);
        assert!(matches!(
            brute_force_gamma2(g),
            Err(SolverError::OracleTooLarge { .. })
        ));
    }

    #[test]
    fn agrees_with_oracle_on_small_grids() {
        for (rk, ck) in [(Path, Path), (Path, Cycle), (Cycle, Path), (Cycle, Cycle)] {
            for m in 1..=4u16 {
                for n in 1..=4u16 {
                    if m as usize * n as usize > 10 {
                        continue;
                    }
                    let Ok(g) = Grid::new(rk, m, ck, n) else {
                        continue;
                    };
                    assert_eq!(
                        gamma2(g).unwrap(),
                        brute_force_gamma2(g).unwrap(),
                        "{g}"
                    );
                }
            }
        }
    }
}
