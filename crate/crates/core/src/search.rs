//! Branch and bound over edge-set partitions.
//!
//! Edges are labelled in colex order with a restricted-growth string, so each
//! leaf is one coloring up to renaming of colors. A class is scored by a
//! vertex weight `f`:
//!
//! - one edge `uv`: `f(u)·f(v)`,
//! - two or more edges through a common vertex `w`: `f(w)`,
//! - anything else: `1`.
//!
//! With `f ≡ 1` the score is the number of colors. With `f` a partite size
//! vector on a complete base it is the color count of the blow-up. Scores
//! only shrink as a class grows, so the current score plus the best possible
//! score of every unlabelled edge bounds every completion.
//!
//! A partial labelling is cut once some `k`-clique has all its edges labelled
//! with pairwise distinct labels: classes only grow, so that clique stays
//! rainbow.
//!
//! Work is split into tasks by fixing a short prefix of the string. Each task
//! keeps its own incumbent, so values, witnesses and counters do not depend on
//! how tasks are scheduled.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::AddAssign;

use crate::error::{invalid, Result};
use crate::graph::{EdgeId, Graph, Vertex};

/// Default length of the fixed prefix that defines one task.
pub const DEFAULT_PREFIX_DEPTH: usize = 6;

/// What the search keeps at the leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Goal {
    /// The lexicographically smallest labelling of maximum score.
    Best,
    /// Every labelling of maximum score, in lexicographic order.
    All,
}

/// Node counters. Deterministic for a given problem and prefix depth.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Label assignments tried.
    pub nodes: u64,
    /// Assignments cut by the score bound.
    pub bound_prunes: u64,
    /// Assignments cut because they completed a rainbow clique.
    pub rainbow_prunes: u64,
    /// Complete labellings reached.
    pub leaves: u64,
    /// Number of prefix tasks.
    pub tasks: u64,
}

impl AddAssign for SearchStats {
    fn add_assign(&mut self, o: Self) {
        self.nodes += o.nodes;
        self.bound_prunes += o.bound_prunes;
        self.rainbow_prunes += o.rainbow_prunes;
        self.leaves += o.leaves;
        self.tasks += o.tasks;
    }
}

/// Result of one prefix task.
#[derive(Debug, Clone, Default)]
pub struct TaskOutcome {
    pub best: Option<u64>,
    pub leaves: Vec<Vec<usize>>,
    pub stats: SearchStats,
}

/// Merged result of a whole search.
#[derive(Debug, Clone, Default)]
pub struct SearchOutcome {
    /// Maximum score, or `None` when no labelling reaches the floor.
    pub value: Option<u64>,
    /// Argmax labellings: one for [`Goal::Best`], all for [`Goal::All`].
    pub labelings: Vec<Vec<usize>>,
    pub stats: SearchStats,
}

/// Runs prefix tasks. The core crate only ships [`Sequential`]; callers with
/// threads can supply their own.
pub trait Executor {
    fn run(&self, search: &Search, prefixes: &[Vec<usize>]) -> Vec<TaskOutcome>;
}

/// Runs every task on the calling thread, in order.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn run(&self, search: &Search, prefixes: &[Vec<usize>]) -> Vec<TaskOutcome> {
        prefixes.iter().map(|p| search.run_task(p)).collect()
    }
}

/// A fully specified partition search.
#[derive(Debug, Clone)]
pub struct Search {
    edges: Vec<(Vertex, Vertex)>,
    f: Vec<u64>,
    unit: bool,
    pair: Vec<u64>,
    // suffix[e] = Σ pair[e..]
    suffix: Vec<u64>,
    // closers[e]: the other edges of each k-clique whose largest edge is e
    closers: Vec<Vec<Vec<EdgeId>>>,
    // every k-clique as an edge bitmask, ordered by largest edge; empty when
    // there are more than 64 edges
    clique_masks: Vec<u64>,
    // open[e]: index of the first clique in clique_masks whose largest edge
    // is after e
    open: Vec<usize>,
    floor: u64,
    goal: Goal,
    prefix_depth: usize,
}

impl Search {
    /// A search on `graph` forbidding rainbow `K_k`, scored with vertex
    /// weights `f` (one per vertex, all ≥ 1).
    pub fn new(graph: &Graph, k: usize, f: &[u64]) -> Result<Self> {
        if k < 3 {
            return Err(invalid!("forbidden clique needs k ≥ 3, got {k}"));
        }
        let n = graph.vertex_count();
        if f.len() != n || f.contains(&0) {
            return Err(invalid!("weights must be positive, one per vertex"));
        }
        let unit = f.iter().all(|&x| x == 1);
        if !unit && n > 64 {
            return Err(invalid!("weighted search supports at most 64 vertices, got {n}"));
        }
        let edges = graph.edges().to_vec();
        let pair: Vec<u64> = edges.iter().map(|&(u, v)| f[u] * f[v]).collect();
        let mut suffix = vec![0; edges.len() + 1];
        for e in (0..edges.len()).rev() {
            suffix[e] = suffix[e + 1] + pair[e];
        }
        let mut closers = vec![Vec::new(); edges.len()];
        let mut by_last = Vec::new();
        for clique in graph.cliques(k) {
            let mut ids = graph.clique_edges(&clique);
            ids.sort_unstable();
            let mask = ids.iter().fold(0u64, |m, &e| m | 1u64.checked_shl(e as u32).unwrap_or(0));
            let last = ids.pop().expect("k ≥ 3");
            by_last.push((last, mask));
            closers[last].push(ids);
        }
        by_last.sort_by_key(|&(last, _)| last);
        let (clique_masks, open) = if edges.len() <= 64 {
            let open = (0..edges.len()).map(|e| by_last.partition_point(|&(l, _)| l <= e)).collect();
            (by_last.into_iter().map(|(_, m)| m).collect(), open)
        } else {
            (Vec::new(), Vec::new())
        };
        Ok(Search {
            edges,
            f: f.to_vec(),
            unit,
            pair,
            suffix,
            closers,
            clique_masks,
            open,
            floor: 0,
            goal: Goal::Best,
            prefix_depth: DEFAULT_PREFIX_DEPTH,
        })
    }

    /// Only labellings scoring at least `floor` are reported. Seed it with
    /// the score of a known valid labelling to cut the tree early.
    pub fn with_floor(mut self, floor: u64) -> Self {
        self.floor = floor;
        self
    }

    pub fn with_goal(mut self, goal: Goal) -> Self {
        self.goal = goal;
        self
    }

    pub fn with_prefix_depth(mut self, depth: usize) -> Self {
        self.prefix_depth = depth;
        self
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn goal(&self) -> Goal {
        self.goal
    }

    /// The score of a complete labelling, computed from scratch.
    pub fn score(&self, labels: &[usize]) -> u64 {
        let mut state = State::new(self);
        for (e, &l) in labels.iter().enumerate() {
            state.assign(self, e, l);
        }
        state.total
    }

    /// Whether a complete labelling has a rainbow `K_k`.
    pub fn has_rainbow(&self, labels: &[usize]) -> bool {
        (0..labels.len()).any(|e| self.closes_rainbow(labels, e))
    }

    /// All surviving labelled prefixes of length `min(prefix_depth, m)`, in
    /// lexicographic order.
    pub fn prefixes(&self) -> (Vec<Vec<usize>>, SearchStats) {
        let mut state = State::new(self);
        let stop = self.prefix_depth.min(self.edges.len());
        let mut out = Vec::new();
        state.dfs(self, 0, stop, &mut Some(&mut out));
        (out, state.stats)
    }

    /// Explores every completion of `prefix`.
    pub fn run_task(&self, prefix: &[usize]) -> TaskOutcome {
        let mut state = State::new(self);
        for (e, &l) in prefix.iter().enumerate() {
            state.assign(self, e, l);
        }
        state.dfs(self, prefix.len(), self.edges.len(), &mut None);
        TaskOutcome {
            best: state.best,
            leaves: state.leaves,
            stats: SearchStats { tasks: 1, ..state.stats },
        }
    }

    /// Combines task results in prefix order.
    pub fn merge(&self, outcomes: Vec<TaskOutcome>, mut stats: SearchStats) -> SearchOutcome {
        let value = outcomes.iter().filter_map(|o| o.best).max();
        let mut labelings = Vec::new();
        for o in outcomes {
            stats += o.stats;
            if o.best.is_some() && o.best == value {
                match self.goal {
                    Goal::Best if labelings.is_empty() => labelings = o.leaves,
                    Goal::Best => {}
                    Goal::All => labelings.extend(o.leaves),
                }
            }
        }
        SearchOutcome { value, labelings, stats }
    }

    pub fn solve(&self, exec: &dyn Executor) -> SearchOutcome {
        let (prefixes, stats) = self.prefixes();
        let outcomes = exec.run(self, &prefixes);
        self.merge(outcomes, stats)
    }

    fn closes_rainbow(&self, labels: &[usize], e: EdgeId) -> bool {
        let l = labels[e];
        'cliques: for others in &self.closers[e] {
            if l < 64 && others.iter().all(|&o| labels[o] < 64) {
                let mut seen = 1u64 << l;
                for &o in others {
                    let bit = 1u64 << labels[o];
                    if seen & bit != 0 {
                        continue 'cliques;
                    }
                    seen |= bit;
                }
                return true;
            }
            let mut ls: Vec<usize> = others.iter().map(|&o| labels[o]).collect();
            ls.push(l);
            ls.sort_unstable();
            if ls.windows(2).all(|w| w[0] != w[1]) {
                return true;
            }
        }
        false
    }
}

struct State {
    labels: Vec<usize>,
    size: Vec<u32>,
    mask: Vec<u64>,
    weight: Vec<u64>,
    total: u64,
    best: Option<u64>,
    leaves: Vec<Vec<usize>>,
    stats: SearchStats,
}

impl State {
    fn new(s: &Search) -> Self {
        let m = s.edges.len();
        State {
            labels: vec![0; m],
            size: Vec::with_capacity(m),
            mask: Vec::with_capacity(m),
            weight: Vec::with_capacity(m),
            total: 0,
            best: None,
            leaves: Vec::new(),
            stats: SearchStats::default(),
        }
    }

    /// Returns the class's previous `(mask, weight)` for [`State::undo`].
    fn assign(&mut self, s: &Search, e: EdgeId, l: usize) -> (u64, u64) {
        self.labels[e] = l;
        let (u, v) = s.edges[e];
        let ends = if s.unit { 0 } else { (1u64 << u) | (1u64 << v) };
        if l == self.size.len() {
            self.size.push(1);
            self.mask.push(ends);
            self.weight.push(s.pair[e]);
            self.total += s.pair[e];
            return (0, 0);
        }
        let prev = (self.mask[l], self.weight[l]);
        self.size[l] += 1;
        let mask = prev.0 & ends;
        let w = if mask != 0 { s.f[mask.trailing_zeros() as usize] } else { 1 };
        self.mask[l] = mask;
        self.weight[l] = w;
        self.total = self.total - prev.1 + w;
        prev
    }

    fn undo(&mut self, l: usize, prev: (u64, u64)) {
        if self.size[l] == 1 {
            self.size.pop();
            self.mask.pop();
            let w = self.weight.pop().unwrap_or(0);
            self.total -= w;
            return;
        }
        self.size[l] -= 1;
        self.total = self.total - self.weight[l] + prev.1;
        self.mask[l] = prev.0;
        self.weight[l] = prev.1;
    }

    fn admissible(&self, s: &Search, bound: u64) -> bool {
        match (s.goal, self.best) {
            (_, None) => bound >= s.floor,
            (Goal::Best, Some(b)) => bound > b,
            (Goal::All, Some(b)) => bound >= b,
        }
    }

    fn leaf(&mut self, s: &Search) {
        self.stats.leaves += 1;
        let total = self.total;
        if !self.admissible(s, total) {
            return;
        }
        if s.goal == Goal::All && self.best == Some(total) {
            self.leaves.push(self.labels.clone());
        } else {
            self.best = Some(total);
            self.leaves.clear();
            self.leaves.push(self.labels.clone());
        }
    }

    /// A lower bound on what the unlabelled edges `e+1..` must lose against
    /// their full potential. A clique without a repeated label needs one of
    /// its unlabelled edges to join an existing class, and that edge then
    /// adds nothing. Cliques are packed greedily so that no two share an
    /// unlabelled edge, so each one costs a different edge.
    fn forced_loss(&self, s: &Search, e: EdgeId) -> u64 {
        if s.clique_masks.is_empty() {
            return 0;
        }
        let assigned = if e + 1 >= 64 { u64::MAX } else { (1u64 << (e + 1)) - 1 };
        let mut used = 0u64;
        let mut loss = 0;
        'cliques: for &mask in &s.clique_masks[s.open[e]..] {
            let free = mask & !assigned;
            if free & used != 0 {
                continue;
            }
            let mut seen = 0u64;
            let mut done = mask & assigned;
            while done != 0 {
                let x = done.trailing_zeros() as usize;
                done &= done - 1;
                let bit = 1u64 << self.labels[x];
                if seen & bit != 0 {
                    continue 'cliques;
                }
                seen |= bit;
            }
            let mut cheapest = u64::MAX;
            let mut rest = free;
            while rest != 0 {
                let x = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                cheapest = cheapest.min(s.pair[x]);
            }
            used |= free;
            loss += cheapest;
        }
        loss
    }

    /// Extends labels from edge `e`. With a `sink`, labellings of length
    /// `stop` are collected as prefixes; otherwise they are leaves.
    fn dfs(&mut self, s: &Search, e: EdgeId, stop: usize, sink: &mut Option<&mut Vec<Vec<usize>>>) {
        if e == stop {
            match sink {
                Some(out) => out.push(self.labels[..e].to_vec()),
                None => self.leaf(s),
            }
            return;
        }
        for l in 0..=self.size.len() {
            self.stats.nodes += 1;
            let prev = self.assign(s, e, l);
            if s.closes_rainbow(&self.labels, e) {
                self.stats.rainbow_prunes += 1;
            } else if !self.admissible(s, self.total + s.suffix[e + 1])
                || !self.admissible(s, self.total + s.suffix[e + 1] - self.forced_loss(s, e))
            {
                self.stats.bound_prunes += 1;
            } else {
                self.dfs(s, e + 1, stop, sink);
            }
            self.undo(l, prev);
        }
    }
}
