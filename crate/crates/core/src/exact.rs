//! Exact maximum strong independent set by branch and bound.
//!
//! Vertices are packed into bitsets; each search node branches on a vertex of
//! maximum residual degree (include it and drop `N[v]`, or drop it). The bound
//! is a greedy edge cover of the remaining candidates: every cover edge can
//! contribute at most one vertex, every uncovered candidate at most itself.

use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::sorted;

/// Instances above this size need an explicit time limit.
pub const DEFAULT_MAX_VERTICES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub members: Vec<VertexId>,
    /// `false` when the search stopped early and `members` is only the best found.
    pub optimal: bool,
}

impl Solution {
    pub fn new(mut members: Vec<VertexId>, optimal: bool) -> Self {
        sorted::normalize(&mut members);
        Solution { members, optimal }
    }

    pub fn cardinality(&self) -> usize {
        self.members.len()
    }
}

#[derive(Clone, Debug)]
pub struct ExactConfig {
    pub max_vertices: usize,
    pub time_limit: Option<Duration>,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig {
            max_vertices: DEFAULT_MAX_VERTICES,
            time_limit: None,
        }
    }
}

/// First live edge holding two or more members of `set`, if any.
pub fn find_violation(h: &Hypergraph, set: &[VertexId]) -> Result<Option<EdgeId>> {
    let mut members = set.to_vec();
    sorted::normalize(&mut members);
    for &v in &members {
        h.check_vertex(v)?;
    }
    Ok(h.edges().find(|&e| {
        h.pins(e)
            .iter()
            .filter(|p| members.binary_search(p).is_ok())
            .nth(1)
            .is_some()
    }))
}

/// `true` iff every live edge contains at most one vertex of `set`.
pub fn verify_independent(h: &Hypergraph, set: &[VertexId]) -> Result<bool> {
    Ok(find_violation(h, set)?.is_none())
}

pub fn solve_exact(h: &Hypergraph, time_limit: Option<Duration>) -> Result<Solution> {
    solve_exact_with(
        h,
        &ExactConfig {
            time_limit,
            ..ExactConfig::default()
        },
    )
}

pub fn solve_exact_with(h: &Hypergraph, cfg: &ExactConfig) -> Result<Solution> {
    let ids: Vec<VertexId> = h.vertices().collect();
    let mut index = vec![usize::MAX; h.vertex_capacity()];
    for (i, v) in ids.iter().enumerate() {
        index[v.index()] = i;
    }
    let edges = h
        .edges()
        .map(|e| h.pins(e).iter().map(|p| index[p.index()]).collect());
    solve_packed(ids, edges, cfg)
}

pub fn solve_exact_graph(g: &Graph, time_limit: Option<Duration>) -> Result<Solution> {
    solve_exact_graph_with(
        g,
        &ExactConfig {
            time_limit,
            ..ExactConfig::default()
        },
    )
}

pub fn solve_exact_graph_with(g: &Graph, cfg: &ExactConfig) -> Result<Solution> {
    let ids: Vec<VertexId> = g.vertices().collect();
    let edges = g.edges().map(|(u, v)| vec![u.index(), v.index()]);
    solve_packed(ids, edges, cfg)
}

fn solve_packed(
    ids: Vec<VertexId>,
    edges: impl Iterator<Item = Vec<usize>>,
    cfg: &ExactConfig,
) -> Result<Solution> {
    let n = ids.len();
    if n > cfg.max_vertices && cfg.time_limit.is_none() {
        return Err(Error::ResourceLimit(format!(
            "{n} vertices exceed the exact solver bound of {}; set a time limit to run anyway",
            cfg.max_vertices
        )));
    }
    let mut search = Search::new(n, edges, cfg.time_limit);
    let candidates = search.all_vertices();
    let mut chosen = Vec::new();
    search.branch(candidates, &mut chosen);
    let members = search.best.iter().map(|&i| ids[i]).collect();
    Ok(Solution::new(members, !search.timed_out))
}

struct Search {
    /// Edges with at least two pins.
    edges: Vec<FixedBitSet>,
    edges_of: Vec<Vec<usize>>,
    closed: Vec<FixedBitSet>,
    best: Vec<usize>,
    deadline: Option<Instant>,
    timed_out: bool,
    nodes: u64,
}

impl Search {
    fn new(n: usize, edges: impl Iterator<Item = Vec<usize>>, limit: Option<Duration>) -> Self {
        let mut closed: Vec<FixedBitSet> = (0..n)
            .map(|i| {
                let mut b = FixedBitSet::with_capacity(n);
                b.insert(i);
                b
            })
            .collect();
        let mut edge_sets = Vec::new();
        let mut edges_of = vec![Vec::new(); n];
        for pins in edges {
            if pins.len() < 2 {
                continue;
            }
            let mut set = FixedBitSet::with_capacity(n);
            for &p in &pins {
                set.insert(p);
            }
            for &p in &pins {
                closed[p].union_with(&set);
                edges_of[p].push(edge_sets.len());
            }
            edge_sets.push(set);
        }
        Search {
            edges: edge_sets,
            edges_of,
            closed,
            best: Vec::new(),
            deadline: limit.map(|l| Instant::now() + l),
            timed_out: false,
            nodes: 0,
        }
    }

    fn all_vertices(&self) -> FixedBitSet {
        let n = self.closed.len();
        let mut all = FixedBitSet::with_capacity(n);
        all.insert_range(..);
        all
    }

    fn out_of_time(&mut self) -> bool {
        self.nodes += 1;
        if !self.timed_out && self.nodes.is_multiple_of(1024) {
            if let Some(deadline) = self.deadline {
                self.timed_out = Instant::now() >= deadline;
            }
        }
        self.timed_out
    }

    fn branch(&mut self, mut candidates: FixedBitSet, chosen: &mut Vec<usize>) {
        if self.out_of_time() {
            return;
        }
        let depth = chosen.len();

        // Residual edge sizes decide both the free vertices and the branching vertex.
        let residual: Vec<usize> = self
            .edges
            .iter()
            .map(|e| e.intersection_count(&candidates))
            .collect();
        let mut pick: Option<(usize, usize)> = None;
        let mut free = Vec::new();
        for v in candidates.ones() {
            let degree = self.edges_of[v]
                .iter()
                .filter(|&&e| residual[e] >= 2)
                .count();
            if degree == 0 {
                free.push(v);
            } else if pick.is_none_or(|(_, best)| degree > best) {
                pick = Some((v, degree));
            }
        }
        for &v in &free {
            candidates.set(v, false);
            chosen.push(v);
        }

        match pick {
            None => {
                if chosen.len() > self.best.len() {
                    self.best = chosen.clone();
                }
            }
            Some((v, _)) => {
                if chosen.len() + self.cover_bound(&candidates, &residual) > self.best.len() {
                    let mut with_v = candidates.clone();
                    with_v.difference_with(&self.closed[v]);
                    chosen.push(v);
                    self.branch(with_v, chosen);
                    chosen.pop();

                    candidates.set(v, false);
                    self.branch(candidates, chosen);
                }
            }
        }
        chosen.truncate(depth);
    }

    /// Greedy edge cover: repeatedly take the edge covering most uncovered
    /// candidates while it covers at least two.
    fn cover_bound(&self, candidates: &FixedBitSet, residual: &[usize]) -> usize {
        let mut uncovered = candidates.clone();
        let mut live: Vec<usize> = (0..self.edges.len())
            .filter(|&e| residual[e] >= 2)
            .collect();
        let mut used = 0;
        loop {
            let mut best: Option<(usize, usize)> = None;
            live.retain(|&e| {
                let gain = self.edges[e].intersection_count(&uncovered);
                if gain >= 2 && best.is_none_or(|(_, g)| gain > g) {
                    best = Some((e, gain));
                }
                gain >= 2
            });
            let Some((e, _)) = best else { break };
            uncovered.difference_with(&self.edges[e]);
            used += 1;
        }
        used + uncovered.count_ones(..)
    }
}
