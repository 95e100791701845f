//! Independent oracles and instance generators shared by the integration tests.
#![allow(dead_code)]

use hymis::{Graph, Hypergraph, VertexId};
use rand::seq::SliceRandom;
use rand::Rng;

/// Exhaustive maximum strong independent set: walks all 2^n vertex subsets and
/// keeps those where no edge holds two members. Returns original ids.
pub fn brute_mis(h: &Hypergraph) -> Vec<VertexId> {
    let ids: Vec<VertexId> = h.vertices().collect();
    let n = ids.len();
    assert!(n <= 22, "brute force oracle is limited to 22 vertices");
    let position = |v: VertexId| ids.binary_search(&v).unwrap();
    // for each vertex, the masks of the edges containing it
    let mut edge_masks_of = vec![Vec::new(); n];
    for e in h.edges() {
        let mask = h.pins(e).iter().fold(0u32, |m, &p| m | 1 << position(p));
        for &p in h.pins(e) {
            edge_masks_of[position(p)].push(mask);
        }
    }
    let mut independent = vec![false; 1 << n];
    independent[0] = true;
    let mut best = 0u32;
    for set in 1u32..(1u32 << n) {
        let low = set.trailing_zeros() as usize;
        let rest = set & (set - 1);
        independent[set as usize] =
            independent[rest as usize] && edge_masks_of[low].iter().all(|m| m & rest == 0);
        if independent[set as usize] && set.count_ones() > best.count_ones() {
            best = set;
        }
    }
    (0..n)
        .filter(|i| best >> i & 1 == 1)
        .map(|i| ids[i])
        .collect()
}

pub fn brute_alpha(h: &Hypergraph) -> usize {
    brute_mis(h).len()
}

/// Exhaustive maximum independent set size of a simple graph.
pub fn brute_graph_alpha(g: &Graph) -> usize {
    let n = g.num_vertices();
    assert!(n <= 22);
    let nbr: Vec<u32> = g
        .vertices()
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(0u32, |m, u| m | 1 << (u.get() - 1))
        })
        .collect();
    let mut independent = vec![false; 1 << n];
    independent[0] = true;
    let mut best = 0;
    for set in 1u32..(1u32 << n) {
        let low = set.trailing_zeros() as usize;
        let rest = set & (set - 1);
        independent[set as usize] = independent[rest as usize] && nbr[low] & rest == 0;
        if independent[set as usize] {
            best = best.max(set.count_ones() as usize);
        }
    }
    best
}

/// The subset of CPLEX LP emitted by the exporter, read back independently.
pub struct LpModel {
    pub objective: Vec<String>,
    pub rows: Vec<(Vec<String>, i64)>,
    pub binaries: Vec<String>,
}

pub fn parse_lp(text: &str) -> LpModel {
    #[derive(PartialEq)]
    enum Section {
        None,
        Objective,
        Rows,
        Binary,
        End,
    }
    let mut section = Section::None;
    let mut objective = Vec::new();
    let mut rows: Vec<(Vec<String>, i64)> = Vec::new();
    let mut pending: Vec<String> = Vec::new();
    let mut binaries = Vec::new();
    for line in text.lines() {
        match line.trim() {
            "Maximize" => section = Section::Objective,
            "Subject To" => section = Section::Rows,
            "Binary" => section = Section::Binary,
            "End" => section = Section::End,
            body => match section {
                Section::Objective => objective.extend(
                    body.split('+')
                        .map(str::trim)
                        .filter(|t| t.starts_with('x'))
                        .map(String::from),
                ),
                Section::Rows => {
                    let body = match body.split_once(':') {
                        Some((_, rest)) => rest,
                        None => body,
                    };
                    let (lhs, rhs) = match body.split_once("<=") {
                        Some((l, r)) => (l, Some(r.trim().parse::<i64>().unwrap())),
                        None => (body, None),
                    };
                    pending.extend(
                        lhs.split('+')
                            .map(str::trim)
                            .filter(|t| !t.is_empty())
                            .map(String::from),
                    );
                    if let Some(rhs) = rhs {
                        rows.push((std::mem::take(&mut pending), rhs));
                    }
                }
                Section::Binary => binaries.extend(body.split_whitespace().map(String::from)),
                Section::None | Section::End => panic!("unexpected line `{line}`"),
            },
        }
    }
    assert!(section == Section::End, "missing End");
    LpModel {
        objective,
        rows,
        binaries,
    }
}

/// Best objective over all 0/1 assignments of the binaries.
pub fn lp_optimum_by_enumeration(model: &LpModel) -> i64 {
    let vars = &model.binaries;
    assert!(vars.len() <= 20);
    let index = |name: &String| {
        vars.iter()
            .position(|v| v == name)
            .expect("declared binary")
    };
    let objective: Vec<usize> = model.objective.iter().map(index).collect();
    let rows: Vec<(u32, i64)> = model
        .rows
        .iter()
        .map(|(terms, rhs)| (terms.iter().fold(0u32, |m, t| m | 1 << index(t)), *rhs))
        .collect();
    let mut best = i64::MIN;
    for assignment in 0u32..(1u32 << vars.len()) {
        if rows
            .iter()
            .all(|(mask, rhs)| i64::from((mask & assignment).count_ones()) <= *rhs)
        {
            let value = objective
                .iter()
                .filter(|&&i| assignment >> i & 1 == 1)
                .count() as i64;
            best = best.max(value);
        }
    }
    if vars.is_empty() {
        0
    } else {
        best
    }
}

/// Random hypergraph with `n` vertices, `m` edges and edge sizes drawn from `sizes`.
pub fn random_hypergraph<R: Rng>(
    rng: &mut R,
    n: usize,
    m: usize,
    sizes: (usize, usize),
) -> Hypergraph {
    let all: Vec<u32> = (1..=n as u32).collect();
    let edges: Vec<Vec<u32>> = (0..m)
        .map(|_| {
            let k = rng.gen_range(sizes.0..=sizes.1).min(n).max(1);
            all.choose_multiple(rng, k).copied().collect()
        })
        .collect();
    Hypergraph::from_edges(n, edges).unwrap()
}

/// The distribution used by the end-to-end checks: n in [1, max_n], m in [0, 24], sizes in [1, 5].
pub fn random_instance<R: Rng>(rng: &mut R, max_n: usize) -> Hypergraph {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(0..=24);
    random_hypergraph(rng, n, m, (1, 5))
}

/// Adds a twin of a random vertex: a fresh vertex copying its incident edges.
pub fn plant_twin<R: Rng>(rng: &mut R, h: &Hypergraph) -> Hypergraph {
    let ids: Vec<VertexId> = h.vertices().collect();
    let Some(&original) = ids.choose(rng) else {
        return h.clone();
    };
    let mut out = h.clone();
    let copy = out.add_vertex();
    for &e in h.incidence(original) {
        let pins: Vec<VertexId> = h
            .pins(e)
            .iter()
            .map(|&p| if p == original { copy } else { p })
            .collect();
        out.add_edge(pins).unwrap();
    }
    out
}

/// Adds an edge spanning the whole neighborhood of a random vertex, making it simplicial.
pub fn plant_clique<R: Rng>(rng: &mut R, h: &Hypergraph) -> Hypergraph {
    let ids: Vec<VertexId> = h.vertices().collect();
    let mut out = h.clone();
    if let Some(&v) = ids.choose(rng) {
        let nbrs = h.neighbors(v).unwrap();
        if nbrs.len() >= 2 {
            out.add_edge(nbrs).unwrap();
        }
    }
    out
}

/// Forest of stars whose edges are a center plus one to three leaves.
pub fn star_forest<R: Rng>(rng: &mut R, n: usize) -> Hypergraph {
    let mut edges = Vec::new();
    let mut next = 1u32;
    let n = n as u32;
    while next <= n {
        let center = next;
        next += 1;
        let leaves = rng.gen_range(1..=20).min(n + 1 - next);
        let mut remaining = leaves;
        while remaining > 0 {
            let k = rng.gen_range(1..=3).min(remaining);
            let mut edge = vec![center];
            edge.extend(next..next + k);
            next += k;
            remaining -= k;
            edges.push(edge);
        }
    }
    Hypergraph::from_edges(n as usize, edges).unwrap()
}
