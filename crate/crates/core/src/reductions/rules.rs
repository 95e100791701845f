use std::collections::{BTreeMap, HashMap};

use super::{ReductionKind, TraceEvent};
use crate::hypergraph::{ChangeLog, EdgeId, Hypergraph, VertexId};
use crate::sorted;

/// Upper bound on the number of maximal clique-witness edges the simplicial
/// rule will combine; beyond it the triple search is skipped.
const MAX_CLIQUE_WITNESSES: usize = 24;

/// Dispatches to the rule at a live locus. The caller guarantees liveness.
pub(crate) fn apply(
    kind: ReductionKind,
    h: &mut Hypergraph,
    locus: u32,
    log: &mut ChangeLog,
) -> Option<TraceEvent> {
    if kind.acts_on_edges() {
        let e = EdgeId::new(locus);
        match kind {
            ReductionKind::SizeOneEdge => size_one_edge(h, e, log),
            _ => edge_domination(h, e, log),
        }
    } else {
        let v = VertexId::new(locus);
        match kind {
            ReductionKind::DegreeZero => degree_zero(h, v, log),
            ReductionKind::DegreeOne => degree_one(h, v, log),
            ReductionKind::Twins => twins(h, v, log),
            ReductionKind::Sunflower => sunflower(h, v, log),
            ReductionKind::SimplicialVertex => simplicial(h, v, log),
            ReductionKind::VertexDomination => vertex_domination(h, v, log),
            ReductionKind::Unconfined => unconfined(h, v, log),
            ReductionKind::SizeOneEdge | ReductionKind::EdgeDomination => unreachable!(),
        }
    }
}

/// Puts `set` into the solution and deletes `N[set]`.
fn include(
    h: &mut Hypergraph,
    kind: ReductionKind,
    mut set: Vec<VertexId>,
    log: &mut ChangeLog,
) -> TraceEvent {
    sorted::normalize(&mut set);
    let mut closed = Vec::new();
    for &t in &set {
        closed.extend(h.closed_neighborhood_unchecked(t));
    }
    sorted::normalize(&mut closed);
    let excluded = sorted::difference(&closed, &set);
    for &x in &closed {
        h.detach_vertex(x, log);
    }
    TraceEvent::new(kind, set, excluded, log)
}

fn exclude(
    h: &mut Hypergraph,
    kind: ReductionKind,
    mut set: Vec<VertexId>,
    log: &mut ChangeLog,
) -> TraceEvent {
    sorted::normalize(&mut set);
    for &x in &set {
        h.detach_vertex(x, log);
    }
    TraceEvent::new(kind, Vec::new(), set, log)
}

fn delete_edge(
    h: &mut Hypergraph,
    kind: ReductionKind,
    e: EdgeId,
    log: &mut ChangeLog,
) -> TraceEvent {
    h.detach_edge(e, log);
    TraceEvent::new(kind, Vec::new(), Vec::new(), log)
}

fn size_one_edge(h: &mut Hypergraph, e: EdgeId, log: &mut ChangeLog) -> Option<TraceEvent> {
    (h.pins(e).len() == 1).then(|| delete_edge(h, ReductionKind::SizeOneEdge, e, log))
}

fn edge_domination(h: &mut Hypergraph, e: EdgeId, log: &mut ChangeLog) -> Option<TraceEvent> {
    let pins = h.pins(e);
    // Any dominating edge contains every pin, in particular the one of smallest degree.
    let pivot = *pins.iter().min_by_key(|&&p| h.degree(p))?;
    let dominated = h
        .incidence(pivot)
        .iter()
        .any(|&other| other != e && sorted::is_subset(pins, h.pins(other)));
    dominated.then(|| delete_edge(h, ReductionKind::EdgeDomination, e, log))
}

fn degree_zero(h: &mut Hypergraph, v: VertexId, log: &mut ChangeLog) -> Option<TraceEvent> {
    // Singleton edges {v} do not create neighbors; they vanish together with v.
    let isolated = h.incidence(v).iter().all(|&e| h.pins(e).len() == 1);
    isolated.then(|| include(h, ReductionKind::DegreeZero, vec![v], log))
}

fn degree_one(h: &mut Hypergraph, v: VertexId, log: &mut ChangeLog) -> Option<TraceEvent> {
    (h.degree(v) == 1).then(|| include(h, ReductionKind::DegreeOne, vec![v], log))
}

fn twins(h: &mut Hypergraph, v: VertexId, log: &mut ChangeLog) -> Option<TraceEvent> {
    let nv = h.neighbors_unchecked(v);
    // Every twin of v is adjacent to all of N(v), so scanning the neighbors of
    // one member of N(v) finds all of them.
    let anchor = *nv.iter().min_by_key(|&&w| h.degree(w))?;
    let mut twins = vec![v];
    for u in h.neighbors_unchecked(anchor) {
        if u != v && nv.binary_search(&u).is_err() && h.neighbors_unchecked(u) == nv {
            twins.push(u);
        }
    }
    if twins.len() < 2 {
        return None;
    }
    let min_degree = twins.iter().map(|&t| h.degree(t)).min()?;
    (twins.len() >= min_degree).then(|| include(h, ReductionKind::Twins, twins, log))
}

fn sunflower(h: &mut Hypergraph, v: VertexId, log: &mut ChangeLog) -> Option<TraceEvent> {
    let incident = h.incidence(v);
    let smallest = *incident.iter().min_by_key(|&&e| h.pins(e).len())?;
    let core: Vec<VertexId> = h
        .pins(smallest)
        .iter()
        .copied()
        .filter(|&u| h.incidence(u) == incident)
        .collect();
    if core.len() < 2 {
        return None;
    }
    // keep core[0], the lowest id
    Some(exclude(
        h,
        ReductionKind::Sunflower,
        core[1..].to_vec(),
        log,
    ))
}

fn simplicial(h: &mut Hypergraph, v: VertexId, log: &mut ChangeLog) -> Option<TraceEvent> {
    if h.degree(v) == 0 {
        return None;
    }
    let clique = h.neighbors_unchecked(v);
    if clique.len() < 2 {
        return None;
    }
    neighborhood_is_small_clique(h, &clique)
        .then(|| include(h, ReductionKind::SimplicialVertex, vec![v], log))
}

/// `true` if at most three edges lying entirely inside `clique` cover all of its pairs.
fn neighborhood_is_small_clique(h: &Hypergraph, clique: &[VertexId]) -> bool {
    let mut witnesses: Vec<EdgeId> = clique
        .iter()
        .flat_map(|&c| h.incidence(c).iter().copied())
        .collect();
    sorted::normalize(&mut witnesses);
    witnesses.retain(|&e| h.pins(e).len() >= 2 && sorted::is_subset(h.pins(e), clique));
    if witnesses.iter().any(|&e| h.pins(e).len() == clique.len()) {
        return true;
    }

    // Drop witnesses contained in another one; among equal pin sets keep the first.
    let maximal: Vec<&[VertexId]> = witnesses
        .iter()
        .enumerate()
        .filter(|&(i, &e)| {
            let pins = h.pins(e);
            !witnesses.iter().enumerate().any(|(j, &f)| {
                j != i
                    && sorted::is_subset(pins, h.pins(f))
                    && (h.pins(f).len() > pins.len() || j < i)
            })
        })
        .map(|(_, &e)| h.pins(e))
        .collect();
    if maximal.len() < 3 || maximal.len() > MAX_CLIQUE_WITNESSES {
        // Two edges covering all pairs would force one of them to span the whole clique.
        return false;
    }

    let covers = |group: [&[VertexId]; 3]| {
        clique.iter().all(|x| {
            let mut reach: Vec<VertexId> = group
                .iter()
                .filter(|pins| pins.binary_search(x).is_ok())
                .flat_map(|pins| pins.iter().copied())
                .collect();
            sorted::normalize(&mut reach);
            reach.len() == clique.len()
        })
    };
    for i in 0..maximal.len() {
        for j in i + 1..maximal.len() {
            for k in j + 1..maximal.len() {
                if covers([maximal[i], maximal[j], maximal[k]]) {
                    return true;
                }
            }
        }
    }
    false
}

fn vertex_domination(h: &mut Hypergraph, u: VertexId, log: &mut ChangeLog) -> Option<TraceEvent> {
    let closed_u = h.closed_neighborhood_unchecked(u);
    let dominates = closed_u
        .iter()
        .any(|&w| w != u && sorted::is_subset(&h.closed_neighborhood_unchecked(w), &closed_u));
    dominates.then(|| exclude(h, ReductionKind::VertexDomination, vec![u], log))
}

/// Grows a set `S ∋ v` that every maximum solution containing `v` must contain.
/// Fails as soon as some child of `S` would have no admissible partner outside `N[S]`.
fn unconfined(h: &mut Hypergraph, v: VertexId, log: &mut ChangeLog) -> Option<TraceEvent> {
    let mut cache: HashMap<VertexId, Vec<VertexId>> = HashMap::new();
    let mut neighbors = |x: VertexId| -> Vec<VertexId> {
        cache
            .entry(x)
            .or_insert_with(|| h.neighbors_unchecked(x))
            .clone()
    };

    let mut set_size = 1usize;
    let mut closed_set = neighbors(v);
    sorted::insert(&mut closed_set, v);
    // Number of neighbors inside S for every vertex of N(S).
    let mut parents: BTreeMap<VertexId, usize> = BTreeMap::new();
    for u in neighbors(v) {
        *parents.entry(u).or_default() += 1;
    }

    loop {
        let mut extension = None;
        for (&child, _) in parents.iter().filter(|(_, &count)| count == 1) {
            let outside = sorted::difference(&neighbors(child), &closed_set);
            match outside.len() {
                0 => return Some(exclude(h, ReductionKind::Unconfined, vec![v], log)),
                1 if extension.is_none() => extension = Some(outside[0]),
                _ => {}
            }
        }
        let w = extension?;
        set_size += 1;
        debug_assert!(set_size <= h.num_vertices());
        let w_neighbors = neighbors(w);
        for &u in &w_neighbors {
            *parents.entry(u).or_default() += 1;
        }
        closed_set.extend(w_neighbors);
        closed_set.push(w);
        sorted::normalize(&mut closed_set);
    }
}
