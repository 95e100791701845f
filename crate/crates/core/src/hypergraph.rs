//! Mutable hypergraph with bidirectional incidence lists.
//!
//! Vertices and edges are addressed by 1-based ids that stay stable while the
//! instance shrinks. Removed ids are tombstoned and never handed out again, so
//! anything recorded against an id (a trace event, a solution) keeps its
//! meaning until the instance is compacted.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sorted;

macro_rules! id_type {
    ($(#[$meta:meta])* $name:ident, $label:literal) => {
        $(#[$meta])*
        #[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        #[serde(try_from = "u32", into = "u32")]
        pub struct $name(u32);

        impl $name {
            /// Panics if `id` is zero.
            pub fn new(id: u32) -> Self {
                assert!(id >= 1, concat!($label, " ids are 1-based"));
                $name(id)
            }

            pub fn get(self) -> u32 {
                self.0
            }

            pub(crate) fn from_index(index: usize) -> Self {
                $name(index as u32 + 1)
            }

            pub(crate) fn index(self) -> usize {
                self.0 as usize - 1
            }
        }

        impl TryFrom<u32> for $name {
            type Error = Error;

            fn try_from(id: u32) -> Result<Self> {
                if id == 0 {
                    Err(Error::InvalidArgument(concat!($label, " id 0 is not allowed").into()))
                } else {
                    Ok($name(id))
                }
            }
        }

        impl From<$name> for u32 {
            fn from(id: $name) -> u32 {
                id.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt(f)
            }
        }
    };
}

id_type!(
    /// 1-based vertex identifier.
    VertexId,
    "vertex"
);
id_type!(
    /// 1-based hyperedge identifier.
    EdgeId,
    "edge"
);

/// Converts raw ids into [`VertexId`]s.
pub fn vertex_ids(ids: &[u32]) -> Vec<VertexId> {
    ids.iter().map(|&v| VertexId::new(v)).collect()
}

/// Records what a mutation touched so a caller can decide what to re-examine.
#[derive(Debug, Default)]
pub(crate) struct ChangeLog {
    /// Vertices whose incidence or neighborhood changed (may repeat or be dead by now).
    pub vertices: Vec<VertexId>,
    /// Edges whose pin set shrank but which survived at the time.
    pub shrunk_edges: Vec<EdgeId>,
    /// Edges deleted outright.
    pub deleted_edges: Vec<EdgeId>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Hypergraph {
    incidence: Vec<Vec<EdgeId>>,
    pins: Vec<Vec<VertexId>>,
    vertex_alive: Vec<bool>,
    edge_alive: Vec<bool>,
    live_vertices: usize,
    live_edges: usize,
}

impl Hypergraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Hypergraph with vertices `1..=n` and no edges.
    pub fn with_vertices(n: usize) -> Self {
        Hypergraph {
            incidence: vec![Vec::new(); n],
            pins: Vec::new(),
            vertex_alive: vec![true; n],
            edge_alive: Vec::new(),
            live_vertices: n,
            live_edges: 0,
        }
    }

    /// Builds a hypergraph on vertices `1..=n` from raw pin lists.
    pub fn from_edges<E: AsRef<[u32]>>(
        n: usize,
        edges: impl IntoIterator<Item = E>,
    ) -> Result<Self> {
        let mut h = Self::with_vertices(n);
        for pins in edges {
            let pins = pins.as_ref();
            if pins.contains(&0) {
                return Err(Error::InvalidArgument("vertex id 0 in edge".into()));
            }
            h.add_edge(pins.iter().map(|&p| VertexId(p)))?;
        }
        Ok(h)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.incidence.push(Vec::new());
        self.vertex_alive.push(true);
        self.live_vertices += 1;
        VertexId::from_index(self.vertex_alive.len() - 1)
    }

    /// Adds an edge over live vertices. Repeated pins collapse into one.
    pub fn add_edge(&mut self, pins: impl IntoIterator<Item = VertexId>) -> Result<EdgeId> {
        let mut pins: Vec<VertexId> = pins.into_iter().collect();
        sorted::normalize(&mut pins);
        if pins.is_empty() {
            return Err(Error::InvalidArgument(
                "hyperedges must not be empty".into(),
            ));
        }
        for &p in &pins {
            self.check_vertex(p)?;
        }
        let e = EdgeId::from_index(self.pins.len());
        for &p in &pins {
            // New edge ids are always the largest so far.
            self.incidence[p.index()].push(e);
        }
        self.pins.push(pins);
        self.edge_alive.push(true);
        self.live_edges += 1;
        Ok(e)
    }

    pub fn num_vertices(&self) -> usize {
        self.live_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.live_edges
    }

    /// Number of vertex ids ever handed out, live or dead.
    pub fn vertex_capacity(&self) -> usize {
        self.vertex_alive.len()
    }

    pub fn edge_capacity(&self) -> usize {
        self.edge_alive.len()
    }

    /// `true` when live ids are exactly `1..=n` and `1..=m`.
    pub fn is_compact(&self) -> bool {
        self.live_vertices == self.vertex_alive.len() && self.live_edges == self.edge_alive.len()
    }

    pub fn is_empty(&self) -> bool {
        self.live_vertices == 0 && self.live_edges == 0
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertex_alive.get(v.index()).copied().unwrap_or(false)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edge_alive.get(e.index()).copied().unwrap_or(false)
    }

    /// Live vertices in ascending order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertex_alive
            .iter()
            .enumerate()
            .filter(|(_, &alive)| alive)
            .map(|(i, _)| VertexId::from_index(i))
    }

    /// Live edges in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edge_alive
            .iter()
            .enumerate()
            .filter(|(_, &alive)| alive)
            .map(|(i, _)| EdgeId::from_index(i))
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("vertex {v} does not exist")))
        }
    }

    pub(crate) fn check_edge(&self, e: EdgeId) -> Result<()> {
        if self.contains_edge(e) {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("edge {e} does not exist")))
        }
    }

    /// Pins of a live edge, ascending. Empty for dead or unknown edges.
    pub fn pins(&self, e: EdgeId) -> &[VertexId] {
        self.pins.get(e.index()).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Edges containing a live vertex, ascending. Empty for dead or unknown vertices.
    pub fn incidence(&self, v: VertexId) -> &[EdgeId] {
        self.incidence
            .get(v.index())
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence(v).len()
    }

    /// Open neighborhood N(v), ascending.
    pub fn neighbors(&self, v: VertexId) -> Result<Vec<VertexId>> {
        self.check_vertex(v)?;
        Ok(self.neighbors_unchecked(v))
    }

    /// Closed neighborhood N[v], ascending.
    pub fn closed_neighborhood(&self, v: VertexId) -> Result<Vec<VertexId>> {
        self.check_vertex(v)?;
        Ok(self.closed_neighborhood_unchecked(v))
    }

    pub(crate) fn neighbors_unchecked(&self, v: VertexId) -> Vec<VertexId> {
        let mut out = self.closed_neighborhood_unchecked(v);
        sorted::remove(&mut out, &v);
        out
    }

    pub(crate) fn closed_neighborhood_unchecked(&self, v: VertexId) -> Vec<VertexId> {
        let mut out = vec![v];
        for &e in self.incidence(v) {
            out.extend_from_slice(self.pins(e));
        }
        sorted::normalize(&mut out);
        out
    }

    /// `true` iff some live edge contains both `u` and `v`.
    pub fn are_adjacent(&self, u: VertexId, v: VertexId) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidArgument(format!(
                "adjacency of vertex {u} with itself is undefined"
            )));
        }
        Ok(self.adjacent_unchecked(u, v))
    }

    pub(crate) fn adjacent_unchecked(&self, u: VertexId, v: VertexId) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.incidence(a)
            .iter()
            .any(|&e| self.pins(e).binary_search(&b).is_ok())
    }

    /// Removes `v` and deletes any edge left without pins.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<()> {
        self.check_vertex(v)?;
        self.detach_vertex(v, &mut ChangeLog::default());
        Ok(())
    }

    /// Removes `e`; its pins stay in the hypergraph even if they become isolated.
    pub fn remove_edge(&mut self, e: EdgeId) -> Result<()> {
        self.check_edge(e)?;
        self.detach_edge(e, &mut ChangeLog::default());
        Ok(())
    }

    pub(crate) fn detach_vertex(&mut self, v: VertexId, log: &mut ChangeLog) {
        debug_assert!(self.contains_vertex(v));
        for e in std::mem::take(&mut self.incidence[v.index()]) {
            let pins = &mut self.pins[e.index()];
            sorted::remove(pins, &v);
            if pins.is_empty() {
                self.edge_alive[e.index()] = false;
                self.live_edges -= 1;
                log.deleted_edges.push(e);
            } else {
                log.vertices.extend_from_slice(pins);
                log.shrunk_edges.push(e);
            }
        }
        self.vertex_alive[v.index()] = false;
        self.live_vertices -= 1;
    }

    pub(crate) fn detach_edge(&mut self, e: EdgeId, log: &mut ChangeLog) {
        debug_assert!(self.contains_edge(e));
        for p in std::mem::take(&mut self.pins[e.index()]) {
            sorted::remove(&mut self.incidence[p.index()], &e);
            log.vertices.push(p);
        }
        self.edge_alive[e.index()] = false;
        self.live_edges -= 1;
        log.deleted_edges.push(e);
    }

    /// Sub-hypergraph on `subset` holding the nonempty trace `e ∩ subset` of every
    /// live edge. Vertices are renumbered `1..=|subset|` in ascending original order;
    /// the returned table maps new index `i` to the original id at position `i - 1`.
    pub fn induced_subhypergraph(
        &self,
        subset: &[VertexId],
    ) -> Result<(Hypergraph, Vec<VertexId>)> {
        let mut members = subset.to_vec();
        sorted::normalize(&mut members);
        for &v in &members {
            self.check_vertex(v)?;
        }
        let mut sub = Hypergraph::with_vertices(members.len());
        for e in self.edges() {
            let trace: Vec<VertexId> = self
                .pins(e)
                .iter()
                .filter_map(|p| members.binary_search(p).ok())
                .map(VertexId::from_index)
                .collect();
            if !trace.is_empty() {
                sub.add_edge(trace)?;
            }
        }
        Ok((sub, members))
    }

    /// Renumbers live vertices and edges densely, preserving ascending order.
    /// Returns the compact instance with the original id of every new vertex and edge.
    pub fn compact(&self) -> (Hypergraph, Vec<VertexId>, Vec<EdgeId>) {
        let vertex_map: Vec<VertexId> = self.vertices().collect();
        let mut new_index = vec![usize::MAX; self.vertex_capacity()];
        for (i, v) in vertex_map.iter().enumerate() {
            new_index[v.index()] = i;
        }
        let mut out = Hypergraph::with_vertices(vertex_map.len());
        let mut edge_map = Vec::with_capacity(self.num_edges());
        for e in self.edges() {
            let pins = self
                .pins(e)
                .iter()
                .map(|p| VertexId::from_index(new_index[p.index()]));
            out.add_edge(pins).expect("live edges have live pins");
            edge_map.push(e);
        }
        (out, vertex_map, edge_map)
    }

    /// Full consistency check of the incidence structure.
    pub fn audit(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Structure(msg));
        if self.incidence.len() != self.vertex_alive.len()
            || self.pins.len() != self.edge_alive.len()
        {
            return fail("bookkeeping arrays disagree in length".into());
        }
        if self.vertices().count() != self.live_vertices || self.edges().count() != self.live_edges
        {
            return fail("live counters are stale".into());
        }
        let mut pin_total = 0usize;
        for (i, pins) in self.pins.iter().enumerate() {
            let e = EdgeId::from_index(i);
            if !self.edge_alive[i] {
                if !pins.is_empty() {
                    return fail(format!("dead edge {e} still has pins"));
                }
                continue;
            }
            if pins.is_empty() {
                return fail(format!("edge {e} is empty"));
            }
            if pins.windows(2).any(|w| w[0] >= w[1]) {
                return fail(format!("pins of edge {e} are not strictly ascending"));
            }
            for &p in pins {
                if !self.contains_vertex(p) {
                    return fail(format!("edge {e} contains dead vertex {p}"));
                }
                if self.incidence[p.index()].binary_search(&e).is_err() {
                    return fail(format!("vertex {p} is missing incidence to edge {e}"));
                }
            }
            pin_total += pins.len();
        }
        let mut degree_total = 0usize;
        for (i, inc) in self.incidence.iter().enumerate() {
            let v = VertexId::from_index(i);
            if !self.vertex_alive[i] {
                if !inc.is_empty() {
                    return fail(format!("dead vertex {v} still has incidences"));
                }
                continue;
            }
            if inc.windows(2).any(|w| w[0] >= w[1]) {
                return fail(format!(
                    "incidence list of vertex {v} is not strictly ascending"
                ));
            }
            for &e in inc {
                if !self.contains_edge(e) || self.pins[e.index()].binary_search(&v).is_err() {
                    return fail(format!(
                        "vertex {v} lists edge {e} which does not contain it"
                    ));
                }
            }
            degree_total += inc.len();
        }
        if degree_total != pin_total {
            return fail(format!(
                "degree sum {degree_total} differs from pin sum {pin_total}"
            ));
        }
        Ok(())
    }

    /// Σ|pins(e)| / m, or 0 without edges.
    pub fn average_edge_size(&self) -> f64 {
        if self.live_edges == 0 {
            return 0.0;
        }
        let total: usize = self.edges().map(|e| self.pins(e).len()).sum();
        total as f64 / self.live_edges as f64
    }
}
