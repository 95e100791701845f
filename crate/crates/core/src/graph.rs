use crate::error::{Error, Result};
use crate::hypergraph::VertexId;
use crate::sorted;

/// Simple undirected graph on vertices `1..=n` with sorted adjacency lists.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    num_edges: usize,
}

impl Graph {
    pub fn with_vertices(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            num_edges: 0,
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut g = Self::with_vertices(n);
        for (u, v) in edges {
            g.add_edge(VertexId::try_from(u)?, VertexId::try_from(v)?)?;
        }
        Ok(g)
    }

    /// Adds `u`-`v`; returns `false` if the edge was already present.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool> {
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
        }
        for w in [u, v] {
            if w.index() >= self.adjacency.len() {
                return Err(Error::InvalidArgument(format!("vertex {w} does not exist")));
            }
        }
        let added = sorted::insert(&mut self.adjacency[u.index()], v);
        if added {
            sorted::insert(&mut self.adjacency[v.index()], u);
            self.num_edges += 1;
        }
        Ok(added)
    }

    /// Builds from per-vertex neighbor lists that are already sorted, deduplicated and symmetric.
    pub(crate) fn from_sorted_adjacency(adjacency: Vec<Vec<VertexId>>) -> Self {
        let degree_sum: usize = adjacency.iter().map(Vec::len).sum();
        Graph {
            adjacency,
            num_edges: degree_sum / 2,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.adjacency.len()).map(VertexId::from_index)
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        self.adjacency
            .get(v.index())
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn are_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Every edge once as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    /// Checks symmetry, sortedness and the absence of loops.
    pub fn audit(&self) -> Result<()> {
        let mut degree_sum = 0;
        for u in self.vertices() {
            let nbrs = self.neighbors(u);
            if nbrs.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Structure(format!(
                    "neighbors of {u} are not strictly ascending"
                )));
            }
            for &v in nbrs {
                if v == u {
                    return Err(Error::Structure(format!("self-loop at {u}")));
                }
                if !self.are_adjacent(v, u) {
                    return Err(Error::Structure(format!("edge {u}-{v} is not symmetric")));
                }
            }
            degree_sum += nbrs.len();
        }
        if degree_sum != 2 * self.num_edges {
            return Err(Error::Structure("edge counter is stale".into()));
        }
        Ok(())
    }
}
