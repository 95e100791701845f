use crate::graph::Graph;
use crate::hypergraph::{Hypergraph, VertexId};
use crate::sorted;

/// Replaces every hyperedge by a clique on its pins.
///
/// Graph vertex `i` stands for the `i`-th live hypergraph vertex in ascending
/// order; the returned table holds those hypergraph ids. Strong independence in
/// `h` coincides with independence in the graph.
pub fn clique_expand(h: &Hypergraph) -> (Graph, Vec<VertexId>) {
    let (compact, vertex_map, _) = h.compact();
    let mut adjacency: Vec<Vec<VertexId>> = vec![Vec::new(); compact.num_vertices()];
    for e in compact.edges() {
        let pins = compact.pins(e);
        for &u in pins {
            adjacency[u.index()].extend(pins.iter().copied().filter(|&w| w != u));
        }
    }
    for list in &mut adjacency {
        sorted::normalize(list);
    }
    (Graph::from_sorted_adjacency(adjacency), vertex_map)
}
