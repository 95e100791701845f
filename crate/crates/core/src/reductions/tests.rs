use std::time::Duration;

use super::*;
use crate::hypergraph::vertex_ids;

/// α by enumerating every vertex subset.
fn brute_alpha(h: &Hypergraph) -> usize {
    let (c, _, _) = h.compact();
    let n = c.num_vertices();
    assert!(n <= 20);
    let masks: Vec<u32> = c
        .edges()
        .map(|e| c.pins(e).iter().fold(0u32, |m, p| m | 1 << p.index()))
        .collect();
    (0u32..1 << n)
        .filter(|s| masks.iter().all(|m| (m & s).count_ones() <= 1))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn hg(n: usize, edges: &[&[u32]]) -> Hypergraph {
    Hypergraph::from_edges(n, edges.iter()).unwrap()
}

fn v(id: u32) -> VertexId {
    VertexId::new(id)
}

fn e(id: u32) -> EdgeId {
    EdgeId::new(id)
}

fn edge_sets(h: &Hypergraph) -> Vec<Vec<u32>> {
    h.edges()
        .map(|e| h.pins(e).iter().map(|p| p.get()).collect())
        .collect()
}

fn live(h: &Hypergraph) -> Vec<u32> {
    h.vertices().map(|v| v.get()).collect()
}

/// Applies `kind` at `locus`, checks the α relation with the oracle and returns the event.
fn fire(kind: ReductionKind, h: &mut Hypergraph, locus: u32) -> TraceEvent {
    let before = brute_alpha(h);
    let event = apply_rule(kind, h, locus)
        .unwrap()
        .expect("rule should apply");
    h.audit().unwrap();
    event.validate().unwrap();
    assert_eq!(
        before,
        brute_alpha(h) + event.alpha_offset,
        "{kind} broke the α relation"
    );
    event
}

fn does_not_fire(kind: ReductionKind, h: &mut Hypergraph, locus: u32) {
    let snapshot = h.clone();
    assert_eq!(apply_rule(kind, h, locus).unwrap(), None);
    assert_eq!(*h, snapshot);
}

#[test]
fn size_one_edge_examples() {
    let mut h = hg(2, &[&[1], &[1, 2]]);
    let ev = fire(ReductionKind::SizeOneEdge, &mut h, 1);
    assert_eq!(ev.removed_edges, vec![e(1)]);
    assert!(ev.included.is_empty() && ev.excluded.is_empty());
    assert_eq!(edge_sets(&h), vec![vec![1, 2]]);

    does_not_fire(ReductionKind::SizeOneEdge, &mut hg(2, &[&[1, 2]]), 1);

    let mut h = hg(3, &[&[3]]);
    h.remove_vertex(v(2)).unwrap();
    assert_eq!(brute_alpha(&h), 2);
    fire(ReductionKind::SizeOneEdge, &mut h, 1);
    assert_eq!(h.num_edges(), 0);
    let a = fire(ReductionKind::DegreeZero, &mut h, 1);
    let b = fire(ReductionKind::DegreeZero, &mut h, 3);
    assert_eq!(a.alpha_offset + b.alpha_offset, 2);
}

#[test]
fn edge_domination_examples() {
    let mut h = hg(3, &[&[1, 2], &[1, 2, 3]]);
    assert_eq!(brute_alpha(&h), 1);
    let ev = fire(ReductionKind::EdgeDomination, &mut h, 1);
    assert_eq!(ev.removed_edges, vec![e(1)]);
    assert_eq!(edge_sets(&h), vec![vec![1, 2, 3]]);

    does_not_fire(
        ReductionKind::EdgeDomination,
        &mut hg(3, &[&[1, 2], &[1, 3]]),
        1,
    );

    let mut h = hg(2, &[&[1, 2], &[1, 2]]);
    fire(ReductionKind::EdgeDomination, &mut h, 1);
    assert_eq!(h.edges().collect::<Vec<_>>(), vec![e(2)]);
    assert_eq!(brute_alpha(&h), 1);
}

#[test]
fn degree_zero_examples() {
    let mut h = hg(3, &[&[2, 3]]);
    let ev = fire(ReductionKind::DegreeZero, &mut h, 1);
    assert_eq!(ev.included, vertex_ids(&[1]));
    assert_eq!(live(&h), vec![2, 3]);

    let mut h = hg(1, &[&[1]]);
    let ev = fire(ReductionKind::DegreeZero, &mut h, 1);
    assert_eq!(ev.removed_edges, vec![e(1)]);
    assert!(h.is_empty());

    does_not_fire(ReductionKind::DegreeZero, &mut hg(2, &[&[1, 2]]), 1);
}

#[test]
fn degree_one_examples() {
    let mut h = hg(3, &[&[1, 2, 3]]);
    assert_eq!(brute_alpha(&h), 1);
    let ev = fire(ReductionKind::DegreeOne, &mut h, 1);
    assert_eq!(ev.excluded, vertex_ids(&[2, 3]));
    assert!(h.is_empty());

    let mut h = hg(3, &[&[1, 2], &[2, 3]]);
    assert_eq!(brute_alpha(&h), 2);
    fire(ReductionKind::DegreeOne, &mut h, 1);
    assert_eq!(live(&h), vec![3]);
    assert_eq!(edge_sets(&h), vec![vec![3]]);
    fire(ReductionKind::SizeOneEdge, &mut h, 2);
    let ev = fire(ReductionKind::DegreeZero, &mut h, 3);
    assert_eq!(ev.alpha_offset, 1);

    does_not_fire(ReductionKind::DegreeOne, &mut hg(3, &[&[1, 2], &[1, 3]]), 1);
}

#[test]
fn twins_examples() {
    let mut h = hg(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
    assert_eq!(brute_alpha(&h), 2);
    let ev = fire(ReductionKind::Twins, &mut h, 1);
    assert_eq!(ev.included, vertex_ids(&[1, 2]));
    assert_eq!(ev.alpha_offset, 2);
    assert!(h.is_empty());

    // K_{2,3}: twins {1,2} of degree 3; α = 3 from {3,4,5}
    let mut h = hg(5, &[&[1, 3], &[1, 4], &[1, 5], &[2, 3], &[2, 4], &[2, 5]]);
    assert_eq!(brute_alpha(&h), 3);
    does_not_fire(ReductionKind::Twins, &mut h, 1);
    does_not_fire(ReductionKind::Twins, &mut h, 2);

    does_not_fire(ReductionKind::Twins, &mut hg(2, &[&[1, 2]]), 1);
}

#[test]
fn twins_with_different_degrees() {
    // N(1) = N(2) = {3,4}; d(1) = 1 via {1,3,4}, d(2) = 2
    let mut h = hg(4, &[&[1, 3, 4], &[2, 3], &[2, 4]]);
    let ev = fire(ReductionKind::Twins, &mut h, 2);
    assert_eq!(ev.included, vertex_ids(&[1, 2]));
}

#[test]
fn sunflower_examples() {
    let mut h = hg(5, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5]]);
    assert_eq!(brute_alpha(&h), 3);
    let ev = fire(ReductionKind::Sunflower, &mut h, 1);
    assert_eq!(ev.excluded, vertex_ids(&[2]));
    assert_eq!(edge_sets(&h), vec![vec![1, 3], vec![1, 4], vec![1, 5]]);

    let mut h = hg(2, &[&[1, 2]]);
    fire(ReductionKind::Sunflower, &mut h, 1);
    assert_eq!(edge_sets(&h), vec![vec![1]]);
    fire(ReductionKind::SizeOneEdge, &mut h, 1);
    assert_eq!(fire(ReductionKind::DegreeZero, &mut h, 1).alpha_offset, 1);

    does_not_fire(ReductionKind::Sunflower, &mut hg(3, &[&[1, 2], &[1, 3]]), 1);
}

#[test]
fn sunflower_keeps_lowest_core_vertex() {
    let mut h = hg(4, &[&[1, 2, 3], &[2, 3, 4]]);
    let ev = fire(ReductionKind::Sunflower, &mut h, 3);
    assert_eq!(ev.excluded, vertex_ids(&[3]));
    assert!(h.contains_vertex(v(2)));
}

#[test]
fn simplicial_examples() {
    let mut h = hg(4, &[&[1, 2], &[2, 3], &[1, 3], &[4, 1, 2], &[4, 3]]);
    assert_eq!(brute_alpha(&h), 1);
    let ev = fire(ReductionKind::SimplicialVertex, &mut h, 4);
    assert_eq!(ev.included, vertex_ids(&[4]));
    assert!(h.is_empty());

    does_not_fire(
        ReductionKind::SimplicialVertex,
        &mut hg(5, &[&[1, 2], &[3, 4], &[5, 1, 3]]),
        5,
    );

    let mut h = hg(4, &[&[1, 2, 3], &[4, 1], &[4, 2], &[4, 3]]);
    assert_eq!(brute_alpha(&h), 1);
    fire(ReductionKind::SimplicialVertex, &mut h, 4);
    assert!(h.is_empty());
}

#[test]
fn simplicial_rejects_non_cliques() {
    // N(5) = {1,2,3} but 1 and 3 are not adjacent
    let mut h = hg(5, &[&[1, 2], &[2, 3], &[5, 1], &[5, 2], &[5, 3]]);
    does_not_fire(ReductionKind::SimplicialVertex, &mut h, 5);
}

#[test]
fn vertex_domination_examples() {
    let mut h = hg(3, &[&[1, 2], &[1, 3]]);
    assert_eq!(brute_alpha(&h), 2);
    let ev = fire(ReductionKind::VertexDomination, &mut h, 1);
    assert_eq!(ev.excluded, vertex_ids(&[1]));
    assert_eq!(live(&h), vec![2, 3]);
    assert_eq!(edge_sets(&h), vec![vec![2], vec![3]]);

    does_not_fire(
        ReductionKind::VertexDomination,
        &mut hg(3, &[&[1, 2], &[2, 3]]),
        1,
    );

    let mut h = hg(3, &[&[1, 2, 3]]);
    fire(ReductionKind::VertexDomination, &mut h, 3);
    assert_eq!(live(&h), vec![1, 2]);
}

#[test]
fn unconfined_examples() {
    let mut h = hg(3, &[&[1, 2], &[1, 3], &[2, 3]]);
    let ev = fire(ReductionKind::Unconfined, &mut h, 1);
    assert_eq!(ev.excluded, vertex_ids(&[1]));

    let mut h = hg(4, &[&[1, 2], &[2, 3], &[3, 4]]);
    assert_eq!(brute_alpha(&h), 2);
    fire(ReductionKind::Unconfined, &mut h, 2);
    assert!(!h.contains_vertex(v(2)));

    let mut h = hg(2, &[&[1, 2]]);
    fire(ReductionKind::Unconfined, &mut h, 1);
    assert_eq!(live(&h), vec![2]);
}

#[test]
fn unconfined_grows_the_set() {
    // Path 1-2-3-4-5: from S={1}, child 2 has outside vertex 3, so S={1,3};
    // child 4 then has outside vertex 5 and S={1,3,5} has no children: confined.
    let mut h = hg(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5]]);
    does_not_fire(ReductionKind::Unconfined, &mut h, 1);
    // C4 plus a pendant: the pendant 5 is a child of {1} with no outside neighbor
    let mut h = hg(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 1], &[1, 5]]);
    assert_eq!(brute_alpha(&h), 3);
    fire(ReductionKind::Unconfined, &mut h, 1);
}

#[test]
fn dead_loci_are_invalid_arguments() {
    let mut h = hg(2, &[&[1, 2]]);
    assert!(apply_degree_one(&mut h, v(3)).is_err());
    assert!(apply_edge_domination(&mut h, e(2)).is_err());
    assert!(apply_rule(ReductionKind::Twins, &mut h, 0).is_err());
    h.remove_vertex(v(1)).unwrap();
    for kind in ReductionKind::CANONICAL_ORDER
        .into_iter()
        .filter(|k| !k.acts_on_edges())
    {
        assert!(matches!(
            apply_rule(kind, &mut h, 1),
            Err(Error::InvalidArgument(_))
        ));
    }
}

#[test]
fn reduce_path() {
    let h = hg(3, &[&[1, 2], &[2, 3]]);
    let result = reduce(h, &ReducerConfig::default()).unwrap();
    assert!(result.kernel.hypergraph.is_empty());
    assert_eq!(result.offset, 2);
    let lifted = result.lift(&[]).unwrap();
    assert_eq!(lifted.members, vertex_ids(&[1, 3]));
}

#[test]
fn reduce_sunflower_instance() {
    let h = hg(5, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5]]);
    let original = h.clone();
    let result = reduce(h, &ReducerConfig::default()).unwrap();
    assert!(result.kernel.hypergraph.is_empty());
    assert_eq!(result.offset, 3);
    let lifted = result.lift(&[]).unwrap();
    assert_eq!(lifted.cardinality(), brute_alpha(&original));
    assert!(exact::verify_independent(&original, &lifted.members).unwrap());
}

#[test]
fn reduce_empty() {
    let result = reduce(Hypergraph::new(), &ReducerConfig::default()).unwrap();
    assert!(result.kernel.hypergraph.is_empty());
    assert_eq!(result.offset, 0);
    assert!(result.trace.is_empty());
}

#[test]
fn reduce_rejects_broken_structure_only_through_audit() {
    let h = hg(3, &[&[1, 2]]);
    h.audit().unwrap();
    assert!(reduce(h, &ReducerConfig::default()).is_ok());
}

#[test]
fn rule_filter() {
    let h = hg(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
    let cfg =
        ReducerConfig::new(vec![ReductionKind::DegreeZero, ReductionKind::DegreeOne]).unwrap();
    let result = reduce(h.clone(), &cfg).unwrap();
    assert_eq!(result.kernel.hypergraph.num_vertices(), 4);
    assert!(result.trace.is_empty());
    let full = reduce(h, &ReducerConfig::default()).unwrap();
    assert!(full.kernel.hypergraph.is_empty());
}

#[test]
fn config_validation() {
    assert!(ReducerConfig::new(vec![ReductionKind::DegreeOne, ReductionKind::DegreeZero]).is_err());
    assert!(ReducerConfig::new(vec![ReductionKind::Twins, ReductionKind::Twins]).is_err());
    let cfg = ReducerConfig::from_unordered(vec![
        ReductionKind::EdgeDomination,
        ReductionKind::DegreeZero,
        ReductionKind::EdgeDomination,
    ]);
    assert_eq!(
        cfg.enabled_rules(),
        &[ReductionKind::DegreeZero, ReductionKind::EdgeDomination]
    );
    let cfg = ReducerConfig::default().with_unconfined(false);
    assert!(!cfg.unconfined_enabled());
    assert_eq!(cfg.enabled_rules().len(), 8);
    assert_eq!(cfg.with_unconfined(true), ReducerConfig::default());
}

#[test]
fn kind_names_parse() {
    for kind in ReductionKind::CANONICAL_ORDER {
        assert_eq!(kind.name().parse::<ReductionKind>().unwrap(), kind);
    }
    assert_eq!(
        "degree-one".parse::<ReductionKind>().unwrap(),
        ReductionKind::DegreeOne
    );
    assert!("degree-two".parse::<ReductionKind>().is_err());
}

#[test]
fn zero_time_limit_still_yields_valid_kernel() {
    let h = hg(6, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 6]]);
    let cfg = ReducerConfig::default().with_time_limit(Duration::ZERO);
    let result = reduce(h.clone(), &cfg).unwrap();
    assert!(result.timed_out);
    assert!(result.trace.is_empty());
    assert_eq!(result.kernel.hypergraph, h);
}

#[test]
fn lifting() {
    let degree_one = TraceEvent {
        kind: ReductionKind::DegreeOne,
        included: vertex_ids(&[1]),
        excluded: vertex_ids(&[2]),
        removed_edges: vec![e(1)],
        alpha_offset: 1,
    };
    assert_eq!(lift_solution(&[degree_one], &[]).members, vertex_ids(&[1]));

    let mut h = hg(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
    let ev = apply_twins(&mut h, v(1)).unwrap().unwrap();
    let lifted = lift_solution(&[ev], &[]);
    assert_eq!(lifted.members, vertex_ids(&[1, 2]));

    assert_eq!(
        lift_solution(&[], &vertex_ids(&[7, 4])).members,
        vertex_ids(&[4, 7])
    );
}

#[test]
fn lifting_rejects_dependent_kernel_solutions() {
    // no rules enabled, so the kernel is the input itself
    let h = hg(3, &[&[1, 2, 3]]);
    let result = reduce(h, &ReducerConfig::new(vec![]).unwrap()).unwrap();
    assert!(matches!(
        result.lift(&vertex_ids(&[1, 2])),
        Err(Error::InvalidSolution(_))
    ));
    assert!(matches!(
        result.lift(&vertex_ids(&[9])),
        Err(Error::InvalidArgument(_))
    ));
    assert_eq!(
        result.lift(&vertex_ids(&[2])).unwrap().members,
        vertex_ids(&[2])
    );
}
