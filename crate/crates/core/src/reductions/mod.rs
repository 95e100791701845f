//! Data reduction rules for maximum strong independent set.
//!
//! Every rule either includes vertices (they belong to some maximum solution,
//! so their closed neighborhood is deleted), excludes vertices (some maximum
//! solution avoids them) or deletes edges that do not constrain the problem.
//! None of them folds vertices, so lifting a kernel solution only has to add
//! back the included vertices.

mod framework;
mod rules;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, Solution};
use crate::hypergraph::{ChangeLog, EdgeId, Hypergraph, VertexId};
use crate::sorted;

pub use framework::{reduce, Kernel, KernelResult, ReducerConfig, RuleStats};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ReductionKind {
    SizeOneEdge,
    EdgeDomination,
    DegreeZero,
    DegreeOne,
    Twins,
    Sunflower,
    SimplicialVertex,
    VertexDomination,
    Unconfined,
}

impl ReductionKind {
    /// Order in which the framework tries the rules. Size-one edges are
    /// handled first so that every other rule sees normalized degrees.
    pub const CANONICAL_ORDER: [ReductionKind; 9] = [
        ReductionKind::SizeOneEdge,
        ReductionKind::DegreeZero,
        ReductionKind::DegreeOne,
        ReductionKind::Twins,
        ReductionKind::Sunflower,
        ReductionKind::SimplicialVertex,
        ReductionKind::VertexDomination,
        ReductionKind::Unconfined,
        ReductionKind::EdgeDomination,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::SizeOneEdge => "SizeOneEdge",
            ReductionKind::EdgeDomination => "EdgeDomination",
            ReductionKind::DegreeZero => "DegreeZero",
            ReductionKind::DegreeOne => "DegreeOne",
            ReductionKind::Twins => "Twins",
            ReductionKind::Sunflower => "Sunflower",
            ReductionKind::SimplicialVertex => "SimplicialVertex",
            ReductionKind::VertexDomination => "VertexDomination",
            ReductionKind::Unconfined => "Unconfined",
        }
    }

    /// `true` for rules that are tried at an edge rather than a vertex.
    pub fn acts_on_edges(self) -> bool {
        matches!(
            self,
            ReductionKind::SizeOneEdge | ReductionKind::EdgeDomination
        )
    }

    pub(crate) fn canonical_position(self) -> usize {
        Self::CANONICAL_ORDER
            .iter()
            .position(|&k| k == self)
            .expect("every kind is in the canonical order")
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ReductionKind {
    type Err = Error;

    /// Accepts the variant name, ignoring case, `-` and `_`.
    fn from_str(s: &str) -> Result<Self> {
        let wanted: String = s
            .chars()
            .filter(|c| *c != '-' && *c != '_')
            .flat_map(char::to_lowercase)
            .collect();
        Self::CANONICAL_ORDER
            .into_iter()
            .find(|k| k.name().to_lowercase() == wanted)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown reduction rule `{s}`")))
    }
}

/// One successful rule application, expressed in the ids of the reduced instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceEvent {
    pub kind: ReductionKind,
    pub included: Vec<VertexId>,
    pub excluded: Vec<VertexId>,
    pub removed_edges: Vec<EdgeId>,
    pub alpha_offset: usize,
}

impl TraceEvent {
    pub(crate) fn new(
        kind: ReductionKind,
        included: Vec<VertexId>,
        excluded: Vec<VertexId>,
        log: &ChangeLog,
    ) -> Self {
        let mut removed_edges = log.deleted_edges.clone();
        sorted::normalize(&mut removed_edges);
        TraceEvent {
            kind,
            alpha_offset: included.len(),
            included,
            excluded,
            removed_edges,
        }
    }

    /// Checks the event's own invariants.
    pub fn validate(&self) -> Result<()> {
        if self.alpha_offset != self.included.len() {
            return Err(Error::Structure(format!(
                "{} event claims offset {} for {} included vertices",
                self.kind,
                self.alpha_offset,
                self.included.len()
            )));
        }
        if self.included.iter().any(|v| self.excluded.contains(v)) {
            return Err(Error::Structure(format!(
                "{} event both includes and excludes a vertex",
                self.kind
            )));
        }
        Ok(())
    }
}

/// Tries `kind` at a single vertex or edge (`locus`), mutating `h` on success.
/// Size-one edges created along the way are left in place.
pub fn apply_rule(
    kind: ReductionKind,
    h: &mut Hypergraph,
    locus: u32,
) -> Result<Option<TraceEvent>> {
    if kind.acts_on_edges() {
        h.check_edge(EdgeId::try_from(locus)?)?;
    } else {
        h.check_vertex(VertexId::try_from(locus)?)?;
    }
    Ok(rules::apply(kind, h, locus, &mut ChangeLog::default()))
}

pub fn apply_size_one_edge(h: &mut Hypergraph, e: EdgeId) -> Result<Option<TraceEvent>> {
    apply_rule(ReductionKind::SizeOneEdge, h, e.get())
}

pub fn apply_edge_domination(h: &mut Hypergraph, e: EdgeId) -> Result<Option<TraceEvent>> {
    apply_rule(ReductionKind::EdgeDomination, h, e.get())
}

pub fn apply_degree_zero(h: &mut Hypergraph, v: VertexId) -> Result<Option<TraceEvent>> {
    apply_rule(ReductionKind::DegreeZero, h, v.get())
}

pub fn apply_degree_one(h: &mut Hypergraph, v: VertexId) -> Result<Option<TraceEvent>> {
    apply_rule(ReductionKind::DegreeOne, h, v.get())
}

pub fn apply_twins(h: &mut Hypergraph, v: VertexId) -> Result<Option<TraceEvent>> {
    apply_rule(ReductionKind::Twins, h, v.get())
}

pub fn apply_sunflower(h: &mut Hypergraph, v: VertexId) -> Result<Option<TraceEvent>> {
    apply_rule(ReductionKind::Sunflower, h, v.get())
}

pub fn apply_simplicial(h: &mut Hypergraph, v: VertexId) -> Result<Option<TraceEvent>> {
    apply_rule(ReductionKind::SimplicialVertex, h, v.get())
}

pub fn apply_vertex_domination(h: &mut Hypergraph, u: VertexId) -> Result<Option<TraceEvent>> {
    apply_rule(ReductionKind::VertexDomination, h, u.get())
}

pub fn apply_unconfined(h: &mut Hypergraph, v: VertexId) -> Result<Option<TraceEvent>> {
    apply_rule(ReductionKind::Unconfined, h, v.get())
}

/// Adds every included vertex of the trace to a kernel solution given in original ids.
pub fn lift_solution(trace: &[TraceEvent], kernel_solution: &[VertexId]) -> Solution {
    let mut members = kernel_solution.to_vec();
    for event in trace {
        members.extend_from_slice(&event.included);
    }
    sorted::normalize(&mut members);
    Solution::new(members, true)
}

/// Like [`lift_solution`], but first checks that `kernel_solution` is independent in `kernel`
/// (both in original ids).
pub fn lift_verified(
    kernel: &Kernel,
    trace: &[TraceEvent],
    kernel_solution: &[VertexId],
) -> Result<Solution> {
    let local = kernel.to_kernel_ids(kernel_solution)?;
    if let Some(e) = exact::find_violation(&kernel.hypergraph, &local)? {
        return Err(Error::InvalidSolution(format!(
            "kernel edge {} (original edge {}) contains more than one solution vertex",
            e,
            kernel.edge_map[e.index()]
        )));
    }
    Ok(lift_solution(trace, kernel_solution))
}

#[cfg(test)]
mod tests;
