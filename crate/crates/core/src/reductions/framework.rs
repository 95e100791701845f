use std::collections::{HashMap, VecDeque};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::{rules, ReductionKind, TraceEvent};
use crate::error::{Error, Result};
use crate::exact::Solution;
use crate::hypergraph::{ChangeLog, EdgeId, Hypergraph, VertexId};

/// Rules whose applicability can change without any change to the locus' own
/// neighborhood. They get one extra full pass once the dirty queues run dry.
const NON_LOCAL: [ReductionKind; 3] = [
    ReductionKind::SimplicialVertex,
    ReductionKind::VertexDomination,
    ReductionKind::Unconfined,
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducerConfig {
    enabled_rules: Vec<ReductionKind>,
    pub time_limit: Option<Duration>,
}

impl Default for ReducerConfig {
    fn default() -> Self {
        ReducerConfig {
            enabled_rules: ReductionKind::CANONICAL_ORDER.to_vec(),
            time_limit: None,
        }
    }
}

impl ReducerConfig {
    /// Rules must be given as a subsequence of [`ReductionKind::CANONICAL_ORDER`].
    pub fn new(enabled_rules: Vec<ReductionKind>) -> Result<Self> {
        let in_order = enabled_rules
            .windows(2)
            .all(|w| w[0].canonical_position() < w[1].canonical_position());
        if !in_order {
            return Err(Error::InvalidArgument(
                "enabled rules must follow the canonical order without repetition".into(),
            ));
        }
        Ok(ReducerConfig {
            enabled_rules,
            time_limit: None,
        })
    }

    /// Sorts an arbitrary rule list into canonical order and drops repeats.
    pub fn from_unordered(mut rules: Vec<ReductionKind>) -> Self {
        rules.sort_by_key(|k| k.canonical_position());
        rules.dedup();
        ReducerConfig {
            enabled_rules: rules,
            time_limit: None,
        }
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub fn enabled_rules(&self) -> &[ReductionKind] {
        &self.enabled_rules
    }

    pub fn is_enabled(&self, kind: ReductionKind) -> bool {
        self.enabled_rules.contains(&kind)
    }

    pub fn unconfined_enabled(&self) -> bool {
        self.is_enabled(ReductionKind::Unconfined)
    }

    pub fn with_unconfined(mut self, enabled: bool) -> Self {
        if enabled != self.unconfined_enabled() {
            let mut rules = self.enabled_rules;
            if enabled {
                rules.push(ReductionKind::Unconfined);
            } else {
                rules.retain(|&k| k != ReductionKind::Unconfined);
            }
            self.enabled_rules = Self::from_unordered(rules).enabled_rules;
        }
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleStats {
    pub kind: ReductionKind,
    pub applications: usize,
    pub vertices_removed: usize,
    pub edges_removed: usize,
}

/// Compacted reduced instance together with the way back to original ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kernel {
    pub hypergraph: Hypergraph,
    /// `vertex_map[i]` is the original id of kernel vertex `i + 1`.
    pub vertex_map: Vec<VertexId>,
    /// `edge_map[i]` is the original id of kernel edge `i + 1`.
    pub edge_map: Vec<EdgeId>,
}

impl Kernel {
    pub fn to_original_ids(&self, kernel_ids: &[VertexId]) -> Result<Vec<VertexId>> {
        kernel_ids
            .iter()
            .map(|v| {
                self.vertex_map
                    .get(v.index())
                    .copied()
                    .ok_or_else(|| Error::InvalidArgument(format!("kernel has no vertex {v}")))
            })
            .collect()
    }

    pub fn to_kernel_ids(&self, original_ids: &[VertexId]) -> Result<Vec<VertexId>> {
        let lookup: HashMap<VertexId, usize> = self
            .vertex_map
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        original_ids
            .iter()
            .map(|v| {
                lookup
                    .get(v)
                    .map(|&i| VertexId::from_index(i))
                    .ok_or_else(|| {
                        Error::InvalidArgument(format!("vertex {v} is not part of the kernel"))
                    })
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct KernelResult {
    pub kernel: Kernel,
    pub trace: Vec<TraceEvent>,
    /// Number of vertices already fixed in the solution; α(original) = α(kernel) + offset.
    pub offset: usize,
    /// One entry per rule, in canonical order.
    pub stats: Vec<RuleStats>,
    pub elapsed: Duration,
    pub timed_out: bool,
}

impl KernelResult {
    /// Lifts a kernel solution given in original ids to a solution of the original instance.
    pub fn lift(&self, kernel_solution: &[VertexId]) -> Result<Solution> {
        super::lift_verified(&self.kernel, &self.trace, kernel_solution)
    }

    /// Lifts a kernel solution given in kernel ids.
    pub fn lift_kernel_ids(&self, kernel_solution: &[VertexId]) -> Result<Solution> {
        self.lift(&self.kernel.to_original_ids(kernel_solution)?)
    }

    pub fn rule_stats(&self, kind: ReductionKind) -> &RuleStats {
        &self.stats[kind.canonical_position()]
    }
}

/// FIFO of ids with a membership flag so an id is queued at most once.
#[derive(Debug)]
struct DirtyQueue {
    queue: VecDeque<u32>,
    queued: Vec<bool>,
}

impl DirtyQueue {
    fn new(capacity: usize) -> Self {
        DirtyQueue {
            queue: VecDeque::new(),
            queued: vec![false; capacity],
        }
    }

    fn push(&mut self, id: u32) {
        let slot = &mut self.queued[id as usize - 1];
        if !*slot {
            *slot = true;
            self.queue.push_back(id);
        }
    }

    fn pop(&mut self) -> Option<u32> {
        let id = self.queue.pop_front()?;
        self.queued[id as usize - 1] = false;
        Some(id)
    }

    fn is_empty(&self) -> bool {
        self.queue.is_empty()
    }
}

struct Tier {
    kind: ReductionKind,
    queue: DirtyQueue,
}

/// Applies the enabled rules until none of them applies anywhere (or the time
/// limit is hit). After every successful application the scan restarts from
/// the first rule that still has pending work.
pub fn reduce(mut h: Hypergraph, cfg: &ReducerConfig) -> Result<KernelResult> {
    h.audit()?;
    let start = Instant::now();
    let deadline = cfg.time_limit.map(|limit| start + limit);

    let mut tiers: Vec<Tier> = cfg
        .enabled_rules()
        .iter()
        .map(|&kind| {
            let capacity = if kind.acts_on_edges() {
                h.edge_capacity()
            } else {
                h.vertex_capacity()
            };
            Tier {
                kind,
                queue: DirtyQueue::new(capacity),
            }
        })
        .collect();
    for tier in &mut tiers {
        seed(tier, &h);
    }

    let mut stats: Vec<RuleStats> = ReductionKind::CANONICAL_ORDER
        .iter()
        .map(|&kind| RuleStats {
            kind,
            applications: 0,
            vertices_removed: 0,
            edges_removed: 0,
        })
        .collect();
    let mut trace = Vec::new();
    let mut offset = 0;
    let mut timed_out = false;
    let mut swept = false;

    loop {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            timed_out = true;
            break;
        }
        let Some(t) = tiers.iter().position(|t| !t.queue.is_empty()) else {
            if swept {
                break;
            }
            swept = true;
            for tier in tiers.iter_mut().filter(|t| NON_LOCAL.contains(&t.kind)) {
                seed(tier, &h);
            }
            continue;
        };
        let kind = tiers[t].kind;
        let locus = tiers[t].queue.pop().expect("queue is nonempty");
        let alive = if kind.acts_on_edges() {
            h.contains_edge(EdgeId::new(locus))
        } else {
            h.contains_vertex(VertexId::new(locus))
        };
        if !alive {
            continue;
        }

        let mut log = ChangeLog::default();
        let Some(event) = rules::apply(kind, &mut h, locus, &mut log) else {
            continue;
        };
        swept = false;
        let entry = &mut stats[kind.canonical_position()];
        entry.applications += 1;
        entry.vertices_removed += event.included.len() + event.excluded.len();
        entry.edges_removed += event.removed_edges.len();
        offset += event.alpha_offset;
        trace.push(event);

        for tier in &mut tiers {
            if tier.kind.acts_on_edges() {
                for &e in &log.shrunk_edges {
                    if h.contains_edge(e) {
                        tier.queue.push(e.get());
                    }
                }
            } else {
                for &v in &log.vertices {
                    if h.contains_vertex(v) {
                        tier.queue.push(v.get());
                    }
                }
            }
        }
    }

    let (hypergraph, vertex_map, edge_map) = h.compact();
    Ok(KernelResult {
        kernel: Kernel {
            hypergraph,
            vertex_map,
            edge_map,
        },
        trace,
        offset,
        stats,
        elapsed: start.elapsed(),
        timed_out,
    })
}

fn seed(tier: &mut Tier, h: &Hypergraph) {
    if tier.kind.acts_on_edges() {
        for e in h.edges() {
            tier.queue.push(e.get());
        }
    } else {
        for v in h.vertices() {
            tier.queue.push(v.get());
        }
    }
}
