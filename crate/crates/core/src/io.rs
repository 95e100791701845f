//! Text formats: hMetis hypergraphs, METIS graphs, JSON Lines traces,
//! solutions, id maps and statistics reports.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::{Hypergraph, VertexId};
use crate::reductions::{KernelResult, RuleStats, TraceEvent};
use crate::sorted;

fn is_comment(line: &str) -> bool {
    line.trim_start().starts_with('%')
}

fn parse_count(token: &str, line: usize, what: &str) -> Result<usize> {
    token.parse::<usize>().map_err(|_| {
        Error::parse(
            line,
            format!("{what} `{token}` is not a non-negative integer"),
        )
    })
}

/// Parses an unweighted hMetis hypergraph: a header `m n [0]` followed by one
/// line of 1-based pins per edge. Lines starting with `%` are comments.
pub fn parse_hmetis(text: &str) -> Result<Hypergraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !is_comment(l));

    let (header_line, header) = loop {
        match lines.next() {
            None => return Err(Error::parse(1, "missing header line `m n`")),
            Some((_, l)) if l.trim().is_empty() => continue,
            Some(found) => break found,
        }
    };
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() < 2 || tokens.len() > 3 {
        return Err(Error::parse(
            header_line,
            "header must be `m n` or `m n fmt`",
        ));
    }
    let m = parse_count(tokens[0], header_line, "edge count")?;
    let n = parse_count(tokens[1], header_line, "vertex count")?;
    if let Some(&fmt) = tokens.get(2) {
        if fmt != "0" {
            return Err(Error::parse(
                header_line,
                format!("weighted hMetis format `{fmt}` is not supported"),
            ));
        }
    }
    if u32::try_from(n).is_err() || u32::try_from(m).is_err() {
        return Err(Error::parse(
            header_line,
            "instance too large for 32-bit ids",
        ));
    }

    let mut h = Hypergraph::with_vertices(n);
    let mut last_line = header_line;
    for (line, content) in lines.by_ref() {
        last_line = line;
        if h.edge_capacity() == m {
            if content.trim().is_empty() {
                continue;
            }
            return Err(Error::parse(
                line,
                format!("found more than the {m} declared edge lines"),
            ));
        }
        let mut pins = Vec::new();
        for token in content.split_whitespace() {
            let pin = parse_count(token, line, "pin")?;
            if pin == 0 || pin > n {
                return Err(Error::parse(line, format!("pin {pin} is outside 1..={n}")));
            }
            pins.push(VertexId::new(pin as u32));
        }
        if pins.is_empty() {
            return Err(Error::parse(line, "empty hyperedge"));
        }
        h.add_edge(pins)
            .map_err(|e| Error::parse(line, e.to_string()))?;
    }
    if h.edge_capacity() != m {
        return Err(Error::parse(
            last_line,
            format!("expected {m} edge lines, found {}", h.edge_capacity()),
        ));
    }
    Ok(h)
}

fn require_compact(h: &Hypergraph) -> Result<()> {
    if h.is_compact() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(
            "instance has removed ids; compact it before writing".into(),
        ))
    }
}

pub fn write_hmetis(h: &Hypergraph) -> Result<String> {
    require_compact(h)?;
    let mut out = format!("{} {}\n", h.num_edges(), h.num_vertices());
    for e in h.edges() {
        let pins: Vec<String> = h.pins(e).iter().map(|p| p.to_string()).collect();
        writeln!(out, "{}", pins.join(" ")).unwrap();
    }
    Ok(out)
}

/// METIS adjacency format: header `n m`, then the neighbors of each vertex.
pub fn write_metis_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.num_vertices(), g.num_edges());
    for v in g.vertices() {
        let nbrs: Vec<String> = g.neighbors(v).iter().map(|u| u.to_string()).collect();
        writeln!(out, "{}", nbrs.join(" ")).unwrap();
    }
    out
}

pub fn write_trace(trace: &[TraceEvent]) -> String {
    let mut out = String::new();
    for event in trace {
        out.push_str(&serde_json::to_string(event).expect("trace events serialize"));
        out.push('\n');
    }
    out
}

pub fn parse_trace(text: &str) -> Result<Vec<TraceEvent>> {
    let mut events = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let event: TraceEvent =
            serde_json::from_str(line).map_err(|e| Error::parse(i + 1, e.to_string()))?;
        event
            .validate()
            .map_err(|e| Error::parse(i + 1, e.to_string()))?;
        events.push(event);
    }
    Ok(events)
}

fn parse_id_lines(text: &str) -> Result<Vec<VertexId>> {
    let mut ids = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let token = line.trim();
        if token.is_empty() {
            continue;
        }
        let id = token
            .parse::<u32>()
            .ok()
            .filter(|&id| id >= 1)
            .ok_or_else(|| Error::parse(i + 1, format!("`{token}` is not a positive vertex id")))?;
        ids.push(VertexId::new(id));
    }
    Ok(ids)
}

fn write_id_lines(ids: &[VertexId]) -> String {
    let mut out = String::new();
    for v in ids {
        writeln!(out, "{v}").unwrap();
    }
    out
}

/// One vertex id per line, ascending.
pub fn write_solution(members: &[VertexId]) -> String {
    let mut sorted_members = members.to_vec();
    sorted::normalize(&mut sorted_members);
    write_id_lines(&sorted_members)
}

pub fn parse_solution(text: &str) -> Result<Vec<VertexId>> {
    let mut ids = parse_id_lines(text)?;
    sorted::normalize(&mut ids);
    Ok(ids)
}

/// Line `i` holds the original id of kernel vertex `i`.
pub fn write_map(vertex_map: &[VertexId]) -> String {
    write_id_lines(vertex_map)
}

pub fn parse_map(text: &str) -> Result<Vec<VertexId>> {
    parse_id_lines(text)
}

/// Instance size before and after reduction, in the columns of the usual
/// reduction overview table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StatsReport {
    pub n: usize,
    pub m: usize,
    /// Average edge size of the input.
    pub e: f64,
    pub n_r: usize,
    pub m_r: usize,
    pub e_r: f64,
    /// Reduction time in seconds.
    pub t: f64,
    pub offset: usize,
    pub timed_out: bool,
    pub rules: Vec<RuleStats>,
}

impl StatsReport {
    pub fn new(original: &Hypergraph, result: &KernelResult) -> Self {
        let kernel = &result.kernel.hypergraph;
        StatsReport {
            n: original.num_vertices(),
            m: original.num_edges(),
            e: original.average_edge_size(),
            n_r: kernel.num_vertices(),
            m_r: kernel.num_edges(),
            e_r: kernel.average_edge_size(),
            t: result.elapsed.as_secs_f64(),
            offset: result.offset,
            timed_out: result.timed_out,
            rules: result.stats.clone(),
        }
    }
}

/// Single-line JSON object followed by a newline.
pub fn write_stats(report: &StatsReport) -> String {
    let mut out = serde_json::to_string(report).expect("stats serialize");
    out.push('\n');
    out
}

pub fn parse_stats(text: &str) -> Result<StatsReport> {
    serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))
}
