//! Integer programs for maximum strong independent set in CPLEX LP format.
//!
//! Both formulations maximize the number of selected vertices over binary
//! variables `x<id>`. The hypergraph model has one packing row per edge, the
//! graph model one row per graph edge.

use std::fmt::Write;

use crate::graph::Graph;
use crate::hypergraph::{Hypergraph, VertexId};

/// Terms per physical line; keeps rows well below the 510 character limit of LP readers.
const TERMS_PER_LINE: usize = 16;

pub fn export_lp_hypergraph(h: &Hypergraph) -> String {
    let vertices: Vec<VertexId> = h.vertices().collect();
    let rows = h.edges().map(|e| (format!("c{e}"), h.pins(e).to_vec()));
    write_lp(&vertices, rows)
}

pub fn export_lp_graph(g: &Graph) -> String {
    let vertices: Vec<VertexId> = g.vertices().collect();
    let rows = g
        .edges()
        .enumerate()
        .map(|(i, (u, v))| (format!("c{}", i + 1), vec![u, v]));
    write_lp(&vertices, rows)
}

fn write_lp(vertices: &[VertexId], rows: impl Iterator<Item = (String, Vec<VertexId>)>) -> String {
    let mut out = String::from("Maximize\n");
    if vertices.is_empty() {
        out.push_str(" 0\n");
    } else {
        write_sum(&mut out, " ", vertices);
    }
    out.push_str("Subject To\n");
    for (name, terms) in rows {
        let head = format!(" {name}: ");
        write_sum(&mut out, &head, &terms);
        // the row's last line ends with a newline; put the sense on it
        out.pop();
        out.push_str(" <= 1\n");
    }
    if !vertices.is_empty() {
        out.push_str("Binary\n");
        for chunk in vertices.chunks(TERMS_PER_LINE) {
            let names: Vec<String> = chunk.iter().map(|v| format!("x{v}")).collect();
            writeln!(out, " {}", names.join(" ")).unwrap();
        }
    }
    out.push_str("End\n");
    out
}

fn write_sum(out: &mut String, head: &str, terms: &[VertexId]) {
    for (i, chunk) in terms.chunks(TERMS_PER_LINE).enumerate() {
        let names: Vec<String> = chunk.iter().map(|v| format!("x{v}")).collect();
        if i == 0 {
            out.push_str(head);
        } else {
            out.push_str("  + ");
        }
        out.push_str(&names.join(" + "));
        out.push('\n');
    }
}
