//! The immutable simple-graph type everything else operates on.
//!
//! Vertices are dense ids `0..n` with `n <= 65535`. Adjacency is one
//! [`BitSet`] row per vertex, kept symmetric and irreflexive by
//! construction: the only way to build a `Graph` is through
//! [`GraphBuilder`] or the parsing/generator helpers, all of which insert
//! both directions of an edge and reject self-loops.
//!
//! Optional per-vertex text labels record provenance when graphs are
//! produced by reductions; equality is label-insensitive.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::BitSet;

/// Hard cap on vertex count. Reductions blow instances up by a constant
/// factor (at most 44 per vertex here), so two bytes of id space is ample.
pub const MAX_VERTICES: usize = 65_535;

/// An immutable simple undirected graph.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

/// Errors from graph construction and parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    TooManyVertices { n: usize },
    VertexOutOfRange { vertex: usize, n: usize, line: Option<usize> },
    SelfLoop { vertex: usize, line: Option<usize> },
    DuplicateEdge { u: usize, v: usize, line: Option<usize> },
    MalformedLine { line: usize, reason: String },
    MissingHeader,
    EdgeCountMismatch { declared: usize, found: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::TooManyVertices { n } => {
                write!(f, "{n} vertices exceed the supported maximum of {MAX_VERTICES}")
            }
            GraphError::VertexOutOfRange { vertex, n, line } => {
                write!(f, "vertex {vertex} out of range for {n} vertices")?;
                if let Some(l) = line {
                    write!(f, " (line {l})")?;
                }
                Ok(())
            }
            GraphError::SelfLoop { vertex, line } => {
                write!(f, "self-loop at vertex {vertex}")?;
                if let Some(l) = line {
                    write!(f, " (line {l})")?;
                }
                Ok(())
            }
            GraphError::DuplicateEdge { u, v, line } => {
                write!(f, "duplicate edge {u}-{v}")?;
                if let Some(l) = line {
                    write!(f, " (line {l})")?;
                }
                Ok(())
            }
            GraphError::MalformedLine { line, reason } => {
                write!(f, "malformed line {line}: {reason}")
            }
            GraphError::MissingHeader => write!(f, "missing 'p edge <n> <m>' header line"),
            GraphError::EdgeCountMismatch { declared, found } => {
                write!(f, "header declares {declared} edges but {found} were listed")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Incremental constructor enforcing the `Graph` invariants.
pub struct GraphBuilder {
    n: usize,
    adj: Vec<BitSet>,
    labels: Option<Vec<String>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(GraphBuilder {
            n,
            adj: vec![BitSet::new(n); n],
            labels: None,
        })
    }

    /// Adds the undirected edge `u-v`. Rejects loops, out-of-range ids and
    /// duplicates.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.add_edge_at(u, v, None)
    }

    fn add_edge_at(&mut self, u: usize, v: usize, line: Option<usize>) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n, line });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n, line });
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u, line });
        }
        if self.adj[u].contains(v) {
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            return Err(GraphError::DuplicateEdge { u: a, v: b, line });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Attaches a provenance label to a vertex.
    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        debug_assert!(v < self.n);
        let labels = self
            .labels
            .get_or_insert_with(|| vec![String::new(); self.n]);
        labels[v] = label.into();
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.n,
            adj: self.adj,
            labels: self.labels,
        }
    }
}

impl Graph {
    /// The empty graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Ok(GraphBuilder::new(n)?.build())
    }

    /// Builds a graph directly from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut b = GraphBuilder::new(n)?;
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    /// Neighbor row of `v` as a bitset (open neighborhood).
    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    /// Closed neighborhood `N[v]` as a fresh bitset.
    pub fn closed_neighborhood(&self, v: usize) -> BitSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `Some(k)` iff every vertex has degree exactly `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut degrees = (0..self.n).map(|v| self.degree(v));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        match &self.labels {
            Some(labels) if !labels[v].is_empty() => Some(&labels[v]),
            _ => None,
        }
    }

    /// Vertex sets of the connected components, each ascending, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<BitSet> {
        let mut seen = BitSet::new(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = BitSet::new(self.n);
            comp.insert(start);
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for w in self.adj[v].iter() {
                    if !comp.contains(w) {
                        comp.insert(w);
                        queue.push(w);
                    }
                }
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Graph complement: flips every non-diagonal adjacency. Labels are
    /// carried over.
    pub fn complement(&self) -> Graph {
        let mut adj = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut row = self.adj[v].clone();
            row.complement();
            row.remove(v);
            adj.push(row);
        }
        Graph {
            n: self.n,
            adj,
            labels: self.labels.clone(),
        }
    }

    /// Disjoint union; vertices of `other` are relabeled by offset `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        let mut b = GraphBuilder::new(n)?;
        for (u, v) in self.edges() {
            b.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            b.add_edge(u + self.n, v + self.n)?;
        }
        Ok(b.build())
    }

    /// Subgraph induced by `keep`, with vertices relabeled densely in
    /// ascending order of their original id. The second return value maps
    /// new ids back to original ids.
    pub fn induced_subgraph(&self, keep: &BitSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if let Some(bad) = keep.iter().find(|&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { vertex: bad, n: self.n, line: None });
        }
        let map: Vec<usize> = keep.iter().collect();
        let mut b = GraphBuilder::new(map.len())?;
        for (new_u, &old_u) in map.iter().enumerate() {
            for old_v in self.adj[old_u].iter() {
                if old_v > old_u && keep.contains(old_v) {
                    let new_v = map.binary_search(&old_v).expect("kept vertex");
                    b.add_edge(new_u, new_v)?;
                }
            }
            if let Some(l) = self.label(old_u) {
                b.set_label(new_u, l);
            }
        }
        Ok((b.build(), map))
    }

    /// Deletes one vertex; shorthand over [`Graph::induced_subgraph`].
    pub fn delete_vertex(&self, v: usize) -> (Graph, Vec<usize>) {
        let mut keep = BitSet::full(self.n);
        keep.remove(v);
        self.induced_subgraph(&keep).expect("in-range")
    }

    /// Line graph: one vertex per edge of `self`, adjacent iff the edges
    /// share an endpoint. Also returns the edge each new vertex stands for.
    pub fn line_graph(&self) -> Result<(Graph, Vec<(usize, usize)>), GraphError> {
        let edges = self.edges();
        let mut b = GraphBuilder::new(edges.len())?;
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b1) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b1 == c || b1 == d {
                    b.add_edge(i, j)?;
                }
            }
        }
        Ok((b.build(), edges))
    }

    /// Full-scan check of the structural invariants; used by tests and by
    /// the parsers' own sanity asserts.
    pub fn check_invariants(&self) -> bool {
        for u in 0..self.n {
            if self.adj[u].contains(u) {
                return false;
            }
            for v in self.adj[u].iter() {
                if v >= self.n || !self.adj[v].contains(u) {
                    return false;
                }
            }
        }
        true
    }

    /// Renders the graph in the text format described in the crate docs:
    /// one `p edge <n> <m>` header, then `e <u> <v>` lines with 1-based
    /// ids, `u < v`, sorted lexicographically.
    pub fn to_text(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.n, self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m(), self.edges())
    }
}

/// Parses the DIMACS-like text format: `c` comment lines, one
/// `p edge <n> <m>` header, then `m` lines `e <u> <v>` with 1-based ids.
///
/// Every rejected input names the offending line.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut builder: Option<GraphBuilder> = None;
    let mut declared_edges = 0usize;
    let mut found_edges = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("p") => {
                if builder.is_some() {
                    return Err(GraphError::MalformedLine {
                        line: lineno,
                        reason: "second 'p' header".to_string(),
                    });
                }
                if fields.next() != Some("edge") {
                    return Err(GraphError::MalformedLine {
                        line: lineno,
                        reason: "expected 'p edge <n> <m>'".to_string(),
                    });
                }
                let n: usize = parse_field(fields.next(), lineno)?;
                declared_edges = parse_field(fields.next(), lineno)?;
                if fields.next().is_some() {
                    return Err(GraphError::MalformedLine {
                        line: lineno,
                        reason: "trailing tokens after header".to_string(),
                    });
                }
                builder = Some(GraphBuilder::new(n)?);
            }
            Some("e") => {
                let b = builder.as_mut().ok_or(GraphError::MissingHeader)?;
                let u: usize = parse_field(fields.next(), lineno)?;
                let v: usize = parse_field(fields.next(), lineno)?;
                if fields.next().is_some() {
                    return Err(GraphError::MalformedLine {
                        line: lineno,
                        reason: "trailing tokens after edge".to_string(),
                    });
                }
                if u == 0 || v == 0 {
                    return Err(GraphError::MalformedLine {
                        line: lineno,
                        reason: "vertex ids are 1-based".to_string(),
                    });
                }
                b.add_edge_at(u - 1, v - 1, Some(lineno))?;
                found_edges += 1;
            }
            Some(tok) => {
                return Err(GraphError::MalformedLine {
                    line: lineno,
                    reason: format!("unknown line type '{tok}'"),
                });
            }
            None => unreachable!("blank lines filtered"),
        }
    }

    let builder = builder.ok_or(GraphError::MissingHeader)?;
    if found_edges != declared_edges {
        return Err(GraphError::EdgeCountMismatch {
            declared: declared_edges,
            found: found_edges,
        });
    }
    Ok(builder.build())
}

fn parse_field(tok: Option<&str>, line: usize) -> Result<usize, GraphError> {
    tok.ok_or_else(|| GraphError::MalformedLine {
        line,
        reason: "missing field".to_string(),
    })?
    .parse()
    .map_err(|_| GraphError::MalformedLine {
        line,
        reason: "not a number".to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parse_k2() {
        let g = parse_graph("p edge 2 1\ne 1 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert!(g.has_edge(0, 1));
        assert!(g.check_invariants());
    }

    #[test]
    fn parse_triangle_with_comments() {
        let g = parse_graph("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert_eq!(g.regular_degree(), Some(2));
    }

    #[test]
    fn parse_rejects_self_loop() {
        let err = parse_graph("p edge 2 1\ne 1 1\n").unwrap_err();
        assert_eq!(err, GraphError::SelfLoop { vertex: 0, line: Some(2) });
    }

    #[test]
    fn parse_rejects_duplicate_and_range_and_malformed() {
        assert!(matches!(
            parse_graph("p edge 2 2\ne 1 2\ne 2 1\n").unwrap_err(),
            GraphError::DuplicateEdge { u: 0, v: 1, line: Some(3) }
        ));
        assert!(matches!(
            parse_graph("p edge 2 1\ne 1 3\n").unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 2, line: Some(2), .. }
        ));
        assert!(matches!(
            parse_graph("p edge 2 1\nz 1 2\n").unwrap_err(),
            GraphError::MalformedLine { line: 2, .. }
        ));
        assert!(matches!(
            parse_graph("e 1 2\n").unwrap_err(),
            GraphError::MissingHeader
        ));
        assert!(matches!(
            parse_graph("p edge 3 2\ne 1 2\n").unwrap_err(),
            GraphError::EdgeCountMismatch { declared: 2, found: 1 }
        ));
    }

    #[test]
    fn text_roundtrip_is_sorted_and_one_based() {
        let g = Graph::from_edges(4, &[(2, 3), (0, 3), (0, 1)]).unwrap();
        let text = g.to_text();
        assert_eq!(text, "p edge 4 3\ne 1 2\ne 1 4\ne 3 4\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn complement_of_complement_is_identity() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4), (0, 4)]).unwrap();
        assert_eq!(g.complement().complement(), g);
        assert!(g.complement().check_invariants());
    }

    #[test]
    fn disjoint_union_offsets_second_operand() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let two_k3 = k3.disjoint_union(&k3).unwrap();
        assert_eq!((two_k3.n(), two_k3.m()), (6, 6));
        assert!(two_k3.has_edge(3, 4) && !two_k3.has_edge(2, 3));
        assert_eq!(two_k3.components().len(), 2);
    }

    #[test]
    fn induced_subgraph_keeps_internal_edges() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let keep = BitSet::from_iter(4, [0, 2, 3]);
        let (h, map) = k4.induced_subgraph(&keep).unwrap();
        assert_eq!((h.n(), h.m()), (3, 3));
        assert_eq!(map, vec![0, 2, 3]);
    }

    #[test]
    fn line_graph_of_path_is_shorter_path() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (l, edge_map) = p4.line_graph().unwrap();
        assert_eq!((l.n(), l.m()), (3, 2));
        assert_eq!(edge_map, vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(l.regular_degree(), None);
    }

    #[test]
    fn labels_survive_induced_subgraph() {
        let mut b = GraphBuilder::new(3).unwrap();
        b.add_edge(0, 1).unwrap();
        b.add_edge(1, 2).unwrap();
        b.set_label(1, "mid");
        let g = b.build();
        assert_eq!(g.label(1), Some("mid"));
        assert_eq!(g.label(0), None);
        let (h, _) = g.delete_vertex(0);
        assert_eq!(h.label(0), Some("mid"));
    }

    #[test]
    fn empty_graph() {
        let g = Graph::empty(0).unwrap();
        assert_eq!(g.to_text(), "p edge 0 0\n");
        assert!(g.is_connected());
        assert!(Graph::empty(70_000).is_err());
        let _ = "ok".to_string();
    }
}
