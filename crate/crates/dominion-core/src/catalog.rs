//! Generators for the named small graphs the rest of the crate keeps
//! reaching for, plus the compact text specs (`gem`, `P:7`, `tri:2,1,0`,
//! ...) the CLI accepts.
//!
//! Two entries are not standard textbook material and deserve a note:
//!
//! * `w4` is the wheel on 4+1 vertices (a 4-cycle plus a hub adjacent to
//!   all of it);
//! * `dart` is the diamond plus a pendant vertex attached to one of the
//!   diamond's two degree-2 vertices (so the attachment point ends with
//!   degree 3). Attaching to a degree-3 vertex instead would create an
//!   induced claw, and the dart is used here precisely as a claw-free
//!   pattern, which pins this reading down.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, GraphBuilder, GraphError};

/// Identifier of a catalog graph, with parameters where the family has
/// them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NamedGraphId {
    Claw,
    Diamond,
    Paw,
    Bull,
    Net,
    Butterfly,
    House,
    Gem,
    W4,
    Dart,
    /// Path on `n >= 1` vertices.
    Path(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    /// Complete graph on `p >= 1` vertices.
    Complete(usize),
    /// `k` disjoint copies of `K_p` (`k >= 0`, `p >= 1`).
    MultiComplete { k: usize, p: usize },
    /// Triangle with three disjoint pendant paths of the given lengths.
    Triangle(usize, usize, usize),
    /// Two disjoint triangles joined through a path with `k` inner
    /// vertices (`k = 0` joins them by an edge).
    DoubleTriangle(usize),
    /// `K_p` minus the edge between its two highest-indexed vertices
    /// (`p >= 2`); those two vertices are the designated attachment pair.
    CompleteMinusEdge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogError {
    InvalidParameter { id: String, reason: String },
    UnknownSpec { spec: String },
    Graph(GraphError),
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::InvalidParameter { id, reason } => {
                write!(f, "invalid parameter for {id}: {reason}")
            }
            CatalogError::UnknownSpec { spec } => write!(f, "unknown graph spec '{spec}'"),
            CatalogError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for CatalogError {}

impl From<GraphError> for CatalogError {
    fn from(e: GraphError) -> Self {
        CatalogError::Graph(e)
    }
}

impl fmt::Display for NamedGraphId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraphId::Claw => write!(f, "claw"),
            NamedGraphId::Diamond => write!(f, "diamond"),
            NamedGraphId::Paw => write!(f, "paw"),
            NamedGraphId::Bull => write!(f, "bull"),
            NamedGraphId::Net => write!(f, "net"),
            NamedGraphId::Butterfly => write!(f, "butterfly"),
            NamedGraphId::House => write!(f, "house"),
            NamedGraphId::Gem => write!(f, "gem"),
            NamedGraphId::W4 => write!(f, "w4"),
            NamedGraphId::Dart => write!(f, "dart"),
            NamedGraphId::Path(n) => write!(f, "P:{n}"),
            NamedGraphId::Cycle(n) => write!(f, "C:{n}"),
            NamedGraphId::Complete(p) => write!(f, "K:{p}"),
            NamedGraphId::MultiComplete { k, p } => write!(f, "kk:{k},{p}"),
            NamedGraphId::Triangle(a, b, c) => write!(f, "tri:{a},{b},{c}"),
            NamedGraphId::DoubleTriangle(k) => write!(f, "dt:{k}"),
            NamedGraphId::CompleteMinusEdge(p) => write!(f, "kme:{p}"),
        }
    }
}

/// Builds the catalog graph for `id`.
pub fn named_graph(id: &NamedGraphId) -> Result<Graph, CatalogError> {
    let bad = |reason: &str| CatalogError::InvalidParameter {
        id: id.to_string(),
        reason: reason.to_string(),
    };
    let g = match *id {
        // Star: center 0, leaves 1,2,3.
        NamedGraphId::Claw => Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)])?,
        // K4 minus the edge 2-3.
        NamedGraphId::Diamond => {
            Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])?
        }
        // Triangle 0,1,2 plus pendant 3 on vertex 0.
        NamedGraphId::Paw => Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)])?,
        // Triangle 0,1,2 with pendants 3 on 0 and 4 on 1.
        NamedGraphId::Bull => Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])?,
        // Triangle 0,1,2 with pendants 3,4,5 on 0,1,2 respectively.
        NamedGraphId::Net => {
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])?
        }
        // Two triangles sharing vertex 2.
        NamedGraphId::Butterfly => {
            Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 2), (4, 2)])?
        }
        // 4-cycle 0-1-2-3 plus roof 4 adjacent to 0 and 1.
        NamedGraphId::House => {
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)])?
        }
        // Path 0-1-2-3 plus 4 adjacent to all of it.
        NamedGraphId::Gem => Graph::from_edges(
            5,
            &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)],
        )?,
        // 4-cycle 0-1-2-3 plus hub 4 adjacent to all of it.
        NamedGraphId::W4 => Graph::from_edges(
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4), (2, 4), (3, 4)],
        )?,
        // Diamond with centers 0,1 and rim 2,3, plus pendant 4 on rim
        // vertex 2.
        NamedGraphId::Dart => Graph::from_edges(
            5,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4)],
        )?,
        NamedGraphId::Path(n) => {
            if n < 1 {
                return Err(bad("path needs n >= 1"));
            }
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            Graph::from_edges(n, &edges)?
        }
        NamedGraphId::Cycle(n) => {
            if n < 3 {
                return Err(bad("cycle needs n >= 3"));
            }
            let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            edges.push((n - 1, 0));
            Graph::from_edges(n, &edges)?
        }
        NamedGraphId::Complete(p) => {
            if p < 1 {
                return Err(bad("clique needs p >= 1"));
            }
            complete_block(p)?
        }
        NamedGraphId::MultiComplete { k, p } => {
            if p < 1 {
                return Err(bad("clique needs p >= 1"));
            }
            let mut b = GraphBuilder::new(k * p)?;
            for copy in 0..k {
                for i in 0..p {
                    for j in i + 1..p {
                        b.add_edge(copy * p + i, copy * p + j)?;
                    }
                }
            }
            b.build()
        }
        NamedGraphId::Triangle(k1, k2, k3) => {
            let mut b = GraphBuilder::new(3 + k1 + k2 + k3)?;
            b.add_edge(0, 1)?;
            b.add_edge(1, 2)?;
            b.add_edge(0, 2)?;
            let mut next = 3;
            for (anchor, len) in [(0, k1), (1, k2), (2, k3)] {
                let mut prev = anchor;
                for _ in 0..len {
                    b.add_edge(prev, next)?;
                    prev = next;
                    next += 1;
                }
            }
            b.build()
        }
        NamedGraphId::DoubleTriangle(k) => {
            let mut b = GraphBuilder::new(6 + k)?;
            // Triangles 0,1,2 and 3,4,5; a path with k inner vertices
            // from 0 to 3.
            for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)] {
                b.add_edge(u, v)?;
            }
            let mut prev = 0;
            for i in 0..k {
                b.add_edge(prev, 6 + i)?;
                prev = 6 + i;
            }
            b.add_edge(prev, 3)?;
            b.build()
        }
        NamedGraphId::CompleteMinusEdge(p) => {
            if p < 2 {
                return Err(bad("needs p >= 2"));
            }
            let mut b = GraphBuilder::new(p)?;
            for i in 0..p {
                for j in i + 1..p {
                    if (i, j) != (p - 2, p - 1) {
                        b.add_edge(i, j)?;
                    }
                }
            }
            b.build()
        }
    };
    Ok(g)
}

fn complete_block(p: usize) -> Result<Graph, GraphError> {
    let mut b = GraphBuilder::new(p)?;
    for i in 0..p {
        for j in i + 1..p {
            b.add_edge(i, j)?;
        }
    }
    Ok(b.build())
}

/// Parses the compact spec grammar used on the command line:
/// bare names (`claw`, `gem`, `w4`, ...) and parameterized forms
/// `P:<n>`, `C:<n>`, `K:<p>`, `kk:<k>,<p>`, `tri:<k1>,<k2>,<k3>`,
/// `dt:<k>`, `kme:<p>`.
pub fn parse_spec(spec: &str) -> Result<NamedGraphId, CatalogError> {
    let unknown = || CatalogError::UnknownSpec { spec: spec.to_string() };
    let lower = spec.to_lowercase();
    if let Some((head, tail)) = lower.split_once(':') {
        let nums: Vec<usize> = tail
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| unknown())?;
        return match (head, nums.as_slice()) {
            ("p", [n]) => Ok(NamedGraphId::Path(*n)),
            ("c", [n]) => Ok(NamedGraphId::Cycle(*n)),
            ("k", [p]) => Ok(NamedGraphId::Complete(*p)),
            ("kk", [k, p]) => Ok(NamedGraphId::MultiComplete { k: *k, p: *p }),
            ("tri", [a, b, c]) => Ok(NamedGraphId::Triangle(*a, *b, *c)),
            ("dt", [k]) => Ok(NamedGraphId::DoubleTriangle(*k)),
            ("kme", [p]) => Ok(NamedGraphId::CompleteMinusEdge(*p)),
            _ => Err(unknown()),
        };
    }
    match lower.as_str() {
        "claw" => Ok(NamedGraphId::Claw),
        "diamond" => Ok(NamedGraphId::Diamond),
        "paw" => Ok(NamedGraphId::Paw),
        "bull" => Ok(NamedGraphId::Bull),
        "net" => Ok(NamedGraphId::Net),
        "butterfly" => Ok(NamedGraphId::Butterfly),
        "house" => Ok(NamedGraphId::House),
        "gem" => Ok(NamedGraphId::Gem),
        "w4" => Ok(NamedGraphId::W4),
        "dart" => Ok(NamedGraphId::Dart),
        _ => Err(unknown()),
    }
}

/// `parse_spec` followed by `named_graph`.
pub fn graph_from_spec(spec: &str) -> Result<Graph, CatalogError> {
    named_graph(&parse_spec(spec)?)
}

/// The fixed-size named graphs, with their spec names; handy for tests and
/// for `--forbid` lists.
pub fn fixed_catalog() -> Vec<(String, Graph)> {
    [
        "claw",
        "diamond",
        "paw",
        "bull",
        "net",
        "butterfly",
        "house",
        "gem",
        "w4",
        "dart",
    ]
    .iter()
    .map(|name| {
        (
            name.to_string(),
            graph_from_spec(name).expect("catalog graph"),
        )
    })
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(spec: &str) -> (usize, usize) {
        let g = graph_from_spec(spec).unwrap();
        assert!(g.check_invariants());
        (g.n(), g.m())
    }

    #[test]
    fn vertex_and_edge_counts_match_definitions() {
        assert_eq!(counts("claw"), (4, 3));
        assert_eq!(counts("diamond"), (4, 5));
        assert_eq!(counts("paw"), (4, 4));
        assert_eq!(counts("bull"), (5, 5));
        assert_eq!(counts("net"), (6, 6));
        assert_eq!(counts("butterfly"), (5, 6));
        assert_eq!(counts("house"), (5, 6));
        assert_eq!(counts("gem"), (5, 7));
        assert_eq!(counts("w4"), (5, 8));
        assert_eq!(counts("dart"), (5, 6));
    }

    #[test]
    fn parameterized_families() {
        assert_eq!(counts("P:7"), (7, 6));
        assert_eq!(counts("P:1"), (1, 0));
        assert_eq!(counts("C:6"), (6, 6));
        assert_eq!(counts("K:5"), (5, 10));
        assert_eq!(counts("K:1"), (1, 0));
        assert_eq!(counts("kk:2,3"), (6, 6));
        assert_eq!(counts("kk:3,1"), (3, 0));
        assert_eq!(counts("tri:1,1,1"), (6, 6));
        assert_eq!(counts("tri:3,2,1"), (9, 9));
        assert_eq!(counts("dt:0"), (6, 7));
        assert_eq!(counts("dt:2"), (8, 9));
        assert_eq!(counts("kme:5"), (5, 9));
    }

    #[test]
    fn triangle_family_matches_named_graphs() {
        // The net, bull and paw are the (1,1,1)-, (1,1,0)- and
        // (1,0,0)-triangles.
        assert_eq!(
            graph_from_spec("tri:1,1,1").unwrap(),
            graph_from_spec("net").unwrap()
        );
        let bull = graph_from_spec("bull").unwrap();
        let tri110 = graph_from_spec("tri:1,1,0").unwrap();
        assert_eq!((bull.n(), bull.m()), (tri110.n(), tri110.m()));
    }

    #[test]
    fn kme_leaves_highest_pair_nonadjacent() {
        let g = graph_from_spec("kme:6").unwrap();
        assert!(!g.has_edge(4, 5));
        assert_eq!(g.degree(4), 4);
        assert_eq!(g.degree(0), 5);
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(named_graph(&NamedGraphId::Cycle(2)).is_err());
        assert!(named_graph(&NamedGraphId::Path(0)).is_err());
        assert!(named_graph(&NamedGraphId::Complete(0)).is_err());
        assert!(named_graph(&NamedGraphId::CompleteMinusEdge(1)).is_err());
        assert!(parse_spec("frobnicator").is_err());
        assert!(parse_spec("tri:1,2").is_err());
    }
}
