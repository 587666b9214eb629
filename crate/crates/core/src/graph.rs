//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Every vertex keeps its closed neighborhood `N[v] = {v} ∪ adj(v)` as a dense
//! bitset, so the comparisons that dominate twin detection and signature checks
//! are word-parallel set equalities.

use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A dense set of vertices of one graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(FixedBitSet);

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        Self(FixedBitSet::with_capacity(n))
    }

    pub fn from_vertices(n: usize, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set = Self::empty(n);
        for v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            set.0.insert(v);
        }
        Ok(set)
    }

    /// Size of the universe this set lives in.
    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(v)
    }

    pub fn insert(&mut self, v: usize) {
        self.0.insert(v);
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.0.clone();
        out.intersect_with(&other.0);
        VertexSet(out)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    neighbors: Vec<Vec<usize>>,
    closed: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges (in either orientation)
    /// collapse; self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut closed: Vec<VertexSet> = (0..n)
            .map(|v| {
                let mut s = VertexSet::empty(n);
                s.insert(v);
                s
            })
            .collect();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            closed[u].insert(v);
            closed[v].insert(u);
        }
        let neighbors: Vec<Vec<usize>> = closed
            .iter()
            .enumerate()
            .map(|(v, s)| s.iter().filter(|&u| u != v).collect())
            .collect();
        let edge_count = neighbors.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Self {
            neighbors,
            closed,
            edge_count,
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                v,
                n: self.vertex_count(),
            })
        }
    }

    /// Sorted open neighborhood of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.closed[u].contains(v)
    }

    /// `N[v]`, checked.
    pub fn closed_neighborhood(&self, v: usize) -> Result<&VertexSet> {
        self.check_vertex(v)?;
        Ok(&self.closed[v])
    }

    /// `N[v]` without the range check. Panics if `v` is out of range.
    pub fn closed(&self, v: usize) -> &VertexSet {
        &self.closed[v]
    }

    /// Edges with the smaller endpoint first, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// `N[v]` as a 64-bit mask. Only meaningful when `n <= 64`.
    pub(crate) fn closed_mask(&self, v: usize) -> u64 {
        self.closed[v].iter().fold(0u64, |m, u| m | (1u64 << u))
    }

    /// Canonical edge-list text: header `n m`, then one `u v` line per edge.
    /// No trailing newline.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}", self.vertex_count(), self.edge_count());
        for (u, v) in self.edges() {
            let _ = write!(out, "\n{u} {v}");
        }
        out
    }

    /// Parses the edge-list format: first significant line `n m`, then `m`
    /// lines `u v` (0-based). Lines starting with `#` and blank lines are ignored.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = significant_lines(text, |l| l.starts_with('#'));
        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header `n m`".into(),
        })?;
        let [n, m] = parse_fields::<2>(header, header_line)?;
        if n == 0 {
            return Err(Error::Parse {
                line: header_line,
                message: "vertex count must be at least 1".into(),
            });
        }
        let mut edges = Vec::with_capacity(m);
        for (line, body) in lines {
            let [u, v] = parse_fields::<2>(body, line)?;
            check_edge(u, v, n, line)?;
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: header_line,
                message: format!("header declares {m} edges but {} were listed", edges.len()),
            });
        }
        Graph::new(n, edges)
    }

    /// Parses DIMACS `.col` text: `c` comments, a `p edge n m` header and
    /// 1-based `e u v` lines, converted to 0-based indices.
    pub fn from_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut edges = Vec::new();
        for (line, body) in significant_lines(text, |l| l.starts_with('c')) {
            let mut tokens = body.split_whitespace();
            match tokens.next() {
                Some("p") => {
                    if header.is_some() {
                        return Err(parse_error(line, "duplicate `p` line"));
                    }
                    let _format = tokens
                        .next()
                        .ok_or_else(|| parse_error(line, "expected `p edge n m`"))?;
                    let rest: Vec<&str> = tokens.collect();
                    let [n, m] = parse_fields::<2>(&rest.join(" "), line)?;
                    if n == 0 {
                        return Err(parse_error(line, "vertex count must be at least 1"));
                    }
                    header = Some((line, n, m));
                }
                Some("e") => {
                    let (_, n, _) =
                        header.ok_or_else(|| parse_error(line, "edge before `p` line"))?;
                    let rest: Vec<&str> = tokens.collect();
                    let [u, v] = parse_fields::<2>(&rest.join(" "), line)?;
                    if u == 0 || v == 0 {
                        return Err(parse_error(line, "DIMACS vertices are 1-based"));
                    }
                    check_edge(u - 1, v - 1, n, line)?;
                    edges.push((u - 1, v - 1));
                }
                _ => return Err(parse_error(line, "expected a `c`, `p` or `e` line")),
            }
        }
        let (line, n, m) = header.ok_or_else(|| parse_error(1, "missing `p edge n m` line"))?;
        if edges.len() != m {
            return Err(parse_error(
                line,
                &format!("header declares {m} edges but {} were listed", edges.len()),
            ));
        }
        Graph::new(n, edges)
    }

    /// Parses either format, picking DIMACS when the first significant line
    /// starts with `p` or `c`.
    pub fn parse(text: &str) -> Result<Self> {
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'));
        match first {
            Some(l) if l.starts_with('p') || l.starts_with('c') => Self::from_dimacs(text),
            _ => Self::from_edge_list(text),
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn parse_error(line: usize, message: &str) -> Error {
    Error::Parse {
        line,
        message: message.to_string(),
    }
}

fn significant_lines(
    text: &str,
    is_comment: impl Fn(&str) -> bool,
) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(move |(_, l)| !l.is_empty() && !is_comment(l))
}

fn parse_fields<const K: usize>(body: &str, line: usize) -> Result<[usize; K]> {
    let tokens: Vec<&str> = body.split_whitespace().collect();
    if tokens.len() != K {
        return Err(parse_error(
            line,
            &format!("expected {K} integers, found {} fields", tokens.len()),
        ));
    }
    let mut out = [0usize; K];
    for (slot, tok) in out.iter_mut().zip(&tokens) {
        *slot = tok
            .parse()
            .map_err(|_| parse_error(line, &format!("`{tok}` is not a non-negative integer")))?;
    }
    Ok(out)
}

fn check_edge(u: usize, v: usize, n: usize, line: usize) -> Result<()> {
    if u >= n || v >= n {
        return Err(parse_error(
            line,
            &format!("index out of range: ({u}, {v}) with n = {n}"),
        ));
    }
    if u == v {
        return Err(parse_error(line, &format!("self-loop on vertex {u}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_path_and_single_vertex() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(p3.neighbors(1), &[0, 2]);
        let k1 = Graph::new(1, []).unwrap();
        assert_eq!(k1.vertex_count(), 1);
        assert_eq!(k1.edge_count(), 0);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let a = Graph::new(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(a, Graph::path(3).unwrap());
    }

    #[test]
    fn rejects_loops_and_bad_endpoints() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(Error::EndpointOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(Graph::new(0, []), Err(Error::EmptyGraph));
    }

    #[test]
    fn closed_neighborhoods() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.closed_neighborhood(1).unwrap().to_vec(), vec![0, 1, 2]);
        let g = Graph::new(2, []).unwrap();
        assert_eq!(g.closed_neighborhood(1).unwrap().to_vec(), vec![1]);
        let k4 = Graph::complete(4).unwrap();
        for v in 0..4 {
            assert_eq!(
                k4.closed_neighborhood(v).unwrap().to_vec(),
                vec![0, 1, 2, 3]
            );
        }
        assert!(matches!(
            p3.closed_neighborhood(3),
            Err(Error::VertexOutOfRange { v: 3, n: 3 })
        ));
    }

    #[test]
    fn edge_list_parsing() {
        assert_eq!(
            Graph::from_edge_list("3 2\n0 1\n1 2").unwrap(),
            Graph::path(3).unwrap()
        );
        assert_eq!(Graph::from_edge_list("1 0").unwrap().vertex_count(), 1);
        match Graph::from_edge_list("3 1\n0 3") {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 2);
                assert!(message.contains("out of range"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn edge_list_comments_and_errors() {
        let g = Graph::from_edge_list("# a path\n3 2\n# middle\n0 1\n\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(3).unwrap());
        assert!(matches!(
            Graph::from_edge_list("3 2\n0 1"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("3 1\n0 x"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("3 1\n0 1 2"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("3 1\n2 2"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list(""),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn edge_list_writing() {
        assert_eq!(Graph::path(3).unwrap().to_edge_list(), "3 2\n0 1\n1 2");
        assert_eq!(Graph::complete(1).unwrap().to_edge_list(), "1 0");
        assert_eq!(
            Graph::complete(3).unwrap().to_edge_list(),
            "3 3\n0 1\n0 2\n1 2"
        );
    }

    #[test]
    fn dimacs_is_one_based() {
        let text = "c triangle minus an edge\np edge 3 2\ne 1 2\ne 2 3\n";
        assert_eq!(Graph::from_dimacs(text).unwrap(), Graph::path(3).unwrap());
        assert_eq!(Graph::parse(text).unwrap(), Graph::path(3).unwrap());
        assert!(Graph::from_dimacs("p edge 3 1\ne 0 1").is_err());
        assert!(Graph::from_dimacs("p edge 3 1\ne 1 4").is_err());
        assert!(Graph::from_dimacs("e 1 2").is_err());
    }

    #[test]
    fn closed_mask_matches_set() {
        let g = Graph::path(4).unwrap();
        assert_eq!(g.closed_mask(1), 0b0111);
        assert_eq!(g.closed_mask(3), 0b1100);
    }
}
