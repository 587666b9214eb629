//! True twins (`N[u] = N[v]`), the twin quotient and twin planting.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// The equivalence classes of the true-twin relation.
///
/// Classes are sorted ascending internally and ordered by their smallest
/// member, which is also the class representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl TwinPartition {
    pub fn of(g: &Graph) -> Self {
        let mut by_nbhd: HashMap<&VertexSet, usize> = HashMap::with_capacity(g.vertex_count());
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = Vec::with_capacity(g.vertex_count());
        // Vertices are visited in ascending order, so classes come out sorted
        // and ordered by representative without a second pass.
        for v in g.vertices() {
            let next = classes.len();
            let idx = *by_nbhd.entry(g.closed(v)).or_insert(next);
            if idx == next {
                classes.push(Vec::new());
            }
            classes[idx].push(v);
            class_of.push(idx);
        }
        Self { classes, class_of }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn class_size_of(&self, v: usize) -> usize {
        self.classes[self.class_of[v]].len()
    }

    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }

    pub fn are_twins(&self, u: usize, v: usize) -> bool {
        self.class_of[u] == self.class_of[v]
    }

    /// Number of classes with at least two vertices.
    pub fn nontrivial_count(&self) -> usize {
        self.classes.iter().filter(|c| c.len() >= 2).count()
    }

    /// Size of the largest class.
    pub fn max_class_size(&self) -> usize {
        self.classes.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> PartitionJson<'_> {
        PartitionJson {
            classes: &self.classes,
            t: self.nontrivial_count(),
            big_t: self.max_class_size(),
        }
    }
}

/// Serialized form `{"classes":[[...]],"t":..,"T":..}`.
#[derive(Debug, Serialize)]
pub struct PartitionJson<'a> {
    pub classes: &'a [Vec<usize>],
    pub t: usize,
    #[serde(rename = "T")]
    pub big_t: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientResult {
    pub quotient: Graph,
    /// Quotient vertex `i` stands for class `i`; this is its smallest member.
    pub representative: Vec<usize>,
    /// Original vertex to quotient vertex.
    pub projection: Vec<usize>,
}

/// Collapses every twin class into one vertex.
pub fn quotient(g: &Graph) -> QuotientResult {
    quotient_with(g, &TwinPartition::of(g))
}

/// Quotient for an already computed partition of `g`.
pub fn quotient_with(g: &Graph, partition: &TwinPartition) -> QuotientResult {
    let representative: Vec<usize> = (0..partition.class_count())
        .map(|c| partition.representative(c))
        .collect();
    let mut edges = Vec::new();
    for (a, &ra) in representative.iter().enumerate() {
        for (b, &rb) in representative.iter().enumerate().skip(a + 1) {
            let adjacent = g.has_edge(ra, rb);
            debug_assert!(
                partition.classes()[a]
                    .iter()
                    .all(|&x| partition.classes()[b]
                        .iter()
                        .all(|&y| g.has_edge(x, y) == adjacent)),
                "twin classes {a} and {b} are partially adjacent"
            );
            if adjacent {
                edges.push((a, b));
            }
        }
    }
    let quotient = Graph::new(representative.len(), edges).expect("quotient of a valid graph");
    QuotientResult {
        quotient,
        representative,
        projection: (0..g.vertex_count())
            .map(|v| partition.class_of(v))
            .collect(),
    }
}

/// Appends `m` new vertices, each a true twin of `v`. Original indices are
/// kept; the copies get indices `n..n+m`.
pub fn add_twins(g: &Graph, v: usize, m: usize) -> Result<Graph> {
    let n = g.vertex_count();
    if v >= n {
        return Err(Error::VertexOutOfRange { v, n });
    }
    let copies = n..n + m;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for w in copies.clone() {
        edges.extend(g.closed(v).iter().map(|u| (u, w)));
        edges.extend((n..w).map(|x| (x, w)));
    }
    Graph::new(n + m, edges)
}

pub fn is_twin_free(g: &Graph) -> bool {
    TwinPartition::of(g).nontrivial_count() == 0
}
