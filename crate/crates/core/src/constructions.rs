//! Generators for the split-graph extremal families and seeded random graphs.
//!
//! Index layouts are fixed so that fixtures and certificates stay stable:
//!
//! * `H_p`: `k_0..k_p` at `0..=p`, then `s_1..s_p` at `p+1..=2p`.
//! * `H^ext` for parameter `a`: `k_E` at index `E` (the subset `E ⊆ {1..a}`
//!   as a bitmask, bit `i-1` for element `i`), then the vertices `s_{E,i}`
//!   sorted by `(E, i)`.
//! * `H_p^(T,t)`: the `H_p` layout, then the `T-1` copies of `k_1`, the
//!   copies of `k_2`, and so on up to `k_t`.
//!
//! Random graphs use ChaCha8 seeded through `seed_from_u64`, which gives the
//! same stream on every platform.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::coloring::{Coloring, Variant};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::twins::{add_twins, quotient};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum VertexLabel {
    /// `k_i` of `H_p`.
    K(usize),
    /// `s_i` of `H_p`.
    S(usize),
    /// `k_E`, with `E` as a bitmask.
    KSet(u32),
    /// `s_{E,i}`.
    SSet { set: u32, i: usize },
    /// The `copy`-th planted twin of another vertex.
    TwinCopy { of: Box<VertexLabel>, copy: usize },
}

fn fmt_set(f: &mut fmt::Formatter<'_>, set: u32) -> fmt::Result {
    let members: Vec<String> = (0..32)
        .filter(|b| set >> b & 1 == 1)
        .map(|b| (b + 1).to_string())
        .collect();
    write!(f, "{{{}}}", members.join(","))
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::K(i) => write!(f, "k_{i}"),
            VertexLabel::S(i) => write!(f, "s_{i}"),
            VertexLabel::KSet(set) => {
                f.write_str("k_")?;
                fmt_set(f, *set)
            }
            VertexLabel::SSet { set, i } => {
                f.write_str("s_(")?;
                fmt_set(f, *set)?;
                write!(f, ",{i})")
            }
            VertexLabel::TwinCopy { of, copy } => write!(f, "{of}#{copy}"),
        }
    }
}

impl Serialize for VertexLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Family {
    Hp {
        p: usize,
    },
    Hext {
        a: usize,
    },
    Htt {
        p: usize,
        #[serde(rename = "T")]
        big_t: usize,
        t: usize,
    },
}

/// A generated graph with a role label per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledGraph {
    #[serde(skip)]
    pub graph: Graph,
    #[serde(flatten)]
    pub family: Family,
    pub labels: Vec<VertexLabel>,
}

impl LabeledGraph {
    pub fn index_of(&self, label: &VertexLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// JSON label sidecar: the family parameters plus one label per vertex.
    pub fn labels_json(&self) -> String {
        serde_json::to_string(self).expect("labels serialize")
    }
}

/// The split graph `H_p`: clique `k_0..k_p`, stable set `s_1..s_p`, and the
/// pendant edges `s_i k_i`.
pub fn gen_hp(p: usize) -> Result<LabeledGraph> {
    if p < 1 {
        return Err(Error::InvalidParameter("H_p needs p >= 1".into()));
    }
    let k = |i: usize| i;
    let s = |i: usize| p + i;
    let mut edges = Vec::new();
    for i in 0..=p {
        for j in i + 1..=p {
            edges.push((k(i), k(j)));
        }
    }
    edges.extend((1..=p).map(|i| (k(i), s(i))));
    let labels = (0..=p)
        .map(VertexLabel::K)
        .chain((1..=p).map(VertexLabel::S))
        .collect();
    Ok(LabeledGraph {
        graph: Graph::new(2 * p + 1, edges)?,
        family: Family::Hp { p },
        labels,
    })
}

/// The extension of `H_{2^a - 1}` in which every `s`-vertex is blown up into a
/// clique of twins: one `k_E` per subset `E ⊆ {1..a}`, one `s_{E,i}` per
/// `i ∈ E`, with each `{k_E} ∪ {s_{E,i}}` a clique.
pub fn gen_hext(a: usize) -> Result<LabeledGraph> {
    if a < 1 {
        return Err(Error::InvalidParameter("H^ext needs a >= 1".into()));
    }
    if a > 16 {
        return Err(Error::InvalidParameter(
            "H^ext is limited to a <= 16".into(),
        ));
    }
    let subsets = 1usize << a;
    let mut labels: Vec<VertexLabel> = (0..subsets as u32).map(VertexLabel::KSet).collect();
    let mut edges = Vec::new();
    for e in 0..subsets {
        for f in e + 1..subsets {
            edges.push((e, f));
        }
    }
    for set in 0..subsets as u32 {
        let first = labels.len();
        let members: Vec<usize> = (1..=a).filter(|i| set >> (i - 1) & 1 == 1).collect();
        for &i in &members {
            labels.push(VertexLabel::SSet { set, i });
        }
        let group: Vec<usize> = std::iter::once(set as usize)
            .chain(first..labels.len())
            .collect();
        for (x, &u) in group.iter().enumerate() {
            for &v in &group[x + 1..] {
                edges.push((u, v));
            }
        }
    }
    Ok(LabeledGraph {
        graph: Graph::new(labels.len(), edges)?,
        family: Family::Hext { a },
        labels,
    })
}

/// `H_p` with `big_t - 1` twins planted on each of `k_1..k_t`.
pub fn gen_htt(p: usize, big_t: usize, t: usize) -> Result<LabeledGraph> {
    if !(p >= t && t >= 1 && big_t >= 1) {
        return Err(Error::InvalidParameter(format!(
            "H_p^(T,t) needs p >= t >= 1 and T >= 1, got p={p}, T={big_t}, t={t}"
        )));
    }
    let base = gen_hp(p)?;
    let mut graph = base.graph;
    let mut labels = base.labels;
    for i in 1..=t {
        graph = add_twins(&graph, i, big_t - 1)?;
        labels.extend((1..big_t).map(|copy| VertexLabel::TwinCopy {
            of: Box::new(VertexLabel::K(i)),
            copy,
        }));
    }
    Ok(LabeledGraph {
        graph,
        family: Family::Htt { p, big_t, t },
        labels,
    })
}

/// The colorings used to certify the upper bounds for `H_p` and `H^ext`.
///
/// * `H_p`, id: `s_i -> i`, `k_i -> p+1`, `k_0 -> p+2`.
/// * `H_p`, lid: all distinct; `s_i -> i`, `k_i -> p+i`, `k_0 -> 2p+1`.
/// * `H^ext`, id: `s_{E,i} -> i`, `k_E -> a+1`, `k_∅ -> a+2`.
/// * `H^ext`, lid: `s_{E,i} -> i`, `k_E -> a+1+E` (distinct on the clique).
pub fn canonical_coloring(lg: &LabeledGraph, variant: Variant) -> Result<Coloring> {
    let unsupported = || {
        Error::Unsupported(format!(
            "no canonical {variant} coloring for {:?}",
            lg.family
        ))
    };
    let colors: Vec<usize> = match (lg.family, variant) {
        (Family::Hp { p }, Variant::Id) => lg
            .labels
            .iter()
            .map(|l| match l {
                VertexLabel::K(0) => Ok(p + 2),
                VertexLabel::K(_) => Ok(p + 1),
                VertexLabel::S(i) => Ok(*i),
                _ => Err(unsupported()),
            })
            .collect::<Result<_>>()?,
        (Family::Hp { p }, Variant::Lid) => lg
            .labels
            .iter()
            .map(|l| match l {
                VertexLabel::K(0) => Ok(2 * p + 1),
                VertexLabel::K(i) => Ok(p + i),
                VertexLabel::S(i) => Ok(*i),
                _ => Err(unsupported()),
            })
            .collect::<Result<_>>()?,
        (Family::Hext { a }, Variant::Id) => lg
            .labels
            .iter()
            .map(|l| match l {
                VertexLabel::KSet(0) => Ok(a + 2),
                VertexLabel::KSet(_) => Ok(a + 1),
                VertexLabel::SSet { i, .. } => Ok(*i),
                _ => Err(unsupported()),
            })
            .collect::<Result<_>>()?,
        (Family::Hext { a }, Variant::Lid) => lg
            .labels
            .iter()
            .map(|l| match l {
                VertexLabel::KSet(set) => Ok(a + 1 + *set as usize),
                VertexLabel::SSet { i, .. } => Ok(*i),
                _ => Err(unsupported()),
            })
            .collect::<Result<_>>()?,
        _ => return Err(unsupported()),
    };
    Coloring::new(colors.into_iter().map(|c| c as u32).collect())
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn sample_edges(r: &mut ChaCha8Rng, n: usize, prob: f64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.random::<f64>() < prob {
                edges.push((u, v));
            }
        }
    }
    edges
}

fn check_probability(prob: f64) -> Result<()> {
    if (0.0..=1.0).contains(&prob) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "edge probability {prob} is outside [0, 1]"
        )))
    }
}

/// `G(n, prob)`: each pair `u < v`, in lexicographic order, is an edge when
/// the next uniform draw in `[0, 1)` is below `prob`.
pub fn gen_random(n: usize, prob: f64, seed: u64) -> Result<Graph> {
    check_probability(prob)?;
    let mut r = rng(seed);
    let edges = sample_edges(&mut r, n, prob);
    Graph::new(n, edges)
}

/// Shape of a random graph with planted twin classes.
#[derive(Debug, Clone, PartialEq)]
pub struct PlantSpec {
    /// Hard cap on the final vertex count.
    pub max_vertices: usize,
    /// Range for the size of the random base graph (before quotienting).
    pub base_vertices: (usize, usize),
    pub edge_probability: f64,
    /// Chance that a base vertex receives twins.
    pub plant_probability: f64,
    /// Largest twin class that planting may create.
    pub max_class_size: usize,
}

impl PlantSpec {
    pub fn with_max_vertices(max_vertices: usize) -> Self {
        Self {
            max_vertices,
            base_vertices: (2, max_vertices.clamp(2, 6)),
            edge_probability: 0.5,
            plant_probability: 0.5,
            max_class_size: 3,
        }
    }
}

/// A random graph whose twin classes are planted: a random base graph is
/// reduced to its twin-free quotient, then each vertex, with probability
/// `plant_probability`, gains between 1 and `max_class_size - 1` twins while
/// the vertex budget allows. Planting never merges existing classes, so class
/// sizes stay within `max_class_size`.
pub fn gen_planted(spec: &PlantSpec, seed: u64) -> Result<Graph> {
    check_probability(spec.edge_probability)?;
    check_probability(spec.plant_probability)?;
    let (lo, hi) = spec.base_vertices;
    if lo < 1 || lo > hi || spec.max_vertices < 1 || spec.max_class_size < 1 {
        return Err(Error::InvalidParameter(format!("bad plant spec {spec:?}")));
    }
    let mut r = rng(seed);
    let base_n = r.random_range(lo..=hi).min(spec.max_vertices);
    let base = Graph::new(base_n, sample_edges(&mut r, base_n, spec.edge_probability))?;
    let mut g = quotient(&base).quotient;
    let originals = g.vertex_count();
    for v in 0..originals {
        if spec.max_class_size < 2 || !r.random_bool(spec.plant_probability) {
            continue;
        }
        let want = r.random_range(1..spec.max_class_size);
        let room = spec.max_vertices - g.vertex_count();
        g = add_twins(&g, v, want.min(room))?;
    }
    Ok(g)
}
