//! Relating optima of a graph to those of its twin quotient.
//!
//! With `Q` the twin quotient of `G`, `t` the number of twin classes of size at
//! least two and `T` the largest class size:
//!
//! ```text
//! χ_rlid(Q) - t <= χ_rlid(G) <= χ_rlid(Q)
//! χ_id(Q)   - t <= χ_id(G)   <= χ_id(Q)
//! χ_lid(Q)  - t <= χ_lid(G)  <= χ_lid(Q) + (T - 1) t
//! ```
//!
//! The lifts and extensions below are the constructive transfers behind these
//! inequalities; each one validates its input and produces a coloring that the
//! checkers accept.

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{is_valid_coloring, Coloring, Variant};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::{chi, min_identifying_code, weighted_optimum, SolverConfig};
use crate::twins::{quotient_with, TwinPartition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub variant: Variant,
    pub chi_g: usize,
    pub chi_q: usize,
    pub t: usize,
    #[serde(rename = "T")]
    pub big_t: usize,
    pub lower: i64,
    pub upper: i64,
    pub lower_tight: bool,
    pub upper_tight: bool,
    /// `lower <= chi_g <= upper`.
    pub satisfied: bool,
}

impl BoundsReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// `(lower, upper)` on `χ(G)` given `χ(Q)`, `t` and `T`.
pub fn twin_bounds(variant: Variant, chi_q: usize, t: usize, big_t: usize) -> (i64, i64) {
    let (chi_q, t, big_t) = (chi_q as i64, t as i64, big_t as i64);
    let lower = chi_q - t;
    let upper = match variant {
        Variant::Id | Variant::Rlid => chi_q,
        Variant::Lid => chi_q + (big_t - 1) * t,
    };
    (lower, upper)
}

/// Solves `variant` exactly on `g` and its quotient and evaluates the bounds.
pub fn verify_bounds(g: &Graph, variant: Variant, config: &SolverConfig) -> Result<BoundsReport> {
    let partition = TwinPartition::of(g);
    let q = quotient_with(g, &partition).quotient;
    let chi_g = chi(g, variant, config)?.optimum;
    let chi_q = chi(&q, variant, config)?.optimum;
    let t = partition.nontrivial_count();
    let big_t = partition.max_class_size();
    let (lower, upper) = twin_bounds(variant, chi_q, t, big_t);
    let value = chi_g as i64;
    Ok(BoundsReport {
        variant,
        chi_g,
        chi_q,
        t,
        big_t,
        lower,
        upper,
        lower_tight: value == lower,
        upper_tight: value == upper,
        satisfied: lower <= value && value <= upper,
    })
}

/// Runs [`verify_bounds`] for every graph and variant on up to `jobs` worker
/// threads. Output order is graph-major, variant-minor, independent of `jobs`.
pub fn verify_corpus(
    graphs: &[Graph],
    variants: &[Variant],
    config: &SolverConfig,
    jobs: usize,
) -> Result<Vec<BoundsReport>> {
    let tasks: Vec<(&Graph, Variant)> = graphs
        .iter()
        .flat_map(|g| variants.iter().map(move |&v| (g, v)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    pool.install(|| {
        tasks
            .par_iter()
            .map(|&(g, v)| verify_bounds(g, v, config))
            .collect()
    })
}

fn require_valid(g: &Graph, c: &Coloring, variant: Variant) -> Result<()> {
    if is_valid_coloring(g, c, variant)? {
        Ok(())
    } else {
        let violations =
            crate::coloring::check_coloring(g, c, variant, crate::coloring::CheckMode::Exhaustive)?
                .violations
                .len();
        Err(Error::InvalidColoring {
            variant: variant.name(),
            violations,
        })
    }
}

/// Gives every vertex of `g` the color of its class in a coloring of the
/// quotient. Valid for id and rlid; palette unchanged.
pub fn lift_shared(
    quotient_coloring: &Coloring,
    g: &Graph,
    partition: &TwinPartition,
    variant: Variant,
) -> Result<Coloring> {
    let q = quotient_with(g, partition).quotient;
    require_valid(&q, quotient_coloring, variant)?;
    Coloring::new(
        g.vertices()
            .map(|v| quotient_coloring.color(partition.class_of(v)))
            .collect(),
    )
}

/// Identifying coloring of `g` from one of its quotient (twins share colors).
pub fn lift_identifying(
    quotient_coloring: &Coloring,
    g: &Graph,
    partition: &TwinPartition,
) -> Result<Coloring> {
    lift_shared(quotient_coloring, g, partition, Variant::Id)
}

/// lid-coloring of `g` from one of its quotient: representatives keep their
/// class color and every other twin gets its own fresh color, allocated
/// above the input's largest color in ascending vertex order.
pub fn lift_lid(
    quotient_coloring: &Coloring,
    g: &Graph,
    partition: &TwinPartition,
) -> Result<Coloring> {
    let q = quotient_with(g, partition).quotient;
    require_valid(&q, quotient_coloring, Variant::Lid)?;
    let mut next = quotient_coloring.max_color();
    let colors = g
        .vertices()
        .map(|v| {
            let class = partition.class_of(v);
            if partition.representative(class) == v {
                quotient_coloring.color(class)
            } else {
                next += 1;
                next
            }
        })
        .collect();
    Coloring::new(colors)
}

/// Coloring of the quotient from a `variant` coloring of `g`: singleton
/// classes keep their color, and each class with twins gets a fresh color,
/// allocated above the input's largest color in ascending representative order.
pub fn extend_to_quotient(
    g_coloring: &Coloring,
    g: &Graph,
    partition: &TwinPartition,
    variant: Variant,
) -> Result<Coloring> {
    require_valid(g, g_coloring, variant)?;
    let mut next = g_coloring.max_color();
    let colors = partition
        .classes()
        .iter()
        .map(|members| match members.as_slice() {
            [v] => g_coloring.color(*v),
            _ => {
                next += 1;
                next
            }
        })
        .collect();
    Coloring::new(colors)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub equal: bool,
    #[serde(rename = "graph")]
    pub on_graph: usize,
    #[serde(rename = "quotient")]
    pub on_quotient: usize,
}

impl Comparison {
    fn new(on_graph: usize, on_quotient: usize) -> Self {
        Self {
            equal: on_graph == on_quotient,
            on_graph,
            on_quotient,
        }
    }
}

/// Compares minimum twin-aware identifying codes of `g` and its quotient.
pub fn verify_idcode_equality(g: &Graph, config: &SolverConfig) -> Result<Comparison> {
    let q = quotient_with(g, &TwinPartition::of(g)).quotient;
    let on_graph = min_identifying_code(g, config)?.optimum;
    let on_quotient = min_identifying_code(&q, config)?.optimum;
    Ok(Comparison::new(on_graph, on_quotient))
}

/// Quotient capacities `w'(u) = w(u) + |class(u)| - 1`, with `w(u)` read at
/// the class representative.
pub fn quotient_weights(partition: &TwinPartition, weights: &[usize]) -> Vec<usize> {
    (0..partition.class_count())
        .map(|c| {
            let rep = partition.representative(c);
            weights[rep] + partition.class_size_of(rep) - 1
        })
        .collect()
}

/// Compares the weighted optimum of `(g, w)` with that of the quotient under
/// [`quotient_weights`].
pub fn verify_weighted_equivalence(
    g: &Graph,
    weights: &[usize],
    config: &SolverConfig,
) -> Result<Comparison> {
    if weights.len() != g.vertex_count() {
        return Err(Error::SizeMismatch {
            expected: g.vertex_count(),
            got: weights.len(),
        });
    }
    let partition = TwinPartition::of(g);
    let q = quotient_with(g, &partition).quotient;
    let on_graph = weighted_optimum(g, weights, config)?.optimum;
    let on_quotient = weighted_optimum(&q, &quotient_weights(&partition, weights), config)?.optimum;
    Ok(Comparison::new(on_graph, on_quotient))
}
