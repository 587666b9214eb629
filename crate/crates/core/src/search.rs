//! Exact optimum search with witnesses and exhaustive certificates.
//!
//! Single-color variants enumerate colorings as restricted growth strings over
//! a fixed vertex order (descending degree, ties by index): the first vertex
//! takes color 0 and every later vertex takes either a color already in use or
//! the next unused one. This keeps exactly one coloring per color permutation.
//! For each target palette size `k`, ascending from a sound lower bound, the
//! search asks for a string with exactly `k` blocks; the first feasible `k` is
//! the optimum and every smaller `k` down to the bound has been refuted.
//!
//! A partial coloring is pruned as soon as two relevant vertices whose closed
//! neighborhoods are fully colored share a signature, or (lid) an edge is
//! monochromatic. Both conditions are final once they occur.
//!
//! Masks are 64-bit, so every search is limited to 64 vertices regardless of
//! the configurable guards.

use serde::Serialize;

use crate::coloring::{Coloring, SetColoring, Variant};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::twins::TwinPartition;

const MASK_LIMIT: usize = 64;

/// Size guards for the exhaustive searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    pub max_coloring_vertices: usize,
    pub max_code_vertices: usize,
    pub max_weighted_vertices: usize,
    /// Ignore the guards above (the 64-vertex mask limit still applies).
    pub force: bool,
    /// Identifying codes must also dominate (`N[v] ∩ C ≠ ∅` for all v).
    pub strict_codes: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            max_coloring_vertices: 14,
            max_code_vertices: 20,
            max_weighted_vertices: 8,
            force: false,
            strict_codes: false,
        }
    }
}

impl SolverConfig {
    pub fn forced() -> Self {
        Self {
            force: true,
            ..Self::default()
        }
    }

    fn guard(&self, what: &'static str, n: usize, limit: usize) -> Result<()> {
        if n > MASK_LIMIT {
            return Err(Error::InstanceTooLarge {
                what,
                n,
                limit: MASK_LIMIT,
            });
        }
        if !self.force && n > limit {
            return Err(Error::InstanceTooLarge { what, n, limit });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Id,
    Lid,
    Rlid,
    Idcode,
    Weighted,
}

impl From<Variant> for Problem {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Id => Problem::Id,
            Variant::Lid => Problem::Lid,
            Variant::Rlid => Problem::Rlid,
        }
    }
}

/// How optimality of the reported value was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Proof {
    /// Every size from the lower bound up to `optimum - 1` was refuted.
    ExhaustiveBelow,
    /// The optimum equals the sound lower bound.
    LowerBoundMatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Coloring(Coloring),
    SetColoring(SetColoring),
    Code(VertexSet),
}

impl Witness {
    pub fn as_coloring(&self) -> Option<&Coloring> {
        match self {
            Witness::Coloring(c) => Some(c),
            _ => None,
        }
    }

    pub fn as_set_coloring(&self) -> Option<&SetColoring> {
        match self {
            Witness::SetColoring(c) => Some(c),
            _ => None,
        }
    }

    pub fn as_code(&self) -> Option<&VertexSet> {
        match self {
            Witness::Code(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub variant: Problem,
    pub optimum: usize,
    pub witness: Witness,
    #[serde(rename = "nodes")]
    pub nodes_explored: u64,
    pub proof: Proof,
}

impl SolveReport {
    /// The witness as a single-color coloring. Panics for code and weighted reports.
    pub fn coloring(&self) -> &Coloring {
        self.witness
            .as_coloring()
            .expect("report does not carry a coloring")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn proof_for(optimum: usize, lower: usize) -> Proof {
    if optimum == lower {
        Proof::LowerBoundMatch
    } else {
        Proof::ExhaustiveBelow
    }
}

/// Sound lower bound on the optimum: 1 for id and rlid, and for lid the size
/// of a greedily grown clique, since a proper coloring needs that many colors.
pub fn lower_bound(g: &Graph, variant: Variant) -> usize {
    match variant {
        Variant::Id | Variant::Rlid => 1,
        Variant::Lid => greedy_clique(g).len(),
    }
}

/// Grows a clique from every start vertex, adding candidates by descending
/// degree, and keeps the largest.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let order = degree_order(g);
    let mut best: Vec<usize> = Vec::new();
    for &start in &order {
        let mut clique = vec![start];
        for &v in &order {
            if v != start && clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// Descending degree, ties by index.
pub fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// Precomputed data shared by the coloring and set-coloring searches.
struct Frame {
    n: usize,
    order: Vec<usize>,
    closed: Vec<u64>,
    adj: Vec<u64>,
    class_of: Vec<usize>,
    /// `completes_at[i]`: vertices whose closed neighborhood is fully
    /// assigned once `order[i]` is.
    completes_at: Vec<Vec<usize>>,
}

impl Frame {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let order = degree_order(g);
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let closed: Vec<u64> = g.vertices().map(|v| g.closed_mask(v)).collect();
        let adj = closed
            .iter()
            .enumerate()
            .map(|(v, m)| m & !(1u64 << v))
            .collect();
        let mut completes_at = vec![Vec::new(); n];
        for v in g.vertices() {
            let last = g.closed(v).iter().map(|u| pos[u]).max().unwrap_or(0);
            completes_at[last].push(v);
        }
        let twins = TwinPartition::of(g);
        Self {
            n,
            order,
            closed,
            adj,
            class_of: g.vertices().map(|v| twins.class_of(v)).collect(),
            completes_at,
        }
    }

    fn must_differ(&self, u: usize, v: usize, local: bool) -> bool {
        self.class_of[u] != self.class_of[v] && (!local || self.adj[u] >> v & 1 == 1)
    }
}

/// Signature bookkeeping for vertices whose neighborhoods are complete.
struct Completed {
    sig: Vec<u64>,
    done: Vec<bool>,
    stack: Vec<usize>,
}

impl Completed {
    fn new(n: usize) -> Self {
        Self {
            sig: vec![0; n],
            done: vec![false; n],
            stack: Vec::with_capacity(n),
        }
    }

    /// Registers the vertices completed at `step`, computing signatures from
    /// `mask_of`. Returns false, with nothing left registered, on a clash.
    fn push_step(
        &mut self,
        frame: &Frame,
        step: usize,
        local: bool,
        mask_of: impl Fn(usize) -> u64,
    ) -> bool {
        let base = self.stack.len();
        for &w in &frame.completes_at[step] {
            let mut nb = frame.closed[w];
            let mut sig = 0u64;
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                sig |= mask_of(u);
            }
            let clash = if local {
                let mut nb = frame.adj[w];
                let mut hit = false;
                while nb != 0 {
                    let x = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    if self.done[x] && self.sig[x] == sig && frame.must_differ(w, x, true) {
                        hit = true;
                        break;
                    }
                }
                hit
            } else {
                self.stack
                    .iter()
                    .any(|&x| self.sig[x] == sig && frame.must_differ(w, x, false))
            };
            if clash {
                self.pop_to(base);
                return false;
            }
            self.sig[w] = sig;
            self.done[w] = true;
            self.stack.push(w);
        }
        true
    }

    fn pop_to(&mut self, len: usize) {
        while self.stack.len() > len {
            let w = self.stack.pop().expect("nonempty");
            self.done[w] = false;
        }
    }
}

struct ColoringSearch<'a> {
    frame: &'a Frame,
    local: bool,
    proper: bool,
    k: usize,
    color: Vec<usize>,
    assigned: u64,
    completed: Completed,
    nodes: u64,
}

impl<'a> ColoringSearch<'a> {
    fn new(frame: &'a Frame, variant: Variant, k: usize) -> Self {
        Self {
            frame,
            local: variant.is_local(),
            proper: variant.requires_proper(),
            k,
            color: vec![0; frame.n],
            assigned: 0,
            completed: Completed::new(frame.n),
            nodes: 0,
        }
    }

    fn run(&mut self) -> bool {
        self.dfs(0, 0)
    }

    fn dfs(&mut self, step: usize, used: usize) -> bool {
        let n = self.frame.n;
        if step == n {
            return used == self.k;
        }
        if n - step < self.k - used {
            return false;
        }
        let v = self.frame.order[step];
        let limit = (used + 1).min(self.k);
        for col in 0..limit {
            self.nodes += 1;
            if self.proper {
                let mut nb = self.frame.adj[v] & self.assigned;
                let mut clash = false;
                while nb != 0 {
                    let u = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    if self.color[u] == col {
                        clash = true;
                        break;
                    }
                }
                if clash {
                    continue;
                }
            }
            self.color[v] = col;
            self.assigned |= 1u64 << v;
            let base = self.completed.stack.len();
            let color = &self.color;
            if self
                .completed
                .push_step(self.frame, step, self.local, |u| 1u64 << color[u])
            {
                if self.dfs(step + 1, used.max(col + 1)) {
                    return true;
                }
                self.completed.pop_to(base);
            }
            self.assigned &= !(1u64 << v);
        }
        false
    }

    fn witness(&self) -> Coloring {
        Coloring::new(self.color.iter().map(|&c| c as u32 + 1).collect()).expect("positive colors")
    }
}

/// Decides whether `g` has a `variant` coloring with exactly `k` colors and
/// returns the restricted-growth-smallest one, plus the node count.
pub fn find_coloring(g: &Graph, variant: Variant, k: usize) -> Result<(Option<Coloring>, u64)> {
    let n = g.vertex_count();
    if n > MASK_LIMIT {
        return Err(Error::InstanceTooLarge {
            what: "coloring search",
            n,
            limit: MASK_LIMIT,
        });
    }
    let frame = Frame::new(g);
    Ok(search_k(&frame, variant, k))
}

fn search_k(frame: &Frame, variant: Variant, k: usize) -> (Option<Coloring>, u64) {
    if k == 0 || k > frame.n {
        return (None, 0);
    }
    let mut s = ColoringSearch::new(frame, variant, k);
    let found = s.run();
    (found.then(|| s.witness()), s.nodes)
}

/// Exact `χ_variant(g)`.
pub fn chi(g: &Graph, variant: Variant, config: &SolverConfig) -> Result<SolveReport> {
    config.guard(
        "exhaustive coloring search",
        g.vertex_count(),
        config.max_coloring_vertices,
    )?;
    let frame = Frame::new(g);
    let lower = lower_bound(g, variant);
    let mut nodes = 0;
    for k in lower..=g.vertex_count() {
        let (found, explored) = search_k(&frame, variant, k);
        nodes += explored;
        if let Some(witness) = found {
            return Ok(SolveReport {
                variant: variant.into(),
                optimum: k,
                witness: Witness::Coloring(witness),
                nodes_explored: nodes,
                proof: proof_for(k, lower),
            });
        }
    }
    unreachable!("an all-distinct coloring is valid for every variant")
}

/// Iterates `size`-subsets of `0..n` as bitmasks in lexicographic order of
/// their sorted member lists.
fn for_each_subset(n: usize, size: usize, mut f: impl FnMut(u64) -> bool) -> bool {
    if size > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | (1u64 << i));
        if f(mask) {
            return true;
        }
        // advance to the next combination
        let mut i = size;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] < n - size + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Smallest twin-aware identifying code; the witness is the lexicographically
/// smallest code of that size.
pub fn min_identifying_code(g: &Graph, config: &SolverConfig) -> Result<SolveReport> {
    let n = g.vertex_count();
    config.guard("identifying code search", n, config.max_code_vertices)?;
    let frame = Frame::new(g);
    let lower = 0;
    let mut nodes = 0u64;
    let mut keyed: Vec<(u64, usize)> = Vec::with_capacity(n);
    let mut is_code = |code: u64| {
        nodes += 1;
        keyed.clear();
        for v in 0..n {
            let trace = frame.closed[v] & code;
            if config.strict_codes && trace == 0 {
                return false;
            }
            keyed.push((trace, frame.class_of[v]));
        }
        keyed.sort_unstable();
        keyed
            .windows(2)
            .all(|w| w[0].0 != w[1].0 || w[0].1 == w[1].1)
    };
    for size in 0..=n {
        let mut found = None;
        for_each_subset(n, size, |mask| {
            if is_code(mask) {
                found = Some(mask);
                true
            } else {
                false
            }
        });
        if let Some(mask) = found {
            let code = VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1))?;
            return Ok(SolveReport {
                variant: Problem::Idcode,
                optimum: size,
                witness: Witness::Code(code),
                nodes_explored: nodes,
                proof: proof_for(size, lower),
            });
        }
    }
    unreachable!("the whole vertex set is a dominating twin-aware code")
}

struct SetSearch<'a> {
    frame: &'a Frame,
    k: usize,
    /// Candidate masks per vertex, ascending.
    options: Vec<Vec<u64>>,
    /// `reach[i]`: most new colors the vertices `order[i..]` can introduce.
    reach: Vec<usize>,
    assignment: Vec<u64>,
    completed: Completed,
    nodes: u64,
}

impl<'a> SetSearch<'a> {
    fn new(frame: &'a Frame, capacity: &[usize], k: usize) -> Self {
        let options = (0..frame.n)
            .map(|v| {
                let cap = capacity[v].min(k) as u32;
                (1u64..1u64 << k)
                    .filter(|m| m.count_ones() <= cap)
                    .collect()
            })
            .collect();
        let mut reach = vec![0; frame.n + 1];
        for i in (0..frame.n).rev() {
            reach[i] = reach[i + 1] + capacity[frame.order[i]].min(k);
        }
        Self {
            frame,
            k,
            options,
            reach,
            assignment: vec![0; frame.n],
            completed: Completed::new(frame.n),
            nodes: 0,
        }
    }

    fn dfs(&mut self, step: usize, used: usize) -> bool {
        if step == self.frame.n {
            return used == self.k;
        }
        if used + self.reach[step] < self.k {
            return false;
        }
        let v = self.frame.order[step];
        for i in 0..self.options[v].len() {
            let mask = self.options[v][i];
            // New colors must be the next unused ones, in order.
            let fresh = mask >> used;
            if fresh & (fresh + 1) != 0 {
                continue;
            }
            self.nodes += 1;
            self.assignment[v] = mask;
            let base = self.completed.stack.len();
            let assignment = &self.assignment;
            if self
                .completed
                .push_step(self.frame, step, false, |u| assignment[u])
            {
                if self.dfs(step + 1, used + fresh.count_ones() as usize) {
                    return true;
                }
                self.completed.pop_to(base);
            }
        }
        false
    }

    fn witness(&self, capacity: &[usize]) -> SetColoring {
        let sets = self
            .assignment
            .iter()
            .map(|&m| {
                (0..64u32)
                    .filter(|b| m >> b & 1 == 1)
                    .map(|b| b + 1)
                    .collect()
            })
            .collect();
        SetColoring::new(sets, capacity.to_vec()).expect("search respects capacities")
    }
}

/// Minimum number of distinct colors over all weighted-identifying set
/// colorings of `g` with `|c(v)| <= capacity[v]`.
pub fn weighted_optimum(
    g: &Graph,
    capacity: &[usize],
    config: &SolverConfig,
) -> Result<SolveReport> {
    let n = g.vertex_count();
    config.guard("weighted search", n, config.max_weighted_vertices)?;
    if capacity.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: capacity.len(),
        });
    }
    if let Some(v) = capacity.iter().position(|&w| w == 0) {
        return Err(Error::ZeroCapacity(v));
    }
    let frame = Frame::new(g);
    let lower = 1;
    let mut nodes = 0;
    for k in lower..=n {
        let mut s = SetSearch::new(&frame, capacity, k);
        let found = s.dfs(0, 0);
        nodes += s.nodes;
        if found {
            return Ok(SolveReport {
                variant: Problem::Weighted,
                optimum: k,
                witness: Witness::SetColoring(s.witness(capacity)),
                nodes_explored: nodes,
                proof: proof_for(k, lower),
            });
        }
    }
    unreachable!("distinct singleton colors identify every non-twin pair")
}
