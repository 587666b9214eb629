//! Colorings and the validity predicates for every identification variant.
//!
//! A pair `u, v` is *identified* by a coloring `c` when the color sets
//! `c(N[u])` and `c(N[v])` differ. Twins can never be identified, so every
//! predicate here quantifies over non-twin pairs only:
//!
//! * identifying: all non-twin pairs,
//! * rlid: adjacent non-twin pairs,
//! * lid: adjacent non-twin pairs, and the coloring must be proper.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::twins::TwinPartition;

/// The single-color identification variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Id,
    Lid,
    Rlid,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Id, Variant::Lid, Variant::Rlid];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Id => "id",
            Variant::Lid => "lid",
            Variant::Rlid => "rlid",
        }
    }

    /// Only adjacent pairs have to be identified.
    pub fn is_local(self) -> bool {
        !matches!(self, Variant::Id)
    }

    pub fn requires_proper(self) -> bool {
        matches!(self, Variant::Lid)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "id" => Ok(Variant::Id),
            "lid" => Ok(Variant::Lid),
            "rlid" => Ok(Variant::Rlid),
            other => Err(Error::InvalidParameter(format!(
                "unknown variant `{other}` (expected id, lid or rlid)"
            ))),
        }
    }
}

/// A total map from vertices to positive colors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<u32>,
}

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::NonPositiveColor(v));
        }
        Ok(Self { colors })
    }

    pub fn constant(n: usize) -> Self {
        Self { colors: vec![1; n] }
    }

    /// Vertex `v` gets color `v + 1`.
    pub fn all_distinct(n: usize) -> Self {
        Self {
            colors: (1..=n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.colors
    }

    pub fn palette(&self) -> BTreeSet<u32> {
        self.colors.iter().copied().collect()
    }

    /// Number of distinct colors used.
    pub fn palette_size(&self) -> usize {
        self.palette().len()
    }

    pub fn max_color(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    fn check_len(&self, g: &Graph) -> Result<()> {
        if self.len() == g.vertex_count() {
            Ok(())
        } else {
            Err(Error::SizeMismatch {
                expected: g.vertex_count(),
                got: self.len(),
            })
        }
    }
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.colors.serialize(s)
    }
}

/// The set of colors seen on a closed neighborhood, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(Vec<u32>);

impl Signature {
    fn from_colors(mut colors: Vec<u32>) -> Self {
        colors.sort_unstable();
        colors.dedup();
        Self(colors)
    }

    pub fn colors(&self) -> &[u32] {
        &self.0
    }
}

/// `c(N[v])`.
pub fn signature(g: &Graph, c: &Coloring, v: usize) -> Result<Signature> {
    c.check_len(g)?;
    let nbhd = g.closed_neighborhood(v)?;
    Ok(Signature::from_colors(
        nbhd.iter().map(|u| c.color(u)).collect(),
    ))
}

/// A set-valued coloring with a per-vertex capacity (the weight function).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetColoring {
    sets: Vec<BTreeSet<u32>>,
    capacity: Vec<usize>,
}

impl SetColoring {
    /// Validates `1 <= |sets[v]| <= capacity[v]` and positive colors.
    pub fn new(sets: Vec<BTreeSet<u32>>, capacity: Vec<usize>) -> Result<Self> {
        if sets.len() != capacity.len() {
            return Err(Error::SizeMismatch {
                expected: capacity.len(),
                got: sets.len(),
            });
        }
        for (v, (set, &cap)) in sets.iter().zip(&capacity).enumerate() {
            if cap == 0 {
                return Err(Error::ZeroCapacity(v));
            }
            if set.is_empty() {
                return Err(Error::EmptyColorSet(v));
            }
            if set.contains(&0) {
                return Err(Error::NonPositiveColor(v));
            }
            if set.len() > cap {
                return Err(Error::CapacityExceeded {
                    v,
                    size: set.len(),
                    capacity: cap,
                });
            }
        }
        Ok(Self { sets, capacity })
    }

    /// Every vertex gets the singleton of its color, capacity 1.
    pub fn from_coloring(c: &Coloring) -> Self {
        Self {
            sets: c.as_slice().iter().map(|&x| BTreeSet::from([x])).collect(),
            capacity: vec![1; c.len()],
        }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn colors_of(&self, v: usize) -> &BTreeSet<u32> {
        &self.sets[v]
    }

    pub fn capacity(&self, v: usize) -> usize {
        self.capacity[v]
    }

    pub fn capacities(&self) -> &[usize] {
        &self.capacity
    }

    pub fn palette(&self) -> BTreeSet<u32> {
        self.sets.iter().flatten().copied().collect()
    }

    pub fn palette_size(&self) -> usize {
        self.palette().len()
    }
}

impl Serialize for SetColoring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.sets.serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    ImproperEdge,
    UnidentifiedPair,
}

/// A failing pair, always reported with `vertices[0] < vertices[1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub vertices: [usize; 2],
}

impl Violation {
    fn new(kind: ViolationKind, u: usize, v: usize) -> Self {
        debug_assert_ne!(u, v);
        Self {
            kind,
            vertices: [u.min(v), u.max(v)],
        }
    }

    pub fn improper(u: usize, v: usize) -> Self {
        Self::new(ViolationKind::ImproperEdge, u, v)
    }

    pub fn unidentified(u: usize, v: usize) -> Self {
        Self::new(ViolationKind::UnidentifiedPair, u, v)
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [u, v] = self.vertices;
        match self.kind {
            ViolationKind::ImproperEdge => write!(f, "improper edge ({u}, {v})"),
            ViolationKind::UnidentifiedPair => write!(f, "unidentified pair ({u}, {v})"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
    /// Vertices whose trace on the code is empty; filled only in strict
    /// identifying-code checks.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub undominated: Vec<usize>,
}

impl CheckReport {
    fn from_parts(violations: Vec<Violation>, undominated: Vec<usize>) -> Self {
        Self {
            valid: violations.is_empty() && undominated.is_empty(),
            violations,
            undominated,
        }
    }
}

/// How far a checker scans before answering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// Collect every violation.
    Exhaustive,
    /// Stop at the first violation.
    FirstFailure,
}

/// Scans pairs whose keys coincide and reports those that must be told apart.
///
/// `keys[v]` is whatever value has to differ between identified vertices
/// (a color signature, a code trace). With `local` only edges are considered.
fn unidentified_pairs<K: std::hash::Hash + Eq>(
    g: &Graph,
    twins: &TwinPartition,
    keys: &[K],
    local: bool,
    mode: CheckMode,
    out: &mut Vec<Violation>,
) {
    let stop = |out: &Vec<Violation>| mode == CheckMode::FirstFailure && !out.is_empty();
    if local {
        for (u, v) in g.edges() {
            if !twins.are_twins(u, v) && keys[u] == keys[v] {
                out.push(Violation::unidentified(u, v));
                if stop(out) {
                    return;
                }
            }
        }
        return;
    }
    let mut groups: HashMap<&K, Vec<usize>> = HashMap::new();
    for (v, key) in keys.iter().enumerate() {
        groups.entry(key).or_default().push(v);
    }
    let start = out.len();
    for members in groups.values().filter(|m| m.len() > 1) {
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if !twins.are_twins(u, v) {
                    out.push(Violation::unidentified(u, v));
                    if stop(out) {
                        return;
                    }
                }
            }
        }
    }
    out[start..].sort_unstable();
}

/// Checks `c` against `variant` on `g`.
pub fn check_coloring(
    g: &Graph,
    c: &Coloring,
    variant: Variant,
    mode: CheckMode,
) -> Result<CheckReport> {
    c.check_len(g)?;
    let twins = TwinPartition::of(g);
    let mut violations = Vec::new();
    if variant.requires_proper() {
        for (u, v) in g.edges() {
            if c.color(u) == c.color(v) {
                violations.push(Violation::improper(u, v));
                if mode == CheckMode::FirstFailure {
                    return Ok(CheckReport::from_parts(violations, vec![]));
                }
            }
        }
    }
    let sigs: Vec<Signature> = g
        .vertices()
        .map(|v| Signature::from_colors(g.closed(v).iter().map(|u| c.color(u)).collect()))
        .collect();
    unidentified_pairs(g, &twins, &sigs, variant.is_local(), mode, &mut violations);
    Ok(CheckReport::from_parts(violations, vec![]))
}

/// Boolean-only check; stops at the first violation.
pub fn is_valid_coloring(g: &Graph, c: &Coloring, variant: Variant) -> Result<bool> {
    Ok(check_coloring(g, c, variant, CheckMode::FirstFailure)?.valid)
}

pub fn is_identifying(g: &Graph, c: &Coloring) -> Result<CheckReport> {
    check_coloring(g, c, Variant::Id, CheckMode::Exhaustive)
}

pub fn is_rlid(g: &Graph, c: &Coloring) -> Result<CheckReport> {
    check_coloring(g, c, Variant::Rlid, CheckMode::Exhaustive)
}

pub fn is_lid(g: &Graph, c: &Coloring) -> Result<CheckReport> {
    check_coloring(g, c, Variant::Lid, CheckMode::Exhaustive)
}

/// Twin-aware identifying code: `N[u] ∩ C ≠ N[v] ∩ C` for every non-twin
/// pair. With `strict`, every trace must also be nonempty (domination).
pub fn is_identifying_code(g: &Graph, code: &VertexSet, strict: bool) -> Result<CheckReport> {
    if code.universe() != g.vertex_count() {
        return Err(Error::SizeMismatch {
            expected: g.vertex_count(),
            got: code.universe(),
        });
    }
    let twins = TwinPartition::of(g);
    let traces: Vec<VertexSet> = g
        .vertices()
        .map(|v| g.closed(v).intersection(code))
        .collect();
    let mut violations = Vec::new();
    unidentified_pairs(
        g,
        &twins,
        &traces,
        false,
        CheckMode::Exhaustive,
        &mut violations,
    );
    let undominated = if strict {
        g.vertices().filter(|&v| traces[v].is_empty()).collect()
    } else {
        Vec::new()
    };
    Ok(CheckReport::from_parts(violations, undominated))
}

/// Weighted identification: the union of color sets over `N[u]` must differ
/// from that over `N[v]` for every non-twin pair. Capacities are enforced when
/// the [`SetColoring`] is built.
pub fn is_weighted_identifying(g: &Graph, sc: &SetColoring) -> Result<CheckReport> {
    if sc.len() != g.vertex_count() {
        return Err(Error::SizeMismatch {
            expected: g.vertex_count(),
            got: sc.len(),
        });
    }
    let twins = TwinPartition::of(g);
    let unions: Vec<BTreeSet<u32>> = g
        .vertices()
        .map(|v| {
            g.closed(v)
                .iter()
                .flat_map(|u| sc.colors_of(u).iter().copied())
                .collect()
        })
        .collect();
    let mut violations = Vec::new();
    unidentified_pairs(
        g,
        &twins,
        &unions,
        false,
        CheckMode::Exhaustive,
        &mut violations,
    );
    Ok(CheckReport::from_parts(violations, vec![]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(c: &[u32]) -> Coloring {
        Coloring::new(c.to_vec()).unwrap()
    }

    fn p3() -> Graph {
        Graph::path(3).unwrap()
    }

    #[test]
    fn signatures() {
        let g = p3();
        assert_eq!(
            signature(&g, &col(&[1, 2, 3]), 1).unwrap().colors(),
            &[1, 2, 3]
        );
        let k = Coloring::constant(3);
        for v in 0..3 {
            assert_eq!(signature(&g, &k, v).unwrap().colors(), &[1]);
        }
        assert!(signature(&g, &k, 3).is_err());
    }

    #[test]
    fn coloring_rejects_zero() {
        assert_eq!(Coloring::new(vec![1, 0]), Err(Error::NonPositiveColor(1)));
    }

    #[test]
    fn identifying_on_small_graphs() {
        let k4 = Graph::complete(4).unwrap();
        assert!(is_identifying(&k4, &Coloring::constant(4)).unwrap().valid);
        let r = is_identifying(&p3(), &Coloring::constant(3)).unwrap();
        assert!(!r.valid);
        assert!(r.violations.contains(&Violation::unidentified(0, 2)));
        assert_eq!(r.violations.len(), 3);
    }

    #[test]
    fn rlid_on_small_graphs() {
        assert!(
            is_rlid(&Graph::complete(3).unwrap(), &Coloring::constant(3))
                .unwrap()
                .valid
        );
        let r = is_rlid(&p3(), &col(&[1, 2, 2])).unwrap();
        assert!(!r.valid);
        assert_eq!(r.violations, vec![Violation::unidentified(0, 1)]);
        assert!(is_rlid(&p3(), &col(&[1, 2, 3])).unwrap().valid);
    }

    #[test]
    fn lid_on_small_graphs() {
        assert!(is_lid(&p3(), &col(&[1, 2, 3])).unwrap().valid);
        let r = is_lid(&p3(), &col(&[1, 2, 1])).unwrap();
        assert!(!r.valid);
        assert!(r.violations.contains(&Violation::unidentified(0, 1)));
        let r = is_lid(&Graph::complete(3).unwrap(), &col(&[1, 2, 2])).unwrap();
        assert_eq!(r.violations, vec![Violation::improper(1, 2)]);
    }

    #[test]
    fn first_failure_mode_stops_early() {
        let r = check_coloring(
            &p3(),
            &Coloring::constant(3),
            Variant::Id,
            CheckMode::FirstFailure,
        )
        .unwrap();
        assert_eq!(r.violations.len(), 1);
        assert!(!is_valid_coloring(&p3(), &Coloring::constant(3), Variant::Id).unwrap());
    }

    #[test]
    fn size_mismatch_is_an_error() {
        assert!(matches!(
            is_identifying(&p3(), &Coloring::constant(2)),
            Err(Error::SizeMismatch {
                expected: 3,
                got: 2
            })
        ));
    }

    #[test]
    fn identifying_codes() {
        let k3 = Graph::complete(3).unwrap();
        assert!(
            is_identifying_code(&k3, &VertexSet::empty(3), false)
                .unwrap()
                .valid
        );
        let strict = is_identifying_code(&k3, &VertexSet::empty(3), true).unwrap();
        assert_eq!(strict.undominated, vec![0, 1, 2]);

        let g = p3();
        let ends = VertexSet::from_vertices(3, [0, 2]).unwrap();
        assert!(is_identifying_code(&g, &ends, false).unwrap().valid);
        assert!(is_identifying_code(&g, &ends, true).unwrap().valid);
        let mid = VertexSet::from_vertices(3, [1]).unwrap();
        let r = is_identifying_code(&g, &mid, false).unwrap();
        assert_eq!(r.violations.len(), 3);
    }

    #[test]
    fn set_coloring_invariants() {
        let s = |v: &[u32]| v.iter().copied().collect::<BTreeSet<u32>>();
        assert_eq!(
            SetColoring::new(vec![s(&[1, 2])], vec![1]),
            Err(Error::CapacityExceeded {
                v: 0,
                size: 2,
                capacity: 1
            })
        );
        assert_eq!(
            SetColoring::new(vec![s(&[])], vec![1]),
            Err(Error::EmptyColorSet(0))
        );
        assert_eq!(
            SetColoring::new(vec![s(&[1])], vec![0]),
            Err(Error::ZeroCapacity(0))
        );
        assert_eq!(
            SetColoring::new(vec![s(&[0])], vec![1]),
            Err(Error::NonPositiveColor(0))
        );
    }

    #[test]
    fn weighted_identification() {
        let g = p3();
        let ones = SetColoring::from_coloring(&Coloring::constant(3));
        assert!(!is_weighted_identifying(&g, &ones).unwrap().valid);

        let k4 = Graph::complete(4).unwrap();
        let sets = vec![
            BTreeSet::from([1, 2]),
            BTreeSet::from([3]),
            BTreeSet::from([1]),
            BTreeSet::from([2]),
        ];
        let sc = SetColoring::new(sets, vec![2, 2, 1, 1]).unwrap();
        assert!(is_weighted_identifying(&k4, &sc).unwrap().valid);

        // P_3 with sets {1},{2},{1,3}: unions {1,2}, {1,2,3}, {1,2,3} fail on (1,2).
        let sets = vec![
            BTreeSet::from([1]),
            BTreeSet::from([2]),
            BTreeSet::from([1, 3]),
        ];
        let sc = SetColoring::new(sets, vec![1, 1, 2]).unwrap();
        let r = is_weighted_identifying(&g, &sc).unwrap();
        assert_eq!(r.violations, vec![Violation::unidentified(1, 2)]);
    }

    #[test]
    fn variant_parsing() {
        for v in Variant::ALL {
            assert_eq!(v.name().parse::<Variant>().unwrap(), v);
        }
        assert!("foo".parse::<Variant>().is_err());
    }
}
