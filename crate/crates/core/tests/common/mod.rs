//! Brute-force references. Nothing here calls the library's checkers or
//! solvers; graphs are only read through `has_edge` and `vertex_count`.
#![allow(dead_code)]

use std::collections::BTreeSet;

use twinid::{Graph, Variant};

pub fn closed(g: &Graph, v: usize) -> Vec<usize> {
    (0..g.vertex_count())
        .filter(|&u| u == v || g.has_edge(u, v))
        .collect()
}

pub fn twins(g: &Graph, u: usize, v: usize) -> bool {
    closed(g, u) == closed(g, v)
}

fn color_set(g: &Graph, colors: &[u32], v: usize) -> BTreeSet<u32> {
    closed(g, v).into_iter().map(|u| colors[u]).collect()
}

pub fn valid(g: &Graph, colors: &[u32], variant: Variant) -> bool {
    let n = g.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            let adjacent = g.has_edge(u, v);
            if variant == Variant::Lid && adjacent && colors[u] == colors[v] {
                return false;
            }
            if variant != Variant::Id && !adjacent {
                continue;
            }
            if !twins(g, u, v) && color_set(g, colors, u) == color_set(g, colors, v) {
                return false;
            }
        }
    }
    true
}

/// Odometer over `[1, k]^n`; stops early when `f` returns true.
fn any_tuple(n: usize, k: u32, mut f: impl FnMut(&[u32]) -> bool) -> bool {
    let mut t = vec![1u32; n];
    loop {
        if f(&t) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            if t[i] < k {
                t[i] += 1;
                break;
            }
            t[i] = 1;
            i += 1;
        }
    }
}

/// Smallest `k` such that some map into `[1, k]` is valid. No pruning and
/// no symmetry breaking.
pub fn chi(g: &Graph, variant: Variant) -> usize {
    let n = g.vertex_count();
    (1..=n)
        .find(|&k| any_tuple(n, k as u32, |c| valid(g, c, variant)))
        .expect("all-distinct coloring is valid")
}

pub fn is_code(g: &Graph, code: &[usize], strict: bool) -> bool {
    let n = g.vertex_count();
    let trace = |v: usize| -> Vec<usize> {
        code.iter()
            .copied()
            .filter(|&c| c == v || g.has_edge(c, v))
            .collect()
    };
    if strict && (0..n).any(|v| trace(v).is_empty()) {
        return false;
    }
    (0..n).all(|u| (u + 1..n).all(|v| twins(g, u, v) || trace(u) != trace(v)))
}

pub fn min_code(g: &Graph, strict: bool) -> Option<usize> {
    let n = g.vertex_count();
    (0u64..1 << n)
        .filter_map(|mask| {
            let code: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            is_code(g, &code, strict).then_some(code.len())
        })
        .min()
}

/// Weighted optimum by trying every assignment of nonempty subsets of
/// `[1, k]` within capacity, for increasing `k`.
pub fn weighted(g: &Graph, capacity: &[usize]) -> usize {
    let n = g.vertex_count();
    for k in 1..=n as u32 {
        let subsets: Vec<Vec<u64>> = capacity
            .iter()
            .map(|&w| {
                (1u64..1 << k)
                    .filter(|m| m.count_ones() as usize <= w)
                    .collect()
            })
            .collect();
        let mut idx = vec![0usize; n];
        loop {
            let sets: Vec<u64> = (0..n).map(|v| subsets[v][idx[v]]).collect();
            let sig = |v: usize| closed(g, v).iter().fold(0u64, |a, &u| a | sets[u]);
            let ok = (0..n).all(|u| (u + 1..n).all(|v| twins(g, u, v) || sig(u) != sig(v)));
            if ok {
                return k as usize;
            }
            let mut i = 0;
            while i < n && idx[i] + 1 == subsets[i].len() {
                idx[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            idx[i] += 1;
        }
    }
    unreachable!("distinct singletons always identify")
}

/// All labeled graphs on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            Graph::new(n, edges).unwrap()
        })
        .collect()
}
