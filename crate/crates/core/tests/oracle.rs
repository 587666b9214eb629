mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twinid::constructions::{gen_planted, gen_random, PlantSpec};
use twinid::{
    chi, is_identifying_code, is_valid_coloring, min_identifying_code, weighted_optimum, Coloring,
    Graph, SolverConfig, TwinPartition, Variant, VertexSet,
};

fn random_graphs(n: usize, count: u64, seed: u64) -> Vec<Graph> {
    (seed..seed + count)
        .map(|s| gen_random(n, 0.5, s).unwrap())
        .collect()
}

fn planted(max: usize, count: u64, seed: u64) -> Vec<Graph> {
    let spec = PlantSpec::with_max_vertices(max);
    (seed..seed + count)
        .map(|s| gen_planted(&spec, s).unwrap())
        .collect()
}

#[test]
fn solver_matches_oracle_small_labeled() {
    for n in 1..=4 {
        for g in common::all_graphs(n) {
            for variant in Variant::ALL {
                let got = chi(&g, variant, &SolverConfig::default()).unwrap();
                assert_eq!(got.optimum, common::chi(&g, variant), "{variant} on {g:?}");
                assert!(common::valid(&g, got.coloring().as_slice(), variant));
            }
        }
    }
}

#[test]
fn solver_matches_oracle_five_and_planted() {
    let mut graphs = random_graphs(5, 40, 500);
    graphs.extend(planted(6, 40, 700));
    for g in &graphs {
        for variant in Variant::ALL {
            let got = chi(g, variant, &SolverConfig::default()).unwrap().optimum;
            assert_eq!(
                got,
                common::chi(g, variant),
                "{variant} on {}",
                g.to_edge_list()
            );
        }
    }
}

#[test]
fn solver_matches_oracle_seven() {
    for g in random_graphs(7, 6, 900) {
        for variant in Variant::ALL {
            let got = chi(&g, variant, &SolverConfig::default()).unwrap().optimum;
            assert_eq!(
                got,
                common::chi(&g, variant),
                "{variant} on {}",
                g.to_edge_list()
            );
        }
    }
}

#[test]
fn checker_matches_naive() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut graphs = random_graphs(8, 40, 100);
    graphs.extend(planted(8, 40, 200));
    for g in &graphs {
        let n = g.vertex_count();
        for _ in 0..30 {
            let k = rng.random_range(1..=n as u32);
            let colors: Vec<u32> = (0..n).map(|_| rng.random_range(1..=k)).collect();
            let c = Coloring::new(colors.clone()).unwrap();
            for variant in Variant::ALL {
                assert_eq!(
                    is_valid_coloring(g, &c, variant).unwrap(),
                    common::valid(g, &colors, variant),
                    "{variant} {colors:?} on {}",
                    g.to_edge_list()
                );
            }
        }
    }
}

#[test]
fn twins_match_pairwise() {
    for g in planted(8, 100, 300) {
        let p = TwinPartition::of(&g);
        for u in g.vertices() {
            for v in g.vertices() {
                assert_eq!(p.are_twins(u, v), common::twins(&g, u, v));
            }
        }
    }
}

#[test]
fn code_checker_and_search_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in planted(7, 60, 400) {
        let n = g.vertex_count();
        for _ in 0..20 {
            let members: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
            let code = VertexSet::from_vertices(n, members.iter().copied()).unwrap();
            for strict in [false, true] {
                assert_eq!(
                    is_identifying_code(&g, &code, strict).unwrap().valid,
                    common::is_code(&g, &members, strict)
                );
            }
        }
        let got = min_identifying_code(&g, &SolverConfig::default()).unwrap();
        assert_eq!(Some(got.optimum), common::min_code(&g, false));
        let strict = SolverConfig {
            strict_codes: true,
            ..SolverConfig::default()
        };
        let got = min_identifying_code(&g, &strict).unwrap();
        assert_eq!(Some(got.optimum), common::min_code(&g, true));
    }
}

#[test]
fn weighted_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut graphs = common::all_graphs(3);
    graphs.extend(planted(4, 40, 600));
    for g in &graphs {
        let weights: Vec<usize> = g.vertices().map(|_| rng.random_range(1..=3)).collect();
        let got = weighted_optimum(g, &weights, &SolverConfig::default()).unwrap();
        assert_eq!(
            got.optimum,
            common::weighted(g, &weights),
            "{weights:?} on {}",
            g.to_edge_list()
        );
    }
}
