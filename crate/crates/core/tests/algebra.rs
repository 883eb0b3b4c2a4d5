use std::collections::{HashSet, VecDeque};

use proptest::prelude::*;
use srgta::autgrp::{automorphism_group, AutOptions};
use srgta::classifier::{intersection_numbers, triple_intersection_numbers};
use srgta::exactmath::DEFAULT_PRIME;
use srgta::families::FamilySpec;
use srgta::graphcore::is_strongly_regular;
use srgta::terwilliger::{analyze_at, t0_report, t_report_in, AnalysisOptions};
use srgta::{Graph, ModP, RationalField};

fn stabilizer_elements(gens: &[Vec<usize>], n: usize, omega: usize) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..n).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y: Vec<usize> = x.iter().map(|&i| g[i]).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().filter(|e| e[omega] == omega).collect()
}

/// Orbitals of `G_ω` restricted to `Δ_i × Δ_j`, by enumerating the group.
fn brute_blocks(g: &Graph, gens: &[Vec<usize>], omega: usize) -> [[usize; 3]; 3] {
    let n = g.order();
    let stab = stabilizer_elements(gens, n, omega);
    let cell = |v: usize| {
        if v == omega {
            0
        } else if g.has_edge(omega, v) {
            1
        } else {
            2
        }
    };
    let mut reps: HashSet<(usize, usize)> = HashSet::new();
    for x in 0..n {
        for y in 0..n {
            reps.insert(stab.iter().map(|e| (e[x], e[y])).min().unwrap());
        }
    }
    let mut blocks = [[0; 3]; 3];
    for (x, y) in reps {
        blocks[cell(x)][cell(y)] += 1;
    }
    blocks
}

fn spec() -> impl Strategy<Value = FamilySpec> {
    prop_oneof![
        (2usize..5, 2usize..5).prop_map(|(parts, size)| FamilySpec::Multipartite { parts, size }),
        (3usize..7).prop_map(|n| FamilySpec::Grid { n }),
        (5usize..8).prop_map(|n| FamilySpec::Johnson { n }),
        prop::sample::select(vec![5u64, 9, 13, 17, 25]).prop_map(|q| FamilySpec::Paley { q }),
        Just(FamilySpec::Peisert { p: 7, t: 1 }),
        Just(FamilySpec::Grassmann { q: 2, n: 4 }),
        Just(FamilySpec::Cycle { n: 5 }),
        prop::sample::select(vec![1i8, -1]).prop_map(|eps| FamilySpec::Vo { eps, m: 2, q: 2 }),
        Just(FamilySpec::O6minus { q: 2 }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn dimension_chain(spec in spec(), omega_seed in 0usize..1000) {
        let g = spec.build().unwrap();
        let n = g.order();
        let omega = omega_seed % n;
        let params = is_strongly_regular(&g).unwrap();
        let grp = automorphism_group(&g, &AutOptions::default()).unwrap();
        let r = analyze_at(&g, &grp, omega, &AnalysisOptions::default()).unwrap();
        prop_assert_eq!(r.dims.t0, intersection_numbers(&params).unwrap().nonzero_count());
        prop_assert!(r.dims.t0 <= r.dims.t && r.dims.t <= r.dims.t_tilde);
        let constant = triple_intersection_numbers(&g).unwrap().constant;
        prop_assert_eq!(constant, r.dims.t0 == r.dims.t, "{}", spec);
        let gens: Vec<Vec<usize>> = grp.generators.iter().map(|p| p.images().collect()).collect();
        let blocks = brute_blocks(&g, &gens, omega);
        prop_assert_eq!(blocks, r.blocks.t_tilde, "{}", spec);
        prop_assert_eq!(blocks.iter().flatten().sum::<usize>(), r.dims.t_tilde);
    }

    #[test]
    fn rational_and_modular_dimensions_agree(spec in spec()) {
        let g = spec.build().unwrap();
        prop_assume!(g.order() <= 30);
        let over_p = t_report_in(&ModP::new(DEFAULT_PRIME).unwrap(), &g, 0, 7).unwrap();
        let over_q = t_report_in(&RationalField::new(), &g, 0, 7).unwrap();
        prop_assert_eq!(over_p, over_q);
        prop_assert_eq!(t0_report(&g, 0).unwrap().dim, intersection_numbers(&is_strongly_regular(&g).unwrap()).unwrap().nonzero_count());
    }
}
