//! Property tests for the library invariants: structural digraph facts,
//! spectral identities on random graphs, distance-function axioms, Elo
//! conservation, and ingest weight laws.

mod common;

use common::{random_acyclic, random_digraph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rankability::spectral::{hausdorff, Spectrum, MULT_TOL};
use rankability::{
    elo_update, parse_matches, rating_correlation, run_elo, spec_r, Digraph, EloConfig, Matrix,
    WeightMode,
};

fn digraph_strategy(max_n: usize) -> impl Strategy<Value = Digraph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            proptest::collection::vec(
                prop_oneof![3 => Just(0.0), 2 => 0.0..1.0f64],
                n * n,
            )
            .prop_map(move |vals| {
                let mut w = Matrix::zeros(n);
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            w[(i, j)] = vals[i * n + j];
                        }
                    }
                }
                Digraph::from_weights(w).expect("valid weights")
            })
        })
        .no_shrink()
}

proptest! {
    #[test]
    fn laplacian_zero_rows_match_sinks(g in digraph_strategy(8)) {
        let l = g.laplacian();
        let zero_rows = (0..g.n())
            .filter(|&i| (0..g.n()).all(|j| l[(i, j)] == 0.0))
            .count();
        let sinks = g.out_degrees().iter().filter(|&&d| d == 0.0).count();
        prop_assert_eq!(zero_rows, sinks);
        for i in 0..g.n() {
            prop_assert!(l.row_sum(i).abs() <= 1e-12 * g.n() as f64);
        }
    }

    #[test]
    fn scc_components_partition_vertices(g in digraph_strategy(8)) {
        let d = g.scc();
        let mut seen = vec![false; g.n()];
        for comp in &d.components {
            for &v in comp {
                prop_assert!(!seen[v], "vertex {} in two components", v);
                seen[v] = true;
            }
        }
        prop_assert!(seen.into_iter().all(|b| b));
        prop_assert_eq!(d.permutation.len(), g.n());

        // Frobenius normal form: exact zeros below every diagonal block.
        let l = g.laplacian().permuted(&d.permutation);
        let mut offset = 0;
        for comp in &d.components {
            for a in offset + comp.len()..g.n() {
                for b in offset..offset + comp.len() {
                    prop_assert_eq!(l[(a, b)], 0.0);
                }
            }
            offset += comp.len();
        }
    }

    #[test]
    fn acyclicity_three_way_equivalence(g in digraph_strategy(8)) {
        let d = g.scc();
        let all_singletons = d.components.iter().all(|c| c.len() == 1);
        let l = g.laplacian().permuted(&d.permutation);
        let strictly_upper = (0..g.n()).all(|a| (0..a).all(|b| l[(a, b)] == 0.0));
        let no_cycles = g.simple_cycles(Some(1)).count == 0;
        prop_assert_eq!(g.is_acyclic(), all_singletons);
        prop_assert_eq!(all_singletons, strictly_upper);
        prop_assert_eq!(all_singletons, no_cycles);
    }

    #[test]
    fn hausdorff_axioms(
        a in proptest::collection::vec(-5.0..5.0f64, 1..8),
        b in proptest::collection::vec(-5.0..5.0f64, 1..8),
    ) {
        let sa = Spectrum::from_reals(&a);
        let sb = Spectrum::from_reals(&b);
        let ab = hausdorff(&sa, &sb).unwrap();
        let ba = hausdorff(&sb, &sa).unwrap();
        prop_assert!(ab.distance >= 0.0);
        prop_assert_eq!(ab.distance, ba.distance);
        prop_assert_eq!(ab.sv_forward, ba.sv_backward);
        prop_assert_eq!(hausdorff(&sa, &sa).unwrap().distance, 0.0);
        prop_assert_eq!(ab.distance, ab.sv_forward.max(ab.sv_backward));
    }

    #[test]
    fn elo_update_conserves_total(
        ri in -500.0..500.0f64,
        rj in -500.0..500.0f64,
        s in prop_oneof![Just(0.0), Just(0.5), Just(1.0)],
    ) {
        let cfg = EloConfig::chess();
        let (a, b) = elo_update(ri, rj, s, &cfg).unwrap();
        prop_assert!(((a + b) - (ri + rj)).abs() < 1e-12);
        // mu stays strictly inside (0, 1): updates are bounded by k.
        prop_assert!((a - ri).abs() < cfg.k_factor);
        prop_assert!((b - rj).abs() < cfg.k_factor);
    }

    #[test]
    fn winning_percentage_weights_are_consistent(
        outcomes in proptest::collection::vec((0usize..4, 0usize..4, prop_oneof![Just(1.0), Just(0.5), Just(0.0)]), 1..20),
    ) {
        // Random schedule over 4 entities; skip self-pairings.
        let mut rows = String::from("round,entity_a,entity_b,score_a,score_b\n");
        let names = ["P0", "P1", "P2", "P3"];
        let mut round = 0;
        for (a, b, s) in outcomes {
            if a == b {
                continue;
            }
            round += 1;
            rows.push_str(&format!("{},{},{},{},{}\n", round, names[a], names[b], s, 1.0 - s));
        }
        if round == 0 {
            return Ok(());
        }
        let series = parse_matches(&rows).unwrap();
        for mode in [WeightMode::WinningPercentage, WeightMode::WinningPercentageSoFar] {
            let g = rankability::build_digraph(&series, series.max_round(), mode).unwrap();
            for i in 0..g.n() {
                for j in 0..g.n() {
                    let w = g.weight(i, j);
                    prop_assert!((0.0..=1.0).contains(&w));
                    if i != j && (w > 0.0 || g.weight(j, i) > 0.0) {
                        // Pair has played: weights sum to one at full series.
                        prop_assert!((w + g.weight(j, i) - 1.0).abs() < 1e-12);
                    }
                }
            }
        }
    }
}

#[test]
fn laplacian_spectrum_invariants_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xfeed);
    for trial in 0..300 {
        let n = 2 + trial % 9;
        let g = random_digraph(&mut rng, n, 0.4, 0.0, 1.0);
        let l = g.laplacian();
        let spec = Spectrum::from_matrix(&l).unwrap();
        let degrees = g.out_degrees();
        let degree_sum: f64 = degrees.iter().sum();

        // Trace identity: eigenvalues sum to the total out-degree.
        let eig_sum: f64 = spec.values().iter().map(|c| c.re).sum();
        assert!(
            (eig_sum - degree_sum).abs() < 1e-8 * (degree_sum + 1.0),
            "trial {trial}: trace identity violated"
        );

        // Zero is always an eigenvalue.
        let tol = MULT_TOL * l.norm_inf().max(1.0);
        assert!(spec.zero_multiplicity(tol) >= 1, "trial {trial}: no zero eigenvalue");

        // Gershgorin containment for unit weights: |lambda| <= 2(n-1) and
        // real parts are non-negative up to tolerance.
        for v in spec.values() {
            assert!(v.norm() <= 2.0 * (n as f64 - 1.0) + 1e-9);
            assert!(v.re >= -tol);
        }
    }
}

#[test]
fn acyclic_spectra_equal_out_degrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xdead);
    for _ in 0..200 {
        let n = 2 + (rng_usize(&mut rng) % 9);
        let g = random_acyclic(&mut rng, n);
        let spec = Spectrum::from_matrix(&g.laplacian()).unwrap();
        let degrees = Spectrum::from_reals(&g.out_degrees());
        assert!(hausdorff(&spec, &degrees).unwrap().distance < 1e-8);
    }
}

fn rng_usize(rng: &mut ChaCha8Rng) -> usize {
    use rand::Rng;
    rng.gen_range(0..usize::MAX)
}

#[test]
fn rating_correlation_of_shuffled_rankings_is_below_one() {
    // Deterministic scrambled schedule: outcomes flip winners between
    // rounds, so consecutive rankings keep changing.
    let text = "round,entity_a,entity_b,score_a,score_b\n\
                1,A,B,1,0\n1,C,D,1,0\n\
                2,A,B,0,1\n2,C,D,0,1\n\
                3,B,C,1,0\n3,A,D,0,1\n\
                4,B,C,0,1\n4,A,D,1,0\n";
    let series = parse_matches(text).unwrap();
    let table = run_elo(&series, &EloConfig::chess()).unwrap();
    let c = rating_correlation(&table).unwrap();
    assert!(c < 1.0 - 1e-6, "shuffled rankings should not correlate perfectly: {c}");
}

#[test]
fn spec_r_of_dominance_is_one_for_every_permutation_of_five() {
    // All 120 orders of a 5-vertex dominance graph.
    let mut perm = vec![0usize, 1, 2, 3, 4];
    loop {
        let g = rankability::dominance_graph(5, Some(&perm)).unwrap();
        let r = spec_r(&g).unwrap();
        assert!((r.spec_r - 1.0).abs() < 1e-9, "order {perm:?}: {}", r.spec_r);
        // next_permutation, lexicographic
        let n = perm.len();
        let mut i = n - 1;
        while i > 0 && perm[i - 1] >= perm[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while perm[j] <= perm[i - 1] {
            j -= 1;
        }
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}
