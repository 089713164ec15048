//! End-to-end decomposition checks against the independent verifier.

use analysis::verify_decomposition;
use clustering::BaseClusterer;
use graph_core::{grid_graph, NodeSet};
use netdec::{network_decomposition, NetworkDecomposition};

fn verify(g: &graph_core::Graph, dec: &NetworkDecomposition) {
    let pairs: Vec<(NodeSet, u32)> = dec
        .clusters
        .iter()
        .cloned()
        .zip(dec.colors.iter().copied())
        .collect();
    let report = verify_decomposition(g, &pairs, dec.meta.alpha, dec.meta.d);
    assert!(report.is_valid(), "verifier rejected: {:?}", report.violations);
}

#[test]
fn grid_with_det_base_verifies_and_bounds_the_leftover() {
    let g = grid_graph(16, 16);
    let dec = network_decomposition(&g, 2, BaseClusterer::Det, 0).unwrap();
    verify(&g, &dec);
    // Color-α clusters are the leftover of one ε-clustering pass, so
    // their total size is at most ε·n.
    let leftover: usize = dec
        .clusters
        .iter()
        .zip(&dec.colors)
        .filter(|(_, &c)| c == 2)
        .map(|(cl, _)| cl.len())
        .sum();
    assert!(
        (leftover as f64) <= dec.meta.eps * 256.0 + 1e-9,
        "{leftover} leftover nodes exceed ε·n = {}",
        dec.meta.eps * 256.0
    );
}

#[test]
fn rand_base_grids_verify_across_alphas() {
    let g = grid_graph(12, 12);
    for alpha in [1, 2, 3] {
        for seed in [0, 1] {
            let dec =
                network_decomposition(&g, alpha, BaseClusterer::rand_default(), seed).unwrap();
            verify(&g, &dec);
        }
    }
}

#[test]
fn measured_diameter_grows_sublinearly_on_grids() {
    // Quadrupling the node count of a square grid must not triple the
    // measured decomposition diameter.
    let d_of = |side: usize| {
        let g = grid_graph(side, side);
        network_decomposition(&g, 2, BaseClusterer::Det, 0)
            .unwrap()
            .meta
            .d
    };
    let (d16, d32) = (d_of(16), d_of(32));
    let (d24, d48) = (d_of(24), d_of(48));
    assert!(d32 <= 3 * d16, "d(32²)={d32} vs d(16²)={d16}");
    assert!(d48 <= 3 * d24, "d(48²)={d48} vs d(24²)={d24}");
}

#[test]
fn ledger_accumulates_over_passes() {
    let g = grid_graph(16, 16);
    let dec = network_decomposition(&g, 3, BaseClusterer::Det, 0).unwrap();
    assert!(dec.meta.ledger.phase("power_simulation") > 0);
    let json = dec.to_json_value();
    assert_eq!(json["alpha"], 3);
    assert_eq!(json["clusters"].as_array().unwrap().len(), dec.clusters.len());
    assert!(json["rounds"]["power_simulation"].as_u64().unwrap() > 0);
}
