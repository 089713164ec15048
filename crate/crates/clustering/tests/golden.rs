//! Regression tests pinning exact clustering outputs for fixed seeds,
//! plus cross-checks against the independent verifier.

use std::fs;
use std::path::PathBuf;

use analysis::verify_clustering;
use clustering::{base_cluster_det, base_cluster_rand, eps_cluster, BaseClusterer, Clustering};
use graph_core::{grid_graph, path_graph, Graph};

/// Compares `value` against the committed golden file. Set
/// `RECORD_GOLDEN=1` to (re)record instead of comparing.
fn check_golden(name: &str, value: &serde_json::Value) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    let pretty = serde_json::to_string_pretty(value).unwrap() + "\n";
    if std::env::var_os("RECORD_GOLDEN").is_some() {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(&path, &pretty).unwrap();
        return;
    }
    let want = fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("missing golden file {}: {e}; record with RECORD_GOLDEN=1", path.display()));
    assert_eq!(pretty, want, "{name} drifted from its recorded output");
}

fn verify_against_oracle(g: &Graph, cl: &Clustering, lambda: f64, d: u32) {
    let report = verify_clustering(g, &cl.clusters, &cl.unclustered, lambda, d);
    assert!(report.is_valid(), "verifier rejected run: {:?}", report.violations);
}

#[test]
fn voronoi_on_a_path_is_pinned() {
    let g = path_graph(32);
    let cl = base_cluster_rand(&g, 0.2, 7);
    verify_against_oracle(&g, &cl, 1.0, cl.meta.max_diameter);
    check_golden("base_rand_p32_beta02_seed7.json", &cl.to_json_value());
}

#[test]
fn bootstrap_on_a_grid_is_pinned() {
    let g = grid_graph(16, 16);
    let cl = eps_cluster(&g, 0.25, BaseClusterer::rand_default(), 42)
        .expect("recorded run must stay accepted");
    assert!(cl.unclustered.len() as f64 <= 0.25 * 256.0 + 1e-9);
    verify_against_oracle(&g, &cl, 0.25, cl.meta.max_diameter);
    check_golden("eps_grid16_quarter_rand_seed42.json", &cl.to_json_value());
}

#[test]
fn carving_binary_trees_meets_the_half_log_contract() {
    // Complete binary trees up to 255 nodes: λ ≤ 1/2 and weak diameter
    // ≤ 2·⌈log₂ n⌉, checked by the independent verifier.
    for &n in &[15usize, 63, 255] {
        let edges = (1..n as u32).map(|v| ((v - 1) / 2, v));
        let g = Graph::build(n, edges).unwrap();
        let cl = base_cluster_det(&g);
        let bound = 2 * (n as f64).log2().ceil() as u32;
        assert!(cl.meta.max_diameter <= bound);
        verify_against_oracle(&g, &cl, 0.5, bound);
    }
}

#[test]
fn quarter_target_on_a_path_with_det_base() {
    let g = path_graph(64);
    let cl = eps_cluster(&g, 0.25, BaseClusterer::Det, 0).unwrap();
    assert!(cl.unclustered.len() <= 16);
    verify_against_oracle(&g, &cl, 0.25, cl.meta.max_diameter);
}
