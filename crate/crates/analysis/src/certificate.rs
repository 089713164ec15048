//! Independently verifiable chromatic-number certificates.

use graph_core::{render_graph_text, Graph};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::proper::is_proper_coloring;

/// SHA-256 of the canonical text rendering, hex-encoded.
#[must_use]
pub fn graph_sha256(g: &Graph) -> String {
    let digest = Sha256::digest(render_graph_text(g).as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// An exact chromatic number with both witnesses: a clique (lower bound)
/// and a proper coloring using `chi` colors (upper bound). The clique is
/// not required to reach `chi`; it certifies `clique.len() <= chi` while
/// the coloring certifies `chi` colors suffice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticCertificate {
    /// Hash binding the certificate to one graph.
    pub graph_sha256: String,
    /// The exact chromatic number.
    pub chi: u32,
    /// Pairwise-adjacent node ids (ascending).
    pub clique: Vec<u32>,
    /// Proper coloring, one 1-based color in `1..=chi` per node.
    pub coloring: Vec<u32>,
}

impl ChromaticCertificate {
    /// Re-checks every independently checkable clause against `g`.
    pub fn verify(&self, g: &Graph) -> Result<(), String> {
        if self.graph_sha256 != graph_sha256(g) {
            return Err("graph hash mismatch".into());
        }
        if self.coloring.len() != g.n() {
            return Err(format!(
                "coloring has {} entries for {} nodes",
                self.coloring.len(),
                g.n()
            ));
        }
        if let Some(&bad) = self.coloring.iter().find(|&&c| c == 0 || c > self.chi) {
            return Err(format!("color {bad} outside 1..={}", self.chi));
        }
        if let Err(viol) = is_proper_coloring(g, &self.coloring) {
            return Err(format!("coloring not proper at edge ({}, {})", viol.u, viol.v));
        }
        for (i, &u) in self.clique.iter().enumerate() {
            if u as usize >= g.n() {
                return Err(format!("clique node {u} out of range"));
            }
            for &v in &self.clique[i + 1..] {
                if u == v || !g.has_edge(u, v) {
                    return Err(format!("clique nodes {u}, {v} not adjacent"));
                }
            }
        }
        if self.clique.len() as u32 > self.chi {
            return Err(format!(
                "clique of size {} contradicts chi = {}",
                self.clique.len(),
                self.chi
            ));
        }
        Ok(())
    }

    /// Pretty JSON form (`{graph_sha256, chi, clique, coloring}`).
    #[must_use]
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    /// Parses the JSON form.
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
