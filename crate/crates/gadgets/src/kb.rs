//! Quadrangulation-quotient gadgets on the Klein bottle.
//!
//! Take the `(W+1) x (H+1)` grid `H_{W,H}` with coordinates
//! `[0,W] x [0,H]` and glue its boundary by `(i,0) ~ (W-i,H)` and
//! `(0,j) ~ (W,j)`. The quotient `G_{W,H}` has `W*H` nodes, quadrilateral
//! faces, and — for odd `W` — no consistent face orientation, which forces
//! its chromatic number to 4 even though every bounded-radius view is a
//! bipartite grid patch.

use analysis::DEFAULT_SOLVER_BUDGET;
use graph_core::{Graph, NodeSet};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::cover::{compute_certificate, lattice_patch, CoverFamily, SubgraphCover};
use crate::error::GadgetError;

/// Representative of pre-quotient coordinate `(i, j)`, `0 <= i <= w`,
/// `0 <= j <= h`, under the gluing rules.
fn rep(w: u32, h: u32, mut i: u32, mut j: u32) -> (u32, u32) {
    if j == h {
        i = w - i;
        j = 0;
    }
    if i == w {
        i = 0;
    }
    (i, j)
}

fn node_id(w: u32, (i, j): (u32, u32)) -> u32 {
    j * w + i
}

fn check_kb_params(w: u32, h: u32) -> Result<(), GadgetError> {
    if w < 2 || h < 2 {
        return Err(GadgetError::BadParams(format!(
            "quotient needs w and h at least 2, got ({w},{h})"
        )));
    }
    Ok(())
}

/// The quadrangulation-quotient gadget `G_{w,h}` with `w*h` nodes. Labels
/// record the representative coordinates `(i,j)` with `0 <= i < w`,
/// `0 <= j < h`; node ids are `j*w + i`.
pub fn kb_gadget(w: u32, h: u32) -> Result<Graph, GadgetError> {
    check_kb_params(w, h)?;
    let n = (w as usize) * (h as usize);
    let mut edges = Vec::with_capacity(4 * n);
    for j in 0..=h {
        for i in 0..w {
            edges.push((node_id(w, rep(w, h, i, j)), node_id(w, rep(w, h, i + 1, j))));
        }
    }
    for i in 0..=w {
        for j in 0..h {
            edges.push((node_id(w, rep(w, h, i, j)), node_id(w, rep(w, h, i, j + 1))));
        }
    }
    let labels = (0..n as u32).map(|v| format!("({},{})", v % w, v / w)).collect();
    Ok(Graph::build(n, edges)?.with_labels(labels))
}

/// Orientation parity of a quadrangulation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Parity {
    /// An even number of edges break the uniform face orientation.
    Even,
    /// An odd number do; the quotient is an odd quadrangulation.
    Odd,
}

/// Result of orienting every quadrilateral face of [`kb_gadget`] identically
/// and counting the edges traversed in the same direction by both incident
/// faces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityReport {
    /// Parity of the consistency-breaking edge count.
    pub parity: Parity,
    /// The breaking edges as quotient node pairs `(min, max)`, one entry per
    /// face-adjacency (when the gluing collapses two grid edges onto one
    /// quotient edge, that edge can appear twice).
    pub breaking_edges: Vec<(u32, u32)>,
}

/// Orients all `w*h` quadrilateral faces of the pre-quotient grid clockwise
/// in coordinates and reports which quotient edges are traversed in the same
/// direction by both of their incident faces.
pub fn kb_parity(w: u32, h: u32) -> Result<ParityReport, GadgetError> {
    check_kb_params(w, h)?;
    // A slot is the canonical pre-quotient identity of a glued edge:
    // (axis, x, y) with horizontal row-h edges folded onto row 0 and
    // vertical column-w edges folded onto column 0. Keying by slot rather
    // than by quotient edge keeps the two face-incidences of each grid edge
    // paired even when the quotient collapses distinct grid edges.
    const HORIZ: u8 = 0;
    const VERT: u8 = 1;
    let mut slots: BTreeMap<(u8, u32, u32), Vec<(u32, u32)>> = BTreeMap::new();
    let mut record = |(i1, j1): (u32, u32), (i2, j2): (u32, u32)| {
        let key = if j1 == j2 {
            let x = i1.min(i2);
            if j1 == h {
                (HORIZ, w - 1 - x, 0)
            } else {
                (HORIZ, x, j1)
            }
        } else {
            let y = j1.min(j2);
            if i1 == w {
                (VERT, 0, y)
            } else {
                (VERT, i1, y)
            }
        };
        let from = node_id(w, rep(w, h, i1, j1));
        let to = node_id(w, rep(w, h, i2, j2));
        slots.entry(key).or_default().push((from, to));
    };
    for fi in 0..w {
        for fj in 0..h {
            record((fi, fj), (fi + 1, fj));
            record((fi + 1, fj), (fi + 1, fj + 1));
            record((fi + 1, fj + 1), (fi, fj + 1));
            record((fi, fj + 1), (fi, fj));
        }
    }
    let mut breaking_edges = Vec::new();
    for (key, sides) in &slots {
        assert_eq!(sides.len(), 2, "slot {key:?} must border exactly two faces");
        let (a, b) = (sides[0], sides[1]);
        if a == b {
            breaking_edges.push((a.0.min(a.1), a.0.max(a.1)));
        } else {
            assert_eq!(a, (b.1, b.0), "slot {key:?} sides must share an edge");
        }
    }
    let parity = if breaking_edges.len() % 2 == 0 { Parity::Even } else { Parity::Odd };
    Ok(ParityReport { parity, breaking_edges })
}

/// The four-element subgraph cover of [`kb_gadget`]`(w, h)` for odd
/// `w, h >= 5`, certified at radius `T = floor((min(w,h) - 7) / 4)`
/// (clamped to 0).
///
/// Each element is a glued pair of coordinate bands whose quotient image is
/// a `(w+5)/2 x (h+5)/2` grid; its radius-`T` neighborhood is matched
/// against the corresponding lattice patch. The radius keeps the expansion
/// fronts at least one node apart in both the ring direction (width
/// `(w-5)/2 - 2T` of untouched columns) and across the gluing seam, which
/// fails for the naive `floor((min-5)/4)` when `min = 1 (mod 4)`: there the
/// fronts meet, every ring closes into an odd cycle, and no 4-element cover
/// can have bipartite neighborhoods at all. For `min(w,h) = 5` the bands
/// already overlap and the certificates record the failure honestly instead
/// of erroring.
pub fn kb_cover(w: u32, h: u32) -> Result<SubgraphCover, GadgetError> {
    if w < 5 || h < 5 || w % 2 == 0 || h % 2 == 0 {
        return Err(GadgetError::BadParams(format!(
            "covers need odd w and h at least 5, got ({w},{h})"
        )));
    }
    let host = kb_gadget(w, h)?;
    let min = w.min(h);
    let t = if min >= 7 { (min - 7) / 4 } else { 0 };

    // Inclusive pre-quotient index bands. The two column arcs each span
    // (w+5)/2 quotient columns and reflect onto each other through the seam;
    // the row bands tile the cylinder height in two overlapping ways.
    let arc_a: Vec<u32> = (0..=(w + 1) / 2).chain(w - 1..=w).collect();
    let arc_b: Vec<u32> = (0..=1).chain((w - 1) / 2..=w).collect();
    let low: Vec<u32> = (0..=(h + 1) / 2).collect();
    let seam: Vec<u32> = (h - 1..=h).collect();
    let tiny: Vec<u32> = (0..=1).collect();
    let high: Vec<u32> = ((h - 1) / 2..=h).collect();

    let band = |cols: &[u32], rows: &[u32]| -> Vec<u32> {
        let mut ids = Vec::with_capacity(cols.len() * rows.len());
        for &i in cols {
            for &j in rows {
                ids.push(node_id(w, rep(w, h, i, j)));
            }
        }
        ids
    };
    let element = |cols1: &[u32], rows1: &[u32], cols2: &[u32], rows2: &[u32]| {
        let mut ids = band(cols1, rows1);
        ids.extend(band(cols2, rows2));
        NodeSet::from_unsorted(ids)
    };
    let elements = vec![
        element(&arc_a, &low, &arc_b, &seam),
        element(&arc_b, &low, &arc_a, &seam),
        element(&arc_a, &tiny, &arc_b, &high),
        element(&arc_b, &tiny, &arc_a, &high),
    ];

    let reference = lattice_patch((w + 5) / 2, (h + 5) / 2, t).0;
    let certificates = elements
        .iter()
        .map(|e| compute_certificate(&host, e, t, Some(&reference), DEFAULT_SOLVER_BUDGET))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SubgraphCover { family: CoverFamily::Kb { w, h }, t, elements, certificates })
}
