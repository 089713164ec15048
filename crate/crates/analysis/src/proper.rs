//! Properness checking for colorings.

use graph_core::Graph;

/// A monochromatic edge found by [`is_proper_coloring`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProperViolation {
    pub u: u32,
    pub v: u32,
}

/// Checks that every edge is bichromatic. Returns the first violating edge
/// (in ascending `(u, v)` order) on failure. Works for any color value with
/// equality — in particular `Hidden` counts as an ordinary color value, so a
/// `Hidden`–`Hidden` edge is a violation.
///
/// # Panics
/// Panics if `colors.len() != g.n()`.
pub fn is_proper_coloring<T: PartialEq>(g: &Graph, colors: &[T]) -> Result<(), ProperViolation> {
    assert_eq!(colors.len(), g.n(), "coloring length must match node count");
    for (u, v) in g.edges() {
        if colors[u as usize] == colors[v as usize] {
            return Err(ProperViolation { u, v });
        }
    }
    Ok(())
}
