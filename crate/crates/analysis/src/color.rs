//! Color values used by the decomposition-driven coloring pipeline.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A pipeline color: either the shared reserved color (`Hidden`), a
/// palette pair `(a, b)` (cluster color `a`, palette index `b >= 1`), or a
/// plain integer after the final remap.
///
/// `Hidden` compares equal only to `Hidden`; it is an ordinary color value
/// for properness purposes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    /// The reserved color shared by all palettes (the pipeline's `-1`).
    Hidden,
    /// Palette pair: cluster color `a` (1-based), palette index `b >= 1`.
    Pair { a: u32, b: u32 },
    /// A plain remapped color in `1..=c`.
    Int(u32),
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::Hidden => write!(f, "-1"),
            Color::Pair { a, b } => write!(f, "({a},{b})"),
            Color::Int(x) => write!(f, "{x}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::Color;

    #[test]
    fn hidden_equals_only_hidden() {
        assert_eq!(Color::Hidden, Color::Hidden);
        assert_ne!(Color::Hidden, Color::Int(0));
        assert_ne!(Color::Hidden, Color::Pair { a: 1, b: 1 });
        assert_ne!(Color::Pair { a: 1, b: 2 }, Color::Pair { a: 2, b: 1 });
        assert_eq!(Color::Pair { a: 1, b: 2 }, Color::Pair { a: 1, b: 2 });
    }

    #[test]
    fn display_forms() {
        assert_eq!(Color::Hidden.to_string(), "-1");
        assert_eq!(Color::Pair { a: 2, b: 1 }.to_string(), "(2,1)");
        assert_eq!(Color::Int(7).to_string(), "7");
    }
}
