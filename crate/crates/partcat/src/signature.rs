//! Signatures: the pair of color words typing a partition's rows.

use crate::error::{PartError, Result};
use crate::partition::Color;
use std::fmt;

/// Upper and lower color words of a partition or morphism space.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Signature {
    upper: Vec<Color>,
    lower: Vec<Color>,
}

impl Signature {
    pub fn new(upper: Vec<Color>, lower: Vec<Color>) -> Signature {
        Signature { upper, lower }
    }

    pub fn upper(&self) -> &[Color] {
        &self.upper
    }

    pub fn lower(&self) -> &[Color] {
        &self.lower
    }

    /// Total number of points.
    pub fn len(&self) -> usize {
        self.upper.len() + self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Composability of `q` after a partition with this signature: the
    /// lower word here must equal the upper word there.
    pub fn composable_with(&self, q: &Signature) -> bool {
        self.lower == q.upper
    }

    /// Parse `"<upper>;<lower>"` with one code character per point.
    pub fn parse(text: &str) -> Result<Signature> {
        let (u, l) = text.split_once(';').ok_or(PartError::SyntaxError {
            pos: 0,
            msg: "signature must be `<upper>;<lower>`".into(),
        })?;
        let word = |s: &str, off: usize| -> Result<Vec<Color>> {
            s.trim()
                .chars()
                .map(|c| {
                    Color::from_code(c).ok_or(PartError::SyntaxError {
                        pos: off,
                        msg: format!("unknown color code `{c}`"),
                    })
                })
                .collect()
        };
        Ok(Signature { upper: word(u, 0)?, lower: word(l, u.len() + 1)? })
    }
}

/// A color word as its code string (empty word prints as nothing).
pub fn word_string(w: &[Color]) -> String {
    w.iter().map(|c| c.code()).collect()
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", word_string(&self.upper), word_string(&self.lower))
    }
}
