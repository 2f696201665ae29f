//! The bit-exact partition text format and the linear-combination format.
//!
//! Grammar:
//!
//! ```text
//! partition := "P(" side ";" side ")"
//! side      := token*            (space separated)
//! token     := label (":" color)?
//! label     := [A-Za-z0-9_]+     (same label = same block)
//! color     := "t" | "w" | "b"   (absent = line)
//! ```
//!
//! Serialization names multi-point blocks `a, b, c, ...` and singleton
//! blocks `x, y, z, x1, y1, ...`, each by first occurrence in reading order.
//!
//! Linear combinations: `lc := term ("+" term)*`, `term := scalar "*"
//! partition`, `scalar := rat | "(" rat ("+"|"-") rat "*sqrtN" ")"`. The
//! context N travels out of band.

use crate::error::{PartError, Result};
use crate::linear::Lin;
use crate::partition::{Color, Partition};
use crate::scalar::Scalar;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;
use std::collections::HashMap;

fn err(pos: usize, msg: impl Into<String>) -> PartError {
    PartError::SyntaxError { pos, msg: msg.into() }
}

/// Parse the `P(...)` partition format.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let s = text.trim();
    let base = text.len() - text.trim_start().len();
    if !s.starts_with("P(") {
        return Err(err(base, "expected `P(`"));
    }
    if !s.ends_with(')') {
        return Err(err(base + s.len(), "expected `)`"));
    }
    let inner = &s[2..s.len() - 1];
    let semi = inner.find(';').ok_or_else(|| err(base + 2, "expected `;` between sides"))?;
    let (upper_src, lower_src) = (&inner[..semi], &inner[semi + 1..]);

    let mut labels: HashMap<String, usize> = HashMap::new();
    let mut colors = Vec::new();
    let mut ids = Vec::new();
    let mut parse_side = |src: &str, off: usize| -> Result<usize> {
        let mut count = 0;
        let mut pos = 0;
        for tok in src.split_whitespace() {
            let tok_pos = off + src[pos..].find(tok).map(|p| p + pos).unwrap_or(pos);
            pos = tok_pos - off + tok.len();
            let (label, color) = match tok.split_once(':') {
                None => (tok, Color::Line),
                Some((l, c)) => {
                    let color = match c {
                        "t" => Color::Extra,
                        "w" => Color::White,
                        "b" => Color::Black,
                        _ => return Err(err(tok_pos, format!("unknown color `{c}`"))),
                    };
                    (l, color)
                }
            };
            if label.is_empty() || !label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(err(tok_pos, format!("bad label `{label}`")));
            }
            let next = labels.len();
            let id = *labels.entry(label.to_string()).or_insert(next);
            colors.push(color);
            ids.push(id);
            count += 1;
        }
        Ok(count)
    };
    let k = parse_side(upper_src, 2)?;
    parse_side(lower_src, 2 + semi + 1)?;

    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); labels.len()];
    for (pt, &id) in ids.iter().enumerate() {
        blocks[id].push(pt);
    }
    Partition::make(&colors[..k], &colors[k..], &blocks)
}

/// Serialize a partition; the output re-parses to an equal canonical value.
pub fn serialize_partition(p: &Partition) -> String {
    let blocks = p.blocks();
    let mut names: Vec<String> = vec![String::new(); blocks.len()];
    let mut multi = 0usize;
    let mut single = 0usize;
    for (b, block) in blocks.iter().enumerate() {
        names[b] = if block.len() > 1 { multi_name(multi) } else { single_name(single) };
        if block.len() > 1 {
            multi += 1;
        } else {
            single += 1;
        }
    }
    let token = |pt: usize| -> String {
        let name = &names[p.block_id(pt)];
        match p.point_colors()[pt] {
            Color::Line => name.clone(),
            Color::Extra => format!("{name}:t"),
            Color::White => format!("{name}:w"),
            Color::Black => format!("{name}:b"),
        }
    };
    let k = p.num_upper();
    let upper: Vec<String> = (0..k).map(&token).collect();
    let lower: Vec<String> = (k..p.len()).map(&token).collect();
    match (upper.is_empty(), lower.is_empty()) {
        (true, true) => "P(;)".to_string(),
        (true, false) => format!("P(; {})", lower.join(" ")),
        (false, true) => format!("P({} ;)", upper.join(" ")),
        (false, false) => format!("P({} ; {})", upper.join(" "), lower.join(" ")),
    }
}

fn multi_name(i: usize) -> String {
    // a..w, then a1..w1, a2..
    const LETTERS: &[u8] = b"abcdefghijklmnopqrstuvw";
    let (q, r) = (i / LETTERS.len(), i % LETTERS.len());
    if q == 0 {
        (LETTERS[r] as char).to_string()
    } else {
        format!("{}{}", LETTERS[r] as char, q)
    }
}

fn single_name(i: usize) -> String {
    const LETTERS: &[u8] = b"xyz";
    let (q, r) = (i / LETTERS.len(), i % LETTERS.len());
    if q == 0 {
        (LETTERS[r] as char).to_string()
    } else {
        format!("{}{}", LETTERS[r] as char, q)
    }
}

/// Parse a rational `int ("/" int)?`.
fn parse_rat(s: &str, pos: usize) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        None => (s, "1"),
        Some((n, d)) => (n.trim(), d.trim()),
    };
    let n: BigInt = num.parse().map_err(|_| err(pos, format!("bad integer `{num}`")))?;
    let d: BigInt = den.parse().map_err(|_| err(pos, format!("bad integer `{den}`")))?;
    if d.is_zero() {
        return Err(err(pos, "zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

/// Parse a scalar: `rat` or `"(" rat ("+"|"-") rat "*sqrtN" ")"`.
pub fn parse_scalar(s: &str, root: u32, pos: usize) -> Result<Scalar> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        let idx = inner[1..]
            .find(['+', '-'])
            .map(|i| i + 1)
            .ok_or_else(|| err(pos, "expected `a+b*sqrtN` or `a-b*sqrtN`"))?;
        let sign = if inner.as_bytes()[idx] == b'+' { 1 } else { -1 };
        let a = parse_rat(&inner[..idx], pos)?;
        let rest = inner[idx + 1..]
            .trim()
            .strip_suffix("*sqrtN")
            .ok_or_else(|| err(pos, "expected `*sqrtN` suffix"))?;
        let b = parse_rat(rest, pos)?;
        let b = if sign < 0 { -b } else { b };
        Ok(Scalar::new(a, b, root))
    } else {
        Ok(Scalar::from_rational(parse_rat(s, pos)?))
    }
}

/// Parse a linear combination `term ("+" term)*` with context `n`.
///
/// The root of quadratic scalars is taken to be `n` itself (the usual
/// context); pass a different `root` if the combination carries
/// coefficients from a larger field.
pub fn parse_lc(text: &str, n: u32, root: u32) -> Result<Lin> {
    let mut acc: Option<Lin> = None;
    // split on '+' at depth zero of parentheses
    let mut depth = 0usize;
    let mut start = 0usize;
    let mut pieces: Vec<(usize, &str)> = Vec::new();
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            '+' if depth == 0 => {
                pieces.push((start, &text[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push((start, &text[start..]));
    for (pos, piece) in pieces {
        let piece_t = piece.trim();
        if piece_t.is_empty() {
            return Err(err(pos, "empty term"));
        }
        let p_idx = piece_t.find("P(").ok_or_else(|| err(pos, "term has no partition"))?;
        let head = piece_t[..p_idx].trim();
        let head = head.strip_suffix('*').map(|h| h.trim()).unwrap_or(head);
        let coeff = if head.is_empty() {
            Scalar::from_integer(1)
        } else {
            parse_scalar(head, root, pos)?
        };
        let p = parse_partition(&piece_t[p_idx..])?;
        let term = Lin::from_partition(p, n).scale(&coeff);
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term)?,
        });
    }
    acc.ok_or_else(|| err(0, "empty linear combination"))
}

/// Serialize a linear combination as `scalar * P(...) + ...`.
pub fn serialize_lc(lc: &Lin) -> String {
    if lc.terms().next().is_none() {
        return "0".to_string();
    }
    lc.terms()
        .map(|(p, c)| format!("{} * {}", c, serialize_partition(p)))
        .collect::<Vec<_>>()
        .join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn parse_pair() {
        let p = parse_partition("P(; a a)").unwrap();
        assert_eq!(p, generators::pairpart());
    }

    #[test]
    fn parse_positionerext() {
        let p = parse_partition("P(a x:t ; y:t a)").unwrap();
        assert_eq!(p, generators::positionerext());
    }

    #[test]
    fn parse_globcolext() {
        let p = parse_partition("P(a b x:t ; y:t a b)").unwrap();
        assert_eq!(p, generators::globcolext());
    }

    #[test]
    fn serialize_uses_block_then_singleton_names() {
        assert_eq!(serialize_partition(&generators::pairpart()), "P(; a a)");
        assert_eq!(serialize_partition(&generators::positionerext()), "P(a x:t ; y:t a)");
        assert_eq!(serialize_partition(&generators::globcolext()), "P(a b x:t ; y:t a b)");
        assert_eq!(serialize_partition(&Partition::empty()), "P(;)");
    }

    #[test]
    fn syntax_error_has_position() {
        let e = parse_partition("P(a ; a:q)").unwrap_err();
        match e {
            PartError::SyntaxError { pos, .. } => assert!(pos > 0),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn scalar_roundtrip() {
        let s = parse_scalar("(1/2+3*sqrtN)", 5, 0).unwrap();
        assert_eq!(s.to_string(), "(1/2+3*sqrtN)");
        let t = parse_scalar("(0-1/3*sqrtN)", 5, 0).unwrap();
        assert_eq!(t.to_string(), "(0-1/3*sqrtN)");
        assert_eq!(parse_scalar("7/2", 5, 0).unwrap(), Scalar::ratio(7, 2));
    }
}
