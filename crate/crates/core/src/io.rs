//! The covering file format.
//!
//! A covering is a JSON document with `n` first and `bicliques` second:
//!
//! ```text
//! {
//!   "n": 4,
//!   "bicliques": [
//!     { "left": [0, 1], "right": [2, 3] },
//!     { "left": [0, 2], "right": [1, 3] }
//!   ]
//! }
//! ```
//!
//! Reading is strict: fields must appear in exactly this order, unknown
//! fields are rejected, member lists must be strictly ascending, in range
//! and nonempty, and the two sides of a biclique must be disjoint. Every
//! rejection carries the line and column where it was detected.

use std::fmt::{self, Write as _};

use serde::de::{self, DeserializeSeed, Deserializer, MapAccess, SeqAccess, Visitor};

use crate::error::CoverError;
use crate::model::{Biclique, Covering, Side, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based; 0 when the position is unknown.
    pub line: usize,
    /// 1-based; 0 when the position is unknown.
    pub column: usize,
    pub message: String,
    /// Text at or just before the error position.
    pub token: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {} column {}: {}",
            self.line, self.column, self.message
        )?;
        if !self.token.is_empty() {
            write!(f, " (near `{}`)", self.token)?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

fn token_at(input: &str, line: usize, column: usize) -> String {
    let Some(text) = input.lines().nth(line.saturating_sub(1)) else {
        return String::new();
    };
    let chars: Vec<char> = text.chars().collect();
    if chars.is_empty() {
        return String::new();
    }
    let is_word = |c: char| c.is_alphanumeric() || c == '-' || c == '"' || c == '_' || c == '.';
    let mut end = column.clamp(1, chars.len());
    while end > 1 && (chars[end - 1].is_whitespace() || chars[end - 1] == ',') {
        end -= 1;
    }
    if !is_word(chars[end - 1]) && end > 1 && is_word(chars[end - 2]) {
        end -= 1;
    }
    if !is_word(chars[end - 1]) {
        return chars[end - 1].to_string();
    }
    let mut start = end - 1;
    while start > 0 && is_word(chars[start - 1]) {
        start -= 1;
    }
    chars[start..end].iter().collect()
}

struct MembersSeed {
    n: u32,
    biclique: usize,
    side: Side,
}

impl<'de> DeserializeSeed<'de> for MembersSeed {
    type Value = VertexSet;

    fn deserialize<D: Deserializer<'de>>(self, d: D) -> Result<VertexSet, D::Error> {
        d.deserialize_seq(self)
    }
}

impl<'de> Visitor<'de> for MembersSeed {
    type Value = VertexSet;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an ascending array of vertex indices")
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<VertexSet, A::Error> {
        let mut members: Vec<u32> = Vec::new();
        while let Some(v) = seq.next_element::<u32>()? {
            if v >= self.n {
                return Err(de::Error::custom(format!(
                    "biclique {} vertex {v} out of range (n = {})",
                    self.biclique, self.n
                )));
            }
            if let Some(&last) = members.last() {
                if v <= last {
                    return Err(de::Error::custom(format!(
                        "members not ascending in biclique {} {} ({last} then {v})",
                        self.biclique, self.side
                    )));
                }
            }
            members.push(v);
        }
        if members.is_empty() {
            return Err(de::Error::custom(format!(
                "biclique {} has an empty {} component",
                self.biclique, self.side
            )));
        }
        Ok(VertexSet::new(members).expect("checked ascending"))
    }
}

/// Expects the next map key to be `want`.
fn expect_key<'de, A: MapAccess<'de>>(map: &mut A, want: &str) -> Result<(), A::Error> {
    match map.next_key::<String>()? {
        Some(k) if k == want => Ok(()),
        Some(k) => Err(de::Error::custom(format!(
            "expected field `{want}`, found `{k}`"
        ))),
        None => Err(de::Error::custom(format!("missing field `{want}`"))),
    }
}

fn expect_end<'de, A: MapAccess<'de>>(map: &mut A) -> Result<(), A::Error> {
    match map.next_key::<String>()? {
        None => Ok(()),
        Some(k) => Err(de::Error::custom(format!(
            "unknown or repeated field `{k}`"
        ))),
    }
}

struct BicliqueSeed {
    n: u32,
    index: usize,
}

impl<'de> DeserializeSeed<'de> for BicliqueSeed {
    type Value = Biclique;

    fn deserialize<D: Deserializer<'de>>(self, d: D) -> Result<Biclique, D::Error> {
        d.deserialize_map(self)
    }
}

impl<'de> Visitor<'de> for BicliqueSeed {
    type Value = Biclique;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an object with `left` and `right`")
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Biclique, A::Error> {
        let seed = |side| MembersSeed {
            n: self.n,
            biclique: self.index,
            side,
        };
        expect_key(&mut map, "left")?;
        let left = map.next_value_seed(seed(Side::Left))?;
        expect_key(&mut map, "right")?;
        let right = map.next_value_seed(seed(Side::Right))?;
        expect_end(&mut map)?;
        if let Some(v) = left.first_common(&right) {
            return Err(de::Error::custom(format!(
                "biclique {} components not disjoint (vertex {v} on both sides)",
                self.index
            )));
        }
        Ok(Biclique::new(left, right))
    }
}

struct BicliquesSeed {
    n: u32,
}

impl<'de> DeserializeSeed<'de> for BicliquesSeed {
    type Value = Vec<Biclique>;

    fn deserialize<D: Deserializer<'de>>(self, d: D) -> Result<Vec<Biclique>, D::Error> {
        d.deserialize_seq(self)
    }
}

impl<'de> Visitor<'de> for BicliquesSeed {
    type Value = Vec<Biclique>;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an array of bicliques")
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Vec<Biclique>, A::Error> {
        let mut out = Vec::new();
        while let Some(b) = seq.next_element_seed(BicliqueSeed {
            n: self.n,
            index: out.len(),
        })? {
            out.push(b);
        }
        Ok(out)
    }
}

struct CoveringVisitor;

impl<'de> Visitor<'de> for CoveringVisitor {
    type Value = Covering;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a covering object with `n` and `bicliques`")
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Covering, A::Error> {
        expect_key(&mut map, "n")?;
        let n: u32 = map.next_value()?;
        if n == 0 {
            return Err(de::Error::custom("n must be at least 1"));
        }
        expect_key(&mut map, "bicliques")?;
        let bicliques = map.next_value_seed(BicliquesSeed { n })?;
        expect_end(&mut map)?;
        Ok(Covering::new(n, bicliques))
    }
}

/// Parses a covering file, rejecting anything non-canonical in structure.
pub fn read_covering(bytes: &[u8]) -> Result<Covering, ParseError> {
    let text = String::from_utf8_lossy(bytes);
    let fail = |e: serde_json::Error| {
        // serde_json appends the position to the message; keep it separate.
        let full = e.to_string();
        let message = match full.rfind(" at line ") {
            Some(i) if e.line() > 0 => full[..i].to_string(),
            _ => full,
        };
        ParseError {
            line: e.line(),
            column: e.column(),
            token: token_at(&text, e.line(), e.column()),
            message,
        }
    };
    let mut de = serde_json::Deserializer::from_slice(bytes);
    let cov = de.deserialize_map(CoveringVisitor).map_err(fail)?;
    de.end().map_err(fail)?;
    Ok(cov)
}

fn write_members(out: &mut String, s: &VertexSet) {
    out.push('[');
    for (i, v) in s.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        write!(out, "{v}").unwrap();
    }
    out.push(']');
}

/// Canonical text of a well-formed covering, newline-terminated.
pub fn write_covering(cov: &Covering) -> Result<String, CoverError> {
    cov.ensure_valid()?;
    let mut out = String::new();
    writeln!(out, "{{\n  \"n\": {},", cov.n).unwrap();
    if cov.bicliques.is_empty() {
        out.push_str("  \"bicliques\": []\n}\n");
        return Ok(out);
    }
    out.push_str("  \"bicliques\": [\n");
    for (i, b) in cov.bicliques.iter().enumerate() {
        out.push_str("    { \"left\": ");
        write_members(&mut out, &b.left);
        out.push_str(", \"right\": ");
        write_members(&mut out, &b.right);
        out.push_str(" }");
        if i + 1 < cov.bicliques.len() {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("  ]\n}\n");
    Ok(out)
}
