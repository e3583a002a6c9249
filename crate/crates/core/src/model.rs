//! Vertex sets, bicliques and coverings.
//!
//! Vertices are dense indices `0..n`. A [`Covering`] is plain data: it may
//! hold malformed bicliques, which [`validate_covering`] reports. Every
//! operation that needs a well-formed covering checks it first.

use std::fmt;

use crate::error::CoverError;

/// A sorted, duplicate-free set of vertex indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<u32>);

impl VertexSet {
    /// Accepts `members` only if they are strictly increasing.
    pub fn new(members: Vec<u32>) -> Result<Self, CoverError> {
        if let Some(w) = members.windows(2).find(|w| w[0] >= w[1]) {
            return Err(CoverError::InvalidInput(format!(
                "members not ascending: {} followed by {}",
                w[0], w[1]
            )));
        }
        Ok(VertexSet(members))
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// The block `start..end`.
    pub fn range(start: u32, end: u32) -> Self {
        VertexSet((start..end).collect())
    }

    pub fn members(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn max(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// Smallest member shared with `other`, if any.
    pub fn first_common(&self, other: &VertexSet) -> Option<u32> {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return Some(self.0[i]),
            }
        }
        None
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.first_common(other).is_none()
    }

    /// Splits into the first `k` members and the rest.
    pub fn split_at(&self, k: usize) -> (VertexSet, VertexSet) {
        let k = k.min(self.0.len());
        (
            VertexSet(self.0[..k].to_vec()),
            VertexSet(self.0[k..].to_vec()),
        )
    }
}

impl FromIterator<u32> for VertexSet {
    /// Collects in any order; duplicates are merged.
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut v: Vec<u32> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// A complete bipartite graph between `left` and `right`.
///
/// Well-formed bicliques have two disjoint nonempty components; the
/// constructor does not enforce this so that malformed input can be
/// represented and reported.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Biclique {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl Biclique {
    pub fn new(left: VertexSet, right: VertexSet) -> Self {
        Biclique { left, right }
    }

    /// Like [`Biclique::new`] but rejects empty or overlapping components.
    pub fn try_new(left: VertexSet, right: VertexSet) -> Result<Self, CoverError> {
        let b = Biclique { left, right };
        let mut found = Vec::new();
        b.check(0, None, &mut found);
        if found.is_empty() {
            Ok(b)
        } else {
            Err(CoverError::InvalidCovering(found))
        }
    }

    /// `|left| + |right|`.
    pub fn size(&self) -> usize {
        self.left.len() + self.right.len()
    }

    /// `max(|left|, |right|)`.
    pub fn component_size(&self) -> usize {
        self.left.len().max(self.right.len())
    }

    pub fn edge_count(&self) -> u64 {
        self.left.len() as u64 * self.right.len() as u64
    }

    /// Whether `{u, v}` has one endpoint in each component.
    pub fn covers(&self, u: u32, v: u32) -> bool {
        (self.left.contains(u) && self.right.contains(v))
            || (self.left.contains(v) && self.right.contains(u))
    }

    fn check(&self, index: usize, n: Option<u32>, out: &mut Vec<Violation>) {
        if self.left.is_empty() {
            out.push(Violation::EmptyComponent {
                biclique: index,
                side: Side::Left,
            });
        }
        if self.right.is_empty() {
            out.push(Violation::EmptyComponent {
                biclique: index,
                side: Side::Right,
            });
        }
        if let Some(vertex) = self.left.first_common(&self.right) {
            out.push(Violation::Overlap {
                biclique: index,
                vertex,
            });
        }
        if let Some(n) = n {
            for vertex in self.left.iter().chain(self.right.iter()) {
                if vertex >= n {
                    out.push(Violation::OutOfRange {
                        biclique: index,
                        vertex,
                        n,
                    });
                }
            }
        }
    }
}

impl fmt::Display for Biclique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

/// A claimed edge-covering of `K_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Covering {
    pub n: u32,
    pub bicliques: Vec<Biclique>,
}

impl Covering {
    pub fn new(n: u32, bicliques: Vec<Biclique>) -> Self {
        Covering { n, bicliques }
    }

    pub fn len(&self) -> usize {
        self.bicliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bicliques.is_empty()
    }

    /// Largest component over all bicliques, 0 for an empty covering.
    pub fn max_component_size(&self) -> usize {
        self.bicliques
            .iter()
            .map(Biclique::component_size)
            .max()
            .unwrap_or(0)
    }

    pub fn size_sum(&self) -> u64 {
        self.bicliques.iter().map(|b| b.size() as u64).sum()
    }

    pub fn validate(&self) -> Vec<Violation> {
        validate_covering(self)
    }

    pub(crate) fn ensure_valid(&self) -> Result<(), CoverError> {
        let violations = validate_covering(self);
        if violations.is_empty() {
            Ok(())
        } else {
            Err(CoverError::InvalidCovering(violations))
        }
    }
}

/// One broken rule in a covering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyGround,
    EmptyComponent {
        biclique: usize,
        side: Side,
    },
    Overlap {
        biclique: usize,
        vertex: u32,
    },
    OutOfRange {
        biclique: usize,
        vertex: u32,
        n: u32,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyGround => f.write_str("ground set is empty (n = 0)"),
            Violation::EmptyComponent { biclique, side } => {
                write!(f, "biclique {biclique} has an empty {side} component")
            }
            Violation::Overlap { biclique, vertex } => write!(
                f,
                "biclique {biclique} components not disjoint (vertex {vertex} on both sides)"
            ),
            Violation::OutOfRange {
                biclique,
                vertex,
                n,
            } => {
                write!(
                    f,
                    "biclique {biclique} vertex {vertex} out of range (n = {n})"
                )
            }
        }
    }
}

/// Lists every broken rule; empty means the covering is well formed.
///
/// Completeness is not checked here.
pub fn validate_covering(cov: &Covering) -> Vec<Violation> {
    let mut out = Vec::new();
    if cov.n == 0 {
        out.push(Violation::EmptyGround);
    }
    for (i, b) in cov.bicliques.iter().enumerate() {
        b.check(i, Some(cov.n), &mut out);
    }
    out
}
