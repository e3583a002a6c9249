//! Explicit coverings of `K_n`.
//!
//! * [`bitstring_cover`]: `⌈log2 n⌉` bicliques from distinct binary codes.
//! * [`balanced_cover`]: `⌈log2 2x⌉` copies of `K_{x,x}` covering `K_{2x}`.
//! * [`partition_cover`]: component size at most `x` for any `n`, built
//!   from blocks of `2x` vertices joined pairwise by [`cross_cover`].

use std::fmt;

use crate::error::CoverError;
use crate::log2::ceil_log2;
use crate::model::{Biclique, Covering, VertexSet};

/// A fixed-length binary code word. Index 0 is the most significant bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bitstring {
    value: u64,
    len: u32,
}

impl Bitstring {
    pub fn new(value: u64, len: u32) -> Self {
        assert!(
            len <= 64 && (len == 64 || value >> len == 0),
            "{value} does not fit in {len} bits"
        );
        Bitstring { value, len }
    }

    pub fn len(&self) -> u32 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bit(&self, index: u32) -> bool {
        assert!(index < self.len);
        self.value >> (self.len - 1 - index) & 1 == 1
    }

    pub fn complement(&self) -> Self {
        let mask = if self.len == 64 {
            u64::MAX
        } else {
            (1 << self.len) - 1
        };
        Bitstring {
            value: !self.value & mask,
            len: self.len,
        }
    }

    /// Puts `bit` in front, at index 0.
    pub fn prepend(&self, bit: bool) -> Self {
        Bitstring::new(self.value | (bit as u64) << self.len, self.len + 1)
    }
}

impl fmt::Display for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.bit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Binary representations of `0..count`, each `⌈log2 count⌉` bits long.
fn binary_codes(count: u32) -> Vec<Bitstring> {
    let len = ceil_log2(count as u64);
    (0..count as u64).map(|v| Bitstring::new(v, len)).collect()
}

/// One biclique per code index: zeros on the left, ones on the right.
/// Vertex `v` carries `codes[v]`; all codes must share one length.
fn cover_from_codes(codes: &[Bitstring]) -> Covering {
    let len = codes.first().map_or(0, Bitstring::len);
    let bicliques = (0..len)
        .map(|i| {
            let (ones, zeros): (Vec<u32>, Vec<u32>) =
                (0..codes.len() as u32).partition(|&v| codes[v as usize].bit(i));
            Biclique::new(
                VertexSet::new(zeros).unwrap(),
                VertexSet::new(ones).unwrap(),
            )
        })
        .collect();
    Covering::new(codes.len() as u32, bicliques)
}

pub fn bitstring_cover(n: u32) -> Result<Covering, CoverError> {
    if n == 0 {
        return Err(CoverError::InvalidInput("n must be at least 1".into()));
    }
    Ok(cover_from_codes(&binary_codes(n)))
}

/// Covers `K_{2x}` with `⌈log2 2x⌉` bicliques, each exactly `K_{x,x}`.
///
/// Vertices `0..x` get `0 ‖ code(v)`, vertices `x..2x` get
/// `1 ‖ !code(v − x)`, where `code` is the binary code of [`bitstring_cover`].
pub fn balanced_cover(x: u32) -> Result<Covering, CoverError> {
    if x == 0 {
        return Err(CoverError::InvalidInput("x must be at least 1".into()));
    }
    if x > u32::MAX / 2 {
        return Err(CoverError::InvalidInput(format!("x = {x} is too large")));
    }
    let base = binary_codes(x);
    let codes: Vec<Bitstring> = base
        .iter()
        .map(|c| c.prepend(false))
        .chain(base.iter().map(|c| c.complement().prepend(true)))
        .collect();
    Ok(cover_from_codes(&codes))
}

/// Bicliques with components of size at most `x` covering exactly the
/// pairs between `a` and `b`.
///
/// Each group is split into its first `min(x, |group|)` members and the
/// rest; the up to four pairings of halves are returned, skipping pairings
/// with an empty half.
pub fn cross_cover(a: &VertexSet, b: &VertexSet, x: u32) -> Result<Vec<Biclique>, CoverError> {
    if x == 0 {
        return Err(CoverError::InvalidInput("x must be at least 1".into()));
    }
    if a.is_empty() || b.is_empty() {
        return Err(CoverError::InvalidInput(
            "cross cover groups must be nonempty".into(),
        ));
    }
    if let Some(v) = a.first_common(b) {
        return Err(CoverError::InvalidInput(format!(
            "groups overlap at vertex {v}"
        )));
    }
    let cap = 2 * x as usize;
    if a.len() > cap || b.len() > cap {
        return Err(CoverError::InvalidInput(format!(
            "group sizes {} and {} exceed 2x = {cap}",
            a.len(),
            b.len()
        )));
    }
    let (a1, a2) = a.split_at(x as usize);
    let (b1, b2) = b.split_at(x as usize);
    let pairings = [(&a1, &b1), (&a1, &b2), (&a2, &b1), (&a2, &b2)];
    Ok(pairings
        .into_iter()
        .filter(|(l, r)| !l.is_empty() && !r.is_empty())
        .map(|(l, r)| Biclique::new(l.clone(), r.clone()))
        .collect())
}

/// Relabels `keep` to `0..|keep|` and intersects every biclique with it,
/// dropping bicliques that lose a whole component.
pub fn restrict_covering(cov: &Covering, keep: &VertexSet) -> Result<Covering, CoverError> {
    if keep.is_empty() {
        return Err(CoverError::InvalidInput(
            "cannot restrict to an empty vertex set".into(),
        ));
    }
    if let Some(v) = keep.max().filter(|&v| v >= cov.n) {
        return Err(CoverError::InvalidInput(format!(
            "vertex {v} not in 0..{}",
            cov.n
        )));
    }
    let mut relabel = vec![None; cov.n as usize];
    for (i, v) in keep.iter().enumerate() {
        relabel[v as usize] = Some(i as u32);
    }
    let project = |s: &VertexSet| -> VertexSet {
        s.iter()
            .filter_map(|v| relabel.get(v as usize).copied().flatten())
            .collect()
    };
    let bicliques = cov
        .bicliques
        .iter()
        .map(|b| Biclique::new(project(&b.left), project(&b.right)))
        .filter(|b| !b.left.is_empty() && !b.right.is_empty())
        .collect();
    Ok(Covering::new(keep.len() as u32, bicliques))
}

/// Consecutive blocks `[0, 2x), [2x, 4x), …` of `0..n`; only the last
/// block may be short.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPartition {
    pub groups: Vec<VertexSet>,
    pub group_capacity: u64,
}

impl GroupPartition {
    pub fn consecutive(n: u32, x: u32) -> Result<Self, CoverError> {
        if n == 0 || x == 0 {
            return Err(CoverError::InvalidInput(
                "n and x must be at least 1".into(),
            ));
        }
        let capacity = 2 * x as u64;
        let step = capacity.min(n as u64) as u32;
        let groups = (0..n)
            .step_by(step as usize)
            .map(|start| VertexSet::range(start, start.saturating_add(step).min(n)))
            .collect();
        Ok(GroupPartition {
            groups,
            group_capacity: capacity,
        })
    }
}

/// Intra-group covering: `balanced_cover(⌈g/2⌉)` restricted to the first
/// `g` vertices, then mapped onto the group's labels.
fn group_cover(group: &VertexSet) -> Result<Vec<Biclique>, CoverError> {
    let g = group.len() as u32;
    let padded = balanced_cover(g.div_ceil(2))?;
    let local = restrict_covering(&padded, &VertexSet::range(0, g))?;
    let label =
        |s: &VertexSet| -> VertexSet { s.iter().map(|v| group.members()[v as usize]).collect() };
    Ok(local
        .bicliques
        .iter()
        .map(|b| Biclique::new(label(&b.left), label(&b.right)))
        .collect())
}

/// Covers `K_n` with bicliques whose components have at most `x` vertices,
/// using at most `4·C(g, 2) + g·⌈log2 2x⌉` of them, `g = ⌈n/2x⌉`.
///
/// Intra-group bicliques come first in group order, then cross bicliques
/// for each pair of groups in lexicographic order.
pub fn partition_cover(n: u32, x: u32) -> Result<Covering, CoverError> {
    let partition = GroupPartition::consecutive(n, x)?;
    let mut bicliques = Vec::new();
    for group in &partition.groups {
        bicliques.extend(group_cover(group)?);
    }
    for (i, a) in partition.groups.iter().enumerate() {
        for b in &partition.groups[i + 1..] {
            bicliques.extend(cross_cover(a, b, x)?);
        }
    }
    Ok(Covering::new(n, bicliques))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{is_complete_direct, is_complete_matrix};

    fn vs(v: &[u32]) -> VertexSet {
        VertexSet::new(v.to_vec()).unwrap()
    }

    fn complete(cov: &Covering) -> bool {
        let d = is_complete_direct(cov).unwrap().is_complete();
        assert_eq!(d, is_complete_matrix(cov).unwrap().is_complete());
        d
    }

    #[test]
    fn bitstring_small() {
        let one = bitstring_cover(1).unwrap();
        assert!(one.is_empty() && complete(&one));
        let two = bitstring_cover(2).unwrap();
        assert_eq!(two.bicliques, vec![Biclique::new(vs(&[0]), vs(&[1]))]);
        let five = bitstring_cover(5).unwrap();
        assert_eq!(five.len(), 3);
        assert!(complete(&five));
        // Codes 000..100: index 0 splits {0..3} from {4}.
        assert_eq!(
            five.bicliques[0],
            Biclique::new(vs(&[0, 1, 2, 3]), vs(&[4]))
        );
        assert!(bitstring_cover(0).is_err());
    }

    #[test]
    fn bitstring_ops() {
        let b = Bitstring::new(0b011, 3);
        assert_eq!(b.to_string(), "011");
        assert_eq!(b.complement().to_string(), "100");
        assert_eq!(b.prepend(true).to_string(), "1011");
        assert_eq!(Bitstring::new(0, 0).prepend(false).to_string(), "0");
    }

    #[test]
    fn balanced_small() {
        let one = balanced_cover(1).unwrap();
        assert_eq!(one.n, 2);
        assert_eq!(one.bicliques, vec![Biclique::new(vs(&[0]), vs(&[1]))]);
        for x in [2, 3] {
            let cov = balanced_cover(x).unwrap();
            assert_eq!(cov.n, 2 * x);
            assert_eq!(cov.len(), ceil_log2(2 * x as u64) as usize);
            assert!(cov
                .bicliques
                .iter()
                .all(|b| b.left.len() == x as usize && b.right.len() == x as usize));
            assert!(complete(&cov));
        }
        assert!(balanced_cover(0).is_err());
    }

    #[test]
    fn cross_cover_examples() {
        assert_eq!(
            cross_cover(&vs(&[0]), &vs(&[1]), 1).unwrap(),
            vec![Biclique::new(vs(&[0]), vs(&[1]))]
        );
        let full = cross_cover(&vs(&[0, 1, 2, 3]), &vs(&[4, 5, 6, 7]), 2).unwrap();
        assert_eq!(full.len(), 4);
        assert!(full.iter().all(|b| b.left.len() == 2 && b.right.len() == 2));

        let a = vs(&[0, 1, 2]);
        let b = vs(&[3, 4]);
        let out = cross_cover(&a, &b, 2).unwrap();
        assert_eq!(out.len(), 2);
        // Every one of the 6 cross pairs, and nothing else.
        for u in 0..5 {
            for v in u + 1..5 {
                let crossing = a.contains(u) && b.contains(v);
                assert_eq!(out.iter().any(|bc| bc.covers(u, v)), crossing, "{u} {v}");
            }
        }
    }

    #[test]
    fn cross_cover_rejects_bad_groups() {
        assert!(cross_cover(&vs(&[0, 1]), &vs(&[1, 2]), 2).is_err());
        assert!(cross_cover(&vs(&[0, 1, 2]), &vs(&[3]), 1).is_err());
        assert!(cross_cover(&VertexSet::empty(), &vs(&[3]), 1).is_err());
    }

    #[test]
    fn restrict_examples() {
        let k3 = restrict_covering(&balanced_cover(2).unwrap(), &vs(&[0, 1, 2])).unwrap();
        assert_eq!(k3.n, 3);
        assert!(complete(&k3));
        assert!(k3.max_component_size() <= 2);

        let cov = bitstring_cover(6).unwrap();
        let same = restrict_covering(&cov, &VertexSet::range(0, 6)).unwrap();
        assert_eq!(same, cov);

        let single = restrict_covering(&cov, &vs(&[4])).unwrap();
        assert_eq!(single, Covering::new(1, vec![]));
        assert!(restrict_covering(&cov, &vs(&[6])).is_err());
    }

    #[test]
    fn partition_examples() {
        let cov = partition_cover(4, 1).unwrap();
        assert_eq!(cov.len(), 6);
        assert!(cov
            .bicliques
            .iter()
            .all(|b| b.left.len() == 1 && b.right.len() == 1));
        assert!(complete(&cov));

        for x in 1..6 {
            let single = partition_cover(2 * x, x).unwrap();
            assert_eq!(single, balanced_cover(x).unwrap());
        }

        let cov = partition_cover(10, 2).unwrap();
        assert!(cov.len() <= 18);
        assert!(cov.max_component_size() <= 2);
        assert!(complete(&cov));
    }

    #[test]
    fn groups_are_consecutive_blocks() {
        let p = GroupPartition::consecutive(10, 2).unwrap();
        assert_eq!(
            p.groups,
            vec![
                VertexSet::range(0, 4),
                VertexSet::range(4, 8),
                VertexSet::range(8, 10)
            ]
        );
        let p = GroupPartition::consecutive(3, 5).unwrap();
        assert_eq!(p.groups, vec![VertexSet::range(0, 3)]);
    }
}
