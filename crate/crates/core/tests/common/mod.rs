//! Test-only oracles. Nothing here calls the verifiers or search code it
//! is used to check.
#![allow(dead_code)]

use biclique_cover::{Biclique, Covering, VertexSet};
use rand::Rng;

/// Pairwise check straight from the definition.
pub fn covers_all_pairs(cov: &Covering) -> bool {
    (0..cov.n).all(|u| (u + 1..cov.n).all(|v| cov.bicliques.iter().any(|b| b.covers(u, v))))
}

/// Every well-formed biclique on `n` vertices (components at most `x_max`),
/// one per unordered pair of sides.
pub fn all_bicliques(n: u32, x_max: Option<u32>) -> Vec<Biclique> {
    let cap = x_max.unwrap_or(n) as usize;
    let mut out = Vec::new();
    let total = 3u64.pow(n);
    for code in 0..total {
        let (mut left, mut right) = (Vec::new(), Vec::new());
        let mut c = code;
        for v in 0..n {
            match c % 3 {
                1 => left.push(v),
                2 => right.push(v),
                _ => {}
            }
            c /= 3;
        }
        if left.is_empty() || right.is_empty() || left.len() > cap || right.len() > cap {
            continue;
        }
        // Keep one orientation: the side holding the smallest vertex is left.
        if left[0] > right[0] {
            continue;
        }
        out.push(Biclique::new(
            VertexSet::new(left).unwrap(),
            VertexSet::new(right).unwrap(),
        ));
    }
    out
}

fn pair_mask(n: u32, b: &Biclique) -> u64 {
    let mut m = 0u64;
    let mut id = 0;
    for u in 0..n {
        for v in u + 1..n {
            if b.covers(u, v) {
                m |= 1 << id;
            }
            id += 1;
        }
    }
    m
}

/// True minimum by trying every set of bicliques in order of size.
/// Repeating a biclique never helps, so sets suffice for multisets.
pub fn exhaustive_min(n: u32, x_max: Option<u32>, give_up_above: usize) -> Option<usize> {
    let pairs = n * (n - 1) / 2;
    if pairs == 0 {
        return Some(0);
    }
    let full = if pairs == 64 {
        u64::MAX
    } else {
        (1u64 << pairs) - 1
    };
    let masks: Vec<u64> = all_bicliques(n, x_max)
        .iter()
        .map(|b| pair_mask(n, b))
        .collect();

    fn any_cover(masks: &[u64], start: usize, left: usize, acc: u64, full: u64) -> bool {
        if acc == full {
            return true;
        }
        if left == 0 {
            return false;
        }
        (start..masks.len()).any(|i| any_cover(masks, i + 1, left - 1, acc | masks[i], full))
    }

    (1..=give_up_above).find(|&k| any_cover(&masks, 0, k, 0, full))
}

/// A random well-formed covering on `n` vertices, not necessarily complete.
pub fn random_covering<R: Rng>(rng: &mut R, n: u32, count: usize) -> Covering {
    let bicliques = (0..count).filter_map(|_| random_biclique(rng, n)).collect();
    Covering::new(n, bicliques)
}

pub fn random_biclique<R: Rng>(rng: &mut R, n: u32) -> Option<Biclique> {
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for v in 0..n {
        match rng.gen_range(0..3) {
            0 => left.push(v),
            1 => right.push(v),
            _ => {}
        }
    }
    if left.is_empty() || right.is_empty() {
        return None;
    }
    Some(Biclique::new(
        VertexSet::new(left).unwrap(),
        VertexSet::new(right).unwrap(),
    ))
}

/// Adds random bicliques until every pair is covered.
pub fn random_complete_covering<R: Rng>(rng: &mut R, n: u32) -> Covering {
    let mut cov = Covering::new(n, vec![]);
    while !covers_all_pairs(&cov) {
        if let Some(b) = random_biclique(rng, n) {
            cov.bicliques.push(b);
        }
    }
    cov
}
