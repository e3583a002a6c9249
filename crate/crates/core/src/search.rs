//! Exact minimum coverings of small complete graphs by branch and bound.
//!
//! Each node picks the lexicographically least uncovered pair `{u, v}` and
//! branches over the bicliques with `u` on the left and `v` on the right
//! that cannot be enlarged (within the component bound). Enlarging a
//! biclique only adds edges, so some optimal covering uses only such
//! candidates. A node is cut when its depth plus a lower bound on the
//! bicliques still needed reaches the incumbent.

use crate::constructions::partition_cover;
use crate::error::CoverError;
use crate::log2::ceil_mul_log2_div;
use crate::model::{Biclique, Covering, VertexSet};
use crate::verify::is_complete_direct;

/// Largest `n` accepted without a component bound.
pub const MAX_N_UNBOUNDED: u32 = 9;
/// Largest `n` accepted with a component bound.
pub const MAX_N_BOUNDED: u32 = 7;
pub const DEFAULT_NODE_LIMIT: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: u32,
    /// Maximum component size; `None` for unbounded.
    pub x_max: Option<u32>,
    /// Defaults to [`DEFAULT_NODE_LIMIT`].
    pub node_limit: Option<u64>,
    /// Complete covering used as the initial incumbent.
    pub upper_seed: Option<Covering>,
    /// Also bound by the largest clique of uncovered pairs. Turning this
    /// off leaves only the edge-count bound.
    pub clique_bound: bool,
}

impl SearchConfig {
    pub fn new(n: u32) -> Self {
        SearchConfig {
            n,
            x_max: None,
            node_limit: None,
            upper_seed: None,
            clique_bound: true,
        }
    }

    pub fn with_x_max(mut self, x: u32) -> Self {
        self.x_max = Some(x);
        self
    }

    pub fn with_node_limit(mut self, limit: u64) -> Self {
        self.node_limit = Some(limit);
        self
    }

    pub fn with_seed(mut self, seed: Covering) -> Self {
        self.upper_seed = Some(seed);
        self
    }

    pub fn with_clique_bound(mut self, on: bool) -> Self {
        self.clique_bound = on;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub min_size: usize,
    pub optimal: Covering,
    pub nodes_explored: u64,
    /// The search ran to exhaustion without hitting the node limit.
    pub proven_optimal: bool,
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    left: u16,
    right: u16,
    edges: u64,
}

fn mask_to_set(mask: u16) -> VertexSet {
    (0..16).filter(|v| mask >> v & 1 == 1).collect()
}

struct PairIndex {
    id: Vec<Vec<usize>>,
    pairs: Vec<(u32, u32)>,
}

impl PairIndex {
    fn new(n: u32) -> Self {
        let mut id = vec![vec![usize::MAX; n as usize]; n as usize];
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                id[u as usize][v as usize] = pairs.len();
                id[v as usize][u as usize] = pairs.len();
                pairs.push((u, v));
            }
        }
        PairIndex { id, pairs }
    }

    fn edge_mask(&self, left: u16, right: u16) -> u64 {
        let mut m = 0;
        for u in (0..16).filter(|u| left >> u & 1 == 1) {
            for v in (0..16).filter(|v| right >> v & 1 == 1) {
                m |= 1 << self.id[u][v];
            }
        }
        m
    }
}

/// Candidate `(left, right)` masks with `u` left and `v` right: every
/// other vertex is placed left or right, or omitted only when both sides
/// are already at the bound.
fn candidate_masks(u: u32, v: u32, n: u32, x_max: Option<u32>) -> Vec<(u16, u16)> {
    let cap = x_max.unwrap_or(n);
    let others: Vec<u32> = (0..n).filter(|&w| w != u && w != v).collect();
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn walk(
        others: &[u32],
        i: usize,
        left: u16,
        right: u16,
        omitted: bool,
        cap: u32,
        bounded: bool,
        out: &mut Vec<(u16, u16)>,
    ) {
        if left.count_ones() > cap || right.count_ones() > cap {
            return;
        }
        if i == others.len() {
            if !omitted || (left.count_ones() == cap && right.count_ones() == cap) {
                out.push((left, right));
            }
            return;
        }
        let w = others[i];
        walk(
            others,
            i + 1,
            left | 1 << w,
            right,
            omitted,
            cap,
            bounded,
            out,
        );
        walk(
            others,
            i + 1,
            left,
            right | 1 << w,
            omitted,
            cap,
            bounded,
            out,
        );
        if bounded {
            walk(others, i + 1, left, right, true, cap, bounded, out);
        }
    }

    walk(
        &others,
        0,
        1 << u,
        1 << v,
        false,
        cap,
        x_max.is_some(),
        &mut out,
    );
    out
}

/// The branching set for the pair `(u, v)`: `u` fixed on the left, which
/// also removes the left/right mirror duplicates.
pub fn enumerate_candidates(pair: (u32, u32), n: u32, x_max: Option<u32>) -> Vec<Biclique> {
    let (u, v) = pair;
    assert!(
        u != v && u < n && v < n && n <= 16,
        "bad pair {pair:?} for n = {n}"
    );
    candidate_masks(u, v, n, x_max)
        .into_iter()
        .map(|(l, r)| Biclique::new(mask_to_set(l), mask_to_set(r)))
        .collect()
}

/// Most edges a biclique with components at most `cap` can have in `K_n`.
fn max_edges(n: u32, cap: u32) -> u64 {
    (1..=cap.min(n - 1))
        .map(|a| a as u64 * (n - a).min(cap) as u64)
        .max()
        .unwrap_or(1)
}

fn max_clique(adj: &[u16], candidates: u16, size: u32, best: &mut u32) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + candidates.count_ones() <= *best {
        return;
    }
    let mut rest = candidates;
    while rest != 0 {
        if size + rest.count_ones() <= *best {
            return;
        }
        let w = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        max_clique(adj, rest & adj[w], size + 1, best);
    }
}

struct Search<'a> {
    n: u32,
    pairs: &'a PairIndex,
    candidates: Vec<Vec<Candidate>>,
    max_edges: u64,
    clique_need: Vec<usize>,
    node_limit: u64,
    nodes: u64,
    aborted: bool,
    best: usize,
    best_cover: Option<Vec<Candidate>>,
    stack: Vec<Candidate>,
}

impl Search<'_> {
    fn lower_bound(&self, uncovered: u64) -> usize {
        let by_edges = (uncovered.count_ones() as u64).div_ceil(self.max_edges) as usize;
        if self.clique_need.is_empty() {
            return by_edges;
        }
        let mut adj = vec![0u16; self.n as usize];
        let mut rest = uncovered;
        while rest != 0 {
            let (u, v) = self.pairs.pairs[rest.trailing_zeros() as usize];
            rest &= rest - 1;
            adj[u as usize] |= 1 << v;
            adj[v as usize] |= 1 << u;
        }
        let mut k = 0;
        max_clique(&adj, (1u16 << self.n) - 1, 0, &mut k);
        by_edges.max(self.clique_need[k as usize])
    }

    fn dfs(&mut self, uncovered: u64) {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            self.aborted = true;
            return;
        }
        let depth = self.stack.len();
        if uncovered == 0 {
            if depth < self.best {
                self.best = depth;
                self.best_cover = Some(self.stack.clone());
            }
            return;
        }
        if depth + self.lower_bound(uncovered) >= self.best {
            return;
        }
        let pair = uncovered.trailing_zeros() as usize;
        let options = &self.candidates[pair];
        let gains: Vec<u64> = options.iter().map(|c| c.edges & uncovered).collect();
        // Skip candidates whose new edges are a subset of another's.
        let keep: Vec<Candidate> = (0..options.len())
            .filter(|&i| {
                !(0..options.len())
                    .any(|j| j != i && gains[i] & !gains[j] == 0 && (gains[i] != gains[j] || j < i))
            })
            .map(|i| options[i])
            .collect();
        for c in keep {
            self.stack.push(c);
            self.dfs(uncovered & !c.edges);
            self.stack.pop();
            if self.aborted {
                return;
            }
        }
    }
}

fn check_config(config: &SearchConfig) -> Result<Covering, CoverError> {
    let n = config.n;
    if n == 0 {
        return Err(CoverError::InvalidInput("n must be at least 1".into()));
    }
    let cap = if config.x_max.is_some() {
        MAX_N_BOUNDED
    } else {
        MAX_N_UNBOUNDED
    };
    if n > cap {
        let kind = if config.x_max.is_some() {
            "with"
        } else {
            "without"
        };
        return Err(CoverError::SearchTooLarge(format!(
            "n = {n} exceeds the exact-search cap of {cap} {kind} a component bound"
        )));
    }
    if let Some(x) = config.x_max {
        if x == 0 || x > n {
            return Err(CoverError::InvalidInput(format!(
                "x_max = {x} must lie in 1..={n}"
            )));
        }
    }
    if config.node_limit == Some(0) {
        return Err(CoverError::InvalidInput(
            "node limit must be positive".into(),
        ));
    }
    let seed = match &config.upper_seed {
        Some(seed) => seed.clone(),
        None => partition_cover(n, config.x_max.unwrap_or(n.div_ceil(2)))?,
    };
    if seed.n != n {
        return Err(CoverError::InvalidInput(format!(
            "seed covers K_{} but the search is for K_{n}",
            seed.n
        )));
    }
    if let Some((u, v)) = is_complete_direct(&seed)?.witness() {
        return Err(CoverError::InvalidInput(format!(
            "seed leaves pair {{{u},{v}}} uncovered"
        )));
    }
    if let Some(x) = config.x_max {
        if seed.max_component_size() > x as usize {
            return Err(CoverError::InvalidInput(format!(
                "seed has a component of size {} above x_max = {x}",
                seed.max_component_size()
            )));
        }
    }
    Ok(seed)
}

/// Minimum number of bicliques (components at most `x_max`, if given)
/// covering `K_n`.
pub fn min_cover(config: &SearchConfig) -> Result<SearchResult, CoverError> {
    let seed = check_config(config)?;
    let n = config.n;
    let pairs = PairIndex::new(n);
    let candidates = pairs
        .pairs
        .iter()
        .map(|&(u, v)| {
            candidate_masks(u, v, n, config.x_max)
                .into_iter()
                .map(|(left, right)| Candidate {
                    left,
                    right,
                    edges: pairs.edge_mask(left, right),
                })
                .collect()
        })
        .collect();
    let cap = config.x_max.unwrap_or(n);
    // A clique of k mutually uncovered vertices needs ⌈k·log2(k) / min(2x, k)⌉.
    let clique_need = if config.clique_bound {
        (0..=n as u64)
            .map(|k| {
                if k < 2 {
                    0
                } else {
                    ceil_mul_log2_div(k, k, (2 * cap as u64).min(k)) as usize
                }
            })
            .collect()
    } else {
        Vec::new()
    };
    let mut search = Search {
        n,
        pairs: &pairs,
        candidates,
        max_edges: max_edges(n, cap).max(1),
        clique_need,
        node_limit: config.node_limit.unwrap_or(DEFAULT_NODE_LIMIT),
        nodes: 0,
        aborted: false,
        best: seed.len(),
        best_cover: None,
        stack: Vec::new(),
    };
    let all = if pairs.pairs.is_empty() {
        0
    } else {
        u64::MAX >> (64 - pairs.pairs.len())
    };
    search.dfs(all);

    let optimal = match search.best_cover {
        Some(found) => Covering::new(
            n,
            found
                .iter()
                .map(|c| Biclique::new(mask_to_set(c.left), mask_to_set(c.right)))
                .collect(),
        ),
        None => seed,
    };
    Ok(SearchResult {
        min_size: optimal.len(),
        optimal,
        nodes_explored: search.nodes,
        proven_optimal: !search.aborted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs_of(list: &[Biclique]) -> Vec<(Vec<u32>, Vec<u32>)> {
        list.iter()
            .map(|b| (b.left.members().to_vec(), b.right.members().to_vec()))
            .collect()
    }

    #[test]
    fn candidates_examples() {
        assert_eq!(
            pairs_of(&enumerate_candidates((0, 1), 2, None)),
            vec![(vec![0], vec![1])]
        );
        assert_eq!(
            pairs_of(&enumerate_candidates((0, 1), 3, None)),
            vec![(vec![0, 2], vec![1]), (vec![0], vec![1, 2])]
        );
        assert_eq!(
            pairs_of(&enumerate_candidates((0, 1), 4, Some(1))),
            vec![(vec![0], vec![1])]
        );
    }

    #[test]
    fn bounded_candidates_are_maximal() {
        for c in enumerate_candidates((1, 3), 6, Some(2)) {
            assert!(c.left.contains(1) && c.right.contains(3));
            assert!(c.component_size() <= 2);
            assert!(c.left.len() == 2 && c.right.len() == 2);
        }
        assert_eq!(enumerate_candidates((1, 3), 6, Some(2)).len(), 4 * 3);
    }

    #[test]
    fn small_minima() {
        let r = min_cover(&SearchConfig::new(2)).unwrap();
        assert_eq!(r.min_size, 1);
        assert!(r.proven_optimal);
        let r = min_cover(&SearchConfig::new(1)).unwrap();
        assert_eq!(r.min_size, 0);
        let r = min_cover(&SearchConfig::new(5).with_x_max(1)).unwrap();
        assert_eq!(r.min_size, 10);
    }

    #[test]
    fn refuses_large_instances() {
        assert!(matches!(
            min_cover(&SearchConfig::new(10)),
            Err(CoverError::SearchTooLarge(_))
        ));
        assert!(matches!(
            min_cover(&SearchConfig::new(8).with_x_max(3)),
            Err(CoverError::SearchTooLarge(_))
        ));
        assert!(min_cover(&SearchConfig::new(4).with_x_max(5)).is_err());
        assert!(min_cover(&SearchConfig::new(4).with_node_limit(0)).is_err());
    }

    #[test]
    fn rejects_bad_seed() {
        let incomplete = Covering::new(3, vec![]);
        assert!(min_cover(&SearchConfig::new(3).with_seed(incomplete)).is_err());
        let wrong_n = partition_cover(4, 2).unwrap();
        assert!(min_cover(&SearchConfig::new(3).with_seed(wrong_n)).is_err());
        let too_wide = crate::constructions::bitstring_cover(4).unwrap();
        assert!(min_cover(&SearchConfig::new(4).with_x_max(1).with_seed(too_wide)).is_err());
    }

    #[test]
    fn node_limit_returns_incumbent() {
        let r = min_cover(&SearchConfig::new(6).with_x_max(2).with_node_limit(1)).unwrap();
        assert!(!r.proven_optimal);
        assert!(is_complete_direct(&r.optimal).unwrap().is_complete());
        assert_eq!(r.min_size, r.optimal.len());
    }
}
