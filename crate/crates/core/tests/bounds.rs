use biclique_cover::log2::ceil_log2;
use biclique_cover::{
    balanced_cover, bounds_report, lower_bound_edges, lower_bound_size, upper_bound_formula,
};
use proptest::prelude::*;

#[test]
fn exact_at_powers_of_two() {
    for k in 1..=10u32 {
        let n = 1u64 << k;
        let x = n / 2;
        assert_eq!(lower_bound_size(n, x), k as u64);
        assert_eq!(balanced_cover(x as u32).unwrap().len() as u64, k as u64);
    }
}

#[test]
fn crossover_far_from_the_boundary() {
    let n = 1u64 << 16;
    let log = ceil_log2(n);
    // x <= n / (4 log n): the edge term dominates.
    for x in [1, 2, 16, 64, 256, n / (4 * log as u64)] {
        assert!(lower_bound_edges(n, x) > lower_bound_size(n, x), "x = {x}");
    }
    // x >= 4n / log n: the size term dominates.
    for x in [4 * n / log as u64, n / 2, n] {
        assert!(lower_bound_size(n, x) > lower_bound_edges(n, x), "x = {x}");
    }
}

#[test]
fn single_edge_bicliques() {
    for n in 2..300u64 {
        let edges = n * (n - 1) / 2;
        assert_eq!(lower_bound_edges(n, 1), edges);
        // Even n: 2g(g − 1) + g = g(2g − 1) = C(2g, 2). Odd n: the last
        // group is a single vertex yet still charged 4 cross bicliques per
        // other group, which overshoots by exactly n.
        let slack = if n % 2 == 0 { 0 } else { n };
        assert_eq!(upper_bound_formula(n, 1), edges + slack, "n = {n}");
    }
}

#[test]
fn huge_instance_ratio() {
    // g = 500; upper = 4·C(500, 2) + 500·⌈log2 2000⌉ = 499000 + 5500;
    // lower = ⌈10^6 (10^6 − 1) / (2·10^6)⌉ = 500000.
    let r = bounds_report(1_000_000, 1_000, None).unwrap();
    assert_eq!(r.upper_formula, 504_500);
    assert_eq!(r.lower_edges, 500_000);
    assert_eq!(r.lower_combined, 500_000);
    assert_eq!(r.ratio_exact(), "1009/1000");
    assert_eq!(r.ratio_decimal(), "1.009000");
}

proptest! {
    #[test]
    fn lower_never_exceeds_upper(n in 2u64..100_000, x in 1u64..5_000) {
        let r = bounds_report(n, x, None).unwrap();
        prop_assert_eq!(r.lower_combined, r.lower_edges.max(r.lower_size));
        prop_assert!(r.lower_combined <= r.upper_formula);
        if 2 * x <= n {
            prop_assert!(r.lower_size_stated <= r.lower_size);
        }
    }

    #[test]
    fn edge_bound_nonincreasing_in_x(n in 1u64..1_000_000, x in 1u64..10_000) {
        prop_assert!(lower_bound_edges(n, x + 1) <= lower_bound_edges(n, x));
    }
}
