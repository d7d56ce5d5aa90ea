mod common;

use etakit::graphmetrics::{
    clustering_coefficient, generate_small_world, measure, path_length, ring_lattice,
    shortest_path_matrix, Graph, PathMode, SmallWorldSpec,
};
use etakit::growthkit::{
    accumulate_exponential, accumulate_linear, estimate_rate, rate_error, Compounding, GrowthPair,
    RatePerDecade, YearCE,
};
use etakit::netentropy::{cluster_generations, eta, isotropy_gap, receive_capacity_derivative};
use etakit::theorems::{
    adjusted_swadesh, date_origin, distribution_count, divergence_from_branches, innate_rate,
    InnateRate,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn rel_eq(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * b.abs().max(f64::MIN_POSITIVE)
}

fn year(v: f64) -> YearCE {
    YearCE::new(v).unwrap()
}

fn rate(v: f64) -> RatePerDecade {
    RatePerDecade::new(v).unwrap()
}

fn nonzero_rate() -> impl Strategy<Value = f64> {
    (-0.5f64..2.0).prop_filter("away from zero", |r| r.abs() >= 1e-3)
}

proptest! {
    #[test]
    fn estimate_inverts_continuous_growth(
        n0 in 1e-3f64..1e6,
        r in nonzero_rate(),
        dt in 1.0f64..500.0,
        t1 in -5000.0f64..2000.0,
    ) {
        prop_assume!((r * dt).abs() < 600.0);
        let n2 = accumulate_exponential(n0, rate(r), dt, Compounding::Continuous).unwrap();
        let pair = GrowthPair::new(year(t1), n0, year(t1 + 10.0 * dt), n2).unwrap();
        let got = estimate_rate(&pair).value();
        prop_assert!(rel_eq(got, r, 1e-12), "{got} vs {r}");
    }

    #[test]
    fn rate_error_ignores_absolute_counts(
        ratio in -0.9f64..5.0,
        span in 1.0f64..10_000.0,
        n1 in 1.0f64..1e3,
        growth in 1.01f64..100.0,
    ) {
        let error_from_counts = |scale: f64| {
            let (lo, hi) = (n1 * scale, n1 * growth * scale);
            let truth = GrowthPair::new(year(0.0), lo, year(span), hi).unwrap();
            let skewed = GrowthPair::new(year(0.0), lo, year(span), hi * (1.0 + ratio)).unwrap();
            estimate_rate(&skewed).value() - estimate_rate(&truth).value()
        };
        let actual = growth.ln() / (span / 10.0);
        let direct = rate_error(ratio, span, rate(actual)).unwrap().absolute.value();
        for scale in [1.0, 1e6] {
            prop_assert!((error_from_counts(scale) - direct).abs() <= 1e-12 * (1.0 + direct.abs()) * 10.0);
        }
    }

    #[test]
    fn relative_error_shrinks_with_span(
        ratio in 1e-3f64..5.0,
        span in 1.0f64..5000.0,
        extra in 1.0f64..5000.0,
    ) {
        let actual = rate(0.0341);
        let short = rate_error(ratio, span, actual).unwrap().relative.unwrap();
        let long = rate_error(ratio, span + extra, actual).unwrap().relative.unwrap();
        prop_assert!(long < short);
    }

    #[test]
    fn discrete_growth_beats_linear(
        n0 in 1e-3f64..1e6,
        r in 1e-3f64..2.0,
        dt in 1.001f64..100.0,
    ) {
        let lin = accumulate_linear(n0, rate(r), dt).unwrap();
        let disc = accumulate_exponential(n0, rate(r), dt, Compounding::Discrete).unwrap();
        prop_assert!(disc >= lin);
    }

    #[test]
    fn discrete_equals_linear_at_zero_and_one(n0 in 1e-3f64..1e6, r in 0.0f64..2.0) {
        for dt in [0.0, 1.0] {
            let lin = accumulate_linear(n0, rate(r), dt).unwrap();
            let disc = accumulate_exponential(n0, rate(r), dt, Compounding::Discrete).unwrap();
            prop_assert!(rel_eq(disc, lin, 1e-15));
        }
    }

    #[test]
    fn bfs_matches_floyd_warshall(n in 1usize..=8, mask in any::<u64>()) {
        let g = common::masked_graph(n, mask);
        let oracle = common::floyd_warshall(&g);
        let m = shortest_path_matrix(&g);
        for (i, row) in oracle.iter().enumerate() {
            for (j, &want) in row.iter().enumerate() {
                prop_assert_eq!(m.get(i, j), want);
            }
        }
    }

    #[test]
    fn deleting_an_edge_never_shortens_paths(n in 3usize..=12, mask in any::<u64>(), pick in any::<usize>()) {
        let g = common::masked_graph(n, mask);
        prop_assume!(path_length(&g, PathMode::Strict).is_ok());
        let edges: Vec<_> = g.edges().collect();
        let (u, v) = edges[pick % edges.len()];
        let before = path_length(&g, PathMode::Strict).unwrap();
        let h = g.without_edge(u, v).unwrap();
        if let Ok(after) = path_length(&h, PathMode::Strict) {
            prop_assert!(after >= before);
        }
    }

    #[test]
    fn small_world_is_seeded(
        half_k in 1usize..=4,
        extra in 1usize..40,
        p in 0.0f64..=1.0,
        seed in any::<u64>(),
    ) {
        let k = 2 * half_k;
        let n = k + extra;
        let spec = SmallWorldSpec { n, k, p, seed };
        let a = generate_small_world(&spec).unwrap();
        let b = generate_small_world(&spec).unwrap();
        prop_assert_eq!(a.edge_count(), n * k / 2);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn change_of_base(n in 1.0f64..1e12, s in 1.01f64..50.0, c in 0.0f64..=1.0) {
        let natural = eta(n, s, c).unwrap();
        let decimal = c * n.log10() / s.log10();
        prop_assert!(rel_eq(natural, decimal, 1e-12) || (natural - decimal).abs() < 1e-300);
    }

    #[test]
    fn entropy_monotone(
        n in 2.0f64..1e10,
        s in 1.05f64..20.0,
        c in 0.01f64..0.99,
        grow in 1.01f64..10.0,
    ) {
        let base = eta(n, s, c).unwrap();
        prop_assert!(eta(n * grow, s, c).unwrap() > base);
        prop_assert!(eta(n, s * grow, c).unwrap() < base);
        prop_assert!(eta(n, s, (c * grow).min(1.0)).unwrap() > base);
    }

    #[test]
    fn power_round_trip(n in 1.0f64..1e12, s in 1.01f64..50.0, c in 1e-3f64..=1.0) {
        let e = eta(n, s, c).unwrap();
        prop_assert!(rel_eq(s.powf(e / c), n, 1e-9));
    }

    #[test]
    fn derivative_matches_finite_difference(s in 1.1f64..10.0, e in 0.0f64..8.0) {
        let n = s.powf(e).max(2.0);
        let e = n.ln() / s.ln();
        let h = n * 1e-6;
        let fd = (cluster_generations(n + h, s).unwrap() - cluster_generations(n - h, s).unwrap()) / (2.0 * h);
        prop_assert!(rel_eq(receive_capacity_derivative(s, e).unwrap(), fd, 1e-6));
    }

    #[test]
    fn isotropy_gap_vanishes_only_at_e(s in 1.01f64..50.0) {
        let gap = isotropy_gap(s).unwrap();
        prop_assert_eq!(gap < 1e-12, (s.ln() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn innate_round_trip(collective in 1e-4f64..1.0, a in 0.1f64..50.0, b in 0.1f64..50.0) {
        let m = innate_rate(rate(collective), a, b).unwrap();
        // per millennium back to per decade
        let back = m.value() * a * b / 100.0;
        prop_assert!(rel_eq(back, collective, 1e-12));
    }

    #[test]
    fn dating_inverts_accumulation(
        origin in 1.0f64..1e3,
        growth in 1.01f64..1e6,
        m in 1e-3f64..0.5,
        t2 in -2000.0f64..2500.0,
    ) {
        let now = origin * growth;
        let d = date_origin(now, origin, year(t2), InnateRate::per_millennium(m).unwrap()).unwrap();
        let decades = d.years_before_t2 / 10.0;
        let back = accumulate_exponential(origin, InnateRate::per_millennium(m).unwrap().as_rate(), decades, Compounding::Continuous).unwrap();
        prop_assert!(rel_eq(back, now, 1e-9));
    }

    #[test]
    fn branches_recompose(raw in 0.0f64..1.0, orig in 1.0f64..20_000.0, revised in 1.0f64..20_000.0) {
        let d = adjusted_swadesh(raw, orig, revised).unwrap();
        prop_assert!(rel_eq(divergence_from_branches(d.per_branch), d.adjusted_rate, 1e-15) || d.adjusted_rate == 0.0);
    }
}

#[test]
fn complete_graphs() {
    for n in 2..=50 {
        let k = Graph::complete(n).unwrap();
        assert_eq!(path_length(&k, PathMode::Strict).unwrap(), 1.0);
        let c = clustering_coefficient(&k);
        // K_2 endpoints have degree 1 and contribute 0
        assert_eq!(c, if n == 2 { 0.0 } else { 1.0 }, "n = {n}");
    }
}

#[test]
fn rewiring_destroys_clustering() {
    let lattice = ring_lattice(1000, 10).unwrap();
    let random = generate_small_world(&SmallWorldSpec {
        n: 1000,
        k: 10,
        p: 1.0,
        seed: 3,
    })
    .unwrap();
    assert!(clustering_coefficient(&lattice) > clustering_coefficient(&random));
}

#[test]
fn small_world_band() {
    let g = generate_small_world(&SmallWorldSpec {
        n: 1000,
        k: 10,
        p: 0.1,
        seed: 7,
    })
    .unwrap();
    let m = measure(&g, PathMode::LargestComponent).unwrap();
    assert!(
        (3.0..=6.0).contains(&m.path_length),
        "S = {}",
        m.path_length
    );
    assert!((0.3..=0.6).contains(&m.clustering), "C = {}", m.clustering);
}

#[test]
fn distribution_counts_match_enumeration() {
    for n in 1..=6 {
        for r in 0..=6 {
            let c = distribution_count(n, r).unwrap();
            assert_eq!(
                c.exact,
                BigUint::from(common::weak_compositions(n, r)),
                "({n}, {r})"
            );
        }
    }
    let big = distribution_count(100, 100).unwrap();
    assert!(big.relative_log_error.unwrap().abs() < 0.01);
}

#[test]
fn swadesh_concurrence() {
    let d = adjusted_swadesh(0.14, 7037.0, 8700.0).unwrap();
    let m = innate_rate(rate(0.0341), 10.72, 5.68).unwrap();
    assert!((d.per_branch - m.value()).abs() * 100.0 < 0.1);
}
