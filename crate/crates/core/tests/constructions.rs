use hwp_core::atlas::Atlas;
use hwp_core::constructions::{
    check_necessary, directed_bipartite_cycle_factorization, double_factorization, even_hwp, kirkman_resolution,
    kotzig_one_factorization, odd_hwp, pair_blowup_k2_factors, solve, tripartite_cycle_factorization,
    walecki_hamilton_decomposition, Method,
};
use hwp_core::digraph::complete_symmetric;
use hwp_core::model::{map_vertices, CycleProfile, ProblemSpec};
use hwp_core::search::Budget;
use hwp_core::Error;

fn spec(v: usize, m: usize, n: usize, r: usize, s: usize) -> ProblemSpec {
    ProblemSpec::new(v, m, n, r, s).unwrap()
}

fn profile(pairs: &[(usize, usize)]) -> CycleProfile {
    let mut p = CycleProfile::default();
    for &(l, c) in pairs {
        p.add(l, c);
    }
    p
}

#[test]
fn necessary_conditions_name_the_violation() {
    let report = check_necessary(&spec(8, 4, 8, 3, 3));
    assert_eq!(report.first_violation().unwrap().violation, "r+s ≠ v−1");
    assert_eq!(
        check_necessary(&spec(10, 4, 5, 4, 5))
            .first_violation()
            .unwrap()
            .violation,
        "m ∤ v"
    );
    assert_eq!(
        check_necessary(&spec(12, 4, 8, 4, 7))
            .first_violation()
            .unwrap()
            .violation,
        "n ∤ v"
    );
    assert!(check_necessary(&spec(16, 4, 8, 9, 6)).met());
}

#[test]
fn even_construction_counts_for_small_multipliers() {
    let atlas = Atlas::builtin().unwrap();
    for (m, n, h) in [(4, 8, 8), (4, 6, 12), (6, 12, 12)] {
        for x in 1..=3 {
            let v = h * x;
            for r in [0, 1, v / 2, v - 2] {
                let s = v - 1 - r;
                let f = even_hwp(m, n, x, r, s, &atlas, Budget::default()).unwrap();
                assert_eq!(f.counts(), spec(v, m, n, r, s).profile(), "{v} {m} {n} {r} {s}");
                assert!(f.verify(None).valid);
            }
        }
    }
}

#[test]
fn odd_construction_counts() {
    let atlas = Atlas::builtin().unwrap();
    for (r, s) in [(0, 44), (23, 21), (44, 0), (2, 42)] {
        let f = odd_hwp(3, 5, 3, r, s, &atlas, Budget::default()).unwrap();
        assert_eq!(f.counts(), spec(45, 3, 5, r, s).profile());
    }
    assert!(matches!(
        odd_hwp(3, 5, 3, 41, 3, &atlas, Budget::default()),
        Err(Error::UnsupportedByAtlas(_))
    ));
}

#[test]
fn solve_reports_method() {
    let atlas = Atlas::builtin().unwrap();
    let b = Budget::default();
    assert_eq!(solve(&spec(8, 4, 8, 3, 4), &atlas, b).unwrap().method, Method::Atlas);
    assert_eq!(
        solve(&spec(16, 8, 16, 5, 10), &atlas, b).unwrap().method,
        Method::Composite
    );
    assert_eq!(
        solve(&spec(24, 4, 12, 13, 10), &atlas, b).unwrap().method,
        Method::EvenRecursive
    );
    assert_eq!(
        solve(&spec(45, 5, 15, 0, 44), &atlas, b).unwrap().method,
        Method::OddRecursive
    );
    assert!(matches!(
        solve(&spec(6, 3, 6, 5, 0), &atlas, b),
        Err(Error::Infeasible { .. })
    ));
    assert!(matches!(
        solve(&spec(15, 3, 5, 12, 2), &atlas, b),
        Err(Error::UnknownOpen(_))
    ));
}

#[test]
fn doubling_wraps_undirected_factorizations() {
    let k = kotzig_one_factorization(8).unwrap();
    let d = double_factorization(&k).unwrap();
    assert_eq!(d.counts(), CycleProfile::single(2, 7));
    let w = walecki_hamilton_decomposition(9).unwrap();
    let d = double_factorization(&w).unwrap();
    assert_eq!(d.counts(), CycleProfile::single(9, 8));
    let kts = kirkman_resolution(15, Budget::default()).unwrap();
    assert_eq!(
        double_factorization(&kts).unwrap().counts(),
        CycleProfile::single(3, 14)
    );
}

#[test]
fn bipartite_and_tripartite_pieces() {
    for (a, m) in [(4, 4), (4, 8), (6, 4), (6, 12), (8, 16)] {
        let f = directed_bipartite_cycle_factorization(a, m).unwrap();
        assert_eq!(f.counts(), CycleProfile::single(m, a));
    }
    assert!(directed_bipartite_cycle_factorization(4, 3).is_err());
    for (p, m) in [(5, 3), (5, 5), (5, 15), (3, 3)] {
        let u = tripartite_cycle_factorization(p, 3, m, Budget::default()).unwrap();
        assert!(u.verify(Some(&CycleProfile::single(m, p))).valid, "p={p} m={m}");
    }
}

#[test]
fn pair_blowup_is_a_digon_factorization() {
    for x in [2, 3, 4, 6] {
        let f = pair_blowup_k2_factors(x).unwrap();
        assert!(f.verify(Some(&CycleProfile::single(2, 2 * x - 2))).valid, "x={x}");
    }
}

#[test]
fn relabeled_solution_verifies_on_induced_copy() {
    let atlas = Atlas::builtin().unwrap();
    let sol = solve(&spec(12, 4, 6, 5, 6), &atlas, Budget::default()).unwrap();
    let big = complete_symmetric(20).unwrap();
    let moved = map_vertices(&sol.factorization, |x| 19 - x, big.clone()).unwrap();
    assert!(!moved.verify(None).valid);
    let image: Vec<usize> = (8..20).collect();
    let induced = big.induced(&image).unwrap();
    let back = map_vertices(&sol.factorization, |x| 11 - x, induced).unwrap();
    assert!(back.verify(Some(&profile(&[(4, 5), (6, 6)]))).valid);
    assert!(map_vertices(&sol.factorization, |x| x / 2, complete_symmetric(12).unwrap()).is_err());
}
