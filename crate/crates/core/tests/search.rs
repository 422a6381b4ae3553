use hwp_core::digraph::{complete_symmetric, equipartite_symmetric};
use hwp_core::model::CycleProfile;
use hwp_core::search::{exact_search, Budget, SearchInstance, SearchMode, SearchStatus};

fn profile(pairs: &[(usize, usize)]) -> CycleProfile {
    let mut p = CycleProfile::default();
    for &(l, c) in pairs {
        p.add(l, c);
    }
    p
}

#[test]
fn finds_small_mixed_factorization() {
    let inst = SearchInstance::directed(complete_symmetric(8).unwrap(), profile(&[(4, 3), (8, 4)]));
    let out = exact_search(&inst).unwrap();
    assert_eq!(out.status, SearchStatus::Found);
    assert_eq!(out.directed().unwrap().counts(), profile(&[(4, 3), (8, 4)]));
}

#[test]
fn search_is_deterministic() {
    let inst = SearchInstance::directed(complete_symmetric(12).unwrap(), profile(&[(4, 5), (6, 6)]));
    let a = exact_search(&inst).unwrap();
    let b = exact_search(&inst).unwrap();
    assert_eq!(a.stats.nodes, b.stats.nodes);
    assert_eq!(a.witness, b.witness);
}

#[test]
fn proves_small_nonexistence() {
    for (v, l) in [(4, 4), (6, 3), (6, 6)] {
        let inst = SearchInstance::directed(complete_symmetric(v).unwrap(), CycleProfile::single(l, v - 1))
            .with_mode(SearchMode::ProveNone);
        assert_eq!(exact_search(&inst).unwrap().status, SearchStatus::None, "K_{v}* C_{l}");
    }
}

#[test]
fn tiny_budget_is_not_a_proof() {
    let inst = SearchInstance::directed(complete_symmetric(6).unwrap(), CycleProfile::single(6, 5))
        .with_budget(Budget::nodes(5));
    assert_eq!(exact_search(&inst).unwrap().status, SearchStatus::ExhaustedBudget);
}

#[test]
fn undirected_search_on_k7_and_multipartite() {
    let inst = SearchInstance::undirected(complete_symmetric(7).unwrap(), CycleProfile::single(7, 3));
    let u = exact_search(&inst).unwrap().undirected().unwrap();
    assert!(u.verify(Some(&CycleProfile::single(7, 3))).valid);
    let host = equipartite_symmetric(3, 3).unwrap();
    let inst = SearchInstance::undirected(host, CycleProfile::single(9, 3));
    assert_eq!(exact_search(&inst).unwrap().status, SearchStatus::Found);
}

#[test]
fn rejects_mismatched_profile_and_large_hosts() {
    let inst = SearchInstance::directed(complete_symmetric(8).unwrap(), CycleProfile::single(4, 6));
    assert!(exact_search(&inst).is_err());
    let inst = SearchInstance::directed(complete_symmetric(66).unwrap(), CycleProfile::single(66, 65));
    assert!(exact_search(&inst).is_err());
}
