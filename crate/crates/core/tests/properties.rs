use hwp_core::atlas::Atlas;
use hwp_core::constructions::{double_factorization, even_plan, kotzig_one_factorization};
use hwp_core::digraph::complete_symmetric;
use hwp_core::format::{parse_factor_line, parse_records, write_entry};
use hwp_core::model::{canonical_cycle, map_vertices, CycleProfile, DirectedCycle, TwoFactor};
use hwp_core::search::Budget;
use proptest::prelude::*;

fn distinct_vertices() -> impl Strategy<Value = Vec<usize>> {
    (2usize..=24).prop_flat_map(|len| {
        Just((0..64).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(move |v| v[..len].to_vec())
    })
}

proptest! {
    #[test]
    fn canonical_cycle_is_idempotent(seq in distinct_vertices()) {
        let c = canonical_cycle(&seq).unwrap();
        prop_assert_eq!(canonical_cycle(c.vertices()).unwrap(), c.clone());
        prop_assert_eq!(c.first(), *seq.iter().min().unwrap());
    }

    #[test]
    fn canonical_cycle_ignores_rotation(seq in distinct_vertices(), k in 0usize..24) {
        let k = k % seq.len();
        let rotated: Vec<usize> = seq[k..].iter().chain(&seq[..k]).copied().collect();
        prop_assert_eq!(canonical_cycle(&rotated).unwrap(), canonical_cycle(&seq).unwrap());
    }

    #[test]
    fn reversal_is_an_involution(seq in distinct_vertices()) {
        let c = DirectedCycle::new(seq).unwrap();
        prop_assert_eq!(c.reversed().reversed(), c);
    }

    #[test]
    fn factor_lines_round_trip(seq in distinct_vertices(), cut in 2usize..22) {
        let cut = cut.min(seq.len());
        let mut parts = vec![seq[..cut].to_vec()];
        if seq.len() - cut >= 2 {
            parts.push(seq[cut..].to_vec());
        }
        let f = TwoFactor::from_sequences(parts).unwrap();
        let line = f.to_string();
        prop_assert_eq!(parse_factor_line(&line).unwrap(), f);
    }

    #[test]
    fn relabeling_preserves_validity(shift in 0usize..12, index in 0usize..103) {
        let atlas = Atlas::builtin().unwrap();
        let verified: Vec<_> = atlas.entries().filter_map(|e| e.factorization.clone()).collect();
        let f = &verified[index % verified.len()];
        let v = f.host().vertex_count();
        let moved = map_vertices(f, |x| (x + shift) % v, complete_symmetric(v).unwrap()).unwrap();
        prop_assert!(moved.verify(Some(&f.counts())).valid);
    }

    #[test]
    fn even_plans_are_total(h in prop::sample::select(vec![8usize, 12, 16]), x in 1usize..=6, r in 0usize..96) {
        let r = r % (h * x);
        let p = even_plan(h, x, r).unwrap();
        prop_assert!(p.base_r < h);
        prop_assert_eq!(p.base_r + p.step_size * p.step_count, r);
    }

    #[test]
    fn doubling_kotzig_gives_digons(half in 1usize..=25) {
        let n = 2 * half;
        let d = double_factorization(&kotzig_one_factorization(n).unwrap()).unwrap();
        prop_assert_eq!(d.counts(), CycleProfile::single(2, n - 1));
    }
}

#[test]
fn shipped_entries_reserialize_exactly() {
    let atlas = Atlas::builtin().unwrap();
    for e in atlas.entries() {
        let Some(text) = e.to_text() else { continue };
        let recs = parse_records(&text).unwrap();
        assert_eq!(write_entry(&recs[0].spec, &recs[0].factors), text);
        let f = atlas.factorization(e.key.spec(), Budget::default()).unwrap();
        assert_eq!(Some(f), e.factorization);
    }
}
