//! Cross-validation of the polynomial-time operators against the
//! brute-force truth-table oracle on seeded random instances.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use hypergraph_horn::ground::{GroundSet, VarSet};
use hypergraph_horn::horn::HornCnf;
use hypergraph_horn::hypergraph::Hypergraph;
use hypergraph_horn::iduality::{
    majorizes_implicate_dual, no_unit_intersections, MajorantCheck,
};
use hypergraph_horn::implicate::{core, implicate_sets, standard_generator};
use hypergraph_horn::keys::{
    is_potential_implicate_set, minimal_keys_oracle, realize_keys, KeyRealizationResult,
};
use hypergraph_horn::oracle::{generator_of, largest_member_within, TruthTable};
use hypergraph_horn::recognition::{is_hypergraph_horn_oracle, recognize, RecognitionResult};
use hypergraph_horn::sampling;

fn subsets(n: usize) -> impl Iterator<Item = VarSet> {
    (0..(1u64 << n)).map(VarSet::from_mask)
}

#[test]
fn closure_matches_table_closure_exhaustively() {
    let mut rng = StdRng::seed_from_u64(101);
    for _ in 0..60 {
        let n = rng.gen_range(0..=8);
        let ground = GroundSet::numbered(n);
        let cnf = sampling::random_cnf(&mut rng, &ground, 2 * n + 2);
        let table = TruthTable::from_cnf(&cnf).unwrap();
        assert!(table.is_definite_horn().unwrap());
        let map = table.closure_map().unwrap();
        for z in subsets(n) {
            assert_eq!(cnf.closure(z), map[z.mask() as usize]);
        }
    }
}

#[test]
fn key_and_true_set_families_compose_through_transversals() {
    let mut rng = StdRng::seed_from_u64(102);
    for _ in 0..60 {
        let n = rng.gen_range(1..=8);
        let ground = GroundSet::numbered(n);
        let cnf = sampling::random_cnf(&mut rng, &ground, 2 * n);
        let keys = minimal_keys_oracle(&cnf).unwrap();
        let maximal = TruthTable::from_cnf(&cnf)
            .unwrap()
            .maximal_nontrivial_true_family()
            .unwrap();
        assert_eq!(maximal, keys.minimal_transversals().complement_family());
        assert_eq!(keys, maximal.complement_family().minimal_transversals());
    }
}

#[test]
fn circular_tables_satisfy_one_short_dualities() {
    let mut rng = StdRng::seed_from_u64(103);
    for _ in 0..40 {
        let n = rng.gen_range(0..=7);
        let ground = GroundSet::numbered(n);
        let cnf = sampling::random_circular_cnf(&mut rng, &ground, n + 2);
        let table = TruthTable::from_cnf(&cnf).unwrap();
        let family = table.implicate_family().unwrap();
        for x in subsets(n) {
            let is_true = table.value(x);
            let no_one_short = family.iter().all(|j| j.minus(x).len() != 1);
            assert_eq!(is_true, no_one_short);

            let in_family = family.contains(&x);
            let no_true_one_short = table.true_masks().all(|t| {
                x.minus(VarSet::from_mask(t)).len() != 1
            });
            assert_eq!(in_family, no_true_one_short);
        }
    }
}

#[test]
fn implicate_families_are_union_closed() {
    let mut rng = StdRng::seed_from_u64(104);
    for _ in 0..40 {
        let n = rng.gen_range(0..=7);
        let ground = GroundSet::numbered(n);
        let table = sampling::random_table(&mut rng, &ground).unwrap();
        let family = table.implicate_family().unwrap();
        for (i, a) in family.iter().enumerate() {
            for b in &family[i..] {
                assert!(family.contains(&a.union(*b)));
            }
        }
    }
}

#[test]
fn core_equals_largest_implicate_subset_exhaustively() {
    let mut rng = StdRng::seed_from_u64(105);
    for _ in 0..60 {
        let n = rng.gen_range(0..=8);
        let ground = GroundSet::numbered(n);
        let cnf = sampling::random_cnf(&mut rng, &ground, 2 * n + 2);
        let family = TruthTable::from_cnf(&cnf).unwrap().implicate_family().unwrap();
        for s in subsets(n) {
            assert_eq!(core(&cnf, s), largest_member_within(&family, s));
        }
    }
}

#[test]
fn enumeration_agrees_with_oracle_family() {
    let mut rng = StdRng::seed_from_u64(106);
    for _ in 0..40 {
        let n = rng.gen_range(0..=8);
        let ground = GroundSet::numbered(n);
        let cnf = sampling::random_cnf(&mut rng, &ground, 2 * n + 2);
        let mut expected = TruthTable::from_cnf(&cnf).unwrap().implicate_family().unwrap();
        expected.sort();

        let mut cursor = implicate_sets(&cnf);
        let mut produced = Vec::new();
        let mut last_calls = 0;
        while let Some(set) = cursor.next() {
            let delay = cursor.extension_calls() - last_calls;
            assert!(delay <= 2 * n as u64);
            last_calls = cursor.extension_calls();
            produced.push(set);
        }
        assert!(cursor.extension_calls() - last_calls <= 2 * n as u64);
        assert_eq!(produced[0], VarSet::empty());
        let mut sorted = produced.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), produced.len(), "duplicate emission");
        assert_eq!(sorted, expected);
    }
}

#[test]
fn standard_generator_union_closes_to_the_family() {
    let mut rng = StdRng::seed_from_u64(107);
    for _ in 0..30 {
        let n = rng.gen_range(0..=7);
        let ground = GroundSet::numbered(n);
        let cnf = sampling::random_cnf(&mut rng, &ground, 2 * n);
        let table_family = TruthTable::from_cnf(&cnf).unwrap().implicate_family().unwrap();

        let generator = standard_generator(&cnf);
        let mut closed = generator.union_closure().edges().to_vec();
        closed.sort();
        let mut expected = table_family.clone();
        expected.sort();
        assert_eq!(closed, expected);

        // Route two: extract the generator from the oracle family directly.
        let mut from_table = generator_of(&table_family);
        from_table.sort();
        assert_eq!(generator.edges(), from_table.as_slice());
    }
}

#[test]
fn conjunction_preserves_shared_key_families() {
    let mut rng = StdRng::seed_from_u64(108);
    let mut pairs_checked = 0;
    for n in 4..=7usize {
        let ground = GroundSet::numbered(n);
        let mut buckets: Vec<(Hypergraph, Vec<HornCnf>)> = Vec::new();
        for _ in 0..60 {
            let cnf = sampling::random_cnf(&mut rng, &ground, n + 2);
            let keys = minimal_keys_oracle(&cnf).unwrap();
            match buckets.iter_mut().find(|(k, _)| *k == keys) {
                Some((_, group)) => group.push(cnf),
                None => buckets.push((keys, vec![cnf])),
            }
        }
        for (keys, group) in &buckets {
            for (i, f) in group.iter().enumerate() {
                for g in &group[i + 1..] {
                    let clauses: Vec<_> = f
                        .clauses()
                        .iter()
                        .chain(g.clauses())
                        .copied()
                        .collect();
                    let conjunction = HornCnf::new(ground.clone(), clauses).unwrap();
                    assert_eq!(&minimal_keys_oracle(&conjunction).unwrap(), keys);
                    pairs_checked += 1;
                }
            }
        }
    }
    assert!(pairs_checked >= 10, "only {pairs_checked} pairs shared a key family");
}

#[test]
fn recognition_agrees_with_oracle_verdict() {
    let mut rng = StdRng::seed_from_u64(109);
    let mut yes_seen = 0;
    for round in 0..80 {
        let n = rng.gen_range(1..=8);
        let ground = GroundSet::numbered(n);
        // Mix plain random CNFs with circular ones so both verdicts occur.
        let cnf = if round % 3 == 0 {
            sampling::random_circular_cnf(&mut rng, &ground, n)
        } else {
            sampling::random_cnf(&mut rng, &ground, 2 * n)
        };
        let verdict = recognize(&cnf);
        assert_eq!(
            verdict.is_hypergraph_horn(),
            is_hypergraph_horn_oracle(&cnf).unwrap()
        );
        match verdict {
            RecognitionResult::HypergraphHorn { witness } => {
                yes_seen += 1;
                assert!(witness.edge_count() <= n * cnf.clause_count());
                let circular = HornCnf::circular(&witness);
                assert!(cnf.equivalent(&circular).unwrap());
                for edge in witness.edges() {
                    assert!(cnf.is_implicate_set(*edge));
                }
            }
            RecognitionResult::NotHypergraphHorn { certificate } => {
                // A false set no implicate set exceeds by exactly one.
                assert!(!cnf.is_true_set(certificate));
                let family = TruthTable::from_cnf(&cnf).unwrap().implicate_family().unwrap();
                assert!(family.iter().all(|i| i.minus(certificate).len() != 1));
            }
        }
    }
    assert!(yes_seen >= 10);
}

/// Realizability reference: build the full potential-implicate family by
/// the definitional test and compare the key family of its circular CNF.
fn realizable_reference(keys: &Hypergraph) -> bool {
    let n = keys.ground().len();
    let maximal_independent = keys.minimal_transversals().complement_family();
    let potential: Vec<VarSet> = subsets(n)
        .filter(|i| {
            maximal_independent
                .edges()
                .iter()
                .all(|m| i.minus(*m).len() != 1)
        })
        .collect();
    let family = Hypergraph::new(keys.ground().clone(), potential).unwrap();
    let phi = HornCnf::circular(&family);
    &minimal_keys_oracle(&phi).unwrap() == keys
}

#[test]
fn key_realization_matches_exhaustive_reference() {
    let mut rng = StdRng::seed_from_u64(110);
    for _ in 0..60 {
        let n = rng.gen_range(1..=5);
        let ground = GroundSet::numbered(n);
        let keys = sampling::random_sperner(&mut rng, &ground, n + 2);
        let expected = realizable_reference(&keys);
        match realize_keys(&keys) {
            KeyRealizationResult::Realizable { witness } => {
                assert!(expected, "witness produced for unrealizable family");
                let phi = HornCnf::circular(&witness);
                assert_eq!(minimal_keys_oracle(&phi).unwrap(), keys);
                for edge in witness.edges() {
                    assert!(is_potential_implicate_set(&keys, *edge).unwrap());
                }
            }
            KeyRealizationResult::NotRealizable { .. } => {
                assert!(!expected, "family is realizable but got a refusal");
            }
        }
    }
}

#[test]
fn potential_sets_match_definitional_true_set_containment() {
    let mut rng = StdRng::seed_from_u64(111);
    for _ in 0..60 {
        let n = rng.gen_range(1..=8);
        let ground = GroundSet::numbered(n);
        let keys = sampling::random_sperner(&mut rng, &ground, n + 1);
        let maximal_independent = keys.minimal_transversals().complement_family();
        for i in subsets(n) {
            // Definition: every maximal independent set of the key family
            // stays true under the one-edge circular CNF of `i`.
            let definitional = maximal_independent
                .edges()
                .iter()
                .all(|m| i.minus(*m).len() != 1);
            assert_eq!(
                is_potential_implicate_set(&keys, i).unwrap(),
                definitional
            );
        }
    }
}

#[test]
fn implicate_dual_laws_on_random_functions() {
    let mut rng = StdRng::seed_from_u64(112);
    for _ in 0..40 {
        let n = rng.gen_range(0..=5);
        let ground = GroundSet::numbered(n);
        let table = sampling::random_table(&mut rng, &ground).unwrap();
        let dual = table.implicate_dual().unwrap();
        assert!(dual.is_circular_representable().unwrap());
        assert_eq!(
            dual.implicate_dual().unwrap(),
            table.circular_majorant().unwrap()
        );
    }
}

#[test]
fn double_dual_is_identity_on_circular_cnfs() {
    let mut rng = StdRng::seed_from_u64(113);
    for _ in 0..40 {
        let n = rng.gen_range(0..=6);
        let ground = GroundSet::numbered(n);
        let cnf = sampling::random_circular_cnf(&mut rng, &ground, n + 2);
        let table = TruthTable::from_cnf(&cnf).unwrap();
        assert_eq!(table.implicate_dual().unwrap().implicate_dual().unwrap(), table);
    }
}

#[test]
fn dual_majorant_check_matches_table_comparison() {
    let mut rng = StdRng::seed_from_u64(114);
    for _ in 0..60 {
        let n = rng.gen_range(1..=7);
        let ground = GroundSet::numbered(n);
        let psi = sampling::random_cnf(&mut rng, &ground, 2 * n);
        let gamma = sampling::random_cnf(&mut rng, &ground, 2 * n);
        let psi_table = TruthTable::from_cnf(&psi).unwrap();
        let gamma_dual = TruthTable::from_cnf(&gamma).unwrap().implicate_dual().unwrap();
        let expected = (0..(1u64 << n))
            .all(|m| !gamma_dual.value_mask(m) || psi_table.value_mask(m));
        match majorizes_implicate_dual(&psi, &gamma).unwrap() {
            MajorantCheck::Holds => assert!(expected),
            MajorantCheck::Violated { false_set } => {
                assert!(!expected);
                assert!(!psi.is_true_set(false_set));
                assert!(gamma.is_implicate_set(false_set.complement(n)));
            }
        }
    }
}

#[test]
fn unit_intersection_freeness_characterizes_dual_majorization() {
    let mut rng = StdRng::seed_from_u64(115);
    for _ in 0..50 {
        let n = rng.gen_range(0..=5);
        let ground = GroundSet::numbered(n);
        let psi = sampling::random_cnf(&mut rng, &ground, 2 * n + 1);
        let family = TruthTable::from_cnf(&psi).unwrap().implicate_family_hypergraph().unwrap();
        let geq = majorizes_implicate_dual(&psi, &psi).unwrap().holds();
        assert_eq!(no_unit_intersections(&family).holds(), geq);
    }
}

#[test]
fn self_duality_is_unit_freeness_plus_maximality() {
    let mut rng = StdRng::seed_from_u64(116);
    let mut self_dual_seen = 0;
    for round in 0..60 {
        let n = rng.gen_range(1..=5);
        let ground = GroundSet::numbered(n);
        // Circular CNFs of complement-closed-ish families are more likely
        // to be self dual; mix them with plain random ones.
        let cnf = if round % 2 == 0 {
            let h = sampling::random_hypergraph(&mut rng, &ground, n);
            let doubled = Hypergraph::new(
                ground.clone(),
                h.edges()
                    .iter()
                    .copied()
                    .chain([VarSet::empty(), ground.full_set()]),
            )
            .unwrap();
            HornCnf::circular(&doubled)
        } else {
            sampling::random_cnf(&mut rng, &ground, 2 * n)
        };
        let table = TruthTable::from_cnf(&cnf).unwrap();
        let self_dual = table.implicate_dual().unwrap() == table;
        if self_dual {
            self_dual_seen += 1;
        }
        let family = table.implicate_family().unwrap();
        let family_hg = Hypergraph::new(ground.clone(), family.clone()).unwrap();
        let unit_free = no_unit_intersections(&family_hg).holds();
        let maximal = subsets(n).all(|s| {
            family.contains(&s) || family.iter().any(|i| i.intersection(s).len() == 1)
        });
        assert_eq!(self_dual, unit_free && maximal);
    }
    assert!(self_dual_seen >= 3);
}
