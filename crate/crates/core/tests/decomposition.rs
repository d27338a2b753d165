use std::collections::BTreeMap;

use betti_core::bounds::chain_quantities;
use betti_core::survey::{random_symmetrized_decomposition, trial_rng};
use betti_core::{es_decompose, symmetrize, synthesize, verify_decomposition, Rational};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn symmetrized_round_trip(seed in any::<u64>(), s in 2usize..=4, max_n in 4i64..=20, fixed in any::<bool>()) {
        let mut rng = trial_rng(seed, 0);
        let sd = random_symmetrized_decomposition(&mut rng, s, max_n.max(s as i64), fixed);
        let table = synthesize(&sd).unwrap();
        prop_assert_eq!(&table.dual(s, sd.n).unwrap(), &table);
        if fixed {
            prop_assert_eq!(table.self_duality(), Some(sd.n));
        }

        let chain = es_decompose(&table).unwrap();
        // exact re-summation
        prop_assert_eq!(&chain.to_table(), &table);
        // multiplicity from the chain and from the PS functionals agree
        prop_assert_eq!(chain.multiplicity(), table.multiplicity().unwrap());
        // every greedy step climbs strictly
        for w in chain.terms().windows(2) {
            prop_assert!(w[0].sequence.is_strictly_below(&w[1].sequence));
        }
        // coefficients are invariant under dualizing the sequences
        let coeffs: BTreeMap<_, _> = chain.terms().iter().map(|t| (t.sequence.clone(), t.coefficient.clone())).collect();
        for t in chain.terms() {
            prop_assert_eq!(coeffs.get(&t.sequence.dual(sd.n)), Some(&t.coefficient));
        }

        let back = symmetrize(&chain, sd.n).unwrap();
        prop_assert_eq!(&back, &sd);
        prop_assert!(verify_decomposition(&table, &back).all_passed());
    }
}

#[test]
fn chain_quantities_agree_with_table_values() {
    for index in 0..100 {
        let mut rng = trial_rng(5, index);
        let sd = random_symmetrized_decomposition(&mut rng, 3, 14, true);
        let table = synthesize(&sd).unwrap();
        let (chain_e, chain_bound) = chain_quantities(&sd).unwrap();
        assert_eq!(chain_e, table.multiplicity().unwrap());
        assert_eq!(
            chain_bound,
            betti_core::bounds::theorem_bound(&table).unwrap()
        );
        assert_eq!(
            table.column_total(0),
            sd.terms
                .iter()
                .fold(Rational::from_integer(0.into()), |acc, t| {
                    acc + &t.coefficient * betti_core::bounds::b_of(&t.sequence).unwrap()
                })
        );
    }
}
