use kerov_core::exact::{factorial, format_scalar, parse_scalar, to_f64, uint};
use kerov_core::growth::{up_distribution, up_distribution_interlacing, FastGrowth};
use kerov_core::jack::{theta_table, theta_transposition};
use kerov_core::measures::jack_weight;
use kerov_core::{partitions_of, syt_enumerate, Alpha, Partition, Scalar};
use num_traits::One;
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..7, 0..6).prop_map(Partition::from_unsorted)
}

fn alpha() -> impl Strategy<Value = Alpha> {
    (1i64..7, 1i64..7).prop_map(|(p, q)| Alpha::from_ratio(p, q).unwrap())
}

proptest! {
    #[test]
    fn conjugate_is_an_involution(la in partition()) {
        let c = la.conjugate();
        prop_assert_eq!(c.size(), la.size());
        prop_assert_eq!(c.conjugate(), la);
    }

    #[test]
    fn adding_then_removing_a_cell(la in partition()) {
        for cell in la.addable_cells() {
            let big = la.with_cell(cell).unwrap();
            prop_assert_eq!(big.size(), la.size() + 1);
            prop_assert!(big.removable_cells().contains(&cell));
            prop_assert_eq!(big.without_cell(cell).unwrap(), la.clone());
        }
    }

    #[test]
    fn hook_formula_counts_tableaux(la in prop::collection::vec(1usize..5, 0..4).prop_map(Partition::from_unsorted)) {
        let count = syt_enumerate(&la).count();
        prop_assert_eq!(uint(&la.syt_count()), Scalar::from_integer(count.into()));
    }

    #[test]
    fn jack_weight_duality(la in partition(), a in alpha()) {
        prop_assert_eq!(jack_weight(&la, &a), jack_weight(&la.conjugate(), &a.inverse()));
    }

    #[test]
    fn transition_forms_agree(la in partition(), a in alpha()) {
        let by_psi = up_distribution(&la, &a);
        let by_interlacing = up_distribution_interlacing(&la, &a);
        prop_assert_eq!(by_psi.total(), Scalar::one());
        for (target, prob) in &by_interlacing.targets {
            prop_assert_eq!(&by_psi.probability(target), prob);
        }
    }

    #[test]
    fn float_sampler_matches_exact_probabilities(la in partition(), a in alpha()) {
        let g = FastGrowth::from_partition(&la, a.to_f64());
        let exact = up_distribution(&la, &a);
        for (cell, prob) in g.corner_probabilities() {
            let want = to_f64(&exact.probability(&la.with_cell(cell).unwrap()));
            prop_assert!((prob - want).abs() < 1e-12, "{} {} {}", cell.row, prob, want);
        }
    }

    #[test]
    fn transposition_theta_matches_table(n in 2usize..6, a in alpha()) {
        let table = theta_table(n, &a).unwrap();
        let mu = Partition::transposition_type(n).unwrap();
        for la in partitions_of(n) {
            prop_assert_eq!(table.get(&la, &mu).unwrap(), &theta_transposition(&la, &a));
        }
    }

    #[test]
    fn scalar_text_round_trip(p in -1000i64..1000, q in 1i64..1000) {
        let x = Scalar::new(p.into(), q.into());
        prop_assert_eq!(parse_scalar(&format_scalar(&x)).unwrap(), x);
    }
}

#[test]
fn squared_dimensions_sum_to_factorial() {
    for n in 0..=9 {
        let total: num_bigint::BigUint = partitions_of(n).map(|la| {
            let f = la.syt_count();
            &f * &f
        }).sum();
        assert_eq!(total, factorial(n), "n={n}");
    }
}
