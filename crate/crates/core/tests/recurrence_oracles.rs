//! Closed forms of the recurrence against direct iteration and brute-force sums.

use proptest::prelude::*;

use fuchsian::recurrence::{
    contract_multilinear, count_admissible, enumerate_compositions, iterate_direct,
    iterate_direct_inhomogeneous, theorem1_by_compositions, theorem1_table, theorem2_closed_form,
    theorem2_table, transfer_bracket, transfer_row, w_tensor_component, CoefficientRule,
    InhomogeneityRule, WIndexTuple,
};
use fuchsian::{Complex, Error};

fn complex() -> impl Strategy<Value = Complex> {
    (-1.5..1.5f64, -1.5..1.5f64).prop_map(|(re, im)| Complex::new(re, im))
}

fn table(span: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<Complex>>> {
    prop::collection::vec(prop::collection::vec(complex(), cols), span)
}

fn rule_strategy(max_span: usize, cols: usize) -> impl Strategy<Value = CoefficientRule> {
    (1..=max_span).prop_flat_map(move |s| table(s, cols)).prop_map(|t| CoefficientRule::from_table(t).unwrap())
}

fn close(a: Complex, b: Complex, tol: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(b.norm()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn closed_form_matches_iteration(rule in rule_strategy(5, 20), w0 in complex()) {
        let direct = iterate_direct(&rule, w0, 20).unwrap();
        let closed = theorem1_table(&rule, w0, 20).unwrap();
        for n in 0..=20 {
            prop_assert!(close(direct.values[n], closed.values[n], 1e-11));
        }
        for n in 0..=10 {
            let sum = theorem1_by_compositions(&rule, w0, n).unwrap();
            prop_assert!(close(sum, direct.values[n], 1e-11));
        }
    }

    #[test]
    fn tensor_contraction_matches(rule in rule_strategy(3, 9)) {
        let direct = iterate_direct(&rule, Complex::new(1.0, 0.0), 9).unwrap();
        for n in 0..=9 {
            prop_assert!(close(contract_multilinear(&rule, n).unwrap(), direct.values[n], 1e-12));
        }
    }

    #[test]
    fn row_and_column_brackets_agree(rule in rule_strategy(4, 15)) {
        let row = transfer_row(&rule, 15).unwrap();
        for p in 0..=15 {
            prop_assert!(close(row[p], transfer_bracket(&rule, 15, p).unwrap(), 1e-11));
        }
    }

    #[test]
    fn inhomogeneous_closed_form(
        rule in rule_strategy(5, 18),
        phi in prop::collection::vec(complex(), 18),
        v0 in complex(),
    ) {
        let phi = InhomogeneityRule::Table(phi);
        let direct = iterate_direct_inhomogeneous(&rule, &phi, v0, 18).unwrap();
        let closed = theorem2_table(&rule, &phi, v0, 18).unwrap();
        for n in 0..=18 {
            prop_assert!(close(direct.values[n], closed.values[n], 1e-11));
        }
    }

    #[test]
    fn inhomogeneous_linearity(
        rule in rule_strategy(3, 12),
        phi1 in prop::collection::vec(complex(), 12),
        phi2 in prop::collection::vec(complex(), 12),
        v1 in complex(),
        v2 in complex(),
        s in complex(),
    ) {
        let combined: Vec<Complex> = phi1.iter().zip(&phi2).map(|(a, b)| a + s * b).collect();
        for n in [0, 1, 5, 12] {
            let lhs = theorem2_closed_form(&rule, &InhomogeneityRule::Table(combined.clone()), v1 + s * v2, n).unwrap();
            let a = theorem2_closed_form(&rule, &InhomogeneityRule::Table(phi1.clone()), v1, n).unwrap();
            let b = theorem2_closed_form(&rule, &InhomogeneityRule::Table(phi2.clone()), v2, n).unwrap();
            prop_assert!(close(lhs, a + s * b, 1e-10));
        }
    }

    #[test]
    fn admissible_tuples_are_compositions(len in 0usize..9) {
        let from_blocks: usize = enumerate_compositions(len, len.max(1)).len();
        prop_assert_eq!(count_admissible(len, len.max(1)) as usize, from_blocks);
    }
}

#[test]
fn admissible_tuple_structure() {
    // blocks: entry z followed by z-1 zeros
    assert_eq!(WIndexTuple(vec![3, 0, 0, 1, 2, 0]).blocks(), Some(vec![3, 1, 2]));
    assert_eq!(WIndexTuple(vec![0, 2]).blocks(), None);
    assert_eq!(WIndexTuple(vec![1, 0]).blocks(), None);
    assert_eq!(w_tensor_component(&[2, 0, 2, 0]), 1);
    assert_eq!(w_tensor_component(&[2, 2, 0, 0]), 0);
    assert_eq!(w_tensor_component(&[]), 1);
}

#[test]
fn short_tables_are_reported() {
    let rule = CoefficientRule::from_table(vec![vec![Complex::new(1.0, 0.0); 3]]).unwrap();
    assert_eq!(
        iterate_direct(&rule, Complex::new(1.0, 0.0), 4),
        Err(Error::TableTooShort { requested: 4, available: 3 })
    );
    assert_eq!(
        theorem1_table(&rule, Complex::new(1.0, 0.0), 4).map(|t| t.values.len()),
        Err(Error::TableTooShort { requested: 4, available: 3 })
    );
    assert!(matches!(CoefficientRule::from_table(vec![]), Err(Error::MalformedTable(_))));
    assert!(matches!(
        CoefficientRule::from_table(vec![vec![Complex::new(f64::NAN, 0.0)]]),
        Err(Error::NonFinite(_))
    ));
}
