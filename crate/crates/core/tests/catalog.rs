use bernstein_core::analysis::{analyze_element, minimal_poly_form_check, singly_generated_subalgebra, train_element_rank, TrainRank};
use bernstein_core::constructions::*;
use bernstein_core::scalar::{frac, int};
use bernstein_core::structure::{classify, find_idempotent, peirce, zero_v_squared};
use bernstein_core::symbolic::{generic_degree, generic_element, generic_principal_powers};
use bernstein_core::train::{
    engel_yagzhev, ideal_power_chain, operator_nilpotency_check, train_analysis, OperatorCarrier,
};
use bernstein_core::{Element, UnivariatePoly, VarPool};

#[test]
fn example_not_train_reports() {
    let a = example_not_train();
    let x = Element::from_ints(&[1, 1, 1]);
    assert_eq!(a.principal_power(&x, 2), Element::from_ints(&[1, 3, 0]));
    assert_eq!(a.principal_power(&x, 3), Element::from_ints(&[1, 5, 0]));
    let r = analyze_element(&a, &x).unwrap();
    let expected = UnivariatePoly::new(vec![int(0), int(0), int(-1), int(1)])
        .mul(&UnivariatePoly::linear_root(frac(3, 2)));
    assert_eq!(r.minimal_poly, expected);
    let t = train_analysis(&a, 0).unwrap();
    assert!(!t.is_train && !t.is_locally_train);
    assert_eq!(generic_degree(&a, 0).degree, 3);
}

#[test]
fn shift_algebras() {
    let up = shift_up_truncated(8).unwrap();
    let x = up.basis_element(1).add(&up.basis_element(9));
    for i in 2..=8 {
        assert_eq!(up.principal_power(&x, i), up.basis_element(i).scale(&int(2)));
    }
    let down = shift_down_truncated(8).unwrap();
    for k in 1..=8 {
        let x = down.basis_element(k).add(&down.basis_element(9));
        assert_eq!(analyze_element(&down, &x).unwrap().degree, k);
    }
    assert!(train_analysis(&down, 0).unwrap().is_locally_train);
}

#[test]
fn free_truncation_ranks_and_round_trip() {
    for n in 3..=7 {
        let t = free_single_truncated(n, None).unwrap();
        let a = free_generator(&t).unwrap();
        assert_eq!(train_element_rank(&t, &a).unwrap(), TrainRank::Rank(n + 1));
        let r = train_analysis(&t, 0).unwrap();
        assert_eq!(r.rank, Some(n + 1), "n = {n}");
        let s = singly_generated_subalgebra(&t, &a).unwrap();
        assert_eq!(s.table.products().collect::<Vec<_>>(), t.products().collect::<Vec<_>>());
        assert_eq!(s.table.labels(), t.labels());
    }
    let betas = [int(0), int(1), int(0)];
    let t = free_single_truncated(5, Some(&betas)).unwrap();
    assert!(!train_analysis(&t, 0).unwrap().is_train);
}

#[test]
fn three_dim_family_rank_follows_alpha() {
    for alpha in [int(1), frac(3, 2), frac(5, 2), int(-2)] {
        let t = three_dim_alpha(&alpha);
        let x = free_generator(&t).unwrap();
        let r = analyze_element(&t, &x).unwrap();
        let expected = UnivariatePoly::new(vec![int(0), int(0), int(-1), int(1)])
            .mul(&UnivariatePoly::linear_root(&alpha - int(1)));
        assert_eq!(r.minimal_poly, expected);
        let rank = train_element_rank(&t, &x).unwrap();
        assert_eq!(rank == TrainRank::Rank(4), alpha == frac(3, 2));
    }
}

#[test]
fn zhevlakov_is_train_of_rank_four() {
    let (n, p) = zhevlakov_truncated(4, 4).unwrap();
    let a = adjoin_idempotent(&n, &p).unwrap();
    let e = find_idempotent(&a).unwrap();
    let pd = peirce(&a, &e).unwrap();
    let mut vars = VarPool::new();
    let x = generic_element(&a, &mut vars, "t", Some(&pd.n_basis()));
    assert!(generic_principal_powers(&a, &x, 3)[2].is_zero());
    let t = train_analysis(&a, 0).unwrap();
    assert_eq!(t.rank, Some(4));
    assert_eq!(
        t.train_poly.unwrap().descending_from_top(),
        vec![int(1), frac(-3, 2), frac(1, 2), int(0)]
    );
    let ey = engel_yagzhev(&a, &pd.n_basis(), 0).unwrap();
    assert!(ey.square_square.holds && ey.agree());
    assert_eq!(ey.nil_index, Some(3));
}

#[test]
fn associative_construction_operator_index() {
    let c = truncated_polynomial_ring(3).unwrap();
    let a = from_associative(&c, &[vec![int(0), int(1), int(0)]]).unwrap();
    let r = classify(&a).unwrap();
    assert!(r.is_exceptional);
    assert_eq!(operator_nilpotency_check(&a, &r.peirce, OperatorCarrier::U, 0).unwrap(), Some(3));
    assert!(train_analysis(&a, 0).unwrap().is_train);
}

#[test]
fn low_degree_algebras() {
    let el = elementary(3).unwrap();
    assert_eq!(generic_degree(&el, 0).degree, 1);
    assert_eq!(train_analysis(&el, 0).unwrap().rank, Some(2));
    let c = constant_algebra();
    assert_eq!(generic_degree(&c, 0).degree, 2);
    assert!(classify(&c).unwrap().is_jordan);
    let n = nuclear_example();
    let r = classify(&n).unwrap();
    assert!(r.is_nuclear && r.is_jordan && !r.is_exceptional);
}

#[test]
fn v_squared_transform_preserves_train_status() {
    for t in catalog() {
        let e = find_idempotent(&t).unwrap();
        let p = peirce(&t, &e).unwrap();
        let z = zero_v_squared(&t, &p).unwrap();
        let (a, b) = (train_analysis(&t, 1).unwrap(), train_analysis(&z, 1).unwrap());
        assert_eq!(a.is_train, b.is_train, "{}", t.name());
    }
}

#[test]
fn barideal_is_solvable() {
    for t in catalog() {
        let n = t.barideal_basis().unwrap();
        let chain = ideal_power_chain(&t, &n).unwrap();
        assert!(chain.solvability_index.is_some_and(|i| i <= 3), "{}", t.name());
    }
}

#[test]
fn weight_zero_element_outside_minimal_poly_form() {
    let a = example_not_train();
    let x = Element::from_ints(&[0, 1, 1]);
    let r = analyze_element(&a, &x).unwrap();
    assert_eq!(r.minimal_poly, UnivariatePoly::new(vec![int(0), int(0), int(-1), int(1)]));
    assert!(!minimal_poly_form_check(&a, &r).unwrap());
}
