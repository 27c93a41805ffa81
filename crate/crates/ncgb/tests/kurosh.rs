use bernstein_core::constructions::from_associative;
use bernstein_core::scalar::{frac, int};
use bernstein_core::train::train_analysis;
use ncgb::nil::generator_span;
use ncgb::*;

fn w(v: &[usize]) -> Word {
    Word(v.to_vec())
}

/// Words over {x, y} of length `d` avoiding the four cubic leading words,
/// counted by brute force over all 2^d words.
fn avoidance_count(d: usize) -> usize {
    let forbidden = [[0, 0, 0], [0, 0, 1], [0, 1, 1], [1, 1, 1]];
    (0..1usize << d)
        .filter(|code| {
            let letters: Vec<usize> = (0..d).map(|i| (code >> (d - 1 - i)) & 1).collect();
            !letters.windows(3).any(|t| forbidden.iter().any(|f| t == f))
        })
        .count()
}

#[test]
fn relations_form_a_basis() {
    let p = kurosh_presentation();
    let g = buchberger_truncated(&p, 12).unwrap();
    assert_eq!(g.added_elements, 0);
    assert!(g.relations_are_basis());
    assert_eq!(g.complete_below, 13);
    assert!(g.obstructions_checked > 0);
    let leads: Vec<Word> = g.leading_words().to_vec();
    for l in [w(&[0, 0, 0]), w(&[1, 1, 1]), w(&[0, 0, 1]), w(&[0, 1, 1])] {
        assert!(leads.contains(&l));
    }
}

#[test]
fn reductions_and_normal_words() {
    let g = buchberger_truncated(&kurosh_presentation(), 12).unwrap();
    assert!(g.reduce(&NcPoly::word(w(&[0, 0, 0]))).is_zero());
    let xyxy = NcPoly::word(w(&[0, 1, 0, 1]));
    assert_eq!(g.reduce(&xyxy), xyxy);
    assert!(g.reduce(&NcPoly::zero()).is_zero());
    assert_eq!(g.normal_words(2).unwrap(), vec![w(&[0, 0]), w(&[0, 1]), w(&[1, 0]), w(&[1, 1])]);
    for t in 1..=6 {
        assert!(g.is_normal(&w(&[0, 1]).pow(t)));
    }
    let counts = g.hilbert_counts(12).unwrap();
    for d in 1..=12 {
        assert_eq!(counts[d], avoidance_count(d), "degree {d}");
        assert!(counts[d] > 0);
    }
}

#[test]
fn cubes_of_the_span_vanish() {
    let p = kurosh_presentation();
    let g = buchberger_truncated(&p, 12).unwrap();
    let span = generator_span(&p);
    let r = nil_span_check(&p, &span, 3, &g).unwrap();
    assert!(r.holds);
    assert_eq!(r.coefficients, 4);
    let sq = nil_span_check(&p, &span, 2, &g).unwrap();
    assert!(!sq.holds);
    let low = buchberger_truncated(&p, 3).unwrap();
    assert!(nil_span_check(&p, &span, 3, &low).is_ok());
    assert_eq!(
        nil_span_check(&p, &span, 4, &low).unwrap_err(),
        Error::CompletenessInsufficient { needed: 5, available: 4 }
    );
}

#[test]
fn truncated_quotient_is_associative() {
    let g = buchberger_truncated(&kurosh_presentation(), 12).unwrap();
    let t = truncated_algebra_table(&g, 4).unwrap();
    let counts = g.hilbert_counts(4).unwrap();
    assert_eq!(t.table.dim(), counts[1..].iter().sum::<usize>());
    assert!(t.overflow_zero && t.exact_products);
    t.table.check_associative().unwrap();
}

#[test]
fn single_cube_relation() {
    let p = Presentation::new(vec!["x".into()], vec![NcPoly::word(w(&[0, 0, 0]))]).unwrap();
    let g = buchberger_truncated(&p, 6).unwrap();
    assert!(nil_span_check(&p, &generator_span(&p), 3, &g).unwrap().holds);
    let t = truncated_algebra_table(&g, 2).unwrap();
    assert_eq!(t.table.labels(), &["x".to_string(), "xx".to_string()]);
    let x2 = [int(0), int(1)];
    let x = [int(1), int(0)];
    assert_eq!(t.table.mul(&x, &x2), vec![int(0), int(0)]);
    assert_eq!(t.table.mul(&x, &x), x2.to_vec());
}

#[test]
fn kurosh_quotient_gives_rank_four_train_algebra() {
    let g = buchberger_truncated(&kurosh_presentation(), 12).unwrap();
    let t = truncated_algebra_table(&g, 4).unwrap();
    let d = t.table.dim();
    let s: Vec<Vec<_>> = (0..2)
        .map(|k| (0..d).map(|i| if i == k { int(1) } else { int(0) }).collect())
        .collect();
    let a = from_associative(&t.table, &s).unwrap();
    let r = train_analysis(&a, 0).unwrap();
    assert!(r.is_train);
    assert_eq!(r.rank, Some(4));
    assert_eq!(
        r.train_poly.unwrap().descending_from_top(),
        vec![int(1), frac(-3, 2), frac(1, 2), int(0)]
    );
}
