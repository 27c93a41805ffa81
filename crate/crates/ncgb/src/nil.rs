//! Nil identities on spans of generators and the standard presentations.

use std::collections::{BTreeMap, HashMap};

use bernstein_core::constructions::AssociativeTable;
use bernstein_core::mpoly::{Monomial, MultiPoly, VarPool};
use bernstein_core::scalar::Scalar;
use bernstein_core::Coeff;
use num_traits::One;

use crate::groebner::{GroebnerState, Presentation};
use crate::word::{NcPoly, Word};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct NilSpanReport {
    pub holds: bool,
    pub power: usize,
    /// Completeness the check relied on.
    pub needed_complete_below: usize,
    /// Number of coefficient monomials in the symbolic expansion.
    pub coefficients: usize,
    /// Normal form of a nonvanishing coefficient, as `(monomial exponents, residue)`.
    pub witness: Option<(Vec<u32>, NcPoly)>,
}

/// Expands `(Σ αᵢ gᵢ)^power` with symbolic `αᵢ` and reduces the coefficient of
/// every monomial in the `αᵢ`.
pub fn nil_span_check(
    p: &Presentation,
    span_gens: &[NcPoly],
    power: usize,
    g: &GroebnerState,
) -> Result<NilSpanReport> {
    if power == 0 || span_gens.is_empty() {
        return Err(Error::Precondition("need power >= 1 and a nonempty span".into()));
    }
    if g.generators() != p.generators.as_slice() {
        return Err(Error::Precondition("Groebner state belongs to another presentation".into()));
    }
    if span_gens.iter().any(|s| s.max_letter().is_some_and(|x| x >= p.generators.len())) {
        return Err(Error::Precondition("span generator uses an unknown letter".into()));
    }
    let max_deg = span_gens.iter().map(NcPoly::degree).max().unwrap_or(0);
    let needed = power * max_deg + 1;
    if g.complete_below < needed {
        return Err(Error::CompletenessInsufficient {
            needed,
            available: g.complete_below,
        });
    }
    let mut pool = VarPool::new();
    let alphas = pool.fresh_block("a", span_gens.len());
    let mut base: BTreeMap<Word, MultiPoly> = BTreeMap::new();
    for (s, &a) in span_gens.iter().zip(&alphas) {
        for (w, c) in s.terms() {
            let e = base.entry(w.clone()).or_insert_with(MultiPoly::nil);
            e.accumulate(&MultiPoly::var(a).scale(c));
        }
    }
    let mut acc: BTreeMap<Word, MultiPoly> = BTreeMap::from([(Word::empty(), MultiPoly::from_scalar(&Scalar::one()))]);
    for _ in 0..power {
        let mut next: BTreeMap<Word, MultiPoly> = BTreeMap::new();
        for (w1, c1) in &acc {
            for (w2, c2) in &base {
                let e = next.entry(w1.concat(w2)).or_insert_with(MultiPoly::nil);
                e.accumulate(&c1.times(c2));
            }
        }
        next.retain(|_, c| !c.is_nil());
        acc = next;
    }
    let mut by_monomial: BTreeMap<Monomial, NcPoly> = BTreeMap::new();
    for (w, c) in &acc {
        for (m, s) in c.terms() {
            by_monomial.entry(m.clone()).or_default().add_term(w.clone(), s.clone());
        }
    }
    let coefficients = by_monomial.len();
    let witness = by_monomial.iter().find_map(|(m, poly)| {
        let r = g.reduce(poly);
        (!r.is_zero()).then(|| (alphas.iter().map(|&a| m.exponent(a)).collect(), r))
    });
    Ok(NilSpanReport {
        holds: witness.is_none(),
        power,
        needed_complete_below: needed,
        coefficients,
        witness,
    })
}

/// Associative table on the normal words of degree `1..=up_to`.
#[derive(Clone, Debug)]
pub struct TruncatedAlgebra {
    pub table: AssociativeTable,
    pub words: Vec<Word>,
    pub up_to: usize,
    /// Some product of basis words has degree above `up_to` and was set to zero.
    pub overflow_zero: bool,
    /// The state is complete below `2 * up_to`, so every product of two
    /// basis words is certified before truncation.
    pub exact_products: bool,
}

/// The quotient of the presented (non-unital) algebra by all words of degree
/// greater than `up_to`. Needs homogeneous relations so that this is an ideal.
pub fn truncated_algebra_table(g: &GroebnerState, up_to: usize) -> Result<TruncatedAlgebra> {
    if !g.is_homogeneous() {
        return Err(Error::Precondition("degree truncation needs homogeneous relations".into()));
    }
    if up_to == 0 {
        return Err(Error::Precondition("truncation degree must be positive".into()));
    }
    let mut words = Vec::new();
    for d in 1..=up_to {
        words.extend(g.normal_words(d)?);
    }
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut products = BTreeMap::new();
    let mut overflow = false;
    for (i, a) in words.iter().enumerate() {
        for (j, b) in words.iter().enumerate() {
            if a.len() + b.len() > up_to {
                overflow = true;
                continue;
            }
            let r = g.reduce(&NcPoly::word(a.concat(b)));
            let mut terms = Vec::with_capacity(r.num_terms());
            for (w, c) in r.terms() {
                let k = *index
                    .get(w)
                    .ok_or_else(|| Error::Internal(format!("normal form word {w:?} outside the basis")))?;
                terms.push((k, c.clone()));
            }
            if !terms.is_empty() {
                products.insert((i, j), terms);
            }
        }
    }
    let labels = words.iter().map(|w| w.render(g.generators())).collect();
    let table = AssociativeTable::new(labels, products, Some(up_to))?;
    Ok(TruncatedAlgebra {
        table,
        words,
        up_to,
        overflow_zero: overflow,
        exact_products: g.complete_below >= 2 * up_to,
    })
}

fn gen_names(n: usize) -> Vec<String> {
    match n {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        _ => (1..=n).map(|i| format!("x{i}")).collect(),
    }
}

/// `K<x, y | x³, y³, x²y + xyx + yx², xy² + yxy + y²x>`.
pub fn kurosh_presentation() -> Presentation {
    let w = |v: &[usize]| NcPoly::word(Word(v.to_vec()));
    let relations = vec![
        w(&[0, 0, 0]),
        w(&[1, 1, 1]),
        w(&[0, 0, 1]).add(&w(&[0, 1, 0])).add(&w(&[1, 0, 0])),
        w(&[0, 1, 1]).add(&w(&[1, 0, 1])).add(&w(&[1, 1, 0])),
    ];
    Presentation::new(gen_names(2), relations).expect("valid presentation")
}

/// `A_{n,k}`: `n` generators, with the `k`-th power of every linear
/// combination of generators zero. Relations are the coefficients of the
/// expansion, one per multiset of `k` generators.
pub fn nil_presentation(n: usize, k: usize) -> Result<Presentation> {
    if n == 0 || k == 0 {
        return Err(Error::Precondition("need n >= 1 and k >= 1".into()));
    }
    let mut groups: BTreeMap<Vec<usize>, NcPoly> = BTreeMap::new();
    let total = n.pow(k as u32);
    for mut code in 0..total {
        let mut letters = vec![0; k];
        for slot in letters.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        let mut content = vec![0usize; n];
        for &l in &letters {
            content[l] += 1;
        }
        groups.entry(content).or_default().add_term(Word(letters), Scalar::one());
    }
    let relations = groups.into_values().rev().collect();
    Presentation::new(gen_names(n), relations)
}

/// The generators as degree-one polynomials.
pub fn generator_span(p: &Presentation) -> Vec<NcPoly> {
    (0..p.generators.len()).map(|g| NcPoly::word(Word::letter(g))).collect()
}
