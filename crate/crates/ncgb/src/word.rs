//! Words and noncommutative polynomials over a finite alphabet.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use bernstein_core::scalar::{self, Scalar};
use num_traits::{One, Zero};

/// A word over generator indices, ordered degree-lexicographically with
/// generator 0 the largest letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: usize) -> Self {
        Word(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    /// Position of the leftmost occurrence of `pat` as a factor.
    pub fn find(&self, pat: &Word) -> Option<usize> {
        if pat.len() > self.len() {
            return None;
        }
        (0..=self.len() - pat.len()).find(|&i| self.0[i..].starts_with(&pat.0))
    }

    pub fn contains(&self, pat: &Word) -> bool {
        self.find(pat).is_some()
    }

    pub fn pow(&self, t: usize) -> Word {
        Word(self.0.repeat(t))
    }

    /// Letters concatenated when every name is one character, else joined by `*`.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_empty() {
            return "1".into();
        }
        let sep = if names.iter().all(|n| n.chars().count() == 1) { "" } else { "*" };
        self.0.iter().map(|&g| names[g].as_str()).collect::<Vec<_>>().join(sep)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of the free associative algebra; no stored zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly::default()
    }

    pub fn monomial(w: Word, c: Scalar) -> Self {
        let mut p = NcPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn word(w: Word) -> Self {
        NcPoly::monomial(w, Scalar::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut p = NcPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> usize {
        self.leading().map_or(0, |(w, _)| w.len())
    }

    pub fn is_homogeneous(&self) -> bool {
        let d = self.degree();
        self.terms.keys().all(|w| w.len() == d)
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.terms.keys().flat_map(|w| w.0.iter().copied()).max()
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Word, Scalar)> {
        self.terms.pop_last()
    }

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        let mut p = self.clone();
        for (w, c) in other.terms() {
            p.add_term(w.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> NcPoly {
        NcPoly::from_terms(self.terms().map(|(w, c)| (w.clone(), c * s)))
    }

    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        let mut p = NcPoly::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                p.add_term(a.concat(b), x * y);
            }
        }
        p
    }

    /// `left * self * right`.
    pub fn sandwich(&self, left: &Word, right: &Word) -> NcPoly {
        NcPoly::from_terms(self.terms().map(|(w, c)| (left.concat(w).concat(right), c.clone())))
    }

    /// Scaled so the leading coefficient is 1; `None` for zero.
    pub fn monic(&self) -> Option<NcPoly> {
        let (_, c) = self.leading()?;
        Some(self.scale(&c.recip()))
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms().rev().enumerate() {
            let neg = scalar::is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !abs.is_one() || w.is_empty() {
                out.push_str(&scalar::format(&abs));
                if !w.is_empty() {
                    out.push(' ');
                }
            }
            if !w.is_empty() {
                out.push_str(&w.render(names));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use bernstein_core::scalar::int;

    #[test]
    fn deglex_with_first_generator_largest() {
        let w = |v: &[usize]| Word(v.to_vec());
        assert!(w(&[0, 0, 1]) > w(&[0, 1, 0]));
        assert!(w(&[0, 1, 0]) > w(&[1, 0, 0]));
        assert!(w(&[1, 1, 1]) > w(&[0, 0]));
        assert_eq!(w(&[1, 0, 1, 0]).find(&w(&[0, 1])), Some(1));
    }

    #[test]
    fn leading_term_and_rendering() {
        let names = vec!["x".to_string(), "y".to_string()];
        let p = NcPoly::from_terms([
            (Word(vec![1, 0, 0]), int(1)),
            (Word(vec![0, 1, 0]), int(-2)),
            (Word(vec![0, 0, 1]), int(1)),
        ]);
        assert_eq!(p.leading().unwrap().0, &Word(vec![0, 0, 1]));
        assert_eq!(p.render(&names), "xxy - 2 xyx + yxx");
        assert!(p.sub(&p).is_zero());
    }
}
