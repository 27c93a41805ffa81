//! Degree-truncated Buchberger procedure for two-sided ideals.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::word::{NcPoly, Word};
use crate::{Error, Result};

/// Generators in decreasing letter order and defining relations.
#[derive(Clone, Debug, PartialEq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relations: Vec<NcPoly>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relations: Vec<NcPoly>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Precondition("presentation needs at least one generator".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.is_empty() || generators[..i].contains(g) {
                return Err(Error::Precondition(format!("bad or duplicate generator name '{g}'")));
            }
        }
        for (i, r) in relations.iter().enumerate() {
            if r.is_zero() {
                return Err(Error::Precondition(format!("relation {} is zero", i + 1)));
            }
            if r.max_letter().is_some_and(|g| g >= generators.len()) {
                return Err(Error::Precondition(format!("relation {} uses an unknown generator", i + 1)));
            }
        }
        Ok(Presentation { generators, relations })
    }

    pub fn max_relation_degree(&self) -> usize {
        self.relations.iter().map(NcPoly::degree).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.relations.iter().all(NcPoly::is_homogeneous)
    }
}

/// A Groebner basis certified below a degree bound.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerState {
    generators: Vec<String>,
    basis: Vec<NcPoly>,
    leads: Vec<Word>,
    pub max_degree: usize,
    /// Every obstruction of degree below this bound reduces to zero.
    pub complete_below: usize,
    /// Elements produced by obstruction resolution.
    pub added_elements: usize,
    /// Input relations that were redundant or rewritten by interreduction.
    pub rewritten_relations: usize,
    pub obstructions_checked: usize,
    homogeneous: bool,
}

impl GroebnerState {
    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn basis(&self) -> &[NcPoly] {
        &self.basis
    }

    pub fn leading_words(&self) -> &[Word] {
        &self.leads
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// The input relations, made monic, already form the basis.
    pub fn relations_are_basis(&self) -> bool {
        self.added_elements == 0 && self.rewritten_relations == 0
    }

    /// Basis index and position of the leftmost occurrence of a leading word.
    pub fn find_reducer(&self, w: &Word) -> Option<(usize, usize)> {
        find_reducer(&self.leads, w)
    }

    /// Normal form: repeatedly rewrites the highest reducible word at its
    /// leftmost leading-word occurrence.
    pub fn reduce(&self, p: &NcPoly) -> NcPoly {
        reduce_with(&self.basis, &self.leads, p)
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.find_reducer(w).is_none()
    }

    fn check_degree(&self, degree: usize) -> Result<()> {
        if degree >= self.complete_below {
            return Err(Error::CompletenessInsufficient {
                needed: degree + 1,
                available: self.complete_below,
            });
        }
        Ok(())
    }

    /// Words of the given length with no leading word as a factor.
    pub fn normal_words(&self, degree: usize) -> Result<Vec<Word>> {
        self.check_degree(degree)?;
        let mut out = Vec::new();
        self.walk(&mut Vec::with_capacity(degree), degree, &mut |w| out.push(Word(w.to_vec())));
        Ok(out)
    }

    /// Number of normal words in each degree `0..=up_to`.
    pub fn hilbert_counts(&self, up_to: usize) -> Result<Vec<usize>> {
        self.check_degree(up_to)?;
        let mut counts = vec![0usize; up_to + 1];
        let mut buf = Vec::with_capacity(up_to);
        self.count(&mut buf, up_to, &mut counts);
        Ok(counts)
    }

    fn ends_with_lead(&self, buf: &[usize]) -> bool {
        self.leads.iter().any(|l| buf.ends_with(&l.0))
    }

    fn walk(&self, buf: &mut Vec<usize>, degree: usize, emit: &mut dyn FnMut(&[usize])) {
        if buf.len() == degree {
            emit(buf);
            return;
        }
        for g in 0..self.generators.len() {
            buf.push(g);
            if !self.ends_with_lead(buf) {
                self.walk(buf, degree, emit);
            }
            buf.pop();
        }
    }

    fn count(&self, buf: &mut Vec<usize>, up_to: usize, counts: &mut [usize]) {
        counts[buf.len()] += 1;
        if buf.len() == up_to {
            return;
        }
        for g in 0..self.generators.len() {
            buf.push(g);
            if !self.ends_with_lead(buf) {
                self.count(buf, up_to, counts);
            }
            buf.pop();
        }
    }
}

fn find_reducer(leads: &[Word], w: &Word) -> Option<(usize, usize)> {
    (0..w.len()).find_map(|pos| {
        leads
            .iter()
            .position(|l| w.0[pos..].starts_with(&l.0))
            .map(|i| (i, pos))
    })
}

fn reduce_with(basis: &[NcPoly], leads: &[Word], p: &NcPoly) -> NcPoly {
    let mut rem = p.clone();
    let mut out = NcPoly::zero();
    while let Some((w, c)) = rem.pop_leading() {
        match find_reducer(leads, &w) {
            Some((i, pos)) => {
                let left = w.slice(0, pos);
                let right = w.slice(pos + leads[i].len(), w.len());
                for (tw, tc) in basis[i].terms().rev().skip(1) {
                    rem.add_term(left.concat(tw).concat(&right), -(&c * tc));
                }
            }
            None => out.add_term(w, c),
        }
    }
    out
}

/// Overlap of `leads[i]` (suffix) with `leads[j]` (prefix) of length `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Obstruction {
    degree: usize,
    i: usize,
    j: usize,
    k: usize,
}

struct Builder {
    basis: Vec<Option<NcPoly>>,
    max_deg: usize,
    queue: BinaryHeap<Reverse<Obstruction>>,
    displaced: Vec<NcPoly>,
    checked: usize,
}

impl Builder {
    fn active(&self) -> (Vec<NcPoly>, Vec<Word>) {
        let basis: Vec<NcPoly> = self.basis.iter().flatten().cloned().collect();
        let leads = basis.iter().map(|g| g.leading().unwrap().0.clone()).collect();
        (basis, leads)
    }

    fn lead(&self, i: usize) -> Option<&Word> {
        self.basis[i].as_ref().map(|g| g.leading().unwrap().0)
    }

    /// Reduces `p` and, if nonzero, adds it. Elements whose leading word
    /// becomes divisible are taken out and reinserted. Returns whether `p`
    /// itself contributed a new element.
    fn insert(&mut self, p: &NcPoly) -> bool {
        let added = self.insert_one(p);
        while let Some(q) = self.displaced.pop() {
            self.insert_one(&q);
        }
        added
    }

    fn insert_one(&mut self, q: &NcPoly) -> bool {
        let (basis, leads) = self.active();
        let Some(g) = reduce_with(&basis, &leads, q).monic() else {
            return false;
        };
        let lead = g.leading().unwrap().0.clone();
        for slot in self.basis.iter_mut() {
            if slot.as_ref().is_some_and(|h| h.leading().unwrap().0.contains(&lead)) {
                self.displaced.push(slot.take().unwrap());
            }
        }
        let n = self.basis.len();
        self.basis.push(Some(g));
        for j in 0..=n {
            self.schedule(n, j);
            if j != n {
                self.schedule(j, n);
            }
        }
        true
    }

    fn schedule(&mut self, i: usize, j: usize) {
        let (Some(a), Some(b)) = (self.lead(i).cloned(), self.lead(j).cloned()) else {
            return;
        };
        let (la, lb) = (a.len(), b.len());
        for k in 1..la.min(lb) {
            let degree = la + lb - k;
            if degree <= self.max_deg && a.0[la - k..] == b.0[..k] {
                self.queue.push(Reverse(Obstruction { degree, i, j, k }));
            }
        }
    }

    fn s_poly(&self, o: Obstruction) -> Option<NcPoly> {
        let gi = self.basis[o.i].as_ref()?;
        let gj = self.basis[o.j].as_ref()?;
        let (li, lj) = (gi.leading().unwrap().0, gj.leading().unwrap().0);
        let right = lj.slice(o.k, lj.len());
        let left = li.slice(0, li.len() - o.k);
        Some(gi.sandwich(&Word::empty(), &right).sub(&gj.sandwich(&left, &Word::empty())))
    }
}

/// Resolves every overlap obstruction of degree at most `max_deg`.
pub fn buchberger_truncated(p: &Presentation, max_deg: usize) -> Result<GroebnerState> {
    if max_deg < p.max_relation_degree() {
        return Err(Error::Precondition(format!(
            "max degree {max_deg} is below the relation degree {}",
            p.max_relation_degree()
        )));
    }
    let mut b = Builder {
        basis: Vec::new(),
        max_deg,
        queue: BinaryHeap::new(),
        displaced: Vec::new(),
        checked: 0,
    };
    for r in &p.relations {
        b.insert(r);
    }
    let mut added = 0;
    while let Some(Reverse(o)) = b.queue.pop() {
        let Some(s) = b.s_poly(o) else { continue };
        b.checked += 1;
        if b.insert(&s) {
            added += 1;
        }
    }
    let (raw, leads) = b.active();
    let basis: Vec<NcPoly> = raw
        .iter()
        .map(|g| {
            let (lw, lc) = g.leading().unwrap();
            let tail = g.sub(&NcPoly::monomial(lw.clone(), lc.clone()));
            NcPoly::monomial(lw.clone(), lc.clone()).add(&reduce_with(&raw, &leads, &tail))
        })
        .collect();
    let rewritten = p
        .relations
        .iter()
        .filter_map(NcPoly::monic)
        .filter(|r| !basis.contains(r))
        .count();
    Ok(GroebnerState {
        generators: p.generators.clone(),
        basis,
        leads,
        max_degree: max_deg,
        complete_below: max_deg + 1,
        added_elements: added,
        rewritten_relations: rewritten,
        obstructions_checked: b.checked,
        homogeneous: p.is_homogeneous(),
    })
}

/// Checks that the leading words are pairwise non-divisible.
pub fn leads_irredundant(g: &GroebnerState) -> bool {
    let l = g.leading_words();
    (0..l.len()).all(|i| (0..l.len()).all(|j| i == j || !l[i].contains(&l[j])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use bernstein_core::scalar::int;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn single_power_relation() {
        let p = Presentation::new(names(&["x"]), vec![NcPoly::word(Word(vec![0, 0]))]).unwrap();
        let g = buchberger_truncated(&p, 6).unwrap();
        assert_eq!(g.basis(), &[NcPoly::word(Word(vec![0, 0]))]);
        assert!(g.relations_are_basis());
        assert_eq!(g.hilbert_counts(6).unwrap(), vec![1, 1, 0, 0, 0, 0, 0]);
        assert!(g.normal_words(7).is_err());
    }

    #[test]
    fn commutator_adds_nothing() {
        let xy = NcPoly::from_terms([(Word(vec![0, 1]), int(1)), (Word(vec![1, 0]), int(-1))]);
        let p = Presentation::new(names(&["x", "y"]), vec![xy]).unwrap();
        let g = buchberger_truncated(&p, 8).unwrap();
        assert_eq!(g.added_elements, 0);
        assert_eq!(g.obstructions_checked, 0);
        let counts = g.hilbert_counts(8).unwrap();
        assert_eq!(counts, (0..=8).map(|d| d + 1).collect::<Vec<_>>());
    }

    #[test]
    fn completion_adds_new_element() {
        // xy - x and yx - y: the overlap on xyx forces x^2 - x.
        let r1 = NcPoly::from_terms([(Word(vec![0, 1]), int(1)), (Word(vec![0]), int(-1))]);
        let r2 = NcPoly::from_terms([(Word(vec![1, 0]), int(1)), (Word(vec![1]), int(-1))]);
        let p = Presentation::new(names(&["x", "y"]), vec![r1, r2]).unwrap();
        let g = buchberger_truncated(&p, 6).unwrap();
        assert!(g.added_elements > 0);
        assert!(leads_irredundant(&g));
        let xx = NcPoly::word(Word(vec![0, 0]));
        assert_eq!(g.reduce(&xx), NcPoly::word(Word(vec![0])));
    }
}
