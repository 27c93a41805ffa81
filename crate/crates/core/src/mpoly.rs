//! Multivariate polynomials over the rationals in commuting indeterminates.

use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::ring::Coeff;
use crate::scalar::{self, Scalar};

/// Indeterminate index. Names live in a [`VarPool`].
pub type Var = u32;

/// A power product, stored sparsely as `(var, exponent)` pairs sorted by var.
///
/// Ordered lexicographically with lower variable indices more significant,
/// which is a monomial order (needed by exact division).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            let mut d = 0;
            if j < other.0.len() && other.0[j].0 == v {
                d = other.0[j].1;
                j += 1;
            } else if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if d > e {
                return None;
            }
            if e > d {
                out.push((v, e - d));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// The monomial with variable `v` removed.
    pub fn without(&self, v: Var) -> Monomial {
        Monomial(self.0.iter().copied().filter(|&(w, _)| w != v).collect())
    }

    pub fn eval(&self, point: &dyn Fn(Var) -> Scalar) -> Scalar {
        let mut acc = Scalar::one();
        for &(v, e) in &self.0 {
            acc *= scalar::pow(&point(v), e);
        }
        acc
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va < vb {
                        return Ordering::Greater;
                    }
                    if va > vb {
                        return Ordering::Less;
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn constant(c: Scalar) -> Self {
        let mut p = MultiPoly::default();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::term(Monomial::var(v), Scalar::one())
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut p = MultiPoly::default();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Constant value if the polynomial has no indeterminates.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&(v, _)| v))
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn eval(&self, point: &dyn Fn(Var) -> Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            acc += c * m.eval(point);
        }
        acc
    }

    /// Evaluates at a dense point indexed by variable number; missing
    /// variables are taken as zero.
    pub fn eval_at(&self, point: &[Scalar]) -> Scalar {
        self.eval(&|v| point.get(v as usize).cloned().unwrap_or_else(Scalar::zero))
    }

    /// Substitutes `value` for `v`, leaving the other indeterminates free.
    pub fn substitute(&self, v: Var, value: &Scalar) -> MultiPoly {
        let mut out = MultiPoly::default();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            out.add_term(m.without(v), c * scalar::pow(value, e));
        }
        out
    }

    /// Views the polynomial as univariate in `v`: exponent -> coefficient.
    pub fn coefficients_in(&self, v: Var) -> BTreeMap<u32, MultiPoly> {
        let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exponent(v))
                .or_default()
                .add_term(m.without(v), c.clone());
        }
        out
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (dm, dc) = d.leading()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = MultiPoly::default();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(&dm)?;
            let qc = rc / &dc;
            let step = MultiPoly::term(qm, qc);
            rem = rem.minus(&step.times(d));
            quot.accumulate(&step);
        }
        Some(quot)
    }
}

impl Coeff for MultiPoly {
    const PARALLEL_WORTHY: bool = true;

    fn nil() -> Self {
        MultiPoly::default()
    }

    fn from_scalar(s: &Scalar) -> Self {
        MultiPoly::constant(s.clone())
    }

    fn is_nil(&self) -> bool {
        self.terms.is_empty()
    }

    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.accumulate(other);
        out
    }

    fn accumulate(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    fn times(&self, other: &Self) -> Self {
        let mut out = MultiPoly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return MultiPoly::default();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    fn add_product(&mut self, a: &Self, b: &Self, s: &Scalar) {
        if a.is_nil() || b.is_nil() || s.is_zero() {
            return;
        }
        for (ma, ca) in &a.terms {
            let cas = ca * s;
            for (mb, cb) in &b.terms {
                self.add_term(ma.mul(mb), &cas * cb);
            }
        }
    }
}

/// Names for indeterminates, allocated on demand.
#[derive(Clone, Debug, Default)]
pub struct VarPool {
    names: Vec<String>,
}

impl VarPool {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn fresh(&mut self, name: impl Into<String>) -> Var {
        self.names.push(name.into());
        (self.names.len() - 1) as Var
    }

    /// Allocates `n` indeterminates named `prefix1 … prefixn`.
    pub fn fresh_block(&mut self, prefix: &str, n: usize) -> Vec<Var> {
        (1..=n).map(|i| self.fresh(format!("{prefix}{i}"))).collect()
    }

    pub fn name(&self, v: Var) -> &str {
        &self.names[v as usize]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

/// Renders with variable names `t{index}`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = scalar::is_negative(c);
            let mag = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let show_coeff = !mag.is_one() || m.is_one();
            if show_coeff {
                write!(f, "{}", scalar::format(&mag))?;
            }
            for (i, &(v, e)) in m.0.iter().enumerate() {
                if show_coeff || i > 0 {
                    write!(f, "*")?;
                }
                write!(f, "t{v}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Finds a rational point where `p` does not vanish.
///
/// Variables are fixed one at a time: the leading coefficient (in the current
/// variable) is made nonzero recursively, then the variable itself is tried on
/// the sequence 0, 1, -1, 2, -2, … which succeeds within `deg + 1` steps.
/// Variables not occurring in `p` are assigned 0.
pub fn nonvanishing_point(p: &MultiPoly) -> Option<BTreeMap<Var, Scalar>> {
    if p.is_zero() {
        return None;
    }
    let mut assignment = BTreeMap::new();
    find_point(p, &mut assignment);
    Some(assignment)
}

fn find_point(p: &MultiPoly, assignment: &mut BTreeMap<Var, Scalar>) {
    let vars = p.variables();
    let Some(&v) = vars.first() else {
        return;
    };
    let coeffs = p.coefficients_in(v);
    let (_, lead) = coeffs.iter().next_back().expect("nonzero polynomial");
    find_point(lead, assignment);
    let mut reduced = p.clone();
    for (w, val) in assignment.iter() {
        if *w != v {
            reduced = reduced.substitute(*w, val);
        }
    }
    for candidate in spiral() {
        if !reduced.substitute(v, &candidate).is_zero() {
            assignment.insert(v, candidate);
            return;
        }
    }
}

/// 0, 1, -1, 2, -2, …
pub fn spiral() -> impl Iterator<Item = Scalar> {
    (0i64..).map(|k| {
        if k == 0 {
            scalar::int(0)
        } else if k % 2 == 1 {
            scalar::int((k + 1) / 2)
        } else {
            scalar::int(-k / 2)
        }
    })
}
