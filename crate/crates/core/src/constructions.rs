//! Catalog of Bernstein algebras and the general constructions: adjoining an
//! idempotent, the associative-to-Bernstein construction, quotients and
//! generated subalgebras.
//!
//! Every truncation is a quotient by an ideal, never ad-hoc zeroing.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{AlgebraTable, Element, TableBuilder};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::scalar::{frac, half, int, Scalar};
use crate::structure::{is_ideal, span_of};
use crate::symbolic::CarrierCoords;

/// The rank-2 (elementary) algebra: `e^2 = e`, `e n_i = ½ n_i`, `N^2 = 0`.
/// It satisfies `x^2 = ω(x) x`.
pub fn elementary(dim: usize) -> Result<AlgebraTable> {
    if dim == 0 {
        return Err(Error::Precondition("dimension must be positive".into()));
    }
    let labels: Vec<String> = std::iter::once("e".to_string())
        .chain((1..dim).map(|i| format!("n{i}")))
        .collect();
    let mut b = TableBuilder::new(format!("elementary({dim})"), &labels).add("e", "e", &[("e", int(1))]);
    for l in &labels[1..] {
        b = b.add("e", l, &[(l.as_str(), half())]);
    }
    b.weight(&[("e", int(1))]).build()
}

/// Type `(1, 1)`: `e^2 = e`, `ev = v^2 = 0`.
///
/// The printed source table reads `e^2 = 2`; the idempotent reading `e^2 = e`
/// is the one consistent with the surrounding text.
pub fn constant_algebra() -> AlgebraTable {
    TableBuilder::new("constant", &["e", "v"])
        .add("e", "e", &[("e", int(1))])
        .weight(&[("e", int(1))])
        .build()
        .expect("valid table")
}

/// `e^2 = e`, `eu_1 = ½u_1`, `v_1^2 = 4(1-α)u_1`, `u_1 v_1 = (α - 3/2)u_1`.
/// Generated by `e + 2u_1 + v_1`.
pub fn three_dim_alpha(alpha: &Scalar) -> AlgebraTable {
    TableBuilder::new(format!("three-dim({alpha})"), &["e", "u1", "v1"])
        .add("e", "e", &[("e", int(1))])
        .add("e", "u1", &[("u1", half())])
        .add("v1", "v1", &[("u1", int(4) * (Scalar::one() - alpha))])
        .add("u1", "v1", &[("u1", alpha - frac(3, 2))])
        .weight(&[("e", int(1))])
        .build()
        .expect("valid table")
}

/// `e^2 = e`, `eu = ½u`, `uv = u`: algebraic of degree 3 but not train.
pub fn example_not_train() -> AlgebraTable {
    TableBuilder::new("example-not-train", &["e", "u", "v"])
        .add("e", "e", &[("e", int(1))])
        .add("e", "u", &[("u", half())])
        .add("u", "v", &[("u", int(1))])
        .weight(&[("e", int(1))])
        .build()
        .expect("valid table")
}

/// `e^2 = e`, `eu = ½u`, `u^2 = v`: nuclear, Jordan, type `(2, 1)`.
pub fn nuclear_example() -> AlgebraTable {
    TableBuilder::new("nuclear", &["e", "u", "v"])
        .add("e", "e", &[("e", int(1))])
        .add("e", "u", &[("u", half())])
        .add("u", "u", &[("v", int(1))])
        .weight(&[("e", int(1))])
        .build()
        .expect("valid table")
}

fn shift(name: String, n: usize, up: bool) -> Result<AlgebraTable> {
    if n == 0 {
        return Err(Error::Precondition("shift algebras need n >= 1".into()));
    }
    let labels: Vec<String> = std::iter::once("e".to_string())
        .chain((1..=n).map(|i| format!("u{i}")))
        .chain(std::iter::once("v".to_string()))
        .collect();
    let mut b = TableBuilder::new(name, &labels).add("e", "e", &[("e", int(1))]);
    for i in 1..=n {
        b = b.add_indexed(0, i, &[(i, half())]);
        let target = if up { i + 1 } else { i - 1 };
        if (1..=n).contains(&target) {
            b = b.add_indexed(i, n + 1, &[(target, int(1))]);
        }
    }
    b.weight(&[("e", int(1))]).build()
}

/// Basis `(e, u_1…u_n, v)` with `u_i v = u_(i+1)` and `u_n v = 0`: the
/// quotient of the infinite ascending shift algebra by its tail ideal
/// `⟨u_(n+1), u_(n+2), …⟩`.
pub fn shift_up_truncated(n: usize) -> Result<AlgebraTable> {
    shift(format!("shift-up({n})"), n, true)
}

/// Basis `(e, u_1…u_n, v)` with `u_i v = u_(i-1)`, `u_1 v = 0`: a finite
/// subalgebra of the descending shift algebra.
pub fn shift_down_truncated(n: usize) -> Result<AlgebraTable> {
    shift(format!("shift-down({n})"), n, false)
}

/// The `n`-dimensional singly generated algebra with basis
/// `(e, u_1…u_(n-2), v_1)`: `v_1 u_i = u_(i+1)`, `v_1 u_(n-2) = Σ β_i u_i`,
/// `v_1^2 = -2u_1 - 4 v_1 u_1`, `U^2 = 0`. Generated by `e + 2u_1 + v_1`.
///
/// With all `β_i = 0` this is the quotient of the free Bernstein algebra on
/// one generator by the tail ideal `⟨u_(n-1), u_n, …⟩`.
pub fn free_single_truncated(n: usize, betas: Option<&[Scalar]>) -> Result<AlgebraTable> {
    if n < 3 {
        return Err(Error::Precondition("free truncation needs n >= 3".into()));
    }
    let m = n - 2;
    let zeros = vec![Scalar::zero(); m];
    let betas = betas.unwrap_or(&zeros);
    if betas.len() != m {
        return Err(Error::Precondition(format!("expected {m} betas, got {}", betas.len())));
    }
    let labels: Vec<String> = std::iter::once("e".to_string())
        .chain((1..=m).map(|i| format!("u{i}")))
        .chain(std::iter::once("v1".to_string()))
        .collect();
    let v = n - 1;
    let mut b = TableBuilder::new(format!("free-single({n})"), &labels).add("e", "e", &[("e", int(1))]);
    for i in 1..=m {
        b = b.add_indexed(0, i, &[(i, half())]);
    }
    let mut vu = vec![Scalar::zero(); n];
    for i in 1..m {
        b = b.add_indexed(i, v, &[(i + 1, int(1))]);
    }
    for (i, beta) in betas.iter().enumerate() {
        if !beta.is_zero() {
            vu[i + 1] = beta.clone();
        }
    }
    let last: Vec<(usize, Scalar)> = vu.iter().cloned().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    if !last.is_empty() {
        b = b.add_indexed(m, v, &last);
    }
    // v_1 u_1 is u_2, or the β-combination when m = 1.
    let v_u1: Vec<Scalar> = if m >= 2 {
        let mut x = vec![Scalar::zero(); n];
        x[2] = int(1);
        x
    } else {
        vu
    };
    let mut vv: Vec<Scalar> = v_u1.iter().map(|c| c * int(-4)).collect();
    vv[1] -= int(2);
    let vv: Vec<(usize, Scalar)> = vv.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    if !vv.is_empty() {
        b = b.add_indexed(v, v, &vv);
    }
    b.weight(&[("e", int(1))]).build()
}

/// Generator `e + 2u_1 + v_1` of [`free_single_truncated`] and [`three_dim_alpha`].
pub fn free_generator(table: &AlgebraTable) -> Result<Element> {
    let idx = |l: &str| table.label_index(l).ok_or_else(|| Error::Precondition(format!("no basis label {l}")));
    let mut x = table.zero();
    x.0[idx("e")?] = int(1);
    x.0[idx("u1")?] = int(2);
    x.0[idx("v1")?] = int(1);
    Ok(x)
}

/// Index sets of a Peirce-style partition of a weightless table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub u: Vec<usize>,
    pub v: Vec<usize>,
}

/// Regular words `x_(i_1)…x_(i_k)`, `i_1 < … < i_k`, `k <= max_len`.
fn regular_words(num_vars: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
        let mut layer = Vec::new();
        while let Some(w) = stack.pop() {
            if w.len() == len {
                layer.push(w);
                continue;
            }
            let start = w.last().map_or(1, |&l| l + 1);
            for i in (start..=num_vars).rev() {
                let mut n = w.clone();
                n.push(i);
                stack.push(n);
            }
        }
        out.extend(layer);
    }
    out
}

fn word_label(w: &[usize]) -> String {
    w.iter().map(|i| format!("x{i}")).collect()
}

/// Sign and sorted word for `(x_(j_1)…x_(j_n)) * x_i`, or `None` when the
/// product is zero (`i` repeated or `i < j_1`).
fn zhevlakov_insert(word: &[usize], i: usize) -> Option<(i64, Vec<usize>)> {
    if word.contains(&i) || i < word[0] {
        return None;
    }
    let inversions = word.iter().filter(|&&j| j > i).count();
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    let mut w = word.to_vec();
    w.push(i);
    w.sort_unstable();
    Some((sign, w))
}

/// The Zhevlakov algebra on `num_vars` symbols modulo words longer than
/// `max_len` (an ideal). No weight; `V` = words of length 1, `U` = longer
/// words. Products: `x_i * x_j = x_i x_j` for `i < j`; a word of length
/// `>= 2` times `x_i` with `i > j_1` inserts `x_i` with the sign of the
/// inversions of `(j_1, …, j_n, i)`; words with a repeated letter are zero;
/// every other product is zero.
pub fn zhevlakov_truncated(num_vars: usize, max_len: usize) -> Result<(AlgebraTable, Partition)> {
    if num_vars < 2 || max_len == 0 || max_len > num_vars {
        return Err(Error::Precondition("need num_vars >= 2 and 1 <= max_len <= num_vars".into()));
    }
    let words = regular_words(num_vars, max_len);
    let index: BTreeMap<Vec<usize>, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let labels: Vec<String> = words.iter().map(|w| word_label(w)).collect();
    let mut b = TableBuilder::new(format!("zhevlakov({num_vars},{max_len})"), &labels);
    for (a, wa) in words.iter().enumerate() {
        for (c, wc) in words.iter().enumerate().skip(a) {
            let prod = match (wa.len(), wc.len()) {
                (1, 1) if wa[0] != wc[0] => {
                    let mut w = vec![wa[0], wc[0]];
                    w.sort_unstable();
                    Some((1, w))
                }
                (1, n) if n >= 2 => zhevlakov_insert(wc, wa[0]),
                (n, 1) if n >= 2 => zhevlakov_insert(wa, wc[0]),
                _ => None,
            };
            if let Some((sign, w)) = prod {
                if let Some(&k) = index.get(&w) {
                    b = b.add_indexed(a, c, &[(k, int(sign))]);
                }
            }
        }
    }
    let table = b.build()?;
    let (v, u): (Vec<usize>, Vec<usize>) = (0..words.len()).partition(|&i| words[i].len() == 1);
    Ok((table, Partition { u, v }))
}

/// `A = Ke ⊕ N` with `e^2 = e`, `eu = ½u`, `ev = 0`, `ω(αe + n) = α`.
/// Requires `U^2 = 0`, `UV ⊆ U`, `V^2 ⊆ U` in `N`; the result is an
/// exceptional Bernstein algebra with Peirce components `U` and `V`.
pub fn adjoin_idempotent(n_table: &AlgebraTable, partition: &Partition) -> Result<AlgebraTable> {
    let d = n_table.dim();
    let mut seen = vec![false; d];
    for &i in partition.u.iter().chain(&partition.v) {
        if i >= d || std::mem::replace(&mut seen[i], true) {
            return Err(Error::PartitionViolated(format!("index {i} out of range or repeated")));
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::PartitionViolated("indices do not cover the basis".into()));
    }
    let in_u = |k: usize| partition.u.contains(&k);
    for (i, j, prod) in n_table.products() {
        let lands_in_u = prod.iter().all(|(k, _)| in_u(*k));
        let ok = match (in_u(i), in_u(j)) {
            (true, true) => prod.is_empty(),
            _ => lands_in_u,
        };
        if !ok {
            let (li, lj) = (&n_table.labels()[i], &n_table.labels()[j]);
            return Err(Error::PartitionViolated(format!(
                "{li}*{lj} violates U^2 = 0, UV ⊆ U, V^2 ⊆ U"
            )));
        }
    }
    let mut e_label = "e".to_string();
    while n_table.label_index(&e_label).is_some() {
        e_label.push('0');
    }
    let labels: Vec<String> = std::iter::once(e_label).chain(n_table.labels().iter().cloned()).collect();
    let mut b = TableBuilder::new(format!("{}+e", n_table.name()), &labels).add_indexed(0, 0, &[(0, int(1))]);
    for &i in &partition.u {
        b = b.add_indexed(0, i + 1, &[(i + 1, half())]);
    }
    for (i, j, prod) in n_table.products() {
        let shifted: Vec<(usize, Scalar)> = prod.iter().map(|(k, c)| (k + 1, c.clone())).collect();
        b = b.add_indexed(i + 1, j + 1, &shifted);
    }
    let mut w = vec![Scalar::zero(); d + 1];
    w[0] = int(1);
    b.weight_vector(w).build()
}

/// A finite-dimensional associative (possibly truncated) algebra given by an
/// ordered multiplication table on its basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociativeTable {
    labels: Vec<String>,
    products: BTreeMap<(usize, usize), Vec<(usize, Scalar)>>,
    /// Degree bound when the table is a graded truncation.
    pub truncation: Option<usize>,
}

impl AssociativeTable {
    pub fn new(
        labels: Vec<String>,
        products: BTreeMap<(usize, usize), Vec<(usize, Scalar)>>,
        truncation: Option<usize>,
    ) -> Result<Self> {
        let d = labels.len();
        for (&(i, j), v) in &products {
            if i >= d || j >= d || v.iter().any(|(k, _)| *k >= d) {
                return Err(Error::InvalidTable("associative product index out of range".into()));
            }
        }
        Ok(AssociativeTable {
            labels,
            products: products
                .into_iter()
                .map(|(k, v)| (k, v.into_iter().filter(|(_, c)| !c.is_zero()).collect()))
                .collect(),
            truncation,
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (&(i, j), prod) in &self.products {
            if a[i].is_zero() || b[j].is_zero() {
                continue;
            }
            let f = &a[i] * &b[j];
            for (k, c) in prod {
                out[*k] += &f * c;
            }
        }
        out
    }

    fn unit(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = Scalar::one();
        v
    }

    /// `(ab)c = a(bc)` on all basis triples.
    pub fn check_associative(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = self.mul(&self.unit(i), &self.unit(j));
                for k in 0..d {
                    let jk = self.mul(&self.unit(j), &self.unit(k));
                    if self.mul(&ij, &self.unit(k)) != self.mul(&self.unit(i), &jk) {
                        let l = &self.labels;
                        return Err(Error::NotAssociative(format!("({} {}) {}", l[i], l[j], l[k])));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `A = K × C × S` with
/// `(α, a_1, b_1)(β, a_2, b_2) = (αβ, ½(α a_2 + β a_1) + a_1 b_2 + a_2 b_1, 0)`
/// and `ω(α, a, b) = α`. `S` is given by coordinate vectors in `C`. Basis
/// labels: `e`, `u_<c>` for the basis of `C`, `v_<s>` (or `v<j>`) for `S`.
pub fn from_associative(c: &AssociativeTable, s: &[Vec<Scalar>]) -> Result<AlgebraTable> {
    c.check_associative()?;
    let d = c.dim();
    if s.iter().any(|v| v.len() != d) || !crate::linalg::is_independent(s) {
        return Err(Error::Precondition("S must be an independent family in C".into()));
    }
    let u_label = |l: &str| format!("u_{l}");
    let mut labels = vec!["e".to_string()];
    labels.extend(c.labels().iter().map(|l| u_label(l)));
    for (j, v) in s.iter().enumerate() {
        let mut nz = v.iter().enumerate().filter(|(_, x)| !x.is_zero());
        let single = match (nz.next(), nz.next()) {
            (Some((i, x)), None) if x.is_one() => Some(i),
            _ => None,
        };
        labels.push(single.map_or_else(|| format!("v{}", j + 1), |i| format!("v_{}", c.labels()[i])));
    }
    let mut b = TableBuilder::new("from-associative", &labels).add_indexed(0, 0, &[(0, int(1))]);
    for i in 0..d {
        b = b.add_indexed(0, 1 + i, &[(1 + i, half())]);
        for (j, sv) in s.iter().enumerate() {
            let prod = c.mul(&c.unit(i), sv);
            let terms: Vec<(usize, Scalar)> = prod
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (1 + k, x))
                .collect();
            if !terms.is_empty() {
                b = b.add_indexed(1 + i, 1 + d + j, &terms);
            }
        }
    }
    let mut w = vec![Scalar::zero(); labels.len()];
    w[0] = int(1);
    b.weight_vector(w).build()
}

/// `K[t]/(t^n)` with unit, basis `1, t, …, t^(n-1)`.
pub fn truncated_polynomial_ring(n: usize) -> Result<AssociativeTable> {
    let labels: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "t".to_string(),
            i => format!("t{i}"),
        })
        .collect();
    let mut products = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                products.insert((i, j), vec![(i + j, int(1))]);
            }
        }
    }
    AssociativeTable::new(labels, products, None)
}

fn nonzero_terms(v: Vec<Scalar>) -> Vec<(usize, Scalar)> {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

/// `A / I` on the complement basis: the standard basis vectors that are not
/// pivots of the echelon form of `I`, in their original order. The weight
/// descends when `I ⊆ N`.
pub fn quotient(table: &AlgebraTable, ideal_basis: &[Element]) -> Result<AlgebraTable> {
    if !is_ideal(table, ideal_basis) {
        return Err(Error::NotAnIdeal("span is not closed under multiplication by A".into()));
    }
    let ideal = span_of(table.dim(), ideal_basis);
    if let Some(w) = table.weight() {
        if ideal.basis().iter().any(|r| !r.iter().zip(w).map(|(a, b)| a * b).sum::<Scalar>().is_zero()) {
            return Err(Error::Precondition("ideal not contained in the barideal; weight undefined".into()));
        }
    }
    let keep: Vec<usize> = (0..table.dim()).filter(|i| !ideal.pivots().contains(i)).collect();
    if keep.is_empty() {
        return Err(Error::Precondition("quotient by the whole algebra".into()));
    }
    let project = |v: &[Scalar]| -> Vec<Scalar> {
        let r = ideal.reduce(v);
        keep.iter().map(|&i| r[i].clone()).collect()
    };
    let labels: Vec<String> = keep.iter().map(|&i| table.labels()[i].clone()).collect();
    let mut b = TableBuilder::new(format!("{}/I", table.name()), &labels);
    for (a, &i) in keep.iter().enumerate() {
        for (c, &j) in keep.iter().enumerate().skip(a) {
            let terms = nonzero_terms(project(&table.basis_product_element(i, j).0));
            if !terms.is_empty() {
                b = b.add_indexed(a, c, &terms);
            }
        }
    }
    if let Some(w) = table.weight() {
        b = b.weight_vector(keep.iter().map(|&i| w[i].clone()).collect());
    }
    b.build()
}

/// Closure of `span(generators)` under the product.
pub fn closure(table: &AlgebraTable, generators: &[Element]) -> Vec<Element> {
    let mut basis: Vec<Element> = Vec::new();
    let mut span = Subspace::zero(table.dim());
    let mut frontier: Vec<Element> = generators.to_vec();
    while !frontier.is_empty() {
        let mut added = Vec::new();
        for f in frontier {
            if !span.contains(&f.0) {
                span = span.extend(std::slice::from_ref(&f.0));
                basis.push(f.clone());
                added.push(f);
            }
        }
        let mut next = Vec::new();
        for a in &added {
            for b in &basis {
                next.push(table.mul(a, b));
            }
        }
        frontier = next;
    }
    basis
}

/// Table re-expressed on an independent `span`-closed family.
pub fn restrict(table: &AlgebraTable, basis: &[Element], labels: &[String], name: &str) -> Result<AlgebraTable> {
    let coords = CarrierCoords::new(basis)?;
    let mut b = TableBuilder::new(name, labels);
    for i in 0..basis.len() {
        for j in i..basis.len() {
            let c = coords.coords(&table.mul(&basis[i], &basis[j])).ok_or(Error::NotClosed)?;
            let terms = nonzero_terms(c);
            if !terms.is_empty() {
                b = b.add_indexed(i, j, &terms);
            }
        }
    }
    if table.has_weight() {
        let w: Vec<Scalar> = basis.iter().map(|x| table.weight_of(x)).collect::<Result<_>>()?;
        if w.iter().any(|c| !c.is_zero()) {
            b = b.weight_vector(w);
        }
    }
    b.build()
}

/// Subalgebra generated by `generators`, with its embedding. Basis vectors
/// equal to standard basis vectors keep their labels; others are `b1, b2, …`.
pub fn subalgebra(table: &AlgebraTable, generators: &[Element]) -> Result<(AlgebraTable, Vec<Element>)> {
    let basis = closure(table, generators);
    if basis.is_empty() {
        return Err(Error::Precondition("generators span the zero subspace".into()));
    }
    let labels: Vec<String> = basis
        .iter()
        .enumerate()
        .map(|(k, x)| {
            let mut nz = x.0.iter().enumerate().filter(|(_, c)| !c.is_zero());
            match (nz.next(), nz.next()) {
                (Some((i, c)), None) if c.is_one() => table.labels()[i].clone(),
                _ => format!("b{}", k + 1),
            }
        })
        .collect();
    let labels = dedupe_labels(labels);
    let t = restrict(table, &basis, &labels, &format!("sub({})", table.name()))?;
    Ok((t, basis))
}

fn dedupe_labels(labels: Vec<String>) -> Vec<String> {
    let mut seen = std::collections::BTreeSet::new();
    labels
        .into_iter()
        .map(|l| {
            let mut name = l.clone();
            let mut k = 1;
            while !seen.insert(name.clone()) {
                name = format!("{l}_{k}");
                k += 1;
            }
            name
        })
        .collect()
}

/// The same algebra in another basis, labelled `labels`.
pub fn change_basis(table: &AlgebraTable, basis: &[Element], labels: &[String]) -> Result<AlgebraTable> {
    if basis.len() != table.dim() {
        return Err(Error::DimensionMismatch {
            expected: table.dim(),
            got: basis.len(),
        });
    }
    restrict(table, basis, labels, &format!("{}'", table.name()))
}

/// Bernstein tables used by randomized suites.
pub fn catalog() -> Vec<AlgebraTable> {
    let zh = zhevlakov_truncated(4, 3).and_then(|(n, p)| adjoin_idempotent(&n, &p));
    let assoc = truncated_polynomial_ring(3).and_then(|c| {
        let t = vec![int(0), int(1), int(0)];
        from_associative(&c, &[t])
    });
    let skew = {
        let a = example_not_train();
        let basis = vec![
            Element::from_ints(&[1, 1, 0]),
            Element::from_ints(&[0, 1, 0]),
            Element::from_ints(&[0, 2, 1]),
        ];
        change_basis(&a, &basis, &["a".into(), "b".into(), "c".into()]).map(|t| t.renamed("example-skew"))
    };
    vec![
        elementary(3),
        Ok(constant_algebra()),
        Ok(nuclear_example()),
        Ok(three_dim_alpha(&int(1))),
        Ok(three_dim_alpha(&frac(5, 2))),
        Ok(example_not_train()),
        skew,
        shift_up_truncated(4),
        shift_down_truncated(4),
        free_single_truncated(5, None),
        free_single_truncated(5, Some(&[int(1), int(0), frac(-1, 2)])),
        zh,
        assoc,
    ]
    .into_iter()
    .map(|t| t.expect("catalog tables are valid"))
    .collect()
}

/// `(name, parameters)` of every named factory, for front ends.
pub const FACTORIES: &[(&str, &str)] = &[
    ("elementary", "dim"),
    ("constant", ""),
    ("nuclear", ""),
    ("three-dim-alpha", "alpha"),
    ("example-not-train", ""),
    ("shift-up", "n"),
    ("shift-down", "n"),
    ("free-single", "n, betas (comma separated, optional)"),
    ("zhevlakov", "vars, len"),
    ("poly-ring-assoc", "n (K[t]/(t^n) with S = {t})"),
];

/// Elements of `A` as coordinate vectors built from basis labels.
pub fn element_from_labels(table: &AlgebraTable, terms: &[(&str, Scalar)]) -> Result<Element> {
    let mut x = table.zero();
    for (l, c) in terms {
        let i = table
            .label_index(l)
            .ok_or_else(|| Error::Parse(format!("unknown basis label '{l}'")))?;
        x.0[i] += c;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{classify, is_bernstein};

    #[test]
    fn catalog_is_bernstein() {
        for t in catalog() {
            assert!(is_bernstein(&t).unwrap().holds, "{}", t.name());
        }
    }

    #[test]
    fn three_dim_matches_free_truncation() {
        let alpha = frac(5, 2);
        let a = three_dim_alpha(&alpha);
        let f = free_single_truncated(3, Some(&[alpha - frac(3, 2)])).unwrap();
        assert_eq!(a.products().collect::<Vec<_>>(), f.products().collect::<Vec<_>>());
    }

    #[test]
    fn zhevlakov_signs() {
        let (n, p) = zhevlakov_truncated(4, 4).unwrap();
        assert_eq!(n.dim(), 15);
        assert_eq!(p.v.len(), 4);
        let x = |l: &str| n.basis_element(n.label_index(l).unwrap());
        assert_eq!(n.mul(&x("x1"), &x("x2")), x("x1x2"));
        assert_eq!(n.mul(&x("x1x2"), &x("x3")), x("x1x2x3"));
        assert_eq!(n.mul(&x("x1x3"), &x("x2")), x("x1x2x3").neg());
        assert!(n.mul(&x("x2x3"), &x("x1")).is_zero());
        assert!(n.mul(&x("x1x2"), &x("x2")).is_zero());
    }

    #[test]
    fn adjoin_to_zero_algebra_is_constant() {
        let z = TableBuilder::new("zero", &["v"]).build().unwrap();
        let a = adjoin_idempotent(&z, &Partition { u: vec![], v: vec![0] }).unwrap();
        assert_eq!(a.products().collect::<Vec<_>>(), constant_algebra().products().collect::<Vec<_>>());
        let bad = TableBuilder::new("bad", &["u"]).add("u", "u", &[("u", int(1))]).build().unwrap();
        assert!(adjoin_idempotent(&bad, &Partition { u: vec![0], v: vec![] }).is_err());
    }

    #[test]
    fn lyubich_quotient_is_jordan() {
        let a = example_not_train();
        let r = classify(&a).unwrap();
        let q = quotient(&a, &r.lyubich_basis).unwrap();
        assert!(classify(&q).unwrap().is_jordan);
    }

    #[test]
    fn polynomial_ring_construction_has_dimension_five() {
        let c = truncated_polynomial_ring(3).unwrap();
        let a = from_associative(&c, &[vec![int(0), int(1), int(0)]]).unwrap();
        assert_eq!(a.dim(), 5);
        assert!(classify(&a).unwrap().is_exceptional);
    }
}
