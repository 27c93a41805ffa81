//! Commutative algebras given by structure constants, and their elements.

use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::exec;
use crate::linalg::{self, Matrix};
use crate::mpoly::MultiPoly;
use crate::ring::Coeff;
use crate::scalar::{self, Scalar};
use crate::upoly::UnivariatePoly;

/// Coordinate vector over an algebra's basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Elem<C>(pub Vec<C>);

pub type Element = Elem<Scalar>;
pub type SymbolicElement = Elem<MultiPoly>;

impl<C: Coeff> Elem<C> {
    pub fn zero(dim: usize) -> Self {
        Elem(vec![C::nil(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Elem::zero(dim);
        v.0[i] = C::from_scalar(&Scalar::one());
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[C] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(C::is_nil)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Elem(self.0.iter().zip(&other.0).map(|(a, b)| a.plus(b)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Elem(self.0.iter().zip(&other.0).map(|(a, b)| a.minus(b)).collect())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Elem(self.0.iter().map(|a| a.scale(s)).collect())
    }

    /// Multiplication by a ring element (e.g. a symbolic weight).
    pub fn scale_by(&self, c: &C) -> Self {
        Elem(self.0.iter().map(|a| a.times(c)).collect())
    }

    pub fn neg(&self) -> Self {
        Elem(self.0.iter().map(C::negate).collect())
    }
}

impl Element {
    pub fn from_ints(v: &[i64]) -> Self {
        Elem(v.iter().map(|&x| scalar::int(x)).collect())
    }

    pub fn lift(&self) -> SymbolicElement {
        Elem(self.0.iter().map(|c| MultiPoly::constant(c.clone())).collect())
    }

    pub fn linear_combination(terms: &[(Scalar, &Element)], dim: usize) -> Element {
        terms
            .iter()
            .fold(Element::zero(dim), |acc, (c, v)| acc.add(&v.scale(c)))
    }
}

impl SymbolicElement {
    pub fn eval_at(&self, point: &[Scalar]) -> Element {
        Elem(self.0.iter().map(|p| p.eval_at(point)).collect())
    }
}

/// Matrix of a linear map in the coordinates of a chosen carrier basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Operator {
    pub matrix: Matrix,
}

impl Operator {
    /// Least `p >= 1` with `M^p = 0`, if the operator is nilpotent.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let n = self.matrix.rows();
        if n == 0 {
            return Some(1);
        }
        let mut acc = self.matrix.clone();
        for p in 1..=n {
            if acc.is_zero() {
                return Some(p);
            }
            acc = acc.mul(&self.matrix).expect("square");
        }
        None
    }
}

/// A finite-dimensional commutative algebra over the rationals.
///
/// Only unordered basis pairs `{i, j}` are stored, so commutativity holds
/// by construction. Absent pairs multiply to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraTable {
    name: String,
    labels: Vec<String>,
    products: BTreeMap<(usize, usize), Vec<(usize, Scalar)>>,
    weight: Option<Vec<Scalar>>,
    by_target: Vec<Vec<(usize, usize, Scalar)>>,
}

impl AlgebraTable {
    /// Builds and validates a table. `products` maps basis pairs to dense
    /// coordinate vectors; `(i, j)` and `(j, i)` may not both appear.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        products: impl IntoIterator<Item = ((usize, usize), Vec<Scalar>)>,
        weight: Option<Vec<Scalar>>,
    ) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::InvalidTable("empty basis".into()));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if l.is_empty() {
                return Err(Error::InvalidTable("empty basis label".into()));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidTable(format!("duplicate basis label {l:?}")));
            }
        }
        let mut table = BTreeMap::new();
        for ((i, j), v) in products {
            if i >= dim || j >= dim {
                return Err(Error::InvalidTable(format!("basis index ({i}, {j}) out of range")));
            }
            if v.len() != dim {
                return Err(Error::InvalidTable(format!(
                    "product {}*{} has length {}, expected {dim}",
                    labels[i],
                    labels[j],
                    v.len()
                )));
            }
            let key = (i.min(j), i.max(j));
            let sparse: Vec<(usize, Scalar)> = v
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if table.insert(key, sparse).is_some() {
                return Err(Error::InvalidTable(format!(
                    "product {}*{} given twice",
                    labels[key.0], labels[key.1]
                )));
            }
        }
        table.retain(|_, v: &mut Vec<(usize, Scalar)>| !v.is_empty());
        if let Some(w) = &weight {
            if w.len() != dim {
                return Err(Error::InvalidTable(format!(
                    "weight has length {}, expected {dim}",
                    w.len()
                )));
            }
            if w.iter().all(Zero::is_zero) {
                return Err(Error::InvalidTable("weight functional is zero".into()));
            }
        }
        let mut by_target = vec![Vec::new(); dim];
        for (&(i, j), v) in &table {
            for (k, c) in v {
                by_target[*k].push((i, j, c.clone()));
            }
        }
        let t = AlgebraTable {
            name: name.into(),
            labels,
            products: table,
            weight,
            by_target,
        };
        t.check_weight_multiplicative()?;
        Ok(t)
    }

    fn check_weight_multiplicative(&self) -> Result<()> {
        let Some(w) = &self.weight else {
            return Ok(());
        };
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let lhs: Scalar = self
                    .basis_product(i, j)
                    .iter()
                    .map(|(k, c)| c * &w[*k])
                    .sum();
                if lhs != &w[i] * &w[j] {
                    return Err(Error::InvalidTable(format!(
                        "weight is not multiplicative on {}*{}",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn weight(&self) -> Option<&[Scalar]> {
        self.weight.as_deref()
    }

    pub fn has_weight(&self) -> bool {
        self.weight.is_some()
    }

    /// Stored nonzero products `(i, j, sparse value)` with `i <= j`.
    pub fn products(&self) -> impl Iterator<Item = (usize, usize, &[(usize, Scalar)])> {
        self.products.iter().map(|(&(i, j), v)| (i, j, v.as_slice()))
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        self.products
            .get(&(i.min(j), i.max(j)))
            .map_or(&[], Vec::as_slice)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    pub fn basis_product_element(&self, i: usize, j: usize) -> Element {
        let mut v = Element::zero(self.dim());
        for (k, c) in self.basis_product(i, j) {
            v.0[*k] = c.clone();
        }
        v
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.dim())
    }

    fn check_dim<C>(&self, x: &Elem<C>) -> Result<()> {
        if x.0.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: x.0.len(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply<C: Coeff>(&self, x: &Elem<C>, y: &Elem<C>) -> Result<Elem<C>> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(self.mul(x, y))
    }

    /// [`multiply`](Self::multiply) for operands known to match the algebra.
    pub fn mul<C: Coeff>(&self, x: &Elem<C>, y: &Elem<C>) -> Elem<C> {
        assert_eq!(x.0.len(), self.dim(), "left operand dimension");
        assert_eq!(y.0.len(), self.dim(), "right operand dimension");
        let coord = |k: usize| {
            let mut acc = C::nil();
            for (i, j, c) in &self.by_target[k] {
                acc.add_product(&x.0[*i], &y.0[*j], c);
                if i != j {
                    acc.add_product(&x.0[*j], &y.0[*i], c);
                }
            }
            acc
        };
        if C::PARALLEL_WORTHY {
            Elem(exec::map_range(self.dim(), coord))
        } else {
            Elem((0..self.dim()).map(coord).collect())
        }
    }

    pub fn square<C: Coeff>(&self, x: &Elem<C>) -> Elem<C> {
        self.mul(x, x)
    }

    /// Right principal power `x^k = x^(k-1) x`, `k >= 1`.
    pub fn principal_power<C: Coeff>(&self, x: &Elem<C>, k: usize) -> Elem<C> {
        assert!(k >= 1, "principal powers start at 1");
        let mut acc = x.clone();
        for _ in 1..k {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// `[x, x^2, …, x^k]`.
    pub fn principal_powers<C: Coeff>(&self, x: &Elem<C>, k: usize) -> Vec<Elem<C>> {
        let mut out = Vec::with_capacity(k);
        if k == 0 {
            return out;
        }
        out.push(x.clone());
        for i in 1..k {
            let next = self.mul(&out[i - 1], x);
            out.push(next);
        }
        out
    }

    pub fn weight_of<C: Coeff>(&self, x: &Elem<C>) -> Result<C> {
        let w = self.weight.as_ref().ok_or(Error::NoWeight)?;
        self.check_dim(x)?;
        let mut acc = C::nil();
        for (c, wi) in x.0.iter().zip(w) {
            if !wi.is_zero() {
                acc.accumulate(&c.scale(wi));
            }
        }
        Ok(acc)
    }

    /// `sum_k P_k x^k` over principal powers; `P` must have zero constant term.
    pub fn poly_eval<C: Coeff>(&self, x: &Elem<C>, p: &UnivariatePoly) -> Result<Elem<C>> {
        self.check_dim(x)?;
        if !p.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut acc = Elem::zero(self.dim());
        if p.is_zero() {
            return Ok(acc);
        }
        for (k, xk) in self.principal_powers(x, p.degree()).iter().enumerate() {
            let c = p.coeff(k + 1);
            if !c.is_zero() {
                acc = acc.add(&xk.scale(&c));
            }
        }
        Ok(acc)
    }

    /// Matrix of `L_x` restricted to `span(carrier)` in carrier coordinates.
    pub fn left_mult_operator(&self, x: &Element, carrier: &[Element]) -> Result<Operator> {
        self.check_dim(x)?;
        for c in carrier {
            self.check_dim(c)?;
        }
        let family: Vec<Vec<Scalar>> = carrier.iter().map(|c| c.0.clone()).collect();
        if !linalg::is_independent(&family) {
            return Err(Error::NotIndependent);
        }
        let mut m = Matrix::zeros(carrier.len(), carrier.len());
        for (j, c) in carrier.iter().enumerate() {
            let img = self.mul(x, c);
            let coords = linalg::coordinates_in(&family, &img.0)?.ok_or(Error::NotInvariant)?;
            for (i, v) in coords.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        Ok(Operator { matrix: m })
    }

    /// Matrix of `L_x` on the whole algebra in the standard basis.
    pub fn left_mult_matrix(&self, x: &Element) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let img = self.mul(x, &self.basis_element(j));
            for (i, v) in img.0.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    /// Basis of the barideal `N = ker(weight)`.
    pub fn barideal_basis(&self) -> Result<Vec<Element>> {
        let w = self.weight.as_ref().ok_or(Error::NoWeight)?;
        let m = Matrix::from_rows(vec![w.clone()])?;
        Ok(m.kernel().into_iter().map(Elem).collect())
    }

    /// Renders an element as a combination of basis labels.
    pub fn format_element(&self, x: &Element) -> String {
        format_combination(&self.labels, &x.0)
    }
}

pub fn format_combination(labels: &[String], coords: &[Scalar]) -> String {
    let mut out = String::new();
    for (label, c) in labels.iter().zip(coords) {
        if c.is_zero() {
            continue;
        }
        let neg = scalar::is_negative(c);
        let mag = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&scalar::format(&mag));
            out.push(' ');
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for AlgebraTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra {} (dim {})", self.name, self.dim())?;
        writeln!(f, "  basis: {}", self.labels.join(", "))?;
        if let Some(w) = &self.weight {
            writeln!(f, "  weight: {}", format_combination(&self.labels, w))?;
        }
        for (&(i, j), v) in &self.products {
            let mut dense = vec![Scalar::zero(); self.dim()];
            for (k, c) in v {
                dense[*k] = c.clone();
            }
            writeln!(
                f,
                "  {}*{} = {}",
                self.labels[i],
                self.labels[j],
                format_combination(&self.labels, &dense)
            )?;
        }
        Ok(())
    }
}

/// Convenience builder addressing basis elements by label.
#[derive(Clone, Debug)]
pub struct TableBuilder {
    name: String,
    labels: Vec<String>,
    products: BTreeMap<(usize, usize), Vec<Scalar>>,
    weight: Option<Vec<Scalar>>,
}

impl TableBuilder {
    pub fn new<S: AsRef<str>>(name: impl Into<String>, labels: &[S]) -> Self {
        TableBuilder {
            name: name.into(),
            labels: labels.iter().map(|s| s.as_ref().to_string()).collect(),
            products: BTreeMap::new(),
            weight: None,
        }
    }

    fn idx(&self, label: &str) -> usize {
        self.labels
            .iter()
            .position(|l| l == label)
            .unwrap_or_else(|| panic!("unknown basis label {label:?}"))
    }

    /// Adds `coeff * target` to the product `left * right`.
    pub fn add(mut self, left: &str, right: &str, terms: &[(&str, Scalar)]) -> Self {
        let (i, j) = (self.idx(left), self.idx(right));
        let key = (i.min(j), i.max(j));
        let dim = self.labels.len();
        let targets: Vec<(usize, Scalar)> = terms.iter().map(|(l, c)| (self.idx(l), c.clone())).collect();
        let v = self.products.entry(key).or_insert_with(|| vec![Scalar::zero(); dim]);
        for (k, c) in targets {
            v[k] += c;
        }
        self
    }

    pub fn add_indexed(mut self, i: usize, j: usize, terms: &[(usize, Scalar)]) -> Self {
        let key = (i.min(j), i.max(j));
        let dim = self.labels.len();
        let v = self.products.entry(key).or_insert_with(|| vec![Scalar::zero(); dim]);
        for (k, c) in terms {
            v[*k] += c;
        }
        self
    }

    pub fn weight(mut self, terms: &[(&str, Scalar)]) -> Self {
        let mut w = vec![Scalar::zero(); self.labels.len()];
        for (l, c) in terms {
            w[self.idx(l)] = c.clone();
        }
        self.weight = Some(w);
        self
    }

    pub fn weight_vector(mut self, w: Vec<Scalar>) -> Self {
        self.weight = Some(w);
        self
    }

    pub fn build(self) -> Result<AlgebraTable> {
        AlgebraTable::new(self.name, self.labels, self.products, self.weight)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    /// e^2 = e, eu = u/2, uv = u.
    fn example() -> AlgebraTable {
        TableBuilder::new("example", &["e", "u", "v"])
            .add("e", "e", &[("e", int(1))])
            .add("e", "u", &[("u", frac(1, 2))])
            .add("u", "v", &[("u", int(1))])
            .weight(&[("e", int(1))])
            .build()
            .unwrap()
    }

    #[test]
    fn squares_and_cubes_of_generator() {
        let a = example();
        let x = Element::from_ints(&[1, 1, 1]);
        assert_eq!(a.principal_power(&x, 2), Element::from_ints(&[1, 3, 0]));
        assert_eq!(a.principal_power(&x, 3), Element::from_ints(&[1, 5, 0]));
        assert_eq!(a.multiply(&a.zero(), &x).unwrap(), a.zero());
    }

    #[test]
    fn weight_is_linear_and_multiplicative() {
        let a = example();
        let x = Element::from_ints(&[3, -2, 5]);
        let y = Element::from_ints(&[-1, 4, 2]);
        assert_eq!(a.weight_of(&x).unwrap(), int(3));
        assert_eq!(a.weight_of(&a.mul(&x, &y)).unwrap(), int(-3));
    }

    #[test]
    fn poly_eval_rejects_constant_term() {
        let a = example();
        let x = Element::from_ints(&[1, 1, 1]);
        let p = UnivariatePoly::new(vec![int(1), int(1)]);
        assert_eq!(a.poly_eval(&x, &p), Err(Error::NonzeroConstantTerm));
        let id = UnivariatePoly::monomial(1);
        assert_eq!(a.poly_eval(&x, &id).unwrap(), x);
        let e = a.basis_element(0);
        let idem = UnivariatePoly::new(vec![int(0), int(-1), int(1)]);
        assert!(a.poly_eval(&e, &idem).unwrap().is_zero());
    }

    #[test]
    fn left_multiplication_on_u_is_half() {
        let a = example();
        let op = a.left_mult_operator(&a.basis_element(0), &[a.basis_element(1)]).unwrap();
        assert_eq!(op.matrix, Matrix::from_rows(vec![vec![frac(1, 2)]]).unwrap());
        let not_invariant = a.left_mult_operator(&a.basis_element(1), &[a.basis_element(2)]);
        assert_eq!(not_invariant.unwrap_err(), Error::NotInvariant);
    }

    #[test]
    fn construction_validates_weight_and_shape() {
        let bad_weight = TableBuilder::new("bad", &["e", "u"])
            .add("e", "e", &[("e", int(1))])
            .weight(&[("e", int(1)), ("u", int(1))])
            .build();
        assert!(matches!(bad_weight, Err(Error::InvalidTable(_))));
        let dup = AlgebraTable::new(
            "dup",
            vec!["a".into(), "a".into()],
            Vec::<((usize, usize), Vec<Scalar>)>::new(),
            None,
        );
        assert!(dup.is_err());
        let twice = AlgebraTable::new(
            "twice",
            vec!["a".into(), "b".into()],
            vec![((0, 1), vec![int(1), int(0)]), ((1, 0), vec![int(1), int(0)])],
            None,
        );
        assert!(twice.is_err());
        let mismatch = example().multiply(&Element::from_ints(&[1]), &Element::from_ints(&[1, 2, 3]));
        assert!(matches!(mismatch, Err(Error::DimensionMismatch { .. })));
    }
}
