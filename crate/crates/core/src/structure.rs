//! Bernstein structure: idempotents, Peirce decomposition, Lyubich ideal and
//! the classification flags.

use num_traits::{One, Zero};

use crate::algebra::{AlgebraTable, Elem, Element, SymbolicElement, TableBuilder};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::ring::Coeff;
use crate::scalar::{self, Scalar};
use crate::symbolic::{check_identity, CarrierCoords, Domain, IdentityCheck};

/// `(x^2)^2 - ω(x)^2 x^2 = 0` for generic `x`.
pub fn is_bernstein(table: &AlgebraTable) -> Result<IdentityCheck> {
    if !table.has_weight() {
        return Err(Error::NoWeight);
    }
    check_identity(table, &[Domain::Whole], |t, xs| {
        let x = &xs[0];
        let w = t.weight_of(x)?;
        let sq = t.square(x);
        Ok(t.square(&sq).sub(&sq.scale_by(&w.times(&w))))
    })
}

/// `x(x^2 y) - x^2(xy) = 0` for generic `x`, `y`.
pub fn jordan_identity(table: &AlgebraTable) -> Result<IdentityCheck> {
    check_identity(table, &[Domain::Whole, Domain::Whole], |t, xs| {
        let (x, y) = (&xs[0], &xs[1]);
        let sq = t.square(x);
        Ok(t.mul(x, &t.mul(&sq, y)).sub(&t.mul(&sq, &t.mul(x, y))))
    })
}

pub fn is_idempotent(table: &AlgebraTable, e: &Element) -> bool {
    &table.square(e) == e
}

/// `x^2` for `x` the first basis vector of nonzero weight, rescaled to weight 1.
pub fn find_idempotent(table: &AlgebraTable) -> Result<Element> {
    let w = table.weight().ok_or(Error::NoWeight)?;
    let i = w.iter().position(|c| !c.is_zero()).ok_or(Error::NotBaric)?;
    let x = table.basis_element(i).scale(&w[i].recip());
    let e = table.square(&x);
    if !is_idempotent(table, &e) {
        return Err(Error::NotIdempotent);
    }
    Ok(e)
}

fn check_weight_one(table: &AlgebraTable, e: &Element) -> Result<()> {
    if !is_idempotent(table, e) || table.weight_of(e)? != Scalar::one() {
        return Err(Error::NotIdempotent);
    }
    Ok(())
}

/// `A = Ke ⊕ U ⊕ V` with `U`, `V` the `½` and `0` eigenspaces of `L_e` on `N`.
#[derive(Clone, Debug, PartialEq)]
pub struct PeirceDecomposition {
    pub idempotent: Element,
    pub u_basis: Vec<Element>,
    pub v_basis: Vec<Element>,
}

impl PeirceDecomposition {
    pub fn u_space(&self) -> Subspace {
        span_of(self.idempotent.dim(), &self.u_basis)
    }

    pub fn v_space(&self) -> Subspace {
        span_of(self.idempotent.dim(), &self.v_basis)
    }

    pub fn n_basis(&self) -> Vec<Element> {
        self.u_basis.iter().chain(&self.v_basis).cloned().collect()
    }

    pub fn type_pair(&self) -> (usize, usize) {
        (1 + self.u_basis.len(), self.v_basis.len())
    }

    /// Components `(α, u, v)` of `x = αe + u + v`.
    pub fn split(&self, x: &Element) -> Result<(Scalar, Element, Element)> {
        let family: Vec<Element> = std::iter::once(self.idempotent.clone())
            .chain(self.n_basis())
            .collect();
        let coords = CarrierCoords::new(&family)?
            .coords(x)
            .ok_or_else(|| Error::NotInSubspace("Peirce sum".into()))?;
        let r = self.u_basis.len();
        let dim = x.dim();
        let comb = |cs: &[Scalar], bs: &[Element]| {
            bs.iter()
                .zip(cs)
                .fold(Element::zero(dim), |acc, (b, c)| acc.add(&b.scale(c)))
        };
        Ok((
            coords[0].clone(),
            comb(&coords[1..1 + r], &self.u_basis),
            comb(&coords[1 + r..], &self.v_basis),
        ))
    }
}

pub fn span_of(dim: usize, family: &[Element]) -> Subspace {
    let rows: Vec<Vec<Scalar>> = family.iter().map(|b| b.0.clone()).collect();
    Subspace::span(dim, &rows)
}

/// `span{a b : a ∈ left, b ∈ right}`.
pub fn product_space(table: &AlgebraTable, left: &[Element], right: &[Element]) -> Subspace {
    let mut rows = Vec::new();
    for a in left {
        for b in right {
            rows.push(table.mul(a, b).0);
        }
    }
    Subspace::span(table.dim(), &rows)
}

fn eigen_kernel(table: &AlgebraTable, le: &Matrix, w: &[Scalar], lambda: &Scalar) -> Vec<Element> {
    let n = table.dim();
    let mut rows: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = le[(i, j)].clone();
                    if i == j {
                        c - lambda
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    rows.push(w.to_vec());
    let m = Matrix::from_rows(rows).expect("rectangular");
    m.kernel().into_iter().map(Elem).collect()
}

/// Eigenspace split of `N` under `L_e`. Fails when `N` is not `U ⊕ V`.
pub fn peirce(table: &AlgebraTable, e: &Element) -> Result<PeirceDecomposition> {
    check_weight_one(table, e)?;
    let w = table.weight().ok_or(Error::NoWeight)?.to_vec();
    let le = table.left_mult_matrix(e);
    let u_basis = eigen_kernel(table, &le, &w, &scalar::half());
    let v_basis = eigen_kernel(table, &le, &w, &Scalar::zero());
    if u_basis.len() + v_basis.len() + 1 != table.dim() {
        return Err(Error::NotBernsteinPeirce(format!(
            "dim U + dim V = {} but dim N = {}",
            u_basis.len() + v_basis.len(),
            table.dim() - 1
        )));
    }
    Ok(PeirceDecomposition {
        idempotent: e.clone(),
        u_basis,
        v_basis,
    })
}

/// Member `e + u + u^2` of the idempotent family; `u` must lie in `U(e)`.
pub fn idempotent_family(table: &AlgebraTable, e: &Element, u: &Element) -> Result<Element> {
    check_weight_one(table, e)?;
    if table.weight_of(u)? != Scalar::zero() || table.mul(e, u).scale(&scalar::int(2)) != *u {
        return Err(Error::NotInSubspace("U".into()));
    }
    let f = e.add(u).add(&table.square(u));
    if !is_idempotent(table, &f) {
        return Err(Error::Internal("e + u + u^2 is not idempotent".into()));
    }
    Ok(f)
}

/// Whether `span(basis)` is a two-sided (equivalently, by commutativity,
/// one-sided) ideal.
pub fn is_ideal(table: &AlgebraTable, basis: &[Element]) -> bool {
    let span = span_of(table.dim(), basis);
    basis.iter().all(|b| {
        (0..table.dim()).all(|j| span.contains(&table.mul(b, &table.basis_element(j)).0))
    })
}

/// `L(A) = {u ∈ U : uU = 0}`, verified to be an ideal.
pub fn lyubich_ideal(table: &AlgebraTable, p: &PeirceDecomposition) -> Result<Vec<Element>> {
    let r = p.u_basis.len();
    let dim = table.dim();
    let mut rows = Vec::new();
    for uj in &p.u_basis {
        let imgs: Vec<Element> = p.u_basis.iter().map(|ui| table.mul(ui, uj)).collect();
        for k in 0..dim {
            rows.push((0..r).map(|i| imgs[i].0[k].clone()).collect::<Vec<_>>());
        }
    }
    let kernel = if rows.is_empty() {
        (0..r)
            .map(|i| {
                let mut v = vec![Scalar::zero(); r];
                v[i] = Scalar::one();
                v
            })
            .collect()
    } else {
        Matrix::from_rows(rows)?.kernel()
    };
    let basis: Vec<Element> = kernel
        .iter()
        .map(|c| {
            p.u_basis
                .iter()
                .zip(c)
                .fold(Element::zero(dim), |acc, (b, x)| acc.add(&b.scale(x)))
        })
        .collect();
    if !is_ideal(table, &basis) {
        return Err(Error::Internal("annihilator of U is not an ideal".into()));
    }
    Ok(basis)
}

/// Jordan criterion for Bernstein algebras: `V^2 = 0` and `(uv)v = 0`.
pub fn jordan_criterion(table: &AlgebraTable, p: &PeirceDecomposition) -> Result<bool> {
    if product_space(table, &p.v_basis, &p.v_basis).dim() != 0 {
        return Ok(false);
    }
    let check = check_identity(
        table,
        &[Domain::Span(p.u_basis.clone()), Domain::Span(p.v_basis.clone())],
        |t, xs| Ok(t.mul(&t.mul(&xs[0], &xs[1]), &xs[1])),
    )?;
    Ok(check.holds)
}

#[derive(Clone, Debug, PartialEq)]
pub struct StructureReport {
    pub is_bernstein: bool,
    pub peirce: PeirceDecomposition,
    /// `U^2 = V`.
    pub is_nuclear: bool,
    /// `U^2 = 0`.
    pub is_exceptional: bool,
    pub is_jordan: bool,
    pub jordan_check: IdentityCheck,
    pub lyubich_basis: Vec<Element>,
    pub type_pair: (usize, usize),
}

/// Full structure report for a Bernstein table, relative to
/// [`find_idempotent`]. The Jordan flag is computed twice (identity and
/// Peirce criterion); disagreement is an internal error.
pub fn classify(table: &AlgebraTable) -> Result<StructureReport> {
    let b = is_bernstein(table)?;
    if !b.holds {
        return Err(Error::Precondition(format!("not a Bernstein algebra: {b}")));
    }
    let e = find_idempotent(table)?;
    let p = peirce(table, &e)?;
    let u2 = product_space(table, &p.u_basis, &p.u_basis);
    let v = p.v_space();
    let is_exceptional = u2.dim() == 0;
    let is_nuclear = u2.contains_subspace(&v) && v.contains_subspace(&u2);
    let jordan_check = jordan_identity(table)?;
    let by_criterion = jordan_criterion(table, &p)?;
    if jordan_check.holds != by_criterion {
        return Err(Error::Internal(format!(
            "Jordan identity says {} but the Peirce criterion says {}",
            jordan_check.holds, by_criterion
        )));
    }
    let lyubich_basis = lyubich_ideal(table, &p)?;
    Ok(StructureReport {
        is_bernstein: true,
        type_pair: p.type_pair(),
        peirce: p,
        is_nuclear,
        is_exceptional,
        is_jordan: jordan_check.holds,
        jordan_check,
        lyubich_basis,
    })
}

/// A named check in a property suite.
#[derive(Clone, Debug, PartialEq)]
pub struct NamedCheck {
    pub name: &'static str,
    pub holds: bool,
}

type PairExpr = fn(&AlgebraTable, &SymbolicElement, &SymbolicElement) -> SymbolicElement;

/// Multiplication rules of the Peirce components.
pub fn peirce_relations(table: &AlgebraTable, p: &PeirceDecomposition) -> Result<Vec<NamedCheck>> {
    let (u, v) = (&p.u_basis, &p.v_basis);
    let uspace = p.u_space();
    let vspace = p.v_space();
    let mut out = vec![
        NamedCheck {
            name: "U^2 ⊆ V",
            holds: vspace.contains_subspace(&product_space(table, u, u)),
        },
        NamedCheck {
            name: "UV ⊆ U",
            holds: uspace.contains_subspace(&product_space(table, u, v)),
        },
        NamedCheck {
            name: "V^2 ⊆ U",
            holds: uspace.contains_subspace(&product_space(table, v, v)),
        },
    ];
    let v2: Vec<Element> = product_space(table, v, v)
        .basis()
        .iter()
        .map(|r| Elem(r.clone()))
        .collect();
    out.push(NamedCheck {
        name: "UV^2 = 0",
        holds: product_space(table, u, &v2).dim() == 0,
    });
    let dom = [Domain::Span(u.clone()), Domain::Span(v.clone())];
    let identities: [(&'static str, PairExpr); 5] = [
        ("u^3 = 0", |t, u, _| t.mul(&t.square(u), u)),
        ("u(uv) = 0", |t, u, v| t.mul(u, &t.mul(u, v))),
        ("u^2(uv) = 0", |t, u, v| t.mul(&t.square(u), &t.mul(u, v))),
        ("(uv)^2 = 0", |t, u, v| t.square(&t.mul(u, v))),
        ("u^2 v^2 = 0", |t, u, v| t.mul(&t.square(u), &t.square(v))),
    ];
    for (name, f) in identities {
        let c = check_identity(table, &dom, |t, xs| Ok(f(t, &xs[0], &xs[1])))?;
        out.push(NamedCheck { name, holds: c.holds });
    }
    Ok(out)
}

/// Table on `Ke ⊕ L(A) ⊕ V` with the product of `A` except `vv' := 0`.
///
/// Algebraicity (and the train property) of `A` depends only on this
/// smaller algebra. Basis vectors that are standard basis vectors of `A` keep
/// their labels; others are named `e`, `l1…`, `v1…`.
pub fn zero_v_squared(table: &AlgebraTable, p: &PeirceDecomposition) -> Result<AlgebraTable> {
    let lyubich = lyubich_ideal(table, p)?;
    let family: Vec<Element> = std::iter::once(p.idempotent.clone())
        .chain(lyubich.iter().cloned())
        .chain(p.v_basis.iter().cloned())
        .collect();
    let l = lyubich.len();
    let labels: Vec<String> = family
        .iter()
        .enumerate()
        .map(|(i, b)| {
            standard_label(table, b).unwrap_or_else(|| match i {
                0 => "e".to_string(),
                i if i <= l => format!("l{i}"),
                i => format!("v{}", i - l),
            })
        })
        .collect();
    let labels = dedupe(labels);
    let coords = CarrierCoords::new(&family)?;
    let n = family.len();
    let mut b = TableBuilder::new(format!("{}-zero-v2", table.name()), &labels);
    for i in 0..n {
        for j in i..n {
            if i > l && j > l {
                continue;
            }
            let prod = table.mul(&family[i], &family[j]);
            let c = coords
                .coords(&prod)
                .ok_or_else(|| Error::Internal("Ke + L(A) + V not closed".into()))?;
            let terms: Vec<(usize, Scalar)> = c
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .collect();
            if !terms.is_empty() {
                b = b.add_indexed(i, j, &terms);
            }
        }
    }
    let mut w = vec![Scalar::zero(); n];
    w[0] = Scalar::one();
    let out = b.weight_vector(w).build()?;
    if !is_bernstein(&out)?.holds {
        return Err(Error::Internal("V^2-free table is not Bernstein".into()));
    }
    Ok(out)
}

fn standard_label(table: &AlgebraTable, b: &Element) -> Option<String> {
    let mut nz = b.0.iter().enumerate().filter(|(_, c)| !c.is_zero());
    let (i, c) = nz.next()?;
    (nz.next().is_none() && c.is_one()).then(|| table.labels()[i].clone())
}

fn dedupe(labels: Vec<String>) -> Vec<String> {
    let mut seen = std::collections::BTreeSet::new();
    labels
        .into_iter()
        .map(|l| {
            let mut name = l.clone();
            let mut k = 1;
            while !seen.insert(name.clone()) {
                name = format!("{l}'{k}");
                k += 1;
            }
            name
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

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
    fn example_structure() {
        let a = example();
        let r = classify(&a).unwrap();
        assert_eq!(r.peirce.u_basis, vec![Element::from_ints(&[0, 1, 0])]);
        assert_eq!(r.peirce.v_basis, vec![Element::from_ints(&[0, 0, 1])]);
        assert!(r.is_exceptional);
        assert!(!r.is_jordan);
        assert_eq!(r.lyubich_basis.len(), 1);
        assert_eq!(r.type_pair, (2, 1));
    }

    #[test]
    fn changing_uv_breaks_bernstein() {
        let a = TableBuilder::new("bad", &["e", "u", "v"])
            .add("e", "e", &[("e", int(1))])
            .add("e", "u", &[("u", frac(1, 2))])
            .add("u", "v", &[("v", int(1))])
            .weight(&[("e", int(1))])
            .build()
            .unwrap();
        let c = is_bernstein(&a).unwrap();
        assert!(!c.holds);
        assert!(c.witness.is_some());
    }

    #[test]
    fn family_member_is_idempotent() {
        let a = example();
        let e = a.basis_element(0);
        let u = Element::from_ints(&[0, 3, 0]);
        assert_eq!(idempotent_family(&a, &e, &u).unwrap(), Element::from_ints(&[1, 3, 0]));
        let v = Element::from_ints(&[0, 0, 1]);
        assert!(idempotent_family(&a, &e, &v).is_err());
    }

    #[test]
    fn transform_leaves_example_unchanged() {
        let a = example();
        let p = peirce(&a, &a.basis_element(0)).unwrap();
        let t = zero_v_squared(&a, &p).unwrap();
        assert_eq!(t.labels(), a.labels());
        assert_eq!(t.products().count(), a.products().count());
    }
}
