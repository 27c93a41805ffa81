//! Generic elements with polynomial coordinates.
//!
//! An identity holds on every rational point iff each coordinate polynomial of
//! `lhs - rhs`, evaluated on generic arguments, is the zero polynomial. This
//! is exact over any infinite field, so no sampling is involved in a "true"
//! verdict. A "false" verdict carries a concrete rational counterexample.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use std::fmt;

use crate::algebra::{AlgebraTable, Elem, Element, SymbolicElement};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::mpoly::{self, MultiPoly, Var, VarPool};
use crate::ring::Coeff;
use crate::scalar::{self, Scalar};

/// Where a generic argument ranges.
#[derive(Clone, Debug)]
pub enum Domain {
    Whole,
    Span(Vec<Element>),
}

impl Domain {
    pub fn basis(&self, table: &AlgebraTable) -> Vec<Element> {
        match self {
            Domain::Whole => (0..table.dim()).map(|i| table.basis_element(i)).collect(),
            Domain::Span(b) => b.clone(),
        }
    }
}

/// `sum_i t_i b_i` with fresh indeterminates `prefix1, prefix2, …`.
///
/// Without `restrict_to` the `b_i` are the table's basis; otherwise they are
/// the given spanning family (e.g. a basis of `N`, `U` or `V`).
pub fn generic_element(
    table: &AlgebraTable,
    vars: &mut VarPool,
    prefix: &str,
    restrict_to: Option<&[Element]>,
) -> SymbolicElement {
    let basis: Vec<Element> = match restrict_to {
        Some(b) => b.to_vec(),
        None => (0..table.dim()).map(|i| table.basis_element(i)).collect(),
    };
    let ts = vars.fresh_block(prefix, basis.len());
    combine(table.dim(), &basis, &ts)
}

fn combine(dim: usize, basis: &[Element], ts: &[Var]) -> SymbolicElement {
    let mut out = SymbolicElement::zero(dim);
    for (b, &t) in basis.iter().zip(ts) {
        let tv = MultiPoly::var(t);
        for (k, c) in b.0.iter().enumerate() {
            if !c.is_zero() {
                out.0[k].accumulate(&tv.scale(c));
            }
        }
    }
    out
}

/// A rational counterexample to an identity.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    /// Values of the indeterminates (unlisted ones are zero).
    pub assignment: Vec<(String, Scalar)>,
    /// The concrete arguments at that point.
    pub arguments: Vec<Element>,
    /// The nonzero value of the expression there.
    pub residual: Element,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "holds identically"),
            Some(w) => {
                write!(f, "fails; witness ")?;
                let vals: Vec<String> = w
                    .assignment
                    .iter()
                    .map(|(n, v)| format!("{n}={}", scalar::format(v)))
                    .collect();
                write!(f, "{{{}}}", vals.join(", "))
            }
        }
    }
}

/// Checks `expr(x_1, …, x_k) = 0` for independent generic arguments `x_i`
/// ranging over the given domains.
pub fn check_identity<F>(table: &AlgebraTable, domains: &[Domain], expr: F) -> Result<IdentityCheck>
where
    F: Fn(&AlgebraTable, &[SymbolicElement]) -> Result<SymbolicElement>,
{
    let mut vars = VarPool::new();
    let mut args = Vec::with_capacity(domains.len());
    for (i, d) in domains.iter().enumerate() {
        let prefix = arg_prefix(i);
        let basis = d.basis(table);
        args.push(generic_element(table, &mut vars, &prefix, Some(&basis)));
    }
    let residual = expr(table, &args)?;
    Ok(verdict(&vars, &args, &residual))
}

fn arg_prefix(i: usize) -> String {
    const NAMES: [&str; 6] = ["x", "y", "z", "w", "p", "q"];
    NAMES.get(i).map_or_else(|| format!("a{i}_"), |s| s.to_string())
}

/// Turns a symbolic residual into a verdict, searching a witness if nonzero.
pub fn verdict(vars: &VarPool, args: &[SymbolicElement], residual: &SymbolicElement) -> IdentityCheck {
    let Some(bad) = residual.0.iter().find(|p| !p.is_zero()) else {
        return IdentityCheck {
            holds: true,
            witness: None,
        };
    };
    let point_map = mpoly::nonvanishing_point(bad).expect("nonzero polynomial");
    let mut point = vec![Scalar::zero(); vars.len()];
    for (v, val) in &point_map {
        point[*v as usize] = val.clone();
    }
    let assignment = point_map
        .iter()
        .filter(|(_, val)| !val.is_zero())
        .map(|(v, val)| (vars.name(*v).to_string(), val.clone()))
        .collect();
    IdentityCheck {
        holds: false,
        witness: Some(Witness {
            assignment,
            arguments: args.iter().map(|a| a.eval_at(&point)).collect(),
            residual: residual.eval_at(&point),
        }),
    }
}

/// `[x, x^2, …, x^k_max]` with polynomial coordinates.
pub fn generic_principal_powers(table: &AlgebraTable, x: &SymbolicElement, k_max: usize) -> Vec<SymbolicElement> {
    table.principal_powers(x, k_max)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericDegree {
    pub degree: usize,
    /// Rank at the sampled rational point (a lower bound for the degree).
    pub sampled_rank: usize,
    /// Whether the symbolic rank computation confirmed the value.
    pub verified: bool,
}

/// Term budget for fraction-free elimination over polynomial entries.
const RANK_TERM_BUDGET: usize = 40_000;

/// Bounded degree of the algebra: `dim span(x, x^2, …)` for a generic `x`.
///
/// The rank of the power matrix at a random rational point is a lower bound.
/// The symbolic matrix `[x, …, x^(r+1)]` is then reduced fraction-free over
/// the polynomial ring; rank `r` there means `x^(r+1)` depends on lower powers
/// over the rational function field, so every higher power does too. If the
/// symbolic route exceeds its budget the sampled value is returned with
/// `verified = false`.
pub fn generic_degree(table: &AlgebraTable, seed: u64) -> GenericDegree {
    let dim = table.dim();
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut vars = VarPool::new();
    let x = generic_element(table, &mut vars, "t", None);
    let mut sampled = 0;
    for _ in 0..2 {
        let point: Vec<Scalar> = (0..vars.len())
            .map(|_| scalar::int(rng.gen_range(-1000..=1000)))
            .collect();
        let concrete = x.eval_at(&point);
        let powers = table.principal_powers(&concrete, dim + 1);
        let cols: Vec<Vec<Scalar>> = powers.into_iter().map(|p| p.0).collect();
        let r = Matrix::from_columns(dim, &cols).expect("consistent dims").rank();
        sampled = sampled.max(r);
    }
    let mut degree = sampled;
    let mut verified = false;
    let powers = table.principal_powers(&x, (sampled + 1).min(dim + 1));
    let rows: Vec<Vec<MultiPoly>> = (0..dim)
        .map(|i| powers.iter().map(|p| p.0[i].clone()).collect())
        .collect();
    if let Some(r) = symbolic_rank(rows, RANK_TERM_BUDGET) {
        verified = true;
        degree = r;
    }
    GenericDegree {
        degree,
        sampled_rank: sampled,
        verified,
    }
}

/// Rank over the rational function field by fraction-free (Bareiss)
/// elimination. Returns `None` if any entry exceeds `term_budget` terms.
pub fn symbolic_rank(mut m: Vec<Vec<MultiPoly>>, term_budget: usize) -> Option<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = MultiPoly::constant(Scalar::one());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = m[r][c].times(&m[i][j]).minus(&m[i][c].times(&m[r][j]));
                let q = num.div_exact(&prev)?;
                if q.num_terms() > term_budget {
                    return None;
                }
                m[i][j] = q;
            }
            m[i][c] = MultiPoly::default();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    Some(r)
}

/// Dense matrix with polynomial entries.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    rows: usize,
    cols: usize,
    data: Vec<MultiPoly>,
}

impl SymMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SymMatrix {
            rows,
            cols,
            data: vec![MultiPoly::default(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.data[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(MultiPoly::is_zero)
    }

    /// `sum_i vars_i * mats_i`.
    pub fn linear_combination(mats: &[Matrix], ts: &[Var], rows: usize, cols: usize) -> Self {
        let mut out = SymMatrix::zeros(rows, cols);
        for (m, &t) in mats.iter().zip(ts) {
            let tv = MultiPoly::var(t);
            for i in 0..rows {
                for j in 0..cols {
                    let c = &m[(i, j)];
                    if !c.is_zero() {
                        out.data[i * cols + j].accumulate(&tv.scale(c));
                    }
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &SymMatrix) -> SymMatrix {
        assert_eq!(self.cols, other.rows);
        let (n, m, k) = (self.rows, other.cols, self.cols);
        let entries = crate::exec::map_range(n * m, |idx| {
            let (i, j) = (idx / m, idx % m);
            let mut acc = MultiPoly::default();
            for l in 0..k {
                acc.add_product(self.get(i, l), other.get(l, j), &Scalar::one());
            }
            acc
        });
        SymMatrix {
            rows: n,
            cols: m,
            data: entries,
        }
    }

    /// Least `p` in `1..=max_power` with `M^p = 0` identically.
    pub fn nilpotency_index(&self, max_power: usize) -> Option<usize> {
        assert_eq!(self.rows, self.cols);
        if self.rows == 0 {
            return Some(1);
        }
        let mut acc = self.clone();
        for p in 1..=max_power {
            if acc.is_zero() {
                return Some(p);
            }
            if p < max_power {
                acc = acc.mul(self);
            }
        }
        None
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn eval_at(&self, point: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self.get(i, j).eval_at(point);
            }
        }
        m
    }

    /// `M * v` for a column of polynomials.
    pub fn apply(&self, v: &[MultiPoly]) -> Vec<MultiPoly> {
        (0..self.rows)
            .map(|i| {
                let mut acc = MultiPoly::default();
                for (j, x) in v.iter().enumerate() {
                    acc.add_product(self.get(i, j), x, &Scalar::one());
                }
                acc
            })
            .collect()
    }
}

/// Coordinates relative to a fixed independent family, usable on symbolic vectors.
#[derive(Clone, Debug)]
pub struct CarrierCoords {
    family: Vec<Element>,
    rows: Vec<usize>,
    inverse: Matrix,
}

impl CarrierCoords {
    pub fn new(family: &[Element]) -> Result<Self> {
        let m = family.len();
        if m == 0 {
            return Ok(CarrierCoords {
                family: Vec::new(),
                rows: Vec::new(),
                inverse: Matrix::zeros(0, 0),
            });
        }
        let dim = family[0].dim();
        let cols: Vec<Vec<Scalar>> = family.iter().map(|f| f.0.clone()).collect();
        let f = Matrix::from_columns(dim, &cols)?;
        let (_, pivots) = f.transpose().rref();
        if pivots.len() != m {
            return Err(Error::NotIndependent);
        }
        let mut sub = Matrix::zeros(m, m);
        for (a, &r) in pivots.iter().enumerate() {
            for b in 0..m {
                sub[(a, b)] = f[(r, b)].clone();
            }
        }
        let mut inverse = Matrix::zeros(m, m);
        for b in 0..m {
            let mut e = vec![Scalar::zero(); m];
            e[b] = Scalar::one();
            let col = sub.solve(&e)?.ok_or(Error::NotIndependent)?;
            for a in 0..m {
                inverse[(a, b)] = col[a].clone();
            }
        }
        Ok(CarrierCoords {
            family: family.to_vec(),
            rows: pivots,
            inverse,
        })
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    pub fn family(&self) -> &[Element] {
        &self.family
    }

    /// Coordinates of `v`, or `None` when `v` is not in the span.
    pub fn coords<C: Coeff>(&self, v: &Elem<C>) -> Option<Vec<C>> {
        let m = self.family.len();
        let picked: Vec<&C> = self.rows.iter().map(|&r| &v.0[r]).collect();
        let coords: Vec<C> = (0..m)
            .map(|a| {
                let mut acc = C::nil();
                for (b, x) in picked.iter().enumerate() {
                    let c = &self.inverse[(a, b)];
                    if !c.is_zero() {
                        acc.accumulate(&x.scale(c));
                    }
                }
                acc
            })
            .collect();
        let mut back = Elem::<C>::zero(v.dim());
        for (c, f) in coords.iter().zip(&self.family) {
            for (k, fk) in f.0.iter().enumerate() {
                if !fk.is_zero() {
                    back.0[k].accumulate(&c.scale(fk));
                }
            }
        }
        if back.sub(v).is_zero() {
            Some(coords)
        } else {
            None
        }
    }
}

/// `L_x` on `span(carrier)` for generic `x` over `domain`, as a polynomial
/// matrix in carrier coordinates. Fails if the carrier is not invariant.
pub fn generic_left_mult(
    table: &AlgebraTable,
    domain: &[Element],
    carrier: &[Element],
    vars: &mut VarPool,
    prefix: &str,
) -> Result<(SymMatrix, Vec<Var>)> {
    let coords = CarrierCoords::new(carrier)?;
    let mut mats = Vec::with_capacity(domain.len());
    for d in domain {
        let mut m = Matrix::zeros(carrier.len(), carrier.len());
        for (j, c) in carrier.iter().enumerate() {
            let img = table.mul(d, c);
            let col = coords.coords(&img).ok_or(Error::NotInvariant)?;
            for (i, x) in col.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        mats.push(m);
    }
    let ts = vars.fresh_block(prefix, domain.len());
    Ok((
        SymMatrix::linear_combination(&mats, &ts, carrier.len(), carrier.len()),
        ts,
    ))
}

/// Whether `span(basis)` is closed under the product.
pub fn is_closed(table: &AlgebraTable, basis: &[Element]) -> bool {
    let rows: Vec<Vec<Scalar>> = basis.iter().map(|b| b.0.clone()).collect();
    let span = linalg::Subspace::span(table.dim(), &rows);
    basis.iter().enumerate().all(|(i, a)| {
        basis[i..]
            .iter()
            .all(|b| span.contains(&table.mul(a, b).0))
    })
}

/// Verifies `(x^2)^2 = 0` for generic `x` in `span(basis)`.
pub fn square_square_vanishes(table: &AlgebraTable, basis: &[Element]) -> Result<IdentityCheck> {
    check_identity(table, &[Domain::Span(basis.to_vec())], |t, xs| {
        let sq = t.square(&xs[0]);
        Ok(t.square(&sq))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TableBuilder;
    use crate::scalar::{frac, int};

    fn example(eu: Scalar) -> AlgebraTable {
        TableBuilder::new("example", &["e", "u", "v"])
            .add("e", "e", &[("e", int(1))])
            .add("e", "u", &[("u", eu)])
            .add("u", "v", &[("u", int(1))])
            .weight(&[("e", int(1))])
            .build()
            .unwrap()
    }

    fn bernstein_residual(t: &AlgebraTable, xs: &[SymbolicElement]) -> Result<SymbolicElement> {
        let x = &xs[0];
        let w = t.weight_of(x)?;
        let sq = t.square(x);
        Ok(t.square(&sq).sub(&sq.scale_by(&w.times(&w))))
    }

    #[test]
    fn bernstein_identity_on_example() {
        let t = example(frac(1, 2));
        let chk = check_identity(&t, &[Domain::Whole], bernstein_residual).unwrap();
        assert!(chk.holds);
    }

    #[test]
    fn broken_table_yields_witness() {
        let t = example(int(1));
        let chk = check_identity(&t, &[Domain::Whole], bernstein_residual).unwrap();
        assert!(!chk.holds);
        let w = chk.witness.unwrap();
        assert!(!w.residual.is_zero());
        let x = &w.arguments[0];
        let om = t.weight_of(x).unwrap();
        let sq = t.square(x);
        let direct = t.square(&sq).sub(&sq.scale(&(&om * &om)));
        assert_eq!(direct, w.residual);
    }

    #[test]
    fn generic_elements_restricted_to_subspace() {
        let t = example(frac(1, 2));
        let mut vars = VarPool::new();
        let v = generic_element(&t, &mut vars, "t", Some(&[t.basis_element(2)]));
        assert_eq!(v.0[2], MultiPoly::var(0));
        assert!(v.0[0].is_zero() && v.0[1].is_zero());
        let n = generic_element(&t, &mut vars, "s", Some(&[t.basis_element(1), t.basis_element(2)]));
        let powers = generic_principal_powers(&t, &n, 3);
        // x = s1 u + s2 v: x^2 = 2 s1 s2 u, x^3 = 2 s1 s2^2 u
        let (s1, s2) = (MultiPoly::var(1), MultiPoly::var(2));
        assert_eq!(powers[1].0[1], s1.times(&s2).scale(&int(2)));
        assert_eq!(powers[2].0[1], s1.times(&s2).times(&s2).scale(&int(2)));
        assert!(powers[2].0[2].is_zero());
    }

    #[test]
    fn example_has_generic_degree_three() {
        let g = generic_degree(&example(frac(1, 2)), 0);
        assert_eq!(g.degree, 3);
        assert!(g.verified);
    }

    #[test]
    fn symbolic_rank_of_singular_matrix() {
        let (a, b) = (MultiPoly::var(0), MultiPoly::var(1));
        let m = vec![vec![a.clone(), b.clone()], vec![a.times(&a), a.times(&b)]];
        assert_eq!(symbolic_rank(m, 1000), Some(1));
        let m = vec![vec![a.clone(), b.clone()], vec![b.clone(), a.clone()]];
        assert_eq!(symbolic_rank(m, 1000), Some(2));
    }

    #[test]
    fn carrier_coordinates_reject_outside_vectors() {
        let t = example(frac(1, 2));
        let cc = CarrierCoords::new(&[Element::from_ints(&[0, 1, 1])]).unwrap();
        assert_eq!(cc.coords(&Element::from_ints(&[0, 3, 3])), Some(vec![int(3)]));
        assert_eq!(cc.coords(&Element::from_ints(&[0, 3, 2])), None);
        assert!(is_closed(&t, &[t.basis_element(1)]));
        assert!(!is_closed(&t, &[Element::from_ints(&[0, 1, 1])]));
    }
}
