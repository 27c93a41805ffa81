//! Whole-algebra nilpotency analyses: train rank, nil index of `N`, operator
//! nilpotency, Engel and Yagzhev checks.
//!
//! Every "for all x" statement is decided on a generic element. A random
//! rational point is tried first: a nonzero value there already refutes the
//! identity. Only candidate indices are confirmed symbolically.

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::algebra::{AlgebraTable, Elem, Element, SymbolicElement};
use crate::analysis::f_sequence;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::mpoly::VarPool;
use crate::scalar::{self, Scalar};
use crate::structure::{self, is_bernstein, lyubich_ideal, span_of, PeirceDecomposition};
use crate::symbolic::{self, check_identity, generic_element, Domain, IdentityCheck};
use crate::trees::yagzhev_sums;
use crate::upoly::UnivariatePoly;

fn random_point(rng: &mut StdRng, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| scalar::int(rng.gen_range(-50..=50))).collect()
}

fn combine(dim: usize, basis: &[Element], coeffs: &[Scalar]) -> Element {
    basis
        .iter()
        .zip(coeffs)
        .fold(Element::zero(dim), |acc, (b, c)| acc.add(&b.scale(c)))
}

/// Least `k <= bound` with `x^k = 0` for generic `x ∈ span(basis)`.
pub fn generic_nil_index(table: &AlgebraTable, basis: &[Element], bound: usize, seed: u64) -> Option<usize> {
    if basis.is_empty() {
        return Some(1);
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let x0 = combine(table.dim(), basis, &random_point(&mut rng, basis.len()));
    let numeric = table.principal_powers(&x0, bound);
    let k0 = numeric.iter().position(Elem::is_zero)? + 1;
    let mut vars = VarPool::new();
    let x = generic_element(table, &mut vars, "t", Some(basis));
    let powers = table.principal_powers(&x, bound);
    (k0..=bound).find(|&k| powers[k - 1].is_zero())
}

/// Least `p <= bound` with `(L_x)^p = 0` on `span(carrier)` for generic
/// `x ∈ span(domain)`. Fails if the carrier is not invariant.
pub fn generic_operator_nil_index(
    table: &AlgebraTable,
    domain: &[Element],
    carrier: &[Element],
    bound: usize,
    seed: u64,
) -> Result<Option<usize>> {
    let mut vars = VarPool::new();
    let (m, ts) = symbolic::generic_left_mult(table, domain, carrier, &mut vars, "s")?;
    if carrier.is_empty() {
        return Ok(Some(1));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let m0 = m.eval_at(&random_point(&mut rng, ts.len()));
    let Some(k0) = numeric_nil_index(&m0, bound) else {
        return Ok(None);
    };
    let mut acc = m.clone();
    for p in 1..=bound {
        if p >= k0 && acc.is_zero() {
            return Ok(Some(p));
        }
        if p < bound {
            acc = acc.mul(&m);
        }
    }
    Ok(None)
}

fn numeric_nil_index(m: &Matrix, bound: usize) -> Option<usize> {
    let mut acc = m.clone();
    for p in 1..=bound {
        if acc.is_zero() {
            return Some(p);
        }
        acc = acc.mul(m).expect("square");
    }
    None
}

/// Train rank of the whole algebra: 2 if `x^2 = ω(x) x` identically, else
/// the least `r <= bound` with `f_r(x) = 0` identically.
pub fn generic_train_rank(table: &AlgebraTable, bound: usize, seed: u64) -> Result<Option<usize>> {
    let mut rng = StdRng::seed_from_u64(seed);
    let x0 = Elem(random_point(&mut rng, table.dim()));
    let w0 = table.weight_of(&x0)?;
    let mut vars = VarPool::new();
    let x = generic_element(table, &mut vars, "t", None);
    if table.square(&x0) == x0.scale(&w0) {
        let w = table.weight_of(&x)?;
        if table.square(&x).sub(&x.scale_by(&w)).is_zero() {
            return Ok(Some(2));
        }
    }
    let numeric = f_sequence(table, &x0, bound)?;
    let mut symbolic: Option<Vec<SymbolicElement>> = None;
    for r in 3..=bound {
        if !numeric[r - 3].is_zero() {
            continue;
        }
        let fs = match &symbolic {
            Some(fs) if fs.len() >= r - 2 => fs,
            _ => symbolic.insert(f_sequence(table, &x, r)?),
        };
        if fs[r - 3].is_zero() {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// Which subspace `L_v` acts on in [`operator_nilpotency_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorCarrier {
    U,
    Lyubich,
}

/// Least `p` with `(L_v)^p = 0` on the carrier for generic `v ∈ V`.
pub fn operator_nilpotency_check(
    table: &AlgebraTable,
    p: &PeirceDecomposition,
    carrier: OperatorCarrier,
    seed: u64,
) -> Result<Option<usize>> {
    let basis = match carrier {
        OperatorCarrier::U => p.u_basis.clone(),
        OperatorCarrier::Lyubich => lyubich_ideal(table, p)?,
    };
    let bound = basis.len().max(1);
    generic_operator_nil_index(table, &p.v_basis, &basis, bound, seed)
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrainReport {
    pub is_train: bool,
    pub rank: Option<usize>,
    pub rank_bound: usize,
    /// `(X^3 - X^2)(X - ½)^(r-3)`, i.e. the train polynomial at `ω = 1`;
    /// the coefficient of `X^(r-i)` carries `ω^i`.
    pub train_poly: Option<UnivariatePoly>,
    pub nil_index_n: Option<usize>,
    pub nil_bound: usize,
    pub is_locally_train: bool,
    /// Nil index of `L_v` on `U` for generic `v ∈ V`.
    pub operator_index_u: Option<usize>,
    pub operator_bound: usize,
}

impl TrainReport {
    pub fn equation(&self) -> Option<String> {
        self.train_poly.as_ref().map(train_equation)
    }
}

/// Renders a train polynomial at `ω = 1` as the homogeneous identity in `x`.
pub fn train_equation(p: &UnivariatePoly) -> String {
    let top = p.degree();
    let mut out = String::new();
    for k in (1..=top).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        let neg = scalar::is_negative(&c);
        let mag = if neg { -c.clone() } else { c.clone() };
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
        match top - k {
            0 => {}
            1 => out.push_str("ω(x) "),
            i => out.push_str(&format!("ω(x)^{i} ")),
        }
        if k == 1 {
            out.push('x');
        } else {
            out.push_str(&format!("x^{k}"));
        }
    }
    out.push_str(" = 0");
    out
}

/// Train verdict by three routes (train identity, nil `N`, nilpotent `L_v`
/// on `U`) which must agree.
pub fn train_analysis(table: &AlgebraTable, seed: u64) -> Result<TrainReport> {
    let b = is_bernstein(table)?;
    if !b.holds {
        return Err(Error::Precondition(format!("not a Bernstein algebra: {b}")));
    }
    let e = structure::find_idempotent(table)?;
    let p = structure::peirce(table, &e)?;
    let n_basis = p.n_basis();
    let nil_bound = n_basis.len() + 2;
    let nil_index_n = generic_nil_index(table, &n_basis, nil_bound, seed);
    let operator_bound = p.u_basis.len().max(1);
    let operator_index_u = operator_nilpotency_check(table, &p, OperatorCarrier::U, seed)?;
    let rank_bound = table.dim() + 2;
    let rank = generic_train_rank(table, rank_bound, seed)?;
    let is_locally_train = nil_index_n.is_some();
    if is_locally_train != operator_index_u.is_some() || is_locally_train != rank.is_some() {
        return Err(Error::Internal(format!(
            "train routes disagree: nil N {nil_index_n:?}, L_v on U {operator_index_u:?}, rank {rank:?}"
        )));
    }
    Ok(TrainReport {
        is_train: rank.is_some(),
        rank,
        rank_bound,
        train_poly: rank.map(|r| UnivariatePoly::train_form(r, &Scalar::one())),
        nil_index_n,
        nil_bound,
        is_locally_train,
        operator_index_u,
        operator_bound,
    })
}

/// Generic `x ∈ N` is nilpotent.
pub fn locally_train_analysis(table: &AlgebraTable, seed: u64) -> Result<bool> {
    Ok(train_analysis(table, seed)?.is_locally_train)
}

/// `L_x^(k+3) = L_v^k ∘ L_x^3` on `N` for `x = u + v`, all `k <= k_max`.
pub fn lemma_l_k3_check(table: &AlgebraTable, p: &PeirceDecomposition, k_max: usize) -> Result<bool> {
    let dom = [
        Domain::Span(p.u_basis.clone()),
        Domain::Span(p.v_basis.clone()),
        Domain::Span(p.n_basis()),
    ];
    for k in 0..=k_max {
        let c = check_identity(table, &dom, |t, xs| {
            let (u, v, y) = (&xs[0], &xs[1], &xs[2]);
            let x = u.add(v);
            let mut l3 = y.clone();
            for _ in 0..3 {
                l3 = t.mul(&x, &l3);
            }
            let (mut lhs, mut rhs) = (l3.clone(), l3);
            for _ in 0..k {
                lhs = t.mul(&x, &lhs);
                rhs = t.mul(v, &rhs);
            }
            Ok(lhs.sub(&rhs))
        })?;
        if !c.holds {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(u^2 + v)^k = 2 L_v^(k-1)(u^2) + v^k` for `2 <= k <= k_max`.
pub fn lemma_u2_plus_v_check(table: &AlgebraTable, p: &PeirceDecomposition, k_max: usize) -> Result<bool> {
    let dom = [Domain::Span(p.u_basis.clone()), Domain::Span(p.v_basis.clone())];
    for k in 2..=k_max {
        let c = check_identity(table, &dom, |t, xs| {
            let (u, v) = (&xs[0], &xs[1]);
            let u2 = t.square(u);
            let lhs = t.principal_power(&u2.add(v), k);
            let mut lv = u2;
            for _ in 0..k - 1 {
                lv = t.mul(v, &lv);
            }
            let rhs = lv.scale(&scalar::int(2)).add(&t.principal_power(v, k));
            Ok(lhs.sub(&rhs))
        })?;
        if !c.holds {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Least `p` with `(L_x)^p = 0` on the carrier for generic `x` in it.
pub fn engel_check(table: &AlgebraTable, carrier: &[Element], seed: u64) -> Result<Option<usize>> {
    if !symbolic::is_closed(table, carrier) {
        return Err(Error::NotClosed);
    }
    generic_operator_nil_index(table, carrier, carrier, carrier.len() + 1, seed)
}

#[derive(Clone, Debug, PartialEq)]
pub struct EngelYagzhevReport {
    pub carrier_dim: usize,
    pub square_square: IdentityCheck,
    pub nil_index: Option<usize>,
    pub nil_bound: usize,
    pub engel_index: Option<usize>,
    pub engel_bound: usize,
    /// Least `q0` with `T_q = 0` identically for `q0 <= q <= yagzhev_verified_upto`.
    pub yagzhev_index: Option<usize>,
    pub yagzhev_verified_upto: usize,
    /// `T_q = 2^(q-2) x^q` identically for `2 <= q <= yagzhev_verified_upto`.
    pub tq_identity: bool,
}

impl EngelYagzhevReport {
    pub fn agree(&self) -> bool {
        let n = self.nil_index.is_some();
        n == self.engel_index.is_some() && n == self.yagzhev_index.is_some()
    }
}

/// Nil, Engel and Yagzhev verdicts on a subalgebra. When `(x^2)^2 = 0`
/// holds on the carrier the three verdicts must agree.
pub fn engel_yagzhev(table: &AlgebraTable, carrier: &[Element], seed: u64) -> Result<EngelYagzhevReport> {
    let engel_bound = carrier.len() + 1;
    let engel_index = engel_check(table, carrier, seed)?;
    let square_square = symbolic::square_square_vanishes(table, carrier)?;
    let nil_bound = carrier.len() + 2;
    let nil_index = generic_nil_index(table, carrier, nil_bound, seed);
    let q_max = nil_index.unwrap_or(nil_bound).max(6);
    let mut vars = VarPool::new();
    let x = generic_element(table, &mut vars, "t", Some(carrier));
    let sums = yagzhev_sums(table, &x, q_max);
    let mut yagzhev_index = None;
    for q in (2..=q_max).rev() {
        if sums[q].is_zero() {
            yagzhev_index = Some(q);
        } else {
            break;
        }
    }
    let powers = table.principal_powers(&x, q_max);
    let tq_identity = (2..=q_max).all(|q| {
        let c = Scalar::from_integer(num_bigint::BigInt::from(1u64) << (q - 2));
        sums[q] == powers[q - 1].scale(&c)
    });
    let report = EngelYagzhevReport {
        carrier_dim: carrier.len(),
        square_square,
        nil_index,
        nil_bound,
        engel_index,
        engel_bound,
        yagzhev_index,
        yagzhev_verified_upto: q_max,
        tq_identity,
    };
    if report.square_square.holds && (!report.agree() || !report.tq_identity) {
        return Err(Error::Internal(format!(
            "(x^2)^2 = 0 holds but verdicts disagree: nil {:?}, Engel {:?}, Yagzhev {:?}",
            report.nil_index, report.engel_index, report.yagzhev_index
        )));
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerChain {
    /// `dim I^1, dim I^2, …` until stable or zero.
    pub powers: Vec<usize>,
    /// Least `n` with `I^n = 0`.
    pub nilpotency_index: Option<usize>,
    /// `dim I^(1), dim I^(2), …` for the plenary powers `I^(n) = (I^(n-1))^2`.
    pub plenary: Vec<usize>,
    /// Least `n` with `I^(n) = 0`.
    pub solvability_index: Option<usize>,
}

fn rows_to_elems(s: &Subspace) -> Vec<Element> {
    s.basis().iter().map(|r| Elem(r.clone())).collect()
}

/// Dimensions of `I^n = sum_(i+j=n) I^i I^j` and of the plenary powers.
pub fn ideal_power_chain(table: &AlgebraTable, ideal_basis: &[Element]) -> Result<PowerChain> {
    if !structure::is_ideal(table, ideal_basis) {
        return Err(Error::NotAnIdeal("span is not closed under multiplication by A".into()));
    }
    let dim = table.dim();
    let limit = dim + 2;
    let mut powers: Vec<Subspace> = vec![span_of(dim, ideal_basis)];
    while powers.len() < limit {
        let n = powers.len() + 1;
        let mut rows = Vec::new();
        for i in 1..n {
            let (a, b) = (rows_to_elems(&powers[i - 1]), rows_to_elems(&powers[n - i - 1]));
            rows.extend(structure::product_space(table, &a, &b).basis().iter().cloned());
        }
        let next = Subspace::span(dim, &rows);
        let last = powers.last().expect("nonempty");
        let stable = next.dim() == last.dim();
        powers.push(next);
        if stable || powers.last().expect("nonempty").dim() == 0 {
            break;
        }
    }
    let mut plenary = vec![span_of(dim, ideal_basis)];
    while plenary.len() < limit {
        let last = rows_to_elems(plenary.last().expect("nonempty"));
        let next = structure::product_space(table, &last, &last);
        let stable = next.dim() == last.len();
        plenary.push(next);
        if stable || plenary.last().expect("nonempty").dim() == 0 {
            break;
        }
    }
    let dims = |v: &[Subspace]| v.iter().map(Subspace::dim).collect::<Vec<_>>();
    let first_zero = |d: &[usize]| d.iter().position(|&x| x == 0).map(|i| i + 1);
    let powers = dims(&powers);
    let plenary = dims(&plenary);
    Ok(PowerChain {
        nilpotency_index: first_zero(&powers),
        solvability_index: first_zero(&plenary),
        powers,
        plenary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TableBuilder;
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
    fn example_is_not_train() {
        let r = train_analysis(&example(), 0).unwrap();
        assert!(!r.is_train);
        assert!(!r.is_locally_train);
        assert_eq!(r.operator_index_u, None);
    }

    #[test]
    fn example_lemmas_hold() {
        let a = example();
        let p = structure::peirce(&a, &a.basis_element(0)).unwrap();
        assert!(lemma_l_k3_check(&a, &p, 4).unwrap());
        assert!(lemma_u2_plus_v_check(&a, &p, 6).unwrap());
    }

    #[test]
    fn equation_rendering() {
        let p = UnivariatePoly::train_form(4, &Scalar::one());
        assert_eq!(train_equation(&p), "x^4 - 3/2 ω(x) x^3 + 1/2 ω(x)^2 x^2 = 0");
    }

    #[test]
    fn example_barideal_chain_stabilizes() {
        let a = example();
        let n = a.barideal_basis().unwrap();
        let c = ideal_power_chain(&a, &n).unwrap();
        assert_eq!(c.powers, vec![2, 1, 1]);
        assert_eq!(c.nilpotency_index, None);
        assert_eq!(c.plenary, vec![2, 1, 0]);
    }
}
