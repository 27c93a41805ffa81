//! Per-element analysis: degree, minimal polynomial, train polynomials and
//! singly generated subalgebras.

use num_traits::{One, Zero};

use crate::algebra::{AlgebraTable, Elem, Element, TableBuilder};
use crate::error::{Error, Result};
use crate::exec;
use crate::linalg::{self, Subspace};
use crate::ring::Coeff;
use crate::scalar::{self, Scalar};
use crate::symbolic::CarrierCoords;
use crate::upoly::UnivariatePoly;

#[derive(Clone, Debug, PartialEq)]
pub struct ElementAnalysis {
    pub element: Element,
    /// `dim alg(a)`.
    pub degree: usize,
    /// Monic, zero constant term, of degree `degree + 1`.
    pub minimal_poly: UnivariatePoly,
    /// `a, a^2, …, a^degree`.
    pub power_basis: Vec<Element>,
    /// Least `m` with `a^m = 0`, if `a` is right nilpotent.
    pub nil_index: Option<usize>,
}

impl ElementAnalysis {
    /// `γ_1, …, γ_n` in `a^(n+1) = γ_1 a + … + γ_n a^n`.
    pub fn gammas(&self) -> Vec<Scalar> {
        (1..=self.degree).map(|k| -self.minimal_poly.coeff(k)).collect()
    }
}

/// Powers of `a` until the first linear dependence (at most `dim + 1` of them).
pub fn analyze_element(table: &AlgebraTable, a: &Element) -> Result<ElementAnalysis> {
    if a.dim() != table.dim() {
        return Err(Error::DimensionMismatch {
            expected: table.dim(),
            got: a.dim(),
        });
    }
    let mut basis: Vec<Element> = Vec::new();
    let mut span = Subspace::zero(table.dim());
    let mut next = a.clone();
    loop {
        if span.contains(&next.0) {
            break;
        }
        span = span.extend(&[next.0.clone()]);
        let following = table.mul(&next, a);
        basis.push(next);
        next = following;
    }
    let n = basis.len();
    let family: Vec<Vec<Scalar>> = basis.iter().map(|b| b.0.clone()).collect();
    let gammas = if n == 0 {
        Vec::new()
    } else {
        linalg::coordinates_in(&family, &next.0)?.ok_or_else(|| Error::Internal("dependent power outside span".into()))?
    };
    let mut coeffs = vec![Scalar::zero(); n + 2];
    for (k, g) in gammas.iter().enumerate() {
        coeffs[k + 1] = -g.clone();
    }
    coeffs[n + 1] = Scalar::one();
    let minimal_poly = UnivariatePoly::new(coeffs);
    let nil_index = gammas.iter().all(Zero::is_zero).then_some(n + 1);
    Ok(ElementAnalysis {
        element: a.clone(),
        degree: n,
        minimal_poly,
        power_basis: basis,
        nil_index,
    })
}

/// [`analyze_element`] over a batch, data-parallel when enabled.
pub fn analyze_batch(table: &AlgebraTable, elems: &[Element]) -> Vec<Result<ElementAnalysis>> {
    exec::map_slice(elems, |a| analyze_element(table, a))
}

/// The minimal polynomial has the form forced by the Bernstein identity:
/// `X`, `X^2 - ωX`, `X^3 - ωX^2`, or a multiple of `X^3 - ωX^2`.
/// The form is forced only when `ω(a) ≠ 0`; weight-zero elements can
/// violate it.
pub fn minimal_poly_form_check(table: &AlgebraTable, analysis: &ElementAnalysis) -> Result<bool> {
    let w = table.weight_of(&analysis.element)?;
    let p = &analysis.minimal_poly;
    let x = UnivariatePoly::monomial(1);
    let cubic = UnivariatePoly::new(vec![Scalar::zero(), Scalar::zero(), -w.clone(), Scalar::one()]);
    Ok(match p.degree() {
        1 => *p == x,
        2 => *p == UnivariatePoly::new(vec![Scalar::zero(), -w, Scalar::one()]),
        3 => *p == cubic,
        _ => cubic.divides(p),
    })
}

/// `f_3 = x^3 - ω x^2`, `f_(k+1) = x f_k - ½ ω f_k`; returns `[f_3, …, f_k_max]`.
pub fn f_sequence<C: Coeff>(table: &AlgebraTable, x: &Elem<C>, k_max: usize) -> Result<Vec<Elem<C>>> {
    let w = table.weight_of(x)?;
    let mut out = Vec::new();
    if k_max < 3 {
        return Ok(out);
    }
    let x2 = table.square(x);
    let x3 = table.mul(&x2, x);
    let mut f = x3.sub(&x2.scale_by(&w));
    let half_w = w.scale(&scalar::half());
    for _ in 3..k_max {
        let next = table.mul(x, &f).sub(&f.scale_by(&half_w));
        out.push(f);
        f = next;
    }
    out.push(f);
    Ok(out)
}

/// `f_k(x)` for `k >= 3`.
pub fn f_k<C: Coeff>(table: &AlgebraTable, x: &Elem<C>, k: usize) -> Result<Elem<C>> {
    if k < 3 {
        return Err(Error::Precondition(format!("f_k needs k >= 3, got {k}")));
    }
    Ok(f_sequence(table, x, k)?.pop().expect("k >= 3"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrainRank {
    Rank(usize),
    /// No `f_m` vanished for `m <= bound`.
    NotFound { bound: usize },
}

impl TrainRank {
    pub fn rank(&self) -> Option<usize> {
        match self {
            TrainRank::Rank(r) => Some(*r),
            TrainRank::NotFound { .. } => None,
        }
    }
}

/// Train rank of `alg(a)`: 2 if `a^2 = ω(a) a`, else the least `m >= 3` with
/// `f_m(a) = 0`, searched up to `dim + 2`. A found rank is cross-checked
/// against the minimal polynomial.
pub fn train_element_rank(table: &AlgebraTable, a: &Element) -> Result<TrainRank> {
    let w = table.weight_of(a)?;
    if w.is_zero() {
        return Err(Error::Precondition("train rank needs ω(a) ≠ 0".into()));
    }
    if table.square(a) == a.scale(&w) {
        return Ok(TrainRank::Rank(2));
    }
    let bound = table.dim() + 2;
    let fs = f_sequence(table, a, bound)?;
    let Some(pos) = fs.iter().position(Elem::is_zero) else {
        return Ok(TrainRank::NotFound { bound });
    };
    let m = pos + 3;
    let analysis = analyze_element(table, a)?;
    if analysis.minimal_poly != UnivariatePoly::train_form(m, &w) {
        return Err(Error::Internal(format!(
            "f_{m}(a) = 0 but the minimal polynomial is {}",
            analysis.minimal_poly
        )));
    }
    Ok(TrainRank::Rank(m))
}

/// `alg(a)` in the canonical basis `(e, u_1, …, u_(n-2), v_1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SinglyGenerated {
    pub table: AlgebraTable,
    /// Images of the canonical basis vectors in the ambient algebra.
    pub embedding: Vec<Element>,
    /// `v_1 u_(n-2) = Σ β_i u_i` (empty when `n <= 2`).
    pub betas: Vec<Scalar>,
}

/// Builds `alg(a)` for `ω(a) = 1` with `e = a^2`, `u_1 = a^3 - a^2`,
/// `u_(i+1) = v_1 u_i`, `v_1 = a + a^2 - 2a^3`, and verifies the table
/// `v_1^2 = -2u_1 - 4 v_1 u_1`, `U^2 = 0`.
pub fn singly_generated_subalgebra(table: &AlgebraTable, a: &Element) -> Result<SinglyGenerated> {
    if table.weight_of(a)? != Scalar::one() {
        return Err(Error::Precondition("generator must have weight 1".into()));
    }
    let n = analyze_element(table, a)?.degree;
    let e = table.square(a);
    let mut family = vec![e.clone()];
    let mut labels = vec!["e".to_string()];
    if n >= 2 {
        let a3 = table.mul(&e, a);
        let v1 = a.add(&e).sub(&a3.scale(&scalar::int(2)));
        let mut u = a3.sub(&e);
        for i in 1..=n - 2 {
            family.push(u.clone());
            labels.push(format!("u{i}"));
            u = table.mul(&v1, &u);
        }
        family.push(v1);
        labels.push("v1".into());
    }
    let coords = CarrierCoords::new(&family)?;
    let mut b = TableBuilder::new(format!("alg({})", table.format_element(a)), &labels);
    let k = family.len();
    for i in 0..k {
        for j in i..k {
            let prod = table.mul(&family[i], &family[j]);
            let c = coords.coords(&prod).ok_or(Error::NotClosed)?;
            let terms: Vec<(usize, Scalar)> = c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
            if !terms.is_empty() {
                b = b.add_indexed(i, j, &terms);
            }
        }
    }
    let mut w = vec![Scalar::zero(); k];
    w[0] = Scalar::one();
    let sub = b.weight_vector(w).build()?;
    let betas = if n >= 3 {
        let last = sub.mul(&sub.basis_element(k - 1), &sub.basis_element(k - 2));
        last.0[1..k - 1].to_vec()
    } else {
        Vec::new()
    };
    verify_canonical(&sub, n)?;
    Ok(SinglyGenerated {
        table: sub,
        embedding: family,
        betas,
    })
}

fn verify_canonical(t: &AlgebraTable, n: usize) -> Result<()> {
    if n < 2 {
        return Ok(());
    }
    let v = t.basis_element(n - 1);
    let us: Vec<Element> = (1..n - 1).map(|i| t.basis_element(i)).collect();
    let bad = |what: &str| Err(Error::Internal(format!("canonical table: {what}")));
    for (i, ui) in us.iter().enumerate() {
        if i + 1 < us.len() && t.mul(&v, ui) != us[i + 1] {
            return bad("v1 u_i != u_(i+1)");
        }
        if us.iter().any(|uj| !t.mul(ui, uj).is_zero()) {
            return bad("U^2 != 0");
        }
    }
    let expected = match us.first() {
        Some(u1) => u1.scale(&scalar::int(-2)).sub(&t.mul(&v, u1).scale(&scalar::int(4))),
        None => t.zero(),
    };
    if t.square(&v) != expected {
        return bad("v1^2 != -2u1 - 4u2");
    }
    Ok(())
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
    fn example_generator_has_degree_three() {
        let a = example();
        let r = analyze_element(&a, &Element::from_ints(&[1, 1, 1])).unwrap();
        assert_eq!(r.degree, 3);
        assert_eq!(
            r.minimal_poly,
            UnivariatePoly::new(vec![int(0), int(0), frac(3, 2), frac(-5, 2), int(1)])
        );
        assert!(minimal_poly_form_check(&a, &r).unwrap());
        assert_eq!(r.nil_index, None);
    }

    #[test]
    fn zero_and_idempotent() {
        let a = example();
        let z = analyze_element(&a, &a.zero()).unwrap();
        assert_eq!((z.degree, z.minimal_poly.clone()), (0, UnivariatePoly::monomial(1)));
        assert_eq!(z.nil_index, Some(1));
        let e = analyze_element(&a, &a.basis_element(0)).unwrap();
        assert_eq!(e.minimal_poly, UnivariatePoly::new(vec![int(0), int(-1), int(1)]));
    }

    #[test]
    fn example_generator_is_not_train() {
        let a = example();
        let x = Element::from_ints(&[1, 1, 1]);
        assert_eq!(train_element_rank(&a, &x).unwrap(), TrainRank::NotFound { bound: 5 });
        assert!(f_sequence(&a, &x, 5).unwrap().iter().all(|f| !f.is_zero()));
    }

    #[test]
    fn three_dim_generated_algebra() {
        let a = example();
        let x = Element::from_ints(&[1, 1, 1]);
        let s = singly_generated_subalgebra(&a, &x).unwrap();
        assert_eq!(s.table.dim(), 3);
        assert_eq!(s.embedding[1], Element::from_ints(&[0, 2, 0]));
        assert_eq!(s.betas, vec![frac(1, 1)]);
    }
}
