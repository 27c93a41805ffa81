//! Univariate polynomials over the rationals, used for minimal and train polynomials.

use num_traits::{One, Zero};
use std::fmt;

use crate::scalar::{self, Scalar};

/// Coefficients indexed by exponent, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UnivariatePoly {
    coeffs: Vec<Scalar>,
}

impl UnivariatePoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn zero() -> Self {
        UnivariatePoly::default()
    }

    /// `X^k`
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![Scalar::zero(); k + 1];
        c[k] = Scalar::one();
        UnivariatePoly { coeffs: c }
    }

    /// `X - r`
    pub fn linear_root(r: Scalar) -> Self {
        UnivariatePoly::new(vec![-r, Scalar::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UnivariatePoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UnivariatePoly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        UnivariatePoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UnivariatePoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivariatePoly::new(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = UnivariatePoly::monomial(0);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Quotient and remainder of Euclidean division by a nonzero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        let dl = d.leading();
        let dd = d.degree();
        if rem.len() <= dd {
            return (UnivariatePoly::zero(), self.clone());
        }
        let mut quot = vec![Scalar::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / &dl;
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k - dd + j] -= &q * c;
            }
            quot[k - dd] = q;
        }
        (UnivariatePoly::new(quot), UnivariatePoly::new(rem))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_rem(self).1.is_zero()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Composition `self(other(X))`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = UnivariatePoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(other).add(&UnivariatePoly::new(vec![c.clone()]));
        }
        acc
    }

    /// Train polynomial of rank `k`: `X^2 - wX` for `k = 2`, otherwise
    /// `f_k(X) = (X^3 - w X^2)(X - w/2)^(k-3)`.
    pub fn train_form(k: usize, w: &Scalar) -> Self {
        assert!(k >= 2, "train rank is at least 2");
        if k == 2 {
            return UnivariatePoly::new(vec![Scalar::zero(), -w.clone(), Scalar::one()]);
        }
        let cube = UnivariatePoly::new(vec![Scalar::zero(), Scalar::zero(), -w.clone(), Scalar::one()]);
        cube.mul(&UnivariatePoly::linear_root(w * scalar::half()).pow((k - 3) as u32))
    }

    /// Coefficients from the highest power down to `X^1`.
    pub fn descending_from_top(&self) -> Vec<Scalar> {
        (1..=self.degree()).rev().map(|k| self.coeff(k)).collect()
    }
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let neg = scalar::is_negative(c);
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show = !mag.is_one() || k == 0;
            if show {
                write!(f, "{}", scalar::format(&mag))?;
                if k > 0 {
                    write!(f, " ")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn train_form_rank_four() {
        let f4 = UnivariatePoly::train_form(4, &int(1));
        assert_eq!(
            f4.descending_from_top(),
            vec![int(1), frac(-3, 2), frac(1, 2), int(0)]
        );
        assert_eq!(f4.to_string(), "X^4 - 3/2 X^3 + 1/2 X^2");
    }

    #[test]
    fn division_and_divisibility() {
        let f = UnivariatePoly::train_form(5, &int(1));
        let g = UnivariatePoly::train_form(3, &int(1));
        assert!(g.divides(&f));
        let (q, r) = f.div_rem(&g);
        assert!(r.is_zero());
        assert_eq!(q, UnivariatePoly::linear_root(frac(1, 2)).pow(2));
        assert!(!UnivariatePoly::linear_root(int(2)).divides(&g));
    }

    #[test]
    fn composition_matches_evaluation() {
        let p = UnivariatePoly::new(vec![int(0), int(1), int(3)]);
        let q = UnivariatePoly::new(vec![int(0), int(-2), int(0), int(1)]);
        let pq = p.compose(&q);
        for x in -3..=3 {
            let x = int(x);
            assert_eq!(pq.eval(&x), p.eval(&q.eval(&x)));
        }
    }
}
