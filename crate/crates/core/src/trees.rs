//! Full binary trees (nonassociative monomials in one variable).

use std::fmt;

use num_traits::Zero;

use crate::algebra::{AlgebraTable, Elem, Element};
use crate::error::{Error, Result};
use crate::exec;
use crate::ring::Coeff;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    Leaf,
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn leaves(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    /// Every internal node has a leaf child. By commutativity these are
    /// exactly the trees that evaluate to the principal power.
    pub fn is_caterpillar(&self) -> bool {
        match self {
            Tree::Leaf => true,
            Tree::Node(l, r) => match (&**l, &**r) {
                (Tree::Leaf, t) | (t, Tree::Leaf) => t.is_caterpillar(),
                _ => false,
            },
        }
    }

    pub fn evaluate<C: Coeff>(&self, table: &AlgebraTable, x: &Elem<C>) -> Elem<C> {
        match self {
            Tree::Leaf => x.clone(),
            Tree::Node(l, r) => table.mul(&l.evaluate(table, x), &r.evaluate(table, x)),
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf => write!(f, "x"),
            Tree::Node(l, r) => write!(f, "({l} {r})"),
        }
    }
}

/// Root split of a tree with `m` leaves: left subtree `left` among trees with
/// `left_leaves` leaves, right subtree `right` among trees with
/// `m - left_leaves` leaves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Shape {
    left_leaves: usize,
    left: usize,
    right: usize,
}

/// All trees with up to `max_leaves` leaves, in a fixed order, with their
/// values at one argument. Values are computed bottom-up, one layer at a time.
#[derive(Clone, Debug)]
pub struct TreeValues<C> {
    shapes: Vec<Vec<Shape>>,
    values: Vec<Vec<Elem<C>>>,
}

impl<C: Coeff> TreeValues<C> {
    pub fn new(table: &AlgebraTable, x: &Elem<C>, max_leaves: usize) -> Self {
        let mut shapes: Vec<Vec<Shape>> = vec![Vec::new(), vec![Shape {
            left_leaves: 0,
            left: 0,
            right: 0,
        }]];
        let mut values: Vec<Vec<Elem<C>>> = vec![Vec::new(), vec![x.clone()]];
        for m in 2..=max_leaves {
            let layer: Vec<Shape> = (1..m)
                .flat_map(|i| {
                    let (nl, nr) = (shapes[i].len(), shapes[m - i].len());
                    (0..nl).flat_map(move |l| {
                        (0..nr).map(move |r| Shape {
                            left_leaves: i,
                            left: l,
                            right: r,
                        })
                    })
                })
                .collect();
            let vals = exec::map_slice(&layer, |s| {
                table.mul(&values[s.left_leaves][s.left], &values[m - s.left_leaves][s.right])
            });
            shapes.push(layer);
            values.push(vals);
        }
        TreeValues { shapes, values }
    }

    pub fn max_leaves(&self) -> usize {
        self.values.len() - 1
    }

    /// Values of all trees with `m` leaves; there are `Catalan(m-1)` of them.
    pub fn values(&self, m: usize) -> &[Elem<C>] {
        &self.values[m]
    }

    pub fn tree(&self, m: usize, idx: usize) -> Tree {
        if m == 1 {
            return Tree::Leaf;
        }
        let s = self.shapes[m][idx];
        Tree::Node(
            Box::new(self.tree(s.left_leaves, s.left)),
            Box::new(self.tree(m - s.left_leaves, s.right)),
        )
    }

    /// Sum over all trees with `q` leaves, in enumeration order.
    pub fn total(&self, q: usize) -> Elem<C> {
        let dim = self.values[1][0].dim();
        self.values[q].iter().fold(Elem::zero(dim), |acc, v| acc.add(v))
    }
}

pub fn catalan(n: usize) -> usize {
    let mut c = 1usize;
    for k in 0..n {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

/// `T_q(x)`, the sum over all `q`-leaf trees, via `T_q = sum_i T_i T_(q-i)`.
pub fn yagzhev_sums<C: Coeff>(table: &AlgebraTable, x: &Elem<C>, q_max: usize) -> Vec<Elem<C>> {
    let mut t: Vec<Elem<C>> = vec![Elem::zero(x.dim()), x.clone()];
    for q in 2..=q_max {
        let parts = exec::map_range(q - 1, |i| table.mul(&t[i + 1], &t[q - 1 - i]));
        let sum = parts.iter().fold(Elem::zero(x.dim()), |acc, p| acc.add(p));
        t.push(sum);
    }
    t
}

/// `T_q(x)` by enumerating all trees. Requires `(x^2)^2 = 0` at `x`.
pub fn yagzhev_tq<C: Coeff>(table: &AlgebraTable, x: &Elem<C>, q: usize) -> Result<Elem<C>> {
    if q < 2 {
        return Err(Error::Precondition("T_q needs q >= 2".into()));
    }
    if !table.square(&table.square(x)).is_zero() {
        return Err(Error::SquareSquareNonzero);
    }
    Ok(TreeValues::new(table, x, q).total(q))
}

/// `T_q(x) - 2^(q-2) x^q`, zero when the identity holds at `x`.
pub fn yagzhev_defect<C: Coeff>(table: &AlgebraTable, x: &Elem<C>, q: usize) -> Result<Elem<C>> {
    let tq = yagzhev_tq(table, x, q)?;
    let coeff = Scalar::from_integer(num_bigint::BigInt::from(1u64) << (q - 2));
    Ok(tq.sub(&table.principal_power(x, q).scale(&coeff)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct StrongNilpotency {
    /// Least `m` with `a^m = 0`, if reached within `max_leaves`.
    pub right_index: Option<usize>,
    /// Least `m` such that every tree with `k` leaves vanishes at `a` for
    /// `m <= k <= max_leaves`.
    pub strong_index: Option<usize>,
    pub max_leaves: usize,
    /// For every `m >= 4`, all non-caterpillar trees vanish at `a`.
    pub only_principal_survive: bool,
}

/// Evaluates every tree with up to `max_leaves` leaves at `a ∈ N`.
pub fn strong_nilpotency_oracle(table: &AlgebraTable, a: &Element, max_leaves: usize) -> Result<StrongNilpotency> {
    if !table.weight_of(a)?.is_zero() {
        return Err(Error::NotInSubspace("N".into()));
    }
    if !table.square(&table.square(a)).is_zero() {
        return Err(Error::SquareSquareNonzero);
    }
    let tv = TreeValues::new(table, a, max_leaves);
    let right_index = (1..=max_leaves).find(|&m| table.principal_power(a, m).is_zero());
    let mut strong_index = None;
    for m in (1..=max_leaves).rev() {
        if tv.values(m).iter().all(Elem::is_zero) {
            strong_index = Some(m);
        } else {
            break;
        }
    }
    let only_principal_survive = (4..=max_leaves).all(|m| {
        tv.values(m)
            .iter()
            .enumerate()
            .all(|(i, v)| v.is_zero() || tv.tree(m, i).is_caterpillar())
    });
    Ok(StrongNilpotency {
        right_index,
        strong_index,
        max_leaves,
        only_principal_survive,
    })
}

/// `(tree, value)` for every tree with exactly `m` leaves.
pub fn tree_evaluations(table: &AlgebraTable, a: &Element, m: usize) -> Vec<(Tree, Element)> {
    let tv = TreeValues::new(table, a, m);
    tv.values(m)
        .iter()
        .enumerate()
        .map(|(i, v)| (tv.tree(m, i), v.clone()))
        .collect()
}
