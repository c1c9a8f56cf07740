//! Root systems of the simple Lie algebras, generated from Cartan matrices.
//!
//! Nodes follow Bourbaki numbering (0-based here). The Cartan matrix is
//! `A[i][j] = α_j(H_i) = 2(α_i, α_j)/(α_i, α_i)`, roots are integer vectors
//! in the simple-root basis, and points of the Cartan subalgebra are stored
//! by their values `α_j(x)` on the simple roots.

mod center;
mod parabolic;
pub mod type_a;
mod weyl;

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use center::{AlcoveWalk, CentralElement};
pub use parabolic::ParabolicChoice;
pub use weyl::WeylElement;

/// Exact rational scalar for points of the Cartan subalgebra.
pub type Q = Ratio<i64>;

/// A point `x` of the Cartan subalgebra, stored as `(α_1(x), …, α_l(x))`.
pub type Coweight = Vec<Q>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::InvalidRootSystem(format!("unknown family {other:?}"))),
        }
    }
}

/// Largest supported rank for the classical families.
pub const MAX_RANK: usize = 62;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => (1..=MAX_RANK).contains(&rank),
            Family::B | Family::C => (2..=MAX_RANK).contains(&rank),
            Family::D => (4..=MAX_RANK).contains(&rank),
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidRootSystem(format!("no type {family}{rank}")));
        }
        Ok(CartanType { family, rank })
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let l = self.rank;
        let mut a = vec![vec![0i64; l]; l];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C | Family::F => (1..l).for_each(|i| link(i - 1, i)),
            Family::D => {
                (1..l - 1).for_each(|i| link(i - 1, i));
                link(l - 3, l - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                (3..l).for_each(|i| link(i - 1, i));
            }
            Family::G => link(0, 1),
        }
        match self.family {
            Family::B => a[l - 1][l - 2] = -2,
            Family::C => a[l - 2][l - 1] = -2,
            Family::F => a[2][1] = -2,
            Family::G => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Accepts `"E6"`, `"a3"`, …
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let split = s
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| Error::Parse(format!("missing rank in {s:?}")))?;
        let family: Family = s[..split].parse()?;
        let rank = s[split..]
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in {s:?}")))?;
        CartanType::new(family, rank)
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    /// Positive roots by increasing height, then their negatives.
    roots: Vec<Vec<i64>>,
    positive: usize,
    lookup: HashMap<Vec<i64>, usize>,
    marks: Vec<i64>,
    /// `(α_i, α_j)` scaled so the shortest roots have length 2.
    form: Vec<Vec<i64>>,
    /// `A^{-1}` as rationals; column `σ` is `ω_σ` in the simple-root basis.
    cartan_inverse: Vec<Vec<Q>>,
    /// `(A^T)^{-1}`, for coroot lattice membership.
    coroot_solver: Vec<Vec<Q>>,
}

impl RootSystem {
    pub fn build(cartan_type: CartanType) -> Self {
        let cartan = cartan_type.cartan_matrix();
        let l = cartan_type.rank;
        let simple: Vec<Vec<i64>> = (0..l).map(|i| unit(l, i)).collect();

        let mut seen: HashSet<Vec<i64>> = simple.iter().cloned().collect();
        let mut positive = simple.clone();
        let mut frontier = simple;
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for beta in &frontier {
                for i in 0..l {
                    let reflected = reflect_root(&cartan, i, beta);
                    if reflected.iter().all(|&c| c >= 0) && seen.insert(reflected.clone()) {
                        next.push(reflected);
                    }
                }
            }
            positive.extend(next.iter().cloned());
            frontier = next;
        }
        positive.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        let count = positive.len();
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()));
        let lookup = roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        let marks = positive.last().expect("at least one root").clone();

        let form = symmetrized_form(&cartan);
        let to_q = |m: &Vec<Vec<i64>>| -> Vec<Vec<Q>> {
            m.iter()
                .map(|row| row.iter().map(|&v| Q::from_integer(v)).collect())
                .collect()
        };
        let transpose: Vec<Vec<i64>> = (0..l).map(|i| (0..l).map(|j| cartan[j][i]).collect()).collect();
        let cartan_inverse = invert(&to_q(&cartan)).expect("Cartan matrices are invertible");
        let coroot_solver = invert(&to_q(&transpose)).expect("Cartan matrices are invertible");

        RootSystem {
            cartan_type,
            cartan,
            roots,
            positive: count,
            lookup,
            marks,
            form,
            cartan_inverse,
            coroot_solver,
        }
    }

    pub fn from_label(family: Family, rank: usize) -> Result<Self> {
        Ok(Self::build(CartanType::new(family, rank)?))
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots[..self.positive]
    }

    pub fn root_index(&self, root: &[i64]) -> Option<usize> {
        self.lookup.get(root).copied()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.lookup.contains_key(v)
    }

    pub fn highest_root(&self) -> &[i64] {
        &self.marks
    }

    /// Coefficients `n_α` of the highest root.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn coxeter_number(&self) -> i64 {
        1 + self.marks.iter().sum::<i64>()
    }

    /// `β(H_i) = Σ_j β_j A[i][j]`.
    pub fn pairing(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter().zip(&self.cartan[i]).map(|(b, a)| b * a).sum()
    }

    /// `(β, γ)` in the normalization with short roots of length 2.
    pub fn inner(&self, beta: &[i64], gamma: &[i64]) -> i64 {
        let mut s = 0;
        for (i, b) in beta.iter().enumerate() {
            for (j, g) in gamma.iter().enumerate() {
                s += b * g * self.form[i][j];
            }
        }
        s
    }

    /// The coroot `H_β` as a point of the Cartan subalgebra:
    /// `α_j(H_β) = 2(β, α_j)/(β, β)`.
    pub fn coroot(&self, beta: &[i64]) -> Vec<i64> {
        let norm = self.inner(beta, beta);
        (0..self.rank())
            .map(|j| {
                let num = 2 * self.inner(beta, &unit(self.rank(), j));
                debug_assert_eq!(num % norm, 0);
                num / norm
            })
            .collect()
    }

    /// `β(x)` for a root (or any integer combination of simple roots).
    pub fn evaluate(&self, beta: &[i64], x: &[Q]) -> Q {
        beta.iter().zip(x).fold(Q::zero(), |acc, (&b, v)| acc + v * b)
    }

    /// The fundamental coweight dual to node `i`: `α_j(x) = δ_ij`.
    pub fn fundamental_coweight(&self, i: usize) -> Coweight {
        (0..self.rank())
            .map(|j| if i == j { Q::one() } else { Q::zero() })
            .collect()
    }

    /// `ω_σ(x)` for the fundamental weight dual to the simple coroot `H_σ`.
    pub fn fundamental_weight_at(&self, sigma: usize, x: &[Q]) -> Q {
        (0..self.rank()).fold(Q::zero(), |acc, k| acc + self.cartan_inverse[k][sigma] * x[k])
    }

    /// Whether `x` lies in the lattice spanned by the simple coroots.
    pub fn in_coroot_lattice(&self, x: &[Q]) -> bool {
        (0..self.rank()).all(|i| {
            let m = (0..self.rank()).fold(Q::zero(), |acc, k| acc + self.coroot_solver[i][k] * x[k]);
            m.is_integer()
        })
    }

    /// Positive roots are ordered by height, so the first `rank` are simple.
    pub fn simple_root(&self, i: usize) -> Vec<i64> {
        unit(self.rank(), i)
    }
}

pub(crate) fn unit(l: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; l];
    v[i] = 1;
    v
}

/// `s_i(β) = β - β(H_i) α_i`.
pub(crate) fn reflect_root(cartan: &[Vec<i64>], i: usize, beta: &[i64]) -> Vec<i64> {
    let p: i64 = beta.iter().zip(&cartan[i]).map(|(b, a)| b * a).sum();
    let mut out = beta.to_vec();
    out[i] -= p;
    out
}

/// `B[i][j] = (α_i, α_j)` with the shortest simple roots of length 2.
fn symmetrized_form(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let l = cartan.len();
    // (α_i, α_i) = d_i with A[i][j] d_i = A[j][i] d_j, propagated along the
    // connected Dynkin diagram.
    let mut d: Vec<Option<Q>> = vec![None; l];
    d[0] = Some(Q::one());
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..l {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                d[j] = Some(d[i].unwrap() * Q::new(cartan[i][j], cartan[j][i]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Q> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let min = d.iter().min().copied().expect("rank >= 1");
    let d: Vec<i64> = d.iter().map(|x| (x / min * 2).to_integer()).collect();
    (0..l)
        .map(|i| (0..l).map(|j| cartan[i][j] * d[i] / 2).collect())
        .collect()
}

/// Gauss–Jordan inverse over the rationals.
pub(crate) fn invert(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let l = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..l).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..l {
        let pivot = (col..l).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        for v in a[col].iter_mut() {
            *v /= p;
        }
        for r in 0..l {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for k in 0..2 * l {
                    let sub = f * a[col][k];
                    a[r][k] -= sub;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[l..].to_vec()).collect())
}
