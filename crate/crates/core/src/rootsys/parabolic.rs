//! Schubert-variety bookkeeping on `G/P`: codimensions of cosets `wW_P`,
//! their shifts under `w_c`, degree vectors and the operators `T_c`.

use std::collections::HashSet;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::center::CentralElement;
use super::weyl::{is_negative, WeylElement};
use super::{Coweight, RootSystem, Q};
use crate::error::{Error, Result};

/// The simple roots `Δ_P` of the Levi factor; the remaining nodes form `Σ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParabolicChoice {
    levi: Vec<bool>,
}

impl ParabolicChoice {
    pub fn new(rs: &RootSystem, levi_nodes: &[usize]) -> Result<Self> {
        let mut levi = vec![false; rs.rank()];
        for &i in levi_nodes {
            if i >= rs.rank() {
                return Err(Error::InvalidRootSystem(format!("node {} out of range", i + 1)));
            }
            levi[i] = true;
        }
        Ok(ParabolicChoice { levi })
    }

    /// The maximal parabolic whose `Σ` is `{node}`.
    pub fn maximal(rs: &RootSystem, node: usize) -> Result<Self> {
        let others: Vec<usize> = (0..rs.rank()).filter(|&i| i != node).collect();
        if node >= rs.rank() {
            return Err(Error::InvalidRootSystem(format!("node {} out of range", node + 1)));
        }
        Self::new(rs, &others)
    }

    /// The Borel subgroup, with `Δ_P` empty.
    pub fn borel(rs: &RootSystem) -> Self {
        ParabolicChoice {
            levi: vec![false; rs.rank()],
        }
    }

    pub fn all(rs: &RootSystem) -> Vec<Self> {
        let l = rs.rank();
        (0u64..1 << l)
            .map(|mask| ParabolicChoice {
                levi: (0..l).map(|i| mask >> i & 1 == 1).collect(),
            })
            .collect()
    }

    pub fn in_levi(&self, i: usize) -> bool {
        self.levi[i]
    }

    pub fn levi_nodes(&self) -> Vec<usize> {
        (0..self.levi.len()).filter(|&i| self.levi[i]).collect()
    }

    /// `Σ`, the nodes outside `Δ_P`.
    pub fn sigma(&self) -> Vec<usize> {
        (0..self.levi.len()).filter(|&i| !self.levi[i]).collect()
    }

    /// Whether the root lies in `R_P`, i.e. is supported on `Δ_P`.
    pub fn is_levi_root(&self, beta: &[i64]) -> bool {
        beta.iter().enumerate().all(|(i, &c)| c == 0 || self.levi[i])
    }

    /// `R⁺ \ R_P`.
    pub fn unipotent_roots<'a>(&'a self, rs: &'a RootSystem) -> impl Iterator<Item = &'a Vec<i64>> + 'a {
        rs.positive_roots().iter().filter(move |b| !self.is_levi_root(b))
    }

    pub fn dim(&self, rs: &RootSystem) -> usize {
        self.unipotent_roots(rs).count()
    }
}

/// A degree, recorded by its values on `ω_σ` for `σ ∈ Σ` in increasing order.
pub type DegreeVector = Vec<i64>;

fn to_integer(q: Q, what: &str) -> i64 {
    assert!(q.is_integer(), "{what} is not integral: {q}");
    q.to_integer()
}

impl RootSystem {
    /// The minimal-length representative of `w W_P`.
    pub fn canonicalize(&self, p: &ParabolicChoice, w: &WeylElement) -> WeylElement {
        let mut w = w.clone();
        'outer: loop {
            for i in p.levi_nodes() {
                if is_negative(&w.apply_root(&self.simple_root(i))) {
                    w = w.compose(&WeylElement::simple_reflection(self, i));
                    continue 'outer;
                }
            }
            return w;
        }
    }

    /// Minimal representatives of `W/W_P`, by increasing length.
    pub fn coset_representatives(&self, p: &ParabolicChoice) -> Vec<WeylElement> {
        let id = WeylElement::identity(self.rank());
        let mut seen = HashSet::from([id.clone()]);
        let mut layer = vec![id];
        let mut out = Vec::new();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for w in &layer {
                for i in 0..self.rank() {
                    let v = self.canonicalize(p, &WeylElement::simple_reflection(self, i).compose(w));
                    if seen.insert(v.clone()) {
                        next.push(v);
                    }
                }
            }
            out.append(&mut layer);
            layer = next;
        }
        out.sort_by_key(|w| w.length(self));
        out
    }

    /// `#{α ∈ R⁺ \ R_P : w(α) < 0}`, the codimension of the Schubert
    /// variety of `w W_P`; zero for the identity coset.
    pub fn bruhat_codim(&self, p: &ParabolicChoice, w: &WeylElement) -> usize {
        let w = self.canonicalize(p, w);
        p.unipotent_roots(self)
            .filter(|b| is_negative(&w.apply_root(b)))
            .count()
    }

    /// `Σ_{β ∈ R⁺ \ R_P} (wβ)(x)`, which equals
    /// `codim(w_c w W_P) - codim(w W_P)`.
    pub fn codim_shift(&self, p: &ParabolicChoice, c: &CentralElement, w: &WeylElement) -> i64 {
        let w = self.canonicalize(p, w);
        let total = p
            .unipotent_roots(self)
            .fold(Q::zero(), |acc, b| acc + self.evaluate(&w.apply_root(b), c.coweight()));
        to_integer(total, "codimension shift")
    }

    /// `ω_σ(x)` for each `σ ∈ Σ`.
    fn sigma_values(&self, p: &ParabolicChoice, x: &[Q]) -> Vec<Q> {
        p.sigma()
            .into_iter()
            .map(|s| self.fundamental_weight_at(s, x))
            .collect()
    }

    /// New degree after shifting slot `i` by `c_i` at coset `u_i`:
    /// `z'(ω_σ) = z(ω_σ) + Σ_i ω_σ(u_i^{-1} x_i)`.
    pub fn degree_shift(
        &self,
        p: &ParabolicChoice,
        z: &[i64],
        u: &[WeylElement],
        c: &[CentralElement],
    ) -> Result<DegreeVector> {
        if u.len() != c.len() {
            return Err(Error::InvalidInstance(format!(
                "{} cosets for {} center elements",
                u.len(),
                c.len()
            )));
        }
        if z.len() != p.sigma().len() {
            return Err(Error::InvalidInstance(format!(
                "degree has {} entries, Σ has {}",
                z.len(),
                p.sigma().len()
            )));
        }
        let product = c
            .iter()
            .fold(CentralElement::identity(self), |acc, ci| self.center_compose(&acc, ci));
        if !product.is_identity() {
            return Err(Error::InvalidInstance(
                "center elements do not multiply to the identity".into(),
            ));
        }
        let mut total: Vec<Q> = z.iter().map(|&v| Q::from_integer(v)).collect();
        for (ui, ci) in u.iter().zip(c) {
            let moved = ui.apply_inverse_coweight(ci.coweight());
            for (t, v) in total.iter_mut().zip(self.sigma_values(p, &moved)) {
                *t += v;
            }
        }
        Ok(total.into_iter().map(|t| to_integer(t, "shifted degree")).collect())
    }

    /// `c_1(T_{G/P})` as coefficients on `ω_σ`, `σ ∈ Σ`: the values of
    /// `Σ_{β ∈ R⁺ \ R_P} β` on the simple coroots `H_σ`.
    pub fn first_chern_class(&self, p: &ParabolicChoice) -> Vec<i64> {
        let weight = self.sum_of_unipotent_roots(p);
        p.sigma().into_iter().map(|s| self.pairing(&weight, s)).collect()
    }

    fn sum_of_unipotent_roots(&self, p: &ParabolicChoice) -> Vec<i64> {
        let mut weight = vec![0; self.rank()];
        for b in p.unipotent_roots(self) {
            for (w, c) in weight.iter_mut().zip(b) {
                *w += c;
            }
        }
        weight
    }

    /// Whether `Σ codim(w_i W_P) = c_1 ∩ Z + dim G/P`.
    pub fn dim_condition_check(&self, p: &ParabolicChoice, ws: &[WeylElement], z: &[i64]) -> bool {
        let codims: usize = ws.iter().map(|w| self.bruhat_codim(p, w)).sum();
        let c1: i64 = self.first_chern_class(p).iter().zip(z).map(|(a, b)| a * b).sum();
        codims as i64 == c1 + p.dim(self) as i64
    }

    /// For `c_1 c_2 = 1` with coweights `x_α`, `x_β`: every root satisfies
    /// `(w_{c_1} γ)(x_β) = -γ(x_α)`, hence `γ(x_α) = 0 ⟺ (w_{c_1} γ)(x_β) = 0`,
    /// and the root sets of the two parabolics meet in the common Levi and
    /// together cover `R`.
    pub fn levi_conjugation_check(&self, c1: &CentralElement, c2: &CentralElement) -> bool {
        if !self.center_compose(c1, c2).is_identity() {
            return false;
        }
        let w1 = self.center_to_weyl(c1);
        let (xa, xb) = (c1.coweight(), c2.coweight());
        let mut first = HashSet::new();
        let mut second = HashSet::new();
        let mut common = HashSet::new();
        for gamma in self.roots() {
            let a = self.evaluate(gamma, xa);
            let moved = w1.apply_root(gamma);
            let b = self.evaluate(&moved, xb);
            if b != -a || a.is_zero() != b.is_zero() {
                return false;
            }
            if !a.is_negative() {
                first.insert(moved);
            }
            let d = self.evaluate(gamma, xb);
            if !d.is_negative() {
                second.insert(gamma.clone());
            }
            if d.is_zero() {
                common.insert(gamma.clone());
            }
        }
        let meet: HashSet<_> = first.intersection(&second).cloned().collect();
        first.len() + second.len() - common.len() == self.roots().len() && meet == common
    }

    /// `ω_σ(x - w^{-1} x)` for `σ ∈ Σ`, the power of `q_σ` in `T_c(X_w)`.
    pub fn tc_exponent(&self, p: &ParabolicChoice, c: &CentralElement, w: &WeylElement) -> DegreeVector {
        let x = c.coweight();
        let moved = w.apply_inverse_coweight(x);
        let diff: Coweight = x.iter().zip(&moved).map(|(a, b)| a - b).collect();
        self.sigma_values(p, &diff)
            .into_iter()
            .map(|v| to_integer(v, "T_c exponent"))
            .collect()
    }

    /// `T_c(X_w) = q^{e} X_{w_c w}` as `(e, canonical w_c w)`.
    pub fn apply_tc(&self, p: &ParabolicChoice, c: &CentralElement, w: &WeylElement) -> (DegreeVector, WeylElement) {
        let e = self.tc_exponent(p, c, w);
        let moved = self.canonicalize(p, &self.center_to_weyl(c).compose(w));
        (e, moved)
    }

    pub fn codim_report(&self, p: &ParabolicChoice) -> Vec<CodimEntry> {
        let center: Vec<(CentralElement, WeylElement)> = self
            .center_elements()
            .into_iter()
            .filter(|c| !c.is_identity())
            .map(|c| {
                let w = self.center_to_weyl(&c);
                (c, w)
            })
            .collect();
        self.coset_representatives(p)
            .into_iter()
            .map(|w| {
                let shifts = center
                    .iter()
                    .map(|(c, wc)| {
                        let moved = self.canonicalize(p, &wc.compose(&w));
                        CodimShiftEntry {
                            node: c.node().expect("nontrivial") + 1,
                            formula: self.codim_shift(p, c, &w),
                            direct: self.bruhat_codim(p, &moved) as i64 - self.bruhat_codim(p, &w) as i64,
                            exponent: self.tc_exponent(p, c, &w),
                        }
                    })
                    .collect();
                CodimEntry {
                    reduced_word: w.reduced_word(self).iter().map(|i| i + 1).collect(),
                    codim: self.bruhat_codim(p, &w),
                    shifts,
                }
            })
            .collect()
    }
}

/// One coset in the `roots --report codim` table; nodes are 1-based.
#[derive(Clone, Debug, Serialize)]
pub struct CodimEntry {
    pub reduced_word: Vec<usize>,
    pub codim: usize,
    pub shifts: Vec<CodimShiftEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CodimShiftEntry {
    pub node: usize,
    pub formula: i64,
    pub direct: i64,
    pub exponent: Vec<i64>,
}
