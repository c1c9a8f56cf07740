//! `Gr(r, n)` as `SL(n)/P` with `P` the maximal parabolic at node `r` of
//! `A_{n-1}`.
//!
//! Simple roots are `α_j = L_j - L_{j+1}` and `w(L_i) = L_{p(i)}`. The coset
//! `w W_P` corresponds to `I = {n+1-p(j) : j <= r}`, so the identity coset is
//! the fundamental class. The generator `Θ` of the center sits at node `n-1`,
//! and `Θ^k` at node `n-k`; `w_{Θ^k}` adds `k` to `L`-labels, which on
//! Schubert labels is `I ↦ I - k`.

use super::center::CentralElement;
use super::parabolic::{DegreeVector, ParabolicChoice};
use super::weyl::WeylElement;
use super::{CartanType, Family, RootSystem};
use crate::error::{Error, Result};
use crate::schubert_index::{GrContext, SchubertIndex};

pub struct GrassmannBridge {
    ctx: GrContext,
    rs: RootSystem,
    parabolic: ParabolicChoice,
}

/// The root `L_a - L_b` (1-based labels, `a != b`) in the simple-root basis.
fn difference_root(l: usize, a: usize, b: usize) -> Vec<i64> {
    let mut v = vec![0; l];
    let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
    for t in lo..hi {
        v[t - 1] = sign;
    }
    v
}

/// Inverse of [`difference_root`].
fn decode_root(beta: &[i64]) -> (usize, usize) {
    let first = beta.iter().position(|&c| c != 0).expect("nonzero root");
    let last = beta.iter().rposition(|&c| c != 0).expect("nonzero root");
    let (s, e) = (first + 1, last + 2);
    if beta[first] > 0 {
        (s, e)
    } else {
        (e, s)
    }
}

impl GrassmannBridge {
    pub fn new(ctx: GrContext) -> Self {
        let rs = RootSystem::build(CartanType::new(Family::A, ctx.n() as usize - 1).expect("n >= 2"));
        let parabolic = ParabolicChoice::maximal(&rs, ctx.r() as usize - 1).expect("0 < r < n");
        GrassmannBridge { ctx, rs, parabolic }
    }

    pub fn ctx(&self) -> GrContext {
        self.ctx
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn parabolic(&self) -> &ParabolicChoice {
        &self.parabolic
    }

    /// `Θ^k`; `k` is taken modulo `n`.
    pub fn center(&self, k: u32) -> CentralElement {
        let n = self.ctx.n();
        match k % n {
            0 => CentralElement::identity(&self.rs),
            k => CentralElement::at_node(&self.rs, (n - k - 1) as usize).expect("type A marks are 1"),
        }
    }

    /// The Weyl element with `w(L_i) = L_{p(i)}` for a permutation of `1..=n`.
    pub fn from_permutation(&self, p: &[usize]) -> WeylElement {
        let n = self.ctx.n() as usize;
        let images: Vec<Vec<i64>> = (0..n - 1).map(|i| difference_root(n - 1, p[i], p[i + 1])).collect();
        let word = permutation_word(p);
        let w = WeylElement::from_word(&self.rs, &word);
        debug_assert_eq!(w.images(), images);
        w
    }

    /// `p` with `w(L_i) = L_{p(i)}`.
    pub fn permutation(&self, w: &WeylElement) -> Vec<usize> {
        let n = self.ctx.n() as usize;
        let l = n - 1;
        let images = w.images();
        let mut p = vec![0; n];
        for i in 0..l {
            // L_i - L_n = α_i + … + α_{n-1}
            let mut beta = vec![0; l];
            for col in &images[i..] {
                for (b, c) in beta.iter_mut().zip(col) {
                    *b += c;
                }
            }
            let (a, b) = decode_root(&beta);
            p[i] = a;
            p[l] = b;
        }
        p
    }

    /// The permutation in Schubert labels `ε_i = L_{n+1-i}`:
    /// `π(i) = n + 1 - p(n + 1 - i)`.
    pub fn schubert_permutation(&self, w: &WeylElement) -> Vec<usize> {
        let n = self.ctx.n() as usize;
        let p = self.permutation(w);
        (1..=n).map(|i| n + 1 - p[n - i]).collect()
    }

    /// The minimal coset representative for `σ(I)`.
    pub fn coset(&self, index: &SchubertIndex) -> Result<WeylElement> {
        self.ctx.ensure_same(&index.ctx())?;
        let n = self.ctx.n() as usize;
        let mut head: Vec<usize> = index.elements().map(|x| n + 1 - x as usize).collect();
        head.sort_unstable();
        let mut p = head.clone();
        p.extend((1..=n).filter(|v| !head.contains(v)));
        Ok(self.from_permutation(&p))
    }

    pub fn index_of(&self, w: &WeylElement) -> SchubertIndex {
        let n = self.ctx.n() as usize;
        let p = self.permutation(w);
        let mut elements: Vec<u32> = p[..self.ctx.r() as usize].iter().map(|&v| (n + 1 - v) as u32).collect();
        elements.sort_unstable();
        SchubertIndex::new(self.ctx, &elements).expect("r distinct labels")
    }

    pub fn bruhat_codim(&self, index: &SchubertIndex) -> Result<usize> {
        Ok(self.rs.bruhat_codim(&self.parabolic, &self.coset(index)?))
    }

    /// The coset of `w_{Θ^k} u_I`.
    pub fn shifted_index(&self, k: u32, index: &SchubertIndex) -> Result<SchubertIndex> {
        let w = self.rs.center_to_weyl(&self.center(k)).compose(&self.coset(index)?);
        Ok(self.index_of(&self.rs.canonicalize(&self.parabolic, &w)))
    }

    pub fn tc_exponent(&self, k: u32, index: &SchubertIndex) -> Result<i64> {
        Ok(self
            .rs
            .tc_exponent(&self.parabolic, &self.center(k), &self.coset(index)?)[0])
    }

    /// Degree after shifting slot `i` by `Θ^{k_i}`.
    pub fn degree_shift(&self, indices: &[SchubertIndex], shifts: &[u32], degree: i64) -> Result<i64> {
        if indices.len() != shifts.len() {
            return Err(Error::InvalidShiftVector(format!(
                "{} shifts for {} classes",
                shifts.len(),
                indices.len()
            )));
        }
        let u = indices.iter().map(|i| self.coset(i)).collect::<Result<Vec<_>>>()?;
        let c: Vec<CentralElement> = shifts.iter().map(|&k| self.center(k)).collect();
        let z: DegreeVector = self.rs.degree_shift(&self.parabolic, &[degree], &u, &c)?;
        Ok(z[0])
    }

    pub fn dim_condition(&self, indices: &[SchubertIndex], degree: i64) -> Result<bool> {
        let ws = indices.iter().map(|i| self.coset(i)).collect::<Result<Vec<_>>>()?;
        Ok(self.rs.dim_condition_check(&self.parabolic, &ws, &[degree]))
    }
}

/// A word for the permutation `p` (as `w(L_i) = L_{p(i)}`) by bubble sort.
fn permutation_word(p: &[usize]) -> Vec<usize> {
    let mut q = p.to_vec();
    let mut word = Vec::new();
    loop {
        let Some(i) = (0..q.len() - 1).find(|&i| q[i] > q[i + 1]) else {
            break;
        };
        // right multiplication by s_i swaps positions i and i+1
        q.swap(i, i + 1);
        word.push(i);
    }
    word.reverse();
    word
}
