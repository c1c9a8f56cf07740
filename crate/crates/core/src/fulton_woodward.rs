//! The minimal power of `q` in `σ(I) ⋆ σ(J)` and its coefficient.
//!
//! With `d_i = #{x ∈ I : x <= i}` and `d'_j` likewise for `J`, the smallest
//! degree is `d = max_{i+j=n} (d_i + d'_j - r)` and the `q^d` part is the
//! classical product `σ(I - i) ∪ σ(J - j)` for any maximizing pair.

use serde::Serialize;

use crate::classical::{ClassicalRing, CohClass};
use crate::error::Result;
use crate::quantum::{QClass, QuantumRing};
use crate::schubert_index::SchubertIndex;

/// Values of `d_i + d'_{n-i} - r` for `i = 0..=n`.
fn pair_degrees(i: &SchubertIndex, j: &SchubertIndex) -> Vec<i64> {
    let n = i.ctx().n();
    let r = i.ctx().r() as i64;
    (0..=n)
        .map(|a| i.count_le(a) as i64 + j.count_le(n - a) as i64 - r)
        .collect()
}

/// All pairs `(i, n - i)` attaining the maximum, with `i` increasing.
pub fn maximizers(i: &SchubertIndex, j: &SchubertIndex) -> Result<Vec<(u32, u32)>> {
    i.ctx().ensure_same(&j.ctx())?;
    let n = i.ctx().n();
    let degrees = pair_degrees(i, j);
    let best = *degrees.iter().max().expect("n >= 1");
    Ok((0..=n)
        .filter(|&a| degrees[a as usize] == best)
        .map(|a| (a, n - a))
        .collect())
}

/// The minimal degree together with the maximizing pair with smallest `i`.
pub fn min_q_degree(i: &SchubertIndex, j: &SchubertIndex) -> Result<(u32, (u32, u32))> {
    i.ctx().ensure_same(&j.ctx())?;
    let degrees = pair_degrees(i, j);
    let best = *degrees.iter().max().expect("n >= 1");
    let a = degrees.iter().position(|&d| d == best).expect("maximum is attained") as u32;
    // the pair (0, n) contributes 0 + r - r
    Ok((best as u32, (a, i.ctx().n() - a)))
}

/// `σ(I - i) ∪ σ(J - j)` for a given pair.
pub fn term_at(ring: &ClassicalRing, i: &SchubertIndex, j: &SchubertIndex, pair: (u32, u32)) -> Result<CohClass> {
    let a = i.shift(pair.0)?.index;
    let b = j.shift(pair.1)?.index;
    ring.basis_cup(&a, &b)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowestTerm {
    pub degree: u32,
    pub maximizer: (u32, u32),
    pub class: CohClass,
}

pub fn lowest_term_with(ring: &ClassicalRing, i: &SchubertIndex, j: &SchubertIndex) -> Result<LowestTerm> {
    let (degree, maximizer) = min_q_degree(i, j)?;
    let class = term_at(ring, i, j, maximizer)?;
    Ok(LowestTerm {
        degree,
        maximizer,
        class,
    })
}

pub fn lowest_term(i: &SchubertIndex, j: &SchubertIndex) -> Result<LowestTerm> {
    lowest_term_with(&ClassicalRing::new(i.ctx()), i, j)
}

/// Outcome of [`verify_fw_with`], one flag per checked statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FwCheck {
    pub degree_matches: bool,
    pub term_matches: bool,
    pub maximizers_agree: bool,
    pub count_bound_holds: bool,
}

impl FwCheck {
    pub fn ok(&self) -> bool {
        self.degree_matches && self.term_matches && self.maximizers_agree && self.count_bound_holds
    }
}

/// `c_k + c'_{n-k} <= r` for the shifted pair, all `k`.
fn count_bound(i: &SchubertIndex, j: &SchubertIndex) -> bool {
    let n = i.ctx().n();
    (0..=n).all(|k| i.count_le(k) + j.count_le(n - k) <= i.ctx().r())
}

pub fn verify_fw_with(
    quantum: &QuantumRing,
    classical: &ClassicalRing,
    i: &SchubertIndex,
    j: &SchubertIndex,
) -> Result<FwCheck> {
    let product: QClass = quantum.basis_product(i, j)?;
    let low = lowest_term_with(classical, i, j)?;
    let degree_matches = product.min_degree() == Some(low.degree);
    let term_matches = product.degree_part(low.degree) == low.class;
    let mut maximizers_agree = true;
    let mut count_bound_holds = true;
    for pair in maximizers(i, j)? {
        maximizers_agree &= term_at(classical, i, j, pair)? == low.class;
        count_bound_holds &= count_bound(&i.shift(pair.0)?.index, &j.shift(pair.1)?.index);
    }
    Ok(FwCheck {
        degree_matches,
        term_matches,
        maximizers_agree,
        count_bound_holds,
    })
}

pub fn verify_fw(i: &SchubertIndex, j: &SchubertIndex) -> Result<bool> {
    let ctx = i.ctx();
    Ok(verify_fw_with(&QuantumRing::new(ctx), &ClassicalRing::new(ctx), i, j)?.ok())
}
