//! Product evaluation shared by the classical and quantum rings.
//!
//! One factor σ_λ is rewritten as a polynomial in special classes through the
//! recursion
//!
//! ```text
//! (-1)^d σ_{a_1,…,a_d} = Σ_j (-1)^j σ_{a_1,…,a_{j-1},a_{j+1}-1,…,a_d-1} ⋆ σ_{a_j+d-j}
//! ```
//!
//! and the (quantum) Pieri rule is folded over the other factor once per
//! special class in each monomial. Every partial product in the recursion has
//! fewer than `r` rows, so the identity holds verbatim in the quantum ring.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::classical::classical_pieri_indices;
use crate::error::{checked_add, checked_mul, Result};
use crate::quantum::quantum_pieri_indices;
use crate::schubert_index::{GrContext, Partition, SchubertIndex};

/// Terms keyed by `(q-degree, index)`.
pub(crate) type Terms = BTreeMap<(u32, SchubertIndex), i64>;

/// A polynomial in special classes: sorted multisets of `a` with coefficients.
pub(crate) type SpecialPolynomial = Vec<(Vec<u32>, i64)>;

pub(crate) struct Engine {
    ctx: GrContext,
    quantum: bool,
    giambelli: Mutex<HashMap<Partition, Arc<SpecialPolynomial>>>,
    pieri: Mutex<HashMap<(u32, SchubertIndex), Arc<Vec<(u32, SchubertIndex)>>>>,
    products: Mutex<HashMap<(SchubertIndex, SchubertIndex), Arc<Terms>>>,
}

impl Engine {
    pub(crate) fn new(ctx: GrContext, quantum: bool) -> Self {
        Engine {
            ctx,
            quantum,
            giambelli: Mutex::default(),
            pieri: Mutex::default(),
            products: Mutex::default(),
        }
    }

    pub(crate) fn ctx(&self) -> GrContext {
        self.ctx
    }

    /// σ_λ as a polynomial in special classes.
    pub(crate) fn giambelli(&self, lambda: &Partition) -> Result<Arc<SpecialPolynomial>> {
        if let Some(hit) = self.giambelli.lock().unwrap().get(lambda) {
            return Ok(hit.clone());
        }
        let expansion = Arc::new(self.expand(lambda)?);
        self.giambelli.lock().unwrap().insert(lambda.clone(), expansion.clone());
        Ok(expansion)
    }

    fn expand(&self, lambda: &Partition) -> Result<SpecialPolynomial> {
        let width = self.ctx.n() - self.ctx.r();
        let d = lambda.len();
        if d == 0 {
            return Ok(vec![(Vec::new(), 1)]);
        }
        if d == 1 {
            return Ok(vec![(vec![lambda.first()], 1)]);
        }
        let a = lambda.parts();
        let mut acc: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        for j in 1..=d {
            let special = a[j - 1] + (d - j) as u32;
            if special > width {
                continue;
            }
            let reduced: Vec<u32> = a[..j - 1]
                .iter()
                .copied()
                .chain(a[j..].iter().map(|&x| x - 1))
                .collect();
            let sign = if (j + d) % 2 == 0 { 1 } else { -1 };
            for (monomial, c) in self.giambelli(&Partition::from_parts_unchecked(reduced))?.iter() {
                let mut m = monomial.clone();
                let at = m.partition_point(|&x| x <= special);
                m.insert(at, special);
                let entry = acc.entry(m).or_insert(0);
                *entry = checked_add(*entry, checked_mul(sign, *c)?)?;
            }
        }
        Ok(acc.into_iter().filter(|(_, c)| *c != 0).collect())
    }

    /// `(degree, K)` terms of σ_a ⋆ σ(I), each with coefficient one.
    pub(crate) fn pieri(&self, a: u32, index: &SchubertIndex) -> Result<Arc<Vec<(u32, SchubertIndex)>>> {
        if let Some(hit) = self.pieri.lock().unwrap().get(&(a, *index)) {
            return Ok(hit.clone());
        }
        let mut terms: Vec<(u32, SchubertIndex)> = classical_pieri_indices(a as i64, index)?
            .into_iter()
            .map(|k| (0, k))
            .collect();
        if self.quantum {
            terms.extend(quantum_pieri_indices(a as i64, index)?.into_iter().map(|l| (1, l)));
        }
        let terms = Arc::new(terms);
        self.pieri.lock().unwrap().insert((a, *index), terms.clone());
        Ok(terms)
    }

    /// Multiplies `terms` by σ_a.
    pub(crate) fn apply_pieri(&self, a: u32, terms: &Terms) -> Result<Terms> {
        let mut out = Terms::new();
        for (&(d, k), &c) in terms {
            for &(e, l) in self.pieri(a, &k)?.iter() {
                let entry = out.entry((d + e, l)).or_insert(0);
                *entry = checked_add(*entry, c)?;
            }
        }
        out.retain(|_, c| *c != 0);
        Ok(out)
    }

    /// σ(I) ⋆ σ(J), expanding the factor chosen by [`expansion_order`].
    pub(crate) fn basis_product(&self, i: &SchubertIndex, j: &SchubertIndex) -> Result<Arc<Terms>> {
        let (expanded, other) = expansion_order(i, j);
        self.basis_product_expanding(expanded, other)
    }

    /// σ(expanded) ⋆ σ(other), always expanding the first factor.
    pub(crate) fn basis_product_expanding(
        &self,
        expanded: &SchubertIndex,
        other: &SchubertIndex,
    ) -> Result<Arc<Terms>> {
        self.ctx.ensure_same(&expanded.ctx())?;
        self.ctx.ensure_same(&other.ctx())?;
        let key = (*expanded, *other);
        if let Some(hit) = self.products.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let mut out = Terms::new();
        for (monomial, coeff) in self.giambelli(&expanded.to_partition())?.iter() {
            let mut partial = Terms::from([((0, *other), 1)]);
            for &a in monomial {
                partial = self.apply_pieri(a, &partial)?;
                if partial.is_empty() {
                    break;
                }
            }
            for (key, c) in partial {
                let entry = out.entry(key).or_insert(0);
                *entry = checked_add(*entry, checked_mul(*coeff, c)?)?;
            }
        }
        out.retain(|_, c| *c != 0);
        let out = Arc::new(out);
        self.products.lock().unwrap().insert(key, out.clone());
        Ok(out)
    }
}

/// Expand the factor with fewer nonzero parts; ties go to the
/// lexicographically smaller partition, then to the first argument.
pub(crate) fn expansion_order<'a>(
    i: &'a SchubertIndex,
    j: &'a SchubertIndex,
) -> (&'a SchubertIndex, &'a SchubertIndex) {
    let (pi, pj) = (i.to_partition(), j.to_partition());
    let key_i = (pi.len(), pi.parts().to_vec());
    let key_j = (pj.len(), pj.parts().to_vec());
    if key_j < key_i {
        (j, i)
    } else {
        (i, j)
    }
}
