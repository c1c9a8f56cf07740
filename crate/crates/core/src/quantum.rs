//! The small quantum cohomology ring `QH(Gr(r, n))`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classical::{classical_pieri_indices, write_signed_term, CohClass};
use crate::engine::{Engine, Terms};
use crate::error::{checked_add, checked_mul, Error, Result};
use crate::schubert_index::{GrContext, Partition, SchubertIndex};

/// A combination of `q^d σ(I)` terms with integer coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct QClass {
    ctx: GrContext,
    terms: BTreeMap<(u32, SchubertIndex), i64>,
}

impl QClass {
    pub fn zero(ctx: GrContext) -> Self {
        QClass {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(index: SchubertIndex) -> Self {
        Self::monomial(0, index)
    }

    /// `q^d σ(I)`.
    pub fn monomial(d: u32, index: SchubertIndex) -> Self {
        let mut c = Self::zero(index.ctx());
        c.terms.insert((d, index), 1);
        c
    }

    pub fn one(ctx: GrContext) -> Self {
        Self::basis(ctx.fundamental())
    }

    pub fn from_classical(class: &CohClass) -> Self {
        let mut out = Self::zero(class.ctx());
        for (i, c) in class.terms() {
            out.terms.insert((0, i), c);
        }
        out
    }

    pub(crate) fn from_terms(ctx: GrContext, terms: &Terms) -> Self {
        let mut out = Self::zero(ctx);
        out.terms
            .extend(terms.iter().filter(|(_, c)| **c != 0).map(|(k, c)| (*k, *c)));
        out
    }

    pub fn ctx(&self) -> GrContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: u32, index: &SchubertIndex) -> i64 {
        self.terms.get(&(d, *index)).copied().unwrap_or(0)
    }

    /// Terms sorted by `(d, index)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, SchubertIndex, i64)> + '_ {
        self.terms.iter().map(|(&(d, i), &c)| (d, i, c))
    }

    pub fn add_term(&mut self, d: u32, index: SchubertIndex, coeff: i64) -> Result<()> {
        self.ctx.ensure_same(&index.ctx())?;
        if coeff == 0 {
            return Ok(());
        }
        let entry = self.terms.entry((d, index)).or_insert(0);
        *entry = checked_add(*entry, coeff)?;
        if *entry == 0 {
            self.terms.remove(&(d, index));
        }
        Ok(())
    }

    pub fn add(&self, other: &QClass) -> Result<QClass> {
        self.ctx.ensure_same(&other.ctx)?;
        let mut out = self.clone();
        for (d, i, c) in other.terms() {
            out.add_term(d, i, c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: i64) -> Result<QClass> {
        let mut out = Self::zero(self.ctx);
        for (d, i, c) in self.terms() {
            out.add_term(d, i, checked_mul(c, factor)?)?;
        }
        Ok(out)
    }

    /// Multiplies by `q^k`.
    pub fn shift_degree(&self, k: u32) -> QClass {
        let mut out = Self::zero(self.ctx);
        out.terms.extend(self.terms().map(|(d, i, c)| ((d + k, i), c)));
        out
    }

    /// Smallest q-degree carrying a nonzero term.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(d, _)| d).min()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(d, _)| d).max()
    }

    /// The coefficient of `q^d` as a classical class.
    pub fn degree_part(&self, d: u32) -> CohClass {
        let mut out = CohClass::zero(self.ctx);
        for (e, i, c) in self.terms() {
            if e == d {
                out.add_term(i, c).expect("coefficients already fit");
            }
        }
        out
    }

    /// Sets `q = 0`.
    pub fn classical_part(&self) -> CohClass {
        self.degree_part(0)
    }
}

fn superscript(d: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    d.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

/// `q·`, `q²·`, … for a positive degree; empty for degree zero.
pub fn q_prefix(d: u32) -> String {
    match d {
        0 => String::new(),
        1 => "q·".to_string(),
        _ => format!("q{}·", superscript(d)),
    }
}

impl fmt::Display for QClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (d, i, c)) in self.terms().enumerate() {
            let body = format!("{}{}", q_prefix(d), i.to_partition());
            write_signed_term(f, k == 0, c, &body)?;
        }
        Ok(())
    }
}

impl fmt::Debug for QClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QClass[{}]({self})", self.ctx)
    }
}

#[derive(Serialize, Deserialize)]
struct QTermRepr {
    q: u32,
    index: Vec<u32>,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct QClassRepr {
    n: u32,
    r: u32,
    terms: Vec<QTermRepr>,
}

impl Serialize for QClass {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        QClassRepr {
            n: self.ctx.n(),
            r: self.ctx.r(),
            terms: self
                .terms()
                .map(|(q, i, coeff)| QTermRepr {
                    q,
                    index: i.to_vec(),
                    coeff,
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QClass {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = QClassRepr::deserialize(deserializer)?;
        let ctx = GrContext::new(repr.n, repr.r).map_err(D::Error::custom)?;
        let mut class = QClass::zero(ctx);
        for t in repr.terms {
            let index = SchubertIndex::new(ctx, &t.index).map_err(D::Error::custom)?;
            class.add_term(t.q, index, t.coeff).map_err(D::Error::custom)?;
        }
        Ok(class)
    }
}

/// Data of an `s`-point invariant `<σ(I_1), …, σ(I_s)>_d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GWInstance {
    ctx: GrContext,
    indices: Vec<SchubertIndex>,
    degree: u32,
}

impl GWInstance {
    pub fn new(indices: Vec<SchubertIndex>, degree: u32) -> Result<Self> {
        if indices.len() < 3 {
            return Err(Error::InvalidInstance(format!(
                "need at least 3 classes, got {}",
                indices.len()
            )));
        }
        let ctx = indices[0].ctx();
        for i in &indices {
            ctx.ensure_same(&i.ctx())?;
        }
        Ok(GWInstance { ctx, indices, degree })
    }

    pub fn ctx(&self) -> GrContext {
        self.ctx
    }

    pub fn indices(&self) -> &[SchubertIndex] {
        &self.indices
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn arity(&self) -> usize {
        self.indices.len()
    }

    pub fn total_codim(&self) -> u32 {
        self.indices.iter().map(|i| i.codim()).sum()
    }

    /// `Σ codim σ(I_i) = n·d + r(n-r)`.
    pub fn dimension_check(&self) -> bool {
        self.total_codim() as u64 == self.ctx.n() as u64 * self.degree as u64 + self.ctx.dim() as u64
    }
}

impl fmt::Display for GWInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{{")?;
            for (m, e) in i.elements().enumerate() {
                if m > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, ">_{} on {}", self.degree, self.ctx)
    }
}

/// Indices `L` of the q-linear part of the quantum Pieri rule:
/// `a(I,1)-1 ≥ a(L,1) ≥ a(I,2)-1 ≥ … ≥ a(I,r)-1 ≥ a(L,r) ≥ 0` and
/// `codim(I) + a = codim(L) + n`.
pub fn quantum_pieri_indices(a: i64, index: &SchubertIndex) -> Result<Vec<SchubertIndex>> {
    let ctx = index.ctx();
    let width = ctx.n() - ctx.r();
    if a < 0 || a > width as i64 {
        return Err(Error::SpecialOutOfRange { a, max: width });
    }
    let lambda: Vec<i64> = index
        .to_partition()
        .padded(ctx.r() as usize)
        .into_iter()
        .map(i64::from)
        .collect();
    let target = lambda.iter().sum::<i64>() + a - ctx.n() as i64;
    if *lambda.last().unwrap() == 0 || target < 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut nu = Vec::with_capacity(lambda.len());
    interlace_below(&lambda, target, &mut nu, &mut out);
    Ok(out
        .into_iter()
        .filter_map(|parts| {
            let parts = parts.into_iter().map(|x| x as u32).collect();
            SchubertIndex::from_partition(ctx, &Partition::from_parts_unchecked(parts))
        })
        .collect())
}

fn interlace_below(lambda: &[i64], target: i64, nu: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    let k = nu.len();
    let used: i64 = nu.iter().sum();
    if k == lambda.len() {
        if used == target {
            out.push(nu.clone());
        }
        return;
    }
    let hi = lambda[k] - 1;
    let lo = if k + 1 < lambda.len() {
        (lambda[k + 1] - 1).max(0)
    } else {
        0
    };
    for part in lo..=hi {
        if used + part > target {
            break;
        }
        nu.push(part);
        interlace_below(lambda, target, nu, out);
        nu.pop();
    }
}

/// σ_a ⋆ σ(I) by the quantum Pieri rule.
pub fn qpieri(a: i64, index: &SchubertIndex) -> Result<QClass> {
    let mut out = QClass::zero(index.ctx());
    for k in classical_pieri_indices(a, index)? {
        out.add_term(0, k, 1)?;
    }
    for l in quantum_pieri_indices(a, index)? {
        out.add_term(1, l, 1)?;
    }
    Ok(out)
}

/// Quantum products on one Grassmannian, with memoized Giambelli expansions,
/// Pieri terms and basis products. Safe to share between threads.
pub struct QuantumRing {
    engine: Engine,
}

impl QuantumRing {
    pub fn new(ctx: GrContext) -> Self {
        QuantumRing {
            engine: Engine::new(ctx, true),
        }
    }

    pub fn ctx(&self) -> GrContext {
        self.engine.ctx()
    }

    /// σ(I) ⋆ σ(J).
    pub fn basis_product(&self, i: &SchubertIndex, j: &SchubertIndex) -> Result<QClass> {
        Ok(QClass::from_terms(self.ctx(), &*self.engine.basis_product(i, j)?))
    }

    /// σ(I) ⋆ σ(J) computed by expanding `I` regardless of the default order.
    pub fn basis_product_expanding(&self, expanded: &SchubertIndex, other: &SchubertIndex) -> Result<QClass> {
        Ok(QClass::from_terms(
            self.ctx(),
            &*self.engine.basis_product_expanding(expanded, other)?,
        ))
    }

    pub fn qmul(&self, x: &QClass, y: &QClass) -> Result<QClass> {
        self.ctx().ensure_same(&x.ctx())?;
        self.ctx().ensure_same(&y.ctx())?;
        let mut out = QClass::zero(self.ctx());
        for (dx, i, cx) in x.terms() {
            for (dy, j, cy) in y.terms() {
                let coeff = checked_mul(cx, cy)?;
                for (&(d, k), &c) in self.engine.basis_product(&i, &j)?.iter() {
                    out.add_term(dx + dy + d, k, checked_mul(coeff, c)?)?;
                }
            }
        }
        Ok(out)
    }

    /// σ_a ⋆ x.
    pub fn pieri_mul(&self, a: i64, x: &QClass) -> Result<QClass> {
        let width = self.ctx().n() - self.ctx().r();
        if a < 0 || a > width as i64 {
            return Err(Error::SpecialOutOfRange { a, max: width });
        }
        self.ctx().ensure_same(&x.ctx())?;
        let terms: Terms = x.terms().map(|(d, i, c)| ((d, i), c)).collect();
        Ok(QClass::from_terms(
            self.ctx(),
            &self.engine.apply_pieri(a as u32, &terms)?,
        ))
    }

    /// The 3-point invariant `<σ(I), σ(J), σ(K)>_d`, read off as the
    /// coefficient of `q^d σ(dual K)` in σ(I) ⋆ σ(J).
    pub fn gw3(&self, i: &SchubertIndex, j: &SchubertIndex, k: &SchubertIndex, d: u32) -> Result<i64> {
        let inst = GWInstance::new(vec![*i, *j, *k], d)?;
        if !inst.dimension_check() {
            return Ok(0);
        }
        Ok(self.basis_product(i, j)?.coeff(d, &k.dual()))
    }
}

/// One-shot quantum product.
pub fn qmul(x: &QClass, y: &QClass) -> Result<QClass> {
    x.ctx().ensure_same(&y.ctx())?;
    QuantumRing::new(x.ctx()).qmul(x, y)
}

/// One-shot 3-point invariant.
pub fn gw3(i: &SchubertIndex, j: &SchubertIndex, k: &SchubertIndex, d: u32) -> Result<i64> {
    QuantumRing::new(i.ctx()).gw3(i, j, k, d)
}
