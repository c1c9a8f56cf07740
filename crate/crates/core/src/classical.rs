//! Classical cohomology of `Gr(r, n)`.
//!
//! Cup products are evaluated by expanding one factor through the Giambelli
//! determinant into special classes and folding the Pieri rule over the other
//! factor. The Littlewood–Richardson tableau counter in [`lr`] is an
//! independent oracle and is not used by any product path.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::engine::Engine;
use crate::error::{checked_add, checked_mul, Error, Result};
use crate::schubert_index::{GrContext, Partition, SchubertIndex};

/// An integer combination of Schubert classes.
#[derive(Clone, PartialEq, Eq)]
pub struct CohClass {
    ctx: GrContext,
    terms: BTreeMap<SchubertIndex, i64>,
}

impl CohClass {
    pub fn zero(ctx: GrContext) -> Self {
        CohClass {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(index: SchubertIndex) -> Self {
        let mut c = Self::zero(index.ctx());
        c.terms.insert(index, 1);
        c
    }

    /// The unit, σ of the fundamental class.
    pub fn one(ctx: GrContext) -> Self {
        Self::basis(ctx.fundamental())
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

    pub fn coeff(&self, index: &SchubertIndex) -> i64 {
        self.terms.get(index).copied().unwrap_or(0)
    }

    /// Nonzero terms in lexicographic index order.
    pub fn terms(&self) -> impl Iterator<Item = (SchubertIndex, i64)> + '_ {
        self.terms.iter().map(|(i, c)| (*i, *c))
    }

    pub fn add_term(&mut self, index: SchubertIndex, coeff: i64) -> Result<()> {
        self.ctx.ensure_same(&index.ctx())?;
        if coeff == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(index).or_insert(0);
        *entry = checked_add(*entry, coeff)?;
        if *entry == 0 {
            self.terms.remove(&index);
        }
        Ok(())
    }

    pub fn add(&self, other: &CohClass) -> Result<CohClass> {
        self.ctx.ensure_same(&other.ctx)?;
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: i64) -> Result<CohClass> {
        let mut out = Self::zero(self.ctx);
        for (i, c) in self.terms() {
            out.add_term(i, checked_mul(c, factor)?)?;
        }
        Ok(out)
    }

    /// Coefficient of the point class `{1, …, r}`.
    pub fn integral(&self) -> i64 {
        self.coeff(&self.ctx.point())
    }
}

/// Writes `c·x` into a sum, handling the sign and unit coefficient.
pub(crate) fn write_signed_term(f: &mut fmt::Formatter<'_>, first: bool, coeff: i64, body: &str) -> fmt::Result {
    let magnitude = coeff.unsigned_abs();
    match (first, coeff < 0) {
        (true, false) => {}
        (true, true) => f.write_str("-")?,
        (false, false) => f.write_str(" + ")?,
        (false, true) => f.write_str(" - ")?,
    }
    if magnitude != 1 {
        write!(f, "{magnitude}·")?;
    }
    f.write_str(body)
}

impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (i, c)) in self.terms().enumerate() {
            write_signed_term(f, k == 0, c, &i.to_partition().to_string())?;
        }
        Ok(())
    }
}

impl fmt::Debug for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CohClass[{}]({self})", self.ctx)
    }
}

#[derive(Serialize, Deserialize)]
struct CohTermRepr {
    index: Vec<u32>,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct CohClassRepr {
    n: u32,
    r: u32,
    terms: Vec<CohTermRepr>,
}

impl Serialize for CohClass {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CohClassRepr {
            n: self.ctx.n(),
            r: self.ctx.r(),
            terms: self
                .terms()
                .map(|(i, c)| CohTermRepr {
                    index: i.to_vec(),
                    coeff: c,
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CohClass {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = CohClassRepr::deserialize(deserializer)?;
        let ctx = GrContext::new(repr.n, repr.r).map_err(D::Error::custom)?;
        let mut class = CohClass::zero(ctx);
        for t in repr.terms {
            let index = SchubertIndex::new(ctx, &t.index).map_err(D::Error::custom)?;
            class.add_term(index, t.coeff).map_err(D::Error::custom)?;
        }
        Ok(class)
    }
}

/// Indices `K` of the classical Pieri rule σ_a ∪ σ(I) = Σ σ(K): the partition
/// of `K` interlaces that of `I` from above and is `a` boxes larger.
pub fn classical_pieri_indices(a: i64, index: &SchubertIndex) -> Result<Vec<SchubertIndex>> {
    let ctx = index.ctx();
    let width = ctx.n() - ctx.r();
    if a < 0 || a > width as i64 {
        return Err(Error::SpecialOutOfRange { a, max: width });
    }
    let lambda = index.to_partition().padded(ctx.r() as usize);
    let target = lambda.iter().sum::<u32>() + a as u32;
    let mut out = Vec::new();
    let mut mu = Vec::with_capacity(lambda.len());
    interlace_above(&lambda, width, target, &mut mu, &mut out);
    Ok(out
        .into_iter()
        .filter_map(|parts| SchubertIndex::from_partition(ctx, &Partition::from_parts_unchecked(parts)))
        .collect())
}

fn interlace_above(lambda: &[u32], width: u32, target: u32, mu: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let k = mu.len();
    let used: u32 = mu.iter().sum();
    if k == lambda.len() {
        if used == target {
            out.push(mu.clone());
        }
        return;
    }
    let lo = lambda[k];
    let hi = if k == 0 { width } else { lambda[k - 1] };
    // Every later part is at most its upper bound, so prune on the optimistic total.
    let later_max: u32 = lambda[k..lambda.len() - 1].iter().sum();
    for part in lo..=hi {
        if used + part > target {
            break;
        }
        if used + part + later_max < target {
            continue;
        }
        mu.push(part);
        interlace_above(lambda, width, target, mu, out);
        mu.pop();
    }
}

/// σ_a ∪ σ(I) by the Pieri rule.
pub fn classical_pieri(a: i64, index: &SchubertIndex) -> Result<CohClass> {
    let mut out = CohClass::zero(index.ctx());
    for k in classical_pieri_indices(a, index)? {
        out.add_term(k, 1)?;
    }
    Ok(out)
}

/// Cup products on `H*(Gr(r, n))` with memoized Giambelli expansions and
/// basis products. Safe to share between threads.
pub struct ClassicalRing {
    engine: Engine,
}

impl ClassicalRing {
    pub fn new(ctx: GrContext) -> Self {
        ClassicalRing {
            engine: Engine::new(ctx, false),
        }
    }

    pub fn ctx(&self) -> GrContext {
        self.engine.ctx()
    }

    pub fn basis_cup(&self, i: &SchubertIndex, j: &SchubertIndex) -> Result<CohClass> {
        let terms = self.engine.basis_product(i, j)?;
        let mut out = CohClass::zero(self.ctx());
        for (&(_, k), &c) in terms.iter() {
            out.add_term(k, c)?;
        }
        Ok(out)
    }

    pub fn cup(&self, x: &CohClass, y: &CohClass) -> Result<CohClass> {
        self.ctx().ensure_same(&x.ctx())?;
        self.ctx().ensure_same(&y.ctx())?;
        let mut out = CohClass::zero(self.ctx());
        for (i, ci) in x.terms() {
            for (j, cj) in y.terms() {
                let coeff = checked_mul(ci, cj)?;
                for (k, ck) in self.basis_cup(&i, &j)?.terms() {
                    out.add_term(k, checked_mul(coeff, ck)?)?;
                }
            }
        }
        Ok(out)
    }

    /// Product of several classes; the empty product is the unit.
    pub fn cup_all<'a>(&self, factors: impl IntoIterator<Item = &'a CohClass>) -> Result<CohClass> {
        let mut acc = CohClass::one(self.ctx());
        for f in factors {
            acc = self.cup(&acc, f)?;
        }
        Ok(acc)
    }
}

/// One-shot cup product.
pub fn cup(x: &CohClass, y: &CohClass) -> Result<CohClass> {
    x.ctx().ensure_same(&y.ctx())?;
    ClassicalRing::new(x.ctx()).cup(x, y)
}

pub mod lr {
    //! Littlewood–Richardson coefficients by direct tableau enumeration.

    use crate::schubert_index::Partition;

    /// `c^ν_{λμ}`: the number of semistandard skew tableaux of shape `ν/λ`
    /// and content `μ` whose reverse reading word is a lattice word.
    pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
        if !nu.contains(lambda) || nu.size() != lambda.size() + mu.size() {
            return 0;
        }
        // Cells in reading order: rows top to bottom, each row right to left.
        let mut cells = Vec::new();
        for row in 0..nu.len() {
            for col in (lambda.part(row)..nu.part(row)).rev() {
                cells.push((row, col as usize));
            }
        }
        let mut search = Search {
            lambda,
            mu,
            nu,
            grid: vec![vec![0; nu.first() as usize]; nu.len()],
            used: vec![0; mu.len() + 1],
            count: 0,
        };
        search.fill(&cells);
        search.count
    }

    struct Search<'a> {
        lambda: &'a Partition,
        mu: &'a Partition,
        nu: &'a Partition,
        grid: Vec<Vec<u32>>,
        used: Vec<u32>,
        count: u64,
    }

    impl Search<'_> {
        fn fill(&mut self, cells: &[(usize, usize)]) {
            let Some((&(row, col), rest)) = cells.split_first() else {
                self.count += 1;
                return;
            };
            for v in 1..=self.mu.len() {
                if self.used[v] == self.mu.part(v - 1) {
                    continue;
                }
                // lattice word: never more v's than (v-1)'s
                if v > 1 && self.used[v] + 1 > self.used[v - 1] {
                    continue;
                }
                let value = v as u32;
                // rows weakly increase; the right neighbour is already filled
                if col + 1 < self.nu.part(row) as usize && self.grid[row][col + 1] < value {
                    continue;
                }
                // columns strictly increase
                if row > 0 && col >= self.lambda.part(row - 1) as usize && self.grid[row - 1][col] >= value {
                    continue;
                }
                self.grid[row][col] = value;
                self.used[v] += 1;
                self.fill(rest);
                self.used[v] -= 1;
                self.grid[row][col] = 0;
            }
        }
    }
}
