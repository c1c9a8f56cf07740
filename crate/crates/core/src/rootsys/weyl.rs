use std::fmt;
use std::hash::{Hash, Hasher};

use num_traits::Zero;

use super::{Coweight, RootSystem, Q};

/// An element of the Weyl group, stored as the matrix `M` whose column `i`
/// is `w(α_i)` in the simple-root basis, together with `M^{-1}`.
#[derive(Clone, Debug)]
pub struct WeylElement {
    rank: usize,
    /// Row-major, `m[k * rank + i]` = coefficient of `α_k` in `w(α_i)`.
    m: Vec<i64>,
    inv: Vec<i64>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.m.hash(state);
    }
}

fn matmul(l: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; l * l];
    for i in 0..l {
        for k in 0..l {
            let x = a[i * l + k];
            if x == 0 {
                continue;
            }
            for j in 0..l {
                out[i * l + j] += x * b[k * l + j];
            }
        }
    }
    out
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut m = vec![0; rank * rank];
        for i in 0..rank {
            m[i * rank + i] = 1;
        }
        WeylElement {
            rank,
            inv: m.clone(),
            m,
        }
    }

    /// `s_i(α_j) = α_j - A[i][j] α_i`.
    pub fn simple_reflection(rs: &RootSystem, i: usize) -> Self {
        let l = rs.rank();
        let mut w = Self::identity(l);
        for j in 0..l {
            w.m[i * l + j] -= rs.cartan()[i][j];
        }
        w.inv = w.m.clone();
        w
    }

    /// `s_β(γ) = γ - γ(H_β) β`.
    pub fn reflection(rs: &RootSystem, beta: &[i64]) -> Self {
        let l = rs.rank();
        let h = rs.coroot(beta);
        let mut w = Self::identity(l);
        for i in 0..l {
            for k in 0..l {
                w.m[k * l + i] -= h[i] * beta[k];
            }
        }
        w.inv = w.m.clone();
        w
    }

    /// `s_{i_1} s_{i_2} ⋯ s_{i_k}`.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Self {
        word.iter().fold(Self::identity(rs.rank()), |w, &i| {
            w.compose(&Self::simple_reflection(rs, i))
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let l = self.rank;
        WeylElement {
            rank: l,
            m: matmul(l, &self.m, &other.m),
            inv: matmul(l, &other.inv, &self.inv),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            rank: self.rank,
            m: self.inv.clone(),
            inv: self.m.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank)
    }

    /// Images of the simple roots, one per column.
    pub fn images(&self) -> Vec<Vec<i64>> {
        let l = self.rank;
        (0..l).map(|i| (0..l).map(|k| self.m[k * l + i]).collect()).collect()
    }

    /// `w(β)` for an integer combination of simple roots.
    pub fn apply_root(&self, beta: &[i64]) -> Vec<i64> {
        let l = self.rank;
        (0..l)
            .map(|k| (0..l).map(|i| self.m[k * l + i] * beta[i]).sum())
            .collect()
    }

    /// `w(x)` on the Cartan subalgebra: `α_j(w x) = (w^{-1} α_j)(x)`.
    pub fn apply_coweight(&self, x: &[Q]) -> Coweight {
        let l = self.rank;
        (0..l)
            .map(|j| (0..l).fold(Q::zero(), |acc, k| acc + x[k] * self.inv[k * l + j]))
            .collect()
    }

    /// `w^{-1}(x)`.
    pub fn apply_inverse_coweight(&self, x: &[Q]) -> Coweight {
        let l = self.rank;
        (0..l)
            .map(|j| (0..l).fold(Q::zero(), |acc, k| acc + x[k] * self.m[k * l + j]))
            .collect()
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, rs: &RootSystem) -> usize {
        rs.positive_roots()
            .iter()
            .filter(|b| is_negative(&self.apply_root(b)))
            .count()
    }

    /// A reduced word, found by stripping left descents.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut word = Vec::new();
        let mut w = self.clone();
        'outer: while !w.is_identity() {
            for i in 0..self.rank {
                // i is a left descent iff w^{-1}(α_i) < 0
                if is_negative(&w.inverse().apply_root(&rs.simple_root(i))) {
                    word.push(i);
                    w = WeylElement::simple_reflection(rs, i).compose(&w);
                    continue 'outer;
                }
            }
            unreachable!("a non-identity element has a left descent");
        }
        word
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, col) in self.images().iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            for (k, c) in col.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{c}")?;
            }
        }
        f.write_str("]")
    }
}

pub(crate) fn is_negative(beta: &[i64]) -> bool {
    beta.iter().any(|&c| c < 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;
    use std::collections::HashSet;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse::<CartanType>().unwrap())
    }

    fn group(rs: &RootSystem) -> HashSet<WeylElement> {
        let mut seen = HashSet::from([WeylElement::identity(rs.rank())]);
        let mut frontier = vec![WeylElement::identity(rs.rank())];
        while let Some(w) = frontier.pop() {
            for i in 0..rs.rank() {
                let next = WeylElement::simple_reflection(rs, i).compose(&w);
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        seen
    }

    #[test]
    fn group_orders() {
        for (t, order) in [("A3", 24), ("B3", 48), ("C3", 48), ("D4", 192), ("G2", 12), ("A1", 2)] {
            assert_eq!(group(&rs(t)).len(), order, "{t}");
        }
    }

    #[test]
    fn elements_permute_roots_and_preserve_the_form() {
        for t in ["A3", "B3", "C3", "G2", "D4"] {
            let r = rs(t);
            for w in group(&r) {
                let images: HashSet<Vec<i64>> = r.roots().iter().map(|b| w.apply_root(b)).collect();
                assert_eq!(images.len(), r.roots().len());
                assert!(images.iter().all(|b| r.is_root(b)));
                for a in r.positive_roots() {
                    for b in r.positive_roots() {
                        assert_eq!(r.inner(a, b), r.inner(&w.apply_root(a), &w.apply_root(b)));
                    }
                }
                assert!(w.compose(&w.inverse()).is_identity());
            }
        }
    }

    #[test]
    fn reduced_words_have_length_many_letters() {
        for t in ["A3", "B3", "G2"] {
            let r = rs(t);
            for w in group(&r) {
                let word = w.reduced_word(&r);
                assert_eq!(word.len(), w.length(&r));
                assert_eq!(WeylElement::from_word(&r, &word), w);
            }
        }
    }

    #[test]
    fn coweight_action_is_compatible_with_roots() {
        // β(x) = (wβ)(wx)
        let r = rs("B3");
        let x: Vec<Q> = vec![Q::new(1, 3), Q::new(-2, 5), Q::new(7, 2)];
        for w in group(&r) {
            let wx = w.apply_coweight(&x);
            assert_eq!(w.apply_inverse_coweight(&wx), x);
            for b in r.roots() {
                assert_eq!(r.evaluate(b, &x), r.evaluate(&w.apply_root(b), &wx));
            }
        }
    }

    #[test]
    fn reflection_in_a_simple_root_is_simple() {
        let r = rs("F4");
        for i in 0..4 {
            assert_eq!(
                WeylElement::reflection(&r, &r.simple_root(i)),
                WeylElement::simple_reflection(&r, i)
            );
        }
        let theta = r.highest_root().to_vec();
        let s = WeylElement::reflection(&r, &theta);
        assert_eq!(s.apply_root(&theta), theta.iter().map(|c| -c).collect::<Vec<_>>());
        assert!(s.compose(&s).is_identity());
    }
}
