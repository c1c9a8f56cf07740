//! Center elements, indexed by the minuscule coweights `x_α` (`n_α = 1`), and
//! their images `w_c` in the Weyl group.

use num_traits::{One, Zero};
use serde::Serialize;

use super::weyl::{is_negative, WeylElement};
use super::{Coweight, RootSystem, Q};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CentralElement {
    node: Option<usize>,
    coweight: Coweight,
}

impl CentralElement {
    pub fn identity(rs: &RootSystem) -> Self {
        CentralElement {
            node: None,
            coweight: vec![Q::zero(); rs.rank()],
        }
    }

    pub fn at_node(rs: &RootSystem, node: usize) -> Result<Self> {
        if node >= rs.rank() || rs.marks()[node] != 1 {
            return Err(Error::InvalidRootSystem(format!(
                "node {} of {} does not have mark 1",
                node + 1,
                rs.cartan_type()
            )));
        }
        Ok(CentralElement {
            node: Some(node),
            coweight: rs.fundamental_coweight(node),
        })
    }

    /// `None` for the identity.
    pub fn node(&self) -> Option<usize> {
        self.node
    }

    pub fn coweight(&self) -> &[Q] {
        &self.coweight
    }

    pub fn is_identity(&self) -> bool {
        self.node.is_none()
    }
}

impl RootSystem {
    /// The identity followed by one element per node with mark 1.
    pub fn center_elements(&self) -> Vec<CentralElement> {
        let mut out = vec![CentralElement::identity(self)];
        out.extend(
            (0..self.rank())
                .filter(|&i| self.marks()[i] == 1)
                .map(|i| CentralElement::at_node(self, i).expect("mark 1")),
        );
        out
    }

    /// Walks `p - x` into the fundamental alcove, where `p = ρ̌/(2h)`.
    pub fn alcove_walk(&self, c: &CentralElement) -> AlcoveWalk {
        let l = self.rank();
        let theta = self.highest_root().to_vec();
        let h_theta: Vec<Q> = self.coroot(&theta).into_iter().map(Q::from_integer).collect();
        let s_theta = WeylElement::reflection(self, &theta);
        let start = Q::new(1, 2 * self.coxeter_number());
        let mut y: Coweight = c.coweight().iter().map(|x| start - x).collect();
        let mut linear = WeylElement::identity(l);
        let mut translation: Coweight = vec![Q::zero(); l];
        let mut steps = Vec::new();
        loop {
            if let Some(j) = (0..l).find(|&j| y[j] < Q::zero()) {
                let s = WeylElement::simple_reflection(self, j);
                y = s.apply_coweight(&y);
                translation = s.apply_coweight(&translation);
                linear = s.compose(&linear);
                steps.push(j + 1);
            } else if self.evaluate(&theta, &y) > Q::one() {
                // affine reflection in θ = 1: x ↦ s_θ(x) + H_θ
                let shift = |v: &Coweight| -> Coweight {
                    s_theta
                        .apply_coweight(v)
                        .iter()
                        .zip(&h_theta)
                        .map(|(a, b)| a + b)
                        .collect()
                };
                y = shift(&y);
                translation = shift(&translation);
                linear = s_theta.compose(&linear);
                steps.push(0);
            } else {
                break;
            }
        }
        AlcoveWalk {
            linear_part: linear,
            translation,
            endpoint: y,
            steps,
        }
    }

    /// `w_c`, characterized by `C - x = w_c^{-1}(C)` for the fundamental
    /// alcove `C`.
    pub fn center_to_weyl(&self, c: &CentralElement) -> WeylElement {
        let walk = self.alcove_walk(c);
        assert!(
            walk.translation.iter().all(|t| t.is_zero()),
            "alcove walk for {:?} ended with nonzero translation",
            c.node()
        );
        walk.linear_part
    }

    /// Positive roots `β` with `β(x) = 0` stay positive under `w_c`, and
    /// those with `β(x) = 1` become negative.
    pub fn sign_check(&self, c: &CentralElement) -> bool {
        let w = self.center_to_weyl(c);
        self.positive_roots().iter().all(|beta| {
            let v = self.evaluate(beta, c.coweight());
            let flips = is_negative(&w.apply_root(beta));
            if v.is_zero() {
                !flips
            } else if v.is_one() {
                flips
            } else {
                false
            }
        })
    }

    /// The element `c_3` with `x_1 + x_2 - x_3` in the coroot lattice.
    pub fn center_compose(&self, c1: &CentralElement, c2: &CentralElement) -> CentralElement {
        let sum: Coweight = c1.coweight().iter().zip(c2.coweight()).map(|(a, b)| a + b).collect();
        let mut found = self.center_elements().into_iter().filter(|c3| {
            let diff: Coweight = sum.iter().zip(c3.coweight()).map(|(a, b)| a - b).collect();
            self.in_coroot_lattice(&diff)
        });
        let c3 = found.next().expect("the center is closed under composition");
        assert!(found.next().is_none(), "coroot lattice classes of S are distinct");
        c3
    }

    pub fn center_inverse(&self, c: &CentralElement) -> CentralElement {
        self.center_elements()
            .into_iter()
            .find(|d| self.center_compose(c, d).is_identity())
            .expect("the center is a group")
    }

    /// Whether `c ↦ w_c` is an injective homomorphism.
    pub fn phi_homomorphism_check(&self) -> bool {
        let center = self.center_elements();
        let images: Vec<WeylElement> = center.iter().map(|c| self.center_to_weyl(c)).collect();
        for (a, wa) in center.iter().zip(&images) {
            for (b, wb) in center.iter().zip(&images) {
                if wa.compose(wb) != self.center_to_weyl(&self.center_compose(a, b)) {
                    return false;
                }
            }
        }
        (0..images.len()).all(|i| (0..i).all(|j| images[i] != images[j]))
    }

    pub fn center_report(&self) -> Vec<CenterEntry> {
        self.center_elements()
            .iter()
            .map(|c| {
                let walk = self.alcove_walk(c);
                CenterEntry {
                    node: c.node().map(|i| i + 1),
                    coweight: c.coweight().iter().map(|q| q.to_string()).collect(),
                    weyl_images: walk.linear_part.images(),
                    reduced_word: walk.linear_part.reduced_word(self).iter().map(|i| i + 1).collect(),
                    walk: walk.steps.clone(),
                    translation_zero: walk.translation.iter().all(|t| t.is_zero()),
                    sign_check: c.is_identity() || self.sign_check(c),
                }
            })
            .collect()
    }
}

/// The affine map accumulated by [`RootSystem::alcove_walk`], as
/// `y ↦ linear_part(y) + translation`.
#[derive(Clone, Debug)]
pub struct AlcoveWalk {
    pub linear_part: WeylElement,
    pub translation: Coweight,
    pub endpoint: Coweight,
    /// 1-based simple reflections, with 0 for the affine one.
    pub steps: Vec<usize>,
}

/// One row of the `roots --report center` table; nodes are 1-based.
#[derive(Clone, Debug, Serialize)]
pub struct CenterEntry {
    pub node: Option<usize>,
    pub coweight: Vec<String>,
    pub weyl_images: Vec<Vec<i64>>,
    pub reduced_word: Vec<usize>,
    pub walk: Vec<usize>,
    pub translation_zero: bool,
    pub sign_check: bool,
}
