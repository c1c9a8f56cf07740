//! Exhaustive invariant sweeps behind `qsc verify`.

use rayon::prelude::*;
use serde::Serialize;

use qsc_core::classical::lr::lr_coefficient;
use qsc_core::fulton_woodward::verify_fw_with;
use qsc_core::rootsys::type_a::GrassmannBridge;
use qsc_core::rootsys::{CartanType, Family, ParabolicChoice, RootSystem};
use qsc_core::transform::{
    degree_zero_shift, t_op, t_pow, transform_instance, InvariantEvaluator, Reduction, ShiftVector, Transformed,
};
use qsc_core::{ClassicalRing, GWInstance, GrContext, QClass, QuantumRing};

use crate::Suite;

#[derive(Debug, Default, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: u64,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

#[derive(Default)]
struct Tally {
    checks: u64,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self
    }

    fn into_report(mut self, suite: &'static str, notes: Vec<String>) -> SuiteReport {
        self.failures.sort();
        SuiteReport {
            suite,
            checks: self.checks,
            failures: self.failures,
            notes,
        }
    }
}

fn contexts(max_n: u32) -> Vec<GrContext> {
    (2..=max_n)
        .flat_map(|n| (1..n).map(move |r| GrContext::new(n, r).expect("0 < r < n")))
        .collect()
}

fn sweep(ctxs: Vec<GrContext>, f: impl Fn(GrContext, &mut Tally) + Sync) -> Tally {
    ctxs.into_par_iter()
        .map(|ctx| {
            let mut t = Tally::default();
            f(ctx, &mut t);
            t
        })
        .reduce(Tally::default, Tally::merge)
}

pub fn run(suite: Suite, max_n: u32, max_rank: usize) -> Vec<SuiteReport> {
    let mut out = Vec::new();
    if matches!(suite, Suite::Rings | Suite::All) {
        out.push(rings(max_n));
    }
    if matches!(suite, Suite::Transform | Suite::All) {
        out.push(transform(max_n));
    }
    if matches!(suite, Suite::Fw | Suite::All) {
        out.push(fw(max_n));
    }
    if matches!(suite, Suite::Roots | Suite::All) {
        out.push(roots(max_n, max_rank));
    }
    out
}

fn rings(max_n: u32) -> SuiteReport {
    let tally = sweep(contexts(max_n.min(6)), |ctx, t| {
        let quantum = QuantumRing::new(ctx);
        let classical = ClassicalRing::new(ctx);
        let basis = ctx.basis();
        for i in &basis {
            t.check(
                t_pow(&QClass::basis(*i), ctx.n()) == QClass::basis(*i).shift_degree(ctx.r()),
                || format!("T^n != q^r on {i}"),
            );
            for j in &basis {
                let cup = classical.basis_cup(i, j).expect("cup");
                for k in &basis {
                    let lr = lr_coefficient(&i.to_partition(), &j.to_partition(), &k.to_partition()) as i64;
                    t.check(cup.coeff(k) == lr, || {
                        format!("cup {i} {j} at {k}: {} vs LR {lr}", cup.coeff(k))
                    });
                }
                let product = quantum.basis_product(i, j).expect("product");
                t.check(product == quantum.basis_product(j, i).expect("product"), || {
                    format!("{i} ⋆ {j} not commutative")
                });
                t.check(product.classical_part() == cup, || {
                    format!("{i} ⋆ {j}: degree 0 part is not the cup product")
                });
                let lhs = t_op(&product);
                let rhs = quantum
                    .qmul(&t_op(&QClass::basis(*i)), &QClass::basis(*j))
                    .expect("product");
                t.check(lhs == rhs, || format!("T({i} ⋆ {j}) != T({i}) ⋆ {j}"));
            }
        }
        if ctx.n() <= 5 {
            for a in &basis {
                for b in &basis {
                    let ab = quantum.basis_product(a, b).expect("product");
                    for c in &basis {
                        let left = quantum.qmul(&ab, &QClass::basis(*c)).expect("product");
                        let bc = quantum.basis_product(b, c).expect("product");
                        let right = quantum.qmul(&QClass::basis(*a), &bc).expect("product");
                        t.check(left == right, || format!("({a} ⋆ {b}) ⋆ {c} != {a} ⋆ ({b} ⋆ {c})"));
                    }
                }
            }
        }
    });
    tally.into_report("rings", Vec::new())
}

#[derive(Default)]
struct Reducibility {
    classical: u64,
    vanishing: u64,
    irreducible: u64,
}

fn transform(max_n: u32) -> SuiteReport {
    let stats = std::sync::Mutex::new(Reducibility::default());
    let tally = sweep(contexts(max_n.min(6)), |ctx, t| {
        let ev = InvariantEvaluator::new(ctx);
        let ring = ev.quantum();
        let basis = ctx.basis();
        let vectors = ShiftVector::all_summing_to_n(ctx, 3);
        let mut local = Reducibility::default();
        for a in &basis {
            for b in &basis {
                for c in &basis {
                    for d in 0..=3 {
                        let inst = GWInstance::new(vec![*a, *b, *c], d).expect("three classes");
                        if !inst.dimension_check() {
                            continue;
                        }
                        let before = ring.gw3(a, b, c, d).expect("gw3");
                        for v in &vectors {
                            let moved = transform_instance(&inst, v).expect("valid shift");
                            let after = match &moved {
                                Transformed::Instance(m) => {
                                    let x = m.indices();
                                    t.check(m.dimension_check(), || {
                                        format!("{inst} by {v}: dimension condition lost")
                                    });
                                    let back = transform_instance(m, &v.complement()).expect("valid shift");
                                    t.check(back == Transformed::Instance(inst.clone()), || {
                                        format!("{inst} by {v}: complement does not return")
                                    });
                                    ring.gw3(&x[0], &x[1], &x[2], m.degree()).expect("gw3")
                                }
                                Transformed::NegativeDegree { .. } => 0,
                            };
                            t.check(before == after, || format!("{inst} by {v}: {before} became {after}"));
                        }
                        match ev.spoint_invariant_traced(&inst) {
                            Ok((_, Some(Reduction::Classical { .. }))) => local.classical += 1,
                            Ok((_, Some(Reduction::Vanishing { .. }))) => local.vanishing += 1,
                            Ok((_, Some(Reduction::Irreducible { .. }))) => local.irreducible += 1,
                            Ok((_, None)) => {}
                            Err(e) => t.check(false, || format!("{inst}: {e}")),
                        }
                    }
                }
            }
        }
        let mut s = stats.lock().unwrap();
        s.classical += local.classical;
        s.vanishing += local.vanishing;
        s.irreducible += local.irreducible;
    });
    let degree_zero = sweep(contexts(max_n.min(8)), |ctx, t| {
        let ring = QuantumRing::new(ctx);
        let basis = ctx.basis();
        for i in basis.iter().filter(|i| i.codim() < ctx.n()) {
            for j in &basis {
                for (d, k, _) in ring.basis_product(i, j).expect("product").terms() {
                    if d > 0 {
                        let found = degree_zero_shift(&ring, i, j, &k).expect("shift").is_some();
                        t.check(found, || format!("q^{d} {k} in {i} ⋆ {j} has no degree-zero shift"));
                    }
                }
            }
        }
    });
    let s = stats.into_inner().unwrap();
    let notes = vec![format!(
        "three-point reductions (d <= 3): {} classical, {} vanishing, {} irreducible",
        s.classical, s.vanishing, s.irreducible
    )];
    tally.merge(degree_zero).into_report("transform", notes)
}

fn fw(max_n: u32) -> SuiteReport {
    let tally = sweep(contexts(max_n), |ctx, t| {
        let quantum = QuantumRing::new(ctx);
        let classical = ClassicalRing::new(ctx);
        let basis = ctx.basis();
        for i in &basis {
            for j in &basis {
                let check = verify_fw_with(&quantum, &classical, i, j).expect("fw");
                t.check(check.ok(), || format!("{i} {j}: {check:?}"));
            }
        }
    });
    tally.into_report("fw", Vec::new())
}

fn root_types(max_rank: usize) -> Vec<CartanType> {
    let mut out = Vec::new();
    let mut push = |f: Family, l: usize| {
        if l <= max_rank {
            out.push(CartanType::new(f, l).expect("valid type"));
        }
    };
    for l in 1..=max_rank.min(6) {
        push(Family::A, l);
    }
    for l in 2..=max_rank.min(6) {
        push(Family::B, l);
        push(Family::C, l);
    }
    for l in 4..=max_rank.min(6) {
        push(Family::D, l);
    }
    for l in 6..=8 {
        push(Family::E, l);
    }
    push(Family::F, 4);
    push(Family::G, 2);
    out
}

fn expected_center(t: CartanType) -> usize {
    match (t.family, t.rank) {
        (Family::A, l) => l,
        (Family::B | Family::C, _) => 1,
        (Family::D, _) => 3,
        (Family::E, 6) => 2,
        (Family::E, 7) => 1,
        _ => 0,
    }
}

fn roots(max_n: u32, max_rank: usize) -> SuiteReport {
    let tally = root_types(max_rank)
        .into_par_iter()
        .map(|ty| {
            let mut t = Tally::default();
            let rs = RootSystem::build(ty);
            let center = rs.center_elements();
            t.check(center.len() - 1 == expected_center(ty), || {
                format!("{ty}: {} center elements", center.len())
            });
            for c in &center {
                let walk = rs.alcove_walk(c);
                t.check(walk.translation.iter().all(|x| *x.numer() == 0), || {
                    format!("{ty} node {:?}: nonzero translation", c.node())
                });
                if !c.is_identity() {
                    t.check(rs.sign_check(c), || format!("{ty} node {:?}: sign check", c.node()));
                }
                let inverse = rs.center_inverse(c);
                t.check(rs.levi_conjugation_check(c, &inverse), || {
                    format!("{ty} node {:?}: Levi conjugation", c.node())
                });
            }
            t.check(rs.phi_homomorphism_check(), || {
                format!("{ty}: center map is not an injective homomorphism")
            });
            if ty.rank <= 4 {
                let images: Vec<_> = center.iter().map(|c| rs.center_to_weyl(c)).collect();
                for p in ParabolicChoice::all(&rs) {
                    for w in rs.coset_representatives(&p) {
                        for (c, wc) in center.iter().zip(&images).skip(1) {
                            let direct = rs.bruhat_codim(&p, &wc.compose(&w)) as i64 - rs.bruhat_codim(&p, &w) as i64;
                            t.check(rs.codim_shift(&p, c, &w) == direct, || {
                                format!("{ty} Σ={:?} node {:?}: codim shift", p.sigma(), c.node())
                            });
                        }
                    }
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);

    let bridge = sweep(contexts(max_n.min(6)), |ctx, t| {
        let b = GrassmannBridge::new(ctx);
        let n = ctx.n() as usize;
        for k in 0..ctx.n() {
            let w = b.root_system().center_to_weyl(&b.center(k));
            let expect: Vec<usize> = (1..=n).map(|i| (i + n - k as usize - 1) % n + 1).collect();
            t.check(b.schubert_permutation(&w) == expect, || {
                format!("{ctx}: Θ^{k} is not subtraction by {k}")
            });
        }
        let basis = ctx.basis();
        for i in &basis {
            t.check(b.bruhat_codim(i).expect("coset") == i.codim() as usize, || {
                format!("{i}: codimension")
            });
            t.check(b.tc_exponent(1, i).expect("coset") == i.count_le(1) as i64, || {
                format!("{i}: T exponent")
            });
            for k in 0..=ctx.n() {
                t.check(
                    b.shifted_index(k, i).expect("coset") == i.shift(k).expect("shift").index,
                    || format!("{i}: Θ^{k} coset"),
                );
            }
        }
        let vectors = ShiftVector::all_summing_to_n(ctx, 3);
        for a in &basis {
            for c in &basis {
                let inst = GWInstance::new(vec![*a, *c, ctx.point()], 1).expect("three classes");
                for v in &vectors {
                    let want = transform_instance(&inst, v).expect("valid shift").degree();
                    let got = b.degree_shift(inst.indices(), v.shifts(), 1).expect("degree shift");
                    t.check(want == got, || {
                        format!("{inst} by {v}: degree shift {got}, transform {want}")
                    });
                }
            }
        }
    });
    tally.merge(bridge).into_report("roots", Vec::new())
}
