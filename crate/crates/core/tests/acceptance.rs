//! Acceptance criteria. Each criterion prints one PASS/FAIL line with its
//! runtime against the allowed budget. Expected values come from oracles
//! written here, not from the library's own checks.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use qsc_core::fulton_woodward::verify_fw;
use qsc_core::rootsys::type_a::GrassmannBridge;
use qsc_core::rootsys::{CartanType, Family, ParabolicChoice, RootSystem};
use qsc_core::transform::t_pow_basis;
use qsc_core::{
    reduce_to_classical, t_op, t_pow, transform_instance, ClassicalRing, CohClass, GWInstance, GrContext, Partition,
    QClass, QuantumRing, Reduction, SchubertIndex, ShiftVector, Transformed,
};

type Failures = Vec<String>;

struct Outcome {
    checks: usize,
    failures: Failures,
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Failures,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn done(self) -> Outcome {
        Outcome {
            checks: self.checks,
            failures: self.failures,
        }
    }
}

fn ctx(n: u32, r: u32) -> GrContext {
    GrContext::new(n, r).unwrap()
}

fn contexts(max_n: u32) -> impl Iterator<Item = GrContext> {
    (2..=max_n).flat_map(|n| (1..n).map(move |r| ctx(n, r)))
}

fn idx(c: GrContext, parts: &[u32]) -> SchubertIndex {
    SchubertIndex::from_partition(c, &Partition::new(parts.to_vec()).unwrap()).unwrap()
}

/// `I - k` with wraparound, and how many elements were `<= k`, from the elements alone.
fn shift_oracle(i: &SchubertIndex, k: u32) -> (u32, SchubertIndex) {
    let n = i.ctx().n();
    let k = k % n;
    let mut count = 0;
    let mut out: Vec<u32> = i
        .elements()
        .map(|e| {
            if e <= k {
                count += 1;
                e + n - k
            } else {
                e - k
            }
        })
        .collect();
    out.sort_unstable();
    (count, SchubertIndex::new(i.ctx(), &out).unwrap())
}

fn t_oracle(x: &QClass) -> QClass {
    let mut out = QClass::zero(x.ctx());
    for (d, i, c) in x.terms() {
        let (count, j) = shift_oracle(&i, 1);
        out.add_term(d + count, j, c).unwrap();
    }
    out
}

/// Shift-reduction value of a 3-point invariant.
fn reduction_value(classical: &ClassicalRing, inst: &GWInstance) -> Result<i64, String> {
    if !inst.dimension_check() {
        return Ok(0);
    }
    match reduce_to_classical(inst).map_err(|e| e.to_string())? {
        Reduction::Classical { terminal, .. } => {
            let factors: Vec<CohClass> = terminal.indices().iter().map(|i| CohClass::basis(*i)).collect();
            Ok(classical.cup_all(&factors).map_err(|e| e.to_string())?.integral())
        }
        Reduction::Vanishing { .. } => Ok(0),
        Reduction::Irreducible { stuck, .. } => Err(format!("{inst} is stuck at {stuck}")),
    }
}

fn criterion_1() -> Outcome {
    let c = ctx(4, 2);
    let ring = QuantumRing::new(c);
    let classical = ClassicalRing::new(c);
    let mut t = Tally::default();
    let basis = c.basis();
    let max_d = 2;
    for i in &basis {
        for j in &basis {
            let product = ring.basis_product(i, j).unwrap();
            for k in &basis {
                for d in 0..=max_d {
                    let inst = GWInstance::new(vec![*i, *j, k.dual()], d).unwrap();
                    match reduction_value(&classical, &inst) {
                        Ok(v) => t.check(product.coeff(d, k) == v, || {
                            format!(
                                "{i}⋆{j}: coefficient of q^{d}{k} is {}, reduction gives {v}",
                                product.coeff(d, k)
                            )
                        }),
                        Err(e) => t.check(false, || e),
                    }
                }
            }
            t.check(product.max_degree().map_or(true, |d| d <= max_d), || {
                format!("{i}⋆{j}: degree above {max_d}")
            });
        }
    }

    let s1 = idx(c, &[1]);
    let s2 = idx(c, &[2]);
    let s11 = idx(c, &[1, 1]);
    let s21 = idx(c, &[2, 1]);
    let s22 = idx(c, &[2, 2]);
    let one = c.fundamental();
    let sum = |terms: &[(u32, SchubertIndex)]| {
        let mut x = QClass::zero(c);
        for &(d, i) in terms {
            x.add_term(d, i, 1).unwrap();
        }
        x
    };
    let table = [
        ((s1, s1), sum(&[(0, s2), (0, s11)])),
        ((s1, s21), sum(&[(0, s22), (1, one)])),
        ((s22, s1), sum(&[(1, s1)])),
        ((s22, s22), sum(&[(2, one)])),
    ];
    for ((a, b), want) in table {
        let got = ring.basis_product(&a, &b).unwrap();
        t.check(got == want, || format!("{a}⋆{b} = {got}, expected {want}"));
    }
    t.done()
}

fn criterion_2() -> Outcome {
    let mut t = Tally::default();
    for c in [ctx(4, 2), ctx(5, 2), ctx(6, 3)] {
        let ring = QuantumRing::new(c);
        let basis = c.basis();
        let products: HashMap<(SchubertIndex, SchubertIndex), QClass> = basis
            .iter()
            .flat_map(|i| basis.iter().map(move |j| (*i, *j)))
            .map(|(i, j)| ((i, j), ring.basis_product(&i, &j).unwrap()))
            .collect();
        let gw = |idx: &[SchubertIndex], d: u32| products[&(idx[0], idx[1])].coeff(d, &idx[2].dual());
        let vectors = ShiftVector::all_summing_to_n(c, 3);
        for i in &basis {
            for j in &basis {
                for k in &basis {
                    for d in 0..=3 {
                        let inst = GWInstance::new(vec![*i, *j, *k], d).unwrap();
                        if !inst.dimension_check() {
                            continue;
                        }
                        let lhs = gw(inst.indices(), d);
                        for v in &vectors {
                            let rhs = match transform_instance(&inst, v).unwrap() {
                                Transformed::Instance(out) => gw(out.indices(), out.degree()),
                                Transformed::NegativeDegree { .. } => 0,
                            };
                            t.check(lhs == rhs, || format!("{inst} by {v}: {lhs} vs {rhs}"));
                        }
                    }
                }
            }
        }
    }
    t.done()
}

fn criterion_3() -> Outcome {
    let mut t = Tally::default();
    for c in contexts(6) {
        let ring = QuantumRing::new(c);
        let basis = c.basis();
        for i in &basis {
            let x = QClass::basis(*i);
            t.check(t_op(&x) == t_oracle(&x), || format!("T({i}) disagrees with the shift"));
            let mut y = x.clone();
            for _ in 0..c.n() {
                y = t_oracle(&y);
            }
            let want = QClass::monomial(c.r(), *i);
            t.check(y == want, || format!("{c}: T^n({i}) = {y}"));
            t.check(t_pow(&x, c.n()) == want, || format!("{c}: t_pow(n) on {i}"));
            let tx = t_oracle(&x);
            for j in &basis {
                let lhs = t_oracle(&ring.basis_product(i, j).unwrap());
                let rhs = ring.qmul(&tx, &QClass::basis(*j)).unwrap();
                t.check(lhs == rhs, || format!("{c}: T({i}⋆{j}) = {lhs}, T({i})⋆{j} = {rhs}"));
            }
        }
    }
    t.done()
}

fn criterion_4() -> Outcome {
    let mut t = Tally::default();
    for c in contexts(8) {
        let (n, r) = (c.n(), c.r());
        let ring = QuantumRing::new(c);
        let classical = ClassicalRing::new(c);
        let basis = c.basis();
        for i in &basis {
            for j in &basis {
                t.check(verify_fw(i, j).unwrap(), || format!("{c}: verify_fw({i}, {j})"));
                let values: Vec<i64> = (0..=n)
                    .map(|a| (i.count_le(a) + j.count_le(n - a)) as i64 - r as i64)
                    .collect();
                let best = *values.iter().max().unwrap();
                let product = ring.basis_product(i, j).unwrap();
                t.check(product.min_degree() == Some(best as u32), || {
                    format!(
                        "{c}: {i}⋆{j} starts at {:?}, formula gives {best}",
                        product.min_degree()
                    )
                });
                let lowest = product.degree_part(best as u32);
                for a in (0..=n).filter(|&a| values[a as usize] == best) {
                    let (_, ia) = shift_oracle(i, a);
                    let (_, jb) = shift_oracle(j, n - a);
                    let cup = classical.basis_cup(&ia, &jb).unwrap();
                    t.check(cup == lowest, || {
                        format!("{c}: {i}⋆{j} lowest term {lowest}, cup at {a} is {cup}")
                    });
                }
            }
        }
    }
    t.done()
}

/// Every quantum term of σ(I)⋆σ(J) with codim(I) <= n-1, J arbitrary. The
/// Pieri products are the cases where one factor is special.
fn criterion_5() -> Outcome {
    let mut t = Tally::default();
    let mut quantum_terms = 0usize;
    let mut pieri_terms = 0usize;
    for c in contexts(8) {
        let ring = QuantumRing::new(c);
        let basis = c.basis();
        let products: HashMap<(SchubertIndex, SchubertIndex), QClass> = basis
            .iter()
            .filter(|i| i.codim() < c.n())
            .flat_map(|i| basis.iter().map(move |j| (*i, *j)))
            .map(|(i, j)| ((i, j), ring.basis_product(&i, &j).unwrap()))
            .collect();
        for ((i, j), product) in &products {
            let special = i.to_partition().parts().len() <= 1;
            for (d, k, _) in product.terms().filter(|(d, _, _)| *d >= 1) {
                quantum_terms += 1;
                pieri_terms += special as usize;
                let found = (0..c.n()).any(|s| {
                    let (_, js) = shift_oracle(j, s);
                    let (_, ks) = shift_oracle(&k, s);
                    products[&(*i, js)].coeff(0, &ks) != 0
                });
                t.check(found, || format!("{c}: q^{d}{k} in {i}⋆{j} has no degree-zero shift"));
            }
        }
    }
    t.check(quantum_terms > 0 && pieri_terms > 0, || {
        "no quantum terms were examined".into()
    });
    t.done()
}

/// Littlewood–Richardson coefficient by enumerating fillings of `nu / lambda`
/// with content `mu` whose reverse reading word is a lattice word.
fn lr_oracle(lambda: &[u32], mu: &[u32], nu: &[u32]) -> u64 {
    let rows = nu.len();
    let part = |p: &[u32], k: usize| p.get(k).copied().unwrap_or(0) as usize;
    if (0..rows.max(lambda.len())).any(|k| part(lambda, k) > part(nu, k)) {
        return 0;
    }
    if lambda.iter().sum::<u32>() + mu.iter().sum::<u32>() != nu.iter().sum::<u32>() {
        return 0;
    }
    // Cells in reading order: top row first, right to left.
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|row| (part(lambda, row)..part(nu, row)).rev().map(move |col| (row, col)))
        .collect();
    let width = part(nu, 0);
    let mut grid = vec![vec![0u32; width]; rows];
    let mut content = vec![0u32; mu.len() + 1];

    fn go(
        pos: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        content: &mut Vec<u32>,
        lambda: &[u32],
        nu: &[u32],
        mu: &[u32],
    ) -> u64 {
        if pos == cells.len() {
            return 1;
        }
        let (row, col) = cells[pos];
        let in_skew = |r: usize, c: usize| c >= lambda.get(r).copied().unwrap_or(0) as usize && c < nu[r] as usize;
        let mut total = 0;
        for v in 1..=mu.len() as u32 {
            if col + 1 < nu[row] as usize && in_skew(row, col + 1) && v > grid[row][col + 1] {
                continue;
            }
            if row > 0 && in_skew(row - 1, col) && v <= grid[row - 1][col] {
                continue;
            }
            let vi = v as usize;
            if content[vi] >= mu[vi - 1] || (vi > 1 && content[vi] + 1 > content[vi - 1]) {
                continue;
            }
            content[vi] += 1;
            grid[row][col] = v;
            total += go(pos + 1, cells, grid, content, lambda, nu, mu);
            grid[row][col] = 0;
            content[vi] -= 1;
        }
        total
    }

    go(0, &cells, &mut grid, &mut content, lambda, nu, mu)
}

fn criterion_6() -> Outcome {
    let mut t = Tally::default();
    for c in contexts(6) {
        let ring = ClassicalRing::new(c);
        let basis = c.basis();
        for i in &basis {
            for j in &basis {
                let cup = ring.basis_cup(i, j).unwrap();
                let (pi, pj) = (i.to_partition(), j.to_partition());
                for k in &basis {
                    let pk = k.to_partition();
                    let want = lr_oracle(pi.parts(), pj.parts(), pk.parts()) as i64;
                    t.check(cup.coeff(k) == want, || {
                        format!("{c}: c[{pk}; {pi}, {pj}] = {}, tableaux give {want}", cup.coeff(k))
                    });
                }
            }
        }
    }
    t.done()
}

fn criterion_7() -> Outcome {
    let mut t = Tally::default();
    let mut types = Vec::new();
    types.extend((1..=5).map(|l| (Family::A, l, l)));
    types.extend((2..=5).map(|l| (Family::B, l, 1)));
    types.extend((2..=5).map(|l| (Family::C, l, 1)));
    types.extend((4..=6).map(|l| (Family::D, l, 3)));
    types.extend([
        (Family::E, 6, 2),
        (Family::E, 7, 1),
        (Family::E, 8, 0),
        (Family::F, 4, 0),
        (Family::G, 2, 0),
    ]);
    for (family, rank, mark_one) in types {
        let ty = CartanType::new(family, rank).unwrap();
        let rs = RootSystem::build(ty);
        t.check(rs.marks().iter().filter(|&&m| m == 1).count() == mark_one, || {
            format!("{ty}: marks {:?}", rs.marks())
        });
        let center = rs.center_elements();
        t.check(center.len() == mark_one + 1, || {
            format!("{ty}: {} center elements", center.len())
        });
        for c in &center {
            let walk = rs.alcove_walk(c);
            t.check(walk.translation.iter().all(|x| *x.numer() == 0), || {
                format!("{ty} {:?}: translation", c.node())
            });
            t.check(c.is_identity() || rs.sign_check(c), || {
                format!("{ty} {:?}: sign check", c.node())
            });
        }
        t.check(rs.phi_homomorphism_check(), || format!("{ty}: center map"));
        let images: Vec<_> = center.iter().map(|c| rs.center_to_weyl(c)).collect();
        for a in 0..images.len() {
            for b in a + 1..images.len() {
                t.check(images[a] != images[b], || format!("{ty}: center map is not injective"));
            }
        }
        if rank <= 4 {
            for p in ParabolicChoice::all(&rs) {
                for w in rs.coset_representatives(&p) {
                    for (c, wc) in center.iter().zip(&images).skip(1) {
                        let direct = rs.bruhat_codim(&p, &wc.compose(&w)) as i64 - rs.bruhat_codim(&p, &w) as i64;
                        t.check(rs.codim_shift(&p, c, &w) == direct, || {
                            format!("{ty} {:?} node {:?}: codim shift", p.sigma(), c.node())
                        });
                    }
                }
            }
        }
    }
    for n in 2..=6u32 {
        let b = GrassmannBridge::new(ctx(n, 1));
        for k in 0..n {
            let w = b.root_system().center_to_weyl(&b.center(k));
            let want: Vec<usize> = (1..=n as usize)
                .map(|i| (i + 2 * n as usize - k as usize - 1) % n as usize + 1)
                .collect();
            let got = b.schubert_permutation(&w);
            t.check(got == want, || {
                format!("A{}: center element {k} acts as {got:?}", n - 1)
            });
        }
    }
    t.done()
}

fn criterion_8() -> Outcome {
    let mut t = Tally::default();
    for c in [ctx(4, 2), ctx(5, 2)] {
        let n = c.n();
        let b = GrassmannBridge::new(c);
        let basis = c.basis();
        for i in &basis {
            // Walk T one step at a time, summing the exponents of the generator.
            let mut steps = 0i64;
            let mut current = *i;
            for k in 0..n {
                let (count, shifted) = shift_oracle(i, k);
                let (exp, idx) = t_pow_basis(i, k).unwrap();
                t.check(exp == count, || {
                    format!("{c}: T^{k}({i}) has q^{exp}, expected q^{count}")
                });
                t.check(steps == exp as i64, || {
                    format!("{c}: {k} generator steps on {i} give q^{steps}, T^{k} q^{exp}")
                });
                t.check(b.shifted_index(k, i).unwrap() == idx && idx == shifted, || {
                    format!("{c}: Θ^{k}{i}")
                });
                // T^k and the operator of the single element Θ^k differ by the
                // composition factor, which is q^{r-n+k} once k passes n-r.
                let tc = b.tc_exponent(k, i).unwrap();
                let correction = (c.r() as i64 - n as i64 + k as i64).max(0);
                t.check(tc + correction == exp as i64, || {
                    format!("{c}: tc_exponent({k}, {i}) = {tc}, T^{k} gives q^{exp}")
                });
                steps += b.tc_exponent(1, &current).unwrap();
                current = b.shifted_index(1, &current).unwrap();
            }
        }
        let vectors = ShiftVector::all_summing_to_n(c, 3);
        for i in &basis {
            for j in &basis {
                for k in &basis {
                    for d in 0..=3u32 {
                        let inst = GWInstance::new(vec![*i, *j, *k], d).unwrap();
                        for v in &vectors {
                            let want = transform_instance(&inst, v).unwrap().degree();
                            let got = b.degree_shift(inst.indices(), v.shifts(), d as i64).unwrap();
                            t.check(got == want, || format!("{inst} by {v}: degree_shift {got}, d' {want}"));
                        }
                    }
                }
            }
        }
    }
    t.done()
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 8] = [
        (
            "Gr(2,4) table against shift reduction",
            criterion_1,
            Duration::from_secs(1),
        ),
        (
            "transformation formula, Gr(2,4) Gr(2,5) Gr(3,6), d <= 3",
            criterion_2,
            Duration::from_secs(300),
        ),
        (
            "T module map and T^n = q^r, n <= 6",
            criterion_3,
            Duration::from_secs(60),
        ),
        (
            "lowest q-degree term of products, n <= 8",
            criterion_4,
            Duration::from_secs(300),
        ),
        (
            "degree-zero shifts of quantum terms, n <= 8",
            criterion_5,
            Duration::from_secs(120),
        ),
        (
            "cup product against LR tableaux, n <= 6",
            criterion_6,
            Duration::from_secs(120),
        ),
        (
            "root systems: center, alcove walk, codim shift",
            criterion_7,
            Duration::from_secs(30),
        ),
        (
            "type-A bridge against shifts, Gr(2,4) Gr(2,5)",
            criterion_8,
            Duration::from_secs(30),
        ),
    ];
    let mut all = true;
    for (k, (name, run, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let ok = outcome.failures.is_empty() && elapsed < budget;
        all &= ok;
        println!(
            "{} criterion {}: {name} ({} checks, {} failures, {:.3}s of {}s)",
            if ok { "PASS" } else { "FAIL" },
            k + 1,
            outcome.checks,
            outcome.failures.len(),
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
        for f in outcome.failures.iter().take(5) {
            println!("    {f}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
