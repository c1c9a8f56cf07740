mod verify;

use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qsc_core::fulton_woodward::{lowest_term_with, maximizers, verify_fw_with};
use qsc_core::rootsys::{CartanType, Family, ParabolicChoice, RootSystem};
use qsc_core::schubert_index::parse_element_list;
use qsc_core::transform::{InvariantEvaluator, Reduction, SPointValue, ShiftVector, Transformed};
use qsc_core::{ClassicalRing, GWInstance, GrContext, QuantumRing, SchubertIndex};

#[derive(Parser)]
#[command(name = "qsc", version, about = "Quantum Schubert calculus on Grassmannians")]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Quantum product σ(I) ⋆ σ(J).
    Product {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        i: String,
        #[arg(long)]
        j: String,
    },
    /// Gromov–Witten invariant <σ(I_1), …, σ(I_s)>_d.
    Gw {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        /// Index lists separated by '/', e.g. 1,2/1,2/1,2.
        #[arg(long)]
        classes: String,
        #[arg(long)]
        d: u32,
        /// Print the shifts used to reach degree zero.
        #[arg(long)]
        trace: bool,
    },
    /// Apply a shift vector to an invariant.
    Transform {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        classes: String,
        #[arg(long)]
        d: u32,
        /// Per-slot shifts, e.g. 2,1,1.
        #[arg(long)]
        shifts: String,
    },
    /// Minimal q-degree of σ(I) ⋆ σ(J) and its coefficient.
    Fw {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        i: String,
        #[arg(long)]
        j: String,
    },
    /// Root-system tables.
    Roots {
        #[arg(long = "type")]
        family: String,
        #[arg(long)]
        rank: usize,
        #[arg(long, value_enum, default_value_t = Report::Center)]
        report: Report,
        /// 1-based nodes outside the Levi factor for the codim report.
        #[arg(long)]
        sigma: Option<String>,
    },
    /// Run invariant sweeps.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_n: u32,
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Report {
    Center,
    Phi,
    Codim,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Transform,
    Fw,
    Rings,
    Roots,
    All,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(1);
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var("QSC_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .with_context(|| format!("QSC_THREADS={value:?} is not a count"))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    Ok(())
}

fn context(n: u32, r: u32) -> Result<GrContext> {
    Ok(GrContext::new(n, r)?)
}

fn index(ctx: GrContext, list: &str) -> Result<SchubertIndex> {
    Ok(SchubertIndex::new(ctx, &parse_element_list(list)?)?)
}

fn instance(ctx: GrContext, classes: &str, d: u32) -> Result<GWInstance> {
    let indices = classes.split('/').map(|c| index(ctx, c)).collect::<Result<Vec<_>>>()?;
    Ok(GWInstance::new(indices, d)?)
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("JSON values serialize")
    );
}

/// Returns `Ok(false)` when a check the command ran failed.
fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Product { n, r, i, j } => {
            let ctx = context(*n, *r)?;
            let product = QuantumRing::new(ctx).basis_product(&index(ctx, i)?, &index(ctx, j)?)?;
            if cli.json {
                print_json(&serde_json::to_value(&product)?);
            } else {
                println!("{product}");
            }
            Ok(true)
        }
        Command::Gw {
            n,
            r,
            classes,
            d,
            trace,
        } => {
            let ctx = context(*n, *r)?;
            let inst = instance(ctx, classes, *d)?;
            let (value, reduction) = InvariantEvaluator::new(ctx).spoint_invariant_traced(&inst)?;
            gw_output(cli.json, *trace, &inst, value, reduction.as_ref());
            Ok(true)
        }
        Command::Transform {
            n,
            r,
            classes,
            d,
            shifts,
        } => {
            let ctx = context(*n, *r)?;
            let inst = instance(ctx, classes, *d)?;
            let sv = ShiftVector::new(ctx, parse_shifts(shifts)?)?;
            let result = qsc_core::transform_instance(&inst, &sv)?;
            transform_output(cli.json, &inst, &sv, &result);
            Ok(true)
        }
        Command::Fw { n, r, i, j } => {
            let ctx = context(*n, *r)?;
            let (i, j) = (index(ctx, i)?, index(ctx, j)?);
            let (quantum, classical) = (QuantumRing::new(ctx), ClassicalRing::new(ctx));
            let low = lowest_term_with(&classical, &i, &j)?;
            let check = verify_fw_with(&quantum, &classical, &i, &j)?;
            if cli.json {
                print_json(&json!({
                    "degree": low.degree,
                    "maximizer": [low.maximizer.0, low.maximizer.1],
                    "maximizers": maximizers(&i, &j)?.iter().map(|(a, b)| [a, b]).collect::<Vec<_>>(),
                    "lowest_term": low.class,
                    "verified": check.ok(),
                }));
            } else {
                println!("degree {}", low.degree);
                println!("maximizer ({}, {})", low.maximizer.0, low.maximizer.1);
                println!(
                    "lowest term {}{}",
                    qsc_core::quantum::q_prefix(low.degree),
                    parenthesize(&low.class.to_string())
                );
                println!("verified {}", check.ok());
            }
            Ok(check.ok())
        }
        Command::Roots {
            family,
            rank,
            report,
            sigma,
        } => {
            let family: Family = family.parse()?;
            let rs = RootSystem::build(CartanType::new(family, *rank)?);
            roots_output(cli.json, &rs, *report, sigma.as_deref())
        }
        Command::Verify { suite, max_n, max_rank } => {
            if *max_n < 2 || *max_n > qsc_core::schubert_index::MAX_N {
                bail!("--max-n must be in 2..={}", qsc_core::schubert_index::MAX_N);
            }
            let reports = verify::run(*suite, *max_n, *max_rank);
            let passed = reports.iter().all(|r| r.failures.is_empty());
            if cli.json {
                print_json(&json!({ "passed": passed, "suites": reports }));
            } else {
                for r in &reports {
                    let status = if r.failures.is_empty() { "pass" } else { "FAIL" };
                    println!(
                        "{:<10} {status}  {} checks, {} failures",
                        r.suite,
                        r.checks,
                        r.failures.len()
                    );
                    for line in &r.notes {
                        println!("    {line}");
                    }
                    for f in r.failures.iter().take(20) {
                        println!("    {f}");
                    }
                }
            }
            Ok(passed)
        }
    }
}

fn parse_shifts(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| anyhow!("bad shift {t:?}")))
        .collect()
}

fn parenthesize(s: &str) -> String {
    if s.contains(" + ") || s.contains(" - ") {
        format!("({s})")
    } else {
        s.to_string()
    }
}

fn indices_json(indices: &[SchubertIndex]) -> Vec<Vec<u32>> {
    indices.iter().map(|i| i.to_vec()).collect()
}

fn gw_output(json: bool, trace: bool, inst: &GWInstance, value: SPointValue, reduction: Option<&Reduction>) {
    let outcome = match reduction {
        None => "dimension",
        Some(Reduction::Classical { .. }) => "classical",
        Some(Reduction::Vanishing { .. }) => "vanishing",
        Some(Reduction::Irreducible { .. }) => "irreducible",
    };
    if json {
        let history: Vec<Vec<u32>> = reduction
            .map(|r| r.history().iter().map(|s| s.shifts().to_vec()).collect())
            .unwrap_or_default();
        let value_json = match value {
            SPointValue::Value(v) => json!(v),
            SPointValue::Unreachable => json!("unreachable"),
        };
        let mut out = json!({
            "n": inst.ctx().n(),
            "r": inst.ctx().r(),
            "classes": indices_json(inst.indices()),
            "d": inst.degree(),
            "value": value_json,
            "reduction": outcome,
        });
        if trace {
            out["history"] = json!(history);
            if let Some(Reduction::Classical { terminal, .. }) = reduction {
                out["terminal"] = json!(indices_json(terminal.indices()));
            }
        }
        print_json(&out);
        return;
    }
    println!("{value}");
    if !trace {
        return;
    }
    match reduction {
        None => println!("dimension condition fails"),
        Some(red) => {
            let mut current = inst.clone();
            for (k, sv) in red.history().iter().enumerate() {
                match qsc_core::transform_instance(&current, sv).expect("recorded shifts apply") {
                    Transformed::Instance(next) => {
                        println!("step {}: shift {sv} -> {next}", k + 1);
                        current = next;
                    }
                    Transformed::NegativeDegree { degree, .. } => {
                        println!("step {}: shift {sv} -> degree {degree} (vanishes)", k + 1);
                    }
                }
            }
            if let Reduction::Irreducible { stuck, .. } = red {
                println!("no shift lowers the degree of {stuck}");
            }
        }
    }
}

fn transform_output(json: bool, inst: &GWInstance, sv: &ShiftVector, result: &Transformed) {
    let counts: u32 = inst
        .indices()
        .iter()
        .zip(sv.shifts())
        .map(|(i, &k)| i.count_le(k))
        .sum();
    if json {
        print_json(&json!({
            "n": inst.ctx().n(),
            "r": inst.ctx().r(),
            "shifts": sv.shifts(),
            "classes": indices_json(result.indices()),
            "d": result.degree(),
            "counts": counts,
            "negative_degree": result.instance().is_none(),
            "dimension_check": result.instance().map_or(inst.dimension_check(), |t| t.dimension_check()),
        }));
        return;
    }
    match result {
        Transformed::Instance(t) => println!("{t}"),
        Transformed::NegativeDegree { degree, .. } => {
            let classes: Vec<String> = result
                .indices()
                .iter()
                .map(|i| format!("{{{}}}", join(&i.to_vec())))
                .collect();
            println!(
                "negative degree {degree} for <{}>: both invariants vanish",
                classes.join(", ")
            );
        }
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn roots_output(json: bool, rs: &RootSystem, report: Report, sigma: Option<&str>) -> Result<bool> {
    let label = rs.cartan_type().to_string();
    match report {
        Report::Center => {
            let rows = rs.center_report();
            let ok = rows.iter().all(|r| r.translation_zero && r.sign_check);
            if json {
                print_json(&json!({ "type": label, "marks": rs.marks(), "center": rows }));
            } else {
                println!("{label}: {} roots, marks {}", rs.roots().len(), join(rs.marks()));
                for row in &rows {
                    let node = row.node.map_or("identity".to_string(), |n| format!("node {n}"));
                    println!(
                        "{node:<9} w_c = s[{}]  walk {}  translation zero {}  sign check {}",
                        join(&row.reduced_word),
                        join(&row.walk),
                        row.translation_zero,
                        row.sign_check
                    );
                }
            }
            Ok(ok)
        }
        Report::Phi => {
            let center = rs.center_elements();
            let node = |c: &qsc_core::rootsys::CentralElement| c.node().map(|n| n + 1);
            let table: Vec<Vec<Option<usize>>> = center
                .iter()
                .map(|a| center.iter().map(|b| node(&rs.center_compose(a, b))).collect())
                .collect();
            let ok = rs.phi_homomorphism_check();
            if json {
                print_json(&json!({
                    "type": label,
                    "elements": center.iter().map(node).collect::<Vec<_>>(),
                    "composition": table,
                    "homomorphism_and_injective": ok,
                }));
            } else {
                let name = |n: Option<usize>| n.map_or("e".to_string(), |n| n.to_string());
                println!("{label}: composition of center elements (by node, e = identity)");
                for (a, row) in center.iter().zip(&table) {
                    let cells: Vec<String> = row.iter().map(|&c| name(c)).collect();
                    println!("  {:>2} | {}", name(node(a)), cells.join(" "));
                }
                println!("homomorphism and injective: {ok}");
            }
            Ok(ok)
        }
        Report::Codim => {
            let sigma_nodes: Vec<usize> = match sigma {
                Some(s) => parse_element_list(s)?.into_iter().map(|v| v as usize - 1).collect(),
                None => {
                    let first = (0..rs.rank()).find(|&i| rs.marks()[i] == 1).unwrap_or(0);
                    vec![first]
                }
            };
            if let Some(bad) = sigma_nodes.iter().find(|&&i| i >= rs.rank()) {
                bail!("node {} out of range for {label}", bad + 1);
            }
            let levi: Vec<usize> = (0..rs.rank()).filter(|i| !sigma_nodes.contains(i)).collect();
            let p = ParabolicChoice::new(rs, &levi)?;
            let rows = rs.codim_report(&p);
            let ok = rows.iter().all(|row| row.shifts.iter().all(|s| s.formula == s.direct));
            if json {
                print_json(&json!({
                    "type": label,
                    "sigma": p.sigma().iter().map(|i| i + 1).collect::<Vec<_>>(),
                    "dim": p.dim(rs),
                    "first_chern_class": rs.first_chern_class(&p),
                    "cosets": rows,
                }));
            } else {
                println!(
                    "{label}, Σ = {{{}}}: {} cosets, dim {}",
                    join(&p.sigma().iter().map(|i| i + 1).collect::<Vec<_>>()),
                    rows.len(),
                    p.dim(rs)
                );
                for row in &rows {
                    let shifts: Vec<String> = row
                        .shifts
                        .iter()
                        .map(|s| format!("node {}: {:+} q^{}", s.node, s.formula, join(&s.exponent)))
                        .collect();
                    println!(
                        "  s[{}] codim {}  {}",
                        join(&row.reduced_word),
                        row.codim,
                        shifts.join("  ")
                    );
                }
            }
            Ok(ok)
        }
    }
}
