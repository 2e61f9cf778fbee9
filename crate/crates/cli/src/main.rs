//! Command-line entry point: thin adapters over the library. Exit codes:
//! 0 yes/success, 1 no, 2 fail or error.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use hyperwidth::bags::{fhd_candidate_bags, ghd_candidate_bags, FhdMode, GhdVariant};
use hyperwidth::covers::{fractional_cover, integral_cover};
use hyperwidth::ctd::ctd_decide;
use hyperwidth::decomp::{DecompKind, WidthMode};
use hyperwidth::format::{
    parse_assignment, parse_bags, parse_decomposition, parse_hypergraph, serialize_bags,
    serialize_decomposition, serialize_hypergraph,
};
use hyperwidth::hardness::{intended_ghd, lift_width, parse_dimacs, reduce_3sat, Shift};
use hyperwidth::metrics::{structural_metrics, vc_dimension};
use hyperwidth::solve::{
    approx_fhd_bmip, check_fhd, check_ghd, fhd_to_ghd, fhw_approx_ptas, oracle_width, Answer,
    CertificateStrength, FhdOptions, GhdOptions, OracleKind, SolveResult, DEFAULT_BUDGET,
    DEFAULT_ORACLE_CAP,
};
use hyperwidth::{format_rat, parse_rat, Hypergraph, Rat};
use serde_json::json;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hyperwidth",
    version,
    about = "Generalized and fractional hypertree decompositions under structural restrictions"
)]
struct Cli {
    /// Emit machine-readable JSON on stdout
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized harness tooling; the deterministic subcommands
    /// accept and ignore it
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Element budget for candidate-bag generation
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Cap for the exponential searches (width oracle, VC dimension)
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural metrics: rank, degree, (multi-)intersection widths, VC dimension
    Stats {
        input: PathBuf,
        /// Largest multi-intersection arity to report
        #[arg(long, default_value_t = 4)]
        cmax: usize,
    },
    /// Optimal edge covers of a vertex subset
    Cover {
        input: PathBuf,
        /// Fractional cover (LP)
        #[arg(long)]
        frac: bool,
        /// Integral cover (exact set cover)
        #[arg(long)]
        int: bool,
        /// Comma-separated vertices (defaults to all)
        #[arg(long)]
        subset: Option<String>,
    },
    /// Candidate-bag generation
    Bags {
        input: PathBuf,
        /// coarse-bip | fine-bip | bmip | bdp | bip | rank | bmip-approx
        #[arg(long)]
        mode: String,
        #[arg(short)]
        k: String,
        #[arg(short)]
        c: Option<usize>,
        #[arg(short)]
        i: Option<usize>,
        #[arg(short)]
        d: Option<usize>,
        #[arg(short)]
        r: Option<usize>,
        #[arg(long)]
        eps: Option<String>,
        /// Fractional-part budget for the bip mode
        #[arg(long)]
        cfrac: Option<usize>,
        #[arg(short)]
        output: Option<PathBuf>,
    },
    /// CompNF candidate tree decomposition over a bag file
    Ctd {
        input: PathBuf,
        /// JSON array of vertex arrays
        #[arg(long)]
        bags: PathBuf,
        #[arg(short)]
        output: Option<PathBuf>,
    },
    /// Check a decomposition against a hypergraph
    Validate {
        input: PathBuf,
        decomposition: PathBuf,
        /// td | ghd | fhd | hd
        #[arg(long)]
        kind: String,
        #[arg(short)]
        k: String,
        /// Width measure for plain TDs: integral | fractional
        #[arg(long, default_value = "integral")]
        width_mode: String,
    },
    /// Decide ghw(H) <= k under bounded (multi-)intersection
    CheckGhd {
        input: PathBuf,
        #[arg(short)]
        k: usize,
        /// coarse-bip | fine-bip | bmip
        #[arg(long)]
        variant: Option<String>,
        #[arg(short)]
        c: Option<usize>,
        #[arg(short)]
        i: Option<usize>,
        #[arg(short)]
        output: Option<PathBuf>,
    },
    /// Decide fhw(H) <= k under bounded degree/intersection/rank
    CheckFhd {
        input: PathBuf,
        #[arg(short)]
        k: String,
        /// bdp | bip | rank (omit to auto-select)
        #[arg(long)]
        mode: Option<String>,
        #[arg(short)]
        i: Option<usize>,
        #[arg(short)]
        d: Option<usize>,
        #[arg(short)]
        r: Option<usize>,
        #[arg(long)]
        cfrac: Option<usize>,
        #[arg(short)]
        output: Option<PathBuf>,
    },
    /// Find an FHD of width <= k(1+eps) when fhw(H) <= k (bounded
    /// multi-intersections)
    ApproxFhd {
        input: PathBuf,
        #[arg(short)]
        k: String,
        #[arg(long)]
        eps: String,
        #[arg(short, default_value_t = 2)]
        c: usize,
        #[arg(short)]
        i: Option<usize>,
        #[arg(short)]
        output: Option<PathBuf>,
    },
    /// Bounded-width optimization: bisect to within eps of fhw(H) if
    /// fhw(H) <= K
    FhwOpt {
        input: PathBuf,
        #[arg(short = 'K')]
        k_bound: String,
        #[arg(long)]
        eps: String,
        #[arg(short, default_value_t = 2)]
        c: usize,
        #[arg(short)]
        i: Option<usize>,
        #[arg(short)]
        output: Option<PathBuf>,
    },
    /// Exact widths by exhaustive search (small instances)
    Oracle {
        input: PathBuf,
        /// ghw | fhw
        #[arg(long)]
        kind: String,
        #[arg(short)]
        output: Option<PathBuf>,
    },
    /// 3SAT reduction: DIMACS in, hypergraph out; optionally the witness
    /// decomposition for a satisfying assignment
    Reduce {
        input: PathBuf,
        #[arg(short)]
        output: PathBuf,
        /// Assignment JSON {"x1":true,...}
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Where the witness decomposition goes
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
    /// Raise both widths by an integer or rational shift
    Lift {
        input: PathBuf,
        /// l or r/q
        #[arg(long)]
        shift: String,
        #[arg(short)]
        output: Option<PathBuf>,
    },
    /// Convert an FHD into a GHD by replacing each fractional cover with an
    /// optimal integral one
    Convert {
        input: PathBuf,
        decomposition: PathBuf,
        #[arg(short)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<Hypergraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(parse_hypergraph(&text)?)
}

fn emit(path: &Option<PathBuf>, content: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, content).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{content}"),
    }
    Ok(())
}

fn answer_code(a: Answer) -> ExitCode {
    match a {
        Answer::Yes => ExitCode::from(0),
        Answer::No => ExitCode::from(1),
        Answer::Fail => ExitCode::from(2),
    }
}

fn cert_str(c: CertificateStrength) -> &'static str {
    match c {
        CertificateStrength::Absolute => "absolute",
        CertificateStrength::RelativeToParameters => "relative-to-parameters",
    }
}

fn report_solve(
    cli: &Cli,
    h: &Hypergraph,
    r: &SolveResult,
    out: &Option<PathBuf>,
) -> Result<ExitCode> {
    if let (Some(d), Some(path)) = (&r.decomposition, out) {
        fs::write(path, serialize_decomposition(h, d))?;
    }
    if cli.json {
        let j = json!({
            "answer": match r.answer { Answer::Yes => "yes", Answer::No => "no", Answer::Fail => "fail" },
            "width": r.width.as_ref().map(format_rat),
            "certificate": cert_str(r.certificate),
            "bags": r.diagnostics.bag_count,
            "params": r.diagnostics.params,
        });
        println!("{}", serde_json::to_string_pretty(&j)?);
    } else {
        match r.answer {
            Answer::Yes => println!(
                "yes, width {}",
                r.width.as_ref().map(format_rat).unwrap_or_default()
            ),
            Answer::No => println!("no (certificate: {})", cert_str(r.certificate)),
            Answer::Fail => println!("fail"),
        }
    }
    Ok(answer_code(r.answer))
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let budget = cli.budget.unwrap_or(DEFAULT_BUDGET);
    let cap = cli.cap.unwrap_or(DEFAULT_ORACLE_CAP);
    match &cli.command {
        Command::Stats { input, cmax } => {
            let h = load(input)?;
            let mut report = structural_metrics(&h, *cmax)?;
            let vc_cap = cli.cap.unwrap_or(16);
            report.vc = if h.n_vertices() <= vc_cap {
                Some(vc_dimension(&h, vc_cap)?.0)
            } else {
                None
            };
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!("vertices {:>6}", h.n_vertices());
                println!("edges    {:>6}", h.n_edges());
                println!("rank     {:>6}", report.rank);
                println!("degree   {:>6}", report.degree);
                println!("iwidth   {:>6}", report.iwidth);
                for (c, w) in &report.miwidth {
                    println!("miwidth[{c}] {w:>4}");
                }
                match report.vc {
                    Some(v) => println!("vc       {v:>6}"),
                    None => println!("vc        skipped (|V| above cap, raise --cap)"),
                }
            }
            Ok(ExitCode::from(0))
        }
        Command::Cover {
            input,
            frac,
            int,
            subset,
        } => {
            let h = load(input)?;
            if *frac == *int {
                bail!("choose exactly one of --frac / --int");
            }
            let set = match subset {
                Some(s) => {
                    let names: Vec<&str> = s.split(',').filter(|t| !t.is_empty()).collect();
                    h.vertex_set_of(&names)?
                }
                None => h.all_vertices(),
            };
            let (value, cover) = if *frac {
                fractional_cover(&h, &set)?
            } else {
                let (v, c) = integral_cover(&h, &set)?;
                (Rat::from_integer(v.into()), c)
            };
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "value": format_rat(&value),
                        "cover": cover.to_named(&h),
                    }))?
                );
            } else {
                println!("{}", format_rat(&value));
                for (name, w) in cover.to_named(&h) {
                    println!("  {name} {w}");
                }
            }
            Ok(ExitCode::from(0))
        }
        Command::Bags {
            input,
            mode,
            k,
            c,
            i,
            d,
            r,
            eps,
            cfrac,
            output,
        } => {
            let h = load(input)?;
            let k_rat = parse_rat(k)?;
            let metrics = structural_metrics(&h, c.unwrap_or(2).max(2))?;
            let set = match mode.as_str() {
                "coarse-bip" | "fine-bip" | "bmip" => {
                    let variant = match mode.as_str() {
                        "coarse-bip" => GhdVariant::CoarseBip,
                        "fine-bip" => GhdVariant::FineBip,
                        _ => GhdVariant::Bmip,
                    };
                    let k_int: usize = k
                        .parse()
                        .map_err(|_| anyhow!("ghd bag modes need an integer k"))?;
                    let cc = c.unwrap_or(2);
                    let ii = i.unwrap_or(if variant == GhdVariant::Bmip {
                        *metrics.miwidth.get(&cc).unwrap_or(&metrics.iwidth)
                    } else {
                        metrics.iwidth
                    });
                    ghd_candidate_bags(&h, k_int, cc, ii, variant, budget)?
                }
                "bdp" => fhd_candidate_bags(
                    &h,
                    &k_rat,
                    &FhdMode::Bdp {
                        d: d.unwrap_or(metrics.degree),
                    },
                    budget,
                )?,
                "bip" => fhd_candidate_bags(
                    &h,
                    &k_rat,
                    &FhdMode::Bip {
                        i: i.unwrap_or(metrics.iwidth),
                        c_frac: cfrac.unwrap_or(h.n_vertices()),
                    },
                    budget,
                )?,
                "rank" => fhd_candidate_bags(
                    &h,
                    &k_rat,
                    &FhdMode::Rank {
                        r: r.unwrap_or(metrics.rank),
                    },
                    budget,
                )?,
                "bmip-approx" => {
                    let eps = parse_rat(eps.as_deref().unwrap_or("1/3"))?;
                    let cc = c.unwrap_or(2);
                    fhd_candidate_bags(
                        &h,
                        &k_rat,
                        &FhdMode::BmipApprox {
                            c: cc,
                            i: i.unwrap_or(*metrics.miwidth.get(&cc).unwrap_or(&metrics.iwidth)),
                            eps,
                        },
                        budget,
                    )?
                }
                other => bail!("unknown bag mode {other:?}"),
            };
            let bags_json = serialize_bags(&h, &set.bags);
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "generator": set.provenance.generator,
                        "params": set.provenance.params,
                        "count": set.bags.len(),
                        "bags": serde_json::from_str::<serde_json::Value>(&bags_json)?,
                    }))?
                );
            } else {
                println!(
                    "{} bags from {} ({:?})",
                    set.bags.len(),
                    set.provenance.generator,
                    set.provenance.params
                );
            }
            if output.is_some() {
                emit(output, &bags_json)?;
            }
            Ok(ExitCode::from(0))
        }
        Command::Ctd {
            input,
            bags,
            output,
        } => {
            let h = load(input)?;
            let text = fs::read_to_string(bags)?;
            let family = parse_bags(&h, &text)?;
            match ctd_decide(&h, &family)? {
                Some(td) => {
                    let json = serialize_decomposition(&h, &td);
                    if output.is_some() {
                        emit(output, &json)?;
                        println!("accept ({} nodes)", td.n_nodes());
                    } else if cli.json {
                        println!("{json}");
                    } else {
                        println!("accept ({} nodes)", td.n_nodes());
                    }
                    Ok(ExitCode::from(0))
                }
                None => {
                    println!("none");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Validate {
            input,
            decomposition,
            kind,
            k,
            width_mode,
        } => {
            let h = load(input)?;
            let text = fs::read_to_string(decomposition)?;
            let mut d = parse_decomposition(&h, &text)?;
            d.kind = DecompKind::parse(kind)?;
            let mode = match width_mode.as_str() {
                "integral" => WidthMode::Integral,
                "fractional" => WidthMode::Fractional,
                other => bail!("unknown width mode {other:?}"),
            };
            let report = d.validate(&h, &parse_rat(k)?, mode)?;
            if cli.json {
                let j = json!({
                    "valid": report.is_valid(),
                    "width": format_rat(&report.width),
                    "violations": report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&j)?);
            } else if report.is_valid() {
                println!("valid, width {}", format_rat(&report.width));
            } else {
                println!("{report}");
            }
            Ok(ExitCode::from(if report.is_valid() { 0 } else { 1 }))
        }
        Command::CheckGhd {
            input,
            k,
            variant,
            c,
            i,
            output,
        } => {
            let h = load(input)?;
            let variant = match variant.as_deref() {
                None => None,
                Some("coarse-bip") => Some(GhdVariant::CoarseBip),
                Some("fine-bip") => Some(GhdVariant::FineBip),
                Some("bmip") => Some(GhdVariant::Bmip),
                Some(other) => bail!("unknown variant {other:?}"),
            };
            let r = check_ghd(
                &h,
                *k,
                &GhdOptions {
                    variant,
                    c: *c,
                    i: *i,
                    budget: Some(budget),
                },
            )?;
            report_solve(cli, &h, &r, output)
        }
        Command::CheckFhd {
            input,
            k,
            mode,
            i,
            d,
            r,
            cfrac,
            output,
        } => {
            let h = load(input)?;
            let metrics = structural_metrics(&h, 2)?;
            let mode = match mode.as_deref() {
                None => None,
                Some("bdp") => Some(FhdMode::Bdp {
                    d: d.unwrap_or(metrics.degree),
                }),
                Some("bip") => Some(FhdMode::Bip {
                    i: i.unwrap_or(metrics.iwidth),
                    c_frac: cfrac.unwrap_or(h.n_vertices()),
                }),
                Some("rank") => Some(FhdMode::Rank {
                    r: r.unwrap_or(metrics.rank),
                }),
                Some(other) => bail!("unknown mode {other:?}"),
            };
            let res = check_fhd(
                &h,
                &parse_rat(k)?,
                &FhdOptions {
                    mode,
                    budget: Some(budget),
                },
            )?;
            report_solve(cli, &h, &res, output)
        }
        Command::ApproxFhd {
            input,
            k,
            eps,
            c,
            i,
            output,
        } => {
            let h = load(input)?;
            let ii = match i {
                Some(i) => *i,
                None => *structural_metrics(&h, (*c).max(2))?
                    .miwidth
                    .get(&(*c).max(2))
                    .unwrap(),
            };
            let r = approx_fhd_bmip(&h, &parse_rat(k)?, &parse_rat(eps)?, *c, ii, budget)?;
            report_solve(cli, &h, &r, output)
        }
        Command::FhwOpt {
            input,
            k_bound,
            eps,
            c,
            i,
            output,
        } => {
            let h = load(input)?;
            let ii = match i {
                Some(i) => *i,
                None => *structural_metrics(&h, (*c).max(2))?
                    .miwidth
                    .get(&(*c).max(2))
                    .unwrap(),
            };
            let out = fhw_approx_ptas(&h, &parse_rat(k_bound)?, &parse_rat(eps)?, *c, ii, budget)?;
            if !cli.json && out.result.answer == Answer::Yes {
                println!("rounds {} (bound {})", out.rounds, out.round_bound);
            }
            report_solve(cli, &h, &out.result, output)
        }
        Command::Oracle {
            input,
            kind,
            output,
        } => {
            let h = load(input)?;
            let kind = match kind.as_str() {
                "ghw" => OracleKind::Ghw,
                "fhw" => OracleKind::Fhw,
                other => bail!("unknown oracle kind {other:?}"),
            };
            let (width, d) = oracle_width(&h, kind, cap)?;
            if let Some(path) = output {
                fs::write(path, serialize_decomposition(&h, &d))?;
            }
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "width": format_rat(&width),
                        "nodes": d.n_nodes(),
                    }))?
                );
            } else {
                println!("{}", format_rat(&width));
            }
            Ok(ExitCode::from(0))
        }
        Command::Reduce {
            input,
            output,
            witness,
            witness_out,
        } => {
            let text = fs::read_to_string(input)?;
            let phi = parse_dimacs(&text)?;
            let (h, layout) = reduce_3sat(&phi)?;
            fs::write(output, serialize_hypergraph(&h))?;
            if let Some(w) = witness {
                let sigma = parse_assignment(phi.n_vars, &fs::read_to_string(w)?)?;
                let d = intended_ghd(&h, &layout, &phi, &sigma)?;
                let json = serialize_decomposition(&h, &d);
                match witness_out {
                    Some(p) => fs::write(p, json)?,
                    None => println!("{json}"),
                }
            }
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "vertices": h.n_vertices(),
                        "edges": h.n_edges(),
                    }))?
                );
            } else {
                println!(
                    "{} vertices, {} edges -> {}",
                    h.n_vertices(),
                    h.n_edges(),
                    output.display()
                );
            }
            Ok(ExitCode::from(0))
        }
        Command::Lift {
            input,
            shift,
            output,
        } => {
            let h = load(input)?;
            let shift = match shift.split_once('/') {
                Some((r, q)) => Shift::Rational {
                    r: r.trim().parse().context("bad shift numerator")?,
                    q: q.trim().parse().context("bad shift denominator")?,
                },
                None => Shift::Integer(shift.trim().parse().context("bad shift")?),
            };
            let lifted = lift_width(&h, shift)?;
            emit(output, &serialize_hypergraph(&lifted))?;
            Ok(ExitCode::from(0))
        }
        Command::Convert {
            input,
            decomposition,
            output,
        } => {
            let h = load(input)?;
            let mut d = parse_decomposition(&h, &fs::read_to_string(decomposition)?)?;
            d.kind = DecompKind::Fhd;
            let (ghd, report) = fhd_to_ghd(&h, &d)?;
            if let Some(p) = output {
                fs::write(p, serialize_decomposition(&h, &ghd))?;
            }
            if cli.json {
                let j = json!({
                    "width": format_rat(&ghd.cover_width()),
                    "vc": report.vc,
                    "ceiling_log2": report.ceiling_log2,
                    "ceiling_ln": report.ceiling_ln,
                    "per_bag": report.per_bag.iter().map(|b| json!({
                        "node": b.node,
                        "rho": b.rho,
                        "rho_star": format_rat(&b.rho_star),
                        "ratio": format_rat(&b.ratio),
                    })).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&j)?);
            } else {
                println!("width {}", format_rat(&ghd.cover_width()));
                for b in &report.per_bag {
                    println!(
                        "  {}: rho {} vs rho* {} (ratio {})",
                        b.node,
                        b.rho,
                        format_rat(&b.rho_star),
                        format_rat(&b.ratio)
                    );
                }
                match (report.ceiling_log2, report.ceiling_ln) {
                    (Some(l2), Some(ln)) => println!(
                        "  informational ratio ceiling: {l2:.3} (log2) / {ln:.3} (ln); not asserted"
                    ),
                    _ => println!("  informational ratio ceiling skipped (VC cap exceeded)"),
                }
            }
            Ok(ExitCode::from(0))
        }
    }
}
