//! Command-line front end: every predicate, construction, search, and the
//! claim verifier, over the JSON formats of the library.
//!
//! Exit status contract: 0 = predicate true / construction succeeded / all
//! claims pass; 1 = predicate false / witness absent / a claim failed;
//! 2 = usage or input error. Results go to standard output as JSON,
//! diagnostics to standard error.
//!
//! Argument values named `JSON` accept inline JSON, `@path` to read a file,
//! or `-` to read standard input. Defaults may be overridden by a JSON file
//! named in the `FLEXCAT_CONFIG` environment variable; explicit flags win.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::json;

use flexcat::catalysis::{
    brute_force_catalyst_search, cat_pm_decide, cat_with, chain_to_multicopy, flex_cycle_search,
    multicopy_to_chain, CatalystCycle, SearchBounds, TTInstance, TTState,
};
use flexcat::paperbench::{self, RunConfig};
use flexcat::polynomial::{construct_negativity_n, IntPolynomial, NegativityResult, ScanState};
use flexcat::{Error, GMultiset, GroupElement, ProbVector};

#[derive(Parser)]
#[command(
    name = "flexcat",
    version,
    about = "Exact catalysis toolkit",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether spectrum U is majorized by spectrum V (u < v).
    Majorize {
        /// Probability vector (JSON array of rationals or decimals)
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Catalytic LOCC check: A (x) C majorized by B (x) C.
    LoccCat {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Catalyst spectrum
        #[arg(long)]
        c: String,
    },
    /// LU equivalence: equal nonzero spectra up to reordering.
    LuEqual {
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Convolve two multisets.
    Msum {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Exact deconvolution: find D with B + D = S.
    Deconvolve {
        /// The composite multiset
        #[arg(long)]
        s: String,
        /// The divisor multiset
        #[arg(long)]
        b: String,
    },
    /// Build the flexible-catalyst edge matrix over a catalyst set and find
    /// a shortest cycle.
    FlexCycle {
        #[arg(long)]
        tt: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// JSON array of catalyst states
        #[arg(long)]
        catalysts: String,
        /// Allow per-edge discards (extraction mode)
        #[arg(long)]
        extraction: bool,
    },
    /// Decide catalysis for magnitude-phase multisets.
    CatPm {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Turn a multicopy transformation into an explicit catalyst chain.
    MulticopyChain {
        #[arg(long)]
        tt: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Base catalyst
        #[arg(long)]
        c: String,
        /// Number of copies
        #[arg(long)]
        n: u32,
        #[arg(long)]
        extraction: bool,
    },
    /// Aggregate a catalyst cycle into a single multicopy statement.
    ChainMulticopy {
        #[arg(long)]
        tt: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// JSON catalyst cycle ({"catalysts":[...],"discards":[...]})
        #[arg(long)]
        cycle: String,
    },
    /// Least n with poly^n nonnegative, searched up to a bound.
    PolyNeg {
        #[arg(long)]
        poly: String,
        /// Search bound (default 20, configurable)
        #[arg(long)]
        max: Option<u32>,
    },
    /// Construct a quartic with negativity exactly n.
    ConstructNeg {
        #[arg(long)]
        n: u32,
    },
    /// Scan nonnegativity of p^n and q*p^n for n = 0..=max, with a
    /// JSON-lines log and a resumable checkpoint.
    PolyScan {
        #[arg(long, required_unless_present = "resume")]
        p: Option<String>,
        #[arg(long, required_unless_present = "resume")]
        q: Option<String>,
        #[arg(long)]
        max: u32,
        /// Append records here (default: standard output)
        #[arg(long)]
        log: Option<PathBuf>,
        /// Write the final scan state here
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Continue from a previously written checkpoint
        #[arg(long)]
        resume: Option<PathBuf>,
    },
    /// All tensor factorizations of a spectrum (empty = irreducible).
    Factorize {
        #[arg(long)]
        u: String,
        #[arg(long, default_value_t = 2)]
        min_factor: usize,
    },
    /// Brute-force catalyst search over a bounded candidate space.
    SearchCat {
        #[arg(long)]
        tt: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// JSON array of group elements
        #[arg(long)]
        pool: String,
        #[arg(long)]
        max_support: usize,
        #[arg(long)]
        max_mult: u64,
        /// Candidate cap (default 10^7, configurable)
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Re-verify the bundled claims and print a report.
    VerifyPaper {
        /// Also write the full JSON report here
        #[arg(long)]
        json: Option<PathBuf>,
        /// Comma-separated claim ids to run (default: all)
        #[arg(long)]
        claims: Option<String>,
        /// Negativity construction sizes, comma-separated
        #[arg(long)]
        anyposint: Option<String>,
        /// Chain-witness sizes, comma-separated
        #[arg(long)]
        arbnumreq: Option<String>,
        #[arg(long)]
        scan_max_uni: Option<u32>,
        #[arg(long)]
        scan_max_bi: Option<u32>,
    },
}

/// Optional defaults file named by FLEXCAT_CONFIG.
#[derive(Debug, Default, Deserialize)]
#[serde(default)]
struct FileConfig {
    verify: Option<RunConfig>,
    search_cap: Option<u64>,
    poly_neg_max: Option<u32>,
}

fn load_config() -> anyhow::Result<FileConfig> {
    match std::env::var_os("FLEXCAT_CONFIG") {
        None => Ok(FileConfig::default()),
        Some(path) => {
            let text = fs::read_to_string(&path).with_context(|| {
                format!("reading FLEXCAT_CONFIG file {}", path.to_string_lossy())
            })?;
            serde_json::from_str(&text)
                .with_context(|| format!("parsing FLEXCAT_CONFIG file {}", path.to_string_lossy()))
        }
    }
}

/// Resolve an argument value: inline text, `@file`, or `-` for stdin.
fn read_value(arg: &str) -> anyhow::Result<String> {
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading standard input")?;
        Ok(buf)
    } else if let Some(path) = arg.strip_prefix('@') {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    } else {
        Ok(arg.to_string())
    }
}

fn parse_arg<T: DeserializeOwned>(arg: &str, what: &str) -> anyhow::Result<T> {
    let text = read_value(arg)?;
    serde_json::from_str(&text).with_context(|| format!("invalid {what}"))
}

/// Transformation theory values may be a bare string or {"tt": "..."}.
fn parse_tt(arg: &str) -> anyhow::Result<TTInstance> {
    let text = read_value(arg)?;
    let trimmed = text.trim();
    #[derive(Deserialize)]
    struct Wrapper {
        tt: TTInstance,
    }
    if trimmed.starts_with('{') {
        let w: Wrapper = serde_json::from_str(trimmed).context("invalid transformation theory")?;
        return Ok(w.tt);
    }
    if trimmed.starts_with('"') {
        return serde_json::from_str(trimmed).context("invalid transformation theory");
    }
    serde_json::from_str(&format!("\"{trimmed}\"")).context("invalid transformation theory")
}

fn parse_u32_list(arg: &str) -> anyhow::Result<Vec<u32>> {
    arg.split(',')
        .map(|s| s.trim().parse::<u32>().context("invalid integer list"))
        .collect()
}

fn emit(value: &serde_json::Value) {
    println!("{value}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let config = load_config()?;
    match cli.command {
        Command::Majorize { u, v } => {
            let u: ProbVector = parse_arg(&u, "probability vector --u")?;
            let v: ProbVector = parse_arg(&v, "probability vector --v")?;
            let violation = u.first_majorization_violation(&v);
            let ok = violation.is_none();
            emit(&json!({ "majorizes": ok, "first_violation": violation }));
            Ok(if ok { 0 } else { 1 })
        }
        Command::LoccCat { a, b, c } => {
            let a: ProbVector = parse_arg(&a, "probability vector --a")?;
            let b: ProbVector = parse_arg(&b, "probability vector --b")?;
            let c: ProbVector = parse_arg(&c, "probability vector --c")?;
            let lhs = a.tensor(&c);
            let rhs = b.tensor(&c);
            let violation = lhs.first_majorization_violation(&rhs);
            let ok = violation.is_none();
            emit(&json!({ "possible": ok, "first_violation": violation }));
            Ok(if ok { 0 } else { 1 })
        }
        Command::LuEqual { u, v } => {
            let u: ProbVector = parse_arg(&u, "probability vector --u")?;
            let v: ProbVector = parse_arg(&v, "probability vector --v")?;
            let ok = u.lu_equivalent(&v);
            emit(&json!({ "lu_equivalent": ok }));
            Ok(if ok { 0 } else { 1 })
        }
        Command::Msum { a, b } => {
            let a: GMultiset = parse_arg(&a, "multiset --a")?;
            let b: GMultiset = parse_arg(&b, "multiset --b")?;
            let sum = a.msum(&b)?;
            emit(&serde_json::to_value(&sum)?);
            Ok(0)
        }
        Command::Deconvolve { s, b } => {
            let s: GMultiset = parse_arg(&s, "multiset --s")?;
            let b: GMultiset = parse_arg(&b, "multiset --b")?;
            let quotient = s.deconvolve(&b)?;
            let found = quotient.is_some();
            emit(&json!({ "quotient": quotient }));
            Ok(if found { 0 } else { 1 })
        }
        Command::FlexCycle {
            tt,
            a,
            b,
            catalysts,
            extraction,
        } => {
            let tt = parse_tt(&tt)?;
            let a: TTState = parse_arg(&a, "state --a")?;
            let b: TTState = parse_arg(&b, "state --b")?;
            let catalysts: Vec<TTState> = parse_arg(&catalysts, "catalyst list")?;
            let report = flex_cycle_search(tt, &a, &b, &catalysts, extraction, None)?;
            let ok = report.is_flex_catalytic;
            emit(&serde_json::to_value(&report)?);
            Ok(if ok { 0 } else { 1 })
        }
        Command::CatPm { a, b } => {
            let a: GMultiset = parse_arg(&a, "multiset --a")?;
            let b: GMultiset = parse_arg(&b, "multiset --b")?;
            match cat_pm_decide(&a, &b)? {
                Some(result) => {
                    emit(&json!({
                        "found": true,
                        "catalyst": result.catalyst,
                        "translation": result.translation,
                    }));
                    Ok(0)
                }
                None => {
                    emit(&json!({ "found": false }));
                    Ok(1)
                }
            }
        }
        Command::MulticopyChain {
            tt,
            a,
            b,
            c,
            n,
            extraction,
        } => {
            let tt = parse_tt(&tt)?;
            let a: TTState = parse_arg(&a, "state --a")?;
            let b: TTState = parse_arg(&b, "state --b")?;
            let c: TTState = parse_arg(&c, "state --c")?;
            match multicopy_to_chain(tt, &a, &b, &c, n, extraction) {
                Ok(cycle) => {
                    emit(&json!({ "feasible": true, "cycle": cycle }));
                    Ok(0)
                }
                Err(Error::NotMulticopyFeasible(reason)) => {
                    emit(&json!({ "feasible": false, "reason": reason }));
                    Ok(1)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::ChainMulticopy { tt, a, b, cycle } => {
            let tt = parse_tt(&tt)?;
            let a: TTState = parse_arg(&a, "state --a")?;
            let b: TTState = parse_arg(&b, "state --b")?;
            let cycle: CatalystCycle = parse_arg(&cycle, "catalyst cycle")?;
            match chain_to_multicopy(tt, &a, &b, &cycle) {
                Ok(statement) => {
                    let ok = statement.holds;
                    emit(&json!({ "valid": true, "statement": statement }));
                    Ok(if ok { 0 } else { 1 })
                }
                Err(Error::InvalidCycle(reason)) => {
                    emit(&json!({ "valid": false, "reason": reason }));
                    Ok(1)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::PolyNeg { poly, max } => {
            let poly: IntPolynomial = parse_arg(&poly, "polynomial")?;
            let bound = max.or(config.poly_neg_max).unwrap_or(20);
            match poly.negativity(bound)? {
                NegativityResult::Finite(n) => {
                    emit(&json!({ "negativity": n }));
                    Ok(0)
                }
                NegativityResult::ExceedsBound(bound) => {
                    emit(&json!({ "negativity": null, "exceeds_bound": bound }));
                    Ok(1)
                }
            }
        }
        Command::ConstructNeg { n } => {
            let p = construct_negativity_n(n)?;
            emit(&serde_json::to_value(&p)?);
            Ok(0)
        }
        Command::PolyScan {
            p,
            q,
            max,
            log,
            checkpoint,
            resume,
        } => run_poly_scan(p, q, max, log, checkpoint, resume),
        Command::Factorize { u, min_factor } => {
            let u: ProbVector = parse_arg(&u, "probability vector --u")?;
            let factorizations = u.tensor_factorizations(min_factor)?;
            let found = !factorizations.is_empty();
            emit(&json!({ "factorizations": factorizations }));
            Ok(if found { 0 } else { 1 })
        }
        Command::SearchCat {
            tt,
            a,
            b,
            pool,
            max_support,
            max_mult,
            cap,
        } => {
            let tt = parse_tt(&tt)?;
            let a: TTState = parse_arg(&a, "state --a")?;
            let b: TTState = parse_arg(&b, "state --b")?;
            let pool: Vec<GroupElement> = parse_arg(&pool, "element pool")?;
            let mut bounds = SearchBounds::new(max_support, max_mult);
            if let Some(cap) = cap.or(config.search_cap) {
                bounds.candidate_cap = cap;
            }
            match brute_force_catalyst_search(tt, &a, &b, &pool, &bounds)? {
                Some(catalyst) => {
                    // report the verification alongside the witness
                    debug_assert!(cat_with(tt, &a, &b, &catalyst)?);
                    emit(&json!({ "found": true, "catalyst": catalyst }));
                    Ok(0)
                }
                None => {
                    emit(&json!({ "found": false }));
                    Ok(1)
                }
            }
        }
        Command::VerifyPaper {
            json: json_path,
            claims,
            anyposint,
            arbnumreq,
            scan_max_uni,
            scan_max_bi,
        } => {
            let mut run_config = config.verify.unwrap_or_default();
            if let Some(ns) = anyposint {
                run_config.anyposint_ns = parse_u32_list(&ns)?;
            }
            if let Some(ns) = arbnumreq {
                run_config.arbnumreq_ns = parse_u32_list(&ns)?;
            }
            if let Some(n) = scan_max_uni {
                run_config.scan_univariate_max = n;
            }
            if let Some(n) = scan_max_bi {
                run_config.scan_bivariate_max = n;
            }
            let mut reports = paperbench::run_all(&run_config)?;
            if let Some(selected) = claims {
                let ids: Vec<&str> = selected.split(',').map(str::trim).collect();
                for id in &ids {
                    if !reports.iter().any(|r| r.claim == *id) {
                        bail!("unknown claim id {id:?}");
                    }
                }
                reports.retain(|r| ids.contains(&r.claim.as_str()));
            }
            print!("{}", paperbench::render_table(&reports));
            if let Some(path) = json_path {
                let text = serde_json::to_string_pretty(&reports)?;
                fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(if paperbench::all_non_evidence_pass(&reports) {
                0
            } else {
                1
            })
        }
    }
}

fn run_poly_scan(
    p: Option<String>,
    q: Option<String>,
    max: u32,
    log: Option<PathBuf>,
    checkpoint: Option<PathBuf>,
    resume: Option<PathBuf>,
) -> anyhow::Result<u8> {
    let mut state = match resume {
        Some(path) => {
            let text = fs::read_to_string(&path)
                .with_context(|| format!("reading checkpoint {}", path.display()))?;
            serde_json::from_str::<ScanState>(&text)
                .with_context(|| format!("parsing checkpoint {}", path.display()))?
        }
        None => {
            let p: IntPolynomial =
                parse_arg(p.as_deref().expect("clap enforces --p"), "polynomial --p")?;
            let q: IntPolynomial =
                parse_arg(q.as_deref().expect("clap enforces --q"), "polynomial --q")?;
            ScanState::new(p, q)?
        }
    };

    let mut log_file: Box<dyn Write> = match &log {
        Some(path) => Box::new(
            fs::OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .with_context(|| format!("opening log {}", path.display()))?,
        ),
        None => Box::new(std::io::stdout()),
    };

    let from_n = state.next_n;
    let mut records = Vec::new();
    while state.next_n <= max {
        let record = state.step()?;
        writeln!(log_file, "{}", serde_json::to_string(&record)?)?;
        records.push(record);
    }
    log_file.flush()?;

    if let Some(path) = &checkpoint {
        fs::write(path, serde_json::to_string(&state)?)
            .with_context(|| format!("writing checkpoint {}", path.display()))?;
    }

    let first_p = records
        .iter()
        .find(|r| r.n >= 1 && r.p_pow_nonneg)
        .map(|r| r.n);
    let first_q = records.iter().find(|r| !r.q_p_pow_nonneg).map(|r| r.n);
    let summary = json!({
        "from_n": from_n,
        "to_n": max,
        "records_emitted": records.len(),
        "first_p_pow_nonneg": first_p,
        "first_q_failure": first_q,
        "checkpoint_next_n": state.next_n,
    });
    if log.is_some() {
        emit(&summary);
    } else {
        eprintln!("{summary}");
    }
    Ok(0)
}
