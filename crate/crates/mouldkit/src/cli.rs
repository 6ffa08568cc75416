//! Command-line front end: one verb per capability, deterministic output,
//! JSON with --json and human tables otherwise. Exit status 0 on
//! success or check-pass, 1 on check-fail, 2 on usage errors.

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::eisenstein::{eisenstein_q, indices_up_to_weight, rank_check, IterEis};
use crate::freelie::{CPoly, NCPoly};
use crate::mould::{
    self, alternality_failure, bialternality_constants, is_delta_bialternal, is_push_invariant,
    is_push_neutral, ma, MouldJson, PolyMould, RatMould,
};
use crate::relations::{
    eds2_space, eps_bracket_mould, eps_bracket_rank_table, fs2_space, verify_paper_examples,
    DimensionReport,
};
use crate::{Error, Result};

#[derive(Parser)]
#[command(name = "mouldkit", version, about = "exact mould calculus toolkit")]
struct Cli {
    /// Emit machine-readable JSON instead of human tables
    #[arg(long, global = true)]
    json: bool,
    /// Weight truncation cap
    #[arg(long, global = true, default_value_t = 12)]
    max_weight: u32,
    /// Depth truncation cap for moulds
    #[arg(long, global = true, default_value_t = 5)]
    max_depth: usize,
    /// q-expansion order
    #[arg(long, global = true, default_value_t = 30)]
    q_order: u32,
    /// Seed for any randomized check (falls back to MOULDKIT_SEED)
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for table generation
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Encode a c-alphabet polynomial as a polynomial mould
    Ma(MaArgs),
    /// The depth-2 mould of [eps_{2j}, eps_{2k}](a)
    BracketEps { two_j: u32, two_k: u32 },
    /// Symmetry checks on moulds and Lie tests on words
    Check(CheckArgs),
    /// Dimension and rank tables
    Dims(DimsArgs),
    /// Eisenstein expansions, iterated integrals and rank checks
    Eisenstein(EisArgs),
    /// Regression suite against the reference values
    Verify(VerifyArgs),
    /// Mould operators
    Op(OpArgs),
}

#[derive(Args)]
struct MaArgs {
    /// c-polynomial text, e.g. "c2*c1-c1*c2"
    #[arg(long, conflicts_with = "file")]
    input: Option<String>,
    /// File containing the c-polynomial text
    #[arg(long)]
    file: Option<String>,
}

#[derive(Args)]
struct CheckArgs {
    /// alternal | bialternal | delta-bialternal | push-invariant |
    /// push-neutral | lie
    what: String,
    /// JSON mould file for the mould checks
    #[arg(long)]
    mould_file: Option<String>,
    /// Inline input: mould JSON, or word-polynomial text for `lie`
    #[arg(long)]
    input: Option<String>,
}

#[derive(Args)]
struct DimsArgs {
    /// eds2 | fs2 | rank-table
    what: String,
}

#[derive(Args)]
struct EisArgs {
    /// gseries | iter | rank
    what: String,
    /// Series index k for gseries (the weight-2k series)
    #[arg(long)]
    k: Option<u32>,
    /// Multi-index for iter, written like "0,2"
    #[arg(long)]
    index: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// currently only `paper`
    what: String,
    /// Run the deep q-order-30 comparisons
    #[arg(long)]
    heavy: bool,
}

#[derive(Args)]
struct OpArgs {
    /// mu | lu | push | swap | dar | delta | arit | arat | darit
    what: String,
    #[arg(long)]
    mould_file: String,
    /// Second operand for binary operators
    #[arg(long)]
    mould_file2: Option<String>,
    /// Apply the inverse for dar/delta/swap
    #[arg(long)]
    inverse: bool,
}

pub fn run<I>(argv: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    let mut args = vec!["mouldkit".to_string()];
    args.extend(argv);
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            // clap prints help/version through the error path; those are
            // not usage errors
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn read_mould(args_file: &Option<String>, inline: &Option<String>) -> Result<MouldJson> {
    let text = match (args_file, inline) {
        (Some(f), _) => std::fs::read_to_string(f)
            .map_err(|e| Error::Parse(format!("cannot read {f}: {e}")))?,
        (None, Some(s)) => s.clone(),
        (None, None) => {
            return Err(Error::Parse(
                "a mould is required (--mould-file or --input)".into(),
            ))
        }
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("bad mould JSON: {e}")))
}

fn print_poly_mould(m: &PolyMould, json_out: bool) {
    if json_out {
        println!("{}", serde_json::to_string(&m.to_json()).unwrap());
    } else {
        for r in 0..=m.cap() {
            println!("depth {r}: {}", m.value(r).to_text());
        }
    }
}

fn print_rat_mould(m: &RatMould, json_out: bool) {
    if json_out {
        println!("{}", serde_json::to_string(&m.to_json()).unwrap());
    } else {
        for r in 0..=m.cap() {
            println!("depth {r}: {}", m.value(r));
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    match &cli.verb {
        Verb::Ma(a) => {
            let text = match (&a.input, &a.file) {
                (Some(t), _) => t.clone(),
                (None, Some(f)) => std::fs::read_to_string(f)
                    .map_err(|e| Error::Parse(format!("cannot read {f}: {e}")))?,
                (None, None) => return Err(Error::Parse("--input or --file required".into())),
            };
            let p = CPoly::parse(&text, cli.max_weight)?;
            let m = ma(&p, cli.max_depth);
            print_poly_mould(&m, cli.json);
            Ok(0)
        }
        Verb::BracketEps { two_j, two_k } => {
            let m = eps_bracket_mould(*two_j, *two_k)?;
            print_poly_mould(&m, cli.json);
            Ok(0)
        }
        Verb::Check(a) => run_check(cli, a),
        Verb::Dims(a) => run_dims(cli, a),
        Verb::Eisenstein(a) => run_eisenstein(cli, a),
        Verb::Verify(a) => {
            if a.what != "paper" {
                return Err(Error::Parse(format!("unknown verify target `{}`", a.what)));
            }
            let report = verify_paper_examples(a.heavy)?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                for it in &report.items {
                    println!(
                        "{} {} [{}]{}",
                        if it.pass { "PASS" } else { "FAIL" },
                        it.item,
                        it.expected_source,
                        it.details
                            .as_ref()
                            .map(|d| format!(" -- {d}"))
                            .unwrap_or_default()
                    );
                }
                println!(
                    "sigma: {}",
                    report
                        .sigma
                        .map(|s| if s >= 0 { "+1" } else { "-1" })
                        .unwrap_or("unresolved")
                );
                println!("all pass: {}", report.all_pass);
            }
            Ok(if report.all_pass { 0 } else { 1 })
        }
        Verb::Op(a) => run_op(cli, a),
    }
}

fn run_check(cli: &Cli, a: &CheckArgs) -> Result<i32> {
    let (pass, details): (bool, serde_json::Value) = match a.what.as_str() {
        "lie" => {
            let text = match (&a.input, &a.mould_file) {
                (Some(t), _) => t.clone(),
                (None, Some(f)) => std::fs::read_to_string(f)
                    .map_err(|e| Error::Parse(format!("cannot read {f}: {e}")))?,
                (None, None) => return Err(Error::Parse("--input required for lie".into())),
            };
            let p = NCPoly::parse(&text, cli.max_weight)?;
            match p.lie_defect() {
                None => (true, json!(null)),
                Some(w) => (false, json!({ "failing_weight": w })),
            }
        }
        "alternal" => {
            let m = read_mould(&a.mould_file, &a.input)?.to_rat()?;
            match alternality_failure(&m) {
                None => (true, json!(null)),
                Some(f) => (false, json!({ "depth": f.depth, "split": f.split })),
            }
        }
        "bialternal" => {
            let m = read_mould(&a.mould_file, &a.input)?.to_rat()?;
            match bialternality_constants(&m) {
                Some(kappas) => (
                    true,
                    json!({
                        "constants": kappas
                            .iter()
                            .map(|(r, k)| json!({"depth": r, "kappa": k.to_string()}))
                            .collect::<Vec<_>>()
                    }),
                ),
                None => (false, json!(null)),
            }
        }
        "delta-bialternal" => {
            let m = read_mould(&a.mould_file, &a.input)?.to_poly()?;
            (is_delta_bialternal(&m)?, json!(null))
        }
        "push-invariant" => {
            let m = read_mould(&a.mould_file, &a.input)?.to_rat()?;
            (is_push_invariant(&m), json!(null))
        }
        "push-neutral" => {
            let m = read_mould(&a.mould_file, &a.input)?.to_rat()?;
            (is_push_neutral(&m), json!(null))
        }
        other => return Err(Error::Parse(format!("unknown check `{other}`"))),
    };
    if cli.json {
        println!(
            "{}",
            json!({"check": a.what, "pass": pass, "details": details})
        );
    } else {
        println!("{}: {}", a.what, if pass { "pass" } else { "fail" });
    }
    Ok(if pass { 0 } else { 1 })
}

fn dims_rows<F>(max_weight: u32, jobs: usize, f: F) -> Result<Vec<DimensionReport>>
where
    F: Fn(u32) -> Result<DimensionReport> + Sync,
{
    let weights: Vec<u32> = (5..=max_weight).step_by(2).collect();
    if jobs <= 1 || weights.len() <= 1 {
        return weights.into_iter().map(f).collect();
    }
    let chunk_size = weights.len().div_ceil(jobs);
    let chunks: Vec<Vec<u32>> = weights.chunks(chunk_size).map(|c| c.to_vec()).collect();
    let mut rows: Vec<DimensionReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|chunk| scope.spawn(|| chunk.iter().map(|&n| f(n)).collect::<Result<Vec<_>>>()))
            .collect();
        let mut all = Vec::new();
        for h in handles {
            match h.join() {
                Ok(Ok(v)) => all.extend(v),
                Ok(Err(e)) => return Err(e),
                Err(_) => return Err(Error::Domain("worker panicked".into())),
            }
        }
        Ok(all)
    })?;
    rows.sort_by_key(|r| r.weight);
    Ok(rows)
}

fn run_dims(cli: &Cli, a: &DimsArgs) -> Result<i32> {
    let max_weight = cli.max_weight.max(5);
    match a.what.as_str() {
        "eds2" | "fs2" => {
            let rows = if a.what == "eds2" {
                dims_rows(max_weight, cli.jobs, eds2_space)?
            } else {
                dims_rows(max_weight, cli.jobs, fs2_space)?
            };
            if cli.json {
                let v: Vec<_> = rows
                    .iter()
                    .map(|r| {
                        json!({
                            "weight": r.weight,
                            "dimension": r.computed,
                            "formula": r.formula,
                            "matches": r.matches,
                            "basis": r.basis.iter().map(|p| p.to_text()).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string(&v).unwrap());
            } else {
                println!("weight\tdim\tformula\tmatch");
                for r in &rows {
                    println!("{}\t{}\t{}\t{}", r.weight, r.computed, r.formula, r.matches);
                }
            }
            Ok(if rows.iter().all(|r| r.matches) { 0 } else { 1 })
        }
        "rank-table" => {
            let rows = eps_bracket_rank_table(max_weight)?;
            if cli.json {
                let v: Vec<_> = rows
                    .iter()
                    .map(|r| {
                        json!({
                            "weight": r.weight,
                            "brackets": r.brackets,
                            "rank": r.rank,
                            "relations": r.relations,
                            "brackets_formula": r.brackets_formula,
                            "rank_formula": r.rank_formula,
                            "relations_formula": r.relations_formula,
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string(&v).unwrap());
            } else {
                println!("weight\tbrackets\trank\trelations");
                for r in &rows {
                    println!("{}\t{}\t{}\t{}", r.weight, r.brackets, r.rank, r.relations);
                }
            }
            Ok(0)
        }
        other => Err(Error::Parse(format!("unknown dims table `{other}`"))),
    }
}

fn parse_index(s: &str) -> Result<Vec<u32>> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad index entry `{t}`")))
        })
        .collect()
}

fn run_eisenstein(cli: &Cli, a: &EisArgs) -> Result<i32> {
    match a.what.as_str() {
        "gseries" => {
            let k = a
                .k
                .ok_or_else(|| Error::Parse("--k required for gseries".into()))?;
            let s = eisenstein_q(k, cli.q_order);
            if cli.json {
                println!(
                    "{}",
                    json!({"k": k, "series": serde_json::to_value(s.expansion.to_json()).unwrap()})
                );
            } else {
                println!("n,m,coefficient");
                for (&(n, m), c) in s.expansion.coeffs() {
                    println!("{n},{m},{}", crate::scalar::rational::format_rational(c));
                }
            }
            Ok(0)
        }
        "iter" => {
            let idx = parse_index(
                a.index
                    .as_deref()
                    .ok_or_else(|| Error::Parse("--index required for iter".into()))?,
            )?;
            let m_cap = (idx.len() as u32).max(1);
            let ctx = IterEis::new(cli.q_order, m_cap);
            let s = ctx.integral(&idx);
            if cli.json {
                println!(
                    "{}",
                    json!({"index": idx, "series": serde_json::to_value(s.to_json()).unwrap()})
                );
            } else {
                println!("n,m,coefficient");
                for (&(n, m), c) in s.coeffs() {
                    println!("{n},{m},{}", crate::scalar::rational::format_rational(c));
                }
            }
            Ok(0)
        }
        "rank" => {
            let bound = cli.max_weight.min(8);
            let fam = indices_up_to_weight(bound);
            let ctx = IterEis::new(cli.q_order.max(20), bound.max(4));
            let r = rank_check(&ctx, &fam);
            let full = r.sufficient && r.rank == fam.len();
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "weight_bound": bound,
                        "indices": r.indices,
                        "rank": r.rank,
                        "slots": r.slots,
                        "sufficient": r.sufficient,
                        "full_rank": full,
                    })
                );
            } else {
                println!(
                    "indices: {}, rank: {}, slots: {}, full rank: {full}",
                    r.indices, r.rank, r.slots
                );
                if !r.sufficient {
                    eprintln!("warning: truncation too small to separate the family");
                }
            }
            Ok(if full { 0 } else { 1 })
        }
        other => Err(Error::Parse(format!("unknown eisenstein verb `{other}`"))),
    }
}

fn run_op(cli: &Cli, a: &OpArgs) -> Result<i32> {
    let first = read_mould(&Some(a.mould_file.clone()), &None)?;
    let second = a
        .mould_file2
        .as_ref()
        .map(|f| read_mould(&Some(f.clone()), &None))
        .transpose()?;
    let need_second = || -> Result<RatMould> {
        second
            .clone()
            .ok_or_else(|| Error::Parse("--mould-file2 required for this operator".into()))?
            .to_rat()
    };
    // operate on rational moulds and re-certify polynomial output when
    // possible, so one code path serves both kinds
    let m1 = first.to_rat()?;
    let out: RatMould = match a.what.as_str() {
        "mu" => mould::mu(&m1, &need_second()?),
        "lu" => mould::lu(&m1, &need_second()?),
        "push" => mould::push(&m1),
        "swap" => {
            if a.inverse {
                mould::swap_inv(&m1)
            } else {
                mould::swap(&m1)
            }
        }
        "dar" => {
            if a.inverse {
                mould::dar_inv(&m1)
            } else {
                mould::dar(&m1)
            }
        }
        "delta" => {
            if a.inverse {
                mould::delta_inv(&m1)?
            } else {
                mould::delta(&m1)
            }
        }
        "arit" => mould::arit(&m1, &need_second()?)?,
        "arat" => mould::arat(&m1, &need_second()?)?,
        "darit" => {
            let p = first.to_poly()?;
            mould::darit(&p, &need_second()?)?
        }
        other => return Err(Error::Parse(format!("unknown operator `{other}`"))),
    };
    match out.try_to_poly() {
        Ok(p) => print_poly_mould(&p, cli.json),
        Err(_) => print_rat_mould(&out, cli.json),
    }
    let _ = cli.seed;
    Ok(0)
}
