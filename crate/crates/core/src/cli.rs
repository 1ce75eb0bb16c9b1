//! Command-line front end.
//!
//! Exit codes: 0 ok, 1 property failure, 2 input error, 3 internal
//! cross-check failure. Results go to stdout and are deterministic;
//! diagnostics and timing go to stderr.

use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::maxmin::{
    lambda_max_algorithm, lambda_max_even, lambda_max_via_pab, lambda_min_even, sign_twist, AlgorithmTrace,
};
use crate::multiplicity::{
    mult_bipartition, raising_expansion, springer_fiber_multiplicities, LocalSystemColumn, TPoly,
};
use crate::order::IndexOrder;
use crate::partition::{Bipartition, Partition};
use crate::symbols::{enumerate_odd_parts, enumerate_pport, is_h, order_from_h, phi, phi_inverse, symbol_of, GSCDatum};
use crate::verify::{run_suite, Suite, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

pub const CSV_HEADER: &str = "N,lambda,eps,defect,lambda2,eps2,mult,tpoly";

#[derive(Parser, Debug)]
#[command(name = "springer-kit", version, about = "Generalized Springer correspondence for SO(N)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Algorithm,
    Pab,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Symbol, defect and Φ image of a datum.
    Map {
        #[arg(long = "N")]
        n: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        eps: String,
        #[arg(long)]
        json: bool,
    },
    /// The datum with a given Φ image.
    Unmap {
        #[arg(long = "N")]
        n: u32,
        #[arg(long, default_value = "")]
        alpha: String,
        #[arg(long, default_value = "")]
        beta: String,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        json: bool,
    },
    /// The maximal datum.
    Max(ExtremeArgs),
    /// The minimal datum.
    Min(ExtremeArgs),
    /// Multiplicity between two data, or a whole column with --table.
    Mult {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        eps: String,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "table")]
        lambda2: Option<String>,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        eps2: String,
        #[arg(long)]
        table: bool,
        #[arg(long)]
        json: bool,
    },
    /// Raising expansion of a bipartition under an order, or the Springer
    /// fibre table of a datum.
    Expand {
        #[arg(long, default_value = "")]
        alpha: String,
        #[arg(long, default_value = "")]
        beta: String,
        #[arg(long, conflicts_with = "lambda")]
        order: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        eps: String,
        /// Recheck every coefficient against the signed configuration count.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// All data of one N with their Φ images.
    Enumerate {
        #[arg(long = "N")]
        n: u32,
        #[arg(long)]
        odd_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive property suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long = "max-N")]
        max_n: u32,
        #[arg(long, env = "SPRINGER_KIT_JOBS", default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: bool,
        /// Include elapsed times in the JSON output.
        #[arg(long)]
        timing: bool,
    },
}

#[derive(clap::Args, Debug)]
pub struct ExtremeArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    pub eps: String,
    #[arg(long, value_enum, default_value_t = Method::Both)]
    pub method: Method,
    /// Accept even parts when the defect is 0 or 1.
    #[arg(long)]
    pub allow_even: bool,
    /// Include the recursion levels of the algorithm.
    #[arg(long)]
    pub trace: bool,
    #[arg(long)]
    pub json: bool,
}

/// A failed command: exit code and message for stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::CrossCheck(_)) { EXIT_INTERNAL } else { EXIT_INPUT };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        // A closed pipe downstream is not an error of ours.
        let code = if e.kind() == std::io::ErrorKind::BrokenPipe { EXIT_OK } else { EXIT_INTERNAL };
        Failure { code, message: format!("write failed: {e}") }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            if f.code != EXIT_OK {
                let _ = writeln!(err, "error: {}", f.message);
            }
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Map { n, lambda, eps, json } => cmd_map(n, &lambda, &eps, json, out),
        Command::Unmap { n, alpha, beta, k, json } => cmd_unmap(n, &alpha, &beta, k, json, out),
        Command::Max(a) => cmd_extreme(false, &a, out),
        Command::Min(a) => cmd_extreme(true, &a, out),
        Command::Mult { lambda, eps, lambda2, eps2, table, json } => {
            cmd_mult(&lambda, &eps, lambda2.as_deref(), &eps2, table, json, out)
        }
        Command::Expand { alpha, beta, order, lambda, eps, oracle, json } => match lambda {
            Some(l) => cmd_fiber(&l, &eps, json, out),
            None => cmd_expand(&alpha, &beta, order.as_deref(), oracle, json, out),
        },
        Command::Enumerate { n, odd_only, json } => cmd_enumerate(n, odd_only, json, out),
        Command::Verify { suite, max_n, jobs, json, timing } => cmd_verify(&suite, max_n, jobs, json, timing, out, err),
    }
}

fn input_error(msg: impl Into<String>) -> Failure {
    Failure { code: EXIT_INPUT, message: msg.into() }
}

fn emit_json(out: &mut dyn Write, v: &Value) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("values serialize"))
}

fn datum_json(d: &GSCDatum) -> Value {
    let n = d.normalized();
    json!({ "lambda": n.lam().to_string(), "eps": n.eps_string(), "eps_positional": n.eps_positional() })
}

/// Datum literal as printed: `λ / ε` with `ε` one sign per distinct odd part.
pub fn render_datum(d: &GSCDatum) -> String {
    let n = d.normalized();
    format!("{} / {}", n.lam(), n.eps_string())
}

fn cmd_map(n: Option<u32>, lambda: &str, eps: &str, json: bool, out: &mut dyn Write) -> CmdResult {
    let d = GSCDatum::parse(lambda, eps)?;
    if let Some(n) = n {
        if n != d.n() {
            return Err(input_error(format!("partition {} has size {}, not N = {n}", d.lam(), d.n())));
        }
    }
    let sym = symbol_of(&d)?;
    let (ab, k) = phi(&d)?;
    let h = is_h(&ab, k);
    let order = if h { Some(order_from_h(&ab, k)?.to_string()) } else { None };
    if json {
        emit_json(
            out,
            &json!({
                "command": "map",
                "N": d.n(),
                "datum": datum_json(&d),
                "m": d.m_value(),
                "defect": k,
                "symbol": { "A": sym.a.render(), "B": sym.b.render(), "ordered": sym.ordered },
                "alpha": ab.first.to_string(),
                "beta": ab.second.to_string(),
                "h_condition": h,
                "order": order,
            }),
        )?;
    } else {
        writeln!(out, "N={} lambda={} eps={} M={}", d.n(), d.lam(), d.normalized().eps_string(), d.m_value())?;
        writeln!(out, "A: {}", sym.a.render())?;
        writeln!(out, "B: {}", sym.b.render())?;
        writeln!(out, "k={} alpha={} beta={}", k, ab.first, ab.second)?;
        writeln!(out, "h_condition={}{}", h, order.map(|o| format!(" order={o}")).unwrap_or_default())?;
    }
    Ok(EXIT_OK)
}

fn parse_pair(alpha: &str, beta: &str) -> std::result::Result<Bipartition, Failure> {
    let a: Partition = alpha.parse()?;
    let b: Partition = beta.parse()?;
    Ok(Bipartition::new(a, b))
}

fn cmd_unmap(n: u32, alpha: &str, beta: &str, k: i64, json: bool, out: &mut dyn Write) -> CmdResult {
    let ab = parse_pair(alpha, beta)?;
    let d = phi_inverse(&ab, k, n)?;
    if json {
        emit_json(
            out,
            &json!({ "command": "unmap", "N": n, "alpha": alpha, "beta": beta, "defect": k, "datum": datum_json(&d) }),
        )?;
    } else {
        writeln!(out, "{}", render_datum(&d))?;
    }
    Ok(EXIT_OK)
}

fn cmd_extreme(min: bool, a: &ExtremeArgs, out: &mut dyn Write) -> CmdResult {
    let d = GSCDatum::parse(&a.lambda, &a.eps)?;
    let even = !d.lam().all_odd();
    if even && !a.allow_even {
        return Err(input_error(format!("partition {} has even parts; pass --allow-even for defect 0 or 1", d.lam())));
    }
    let mut trace: Option<AlgorithmTrace> = None;
    let mx = if even {
        lambda_max_even(&d)?
    } else {
        let by_pab = matches!(a.method, Method::Pab | Method::Both).then(|| lambda_max_via_pab(&d)).transpose()?;
        let by_alg = if matches!(a.method, Method::Algorithm | Method::Both) {
            let (r, t) = lambda_max_algorithm(&d)?;
            trace = Some(t);
            Some(r)
        } else {
            None
        };
        match (by_pab, by_alg) {
            (Some(p), Some(g)) if !p.same_class(&g) => {
                return Err(Failure {
                    code: EXIT_INTERNAL,
                    message: format!("methods disagree on {d}: peeling gives {p}, algorithm gives {g}"),
                });
            }
            (Some(p), _) => p,
            (None, Some(g)) => g,
            (None, None) => unreachable!("some method is selected"),
        }
    };
    let result = if min {
        if even {
            lambda_min_even(&d)?
        } else {
            sign_twist(&mx)?
        }
    } else {
        mx
    };
    if a.json {
        let method = if even {
            "even".to_string()
        } else {
            a.method.to_possible_value().map(|v| v.get_name().to_string()).unwrap()
        };
        let mut v = json!({
            "command": if min { "min" } else { "max" },
            "N": d.n(),
            "input": datum_json(&d),
            "method": method,
            "result": datum_json(&result),
        });
        if a.trace {
            v["trace"] = serde_json::to_value(trace.unwrap_or_default().levels).expect("trace serializes");
        }
        emit_json(out, &v)?;
    } else {
        writeln!(out, "{}", render_datum(&result))?;
        if a.trace {
            for l in trace.unwrap_or_default().levels {
                writeln!(
                    out,
                    "  N={} lambda={:?} eps={} S={:?} bar1={} next={:?}/{}",
                    l.n, l.lambda, l.eps, l.s_set, l.bar_lambda1, l.next_lambda, l.next_eps
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn csv_row(col: &LocalSystemColumn, d2: &GSCDatum, p: &TPoly) -> String {
    let s = col.source().normalized();
    let t = d2.normalized();
    format!(
        "{},{},{},{},{},{},{},{}",
        s.n(),
        quote(&s.lam().to_string()),
        s.eps_string(),
        col.defect(),
        quote(&t.lam().to_string()),
        t.eps_string(),
        p.at_one(),
        p
    )
}

/// Partitions contain commas, so CSV fields holding them are quoted.
fn quote(s: &str) -> String {
    format!("\"{s}\"")
}

fn cmd_mult(
    lambda: &str,
    eps: &str,
    lambda2: Option<&str>,
    eps2: &str,
    table: bool,
    json: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let d = GSCDatum::parse(lambda, eps)?;
    let col = LocalSystemColumn::new(&d)?;
    if table {
        let rows: Vec<(GSCDatum, TPoly)> = enumerate_pport(d.n())
            .into_iter()
            .map(|d2| col.tpoly(&d2).map(|p| (d2, p)))
            .collect::<crate::Result<_>>()?;
        if json {
            let v: Vec<Value> = rows
                .iter()
                .map(|(d2, p)| json!({ "target": datum_json(d2), "defect": d2.defect(), "mult": p.at_one(), "tpoly": p.to_string() }))
                .collect();
            emit_json(
                out,
                &json!({ "command": "mult", "N": d.n(), "source": datum_json(&d), "defect": col.defect(), "table": v }),
            )?;
        } else {
            writeln!(out, "{CSV_HEADER}")?;
            for (d2, p) in &rows {
                writeln!(out, "{}", csv_row(&col, d2, p))?;
            }
        }
        return Ok(EXIT_OK);
    }
    let d2 = GSCDatum::parse(lambda2.expect("clap requires lambda2 without --table"), eps2)?;
    if d2.n() != d.n() {
        return Err(input_error(format!("sizes differ: {} and {}", d.n(), d2.n())));
    }
    let p = col.tpoly(&d2)?;
    if json {
        emit_json(
            out,
            &json!({ "command": "mult", "N": d.n(), "source": datum_json(&d), "target": datum_json(&d2), "mult": p.at_one(), "tpoly": p.to_string() }),
        )?;
    } else {
        writeln!(out, "{}", p.at_one())?;
    }
    Ok(EXIT_OK)
}

fn cmd_expand(
    alpha: &str,
    beta: &str,
    order: Option<&str>,
    oracle: bool,
    json: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let ab = parse_pair(alpha, beta)?;
    let o: IndexOrder = match order {
        Some(w) => w.parse()?,
        None => return Err(input_error("expand needs --order with --alpha/--beta, or --lambda")),
    };
    let col = raising_expansion(&ab, &o)?;
    if oracle {
        for t in crate::partition::bipartitions(ab.size()) {
            let slow = mult_bipartition(&ab, &o, &t)?;
            let fast = col.get(&t).map_or(0, TPoly::at_one);
            if slow != fast {
                return Err(Failure {
                    code: EXIT_INTERNAL,
                    message: format!("target ({t}): expansion gives {fast}, configuration count gives {slow}"),
                });
            }
        }
    }
    if json {
        let rows: Vec<Value> = col
            .iter()
            .map(|(b, p)| json!({ "alpha": b.first.to_string(), "beta": b.second.to_string(), "tpoly": p.to_string(), "mult": p.at_one() }))
            .collect();
        emit_json(
            out,
            &json!({ "command": "expand", "alpha": ab.first.to_string(), "beta": ab.second.to_string(), "order": o.to_string(), "terms": rows }),
        )?;
    } else {
        for (b, p) in &col {
            writeln!(out, "({b}): {p}")?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_fiber(lambda: &str, eps: &str, json: bool, out: &mut dyn Write) -> CmdResult {
    let d = GSCDatum::parse(lambda, eps)?;
    let table = springer_fiber_multiplicities(&d)?;
    if json {
        let rows: Vec<Value> = table.iter().map(|(d2, m)| json!({ "target": datum_json(d2), "mult": m })).collect();
        emit_json(out, &json!({ "command": "expand", "N": d.n(), "source": datum_json(&d), "fiber": rows }))?;
    } else {
        for (d2, m) in &table {
            writeln!(out, "{}: {m}", render_datum(d2))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_enumerate(n: u32, odd_only: bool, json: bool, out: &mut dyn Write) -> CmdResult {
    let data = if odd_only { enumerate_odd_parts(n) } else { enumerate_pport(n) };
    let mut rows = Vec::new();
    for d in &data {
        let (ab, k) = phi(d)?;
        rows.push((d, ab, k));
    }
    if json {
        let v: Vec<Value> = rows
            .iter()
            .map(|(d, ab, k)| json!({ "datum": datum_json(d), "defect": k, "alpha": ab.first.to_string(), "beta": ab.second.to_string() }))
            .collect();
        emit_json(out, &json!({ "command": "enumerate", "N": n, "count": v.len(), "data": v }))?;
    } else {
        for (d, ab, k) in &rows {
            writeln!(out, "{}  k={k}  ({ab})", render_datum(d))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    suite: &str,
    max_n: u32,
    jobs: usize,
    json: bool,
    timing: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let suites: Vec<Suite> =
        if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse().map_err(Failure::from)?] };
    if max_n < 1 {
        return Err(input_error("--max-N must be at least 1"));
    }
    let mut reports: Vec<VerificationReport> = Vec::new();
    for s in suites {
        let start = Instant::now();
        let mut r = run_suite(s, max_n, jobs)?;
        let ms = start.elapsed().as_millis() as u64;
        writeln!(err, "suite {s}: {ms} ms")?;
        if timing {
            r.elapsed_ms = Some(ms);
        }
        reports.push(r);
    }
    if json {
        emit_json(out, &json!({ "command": "verify", "max_N": max_n, "reports": reports }))?;
    } else {
        for r in &reports {
            write!(out, "{r}")?;
        }
    }
    Ok(if reports.iter().any(VerificationReport::has_internal) {
        EXIT_INTERNAL
    } else if reports.iter().all(VerificationReport::passed) {
        EXIT_OK
    } else {
        EXIT_PROPERTY
    })
}
