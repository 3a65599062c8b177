use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use alcove_ideals::affine::{self, AffineElement};
use alcove_ideals::classify::classify_ideals;
use alcove_ideals::ideals::{enumerate_ideals, Ideal};
use alcove_ideals::lattice::{self, count_formula, count_orbits_mod, d_set, ta_points, DEFAULT_RESIDUE_CAP};
use alcove_ideals::verify::{self, SuiteOptions, Theorem, DEFAULT_BUDGET, DEFAULT_SEED};
use alcove_ideals::{Error, RootSet, RootSystem};

const MASK_HELP: &str = "Ideals are given as hexadecimal bitmasks over the positive roots: \
bit i stands for the i-th positive root in the order printed by `info <TYPE>` \
(by height, simple roots first).";

#[derive(Parser)]
#[command(name = "alcove-ideals", version, about = "Ad-nilpotent ideals, dominant Shi regions and alcoves", after_help = MASK_HELP)]
struct Cli {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV where a listing is produced.
    #[arg(long, global = true)]
    csv: bool,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Number of random samples for randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads. Accepted for compatibility; all work runs on one thread.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Include elapsed milliseconds in verification reports.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct TypeArg {
    /// Cartan type such as A3, B4, E8, G2.
    #[arg(value_name = "TYPE")]
    positional: Option<String>,
    /// Cartan type, as an alternative to the positional argument.
    #[arg(long = "type", value_name = "TYPE")]
    flag: Option<String>,
}

impl TypeArg {
    fn system(&self) -> Result<RootSystem, Failure> {
        match (&self.positional, &self.flag) {
            (Some(a), Some(b)) if a != b => Err(Failure::Usage(format!("conflicting types {a} and {b}"))),
            (Some(t), _) | (None, Some(t)) => RootSystem::parse(t).map_err(Failure::from),
            (None, None) => Err(Failure::Usage("a Cartan type is required".into())),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Min,
    Max,
}

#[derive(Subcommand)]
enum Cmd {
    /// Root system summary and the positive roots with their bit indices.
    Info(TypeArg),
    /// List all ideals (or strictly positive ones) and compare with the product formula.
    #[command(after_help = MASK_HELP)]
    Ideals {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        strict: bool,
    },
    /// Counts for a dilation t (default: h+1 and h-1).
    Count {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        t: Option<i64>,
    },
    /// Minimal or maximal alcove of a dominant Shi region.
    #[command(after_help = MASK_HELP)]
    Alcove {
        #[command(flatten)]
        ty: TypeArg,
        /// Ideal as a hexadecimal bitmask.
        #[arg(long)]
        ideal: String,
        #[arg(long, value_enum, default_value = "min")]
        which: Which,
    },
    /// Run a verification suite.
    Verify {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, value_parser = parse_theorem)]
        theorem: Theorem,
    },
    /// Ideal counts per conjugacy class of subsets of the simple roots.
    Classify {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        strict: bool,
    },
    /// Coroot lattice points of D^t with their bounding roots.
    Dset {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        t: i64,
    },
    /// The affine element carrying D^t onto the lattice points of tA.
    Simplexmap {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        t: i64,
    },
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse::<Theorem>().map_err(|_| {
        let names: Vec<&str> = Theorem::ALL.iter().map(|t| t.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

enum Failure {
    /// Verification failed; the report was already printed.
    Check,
    Usage(String),
    Internal(String),
    /// Stdout was closed by the reader.
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Internal(m) => Failure::Internal(m),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::Closed
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) | Err(Failure::Closed) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(1)
        }
    }
}

fn print_json(v: &Value) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn root_label(rs: &RootSystem, r: usize) -> String {
    let c: Vec<String> = rs.root(r).coeffs.iter().map(|x| x.to_string()).collect();
    format!("({})", c.join(","))
}

fn parse_mask(rs: &RootSystem, s: &str) -> Result<Ideal, Failure> {
    let digits = s.trim_start_matches("0x");
    let bits = u128::from_str_radix(digits, 16).map_err(|_| Failure::Usage(format!("`{s}` is not a hexadecimal mask")))?;
    if bits & !RootSet::full(rs.n_pos()).0 != 0 {
        return Err(Failure::Usage(format!("mask {s} has bits beyond the {} positive roots", rs.n_pos())));
    }
    Ok(Ideal::new(rs, RootSet(bits))?)
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.cmd {
        Cmd::Info(ty) => info(cli, &ty.system()?),
        Cmd::Ideals { ty, strict } => ideals(cli, &ty.system()?, *strict),
        Cmd::Count { ty, t } => count(cli, &ty.system()?, *t),
        Cmd::Alcove { ty, ideal, which } => alcove(cli, &ty.system()?, ideal, *which),
        Cmd::Verify { ty, theorem } => verify_cmd(cli, &ty.system()?, *theorem),
        Cmd::Classify { ty, strict } => classify(cli, &ty.system()?, *strict),
        Cmd::Dset { ty, t } => dset(cli, &ty.system()?, *t),
        Cmd::Simplexmap { ty, t } => simplexmap(cli, &ty.system()?, *t),
    }
}

fn info(cli: &Cli, rs: &RootSystem) -> Result<(), Failure> {
    if cli.json {
        return print_json(&rs.to_json());
    }
    let mut out = io::stdout().lock();
    writeln!(out, "type {}", rs.cartan_type())?;
    writeln!(out, "rank {}", rs.rank())?;
    writeln!(out, "positive roots {}", rs.n_pos())?;
    writeln!(out, "coxeter number {}", rs.coxeter_number())?;
    let e: Vec<String> = rs.exponents().iter().map(|x| x.to_string()).collect();
    writeln!(out, "exponents {}", e.join(" "))?;
    writeln!(out, "weyl group order {}", rs.weyl_order())?;
    writeln!(out, "highest root {}", root_label(rs, rs.theta()))?;
    writeln!(out, "cartan matrix")?;
    for row in rs.cartan() {
        let r: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
        writeln!(out, "  {}", r.join(" "))?;
    }
    writeln!(out, "bit  height  root")?;
    for r in 0..rs.n_pos() {
        writeln!(out, "{r:>3}  {:>6}  {}", rs.height(r), root_label(rs, r))?;
    }
    Ok(())
}

fn formula_int(rs: &RootSystem, t: i64) -> Option<i128> {
    let f = count_formula(rs, t);
    f.is_integer().then(|| f.to_integer())
}

fn ideals(cli: &Cli, rs: &RootSystem, strict: bool) -> Result<(), Failure> {
    let h = rs.coxeter_number();
    let t = if strict { h - 1 } else { h + 1 };
    let formula = formula_int(rs, t);
    let mut out = io::stdout().lock();
    let mut n = 0u64;
    if cli.json {
        let list: Vec<Value> = enumerate_ideals(rs, strict).map(|i| i.to_json(rs)).collect();
        n = list.len() as u64;
        let pass = formula == Some(n as i128);
        drop(out);
        print_json(&json!({
            "type": rs.cartan_type().to_string(),
            "strict": strict,
            "ideals": list,
            "count": n,
            "formula": formula.map(|f| f as u64),
            "pass": pass,
        }))?;
        return if pass { Ok(()) } else { Err(Failure::Check) };
    }
    if cli.csv {
        let header: Vec<String> = (0..rs.n_pos()).map(|r| format!("r{r}")).collect();
        writeln!(out, "{}", header.join(","))?;
    }
    for ideal in enumerate_ideals(rs, strict) {
        if cli.csv {
            writeln!(out, "{}", ideal.to_csv_row(rs))?;
        } else {
            let mins: Vec<String> = ideal.min_roots().iter().map(|r| root_label(rs, r)).collect();
            writeln!(out, "{:<8x} size {:<4} minimal {}", ideal.members(), ideal.len(), mins.join(" "))?;
        }
        n += 1;
    }
    let pass = formula == Some(n as i128);
    if !cli.csv {
        writeln!(
            out,
            "count {n} formula {} {}",
            formula.map_or("non-integer".to_string(), |f| f.to_string()),
            verdict(pass)
        )?;
    }
    if pass {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn count_row(rs: &RootSystem, t: i64) -> Result<Value, Failure> {
    let h = rs.coxeter_number();
    let formula = count_formula(rs, t);
    let enumerated = if t == h + 1 {
        Some(enumerate_ideals(rs, false).count() as u64)
    } else if t == h - 1 {
        Some(enumerate_ideals(rs, true).count() as u64)
    } else {
        None
    };
    let dset = match d_set(rs, t) {
        Ok(d) => Some(d.len() as u64),
        Err(Error::NotCoprime { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let ta = ta_points(rs, t)?.len() as u64;
    let orbits = match count_orbits_mod(rs, t, DEFAULT_RESIDUE_CAP) {
        Ok(o) => Some(o),
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    // every count that applies must agree; the formula joins in when t is coprime to h
    let values: Vec<i128> = [enumerated, dset, orbits, Some(ta)].into_iter().flatten().map(i128::from).collect();
    let mut pass = values.windows(2).all(|w| w[0] == w[1]);
    if dset.is_some() {
        pass &= formula.is_integer() && values.iter().all(|&v| v == formula.to_integer());
    }
    Ok(json!({
        "type": rs.cartan_type().to_string(),
        "t": t,
        "formula": formula.to_string(),
        "enumerated": enumerated,
        "dset": dset,
        "ta_points": ta,
        "orbits": orbits,
        "pass": pass,
    }))
}

fn count(cli: &Cli, rs: &RootSystem, t: Option<i64>) -> Result<(), Failure> {
    let h = rs.coxeter_number();
    if let Some(t) = t {
        if t < 1 {
            return Err(Failure::Usage(format!("t must be positive, got {t}")));
        }
    }
    let ts = match t {
        Some(t) => vec![t],
        None => vec![h + 1, h - 1],
    };
    let rows: Vec<Value> = ts.iter().map(|&t| count_row(rs, t)).collect::<Result<_, _>>()?;
    let pass = rows.iter().all(|r| r["pass"] == json!(true));
    if cli.json {
        print_json(&Value::Array(rows))?;
    } else {
        let mut out = io::stdout().lock();
        let show = |v: &Value| if v.is_null() { "-".to_string() } else { v.to_string() };
        writeln!(out, "t  formula  enumerated  dset  ta_points  orbits  verdict")?;
        for r in &rows {
            writeln!(
                out,
                "{}  {}  {}  {}  {}  {}  {}",
                r["t"],
                r["formula"].as_str().unwrap_or_default(),
                show(&r["enumerated"]),
                show(&r["dset"]),
                r["ta_points"],
                show(&r["orbits"]),
                verdict(r["pass"] == json!(true))
            )?;
        }
    }
    if pass {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn element_json(rs: &RootSystem, w: &AffineElement) -> Value {
    let mut v = w.to_json(rs);
    v["length"] = json!(affine::length(rs, w));
    v["lambda_fundamental"] = json!(rs.fundamental_coords(&w.lambda));
    v
}

fn alcove(cli: &Cli, rs: &RootSystem, mask: &str, which: Which) -> Result<(), Failure> {
    let ideal = parse_mask(rs, mask)?;
    let w = match which {
        Which::Min => affine::w_min(rs, &ideal)?,
        Which::Max => affine::w_max(rs, &ideal)?,
    };
    let mut v = element_json(rs, &w);
    v["ideal"] = json!(format!("{:x}", ideal.members()));
    v["which"] = json!(match which {
        Which::Min => "min",
        Which::Max => "max",
    });
    if cli.json {
        return print_json(&v);
    }
    let mut out = io::stdout().lock();
    writeln!(out, "ideal {:x} ({})", ideal.members(), v["which"].as_str().unwrap_or_default())?;
    writeln!(out, "k {}", v["k"])?;
    writeln!(out, "length {}", v["length"])?;
    writeln!(out, "lambda {} (fundamental {})", v["lambda"], v["lambda_fundamental"])?;
    writeln!(out, "x {}", v["x"])?;
    Ok(())
}

fn verify_cmd(cli: &Cli, rs: &RootSystem, theorem: Theorem) -> Result<(), Failure> {
    let mut report = verify::run(rs, theorem, SuiteOptions { seed: cli.seed, budget: cli.budget })?;
    if !cli.timing {
        report.elapsed_ms = None;
    }
    if cli.json {
        print_json(&serde_json::to_value(&report).map_err(|e| Failure::Internal(e.to_string()))?)?;
    } else {
        let mut out = io::stdout().lock();
        writeln!(out, "{} {} {}", report.theorem, report.cartan_type, verdict(report.pass))?;
        for (k, v) in &report.counts {
            writeln!(out, "  {k}: {v}")?;
        }
        for w in &report.witnesses {
            writeln!(out, "  witness: {w}")?;
        }
        if let Some(ms) = report.elapsed_ms {
            writeln!(out, "  elapsed_ms: {ms}")?;
        }
    }
    if report.pass {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn classify(cli: &Cli, rs: &RootSystem, strict: bool) -> Result<(), Failure> {
    let rows = classify_ideals(rs, strict)?;
    let pass = rows.iter().all(|r| r.pass);
    if cli.json {
        print_json(&json!({
            "type": rs.cartan_type().to_string(),
            "strict": strict,
            "rows": rows,
            "pass": pass,
        }))?;
    } else if cli.csv {
        let mut out = io::stdout().lock();
        writeln!(out, "representative,class_size,count,chi,pass")?;
        for r in &rows {
            let j: Vec<String> = r.representative.iter().map(|i| (i + 1).to_string()).collect();
            writeln!(out, "{},{},{},{},{}", j.join(" "), r.class_size, r.count, r.chi, r.pass)?;
        }
    } else {
        let mut out = io::stdout().lock();
        let h = rs.coxeter_number();
        let t = if strict { h - 1 } else { h + 1 };
        writeln!(out, "J            size  count  chi(t={t})  p^J(t)")?;
        for r in &rows {
            let j: Vec<String> = r.representative.iter().map(|i| (i + 1).to_string()).collect();
            writeln!(
                out,
                "{:<12} {:>4}  {:>5}  {:>8}  {}  {}",
                format!("{{{}}}", j.join(",")),
                r.class_size,
                r.count,
                r.chi,
                r.char_poly,
                verdict(r.pass)
            )?;
        }
    }
    if pass {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn dset(cli: &Cli, rs: &RootSystem, t: i64) -> Result<(), Failure> {
    let pts = d_set(rs, t)?;
    let rows: Vec<Value> = pts
        .iter()
        .map(|p| {
            let b = lattice::b_set(rs, t, p)?;
            Ok(json!({
                "coroot": p.0,
                "fundamental": rs.fundamental_coords(p),
                "bounding": b.iter().map(|&r| rs.root(r).coeffs.clone()).collect::<Vec<_>>(),
            }))
        })
        .collect::<Result<_, Error>>()?;
    if cli.json {
        return print_json(&json!({"type": rs.cartan_type().to_string(), "t": t, "points": rows}));
    }
    let mut out = io::stdout().lock();
    if cli.csv {
        writeln!(out, "coroot,fundamental")?;
    }
    for r in &rows {
        let join = |v: &Value| {
            v.as_array()
                .map(|a| a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
                .unwrap_or_default()
        };
        if cli.csv {
            writeln!(out, "{},{}", join(&r["coroot"]), join(&r["fundamental"]))?;
        } else {
            writeln!(out, "coroot {}  fundamental {}  bounding {}", r["coroot"], r["fundamental"], r["bounding"])?;
        }
    }
    if !cli.csv {
        writeln!(out, "points {}", rows.len())?;
    }
    Ok(())
}

fn simplexmap(cli: &Cli, rs: &RootSystem, t: i64) -> Result<(), Failure> {
    let w = lattice::find_simplex_map(rs, t)?;
    let facets = lattice::facet_image(rs, t, &w)?;
    let mut v = element_json(rs, &w);
    v["facet_image"] = json!(facets.iter().map(|&r| rs.root(r).coeffs.clone()).collect::<Vec<_>>());
    v["t"] = json!(t);
    if cli.json {
        return print_json(&v);
    }
    let mut out = io::stdout().lock();
    writeln!(out, "t {t}")?;
    writeln!(out, "x {}", v["x"])?;
    writeln!(out, "lambda {} (fundamental {})", v["lambda"], v["lambda_fundamental"])?;
    writeln!(out, "facet roots map to {}", v["facet_image"])?;
    Ok(())
}
