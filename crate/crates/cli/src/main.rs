//! `tetraposet`: count, enumerate, grade, convert and verify.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tetraposet::bijections::asm::{
    asm_to_monotone, asm_to_yplus, monotone_to_asm, monotone_to_yplus, yplus_to_asm,
    yplus_to_monotone, Asm, MonotoneTriangle,
};
use tetraposet::bijections::dyck::{dyck_to_ideal, ideal_to_dyck, DyckPath};
use tetraposet::bijections::plane_partition::PlanePartition;
use tetraposet::bijections::sundquist::sundquist;
use tetraposet::bijections::tournament::{tournament_to_yplus, yplus_to_tournament, Tournament};
use tetraposet::bijections::tspp::{ideal_to_tspp, tspp_to_ideal};
use tetraposet::bijections::tsscpp::{tsscpp_to_yplus, yplus_to_tsscpp};
use tetraposet::ideal::{count_ideals_fast, for_each_ideal, rank_gf_fast};
use tetraposet::identities::{count_formula, formula_is_dual, rank_gf_formula};
use tetraposet::poly::bigint_json;
use tetraposet::staircase::all_arrays;
use tetraposet::suite::{known_counts, run_suite, Certificate, Suite};
use tetraposet::{
    classify, Color, ColorSet, ColoredPoset, OrderIdeal, PosetKind, QPolynomial, StaircaseArray,
    Variant,
};

#[derive(Parser)]
#[command(
    name = "tetraposet",
    version,
    about = "Order ideals of the tetrahedral poset and its colored subposets"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Report wall time.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Count order ideals.
    Count {
        #[command(flatten)]
        poset: PosetArgs,
        /// Also print the rank generating function.
        #[arg(long)]
        q: bool,
    },
    /// List order ideals, staircase arrays, or the poset itself.
    Enumerate {
        #[command(flatten)]
        poset: PosetArgs,
        #[arg(long, value_enum, default_value_t = Emit::Ideals)]
        emit: Emit,
        /// Array variant for `--emit arrays`.
        #[arg(long, value_enum, default_value_t = VariantArg::Y)]
        variant: VariantArg,
    },
    /// Rank generating function, optionally checked against its product formula.
    Rankgf {
        #[command(flatten)]
        poset: PosetArgs,
        #[arg(long)]
        formula: bool,
    },
    /// Convert between combinatorial objects.
    Biject {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Size, where the payload does not determine it.
        #[arg(long)]
        n: Option<usize>,
        /// Payload; read from stdin when absent.
        #[arg(long)]
        input: Option<String>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
    },
    /// Formula class, closed-form count and rank generating function.
    Formulas {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// One admissible set; all 40 when absent.
        #[arg(long, value_parser = parse_colors)]
        colors: Option<ColorSet>,
    },
}

#[derive(Args)]
struct PosetArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    /// Letters from `rbgoys`; all six when absent.
    #[arg(long, value_parser = parse_colors)]
    colors: Option<ColorSet>,
    /// Remove the first K layers.
    #[arg(long, value_name = "K")]
    trapezoid: Option<usize>,
    /// Use the pyramid `P_n` instead of `T_n`.
    #[arg(long)]
    pyramid: bool,
    /// Reverse every edge.
    #[arg(long)]
    dual: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Ideals,
    Arrays,
    Poset,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    X,
    Y,
    Yplus,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::X => Variant::X,
            VariantArg::Y => Variant::Y,
            VariantArg::Yplus => Variant::Yplus,
        }
    }
}

#[derive(Clone, Copy)]
enum SuiteArg {
    One(Suite),
    All,
}

fn parse_suite(s: &str) -> Result<SuiteArg, String> {
    if s == "all" {
        return Ok(SuiteArg::All);
    }
    Suite::from_name(s)
        .map(SuiteArg::One)
        .ok_or_else(|| "expected formulas, bijections, expansions, trapezoid or all".to_string())
}

fn parse_colors(s: &str) -> Result<ColorSet, String> {
    s.parse().map_err(|e: tetraposet::Error| e.to_string())
}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow!(msg.into())
}

fn lib<T>(r: Result<T, tetraposet::Error>) -> Result<T> {
    r.map_err(|e| usage(e.to_string()))
}

enum Status {
    Pass,
    Mismatch,
}

struct Ctx {
    format: Format,
    timing: bool,
    start: Instant,
    out: Box<dyn Write>,
}

impl Ctx {
    fn line(&mut self, s: impl AsRef<str>) -> Result<()> {
        writeln!(self.out, "{}", s.as_ref())?;
        Ok(())
    }

    fn json(&mut self, mut v: Value) -> Result<()> {
        if self.timing {
            if let Value::Object(o) = &mut v {
                o.insert(
                    "wall_time_ms".into(),
                    json!(self.start.elapsed().as_millis() as u64),
                );
            }
        }
        let s = serde_json::to_string_pretty(&v)?;
        self.line(s)
    }

    fn finish_text(&mut self) -> Result<()> {
        if self.timing && self.format != Format::Json {
            let secs = self.start.elapsed().as_secs_f64();
            eprintln!("wall time: {secs:.3}s");
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out: Box<dyn Write> = match &cli.out {
        Some(p) => match File::create(p) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => {
                eprintln!("error: cannot create {}: {e}", p.display());
                return ExitCode::from(2);
            }
        },
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let mut ctx = Ctx {
        format: cli.format,
        timing: cli.timing,
        start: Instant::now(),
        out,
    };
    let result = run(cli.command, &mut ctx).and_then(|s| {
        ctx.finish_text()?;
        ctx.out.flush()?;
        Ok(s)
    });
    match result {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Mismatch) => ExitCode::from(1),
        Err(e)
            if e.downcast_ref::<io::Error>()
                .is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            let _ = ctx.out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command, ctx: &mut Ctx) -> Result<Status> {
    match cmd {
        Command::Count { poset, q } => count(&poset, q, ctx),
        Command::Enumerate {
            poset,
            emit,
            variant,
        } => enumerate(&poset, emit, variant.into(), ctx),
        Command::Rankgf { poset, formula } => rankgf(&poset, formula, ctx),
        Command::Biject { from, to, n, input } => biject(&from, &to, n, input, ctx),
        Command::Verify { suite, n_max } => verify(suite, n_max, ctx),
        Command::Formulas { n, colors } => formulas(n as usize, colors, ctx),
    }
}

impl PosetArgs {
    fn n(&self) -> usize {
        self.n as usize
    }

    fn colors(&self) -> ColorSet {
        self.colors.unwrap_or(ColorSet::ALL)
    }

    fn build(&self) -> Result<ColoredPoset> {
        let base = if self.pyramid {
            ColoredPoset::build_pyramid(self.n())
        } else {
            ColoredPoset::build_tetra(self.n())
        };
        let mut p = base.restrict(self.colors());
        if let Some(k) = self.trapezoid {
            p = lib(p.truncate_trapezoid(k))?;
        }
        if self.dual {
            p = p.dual();
        }
        Ok(p)
    }

    fn echo(&self) -> Value {
        json!({
            "n": self.n,
            "colors": self.colors().letters(),
            "kind": if self.pyramid { "pyramid" } else { "tetra" },
            "trapezoid": self.trapezoid,
            "dual": self.dual,
        })
    }

    fn csv_prefix(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.n,
            self.colors().letters(),
            if self.pyramid { "pyramid" } else { "tetra" },
            self.trapezoid.map(|k| k.to_string()).unwrap_or_default(),
            self.dual
        )
    }
}

const CSV_POSET: &str = "n,colors,kind,trapezoid,dual";

fn coeff_list(p: &QPolynomial) -> String {
    p.coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn count(args: &PosetArgs, q: bool, ctx: &mut Ctx) -> Result<Status> {
    let p = args.build()?;
    let (total, gf) = if q {
        let gf = rank_gf_fast(&p);
        (gf.at_one().to_string(), Some(gf))
    } else {
        (count_ideals_fast(&p).to_string(), None)
    };
    match ctx.format {
        Format::Text => {
            ctx.line(&total)?;
            if let Some(gf) = &gf {
                ctx.line(gf.to_string())?;
            }
        }
        Format::Csv => {
            ctx.line(format!(
                "{CSV_POSET},count{}",
                if q { ",rank_gf" } else { "" }
            ))?;
            let tail = gf
                .as_ref()
                .map(|g| format!(",{}", coeff_list(g)))
                .unwrap_or_default();
            ctx.line(format!("{},{total}{tail}", args.csv_prefix()))?;
        }
        Format::Json => {
            let mut v = json!({
                "command": "count",
                "inputs": args.echo(),
                "count": bigint_json(&total),
            });
            if let Some(gf) = &gf {
                v["rank_gf"] = gf.to_json();
            }
            ctx.json(v)?;
        }
    }
    Ok(Status::Pass)
}

fn enumerate(args: &PosetArgs, emit: Emit, variant: Variant, ctx: &mut Ctx) -> Result<Status> {
    let p = args.build()?;
    match emit {
        Emit::Poset => {
            let v = p.to_json();
            match ctx.format {
                Format::Json | Format::Text => ctx.line(serde_json::to_string(&v)?)?,
                Format::Csv => {
                    ctx.line("color,tail,head")?;
                    for c in Color::ALL {
                        for &(t, h) in p.edges(c) {
                            ctx.line(format!("{},{t},{h}", c.letter()))?;
                        }
                    }
                }
            }
        }
        Emit::Ideals => {
            let format = ctx.format;
            if format == Format::Csv {
                ctx.line("bits,size")?;
            }
            let mut err = None;
            for_each_ideal(&p, |i| {
                if err.is_some() {
                    return;
                }
                let line = match format {
                    Format::Json => i.to_json().to_string(),
                    Format::Csv => format!("{},{}", i.to_hex(), i.size()),
                    Format::Text => format!("{} {}", i.to_hex(), i.size()),
                };
                if let Err(e) = writeln!(ctx.out, "{line}") {
                    err = Some(e);
                }
            });
            if let Some(e) = err {
                return Err(e.into());
            }
        }
        Emit::Arrays => {
            let s = args.colors();
            if args.pyramid || args.trapezoid.is_some() || args.dual {
                bail!(usage("--emit arrays needs the plain tetrahedral poset"));
            }
            if !s.contains(Color::Green) {
                bail!(usage("--emit arrays needs green in --colors"));
            }
            for a in all_arrays(args.n(), s, variant) {
                let line = match ctx.format {
                    Format::Json => a.to_json().to_string(),
                    Format::Csv | Format::Text => a.to_string(),
                };
                ctx.line(line)?;
            }
        }
    }
    Ok(Status::Pass)
}

fn rankgf(args: &PosetArgs, formula: bool, ctx: &mut Ctx) -> Result<Status> {
    if !formula {
        let gf = rank_gf_fast(&args.build()?);
        match ctx.format {
            Format::Text => ctx.line(gf.to_string())?,
            Format::Csv => {
                ctx.line(format!("{CSV_POSET},rank_gf"))?;
                ctx.line(format!("{},{}", args.csv_prefix(), coeff_list(&gf)))?;
            }
            Format::Json => ctx.json(json!({
                "command": "rankgf",
                "inputs": args.echo(),
                "rank_gf": gf.to_json(),
            }))?,
        }
        return Ok(Status::Pass);
    }
    if args.pyramid || args.trapezoid.is_some() || args.dual {
        bail!(usage(
            "--formula applies to T_n(S); the dual is chosen by the formula class"
        ));
    }
    let s = args.colors();
    let class = lib(classify(s))?;
    let expected = lib(rank_gf_formula(s, args.n()))?;
    let dual = formula_is_dual(s);
    let mut p = ColoredPoset::tetra(args.n(), s);
    if dual {
        p = p.dual();
    }
    let computed = rank_gf_fast(&p);
    let pass = computed == expected;
    match ctx.format {
        Format::Text => {
            ctx.line(format!(
                "class: {class}{}",
                if dual { " (dual poset)" } else { "" }
            ))?;
            ctx.line(format!("computed: {computed}"))?;
            ctx.line(format!("formula:  {expected}"))?;
            ctx.line(if pass { "PASS" } else { "FAIL" })?;
        }
        Format::Csv => {
            ctx.line("n,colors,class,dual,computed,formula,pass")?;
            ctx.line(format!(
                "{},{},{class},{dual},{},{},{pass}",
                args.n,
                s.letters(),
                coeff_list(&computed),
                coeff_list(&expected)
            ))?;
        }
        Format::Json => ctx.json(json!({
            "command": "rankgf",
            "inputs": args.echo(),
            "class": class.name(),
            "dual": dual,
            "computed": computed.to_json(),
            "expected": expected.to_json(),
            "pass": pass,
        }))?,
    }
    Ok(if pass { Status::Pass } else { Status::Mismatch })
}

fn env_cap() -> Result<Option<usize>> {
    match std::env::var("TETRAPOSET_NMAX") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| usage(format!("TETRAPOSET_NMAX must be a number, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn verify(suite: SuiteArg, n_max: usize, ctx: &mut Ctx) -> Result<Status> {
    let n_max = match env_cap()? {
        Some(cap) => n_max.min(cap),
        None => n_max,
    };
    let suites: Vec<Suite> = match suite {
        SuiteArg::One(s) => vec![s],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let certs: Vec<Certificate> = suites.into_iter().map(|s| run_suite(s, n_max)).collect();
    let pass = certs.iter().all(Certificate::pass);
    match ctx.format {
        Format::Json => {
            let v = if certs.len() == 1 {
                certs[0].to_json()
            } else {
                json!({ "pass": pass, "suites": certs.iter().map(Certificate::to_json).collect::<Vec<_>>() })
            };
            let mut v = v;
            v["command"] = json!("verify");
            ctx.json(v)?;
        }
        Format::Csv => {
            ctx.line("suite,name,n,colors,computed,expected,pass,informational")?;
            for c in &certs {
                for k in &c.checks {
                    ctx.line(format!(
                        "{},{},{},{},\"{}\",\"{}\",{},{}",
                        c.suite.name(),
                        k.name,
                        k.n,
                        k.colors.map(|s| s.letters()).unwrap_or_default(),
                        k.computed.to_string().replace('"', "\"\""),
                        k.expected.to_string().replace('"', "\"\""),
                        k.pass,
                        k.informational
                    ))?;
                }
            }
        }
        Format::Text => {
            for c in &certs {
                let failed = c.checks.iter().filter(|k| !k.ok()).count();
                let verdict = if c.pass() { "PASS" } else { "FAIL" };
                ctx.line(format!(
                    "{verdict} {} (n ≤ {}): {} checks, {failed} failed",
                    c.suite.name(),
                    c.n_max,
                    c.checks.len()
                ))?;
                for k in c.checks.iter().filter(|k| k.informational) {
                    let agree = if k.pass { "agree" } else { "differ" };
                    ctx.line(format!(
                        "  note: {} at n = {}: both sides {agree}",
                        k.name, k.n
                    ))?;
                }
                if let Some(k) = c.first_failure() {
                    let colors = k.colors.map(|s| format!(" {s}")).unwrap_or_default();
                    ctx.line(format!(
                        "  first failure: {}{colors} at n = {}",
                        k.name, k.n
                    ))?;
                    ctx.line(format!("    computed: {}", k.computed))?;
                    ctx.line(format!("    expected: {}", k.expected))?;
                }
            }
        }
    }
    Ok(if pass { Status::Pass } else { Status::Mismatch })
}

fn formula_row(s: ColorSet, n: usize) -> Result<Value> {
    let class = lib(classify(s))?;
    let count = count_formula(s, n).ok().map(|c| bigint_json(&c));
    let gf = rank_gf_formula(s, n).ok().map(|g| g.to_json());
    let known = known_counts(class)
        .and_then(|k| k.get(n - 1))
        .map(|&c| json!(c));
    Ok(json!({
        "colors": s.letters(),
        "class": class.name(),
        "count": count,
        "rank_gf": gf,
        "rank_gf_of_dual": gf.is_some() && formula_is_dual(s),
        "known_count": known,
    }))
}

fn formulas(n: usize, colors: Option<ColorSet>, ctx: &mut Ctx) -> Result<Status> {
    let sets = match colors {
        Some(s) => {
            if !s.is_admissible() {
                bail!(usage(format!("color set {s} is not admissible")));
            }
            vec![s]
        }
        None => ColorSet::admissible_sets(),
    };
    let rows = sets
        .iter()
        .map(|&s| formula_row(s, n))
        .collect::<Result<Vec<_>>>()?;
    let show = |v: &Value| match v {
        Value::Null => "-".to_string(),
        Value::Array(a) => a.iter().map(Value::to_string).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    };
    match ctx.format {
        Format::Json => ctx.json(json!({ "command": "formulas", "n": n, "sets": rows }))?,
        Format::Csv => {
            ctx.line("n,colors,class,count,known_count,rank_gf,rank_gf_of_dual")?;
            for r in &rows {
                ctx.line(format!(
                    "{n},{},{},{},{},{},{}",
                    r["colors"].as_str().unwrap_or_default(),
                    r["class"].as_str().unwrap_or_default(),
                    show(&r["count"]),
                    show(&r["known_count"]),
                    show(&r["rank_gf"]),
                    r["rank_gf_of_dual"]
                ))?;
            }
        }
        Format::Text => {
            for r in &rows {
                let count = match (&r["count"], &r["known_count"]) {
                    (Value::Null, Value::Null) => "no formula".to_string(),
                    (Value::Null, k) => format!("{k} (by enumeration)"),
                    (c, _) => c.to_string(),
                };
                let letters = r["colors"].as_str().unwrap_or_default();
                ctx.line(format!(
                    "{:<7} {:<18} {count}",
                    if letters.is_empty() { "-" } else { letters },
                    r["class"].as_str().unwrap_or_default()
                ))?;
            }
        }
    }
    Ok(Status::Pass)
}

fn read_payload(input: Option<String>) -> Result<String> {
    let raw = match input {
        Some(s) => s,
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("reading stdin")?;
            s
        }
    };
    Ok(raw.trim().to_string())
}

fn parse_json(raw: &str) -> Result<Value> {
    serde_json::from_str(raw).map_err(|e| usage(format!("payload is not JSON: {e}")))
}

fn canonical(name: &str) -> Result<&'static str> {
    Ok(match name {
        "asm" => "asm",
        "monotone" | "triangle" => "monotone",
        "yplus" => "yplus",
        "tsscpp" => "tsscpp",
        "tspp" => "tspp",
        "ideal" => "ideal",
        "dyck" => "dyck",
        "tournament" => "tournament",
        "ssyt" => "ssyt",
        "tournament-tableau" => "tournament-tableau",
        other => bail!(usage(format!("unknown object {other:?}"))),
    })
}

const ROUTES: &str =
    "asm<->monotone<->yplus, asm<->yplus, tsscpp<->yplus, tspp<->ideal, dyck<->ideal, \
                      tournament<->yplus, ssyt->tournament-tableau";

fn yplus_of(v: &Value) -> Result<StaircaseArray> {
    let a = lib(StaircaseArray::from_json(v, Variant::Yplus))?;
    Ok(match a.variant() {
        Variant::Yplus => a,
        Variant::Y => a.y_to_yplus(),
        Variant::X => a.x_to_y().y_to_yplus(),
    })
}

/// `{n, bits}` or a bare hex string with `--n`.
fn ideal_of(
    v: &Value,
    n: Option<usize>,
    universe: impl Fn(usize) -> ColoredPoset,
) -> Result<(ColoredPoset, OrderIdeal)> {
    let (n, bits) = match v {
        Value::Object(o) => {
            let n = o
                .get("n")
                .and_then(Value::as_u64)
                .map(|x| x as usize)
                .or(n)
                .ok_or_else(|| usage("ideal payload needs n"))?;
            let bits = o
                .get("bits")
                .and_then(Value::as_str)
                .ok_or_else(|| usage("ideal payload needs a hex \"bits\" string"))?;
            (n, bits.to_string())
        }
        Value::String(s) => (n.ok_or_else(|| usage("a bare ideal needs --n"))?, s.clone()),
        _ => bail!(usage("expected {\"n\": .., \"bits\": \"..\"}")),
    };
    if n == 0 {
        bail!(usage("n must be at least 1"));
    }
    let p = universe(n);
    let ideal = lib(OrderIdeal::from_hex(p.len(), &bits))?;
    lib(ideal.check(&p))?;
    Ok((p, ideal))
}

fn ideal_json(ideal: &OrderIdeal, p: &ColoredPoset) -> Value {
    let mut v = ideal.to_json();
    v["n"] = json!(p.n());
    v["poset"] = json!(if p.kind() == PosetKind::Pyramid {
        "pyramid"
    } else {
        "tetra"
    });
    v["elements"] = json!(ideal
        .indices()
        .map(|i| {
            let c = p.elements()[i];
            [c.c1, c.c2, c.c3]
        })
        .collect::<Vec<_>>());
    v
}

fn dyck_poset(n: usize) -> ColoredPoset {
    ColoredPoset::build_pyramid(n).restrict(ColorSet::of(&[Color::Blue, Color::Green]))
}

fn biject(
    from: &str,
    to: &str,
    n: Option<usize>,
    input: Option<String>,
    ctx: &mut Ctx,
) -> Result<Status> {
    let (from, to) = (canonical(from)?, canonical(to)?);
    if matches!((from, to), ("asm", "tsscpp") | ("tsscpp", "asm")) {
        bail!(usage(format!(
            "{from} -> {to}: open problem, no explicit bijection between ASMs and TSSCPPs is known"
        )));
    }
    let raw = read_payload(input)?;
    let out: Value = match (from, to) {
        ("asm", "monotone") => asm_to_monotone(&lib(Asm::from_json(&parse_json(&raw)?))?).to_json(),
        ("monotone", "asm") => lib(monotone_to_asm(&lib(MonotoneTriangle::from_json(
            &parse_json(&raw)?,
        ))?))?
        .to_json(),
        ("monotone", "yplus") => lib(monotone_to_yplus(&lib(MonotoneTriangle::from_json(
            &parse_json(&raw)?,
        ))?))?
        .to_json(),
        ("yplus", "monotone") => lib(yplus_to_monotone(&yplus_of(&parse_json(&raw)?)?))?.to_json(),
        ("asm", "yplus") => asm_to_yplus(&lib(Asm::from_json(&parse_json(&raw)?))?).to_json(),
        ("yplus", "asm") => lib(yplus_to_asm(&yplus_of(&parse_json(&raw)?)?))?.to_json(),
        ("tsscpp", "yplus") => lib(tsscpp_to_yplus(&lib(PlanePartition::from_json(
            &parse_json(&raw)?,
        ))?))?
        .to_json(),
        ("yplus", "tsscpp") => lib(yplus_to_tsscpp(&yplus_of(&parse_json(&raw)?)?))?.to_json(),
        ("tspp", "ideal") => {
            let pp = lib(PlanePartition::from_json(&parse_json(&raw)?))?;
            let p = ColoredPoset::build_tetra(pp.bounds()[0] + 1);
            ideal_json(&lib(tspp_to_ideal(&pp, &p))?, &p)
        }
        ("ideal", "tspp") => {
            let (p, ideal) = ideal_of(&parse_json(&raw)?, n, ColoredPoset::build_tetra)?;
            lib(ideal_to_tspp(&ideal, &p))?.to_json()
        }
        ("dyck", "ideal") => {
            let text = serde_json::from_str::<String>(&raw).unwrap_or(raw.clone());
            let d: DyckPath = lib(text.parse())?;
            if d.semilength() == 0 {
                bail!(usage("the Dyck path must be nonempty"));
            }
            let p = dyck_poset(d.semilength());
            ideal_json(&lib(dyck_to_ideal(&d, &p))?, &p)
        }
        ("ideal", "dyck") => {
            let (p, ideal) = ideal_of(&parse_json(&raw)?, n, dyck_poset)?;
            let d = lib(ideal_to_dyck(&ideal, &p))?;
            match ctx.format {
                Format::Json => json!(d.to_string()),
                _ => {
                    ctx.line(d.to_string())?;
                    return Ok(Status::Pass);
                }
            }
        }
        ("tournament", "yplus") => {
            let v = parse_json(&raw)?;
            let (n, upsets) = match &v {
                Value::Object(o) => (
                    o.get("n").and_then(Value::as_u64).map(|x| x as usize).or(n),
                    o.get("upsets").cloned().unwrap_or(Value::Null),
                ),
                _ => (n, v.clone()),
            };
            let n =
                n.ok_or_else(|| usage("a tournament needs --n or {\"n\": .., \"upsets\": [..]}"))?;
            tournament_to_yplus(&lib(Tournament::from_json(n, &upsets))?).to_json()
        }
        ("yplus", "tournament") => {
            let t = lib(yplus_to_tournament(&yplus_of(&parse_json(&raw)?)?))?;
            json!({ "n": t.n(), "upsets": t.to_json() })
        }
        ("ssyt", "tournament-tableau") => {
            let a = lib(StaircaseArray::from_json(&parse_json(&raw)?, Variant::Y))?;
            let a = match a.variant() {
                Variant::Y => a,
                Variant::Yplus => lib(a.yplus_to_y())?,
                Variant::X => a.x_to_y(),
            };
            let tt = lib(sundquist(&a))?;
            let t = tt.tournament();
            json!({ "n": tt.n(), "rows": tt.to_json(), "upsets": t.to_json() })
        }
        _ => bail!(usage(format!(
            "unsupported route {from} -> {to}; legal routes: {ROUTES}"
        ))),
    };
    match ctx.format {
        Format::Json => ctx.json(out)?,
        _ => ctx.line(serde_json::to_string(&out)?)?,
    }
    Ok(Status::Pass)
}
