//! `rea`: command-line front end for the Reflection Equation algebra
//! workbench.  Reports are plain text by default; `--json` switches to a
//! stable machine-readable schema ("rea-report/1") whose bytes are identical
//! across identical invocations.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 input error, 3 resource or
//! degree-bound error.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use rea_core::charmap::{cayley_hamilton_check, ch, weight_system};
use rea_core::error::Error;
use rea_core::hecke::HeckeAlgebra;
use rea_core::ncalg::{default_degree_bound, unshift_map, Reducer, RelationSet, Variant};
use rea_core::spectral::{
    character, express_in_e_basis, hc_morphism, muhat_char, mu_char, power_sum_plain,
    powersum_hat_sym, powersum_sym, super_powersum, zamena_substitute, Partition,
};
use rea_core::symmetry::{BirankReport, Symmetry, SymmetryKind};
use rea_core::verify;
use rea_core::CentralElement;

#[derive(Parser)]
#[command(name = "rea", version, about = "Exact workbench for Reflection Equation algebras")]
struct Cli {
    /// Emit a machine-readable JSON report instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Load a serialized symmetry (JSON) instead of the default dj with N=2
    #[arg(long, global = true, value_name = "FILE")]
    load: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct symmetries and inspect their rank data
    Symmetry {
        #[command(subcommand)]
        cmd: SymmetryCmd,
    },
    /// Central elements through the characteristic map
    Central {
        #[command(subcommand)]
        cmd: CentralCmd,
    },
    /// Quantum weight system of a Hecke-algebra word polynomial
    Weights {
        /// Hecke expression, e.g. "t1.t2" or "t1.t2 + (q - q^-1) * t1"
        #[arg(long)]
        element: String,
        #[arg(long, value_parser = parse_variant)]
        variant: Variant,
        /// Reduction degree bound (default 2 (m+1))
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Eigenvalue parameterizations and characters
    Spectral {
        #[command(subcommand)]
        cmd: SpectralCmd,
    },
    /// Verification suites
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
}

#[derive(Args)]
struct BuildArgs {
    /// Symmetry family: dj, flip or superflip
    #[arg(long, default_value = "dj")]
    kind: String,
    /// Dimension N (dj, flip)
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Even dimension of a superflip
    #[arg(long)]
    m: Option<usize>,
    /// Odd dimension of a superflip
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Subcommand)]
enum SymmetryCmd {
    /// Construct and validate a symmetry; optionally write it to a file
    Build {
        #[command(flatten)]
        build: BuildArgs,
        /// Write the serialized symmetry to this path
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Ranks of the skew-symmetrizers A^(1)..A^(kmax)
    Birank {
        #[command(flatten)]
        build: BuildArgs,
        #[arg(long)]
        kmax: usize,
    },
}

#[derive(Subcommand)]
enum CentralCmd {
    /// Characteristic image ch_n(z) with a centrality verdict
    Ch {
        #[arg(long, value_parser = parse_variant)]
        variant: Variant,
        /// Hecke expression on n strands
        #[arg(long)]
        element: String,
        /// Strand count
        #[arg(long)]
        n: usize,
        /// Reduction degree bound (default 2 (m+1))
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Cayley-Hamilton identity, pass/fail per matrix entry
    CayleyHamilton {
        #[arg(long, value_parser = parse_variant)]
        variant: Variant,
        #[arg(long)]
        degree: Option<usize>,
    },
}

#[derive(Subcommand)]
enum SpectralCmd {
    /// Power sum parameterized by quantum eigenvalues
    Powersum {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        /// Number of odd eigenvalues (super parameterization)
        #[arg(long)]
        nsuper: Option<usize>,
        /// Use the hatted (modified-algebra) weights
        #[arg(long)]
        hat: bool,
    },
    /// Evaluate sum_i x_i^k at the eigenvalue characters of a partition
    Character {
        /// Partition as a comma list, e.g. "1,0"
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        k: usize,
        /// Evaluate at the hatted characters
        #[arg(long)]
        hat: bool,
        /// Print the q -> 1 limit
        #[arg(long)]
        q1: bool,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Run the full acceptance suite
    All {
        /// Working Drinfeld-Jimbo dimension
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Reduction degree bound
        #[arg(long, default_value_t = 4)]
        degree: usize,
    },
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    match s {
        "re" => Ok(Variant::Re),
        "mod" | "modified" | "modified_re" => Ok(Variant::ModifiedRe),
        other => Err(format!("unknown variant `{other}` (expected re or mod)")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Outcome {
    Pass,
    Fail,
    Error,
}

impl Outcome {
    fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Error => "error",
        }
    }

    fn exit_code(self) -> u8 {
        match self {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
            Outcome::Error => 2,
        }
    }
}

struct Report {
    command: String,
    inputs: Map<String, Value>,
    outcome: Outcome,
    artifacts: Map<String, Value>,
    text: String,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: Map::new(),
            outcome: Outcome::Pass,
            artifacts: Map::new(),
            text: String::new(),
        }
    }

    fn input(&mut self, key: &str, v: impl Into<Value>) {
        self.inputs.insert(key.to_string(), v.into());
    }

    fn artifact(&mut self, key: &str, v: impl Into<Value>) {
        self.artifacts.insert(key.to_string(), v.into());
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn to_json(&self) -> Value {
        json!({
            "schema": "rea-report/1",
            "command": self.command,
            "inputs": self.inputs,
            "outcome": self.outcome.as_str(),
            "artifacts": self.artifacts,
        })
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::DegreeBoundExceeded { .. } => 3,
        _ => 2,
    }
}

fn load_symmetry(cli: &Cli) -> Result<Symmetry, Error> {
    match &cli.load {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
            let value: Value = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("bad symmetry file: {e}")))?;
            Symmetry::from_json(&value)
        }
        None => Symmetry::drinfeld_jimbo(2),
    }
}

fn build_symmetry(args: &BuildArgs) -> Result<Symmetry, Error> {
    match args.kind.as_str() {
        "dj" => Symmetry::drinfeld_jimbo(args.n),
        "flip" => Symmetry::flip(args.n),
        "superflip" => {
            let m = args.m.ok_or_else(|| Error::Invalid("superflip needs --m".into()))?;
            let k = args.k.ok_or_else(|| Error::Invalid("superflip needs --k".into()))?;
            Symmetry::superflip(m, k)
        }
        other => Err(Error::Invalid(format!("unknown kind `{other}`"))),
    }
}

fn working_degree(sym: &Symmetry, requested: Option<usize>, minimum: usize) -> Result<usize, Error> {
    if let Some(d) = requested {
        return Ok(d);
    }
    match sym.even_birank() {
        Some(m) => Ok(default_degree_bound(m).max(minimum)),
        None => Err(Error::Invalid(
            "no even bi-rank detected; pass an explicit --degree".into(),
        )),
    }
}

/// Strand count for a Hecke expression: one more than the largest generator
/// index appearing as a `t<i>` token.
fn infer_strands(expr: &str) -> usize {
    let bytes = expr.as_bytes();
    let mut best = 1usize;
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c == 't' && (i == 0 || !(bytes[i - 1] as char).is_ascii_alphanumeric()) {
            let mut j = i + 1;
            while j < bytes.len() && (bytes[j] as char).is_ascii_digit() {
                j += 1;
            }
            if j > i + 1 {
                if let Ok(idx) = expr[i + 1..j].parse::<usize>() {
                    best = best.max(idx + 1);
                }
            }
            i = j;
        } else {
            i += 1;
        }
    }
    best
}

fn parse_partition(text: &str) -> Result<Partition, Error> {
    let parts: Result<Vec<usize>, _> = text
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect();
    let parts = parts.map_err(|_| Error::Parse(format!("bad partition `{text}`")))?;
    Partition::new(parts)
}

fn kind_name(sym: &Symmetry) -> &'static str {
    match sym.kind() {
        SymmetryKind::Hecke => "hecke",
        SymmetryKind::Involutive => "involutive",
    }
}

fn run(cli: &Cli) -> Result<Report, Error> {
    match &cli.command {
        Command::Symmetry { cmd } => match cmd {
            SymmetryCmd::Build { build, out } => {
                let mut report = Report::new("symmetry build");
                report.input("kind", build.kind.clone());
                report.input("n", build.n);
                let sym = build_symmetry(build)?;
                report.line(format!(
                    "constructed {} symmetry on V with dim {}",
                    kind_name(&sym),
                    sym.dim_v()
                ));
                report.line("axioms: braid ok, quadratic condition ok, skew-inverse ok");
                match sym.even_birank() {
                    Some(m) => report.line(format!("even bi-rank: ({m}|0)")),
                    None => report.line("even bi-rank: not detected (rank sequence does not terminate)"),
                }
                report.artifact("symmetry", sym.to_json());
                report.artifact("braid", true);
                report.artifact("condition", true);
                report.artifact(
                    "even_birank",
                    sym.even_birank().map(|m| json!(m)).unwrap_or(Value::Null),
                );
                if let Some(path) = out {
                    std::fs::write(path, serde_json::to_string_pretty(&sym.to_json()).unwrap())
                        .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))?;
                    report.line(format!("wrote {}", path.display()));
                }
                Ok(report)
            }
            SymmetryCmd::Birank { build, kmax } => {
                let mut report = Report::new("symmetry birank");
                report.input("kind", build.kind.clone());
                report.input("kmax", *kmax);
                let sym = if cli.load.is_some() { load_symmetry(cli)? } else { build_symmetry(build)? };
                let dims = sym.hilbert_dims(*kmax);
                report.line(format!("hilbert dims A^(1)..A^({kmax}): {dims:?}"));
                match sym.birank(*kmax) {
                    BirankReport::Even(m) => report.line(format!("even bi-rank: ({m}|0)")),
                    BirankReport::Undetermined { .. } => {
                        report.line("rank sequence does not terminate within kmax")
                    }
                }
                report.artifact("dims", json!(dims));
                Ok(report)
            }
        },
        Command::Central { cmd } => match cmd {
            CentralCmd::Ch { variant, element, n, degree } => {
                let mut report = Report::new("central ch");
                report.input("variant", variant.to_string());
                report.input("element", element.clone());
                report.input("n", *n);
                let sym = load_symmetry(cli)?;
                let algebra = HeckeAlgebra::for_symmetry(&sym, *n);
                let z = algebra.parse(element)?;
                let central = ch(&sym, *variant, &z, *n)?;
                let d = working_degree(&sym, *degree, central.expr.degree() + 1)?;
                report.input("degree", d);
                let reducer = Reducer::new(&RelationSet::new(&sym, *variant), d);
                let verdict = reducer.is_central(&central.expr)?;
                report.line(format!("ch({element}) = {}", central.expr));
                report.line(format!("central at degree {d}: {verdict}"));
                report.artifact("expr", central.expr.to_string());
                report.artifact("central", verdict);
                // compare with the matching power sum Tr_R L^n
                let pn = rea_core::charmap::power_sum(&sym, *variant, *n);
                let equals_pn = reducer.equivalent(&central.expr, &pn.expr)?;
                report.line(format!("equals Tr_R L^{n}: {equals_pn}"));
                report.artifact("equals_power_sum", equals_pn);
                if !verdict {
                    report.outcome = Outcome::Fail;
                }
                Ok(report)
            }
            CentralCmd::CayleyHamilton { variant, degree } => {
                let mut report = Report::new("central cayley-hamilton");
                report.input("variant", variant.to_string());
                let sym = load_symmetry(cli)?;
                let m = sym
                    .even_birank()
                    .ok_or_else(|| Error::Invalid("Cayley-Hamilton needs an even bi-rank".into()))?;
                let d = working_degree(&sym, *degree, 2 * m)?;
                report.input("degree", d);
                let reducer = Reducer::new(&RelationSet::new(&sym, *variant), d);
                let verdicts = cayley_hamilton_check(&sym, *variant, m, &reducer)?;
                let dim = sym.dim_v();
                let mut all = true;
                for (idx, ok) in verdicts.iter().enumerate() {
                    report.line(format!(
                        "entry ({}, {}): {}",
                        idx / dim,
                        idx % dim,
                        if *ok { "pass" } else { "FAIL" }
                    ));
                    all &= ok;
                }
                report.artifact("entries", json!(verdicts));
                report.artifact("all_zero", all);
                if !all {
                    report.outcome = Outcome::Fail;
                }
                Ok(report)
            }
        },
        Command::Weights { element, variant, degree } => {
            let mut report = Report::new("weights");
            report.input("variant", variant.to_string());
            report.input("element", element.clone());
            let sym = load_symmetry(cli)?;
            let n = infer_strands(element);
            report.input("n", n);
            let algebra = HeckeAlgebra::for_symmetry(&sym, n);
            let z = algebra.parse(element)?;
            let w = weight_system(&sym, *variant, &z, n)?;
            let d = working_degree(&sym, *degree, w.expr.degree() + 1)?;
            report.input("degree", d);
            let reducer = Reducer::new(&RelationSet::new(&sym, *variant), d);
            let central = reducer.is_central(&w.expr)?;
            report.line(format!("w({element}) = {}", w.expr));
            report.line(format!("central at degree {d}: {central}"));
            report.artifact("expr", w.expr.to_string());
            report.artifact("central", central);
            match express_in_e_basis(&w, &sym, &reducer, w.expr.degree()) {
                Ok(in_e) => {
                    report.line(format!("e-basis: {in_e}"));
                    report.artifact("e_basis", in_e.to_string());
                    match variant {
                        Variant::Re => {
                            let hc = hc_morphism(&in_e);
                            report.line(format!("hc image: {hc}"));
                            report.artifact("hc_image", hc.to_string());
                        }
                        Variant::ModifiedRe => {
                            // hatted image through the homogeneous algebra
                            if let Ok(unshifted) = unshift_map(&w.expr, &sym) {
                                let in_l = CentralElement {
                                    expr: unshifted,
                                    variant: Variant::Re,
                                    provenance: String::new(),
                                };
                                let red_re = Reducer::new(&RelationSet::new(&sym, Variant::Re), d);
                                if let Ok(e_l) =
                                    express_in_e_basis(&in_l, &sym, &red_re, in_l.expr.degree())
                                {
                                    let hatted = zamena_substitute(&hc_morphism(&e_l));
                                    report.line(format!("hc image (hatted variables): {hatted}"));
                                    report.artifact("hc_image_hatted", hatted.to_string());
                                }
                            }
                        }
                    }
                }
                Err(Error::NotInSpan(_)) => {
                    report.line("not expressible in the e-basis at this degree");
                    report.artifact("e_basis", Value::Null);
                }
                Err(e) => return Err(e),
            }
            if !central {
                report.outcome = Outcome::Fail;
            }
            Ok(report)
        }
        Command::Spectral { cmd } => match cmd {
            SpectralCmd::Powersum { k, m, nsuper, hat } => {
                let mut report = Report::new("spectral powersum");
                report.input("k", *k);
                report.input("m", *m);
                report.input("hat", *hat);
                let p = match (nsuper, hat) {
                    (Some(n), false) => {
                        report.input("nsuper", *n);
                        super_powersum(*k, *m, *n)?
                    }
                    (Some(_), true) => {
                        return Err(Error::Invalid(
                            "hatted super power sums are not parameterized".into(),
                        ))
                    }
                    (None, true) => powersum_hat_sym(*k, *m)?,
                    (None, false) => powersum_sym(*k, *m)?,
                };
                report.line(format!("p_{k} = {p}"));
                report.artifact("polynomial", p.to_string());
                report.artifact("terms", p.to_json());
                Ok(report)
            }
            SpectralCmd::Character { lambda, k, hat, q1 } => {
                let mut report = Report::new("spectral character");
                report.input("lambda", lambda.clone());
                report.input("k", *k);
                report.input("hat", *hat);
                report.input("q1", *q1);
                let partition = parse_partition(lambda)?;
                let m = partition.parts().len();
                let values = if *hat {
                    muhat_char(&partition, m)?
                } else {
                    mu_char(&partition, m)?
                };
                let value = character(&power_sum_plain(*k, m), &values)?;
                if *q1 {
                    let limit = value.limit_q1()?;
                    report.line(format!("{limit}"));
                    report.artifact("value_q1", limit.to_string());
                } else {
                    report.line(format!("{value}"));
                    report.artifact("value", value.to_string());
                }
                Ok(report)
            }
        },
        Command::Verify { cmd } => match cmd {
            VerifyCmd::All { n, degree } => {
                let mut report = Report::new("verify all");
                report.input("n", *n);
                report.input("degree", *degree);
                let criteria = verify::run_all(*n, *degree)?;
                let mut all = true;
                let mut summary = Vec::new();
                for criterion in &criteria {
                    report.line(criterion.summary_line());
                    if !criterion.passed() {
                        for label in criterion.failures() {
                            report.line(format!("    FAIL: {label}"));
                        }
                        all = false;
                    }
                    summary.push(json!({
                        "id": criterion.id,
                        "name": criterion.name,
                        "passed": criterion.passed(),
                        "checks": criterion.checks.len(),
                    }));
                }
                report.line(if all { "verdict: PASS" } else { "verdict: FAIL" });
                report.artifact("criteria", Value::Array(summary));
                report.artifact("all_passed", all);
                if !all {
                    report.outcome = Outcome::Fail;
                }
                Ok(report)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
            } else {
                print!("{}", report.text);
                println!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
            }
            ExitCode::from(report.outcome.exit_code())
        }
        Err(err) => {
            let code = exit_code_for(&err);
            if cli.json {
                let mut report = Report::new("error");
                report.outcome = Outcome::Error;
                let mut msg = String::new();
                let _ = write!(msg, "{err}");
                report.artifact("error", msg);
                println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
            } else {
                eprintln!("error: {err}");
            }
            ExitCode::from(code)
        }
    }
}
