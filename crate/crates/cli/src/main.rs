mod cache;
mod checks;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use octoplane::algebra::TableDump;
use octoplane::classification::classification_table;
use octoplane::lie::{Construction, DiagonalPoint, InvariantForm, StabilizerParent, DEFAULT_CONE_SAMPLES};
use octoplane::plane::{run_axioms, translation_audit};
use octoplane::{Algebra, Gamma, LieReport, PolarityKind};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "octoplane", version, about = "Exact computations on the octonionic projective plane")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Composition, alternative, Moufang and zero-divisor checks.
    AlgebraCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "O")]
        algebra: Algebra,
    },
    /// Build a Lie algebra and identify its real form.
    Lie(LieArgs),
    /// Incidence axioms of the plane on random samples.
    PlaneAxioms {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "O")]
        algebra: Algebra,
        #[arg(long, default_value = "elliptic")]
        polarity: PolarityKind,
    },
    /// Recompute the classification table.
    Table {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        no_cache: bool,
    },
    /// Multiplication table of the basis units.
    MultTable {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "O")]
        algebra: Algebra,
    },
    /// Compare the published and the derived translation formulas.
    TranslationAudit {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "O")]
        algebra: Algebra,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Leave the timestamp out of JSON output.
    #[arg(long)]
    no_timestamp: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    DerAlg,
    Tri,
    So,
    DerJordan,
    E6,
    Cone,
    FixForm,
    Stabilizer,
}

#[derive(Args)]
struct LieArgs {
    #[arg(value_enum)]
    which: Which,
    #[arg(long, default_value = "O")]
    algebra: Algebra,
    #[arg(long, default_value = "+++", allow_hyphen_values = true)]
    gamma: Gamma,
    /// Form for fix-form: elliptic (beta) or hyperbolic (beta_minus).
    #[arg(long, default_value = "elliptic")]
    polarity: PolarityKind,
    #[arg(long, default_value = "f4")]
    parent: StabilizerParent,
    #[arg(long, default_value = "E11")]
    point: DiagonalPoint,
    /// Fail unless the identified name is this.
    #[arg(long)]
    expect: Option<String>,
    /// Fail unless the dimension is this.
    #[arg(long)]
    expect_dim: Option<usize>,
    /// Cone samples per batch.
    #[arg(long, default_value_t = DEFAULT_CONE_SAMPLES)]
    cone_samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    no_timestamp: bool,
    #[arg(long)]
    no_cache: bool,
}

/// Failure of a check, as opposed to an error while running it.
#[derive(Debug)]
struct Verification(String);

impl std::fmt::Display for Verification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Verification {}

/// Usage problems found after parsing.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    #[serde(skip_serializing_if = "Option::is_none")]
    timestamp: Option<u64>,
    #[serde(flatten)]
    body: &'a T,
}

struct Sink {
    format: Format,
    output: Option<PathBuf>,
    timestamp: bool,
}

impl Sink {
    fn new(format: Format, output: Option<PathBuf>, no_timestamp: bool, allowed: &[Format]) -> Result<Self> {
        if !allowed.contains(&format) {
            return Err(Usage("csv output is only available for table".into()).into());
        }
        Ok(Self {
            format,
            output,
            timestamp: !no_timestamp,
        })
    }

    fn write(&self, text: &str) -> Result<()> {
        match &self.output {
            Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
            None => {
                std::io::stdout().write_all(text.as_bytes())?;
                Ok(())
            }
        }
    }

    /// JSON of `body`, or `text()` for text output.
    fn emit<T: Serialize>(&self, body: &T, text: impl FnOnce() -> String) -> Result<()> {
        let out = if self.format == Format::Json {
            let timestamp = self
                .timestamp
                .then(|| SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()));
            serde_json::to_string_pretty(&Envelope { timestamp, body })? + "\n"
        } else {
            text()
        };
        self.write(&out)
    }
}

const TEXT_JSON: [Format; 2] = [Format::Text, Format::Json];

fn algebra_check(common: Common, algebra: Algebra) -> Result<()> {
    let sink = Sink::new(common.format, common.output, common.no_timestamp, &TEXT_JSON)?;
    let report = checks::algebra_check(algebra, common.samples, common.seed);
    sink.emit(&report, || {
        let mut s = format!("algebra {algebra}, {} samples, seed {}\n", report.samples, report.seed);
        for suite in &report.suites {
            s += &format!("  {:<18} {}/{} failures\n", suite.name, suite.failures, suite.checked);
            if let Some(c) = &suite.counterexample {
                s += &format!("    counterexample {}\n", serde_json::to_string(c).unwrap_or_default());
            }
        }
        if let Some([a, b]) = &report.zero_divisor {
            s += &format!("  zero divisor ({}) * ({}) = 0\n", a.join(", "), b.join(", "));
        }
        s += if report.passed { "pass\n" } else { "FAIL\n" };
        s
    })?;
    if !report.passed {
        bail!(Verification("algebra identities violated".into()));
    }
    Ok(())
}

fn construction(args: &LieArgs) -> Construction {
    let a = args.algebra;
    match args.which {
        Which::DerAlg => Construction::Derivations(a),
        Which::Tri => Construction::Triality(a),
        Which::So => Construction::So(a),
        Which::DerJordan => Construction::JordanDerivations(a, args.gamma),
        Which::E6 => Construction::DetPreserving(a, args.gamma),
        Which::Cone => Construction::ConeTangent {
            algebra: a,
            samples: args.cone_samples,
            seed: args.seed,
        },
        Which::FixForm => Construction::FixForm(
            a,
            match args.polarity {
                PolarityKind::Elliptic => InvariantForm::Beta,
                PolarityKind::Hyperbolic => InvariantForm::BetaMinus,
            },
        ),
        Which::Stabilizer => Construction::Stabilizer {
            algebra: a,
            gamma: args.gamma,
            parent: args.parent,
            point: args.point,
        },
    }
}

#[derive(Serialize)]
struct LieOutput {
    construction: String,
    #[serde(flatten)]
    report: LieReport,
}

fn lie(args: LieArgs) -> Result<()> {
    let sink = Sink::new(args.format, args.output.clone(), args.no_timestamp, &TEXT_JSON)?;
    let c = construction(&args);
    let sub = cache::Cache::new(!args.no_cache).get(&c)?;
    let out = LieOutput {
        construction: c.key(),
        report: sub.report(),
    };
    sink.emit(&out, || {
        let r = &out.report;
        let sig = r.signature.map_or("-".into(), |[p, n, z]| format!("({p}, {n}, {z})"));
        let chi = r.character.map_or("-".into(), |c| c.to_string());
        format!(
            "{}\n  name {}\n  dim {} in gl({})\n  signature {sig}\n  character {chi}\n  closed {}\n  digest {}\n",
            out.construction, r.name, r.dim, r.ambient_dim, r.closed, r.basis_digest
        )
    })?;
    let mut problems = Vec::new();
    if let Some(want) = &args.expect {
        if want != &out.report.name {
            problems.push(format!("expected {want}, identified {}", out.report.name));
        }
    }
    if let Some(want) = args.expect_dim {
        if want != out.report.dim {
            problems.push(format!("expected dimension {want}, found {}", out.report.dim));
        }
    }
    if !problems.is_empty() {
        bail!(Verification(problems.join("; ")));
    }
    Ok(())
}

fn plane_axioms(common: Common, algebra: Algebra, polarity: PolarityKind) -> Result<()> {
    if common.samples == 0 {
        bail!(Usage("--samples must be at least 1".into()));
    }
    let sink = Sink::new(common.format, common.output, common.no_timestamp, &TEXT_JSON)?;
    let report = run_axioms(algebra, polarity, common.samples, common.seed);
    let total = report.axiom_failures.total();
    sink.emit(&report, || {
        let f = serde_json::to_value(&report.axiom_failures).unwrap_or_default();
        let mut s = format!(
            "algebra {algebra}, polarity {polarity}, {} samples, seed {}\n",
            report.samples, report.seed
        );
        if let Some(map) = f.as_object() {
            for (k, v) in map {
                s += &format!("  {k:<22} {v}\n");
            }
        }
        s += &format!("  total failures {total}\n");
        s
    })?;
    if algebra.is_division() && total > 0 {
        bail!(Verification(format!("{total} axiom failures over {algebra}")));
    }
    Ok(())
}

fn table(common: Common, no_cache: bool) -> Result<()> {
    let sink = Sink::new(common.format, common.output, common.no_timestamp, &[Format::Text, Format::Json, Format::Csv])?;
    let cache = cache::Cache::new(!no_cache);
    let mut failure = None;
    let table = classification_table(|c| {
        cache.get(c).map_err(|e| {
            let msg = format!("{e:#}");
            failure = Some(e);
            octoplane::LieError::Malformed(msg)
        })
    });
    let table = match (table, failure) {
        (Ok(t), _) => t,
        (Err(_), Some(e)) => return Err(e),
        (Err(e), None) => return Err(e.into()),
    };
    match sink.format {
        Format::Csv => sink.write(&table.to_csv())?,
        _ => sink.emit(&table, || table.to_text())?,
    }
    if !table.passed() {
        bail!(Verification(format!("mismatches: {}", table.mismatches().join("; "))));
    }
    Ok(())
}

fn mult_table(common: Common, algebra: Algebra) -> Result<()> {
    let sink = Sink::new(common.format, common.output, common.no_timestamp, &TEXT_JSON)?;
    let dump = TableDump::of(algebra);
    sink.emit(&dump, || {
        let unit = |k: usize| if k == 0 { "1".to_string() } else { format!("i{k}") };
        let mut s = format!("algebra {algebra}, mu {}, metric {:?}\n", dump.mu, dump.metric);
        s += &format!("{:>4} ", "");
        s += &(0..8).map(|j| format!("{:>4}", unit(j))).collect::<String>();
        s += "\n";
        for (i, row) in dump.table.iter().enumerate() {
            s += &format!("{:>4} ", unit(i));
            for &(k, sign) in row {
                s += &format!("{:>4}", format!("{}{}", if sign < 0 { "-" } else { "" }, unit(k)));
            }
            s += "\n";
        }
        s
    })
}

fn audit(common: Common, algebra: Algebra) -> Result<()> {
    if common.samples == 0 {
        bail!(Usage("--samples must be at least 1".into()));
    }
    let sink = Sink::new(common.format, common.output, common.no_timestamp, &TEXT_JSON)?;
    let report = translation_audit(algebra, common.samples, common.seed);
    sink.emit(&report, || {
        let mut s = format!("algebra {algebra}, {} samples, seed {}\n", report.samples, report.seed);
        for c in &report.components {
            s += &format!(
                "  {:<8} agree {:>4}  differ {:>4}{}\n",
                c.component,
                c.agreements,
                c.disagreements,
                if c.disagreements > 0 { if c.documented { "  (documented)" } else { "  (UNDOCUMENTED)" } } else { "" }
            );
            if c.disagreements > 0 {
                s += &format!("    published {}\n    derived   {}\n", c.published_formula, c.derived_formula);
                for e in &c.evaluations {
                    s += &format!(
                        "    sample {:>3}: published {} derived {}\n",
                        e.sample,
                        e.published.join(","),
                        e.derived.join(",")
                    );
                }
            }
        }
        s += &format!(
            "  images on the Veronese set: published {}/{}, derived {}/{}\n",
            report.published_veronese, report.samples, report.derived_veronese, report.samples
        );
        s
    })?;
    if !report.passed() {
        bail!(Verification(format!(
            "undocumented discrepancies: {}",
            report.undocumented_discrepancies().join(", ")
        )));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::AlgebraCheck { common, algebra } => algebra_check(common, algebra),
        Command::Lie(args) => lie(args),
        Command::PlaneAxioms {
            common,
            algebra,
            polarity,
        } => plane_axioms(common, algebra, polarity),
        Command::Table { common, no_cache } => table(common, no_cache),
        Command::MultTable { common, algebra } => mult_table(common, algebra),
        Command::TranslationAudit { common, algebra } => audit(common, algebra),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<Usage>() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
