//! Command-line front end.
//!
//! Every command renders to a string so the binary stays a thin wrapper and
//! output can be compared byte for byte in tests.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::braid::{BraidSequence, FlaggedTriple};
use crate::budget::Budgets;
use crate::element::Word;
use crate::enumeration::{
    self, census, content_maximal_series, count_content_maximal, estimated_elements, recurrence_f,
    CensusOptions, CensusReport,
};
use crate::error::{Error, Result};
use crate::graph::{CoxeterGraph, Family};
use crate::pattern;
use crate::verify::{run_suite, Suite, SuiteOutcome};

/// Censuses above this many estimated elements need `--slow`.
pub const SLOW_ELEMENT_THRESHOLD: u128 = 3_000_000;
/// Same, when Poincaré polynomials are requested as well.
pub const SLOW_SMOOTHNESS_THRESHOLD: u128 = 200_000;

#[derive(Debug, Parser)]
#[command(
    name = "freebraid",
    version,
    about = "Freely braided elements of simply laced Coxeter groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads for censuses.
    #[arg(long, default_value_t = 1, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,

    /// Allow jobs estimated to take more than a minute.
    #[arg(long, global = true)]
    pub slow: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args, Clone)]
pub struct GraphArgs {
    /// Family of the Coxeter diagram (A, D or E).
    #[arg(long = "type", value_name = "FAMILY", value_parser = parse_family, conflicts_with = "graph", requires = "rank")]
    pub family: Option<Family>,

    /// Rank of the diagram.
    #[arg(long, requires = "family")]
    pub rank: Option<usize>,

    /// Custom diagram file (`rank n` then `edge i j` lines).
    #[arg(long)]
    pub graph: Option<PathBuf>,
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    match s.parse::<Family>() {
        Ok(Family::Custom) => Err("use --graph for custom diagrams".into()),
        Ok(f) => Ok(f),
        Err(e) => Err(e.to_string()),
    }
}

impl GraphArgs {
    pub fn load(&self) -> Result<CoxeterGraph> {
        match (&self.family, self.rank, &self.graph) {
            (Some(f), Some(n), None) => CoxeterGraph::build(*f, n),
            (None, None, Some(path)) => CoxeterGraph::parse(&std::fs::read_to_string(path)?),
            _ => Err(Error::Invalid(
                "give either --type with --rank, or --graph".into(),
            )),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one element given by a word.
    Classify {
        #[command(flatten)]
        graph: GraphArgs,
        /// Comma-separated 1-based letters; empty for the identity.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Census of all elements up to a length.
    Census {
        #[command(flatten)]
        graph: GraphArgs,
        /// Largest length (default: the whole finite group).
        #[arg(long)]
        max_length: Option<usize>,
        /// Also decide smoothness of freely braided elements.
        #[arg(long)]
        smoothness: bool,
        /// Also tally the seven chain classes of content-maximal elements.
        #[arg(long)]
        classes: bool,
        /// Line-delimited cache file to resume from.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Number of content-maximal elements.
    CountCm {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// Coefficients of a family's content-maximal generating function.
    Series {
        #[arg(long = "type", value_name = "FAMILY", value_parser = parse_family)]
        family: Family,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Iterate f(n) = 3f(n-1) + f(n-2) - f(n-3).
    Recurrence {
        /// Three consecutive values, comma separated.
        #[arg(long)]
        seeds: String,
        #[arg(long, default_value_t = 5)]
        steps: usize,
    },
    /// Run a named property suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        max_length: Option<usize>,
    },
}

/// Rendered output plus process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub text: String,
    pub exit_code: i32,
}

impl Rendered {
    fn ok(text: String) -> Self {
        Self { text, exit_code: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractedReport {
    pub word: Word,
    pub braids: BraidSequence,
}

/// Output of `classify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub graph: String,
    pub input: Word,
    pub word: Word,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
    pub length: usize,
    pub support: Vec<usize>,
    pub triples: Vec<FlaggedTriple>,
    pub n: usize,
    pub freely_braided: bool,
    pub content_maximal: bool,
    pub fully_commutative: bool,
    pub poincare: Vec<u64>,
    pub palindromic: bool,
    pub smooth: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contracted: Option<ContractedReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one_line: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub family: Family,
    pub numerator: Vec<i128>,
    pub denominator: Vec<i128>,
    pub coefficients: Vec<i128>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub graph: String,
    pub max_length: usize,
    pub content_maximal: u64,
}

pub fn classify(graph: &CoxeterGraph, input: &Word, budgets: &Budgets) -> Result<ClassifyReport> {
    let w = graph.element(input)?;
    let rec = graph.classify(&w, budgets)?;
    let warning = (rec.length != input.len()).then(|| {
        format!(
            "input {input} is not reduced; classified its element, reduced form {}",
            rec.word
        )
    });
    let verdict = graph.smoothness(&w, budgets)?;
    let contracted = if rec.freely_braided {
        let (word, braids) = graph.contracted_expression(&w, budgets)?;
        Some(ContractedReport { word, braids })
    } else {
        None
    };
    let one_line = (graph.family() == Family::A)
        .then(|| pattern::one_line(graph, &w))
        .transpose()?;
    Ok(ClassifyReport {
        graph: graph.name(),
        input: input.clone(),
        word: rec.word.clone(),
        warning,
        length: rec.length,
        support: rec.support.iter().copied().collect(),
        n: rec.contractible_count,
        freely_braided: rec.freely_braided,
        content_maximal: rec.content_maximal,
        fully_commutative: rec.fully_commutative,
        triples: rec.triples,
        poincare: verdict.poincare.coeffs().to_vec(),
        palindromic: verdict.palindromic,
        smooth: verdict.smooth,
        contracted,
        one_line,
    })
}

fn refuse_infinite_e(graph: &CoxeterGraph) -> Result<()> {
    if graph.family() == Family::E && graph.rank() >= 9 {
        return Err(Error::Unsupported(format!(
            "{} is infinite; use `series` or `recurrence` for its counts",
            graph.name()
        )));
    }
    Ok(())
}

fn gate_slow(
    graph: &CoxeterGraph,
    max_length: Option<usize>,
    smoothness: bool,
    slow: bool,
) -> Result<()> {
    if slow {
        return Ok(());
    }
    if graph.family() == Family::E && graph.rank() == 8 {
        return Err(Error::Unsupported("E_8 runs behind --slow".into()));
    }
    let estimate = match max_length {
        Some(l) => estimated_elements(graph, l),
        None => estimated_elements(graph, usize::MAX / 2),
    };
    let threshold = if smoothness {
        SLOW_SMOOTHNESS_THRESHOLD
    } else {
        SLOW_ELEMENT_THRESHOLD
    };
    if let Some(n) = estimate {
        if n > threshold {
            return Err(Error::Unsupported(format!(
                "{} would classify about {n} elements (over a minute); rerun with --slow",
                graph.name()
            )));
        }
    }
    Ok(())
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn kv_text(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:width$}  {v}\n"))
        .collect()
}

fn kv_csv(rows: &[(&str, String)]) -> String {
    let mut s = String::from("field,value\n");
    for (k, v) in rows {
        let v = if v.contains(',') || v.contains('"') {
            format!("\"{}\"", v.replace('"', "\"\""))
        } else {
            v.clone()
        };
        let _ = writeln!(s, "{k},{v}");
    }
    s
}

fn list<T: ToString>(v: &[T]) -> String {
    format!(
        "[{}]",
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
}

fn render_classify(r: &ClassifyReport, format: Format) -> String {
    if format == Format::Json {
        return json(r);
    }
    let triples = r
        .triples
        .iter()
        .map(|t| format!("{}{}", t.triple, if t.contractible { "*" } else { "" }))
        .collect::<Vec<_>>()
        .join(" ");
    let mut rows = vec![
        ("graph", r.graph.clone()),
        ("input", r.input.to_string()),
        ("word", r.word.to_string()),
    ];
    if let Some(w) = &r.warning {
        rows.push(("warning", w.clone()));
    }
    rows.extend([
        ("length", r.length.to_string()),
        ("support", list(&r.support)),
        ("triples", triples),
        ("n", r.n.to_string()),
        ("freely_braided", r.freely_braided.to_string()),
        ("content_maximal", r.content_maximal.to_string()),
        ("fully_commutative", r.fully_commutative.to_string()),
        ("poincare", list(&r.poincare)),
        ("palindromic", r.palindromic.to_string()),
        ("smooth", r.smooth.to_string()),
    ]);
    if let Some(c) = &r.contracted {
        let b = c
            .braids
            .0
            .iter()
            .map(|b| format!("{}:{}{}{}", b.position, b.outer, b.inner, b.outer));
        rows.push((
            "contracted",
            format!("{} braids {}", c.word, list(&b.collect::<Vec<_>>())),
        ));
    }
    if let Some(p) = &r.one_line {
        rows.push((
            "one_line",
            p.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        ));
    }
    match format {
        Format::Csv => kv_csv(&rows),
        _ => kv_text(&rows),
    }
}

pub const CENSUS_CSV_HEADER: &str =
    "family,rank,total,fully_commutative,freely_braided,content_maximal";

fn render_census(r: &CensusReport, format: Format) -> String {
    match format {
        Format::Json => json(r),
        Format::Csv => format!(
            "{CENSUS_CSV_HEADER}\n{},{},{},{},{},{}\n",
            r.family, r.rank, r.total, r.fully_commutative, r.freely_braided, r.content_maximal
        ),
        Format::Text => {
            let mut rows = vec![
                ("graph", r.graph.clone()),
                (
                    "max_length",
                    r.max_length.map_or("full".into(), |l| l.to_string()),
                ),
                ("total", r.total.to_string()),
                ("fully_commutative", r.fully_commutative.to_string()),
                ("freely_braided", r.freely_braided.to_string()),
                ("content_maximal", r.content_maximal.to_string()),
            ];
            if let Some(s) = r.smooth_freely_braided {
                rows.push(("smooth_freely_braided", s.to_string()));
            }
            if let Some(c) = r.chain_classes {
                rows.push(("chain_classes", list(&c)));
            }
            kv_text(&rows)
        }
    }
}

fn render_verify(o: &SuiteOutcome, format: Format) -> String {
    match format {
        Format::Json => json(o),
        Format::Csv => format!(
            "suite,graph,checked,passed,counterexample\n{},{},{},{},{}\n",
            o.suite,
            o.graph,
            o.checked,
            o.passed,
            o.counterexample
                .as_ref()
                .map(|w| w.to_csv())
                .unwrap_or_default()
                .replace(',', " ")
        ),
        Format::Text => {
            let mut s = format!(
                "{} {} on {}: {} checked; {}\n",
                if o.passed { "PASS" } else { "FAIL" },
                o.suite,
                o.graph,
                o.checked,
                o.detail
            );
            if let Some(w) = &o.counterexample {
                let _ = writeln!(s, "counterexample {w}");
            }
            s
        }
    }
}

fn render_sequence(name: &str, start: usize, values: &[i128], format: Format) -> String {
    match format {
        Format::Json => json(&values),
        Format::Csv => {
            let mut s = format!("{name},value\n");
            for (k, v) in values.iter().enumerate() {
                let _ = writeln!(s, "{},{v}", k + start);
            }
            s
        }
        Format::Text => {
            values
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ")
                + "\n"
        }
    }
}

fn parse_seeds(s: &str) -> Result<[i128; 3]> {
    let v: Vec<i128> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i128>()
                .map_err(|_| Error::Invalid(format!("bad seed {t:?}")))
        })
        .collect::<Result<_>>()?;
    v.try_into()
        .map_err(|_| Error::Invalid("exactly three seeds are required".into()))
}

/// Runs one command and renders its output.
pub fn execute(cli: &Cli, budgets: &Budgets) -> Result<Rendered> {
    let format = cli.format;
    match &cli.command {
        Command::Classify { graph, word } => {
            let g = graph.load()?;
            let input: Word = word.parse()?;
            let report = classify(&g, &input, budgets)?;
            Ok(Rendered::ok(render_classify(&report, format)))
        }
        Command::Census {
            graph,
            max_length,
            smoothness,
            classes,
            cache,
        } => {
            let g = graph.load()?;
            refuse_infinite_e(&g)?;
            gate_slow(&g, *max_length, *smoothness, cli.slow)?;
            let options = CensusOptions {
                max_length: *max_length,
                smoothness: *smoothness,
                chain_classes: *classes,
                jobs: cli.jobs as usize,
                cache: cache.clone(),
            };
            let report = census(&g, &options, budgets)?;
            Ok(Rendered::ok(render_census(&report, format)))
        }
        Command::CountCm { graph, max_length } => {
            let g = graph.load()?;
            refuse_infinite_e(&g)?;
            let bound = max_length.unwrap_or_else(|| enumeration::content_maximal_length_bound(&g));
            gate_slow(&g, Some(bound), false, cli.slow)?;
            let n = count_content_maximal(&g, *max_length, cli.jobs as usize, budgets)?;
            let report = CountReport {
                graph: g.name(),
                max_length: bound,
                content_maximal: n,
            };
            let text = match format {
                Format::Json => json(&report),
                Format::Csv => format!(
                    "graph,max_length,content_maximal\n{},{},{}\n",
                    report.graph, bound, n
                ),
                Format::Text => format!("{n}\n"),
            };
            Ok(Rendered::ok(text))
        }
        Command::Series { family, order } => {
            let series = content_maximal_series(*family).expect("A, D or E");
            let coefficients = series.expand(*order);
            let text = match format {
                Format::Json => json(&SeriesReport {
                    family: *family,
                    numerator: series.numerator().to_vec(),
                    denominator: series.denominator().to_vec(),
                    coefficients,
                }),
                Format::Csv => render_sequence("degree", 0, &coefficients, format),
                Format::Text => {
                    let first = coefficients
                        .iter()
                        .position(|&c| c != 0)
                        .unwrap_or(coefficients.len());
                    render_sequence("degree", first, &coefficients[first..], format)
                }
            };
            Ok(Rendered::ok(text))
        }
        Command::Recurrence { seeds, steps } => {
            let values = recurrence_f(parse_seeds(seeds)?, *steps);
            Ok(Rendered::ok(render_sequence("index", 0, &values, format)))
        }
        Command::Verify {
            suite,
            graph,
            max_length,
        } => {
            let suite: Suite = suite.parse()?;
            let g = graph.load()?;
            let outcome = run_suite(suite, &g, *max_length, budgets)?;
            let code = if outcome.passed { 0 } else { 1 };
            Ok(Rendered {
                text: render_verify(&outcome, format),
                exit_code: code,
            })
        }
    }
}
