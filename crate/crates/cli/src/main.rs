//! `geneasm`: command-line access to legal strings, overlap graphs and
//! reduction graphs.
//!
//! Exit codes: 0 success, 2 unparseable input, 3 string not legal, 4 realism
//! required but absent, 5 internal invariant violation.

mod crossval;
mod input;
mod render;

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use geneasm::direct::explain;
use geneasm::dot::{labelled_dot, overlap_dot, reduction_dot};
use geneasm::rewriting::{
    classify, predicted_negative_rule_count, predicted_negative_rule_count_graph, successful_in,
    RuleSet, DEFAULT_GRAPH_KAPPA_CAP,
};
use geneasm::sample::random_arrangement;
use geneasm::{
    canonical_labelled, cps_reduction, direct_reduction_graph, find_realistic_arrangement,
    DirectReductionGraph, Error, LegalString, MicronuclearArrangement, OverlapGraph,
    ReductionGraph, DEFAULT_REALISM_KAPPA_CAP,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use input::{parse_string, read_file, read_overlap_graph, Source};

pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    pub fn io(message: String) -> Self {
        Failure::new(2, message)
    }

    fn not_realistic(what: &str) -> Self {
        Failure::new(4, format!("{what} is not realistic"))
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotLegal(_) => 3,
            Error::GappedDomain => 4,
            Error::MalformedToken { .. }
            | Error::MagnitudeTooSmall(_)
            | Error::NotCompactable(_)
            | Error::InvalidArrangement(_)
            | Error::Json(_)
            | Error::InvalidGraph(_)
            | Error::MalformedRule(_)
            | Error::EmptyString
            | Error::CapExceeded { .. } => 2,
            _ => 5,
        };
        Failure::new(code, e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "geneasm", version, about = "Gene assembly on legal strings, overlap graphs and reduction graphs")]
struct Cli {
    /// Largest kappa for which the realism search runs.
    #[arg(long, global = true, env = "GENEASM_KAPPA_CAP", default_value_t = DEFAULT_REALISM_KAPPA_CAP)]
    kappa_cap: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

/// A string argument, or an overlap graph in JSON via `--graph`.
#[derive(clap::Args)]
struct GraphSource {
    #[command(flatten)]
    source: Source,

    /// Read an overlap graph in JSON instead of a string.
    #[arg(short, long, conflicts_with_all = ["input", "file"])]
    graph: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a string is legal and report whether it is realistic.
    Validate(Source),
    /// Encode a micronuclear arrangement such as "M7 M1 -M2" as a string.
    Encode(Source),
    /// Recover the micronuclear arrangement of a realistic string.
    Decode(Source),
    /// Signed overlap graph of a string.
    Overlap {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Reduction graph of a string.
    ReductionGraph {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compressed reduction graph of a string.
    Cps {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Reduction graph built directly from a realistic overlap graph.
    Direct {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// List the satisfied equations behind every edge.
        #[arg(long)]
        explain: bool,
        /// Skip the realism check.
        #[arg(long)]
        assume_realistic: bool,
    },
    /// Compare the compressed reduction graph of a string with a stored
    /// direct reduction graph.
    IsoCheck {
        #[arg(long, value_name = "STRING")]
        cps: String,
        #[arg(long, value_name = "FILE")]
        direct: PathBuf,
    },
    /// Number of connected components of the reduction graph.
    Components(Source),
    /// Number of negative rules in every successful reduction.
    CountNegative {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Which rule subsets reduce a realistic overlap graph successfully.
    Classify {
        #[command(flatten)]
        source: GraphSource,
        /// Only this subset, e.g. "gnr,gdr" or "{Gpr}".
        #[arg(long)]
        rules: Option<RuleSet>,
        /// Also search all reductions and compare.
        #[arg(long)]
        brute_force: bool,
    },
    /// Whether a string, or an overlap graph given with --graph, is realistic.
    CheckRealism {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Seeded random micronuclear arrangements with their encodings.
    Random {
        #[arg(long)]
        kappa: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Randomised cross-validation of the library's invariants.
    Crossval {
        #[arg(long, default_value_t = 500)]
        trials: u64,
        /// Largest kappa sampled; kappa is uniform on 2..=KAPPA.
        #[arg(long, default_value_t = 8)]
        kappa: u32,
        #[arg(long)]
        seed: u64,
    },
}

enum Input {
    String(LegalString),
    Graph(OverlapGraph),
}

impl GraphSource {
    fn read(&self) -> Result<Input, Failure> {
        match &self.graph {
            Some(path) => Ok(Input::Graph(read_overlap_graph(path)?)),
            None => Ok(Input::String(self.source.legal_string()?)),
        }
    }
}

impl Input {
    fn overlap_graph(&self) -> OverlapGraph {
        match self {
            Input::String(u) => OverlapGraph::of(u),
            Input::Graph(g) => g.clone(),
        }
    }

    /// An arrangement realising the input, if there is one.
    fn realisation(&self, cap: u32) -> Result<Option<MicronuclearArrangement>, Failure> {
        if let Input::String(u) = self {
            if let Some(delta) = MicronuclearArrangement::decode(u) {
                return Ok(Some(delta));
            }
        }
        Ok(find_realistic_arrangement(&self.overlap_graph(), cap)?)
    }

    fn require_realistic(&self, cap: u32) -> Result<OverlapGraph, Failure> {
        let g = self.overlap_graph();
        if g.is_empty() {
            return Ok(g);
        }
        match self.realisation(cap)? {
            Some(_) => Ok(g),
            None => Err(Failure::not_realistic("the overlap graph")),
        }
    }
}

fn direct_output(r: &DirectReductionGraph, format: Format) -> String {
    match format {
        Format::Json => r.to_json(),
        Format::Dot => labelled_dot("direct", r.graph(), ToString::to_string),
        Format::Text => render::direct_text(r),
    }
}

fn explain_text(g: &OverlapGraph) -> Result<String, Failure> {
    let mut out = String::new();
    for ((a, b), witnesses) in explain(g)? {
        writeln!(out, "{a} -- {b}").unwrap();
        for w in witnesses {
            writeln!(out, "  {w}").unwrap();
        }
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<String, Failure> {
    let cap = cli.kappa_cap;
    Ok(match cli.command {
        Command::Validate(source) => {
            let u = source.legal_string()?;
            format!(
                "legal=yes kappa={} realistic={}",
                u.kappa(),
                if MicronuclearArrangement::decode(&u).is_some() { "yes" } else { "no" }
            )
        }
        Command::Encode(source) => {
            let delta = MicronuclearArrangement::parse(&source.text()?)?;
            delta.encode().to_string()
        }
        Command::Decode(source) => {
            let u = source.legal_string()?;
            MicronuclearArrangement::decode(&u)
                .ok_or_else(|| Failure::not_realistic("the string"))?
                .to_string()
        }
        Command::Overlap { source, format } => {
            let g = OverlapGraph::of(&source.legal_string()?);
            match format {
                Format::Json => g.to_json(),
                Format::Dot => overlap_dot(&g),
                Format::Text => render::overlap_text(&g),
            }
        }
        Command::ReductionGraph { source, format } => {
            let rg = ReductionGraph::of(&source.legal_string()?);
            match format {
                Format::Json => render::reduction_json(&rg),
                Format::Dot => reduction_dot(&rg),
                Format::Text => render::reduction_text(&rg),
            }
        }
        Command::Cps { source, format } => {
            let g = cps_reduction(&ReductionGraph::of(&source.legal_string()?));
            match format {
                Format::Json => render::cps_json(&g),
                Format::Dot => labelled_dot("cps", &g, render::desire_id),
                Format::Text => canonical_labelled(&g)?.to_string(),
            }
        }
        Command::Direct {
            source,
            format,
            explain,
            assume_realistic,
        } => {
            let input = source.read()?;
            let g = if assume_realistic {
                input.overlap_graph()
            } else {
                input.require_realistic(cap)?
            };
            if explain {
                explain_text(&g)?
            } else {
                direct_output(&direct_reduction_graph(&g)?, format)
            }
        }
        Command::IsoCheck { cps, direct } => {
            let u = parse_string(&cps)?;
            let stored = DirectReductionGraph::from_json(&read_file(&direct)?)?;
            let left = canonical_labelled(&cps_reduction(&ReductionGraph::of(&u)))?;
            let right = canonical_labelled(stored.graph())?;
            if left == right { "isomorphic" } else { "not isomorphic" }.to_string()
        }
        Command::Components(source) => {
            ReductionGraph::of(&source.legal_string()?).component_count().to_string()
        }
        Command::CountNegative { source } => match source.read()? {
            Input::String(u) => predicted_negative_rule_count(&u)?.to_string(),
            graph @ Input::Graph(_) => {
                let g = graph.require_realistic(cap)?;
                predicted_negative_rule_count_graph(&g)?.to_string()
            }
        },
        Command::Classify {
            source,
            rules,
            brute_force,
        } => {
            let g = source.read()?.require_realistic(cap)?;
            let subsets = match rules {
                Some(s) => vec![s],
                None => RuleSet::all_subsets(),
            };
            let mut out = String::new();
            for s in subsets {
                let predicted = classify(&g, s)?;
                let word = |b: bool| if b { "successful" } else { "unsuccessful" };
                write!(out, "{} {}", s.graph_name(), word(predicted)).unwrap();
                if brute_force {
                    let searched = successful_in(&g, s, DEFAULT_GRAPH_KAPPA_CAP)?;
                    if searched != predicted {
                        return Err(Failure::new(
                            5,
                            format!(
                                "{}: classifier says {}, search says {}",
                                s.graph_name(),
                                word(predicted),
                                word(searched)
                            ),
                        ));
                    }
                    out.push_str(" search=agrees");
                }
                out.push('\n');
            }
            out
        }
        Command::CheckRealism { source } => {
            let input = source.read()?;
            let found = match &input {
                Input::String(u) => MicronuclearArrangement::decode(u),
                Input::Graph(_) => input.realisation(cap)?,
            };
            match (found, &input) {
                (Some(delta), _) => format!("realistic {delta}"),
                (None, Input::String(_)) => return Err(Failure::not_realistic("the string")),
                (None, Input::Graph(_)) => return Err(Failure::not_realistic("the overlap graph")),
            }
        }
        Command::Random { kappa, seed, count } => {
            if kappa < 2 {
                return Err(Failure::new(2, "kappa must be at least 2"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut out = String::new();
            for _ in 0..count {
                let delta = random_arrangement(kappa, &mut rng);
                writeln!(out, "{delta}\t{}", delta.encode()).unwrap();
            }
            out
        }
        Command::Crossval {
            trials,
            kappa,
            seed,
        } => {
            if kappa < 2 {
                return Err(Failure::new(2, "kappa must be at least 2"));
            }
            let report = crossval::run(trials, kappa, seed);
            if !report.failures.is_empty() {
                print!("{}", report.summary);
                let shown: Vec<&str> = report.failures.iter().take(10).map(String::as_str).collect();
                return Err(Failure::new(5, shown.join("\n")));
            }
            report.summary
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = stdout.write_all(render::with_newline(out).as_bytes());
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
