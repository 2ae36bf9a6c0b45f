//! `seifert-net`: classification of integral torus-knot surgeries,
//! seiferter twists, catalog inspection, arithmetic sweeps, and network
//! graph export.
//!
//! Exit codes: `0` success, `1` sweep failure or internal error, `2`
//! invalid parameters, `3` invalid twist step, `4` absent graph vertex.

mod literal;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use seifert_net_core::classify::unknot_surgery;
use seifert_net_core::model::spreader_slope;
use seifert_net_core::twist::ScriptStep;
use seifert_net_core::verify::{CheckRecord, VerifyBounds, VerifyReport};
use seifert_net_core::{
    build_figure2, build_subcomplex_t, canonical_torus_knot, classify_surgery, run_all,
    surgered_invariants, twist_along_seiferter, AnnularPairRecord, Catalog, KnotDescriptor,
    KnotError, ManifoldDescription, NetworkError, NetworkGraph, SeifertInvariants, SeifertSurgery,
    Seiferter,
};

const OUTPUT_SCHEMA_VERSION: u32 = 1;

const LITERAL_HELP: &str = "Surgery literals name a host and an integral slope: 'T(p,q),m' for a \
torus knot, 'O,m' for the unknot, and 'NAME,m' for a cataloged name such as 'P(-2,3,7),18'. \
Twist steps are written 'SEIFERTER:TURNS', e.g. 'c_mu:-3'.";

#[derive(Parser)]
#[command(
    name = "seifert-net",
    version,
    about = "Seifert surgeries on torus knots: classify, twist along seiferters, sweep the supporting arithmetic, and export network graphs",
    after_help = LITERAL_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify integral surgery on a torus knot or the unknot
    Classify(ClassifyArgs),
    /// Apply a script of seiferter twists to a base surgery
    Twist(TwistArgs),
    /// List cataloged seiferters and annular pairs at a host surgery
    Catalog(CatalogArgs),
    /// Run every arithmetic sweep and report pass/fail per check
    VerifyAll(VerifyAllArgs),
    /// Build, export, and query network graphs
    Network(NetworkArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    /// First torus knot parameter (sign carries chirality)
    #[arg(short, allow_negative_numbers = true)]
    p: i64,
    /// Second torus knot parameter, at least 1
    #[arg(short)]
    q: i64,
    /// Integral surgery slope
    #[arg(short, allow_negative_numbers = true)]
    m: i64,
    /// Emit a JSON report instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TwistArgs {
    /// Base surgery literal, e.g. 'T(-3,2),-7'
    #[arg(long)]
    base: String,
    /// JSON file holding an array of {"seiferter": ID, "turns": N} steps
    #[arg(long)]
    script: Option<PathBuf>,
    /// Inline step 'SEIFERTER:TURNS'; repeat for longer scripts
    #[arg(long = "step")]
    steps: Vec<String>,
    /// Emit a JSON report instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CatalogArgs {
    /// Host surgery literal, e.g. 'T(-3,2),-7'
    #[arg(long)]
    host: String,
    /// Emit a JSON report instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyAllArgs {
    /// Largest odd base index in the prism sweeps
    #[arg(long, default_value_t = 99)]
    x_max: i64,
    /// Half-width of the obstruction-constant range in the prism sweeps
    #[arg(long, default_value_t = 10)]
    b_span: i64,
    /// Largest |p|*q in the band-sum sweep
    #[arg(long, default_value_t = 60)]
    pq_max: i64,
    /// Largest family parameter in the lens-family sweeps
    #[arg(long, default_value_t = 10000)]
    n_max: i64,
    /// Largest |p| in the meridian-exclusion sweep
    #[arg(long, default_value_t = 100)]
    p_max_meridian: i64,
    /// Largest family parameter in the twist-identity sweep
    #[arg(long, default_value_t = 1000)]
    slope_n_max: i64,
    /// Worker threads for the sweeps; 0 uses all cores
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Write the JSON report to a file
    #[arg(long)]
    output: Option<PathBuf>,
    /// Print the JSON report to stdout instead of the text summary
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct NetworkArgs {
    #[command(subcommand)]
    command: NetworkCommand,
}

#[derive(Subcommand)]
enum NetworkCommand {
    /// Build the torus-knot subcomplex within the given bounds
    #[command(name = "build-T")]
    BuildT {
        /// Largest canonical |p| among torus-knot hosts, at least 2
        #[arg(long)]
        p_max: i64,
        /// Largest |m - pq| among included slopes, at least 0
        #[arg(long)]
        radius: i64,
        #[arg(long, value_enum, default_value_t = ExportFormat::Dot)]
        format: ExportFormat,
        /// Write to a file instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the trefoil neighborhood with its two known departures
    Figure2 {
        #[arg(long, value_enum, default_value_t = ExportFormat::Dot)]
        format: ExportFormat,
        /// Write to a file instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Shortest path from a vertex to the torus-knot subcomplex
    Path {
        /// Start vertex as a surgery literal
        #[arg(long)]
        vertex: String,
        /// Search the bounded subcomplex instead of the trefoil neighborhood
        #[arg(long, requires = "radius")]
        p_max: Option<i64>,
        #[arg(long, requires = "p_max")]
        radius: Option<i64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn new(code: u8, error: impl Into<anyhow::Error>) -> Failure {
        Failure {
            code,
            error: error.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {:#}", failure.error);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify(args) => cmd_classify(args),
        Command::Twist(args) => cmd_twist(args),
        Command::Catalog(args) => cmd_catalog(args),
        Command::VerifyAll(args) => cmd_verify_all(args),
        Command::Network(args) => cmd_network(args.command),
    }
}

fn load_catalog() -> Result<Catalog, Failure> {
    Catalog::load().map_err(|e| Failure::new(1, anyhow!(e).context("loading catalog")))
}

fn emit(path: Option<&PathBuf>, content: &str) -> Result<(), Failure> {
    match path {
        Some(path) => fs::write(path, content)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(|e| Failure::new(1, e)),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn classification_of(surgery: &SeifertSurgery) -> Option<ManifoldDescription> {
    let knot = surgery.knot.as_torus()?;
    if knot.is_unknot() {
        Some(unknot_surgery(surgery.slope))
    } else {
        classify_surgery(knot.p(), knot.q(), surgery.slope).ok()
    }
}

#[derive(Serialize)]
struct ClassifyOutput {
    schema_version: u32,
    host: String,
    p: i64,
    q: i64,
    slope: i64,
    classification: ManifoldDescription,
    summary: String,
    first_homology_order: u64,
    spreader: bool,
    invariants: Option<SeifertInvariants>,
}

fn cmd_classify(args: ClassifyArgs) -> Result<(), Failure> {
    if args.q < 1 {
        return Err(Failure::new(
            2,
            anyhow!("q must be at least 1, got {}", args.q),
        ));
    }
    let knot = canonical_torus_knot(args.p, args.q).map_err(|e| match e {
        KnotError::NonCoprime { .. } => Failure::new(2, e),
    })?;
    let description = if knot.is_unknot() {
        unknot_surgery(args.m)
    } else {
        classify_surgery(knot.p(), knot.q(), args.m)
            .map_err(|e| Failure::new(2, anyhow!(e).context("classification failed")))?
    };
    let invariants = if knot.is_unknot() {
        Some(SeifertInvariants::new(args.m, &[]).expect("empty fiber list is valid"))
    } else if args.m == knot.fiber_slope() {
        None
    } else {
        let raw = surgered_invariants(knot.p(), knot.q(), args.m)
            .map_err(|e| Failure::new(1, anyhow!(e)))?;
        Some(raw.normalize().map_err(|e| Failure::new(1, anyhow!(e)))?)
    };
    let output = ClassifyOutput {
        schema_version: OUTPUT_SCHEMA_VERSION,
        host: knot.label(),
        p: knot.p(),
        q: knot.q(),
        slope: args.m,
        summary: description.to_string(),
        first_homology_order: description.first_homology_order(),
        spreader: spreader_slope(knot, args.m),
        classification: description,
        invariants,
    };
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&output).expect("report serializes")
        );
        return Ok(());
    }
    println!("host: {}", output.host);
    println!("slope: {}", output.slope);
    println!("classification: {}", output.summary);
    if let Some(inv) = &output.invariants {
        println!("invariants: {inv}");
    }
    if output.first_homology_order == 0 {
        println!("first homology order: 0 (infinite)");
    } else {
        println!("first homology order: {}", output.first_homology_order);
    }
    println!("spreader: {}", output.spreader);
    Ok(())
}

#[derive(Serialize)]
struct TwistStepOutput {
    seiferter: String,
    turns: i64,
    result: SeifertSurgery,
    result_key: String,
}

#[derive(Serialize)]
struct TwistOutput {
    schema_version: u32,
    start: SeifertSurgery,
    start_key: String,
    steps: Vec<TwistStepOutput>,
    final_surgery: SeifertSurgery,
    final_key: String,
    classification: Option<ManifoldDescription>,
    classification_summary: Option<String>,
}

fn cmd_twist(args: TwistArgs) -> Result<(), Failure> {
    let base = literal::parse_surgery(&args.base).map_err(|e| Failure::new(2, e))?;
    let steps: Vec<ScriptStep> = match (&args.script, args.steps.is_empty()) {
        (Some(_), false) => {
            return Err(Failure::new(
                2,
                anyhow!("--script and --step are mutually exclusive"),
            ));
        }
        (Some(path), true) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))
                .map_err(|e| Failure::new(2, e))?;
            serde_json::from_str(&text)
                .with_context(|| format!("parsing script {}", path.display()))
                .map_err(|e| Failure::new(2, e))?
        }
        (None, _) => args
            .steps
            .iter()
            .map(|s| literal::parse_step(s))
            .collect::<Result<_, _>>()
            .map_err(|e| Failure::new(2, e))?,
    };
    let catalog = load_catalog()?;
    let mut current = base.clone();
    let mut records = Vec::with_capacity(steps.len());
    for (index, step) in steps.iter().enumerate() {
        current = twist_along_seiferter(&catalog, &current, &step.seiferter, step.turns)
            .map_err(|e| Failure::new(3, anyhow!(e).context(format!("step {}", index + 1))))?;
        records.push(TwistStepOutput {
            seiferter: step.seiferter.clone(),
            turns: step.turns,
            result_key: current.key(),
            result: current.clone(),
        });
    }
    let classification = classification_of(&current);
    let output = TwistOutput {
        schema_version: OUTPUT_SCHEMA_VERSION,
        start_key: base.key(),
        start: base,
        steps: records,
        final_key: current.key(),
        final_surgery: current,
        classification_summary: classification.as_ref().map(|c| c.to_string()),
        classification,
    };
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&output).expect("report serializes")
        );
        return Ok(());
    }
    println!("start: {}", output.start_key);
    for (index, step) in output.steps.iter().enumerate() {
        println!(
            "step {}: {} {:+} -> {}",
            index + 1,
            step.seiferter,
            step.turns,
            step.result_key
        );
    }
    println!("final: {}", output.final_key);
    if let Some(summary) = &output.classification_summary {
        println!("classification: {summary}");
    }
    Ok(())
}

#[derive(Serialize)]
struct CatalogOutput {
    schema_version: u32,
    host: String,
    seiferters: Vec<Seiferter>,
    annular_pairs: Vec<AnnularPairRecord>,
}

fn cmd_catalog(args: CatalogArgs) -> Result<(), Failure> {
    let surgery = literal::parse_surgery(&args.host).map_err(|e| Failure::new(2, e))?;
    let KnotDescriptor::Torus(knot) = surgery.knot else {
        return Err(Failure::new(
            2,
            anyhow!("catalog lookup needs a torus-knot or unknot host, got {:?}", args.host),
        ));
    };
    let catalog = load_catalog()?;
    let seiferters = catalog
        .lookup(knot, surgery.slope)
        .map_err(|e| Failure::new(1, anyhow!(e)))?;
    let mut annular_pairs = Vec::new();
    for spec in &catalog.data().annular_pairs {
        let instantiated = catalog
            .instantiate_annular_pair(&spec.id, knot, surgery.slope, None)
            .map_err(|e| Failure::new(1, anyhow!(e)))?;
        if let Some(pair) = instantiated {
            annular_pairs.push(pair);
        }
    }
    let output = CatalogOutput {
        schema_version: OUTPUT_SCHEMA_VERSION,
        host: surgery.key(),
        seiferters,
        annular_pairs,
    };
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&output).expect("report serializes")
        );
        return Ok(());
    }
    println!("seiferters at {}:", output.host);
    for s in &output.seiferters {
        let linking = match s.linking_sign {
            Some(sign) => format!("{}", sign * s.linking_magnitude),
            None => format!("\u{b1}{}", s.linking_magnitude),
        };
        let mut line = format!("  {}: kind={} linking={linking}", s.id, s.kind);
        if s.hyperbolic {
            line.push_str(" hyperbolic");
        }
        if s.irrelevant_for_twisting {
            line.push_str(" irrelevant-for-twisting");
        }
        if let Some(n) = s.n {
            line.push_str(&format!(" n={n}"));
        }
        if !s.aliases.is_empty() {
            line.push_str(&format!(" aliases={}", s.aliases.join(",")));
        }
        println!("{line}");
    }
    if output.annular_pairs.is_empty() {
        println!("annular pairs: none");
    } else {
        println!("annular pairs:");
        for pair in &output.annular_pairs {
            let mut line = format!(
                "  {}: members={},{} pair-linking={}",
                pair.id, pair.members[0], pair.members[1], pair.pair_linking
            );
            if pair.is_hopf {
                line.push_str(" hopf");
            }
            if pair.hyperbolic {
                line.push_str(" hyperbolic");
            }
            println!("{line}");
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyOutput {
    schema_version: u32,
    bounds: VerifyBounds,
    records: Vec<CheckRecord>,
    passed: bool,
}

fn cmd_verify_all(args: VerifyAllArgs) -> Result<(), Failure> {
    let bounds = VerifyBounds {
        x_max: args.x_max,
        b_span: args.b_span,
        pq_max: args.pq_max,
        n_max: args.n_max,
        p_max_meridian: args.p_max_meridian,
        slope_n_max: args.slope_n_max,
    };
    for (name, value) in [
        ("--x-max", bounds.x_max),
        ("--b-span", bounds.b_span),
        ("--pq-max", bounds.pq_max),
        ("--n-max", bounds.n_max),
        ("--p-max-meridian", bounds.p_max_meridian),
        ("--slope-n-max", bounds.slope_n_max),
    ] {
        if value < 1 {
            return Err(Failure::new(
                2,
                anyhow!("{name} must be positive, got {value}"),
            ));
        }
    }
    let report: VerifyReport = run_all(&bounds, args.workers);
    let output = VerifyOutput {
        schema_version: OUTPUT_SCHEMA_VERSION,
        bounds,
        records: report.records,
        passed: report.passed,
    };
    let json = serde_json::to_string_pretty(&output).expect("report serializes");
    if let Some(path) = &args.output {
        fs::write(path, format!("{json}\n"))
            .with_context(|| format!("writing {}", path.display()))
            .map_err(|e| Failure::new(1, e))?;
    }
    if args.json {
        println!("{json}");
    } else {
        for record in &output.records {
            let verdict = if record.passed { "PASS" } else { "FAIL" };
            println!(
                "{verdict} {} ({} cases, {})",
                record.name, record.cases_checked, record.parameters
            );
            if let Some(counterexample) = &record.counterexample {
                println!("     counterexample: {counterexample}");
            }
        }
        if output.passed {
            println!("all checks passed");
        }
    }
    if output.passed {
        Ok(())
    } else {
        Err(Failure::new(1, anyhow!("at least one sweep failed")))
    }
}

fn network_failure(error: NetworkError) -> Failure {
    let code = match &error {
        NetworkError::BadBounds { .. } => 2,
        NetworkError::VertexAbsent { .. } => 4,
        _ => 1,
    };
    Failure::new(code, error)
}

fn render(graph: &NetworkGraph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => graph.export_dot(),
        ExportFormat::Json => graph.export_json(),
    }
}

fn cmd_network(command: NetworkCommand) -> Result<(), Failure> {
    match command {
        NetworkCommand::BuildT {
            p_max,
            radius,
            format,
            output,
        } => {
            let graph = build_subcomplex_t(p_max, radius).map_err(network_failure)?;
            emit(output.as_ref(), &render(&graph, format))
        }
        NetworkCommand::Figure2 { format, output } => {
            let catalog = load_catalog()?;
            let graph = build_figure2(&catalog).map_err(network_failure)?;
            emit(output.as_ref(), &render(&graph, format))
        }
        NetworkCommand::Path {
            vertex,
            p_max,
            radius,
        } => {
            let start = literal::parse_surgery(&vertex).map_err(|e| Failure::new(2, e))?;
            let graph = match (p_max, radius) {
                (Some(p_max), Some(radius)) => {
                    build_subcomplex_t(p_max, radius).map_err(network_failure)?
                }
                _ => {
                    let catalog = load_catalog()?;
                    build_figure2(&catalog).map_err(network_failure)?
                }
            };
            match graph.find_path_to_torus(&start).map_err(network_failure)? {
                Some(path) => {
                    println!("path length {}", path.len() - 1);
                    for vertex in &path {
                        println!("{}", vertex.key());
                    }
                }
                None => println!("no path to a torus-knot vertex"),
            }
            Ok(())
        }
    }
}
