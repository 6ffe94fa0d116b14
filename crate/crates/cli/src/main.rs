//! Command-line interface: family generators, single-graph property checks,
//! classification, full-certificate verification, and the census runner.
//!
//! Exit codes: 0 success (and all theorems agree), 1 a disagreement between
//! oracle and prediction, 2 configuration or input error.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use matchext::classify::{self, Prediction};
use matchext::connectivity::{Caps, ConnectivityReport};
use matchext::families::{self, LadderMatching, LadderParity, NamedGraph, Rail, RingClosure};
use matchext::graph::Graph;
use matchext::groups::GroupTable;
use matchext::json;
use matchext::matching;
use matchext::symmetry;

use matchext_cli::census;
use matchext_cli::config::SuiteConfig;

#[derive(Parser)]
#[command(
    name = "matchext",
    version,
    about = "Matching extendability and connectivity laboratory for vertex-transitive graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a family member and print its graph JSON.
    Gen {
        #[command(subcommand)]
        family: GenCommand,
    },
    /// Check one property of a graph read from standard input.
    Check(CheckArgs),
    /// Classify a graph read from standard input.
    Classify {
        /// Emit the full certificate (oracle, connectivity, agreement)
        /// instead of just the verdict.
        #[arg(long)]
        certificate: bool,
    },
    /// Cross-validate a graph read from standard input: full certificate,
    /// exit 1 on disagreement.
    Verify,
    /// Run the verification census and write a report.
    Census(CensusArgs),
}

#[derive(Subcommand)]
enum GenCommand {
    /// Circulant graph Z_n(S).
    Circulant {
        #[arg(long)]
        n: usize,
        /// Connection residues, comma separated, e.g. 1,7,4.
        #[arg(long, value_delimiter = ',')]
        s: Vec<usize>,
    },
    /// Cayley graph over a built-in or JSON group table.
    Cayley {
        /// Built-in group: cyclic:<order>, dihedral:<order, even >= 6>, or
        /// product:<g1>,<g2> of two built-ins.
        #[arg(long, conflicts_with = "group_file")]
        group: Option<String>,
        /// Path to a JSON group table {"order": g, "table": [[..]], "identity": 0}.
        #[arg(long)]
        group_file: Option<std::path::PathBuf>,
        /// Connecting set element indices, comma separated.
        #[arg(long, value_delimiter = ',')]
        s: Vec<usize>,
    },
    /// Generalized Petersen graph GP(n, k).
    Gp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Quadrangle ring T_m.
    Tm {
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = parse_closure)]
        choice: RingClosure,
    },
    /// Double ladder of the given parity and length.
    Dl {
        #[arg(long, value_parser = parse_parity)]
        parity: LadderParity,
        #[arg(long)]
        k: usize,
        /// End matching as three pairs, e.g. a1c3,b1b5,c1a2.
        #[arg(long)]
        matching: String,
    },
    /// A named graph.
    Named {
        #[arg(long, value_parser = parse_named)]
        which: NamedGraph,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CheckSelector {
    /// k-extendability oracle for the given k.
    #[arg(long)]
    extendable: Option<usize>,
    #[arg(long)]
    factor_critical: bool,
    #[arg(long)]
    bicritical: bool,
    /// Elementary bipartiteness.
    #[arg(long)]
    elementary: bool,
    /// Exhaustive search for a set violating the odd-components condition.
    #[arg(long)]
    tutte: bool,
    /// Full connectivity report.
    #[arg(long)]
    connectivity: bool,
    #[arg(long)]
    vertex_transitive: bool,
    /// Isomorphism against the graph in the given JSON file.
    #[arg(long)]
    iso: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    selector: CheckSelector,
    /// Vertex cap for the exhaustive subset searches.
    #[arg(long, default_value_t = 20)]
    subset_cap: usize,
}

#[derive(Args)]
struct CensusArgs {
    /// SuiteConfig JSON; defaults apply when omitted.
    #[arg(long)]
    config: Option<std::path::PathBuf>,
    /// Report output path; standard output when omitted.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Recorded in the report; all algorithms are deterministic.
    #[arg(long)]
    seed: Option<u64>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

type CliError = Box<dyn std::error::Error>;

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Gen { family } => {
            let graph = build_family(family)?;
            json::write_graph(&graph, std::io::stdout().lock())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check(args) => run_check(args),
        Command::Classify { certificate } => run_classify(certificate),
        Command::Verify => run_verify(),
        Command::Census(args) => run_census_command(args),
    }
}

fn build_family(command: GenCommand) -> Result<Graph, CliError> {
    let graph = match command {
        GenCommand::Circulant { n, s } => families::circulant(n, &s)?,
        GenCommand::Cayley { group, group_file, s } => {
            let table = match (group, group_file) {
                (Some(spec), None) => parse_group(&spec)?,
                (None, Some(path)) => json::group_from_str(&std::fs::read_to_string(path)?)?,
                _ => return Err("exactly one of --group and --group-file is required".into()),
            };
            families::cayley(&table, &s)?
        }
        GenCommand::Gp { n, k } => families::gp(n, k)?,
        GenCommand::Tm { m, choice } => families::t_m(m, choice)?,
        GenCommand::Dl { parity, k, matching } => {
            let matching = parse_ladder_matching(&matching, parity, k)?;
            families::double_ladder(parity, k, matching)?
        }
        GenCommand::Named { which } => families::named(which),
    };
    Ok(graph)
}

fn parse_closure(s: &str) -> Result<RingClosure, String> {
    match s {
        "straight" => Ok(RingClosure::Straight),
        "crossed" => Ok(RingClosure::Crossed),
        _ => Err(format!("unknown closure {s:?}; use straight or crossed")),
    }
}

fn parse_parity(s: &str) -> Result<LadderParity, String> {
    match s {
        "odd" => Ok(LadderParity::Odd),
        "even" => Ok(LadderParity::Even),
        _ => Err(format!("unknown parity {s:?}; use odd or even")),
    }
}

fn parse_named(s: &str) -> Result<NamedGraph, String> {
    match s {
        "petersen" => Ok(NamedGraph::Petersen),
        "dodecahedron" => Ok(NamedGraph::Dodecahedron),
        "rosette" => Ok(NamedGraph::Rosette),
        _ => Err(format!("unknown graph {s:?}; use petersen, dodecahedron or rosette")),
    }
}

fn parse_group(spec: &str) -> Result<GroupTable, CliError> {
    if let Some(rest) = spec.strip_prefix("product:") {
        let (a, b) = rest
            .split_once(',')
            .ok_or("product needs two comma-separated factors, e.g. product:cyclic:2,dihedral:6")?;
        return Ok(parse_group(a)?.direct_product(&parse_group(b)?));
    }
    if let Some(order) = spec.strip_prefix("cyclic:") {
        let order: usize = order.parse()?;
        if order == 0 {
            return Err("cyclic group order must be positive".into());
        }
        return Ok(GroupTable::cyclic(order));
    }
    if let Some(order) = spec.strip_prefix("dihedral:") {
        return Ok(GroupTable::dihedral(order.parse()?)?);
    }
    Err(format!("unknown group spec {spec:?}; use cyclic:<n>, dihedral:<n> or product:<a>,<b>").into())
}

/// Parses an end matching like "a1c3,b1b5,c1a2" against the expected far
/// triple for the given parity and length.
fn parse_ladder_matching(text: &str, parity: LadderParity, k: usize) -> Result<LadderMatching, CliError> {
    if k < 1 {
        return Err("ladder length must be at least 1".into());
    }
    let far_of = |rail: Rail| -> (char, usize) {
        match (parity, rail) {
            (_, Rail::A) => ('a', k),
            (LadderParity::Odd, Rail::B) => ('b', 2 * k + 1),
            (LadderParity::Even, Rail::B) => ('b', 2 * k),
            (LadderParity::Odd, Rail::C) => ('c', k + 1),
            (LadderParity::Even, Rail::C) => ('c', k),
        }
    };
    let mut partners: [Option<Rail>; 3] = [None; 3];
    for pair in text.split(',') {
        let tokens = parse_vertex_pair(pair)?;
        let (near, far) = match tokens {
            ((c, 1), other) if matches!(c, 'a' | 'b' | 'c') && other != (c, 1) => ((c, 1), other),
            (other, (c, 1)) if matches!(c, 'a' | 'b' | 'c') => ((c, 1), other),
            _ => return Err(format!("pair {pair:?} does not touch a_1, b_1 or c_1").into()),
        };
        let rail = [Rail::A, Rail::B, Rail::C]
            .into_iter()
            .find(|&r| far_of(r) == far)
            .ok_or_else(|| {
                format!(
                    "pair {pair:?}: {}{} is not a far-end vertex for this ladder",
                    far.0, far.1
                )
            })?;
        let slot = (near.0 as u8 - b'a') as usize;
        if partners[slot].replace(rail).is_some() {
            return Err(format!("vertex {}1 matched twice", near.0).into());
        }
    }
    match partners {
        [Some(a), Some(b), Some(c)] => Ok(LadderMatching([a, b, c])),
        _ => Err("matching must pair each of a_1, b_1, c_1 exactly once".into()),
    }
}

/// A ladder vertex label: rail letter and 1-based index.
type VertexLabel = (char, usize);

fn parse_vertex_pair(text: &str) -> Result<(VertexLabel, VertexLabel), CliError> {
    let bytes = text.as_bytes();
    if bytes.len() < 4 || !bytes[0].is_ascii_alphabetic() {
        return Err(format!("malformed pair {text:?}; expected e.g. a1c3").into());
    }
    let first_letter = bytes[0] as char;
    let digits_end = 1 + bytes[1..].iter().take_while(|b| b.is_ascii_digit()).count();
    if digits_end == 1 || digits_end >= bytes.len() {
        return Err(format!("malformed pair {text:?}").into());
    }
    let first_index: usize = text[1..digits_end].parse()?;
    let second_letter = bytes[digits_end] as char;
    if !second_letter.is_ascii_alphabetic() || digits_end + 1 >= bytes.len() {
        return Err(format!("malformed pair {text:?}").into());
    }
    let second_index: usize = text[digits_end + 1..].parse()?;
    Ok(((first_letter, first_index), (second_letter, second_index)))
}

fn read_stdin_graph() -> Result<Graph, CliError> {
    let mut text = String::new();
    std::io::stdin().read_to_string(&mut text)?;
    Ok(json::graph_from_str(&text)?)
}

fn print_result(property: &str, value: impl serde::Serialize, witness: impl serde::Serialize) -> Result<(), CliError> {
    let record = serde_json::json!({
        "property": property,
        "value": value,
        "witness": witness,
    });
    println!("{record}");
    Ok(())
}

fn run_check(args: CheckArgs) -> Result<ExitCode, CliError> {
    let g = read_stdin_graph()?;
    let caps = Caps::default();
    let sel = &args.selector;
    if let Some(k) = sel.extendable {
        let r = matching::is_k_extendable(&g, k)?;
        print_result(
            &format!("extendable-{k}"),
            r.extendable,
            r.violating.map(|m| m.edges().to_vec()),
        )?;
    } else if sel.factor_critical {
        print_result("factor-critical", matching::is_factor_critical(&g), ())?;
    } else if sel.bicritical {
        print_result("bicritical", matching::is_bicritical(&g)?, ())?;
    } else if sel.elementary {
        print_result("elementary-bipartite", matching::is_elementary_bipartite(&g), ())?;
    } else if sel.tutte {
        let witness = matching::tutte_witness(&g, args.subset_cap)?;
        print_result(
            "perfect-matching",
            witness.is_none(),
            witness.map(|w| serde_json::json!({"set": w.set, "deficiency": w.deficiency})),
        )?;
    } else if sel.connectivity {
        let report = ConnectivityReport::compute(&g, &caps)?;
        print_result("connectivity", report, ())?;
    } else if sel.vertex_transitive {
        let (transitive, orbits) = symmetry::vertex_transitivity(&g);
        print_result("vertex-transitive", transitive, orbits)?;
    } else if let Some(path) = &sel.iso {
        let other = json::graph_from_str(&std::fs::read_to_string(path)?)?;
        match symmetry::is_isomorphic(&g, &other) {
            symmetry::IsoOutcome::Isomorphic(map) => print_result("isomorphic", true, map)?,
            symmetry::IsoOutcome::Distinct(why) => print_result("isomorphic", false, why)?,
        }
    } else {
        return Err("select a property to check".into());
    }
    Ok(ExitCode::SUCCESS)
}

fn run_classify(certificate: bool) -> Result<ExitCode, CliError> {
    let g = read_stdin_graph()?;
    if certificate {
        let cert = classify::cross_validate(&g, &Caps::default())?;
        println!("{}", serde_json::to_string_pretty(&cert)?);
        Ok(ExitCode::SUCCESS)
    } else {
        let verdict = classify::predict(&g)?;
        println!("{}", serde_json::to_string_pretty(&verdict)?);
        Ok(ExitCode::SUCCESS)
    }
}

fn run_verify() -> Result<ExitCode, CliError> {
    let g = read_stdin_graph()?;
    let cert = classify::cross_validate(&g, &Caps::default())?;
    println!("{}", serde_json::to_string_pretty(&cert)?);
    if cert.verdict.prediction != Prediction::Unknown && cert.agreement != Some(true) {
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn run_census_command(args: CensusArgs) -> Result<ExitCode, CliError> {
    let mut config: SuiteConfig = match &args.config {
        Some(path) => serde_json::from_str(&std::fs::read_to_string(path)?)?,
        None => SuiteConfig::default(),
    };
    if args.seed.is_some() {
        config.seed = args.seed;
    }
    let destination = args.out.clone().or_else(|| config.out.clone());
    let report = census::run_census(&config);
    let text = serde_json::to_string_pretty(&report)?;
    match &destination {
        Some(path) => std::fs::write(path, text + "\n")?,
        None => println!("{text}"),
    }
    let mut failed = 0usize;
    for (name, tally) in &report.tallies {
        eprintln!(
            "[{}] {}: {}/{} pass",
            if tally.failed == 0 { "ok" } else { "FAIL" },
            name,
            tally.passed,
            tally.applicable
        );
        failed += tally.failed;
    }
    if failed > 0 {
        eprintln!("{failed} disagreement(s) recorded");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}
