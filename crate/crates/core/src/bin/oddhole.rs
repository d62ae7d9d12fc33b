use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use oddhole::cleaning::no_great_pyramid_solver;
use oddhole::io::{parse, write_edgelist, Format};
use oddhole::oracle::{brute_shortest_odd_hole, brute_shortest_odd_hole_unguarded, generate, Family, InstanceSpec};
use oddhole::report::{Report, Sidecar, Witness};
use oddhole::{
    find_5hole, find_great_pyramid, find_jewelled, shortest_odd_hole_with, DetectorTag, Error, Graph, LocatorMode,
    PipelineConfig, Tuple12,
};

#[derive(Parser)]
#[command(name = "oddhole", version, about = "Find a shortest odd hole in a graph")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(clap::Args)]
struct InputArgs {
    /// Graph file
    input: PathBuf,
    /// edgelist, dimacs or graph6
    #[arg(long, default_value = "edgelist")]
    format: String,
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
}

#[derive(Subcommand)]
enum Command {
    /// Run the pipeline, the oracle, or a single detector
    Run {
        #[command(flatten)]
        io: InputArgs,
        /// pipeline, oracle, or detector:<five_hole|jewel|great_pyramid|no_great_pyramid>
        #[arg(long, default_value = "pipeline")]
        mode: String,
        /// Feed the great-pyramid locator these tuples instead of enumerating
        #[arg(long)]
        hinted: Option<PathBuf>,
        /// Vertex bound for full great-pyramid enumeration
        #[arg(long)]
        guard: Option<usize>,
        /// Report the other detectors' answer when the guard refuses
        #[arg(long)]
        allow_partial: bool,
    },
    /// Exhaustive search
    Oracle {
        #[command(flatten)]
        io: InputArgs,
        /// Ignore the oracle's size guard
        #[arg(long)]
        force: bool,
    },
    /// Generate an instance: cycle K | planted_pyramid L1 L2 L3 | planted_jewel P | random N P | planted_major LEN
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        ambient: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Hole positions of one major vertex, comma separated; repeatable
        #[arg(long = "major")]
        majors: Vec<String>,
        #[arg(long)]
        clique: bool,
        /// Edge list path; the sidecar goes to <out>.json. Stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a pyramid, jewel or hole witness (or a sidecar) against a graph
    CheckWitness {
        graph: PathBuf,
        witness: PathBuf,
        #[arg(long, default_value = "edgelist")]
        format: String,
    },
    /// Print the locator tuple from a sidecar as a JSON line
    HintedTuples { sidecar: PathBuf },
}

fn read(path: &Path) -> Result<String, Error> {
    Ok(std::fs::read_to_string(path)?)
}

fn load(io: &InputArgs) -> Result<Graph, Error> {
    parse(&read(&io.input)?, io.format.parse::<Format>()?)
}

fn emit(report: &Report, output: Output) {
    match output {
        Output::Json => println!("{}", report.to_json()),
        Output::Text => print!("{}", report.to_text()),
    }
}

fn locator_mode(hinted: &Option<PathBuf>, guard: Option<usize>) -> Result<LocatorMode, Error> {
    Ok(match (hinted, guard) {
        (Some(p), _) => LocatorMode::Hinted(Tuple12::parse_lines(&read(p)?)?),
        (None, Some(g)) if g > 0 => LocatorMode::Full { guard: g },
        (None, Some(_)) => return Err(Error::InvalidInput("guard must be positive".into())),
        (None, None) => LocatorMode::full_from_env(),
    })
}

fn cmd_run(
    io: &InputArgs,
    mode: &str,
    hinted: &Option<PathBuf>,
    guard: Option<usize>,
    allow_partial: bool,
) -> Result<(), Error> {
    let g = load(io)?;
    let locator = locator_mode(hinted, guard)?;
    let report = match mode {
        "pipeline" => {
            let cfg = PipelineConfig { locator, short_circuit: true, allow_partial };
            let r = shortest_odd_hole_with(&g, &cfg)?;
            if let Some(msg) = &r.guard_refusal {
                eprintln!("warning: {msg}; result covers the other detectors only");
            }
            Report::from_pipeline(&g, &r)
        }
        "oracle" => single(&g, DetectorTag::Oracle, || brute_shortest_odd_hole(&g))?,
        other => {
            let name = other
                .strip_prefix("detector:")
                .ok_or_else(|| Error::InvalidInput(format!("unknown mode {other:?}")))?;
            let tag: DetectorTag = name.parse()?;
            match tag {
                DetectorTag::FiveHole => single(&g, tag, || Ok(find_5hole(&g)))?,
                DetectorTag::Jewel => single(&g, tag, || Ok(find_jewelled(&g)))?,
                DetectorTag::NoGreatPyramid => single(&g, tag, || Ok(no_great_pyramid_solver(&g)))?,
                DetectorTag::GreatPyramid => single(&g, tag, || find_great_pyramid(&g, &locator))?,
                DetectorTag::Oracle => single(&g, tag, || brute_shortest_odd_hole(&g))?,
            }
        }
    };
    emit(&report, io.output);
    Ok(())
}

fn single(g: &Graph, tag: DetectorTag, f: impl FnOnce() -> Result<oddhole::Detection, Error>) -> Result<Report, Error> {
    let start = Instant::now();
    let d = f()?;
    let ms = start.elapsed().as_secs_f64() * 1000.0;
    Ok(Report::from_detection(g, &d, BTreeMap::from([(tag, ms)])))
}

fn num<T: std::str::FromStr>(params: &[String], i: usize, what: &str) -> Result<T, Error> {
    params
        .get(i)
        .ok_or_else(|| Error::InvalidParameters(format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::InvalidParameters(format!("bad {what} {:?}", params[i])))
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    family: &str,
    params: &[String],
    ambient: usize,
    seed: u64,
    majors: &[String],
    clique: bool,
    out: &Option<PathBuf>,
) -> Result<(), Error> {
    let family = match family {
        "cycle" => Family::Cycle { k: num(params, 0, "k")? },
        "planted_pyramid" => Family::PlantedPyramid {
            l1: num(params, 0, "l1")?,
            l2: num(params, 1, "l2")?,
            l3: num(params, 2, "l3")?,
            ambient,
        },
        "planted_jewel" => Family::PlantedJewel { p_len: num(params, 0, "path length")?, ambient },
        "random" => Family::Random { n: num(params, 0, "n")?, p: num(params, 1, "p")? },
        "planted_major" => Family::PlantedMajor {
            hole_len: num(params, 0, "hole length")?,
            majors: majors
                .iter()
                .map(|m| {
                    m.split(',')
                        .map(|x| x.trim().parse().map_err(|_| Error::InvalidParameters(format!("bad position {x:?}"))))
                        .collect()
                })
                .collect::<Result<_, _>>()?,
            clique,
        },
        other => return Err(Error::InvalidParameters(format!("unknown family {other:?}"))),
    };
    let inst = generate(&InstanceSpec::new(family, seed))?;
    let edges = write_edgelist(&inst.graph);
    let sidecar = Sidecar::from_instance(&inst).to_json();
    match out {
        Some(path) => {
            std::fs::write(path, edges)?;
            let mut side = path.clone().into_os_string();
            side.push(".json");
            std::fs::write(side, sidecar + "\n")?;
        }
        None => print!("{edges}"),
    }
    Ok(())
}

/// Exit status: 0 valid, 1 invalid.
fn cmd_check_witness(graph: &Path, witness: &Path, format: &str) -> Result<bool, Error> {
    let g = parse(&read(graph)?, format.parse()?)?;
    let w = Witness::from_json(&read(witness)?)?;
    match w.check(&g) {
        Ok(()) => {
            println!("valid");
            Ok(true)
        }
        Err(d) => {
            println!("invalid: {}", d.reason());
            Ok(false)
        }
    }
}

fn cmd_hinted_tuples(sidecar: &Path) -> Result<(), Error> {
    let side = Sidecar::from_json(&read(sidecar)?)?;
    let t = side.tuple.ok_or_else(|| Error::Schema("sidecar carries no locator tuple".into()))?;
    println!("{}", t.to_json_line());
    Ok(())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        Error::SizeGuard { .. } => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Run { io, mode, hinted, guard, allow_partial } => cmd_run(io, mode, hinted, *guard, *allow_partial),
        Command::Oracle { io, force } => load(io).and_then(|g| {
            let start = Instant::now();
            let d = if *force { brute_shortest_odd_hole_unguarded(&g) } else { brute_shortest_odd_hole(&g)? };
            let ms = start.elapsed().as_secs_f64() * 1000.0;
            emit(&Report::from_detection(&g, &d, BTreeMap::from([(DetectorTag::Oracle, ms)])), io.output);
            Ok(())
        }),
        Command::Gen { family, params, ambient, seed, majors, clique, out } => {
            cmd_gen(family, params, *ambient, *seed, majors, *clique, out)
        }
        Command::CheckWitness { graph, witness, format } => match cmd_check_witness(graph, witness, format) {
            Ok(true) => return ExitCode::SUCCESS,
            Ok(false) => return ExitCode::from(1),
            Err(e) => Err(e),
        },
        Command::HintedTuples { sidecar } => cmd_hinted_tuples(sidecar),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
