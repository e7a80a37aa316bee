//! Command-line front end for the `infratopo` engine.
//!
//! Results go to stdout and are byte-stable for fixed inputs and flags; the
//! elapsed-time line and error details go to stderr. Exit codes: 0 success,
//! 1 validation, parse, or usage error, 2 when `check --strict` sees a
//! failing CHECK claim, 3 when a FORCED claim fails.

use std::env;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use infratopo::classes::{ClassId, ClassView, DeltaClosureMode, ALL_KINDS};
use infratopo::enumerate::{
    count_spaces, enumerate_spaces, hunt, implication_matrix, space_jsonl, universe, EnumConfig,
    Shard,
};
use infratopo::sets::{GroundSet, SetFamily, Subset};
use infratopo::space::InfraSpace;
use infratopo::theorems::ctx::SpaceCtx;
use infratopo::theorems::{check_all, registry, ForcedInvariantViolated, TheoremEntry};

#[derive(Parser)]
#[command(
    name = "infratopo",
    version,
    about = "Operators, open-set classes, claim checking and enumeration for finite infra-topological spaces"
)]
struct Cli {
    /// Worker threads for enumeration and checking (default: all cores).
    /// Changes timing only, never output bytes.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a space file denotes a valid space and re-emit it canonically.
    Validate {
        file: PathBuf,
        #[arg(long)]
        complete: bool,
    },
    /// Apply one operator to one subset.
    Op {
        file: PathBuf,
        /// Comma-separated element names, e.g. a,c; empty for the empty set.
        #[arg(long, value_name = "ELEMS")]
        set: String,
        #[arg(long, value_enum)]
        which: OpName,
        #[arg(long)]
        complete: bool,
        #[arg(long)]
        literal_delta_closure: bool,
    },
    /// List every class a subset belongs to, open side then closed side.
    Classify {
        file: PathBuf,
        #[arg(long, value_name = "ELEMS")]
        set: String,
        #[arg(long)]
        complete: bool,
        #[arg(long)]
        literal_delta_closure: bool,
    },
    /// Print all members of one class.
    Families {
        file: PathBuf,
        /// Class name, e.g. e-open or delta-pre-open.
        #[arg(long, value_name = "CLASS")]
        class: String,
        #[arg(long)]
        complete: bool,
        #[arg(long)]
        literal_delta_closure: bool,
    },
    /// Run the claim registry over a space file or an enumerated size.
    Check {
        file: Option<PathBuf>,
        /// Check every labeled space of this ground size instead of a file.
        #[arg(long, value_name = "N", conflicts_with = "file")]
        enumerated: Option<usize>,
        /// Restrict the run to one claim id.
        #[arg(long, value_name = "ID")]
        theorem: Option<String>,
        /// Exit 2 if any CHECK claim fails.
        #[arg(long)]
        strict: bool,
        /// One JSON verdict per line instead of the table.
        #[arg(long)]
        jsonl: bool,
        #[arg(long)]
        complete: bool,
        #[arg(long)]
        literal_delta_closure: bool,
    },
    /// Stream or count all infra topologies on a ground set of size N.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Keep one representative per relabeling orbit.
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long, conflicts_with = "jsonl")]
        count_only: bool,
        /// One JSON space per line instead of rendered families.
        #[arg(long)]
        jsonl: bool,
        /// Produce only shard I of T deterministic shards, written I/T.
        #[arg(long, value_name = "I/T")]
        shard: Option<String>,
    },
    /// Find the minimal set in one class but not another.
    Hunt {
        file: Option<PathBuf>,
        /// Search all spaces with ground size up to N instead of a file.
        #[arg(long, conflicts_with = "file")]
        n: Option<usize>,
        #[arg(long, value_name = "CLASS")]
        from: String,
        #[arg(long = "not-to", value_name = "CLASS")]
        not_to: String,
        #[arg(long)]
        complete: bool,
    },
    /// Which classes imply which, over a file or an enumerated universe.
    Implications {
        file: Option<PathBuf>,
        /// Use all spaces with ground size up to N instead of a file.
        #[arg(long, conflicts_with = "file")]
        n: Option<usize>,
        /// Emit the digraph in DOT instead of the JSON matrix.
        #[arg(long)]
        dot: bool,
        /// Include the closed-side classes.
        #[arg(long)]
        duals: bool,
        #[arg(long)]
        complete: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OpName {
    Interior,
    Closure,
    Exterior,
    Boundary,
    Derived,
    DeltaInterior,
    DeltaClosure,
    DeltaFrontier,
}

#[derive(Debug, Error)]
enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Invalid(String),
    #[error("strict mode: at least one CHECK claim failed")]
    Strict,
    #[error(transparent)]
    Forced(#[from] ForcedInvariantViolated),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Invalid(_) => 1,
            Failure::Strict => 2,
            Failure::Forced(_) => 3,
        }
    }
}

/// On-disk space description: element names and the open sets by name.
#[derive(Serialize, Deserialize)]
struct SpaceFile {
    ground: Vec<String>,
    opens: Vec<Vec<String>>,
}

struct Loaded {
    space: InfraSpace,
    digest: String,
    added: Option<SetFamily>,
}

fn main() -> ExitCode {
    let started = Instant::now();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = u8::from(err.use_stderr());
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.jobs {
        Some(0) => Err(Failure::Usage("--jobs must be at least 1".into())),
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| run(&cli.command)),
            Err(err) => Err(Failure::Usage(format!("cannot build a {jobs}-thread pool: {err}"))),
        },
        None => run(&cli.command),
    };
    let code = match outcome {
        Ok(()) => 0,
        Err(failure) => {
            eprintln!("error: {failure}");
            failure.code()
        }
    };
    eprintln!("# elapsed: {:.3?}", started.elapsed());
    ExitCode::from(code)
}

fn run(command: &Command) -> Result<(), Failure> {
    match command {
        Command::Validate { file, complete } => cmd_validate(file, *complete),
        Command::Op { file, set, which, complete, literal_delta_closure } => {
            cmd_op(file, set, *which, *complete, mode(*literal_delta_closure))
        }
        Command::Classify { file, set, complete, literal_delta_closure } => {
            cmd_classify(file, set, *complete, mode(*literal_delta_closure))
        }
        Command::Families { file, class, complete, literal_delta_closure } => {
            cmd_families(file, class, *complete, mode(*literal_delta_closure))
        }
        Command::Check { file, enumerated, theorem, strict, jsonl, complete, literal_delta_closure } => {
            cmd_check(
                file.as_deref(),
                *enumerated,
                theorem.as_deref(),
                *strict,
                *jsonl,
                *complete,
                mode(*literal_delta_closure),
            )
        }
        Command::Enumerate { n, up_to_iso, count_only, jsonl, shard } => {
            cmd_enumerate(*n, *up_to_iso, *count_only, *jsonl, shard.as_deref())
        }
        Command::Hunt { file, n, from, not_to, complete } => {
            cmd_hunt(file.as_deref(), *n, from, not_to, *complete)
        }
        Command::Implications { file, n, dot, duals, complete } => {
            cmd_implications(file.as_deref(), *n, *dot, *duals, *complete)
        }
    }
}

fn mode(literal: bool) -> DeltaClosureMode {
    if literal {
        DeltaClosureMode::RegularOpenMeet
    } else {
        DeltaClosureMode::RegularClosedMeet
    }
}

fn command_echo() -> String {
    let mut parts = vec!["infratopo".to_string()];
    parts.extend(env::args().skip(1));
    parts.join(" ")
}

fn header(input: &str) {
    println!("# command: {}", command_echo());
    println!("# input: {input}");
}

fn load_space(path: &Path, complete: bool) -> Result<Loaded, Failure> {
    let bytes = fs::read(path)
        .map_err(|err| Failure::Invalid(format!("cannot read {}: {err}", path.display())))?;
    let digest: String = Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect();
    let parsed: SpaceFile = serde_json::from_slice(&bytes).map_err(|err| {
        Failure::Invalid(format!("{} is not a valid space file: {err}", path.display()))
    })?;
    let ground = GroundSet::new(parsed.ground)
        .map_err(|err| Failure::Invalid(format!("{}: {err}", path.display())))?;
    let mut members = Vec::with_capacity(parsed.opens.len());
    for names in &parsed.opens {
        let member = ground
            .subset(names)
            .map_err(|err| Failure::Invalid(format!("{}: {err}", path.display())))?;
        members.push(member);
    }
    let opens = SetFamily::new(members);
    if complete {
        let (space, added) = InfraSpace::completed(ground, opens);
        Ok(Loaded { space, digest, added: Some(added) })
    } else {
        let for_render = ground.clone();
        match InfraSpace::new(ground, opens) {
            Ok(space) => Ok(Loaded { space, digest, added: None }),
            Err(err) => Err(Failure::Invalid(format!(
                "{} is not a valid space:\n{}",
                path.display(),
                err.render(&for_render)
            ))),
        }
    }
}

fn space_header(path: &Path, loaded: &Loaded) {
    header(&format!("{} sha256={}", path.display(), loaded.digest));
    if let Some(added) = &loaded.added {
        println!("# completed: added {}", added.render(loaded.space.ground()));
    }
}

fn parse_set(ground: &GroundSet, spec: &str) -> Result<Subset, Failure> {
    let names = spec.split(',').map(str::trim).filter(|s| !s.is_empty());
    ground.subset(names).map_err(|err| Failure::Usage(err.to_string()))
}

fn parse_class(name: &str) -> Result<ClassId, Failure> {
    let canon = name.replace('δ', "delta");
    ClassId::parse(&canon).map_err(|err| Failure::Usage(err.to_string()))
}

fn parse_shard(spec: &str) -> Result<Shard, Failure> {
    let err = || {
        Failure::Usage(format!(
            "shard must be written INDEX/TOTAL with INDEX < TOTAL, got {spec:?}"
        ))
    };
    let (index, total) = spec.split_once('/').ok_or_else(err)?;
    let shard = Shard {
        index: index.trim().parse().map_err(|_| err())?,
        total: total.trim().parse().map_err(|_| err())?,
    };
    Ok(shard)
}

fn emit_space_file(space: &InfraSpace) -> String {
    let ground = space.ground();
    let file = SpaceFile {
        ground: ground.names().to_vec(),
        opens: space
            .opens()
            .iter()
            .map(|m| m.iter().map(|i| ground.name(i).to_string()).collect())
            .collect(),
    };
    serde_json::to_string(&file).expect("space files serialize")
}

fn cmd_validate(path: &Path, complete: bool) -> Result<(), Failure> {
    let loaded = load_space(path, complete)?;
    space_header(path, &loaded);
    let space = &loaded.space;
    println!(
        "valid: {} open sets over {}",
        space.opens().len(),
        space.ground().render(space.ground().full())
    );
    println!("{}", emit_space_file(space));
    Ok(())
}

fn cmd_op(
    path: &Path,
    set: &str,
    which: OpName,
    complete: bool,
    mode: DeltaClosureMode,
) -> Result<(), Failure> {
    let loaded = load_space(path, complete)?;
    space_header(path, &loaded);
    let a = parse_set(loaded.space.ground(), set)?;
    let ctx = SpaceCtx::with_mode(loaded.space, mode);
    let result = match which {
        OpName::Interior => ctx.int(a),
        OpName::Closure => ctx.cl(a),
        OpName::Exterior => ctx.ext(a),
        OpName::Boundary => ctx.bdy(a),
        OpName::Derived => ctx.der(a),
        OpName::DeltaInterior => ctx.dint(a),
        OpName::DeltaClosure => ctx.dcl(a),
        OpName::DeltaFrontier => ctx.dfr(a),
    };
    println!("{}", ctx.ground().render(result));
    Ok(())
}

fn cmd_classify(
    path: &Path,
    set: &str,
    complete: bool,
    mode: DeltaClosureMode,
) -> Result<(), Failure> {
    let loaded = load_space(path, complete)?;
    space_header(path, &loaded);
    let a = parse_set(loaded.space.ground(), set)?;
    let view = ClassView::with_mode(&loaded.space, mode);
    for kind in ALL_KINDS {
        if view.is_member(ClassId::open(kind), a) {
            println!("{}", ClassId::open(kind));
        }
    }
    for kind in ALL_KINDS {
        if view.is_member(ClassId::closed(kind), a) {
            println!("{}", ClassId::closed(kind));
        }
    }
    Ok(())
}

fn cmd_families(
    path: &Path,
    class: &str,
    complete: bool,
    mode: DeltaClosureMode,
) -> Result<(), Failure> {
    let loaded = load_space(path, complete)?;
    space_header(path, &loaded);
    let id = parse_class(class)?;
    let view = ClassView::with_mode(&loaded.space, mode);
    println!("{}", view.family_of(id).render(loaded.space.ground()));
    Ok(())
}

fn select_entries(theorem: Option<&str>) -> Result<Vec<TheoremEntry>, Failure> {
    let mut entries = registry();
    let Some(wanted) = theorem else { return Ok(entries) };
    let wanted = wanted.replace('δ', "d");
    entries.retain(|e| e.id == wanted);
    if entries.is_empty() {
        let ids: Vec<String> = registry().into_iter().map(|e| e.id).collect();
        return Err(Failure::Usage(format!(
            "unknown theorem id {wanted:?}; valid ids:\n  {}",
            ids.join("\n  ")
        )));
    }
    Ok(entries)
}

fn cmd_check(
    file: Option<&Path>,
    enumerated: Option<usize>,
    theorem: Option<&str>,
    strict: bool,
    jsonl: bool,
    complete: bool,
    mode: DeltaClosureMode,
) -> Result<(), Failure> {
    let entries = select_entries(theorem)?;
    let spaces = match (file, enumerated) {
        (Some(path), None) => {
            let loaded = load_space(path, complete)?;
            space_header(path, &loaded);
            vec![loaded.space]
        }
        (None, Some(n)) => {
            let cfg = EnumConfig::labeled(n);
            let spaces = enumerate_spaces(&cfg).map_err(|err| Failure::Usage(err.to_string()))?;
            header(&format!("enumerated n={n} ({} spaces)", spaces.len()));
            spaces
        }
        _ => {
            return Err(Failure::Usage(
                "give a space file or --enumerated N, but not both".into(),
            ))
        }
    };
    let report = check_all(&spaces, &entries, mode)?;
    if jsonl {
        print!("{}", report.jsonl());
    } else {
        print!("{}", report.table());
    }
    if strict && report.any_check_failure() {
        return Err(Failure::Strict);
    }
    Ok(())
}

fn cmd_enumerate(
    n: usize,
    up_to_iso: bool,
    count_only: bool,
    jsonl: bool,
    shard: Option<&str>,
) -> Result<(), Failure> {
    let shard = shard.map(parse_shard).transpose()?;
    let cfg = EnumConfig { n, up_to_iso, count_only, shard };
    cfg.validate().map_err(|err| Failure::Usage(err.to_string()))?;
    let input = match shard {
        Some(s) => format!("enumerated n={n} shard {}/{}", s.index, s.total),
        None => format!("enumerated n={n}"),
    };
    header(&input);
    if count_only {
        let count = count_spaces(&cfg).map_err(|err| Failure::Usage(err.to_string()))?;
        println!("{count}");
        return Ok(());
    }
    let spaces = enumerate_spaces(&cfg).map_err(|err| Failure::Usage(err.to_string()))?;
    for space in &spaces {
        if jsonl {
            println!("{}", space_jsonl(space));
        } else {
            println!("{}", space.opens().render(space.ground()));
        }
    }
    Ok(())
}

fn hunt_spaces(
    file: Option<&Path>,
    n: Option<usize>,
    complete: bool,
) -> Result<Vec<InfraSpace>, Failure> {
    match (file, n) {
        (Some(path), None) => {
            let loaded = load_space(path, complete)?;
            space_header(path, &loaded);
            Ok(vec![loaded.space])
        }
        (None, Some(n)) => {
            let spaces = universe(n).map_err(|err| Failure::Usage(err.to_string()))?;
            header(&format!("enumerated universe n<={n} ({} spaces)", spaces.len()));
            Ok(spaces)
        }
        _ => Err(Failure::Usage("give a space file or --n N, but not both".into())),
    }
}

fn cmd_hunt(
    file: Option<&Path>,
    n: Option<usize>,
    from: &str,
    not_to: &str,
    complete: bool,
) -> Result<(), Failure> {
    let from = parse_class(from)?;
    let not_to = parse_class(not_to)?;
    if from == not_to {
        return Err(Failure::Usage(
            "--from and --not-to must name different classes".into(),
        ));
    }
    let spaces = hunt_spaces(file, n, complete)?;
    match hunt(&spaces, from, not_to) {
        Some(witness) => println!("{}", witness.render()),
        None => println!("no counterexample"),
    }
    Ok(())
}

fn cmd_implications(
    file: Option<&Path>,
    n: Option<usize>,
    dot: bool,
    duals: bool,
    complete: bool,
) -> Result<(), Failure> {
    let spaces = hunt_spaces(file, n, complete)?;
    let mut classes: Vec<ClassId> = ALL_KINDS.iter().map(|&k| ClassId::open(k)).collect();
    if duals {
        classes.extend(ALL_KINDS.iter().map(|&k| ClassId::closed(k)));
    }
    let matrix = implication_matrix(&spaces, &classes);
    if dot {
        print!("{}", matrix.to_dot());
    } else {
        println!("{}", matrix.to_json());
    }
    Ok(())
}
