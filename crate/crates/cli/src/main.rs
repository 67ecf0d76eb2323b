use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use braidlab::attacks::{bench, bench_csv, AttackConfig, AttackKind, InstanceKind, InstanceParams};
use braidlab::braid_core::{BandWord, BraidWord};
use braidlab::config::Config;
use braidlab::conjugacy::{
    compute_summit_graph_with, conjugacy_search_with, ConjugatorStrategy, SummitKind, SummitOptions,
};
use braidlab::normal_form::{right_normal_form, BklNormalForm, GarsideNormalForm, LengthFn};
use braidlab::protocols::{
    run_protocol, Distribution, ProtocolParams, Scheme, PROTOCOL_CSV_HEADER,
};
use braidlab::word_problem::{equal_with, Equality, EqualityOptions, Method};
use braidlab::{selftest, Error};
use clap::{Args, Parser, Subcommand, ValueEnum};

const EXIT_USAGE: u8 = 64;
const EXIT_BUDGET: u8 = 2;
const EXIT_INVARIANT: u8 = 70;
const EXIT_IO: u8 = 74;

#[derive(Parser)]
#[command(
    name = "braidlab",
    version,
    about = "Braid group normal forms, conjugacy, protocols and attacks"
)]
struct Cli {
    /// Config file; defaults to $BRAIDLAB_CONFIG, then built-in defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Master seed for every random stream.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for independent seeds.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of a braid word.
    Nf {
        /// `Bn: 1 -3 2` or `Bn band: +(3,1) -(2,1)`.
        word: String,
        #[arg(long, value_enum, default_value_t = Form::Left)]
        form: Form,
    },
    /// Decide whether two words (or one word and the identity) are equal.
    Wp {
        word: String,
        other: Option<String>,
        #[arg(long, default_value = "nf")]
        method: String,
        /// Handle-reduction step budget.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Summit graphs and conjugacy search.
    Conj(ConjArgs),
    /// Seeded protocol runs as CSV.
    Protocol(ProtocolArgs),
    /// Seeded attack benchmark as CSV.
    Attack(AttackArgs),
    /// Random braid words, one per line.
    Gen {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 20)]
        length: usize,
        #[arg(long, default_value_t = 10)]
        count: u64,
    },
    /// Run the numbered acceptance checks.
    Selftest {
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Left,
    Right,
    Bkl,
}

#[derive(Args)]
struct ConjArgs {
    word: String,
    #[arg(long, default_value = "uss")]
    kind: String,
    /// Also search for a conjugator taking `word` to this word.
    #[arg(long)]
    target: Option<String>,
    /// Write the edge list (`from TAB label TAB to`) here.
    #[arg(long)]
    emit_graph: Option<PathBuf>,
    #[arg(long)]
    budget_vertices: Option<usize>,
    #[arg(long)]
    brute_force: bool,
}

#[derive(Args)]
struct ProtocolArgs {
    #[arg(long, default_value = "aag")]
    scheme: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    dist: Option<String>,
    #[arg(long, default_value_t = 1)]
    runs: u64,
    /// First run counter.
    #[arg(long, default_value_t = 0)]
    first: u64,
    /// Fill the time column instead of writing 0.
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct AttackArgs {
    #[arg(long, default_value = "lba")]
    attack: String,
    #[arg(long, default_value = "redgar")]
    length: String,
    #[arg(long, default_value_t = 1)]
    memory: usize,
    #[arg(long, default_value_t = 1)]
    depth: usize,
    #[arg(long)]
    dedup: bool,
    #[arg(long)]
    peaks: bool,
    /// `A..B`, a comma list, or a file of seeds.
    #[arg(long, default_value = "0..10")]
    seeds: String,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "multiple")]
    instance: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 4)]
    m: usize,
    #[arg(long, default_value_t = 10)]
    u_length: usize,
    #[arg(long, default_value_t = 10)]
    v_length: usize,
    #[arg(long)]
    timings: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("braidlab: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        e if e.is_budget() => EXIT_BUDGET,
        Error::EnumerationCap { .. } => EXIT_BUDGET,
        Error::Invariant(_) => EXIT_INVARIANT,
        Error::Io(_) => EXIT_IO,
        _ => EXIT_USAGE,
    }
}

fn run(cli: Cli) -> braidlab::Result<u8> {
    let mut cfg = Config::resolve(cli.config.as_deref())?;
    if let Some(s) = cli.seed {
        cfg.master_seed = s;
    }
    let jobs = cli.jobs.max(1);
    match cli.command {
        Command::Nf { word, form } => nf(&word, form),
        Command::Wp {
            word,
            other,
            method,
            budget,
        } => wp(&cfg, &word, other.as_deref(), &method, budget),
        Command::Conj(a) => conj(&cfg, a),
        Command::Protocol(a) => protocol(&cfg, a),
        Command::Attack(a) => attack(&cfg, a, jobs),
        Command::Gen { n, length, count } => {
            let n = n.unwrap_or(cfg.n);
            if n < 2 {
                return Err(Error::InvalidArgument("n must be at least 2".into()));
            }
            let mut out = std::io::stdout().lock();
            for k in 0..count {
                let mut rng = braidlab::rng::stream(cfg.master_seed, braidlab::rng::CORPUS, k);
                writeln!(out, "{}", BraidWord::random(n, length, &mut rng))?;
            }
            Ok(0)
        }
        Command::Selftest { only } => {
            let ids: Vec<u8> = if only.is_empty() {
                selftest::CRITERIA.iter().map(|c| c.id).collect()
            } else {
                only
            };
            let mut all = true;
            for id in ids {
                let o = selftest::run(id)
                    .ok_or_else(|| Error::InvalidArgument(format!("no criterion {id}")))?;
                println!("{}", o.line());
                all &= o.passed();
            }
            Ok(u8::from(!all))
        }
    }
}

fn parse_word(s: &str) -> braidlab::Result<BraidWord> {
    if s.contains("band") {
        Ok(s.parse::<BandWord>()?.to_artin())
    } else {
        s.parse()
    }
}

fn nf(word: &str, form: Form) -> braidlab::Result<u8> {
    let text = match form {
        Form::Left => GarsideNormalForm::of(&parse_word(word)?).to_string(),
        Form::Right => right_normal_form(&parse_word(word)?).to_string(),
        Form::Bkl => {
            if word.contains("band") {
                BklNormalForm::of_band(&word.parse()?).to_string()
            } else {
                BklNormalForm::of_artin(&word.parse()?).to_string()
            }
        }
    };
    println!("{text}");
    Ok(0)
}

fn wp(
    cfg: &Config,
    word: &str,
    other: Option<&str>,
    method: &str,
    budget: Option<u64>,
) -> braidlab::Result<u8> {
    let w = parse_word(word)?;
    let w2 = match other {
        Some(o) => parse_word(o)?,
        None => BraidWord::identity(w.strands()),
    };
    let method: Method = method.parse()?;
    let opts = EqualityOptions {
        handle_budget: budget.unwrap_or(cfg.handle_budget),
        seed: cfg.master_seed,
        ..Default::default()
    };
    let verdict = equal_with(&w, &w2, method, &opts)?;
    println!("{verdict}");
    Ok(match verdict {
        Equality::Equal | Equality::ProbablyEqual { .. } => 0,
        Equality::Unequal => 1,
    })
}

fn conj(cfg: &Config, a: ConjArgs) -> braidlab::Result<u8> {
    let kind: SummitKind = a.kind.parse()?;
    let x = parse_word(&a.word)?;
    let opts = SummitOptions {
        vertex_budget: a.budget_vertices.unwrap_or(cfg.vertex_budget),
        brute_force_cap: cfg.brute_force_cap,
        strategy: if a.brute_force {
            ConjugatorStrategy::BruteForce
        } else {
            ConjugatorStrategy::Fast
        },
    };
    if let Some(t) = a.target {
        let y = parse_word(&t)?;
        return Ok(match conjugacy_search_with(&x, &y, kind, &opts)? {
            Some(v) => {
                println!("conjugate: {}", v.free_reduce());
                0
            }
            None => {
                println!("not conjugate");
                1
            }
        });
    }
    let g = compute_summit_graph_with(&x, kind, &opts)?;
    if !g.verify() {
        return Err(Error::Invariant(
            "summit graph witnesses do not verify".into(),
        ));
    }
    println!("{kind}: {} vertices, {} edges", g.len(), g.edges.len());
    for e in g.elements() {
        println!("{e}");
    }
    if let Some(path) = a.emit_graph {
        fs::write(path, g.edge_list())?;
    }
    Ok(0)
}

fn protocol(cfg: &Config, a: ProtocolArgs) -> braidlab::Result<u8> {
    let scheme: Scheme = a.scheme.parse()?;
    let dist: Distribution = a.dist.as_deref().unwrap_or(&cfg.distribution).parse()?;
    let params = ProtocolParams {
        n: a.n.unwrap_or(cfg.n),
        dist,
        ..Default::default()
    };
    let mut out = std::io::stdout().lock();
    writeln!(out, "{PROTOCOL_CSV_HEADER}")?;
    let mut all = true;
    for seed in a.first..a.first + a.runs {
        let r = run_protocol(scheme, &params, cfg.master_seed, seed)?;
        all &= r.agree;
        writeln!(out, "{}", r.csv_row(a.timings))?;
    }
    Ok(u8::from(!all))
}

fn parse_seeds(arg: &str) -> braidlab::Result<Vec<u64>> {
    let bad = |s: &str| Error::Parse(format!("bad seed {s:?}"));
    let path = std::path::Path::new(arg);
    let text = if path.is_file() {
        fs::read_to_string(path)?
    } else {
        arg.to_string()
    };
    let mut seeds = Vec::new();
    for tok in text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
    {
        if let Some((a, b)) = tok.split_once("..") {
            let a: u64 = a.parse().map_err(|_| bad(tok))?;
            let b: u64 = b.parse().map_err(|_| bad(tok))?;
            seeds.extend(a..b);
        } else {
            seeds.push(tok.parse().map_err(|_| bad(tok))?);
        }
    }
    Ok(seeds)
}

fn attack(cfg: &Config, a: AttackArgs, jobs: usize) -> braidlab::Result<u8> {
    let kind: AttackKind = a.attack.parse()?;
    let length: LengthFn = a.length.parse()?;
    if a.memory == 0 || a.depth == 0 {
        return Err(Error::InvalidArgument(
            "memory and depth must be at least 1".into(),
        ));
    }
    let params = InstanceParams {
        kind: a.instance.parse::<InstanceKind>()?,
        n: a.n.unwrap_or(cfg.n),
        m: a.m,
        u_length: a.u_length,
        v_length: a.v_length,
        dist: cfg.distribution.parse()?,
    };
    let config = AttackConfig {
        kind,
        length,
        memory: a.memory,
        depth: a.depth,
        dedup: a.dedup,
        peaks: a.peaks,
        cap: cfg.brute_force_cap,
        ..Default::default()
    };
    let seeds = parse_seeds(&a.seeds)?;
    let rows = bench(&params, &[config], &seeds, cfg.master_seed, jobs)?;
    let csv = bench_csv(&rows, a.timings);
    match a.out {
        Some(p) => fs::write(p, csv)?,
        None => print!("{csv}"),
    }
    Ok(0)
}
