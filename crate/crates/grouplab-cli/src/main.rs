use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use grouplab::{
    arith, builtin_corpus, in_m_class_with, parse_group_file, run_suite, run_suite_groups, CheckId,
    ExecMode, FiniteGroup, GroupConfig, MClassQuery, SuiteOptions, SuiteRow,
};

#[derive(Parser)]
#[command(name = "grouplab", version, about = "Permutation-group structure and supplement checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print structural data for a group file
    Analyze {
        /// Group file (.grp)
        file: PathBuf,
    },
    /// Check that every subgroup of order prime^exp has an M-supplement
    Mclass {
        /// Group file (.grp)
        file: PathBuf,
        /// Subgroup order prime
        #[arg(long)]
        prime: u64,
        /// Subgroup order exponent
        #[arg(long)]
        exp: u32,
        /// Print one line per examined subgroup
        #[arg(long)]
        witnesses: bool,
    },
    /// Run the structure-check suite over a corpus and emit a CSV report
    Verify {
        /// Use the built-in corpus (the default)
        #[arg(long, conflicts_with = "corpus")]
        builtin: bool,
        /// Directory of .grp files to check instead
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Skip groups larger than this
        #[arg(long, default_value_t = 48)]
        max_order: usize,
        /// Write the CSV here instead of stdout
        #[arg(long)]
        report: Option<PathBuf>,
        /// Worker threads; 1 forces the sequential path
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match config_from_env() {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("grouplab: {msg}");
            return ExitCode::from(2);
        }
    };
    let code = match cli.command {
        Command::Analyze { file } => cmd_analyze(&file, config),
        Command::Mclass { file, prime, exp, witnesses } => {
            cmd_mclass(&file, prime, exp, witnesses, config)
        }
        Command::Verify { builtin: _, corpus, max_order, report, jobs } => {
            cmd_verify(corpus.as_deref(), max_order, report.as_deref(), jobs, config)
        }
    };
    ExitCode::from(code)
}

fn config_from_env() -> Result<GroupConfig, String> {
    let mut config = GroupConfig::default();
    if let Ok(raw) = std::env::var("GROUPLAB_ORDER_CAP") {
        match raw.trim().parse::<usize>() {
            Ok(cap) if cap > 0 => config.order_cap = cap,
            _ => return Err(format!("GROUPLAB_ORDER_CAP must be a positive integer, got {raw:?}")),
        }
    }
    Ok(config)
}

fn load_group(path: &Path, config: &GroupConfig) -> Result<(String, FiniteGroup), String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_group_file(&text, config).map_err(|e| format!("{}: {e}", path.display()))
}

fn cmd_analyze(path: &Path, config: GroupConfig) -> u8 {
    let run = || -> Result<(), String> {
        let (name, g) = load_group(path, &config)?;
        let lat = g.lattice().map_err(|e| format!("{name}: {e}"))?;
        let order = g.order();
        println!("name: {name}");
        println!("degree: {}", g.degree());
        println!("order: {order}");
        println!("center order: {}", g.center().order());
        println!("derived order: {}", g.derived_subgroup().order());
        println!("frattini order: {}", lat.frattini().order());
        println!("subgroups: {}", lat.len());
        for p in arith::primes_dividing(order as u64) {
            let sylow = lat.sylow(p);
            let tag = if lat.sylow_is_normal(p) { "normal" } else { "not normal" };
            println!(
                "prime {p}: sylow order {}, sylow {tag}, {p}'-core order {}",
                sylow.order(),
                lat.o_p_prime(p).order()
            );
        }
        Ok(())
    };
    match run() {
        Ok(()) => 0,
        Err(msg) => {
            eprintln!("grouplab: {msg}");
            2
        }
    }
}

fn cmd_mclass(path: &Path, prime: u64, exp: u32, witnesses: bool, config: GroupConfig) -> u8 {
    let (name, g) = match load_group(path, &config) {
        Ok(v) => v,
        Err(msg) => {
            eprintln!("grouplab: {msg}");
            return 2;
        }
    };
    let query = match MClassQuery::new(prime, exp) {
        Ok(q) => q,
        Err(e) => {
            eprintln!("grouplab: {e}");
            return 2;
        }
    };
    let report = match in_m_class_with(&g, query, ExecMode::Parallel) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("grouplab: {name}: {e}");
            return 2;
        }
    };
    let target = query.subgroup_order();
    if witnesses {
        for w in &report.witnesses {
            match &w.supplement {
                Some(k) => println!("{}: supplemented by {}", w.subgroup.describe(), k.describe()),
                None => println!("{}: no supplement", w.subgroup.describe()),
            }
        }
    }
    if report.holds {
        println!(
            "{name}: all {} subgroups of order {target} are M-supplemented",
            report.witnesses.len()
        );
        0
    } else {
        let bad = report.first_violation.as_ref().expect("failing report names a violation");
        println!("{name}: subgroup {} of order {target} has no M-supplement", bad.describe());
        1
    }
}

fn cmd_verify(
    corpus: Option<&Path>,
    max_order: usize,
    report_path: Option<&Path>,
    jobs: Option<usize>,
    config: GroupConfig,
) -> u8 {
    let mode = match jobs {
        Some(0) => {
            eprintln!("grouplab: --jobs must be at least 1");
            return 2;
        }
        Some(1) => ExecMode::Sequential,
        Some(n) => {
            // Already-initialized is fine; the pool then keeps its size.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            ExecMode::Parallel
        }
        None => ExecMode::Parallel,
    };
    let opts = SuiteOptions { max_order, mode, config };
    let report = match corpus {
        None => run_suite(&builtin_corpus(max_order), &opts),
        Some(dir) => {
            let mut groups = Vec::new();
            let mut error_rows = Vec::new();
            let mut files = match read_corpus_dir(dir) {
                Ok(f) => f,
                Err(msg) => {
                    eprintln!("grouplab: {msg}");
                    return 2;
                }
            };
            files.sort();
            for path in files {
                match load_group(&path, &opts.config) {
                    Ok(pair) => groups.push(pair),
                    Err(msg) => {
                        let stem = path
                            .file_stem()
                            .map(|s| s.to_string_lossy().into_owned())
                            .unwrap_or_else(|| path.display().to_string());
                        error_rows.push(SuiteRow {
                            group: stem,
                            check: CheckId::BuildError,
                            p: None,
                            k: None,
                            passed: false,
                            detail: msg,
                            millis: 0,
                        });
                    }
                }
            }
            let mut report = run_suite_groups(&groups, &opts);
            report.rows.extend(error_rows);
            report.rows.sort_by(|a, b| {
                (a.group.as_str(), a.check.tag(), a.p.unwrap_or(0), a.k.unwrap_or(0)).cmp(&(
                    b.group.as_str(),
                    b.check.tag(),
                    b.p.unwrap_or(0),
                    b.k.unwrap_or(0),
                ))
            });
            report
        }
    };
    let csv = report.to_csv();
    match report_path {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &csv) {
                eprintln!("grouplab: cannot write {}: {e}", path.display());
                return 2;
            }
            let (passed, total) = report.totals();
            println!("{}: {total} rows, {passed} passed, {} failed", path.display(), total - passed);
        }
        None => print!("{csv}"),
    }
    u8::try_from(report.exit_code()).unwrap_or(1)
}

fn read_corpus_dir(dir: &Path) -> Result<Vec<PathBuf>, String> {
    let entries =
        std::fs::read_dir(dir).map_err(|e| format!("cannot read {}: {e}", dir.display()))?;
    let mut files = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| format!("cannot read {}: {e}", dir.display()))?;
        let path = entry.path();
        if path.extension().is_some_and(|ext| ext == "grp") {
            files.push(path);
        }
    }
    Ok(files)
}
