//! Command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input, 2 computation limit exceeded,
//! 3 internal identity violation. Errors go to standard error as a single
//! line `error[<kind>]: <message>`.

use std::collections::HashMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::characters::{freudenthal, weyl_dimension};
use crate::error::{Error, Result};
use crate::hilbert::{HilbertEngine, PathCheck};
use crate::lusztig::LusztigEngine;
use crate::parabolic::ParabolicSubset;
use crate::partition::PartitionFunction;
use crate::rootsys::{CartanType, RootSystem, Weight};
use crate::verify::{run_all, VerifyConfig};
use crate::weyl::{weyl_order, DEFAULT_WEYL_CAP};

/// Environment variable naming a directory for persisting partition-function memos.
pub const CACHE_DIR_ENV: &str = "QKOSTANT_CACHE_DIR";

#[derive(Debug, Parser)]
#[command(name = "qkostant", version, about = "Lusztig q-analogs, graded Euler characters and Hilbert series on flag manifolds")]
struct Cli {
    /// key=value file providing `weyl_cap` and `max_degree` defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Largest Weyl group that may be enumerated.
    #[arg(long, global = true)]
    weyl_cap: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Always,
    Sampled,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the root datum.
    Roots {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate the q-analog partition function of the nilradical.
    Partition {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value = "")]
        levi: String,
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate the Lusztig polynomial m_λ^μ(P;q).
    Lusztig {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value = "")]
        levi: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Graded Euler character / Hilbert series of E_μ^* on G/P.
    Hilbert {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value = "")]
        levi: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// How thoroughly to compare the two computation routes.
        #[arg(long, value_enum, default_value = "always")]
        check: Check,
    },
    /// Weight multiplicities of V_λ (Freudenthal).
    Character {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the self-verification suite.
    Verify {
        #[arg(long)]
        types: Option<String>,
        #[arg(long, default_value_t = 6)]
        height: i64,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
}

#[derive(Debug, Default)]
struct Settings {
    weyl_cap: Option<u64>,
    max_degree: Option<usize>,
}

fn read_config(path: &Path) -> Result<Settings> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read config {}: {e}", path.display())))?;
    let mut map = HashMap::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::invalid(format!("{}:{}: expected key=value", path.display(), n + 1)))?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    let mut s = Settings::default();
    for (k, v) in map {
        let bad = || Error::invalid(format!("config key `{k}` has non-integer value `{v}`"));
        match k.as_str() {
            "weyl_cap" => s.weyl_cap = Some(v.parse().map_err(|_| bad())?),
            "max_degree" => s.max_degree = Some(v.parse().map_err(|_| bad())?),
            _ => return Err(Error::invalid(format!("unknown config key `{k}`"))),
        }
    }
    Ok(s)
}

fn memo_path(rs: &RootSystem, levi: &ParabolicSubset) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_DIR_ENV)?;
    let tag: Vec<String> = levi.levi_bourbaki().iter().map(usize::to_string).collect();
    Some(PathBuf::from(dir).join(format!("partition-{}-levi{}.json", rs.cartan_type(), tag.join("_"))))
}

fn load_memo(pf: &PartitionFunction, rs: &RootSystem, levi: &ParabolicSubset) -> Result<()> {
    if let Some(p) = memo_path(rs, levi) {
        pf.load_memo(&p)?;
    }
    Ok(())
}

fn save_memo(pf: &PartitionFunction, rs: &RootSystem, levi: &ParabolicSubset) -> Result<()> {
    if let Some(p) = memo_path(rs, levi) {
        if let Some(dir) = p.parent() {
            std::fs::create_dir_all(dir).map_err(|e| Error::invalid(format!("cannot create {}: {e}", dir.display())))?;
        }
        pf.save_memo(&p)?;
    }
    Ok(())
}

fn root_system(ty: &str) -> Result<RootSystem> {
    Ok(RootSystem::from_type(ty.parse::<CartanType>()?))
}

fn weight(rs: &RootSystem, s: &str, what: &str) -> Result<Weight> {
    let w: Weight = s.parse().map_err(|e: Error| Error::invalid(format!("--{what}: {e}")))?;
    if w.rank() != rs.rank() {
        return Err(Error::invalid(format!(
            "--{what} has {} coordinates, {} needs {}",
            w.rank(),
            rs.cartan_type(),
            rs.rank()
        )));
    }
    Ok(w)
}

fn no_latex(format: Format) -> Result<()> {
    if format == Format::Latex {
        Err(Error::invalid("LaTeX output is only available for `hilbert`"))
    } else {
        Ok(())
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let settings = match &cli.config {
        Some(p) => read_config(p)?,
        None => Settings::default(),
    };
    let cap = cli.weyl_cap.or(settings.weyl_cap).unwrap_or(DEFAULT_WEYL_CAP);
    let io = |e: std::io::Error| Error::invalid(format!("cannot write output: {e}"));
    match cli.command {
        Command::Roots { ty, format } => {
            no_latex(format)?;
            let rs = root_system(&ty)?;
            let roots: Vec<(Vec<i64>, Vec<i64>)> = rs
                .positive_roots()
                .iter()
                .zip(rs.positive_root_weights())
                .map(|(r, w)| (r.coords().to_vec(), w.coords().to_vec()))
                .collect();
            if format == Format::Json {
                let doc = serde_json::json!({
                    "type": rs.cartan_type().to_string(),
                    "rank": rs.rank(),
                    "cartan": rs.cartan(),
                    "positive_roots": roots.iter().map(|(r, _)| r).collect::<Vec<_>>(),
                    "highest_root": rs.highest_root().coords(),
                    "weyl_order": weyl_order(rs.cartan_type()).to_string(),
                });
                writeln!(out, "{doc}").map_err(io)?;
            } else {
                writeln!(out, "type {}  rank {}  |W| = {}", rs.cartan_type(), rs.rank(), weyl_order(rs.cartan_type()))
                    .map_err(io)?;
                writeln!(out, "cartan matrix (row i = <alpha_j, alpha_i^vee>):").map_err(io)?;
                for row in rs.cartan() {
                    let r: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
                    writeln!(out, "  {}", r.join("")).map_err(io)?;
                }
                writeln!(out, "positive roots ({}): height  root coords  weight coords", roots.len()).map_err(io)?;
                for (r, w) in &roots {
                    let h: i64 = r.iter().sum();
                    writeln!(out, "  {h:>3}  {}  {}", Weight::new(r.clone()), Weight::new(w.clone())).map_err(io)?;
                }
                writeln!(out, "highest root {}", rs.highest_root()).map_err(io)?;
            }
        }
        Command::Partition { ty, levi, target, max_degree, format } => {
            no_latex(format)?;
            let rs = root_system(&ty)?;
            let levi = ParabolicSubset::parse(&rs, &levi)?;
            let target = weight(&rs, &target, "target")?;
            let pf = PartitionFunction::for_parabolic(&rs, &levi)?;
            load_memo(&pf, &rs, &levi)?;
            let v = pf.value(&target, max_degree.or(settings.max_degree))?;
            save_memo(&pf, &rs, &levi)?;
            if format == Format::Json {
                let doc = serde_json::json!({ "coeffs": v.poly.coeffs(), "truncated": v.truncated });
                writeln!(out, "{doc}").map_err(io)?;
            } else {
                writeln!(out, "{}", v.poly).map_err(io)?;
                if v.truncated {
                    writeln!(out, "# truncated above the requested degree").map_err(io)?;
                }
            }
        }
        Command::Lusztig { ty, levi, lambda, mu, format } => {
            no_latex(format)?;
            let rs = root_system(&ty)?;
            let levi = ParabolicSubset::parse(&rs, &levi)?;
            let lambda = weight(&rs, &lambda, "lambda")?;
            let mu = weight(&rs, &mu, "mu")?;
            let engine = LusztigEngine::new(&rs, &levi, cap)?;
            load_memo(engine.partition(), &rs, &levi)?;
            let p = engine.poly(&lambda, &mu)?;
            save_memo(engine.partition(), &rs, &levi)?;
            if format == Format::Json {
                writeln!(out, "{}", serde_json::to_string(&p).expect("plain data")).map_err(io)?;
            } else {
                writeln!(out, "{p}").map_err(io)?;
            }
        }
        Command::Hilbert { ty, levi, mu, max_degree, format, check } => {
            let rs = root_system(&ty)?;
            let levi = ParabolicSubset::parse(&rs, &levi)?;
            let mu = weight(&rs, &mu, "mu")?;
            let m = max_degree
                .or(settings.max_degree)
                .ok_or_else(|| Error::invalid("--max-degree is required (or set max_degree in the config file)"))?;
            let engine = HilbertEngine::new(&rs, &levi, cap)?;
            load_memo(engine.lusztig().partition(), &rs, &levi)?;
            let check = match check {
                Check::Always => PathCheck::Always,
                Check::Sampled => PathCheck::Sampled { stride: 4 },
            };
            let report = engine.hilbert_series(&mu, m, check)?;
            save_memo(engine.lusztig().partition(), &rs, &levi)?;
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json() + "\n",
                Format::Latex => report.to_latex(),
            };
            write!(out, "{text}").map_err(io)?;
        }
        Command::Character { ty, lambda, format } => {
            no_latex(format)?;
            let rs = root_system(&ty)?;
            let lambda = weight(&rs, &lambda, "lambda")?;
            let ch = freudenthal(&rs, &lambda)?;
            if format == Format::Json {
                writeln!(out, "{}", ch.to_json()).map_err(io)?;
            } else {
                writeln!(out, "V_{lambda} of {}: dim {}", rs.cartan_type(), weyl_dimension(&rs, &lambda)?)
                    .map_err(io)?;
                writeln!(out, "weight  multiplicity").map_err(io)?;
                let mut rows: Vec<_> = ch.iter().collect();
                // highest weights first
                rows.sort_by(|(a, _), (b, _)| {
                    let ha = rs.height(a).expect("rank checked");
                    let hb = rs.height(b).expect("rank checked");
                    hb.cmp(&ha).then_with(|| b.cmp(a))
                });
                for (w, m) in rows {
                    writeln!(out, "{w}  {m}").map_err(io)?;
                }
            }
        }
        Command::Verify { types, height, max_degree } => {
            let mut config = VerifyConfig { height, max_degree, ..VerifyConfig::default() };
            if let Some(list) = types {
                config.types = list.split(',').map(|t| t.parse()).collect::<Result<Vec<CartanType>>>()?;
            }
            let reports = run_all(&config);
            let mut ok = true;
            for r in &reports {
                ok &= r.passed;
                writeln!(out, "{r}").map_err(io)?;
            }
            return Ok(if ok { 0 } else { 3 });
        }
    }
    Ok(0)
}

/// Runs the command line `argv` (including the program name), writing
/// results to `out` and diagnostics to `err`; returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let first = e.to_string();
            let line = first.lines().next().unwrap_or("bad arguments").trim_start_matches("error: ");
            let _ = writeln!(err, "error[invalid-input]: {line}");
            return 1;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {}", e.kind(), e.detail());
            e.exit_code()
        }
    }
}

/// [`run_with`] on standard output and standard error.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
