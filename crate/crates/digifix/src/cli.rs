//! Command-line front end. Every subcommand reads JSON inputs, prints a
//! machine-readable JSON result on stdout (pretty with `--pretty`), and
//! exits 0 on success/pass, 1 on a failed check or violated premise, and
//! 2 on usage or input errors.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::classify;
use crate::complexity::{self, DEFAULT_ENUMERATION_CAP};
use crate::error::Error;
use crate::formats;
use crate::image::DigitalImage;
use crate::metric::{self, Metric};
use crate::pairs;
use crate::scenarios::{self, SuiteConfig};
use crate::selfmap::SelfMap;

const EXIT_OK: i32 = 0;
const EXIT_CHECK_FAILED: i32 = 1;
const EXIT_INPUT: i32 = 2;

#[derive(Parser)]
#[command(
    name = "digifix",
    version,
    about = "Fixed-point verification on finite digital images"
)]
struct Cli {
    /// Pretty-print JSON output (and a human summary for the suite).
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect or validate an image file.
    Image {
        #[command(subcommand)]
        cmd: ImageCmd,
    },
    /// Classify or iterate a self-map.
    Map {
        #[command(subcommand)]
        cmd: MapCmd,
    },
    /// Check a pair of self-maps.
    Pair {
        #[command(subcommand)]
        cmd: PairCmd,
    },
    /// Run the four-map common-fixed-point procedure.
    Quad {
        #[command(subcommand)]
        cmd: QuadCmd,
    },
    /// Collapse-complexity census over all contractions.
    Complexity {
        #[arg(long)]
        image: PathBuf,
        #[arg(long, default_value = "l2", value_parser = parse_metric)]
        metric: Metric,
        /// Cap on |X| for whole-map-space enumeration.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
        /// Restrict the census to digitally continuous contractions.
        #[arg(long)]
        require_continuous: bool,
    },
    /// Search for or check simple closed curves.
    Scc {
        #[command(subcommand)]
        cmd: SccCmd,
    },
    /// Run the bundled verification scenarios S1..S10.
    PaperSuite {
        /// Comma-separated scenario ids, e.g. S1,S3.
        #[arg(long)]
        only: Option<String>,
        /// Enumeration cap passed to the complexity census.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
        /// Reserved for sampled sweeps; the bundled sweeps are exhaustive
        /// and ignore it.
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Subcommand)]
enum ImageCmd {
    /// Parse an image file and re-check its invariants.
    Validate {
        #[arg(long)]
        image: PathBuf,
    },
    /// Summary: size, connectivity, diameter, discreteness witness.
    Info {
        #[arg(long)]
        image: PathBuf,
        #[arg(long, default_value = "l2", value_parser = parse_metric)]
        metric: Metric,
    },
}

#[derive(Args)]
struct MapArgs {
    #[arg(long)]
    image: PathBuf,
    #[arg(long)]
    map: PathBuf,
}

#[derive(Subcommand)]
enum MapCmd {
    /// Full contraction classification of one self-map.
    Classify {
        #[command(flatten)]
        target: MapArgs,
        #[arg(long, default_value = "l2", value_parser = parse_metric)]
        metric: Metric,
    },
    /// Fixed points of a self-map.
    Fixpoints {
        #[command(flatten)]
        target: MapArgs,
    },
    /// Image sets X, f(X), f^2(X), ... until stabilization.
    Iterate {
        #[command(flatten)]
        target: MapArgs,
        #[arg(long)]
        max_steps: Option<usize>,
    },
}

#[derive(Subcommand)]
enum PairCmd {
    /// Pair verdicts: weak commutativity/compatibility, coefficients,
    /// containment. Pass --map twice: J then K.
    Check {
        #[arg(long)]
        image: PathBuf,
        #[arg(long = "map", required = true)]
        map: Vec<PathBuf>,
        #[arg(long, default_value = "l2", value_parser = parse_metric)]
        metric: Metric,
    },
    /// Two-map common-fixed-point iteration. Pass --map twice: J then K.
    Saluja {
        #[arg(long)]
        image: PathBuf,
        #[arg(long = "map", required = true)]
        map: Vec<PathBuf>,
        /// Coefficients xi1,xi2,xi3; searched automatically when omitted.
        #[arg(long, value_parser = parse_xi3)]
        xi: Option<Xi3>,
        #[arg(long, default_value_t = 0)]
        start: usize,
        #[arg(long, default_value = "l2", value_parser = parse_metric)]
        metric: Metric,
    },
}

#[derive(Subcommand)]
enum QuadCmd {
    /// Four-map common-fixed-point iteration. Pass --map four times:
    /// J, K, L, M.
    Saljhade {
        #[arg(long)]
        image: PathBuf,
        #[arg(long = "map", required = true)]
        map: Vec<PathBuf>,
        #[arg(long)]
        xi: f64,
        #[arg(long, default_value_t = 0)]
        start: usize,
        #[arg(long, default_value = "l2", value_parser = parse_metric)]
        metric: Metric,
    },
}

#[derive(Subcommand)]
enum SccCmd {
    /// Search a window for an induced cycle of the given length.
    Find {
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 2)]
        u: usize,
        #[arg(long)]
        len: usize,
        /// Box extents, e.g. 5x5 or 4x4x3.
        #[arg(long, value_parser = parse_window)]
        window: Window,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Is the image a simple closed curve?
    Check {
        #[arg(long)]
        image: PathBuf,
    },
}

#[derive(Clone)]
struct Window(Vec<usize>);

fn parse_window(s: &str) -> Result<Window, String> {
    let extents: Result<Vec<usize>, _> = s.split('x').map(str::parse::<usize>).collect();
    match extents {
        Ok(v) if !v.is_empty() => Ok(Window(v)),
        _ => Err(format!("bad window {s:?}; expected e.g. 5x5")),
    }
}

#[derive(Clone, Copy)]
struct Xi3([f64; 3]);

fn parse_xi3(s: &str) -> Result<Xi3, String> {
    let parts: Result<Vec<f64>, _> = s.split(',').map(str::parse::<f64>).collect();
    match parts {
        Ok(v) if v.len() == 3 => Ok(Xi3([v[0], v[1], v[2]])),
        _ => Err(format!("bad coefficients {s:?}; expected xi1,xi2,xi3")),
    }
}

fn parse_metric(s: &str) -> Result<Metric, String> {
    Metric::parse(s).map_err(|e| e.to_string())
}

/// Exit class of a domain error: premise/check failures exit 1, bad
/// inputs exit 2.
fn exit_class(err: &Error) -> i32 {
    match err {
        Error::NotDistanceDecreasing { .. }
        | Error::NotKannan
        | Error::NotUniformlyConnected { .. }
        | Error::NotContinuous { .. }
        | Error::ContainmentFails { .. }
        | Error::NotWeaklyCommutative { .. }
        | Error::NotCommuting { .. }
        | Error::InequalityFails { .. }
        | Error::IterationCapExceeded { .. }
        | Error::FixedPointNotUnique { .. }
        | Error::NotSimpleClosedCurve => EXIT_CHECK_FAILED,
        _ => EXIT_INPUT,
    }
}

struct Printer {
    pretty: bool,
}

impl Printer {
    fn emit<T: Serialize>(&self, value: &T) {
        let text = if self.pretty {
            serde_json::to_string_pretty(value)
        } else {
            serde_json::to_string(value)
        }
        .expect("report types serialize");
        println!("{text}");
    }
}

fn fail(message: impl std::fmt::Display, code: i32) -> i32 {
    eprintln!("error: {message}");
    code
}

fn load_image(path: &Path) -> Result<DigitalImage, i32> {
    formats::load_image(path).map_err(|e| fail(e, EXIT_INPUT))
}

fn load_map(path: &Path, img: &DigitalImage) -> Result<SelfMap, i32> {
    formats::load_map(path, img).map_err(|e| fail(e, EXIT_INPUT))
}

fn domain<T>(result: Result<T, Error>) -> Result<T, i32> {
    result.map_err(|e| fail(&e, exit_class(&e)))
}

fn expect_maps(map: &[PathBuf], count: usize, roles: &str) -> Result<(), i32> {
    if map.len() != count {
        return Err(fail(
            format!(
                "expected {count} --map files ({roles}), got {}",
                map.len()
            ),
            EXIT_INPUT,
        ));
    }
    Ok(())
}

/// Parse argv and run. Returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let printer = Printer { pretty: cli.pretty };
    match dispatch(cli.command, &printer) {
        Ok(code) => code,
        Err(code) => code,
    }
}

fn dispatch(command: Command, out: &Printer) -> Result<i32, i32> {
    match command {
        Command::Image { cmd } => image_cmd(cmd, out),
        Command::Map { cmd } => map_cmd(cmd, out),
        Command::Pair { cmd } => pair_cmd(cmd, out),
        Command::Quad { cmd } => quad_cmd(cmd, out),
        Command::Complexity {
            image,
            metric,
            cap,
            require_continuous,
        } => {
            let img = load_image(&image)?;
            let result = domain(complexity::c_sharp_with(
                &metric,
                &img,
                cap,
                require_continuous,
            ))?;
            out.emit(&result);
            Ok(EXIT_OK)
        }
        Command::Scc { cmd } => scc_cmd(cmd, out),
        Command::PaperSuite { only, cap, seed } => paper_suite(only, cap, seed, out),
    }
}

fn image_cmd(cmd: ImageCmd, out: &Printer) -> Result<i32, i32> {
    match cmd {
        ImageCmd::Validate { image } => {
            let text = std::fs::read_to_string(&image)
                .map_err(|e| fail(format!("cannot read {}: {e}", image.display()), EXIT_INPUT))?;
            let value: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| fail(format!("{}: {e}", image.display()), EXIT_INPUT))?;
            match serde_json::from_value::<DigitalImage>(value) {
                Ok(img) => {
                    out.emit(&json!({
                        "valid": true,
                        "points": img.len(),
                        "dim": img.dim(),
                        "cu": img.u(),
                    }));
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    out.emit(&json!({ "valid": false, "error": e.to_string() }));
                    Ok(EXIT_CHECK_FAILED)
                }
            }
        }
        ImageCmd::Info { image, metric } => {
            let img = load_image(&image)?;
            let diameter = domain(metric::diameter(&metric, &img))?;
            let witness = domain(metric::uniform_discreteness_witness(&metric, &img))?;
            let uniformly_connected = if img.is_connected() {
                Some(domain(metric::is_uniformly_connected(&img))?)
            } else {
                None
            };
            out.emit(&json!({
                "points": img.len(),
                "dim": img.dim(),
                "cu": img.u(),
                "connected": img.is_connected(),
                "components": img.components(),
                "diameter": diameter.as_f64(),
                "discreteness_witness": witness.as_f64(),
                "uniformly_connected": uniformly_connected,
            }));
            Ok(EXIT_OK)
        }
    }
}

fn map_cmd(cmd: MapCmd, out: &Printer) -> Result<i32, i32> {
    match cmd {
        MapCmd::Classify { target, metric } => {
            let img = load_image(&target.image)?;
            let f = load_map(&target.map, &img)?;
            let report = domain(classify::classify(&metric, &img, &f))?;
            out.emit(&report);
            Ok(EXIT_OK)
        }
        MapCmd::Fixpoints { target } => {
            let img = load_image(&target.image)?;
            let f = load_map(&target.map, &img)?;
            let fixed = f.fixed_points();
            let points: Vec<_> = fixed
                .iter()
                .map(|&i| img.points()[i].clone())
                .collect();
            out.emit(&json!({ "fixed_points": fixed, "points": points }));
            Ok(EXIT_OK)
        }
        MapCmd::Iterate { target, max_steps } => {
            let img = load_image(&target.image)?;
            let f = load_map(&target.map, &img)?;
            let steps = max_steps.unwrap_or_else(|| f.default_step_cap());
            let seq = f.image_sequence(steps);
            out.emit(&seq);
            Ok(EXIT_OK)
        }
    }
}

fn pair_cmd(cmd: PairCmd, out: &Printer) -> Result<i32, i32> {
    match cmd {
        PairCmd::Check { image, map, metric } => {
            let img = load_image(&image)?;
            let j = load_map(&map[0], &img)?;
            let k = load_map(&map[1], &img)?;
            let report = domain(pairs::pair_report(&metric, &img, &j, &k))?;
            out.emit(&report);
            Ok(EXIT_OK)
        }
        PairCmd::Saluja {
            image,
            map,
            xi,
            start,
            metric,
        } => {
            let img = load_image(&image)?;
            let j = load_map(&map[0], &img)?;
            let k = load_map(&map[1], &img)?;
            let coeffs = match xi {
                Some(Xi3(v)) => v,
                None => match domain(pairs::saluja_search_coefficients(&metric, &img, &j, &k))? {
                    Some(v) => v,
                    None => {
                        return Err(fail(
                            "no admissible coefficients: the two-map inequality is infeasible",
                            EXIT_CHECK_FAILED,
                        ))
                    }
                },
            };
            let outcome = domain(pairs::saluja_common_fixed_point(
                &metric, &img, &j, &k, coeffs, start,
            ))?;
            out.emit(&json!({
                "fixed_point": outcome.fixed_point,
                "point": img.points()[outcome.fixed_point].clone(),
                "chain": outcome.chain,
                "unique": outcome.unique,
                "xi": coeffs,
            }));
            Ok(EXIT_OK)
        }
    }
}

fn quad_cmd(cmd: QuadCmd, out: &Printer) -> Result<i32, i32> {
    match cmd {
        QuadCmd::Saljhade {
            image,
            map,
            xi,
            start,
            metric,
        } => {
            let img = load_image(&image)?;
            let j = load_map(&map[0], &img)?;
            let k = load_map(&map[1], &img)?;
            let l = load_map(&map[2], &img)?;
            let m4 = load_map(&map[3], &img)?;
            let outcome = domain(pairs::four_map_common_fixed_point(
                &metric, &img, &j, &k, &l, &m4, xi, start,
            ))?;
            out.emit(&json!({
                "fixed_point": outcome.fixed_point,
                "point": img.points()[outcome.fixed_point].clone(),
                "chain": outcome.chain,
                "unique": outcome.unique,
                "xi": xi,
            }));
            Ok(EXIT_OK)
        }
    }
}

fn scc_cmd(cmd: SccCmd, out: &Printer) -> Result<i32, i32> {
    match cmd {
        SccCmd::Find {
            dim,
            u,
            len,
            window,
            budget,
        } => {
            let result = domain(complexity::find_scc(dim, u, len, &window.0, budget))?;
            out.emit(&result);
            Ok(if result.found { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        SccCmd::Check { image } => {
            let img = load_image(&image)?;
            let verdict = domain(complexity::is_simple_closed_curve(&img))?;
            out.emit(&json!({ "is_simple_closed_curve": verdict }));
            Ok(if verdict { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
    }
}

fn paper_suite(
    only: Option<String>,
    cap: usize,
    seed: Option<u64>,
    out: &Printer,
) -> Result<i32, i32> {
    let config = SuiteConfig {
        only: only.map(|s| s.split(',').map(|x| x.trim().to_string()).collect()),
        enumeration_cap: cap,
        seed,
    };
    let outcomes = domain(scenarios::run_paper_suite(&config))?;
    out.emit(&outcomes);
    if out.pretty {
        for o in &outcomes {
            let passed = o.assertions.iter().filter(|a| a.pass).count();
            eprintln!(
                "{} {:<55} {} ({passed}/{} assertions)",
                o.scenario,
                o.name,
                if o.pass { "PASS" } else { "FAIL" },
                o.assertions.len(),
            );
        }
    }
    let all_pass = outcomes.iter().all(|o| o.pass);
    Ok(if all_pass { EXIT_OK } else { EXIT_CHECK_FAILED })
}
