mod error;
mod report;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ihull_core::cover::{
    classify_point, cover_distance, separated_net, CompletionPoint, CoverClassification, CoverPoint,
};
use ihull_core::grid::{oracle_distance, Connectivity, GridConfig};
use ihull_core::hull::{extended_distance, hull_distance, parse_point, space, ExtendedPoint, HaloRef, SpaceId};
use ihull_core::lcf::{evaluate, format_number};
use ihull_core::rational::parse_rational;
use ihull_core::{LeviCivita, MagnitudeClass, Precision, Rational};
use serde_json::{json, Value};

use error::CliError;
use verify::Scenario;

/// Exact Levi-Civita arithmetic, nonstandard hulls and the universal cover of
/// the punctured plane.
#[derive(Parser)]
#[command(name = "ihull", version)]
struct Cli {
    /// Truncation order for inexact operations (a rational, e.g. 8 or 17/2).
    #[arg(long, global = true, default_value = "8", value_parser = positive_rational)]
    order: Rational,
    /// Coefficient precision in bits.
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u32).range(8..=65536))]
    precision: u32,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for generated probes.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression such as "(1+t)*(1-t)".
    Eval { expr: String },
    /// Extended distance between two points of a space, with its standard part.
    Dist { space: SpaceArg, p1: String, p2: String },
    /// Magnitude class of a number, or cover classification of "(r, zeta)".
    Classify { point: String },
    /// Distance between the halos of two finite points.
    HullDist { space: SpaceArg, p1: String, p2: String },
    /// Run a named scenario and report its checks.
    Verify {
        scenario: Scenario,
        /// Random probes per space for the harness scenarios.
        #[arg(long, default_value_t = 100)]
        probes: usize,
        /// Size of the separated net for hb-failure.
        #[arg(long, default_value_t = 10)]
        net_size: usize,
    },
    /// Grid shortest-path distance between standard cover points, against the closed form.
    Oracle {
        p1: String,
        p2: String,
        /// Cells per axis.
        #[arg(long, default_value_t = 256)]
        grid: usize,
        #[arg(long, value_enum, default_value_t = ConnectivityArg::EightKnight)]
        connectivity: ConnectivityArg,
    },
    /// The 2-separated net (1, 4k), k < N, inside the unit ball of the completion.
    Net { n: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceArg {
    RationalsLine,
    EuclideanPlane,
    Cover,
    CoverCompletion,
}

impl From<SpaceArg> for SpaceId {
    fn from(s: SpaceArg) -> Self {
        match s {
            SpaceArg::RationalsLine => SpaceId::RationalsLine,
            SpaceArg::EuclideanPlane => SpaceId::EuclideanPlane,
            SpaceArg::Cover => SpaceId::Cover,
            SpaceArg::CoverCompletion => SpaceId::CoverCompletion,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConnectivityArg {
    Four,
    EightKnight,
}

fn positive_rational(s: &str) -> Result<Rational, String> {
    match parse_rational(s) {
        Some(q) if q > Rational::from_integer(0.into()) => Ok(q),
        _ => Err(format!("expected a positive rational, got '{s}'")),
    }
}

/// What a command prints: the text form and the JSON form.
struct Output {
    text: String,
    json: Value,
    code: u8,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Self { text, json, code: 0 }
    }
}

fn decimal(x: &LeviCivita) -> String {
    format_number(x, Some(12))
}

fn standard_part_json(x: &LeviCivita) -> (String, Value) {
    match x.standard_part() {
        Ok(st) => (st.to_decimal(12), json!(st.to_string())),
        Err(_) => ("none (not finite)".to_string(), Value::Null),
    }
}

fn points(id: SpaceId, p1: &str, p2: &str, pr: &Precision) -> Result<(ExtendedPoint, ExtendedPoint), CliError> {
    Ok((parse_point(id, p1, pr)?, parse_point(id, p2, pr)?))
}

fn cover_point(src: &str, pr: &Precision) -> Result<CoverPoint, CliError> {
    let p = parse_point(SpaceId::Cover, src, pr)?;
    Ok(CoverPoint::new(p.coords()[0].clone(), p.coords()[1].clone())?)
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let pr = Precision::new(cli.order.clone(), cli.precision);
    match &cli.command {
        Command::Eval { expr } => {
            let x = evaluate(expr, &pr)?;
            let class = x.classify_magnitude();
            Ok(Output::ok(decimal(&x), json!({ "value": x.to_string(), "class": class })))
        }
        Command::Dist { space: s, p1, p2 } => {
            let id = SpaceId::from(*s);
            let (a, b) = points(id, p1, p2, &pr)?;
            let d = extended_distance(space(id), &a, &b, &pr)?;
            let (st_text, st_json) = standard_part_json(&d);
            Ok(Output::ok(
                format!("{}\nst = {st_text}", decimal(&d)),
                json!({ "space": id, "p1": a.to_string(), "p2": b.to_string(), "distance": d.to_string(), "standard_part": st_json }),
            ))
        }
        Command::Classify { point } => classify(point, &pr),
        Command::HullDist { space: s, p1, p2 } => {
            let id = SpaceId::from(*s);
            let (a, b) = points(id, p1, p2, &pr)?;
            let d = hull_distance(space(id), &HaloRef::new(a.clone()), &HaloRef::new(b.clone()), &pr)?;
            Ok(Output::ok(
                d.to_decimal(12),
                json!({ "space": id, "p1": a.to_string(), "p2": b.to_string(), "hull_distance": d.to_string() }),
            ))
        }
        Command::Verify { scenario, probes, net_size } => {
            let opts = verify::Options { precision: pr, seed: cli.seed, probes: *probes, net_size: *net_size };
            let report = verify::run(*scenario, &opts);
            Ok(Output {
                text: report.render_text(),
                json: serde_json::to_value(&report).expect("report serializes"),
                code: report.exit_code(),
            })
        }
        Command::Oracle { p1, p2, grid, connectivity } => {
            let (a, b) = (cover_point(p1, &pr)?, cover_point(p2, &pr)?);
            let conn = match connectivity {
                ConnectivityArg::Four => Connectivity::Four,
                ConnectivityArg::EightKnight => Connectivity::EightKnight,
            };
            let cfg = GridConfig::for_points(&a, &b, *grid, conn)?;
            let oracle = oracle_distance(&cfg, &a, &b)?;
            let closed = cover_distance(&a, &b, &pr)?;
            let closed_f = closed.standard_part()?.midpoint_f64();
            let rel = if closed_f > 0.0 { (oracle - closed_f).abs() / closed_f } else { oracle };
            Ok(Output::ok(
                format!("oracle      = {oracle:.6}\nclosed form = {}\nrelative error = {rel:.4}", decimal(&closed)),
                json!({
                    "p1": a.to_string(),
                    "p2": b.to_string(),
                    "grid": grid,
                    "window": { "r": [cfg.r_min, cfg.r_max], "zeta": [cfg.zeta_min, cfg.zeta_max] },
                    "oracle": oracle,
                    "closed_form": closed.to_string(),
                    "relative_error": rel,
                }),
            ))
        }
        Command::Net { n } => net(*n, &pr),
    }
}

fn classify(src: &str, pr: &Precision) -> Result<Output, CliError> {
    if src.trim_start().starts_with('(') && src.contains(',') {
        let p = cover_point(src, pr)?;
        let c = classify_point(&p);
        let mut j = json!({ "point": p.to_string(), "classification": c.name() });
        let text = match &c {
            CoverClassification::Nearstandard { r, zeta } => {
                j["standard_point"] = json!([r.to_string(), zeta.to_string()]);
                format!("{c} ({}, {})", r.to_decimal(12), zeta.to_decimal(12))
            }
            CoverClassification::OriginHalo { bound } => {
                j["bound"] = json!(bound.to_string());
                format!("{c} (distance to (t, 0) <= {})", decimal(bound))
            }
            _ => c.to_string(),
        };
        let code = if matches!(c, CoverClassification::Unknown) { 3 } else { 0 };
        return Ok(Output { text, json: j, code });
    }
    let x = evaluate(src, pr)?;
    let class = x.classify_magnitude();
    let code = if class == MagnitudeClass::Unknown { 3 } else { 0 };
    Ok(Output { text: class.to_string(), json: json!({ "value": x.to_string(), "class": class }), code })
}

fn net(n: usize, pr: &Precision) -> Result<Output, CliError> {
    if n < 2 {
        return Err(CliError::Input("net size must be at least 2".to_string()));
    }
    let pts = separated_net(n);
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    for p in &pts {
        let d =
            ihull_core::cover::completion_distance(&CompletionPoint::Origin, &CompletionPoint::Point(p.clone()), pr)?;
        lines.push(format!("{p}  d(origin) = {d}"));
        rows.push(json!({ "point": p.to_string(), "origin_distance": d.to_string() }));
    }
    let mut distances: Vec<LeviCivita> = Vec::new();
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            let d = cover_distance(a, b, pr)?;
            if !distances.contains(&d) {
                distances.push(d);
            }
        }
    }
    let shown: Vec<String> = distances.iter().map(|d| d.to_string()).collect();
    lines.push(format!("pairwise distances: {}", shown.join(", ")));
    Ok(Output::ok(lines.join("\n"), json!({ "points": rows, "pairwise_distances": shown })))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json output"));
            } else {
                println!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
