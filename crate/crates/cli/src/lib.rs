//! Command-line frontend for `veronese-core`.
//!
//! Every subcommand writes a single report (JSON by default, indented text
//! with `--format text`) to stdout. Exit codes: 0 on success, 1 when a
//! mathematical precondition fails, 2 on input or parse failures.

pub mod report;

use std::ffi::OsString;
use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::{json, Value};

use veronese_core::cone::{cone_equation, s4_family, Lambda, S4FamilyData};
use veronese_core::covariants::{covariants, dual_curve, j_eval_coords, line_restriction, QuarticCurve, PLANE};
use veronese_core::io::{parse_point, parse_points, parse_rational};
use veronese_core::octad::{
    aronhold_check, bitangents, coordinates_of, cremona_octad, eighth_point_with_seed, gale_transform,
    hessian_quartic, net_from_heptad, HessianQuartic, DEFAULT_SEED,
};
use veronese_core::poly::macaulay_resultant_ternary;
use veronese_core::theta::{
    aronhold_systems, build_model, cremona_label, even_histogram, odd_characteristics, Parity,
};
use veronese_core::{
    parse_poly, Ambient, CovariantError, Octad, OctadError, ParseError, Poly, PolySource, QuadricNet, ThetaChar,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "veronese", version, about = "Plane quartics, double Veronese cones and Cayley octads")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "VERONESE_FORMAT", default_value = "json")]
    pub format: Format,
    /// Seed for randomized coordinate changes.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Progress messages on stderr (repeat for more).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
    /// Run bitangent sweeps and Aronhold enumeration on all cores.
    #[arg(long, global = true)]
    pub parallel: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Line restriction, g4, g6, the dual curve and the cone of a quartic.
    Covariants { file: PathBuf },
    /// j-invariant of the line with dual coordinates `s,t,u`.
    J {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Nets of quadrics and Cayley octads from a file of 7 or 8 points of P3.
    Octad {
        #[command(subcommand)]
        action: OctadAction,
    },
    /// The 64 theta characteristics and Aronhold systems.
    Theta {
        #[command(subcommand)]
        action: ThetaAction,
    },
    /// The S4-symmetric family; `--lambda` is a rational or `symbolic`.
    S4 {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum OctadAction {
    Net { file: PathBuf },
    Hessian { file: PathBuf },
    Eighth { file: PathBuf },
    Bitangents { file: PathBuf },
    Cremona {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 1)]
        center: Vec<usize>,
    },
    Gale { file: PathBuf },
    Check { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum ThetaAction {
    Count,
    Aronhold {
        /// List every system (one line each in text mode).
        #[arg(long)]
        list: bool,
    },
}

/// Settings shared by all subcommands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub inputs: Vec<PathBuf>,
    pub format: Format,
    pub seed: u64,
    pub verbosity: u8,
    pub parallel: bool,
}

impl Cli {
    pub fn config(&self) -> RunConfig {
        let inputs = match &self.command {
            Command::Covariants { file } | Command::J { file, .. } => vec![file.clone()],
            Command::Octad { action } => vec![action.file().to_path_buf()],
            Command::Theta { .. } | Command::S4 { .. } => vec![],
        };
        RunConfig { inputs, format: self.format, seed: self.seed, verbosity: self.verbose, parallel: self.parallel }
    }
}

impl OctadAction {
    fn file(&self) -> &Path {
        match self {
            OctadAction::Net { file }
            | OctadAction::Hessian { file }
            | OctadAction::Eighth { file }
            | OctadAction::Bitangents { file }
            | OctadAction::Cremona { file, .. }
            | OctadAction::Gale { file }
            | OctadAction::Check { file } => file,
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    /// Exit 2.
    Input { kind: &'static str, message: String, extra: Option<Value> },
    /// Exit 1.
    Math { kind: &'static str, message: String, extra: Option<Value> },
}

impl Failure {
    fn math(kind: &'static str, e: impl fmt::Display) -> Self {
        Failure::Math { kind, message: e.to_string(), extra: None }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Input {
            kind: "parse",
            message: e.to_string(),
            extra: Some(json!({ "line": e.line, "column": e.column, "offset": e.offset })),
        }
    }
}

impl From<OctadError> for Failure {
    fn from(e: OctadError) -> Self {
        Failure::math("octad", e)
    }
}

impl From<CovariantError> for Failure {
    fn from(e: CovariantError) -> Self {
        Failure::math("covariants", e)
    }
}

struct Ctx {
    config: RunConfig,
    log: String,
}

impl Ctx {
    fn note(&mut self, level: u8, msg: impl fmt::Display) {
        if self.config.verbosity >= level {
            self.log.push_str(&format!("veronese: {msg}\n"));
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Output {
    let mut ctx = Ctx { config: cli.config(), log: String::new() };
    let result = dispatch(&cli.command, &mut ctx);
    let (code, value) = match result {
        Ok(Rendered::Value(v)) => (0, v),
        Ok(Rendered::Lines(lines)) => {
            return Output { code: 0, stdout: lines, stderr: ctx.log };
        }
        Err(Failure::Input { kind, message, extra }) => (2, report::error(kind, &message, extra)),
        Err(Failure::Math { kind, message, extra }) => (1, report::error(kind, &message, extra)),
    };
    let stdout = match ctx.config.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&value).expect("serializable")),
        Format::Text => report::to_text(&value),
    };
    if code != 0 {
        let message = value["message"].as_str().unwrap_or_default();
        ctx.log.push_str(&format!("veronese: error: {message}\n"));
    }
    Output { code, stdout, stderr: ctx.log }
}

enum Rendered {
    Value(Value),
    /// Preformatted text output.
    Lines(String),
}

fn dispatch(command: &Command, ctx: &mut Ctx) -> Result<Rendered, Failure> {
    match command {
        Command::Covariants { file } => cmd_covariants(file, ctx).map(Rendered::Value),
        Command::J { file, point } => cmd_j(file, point, ctx).map(Rendered::Value),
        Command::Octad { action } => cmd_octad(action, ctx).map(Rendered::Value),
        Command::Theta { action } => cmd_theta(action, ctx),
        Command::S4 { lambda } => cmd_s4(lambda, ctx).map(Rendered::Value),
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let read = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    };
    read.map_err(|e| Failure::Input {
        kind: "io",
        message: format!("{}: {e}", path.display()),
        extra: None,
    })
}

fn load_quartic(path: &Path, ctx: &mut Ctx) -> Result<QuarticCurve, Failure> {
    let text = read_input(path)?;
    ctx.note(1, format_args!("parsing {}", path.display()));
    let poly = parse_poly(&PolySource::new(&text, &PLANE))?;
    QuarticCurve::new(poly).map_err(|e| Failure::math("not_quartic", e))
}

fn smoothness_resultant(curve: &QuarticCurve) -> Option<veronese_core::Rational> {
    let f = curve.poly().with_scope(&PLANE);
    let d: Vec<Poly> = PLANE.iter().map(|v| f.partial_derivative(v).expect("in scope")).collect();
    macaulay_resultant_ternary([&d[0], &d[1], &d[2]], PLANE).ok()
}

fn cmd_covariants(file: &Path, ctx: &mut Ctx) -> Result<Value, Failure> {
    let curve = load_quartic(file, ctx)?;
    ctx.note(1, "line restriction");
    let lr = line_restriction(&curve)?;
    ctx.note(1, "covariants g4, g6");
    let cp = covariants(&curve)?;
    let g = dual_curve(&cp).g;
    let cone = cone_equation(&cp);
    ctx.note(1, "smoothness resultant");
    let smooth = match smoothness_resultant(&curve) {
        Some(r) => json!({ "resultant": report::rational(&r), "smooth": !r.is_zero() }),
        None => json!({ "resultant": null, "smooth": null }),
    };
    Ok(json!({
        "status": "ok",
        "quartic": report::poly(curve.poly()),
        "b": lr.b.iter().map(report::poly).collect::<Vec<_>>(),
        "g4": report::poly(&cp.g4),
        "g6": report::poly(&cp.g6),
        "dual": { "G": report::poly(&g), "degree": g.total_degree() },
        "cone": { "F": report::poly(&cone.f), "euler_defect": report::poly(&cone.euler_defect()), "euler": cone.satisfies_euler() },
        "smoothness": smooth,
    }))
}

fn cmd_j(file: &Path, point: &str, ctx: &mut Ctx) -> Result<Value, Failure> {
    let curve = load_quartic(file, ctx)?;
    let p = parse_point(point, Ambient::P2)?;
    let cp = covariants(&curve)?;
    let g = dual_curve(&cp).g;
    let (g4, g6) = cp.values_at(&p.coordinates)?;
    let binding: Vec<(&str, veronese_core::Rational)> = ["s", "t", "u"].into_iter().zip(p.coordinates.iter().cloned()).collect();
    let g_value = g.eval_at(&binding).ok_or(CovariantError::Symbolic)?;
    let mut out = json!({
        "point": report::rationals(&p.coordinates),
        "g4": report::rational(&g4),
        "g6": report::rational(&g6),
        "G": report::rational(&g_value),
    });
    let (status, j) = match j_eval_coords(&cp, &p.coordinates) {
        Ok(j) => ("ok", report::rational(&j)),
        Err(CovariantError::OnDualCurve) => ("on_dual_curve", Value::Null),
        Err(CovariantError::Indeterminate) => ("indeterminate", Value::Null),
        Err(e) => return Err(e.into()),
    };
    out["status"] = json!(status);
    out["j"] = j;
    Ok(out)
}

/// The octad and its net. Seven points get their eighth point from the
/// base locus; an eighth point in the file must lie on the net.
fn load_octad(path: &Path, ctx: &mut Ctx) -> Result<(Octad, QuadricNet, bool), Failure> {
    let text = read_input(path)?;
    let sources = parse_points(&text, Ambient::P3)?;
    let points = coordinates_of(&sources)?;
    match points.len() {
        7 | 8 => {}
        n => return Err(OctadError::WrongCount { expected: 7, found: n }.into()),
    }
    ctx.note(1, "net of quadrics through the first seven points");
    let net = net_from_heptad(&points[..7])?;
    if points.len() == 8 {
        net.with_basepoints(points.clone())?;
        return Ok((Octad::new(points)?, net, false));
    }
    let seed = ctx.config.seed;
    ctx.note(1, format_args!("eighth base point (seed {seed})"));
    let octad = eighth_point_with_seed(&net, seed)?;
    Ok((octad, net, true))
}

fn hessian_json(h: &HessianQuartic) -> Value {
    json!({ "quartic": report::poly(&h.quartic), "resultant": report::rational(&h.resultant), "smooth": h.smooth })
}

fn net_json(net: &QuadricNet) -> Value {
    json!({
        "generators": net.generators().iter().map(report::matrix).collect::<Vec<_>>(),
        "quadrics": (0..3).map(|k| report::poly(&net.quadric(k))).collect::<Vec<_>>(),
    })
}

fn smooth_hessian(net: &QuadricNet, ctx: &mut Ctx) -> Result<HessianQuartic, Failure> {
    ctx.note(1, "Hessian quartic");
    let h = hessian_quartic(net);
    if !h.smooth {
        return Err(Failure::Math {
            kind: "octad",
            message: OctadError::NotAronhold.to_string(),
            extra: Some(json!({ "hessian": hessian_json(&h) })),
        });
    }
    Ok(h)
}

fn cmd_octad(action: &OctadAction, ctx: &mut Ctx) -> Result<Value, Failure> {
    if let OctadAction::Check { file } = action {
        return cmd_check(file, ctx);
    }
    if let OctadAction::Net { file } = action {
        let text = read_input(file)?;
        let points = coordinates_of(&parse_points(&text, Ambient::P3)?)?;
        if points.len() < 7 {
            return Err(OctadError::WrongCount { expected: 7, found: points.len() }.into());
        }
        let net = net_from_heptad(&points[..7])?.with_basepoints(points.clone())?;
        let mut out = net_json(&net);
        out["status"] = json!("ok");
        out["basepoints"] = report::points(net.basepoints());
        return Ok(out);
    }
    let (octad, net, computed) = load_octad(action.file(), ctx)?;
    let mut out = match action {
        OctadAction::Hessian { .. } => hessian_json(&hessian_quartic(&net)),
        OctadAction::Eighth { .. } => json!({
            "computed": computed,
            "seed": ctx.config.seed.to_string(),
            "eighth": report::rationals(octad.points().last().expect("eight points")),
            "octad": report::points(octad.points()),
        }),
        OctadAction::Bitangents { .. } => {
            let h = smooth_hessian(&net, ctx)?;
            ctx.note(1, "28 bitangents");
            let all = bitangents(&octad, &net, &h, ctx.config.parallel)?;
            let entries: Vec<Value> = all
                .iter()
                .map(|b| {
                    json!({
                        "pair": [b.pair.0, b.pair.1],
                        "theta": ThetaChar::pair(b.pair.0, b.pair.1).expect("labels").to_string(),
                        "line": report::rationals(&b.line),
                        "span": [report::rationals(&b.span[0]), report::rationals(&b.span[1])],
                        "restriction": report::poly(&b.restriction),
                        "constant": report::rational(&b.constant),
                        "root": report::poly(&b.root),
                        "certified": b.certificate_holds(),
                    })
                })
                .collect();
            json!({
                "count": all.len(),
                "all_certified": all.iter().all(|b| b.certificate_holds()),
                "hessian": report::poly(&h.quartic),
                "bitangents": entries,
            })
        }
        OctadAction::Cremona { center, .. } => {
            let center: [usize; 4] = center.as_slice().try_into().map_err(|_| Failure::Input {
                kind: "usage",
                message: format!("--center needs four labels, got {}", center.len()),
                extra: None,
            })?;
            let label = cremona_label(center).map_err(|e| Failure::Input {
                kind: "usage",
                message: e.to_string(),
                extra: None,
            })?;
            ctx.note(1, "Cremona transformation");
            let c = cremona_octad(&octad, &net, center)?;
            let h = hessian_quartic(&c.net);
            json!({
                "center": center,
                "theta": label.to_string(),
                "normalization": report::matrix(&c.normalization),
                "octad": report::points(c.octad.points()),
                "net": net_json(&c.net),
                "determinant": report::poly(&c.determinant),
                "normalized_determinant": report::poly(&c.normalized_determinant),
                "scalar": report::rational(&c.scalar),
                "determinant_preserved": c.determinant_preserved,
                "hessian": hessian_json(&h),
            })
        }
        OctadAction::Gale { .. } => {
            ctx.note(1, "Gale transform");
            let g = gale_transform(&octad)?;
            json!({
                "forms": report::points(&g.forms),
                "points": report::points(&g.points),
                "collinearity": g.collinearity.iter().map(|(l, d)| json!({ "labels": l, "determinant": report::rational(d) })).collect::<Vec<_>>(),
                "conic_ranks": g.conic_ranks.iter().map(|(l, r)| json!({ "labels": l, "rank": r })).collect::<Vec<_>>(),
                "no_three_collinear": g.no_three_collinear,
                "no_six_on_conic": g.no_six_on_conic,
            })
        }
        OctadAction::Net { .. } | OctadAction::Check { .. } => unreachable!("handled above"),
    };
    out["status"] = json!("ok");
    Ok(out)
}

fn cmd_check(file: &Path, ctx: &mut Ctx) -> Result<Value, Failure> {
    let text = read_input(file)?;
    let points = coordinates_of(&parse_points(&text, Ambient::P3)?)?;
    if !(7..=8).contains(&points.len()) {
        return Err(OctadError::WrongCount { expected: 7, found: points.len() }.into());
    }
    ctx.note(1, "Aronhold check");
    let r = aronhold_check(&points[..7])?;
    let mut out = json!({
        "status": "ok",
        "coplanarity": r.coplanarity.iter().map(|(l, d)| json!({ "labels": l, "determinant": report::rational(d) })).collect::<Vec<_>>(),
        "no_four_coplanar": r.no_four_coplanar,
        "net_dimension": r.net_dimension,
        "hessian": r.hessian.as_ref().map(hessian_json),
        "verdict": r.verdict,
    });
    if points.len() == 8 && r.net_dimension == 3 {
        let net = net_from_heptad(&points[..7])?;
        let values: Vec<Value> = (0..3).map(|k| report::rational(&net.value(k, &points[7]))).collect();
        out["eighth_on_net"] = json!({ "values": values, "holds": net.contains(&points[7]) });
    }
    Ok(out)
}

fn theta_json(t: ThetaChar) -> Value {
    json!(t.to_string())
}

fn cmd_theta(action: &ThetaAction, ctx: &mut Ctx) -> Result<Rendered, Failure> {
    let model = build_model();
    let odd = odd_characteristics().len();
    let even = model.iter().filter(|t| t.parity() == Parity::Even).count();
    match action {
        ThetaAction::Count => {
            ctx.note(1, "enumerating Aronhold systems");
            let aronhold = aronhold_systems(ctx.config.parallel).len();
            Ok(Rendered::Value(json!({
                "status": "ok", "total": model.len(), "odd": odd, "even": even, "aronhold": aronhold,
            })))
        }
        ThetaAction::Aronhold { list } => {
            ctx.note(1, "enumerating Aronhold systems");
            let systems = aronhold_systems(ctx.config.parallel);
            let label = |s: &veronese_core::AronholdSystem| -> Vec<String> {
                s.pairs().iter().map(|(i, j)| format!("{i}{j}")).collect()
            };
            if *list && ctx.config.format == Format::Text {
                let lines: String = systems.iter().map(|s| format!("{}\n", label(s).join(" "))).collect();
                return Ok(Rendered::Lines(lines));
            }
            let histogram = even_histogram(&systems);
            let mut out = json!({
                "status": "ok",
                "count": systems.len(),
                "histogram": histogram.iter().map(|(t, n)| json!({ "even": theta_json(*t), "systems": n })).collect::<Vec<_>>(),
                "all_fibers_eight": histogram.len() == even && histogram.values().all(|&n| n == 8),
            });
            if *list {
                out["systems"] = systems
                    .iter()
                    .map(|s| json!({ "pairs": label(s), "even": theta_json(s.even_characteristic()) }))
                    .collect();
            }
            Ok(Rendered::Value(out))
        }
    }
}

fn cmd_s4(lambda: &str, ctx: &mut Ctx) -> Result<Value, Failure> {
    let lambda = match lambda.trim() {
        "symbolic" => Lambda::Symbolic,
        text => Lambda::Value(parse_rational(text)?),
    };
    ctx.note(1, "S4 family pipeline");
    let data = s4_family(lambda).map_err(|e| match e {
        veronese_core::ConeError::ExcludedLambda(_) => Failure::Math {
            kind: "excluded_lambda",
            message: e.to_string(),
            extra: Some(json!({ "excluded": ["-2", "2", "-1"] })),
        },
        other => Failure::math("cone", other),
    })?;
    Ok(s4_json(&data))
}

fn s4_json(d: &S4FamilyData) -> Value {
    let lambda = match &d.lambda {
        Lambda::Symbolic => json!("symbolic"),
        Lambda::Value(q) => report::rational(q),
    };
    let planes = d.planes.as_ref().map(|p| {
        json!({
            "gamma": report::rational(&p.gamma),
            "plus": [report::poly(&p.plus.0), report::poly(&p.plus.1)],
            "minus": [report::poly(&p.minus.0), report::poly(&p.minus.1)],
            "planes_on_cone": p.planes_on_cone,
            "w_quartic": report::poly(&p.w_quartic),
            "w_matches": p.w_matches,
        })
    });
    json!({
        "status": "ok",
        "lambda": lambda,
        "mu": report::poly(&d.mu),
        "g4": report::poly(&d.covariants.g4),
        "g6": report::poly(&d.covariants.g6),
        "cone": report::poly(&d.cone.f),
        "identity_defect": report::poly(&d.identity_defect),
        "identity_holds": d.identity_holds(),
        "planes": planes,
        "branch_quartic": report::poly(&d.branch_quartic),
        "branch_matches": d.branch_matches,
        "fermat_consistent": d.fermat_consistent,
    })
}
