//! Command-line front end. [`run`] parses arguments, dispatches, and returns the exit code:
//! 0 success, 1 verification failure, 2 usage or input error, 3 internal invariant violation.

pub mod spec;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::fan::json::{diagram_text, DiagramJson, FanJson, SCHEMA_VERSION};
use crate::fan::svg::{diagram_svg, fan_svg};
use crate::fan::{boundary_diagram, standard_fan_with, BoundaryDiagram, DiagramEntry, Fan2D, SupportMethod};
use crate::kernel::Characteristic;
use crate::limits::{directional_limit, elementary_limit, ray_limits, BoxIdeal, DirectionalLimit};
use crate::orbit::{apply_family, choose_family, GroupFamily};
use crate::segre3::{coordinate_span, example_factors, hull3_faces, support_picture};
use crate::staircase::{measuring_sequence, Staircase};
use crate::verify::{Golden, Target, Verifier};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Auto,
    G41,
    G32,
    G51,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Probing,
    Enumeration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Plus,
    Minus,
}

/// Settings shared by every subcommand.
#[derive(Clone, Debug, Args)]
pub struct Config {
    /// Characteristic of the ground field: 0 or a prime.
    #[arg(long = "char", global = true, default_value_t = 0)]
    pub characteristic: u64,
    #[arg(long, global = true, value_enum, default_value_t = FamilyArg::Auto)]
    pub family: FamilyArg,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// How exponent supports are found.
    #[arg(long, global = true, value_enum, default_value_t = MethodArg::Probing)]
    pub method: MethodArg,
    /// Directory of golden files; overrides HILBFAN_GOLDEN.
    #[arg(long, global = true)]
    pub golden: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Write output here (atomically) instead of stdout.
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Parser)]
#[command(name = "hilbfan", version, about = "Orbits, flat limits and standard fans of monomial ideals in K[[x,y]]")]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Steps, heights, colength, measuring sequence and staircase of an ideal.
    Ideal { spec: String },
    /// Limit under an elementary substitution or along a direction of the two-parameter orbit.
    Limit {
        spec: String,
        /// e.g. "x->x+t*y^2"
        #[arg(long, conflicts_with = "dir")]
        sub: Option<String>,
        /// e.g. "1,0"
        #[arg(long, allow_hyphen_values = true, required_unless_present = "sub")]
        dir: Option<String>,
        /// On a ray, report the limit just to one side instead of the orbit point.
        #[arg(long, value_enum, requires = "dir")]
        side: Option<SideArg>,
    },
    /// Standard fan of one or more ideals.
    Fan {
        #[arg(required = true)]
        specs: Vec<String>,
    },
    /// Boundary diagram of a single ideal, from the (0,1) side down to the ray (1,2).
    Diagram { spec: String },
    /// Support picture of the three-parameter orbit of a product of factors.
    Support3 {
        /// Factor ideals; defaults to the five-factor example.
        specs: Vec<String>,
    },
    /// Run the claim harness.
    Verify {
        /// Every standard target.
        #[arg(long)]
        all: bool,
        /// Comma-separated targets: prop33, claim1..claim8, figure1, figure2, cor34, figure3.
        #[arg(long, value_delimiter = ',')]
        claims: Vec<String>,
        /// Largest power of (x,y^4) checked.
        #[arg(long, default_value_t = 6)]
        n: u32,
    },
    /// Re-render a fan or diagram JSON file as text or SVG.
    Render { file: PathBuf },
}

/// Rendered output of a command and its exit status.
pub struct Outcome {
    pub body: String,
    pub code: i32,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, code: EXIT_OK }
    }
}

/// Runs the CLI with `args` (including the program name), writing to `out` and `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    if let Some(t) = cli.config.threads {
        // a second call in the same process keeps the existing pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
    match execute(&cli) {
        Ok(o) => {
            let written = match &cli.config.output {
                Some(p) => write_atomically(p, &o.body),
                None => out.write_all(o.body.as_bytes()).map_err(Error::from),
            };
            match written {
                Ok(()) => o.code,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    EXIT_USAGE
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Kernel(crate::error::KernelError::NotPrime(_)) => EXIT_USAGE,
        Error::Invariant(_) | Error::Kernel(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

fn write_atomically(path: &Path, body: &str) -> Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().ok_or_else(|| Error::Domain("output path has no file name".into()))?;
    let tmp = dir.join(format!(".{}.tmp{}", name.to_string_lossy(), std::process::id()));
    std::fs::write(&tmp, body)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

fn characteristic(c: &Config) -> Result<Characteristic> {
    Ok(Characteristic::new(c.characteristic)?)
}

fn family(c: &Config, ideals: &[Staircase]) -> Result<GroupFamily> {
    match c.family {
        FamilyArg::Auto => choose_family(ideals),
        FamilyArg::G41 => Ok(GroupFamily::G41),
        FamilyArg::G32 => Ok(GroupFamily::G32),
        FamilyArg::G51 => Ok(GroupFamily::G51),
    }
}

fn json_text<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn no_svg(what: &str) -> Error {
    Error::Domain(format!("{what} has no SVG form"))
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Ideal { spec } => cmd_ideal(cfg, spec),
        Command::Limit { spec, sub, dir, side } => cmd_limit(cfg, spec, sub.as_deref(), dir.as_deref(), *side),
        Command::Fan { specs } => cmd_fan(cfg, specs),
        Command::Diagram { spec } => cmd_diagram(cfg, spec),
        Command::Support3 { specs } => cmd_support3(cfg, specs),
        Command::Verify { all, claims, n } => cmd_verify(cfg, *all, claims, *n),
        Command::Render { file } => cmd_render(cfg, file),
    }
}

/// JSON form of an ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub schema_version: u32,
    pub steps: Vec<u32>,
    pub heights: Vec<u32>,
    pub colength: u64,
    pub measuring_sequence: [u32; 2],
    pub generators: Vec<[u32; 2]>,
}

impl IdealJson {
    pub fn new(s: &Staircase) -> Result<Self> {
        let m = measuring_sequence(std::slice::from_ref(s))?;
        Ok(IdealJson {
            schema_version: SCHEMA_VERSION,
            steps: s.to_steps().0,
            heights: s.heights().to_vec(),
            colength: s.colength(),
            measuring_sequence: [m.a, m.b],
            generators: s.generators().into_iter().map(|(i, j)| [i, j]).collect(),
        })
    }
}

fn monomial_text(i: u32, j: u32) -> String {
    let part = |v: &str, e: u32| match e {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{e}")),
    };
    let parts: Vec<String> = [part("x", i), part("y", j)].into_iter().flatten().collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn ideal_text(s: &Staircase) -> Result<String> {
    let m = measuring_sequence(std::slice::from_ref(s))?;
    let gens: Vec<String> = s.generators().into_iter().map(|(i, j)| monomial_text(i, j)).collect();
    Ok(format!(
        "{}\ngenerators: {}\nheights: {:?}\ncolength: {}\nmeasuring sequence: {m}\n{}",
        s.to_steps(),
        gens.join(", "),
        s.heights(),
        s.colength(),
        s.ascii()
    ))
}

pub fn cmd_ideal(cfg: &Config, spec: &str) -> Result<Outcome> {
    let s = spec::parse_ideal(spec)?;
    Ok(Outcome::ok(match cfg.format {
        Format::Json => json_text(&IdealJson::new(&s)?)?,
        Format::Text => ideal_text(&s)?,
        Format::Svg => return Err(no_svg("an ideal")),
    }))
}

pub fn cmd_limit(
    cfg: &Config,
    spec: &str,
    sub: Option<&str>,
    dir: Option<&str>,
    side: Option<SideArg>,
) -> Result<Outcome> {
    let ch = characteristic(cfg)?;
    let s = spec::parse_ideal(spec)?;
    let (limit, detail) = if let Some(sub) = sub {
        let e = spec::parse_substitution(sub, ch)?;
        let lim = elementary_limit(&BoxIdeal::from_staircase(&s), e.var, &e.h, ch)?.to_staircase()?;
        (Some(lim), json!({ "substitution": sub }))
    } else {
        let d = spec::parse_direction(dir.unwrap_or_default())?;
        let fam = family(cfg, std::slice::from_ref(&s))?;
        let p = apply_family(&s, fam, ch)?;
        let info = json!({ "direction": [d.0, d.1], "family": fam.to_string() });
        match side {
            Some(side) => {
                let (plus, minus) = ray_limits(&p, d)?;
                (Some(if side == SideArg::Plus { plus } else { minus }), info)
            }
            None => match directional_limit(&p, d)? {
                DirectionalLimit::Monomial(m) => (Some(m), info),
                DirectionalLimit::Orbit(o) => {
                    let forms: Vec<String> = o.forms.iter().map(|f| f.to_string()).collect();
                    let body = json!({
                        "schema_version": SCHEMA_VERSION,
                        "source": s.to_steps(),
                        "path": info,
                        "monomial": false,
                        "ray": [o.ray.0, o.ray.1],
                        "forms": forms,
                        "sandwich_high": o.high.to_steps(),
                    });
                    return Ok(Outcome::ok(match cfg.format {
                        Format::Json => json_text(&body)?,
                        Format::Text => format!(
                            "orbit point on the ray ({},{}): {} + ({})\n",
                            o.ray.0,
                            o.ray.1,
                            o.high.to_steps(),
                            forms.join(", ")
                        ),
                        Format::Svg => return Err(no_svg("a limit")),
                    }));
                }
            },
        }
    };
    let lim = limit.expect("monomial limit");
    Ok(Outcome::ok(match cfg.format {
        Format::Json => json_text(&json!({
            "schema_version": SCHEMA_VERSION,
            "source": s.to_steps(),
            "path": detail,
            "monomial": true,
            "limit": IdealJson::new(&lim)?,
        }))?,
        Format::Text => ideal_text(&lim)?,
        Format::Svg => return Err(no_svg("a limit")),
    }))
}

fn build_fan(cfg: &Config, specs: &[String]) -> Result<Fan2D> {
    let ch = characteristic(cfg)?;
    let ideals: Vec<Staircase> = specs.iter().map(|s| spec::parse_ideal(s)).collect::<Result<_>>()?;
    let fam = match cfg.family {
        FamilyArg::Auto => None,
        _ => Some(family(cfg, &ideals)?),
    };
    let method = match cfg.method {
        MethodArg::Probing => SupportMethod::Probing,
        MethodArg::Enumeration => SupportMethod::Enumeration,
    };
    standard_fan_with(&ideals, fam, ch, method)
}

fn fan_text(f: &Fan2D) -> String {
    let mut out = format!("family {}, {} rays\n", f.family, f.rays.len());
    for c in &f.cones {
        let labels: Vec<String> = c.ideals.iter().map(|s| s.to_string()).collect();
        let edge = |r: Option<(i64, i64)>| r.map_or("-".to_string(), |r| format!("({},{})", r.0, r.1));
        out.push_str(&format!(
            "{} .. {}  {}  vertex ({},{})\n",
            edge(c.ray_cw),
            edge(c.ray_ccw),
            labels.join(" "),
            c.vertex.0,
            c.vertex.1
        ));
    }
    out
}

pub fn cmd_fan(cfg: &Config, specs: &[String]) -> Result<Outcome> {
    let f = build_fan(cfg, specs)?;
    Ok(Outcome::ok(match cfg.format {
        Format::Json => json_text(&FanJson::from(&f))?,
        Format::Text => fan_text(&f),
        Format::Svg => fan_svg(&f),
    }))
}

fn diagram_body(cfg: &Config, d: &BoundaryDiagram) -> Result<String> {
    Ok(match cfg.format {
        Format::Json => json_text(&DiagramJson::from(d))?,
        Format::Text => diagram_text(&d.entries) + "\n",
        Format::Svg => diagram_svg(d),
    })
}

pub fn cmd_diagram(cfg: &Config, spec: &str) -> Result<Outcome> {
    let f = build_fan(cfg, &[spec.to_string()])?;
    Ok(Outcome::ok(diagram_body(cfg, &boundary_diagram(&f)?)?))
}

pub fn cmd_support3(cfg: &Config, specs: &[String]) -> Result<Outcome> {
    let ch = characteristic(cfg)?;
    let factors = if specs.is_empty() {
        example_factors()
    } else {
        specs.iter().map(|s| spec::parse_ideal(s)).collect::<Result<_>>()?
    };
    let span = coordinate_span(&factors, ch)?;
    let pic = support_picture(&span)?;
    let points: Vec<_> = pic.points.iter().copied().collect();
    let facets = match hull3_faces(&points) {
        Ok(f) => f.len(),
        Err(Error::Degenerate(_)) => 0,
        Err(e) => return Err(e),
    };
    Ok(Outcome::ok(match cfg.format {
        Format::Json => json_text(&pic.to_json(facets))?,
        Format::Text => {
            let sporadic: Vec<String> = pic.sporadic.iter().map(|p| p.to_string()).collect();
            format!(
                "dimension {}\nmonomials in span {}\nsporadic generators {}\n  {}\nsupport points {}\nfacets {}\n",
                pic.dim,
                pic.in_span_count(),
                sporadic.len(),
                sporadic.join("\n  "),
                points.len(),
                facets
            )
        }
        Format::Svg => pic.to_svg(),
    }))
}

pub fn cmd_verify(cfg: &Config, all: bool, claims: &[String], n: u32) -> Result<Outcome> {
    let ch = characteristic(cfg)?;
    let mut targets: Vec<Target> = if all { Target::standard() } else { Vec::new() };
    for c in claims {
        let t: Target = c.parse()?;
        if !targets.contains(&t) {
            targets.push(t);
        }
    }
    if targets.is_empty() {
        return Err(Error::Domain("nothing to verify: pass --all or --claims".into()));
    }
    if n == 0 {
        return Err(Error::Domain("--n must be positive".into()));
    }
    let golden = match &cfg.golden {
        Some(d) => Golden::Dir(d.clone()),
        None => Golden::from_env(),
    };
    let report = Verifier::with_golden(ch, golden).run(&targets, n)?;
    let code = if report.all_passed() { EXIT_OK } else { EXIT_VERIFY_FAILED };
    let body = match cfg.format {
        Format::Json => json_text(&report)?,
        Format::Text => {
            let mut s = String::new();
            for r in &report.reports {
                let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                s.push_str(&format!("{:<5} {} {}\n", format!("{:?}", r.status).to_lowercase(), r.id, params.join(" ")));
                if let Some(w) = &r.witness {
                    s.push_str(&format!("      {}: computed {}, expected {}\n", w.what, w.computed, w.expected));
                }
            }
            s.push_str(&format!(
                "pass {} fail {} range {}\n",
                report.summary.pass, report.summary.fail, report.summary.range
            ));
            s
        }
        Format::Svg => return Err(no_svg("a verification report")),
    };
    Ok(Outcome { body, code })
}

pub fn cmd_render(cfg: &Config, file: &Path) -> Result<Outcome> {
    let text = std::fs::read_to_string(file)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    if value.get("cones").is_some() {
        let f = Fan2D::try_from(serde_json::from_value::<FanJson>(value)?)?;
        return Ok(Outcome::ok(match cfg.format {
            Format::Json => json_text(&FanJson::from(&f))?,
            Format::Text => fan_text(&f),
            Format::Svg => fan_svg(&f),
        }));
    }
    if value.get("entries").is_some() {
        let j: DiagramJson = serde_json::from_value(value)?;
        if j.schema_version != SCHEMA_VERSION {
            return Err(Error::Domain(format!("unknown diagram schema version {}", j.schema_version)));
        }
        let entries: Vec<DiagramEntry> = j.entries();
        let d = BoundaryDiagram { entries, above: j.above.as_ref().map(|a| Staircase::from_steps(&a.ideal)) };
        return Ok(Outcome::ok(diagram_body(cfg, &d)?));
    }
    Err(Error::Domain("file is neither a fan nor a diagram".into()))
}
