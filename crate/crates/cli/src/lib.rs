//! The `grirr` command line.
//!
//! [`run`] parses arguments, dispatches and returns the exit code together
//! with the buffered output, so the binary and the tests share one path.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 precondition violation.

use std::ffi::OsString;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use grirr_core::artinian::{index_of_reducibility_primary, socle_in};
use grirr_core::gradedfield::{format_matrix, graded_free_basis, parse_matrix, HomogeneousMatrix};
use grirr_core::harness::{
    reproduce_paper_examples, run_all_suites, theorem51_check, PointConfiguration,
};
use grirr_core::ideal::{eliminate, intersect, quotient, saturate, Ideal};
use grirr_core::monomial_decomp::{
    irreducible_decomposition, minimal_primes_squarefree, MonomialIdeal,
};
use grirr_core::parse::{
    format_grading, format_order, parse_generators, parse_grading, parse_order, parse_polynomial,
    parse_ring,
};
use grirr_core::ring::{GradingMap, MonomialOrder, Polynomial, RingSpec};
use grirr_core::scalar::Field;
use grirr_core::session::SessionFile;
use grirr_core::star::{is_graded, star};
use grirr_core::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_PRECONDITION: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "grirr",
    version,
    about = "Multigraded ideals, largest graded subideals and indices of reducibility"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Polynomial ring, e.g. `QQ[x,y]` or `GF(32003)[x,y,z]`
    #[arg(long, global = true)]
    ring: Option<String>,
    /// Integer weight matrix, e.g. `[[1,1]]`; defaults to the standard grading
    #[arg(long, global = true)]
    grading: Option<String>,
    /// Monomial order for printed bases: lex, grevlex or elim(k)
    #[arg(long, global = true, default_value = "lex")]
    order: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Session file whose declarations can be referenced as `@name`
    #[arg(long, global = true)]
    session: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Gröbner basis
    Gb { ideal: String },
    /// Ideal membership of a polynomial
    Member { poly: String, ideal: String },
    /// Intersection of two ideals
    Intersect { first: String, second: String },
    /// Ideal quotient (I : J)
    Quotient { ideal: String, by: String },
    /// Saturation (I : f^∞)
    Saturate { ideal: String, poly: String },
    /// Elimination of the listed variables
    Eliminate {
        ideal: String,
        /// Comma-separated variable names
        #[arg(long)]
        vars: String,
    },
    /// Largest graded subideal I*
    Star { ideal: String },
    /// Whether the ideal is graded
    Isgraded { ideal: String },
    /// Socle basis of R/I for an m-primary ideal
    Socle { ideal: String },
    /// Index of reducibility of an m-primary ideal
    Ir { ideal: String },
    /// Irreducible decomposition of a monomial ideal
    Decompose { ideal: String },
    /// Minimal primes of a squarefree monomial ideal
    Minprimes { ideal: String },
    /// Free-module report for a homogeneous matrix over a graded field
    Gfree { matrix: String },
    /// Compare ir(I) and ir(I*) for an ideal of points in the plane
    Points { points: String },
    /// Verification suites
    Verify {
        #[command(subcommand)]
        suite: Verify,
    },
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// Recompute every published value of the worked examples
    Paper,
    /// Seeded randomized property suites
    Random {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        cases: usize,
    },
}

/// Exit code and buffered output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line given by `args`, whose first element is the program name.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CliOutput {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok((code, out)) => CliOutput {
            code,
            stdout: out,
            stderr: String::new(),
        },
        Err(e) => CliOutput {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("grirr: {e}\n"),
        },
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Precondition(_) | Error::Dimension(_) => EXIT_PRECONDITION,
        Error::Usage(_) | Error::Parse { .. } | Error::Input(_) | Error::DivisionByZero => {
            EXIT_USAGE
        }
    }
}

struct Context {
    session: Option<SessionFile>,
    ring: Option<Arc<RingSpec>>,
    grading: Option<GradingMap>,
    order: MonomialOrder,
    format: Format,
}

impl Context {
    fn new(common: &Common) -> Result<Context, Error> {
        let session = match &common.session {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Usage(format!("cannot read session `{path}`: {e}")))?;
                Some(SessionFile::parse(&text)?)
            }
            None => None,
        };
        let ring = match &common.ring {
            Some(r) => Some(parse_ring(r)?),
            None => session.as_ref().and_then(|s| s.ring.clone()),
        };
        let grading = match (&common.grading, &ring) {
            (Some(g), Some(r)) => Some(parse_grading(g, r.nvars())?),
            (Some(_), None) => return Err(Error::Usage("--grading needs a ring".into())),
            (None, _) => session.as_ref().and_then(|s| s.grading.clone()),
        };
        Ok(Context {
            session,
            ring,
            grading,
            order: parse_order(&common.order)?,
            format: common.format,
        })
    }

    fn ring(&self) -> Result<&Arc<RingSpec>, Error> {
        self.ring.as_ref().ok_or_else(|| {
            Error::Usage("no ring given; pass --ring or declare one in the session".into())
        })
    }

    fn grading(&self) -> Result<GradingMap, Error> {
        let ring = self.ring()?;
        Ok(self
            .grading
            .clone()
            .unwrap_or_else(|| GradingMap::standard(ring.nvars())))
    }

    fn session_ref<'a>(
        &'a self,
        text: &'a str,
    ) -> Result<Option<(&'a SessionFile, &'a str)>, Error> {
        let Some(name) = text.trim().strip_prefix('@') else {
            return Ok(None);
        };
        let session = self
            .session
            .as_ref()
            .ok_or_else(|| Error::Usage(format!("`@{name}` needs --session")))?;
        Ok(Some((session, name)))
    }

    fn ideal(&self, text: &str) -> Result<Ideal, Error> {
        if let Some((session, name)) = self.session_ref(text)? {
            let ideal = session
                .ideal(name)
                .ok_or_else(|| Error::Usage(format!("no ideal named `{name}` in the session")))?;
            if let Some(ring) = &self.ring {
                if ring != ideal.ring() {
                    return Err(Error::Usage(format!(
                        "ideal `{name}` lives in {}, not {ring}",
                        ideal.ring()
                    )));
                }
            }
            return Ok(ideal.clone());
        }
        let ring = self.ring()?;
        Ideal::new(ring, parse_generators(text, ring)?)
    }

    fn points(&self, text: &str) -> Result<PointConfiguration, Error> {
        if let Some((session, name)) = self.session_ref(text)? {
            return session
                .point_configuration(name)
                .cloned()
                .ok_or_else(|| Error::Usage(format!("no points named `{name}` in the session")));
        }
        let field = self.ring.as_ref().map_or(Field::Rational, |r| r.field());
        PointConfiguration::parse(text, field)
    }

    fn matrix(&self, text: &str) -> Result<HomogeneousMatrix, Error> {
        if let Some((session, name)) = self.session_ref(text)? {
            return session
                .matrix(name)
                .cloned()
                .ok_or_else(|| Error::Usage(format!("no matrix named `{name}` in the session")));
        }
        parse_matrix(text)
    }

    fn basis(&self, ideal: &Ideal) -> Vec<String> {
        ideal
            .groebner_basis(self.order)
            .elements()
            .iter()
            .map(Polynomial::to_string)
            .collect()
    }

    fn basis_line(&self, ideal: &Ideal) -> String {
        let b = self.basis(ideal);
        if b.is_empty() {
            "0".into()
        } else {
            b.join(", ")
        }
    }

    fn ideal_record(&self, command: &str, ideal: &Ideal) -> (u8, String) {
        match self.format {
            Format::Text => (EXIT_OK, format!("{}\n", self.basis_line(ideal))),
            Format::Json => json_out(
                EXIT_OK,
                json!({
                    "command": command,
                    "order": format_order(self.order),
                    "basis": self.basis(ideal),
                }),
            ),
        }
    }

    fn bool_record(&self, command: &str, value: bool) -> (u8, String) {
        match self.format {
            Format::Text => (EXIT_OK, format!("{value}\n")),
            Format::Json => json_out(EXIT_OK, json!({ "command": command, "result": value })),
        }
    }
}

fn json_out(code: u8, value: Value) -> (u8, String) {
    (
        code,
        format!(
            "{}\n",
            serde_json::to_string_pretty(&value).expect("serializable")
        ),
    )
}

fn monomial_ideal(ideal: &Ideal) -> Result<MonomialIdeal, Error> {
    MonomialIdeal::from_ideal(ideal)
}

fn dispatch(cli: &Cli) -> Result<(u8, String), Error> {
    let ctx = Context::new(&cli.common)?;
    let text = ctx.format == Format::Text;
    match &cli.command {
        Command::Gb { ideal } => Ok(ctx.ideal_record("gb", &ctx.ideal(ideal)?)),
        Command::Member { poly, ideal } => {
            let i = ctx.ideal(ideal)?;
            let f = parse_polynomial(poly, i.ring())?;
            Ok(ctx.bool_record("member", i.contains(&f)))
        }
        Command::Intersect { first, second } => Ok(ctx.ideal_record(
            "intersect",
            &intersect(&ctx.ideal(first)?, &ctx.ideal(second)?)?,
        )),
        Command::Quotient { ideal, by } => {
            Ok(ctx.ideal_record("quotient", &quotient(&ctx.ideal(ideal)?, &ctx.ideal(by)?)?))
        }
        Command::Saturate { ideal, poly } => {
            let i = ctx.ideal(ideal)?;
            let f = parse_polynomial(poly, i.ring())?;
            Ok(ctx.ideal_record("saturate", &saturate(&i, &f)?))
        }
        Command::Eliminate { ideal, vars } => {
            let i = ctx.ideal(ideal)?;
            let mut indices = Vec::new();
            for v in vars.split(',').map(str::trim).filter(|v| !v.is_empty()) {
                indices.push(
                    i.ring()
                        .variable_index(v)
                        .ok_or_else(|| Error::Usage(format!("unknown variable `{v}`")))?,
                );
            }
            Ok(ctx.ideal_record("eliminate", &eliminate(&i, &indices)?))
        }
        Command::Star { ideal } => {
            let i = ctx.ideal(ideal)?;
            let w = ctx.grading()?;
            let result = star(&i, &w)?;
            if text {
                return Ok((EXIT_OK, format!("{}\n", ctx.basis_line(&result.star_ideal))));
            }
            let witnesses: Vec<Value> = result
                .witnesses
                .iter()
                .map(|w| json!({ "element": w.element.to_string(), "degree": w.degree }))
                .collect();
            Ok(json_out(
                EXIT_OK,
                json!({
                    "command": "star",
                    "grading": format_grading(&w),
                    "order": format_order(ctx.order),
                    "basis": ctx.basis(&result.star_ideal),
                    "witnesses": witnesses,
                }),
            ))
        }
        Command::Isgraded { ideal } => {
            let i = ctx.ideal(ideal)?;
            Ok(ctx.bool_record("isgraded", is_graded(&i, &ctx.grading()?)?))
        }
        Command::Socle { ideal } => {
            let i = ctx.ideal(ideal)?;
            let basis = socle_in(&i, ctx.order)?;
            let elements: Vec<String> = basis
                .elements
                .iter()
                .map(|e| e.with_order(ctx.order).to_string())
                .collect();
            if text {
                let mut out = format!("rank {}\n", basis.rank());
                for e in &elements {
                    out.push_str(e);
                    out.push('\n');
                }
                return Ok((EXIT_OK, out));
            }
            Ok(json_out(
                EXIT_OK,
                json!({ "command": "socle", "rank": basis.rank(), "elements": elements }),
            ))
        }
        Command::Ir { ideal } => {
            let ir = index_of_reducibility_primary(&ctx.ideal(ideal)?)?;
            if text {
                return Ok((EXIT_OK, format!("{ir}\n")));
            }
            Ok(json_out(EXIT_OK, json!({ "command": "ir", "result": ir })))
        }
        Command::Decompose { ideal } => {
            let i = ctx.ideal(ideal)?;
            let ring = i.ring().clone();
            let decomposition = irreducible_decomposition(&monomial_ideal(&i)?);
            let components: Vec<String> = decomposition
                .components
                .iter()
                .map(|c| c.display(&ring).to_string())
                .collect();
            if text {
                let mut out = format!("{} components\n", components.len());
                for c in &components {
                    out.push_str(c);
                    out.push('\n');
                }
                return Ok((EXIT_OK, out));
            }
            Ok(json_out(
                EXIT_OK,
                json!({ "command": "decompose", "components": components }),
            ))
        }
        Command::Minprimes { ideal } => {
            let i = ctx.ideal(ideal)?;
            let ring = i.ring().clone();
            let primes: Vec<String> = minimal_primes_squarefree(&monomial_ideal(&i)?)?
                .iter()
                .map(|p| {
                    let names: Vec<&str> =
                        p.iter().map(|&v| ring.variables()[v].as_str()).collect();
                    format!("({})", names.join(", "))
                })
                .collect();
            if text {
                return Ok((EXIT_OK, primes.iter().map(|p| format!("{p}\n")).collect()));
            }
            Ok(json_out(
                EXIT_OK,
                json!({ "command": "minprimes", "primes": primes }),
            ))
        }
        Command::Gfree { matrix } => gfree(&ctx, &ctx.matrix(matrix)?),
        Command::Points { points } => points_check(&ctx, &ctx.points(points)?),
        Command::Verify {
            suite: Verify::Paper,
        } => {
            let report = reproduce_paper_examples()?;
            let code = if report.all_pass() {
                EXIT_OK
            } else {
                EXIT_VERIFY
            };
            if text {
                return Ok((code, format!("{report}\n")));
            }
            Ok(json_out(
                code,
                json!({
                    "command": "verify paper",
                    "pass": report.all_pass(),
                    "records": serde_json::to_value(&report.records).expect("serializable"),
                }),
            ))
        }
        Command::Verify {
            suite: Verify::Random { seed, cases },
        } => {
            let reports = run_all_suites(*seed, *cases);
            let pass = reports.iter().all(|r| r.passed());
            let code = if pass { EXIT_OK } else { EXIT_VERIFY };
            if text {
                let lines: String = reports.iter().map(|r| format!("{r}\n")).collect();
                return Ok((code, lines));
            }
            Ok(json_out(
                code,
                json!({
                    "command": "verify random",
                    "seed": seed,
                    "cases": cases,
                    "pass": pass,
                    "suites": serde_json::to_value(&reports).expect("serializable"),
                }),
            ))
        }
    }
}

fn degree_text(d: &[i64]) -> String {
    format!(
        "({})",
        d.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
    )
}

fn gfree(ctx: &Context, a: &HomogeneousMatrix) -> Result<(u8, String), Error> {
    let rep = graded_free_basis(a)?;
    let cokernel: Vec<String> = rep
        .cokernel_degrees
        .iter()
        .map(|d| degree_text(d))
        .collect();
    let kernel: Vec<String> = rep
        .kernel_basis
        .iter()
        .map(|k| degree_text(&k.degree))
        .collect();
    let pivots: Vec<String> = rep
        .pivots
        .iter()
        .map(|p| format!("({},{}) {} inverse {}", p.row, p.col, p.pivot, p.inverse))
        .collect();
    if ctx.format == Format::Text {
        let mut out = String::new();
        out.push_str(&format!(
            "matrix {}x{} over {}\n",
            rep.rows, rep.cols, a.presentation.base_field
        ));
        out.push_str(&format!(
            "support lattice {} (rank {})\n",
            a.presentation.support,
            a.presentation.support.rank()
        ));
        out.push_str(&format!("rank {}\n", rep.rank));
        out.push_str(&format!(
            "cokernel free of rank {}: generators in degrees {}\n",
            rep.cokernel_rank(),
            list_or_none(&cokernel)
        ));
        out.push_str(&format!(
            "kernel free of rank {}: generators in degrees {}\n",
            rep.kernel_rank(),
            list_or_none(&kernel)
        ));
        for p in &pivots {
            out.push_str(&format!("pivot {p}\n"));
        }
        out.push_str(&format!("all pivots units: {}\n", rep.pivots_are_units()));
        return Ok((EXIT_OK, out));
    }
    Ok(json_out(
        EXIT_OK,
        json!({
            "command": "gfree",
            "matrix": format_matrix(a),
            "rank": rep.rank,
            "cokernel_rank": rep.cokernel_rank(),
            "cokernel_degrees": rep.cokernel_degrees,
            "kernel_rank": rep.kernel_rank(),
            "kernel_degrees": rep.kernel_basis.iter().map(|k| k.degree.clone()).collect::<Vec<_>>(),
            "pivots": pivots,
            "pivots_are_units": rep.pivots_are_units(),
        }),
    ))
}

fn list_or_none(items: &[String]) -> String {
    if items.is_empty() {
        "none".into()
    } else {
        items.join(" ")
    }
}

fn points_check(ctx: &Context, config: &PointConfiguration) -> Result<(u8, String), Error> {
    let rep = theorem51_check(config)?;
    let code = if rep.consistent() {
        EXIT_OK
    } else {
        EXIT_VERIFY
    };
    let images: Vec<(String, String)> = rep
        .details
        .iter()
        .map(|d| {
            (
                format!("({}, {})", d.point.0, d.point.1),
                ctx.basis_line(&d.star),
            )
        })
        .collect();
    if ctx.format == Format::Text {
        let mut out = String::new();
        out.push_str(&format!("points {config}\n"));
        out.push_str(&format!("I = {}\n", ctx.basis_line(&rep.ideal)));
        out.push_str(&format!("I* = {}\n", ctx.basis_line(&rep.star)));
        out.push_str(&format!("ir(I) = {}\n", rep.ir_i));
        out.push_str(&format!("ir(I*) = {}\n", rep.ir_istar));
        out.push_str(&format!("bijective = {}\n", rep.bijective));
        for (p, s) in &images {
            out.push_str(&format!("star {p} = {s}\n"));
        }
        out.push_str(&format!(
            "I* matches the line prediction: {}\n",
            rep.star_matches_prediction
        ));
        out.push_str(&format!(
            "star commutes with intersection: {}\n",
            rep.star_commutes
        ));
        return Ok((code, out));
    }
    Ok(json_out(
        code,
        json!({
            "command": "points",
            "points": config.to_string(),
            "ideal": ctx.basis(&rep.ideal),
            "star": ctx.basis(&rep.star),
            "ir_I": rep.ir_i,
            "ir_Istar": rep.ir_istar,
            "bijective": rep.bijective,
            "components": images.iter().map(|(p, s)| json!({ "point": p, "star": s })).collect::<Vec<_>>(),
            "star_matches_prediction": rep.star_matches_prediction,
            "star_commutes": rep.star_commutes,
            "consistent": rep.consistent(),
        }),
    ))
}
