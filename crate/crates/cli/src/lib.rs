//! The `cfw` command line. [`run`] is the whole program minus process I/O.

use std::io::Read;
use std::path::Path;

use cfw_core::arquiver::{self, ZQVertex};
use cfw_core::exchange;
use cfw_core::frieze::{Frieze, SymbolicFrieze};
use cfw_core::polygon::{self, Diagonal, Triangulation};
use cfw_core::quiver::is_finite_type;
use cfw_core::seed::Seed;
use cfw_server::{wire, ApiError, ServerConfig};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "cfw", version, about = "Frieze patterns, cluster mutation and the type A cluster category")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
    Dot,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct FormatArg {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Quiver mutation, canonical forms and finite-type detection.
    #[command(subcommand)]
    Quiver(QuiverCmd),
    /// Seed mutation.
    #[command(subcommand)]
    Seed(SeedCmd),
    /// Exchange graphs.
    #[command(subcommand)]
    Exchange(ExchangeCmd),
    /// Polygon triangulations.
    #[command(subcommand)]
    Polygon(PolygonCmd),
    /// Frieze patterns.
    #[command(subcommand)]
    Frieze(FriezeCmd),
    /// The type A cluster category.
    #[command(subcommand)]
    Category(CategoryCmd),
    /// Runs the JSON API.
    Serve {
        #[arg(long, default_value_t = cfw_server::DEFAULT_PORT)]
        port: u16,
        /// Overrides CF_ALLOW_ORIGIN.
        #[arg(long)]
        allow_origin: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum QuiverCmd {
    Mutate {
        /// Quiver JSON: a path, `-` for stdin, or inline JSON.
        #[arg(long)]
        quiver: String,
        /// Comma-separated mutation sequence, applied left to right.
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<usize>,
        #[command(flatten)]
        fmt: FormatArg,
    },
    Canon {
        #[arg(long)]
        quiver: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
    FiniteType {
        #[arg(long)]
        quiver: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum SeedCmd {
    Mutate {
        /// Seed JSON.
        #[arg(long, conflicts_with = "quiver", required_unless_present = "quiver")]
        seed: Option<String>,
        /// Start from the initial seed of this quiver.
        #[arg(long)]
        quiver: Option<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<usize>,
        #[command(flatten)]
        fmt: FormatArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum ExchangeCmd {
    Enumerate {
        #[arg(long)]
        quiver: String,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum PolygonCmd {
    /// All triangulations of the N-gon.
    Enumerate {
        #[arg(long = "N", short = 'N')]
        big_n: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
    Flip {
        #[arg(long)]
        triangulation: String,
        #[arg(long, value_parser = parse_pair)]
        diagonal: (i64, i64),
        #[command(flatten)]
        fmt: FormatArg,
    },
    Quiddity {
        #[arg(long)]
        triangulation: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum FriezeCmd {
    FromQuiddity {
        #[arg(value_delimiter = ',', required = true)]
        quiddity: Vec<u64>,
        #[command(flatten)]
        fmt: FormatArg,
        #[arg(long)]
        width: Option<usize>,
    },
    FromTriangulation {
        #[arg(long)]
        triangulation: String,
        #[command(flatten)]
        fmt: FormatArg,
        #[arg(long)]
        width: Option<usize>,
    },
    FromBolt {
        /// Bolt JSON `{"n", "cells"}`.
        #[arg(long)]
        bolt: String,
        /// Values on the bolt cells, top row first; all ones by default.
        #[arg(long, value_delimiter = ',')]
        values: Option<Vec<u64>>,
        #[command(flatten)]
        fmt: FormatArg,
        #[arg(long)]
        width: Option<usize>,
    },
    Symbolic {
        #[arg(long)]
        bolt: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// All friezes of height n.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Validates a frieze JSON.
    Check {
        #[arg(long)]
        frieze: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
    Render {
        #[arg(long)]
        frieze: String,
        #[arg(long)]
        width: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CategoryCmd {
    /// dim Hom(X, Y), between diagonals (`--x a,b`) in the cluster category
    /// or between vertices of ZA_n (`--x i:m`) in the mesh category.
    Hom {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// dim Ext^1(X, Y) and whether X, Y are compatible.
    Compat {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_pair)]
        x: (i64, i64),
        #[arg(long, value_parser = parse_pair)]
        y: (i64, i64),
        #[command(flatten)]
        fmt: FormatArg,
    },
    CtEnumerate {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
    CtFlip {
        #[arg(long)]
        triangulation: String,
        #[arg(long, value_parser = parse_pair)]
        diagonal: (i64, i64),
        #[command(flatten)]
        fmt: FormatArg,
    },
    FriezeFromCt {
        #[arg(long)]
        triangulation: String,
        #[command(flatten)]
        fmt: FormatArg,
        #[arg(long)]
        width: Option<usize>,
    },
    /// phi_X relative to the bolt; every X when `--diagonal` is absent.
    Phi {
        #[arg(long)]
        bolt: String,
        #[arg(long, value_parser = parse_pair)]
        diagonal: Option<(i64, i64)>,
        #[command(flatten)]
        fmt: FormatArg,
    },
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => Ok((
            a.parse().map_err(|_| format!("bad integer {a:?}"))?,
            b.parse().map_err(|_| format!("bad integer {b:?}"))?,
        )),
        _ => Err(format!("expected a,b, got {s:?}")),
    }
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn success(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn failure(e: &ApiError) -> Self {
        let code = if e.status.as_u16() == 400 { 2 } else { 1 };
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("{}\n", e.body()),
        }
    }
}

enum Failure {
    Api(ApiError),
    Usage(String),
}

impl From<ApiError> for Failure {
    fn from(e: ApiError) -> Self {
        Failure::Api(e)
    }
}

macro_rules! domain {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::Api(e.into())
            }
        }
    )*};
}
domain!(
    cfw_core::quiver::QuiverError,
    cfw_core::seed::SeedError,
    cfw_core::exchange::ExchangeError,
    cfw_core::polygon::PolygonError,
    cfw_core::frieze::FriezeError,
    cfw_core::arquiver::ArquiverError
);

type CmdResult = Result<String, Failure>;

struct Input<'a> {
    stdin: &'a mut dyn Read,
}

impl Input<'_> {
    /// `-` reads stdin, a leading `{` or `[` is inline JSON, anything else is
    /// a path.
    fn json(&mut self, src: &str) -> Result<Value, Failure> {
        let text = if src == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
            s
        } else if src.trim_start().starts_with(['{', '[']) {
            src.to_string()
        } else {
            std::fs::read_to_string(Path::new(src)).map_err(|e| Failure::Usage(format!("{src}: {e}")))?
        };
        serde_json::from_str(&text).map_err(|e| Failure::Api(ApiError::malformed(format!("{src}: {e}"))))
    }
}

fn json_out<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("library types serialize");
    s.push('\n');
    s
}

fn unsupported(fmt: Format) -> Failure {
    Failure::Usage(format!("--format {fmt:?} is not available for this command").to_lowercase())
}

fn emit<T: Serialize>(fmt: Format, v: &T, text: impl FnOnce() -> String) -> CmdResult {
    match fmt {
        Format::Json => Ok(json_out(v)),
        Format::Text => Ok(text()),
        Format::Dot => Err(unsupported(fmt)),
    }
}

fn diag(d: (i64, i64)) -> Result<Diagonal, Failure> {
    if d.0 < 1 || d.1 < 1 {
        return Err(Failure::Usage(format!("polygon vertices are 1-based, got ({}, {})", d.0, d.1)));
    }
    Ok((d.0 as usize, d.1 as usize))
}

fn frieze_out(f: &Frieze, fmt: Format, width: Option<usize>) -> CmdResult {
    emit(fmt, f, || f.render(width.unwrap_or(f.size())))
}

fn triangulation_text(t: &Triangulation) -> String {
    let ds: Vec<String> = t.diagonals().iter().map(|(a, b)| format!("{a}-{b}")).collect();
    format!("N={} {}\n", t.size(), ds.join(" "))
}

fn lines<I: IntoIterator<Item = String>>(it: I) -> String {
    it.into_iter().map(|l| l + "\n").collect()
}

fn quiver_cmd(cmd: QuiverCmd, input: &mut Input) -> CmdResult {
    match cmd {
        QuiverCmd::Mutate { quiver, k, fmt } => {
            let q = wire::quiver(&input.json(&quiver)?)?.mutate_path(&k)?;
            emit(fmt.format, &q, || format!("{}\n", q.describe()))
        }
        QuiverCmd::Canon { quiver, fmt } => {
            let (c, perm) = wire::quiver(&input.json(&quiver)?)?.canonical_form()?;
            let v = json!({ "quiver": c, "perm": perm });
            emit(fmt.format, &v, || format!("{}\nperm {:?}\n", c.describe(), perm))
        }
        QuiverCmd::FiniteType { quiver, fmt } => {
            let r = is_finite_type(&wire::quiver(&input.json(&quiver)?)?)?;
            emit(fmt.format, &r, || {
                let label = r.type_label().unwrap_or_else(|| "-".into());
                format!("finite: {}\ntype: {label}\npath: {:?}\n", r.finite, r.path)
            })
        }
    }
}

fn seed_text(s: &Seed) -> String {
    let mut out = format!("{}\n", s.quiver().describe());
    for (i, v) in s.vars().iter().enumerate() {
        out.push_str(&format!("x'{} = {v}\n", i + 1));
    }
    out
}

fn seed_cmd(cmd: SeedCmd, input: &mut Input) -> CmdResult {
    let SeedCmd::Mutate { seed, quiver, k, fmt } = cmd;
    let start = match (seed, quiver) {
        (Some(s), _) => wire::seed(&input.json(&s)?)?,
        (None, Some(q)) => Seed::initial(wire::quiver(&input.json(&q)?)?),
        (None, None) => return Err(Failure::Usage("--seed or --quiver is required".into())),
    };
    let s = start.mutate_path(&k)?;
    emit(fmt.format, &s, || seed_text(&s))
}

fn exchange_cmd(cmd: ExchangeCmd, input: &mut Input) -> CmdResult {
    let ExchangeCmd::Enumerate { quiver, budget, fmt } = cmd;
    let q = wire::quiver(&input.json(&quiver)?)?;
    let g = exchange::enumerate(&q, budget)?;
    match fmt.format {
        Format::Json => Ok(json_out(&g)),
        Format::Text => Ok(g.to_text()),
        Format::Dot => Ok(g.to_dot()),
    }
}

fn polygon_cmd(cmd: PolygonCmd, input: &mut Input) -> CmdResult {
    match cmd {
        PolygonCmd::Enumerate { big_n, fmt } => {
            let ts = polygon::enumerate(big_n)?;
            emit(fmt.format, &ts, || lines(ts.iter().map(|t| triangulation_text(t).trim_end().to_string())))
        }
        PolygonCmd::Flip { triangulation, diagonal, fmt } => {
            let t = wire::triangulation(&input.json(&triangulation)?)?;
            let f = t.flip(diag(diagonal)?)?;
            emit(fmt.format, &f, || triangulation_text(&f))
        }
        PolygonCmd::Quiddity { triangulation, fmt } => {
            let q = wire::triangulation(&input.json(&triangulation)?)?.quiddity();
            emit(fmt.format, &q, || {
                format!("{}\n", q.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
            })
        }
    }
}

fn symbolic_out(s: &SymbolicFrieze, fmt: Format) -> CmdResult {
    let cells = wire::symbolic_cells(s);
    let v = json!({ "n": s.n(), "cells": cells });
    emit(fmt, &v, || {
        let mut ds: Vec<_> = s.cells().collect();
        ds.sort_by_key(|(d, _)| **d);
        lines(ds.into_iter().map(|((a, b), p)| format!("m({a},{b}) = {p}")))
    })
}

fn frieze_cmd(cmd: FriezeCmd, input: &mut Input) -> CmdResult {
    match cmd {
        FriezeCmd::FromQuiddity { quiddity, fmt, width } => {
            frieze_out(&Frieze::from_quiddity(&quiddity)?, fmt.format, width)
        }
        FriezeCmd::FromTriangulation { triangulation, fmt, width } => {
            let t = wire::triangulation(&input.json(&triangulation)?)?;
            frieze_out(&Frieze::from_triangulation(&t)?, fmt.format, width)
        }
        FriezeCmd::FromBolt { bolt, values, fmt, width } => {
            let b = wire::bolt(&input.json(&bolt)?)?;
            let values = values.unwrap_or_else(|| vec![1; b.n()]);
            frieze_out(&Frieze::from_bolt(&b, &values)?, fmt.format, width)
        }
        FriezeCmd::Symbolic { bolt, fmt } => {
            let b = wire::bolt(&input.json(&bolt)?)?;
            symbolic_out(&SymbolicFrieze::from_bolt(&b)?, fmt.format)
        }
        FriezeCmd::Enumerate { n, fmt } => {
            let fs = Frieze::enumerate(n)?;
            emit(fmt.format, &fs, || {
                lines(fs.iter().map(|f| {
                    f.quiddity().iter().map(u64::to_string).collect::<Vec<_>>().join(",")
                }))
            })
        }
        FriezeCmd::Check { frieze, fmt } => {
            let v = input.json(&frieze)?;
            let f: Frieze = serde_json::from_value::<cfw_core::frieze::FriezeJson>(v)
                .map_err(|e| Failure::Api(ApiError::malformed(e)))
                .and_then(|j| Ok(Frieze::from_domain(j.n, &j.domain)?))?;
            f.validate()?;
            let t = f.to_triangulation()?;
            let out = json!({ "valid": true, "n": f.n(), "quiddity": f.quiddity(), "triangulation": t });
            emit(fmt.format, &out, || format!("valid frieze of height {}\n", f.n()))
        }
        FriezeCmd::Render { frieze, width } => {
            let v = input.json(&frieze)?;
            let j: cfw_core::frieze::FriezeJson =
                serde_json::from_value(v).map_err(|e| Failure::Api(ApiError::malformed(e)))?;
            let f = Frieze::from_domain(j.n, &j.domain)?;
            Ok(f.render(width.unwrap_or(f.size())))
        }
    }
}

enum Object {
    Diagonal(Diagonal),
    Vertex(ZQVertex),
}

fn parse_object(n: usize, s: &str) -> Result<Object, Failure> {
    if let Some((i, m)) = s.split_once(':') {
        let i: usize = i.trim().parse().map_err(|_| Failure::Usage(format!("bad vertex {s:?}")))?;
        let m: i64 = m.trim().parse().map_err(|_| Failure::Usage(format!("bad vertex {s:?}")))?;
        return Ok(Object::Vertex(ZQVertex::new(n, i, m)?));
    }
    let d = diag(parse_pair(s).map_err(Failure::Usage)?)?;
    Ok(Object::Diagonal(polygon::normalize_diagonal(n + 3, d)?))
}

fn category_cmd(cmd: CategoryCmd, input: &mut Input) -> CmdResult {
    match cmd {
        CategoryCmd::Hom { n, x, y, fmt } => {
            if n == 0 {
                return Err(Failure::Api(cfw_core::arquiver::ArquiverError::ZeroRank.into()));
            }
            let (dim, v) = match (parse_object(n, &x)?, parse_object(n, &y)?) {
                (Object::Diagonal(a), Object::Diagonal(b)) => {
                    let d = arquiver::hom_cluster(n, a, b)?;
                    (d, json!({ "n": n, "x": a, "y": b, "category": "cluster", "dim": d }))
                }
                (Object::Vertex(a), Object::Vertex(b)) => {
                    let lo = a.m.min(b.m);
                    let hi = a.m.max(b.m);
                    let w = arquiver::MeshWindow::new(n, lo, hi)?;
                    let d = arquiver::hom_dim_mesh(&w, a, b)?;
                    (d, json!({ "n": n, "x": a, "y": b, "category": "mesh", "dim": d }))
                }
                _ => return Err(Failure::Usage("--x and --y must both be diagonals or both vertices".into())),
            };
            emit(fmt.format, &v, || format!("{dim}\n"))
        }
        CategoryCmd::Compat { n, x, y, fmt } => {
            let (a, b) = (diag(x)?, diag(y)?);
            let ext = arquiver::ext_dim(n, a, b)?;
            let v = json!({ "n": n, "x": a, "y": b, "ext": ext, "compatible": ext == 0 });
            emit(fmt.format, &v, || format!("ext {ext}, compatible: {}\n", ext == 0))
        }
        CategoryCmd::CtEnumerate { n, fmt } => {
            let ts = arquiver::cluster_tilting_objects(n)?;
            emit(fmt.format, &ts, || lines(ts.iter().map(|t| triangulation_text(t).trim_end().to_string())))
        }
        CategoryCmd::CtFlip { triangulation, diagonal, fmt } => {
            let t = wire::triangulation(&input.json(&triangulation)?)?;
            let f = arquiver::mutate_ct(&t, diag(diagonal)?)?;
            emit(fmt.format, &f, || triangulation_text(&f))
        }
        CategoryCmd::FriezeFromCt { triangulation, fmt, width } => {
            let t = wire::triangulation(&input.json(&triangulation)?)?;
            frieze_out(&arquiver::frieze_from_ct(&t)?, fmt.format, width)
        }
        CategoryCmd::Phi { bolt, diagonal, fmt } => {
            let b = wire::bolt(&input.json(&bolt)?)?;
            match diagonal {
                Some(d) => {
                    let p = arquiver::cluster_variable_of(diag(d)?, &b)?;
                    emit(fmt.format, &json!({ "poly": p }), || format!("{p}\n"))
                }
                None => symbolic_out(&SymbolicFrieze::from_bolt(&b)?, fmt.format),
            }
        }
    }
}

fn serve(port: u16, allow_origin: Option<String>) -> CmdResult {
    let mut cfg = ServerConfig::from_env().map_err(Failure::Usage)?;
    if allow_origin.is_some() {
        cfg.allow_origin = allow_origin;
    }
    let rt = tokio::runtime::Runtime::new().map_err(|e| Failure::Usage(e.to_string()))?;
    rt.block_on(cfw_server::serve(port, cfg))
        .map_err(|e| Failure::Usage(format!("serve: {e}")))?;
    Ok(String::new())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::success(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let mut input = Input { stdin };
    let result = match cli.command {
        Command::Quiver(c) => quiver_cmd(c, &mut input),
        Command::Seed(c) => seed_cmd(c, &mut input),
        Command::Exchange(c) => exchange_cmd(c, &mut input),
        Command::Polygon(c) => polygon_cmd(c, &mut input),
        Command::Frieze(c) => frieze_cmd(c, &mut input),
        Command::Category(c) => category_cmd(c, &mut input),
        Command::Serve { port, allow_origin } => serve(port, allow_origin),
    };
    match result {
        Ok(out) => Outcome::success(out),
        Err(Failure::Api(e)) => Outcome::failure(&e),
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("{}\n", json!({ "error": "usage", "detail": msg })),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        let mut argv = vec!["cfw"];
        argv.extend_from_slice(args);
        run(argv, &mut std::io::empty())
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(go(&["frobnicate"]).code, 2);
        assert_eq!(go(&["frieze", "from-quiddity", "1,x,3"]).code, 2);
        let o = go(&["quiver", "mutate", "--quiver", "/no/such/file.json", "--k", "1"]);
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("\"usage\""));
    }

    #[test]
    fn domain_errors_exit_1_with_json() {
        let o = go(&["frieze", "from-quiddity", "2,3,2,2,2"]);
        assert_eq!(o.code, 1);
        let v: Value = serde_json::from_str(&o.stderr).unwrap();
        assert_eq!(v["error"], "does_not_close");
        assert!(v["detail"].is_string());
    }

    #[test]
    fn inline_json_and_help() {
        let o = go(&["quiver", "mutate", "--quiver", r#"{"n":2,"arrows":[[1,2,1]]}"#, "--k", "1"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v, json!({ "n": 2, "arrows": [[2, 1, 1]] }));
        assert_eq!(go(&["--help"]).code, 0);
    }

    #[test]
    fn stdin_input() {
        let mut stdin = r#"{"N":4,"diagonals":[[1,3]]}"#.as_bytes();
        let o = run(["cfw", "polygon", "quiddity", "--triangulation", "-", "--format", "text"], &mut stdin);
        assert_eq!(o.stdout, "2,1,2,1\n");
    }

    #[test]
    fn mesh_and_cluster_hom() {
        let o = go(&["category", "hom", "--n", "3", "--x", "1:0", "--y", "2:0", "--format", "text"]);
        assert_eq!(o.stdout, "1\n");
        let o = go(&["category", "hom", "--n", "3", "--x", "1,3", "--y", "1,3", "--format", "text"]);
        assert_eq!(o.stdout, "1\n");
        assert_eq!(go(&["category", "hom", "--n", "3", "--x", "1:0", "--y", "1,3"]).code, 2);
    }
}
