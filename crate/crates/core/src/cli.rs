//! Command-line front end: argument parsing, table rendering and exit codes.
//!
//! Every subcommand produces a [`Table`]; `--format` chooses between a single
//! JSON object `{config, rows}` and RFC 4180 CSV. Numbers are emitted as
//! strings in both formats so the two carry identical values.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::generators::{basis_action, norm_su11_sq, norm_su2_sq, norm_t_sq, norm_u_sq, Gen, TableLabel, TermRecord};
use crate::qarith::{format_float, EvalContext, Mode, Scalar, DEFAULT_DIGITS};
use crate::repspace::{
    gg_from_label, weights_up_to_level, BasisKind, BasisLabel, Signature, TBasisLabel, Truncation, UBasisLabel,
    Weight,
};
use crate::verify::{run_suite, Relation, SuiteConfig, DEFAULT_TOLERANCE};
use crate::weylracah::{qracah, weyl_block, weyl_via_racah, RacahArgs};

/// Exit status for a configuration or input error.
pub const EXIT_CONFIG: u8 = 2;
/// Exit status when a verification check fails.
pub const EXIT_CHECK_FAILED: u8 = 1;

#[derive(Parser, Debug)]
#[command(name = "uq21", version, about = "Positive discrete series of u_q(2,1)")]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// Lowest weight f1,f2,f3.
    #[arg(long, global = true, default_value = "4,2,-2")]
    pub sig: String,
    /// Deformation parameter: integer, a/b, or a decimal (decimals imply float mode).
    #[arg(long, global = true, default_value = "13/10")]
    pub q: String,
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Exact)]
    pub mode: ModeArg,
    /// Significant decimal digits for float values.
    #[arg(long, global = true, env = "QU21_PRECISION", default_value_t = DEFAULT_DIGITS)]
    pub precision: u32,
    #[arg(long, global = true, default_value_t = 4)]
    pub lmax: i64,
    #[arg(long, global = true, default_value_t = 4)]
    pub smax: i64,
    #[arg(long, global = true, default_value_t = 4)]
    pub depth: i64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    #[arg(long, global = true, value_enum, default_value_t = BasisArg::U)]
    pub basis: BasisArg,
    /// Write the table here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Basis labels with weights, squared norms and patterns.
    Basis,
    /// Nonzero matrix elements of one generator.
    Matrix {
        #[arg(long)]
        gen: String,
    },
    /// Weyl blocks, for one weight or every complete weight.
    Weyl {
        /// m1,m2,m3
        #[arg(long)]
        weight: Option<String>,
        /// Also evaluate both q-Racah expressions and their difference.
        #[arg(long)]
        via_racah: bool,
    },
    /// One q-Racah coefficient U(a b e d; c f).
    Racah {
        /// a,b,c,d,e,f
        #[arg(long, allow_hyphen_values = true)]
        args: String,
    },
    /// Run the verification suite.
    Verify {
        /// File of extra relations, one `name: expression` per line.
        #[arg(long)]
        relations: Option<PathBuf>,
        /// Flip the sign of a table entry such as `t.A13(s+1)`.
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeArg {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    U,
    T,
}

impl From<BasisArg> for BasisKind {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::U => BasisKind::U,
            BasisArg::T => BasisKind::T,
        }
    }
}

/// Validated settings shared by every subcommand.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub sig: Signature,
    pub ctx: EvalContext,
    pub trunc: Truncation,
    pub format: Format,
    pub tolerance: f64,
    pub basis: BasisKind,
}

impl RunConfig {
    pub fn from_args(a: &CommonArgs) -> Result<Self> {
        let sig: Signature = a.sig.parse()?;
        let mode = match a.mode {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Float => Mode::Float,
        };
        let ctx = EvalContext::parse(&a.q, mode, a.precision)?;
        if !(a.tolerance >= 0.0 && a.tolerance.is_finite()) {
            return Err(Error::InvalidParameter(format!("tolerance must be a finite nonnegative number, got {}", a.tolerance)));
        }
        Ok(RunConfig {
            sig,
            ctx,
            trunc: Truncation::new(a.lmax, a.smax, a.depth),
            format: a.format,
            tolerance: a.tolerance,
            basis: a.basis.into(),
        })
    }
}

#[derive(Serialize)]
struct ConfigRecord {
    command: &'static str,
    sig: String,
    q: String,
    mode: &'static str,
    precision: u32,
    lmax: i64,
    smax: i64,
    depth: i64,
    tolerance: f64,
    basis: String,
}

impl ConfigRecord {
    fn new(command: &'static str, cfg: &RunConfig) -> Self {
        ConfigRecord {
            command,
            sig: cfg.sig.to_string(),
            q: cfg.ctx.q_display(),
            mode: if cfg.ctx.is_exact() { "exact" } else { "float" },
            precision: cfg.ctx.digits(),
            lmax: cfg.trunc.l_max,
            smax: cfg.trunc.s_max,
            depth: cfg.trunc.depth,
            tolerance: cfg.tolerance,
            basis: cfg.basis.to_string(),
        }
    }
}

/// Rows of string cells under named columns.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("write to memory");
        for r in &self.rows {
            w.write_record(r).expect("write to memory");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 cells")
    }

    fn to_json<C: Serialize>(&self, config: &C) -> String {
        #[derive(Serialize)]
        struct Doc<'a, C> {
            config: &'a C,
            rows: Rows<'a>,
        }
        let mut s = serde_json::to_string_pretty(&Doc { config, rows: Rows(self) }).expect("serializable");
        s.push('\n');
        s
    }
}

struct Rows<'a>(&'a Table);
struct Row<'a>(&'a [String], &'a [String]);

impl Serialize for Rows<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.rows.len()))?;
        for r in &self.0.rows {
            seq.serialize_element(&Row(&self.0.columns, r))?;
        }
        seq.end()
    }
}

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0.iter().zip(self.1) {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

fn render(s: &Scalar, ctx: &EvalContext) -> String {
    s.render(ctx.digits())
}

fn weight_cells(w: &Weight) -> Vec<String> {
    vec![w.m1.to_string(), w.m2.to_string(), w.m3.to_string()]
}

fn label_columns<L: BasisLabel>(sig: &Signature) -> Vec<&'static str> {
    L::enumerate(sig, &Truncation::uniform(0)).first().map(|l| l.fields().iter().map(|f| f.0).collect()).unwrap_or_default()
}

fn label_cells<L: BasisLabel>(l: &L) -> Vec<String> {
    l.fields().into_iter().map(|f| f.1).collect()
}

pub fn cmd_basis(cfg: &RunConfig) -> Result<Table> {
    let (sig, ctx) = (&cfg.sig, &cfg.ctx);
    match cfg.basis {
        BasisKind::U => {
            let mut t = Table::new(&["k", "l", "U", "M_U", "m1", "m2", "m3", "level", "N2", "N2_spin", "pattern"]);
            for l in UBasisLabel::enumerate(sig, &cfg.trunc) {
                let mut row = label_cells(&l);
                row.extend(weight_cells(&l.weight(sig)?));
                row.push(l.level().to_string());
                row.push(render(&norm_u_sq(sig, l.k, l.l, ctx)?, ctx));
                row.push(render(&norm_su2_sq(l.u, l.m, ctx)?, ctx));
                row.push(gg_from_label(sig, &l)?.to_string());
                t.push(row);
            }
            Ok(t)
        }
        BasisKind::T => {
            let mut t = Table::new(&["s", "p", "T", "M", "m1", "m2", "m3", "level", "N2", "N2_spin"]);
            for l in TBasisLabel::enumerate(sig, &cfg.trunc) {
                let mut row = label_cells(&l);
                row.extend(weight_cells(&l.weight(sig)?));
                row.push(l.level().to_string());
                row.push(render(&norm_t_sq(sig, l.s, l.p, ctx)?, ctx));
                row.push(render(&norm_su11_sq(l.t, l.m, ctx)?, ctx));
                t.push(row);
            }
            Ok(t)
        }
    }
}

fn matrix_rows<L: TableLabel>(cfg: &RunConfig, gen: Gen) -> Result<Table> {
    let names = label_columns::<L>(&cfg.sig);
    let mut cols: Vec<String> = names.iter().map(|n| format!("src_{n}")).collect();
    cols.extend(names.iter().map(|n| format!("dst_{n}")));
    cols.extend(["entry", "sign", "qpower", "radicand", "value"].map(String::from));
    let mut t = Table { columns: cols, rows: Vec::new() };
    for src in L::enumerate(&cfg.sig, &cfg.trunc) {
        for term in basis_action(&cfg.sig, gen, &src, &cfg.ctx)? {
            let rec = TermRecord::new(&term.coeff, &cfg.ctx);
            let mut row = label_cells(&src);
            row.extend(label_cells(&term.target));
            row.push(term.entry.unwrap_or("diagonal").to_string());
            row.extend([rec.sign.to_string(), rec.qpower.to_string(), rec.radicand, rec.value]);
            t.push(row);
        }
    }
    Ok(t)
}

pub fn cmd_matrix(cfg: &RunConfig, gen: &str) -> Result<Table> {
    let gen: Gen = gen.parse()?;
    match cfg.basis {
        BasisKind::U => matrix_rows::<UBasisLabel>(cfg, gen),
        BasisKind::T => matrix_rows::<TBasisLabel>(cfg, gen),
    }
}

pub fn cmd_weyl(cfg: &RunConfig, weight: Option<&str>, via_racah: bool) -> Result<Table> {
    let (sig, ctx) = (&cfg.sig, &cfg.ctx);
    let weights = match weight {
        Some(w) => vec![w.parse::<Weight>()?],
        None => weights_up_to_level(sig, cfg.trunc.complete_level()),
    };
    let mut cols = vec!["m1", "m2", "m3", "k", "l", "U", "M_U", "s", "p", "T", "M", "value", "float"];
    if via_racah {
        cols.extend(["racah_args", "first", "second", "difference"]);
    }
    let mut t = Table::new(&cols);
    for w in &weights {
        let block = weyl_block(sig, w, ctx)?;
        for (i, u) in block.rows.iter().enumerate() {
            for (j, tl) in block.cols.iter().enumerate() {
                let e = &block.entries[i][j];
                let x = e.to_float(ctx);
                let mut row = weight_cells(w);
                row.extend(label_cells(u));
                row.extend(label_cells(tl));
                row.push(e.to_string());
                row.push(format_float(&x, ctx.digits()));
                if via_racah {
                    let v = weyl_via_racah(sig, u, tl, ctx)?;
                    let a = v.first.to_float(ctx);
                    let b = v.second.to_float(ctx);
                    let diff = rug::Float::with_val(ctx.prec(), &x - &a)
                        .abs()
                        .max(&rug::Float::with_val(ctx.prec(), &x - &b).abs());
                    row.push(v.args.to_string());
                    row.push(format_float(&a, ctx.digits()));
                    row.push(format_float(&b, ctx.digits()));
                    row.push(format!("{:.3e}", diff.to_f64()));
                }
                t.push(row);
            }
        }
    }
    Ok(t)
}

pub fn cmd_racah(cfg: &RunConfig, args: &str) -> Result<Table> {
    let args: RacahArgs = args.parse()?;
    let v = qracah(&args, &cfg.ctx);
    let mut t = Table::new(&["a", "b", "c", "d", "e", "f", "admissible", "value", "float"]);
    let mut row: Vec<String> = [args.a, args.b, args.c, args.d, args.e, args.f].iter().map(|h| h.to_string()).collect();
    row.push(args.is_admissible().to_string());
    row.push(v.to_string());
    row.push(format_float(&v.to_float(&cfg.ctx), cfg.ctx.digits()));
    t.push(row);
    Ok(t)
}

/// Runs the suite; the flag is true when every check passed.
pub fn cmd_verify(cfg: &RunConfig, relations: &[Relation], fault: Option<&str>) -> Result<(Table, bool)> {
    let mut suite = SuiteConfig::new(cfg.sig, cfg.trunc, cfg.ctx.clone());
    suite.tolerance = cfg.tolerance;
    suite.relations = relations.to_vec();
    if let Some(name) = fault {
        let kind = match name.split('.').next() {
            Some("u") => BasisKind::U,
            Some("t") => BasisKind::T,
            _ => return Err(Error::InvalidParameter(format!("fault entry {name:?} must start with u. or t."))),
        };
        suite.fault = Some((kind, name.to_string()));
    }
    let reports = run_suite(&suite)?;
    let mut t = Table::new(&["check", "status", "max_residual", "tolerance", "checked", "location", "note"]);
    for r in &reports {
        let status = match (r.passed, r.no_coverage) {
            (false, _) => "FAIL",
            (true, true) => "PASS (no coverage)",
            (true, false) => "PASS",
        };
        t.push(vec![
            r.name.clone(),
            status.to_string(),
            format!("{:.3e}", r.max_residual),
            format!("{:e}", r.tolerance),
            r.checked.to_string(),
            r.location.clone().unwrap_or_default(),
            r.note.clone().unwrap_or_default(),
        ]);
    }
    Ok((t, reports.iter().all(|r| r.passed)))
}

/// Result of one invocation: what to print and how to exit.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

fn failure(code: u8, msg: impl std::fmt::Display) -> Outcome {
    Outcome { code, stdout: String::new(), stderr: format!("error: {msg}\n") }
}

/// Parses `args` (program name first) and runs the command.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_CONFIG, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    run(&cli)
}

pub fn run(cli: &Cli) -> Outcome {
    let cfg = match RunConfig::from_args(&cli.common) {
        Ok(c) => c,
        Err(e) => return failure(EXIT_CONFIG, e),
    };
    let (name, result): (&'static str, Result<(Table, bool)>) = match &cli.command {
        Command::Basis => ("basis", cmd_basis(&cfg).map(|t| (t, true))),
        Command::Matrix { gen } => ("matrix", cmd_matrix(&cfg, gen).map(|t| (t, true))),
        Command::Weyl { weight, via_racah } => {
            ("weyl", cmd_weyl(&cfg, weight.as_deref(), *via_racah).map(|t| (t, true)))
        }
        Command::Racah { args } => ("racah", cmd_racah(&cfg, args).map(|t| (t, true))),
        Command::Verify { relations, inject_fault } => {
            let rels = match relations {
                Some(path) => match fs::read_to_string(path) {
                    Ok(src) => Relation::parse_list(&src),
                    Err(e) => Err(Error::InvalidParameter(format!("cannot read {}: {e}", path.display()))),
                },
                None => Ok(Vec::new()),
            };
            ("verify", rels.and_then(|r| cmd_verify(&cfg, &r, inject_fault.as_deref())))
        }
    };
    let (table, ok) = match result {
        Ok(x) => x,
        Err(e) => return failure(EXIT_CONFIG, e),
    };
    let text = match cfg.format {
        Format::Json => table.to_json(&ConfigRecord::new(name, &cfg)),
        Format::Csv => table.to_csv(),
    };
    let mut out = Outcome { code: if ok { 0 } else { EXIT_CHECK_FAILED }, ..Outcome::default() };
    if !ok {
        let failed = table.rows.iter().filter(|r| r[1] == "FAIL").count();
        out.stderr = format!("{failed} of {} checks failed\n", table.rows.len());
    }
    match &cli.common.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                return failure(EXIT_CONFIG, format!("cannot write {}: {e}", path.display()));
            }
        }
        None => out.stdout = text,
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        execute(std::iter::once("uq21").chain(args.iter().copied()))
    }

    #[test]
    fn basis_row_count() {
        let out = run_args(&["basis", "--sig", "4,2,-2", "--basis", "u", "--lmax", "1", "--format", "csv"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(out.stdout.lines().count(), 1 + 15);
    }

    #[test]
    fn invalid_signature_exits_2() {
        let out = run_args(&["basis", "--sig", "4,3,2"]);
        assert_eq!(out.code, EXIT_CONFIG);
        assert!(out.stderr.contains("f2 - f3 >= 2"), "{}", out.stderr);
    }

    #[test]
    fn bad_generator_exits_2() {
        assert_eq!(run_args(&["matrix", "--gen", "A14"]).code, EXIT_CONFIG);
    }

    #[test]
    fn racah_outside_triangle_is_zero() {
        let out = run_args(&["racah", "--args", "1,1,5,1,1,1", "--format", "csv"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.lines().nth(1).unwrap().ends_with(",false,0,0"), "{}", out.stdout);
    }

    #[test]
    fn json_rows_keep_column_order() {
        let mut t = Table::new(&["z", "a"]);
        t.push(vec!["1".into(), "2".into()]);
        let s = t.to_json(&serde_json::json!({}));
        assert!(s.find("\"z\"").unwrap() < s.find("\"a\"").unwrap());
    }

    #[test]
    fn csv_quotes_commas() {
        let mut t = Table::new(&["x"]);
        t.push(vec!["a,b".into()]);
        assert_eq!(t.to_csv(), "x\n\"a,b\"\n");
    }
}
