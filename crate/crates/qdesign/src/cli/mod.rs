//! Command-line front end.
//!
//! Every subcommand delegates to one library operation and renders the
//! result as text (default), CSV, JSON, or DOT. Exit codes: 0 on success,
//! 2 on the verdicts "not realizable" / "not admissible" (so shell
//! pipelines can branch on them), 1 on usage or guard errors.

mod render;

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::One;
use serde_json::json;

use crate::designcalc::{
    complement_params, dual_params, is_prime_power, lambda_ij, lambda_table,
    steiner3_bound_check, DesignParams,
};
use crate::fqoracle::{
    enumerate_subspaces, load_design, measure_alpha, save_design, spread_construct,
    trivial_design, DesignInstance, OracleLimits, SubspaceMatrix,
};
use crate::intersect::{
    enumerate_feasible, fano_derived_design, fano_distribution, fano_structure_graph,
    feasibility_caps, koehler_forms, koehler_forms_via_inverse, mendelsohn_system,
    nonexistence_check, scan_family, unique_vector, CertStage, Family, KoehlerForm, ScanOutcome,
    SearchLimits,
};
use crate::qpoly::{PolyStyle, QMode, QPolynomial, Scalar};
use crate::{Error, Result};

use render::{affine_expr, align_table, csv};

#[derive(Parser)]
#[command(name = "qdesign", disable_version_flag = true)]
#[command(about = "Exact intersection-number calculus for subspace designs over F_q")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Style {
    Factored,
    Expanded,
}

impl Style {
    fn poly(self) -> PolyStyle {
        match self {
            Style::Factored => PolyStyle::Factored,
            Style::Expanded => PolyStyle::Expanded,
        }
    }
}

#[derive(Args)]
struct RenderArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Polynomial rendering style (symbolic mode).
    #[arg(long, value_enum, default_value_t = Style::Factored)]
    style: Style,
}

#[derive(Args)]
struct ParamArgs {
    /// Design strength t.
    #[arg(short = 't', long = "t")]
    t: u32,
    /// Ambient dimension v.
    #[arg(short = 'v', long = "v")]
    v: u32,
    /// Block dimension k.
    #[arg(short = 'k', long = "k")]
    k: u32,
    /// Design index lambda: an integer, or a polynomial in q (symbolic mode).
    #[arg(short = 'l', long = "lambda", default_value = "1")]
    lambda: String,
    /// Evaluation mode: `sym`, or an integer q >= 1.
    #[arg(long = "q")]
    q: String,
}

#[derive(Args)]
struct OracleArgs {
    /// Field order q (a prime power <= 16).
    #[arg(long = "q")]
    q: u64,
    /// Ambient dimension v.
    #[arg(short = 'v', long = "v")]
    v: u32,
    /// Block dimension k.
    #[arg(short = 'k', long = "k")]
    k: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced indices lambda_0..lambda_t and admissibility.
    Params {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        r: RenderArgs,
    },
    /// The two-index table lambda_{i,j} (order >= 2 needs numeric mode).
    LambdaIj {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        r: RenderArgs,
        #[arg(long, default_value_t = 1)]
        order: u32,
    },
    /// Parameters of the dual design.
    Dual {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        r: RenderArgs,
    },
    /// Parameters of the complementary design.
    Complement {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        r: RenderArgs,
    },
    /// Koehler affine forms alpha_i = c_i + sum g_{i,j} alpha_j.
    Koehler {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        r: RenderArgs,
        /// Dimension of the reference subspace S.
        #[arg(short = 's', long = "s")]
        s: u32,
    },
    /// The Mendelsohn linear system for dimension s.
    Mendelsohn {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        r: RenderArgs,
        #[arg(short = 's', long = "s")]
        s: u32,
        #[arg(long, default_value_t = 1)]
        order: u32,
    },
    /// All feasible intersection vectors for dimension s (numeric mode).
    Enumerate {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        r: RenderArgs,
        #[arg(short = 's', long = "s")]
        s: u32,
        /// Search budget in partial assignments.
        #[arg(long, default_value_t = SearchLimits::default().max_nodes)]
        max_nodes: u64,
    },
    /// The unique intersection vector for s <= t or s >= v-t.
    Unique {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        r: RenderArgs,
        #[arg(short = 's', long = "s")]
        s: u32,
        #[arg(long, default_value_t = 1)]
        order: u32,
    },
    /// Nonexistence certificate pipeline (numeric mode).
    Nonexist {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        r: RenderArgs,
        #[arg(long, default_value_t = SearchLimits::default().max_nodes)]
        max_nodes: u64,
    },
    /// Scan a parameter family through the nonexistence pipeline.
    ScanFamily {
        /// `t4` or `t3`.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n_from: u64,
        #[arg(long)]
        n_to: u64,
        #[command(flatten)]
        r: RenderArgs,
        #[arg(long, default_value_t = SearchLimits::default().max_nodes)]
        max_nodes: u64,
    },
    /// Intersection vector distribution of a 2-(7,3,1)_q design.
    FanoTable {
        /// Evaluation mode: `sym`, or an integer q >= 1.
        #[arg(long = "q")]
        q: String,
        #[command(flatten)]
        r: RenderArgs,
    },
    /// Intersection structure graph of a 2-(7,3,1)_q design.
    FanoGraph {
        #[arg(long = "q")]
        q: String,
        #[command(flatten)]
        r: RenderArgs,
    },
    /// Derived 2-(7,3,q^4)_q design counting chain.
    FanoDerived {
        #[arg(long = "q")]
        q: String,
        #[command(flatten)]
        r: RenderArgs,
    },
    /// Construct a spread (1-(v,k,1)_q design, k | v) and emit its file.
    Spread {
        #[command(flatten)]
        o: OracleArgs,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construct the trivial design (all k-subspaces) and emit its file.
    Trivial {
        #[command(flatten)]
        o: OracleArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = OracleLimits::default().max_subspaces)]
        max_subspaces: u64,
    },
    /// Check the design property of a design file at strength t.
    Verify {
        #[arg(long)]
        design: PathBuf,
        #[arg(short = 't', long = "t")]
        t: u32,
        #[command(flatten)]
        r: RenderArgs,
        #[arg(long, default_value_t = OracleLimits::default().max_subspaces)]
        max_subspaces: u64,
    },
    /// Measure the intersection vectors of every S of dimension s.
    Measure {
        #[arg(long)]
        design: PathBuf,
        #[arg(short = 's', long = "s")]
        s: u32,
        #[arg(long, default_value_t = 1)]
        order: u32,
        #[command(flatten)]
        r: RenderArgs,
        #[arg(long, default_value_t = OracleLimits::default().max_subspaces)]
        max_subspaces: u64,
        #[arg(long, default_value_t = OracleLimits::default().max_tuples)]
        max_tuples: u64,
    },
    /// The C(v,3) >= (v/k) C(v-1,1) C(k,3) bound for 3-(v,k,1) designs.
    BoundSteiner3 {
        #[arg(short = 'v', long = "v")]
        v: u32,
        #[arg(short = 'k', long = "k")]
        k: u32,
        #[command(flatten)]
        r: RenderArgs,
    },
}

/// Runs the CLI against explicit argument and output streams; returns the
/// process exit code.
pub fn run<W: Write, E: Write>(args: Vec<String>, out: &mut W, err: &mut E) -> i32 {
    let all = std::iter::once("qdesign".to_string()).chain(args);
    let cli = match Cli::try_parse_from(all) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                0
            } else {
                let _ = write!(err, "{}", e.render());
                1
            };
            return code;
        }
    };
    match dispatch(cli.command, err) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            match e {
                Error::NotAdmissible => 2,
                _ => 1,
            }
        }
    }
}

fn parse_mode<E: Write>(q: &str, err: &mut E) -> Result<QMode> {
    if q == "sym" {
        return Ok(QMode::Symbolic);
    }
    let q0: u64 = q
        .parse()
        .map_err(|_| Error::Parse(format!("--q must be `sym` or an integer >= 1, got {q:?}")))?;
    if q0 == 0 {
        return Err(Error::Parse("--q must be >= 1".into()));
    }
    if q0 >= 2 && !is_prime_power(q0) {
        let _ = writeln!(err, "warning: q = {q0} is not a prime power");
    }
    Ok(QMode::Numeric(q0))
}

fn parse_params<E: Write>(p: &ParamArgs, err: &mut E) -> Result<DesignParams> {
    let mode = parse_mode(&p.q, err)?;
    let lambda = match mode {
        QMode::Symbolic => Scalar::Sym(QPolynomial::parse(&p.lambda)?),
        QMode::Numeric(_) => Scalar::Num(
            BigInt::from_str(&p.lambda)
                .map_err(|_| Error::Parse(format!("bad lambda {:?}", p.lambda)))?,
        ),
    };
    DesignParams::new(mode, p.t, p.v, p.k, lambda)
}

fn mode_note(mode: QMode) -> String {
    match mode {
        QMode::Symbolic => "[symbolic]".to_string(),
        QMode::Numeric(1) => "[q=1, ordinary block design]".to_string(),
        QMode::Numeric(q0) => format!("[q={q0}]"),
    }
}

type CmdOutput = (String, i32);

fn dispatch<E: Write>(cmd: Command, err: &mut E) -> Result<CmdOutput> {
    match cmd {
        Command::Params { p, r } => cmd_params(&p, &r, err),
        Command::LambdaIj { p, r, order } => cmd_lambda_ij(&p, &r, order, err),
        Command::Dual { p, r } => cmd_dual(&p, &r, err),
        Command::Complement { p, r } => cmd_complement(&p, &r, err),
        Command::Koehler { p, r, s } => cmd_koehler(&p, &r, s, err),
        Command::Mendelsohn { p, r, s, order } => cmd_mendelsohn(&p, &r, s, order, err),
        Command::Enumerate { p, r, s, max_nodes } => cmd_enumerate(&p, &r, s, max_nodes, err),
        Command::Unique { p, r, s, order } => cmd_unique(&p, &r, s, order, err),
        Command::Nonexist { p, r, max_nodes } => cmd_nonexist(&p, &r, max_nodes, err),
        Command::ScanFamily { family, n_from, n_to, r, max_nodes } => {
            cmd_scan_family(&family, n_from, n_to, &r, max_nodes)
        }
        Command::FanoTable { q, r } => cmd_fano_table(&q, &r, err),
        Command::FanoGraph { q, r } => cmd_fano_graph(&q, &r, err),
        Command::FanoDerived { q, r } => cmd_fano_derived(&q, &r, err),
        Command::Spread { o, out } => cmd_emit_design(spread_construct(o.q, o.v, o.k)?, out, err),
        Command::Trivial { o, out, max_subspaces } => {
            let limits = OracleLimits {
                max_subspaces,
                ..OracleLimits::default()
            };
            cmd_emit_design(trivial_design(o.q, o.v, o.k, &limits)?, out, err)
        }
        Command::Verify { design, t, r, max_subspaces } => {
            cmd_verify(&design, t, &r, max_subspaces)
        }
        Command::Measure { design, s, order, r, max_subspaces, max_tuples } => {
            cmd_measure(&design, s, order, &r, max_subspaces, max_tuples)
        }
        Command::BoundSteiner3 { v, k, r } => cmd_bound_steiner3(v, k, &r),
    }
}

fn alpha_headers(k: u32, sep: bool) -> Vec<String> {
    (0..=k)
        .map(|i| {
            if sep {
                format!("alpha_{i}")
            } else {
                format!("alpha{i}")
            }
        })
        .collect()
}

fn cmd_params<E: Write>(p: &ParamArgs, r: &RenderArgs, err: &mut E) -> Result<CmdOutput> {
    let params = parse_params(p, err)?;
    let table = lambda_table(&params);
    let style = r.style.poly();
    let verdict = if table.admissible {
        match params.mode {
            QMode::Symbolic => "admissible for all q".to_string(),
            QMode::Numeric(q0) => format!("admissible at q={q0}"),
        }
    } else {
        format!(
            "not admissible: lambda_{} is not integral",
            table.fail_witness.unwrap()
        )
    };
    let code = if table.admissible { 0 } else { 2 };
    let text = match r.format {
        Format::Text => {
            let mut s = format!("parameters: {} {}\n", params.describe(), mode_note(params.mode));
            for (i, value) in table.values.iter().enumerate() {
                let _ = writeln!(s, "lambda_{} = {}", i, value.render(style));
            }
            s.push_str(&verdict);
            s.push('\n');
            s
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = table
                .values
                .iter()
                .enumerate()
                .map(|(i, v)| vec![i.to_string(), v.render(style)])
                .collect();
            csv(&["i", "lambda"], &rows)
        }
        Format::Json => {
            let value = json!({
                "command": "params",
                "parameters": params.describe(),
                "lambda": table.values.iter().map(|v| v.render(style)).collect::<Vec<_>>(),
                "admissible": table.admissible,
                "fail_witness": table.fail_witness,
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Dot => return Err(Error::Parse("dot output is only for graph results".into())),
    };
    Ok((text, code))
}

fn cmd_lambda_ij<E: Write>(
    p: &ParamArgs,
    r: &RenderArgs,
    order: u32,
    err: &mut E,
) -> Result<CmdOutput> {
    let params = parse_params(p, err)?;
    let table = lambda_ij(&params, order)?;
    let style = r.style.poly();
    let text = match r.format {
        Format::Text => {
            let mut rows: Vec<Vec<String>> = Vec::new();
            let mut header = vec!["i\\j".to_string()];
            header.extend((0..=params.t).map(|j| j.to_string()));
            rows.push(header);
            for i in 0..=params.t {
                let mut row = vec![i.to_string()];
                for j in 0..=params.t - i {
                    row.push(table.get(i, j).unwrap().render(style));
                }
                rows.push(row);
            }
            format!(
                "lambda_{{i,j}} for {} (order {}):\n{}",
                params.describe(),
                order,
                align_table(&rows)
            )
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for ((i, j), value) in table.iter() {
                rows.push(vec![i.to_string(), j.to_string(), value.render(style)]);
            }
            csv(&["i", "j", "value"], &rows)
        }
        Format::Json => {
            let entries: Vec<_> = table
                .iter()
                .map(|((i, j), v)| json!({"i": i, "j": j, "value": v.render(style)}))
                .collect();
            let value = json!({
                "command": "lambda-ij",
                "parameters": params.describe(),
                "order": order,
                "entries": entries,
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Dot => return Err(Error::Parse("dot output is only for graph results".into())),
    };
    Ok((text, 0))
}

fn cmd_dual<E: Write>(p: &ParamArgs, r: &RenderArgs, err: &mut E) -> Result<CmdOutput> {
    let params = parse_params(p, err)?;
    let dual = dual_params(&params)?;
    simple_params_output("dual", &params, &dual, r)
}

fn cmd_complement<E: Write>(p: &ParamArgs, r: &RenderArgs, err: &mut E) -> Result<CmdOutput> {
    let params = parse_params(p, err)?;
    let comp = complement_params(&params)?;
    simple_params_output("complement", &params, &comp, r)
}

fn simple_params_output(
    name: &str,
    from: &DesignParams,
    to: &DesignParams,
    r: &RenderArgs,
) -> Result<CmdOutput> {
    let text = match r.format {
        Format::Text => format!("{} of {}: {}\n", name, from.describe(), to.describe()),
        Format::Csv => csv(&["input", name], &[vec![from.describe(), to.describe()]]),
        Format::Json => {
            let value = json!({
                "command": name,
                "input": from.describe(),
                "result": to.describe(),
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Dot => return Err(Error::Parse("dot output is only for graph results".into())),
    };
    Ok((text, 0))
}

fn koehler_equation(forms: &KoehlerForm, i: u32) -> String {
    let terms: Vec<(Scalar, String)> = (forms.t + 1..=forms.k)
        .map(|j| (forms.coeff(i, j).clone(), format!("alpha_{j}")))
        .collect();
    format!("alpha_{} = {}", i, affine_expr(forms.constant(i), &terms))
}

fn cmd_koehler<E: Write>(p: &ParamArgs, r: &RenderArgs, s: u32, err: &mut E) -> Result<CmdOutput> {
    let params = parse_params(p, err)?;
    let forms = koehler_forms(&params, s)?;
    // the closed formulas and the explicit P^{-1} multiplication are both
    // implemented and must agree
    let cross = koehler_forms_via_inverse(&params, s)?;
    assert_eq!(forms, cross, "Koehler routes disagree");
    let text = match r.format {
        Format::Text => {
            let mut out = format!("Koehler equations for {}, s = {}:\n", params.describe(), s);
            for i in 0..=forms.t {
                let _ = writeln!(out, "{}", koehler_equation(&forms, i));
            }
            out
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for i in 0..=forms.t {
                let mut row = vec![i.to_string(), forms.constant(i).render(PolyStyle::Expanded)];
                for j in forms.t + 1..=forms.k {
                    row.push(forms.coeff(i, j).render(PolyStyle::Expanded));
                }
                rows.push(row);
            }
            let mut header = vec!["i".to_string(), "constant".to_string()];
            header.extend((forms.t + 1..=forms.k).map(|j| format!("g_{j}")));
            let refs: Vec<&str> = header.iter().map(|h| h.as_str()).collect();
            csv(&refs, &rows)
        }
        Format::Json => {
            let eqs: Vec<_> = (0..=forms.t)
                .map(|i| {
                    json!({
                        "i": i,
                        "constant": forms.constant(i).render(PolyStyle::Expanded),
                        "coefficients": (forms.t + 1..=forms.k)
                            .map(|j| forms.coeff(i, j).render(PolyStyle::Expanded))
                            .collect::<Vec<_>>(),
                        "equation": koehler_equation(&forms, i),
                    })
                })
                .collect();
            let value = json!({
                "command": "koehler",
                "parameters": params.describe(),
                "s": s,
                "free_variables": (forms.t + 1..=forms.k).map(|j| format!("alpha_{j}")).collect::<Vec<_>>(),
                "equations": eqs,
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Dot => return Err(Error::Parse("dot output is only for graph results".into())),
    };
    Ok((text, 0))
}

fn cmd_mendelsohn<E: Write>(
    p: &ParamArgs,
    r: &RenderArgs,
    s: u32,
    order: u32,
    err: &mut E,
) -> Result<CmdOutput> {
    let params = parse_params(p, err)?;
    let sys = mendelsohn_system(&params, s, order)?;
    let text = match r.format {
        Format::Text => {
            let mut out = format!(
                "Mendelsohn system for {}, s = {} (order {}):\n",
                params.describe(),
                s,
                order
            );
            for (i, (row, rhs)) in sys.rows.iter().zip(&sys.rhs).enumerate() {
                let terms: Vec<(Scalar, String)> = row
                    .iter()
                    .enumerate()
                    .map(|(j, c)| (c.clone(), format!("alpha_{j}")))
                    .collect();
                let _ = writeln!(
                    out,
                    "row i={}: {} = {}",
                    i,
                    affine_expr(&params.mode.zero(), &terms),
                    rhs.render(PolyStyle::Expanded)
                );
            }
            out
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for (i, (row, rhs)) in sys.rows.iter().zip(&sys.rhs).enumerate() {
                let mut line = vec![i.to_string()];
                line.extend(row.iter().map(|c| c.render(PolyStyle::Expanded)));
                line.push(rhs.render(PolyStyle::Expanded));
                rows.push(line);
            }
            let mut header = vec!["i".to_string()];
            header.extend(alpha_headers(sys.k, false));
            header.push("rhs".to_string());
            let refs: Vec<&str> = header.iter().map(|h| h.as_str()).collect();
            csv(&refs, &rows)
        }
        Format::Json => {
            let value = json!({
                "command": "mendelsohn",
                "parameters": params.describe(),
                "s": s,
                "order": order,
                "rows": sys.rows.iter().map(|row| {
                    row.iter().map(|c| c.render(PolyStyle::Expanded)).collect::<Vec<_>>()
                }).collect::<Vec<_>>(),
                "rhs": sys.rhs.iter().map(|c| c.render(PolyStyle::Expanded)).collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Dot => return Err(Error::Parse("dot output is only for graph results".into())),
    };
    Ok((text, 0))
}

fn cmd_enumerate<E: Write>(
    p: &ParamArgs,
    r: &RenderArgs,
    s: u32,
    max_nodes: u64,
    err: &mut E,
) -> Result<CmdOutput> {
    let params = parse_params(p, err)?;
    let limits = SearchLimits { max_nodes };
    let found = enumerate_feasible(&params, s, &limits)?;
    let caps = feasibility_caps(&params, s)?;
    let lambda0 = lambda_table(&params).values[0].clone();
    let style = r.style.poly();
    let constraints = {
        let mut parts = vec![format!("sum(alpha) = lambda_0 = {}", lambda0.render(style))];
        parts.push(format!("Koehler values alpha_0..alpha_{} >= 0", params.t));
        for (j, cap) in &caps {
            parts.push(format!("alpha_{j} <= {cap}"));
        }
        parts.join("; ")
    };
    let text = match r.format {
        Format::Text => {
            let mut out = format!(
                "feasible intersection vectors for {}, s = {}:\n",
                params.describe(),
                s
            );
            for v in &found {
                let _ = writeln!(out, "{}", v.render(style));
            }
            let _ = writeln!(out, "found {} vectors", found.len());
            let _ = writeln!(out, "constraints: {}", constraints);
            out
        }
        Format::Csv => {
            let header: Vec<String> = alpha_headers(params.k, false);
            let refs: Vec<&str> = header.iter().map(|h| h.as_str()).collect();
            let rows: Vec<Vec<String>> = found
                .iter()
                .map(|v| v.alphas.iter().map(|a| a.render(style)).collect())
                .collect();
            csv(&refs, &rows)
        }
        Format::Json => {
            let value = json!({
                "command": "enumerate",
                "parameters": params.describe(),
                "s": s,
                "constraints": constraints,
                "vectors": found.iter().map(|v| {
                    v.alphas.iter().map(|a| a.render(style)).collect::<Vec<_>>()
                }).collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Dot => return Err(Error::Parse("dot output is only for graph results".into())),
    };
    Ok((text, 0))
}

fn cmd_unique<E: Write>(
    p: &ParamArgs,
    r: &RenderArgs,
    s: u32,
    order: u32,
    err: &mut E,
) -> Result<CmdOutput> {
    let params = parse_params(p, err)?;
    let vector = unique_vector(&params, s, order)?;
    let style = r.style.poly();
    let text = match r.format {
        Format::Text => format!(
            "unique intersection vector for {}, s = {} (order {}):\nalpha = {}\n",
            params.describe(),
            s,
            order,
            vector.render(style)
        ),
        Format::Csv => {
            let header = alpha_headers(params.k, false);
            let refs: Vec<&str> = header.iter().map(|h| h.as_str()).collect();
            csv(
                &refs,
                &[vector.alphas.iter().map(|a| a.render(style)).collect()],
            )
        }
        Format::Json => {
            let value = json!({
                "command": "unique",
                "parameters": params.describe(),
                "s": s,
                "order": order,
                "alpha": vector.alphas.iter().map(|a| a.render(style)).collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Dot => return Err(Error::Parse("dot output is only for graph results".into())),
    };
    Ok((text, 0))
}

fn cmd_nonexist<E: Write>(
    p: &ParamArgs,
    r: &RenderArgs,
    max_nodes: u64,
    err: &mut E,
) -> Result<CmdOutput> {
    let params = parse_params(p, err)?;
    let cert = nonexistence_check(&params, &SearchLimits { max_nodes })?;
    let style = r.style.poly();
    let stage = match cert.stage {
        CertStage::KoehlerNegativity => "koehler-negativity",
        CertStage::UniqueVectorPigeonhole => "unique-vector-pigeonhole",
        CertStage::Feasible => "feasible",
    };
    let verdict = if cert.realizable_ruled_out() {
        "admissible, but not realizable".to_string()
    } else {
        format!(
            "no conclusion ({} feasible block vectors)",
            cert.feasible_blocks.unwrap_or(0)
        )
    };
    let code = if cert.realizable_ruled_out() { 2 } else { 0 };
    let lambda_strs: Vec<String> = cert.lambda.values.iter().map(|v| v.render(style)).collect();
    let text = match r.format {
        Format::Text => {
            let mut out = format!("parameters: {}\n", params.describe());
            let _ = writeln!(out, "lambda: ({})", lambda_strs.join(", "));
            let _ = writeln!(out, "admissible: yes");
            let _ = writeln!(out, "stage: {}", stage);
            if let Some(w) = &cert.negativity {
                let _ = writeln!(
                    out,
                    "row i={}: alpha_{} <= c_{} - |g| = {} - {} = {} < 0 for a block",
                    w.index,
                    w.index,
                    w.index,
                    w.constant.render(style),
                    w.block_coeff.neg().render(style),
                    w.upper_bound.render(style)
                );
            }
            if let Some(v) = &cert.forced_vector {
                let _ = writeln!(out, "unique block vector: {}", v.render(style));
            }
            if cert.stage == CertStage::UniqueVectorPigeonhole {
                let v = cert.forced_vector.as_ref().unwrap();
                let lo = 3 * params.k as i64 - params.v as i64;
                let _ = writeln!(
                    out,
                    "alpha_0 = {} blocks avoid a block; inside a {}-dim space two \
                     {}-spaces meet in dimension >= {}, all forced to 0",
                    v.alphas[0].render(style),
                    params.v - params.k,
                    params.k,
                    lo
                );
            }
            let _ = writeln!(out, "verdict: {}", verdict);
            out
        }
        Format::Csv => csv(
            &["parameters", "admissible", "stage", "verdict"],
            &[vec![
                params.describe(),
                "yes".to_string(),
                stage.to_string(),
                verdict.clone(),
            ]],
        ),
        Format::Json => {
            let value = json!({
                "command": "nonexist",
                "parameters": params.describe(),
                "lambda": lambda_strs,
                "admissible": true,
                "stage": stage,
                "negativity": cert.negativity.as_ref().map(|w| json!({
                    "index": w.index,
                    "constant": w.constant.render(style),
                    "block_coefficient": w.block_coeff.render(style),
                    "upper_bound": w.upper_bound.render(style),
                })),
                "forced_vector": cert.forced_vector.as_ref().map(|v| {
                    v.alphas.iter().map(|a| a.render(style)).collect::<Vec<_>>()
                }),
                "verdict": verdict,
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Dot => return Err(Error::Parse("dot output is only for graph results".into())),
    };
    Ok((text, code))
}

fn cmd_scan_family(
    family: &str,
    n_from: u64,
    n_to: u64,
    r: &RenderArgs,
    max_nodes: u64,
) -> Result<CmdOutput> {
    let family: Family = family.parse()?;
    let entries = scan_family(family, n_from, n_to, &SearchLimits { max_nodes })?;
    let mut any_ruled_out = false;
    let mut rows: Vec<(u64, String, String, String, String)> = Vec::new();
    for e in &entries {
        match &e.outcome {
            ScanOutcome::Skipped(reason) => rows.push((
                e.n,
                "-".into(),
                "-".into(),
                "-".into(),
                format!("skipped: {reason}"),
            )),
            ScanOutcome::Checked(cert) => {
                let stage = match cert.stage {
                    CertStage::KoehlerNegativity => "koehler-negativity",
                    CertStage::UniqueVectorPigeonhole => "unique-vector-pigeonhole",
                    CertStage::Feasible => "feasible",
                };
                let realizable = if cert.realizable_ruled_out() {
                    any_ruled_out = true;
                    "no"
                } else {
                    "undecided"
                };
                rows.push((
                    e.n,
                    cert.params.describe(),
                    "yes".into(),
                    realizable.into(),
                    stage.into(),
                ));
            }
        }
    }
    let code = if any_ruled_out { 2 } else { 0 };
    let text = match r.format {
        Format::Text => {
            let mut table = vec![vec![
                "n".to_string(),
                "parameters".to_string(),
                "admissible".to_string(),
                "realizable".to_string(),
                "stage".to_string(),
            ]];
            for (n, params, adm, real, stage) in &rows {
                table.push(vec![
                    n.to_string(),
                    params.clone(),
                    adm.clone(),
                    real.clone(),
                    stage.clone(),
                ]);
            }
            format!(
                "family {} scan, n = {}..{}\n{}",
                family.name(),
                n_from,
                n_to,
                align_table(&table)
            )
        }
        Format::Csv => {
            let data: Vec<Vec<String>> = rows
                .iter()
                .map(|(n, p, a, re, st)| {
                    vec![n.to_string(), p.clone(), a.clone(), re.clone(), st.clone()]
                })
                .collect();
            csv(&["n", "parameters", "admissible", "realizable", "stage"], &data)
        }
        Format::Json => {
            let value = json!({
                "command": "scan-family",
                "family": family.name(),
                "entries": rows.iter().map(|(n, p, a, re, st)| json!({
                    "n": n, "parameters": p, "admissible": a, "realizable": re, "stage": st,
                })).collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Dot => return Err(Error::Parse("dot output is only for graph results".into())),
    };
    Ok((text, code))
}

fn cmd_fano_table<E: Write>(q: &str, r: &RenderArgs, err: &mut E) -> Result<CmdOutput> {
    let mode = parse_mode(q, err)?;
    let rows = fano_distribution(mode);
    let style = r.style.poly();
    let text = match r.format {
        Format::Text => {
            let mut table = vec![vec![
                "count".to_string(),
                "s".to_string(),
                "type".to_string(),
                "alpha_0".to_string(),
                "alpha_1".to_string(),
                "alpha_2".to_string(),
                "alpha_3".to_string(),
            ]];
            for row in &rows {
                let mut line = vec![
                    row.count.render(style),
                    row.s.to_string(),
                    row.type_label.clone(),
                ];
                line.extend(row.vector.alphas.iter().map(|a| a.render(style)));
                table.push(line);
            }
            align_table(&table)
        }
        Format::Csv => {
            let data: Vec<Vec<String>> = rows
                .iter()
                .map(|row| {
                    let mut line = vec![row.count.render(style), row.s.to_string()];
                    line.extend(row.vector.alphas.iter().map(|a| a.render(style)));
                    line
                })
                .collect();
            csv(&["count", "s", "alpha0", "alpha1", "alpha2", "alpha3"], &data)
        }
        Format::Json => {
            let value = json!({
                "command": "fano-table",
                "rows": rows.iter().map(|row| json!({
                    "count": row.count.render(style),
                    "s": row.s,
                    "type": row.type_label,
                    "alpha": row.vector.alphas.iter().map(|a| a.render(style)).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Dot => return Err(Error::Parse("dot output is only for graph results".into())),
    };
    Ok((text, 0))
}

fn cmd_fano_graph<E: Write>(q: &str, r: &RenderArgs, err: &mut E) -> Result<CmdOutput> {
    let mode = parse_mode(q, err)?;
    let graph = fano_structure_graph(mode);
    let style = r.style.poly();
    let text = match r.format {
        Format::Dot => graph.to_dot(style),
        Format::Text => {
            let mut out = String::from("nodes:\n");
            for n in &graph.nodes {
                let _ = writeln!(out, "  [{}] {}", n.type_label, n.render_label(style));
            }
            out.push_str("edges (lower -- upper: up/down):\n");
            for e in &graph.edges {
                let _ = writeln!(
                    out,
                    "  {} -- {}: {}/{}",
                    graph.nodes[e.lower].type_label,
                    graph.nodes[e.upper].type_label,
                    e.up.render(style),
                    e.down.render(style)
                );
            }
            out
        }
        Format::Json => {
            let value = json!({
                "command": "fano-graph",
                "nodes": graph.nodes.iter().map(|n| json!({
                    "type": n.type_label,
                    "s": n.s,
                    "count": n.count.render(style),
                    "alpha": n.vector.alphas.iter().map(|a| a.render(style)).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
                "edges": graph.edges.iter().map(|e| json!({
                    "lower": graph.nodes[e.lower].type_label,
                    "upper": graph.nodes[e.upper].type_label,
                    "up": e.up.render(style),
                    "down": e.down.render(style),
                })).collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Csv => {
            let data: Vec<Vec<String>> = graph
                .edges
                .iter()
                .map(|e| {
                    vec![
                        graph.nodes[e.lower].type_label.clone(),
                        graph.nodes[e.upper].type_label.clone(),
                        e.up.render(style),
                        e.down.render(style),
                    ]
                })
                .collect();
            csv(&["lower", "upper", "up", "down"], &data)
        }
    };
    Ok((text, 0))
}

fn cmd_fano_derived<E: Write>(q: &str, r: &RenderArgs, err: &mut E) -> Result<CmdOutput> {
    let mode = parse_mode(q, err)?;
    let d = fano_derived_design(mode);
    let style = r.style.poly();
    let trivial_lambda = mode.gauss(5, 1);
    let text = match r.format {
        Format::Text => {
            let mut out = String::from("derived design chain for 2-(7,3,1)_q:\n");
            let _ = writeln!(out, "blocks per 5-space: {}", d.blocks_per_5space.render(style));
            let _ = writeln!(
                out,
                "type 4_1 spaces per 5-space: {}",
                d.type41_per_5space.render(style)
            );
            let _ = writeln!(
                out,
                "type 4_0 spaces per 5-space: {}",
                d.type40_per_5space.render(style)
            );
            let _ = writeln!(out, "dual of the type 4_0 family: {}", d.derived.describe());
            let _ = writeln!(out, "complement pair (type 4_1): {}", d.complement_pair.describe());
            let _ = writeln!(
                out,
                "check: {} + ({}) = [5 1] = {}",
                d.derived.lambda.render(PolyStyle::Expanded),
                d.complement_pair.lambda.render(PolyStyle::Expanded),
                trivial_lambda.render(PolyStyle::Expanded)
            );
            out
        }
        Format::Json => {
            let value = json!({
                "command": "fano-derived",
                "blocks_per_5space": d.blocks_per_5space.render(style),
                "type41_per_5space": d.type41_per_5space.render(style),
                "type40_per_5space": d.type40_per_5space.render(style),
                "derived": d.derived.describe(),
                "complement_pair": d.complement_pair.describe(),
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Csv => csv(
            &["blocks_per_5space", "type41_per_5space", "type40_per_5space", "derived", "complement_pair"],
            &[vec![
                d.blocks_per_5space.render(style),
                d.type41_per_5space.render(style),
                d.type40_per_5space.render(style),
                d.derived.describe(),
                d.complement_pair.describe(),
            ]],
        ),
        Format::Dot => return Err(Error::Parse("dot output is only for graph results".into())),
    };
    Ok((text, 0))
}

fn cmd_emit_design<E: Write>(
    d: DesignInstance,
    out_path: Option<PathBuf>,
    err: &mut E,
) -> Result<CmdOutput> {
    match out_path {
        Some(path) => {
            let mut file = std::fs::File::create(&path)?;
            save_design(&d, &mut file)?;
            let _ = writeln!(err, "wrote {} blocks to {}", d.len(), path.display());
            Ok((String::new(), 0))
        }
        None => {
            let mut buf = Vec::new();
            save_design(&d, &mut buf)?;
            Ok((String::from_utf8(buf).expect("design files are ascii"), 0))
        }
    }
}

fn matrix_str(m: &SubspaceMatrix) -> String {
    if m.rows().is_empty() {
        return "(zero space)".to_string();
    }
    let rows: Vec<String> = m
        .rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| char::from_digit(x as u32, 16).expect("entries below 16"))
                .collect()
        })
        .collect();
    rows.join("|")
}

fn cmd_verify(design: &PathBuf, t: u32, r: &RenderArgs, max_subspaces: u64) -> Result<CmdOutput> {
    let d = load_design(std::io::BufReader::new(std::fs::File::open(design)?))?;
    let limits = OracleLimits {
        max_subspaces,
        ..OracleLimits::default()
    };
    let report = crate::fqoracle::verify_design(&d, t, &limits)?;
    let text = match r.format {
        Format::Text => {
            let mut out = format!(
                "design file: q={} v={} k={}, {} blocks\n",
                d.field.q,
                d.v,
                d.k,
                d.len()
            );
            match (&report.is_design, &report.lambda, &report.counterexample) {
                (true, Some(lambda), _) => {
                    let _ = writeln!(out, "{t}-design: yes (lambda = {lambda})");
                }
                (false, _, Some(c)) => {
                    let _ = writeln!(out, "{t}-design: no");
                    let _ = writeln!(
                        out,
                        "counterexample: {} lies in {} blocks, {} lies in {} blocks",
                        matrix_str(&c.0),
                        c.1,
                        matrix_str(&c.2),
                        c.3
                    );
                }
                _ => unreachable!("report is either a design with lambda or has a witness"),
            }
            out
        }
        Format::Json => {
            let value = json!({
                "command": "verify",
                "q": d.field.q, "v": d.v, "k": d.k, "blocks": d.len(),
                "t": t,
                "is_design": report.is_design,
                "lambda": report.lambda,
                "counterexample": report.counterexample.as_ref().map(|c| json!({
                    "subspace_a": matrix_str(&c.0), "count_a": c.1,
                    "subspace_b": matrix_str(&c.2), "count_b": c.3,
                })),
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Csv => csv(
            &["t", "is_design", "lambda"],
            &[vec![
                t.to_string(),
                report.is_design.to_string(),
                report.lambda.map_or("-".into(), |l| l.to_string()),
            ]],
        ),
        Format::Dot => return Err(Error::Parse("dot output is only for graph results".into())),
    };
    Ok((text, 0))
}

fn cmd_measure(
    design: &PathBuf,
    s: u32,
    order: u32,
    r: &RenderArgs,
    max_subspaces: u64,
    max_tuples: u64,
) -> Result<CmdOutput> {
    let d = load_design(std::io::BufReader::new(std::fs::File::open(design)?))?;
    let limits = OracleLimits {
        max_subspaces,
        max_tuples,
    };
    let mut groups: std::collections::BTreeMap<Vec<u64>, u64> = std::collections::BTreeMap::new();
    for sub in enumerate_subspaces(&d.field, d.v, s, &limits)? {
        let alpha = measure_alpha(&d, &sub, order, &limits)?;
        *groups.entry(alpha).or_insert(0) += 1;
    }
    let text = match r.format {
        Format::Text => {
            let mut out = format!(
                "measured alpha distribution for q={} v={} k={} ({} blocks), s = {}, order {}:\n",
                d.field.q,
                d.v,
                d.k,
                d.len(),
                s,
                order
            );
            for (alpha, count) in &groups {
                let rendered: Vec<String> = alpha.iter().map(|a| a.to_string()).collect();
                let _ = writeln!(out, "({}) x {}", rendered.join(", "), count);
            }
            out
        }
        Format::Csv => {
            let header: Vec<String> = std::iter::once("count".to_string())
                .chain(std::iter::once("s".to_string()))
                .chain(alpha_headers(d.k, false))
                .collect();
            let refs: Vec<&str> = header.iter().map(|h| h.as_str()).collect();
            let rows: Vec<Vec<String>> = groups
                .iter()
                .map(|(alpha, count)| {
                    let mut row = vec![count.to_string(), s.to_string()];
                    row.extend(alpha.iter().map(|a| a.to_string()));
                    row
                })
                .collect();
            csv(&refs, &rows)
        }
        Format::Json => {
            let value = json!({
                "command": "measure",
                "q": d.field.q, "v": d.v, "k": d.k, "blocks": d.len(),
                "s": s,
                "order": order,
                "distribution": groups.iter().map(|(alpha, count)| json!({
                    "alpha": alpha,
                    "count": count,
                })).collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Dot => return Err(Error::Parse("dot output is only for graph results".into())),
    };
    Ok((text, 0))
}

fn cmd_bound_steiner3(v: u32, k: u32, r: &RenderArgs) -> Result<CmdOutput> {
    let bound = steiner3_bound_check(v, k)?;
    let show = |x: &num_rational::BigRational| {
        if x.denom().is_one() {
            x.numer().to_string()
        } else {
            format!("{}/{}", x.numer(), x.denom())
        }
    };
    let code = if bound.holds { 0 } else { 2 };
    let text = match r.format {
        Format::Text => {
            let mut out = format!(
                "3-({v},{k},1) bound: C(v,3) >= (v/k)*C(v-1,1)*C(k,3)\nlhs = {}\nrhs = {}\n",
                show(&bound.lhs),
                show(&bound.rhs)
            );
            if bound.holds {
                out.push_str("holds\n");
            } else {
                out.push_str(&format!("violated: 3-({v},{k},1) is not realizable\n"));
            }
            out
        }
        Format::Json => {
            let value = json!({
                "command": "bound-steiner3",
                "v": v, "k": k,
                "lhs": show(&bound.lhs),
                "rhs": show(&bound.rhs),
                "holds": bound.holds,
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Csv => csv(
            &["v", "k", "lhs", "rhs", "holds"],
            &[vec![
                v.to_string(),
                k.to_string(),
                show(&bound.lhs),
                show(&bound.rhs),
                bound.holds.to_string(),
            ]],
        ),
        Format::Dot => return Err(Error::Parse("dot output is only for graph results".into())),
    };
    Ok((text, code))
}
