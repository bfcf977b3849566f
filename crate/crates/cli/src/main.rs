//! Command-line front door for the quantum zigzag Hochschild computations.
//!
//! Exit codes: 0 on success, 2 on a verification mismatch, 3 on a
//! configuration error.

mod cache;
mod names;
mod output;

use clap::{Parser, Subcommand, ValueEnum};
use zigzag_core::complexes::{
    closed_hc_dim, closed_hh_codim, closed_hh_dim, closed_rank_tau, Complexes,
};
use zigzag_core::report::VerifyReport;
use zigzag_core::suites;
use zigzag_core::{Field, QSpec, Scalar};

#[derive(Parser)]
#[command(
    name = "zigzag",
    about = "Exact Hochschild (co)homology, cup products, Gerstenhaber brackets and the BV \
             operator for the quantum zigzag algebras of type A~1",
    disable_help_subcommand = true
)]
struct Cli {
    /// Choice of q: generic | rational:p/r | zeta:s
    #[arg(long = "q", global = true, default_value = "generic")]
    q: String,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Path of the JSON-lines result cache
    #[arg(long, global = true)]
    cache: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Markdown,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate HH_m, HH^m, HC_m and rank tau_m against the closed forms
    Dims {
        /// Largest homological degree
        #[arg(long, default_value_t = 12)]
        max: usize,
    },
    /// Print the canonical cohomology basis in one degree
    Basis {
        /// Homological degree
        #[arg(long)]
        m: usize,
    },
    /// Cup product of two named classes
    Cup { x: String, y: String },
    /// Gerstenhaber bracket of two named classes
    Bracket { x: String, y: String },
    /// BV operator applied to a named class
    Bv { x: String },
    /// Run verification suites and emit a report
    Verify {
        /// Comma-separated suite names (default: all)
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        /// Degree window for the suites
        #[arg(long, default_value_t = 12)]
        max: usize,
        /// Also write the JSON report to this path
        #[arg(long)]
        report: Option<std::path::PathBuf>,
    },
}

pub const ALL_SUITES: &[&str] = &[
    "complex-laws",
    "dims",
    "ring",
    "cup",
    "homotopy",
    "chainmaps",
    "bv-tables",
    "oracle-crosscheck",
];

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help/version requests are not configuration errors
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                std::process::exit(0);
            }
            let _ = e.print();
            std::process::exit(3);
        }
    };
    let spec: QSpec = match cli.q.parse() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: invalid --q: {e}");
            std::process::exit(3);
        }
    };
    let code = match spec {
        QSpec::Generic => run(Field::generic(), &cli),
        QSpec::Rational(r) => run(Field::rational(r).expect("nonzero"), &cli),
        QSpec::RootOfUnity(s) => run(Field::cyclotomic(s).expect("positive order"), &cli),
    };
    std::process::exit(code);
}

fn run<K: Scalar>(field: Field<K>, cli: &Cli) -> i32 {
    match &cli.command {
        Command::Dims { max } => cmd_dims(field, *max, cli),
        Command::Basis { m } => cmd_basis(field, *m, cli),
        Command::Cup { x, y } => cmd_product(field, x, y, ProductKind::Cup, cli),
        Command::Bracket { x, y } => cmd_product(field, x, y, ProductKind::Bracket, cli),
        Command::Bv { x } => cmd_bv(field, x, cli),
        Command::Verify { suite, max, report } => cmd_verify(field, suite, *max, report, cli),
    }
}

struct DimsRow {
    m: usize,
    hh_dim: (usize, usize),
    hh_codim: (usize, usize),
    hc_dim: (usize, usize),
    rank_tau: (usize, usize),
    ok: bool,
}

fn cmd_dims<K: Scalar>(field: Field<K>, max: usize, cli: &Cli) -> i32 {
    let class = field.classify();
    let spec = field.spec().clone();
    let mut store = match cache::Store::open(cli.cache.as_deref(), &spec) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: cache: {e}");
            return 3;
        }
    };
    let mut ctx = Complexes::new(field);
    let mut rows = Vec::new();
    let mut all_ok = true;
    for m in 0..=max {
        let hh_dim = store.get_or("hh_dim", m, || ctx.hh_dim(m));
        let hh_codim = store.get_or("hh_codim", m, || ctx.hh_codim(m));
        let hc_dim = store.get_or("hc_dim", m, || ctx.hc_dim(m));
        let rank_tau = store.get_or("rank_tau", m, || ctx.rank_tau(m));
        let closed = (
            closed_hh_dim(class, m),
            closed_hh_codim(class, m),
            closed_hc_dim(class, m),
            closed_rank_tau(ctx.field.ord_q(), m),
        );
        let ok = hh_dim == closed.0
            && hh_codim == closed.1
            && hc_dim == closed.2
            && rank_tau == closed.3;
        all_ok &= ok;
        rows.push(DimsRow {
            m,
            hh_dim: (hh_dim, closed.0),
            hh_codim: (hh_codim, closed.1),
            hc_dim: (hc_dim, closed.2),
            rank_tau: (rank_tau, closed.3),
            ok,
        });
    }
    if let Err(e) = store.flush() {
        eprintln!("error: cache: {e}");
        return 3;
    }
    output::print_dims(&rows, cli.format, &spec);
    if all_ok {
        0
    } else {
        2
    }
}

/// Generous ceiling on degrees reachable from the command line; beyond it
/// the request is treated as a configuration error rather than grinding
/// through ever larger eliminations.
const MAX_CLI_DEGREE: usize = 48;

fn cmd_basis<K: Scalar>(field: Field<K>, m: usize, cli: &Cli) -> i32 {
    if m > MAX_CLI_DEGREE {
        eprintln!("error: degree {m} out of range (limit {MAX_CLI_DEGREE})");
        return 3;
    }
    let mut ctx = Complexes::new(field);
    let basis = ctx.hh_basis(m);
    let namer = names::Namer::new(&mut ctx);
    let mut lines = Vec::new();
    for (i, cls) in basis.iter().enumerate() {
        let named = namer
            .express(&mut ctx, cls)
            .map(|s| format!("  = {s}"))
            .unwrap_or_default();
        lines.push((format!("HH^{m} basis [{i}]"), cls.rep.render() + &named));
    }
    output::print_pairs(&lines, cli.format, &format!("dim HH^{m} = {}", basis.len()));
    0
}

enum ProductKind {
    Cup,
    Bracket,
}

fn cmd_product<K: Scalar>(
    field: Field<K>,
    x: &str,
    y: &str,
    kind: ProductKind,
    cli: &Cli,
) -> i32 {
    let mut ctx = Complexes::new(field.clone());
    let namer = names::Namer::new(&mut ctx);
    let (cx, cy) = match (namer.class_of_name(&mut ctx, x), namer.class_of_name(&mut ctx, y)) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            eprintln!(
                "error: unknown class name; available generators: {}",
                namer.generator_names().join(", ")
            );
            return 3;
        }
    };
    if cx.degree + cy.degree > MAX_CLI_DEGREE {
        eprintln!(
            "error: total degree {} out of range (limit {MAX_CLI_DEGREE})",
            cx.degree + cy.degree
        );
        return 3;
    }
    let (symbol, result) = match kind {
        ProductKind::Cup => {
            let r = zigzag_core::products::cup_classes(&mut ctx, &cx, &cy);
            ("cup", r)
        }
        ProductKind::Bracket => {
            let mut cmp = zigzag_core::bv::Comparison::new(field);
            let r = zigzag_core::bv::bracket(&mut ctx, &mut cmp, &cx, &cy);
            ("bracket", r)
        }
    };
    let named = namer
        .express(&mut ctx, &result)
        .map(|s| format!("  = {s}"))
        .unwrap_or_default();
    output::print_pairs(
        &[(
            format!("{symbol}({x}, {y})"),
            result.rep.render() + &named,
        )],
        cli.format,
        "",
    );
    0
}

fn cmd_bv<K: Scalar>(field: Field<K>, x: &str, cli: &Cli) -> i32 {
    let mut ctx = Complexes::new(field.clone());
    let namer = names::Namer::new(&mut ctx);
    let Some(cx) = namer.class_of_name(&mut ctx, x) else {
        eprintln!(
            "error: unknown class name; available generators: {}",
            namer.generator_names().join(", ")
        );
        return 3;
    };
    if cx.degree == 0 {
        eprintln!("error: the BV operator lowers degree; degree-0 classes map to zero");
        return 3;
    }
    let mut cmp = zigzag_core::bv::Comparison::new(field);
    let d = zigzag_core::bv::bv_delta(&mut ctx, &mut cmp, &cx).expect("positive degree");
    let named = namer
        .express(&mut ctx, &d)
        .map(|s| format!("  = {s}"))
        .unwrap_or_default();
    output::print_pairs(
        &[(format!("Delta({x})"), d.rep.render() + &named)],
        cli.format,
        "",
    );
    0
}

fn cmd_verify<K: Scalar>(
    field: Field<K>,
    selected: &[String],
    max: usize,
    report_path: &Option<std::path::PathBuf>,
    cli: &Cli,
) -> i32 {
    if max < 2 {
        eprintln!("error: --max must be at least 2 for the product suites");
        return 3;
    }
    let wanted: Vec<String> = if selected.is_empty() {
        ALL_SUITES.iter().map(|s| s.to_string()).collect()
    } else {
        selected.to_vec()
    };
    for name in &wanted {
        if !ALL_SUITES.contains(&name.as_str()) {
            eprintln!(
                "error: unknown suite {name:?}; available: {}",
                ALL_SUITES.join(", ")
            );
            return 3;
        }
    }
    let mut report = VerifyReport::new(field.spec().to_string());
    for name in &wanted {
        match name.as_str() {
            "complex-laws" => report.push(suites::suite_complex_laws(&field, max.min(20))),
            "dims" => {
                report.push(suites::suite_homology_dims(&field, max));
                report.push(suites::suite_cyclic_dims(&field, max));
                report.push(suites::suite_cohomology(&field, max.min(12)));
                report.push(suites::suite_rank_formulas(&field, max.min(20)));
            }
            "ring" => report.push(suites::suite_ring(&field, max.min(10), max.min(8))),
            "cup" => report.push(suites::suite_cup(&field, max.min(8))),
            "homotopy" => report.push(suites::suite_homotopy(&field, max.min(8), max.min(4))),
            "chainmaps" => {
                report.push(suites::suite_chainmaps(&field, max.min(6), max.min(5), max.min(5)))
            }
            "bv-tables" => {
                report.push(suites::suite_bv_tables(&field, max.min(5), max.min(8)));
                report.push(suites::suite_g_ideal(&field, max.min(8)));
            }
            "oracle-crosscheck" => report.push(suites::suite_oracle(&field, max.min(5))),
            _ => unreachable!(),
        }
    }
    if let Some(path) = report_path {
        match serde_json::to_string_pretty(&report) {
            Ok(text) => {
                if let Err(e) = std::fs::write(path, text) {
                    eprintln!("error: writing report: {e}");
                    return 3;
                }
            }
            Err(e) => {
                eprintln!("error: serializing report: {e}");
                return 3;
            }
        }
    }
    output::print_report(&report, cli.format);
    if report.pass {
        0
    } else {
        2
    }
}
