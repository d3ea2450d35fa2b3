use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nkoszul::algebra::{manin_product, ManinKind};
use nkoszul::field::{with_modulus, Field, Fp, Rational};
use nkoszul::yoneda::YonedaAlgebra;
use nkoszul::{Error, Result};
use nkoszul_cli::render::render_text;
use nkoszul_cli::{document_of, parse_input, run_report, Analysis, Budgets, FieldSpec, InputDocument};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "nkoszul", version, about = "Koszul, Gorenstein and Hochschild analysis of N-homogeneous algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Largest internal degree of A used by any analysis.
    #[arg(long, env = "NKOSZUL_MAX_DEGREE", default_value_t = 8)]
    max_degree: usize,
    /// Override the input field: `q` or `fp:P`.
    #[arg(long)]
    field: Option<String>,
    /// Largest homological degree of the bar-complex oracle.
    #[arg(long, default_value_t = 4)]
    bar_max_i: usize,
    /// Lattice closure budget for the distributivity check.
    #[arg(long, default_value_t = 20000)]
    lattice_budget: usize,
    /// Largest slice dimension built by any single step; degrees beyond it are dropped and the bound reported.
    #[arg(long, default_value_t = 500_000)]
    max_slice: usize,
    /// Largest total size of the bar complex in one internal degree.
    #[arg(long, default_value_t = 6_000_000)]
    bar_total: usize,
    /// Write the JSON report to this file.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Print the JSON report instead of the text summary.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline (or the subset given by --analyses).
    Analyze {
        input: PathBuf,
        /// Comma-separated subset of koszul,bar,gldim,gorenstein,frobenius,twist,hochschild,duality.
        #[arg(long)]
        analyses: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Koszulity verdict and global dimension
    Koszul {
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Gorenstein criterion, Frobenius pairing, ν and the twist
    Gorenstein {
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Bimodule complex and Hochschild (co)homology with twisted coefficients
    Hochschild {
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Compare HH^i(A,A) with HH_{D−i} of the twisted bimodule
    Duality {
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Manin product of two presentations; prints the product as an input document.
    Manin {
        left: PathBuf,
        right: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Run the full pipeline on the product instead of printing it.
        #[arg(long)]
        analyze: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Signed product table of the Yoneda algebra E(A).
    Yoneda {
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Circle,
    Bullet,
}

fn read_doc(path: &Path) -> Result<InputDocument> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
    parse_input(&text)
}

fn budgets(c: &Common) -> Budgets {
    Budgets { max_degree: c.max_degree, bar_max_i: c.bar_max_i, lattice: c.lattice_budget, max_slice: c.max_slice, bar_total: c.bar_total }
}

fn field_override(c: &Common) -> Result<Option<FieldSpec>> {
    c.field.as_deref().map(FieldSpec::parse_flag).transpose()
}

fn analyze(doc: &InputDocument, wanted: &BTreeSet<Analysis>, c: &Common) -> Result<ExitCode> {
    let report = run_report(doc, field_override(c)?, &budgets(c), wanted)?;
    let text = report.to_json_string();
    if let Some(path) = &c.report {
        std::fs::write(path, &text).map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
    }
    if c.json {
        print!("{text}");
    } else {
        print!("{}", render_text(&report.json));
    }
    Ok(ExitCode::from(report.outcome.exit_code() as u8))
}

fn set(items: &[Analysis]) -> BTreeSet<Analysis> {
    items.iter().copied().collect()
}

fn manin<F: Field>(a: &InputDocument, b: &InputDocument, kind: ManinKind, field: FieldSpec) -> Result<InputDocument> {
    let p = manin_product(&a.presentation::<F>()?, &b.presentation::<F>()?, kind)?;
    Ok(document_of(&p, field))
}

fn yoneda_table<F: Field>(doc: &InputDocument, up_to: usize) -> Result<Value> {
    let p = doc.presentation::<F>()?;
    let y = YonedaAlgebra::from_presentation(&p, up_to)?;
    let name = |i: usize, k: usize| -> Result<String> {
        let len = y.degree_of(i);
        let code = y.component_words(i)?[k];
        if len == 0 {
            return Ok("1".into());
        }
        Ok(nkoszul::linalg::letters(p.dim_v(), code, len).iter().map(|&l| format!("{}*", p.generators()[l])).collect::<Vec<_>>().join("·"))
    };
    let mut components = Vec::new();
    for i in 0..=y.top() {
        let basis = (0..y.dim(i)?).map(|k| name(i, k)).collect::<Result<Vec<_>>>()?;
        components.push(json!({ "i": i, "degree": y.degree_of(i), "basis": basis }));
    }
    let mut products = Vec::new();
    for i in 1..=y.top() {
        for j in 1..=y.top() - i {
            for (a, b, v) in y.product_table(i, j)? {
                let terms = v.iter().map(|(k, c)| Ok(format!("{c}·{}", name(i + j, *k)?))).collect::<Result<Vec<_>>>()?;
                let value = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                products.push(json!({ "i": i, "j": j, "left": name(i, a)?, "right": name(j, b)?, "product": value }));
            }
        }
    }
    Ok(json!({
        "field": F::label(),
        "sign_rule": "f•g = (−1)^(ij) fg, and 0 when N > 2 with i, j odd",
        "components": components,
        "products": products,
        "associative": y.check_associative()?,
    }))
}

fn dispatch<T>(field: FieldSpec, q: impl FnOnce() -> T, fp: impl FnOnce() -> T) -> T {
    match field {
        FieldSpec::Rational => q(),
        FieldSpec::Prime(p) => with_modulus(p, fp),
    }
}

fn execute(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze { input, analyses, common } => {
            let wanted = match analyses {
                Some(s) => Analysis::parse_list(&s)?,
                None => Analysis::all(),
            };
            analyze(&read_doc(&input)?, &wanted, &common)
        }
        Command::Koszul { input, common } => analyze(&read_doc(&input)?, &set(&[Analysis::Koszul, Analysis::Gldim]), &common),
        Command::Gorenstein { input, common } => analyze(&read_doc(&input)?, &set(&[Analysis::Gorenstein, Analysis::Frobenius, Analysis::Twist]), &common),
        Command::Hochschild { input, common } => analyze(&read_doc(&input)?, &set(&[Analysis::Hochschild]), &common),
        Command::Duality { input, common } => analyze(&read_doc(&input)?, &set(&[Analysis::Duality]), &common),
        Command::Manin { left, right, kind, analyze: run, common } => {
            let (a, b) = (read_doc(&left)?, read_doc(&right)?);
            let field = match field_override(&common)? {
                Some(f) => f,
                None if a.field == b.field => a.field,
                None => return Err(Error::parse(right.display().to_string(), "both inputs must use the same field")),
            };
            let kind = match kind {
                Kind::Circle => ManinKind::Circle,
                Kind::Bullet => ManinKind::Bullet,
            };
            let doc = dispatch(field, || manin::<Rational>(&a, &b, kind, field), || manin::<Fp>(&a, &b, kind, field))?;
            if run {
                return analyze(&doc, &Analysis::all(), &common);
            }
            println!("{}", serde_json::to_string_pretty(&doc.to_json()).expect("document serializes"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Yoneda { input, common } => {
            let doc = read_doc(&input)?;
            let field = field_override(&common)?.unwrap_or(doc.field);
            let up_to = common.max_degree;
            let table = dispatch(field, || yoneda_table::<Rational>(&doc, up_to), || yoneda_table::<Fp>(&doc, up_to))?;
            if common.json {
                println!("{}", serde_json::to_string_pretty(&table).expect("table serializes"));
            } else {
                for c in table["components"].as_array().into_iter().flatten() {
                    println!("E_{} (A!_{}): {}", c["i"], c["degree"], serde_json::to_string(&c["basis"]).unwrap_or_default());
                }
                for p in table["products"].as_array().into_iter().flatten() {
                    println!("{} • {} = {}", p["left"].as_str().unwrap_or(""), p["right"].as_str().unwrap_or(""), p["product"].as_str().unwrap_or(""));
                }
                println!("associative: {}", table["associative"]);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(e @ Error::Parse { .. }) | Err(e @ Error::InvalidParams(_)) => {
            eprintln!("input error: {e}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
