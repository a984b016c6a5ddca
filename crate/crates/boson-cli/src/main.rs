//! Command-line surface for the quantum boson algebra library.
//!
//! Exit codes: 0 success, 1 verification failure or engine disagreement,
//! 2 input error, 3 size-guard refusal.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use boson::cartan::{a2, b2, sl2, CartanMatrix};
use boson::diagrams::{form_graph, grdim_hom_a2};
use boson::error::KlrError;
use boson::gram::{gram_matrix, kernel_rank, Engine};
use boson::klr::{print_klr_element, KlrAlgebra, KlrParams};
use boson::parse::{
    parse_cartan_config, parse_element, parse_klr_element, parse_seq, parse_word,
};
use boson::scalar::{print_scalar, RatScalar};
use boson::straighten::Straightener;
use boson::verify::{run_all, suite_forms, suite_klr, suite_sz, SuiteReport, DEFAULT_SEED};
use boson::word::{print_element, print_word, serre_element, AlgElement};

#[derive(Parser)]
#[command(
    name = "boson",
    about = "Exact computation in quantum boson algebras: normal forms, bilinear forms, \
             Hom graded dimensions, Gram kernels, and quiver Hecke blocks",
    after_help = "CARTAN DATA:\n  --cartan accepts a builtin name (sl2, a2, b2) or a path to a \
                  config file:\n      labels i j\n      row 2 -1\n      row -1 2\n      \
                  symmetrizers 1 1\n      klr_t i j 1        # optional parameter overrides\n      \
                  klr_s i j 0 0 0    # optional\n\nSYNTAX:\n  word     [0:i,8:j,1:i]\n  element  \
                  q^-2*[0:i,1:i] + (1/(1-q^2))*[]\n  klr      x{1,0}*t{2,1}*e{i,j} + 3/2*e{j,i}"
)]
struct Cli {
    /// Builtin Cartan matrix (sl2, a2, b2) or path to a config file
    #[arg(long, global = true, default_value = "sl2")]
    cartan: String,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Word-count guard for Gram enumerations
    #[arg(long, global = true, default_value_t = 10_000)]
    max_words: usize,
    /// Sequence-length guard for KLR multiplication
    #[arg(long, global = true, default_value_t = 4)]
    max_alpha: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Algebraic,
    Graphical,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the bilinear form on two elements
    Form {
        x: String,
        y: String,
        #[arg(long, value_enum, default_value_t = EngineArg::Both)]
        engine: EngineArg,
    },
    /// Rewrite an element into reduced normal form
    Straighten { x: String },
    /// Graded dimension of the Hom space between two level-{0,1} words
    Homdim {
        src: String,
        tgt: String,
        /// Series window printed alongside the closed form, as lo:hi
        #[arg(long, default_value = "-10:10")]
        window: String,
    },
    /// Gram matrix of a word list (CSV), optionally with its kernel (JSON)
    Gram {
        /// Words separated by `;`, or @path to a file with one word per line
        #[arg(long)]
        words: String,
        #[arg(long)]
        kernel: bool,
        #[arg(long, value_enum, default_value_t = EngineArg::Algebraic)]
        engine: EngineArg,
    },
    /// Graded dimension of the block cut out by two vertex sequences
    KlrDim {
        i_seq: String,
        j_seq: String,
        #[arg(long, default_value = "-10:10")]
        window: String,
    },
    /// Product of two quiver Hecke algebra elements
    KlrMul { a: String, b: String },
    /// The quantum Serre element for vertices i, j at level n
    Serre { i: String, j: String, n: i64 },
    /// Run the property suites
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

fn input_error(message: impl Into<String>) -> CliError {
    CliError {
        code: 2,
        message: message.into(),
    }
}

fn guard_error(message: impl Into<String>) -> CliError {
    CliError {
        code: 3,
        message: message.into(),
    }
}

fn load_cartan(spec: &str) -> Result<(CartanMatrix, KlrParams), CliError> {
    match spec {
        "sl2" => Ok((sl2(), KlrParams::default_for(&sl2()))),
        "a2" => Ok((a2(), KlrParams::default_for(&a2()))),
        "b2" => Ok((b2(), KlrParams::default_for(&b2()))),
        path => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| input_error(format!("cannot read cartan file `{}`: {}", path, e)))?;
            parse_cartan_config(&text).map_err(|e| input_error(e.to_string()))
        }
    }
}

fn parse_window(s: &str) -> Result<(i64, i64), CliError> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| input_error("window must be lo:hi"))?;
    let lo = lo
        .trim()
        .parse()
        .map_err(|_| input_error("bad window lower bound"))?;
    let hi = hi
        .trim()
        .parse()
        .map_err(|_| input_error("bad window upper bound"))?;
    Ok((lo, hi))
}

fn scalar_json(s: &RatScalar) -> serde_json::Value {
    let side = |p: &boson::scalar::LaurentPoly| {
        serde_json::Value::Array(
            p.terms()
                .map(|(e, c)| {
                    serde_json::Value::Array(vec![
                        serde_json::Value::from(*e),
                        serde_json::Value::from(c.to_string()),
                    ])
                })
                .collect(),
        )
    };
    serde_json::json!({
        "num": side(s.numerator()),
        "den": side(s.denominator()),
    })
}

fn element_json(x: &AlgElement, cartan: &CartanMatrix) -> serde_json::Value {
    serde_json::Value::Array(
        x.terms()
            .map(|(w, c)| {
                serde_json::json!({
                    "scalar": scalar_json(c),
                    "word": print_word(w, cartan),
                })
            })
            .collect(),
    )
}

fn series_string(s: &RatScalar, window: (i64, i64)) -> Result<String, CliError> {
    let coeffs = s
        .series_expand(window.0, window.1)
        .map_err(|e| input_error(e.to_string()))?;
    let mut out = String::new();
    let _ = write!(out, "series[{}..{}]:", window.0, window.1);
    if coeffs.is_empty() {
        out.push_str(" 0");
    }
    for (e, c) in coeffs {
        let _ = write!(out, " {}*q^{}", c, e);
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let (cartan, params) = load_cartan(&cli.cartan)?;
    match cli.command {
        Command::Form { x, y, engine } => {
            let ex = parse_element(&x, &cartan).map_err(|e| input_error(e.to_string()))?;
            let ey = parse_element(&y, &cartan).map_err(|e| input_error(e.to_string()))?;
            let straightener = Straightener::new(&cartan);
            let alg = || straightener.form_alg(&ex, &ey);
            let graph = || form_graph(&cartan, &ex, &ey);
            match engine {
                EngineArg::Algebraic => emit_scalar(&alg(), cli.format),
                EngineArg::Graphical => emit_scalar(&graph(), cli.format),
                EngineArg::Both => {
                    let a = alg();
                    let g = graph();
                    let agree = a == g;
                    match cli.format {
                        Format::Json => println!(
                            "{}",
                            serde_json::json!({
                                "algebraic": scalar_json(&a),
                                "graphical": scalar_json(&g),
                                "agree": agree,
                            })
                        ),
                        _ => {
                            println!("algebraic: {}", print_scalar(&a));
                            println!("graphical: {}", print_scalar(&g));
                        }
                    }
                    if !agree {
                        eprintln!("error: engines disagree");
                        return Ok(ExitCode::from(1));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Straighten { x } => {
            let ex = parse_element(&x, &cartan).map_err(|e| input_error(e.to_string()))?;
            let nf = Straightener::new(&cartan).straighten(&ex);
            match cli.format {
                Format::Json => println!("{}", element_json(&nf, &cartan)),
                _ => println!("{}", print_element(&nf, &cartan)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Homdim { src, tgt, window } => {
            let window = parse_window(&window)?;
            let ws = parse_word(&src, &cartan).map_err(|e| input_error(e.to_string()))?;
            let wt = parse_word(&tgt, &cartan).map_err(|e| input_error(e.to_string()))?;
            let g = grdim_hom_a2(&cartan, &ws, &wt).map_err(|e| input_error(e.to_string()))?;
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "grdim": scalar_json(&g.0),
                        "series": series_json(&g.0, window)?,
                    })
                ),
                _ => {
                    println!("{}", print_scalar(&g.0));
                    println!("{}", series_string(&g.0, window)?);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gram {
            words,
            kernel,
            engine,
        } => {
            let list = load_words(&words, &cartan)?;
            if list.len() > cli.max_words {
                return Err(guard_error(format!(
                    "word guard: {} words exceed --max-words {}",
                    list.len(),
                    cli.max_words
                )));
            }
            let engine = match engine {
                EngineArg::Algebraic => Engine::Algebraic,
                EngineArg::Graphical => Engine::Graphical,
                EngineArg::Both => {
                    return Err(input_error("gram needs a single engine"));
                }
            };
            let g = gram_matrix(&cartan, &list, engine);
            // CSV table with a header of column words
            let mut header = vec!["word".to_string()];
            header.extend(list.iter().map(|w| print_word(w, &cartan)));
            println!("{}", header.join(","));
            for (r, row) in g.entries.iter().enumerate() {
                let mut line = vec![print_word(&g.row_basis[r], &cartan)];
                line.extend(row.iter().map(print_scalar));
                println!("{}", line.join(","));
            }
            if kernel {
                let (rank, basis) = kernel_rank(&g);
                let json = serde_json::json!({
                    "rank": rank,
                    "kernel": basis
                        .iter()
                        .map(|e| element_json(e, &cartan))
                        .collect::<Vec<_>>(),
                });
                println!("{}", json);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::KlrDim { i_seq, j_seq, window } => {
            let window = parse_window(&window)?;
            let si = parse_seq(&i_seq, &cartan).map_err(|e| input_error(e.to_string()))?;
            let sj = parse_seq(&j_seq, &cartan).map_err(|e| input_error(e.to_string()))?;
            let alg = KlrAlgebra::new(&cartan, params, cli.max_alpha)
                .map_err(|e| input_error(e.to_string()))?;
            let g = alg.grdim_block(&si, &sj);
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "grdim": scalar_json(&g),
                        "series": series_json(&g, window)?,
                    })
                ),
                _ => {
                    println!("{}", print_scalar(&g));
                    println!("{}", series_string(&g, window)?);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::KlrMul { a, b } => {
            let ea = parse_klr_element(&a, &cartan).map_err(|e| input_error(e.to_string()))?;
            let eb = parse_klr_element(&b, &cartan).map_err(|e| input_error(e.to_string()))?;
            let alg = KlrAlgebra::new(&cartan, params, cli.max_alpha)
                .map_err(|e| input_error(e.to_string()))?;
            let product = alg.multiply(&ea, &eb).map_err(|e| match e {
                KlrError::SizeGuard { .. } => guard_error(e.to_string()),
                other => input_error(other.to_string()),
            })?;
            println!("{}", print_klr_element(&product, &cartan));
            Ok(ExitCode::SUCCESS)
        }
        Command::Serre { i, j, n } => {
            let vi = cartan
                .index_of(&i)
                .map_err(|e| input_error(e.to_string()))?;
            let vj = cartan
                .index_of(&j)
                .map_err(|e| input_error(e.to_string()))?;
            let s = serre_element(&cartan, vi, vj, n).map_err(|e| input_error(e.to_string()))?;
            match cli.format {
                Format::Json => println!("{}", element_json(&s, &cartan)),
                _ => println!("{}", print_element(&s, &cartan)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, seed } => {
            let reports: Vec<SuiteReport> = match suite.as_str() {
                "all" => run_all(seed),
                "forms" => vec![suite_forms(seed)],
                "klr" => vec![suite_klr(seed)],
                "sz" => vec![suite_sz(seed)],
                other => {
                    return Err(input_error(format!(
                        "unknown suite `{}`: expected all, forms, klr, or sz",
                        other
                    )))
                }
            };
            let mut ok = true;
            for r in &reports {
                let status = if r.ok() { "PASS" } else { "FAIL" };
                println!(
                    "suite {:<6} [{}] {} checks in {} ms",
                    r.name, status, r.checks, r.millis
                );
                for f in &r.failures {
                    println!("  failure: {}", f);
                }
                ok &= r.ok();
            }
            if ok {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn series_json(s: &RatScalar, window: (i64, i64)) -> Result<serde_json::Value, CliError> {
    let coeffs = s
        .series_expand(window.0, window.1)
        .map_err(|e| input_error(e.to_string()))?;
    Ok(serde_json::Value::Array(
        coeffs
            .into_iter()
            .map(|(e, c)| {
                serde_json::Value::Array(vec![
                    serde_json::Value::from(e),
                    serde_json::Value::from(c.to_string()),
                ])
            })
            .collect(),
    ))
}

fn emit_scalar(s: &RatScalar, format: Format) {
    match format {
        Format::Json => println!("{}", scalar_json(s)),
        _ => println!("{}", print_scalar(s)),
    }
}

fn load_words(
    spec: &str,
    cartan: &CartanMatrix,
) -> Result<Vec<boson::word::ZWord>, CliError> {
    let text;
    let pieces: Vec<&str> = if let Some(path) = spec.strip_prefix('@') {
        text = std::fs::read_to_string(path)
            .map_err(|e| input_error(format!("cannot read word file `{}`: {}", path, e)))?;
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .collect()
    } else {
        spec.split(';').map(str::trim).collect()
    };
    pieces
        .into_iter()
        .map(|p| parse_word(p, cartan).map_err(|e| input_error(format!("in `{}`: {}", p, e))))
        .collect()
}
