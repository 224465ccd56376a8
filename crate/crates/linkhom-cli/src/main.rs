//! Command-line front end: parse a braid or web, dispatch to an invariant
//! pipeline, and print the result as canonical text or JSON. Exit codes:
//! 0 success, 1 input/option parse error, 2 consistency-check failure.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use linkhom::algebra::{LaurentPoly, MultiRational, TruncatedVSeries, QQ};
use linkhom::braid::{enumerate_moves, parse_braid, BraidWord};
use linkhom::hecke::{homfly, homfly_at_a};
use linkhom::kauffman::jones;
use linkhom::khovanov::kh_poincare;
use linkhom::qrep::RepContext;
use linkhom::soergel::{hhh, kr, rouquier_complex};
use linkhom::webrt::{closed_web_value, colored_jones, parse_web_word, wrt_eval};

const DEFAULT_CUTOFF: i64 = 20;

#[derive(Parser)]
#[command(
    name = "linkhom",
    about = "Exact quantum link invariants and link homology of braid closures",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Jones polynomial of the braid closure (unknot: v^-1 + v).
    Jones {
        braid: String,
        #[arg(long)]
        json: bool,
    },
    /// HOMFLY-PT polynomial of the braid closure, in v and a.
    Homfly {
        braid: String,
        #[arg(long)]
        json: bool,
    },
    /// Khovanov homology Poincaré polynomial in t and v.
    Khovanov {
        braid: String,
        #[arg(long)]
        json: bool,
    },
    /// Triply graded closure series as JSON (doubled t/h exponents).
    Kr {
        braid: String,
        #[arg(long)]
        cutoff: Option<i64>,
        /// Accepted for uniformity; the series always prints as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Quantum gl_k closure invariant, every strand in the η-vector
    /// representation.
    Wrt {
        braid: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
        eta: i32,
        #[arg(long)]
        json: bool,
    },
    /// Coloured Jones polynomial; one colour per closure component.
    ColoredJones {
        braid: String,
        #[arg(long)]
        colors: String,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a closed web in the gl_k calculus.
    WebEval {
        web: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
        eta: i32,
        #[arg(long)]
        json: bool,
    },
    /// Run every pipeline on one braid and assert pairwise agreement.
    CrossCheck {
        braid: String,
        #[arg(long)]
        cutoff: Option<i64>,
    },
    /// Check the classical pipelines against all one-step braid moves.
    MovesCheck {
        braid: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // Usage problems are parse errors; --help/--version are not.
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, String> {
    match cmd {
        Command::Jones { braid, json } => {
            let b = parse_braid(&braid)?;
            print_laurent(&jones(&b), json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Homfly { braid, json } => {
            let b = parse_braid(&braid)?;
            print_rational(&homfly(&b), json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Khovanov { braid, json } => {
            let b = parse_braid(&braid)?;
            let p = kh_poincare(&b);
            if json {
                let pieces: Vec<Value> = p
                    .terms()
                    .map(|(&(t, v), &dim)| json!({"t": t, "v": v, "dim": dim}))
                    .collect();
                println!("{}", json!({"type": "khovanov", "pieces": pieces}));
            } else {
                println!("{p}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Kr {
            braid,
            cutoff,
            json: _,
        } => {
            let b = parse_braid(&braid)?;
            let r = kr(&b, resolve_cutoff(cutoff)?);
            let mut pieces = Vec::new();
            for (&(t2, h2), s) in r.series.terms() {
                let Some(vmin) = s.min_deg() else { continue };
                let coeffs: Vec<i64> =
                    (vmin..=s.cutoff()).map(|e| qq_to_i64(&s.coeff(e))).collect();
                pieces.push(json!({
                    "t2": t2,
                    "h2": h2,
                    "vmin": vmin,
                    "coeffs": coeffs,
                    "cutoff": s.cutoff(),
                }));
            }
            println!(
                "{}",
                json!({
                    "type": "series",
                    "braid": r.braid,
                    "strands": r.strands,
                    "writhe": r.writhe,
                    "cutoff": r.cutoff,
                    "pieces": pieces,
                })
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Wrt {
            braid,
            k,
            eta,
            json,
        } => {
            let b = parse_braid(&braid)?;
            check_rep_params(k, eta)?;
            print_rational(&wrt_eval(&b, k, eta), json);
            Ok(ExitCode::SUCCESS)
        }
        Command::ColoredJones {
            braid,
            colors,
            json,
        } => {
            let b = parse_braid(&braid)?;
            let colors = parse_colors(&colors, &b)?;
            print_rational(&colored_jones(&b, &colors), json);
            Ok(ExitCode::SUCCESS)
        }
        Command::WebEval { web, k, eta, json } => {
            let w = parse_web_word(&web)?;
            check_rep_params(k, eta)?;
            let value = closed_web_value(&RepContext::new(k, eta), &w)?;
            print_laurent(&value, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::CrossCheck { braid, cutoff } => {
            let b = parse_braid(&braid)?;
            cross_check(&b, resolve_cutoff(cutoff)?)
        }
        Command::MovesCheck { braid } => {
            let b = parse_braid(&braid)?;
            moves_check(&b)
        }
    }
}

/// Flag value, then LINKHOM_CUTOFF, then the built-in default.
fn resolve_cutoff(flag: Option<i64>) -> Result<i64, String> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var("LINKHOM_CUTOFF") {
        Ok(s) => s
            .trim()
            .parse::<i64>()
            .map_err(|_| format!("LINKHOM_CUTOFF is not an integer: {s:?}")),
        Err(_) => Ok(DEFAULT_CUTOFF),
    }
}

fn check_rep_params(k: usize, eta: i32) -> Result<(), String> {
    if k < 1 {
        return Err("k must be at least 1".into());
    }
    if eta != 1 && eta != -1 {
        return Err("eta must be 1 or -1".into());
    }
    Ok(())
}

fn parse_colors(text: &str, b: &BraidWord) -> Result<Vec<usize>, String> {
    let colors: Vec<usize> = text
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad colour {p:?}"))
        })
        .collect::<Result<_, _>>()?;
    let ncomp = b.closure_components();
    if colors.len() != ncomp {
        return Err(format!(
            "need one colour per closure component: got {}, closure has {ncomp}",
            colors.len()
        ));
    }
    if colors.iter().any(|&m| m < 1) {
        return Err("colours are positive integers".into());
    }
    Ok(colors)
}

fn qq_to_i64(q: &QQ) -> i64 {
    assert!(q.is_integer(), "integral coefficient expected");
    q.to_integer()
        .to_string()
        .parse()
        .expect("coefficient fits in 64 bits")
}

fn laurent_json(p: &LaurentPoly) -> Value {
    let coeffs: serde_json::Map<String, Value> = p
        .terms()
        .map(|(e, c)| (e.to_string(), Value::String(c.to_string())))
        .collect();
    json!({"type": "laurent", "coeffs": coeffs})
}

fn print_laurent(p: &LaurentPoly, as_json: bool) {
    if as_json {
        println!("{}", laurent_json(p));
    } else {
        println!("{p}");
    }
}

/// Rational values that clear to Laurent polynomials print as such.
fn print_rational(r: &MultiRational, as_json: bool) {
    if let Some(p) = r.to_laurent() {
        print_laurent(&p, as_json);
    } else if as_json {
        println!(
            "{}",
            json!({"type": "rational", "num": r.num().to_string(), "den": r.den().to_string()})
        );
    } else {
        println!("{r}");
    }
}

/// Jones from the bracket, HOMFLY-PT at a = v², gl_2 at η = −1, the Khovanov
/// Euler characteristic, and the Euler-specialized closure series must all
/// agree on the same braid.
fn cross_check(b: &BraidWord, cutoff: i64) -> Result<ExitCode, String> {
    let jp = jones(b);
    println!("jones: {jp}");
    let mut ok = true;

    let hf = homfly_at_a(b, 2).ok_or("homfly does not specialize at a = v^2")?;
    ok &= report("homfly (a=v^2)", &hf, &jp);

    let wr = wrt_eval(b, 2, -1)
        .to_laurent()
        .ok_or("gl_2 invariant is not Laurent")?;
    ok &= report("wrt (k=2, eta=-1)", &wr, &jp);

    let kh = kh_poincare(b).at_t_minus_one();
    ok &= report("khovanov (t=-1)", &kh, &jp);

    let raw = hhh(&rouquier_complex(b), cutoff);
    let spec = raw.euler_a_specialized(b.exponent_sum(), b.strands as i64, 2);
    let jtrunc = TruncatedVSeries::from_laurent(&jp, spec.cutoff());
    if spec.eq_truncated(&jtrunc) {
        println!("kr (t=-1, a=v^2): agrees to v-degree {}", spec.cutoff());
    } else {
        println!("kr (t=-1, a=v^2): MISMATCH: {spec}");
        ok = false;
    }

    if ok {
        println!("all pipelines agree");
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(2))
    }
}

fn report(name: &str, got: &LaurentPoly, want: &LaurentPoly) -> bool {
    if got == want {
        println!("{name}: agrees");
        true
    } else {
        println!("{name}: MISMATCH: {got}");
        false
    }
}

/// The classical invariants must not change under any one-step braid move
/// (word moves, conjugation, stabilization).
fn moves_check(b: &BraidWord) -> Result<ExitCode, String> {
    let jp = jones(b);
    let hf = homfly(b);
    let kh = kh_poincare(b);
    let moves = enumerate_moves(b);
    for m in &moves {
        if jones(m) != jp {
            println!("jones changed under move {m}");
            return Ok(ExitCode::from(2));
        }
        if homfly(m) != hf {
            println!("homfly changed under move {m}");
            return Ok(ExitCode::from(2));
        }
        if kh_poincare(m) != kh {
            println!("khovanov changed under move {m}");
            return Ok(ExitCode::from(2));
        }
    }
    println!(
        "checked {} moves of {b}: jones, homfly, khovanov all invariant",
        moves.len()
    );
    Ok(ExitCode::SUCCESS)
}
