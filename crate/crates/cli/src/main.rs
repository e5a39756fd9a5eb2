use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qtsym::cocharge::{cocharge, cocharge_word, first_letter_reduction};
use qtsym::codes::{Alphabet, Code};
use qtsym::genfun::{macdonald_coefficient, QTPolynomial};
use qtsym::hl::{hl_symmetry_map, majcode_filling, zero_bump};
use qtsym::hook::hook_phi;
use qtsym::shapes::{inv, maj, parse_list, weak_compositions, Content, Filling, Letter, Partition};
use qtsym::t1::t1_map;
use qtsym::verify::{self, Report};
use qtsym::word_codes::{carlitz_bijection, invcode_word, invcode_word_inverse, majcode_column_word, majcode_column_word_inverse};

/// Inversion and major-index statistics on fillings, their codes and bijections.
#[derive(Parser)]
#[command(name = "qtsym", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the (q, t) generating polynomial of inv and maj over fillings.
    Poly {
        /// Shape as comma-separated parts, e.g. 3,2,1.
        shape: String,
        /// Content as comma-separated multiplicities of 1, 2, ...
        #[arg(long, conflicts_with = "alphabet_size", required_unless_present = "alphabet_size")]
        content: Option<String>,
        /// Print one polynomial for every content over this many letters.
        #[arg(long)]
        alphabet_size: Option<usize>,
        /// Restrict to inv = 0 fillings and print a polynomial in t.
        #[arg(long)]
        q0: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run an exhaustive verification suite.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Worker threads (defaults to the number of cores).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Apply a map to a word, code or filling.
    Map {
        name: MapName,
        /// A comma-separated word or code, or a filling such as [[1,2,3],[2,1]].
        input: String,
        /// Treat the input as a code and decode it over these letters.
        #[arg(long)]
        alphabet: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MapName {
    Carlitz,
    Invcode,
    Majcode,
    HookPhi,
    T1,
    HlSymmetry,
    ZeroBump,
    Cocharge,
    Reduce,
}

/// Failures that end the program with a nonzero status.
enum Failure {
    Input(String),
    Verification,
}

impl From<qtsym::Error> for Failure {
    fn from(e: qtsym::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Poly { shape, content, alphabet_size, q0, json } => poly(&shape, content.as_deref(), alphabet_size, q0, json),
        Command::Verify { suite, max_n, jobs, json } => verify_cmd(&suite, max_n, jobs, json),
        Command::Map { name, input, alphabet } => map(name, &input, alphabet.as_deref()),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn poly_terms(p: &QTPolynomial, q0: bool) -> Value {
    let terms: Vec<[i64; 3]> = if q0 {
        p.at_q0().terms().into_iter().map(|(d, c)| [0, d as i64, c]).collect()
    } else {
        p.terms().into_iter().map(|(a, b, c)| [a as i64, b as i64, c]).collect()
    };
    json!(terms)
}

fn poly_text(p: &QTPolynomial, q0: bool) -> String {
    if q0 {
        p.at_q0().display_in("t")
    } else {
        p.to_string()
    }
}

fn poly(shape: &str, content: Option<&str>, alphabet_size: Option<usize>, q0: bool, json: bool) -> Outcome {
    let mu: Partition = shape.parse()?;
    let contents: Vec<Content> = match (content, alphabet_size) {
        (Some(c), _) => {
            let c: Content = c.parse()?;
            if c.size() != mu.size() {
                return Err(Failure::Input(format!("content {:?} has size {}, shape {mu} has size {}", c.0, c.size(), mu.size())));
            }
            vec![c]
        }
        (None, Some(0)) => return Err(Failure::Input("alphabet size must be positive".into())),
        (None, Some(k)) => weak_compositions(mu.size(), k).into_iter().map(Content).collect(),
        (None, None) => return Err(Failure::Input("give --content or --alphabet-size".into())),
    };
    let polys: Vec<(Content, QTPolynomial)> =
        contents.into_iter().map(|c| macdonald_coefficient(&mu, &c).map(|p| (c, p))).collect::<Result<_, _>>()?;
    if json {
        let out = if content.is_some() {
            poly_terms(&polys[0].1, q0)
        } else {
            Value::Array(polys.iter().map(|(c, p)| json!({"content": c.0, "polynomial": poly_terms(p, q0)})).collect())
        };
        println!("{out}");
    } else if content.is_some() {
        println!("{}", poly_text(&polys[0].1, q0));
    } else {
        for (c, p) in &polys {
            println!("{}: {}", join(&c.0), poly_text(p, q0));
        }
    }
    Ok(())
}

fn report_json(r: &Report) -> Value {
    json!({"suite": r.suite, "cases": r.cases, "failed": r.failed, "failures": r.failures})
}

fn verify_cmd(suite: &str, max_n: usize, jobs: Option<usize>, json: bool) -> Outcome {
    if !verify::SUITES.contains(&suite) && suite != "all" {
        return Err(Failure::Input(format!("unknown suite {suite:?}; expected one of {}, all", verify::SUITES.join(", "))));
    }
    if max_n == 0 {
        return Err(Failure::Input("--max-n must be positive".into()));
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        if j == 0 {
            return Err(Failure::Input("--jobs must be positive".into()));
        }
        pool = pool.num_threads(j);
    }
    let pool = pool.build().map_err(|e| Failure::Input(e.to_string()))?;
    let reports = pool.install(|| verify::by_name(suite, max_n)).expect("suite name checked");
    if json {
        let out = if reports.len() == 1 { report_json(&reports[0]) } else { Value::Array(reports.iter().map(report_json).collect()) };
        println!("{out}");
    } else {
        for r in &reports {
            println!("{r}");
        }
    }
    if reports.iter().all(Report::passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn parse_word(s: &str) -> Result<Vec<Letter>, Failure> {
    let w: Vec<Letter> = parse_list(s)?;
    if w.is_empty() {
        return Err(Failure::Input("empty word".into()));
    }
    if w.contains(&0) {
        return Err(Failure::Input("letters must be positive".into()));
    }
    Ok(w)
}

fn parse_code(s: &str) -> Result<Code, Failure> {
    Ok(s.parse()?)
}

fn parse_filling(s: &str) -> Result<Filling, Failure> {
    Ok(s.parse()?)
}

fn stats(f: &Filling) -> String {
    format!("shape={} inv={} maj={}", f.shape(), inv(f), maj(f))
}

fn print_filling_map(f: &Filling, g: &Filling) {
    println!("{g}");
    println!("{}  ->  {}", stats(f), stats(g));
}

fn map(name: MapName, input: &str, alphabet: Option<&str>) -> Outcome {
    let alphabet = alphabet.map(str::parse::<Alphabet>).transpose()?;
    let is_filling = input.trim_start().starts_with('[');
    match name {
        MapName::Carlitz => {
            let w = parse_word(input)?;
            let v = carlitz_bijection(&w)?;
            println!("{}", join(&v));
            println!("inv={}  ->  maj={}", qtsym::shapes::word_inv(&w), qtsym::shapes::word_maj(&v));
        }
        MapName::Invcode => match alphabet {
            Some(a) => println!("{}", join(&invcode_word_inverse(&parse_code(input)?, &a)?)),
            None => {
                let c = invcode_word(&parse_word(input)?);
                println!("{c}  sum={}", c.sum());
            }
        },
        MapName::Majcode => match alphabet {
            Some(a) => println!("{}", join(&majcode_column_word_inverse(&parse_code(input)?, &a)?)),
            None if is_filling => {
                let c = majcode_filling(&parse_filling(input)?)?;
                println!("{c}  sum={}", c.sum());
            }
            None => {
                let c = majcode_column_word(&parse_word(input)?);
                println!("{c}  sum={}", c.sum());
            }
        },
        MapName::HookPhi | MapName::T1 | MapName::HlSymmetry | MapName::ZeroBump => {
            let f = parse_filling(input)?;
            let g = match name {
                MapName::HookPhi => hook_phi(&f)?,
                MapName::T1 => t1_map(&f)?,
                MapName::HlSymmetry => hl_symmetry_map(&f)?,
                _ => zero_bump(&f)?,
            };
            print_filling_map(&f, &g);
        }
        MapName::Cocharge => {
            if is_filling {
                let f = parse_filling(input)?;
                let w = cocharge_word(&f);
                println!("{}  cc={}", join(&w), cocharge(&w)?);
            } else {
                println!("cc={}", cocharge(&parse_word(input)?)?);
            }
        }
        MapName::Reduce => {
            let r = first_letter_reduction(&parse_word(input)?)?;
            println!("{}  cc={}", join(&r), cocharge(&r)?);
        }
    }
    Ok(())
}
