use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use palf::datasets::{gen_dataset, Dataset};
use palf::format::{parse, PalfDocument};
use palf::hurwitz::{equivalent_within, SearchOptions, SearchOutcome};
use palf::palf::{compare, Palf};
use palf::relations::{verify_relation, Relation, RelationKind};
use palf::surface::{Generator, Surface, TwistGen};
use palf::svg::render_svg;

/// Genus-zero Lefschetz fibrations as Dehn twist factorizations.
///
/// Exit status: 0 on success, 1 when the input is well formed but invalid
/// (or a checked relation fails), 2 on syntax or usage errors.
#[derive(Parser)]
#[command(name = "palf", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every factorization in a file.
    Validate { file: PathBuf },
    /// Euler characteristic and homology of the total space and its boundary.
    Invariants {
        file: PathBuf,
        /// Only this factorization (default: all of them).
        #[arg(long)]
        palf: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Total monodromy of a factorization.
    Monodromy {
        file: PathBuf,
        #[arg(long)]
        palf: String,
        #[arg(long, value_enum, default_value_t = Show::Arcs)]
        show: Show,
    },
    /// Compare the invariants and factorizations of two fibrations.
    Compare {
        file_a: PathBuf,
        file_b: PathBuf,
        #[arg(long)]
        palf_a: Option<String>,
        #[arg(long)]
        palf_b: Option<String>,
    },
    /// Look for Hurwitz moves turning the first factorization into the second.
    HurwitzSearch {
        file_a: PathBuf,
        file_b: PathBuf,
        #[arg(long)]
        depth: usize,
        /// Also allow conjugating the target by twist words of length <= 2.
        #[arg(long)]
        conjugation: bool,
        #[arg(long)]
        palf_a: Option<String>,
        #[arg(long)]
        palf_b: Option<String>,
    },
    /// Write one of the bundled fibrations.
    Gen {
        #[arg(value_enum)]
        which: Which,
        /// Parameter of the C pair, at most -5.
        #[arg(long, default_value_t = -5, allow_hyphen_values = true)]
        m: i64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check a relation in the mapping class group.
    Relations {
        #[arg(long)]
        check: RelationKind,
        #[arg(long)]
        boundaries: usize,
        /// First twist, e.g. +c(1,2) (commuting, conjugation).
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Second twist (commuting).
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// Conjugating word, e.g. "+c(2,3) -h(1)" (conjugation).
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
    },
    /// Draw a factorization as SVG.
    Render {
        file: PathBuf,
        #[arg(long)]
        palf: String,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    JsonLines,
}

#[derive(Clone, Copy, ValueEnum)]
enum Show {
    Arcs,
    Abelianized,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    W1,
    C1,
    C2,
}

enum Failure {
    Invalid(String),
    Usage(String),
}

type Outcome = Result<(), Failure>;

fn load(path: &Path) -> Result<PalfDocument, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| {
        let msg = format!("{}: {e}", path.display());
        if e.is_syntax() {
            Failure::Usage(msg)
        } else {
            Failure::Invalid(msg)
        }
    })
}

fn pick(doc: &PalfDocument, name: Option<&str>, path: &Path) -> Result<Palf, Failure> {
    match name {
        Some(n) => doc
            .palf(n)
            .ok_or_else(|| Failure::Usage(format!("{}: no factorization named `{n}`", path.display()))),
        None => match doc.palf_decls() {
            [only] => Ok(doc.palf(&only.name).expect("declared")),
            decls => {
                let names: Vec<&str> = decls.iter().map(|d| d.name.as_str()).collect();
                Err(Failure::Usage(format!(
                    "{}: expected exactly one factorization, found [{}]; pick one by name",
                    path.display(),
                    names.join(", ")
                )))
            }
        },
    }
}

fn validate(file: &Path) -> Outcome {
    let doc = load(file)?;
    let mut bad = 0;
    if doc.palf_decls().is_empty() {
        println!("{}: no factorizations", file.display());
    }
    for p in doc.palfs() {
        let violations = p.validate();
        if violations.is_empty() {
            println!(
                "{}: valid, {} cycles on {}, euler {}",
                p.name(),
                p.cycles().len(),
                p.fiber(),
                p.euler_characteristic()
            );
        } else {
            bad += 1;
            println!("{}: invalid", p.name());
            for v in violations {
                println!("  {v}");
            }
        }
    }
    if bad > 0 {
        return Err(Failure::Invalid(format!("{bad} invalid factorization(s)")));
    }
    Ok(())
}

fn invariants(file: &Path, name: Option<&str>, format: Format) -> Outcome {
    let doc = load(file)?;
    let palfs = match name {
        Some(_) => vec![pick(&doc, name, file)?],
        None => doc.palfs(),
    };
    for (i, p) in palfs.iter().enumerate() {
        let report = p.report();
        match format {
            Format::Text => {
                if i > 0 {
                    println!();
                }
                println!("[{}]", p.name());
                print!("{report}");
            }
            Format::JsonLines => {
                for (key, value) in report.records() {
                    println!("{}", json!({ "palf": p.name(), "name": key, "value": value }));
                }
            }
        }
    }
    Ok(())
}

fn monodromy(file: &Path, name: &str, show: Show) -> Outcome {
    let doc = load(file)?;
    let p = pick(&doc, Some(name), file)?;
    let m = p.total_monodromy();
    let decl = doc.palf_decls().iter().find(|d| d.name == name).expect("picked");
    let written: Vec<String> = decl.cycles.iter().rev().map(|c| format!("t({c})")).collect();
    let written = if written.is_empty() { "identity".to_string() } else { written.join(" ") };
    println!("{} = {written}", p.name());
    match show {
        Show::Arcs => print!("{m}"),
        Show::Abelianized => print!("{}", m.abelianized_action()),
    }
    if m.is_identity() {
        println!("(identity)");
    }
    Ok(())
}

fn compare_files(a: &Path, b: &Path, name_a: Option<&str>, name_b: Option<&str>) -> Outcome {
    let (da, db) = (load(a)?, load(b)?);
    let (p, q) = (pick(&da, name_a, a)?, pick(&db, name_b, b)?);
    println!("{:<17}{:<10}{} | {}", "invariant", "", p.name(), q.name());
    print!("{}", compare(&p, &q));
    Ok(())
}

fn hurwitz_search(
    a: &Path,
    b: &Path,
    depth: usize,
    conjugation: bool,
    name_a: Option<&str>,
    name_b: Option<&str>,
) -> Outcome {
    let (da, db) = (load(a)?, load(b)?);
    let (p, q) = (pick(&da, name_a, a)?, pick(&db, name_b, b)?);
    let outcome = equivalent_within(&p, &q, SearchOptions { depth, conjugation })
        .map_err(|e| Failure::Invalid(e.to_string()))?;
    match outcome {
        SearchOutcome::Found(w) => {
            let moves: Vec<String> = w.moves.iter().map(|m| m.to_string()).collect();
            println!(
                "found: {} move(s){}{}",
                moves.len(),
                if moves.is_empty() { "" } else { ": " },
                moves.join(" ")
            );
            if !w.conjugator.is_empty() {
                let conj: Vec<String> = w.conjugator.iter().map(|g| g.to_string()).collect();
                println!("target conjugated by: {}", conj.join(" "));
            }
        }
        SearchOutcome::NotFound { depth, explored } => {
            println!(
                "not found within depth {depth} ({explored} states explored); this does not prove inequivalence"
            );
        }
    }
    Ok(())
}

fn gen(which: Which, m: i64, output: &Path) -> Outcome {
    let which = match which {
        Which::W1 => Dataset::W1,
        Which::C1 => Dataset::C1,
        Which::C2 => Dataset::C2,
    };
    let doc = gen_dataset(which, m).map_err(|e| Failure::Usage(e.to_string()))?;
    fs::write(output, doc.serialize())
        .map_err(|e| Failure::Usage(format!("{}: {e}", output.display())))?;
    println!("wrote {}", output.display());
    Ok(())
}

fn twist_arg(flag: &str, value: Option<&str>) -> Result<TwistGen, Failure> {
    let value = value.ok_or_else(|| Failure::Usage(format!("--{flag} is required for this relation")))?;
    match value.parse::<Generator>() {
        Ok(Generator::Twist(t)) => Ok(t),
        Ok(Generator::Half(_)) => Err(Failure::Usage(format!("--{flag} must be a twist +c(lo,hi)"))),
        Err(e) => Err(Failure::Usage(e.to_string())),
    }
}

fn relations(kind: RelationKind, boundaries: usize, a: Option<&str>, b: Option<&str>, word: Option<&str>) -> Outcome {
    let surface = Surface::planar(boundaries).map_err(|e| Failure::Usage(e.to_string()))?;
    let relation = match kind {
        RelationKind::Lantern => Relation::Lantern,
        RelationKind::Commuting => Relation::Commuting {
            a: twist_arg("a", a)?,
            b: twist_arg("b", b)?,
        },
        RelationKind::Conjugation => {
            let word = word.ok_or_else(|| Failure::Usage("--word is required for this relation".into()))?;
            let f = word
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<Vec<Generator>, _>>()
                .map_err(|e| Failure::Usage(e.to_string()))?;
            Relation::Conjugation {
                f,
                c: twist_arg("a", a)?,
            }
        }
    };
    let holds = verify_relation(&surface, &relation).map_err(|e| Failure::Usage(e.to_string()))?;
    println!("{kind} on {surface}: {holds}");
    if holds {
        Ok(())
    } else {
        Err(Failure::Invalid(format!("the {kind} relation does not hold")))
    }
}

fn render(file: &Path, name: &str, output: &Path) -> Outcome {
    let doc = load(file)?;
    let svg = render_svg(&doc, name).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
    fs::write(output, svg).map_err(|e| Failure::Usage(format!("{}: {e}", output.display())))?;
    println!("wrote {}", output.display());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Invariants { file, palf, format } => invariants(file, palf.as_deref(), *format),
        Command::Monodromy { file, palf, show } => monodromy(file, palf, *show),
        Command::Compare {
            file_a,
            file_b,
            palf_a,
            palf_b,
        } => compare_files(file_a, file_b, palf_a.as_deref(), palf_b.as_deref()),
        Command::HurwitzSearch {
            file_a,
            file_b,
            depth,
            conjugation,
            palf_a,
            palf_b,
        } => hurwitz_search(
            file_a,
            file_b,
            *depth,
            *conjugation,
            palf_a.as_deref(),
            palf_b.as_deref(),
        ),
        Command::Gen { which, m, output } => gen(*which, *m, output),
        Command::Relations {
            check,
            boundaries,
            a,
            b,
            word,
        } => relations(*check, *boundaries, a.as_deref(), b.as_deref(), word.as_deref()),
        Command::Render { file, palf, output } => render(file, palf, output),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
