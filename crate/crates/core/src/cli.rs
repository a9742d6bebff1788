//! The `qhalg` command line. Exit codes: 0 when every check passes, 1 on a
//! verification failure, 2 on malformed input or usage errors.

use std::io::{Read, Write};

use clap::{Parser, Subcommand};

use crate::algebra::AlgebraElement;
use crate::basicize::basicize;
use crate::catalog::{extended_zigzag, matrix_superalgebra};
use crate::error::Error;
use crate::format::{self, Description};
use crate::heredity::BasedAlgebra;
use crate::linalg::Field;
use crate::modules::{decomposition_matrix, radical_and_simple};
use crate::truncation::{
    classify_idempotent, conformity_check, surviving_simples, truncate, z2z2_check,
    CellularCertificate,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qhalg", version, about = "Verify and explore based quasi-hereditary superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check grading, associativity and the unit.
    Validate { file: String },
    /// Check the heredity axioms, and the anti-involution when present.
    Verify { file: String },
    /// Print the Gram matrix of a cell.
    Gram {
        file: String,
        #[arg(long)]
        cell: String,
    },
    /// Print the graded decomposition matrix.
    Decomp { file: String },
    /// Truncate by an idempotent such as "e0 + e1".
    Truncate {
        file: String,
        #[arg(long)]
        idempotent: String,
        /// Also certify the truncated basis as cellular using the file's involution.
        #[arg(long)]
        involution: bool,
    },
    /// Check that the even parts of the heredity data are heredity data for the
    /// even-product subalgebra.
    Conform { file: String },
    /// Pass to a basic algebra and audit the module correspondence.
    Basicize { file: String },
    /// Graded dimensions and cell sizes.
    Info { file: String },
    /// Emit a catalog algebra.
    Gen {
        #[command(subcommand)]
        family: Family,
        /// "q" for the rationals, "gf:P" for a prime field
        #[arg(long, global = true, default_value = "q")]
        field: String,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// Extended zigzag algebra on vertices 0..=l
    Zigzag {
        #[arg(long)]
        l: usize,
    },
    /// Matrix superalgebra M(n|m)
    Matrix {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
}

/// Errors that mean the input could not be understood, as opposed to a failed check.
fn is_malformed(e: &Error) -> bool {
    matches!(
        e,
        Error::NotPrime(_)
            | Error::MixedFields(..)
            | Error::Shape(_)
            | Error::Parse(_)
            | Error::MalformedAlgebra(_)
            | Error::IndexOutOfRange { .. }
            | Error::UnknownLabel(_)
            | Error::TooLarge(_)
            | Error::NotPartialOrder(_)
            | Error::MalformedHeredity(_)
            | Error::IncompleteInvolution(_)
            | Error::InvalidParameters(_)
            | Error::UnknownArrow(_)
            | Error::NotFiniteDimensional(_)
    )
}

enum Failure {
    Malformed(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if is_malformed(&e) {
            Failure::Malformed(e.to_string())
        } else {
            Failure::Failed(e.to_string())
        }
    }
}

type Outcome = Result<bool, Failure>;

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn load(&mut self, file: &str) -> Result<Description, Failure> {
        let mut text = String::new();
        if file == "-" {
            self.stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::Malformed(format!("cannot read standard input: {e}")))?;
        } else {
            text = std::fs::read_to_string(file)
                .map_err(|e| Failure::Malformed(format!("cannot read {file}: {e}")))?;
        }
        Ok(format::parse(&text)?)
    }

    fn load_based(&mut self, file: &str) -> Result<(Description, BasedAlgebra), Failure> {
        let d = self.load(file)?;
        let data = d
            .heredity
            .clone()
            .ok_or_else(|| Failure::Malformed(format!("{file} has no heredity block")))?;
        match BasedAlgebra::analyze(d.algebra.clone(), data)? {
            Ok(b) => Ok((d, b)),
            Err(report) => Err(Failure::Failed(report.to_string())),
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        let _ = writeln!(self.out, "{}", s.as_ref());
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{text}")
            } else {
                write!(stdout, "{text}")
            };
            return code;
        }
    };
    let mut io = Io { stdin, out: stdout };
    match dispatch(cli.command, &mut io) {
        Ok(true) => EXIT_PASS,
        Ok(false) => EXIT_FAIL,
        Err(Failure::Failed(msg)) => {
            let _ = writeln!(stderr, "verification failed: {msg}");
            EXIT_FAIL
        }
        Err(Failure::Malformed(msg)) => {
            let _ = writeln!(stderr, "malformed input: {msg}");
            EXIT_MALFORMED
        }
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Outcome {
    match command {
        Command::Validate { file } => validate(io, &file),
        Command::Verify { file } => verify(io, &file),
        Command::Gram { file, cell } => gram(io, &file, &cell),
        Command::Decomp { file } => {
            let (_, b) = io.load_based(&file)?;
            let d = decomposition_matrix(&b)?;
            io.line(format!("columns: {}", d.col_labels.join(" ")));
            let _ = write!(io.out, "{d}");
            Ok(true)
        }
        Command::Truncate {
            file,
            idempotent,
            involution,
        } => truncate_cmd(io, &file, &idempotent, involution),
        Command::Conform { file } => conform(io, &file),
        Command::Basicize { file } => basicize_cmd(io, &file),
        Command::Info { file } => info(io, &file),
        Command::Gen { family, field } => {
            let field: Field = field.parse()?;
            let entry = match family {
                Family::Zigzag { l } => extended_zigzag(l, field)?,
                Family::Matrix { n, m } => matrix_superalgebra(n, m, field)?,
            };
            let _ = write!(io.out, "{}", format::serialize(&Description::from(&entry)));
            Ok(true)
        }
    }
}

fn validate(io: &mut Io<'_>, file: &str) -> Outcome {
    let d = io.load(file)?;
    let report = d.algebra.validate();
    if report.is_valid() {
        io.line(format!("valid algebra of dimension {}", d.algebra.dim()));
    } else {
        for v in &report.violations {
            io.line(format!("violation: {v}"));
        }
    }
    Ok(report.is_valid())
}

fn verify(io: &mut Io<'_>, file: &str) -> Outcome {
    let d = io.load(file)?;
    let data = d
        .heredity
        .clone()
        .ok_or_else(|| Failure::Malformed(format!("{file} has no heredity block")))?;
    let report = BasedAlgebra::verify(&d.algebra, &data)?;
    io.line(report.to_string());
    if !report.passed() {
        return Ok(false);
    }
    let b = BasedAlgebra::new(d.algebra.clone(), data)?;
    let mut ok = true;
    if let Some(tau) = &d.involution {
        let r = b.verify_anti_involution(tau)?;
        io.line(format!(
            "involution: anti-multiplicative {}, involutive {}, homogeneous {}, standard {}, cellular {}",
            r.anti_multiplicative, r.involutive, r.homogeneous, r.standard, r.cellular
        ));
        if let Some(w) = &r.witness {
            io.line(format!("involution witness: {w}"));
        }
        ok &= r.anti_multiplicative && r.involutive;
    }
    Ok(ok)
}

fn gram(io: &mut Io<'_>, file: &str, cell: &str) -> Outcome {
    let (_, b) = io.load_based(file)?;
    let i = b
        .poset()
        .index_of(cell)
        .ok_or_else(|| Failure::Malformed(format!("unknown cell {cell:?}")))?;
    let g = b.gram_form(i)?;
    let alg = b.algebra();
    let c = b.data().cell(i);
    let xs: Vec<String> = c.x.iter().map(|v| alg.render(v)).collect();
    io.line(format!("rows y, columns x: {}", xs.join(" | ")));
    for (r, y) in c.y.iter().enumerate() {
        let row: Vec<String> = g.row(r).iter().map(ToString::to_string).collect();
        io.line(format!("{}: [{}]", alg.render(y), row.join(", ")));
    }
    Ok(true)
}

fn truncate_cmd(io: &mut Io<'_>, file: &str, expr: &str, with_involution: bool) -> Outcome {
    let (d, b) = io.load_based(file)?;
    let tau = if with_involution {
        Some(
            d.involution
                .as_ref()
                .ok_or_else(|| Failure::Malformed(format!("{file} has no involution block")))?,
        )
    } else {
        None
    };
    let e: AlgebraElement = b.algebra().parse_element(expr)?;
    let ai = classify_idempotent(&b, &e)?;
    let labels = |v: &[usize]| -> String {
        v.iter().map(|&i| b.poset().label(i)).collect::<Vec<_>>().join(" ")
    };
    io.line(format!("adapted: {}", ai.adapted));
    io.line(format!("strongly adapted: {}", ai.strongly_adapted));
    if let Some(w) = &ai.witness {
        io.line(format!("witness: {w}"));
    }
    if !ai.adapted {
        return Ok(false);
    }
    io.line(format!("surviving cells: {}", labels(&ai.cells)));
    io.line(format!("surviving simples: {}", labels(&surviving_simples(&b, &ai)?)));
    let t = truncate(&b, &ai, tau)?;
    io.line(format!(
        "eAe: dimension {}, graded dimension {}",
        t.algebra.dim(),
        t.algebra.graded_dimension()
    ));
    io.line(format!("standard basis: {}", if t.standard.passed { "certified" } else { "failed" }));
    if let Some(w) = &t.standard.witness {
        io.line(format!("standard basis witness: {w}"));
    }
    let cellular_ok = match &t.cellular {
        CellularCertificate::Certified => {
            io.line("cellular: certified");
            true
        }
        CellularCertificate::NotRequested => true,
        CellularCertificate::Withheld(why) => {
            io.line(format!("cellular: withheld ({why})"));
            false
        }
    };
    Ok(t.standard.passed && cellular_ok)
}

fn conform(io: &mut Io<'_>, file: &str) -> Outcome {
    let (d, b) = io.load_based(file)?;
    let c = conformity_check(&b)?;
    io.line(format!("even-product subalgebra: dimension {}", c.basis.len()));
    io.line(format!("closed under multiplication: {}", c.closed));
    if let Some(sub) = &c.subalgebra {
        io.line(format!("graded dimension: {}", sub.graded_dimension()));
    }
    if let Some(w) = &c.witness {
        io.line(format!("witness: {w}"));
    }
    io.line(format!("conforming: {}", c.passed()));
    let mut ok = c.passed();
    if let Some(g) = &d.bigrading {
        let r = z2z2_check(&b, g)?;
        io.line(format!("bigrading conditions: {}", r.passed));
        if let Some(w) = &r.witness {
            io.line(format!("bigrading witness: {w}"));
        }
        if let Some(x) = r.cross_validated {
            io.line(format!("even-product subalgebra equals A_(0,0): {x}"));
        }
        ok &= r.passed;
    }
    Ok(ok)
}

fn basicize_cmd(io: &mut Io<'_>, file: &str) -> Outcome {
    let (_, b) = io.load_based(file)?;
    let r = basicize(&b)?;
    let alg = b.algebra();
    for (i, p) in r.primitives.iter().enumerate() {
        let terms: Vec<String> = p.terms().map(|(k, c)| format!("{}:{}", alg.label(k), c)).collect();
        io.line(format!("e'_{} = {{{}}}", b.poset().label(i), terms.join(", ")));
    }
    io.line(format!("odd part in J(A): {}", r.odd_in_radical));
    let _ = write!(io.out, "{}", r.audit);
    io.line("fAf:");
    let reduced = r.based();
    let desc = Description {
        algebra: reduced.algebra().clone(),
        heredity: Some(reduced.data().clone()),
        involution: None,
        bigrading: None,
    };
    let _ = write!(io.out, "{}", format::serialize(&desc));
    Ok(r.audit.passed())
}

fn info(io: &mut Io<'_>, file: &str) -> Outcome {
    let d = io.load(file)?;
    let alg = &d.algebra;
    io.line(format!("field: {}", format::field_descriptor(alg.field())));
    io.line(format!("dimension: {}", alg.dim()));
    io.line(format!("graded dimension: {}", alg.graded_dimension()));
    io.line(format!("unital: {}", alg.unit().is_some()));
    let Some(data) = d.heredity.clone() else {
        return Ok(true);
    };
    let poset = data.poset().clone();
    match BasedAlgebra::analyze(alg.clone(), data)? {
        Ok(b) => {
            for i in poset.linear_extension() {
                let c = b.data().cell(i);
                io.line(format!(
                    "cell {}: |X| = {}, |Y| = {}, Delta = {}, Delta^op = {}, L = {}",
                    poset.label(i),
                    c.x.len(),
                    c.y.len(),
                    b.standard_graded_dim(i),
                    b.costandard_graded_dim(i),
                    radical_and_simple(&b, i)?.module.graded_dim()
                ));
            }
            Ok(true)
        }
        Err(report) => {
            io.line(report.to_string());
            Ok(false)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut stdin = input.as_bytes();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("qhalg").chain(args.iter().copied());
        let code = run(argv, &mut stdin, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gen_then_verify() {
        let (code, text, _) = call(&["gen", "zigzag", "--l", "3"], "");
        assert_eq!(code, 0);
        let (code, out, _) = call(&["verify", "-"], &text);
        assert_eq!(code, 0, "{out}");
    }

    #[test]
    fn matrix_decomp() {
        let (_, text, _) = call(&["gen", "matrix", "--n", "2", "--m", "1"], "");
        let (code, out, _) = call(&["decomp", "-"], &text);
        assert_eq!(code, 0);
        assert!(out.ends_with("[1]\n"), "{out}");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["frobnicate"], "").0, 2);
        assert_eq!(call(&["verify", "/nonexistent/file"], "").0, 2);
        assert_eq!(call(&["verify", "-"], "not json").0, 2);
        assert_eq!(call(&["gen", "zigzag", "--l", "0"], "").0, 2);
        assert_eq!(call(&["gen", "matrix", "--n", "1", "--m", "1", "--field", "gf:6"], "").0, 2);
        assert_eq!(call(&["--help"], "").0, 0);
    }

    #[test]
    fn subcommands_on_zigzag() {
        let (_, text, _) = call(&["gen", "zigzag", "--l", "2", "--field", "gf:2"], "");
        assert_eq!(call(&["validate", "-"], &text).0, 0);
        let (code, out, _) = call(&["gram", "-", "--cell", "1"], &text);
        assert_eq!(code, 0);
        assert!(out.contains("e1: [1, 0]"), "{out}");
        assert_eq!(call(&["gram", "-", "--cell", "9"], &text).0, 2);
        let (code, out, _) = call(&["truncate", "-", "--idempotent", "e0 + e1", "--involution"], &text);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("surviving simples: 0 1"));
        assert_eq!(call(&["truncate", "-", "--idempotent", "e0 + a0_1"], &text).0, 1);
        assert_eq!(call(&["truncate", "-", "--idempotent", "e0 +"], &text).0, 2);
        let (code, out, _) = call(&["conform", "-"], &text);
        assert_eq!(code, 0, "{out}");
        let (code, out, _) = call(&["basicize", "-"], &text);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("e'_0 = {e0:1}"));
        let (code, out, _) = call(&["info", "-"], &text);
        assert_eq!(code, 0);
        assert!(out.contains("cell 2: |X| = 2"), "{out}");
    }
}
