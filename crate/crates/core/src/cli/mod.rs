//! Command dispatch for the `linkdyn` binary.
//!
//! Exit codes: 0 yes or success, 1 no or failed verification, 2 excluded case, 3 input error.

mod file;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

pub use file::{parse, DiagramFile, FileError, FileMode};

use crate::braiding::{
    brute_force_exists, construct, direct_sum, verify, BraidingError, BraidingMatrix,
    OracleOutcome, VerifyMode,
};
use crate::cycles::{enumerate_cycles, genus_gcd, invariants, level0_vertices};
use crate::diagram::classify_components;
use crate::existence::{
    check_affine, check_finite, excluded_case_matrix, selflink_genus, selflink_order_constraint,
    Decision, ExistenceReport,
};
use crate::presentation::emit_presentation;
use crate::realization::{
    a4_realizable_zp2, a4_solve_brute, max_diagram_note_zp2, realize_free, realize_mod_p,
    LinkingDatum,
};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_EXCLUDED: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "linkdyn",
    version,
    about = "Linkable Dynkin diagrams and their braiding matrices"
)]
pub struct Cli {
    /// Print only the machine-readable serialization.
    #[arg(long, global = true)]
    pub machine: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct ConstructArgs {
    /// Root order; defaults to the order chosen by the existence check.
    #[arg(long)]
    pub d: Option<u64>,
    /// Start vertex of the diagonal propagation (1-based).
    #[arg(long, default_value_t = 1)]
    pub start: usize,
}

#[derive(Debug, Clone, Args)]
pub struct DatumArgs {
    #[command(flatten)]
    pub construct: ConstructArgs,
    /// Braiding matrix file to realize instead of constructing one.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    /// Realize over (Z/p)^s instead of Z^s.
    #[arg(long)]
    pub p: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a diagram file and print it normalized.
    Validate { file: PathBuf },
    /// Enumerate cycles with weights, lengths, genera and Level 0 vertices.
    Cycles { file: PathBuf },
    /// Decide whether a linkable braiding matrix exists.
    Check { file: PathBuf },
    /// Build a braiding matrix.
    Construct {
        file: PathBuf,
        #[command(flatten)]
        args: ConstructArgs,
    },
    /// Check a braiding matrix against a diagram.
    Verify {
        file: PathBuf,
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Exhaustive search over root orders up to a bound.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = 30)]
        nmax: u64,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Realize a braiding matrix by a linking datum.
    Realize {
        file: PathBuf,
        #[command(flatten)]
        args: DatumArgs,
    },
    /// A_4 braiding matrices over (Z/p)^2.
    A4 {
        #[arg(long)]
        p: u64,
    },
    /// Emit the presentation of the associated Hopf algebra.
    Present {
        file: PathBuf,
        #[command(flatten)]
        args: DatumArgs,
        /// Linking datum file to present instead of realizing one.
        #[arg(long, conflicts_with_all = ["matrix", "p"])]
        datum: Option<PathBuf>,
    },
    /// Genus and order constraints of linkings inside one component.
    Selflink { file: PathBuf },
    /// Direct sum of the constructed matrices of several diagrams.
    Sum {
        #[arg(required = true, num_args = 1..)]
        files: Vec<PathBuf>,
        #[arg(long)]
        homogeneous: bool,
    },
}

/// Report text and exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn new(text: String, code: i32) -> Self {
        Outcome { text, code }
    }

    fn input(message: impl std::fmt::Display) -> Self {
        Outcome {
            text: format!("error: {message}\n"),
            code: EXIT_INPUT,
        }
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_YES };
            Outcome::new(e.render().to_string(), code)
        }
    }
}

fn read(path: &Path) -> Result<String, Outcome> {
    std::fs::read_to_string(path).map_err(|e| Outcome::input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<DiagramFile, Outcome> {
    parse(&read(path)?).map_err(|e| Outcome::input(format!("{}: {e}", path.display())))
}

fn load_matrix(path: &Path) -> Result<BraidingMatrix, Outcome> {
    BraidingMatrix::from_text(&read(path)?)
        .map_err(|e| Outcome::input(format!("{}: {e}", path.display())))
}

pub fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Cycles { file } => cycles(file),
        Command::Check { file } => check(file),
        Command::Construct { file, args } => construct_cmd(file, args, cli.machine),
        Command::Verify { file, matrix } => verify_cmd(file, matrix),
        Command::Oracle {
            file,
            nmax,
            threads,
        } => oracle(file, *nmax, *threads, cli.machine),
        Command::Realize { file, args } => realize(file, args, cli.machine),
        Command::A4 { p } => a4(*p, cli.machine),
        Command::Present { file, args, datum } => {
            present(file, args, datum.as_deref(), cli.machine)
        }
        Command::Selflink { file } => selflink(file),
        Command::Sum { files, homogeneous } => sum(files, *homogeneous, cli.machine),
    };
    result.unwrap_or_else(|o| o)
}

fn validate(path: &Path) -> Result<Outcome, Outcome> {
    let f = load(path)?;
    let mut out = String::from("valid\n");
    for (vs, ty) in classify_components(&f.diagram) {
        let v: Vec<String> = vs.iter().map(|v| (v + 1).to_string()).collect();
        writeln!(out, "component {{{}}}: {ty}", v.join(",")).unwrap();
    }
    out.push_str(&f.serialize());
    Ok(Outcome::new(out, EXIT_YES))
}

fn cycles(path: &Path) -> Result<Outcome, Outcome> {
    let f = load(path)?;
    let d = &f.diagram;
    let mode = f.mode.genus_mode();
    let all = enumerate_cycles(d);
    let mut out = format!("cycles: {}\n", all.len());
    for c in &all {
        let inv = invariants(d, c, mode).map_err(Outcome::input)?;
        let lvl: Vec<String> = level0_vertices(d, c)
            .iter()
            .map(|v| (v + 1).to_string())
            .collect();
        writeln!(
            out,
            "{c}: w2 = {}, w3 = {}, length = {}, genus = {}, level 0 = {{{}}}",
            inv.w2,
            inv.w3,
            inv.length,
            inv.genus,
            lvl.join(",")
        )
        .unwrap();
    }
    let g = genus_gcd(d, mode).map_err(Outcome::input)?;
    writeln!(out, "genus gcd: {g}").unwrap();
    Ok(Outcome::new(out, EXIT_YES))
}

fn decide(f: &DiagramFile) -> Result<ExistenceReport, Outcome> {
    let r = match f.mode {
        FileMode::Finite => check_finite(&f.diagram, &f.field),
        FileMode::Affine => check_affine(&f.diagram, &f.field),
        FileMode::SelfLink => {
            return Err(Outcome::input(
                "self-linked files are handled by `selflink`",
            ))
        }
    };
    r.map_err(Outcome::input)
}

fn decision_code(d: Decision) -> i32 {
    match d {
        Decision::Yes => EXIT_YES,
        Decision::No => EXIT_NO,
        Decision::Excluded => EXIT_EXCLUDED,
    }
}

fn check(path: &Path) -> Result<Outcome, Outcome> {
    let f = load(path)?;
    let r = decide(&f)?;
    Ok(Outcome::new(r.to_string(), decision_code(r.decision)))
}

/// Builds the matrix for a file, or the outcome explaining why there is none.
fn build(f: &DiagramFile, args: &ConstructArgs, machine: bool) -> Result<BraidingMatrix, Outcome> {
    if args.start == 0 {
        return Err(Outcome::input("--start is 1-based"));
    }
    if f.mode == FileMode::SelfLink {
        return Err(Outcome::input(BraidingError::SelfLinkMode));
    }
    match construct(
        &f.diagram,
        &f.field,
        f.mode.genus_mode(),
        args.d,
        args.start - 1,
    ) {
        Ok(b) => Ok(b),
        Err(BraidingError::NotConstructible(report)) => Err(Outcome::new(
            format!("no braiding matrix exists:\n{report}"),
            EXIT_NO,
        )),
        Err(BraidingError::Excluded(shape)) => {
            let mut out = format!("excluded case {shape}\n");
            let d = args
                .d
                .or_else(|| f.field.smallest_prime_above_3())
                .unwrap_or(5);
            if f.diagram == shape.diagram() {
                let m =
                    excluded_case_matrix(shape, d, shape.parameters()).map_err(Outcome::input)?;
                if machine {
                    return Err(Outcome::new(m.to_text(), EXIT_EXCLUDED));
                }
                out.push_str("explicit matrix:\n");
                out.push_str(&m.to_text());
            } else {
                out.push_str("explicit matrix available for the numbering with components 1-2, 3-4 (long root at 2 and 4) linked 1-3 and 2-4\n");
            }
            Err(Outcome::new(out, EXIT_EXCLUDED))
        }
        Err(e) => Err(Outcome::input(e)),
    }
}

fn construct_cmd(path: &Path, args: &ConstructArgs, machine: bool) -> Result<Outcome, Outcome> {
    let f = load(path)?;
    let b = build(&f, args, machine)?;
    if machine {
        return Ok(Outcome::new(b.to_text(), EXIT_YES));
    }
    let mut out = format!(
        "root order: {}\nstart vertex: {}\n",
        b.root_order(),
        args.start
    );
    out.push_str(&b.to_string());
    Ok(Outcome::new(out, EXIT_YES))
}

fn verify_mode(mode: FileMode) -> VerifyMode {
    match mode {
        FileMode::Finite => VerifyMode::Finite,
        FileMode::Affine => VerifyMode::AffineHomogeneous,
        FileMode::SelfLink => VerifyMode::Basic,
    }
}

fn verify_cmd(path: &Path, matrix: &Path) -> Result<Outcome, Outcome> {
    let f = load(path)?;
    let b = load_matrix(matrix)?;
    let r = verify(&b, &f.diagram, verify_mode(f.mode));
    Ok(Outcome::new(
        r.to_string(),
        if r.passed() { EXIT_YES } else { EXIT_NO },
    ))
}

fn oracle(
    path: &Path,
    nmax: u64,
    threads: Option<usize>,
    machine: bool,
) -> Result<Outcome, Outcome> {
    let f = load(path)?;
    if f.mode == FileMode::SelfLink {
        return Err(Outcome::input(BraidingError::SelfLinkMode));
    }
    let r = brute_force_exists(&f.diagram, &f.field, f.mode.genus_mode(), nmax, threads)
        .map_err(Outcome::input)?;
    let code = if r.found() { EXIT_YES } else { EXIT_NO };
    let text = match (&r, machine) {
        (OracleOutcome::Found { matrix, .. }, true) => matrix.to_text(),
        _ => r.to_string(),
    };
    Ok(Outcome::new(text, code))
}

fn datum_for(f: &DiagramFile, args: &DatumArgs) -> Result<LinkingDatum, Outcome> {
    let b = match &args.matrix {
        Some(m) => load_matrix(m)?,
        None => build(f, &args.construct, false)?,
    };
    let none = BTreeMap::new();
    let r = match args.p {
        Some(p) => realize_mod_p(&b, &f.diagram, p, &none),
        None => realize_free(&b, &f.diagram, &none),
    };
    r.map_err(|e| Outcome::new(format!("not realizable: {e}\n"), EXIT_NO))
}

fn realize(path: &Path, args: &DatumArgs, machine: bool) -> Result<Outcome, Outcome> {
    let f = load(path)?;
    let datum = datum_for(&f, args)?;
    if machine {
        return Ok(Outcome::new(datum.to_text(), EXIT_YES));
    }
    let mut out = format!("linking datum over {}\n", datum.group);
    out.push_str(&datum.to_text());
    Ok(Outcome::new(out, EXIT_YES))
}

fn a4(p: u64, machine: bool) -> Result<Outcome, Outcome> {
    let r = a4_realizable_zp2(p).map_err(Outcome::input)?;
    let code = if r.realizable { EXIT_YES } else { EXIT_NO };
    if machine {
        let mut out = String::new();
        for (n, m, k, l) in a4_solve_brute(p).map_err(Outcome::input)? {
            writeln!(out, "{n} {m} {k} {l}").unwrap();
        }
        return Ok(Outcome::new(out, code));
    }
    let mut out = r.to_string();
    writeln!(out, "{}", max_diagram_note_zp2(p)).unwrap();
    Ok(Outcome::new(out, code))
}

fn present(
    path: &Path,
    args: &DatumArgs,
    datum: Option<&Path>,
    machine: bool,
) -> Result<Outcome, Outcome> {
    let f = load(path)?;
    let datum = match datum {
        Some(dp) => {
            let d = LinkingDatum::from_text(&read(dp)?)
                .map_err(|e| Outcome::input(format!("{}: {e}", dp.display())))?;
            if d.diagram != f.diagram {
                return Err(Outcome::input(format!(
                    "{}: datum diagram differs from {}",
                    dp.display(),
                    path.display()
                )));
            }
            d
        }
        None => datum_for(&f, args)?,
    };
    let p = emit_presentation(&datum).map_err(Outcome::input)?;
    let text = if machine {
        p.to_json() + "\n"
    } else {
        p.to_string()
    };
    Ok(Outcome::new(text, EXIT_YES))
}

fn selflink(path: &Path) -> Result<Outcome, Outcome> {
    let f = load(path)?;
    if f.mode != FileMode::SelfLink {
        return Err(Outcome::input(
            "`selflink` needs a file with `mode selflink`",
        ));
    }
    let d = &f.diagram;
    let mut out = String::new();
    let mut code = EXIT_YES;
    for (i, j) in d.linkable_pairs() {
        let (a_ij, a_ji) = (d.a(i, j), d.a(j, i));
        let line = if a_ij != 0 {
            selflink_order_constraint(a_ij, a_ji)
                .map(|c| format!("neighbouring, ord(b_{0}{0}) divides {c}", i + 1))
        } else {
            selflink_genus(d, i, j).map(|g| format!("genus {g}"))
        };
        match line {
            Ok(s) => writeln!(out, "pair {} {}: {s}", i + 1, j + 1).unwrap(),
            Err(e) => {
                code = EXIT_NO;
                writeln!(out, "pair {} {}: {e}", i + 1, j + 1).unwrap();
            }
        }
    }
    if out.is_empty() {
        out.push_str("no linkable pairs\n");
    }
    Ok(Outcome::new(out, code))
}

fn sum(paths: &[PathBuf], homogeneous: bool, machine: bool) -> Result<Outcome, Outcome> {
    let mut parts = Vec::with_capacity(paths.len());
    let mut mode = None;
    for path in paths {
        let f = load(path)?;
        if *mode.get_or_insert(f.mode) != f.mode {
            return Err(Outcome::input(format!(
                "{}: all files must share one mode",
                path.display()
            )));
        }
        let b = build(&f, &ConstructArgs { d: None, start: 1 }, false)?;
        parts.push((b, f.diagram));
    }
    let (b, union) = direct_sum(&parts, homogeneous).map_err(Outcome::input)?;
    let r = verify(&b, &union, verify_mode(mode.expect("at least one file")));
    let code = if r.passed() { EXIT_YES } else { EXIT_NO };
    if machine {
        return Ok(Outcome::new(b.to_text(), code));
    }
    let mut out = format!("root order: {}\n", b.root_order());
    out.push_str(&b.to_string());
    out.push_str(&r.to_string());
    if !out.ends_with('\n') {
        out.push('\n');
    }
    Ok(Outcome::new(out, code))
}
