//! Command-line front end.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::algebra::{
    envelope_dimension, ideal_search_exhaustive, is_simple_closure, isomorphism_search, Algebra,
    MAX_IDEAL_SEARCH_DIM,
};
use crate::catalog::{self, Certificate, WITNESS_NAMES};
use crate::error::{Error, Result};
use crate::exactmath::{Field, Scalar};
use crate::format::{parse_algebra_file, parse_matrix_file, table_summary, write_algebra_file};
use crate::isotopy::{express_as_right_mult, principal_isotope, r_mult_report};
use crate::nilrank::{nil_rank_bruteforce, nil_rank_exact_c, nil_rank_mod_p, NilReport};

#[derive(Parser, Debug)]
#[command(
    name = "isotopes",
    version,
    about = "Exact tools for structure-constant algebras and their isotopes"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariants of an algebra file.
    Analyze {
        file: PathBuf,
        /// Prime used for brute-force nil-rank of rational tables.
        #[arg(long, default_value_t = 5)]
        p: u64,
    },
    /// Right multiplication operator of an element.
    Rmul {
        file: PathBuf,
        /// Coordinates, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        elem: String,
    },
    /// Writes the principal isotope A^(f,g); g defaults to f.
    Isotope {
        file: PathBuf,
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        g: Option<PathBuf>,
        #[arg(short, long)]
        o: PathBuf,
    },
    /// Finds g with R_g equal to the given matrix.
    ExpressRmul {
        file: PathBuf,
        #[arg(long)]
        mat: PathBuf,
    },
    /// Lexicographically first isomorphism between two algebras over F_p.
    IsoSearch { a: PathBuf, b: PathBuf },
    /// Nil-rank by enumeration; rational tables are reduced mod P.
    Nilrank {
        file: PathBuf,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Runs a verification pipeline.
    Witness {
        /// lemma1, lemma6, lemma10, lemma11, theorem1, theorem2, prop1 or prop2
        name: String,
        /// ρ for lemma11, e.g. `1/2`
        #[arg(long, allow_hyphen_values = true)]
        rho: Option<String>,
        /// Dimension parameter for prop1/prop2
        #[arg(long)]
        n: Option<usize>,
        /// `α,β,γ` for theorem1
        #[arg(long, allow_hyphen_values = true)]
        abg: Option<String>,
        /// `rational` or `gf<p>` / `gf:<p>`.
        #[arg(long, default_value = "rational")]
        field: String,
        /// Algebra file for lemma1 (default J2).
        #[arg(long)]
        algebra: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true, default_value = "2")]
        sigma: String,
        #[arg(long, allow_hyphen_values = true, default_value = "3")]
        tau: String,
    },
}

/// Parses `args` (including the program name), runs the command and writes
/// its report. Returns the process exit code: 0 on success, 1 when a
/// witness certificate fails, 2 on errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{e}");
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn load(path: &Path) -> Result<Algebra> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidParams(format!("{}: {e}", path.display())))?;
    parse_algebra_file(&text)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidParams(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: impl std::fmt::Display) -> Result<()> {
    writeln!(out, "{text}").map_err(|e| Error::InvalidParams(format!("write failed: {e}")))
}

fn parse_field(s: &str) -> Result<Field> {
    let s = s.trim();
    if let Some(p) = s
        .strip_prefix("gf")
        .map(|r| r.trim_start_matches([':', ' ']))
    {
        return format!("gf {p}").parse();
    }
    s.parse()
}

fn parse_list(field: Field, s: &str) -> Result<Vec<Scalar>> {
    s.split(',').map(|v| field.parse_scalar(v)).collect()
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    match &cli.command {
        Command::Analyze { file, p } => analyze(&load(file)?, *p, cli.json, out),
        Command::Rmul { file, elem } => {
            let a = load(file)?;
            let e = a.element(parse_list(a.field(), elem)?)?;
            let r = r_mult_report(&e);
            if cli.json {
                emit(
                    out,
                    json!({
                        "element": e.to_string(),
                        "matrix": r.matrix.to_string(),
                        "determinant": r.determinant.to_string(),
                        "invertible": r.invertible,
                    }),
                )?;
            } else {
                emit(
                    out,
                    format!(
                        "element: {e}\nR: {}\ndet: {}\ninvertible: {}",
                        r.matrix,
                        r.determinant,
                        yes_no(r.invertible)
                    ),
                )?;
            }
            Ok(true)
        }
        Command::Isotope { file, f, g, o } => {
            let a = load(file)?;
            let fm = parse_matrix_file(&read(f)?, a.field())?;
            let gm = match g {
                Some(g) => parse_matrix_file(&read(g)?, a.field())?,
                None => fm.clone(),
            };
            let iso = principal_isotope(&a, &fm, &gm)?;
            fs::write(o, write_algebra_file(&iso))
                .map_err(|e| Error::InvalidParams(format!("{}: {e}", o.display())))?;
            emit(
                out,
                format!("wrote {}\n{}", o.display(), table_summary(&iso)),
            )?;
            Ok(true)
        }
        Command::ExpressRmul { file, mat } => {
            let a = load(file)?;
            let m = parse_matrix_file(&read(mat)?, a.field())?;
            let sol = express_as_right_mult(&a, &m);
            if cli.json {
                emit(
                    out,
                    json!({
                        "element": sol.as_ref().map(|s| s.element.to_string()),
                        "kernel_dim": sol.as_ref().map(|s| s.kernel_dim),
                    }),
                )?;
            } else {
                match sol {
                    Some(s) if s.kernel_dim == 0 => emit(out, format!("g = {}", s.element))?,
                    Some(s) => emit(
                        out,
                        format!(
                            "g = {} (one of a family; kernel dimension {})",
                            s.element, s.kernel_dim
                        ),
                    )?,
                    None => emit(out, "not a right multiplication operator")?,
                }
            }
            Ok(true)
        }
        Command::IsoSearch { a, b } => {
            let (a, b) = (load(a)?, load(b)?);
            match isomorphism_search(&a, &b)? {
                Some(m) => emit(out, format!("isomorphism: {m}"))?,
                None => emit(out, "no isomorphism")?,
            }
            Ok(true)
        }
        Command::Nilrank { file, p } => {
            let a = load(file)?;
            let report = match (a.field().modulus(), p) {
                (Some(_), None) => nil_rank_bruteforce(&a)?,
                (Some(m), Some(p)) if m == *p => nil_rank_bruteforce(&a)?,
                (Some(m), Some(p)) => {
                    return Err(Error::InvalidParams(format!(
                        "table is over F_{m}, not F_{p}"
                    )))
                }
                (None, p) => nil_rank_mod_p(&a, p.unwrap_or(5))?,
            };
            emit(out, nil_text(&report, cli.json))?;
            Ok(true)
        }
        Command::Witness {
            name,
            rho,
            n,
            abg,
            field,
            algebra,
            sigma,
            tau,
        } => {
            let field = parse_field(field)?;
            let cert = witness(
                name,
                field,
                rho.as_deref(),
                *n,
                abg.as_deref(),
                algebra.as_deref(),
                sigma,
                tau,
            )?;
            if cli.json {
                emit(out, cert.to_json())?;
            } else {
                emit(out, cert.to_text())?;
            }
            Ok(cert.verdict())
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn witness(
    name: &str,
    field: Field,
    rho: Option<&str>,
    n: Option<usize>,
    abg: Option<&str>,
    algebra: Option<&Path>,
    sigma: &str,
    tau: &str,
) -> Result<Certificate> {
    match name {
        "lemma1" => {
            let a = match algebra {
                Some(path) => load(path)?,
                None => catalog::j2(field),
            };
            let f = a.field();
            catalog::witness_lemma1(&a, &f.parse_scalar(sigma)?, &f.parse_scalar(tau)?)
        }
        "lemma6" => Ok(catalog::witness_lemma6(field)),
        "lemma10" => Ok(catalog::witness_lemma10(field)),
        "lemma11" => catalog::witness_lemma11(&field.parse_scalar(rho.unwrap_or("1"))?),
        "theorem1" => {
            let v = parse_list(field, abg.unwrap_or("1,1,0"))?;
            let [a, b, g]: [Scalar; 3] = v
                .try_into()
                .map_err(|_| Error::InvalidParams("--abg takes three values".into()))?;
            catalog::witness_theorem1(&a, &b, &g)
        }
        "theorem2" => Ok(catalog::witness_theorem2(field)),
        "prop1" => catalog::witness_prop1(n.unwrap_or(2)),
        "prop2" => catalog::witness_prop2(n.unwrap_or(2)),
        other => Err(Error::InvalidParams(format!(
            "unknown witness `{other}`; expected one of {}",
            WITNESS_NAMES.join(", ")
        ))),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn method_tag(r: &NilReport) -> &'static str {
    match r.method {
        crate::nilrank::NilMethod::ExactCFamily => "exact C(α,β,γ) criterion",
        crate::nilrank::NilMethod::BruteForceFp => "brute force",
    }
}

fn nil_text(r: &NilReport, as_json: bool) -> String {
    let field = r.witnesses.first().map(|w| w.algebra().field());
    if as_json {
        return json!({
            "rank": r.rank,
            "method": r.method,
            "closure_caveat": r.closure_caveat,
            "field": field.map(|f| f.to_string()),
            "witnesses": r.witnesses.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })
        .to_string();
    }
    let mut s = format!("nil-rank: {} ({}", r.rank, method_tag(r));
    match field.and_then(|f| f.modulus()) {
        Some(p) => s += &format!(" over F_{p}"),
        None if field.is_some() => s += " over Q",
        None => {}
    }
    if r.closure_caveat {
        s += "; only points over the ground field were examined";
    }
    s += ")";
    for w in &r.witnesses {
        s += &format!("\n  {w}");
    }
    s
}

/// Reads `C(α, β, γ)` directly when the file's basis already has the form
/// `(1, x, y)` with `x^2 = y^2 = 0` and `α ≠ 0`.
fn as_c_family(a: &Algebra) -> Option<(Scalar, Scalar, Scalar)> {
    if a.dim() != 3 || !a.is_commutative() || a.find_unit()? != a.basis(0) {
        return None;
    }
    let (x, y) = (a.basis(1), a.basis(2));
    if !x.square().is_zero() || !y.square().is_zero() {
        return None;
    }
    let c = x.mul(&y).ok()?.into_coords();
    if c[0].is_zero() {
        return None;
    }
    let [al, be, ga]: [Scalar; 3] = c.try_into().ok()?;
    Some((al, be, ga))
}

fn analyze(a: &Algebra, p: u64, as_json: bool, out: &mut dyn Write) -> Result<bool> {
    let n = a.dim();
    let unit = a.find_unit();
    let jordan = match a.is_jordan() {
        Ok(b) => yes_no(b).to_string(),
        Err(e) => format!("not decided ({e})"),
    };
    let env = envelope_dimension(a);
    let simple = !a.has_zero_multiplication() && env == n * n;
    debug_assert_eq!(simple, is_simple_closure(a));
    let ideals = match a.field().modulus() {
        Some(q) if n <= MAX_IDEAL_SEARCH_DIM && q <= 7 => {
            Some(ideal_search_exhaustive(a).map(|v| v.len()))
        }
        _ => None,
    };
    let nil = match as_c_family(a) {
        Some((al, be, ga)) => nil_rank_exact_c(&al, &be, &ga),
        None if a.field().is_rational() => nil_rank_mod_p(a, p),
        None => nil_rank_bruteforce(a),
    };
    if as_json {
        emit(
            out,
            json!({
                "field": a.field().to_string(),
                "dim": n,
                "table": table_summary(a),
                "commutative": a.is_commutative(),
                "unit": unit.as_ref().map(ToString::to_string),
                "jordan": jordan,
                "envelope_dimension": env,
                "simple_closure": simple,
                "ideals_over_ground_field": ideals.as_ref().and_then(|r| r.as_ref().ok().copied()),
                "nil_rank": nil.as_ref().ok().map(|r| serde_json::from_str::<serde_json::Value>(&nil_text(r, true)).expect("valid json")),
            }),
        )?;
        return Ok(true);
    }
    let mut s = format!(
        "field: {}\ndim: {n}\ntable: {}\n",
        a.field(),
        table_summary(a)
    );
    s += &format!("commutative: {}\n", yes_no(a.is_commutative()));
    s += &format!(
        "unit: {}\n",
        unit.map_or("none".to_string(), |u| u.to_string())
    );
    s += &format!("jordan: {jordan}\n");
    s += &format!("envelope dimension: {env} of {}\n", n * n);
    s += &format!("simple over the algebraic closure: {}\n", yes_no(simple));
    if let Some(r) = ideals {
        match r {
            Ok(0) => s += "proper ideals over the ground field: none\n",
            Ok(k) => s += &format!("proper ideals over the ground field: {k}\n"),
            Err(e) => s += &format!("proper ideals over the ground field: not searched ({e})\n"),
        }
    }
    match nil {
        Ok(r) => s += &nil_text(&r, false),
        Err(e) => s += &format!("nil-rank: not computed ({e})"),
    }
    emit(out, s)?;
    Ok(true)
}
