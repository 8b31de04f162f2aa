//! The `perioband` command-line tool.
//!
//! Exit codes: 0 success, 2 singular matrix, 3 parse or usage error, 4 zero
//! pivot in float mode, 5 internal inconsistency or a failed check.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::band::io::{read_band, read_vec, write_band, write_dense_matrix, write_vec, AnyBand, BandKind};
use crate::band::{DenseMatrix, PeriodicBandMatrix};
use crate::bench::{band_factor_solve_f64, best_of, dense_solve_f64, relative_residual};
use crate::error::{Error, Result};
use crate::factor::factorize;
use crate::gen::{diagonally_dominant, generate};
use crate::inverse::invert;
use crate::oracle::{oracle_det, oracle_exchange_det, oracle_invert, oracle_solve};
use crate::scalar::{Entry, Field, Rational, ScalarMode};

/// Float-mode residual bound used by `solve --check`.
pub const FLOAT_RESIDUAL_BOUND: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Debug, Parser)]
#[command(name = "perioband", version, about = "Periodic k-banded and anti-k-banded matrices: determinant, inverse, solve")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct Common {
    /// Matrix file (PKB or APKB).
    input: PathBuf,
    /// Arithmetic; defaults to the mode declared in the file.
    #[arg(long, value_enum, env = "PERIOBAND_MODE")]
    mode: Option<Mode>,
    /// Write the result here instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the determinant.
    Det(Common),
    /// Write M⁻¹ of a PKB matrix in DENSE format.
    Invert(Common),
    /// Write N⁻¹ of an APKB matrix in DENSE format.
    InvertAnti(Common),
    /// Solve M·x = y and write x in VEC format.
    Solve {
        #[command(flatten)]
        common: Common,
        /// Right-hand side (VEC).
        #[arg(long)]
        rhs: PathBuf,
        /// Report the residual on standard error; a failed check exits with 5.
        #[arg(long)]
        check: bool,
    },
    /// Write a random PKB matrix.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Probability that each band entry is forced to zero.
        #[arg(long, default_value_t = 0.0)]
        zero_probability: f64,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Compare the band algorithms with the dense oracle, exactly.
    Check {
        input: PathBuf,
        /// Right-hand side to solve; defaults to M·(1, 2, …, n).
        #[arg(long)]
        rhs: Option<PathBuf>,
    },
    /// Time float factor+solve, band versus dense, over several sizes.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [100usize, 1000, 10000])]
        n_list: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        /// Largest n timed on the dense path.
        #[arg(long, default_value_t = 2000)]
        dense_max_n: usize,
        /// Largest n checked exactly against the oracle.
        #[arg(long, default_value_t = 60)]
        exact_max_n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// Runs the tool with `args` (including the program name) and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn emit(output: Option<&Path>, out: &mut dyn Write, text: &str) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn load(common: &Common) -> Result<(BandKind, AnyBand)> {
    let file = read_band(&std::fs::read_to_string(&common.input)?)?;
    let matrix = match (file.matrix, common.mode) {
        (AnyBand::Exact(m), Some(Mode::Float)) => AnyBand::Float(m.convert(ScalarMode::float())?),
        (AnyBand::Float(m), Some(Mode::Exact)) => AnyBand::Exact(m.convert(ScalarMode::ExactLambda)?),
        (m, _) => m,
    };
    Ok((file.kind, matrix))
}

fn require(kind: BandKind, want: BandKind, command: &str) -> Result<()> {
    if kind != want {
        let header = if want == BandKind::Periodic { "PKB" } else { "APKB" };
        return Err(Error::format(1, format!("`{command}` expects a {header} file")));
    }
    Ok(())
}

/// `det(R) = (-1)^(n(n-1)/2)`.
fn exchange_sign<T: Entry>(n: usize) -> T {
    if (n * (n - 1) / 2).is_multiple_of(2) {
        T::one()
    } else {
        T::one().negated()
    }
}

fn det_of<T: Entry>(kind: BandKind, m: &PeriodicBandMatrix<T>) -> Result<T> {
    let det = factorize(m)?.determinant()?;
    Ok(match kind {
        BandKind::Periodic => det,
        BandKind::Anti => det.times(&exchange_sign(m.n())),
    })
}

fn inverse_of<T: Entry>(kind: BandKind, m: &PeriodicBandMatrix<T>) -> Result<DenseMatrix<T>> {
    let inv = invert(m)?;
    Ok(match kind {
        BandKind::Periodic => inv,
        BandKind::Anti => inv.reverse_rows(),
    })
}

/// Solves with `M` (or `N = M·R`, whose solution is `R·x`).
fn solve_of<T: Entry>(kind: BandKind, m: &PeriodicBandMatrix<T>, y: &[T]) -> Result<Vec<T>> {
    let mut x = factorize(m)?.solve(y)?.x;
    if kind == BandKind::Anti {
        x.reverse();
    }
    Ok(x)
}

fn apply<T: Entry>(kind: BandKind, m: &PeriodicBandMatrix<T>, x: &[T]) -> Result<Vec<T>> {
    match kind {
        BandKind::Periodic => m.mul_vec(x),
        BandKind::Anti => m.mul_vec(&x.iter().rev().cloned().collect::<Vec<_>>()),
    }
}

/// Reads a right-hand side, accepting both rational and decimal literals.
/// In exact mode a decimal is taken at its binary value.
fn read_rhs<T: Entry>(path: &Path) -> Result<Vec<T>> {
    let text = std::fs::read_to_string(path)?;
    read_vec::<T>(&text)
        .or_else(|first| read_vec::<Rational>(&text).map(|v| v.iter().map(T::from_rational).collect()).map_err(|_| first))
        .or_else(|first| match read_vec::<f64>(&text) {
            Ok(v) => v.into_iter().map(|x| T::from_f64(x).map_err(Error::from)).collect(),
            Err(_) => Err(first),
        })
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Det(common) => {
            let (kind, m) = load(&common)?;
            let (text, singular) = match &m {
                AnyBand::Exact(m) => det_of(kind, m).map(|d| (format!("{d}\n"), d.is_zero()))?,
                AnyBand::Float(m) => det_of(kind, m).map(|d| (format!("{d}\n"), d.is_zero()))?,
            };
            emit(common.output.as_deref(), out, &text)?;
            if singular {
                return Err(Error::SingularMatrix);
            }
        }
        Command::Invert(common) => invert_command(&common, BandKind::Periodic, "invert", out)?,
        Command::InvertAnti(common) => invert_command(&common, BandKind::Anti, "invert-anti", out)?,
        Command::Solve { common, rhs, check } => {
            let (kind, m) = load(&common)?;
            let (text, report) = match &m {
                AnyBand::Exact(m) => {
                    let y = read_rhs::<Rational>(&rhs)?;
                    let x = solve_of(kind, m, &y)?;
                    let exact = check.then(|| apply(kind, m, &x).map(|mx| mx == y)).transpose()?;
                    (write_vec(&x), exact.map(|ok| (format!("residual {}", if ok { "0" } else { "nonzero" }), ok)))
                }
                AnyBand::Float(m) => {
                    let y = read_rhs::<f64>(&rhs)?;
                    let x = solve_of(kind, m, &y)?;
                    let report = if check {
                        let r = match kind {
                            BandKind::Periodic => relative_residual(m, &x, &y)?,
                            BandKind::Anti => relative_residual(m, &x.iter().rev().copied().collect::<Vec<_>>(), &y)?,
                        };
                        Some((format!("residual {r:e}"), r <= FLOAT_RESIDUAL_BOUND))
                    } else {
                        None
                    };
                    (write_vec(&x), report)
                }
            };
            emit(common.output.as_deref(), out, &text)?;
            if let Some((line, ok)) = report {
                writeln!(err, "{line} {}", if ok { "PASS" } else { "FAIL" })?;
                if !ok {
                    return Ok(5);
                }
            }
        }
        Command::Gen { n, k, seed, zero_probability, output } => {
            let m = generate(n, k, seed, zero_probability)?;
            emit(output.as_deref(), out, &write_band(BandKind::Periodic, &m))?;
        }
        Command::Check { input, rhs } => return check(&input, rhs.as_deref(), out),
        Command::Bench { n_list, k, reps, dense_max_n, exact_max_n, seed } => {
            bench(&n_list, k, reps, dense_max_n, exact_max_n, seed, out)?;
        }
    }
    Ok(0)
}

fn invert_command(common: &Common, want: BandKind, name: &str, out: &mut dyn Write) -> Result<()> {
    let (kind, m) = load(common)?;
    require(kind, want, name)?;
    let text = match &m {
        AnyBand::Exact(m) => write_dense_matrix(&inverse_of(kind, m)?),
        AnyBand::Float(m) => write_dense_matrix(&inverse_of(kind, m)?),
    };
    emit(common.output.as_deref(), out, &text)
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn check(input: &Path, rhs: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let file = read_band(&std::fs::read_to_string(input)?)?;
    let kind = file.kind;
    let m = match file.matrix {
        AnyBand::Exact(m) => m,
        AnyBand::Float(m) => m.convert(ScalarMode::ExactLambda)?,
    };
    let n = m.n();
    let dense = match kind {
        BandKind::Periodic => m.to_dense(),
        BandKind::Anti => m.to_dense().reverse_columns(),
    };
    let mut report = String::new();
    let mut all = true;
    let mut line = |ok: bool, text: String| {
        all &= ok;
        let _ = writeln!(report, "{} {text}", verdict(ok));
    };

    let band_det = det_of(kind, &m)?;
    let oracle = oracle_det(&dense)?;
    line(band_det == oracle, format!("det band={band_det} oracle={oracle}"));
    if kind == BandKind::Anti {
        let via_exchange = &oracle_exchange_det(n)? * &oracle_det(&m.to_dense())?;
        line(via_exchange == oracle, format!("det(N) = det(R)·det(M) = {via_exchange}"));
    }

    if oracle.is_zero() {
        let band_singular = matches!(inverse_of(kind, &m), Err(Error::SingularMatrix));
        line(band_singular, "inverse both singular".into());
    } else {
        let band_inv = inverse_of(kind, &m)?;
        let oracle_inv = oracle_invert(&dense)?;
        line(band_inv == oracle_inv, "inverse band equals oracle".into());
        line(dense.mul(&band_inv)?.is_identity() && band_inv.mul(&dense)?.is_identity(), "inverse product is the identity".into());

        let y = match rhs {
            Some(path) => read_rhs::<Rational>(path)?,
            None => {
                let w: Vec<Rational> = (1..=n as i64).map(Rational::from_integer).collect();
                dense.mul_vec(&w)?
            }
        };
        if y.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: y.len() });
        }
        let band_x = solve_of(kind, &m, &y)?;
        let oracle_x = oracle_solve(&dense, &y)?;
        line(band_x == oracle_x, "solve band equals oracle".into());
    }
    out.write_all(report.as_bytes())?;
    match (all, oracle.is_zero()) {
        (false, _) => Ok(5),
        (true, true) => Err(Error::SingularMatrix),
        (true, false) => Ok(0),
    }
}

fn bench(n_list: &[usize], k: usize, reps: usize, dense_max_n: usize, exact_max_n: usize, seed: u64, out: &mut dyn Write) -> Result<()> {
    let mut table = String::from("n k band_ms dense_ms speedup residual exact_vs_oracle\n");
    for &n in n_list {
        let m = diagonally_dominant::<f64>(n, k, seed)?;
        let y: Vec<f64> = (0..n).map(|i| ((i % 17) as f64) - 8.0).collect();
        let (band_t, x) = best_of(reps, || band_factor_solve_f64(&m, &y));
        let residual = relative_residual(&m, &x?, &y)?;
        let band_ms = band_t.as_secs_f64() * 1e3;
        let (dense_ms, speedup) = if n <= dense_max_n {
            let d = m.to_dense();
            let (dense_t, _) = best_of(reps, || dense_solve_f64(&d, &y));
            let ms = dense_t.as_secs_f64() * 1e3;
            (format!("{ms:.3}"), format!("{:.1}", ms / band_ms.max(1e-9)))
        } else {
            ("-".to_string(), "-".to_string())
        };
        let exact = if n <= exact_max_n {
            let me = diagonally_dominant::<Rational>(n, k, seed)?;
            let ye: Vec<Rational> = y.iter().map(|v| Rational::from_integer(*v as i64)).collect();
            let band = factorize(&me)?.solve(&ye)?.x;
            verdict(band == oracle_solve(&me.to_dense(), &ye)?).to_string()
        } else {
            "-".to_string()
        };
        let _ = writeln!(table, "{n} {k} {band_ms:.3} {dense_ms} {speedup} {residual:.1e} {exact}");
    }
    out.write_all(table.as_bytes())?;
    Ok(())
}
