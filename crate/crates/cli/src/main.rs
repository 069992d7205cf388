use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use shifted::dimensions::{f_skew, g_skew};
use shifted::partition::{OrdinarySkewShape, ShiftedSkewShape};
use shifted::poly::{capital_h, eval_p, eval_pstar_at, eval_sstar, expand_in_monomials, Family, MonomialPolynomial};
use shifted::scalar::parse_rational;
use shifted::serial::{character_table_to_json, components_to_json, convergence_csv, monomial_to_json};
use shifted::spin::{char_value, convergence_row, psi, CharacterTable, ThomaPoint};
use shifted::tableau::{count_ordinary_standard_tableaux, count_shifted_standard_tableaux};
use shifted::verify::{run_criterion, Level, CRITERIA};
use shifted::{Error, Partition, Rational, Result, StrictPartition};

/// Largest `|ρ|` accepted by `converge`.
const CONVERGE_MAX_CLASS: usize = 9;

#[derive(Parser)]
#[command(name = "shifted", version, about = "Exact computations with shifted tableaux, factorial Schur P-polynomials and spin characters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    #[default]
    Plain,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Number of standard fillings of a skew diagram.
    #[command(group(ArgGroup::new("kind").args(["shifted", "ordinary"])))]
    Dim {
        /// Shifted diagram of strict partitions (the default).
        #[arg(long)]
        shifted: bool,
        /// Ordinary Young diagram.
        #[arg(long)]
        ordinary: bool,
        #[arg(long)]
        outer: String,
        #[arg(long, default_value = "")]
        inner: String,
        /// Count fillings by backtracking instead of the closed formula.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Evaluate one polynomial at a point.
    #[command(group(ArgGroup::new("which").args(["pstar", "p", "sstar", "h"]).required(true)))]
    Eval {
        /// Factorial Schur P-polynomial.
        #[arg(long)]
        pstar: bool,
        /// Schur P-polynomial.
        #[arg(long)]
        p: bool,
        /// Shifted Schur polynomial.
        #[arg(long)]
        sstar: bool,
        /// The diagonal value of the factorial P-polynomial (no point needed).
        #[arg(long = "H")]
        h: bool,
        #[arg(long)]
        index: String,
        /// Comma-separated rationals such as `3,1` or `1/2,-2/3`.
        #[arg(long, default_value = "")]
        point: String,
    },
    /// Monomial-basis expansion.
    Expand {
        /// One of P, Pstar, p.
        #[arg(long)]
        family: String,
        #[arg(long)]
        index: String,
        #[arg(long)]
        nvars: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Spin character values on odd-part classes.
    Char {
        #[arg(long)]
        k: usize,
        #[arg(long, requires = "rho")]
        mu: Option<String>,
        #[arg(long, requires = "mu")]
        rho: Option<String>,
        /// Print the whole table for this k.
        #[arg(long)]
        table: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Limit character value at a class.
    Psi {
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        #[arg(long)]
        rho: String,
    },
    /// Normalized characters along a sequence against the limit, as CSV.
    Converge {
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        #[arg(long)]
        rho: String,
        /// Comma-separated sizes.
        #[arg(long)]
        ns: String,
        #[arg(long, default_value_t = 500)]
        max_n: usize,
    },
    /// Run the acceptance suite.
    Verify {
        #[arg(long, default_value = "quick")]
        level: String,
        /// Run a single criterion.
        #[arg(long)]
        criterion: Option<usize>,
    },
}

fn partition_arg(text: &str) -> Result<Partition> {
    text.parse()
}

fn strict_arg(text: &str, which: &'static str) -> Result<StrictPartition> {
    StrictPartition::try_from(partition_arg(text)?).map_err(|_| Error::NotStrict { which })
}

fn point_arg(text: &str) -> Result<Vec<Rational>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| parse_rational(t).ok_or_else(|| Error::InvalidArgument(format!("bad rational {t:?}"))))
        .collect()
}

fn show(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn quoted(p: &Partition) -> String {
    format!("\"{p}\"")
}

fn run_dim(shifted: bool, outer: &str, inner: &str, oracle: bool, format: OutputFormat) -> Result<String> {
    let (outer_p, inner_p, value, method) = if shifted {
        let outer = strict_arg(outer, "outer")?;
        let inner = strict_arg(inner, "inner")?;
        let value = if oracle {
            if outer.weight() < inner.weight() {
                return Err(Error::WeightOrder { outer: outer.weight(), inner: inner.weight() });
            }
            match ShiftedSkewShape::new(&outer, &inner) {
                Ok(shape) => count_shifted_standard_tableaux(&shape),
                Err(Error::NotContained) => 0u32.into(),
                Err(e) => return Err(e),
            }
        } else {
            g_skew(&outer, &inner)?.value
        };
        (outer.into_partition(), inner.into_partition(), value, "shifted")
    } else {
        let outer = partition_arg(outer)?;
        let inner = partition_arg(inner)?;
        let value = if oracle {
            if outer.weight() < inner.weight() {
                return Err(Error::WeightOrder { outer: outer.weight(), inner: inner.weight() });
            }
            match OrdinarySkewShape::new(&outer, &inner) {
                Ok(shape) => count_ordinary_standard_tableaux(&shape),
                Err(Error::NotContained) => 0u32.into(),
                Err(e) => return Err(e),
            }
        } else {
            f_skew(&outer, &inner)?.value
        };
        (outer, inner, value, "ordinary")
    };
    Ok(match format {
        OutputFormat::Plain => value.to_string(),
        OutputFormat::Csv => format!("diagram,outer,inner,value\n{method},{},{},{value}", quoted(&outer_p), quoted(&inner_p)),
        OutputFormat::Json => serde_json::to_string_pretty(&serde_json::json!({
            "diagram": method,
            "outer": outer_p.parts(),
            "inner": inner_p.parts(),
            "value": value.to_string(),
        }))
        .expect("plain data always serializes"),
    })
}

fn run_eval(pstar: bool, p: bool, sstar: bool, index: &str, point: &str) -> Result<String> {
    let x = point_arg(point)?;
    let value: Rational = if pstar {
        eval_pstar_at(&strict_arg(index, "index")?, &x)?
    } else if p {
        eval_p(&strict_arg(index, "index")?, &x)?
    } else if sstar {
        eval_sstar(&partition_arg(index)?, &x)?
    } else {
        capital_h(&strict_arg(index, "index")?)
    };
    Ok(show(&value))
}

fn plain_expansion(parts: &[MonomialPolynomial<Rational>]) -> String {
    let mut lines = Vec::new();
    for m in parts {
        let terms: Vec<String> = m.coeffs().iter().rev().map(|(k, c)| format!("{} m[{k}]", show(c))).collect();
        let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        lines.push(format!("degree {}: {body}", m.degree()));
    }
    if lines.is_empty() {
        lines.push("0".into());
    }
    lines.join("\n")
}

fn run_expand(family: &str, index: &str, nvars: usize, format: OutputFormat) -> Result<String> {
    let family: Family = family.parse()?;
    let index = partition_arg(index)?;
    if nvars == 0 {
        return Err(Error::InvalidArgument("nvars must be at least 1".into()));
    }
    let poly = expand_in_monomials::<Rational>(family, &index, nvars)?;
    let components: Vec<MonomialPolynomial<Rational>> = match family {
        Family::P | Family::PowerSum => vec![poly.component(index.weight())],
        Family::Pstar => poly.components().values().cloned().collect(),
    };
    Ok(match (format, family) {
        (OutputFormat::Json, Family::Pstar) => components_to_json(&components),
        (OutputFormat::Json, _) => monomial_to_json(&components[0]),
        (OutputFormat::Plain, _) => plain_expansion(&components),
        (OutputFormat::Csv, _) => {
            let mut out = String::from("degree,partition,num,den");
            for m in &components {
                for (k, c) in m.coeffs().iter().rev() {
                    out.push_str(&format!("\n{},{},{},{}", m.degree(), quoted(k), c.numer(), c.denom()));
                }
            }
            out
        }
    })
}

fn run_char(k: usize, mu: Option<&str>, rho: Option<&str>, table: bool, format: OutputFormat) -> Result<String> {
    if let (Some(mu), Some(rho), false) = (mu, rho, table) {
        let mu = strict_arg(mu, "mu")?;
        let rho = partition_arg(rho)?;
        if mu.weight() != k {
            return Err(Error::SizeMismatch { expected: k, got: mu.weight() });
        }
        let v = char_value(&mu, &rho)?;
        return Ok(match format {
            OutputFormat::Json => serde_json::to_string_pretty(&serde_json::json!({
                "mu": mu.parts(),
                "rho": rho.parts(),
                "a": shifted::scalar::format_rational(&v.a),
                "b": shifted::scalar::format_rational(&v.b),
            }))
            .expect("plain data always serializes"),
            _ => v.to_string(),
        });
    }
    let t = CharacterTable::build(k)?;
    Ok(match format {
        OutputFormat::Json => character_table_to_json(&t),
        OutputFormat::Csv => {
            let mut out = String::from("mu,rho,a,b");
            for e in t.entries() {
                out.push_str(&format!(
                    "\n{},{},{},{}",
                    quoted(&e.mu),
                    quoted(&e.rho),
                    shifted::scalar::format_rational(&e.value.a),
                    shifted::scalar::format_rational(&e.value.b)
                ));
            }
            out
        }
        OutputFormat::Plain => {
            let rows: Vec<String> = t.entries().iter().map(|e| format!("{}\t{}\t{}", e.mu, e.rho, e.value)).collect();
            rows.join("\n")
        }
    })
}

fn run_psi(gamma: &str, rho: &str) -> Result<String> {
    let gamma: ThomaPoint = gamma.parse()?;
    Ok(psi(&gamma, &partition_arg(rho)?).to_string())
}

fn run_converge(gamma: &str, rho: &str, ns: &str, max_n: usize) -> Result<String> {
    let gamma: ThomaPoint = gamma.parse()?;
    let rho = partition_arg(rho)?;
    if rho.weight() > CONVERGE_MAX_CLASS {
        return Err(Error::InvalidArgument(format!("|rho| = {} exceeds {CONVERGE_MAX_CLASS}", rho.weight())));
    }
    if !rho.is_odd() {
        return Err(Error::EvenPart(rho.to_string()));
    }
    let ns: Vec<usize> = ns
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidArgument(format!("bad size {t:?}"))))
        .collect::<Result<_>>()?;
    if let Some(&big) = ns.iter().find(|&&n| n > max_n) {
        return Err(Error::InvalidArgument(format!("n = {big} exceeds --max-n {max_n}")));
    }
    // indexed parallel collect keeps input order
    let rows = ns.par_iter().map(|&n| convergence_row(&gamma, &rho, n)).collect::<Result<Vec<_>>>()?;
    Ok(convergence_csv(&rows).trim_end().to_string())
}

fn run_verify(level: &str, criterion: Option<usize>) -> Result<(String, bool)> {
    let level: Level = level.parse()?;
    let ids: Vec<usize> = match criterion {
        Some(id) if CRITERIA.iter().any(|(i, _)| *i == id) => vec![id],
        Some(id) => return Err(Error::InvalidArgument(format!("no criterion {id}"))),
        None => CRITERIA.iter().map(|(i, _)| *i).collect(),
    };
    let reports: Vec<_> = ids.iter().map(|&id| run_criterion(id, level)).collect();
    let all = reports.iter().all(|r| r.passed);
    let mut lines: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
    let passed = reports.iter().filter(|r| r.passed).count();
    lines.push(format!("{passed} of {} criteria passed", reports.len()));
    Ok((lines.join("\n"), all))
}

fn dispatch(cmd: Command) -> Result<(String, bool)> {
    let ok = |s: String| (s, true);
    match cmd {
        Command::Dim { shifted: _, ordinary, outer, inner, oracle, format } => {
            run_dim(!ordinary, &outer, &inner, oracle, format).map(ok)
        }
        Command::Eval { pstar, p, sstar, h: _, index, point } => run_eval(pstar, p, sstar, &index, &point).map(ok),
        Command::Expand { family, index, nvars, format } => run_expand(&family, &index, nvars, format).map(ok),
        Command::Char { k, mu, rho, table, format } => {
            run_char(k, mu.as_deref(), rho.as_deref(), table, format).map(ok)
        }
        Command::Psi { gamma, rho } => run_psi(&gamma, &rho).map(ok),
        Command::Converge { gamma, rho, ns, max_n } => run_converge(&gamma, &rho, &ns, max_n).map(ok),
        Command::Verify { level, criterion } => run_verify(&level, criterion),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok((out, true)) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Ok((out, false)) => {
            println!("{out}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
