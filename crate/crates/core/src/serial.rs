//! Machine-readable forms: JSON for monomial expansions and character tables, CSV for
//! convergence tables. Rationals travel as integer strings so no precision is lost.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Partition, StrictPartition};
use crate::poly::MonomialPolynomial;
use crate::scalar::{format_rational, parse_rational};
use crate::spin::{CharacterEntry, CharacterTable, ConvergenceRow, Root2Value};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Vec<usize>,
    pub num: String,
    pub den: String,
}

/// `{degree, n_vars, terms: [{partition, num, den}]}`, terms in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub degree: usize,
    pub n_vars: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRowJson {
    pub mu: Vec<usize>,
    pub rho: Vec<usize>,
    pub a: String,
    pub b: String,
}

/// `{k, rows: [{mu, rho, a, b}]}` where the value is `a + b√2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTableJson {
    pub k: usize,
    pub rows: Vec<CharacterRowJson>,
}

fn parse_integer(s: &str) -> Result<BigInt> {
    s.parse().map_err(|_| Error::InvalidArgument(format!("bad integer {s:?}")))
}

fn parse_q(s: &str) -> Result<BigRational> {
    parse_rational(s).ok_or_else(|| Error::InvalidArgument(format!("bad rational {s:?}")))
}

fn partition_from_parts(parts: &[usize]) -> Partition {
    Partition::from_usizes(parts.to_vec())
}

impl MonomialJson {
    pub fn from_polynomial(p: &MonomialPolynomial<BigRational>) -> Self {
        let terms = p
            .coeffs()
            .iter()
            .rev()
            .map(|(kappa, c)| TermJson { partition: kappa.parts().to_vec(), num: c.numer().to_string(), den: c.denom().to_string() })
            .collect();
        MonomialJson { degree: p.degree(), n_vars: p.n_vars(), terms }
    }

    pub fn to_polynomial(&self) -> Result<MonomialPolynomial<BigRational>> {
        let mut coeffs = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let den = parse_integer(&t.den)?;
            if den == BigInt::from(0) {
                return Err(Error::InvalidArgument("zero denominator".into()));
            }
            coeffs.push((partition_from_parts(&t.partition), BigRational::new(parse_integer(&t.num)?, den)));
        }
        MonomialPolynomial::from_coeffs(self.degree, self.n_vars, coeffs)
    }
}

impl CharacterTableJson {
    pub fn from_table(t: &CharacterTable) -> Self {
        let rows = t
            .entries()
            .iter()
            .map(|e| CharacterRowJson {
                mu: e.mu.parts().to_vec(),
                rho: e.rho.parts().to_vec(),
                a: format_rational(&e.value.a),
                b: format_rational(&e.value.b),
            })
            .collect();
        CharacterTableJson { k: t.k(), rows }
    }

    pub fn to_table(&self) -> Result<CharacterTable> {
        let mut entries = Vec::with_capacity(self.rows.len());
        for r in &self.rows {
            let mu = StrictPartition::try_from(partition_from_parts(&r.mu))?;
            entries.push(CharacterEntry {
                mu,
                rho: partition_from_parts(&r.rho),
                value: Root2Value::new(parse_q(&r.a)?, parse_q(&r.b)?),
            });
        }
        Ok(CharacterTable::from_entries(self.k, entries))
    }
}

fn to_json_text<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data always serializes")
}

pub fn monomial_to_json(p: &MonomialPolynomial<BigRational>) -> String {
    to_json_text(&MonomialJson::from_polynomial(p))
}

/// Several homogeneous components as a JSON array ordered by degree.
pub fn components_to_json<'a, I>(parts: I) -> String
where
    I: IntoIterator<Item = &'a MonomialPolynomial<BigRational>>,
{
    let list: Vec<MonomialJson> = parts.into_iter().map(MonomialJson::from_polynomial).collect();
    to_json_text(&list)
}

pub fn monomial_from_json(text: &str) -> Result<MonomialPolynomial<BigRational>> {
    let dto: MonomialJson = serde_json::from_str(text).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    dto.to_polynomial()
}

pub fn character_table_to_json(t: &CharacterTable) -> String {
    to_json_text(&CharacterTableJson::from_table(t))
}

pub fn character_table_from_json(text: &str) -> Result<CharacterTable> {
    let dto: CharacterTableJson = serde_json::from_str(text).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    dto.to_table()
}

pub const CONVERGENCE_CSV_HEADER: &str = "n,xi_a,xi_b,psi_a,psi_b,abs_error";

pub fn convergence_csv_line(row: &ConvergenceRow) -> String {
    format!(
        "{},{},{},{},{},{}",
        row.n,
        format_rational(&row.xi.a),
        format_rational(&row.xi.b),
        format_rational(&row.psi.a),
        format_rational(&row.psi.b),
        row.abs_error_decimal()
    )
}

/// Header line plus one line per row, newline terminated.
pub fn convergence_csv(rows: &[ConvergenceRow]) -> String {
    let mut out = String::from(CONVERGENCE_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&convergence_csv_line(r));
        out.push('\n');
    }
    out
}
