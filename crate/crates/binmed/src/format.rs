//! Wire formats: JSON records for library values and the `table` CSV.
//!
//! Rationals always travel as canonical `"num/den"` strings and integers as
//! decimal strings, so no value passes through a float on the way out.

use std::io::Write;

use binmed_core::critical::critical_poly;
use binmed_core::{
    BigInt, CertificateStatus, IntPolynomial, IrrationalityCertificate, MedianResult, Rational, RootEnclosure,
};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum MedianJson {
    Unique { m: String },
    Interval { m1: String, m2: String },
}

impl From<&MedianResult> for MedianJson {
    fn from(m: &MedianResult) -> Self {
        match m {
            MedianResult::Unique(m) => MedianJson::Unique { m: m.to_string() },
            MedianResult::Interval(a, b) => MedianJson::Interval { m1: a.to_string(), m2: b.to_string() },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum EnclosureJson {
    Exact { root: String },
    Bracket { lo: String, hi: String, decimal: String },
}

impl EnclosureJson {
    /// `decimal` shows at most `digits` fractional digits, and only those the
    /// bracket determines.
    pub fn new(enc: &RootEnclosure, digits: u32) -> Self {
        match enc {
            RootEnclosure::Exact(r) => EnclosureJson::Exact { root: r.to_string() },
            RootEnclosure::Bracket { lo, hi } => EnclosureJson::Bracket {
                lo: lo.to_string(),
                hi: hi.to_string(),
                decimal: enc.decimal(digits),
            },
        }
    }
}

pub fn poly_json(poly: &IntPolynomial) -> Vec<String> {
    poly.coeffs().iter().map(BigInt::to_string).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateJson {
    pub n: u32,
    pub k: u32,
    pub status: StatusJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum StatusJson {
    ExactRational {
        root: String,
        polynomial: Vec<String>,
    },
    IrrationalUpperHalf {
        enclosure: EnclosureJson,
        constant_coeff: String,
        leading_coeff: String,
        polynomial: Vec<String>,
        excluded_candidates: Vec<String>,
    },
    IrrationalBySymmetry {
        partner_k: u32,
        partner: Box<CertificateJson>,
    },
}

impl CertificateJson {
    pub fn new(cert: &IrrationalityCertificate, digits: u32) -> Self {
        let poly = || critical_poly(cert.n, cert.k).expect("certificate indices are valid");
        let status = match &cert.status {
            CertificateStatus::ExactRational { root } => {
                StatusJson::ExactRational { root: root.to_string(), polynomial: poly_json(&poly()) }
            }
            CertificateStatus::IrrationalUpperHalf { enclosure, constant_coeff, excluded_candidates } => {
                let poly = poly();
                StatusJson::IrrationalUpperHalf {
                    enclosure: EnclosureJson::new(enclosure, digits),
                    constant_coeff: constant_coeff.to_string(),
                    leading_coeff: poly.leading_coeff().to_string(),
                    polynomial: poly_json(&poly),
                    excluded_candidates: excluded_candidates.iter().map(Rational::to_string).collect(),
                }
            }
            CertificateStatus::IrrationalBySymmetry { partner_k, partner } => StatusJson::IrrationalBySymmetry {
                partner_k: *partner_k,
                partner: Box::new(CertificateJson::new(partner, digits)),
            },
        };
        CertificateJson { n: cert.n, k: cert.k, status }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValueJson {
    pub n: u32,
    pub k: i64,
    pub p: String,
    pub value: String,
    pub decimal: String,
}

/// One row of the `table` output. Exact rows fill `value`; bracket rows
/// fill `lo` and `hi`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: u32,
    pub k: u32,
    pub kind: &'static str,
    pub value: Option<String>,
    pub lo: Option<String>,
    pub hi: Option<String>,
    pub decimal: String,
}

impl TableRow {
    pub fn new(n: u32, k: u32, enc: &RootEnclosure, digits: u32) -> Self {
        let decimal = enc.decimal(digits);
        match enc {
            RootEnclosure::Exact(r) => TableRow {
                n,
                k,
                kind: "exact",
                value: Some(r.to_string()),
                lo: None,
                hi: None,
                decimal,
            },
            RootEnclosure::Bracket { lo, hi } => TableRow {
                n,
                k,
                kind: "bracket",
                value: None,
                lo: Some(lo.to_string()),
                hi: Some(hi.to_string()),
                decimal,
            },
        }
    }
}

/// CSV with a header row, RFC 4180 quoting.
pub fn write_table_csv<W: Write>(rows: &[TableRow], out: W) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(true).from_writer(out);
    if rows.is_empty() {
        w.write_record(["n", "k", "kind", "value", "lo", "hi", "decimal"])?;
    }
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}
