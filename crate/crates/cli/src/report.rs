use std::fmt::Write as _;

use serde::{Serialize, Serializer};

pub const CSV_HEADER: &str = "scenario,D,family_size,clique_lower,cert_upper,max_witness_len,elapsed_ms";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub scenario: String,
    #[serde(rename = "D")]
    pub d: u32,
    pub family_size: usize,
    pub clique_lower: usize,
    #[serde(serialize_with = "cert_or_none")]
    pub cert_upper: Option<u64>,
    pub max_witness_len: u32,
    pub elapsed_ms: u64,
}

fn cert_or_none<S: Serializer>(v: &Option<u64>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(n) => s.serialize_u64(*n),
        None => s.serialize_str("none"),
    }
}

impl ReportRow {
    /// False when a certificate is present and below the clique.
    pub fn consistent(&self) -> bool {
        self.cert_upper.is_none_or(|c| self.clique_lower as u64 <= c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

pub fn emit_report(rows: &[ReportRow], format: Format) -> Vec<u8> {
    match format {
        Format::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for r in rows {
                let cert = r.cert_upper.map_or_else(|| "none".to_string(), |c| c.to_string());
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.scenario, r.d, r.family_size, r.clique_lower, cert, r.max_witness_len, r.elapsed_ms
                )
                .unwrap();
            }
            out.into_bytes()
        }
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(rows).expect("rows serialize");
            out.push(b'\n');
            out
        }
    }
}
