//! JSONL classification output: a header line, then one record per line
//! sorted by digest.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use fine_core::arith::Rational;
use fine_core::classify::{mu_histogram, ClassificationRecord};
use serde::{Deserialize, Serialize};

use crate::format::format_rational;

pub const SCHEMA: &str = "fine-classification";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub schema: String,
    pub version: u32,
    pub target: String,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub f_hollow: bool,
    pub weakly_sporadic: bool,
    pub sporadic: bool,
    pub canonically_closed_at_mu: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultLine {
    pub digest: String,
    /// One row per vertex.
    pub vertices: Vec<Vec<i64>>,
    pub width: u64,
    pub mu: String,
    pub dim_fine_at_mu: i32,
    pub flags: Flags,
    pub gorenstein_index: Option<u32>,
    pub provenance: String,
}

impl ResultLine {
    pub fn from_record(r: &ClassificationRecord) -> Result<Self, String> {
        let vertices = r
            .vertices
            .row_vecs()
            .into_iter()
            .map(|row| row.iter().map(|v| i64::try_from(v).map_err(|_| "coordinate exceeds i64".to_string())).collect())
            .collect::<Result<_, _>>()?;
        Ok(Self {
            digest: r.normal_form.digest_hex(),
            vertices,
            width: r.width,
            mu: format_rational(&r.mu),
            dim_fine_at_mu: r.dim_fine_at_mu,
            flags: Flags {
                f_hollow: r.flags.f_hollow,
                weakly_sporadic: r.flags.weakly_sporadic,
                sporadic: r.flags.sporadic,
                canonically_closed_at_mu: r.flags.canonically_closed_at_mu,
            },
            gorenstein_index: r.gorenstein.as_ref().map(|g| g.index),
            provenance: r.provenance.clone(),
        })
    }
}

/// Writes the header and the records, sorted by digest.
pub fn write_jsonl(out: &mut impl Write, target: &str, records: &[ClassificationRecord]) -> std::io::Result<()> {
    let mut lines: Vec<ResultLine> =
        records.iter().map(ResultLine::from_record).collect::<Result<_, _>>().map_err(std::io::Error::other)?;
    lines.sort_by(|a, b| a.digest.cmp(&b.digest).then_with(|| a.vertices.cmp(&b.vertices)));
    let header = Header { schema: SCHEMA.into(), version: SCHEMA_VERSION, target: target.into(), count: lines.len() };
    serde_json::to_writer(&mut *out, &header)?;
    out.write_all(b"\n")?;
    for l in &lines {
        serde_json::to_writer(&mut *out, l)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

/// Reads a file written by [`write_jsonl`], checking schema and count.
pub fn read_jsonl(input: impl BufRead) -> Result<(Header, Vec<ResultLine>), String> {
    let mut lines = input.lines();
    let first = lines.next().ok_or("empty result file")?.map_err(|e| e.to_string())?;
    let header: Header = serde_json::from_str(&first).map_err(|e| e.to_string())?;
    if header.schema != SCHEMA || header.version != SCHEMA_VERSION {
        return Err(format!("unsupported schema {} v{}", header.schema, header.version));
    }
    let mut out = Vec::with_capacity(header.count);
    for l in lines {
        let l = l.map_err(|e| e.to_string())?;
        out.push(serde_json::from_str(&l).map_err(|e| e.to_string())?);
    }
    if out.len() != header.count {
        return Err(format!("header announces {} records, found {}", header.count, out.len()));
    }
    Ok((header, out))
}

/// `"<n> classes; mu: 4/3×300 5/4×632 7/6×436"`, multipliers descending.
pub fn summary(records: &[ClassificationRecord]) -> String {
    let hist: BTreeMap<Rational, usize> = mu_histogram(records);
    let parts: Vec<String> = hist.iter().rev().map(|(mu, n)| format!("{}×{}", format_rational(mu), n)).collect();
    format!("{} classes; mu: {}", records.len(), parts.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use fine_core::shapes;

    fn records() -> Vec<ClassificationRecord> {
        vec![
            ClassificationRecord::compute(&shapes::dilated_simplex(2, 2).unwrap(), "a").unwrap(),
            ClassificationRecord::compute(&shapes::standard_simplex(2).unwrap(), "b").unwrap(),
        ]
    }

    #[test]
    fn write_then_read() {
        let mut buf = Vec::new();
        write_jsonl(&mut buf, "test", &records()).unwrap();
        let (h, lines) = read_jsonl(&buf[..]).unwrap();
        assert_eq!(h.count, 2);
        assert!(lines[0].digest < lines[1].digest);
        let mut again = Vec::new();
        write_jsonl(&mut again, "test", &records().into_iter().rev().collect::<Vec<_>>()).unwrap();
        assert_eq!(buf, again);
    }

    #[test]
    fn summary_line() {
        assert_eq!(summary(&records()), "2 classes; mu: 3×1 3/2×1");
    }
}
