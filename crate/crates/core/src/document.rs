//! File formats: the line-oriented point-set text format and the JSON
//! result documents.
//!
//! Point files are whitespace-separated text. Lines whose first
//! non-blank character is `#` are comments. The first data line is the
//! header `n count` (count must be n+3), followed by count lines of n
//! coordinates each. Coordinates are written `p` or `p/q`; plain
//! decimals are also accepted on input and read exactly. All emitted
//! rationals re-parse to identical values, and documents are
//! byte-identical across re-runs on identical inputs.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::configuration::Configuration;
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, Rational};
use crate::oracle::EnumerationReport;
use crate::sweep::{Parity, PartitionResult};
use crate::verify::Certificate;

pub const RESULT_FORMAT: &str = "radon-link.result/v1";
pub const ENUMERATION_FORMAT: &str = "radon-link.enumeration/v1";

/// Parses the point-set text format.
pub fn parse_pointfile(text: &str) -> Result<Configuration> {
    let mut header: Option<(usize, usize)> = None;
    let mut points: Vec<Vec<Rational>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        match header {
            None => {
                if fields.len() != 2 {
                    return Err(Error::Parse {
                        line,
                        msg: "header must be two integers: dimension and point count".to_string(),
                    });
                }
                let n: usize = fields[0].parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("bad dimension {:?}", fields[0]),
                })?;
                let count: usize = fields[1].parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("bad point count {:?}", fields[1]),
                })?;
                header = Some((n, count));
            }
            Some((n, count)) => {
                if points.len() == count {
                    return Err(Error::Parse {
                        line,
                        msg: format!("more than {count} point rows"),
                    });
                }
                if fields.len() != n {
                    return Err(Error::Parse {
                        line,
                        msg: format!("expected {n} coordinates, got {}", fields.len()),
                    });
                }
                let row = fields
                    .iter()
                    .map(|f| parse_rational(f).map_err(|msg| Error::Parse { line, msg }))
                    .collect::<Result<Vec<Rational>>>()?;
                points.push(row);
            }
        }
    }
    let Some((n, count)) = header else {
        return Err(Error::Parse { line: 0, msg: "empty point file".to_string() });
    };
    if points.len() != count {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header promises {count} points, file has {}", points.len()),
        });
    }
    if count != n + 3 {
        return Err(Error::Shape(format!(
            "dimension {n} requires exactly {} points, header says {count}",
            n + 3
        )));
    }
    Configuration::new(n, points)
}

/// Canonical text body of a configuration: header plus one row per
/// point, rationals in canonical form. This is what gets hashed.
fn canonical_body(c: &Configuration) -> String {
    let mut out = format!("{} {}\n", c.dim(), c.point_count());
    for p in c.points() {
        let row: Vec<String> = p.iter().map(format_rational).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Renders a point file, optionally with a leading comment line.
pub fn write_pointfile(c: &Configuration, note: Option<&str>) -> String {
    match note {
        Some(note) => format!("# {note}\n{}", canonical_body(c)),
        None => canonical_body(c),
    }
}

/// SHA-256 of the canonical body, hex-encoded. Comment lines and
/// alternative spellings of the same rational do not affect the hash.
pub fn input_hash(c: &Configuration) -> String {
    let digest = Sha256::digest(canonical_body(c).as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// The machine-readable outcome of a `find` run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub format: String,
    pub input_sha256: String,
    pub n: usize,
    pub case: Parity,
    pub first_subset: Vec<usize>,
    pub second_subset: Vec<usize>,
    pub certificate: Certificate,
    pub verified: bool,
}

impl ResultDocument {
    pub fn new(c: &Configuration, result: &PartitionResult, verified: bool) -> ResultDocument {
        ResultDocument {
            format: RESULT_FORMAT.to_string(),
            input_sha256: input_hash(c),
            n: c.dim(),
            case: result.parity,
            first_subset: result.first.clone(),
            second_subset: result.second.clone(),
            certificate: result.certificate.clone(),
            verified,
        }
    }

    pub fn to_partition_result(&self) -> PartitionResult {
        PartitionResult {
            parity: self.case,
            first: self.first_subset.clone(),
            second: self.second_subset.clone(),
            certificate: self.certificate.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        to_stable_json(self)
    }

    pub fn from_json(text: &str) -> Result<ResultDocument> {
        let doc: ResultDocument =
            serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        if doc.format != RESULT_FORMAT {
            return Err(Error::Document(format!("unknown format {:?}", doc.format)));
        }
        Ok(doc)
    }
}

/// The machine-readable outcome of an `enumerate` run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationDocument {
    pub format: String,
    pub input_sha256: String,
    pub n: usize,
    #[serde(flatten)]
    pub report: EnumerationReport,
}

impl EnumerationDocument {
    pub fn new(c: &Configuration, report: EnumerationReport) -> EnumerationDocument {
        EnumerationDocument {
            format: ENUMERATION_FORMAT.to_string(),
            input_sha256: input_hash(c),
            n: c.dim(),
            report,
        }
    }

    pub fn to_json(&self) -> String {
        to_stable_json(self)
    }

    pub fn from_json(text: &str) -> Result<EnumerationDocument> {
        let doc: EnumerationDocument =
            serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        if doc.format != ENUMERATION_FORMAT {
            return Err(Error::Document(format!("unknown format {:?}", doc.format)));
        }
        Ok(doc)
    }
}

fn to_stable_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("documents always serialize");
    text.push('\n');
    text
}

/// JSON rendering of a general-position report.
pub fn general_position_json(report: &crate::configuration::GeneralPositionReport) -> String {
    to_stable_json(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use proptest::prelude::*;

    fn segment_points() -> Configuration {
        Configuration::new(1, vec![vec![rat(0)], vec![rat(1)], vec![rat(2)], vec![rat(3)]]).unwrap()
    }

    #[test]
    fn pointfile_round_trip_is_identity() {
        let c = crate::generator::gen_random(2, 7, 50).unwrap();
        let text = write_pointfile(&c, Some("round trip"));
        let parsed = parse_pointfile(&text).unwrap();
        assert_eq!(c, parsed);
        assert_eq!(input_hash(&c), input_hash(&parsed));
    }

    #[test]
    fn comments_and_spellings_do_not_change_the_hash() {
        let direct = parse_pointfile("1 4\n0\n1\n2\n3\n").unwrap();
        let decorated =
            parse_pointfile("# a comment\n1 4\n0/1\n1.0\n  2 \n# another\n6/2\n").unwrap();
        assert_eq!(direct, decorated);
        assert_eq!(input_hash(&direct), input_hash(&decorated));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let missing = parse_pointfile("2 5\n0 0\n1 1\n");
        assert!(matches!(missing, Err(Error::Parse { .. })));
        match parse_pointfile("1 4\n0\nbogus\n2\n3\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected a parse error, got {other:?}"),
        }
        match parse_pointfile("1 4\n0\n1e3\n2\n3\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected scientific notation to be rejected, got {other:?}"),
        }
        assert!(matches!(parse_pointfile("2 4\n0 0\n1 1\n2 4\n3 9\n"), Err(Error::Shape(_))));
    }

    #[test]
    fn result_document_round_trips() {
        let c = segment_points();
        let result = crate::sweep::find_odd_partition(&c).unwrap();
        let doc = ResultDocument::new(&c, &result, true);
        let json = doc.to_json();
        let back = ResultDocument::from_json(&json).unwrap();
        assert_eq!(doc, back);
        assert_eq!(back.to_partition_result(), result);
        // Stable across re-serialization.
        assert_eq!(json, back.to_json());
    }

    #[test]
    fn enumeration_document_round_trips() {
        let c = segment_points();
        let report = crate::oracle::enumerate(&c, &Default::default()).unwrap();
        let doc = EnumerationDocument::new(&c, report);
        let back = EnumerationDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(doc, back);
    }

    proptest! {
        #[test]
        fn rational_text_round_trips(n in -9999i64..=9999, d in 1i64..=9999) {
            let q = Rational::new(n.into(), d.into());
            prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
        }
    }
}
