use std::io::{self, Write};

use serde::Serialize;

use linco::algebra::ExactPoly;
use linco::linearize::Method;
use linco::partition::{PartitionStats, SetPartition};

use super::Format;

#[derive(Serialize)]
pub struct MethodValue {
    pub method: &'static str,
    pub value: ExactPoly,
    pub text: String,
}

impl MethodValue {
    pub fn new(method: Method, value: ExactPoly) -> Self {
        MethodValue {
            method: method.name(),
            text: value.to_string(),
            value,
        }
    }
}

#[derive(Serialize)]
pub struct LinearizeRecord {
    pub command: &'static str,
    pub family: &'static str,
    pub composition: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eval: Option<String>,
    pub results: Vec<MethodValue>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    pub matched: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Serialize)]
pub struct ExpandRecord {
    pub command: &'static str,
    pub family: &'static str,
    pub composition: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eval: Option<String>,
    pub coeffs: Vec<ExactPoly>,
    pub coeffs_text: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

pub struct PartitionRecord {
    pub partition: SetPartition,
    pub stats: Option<PartitionStats>,
}

fn degrees_text(parts: &[usize]) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("records serialize");
    s.push('\n');
    s
}

fn csv_text(rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
}

/// Text: one line per composition, `partition` / `oracle` / `match` lines
/// when both methods ran. JSON: one object per line. CSV: one row per
/// composition and method.
pub fn linearize(records: &[LinearizeRecord], format: Format) -> String {
    match format {
        Format::Json => records.iter().map(json_line).collect(),
        Format::Text => {
            let mut out = String::new();
            for r in records {
                if records.len() > 1 {
                    out.push_str(&format!("({}): ", degrees_text(&r.composition)));
                }
                match r.matched {
                    None => out.push_str(&format!("{}\n", r.results[0].text)),
                    Some(m) => {
                        let fields: Vec<String> = r
                            .results
                            .iter()
                            .map(|v| format!("{}: {}", v.method, v.text))
                            .chain(std::iter::once(format!("match: {m}")))
                            .collect();
                        out.push_str(&fields.join("\n"));
                        out.push('\n');
                    }
                }
            }
            out
        }
        Format::Csv => {
            let mut rows = vec![vec![
                "family".into(),
                "composition".into(),
                "method".into(),
                "value".into(),
            ]];
            for r in records {
                for v in &r.results {
                    rows.push(vec![
                        r.family.to_string(),
                        degrees_text(&r.composition),
                        v.method.to_string(),
                        v.text.clone(),
                    ]);
                }
            }
            csv_text(rows)
        }
    }
}

/// Text: `[c_0, c_1, ..., c_n]`. CSV: one row per basis index.
pub fn expand(records: &[ExpandRecord], format: Format) -> String {
    match format {
        Format::Json => records.iter().map(json_line).collect(),
        Format::Text => {
            let mut out = String::new();
            for r in records {
                if records.len() > 1 {
                    out.push_str(&format!("({}): ", degrees_text(&r.composition)));
                }
                out.push_str(&format!("[{}]\n", r.coeffs_text.join(", ")));
            }
            out
        }
        Format::Csv => {
            let mut rows = vec![vec![
                "family".into(),
                "composition".into(),
                "index".into(),
                "coefficient".into(),
            ]];
            for r in records {
                for (m, text) in r.coeffs_text.iter().enumerate() {
                    rows.push(vec![
                        r.family.to_string(),
                        degrees_text(&r.composition),
                        m.to_string(),
                        text.clone(),
                    ]);
                }
            }
            csv_text(rows)
        }
    }
}

const STAT_NAMES: [&str; 9] = [
    "blocks",
    "singletons",
    "pairs",
    "rc",
    "sd",
    "outer",
    "inner",
    "inner_singletons",
    "noncrossing",
];

fn stat_values(s: &PartitionStats) -> [String; 9] {
    [
        s.block_count.to_string(),
        s.singletons.to_string(),
        s.pair_blocks.to_string(),
        s.restricted_crossings.to_string(),
        s.singleton_depth.to_string(),
        s.outer.to_string(),
        s.inner.to_string(),
        s.inner_singletons.to_string(),
        s.noncrossing.to_string(),
    ]
}

#[derive(Serialize)]
struct PartitionJson<'a> {
    partition: String,
    blocks: &'a [Vec<usize>],
    #[serde(skip_serializing_if = "Option::is_none")]
    stats: Option<serde_json::Map<String, serde_json::Value>>,
}

/// Streams the listing; large enumerations never sit in memory.
pub fn partitions(
    records: impl Iterator<Item = PartitionRecord>,
    format: Format,
    with_stats: bool,
    out: &mut impl Write,
) -> io::Result<()> {
    let mut out = io::BufWriter::new(out);
    match format {
        Format::Text => {
            for r in records {
                write!(out, "{}", r.partition)?;
                if let Some(s) = &r.stats {
                    for (name, value) in STAT_NAMES.iter().zip(stat_values(s)) {
                        write!(out, " {name}={value}")?;
                    }
                }
                writeln!(out)?;
            }
        }
        Format::Json => {
            for r in records {
                let stats = r.stats.as_ref().map(|s| {
                    let mut m = serde_json::Map::new();
                    m.insert("blocks".into(), s.block_count.into());
                    m.insert("singletons".into(), s.singletons.into());
                    m.insert("pairs".into(), s.pair_blocks.into());
                    m.insert("rc".into(), s.restricted_crossings.into());
                    m.insert("sd".into(), s.singleton_depth.into());
                    m.insert("outer".into(), s.outer.into());
                    m.insert("inner".into(), s.inner.into());
                    m.insert("inner_singletons".into(), s.inner_singletons.into());
                    m.insert("noncrossing".into(), s.noncrossing.into());
                    m
                });
                let rec = PartitionJson {
                    partition: r.partition.to_string(),
                    blocks: r.partition.blocks(),
                    stats,
                };
                out.write_all(json_line(&rec).as_bytes())?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header = vec!["partition"];
            if with_stats {
                header.extend(STAT_NAMES);
            }
            w.write_record(&header)?;
            for r in records {
                let mut row = vec![r.partition.to_string()];
                if let Some(s) = &r.stats {
                    row.extend(stat_values(s));
                }
                w.write_record(&row)?;
            }
            w.flush()?;
            return Ok(());
        }
    }
    out.flush()
}
