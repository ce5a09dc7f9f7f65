//! Report rows shared by the sweep and scan commands: fixed CSV column
//! order, optional JSON lines, and a trailing summary block.

use std::io::Write;

pub const CSV_HEADER: &str =
    "graph_id,family,order,complement_size,certificate_target,certificate_verified,hadwiger,nodes,ms";

#[derive(Clone, Debug, Default)]
pub struct Row {
    pub id: String,
    pub family: String,
    pub order: Option<usize>,
    pub complement_size: Option<usize>,
    pub certificate_target: String,
    pub certificate_verified: Option<bool>,
    pub hadwiger: Option<usize>,
    pub nodes: u64,
    pub ms: u128,
    pub pass: bool,
}

impl Row {
    pub fn csv(&self) -> String {
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map(|x| x.to_string()).unwrap_or_default()
        }
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.id,
            self.family,
            opt(&self.order),
            opt(&self.complement_size),
            self.certificate_target,
            opt(&self.certificate_verified),
            opt(&self.hadwiger),
            self.nodes,
            self.ms
        )
    }

    pub fn json(&self) -> String {
        serde_json::json!({
            "graph_id": self.id,
            "family": self.family,
            "order": self.order,
            "complement_size": self.complement_size,
            "certificate_target": self.certificate_target,
            "certificate_verified": self.certificate_verified,
            "hadwiger": self.hadwiger,
            "nodes": self.nodes,
            "ms": self.ms,
            "pass": self.pass,
        })
        .to_string()
    }
}

pub struct Report {
    pub rows: Vec<Row>,
    pub summary_id: String,
    pub range: String,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    /// Writes the report; `deterministic` zeroes the timing column so runs
    /// are byte-stable.
    pub fn emit(&self, out: &mut impl Write, json: bool, deterministic: bool) -> std::io::Result<()> {
        let verdict = if self.pass() { "pass" } else { "fail" };
        if json {
            for row in &self.rows {
                let mut row = row.clone();
                if deterministic {
                    row.ms = 0;
                }
                writeln!(out, "{}", row.json())?;
            }
            writeln!(
                out,
                "{}",
                serde_json::json!({
                    "summary": {"id": self.summary_id, "range": self.range, "verdict": verdict}
                })
            )?;
        } else {
            writeln!(out, "{CSV_HEADER}")?;
            for row in &self.rows {
                let mut row = row.clone();
                if deterministic {
                    row.ms = 0;
                }
                writeln!(out, "{}", row.csv())?;
            }
            writeln!(out, "summary,{},{},{}", self.summary_id, self.range, verdict)?;
        }
        Ok(())
    }
}
