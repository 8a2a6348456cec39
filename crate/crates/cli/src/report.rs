//! Run reports: everything a command computed, in a shape that serializes
//! deterministically (struct order plus insertion-ordered maps) and renders
//! to text without losing information.

use std::fmt::Write as _;

use indexmap::IndexMap;
use loosecheck::{GrassmannData, OrderKnowledge, SweepRow, Verdict};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub query: Query,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<ReportData>,
    pub versions: Versions,
}

/// What was asked, echoed back verbatim.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Query {
    pub command: String,
    pub params: IndexMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Versions {
    pub tool: String,
    pub table: String,
}

/// Payload of the informational commands (the decision commands put
/// everything into the verdict trace instead).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ReportData {
    Euler {
        chi: String,
        oriented: bool,
    },
    Dims(GrassmannData),
    Sweep {
        k: i64,
        r_max: i64,
        agreements: usize,
        disagreements: usize,
        rows: Vec<SweepRow>,
    },
    Constraint {
        chi: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        order: Option<OrderKnowledge>,
    },
}

impl Report {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "query: {}", self.query.command);
        for (key, value) in &self.query.params {
            let _ = writeln!(out, "  {key} = {value}");
        }
        if let Some(verdict) = &self.verdict {
            let _ = writeln!(out, "verdict: {}", verdict.outcome);
            let _ = writeln!(out, "trace:");
            for (i, step) in verdict.trace.iter().enumerate() {
                let tag = if step.plumbing { "" } else { " [decides]" };
                let _ = writeln!(out, "  {}. {}{tag}", i + 1, step.rule);
                let _ = writeln!(out, "     {}", step.citation);
                for (key, value) in &step.computed {
                    let _ = writeln!(out, "       {key}: {value}");
                }
            }
        }
        if let Some(data) = &self.data {
            self.render_data(data, &mut out);
        }
        let _ =
            writeln!(out, "versions: tool {}, table {}", self.versions.tool, self.versions.table);
        out
    }

    fn render_data(&self, data: &ReportData, out: &mut String) {
        match data {
            ReportData::Euler { chi, oriented } => {
                let which = if *oriented { "oriented" } else { "unoriented" };
                let _ = writeln!(out, "chi ({which}) = {chi}");
            }
            ReportData::Dims(d) => {
                let _ = writeln!(out, "m = dim V_{{r,k}} = {}", d.m);
                let _ = writeln!(out, "n = dim G_{{r,k}} = {}", d.n);
                let _ = writeln!(out, "d = dim SO(k) = {}", d.d);
                let _ = writeln!(out, "chi(G) = {}", d.chi);
                let _ = writeln!(out, "stable range (m < 2n - 2): {}", d.stable_range);
            }
            ReportData::Sweep { k, r_max, agreements, disagreements, rows } => {
                let _ = writeln!(out, "sweep: k = {k}, r = {}..={r_max}", k + 1);
                for row in rows {
                    let marker =
                        if row.agrees() { "" } else { " <-- disagrees with the closed form" };
                    let _ = writeln!(
                        out,
                        "  r = {:>4}  {:<9} expected {:<9}{marker}",
                        row.r,
                        row.verdict.outcome.to_string(),
                        row.expected.to_string(),
                    );
                }
                let _ = writeln!(out, "{agreements} agree, {disagreements} disagree");
            }
            ReportData::Constraint { chi, order } => match order {
                Some(o) => {
                    let _ = writeln!(
                        out,
                        "order constraint on a self-coincidence obstruction over a target \
                         with chi = {chi}: {o}"
                    );
                }
                None => {
                    let _ = writeln!(out, "chi = {chi} imposes no order constraint");
                }
            },
        }
    }
}
