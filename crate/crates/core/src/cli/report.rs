//! Unit-tagged run reports and their text, JSON and CSV renderings.

use std::fmt::Write as _;

use serde::Serialize;

use super::units::format_sig;
use crate::minkowski::FourVector;
use crate::trajectory::Trajectory;

/// Unit tags. Natural units have `m_e = c = hbar = 1`.
pub mod unit {
    pub const DIMENSIONLESS: &str = "1";
    pub const ENERGY: &str = "m_e c^2";
    pub const MOMENTUM: &str = "m_e c";
    pub const MOMENTUM_SQ: &str = "(m_e c)^2";
    pub const VELOCITY: &str = "c";
    pub const PHASE: &str = "rad";
    pub const EV: &str = "eV";
    pub const INTENSITY: &str = "W/cm^2";
    pub const LENGTH: &str = "m";
    pub const DENSITY: &str = "m^-3";
    pub const COUNT: &str = "count";
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Number(f64),
    Vector(Vec<f64>),
    Text(String),
}

impl Value {
    fn render(&self) -> String {
        match self {
            Value::Number(v) => format_sig(*v),
            Value::Vector(vs) => format!("({})", vs.iter().map(|v| format_sig(*v)).collect::<Vec<_>>().join(", ")),
            Value::Text(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Quantity {
    pub name: String,
    pub value: Value,
    pub unit: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Column {
    pub name: String,
    pub unit: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table {
    pub title: String,
    pub columns: Vec<Column>,
    pub rows: Vec<Vec<f64>>,
}

/// One invariant checked by `verify`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub module: String,
    pub name: String,
    pub worst: f64,
    pub tolerance: f64,
    pub unit: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<Quantity>,
    pub outputs: Vec<Quantity>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub tables: Vec<Table>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Check>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport { command: command.to_string(), ..Default::default() }
    }

    pub fn input(&mut self, name: &str, value: Value, unit: &str) {
        self.inputs.push(Quantity { name: name.to_string(), value, unit: unit.to_string() });
    }

    pub fn output(&mut self, name: &str, value: f64, unit: &str) {
        self.outputs.push(Quantity { name: name.to_string(), value: Value::Number(value), unit: unit.to_string() });
    }

    pub fn output_vector(&mut self, name: &str, v: &FourVector, unit: &str) {
        self.outputs.push(Quantity {
            name: name.to_string(),
            value: Value::Vector(v.components().to_vec()),
            unit: unit.to_string(),
        });
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Human-readable table.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.command);
        for (title, qs) in [("inputs", &self.inputs), ("outputs", &self.outputs)] {
            if qs.is_empty() {
                continue;
            }
            let _ = writeln!(out, "{title}:");
            let rendered: Vec<(String, String, String)> =
                qs.iter().map(|q| (q.name.clone(), q.value.render(), q.unit.clone())).collect();
            let w0 = rendered.iter().map(|r| r.0.chars().count()).max().unwrap_or(0);
            let w1 = rendered.iter().map(|r| r.1.chars().count()).max().unwrap_or(0);
            for (n, v, u) in rendered {
                let _ = writeln!(out, "  {n:<w0$}  {v:<w1$}  [{u}]");
            }
        }
        for t in &self.tables {
            let _ = writeln!(out, "{}:", t.title);
            let header: Vec<String> = t.columns.iter().map(|c| format!("{} [{}]", c.name, c.unit)).collect();
            let cells: Vec<Vec<String>> = t.rows.iter().map(|r| r.iter().map(|v| format_sig(*v)).collect()).collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|j| cells.iter().map(|r| r[j].len()).chain([header[j].chars().count()]).max().unwrap_or(0))
                .collect();
            let line = |row: &[String]| {
                row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect::<Vec<_>>().join("  ")
            };
            let _ = writeln!(out, "  {}", line(&header));
            for r in &cells {
                let _ = writeln!(out, "  {}", line(r));
            }
        }
        if !self.checks.is_empty() {
            let w = self.checks.iter().map(|c| c.module.len() + c.name.len() + 1).max().unwrap_or(0);
            for c in &self.checks {
                let label = format!("{}/{}", c.module, c.name);
                let _ = writeln!(
                    out,
                    "  [{}] {label:<w$}  worst={}  tol={}  [{}]",
                    if c.pass { "PASS" } else { "FAIL" },
                    format_sig(c.worst),
                    format_sig(c.tolerance),
                    c.unit
                );
            }
            let passed = self.checks.iter().filter(|c| c.pass).count();
            let _ = writeln!(out, "{passed}/{} invariants hold", self.checks.len());
        }
        out
    }
}

/// Trajectory samples as CSV with columns
/// `phase,t,x,y,z,p0,px,py,pz` (phase in rad, position in `hbar/(m_e c)`,
/// momentum in `m_e c`).
pub fn trajectory_csv(traj: &Trajectory) -> String {
    let mut out = String::from("phase,t,x,y,z,p0,px,py,pz\n");
    for s in &traj.states {
        let mut row = vec![format_sig(s.phase)];
        row.extend(s.position.components().iter().map(|v| format_sig(*v)));
        row.extend(s.momentum.components().iter().map(|v| format_sig(*v)));
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
