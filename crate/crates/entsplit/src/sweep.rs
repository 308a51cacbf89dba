//! Parameter sweeps and their tabular output.

use std::fmt::Write as _;

use entsplit_core::measures::eof_from_concurrence;
use entsplit_core::splitting::{split_n_branch, split_werner_input, AGREEMENT_TOL};
use entsplit_core::{Error, SchmidtParams};
use serde::Serialize;

use crate::error::CliError;
use crate::format::fmt_csv;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Uniform grid over `|α|²` and the branch counts to evaluate.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub alpha_sq_min: f64,
    pub alpha_sq_max: f64,
    pub points: usize,
    pub n_branches: Vec<usize>,
}

impl Default for SweepSpec {
    fn default() -> Self {
        Self { alpha_sq_min: 0.0, alpha_sq_max: 1.0, points: 101, n_branches: vec![2, 3, 4] }
    }
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), CliError> {
        let unit = 0.0..=1.0;
        if !unit.contains(&self.alpha_sq_min) || !unit.contains(&self.alpha_sq_max) {
            return Err(CliError::Usage("alpha-sq bounds must lie in [0, 1]".into()));
        }
        if self.alpha_sq_min > self.alpha_sq_max {
            return Err(CliError::Usage("alpha-sq-min exceeds alpha-sq-max".into()));
        }
        if self.points < 2 {
            return Err(CliError::Usage("need at least 2 points".into()));
        }
        if self.n_branches.is_empty() {
            return Err(CliError::Usage("no branch counts given".into()));
        }
        if let Some(&n) = self.n_branches.iter().find(|&&n| n < 2) {
            return Err(CliError::Usage(format!("branch count {n} is below 2")));
        }
        Ok(())
    }

    pub fn grid(&self) -> Vec<f64> {
        linspace(self.alpha_sq_min, self.alpha_sq_max, self.points)
    }
}

/// `points` evenly spaced values from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    (0..points).map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Num(f64),
    Bool(bool),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    /// Header plus one line per row, LF-terminated.
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                match cell {
                    Cell::Num(x) => out.push_str(&fmt_csv(*x)),
                    Cell::Bool(b) => write!(out, "{b}").unwrap(),
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            schema: u32,
            #[serde(flatten)]
            table: &'a Table,
        }
        let mut s = serde_json::to_string_pretty(&Doc { schema: 1, table: self }).expect("finite data");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    pub fn column(&self, name: &str) -> Option<Vec<Cell>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }
}

/// Entanglement of formation of one branch versus `|α|`, one column per
/// branch count.
///
/// Values use the closed-form concurrence `(2/N)|αβ|`; each point is also
/// checked against the concurrence computed from the branch density matrix.
pub fn figure1(spec: &SweepSpec) -> Result<Table, CliError> {
    spec.validate()?;
    let mut columns = vec!["abs_alpha".to_owned()];
    columns.extend(spec.n_branches.iter().map(|n| format!("eof_{n}")));
    let mut rows = Vec::with_capacity(spec.points);
    for x in spec.grid() {
        let p = SchmidtParams::from_alpha_sq(x)?;
        let mut row = vec![Cell::Num(p.alpha().norm())];
        for &n in &spec.n_branches {
            let c = 2.0 / n as f64 * p.abs_alpha_beta();
            let numeric = split_n_branch(&p, n)?.ent.concurrence;
            if (numeric - c).abs() > AGREEMENT_TOL {
                return Err(Error::ClosedFormMismatch((numeric - c).abs()).into());
            }
            row.push(Cell::Num(eof_from_concurrence(c)));
        }
        rows.push(row);
    }
    Ok(Table { columns, rows })
}

/// Result of scanning Werner inputs.
#[derive(Clone, Debug, PartialEq)]
pub struct WernerScan {
    pub table: Table,
    /// Smallest and largest `fw_in` whose output is separable while the
    /// input is entangled.
    pub interval: Option<(f64, f64)>,
    /// Whether those grid points form one contiguous run.
    pub contiguous: bool,
}

pub fn werner_scan(points: usize) -> Result<WernerScan, CliError> {
    if points < 2 {
        return Err(CliError::Usage("need at least 2 points".into()));
    }
    let columns = ["fw_in", "output_ppt_min", "output_separable", "input_entangled"];
    let mut rows = Vec::with_capacity(points);
    let mut hits = Vec::new();
    for (i, fw) in linspace(0.0, 1.0, points).into_iter().enumerate() {
        let w = split_werner_input(fw)?;
        if w.separable && w.input_entangled {
            hits.push((i, fw));
        }
        rows.push(vec![
            Cell::Num(fw),
            Cell::Num(w.ppt.min_eigenvalue()),
            Cell::Bool(w.separable),
            Cell::Bool(w.input_entangled),
        ]);
    }
    let contiguous = hits.windows(2).all(|w| w[1].0 == w[0].0 + 1);
    let interval = hits.first().zip(hits.last()).map(|(a, b)| (a.1, b.1));
    Ok(WernerScan { table: Table { columns: columns.map(str::to_owned).to_vec(), rows }, interval, contiguous })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        assert!(SweepSpec::default().validate().is_ok());
        let bad = [
            SweepSpec { points: 1, ..Default::default() },
            SweepSpec { alpha_sq_min: 0.6, alpha_sq_max: 0.4, ..Default::default() },
            SweepSpec { alpha_sq_max: 1.5, ..Default::default() },
            SweepSpec { n_branches: vec![2, 1], ..Default::default() },
            SweepSpec { n_branches: vec![], ..Default::default() },
        ];
        for s in bad {
            assert!(matches!(s.validate(), Err(CliError::Usage(_))), "{s:?}");
        }
    }

    #[test]
    fn figure1_shape_and_endpoints() {
        let t = figure1(&SweepSpec::default()).unwrap();
        assert_eq!(t.columns, ["abs_alpha", "eof_2", "eof_3", "eof_4"]);
        assert_eq!(t.rows.len(), 101);
        assert_eq!(t.rows[0][1], Cell::Num(0.0));
        assert_eq!(t.rows[100][1], Cell::Num(0.0));
    }

    #[test]
    fn csv_layout() {
        let t = Table { columns: vec!["x".into(), "ok".into()], rows: vec![vec![Cell::Num(0.5), Cell::Bool(true)]] };
        assert_eq!(t.to_csv(), "x,ok\n0.5,true\n");
        let v: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["rows"][0][1], true);
    }
}
