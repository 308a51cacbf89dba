//! JSON and text renderings of core results.

use std::fmt::Write as _;

use entsplit_core::splitting::{werner_fraction_from_coefficients, PairwiseMap, ProbeOutcome, SplitReport};
use entsplit_core::{CloneTransform, Constraint, ConstraintReport, C64};
use serde::Serialize;

/// Version of every JSON document written by this crate.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PptDoc {
    pub eigenvalues: [f64; 4],
    pub min: f64,
    pub entangled: bool,
    pub boundary: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WindowDoc {
    pub alpha_sq_lower: f64,
    pub alpha_sq_upper: f64,
    pub contains_input: bool,
}

/// Serialized [`SplitReport`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportDoc {
    pub schema: u32,
    pub alpha: [f64; 2],
    pub beta: [f64; 2],
    pub alpha_sq: f64,
    pub n_branches: usize,
    pub f_w: Option<f64>,
    pub singlet_fraction: f64,
    pub ppt: PptDoc,
    pub concurrence: f64,
    pub eof: f64,
    pub xi: [f64; 4],
    pub t_matrix: [[f64; 3]; 3],
    pub f_max: f64,
    pub teleport_ok: bool,
    pub chsh: f64,
    pub chsh_violated: bool,
    pub window: Option<WindowDoc>,
}

fn pair(z: C64) -> [f64; 2] {
    [z.re, z.im]
}

impl ReportDoc {
    pub fn new(r: &SplitReport) -> Self {
        let alpha_sq = r.alpha.norm_sqr();
        Self {
            schema: SCHEMA_VERSION,
            alpha: pair(r.alpha),
            beta: pair(r.beta),
            alpha_sq,
            n_branches: r.n_branches,
            f_w: r.f_w,
            singlet_fraction: r.singlet_fraction,
            ppt: PptDoc {
                eigenvalues: r.ppt.eigenvalues,
                min: r.ppt.min_eigenvalue(),
                entangled: r.ppt.entangled,
                boundary: r.ppt.boundary,
            },
            concurrence: r.ent.concurrence,
            eof: r.ent.eof,
            xi: r.ent.xi,
            t_matrix: r.t.entries,
            f_max: r.f_max,
            teleport_ok: r.teleport_ok,
            chsh: r.chsh,
            chsh_violated: r.chsh > 1.0,
            window: r.window.map(|w| WindowDoc {
                alpha_sq_lower: w.lower,
                alpha_sq_upper: w.upper,
                contains_input: w.contains(alpha_sq),
            }),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("finite data");
        s.push('\n');
        s
    }
}

pub fn pairwise_table(map: &PairwiseMap) -> String {
    let mut out = format!("{:<8} {:>16}  {}\n", "pair", "ppt_min", "entangled");
    for p in &map.pairs {
        let name = format!("{}-{}", p.first, p.second);
        writeln!(out, "{name:<8} {:>16.9e}  {}", p.ppt_min, if p.entangled { "yes" } else { "no" }).unwrap();
    }
    out
}

#[derive(Serialize)]
struct PairDoc<'a> {
    first: &'a str,
    second: &'a str,
    ppt_min: f64,
    entangled: bool,
}

pub fn pairwise_json(alpha_sq: f64, map: &PairwiseMap) -> String {
    #[derive(Serialize)]
    struct Doc<'a> {
        schema: u32,
        alpha_sq: f64,
        pairs: Vec<PairDoc<'a>>,
    }
    let pairs = map
        .pairs
        .iter()
        .map(|p| PairDoc { first: p.first, second: p.second, ppt_min: p.ppt_min, entangled: p.entangled })
        .collect();
    let mut s = serde_json::to_string_pretty(&Doc { schema: SCHEMA_VERSION, alpha_sq, pairs }).expect("finite");
    s.push('\n');
    s
}

pub fn pairwise_csv(map: &PairwiseMap) -> String {
    let mut out = String::from("first,second,ppt_min,entangled\n");
    for p in &map.pairs {
        writeln!(out, "{},{},{},{}", p.first, p.second, crate::format::fmt_csv(p.ppt_min), p.entangled).unwrap();
    }
    out
}

/// Constraint residuals plus the singlet fraction the transform would give.
pub fn constraint_text(name: Option<&str>, t: &CloneTransform, report: &ConstraintReport, f_w: Option<f64>) -> String {
    let mut out = String::new();
    if let Some(name) = name {
        writeln!(out, "transform: {name} (ancilla dimension {})", t.ancilla_dim()).unwrap();
    }
    for c in Constraint::ALL {
        let status = if report.passes(c) { "ok" } else { "FAIL" };
        writeln!(out, "constraint {:<4} residual {:.3e}  {status}", c.name(), report.residual(c)).unwrap();
    }
    writeln!(out, "predicted F_W {:.12}", werner_fraction_from_coefficients(t) + 0.0).unwrap();
    match f_w {
        Some(f) => writeln!(out, "singlet split F_W {:.12}", f + 0.0).unwrap(),
        None => writeln!(out, "singlet split F_W n/a").unwrap(),
    }
    out
}

pub fn probe_text(trials: usize, seed: u64, p: &ProbeOutcome) -> String {
    format!(
        "trials {trials} (seed {seed}), evaluated {}, projected onto family {}\n\
         max F_W {:.12} at (a, c) = ({:.6}, {:.6})\n\
         min F_W {:.12} at (a, c) = ({:.6}, {:.6})\n\
         min F_C {:.12}\n",
        p.evaluated,
        p.projected,
        p.max_f_w,
        p.argmax.0,
        p.argmax.1,
        p.min_f_w,
        p.argmin.0,
        p.argmin.1,
        p.min_cloning_fidelity(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use entsplit_core::splitting::split_schmidt;
    use entsplit_core::SchmidtParams;

    #[test]
    fn report_at_symmetric_point() {
        let r = split_schmidt(&SchmidtParams::from_alpha_sq(0.5).unwrap()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&ReportDoc::new(&r).to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert!((v["f_w"].as_f64().unwrap() - 0.75).abs() < 1e-12);
        assert!((v["f_max"].as_f64().unwrap() - 5.0 / 6.0).abs() < 1e-12);
        assert_eq!(v["window"]["contains_input"], true);
    }
}
