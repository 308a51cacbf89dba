//! JSON documents describing a [`CloneTransform`].
//!
//! ```json
//! {
//!   "name": "optimal",
//!   "d_anc": 2,
//!   "a": [0.816496580927726, 0.0], "b": [0.408248290463863, 0.0], "c": [0.0, 0.0],
//!   "a_t": [0.816496580927726, 0.0], "b_t": [0.408248290463863, 0.0], "c_t": [0.0, 0.0],
//!   "anc_A": [[1, 0], [0, 0]], "anc_B": [[0, 0], [1, 0]], "anc_C": [[1, 0], [0, 0]],
//!   "anc_A_t": [[0, 0], [1, 0]], "anc_B_t": [[1, 0], [0, 0]], "anc_C_t": [[1, 0], [0, 0]]
//! }
//! ```
//!
//! Complex numbers are `[re, im]` pairs. Unsuffixed fields describe the image
//! of `|0⟩`, `_t` fields the image of `|1⟩`; ancilla kets have `d_anc` entries.
//! `name` is optional.

use std::fs;
use std::path::Path;

use entsplit_core::cloner::Branch;
use entsplit_core::{CloneTransform, C64};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

type Pair = [f64; 2];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransformDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub d_anc: usize,
    pub a: Pair,
    pub b: Pair,
    pub c: Pair,
    pub a_t: Pair,
    pub b_t: Pair,
    pub c_t: Pair,
    #[serde(rename = "anc_A")]
    pub anc_a: Vec<Pair>,
    #[serde(rename = "anc_B")]
    pub anc_b: Vec<Pair>,
    #[serde(rename = "anc_C")]
    pub anc_c: Vec<Pair>,
    #[serde(rename = "anc_A_t")]
    pub anc_a_t: Vec<Pair>,
    #[serde(rename = "anc_B_t")]
    pub anc_b_t: Vec<Pair>,
    #[serde(rename = "anc_C_t")]
    pub anc_c_t: Vec<Pair>,
}

fn c(p: Pair) -> C64 {
    C64::new(p[0], p[1])
}

fn pair(z: C64) -> Pair {
    [z.re, z.im]
}

impl TransformDoc {
    pub fn from_transform(t: &CloneTransform, name: Option<&str>) -> Self {
        let (z, o) = (t.zero_branch(), t.one_branch());
        let ket = |v: &[C64]| v.iter().copied().map(pair).collect();
        Self {
            name: name.map(str::to_owned),
            d_anc: t.ancilla_dim(),
            a: pair(z.a),
            b: pair(z.b),
            c: pair(z.c),
            a_t: pair(o.a),
            b_t: pair(o.b),
            c_t: pair(o.c),
            anc_a: ket(&z.anc_a),
            anc_b: ket(&z.anc_b),
            anc_c: ket(&z.anc_c),
            anc_a_t: ket(&o.anc_a),
            anc_b_t: ket(&o.anc_b),
            anc_c_t: ket(&o.anc_c),
        }
    }

    /// Validate and build the transform. Wrong ket lengths are usage errors,
    /// non-unitary images are reported by the core crate.
    pub fn to_transform(&self) -> Result<CloneTransform, CliError> {
        let kets = [
            ("anc_A", &self.anc_a),
            ("anc_B", &self.anc_b),
            ("anc_C", &self.anc_c),
            ("anc_A_t", &self.anc_a_t),
            ("anc_B_t", &self.anc_b_t),
            ("anc_C_t", &self.anc_c_t),
        ];
        for (key, v) in kets {
            if v.len() != self.d_anc {
                return Err(CliError::Usage(format!("{key} has {} entries, d_anc is {}", v.len(), self.d_anc)));
            }
        }
        let ket = |v: &[Pair]| v.iter().copied().map(c).collect();
        let zero = Branch {
            a: c(self.a),
            b: c(self.b),
            c: c(self.c),
            anc_a: ket(&self.anc_a),
            anc_b: ket(&self.anc_b),
            anc_c: ket(&self.anc_c),
        };
        let one = Branch {
            a: c(self.a_t),
            b: c(self.b_t),
            c: c(self.c_t),
            anc_a: ket(&self.anc_a_t),
            anc_b: ket(&self.anc_b_t),
            anc_c: ket(&self.anc_c_t),
        };
        Ok(CloneTransform::new(zero, one)?)
    }
}

pub fn read_transform(path: &Path) -> Result<(Option<String>, CloneTransform), CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let doc: TransformDoc =
        serde_json::from_str(&text).map_err(|source| CliError::Parse { path: path.to_owned(), source })?;
    let t = doc.to_transform()?;
    Ok((doc.name, t))
}

pub fn to_json(t: &CloneTransform, name: Option<&str>) -> String {
    let mut s = serde_json::to_string_pretty(&TransformDoc::from_transform(t, name)).expect("plain data");
    s.push('\n');
    s
}
