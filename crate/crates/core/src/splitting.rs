//! The splitting experiments: singlet splitting and the singlet fraction,
//! Schmidt-state splitting with full diagnostics, the N-branch closed forms,
//! the pairwise entanglement map, Werner-state inputs and the optimality probe.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cloner::CloneTransform;
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, SubsystemLayout, C64};
use crate::measures::{
    beats_classical, chsh_statistic, concurrence, ppt_check, t_matrix, teleport_fidelity, EntanglementReport,
    PptResult, TMatrix,
};
use crate::states::{
    bell_basis_components, bell_state, schmidt_state, werner_state, BellState, DensityMatrix, SchmidtParams,
};

/// Agreement required between simulation and closed forms.
pub const AGREEMENT_TOL: f64 = 1e-9;
/// Max Bell-basis deviation accepted for Werner form.
pub const WERNER_TOL: f64 = 1e-9;

/// Open interval of `|α|²` for which the split channel beats classical
/// teleportation: `½(1 ± √(3(2N+1))/(N+2))`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    pub lower: f64,
    pub upper: f64,
}

impl Window {
    pub fn for_branches(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidBranchCount(n));
        }
        let n = n as f64;
        let half = 0.5 * libm::sqrt(3.0 * (2.0 * n + 1.0)) / (n + 2.0);
        Ok(Self { lower: 0.5 - half, upper: 0.5 + half })
    }

    pub fn half_width(&self) -> f64 {
        0.5 * (self.upper - self.lower)
    }

    pub fn contains(&self, alpha_sq: f64) -> bool {
        self.lower < alpha_sq && alpha_sq < self.upper
    }
}

/// All diagnostics of one splitting run on the `(A, B1)` output.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitReport {
    pub alpha: C64,
    pub beta: C64,
    pub n_branches: usize,
    /// Werner fraction, present only when the output has Werner form.
    pub f_w: Option<f64>,
    /// `⟨Ψ⁻|ρ|Ψ⁻⟩`, defined for every output.
    pub singlet_fraction: f64,
    pub ppt: PptResult,
    pub ent: EntanglementReport,
    pub t: TMatrix,
    pub f_max: f64,
    pub chsh: f64,
    pub teleport_ok: bool,
    pub window: Option<Window>,
    pub output: DensityMatrix,
}

/// Werner fraction of `rho` if it is Bell-diagonal with three equal
/// non-singlet weights.
pub fn werner_fraction(rho: &DensityMatrix) -> Result<f64> {
    let comps = bell_basis_components(rho)?;
    let f = comps[(0, 0)].re;
    let r = (1.0 - f) / 3.0;
    let mut dev: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            let want = if i != j { 0.0 } else if i == 0 { f } else { r };
            dev = dev.max((comps[(i, j)] - C64::new(want, 0.0)).norm());
        }
    }
    if dev > WERNER_TOL {
        return Err(Error::NotWerner(dev));
    }
    Ok(f)
}

fn diagnose(output: DensityMatrix, alpha: C64, beta: C64, n: usize, window: Option<Window>) -> Result<SplitReport> {
    let ppt = ppt_check(&output)?;
    let ent = concurrence(&output)?;
    let t = t_matrix(&output)?;
    let f_max = teleport_fidelity(&t);
    let singlet_fraction = output.overlap(&bell_state(BellState::PsiMinus));
    Ok(SplitReport {
        alpha,
        beta,
        n_branches: n,
        f_w: werner_fraction(&output).ok(),
        singlet_fraction,
        ppt,
        ent,
        chsh: chsh_statistic(&t),
        t,
        f_max,
        teleport_ok: beats_classical(f_max),
        window,
        output,
    })
}

/// Singlet fraction predicted by the coefficients alone: `¼[3(|a|²-|c|²)+1]`.
pub fn werner_fraction_from_coefficients(t: &CloneTransform) -> f64 {
    0.25 * (3.0 * t.shrinking_factor() + 1.0)
}

/// Cloning fidelity `⟨ψ|ρ_B1|ψ⟩` averaged over the six Bloch-axis states.
pub fn cloning_fidelity(t: &CloneTransform) -> Result<f64> {
    let h = core::f64::consts::FRAC_1_SQRT_2;
    let r = |x: f64| C64::new(x, 0.0);
    let axis_states = [
        [r(1.0), r(0.0)],
        [r(0.0), r(1.0)],
        [r(h), r(h)],
        [r(h), r(-h)],
        [r(h), C64::new(0.0, h)],
        [r(h), C64::new(0.0, -h)],
    ];
    let mut total = 0.0;
    for psi in axis_states {
        let rho = t.clone_output(psi)?;
        total += rho.matrix().expectation(&psi).re;
    }
    Ok(total / 6.0)
}

/// Split a singlet with `t` and report the Werner output.
///
/// The simulated singlet fraction must agree with the coefficient formula.
pub fn split_singlet(t: &CloneTransform) -> Result<SplitReport> {
    t.check_constraints().into_result()?;
    let input = bell_state(BellState::PsiMinus).to_density();
    let output = t.apply_split(&input)?.reduce(&["A", "B1"])?;
    let simulated = werner_fraction(&output)?;
    let predicted = werner_fraction_from_coefficients(t);
    if (simulated - predicted).abs() > AGREEMENT_TOL {
        return Err(Error::ClosedFormMismatch((simulated - predicted).abs()));
    }
    let h = C64::new(core::f64::consts::FRAC_1_SQRT_2, 0.0);
    diagnose(output, h, h, 2, None)
}

/// Closed-form `(A, B)` output of splitting `α|01⟩ - β|10⟩` into `n` branches.
pub fn n_branch_density(p: &SchmidtParams, n: usize) -> Result<DensityMatrix> {
    if n < 2 {
        return Err(Error::InvalidBranchCount(n));
    }
    let nf = n as f64;
    let (a, b) = (p.alpha(), p.beta());
    let (a2, b2) = (a.norm_sqr(), b.norm_sqr());
    let off = a * b.conj() * (-(nf + 2.0));
    let mut m = ComplexMatrix::zeros(4, 4);
    m[(0, 0)] = C64::new((nf - 1.0) * a2, 0.0);
    m[(1, 1)] = C64::new((2.0 * nf + 1.0) * a2, 0.0);
    m[(1, 2)] = off;
    m[(2, 1)] = off.conj();
    m[(2, 2)] = C64::new((2.0 * nf + 1.0) * b2, 0.0);
    m[(3, 3)] = C64::new((nf - 1.0) * b2, 0.0);
    DensityMatrix::new(m.scale_real(1.0 / (3.0 * nf)), SubsystemLayout::qubits(&["A", "B1"])?)
}

fn simulate_schmidt(p: &SchmidtParams) -> Result<DensityMatrix> {
    let input = schmidt_state(p).to_density();
    let full = CloneTransform::optimal().apply_split(&input)?;
    let ab1 = full.reduce(&["A", "B1"])?;
    let ab2 = full.reduce(&["A", "B2"])?;
    let asym = ab1.matrix().max_abs_diff(ab2.matrix());
    if asym > AGREEMENT_TOL {
        return Err(Error::ClosedFormMismatch(asym));
    }
    Ok(ab1)
}

/// Split a Schmidt-form state with the optimal cloner.
///
/// The simulated reduction must match the two-branch closed form entrywise.
pub fn split_schmidt(p: &SchmidtParams) -> Result<SplitReport> {
    let simulated = simulate_schmidt(p)?;
    let closed = n_branch_density(p, 2)?;
    let dev = simulated.matrix().max_abs_diff(closed.matrix());
    if dev > AGREEMENT_TOL {
        return Err(Error::ClosedFormMismatch(dev));
    }
    diagnose(simulated, p.alpha(), p.beta(), 2, Some(Window::for_branches(2)?))
}

/// Split into `n` branches using the closed-form output; for `n = 2` the
/// closed form is cross-checked against the simulation.
pub fn split_n_branch(p: &SchmidtParams, n: usize) -> Result<SplitReport> {
    let closed = n_branch_density(p, n)?;
    if n == 2 {
        let dev = simulate_schmidt(p)?.matrix().max_abs_diff(closed.matrix());
        if dev > AGREEMENT_TOL {
            return Err(Error::ClosedFormMismatch(dev));
        }
    }
    diagnose(closed, p.alpha(), p.beta(), n, Some(Window::for_branches(n)?))
}

/// PPT status of one pair of parties.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairStatus {
    pub first: &'static str,
    pub second: &'static str,
    pub ppt_min: f64,
    pub entangled: bool,
}

/// Entanglement between every pair of `A, B1, B2, anc` after splitting.
#[derive(Clone, Debug, PartialEq)]
pub struct PairwiseMap {
    pub pairs: Vec<PairStatus>,
}

impl PairwiseMap {
    /// Lookup in either order.
    pub fn get(&self, x: &str, y: &str) -> Option<&PairStatus> {
        self.pairs.iter().find(|p| (p.first == x && p.second == y) || (p.first == y && p.second == x))
    }
}

pub const PARTIES: [&str; 4] = ["A", "B1", "B2", "anc"];

pub fn pairwise_entanglement(p: &SchmidtParams) -> Result<PairwiseMap> {
    let a2 = p.alpha_sq();
    if !(a2 > 0.0 && a2 < 1.0) {
        return Err(Error::OutOfRange { what: "|alpha|^2 (must be strictly between 0 and 1)", value: a2 });
    }
    let full = CloneTransform::optimal().apply_split(&schmidt_state(p).to_density())?;
    let mut pairs = Vec::with_capacity(6);
    for (i, &x) in PARTIES.iter().enumerate() {
        for &y in &PARTIES[i + 1..] {
            let ppt = ppt_check(&full.reduce(&[x, y])?)?;
            pairs.push(PairStatus { first: x, second: y, ppt_min: ppt.min_eigenvalue(), entangled: ppt.entangled });
        }
    }
    Ok(PairwiseMap { pairs })
}

/// Outcome of cloning Bob's half of a Werner state.
#[derive(Clone, Debug, PartialEq)]
pub struct WernerSplit {
    pub fw_in: f64,
    pub output: DensityMatrix,
    pub ppt: PptResult,
    pub separable: bool,
    pub input_entangled: bool,
}

pub fn split_werner_input(fw_in: f64) -> Result<WernerSplit> {
    let input = werner_state(fw_in)?;
    let input_entangled = ppt_check(&input)?.entangled;
    let output = CloneTransform::optimal().apply_split(&input)?.reduce(&["A", "B1"])?;
    let ppt = ppt_check(&output)?;
    Ok(WernerSplit { fw_in, output, separable: !ppt.entangled, ppt, input_entangled })
}

/// Result of a random search over constraint-satisfying transforms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProbeOutcome {
    /// Transforms evaluated, anchors included.
    pub evaluated: usize,
    /// Samples that fell outside the family and were projected back onto it.
    pub projected: usize,
    pub max_f_w: f64,
    pub min_f_w: f64,
    /// `(a, c)` of the maximizer and minimizer.
    pub argmax: (f64, f64),
    pub argmin: (f64, f64),
}

impl ProbeOutcome {
    /// Cloning fidelity matching the smallest singlet fraction found.
    pub fn min_cloning_fidelity(&self) -> f64 {
        (2.0 * self.min_f_w + 1.0) / 3.0
    }
}

/// Search `trials` random members of [`CloneTransform::isotropic_family`]
/// (plus the optimal and universal-NOT anchors) for the largest singlet
/// fraction after splitting a singlet.
///
/// Samples `(a, c)` are drawn uniformly from the quarter disk; samples outside
/// the family are projected onto it by bisection towards the optimal point.
pub fn optimality_probe(trials: usize, seed: u64) -> Result<ProbeOutcome> {
    if trials == 0 {
        return Err(Error::InvalidTrials);
    }
    let anchor = (libm::sqrt(2.0 / 3.0), 0.0);
    let not_point = (libm::sqrt(1.0 / 6.0), core::f64::consts::FRAC_1_SQRT_2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut out = ProbeOutcome {
        evaluated: 0,
        projected: 0,
        max_f_w: f64::NEG_INFINITY,
        min_f_w: f64::INFINITY,
        argmax: anchor,
        argmin: anchor,
    };
    let record = |out: &mut ProbeOutcome, t: &CloneTransform, at: (f64, f64)| -> Result<()> {
        let f = split_singlet(t)?.f_w.ok_or(Error::NotWerner(f64::NAN))?;
        out.evaluated += 1;
        if f > out.max_f_w {
            out.max_f_w = f;
            out.argmax = at;
        }
        if f < out.min_f_w {
            out.min_f_w = f;
            out.argmin = at;
        }
        Ok(())
    };

    record(&mut out, &CloneTransform::optimal(), anchor)?;
    record(&mut out, &CloneTransform::universal_not(), not_point)?;
    for _ in 0..trials {
        let r = libm::sqrt(rng.gen::<f64>());
        let theta = rng.gen::<f64>() * core::f64::consts::FRAC_PI_2;
        let sample = (r * libm::cos(theta), r * libm::sin(theta));
        let (t, at) = match CloneTransform::isotropic_family(sample.0, sample.1) {
            Some(t) => (t, sample),
            None => {
                out.projected += 1;
                project_onto_family(sample, anchor)
            }
        };
        record(&mut out, &t, at)?;
    }
    Ok(out)
}

/// Boundary point of the family on the segment from `from` (outside) to
/// `anchor` (inside).
fn project_onto_family(from: (f64, f64), anchor: (f64, f64)) -> (CloneTransform, (f64, f64)) {
    let lerp = |s: f64| (from.0 + s * (anchor.0 - from.0), from.1 + s * (anchor.1 - from.1));
    let (mut lo, mut hi) = (0.0, 1.0);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        let (a, c) = lerp(mid);
        if CloneTransform::isotropic_family(a, c).is_some() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let at = lerp(hi);
    match CloneTransform::isotropic_family(at.0, at.1) {
        Some(t) => (t, at),
        None => (CloneTransform::optimal(), anchor),
    }
}
