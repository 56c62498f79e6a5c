//! Equivalence classes of FES states under invertible local operations.
//!
//! The curve through `v = Σ c_pq ψ_pq` is `Σ c_pq (1+t)^p (1−t)^q ψ_pq`. As
//! `t → 1` the term with the largest `p` in the support dominates, and as
//! `t → −1` the one with the smallest `p`. Those two states close the curve;
//! every other eigenstate keeps a finite distance from it. Approaching an
//! entangled endpoint costs probability: the weight `(1±t)` of every surviving
//! term vanishes in the limit.
//!
//! Also here: the four-qubit `G_{abcd}` family and its canonical form, the
//! closest symmetric product state, and the odd/even register correspondence.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::str::FromStr;

use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fes_basis::{dicke, fes_indices, psi_pq, BasisIndex, FesVector};
use crate::ilo::{evolve, success_probability, FPolicy, IloParams};
use crate::optimize::{bisect_descending, golden_section_maximize};
use crate::statevec::{exchange_residual, StateVector, DEFAULT_TOL};

/// `|c_pq|` above which a coefficient counts as part of the support.
pub const DEFAULT_SUPPORT_TOL: f64 = 1e-9;

/// Grid resolution for [`closest_symmetric_product`].
pub const DEFAULT_PRODUCT_GRID: usize = 4096;

/// Bracket width at which the golden-section refinement stops.
pub const DEFAULT_REFINE_TOL: f64 = 1e-12;

/// How a neighboring eigenstate relates to the curve.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NeighborKind {
    /// Limit of the curve as `t → ±1`.
    Endpoint,
    /// Strictly between the extreme `p` values; the curve never comes close.
    Unreachable,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Neighbor {
    pub index: BasisIndex,
    pub kind: NeighborKind,
    pub entangled: bool,
}

/// Class description of an FES state.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassReport {
    pub n: usize,
    pub is_eigenstate: bool,
    /// Labels with `|c_pq| > tol`, `q` ascending.
    pub support: Vec<BasisIndex>,
    pub p_max: usize,
    pub p_min: usize,
    /// Limit state for `t → 1`.
    pub endpoint_plus: BasisIndex,
    /// Limit state for `t → −1`.
    pub endpoint_minus: BasisIndex,
    /// Entangled endpoints: reachable only with vanishing probability.
    pub reachable_boundaries: Vec<BasisIndex>,
    pub neighbors: Vec<Neighbor>,
}

/// Classify the curve through `v`.
pub fn classify(v: &FesVector, tol: f64) -> ClassReport {
    let n = v.n();
    let mut support: Vec<BasisIndex> = v
        .indices()
        .into_iter()
        .zip(v.coeffs())
        .filter(|(_, c)| c.norm() > tol)
        .map(|(i, _)| i)
        .collect();
    if support.is_empty() {
        // Only reachable with tol above every coefficient; keep the largest.
        let (i, _) = v
            .indices()
            .into_iter()
            .zip(v.coeffs())
            .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
            .expect("FES basis is never empty");
        support.push(i);
    }
    // q ascending means p descending.
    let endpoint_plus = support[0];
    let endpoint_minus = *support.last().unwrap();
    let is_eigenstate = support.len() == 1;

    let mut reachable_boundaries = Vec::new();
    let mut neighbors = Vec::new();
    if !is_eigenstate {
        for end in [endpoint_plus, endpoint_minus] {
            if end.is_entangled() {
                reachable_boundaries.push(end);
            }
            neighbors.push(Neighbor {
                index: end,
                kind: NeighborKind::Endpoint,
                entangled: end.is_entangled(),
            });
        }
        for index in fes_indices(n) {
            if index.p < endpoint_plus.p && index.p > endpoint_minus.p {
                neighbors.push(Neighbor {
                    index,
                    kind: NeighborKind::Unreachable,
                    entangled: index.is_entangled(),
                });
            }
        }
    }

    ClassReport {
        n,
        is_eigenstate,
        p_max: endpoint_plus.p,
        p_min: endpoint_minus.p,
        support,
        endpoint_plus,
        endpoint_minus,
        reachable_boundaries,
        neighbors,
    }
}

/// One point of a stability sweep, `t = ±(1 − ε)`.
#[derive(Copy, Clone, Debug, PartialEq, Serialize)]
pub struct StabilitySample {
    pub epsilon: f64,
    pub t: f64,
    pub infidelity: f64,
    pub probability: f64,
}

/// `count` geometrically spaced values from `start` to `stop` inclusive.
pub fn log_grid(start: f64, stop: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![start],
        _ => {
            let (a, b) = (start.ln(), stop.ln());
            let step = (b - a) / (count - 1) as f64;
            (0..count)
                .map(|i| match i {
                    0 => start,
                    i if i + 1 == count => stop,
                    i => (a + step * i as f64).exp(),
                })
                .collect()
        }
    }
}

/// `ε` from `1e-1` down to `1e-6`, five points per decade.
pub fn default_eps_grid() -> Vec<f64> {
    log_grid(1e-1, 1e-6, 26)
}

/// Follow the curve through `v` toward one of its endpoints.
///
/// The `p_max` endpoint is approached with `t = 1 − ε`, the `p_min` endpoint
/// with `t = −(1 − ε)`. Each sample records the distance to the target and the
/// probability of the conversion.
pub fn stability_sweep(
    v: &FesVector,
    target: BasisIndex,
    eps_grid: &[f64],
    policy: FPolicy,
) -> Result<Vec<StabilitySample>> {
    let report = classify(v, DEFAULT_SUPPORT_TOL);
    let sign = if target == report.endpoint_plus {
        1.0
    } else if target == report.endpoint_minus {
        -1.0
    } else {
        return Err(Error::NotCurveEndpoint { target });
    };
    eps_grid
        .iter()
        .map(|&epsilon| {
            if !(epsilon > 0.0 && epsilon < 1.0) {
                return Err(Error::InvalidArgument(format!(
                    "epsilon {epsilon} outside (0, 1)"
                )));
            }
            let t = sign * (1.0 - epsilon);
            let params = IloParams::new(t, policy)?;
            let state = evolve(v, &params)?;
            Ok(StabilitySample {
                epsilon,
                t,
                infidelity: state.infidelity_to(target),
                probability: success_probability(v, &params),
            })
        })
        .collect()
}

/// Smallest infidelity to `target` along the curve over `t_grid`, with the
/// `t` where it occurs.
pub fn curve_min_infidelity(
    v: &FesVector,
    target: BasisIndex,
    t_grid: &[f64],
) -> Result<(f64, f64)> {
    let mut best = (f64::NAN, f64::INFINITY);
    for &t in t_grid {
        let state = evolve(v, &IloParams::new(t, FPolicy::Unit)?)?;
        let inf = state.infidelity_to(target);
        if inf < best.1 {
            best = (t, inf);
        }
    }
    Ok(best)
}

/// `⟨GHZ|(M†M)^{⊗3}|GHZ⟩ = |f|⁶ [(1+t²)³ + 8t³]`.
pub fn ghz3_probability_closed_form(t: f64, f: f64) -> f64 {
    f.abs().powi(6) * ((1.0 + t * t).powi(3) + 8.0 * t.powi(3))
}

/// Four-qubit `G_{abcd}` family member.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct FourQubitG {
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub d: C64,
}

impl FourQubitG {
    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Self {
        Self { a, b, c, d }
    }

    /// The FES member `G_{a, a−d, 0, d}`.
    pub fn fes(a: C64, d: C64) -> Self {
        Self::new(a, a - d, C64::new(0.0, 0.0), d)
    }

    /// Unnormalized state vector.
    pub fn build(&self) -> Result<StateVector> {
        build_g(self.a, self.b, self.c, self.d)
    }

    /// `μ = √3 (a−d)/(a+d)` for the FES member (`b = a−d`, `c = 0`, `a+d ≠ 0`).
    pub fn mu(&self) -> Option<C64> {
        let fes = (self.b - (self.a - self.d)).norm() < 1e-12 && self.c.norm() < 1e-12;
        let sum = self.a + self.d;
        (fes && sum.norm() > 1e-14).then(|| 3f64.sqrt() * (self.a - self.d) / sum)
    }
}

/// `G_{abcd} = (a+d)/2 (|0000⟩+|1111⟩) + (a−d)/2 (|0011⟩+|1100⟩)
///           + (b+c)/2 (|0101⟩+|1010⟩) + (b−c)/2 (|0110⟩+|1001⟩)`, unnormalized.
pub fn build_g(a: C64, b: C64, c: C64, d: C64) -> Result<StateVector> {
    if [a, b, c, d].iter().all(|x| x.norm() == 0.0) {
        return Err(Error::AllZero);
    }
    let mut amps = vec![C64::new(0.0, 0.0); 16];
    for (pair, value) in [
        ((0b0000, 0b1111), (a + d) / 2.0),
        ((0b0011, 0b1100), (a - d) / 2.0),
        ((0b0101, 0b1010), (b + c) / 2.0),
        ((0b0110, 0b1001), (b - c) / 2.0),
    ] {
        amps[pair.0] = value;
        amps[pair.1] = value;
    }
    StateVector::new(4, amps)
}

/// `(|GHZ₄⟩ + μ|D₄⁽²⁾⟩)/√(1+|μ|²)`.
pub fn canonical_four(mu: C64) -> StateVector {
    let ghz = named_state(NamedState::Ghz, 4).expect("GHZ is defined for four qubits");
    let d2 = dicke(4, 2).expect("k <= n");
    let out = ghz.add_scaled(mu, &d2).expect("same size");
    out.scale(C64::new(1.0 / (1.0 + mu.norm_sqr()).sqrt(), 0.0))
}

/// Result of [`closest_symmetric_product`].
#[derive(Copy, Clone, Debug, PartialEq, Serialize)]
pub struct ClosestProduct {
    /// Maximizer in `[0, π)`; the smallest one when several tie.
    pub theta: f64,
    pub overlap_sq: f64,
    /// Another local maximum reaches the same value within 1e-9.
    pub degenerate: bool,
}

/// `(cos θ|0⟩ + sin θ|1⟩)^{⊗n}`.
pub fn product_state(n: usize, theta: f64) -> Result<StateVector> {
    StateVector::product(n, [C64::new(theta.cos(), 0.0), C64::new(theta.sin(), 0.0)])
}

/// Overlap `⟨(cos θ|0⟩+sin θ|1⟩)^{⊗n}|ψ⟩` of a symmetric state, evaluated from
/// its Hamming-weight sums `s_k`, together with its `θ`-derivative.
fn product_amplitude(weights: &[C64], theta: f64) -> (C64, C64) {
    let n = weights.len() - 1;
    let (c, s) = (theta.cos(), theta.sin());
    let mut amp = C64::new(0.0, 0.0);
    let mut deriv = C64::new(0.0, 0.0);
    for (k, w) in weights.iter().enumerate() {
        let (nk, ki) = ((n - k) as i32, k as i32);
        amp += w * c.powi(nk) * s.powi(ki);
        let mut d = 0.0;
        if k > 0 {
            d += k as f64 * c.powi(nk + 1) * s.powi(ki - 1);
        }
        if k < n {
            d -= (n - k) as f64 * c.powi(nk - 1) * s.powi(ki + 1);
        }
        deriv += w * d;
    }
    (amp, deriv)
}

/// Best product approximation `(cos θ|0⟩+sin θ|1⟩)^{⊗n}` to a permutation
/// symmetric state.
///
/// The overlap is scanned on `grid_size` points of `[0, π)`; each grid peak is
/// refined by golden-section search down to `refine_tol` and then polished by
/// bisection on the analytic derivative.
pub fn closest_symmetric_product(
    state: &StateVector,
    grid_size: usize,
    refine_tol: f64,
) -> Result<ClosestProduct> {
    let residual = exchange_residual(state);
    if residual >= DEFAULT_TOL {
        return Err(Error::NotSymmetric { residual });
    }
    if grid_size < 3 {
        return Err(Error::InvalidArgument(format!("grid size {grid_size} < 3")));
    }
    let n = state.n();
    let mut weights = vec![C64::new(0.0, 0.0); n + 1];
    for (idx, a) in state.amps().iter().enumerate() {
        weights[idx.count_ones() as usize] += a;
    }
    let value = |theta: f64| product_amplitude(&weights, theta).0.norm_sqr();
    let slope = |theta: f64| {
        let (a, d) = product_amplitude(&weights, theta);
        2.0 * (a.conj() * d).re
    };

    let step = PI / grid_size as f64;
    let grid: Vec<f64> = (0..grid_size).map(|i| value(step * i as f64)).collect();
    // The objective has period π, so the grid wraps around.
    let peaks = (0..grid_size).filter(|&i| {
        let prev = grid[(i + grid_size - 1) % grid_size];
        let next = grid[(i + 1) % grid_size];
        grid[i] >= prev && grid[i] >= next
    });

    let mut refined: Vec<(f64, f64)> = peaks
        .map(|i| {
            let center = step * i as f64;
            let (lo, hi) = (center - step, center + step);
            let (mut theta, mut best) = golden_section_maximize(value, lo, hi, refine_tol);
            if let Some(root) = bisect_descending(slope, lo, hi) {
                let v = value(root);
                if v >= best - 1e-15 {
                    theta = root;
                    best = v;
                }
            }
            let mut theta = theta.rem_euclid(PI);
            if PI - theta < 1e-12 {
                theta = 0.0;
            }
            (theta, best)
        })
        .collect();
    let top = refined
        .iter()
        .map(|r| r.1)
        .fold(f64::NEG_INFINITY, f64::max);
    refined.retain(|r| r.1 >= top - 1e-9);
    refined.sort_by(|a, b| a.0.total_cmp(&b.0));
    let (theta, overlap_sq) = refined[0];
    let degenerate = refined.iter().any(|r| (r.0 - theta).abs() > step);
    Ok(ClosestProduct {
        theta,
        overlap_sq,
        degenerate,
    })
}

/// Map an odd register `n = 2m+1` onto the even register `n = 2m`:
/// `c_{2(m−k),2k} = c_{2(m−k)+1,2k} (1+t)`, then renormalize.
///
/// Curves commute with the map: evolving then mapping gives the same even
/// state as mapping then evolving at the same `t`.
pub fn odd_even_map(v: &FesVector, t: f64) -> Result<FesVector> {
    let n = v.n();
    if n.is_multiple_of(2) || n < 3 {
        return Err(Error::BadParity(n));
    }
    scale_into(v, n - 1, t, |c, factor| c * factor)
}

/// Inverse of [`odd_even_map`]: even `n = 2m` to odd `n = 2m+1`.
pub fn even_odd_map(v: &FesVector, t: f64) -> Result<FesVector> {
    let n = v.n();
    if n % 2 == 1 {
        return Err(Error::BadParity(n));
    }
    scale_into(v, n + 1, t, |c, factor| c / factor)
}

fn scale_into(
    v: &FesVector,
    n_out: usize,
    t: f64,
    op: impl Fn(C64, f64) -> C64,
) -> Result<FesVector> {
    let factor = 1.0 + t;
    if !factor.is_finite() || factor.abs() < crate::ilo::SINGULAR_GUARD {
        return Err(Error::SingularParameter { t });
    }
    let coeffs = v.coeffs().iter().map(|&c| op(c, factor)).collect();
    FesVector::new(n_out, coeffs)?.normalized()
}

/// States named in the literature on three-qubit classes.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum NamedState {
    /// `(|0…0⟩ + |1…1⟩)/√2`.
    Ghz,
    /// `(|100⟩ + |010⟩ + |001⟩)/√3`.
    W,
    /// The W class representative in FES form, `ψ_12`.
    WFes,
    /// `|+…+⟩`.
    S,
}

impl FromStr for NamedState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ghz" => Ok(Self::Ghz),
            "w" => Ok(Self::W),
            "w_fes" | "wfes" | "w-fes" => Ok(Self::WFes),
            "s" => Ok(Self::S),
            _ => Err(Error::UnknownState(s.to_string())),
        }
    }
}

impl NamedState {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Ghz => "GHZ",
            Self::W => "W",
            Self::WFes => "W_fes",
            Self::S => "S",
        }
    }
}

/// Dense vector of a named state on `n` qubits.
pub fn named_state(name: NamedState, n: usize) -> Result<StateVector> {
    let incompatible = || Error::IncompatibleQubitCount {
        name: name.as_str().to_string(),
        n,
    };
    match name {
        NamedState::Ghz => {
            if n < 2 {
                return Err(incompatible());
            }
            let mut amps = StateVector::zeros(n)?.into_amps();
            let last = amps.len() - 1;
            amps[0] = C64::new(FRAC_1_SQRT_2, 0.0);
            amps[last] = C64::new(FRAC_1_SQRT_2, 0.0);
            StateVector::new(n, amps)
        }
        NamedState::W => {
            if n != 3 {
                return Err(incompatible());
            }
            dicke(3, 2)
        }
        NamedState::WFes => {
            if n != 3 {
                return Err(incompatible());
            }
            psi_pq(1, 2)
        }
        NamedState::S => psi_pq(n, 0),
    }
}
