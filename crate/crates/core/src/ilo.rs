//! Flip-and-exchange symmetric invertible local operations
//! `M(t) = f(t) [[1, t], [t, 1]]` and the curves they trace.
//!
//! `M(t)` is diagonal in the `|±⟩` basis with eigenvalues `f(1 ± t)`, so
//! `M(t)^{⊗n}` multiplies `ψ_pq` by `λ_pq = f^n (1+t)^p (1−t)^q`. Evolution
//! and success probabilities are therefore computed on the reduced
//! coefficients; [`success_probability_dense`] does the same through the
//! full register for cross-checking.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64 as C64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fes_basis::{embed, BasisIndex, FesVector};
use crate::statevec::{expectation, LocalOperator};

/// Distance from `t = ±1` below which the parameter is rejected.
pub const SINGULAR_GUARD: f64 = 1e-12;

/// How the scalar prefactor `f(t)` is chosen.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FPolicy {
    /// `f = 1`.
    Unit,
    /// `f = 1/(1+|t|)`: the largest eigenvalue of `M†M` is exactly one, so
    /// `(M†M)^{⊗n} ≤ I` is a valid measurement branch.
    #[default]
    PovmMax,
}

impl FPolicy {
    pub fn f(&self, t: f64) -> f64 {
        match self {
            FPolicy::Unit => 1.0,
            FPolicy::PovmMax => 1.0 / (1.0 + t.abs()),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            FPolicy::Unit => "unit",
            FPolicy::PovmMax => "povm_max",
        }
    }
}

impl fmt::Display for FPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unit" => Ok(FPolicy::Unit),
            "povm_max" | "povm-max" => Ok(FPolicy::PovmMax),
            other => Err(Error::InvalidArgument(format!(
                "unknown f policy '{other}' (expected unit or povm_max)"
            ))),
        }
    }
}

/// Curve parameter together with the prefactor policy.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct IloParams {
    t: f64,
    policy: FPolicy,
}

impl IloParams {
    pub fn new(t: f64, policy: FPolicy) -> Result<Self> {
        check_t(t)?;
        Ok(Self { t, policy })
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn policy(&self) -> FPolicy {
        self.policy
    }

    pub fn f(&self) -> f64 {
        self.policy.f(self.t)
    }
}

/// Reject non-finite `t` and `t` within [`SINGULAR_GUARD`] of `±1`.
pub fn check_t(t: f64) -> Result<()> {
    if !t.is_finite() || (t - 1.0).abs() < SINGULAR_GUARD || (t + 1.0).abs() < SINGULAR_GUARD {
        return Err(Error::SingularParameter { t });
    }
    Ok(())
}

/// `M(t) = f(t) [[1, t], [t, 1]]`.
pub fn m_of_t(params: &IloParams) -> LocalOperator {
    LocalOperator::from_real([[1.0, params.t], [params.t, 1.0]]).scaled(C64::new(params.f(), 0.0))
}

/// The off-diagonal branch `f(s) [[s, 1], [1, s]] = X · M(s)`.
///
/// `X^{⊗n}` is the identity on FES states, so this operator traces the same
/// curves as `M(s)`.
pub fn antidiagonal_equivalent(s: f64, policy: FPolicy) -> Result<LocalOperator> {
    check_t(s)?;
    Ok(LocalOperator::from_real([[s, 1.0], [1.0, s]]).scaled(C64::new(policy.f(s), 0.0)))
}

/// Parameter of the product `M(t1) M(t2) ∝ M((t1+t2)/(1+t1 t2))`.
pub fn compose_parameter(t1: f64, t2: f64) -> f64 {
    (t1 + t2) / (1.0 + t1 * t2)
}

/// Eigenvalue `λ_pq = f^n (1+t)^p (1−t)^q` of `M(t)^{⊗n}` on `ψ_pq`.
pub fn lambda_pq(index: BasisIndex, params: &IloParams) -> Result<C64> {
    lambda_pq_complex(index, C64::new(params.t, 0.0), C64::new(params.f(), 0.0))
}

/// [`lambda_pq`] for complex `t` and `f`.
pub fn lambda_pq_complex(index: BasisIndex, t: C64, f: C64) -> Result<C64> {
    let n = index.n();
    if n == 0 {
        return Err(Error::InvalidBasisIndex { index, n });
    }
    let one = C64::new(1.0, 0.0);
    if (t - one).norm() < SINGULAR_GUARD || (t + one).norm() < SINGULAR_GUARD {
        return Err(Error::SingularParameter { t: t.re });
    }
    Ok(f.powi(n as i32) * (one + t).powi(index.p as i32) * (one - t).powi(index.q as i32))
}

/// Point `ψ(t)` of the curve through `v`, renormalized. Independent of the
/// prefactor policy.
pub fn evolve(v: &FesVector, params: &IloParams) -> Result<FesVector> {
    let t = params.t;
    let (lp, lm) = ((1.0 + t).abs().ln(), (1.0 - t).abs().ln());
    let sp: f64 = if 1.0 + t < 0.0 { -1.0 } else { 1.0 };
    let sm: f64 = if 1.0 - t < 0.0 { -1.0 } else { 1.0 };
    // Work with log-magnitudes so that t close to ±1 or |t| ≫ 1 does not
    // underflow before renormalization.
    let logs: Vec<f64> = v
        .indices()
        .iter()
        .zip(v.coeffs())
        .map(|(i, c)| {
            if c.norm() == 0.0 {
                f64::NEG_INFINITY
            } else {
                i.p as f64 * lp + i.q as f64 * lm
            }
        })
        .collect();
    let top = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if top == f64::NEG_INFINITY {
        return Err(Error::ZeroVector);
    }
    let coeffs = v
        .indices()
        .iter()
        .zip(v.coeffs())
        .zip(&logs)
        .map(|((i, c), log)| {
            if *log == f64::NEG_INFINITY {
                C64::new(0.0, 0.0)
            } else {
                c * sp.powi(i.p as i32) * sm.powi(i.q as i32) * (log - top).exp()
            }
        })
        .collect();
    FesVector::new(v.n(), coeffs)?.normalized()
}

/// `⟨ψ(0)|(M†M)^{⊗n}|ψ(0)⟩ = Σ |c_pq|² |f|^{2n} (1+t)^{2p} (1−t)^{2q}`.
pub fn success_probability(v: &FesVector, params: &IloParams) -> f64 {
    let (t, f) = (params.t, params.f());
    let n = v.n() as i32;
    let weight: f64 = v
        .indices()
        .iter()
        .zip(v.coeffs())
        .map(|(i, c)| {
            c.norm_sqr() * (1.0 + t).powi(2 * i.p as i32) * (1.0 - t).powi(2 * i.q as i32)
        })
        .sum();
    f.abs().powi(2 * n) * weight
}

/// [`success_probability`] through the dense register.
pub fn success_probability_dense(v: &FesVector, params: &IloParams) -> Result<f64> {
    let m = m_of_t(params);
    let state = embed(v)?;
    Ok(expectation(&(m.adjoint() * m), &state).re)
}

/// One point of a traced curve.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveSample {
    pub t: f64,
    /// Normalized `ψ(t)`.
    pub state: FesVector,
    pub probability: f64,
    /// Fidelity of `ψ(t)` with each requested `ψ_pq`, in request order.
    pub target_fidelities: Vec<(BasisIndex, f64)>,
}

/// Evaluate the curve through `v` at every `t` of the grid, in grid order.
pub fn curve_trace(
    v: &FesVector,
    t_grid: &[f64],
    policy: FPolicy,
    targets: &[BasisIndex],
) -> Result<Vec<CurveSample>> {
    for &t in t_grid {
        check_t(t)?;
    }
    for &target in targets {
        if target.n() != v.n() {
            return Err(Error::InvalidBasisIndex {
                index: target,
                n: v.n(),
            });
        }
    }
    t_grid
        .par_iter()
        .map(|&t| {
            let params = IloParams::new(t, policy)?;
            let state = evolve(v, &params)?;
            let target_fidelities = targets.iter().map(|&i| (i, state.fidelity_to(i))).collect();
            Ok(CurveSample {
                t,
                probability: success_probability(v, &params),
                state,
                target_fidelities,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fes_basis::psi_pq;
    use crate::statevec::apply_local;

    const S3: f64 = 1.732_050_807_568_877_2;

    fn ghz3() -> FesVector {
        FesVector::from_real(3, &[0.5, S3 / 2.0]).unwrap()
    }

    fn p(t: f64, policy: FPolicy) -> IloParams {
        IloParams::new(t, policy).unwrap()
    }

    #[test]
    fn m_of_t_examples() {
        let m = m_of_t(&p(0.0, FPolicy::Unit));
        assert!(m.max_abs_diff(&LocalOperator::identity()) < 1e-15);
        let m = m_of_t(&p(0.5, FPolicy::PovmMax));
        let want = LocalOperator::from_real([[2.0 / 3.0, 1.0 / 3.0], [1.0 / 3.0, 2.0 / 3.0]]);
        assert!(m.max_abs_diff(&want) < 1e-15);
        assert!(m.is_invertible());
        assert_eq!(
            IloParams::new(1.0, FPolicy::Unit),
            Err(Error::SingularParameter { t: 1.0 })
        );
        assert!(IloParams::new(-1.0 + 1e-13, FPolicy::Unit).is_err());
        assert!(IloParams::new(f64::NAN, FPolicy::Unit).is_err());
        assert!(IloParams::new(1.0 - 1e-9, FPolicy::Unit).is_ok());
    }

    #[test]
    fn lambda_examples() {
        let i12 = BasisIndex::new(1, 2);
        assert!((lambda_pq(i12, &p(0.0, FPolicy::Unit)).unwrap() - 1.0).norm() < 1e-15);
        assert!((lambda_pq(i12, &p(0.5, FPolicy::Unit)).unwrap() - 0.375).norm() < 1e-15);
        let near = lambda_pq(BasisIndex::new(3, 0), &p(-1.0 + 1e-6, FPolicy::PovmMax)).unwrap();
        assert!(near.norm() < 1e-17);
        let complex = lambda_pq_complex(i12, C64::new(0.0, 1.0), C64::new(1.0, 0.0)).unwrap();
        // (1+i)(1−i)^2 = (1+i)(−2i) = 2 − 2i
        assert!((complex - C64::new(2.0, -2.0)).norm() < 1e-14);
        assert!(lambda_pq_complex(i12, C64::new(-1.0, 0.0), C64::new(1.0, 0.0)).is_err());
    }

    #[test]
    fn evolve_identity_and_limits() {
        let v = ghz3();
        assert!(
            evolve(&v, &p(0.0, FPolicy::Unit))
                .unwrap()
                .phase_distance(&v)
                .unwrap()
                < 1e-15
        );
        let plus = evolve(&v, &p(1.0 - 1e-6, FPolicy::PovmMax)).unwrap();
        assert!(plus.fidelity_to(BasisIndex::new(3, 0)) > 1.0 - 1e-10);
        let w = evolve(&v, &p(-1.0 + 1e-6, FPolicy::PovmMax)).unwrap();
        assert!(w.fidelity_to(BasisIndex::new(1, 2)) > 1.0 - 1e-10);
    }

    #[test]
    fn evolve_far_outside_unit_interval() {
        // t = −100: (1+t) < 0 flips the sign of odd-p terms only.
        let v = FesVector::from_real(5, &[0.6, 0.0, 0.8]).unwrap();
        let got = evolve(&v, &p(-100.0, FPolicy::Unit)).unwrap();
        let (a, b) = (0.6 * (-99f64).powi(5), 0.8 * (-99f64) * 101f64.powi(4));
        let norm = (a * a + b * b).sqrt();
        let want = FesVector::from_real(5, &[a / norm, 0.0, b / norm]).unwrap();
        assert!(got.phase_distance(&want).unwrap() < 1e-14);
    }

    #[test]
    fn probability_examples() {
        let v = ghz3();
        assert!((success_probability(&v, &p(0.0, FPolicy::PovmMax)) - 1.0).abs() < 1e-15);
        assert!((success_probability(&v, &p(0.5, FPolicy::Unit)) - 2.953125).abs() < 1e-14);
        let povm = success_probability(&v, &p(0.5, FPolicy::PovmMax));
        assert!((povm - 2.953125 * (2.0f64 / 3.0).powi(6)).abs() < 1e-14);
        let dense = success_probability_dense(&v, &p(0.5, FPolicy::PovmMax)).unwrap();
        assert!((povm - dense).abs() < 1e-12);
    }

    #[test]
    fn top_eigenvector_has_unit_probability() {
        for n in 2..8 {
            let top = FesVector::basis(n, BasisIndex::new(n, 0)).unwrap();
            for t in [0.1, 0.7, 2.0, 9.0] {
                let prob = success_probability(&top, &p(t, FPolicy::PovmMax));
                assert!((prob - 1.0).abs() < 1e-12, "n={n} t={t} prob={prob}");
            }
        }
    }

    #[test]
    fn eigenstates_do_not_move() {
        let v = FesVector::basis(4, BasisIndex::new(2, 2)).unwrap();
        let samples =
            curve_trace(&v, &[-0.9, -0.3, 0.2, 0.95, 4.0], FPolicy::PovmMax, &[]).unwrap();
        for s in samples {
            assert!(s.state.phase_distance(&v).unwrap() < 1e-15);
        }
    }

    #[test]
    fn curve_rejects_bad_grid_and_targets() {
        let v = ghz3();
        assert!(matches!(
            curve_trace(&v, &[0.0, 1.0], FPolicy::Unit, &[]),
            Err(Error::SingularParameter { .. })
        ));
        assert!(curve_trace(&v, &[0.0], FPolicy::Unit, &[BasisIndex::new(2, 2)]).is_err());
    }

    #[test]
    fn curve_preserves_grid_order() {
        let grid: Vec<f64> = (0..50).map(|i| -0.98 + 0.04 * i as f64).collect();
        let samples =
            curve_trace(&ghz3(), &grid, FPolicy::PovmMax, &[BasisIndex::new(3, 0)]).unwrap();
        assert_eq!(samples.iter().map(|s| s.t).collect::<Vec<_>>(), grid);
    }

    #[test]
    fn antidiagonal_examples() {
        let op = antidiagonal_equivalent(0.0, FPolicy::Unit).unwrap();
        assert!(op.max_abs_diff(&LocalOperator::flip()) < 1e-15);
        let m = m_of_t(&p(0.3, FPolicy::PovmMax));
        let xm = LocalOperator::flip() * m;
        assert!(
            antidiagonal_equivalent(0.3, FPolicy::PovmMax)
                .unwrap()
                .max_abs_diff(&xm)
                < 1e-15
        );
        let g = embed(&ghz3()).unwrap();
        assert!(apply_local(&op, &g).distance(&g).unwrap() < 1e-15);
        assert!(antidiagonal_equivalent(-1.0, FPolicy::Unit).is_err());
    }

    #[test]
    fn eigen_relation_small() {
        let params = p(0.37, FPolicy::PovmMax);
        let m = m_of_t(&params);
        for q in 0..=5 {
            let psi = psi_pq(5 - q, q).unwrap();
            let lambda = lambda_pq(BasisIndex::new(5 - q, q), &params).unwrap();
            let residual = apply_local(&m, &psi).distance(&psi.scale(lambda)).unwrap();
            assert!(residual < 1e-13);
        }
    }

    #[test]
    fn policy_parsing() {
        assert_eq!("unit".parse::<FPolicy>().unwrap(), FPolicy::Unit);
        assert_eq!("povm_max".parse::<FPolicy>().unwrap(), FPolicy::PovmMax);
        assert!("max".parse::<FPolicy>().is_err());
    }
}
