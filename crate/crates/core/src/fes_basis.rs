//! Dicke states, the `⊗|±⟩` eigenstates `ψ_pq`, and the reduced coordinates
//! of flip-and-exchange symmetric (FES) states.
//!
//! An FES state of `n` qubits is a combination of the `⌊n/2⌋ + 1` states
//! `ψ_pq` with `q` even. [`FesVector`] stores those coefficients with `q`
//! ascending, so index `i` holds `c_{n-2i, 2i}`.

use std::fmt;

use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::statevec::{self, LocalOperator, StateVector};

/// Label of the eigenstate with `p` factors `|+⟩` and `q` factors `|−⟩`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BasisIndex {
    pub p: usize,
    pub q: usize,
}

impl BasisIndex {
    pub const fn new(p: usize, q: usize) -> Self {
        Self { p, q }
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    /// Member of the flip-symmetric span.
    pub fn is_fes(&self) -> bool {
        self.q.is_multiple_of(2)
    }

    /// `ψ_pq` is entangled unless it is `|+⟩^{⊗n}` or `|−⟩^{⊗n}`.
    pub fn is_entangled(&self) -> bool {
        self.p != 0 && self.q != 0
    }

    /// Position of this index in an [`FesVector`] of `n` qubits.
    pub fn slot(&self, n: usize) -> Option<usize> {
        (self.n() == n && self.is_fes()).then_some(self.q / 2)
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p < 10 && self.q < 10 {
            write!(f, "{}{}", self.p, self.q)
        } else {
            write!(f, "{}_{}", self.p, self.q)
        }
    }
}

/// `⌊n/2⌋ + 1`.
pub fn fes_dimension(n: usize) -> usize {
    n / 2 + 1
}

/// The FES basis labels of `n` qubits, `q` ascending.
pub fn fes_indices(n: usize) -> Vec<BasisIndex> {
    (0..fes_dimension(n))
        .map(|i| BasisIndex::new(n - 2 * i, 2 * i))
        .collect()
}

/// `(p+q)! / (p! q!)`, the multiplicity of the eigenvalue `λ_pq`.
pub fn degeneracy(p: usize, q: usize) -> u64 {
    let k = p.min(q) as u64;
    let n = (p + q) as u64;
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Dicke state `S(n, k)`: equal superposition of the bitstrings with exactly
/// `k` zeros.
pub fn dicke(n: usize, k: usize) -> Result<StateVector> {
    if k > n {
        return Err(Error::DickeOutOfRange { n, k });
    }
    let mut amps = StateVector::zeros(n)?.into_amps();
    let amp = C64::new(1.0 / (degeneracy(k, n - k) as f64).sqrt(), 0.0);
    for (idx, a) in amps.iter_mut().enumerate() {
        if idx.count_ones() as usize == n - k {
            *a = amp;
        }
    }
    StateVector::new(n, amps)
}

/// `ψ_pq = H^{⊗n} S(n, p)`.
pub fn psi_pq(p: usize, q: usize) -> Result<StateVector> {
    if p + q == 0 {
        return Err(Error::InvalidBasisIndex {
            index: BasisIndex::new(p, q),
            n: 0,
        });
    }
    Ok(statevec::apply_local(
        &LocalOperator::hadamard(),
        &dicke(p + q, p)?,
    ))
}

/// Coordinates of an FES state in the `{ψ_pq : q even}` basis.
#[derive(Clone, Debug, PartialEq)]
pub struct FesVector {
    n: usize,
    coeffs: Vec<C64>,
}

impl FesVector {
    pub fn new(n: usize, coeffs: Vec<C64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoQubits);
        }
        let expected = fes_dimension(n);
        if coeffs.len() != expected {
            return Err(Error::BadCoefficientCount {
                n,
                len: coeffs.len(),
                expected,
            });
        }
        Ok(Self { n, coeffs })
    }

    pub fn from_real(n: usize, coeffs: &[f64]) -> Result<Self> {
        Self::new(n, coeffs.iter().map(|&c| C64::new(c, 0.0)).collect())
    }

    /// The single basis member `ψ_pq`.
    pub fn basis(n: usize, index: BasisIndex) -> Result<Self> {
        let slot = index.slot(n).ok_or(Error::InvalidBasisIndex { index, n })?;
        let mut coeffs = vec![C64::new(0.0, 0.0); fes_dimension(n)];
        coeffs[slot] = C64::new(1.0, 0.0);
        Self::new(n, coeffs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn indices(&self) -> Vec<BasisIndex> {
        fes_indices(self.n)
    }

    /// `c_pq`, or `None` if `index` is not an FES label of this register.
    pub fn coeff(&self, index: BasisIndex) -> Option<C64> {
        index.slot(self.n).map(|i| self.coeffs[i])
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm_sqr() - 1.0).abs() <= tol
    }

    pub fn normalized(&self) -> Result<Self> {
        let norm = self.norm_sqr().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::ZeroVector);
        }
        Ok(Self {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c / norm).collect(),
        })
    }

    pub fn phase_fixed(&self) -> Self {
        Self {
            n: self.n,
            coeffs: statevec::phase_fix(&self.coeffs),
        }
    }

    /// Largest coefficient deviation once both global phases are fixed.
    pub fn phase_distance(&self, other: &Self) -> Result<f64> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(statevec::max_abs_diff(
            &statevec::phase_fix(&self.coeffs),
            &statevec::phase_fix(&other.coeffs),
        ))
    }

    /// `|⟨ψ_pq|v⟩|²` for a normalized `v`; zero for labels outside the FES span.
    pub fn fidelity_to(&self, index: BasisIndex) -> f64 {
        self.coeff(index).map_or(0.0, |c| c.norm_sqr())
    }

    /// `1 − |⟨ψ_pq|v⟩|²` summed from the other coefficients, which keeps
    /// precision when the fidelity is close to one.
    pub fn infidelity_to(&self, index: BasisIndex) -> f64 {
        let slot = index.slot(self.n);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != slot)
            .map(|(_, c)| c.norm_sqr())
            .sum::<f64>()
            / self.norm_sqr()
    }
}

/// Dense state `Σ c_pq ψ_pq`.
pub fn embed(v: &FesVector) -> Result<StateVector> {
    let mut out = StateVector::zeros(v.n)?;
    for (index, c) in v.indices().into_iter().zip(&v.coeffs) {
        if *c == C64::new(0.0, 0.0) {
            continue;
        }
        out = out.add_scaled(*c, &psi_pq(index.p, index.q)?)?;
    }
    Ok(out)
}

/// Project a dense state onto the FES basis, `c_pq = ⟨ψ_pq|ψ⟩`.
///
/// Fails with [`Error::NotFes`] when the part of `state` outside the span
/// has norm `tol` or more.
pub fn expand(state: &StateVector, tol: f64) -> Result<FesVector> {
    let n = state.n();
    let basis = fes_indices(n)
        .into_iter()
        .map(|i| psi_pq(i.p, i.q))
        .collect::<Result<Vec<_>>>()?;
    let coeffs = basis
        .iter()
        .map(|b| statevec::inner(b, state))
        .collect::<Result<Vec<_>>>()?;
    let mut rebuilt = StateVector::zeros(n)?;
    for (b, c) in basis.iter().zip(&coeffs) {
        rebuilt = rebuilt.add_scaled(*c, b)?;
    }
    let residual = rebuilt.distance(state)?;
    if residual >= tol {
        return Err(Error::NotFes { residual });
    }
    FesVector::new(n, coeffs)
}
