//! Dense `2^n` state vectors and identical single-qubit operators `A^{⊗n}`.
//!
//! This engine is the brute-force reference for everything computed in the
//! reduced symmetric subspace. Qubit 0 is the most significant bit of a basis
//! index, so `|q_0 q_1 ... q_{n-1}⟩` is read left to right.

use std::ops::Mul;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Largest register the dense engine builds unless asked otherwise.
pub const DEFAULT_MAX_QUBITS: usize = 14;

/// Default tolerance for symmetry and normalization predicates.
pub const DEFAULT_TOL: f64 = 1e-10;

const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
const ONE: C64 = C64 { re: 1.0, im: 0.0 };

/// Value (0 or 1) of qubit `i` in basis index `idx` of an `n`-qubit register.
#[inline]
pub fn qubit_bit(idx: usize, i: usize, n: usize) -> usize {
    (idx >> (n - 1 - i)) & 1
}

/// Pure state of `n` qubits in the computational basis.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<C64>,
}

impl StateVector {
    /// Wrap an amplitude vector. Its length must be exactly `2^n`.
    pub fn new(n: usize, amps: Vec<C64>) -> Result<Self> {
        check_size(n, DEFAULT_MAX_QUBITS)?;
        if amps.len() != 1 << n {
            return Err(Error::BadLength { len: amps.len(), n });
        }
        Ok(Self { n, amps })
    }

    /// The zero vector on `n` qubits.
    pub fn zeros(n: usize) -> Result<Self> {
        Self::zeros_with_limit(n, DEFAULT_MAX_QUBITS)
    }

    /// The zero vector, with a caller-chosen cap on the register size.
    pub fn zeros_with_limit(n: usize, limit: usize) -> Result<Self> {
        check_size(n, limit)?;
        Ok(Self {
            n,
            amps: vec![ZERO; 1 << n],
        })
    }

    /// Computational basis state `|index⟩`.
    pub fn basis(n: usize, index: usize) -> Result<Self> {
        let mut out = Self::zeros(n)?;
        if index >= out.amps.len() {
            return Err(Error::InvalidArgument(format!(
                "basis index {index} out of range for {n} qubits"
            )));
        }
        out.amps[index] = ONE;
        Ok(out)
    }

    /// Symmetric product state `(a|0⟩ + b|1⟩)^{⊗n}`.
    pub fn product(n: usize, single: [C64; 2]) -> Result<Self> {
        let mut out = Self::zeros(n)?;
        for (idx, amp) in out.amps.iter_mut().enumerate() {
            let ones = idx.count_ones() as i32;
            *amp = single[0].powi(n as i32 - ones) * single[1].powi(ones);
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amps(&self) -> &[C64] {
        &self.amps
    }

    pub fn into_amps(self) -> Vec<C64> {
        self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Copy rescaled to unit norm.
    pub fn normalized(&self) -> Result<Self> {
        let norm = self.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::ZeroVector);
        }
        Ok(self.scale(C64::new(1.0 / norm, 0.0)))
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self {
            n: self.n,
            amps: self.amps.iter().map(|a| a * factor).collect(),
        }
    }

    /// `self + factor * other`.
    pub fn add_scaled(&self, factor: C64, other: &Self) -> Result<Self> {
        same_size(self, other)?;
        let amps = self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a + factor * b)
            .collect();
        Ok(Self { n: self.n, amps })
    }

    /// Euclidean distance `‖self - other‖`.
    pub fn distance(&self, other: &Self) -> Result<f64> {
        same_size(self, other)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt())
    }

    /// Copy with the global phase chosen so that the first amplitude of
    /// largest magnitude is real and positive.
    pub fn phase_fixed(&self) -> Self {
        Self {
            n: self.n,
            amps: phase_fix(&self.amps),
        }
    }

    /// Largest componentwise deviation after fixing the global phase of both.
    pub fn phase_distance(&self, other: &Self) -> Result<f64> {
        same_size(self, other)?;
        Ok(max_abs_diff(
            &phase_fix(&self.amps),
            &phase_fix(&other.amps),
        ))
    }
}

fn check_size(n: usize, limit: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::NoQubits);
    }
    if n > limit {
        return Err(Error::TooManyQubits { n, limit });
    }
    Ok(())
}

fn same_size(a: &StateVector, b: &StateVector) -> Result<()> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch {
            left: a.n,
            right: b.n,
        });
    }
    Ok(())
}

/// Rotate a coefficient vector so that its first entry of largest magnitude
/// (within 1e-9) is real and positive.
pub(crate) fn phase_fix(v: &[C64]) -> Vec<C64> {
    let max = v.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if max == 0.0 {
        return v.to_vec();
    }
    let pivot = v
        .iter()
        .find(|c| c.norm() >= max - 1e-9)
        .copied()
        .unwrap_or(ONE);
    let rot = pivot.conj() / pivot.norm();
    v.iter().map(|c| c * rot).collect()
}

pub(crate) fn max_abs_diff(a: &[C64], b: &[C64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// A 2×2 complex matrix applied identically to every qubit.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct LocalOperator {
    /// Row-major entries.
    pub entries: [[C64; 2]; 2],
}

impl LocalOperator {
    pub const fn new(entries: [[C64; 2]; 2]) -> Self {
        Self { entries }
    }

    pub fn from_real(m: [[f64; 2]; 2]) -> Self {
        Self::new([
            [C64::new(m[0][0], 0.0), C64::new(m[0][1], 0.0)],
            [C64::new(m[1][0], 0.0), C64::new(m[1][1], 0.0)],
        ])
    }

    pub fn identity() -> Self {
        Self::from_real([[1.0, 0.0], [0.0, 1.0]])
    }

    /// The qubit flip `X`.
    pub fn flip() -> Self {
        Self::from_real([[0.0, 1.0], [1.0, 0.0]])
    }

    pub fn hadamard() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self::from_real([[h, h], [h, -h]])
    }

    pub fn scaled(&self, factor: C64) -> Self {
        let e = &self.entries;
        Self::new([
            [e[0][0] * factor, e[0][1] * factor],
            [e[1][0] * factor, e[1][1] * factor],
        ])
    }

    pub fn adjoint(&self) -> Self {
        let e = &self.entries;
        Self::new([
            [e[0][0].conj(), e[1][0].conj()],
            [e[0][1].conj(), e[1][1].conj()],
        ])
    }

    pub fn det(&self) -> C64 {
        let e = &self.entries;
        e[0][0] * e[1][1] - e[0][1] * e[1][0]
    }

    /// `|det| > 1e-14`.
    pub fn is_invertible(&self) -> bool {
        self.det().norm() > 1e-14
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let a: Vec<C64> = self.entries.iter().flatten().copied().collect();
        let b: Vec<C64> = other.entries.iter().flatten().copied().collect();
        max_abs_diff(&a, &b)
    }
}

impl Mul for LocalOperator {
    type Output = LocalOperator;

    fn mul(self, rhs: Self) -> Self {
        let (a, b) = (&self.entries, &rhs.entries);
        let mut out = [[ZERO; 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                *entry = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        LocalOperator::new(out)
    }
}

/// `op^{⊗n} |ψ⟩`, one qubit at a time. The result is not renormalized.
pub fn apply_local(op: &LocalOperator, state: &StateVector) -> StateVector {
    let n = state.n;
    let mut amps = state.amps.clone();
    let [[m00, m01], [m10, m11]] = op.entries;
    for i in 0..n {
        let stride = 1usize << (n - 1 - i);
        for block in (0..amps.len()).step_by(2 * stride) {
            for lo in block..block + stride {
                let hi = lo + stride;
                let (a0, a1) = (amps[lo], amps[hi]);
                amps[lo] = m00 * a0 + m01 * a1;
                amps[hi] = m10 * a0 + m11 * a1;
            }
        }
    }
    StateVector { n, amps }
}

/// Exchange qubits `i` and `j`.
pub fn apply_exchange(i: usize, j: usize, state: &StateVector) -> Result<StateVector> {
    let n = state.n;
    for index in [i, j] {
        if index >= n {
            return Err(Error::QubitOutOfRange { index, n });
        }
    }
    if i == j {
        return Ok(state.clone());
    }
    let (si, sj) = (n - 1 - i, n - 1 - j);
    let mut amps = state.amps.clone();
    for (idx, amp) in state.amps.iter().enumerate() {
        let (bi, bj) = ((idx >> si) & 1, (idx >> sj) & 1);
        let swapped = if bi == bj {
            idx
        } else {
            idx ^ (1 << si) ^ (1 << sj)
        };
        amps[swapped] = *amp;
    }
    Ok(StateVector { n, amps })
}

/// `X^{⊗n} |ψ⟩`, which reverses the amplitude order.
pub fn apply_flip(state: &StateVector) -> StateVector {
    let mask = state.amps.len() - 1;
    let amps = (0..state.amps.len())
        .map(|idx| state.amps[idx ^ mask])
        .collect();
    StateVector { n: state.n, amps }
}

/// Largest residual `‖P_{k,k+1}ψ − ψ‖` over adjacent transpositions.
pub fn exchange_residual(state: &StateVector) -> f64 {
    (0..state.n.saturating_sub(1))
        .map(|k| {
            let swapped = apply_exchange(k, k + 1, state).expect("adjacent indices are in range");
            swapped.distance(state).expect("same size")
        })
        .fold(0.0, f64::max)
}

/// Invariance under every qubit exchange, checked on the adjacent
/// transpositions that generate the symmetric group.
pub fn is_exchange_symmetric(state: &StateVector, tol: f64) -> bool {
    exchange_residual(state) < tol
}

/// Flip-and-exchange symmetry: `X^{⊗n}ψ = ψ` and `P_{ij}ψ = ψ` for all pairs.
pub fn is_fes(state: &StateVector, tol: f64) -> bool {
    let flip = apply_flip(state).distance(state).expect("same size");
    flip < tol && is_exchange_symmetric(state, tol)
}

/// `⟨a|b⟩`, conjugate-linear in `a`.
pub fn inner(a: &StateVector, b: &StateVector) -> Result<C64> {
    same_size(a, b)?;
    Ok(a.amps.iter().zip(&b.amps).map(|(x, y)| x.conj() * y).sum())
}

/// `|⟨a|b⟩|²`, clamped to `[0, 1]`.
pub fn fidelity(a: &StateVector, b: &StateVector) -> Result<f64> {
    Ok(inner(a, b)?.norm_sqr().clamp(0.0, 1.0))
}

/// `⟨ψ| op^{⊗n} |ψ⟩`.
pub fn expectation(op: &LocalOperator, state: &StateVector) -> C64 {
    let image = apply_local(op, state);
    inner(state, &image).expect("same size")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn ghz3() -> StateVector {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let mut v = StateVector::zeros(3).unwrap();
        v.amps[0] = c(h);
        v.amps[7] = c(h);
        v
    }

    fn plus3() -> StateVector {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        StateVector::product(3, [c(h), c(h)]).unwrap()
    }

    #[test]
    fn bit_order_is_msb_first() {
        // |011⟩ has qubit 0 = 0 and qubits 1, 2 = 1.
        assert_eq!(qubit_bit(0b011, 0, 3), 0);
        assert_eq!(qubit_bit(0b011, 1, 3), 1);
        assert_eq!(qubit_bit(0b011, 2, 3), 1);
    }

    #[test]
    fn identity_leaves_state() {
        let v = ghz3();
        assert_eq!(apply_local(&LocalOperator::identity(), &v), v);
    }

    #[test]
    fn flip_maps_all_zeros_to_all_ones() {
        let out = apply_local(&LocalOperator::flip(), &StateVector::basis(3, 0).unwrap());
        assert_eq!(out, StateVector::basis(3, 7).unwrap());
        assert_eq!(apply_flip(&StateVector::basis(3, 0).unwrap()), out);
    }

    #[test]
    fn hadamard_on_dicke_gives_plus_minus_form() {
        let s = 1.0 / 3f64.sqrt();
        let mut w = StateVector::zeros(3).unwrap();
        for idx in [0b011, 0b101, 0b110] {
            w.amps[idx] = c(s);
        }
        let got = apply_local(&LocalOperator::hadamard(), &w);
        // (1/√3)(|+−−⟩ + |−+−⟩ + |−−+⟩) built from single-qubit kets.
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let (plus, minus) = ([c(h), c(h)], [c(h), c(-h)]);
        let mut want = StateVector::zeros(3).unwrap();
        for pattern in [
            [plus, minus, minus],
            [minus, plus, minus],
            [minus, minus, plus],
        ] {
            for (idx, amp) in want.amps.iter_mut().enumerate() {
                let mut term = c(s);
                for (q, ket) in pattern.iter().enumerate() {
                    term *= ket[qubit_bit(idx, q, 3)];
                }
                *amp += term;
            }
        }
        assert!(got.distance(&want).unwrap() < 1e-14);
    }

    #[test]
    fn exchange_swaps_bits() {
        let out = apply_exchange(0, 1, &StateVector::basis(2, 0b01).unwrap()).unwrap();
        assert_eq!(out, StateVector::basis(2, 0b10).unwrap());
        let v = ghz3();
        assert_eq!(apply_exchange(1, 1, &v).unwrap(), v);
        assert_eq!(apply_exchange(0, 1, &v).unwrap(), v);
        assert_eq!(
            apply_exchange(0, 3, &v),
            Err(Error::QubitOutOfRange { index: 3, n: 3 })
        );
    }

    #[test]
    fn fes_predicate() {
        assert!(is_fes(&ghz3(), DEFAULT_TOL));
        assert!(is_fes(&plus3(), DEFAULT_TOL));
        let s = 1.0 / 3f64.sqrt();
        let mut w = StateVector::zeros(3).unwrap();
        for idx in [0b100, 0b010, 0b001] {
            w.amps[idx] = c(s);
        }
        assert!(!is_fes(&w, DEFAULT_TOL));
        assert!(is_exchange_symmetric(&w, DEFAULT_TOL));
        // Flip sends W to an orthogonal vector.
        assert!(inner(&w, &apply_flip(&w)).unwrap().norm() < 1e-15);
    }

    #[test]
    fn inner_and_fidelity() {
        let g = ghz3();
        assert!((inner(&g, &g).unwrap() - c(1.0)).norm() < 1e-15);
        let zeros = StateVector::basis(3, 0).unwrap();
        let ones = StateVector::basis(3, 7).unwrap();
        assert_eq!(inner(&zeros, &ones).unwrap(), c(0.0));
        assert!((inner(&g, &plus3()).unwrap() - c(0.5)).norm() < 1e-15);
        assert!((fidelity(&g, &plus3()).unwrap() - 0.25).abs() < 1e-15);
        assert_eq!(fidelity(&zeros, &ones).unwrap(), 0.0);
        assert!(matches!(
            inner(&g, &StateVector::basis(2, 0).unwrap()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn size_limits() {
        assert_eq!(StateVector::zeros(0), Err(Error::NoQubits));
        assert_eq!(
            StateVector::zeros(15),
            Err(Error::TooManyQubits {
                n: 15,
                limit: DEFAULT_MAX_QUBITS
            })
        );
        assert!(StateVector::zeros_with_limit(15, 16).is_ok());
        assert!(matches!(
            StateVector::new(2, vec![c(1.0); 3]),
            Err(Error::BadLength { .. })
        ));
    }

    #[test]
    fn operator_algebra() {
        let x = LocalOperator::flip();
        assert!((x * x).max_abs_diff(&LocalOperator::identity()) < 1e-15);
        let h = LocalOperator::hadamard();
        assert!((h * h).max_abs_diff(&LocalOperator::identity()) < 1e-15);
        assert!(!LocalOperator::from_real([[1.0, 1.0], [1.0, 1.0]]).is_invertible());
        let m = LocalOperator::new([[c(1.0), C64::new(0.0, 2.0)], [c(3.0), c(4.0)]]);
        assert_eq!(m.adjoint().entries[0][1], c(3.0));
        assert_eq!(m.adjoint().entries[1][0], C64::new(0.0, -2.0));
    }

    #[test]
    fn phase_fix_picks_first_largest() {
        let v = [C64::new(0.0, 0.6), C64::new(0.0, -0.8)];
        let fixed = phase_fix(&v);
        assert!((fixed[1] - c(0.8)).norm() < 1e-15);
        assert!((fixed[0] - c(-0.6)).norm() < 1e-15);
    }
}
