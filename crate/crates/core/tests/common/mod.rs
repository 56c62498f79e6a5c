//! Reference constructions used by the integration tests. None of these go
//! through the crate's Hadamard route or its per-qubit operator sweep.

#![allow(dead_code)]

use fes_ilo::{FesVector, LocalOperator, StateVector};
use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random normalized complex FES coefficients with every entry nonzero.
pub fn random_fes(n: usize, rng: &mut impl Rng) -> FesVector {
    let dim = n / 2 + 1;
    let coeffs: Vec<C64> = (0..dim)
        .map(|_| {
            let mag = rng.gen_range(0.2..1.0);
            let phase = rng.gen_range(0.0..std::f64::consts::TAU);
            C64::from_polar(mag, phase)
        })
        .collect();
    FesVector::new(n, coeffs).unwrap().normalized().unwrap()
}

/// `ψ_pq` as the normalized sum of `⊗|±⟩` products over every placement of
/// the `q` minus signs.
pub fn symmetric_sum_psi(p: usize, q: usize) -> StateVector {
    let n = p + q;
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut amps = vec![C64::new(0.0, 0.0); 1 << n];
    let mut terms = 0usize;
    for minus_mask in 0usize..(1 << n) {
        if minus_mask.count_ones() as usize != q {
            continue;
        }
        terms += 1;
        for (x, amp) in amps.iter_mut().enumerate() {
            let mut term = 1.0;
            for qubit in 0..n {
                let bit = (x >> (n - 1 - qubit)) & 1;
                let minus = (minus_mask >> (n - 1 - qubit)) & 1 == 1;
                term *= if minus && bit == 1 { -h } else { h };
            }
            *amp += C64::new(term, 0.0);
        }
    }
    let norm = 1.0 / (terms as f64).sqrt();
    StateVector::new(n, amps.into_iter().map(|a| a * norm).collect()).unwrap()
}

/// Explicit Kronecker power `A^{⊗n}` as a dense row-major matrix.
pub fn kron_power(op: &LocalOperator, n: usize) -> Vec<Vec<C64>> {
    let mut mat = vec![vec![C64::new(1.0, 0.0)]];
    for _ in 0..n {
        let dim = mat.len();
        let mut next = vec![vec![C64::new(0.0, 0.0); 2 * dim]; 2 * dim];
        for (r, row) in mat.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                for a in 0..2 {
                    for b in 0..2 {
                        next[2 * r + a][2 * c + b] = v * op.entries[a][b];
                    }
                }
            }
        }
        mat = next;
    }
    mat
}

/// `⟨ψ| A |ψ⟩` for a dense matrix `A`.
pub fn dense_expectation(mat: &[Vec<C64>], state: &StateVector) -> C64 {
    let amps = state.amps();
    mat.iter()
        .zip(amps)
        .map(|(row, left)| {
            let image: C64 = row.iter().zip(amps).map(|(m, a)| m * a).sum();
            left.conj() * image
        })
        .sum()
}

/// `M(t) = f [[1, t], [t, 1]]` written out directly.
pub fn m_matrix(t: f64, f: f64) -> LocalOperator {
    LocalOperator::from_real([[f, f * t], [f * t, f]])
}
