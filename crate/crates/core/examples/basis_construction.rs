//! Build the FES basis `ψ_pq = H^{⊗n} S(n, p)` and check its properties.
//!
//! ```bash
//! cargo run -p fes-ilo --example basis_construction -- 6
//! ```

use fes_ilo::fes_basis::{degeneracy, dicke, embed, expand, fes_dimension, fes_indices, psi_pq};
use fes_ilo::statevec::{inner, is_fes, DEFAULT_TOL};
use fes_ilo::{FesVector, Result};

fn main() -> Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);

    println!("n = {n}: FES dimension {}", fes_dimension(n));
    let basis: Vec<_> = fes_indices(n)
        .into_iter()
        .map(|idx| psi_pq(idx.p, idx.q).map(|s| (idx, s)))
        .collect::<Result<_>>()?;

    for (idx, state) in &basis {
        let label = if idx.is_entangled() {
            "entangled"
        } else {
            "product"
        };
        println!(
            "  psi_{idx}: degeneracy {:>4}, FES {}, {label}",
            degeneracy(idx.p, idx.q),
            is_fes(state, DEFAULT_TOL)
        );
    }

    // Orthonormality.
    let mut worst: f64 = 0.0;
    for (i, (_, a)) in basis.iter().enumerate() {
        for (j, (_, b)) in basis.iter().enumerate() {
            let want = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((inner(a, b)? - want).norm());
        }
    }
    println!("max |<psi|psi'> - delta| = {worst:.2e}");

    // Odd q breaks flip symmetry.
    if n >= 1 {
        let odd = psi_pq(n - 1, 1)?;
        println!("psi_{}_1 is FES: {}", n - 1, is_fes(&odd, DEFAULT_TOL));
    }

    // Dicke states are exchange symmetric but only the balanced mixtures are FES.
    let s = dicke(n, n / 2)?;
    match expand(&s, DEFAULT_TOL) {
        Ok(v) => println!(
            "S({n},{}) in the FES basis: {:.4?}",
            n / 2,
            v.phase_fixed().coeffs()
        ),
        Err(e) => println!("S({n},{}): {e}", n / 2),
    }

    // Round trip of a uniform superposition.
    let uniform = FesVector::from_real(n, &vec![1.0; fes_dimension(n)])?.normalized()?;
    let back = expand(&embed(&uniform)?, DEFAULT_TOL)?;
    println!("round trip error {:.2e}", back.phase_distance(&uniform)?);
    Ok(())
}
