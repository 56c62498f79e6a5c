//! Map odd-`n` FES states to `n - 1` qubits and check that the map commutes
//! with the ILO curves. The common factor cancels on normalization, so the
//! states correspond one to one while the success probabilities differ.

use fes_ilo::classify::{even_odd_map, odd_even_map};
use fes_ilo::ilo::{evolve, success_probability};
use fes_ilo::{FPolicy, FesVector, IloParams, Result};

fn main() -> Result<()> {
    let v = FesVector::from_real(5, &[0.6, -0.2, 0.77])?.normalized()?;
    let t0 = 0.3;
    let even = odd_even_map(&v, t0)?;
    println!(
        "n=5 {:.4?}",
        v.coeffs().iter().map(|c| c.re).collect::<Vec<_>>()
    );
    println!(
        "n=4 {:.4?}",
        even.coeffs().iter().map(|c| c.re).collect::<Vec<_>>()
    );

    for t in [-0.8, -0.2, 0.5, 0.9] {
        let params = IloParams::new(t, FPolicy::Unit)?;
        let a = odd_even_map(&evolve(&v, &params)?, t0)?;
        let b = evolve(&even, &params)?;
        let pov = IloParams::new(t, FPolicy::PovmMax)?;
        println!(
            "t = {t:+.1}: commutation error {:.2e}, P(n=5) {:.4}, P(n=4) {:.4}",
            a.phase_distance(&b)?,
            success_probability(&v, &pov),
            success_probability(&even, &pov)
        );
    }
    let back = even_odd_map(&even, t0)?;
    println!("round trip error {:.2e}", back.phase_distance(&v)?);
    Ok(())
}
