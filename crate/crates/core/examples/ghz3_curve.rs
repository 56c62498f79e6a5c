//! Trace the GHZ3 curve under `M(t)` and compare the success probability
//! with its closed form.

use fes_ilo::classify::{ghz3_probability_closed_form, named_state, NamedState};
use fes_ilo::fes_basis::expand;
use fes_ilo::ilo::{curve_trace, success_probability_dense};
use fes_ilo::statevec::DEFAULT_TOL;
use fes_ilo::{BasisIndex, FPolicy, IloParams, Result};

fn main() -> Result<()> {
    let ghz = expand(&named_state(NamedState::Ghz, 3)?, DEFAULT_TOL)?;
    println!("GHZ3 = {:.6?}", ghz.phase_fixed().coeffs());

    let ts: Vec<f64> = (0..=10).map(|i| -0.99 + 1.98 * i as f64 / 10.0).collect();
    let targets = [BasisIndex::new(3, 0), BasisIndex::new(1, 2)];
    let curve = curve_trace(&ghz, &ts, FPolicy::PovmMax, &targets)?;

    println!(
        "{:>7} {:>10} {:>10} {:>10} {:>10}",
        "t", "P", "closed", "F(30)", "F(12)"
    );
    for s in &curve {
        let f = FPolicy::PovmMax.f(s.t);
        let dense = success_probability_dense(&ghz, &IloParams::new(s.t, FPolicy::PovmMax)?)?;
        assert!((dense - s.probability).abs() < 1e-10);
        println!(
            "{:>7.3} {:>10.6} {:>10.6} {:>10.6} {:>10.6}",
            s.t,
            s.probability,
            ghz3_probability_closed_form(s.t, f),
            s.target_fidelities[0].1,
            s.target_fidelities[1].1,
        );
    }
    Ok(())
}
