//! Closest symmetric product state `(cos θ|0⟩ + sin θ|1⟩)^{⊗n}`.

use fes_ilo::classify::{
    closest_symmetric_product, named_state, product_state, NamedState, DEFAULT_PRODUCT_GRID,
    DEFAULT_REFINE_TOL,
};
use fes_ilo::fes_basis::psi_pq;
use fes_ilo::statevec::{is_fes, DEFAULT_TOL};
use fes_ilo::{Result, StateVector};

fn report(label: &str, state: &StateVector) -> Result<()> {
    let best = closest_symmetric_product(state, DEFAULT_PRODUCT_GRID, DEFAULT_REFINE_TOL)?;
    let fes = is_fes(&product_state(state.n(), best.theta)?, DEFAULT_TOL);
    println!(
        "{label:<8} theta {:.10}  overlap^2 {:.10}  degenerate {:<5}  product is FES {fes}",
        best.theta, best.overlap_sq, best.degenerate
    );
    Ok(())
}

fn main() -> Result<()> {
    for n in 3..=6 {
        report(&format!("GHZ{n}"), &named_state(NamedState::Ghz, n)?)?;
    }
    report("W", &named_state(NamedState::W, 3)?)?;
    report("psi_12", &psi_pq(1, 2)?)?;
    report("psi_22", &psi_pq(2, 2)?)?;
    Ok(())
}
