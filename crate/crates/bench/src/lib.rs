//! Inputs shared by the benchmarks.

use ginv_core::automorphism::{diagonal, order_and_closure};
use ginv_core::fixtures::ore_mystic_algebra;
use ginv_core::{Algebra, CycNumber, FiniteGroup, Result};

/// The four-generator Ore extension with the order-4 group generated by diag(i, −i, 1, 1).
pub fn ore_group(cutoff: usize) -> Result<(Algebra, FiniteGroup)> {
    let a = Algebra::quantum_polynomial(ore_mystic_algebra()?, cutoff)?;
    let i = CycNumber::i();
    let one = CycNumber::one();
    let g = a.automorphism("g", diagonal(&[i.clone(), -i, one.clone(), one]))?;
    let group = order_and_closure(&[g], 16)?;
    Ok((a, group))
}
