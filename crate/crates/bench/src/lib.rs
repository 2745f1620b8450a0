//! Inputs shared by the criterion benchmarks.

use mkdiv3_core::ImplId;

/// Ground inputs per implementation. The multiplication-based relations
/// get smaller numerals so a full run stays within a few minutes.
pub fn speed_inputs(id: ImplId) -> &'static [u64] {
    if id.is_multiplication_based() {
        &[99, 300, 600]
    } else {
        &[300, 2000, 20000]
    }
}

/// Answer-prefix lengths for the reach benchmark.
pub const REACH_PREFIXES: [usize; 2] = [100, 1000];
