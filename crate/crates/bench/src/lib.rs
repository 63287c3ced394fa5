//! Deterministic braid families shared by the benchmarks in `benches/`.

use ybknot_core::BraidWord;

/// `(σ_1 σ_2 ⋯ σ_{n-1})^k`, whose closure is the `(n, k)` torus link.
pub fn torus(strands: usize, k: usize) -> BraidWord {
    let row: Vec<i32> = (1..strands as i32).collect();
    BraidWord::new(strands, row.repeat(k)).expect("valid generators")
}

/// Alternating word `σ_1 σ_2⁻¹ σ_3 ⋯` of the given length, cycling through generators.
pub fn alternating(strands: usize, len: usize) -> BraidWord {
    let gens = (strands - 1) as i32;
    let letters = (0..len as i32).map(|j| {
        let g = j % gens + 1;
        if j % 2 == 0 { g } else { -g }
    });
    BraidWord::new(strands, letters.collect()).expect("valid generators")
}
