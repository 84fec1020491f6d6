//! Instances shared by the criterion benches in `benches/`.

use pullback_core::Params;

/// Small enough for exhaustive enumeration.
pub const ENUMERABLE: [Params; 3] = [
    Params::new(5, 6, 1, 2),
    Params::new(6, 6, 2, 1),
    Params::new(6, 7, 1, 1),
];

/// Reachable by outcome-word summation.
pub const WORD_SUMMABLE: [Params; 2] = [Params::new(8, 8, 1, 2), Params::new(7, 9, 2, 2)];

/// Only the recursion handles these.
pub const RECURSION_ONLY: [Params; 3] = [
    Params::new(20, 20, 1, 1),
    Params::new(25, 30, 3, 4),
    Params::new(40, 40, 2, 39),
];

pub fn label(p: &Params) -> String {
    format!("m{}_n{}_k{}_l{}", p.m, p.n, p.k, p.l)
}
