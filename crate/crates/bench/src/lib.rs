//! Shared fixtures for the benchmark targets.

use trifactor_core::perm::{parse_cycles, PermGroup};

pub fn group(degree: usize, gens: &[&str]) -> PermGroup {
    let gens = gens
        .iter()
        .map(|s| parse_cycles(degree, s).expect("generator literal"))
        .collect();
    PermGroup::new(degree, gens).expect("bench group")
}

/// The degree-12 Mathieu group.
pub fn m12() -> PermGroup {
    group(
        12,
        &[
            "(1,2,3,4,5,6,7,8,9,10,11)",
            "(3,7,11,8)(4,10,5,6)",
            "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)",
        ],
    )
}

/// Its point stabilizer at 12.
pub fn m11_in_m12() -> PermGroup {
    group(12, &["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"])
}

/// Degree-7 model of L3(2).
pub fn psl27() -> PermGroup {
    group(7, &["(2,3)(6,7)", "(4,6)(5,7)", "(2,4)(3,5)", "(1,2)(5,6)"])
}

pub fn psl27_borel() -> PermGroup {
    group(7, &["(4,6)(5,7)", "(2,3)(6,7)"])
}
