//! Betti tables of a few well known resolutions, shared by tests, benches and
//! the CLI documentation.

use crate::table::BettiTable;

fn build(raw: &[(usize, i64, i64)]) -> BettiTable {
    BettiTable::from_counts(raw).expect("fixture tables are valid")
}

/// Koszul complex of the residue field over three variables.
pub fn koszul3() -> BettiTable {
    build(&[(0, 0, 1), (1, 1, 3), (2, 2, 3), (3, 3, 1)])
}

/// `R/(x^2, y^2, z^4)`.
pub fn complete_intersection_224() -> BettiTable {
    build(&[
        (0, 0, 1),
        (1, 2, 2),
        (1, 4, 1),
        (2, 4, 1),
        (2, 6, 2),
        (3, 8, 1),
    ])
}

/// `R/(yz, xz, xy, y^7 - z^7, x^7 - z^7)`, multiplicity 20.
pub fn e20_example() -> BettiTable {
    build(&[
        (0, 0, 1),
        (1, 2, 3),
        (1, 7, 2),
        (2, 3, 2),
        (2, 8, 3),
        (3, 10, 1),
    ])
}

/// Pfaffians of a generic 5x5 skew map `R(-8)^2 + R(-7)^2 + R(-6) -> R(-4)^2 + R(-5)^2 + R(-6)`.
pub fn pfaffian() -> BettiTable {
    build(&[
        (0, 0, 1),
        (1, 4, 2),
        (1, 5, 2),
        (1, 6, 1),
        (2, 6, 1),
        (2, 7, 2),
        (2, 8, 2),
        (3, 12, 1),
    ])
}
