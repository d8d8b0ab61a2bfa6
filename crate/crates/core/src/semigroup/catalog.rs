//! Generator sets for the exceptional set-transitive groups.
//!
//! The projective groups act on the projective line over a finite field with
//! points labelled `x + 1` for field elements `x` and `q + 1` for infinity.
//! `F_8` is taken as `F_2[x]/(x^3 + x + 1)`, with elements as bit words.

use crate::transform::Transformation;

fn rows(rows: &[&[usize]]) -> Vec<Transformation> {
    rows.iter()
        .map(|r| Transformation::new(r).expect("catalog rows are valid"))
        .collect()
}

/// `AGL(1,5)` on `Z_5` (label 5 is zero): `x ↦ x + 1` and `x ↦ 2x`. Order 20.
pub fn agl_1_5() -> Vec<Transformation> {
    rows(&[&[2, 3, 4, 5, 1], &[2, 4, 1, 3, 5]])
}

/// `PGL(2,5)` on 6 points: `x ↦ x + 1`, `x ↦ 2x`, `x ↦ -1/x`. Order 120.
pub fn pgl_2_5() -> Vec<Transformation> {
    rows(&[
        &[2, 3, 4, 5, 1, 6],
        &[1, 3, 5, 2, 4, 6],
        &[6, 5, 3, 4, 2, 1],
    ])
}

/// `PSL(2,8)` on 9 points: `x ↦ x + 1`, `x ↦ ωx`, `x ↦ 1/x`. Order 504.
pub fn psl_2_8() -> Vec<Transformation> {
    rows(&[
        &[2, 1, 4, 3, 6, 5, 8, 7, 9],
        &[1, 3, 5, 7, 4, 2, 8, 6, 9],
        &[9, 2, 6, 7, 8, 3, 4, 5, 1],
    ])
}

/// `PΓL(2,8)`: `PSL(2,8)` extended by the Frobenius map `x ↦ x²`. Order 1512.
pub fn pgammal_2_8() -> Vec<Transformation> {
    let mut gens = psl_2_8();
    gens.extend(rows(&[&[1, 2, 5, 6, 7, 8, 3, 4, 9]]));
    gens
}
