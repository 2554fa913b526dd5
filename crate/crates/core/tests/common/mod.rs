//! Builders shared by the integration tests.

#![allow(dead_code)]

use belitskii::{Field, Scalar, SquareMatrix};
use rand::Rng;

pub const Q: Field = Field::Rational;

pub fn gf(p: u32) -> Field {
    Field::prime(p).expect("prime")
}

/// A strictly upper matrix from raw entries read row by row above the
/// diagonal; raw values are reduced into the field.
pub fn strict_upper(field: Field, n: usize, raw: &[i64]) -> SquareMatrix {
    let mut m = SquareMatrix::zero(field, n);
    let mut it = raw.iter().cycle();
    for i in 0..n {
        for j in i + 1..n {
            m.set(i, j, field.from_i64(*it.next().expect("nonempty")));
        }
    }
    m
}

/// A nonzero field element from a raw value.
pub fn unit(field: Field, raw: i64) -> Scalar {
    match field.order() {
        Some(p) => field.from_i64(1 + raw.rem_euclid(p as i64 - 1)),
        None if raw == 0 => field.one(),
        None => field.from_i64(raw),
    }
}

/// An invertible upper-triangular matrix.
pub fn upper_invertible(field: Field, n: usize, diag: &[i64], above: &[i64]) -> SquareMatrix {
    let mut t = strict_upper(field, n, above);
    for i in 0..n {
        t.set(i, i, unit(field, diag[i % diag.len()]));
    }
    t
}

pub fn conjugate(a: &SquareMatrix, t: &SquareMatrix) -> SquareMatrix {
    a.conjugate_with(t, &t.invert_triangular().expect("invertible")).expect("same shape")
}

/// Random strictly upper matrix with roughly `density` nonzero entries.
pub fn random_strict_upper(rng: &mut impl Rng, field: Field, n: usize, density: f64) -> SquareMatrix {
    let mut m = SquareMatrix::zero(field, n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                m.set(i, j, unit(field, rng.gen_range(-4..=4)));
            }
        }
    }
    m
}

pub fn random_upper_invertible(rng: &mut impl Rng, field: Field, n: usize) -> SquareMatrix {
    let mut t = SquareMatrix::zero(field, n);
    for i in 0..n {
        t.set(i, i, unit(field, rng.gen_range(-3..=3)));
        for j in i + 1..n {
            t.set(i, j, field.from_i64(rng.gen_range(-3..=3)));
        }
    }
    t
}
