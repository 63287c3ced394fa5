//! Built-in algebras, each paired with a distinguished map `μ`.

use super::{Algebra, LinMap};
use crate::ring::Scalar;

#[derive(Debug, Clone)]
pub struct NamedAlgebra {
    pub name: &'static str,
    pub algebra: Algebra,
    pub mu: LinMap,
}

fn build(name: &'static str, square_of_second: [i64; 2], mu_rows: [[i64; 2]; 2]) -> NamedAlgebra {
    let z = Scalar::zero;
    let o = Scalar::one;
    let [a, b] = square_of_second;
    let structure = vec![
        vec![vec![o(), z()], vec![z(), o()]],
        vec![vec![z(), o()], vec![Scalar::from_int(a), Scalar::from_int(b)]],
    ];
    let algebra = Algebra::new(structure).expect("catalog algebra is valid");
    let mu = LinMap::from_rows(
        mu_rows.iter().map(|r| r.iter().map(|&e| Scalar::from_int(e)).collect()).collect(),
    )
    .expect("2x2 map");
    NamedAlgebra { name, algebra, mu }
}

/// `k[t]/(t²)` in basis `(1, t)` with `μ(t) = −t`.
pub fn dual_numbers() -> NamedAlgebra {
    build("dual", [0, 0], [[1, 0], [0, -1]])
}

/// `k × k` in basis `(1, e)` with `e² = e`, and the swap `e ↦ 1 − e`.
pub fn split() -> NamedAlgebra {
    build("split", [0, 1], [[1, 1], [0, -1]])
}

/// `k[t]/(t² − 1)` in basis `(1, t)` with `μ(t) = −t`.
pub fn involutive() -> NamedAlgebra {
    build("involutive", [1, 0], [[1, 0], [0, -1]])
}

pub fn all() -> Vec<NamedAlgebra> {
    vec![dual_numbers(), split(), involutive()]
}

pub fn by_name(name: &str) -> Option<NamedAlgebra> {
    all().into_iter().find(|a| a.name == name)
}
