//! Finite-dimensional unital associative algebras given by structure constants.
//!
//! Basis vectors are `e_1, …, e_d` with `e_1` the unit. Indices in the API are
//! zero-based (`e_1` is index 0); indices carried by errors are one-based.

pub mod catalog;
mod file;

use thiserror::Error;

use crate::ring::{determinant, RingError, Scalar};

pub use file::{load_json, AlgebraFile, LoadedAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension must be at least 1")]
    EmptyAlgebra,
    #[error("e_1 is not a unit: violated at (i, j, k) = ({i}, {j}, {k})")]
    NotUnital { i: usize, j: usize, k: usize },
    #[error("multiplication is not associative at (i, j, k, l) = ({i}, {j}, {k}, {l})")]
    NotAssociative { i: usize, j: usize, k: usize, l: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("malformed algebra file: {0}")]
    File(String),
}

/// A validated unital associative algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    /// `c[i][j][k]` at `(i * dim + j) * dim + k`.
    structure: Vec<Scalar>,
}

impl Algebra {
    /// Builds and validates an algebra from `structure[i][j][k]`, the
    /// `e_k`-coordinate of `e_i · e_j`.
    pub fn new(structure: Vec<Vec<Vec<Scalar>>>) -> Result<Self, AlgebraError> {
        let dim = structure.len();
        if dim == 0 {
            return Err(AlgebraError::EmptyAlgebra);
        }
        let mut flat = Vec::with_capacity(dim * dim * dim);
        for row in structure {
            if row.len() != dim {
                return Err(AlgebraError::DimMismatch { expected: dim, found: row.len() });
            }
            for entry in row {
                if entry.len() != dim {
                    return Err(AlgebraError::DimMismatch { expected: dim, found: entry.len() });
                }
                flat.extend(entry);
            }
        }
        let alg = Algebra { dim, structure: flat };
        alg.validate()?;
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `e_i · e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.structure[start..start + self.dim]
    }

    /// Coordinates of the unit `e_1`.
    pub fn unit(&self) -> Vec<Scalar> {
        basis_vector(self.dim, 0)
    }

    /// Checks unitality of `e_1`, then associativity; reports the first violation.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        let d = self.dim;
        for j in 0..d {
            for k in 0..d {
                let delta = if j == k { Scalar::one() } else { Scalar::zero() };
                if *self.structure_constant(0, j, k) != delta {
                    return Err(AlgebraError::NotUnital { i: 1, j: j + 1, k: k + 1 });
                }
                if *self.structure_constant(j, 0, k) != delta {
                    return Err(AlgebraError::NotUnital { i: j + 1, j: 1, k: k + 1 });
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let mut left = Scalar::zero();
                        let mut right = Scalar::zero();
                        for m in 0..d {
                            left += &(self.structure_constant(i, j, m) * self.structure_constant(m, k, l));
                            right += &(self.structure_constant(j, k, m) * self.structure_constant(i, m, l));
                        }
                        if left != right {
                            return Err(AlgebraError::NotAssociative {
                                i: i + 1,
                                j: j + 1,
                                k: k + 1,
                                l: l + 1,
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Product of two coordinate vectors.
    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
        self.check_len(a.len())?;
        self.check_len(b.len())?;
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, ai) in a.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                let w = ai * bj;
                for (k, c) in self.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&w * c);
                    }
                }
            }
        }
        Ok(out)
    }

    fn check_len(&self, found: usize) -> Result<(), AlgebraError> {
        if found == self.dim {
            Ok(())
        } else {
            Err(AlgebraError::DimMismatch { expected: self.dim, found })
        }
    }

    fn check_square(&self, f: &LinMap) -> Result<(), AlgebraError> {
        self.check_len(f.rows())?;
        self.check_len(f.cols())
    }

    /// True iff `f` is invertible, fixes the unit and is multiplicative on the basis.
    pub fn is_automorphism(&self, f: &LinMap) -> Result<bool, AlgebraError> {
        self.check_square(f)?;
        if f.column(0) != self.unit() || !f.is_invertible()? {
            return Ok(false);
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = f.apply(self.basis_product(i, j));
                let rhs = self.multiply(&f.column(i), &f.column(j))?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The scalar `c` with `c·f` an algebra automorphism, if any.
    ///
    /// `c` is forced by `c·f(1) = 1`: `None` when `f(1)` is not a multiple of
    /// the unit; `NotAUnit` when it is a non-invertible multiple.
    pub fn scalar_multiple_automorphism(&self, f: &LinMap) -> Result<Option<Scalar>, AlgebraError> {
        self.check_square(f)?;
        let image = f.column(0);
        if image[1..].iter().any(|s| !s.is_zero()) || image[0].is_zero() {
            return Ok(None);
        }
        let c = image[0].inv()?;
        Ok(self.is_automorphism(&f.scaled(&c))?.then_some(c))
    }

    /// Trace of the endomorphism `b ↦ a·μ(b)`.
    pub fn left_mul_trace(&self, a: &[Scalar], mu: &LinMap) -> Result<Scalar, AlgebraError> {
        self.check_len(a.len())?;
        self.check_square(mu)?;
        let mut tr = Scalar::zero();
        for i in 0..self.dim {
            let image = self.multiply(a, &mu.column(i))?;
            tr += &image[i];
        }
        Ok(tr)
    }
}

pub fn basis_vector(dim: usize, i: usize) -> Vec<Scalar> {
    (0..dim).map(|k| if k == i { Scalar::one() } else { Scalar::zero() }).collect()
}

/// A linear map between coordinate spaces; `get(j, i)` is the
/// `e_j`-coordinate of the image of `e_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinMap {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl LinMap {
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, AlgebraError> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if n_rows == 0 || n_cols == 0 {
            return Err(AlgebraError::EmptyAlgebra);
        }
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            if row.len() != n_cols {
                return Err(AlgebraError::DimMismatch { expected: n_cols, found: row.len() });
            }
            entries.extend(row);
        }
        Ok(LinMap { rows: n_rows, cols: n_cols, entries })
    }

    pub fn identity(dim: usize) -> Self {
        let entries = (0..dim * dim)
            .map(|idx| if idx / dim == idx % dim { Scalar::one() } else { Scalar::zero() })
            .collect();
        LinMap { rows: dim, cols: dim, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.cols + col]
    }

    pub fn column(&self, col: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.entries.chunks(self.cols).map(<[Scalar]>::to_vec).collect()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (c, vc) in v.iter().enumerate() {
                    let e = self.get(r, c);
                    if !e.is_zero() && !vc.is_zero() {
                        acc += &(e * vc);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn scaled(&self, c: &Scalar) -> LinMap {
        LinMap { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|e| e * c).collect() }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinMap) -> Result<LinMap, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::DimMismatch { expected: self.cols, found: other.rows });
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                entries.push((0..self.cols).map(|k| self.get(r, k) * other.get(k, c)).sum());
            }
        }
        Ok(LinMap { rows: self.rows, cols: other.cols, entries })
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn determinant(&self) -> Result<Scalar, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::DimMismatch { expected: self.rows, found: self.cols });
        }
        Ok(determinant(&self.to_rows())?)
    }

    /// Invertible over the fraction field, i.e. nonzero determinant.
    pub fn is_invertible(&self) -> Result<bool, AlgebraError> {
        Ok(!self.determinant()?.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::catalog;
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn vec_of(texts: &[&str]) -> Vec<Scalar> {
        texts.iter().map(|t| s(t)).collect()
    }

    fn map(rows: &[&[&str]]) -> LinMap {
        LinMap::from_rows(rows.iter().map(|r| vec_of(r)).collect()).unwrap()
    }

    #[test]
    fn catalog_validates() {
        for entry in catalog::all() {
            entry.algebra.validate().unwrap();
        }
    }

    #[test]
    fn broken_unit_rejected() {
        // t·t = 1 but 1·t has no t-component.
        let structure = vec![
            vec![vec_of(&["1", "0"]), vec_of(&["0", "0"])],
            vec![vec_of(&["0", "1"]), vec_of(&["1", "0"])],
        ];
        assert_eq!(Algebra::new(structure), Err(AlgebraError::NotUnital { i: 1, j: 2, k: 2 }));
    }

    #[test]
    fn non_associative_rejected() {
        // Unital, but e2·e2 = e3, e2·e3 = e2, e3·e2 = 0 breaks (e2 e2) e2 = e2 (e2 e2).
        let mut structure = vec![vec![vec![Scalar::zero(); 3]; 3]; 3];
        for j in 0..3 {
            structure[0][j][j] = Scalar::one();
            structure[j][0][j] = Scalar::one();
        }
        structure[1][1][2] = Scalar::one();
        structure[2][1][1] = Scalar::one();
        assert!(matches!(Algebra::new(structure), Err(AlgebraError::NotAssociative { .. })));
    }

    #[test]
    fn multiply_examples() {
        let alg = catalog::dual_numbers().algebra;
        assert_eq!(alg.multiply(&vec_of(&["0", "1"]), &vec_of(&["0", "1"])).unwrap(), vec_of(&["0", "0"]));
        let a = vec_of(&["x", "3*t"]);
        assert_eq!(alg.multiply(&alg.unit(), &a).unwrap(), a);
        assert_eq!(alg.multiply(&vec_of(&["1", "1"]), &vec_of(&["1", "-1"])).unwrap(), vec_of(&["1", "0"]));
        assert!(matches!(alg.multiply(&vec_of(&["1"]), &a), Err(AlgebraError::DimMismatch { .. })));
    }

    #[test]
    fn automorphism_examples() {
        let dual = catalog::dual_numbers();
        assert!(dual.algebra.is_automorphism(&dual.mu).unwrap());
        assert!(dual.algebra.is_automorphism(&LinMap::identity(2)).unwrap());
        // t ↦ 1 + t: (1 + t)² = 1 + 2t ≠ 0.
        assert!(!dual.algebra.is_automorphism(&map(&[&["1", "1"], &["0", "1"]])).unwrap());
        // Composition of automorphisms.
        let twice = dual.mu.compose(&dual.mu).unwrap();
        assert!(dual.algebra.is_automorphism(&twice).unwrap());
        let split = catalog::split();
        let sw = split.mu.compose(&split.mu).unwrap();
        assert_eq!(sw, LinMap::identity(2));
    }

    #[test]
    fn scalar_multiple_examples() {
        let dual = catalog::dual_numbers();
        assert_eq!(dual.algebra.scalar_multiple_automorphism(&dual.mu).unwrap(), Some(Scalar::one()));
        let three = LinMap::identity(2).scaled(&Scalar::from_int(3));
        assert_eq!(dual.algebra.scalar_multiple_automorphism(&three).unwrap(), Some(Scalar::from_ratio(1, 3)));
        let to_t = map(&[&["0", "1"], &["1", "0"]]);
        assert_eq!(dual.algebra.scalar_multiple_automorphism(&to_t).unwrap(), None);
        let non_unit = LinMap::identity(2).scaled(&s("1 + x"));
        assert!(matches!(dual.algebra.scalar_multiple_automorphism(&non_unit), Err(AlgebraError::Ring(_))));
    }

    #[test]
    fn left_mul_trace_examples() {
        let dual = catalog::dual_numbers();
        let alg = &dual.algebra;
        assert!(alg.left_mul_trace(&vec_of(&["1", "0"]), &dual.mu).unwrap().is_zero());
        assert!(alg.left_mul_trace(&vec_of(&["0", "1"]), &dual.mu).unwrap().is_zero());
        assert_eq!(alg.left_mul_trace(&vec_of(&["1", "0"]), &LinMap::identity(2)).unwrap(), Scalar::from_int(2));
    }

    #[test]
    fn left_mul_trace_is_linear() {
        let split = catalog::split();
        let mu = map(&[&["2", "x"], &["t", "-1"]]);
        let a = vec_of(&["x", "1/2"]);
        let b = vec_of(&["-3", "y^1/2"]);
        let ab: Vec<Scalar> = a.iter().zip(&b).map(|(p, q)| p + q).collect();
        let alg = &split.algebra;
        assert_eq!(
            alg.left_mul_trace(&ab, &mu).unwrap(),
            &alg.left_mul_trace(&a, &mu).unwrap() + &alg.left_mul_trace(&b, &mu).unwrap()
        );
    }

    #[test]
    fn trace_condition_holds_for_catalog() {
        for entry in catalog::all() {
            for i in 0..entry.algebra.dim() {
                let a = basis_vector(entry.algebra.dim(), i);
                assert!(entry.algebra.left_mul_trace(&a, &entry.mu).unwrap().is_zero(), "{}", entry.name);
            }
        }
    }
}
