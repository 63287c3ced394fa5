//! Yang–Baxter operators `R_{x,y,z}(a ⊗ b) = x·ab ⊗ 1 + y·1 ⊗ ab − z·a ⊗ b`
//! on `A ⊗ A` for a unital associative algebra `A`.
//!
//! `R_{x,y,z}` satisfies the braid equation exactly when `x = z ≠ 0, y ≠ 0`,
//! `y = z ≠ 0, x ≠ 0`, or `x = y = 0, z ≠ 0`. Construction rejects every other
//! parameter triple and re-checks the braid equation symbolically.

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, LinMap};
use crate::ring::{RingError, Scalar};
use crate::tensor::{EntryWitness, TensorError, TensorOp};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YbError {
    #[error("algebra of dimension {0} is too small; at least 2 is required")]
    DimTooSmall(usize),
    #[error("parameter `{0}` must be zero or a unit")]
    NonUnitParameter(String),
    #[error("(x, y, z) = ({x}, {y}, {z}) does not give a Yang-Baxter operator")]
    NotYangBaxter { x: String, y: String, z: String },
    #[error("braid equation fails: {0}")]
    BraidEquationFails(EntryWitness),
    #[error("quantum Yang-Baxter equation fails: {0}")]
    QybeFails(EntryWitness),
    #[error("quadratic relation fails: {0}")]
    QuadraticFails(EntryWitness),
    #[error("the scalar operator R_{{0,0,z}} has no quadratic relation of this form")]
    ScalarCase,
    #[error("R^{0} is not in the span of Id and R")]
    NotInSpan(i32),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Which parameter family a valid `R_{x,y,z}` belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum YbCase {
    /// `x = z ≠ 0, y ≠ 0`; the operator `R_{x,y}`.
    XZ,
    /// `y = z ≠ 0, x ≠ 0`.
    YZ,
    /// `x = y = 0, z ≠ 0`; the scalar operator `−z·Id`.
    Scalar,
}

pub fn classify(x: &Scalar, y: &Scalar, z: &Scalar) -> Option<YbCase> {
    if z.is_zero() {
        None
    } else if x == z && !y.is_zero() {
        Some(YbCase::XZ)
    } else if y == z && !x.is_zero() {
        Some(YbCase::YZ)
    } else if x.is_zero() && y.is_zero() {
        Some(YbCase::Scalar)
    } else {
        None
    }
}

/// The matrix of `R_{x,y,z}` for arbitrary parameters, without any checks.
pub fn raw_operator(alg: &Algebra, x: &Scalar, y: &Scalar, z: &Scalar) -> TensorOp {
    let d = alg.dim();
    TensorOp::from_fn(d, 2, |idx| {
        let (a, b) = (idx / d, idx % d);
        let mut image = Vec::new();
        for (k, c) in alg.basis_product(a, b).iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            image.push((k * d, c * x));
            image.push((k, c * y));
        }
        image.push((idx, -z));
        image
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YbOperator {
    algebra: Algebra,
    x: Scalar,
    y: Scalar,
    z: Scalar,
    case: YbCase,
    matrix: TensorOp,
}

impl YbOperator {
    pub fn new(algebra: &Algebra, x: Scalar, y: Scalar, z: Scalar) -> Result<Self, YbError> {
        if algebra.dim() < 2 {
            return Err(YbError::DimTooSmall(algebra.dim()));
        }
        for p in [&x, &y, &z] {
            if !p.is_zero() && !p.is_unit() {
                return Err(YbError::NonUnitParameter(p.to_string()));
            }
        }
        let case = classify(&x, &y, &z).ok_or_else(|| YbError::NotYangBaxter {
            x: x.to_string(),
            y: y.to_string(),
            z: z.to_string(),
        })?;
        let matrix = raw_operator(algebra, &x, &y, &z);
        check_braid_equation(&matrix)?;
        Ok(YbOperator { algebra: algebra.clone(), x, y, z, case, matrix })
    }

    /// `R_{x,y} = R_{x,y,x}`.
    pub fn r_xy(algebra: &Algebra, x: Scalar, y: Scalar) -> Result<Self, YbError> {
        YbOperator::new(algebra, x.clone(), y, x)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn x(&self) -> &Scalar {
        &self.x
    }

    pub fn y(&self) -> &Scalar {
        &self.y
    }

    pub fn z(&self) -> &Scalar {
        &self.z
    }

    pub fn case(&self) -> YbCase {
        self.case
    }

    pub fn matrix(&self) -> &TensorOp {
        &self.matrix
    }

    /// `R_{x,y,z}^{-1} = R_{y^{-1},x^{-1},z^{-1}}`, or `R_{0,0,z^{-1}}` in the
    /// scalar case.
    pub fn inverse(&self) -> YbOperator {
        let zi = self.z.inv().expect("z is a unit");
        let inv = match self.case {
            YbCase::Scalar => YbOperator::new(&self.algebra, Scalar::zero(), Scalar::zero(), zi),
            YbCase::XZ | YbCase::YZ => YbOperator::new(
                &self.algebra,
                self.y.inv().expect("y is a unit"),
                self.x.inv().expect("x is a unit"),
                zi,
            ),
        }
        .expect("inverse parameters lie in a valid family");
        let product = self.matrix.compose(&inv.matrix).expect("same shape");
        assert_eq!(product, TensorOp::identity(self.dim(), 2), "inverse formula failed");
        inv
    }

    pub fn check_braid_equation(&self) -> Result<(), YbError> {
        check_braid_equation(&self.matrix)
    }

    /// `(b, c)` with `R² = b·R + c·Id`: the roots are `y, −x` in case XZ and
    /// `x, −y` in case YZ.
    pub fn quadratic_coefficients(&self) -> Result<(Scalar, Scalar), YbError> {
        let xy = &self.x * &self.y;
        match self.case {
            YbCase::XZ => Ok((&self.y - &self.x, xy)),
            YbCase::YZ => Ok((&self.x - &self.y, xy)),
            YbCase::Scalar => Err(YbError::ScalarCase),
        }
    }

    /// Checks `R − xy·R^{-1} = b·Id` with `b` from [`Self::quadratic_coefficients`].
    pub fn check_quadratic(&self) -> Result<(), YbError> {
        let (b, c) = self.quadratic_coefficients()?;
        let inv = self.inverse();
        let lhs = self.matrix.sub(&inv.matrix.scale(&c))?;
        let rhs = TensorOp::identity(self.dim(), 2).scale(&b);
        match lhs.first_difference(&rhs) {
            None => Ok(()),
            Some(w) => Err(YbError::QuadraticFails(w)),
        }
    }

    /// `R^m` as an operator, for any integer `m`.
    pub fn power(&self, m: i32) -> TensorOp {
        let base = if m < 0 { self.inverse().matrix } else { self.matrix.clone() };
        let mut acc = TensorOp::identity(self.dim(), 2);
        for _ in 0..m.unsigned_abs() {
            acc = acc.compose(&base).expect("same shape");
        }
        acc
    }

    /// Solves `R^m = a·Id + b·R` exactly and returns `(a, b)`.
    pub fn span_coefficients(&self, m: i32) -> Result<(Scalar, Scalar), YbError> {
        let target = self.power(m);
        let id = TensorOp::identity(self.dim(), 2);
        let r = &self.matrix;
        let size = r.size();
        let positions: Vec<(usize, usize)> = (0..size).flat_map(|i| (0..size).map(move |j| (j, i))).collect();
        // Pick two matrix positions where Id and R are independent, solve the
        // 2×2 system by Cramer's rule, then confirm on every entry.
        for (idx, p) in positions.iter().enumerate() {
            for q in &positions[idx + 1..] {
                let det = &(&id.entry(p.0, p.1) * &r.entry(q.0, q.1)) - &(&id.entry(q.0, q.1) * &r.entry(p.0, p.1));
                if det.is_zero() {
                    continue;
                }
                let num_a = &(&target.entry(p.0, p.1) * &r.entry(q.0, q.1)) - &(&target.entry(q.0, q.1) * &r.entry(p.0, p.1));
                let num_b = &(&id.entry(p.0, p.1) * &target.entry(q.0, q.1)) - &(&id.entry(q.0, q.1) * &target.entry(p.0, p.1));
                let (Ok(a), Ok(b)) = (num_a.div_exact(&det), num_b.div_exact(&det)) else {
                    return Err(YbError::NotInSpan(m));
                };
                let combo = id.scale(&a).add(&r.scale(&b))?;
                return if combo == target { Ok((a, b)) } else { Err(YbError::NotInSpan(m)) };
            }
        }
        Err(YbError::NotInSpan(m))
    }
}

/// `R¹² ∘ R²³ ∘ R¹² = R²³ ∘ R¹² ∘ R²³` on `V^{⊗3}`.
pub fn check_braid_equation(r: &TensorOp) -> Result<(), YbError> {
    let r12 = r.embed(0, 1);
    let r23 = r.embed(1, 0);
    let lhs = r12.compose(&r23)?.compose(&r12)?;
    let rhs = r23.compose(&r12)?.compose(&r23)?;
    match lhs.first_difference(&rhs) {
        None => Ok(()),
        Some(w) => Err(YbError::BraidEquationFails(w)),
    }
}

/// `Q¹² ∘ Q¹³ ∘ Q²³ = Q²³ ∘ Q¹³ ∘ Q¹²` with `Q¹³ = (Id ⊗ T)(Q ⊗ Id)(Id ⊗ T)`.
pub fn check_qybe(q: &TensorOp) -> Result<(), YbError> {
    let t23 = TensorOp::flip(q.local_dim()).embed(1, 0);
    let q12 = q.embed(0, 1);
    let q23 = q.embed(1, 0);
    let q13 = t23.compose(&q12)?.compose(&t23)?;
    let lhs = q12.compose(&q13)?.compose(&q23)?;
    let rhs = q23.compose(&q13)?.compose(&q12)?;
    match lhs.first_difference(&rhs) {
        None => Ok(()),
        Some(w) => Err(YbError::QybeFails(w)),
    }
}

/// True iff `R' ∘ (f ⊗ f) = (f ⊗ f) ∘ R`.
pub fn check_yb_isomorphism(r: &YbOperator, r_prime: &YbOperator, f: &LinMap) -> Result<bool, YbError> {
    if f.rows() != r_prime.dim() || f.cols() != r.dim() {
        return Err(AlgebraError::DimMismatch { expected: r.dim(), found: f.cols() }.into());
    }
    if r.dim() != r_prime.dim() {
        return Err(AlgebraError::DimMismatch { expected: r.dim(), found: r_prime.dim() }.into());
    }
    let ff = TensorOp::from_linmap(f).kron_power(2);
    Ok(r_prime.matrix.compose(&ff)? == ff.compose(&r.matrix)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn dual() -> Algebra {
        catalog::dual_numbers().algebra
    }

    #[test]
    fn dual_numbers_matrix() {
        // R(1⊗1) = y·1⊗1, R(1⊗t) = x·t⊗1 + (y−x)·1⊗t,
        // R(t⊗1) = y·1⊗t, R(t⊗t) = −x·t⊗t.
        let r = YbOperator::r_xy(&dual(), Scalar::x(), Scalar::y()).unwrap();
        assert_eq!(r.case(), YbCase::XZ);
        let m = r.matrix();
        let expected = TensorOp::from_dense(
            2,
            2,
            &[
                vec![s("y"), s("0"), s("0"), s("0")],
                vec![s("0"), s("y - x"), s("y"), s("0")],
                vec![s("0"), s("x"), s("0"), s("0")],
                vec![s("0"), s("0"), s("0"), s("-x")],
            ],
        );
        assert_eq!(m, &expected);
        assert_eq!(m.full_trace(), s("2*y - 2*x"));
    }

    #[test]
    fn rejects_invalid_parameters() {
        let err = YbOperator::new(&dual(), s("1"), s("2"), s("3")).unwrap_err();
        assert!(matches!(err, YbError::NotYangBaxter { .. }));
        let one_dim = Algebra::new(vec![vec![vec![Scalar::one()]]]).unwrap();
        assert_eq!(YbOperator::r_xy(&one_dim, s("x"), s("y")).unwrap_err(), YbError::DimTooSmall(1));
        assert!(matches!(YbOperator::new(&dual(), s("x + 1"), s("y"), s("x + 1")), Err(YbError::NonUnitParameter(_))));
    }

    #[test]
    fn scalar_case() {
        let r = YbOperator::new(&dual(), Scalar::zero(), Scalar::zero(), s("2*x")).unwrap();
        assert_eq!(r.case(), YbCase::Scalar);
        assert_eq!(r.matrix(), &TensorOp::identity(2, 2).scale(&s("-2*x")));
        let inv = r.inverse();
        assert_eq!(inv.z(), &s("1/2*x^-1"));
        assert_eq!(r.check_quadratic(), Err(YbError::ScalarCase));
    }

    #[test]
    fn inverse_formula() {
        let r = YbOperator::r_xy(&dual(), Scalar::x(), Scalar::y()).unwrap();
        let inv = r.inverse();
        assert_eq!((inv.x(), inv.y(), inv.z()), (&s("y^-1"), &s("x^-1"), &s("x^-1")));
        assert_eq!(inv.case(), YbCase::YZ);
        assert_eq!(inv.inverse().matrix(), r.matrix());
    }

    #[test]
    fn braid_equation_fixtures() {
        for entry in catalog::all() {
            let r = YbOperator::r_xy(&entry.algebra, Scalar::x(), Scalar::y()).unwrap();
            r.check_braid_equation().unwrap();
            let r2 = YbOperator::new(&entry.algebra, Scalar::x(), Scalar::y(), Scalar::y()).unwrap();
            r2.check_braid_equation().unwrap();
        }
        check_braid_equation(&TensorOp::flip(2)).unwrap();
        check_braid_equation(&TensorOp::flip(3)).unwrap();
    }

    #[test]
    fn braid_equation_detects_failure() {
        let m = raw_operator(&dual(), &s("1"), &s("2"), &s("3"));
        assert!(matches!(check_braid_equation(&m), Err(YbError::BraidEquationFails(_))));
    }

    #[test]
    fn quadratic_relation() {
        for entry in catalog::all() {
            for (x, y, z) in [("x", "y", "x"), ("x", "y", "y"), ("1", "1", "1"), ("2*x", "-y^3", "2*x")] {
                let r = YbOperator::new(&entry.algebra, s(x), s(y), s(z)).unwrap();
                r.check_quadratic().unwrap();
            }
        }
        // x = y = 1 makes R an involution.
        let r = YbOperator::r_xy(&dual(), s("1"), s("1")).unwrap();
        assert_eq!(r.power(2), TensorOp::identity(2, 2));
    }

    #[test]
    fn qybe_correspondence() {
        let t = TensorOp::flip(2);
        for entry in catalog::all() {
            let r = YbOperator::r_xy(&entry.algebra, Scalar::x(), Scalar::y()).unwrap();
            check_qybe(&r.matrix().compose(&t).unwrap()).unwrap();
            let bad = raw_operator(&entry.algebra, &s("1"), &s("2"), &s("3"));
            assert!(check_braid_equation(&bad).is_err());
            assert!(check_qybe(&bad.compose(&t).unwrap()).is_err());
        }
    }

    #[test]
    fn isomorphism_examples() {
        let entry = catalog::dual_numbers();
        let r = YbOperator::r_xy(&entry.algebra, Scalar::x(), Scalar::y()).unwrap();
        assert!(check_yb_isomorphism(&r, &r, &entry.mu).unwrap());
        assert!(check_yb_isomorphism(&r, &r, &LinMap::identity(2)).unwrap());
        let other = YbOperator::r_xy(&entry.algebra, Scalar::y(), Scalar::x()).unwrap();
        assert!(!check_yb_isomorphism(&r, &other, &LinMap::identity(2)).unwrap());
        // Non-automorphisms of the algebra do not intertwine.
        let shear = LinMap::from_rows(vec![vec![s("1"), s("1")], vec![s("0"), s("1")]]).unwrap();
        assert!(!check_yb_isomorphism(&r, &r, &shear).unwrap());
        for entry in catalog::all() {
            let r = YbOperator::r_xy(&entry.algebra, Scalar::x(), Scalar::y()).unwrap();
            assert!(check_yb_isomorphism(&r, &r, &entry.mu).unwrap(), "{}", entry.name);
            // Scalar multiples of automorphisms intertwine as well.
            assert!(check_yb_isomorphism(&r, &r, &entry.mu.scaled(&s("3*y"))).unwrap());
        }
    }

    #[test]
    fn span_base_case() {
        for entry in catalog::all() {
            let r = YbOperator::r_xy(&entry.algebra, Scalar::x(), Scalar::y()).unwrap();
            for m in -3..=3 {
                let (a, b) = r.span_coefficients(m).unwrap();
                if m == 0 {
                    assert_eq!((a.clone(), b.clone()), (Scalar::one(), Scalar::zero()));
                }
                if m == 1 {
                    assert_eq!((a, b), (Scalar::zero(), Scalar::one()));
                }
            }
            // R² = (y − x)R + xy·Id
            assert_eq!(r.span_coefficients(2).unwrap(), (s("x*y"), s("y - x")));
        }
    }
}
