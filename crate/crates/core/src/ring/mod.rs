//! Exact scalars: Laurent polynomials over ℚ in the half-power variables
//! `u = x^{1/2}`, `v = y^{1/2}` and `s = t^{1/2}`.
//!
//! Every exponent is an integer in these variables, so `x` is stored as `u²`.
//! Terms are kept in a [`BTreeMap`] ordered lexicographically on the
//! `(u, v, s)` exponents, which makes equality, hashing and the canonical
//! text form deterministic.

mod linalg;
mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use linalg::{determinant, identity_matrix, matrix_mul};

/// Arbitrary-precision rational coefficient.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("`{0}` is not a unit of the Laurent ring")]
    NotAUnit(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("`{dividend}` is not divisible by `{divisor}`")]
    DivisionNotExact { dividend: String, divisor: String },
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
}

/// A primitive variable of the ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// `x^{1/2}`
    U,
    /// `y^{1/2}`
    V,
    /// `t^{1/2}`
    S,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::U, Var::V, Var::S];

    fn slot(self) -> usize {
        match self {
            Var::U => 0,
            Var::V => 1,
            Var::S => 2,
        }
    }

    /// Name of the user-facing variable whose square root this is.
    pub fn display_name(self) -> &'static str {
        match self {
            Var::U => "x",
            Var::V => "y",
            Var::S => "t",
        }
    }
}

/// Exponent vector over `(u, v, s)`. The derived order is the lexicographic
/// monomial order used for term storage and printing.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial([i32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn new(u: i32, v: i32, s: i32) -> Self {
        Monomial([u, v, s])
    }

    pub fn var(var: Var) -> Self {
        let mut e = [0; 3];
        e[var.slot()] = 1;
        Monomial(e)
    }

    pub fn exponent(&self, var: Var) -> i32 {
        self.0[var.slot()]
    }

    pub fn exponents(&self) -> [i32; 3] {
        self.0
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0, 0, 0]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([self.0[0] + other.0[0], self.0[1] + other.0[1], self.0[2] + other.0[2]])
    }

    pub fn inv(&self) -> Monomial {
        Monomial([-self.0[0], -self.0[1], -self.0[2]])
    }

    pub fn pow(&self, e: i32) -> Monomial {
        Monomial([self.0[0] * e, self.0[1] * e, self.0[2] * e])
    }

    /// `Some(self / other)` when every exponent of `other` is at most the
    /// matching exponent of `self` (divisibility in the polynomial ring).
    fn divides_into(&self, other: &Monomial) -> bool {
        (0..3).all(|i| other.0[i] <= self.0[i])
    }

    /// The integer `k` with `self = base^k`, if one exists. `base` must not be 1.
    pub fn log_base(&self, base: &Monomial) -> Option<i32> {
        let pivot = (0..3).find(|&i| base.0[i] != 0)?;
        if self.0[pivot] % base.0[pivot] != 0 {
            return None;
        }
        let k = self.0[pivot] / base.0[pivot];
        (base.pow(k) == *self).then_some(k)
    }
}

/// An exact Laurent polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Scalar {
    terms: BTreeMap<Monomial, Rational>,
}

/// Images of variables under a ring homomorphism; unlisted variables are fixed.
pub type Substitution = BTreeMap<Var, Scalar>;

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::constant(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn constant(c: Rational) -> Self {
        Scalar::term(c, Monomial::ONE)
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Scalar { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Scalar::term(Rational::one(), m)
    }

    pub fn var(var: Var) -> Self {
        Scalar::monomial(Monomial::var(var))
    }

    /// `x = u²`.
    pub fn x() -> Self {
        Scalar::monomial(Monomial::new(2, 0, 0))
    }

    /// `y = v²`.
    pub fn y() -> Self {
        Scalar::monomial(Monomial::new(0, 2, 0))
    }

    /// `t = s²`.
    pub fn t() -> Self {
        Scalar::monomial(Monomial::new(0, 0, 2))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient and monomial of a single-term scalar.
    pub fn as_unit(&self) -> Option<(&Rational, &Monomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, m))
        } else {
            None
        }
    }

    /// Units of the Laurent ring are exactly the nonzero single-term scalars.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    /// The rational value, if this scalar is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// True when only the variable `var` (or no variable) occurs.
    pub fn only_involves(&self, var: Var) -> bool {
        self.terms
            .keys()
            .all(|m| Var::ALL.iter().all(|&w| w == var || m.exponent(w) == 0))
    }

    fn insert_add(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect() }
    }

    /// Reciprocal of a unit.
    pub fn inv(&self) -> Result<Scalar, RingError> {
        match self.as_unit() {
            Some((c, m)) => Ok(Scalar::term(c.recip(), m.inv())),
            None => Err(RingError::NotAUnit(self.to_string())),
        }
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow(&self, e: i32) -> Result<Scalar, RingError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        if let Some((c, m)) = self.as_unit() {
            return Ok(Scalar::term(c.pow(e), m.pow(e)));
        }
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut e = e as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// A square root with positive leading coefficient, when this scalar is a
    /// unit whose coefficient is a rational square and whose exponents are even.
    pub fn sqrt_unit(&self) -> Option<Scalar> {
        let (c, m) = self.as_unit()?;
        let e = m.exponents();
        if e.iter().any(|k| k % 2 != 0) {
            return None;
        }
        let root = rational_sqrt(c)?;
        Some(Scalar::term(root, Monomial::new(e[0] / 2, e[1] / 2, e[2] / 2)))
    }

    /// Image under the ring homomorphism sending each listed variable to a unit.
    pub fn substitute(&self, assignment: &Substitution) -> Result<Scalar, RingError> {
        let mut images = Vec::with_capacity(3);
        for var in Var::ALL {
            match assignment.get(&var) {
                Some(img) => {
                    let (c, m) = img.as_unit().ok_or_else(|| RingError::NotAUnit(img.to_string()))?;
                    images.push((c.clone(), *m));
                }
                None => images.push((Rational::one(), Monomial::var(var))),
            }
        }
        let mut out = Scalar::zero();
        for (m, a) in &self.terms {
            let mut coef = a.clone();
            let mut mono = Monomial::ONE;
            for (slot, (c, img)) in images.iter().enumerate() {
                let e = m.0[slot];
                if e != 0 {
                    coef *= c.pow(e);
                    mono = mono.mul(&img.pow(e));
                }
            }
            out.insert_add(mono, coef);
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor`, failing unless `divisor` divides `self`
    /// in the Laurent ring.
    pub fn div_exact(&self, divisor: &Scalar) -> Result<Scalar, RingError> {
        if divisor.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Scalar::zero());
        }
        if divisor.is_unit() {
            return Ok(self * &divisor.inv()?);
        }
        // Shift both operands into the polynomial ring. The shifted divisor has
        // no monomial factor, so Laurent divisibility becomes polynomial
        // divisibility and ordinary lex division decides it.
        let shift_p = self.min_exponents();
        let shift_q = divisor.min_exponents();
        let q = divisor.mul_monomial(&shift_q.inv());
        let mut rem = self.mul_monomial(&shift_p.inv());
        let (lead_m, lead_c) = q.leading_term().expect("nonzero divisor");
        let mut quot = Scalar::zero();
        while let Some((m, c)) = rem.leading_term() {
            if !m.divides_into(&lead_m) {
                return Err(RingError::DivisionNotExact {
                    dividend: self.to_string(),
                    divisor: divisor.to_string(),
                });
            }
            let step = Scalar::term(&c / &lead_c, m.mul(&lead_m.inv()));
            rem -= &(&step * &q);
            quot += &step;
        }
        Ok(quot.mul_monomial(&shift_p.mul(&shift_q.inv())))
    }

    fn leading_term(&self) -> Option<(Monomial, Rational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c.clone()))
    }

    fn min_exponents(&self) -> Monomial {
        let mut e = [i32::MAX; 3];
        for m in self.terms.keys() {
            for (slot, k) in e.iter_mut().enumerate() {
                *k = (*k).min(m.0[slot]);
            }
        }
        if self.terms.is_empty() {
            Monomial::ONE
        } else {
            Monomial(e)
        }
    }
}

/// Rational square root with nonnegative sign, if it exists.
pub fn rational_sqrt(c: &Rational) -> Option<Rational> {
    if c.is_negative() {
        return None;
    }
    let n = c.numer().sqrt();
    let d = c.denom().sqrt();
    (&n * &n == *c.numer() && &d * &d == *c.denom()).then(|| Rational::new(n, d))
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(c: Rational) -> Self {
        Scalar::constant(c)
    }
}

impl<'a> AddAssign<&'a Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &'a Scalar) {
        for (m, c) in &rhs.terms {
            self.insert_add(*m, c.clone());
        }
    }
}

impl<'a> SubAssign<&'a Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &'a Scalar) {
        for (m, c) in &rhs.terms {
            self.insert_add(*m, -c);
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.insert_add(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl<'a> MulAssign<&'a Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &'a Scalar) {
        *self = &*self * rhs;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar { (&self).$f(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: &'a Scalar) -> Scalar { (&self).$f(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for s in iter {
            acc += s;
        }
        acc
    }
}

impl Sum<Scalar> for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for s in iter {
            acc += &s;
        }
        acc
    }
}
