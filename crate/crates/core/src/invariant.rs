//! Enhancements of `R_{x,y}`, the Markov trace `T_S`, the modified trace
//! `T_{S,1}`, and recovery of the Alexander polynomial from `T_{S,1}`.
//!
//! For an enhancement `(R, μ, α, β)` with `c·μ` an automorphism,
//!
//! ```text
//! β · T_{S,1}(b) = Δ(b̂) evaluated at s = c⁻¹β⁻¹
//! ```
//!
//! and [`alexander`] inverts that substitution.

use thiserror::Error;

use crate::algebra::{basis_vector, Algebra, AlgebraError, LinMap};
use crate::braid::{BraidError, BraidWord};
use crate::ring::{Monomial, Rational, RingError, Scalar, Var};
use crate::tensor::{EntryWitness, TensorError, TensorOp};
use crate::ybop::{YbCase, YbError, YbOperator};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InvariantError {
    #[error("scalar-case operators R_{{0,0,z}} admit no enhancement")]
    ScalarCase,
    #[error("only operators with z = x are supported (got the y = z family)")]
    UnsupportedCase,
    #[error("mu is not invertible")]
    NotInvertible,
    #[error("no scalar multiple of mu is an algebra automorphism")]
    NotScalarAutomorphism,
    #[error("{0} is not a unit")]
    NotAUnit(&'static str),
    #[error("E1 fails: R does not commute with mu⊗mu at {0}")]
    E1Fails(EntryWitness),
    #[error("E2+ fails: Sp(R∘(Id⊗mu)) differs from alpha·beta·Id at {0}")]
    E2PlusFails(EntryWitness),
    #[error("E2- fails: Sp(R^-1∘(Id⊗mu)) differs from alpha^-1·beta·Id at {0}")]
    E2MinusFails(EntryWitness),
    #[error("normalization condition fails: {0}")]
    NormalizationFails(String),
    #[error("trace condition fails: Tr(b ↦ e_{basis}·mu(b)) = {value}")]
    TraceConditionFails { basis: usize, value: String },
    #[error("no monomial square root of {0}")]
    SqrtUnavailable(String),
    #[error("trace chain did not end in a scalar multiple of Id: {0}")]
    NotScalarMultiple(EntryWitness),
    #[error("{0} is not a power of the substituted variable")]
    NotInImage(String),
    #[error("substitution s ↦ {0} is not injective")]
    NotInjective(String),
    #[error("skein relation fails: plus = {plus}, minus = {minus}, smoothed = {smoothed}")]
    SkeinFails { plus: String, minus: String, smoothed: String },
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Yb(#[from] YbError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Tensor(TensorError),
}

impl From<TensorError> for InvariantError {
    fn from(e: TensorError) -> Self {
        match e {
            TensorError::NotScalarMultiple(w) => InvariantError::NotScalarMultiple(w),
            other => InvariantError::Tensor(other),
        }
    }
}

/// A verified enhancement `(R, μ, α, β)` together with its scaling constant `c`.
#[derive(Debug, Clone)]
pub struct Enhancement {
    r: YbOperator,
    forward: TensorOp,
    backward: TensorOp,
    mu: LinMap,
    mu_op: TensorOp,
    alpha: Scalar,
    beta: Scalar,
    c: Scalar,
}

/// Checks `(E1)`, `(E2±)`, the normalization `x = cαβ`, `y⁻¹ = cα⁻¹β` and the
/// trace condition, returning the enhancement on success.
pub fn verify_enhancement(r: &YbOperator, mu: &LinMap, alpha: &Scalar, beta: &Scalar) -> Result<Enhancement, InvariantError> {
    match r.case() {
        YbCase::XZ => {}
        YbCase::YZ => return Err(InvariantError::UnsupportedCase),
        YbCase::Scalar => return Err(InvariantError::ScalarCase),
    }
    let alg = r.algebra();
    if !mu.is_invertible()? {
        return Err(InvariantError::NotInvertible);
    }
    let alpha_inv = alpha.inv().map_err(|_| InvariantError::NotAUnit("alpha"))?;
    beta.inv().map_err(|_| InvariantError::NotAUnit("beta"))?;

    let d = r.dim();
    let inv = r.inverse();
    let mu_op = TensorOp::from_linmap(mu);
    let mu2 = mu_op.kron_power(2);
    let lhs = r.matrix().compose(&mu2)?;
    let rhs = mu2.compose(r.matrix())?;
    if let Some(w) = lhs.first_difference(&rhs) {
        return Err(InvariantError::E1Fails(w));
    }

    let twist = mu_op.embed(1, 0);
    let plus = r.matrix().compose(&twist)?.partial_trace_last()?;
    if let Some(w) = plus.first_difference(&TensorOp::identity(d, 1).scale(&(alpha * beta))) {
        return Err(InvariantError::E2PlusFails(w));
    }
    let minus = inv.matrix().compose(&twist)?.partial_trace_last()?;
    if let Some(w) = minus.first_difference(&TensorOp::identity(d, 1).scale(&(&alpha_inv * beta))) {
        return Err(InvariantError::E2MinusFails(w));
    }

    let c = alg.scalar_multiple_automorphism(mu)?.ok_or(InvariantError::NotScalarAutomorphism)?;
    let cb = &c * beta;
    if r.x() != &(&cb * alpha) {
        return Err(InvariantError::NormalizationFails(format!("x = {} but c·alpha·beta = {}", r.x(), &cb * alpha)));
    }
    let y_inv = r.y().inv()?;
    if y_inv != &cb * &alpha_inv {
        return Err(InvariantError::NormalizationFails(format!(
            "y^-1 = {y_inv} but c·alpha^-1·beta = {}",
            &cb * &alpha_inv
        )));
    }
    check_trace_condition(alg, mu)?;

    Ok(Enhancement {
        forward: r.matrix().clone(),
        backward: inv.matrix().clone(),
        r: r.clone(),
        mu: mu.clone(),
        mu_op,
        alpha: alpha.clone(),
        beta: beta.clone(),
        c,
    })
}

fn check_trace_condition(alg: &Algebra, mu: &LinMap) -> Result<(), InvariantError> {
    for i in 0..alg.dim() {
        let value = alg.left_mul_trace(&basis_vector(alg.dim(), i), mu)?;
        if !value.is_zero() {
            return Err(InvariantError::TraceConditionFails { basis: i + 1, value: value.to_string() });
        }
    }
    Ok(())
}

/// Solved parameters `(α, β, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnhancementParams {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub c: Scalar,
}

/// Solves the normalization for `(α, β)` given `μ` and `(x, y)`.
///
/// `α` is the square root of `xy` with positive coefficient and
/// `β = x/(cα)`. Returns `None` when no multiple of `μ` is an automorphism or
/// the trace condition fails.
pub fn solve_enhancement(alg: &Algebra, mu: &LinMap, x: &Scalar, y: &Scalar) -> Result<Option<EnhancementParams>, InvariantError> {
    let xy = x * y;
    let alpha = xy.sqrt_unit().ok_or_else(|| InvariantError::SqrtUnavailable(xy.to_string()))?;
    solve_enhancement_with_alpha(alg, mu, x, y, &alpha)
}

/// [`solve_enhancement`] with a caller-supplied `α`, which must satisfy `α² = xy`.
pub fn solve_enhancement_with_alpha(
    alg: &Algebra,
    mu: &LinMap,
    x: &Scalar,
    y: &Scalar,
    alpha: &Scalar,
) -> Result<Option<EnhancementParams>, InvariantError> {
    if alpha * alpha != x * y {
        return Err(InvariantError::NormalizationFails(format!("alpha^2 = {} but x·y = {}", alpha * alpha, x * y)));
    }
    let c = match alg.scalar_multiple_automorphism(mu) {
        Ok(Some(c)) => c,
        Ok(None) | Err(AlgebraError::Ring(RingError::NotAUnit(_))) => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    if check_trace_condition(alg, mu).is_err() {
        return Ok(None);
    }
    let beta = x * &(&c * alpha).inv()?;
    Ok(Some(EnhancementParams { alpha: alpha.clone(), beta, c }))
}

impl Enhancement {
    /// Solves for `(α, β)` and verifies the result.
    pub fn solve(r: &YbOperator, mu: &LinMap) -> Result<Option<Enhancement>, InvariantError> {
        match solve_enhancement(r.algebra(), mu, r.x(), r.y())? {
            None => Ok(None),
            Some(p) => verify_enhancement(r, mu, &p.alpha, &p.beta).map(Some),
        }
    }

    pub fn r(&self) -> &YbOperator {
        &self.r
    }

    pub fn mu(&self) -> &LinMap {
        &self.mu
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    pub fn beta(&self) -> &Scalar {
        &self.beta
    }

    pub fn c(&self) -> &Scalar {
        &self.c
    }

    /// The image `c⁻¹β⁻¹` of `s = t^{1/2}`.
    pub fn s_image(&self) -> Scalar {
        (&self.c * &self.beta).inv().expect("c and beta are units")
    }

    /// `(R, λμ, α, λβ)`, again an enhancement for any unit `λ`.
    pub fn rescaled(&self, lambda: &Scalar) -> Result<Enhancement, InvariantError> {
        verify_enhancement(&self.r, &self.mu.scaled(lambda), &self.alpha, &(lambda * &self.beta))
    }

    /// Replaces `R` and `R⁻¹` by their negatives. Only for fault-injection tests.
    #[doc(hidden)]
    pub fn corrupted(&self) -> Enhancement {
        let minus_one = Scalar::from_int(-1);
        let mut e = self.clone();
        e.forward = e.forward.scale(&minus_one);
        e.backward = e.backward.scale(&minus_one);
        e
    }

    pub fn represent(&self, b: &BraidWord) -> TensorOp {
        b.represent_with(&self.forward, &self.backward)
    }

    fn normalization(&self, b: &BraidWord) -> Scalar {
        let w = i32::try_from(b.writhe()).expect("writhe fits in i32");
        let n = i32::try_from(b.strands()).expect("strand count fits in i32");
        let a = self.alpha.pow(-w).expect("alpha is a unit");
        &a * &self.beta.pow(-n).expect("beta is a unit")
    }
}

/// `T_S(b) = α^{-w(b)} β^{-n} · Trace(ρ_R(b) ∘ μ^{⊗n})`.
pub fn markov_trace(s: &Enhancement, b: &BraidWord) -> Scalar {
    let rho = s.represent(b);
    let twisted = rho.compose(&s.mu_op.kron_power(b.strands())).expect("same shape");
    &s.normalization(b) * &twisted.full_trace()
}

/// `T_{S,1}(b) = α^{-w(b)} β^{-n} · Sp_2 ⋯ Sp_n(ρ_R(b) ∘ (Id ⊗ μ^{⊗n-1}))`.
pub fn modified_markov_trace(s: &Enhancement, b: &BraidWord) -> Result<Scalar, InvariantError> {
    let n = b.strands();
    let mut f = s.represent(b);
    if n > 1 {
        f = f.compose(&s.mu_op.kron_power(n - 1).embed(1, 0))?;
        for _ in 1..n {
            f = f.partial_trace_last()?;
        }
    }
    Ok(&s.normalization(b) * &f.scalar_part()?)
}

/// Same value as [`modified_markov_trace`], taking `Sp_k^μ` one factor at a time.
pub fn modified_markov_trace_twisted(s: &Enhancement, b: &BraidWord) -> Result<Scalar, InvariantError> {
    let mut f = s.represent(b);
    for _ in 1..b.strands() {
        f = f.twisted_partial_trace_last(&s.mu_op)?;
    }
    Ok(&s.normalization(b) * &f.scalar_part()?)
}

/// Rewrites `p` as a polynomial in `s` under the inverse of `s ↦ g`.
pub fn pull_back(p: &Scalar, g: &Scalar) -> Result<Scalar, InvariantError> {
    let (kappa, m) = g.as_unit().ok_or_else(|| InvariantError::NotInjective(g.to_string()))?;
    if m.is_one() {
        return Err(InvariantError::NotInjective(g.to_string()));
    }
    let kappa = Scalar::constant(kappa.clone());
    let mut out = Scalar::zero();
    for (mono, coef) in p.terms() {
        let k = mono.log_base(m).ok_or_else(|| InvariantError::NotInImage(Scalar::monomial(*mono).to_string()))?;
        let scale = kappa.pow(-k)?;
        let c: Rational = coef * scale.as_constant().expect("constant");
        out += &Scalar::term(c, Monomial::var(Var::S).pow(k));
    }
    Ok(out)
}

/// The Conway-normalized Alexander polynomial of the closure of `b`, in `s = t^{1/2}`.
pub fn alexander(s: &Enhancement, b: &BraidWord) -> Result<Scalar, InvariantError> {
    let x = modified_markov_trace(s, b)?;
    pull_back(&(s.beta() * &x), &s.s_image())
}

/// Checks `X(P σ_i Q) − X(P σ_i⁻¹ Q) = (c⁻¹β⁻¹ − cβ) · X(P Q)`.
pub fn skein_check(s: &Enhancement, prefix: &BraidWord, i: usize, suffix: &BraidWord) -> Result<(), InvariantError> {
    let n = prefix.strands();
    let g = i32::try_from(i).unwrap_or(0);
    let plus_mid = BraidWord::new(n, vec![g])?;
    let minus_mid = BraidWord::new(n, vec![-g])?;
    let plus = modified_markov_trace(s, &prefix.concat(&plus_mid)?.concat(suffix)?)?;
    let minus = modified_markov_trace(s, &prefix.concat(&minus_mid)?.concat(suffix)?)?;
    let smoothed = modified_markov_trace(s, &prefix.concat(suffix)?)?;
    let coef = &s.s_image() - &(s.c() * s.beta());
    if &plus - &minus == &coef * &smoothed {
        Ok(())
    } else {
        Err(InvariantError::SkeinFails { plus: plus.to_string(), minus: minus.to_string(), smoothed: smoothed.to_string() })
    }
}
