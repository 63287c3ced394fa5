use std::fs;

use ybknot_core::algebra::{basis_vector, catalog, AlgebraFile};
use ybknot_core::invariant::{solve_enhancement_with_alpha, verify_enhancement, Enhancement, InvariantError};
use ybknot_core::{Algebra, AlgebraError, BraidWord, LinMap, Scalar, YbOperator};

use crate::{Failure, GlobalOpts};

pub const EXIT_INPUT: u8 = 2;
pub const EXIT_ENHANCEMENT: u8 = 3;
pub const EXIT_INTERNAL: u8 = 4;

pub struct Setup {
    pub algebra_name: String,
    pub algebra: Algebra,
    pub mu: LinMap,
    pub x: Scalar,
    pub y: Scalar,
}

fn algebra_failure(e: AlgebraError) -> Failure {
    match e {
        AlgebraError::File(_) | AlgebraError::Ring(_) | AlgebraError::DimMismatch { .. } => {
            Failure::new(EXIT_INPUT, format!("algebra file: {e}"))
        }
        _ => Failure::new(EXIT_ENHANCEMENT, format!("algebra: {e}")),
    }
}

pub fn load_algebra(source: &str) -> Result<(String, Algebra, LinMap), Failure> {
    if let Some(name) = source.strip_prefix("builtin:") {
        let named = catalog::by_name(name)
            .ok_or_else(|| Failure::new(EXIT_INPUT, format!("unknown built-in algebra `{name}` (dual, split, involutive)")))?;
        return Ok((named.name.to_string(), named.algebra, named.mu));
    }
    let text = fs::read_to_string(source).map_err(|e| Failure::new(EXIT_INPUT, format!("cannot read {source}: {e}")))?;
    let file = AlgebraFile::from_json(&text).map_err(algebra_failure)?;
    let loaded = file.load().map_err(algebra_failure)?;
    let mu = loaded
        .map("mu")
        .cloned()
        .ok_or_else(|| Failure::new(EXIT_INPUT, format!("{source} has no `mu` map")))?;
    Ok((source.to_string(), loaded.algebra, mu))
}

pub fn parse_braid(text: &str) -> Result<BraidWord, Failure> {
    text.parse().map_err(|e| Failure::new(EXIT_INPUT, format!("braid `{text}`: {e}")))
}

fn parse_scalar(what: &str, text: &str) -> Result<Scalar, Failure> {
    text.parse().map_err(|e| Failure::new(EXIT_INPUT, format!("{what} `{text}`: {e}")))
}

/// `(x, y)` after applying `--specialize`.
fn parameters(opts: &GlobalOpts) -> Result<(Scalar, Scalar), Failure> {
    let (mut x, mut y) = (Scalar::x(), Scalar::y());
    for item in &opts.specialize {
        let (var, value) = item
            .split_once('=')
            .ok_or_else(|| Failure::new(EXIT_INPUT, format!("--specialize expects VAR=RAT, got `{item}`")))?;
        let value = parse_scalar("--specialize value", value.trim())?;
        if value.as_constant().is_none() {
            return Err(Failure::new(EXIT_INPUT, format!("--specialize value for {var} must be a rational")));
        }
        match var.trim() {
            "x" => x = value,
            "y" => y = value,
            other => return Err(Failure::new(EXIT_INPUT, format!("--specialize: unknown variable `{other}`"))),
        }
    }
    Ok((x, y))
}

fn square_root(name: &str, flag: &str, value: &Scalar, given: Option<&str>) -> Result<Scalar, Failure> {
    match given {
        Some(text) => {
            let root = parse_scalar(flag, text)?;
            if &(&root * &root) != value {
                return Err(Failure::new(EXIT_INPUT, format!("{flag} {root}: its square is not {name} = {value}")));
            }
            Ok(root)
        }
        None => value.sqrt_unit().ok_or_else(|| {
            Failure::new(EXIT_INPUT, format!("{name} = {value} has no rational monomial square root; pass {flag}"))
        }),
    }
}

pub fn setup(opts: &GlobalOpts) -> Result<Setup, Failure> {
    let (algebra_name, algebra, mu) = load_algebra(&opts.algebra)?;
    let (x, y) = parameters(opts)?;
    Ok(Setup { algebra_name, algebra, mu, x, y })
}

impl Setup {
    pub fn r(&self) -> Result<YbOperator, Failure> {
        YbOperator::r_xy(&self.algebra, self.x.clone(), self.y.clone())
            .map_err(|e| Failure::new(EXIT_ENHANCEMENT, format!("R_{{x,y}}: {e}")))
    }

    pub fn alpha(&self, opts: &GlobalOpts) -> Result<Scalar, Failure> {
        let sx = square_root("x", "--sqrt-x", &self.x, opts.sqrt_x.as_deref())?;
        let sy = square_root("y", "--sqrt-y", &self.y, opts.sqrt_y.as_deref())?;
        Ok(&sx * &sy)
    }

    pub fn enhancement(&self, opts: &GlobalOpts) -> Result<Enhancement, Failure> {
        let r = self.r()?;
        let alpha = self.alpha(opts)?;
        let fail = |e: InvariantError| Failure::new(EXIT_ENHANCEMENT, format!("enhancement: {e}"));
        let params = solve_enhancement_with_alpha(&self.algebra, &self.mu, &self.x, &self.y, &alpha)
            .map_err(fail)?
            .ok_or_else(|| Failure::new(EXIT_ENHANCEMENT, format!("enhancement: {}", self.why_unsolvable())))?;
        verify_enhancement(&r, &self.mu, &params.alpha, &params.beta).map_err(fail)
    }

    fn why_unsolvable(&self) -> String {
        match self.algebra.scalar_multiple_automorphism(&self.mu) {
            Ok(None) | Err(_) => format!("no scalar multiple of mu is an automorphism of {}", self.algebra_name),
            Ok(Some(_)) => {
                let d = self.algebra.dim();
                for i in 0..d {
                    let tr = self.algebra.left_mul_trace(&basis_vector(d, i), &self.mu);
                    if let Some(tr) = tr.ok().filter(|t| !t.is_zero()) {
                        return format!("trace condition fails: Tr(b -> e_{}·mu(b)) = {tr}", i + 1);
                    }
                }
                "no solution".into()
            }
        }
    }
}
