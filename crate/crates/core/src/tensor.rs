//! Sparse exact endomorphisms of `V^{⊗n}`.
//!
//! A basis tensor `e_{i_1} ⊗ … ⊗ e_{i_n}` is encoded as the big-endian base-`d`
//! integer `i_1 d^{n-1} + … + i_n` (zero-based digits, first factor most
//! significant). An operator stores, for each input index, the sparse column
//! of its image.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::LinMap;
use crate::ring::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("operator shape mismatch: (d={left_d}, n={left_n}) vs (d={right_d}, n={right_n})")]
    DimMismatch { left_d: usize, left_n: usize, right_d: usize, right_n: usize },
    #[error("partial trace needs at least one tensor factor")]
    RankTooSmall,
    #[error("operator is not a scalar multiple of the identity: {0}")]
    NotScalarMultiple(EntryWitness),
}

/// One matrix element `f^{J}_{I}`, reported with one-based multi-indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryWitness {
    pub output: Vec<usize>,
    pub input: Vec<usize>,
    pub value: String,
}

impl fmt::Display for EntryWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "entry {:?} <- {:?} is `{}`", self.output, self.input, self.value)
    }
}

type Column = BTreeMap<usize, Scalar>;

#[derive(Clone, PartialEq, Eq)]
pub struct TensorOp {
    d: usize,
    n: usize,
    columns: Vec<Column>,
}

impl fmt::Debug for TensorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorOp(d={}, n={}, nnz={})", self.d, self.n, self.nnz())
    }
}

fn add_into(col: &mut Column, row: usize, value: Scalar) {
    if value.is_zero() {
        return;
    }
    match col.entry(row) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(value);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &value;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl TensorOp {
    pub fn zero(d: usize, n: usize) -> Self {
        TensorOp { d, n, columns: vec![Column::new(); d.pow(n as u32)] }
    }

    pub fn identity(d: usize, n: usize) -> Self {
        let mut op = TensorOp::zero(d, n);
        for (i, col) in op.columns.iter_mut().enumerate() {
            col.insert(i, Scalar::one());
        }
        op
    }

    /// The flip `v ⊗ w ↦ w ⊗ v` on `V^{⊗2}`.
    pub fn flip(d: usize) -> Self {
        let mut op = TensorOp::zero(d, 2);
        for a in 0..d {
            for b in 0..d {
                op.columns[a * d + b].insert(b * d + a, Scalar::one());
            }
        }
        op
    }

    /// Builds an operator from a dense matrix indexed `[output][input]`.
    pub fn from_dense(d: usize, n: usize, rows: &[Vec<Scalar>]) -> Self {
        let mut op = TensorOp::zero(d, n);
        for (j, row) in rows.iter().enumerate() {
            for (i, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    op.columns[i].insert(j, v.clone());
                }
            }
        }
        op
    }

    /// Builds an operator from `f(e_I) = Σ_J value · e_J`.
    pub fn from_fn(d: usize, n: usize, mut image: impl FnMut(usize) -> Vec<(usize, Scalar)>) -> Self {
        let mut op = TensorOp::zero(d, n);
        for (i, col) in op.columns.iter_mut().enumerate() {
            for (j, v) in image(i) {
                add_into(col, j, v);
            }
        }
        op
    }

    pub fn from_linmap(f: &LinMap) -> Self {
        assert_eq!(f.rows(), f.cols(), "endomorphism expected");
        TensorOp::from_dense(f.rows(), 1, &f.to_rows())
    }

    pub fn local_dim(&self) -> usize {
        self.d
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `d^n`.
    pub fn size(&self) -> usize {
        self.columns.len()
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(BTreeMap::len).sum()
    }

    pub fn column(&self, input: usize) -> impl Iterator<Item = (usize, &Scalar)> {
        self.columns[input].iter().map(|(j, v)| (*j, v))
    }

    /// Matrix element `f^{output}_{input}`.
    pub fn entry(&self, output: usize, input: usize) -> Scalar {
        self.columns[input].get(&output).cloned().unwrap_or_default()
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let size = self.size();
        let mut rows = vec![vec![Scalar::zero(); size]; size];
        for (i, col) in self.columns.iter().enumerate() {
            for (j, v) in col {
                rows[*j][i] = v.clone();
            }
        }
        rows
    }

    pub fn encode(&self, digits: &[usize]) -> usize {
        encode(self.d, digits)
    }

    pub fn decode(&self, index: usize) -> Vec<usize> {
        decode(self.d, self.n, index)
    }

    fn check_same_shape(&self, other: &TensorOp) -> Result<(), TensorError> {
        if self.d == other.d && self.n == other.n {
            Ok(())
        } else {
            Err(TensorError::DimMismatch { left_d: self.d, left_n: self.n, right_d: other.d, right_n: other.n })
        }
    }

    /// `Id^{⊗left} ⊗ self ⊗ Id^{⊗right}`.
    pub fn embed(&self, left: usize, right: usize) -> TensorOp {
        let d = self.d;
        let n = left + self.n + right;
        let low = d.pow(right as u32);
        let mid = self.size();
        let mut out = TensorOp::zero(d, n);
        for (idx, col) in out.columns.iter_mut().enumerate() {
            let lo = idx % low;
            let m = (idx / low) % mid;
            let hi = idx / (low * mid);
            for (j, v) in &self.columns[m] {
                col.insert((hi * mid + j) * low + lo, v.clone());
            }
        }
        out
    }

    /// `self ∘ other` (`other` applied first).
    pub fn compose(&self, other: &TensorOp) -> Result<TensorOp, TensorError> {
        self.check_same_shape(other)?;
        let mut out = TensorOp::zero(self.d, self.n);
        for (col_out, col_in) in out.columns.iter_mut().zip(&other.columns) {
            for (k, gv) in col_in {
                for (j, fv) in &self.columns[*k] {
                    add_into(col_out, *j, fv * gv);
                }
            }
        }
        Ok(out)
    }

    /// Tensor (Kronecker) product `self ⊗ other`.
    pub fn kron(&self, other: &TensorOp) -> Result<TensorOp, TensorError> {
        if self.d != other.d {
            return Err(TensorError::DimMismatch { left_d: self.d, left_n: self.n, right_d: other.d, right_n: other.n });
        }
        let inner = other.size();
        let mut out = TensorOp::zero(self.d, self.n + other.n);
        for (a, col_a) in self.columns.iter().enumerate() {
            for (b, col_b) in other.columns.iter().enumerate() {
                let col = &mut out.columns[a * inner + b];
                for (ja, va) in col_a {
                    for (jb, vb) in col_b {
                        col.insert(ja * inner + jb, va * vb);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self^{⊗k}`; the empty power is the identity on `V^{⊗0}`.
    pub fn kron_power(&self, k: usize) -> TensorOp {
        let mut acc = TensorOp::identity(self.d, 0);
        for _ in 0..k {
            acc = acc.kron(self).expect("same local dimension");
        }
        acc
    }

    pub fn add(&self, other: &TensorOp) -> Result<TensorOp, TensorError> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (col_out, col) in out.columns.iter_mut().zip(&other.columns) {
            for (j, v) in col {
                add_into(col_out, *j, v.clone());
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TensorOp) -> Result<TensorOp, TensorError> {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> TensorOp {
        let mut out = TensorOp::zero(self.d, self.n);
        if c.is_zero() {
            return out;
        }
        for (col_out, col) in out.columns.iter_mut().zip(&self.columns) {
            for (j, v) in col {
                col_out.insert(*j, v * c);
            }
        }
        out
    }

    /// Operator trace over the last tensor factor:
    /// `Sp_n(f)^{J}_{I} = Σ_l f^{J l}_{I l}`.
    pub fn partial_trace_last(&self) -> Result<TensorOp, TensorError> {
        if self.n == 0 {
            return Err(TensorError::RankTooSmall);
        }
        let d = self.d;
        let mut out = TensorOp::zero(d, self.n - 1);
        for (i_out, col_out) in out.columns.iter_mut().enumerate() {
            for l in 0..d {
                for (j, v) in &self.columns[i_out * d + l] {
                    if j % d == l {
                        add_into(col_out, j / d, v.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// `Sp_n^μ(f) = Sp_n(f ∘ (Id^{⊗n-1} ⊗ μ))`.
    pub fn twisted_partial_trace_last(&self, mu: &TensorOp) -> Result<TensorOp, TensorError> {
        if self.n == 0 {
            return Err(TensorError::RankTooSmall);
        }
        self.compose(&mu.embed(self.n - 1, 0))?.partial_trace_last()
    }

    pub fn full_trace(&self) -> Scalar {
        let mut tr = Scalar::zero();
        for (i, col) in self.columns.iter().enumerate() {
            if let Some(v) = col.get(&i) {
                tr += v;
            }
        }
        tr
    }

    /// The `λ` with `self = λ·Id`.
    pub fn scalar_part(&self) -> Result<Scalar, TensorError> {
        let lambda = self.columns.first().and_then(|c| c.get(&0)).cloned().unwrap_or_default();
        for (i, col) in self.columns.iter().enumerate() {
            if col.get(&i).cloned().unwrap_or_default() != lambda {
                return Err(self.witness(i, i));
            }
            if let Some((j, _)) = col.iter().find(|(j, _)| **j != i) {
                return Err(self.witness(*j, i));
            }
        }
        Ok(lambda)
    }

    /// First entry where `self` and `other` differ.
    pub fn first_difference(&self, other: &TensorOp) -> Option<EntryWitness> {
        if self.d != other.d || self.n != other.n {
            return Some(EntryWitness { output: vec![], input: vec![], value: "shape mismatch".into() });
        }
        for (i, (a, b)) in self.columns.iter().zip(&other.columns).enumerate() {
            if a != b {
                let j = a
                    .keys()
                    .chain(b.keys())
                    .copied()
                    .find(|j| a.get(j) != b.get(j))
                    .expect("columns differ");
                let diff = &a.get(&j).cloned().unwrap_or_default() - &b.get(&j).cloned().unwrap_or_default();
                return Some(EntryWitness {
                    output: one_based(&self.decode(j)),
                    input: one_based(&self.decode(i)),
                    value: diff.to_string(),
                });
            }
        }
        None
    }

    fn witness(&self, output: usize, input: usize) -> TensorError {
        TensorError::NotScalarMultiple(EntryWitness {
            output: one_based(&self.decode(output)),
            input: one_based(&self.decode(input)),
            value: self.entry(output, input).to_string(),
        })
    }
}

fn one_based(digits: &[usize]) -> Vec<usize> {
    digits.iter().map(|k| k + 1).collect()
}

pub fn encode(d: usize, digits: &[usize]) -> usize {
    digits.iter().fold(0, |acc, k| acc * d + k)
}

pub fn decode(d: usize, n: usize, mut index: usize) -> Vec<usize> {
    let mut digits = vec![0; n];
    for slot in digits.iter_mut().rev() {
        *slot = index % d;
        index /= d;
    }
    digits
}
