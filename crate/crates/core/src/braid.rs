//! Braid words, Markov moves and the representation `ρ_R`.
//!
//! Text grammar: `<strands> ":" <letter>*`, letters whitespace-separated
//! signed integers; `+i` is `σ_i` and `-i` is `σ_i^{-1}`. Example: `3: 1 -2 1 -2`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::tensor::TensorOp;
use crate::ybop::YbOperator;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("bad generator {letter} at letter {position}: a braid on {strands} strands uses 1..={max}", max = strands.saturating_sub(1))]
    BadGenerator { position: usize, letter: i32, strands: usize },
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::Syntax { position: 0, message: "a braid needs at least one strand".into() });
        }
        for (position, &letter) in letters.iter().enumerate() {
            if letter == 0 || letter.unsigned_abs() as usize >= strands {
                return Err(BraidError::BadGenerator { position: position + 1, letter, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord::new(strands, Vec::new()).expect("positive strand count")
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exponent sum.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| i64::from(l.signum())).sum()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// Word concatenation `self · other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// `g · self · g^{-1}`.
    pub fn conjugate(&self, g: &BraidWord) -> Result<BraidWord, BraidError> {
        g.concat(self)?.concat(&g.inverse())
    }

    /// Appends `σ_n^{±1}` on a new strand `n + 1`.
    pub fn stabilize(&self, positive: bool) -> BraidWord {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        BraidWord { strands: self.strands + 1, letters }
    }

    /// The word with letter `position` (zero-based) removed.
    pub fn smoothed_at(&self, position: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.remove(position);
        BraidWord { strands: self.strands, letters }
    }

    /// The word with letter `position` (zero-based) inverted.
    pub fn switched_at(&self, position: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        letters[position] = -letters[position];
        BraidWord { strands: self.strands, letters }
    }

    /// Cancels adjacent `σ_i σ_i^{-1}` pairs.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    /// Permutation of strand positions: entry `p` is where the strand starting
    /// at position `p` ends.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            for pos in at.iter_mut() {
                if *pos == i {
                    *pos = i + 1;
                } else if *pos == i + 1 {
                    *pos = i;
                }
            }
        }
        at
    }

    /// `ρ_R(l_1 ⋯ l_k) = ρ(l_1) ∘ ⋯ ∘ ρ(l_k)` with
    /// `ρ(σ_i) = Id^{⊗i-1} ⊗ R ⊗ Id^{⊗n-i-1}`.
    pub fn represent(&self, r: &YbOperator) -> TensorOp {
        if self.letters.iter().any(|l| *l < 0) {
            self.represent_with(r.matrix(), r.inverse().matrix())
        } else {
            self.represent_with(r.matrix(), r.matrix())
        }
    }

    /// [`Self::represent`] with explicit images of `σ` and `σ^{-1}` on `V^{⊗2}`.
    pub fn represent_with(&self, forward: &TensorOp, backward: &TensorOp) -> TensorOp {
        let n = self.strands;
        let mut acc: Option<TensorOp> = None;
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            let local = if l > 0 { forward } else { backward };
            let factor = local.embed(i - 1, n - i - 1);
            acc = Some(match acc {
                None => factor,
                Some(a) => a.compose(&factor).expect("same shape"),
            });
        }
        acc.unwrap_or_else(|| TensorOp::identity(forward.local_dim(), n))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let colon = text.find(':').ok_or(BraidError::Syntax { position: text.len(), message: "expected `:`".into() })?;
        let head = text[..colon].trim();
        let strands: usize = head
            .parse()
            .map_err(|_| BraidError::Syntax { position: 0, message: format!("bad strand count `{head}`") })?;
        let mut letters = Vec::new();
        let mut rest = &text[colon + 1..];
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let len = rest[start..].find(char::is_whitespace).unwrap_or(rest.len() - start);
            let token = &rest[start..start + len];
            let position = text.len() - rest.len() + start;
            rest = &rest[start + len..];
            let letter: i32 = token
                .parse()
                .map_err(|_| BraidError::Syntax { position, message: format!("bad letter `{token}`") })?;
            letters.push(letter);
        }
        BraidWord::new(strands, letters)
    }
}

/// Closure fixtures: unknot, stabilised unknot, Hopf link, trefoil, figure-eight.
pub fn fixtures() -> Vec<(&'static str, BraidWord)> {
    [
        ("unknot", "1:"),
        ("unknot-stabilized", "2: 1"),
        ("hopf", "2: 1 1"),
        ("trefoil", "2: 1 1 1"),
        ("figure-eight", "3: 1 -2 1 -2"),
    ]
    .into_iter()
    .map(|(name, w)| (name, w.parse().expect("fixture parses")))
    .collect()
}
