//! The framed braid group `RB_n = Z^n ⋊ B_n`, with every element kept as
//! `t_1^{λ_1} ... t_n^{λ_n} β`.

use std::fmt;

use serde::Serialize;

use crate::error::{BraidError, Result};
use crate::garside::{self, GarsideNormalForm};
use crate::word::{BraidWord, Letter, LetterKind, Permutation};

/// `t_1^{lambda[0]} ... t_n^{lambda[n-1]} · beta`.
///
/// `lambda[j - 1]` is the framing carried by the ribbon that starts at top
/// position `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FramedBraid {
    lambda: Vec<i64>,
    beta: BraidWord,
}

/// Hashable canonical form of a framed braid: framing vector plus the Garside
/// normal form of the braid part.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FramedNormalForm {
    pub lambda: Vec<i64>,
    pub garside: GarsideNormalForm,
}

impl FramedBraid {
    pub fn identity(n: usize) -> Self {
        FramedBraid {
            lambda: vec![0; n],
            beta: BraidWord::identity(n),
        }
    }

    pub fn new(lambda: Vec<i64>, beta: BraidWord) -> Result<Self> {
        if lambda.len() != beta.strands() {
            return Err(BraidError::LengthMismatch {
                expected: beta.strands(),
                got: lambda.len(),
            });
        }
        if let Some(l) = beta.letters().iter().find(|l| l.kind == LetterKind::Tau) {
            return Err(BraidError::FramingLetter { index: l.index });
        }
        Ok(FramedBraid { lambda, beta })
    }

    /// Zero framing on a classical braid.
    pub fn from_braid(beta: BraidWord) -> Result<Self> {
        Self::new(vec![0; beta.strands()], beta)
    }

    pub fn framing(lambda: Vec<i64>) -> Self {
        let n = lambda.len();
        FramedBraid {
            lambda,
            beta: BraidWord::identity(n),
        }
    }

    /// Pushes every `t_j` to the top of the word along its ribbon, using
    /// `σ_i t_j = t_{s_i(j)} σ_i`.
    pub fn normalize(word: &BraidWord) -> FramedBraid {
        let n = word.strands();
        let mut lambda = vec![0; n];
        let mut beta = BraidWord::identity(n);
        // pos_to_strand[p] = top position of the ribbon currently at p
        let mut pos_to_strand: Vec<usize> = (0..n).collect();
        for &l in word.letters() {
            match l.kind {
                LetterKind::Tau => lambda[pos_to_strand[l.index - 1]] += l.exponent,
                LetterKind::Sigma => {
                    // one unit crossing at a time so parity is never guessed
                    for _ in 0..l.exponent.unsigned_abs() {
                        pos_to_strand.swap(l.index - 1, l.index);
                    }
                    beta.push(l).expect("letter already validated");
                }
            }
        }
        FramedBraid { lambda, beta }
    }

    pub fn strands(&self) -> usize {
        self.beta.strands()
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    pub fn beta(&self) -> &BraidWord {
        &self.beta
    }

    /// The word `t_1^{λ_1} ... t_n^{λ_n} β`.
    pub fn spell(&self) -> BraidWord {
        let n = self.strands();
        let prefix = self
            .lambda
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(j, &e)| Letter::tau(j + 1, e));
        let t = BraidWord::new(n, prefix).expect("tau indices in range");
        t.concat(&self.beta).expect("same strand count")
    }

    pub fn permutation(&self) -> Permutation {
        self.beta.permutation()
    }

    /// Total exponent of the spelled word.
    pub fn exponent_sum(&self) -> i64 {
        self.lambda.iter().sum::<i64>() + self.beta.exponent_sum()
    }

    pub fn multiply(&self, other: &FramedBraid) -> Result<FramedBraid> {
        if self.strands() != other.strands() {
            return Err(BraidError::StrandMismatch {
                left: self.strands(),
                right: other.strands(),
            });
        }
        Ok(FramedBraid::normalize(
            &self.spell().concat(&other.spell())?,
        ))
    }

    /// Product via the semidirect law: `λ = λ_a + β_a · λ_b`, `β = β_a β_b`.
    ///
    /// Agrees with [`FramedBraid::multiply`]; the two are kept apart so each
    /// can be checked against the other.
    pub fn multiply_semidirect(&self, other: &FramedBraid) -> Result<FramedBraid> {
        if self.strands() != other.strands() {
            return Err(BraidError::StrandMismatch {
                left: self.strands(),
                right: other.strands(),
            });
        }
        let p = self.permutation();
        let lambda = (1..=self.strands())
            .map(|j| self.lambda[j - 1] + other.lambda[p.image(j) - 1])
            .collect();
        Ok(FramedBraid {
            lambda,
            beta: self.beta.concat(&other.beta)?,
        })
    }

    pub fn inverse(&self) -> FramedBraid {
        FramedBraid::normalize(&self.spell().invert())
    }

    pub fn pow(&self, k: i64) -> FramedBraid {
        FramedBraid::normalize(&self.spell().pow(k))
    }

    pub fn normal_form(&self) -> FramedNormalForm {
        FramedNormalForm {
            lambda: self.lambda.clone(),
            garside: garside::to_normal_form(&self.beta).expect("beta carries no tau letters"),
        }
    }

    pub fn framed_equal(&self, other: &FramedBraid) -> Result<bool> {
        if self.strands() != other.strands() {
            return Err(BraidError::StrandMismatch {
                left: self.strands(),
                right: other.strands(),
            });
        }
        Ok(self.lambda == other.lambda && garside::are_equal(&self.beta, &other.beta)?)
    }

    pub fn is_identity(&self) -> bool {
        self.lambda.iter().all(|&l| l == 0) && self.normal_form().garside.is_identity()
    }

    /// `π(t_i) = 1`: forget the framing.
    pub fn project(&self) -> BraidWord {
        self.beta.clone()
    }
}

impl fmt::Display for FramedBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spell())
    }
}
