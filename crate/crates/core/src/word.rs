//! Freely reduced words in the Artin generators `σ_i` and the framing
//! generators `t_j`, and the permutations they induce.
//!
//! Indices are 1-based. A word is read left to right as a braid diagram read
//! top to bottom. Strands are oriented downward; `σ_i` with a positive
//! exponent is a positive crossing, so the sign of every unit crossing is the
//! sign of its letter. In a positive `σ_i` the strand moving from position
//! `i + 1` to position `i` passes over the other one (see [`Crossing::over`]).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LetterKind {
    Sigma,
    Tau,
}

impl fmt::Display for LetterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LetterKind::Sigma => f.write_str("sigma"),
            LetterKind::Tau => f.write_str("tau"),
        }
    }
}

/// A run `σ_index^exponent` or `t_index^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub kind: LetterKind,
    pub index: usize,
    pub exponent: i64,
}

impl Letter {
    pub fn sigma(index: usize, exponent: i64) -> Self {
        Letter {
            kind: LetterKind::Sigma,
            index,
            exponent,
        }
    }

    pub fn tau(index: usize, exponent: i64) -> Self {
        Letter {
            kind: LetterKind::Tau,
            index,
            exponent,
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            exponent: -self.exponent,
            ..self
        }
    }

    pub fn is_sigma(&self) -> bool {
        self.kind == LetterKind::Sigma
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.exponent == 0 {
            return Err(BraidError::ZeroExponent);
        }
        let max = match self.kind {
            LetterKind::Sigma => n - 1,
            LetterKind::Tau => n,
        };
        if self.index == 0 || self.index > max {
            return Err(BraidError::IndexOutOfRange {
                kind: self.kind,
                index: self.index,
                n,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = match self.kind {
            LetterKind::Sigma => 's',
            LetterKind::Tau => 't',
        };
        if self.exponent == 1 {
            write!(f, "{g}{}", self.index)
        } else {
            write!(f, "{g}{}^{}", self.index, self.exponent)
        }
    }
}

/// A freely reduced word over `σ_1..σ_{n-1}` and `t_1..t_n`.
///
/// Adjacent letters of the same kind and index are always merged and runs
/// that cancel are dropped, so two words that differ only by free reduction
/// compare equal. Equality in the braid group is a different question and is
/// answered by [`crate::garside`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "strand count must be at least 1");
        BraidWord {
            n,
            letters: Vec::new(),
        }
    }

    pub fn new(n: usize, letters: impl IntoIterator<Item = Letter>) -> Result<Self> {
        if n == 0 {
            return Err(BraidError::EmptyStrandCount);
        }
        let mut w = BraidWord {
            n,
            letters: Vec::new(),
        };
        for l in letters {
            l.check(n)?;
            w.push_unchecked(l);
        }
        Ok(w)
    }

    /// Word built from `(index, exponent)` pairs of Artin generators.
    pub fn from_sigmas(n: usize, runs: &[(usize, i64)]) -> Result<Self> {
        Self::new(n, runs.iter().map(|&(i, e)| Letter::sigma(i, e)))
    }

    pub fn sigma(n: usize, index: usize, exponent: i64) -> Result<Self> {
        Self::new(n, [Letter::sigma(index, exponent)])
    }

    pub fn tau(n: usize, index: usize, exponent: i64) -> Result<Self> {
        Self::new(n, [Letter::tau(index, exponent)])
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn has_tau(&self) -> bool {
        self.letters.iter().any(|l| l.kind == LetterKind::Tau)
    }

    /// Number of unit letters, i.e. the sum of `|exponent|`.
    pub fn unit_len(&self) -> usize {
        self.letters
            .iter()
            .map(|l| l.exponent.unsigned_abs() as usize)
            .sum()
    }

    /// Appends a letter, merging with the last one where possible.
    pub fn push(&mut self, letter: Letter) -> Result<()> {
        letter.check(self.n)?;
        self.push_unchecked(letter);
        Ok(())
    }

    fn push_unchecked(&mut self, letter: Letter) {
        if letter.exponent == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.kind == letter.kind && last.index == letter.index {
                last.exponent += letter.exponent;
                if last.exponent == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push(letter);
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return Err(BraidError::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = self.clone();
        for &l in &other.letters {
            out.push_unchecked(l);
        }
        Ok(out)
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `self^k` as a word; negative powers use the inverse.
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut out = BraidWord::identity(self.n);
        for _ in 0..k.unsigned_abs() {
            for &l in &base.letters {
                out.push_unchecked(l);
            }
        }
        out
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.exponent).sum()
    }

    pub fn permutation(&self) -> Permutation {
        let mut pos_to_strand: Vec<usize> = (1..=self.n).collect();
        for l in self.letters.iter().filter(|l| l.is_sigma()) {
            if l.exponent % 2 != 0 {
                pos_to_strand.swap(l.index - 1, l.index);
            }
        }
        let mut images = vec![0; self.n];
        for (pos, &strand) in pos_to_strand.iter().enumerate() {
            images[strand - 1] = pos + 1;
        }
        Permutation { images }
    }

    /// The same letters read in a braid group with `n + m` strands.
    pub fn widen(&self, m: usize) -> BraidWord {
        BraidWord {
            n: self.n + m,
            letters: self.letters.clone(),
        }
    }

    /// Same letters on a different strand count; fails if an index no longer fits.
    pub fn with_strands(&self, n: usize) -> Result<BraidWord> {
        BraidWord::new(n, self.letters.iter().copied())
    }

    /// Word with every letter index moved by `offset`, on `n` strands.
    pub fn shifted(&self, offset: usize, n: usize) -> Result<BraidWord> {
        BraidWord::new(
            n,
            self.letters.iter().map(|l| Letter {
                index: l.index + offset,
                ..*l
            }),
        )
    }

    /// The sigma letters only, i.e. the image under forgetting the framing.
    pub fn without_tau(&self) -> BraidWord {
        let mut out = BraidWord::identity(self.n);
        for &l in self.letters.iter().filter(|l| l.is_sigma()) {
            out.push_unchecked(l);
        }
        out
    }

    /// Unit letters in order, each with exponent `±1`.
    pub fn units(&self) -> impl Iterator<Item = Letter> + '_ {
        self.letters.iter().flat_map(|l| {
            let unit = Letter {
                exponent: l.exponent.signum(),
                ..*l
            };
            std::iter::repeat_n(unit, l.exponent.unsigned_abs() as usize)
        })
    }

    /// Splits after `k` unit letters, cutting a run if needed.
    pub fn split_at_unit(&self, k: usize) -> Result<(BraidWord, BraidWord)> {
        if k > self.unit_len() {
            return Err(BraidError::InvalidDescriptor(format!(
                "split {k} exceeds word length {}",
                self.unit_len()
            )));
        }
        let mut head = BraidWord::identity(self.n);
        let mut tail = BraidWord::identity(self.n);
        for (idx, u) in self.units().enumerate() {
            if idx < k {
                head.push_unchecked(u);
            } else {
                tail.push_unchecked(u);
            }
        }
        Ok((head, tail))
    }

    /// Every unit crossing with the strands involved, strands named by their
    /// top position.
    pub fn crossings(&self) -> Vec<Crossing> {
        let mut pos_to_strand: Vec<usize> = (1..=self.n).collect();
        let mut out = Vec::new();
        for (level, u) in self.units().filter(|u| u.is_sigma()).enumerate() {
            let k = u.index;
            let left = pos_to_strand[k - 1];
            let right = pos_to_strand[k];
            out.push(Crossing {
                level,
                position: k,
                sign: u.exponent,
                left,
                right,
            });
            pos_to_strand.swap(k - 1, k);
        }
        out
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, l) in self.letters.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// One unit crossing `σ_position^sign`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub level: usize,
    pub position: usize,
    pub sign: i64,
    /// Strand entering the crossing at `position`; it leaves at `position + 1`.
    pub left: usize,
    /// Strand entering at `position + 1`; it leaves at `position`.
    pub right: usize,
}

impl Crossing {
    pub fn over(&self) -> usize {
        if self.sign > 0 {
            self.right
        } else {
            self.left
        }
    }

    pub fn under(&self) -> usize {
        if self.sign > 0 {
            self.left
        } else {
            self.right
        }
    }

    pub fn involves(&self, strand: usize) -> bool {
        self.left == strand || self.right == strand
    }
}

/// A permutation of `1..=n`; `image(j)` is the bottom position reached by
/// the strand entering at top position `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if im == 0 || im > n || seen[im - 1] {
                return Err(BraidError::InvalidDescriptor(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[im - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition `(i, i+1)`.
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, j: usize) -> usize {
        self.images[j - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &im)| im == j + 1)
    }

    /// Apply `self` first, then `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        assert_eq!(self.len(), next.len());
        Permutation {
            images: self.images.iter().map(|&im| next.image(im)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (j, &im) in self.images.iter().enumerate() {
            images[im - 1] = j + 1;
        }
        Permutation { images }
    }

    /// Disjoint cycles, each starting at its smallest element, ordered by
    /// that element. Fixed points are one-element cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j - 1] {
                seen[j - 1] = true;
                cycle.push(j);
                j = self.image(j);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|j| j.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}
