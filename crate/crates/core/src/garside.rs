//! Left-greedy Garside normal form in `B_n` over the permutation braids.
//!
//! A word is first rewritten as `Δ^p A_1 ... A_k` with every `A_j` a positive
//! permutation braid, using `σ_i^{-1} = Δ^{-1} (Δ σ_i^{-1})` and
//! `A Δ^{-1} = Δ^{-1} τ(A)`. Adjacent factors are then slid until every pair
//! is left-weighted, leading `Δ` factors are absorbed into the infimum and
//! trailing identities dropped.

use serde::Serialize;

use crate::error::{BraidError, Result};
use crate::word::{BraidWord, Letter, LetterKind, Permutation};

/// `Δ^inf · factors[0] ... factors[k-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GarsideNormalForm {
    pub n: usize,
    pub inf: i64,
    pub factors: Vec<Permutation>,
}

impl GarsideNormalForm {
    pub fn identity(n: usize) -> Self {
        GarsideNormalForm {
            n,
            inf: 0,
            factors: Vec::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// Canonical length: number of simple factors after `Δ^inf`.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// A word spelling this normal form.
    pub fn to_word(&self) -> BraidWord {
        let mut w = half_twist(self.n).pow(self.inf);
        for f in &self.factors {
            let simple = Simple::from_permutation(f);
            w = w.concat(&simple.to_word()).expect("same strand count");
        }
        w
    }
}

/// The half twist `Δ_n = σ_1 (σ_2 σ_1) ... (σ_{n-1} ... σ_1)`.
pub fn half_twist(n: usize) -> BraidWord {
    let mut letters = Vec::new();
    for top in 1..n {
        for i in (1..=top).rev() {
            letters.push(Letter::sigma(i, 1));
        }
    }
    BraidWord::new(n, letters).expect("indices in range")
}

/// Positive permutation braid; `perm[j]` is the 0-based bottom position of the
/// strand starting at 0-based top position `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Simple {
    perm: Vec<usize>,
}

impl Simple {
    fn identity(n: usize) -> Self {
        Simple {
            perm: (0..n).collect(),
        }
    }

    fn delta(n: usize) -> Self {
        Simple {
            perm: (0..n).rev().collect(),
        }
    }

    fn sigma(n: usize, i: usize) -> Self {
        let mut s = Self::identity(n);
        s.perm.swap(i, i + 1);
        s
    }

    fn from_permutation(p: &Permutation) -> Self {
        Simple {
            perm: p.images().iter().map(|&im| im - 1).collect(),
        }
    }

    fn to_permutation(&self) -> Permutation {
        Permutation::from_images(self.perm.iter().map(|&im| im + 1).collect())
            .expect("simple elements are permutations")
    }

    fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(j, &im)| j == im)
    }

    fn is_delta(&self) -> bool {
        let n = self.perm.len();
        self.perm.iter().enumerate().all(|(j, &im)| im == n - 1 - j)
    }

    fn inverse_perm(&self) -> Vec<usize> {
        let mut inv = vec![0; self.perm.len()];
        for (j, &im) in self.perm.iter().enumerate() {
            inv[im] = j;
        }
        inv
    }

    /// `i` such that `self = σ_i · X` with `X` simple (0-based).
    fn starting_set(&self) -> Vec<usize> {
        (0..self.perm.len().saturating_sub(1))
            .filter(|&i| self.perm[i] > self.perm[i + 1])
            .collect()
    }

    /// `i` such that `self = X · σ_i` with `X` simple (0-based).
    fn finishing_set(&self) -> Vec<usize> {
        let inv = self.inverse_perm();
        (0..inv.len().saturating_sub(1))
            .filter(|&i| inv[i] > inv[i + 1])
            .collect()
    }

    /// `self · σ_i`, valid when `i` is not in the finishing set.
    fn mul_sigma(&mut self, i: usize) {
        for im in self.perm.iter_mut() {
            if *im == i {
                *im = i + 1;
            } else if *im == i + 1 {
                *im = i;
            }
        }
    }

    /// `σ_i^{-1} · self`, valid when `i` is in the starting set.
    fn left_div_sigma(&mut self, i: usize) {
        self.perm.swap(i, i + 1);
    }

    /// `Δ^{-1} · self · Δ`.
    fn flip(&self) -> Simple {
        let n = self.perm.len();
        Simple {
            perm: (0..n).map(|j| n - 1 - self.perm[n - 1 - j]).collect(),
        }
    }

    fn to_word(&self) -> BraidWord {
        let n = self.perm.len();
        let mut rest = self.clone();
        let mut letters = Vec::new();
        while let Some(&i) = rest.starting_set().first() {
            letters.push(Letter::sigma(i + 1, 1));
            rest.left_div_sigma(i);
        }
        BraidWord::new(n, letters).expect("indices in range")
    }
}

/// Makes `(a, b)` left-weighted. Returns whether anything moved.
fn left_weight(a: &mut Simple, b: &mut Simple) -> bool {
    let mut moved = false;
    loop {
        let fin = a.finishing_set();
        let Some(i) = b.starting_set().into_iter().find(|i| !fin.contains(i)) else {
            return moved;
        };
        a.mul_sigma(i);
        b.left_div_sigma(i);
        moved = true;
    }
}

pub fn to_normal_form(word: &BraidWord) -> Result<GarsideNormalForm> {
    let n = word.strands();
    if let Some(l) = word.letters().iter().find(|l| l.kind == LetterKind::Tau) {
        return Err(BraidError::FramingLetter { index: l.index });
    }
    if n < 2 {
        return Ok(GarsideNormalForm::identity(n));
    }

    // Each factor is stored together with the number of negative letters read
    // before it; every later negative letter conjugates it once by Δ.
    let mut raw: Vec<(Simple, u64)> = Vec::new();
    let mut inf: i64 = 0;
    let mut negatives: u64 = 0;
    for u in word.units() {
        let i = u.index - 1;
        if u.exponent > 0 {
            raw.push((Simple::sigma(n, i), negatives));
        } else {
            negatives += 1;
            inf -= 1;
            // Δ σ_i^{-1}
            let mut x = Simple::delta(n);
            x.mul_sigma(i);
            raw.push((x, negatives));
        }
    }
    let mut factors: Vec<Simple> = raw
        .into_iter()
        .map(|(s, seen)| {
            if (negatives - seen) % 2 == 1 {
                s.flip()
            } else {
                s
            }
        })
        .collect();

    loop {
        let mut changed = false;
        for j in 0..factors.len().saturating_sub(1) {
            let (head, tail) = factors.split_at_mut(j + 1);
            if left_weight(&mut head[j], &mut tail[0]) {
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let leading = factors.iter().take_while(|f| f.is_delta()).count();
    inf += leading as i64;
    factors.drain(..leading);
    while factors.last().is_some_and(Simple::is_identity) {
        factors.pop();
    }
    debug_assert!(factors.iter().all(|f| !f.is_identity() && !f.is_delta()));

    Ok(GarsideNormalForm {
        n,
        inf,
        factors: factors.iter().map(Simple::to_permutation).collect(),
    })
}

pub fn are_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(BraidError::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    Ok(to_normal_form(a)? == to_normal_form(b)?)
}

pub fn is_identity(a: &BraidWord) -> Result<bool> {
    Ok(to_normal_form(a)?.is_identity())
}

/// Starting set of a permutation braid, 1-based. Exposed for checking the
/// left-weighted condition from outside.
pub fn starting_set(p: &Permutation) -> Vec<usize> {
    Simple::from_permutation(p)
        .starting_set()
        .into_iter()
        .map(|i| i + 1)
        .collect()
}

/// Finishing set of a permutation braid, 1-based.
pub fn finishing_set(p: &Permutation) -> Vec<usize> {
    Simple::from_permutation(p)
        .finishing_set()
        .into_iter()
        .map(|i| i + 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, runs: &[(usize, i64)]) -> BraidWord {
        BraidWord::from_sigmas(n, runs).unwrap()
    }

    #[test]
    fn braid_relation_gives_equal_forms() {
        let a = to_normal_form(&s(3, &[(1, 1), (2, 1), (1, 1)])).unwrap();
        let b = to_normal_form(&s(3, &[(2, 1), (1, 1), (2, 1)])).unwrap();
        assert_eq!(a, b);
        // σ1σ2σ1 is Δ_3
        assert_eq!(a.inf, 1);
        assert!(a.factors.is_empty());
    }

    #[test]
    fn far_commutation() {
        let a = s(4, &[(1, 1), (3, 1)]);
        let b = s(4, &[(3, 1), (1, 1)]);
        assert_eq!(to_normal_form(&a).unwrap(), to_normal_form(&b).unwrap());
    }

    #[test]
    fn empty_word_is_trivial() {
        let nf = to_normal_form(&BraidWord::identity(5)).unwrap();
        assert_eq!(nf.inf, 0);
        assert!(nf.factors.is_empty());
    }

    #[test]
    fn are_equal_examples() {
        assert!(are_equal(
            &s(3, &[(1, 1), (2, 1), (1, 1)]),
            &s(3, &[(2, 1), (1, 1), (2, 1)])
        )
        .unwrap());
        assert!(!are_equal(&s(3, &[(1, 1)]), &s(3, &[(2, 1)])).unwrap());
        let w = BraidWord::new(3, [Letter::sigma(1, 1), Letter::sigma(1, -1)]).unwrap();
        assert!(are_equal(&w, &BraidWord::identity(3)).unwrap());
        assert!(matches!(
            are_equal(&BraidWord::identity(2), &BraidWord::identity(3)),
            Err(BraidError::StrandMismatch { .. })
        ));
    }

    #[test]
    fn is_identity_examples() {
        let w = s(3, &[(2, 1), (1, 1), (2, 1), (1, -1), (2, -1), (1, -1)]);
        assert!(is_identity(&w).unwrap());
        assert!(!is_identity(&s(3, &[(1, 2)])).unwrap());
        assert!(is_identity(&BraidWord::identity(3)).unwrap());
    }

    #[test]
    fn tau_letters_rejected() {
        let w = BraidWord::tau(2, 1, 1).unwrap();
        assert_eq!(
            to_normal_form(&w),
            Err(BraidError::FramingLetter { index: 1 })
        );
    }

    #[test]
    fn negative_letters_and_delta_powers() {
        let d = half_twist(4);
        let nf = to_normal_form(&d.pow(-2)).unwrap();
        assert_eq!(nf.inf, -2);
        assert!(nf.factors.is_empty());
        let nf = to_normal_form(&s(3, &[(1, -1)])).unwrap();
        assert_eq!(nf.inf, -1);
        assert_eq!(nf.factors.len(), 1);
    }

    #[test]
    fn factors_are_left_weighted() {
        let w = s(
            5,
            &[
                (1, 2),
                (3, -1),
                (2, 1),
                (4, 3),
                (1, -2),
                (3, 1),
                (2, -1),
                (4, 1),
            ],
        );
        let nf = to_normal_form(&w).unwrap();
        for pair in nf.factors.windows(2) {
            let fin = finishing_set(&pair[0]);
            assert!(starting_set(&pair[1]).iter().all(|i| fin.contains(i)));
        }
        assert_eq!(to_normal_form(&nf.to_word()).unwrap(), nf);
    }
}
