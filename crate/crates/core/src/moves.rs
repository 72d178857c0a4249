//! Braid-level moves: strand inclusions, L / RL / integer RL moves, Markov
//! and framed Markov stabilisation, conjugation, the realisation of a
//! framing conjugation by RL moves, and the framing-transfer solver.
//!
//! Every move returns a new element; nothing is mutated in place.

use serde::Serialize;

use crate::error::{BraidError, Result};
use crate::framed::FramedBraid;
use crate::word::{BraidWord, Letter, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    LOver,
    LUnder,
    RlOver,
    RlUnder,
    IntRlOver,
    IntRlUnder,
    M,
    Rm,
    Conjugation,
    TauConjugation,
}

impl MoveKind {
    pub fn is_l_family(self) -> bool {
        matches!(
            self,
            MoveKind::LOver
                | MoveKind::LUnder
                | MoveKind::RlOver
                | MoveKind::RlUnder
                | MoveKind::IntRlOver
                | MoveKind::IntRlUnder
        )
    }

    fn is_over(self) -> bool {
        matches!(
            self,
            MoveKind::LOver | MoveKind::RlOver | MoveKind::IntRlOver
        )
    }
}

/// Where the new strand of an L-family move enters, relative to the cut
/// strand at position `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InsertSide {
    /// New strand at `i + 1`: `o_{i+1}(a_1) σ_i^{±1} o_{i+1}(a_2)`, applied in
    /// the form with the crossing dragged to the right edge.
    #[default]
    After,
    /// New strand at `i`: `o_i(a_1) σ_i^{±1} o_i(a_2)`.
    Before,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoveDescriptor {
    pub kind: MoveKind,
    /// Unit-letter position splitting the target word into `a_1 a_2`.
    pub split: usize,
    /// Cut strand position (L family) or framing index (tau conjugation).
    pub index: usize,
    pub sign: i64,
    /// Extra framing of the integer RL move, in `{-1, 0, 1}`.
    pub k: i64,
    pub side: InsertSide,
    #[serde(skip)]
    pub conjugator: Option<FramedBraid>,
}

impl MoveDescriptor {
    pub fn new(kind: MoveKind) -> Self {
        MoveDescriptor {
            kind,
            split: 0,
            index: 1,
            sign: 1,
            k: 0,
            side: InsertSide::After,
            conjugator: None,
        }
    }

    pub fn l_family(kind: MoveKind, split: usize, index: usize, sign: i64) -> Self {
        MoveDescriptor {
            split,
            index,
            sign,
            ..Self::new(kind)
        }
    }

    pub fn with_side(mut self, side: InsertSide) -> Self {
        self.side = side;
        self
    }

    pub fn with_k(mut self, k: i64) -> Self {
        self.k = k;
        self
    }

    pub fn conjugation(g: FramedBraid) -> Self {
        MoveDescriptor {
            conjugator: Some(g),
            ..Self::new(MoveKind::Conjugation)
        }
    }

    pub fn stabilization(kind: MoveKind, sign: i64) -> Self {
        MoveDescriptor {
            sign,
            ..Self::new(kind)
        }
    }

    pub fn tau_conjugation(index: usize, exp: i64) -> Self {
        MoveDescriptor {
            index,
            sign: exp,
            ..Self::new(MoveKind::TauConjugation)
        }
    }

    /// Checks the descriptor against a target on `n` strands whose spelled
    /// word has `len` unit letters.
    pub fn validate(&self, n: usize, len: usize) -> Result<()> {
        let bad = |msg: String| Err(BraidError::InvalidDescriptor(msg));
        if self.sign != 1 && self.sign != -1 {
            return bad(format!("sign must be ±1, got {}", self.sign));
        }
        if !(-1..=1).contains(&self.k) {
            return bad(format!("k must be in {{-1, 0, 1}}, got {}", self.k));
        }
        if self.k != 0 && !matches!(self.kind, MoveKind::IntRlOver | MoveKind::IntRlUnder) {
            return bad("k is only meaningful for integer RL moves".into());
        }
        if self.kind.is_l_family() {
            if self.index == 0 || self.index > n {
                return bad(format!("cut strand {} out of range 1..={n}", self.index));
            }
            if self.split > len {
                return bad(format!("split {} exceeds word length {len}", self.split));
            }
        }
        match self.kind {
            MoveKind::TauConjugation if self.index == 0 || self.index > n => {
                bad(format!("framing index {} out of range 1..={n}", self.index))
            }
            MoveKind::Conjugation => match &self.conjugator {
                None => bad("conjugation needs a conjugator".into()),
                Some(g) if g.strands() != n => Err(BraidError::StrandMismatch {
                    left: n,
                    right: g.strands(),
                }),
                Some(_) => Ok(()),
            },
            _ => Ok(()),
        }
    }
}

/// `B_n -> B_{n+m}`: the same letters with `m` idle strands on the right.
pub fn include_natural(a: &BraidWord, m: usize) -> BraidWord {
    a.widen(m)
}

fn run(n: usize, indices: impl IntoIterator<Item = usize>, exponent: i64) -> BraidWord {
    BraidWord::new(n, indices.into_iter().map(|i| Letter::sigma(i, exponent)))
        .expect("indices in range")
}

/// Moves the strand at top position `i` to position `n + 1` of `B_{n+1}`,
/// passing over (or under) everything in between.
fn drag(n: usize, i: usize, over: bool) -> BraidWord {
    run(n + 1, i..=n, if over { -1 } else { 1 })
}

fn inclusion(a: &BraidWord, i: usize, over: bool) -> Result<BraidWord> {
    let n = a.strands();
    if i == 0 || i > n + 1 {
        return Err(BraidError::InvalidDescriptor(format!(
            "insertion index {i} out of range 1..={}",
            n + 1
        )));
    }
    let d = drag(n, i, over);
    d.concat(&a.widen(1))?.concat(&d.invert())
}

/// `o_i`: insert a strand at position `i` that passes over the whole braid.
pub fn over_inclusion(a: &BraidWord, i: usize) -> Result<BraidWord> {
    inclusion(a, i, true)
}

/// `u_i`: insert a strand at position `i` that passes under the whole braid.
pub fn under_inclusion(a: &BraidWord, i: usize) -> Result<BraidWord> {
    inclusion(a, i, false)
}

/// The word produced by an L-family move, kept in segments so the inserted
/// letters can be removed again.
///
/// The full word is `prefix · a1 · core · a2 · suffix`, where `a1` and `a2`
/// are the two halves of the input read on `n + 1` strands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LMoveWord {
    pub prefix: BraidWord,
    pub a1: BraidWord,
    pub core: BraidWord,
    pub a2: BraidWord,
    pub suffix: BraidWord,
}

impl LMoveWord {
    pub fn word(&self) -> BraidWord {
        [&self.a1, &self.core, &self.a2, &self.suffix]
            .into_iter()
            .try_fold(self.prefix.clone(), |acc, w| acc.concat(w))
            .expect("segments share a strand count")
    }

    pub fn element(&self) -> FramedBraid {
        FramedBraid::normalize(&self.word())
    }

    /// Undo the move: drop the inserted letters and the new strand.
    pub fn retract(&self) -> Result<BraidWord> {
        let n = self.a1.strands() - 1;
        self.a1.with_strands(n)?.concat(&self.a2.with_strands(n)?)
    }
}

/// Builds the L-family word for `a = a_1 a_2`. `twist` is the exponent of the
/// compensating framing letter placed on the cut strand next to the new
/// crossing (0 for a plain L-move); `k` is the integer RL end framing.
fn l_family_word(a: &BraidWord, d: &MoveDescriptor, twist: i64, k: i64) -> Result<LMoveWord> {
    d.validate(a.strands(), a.unit_len())?;
    let (h, t) = a.split_at_unit(d.split)?;
    l_family_halves(&h, &t, d, twist, k)
}

fn l_family_halves(
    h: &BraidWord,
    t: &BraidWord,
    d: &MoveDescriptor,
    twist: i64,
    k: i64,
) -> Result<LMoveWord> {
    let n = h.strands();
    if t.strands() != n {
        return Err(BraidError::StrandMismatch {
            left: n,
            right: t.strands(),
        });
    }
    d.validate(n, h.unit_len())?;
    let (a1, a2) = (h.widen(1), t.widen(1));
    let i = d.index;
    let over = d.kind.is_over();
    let np = n + 1;
    let tau = |pos: usize, e: i64| BraidWord::new(np, (e != 0).then(|| Letter::tau(pos, e)));
    let twist_at = |pos: usize| tau(pos, twist);
    let end_framing = tau;

    let (prefix, core, suffix, new_end) = match d.side {
        InsertSide::After => {
            // conjugator taking position i+1 to the right edge
            let outer = drag(n, i + 1, over);
            // chain bringing the cut strand from position i to position n
            let chain = run(np, i..n, if over { -1 } else { 1 });
            let crossing = BraidWord::sigma(np, n, d.sign)?;
            let core = chain
                .concat(&twist_at(n)?)?
                .concat(&crossing)?
                .concat(&chain.invert())?;
            let suffix = outer.invert();
            (outer, core, suffix, i + 1)
        }
        InsertSide::Before => {
            let outer = drag(n, i, over);
            let crossing = twist_at(i + 1)?.concat(&BraidWord::sigma(np, i, d.sign)?)?;
            let core = outer.invert().concat(&crossing)?.concat(&outer)?;
            let suffix = outer.invert();
            (outer, core, suffix, i)
        }
    };
    let prefix = end_framing(new_end, k)?.concat(&prefix)?;
    let suffix = suffix.concat(&end_framing(new_end, -k)?)?;
    Ok(LMoveWord {
        prefix,
        a1,
        core,
        a2,
        suffix,
    })
}

/// Classical L-move (no framing compensation) on any word.
pub fn apply_l_move(a: &BraidWord, d: &MoveDescriptor) -> Result<BraidWord> {
    if !matches!(d.kind, MoveKind::LOver | MoveKind::LUnder) {
        return Err(BraidError::InvalidDescriptor(format!(
            "{:?} is not an L-move",
            d.kind
        )));
    }
    Ok(l_family_word(a, d, 0, 0)?.word())
}

/// RL-move on an arbitrary framed word, keeping the segments.
pub fn rl_move_word(a: &BraidWord, d: &MoveDescriptor) -> Result<LMoveWord> {
    if !matches!(d.kind, MoveKind::RlOver | MoveKind::RlUnder) {
        return Err(BraidError::InvalidDescriptor(format!(
            "{:?} is not an RL-move",
            d.kind
        )));
    }
    l_family_word(a, d, -d.sign, 0)
}

/// RL-move on a word given as its two halves `a_1`, `a_2`; the descriptor's
/// split is ignored. Useful when `a_1 a_2` would cancel freely.
pub fn rl_move_halves(a1: &BraidWord, a2: &BraidWord, d: &MoveDescriptor) -> Result<LMoveWord> {
    if !matches!(d.kind, MoveKind::RlOver | MoveKind::RlUnder) {
        return Err(BraidError::InvalidDescriptor(format!(
            "{:?} is not an RL-move",
            d.kind
        )));
    }
    let d = MoveDescriptor {
        split: a1.unit_len(),
        ..d.clone()
    };
    l_family_halves(a1, a2, &d, -d.sign, 0)
}

/// RL-move: the new crossing `σ^{±1}` is paired with `t^{∓1}` on the cut
/// strand, so the closure keeps its framing.
pub fn apply_rl_move(a: &FramedBraid, d: &MoveDescriptor) -> Result<FramedBraid> {
    Ok(rl_move_word(&a.spell(), d)?.element())
}

/// Integer RL-move on an arbitrary framed word, keeping the segments.
pub fn integer_rl_move_word(a: &BraidWord, d: &MoveDescriptor) -> Result<LMoveWord> {
    if !matches!(d.kind, MoveKind::IntRlOver | MoveKind::IntRlUnder) {
        return Err(BraidError::InvalidDescriptor(format!(
            "{:?} is not an integer RL-move",
            d.kind
        )));
    }
    l_family_word(a, d, 0, d.k)
}

/// Integer RL-move: a classical L-move with framings `k` and `-k` on the new
/// top and bottom endpoints.
pub fn apply_integer_rl_move(a: &FramedBraid, d: &MoveDescriptor) -> Result<FramedBraid> {
    Ok(integer_rl_move_word(&a.spell(), d)?.element())
}

fn stabilize(a: &FramedBraid, sign: i64, twist: bool) -> Result<FramedBraid> {
    if sign != 1 && sign != -1 {
        return Err(BraidError::InvalidDescriptor(format!(
            "sign must be ±1, got {sign}"
        )));
    }
    let n = a.strands();
    let mut w = a.spell().widen(1);
    if twist {
        w.push(Letter::tau(n, -sign))?;
    }
    w.push(Letter::sigma(n, sign))?;
    Ok(FramedBraid::normalize(&w))
}

/// `α -> α t_n^{∓1} σ_n^{±1}` in `RB_{n+1}`.
pub fn apply_rm_move(a: &FramedBraid, sign: i64) -> Result<FramedBraid> {
    stabilize(a, sign, true)
}

/// Classical Markov stabilisation `α -> α σ_n^{±1}`; on a framed braid it
/// shifts the closure framing by `±1`.
pub fn apply_m_move(a: &FramedBraid, sign: i64) -> Result<FramedBraid> {
    stabilize(a, sign, false)
}

/// `g^{-1} a g`.
pub fn conjugate(a: &FramedBraid, g: &FramedBraid) -> Result<FramedBraid> {
    g.inverse().multiply(a)?.multiply(g)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainStep {
    Start,
    /// An RL move applied to the spelled previous element.
    Rl(MoveDescriptor),
    /// The same group element, rewritten as the RL image of `a1 · a2`.
    Isotopy {
        a1: BraidWord,
        a2: BraidWord,
        descriptor: MoveDescriptor,
    },
    /// Undo of the RL move that takes `a1 · a2` to the previous element.
    UndoRl {
        a1: BraidWord,
        a2: BraidWord,
        descriptor: MoveDescriptor,
    },
}

impl ChainStep {
    pub fn name(&self) -> &'static str {
        match self {
            ChainStep::Start => "start",
            ChainStep::Rl(_) => "rl",
            ChainStep::Isotopy { .. } => "isotopy",
            ChainStep::UndoRl { .. } => "undo-rl",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainLink {
    pub step: ChainStep,
    pub element: FramedBraid,
}

/// Realises `a -> t_i^{-exp} a t_i^{exp}` as RL moves and an isotopy:
///
/// `a -> o_i(a) t_{i+1} σ_i^{-1} = o_{i+1}(t_i^{-1}) t_i σ_i^{-1} o_{i+1}(a t_i) -> t_i^{-1} a t_i`
///
/// for `exp = 1`. For `exp = -1` the same chain is built with under moves and
/// a positive crossing.
pub fn tau_conjugation_as_rl_sequence(
    a: &FramedBraid,
    i: usize,
    exp: i64,
) -> Result<Vec<ChainLink>> {
    let n = a.strands();
    if i == 0 || i > n {
        return Err(BraidError::InvalidDescriptor(format!(
            "framing index {i} out of range 1..={n}"
        )));
    }
    if exp != 1 && exp != -1 {
        return Err(BraidError::InvalidDescriptor(format!(
            "exponent must be ±1, got {exp}"
        )));
    }
    let (kind, sign) = if exp == 1 {
        (MoveKind::RlOver, -1)
    } else {
        (MoveKind::RlUnder, 1)
    };
    let spelled = a.spell();

    let first =
        MoveDescriptor::l_family(kind, spelled.unit_len(), i, sign).with_side(InsertSide::Before);
    let after_first = rl_move_word(&spelled, &first)?.element();

    let t = BraidWord::tau(n, i, exp)?;
    let (a1, a2) = (t.invert(), spelled.concat(&t)?);
    let second = MoveDescriptor::l_family(kind, 1, i, sign);
    let rewritten = rl_move_halves(&a1, &a2, &second)?;

    Ok(vec![
        ChainLink {
            step: ChainStep::Start,
            element: a.clone(),
        },
        ChainLink {
            step: ChainStep::Rl(first),
            element: after_first,
        },
        ChainLink {
            step: ChainStep::Isotopy {
                a1: a1.clone(),
                a2: a2.clone(),
                descriptor: second.clone(),
            },
            element: rewritten.element(),
        },
        ChainLink {
            step: ChainStep::UndoRl {
                a1,
                a2,
                descriptor: second,
            },
            element: FramedBraid::normalize(&rewritten.retract()?),
        },
    ])
}

/// Applies any move to a framed braid. Plain L and M moves are allowed on
/// framed input and shift the closure framing.
pub fn apply_move(a: &FramedBraid, d: &MoveDescriptor) -> Result<FramedBraid> {
    let spelled = a.spell();
    d.validate(a.strands(), spelled.unit_len())?;
    match d.kind {
        MoveKind::LOver | MoveKind::LUnder => {
            Ok(FramedBraid::normalize(&apply_l_move(&spelled, d)?))
        }
        MoveKind::RlOver | MoveKind::RlUnder => apply_rl_move(a, d),
        MoveKind::IntRlOver | MoveKind::IntRlUnder => apply_integer_rl_move(a, d),
        MoveKind::M => apply_m_move(a, d.sign),
        MoveKind::Rm => apply_rm_move(a, d.sign),
        MoveKind::Conjugation => conjugate(a, d.conjugator.as_ref().expect("validated")),
        MoveKind::TauConjugation => {
            let chain = tau_conjugation_as_rl_sequence(a, d.index, d.sign)?;
            Ok(chain.last().expect("chain is never empty").element.clone())
        }
    }
}

/// Solves `delta_i - r_i = kappa_i - r_{p(i)}` for all `i`.
///
/// A solution exists iff `delta` and `kappa` have equal sums on every cycle
/// of `p`; solutions then differ by vectors constant on cycles, and the one
/// returned is zero at the smallest index of each cycle.
pub fn solve_framing_transfer(
    p: &Permutation,
    delta: &[i64],
    kappa: &[i64],
) -> Result<Option<Vec<i64>>> {
    let m = p.len();
    for v in [delta, kappa] {
        if v.len() != m {
            return Err(BraidError::LengthMismatch {
                expected: m,
                got: v.len(),
            });
        }
    }
    let mut r = vec![0i64; m];
    for cycle in p.cycles() {
        let start = cycle[0];
        let mut acc = 0i64;
        for &j in &cycle {
            r[j - 1] = acc;
            acc += kappa[j - 1] - delta[j - 1];
        }
        if acc != 0 {
            return Ok(None);
        }
        debug_assert_eq!(r[start - 1], 0);
    }
    Ok(Some(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::{closure_signature, signatures_match};
    use crate::garside::are_equal;

    fn sig(n: usize, runs: &[(usize, i64)]) -> BraidWord {
        BraidWord::from_sigmas(n, runs).unwrap()
    }

    #[test]
    fn natural_inclusion() {
        let a = include_natural(&sig(2, &[(1, 1)]), 1);
        assert_eq!(a.strands(), 3);
        assert_eq!(a.letters(), &[Letter::sigma(1, 1)]);
        assert_eq!(include_natural(&BraidWord::identity(2), 3).strands(), 5);
        let c = closure_signature(&FramedBraid::from_braid(a).unwrap()).unwrap();
        assert_eq!(c.component_count, 2);
    }

    #[test]
    fn inclusion_endpoints() {
        let a = sig(3, &[(1, 1), (2, -1), (1, 2)]);
        assert!(are_equal(&over_inclusion(&a, 4).unwrap(), &include_natural(&a, 1)).unwrap());
        assert!(are_equal(&under_inclusion(&a, 4).unwrap(), &include_natural(&a, 1)).unwrap());
        assert!(are_equal(
            &over_inclusion(&a, 1).unwrap(),
            &under_inclusion(&a, 1).unwrap()
        )
        .unwrap());
        assert!(are_equal(&over_inclusion(&a, 1).unwrap(), &a.shifted(1, 4).unwrap()).unwrap());
        let e = over_inclusion(&BraidWord::identity(3), 2).unwrap();
        assert_eq!(e.strands(), 4);
        assert!(e.is_empty());
        assert!(over_inclusion(&a, 5).is_err());
        assert!(over_inclusion(&a, 0).is_err());
    }

    #[test]
    fn inclusion_new_strand_over_or_under() {
        let a = sig(3, &[(1, 1), (2, -1), (1, 2), (2, 1)]);
        for i in 1..=4 {
            let o = over_inclusion(&a, i).unwrap();
            assert_eq!(o.permutation().image(i), i);
            assert!(o
                .crossings()
                .iter()
                .filter(|c| c.involves(i))
                .all(|c| c.over() == i));
            let u = under_inclusion(&a, i).unwrap();
            assert!(u
                .crossings()
                .iter()
                .filter(|c| c.involves(i))
                .all(|c| c.under() == i));
            // other strands keep their relative motion
            let p = a.permutation();
            for j in 1..=3 {
                let shift = |x: usize| if x >= i { x + 1 } else { x };
                assert_eq!(o.permutation().image(shift(j)), shift(p.image(j)));
            }
        }
    }

    #[test]
    fn dragged_l_move_equals_inclusion_form() {
        let a = sig(3, &[(1, 1), (2, -1), (1, 2), (2, 1)]);
        for kind in [MoveKind::LOver, MoveKind::LUnder] {
            for i in 1..=3 {
                for split in [0, 2, 5] {
                    for sign in [1, -1] {
                        let d = MoveDescriptor::l_family(kind, split, i, sign);
                        let dragged = apply_l_move(&a, &d).unwrap();
                        let (a1, a2) = a.split_at_unit(split).unwrap();
                        let inc = |w: &BraidWord| {
                            if kind == MoveKind::LOver {
                                over_inclusion(w, i + 1)
                            } else {
                                under_inclusion(w, i + 1)
                            }
                            .unwrap()
                        };
                        let direct = inc(&a1)
                            .concat(&BraidWord::sigma(4, i, sign).unwrap())
                            .unwrap()
                            .concat(&inc(&a2))
                            .unwrap();
                        assert!(
                            are_equal(&dragged, &direct).unwrap(),
                            "{kind:?} i={i} split={split}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn rl_move_on_trivial_braid() {
        let d = MoveDescriptor::l_family(MoveKind::RlOver, 0, 1, 1);
        let r = apply_rl_move(&FramedBraid::identity(1), &d).unwrap();
        let expected = FramedBraid::normalize(
            &BraidWord::new(2, [Letter::tau(1, -1), Letter::sigma(1, 1)]).unwrap(),
        );
        assert!(r.framed_equal(&expected).unwrap());
        let s = closure_signature(&r).unwrap();
        assert_eq!(s.component_count, 1);
        assert_eq!(s.components[0].framing, 0);
    }

    #[test]
    fn l_move_on_trivial_braid_is_unknot() {
        let d = MoveDescriptor::l_family(MoveKind::LOver, 0, 1, 1);
        let w = apply_l_move(&BraidWord::identity(1), &d).unwrap();
        assert_eq!(w.strands(), 2);
        assert_eq!(w.unit_len(), 1);
        let s = closure_signature(&FramedBraid::from_braid(w).unwrap()).unwrap();
        assert_eq!(s.component_count, 1);
    }

    #[test]
    fn plain_l_move_changes_writhe_by_sign() {
        let a = sig(3, &[(1, 1), (2, -1), (1, 2)]);
        for sign in [1, -1] {
            let d = MoveDescriptor::l_family(MoveKind::LUnder, 2, 2, sign);
            let w = apply_l_move(&a, &d).unwrap();
            assert_eq!(w.exponent_sum(), a.exponent_sum() + sign);
        }
    }

    #[test]
    fn integer_rl_with_zero_k_is_classical() {
        let a = FramedBraid::new(vec![1, 0, -2], sig(3, &[(1, 1), (2, 1)])).unwrap();
        let d = MoveDescriptor::l_family(MoveKind::IntRlOver, 2, 2, 1);
        let l = MoveDescriptor::l_family(MoveKind::LOver, 2, 2, 1);
        let int = apply_integer_rl_move(&a, &d).unwrap();
        let plain = FramedBraid::normalize(&apply_l_move(&a.spell(), &l).unwrap());
        assert!(int.framed_equal(&plain).unwrap());
    }

    #[test]
    fn retract_restores_input() {
        let a = FramedBraid::new(vec![1, 0, -2], sig(3, &[(1, 1), (2, 1)])).unwrap();
        let d = MoveDescriptor::l_family(MoveKind::IntRlUnder, 3, 1, -1).with_k(1);
        let mw = integer_rl_move_word(&a.spell(), &d).unwrap();
        let back = FramedBraid::normalize(&mw.retract().unwrap());
        assert!(back.framed_equal(&a).unwrap());
    }

    #[test]
    fn descriptor_validation() {
        let a = FramedBraid::identity(2);
        let bad_k = MoveDescriptor::l_family(MoveKind::IntRlOver, 0, 1, 1).with_k(2);
        assert!(apply_integer_rl_move(&a, &bad_k).is_err());
        let bad_i = MoveDescriptor::l_family(MoveKind::RlOver, 0, 3, 1);
        assert!(apply_rl_move(&a, &bad_i).is_err());
        let bad_sign = MoveDescriptor::l_family(MoveKind::RlOver, 0, 1, 2);
        assert!(apply_rl_move(&a, &bad_sign).is_err());
        let bad_split = MoveDescriptor::l_family(MoveKind::RlOver, 1, 1, 1);
        assert!(apply_rl_move(&a, &bad_split).is_err());
        let wrong_kind = MoveDescriptor::l_family(MoveKind::LOver, 0, 1, 1);
        assert!(apply_rl_move(&a, &wrong_kind).is_err());
        assert!(apply_move(&a, &MoveDescriptor::new(MoveKind::Conjugation)).is_err());
    }

    #[test]
    fn rm_move_examples() {
        let r = apply_rm_move(&FramedBraid::identity(1), 1).unwrap();
        let expected = FramedBraid::normalize(
            &BraidWord::new(2, [Letter::tau(1, -1), Letter::sigma(1, 1)]).unwrap(),
        );
        assert!(r.framed_equal(&expected).unwrap());

        let a = FramedBraid::new(vec![0, 2], sig(2, &[(1, 3)])).unwrap();
        let before = closure_signature(&a).unwrap();
        for sign in [1, -1] {
            let rm = closure_signature(&apply_rm_move(&a, sign).unwrap()).unwrap();
            assert!(signatures_match(&before, &rm));
            let m = closure_signature(&apply_m_move(&a, sign).unwrap()).unwrap();
            assert_eq!(m.components[0].framing, before.components[0].framing + sign);
        }
    }

    #[test]
    fn conjugate_examples() {
        let a = FramedBraid::normalize(
            &BraidWord::new(2, [Letter::tau(1, 1), Letter::sigma(1, 1)]).unwrap(),
        );
        assert!(conjugate(&a, &FramedBraid::identity(2))
            .unwrap()
            .framed_equal(&a)
            .unwrap());
        let g = FramedBraid::from_braid(sig(2, &[(1, 1)])).unwrap();
        let c = conjugate(&a, &g).unwrap();
        let expected = FramedBraid::normalize(
            &BraidWord::new(2, [Letter::tau(2, 1), Letter::sigma(1, 1)]).unwrap(),
        );
        assert!(c.framed_equal(&expected).unwrap());
    }

    #[test]
    fn tau_chain_small_cases() {
        let id = FramedBraid::identity(2);
        let chain = tau_conjugation_as_rl_sequence(&id, 1, 1).unwrap();
        assert!(chain.last().unwrap().element.is_identity());

        let a = FramedBraid::normalize(
            &BraidWord::new(2, [Letter::tau(1, 1), Letter::sigma(1, 1)]).unwrap(),
        );
        for exp in [1, -1] {
            let chain = tau_conjugation_as_rl_sequence(&a, 1, exp).unwrap();
            let t = FramedBraid::normalize(&BraidWord::tau(2, 1, exp).unwrap());
            let target = conjugate(&a, &t).unwrap();
            assert!(chain.last().unwrap().element.framed_equal(&target).unwrap());
            assert!(chain[1].element.framed_equal(&chain[2].element).unwrap());
            let base = closure_signature(&a).unwrap();
            for link in &chain {
                assert!(signatures_match(
                    &base,
                    &closure_signature(&link.element).unwrap()
                ));
            }
        }
        assert!(tau_conjugation_as_rl_sequence(&a, 3, 1).is_err());
    }

    #[test]
    fn framing_transfer_examples() {
        let id = Permutation::identity(3);
        assert_eq!(
            solve_framing_transfer(&id, &[1, 2, 3], &[1, 2, 3]).unwrap(),
            Some(vec![0, 0, 0])
        );
        let swap = Permutation::transposition(2, 1);
        let r = solve_framing_transfer(&swap, &[2, 0], &[1, 1])
            .unwrap()
            .unwrap();
        assert_eq!(r, vec![0, -1]);
        for i in 1..=2 {
            assert_eq!(
                [2, 0][i - 1] - r[i - 1],
                [1, 1][i - 1] - r[swap.image(i) - 1]
            );
        }
        assert_eq!(
            solve_framing_transfer(&swap, &[2, 0], &[0, 0]).unwrap(),
            None
        );
        assert!(solve_framing_transfer(&swap, &[2], &[0, 0]).is_err());
    }
}
