//! Randomized move-invariance checks.
//!
//! Each trial draws a framed braid, applies one move and compares
//! signatures. Trial `k` uses its own ChaCha stream `k` of the configured
//! seed, so a report depends only on the configuration, not on scheduling.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::closure::{closure_signature_with, signatures_match, FramingConvention};
use crate::error::{BraidError, Result};
use crate::framed::FramedBraid;
use crate::hilden::{framed_hilden_generator, FramedGen};
use crate::moves::{self, InsertSide, MoveDescriptor, MoveKind};
use crate::plat::{double_coset_move, plat_signature, plat_signatures_match, plat_stabilize};
use crate::word::{BraidWord, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FuzzMove {
    Rl,
    IntRl,
    Rm,
    Conj,
    TauConj,
    DoubleCoset,
    PlatStab,
    /// Plain L-move on a framed braid; expected to shift one framing.
    NegL,
    /// Plain Markov stabilisation on a framed braid; expected to shift one framing.
    NegM,
}

impl FuzzMove {
    pub const ALL: [FuzzMove; 9] = [
        FuzzMove::Rl,
        FuzzMove::IntRl,
        FuzzMove::Rm,
        FuzzMove::Conj,
        FuzzMove::TauConj,
        FuzzMove::DoubleCoset,
        FuzzMove::PlatStab,
        FuzzMove::NegL,
        FuzzMove::NegM,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FuzzMove::Rl => "rl",
            FuzzMove::IntRl => "int-rl",
            FuzzMove::Rm => "rm",
            FuzzMove::Conj => "conj",
            FuzzMove::TauConj => "tau-conj",
            FuzzMove::DoubleCoset => "double-coset",
            FuzzMove::PlatStab => "plat-stab",
            FuzzMove::NegL => "neg-l",
            FuzzMove::NegM => "neg-m",
        }
    }

    pub fn is_negative_control(self) -> bool {
        matches!(self, FuzzMove::NegL | FuzzMove::NegM)
    }

    fn is_plat(self) -> bool {
        matches!(self, FuzzMove::DoubleCoset | FuzzMove::PlatStab)
    }
}

impl fmt::Display for FuzzMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FuzzMove {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        FuzzMove::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown move {s:?}"))
    }
}

/// Parses `rl,int-rl=2,rm` into weighted moves (weight 1 when omitted).
pub fn parse_move_mix(text: &str) -> std::result::Result<Vec<(FuzzMove, u32)>, String> {
    text.split(',')
        .map(|item| {
            let item = item.trim();
            match item.split_once('=') {
                Some((name, w)) => {
                    let w: u32 = w
                        .trim()
                        .parse()
                        .map_err(|_| format!("bad weight in {item:?}"))?;
                    Ok((name.trim().parse()?, w))
                }
                None => Ok((item.parse()?, 1)),
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzConfig {
    pub seed: u64,
    pub trials: usize,
    /// Strand counts for closure moves, half strand counts for plat moves.
    pub n_range: (usize, usize),
    /// Number of letters in sampled braid parts.
    pub word_length_range: (usize, usize),
    pub move_mix: Vec<(FuzzMove, u32)>,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed: 0,
            trials: 1000,
            n_range: (1, 5),
            word_length_range: (0, 15),
            move_mix: vec![(FuzzMove::Rl, 1), (FuzzMove::IntRl, 1)],
        }
    }
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(BraidError::InvalidDescriptor(m.into()));
        if self.trials == 0 {
            return bad("trials must be at least 1");
        }
        if self.n_range.0 == 0 || self.n_range.0 > self.n_range.1 {
            return bad("n range must be nonempty and start at 1 or more");
        }
        if self.word_length_range.0 > self.word_length_range.1 {
            return bad("word length range must be nonempty");
        }
        if self.move_mix.iter().map(|&(_, w)| w as u64).sum::<u64>() == 0 {
            return bad("move mix needs a positive weight");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub trial: usize,
    pub seed: u64,
    pub kind: FuzzMove,
    pub word: String,
    pub strands: usize,
    pub descriptor: String,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct KindCounts {
    pub trials: usize,
    pub passes: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzReport {
    pub config: FuzzConfig,
    pub passes: usize,
    pub failures: usize,
    pub by_move: BTreeMap<FuzzMove, KindCounts>,
    /// Framing change seen on the affected component in negative-control trials.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub framing_drift: BTreeMap<i64, usize>,
    pub first_counterexample: Option<Counterexample>,
}

impl FuzzReport {
    pub fn all_passed(&self) -> bool {
        self.failures == 0
    }
}

/// Uniform letters over valid `σ` indices, exponents in `[-3, 3] \ {0}`,
/// framings in `[-3, 3]`.
pub fn sample_framed_braid<R: Rng>(rng: &mut R, n: usize, len: usize) -> FramedBraid {
    let lambda = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
    let mut beta = BraidWord::identity(n);
    if n >= 2 {
        for _ in 0..len {
            let i = rng.gen_range(1..n);
            let mut e = rng.gen_range(1..=3);
            if rng.gen_bool(0.5) {
                e = -e;
            }
            beta.push(Letter::sigma(i, e)).expect("index in range");
        }
    }
    FramedBraid::new(lambda, beta).expect("tau-free word with matching framing")
}

/// A product of up to `max_len` built-in framed Hilden generators of
/// `RH_{2m}` and their inverses.
pub fn sample_hilden_product<R: Rng>(
    rng: &mut R,
    m: usize,
    max_len: usize,
) -> (FramedBraid, Vec<String>) {
    let mut gens: Vec<(String, FramedBraid)> = Vec::new();
    for i in 1..m {
        gens.push((
            format!("p_{i}"),
            framed_hilden_generator(FramedGen::P, i, m).expect("in range"),
        ));
        gens.push((
            format!("s_{i}"),
            framed_hilden_generator(FramedGen::S, i, m).expect("in range"),
        ));
    }
    for k in 1..=m {
        gens.push((
            format!("theta_{k}"),
            framed_hilden_generator(FramedGen::Theta, k, m).expect("in range"),
        ));
        gens.push((
            format!("omega_{k}"),
            framed_hilden_generator(FramedGen::Omega, k, m).expect("in range"),
        ));
    }
    let len = rng.gen_range(0..=max_len);
    let mut h = FramedBraid::identity(2 * m);
    let mut names = Vec::with_capacity(len);
    for _ in 0..len {
        let (name, g) = gens.choose(rng).expect("at least one generator");
        let inv = rng.gen_bool(0.5);
        let g = if inv { g.inverse() } else { g.clone() };
        names.push(if inv {
            format!("{name}^-1")
        } else {
            name.clone()
        });
        h = h.multiply(&g).expect("same strand count");
    }
    (h, names)
}

fn pick_move<R: Rng>(rng: &mut R, mix: &[(FuzzMove, u32)]) -> FuzzMove {
    let total: u64 = mix.iter().map(|&(_, w)| w as u64).sum();
    let mut x = rng.gen_range(0..total);
    for &(m, w) in mix {
        if x < w as u64 {
            return m;
        }
        x -= w as u64;
    }
    unreachable!("weights sum to total")
}

fn sign<R: Rng>(rng: &mut R) -> i64 {
    if rng.gen_bool(0.5) {
        1
    } else {
        -1
    }
}

struct Trial {
    kind: FuzzMove,
    input: FramedBraid,
    descriptor: String,
    outcome: std::result::Result<Option<i64>, String>,
}

fn run_trial(config: &FuzzConfig, trial: usize) -> Trial {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(trial as u64);
    let kind = pick_move(&mut rng, &config.move_mix);
    let n = rng.gen_range(config.n_range.0..=config.n_range.1);
    let len = rng.gen_range(config.word_length_range.0..=config.word_length_range.1);
    let strands = if kind.is_plat() { 2 * n } else { n };
    let input = sample_framed_braid(&mut rng, strands, len);
    let (descriptor, outcome) = match apply(kind, &input, &mut rng, config) {
        Ok((d, o)) => (d, o),
        Err(e) => (String::new(), Err(format!("error: {e}"))),
    };
    Trial {
        kind,
        input,
        descriptor,
        outcome,
    }
}

type Outcome = std::result::Result<Option<i64>, String>;

fn closure_check(
    a: &FramedBraid,
    b: &FramedBraid,
    convention: FramingConvention,
) -> Result<Outcome> {
    let (x, y) = (
        closure_signature_with(a, convention)?,
        closure_signature_with(b, convention)?,
    );
    Ok(if signatures_match(&x, &y) {
        Ok(None)
    } else {
        Err(format!("signature changed: {x:?} -> {y:?}"))
    })
}

fn drift_check(a: &FramedBraid, b: &FramedBraid, new_strand: usize, sign: i64) -> Result<Outcome> {
    let before = closure_signature_with(a, FramingConvention::Blackboard)?;
    let after = closure_signature_with(b, FramingConvention::Blackboard)?;
    let c = after
        .component_of(new_strand)
        .ok_or_else(|| BraidError::Internal(format!("strand {new_strand} not in any component")))?;
    Ok(
        if signatures_match(&after.with_framing_shift(c, -sign), &before)
            && !signatures_match(&after, &before)
        {
            Ok(Some(sign))
        } else {
            Err(format!(
                "expected framing drift {sign} on the component of strand {new_strand}"
            ))
        },
    )
}

fn random_l_family<R: Rng>(rng: &mut R, kind: MoveKind, a: &FramedBraid) -> MoveDescriptor {
    let kind = match (kind, rng.gen_bool(0.5)) {
        (MoveKind::RlOver, false) => MoveKind::RlUnder,
        (MoveKind::IntRlOver, false) => MoveKind::IntRlUnder,
        (MoveKind::LOver, false) => MoveKind::LUnder,
        (k, _) => k,
    };
    let split = rng.gen_range(0..=a.spell().unit_len());
    let i = rng.gen_range(1..=a.strands());
    let side = if rng.gen_bool(0.5) {
        InsertSide::After
    } else {
        InsertSide::Before
    };
    MoveDescriptor::l_family(kind, split, i, sign(rng)).with_side(side)
}

fn apply<R: Rng>(
    kind: FuzzMove,
    a: &FramedBraid,
    rng: &mut R,
    config: &FuzzConfig,
) -> Result<(String, Outcome)> {
    let (lo, hi) = config.word_length_range;
    match kind {
        FuzzMove::Rl => {
            let d = random_l_family(rng, MoveKind::RlOver, a);
            let b = moves::apply_rl_move(a, &d)?;
            Ok((
                format!("{d:?}"),
                closure_check(a, &b, FramingConvention::Blackboard)?,
            ))
        }
        FuzzMove::IntRl => {
            let d = random_l_family(rng, MoveKind::IntRlOver, a).with_k(rng.gen_range(-1..=1));
            let b = moves::apply_integer_rl_move(a, &d)?;
            Ok((
                format!("{d:?}"),
                closure_check(a, &b, FramingConvention::Integer)?,
            ))
        }
        FuzzMove::Rm => {
            let s = sign(rng);
            let b = moves::apply_rm_move(a, s)?;
            Ok((
                format!("rm sign {s}"),
                closure_check(a, &b, FramingConvention::Blackboard)?,
            ))
        }
        FuzzMove::Conj => {
            let len = rng.gen_range(lo..=hi);
            let g = sample_framed_braid(rng, a.strands(), len);
            let b = moves::conjugate(a, &g)?;
            Ok((
                format!("conjugate by {g}"),
                closure_check(a, &b, FramingConvention::Blackboard)?,
            ))
        }
        FuzzMove::TauConj => {
            let i = rng.gen_range(1..=a.strands());
            let exp = sign(rng);
            let chain = moves::tau_conjugation_as_rl_sequence(a, i, exp)?;
            let desc = format!("tau conjugation i {i} exp {exp}");
            let target = moves::conjugate(
                a,
                &FramedBraid::normalize(&BraidWord::tau(a.strands(), i, exp)?),
            )?;
            if !chain
                .last()
                .expect("nonempty")
                .element
                .framed_equal(&target)?
            {
                return Ok((desc, Err("chain does not end at the conjugate".into())));
            }
            if !chain[1].element.framed_equal(&chain[2].element)? {
                return Ok((desc, Err("isotopy step changes the element".into())));
            }
            for link in &chain {
                if let Err(e) = closure_check(a, &link.element, FramingConvention::Blackboard)? {
                    return Ok((desc, Err(e)));
                }
            }
            Ok((desc, Ok(None)))
        }
        FuzzMove::DoubleCoset => {
            let m = a.strands() / 2;
            let (h1, n1) = sample_hilden_product(rng, m, 6);
            let (h2, n2) = sample_hilden_product(rng, m, 6);
            let b = double_coset_move(a, &h1, &h2)?;
            let (x, y) = (plat_signature(a)?, plat_signature(&b)?);
            let desc = format!("h1 = [{}], h2 = [{}]", n1.join(" "), n2.join(" "));
            let outcome = if plat_signatures_match(&x, &y) {
                Ok(None)
            } else {
                Err(format!("plat signature changed: {x:?} -> {y:?}"))
            };
            Ok((desc, outcome))
        }
        FuzzMove::PlatStab => {
            let s = sign(rng);
            let b = plat_stabilize(a, s)?;
            let (x, y) = (plat_signature(a)?, plat_signature(&b)?);
            let outcome = if plat_signatures_match(&x, &y) {
                Ok(None)
            } else {
                Err(format!("plat signature changed: {x:?} -> {y:?}"))
            };
            Ok((format!("plat stabilization sign {s}"), outcome))
        }
        FuzzMove::NegL => {
            let d = random_l_family(rng, MoveKind::LOver, a);
            let b = FramedBraid::normalize(&moves::apply_l_move(&a.spell(), &d)?);
            let new_strand = match d.side {
                InsertSide::After => d.index + 1,
                InsertSide::Before => d.index,
            };
            Ok((format!("{d:?}"), drift_check(a, &b, new_strand, d.sign)?))
        }
        FuzzMove::NegM => {
            let s = sign(rng);
            let b = moves::apply_m_move(a, s)?;
            Ok((
                format!("m sign {s}"),
                drift_check(a, &b, a.strands() + 1, s)?,
            ))
        }
    }
}

pub fn fuzz(config: &FuzzConfig) -> Result<FuzzReport> {
    config.validate()?;
    let trials: Vec<Trial> = (0..config.trials)
        .into_par_iter()
        .map(|t| run_trial(config, t))
        .collect();
    let mut report = FuzzReport {
        config: config.clone(),
        passes: 0,
        failures: 0,
        by_move: BTreeMap::new(),
        framing_drift: BTreeMap::new(),
        first_counterexample: None,
    };
    for (index, t) in trials.into_iter().enumerate() {
        let counts = report.by_move.entry(t.kind).or_default();
        counts.trials += 1;
        match t.outcome {
            Ok(drift) => {
                counts.passes += 1;
                report.passes += 1;
                if let Some(d) = drift {
                    *report.framing_drift.entry(d).or_default() += 1;
                }
            }
            Err(detail) => {
                report.failures += 1;
                report.first_counterexample.get_or_insert(Counterexample {
                    trial: index,
                    seed: config.seed,
                    kind: t.kind,
                    word: t.input.to_string(),
                    strands: t.input.strands(),
                    descriptor: t.descriptor,
                    detail,
                });
            }
        }
    }
    Ok(report)
}
