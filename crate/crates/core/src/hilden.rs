//! Generators of the Hilden group `H_{2n}`, the framed Hilden group
//! `RH_{2n}` and the pure framed Hilden group `PRH_{2n}` inside `RB_{2n}`,
//! and exhaustive verification of their defining relations.
//!
//! Relations are data: each instance is a pair of words over generator
//! names, evaluated against a [`GeneratorDictionary`] and compared with
//! [`FramedBraid::framed_equal`].

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::dsl;
use crate::error::{BraidError, Result};
use crate::framed::{FramedBraid, FramedNormalForm};
use crate::word::{BraidWord, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalGen {
    P,
    S,
    Theta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FramedGen {
    P,
    S,
    Theta,
    Omega,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PureGen {
    G,
    Omega,
}

fn element(n: usize, letters: &[Letter]) -> Result<FramedBraid> {
    Ok(FramedBraid::normalize(&BraidWord::new(
        2 * n,
        letters.iter().copied(),
    )?))
}

fn check_index(i: usize, max: usize, what: &str) -> Result<()> {
    if i == 0 || i > max {
        return Err(BraidError::InvalidDescriptor(format!(
            "{what} index {i} out of range 1..={max}"
        )));
    }
    Ok(())
}

/// `P_i = σ_{2i}σ_{2i-1}σ_{2i+1}^{-1}σ_{2i}^{-1}`, `S_j = σ_{2j}σ_{2j-1}σ_{2j+1}σ_{2j}`,
/// `Θ_k = σ_{2k-1}` in `B_{2n}`, with zero framing.
pub fn hilden_generator(g: ClassicalGen, i: usize, n: usize) -> Result<FramedBraid> {
    let s = Letter::sigma;
    match g {
        ClassicalGen::P => {
            check_index(i, n.saturating_sub(1), "P")?;
            element(
                n,
                &[s(2 * i, 1), s(2 * i - 1, 1), s(2 * i + 1, -1), s(2 * i, -1)],
            )
        }
        ClassicalGen::S => {
            check_index(i, n.saturating_sub(1), "S")?;
            element(
                n,
                &[s(2 * i, 1), s(2 * i - 1, 1), s(2 * i + 1, 1), s(2 * i, 1)],
            )
        }
        ClassicalGen::Theta => {
            check_index(i, n, "Theta")?;
            element(n, &[s(2 * i - 1, 1)])
        }
    }
}

/// `p_i`, `s_j` as the classical words, `θ_k = t_{2k-1}σ_{2k-1}`,
/// `ω_λ = t_{2λ-1}t_{2λ}^{-1}`.
pub fn framed_hilden_generator(g: FramedGen, i: usize, n: usize) -> Result<FramedBraid> {
    match g {
        FramedGen::P => hilden_generator(ClassicalGen::P, i, n),
        FramedGen::S => hilden_generator(ClassicalGen::S, i, n),
        FramedGen::Theta => {
            check_index(i, n, "theta")?;
            element(n, &[Letter::tau(2 * i - 1, 1), Letter::sigma(2 * i - 1, 1)])
        }
        FramedGen::Omega => {
            check_index(i, n, "omega")?;
            element(n, &[Letter::tau(2 * i - 1, 1), Letter::tau(2 * i, -1)])
        }
    }
}

/// `g_k = t_{2k-1}t_{2k}σ_{2k-1}^2` and `ω_λ`.
pub fn pure_framed_generator(g: PureGen, k: usize, n: usize) -> Result<FramedBraid> {
    match g {
        PureGen::G => {
            check_index(k, n, "g")?;
            element(
                n,
                &[
                    Letter::tau(2 * k - 1, 1),
                    Letter::tau(2 * k, 1),
                    Letter::sigma(2 * k - 1, 2),
                ],
            )
        }
        PureGen::Omega => framed_hilden_generator(FramedGen::Omega, k, n),
    }
}

/// Generator names mapped to elements of `RB_{2n}`.
///
/// Built-in names are `P_i`, `S_i`, `Theta_i`, `p_i`, `s_i`, `theta_i`,
/// `omega_i` and `g_i`. Pure generators `p_{i,j}`, `x_{i,j}`, `y_{i,j}` have
/// no built-in words and must be inserted by the caller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorDictionary {
    n: usize,
    entries: BTreeMap<String, FramedBraid>,
}

impl GeneratorDictionary {
    pub fn empty(n: usize) -> Self {
        GeneratorDictionary {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn builtin(n: usize) -> Self {
        let mut d = Self::empty(n);
        let mut add = |name: String, b: Result<FramedBraid>| {
            d.entries.insert(name, b.expect("built-in index in range"));
        };
        for i in 1..n {
            add(format!("P_{i}"), hilden_generator(ClassicalGen::P, i, n));
            add(format!("S_{i}"), hilden_generator(ClassicalGen::S, i, n));
            add(
                format!("p_{i}"),
                framed_hilden_generator(FramedGen::P, i, n),
            );
            add(
                format!("s_{i}"),
                framed_hilden_generator(FramedGen::S, i, n),
            );
        }
        for k in 1..=n {
            add(
                format!("Theta_{k}"),
                hilden_generator(ClassicalGen::Theta, k, n),
            );
            add(
                format!("theta_{k}"),
                framed_hilden_generator(FramedGen::Theta, k, n),
            );
            add(
                format!("omega_{k}"),
                framed_hilden_generator(FramedGen::Omega, k, n),
            );
            add(format!("g_{k}"), pure_framed_generator(PureGen::G, k, n));
        }
        d
    }

    /// Half the strand count.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, name: &str) -> Option<&FramedBraid> {
        self.entries.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn insert(&mut self, name: impl Into<String>, b: FramedBraid) -> Result<()> {
        if b.strands() != 2 * self.n {
            return Err(BraidError::StrandMismatch {
                left: 2 * self.n,
                right: b.strands(),
            });
        }
        self.entries.insert(name.into(), b);
        Ok(())
    }

    /// Reads `name = word` lines (word in the text syntax of [`crate::dsl`]).
    /// Blank lines and lines starting with `#` are ignored. Offsets in parse
    /// errors are relative to the whole text.
    pub fn load(&mut self, text: &str) -> Result<()> {
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let line_start = offset;
            offset += line.len();
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let Some(eq) = line.find('=') else {
                return Err(BraidError::Parse {
                    offset: line_start,
                    message: "expected `name = word`".into(),
                });
            };
            let name = line[..eq].trim();
            if name.is_empty() {
                return Err(BraidError::Parse {
                    offset: line_start,
                    message: "empty generator name".into(),
                });
            }
            let body = line[eq + 1..].trim_end_matches(['\n', '\r']);
            let word = dsl::parse(body, 2 * self.n).map_err(|e| match e {
                BraidError::Parse { offset, message } => BraidError::Parse {
                    offset: line_start + eq + 1 + offset,
                    message,
                },
                other => other,
            })?;
            self.insert(name, FramedBraid::normalize(&word))?;
        }
        Ok(())
    }
}

/// `name^exp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub name: String,
    pub exp: i64,
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 1 {
            write!(f, "{}", self.name)
        } else {
            write!(f, "{}^{}", self.name, self.exp)
        }
    }
}

/// One instance of a relation `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
    /// Set when the instance encodes a reading of an ambiguous source line.
    pub note: Option<&'static str>,
}

impl Relation {
    pub fn id(&self) -> String {
        let side = |ts: &[Term]| ts.iter().map(Term::to_string).collect::<Vec<_>>().join(" ");
        format!("{} = {}", side(&self.lhs), side(&self.rhs))
    }

    fn names(&self) -> impl Iterator<Item = &str> {
        self.lhs.iter().chain(&self.rhs).map(|t| t.name.as_str())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub relation_id: String,
    pub holds: bool,
    pub skipped: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub missing: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
    #[serde(skip)]
    pub lhs: Option<FramedBraid>,
    #[serde(skip)]
    pub rhs: Option<FramedBraid>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Relations of `H_{2n}` on `P`, `S`, `Θ`.
    Hilden,
    /// Relations of `RH_{2n}`: the Hilden relations on `p`, `s`, `θ` and the
    /// `ω` relations.
    FramedHilden,
    /// Relations of `PRH_{2n}`.
    PureFramed,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "hilden_1" => Ok(Suite::Hilden),
            "framed_hilden" => Ok(Suite::FramedHilden),
            "pure_framed" => Ok(Suite::PureFramed),
            _ => Err(format!(
                "unknown suite {s:?} (expected hilden_1, framed_hilden or pure_framed)"
            )),
        }
    }
}

fn t(name: String) -> Term {
    Term { name, exp: 1 }
}

fn ti(name: String) -> Term {
    Term { name, exp: -1 }
}

fn rel(lhs: Vec<Term>, rhs: Vec<Term>) -> Relation {
    Relation {
        lhs,
        rhs,
        note: None,
    }
}

fn commute(a: String, b: String) -> Relation {
    rel(vec![t(a.clone()), t(b.clone())], vec![t(b), t(a)])
}

/// The `H_{2n}` relations with generator names `{p}_i`, `{s}_i`, `{th}_i`.
fn hilden_relations(n: usize, p: &str, s: &str, th: &str) -> Vec<Relation> {
    let p = |i: usize| format!("{p}_{i}");
    let s = |i: usize| format!("{s}_{i}");
    let th = |i: usize| format!("{th}_{i}");
    let mut out = Vec::new();
    let m = n.saturating_sub(1);
    for i in 1..=m {
        for j in 1..=m {
            let d = i.abs_diff(j);
            if d > 1 {
                out.push(commute(p(i), p(j)));
                out.push(commute(s(i), s(j)));
                out.push(commute(p(i), s(j)));
            } else if d == 1 {
                out.push(rel(
                    vec![t(p(i)), t(p(j)), t(p(i))],
                    vec![t(p(j)), t(p(i)), t(p(j))],
                ));
                out.push(rel(
                    vec![t(s(i)), t(s(j)), t(s(i))],
                    vec![t(s(j)), t(s(i)), t(s(j))],
                ));
            }
        }
    }
    for i in 1..m {
        out.push(rel(
            vec![t(p(i)), t(s(i + 1)), t(s(i))],
            vec![t(s(i + 1)), t(s(i)), t(p(i + 1))],
        ));
        out.push(rel(
            vec![t(p(i + 1)), t(p(i)), t(s(i + 1))],
            vec![t(s(i)), t(p(i + 1)), t(p(i))],
        ));
        out.push(rel(
            vec![t(p(i + 1)), t(s(i)), t(s(i + 1))],
            vec![t(s(i)), t(s(i + 1)), t(p(i))],
        ));
    }
    for i in 1..=m {
        out.push(rel(
            vec![t(p(i)), t(th(i)), t(s(i)), t(p(i))],
            vec![t(s(i)), t(th(i))],
        ));
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            out.push(commute(p(i), th(j)));
            out.push(commute(s(i), th(j)));
        }
        out.push(rel(vec![t(p(i)), t(th(i + 1))], vec![t(th(i)), t(p(i))]));
        for (j, k) in [(i, i + 1), (i + 1, i)] {
            out.push(rel(vec![t(s(i)), t(th(j))], vec![t(th(k)), t(s(i))]));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            out.push(commute(th(i), th(j)));
        }
    }
    out
}

fn omega_relations(n: usize) -> Vec<Relation> {
    let w = |i: usize| format!("omega_{i}");
    let mut out = Vec::new();
    for j in 1..n {
        for name in [format!("p_{j}"), format!("s_{j}")] {
            for i in 1..=n {
                let image = if i == j {
                    j + 1
                } else if i == j + 1 {
                    j
                } else {
                    i
                };
                out.push(rel(
                    vec![t(name.clone()), t(w(i))],
                    vec![t(w(image)), t(name.clone())],
                ));
            }
        }
    }
    for j in 1..=n {
        for i in 1..=n {
            let th = format!("theta_{j}");
            if i == j {
                out.push(rel(vec![t(th.clone()), t(w(i))], vec![ti(w(i)), t(th)]));
            } else {
                out.push(commute(th, w(i)));
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            out.push(commute(w(i), w(j)));
        }
    }
    out
}

/// Distinct and a rotation of an increasing sequence.
pub fn cyclically_ordered(idx: &[usize]) -> bool {
    let m = idx.len();
    let distinct = idx.iter().collect::<HashSet<_>>().len() == m;
    let descents = (0..m).filter(|&a| idx[a] > idx[(a + 1) % m]).count();
    distinct && descents <= 1
}

/// Allowed `(α, β, γ)` for `α_{ij} β_{ik} γ_{jk} = β_{ik} γ_{jk} α_{ij}`,
/// selected by which rotation of an increasing triple `(i, j, k)` is.
pub fn triple_types(i: usize, j: usize, k: usize) -> &'static [[char; 3]] {
    const IJK: [[char; 3]; 8] = [
        ['p', 'p', 'p'],
        ['p', 'y', 'y'],
        ['x', 'p', 'p'],
        ['x', 'x', 'p'],
        ['x', 'y', 'y'],
        ['y', 'p', 'p'],
        ['y', 'p', 'x'],
        ['y', 'y', 'y'],
    ];
    const JKI: [[char; 3]; 8] = [
        ['p', 'p', 'p'],
        ['p', 'x', 'y'],
        ['x', 'p', 'p'],
        ['x', 'p', 'x'],
        ['x', 'x', 'y'],
        ['y', 'p', 'p'],
        ['y', 'x', 'y'],
        ['y', 'y', 'p'],
    ];
    const KIJ: [[char; 3]; 8] = [
        ['p', 'p', 'p'],
        ['p', 'x', 'x'],
        ['x', 'p', 'p'],
        ['x', 'x', 'x'],
        ['x', 'y', 'p'],
        ['y', 'p', 'p'],
        ['y', 'p', 'y'],
        ['y', 'x', 'x'],
    ];
    if i < j && j < k {
        &IJK
    } else if j < k && k < i {
        &JKI
    } else if k < i && i < j {
        &KIJ
    } else {
        &[]
    }
}

const CONJUGATION_NOTE: &str =
    "the exponent written ]-1 on p_{jk} is read as -1 (conjugation by p_{jk})";

fn pure_relations(n: usize) -> Vec<Relation> {
    let g = |k: usize| format!("g_{k}");
    let w = |k: usize| format!("omega_{k}");
    let a = |c: char, i: usize, j: usize| format!("{c}_{{{i},{j}}}");
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in 1..=n {
                out.push(commute(a('p', i, j), g(k)));
                if k != i {
                    out.push(commute(a('x', i, j), g(k)));
                }
                if k != j {
                    out.push(commute(a('y', i, j), g(k)));
                }
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            out.push(commute(g(i), g(j)));
        }
    }
    let kinds = ['p', 'x', 'y'];
    let quads = (1..=n).flat_map(|i| {
        (1..=n).flat_map(move |j| (1..=n).flat_map(move |k| (1..=n).map(move |l| [i, j, k, l])))
    });
    for [i, j, k, l] in quads.filter(|q| cyclically_ordered(q)) {
        for al in kinds {
            for be in kinds {
                out.push(commute(a(al, i, j), a(be, k, l)));
                let pjk = a('p', j, k);
                let conj = vec![t(pjk.clone()), t(a(be, j, l)), ti(pjk)];
                let mut lhs = vec![t(a(al, i, k))];
                lhs.extend(conj.clone());
                let mut rhs = conj;
                rhs.push(t(a(al, i, k)));
                out.push(Relation {
                    lhs,
                    rhs,
                    note: Some(CONJUGATION_NOTE),
                });
            }
        }
    }
    let triples = (1..=n).flat_map(|i| (1..=n).flat_map(move |j| (1..=n).map(move |k| [i, j, k])));
    for [i, j, k] in triples.filter(|q| cyclically_ordered(q)) {
        for &[al, be, ga] in triple_types(i, j, k) {
            out.push(rel(
                vec![t(a(al, i, j)), t(a(be, i, k)), t(a(ga, j, k))],
                vec![t(a(be, i, k)), t(a(ga, j, k)), t(a(al, i, j))],
            ));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for c in ['x', 'y'] {
                out.push(rel(
                    vec![t(a(c, i, j)), t(a('p', i, j)), t(g(i))],
                    vec![t(a('p', i, j)), t(g(i)), t(a(c, i, j))],
                ));
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            out.push(commute(w(i), w(j)));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for c in kinds {
                    out.push(commute(w(i), a(c, k, j)));
                }
            }
        }
    }
    // ω and g commute: the ω kernel is a direct summand
    for i in 1..=n {
        for k in 1..=n {
            out.push(commute(w(i), g(k)));
        }
    }
    out
}

/// All relation instances of `suite` at half strand count `n`, in a fixed
/// order, before deduplication.
pub fn relation_instances(suite: Suite, n: usize) -> Vec<Relation> {
    match suite {
        Suite::Hilden => hilden_relations(n, "P", "S", "Theta"),
        Suite::FramedHilden => {
            let mut out = hilden_relations(n, "p", "s", "theta");
            out.extend(omega_relations(n));
            out
        }
        Suite::PureFramed => pure_relations(n),
    }
}

fn evaluate(dict: &GeneratorDictionary, terms: &[Term]) -> FramedBraid {
    terms
        .iter()
        .fold(FramedBraid::identity(2 * dict.n), |acc, term| {
            let g = dict.get(&term.name).expect("checked present").pow(term.exp);
            acc.multiply(&g)
                .expect("dictionary entries have 2n strands")
        })
}

/// Checks every relation against `dict`. Instances naming a missing
/// generator are reported as skipped. Instances whose two sides coincide,
/// as an unordered pair of normal forms, with an earlier instance are
/// dropped, as are exact repeats of a skipped instance.
pub fn verify_relations(dict: &GeneratorDictionary, relations: &[Relation]) -> Vec<RelationReport> {
    let evaluated: Vec<RelationReport> = relations
        .par_iter()
        .map(|r| {
            let mut missing: Vec<String> = r
                .names()
                .filter(|name| dict.get(name).is_none())
                .map(str::to_owned)
                .collect();
            missing.sort();
            missing.dedup();
            if !missing.is_empty() {
                return RelationReport {
                    relation_id: r.id(),
                    holds: false,
                    skipped: true,
                    missing,
                    note: r.note,
                    lhs: None,
                    rhs: None,
                };
            }
            let (lhs, rhs) = (evaluate(dict, &r.lhs), evaluate(dict, &r.rhs));
            RelationReport {
                relation_id: r.id(),
                holds: lhs.framed_equal(&rhs).expect("same strand count"),
                skipped: false,
                missing,
                note: r.note,
                lhs: Some(lhs),
                rhs: Some(rhs),
            }
        })
        .collect();

    let mut seen_pairs: HashSet<(FramedNormalForm, FramedNormalForm)> = HashSet::new();
    let mut seen_ids: HashSet<String> = HashSet::new();
    evaluated
        .into_iter()
        .filter(|rep| match (&rep.lhs, &rep.rhs) {
            (Some(l), Some(r)) => {
                let (a, b) = (l.normal_form(), r.normal_form());
                seen_pairs.insert(if a <= b { (a, b) } else { (b, a) })
            }
            _ => seen_ids.insert(rep.relation_id.clone()),
        })
        .collect()
}

pub fn verify_relation_suite(dict: &GeneratorDictionary, suite: Suite) -> Vec<RelationReport> {
    verify_relations(dict, &relation_instances(suite, dict.n))
}
