//! Invariants of the standard closure of a framed braid: components, their
//! framings and the linking matrix.
//!
//! These form a necessary invariant set. Equal signatures do not prove two
//! closures isotopic; different signatures do prove they are not.

use serde::Serialize;

use crate::canonical::{canonicalize, CanonicalKey};
use crate::error::{BraidError, Result};
use crate::framed::FramedBraid;

/// How a component's framing is read off a closed framed braid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FramingConvention {
    /// Ribbon twists plus the writhe of the core (framing as drawn).
    #[default]
    Blackboard,
    /// Ribbon twists only; crossings carry no framing.
    Integer,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    /// Top positions of the strands making up this component, ascending.
    pub strands: Vec<usize>,
    pub framing: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkSignature {
    pub component_count: usize,
    /// Components in canonical order.
    pub components: Vec<Component>,
    /// `linking[a][b]` is the linking number of components `a` and `b`.
    pub linking: Vec<Vec<i64>>,
    #[serde(skip)]
    pub canonical_key: CanonicalKey,
}

impl LinkSignature {
    pub fn total_framing(&self) -> i64 {
        self.components.iter().map(|c| c.framing).sum()
    }

    /// The component containing the strand that starts at top position `strand`.
    pub fn component_of(&self, strand: usize) -> Option<usize> {
        self.components
            .iter()
            .position(|c| c.strands.contains(&strand))
    }

    /// Linking matrix with signs dropped; meaningful when component
    /// orientations are arbitrary.
    pub fn abs_linking(&self) -> Vec<Vec<i64>> {
        self.linking
            .iter()
            .map(|row| row.iter().map(|l| l.abs()).collect())
            .collect()
    }

    /// Same signature with one component's framing shifted, re-canonicalized.
    pub fn with_framing_shift(&self, component: usize, delta: i64) -> LinkSignature {
        let mut components = self.components.clone();
        components[component].framing += delta;
        assemble(components, self.linking.clone())
    }
}

pub fn closure_signature(a: &FramedBraid) -> Result<LinkSignature> {
    closure_signature_with(a, FramingConvention::Blackboard)
}

pub fn closure_signature_with(
    a: &FramedBraid,
    convention: FramingConvention,
) -> Result<LinkSignature> {
    let n = a.strands();
    let cycles = a.permutation().cycles();
    let mut owner = vec![0usize; n + 1];
    for (c, cycle) in cycles.iter().enumerate() {
        for &s in cycle {
            owner[s] = c;
        }
    }
    let count = cycles.len();
    let mut self_writhe = vec![0i64; count];
    let mut between = vec![vec![0i64; count]; count];
    for x in a.beta().crossings() {
        let (ca, cb) = (owner[x.left], owner[x.right]);
        if ca == cb {
            self_writhe[ca] += x.sign;
        } else {
            between[ca][cb] += x.sign;
            between[cb][ca] += x.sign;
        }
    }

    let mut linking = vec![vec![0i64; count]; count];
    for i in 0..count {
        for j in 0..count {
            if between[i][j] % 2 != 0 {
                return Err(BraidError::Internal(format!(
                    "odd crossing sum {} between closure components",
                    between[i][j]
                )));
            }
            linking[i][j] = between[i][j] / 2;
        }
    }

    let components = cycles
        .into_iter()
        .enumerate()
        .map(|(c, mut strands)| {
            let twists: i64 = strands.iter().map(|&s| a.lambda()[s - 1]).sum();
            let framing = match convention {
                FramingConvention::Blackboard => twists + self_writhe[c],
                FramingConvention::Integer => twists,
            };
            strands.sort_unstable();
            Component { strands, framing }
        })
        .collect();
    Ok(assemble(components, linking))
}

pub(crate) fn assemble(components: Vec<Component>, linking: Vec<Vec<i64>>) -> LinkSignature {
    let framings: Vec<i64> = components.iter().map(|c| c.framing).collect();
    let (key, order) = canonicalize(&framings, &linking);
    let components: Vec<Component> = order.iter().map(|&i| components[i].clone()).collect();
    LinkSignature {
        component_count: components.len(),
        components,
        linking: key.matrix.clone(),
        canonical_key: key,
    }
}

/// Framing of a closed framed braid whose closure is a knot: the exponent
/// sum of the spelled word.
pub fn knot_framing(a: &FramedBraid) -> Result<i64> {
    let components = a.permutation().cycles().len();
    if components != 1 {
        return Err(BraidError::NotAKnot { components });
    }
    Ok(a.exponent_sum())
}

pub fn signatures_match(x: &LinkSignature, y: &LinkSignature) -> bool {
    x.canonical_key == y.canonical_key
}
