//! Plat closures of framed braids on `2n` strands: caps join top positions
//! `(2i-1, 2i)` and bottom positions `(2i-1, 2i)`.

use serde::Serialize;

use crate::canonical::{canonicalize, CanonicalKey};
use crate::closure::Component;
use crate::error::{BraidError, Result};
use crate::framed::FramedBraid;
use crate::word::{BraidWord, Letter};

/// One component of a plat closure: the strands it runs along (by top
/// position) and whether each is traversed downwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlatComponent {
    pub strands: Vec<(usize, bool)>,
}

/// Framings and unsigned linking numbers of a plat closure, components in
/// canonical order. A necessary invariant set, like
/// [`LinkSignature`](crate::closure::LinkSignature).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlatSignature {
    pub component_count: usize,
    pub components: Vec<Component>,
    pub abs_linking: Vec<Vec<i64>>,
    #[serde(skip)]
    pub canonical_key: CanonicalKey,
}

impl PlatSignature {
    fn assemble(components: Vec<Component>, abs_linking: Vec<Vec<i64>>) -> Self {
        let framings: Vec<i64> = components.iter().map(|c| c.framing).collect();
        let (key, order) = canonicalize(&framings, &abs_linking);
        PlatSignature {
            component_count: components.len(),
            components: order.iter().map(|&i| components[i].clone()).collect(),
            abs_linking: key.matrix.clone(),
            canonical_key: key,
        }
    }

    pub fn is_zero_framed_unlink(&self) -> bool {
        self.components.iter().all(|c| c.framing == 0) && self.is_unlinked()
    }

    fn is_unlinked(&self) -> bool {
        self.abs_linking.iter().flatten().all(|&l| l == 0)
    }
}

pub fn plat_signatures_match(x: &PlatSignature, y: &PlatSignature) -> bool {
    x.canonical_key == y.canonical_key
}

fn check_even(n: usize) -> Result<()> {
    if n == 0 || n % 2 == 1 {
        return Err(BraidError::OddStrandCount(n));
    }
    Ok(())
}

/// Components of the plat closure of `b` on `2n` strands, each traversed
/// from its smallest top endpoint, going down that strand first.
pub fn plat_components(b: &BraidWord) -> Result<Vec<PlatComponent>> {
    let n = b.strands();
    check_even(n)?;
    let p = b.permutation();
    let inv = p.inverse();
    let partner = |x: usize| if x % 2 == 1 { x + 1 } else { x - 1 };
    let mut seen = vec![false; n + 1];
    let mut out = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut strands = Vec::new();
        // walk: at a top endpoint we go down its strand, at a bottom endpoint up
        let mut top = start;
        loop {
            seen[top] = true;
            strands.push((top, true));
            let bottom = partner(p.image(top));
            let up = inv.image(bottom);
            seen[up] = true;
            strands.push((up, false));
            top = partner(up);
            if top == start {
                break;
            }
        }
        out.push(PlatComponent { strands });
    }
    Ok(out)
}

/// Framings and linking numbers of the plat closure with the traversal
/// orientation of [`plat_components`].
pub fn plat_signature(b: &FramedBraid) -> Result<PlatSignature> {
    plat_signature_reversed(b, &[])
}

/// As [`plat_signature`], with the listed components (indices into
/// [`plat_components`]) traversed backwards.
pub fn plat_signature_reversed(b: &FramedBraid, reversed: &[usize]) -> Result<PlatSignature> {
    let n = b.strands();
    let comps = plat_components(b.beta())?;
    let mut owner = vec![0usize; n + 1];
    let mut down = vec![true; n + 1];
    for (c, comp) in comps.iter().enumerate() {
        for &(s, d) in &comp.strands {
            owner[s] = c;
            down[s] = d != reversed.contains(&c);
        }
    }
    let count = comps.len();
    let mut framing: Vec<i64> = vec![0; count];
    for s in 1..=n {
        framing[owner[s]] += b.lambda()[s - 1];
    }
    let mut between = vec![vec![0i64; count]; count];
    for x in b.beta().crossings() {
        let sign = if down[x.left] == down[x.right] {
            x.sign
        } else {
            -x.sign
        };
        let (ca, cb) = (owner[x.left], owner[x.right]);
        if ca == cb {
            framing[ca] += sign;
        } else {
            between[ca][cb] += sign;
            between[cb][ca] += sign;
        }
    }
    let abs_linking = between
        .iter()
        .map(|row| row.iter().map(|v| (v / 2).abs()).collect())
        .collect();
    let components = comps
        .iter()
        .zip(framing)
        .map(|(comp, framing)| {
            let mut strands: Vec<usize> = comp.strands.iter().map(|&(s, _)| s).collect();
            strands.sort_unstable();
            Component { strands, framing }
        })
        .collect();
    Ok(PlatSignature::assemble(components, abs_linking))
}

/// Signed linking numbers between plat components in traversal order
/// (indices into [`plat_components`]).
pub fn plat_linking_oriented(b: &FramedBraid, reversed: &[usize]) -> Result<Vec<Vec<i64>>> {
    let comps = plat_components(b.beta())?;
    let mut owner = vec![0usize; b.strands() + 1];
    let mut down = vec![true; b.strands() + 1];
    for (c, comp) in comps.iter().enumerate() {
        for &(s, d) in &comp.strands {
            owner[s] = c;
            down[s] = d != reversed.contains(&c);
        }
    }
    let mut lk = vec![vec![0i64; comps.len()]; comps.len()];
    for x in b.beta().crossings() {
        let (ca, cb) = (owner[x.left], owner[x.right]);
        if ca != cb {
            let sign = if down[x.left] == down[x.right] {
                x.sign
            } else {
                -x.sign
            };
            lk[ca][cb] += sign;
            lk[cb][ca] += sign;
        }
    }
    Ok(lk
        .into_iter()
        .map(|row| row.into_iter().map(|v| v / 2).collect())
        .collect())
}

/// The plat closure of `b` in `RB_{2n}` is the framed unlink of `n`
/// components with zero framings: `n` components, framing 0, no linking.
pub fn plat_trivializes(b: &FramedBraid) -> Result<bool> {
    let sig = plat_signature(b)?;
    Ok(sig.component_count == b.strands() / 2 && sig.is_zero_framed_unlink())
}

/// Classical version of [`plat_trivializes`]: framings are ignored.
pub fn plat_trivializes_unframed(b: &BraidWord) -> Result<bool> {
    let sig = plat_signature(&FramedBraid::from_braid(b.without_tau())?)?;
    Ok(sig.component_count == b.strands() / 2 && sig.is_unlinked())
}

/// `h1 · b · h2`. Preserves the plat closure when `h1`, `h2` lie in the
/// framed Hilden group; that is not checked here.
pub fn double_coset_move(
    b: &FramedBraid,
    h1: &FramedBraid,
    h2: &FramedBraid,
) -> Result<FramedBraid> {
    h1.multiply(b)?.multiply(h2)
}

/// `RB_{2n} -> RB_{2n+2}`: adds a capped pair and hooks it to the last strand
/// with `t_{2n}^{∓1} σ_{2n}^{±1}`, leaving the plat closure unchanged.
pub fn plat_stabilize(b: &FramedBraid, sign: i64) -> Result<FramedBraid> {
    check_even(b.strands())?;
    if sign != 1 && sign != -1 {
        return Err(BraidError::InvalidDescriptor(format!(
            "sign must be ±1, got {sign}"
        )));
    }
    let n = b.strands();
    let mut w = b.spell().widen(2);
    w.push(Letter::tau(n, -sign))?;
    w.push(Letter::sigma(n, sign))?;
    Ok(FramedBraid::normalize(&w))
}
