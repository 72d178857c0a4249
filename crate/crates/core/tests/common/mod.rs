//! Independent oracles used by the integration tests. Nothing here calls the
//! Garside solver.

#![allow(dead_code)]

use std::collections::HashMap;

use framed_braids::{BraidWord, FramedBraid, Letter, Permutation};
use rand::Rng;

/// A word in `B_3` as unit letters `±1`, `±2`.
pub type Word3 = Vec<i8>;

pub fn free_reduce(w: &[i8]) -> Word3 {
    let mut out: Word3 = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

pub fn to_braid_word(w: &[i8]) -> BraidWord {
    BraidWord::new(
        3,
        w.iter()
            .map(|&x| Letter::sigma(x.unsigned_abs() as usize, x.signum() as i64)),
    )
    .unwrap()
}

/// Connected components of freely reduced `B_3` words of length at most
/// `bound`, under insertion of any cyclic rotation of `σ1σ2σ1σ2⁻¹σ1⁻¹σ2⁻¹` or
/// its inverse at any position followed by free reduction. Two words in one
/// component are equal braids.
pub struct RewritingOracle {
    pub bound: usize,
    index: HashMap<Word3, usize>,
    parent: Vec<usize>,
    pub neighbours: Vec<Vec<usize>>,
    pub words: Vec<Word3>,
}

impl RewritingOracle {
    pub fn new(bound: usize) -> Self {
        let mut words: Vec<Word3> = vec![vec![]];
        let mut frontier: Vec<Word3> = vec![vec![]];
        for _ in 0..bound {
            let mut next = Vec::new();
            for w in &frontier {
                for x in [1i8, -1, 2, -2] {
                    if w.last() != Some(&-x) {
                        let mut v = w.clone();
                        v.push(x);
                        next.push(v);
                    }
                }
            }
            words.extend(next.iter().cloned());
            frontier = next;
        }
        let index: HashMap<Word3, usize> = words
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();

        let relator: Word3 = vec![1, 2, 1, -2, -1, -2];
        let inverse: Word3 = relator.iter().rev().map(|x| -x).collect();
        let mut rotations = Vec::new();
        for r in [&relator, &inverse] {
            for s in 0..r.len() {
                let mut rot = r[s..].to_vec();
                rot.extend_from_slice(&r[..s]);
                rotations.push(rot);
            }
        }

        let mut parent: Vec<usize> = (0..words.len()).collect();
        let mut neighbours = vec![Vec::new(); words.len()];
        for (i, w) in words.iter().enumerate() {
            for p in 0..=w.len() {
                for rot in &rotations {
                    let mut v = w[..p].to_vec();
                    v.extend_from_slice(rot);
                    v.extend_from_slice(&w[p..]);
                    let v = free_reduce(&v);
                    if let Some(&j) = index.get(&v) {
                        if j != i {
                            neighbours[i].push(j);
                            union(&mut parent, i, j);
                        }
                    }
                }
            }
            neighbours[i].sort_unstable();
            neighbours[i].dedup();
        }
        RewritingOracle {
            bound,
            index,
            parent,
            neighbours,
            words,
        }
    }

    pub fn id(&self, w: &[i8]) -> Option<usize> {
        self.index.get(&free_reduce(w)).copied()
    }

    /// `Some(true)` when a rewriting path within the bound connects the words.
    pub fn certified_equal(&self, a: &[i8], b: &[i8]) -> bool {
        match (self.id(a), self.id(b)) {
            (Some(x), Some(y)) => find(&self.parent, x) == find(&self.parent, y),
            _ => false,
        }
    }

    /// A random walk of `steps` rewriting moves from `w` staying within `max_len`.
    pub fn walk<R: Rng>(&self, rng: &mut R, w: &[i8], steps: usize, max_len: usize) -> Word3 {
        let mut cur = self.id(w).expect("word within bound");
        for _ in 0..steps {
            let options: Vec<usize> = self.neighbours[cur]
                .iter()
                .copied()
                .filter(|&j| self.words[j].len() <= max_len)
                .collect();
            if options.is_empty() {
                break;
            }
            cur = options[rng.gen_range(0..options.len())];
        }
        self.words[cur].clone()
    }
}

fn find(parent: &[usize], mut x: usize) -> usize {
    while parent[x] != x {
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Laurent polynomial in `t` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Laurent {
    low: i32,
    coeffs: Vec<i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent {
            low: 0,
            coeffs: vec![],
        }
    }

    pub fn monomial(c: i64, e: i32) -> Self {
        Laurent {
            low: e,
            coeffs: vec![c],
        }
        .trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        self.coeffs.drain(..lead);
        self.low += lead as i32;
        if self.coeffs.is_empty() {
            self.low = 0;
        }
        self
    }

    pub fn add(&self, o: &Laurent) -> Laurent {
        if self.coeffs.is_empty() {
            return o.clone();
        }
        if o.coeffs.is_empty() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = (self.low + self.coeffs.len() as i32).max(o.low + o.coeffs.len() as i32);
        let mut coeffs = vec![0; (high - low) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + k] += c;
        }
        for (k, c) in o.coeffs.iter().enumerate() {
            coeffs[(o.low - low) as usize + k] += c;
        }
        Laurent { low, coeffs }.trimmed()
    }

    pub fn mul(&self, o: &Laurent) -> Laurent {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Laurent::zero();
        }
        let mut coeffs = vec![0; self.coeffs.len() + o.coeffs.len() - 1];
        for (a, x) in self.coeffs.iter().enumerate() {
            for (b, y) in o.coeffs.iter().enumerate() {
                coeffs[a + b] += x * y;
            }
        }
        Laurent {
            low: self.low + o.low,
            coeffs,
        }
        .trimmed()
    }
}

pub type Mat2 = [[Laurent; 2]; 2];

fn mat(e: [[(i64, i32); 2]; 2]) -> Mat2 {
    e.map(|row| row.map(|(c, p)| Laurent::monomial(c, p)))
}

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let entry = |i: usize, j: usize| a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]));
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

/// Reduced Burau representation of `B_3`, faithful, so equal matrices mean
/// equal braids and different matrices certify different braids.
pub fn burau3(w: &[i8]) -> Mat2 {
    let s1 = mat([[(-1, 1), (1, 0)], [(0, 0), (1, 0)]]);
    let s1i = mat([[(-1, -1), (1, -1)], [(0, 0), (1, 0)]]);
    let s2 = mat([[(1, 0), (0, 0)], [(1, 1), (-1, 1)]]);
    let s2i = mat([[(1, 0), (0, 0)], [(1, 0), (-1, -1)]]);
    let mut m = mat([[(1, 0), (0, 0)], [(0, 0), (1, 0)]]);
    for &x in w {
        let g = match x {
            1 => &s1,
            -1 => &s1i,
            2 => &s2,
            -2 => &s2i,
            _ => panic!("not a B_3 letter"),
        };
        m = mat_mul(&m, g);
    }
    m
}

pub fn random_word3<R: Rng>(rng: &mut R, max_len: usize) -> Word3 {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| [1i8, -1, 2, -2][rng.gen_range(0..4)])
        .collect()
}

/// All `r ∈ [-3, 3]^m` with `delta_i - r_i = kappa_i - r_{p(i)}`.
pub fn brute_force_transfer(p: &Permutation, delta: &[i64], kappa: &[i64]) -> Vec<Vec<i64>> {
    let m = p.len();
    let mut out = Vec::new();
    let mut r = vec![-3i64; m];
    loop {
        if (1..=m).all(|i| delta[i - 1] - r[i - 1] == kappa[i - 1] - r[p.image(i) - 1]) {
            out.push(r.clone());
        }
        let mut pos = 0;
        loop {
            if pos == m {
                return out;
            }
            if r[pos] < 3 {
                r[pos] += 1;
                break;
            }
            r[pos] = -3;
            pos += 1;
        }
    }
}

pub fn all_permutations(m: usize) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<usize>, m: usize, out: &mut Vec<Permutation>) {
        if prefix.len() == m {
            out.push(Permutation::from_images(prefix.clone()).unwrap());
            return;
        }
        for v in 1..=m {
            if !prefix.contains(&v) {
                prefix.push(v);
                rec(prefix, m, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), m, &mut out);
    out
}

/// Random framed braid with uniform letters, exponents in `[-3, 3] \ {0}` and
/// framings in `[-3, 3]`, built letter by letter.
pub fn random_framed<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> FramedBraid {
    let lambda = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
    let len = rng.gen_range(0..=max_len);
    let mut letters = Vec::new();
    if n >= 2 {
        for _ in 0..len {
            let e = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
            letters.push(Letter::sigma(rng.gen_range(1..n), e));
        }
    }
    FramedBraid::new(lambda, BraidWord::new(n, letters).unwrap()).unwrap()
}
