//! Relabel-invariant keys for labelled components with a pairwise matrix.

use std::cmp::Ordering;

use serde::Serialize;

/// Per-component framings and the pairwise matrix, both listed in a canonical
/// component order. Two inputs get equal keys iff some relabelling of the
/// components maps one onto the other.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalKey {
    pub framings: Vec<i64>,
    pub matrix: Vec<Vec<i64>>,
}

/// Returns the key and the component order realising it (`order[slot]` is the
/// original component index placed at `slot`).
pub fn canonicalize(framings: &[i64], matrix: &[Vec<i64>]) -> (CanonicalKey, Vec<usize>) {
    let c = framings.len();
    let descriptor = |i: usize| {
        let mut row: Vec<i64> = (0..c)
            .filter(|&j| j != i)
            .map(|j| matrix[i][j].abs())
            .collect();
        row.sort_unstable();
        (framings[i], row)
    };
    let descriptors: Vec<_> = (0..c).map(descriptor).collect();
    let mut sorted: Vec<usize> = (0..c).collect();
    sorted.sort_by(|&a, &b| descriptors[a].cmp(&descriptors[b]));
    // block id of each slot: slots may only take components of that block
    let slot_descr: Vec<_> = sorted.iter().map(|&i| &descriptors[i]).collect();

    let mut search = Search {
        matrix,
        slot_descr: &slot_descr,
        descriptors: &descriptors,
        used: vec![false; c],
        order: Vec::with_capacity(c),
        rows: Vec::with_capacity(c),
        best: None,
    };
    search.run();
    let (best_order, best_rows) = search.best.unwrap_or_default();

    let mut full = vec![vec![0; c]; c];
    for (s, row) in best_rows.iter().enumerate() {
        for (t, &v) in row.iter().enumerate() {
            full[s][t] = v;
            full[t][s] = v;
        }
    }
    let key = CanonicalKey {
        framings: best_order.iter().map(|&i| framings[i]).collect(),
        matrix: full,
    };
    (key, best_order)
}

type Descriptor = (i64, Vec<i64>);

struct Search<'a> {
    matrix: &'a [Vec<i64>],
    slot_descr: &'a [&'a Descriptor],
    descriptors: &'a [Descriptor],
    used: Vec<bool>,
    order: Vec<usize>,
    rows: Vec<Vec<i64>>,
    best: Option<(Vec<usize>, Vec<Vec<i64>>)>,
}

impl Search<'_> {
    fn prefix_vs_best(&self) -> Ordering {
        match &self.best {
            None => Ordering::Less,
            Some((_, best_rows)) => self.rows.as_slice().cmp(&best_rows[..self.rows.len()]),
        }
    }

    fn run(&mut self) {
        let slot = self.order.len();
        if slot == self.slot_descr.len() {
            if self.prefix_vs_best() == Ordering::Less {
                self.best = Some((self.order.clone(), self.rows.clone()));
            }
            return;
        }
        for cand in 0..self.used.len() {
            if self.used[cand] || &self.descriptors[cand] != self.slot_descr[slot] {
                continue;
            }
            let row: Vec<i64> = self.order.iter().map(|&o| self.matrix[cand][o]).collect();
            self.rows.push(row);
            if self.prefix_vs_best() == Ordering::Greater {
                self.rows.pop();
                continue;
            }
            self.used[cand] = true;
            self.order.push(cand);
            self.run();
            self.order.pop();
            self.used[cand] = false;
            self.rows.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn permute(framings: &[i64], m: &[Vec<i64>], p: &[usize]) -> (Vec<i64>, Vec<Vec<i64>>) {
        let f = p.iter().map(|&i| framings[i]).collect();
        let mm = p
            .iter()
            .map(|&i| p.iter().map(|&j| m[i][j]).collect())
            .collect();
        (f, mm)
    }

    #[test]
    fn invariant_under_relabelling() {
        let framings = vec![0, 0, 1, 0];
        let m = vec![
            vec![0, 1, 0, -2],
            vec![1, 0, 3, 0],
            vec![0, 3, 0, 1],
            vec![-2, 0, 1, 0],
        ];
        let (key, _) = canonicalize(&framings, &m);
        for p in [[1, 0, 2, 3], [3, 2, 1, 0], [2, 3, 0, 1], [0, 3, 1, 2]] {
            let (f2, m2) = permute(&framings, &m, &p);
            assert_eq!(canonicalize(&f2, &m2).0, key);
        }
    }

    #[test]
    fn distinguishes_sign_of_linking() {
        let a = canonicalize(&[0, 0], &[vec![0, 1], vec![1, 0]]).0;
        let b = canonicalize(&[0, 0], &[vec![0, -1], vec![-1, 0]]).0;
        assert_ne!(a, b);
    }

    #[test]
    fn first_run_without_best_is_kept() {
        // the initial branch must be recorded even though nothing compares below it
        let (key, order) = canonicalize(&[2, 1], &[vec![0, 0], vec![0, 0]]);
        assert_eq!(key.framings, vec![1, 2]);
        assert_eq!(order, vec![1, 0]);
    }
}
