//! Todd–Coxeter coset enumeration over the trivial subgroup (HLT strategy
//! with a union–find coincidence procedure).

use serde::{Deserialize, Serialize};

use crate::presentation::GroupPresentation;
use crate::word::Word;

pub const DEFAULT_COSET_BUDGET: usize = 1_000_000;

/// Cap on coset-table cells, protecting memory for presentations with many
/// generators.
const MAX_TABLE_CELLS: usize = 1 << 28;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CosetVerdict {
    FiniteOrder { order: usize },
    ExceededBudget { defined: usize },
}

impl CosetVerdict {
    pub fn order(self) -> Option<usize> {
        match self {
            CosetVerdict::FiniteOrder { order } => Some(order),
            CosetVerdict::ExceededBudget { .. } => None,
        }
    }
}

struct Overflow;

struct Enumerator {
    cols: usize,
    table: Vec<u32>,
    /// Coincidence forest; live cosets are their own representatives.
    rep: Vec<u32>,
    budget: usize,
    queue: Vec<u32>,
}

impl Enumerator {
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.cols + x]
    }

    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.cols + x] = d;
    }

    fn count(&self) -> usize {
        self.rep.len()
    }

    fn live(&self, c: u32) -> bool {
        self.rep[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<(), Overflow> {
        if self.count() >= self.budget || (self.count() + 1) * self.cols > MAX_TABLE_CELLS {
            return Err(Overflow);
        }
        let d = self.count() as u32;
        self.rep.push(d);
        self.table.extend(std::iter::repeat_n(NONE, self.cols));
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(())
    }

    fn find(&mut self, mut c: u32) -> u32 {
        let mut root = c;
        while self.rep[root as usize] != root {
            root = self.rep[root as usize];
        }
        while self.rep[c as usize] != root {
            let next = self.rep[c as usize];
            self.rep[c as usize] = root;
            c = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.rep[hi as usize] = lo;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.cols {
                let d = self.get(g, x);
                if d == NONE {
                    continue;
                }
                self.set(d, x ^ 1, NONE);
                let mu = self.find(g);
                let nu = self.find(d);
                if self.get(mu, x) != NONE {
                    let t = self.get(mu, x);
                    self.merge(nu, t);
                } else if self.get(nu, x ^ 1) != NONE {
                    let t = self.get(nu, x ^ 1);
                    self.merge(mu, t);
                } else {
                    self.set(mu, x, nu);
                    self.set(nu, x ^ 1, mu);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, a: u32, w: &[usize]) -> Result<(), Overflow> {
        let n = w.len();
        let (mut f, mut i) = (a, 0usize);
        let (mut b, mut j) = (a, n);
        loop {
            while i < j && self.get(f, w[i]) != NONE {
                f = self.get(f, w[i]);
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i && self.get(b, w[j - 1] ^ 1) != NONE {
                b = self.get(b, w[j - 1] ^ 1);
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }
}

/// Enumerates cosets of the trivial subgroup, so a completed run yields the
/// group order. At most `budget` cosets are ever defined.
pub fn todd_coxeter(p: &GroupPresentation, budget: usize) -> CosetVerdict {
    let cols = 2 * p.generator_count();
    if cols == 0 {
        return CosetVerdict::FiniteOrder { order: 1 };
    }
    let relators: Vec<Vec<usize>> = p
        .relators
        .iter()
        .map(Word::cyclically_reduced)
        .filter(|r| !r.is_empty())
        .map(|r| r.letters().iter().map(|l| l.column()).collect())
        .collect();
    let mut e = Enumerator { cols, table: vec![NONE; cols], rep: vec![0], budget: budget.max(1), queue: Vec::new() };
    let run = |e: &mut Enumerator| -> Result<(), Overflow> {
        let mut a = 0u32;
        while (a as usize) < e.count() {
            for r in &relators {
                if !e.live(a) {
                    break;
                }
                e.scan_and_fill(a, r)?;
            }
            for x in 0..cols {
                if e.live(a) && e.get(a, x) == NONE {
                    e.define(a, x)?;
                }
            }
            a += 1;
        }
        Ok(())
    };
    match run(&mut e) {
        Ok(()) => CosetVerdict::FiniteOrder { order: (0..e.count() as u32).filter(|&c| e.live(c)).count() },
        Err(Overflow) => CosetVerdict::ExceededBudget { defined: e.count() },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(n: usize, rels: &[&[(usize, i64)]]) -> GroupPresentation {
        let gens = (0..n).map(|i| format!("g{i}")).collect();
        GroupPresentation::new(gens, rels.iter().map(|r| Word::from_powers(r)).collect()).unwrap()
    }

    fn order(p: &GroupPresentation) -> Option<usize> {
        todd_coxeter(p, DEFAULT_COSET_BUDGET).order()
    }

    #[test]
    fn cyclic() {
        assert_eq!(order(&pres(1, &[&[(0, 5)]])), Some(5));
        assert_eq!(order(&pres(1, &[&[(0, 1)]])), Some(1));
        assert_eq!(order(&pres(0, &[])), Some(1));
    }

    #[test]
    fn classic_groups() {
        // S3 = <a, b | a^2, b^3, (ab)^2>
        assert_eq!(order(&pres(2, &[&[(0, 2)], &[(1, 3)], &[(0, 1), (1, 1), (0, 1), (1, 1)]])), Some(6));
        // Klein four group.
        assert_eq!(order(&pres(2, &[&[(0, 2)], &[(1, 2)], &[(0, 1), (1, 1), (0, -1), (1, -1)]])), Some(4));
        // Quaternion group <a, b | a^4, a^2 b^-2, b^-1 a b a>.
        let q8 = pres(2, &[&[(0, 4)], &[(0, 2), (1, -2)], &[(1, -1), (0, 1), (1, 1), (0, 1)]]);
        assert_eq!(order(&q8), Some(8));
        // A5 = <a, b | a^2, b^3, (ab)^5>
        let ab5: Vec<(usize, i64)> = (0..5).flat_map(|_| [(0, 1), (1, 1)]).collect();
        assert_eq!(order(&pres(2, &[&[(0, 2)], &[(1, 3)], &ab5])), Some(60));
    }

    #[test]
    fn trivial_by_relations() {
        // <a, b | a b a^-1 b^-2, b a b^-1 a^-2> is trivial.
        let p = pres(2, &[&[(0, 1), (1, 1), (0, -1), (1, -2)], &[(1, 1), (0, 1), (1, -1), (0, -2)]]);
        assert_eq!(order(&p), Some(1));
    }

    #[test]
    fn infinite_exceeds_budget() {
        assert!(matches!(todd_coxeter(&pres(1, &[]), 100), CosetVerdict::ExceededBudget { .. }));
        assert!(matches!(todd_coxeter(&pres(2, &[&[(0, 2)]]), 1000), CosetVerdict::ExceededBudget { .. }));
    }
}
