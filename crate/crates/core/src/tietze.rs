//! Best-effort presentation simplification by Tietze transformations.

use std::collections::{BTreeSet, HashSet};

use crate::presentation::GroupPresentation;
use crate::word::Word;

pub const DEFAULT_PASSES: usize = 50;

/// Overlap substitution compares every relator pair, so it only runs on
/// presentations at most this large.
const OVERLAP_LIMIT: usize = 200;

/// Simplifies `p` by repeatedly
/// - dropping trivial and duplicate relators (up to rotation and inversion),
/// - eliminating a generator that occurs exactly once in some relator,
///   always using the shortest available relator,
/// - shortening a relator by substituting more than half of another relator.
///
/// Each pass applies all three; the loop stops at a fixed point or after
/// `passes` passes. The group is unchanged and neither the generator count
/// nor the relator count increases.
pub fn tietze_simplify(p: &GroupPresentation, passes: usize) -> GroupPresentation {
    let mut state = State::new(p);
    for pass in 0..passes {
        let before = state.signature();
        state.dedupe();
        state.eliminate();
        if state.live_relators() <= OVERLAP_LIMIT {
            state.shorten();
        }
        log::debug!("tietze pass {pass}: {:?}", state.signature());
        if state.signature() == before {
            break;
        }
    }
    state.dedupe();
    state.finish()
}

struct State {
    names: Vec<String>,
    alive: Vec<bool>,
    relators: Vec<Option<Word>>,
    /// Relator ids in which each generator occurs.
    occ: Vec<BTreeSet<usize>>,
}

impl State {
    fn new(p: &GroupPresentation) -> State {
        let mut s = State {
            names: p.generators.clone(),
            alive: vec![true; p.generator_count()],
            relators: Vec::new(),
            occ: vec![BTreeSet::new(); p.generator_count()],
        };
        for r in &p.relators {
            s.add(r.cyclically_reduced());
        }
        s
    }

    fn add(&mut self, w: Word) {
        let id = self.relators.len();
        for l in w.letters() {
            self.occ[l.gen()].insert(id);
        }
        self.relators.push(Some(w));
    }

    fn remove(&mut self, id: usize) -> Option<Word> {
        let w = self.relators[id].take()?;
        for l in w.letters() {
            self.occ[l.gen()].remove(&id);
        }
        Some(w)
    }

    fn replace(&mut self, id: usize, w: Word) {
        self.remove(id);
        for l in w.letters() {
            self.occ[l.gen()].insert(id);
        }
        self.relators[id] = Some(w);
    }

    fn live_relators(&self) -> usize {
        self.relators.iter().flatten().count()
    }

    fn signature(&self) -> (usize, usize, usize) {
        let live = self.relators.iter().flatten();
        (self.alive.iter().filter(|&&a| a).count(), live.clone().count(), live.map(Word::len).sum())
    }

    fn dedupe(&mut self) {
        let mut seen = HashSet::new();
        for id in 0..self.relators.len() {
            let Some(w) = &self.relators[id] else { continue };
            if w.is_empty() || !seen.insert(w.cyclic_canonical()) {
                self.remove(id);
            }
        }
    }

    /// Repeatedly eliminates a generator from the shortest relator that has
    /// one occurring exactly once, preferring the generator with the fewest
    /// other occurrences.
    fn eliminate(&mut self) {
        let mut queue: BTreeSet<(usize, usize)> = self
            .relators
            .iter()
            .enumerate()
            .filter_map(|(id, w)| w.as_ref().map(|w| (w.len(), id)))
            .collect();
        while let Some((len, id)) = queue.pop_first() {
            let Some(w) = self.relators[id].clone() else { continue };
            if w.len() != len {
                continue;
            }
            if w.is_empty() {
                self.remove(id);
                continue;
            }
            let Some(pos) = (0..w.len())
                .filter(|&i| w.occurrences(w.letters()[i].gen()) == 1)
                .min_by_key(|&i| (self.occ[w.letters()[i].gen()].len(), i))
            else {
                continue;
            };
            let letter = w.letters()[pos];
            let x = letter.gen();
            // Rotate so the letter comes first: letter · rest = 1.
            let mut rest = w.letters()[pos + 1..].to_vec();
            rest.extend_from_slice(&w.letters()[..pos]);
            let rest = Word::new(rest);
            let value = if letter.is_inverse() { rest } else { rest.inverse() };
            self.remove(id);
            self.alive[x] = false;
            let targets: Vec<usize> = self.occ[x].iter().copied().collect();
            for t in targets {
                let new = self.relators[t].as_ref().expect("indexed relators are live").substitute(x, &value);
                let new = new.cyclically_reduced();
                queue.insert((new.len(), t));
                self.replace(t, new);
            }
        }
    }

    /// Replaces a piece of a relator by the shorter complement taken from
    /// another relator whenever more than half of the latter appears as a
    /// cyclic subword.
    fn shorten(&mut self) {
        let ids: Vec<usize> = (0..self.relators.len()).filter(|&i| self.relators[i].is_some()).collect();
        let mut changed = true;
        while changed {
            changed = false;
            for &r in &ids {
                for &s in &ids {
                    if r == s {
                        continue;
                    }
                    let (Some(rw), Some(sw)) = (&self.relators[r], &self.relators[s]) else { continue };
                    if let Some(new) = shorten_by(sw, rw) {
                        self.replace(s, new);
                        changed = true;
                    }
                }
            }
        }
    }

    fn finish(self) -> GroupPresentation {
        let mut map = vec![None; self.names.len()];
        let mut generators = Vec::new();
        for (i, name) in self.names.into_iter().enumerate() {
            if self.alive[i] {
                map[i] = Some(generators.len());
                generators.push(name);
            }
        }
        let relators = self.relators.into_iter().flatten().map(|w| w.renumber(&map)).collect();
        GroupPresentation { generators, relators }
    }
}

/// If a cyclic subword `u` of `s` with `|u| > |r|/2` is a cyclic subword of
/// `r` or `r⁻¹`, with `r ~ u v`, returns `s` with `u` replaced by `v⁻¹`.
fn shorten_by(s: &Word, r: &Word) -> Option<Word> {
    let (n, m) = (r.len(), s.len());
    if n == 0 || m == 0 {
        return None;
    }
    let min_piece = n / 2 + 1;
    for cand in [r.clone(), r.inverse()] {
        let c = cand.letters();
        for start in 0..n {
            let rot: Vec<_> = c[start..].iter().chain(&c[..start]).copied().collect();
            for plen in (min_piece..=n.min(m)).rev() {
                let (u, v) = rot.split_at(plen);
                let sl = s.letters();
                for k in 0..m {
                    if (0..plen).all(|j| sl[(k + j) % m] == u[j]) {
                        // s = u · tail (rotated at k), replace u by v⁻¹.
                        let mut out: Vec<_> = Word::new(v.to_vec()).inverse().letters().to_vec();
                        out.extend((plen..m).map(|j| sl[(k + j) % m]));
                        let out = Word::new(out).cyclically_reduced();
                        if out.len() < m {
                            return Some(out);
                        }
                    }
                }
            }
        }
    }
    None
}
