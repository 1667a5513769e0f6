//! Words over a signed generator alphabet.

use std::fmt;

/// A generator or its inverse: `gen + 1` for the generator, `-(gen + 1)` for
/// its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Letter {
        let v = gen as i32 + 1;
        Letter(if inverse { -v } else { v })
    }

    pub fn gen(self) -> usize {
        (self.0.unsigned_abs() - 1) as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    pub fn exponent(self) -> i64 {
        if self.0 < 0 { -1 } else { 1 }
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    /// Column index in a coset table with two columns per generator.
    pub fn column(self) -> usize {
        2 * self.gen() + usize::from(self.is_inverse())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn gen(g: usize) -> Word {
        Word(vec![Letter::new(g, false)])
    }

    /// Builds from `(generator, ±1)` pairs; other exponents repeat the letter.
    pub fn from_powers(powers: &[(usize, i64)]) -> Word {
        let mut out = Vec::new();
        for &(g, e) in powers {
            for _ in 0..e.unsigned_abs() {
                out.push(Letter::new(g, e < 0));
            }
        }
        Word(out)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v).free_reduced()
    }

    /// Cancels adjacent `x x⁻¹` pairs until none remain.
    pub fn free_reduced(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Free reduction followed by stripping cancelling first/last letters.
    pub fn cyclically_reduced(&self) -> Word {
        let w = self.free_reduced().0;
        let (mut i, mut j) = (0, w.len());
        while j - i >= 2 && w[i] == w[j - 1].inverse() {
            i += 1;
            j -= 1;
        }
        Word(w[i..j].to_vec())
    }

    /// Least rotation of the word or its inverse; identifies relators that
    /// define the same normal closure element up to conjugation and inversion.
    pub fn cyclic_canonical(&self) -> Word {
        let w = self.cyclically_reduced();
        let inv = w.inverse();
        let best = |v: &Word| -> Word {
            (0..v.len().max(1))
                .map(|k| {
                    let mut r = v.0[k.min(v.len())..].to_vec();
                    r.extend_from_slice(&v.0[..k.min(v.len())]);
                    Word(r)
                })
                .min()
                .unwrap_or_default()
        };
        best(&w).min(best(&inv))
    }

    pub fn exponent_sums(&self, ngens: usize) -> Vec<i64> {
        let mut sums = vec![0; ngens];
        for l in &self.0 {
            sums[l.gen()] += l.exponent();
        }
        sums
    }

    pub fn occurrences(&self, gen: usize) -> usize {
        self.0.iter().filter(|l| l.gen() == gen).count()
    }

    /// Replaces every occurrence of `gen` by `replacement` (and its inverse by
    /// the inverse), then freely reduces.
    pub fn substitute(&self, gen: usize, replacement: &Word) -> Word {
        let inv = replacement.inverse();
        let mut out = Vec::with_capacity(self.0.len() + replacement.len());
        for &l in &self.0 {
            if l.gen() == gen {
                out.extend_from_slice(if l.is_inverse() { &inv.0 } else { &replacement.0 });
            } else {
                out.push(l);
            }
        }
        Word(out).free_reduced()
    }

    /// Renumbers generators through `map`; `None` entries are deleted letters.
    pub fn renumber(&self, map: &[Option<usize>]) -> Word {
        Word(
            self.0
                .iter()
                .filter_map(|l| map[l.gen()].map(|g| Letter::new(g, l.is_inverse())))
                .collect(),
        )
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        WordDisplay { word: self, names }
    }
}

struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&self.names[l.gen()])?;
            if l.is_inverse() {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(p: &[(usize, i64)]) -> Word {
        Word::from_powers(p)
    }

    #[test]
    fn reductions() {
        assert!(w(&[(0, 1), (1, 1), (1, -1), (0, -1)]).free_reduced().is_empty());
        assert_eq!(w(&[(0, 1), (1, 1), (0, -1)]).cyclically_reduced(), w(&[(1, 1)]));
        assert_eq!(w(&[(0, 1), (1, 1), (2, 1), (0, -1)]).cyclically_reduced(), w(&[(1, 1), (2, 1)]));
        assert_eq!(w(&[(0, 2)]).cyclic_canonical(), w(&[(0, -2)]).cyclic_canonical());
    }

    #[test]
    fn substitution() {
        // b a^-1 with b := a reduces to the empty word.
        let r = w(&[(1, 1), (0, -1)]);
        assert!(r.substitute(1, &Word::gen(0)).is_empty());
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        proptest::collection::vec((0usize..3, any::<bool>()), 0..12)
            .prop_map(|v| Word::new(v.into_iter().map(|(g, i)| Letter::new(g, i)).collect()))
    }

    proptest! {
        #[test]
        fn free_reduction_is_idempotent_and_preserves_sums(x in arb_word()) {
            let r = x.free_reduced();
            prop_assert_eq!(r.free_reduced(), r.clone());
            prop_assert_eq!(r.exponent_sums(3), x.exponent_sums(3));
            prop_assert!(x.concat(&x.inverse()).is_empty());
        }

        #[test]
        fn canonical_form_is_rotation_invariant(x in arb_word(), k in 0usize..12) {
            let c = x.cyclically_reduced();
            if !c.is_empty() {
                let k = k % c.len();
                let mut rot = c.letters()[k..].to_vec();
                rot.extend_from_slice(&c.letters()[..k]);
                prop_assert_eq!(Word::new(rot).cyclic_canonical(), x.cyclic_canonical());
            }
            prop_assert_eq!(x.inverse().cyclic_canonical(), x.cyclic_canonical());
        }
    }
}
