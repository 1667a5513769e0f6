//! Smith normal form and abelianization.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::presentation::GroupPresentation;

/// Free rank plus torsion coefficients `d₁ | d₂ | …`, each at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the group, `None` if infinite.
    pub fn order(&self) -> Option<u128> {
        (self.free_rank == 0).then(|| self.torsion.iter().map(|&d| d as u128).product())
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("trivial group");
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        f.write_str(&parts.join(" x "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero diagonal entries, positive, each dividing the next.
    pub diagonal: Vec<i128>,
    pub rank: usize,
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Smith normal form of a dense integer matrix by elementary row and column
/// operations.
pub fn smith_normal_form(m: &[Vec<i64>]) -> SmithForm {
    let rows: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    dense_snf(rows)
}

fn dense_snf(mut a: Vec<Vec<i128>>) -> SmithForm {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // Pivot: smallest nonzero absolute value in the remaining block.
        let Some((pr, pc)) = (t..nrows)
            .flat_map(|i| (t..ncols).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].abs())
        else {
            break;
        };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let p = a[t][t];
            let mut dirty = false;
            for i in t + 1..nrows {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..ncols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                dirty |= a[i][t] != 0;
            }
            for j in t + 1..ncols {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                dirty |= a[t][j] != 0;
            }
            if !dirty {
                // Enforce divisibility: fold any row not divisible by p into row t.
                let bad = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| a[i][j] % p != 0));
                match bad {
                    Some(i) => {
                        for j in t..ncols {
                            a[t][j] += a[i][j];
                        }
                        continue;
                    }
                    None => break,
                }
            }
            // A smaller remainder appeared: move it to the pivot.
            let (pr, pc) = (t..nrows)
                .flat_map(|i| (t..ncols).map(move |j| (i, j)))
                .filter(|&(i, j)| (i == t || j == t) && a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs())
                .expect("pivot row or column is nonzero");
            a.swap(t, pr);
            for row in a.iter_mut() {
                row.swap(t, pc);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    // The greedy pass already yields a divisibility chain; normalise anyway
    // so the result does not depend on that.
    normalise_chain(&mut diag);
    SmithForm { rank: diag.len(), diagonal: diag }
}

/// Rewrites a list of nonzero diagonal entries into the divisibility chain
/// of the same diagonal matrix.
fn normalise_chain(d: &mut [i128]) {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = gcd(d[i], d[j]);
            let l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    }
}

/// Abelian invariants of the group presented by `p`.
///
/// The exponent-sum matrix is first reduced sparsely by pivoting on ±1
/// entries, which handles the large, mostly unimodular matrices of graph
/// presentations; what remains is reduced densely.
pub fn abelianize(p: &GroupPresentation) -> AbelianInvariants {
    let n = p.generator_count();
    let mut rows: Vec<BTreeMap<usize, i128>> = p
        .relators
        .iter()
        .map(|r| {
            let mut row = BTreeMap::new();
            for (g, e) in r.exponent_sums(n).into_iter().enumerate() {
                if e != 0 {
                    row.insert(g, e as i128);
                }
            }
            row
        })
        .filter(|r| !r.is_empty())
        .collect();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (i, r) in rows.iter().enumerate() {
        for &c in r.keys() {
            col_rows[c].insert(i);
        }
    }
    let mut row_alive = vec![true; rows.len()];
    let mut col_alive = vec![true; n];
    let mut unit_pivots = 0;
    loop {
        let pivot = (0..rows.len())
            .filter(|&i| row_alive[i])
            .filter_map(|i| {
                rows[i]
                    .iter()
                    .filter(|(_, v)| v.abs() == 1)
                    .map(|(&c, _)| (rows[i].len() * col_rows[c].len(), i, c))
                    .min()
            })
            .min();
        let Some((_, pr, pc)) = pivot else { break };
        let unit = rows[pr][&pc];
        let pivot_row = rows[pr].clone();
        let others: Vec<usize> = col_rows[pc].iter().copied().filter(|&i| i != pr).collect();
        for i in others {
            let factor = rows[i][&pc] * unit;
            for (&c, &v) in &pivot_row {
                let e = rows[i].entry(c).or_insert(0);
                *e -= factor * v;
                if *e == 0 {
                    rows[i].remove(&c);
                    col_rows[c].remove(&i);
                } else {
                    col_rows[c].insert(i);
                }
            }
        }
        for &c in pivot_row.keys() {
            col_rows[c].remove(&pr);
        }
        row_alive[pr] = false;
        col_alive[pc] = false;
        unit_pivots += 1;
    }
    let cols: Vec<usize> = (0..n).filter(|&c| col_alive[c]).collect();
    let col_pos: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let dense: Vec<Vec<i128>> = (0..rows.len())
        .filter(|&i| row_alive[i] && !rows[i].is_empty())
        .map(|i| {
            let mut row = vec![0; cols.len()];
            for (c, &v) in &rows[i] {
                row[col_pos[c]] = v;
            }
            row
        })
        .collect();
    let snf = dense_snf(dense);
    AbelianInvariants {
        free_rank: n - unit_pivots - snf.rank,
        torsion: snf.diagonal.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect(),
    }
}
