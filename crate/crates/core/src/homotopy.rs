//! Walks and their homotopy moves (substitution, insertion, deletion), with a
//! budgeted breadth-first search that certifies homotopy equivalence.

use std::collections::HashMap;
use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A nonempty vertex sequence with consecutive vertices adjacent. Vertices
/// are indices into the graph the walk was validated against.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk {
    vertices: Vec<usize>,
}

impl Walk {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Walk> {
        if vertices.is_empty() {
            return Err(Error::InvalidWalk("a walk has at least one vertex".into()));
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= g.vertex_count()) {
            return Err(Error::InvalidWalk(format!("vertex index {v} out of range")));
        }
        if let Some(w) = vertices.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
            return Err(Error::InvalidWalk(format!(
                "`{}` and `{}` are not adjacent",
                g.label(w[0]),
                g.label(w[1])
            )));
        }
        Ok(Walk { vertices })
    }

    pub fn from_labels<S: AsRef<str>>(g: &Graph, labels: &[S]) -> Result<Walk> {
        let vs = labels.iter().map(|l| g.require(l.as_ref())).collect::<Result<Vec<_>>>()?;
        Walk::new(g, vs)
    }

    /// Parses a comma-separated label list. Commas inside parentheses belong
    /// to the label, so `(0,1),(1,1)` names two grid vertices.
    pub fn parse(g: &Graph, text: &str) -> Result<Walk> {
        let mut parts = Vec::new();
        let (mut depth, mut start) = (0i32, 0);
        for (i, c) in text.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    parts.push(text[start..i].trim());
                    start = i + 1;
                }
                _ => {}
            }
        }
        parts.push(text[start..].trim());
        if parts.iter().any(|p| p.is_empty()) {
            return Err(Error::InvalidWalk(format!("cannot parse walk `{text}`")));
        }
        Walk::from_labels(g, &parts)
    }

    pub fn trivial(v: usize) -> Walk {
        Walk { vertices: vec![v] }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges traversed.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_trivial(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("walks are nonempty")
    }

    pub fn is_closed(&self) -> bool {
        self.start() == self.end()
    }

    pub fn labels<'g>(&self, g: &'g Graph) -> Vec<&'g str> {
        self.vertices.iter().map(|&v| g.label(v)).collect()
    }

    /// `self * other`: `other`'s vertices after its first appended.
    pub fn concat(&self, other: &Walk) -> Result<Walk> {
        if self.end() != other.start() {
            return Err(Error::EndpointMismatch(format!(
                "walk ends at index {} but the next starts at index {}",
                self.end(),
                other.start()
            )));
        }
        let mut v = self.vertices.clone();
        v.extend_from_slice(&other.vertices[1..]);
        Ok(Walk { vertices: v })
    }

    pub fn reverse(&self) -> Walk {
        Walk { vertices: self.vertices.iter().rev().copied().collect() }
    }

    /// Deletes backtracks until none remain. The result is the unique
    /// deletion-normal form.
    pub fn reduce(&self) -> Walk {
        reduce_recording(&self.vertices).0
    }

    /// Whether some deletion applies.
    pub fn is_reduced(&self) -> bool {
        self.vertices.windows(3).all(|w| w[0] != w[2])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveKind {
    Substitution,
    Insertion,
    Deletion,
}

/// One elementary step. `replacement` is the new vertex for a substitution and
/// the inserted neighbour for an insertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HomotopyMove {
    pub kind: MoveKind,
    pub index: usize,
    pub replacement: Option<usize>,
}

impl HomotopyMove {
    pub fn substitution(index: usize, vertex: usize) -> Self {
        HomotopyMove { kind: MoveKind::Substitution, index, replacement: Some(vertex) }
    }

    pub fn insertion(index: usize, vertex: usize) -> Self {
        HomotopyMove { kind: MoveKind::Insertion, index, replacement: Some(vertex) }
    }

    pub fn deletion(index: usize) -> Self {
        HomotopyMove { kind: MoveKind::Deletion, index, replacement: None }
    }

    pub fn to_json(&self, g: &Graph) -> MoveJson {
        MoveJson {
            kind: self.kind,
            index: self.index,
            replacement: self.replacement.map(|v| g.label(v).to_string()),
        }
    }
}

/// Serialized move: `{"kind": "substitution", "index": 1, "replacement": "3"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveJson {
    pub kind: MoveKind,
    pub index: usize,
    pub replacement: Option<String>,
}

impl MoveJson {
    pub fn resolve(&self, g: &Graph) -> Result<HomotopyMove> {
        let replacement = self.replacement.as_deref().map(|l| g.require(l)).transpose()?;
        Ok(HomotopyMove { kind: self.kind, index: self.index, replacement })
    }
}

/// Applies one move after checking it is legal for `w` in `g`.
pub fn apply_move(g: &Graph, w: &Walk, m: &HomotopyMove) -> Result<Walk> {
    let v = &w.vertices;
    let k = w.len();
    let i = m.index;
    let illegal = |why: &str| Err(Error::IllegalMove(format!("{:?} at {i}: {why}", m.kind)));
    match m.kind {
        MoveKind::Substitution => {
            let Some(r) = m.replacement else { return illegal("missing replacement") };
            if !(0 < i && i < k) {
                return illegal("index must be interior");
            }
            if r >= g.vertex_count() || !g.has_edge(v[i - 1], r) || !g.has_edge(r, v[i + 1]) {
                return illegal("replacement is not a common neighbour");
            }
            let mut out = v.clone();
            out[i] = r;
            Ok(Walk { vertices: out })
        }
        MoveKind::Insertion => {
            let Some(r) = m.replacement else { return illegal("missing replacement") };
            if i > k {
                return illegal("index out of range");
            }
            if r >= g.vertex_count() || !g.has_edge(v[i], r) {
                return illegal("inserted vertex is not a neighbour");
            }
            let mut out = v.clone();
            out.splice(i + 1..i + 1, [r, v[i]]);
            Ok(Walk { vertices: out })
        }
        MoveKind::Deletion => {
            if !(0 < i && i < k) {
                return illegal("index must be interior");
            }
            if v[i - 1] != v[i + 1] {
                return illegal("no backtrack at this index");
            }
            let mut out = v.clone();
            out.drain(i..i + 2);
            Ok(Walk { vertices: out })
        }
    }
}

/// Replays `moves` from `w`.
pub fn replay(g: &Graph, w: &Walk, moves: &[HomotopyMove]) -> Result<Walk> {
    moves.iter().try_fold(w.clone(), |acc, m| apply_move(g, &acc, m))
}

/// Moves that undo `moves` (applied from `start`), in order.
pub fn invert_moves(g: &Graph, start: &Walk, moves: &[HomotopyMove]) -> Result<Vec<HomotopyMove>> {
    let mut walks = vec![start.clone()];
    for m in moves {
        let next = apply_move(g, walks.last().expect("nonempty"), m)?;
        walks.push(next);
    }
    let mut out = Vec::with_capacity(moves.len());
    for (m, before) in moves.iter().zip(&walks).rev() {
        out.push(match m.kind {
            MoveKind::Substitution => HomotopyMove::substitution(m.index, before.vertices[m.index]),
            MoveKind::Insertion => HomotopyMove::deletion(m.index + 1),
            MoveKind::Deletion => HomotopyMove::insertion(m.index - 1, before.vertices[m.index]),
        });
    }
    Ok(out)
}

fn reduce_recording(vertices: &[usize]) -> (Walk, Vec<HomotopyMove>) {
    let mut stack: Vec<usize> = Vec::with_capacity(vertices.len());
    let mut moves = Vec::new();
    for &x in vertices {
        let n = stack.len();
        if n >= 2 && stack[n - 2] == x {
            moves.push(HomotopyMove::deletion(n - 1));
            stack.pop();
        } else {
            stack.push(x);
        }
    }
    (Walk { vertices: stack }, moves)
}

/// Search limits for [`homotopic`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_walk_length: usize,
    pub max_states: usize,
}

impl Budget {
    pub const DEFAULT_MAX_STATES: usize = 1_000_000;

    pub fn for_walks(w1: &Walk, w2: &Walk) -> Budget {
        Budget { max_walk_length: w1.len() + w2.len() + 8, max_states: Self::DEFAULT_MAX_STATES }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// A move sequence transforming the first walk into the second.
    Equivalent(Vec<HomotopyMove>),
    /// The bounded search ended without a certificate. This is not a proof of
    /// inequivalence.
    Unknown { explored: usize },
}

impl Verdict {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Verdict::Equivalent(_))
    }
}

/// A square-arc replacement on a reduced walk: the `k` edges starting at
/// `pos` run along a 4-cycle and are swapped for the other `4 - k` edges.
#[derive(Debug, Clone, Copy)]
struct Step {
    pos: u32,
    square: [usize; 4],
    k: u8,
}

impl Step {
    /// Elementary moves realising the replacement, before reduction.
    fn expand(&self) -> Vec<HomotopyMove> {
        let i = self.pos as usize;
        let [_, x1, x2, x3] = self.square;
        match self.k {
            0 => vec![
                HomotopyMove::insertion(i, x3),
                HomotopyMove::insertion(i + 1, x2),
                HomotopyMove::substitution(i + 3, x1),
            ],
            1 => vec![HomotopyMove::insertion(i, x3), HomotopyMove::substitution(i + 2, x2)],
            2 => vec![HomotopyMove::substitution(i + 1, x3)],
            3 => vec![HomotopyMove::substitution(i + 1, x3), HomotopyMove::deletion(i + 2)],
            _ => unreachable!("arcs have at most 3 edges"),
        }
    }

    fn apply(&self, walk: &[usize]) -> Vec<usize> {
        let i = self.pos as usize;
        let k = self.k as usize;
        let [x0, x1, x2, x3] = self.square;
        let complement: &[usize] = match k {
            0 => &[x0, x3, x2, x1, x0],
            1 => &[x0, x3, x2, x1],
            2 => &[x0, x3, x2],
            _ => &[x0, x3],
        };
        let mut out = Vec::with_capacity(walk.len() + 4);
        out.extend_from_slice(&walk[..i]);
        out.extend_from_slice(complement);
        out.extend_from_slice(&walk[i + k + 1..]);
        out
    }
}

/// Breadth-first search for a homotopy from `w1` to `w2`.
///
/// States are walks in deletion-normal form. From each state the search
/// replaces any run of 0 to 3 consecutive edges lying on a 4-cycle by the
/// complementary arc of that cycle, then reduces; each such step expands into
/// substitutions, insertions and deletions, so a found path is a certificate
/// in elementary moves.
pub fn homotopic(g: &Graph, w1: &Walk, w2: &Walk, budget: Budget) -> Result<Verdict> {
    if budget.max_states == 0 || budget.max_walk_length == 0 && (w1.len() > 0 || w2.len() > 0) {
        return Err(Error::ZeroBudget);
    }
    if w1.start() != w2.start() || w1.end() != w2.end() {
        return Err(Error::EndpointMismatch(format!(
            "{:?} and {:?} do not share endpoints",
            w1.labels(g),
            w2.labels(g)
        )));
    }
    if w1 == w2 {
        return Ok(Verdict::Equivalent(Vec::new()));
    }
    let (s1, m1) = reduce_recording(&w1.vertices);
    let (t, m2) = reduce_recording(&w2.vertices);
    let finish = |middle: Vec<HomotopyMove>| -> Result<Verdict> {
        let mut moves = m1.clone();
        moves.extend(middle);
        moves.extend(invert_moves(g, w2, &m2)?);
        Ok(Verdict::Equivalent(moves))
    };
    if s1 == t {
        return finish(Vec::new());
    }

    let mut squares_at: Vec<Vec<[usize; 4]>> = vec![Vec::new(); g.vertex_count()];
    for c in g.cycles(4) {
        for s in 0..4 {
            squares_at[c[s]].push([c[s], c[(s + 1) % 4], c[(s + 2) % 4], c[(s + 3) % 4]]);
            squares_at[c[s]].push([c[s], c[(s + 3) % 4], c[(s + 2) % 4], c[(s + 1) % 4]]);
        }
    }

    let mut states: Vec<Vec<usize>> = vec![s1.vertices.clone()];
    let mut parent: Vec<Option<(usize, Step)>> = vec![None];
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::from([(s1.vertices, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(cur) = queue.pop_front() {
        let walk = states[cur].clone();
        for pos in 0..walk.len() {
            for sq in &squares_at[walk[pos]] {
                for k in 0..=3usize {
                    // Arcs extend one edge at a time, so the first mismatch ends them.
                    if pos + k >= walk.len() || k > 0 && walk[pos + k] != sq[k] {
                        break;
                    }
                    let step = Step { pos: pos as u32, square: *sq, k: k as u8 };
                    let next = reduce_recording(&step.apply(&walk)).0.vertices;
                    if next.len() - 1 > budget.max_walk_length || seen.contains_key(&next) {
                        continue;
                    }
                    let id = states.len();
                    seen.insert(next.clone(), id);
                    states.push(next.clone());
                    parent.push(Some((cur, step)));
                    if next == t.vertices {
                        return finish(certificate_path(&states, &parent, id));
                    }
                    if states.len() >= budget.max_states {
                        return Ok(Verdict::Unknown { explored: states.len() });
                    }
                    queue.push_back(id);
                }
            }
        }
    }
    Ok(Verdict::Unknown { explored: states.len() })
}

fn certificate_path(states: &[Vec<usize>], parent: &[Option<(usize, Step)>], mut id: usize) -> Vec<HomotopyMove> {
    let mut chain = Vec::new();
    while let Some((p, step)) = parent[id] {
        chain.push((p, step));
        id = p;
    }
    chain.reverse();
    let mut moves = Vec::new();
    for (p, step) in chain {
        moves.extend(step.expand());
        let (_, deletions) = reduce_recording(&step.apply(&states[p]));
        moves.extend(deletions);
    }
    moves
}
