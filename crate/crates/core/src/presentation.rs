//! Spanning-tree presentations of π₁² and A₁.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homotopy::Walk;
use crate::word::{Letter, Word};

/// Which cycles bound 2-cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// 4-cycles only.
    #[default]
    Pi12,
    /// 3-cycles and 4-cycles.
    A1,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "pi12" => Ok(Mode::Pi12),
            "a1" => Ok(Mode::A1),
            _ => Err(Error::Parse(format!("unknown mode `{s}` (expected pi12 or a1)"))),
        }
    }
}

/// Breadth-first spanning tree of the root's component. Neighbours are
/// visited in label order, so the tree is a function of the graph and root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    root: usize,
    parent: Vec<Option<usize>>,
    reached: Vec<bool>,
    order: Vec<usize>,
}

impl SpanningTree {
    pub fn bfs(g: &Graph, root: usize) -> SpanningTree {
        let n = g.vertex_count();
        let mut parent = vec![None; n];
        let mut reached = vec![false; n];
        let mut order = vec![root];
        reached[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in g.adjacent(u) {
                if !reached[v] {
                    reached[v] = true;
                    parent[v] = Some(u);
                    order.push(v);
                    queue.push_back(v);
                }
            }
        }
        SpanningTree { root, parent, reached, order }
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn spans(&self, v: usize) -> bool {
        self.reached[v]
    }

    /// Vertices of the spanned component in visiting order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn is_tree_edge(&self, a: usize, b: usize) -> bool {
        self.parent[a] == Some(b) || self.parent[b] == Some(a)
    }

    /// Edges of the component outside the tree, as `(a, b)` with `a < b`,
    /// in edge order. These number the generators.
    pub fn non_tree_edges(&self, g: &Graph) -> Vec<(usize, usize)> {
        g.edges().filter(|&(a, b)| self.reached[a] && !self.is_tree_edge(a, b)).collect()
    }

    /// Tree path from the root to `v`.
    pub fn path_from_root(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }
}

/// Generators with names, relators as words over them.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

/// `{"generators": ["a", "b"], "relators": [[["a", 1], ["b", -1]]]}`: each
/// relator is a list of `[generator, ±1]` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<(String, i64)>>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<GroupPresentation> {
        let n = generators.len();
        if let Some(r) = relators.iter().find(|r| r.letters().iter().any(|l| l.gen() >= n)) {
            return Err(Error::InvalidPresentation(format!(
                "relator {r:?} uses a generator outside 0..{n}"
            )));
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = generators.iter().find(|g| !seen.insert(*g)) {
            return Err(Error::InvalidPresentation(format!("duplicate generator `{dup}`")));
        }
        Ok(GroupPresentation { generators, relators })
    }

    /// Free group on `n` generators named `x0, x1, ...`.
    pub fn free(n: usize) -> GroupPresentation {
        GroupPresentation { generators: (0..n).map(|i| format!("x{i}")).collect(), relators: Vec::new() }
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn relator_count(&self) -> usize {
        self.relators.len()
    }

    /// Sum of relator lengths.
    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }

    /// Syntactically trivial: no generators at all.
    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn to_json_value(&self) -> PresentationJson {
        PresentationJson {
            generators: self.generators.clone(),
            relators: self
                .relators
                .iter()
                .map(|r| r.letters().iter().map(|l| (self.generators[l.gen()].clone(), l.exponent())).collect())
                .collect(),
        }
    }

    pub fn from_json_value(j: &PresentationJson) -> Result<GroupPresentation> {
        let index: HashMap<&str, usize> = j.generators.iter().enumerate().map(|(i, g)| (g.as_str(), i)).collect();
        let mut relators = Vec::with_capacity(j.relators.len());
        for r in &j.relators {
            let mut w = Word::empty();
            for (name, e) in r {
                let &g = index
                    .get(name.as_str())
                    .ok_or_else(|| Error::InvalidPresentation(format!("unknown generator `{name}`")))?;
                match e {
                    1 => w.push(Letter::new(g, false)),
                    -1 => w.push(Letter::new(g, true)),
                    _ => return Err(Error::InvalidPresentation(format!("exponent {e} is not ±1"))),
                }
            }
            relators.push(w);
        }
        GroupPresentation::new(j.generators.clone(), relators)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("presentations serialize")
    }

    pub fn from_json(text: &str) -> Result<GroupPresentation> {
        GroupPresentation::from_json_value(&serde_json::from_str(text)?)
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | ", self.generators.join(", "))?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", r.display(&self.generators))?;
        }
        f.write_str(" >")
    }
}

impl Serialize for GroupPresentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_value().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupPresentation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PresentationJson::deserialize(d)?;
        GroupPresentation::from_json_value(&j).map_err(serde::de::Error::custom)
    }
}

/// A presentation of π₁²(g, base) (or A₁) together with the tree and the
/// edge-to-generator correspondence needed to translate walks.
#[derive(Debug, Clone)]
pub struct GraphPresentation {
    pub tree: SpanningTree,
    pub mode: Mode,
    pub presentation: GroupPresentation,
    edges: Vec<(usize, usize)>,
    generator_of: HashMap<(usize, usize), usize>,
}

impl GraphPresentation {
    pub fn build(g: &Graph, base: &str, mode: Mode) -> Result<GraphPresentation> {
        let root = g.require(base)?;
        let tree = SpanningTree::bfs(g, root);
        if tree.order().len() < g.vertex_count() {
            log::warn!(
                "graph is disconnected; presenting the component of `{base}` ({} of {} vertices)",
                tree.order().len(),
                g.vertex_count()
            );
        }
        let edges = tree.non_tree_edges(g);
        let generators = edges.iter().map(|&(a, b)| format!("{}~{}", g.label(a), g.label(b))).collect();
        let generator_of: HashMap<_, _> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut gp = GraphPresentation {
            tree,
            mode,
            presentation: GroupPresentation { generators, relators: Vec::new() },
            edges,
            generator_of,
        };
        let mut cycles = Vec::new();
        if mode == Mode::A1 {
            cycles.extend(g.cycles(3));
        }
        cycles.extend(g.cycles(4));
        for c in cycles.into_iter().filter(|c| gp.tree.spans(c[0])) {
            let word = gp.cycle_word(&c).cyclically_reduced();
            gp.presentation.relators.push(word);
        }
        Ok(gp)
    }

    pub fn generator_edge(&self, gen: usize) -> Option<(usize, usize)> {
        self.edges.get(gen).copied()
    }

    fn edge_letter(&self, a: usize, b: usize) -> Option<Letter> {
        let key = (a.min(b), a.max(b));
        self.generator_of.get(&key).map(|&gen| Letter::new(gen, a > b))
    }

    fn cycle_word(&self, c: &[usize]) -> Word {
        let mut w = Word::empty();
        for i in 0..c.len() {
            if let Some(l) = self.edge_letter(c[i], c[(i + 1) % c.len()]) {
                w.push(l);
            }
        }
        w
    }

    /// Image of a walk: tree edges vanish, a non-tree edge traversed from its
    /// smaller to its larger endpoint is its generator, the other way its
    /// inverse. The result is freely reduced.
    pub fn walk_to_word(&self, w: &Walk) -> Result<Word> {
        if let Some(&v) = w.vertices().iter().find(|&&v| !self.tree.spans(v)) {
            return Err(Error::InvalidWalk(format!("vertex index {v} is outside the presented component")));
        }
        let mut out = Word::empty();
        for e in w.vertices().windows(2) {
            if let Some(l) = self.edge_letter(e[0], e[1]) {
                out.push(l);
            }
        }
        Ok(out.free_reduced())
    }

    /// Closed walk at the root representing generator `gen`: tree path to one
    /// endpoint, across the edge, tree path back.
    pub fn generator_walk(&self, g: &Graph, gen: usize) -> Result<Walk> {
        let (a, b) = self
            .generator_edge(gen)
            .ok_or_else(|| Error::InvalidPresentation(format!("no generator {gen}")))?;
        let mut v = self.tree.path_from_root(a);
        let mut back = self.tree.path_from_root(b);
        back.reverse();
        v.extend(back);
        Walk::new(g, v)
    }
}

/// Presentation of π₁²(g, base) (mode `Pi12`) or A₁(g, base) (mode `A1`).
pub fn pi12_presentation(g: &Graph, base: &str, mode: Mode) -> Result<GroupPresentation> {
    Ok(GraphPresentation::build(g, base, mode)?.presentation)
}

/// Translates `w` using the generator numbering induced by `t`.
pub fn walk_to_word(g: &Graph, t: &SpanningTree, w: &Walk) -> Result<Word> {
    let gp = GraphPresentation::build(g, g.label(t.root()), Mode::Pi12)?;
    gp.walk_to_word(w)
}
