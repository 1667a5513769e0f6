//! Finite simple graphs with string vertex labels.
//!
//! Vertices are kept in lexicographic label order and addressed internally by
//! their position in that order, so every tie-break downstream (spanning
//! trees, cycle canonical forms, quotient representatives) is reproducible.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupAction};
use crate::identify::{IdentificationMap, UnionFind};
use crate::label::Label;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
}

/// Wire format: `{"vertices": [...], "edges": [[a, b], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

impl Graph {
    /// Builds a graph from labels and label pairs. Duplicate edges collapse;
    /// duplicate vertices, self-loops and undeclared endpoints are errors.
    pub fn new<V, S, E, T>(vertices: V, edges: E) -> Result<Graph>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (T, T)>,
        T: AsRef<str>,
    {
        let mut labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        labels.sort();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0].clone()));
        }
        let index: HashMap<String, usize> =
            labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let mut pairs = Vec::new();
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index.get(a).ok_or_else(|| Error::UnknownVertex(a.to_string()))?;
            let ib = *index.get(b).ok_or_else(|| Error::UnknownVertex(b.to_string()))?;
            if ia == ib {
                return Err(Error::SelfLoop(a.to_string()));
            }
            pairs.push((ia, ib));
        }
        Ok(Self::from_sorted_parts(labels, index, pairs))
    }

    /// `labels` must be sorted and unique; `pairs` index into it and contain
    /// no loops.
    fn from_sorted_parts(
        labels: Vec<String>,
        index: HashMap<String, usize>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Graph {
        let mut adj = vec![Vec::new(); labels.len()];
        for (a, b) in pairs {
            debug_assert_ne!(a, b);
            adj[a].push(b);
            adj[b].push(a);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        Graph { labels, index, adj }
    }

    /// Builds from arbitrary (unsorted) labels and index pairs into that list.
    pub(crate) fn from_unsorted(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Graph> {
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut new_pos = vec![0; labels.len()];
        for (pos, &old) in order.iter().enumerate() {
            new_pos[old] = pos;
        }
        let sorted: Vec<String> = order.iter().map(|&i| labels[i].clone()).collect();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0].clone()));
        }
        for &(a, b) in pairs {
            if a == b {
                return Err(Error::SelfLoop(labels[a].clone()));
            }
        }
        let index = sorted.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        Ok(Self::from_sorted_parts(
            sorted,
            index,
            pairs.iter().map(|&(a, b)| (new_pos[a], new_pos[b])),
        ))
    }

    pub fn empty() -> Graph {
        Graph { labels: Vec::new(), index: HashMap::new(), adj: Vec::new() }
    }

    /// Path with `n` vertices `0..n`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<(String, String)> =
            (1..n).map(|i| ((i - 1).to_string(), i.to_string())).collect();
        Graph::new((0..n).map(|i| i.to_string()), edges).expect("path is simple")
    }

    /// Cycle on `0..n`, `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<(String, String)> =
            (0..n).map(|i| (i.to_string(), ((i + 1) % n).to_string())).collect();
        Graph::new((0..n).map(|i| i.to_string()), edges).expect("cycle is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label).ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    /// Neighbour indices of `v`, ascending.
    pub fn adjacent(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn has_edge_labels(&self, a: &str, b: &str) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(a), Some(b)) => self.has_edge(a, b),
            _ => false,
        }
    }

    /// The neighbourhood N(v), lexicographically ordered.
    pub fn neighbors(&self, v: &str) -> Result<Vec<&str>> {
        let i = self.require(v)?;
        Ok(self.adj[i].iter().map(|&j| self.labels[j].as_str()).collect())
    }

    /// Edges as index pairs `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, nbrs)| nbrs.iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
    }

    pub fn edge_labels(&self) -> Vec<(&str, &str)> {
        self.edges().map(|(a, b)| (self.label(a), self.label(b))).collect()
    }

    /// All simple cycles of length 3 or 4, each once, as vertex index tuples
    /// starting at the least vertex and running in the direction whose second
    /// vertex is smaller.
    pub fn cycles(&self, length: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        match length {
            3 => {
                for a in 0..self.vertex_count() {
                    for &b in self.adj[a].iter().filter(|&&b| b > a) {
                        for &c in self.adj[b].iter().filter(|&&c| c > b) {
                            if self.has_edge(a, c) {
                                out.push(vec![a, b, c]);
                            }
                        }
                    }
                }
            }
            4 => {
                for a in 0..self.vertex_count() {
                    for &b in self.adj[a].iter().filter(|&&b| b > a) {
                        for &c in self.adj[b].iter().filter(|&&c| c > a) {
                            for &d in self.adj[c].iter().filter(|&&d| d > b && d != c) {
                                if self.has_edge(d, a) {
                                    out.push(vec![a, b, c, d]);
                                }
                            }
                        }
                    }
                }
                out.sort();
            }
            _ => {}
        }
        out
    }

    /// Label form of [`Graph::cycles`]. Lengths other than 3 and 4 yield an
    /// empty set.
    pub fn enumerate_cycles(&self, length: usize) -> Vec<Vec<&str>> {
        self.cycles(length)
            .into_iter()
            .map(|c| c.into_iter().map(|v| self.label(v)).collect())
            .collect()
    }

    /// Merges the classes of `m`. Edges are mapped through representatives and
    /// parallel edges collapse; an edge whose ends are identified is an error.
    pub fn glue(&self, m: &IdentificationMap) -> Result<Graph> {
        for (a, b) in m.pairs() {
            self.require(a)?;
            self.require(b)?;
        }
        let res = m.resolve();
        let mut new_labels: Vec<String> = Vec::new();
        let mut new_index: HashMap<String, usize> = HashMap::new();
        let mut image = Vec::with_capacity(self.vertex_count());
        for l in &self.labels {
            let rep = res.get(l);
            let id = match new_index.get(rep) {
                Some(&id) => id,
                None => {
                    new_labels.push(rep.to_string());
                    new_index.insert(rep.to_string(), new_labels.len() - 1);
                    new_labels.len() - 1
                }
            };
            image.push(id);
        }
        let mut pairs = Vec::with_capacity(self.edge_count());
        for (a, b) in self.edges() {
            let (ia, ib) = (image[a], image[b]);
            if ia == ib {
                return Err(Error::GlueSelfLoop(self.labels[a].clone(), self.labels[b].clone()));
            }
            pairs.push((ia, ib));
        }
        Graph::from_unsorted(new_labels, &pairs)
    }

    /// Disjoint union with each part's labels namespaced by its prefix
    /// (see [`Label::prefixed`]).
    pub fn disjoint_union(parts: &[(&str, &Graph)]) -> Result<Graph> {
        let mut seen = BTreeSet::new();
        for (p, _) in parts {
            if !seen.insert(*p) {
                return Err(Error::PrefixCollision(p.to_string()));
            }
        }
        let mut labels = Vec::new();
        let mut pairs = Vec::new();
        for (prefix, g) in parts {
            let offset = labels.len();
            labels.extend(g.labels.iter().map(|l| Label::prefixed(prefix, l)));
            pairs.extend(g.edges().map(|(a, b)| (a + offset, b + offset)));
        }
        Graph::from_unsorted(labels, &pairs).map_err(|e| match e {
            Error::DuplicateVertex(l) => Error::PrefixCollision(l),
            e => e,
        })
    }

    /// Quotient by a group action: vertices are orbits named by their least
    /// label, two orbits adjacent iff some members are. With `require_free`,
    /// a vertex fixed by a non-identity element is an error.
    pub fn quotient_by_action(
        &self,
        group: &FiniteGroup,
        action: &GroupAction,
        require_free: bool,
    ) -> Result<Graph> {
        action.validate(self, group)?;
        if require_free {
            if let Some((g, v)) = action.fixed_point(group) {
                return Err(Error::NotFree {
                    vertex: self.label(v).to_string(),
                    element: group.name(g).to_string(),
                });
            }
        }
        let mut uf = UnionFind::new(self.vertex_count());
        for perm in action.perms() {
            for (v, &w) in perm.iter().enumerate() {
                uf.union(v, w);
            }
        }
        // Vertices are in label order, so the first member seen is the least.
        let mut orbit_of = vec![usize::MAX; self.vertex_count()];
        let mut root_to_orbit: HashMap<usize, usize> = HashMap::new();
        let mut labels = Vec::new();
        for v in 0..self.vertex_count() {
            let root = uf.find(v);
            let id = *root_to_orbit.entry(root).or_insert_with(|| {
                labels.push(self.labels[v].clone());
                labels.len() - 1
            });
            orbit_of[v] = id;
        }
        let mut pairs = Vec::new();
        for (a, b) in self.edges() {
            if orbit_of[a] == orbit_of[b] {
                return Err(Error::WithinOrbitEdge(self.labels[a].clone(), self.labels[b].clone()));
            }
            pairs.push((orbit_of[a], orbit_of[b]));
        }
        Graph::from_unsorted(labels, &pairs)
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.vertex_count()];
        let mut out = Vec::new();
        for s in 0..self.vertex_count() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<Vec<&str>> {
        self.components()
            .into_iter()
            .map(|c| c.into_iter().map(|v| self.label(v)).collect())
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Component of `v`, sorted.
    pub fn component_of(&self, v: usize) -> Vec<usize> {
        let mut seen = vec![false; self.vertex_count()];
        seen[v] = true;
        let mut queue = VecDeque::from([v]);
        let mut members = vec![v];
        while let Some(x) = queue.pop_front() {
            for &w in &self.adj[x] {
                if !seen[w] {
                    seen[w] = true;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// Entry `l` is true iff a walk of exactly length `l` runs from `u` to `v`,
    /// for `l = 0..=maxlen`.
    pub fn walk_counts_by_length(&self, u: &str, v: &str, maxlen: usize) -> Result<Vec<bool>> {
        let (iu, iv) = (self.require(u)?, self.require(v)?);
        let layers = self.walk_layers(iu, maxlen);
        Ok(layers.iter().map(|layer| layer[iv]).collect())
    }

    /// Boolean reachability by walks of each exact length `0..=maxlen`.
    pub fn walk_layers(&self, u: usize, maxlen: usize) -> Vec<Vec<bool>> {
        let n = self.vertex_count();
        let mut layers = Vec::with_capacity(maxlen + 1);
        let mut cur = vec![false; n];
        cur[u] = true;
        layers.push(cur.clone());
        for _ in 0..maxlen {
            let mut next = vec![false; n];
            for (x, &on) in cur.iter().enumerate() {
                if on {
                    for &y in &self.adj[x] {
                        next[y] = true;
                    }
                }
            }
            layers.push(next.clone());
            cur = next;
        }
        layers
    }

    /// Sparse variant of [`Graph::walk_layers`]: the sorted target sets.
    pub fn walk_targets(&self, u: usize, maxlen: usize) -> Vec<Vec<usize>> {
        let mut layers = vec![vec![u]];
        for _ in 0..maxlen {
            let last = layers.last().expect("nonempty");
            let mut next: Vec<usize> =
                last.iter().flat_map(|&x| self.adj[x].iter().copied()).collect();
            next.sort_unstable();
            next.dedup();
            layers.push(next);
        }
        layers
    }

    /// Breadth-first distances from `s`; unreachable vertices are `None`.
    pub fn distances(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].expect("queued vertices have distances");
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Subgraph spanned by the given vertex indices and the edges among them.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let keep: BTreeSet<usize> = vertices.iter().copied().collect();
        self.subgraph_with(&keep, |a, b| keep.contains(&a) && keep.contains(&b))
    }

    fn subgraph_with(&self, keep: &BTreeSet<usize>, edge_ok: impl Fn(usize, usize) -> bool) -> Graph {
        let labels: Vec<String> = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let pairs: Vec<(usize, usize)> = self
            .edges()
            .filter(|&(a, b)| edge_ok(a, b))
            .map(|(a, b)| (pos[&a], pos[&b]))
            .collect();
        Graph::from_sorted_parts(labels, index, pairs)
    }

    /// Whether every vertex and edge of `self` belongs to `parent`.
    pub fn is_subgraph_of(&self, parent: &Graph) -> bool {
        self.labels.iter().all(|l| parent.contains(l))
            && self.edge_labels().iter().all(|(a, b)| parent.has_edge_labels(a, b))
    }

    /// Common vertices and common edges of two graphs.
    pub fn intersection(&self, other: &Graph) -> Graph {
        let labels: Vec<String> =
            self.labels.iter().filter(|l| other.contains(l)).cloned().collect();
        let edges: Vec<(&str, &str)> = self
            .edge_labels()
            .into_iter()
            .filter(|(a, b)| other.has_edge_labels(a, b))
            .collect();
        Graph::new(labels, edges).expect("intersection of simple graphs is simple")
    }

    /// Union of graphs sharing a label space.
    pub fn union(parts: &[&Graph]) -> Graph {
        let labels: BTreeSet<&str> =
            parts.iter().flat_map(|g| g.labels.iter().map(String::as_str)).collect();
        let edges: BTreeSet<(&str, &str)> = parts.iter().flat_map(|g| g.edge_labels()).collect();
        Graph::new(labels, edges).expect("union of simple graphs is simple")
    }

    pub fn to_json_value(&self) -> GraphJson {
        GraphJson {
            vertices: self.labels.clone(),
            edges: self
                .edges()
                .map(|(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
                .collect(),
        }
    }

    /// Compact JSON: vertices in label order, each edge as `[smaller, larger]`,
    /// edges in lexicographic order, followed by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(&self.to_json_value()).expect("graph serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let raw: GraphJson = serde_json::from_str(text)?;
        Graph::new(raw.vertices, raw.edges)
    }

    /// Graphviz DOT: `graph G {`, one quoted node line per vertex in label
    /// order, one `"a" -- "b";` line per edge in lexicographic order, `}`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for l in &self.labels {
            out.push_str(&format!("  {};\n", dot_quote(l)));
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("  {} -- {};\n", dot_quote(&self.labels[a]), dot_quote(&self.labels[b])));
        }
        out.push_str("}\n");
        out
    }
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifying::build_grid22;

    fn p2() -> Graph {
        Graph::new(["a", "b"], [("a", "b")]).unwrap()
    }

    #[test]
    fn neighbors_examples() {
        assert_eq!(Graph::cycle(5).neighbors("0").unwrap(), vec!["1", "4"]);
        assert_eq!(p2().neighbors("a").unwrap(), vec!["b"]);
        assert_eq!(
            build_grid22().neighbors("(1,1)").unwrap(),
            vec!["(0,1)", "(1,0)", "(1,2)", "(2,1)"]
        );
        assert_eq!(p2().neighbors("z"), Err(Error::UnknownVertex("z".into())));
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(matches!(Graph::new(["a", "a"], Vec::<(&str, &str)>::new()), Err(Error::DuplicateVertex(_))));
        assert!(matches!(Graph::new(["a"], [("a", "a")]), Err(Error::SelfLoop(_))));
        assert!(matches!(Graph::new(["a"], [("a", "b")]), Err(Error::UnknownVertex(_))));
        let g = Graph::new(["a", "b"], [("a", "b"), ("b", "a")]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn cycles_examples() {
        assert_eq!(Graph::cycle(4).enumerate_cycles(4), vec![vec!["0", "1", "2", "3"]]);
        assert!(Graph::cycle(5).enumerate_cycles(4).is_empty());
        assert_eq!(Graph::cycle(3).enumerate_cycles(3), vec![vec!["0", "1", "2"]]);
        assert!(Graph::cycle(5).enumerate_cycles(5).is_empty());
    }

    #[test]
    fn glue_wedge_of_edges() {
        let u = Graph::disjoint_union(&[("L", &p2()), ("R", &p2())]).unwrap();
        let mut m = IdentificationMap::new();
        m.identify("L/b", "R/a");
        let g = u.glue(&m).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors("L/b").unwrap(), vec!["L/a", "R/b"]);
    }

    #[test]
    fn glue_rejects_self_loop() {
        let mut m = IdentificationMap::new();
        m.identify("a", "b");
        assert!(matches!(p2().glue(&m), Err(Error::GlueSelfLoop(_, _))));
        let mut m = IdentificationMap::new();
        m.identify("a", "nope");
        assert!(matches!(p2().glue(&m), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn glue_collapses_parallel_edges() {
        let u = Graph::disjoint_union(&[("L", &p2()), ("R", &p2())]).unwrap();
        let mut m = IdentificationMap::new();
        m.identify("L/a", "R/a");
        m.identify("L/b", "R/b");
        let g = u.glue(&m).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
        // Gluing again by the induced residual map changes nothing.
        assert_eq!(g.glue(&IdentificationMap::new()).unwrap(), g);
    }

    #[test]
    fn disjoint_union_counts() {
        let u = Graph::disjoint_union(&[("x", &p2()), ("y", &p2())]).unwrap();
        assert_eq!((u.vertex_count(), u.edge_count()), (4, 2));
        let c = Graph::disjoint_union(&[("p", &Graph::cycle(3))]).unwrap();
        assert_eq!(c.labels(), &["p/0", "p/1", "p/2"]);
        assert_eq!(c.edge_count(), 3);
        let grid = build_grid22();
        let g3 = Graph::disjoint_union(&[("A1", &grid), ("A2", &grid), ("A3", &grid)]).unwrap();
        assert_eq!((g3.vertex_count(), g3.edge_count()), (27, 36));
        assert!(g3.contains("A2(0,2)"));
        assert!(matches!(
            Graph::disjoint_union(&[("x", &p2()), ("x", &p2())]),
            Err(Error::PrefixCollision(_))
        ));
    }

    #[test]
    fn components_examples() {
        assert_eq!(Graph::cycle(5).components().len(), 1);
        let two = Graph::disjoint_union(&[("x", &p2()), ("y", &p2())]).unwrap();
        assert_eq!(two.connected_components(), vec![vec!["x/a", "x/b"], vec!["y/a", "y/b"]]);
        assert!(Graph::empty().components().is_empty());
    }

    #[test]
    fn walk_counts_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.walk_counts_by_length("0", "0", 4).unwrap(), vec![true, false, true, false, true]);
        assert_eq!(p2().walk_counts_by_length("a", "b", 4).unwrap(), vec![false, true, false, true, false]);
        assert_eq!(c5.walk_counts_by_length("2", "2", 0).unwrap(), vec![true]);
        // Odd cycle: closed walks of length 5 exist.
        assert!(c5.walk_counts_by_length("0", "0", 5).unwrap()[5]);
    }

    #[test]
    fn json_and_dot_are_stable() {
        let g = Graph::new(["b", "a", "c"], [("c", "a"), ("b", "a")]).unwrap();
        assert_eq!(g.to_json(), "{\"vertices\":[\"a\",\"b\",\"c\"],\"edges\":[[\"a\",\"b\"],[\"a\",\"c\"]]}\n");
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
        assert_eq!(
            Graph::cycle(4).to_dot(),
            "graph G {\n  \"0\";\n  \"1\";\n  \"2\";\n  \"3\";\n  \"0\" -- \"1\";\n  \"0\" -- \"3\";\n  \"1\" -- \"2\";\n  \"2\" -- \"3\";\n}\n"
        );
        assert_eq!(Graph::empty().to_dot(), "graph G {\n}\n");
    }

    #[test]
    fn subgraph_and_intersection() {
        let c5 = Graph::cycle(5);
        let arc = Graph::new(["0", "1"], [("0", "1")]).unwrap();
        let long = Graph::new(["1", "2", "3", "4", "0"], [("1", "2"), ("2", "3"), ("3", "4"), ("4", "0")]).unwrap();
        assert!(arc.is_subgraph_of(&c5) && long.is_subgraph_of(&c5));
        let meet = arc.intersection(&long);
        assert_eq!((meet.vertex_count(), meet.edge_count()), (2, 0));
        assert_eq!(Graph::union(&[&arc, &long]), c5);
        assert!(!Graph::new(["0", "2"], [("0", "2")]).unwrap().is_subgraph_of(&c5));
    }
}
