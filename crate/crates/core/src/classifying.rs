//! The block graph `B`, the covering graph `X̃` built from one block per
//! triple of group elements, the covering criterion, and the classifying
//! graph `X = X̃ / G`.
//!
//! # Labels
//!
//! Grid vertices are `(x,y)`. In `D` they are `A1(x,y)`, `A2(x,y)`,
//! `A3(x,y)`; in `B` they carry the copy prefix `D12/`, `D23/` or `D31/`.
//! Glued vertices are named by the least label of their class, so the centre
//! of `B`, for instance, is `D12/A1(2,2)`.
//!
//! `B` is glued from three copies of `D` cyclically: the `A2(·,2)` row of
//! each copy meets the `A3(2,·)` row of the next, so `B` is invariant under
//! the rotation `D12 → D23 → D31 → D12`. It has 49 vertices and its corners
//! are the three `A1(0,0)` vertices.
//!
//! # The two block schemes
//!
//! [`BlockScheme::Direct`] glues one block per triple up to rotation, and
//! identifies boundary walks and corners directly. It is kept for comparison:
//! it is not simply connected for `|G| ≥ 4`, and elements of order 3 fix the
//! centre of the blocks they rotate.
//!
//! [`BlockScheme::Corrected`] (the default) keeps one block `B(a,b,c)` per
//! ordered triple of distinct elements. Its three boundary walks run `a → b`,
//! `b → c` and `c → a`; the third is read backwards as a walk `a → c`. Each
//! boundary walk is joined by rungs to a shared path `W(x,y)` of length 8
//! from `K(x)` to `K(y)`, one per ordered pair `(x, y)`, and the corner
//! vertices `K(x)` are shared by every block containing `x`. `G` acts by left
//! translation on triples, pairs and corners.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{FiniteGroup, GroupAction};
use crate::identify::{IdentificationMap, Resolution, UnionFind};
use crate::label::Label;
use crate::presentation::{pi12_presentation, Mode};
use crate::snf::abelianize;
use crate::tietze::{tietze_simplify, DEFAULT_PASSES};
use crate::todd_coxeter::{todd_coxeter, CosetVerdict, DEFAULT_COSET_BUDGET};

/// Names of the three copies of `D` inside `B`, in rotation order.
pub const COPIES: [&str; 3] = ["D12", "D23", "D31"];

/// The 3×3 grid on `{0,1,2}²`.
pub fn build_grid22() -> Graph {
    let label = |x: usize, y: usize| format!("({x},{y})");
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for x in 0..3 {
        for y in 0..3 {
            vertices.push(label(x, y));
            if x < 2 {
                edges.push((label(x, y), label(x + 1, y)));
            }
            if y < 2 {
                edges.push((label(x, y), label(x, y + 1)));
            }
        }
    }
    Graph::new(vertices, edges).expect("grid is simple")
}

fn grid_label(prefix: &str, j: usize, x: usize, y: usize) -> String {
    format!("{prefix}A{j}({x},{y})")
}

/// Row and column identifications between the grids of one copy of `D`.
fn d_identifications(m: &mut IdentificationMap, prefix: &str) {
    for k in 0..3 {
        m.identify(grid_label(prefix, 1, k, 2), grid_label(prefix, 2, k, 0));
        m.identify(grid_label(prefix, 1, 2, k), grid_label(prefix, 3, 0, k));
        m.identify(grid_label(prefix, 2, 2, k), grid_label(prefix, 3, k, 2));
    }
}

fn grids(prefixes: &[String]) -> Result<Graph> {
    let grid = build_grid22();
    let names: Vec<String> = prefixes
        .iter()
        .flat_map(|p| (1..=3).map(move |j| format!("{p}A{j}")))
        .collect();
    let parts: Vec<(&str, &Graph)> = names.iter().map(|n| (n.as_str(), &grid)).collect();
    Graph::disjoint_union(&parts)
}

/// Three grids glued along rows and columns into the 19-vertex graph `D`.
pub fn build_d() -> Graph {
    let mut m = IdentificationMap::new();
    d_identifications(&mut m, "");
    grids(&[String::new()]).and_then(|g| g.glue(&m)).expect("D glues consistently")
}

/// `B` with its corner labels and the resolution from unglued labels.
#[derive(Debug, Clone)]
pub struct BlockGraph {
    pub graph: Graph,
    pub corners: [String; 3],
    resolution: Resolution,
}

impl BlockGraph {
    /// Label in `B` of `A_j(x,y)` in copy `copy` (0, 1, 2 for D12, D23, D31).
    pub fn vertex(&self, copy: usize, j: usize, x: usize, y: usize) -> &str {
        let raw = grid_label(&format!("{}/", COPIES[copy % 3]), j, x, y);
        self.graph.label(self.graph.index_of(self.resolution.get(&raw)).expect("resolved labels exist"))
    }

    /// Boundary walk of length 8 from corner `side` to corner `side + 1`
    /// (mod 3), as vertex indices of [`BlockGraph::graph`].
    pub fn fringe_walk(&self, side: usize) -> Vec<usize> {
        let (c, d) = (side % 3, (side + 1) % 3);
        let coords = [
            (c, 1, 0, 0),
            (c, 1, 0, 1),
            (c, 1, 0, 2),
            (c, 2, 0, 1),
            (c, 2, 0, 2),
            (d, 3, 1, 0),
            (d, 3, 0, 0),
            (d, 1, 1, 0),
            (d, 1, 0, 0),
        ];
        coords
            .iter()
            .map(|&(copy, j, x, y)| self.graph.index_of(self.vertex(copy, j, x, y)).expect("vertex exists"))
            .collect()
    }

    pub fn corner_indices(&self) -> [usize; 3] {
        self.corners.clone().map(|c| self.graph.index_of(&c).expect("corner exists"))
    }

    /// The automorphism `D12 → D23 → D31 → D12` as a permutation of indices.
    pub fn rotation(&self) -> Result<Vec<usize>> {
        let n = self.graph.vertex_count();
        let mut perm = vec![usize::MAX; n];
        for copy in 0..3 {
            for j in 1..=3 {
                for x in 0..3 {
                    for y in 0..3 {
                        let from = self.graph.index_of(self.vertex(copy, j, x, y)).expect("exists");
                        let to = self.graph.index_of(self.vertex(copy + 1, j, x, y)).expect("exists");
                        if perm[from] != usize::MAX && perm[from] != to {
                            return Err(Error::Construction("B is not rotation invariant".into()));
                        }
                        perm[from] = to;
                    }
                }
            }
        }
        Ok(perm)
    }
}

/// The block graph: three copies of `D` glued cyclically.
pub fn build_b() -> Result<BlockGraph> {
    let prefixes: Vec<String> = COPIES.iter().map(|c| format!("{c}/")).collect();
    let raw = grids(&prefixes)?;
    let mut m = IdentificationMap::new();
    for p in &prefixes {
        d_identifications(&mut m, p);
    }
    for c in 0..3 {
        let (here, next) = (&prefixes[c], &prefixes[(c + 1) % 3]);
        for k in 0..3 {
            m.identify(grid_label(here, 2, k, 2), grid_label(next, 3, 2, k));
        }
    }
    let graph = raw.glue(&m)?;
    let resolution = m.resolve();
    let corners = [0, 1, 2].map(|c| resolution.get(&grid_label(&prefixes[c], 1, 0, 0)).to_string());
    let block = BlockGraph { graph, corners, resolution };
    check_block(&block)?;
    Ok(block)
}

fn check_block(b: &BlockGraph) -> Result<()> {
    let corners = b.corner_indices();
    for (i, &u) in corners.iter().enumerate() {
        let layers = b.graph.walk_layers(u, 4);
        for &v in corners.iter().skip(i + 1) {
            if [1, 2, 4].iter().any(|&l| layers[l][v]) {
                return Err(Error::Construction(format!(
                    "corners `{}` and `{}` are joined by a short walk",
                    b.graph.label(u),
                    b.graph.label(v)
                )));
            }
        }
    }
    for side in 0..3 {
        let w = b.fringe_walk(side);
        if w.windows(2).any(|e| !b.graph.has_edge(e[0], e[1])) {
            return Err(Error::Construction(format!("boundary walk {side} is not a walk")));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockScheme {
    /// One block per ordered triple, joined through shared collar paths.
    #[default]
    Corrected,
    /// One block per triple up to rotation, boundary walks glued directly.
    Direct,
}

/// `X̃` with its `G`-action.
#[derive(Debug, Clone)]
pub struct Xtilde {
    pub scheme: BlockScheme,
    pub graph: Graph,
    pub action: GroupAction,
    /// Triples of element indices, one per block.
    pub blocks: Vec<[usize; 3]>,
    /// Graph index of each block vertex: `block_vertices[block][local]`,
    /// with `local` indexing [`BlockGraph::graph`].
    pub block_vertices: Vec<Vec<usize>>,
}

impl Xtilde {
    pub fn block_index(&self, triple: [usize; 3]) -> Option<usize> {
        self.blocks.iter().position(|&t| t == triple)
    }
}

fn triple_label(group: &FiniteGroup, t: [usize; 3]) -> String {
    format!("B({},{},{})", group.name(t[0]), group.name(t[1]), group.name(t[2]))
}

fn ordered_triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in (0..n).filter(|&b| b != a) {
            for c in (0..n).filter(|&c| c != a && c != b) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// `X̃` for `group` with the default (corrected) scheme.
pub fn build_xtilde(group: &FiniteGroup) -> Result<(Graph, GroupAction)> {
    let x = build_xtilde_with(group, BlockScheme::Corrected)?;
    Ok((x.graph, x.action))
}

pub fn build_xtilde_with(group: &FiniteGroup, scheme: BlockScheme) -> Result<Xtilde> {
    if group.order() < 4 {
        return Err(Error::GroupTooSmall(group.order()));
    }
    let block = build_b()?;
    match scheme {
        BlockScheme::Corrected => corrected(group, &block),
        BlockScheme::Direct => direct(group, &block),
    }
}

/// Interns labels and collects edges for graphs assembled from pieces.
#[derive(Default)]
struct Builder {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self, label: String) -> usize {
        if let Some(&i) = self.index.get(&label) {
            return i;
        }
        self.labels.push(label.clone());
        self.index.insert(label, self.labels.len() - 1);
        self.labels.len() - 1
    }

    fn finish(self) -> Result<(Graph, Vec<usize>)> {
        let graph = Graph::new(self.labels.iter().cloned(), self.edges.iter().map(|&(a, b)| {
            (self.labels[a].as_str(), self.labels[b].as_str())
        }))?;
        let pos = self.labels.iter().map(|l| graph.index_of(l).expect("interned")).collect();
        Ok((graph, pos))
    }
}

fn corrected(group: &FiniteGroup, block: &BlockGraph) -> Result<Xtilde> {
    let b = &block.graph;
    let blocks = ordered_triples(group.order());
    let corner_label = |x: usize| format!("K({})", group.name(x));
    let collar_label = |x: usize, y: usize, k: usize| match k {
        0 => corner_label(x),
        8 => corner_label(y),
        _ => format!("W({},{})/{k}", group.name(x), group.name(y)),
    };
    let sides = [block.fringe_walk(0), block.fringe_walk(1), block.fringe_walk(2)];
    let mut bl = Builder::default();
    let mut local_ids = Vec::with_capacity(blocks.len());
    for &t in &blocks {
        let prefix = triple_label(group, t);
        let ids: Vec<usize> = b.labels().iter().map(|l| bl.vertex(Label::prefixed(&prefix, l))).collect();
        for (u, v) in b.edges() {
            bl.edges.push((ids[u], ids[v]));
        }
        // Side 0 runs a → b, side 1 runs b → c, side 2 runs c → a and is
        // attached to the collar of (a, c) backwards.
        let [a, bb, c] = t;
        for (side, (x, y, reversed)) in [(a, bb, false), (bb, c, false), (a, c, true)].into_iter().enumerate() {
            let collar: Vec<usize> = (0..=8).map(|k| bl.vertex(collar_label(x, y, k))).collect();
            for k in 0..=8 {
                if k < 8 {
                    bl.edges.push((collar[k], collar[k + 1]));
                }
                let on_side = sides[side][if reversed { 8 - k } else { k }];
                bl.edges.push((ids[on_side], collar[k]));
            }
        }
        local_ids.push(ids);
    }
    let (graph, pos) = bl.finish()?;
    let block_vertices: Vec<Vec<usize>> =
        local_ids.iter().map(|ids| ids.iter().map(|&i| pos[i]).collect()).collect();

    // Left translation, read off from the labels of translated pieces.
    let mut perms = Vec::with_capacity(group.order());
    for g in 0..group.order() {
        let mut perm = vec![usize::MAX; graph.vertex_count()];
        for (bi, &t) in blocks.iter().enumerate() {
            let gt = t.map(|x| group.mul(g, x));
            let target = blocks.iter().position(|&s| s == gt).expect("translates are triples");
            for (local, &v) in block_vertices[bi].iter().enumerate() {
                perm[v] = block_vertices[target][local];
            }
            for (x, y) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
                for k in 0..=8 {
                    let from = graph.index_of(&collar_label(x, y, k)).expect("collar exists");
                    let to = graph.index_of(&collar_label(group.mul(g, x), group.mul(g, y), k)).expect("collar exists");
                    perm[from] = to;
                }
            }
        }
        perms.push(perm);
    }
    let action = GroupAction::new(&graph, group, perms)?;
    Ok(Xtilde { scheme: BlockScheme::Corrected, graph, action, blocks, block_vertices })
}

/// Least rotation of a triple, and how far `t` is rotated from it:
/// `t[i] == canon[(i + r) % 3]`.
fn canonical_rotation(t: [usize; 3]) -> ([usize; 3], usize) {
    (0..3)
        .map(|r| ([t[(3 - r) % 3], t[(4 - r) % 3], t[(5 - r) % 3]], r))
        .min()
        .expect("three rotations")
}

fn direct(group: &FiniteGroup, block: &BlockGraph) -> Result<Xtilde> {
    let b = &block.graph;
    let nb = b.vertex_count();
    let blocks: Vec<[usize; 3]> =
        ordered_triples(group.order()).into_iter().filter(|&t| canonical_rotation(t).1 == 0).collect();
    let block_of: HashMap<[usize; 3], usize> = blocks.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let sides = [block.fringe_walk(0), block.fringe_walk(1), block.fringe_walk(2)];
    let rotation = block.rotation()?;

    // Side r of canonical block C is the boundary walk w(C[r], C[r+1]) of the
    // rotated triple; walks with the same ordered pair are identified.
    let mut uf = UnionFind::new(blocks.len() * nb);
    let mut first_walk: HashMap<(usize, usize), usize> = HashMap::new();
    let mut first_corner: HashMap<usize, usize> = HashMap::new();
    for (bi, c) in blocks.iter().enumerate() {
        for r in 0..3 {
            let pair = (c[r], c[(r + 1) % 3]);
            let first = *first_walk.entry(pair).or_insert(bi * 3 + r);
            let (fb, fr) = (first / 3, first % 3);
            for k in 0..=8 {
                uf.union(bi * nb + sides[r][k], fb * nb + sides[fr][k]);
            }
            let corner = bi * nb + sides[r][0];
            let fc = *first_corner.entry(c[r]).or_insert(corner);
            uf.union(corner, fc);
        }
    }
    let raw_label = |raw: usize| Label::prefixed(&triple_label(group, blocks[raw / nb]), b.label(raw % nb));
    let mut rep_label: HashMap<usize, String> = HashMap::new();
    for raw in 0..blocks.len() * nb {
        let root = uf.find(raw);
        let l = raw_label(raw);
        match rep_label.get(&root) {
            Some(cur) if *cur <= l => {}
            _ => {
                rep_label.insert(root, l);
            }
        }
    }
    let mut bl = Builder::default();
    let class: Vec<usize> = (0..blocks.len() * nb).map(|raw| bl.vertex(rep_label[&uf.find(raw)].clone())).collect();
    for bi in 0..blocks.len() {
        for (u, v) in b.edges() {
            let (cu, cv) = (class[bi * nb + u], class[bi * nb + v]);
            if cu == cv {
                return Err(Error::GlueSelfLoop(raw_label(bi * nb + u), raw_label(bi * nb + v)));
            }
            bl.edges.push((cu, cv));
        }
    }
    let (graph, pos) = bl.finish()?;
    let block_vertices: Vec<Vec<usize>> =
        (0..blocks.len()).map(|bi| (0..nb).map(|l| pos[class[bi * nb + l]]).collect()).collect();

    let mut perms = Vec::with_capacity(group.order());
    for g in 0..group.order() {
        let mut perm = vec![usize::MAX; graph.vertex_count()];
        for (bi, c) in blocks.iter().enumerate() {
            let (canon, r) = canonical_rotation(c.map(|x| group.mul(g, x)));
            let target = block_of[&canon];
            for local in 0..nb {
                // Copy i of the translated triple is copy i + r of its
                // canonical block.
                let mut l = local;
                for _ in 0..r {
                    l = rotation[l];
                }
                let (from, to) = (block_vertices[bi][local], block_vertices[target][l]);
                if perm[from] != usize::MAX && perm[from] != to {
                    return Err(Error::Construction(format!(
                        "translation by `{}` is not well defined on `{}`",
                        group.name(g),
                        graph.label(from)
                    )));
                }
                perm[from] = to;
            }
        }
        perms.push(perm);
    }
    let action = GroupAction::new(&graph, group, perms)?;
    Ok(Xtilde { scheme: BlockScheme::Direct, graph, action, blocks, block_vertices })
}

/// Outcome of trying to certify that π₁² is trivial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Certification {
    /// Proved trivial: simplification or coset enumeration reached order 1.
    Certified,
    /// Proved nontrivial: nontrivial abelianization or coset order above 1.
    Refuted,
    /// Budgets ran out first.
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    pub tietze_passes: usize,
    pub coset_budget: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { tietze_passes: DEFAULT_PASSES, coset_budget: DEFAULT_COSET_BUDGET }
    }
}

/// Decides whether π₁²(g) is trivial, within budgets. `g` should be
/// connected; the component of its first vertex is examined.
pub fn certify_trivial(g: &Graph, budgets: Budgets) -> Certification {
    if g.is_empty() {
        return Certification::Certified;
    }
    let p = pi12_presentation(g, g.label(0), Mode::Pi12).expect("first vertex exists");
    let s = tietze_simplify(&p, budgets.tietze_passes);
    if s.is_trivial() {
        return Certification::Certified;
    }
    if !abelianize(&s).is_trivial() {
        return Certification::Refuted;
    }
    match todd_coxeter(&s, budgets.coset_budget) {
        CosetVerdict::FiniteOrder { order: 1 } => Certification::Certified,
        CosetVerdict::FiniteOrder { .. } => Certification::Refuted,
        CosetVerdict::ExceededBudget { .. } => Certification::Inconclusive,
    }
}

/// The hypotheses of the covering criterion, checked on a concrete action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub connected: bool,
    pub pi12_trivial: Certification,
    pub action_free: bool,
    pub walk_condition: bool,
    /// Human-readable witnesses for failed checks (truncated).
    pub offenders: Vec<String>,
}

impl LemmaReport {
    pub fn all_true(&self) -> bool {
        self.connected && self.pi12_trivial == Certification::Certified && self.action_free && self.walk_condition
    }
}

const MAX_OFFENDERS: usize = 20;

/// Checks connectivity, freeness, the absence of walks of length 1, 2 or 4
/// from any `v` to `g·v` with `g ≠ e`, and triviality of π₁²(x).
pub fn check_lemma_conditions(x: &Graph, group: &FiniteGroup, act: &GroupAction, budgets: Budgets) -> LemmaReport {
    let mut offenders = Vec::new();
    let connected = x.is_connected();
    if !connected {
        offenders.push(format!("graph has {} components", x.components().len()));
    }
    let mut action_free = true;
    let mut walk_condition = true;
    for v in 0..x.vertex_count() {
        let layers = x.walk_targets(v, 4);
        for g in (0..group.order()).filter(|&g| g != group.identity()) {
            let w = act.apply(g, v);
            if w == v {
                action_free = false;
                if offenders.len() < MAX_OFFENDERS {
                    offenders.push(format!("`{}` fixes `{}`", group.name(g), x.label(v)));
                }
            }
            for len in [1, 2, 4] {
                if layers[len].binary_search(&w).is_ok() {
                    walk_condition = false;
                    if offenders.len() < MAX_OFFENDERS {
                        offenders.push(format!(
                            "walk of length {len} from `{}` to its translate `{}` by `{}`",
                            x.label(v),
                            x.label(w),
                            group.name(g)
                        ));
                    }
                    break;
                }
            }
        }
    }
    let pi12_trivial = certify_trivial(x, budgets);
    if pi12_trivial != Certification::Certified {
        offenders.push(format!("pi_1^2 triviality: {pi12_trivial:?}"));
    }
    LemmaReport { connected, pi12_trivial, action_free, walk_condition, offenders }
}

/// Everything produced on the way to the classifying graph of `group`.
#[derive(Debug, Clone)]
pub struct Classifying {
    pub group: FiniteGroup,
    /// The group whose blocks build `X̃`: `group` itself when it has order at
    /// least 4, otherwise a product containing it.
    pub cover_group: FiniteGroup,
    /// Index in `cover_group` of each element of `group`.
    pub embedding: Vec<usize>,
    pub xtilde: Xtilde,
    /// The action of `group` on `X̃` (restricted when embedded).
    pub action: GroupAction,
    pub quotient: Graph,
}

/// The group used for blocks when `group` is too small: `G × Z/4` for the
/// trivial group, `G × Z/2` for orders 2 and 3.
pub fn cover_group(group: &FiniteGroup) -> (FiniteGroup, Vec<usize>) {
    let k = match group.order() {
        1 => 4,
        2 | 3 => 2,
        _ => return (group.clone(), (0..group.order()).collect()),
    };
    let c = FiniteGroup::cyclic(k);
    let h = FiniteGroup::product(group, &c);
    // Elements of the product are ordered (g, c) lexicographically.
    let embedding = (0..group.order()).map(|g| g * k + c.identity()).collect();
    (h, embedding)
}

pub fn classify(group: &FiniteGroup, scheme: BlockScheme) -> Result<Classifying> {
    let (h, embedding) = cover_group(group);
    let xtilde = build_xtilde_with(&h, scheme)?;
    let action = xtilde.action.restrict(&embedding);
    let quotient = xtilde.graph.quotient_by_action(group, &action, true)?;
    Ok(Classifying { group: group.clone(), cover_group: h, embedding, xtilde, action, quotient })
}

/// A connected graph whose π₁² is `group`.
pub fn build_classifying_graph(group: &FiniteGroup) -> Result<Graph> {
    Ok(classify(group, BlockScheme::Corrected)?.quotient)
}
