//! Covers by subgraphs and the colimit presentations of the Seifert–van
//! Kampen theorems: the amalgamated product for two pieces and the vertex
//! group of the colimit of fundamental groupoids on a base set.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homotopy::Walk;
use crate::presentation::{pi12_presentation, GraphPresentation, GroupPresentation, Mode};
use crate::snf::{abelianize, AbelianInvariants};
use crate::tietze::{tietze_simplify, DEFAULT_PASSES};
use crate::todd_coxeter::{todd_coxeter, DEFAULT_COSET_BUDGET};
use crate::word::{Letter, Word};

/// Subgraphs of a common parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    pub members: Vec<Graph>,
}

impl Cover {
    pub fn new(parent: &Graph, members: Vec<Graph>) -> Result<Cover> {
        for (i, m) in members.iter().enumerate() {
            if !m.is_subgraph_of(parent) {
                return Err(Error::NotSubgraph(format!("member {i}")));
            }
        }
        Ok(Cover { members })
    }

    /// Adds every nonempty pairwise intersection that is not already a
    /// member, repeating until the family is closed.
    pub fn with_intersections(&self) -> Cover {
        let mut members = self.members.clone();
        let mut i = 0;
        while i < members.len() {
            for j in 0..i {
                let x = members[i].intersection(&members[j]);
                if !x.is_empty() && !members.contains(&x) {
                    members.push(x);
                }
            }
            i += 1;
        }
        Cover { members }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CoverReport {
    pub covers_union: bool,
    pub intersection_closed: bool,
    pub four_cycle_condition: bool,
    /// Parent vertices and edges in no member.
    pub uncovered: Vec<String>,
    /// Member index pairs whose nonempty intersection is not a member.
    pub missing_intersections: Vec<(usize, usize)>,
    /// 4-cycles of the parent contained in no member.
    pub uncovered_cycles: Vec<Vec<String>>,
}

impl CoverReport {
    pub fn passes(&self) -> bool {
        self.covers_union && self.intersection_closed && self.four_cycle_condition
    }
}

pub fn check_cover(g: &Graph, u: &Cover) -> Result<CoverReport> {
    for (i, m) in u.members.iter().enumerate() {
        if !m.is_subgraph_of(g) {
            return Err(Error::NotSubgraph(format!("member {i}")));
        }
    }
    let mut report = CoverReport::default();
    for l in g.labels() {
        if !u.members.iter().any(|m| m.contains(l)) {
            report.uncovered.push(l.clone());
        }
    }
    for (a, b) in g.edge_labels() {
        if !u.members.iter().any(|m| m.has_edge_labels(a, b)) {
            report.uncovered.push(format!("{a}--{b}"));
        }
    }
    report.covers_union = report.uncovered.is_empty();
    for i in 0..u.members.len() {
        for j in i + 1..u.members.len() {
            let x = u.members[i].intersection(&u.members[j]);
            if !x.is_empty() && !u.members.contains(&x) {
                report.missing_intersections.push((i, j));
            }
        }
    }
    report.intersection_closed = report.missing_intersections.is_empty();
    for c in g.cycles(4) {
        let inside = |m: &Graph| {
            (0..4).all(|k| m.has_edge_labels(g.label(c[k]), g.label(c[(k + 1) % 4])))
        };
        if !u.members.iter().any(inside) {
            report.uncovered_cycles.push(c.iter().map(|&v| g.label(v).to_string()).collect());
        }
    }
    report.four_cycle_condition = report.uncovered_cycles.is_empty();
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct BaseSetReport {
    pub ok: bool,
    /// `(member index, component)` for components missing the base set.
    pub offenders: Vec<(usize, Vec<String>)>,
}

/// Whether every connected component of every member meets `a`.
pub fn check_base_set(u: &Cover, a: &[String]) -> BaseSetReport {
    let aset: BTreeSet<&str> = a.iter().map(String::as_str).collect();
    let mut offenders = Vec::new();
    for (i, m) in u.members.iter().enumerate() {
        for comp in m.connected_components() {
            if !comp.iter().any(|v| aset.contains(v)) {
                offenders.push((i, comp.into_iter().map(str::to_string).collect()));
            }
        }
    }
    BaseSetReport { ok: offenders.is_empty(), offenders }
}

fn transfer(from: &Graph, to: &Graph, w: &Walk) -> Result<Walk> {
    Walk::from_labels(to, &w.labels(from))
}

/// The free product of π₁²(u1) and π₁²(u2) amalgamated over π₁²(u1 ∩ u2),
/// all based at `base`. Unless `force` is set the hypotheses are checked:
/// `g = u1 ∪ u2`, all four graphs connected, `base` shared, and every
/// 4-cycle of `g` inside `u1` or `u2`.
pub fn amalgamated_presentation(
    g: &Graph,
    u1: &Graph,
    u2: &Graph,
    base: &str,
    force: bool,
) -> Result<GroupPresentation> {
    let u0 = u1.intersection(u2);
    if !force {
        let cover = Cover::new(g, vec![u1.clone(), u2.clone(), u0.clone()])?;
        let report = check_cover(g, &cover)?;
        if !report.passes() {
            return Err(Error::Hypothesis(format!("cover check failed: {report:?}")));
        }
        for (name, x) in [("graph", g), ("first member", u1), ("second member", u2), ("intersection", &u0)] {
            if !x.is_connected() || x.is_empty() {
                return Err(Error::Hypothesis(format!("{name} is not connected")));
            }
        }
        if !u0.contains(base) {
            return Err(Error::Hypothesis(format!("base `{base}` is not in both members")));
        }
    }
    let p1 = GraphPresentation::build(u1, base, Mode::Pi12)?;
    let p2 = GraphPresentation::build(u2, base, Mode::Pi12)?;
    let p0 = GraphPresentation::build(&u0, base, Mode::Pi12)?;
    let n1 = p1.presentation.generator_count();
    let shift: Vec<Option<usize>> = (0..p2.presentation.generator_count()).map(|i| Some(i + n1)).collect();
    let mut generators: Vec<String> = p1.presentation.generators.iter().map(|n| format!("{n}@1")).collect();
    generators.extend(p2.presentation.generators.iter().map(|n| format!("{n}@2")));
    let mut relators = p1.presentation.relators.clone();
    relators.extend(p2.presentation.relators.iter().map(|r| r.renumber(&shift)));
    for gen in 0..p0.presentation.generator_count() {
        let w = p0.generator_walk(&u0, gen)?;
        let left = p1.walk_to_word(&transfer(&u0, u1, &w)?)?;
        let right = p2.walk_to_word(&transfer(&u0, u2, &w)?)?.renumber(&shift);
        let r = left.concat(&right.inverse()).cyclically_reduced();
        if !r.is_empty() {
            relators.push(r);
        }
    }
    GroupPresentation::new(generators, relators)
}

/// An arrow generator of a groupoid presentation on the base set.
#[derive(Debug, Clone)]
struct Arrow {
    name: String,
    src: usize,
    dst: usize,
    connecting: bool,
}

/// Groupoid data of one member: per component, a tree rooted at the least
/// base-set vertex, loop generators at that root, and a connecting arrow
/// from the root to every other base-set vertex.
struct MemberGroupoid {
    /// Root object of the component containing each vertex, if any.
    root_of: Vec<Option<usize>>,
    trees: BTreeMap<usize, GraphPresentation>,
    /// Arrow index of each loop generator: `(root, local generator)`.
    loops: HashMap<(usize, usize), usize>,
    /// Arrow index of the connecting arrow to each object.
    connecting: HashMap<usize, usize>,
}

struct Groupoid {
    objects: Vec<String>,
    object_of: HashMap<String, usize>,
    arrows: Vec<Arrow>,
    /// Closed arrow paths equal to the identity.
    relators: Vec<Vec<(usize, bool)>>,
}

impl Groupoid {
    fn member(&mut self, index: usize, m: &Graph) -> Result<MemberGroupoid> {
        let mut out = MemberGroupoid {
            root_of: vec![None; m.vertex_count()],
            trees: BTreeMap::new(),
            loops: HashMap::new(),
            connecting: HashMap::new(),
        };
        for comp in m.components() {
            let Some(&root) = comp.iter().find(|&&v| self.object_of.contains_key(m.label(v))) else {
                continue;
            };
            let robj = self.object_of[m.label(root)];
            for &v in &comp {
                out.root_of[v] = Some(root);
            }
            let gp = GraphPresentation::build(m, m.label(root), Mode::Pi12)?;
            for (i, name) in gp.presentation.generators.iter().enumerate() {
                out.loops.insert((root, i), self.arrows.len());
                self.arrows.push(Arrow { name: format!("U{index}:{name}"), src: robj, dst: robj, connecting: false });
            }
            for &v in comp.iter().filter(|&&v| v != root) {
                if let Some(&obj) = self.object_of.get(m.label(v)) {
                    out.connecting.insert(v, self.arrows.len());
                    self.arrows.push(Arrow {
                        name: format!("U{index}:c({})", m.label(v)),
                        src: robj,
                        dst: obj,
                        connecting: true,
                    });
                }
            }
            for r in &gp.presentation.relators {
                let path = r.letters().iter().map(|l| (out.loops[&(root, l.gen())], l.is_inverse())).collect();
                self.relators.push(path);
            }
            out.trees.insert(root, gp);
        }
        Ok(out)
    }

    /// Arrow path of a walk between base-set vertices of member `m`:
    /// `c_x⁻¹ · (loop word) · c_y`.
    fn walk_path(&self, m: &Graph, mg: &MemberGroupoid, w: &Walk) -> Result<Vec<(usize, bool)>> {
        let root = mg.root_of[w.start()]
            .ok_or_else(|| Error::Hypothesis(format!("`{}` is far from the base set", m.label(w.start()))))?;
        let gp = &mg.trees[&root];
        let mut path = Vec::new();
        if w.start() != root {
            path.push((mg.connecting[&w.start()], true));
        }
        for l in gp.walk_to_word(w)?.letters() {
            path.push((mg.loops[&(root, l.gen())], l.is_inverse()));
        }
        if w.end() != root {
            path.push((mg.connecting[&w.end()], false));
        }
        Ok(path)
    }
}

/// Presentation of the vertex group at `base` of the colimit of the
/// fundamental groupoids `Π(U, A ∩ U)` over the cover (with its inclusions).
/// Unless `force` is set, the cover and base set hypotheses are enforced.
pub fn groupoid_colimit_group(
    g: &Graph,
    u: &Cover,
    a: &[String],
    base: &str,
    force: bool,
) -> Result<GroupPresentation> {
    if a.is_empty() {
        return Err(Error::Hypothesis("base set is empty".into()));
    }
    for v in a {
        g.require(v)?;
    }
    if !a.iter().any(|v| v == base) {
        return Err(Error::Hypothesis(format!("base `{base}` is not in the base set")));
    }
    if !force {
        let report = check_cover(g, u)?;
        if !report.passes() {
            return Err(Error::Hypothesis(format!("cover check failed: {report:?}")));
        }
        let bs = check_base_set(u, a);
        if !bs.ok {
            return Err(Error::Hypothesis(format!("components miss the base set: {:?}", bs.offenders)));
        }
        if !g.is_connected() {
            return Err(Error::Hypothesis("graph is not connected".into()));
        }
    }
    let objects: Vec<String> = a.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let object_of = objects.iter().enumerate().map(|(i, o)| (o.clone(), i)).collect();
    let mut gd = Groupoid { objects, object_of, arrows: Vec::new(), relators: Vec::new() };
    let mut members = Vec::with_capacity(u.members.len());
    for (i, m) in u.members.iter().enumerate() {
        members.push(gd.member(i, m)?);
    }
    // Each generator of a smaller member equals its image in a larger one.
    for (wi, w) in u.members.iter().enumerate() {
        for (ui, big) in u.members.iter().enumerate() {
            if wi == ui || !w.is_subgraph_of(big) {
                continue;
            }
            let (small, large) = (&members[wi], &members[ui]);
            let mut pairs: Vec<(usize, Walk)> = Vec::new();
            for (&root, gp) in &small.trees {
                for gen in 0..gp.presentation.generator_count() {
                    pairs.push((small.loops[&(root, gen)], gp.generator_walk(w, gen)?));
                }
            }
            for (&v, &arrow) in &small.connecting {
                let root = small.root_of[v].expect("connected vertices have roots");
                let walk = Walk::new(w, small.trees[&root].tree.path_from_root(v))?;
                pairs.push((arrow, walk));
            }
            for (arrow, walk) in pairs {
                let image = gd.walk_path(big, large, &transfer(w, big, &walk)?)?;
                let mut rel = vec![(arrow, false)];
                rel.extend(image.iter().rev().map(|&(x, inv)| (x, !inv)));
                gd.relators.push(rel);
            }
        }
    }
    vertex_group(&gd, gd.object_of[base])
}

/// Contracts a spanning tree of connecting arrows from `base` and reads off
/// the group at `base`.
fn vertex_group(gd: &Groupoid, base: usize) -> Result<GroupPresentation> {
    let mut reached = vec![false; gd.objects.len()];
    let mut tree = vec![false; gd.arrows.len()];
    reached[base] = true;
    let mut queue = VecDeque::from([base]);
    while let Some(x) = queue.pop_front() {
        for (i, arr) in gd.arrows.iter().enumerate() {
            if !arr.connecting {
                continue;
            }
            for (from, to) in [(arr.src, arr.dst), (arr.dst, arr.src)] {
                if from == x && !reached[to] {
                    reached[to] = true;
                    tree[i] = true;
                    queue.push_back(to);
                }
            }
        }
    }
    let mut index = vec![None; gd.arrows.len()];
    let mut generators = Vec::new();
    for (i, arr) in gd.arrows.iter().enumerate() {
        if !tree[i] && reached[arr.src] {
            index[i] = Some(generators.len());
            generators.push(arr.name.clone());
        }
    }
    let mut relators = Vec::new();
    for rel in &gd.relators {
        if !rel.first().is_some_and(|&(a, inv)| {
            let arr = &gd.arrows[a];
            reached[if inv { arr.dst } else { arr.src }]
        }) {
            continue;
        }
        let word = Word::new(rel.iter().filter_map(|&(a, inv)| index[a].map(|g| Letter::new(g, inv))).collect());
        let word = word.cyclically_reduced();
        if !word.is_empty() {
            relators.push(word);
        }
    }
    GroupPresentation::new(generators, relators)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SvkVerdict {
    Agree,
    Disagree,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SvkReport {
    pub verdict: SvkVerdict,
    pub method: String,
    pub cover: CoverReport,
    pub colimit_invariants: AbelianInvariants,
    pub direct_invariants: AbelianInvariants,
    pub colimit_order: Option<usize>,
    pub direct_order: Option<usize>,
    pub colimit_presentation: GroupPresentation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SvkInput {
    /// Two members, amalgamated product.
    Pair(Graph, Graph),
    /// Any cover with a base set, groupoid colimit.
    BaseSet(Cover, Vec<String>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SvkOptions {
    /// Skip hypothesis checks.
    pub force: bool,
    /// Add pairwise intersections to a base-set cover before use.
    pub add_intersections: bool,
    pub tietze_passes: usize,
    pub coset_budget: usize,
}

impl Default for SvkOptions {
    fn default() -> Self {
        SvkOptions { force: false, add_intersections: true, tietze_passes: DEFAULT_PASSES, coset_budget: DEFAULT_COSET_BUDGET }
    }
}

/// Computes the colimit-side and direct presentations and compares their
/// abelian invariants and, for finite abelianizations, coset-enumeration
/// orders.
pub fn verify_svk(g: &Graph, input: &SvkInput, base: &str, opts: SvkOptions) -> Result<SvkReport> {
    let (method, cover, colimit) = match input {
        SvkInput::Pair(u1, u2) => {
            let cover = Cover::new(g, vec![u1.clone(), u2.clone(), u1.intersection(u2)])?;
            let p = amalgamated_presentation(g, u1, u2, base, opts.force)?;
            ("amalgamated", cover, p)
        }
        SvkInput::BaseSet(u, a) => {
            let u = if opts.add_intersections { u.with_intersections() } else { u.clone() };
            let p = groupoid_colimit_group(g, &u, a, base, opts.force)?;
            ("groupoid", u, p)
        }
    };
    let cover_report = check_cover(g, &cover)?;
    let colimit = tietze_simplify(&colimit, opts.tietze_passes);
    let direct = tietze_simplify(&pi12_presentation(g, base, Mode::Pi12)?, opts.tietze_passes);
    let (ci, di) = (abelianize(&colimit), abelianize(&direct));
    let (mut co, mut dor) = (None, None);
    let verdict = if ci != di {
        SvkVerdict::Disagree
    } else if ci.free_rank > 0 {
        SvkVerdict::Agree
    } else {
        co = todd_coxeter(&colimit, opts.coset_budget).order();
        dor = todd_coxeter(&direct, opts.coset_budget).order();
        match (co, dor) {
            (Some(x), Some(y)) if x == y => SvkVerdict::Agree,
            (Some(_), Some(_)) => SvkVerdict::Disagree,
            _ => SvkVerdict::Inconclusive,
        }
    };
    Ok(SvkReport {
        verdict,
        method: method.to_string(),
        cover: cover_report,
        colimit_invariants: ci,
        direct_invariants: di,
        colimit_order: co,
        direct_order: dor,
        colimit_presentation: colimit,
    })
}
