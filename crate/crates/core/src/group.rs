//! Finite groups given by multiplication tables, and their actions on graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::label::is_atom;

/// A finite group. Element names must be label-safe atoms because they are
/// embedded in constructed vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    elements: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

/// Wire format: `{"elements": [...], "table": [[...], ...]}` with table
/// entries being element names; `table[i][j]` is `elements[i] * elements[j]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupJson {
    pub elements: Vec<String>,
    pub table: Vec<Vec<String>>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(elements: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = elements.len();
        let bad = |m: String| Err(Error::InvalidGroup(m));
        if n == 0 {
            return bad("no elements".into());
        }
        for e in &elements {
            if !is_atom(e) {
                return bad(format!("element name `{e}` is not label-safe"));
            }
        }
        let mut sorted = elements.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != n {
            return bad("duplicate element names".into());
        }
        if table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return bad(format!("table must be {n}x{n} with entries in range"));
        }
        let identity = match (0..n).find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x)) {
            Some(e) => e,
            None => return bad("no identity element".into()),
        };
        let mut inverse = vec![usize::MAX; n];
        for x in 0..n {
            match (0..n).find(|&y| table[x][y] == identity && table[y][x] == identity) {
                Some(y) => inverse[x] = y,
                None => return bad(format!("`{}` has no inverse", elements[x])),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!(
                            "not associative at ({}, {}, {})",
                            elements[a], elements[b], elements[c]
                        ));
                    }
                }
            }
        }
        Ok(FiniteGroup { elements, table, identity, inverse })
    }

    pub fn from_json(text: &str) -> Result<FiniteGroup> {
        let raw: GroupJson = serde_json::from_str(text)?;
        let pos = |s: &str| {
            raw.elements
                .iter()
                .position(|e| e == s)
                .ok_or_else(|| Error::InvalidGroup(format!("unknown element `{s}` in table")))
        };
        let table = raw
            .table
            .iter()
            .map(|row| row.iter().map(|s| pos(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        FiniteGroup::from_table(raw.elements.clone(), table)
    }

    pub fn to_json_value(&self) -> GroupJson {
        GroupJson {
            elements: self.elements.clone(),
            table: self
                .table
                .iter()
                .map(|row| row.iter().map(|&x| self.elements[x].clone()).collect())
                .collect(),
        }
    }

    /// Cyclic group `Z/n` on `0..n`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let elements = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(elements, table).expect("cyclic group is valid")
    }

    pub fn trivial() -> FiniteGroup {
        Self::cyclic(1)
    }

    /// Symmetric group on `0..n` (permutations in one-line notation, named
    /// `p` followed by the images), composition `(st)(i) = s(t(i))`.
    pub fn symmetric(n: usize) -> FiniteGroup {
        assert!((1..=6).contains(&n), "symmetric group degree out of range");
        let mut perms: Vec<Vec<usize>> = Vec::new();
        permutations(&mut (0..n).collect(), 0, &mut perms);
        perms.sort();
        let name = |p: &Vec<usize>| format!("p{}", p.iter().map(|i| i.to_string()).collect::<String>());
        let elements = perms.iter().map(name).collect();
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| {
                        let st: Vec<usize> = t.iter().map(|&i| s[i]).collect();
                        perms.iter().position(|p| *p == st).expect("closed")
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(elements, table).expect("symmetric group is valid")
    }

    /// Dihedral group of order `2n`: rotations `r0..` and reflections `s0..`.
    pub fn dihedral(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        // (flip, k) represents x -> (-1)^flip x + k on Z/n.
        let elems: Vec<(usize, usize)> =
            (0..2).flat_map(|f| (0..n).map(move |k| (f, k))).collect();
        let elements = elems
            .iter()
            .map(|&(f, k)| format!("{}{k}", if f == 0 { 'r' } else { 's' }))
            .collect();
        let mul = |(f1, k1): (usize, usize), (f2, k2): (usize, usize)| {
            let k = if f1 == 0 { (k1 + k2) % n } else { (k1 + n - k2 % n) % n };
            ((f1 + f2) % 2, k)
        };
        let table = elems
            .iter()
            .map(|&a| {
                elems.iter().map(|&b| elems.iter().position(|&c| c == mul(a, b)).unwrap()).collect()
            })
            .collect();
        FiniteGroup::from_table(elements, table).expect("dihedral group is valid")
    }

    /// Direct product; elements are named `a.b`.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (g.order(), h.order());
        let elements = (0..n * m)
            .map(|i| format!("{}.{}", g.elements[i / m], h.elements[i % m]))
            .collect();
        let table = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| g.table[x / m][y / m] * m + h.table[x % m][y % m])
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(elements, table).expect("product group is valid")
    }

    /// Parses `cyclic:n`, `sym:n`, `dihedral:n`, `trivial`, or
    /// `product:<spec>,<spec>[,...]` (left-nested products).
    pub fn from_spec(spec: &str) -> Result<FiniteGroup> {
        let bad = || Error::InvalidGroup(format!("unrecognised group spec `{spec}`"));
        if spec == "trivial" {
            return Ok(Self::trivial());
        }
        let (kind, arg) = spec.split_once(':').ok_or_else(bad)?;
        if kind == "product" {
            let parts = split_top_level(arg);
            if parts.len() < 2 {
                return Err(bad());
            }
            let mut acc = Self::from_spec(parts[0])?;
            for p in &parts[1..] {
                acc = Self::product(&acc, &Self::from_spec(p)?);
            }
            return Ok(acc);
        }
        let n: usize = arg.parse().map_err(|_| bad())?;
        match kind {
            "cyclic" if n >= 1 => Ok(Self::cyclic(n)),
            "sym" if (1..=5).contains(&n) => Ok(Self::symmetric(n)),
            "dihedral" if n >= 1 => Ok(Self::dihedral(n)),
            _ => Err(bad()),
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, g: usize) -> &str {
        &self.elements[g]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Splits on commas that are not nested inside a `product:` argument list.
/// Products nest to the right: `product:cyclic:2,product:cyclic:2,cyclic:3`
/// reads as `Z/2 x (Z/2 x Z/3)` flattened, which is the same group up to
/// element naming.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut rest = s;
    loop {
        if rest.starts_with("product:") {
            parts.push(rest);
            break;
        }
        match rest.split_once(',') {
            Some((head, tail)) => {
                parts.push(head);
                rest = tail;
            }
            None => {
                parts.push(rest);
                break;
            }
        }
    }
    parts
}

/// A permutation of a graph's vertices for every group element:
/// `perms[g][v]` is the index of `g·v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    perms: Vec<Vec<usize>>,
}

impl GroupAction {
    /// Checks the action axioms and that every element acts by a graph
    /// automorphism.
    pub fn new(graph: &Graph, group: &FiniteGroup, perms: Vec<Vec<usize>>) -> Result<GroupAction> {
        let act = GroupAction { perms };
        act.validate(graph, group)?;
        Ok(act)
    }

    /// The identity action.
    pub fn trivial(graph: &Graph, group: &FiniteGroup) -> GroupAction {
        let id: Vec<usize> = (0..graph.vertex_count()).collect();
        GroupAction { perms: vec![id; group.order()] }
    }

    /// Restricts to a subgroup, given as the list of ambient element indices
    /// corresponding to the subgroup's elements in order.
    pub fn restrict(&self, embedding: &[usize]) -> GroupAction {
        GroupAction { perms: embedding.iter().map(|&h| self.perms[h].clone()).collect() }
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn apply(&self, g: usize, v: usize) -> usize {
        self.perms[g][v]
    }

    pub fn validate(&self, graph: &Graph, group: &FiniteGroup) -> Result<()> {
        let n = graph.vertex_count();
        let bad = |m: String| Err(Error::InvalidAction(m));
        if self.perms.len() != group.order() {
            return bad(format!("{} permutations for a group of order {}", self.perms.len(), group.order()));
        }
        for (g, p) in self.perms.iter().enumerate() {
            if p.len() != n {
                return bad(format!("permutation for `{}` has wrong length", group.name(g)));
            }
            let mut seen = vec![false; n];
            for &w in p {
                if w >= n || std::mem::replace(&mut seen[w], true) {
                    return bad(format!("`{}` does not act bijectively", group.name(g)));
                }
            }
            for (a, b) in graph.edges() {
                if !graph.has_edge(p[a], p[b]) {
                    return bad(format!(
                        "`{}` maps edge {}--{} to a non-edge",
                        group.name(g),
                        graph.label(a),
                        graph.label(b)
                    ));
                }
            }
        }
        if self.perms[group.identity()].iter().enumerate().any(|(v, &w)| v != w) {
            return bad("identity does not act trivially".into());
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                let gh = group.mul(g, h);
                if (0..n).any(|v| self.perms[g][self.perms[h][v]] != self.perms[gh][v]) {
                    return bad(format!(
                        "act({})∘act({}) != act({})",
                        group.name(g),
                        group.name(h),
                        group.name(gh)
                    ));
                }
            }
        }
        Ok(())
    }

    /// Some `(g, v)` with `g != e` and `g·v = v`, if any.
    pub fn fixed_point(&self, group: &FiniteGroup) -> Option<(usize, usize)> {
        (0..group.order())
            .filter(|&g| g != group.identity())
            .find_map(|g| self.perms[g].iter().enumerate().find(|(v, &w)| *v == w).map(|(v, _)| (g, v)))
    }

    pub fn is_free(&self, group: &FiniteGroup) -> bool {
        self.fixed_point(group).is_none()
    }
}
