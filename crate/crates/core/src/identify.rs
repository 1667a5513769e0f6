//! Vertex identifications resolved by union–find.

use std::collections::HashMap;

/// Disjoint-set forest over dense indices, with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `true` if the two classes were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        true
    }
}

/// A set of label pairs to merge. Each class is represented by its
/// lexicographically least label, so resolving is canonical regardless of the
/// order in which pairs were added.
#[derive(Debug, Clone, Default)]
pub struct IdentificationMap {
    pairs: Vec<(String, String)>,
}

impl IdentificationMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn identify(&mut self, a: impl Into<String>, b: impl Into<String>) {
        self.pairs.push((a.into(), b.into()));
    }

    pub fn pairs(&self) -> &[(String, String)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Resolves every label mentioned by the map to its class representative.
    pub fn resolve(&self) -> Resolution {
        let mut index: HashMap<&str, usize> = HashMap::new();
        let mut names: Vec<&str> = Vec::new();
        for (a, b) in &self.pairs {
            for s in [a.as_str(), b.as_str()] {
                index.entry(s).or_insert_with(|| {
                    names.push(s);
                    names.len() - 1
                });
            }
        }
        let mut uf = UnionFind::new(names.len());
        for (a, b) in &self.pairs {
            uf.union(index[a.as_str()], index[b.as_str()]);
        }
        let mut least: HashMap<usize, &str> = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            let root = uf.find(i);
            let e = least.entry(root).or_insert(name);
            if *name < *e {
                *e = name;
            }
        }
        let map = names
            .iter()
            .enumerate()
            .map(|(i, name)| (name.to_string(), least[&uf.find(i)].to_string()))
            .collect();
        Resolution { map }
    }
}

/// Label to representative map produced by [`IdentificationMap::resolve`].
#[derive(Debug, Clone, Default)]
pub struct Resolution {
    map: HashMap<String, String>,
}

impl Resolution {
    /// Labels not mentioned in any pair map to themselves.
    pub fn get<'a>(&'a self, label: &'a str) -> &'a str {
        self.map.get(label).map(String::as_str).unwrap_or(label)
    }

    pub fn is_identified(&self, a: &str, b: &str) -> bool {
        self.get(a) == self.get(b)
    }
}
