use std::collections::HashMap;

use serde::{Deserialize, Serialize};

/// Equivalence relation on a subset of `0..n`, stored as a class id per
/// vertex. Vertices outside the relation's domain carry `None`. Class ids are
/// canonical: numbered by the least vertex of each class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    class_of: Vec<Option<usize>>,
}

impl Partition {
    /// Canonicalizes arbitrary keys into class ids.
    pub fn from_keys<K: std::hash::Hash + Eq>(keys: impl IntoIterator<Item = Option<K>>) -> Self {
        let mut ids = HashMap::new();
        let class_of = keys
            .into_iter()
            .map(|key| {
                key.map(|k| {
                    let next = ids.len();
                    *ids.entry(k).or_insert(next)
                })
            })
            .collect();
        Self { class_of }
    }

    pub fn singletons(n: usize) -> Self {
        Self {
            class_of: (0..n).map(Some).collect(),
        }
    }

    pub fn single_class(n: usize) -> Self {
        Self {
            class_of: vec![Some(0); n],
        }
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn class_of(&self, x: usize) -> Option<usize> {
        self.class_of[x]
    }

    pub fn labels(&self) -> &[Option<usize>] {
        &self.class_of
    }

    pub fn same_class(&self, x: usize, y: usize) -> bool {
        matches!((self.class_of[x], self.class_of[y]), (Some(a), Some(b)) if a == b)
    }

    pub fn num_classes(&self) -> usize {
        self.class_of.iter().flatten().max().map_or(0, |m| m + 1)
    }

    /// Members of each class in increasing vertex order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_classes()];
        for (x, c) in self.class_of.iter().enumerate() {
            if let Some(c) = c {
                out[*c].push(x);
            }
        }
        out
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}
