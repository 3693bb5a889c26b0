//! Labelled graphs with a fixed vertex order.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::util::Bits;

/// Simple graph whose vertices carry distinct string labels in a fixed order.
/// Two graphs compare equal exactly when they have the same labels in the
/// same order and the same edge set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelledGraph {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    edges: BTreeSet<(usize, usize)>, // i < j
}

impl LabelledGraph {
    pub fn new<I, T>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::InvalidFamily(format!("duplicate label `{l}`")));
            }
        }
        Ok(LabelledGraph {
            labels,
            index,
            edges: BTreeSet::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<()> {
        let i = self
            .index_of(a)
            .ok_or_else(|| Error::UnknownWire(a.to_string()))?;
        let j = self
            .index_of(b)
            .ok_or_else(|| Error::UnknownWire(b.to_string()))?;
        self.add_edge_by_index(i, j);
        Ok(())
    }

    /// Panics on out-of-range or equal indices.
    pub fn add_edge_by_index(&mut self, i: usize, j: usize) {
        assert!(i != j && i < self.order() && j < self.order());
        self.edges.insert((i.min(j), i.max(j)));
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) if i != j => self.edges.contains(&(i.min(j), i.max(j))),
            _ => false,
        }
    }

    pub fn edge_indices(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.edges
            .iter()
            .map(|&(i, j)| (self.labels[i].as_str(), self.labels[j].as_str()))
    }

    pub fn degree(&self, label: &str) -> Option<usize> {
        let v = self.index_of(label)?;
        Some(
            self.edges
                .iter()
                .filter(|&&(i, j)| i == v || j == v)
                .count(),
        )
    }

    pub fn neighbors(&self, label: &str) -> Option<Vec<&str>> {
        let v = self.index_of(label)?;
        let mut out = Vec::new();
        for &(i, j) in &self.edges {
            if i == v {
                out.push(self.labels[j].as_str());
            } else if j == v {
                out.push(self.labels[i].as_str());
            }
        }
        Some(out)
    }

    /// Canonical byte encoding under the given vertex order: the order as a
    /// 64-bit big-endian integer followed by the upper triangle of the
    /// adjacency matrix in row-major order, packed MSB-first.
    pub fn canonical_bits(&self) -> Vec<u8> {
        let n = self.order();
        let mut out = Vec::from((n as u64).to_be_bytes());
        let mut acc: u8 = 0;
        let mut used = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                acc <<= 1;
                if self.edges.contains(&(i, j)) {
                    acc |= 1;
                }
                used += 1;
                if used == 8 {
                    out.push(acc);
                    acc = 0;
                    used = 0;
                }
            }
        }
        if used > 0 {
            out.push(acc << (8 - used));
        }
        out
    }

    fn adjacency(&self) -> Vec<Bits> {
        let n = self.order();
        let mut adj = vec![Bits::new(n); n];
        for &(i, j) in &self.edges {
            adj[i].set(j, true);
            adj[j].set(i, true);
        }
        adj
    }

    /// Exact maximum clique size, by branch and bound over candidate bit sets.
    pub fn clique_number(&self) -> usize {
        let n = self.order();
        if n == 0 {
            return 0;
        }
        let adj = self.adjacency();
        let mut cand = Bits::new(n);
        for i in 0..n {
            cand.set(i, true);
        }
        let mut best = 0;
        Self::expand_clique(&adj, &cand, 0, &mut best);
        best
    }

    fn expand_clique(adj: &[Bits], cand: &Bits, size: usize, best: &mut usize) {
        if size > *best {
            *best = size;
        }
        let mut rest = cand.clone();
        // Each clique is enumerated once, with vertices in ascending order.
        for v in cand.iter_ones() {
            if size + rest.count_ones() <= *best {
                return;
            }
            rest.set(v, false);
            let next = rest.and(&adj[v]);
            Self::expand_clique(adj, &next, size + 1, best);
        }
    }

    /// Two-colorability via breadth-first search on each component.
    pub fn is_bipartite(&self) -> bool {
        let n = self.order();
        let adj = self.adjacency();
        let mut color: Vec<i8> = vec![-1; n];
        for start in 0..n {
            if color[start] >= 0 {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in adj[u].iter_ones() {
                    if color[v] < 0 {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }
}
