//! Census of double-grounded families on a handful of wires.
//!
//! A double-grounded family on m labelled curves is, combinatorially, an
//! initial bottom-to-top attachment order plus a legal swap sequence (each
//! pair at most once). The DFS walks every such state: each visited state
//! is one x-isomorphism class (the permutation sequence identifies it), and
//! its set of swapped label pairs is one labelled intersection graph. The
//! attachment order is not part of the graph, so edge sets are relative
//! inversion sets over all starts; for m ≤ 4 every pair subset occurs.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::LabelledGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundedCensus {
    /// Distinct labelled intersection graphs (edge iff the pair swaps).
    pub graph_count: u64,
    /// Distinct x-isomorphism classes: permutation sequences, including the
    /// initial order.
    pub class_count: u64,
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut used = vec![false; m];
    fn rec(m: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for v in 0..m {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(m, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(m, &mut cur, &mut used, &mut out);
    out
}

struct Dfs {
    m: usize,
    used: Vec<bool>,
    swapped: Vec<(usize, usize)>,
    graphs: BTreeSet<Vec<u8>>,
    classes: u64,
}

impl Dfs {
    fn record(&mut self) {
        self.classes += 1;
        let mut g =
            LabelledGraph::new((1..=self.m).map(|i| i.to_string())).expect("distinct labels");
        for &(i, j) in &self.swapped {
            g.add_edge_by_index(i, j);
        }
        self.graphs.insert(g.canonical_bits());
    }

    fn walk(&mut self, occ: &mut Vec<usize>) {
        self.record();
        for pos in 0..self.m - 1 {
            let (i, j) = (occ[pos], occ[pos + 1]);
            let key = i.min(j) * self.m + i.max(j);
            if self.used[key] {
                continue;
            }
            self.used[key] = true;
            self.swapped.push((i.min(j), i.max(j)));
            occ.swap(pos, pos + 1);
            self.walk(occ);
            occ.swap(pos, pos + 1);
            self.swapped.pop();
            self.used[key] = false;
        }
    }
}

/// Exhausts every double-grounded family shape on `m` labelled wires.
pub fn enumerate_double_grounded(m: usize) -> Result<GroundedCensus> {
    if m == 0 {
        return Err(Error::BadParams("at least one wire required".into()));
    }
    if m > 4 {
        return Err(Error::TooLarge {
            what: "wires",
            got: m,
            max: 4,
        });
    }
    let mut dfs = Dfs {
        m,
        used: vec![false; m * m],
        swapped: Vec::new(),
        graphs: BTreeSet::new(),
        classes: 0,
    };
    for mut start in permutations(m) {
        dfs.walk(&mut start);
    }
    Ok(GroundedCensus {
        graph_count: dfs.graphs.len() as u64,
        class_count: dfs.classes,
    })
}
