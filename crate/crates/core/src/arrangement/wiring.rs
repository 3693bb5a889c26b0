//! Wiring diagrams: the combinatorial record of a left-to-right sweep of a
//! double-grounded family. Wires are listed in initial bottom-to-top order;
//! each swap exchanges two vertically adjacent wires, and no pair of wires
//! swaps twice. The sequence of positions visited by the occupants is a
//! partial allowable sequence; it is complete when every pair swaps.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::geom::{CurveFamily, MonotoneCurve, Point};
use crate::scalar::{s_i64, Scalar};

/// One adjacent transposition: the wires occupying positions `pos` and
/// `pos + 1` (1-based, bottom-to-top) trade places. `a` and `b` name the
/// two wires as an unordered pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Swap {
    pub pos: usize,
    pub a: String,
    pub b: String,
}

impl Swap {
    pub fn new(pos: usize, a: impl Into<String>, b: impl Into<String>) -> Self {
        Swap {
            pos,
            a: a.into(),
            b: b.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WiringDiagram {
    wires: Vec<String>,
    swaps: Vec<Swap>,
}

impl WiringDiagram {
    /// Validates by replaying the swaps: each swap's pair must occupy the
    /// stated adjacent positions at that moment, and no pair repeats.
    pub fn new(wires: Vec<String>, swaps: Vec<Swap>) -> Result<Self> {
        if wires.is_empty() {
            return Err(Error::InvalidFamily("a diagram needs at least one wire".into()));
        }
        let mut seen = BTreeSet::new();
        for w in &wires {
            if !seen.insert(w.clone()) {
                return Err(Error::InvalidFamily(format!("duplicate wire label `{}`", w)));
            }
        }
        let d = WiringDiagram { wires, swaps };
        d.replay(|_, _, _| {})?;
        Ok(d)
    }

    /// The insertion-sort network on wires `"1".."m"`: every pair swaps
    /// exactly once and the final order is the reversal.
    pub fn full_reversal(m: usize) -> Result<Self> {
        let wires: Vec<String> = (1..=m).map(|i| i.to_string()).collect();
        let mut occ: Vec<usize> = (0..m).collect();
        let mut swaps = Vec::new();
        for i in 2..=m {
            for pos in (1..i).rev() {
                swaps.push(Swap::new(
                    pos,
                    wires[occ[pos - 1]].clone(),
                    wires[occ[pos]].clone(),
                ));
                occ.swap(pos - 1, pos);
            }
        }
        WiringDiagram::new(wires, swaps)
    }

    /// Replays the swap list over occupant indices, calling `visit` with
    /// (swap number, 1-based position, occupants bottom-to-top) after each
    /// swap. Errors are the constructor's validation failures.
    fn replay(&self, mut visit: impl FnMut(usize, usize, &[usize])) -> Result<()> {
        let m = self.wires.len();
        let mut occ: Vec<usize> = (0..m).collect();
        let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (t, s) in self.swaps.iter().enumerate() {
            if s.pos < 1 || s.pos >= m {
                return Err(Error::Malformed(format!(
                    "swap {}: position {} out of range 1..={}",
                    t + 1,
                    s.pos,
                    m - 1
                )));
            }
            let (i, j) = (occ[s.pos - 1], occ[s.pos]);
            let (lo, hi) = (&self.wires[i], &self.wires[j]);
            let matches = (&s.a == lo && &s.b == hi) || (&s.a == hi && &s.b == lo);
            if !matches {
                return Err(Error::Malformed(format!(
                    "swap {}: pair (`{}`, `{}`) does not occupy positions {} and {}",
                    t + 1,
                    s.a,
                    s.b,
                    s.pos,
                    s.pos + 1
                )));
            }
            let key = (i.min(j), i.max(j));
            if !used.insert(key) {
                return Err(Error::Malformed(format!(
                    "swap {}: pair (`{}`, `{}`) swaps twice",
                    t + 1,
                    s.a,
                    s.b
                )));
            }
            occ.swap(s.pos - 1, s.pos);
            visit(t, s.pos, &occ);
        }
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.wires.len()
    }

    /// Wire labels in initial bottom-to-top order.
    pub fn wires(&self) -> &[String] {
        &self.wires
    }

    pub fn swaps(&self) -> &[Swap] {
        &self.swaps
    }

    pub fn wire_index(&self, label: &str) -> Result<usize> {
        self.wires
            .iter()
            .position(|w| w == label)
            .ok_or_else(|| Error::UnknownWire(label.to_string()))
    }

    /// Occupant wire indices bottom-to-top after `t` swaps, for t = 0..=T.
    /// Entry 0 is the identity; the swap set determines the last entry.
    pub(crate) fn timeline(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::with_capacity(self.swaps.len() + 1);
        out.push((0..self.wires.len()).collect());
        self.replay(|_, _, occ| out.push(occ.to_vec()))
            .expect("validated on construction");
        out
    }

    /// Labels in bottom-to-top order after all swaps.
    pub fn final_order(&self) -> Vec<String> {
        let tl = self.timeline();
        tl.last()
            .unwrap()
            .iter()
            .map(|&i| self.wires[i].clone())
            .collect()
    }

    /// The swapped pairs in sweep order, each as 0-based initial-position
    /// indices (low, high).
    pub fn swapped_index_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.swaps.len());
        let mut occ: Vec<usize> = (0..self.wires.len()).collect();
        for s in &self.swaps {
            let (i, j) = (occ[s.pos - 1], occ[s.pos]);
            out.push((i.min(j), i.max(j)));
            occ.swap(s.pos - 1, s.pos);
        }
        out
    }

    /// Serializes as `m` on the first line, then one `pos a b` line per
    /// swap. The format carries no label list, so wires are renamed
    /// canonically: the wire at initial position i becomes label `i`
    /// (1-based). `a b` is written in bottom-top occupant order.
    pub fn to_text(&self) -> String {
        let m = self.wires.len();
        let mut s = format!("{}\n", m);
        let mut occ: Vec<usize> = (0..m).collect();
        for sw in &self.swaps {
            let (i, j) = (occ[sw.pos - 1], occ[sw.pos]);
            s.push_str(&format!("{} {} {}\n", sw.pos, i + 1, j + 1));
            occ.swap(sw.pos - 1, sw.pos);
        }
        s
    }

    /// Parses the `to_text` format. Wires are labelled "1".."m" in initial
    /// bottom-to-top order.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let m: usize = lines
            .next()
            .ok_or_else(|| Error::Malformed("empty wiring text".into()))?
            .trim()
            .parse()
            .map_err(|_| Error::Malformed("first line must be the wire count".into()))?;
        if m == 0 {
            return Err(Error::Malformed("wire count must be positive".into()));
        }
        let wires: Vec<String> = (1..=m).map(|i| i.to_string()).collect();
        let mut swaps = Vec::new();
        for (k, line) in lines.enumerate() {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(Error::Malformed(format!(
                    "swap line {}: expected `pos a b`, got `{}`",
                    k + 1,
                    line.trim()
                )));
            }
            let pos: usize = toks[0]
                .parse()
                .map_err(|_| Error::Malformed(format!("swap line {}: bad position", k + 1)))?;
            for t in &toks[1..] {
                if !wires.iter().any(|w| w == t) {
                    return Err(Error::UnknownWire((*t).to_string()));
                }
            }
            swaps.push(Swap::new(pos, toks[1], toks[2]));
        }
        WiringDiagram::new(wires, swaps)
    }
}

/// Canonical byte string deciding x-isomorphism: two sweeps that meet their
/// crossing pairs in the same order agree here, independently of wire
/// labels. Wires are identified by initial position (1-based), and the
/// string records the swapped pairs in sweep order.
pub fn x_iso_canonical(w: &WiringDiagram) -> String {
    let pairs = w.swapped_index_pairs();
    let body: Vec<String> = pairs
        .iter()
        .map(|(i, j)| format!("{}-{}", i + 1, j + 1))
        .collect();
    format!("{}|{}", w.m(), body.join(","))
}

/// Counts complete allowable sequences on `m` wires (every pair swaps
/// exactly once) by depth-first search over legal swap orders.
pub fn enumerate_full_allowable(m: usize) -> Result<u64> {
    if m == 0 {
        return Err(Error::BadParams("need at least one wire".into()));
    }
    if m > 5 {
        return Err(Error::TooLarge {
            what: "wires",
            got: m,
            max: 5,
        });
    }
    let target = m * (m - 1) / 2;
    let mut occ: Vec<usize> = (0..m).collect();
    let mut used = vec![false; m * m];
    let mut count = 0u64;
    fn dfs(
        occ: &mut Vec<usize>,
        used: &mut Vec<bool>,
        m: usize,
        done: usize,
        target: usize,
        count: &mut u64,
    ) {
        if done == target {
            *count += 1;
            return;
        }
        for pos in 0..m - 1 {
            let (i, j) = (occ[pos], occ[pos + 1]);
            let key = i.min(j) * m + i.max(j);
            if used[key] {
                continue;
            }
            used[key] = true;
            occ.swap(pos, pos + 1);
            dfs(occ, used, m, done + 1, target, count);
            occ.swap(pos, pos + 1);
            used[key] = false;
        }
    }
    dfs(&mut occ, &mut used, m, 0, target, &mut count);
    Ok(count)
}

/// Draws a diagram as a double-grounded polyline family: wire heights are
/// the occupant positions sampled at integer columns x = 0..=T+1, so swap
/// number t crosses at x = t - 1/2 and crossing abscissas are distinct and
/// increasing. Sweeping the result reproduces the diagram.
pub fn realize_wiring<S: Scalar>(w: &WiringDiagram) -> Result<CurveFamily<S>> {
    let tl = w.timeline();
    let t_max = w.swaps().len();
    let mut pos_of = vec![vec![0usize; w.m()]; tl.len()];
    for (t, occ) in tl.iter().enumerate() {
        for (p, &i) in occ.iter().enumerate() {
            pos_of[t][i] = p + 1;
        }
    }
    let mut curves = Vec::with_capacity(w.m());
    for (i, label) in w.wires().iter().enumerate() {
        let mut pts = Vec::with_capacity(t_max + 2);
        for c in 0..=t_max + 1 {
            let t = c.min(t_max);
            pts.push(Point::new(s_i64(c as i64), s_i64(pos_of[t][i] as i64)));
        }
        curves.push(MonotoneCurve::new(label.clone(), pts)?);
    }
    CurveFamily::new(curves, Some((s_i64(0), s_i64(t_max as i64 + 1))))
}
