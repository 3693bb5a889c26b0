//! Seeded instance generators shared by the integration suites.
#![allow(dead_code)]

use std::collections::BTreeSet;

use pseudoseg::arrangement::{Swap, WiringDiagram};
use pseudoseg::geom::{CurveFamily, MonotoneCurve, Point};
use pseudoseg::scalar::s_i64;
use pseudoseg::setsystem::SetFamily;
use pseudoseg::util::Bits;
use pseudoseg::Rat;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn seg(id: impl Into<String>, x0: i64, y0: i64, x1: i64, y1: i64) -> MonotoneCurve<Rat> {
    MonotoneCurve::segment_curve(
        id,
        Point::new(s_i64(x0), s_i64(y0)),
        Point::new(s_i64(x1), s_i64(y1)),
    )
    .unwrap()
}

/// `count` pairwise distinct integers from `[0, bound)`, in draw order.
pub fn distinct_i64s(count: usize, bound: i64, rng: &mut impl Rng) -> Vec<i64> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v = rng.gen_range(0..bound);
        if seen.insert(v) {
            out.push(v);
        }
    }
    out
}

pub const Y_BOUND: i64 = 1 << 32;

/// Straight segments spanning the strip `[0, x1]`, with distinct random
/// heights on each ground.
pub fn grounded_family(
    prefix: &str,
    n: usize,
    x1: i64,
    rng: &mut impl Rng,
) -> CurveFamily<Rat> {
    let left = distinct_i64s(n, Y_BOUND, rng);
    let right = distinct_i64s(n, Y_BOUND, rng);
    let curves = (0..n)
        .map(|i| seg(format!("{prefix}{}", i + 1), 0, left[i], x1, right[i]))
        .collect();
    CurveFamily::new(curves, Some((s_i64(0), s_i64(x1)))).unwrap()
}

/// Straight segments with both endpoints strictly inside the strip `(0, x1)`.
pub fn inner_probes(
    prefix: &str,
    count: usize,
    x1: i64,
    rng: &mut impl Rng,
) -> CurveFamily<Rat> {
    let curves = (0..count)
        .map(|i| {
            let mut xa = rng.gen_range(1..x1);
            let mut xb = rng.gen_range(1..x1);
            while xa == xb {
                xb = rng.gen_range(1..x1);
            }
            if xa > xb {
                std::mem::swap(&mut xa, &mut xb);
            }
            let ya = rng.gen_range(0..Y_BOUND);
            let yb = rng.gen_range(0..Y_BOUND);
            seg(format!("{prefix}{}", i + 1), xa, ya, xb, yb)
        })
        .collect();
    CurveFamily::new(curves, None).unwrap()
}

/// Pairwise disjoint straight segments spanning `[0, x1]`: heights sorted the
/// same way on both grounds, so no pair ever meets.
pub fn spanning_throughs(k: usize, x1: i64, rng: &mut impl Rng) -> CurveFamily<Rat> {
    let mut left = distinct_i64s(k, Y_BOUND, rng);
    let mut right = distinct_i64s(k, Y_BOUND, rng);
    left.sort_unstable();
    right.sort_unstable();
    let curves = (0..k)
        .map(|i| seg(format!("t{}", i + 1), 0, left[i], x1, right[i]))
        .collect();
    CurveFamily::new(curves, Some((s_i64(0), s_i64(x1)))).unwrap()
}

/// Segments with all `2n` endpoint abscissas pairwise distinct; every fourth
/// curve gets a middle vertex to keep polylines in the mix.
pub fn scattered_family(n: usize, rng: &mut impl Rng) -> CurveFamily<Rat> {
    let xs = distinct_i64s(2 * n, 1 << 24, rng);
    let curves = (0..n)
        .map(|i| {
            let (mut xa, mut xb) = (xs[2 * i], xs[2 * i + 1]);
            if xa > xb {
                std::mem::swap(&mut xa, &mut xb);
            }
            let (ya, yb, ym) = (
                rng.gen_range(0..Y_BOUND),
                rng.gen_range(0..Y_BOUND),
                rng.gen_range(0..Y_BOUND),
            );
            let id = format!("c{}", i + 1);
            if i % 4 == 3 {
                MonotoneCurve::new(
                    id,
                    vec![
                        Point::new(s_i64(xa), s_i64(ya)),
                        Point::new(Rat::new((xa + xb).into(), 2.into()), s_i64(ym)),
                        Point::new(s_i64(xb), s_i64(yb)),
                    ],
                )
                .unwrap()
            } else {
                seg(id, xa, ya, xb, yb)
            }
        })
        .collect();
    CurveFamily::new(curves, None).unwrap()
}

/// A wiring diagram on wires `w1..wm` built from a random legal swap word:
/// each step picks an adjacent position whose pair has not swapped yet.
pub fn random_wiring(m: usize, rng: &mut impl Rng) -> WiringDiagram {
    let wires: Vec<String> = (1..=m).map(|i| format!("w{i}")).collect();
    let mut occ: Vec<usize> = (0..m).collect();
    let mut used = BTreeSet::new();
    let target = rng.gen_range(0..=3 * m);
    let mut swaps = Vec::new();
    while swaps.len() < target {
        let legal: Vec<usize> = (1..m)
            .filter(|&p| {
                let (i, j) = (occ[p - 1], occ[p]);
                !used.contains(&(i.min(j), i.max(j)))
            })
            .collect();
        let Some(&pos) = legal.choose(rng) else { break };
        let (i, j) = (occ[pos - 1], occ[pos]);
        used.insert((i.min(j), i.max(j)));
        swaps.push(Swap::new(pos, wires[i].clone(), wires[j].clone()));
        occ.swap(pos - 1, pos);
    }
    WiringDiagram::new(wires, swaps).unwrap()
}

/// Rows of random density over `n <= 64` points, `m <= 256` rows; duplicate
/// rows are injected now and then since nothing downstream may assume
/// distinctness.
pub fn random_set_family(rng: &mut impl Rng) -> SetFamily {
    let n = rng.gen_range(1..=64);
    let m = rng.gen_range(1..=256);
    let density = rng.gen_range(1..=7);
    let mut rows = Vec::with_capacity(m);
    for _ in 0..m {
        let mut b = Bits::new(n);
        for i in 0..n {
            if rng.gen_range(0..8) < density {
                b.set(i, true);
            }
        }
        rows.push(b);
    }
    if m >= 2 && rng.gen_range(0..5) == 0 {
        let src = rng.gen_range(0..m);
        let dst = rng.gen_range(0..m);
        rows[dst] = rows[src].clone();
    }
    SetFamily::new(n, rows).unwrap()
}

/// A uniform permutation of `1..=t`.
pub fn random_perm(t: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (1..=t).collect();
    perm.shuffle(rng);
    perm
}
