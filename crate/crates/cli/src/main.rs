//! Command-line front end for the pseudoseg toolkit.
//!
//! Subcommands fall into two camps. Interchange commands (`gen-grid`,
//! `gen-staircase`, `graph`, `encode`, `decode`, `sweep`) emit artifacts meant
//! to be piped into other subcommands or stored, and their output carries no
//! banner. Report commands (`validate`, `shatter`, `vc`, `pack-check`,
//! `zone`, `vdecomp`, `cut`, `split`, `census`, `verify-eq1`, `bound-table`)
//! prefix or embed the tool version.
//!
//! Every output is a pure function of the flags (plus `--seed` where
//! randomness is involved): byte-identical across runs, and `--jobs` never
//! changes bytes. Exit codes: 0 success, 1 domain failure with a one-line
//! diagnostic on stderr, 2 usage error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use pseudoseg::arrangement::{
    faces, sweep, vertical_decomposition, weak_cutting, VBound, Wall, WallOrigin, WiringDiagram,
};
use pseudoseg::census::{
    bound_table, enumerate_double_grounded, strip_split, verify_h_relation, Experiment, SplitNode,
};
use pseudoseg::constructions::{
    build_grid, default_scale, grid_census, realize_geometric, staircase_build, staircase_census,
    Choice, ChoiceAssignment, StaircaseParams,
};
use pseudoseg::geom::{
    checked_intersection_graph, double_grounds, family_from_json, family_to_json,
    is_pseudosegment_family, CurveFamily, PseudoCheck,
};
use pseudoseg::setsystem::{
    decode, encode, greedy_ordering, packing_check, vc_dimension, SetFamily,
};
use pseudoseg::setsystem::{dual_shatter, primal_shatter};
use pseudoseg::graph::LabelledGraph;
use pseudoseg::{version_line, Rat};

#[derive(Parser)]
#[command(name = "pseudoseg", version, about = "Pseudo-segment family toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a grid incidence family and emit its realization as curve JSON.
    GenGrid(GenGrid),
    /// Build a staircase family and emit it as curve JSON.
    GenStaircase(GenStaircase),
    /// Intersection graph of a curve family, as graph JSON.
    Graph(WithInput),
    /// Check a curve family: pseudo-segment property, grounding, strip.
    Validate(Input),
    /// Shatter function of a set family at one argument.
    Shatter(Shatter),
    /// VC dimension of a set family.
    Vc(Vc),
    /// Compress a set family into the delta-stream codec.
    Encode(WithInput),
    /// Expand a codec stream back into set-family text, rows value-sorted.
    Decode(WithInput),
    /// Greedy-packing certificate against a polynomial shatter hypothesis.
    PackCheck(PackCheck),
    /// Sweep a curve family into its wiring diagram.
    Sweep(WithInput),
    /// Complexity of one wire's zone in a wiring diagram.
    Zone(Zone),
    /// Vertical decomposition of a curve family.
    Vdecomp(Vdecomp),
    /// Sampled weak cutting with at most m/r crossings per cell.
    Cut(Cut),
    /// Balanced endpoint-halving split tree over the family's strip.
    Split(Split),
    /// Count distinct labelled intersection graphs of a named family.
    Census(Census),
    /// Check the repeated-set counting identity on small ground sets.
    VerifyEq1(VerifyEq1),
    /// Census sizes next to their exponent models, as CSV.
    BoundTable(BoundTable),
}

#[derive(Args)]
struct Input {
    /// Input path, `-` for stdin.
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Args)]
struct WithInput {
    /// Input path, `-` for stdin.
    #[arg(default_value = "-")]
    input: String,
    /// Output path, stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GenGrid {
    /// Point count; at least 8.
    #[arg(long)]
    n: u64,
    /// Incidences per line; k^3 must not exceed n.
    #[arg(long)]
    k: u64,
    /// `all-cross`, `all-avoid`, `random`, or an explicit 0/1 string with
    /// one digit per incidence in line-rank order (1 = cross).
    #[arg(long)]
    choices: String,
    /// RNG seed; required by `--choices random`.
    #[arg(long, required_if_eq("choices", "random"))]
    seed: Option<u64>,
    /// Bump radius as a rational `p/q`; defaults to half the column pitch.
    #[arg(long, value_parser = parse_rat)]
    scale: Option<Rat>,
    /// Output path, stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GenStaircase {
    /// Steps per staircase side.
    #[arg(long)]
    k: u64,
    /// `random`, or explicit triples `i,j,l;i,j,l;...` (one per horizontal,
    /// entries in 1..=k).
    #[arg(long)]
    choices: String,
    /// Horizontal count; required by `--choices random`.
    #[arg(long, required_if_eq("choices", "random"))]
    h: Option<u64>,
    /// RNG seed; required by `--choices random`.
    #[arg(long, required_if_eq("choices", "random"))]
    seed: Option<u64>,
    /// Output path, stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Shatter {
    /// Argument of the shatter function.
    #[arg(long)]
    z: usize,
    /// Count dual traces instead of primal ones.
    #[arg(long)]
    dual: bool,
    /// Cap on elementary operations.
    #[arg(long, default_value_t = 1 << 32)]
    budget: u64,
    /// Input path, `-` for stdin.
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Args)]
struct Vc {
    /// Cap on elementary operations.
    #[arg(long, default_value_t = 1 << 32)]
    budget: u64,
    /// Input path, `-` for stdin.
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Args)]
struct PackCheck {
    /// Shatter hypothesis constant, rational `p/q`.
    #[arg(long, value_parser = parse_rat)]
    c: Rat,
    /// Shatter hypothesis exponent.
    #[arg(long)]
    d: u32,
    /// Largest argument the hypothesis is checked at.
    #[arg(long, default_value_t = 2)]
    z_max: usize,
    /// Cap on elementary operations.
    #[arg(long, default_value_t = 1 << 32)]
    budget: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Input path, `-` for stdin.
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Args)]
struct Zone {
    /// Wire label; sweep output names wires `1`..`m`.
    #[arg(long)]
    wire: String,
    /// Input path, `-` for stdin.
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Args)]
struct Vdecomp {
    /// Left strip wall, rational `p/q`; defaults to the family strip or the
    /// leftmost endpoint.
    #[arg(long, value_parser = parse_rat)]
    x0: Option<Rat>,
    /// Right strip wall, rational `p/q`.
    #[arg(long, value_parser = parse_rat)]
    x1: Option<Rat>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Input path, `-` for stdin.
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Args)]
struct Cut {
    /// Cutting parameter, rational `p/q` with 1 < r <= m.
    #[arg(long, value_parser = parse_urat)]
    r: Ratio<u64>,
    /// RNG seed for the sample draws.
    #[arg(long)]
    seed: u64,
    /// Input path, `-` for stdin.
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Args)]
struct Split {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Input path, `-` for stdin.
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Args)]
struct Census {
    #[arg(long, value_enum)]
    family: FamilyKind,
    /// Grid point count.
    #[arg(long, required_if_eq("family", "grid"))]
    n: Option<u64>,
    /// Grid incidences per line, or staircase steps.
    #[arg(
        long,
        required_if_eq("family", "grid"),
        required_if_eq("family", "staircase")
    )]
    k: Option<u64>,
    /// Staircase horizontal count.
    #[arg(long, required_if_eq("family", "staircase"))]
    h: Option<u64>,
    /// Double-grounded wire count (at most 4).
    #[arg(long, required_if_eq("family", "double-grounded"))]
    m: Option<usize>,
    /// Exhaustive-verification cap; larger censuses report unverified.
    #[arg(long, default_value_t = 1 << 20)]
    limit: u64,
    /// Worker threads for the verification pass; never changes the output.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct VerifyEq1 {
    /// Ground-set size, at most 3.
    #[arg(long)]
    n: usize,
    /// Multiset size, at most 4.
    #[arg(long)]
    m: usize,
    /// Shatter hypothesis constant, rational `p/q`.
    #[arg(long, value_parser = parse_rat)]
    c: Rat,
    /// Shatter hypothesis exponent.
    #[arg(long)]
    d: u32,
}

#[derive(Args)]
struct BoundTable {
    /// Grid experiment `N,K`; repeatable.
    #[arg(long = "grid", value_parser = parse_pair, action = clap::ArgAction::Append)]
    grids: Vec<(u64, u64)>,
    /// Staircase experiment `K,H`; repeatable.
    #[arg(long = "staircase", value_parser = parse_pair, action = clap::ArgAction::Append)]
    staircases: Vec<(u64, u64)>,
    /// Double-grounded experiment `M`; repeatable.
    #[arg(long = "grounded", action = clap::ArgAction::Append)]
    grounded: Vec<usize>,
    /// Exhaustive-verification cap per census.
    #[arg(long, default_value_t = 1 << 20)]
    limit: u64,
    /// Worker threads; never changes the output.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    Grid,
    Staircase,
    DoubleGrounded,
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    Rat::from_str(s).map_err(|e| format!("`{s}` is not a rational: {e}"))
}

fn parse_urat(s: &str) -> Result<Ratio<u64>, String> {
    Ratio::from_str(s).map_err(|e| format!("`{s}` is not a nonnegative rational: {e}"))
}

fn parse_pair(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("`{s}` is not a `A,B` pair"))?;
    let a = a.trim().parse().map_err(|e| format!("bad first entry: {e}"))?;
    let b = b.trim().parse().map_err(|e| format!("bad second entry: {e}"))?;
    Ok((a, b))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

type AnyError = Box<dyn std::error::Error>;

fn run(cmd: Cmd) -> Result<(), AnyError> {
    match cmd {
        Cmd::GenGrid(a) => gen_grid(a),
        Cmd::GenStaircase(a) => gen_staircase(a),
        Cmd::Graph(a) => graph_cmd(a),
        Cmd::Validate(a) => validate(a),
        Cmd::Shatter(a) => shatter(a),
        Cmd::Vc(a) => vc(a),
        Cmd::Encode(a) => encode_cmd(a),
        Cmd::Decode(a) => decode_cmd(a),
        Cmd::PackCheck(a) => pack_check(a),
        Cmd::Sweep(a) => sweep_cmd(a),
        Cmd::Zone(a) => zone(a),
        Cmd::Vdecomp(a) => vdecomp(a),
        Cmd::Cut(a) => cut(a),
        Cmd::Split(a) => split(a),
        Cmd::Census(a) => census(a),
        Cmd::VerifyEq1(a) => verify_eq1(a),
        Cmd::BoundTable(a) => bound_table_cmd(a),
    }
}

// ---------------------------------------------------------------- plumbing

fn read_bytes(path: &str) -> io::Result<Vec<u8>> {
    if path == "-" {
        let mut buf = Vec::new();
        io::stdin().lock().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        fs::read(path)
    }
}

fn read_text(path: &str) -> io::Result<String> {
    let bytes = read_bytes(path)?;
    String::from_utf8(bytes).map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))
}

fn emit(output: Option<&PathBuf>, bytes: &[u8]) -> io::Result<()> {
    match output {
        Some(p) => fs::write(p, bytes),
        None => io::stdout().lock().write_all(bytes),
    }
}

fn read_family(path: &str) -> Result<CurveFamily<Rat>, AnyError> {
    Ok(family_from_json(&read_text(path)?)?)
}

fn read_set_family(path: &str) -> Result<SetFamily, AnyError> {
    Ok(SetFamily::from_text(&read_text(path)?)?)
}

fn print_json(v: &Value) -> Result<(), AnyError> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    emit(None, s.as_bytes())?;
    Ok(())
}

fn rat_str(r: &Rat) -> String {
    r.to_string()
}

// ------------------------------------------------------------- generators

fn gen_grid(a: GenGrid) -> Result<(), AnyError> {
    let g = build_grid(a.n, a.k)?;
    let c = match a.choices.as_str() {
        "all-cross" => ChoiceAssignment::uniform(&g, Choice::Cross),
        "all-avoid" => ChoiceAssignment::uniform(&g, Choice::Avoid),
        "random" => {
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed.expect("clap enforces --seed"));
            ChoiceAssignment::random(&g, &mut rng)
        }
        bits if bits.bytes().all(|b| b == b'0' || b == b'1') => {
            ChoiceAssignment::from_bits(&g, bits.bytes().map(|b| b == b'1').collect())?
        }
        other => {
            return Err(format!(
                "--choices must be all-cross, all-avoid, random, or a 0/1 string, got `{other}`"
            )
            .into())
        }
    };
    let scale = a.scale.unwrap_or_else(|| default_scale(&g));
    let fam = realize_geometric(&g, &c, &scale)?;
    emit(a.output.as_ref(), family_to_json(&fam).as_bytes())?;
    Ok(())
}

fn gen_staircase(a: GenStaircase) -> Result<(), AnyError> {
    let params = if a.choices == "random" {
        let h = a.h.expect("clap enforces --h");
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed.expect("clap enforces --seed"));
        StaircaseParams::random(a.k, h, &mut rng)?
    } else {
        let mut triples = Vec::new();
        for (i, t) in a.choices.split(';').enumerate() {
            let entries: Vec<u64> = t
                .split(',')
                .map(|e| e.trim().parse())
                .collect::<Result<_, _>>()
                .map_err(|e| format!("triple {}: {e}", i + 1))?;
            match entries[..] {
                [x, y, z] => triples.push((x, y, z)),
                _ => return Err(format!("triple {} must have three entries", i + 1).into()),
            }
        }
        StaircaseParams::new(a.k, triples)?
    };
    let fam: CurveFamily<Rat> = staircase_build(&params)?;
    emit(a.output.as_ref(), family_to_json(&fam).as_bytes())?;
    Ok(())
}

// ------------------------------------------------------- geometry commands

fn graph_json(g: &LabelledGraph) -> Value {
    let edges: Vec<Value> = g.edges().map(|(a, b)| json!([a, b])).collect();
    json!({
        "edges": edges,
        "labels": g.labels(),
        "order": g.order(),
        "size": g.size(),
    })
}

fn graph_cmd(a: WithInput) -> Result<(), AnyError> {
    let fam = read_family(&a.input)?;
    let g = checked_intersection_graph(&fam)?;
    let mut s = serde_json::to_string_pretty(&graph_json(&g))?;
    s.push('\n');
    emit(a.output.as_ref(), s.as_bytes())?;
    Ok(())
}

fn validate(a: Input) -> Result<(), AnyError> {
    let fam = read_family(&a.input)?;
    match is_pseudosegment_family(&fam)? {
        PseudoCheck::Ok => {}
        PseudoCheck::Violation { a, b } => {
            return Err(format!("curves `{a}` and `{b}` cross more than once").into())
        }
    }
    let mut out = format!("{}\n", version_line());
    out.push_str(&format!("curves: {}\n", fam.len()));
    out.push_str("pseudo-segments: ok\n");
    match fam.strip() {
        Some((x0, x1)) => out.push_str(&format!("strip: {}..{}\n", rat_str(x0), rat_str(x1))),
        None => out.push_str("strip: none\n"),
    }
    match double_grounds(&fam) {
        Ok((g0, g1)) => out.push_str(&format!(
            "double-grounded: yes ({}..{})\n",
            rat_str(&g0),
            rat_str(&g1)
        )),
        Err(_) => out.push_str("double-grounded: no\n"),
    }
    emit(None, out.as_bytes())?;
    Ok(())
}

fn sweep_cmd(a: WithInput) -> Result<(), AnyError> {
    let fam = read_family(&a.input)?;
    let w = sweep(&fam)?;
    emit(a.output.as_ref(), w.to_text().as_bytes())?;
    Ok(())
}

fn zone(a: Zone) -> Result<(), AnyError> {
    let w = WiringDiagram::from_text(&read_text(&a.input)?)?;
    let fs = faces(&w);
    let z = fs.zone(&a.wire)?;
    let out = format!(
        "{}\nfaces: {}\nzone({}): {}\n",
        version_line(),
        fs.count(),
        a.wire,
        z
    );
    emit(None, out.as_bytes())?;
    Ok(())
}

fn vbound_str(b: &VBound) -> String {
    match b {
        VBound::NegInf => "-inf".into(),
        VBound::PosInf => "+inf".into(),
        VBound::Curve(l) => l.clone(),
    }
}

fn wall_json(w: &Wall<Rat>) -> Value {
    let origin = match &w.origin {
        WallOrigin::Ground => "ground".to_string(),
        WallOrigin::Crossing(a, b) => format!("crossing({a},{b})"),
        WallOrigin::Endpoint(c) => format!("endpoint({c})"),
    };
    json!({ "origin": origin, "x": rat_str(&w.x) })
}

fn vdecomp(a: Vdecomp) -> Result<(), AnyError> {
    let fam = read_family(&a.input)?;
    let x0 = match (a.x0, fam.strip()) {
        (Some(x), _) => x,
        (None, Some((s0, _))) => s0.clone(),
        (None, None) => fam
            .curves()
            .iter()
            .map(|c| c.first().x.clone())
            .min()
            .ok_or("empty family has no extent")?,
    };
    let x1 = match (a.x1, fam.strip()) {
        (Some(x), _) => x,
        (None, Some((_, s1))) => s1.clone(),
        (None, None) => fam
            .curves()
            .iter()
            .map(|c| c.last().x.clone())
            .max()
            .ok_or("empty family has no extent")?,
    };
    let vd = vertical_decomposition(&fam, &x0, &x1)?;
    match a.format {
        Format::Json => {
            let cells: Vec<Value> = vd
                .cells
                .iter()
                .map(|c| {
                    json!({
                        "bottom": vbound_str(&c.bottom),
                        "crossings": c.crossings,
                        "left": wall_json(&c.left),
                        "right": wall_json(&c.right),
                        "top": vbound_str(&c.top),
                    })
                })
                .collect();
            let adjacency: Vec<Value> = vd.adjacency.iter().map(|&(i, j)| json!([i, j])).collect();
            print_json(&json!({
                "adjacency": adjacency,
                "cells": cells,
                "version": version_line(),
                "x0": rat_str(&vd.x0),
                "x1": rat_str(&vd.x1),
            }))
        }
        Format::Csv => {
            let mut out = format!("# {}\n", version_line());
            out.push_str("cell,x_lo,x_hi,bottom,top,crossings\n");
            for (i, c) in vd.cells.iter().enumerate() {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    i,
                    rat_str(&c.left.x),
                    rat_str(&c.right.x),
                    vbound_str(&c.bottom),
                    vbound_str(&c.top),
                    c.crossings.len()
                ));
            }
            emit(None, out.as_bytes())?;
            Ok(())
        }
    }
}

fn cut(a: Cut) -> Result<(), AnyError> {
    let fam = read_family(&a.input)?;
    let res = weak_cutting(&fam, a.r, a.seed)?;
    print_json(&json!({
        "attempts": res.attempts,
        "cells": res.decomposition.cell_count(),
        "max_cell_crossing": res.max_cell_crossing(),
        "r": format!("{}", res.r),
        "sample": res.sample,
        "version": version_line(),
    }))
}

fn split_node_json(n: &SplitNode<Rat>) -> Value {
    let (lo, hi) = n.strip();
    let mut v = json!({
        "enders": n.endpoint_curves(),
        "leaf": n.is_leaf(),
        "p": n.p(),
        "through": n.through(),
        "x_hi": rat_str(hi),
        "x_lo": rat_str(lo),
    });
    if let Some((l, r)) = n.children() {
        v["children"] = json!([split_node_json(l), split_node_json(r)]);
    }
    v
}

fn split(a: Split) -> Result<(), AnyError> {
    let fam = read_family(&a.input)?;
    let tree = strip_split(&fam)?;
    match a.format {
        Format::Json => print_json(&json!({
            "depth": tree.depth(),
            "leaves": tree.leaf_count(),
            "root": split_node_json(tree.root()),
            "version": version_line(),
        })),
        Format::Csv => {
            let mut out = format!("# {}\n", version_line());
            out.push_str("node,parent,x_lo,x_hi,through,enders,p,leaf\n");
            // Preorder with explicit parent pointers.
            let mut stack: Vec<(Option<usize>, &SplitNode<Rat>)> = vec![(None, tree.root())];
            let mut next = 0usize;
            while let Some((parent, n)) = stack.pop() {
                let id = next;
                next += 1;
                let (lo, hi) = n.strip();
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{}\n",
                    id,
                    parent.map(|p| p.to_string()).unwrap_or_default(),
                    rat_str(lo),
                    rat_str(hi),
                    n.through().len(),
                    n.endpoint_curves().len(),
                    n.p(),
                    n.is_leaf()
                ));
                if let Some((l, r)) = n.children() {
                    stack.push((Some(id), r));
                    stack.push((Some(id), l));
                }
            }
            emit(None, out.as_bytes())?;
            Ok(())
        }
    }
}

// ------------------------------------------------------ set-system commands

fn shatter(a: Shatter) -> Result<(), AnyError> {
    let f = read_set_family(&a.input)?;
    let (kind, value) = if a.dual {
        ("dual", dual_shatter(&f, a.z, a.budget)?)
    } else {
        ("primal", primal_shatter(&f, a.z, a.budget)?)
    };
    let out = format!("{}\n{kind}-shatter z={}: {value}\n", version_line(), a.z);
    emit(None, out.as_bytes())?;
    Ok(())
}

fn vc(a: Vc) -> Result<(), AnyError> {
    let f = read_set_family(&a.input)?;
    let dim = vc_dimension(&f, a.budget)?;
    let out = format!("{}\nvc-dimension: {dim}\n", version_line());
    emit(None, out.as_bytes())?;
    Ok(())
}

fn encode_cmd(a: WithInput) -> Result<(), AnyError> {
    let f = read_set_family(&a.input)?;
    let enc = encode(&f);
    emit(a.output.as_ref(), &enc.bytes)?;
    Ok(())
}

fn decode_cmd(a: WithInput) -> Result<(), AnyError> {
    let f = decode(&read_bytes(&a.input)?)?;
    let mut rows = f.rows().to_vec();
    rows.sort_by(|x, y| x.cmp_value(y));
    let sorted = SetFamily::new(f.n(), rows)?;
    emit(a.output.as_ref(), sorted.to_text().as_bytes())?;
    Ok(())
}

fn pack_check(a: PackCheck) -> Result<(), AnyError> {
    let f = read_set_family(&a.input)?;
    let greedy = greedy_ordering(&f);
    let report = packing_check(&f, &a.c, a.d, a.z_max, a.budget)?;
    match a.format {
        Format::Json => {
            let per_prefix: Vec<Value> = report
                .per_prefix
                .iter()
                .map(|t| {
                    json!({
                        "delta": t.delta,
                        "position": t.position,
                        "ratio": rat_str(&t.ratio),
                    })
                })
                .collect();
            print_json(&json!({
                "c": rat_str(&a.c),
                "d": a.d,
                "deltas": greedy.deltas,
                "max_ratio": rat_str(&report.max_ratio),
                "per_prefix": per_prefix,
                "version": version_line(),
                "z_max": a.z_max,
            }))
        }
        Format::Csv => {
            let mut out = format!("# {}\n", version_line());
            out.push_str(&format!("# max_ratio: {}\n", rat_str(&report.max_ratio)));
            out.push_str("position,delta,ratio\n");
            for t in &report.per_prefix {
                out.push_str(&format!("{},{},{}\n", t.position, t.delta, rat_str(&t.ratio)));
            }
            emit(None, out.as_bytes())?;
            Ok(())
        }
    }
}

// ---------------------------------------------------------- census commands

fn census(a: Census) -> Result<(), AnyError> {
    match a.family {
        FamilyKind::Grid => {
            let (n, k) = (a.n.unwrap(), a.k.unwrap());
            let g = build_grid(n, k)?;
            let r = grid_census(&g, a.limit, a.jobs)?;
            match a.format {
                Format::Json => print_json(&json!({
                    "count": r.count.to_string(),
                    "family": "grid",
                    "k": k,
                    "log2_count": r.log2_count(),
                    "n": n,
                    "verified": r.verified,
                    "version": version_line(),
                })),
                Format::Csv => {
                    let out = format!(
                        "# {}\nfamily,n,k,count,log2_count,verified\ngrid,{},{},{},{},{}\n",
                        version_line(),
                        n,
                        k,
                        r.count,
                        r.log2_count(),
                        r.verified
                    );
                    emit(None, out.as_bytes())?;
                    Ok(())
                }
            }
        }
        FamilyKind::Staircase => {
            let (k, h) = (a.k.unwrap(), a.h.unwrap());
            let r = staircase_census(k, h, a.limit, a.jobs)?;
            match a.format {
                Format::Json => print_json(&json!({
                    "count": r.count.to_string(),
                    "family": "staircase",
                    "h": h,
                    "k": k,
                    "log2_count": r.log2_count(),
                    "verified": r.verified,
                    "version": version_line(),
                })),
                Format::Csv => {
                    let out = format!(
                        "# {}\nfamily,k,h,count,log2_count,verified\nstaircase,{},{},{},{},{}\n",
                        version_line(),
                        k,
                        h,
                        r.count,
                        r.log2_count(),
                        r.verified
                    );
                    emit(None, out.as_bytes())?;
                    Ok(())
                }
            }
        }
        FamilyKind::DoubleGrounded => {
            let m = a.m.unwrap();
            let r = enumerate_double_grounded(m)?;
            match a.format {
                Format::Json => print_json(&json!({
                    "classes": r.class_count,
                    "family": "double-grounded",
                    "graphs": r.graph_count,
                    "m": m,
                    "version": version_line(),
                })),
                Format::Csv => {
                    let out = format!(
                        "# {}\nfamily,m,graphs,classes\ndouble-grounded,{},{},{}\n",
                        version_line(),
                        m,
                        r.graph_count,
                        r.class_count
                    );
                    emit(None, out.as_bytes())?;
                    Ok(())
                }
            }
        }
    }
}

fn verify_eq1(a: VerifyEq1) -> Result<(), AnyError> {
    let holds = verify_h_relation(a.n, a.m, &a.c, a.d)?;
    if !holds {
        return Err(format!(
            "repeated-set identity fails for n={} m={} c={} d={}",
            a.n,
            a.m,
            rat_str(&a.c),
            a.d
        )
        .into());
    }
    let out = format!(
        "{}\nrepeated-set identity: holds (n={}, m={}, c={}, d={})\n",
        version_line(),
        a.n,
        a.m,
        rat_str(&a.c),
        a.d
    );
    emit(None, out.as_bytes())?;
    Ok(())
}

fn bound_table_cmd(a: BoundTable) -> Result<(), AnyError> {
    let mut experiments = Vec::new();
    for &(n, k) in &a.grids {
        experiments.push(Experiment::Grid { n, k });
    }
    for &(k, h) in &a.staircases {
        experiments.push(Experiment::Staircase { k, h });
    }
    for &m in &a.grounded {
        experiments.push(Experiment::DoubleGrounded { m });
    }
    if experiments.is_empty() {
        return Err("no experiments: pass --grid, --staircase, or --grounded".into());
    }
    let table = bound_table(&experiments, a.limit, a.jobs)?;
    let out = format!("# {}\n{table}", version_line());
    emit(None, out.as_bytes())?;
    Ok(())
}
