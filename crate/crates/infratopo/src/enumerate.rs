//! Exhaustive enumeration of spaces on small ground sets, plus the
//! implication matrix and counterexample hunter built on top of it.
//!
//! A family over an n-element ground set is encoded as a bit vector over
//! the 2^n subsets. The empty set and the ground set are forced members, so
//! the search only decides the proper nonempty "middles". Middles are
//! processed in descending popcount order (ties by ascending mask): the meet
//! of two distinct accepted members is a strictly smaller set, hence decided
//! strictly later, so each inclusion just marks the pending meets it forces
//! and exclusion branches are pruned exactly when the middle is marked.
//!
//! Sharding cuts the search at the first `k` membership decisions, with
//! `2^k >= total`: a family belongs to shard `p % total` where `p` is the
//! integer formed by those decisions. Shards are disjoint, their union is
//! the full enumeration, and every stream is emitted in ascending order of
//! the family encoding.

use std::fmt::Write as _;

use rayon::prelude::*;
use thiserror::Error;

use crate::classes::{ClassId, ClassView};
use crate::sets::{canonical_form, GroundSet, SetFamily, Subset};
use crate::space::InfraSpace;

/// Which slice of the search to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shard {
    pub index: u64,
    pub total: u64,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 0, total: 1 };
}

/// What to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    /// Ground set size, 1 through 5.
    pub n: usize,
    /// Keep only one representative per relabeling orbit.
    pub up_to_iso: bool,
    /// Report the count instead of materializing spaces.
    pub count_only: bool,
    pub shard: Option<Shard>,
}

impl EnumConfig {
    pub fn labeled(n: usize) -> Self {
        EnumConfig { n, up_to_iso: false, count_only: false, shard: None }
    }

    pub fn validate(&self) -> Result<(), EnumError> {
        if self.n < 1 || self.n > 5 {
            return Err(EnumError::UnsupportedSize(self.n));
        }
        if let Some(s) = self.shard {
            if s.total == 0 || s.index >= s.total {
                return Err(EnumError::BadShard { index: s.index, total: s.total });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("ground size {0} is outside the supported range 1..=5")]
    UnsupportedSize(usize),
    #[error("shard index {index} is not below the shard total {total}")]
    BadShard { index: u64, total: u64 },
}

struct Search {
    /// Middles in decision order: descending popcount, then ascending mask.
    order: Vec<u32>,
    /// Mask to position in `order`.
    pos: Vec<usize>,
    /// Marked middles must be included when their turn comes.
    required: Vec<bool>,
    included: Vec<u32>,
    /// Running family encoding.
    enc: u64,
    /// Number of leading decisions that select the shard.
    k: usize,
    shard: Shard,
}

impl Search {
    fn new(n: usize, shard: Shard) -> Self {
        let full = (1u32 << n) - 1;
        let mut order: Vec<u32> = (1..full).collect();
        order.sort_unstable_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
        let mut pos = vec![usize::MAX; 1 << n];
        for (i, &m) in order.iter().enumerate() {
            pos[m as usize] = i;
        }
        let mut k = 0;
        while (1u64 << k) < shard.total && k < order.len() {
            k += 1;
        }
        Search {
            required: vec![false; order.len()],
            included: Vec::with_capacity(order.len()),
            enc: 1 | 1u64 << full,
            pos,
            order,
            k,
            shard,
        }
    }

    fn run(&mut self, emit: &mut dyn FnMut(u64)) {
        self.step(emit, 0, 0);
    }

    fn step(&mut self, emit: &mut dyn FnMut(u64), d: usize, prefix: u64) {
        if d == self.k && prefix % self.shard.total != self.shard.index {
            return;
        }
        if d == self.order.len() {
            emit(self.enc);
            return;
        }
        let m = self.order[d];
        if !self.required[d] {
            self.step(emit, d + 1, if d < self.k { prefix << 1 } else { prefix });
        }
        let mut marked: Vec<usize> = Vec::new();
        for i in 0..self.included.len() {
            let t = m & self.included[i];
            if t != 0 && t != m && t != self.included[i] {
                let pt = self.pos[t as usize];
                debug_assert!(pt > d, "meets of distinct members are decided later");
                if !self.required[pt] {
                    self.required[pt] = true;
                    marked.push(pt);
                }
            }
        }
        self.included.push(m);
        self.enc |= 1u64 << m;
        self.step(emit, d + 1, if d < self.k { prefix << 1 | 1 } else { prefix });
        self.enc &= !(1u64 << m);
        self.included.pop();
        for pt in marked {
            self.required[pt] = false;
        }
    }
}

fn is_canonical(ground: &GroundSet, enc: u64) -> bool {
    let family = SetFamily::decode(enc);
    canonical_form(ground, &family) == family
}

/// Family encodings matching `cfg`, ascending.
pub fn enumerate_encodings(cfg: &EnumConfig) -> Result<Vec<u64>, EnumError> {
    cfg.validate()?;
    let shard = cfg.shard.unwrap_or(Shard::WHOLE);
    let mut out = Vec::new();
    Search::new(cfg.n, shard).run(&mut |enc| out.push(enc));
    out.sort_unstable();
    if cfg.up_to_iso {
        let ground = GroundSet::alpha(cfg.n);
        out = out
            .into_par_iter()
            .filter(|&enc| is_canonical(&ground, enc))
            .collect();
    }
    Ok(out)
}

/// Spaces matching `cfg`, ascending by family encoding.
pub fn enumerate_spaces(cfg: &EnumConfig) -> Result<Vec<InfraSpace>, EnumError> {
    let ground = GroundSet::alpha(cfg.n);
    Ok(enumerate_encodings(cfg)?
        .into_iter()
        .map(|enc| InfraSpace::from_validated_parts(ground.clone(), SetFamily::decode(enc)))
        .collect())
}

/// Number of spaces matching `cfg`, without materializing them.
pub fn count_spaces(cfg: &EnumConfig) -> Result<u64, EnumError> {
    cfg.validate()?;
    if cfg.up_to_iso {
        return Ok(enumerate_encodings(cfg)?.len() as u64);
    }
    let shard = cfg.shard.unwrap_or(Shard::WHOLE);
    let mut count = 0u64;
    Search::new(cfg.n, shard).run(&mut |_| count += 1);
    Ok(count)
}

/// Every space on ground sets of size 1 through `max_n`, ordered by size
/// and then family encoding.
pub fn universe(max_n: usize) -> Result<Vec<InfraSpace>, EnumError> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_spaces(&EnumConfig::labeled(n))?);
    }
    Ok(out)
}

/// One-line JSON form of a space: `{"n":3,"opens":[[],["a"],["a","b","c"]]}`.
pub fn space_jsonl(space: &InfraSpace) -> String {
    let ground = space.ground();
    let opens: Vec<Vec<&str>> = space
        .opens()
        .iter()
        .map(|m| m.iter().map(|i| ground.name(i)).collect())
        .collect();
    serde_json::json!({ "n": ground.n(), "opens": opens }).to_string()
}

/// A (space, subset) pair certifying that some subset is in one class and
/// not another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub space: InfraSpace,
    pub subset: Subset,
}

impl Witness {
    pub fn render(&self) -> String {
        format!(
            "{} in {}",
            self.space.ground().render(self.subset),
            self.space.opens().render(self.space.ground()),
        )
    }
}

/// One ordered class pair's verdict over a universe of spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixCell {
    pub holds: bool,
    pub counterexamples: u64,
    /// Present exactly when the implication fails; minimal by (ground size,
    /// family encoding, subset popcount, subset mask).
    pub witness: Option<Witness>,
}

/// Pairwise membership implications over a universe of spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplicationMatrix {
    pub classes: Vec<ClassId>,
    /// Row-major: `cells[i][j]` is the claim "class i membership implies
    /// class j membership".
    pub cells: Vec<Vec<MatrixCell>>,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct CandKey {
    n: usize,
    enc: u64,
    popcount: u32,
    mask: u32,
}

#[derive(Clone, Copy)]
struct Cand {
    key: CandKey,
    space_idx: usize,
}

struct Local {
    counts: Vec<u64>,
    best: Vec<Option<Cand>>,
}

impl Local {
    fn empty(cells: usize) -> Self {
        Local { counts: vec![0; cells], best: vec![None; cells] }
    }

    fn merge(mut self, other: Local) -> Local {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        for (a, b) in self.best.iter_mut().zip(other.best) {
            *a = match (*a, b) {
                (Some(x), Some(y)) => Some(if y.key < x.key { y } else { x }),
                (x, y) => x.or(y),
            };
        }
        self
    }
}

fn class_family_masks(space: &InfraSpace, classes: &[ClassId]) -> Vec<u64> {
    let view = ClassView::new(space);
    classes.iter().map(|id| view.family_of(*id).encode()).collect()
}

/// Least set bit of `bits` by (popcount, mask); `bits` must be nonzero.
fn min_counterexample(bits: u64) -> u32 {
    (0..64)
        .filter(|m| bits >> m & 1 == 1)
        .map(|m| m as u32)
        .min_by_key(|m| (m.count_ones(), *m))
        .expect("caller checks for a nonzero counterexample mask")
}

/// Decide every ordered class pair over the given spaces.
pub fn implication_matrix(spaces: &[InfraSpace], classes: &[ClassId]) -> ImplicationMatrix {
    let k = classes.len();
    let merged = spaces
        .par_iter()
        .enumerate()
        .map(|(idx, space)| {
            let masks = class_family_masks(space, classes);
            let (n, enc) = (space.ground().n(), space.opens().encode());
            let mut local = Local::empty(k * k);
            for i in 0..k {
                for j in 0..k {
                    let cex = masks[i] & !masks[j];
                    if cex != 0 {
                        let m = min_counterexample(cex);
                        local.counts[i * k + j] += u64::from(cex.count_ones());
                        local.best[i * k + j] = Some(Cand {
                            key: CandKey { n, enc, popcount: m.count_ones(), mask: m },
                            space_idx: idx,
                        });
                    }
                }
            }
            local
        })
        .reduce(|| Local::empty(k * k), Local::merge);

    let cells = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let count = merged.counts[i * k + j];
                    let witness = merged.best[i * k + j].map(|c| Witness {
                        space: spaces[c.space_idx].clone(),
                        subset: Subset::from_bits(c.key.mask),
                    });
                    MatrixCell { holds: count == 0, counterexamples: count, witness }
                })
                .collect()
        })
        .collect();
    ImplicationMatrix { classes: classes.to_vec(), cells }
}

/// First counterexample to "every `from` member is a `to` member", in
/// stream order; within a space, minimal by (subset popcount, subset mask).
pub fn hunt(spaces: &[InfraSpace], from: ClassId, to: ClassId) -> Option<Witness> {
    debug_assert!(from != to, "a class trivially implies itself");
    for space in spaces {
        let view = ClassView::new(space);
        let cex = view.family_of(from).encode() & !view.family_of(to).encode();
        if cex != 0 {
            return Some(Witness {
                space: space.clone(),
                subset: Subset::from_bits(min_counterexample(cex)),
            });
        }
    }
    None
}

impl ImplicationMatrix {
    pub fn cell(&self, from: ClassId, to: ClassId) -> Option<&MatrixCell> {
        let i = self.classes.iter().position(|c| *c == from)?;
        let j = self.classes.iter().position(|c| *c == to)?;
        Some(&self.cells[i][j])
    }

    pub fn to_json(&self) -> String {
        let cells: Vec<Vec<serde_json::Value>> = self
            .cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| {
                        let witness = cell.witness.as_ref().map(|w| {
                            serde_json::json!({
                                "space_opens": w.space.opens().render(w.space.ground()),
                                "subset": w.space.ground().render(w.subset),
                            })
                        });
                        serde_json::json!({
                            "holds": cell.holds,
                            "counterexamples": cell.counterexamples,
                            "witness": witness,
                        })
                    })
                    .collect()
            })
            .collect();
        serde_json::json!({
            "classes": self.classes.iter().map(|c| c.name()).collect::<Vec<_>>(),
            "cells": cells,
        })
        .to_string()
    }

    /// DOT digraph: an edge per implication that holds over the universe;
    /// edges whose converse fails are annotated with the converse witness.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph implications {\n  rankdir=BT;\n  node [shape=box];\n");
        for c in &self.classes {
            let _ = writeln!(out, "  \"{}\";", c.name());
        }
        for (i, row) in self.cells.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                if i == j || !cell.holds {
                    continue;
                }
                let from = self.classes[i].name();
                let to = self.classes[j].name();
                match self.cells[j][i].witness.as_ref() {
                    Some(w) => {
                        let _ = writeln!(
                            out,
                            "  \"{from}\" -> \"{to}\" [label=\"strict: {}\"];",
                            w.space.ground().render(w.subset),
                        );
                    }
                    None => {
                        let _ = writeln!(out, "  \"{from}\" -> \"{to}\";");
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }
}
