//! Partitions, the diagonal coloring, and brute-force generating series.
//!
//! A partition `(λ_1, ..., λ_m)` is drawn as columns: column `j` holds
//! `λ_j` boxes, so box `(i, j)` (row `i`, column `j`, 1-based) exists iff
//! `λ_j >= i`. Under the diagonal `a`-coloring that box gets the residue
//! `a - i + j mod n`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::series::MultiSeries;

/// A non-increasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not non-increasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from a sequence that may contain trailing zeros.
    pub(crate) fn from_padded(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column height `j` (1-based), zero past the last column.
    pub fn column(&self, j: usize) -> usize {
        self.parts.get(j.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Number of boxes in row `i` (1-based).
    pub fn row(&self, i: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= i).count()
    }

    pub fn contains_box(&self, i: usize, j: usize) -> bool {
        i >= 1 && self.column(j) >= i
    }

    /// All boxes `(row, column)`, column by column, bottom to top.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(j, &h)| (1..=h).map(move |i| (i, j + 1)))
    }

    /// Number of boxes `(i, i)` on the main diagonal.
    pub fn diagonal_length(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(j, &h)| h > j)
            .count()
    }

    /// Swaps rows and columns.
    pub fn transpose(&self) -> Partition {
        let height = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (1..=height).map(|i| self.row(i)).collect(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Parses comma-separated parts; whitespace is ignored and the empty string
/// is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let cleaned = cleaned.trim_start_matches('(').trim_end_matches(')');
        if cleaned.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = cleaned
            .split(',')
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Modulus `n >= 2` and offset `a` of a diagonal coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ColoringContext {
    modulus: usize,
    offset: usize,
}

impl ColoringContext {
    pub fn new(modulus: usize, offset: usize) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModulus(modulus));
        }
        if offset >= modulus {
            return Err(Error::InvalidOffset { offset, modulus });
        }
        Ok(ColoringContext { modulus, offset })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    /// Canonical representative of `x mod n`.
    pub fn reduce(&self, x: i64) -> usize {
        x.rem_euclid(self.modulus as i64) as usize
    }

    /// Color of box `(i, j)`.
    pub fn residue(&self, i: usize, j: usize) -> usize {
        self.reduce(self.offset as i64 - i as i64 + j as i64)
    }

    /// Same modulus, different offset.
    pub fn with_offset(&self, offset: usize) -> Result<Self> {
        ColoringContext::new(self.modulus, offset)
    }
}

/// Box counts per color.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<usize>);

impl WeightVector {
    pub fn zeros(modulus: usize) -> Self {
        WeightVector(vec![0; modulus])
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Exponent vector of `q^wt`.
    pub fn exponents(&self) -> Vec<u32> {
        self.0.iter().map(|&c| c as u32).collect()
    }

    fn add_assign(&mut self, other: &WeightVector) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
    }
}

impl From<Vec<usize>> for WeightVector {
    fn from(v: Vec<usize>) -> Self {
        WeightVector(v)
    }
}

/// Diagrams together with the offset each one is colored with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTuple {
    diagrams: Vec<Partition>,
    offsets: Vec<usize>,
}

impl PartitionTuple {
    pub fn new(diagrams: Vec<Partition>, offsets: Vec<usize>) -> Result<Self> {
        if offsets.is_empty() {
            return Err(Error::EmptyOffsets);
        }
        if diagrams.len() != offsets.len() {
            return Err(Error::InvalidPartition(format!(
                "{} diagrams for {} offsets",
                diagrams.len(),
                offsets.len()
            )));
        }
        Ok(PartitionTuple { diagrams, offsets })
    }

    pub fn diagrams(&self) -> &[Partition] {
        &self.diagrams
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn total_weight(&self) -> usize {
        self.diagrams.iter().map(Partition::weight).sum()
    }

    pub fn color_weight(&self, modulus: usize) -> Result<WeightVector> {
        let mut out = WeightVector::zeros(modulus);
        for (p, &a) in self.diagrams.iter().zip(&self.offsets) {
            out.add_assign(&color_weight(p, &ColoringContext::new(modulus, a)?));
        }
        Ok(out)
    }
}

/// Every partition of `k`, in lexicographically decreasing order.
pub fn enumerate_partitions(k: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// Every partition of weight at most `max_weight`, by increasing weight.
pub fn partitions_up_to(max_weight: usize) -> impl Iterator<Item = Partition> {
    (0..=max_weight).flat_map(enumerate_partitions)
}

pub fn color_weight(p: &Partition, ctx: &ColoringContext) -> WeightVector {
    let mut counts = vec![0; ctx.modulus()];
    for (i, j) in p.boxes() {
        counts[ctx.residue(i, j)] += 1;
    }
    WeightVector(counts)
}

/// `Z_a` truncated at degree `max_degree`, by enumerating every diagram.
pub fn z_brute(ctx: &ColoringContext, max_degree: u32) -> MultiSeries {
    let mut out = MultiSeries::zero(ctx.modulus(), max_degree);
    for p in partitions_up_to(max_degree as usize) {
        out.add_term(&color_weight(&p, ctx).exponents(), 1.into());
    }
    out
}

/// Series of tuples of diagrams, the `i`-th colored with `offsets[i]`.
/// This is the product of the single-diagram series.
pub fn z_tuple(offsets: &[usize], modulus: usize, max_degree: u32) -> Result<MultiSeries> {
    if offsets.is_empty() {
        return Err(Error::EmptyOffsets);
    }
    let mut out = MultiSeries::one(modulus, max_degree);
    for &a in offsets {
        let ctx = ColoringContext::new(modulus, a)?;
        out = out.product(&z_brute(&ctx, max_degree))?;
    }
    Ok(out)
}
