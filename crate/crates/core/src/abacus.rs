//! Abacus (bead) representation, `n`-cores, `n`-quotients and charges.
//!
//! A partition `λ` with a window of `N` beads sits at positions
//! `λ_i - i + 1` for `i = 1..N` (parts past the end count as zero). Ruler
//! `r` holds the positions congruent to `r` mod `n`. Removing a border strip
//! of length `n` moves one bead from `x` to the free slot `x - n` on its
//! ruler, so the core is what remains after pushing every bead as far toward
//! the negative end as it goes, and the quotient records how far each ruler
//! was from that packed state.
//!
//! All window sizes are multiples of `n`; the core, quotient, and charges do
//! not depend on which one is used.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::identities::ChargeVector;
use crate::partitions::{color_weight, partitions_up_to, ColoringContext, Partition};
use crate::series::MultiSeries;

/// Bead positions of a partition in a window of fixed size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BeadWindow {
    modulus: usize,
    positions: BTreeSet<i64>,
}

impl BeadWindow {
    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn size(&self) -> usize {
        self.positions.len()
    }

    pub fn positions(&self) -> &BTreeSet<i64> {
        &self.positions
    }

    /// Lowest position a bead of this window can occupy.
    fn floor(&self) -> i64 {
        1 - self.size() as i64
    }

    fn ruler(&self, x: i64) -> usize {
        x.rem_euclid(self.modulus as i64) as usize
    }

    /// Lowest slot of ruler `r` inside the window.
    fn ruler_base(&self, r: usize) -> i64 {
        let f = self.floor();
        f + (r as i64 - f).rem_euclid(self.modulus as i64)
    }

    /// Slot indices (0 = the lowest slot in the window) of the beads on
    /// ruler `r`, largest first.
    pub fn ruler_slots(&self, r: usize) -> Vec<usize> {
        let base = self.ruler_base(r);
        let n = self.modulus as i64;
        self.positions
            .iter()
            .rev()
            .filter(|&&x| self.ruler(x) == r)
            .map(|&x| ((x - base) / n) as usize)
            .collect()
    }

    pub fn beads_on_ruler(&self, r: usize) -> usize {
        self.positions
            .iter()
            .filter(|&&x| self.ruler(x) == r)
            .count()
    }

    pub fn to_partition(&self) -> Partition {
        let parts = self
            .positions
            .iter()
            .rev()
            .enumerate()
            .map(|(i, &x)| (x + i as i64) as usize)
            .collect();
        Partition::from_padded(parts)
    }

    fn from_slots(modulus: usize, size: usize, slots: &[Vec<usize>]) -> BeadWindow {
        let mut w = BeadWindow {
            modulus,
            positions: BTreeSet::new(),
        };
        let floor = 1 - size as i64;
        let n = modulus as i64;
        for (r, s) in slots.iter().enumerate() {
            let base = floor + (r as i64 - floor).rem_euclid(n);
            w.positions.extend(s.iter().map(|&k| base + k as i64 * n));
        }
        w
    }

    /// Pushes every bead to the lowest free slots of its ruler.
    fn packed(&self) -> BeadWindow {
        let slots: Vec<Vec<usize>> = (0..self.modulus)
            .map(|r| (0..self.beads_on_ruler(r)).rev().collect())
            .collect();
        BeadWindow::from_slots(self.modulus, self.size(), &slots)
    }
}

/// Smallest window used internally: a multiple of `n` with at least `n`
/// spare zero parts.
pub fn default_window_size(p: &Partition, n: usize) -> usize {
    n * (p.len() + n).div_ceil(n)
}

pub fn beta_window(p: &Partition, n: usize, size: usize) -> Result<BeadWindow> {
    if n < 2 {
        return Err(Error::InvalidModulus(n));
    }
    if size < p.len() || !size.is_multiple_of(n) {
        return Err(Error::InvalidWindow {
            size,
            modulus: n,
            parts: p.len(),
        });
    }
    let positions = (1..=size)
        .map(|i| p.column(i) as i64 - i as i64 + 1)
        .collect();
    Ok(BeadWindow {
        modulus: n,
        positions,
    })
}

fn window(p: &Partition, n: usize) -> BeadWindow {
    assert!(n >= 2, "modulus must be at least 2");
    beta_window(p, n, default_window_size(p, n)).expect("default window is valid")
}

pub fn n_core(p: &Partition, n: usize) -> Partition {
    window(p, n).packed().to_partition()
}

pub fn is_core(p: &Partition, n: usize) -> bool {
    n_core(p, n) == *p
}

/// Quotient component `r` reads the gaps on ruler `r` (positions `≡ r mod n`)
/// as a partition: the `k`-th highest bead contributes how many empty slots
/// lie below it.
pub fn n_quotient(p: &Partition, n: usize) -> Vec<Partition> {
    let w = window(p, n);
    (0..n)
        .map(|r| {
            let slots = w.ruler_slots(r);
            let b = slots.len();
            Partition::from_padded(
                slots
                    .iter()
                    .enumerate()
                    .map(|(k, &s)| s - (b - 1 - k))
                    .collect(),
            )
        })
        .collect()
}

/// A core together with its quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreQuotient {
    pub core: Partition,
    pub quotient: Vec<Partition>,
    pub modulus: usize,
}

impl CoreQuotient {
    pub fn quotient_weight(&self) -> usize {
        self.quotient.iter().map(Partition::weight).sum()
    }
}

pub fn decompose(p: &Partition, n: usize) -> CoreQuotient {
    CoreQuotient {
        core: n_core(p, n),
        quotient: n_quotient(p, n),
        modulus: n,
    }
}

pub fn from_core_quotient(cq: &CoreQuotient) -> Result<Partition> {
    let n = cq.modulus;
    if n < 2 {
        return Err(Error::InvalidModulus(n));
    }
    if cq.quotient.len() != n {
        return Err(Error::QuotientLength {
            got: cq.quotient.len(),
            expected: n,
        });
    }
    if !is_core(&cq.core, n) {
        return Err(Error::NotACore(cq.core.to_string(), n));
    }
    let longest = cq.quotient.iter().map(Partition::len).max().unwrap_or(0);
    let mut size = default_window_size(&cq.core, n);
    let w = loop {
        let w = beta_window(&cq.core, n, size)?;
        if (0..n).all(|r| w.beads_on_ruler(r) >= cq.quotient[r].len()) {
            break w;
        }
        size += n * longest.max(1);
    };
    let slots: Vec<Vec<usize>> = (0..n)
        .map(|r| {
            let b = w.beads_on_ruler(r);
            (0..b)
                .map(|k| (b - 1 - k) + cq.quotient[r].column(k + 1))
                .collect()
        })
        .collect();
    Ok(BeadWindow::from_slots(n, size, &slots).to_partition())
}

/// Bead surplus of each ruler over the empty partition in the same window.
fn ruler_surplus(p: &Partition, n: usize) -> Vec<i64> {
    let w = window(p, n);
    let baseline = (w.size() / n) as i64;
    (0..n)
        .map(|r| w.beads_on_ruler(r) as i64 - baseline)
        .collect()
}

/// Charges `j_0, ..., j_{n-1}` of the core of `p`.
///
/// `j_i` is the bead deficit of ruler `-i mod n`. With this labeling the
/// monomial `q_{1+a}^{-j_0} ⋯ q_{n-1+a}^{-j_0-⋯-j_{n-2}} q^{Σ binom(j_i+1, 2)}`
/// is the `a`-colored weight of the core for every offset `a`, so the
/// charges themselves do not depend on the offset.
pub fn core_charges(p: &Partition, ctx: &ColoringContext) -> ChargeVector {
    let n = ctx.modulus();
    let surplus = ruler_surplus(p, n);
    let j = (0..n).map(|i| -surplus[(n - i) % n]).collect();
    ChargeVector::new(j).expect("bead surpluses sum to zero")
}

/// Generating series of `n`-cores under the `a`-coloring, by enumeration.
pub fn core_series_brute(ctx: &ColoringContext, max_degree: u32) -> MultiSeries {
    let mut out = MultiSeries::zero(ctx.modulus(), max_degree);
    for p in partitions_up_to(max_degree as usize) {
        if is_core(&p, ctx.modulus()) {
            out.add_term(&color_weight(&p, ctx).exponents(), 1.into());
        }
    }
    out
}
