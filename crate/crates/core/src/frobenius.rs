//! Frobenius coordinates of diagrams and the constant-term route to `Z_a`.
//!
//! Cutting a diagram along its main diagonal leaves, for each diagonal box
//! `(i, i)`, a row piece (the box itself and everything to its right) and a
//! column piece (everything above it). The row pieces have strictly
//! decreasing lengths, as do the column pieces, and the two lists have the
//! same length `d`. Coloring turns each piece into a vector of color counts.
//!
//! Counting pairs of equal-length lists is a constant-term problem: the row
//! pieces are generated by `∏ (1 + z·m)` over all possible row-piece
//! monomials `m`, the column pieces by `∏ (1 + z⁻¹·m')`, and `Z_a` is the
//! `z^0` coefficient of the product.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partitions::{ColoringContext, Partition, WeightVector};
use crate::series::{MultiSeries, ZLaurentSeries};

/// Classical Frobenius coordinates: arm lengths `top` and leg lengths
/// `bottom`, both strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrobeniusCoordinates {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl FrobeniusCoordinates {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::RowLengthMismatch {
                top: top.len(),
                bottom: bottom.len(),
            });
        }
        for row in [&top, &bottom] {
            if row.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::NotStrictlyDecreasing(row.clone()));
            }
        }
        Ok(FrobeniusCoordinates { top, bottom })
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn rank(&self) -> usize {
        self.top.len()
    }

    /// `d + Σ (f_i + g_i)`.
    pub fn weight(&self) -> usize {
        self.rank() + self.top.iter().sum::<usize>() + self.bottom.iter().sum::<usize>()
    }
}

pub fn to_frobenius(p: &Partition) -> FrobeniusCoordinates {
    let d = p.diagonal_length();
    FrobeniusCoordinates {
        top: (1..=d).map(|i| p.row(i) - i).collect(),
        bottom: (1..=d).map(|i| p.column(i) - i).collect(),
    }
}

pub fn from_frobenius(fc: &FrobeniusCoordinates) -> Partition {
    let d = fc.rank();
    let widest = fc.top.first().map_or(0, |f| f + 1);
    let mut columns: Vec<usize> = (1..=d).map(|i| fc.bottom[i - 1] + i).collect();
    for j in d + 1..=widest {
        columns.push((1..=d).filter(|&i| fc.top[i - 1] + i >= j).count());
    }
    Partition::from_padded(columns)
}

/// Colored Frobenius partition: for each diagonal box, the color counts of
/// its row piece (`top`) and of its column piece (`bottom`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredFPartition {
    modulus: usize,
    top: Vec<Vec<usize>>,
    bottom: Vec<Vec<usize>>,
}

impl ColoredFPartition {
    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn top(&self) -> &[Vec<usize>] {
        &self.top
    }

    pub fn bottom(&self) -> &[Vec<usize>] {
        &self.bottom
    }

    pub fn rank(&self) -> usize {
        self.top.len()
    }

    /// Color-wise sums over both rows.
    pub fn column_weight(&self) -> WeightVector {
        let mut k = vec![0; self.modulus];
        for v in self.top.iter().chain(&self.bottom) {
            for (acc, x) in k.iter_mut().zip(v) {
                *acc += x;
            }
        }
        WeightVector::from(k)
    }

    pub fn total_weight(&self) -> usize {
        self.column_weight().total()
    }
}

pub fn to_colored_fpartition(p: &Partition, ctx: &ColoringContext) -> ColoredFPartition {
    let n = ctx.modulus();
    let d = p.diagonal_length();
    let mut top = Vec::with_capacity(d);
    let mut bottom = Vec::with_capacity(d);
    for i in 1..=d {
        let mut f = vec![0; n];
        for j in i..=p.row(i) {
            f[ctx.residue(i, j)] += 1;
        }
        let mut g = vec![0; n];
        for r in i + 1..=p.column(i) {
            g[ctx.residue(r, i)] += 1;
        }
        top.push(f);
        bottom.push(g);
    }
    ColoredFPartition {
        modulus: n,
        top,
        bottom,
    }
}

/// Monomials of the row-piece factors `(1 + z·m)` with degree at most
/// `max_degree`, in `(k, i)` order. The piece of length `n·k + i + 1` starts
/// on the diagonal color `a` and runs through `a + i`.
pub fn h1_factors(ctx: &ColoringContext, max_degree: u32) -> Vec<Vec<u32>> {
    let n = ctx.modulus();
    let a = ctx.offset();
    let mut out = Vec::new();
    for k in 0.. {
        if n * k + 1 > max_degree as usize {
            break;
        }
        for i in 0..n {
            if n * k + i + 1 > max_degree as usize {
                break;
            }
            let mut e = vec![k as u32; n];
            for c in 0..=i {
                e[(a + c) % n] += 1;
            }
            out.push(e);
        }
    }
    out
}

/// Monomials of the column-piece factors `(1 + z⁻¹·m)` with degree at most
/// `max_degree`, in `(k, i)` order. The piece of length `n·k + n - 1 - i`
/// covers colors `a + i + 1, ..., a + n - 1` plus `k` full cycles; the
/// empty piece (`k = 0`, `i = n - 1`) is included.
pub fn h2_factors(ctx: &ColoringContext, max_degree: u32) -> Vec<Vec<u32>> {
    let n = ctx.modulus();
    let a = ctx.offset();
    let mut out = Vec::new();
    for k in 0.. {
        if n * k > max_degree as usize {
            break;
        }
        for i in 0..n {
            if n * k + n - 1 - i > max_degree as usize {
                continue;
            }
            let mut e = vec![k as u32; n];
            for c in i + 1..n {
                e[(a + c) % n] += 1;
            }
            out.push(e);
        }
    }
    out
}

pub fn h1_series(ctx: &ColoringContext, max_degree: u32, window: u32) -> ZLaurentSeries {
    h1_factors(ctx, max_degree).iter().fold(
        ZLaurentSeries::one(ctx.modulus(), max_degree, window),
        |acc, m| acc.mul_binomial(1, m, 1),
    )
}

pub fn h2_series(ctx: &ColoringContext, max_degree: u32, window: u32) -> ZLaurentSeries {
    h2_factors(ctx, max_degree).iter().fold(
        ZLaurentSeries::one(ctx.modulus(), max_degree, window),
        |acc, m| acc.mul_binomial(-1, m, 1),
    )
}

/// `Z_a` to degree `max_degree` as `[z^0] H_1·H_2`.
pub fn z_via_constant_term(ctx: &ColoringContext, max_degree: u32) -> MultiSeries {
    let window = max_degree + 1;
    let h1 = h1_series(ctx, max_degree, window);
    let h2 = h2_series(ctx, max_degree, window);
    h1.constant_term_of_product(&h2)
        .expect("both factors share parameters")
}

/// Partition numbers `P(0..=max_degree)` from the uncolored constant-term
/// identity, obtained by forgetting colors in the row generating functions
/// before extracting `[z^0]`.
pub fn partition_counts_via_constant_term(max_degree: u32) -> Vec<BigInt> {
    let ctx = ColoringContext::new(2, 0).expect("valid context");
    let window = max_degree + 1;
    let h1 = h1_series(&ctx, max_degree, window).specialize_uniform();
    let h2 = h2_series(&ctx, max_degree, window).specialize_uniform();
    h1.constant_term_of_product(&h2)
        .expect("both factors share parameters")
        .specialize_uniform()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{color_weight, enumerate_partitions, partitions_up_to, z_brute};
    use std::collections::HashSet;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ctx(n: usize, a: usize) -> ColoringContext {
        ColoringContext::new(n, a).unwrap()
    }

    #[test]
    fn frobenius_examples() {
        let e = to_frobenius(&Partition::empty());
        assert_eq!((e.rank(), e.top(), e.bottom()), (0, &[][..], &[][..]));
        let one = to_frobenius(&p(&[1]));
        assert_eq!((one.top(), one.bottom()), (&[0][..], &[0][..]));
        let nine = to_frobenius(&p(&[4, 3, 2]));
        assert_eq!((nine.top(), nine.bottom()), (&[2, 1][..], &[3, 1][..]));
        assert_eq!(nine.weight(), 9);
    }

    #[test]
    fn from_frobenius_examples() {
        let empty = FrobeniusCoordinates::new(vec![], vec![]).unwrap();
        assert_eq!(from_frobenius(&empty), Partition::empty());
        let one = FrobeniusCoordinates::new(vec![0], vec![0]).unwrap();
        assert_eq!(from_frobenius(&one), p(&[1]));
        assert!(matches!(
            FrobeniusCoordinates::new(vec![1, 1], vec![2, 0]),
            Err(Error::NotStrictlyDecreasing(_))
        ));
        assert!(matches!(
            FrobeniusCoordinates::new(vec![1], vec![2, 0]),
            Err(Error::RowLengthMismatch { .. })
        ));
    }

    #[test]
    fn frobenius_round_trip() {
        for y in partitions_up_to(18) {
            let fc = to_frobenius(&y);
            assert!(FrobeniusCoordinates::new(fc.top().to_vec(), fc.bottom().to_vec()).is_ok());
            assert_eq!(fc.weight(), y.weight());
            assert_eq!(from_frobenius(&fc), y);
        }
    }

    #[test]
    fn colored_fpartition_examples() {
        let cf = to_colored_fpartition(&p(&[4, 3, 2]), &ctx(3, 2));
        assert_eq!(cf.top(), &[vec![1, 1, 1], vec![1, 0, 1]]);
        assert_eq!(cf.bottom(), &[vec![1, 1, 1], vec![0, 1, 0]]);
        assert_eq!(
            to_colored_fpartition(&Partition::empty(), &ctx(2, 0)).rank(),
            0
        );
        let one = to_colored_fpartition(&p(&[1]), &ctx(2, 0));
        assert_eq!(one.top(), &[vec![1, 0]]);
        assert_eq!(one.bottom(), &[vec![0, 0]]);
    }

    #[test]
    fn colored_fpartition_bookkeeping_and_injectivity() {
        for n in 2..=4 {
            for a in 0..n {
                let c = ctx(n, a);
                let mut seen = HashSet::new();
                for y in partitions_up_to(14) {
                    let cf = to_colored_fpartition(&y, &c);
                    assert_eq!(cf.column_weight(), color_weight(&y, &c));
                    assert_eq!(cf.total_weight(), y.weight());
                    assert!(seen.insert(cf), "collision at {y}");
                }
            }
        }
    }

    #[test]
    fn h1_examples() {
        let c = ctx(2, 0);
        let h = h1_series(&c, 2, 3);
        let mut expected = ZLaurentSeries::one(2, 2, 3);
        expected
            .add_coefficient(
                1,
                &MultiSeries::from_terms(2, 2, [(vec![1, 0], 1), (vec![1, 1], 1)]),
            )
            .unwrap();
        // the z^2 q0^2 q1 term has degree 3 and is truncated away
        assert_eq!(h, expected);

        let h3 = h1_series(&c, 3, 4);
        assert_eq!(h3.coefficient(2), MultiSeries::monomial(2, 3, &[2, 1], 1));
        assert_eq!(
            h3.coefficient(1),
            MultiSeries::from_terms(2, 3, [(vec![1, 0], 1), (vec![1, 1], 1), (vec![2, 1], 1)])
        );
        assert_eq!(h1_series(&c, 0, 1), ZLaurentSeries::one(2, 0, 1));
    }

    #[test]
    fn h2_examples() {
        let c = ctx(2, 0);
        let h = h2_series(&c, 1, 2);
        assert_eq!(h.coefficient(0), MultiSeries::one(2, 1));
        assert_eq!(
            h.coefficient(-1),
            MultiSeries::from_terms(2, 1, [(vec![0, 0], 1), (vec![0, 1], 1)])
        );
        assert_eq!(h.coefficient(-2), MultiSeries::monomial(2, 1, &[0, 1], 1));
        assert_eq!(h.iter().count(), 3);

        let h0 = h2_series(&c, 0, 1);
        let mut expected = ZLaurentSeries::one(2, 0, 1);
        expected
            .add_coefficient(-1, &MultiSeries::one(2, 0))
            .unwrap();
        assert_eq!(h0, expected);
        assert_eq!(
            h2_series(&ctx(3, 1), 5, 6).coefficient(-1).constant_term(),
            BigInt::from(1)
        );
    }

    #[test]
    fn factor_counts() {
        for n in 2..=5 {
            for a in 0..n {
                let c = ctx(n, a);
                for k in 0..=12u32 {
                    let expected_top = (1..=k as usize).count();
                    assert_eq!(h1_factors(&c, k).len(), expected_top);
                    assert_eq!(h2_factors(&c, k).len(), k as usize + 1);
                    for m in h1_factors(&c, k).iter().chain(&h2_factors(&c, k)) {
                        assert!(m.iter().sum::<u32>() <= k);
                    }
                    let degs: HashSet<u32> =
                        h1_factors(&c, k).iter().map(|m| m.iter().sum()).collect();
                    assert_eq!(degs.len(), k as usize, "one row piece per length");
                }
            }
        }
    }

    /// Strictly decreasing lists of positive lengths, colored from the
    /// diagonal color `a` rightwards.
    fn top_rows_brute(c: &ColoringContext, k: u32) -> ZLaurentSeries {
        let n = c.modulus();
        let mut out = ZLaurentSeries::zero(n, k, k + 1);
        let lengths: Vec<usize> = (1..=k as usize).collect();
        for mask in 0u32..(1 << lengths.len()) {
            let chosen: Vec<usize> = lengths
                .iter()
                .enumerate()
                .filter(|(b, _)| mask & (1 << b) != 0)
                .map(|(_, &l)| l)
                .collect();
            if chosen.iter().sum::<usize>() > k as usize {
                continue;
            }
            let mut e = vec![0u32; n];
            for &l in &chosen {
                for step in 0..l {
                    e[(c.offset() + step) % n] += 1;
                }
            }
            out.add_coefficient(chosen.len() as i64, &MultiSeries::monomial(n, k, &e, 1))
                .unwrap();
        }
        out
    }

    #[test]
    fn h1_counts_top_rows() {
        for (n, a) in [(2, 0), (2, 1), (3, 2), (4, 1)] {
            let c = ctx(n, a);
            assert_eq!(h1_series(&c, 9, 10), top_rows_brute(&c, 9), "n={n} a={a}");
        }
    }

    #[test]
    fn constant_term_examples() {
        let c = ctx(2, 0);
        let z = z_via_constant_term(&c, 3);
        assert_eq!(
            z,
            MultiSeries::from_terms(
                2,
                3,
                [
                    (vec![0, 0], 1),
                    (vec![1, 0], 1),
                    (vec![1, 1], 2),
                    (vec![2, 1], 2),
                    (vec![1, 2], 1)
                ]
            )
        );
        for n in 2..=5 {
            assert_eq!(
                z_via_constant_term(&ctx(n, n - 1), 0),
                MultiSeries::one(n, 0)
            );
        }
        assert_eq!(z_via_constant_term(&ctx(3, 2), 6), z_brute(&ctx(3, 2), 6));
    }

    #[test]
    fn full_product_agrees_with_constant_term_shortcut() {
        for (n, a, k) in [(2, 0, 4), (3, 1, 4)] {
            let c = ctx(n, a);
            let prod = h1_series(&c, k, k + 1)
                .product(&h2_series(&c, k, k + 1))
                .unwrap();
            assert_eq!(prod.constant_term(), z_via_constant_term(&c, k));
            assert_eq!(prod.constant_term(), z_brute(&c, k));
        }
    }

    #[test]
    fn uncolored_shadow_counts_partitions() {
        let counts = partition_counts_via_constant_term(15);
        for (k, c) in counts.iter().enumerate() {
            assert_eq!(*c, BigInt::from(enumerate_partitions(k).len()), "P({k})");
        }
    }
}
