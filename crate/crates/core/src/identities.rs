//! Closed forms for `Z_a`: the Cartan lattice sum, the charge-vector sum,
//! the two Jacobi triple product normalizations, and the infinite products
//! for `n = 2` and `n = 3`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partitions::ColoringContext;
use crate::series::{MultiSeries, ZLaurentSeries};

/// Cartan matrix of type `A_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// `mᵀ C m`.
    pub fn quadratic_form(&self, m: &[i64]) -> i64 {
        assert_eq!(m.len(), self.rank());
        self.entries
            .iter()
            .zip(m)
            .map(|(row, &mi)| mi * row.iter().zip(m).map(|(c, &mj)| c * mj).sum::<i64>())
            .sum()
    }
}

pub fn cartan_matrix(n: usize) -> Result<CartanMatrix> {
    if n < 2 {
        return Err(Error::InvalidModulus(n));
    }
    let r = n - 1;
    let entries = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect();
    Ok(CartanMatrix { entries })
}

/// Integers `j_0, ..., j_{n-1}` summing to zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChargeVector(Vec<i64>);

impl ChargeVector {
    pub fn new(j: Vec<i64>) -> Result<Self> {
        let s: i64 = j.iter().sum();
        if s != 0 {
            return Err(Error::ChargeSum(s));
        }
        Ok(ChargeVector(j))
    }

    pub fn zero(n: usize) -> Self {
        ChargeVector(vec![0; n])
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A point `m ∈ Z^{n-1}` of the root lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(m: Vec<i64>) -> Self {
        LatticePoint(m)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

/// `m_k = -(j_0 + ... + j_{k-1})` for `k = 1..n-1`.
pub fn j_to_m(j: &[i64]) -> Result<LatticePoint> {
    let j = ChargeVector::new(j.to_vec())?;
    let mut acc = 0;
    let m = j.0[..j.len() - 1]
        .iter()
        .map(|x| {
            acc -= x;
            acc
        })
        .collect();
    Ok(LatticePoint(m))
}

/// Inverse of [`j_to_m`]: `j_0 = -m_1`, `j_i = m_i - m_{i+1}`, `j_{n-1} = m_{n-1}`.
pub fn m_to_j(m: &LatticePoint) -> ChargeVector {
    let mut padded = vec![0];
    padded.extend_from_slice(&m.0);
    padded.push(0);
    ChargeVector(padded.windows(2).map(|w| w[0] - w[1]).collect())
}

fn binom2_plus(j: i64) -> i64 {
    // binom(j + 1, 2), valid for negative j too
    (j + 1) * j / 2
}

/// Evaluates `Σ binom(j_i + 1, 2)` and `½ mᵀ C m` independently and compares.
pub fn quadratic_identity_check(j: &ChargeVector) -> bool {
    let lhs: i64 = j.0.iter().map(|&x| binom2_plus(x)).sum();
    let m = j_to_m(&j.0).expect("charge vector sums to zero");
    let form = cartan_matrix(j.len())
        .expect("at least two charges")
        .quadratic_form(&m.0);
    form % 2 == 0 && lhs == form / 2
}

/// Largest value of `½ mᵀ C m` that can still contribute below degree
/// `max_degree`.
///
/// A lattice point contributes a monomial of total degree
/// `n·Q + Σ m_i` with `Q = ½ mᵀ C m = ½ Σ j_i²`. Since
/// `|m_k| <= Σ |j_i| <= sqrt(2nQ)`, the degree is at least
/// `n·Q - (n - 1)·sqrt(2nQ)`, which is increasing in `Q` past its minimum.
fn max_quadratic(n: usize, max_degree: u32) -> i64 {
    let n = n as i64;
    let lower = |q: i64| n * q - (n - 1) * ceil_sqrt(2 * n * q);
    // past this point lower() only grows, even with the rounded square root
    let settled = ((n - 1) * (n - 1)) / n + 2 * n;
    let mut best = 0;
    let mut q = 0;
    loop {
        if lower(q) <= i64::from(max_degree) {
            best = q;
        } else if q > settled {
            return best;
        }
        q += 1;
    }
}

fn ceil_sqrt(x: i64) -> i64 {
    let mut r = (x as f64).sqrt() as i64;
    while r * r < x {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= x {
        r -= 1;
    }
    r
}

fn floor_sqrt(x: i64) -> i64 {
    let mut r = (x as f64).sqrt() as i64;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// Calls `visit` on every integer vector of length `dim` with entries in
/// `[-bound, bound]`.
fn for_each_in_box(dim: usize, bound: i64, mut visit: impl FnMut(&[i64])) {
    let mut v = vec![-bound; dim];
    loop {
        visit(&v);
        let mut idx = 0;
        loop {
            if idx == dim {
                return;
            }
            if v[idx] < bound {
                v[idx] += 1;
                break;
            }
            v[idx] = -bound;
            idx += 1;
        }
    }
}

/// Exponent vector of `q_{1+a}^{m_1} ⋯ q_{n-1+a}^{m_{n-1}} · q^{Q}`.
///
/// Panics if an exponent is negative; every such monomial is the color
/// weight of an `n`-core.
pub fn lattice_monomial(
    ctx: &ColoringContext,
    m: &LatticePoint,
    cartan: &CartanMatrix,
) -> Vec<u32> {
    let n = ctx.modulus();
    let form = cartan.quadratic_form(&m.0);
    assert!(form % 2 == 0, "mᵀCm = {form} is odd for m = {:?}", m.0);
    let q = form / 2;
    let mut e = vec![q; n];
    for (i, &mi) in m.0.iter().enumerate() {
        e[(ctx.offset() + i + 1) % n] += mi;
    }
    e.iter()
        .map(|&x| {
            assert!(x >= 0, "negative exponent {x} at m = {:?}", m.0);
            x as u32
        })
        .collect()
}

/// `Σ_{m ∈ Z^{n-1}} q_{1+a}^{m_1} ⋯ q_{n-1+a}^{m_{n-1}} (q^{1/2})^{mᵀCm}`,
/// truncated.
pub fn theta_lattice_sum(ctx: &ColoringContext, max_degree: u32) -> MultiSeries {
    let n = ctx.modulus();
    let cartan = cartan_matrix(n).expect("modulus checked by context");
    let q_max = max_quadratic(n, max_degree);
    let radius = floor_sqrt(2 * n as i64 * q_max);
    let mut out = MultiSeries::zero(n, max_degree);
    for_each_in_box(n - 1, radius, |m| {
        if cartan.quadratic_form(m) > 2 * q_max {
            return;
        }
        let e = lattice_monomial(ctx, &LatticePoint(m.to_vec()), &cartan);
        out.add_term(&e, 1.into());
    });
    out
}

/// `(∏_{m >= 1} (1 - q^m))^{-power}` with `q = q_0 ⋯ q_{n-1}`.
pub fn euler_factor(num_vars: usize, max_degree: u32, power: u32) -> MultiSeries {
    let mut prod = MultiSeries::one(num_vars, max_degree);
    for m in 1..=max_degree {
        prod = prod.mul_binomial(&vec![m; num_vars], -1);
    }
    prod.pow(power).inverse().expect("constant term is 1")
}

/// `Z_a` from the closed formula: Euler factor to the `n`-th power times the
/// Cartan lattice sum.
pub fn theta_closed_form(ctx: &ColoringContext, max_degree: u32) -> MultiSeries {
    euler_factor(ctx.modulus(), max_degree, ctx.modulus() as u32)
        .product(&theta_lattice_sum(ctx, max_degree))
        .expect("same parameters")
}

/// The lattice sum written over charge vectors:
/// `Σ_{Σ j_i = 0} q_{1+a}^{-j_0} ⋯ q_{n-1+a}^{-j_0-⋯-j_{n-2}} q^{Σ binom(j_i+1, 2)}`.
pub fn core_sum(ctx: &ColoringContext, max_degree: u32) -> MultiSeries {
    let n = ctx.modulus();
    let q_max = max_quadratic(n, max_degree);
    let bound = floor_sqrt(2 * q_max);
    let mut out = MultiSeries::zero(n, max_degree);
    for_each_in_box(n - 1, bound, |head| {
        let last = -head.iter().sum::<i64>();
        let j: Vec<i64> = head.iter().copied().chain([last]).collect();
        let q: i64 = j.iter().map(|&x| binom2_plus(x)).sum();
        if q > q_max {
            return;
        }
        let mut e = vec![q; n];
        let mut partial = 0;
        for i in 1..n {
            partial += j[i - 1];
            e[(ctx.offset() + i) % n] -= partial;
        }
        let e: Vec<u32> = e
            .into_iter()
            .map(|x| u32::try_from(x).expect("core monomials have non-negative exponents"))
            .collect();
        out.add_term(&e, 1.into());
    });
    out
}

/// Both sides of `∏ (1 + z q^m)(1 + z⁻¹ q^{m-1}) = ∏ (1 - q^m)⁻¹ Σ z^j q^{binom(j+1,2)}`.
pub fn jacobi_first_form(max_degree: u32) -> (ZLaurentSeries, ZLaurentSeries) {
    let window = max_degree + 1;
    let mut lhs = ZLaurentSeries::one(1, max_degree, window);
    for m in 1..=max_degree + 1 {
        lhs = lhs.mul_binomial(1, &[m], 1).mul_binomial(-1, &[m - 1], 1);
    }
    let mut theta = ZLaurentSeries::zero(1, max_degree, window);
    let w = i64::from(window);
    for j in -w..=w {
        let e = binom2_plus(j);
        if e <= i64::from(max_degree) {
            theta
                .add_coefficient(j, &MultiSeries::monomial(1, max_degree, &[e as u32], 1))
                .expect("same parameters");
        }
    }
    let rhs = theta
        .scale_by(&euler_factor(1, max_degree, 1))
        .expect("same parameters");
    (lhs, rhs)
}

/// Both sides of `∏ (1 - q^{2m})(1 + z q^{2m-1})(1 + z⁻¹ q^{2m-1}) = Σ z^j q^{j²}`.
pub fn jacobi_second_form(max_degree: u32) -> (ZLaurentSeries, ZLaurentSeries) {
    let window = max_degree + 1;
    let mut lhs = ZLaurentSeries::one(1, max_degree, window);
    for m in 1..=max_degree {
        lhs = lhs
            .mul_binomial(0, &[2 * m], -1)
            .mul_binomial(1, &[2 * m - 1], 1)
            .mul_binomial(-1, &[2 * m - 1], 1);
    }
    let mut rhs = ZLaurentSeries::zero(1, max_degree, window);
    let w = i64::from(window);
    for j in -w..=w {
        if j * j <= i64::from(max_degree) {
            rhs.add_coefficient(
                j,
                &MultiSeries::monomial(1, max_degree, &[(j * j) as u32], 1),
            )
            .expect("same parameters");
        }
    }
    (lhs, rhs)
}

/// Checks both triple product normalizations coefficient by coefficient.
pub fn jacobi_triple_product_check(max_degree: u32) -> bool {
    let (l1, r1) = jacobi_first_form(max_degree);
    let (l2, r2) = jacobi_second_form(max_degree);
    l1 == r1 && l2 == r2
}

fn q_power(num_vars: usize, k: u32) -> Vec<u32> {
    vec![k; num_vars]
}

fn plus(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `∏_{m >= 1} (1 + q_1 q^{2m-1})(1 + q_0 q^{2m-2}) / ((1 - q^m)(1 - q^{2m-1}))`,
/// which equals `Z_0` for two colors.
pub fn product_n2(max_degree: u32) -> MultiSeries {
    let mut num = MultiSeries::one(2, max_degree);
    let mut den = MultiSeries::one(2, max_degree);
    for m in 1..=max_degree.max(1) {
        num = num
            .mul_binomial(&plus(&[0, 1], &q_power(2, 2 * m - 1)), 1)
            .mul_binomial(&plus(&[1, 0], &q_power(2, 2 * m - 2)), 1);
        den = den
            .mul_binomial(&q_power(2, m), -1)
            .mul_binomial(&q_power(2, 2 * m - 1), -1);
    }
    num.product(&den.inverse().expect("constant term is 1"))
        .expect("same parameters")
}

/// The two-summand product expression that equals `Z_0` for three colors.
pub fn product_n3(max_degree: u32) -> MultiSeries {
    let q = |k: u32| q_power(3, k);
    let mut first = MultiSeries::one(3, max_degree);
    let mut second = MultiSeries::one(3, max_degree);
    let mut den = MultiSeries::one(3, max_degree);
    for m in 1..=max_degree.max(1) {
        first = first
            .mul_binomial(&q(6 * m), -1)
            .mul_binomial(&plus(&[0, 1, 2], &q(6 * m - 3)), 1)
            .mul_binomial(&plus(&[2, 1, 0], &q(6 * m - 5)), 1)
            .mul_binomial(&plus(&[0, 1, 0], &q(2 * m - 1)), 1)
            .mul_binomial(&plus(&[1, 0, 1], &q(2 * m - 2)), 1);
        second = second
            .mul_binomial(&q(6 * m), -1)
            .mul_binomial(&plus(&[0, 1, 2], &q(6 * m - 6)), 1)
            .mul_binomial(&plus(&[2, 1, 0], &q(6 * m - 1)), 1)
            .mul_binomial(&plus(&[0, 1, 0], &q(2 * m - 2)), 1)
            .mul_binomial(&plus(&[1, 0, 1], &q(2 * m - 1)), 1);
        den = den
            .mul_binomial(&q(m), -1)
            .mul_binomial(&q(m), -1)
            .mul_binomial(&q(2 * m - 1), -1);
    }
    let q0 = MultiSeries::monomial(3, max_degree, &[1, 0, 0], 1);
    let total = first
        .sum(&q0.product(&second).expect("same parameters"))
        .expect("same parameters");
    total
        .product(&den.inverse().expect("constant term is 1"))
        .expect("same parameters")
}

/// `Σ_j q^{j²}` as a coefficient list, for the `z := 1` specialization.
pub fn theta_squares(max_degree: u32) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); max_degree as usize + 1];
    let mut j: i64 = -(max_degree as i64);
    while j <= max_degree as i64 {
        if j * j <= max_degree as i64 {
            out[(j * j) as usize] += 1;
        }
        j += 1;
    }
    out
}
