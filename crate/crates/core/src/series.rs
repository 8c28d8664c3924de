//! Exact truncated power series in `n` commuting variables, and Laurent
//! polynomials in an auxiliary variable `z` with such series as coefficients.
//!
//! Truncation is by total degree: a term `q_0^{e_0} ... q_{n-1}^{e_{n-1}}`
//! survives iff `e_0 + ... + e_{n-1} <= max_degree`. Coefficients are
//! arbitrary precision signed integers and zero coefficients are never stored.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector of a monomial.
///
/// Ordered graded-lexicographically: lower total degree first, and within a
/// degree, larger exponents on earlier variables first, so `q_0` precedes
/// `q_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Exponents(Vec<u32>);

impl Exponents {
    pub fn new(exps: Vec<u32>) -> Self {
        Exponents(exps)
    }

    pub fn zero(num_vars: usize) -> Self {
        Exponents(vec![0; num_vars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    fn plus(&self, other: &Exponents) -> Exponents {
        Exponents(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Truncated formal power series in `num_vars` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiSeries {
    num_vars: usize,
    max_degree: u32,
    terms: BTreeMap<Exponents, BigInt>,
}

impl MultiSeries {
    pub fn zero(num_vars: usize, max_degree: u32) -> Self {
        MultiSeries {
            num_vars,
            max_degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(num_vars: usize, max_degree: u32) -> Self {
        Self::monomial(num_vars, max_degree, &vec![0; num_vars], 1)
    }

    /// The single term `coeff * q^exps`, or zero if it lies above the truncation.
    pub fn monomial(
        num_vars: usize,
        max_degree: u32,
        exps: &[u32],
        coeff: impl Into<BigInt>,
    ) -> Self {
        let mut s = Self::zero(num_vars, max_degree);
        s.add_term(exps, coeff.into());
        s
    }

    /// Builds a series from `(exponents, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(num_vars: usize, max_degree: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, C)>,
        C: Into<BigInt>,
    {
        let mut s = Self::zero(num_vars, max_degree);
        for (e, c) in terms {
            s.add_term(&e, c.into());
        }
        s
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// Number of nonzero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff * q^exps` in place. Terms above the truncation are ignored.
    ///
    /// Panics if `exps` does not have one entry per variable.
    pub fn add_term(&mut self, exps: &[u32], coeff: BigInt) {
        assert_eq!(
            exps.len(),
            self.num_vars,
            "exponent vector has wrong length"
        );
        let key = Exponents(exps.to_vec());
        self.accumulate(key, coeff);
    }

    fn accumulate(&mut self, key: Exponents, coeff: BigInt) {
        if coeff.is_zero() || key.degree() > self.max_degree {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms
            .get(&Exponents(exps.to_vec()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&vec![0; self.num_vars])
    }

    /// Nonzero terms in graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn check_compatible(&self, other: &MultiSeries) -> Result<()> {
        if self.num_vars != other.num_vars || self.max_degree != other.max_degree {
            return Err(Error::Mismatch(format!(
                "(n={}, K={}) vs (n={}, K={})",
                self.num_vars, self.max_degree, other.num_vars, other.max_degree
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &MultiSeries) -> Result<MultiSeries> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn difference(&self, other: &MultiSeries) -> Result<MultiSeries> {
        self.sum(&other.negate())
    }

    pub fn negate(&self) -> MultiSeries {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, factor: &BigInt) -> MultiSeries {
        let mut out = MultiSeries::zero(self.num_vars, self.max_degree);
        if factor.is_zero() {
            return out;
        }
        out.terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c * factor))
            .collect();
        out
    }

    /// Truncated Cauchy product.
    pub fn product(&self, other: &MultiSeries) -> Result<MultiSeries> {
        self.check_compatible(other)?;
        let mut out = MultiSeries::zero(self.num_vars, self.max_degree);
        for (ea, ca) in &self.terms {
            let room = self.max_degree - ea.degree();
            for (eb, cb) in &other.terms {
                // terms are sorted by degree, nothing further fits
                if eb.degree() > room {
                    break;
                }
                out.accumulate(ea.plus(eb), ca * cb);
            }
        }
        Ok(out)
    }

    /// `self * (1 + coeff * q^exps)`, the workhorse for building products.
    pub fn mul_binomial(&self, exps: &[u32], coeff: i64) -> MultiSeries {
        let shift = Exponents(exps.to_vec());
        let mut out = self.clone();
        if coeff == 0 || shift.degree() > self.max_degree {
            return out;
        }
        let c = BigInt::from(coeff);
        let room = self.max_degree - shift.degree();
        for (e, v) in &self.terms {
            if e.degree() > room {
                break;
            }
            out.accumulate(e.plus(&shift), v * &c);
        }
        out
    }

    /// Multiplicative inverse, solved degree by degree. The constant term
    /// must be `+1` or `-1`.
    pub fn inverse(&self) -> Result<MultiSeries> {
        let c0 = self.constant_term();
        if !(c0.abs().is_one()) {
            return Err(Error::NonUnitConstant(c0.to_string()));
        }
        let k = self.max_degree as usize;
        // homogeneous components of the result, by degree
        let mut parts: Vec<BTreeMap<Exponents, BigInt>> = vec![BTreeMap::new(); k + 1];
        parts[0].insert(Exponents::zero(self.num_vars), c0.clone());
        for d in 1..=k {
            let mut acc = MultiSeries::zero(self.num_vars, self.max_degree);
            for (ea, ca) in &self.terms {
                let da = ea.degree() as usize;
                if da == 0 {
                    continue;
                }
                if da > d {
                    break;
                }
                for (eb, cb) in &parts[d - da] {
                    acc.accumulate(ea.plus(eb), ca * cb);
                }
            }
            // b_d = -c0^{-1} * acc, and c0^{-1} = c0 for units
            let factor = -&c0;
            parts[d] = acc
                .terms
                .into_iter()
                .map(|(e, c)| (e, c * &factor))
                .collect();
        }
        let mut out = MultiSeries::zero(self.num_vars, self.max_degree);
        out.terms = parts.into_iter().flatten().collect();
        Ok(out)
    }

    pub fn pow(&self, exponent: u32) -> MultiSeries {
        let mut out = MultiSeries::one(self.num_vars, self.max_degree);
        for _ in 0..exponent {
            out = out.product(self).expect("same parameters");
        }
        out
    }

    /// Substitutes `q_c := t` for every variable and returns the coefficients
    /// of `t^0, ..., t^K`.
    pub fn specialize_uniform(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.max_degree as usize + 1];
        for (e, c) in &self.terms {
            out[e.degree() as usize] += c;
        }
        out
    }

    /// Renames variable `c` to `target(c)`. `target` must be a permutation.
    pub fn relabel(&self, target: impl Fn(usize) -> usize) -> MultiSeries {
        let mut out = MultiSeries::zero(self.num_vars, self.max_degree);
        for (e, c) in &self.terms {
            let mut exps = vec![0; self.num_vars];
            for (var, &x) in e.as_slice().iter().enumerate() {
                exps[target(var)] += x;
            }
            out.accumulate(Exponents(exps), c.clone());
        }
        out
    }

    /// Re-truncates to a lower degree.
    pub fn truncate(&self, max_degree: u32) -> MultiSeries {
        let mut out = MultiSeries::zero(self.num_vars, max_degree.min(self.max_degree));
        for (e, c) in &self.terms {
            out.accumulate(e.clone(), c.clone());
        }
        out
    }

    pub fn to_json(&self) -> String {
        let doc = SeriesJson {
            n: self.num_vars,
            max_degree: self.max_degree,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    exponents: e.0.clone(),
                    coefficient: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("series json is always serializable")
    }

    pub fn from_json(text: &str) -> Result<MultiSeries> {
        let doc: SeriesJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let mut out = MultiSeries::zero(doc.n, doc.max_degree);
        for t in doc.terms {
            if t.exponents.len() != doc.n {
                return Err(Error::Json(format!(
                    "term {:?} has {} exponents, expected {}",
                    t.exponents,
                    t.exponents.len(),
                    doc.n
                )));
            }
            let degree: u32 = t.exponents.iter().sum();
            if degree > doc.max_degree {
                return Err(Error::Json(format!(
                    "term {:?} exceeds max_degree",
                    t.exponents
                )));
            }
            let c: BigInt = t
                .coefficient
                .parse()
                .map_err(|_| Error::Json(format!("bad coefficient {:?}", t.coefficient)))?;
            out.add_term(&t.exponents, c);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    n: usize,
    max_degree: u32,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exponents: Vec<u32>,
    coefficient: String,
}

impl fmt::Display for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if idx == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            let vars: Vec<String> = e
                .as_slice()
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(v, &x)| {
                    if x == 1 {
                        format!("q{v}")
                    } else {
                        format!("q{v}^{x}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Laurent polynomial in `z` whose coefficients are [`MultiSeries`] sharing
/// one truncation. Only `z`-exponents in `[-window, window]` are kept.
///
/// With `window = K + 1` nothing relevant is lost for the row generating
/// functions used here: every factor `(1 + z^{±1} m)` carries a monomial of
/// degree at least one, except a single `(1 + z^{-1})`, so a surviving term
/// with `z^d` has q-degree at least `|d| - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZLaurentSeries {
    num_vars: usize,
    max_degree: u32,
    window: u32,
    coeffs: BTreeMap<i64, MultiSeries>,
}

impl ZLaurentSeries {
    pub fn zero(num_vars: usize, max_degree: u32, window: u32) -> Self {
        ZLaurentSeries {
            num_vars,
            max_degree,
            window,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(num_vars: usize, max_degree: u32, window: u32) -> Self {
        let mut s = Self::zero(num_vars, max_degree, window);
        s.coeffs.insert(0, MultiSeries::one(num_vars, max_degree));
        s
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn window(&self) -> u32 {
        self.window
    }

    fn in_window(&self, d: i64) -> bool {
        d.unsigned_abs() <= u64::from(self.window)
    }

    /// Adds `z^d * s` in place; ignored outside the window.
    pub fn add_coefficient(&mut self, d: i64, s: &MultiSeries) -> Result<()> {
        if s.num_vars != self.num_vars || s.max_degree != self.max_degree {
            return Err(Error::Mismatch(format!(
                "coefficient (n={}, K={}) in laurent series (n={}, K={})",
                s.num_vars, s.max_degree, self.num_vars, self.max_degree
            )));
        }
        if !self.in_window(d) || s.is_zero() {
            return Ok(());
        }
        let merged = match self.coeffs.remove(&d) {
            Some(prev) => prev.sum(s)?,
            None => s.clone(),
        };
        if !merged.is_zero() {
            self.coeffs.insert(d, merged);
        }
        Ok(())
    }

    pub fn coefficient(&self, d: i64) -> MultiSeries {
        self.coeffs
            .get(&d)
            .cloned()
            .unwrap_or_else(|| MultiSeries::zero(self.num_vars, self.max_degree))
    }

    /// The `[z^0]` extraction.
    pub fn constant_term(&self) -> MultiSeries {
        self.coefficient(0)
    }

    /// Nonzero `z`-coefficients in increasing `z`-degree.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &MultiSeries)> {
        self.coeffs.iter().map(|(&d, s)| (d, s))
    }

    fn check_compatible(&self, other: &ZLaurentSeries) -> Result<()> {
        if self.num_vars != other.num_vars
            || self.max_degree != other.max_degree
            || self.window != other.window
        {
            return Err(Error::Mismatch(format!(
                "(n={}, K={}, W={}) vs (n={}, K={}, W={})",
                self.num_vars,
                self.max_degree,
                self.window,
                other.num_vars,
                other.max_degree,
                other.window
            )));
        }
        Ok(())
    }

    /// Full Laurent convolution; terms leaving the window are dropped.
    pub fn product(&self, other: &ZLaurentSeries) -> Result<ZLaurentSeries> {
        self.check_compatible(other)?;
        let mut out = ZLaurentSeries::zero(self.num_vars, self.max_degree, self.window);
        for (&da, sa) in &self.coeffs {
            for (&db, sb) in &other.coeffs {
                if out.in_window(da + db) {
                    out.add_coefficient(da + db, &sa.product(sb)?)?;
                }
            }
        }
        Ok(out)
    }

    /// `[z^0](self * other)` without forming the other coefficients.
    pub fn constant_term_of_product(&self, other: &ZLaurentSeries) -> Result<MultiSeries> {
        self.check_compatible(other)?;
        let mut out = MultiSeries::zero(self.num_vars, self.max_degree);
        for (&d, sa) in &self.coeffs {
            if let Some(sb) = other.coeffs.get(&-d) {
                out = out.sum(&sa.product(sb)?)?;
            }
        }
        Ok(out)
    }

    /// `self * (1 + coeff * z^z_exp * q^exps)`.
    pub fn mul_binomial(&self, z_exp: i64, exps: &[u32], coeff: i64) -> ZLaurentSeries {
        let mut out = self.clone();
        let factor = MultiSeries::monomial(self.num_vars, self.max_degree, exps, coeff);
        if factor.is_zero() {
            return out;
        }
        for (&d, s) in &self.coeffs {
            let shifted = s.product(&factor).expect("same parameters");
            out.add_coefficient(d + z_exp, &shifted)
                .expect("same parameters");
        }
        out
    }

    /// Multiplies every coefficient by a `z`-free series.
    pub fn scale_by(&self, s: &MultiSeries) -> Result<ZLaurentSeries> {
        let mut out = ZLaurentSeries::zero(self.num_vars, self.max_degree, self.window);
        for (&d, c) in &self.coeffs {
            out.add_coefficient(d, &c.product(s)?)?;
        }
        Ok(out)
    }

    /// Applies `q_c := t` to every coefficient, giving a one-variable series.
    pub fn specialize_uniform(&self) -> ZLaurentSeries {
        let mut out = ZLaurentSeries::zero(1, self.max_degree, self.window);
        for (&d, s) in &self.coeffs {
            let uni = MultiSeries::from_terms(
                1,
                self.max_degree,
                s.specialize_uniform()
                    .into_iter()
                    .enumerate()
                    .map(|(k, c)| (vec![k as u32], c)),
            );
            out.add_coefficient(d, &uni).expect("same parameters");
        }
        out
    }

    /// Substitutes `z := 1`.
    pub fn at_z_one(&self) -> MultiSeries {
        self.coeffs.values().fold(
            MultiSeries::zero(self.num_vars, self.max_degree),
            |acc, s| acc.sum(s).expect("same parameters"),
        )
    }
}
