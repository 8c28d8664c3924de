//! Cross-checks run by `colored-partitions verify`.
//!
//! Each suite evaluates a family of identities at the requested sizes and
//! reports one [`CheckOutcome`] per identity and parameter set.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::abacus::{core_series_brute, decompose, from_core_quotient};
use crate::error::{Error, Result};
use crate::frobenius::{
    from_frobenius, partition_counts_via_constant_term, to_colored_fpartition, to_frobenius,
    z_via_constant_term,
};
use crate::identities::{
    core_sum, jacobi_first_form, jacobi_second_form, product_n2, product_n3, theta_closed_form,
};
use crate::partitions::{
    color_weight, enumerate_partitions, partitions_up_to, z_brute, ColoringContext,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Theorem1,
    Products,
    Jacobi,
    CoreQuotient,
    Frobenius,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [
        Suite::Theorem1,
        Suite::Products,
        Suite::Jacobi,
        Suite::CoreQuotient,
        Suite::Frobenius,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Products => "products",
            Suite::Jacobi => "jacobi",
            Suite::CoreQuotient => "core-quotient",
            Suite::Frobenius => "frobenius",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                format!("unknown suite {s:?}; expected theorem1, products, jacobi, core-quotient, frobenius or all")
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub n_max: usize,
    pub max_degree: u32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_max: 3,
            max_degree: 8,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub identity: String,
    pub params: String,
    pub passed: bool,
    pub elapsed: Duration,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:<14} {:<44} {:<18} {:>9.1} ms",
            if self.passed { "PASS" } else { "FAIL" },
            self.suite.name(),
            self.identity,
            self.params,
            self.elapsed.as_secs_f64() * 1e3
        )
    }
}

struct Recorder {
    suite: Suite,
    out: Vec<CheckOutcome>,
}

impl Recorder {
    fn check(&mut self, identity: &str, params: String, f: impl FnOnce() -> bool) {
        let start = Instant::now();
        let passed = f();
        self.out.push(CheckOutcome {
            suite: self.suite,
            identity: identity.to_string(),
            params,
            passed,
            elapsed: start.elapsed(),
        });
    }
}

fn contexts(n_max: usize) -> impl Iterator<Item = ColoringContext> {
    (2..=n_max).flat_map(|n| (0..n).map(move |a| ColoringContext::new(n, a).expect("valid")))
}

pub fn run_suite(suite: Suite, opts: VerifyOptions) -> Result<Vec<CheckOutcome>> {
    if opts.n_max < 2 {
        return Err(Error::InvalidModulus(opts.n_max));
    }
    if suite == Suite::All {
        let mut all = Vec::new();
        for s in Suite::EACH {
            all.extend(run_suite(s, opts)?);
        }
        return Ok(all);
    }
    let k = opts.max_degree;
    let mut rec = Recorder {
        suite,
        out: Vec::new(),
    };
    match suite {
        Suite::Theorem1 => {
            for ctx in contexts(opts.n_max) {
                let params = format!("n={} a={} K={k}", ctx.modulus(), ctx.offset());
                rec.check("enumeration = constant term = lattice sum", params, || {
                    let brute = z_brute(&ctx, k);
                    brute == z_via_constant_term(&ctx, k) && brute == theta_closed_form(&ctx, k)
                });
            }
        }
        Suite::Products => {
            rec.check(
                "two-color product = enumeration",
                format!("n=2 a=0 K={k}"),
                || product_n2(k) == z_brute(&ColoringContext::new(2, 0).expect("valid"), k),
            );
            rec.check(
                "three-color product = enumeration",
                format!("n=3 a=0 K={k}"),
                || product_n3(k) == z_brute(&ColoringContext::new(3, 0).expect("valid"), k),
            );
        }
        Suite::Jacobi => {
            let k = k.max(1);
            rec.check("triple product, binomial form", format!("K={k}"), || {
                let (l, r) = jacobi_first_form(k);
                l == r
            });
            rec.check("triple product, square form", format!("K={k}"), || {
                let (l, r) = jacobi_second_form(k);
                l == r
            });
        }
        Suite::CoreQuotient => {
            for n in 2..=opts.n_max {
                rec.check(
                    "core/quotient round trip and weight",
                    format!("n={n} |p|<={k}"),
                    || {
                        partitions_up_to(k as usize).all(|p| {
                            let cq = decompose(&p, n);
                            p.weight() == cq.core.weight() + n * cq.quotient_weight()
                                && from_core_quotient(&cq).as_ref() == Ok(&p)
                        })
                    },
                );
            }
            for ctx in contexts(opts.n_max) {
                let n = ctx.modulus();
                let params = format!("n={n} a={} K={k}", ctx.offset());
                rec.check("strip removal is color balanced", params.clone(), || {
                    partitions_up_to(k as usize).all(|p| {
                        let cq = decompose(&p, n);
                        let wp = color_weight(&p, &ctx);
                        let wc = color_weight(&cq.core, &ctx);
                        wp.counts()
                            .iter()
                            .zip(wc.counts())
                            .all(|(x, y)| *x == y + cq.quotient_weight())
                    })
                });
                rec.check("core enumeration = charge sum", params, || {
                    core_series_brute(&ctx, k) == core_sum(&ctx, k)
                });
            }
        }
        Suite::Frobenius => {
            rec.check(
                "frobenius coordinates round trip",
                format!("|p|<={k}"),
                || {
                    partitions_up_to(k as usize).all(|p| {
                        let fc = to_frobenius(&p);
                        fc.weight() == p.weight() && from_frobenius(&fc) == p
                    })
                },
            );
            for ctx in contexts(opts.n_max) {
                let params = format!("n={} a={} |p|<={k}", ctx.modulus(), ctx.offset());
                rec.check("colored rows are injective, sum to weight", params, || {
                    let mut seen = std::collections::HashSet::new();
                    partitions_up_to(k as usize).all(|p| {
                        let cf = to_colored_fpartition(&p, &ctx);
                        cf.column_weight() == color_weight(&p, &ctx) && seen.insert(cf)
                    })
                });
            }
            rec.check("uncolored constant term = P(k)", format!("K={k}"), || {
                partition_counts_via_constant_term(k)
                    .iter()
                    .enumerate()
                    .all(|(i, c)| *c == BigInt::from(enumerate_partitions(i).len()))
            });
        }
        Suite::All => unreachable!(),
    }
    Ok(rec.out)
}
