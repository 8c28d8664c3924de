//! Acceptance gate: eleven criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the report is always printed. Exits
//! nonzero if any criterion fails.

use std::collections::{BTreeMap, HashSet};
use std::process::Command;
use std::time::Instant;

use num_bigint::BigInt;

use colored_partitions::abacus::{core_series_brute, decompose, from_core_quotient};
use colored_partitions::frobenius::{
    from_frobenius, to_colored_fpartition, to_frobenius, z_via_constant_term,
};
use colored_partitions::identities::{
    core_sum, euler_factor, j_to_m, jacobi_first_form, jacobi_second_form, m_to_j, product_n2,
    product_n3, quadratic_identity_check, theta_closed_form, ChargeVector,
};
use colored_partitions::partitions::{
    color_weight, enumerate_partitions, partitions_up_to, z_brute, z_tuple,
};
use colored_partitions::table::{render, OutputFormat};
use colored_partitions::{ColoringContext, MultiSeries, Partition};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ctx(n: usize, a: usize) -> ColoringContext {
    ColoringContext::new(n, a).unwrap()
}

fn contexts(ns: impl IntoIterator<Item = usize>) -> Vec<ColoringContext> {
    ns.into_iter()
        .flat_map(|n| (0..n).map(move |a| ctx(n, a)))
        .collect()
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Box colors straight from the definition, without the library's coloring.
fn oracle_color_counts(parts: &[usize], n: usize, a: usize) -> Vec<u32> {
    let mut w = vec![0; n];
    for (j0, &h) in parts.iter().enumerate() {
        for i in 1..=h {
            let c = (a + j0 + 1 + n * (i + 1) - i) % n;
            w[c] += 1;
        }
    }
    w
}

/// Partition numbers from Euler's pentagonal recurrence.
fn pentagonal_counts(k_max: usize) -> Vec<u64> {
    let mut p = vec![0i64; k_max + 1];
    p[0] = 1;
    for k in 1..=k_max {
        let mut s = 0i64;
        for m in 1.. {
            let g1 = m * (3 * m - 1) / 2;
            if g1 > k {
                break;
            }
            let sign = if m % 2 == 1 { 1 } else { -1 };
            s += sign * p[k - g1];
            let g2 = m * (3 * m + 1) / 2;
            if g2 <= k {
                s += sign * p[k - g2];
            }
        }
        p[k] = s;
    }
    p.into_iter().map(|x| x as u64).collect()
}

fn criterion_1() -> Outcome {
    let k = 10;
    let all = contexts(2..=5);
    for c in &all {
        let brute = z_brute(c, k);
        ensure(brute == z_via_constant_term(c, k), || {
            format!(
                "constant term differs at n={} a={}",
                c.modulus(),
                c.offset()
            )
        })?;
        ensure(brute == theta_closed_form(c, k), || {
            format!("lattice sum differs at n={} a={}", c.modulus(), c.offset())
        })?;
    }
    Ok(format!("{} (n, a) pairs, K={k}", all.len()))
}

fn criterion_2() -> Outcome {
    let brute = z_brute(&ctx(2, 0), 14);
    ensure(product_n2(14) == brute, || "product differs".into())?;
    Ok(format!("{} terms", brute.len()))
}

fn criterion_3() -> Outcome {
    let brute = z_brute(&ctx(3, 0), 12);
    ensure(product_n3(12) == brute, || "product differs".into())?;
    Ok(format!("{} terms", brute.len()))
}

fn criterion_4() -> Outcome {
    let k = 20;
    let expected = pentagonal_counts(k);
    ensure(
        expected[..11] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42],
        || "pentagonal oracle is off".into(),
    )?;
    for (kk, &want) in expected.iter().enumerate() {
        ensure(enumerate_partitions(kk).len() as u64 == want, || {
            format!("enumeration gives wrong P({kk})")
        })?;
    }
    for c in contexts(2..=4) {
        let spec = z_brute(&c, k as u32).specialize_uniform();
        let want: Vec<BigInt> = expected.iter().map(|&x| BigInt::from(x)).collect();
        ensure(spec == want, || {
            format!("specialization wrong at n={} a={}", c.modulus(), c.offset())
        })?;
    }
    Ok(format!("P(0..{k}), P({k}) = {}", expected[k]))
}

fn criterion_5() -> Outcome {
    ensure(
        color_weight(&p(&[4, 3, 2]), &ctx(3, 2)).counts() == [3, 3, 3],
        || "color weight of (4,3,2)".into(),
    )?;
    ensure(
        color_weight(&p(&[2, 1, 1, 1]), &ctx(3, 1)).counts() == [2, 2, 1],
        || "color weight of (2,1,1,1)".into(),
    )?;
    let cf = to_colored_fpartition(&p(&[4, 3, 2]), &ctx(3, 2));
    ensure(
        cf.top() == [vec![1, 1, 1], vec![1, 0, 1]] && cf.bottom() == [vec![1, 1, 1], vec![0, 1, 0]],
        || format!("colored F-partition {:?} / {:?}", cf.top(), cf.bottom()),
    )?;
    Ok("two color weights, one colored F-partition".into())
}

fn criterion_6() -> Outcome {
    let k = 20;
    let (l1, r1) = jacobi_first_form(k);
    ensure(l1 == r1, || "binomial form differs".into())?;
    let (l2, r2) = jacobi_second_form(k);
    ensure(l2 == r2, || "square form differs".into())?;
    ensure(
        !l1.constant_term().is_zero() && !l2.constant_term().is_zero(),
        || "degenerate sides".into(),
    )?;
    Ok(format!("both forms, K={k}"))
}

fn criterion_7() -> Outcome {
    let mut checked = 0;
    for n in [2, 3, 5] {
        for part in partitions_up_to(18) {
            let cq = decompose(&part, n);
            let qw = cq.quotient_weight();
            ensure(part.weight() == cq.core.weight() + n * qw, || {
                format!("weight identity fails for {part}, n={n}")
            })?;
            ensure(from_core_quotient(&cq).as_ref() == Ok(&part), || {
                format!("round trip fails for {part}, n={n}")
            })?;
            for a in 0..n {
                let wp = oracle_color_counts(part.parts(), n, a);
                let wc = oracle_color_counts(cq.core.parts(), n, a);
                ensure(
                    wp.iter()
                        .zip(&wc)
                        .all(|(x, y)| *x as usize == *y as usize + qw),
                    || format!("color balance fails for {part}, n={n}, a={a}"),
                )?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (partition, n) pairs, |p| <= 18"))
}

fn criterion_8() -> Outcome {
    let k = 10;
    let all = contexts(2..=4);
    for c in &all {
        let (n, a) = (c.modulus(), c.offset());
        let cores = core_series_brute(c, k);
        let sum = core_sum(c, k);
        ensure(cores == sum, || {
            format!("core series differs at n={n} a={a}")
        })?;
        ensure(sum.terms().all(|(_, x)| *x == BigInt::from(1)), || {
            format!("coefficient outside {{0,1}} at n={n} a={a}")
        })?;
        let factored = euler_factor(n, k, n as u32).product(&sum).unwrap();
        ensure(factored == z_brute(c, k), || {
            format!("factorization fails at n={n} a={a}")
        })?;
    }
    Ok(format!("{} (n, a) pairs, K={k}", all.len()))
}

fn charge_vectors(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![-bound; n - 1];
    loop {
        let last = -cur.iter().sum::<i64>();
        if last.abs() <= bound {
            let mut j = cur.clone();
            j.push(last);
            out.push(j);
        }
        let mut i = 0;
        loop {
            if i == cur.len() {
                return out;
            }
            if cur[i] < bound {
                cur[i] += 1;
                break;
            }
            cur[i] = -bound;
            i += 1;
        }
    }
}

fn criterion_9() -> Outcome {
    let mut checked = 0;
    for n in 2..=6 {
        for j in charge_vectors(n, 5) {
            let cv = ChargeVector::new(j.clone()).unwrap();
            ensure(quadratic_identity_check(&cv), || {
                format!("identity fails at {j:?}")
            })?;
            let m = j_to_m(&j).unwrap();
            // m^T C m telescopes to the sum of squared consecutive differences
            let mut padded = vec![0];
            padded.extend_from_slice(m.as_slice());
            padded.push(0);
            let form: i64 = padded.windows(2).map(|w| (w[0] - w[1]).pow(2)).sum();
            let lhs: i64 = j.iter().map(|&x| x * (x + 1) / 2).sum();
            ensure(form == 2 * lhs, || {
                format!("independent form differs at {j:?}")
            })?;
            ensure(m_to_j(&m).as_slice() == j.as_slice(), || {
                format!("j -> m -> j fails at {j:?}")
            })?;
            ensure(j_to_m(m_to_j(&m).as_slice()).unwrap() == m, || {
                format!("m -> j -> m fails at {j:?}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} charge vectors, |j_i| <= 5, n <= 6"))
}

fn criterion_10() -> Outcome {
    let mut count = 0;
    for part in partitions_up_to(18) {
        let fc = to_frobenius(&part);
        let d = fc.rank();
        let sum: usize = fc.top().iter().chain(fc.bottom()).sum();
        ensure(part.weight() == d + sum, || {
            format!("weight identity fails for {part}")
        })?;
        ensure(from_frobenius(&fc) == part, || {
            format!("round trip fails for {part}")
        })?;
        count += 1;
    }
    for c in contexts(2..=5) {
        let mut seen = HashSet::new();
        for part in partitions_up_to(14) {
            let cf = to_colored_fpartition(&part, &c);
            let want = oracle_color_counts(part.parts(), c.modulus(), c.offset());
            let got: Vec<u32> = cf
                .column_weight()
                .counts()
                .iter()
                .map(|&x| x as u32)
                .collect();
            ensure(got == want, || format!("column sums wrong for {part}"))?;
            ensure(seen.insert(cf), || {
                format!("collision at {part}, n={} a={}", c.modulus(), c.offset())
            })?;
        }
    }
    Ok(format!(
        "{count} partitions round trip; injective for n <= 5"
    ))
}

/// Pairs of diagrams counted directly, keyed by exponent vector.
fn pair_oracle(offsets: [usize; 2], n: usize, k: usize) -> BTreeMap<Vec<u32>, u64> {
    let mut table = BTreeMap::new();
    for k1 in 0..=k {
        for k2 in 0..=k - k1 {
            for x in enumerate_partitions(k1) {
                for y in enumerate_partitions(k2) {
                    let wx = oracle_color_counts(x.parts(), n, offsets[0]);
                    let wy = oracle_color_counts(y.parts(), n, offsets[1]);
                    let e: Vec<u32> = wx.iter().zip(&wy).map(|(a, b)| a + b).collect();
                    *table.entry(e).or_insert(0) += 1;
                }
            }
        }
    }
    table
}

fn oracle_csv(n: usize, table: &BTreeMap<Vec<u32>, u64>) -> String {
    let mut rows: Vec<(&Vec<u32>, &u64)> = table.iter().collect();
    rows.sort_by(|(x, _), (y, _)| {
        let dx: u32 = x.iter().sum();
        let dy: u32 = y.iter().sum();
        dx.cmp(&dy).then(y.cmp(x))
    });
    let mut out: String = (0..n).map(|c| format!("e{c},")).collect();
    out.push_str("coefficient\n");
    for (e, c) in rows {
        for x in e {
            out.push_str(&format!("{x},"));
        }
        out.push_str(&format!("{c}\n"));
    }
    out
}

fn cli_table(n: usize, offsets: [usize; 2], k: usize, format: &str) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_colored-partitions"))
        .args([
            "table",
            "--n",
            &n.to_string(),
            "--offsets",
            &format!("{},{}", offsets[0], offsets[1]),
            "--max-degree",
            &k.to_string(),
            "--format",
            format,
        ])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        String::from_utf8_lossy(&out.stderr).into_owned()
    })?;
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn criterion_11() -> Outcome {
    let k = 8;
    let mut cases = 0;
    for n in [2, 3] {
        for a1 in 0..n {
            for a2 in 0..n {
                let offsets = [a1, a2];
                let oracle = pair_oracle(offsets, n, k);
                let series = z_tuple(&offsets, n, k as u32).unwrap();
                let expected = MultiSeries::from_terms(
                    n,
                    k as u32,
                    oracle.iter().map(|(e, &c)| (e.clone(), BigInt::from(c))),
                );
                ensure(series == expected, || {
                    format!("tuple series differs for {offsets:?}, n={n}")
                })?;

                let csv = cli_table(n, offsets, k, "csv")?;
                ensure(csv == oracle_csv(n, &oracle), || {
                    format!("csv differs for {offsets:?}, n={n}")
                })?;
                let json = cli_table(n, offsets, k, "json")?;
                ensure(json == render(&expected, OutputFormat::Json), || {
                    format!("json differs for {offsets:?}, n={n}")
                })?;
                let parsed: serde_json::Value =
                    serde_json::from_str(&json).map_err(|e| e.to_string())?;
                let from_json: BTreeMap<Vec<u32>, u64> = parsed["terms"]
                    .as_array()
                    .ok_or("json has no terms")?
                    .iter()
                    .map(|t| {
                        let e = t["exponents"]
                            .as_array()
                            .unwrap()
                            .iter()
                            .map(|x| x.as_u64().unwrap() as u32)
                            .collect();
                        (e, t["coefficient"].as_str().unwrap().parse().unwrap())
                    })
                    .collect();
                ensure(from_json == oracle, || {
                    format!("json values differ for {offsets:?}")
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} offset pairs, K={k}, csv and json"))
}

type Criterion = (&'static str, fn() -> Outcome);

const CRITERIA: [Criterion; 11] = [
    ("enumeration = constant term = lattice sum", criterion_1),
    ("two-color product", criterion_2),
    ("three-color product", criterion_3),
    ("uniform specialization gives P(k)", criterion_4),
    ("worked-example fixtures", criterion_5),
    ("Jacobi triple product, both forms", criterion_6),
    ("core/quotient bijection and balance", criterion_7),
    ("core series and factorization", criterion_8),
    ("quadratic form and charge maps", criterion_9),
    ("Frobenius bijections", criterion_10),
    ("tuple series and table output", criterion_11),
];

fn main() {
    let results: Vec<(Outcome, f64)> = std::thread::scope(|s| {
        let handles: Vec<_> = CRITERIA
            .iter()
            .map(|&(_, f)| {
                s.spawn(move || {
                    let start = Instant::now();
                    let r = f();
                    (r, start.elapsed().as_secs_f64())
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| (Err("panicked".into()), 0.0)))
            .collect()
    });
    let mut failed = 0;
    for (i, ((name, _), (r, secs))) in CRITERIA.iter().zip(results).enumerate() {
        match r {
            Ok(detail) => println!(
                "PASS criterion {:>2}: {name} ({detail}) [{secs:.2}s]",
                i + 1
            ),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
