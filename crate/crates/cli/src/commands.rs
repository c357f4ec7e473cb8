use num_bigint::BigUint;
use serde_json::{json, Value};

use straub_core::engine::{max_size_formula, straub_poly_cached, CountTables, PolyCache};
use straub_core::moments::{
    cv_limit, distribution, interpolate, rational_text, scaled_limit, Fit, MomentReport,
    RationalPoly, Surd,
};
use straub_core::partitions::{enumerate_core_distinct, Partition};
use straub_core::poset::straub_poly_bruteforce;
use straub_core::reference::{published_limit, published_moment_polynomial, published_straub_poly};
use straub_core::QPoly;

use crate::report::Report;
use crate::CliError;

type Result<T> = std::result::Result<T, CliError>;

/// Range checked by the integer counting path.
pub const COUNT_LIMIT: u64 = 400;

pub struct Context {
    pub cache: Option<PolyCache>,
}

impl Context {
    pub fn straub(&self, n: u64) -> Result<QPoly> {
        Ok(straub_poly_cached(n, self.cache.as_ref())?)
    }

    /// `S_0..=S_max_n`.
    pub fn straub_range(&self, max_n: u64) -> Result<Vec<QPoly>> {
        (0..=max_n).map(|n| self.straub(n)).collect()
    }
}

fn reports(polys: &[QPoly]) -> Result<Vec<MomentReport>> {
    polys
        .iter()
        .enumerate()
        .map(|(n, s)| Ok(distribution(s)?.report(n as u64)))
        .collect()
}

fn four_pow(n: u64) -> BigUint {
    BigUint::from(4u32).pow(n as u32)
}

fn poly_tree(p: &RationalPoly) -> Value {
    let coeffs: Vec<String> = p.coeffs().iter().map(rational_text).collect();
    json!({ "text": p.to_string(), "coefficients": coeffs })
}

fn surd_tree(s: &Surd) -> Value {
    json!({
        "coefficient": rational_text(s.coefficient()),
        "radicand": s.radicand().to_string(),
        "text": s.to_string(),
    })
}

fn moment_key(k: u32) -> String {
    if k == 1 {
        "mean".into()
    } else {
        format!("mu{k}")
    }
}

pub fn count(max_n: u64) -> Report {
    let mut r = Report::new("count");
    r.set("max_n", max_n);
    let mut tables = CountTables::new();
    let mut rows = Vec::new();
    for n in 0..=max_n {
        let s = tables.s(n);
        r.check(&format!("s({n}) = 4^{n}"), s == four_pow(n), s.to_string());
        rows.push(json!({ "n": n, "s": s.to_string() }));
    }
    r.set("values", rows);
    r
}

pub fn poly(ctx: &Context, n: u64) -> Result<Report> {
    let s = ctx.straub(n)?;
    let mut r = Report::new("poly");
    for line in s.to_text(n).lines() {
        r.line(line);
    }
    let terms: Vec<Value> = s
        .terms()
        .map(|(e, c)| json!({ "exponent": e, "coefficient": c.to_string() }))
        .collect();
    r.set("n", n);
    r.set("degree", s.degree_q());
    r.set("terms", terms);
    Ok(r)
}

pub fn dist(ctx: &Context, n: u64) -> Result<Report> {
    let d = distribution(&ctx.straub(n)?)?;
    let mut r = Report::new("dist");
    r.line(format!("# n={n} total={}", d.total()));
    r.line("# size multiplicity");
    let mut rows = Vec::new();
    for (size, m) in d.support() {
        r.line(format!("{size} {m}"));
        rows.push(json!({ "size": size, "multiplicity": m.to_string() }));
    }
    r.set("n", n);
    r.set("total", d.total().to_string());
    r.set("support", rows);
    Ok(r)
}

pub fn moments(ctx: &Context, max_n: u64, k: Option<u32>) -> Result<Report> {
    let reps = reports(&ctx.straub_range(max_n)?)?;
    let mut r = Report::new("moments");
    r.set("max_n", max_n);
    let mut rows = Vec::new();
    for rep in &reps {
        match k {
            Some(k) => {
                let v = rational_text(&rep.fit_target(k)?);
                r.line(format!("n={} {}={v}", rep.n, moment_key(k)));
                rows.push(json!({ "n": rep.n, moment_key(k): v }));
            }
            None => {
                let mut obj = serde_json::Map::new();
                for (key, v) in rep.records() {
                    r.line(format!("{key}={v}"));
                    if key == "n" {
                        obj.insert(key, json!(rep.n));
                    } else {
                        obj.insert(key, v.into());
                    }
                }
                for (j, x) in rep.scaled_moments() {
                    if x.is_finite() {
                        r.line(format!("# mu{j}/sigma^{j} ~ {x:.10}"));
                    }
                }
                r.line("");
                rows.push(Value::Object(obj));
            }
        }
    }
    if let Some(k) = k {
        r.set("k", k);
    }
    r.set("reports", rows);
    Ok(r)
}

fn fit_from_reports(k: u32, reps: &[MomentReport]) -> Result<Fit> {
    let points = reps
        .iter()
        .map(|rep| Ok((rep.n, rep.fit_target(k)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(interpolate(&points, 3 * k as usize)?)
}

/// Held-out and published-polynomial verdicts for an order-`k` fit.
fn record_verdicts(r: &mut Report, k: u32, fit: &Fit) {
    let held = fit.held_out.iter().filter(|h| h.passed()).count();
    r.check(
        &format!("fit k={k} held-out"),
        fit.all_held_out_pass(),
        format!("{held}/{} points reproduced", fit.held_out.len()),
    );
    if let Some(published) = published_moment_polynomial(k) {
        r.check(
            &format!("fit k={k} published"),
            fit.poly == published,
            fit.poly.to_string(),
        );
    }
}

fn record_fit(r: &mut Report, k: u32, reps: &[MomentReport]) -> Result<Fit> {
    let fit = fit_from_reports(k, reps)?;
    record_verdicts(r, k, &fit);
    Ok(fit)
}

fn require_max_n(k: u32, max_n: u64) -> Result<()> {
    if max_n < 3 * k as u64 {
        return Err(CliError::Usage(format!(
            "order {k} needs --max-n at least {}",
            3 * k
        )));
    }
    Ok(())
}

pub fn fit(ctx: &Context, k: u32, max_n: u64) -> Result<Report> {
    require_max_n(k, max_n)?;
    let reps = reports(&ctx.straub_range(max_n)?)?;
    let mut r = Report::new("fit");
    let fit = fit_from_reports(k, &reps)?;
    r.line(format!("k={k} degree={} nodes=0..={}", 3 * k, 3 * k));
    r.line(format!("{}={}", moment_key(k), fit.poly));
    for h in &fit.held_out {
        let status = if h.passed() { "PASS" } else { "FAIL" };
        r.line(format!("{status} n={} {}", h.n, rational_text(&h.expected)));
    }
    record_verdicts(&mut r, k, &fit);
    let held: Vec<Value> = fit
        .held_out
        .iter()
        .map(|h| {
            json!({
                "n": h.n,
                "expected": rational_text(&h.expected),
                "fitted": rational_text(&h.fitted),
                "pass": h.passed(),
            })
        })
        .collect();
    r.set("k", k);
    r.set("max_n", max_n);
    r.set("polynomial", poly_tree(&fit.poly));
    r.set("nodes", fit.nodes.clone());
    r.set("held_out", held);
    Ok(r)
}

/// CV and scaled limits from fitted polynomials `fits[k-1]`, as far as the
/// available orders reach.
fn record_limits(r: &mut Report, fits: &[RationalPoly]) -> Result<Vec<Value>> {
    let mut rows = Vec::new();
    if fits.len() < 2 {
        return Ok(rows);
    }
    let mut values = vec![(1u32, cv_limit(&fits[0], &fits[1])?)];
    for k in 2..=fits.len() as u32 {
        values.push((k, scaled_limit(k, &fits[1], &fits[k as usize - 1])?));
    }
    for (k, value) in values {
        let name = if k == 1 {
            "limit cv".to_string()
        } else {
            format!("limit k={k}")
        };
        let digits = value.significant_digits(16);
        let published = published_limit(k).expect("orders 1..=7 are published");
        r.check(
            &name,
            value == published.value,
            format!("{value} = {digits}..."),
        );
        let mut row = surd_tree(&value);
        row["k"] = json!(k);
        row["decimal"] = json!(digits);
        rows.push(row);
    }
    Ok(rows)
}

pub fn limits(ctx: &Context, max_n: u64) -> Result<Report> {
    require_max_n(2, max_n)?;
    let reps = reports(&ctx.straub_range(max_n)?)?;
    let mut r = Report::new("limits");
    let top = (max_n / 3).min(7) as u32;
    let mut fits = Vec::new();
    for k in 1..=top {
        fits.push(record_fit(&mut r, k, &reps)?.poly);
    }
    let rows = record_limits(&mut r, &fits)?;
    r.set("max_n", max_n);
    r.set("limits", rows);
    Ok(r)
}

fn oracle_check(r: &mut Report, ctx: &Context, n: u64) -> Result<()> {
    let fast = ctx.straub(n)?;
    let ideals = straub_poly_bruteforce(n)?;
    let cores = enumerate_core_distinct(2 * n + 1, 2 * n + 3)?;
    let by_cores =
        straub_core::moments::Distribution::from_sizes(cores.iter().map(Partition::size));
    let agree = fast == ideals && distribution(&fast)? == by_cores;
    r.check(
        &format!("oracle n={n}"),
        agree,
        format!("{} cores, S_{n}(1) = {}", cores.len(), fast.eval_one()),
    );
    Ok(())
}

pub fn oracle(ctx: &Context, n: u64) -> Result<Report> {
    let mut r = Report::new("oracle");
    r.set("n", n);
    oracle_check(&mut r, ctx, n)?;
    Ok(r)
}

/// Full suite in a fixed order: counts, degrees, published polynomials,
/// oracles, fits, limits.
pub fn verify(ctx: &Context, max_n: u64) -> Result<Report> {
    let mut r = Report::new("verify");
    r.set("max_n", max_n);

    let mut tables = CountTables::new();
    let bad = (0..=COUNT_LIMIT).find(|&n| tables.s(n) != four_pow(n));
    r.check(
        &format!("count s(n) = 4^n for n <= {COUNT_LIMIT}"),
        bad.is_none(),
        bad.map(|n| format!("first failure at n={n}"))
            .unwrap_or_default(),
    );

    let polys = ctx.straub_range(max_n.max(4))?;
    for (n, s) in polys.iter().enumerate().take(max_n as usize + 1) {
        let n = n as u64;
        r.check(
            &format!("value S_{n}(1) = 4^{n}"),
            s.eval_one() == four_pow(n).into(),
            "",
        );
    }
    for (n, s) in polys.iter().enumerate().take(max_n as usize + 1) {
        let (found, want) = (s.degree_q(), max_size_formula(n as u64));
        r.check(
            &format!("degree n={n}"),
            found == want,
            format!("{found} (formula {want})"),
        );
    }
    for n in 1..=4u64 {
        let published = published_straub_poly(n).expect("n <= 4");
        r.check(
            &format!("published S_{n}"),
            polys[n as usize] == published,
            "",
        );
    }
    for n in 0..=3 {
        oracle_check(&mut r, ctx, n)?;
    }

    let reps = reports(&polys[..=max_n as usize])?;
    let top = (max_n / 3).min(7) as u32;
    let mut fits = Vec::new();
    for k in 1..=top {
        fits.push(record_fit(&mut r, k, &reps)?.poly);
    }
    record_limits(&mut r, &fits)?;

    let summary = if r.passed() {
        format!("verify: PASS ({} checks)", r.check_count())
    } else {
        format!(
            "verify: FAIL ({} of {} checks)",
            r.failures(),
            r.check_count()
        )
    };
    r.line(summary);
    Ok(r)
}
