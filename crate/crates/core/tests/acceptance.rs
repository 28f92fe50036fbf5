//! Acceptance run: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::Rng as _;
use rayon::prelude::*;

use common::unimod as um;
use regchains::arith::{parse_poly, prem, Field, Poly, Ring, Var};
use regchains::decompose::{solve, GcdRecord, Mode, SolveOptions};
use regchains::rchain::{iterated_resultant, RegularChain};
use regchains::subres::{naive_subresultant_chain, subresultant_chain, SubresChain};
use regchains::verify::{
    admissible_prime, enumerate_variety, quasi_component_points, radical_membership, union_of_quasi_components,
};

const SYSTEMS: u64 = 240;
const PRIMES: [u64; 3] = [5, 7, 11];

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Outcome {
            passed,
            detail: detail.into(),
        }
    }
}

fn corpus() -> Vec<PathBuf> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus");
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "sys"))
        .collect();
    files.sort();
    files
}

fn cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("regchains").chain(args.iter().copied());
    let code = regchains::cli::run(argv, &mut out, &mut err);
    (code, out)
}

/// Regular gcd contract for one record: the initial of `g` is regular on the
/// branch and `g` divides both inputs at every branch point.
fn gcd_contract(rec: &GcdRecord) -> Result<(), String> {
    let v = rec.v;
    let init = rec.g.coeff_in(v, rec.g.degree(v));
    if rec.g.degree(v) == 0 || iterated_resultant(&init, &rec.chain).is_zero() {
        return Err(format!("R1 fails for g = {} over {}", rec.g, rec.chain));
    }
    let rp = prem(&rec.p, &rec.g, v).unwrap();
    let rq = prem(&rec.q, &rec.g, v).unwrap();
    let prime = rec.g.field().characteristic();
    if prime == 0 {
        // over Q: vanishing on the quasi-component, decided exactly
        let ok = radical_membership(&rp, &rec.chain).unwrap() && radical_membership(&rq, &rec.chain).unwrap();
        return if ok {
            Ok(())
        } else {
            Err(format!("R3 fails for g = {} over {}", rec.g, rec.chain))
        };
    }
    let pts = quasi_component_points(&rec.chain, prime).unwrap();
    for pt in &pts.points {
        for r in [&rp, &rq] {
            if !um::specialize(r, v, pt, prime).is_empty() {
                return Err(format!("R3 fails for g = {} over {} at {:?}", rec.g, rec.chain, pt));
            }
        }
    }
    Ok(())
}

struct SystemRun {
    mismatches: Vec<String>,
    records: Vec<GcdRecord>,
}

fn criterion1() -> (Outcome, Vec<GcdRecord>) {
    let runs: Vec<SystemRun> = (0..SYSTEMS)
        .into_par_iter()
        .map(|seed| {
            let mut mismatches = Vec::new();
            let mut records = Vec::new();
            for prime in PRIMES {
                let (ring, f) = common::random_system(seed, Field::prime(prime).unwrap());
                let opts = SolveOptions::lazard().with_gcd_records(true);
                let sol = solve(&ring, &f, &opts).unwrap();
                let v = enumerate_variety(&ring, &f, prime).unwrap();
                let w = union_of_quasi_components(&ring, sol.split.chains(), prime).unwrap();
                if v != w {
                    mismatches.push(format!("seed {seed} at {prime}"));
                }
                records.extend(sol.gcd_records);
            }
            SystemRun { mismatches, records }
        })
        .collect();
    let mismatches: Vec<String> = runs.iter().flat_map(|r| r.mismatches.clone()).collect();
    let records: Vec<GcdRecord> = runs.into_iter().flat_map(|r| r.records).collect();

    // informational: the same integer systems solved over Q and reduced
    let (mut agree, mut skipped, mut unlucky) = (0, 0, 0);
    for seed in 0..SYSTEMS {
        let (ring, f) = common::random_system(seed, Field::rationals());
        let split = solve(&ring, &f, &SolveOptions::lazard()).unwrap().split;
        for prime in PRIMES {
            if !admissible_prime(&f, split.chains(), prime) {
                skipped += 1;
                continue;
            }
            let rep = regchains::verify::check_decomposition(&ring, &f, split.chains(), Mode::LazardWu, prime).unwrap();
            if rep.passed {
                agree += 1;
            } else {
                unlucky += 1;
            }
        }
    }
    let detail = format!(
        "{} systems x {} primes solved over GF(p), {} mismatches{}; over Q reduced mod p: {agree} agree, {unlucky} differ at unlucky primes, {skipped} skipped",
        SYSTEMS,
        PRIMES.len(),
        mismatches.len(),
        if mismatches.is_empty() { String::new() } else { format!(" ({})", mismatches.join(", ")) },
    );
    (Outcome::new(mismatches.is_empty(), detail), records)
}

fn random_bivariate(r: &mut rand_chacha::ChaCha8Rng, ring: &Arc<Ring>, max_deg: u32) -> Poly {
    let x = Var(1);
    loop {
        let d = r.gen_range(1..=max_deg);
        let mut coeffs = Vec::new();
        for _ in 0..=d {
            let c = common::random_poly(r, ring, 2, 3);
            // keep only the part free of x
            coeffs.push(c.coeff_in(x, 0));
        }
        let p = Poly::from_coeffs(ring, x, &coeffs);
        if p.degree(x) >= 1 {
            return p;
        }
    }
}

fn criterion2() -> Outcome {
    let mut r = common::rng(2);
    let mut checked = 0;
    let mut bad = Vec::new();
    for i in 0..150 {
        let field = if i % 3 == 0 {
            Field::prime(101).unwrap()
        } else {
            Field::rationals()
        };
        let ring = Ring::new(&["y", "x"], field).unwrap();
        let (mut a, mut b) = (random_bivariate(&mut r, &ring, 4), random_bivariate(&mut r, &ring, 4));
        if i % 4 == 1 {
            // force a common factor
            let h = random_bivariate(&mut r, &ring, 2);
            a = &a * &h;
            b = &b * &h;
            if a.degree(Var(1)) > 4 || b.degree(Var(1)) > 4 {
                continue;
            }
        }
        let fast = subresultant_chain(&a, &b, Var(1)).unwrap();
        let slow = naive_subresultant_chain(&a, &b, Var(1)).unwrap();
        checked += 1;
        if fast.entries != slow.entries {
            bad.push(format!("({a}, {b})"));
        }
    }
    Outcome::new(
        checked >= 100 && bad.is_empty(),
        format!(
            "{checked} pairs, {} disagreements{}",
            bad.len(),
            bad.first().map(|s| format!(", first {s}")).unwrap_or_default()
        ),
    )
}

/// Per-case counts of the specialization suite.
#[derive(Default)]
struct Cases {
    nonzero_sk: usize,
    dpol_scaling: usize,
    gcd_first_sk: usize,
    gcd_smaller: usize,
    gcd_larger: usize,
    gcd_truncated: usize,
    failures: Vec<String>,
}

fn specialization_instance(cases: &mut Cases, f: &Poly, g: &Poly, a: u64, prime: u64) {
    let x = Var(1);
    let src: SubresChain = subresultant_chain(f, g, x).unwrap();
    let (m, n) = (f.degree(x) as usize, g.degree(x) as usize);
    let lambda = m.min(n);
    let pt = [a, 0];
    let phi = |q: &Poly| um::specialize(q, x, &pt, prime);
    let phi_c = |q: &Poly| phi(q).first().copied().unwrap_or(0);
    let (pf, pg) = (phi(f), phi(g));
    let (am, bn) = (phi_c(&f.coeff_in(x, m as u32)), phi_c(&g.coeff_in(x, n as u32)));
    let s: Vec<u64> = (0..lambda).map(|i| phi_c(src.principal(i))).collect();
    let deg = |v: &[u64]| um::degree(v).map(|d| d as i64).unwrap_or(-1);
    let mut failures = Vec::new();
    let mut fail = |what: &str| failures.push(format!("{what}: f = {f}, g = {g}, y = {a} mod {prime}"));

    for (k, &sk) in s.iter().enumerate() {
        if sk != 0 {
            if (am == 0 && bn == 0) || deg(&pf) < k as i64 || deg(&pg) < k as i64 {
                fail("nonzero s_k with a dropped degree");
            }
            cases.nonzero_sk += 1;
        }
    }

    if am != 0 && !pg.is_empty() {
        let n1 = deg(&pg) as usize;
        for i in 1..lambda {
            if i > n1 {
                continue;
            }
            let mut rows = Vec::new();
            for e in (0..n1 - i).rev() {
                rows.push(um::shift(&pf, e));
            }
            for e in (0..m - i).rev() {
                rows.push(um::shift(&pg, e));
            }
            let want = um::scale(&um::dpol(&rows, prime), um_pow(am, (n - n1) as u64, prime), prime);
            if phi(src.entry(i)) != want {
                fail("specialized S_i is not the scaled determinant polynomial");
            }
            cases.dpol_scaling += 1;
        }
    }

    let g_oracle = um::gcd(&pf, &pg, prime);
    let same = |h: &[u64]| um::monic(h, prime) == g_oracle;
    match s.iter().position(|&c| c != 0) {
        Some(k) => {
            if !same(&phi(src.entry(k))) {
                fail("gcd differs from the first nonzero S_k");
            }
            cases.gcd_first_sk += 1;
        }
        None => {
            let (first, second) = if m <= n {
                ((am, &pf), (bn, &pg))
            } else {
                ((bn, &pg), (am, &pf))
            };
            if first.0 != 0 {
                if !same(first.1) {
                    fail("all s_k vanish: gcd differs from the input of smaller degree");
                }
                cases.gcd_smaller += 1;
            } else if second.0 != 0 {
                if !same(second.1) {
                    fail("all s_k vanish: gcd differs from the input of larger degree");
                }
                cases.gcd_larger += 1;
            } else {
                let red = |q: &Poly| q - &q.coeff_in(x, q.degree(x)).shift(x, q.degree(x));
                if um::gcd(&phi(&red(f)), &phi(&red(g)), prime) != g_oracle {
                    fail("all s_k vanish: gcd changed by dropping both leading terms");
                }
                cases.gcd_truncated += 1;
            }
        }
    }
    cases.failures.extend(failures);
}

fn um_pow(b: u64, e: u64, p: u64) -> u64 {
    (0..e).fold(1, |acc, _| acc * b % p)
}

fn criterion3() -> Outcome {
    let prime = 31;
    let ring = Ring::new(&["y", "x"], Field::prime(prime).unwrap()).unwrap();
    let x = Var(1);
    let mut r = common::rng(3);
    let mut cases = Cases::default();
    let mut instances = 0;
    for i in 0..600 {
        let a = r.gen_range(0..prime);
        let vanish = parse_poly(&ring, &format!("y - {a}")).unwrap();
        let mut f = random_bivariate(&mut r, &ring, 4);
        let mut g = random_bivariate(&mut r, &ring, 4);
        match i % 6 {
            // common factor after specialization
            1 => {
                let h = random_bivariate(&mut r, &ring, 2);
                f = &(&f * &h) + &(&vanish * &common::random_poly(&mut r, &ring, 1, 2));
                g = &(&g * &h) + &(&vanish * &common::random_poly(&mut r, &ring, 1, 2));
            }
            // f divides g after specialization
            2 => {
                g = &(&f * &random_bivariate(&mut r, &ring, 2))
                    + &(&vanish * &common::random_poly(&mut r, &ring, 1, 2));
            }
            // leading coefficient of f vanishes
            3 => {
                let m = f.degree(x);
                f = &f + &(&(&vanish * &f.coeff_in(x, m)) - &f.coeff_in(x, m)).shift(x, m);
            }
            // f vanishes entirely
            4 => f = &vanish * &f,
            // both leading coefficients vanish
            5 => {
                let lc = |q: &Poly| q.coeff_in(x, q.degree(x));
                let (m, n) = (f.degree(x), g.degree(x));
                f = &f + &(&(&vanish * &lc(&f)) - &lc(&f)).shift(x, m);
                g = &g + &(&(&vanish * &lc(&g)) - &lc(&g)).shift(x, n);
            }
            _ => {}
        }
        if f.degree(x) < 1 || g.degree(x) < 1 || f.degree(x) > 6 || g.degree(x) > 6 {
            continue;
        }
        instances += 1;
        specialization_instance(&mut cases, &f, &g, a, prime);
    }
    let all_hit = [
        cases.nonzero_sk,
        cases.dpol_scaling,
        cases.gcd_first_sk,
        cases.gcd_smaller,
        cases.gcd_larger,
        cases.gcd_truncated,
    ]
    .iter()
    .all(|&c| c > 0);
    Outcome::new(
        instances >= 500 && all_hit && cases.failures.is_empty(),
        format!(
            "{instances} instances; checks: nonzero s_k {}, scaled dpol {}, gcd from first S_k {}, from smaller input {}, from larger input {}, after truncation {}; {} failures{}",
            cases.nonzero_sk,
            cases.dpol_scaling,
            cases.gcd_first_sk,
            cases.gcd_smaller,
            cases.gcd_larger,
            cases.gcd_truncated,
            cases.failures.len(),
            cases.failures.first().map(|s| format!(", first {s}")).unwrap_or_default()
        ),
    )
}

fn criterion4() -> (Outcome, Vec<GcdRecord>) {
    let goldens = common::goldens::all();
    let failed: Vec<String> = goldens
        .iter()
        .filter_map(|g| (g.run)().err().map(|e| format!("{}: {e}", g.name)))
        .collect();
    // gcd records of the worked decompositions, for the contract check
    let ring = Ring::new(&["y", "x"], Field::rationals()).unwrap();
    let p = |s: &str| parse_poly(&ring, s).unwrap();
    let opts = SolveOptions::lazard().with_gcd_records(true);
    let mut records = Vec::new();
    for f in [
        vec![p("x*y")],
        vec![p("x^2 + y^2 - 1"), p("x - y")],
        vec![p("x^2 - 1"), p("x^2 + (y - 1)*x - y"), p("y^2 - 1")],
    ] {
        records.extend(solve(&ring, &f, &opts).unwrap().gcd_records);
    }
    (
        Outcome::new(
            failed.is_empty(),
            format!(
                "{} examples, {} failed{}",
                goldens.len(),
                failed.len(),
                failed.first().map(|s| format!(": {s}")).unwrap_or_default()
            ),
        ),
        records,
    )
}

fn criterion5(records: &[GcdRecord]) -> Outcome {
    let failures: Vec<String> = records.par_iter().filter_map(|r| gcd_contract(r).err()).collect();
    Outcome::new(
        failures.is_empty() && !records.is_empty(),
        format!(
            "{} regular gcds checked, {} violations{}",
            records.len(),
            failures.len(),
            failures.first().map(|s| format!(": {s}")).unwrap_or_default()
        ),
    )
}

fn criterion6() -> Outcome {
    let failures: Vec<String> = (0..SYSTEMS)
        .into_par_iter()
        .flat_map_iter(|seed| {
            let mut out = Vec::new();
            for prime in PRIMES {
                let (ring, f) = common::random_system(seed, Field::prime(prime).unwrap());
                let split = solve(&ring, &f, &SolveOptions::kalkbrener()).unwrap().split;
                for t in split.chains() {
                    if t.height() > f.len() {
                        out.push(format!("seed {seed} at {prime}: height {} > {}", t.height(), f.len()));
                    }
                    for q in &f {
                        if !radical_membership(q, t).unwrap() {
                            out.push(format!("seed {seed} at {prime}: {q} not in the radical of {t}"));
                        }
                    }
                }
            }
            out
        })
        .collect();
    Outcome::new(
        failures.is_empty(),
        format!(
            "{} systems x {} primes, {} violations{}",
            SYSTEMS,
            PRIMES.len(),
            failures.len(),
            failures.first().map(|s| format!(": {s}")).unwrap_or_default()
        ),
    )
}

fn separants_regular(t: &RegularChain) -> bool {
    t.iter_desc().all(|q| {
        let v = q.mvar().unwrap();
        q.degree(v) < 2 || !iterated_resultant(&q.derivative(v), &t.at_or_below(v)).is_zero()
    })
}

fn criterion7() -> Outcome {
    let prime = 7;
    let results: Vec<(Vec<String>, bool)> = (0..SYSTEMS)
        .into_par_iter()
        .map(|seed| {
            let mut fails = Vec::new();
            let (ring, f) = common::random_system(seed, Field::rationals());
            let plain = solve(&ring, &f, &SolveOptions::lazard()).unwrap().split;
            let sqf = solve(&ring, &f, &SolveOptions::lazard().with_squarefree(true))
                .unwrap()
                .split;
            for t in sqf.chains() {
                if !separants_regular(t) {
                    fails.push(format!("seed {seed}: {t} is not squarefree"));
                }
            }
            let compared = admissible_prime(&f, plain.chains(), prime) && admissible_prime(&f, sqf.chains(), prime);
            if compared {
                let a = union_of_quasi_components(&ring, plain.chains(), prime).unwrap();
                let b = union_of_quasi_components(&ring, sqf.chains(), prime).unwrap();
                if a != b {
                    fails.push(format!("seed {seed}: point sets differ at {prime}"));
                }
            }
            (fails, compared)
        })
        .collect();
    let compared = results.iter().filter(|r| r.1).count();
    let failures: Vec<&String> = results.iter().flat_map(|r| &r.0).collect();
    Outcome::new(
        failures.is_empty(),
        format!(
            "{SYSTEMS} systems over Q, point sets compared at {prime} for {compared} (others inadmissible), {} violations{}",
            failures.len(),
            failures.first().map(|s| format!(": {s}")).unwrap_or_default()
        ),
    )
}

fn criterion8() -> Outcome {
    let mut solves = 0;
    let mut checks = 0;
    let mut violations = 0;
    let mut failures = Vec::new();
    for path in corpus() {
        let text = std::fs::read_to_string(&path).unwrap();
        let sys = regchains::cli::parse_system(&text).unwrap();
        for opts in [
            SolveOptions::lazard(),
            SolveOptions::kalkbrener(),
            SolveOptions::lazard().with_squarefree(true),
        ] {
            let run = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| solve(&sys.ring, &sys.polys, &opts)));
            match run {
                Ok(Ok(sol)) => {
                    solves += 1;
                    checks += sol.stats.process_checks;
                    violations += sol.stats.process_violations;
                }
                // squarefree mode needs a large enough characteristic
                Ok(Err(regchains::Error::CharacteristicTooSmall { .. })) => {}
                Ok(Err(e)) => failures.push(format!("{}: {e}", path.display())),
                Err(_) => failures.push(format!("{}: assertion fired", path.display())),
            }
        }
    }
    Outcome::new(
        violations == 0 && failures.is_empty(),
        format!(
            "{solves} corpus solves{}, {checks} order checks, {violations} violations{}",
            if cfg!(debug_assertions) { " (debug build)" } else { "" },
            failures.first().map(|s| format!(", {s}")).unwrap_or_default()
        ),
    )
}

fn criterion9() -> Outcome {
    let mut compared = 0;
    let mut differ = Vec::new();
    for path in corpus() {
        let file = path.to_string_lossy().into_owned();
        for extra in [
            &["--mode", "lazard"][..],
            &["--mode", "kalkbrener"],
            &["--format", "json"],
        ] {
            let outputs: BTreeMap<&str, (i32, Vec<u8>)> = ["1", "2", "8"]
                .into_iter()
                .map(|j| {
                    let mut args = vec!["solve", file.as_str(), "--jobs", j];
                    args.extend_from_slice(extra);
                    (j, cli(&args))
                })
                .collect();
            compared += 1;
            if outputs["1"] != outputs["2"] || outputs["1"] != outputs["8"] {
                differ.push(format!(
                    "{} {}",
                    path.file_name().unwrap().to_string_lossy(),
                    extra.join(" ")
                ));
            }
        }
    }
    Outcome::new(
        differ.is_empty(),
        format!(
            "{compared} corpus runs at 1, 2 and 8 workers, {} differ{}",
            differ.len(),
            differ.first().map(|s| format!(": {s}")).unwrap_or_default()
        ),
    )
}

fn timed<T>(budget: Duration, f: impl FnOnce() -> (Outcome, T)) -> (Outcome, T) {
    let start = Instant::now();
    let (mut o, extra) = f();
    let took = start.elapsed();
    if took > budget {
        o.passed = false;
    }
    o.detail = format!(
        "{} [{:.1}s, budget {}s]",
        o.detail,
        took.as_secs_f64(),
        budget.as_secs()
    );
    (o, extra)
}

fn main() {
    let mut results: Vec<Outcome> = Vec::new();
    let min = |m: u64| Duration::from_secs(60 * m);
    let (c1, mut records) = timed(min(5), criterion1);
    results.push(c1);
    results.push(timed(min(1), || (criterion2(), ())).0);
    results.push(timed(min(1), || (criterion3(), ())).0);
    let (c4, golden_records) = timed(Duration::from_secs(10), criterion4);
    records.extend(golden_records);
    results.push(c4);
    results.push(timed(min(5), || (criterion5(&records), ())).0);
    results.push(timed(min(5), || (criterion6(), ())).0);
    results.push(timed(min(5), || (criterion7(), ())).0);
    results.push(timed(min(10), || (criterion8(), ())).0);
    results.push(timed(min(10), || (criterion9(), ())).0);

    let mut all = true;
    for (i, o) in results.iter().enumerate() {
        all &= o.passed;
        println!(
            "criterion {}: {} - {}",
            i + 1,
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    if !all {
        std::process::exit(1);
    }
}
