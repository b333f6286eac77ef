//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero on any
//! failure other than the documented Casimir residual.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use minrep::config::{AlgebraName, CommandKind, FamilyName, RunConfig};
use minrep::report::SuiteReport;
use minrep::run;
use minrep_core::fockspace::helicity_spectrum;
use minrep_core::oscrep::casimir_defect;

enum Outcome {
    Pass(String),
    Fail(String),
    /// Unattainable as stated; the observed residual matches the documented one.
    Documented(String),
}

fn suite(cfg: RunConfig) -> Result<SuiteReport, String> {
    let r = run(&cfg).map_err(|e| e.to_string())?;
    if r.passed() {
        Ok(r)
    } else {
        let f: Vec<String> = r.failures().take(5).map(|x| format!("{}: {:?}", x.id, x.defect)).collect();
        Err(format!("{} failed: {}", r.command, f.join("; ")))
    }
}

fn cfg(command: CommandKind) -> RunConfig {
    RunConfig { command: Some(command), stable: true, ..Default::default() }
}

fn has(r: &SuiteReport, id: &str) -> Result<(), String> {
    match r.find(id) {
        Some(rec) if rec.pass => Ok(()),
        Some(rec) => Err(format!("{} failed: {:?}", id, rec.defect)),
        None => Err(format!("missing check {}", id)),
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        return Err(format!("{} took {:?}, limit {:?}", what, t, limit));
    }
    Ok(())
}

fn criterion_1() -> Result<String, String> {
    let start = Instant::now();
    let r = suite(cfg(CommandKind::Table1))?;
    within(start, Duration::from_secs(5), "table1")?;
    let rows = r.table1.as_ref().ok_or("no table")?;
    let table = [("E6", 78, "A5", 20, 11), ("E7", 133, "D6", 32, 17), ("E8", 248, "E7", 56, 29), ("F4", 52, "C3", 14, 8), ("G2", 14, "A1", 4, 3)];
    for (label, dim_g, h, g1, gk) in table {
        let row = rows.iter().find(|x| x.label == label).ok_or(format!("row {} missing", label))?;
        if (row.dim_g, row.h_label.as_str(), row.dim_g1, row.gk_dim) != (dim_g, h, g1, gk) {
            return Err(format!("{:?} != {:?}", row, (label, dim_g, h, g1, gk)));
        }
    }
    for prefix in ["A", "B", "C", "D"] {
        let count = rows.iter().filter(|x| x.label.starts_with(prefix) && x.label[1..].parse::<usize>().is_ok()).count();
        if count < 4 {
            return Err(format!("only {} ranks of type {}", count, prefix));
        }
    }
    if !rows.iter().all(|x| x.eq27_ok) {
        return Err("dimension identity fails".into());
    }
    Ok(format!("{} rows, exceptional rows match the table", rows.len()))
}

fn criterion_2() -> Result<String, String> {
    let start = Instant::now();
    let mut total = 0;
    let su = suite(RunConfig { algebra: AlgebraName::Su22, ..cfg(CommandKind::CheckRelations) })?;
    has(&su, "relations of su(2,2)/[H_theta,E_theta]")?;
    total += su.records.len();
    for (alg, name) in [(AlgebraName::Unn, "u"), (AlgebraName::SoStar, "so*")] {
        for n in 1..=3u16 {
            let r = suite(RunConfig { algebra: alg, n, ..cfg(CommandKind::CheckRelations) })?;
            if name == "so*" {
                for i in 1..2 * n {
                    has(&r, &format!("relations of so*({})/F{} = E{}*", 4 * n, i, i))?;
                }
            }
            total += r.records.len();
        }
    }
    within(start, Duration::from_secs(30), "relation suites")?;
    Ok(format!("{} checks over su(2,2), u(n,n) and so*(4n), n <= 3", total))
}

fn criterion_3() -> Result<String, String> {
    let mut brackets = 0;
    for n in 1..=3u16 {
        let r = suite(RunConfig { n, ..cfg(CommandKind::CheckDualPair) })?;
        if r.summary.negative_controls != 3 {
            return Err(format!("n={}: {} negative controls", n, r.summary.negative_controls));
        }
        let hs = r.records.iter().filter(|x| x.id.starts_with("u(2,2) x h/[X")).count();
        if hs != 16 {
            return Err(format!("{} brackets with h", hs));
        }
        brackets += r.records.len();
    }
    Ok(format!("{} checks, negative controls fail as required", brackets))
}

fn criterion_4() -> Result<String, String> {
    let r = suite(RunConfig { algebra: AlgebraName::SoStar, n: 2, cutoff: 4, ..cfg(CommandKind::CheckRelations) })?;
    has(&r, "nilpotent-cone relation in so*(8)/E12E34+E14E23-E13E24")?;
    let matrix: Vec<_> = r.records.iter().filter(|x| x.id.contains("on the Fock space")).collect();
    if matrix.is_empty() {
        return Err("no matrix-image checks".into());
    }
    let r6 = suite(RunConfig { algebra: AlgebraName::SoStar, n: 2, cutoff: 6, ..cfg(CommandKind::CheckRelations) })?;
    Ok(format!("Weyl identity exact; matrix image at cutoffs 4 and 6 ({} checks)", r.records.len() + r6.records.len()))
}

fn criterion_5() -> Result<String, String> {
    let mut pairs = 0;
    let mut triples = 0;
    for l in 1..=4usize {
        let r = suite(RunConfig { l, trials: 50, seed: 20_240_601, ..cfg(CommandKind::CheckBilocal) })?;
        has(&r, &format!("bilocal identity L={}/central term", l))?;
        pairs += r.records.iter().filter(|x| x.id.starts_with("bilocal L=") && x.id.ends_with("/central term")).count();
        triples += r
            .records
            .iter()
            .filter(|x| x.id.starts_with("frobenius"))
            .map(|x| x.id.split('/').next().unwrap())
            .collect::<std::collections::BTreeSet<_>>()
            .len();
        for t in ["R", "C", "H"] {
            has(&r, &format!("commutant classifier/{}", t))?;
        }
    }
    if pairs < 200 || triples < 50 {
        return Err(format!("{} pairs, {} triples", pairs, triples));
    }
    Ok(format!("identity at L=1..4, {} random pairs, {} Frobenius triples, classifier R/C/H with commutants 1/2/4", pairs, triples))
}

fn criterion_6() -> Result<String, String> {
    let start = Instant::now();
    let r = suite(RunConfig { algebra: AlgebraName::SoStar, n: 2, level: 3, ..cfg(CommandKind::Decompose) })?;
    within(start, Duration::from_secs(60), "decomposition")?;
    for id in [
        "so*(8) low levels/vacuum singlet",
        "so*(8) low levels/vacuum lowest weight",
        "so*(8) low levels/E b_j*|0> = a_j*|0>",
        "so*(8) low levels/isotriplet",
        "so*(8) decomposition/bookkeeping",
    ] {
        has(&r, id)?;
    }
    let dims = &r.details["lowest_weight_dims"];
    let expected = serde_json::json!({"0": 1, "1": 2, "2": 3, "3": 4});
    if *dims != expected {
        return Err(format!("lowest-weight dimensions {}", dims));
    }
    Ok("singlet, doublet, triplet, quartet; bookkeeping holds".into())
}

fn criterion_7() -> Result<String, String> {
    let mut runs = 0;
    for modes in 1..=2u16 {
        for flavors in 1..=2u16 {
            let r = suite(RunConfig { family: FamilyName::All, modes, flavors, closure_level: 2, ..cfg(CommandKind::Closure) })?;
            let cc = &r.details["central_charge"];
            for f in ["R", "C", "H"] {
                if cc[f] != serde_json::json!(flavors.to_string()) {
                    return Err(format!("K={} N={} {}: central charge {}", modes, flavors, f, cc[f]));
                }
            }
            runs += 3;
        }
    }
    Ok(format!("{} closure runs, central charge N", runs))
}

fn criterion_8() -> Result<String, String> {
    let r = suite(RunConfig { degree: 6, helicity_max: 2, ..cfg(CommandKind::Massless) })?;
    let ccr = r.records.iter().filter(|x| x.id.starts_with("CCR of the differential realization")).count();
    if ccr == 0 {
        return Err("no commutation checks".into());
    }
    for id in [
        "vacuum of the massless representation/(z zb - dbar d)|0> = 2|0>",
        "vacuum of the massless representation/<0|0> = 1",
        "vacuum of the massless representation/h|0> = 0",
        "light-like momentum/p^2 = 0",
    ] {
        has(&r, id)?;
    }
    let expected: [BTreeMap<i64, usize>; 3] =
        [BTreeMap::from([(0, 1)]), BTreeMap::from([(-1, 2), (1, 2)]), BTreeMap::from([(-2, 3), (0, 4), (2, 3)])];
    for (level, want) in expected.iter().enumerate() {
        let got = helicity_spectrum(level as u32).map_err(|e| e.to_string())?;
        if &got != want {
            return Err(format!("helicity at {}: {:?}", level, got));
        }
    }
    Ok(format!("{} commutation checks at degree <= 6, vacuum, p^2 = 0, helicity histograms", ccr))
}

fn criterion_9() -> Result<String, String> {
    let r = suite(RunConfig { nmax: 6, points: 20, seed: 11, ..cfg(CommandKind::Harmonics) })?;
    for n in 1..=6 {
        has(&r, &format!("harmonics n={}/independent modes", n))?;
    }
    let modes = r.records.iter().filter(|x| x.id.ends_with(" L3")).count();
    if modes != (1..=6).map(|n| n * n).sum::<usize>() {
        return Err(format!("{} modes checked", modes));
    }
    let points = r.records.iter().filter(|x| x.id.starts_with("compactification/")).count();
    if points < 20 {
        return Err(format!("{} points", points));
    }
    Ok(format!("{} modes with all eigen-checks, {} compactified points", modes, points))
}

/// The literal defect is u(2n)-invariant but not central; the fitted
/// relation with an extra multiple of H is exact.
fn criterion_10() -> Outcome {
    let mut notes = Vec::new();
    for n in 1..=2u16 {
        let out = match casimir_defect(n) {
            Ok(o) => o,
            Err(e) => return Outcome::Fail(e.to_string()),
        };
        let rep = &out.report;
        let central = rep.checks.iter().filter(|c| c.id.starts_with("[C_so,")).all(|c| c.holds);
        let compact = rep.checks.iter().filter(|c| c.id.starts_with("[D,") && c.id != "[D,non-compact]").all(|c| c.holds);
        let noncompact_residual = rep.find("[D,non-compact]").map(|c| !c.holds).unwrap_or(false);
        let Some(([lam, mu, kappa], c)) = out.fitted.clone() else {
            return Outcome::Fail(format!("n={}: no fitted relation", n));
        };
        if !central || !compact {
            return Outcome::Fail(format!("n={}: C_so central {}, compact invariance {}", n, central, compact));
        }
        if let Some(l) = &out.lambda {
            return Outcome::Pass(format!("n={}: rational lambda {}", n, l));
        }
        if !noncompact_residual {
            return Outcome::Fail(format!("n={}: residual not observed", n));
        }
        notes.push(format!("n={}: {} C_so = C_u + {} sum E E* + {} H + ({})", n, lam, -mu, -kappa, c));
    }
    Outcome::Documented(format!("literal D is u(2n)-invariant but not central for any rational lambda; C_so central; fitted: {}", notes.join("; ")))
}

fn main() {
    type Check = fn() -> Result<String, String>;
    let checks: [(u32, &str, Check); 9] = [
        (1, "dimension table", criterion_1),
        (2, "Chevalley-Serre suites", criterion_2),
        (3, "dual-pair commutants", criterion_3),
        (4, "nilpotent-cone relation", criterion_4),
        (5, "bilocal commutator formula", criterion_5),
        (6, "Fock decomposition pattern", criterion_6),
        (7, "closure at cutoff", criterion_7),
        (8, "massless model", criterion_8),
        (9, "harmonic polynomials", criterion_9),
    ];
    let mut failed = 0;
    for (k, name, f) in checks {
        let start = Instant::now();
        match f() {
            Ok(msg) => println!("PASS criterion {} ({}): {} [{:.2?}]", k, name, msg, start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {} ({}): {}", k, name, msg);
            }
        }
    }
    match criterion_10() {
        Outcome::Pass(msg) => println!("PASS criterion 10 (Casimir relation): {}", msg),
        Outcome::Documented(msg) => println!("FAIL criterion 10 (Casimir relation, documented residual): {}", msg),
        Outcome::Fail(msg) => {
            failed += 1;
            println!("FAIL criterion 10 (Casimir relation): {}", msg);
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
