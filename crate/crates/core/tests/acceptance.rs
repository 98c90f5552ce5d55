//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use matroid_transversal::engine::{
    brute_force_count, brute_force_first, find_it, instrument_scaling, loglog_slope, ScalingMode,
};
use matroid_transversal::generators::{gen_fig4, gen_r, gen_random, gen_t, GeneratorSpec, Side};
use matroid_transversal::instance::{classify_positions, Instance};
use matroid_transversal::lab::{
    find_disjoint_transversals, find_nrow_decomposition, iso_equivalent, verify_drisko_uniqueness,
    SearchLimits,
};
use matroid_transversal::matroid::{verify_axioms, ElementId, ElementSet, Matroid, Oracle};
use matroid_transversal::selftest::fixture_battery;

/// Calls per n^3 allowed in any single scaling run. Twice the worst ratio
/// seen at n = 8 (50 calls, seed 7) when this was calibrated.
const FROZEN_C: f64 = 0.1953125;
const SCALING_SEED: u64 = 7;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "sharpness of R_{2n-2,n}", sharpness),
        (2, "constructive finder", constructive),
        (3, "brute-force agreement", agreement),
        (4, "T_n has no n-row decomposition", t_family),
        (5, "non-extremal fixtures", fixtures),
        (6, "R_{m,n} packings and decomposition", r_packings),
        (7, "oracle-call scaling", scaling),
        (8, "matroid axioms and circuits", axioms),
        (9, "uniqueness of R_{2n-2,n}", uniqueness),
    ];
    let mut failed = 0;
    for (id, name, check) in criteria {
        let start = Instant::now();
        let (verdict, detail) = match check() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {id}: {verdict} {name} ({detail}) [{:.2}s]",
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sharpness() -> Outcome {
    let mut counts = Vec::new();
    for n in 2..=5 {
        let inst = gen_r(2 * n - 2, n).map_err(|e| e.to_string())?;
        let count = brute_force_count(&inst).map_err(|e| e.to_string())?;
        ensure(count == 0, || {
            format!("R_{{{},{n}}} has {count} ITs", 2 * n - 2)
        })?;
        counts.push(count);
    }
    Ok(format!("IT counts {counts:?} for n = 2..5"))
}

/// The instances of criterion 2, in a fixed order.
fn criterion2_instances() -> Vec<(String, Instance)> {
    let mut out = Vec::new();
    for n in 2..=8 {
        out.push((
            format!("R_{{{},{n}}}", 2 * n - 1),
            gen_r(2 * n - 1, n).unwrap(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..1000 {
        let n = 1 + i % 6;
        let k = rng.gen_range(n..=2 * n);
        let seed = rng.gen();
        let spec = GeneratorSpec::RandomRowLatin {
            m: 2 * n - 1,
            n,
            k,
            seed,
        };
        out.push((format!("{spec:?}"), gen_random(spec).unwrap()));
    }
    for i in 0..200 {
        let n = 1 + i % 6;
        let p = [2, 5, 7][i % 3];
        let dim = n + rng.gen_range(0..2);
        let seed = rng.gen();
        let spec = GeneratorSpec::RandomLinear {
            m: 2 * n - 1,
            n,
            p,
            dim,
            seed,
        };
        out.push((format!("{spec:?}"), gen_random(spec).unwrap()));
    }
    out
}

fn constructive() -> Outcome {
    let instances = criterion2_instances();
    for (name, inst) in &instances {
        let outcome = find_it(inst).map_err(|e| format!("{name}: {e}"))?;
        let recheck =
            classify_positions(inst, &outcome.certificate.positions).map_err(|e| e.to_string())?;
        ensure(recheck.is_it(), || {
            format!("{name}: certificate is {}", recheck.classification)
        })?;
    }
    Ok(format!(
        "{} instances, all certificates re-verify as ITs",
        instances.len()
    ))
}

fn agreement() -> Outcome {
    let mut checked = 0;
    for (name, inst) in criterion2_instances() {
        if inst.n() > 5 {
            continue;
        }
        let found = brute_force_first(&inst).map_err(|e| e.to_string())?;
        ensure(found.is_some_and(|c| c.is_it()), || {
            format!("{name}: brute force found no IT")
        })?;
        ensure(common::has_it(&inst), || {
            format!("{name}: permutation search found no IT")
        })?;
        checked += 1;
    }
    Ok(format!("{checked} instances with n <= 5"))
}

fn t_family() -> Outcome {
    for n in 2..=4 {
        let inst = gen_t(n).map_err(|e| e.to_string())?;
        let found = find_nrow_decomposition(&inst).map_err(|e| e.to_string())?;
        ensure(found.is_none(), || format!("T_{n} decomposes"))?;
    }
    // The oracle check is exhaustive over every row subset and IT set.
    for n in 2..=3 {
        ensure(!common::has_nrow(&gen_t(n).unwrap()), || {
            format!("brute force decomposes T_{n}")
        })?;
    }
    Ok("no decomposition for n = 2, 3, 4 (3, 28, 1365 row subsets)".into())
}

fn fixtures() -> Outcome {
    let left = gen_fig4(Side::Left);
    let right = gen_fig4(Side::Right);
    let r43 = gen_r(4, 3).unwrap();
    let t3 = gen_t(3).unwrap();
    let e = |x: matroid_transversal::Error| x.to_string();
    ensure(
        find_disjoint_transversals(&left, 3).map_err(e)?.is_none(),
        || "left fixture packs 3 ITs".into(),
    )?;
    ensure(
        find_nrow_decomposition(&right).map_err(e)?.is_none(),
        || "right fixture decomposes".into(),
    )?;
    ensure(!iso_equivalent(&left, &r43).map_err(e)?, || {
        "left fixture is equivalent to R_{4,3}".into()
    })?;
    ensure(!iso_equivalent(&right, &t3).map_err(e)?, || {
        "right fixture is equivalent to T_3".into()
    })?;
    ensure(!common::iso_brute(&left, &r43), || {
        "brute force: left ~ R_{4,3}".into()
    })?;
    ensure(!common::has_packing(&left, 3), || {
        "brute force: left packs 3".into()
    })?;
    Ok("no 3-packing, no decomposition, neither equivalent to its extremal matrix".into())
}

fn r_packings() -> Outcome {
    let mut cases = 0;
    for n in 2..=4 {
        for m in 2 * n - 1..=n * n {
            let inst = gen_r(m, n).unwrap();
            let target = m - n + 1;
            let packing = find_disjoint_transversals(&inst, target)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("R_{{{m},{n}}} has no {target} disjoint ITs"))?;
            let cells: BTreeSet<_> = packing.transversals.iter().flatten().copied().collect();
            ensure(cells.len() == target * n, || {
                format!("R_{{{m},{n}}}: cells reused")
            })?;
            for t in &packing.transversals {
                ensure(classify_positions(&inst, t).unwrap().is_it(), || {
                    format!("R_{{{m},{n}}}: non-IT")
                })?;
            }
            cases += 1;
        }
    }
    let d = find_nrow_decomposition(&gen_r(5, 3).unwrap())
        .map_err(|e| e.to_string())?
        .ok_or("R_{5,3} has no decomposition")?;
    ensure(d.rows == [1, 2, 3], || {
        format!("R_{{5,3}} decomposes on rows {:?}", d.rows)
    })?;
    Ok(format!(
        "{cases} (n, m) pairs packed; R_{{5,3}} splits on rows {{1,2,3}}"
    ))
}

fn scaling() -> Outcome {
    let ns = [8, 16, 32];
    let rows = instrument_scaling(&ns, 20, SCALING_SEED).map_err(|e| e.to_string())?;
    let mut details = Vec::new();
    for mode in [ScalingMode::RowLatin, ScalingMode::Linear] {
        let part: Vec<_> = rows.iter().filter(|r| r.mode == mode).collect();
        let points: Vec<(f64, f64)> = part.iter().map(|r| (r.n as f64, r.mean_calls)).collect();
        let slope = loglog_slope(&points).ok_or("slope undefined")?;
        ensure(slope <= 3.3, || {
            format!("{} slope {slope:.3} > 3.3", mode.name())
        })?;
        for r in &part {
            let bound = FROZEN_C * (r.n as f64).powi(3);
            ensure(r.max_calls as f64 <= bound, || {
                format!(
                    "{} n={} ran {} calls > {bound:.0}",
                    mode.name(),
                    r.n,
                    r.max_calls
                )
            })?;
        }
        let wall: Vec<(f64, f64)> = part
            .iter()
            .map(|r| (r.n as f64, r.mean_wall.as_secs_f64()))
            .collect();
        details.push(format!(
            "{} call slope {slope:.2}, wall slope {:.2}",
            mode.name(),
            loglog_slope(&wall).unwrap_or(f64::NAN)
        ));
    }
    Ok(format!("{}; C = {FROZEN_C}", details.join("; ")))
}

fn set(mask: u64) -> Vec<ElementId> {
    ElementSet::from_mask(mask).into_vec()
}

fn axioms() -> Outcome {
    let battery = fixture_battery();
    let mut circuits = 0;
    for f in &battery {
        let report = verify_axioms(&Oracle::new(&f.matroid)).map_err(|e| e.to_string())?;
        ensure(report.passed(), || {
            format!("{}: {:?}", f.name, report.violations)
        })?;
        let g = f.matroid.ground_size();
        if g > 10 {
            continue;
        }
        let oracle = Oracle::new(&f.matroid);
        for mask in 0u64..1 << g {
            if !f.matroid.independent(&set(mask)) {
                continue;
            }
            for e in (0..g).filter(|e| mask >> e & 1 == 0) {
                let with = mask | 1 << e;
                if f.matroid.independent(&set(with)) {
                    continue;
                }
                // Minimal dependent subsets of I + e, straight from the definition.
                let minimal: Vec<u64> = subsets(with)
                    .filter(|&s| !f.matroid.independent(&set(s)))
                    .filter(|&s| {
                        (0..g)
                            .filter(|b| s >> b & 1 == 1)
                            .all(|b| f.matroid.independent(&set(s & !(1 << b))))
                    })
                    .collect();
                ensure(minimal.len() == 1, || {
                    format!("{}: {} circuits in I + e", f.name, minimal.len())
                })?;
                let got = oracle
                    .fundamental_circuit(&set(mask), ElementId(e))
                    .map_err(|err| err.to_string())?;
                ensure(got.as_slice() == set(minimal[0]).as_slice(), || {
                    format!("{}: circuit mismatch for I={mask:#b}, e={e}", f.name)
                })?;
                circuits += 1;
            }
        }
    }
    Ok(format!(
        "{} fixtures pass; {circuits} fundamental circuits match",
        battery.len()
    ))
}

fn subsets(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & mask)
        };
        Some(cur)
    })
}

fn uniqueness() -> Outcome {
    let mut details = Vec::new();
    for (n, k) in [(2, 2), (2, 3), (3, 3)] {
        let report =
            verify_drisko_uniqueness(n, k, &SearchLimits::default()).map_err(|e| e.to_string())?;
        let m = 2 * n - 2;
        let extremal = gen_r(m, n).unwrap();
        // Independent pipeline: own enumeration, permutation-based IT check,
        // isomorphism by full row, column and symbol permutation.
        let mut free = BTreeSet::new();
        let mut expected = 0;
        let matrices = common::sorted_row_matrices(n, k, m);
        for rows in &matrices {
            let inst = Instance::row_latin(k, rows).unwrap();
            if !common::has_it(&inst) {
                if !common::iso_brute(&inst, &extremal) {
                    expected += 1;
                }
                free.insert(inst.to_text());
            }
        }
        ensure(report.instances_scanned == matrices.len(), || {
            format!(
                "(n={n}, k={k}) scanned {} of {}",
                report.instances_scanned,
                matrices.len()
            )
        })?;
        ensure(!report.budget_exceeded, || {
            format!("(n={n}, k={k}) ran out of budget")
        })?;
        let reported: BTreeSet<String> = report
            .transversal_free
            .iter()
            .map(Instance::to_text)
            .collect();
        ensure(reported == free, || {
            format!("(n={n}, k={k}) transversal-free census differs")
        })?;
        for inst in &report.transversal_free {
            ensure(!common::has_it(inst), || {
                format!("(n={n}, k={k}) census holds an instance with an IT")
            })?;
        }
        ensure(report.counterexamples.len() == expected, || {
            format!(
                "(n={n}, k={k}) {} counterexamples, independent count {expected}",
                report.counterexamples.len()
            )
        })?;
        report.reverify().map_err(|e| e.to_string())?;
        details.push(format!(
            "(n={n}, k={k}): {} scanned, {} transversal-free, {} counterexamples",
            matrices.len(),
            free.len(),
            expected
        ));
    }
    Ok(details.join("; "))
}
