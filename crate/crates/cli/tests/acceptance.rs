//! One PASS/FAIL line per acceptance criterion.
//!
//! Criterion 3 is a known failure: the first noncyclic family produces cyclic
//! quadrilaterals (rectangles, isosceles trapezoids) wherever its (s1 : s2)
//! coincides with the cyclic family's choice. The line stays FAIL and lists
//! the counterexamples; the run only fails if anything else goes wrong or if
//! criterion 3 unexpectedly passes.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use ratquad::classical::{brahmagupta, classify_cyclic, cos_sq_u, ptolemy_holds};
use ratquad::curve::{mine, MineConfig, MineOutcome};
use ratquad::generators::{
    arity, cyclic_circumradius, cyclic_s, family_base_params, gen_cyclic, generate,
    record_from_base,
};
use ratquad::oracle::{conditions_hold, cross_validate};
use ratquad::{record, Error, Family, ParamSet, Quadrilateral, Rational};

const KNOWN_RED: &[u32] = &[3];
const SWEEP: usize = 100;
const FAMILIES: [Family; 4] = [
    Family::Cyclic,
    Family::NoncyclicA,
    Family::NoncyclicB,
    Family::TwoEqualSides,
];

type Verdict = Result<String, String>;
type FamilySweep = (Family, Vec<(Vec<Rational>, Quadrilateral)>);

fn ratquad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ratquad"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn r(n: i64) -> Rational {
    Rational::from(n)
}

fn tuple_string(rec: &Quadrilateral) -> String {
    let (lens, area) = rec.tuple();
    let mut parts: Vec<String> = lens.iter().map(|v| v.to_string()).collect();
    parts.push(area.to_string());
    format!("({})", parts.join(","))
}

/// `SWEEP` admissible random tuples per family, drawn from a fixed seed.
fn sweeps() -> Result<Vec<FamilySweep>, String> {
    let mut out = Vec::new();
    for (i, family) in FAMILIES.into_iter().enumerate() {
        let mut rng = StdRng::seed_from_u64(1000 + i as u64);
        let n = arity(family).unwrap();
        let mut found = Vec::new();
        let mut tries = 0;
        while found.len() < SWEEP {
            tries += 1;
            if tries > 100 * SWEEP {
                return Err(format!("{family}: only {} admissible tuples", found.len()));
            }
            let params: Vec<Rational> = (0..n)
                .map(|_| {
                    let num = rng.gen_range(1..=20);
                    let den = if rng.gen_bool(0.2) {
                        rng.gen_range(2..=3)
                    } else {
                        1
                    };
                    Rational::new(num, den).unwrap()
                })
                .collect();
            match generate(family, &params) {
                Ok(rec) => found.push((params, rec)),
                Err(Error::ClosedFormMismatch(m)) => return Err(format!("{family}: {m}")),
                Err(_) => {}
            }
        }
        out.push((family, found));
    }
    Ok(out)
}

fn criterion_1() -> Verdict {
    let cases: [(&[&str], &str); 4] = [
        (
            &["gen", "cyclic", "4", "1", "3", "1", "2", "1"],
            "51,40,68,75,77,84,3234",
        ),
        (
            &["gen", "noncyclic-a", "3", "1", "2", "1", "3", "1"],
            "748,561,615,1000,935,1068,490314",
        ),
        (
            &["gen", "noncyclic-b", "1", "2", "1", "5"],
            "125,260,273,84,315,169,26334",
        ),
        (
            &["gen", "kite", "1", "3", "1", "3"],
            "25,25,30,14,40,25,468",
        ),
    ];
    let mut slowest = Duration::ZERO;
    for (args, want) in cases {
        let mut full = args.to_vec();
        full.extend(["--format", "csv"]);
        let t = Instant::now();
        let out = ratquad(&full);
        slowest = slowest.max(t.elapsed());
        let text = stdout(&out);
        let row = text.lines().nth(1).unwrap_or_default();
        if !out.status.success() || !row.starts_with(&format!("{want},")) {
            return Err(format!("{} gave {row:?}", args[1]));
        }
    }
    Ok(format!("all four tuples exact, slowest run {slowest:.1?}"))
}

fn criterion_2(sweeps: &[FamilySweep]) -> Verdict {
    let mut checked = 0;
    for (family, samples) in sweeps {
        let records: Vec<Quadrilateral> = samples.iter().map(|(_, rec)| rec.clone()).collect();
        for (params, rec) in samples {
            if !conditions_hold(&rec.placement) || !rec.placement.equations_hold() {
                return Err(format!("{family} {params:?} is not sound"));
            }
        }
        let report = cross_validate(&records);
        if !report.is_clean() {
            return Err(format!("{family}: {:?}", report.disagreements[0]));
        }
        checked += records.len();
    }
    let mined = mine(
        &ParamSet::from_ints([4, 1, 3, 1, 2, 1]),
        &MineConfig::default(),
    )
    .map_err(|e| e.to_string())?;
    for rec in &mined.records {
        if !conditions_hold(&rec.placement) {
            return Err("a mined record is not sound".into());
        }
    }
    if !cross_validate(&mined.records).is_clean() {
        return Err("mined records fail cross-validation".into());
    }
    checked += mined.records.len();
    Ok(format!(
        "{checked} records ({SWEEP} per family plus {} mined), zero failures",
        mined.records.len()
    ))
}

fn criterion_3(sweeps: &[FamilySweep]) -> Verdict {
    let mut counterexamples = Vec::new();
    let mut on_locus = 0;
    for (family, samples) in sweeps {
        for (params, rec) in samples {
            let cyclic = classify_cyclic(rec);
            if *family == Family::Cyclic {
                if !cyclic || !ptolemy_holds(rec) {
                    return Err(format!("cyclic {params:?} fails classification or Ptolemy"));
                }
                let pqr: [Rational; 6] = params.clone().try_into().unwrap();
                let expected = &rec.scale * cyclic_circumradius(&pqr);
                let [a, b, c, d] = rec.sides.clone().map(Rational::from);
                let data = brahmagupta(&a, &b, &c, &d).map_err(|e| e.to_string())?;
                if data.circumradius_squared != expected.square() {
                    return Err(format!(
                        "cyclic {params:?}: circumradius is not the scaled closed form"
                    ));
                }
            } else if cyclic {
                let ps = family_base_params(*family, params).unwrap();
                let (c1, c2) = cyclic_s(&ps);
                if ps.s1.as_ref().unwrap() * &c2 == ps.s2.as_ref().unwrap() * &c1 {
                    on_locus += 1;
                }
                let shown: Vec<String> = params.iter().map(|v| v.to_string()).collect();
                counterexamples.push(format!(
                    "{family} ({}) -> {}",
                    shown.join(","),
                    tuple_string(rec)
                ));
            }
        }
    }
    // A fixed witness as well, so the verdict does not hinge on the seed.
    let rect =
        generate(Family::NoncyclicA, &[3, 1, 2, 1, 2, 1].map(r)).map_err(|e| e.to_string())?;
    if classify_cyclic(&rect) {
        counterexamples.push(format!(
            "noncyclic-a (3,1,2,1,2,1) -> {}",
            tuple_string(&rect)
        ));
        on_locus += 1;
    }
    if counterexamples.is_empty() {
        return Ok("cyclic records classify, obey Ptolemy and match the scaled circumradius; no other family is cyclic".into());
    }
    let shown: Vec<&str> = counterexamples.iter().take(3).map(String::as_str).collect();
    Err(format!(
        "cyclic clauses hold, but {} noncyclic-family record(s) are cyclic, {} of them on the cyclic family's (s1:s2) locus: {}",
        counterexamples.len(),
        on_locus,
        shown.join("; ")
    ))
}

fn criterion_4(sweeps: &[FamilySweep]) -> Verdict {
    for (family, samples) in sweeps {
        for (params, rec) in samples {
            let ps = family_base_params(*family, params).map_err(|e| e.to_string())?;
            let again =
                record_from_base(&ps, *family).map_err(|e| format!("{family} {params:?}: {e}"))?;
            if !again.same_figure(rec) {
                return Err(format!(
                    "{family} {params:?}: closed form and base path differ"
                ));
            }
        }
    }
    Ok(format!(
        "closed form equals base path on {} sweep points",
        SWEEP * FAMILIES.len()
    ))
}

fn criterion_5() -> Verdict {
    let t = Instant::now();
    let out = ratquad(&["search", "--emax", "100", "--cmax", "100"]);
    let elapsed = t.elapsed();
    if !out.status.success() {
        return Err(format!("search exited with {:?}", out.status.code()));
    }
    let records = record::read_json_lines(&stdout(&out)).map_err(|e| e.to_string())?;
    let target = gen_cyclic(ParamSet::from_ints([4, 1, 3, 1, 2, 1]).into_pqr())
        .map_err(|e| e.to_string())?;
    if !records.iter().any(|rec| rec.is_equivalent(&target)) {
        return Err("(51,40,68,75,77,84) not found".into());
    }
    let report = cross_validate(&records);
    if !report.is_clean() {
        return Err(format!("{} disagreements", report.disagreements.len()));
    }
    if elapsed > Duration::from_secs(300) {
        return Err(format!("took {elapsed:.1?}"));
    }
    Ok(format!(
        "{} records in {elapsed:.1?}, contains (51,40,68,75,77,84), zero disagreements",
        records.len()
    ))
}

fn criterion_6() -> Verdict {
    let t = Instant::now();
    let ps = ParamSet::from_ints([4, 1, 3, 1, 2, 1]);
    let report = mine(
        &ps,
        &MineConfig {
            multiples: 5,
            ..Default::default()
        },
    )
    .map_err(|e| e.to_string())?;
    let cyclic = gen_cyclic(ps.clone().into_pqr()).map_err(|e| e.to_string())?;
    match report.entries.first().map(|e| &e.outcome) {
        Some(MineOutcome::Mined(0)) if report.records[0].tuple() == cyclic.tuple() => {}
        _ => return Err("n = 1 does not reproduce the cyclic record".into()),
    }
    if !report.multiples_distinct() {
        return Err("multiples 1..5 are not pairwise distinct".into());
    }
    if !report.round_trips_hold() {
        return Err("quartic/cubic round trip failed".into());
    }
    if report
        .records
        .iter()
        .any(|rec| !conditions_hold(&rec.placement))
    {
        return Err("a mined record is not sound".into());
    }
    let cli = ratquad(&["mine", "4", "1", "3", "1", "2", "1", "--multiples", "5"]);
    let cli_records = record::read_json_lines(&stdout(&cli)).map_err(|e| e.to_string())?;
    if !cli.status.success() || cli_records != report.records {
        return Err("CLI mine output differs from the library".into());
    }
    let heights: Vec<String> = report
        .entries
        .iter()
        .map(|e| e.cubic_point.height_bits().to_string())
        .collect();
    Ok(format!(
        "n=1 is the cyclic record, 5 distinct multiples (heights {} bits), {} records, round trips hold, {:.1?}",
        heights.join("/"),
        report.records.len(),
        t.elapsed()
    ))
}

fn criterion_7() -> Verdict {
    let b = generate(Family::NoncyclicB, &[1, 2, 1, 5].map(r)).map_err(|e| e.to_string())?;
    let cos2 = cos_sq_u(&b).map_err(|e| e.to_string())?;
    if cos2 != Rational::new(1, 10).unwrap() {
        return Err(format!("cos^2 u = {cos2}"));
    }
    let data = brahmagupta(&r(51), &r(40), &r(68), &r(75)).map_err(|e| e.to_string())?;
    let radius = data.circumradius_squared.sqrt_exact();
    if radius != Some(Rational::new(85, 2).unwrap()) {
        return Err(format!("R^2 = {}", data.circumradius_squared));
    }
    Ok("cos^2 u = 1/10 and R = 85/2".into())
}

fn main() {
    let total = Instant::now();
    let sweeps = sweeps();
    let from_sweeps = |f: fn(&[FamilySweep]) -> Verdict| match &sweeps {
        Ok(s) => f(s),
        Err(e) => Err(format!("sweep failed: {e}")),
    };
    let results: Vec<(u32, &str, Verdict)> = vec![
        (1, "paper tuple reproduction", criterion_1()),
        (2, "soundness", from_sweeps(criterion_2)),
        (3, "cyclic completeness", from_sweeps(criterion_3)),
        (4, "base/closed-form agreement", from_sweeps(criterion_4)),
        (5, "oracle equivalence", criterion_5()),
        (6, "curve mining", criterion_6()),
        (7, "derived constants", criterion_7()),
    ];
    let mut unexpected = 0;
    for (n, name, verdict) in &results {
        let known = KNOWN_RED.contains(n);
        match verdict {
            Ok(detail) => {
                println!("PASS criterion {n} ({name}): {detail}");
                if known {
                    println!("     criterion {n} was expected to fail; update the known-red list");
                    unexpected += 1;
                }
            }
            Err(detail) => {
                let tag = if known { " [known red]" } else { "" };
                println!("FAIL criterion {n} ({name}){tag}: {detail}");
                if !known {
                    unexpected += 1;
                }
            }
        }
    }
    let passed = results.iter().filter(|(_, _, v)| v.is_ok()).count();
    println!(
        "acceptance: {passed}/{} criteria pass in {:.1?}",
        results.len(),
        total.elapsed()
    );
    if unexpected > 0 {
        std::process::exit(1);
    }
}
