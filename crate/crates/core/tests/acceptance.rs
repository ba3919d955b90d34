// Acceptance run: prints one PASS/FAIL line per criterion with its runtime
// and exits nonzero if any criterion fails.

mod common;

use conormal::bipermutohedral::{
    biflag_of_bisequence, bipermutohedron_vertex, bisequence_of_biflag, count_chambers, enumerate_bipermutations,
    enumerate_bisubsets, Biflag, Bisequence,
};
use conormal::conormal::{csm_cycle, Bergman, Conormal};
use conormal::hodge::{self, lefschetz_report};
use conormal::linalg::q;
use conormal::verify;
use conormal::weights::{self, cap, is_balanced, MinkowskiWeight, PiecewiseLinearClass};
use conormal::{bits, corpus, Matroid};
use rand::{Rng, SeedableRng};
use std::collections::BTreeSet;
use std::time::Instant;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn corpus() -> Vec<Matroid> {
    corpus::standard_corpus(6, 6).expect("corpus builds")
}

fn label(m: &Matroid) -> String {
    m.name().unwrap_or("?").to_string()
}

fn pyramid_expansion() -> conormal::Result<(Conormal, Vec<conormal::conormal::Expansion>)> {
    let m = corpus::pyramid();
    let cn = Conormal::new(&m)?;
    let empty = Biflag::new(m.ground_size(), vec![])?;
    let levels = cn.expansion_levels(&empty, cn.dim())?;
    Ok((cn, levels))
}

fn criterion_1() -> Outcome {
    let (_, levels) = pyramid_expansion().map_err(|e| e.to_string())?;
    let sizes: Vec<u64> = levels.iter().map(|l| l.size()).collect();
    let distinct: Vec<usize> = levels.iter().map(|l| l.distinct()).collect();
    ensure(sizes == [1, 29, 352, 658, 383, 69, 3], || format!("sizes {sizes:?}"))?;
    ensure(distinct == [1, 29, 333, 621, 370, 68, 3], || format!("distinct {distinct:?}"))?;
    Ok(format!("sizes {sizes:?}, distinct {distinct:?}"))
}

fn criterion_2() -> Outcome {
    let (cn, levels) = pyramid_expansion().map_err(|e| e.to_string())?;
    let m = cn.matroid();
    let bnbc: Vec<String> = m.bnbc_bases().into_iter().map(bits::label).collect();
    ensure(bnbc == ["0456", "0457", "0467"], || format!("bnbc bases {bnbc:?}"))?;
    let cones: BTreeSet<Biflag> = m.bnbc_bases().into_iter().map(|b| cn.beta_cone(b)).collect::<conormal::Result<_>>().map_err(|e| e.to_string())?;
    let top = levels.last().ok_or("no levels")?;
    let terms: BTreeSet<Biflag> = top.terms.keys().cloned().collect();
    ensure(terms == cones && top.terms.values().all(|&c| c == 1), || "top terms differ from the beta cones".into())?;
    Ok(format!("top terms are the cones of {bnbc:?}"))
}

fn criterion_3() -> Outcome {
    let corpus = corpus();
    for m in &corpus {
        let cn = Conormal::new(m).map_err(|e| e.to_string())?;
        let empty = Biflag::new(m.ground_size(), vec![]).map_err(|e| e.to_string())?;
        let by_expansion = cn.deg_monomial_delta(&empty, cn.dim()).map_err(|e| e.to_string())? as i64;
        let by_weights = cn.delta_power_weights().map_err(|e| e.to_string())?.last().map(|w| w.values[0]).ok_or("no weights")?;
        let (mobius, dc) = (m.beta(), m.beta_deletion_contraction());
        ensure(by_expansion == mobius && mobius == dc && by_weights == q(mobius), || {
            format!("{}: expansion {by_expansion}, weights {by_weights}, mobius {mobius}, deletion-contraction {dc}", label(m))
        })?;
    }
    Ok(format!("{} matroids", corpus.len()))
}

fn per_matroid(check: impl Fn(&Matroid) -> conormal::Result<(bool, serde_json::Value)>) -> Outcome {
    let corpus = corpus();
    for m in &corpus {
        let (agree, details) = check(m).map_err(|e| format!("{}: {e}", label(m)))?;
        ensure(agree, || format!("{}: {details}", label(m)))?;
    }
    Ok(format!("{} matroids", corpus.len()))
}

fn criterion_4() -> Outcome {
    per_matroid(|m| {
        let (agree, rows) = verify::csm_rows(m, 0..m.full_rank())?;
        Ok((agree, serde_json::json!(rows)))
    })
}

fn criterion_5() -> Outcome {
    let summary = per_matroid(verify::char_poly_identity)?;
    let cn = Conormal::new(&corpus::pyramid()).map_err(|e| e.to_string())?;
    let degrees = cn.gamma_delta_degrees().map_err(|e| e.to_string())?;
    ensure(degrees == [3, 6, 4, 1], || format!("pyramid degrees {degrees:?}"))?;
    Ok(format!("{summary}; pyramid degrees {degrees:?}"))
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    let corpus = corpus();
    for m in corpus.iter().filter(|m| m.ground_size() <= 7) {
        let (agree, details) = verify::vanishing(m, 2).map_err(|e| e.to_string())?;
        ensure(agree, || format!("{}: {details}", label(m)))?;
        checked += details["checked"].as_u64().unwrap_or(0);
    }
    Ok(format!("{checked} biflags checked"))
}

fn criterion_7() -> Outcome {
    for g in 2..=3 {
        let mut seen = BTreeSet::new();
        for b in enumerate_bipermutations(g) {
            let f = biflag_of_bisequence(&b);
            ensure(bisequence_of_biflag(&f).ok() == Some(b.clone()), || format!("round trip fails at {b:?}"))?;
            seen.insert(f);
        }
        ensure(seen.len() as u128 == count_chambers(g), || format!("|E| = {g}: biflags not distinct"))?;
    }
    for n in 1..=3u32 {
        let g = n as usize + 1;
        let rays = enumerate_bisubsets(g).len();
        let chambers = enumerate_bipermutations(g).count() as u128;
        let factorial: u128 = (1..=(2 * n as u128 + 2)).product();
        ensure(rays == 3 * (3usize.pow(n) - 1), || format!("n = {n}: {rays} rays"))?;
        ensure(chambers == factorial / 2u128.pow(n + 1), || format!("n = {n}: {chambers} chambers"))?;
    }
    let b = Bisequence::parse(4, "1|2|3|1|3|0|0").map_err(|e| e.to_string())?;
    let v = bipermutohedron_vertex(&b).map_err(|e| e.to_string())?;
    ensure(v.x == [5, -7, 3, -1] && v.y == [-7, -1, 11, -3], || format!("vertex {v:?}"))?;
    Ok("round trips, counts, and vertex match".into())
}

fn criterion_8() -> Outcome {
    let corpus = corpus();
    for m in &corpus {
        let cn = Conormal::new(m).map_err(|e| e.to_string())?;
        ensure(is_balanced(cn.fan(), &MinkowskiWeight::fundamental(cn.fan())).unwrap_or(false), || format!("{}: fundamental", label(m)))?;
        let b = Bergman::new(m).map_err(|e| e.to_string())?;
        for k in 0..m.full_rank() {
            let w = csm_cycle(m, k).and_then(|c| c.to_minkowski(&b)).map_err(|e| e.to_string())?;
            ensure(is_balanced(&b.fan, &w).unwrap_or(false), || format!("{}: csm_{k}", label(m)))?;
        }
    }
    let fans = common::sample_fans();
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    let cases = 1000;
    for case in 0..cases {
        let fan = &fans[rng.gen_range(0..fans.len())];
        let mut w = MinkowskiWeight::fundamental(fan);
        while w.k > 0 {
            let values: Vec<i64> = (0..fan.rays().len()).map(|_| rng.gen_range(-5..=5)).collect();
            w = cap(fan, &PiecewiseLinearClass::from_integers(&values), &w).map_err(|e| e.to_string())?;
            ensure(weights::is_balanced(fan, &w).unwrap_or(false), || format!("random case {case} unbalanced"))?;
            if rng.gen_bool(0.3) {
                break;
            }
        }
    }
    Ok(format!("{} matroids, {cases} random caps", corpus.len()))
}

fn criterion_9() -> Outcome {
    let mut reports = Vec::new();
    for (r, n) in [(2, 3), (2, 4), (3, 4)] {
        let cn = Conormal::new(&Matroid::uniform(r, n).unwrap()).map_err(|e| e.to_string())?;
        let rep = lefschetz_report(cn.fan(), &cn.support_function(), 1).map_err(|e| e.to_string())?;
        reports.push((format!("conormal U({r},{n})"), rep));
    }
    for (r, n) in [(2, 3), (2, 4)] {
        let b = Bergman::new(&Matroid::uniform(r, n).unwrap()).map_err(|e| e.to_string())?;
        let rep = lefschetz_report(&b.fan, &b.support_function(), 1).map_err(|e| e.to_string())?;
        reports.push((format!("bergman U({r},{n})"), rep));
    }
    let mut notes = Vec::new();
    for (name, rep) in &reports {
        ensure(rep.pd.iter().all(|&x| x), || format!("{name}: PD {:?}", rep.pd))?;
        let positive = !rep.top_degree.starts_with('-') && rep.top_degree != "0";
        ensure(positive, || format!("{name}: top degree {}", rep.top_degree))?;
        for h in &rep.hr {
            let expected = hodge::expected_hr_signature(&rep.betti, h.k);
            ensure(h.signature == expected && h.zero == 0, || format!("{name}: HR{} {h:?}", h.k))?;
        }
        if rep.dim >= 2 {
            ensure(rep.hr.iter().any(|h| h.k == 1), || format!("{name}: HR1 missing"))?;
        }
        notes.push(format!("{name} betti {:?}", rep.betti));
    }
    Ok(notes.join("; "))
}

fn criterion_10() -> Outcome {
    per_matroid(verify::log_concavity)
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("expansion sizes of the pyramid", criterion_1),
        ("top power of delta on the pyramid", criterion_2),
        ("degree of delta^(n-1) equals beta", criterion_3),
        ("CSM cycles as pushforwards", criterion_4),
        ("characteristic polynomial from mixed degrees", criterion_5),
        ("vanishing off orthogonal biflags", criterion_6),
        ("bipermutohedral bijection and counts", criterion_7),
        ("balancing of weights and caps", criterion_8),
        ("PD and HR on desk-scale fans", criterion_9),
        ("log-concavity and Alexandrov-Fenchel", criterion_10),
    ];
    let total = Instant::now();
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(note) => println!("criterion {:>2} PASS ({ms} ms) {name}: {note}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL ({ms} ms) {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass in {} ms", criteria.len() - failures, criteria.len(), total.elapsed().as_millis());
    if failures > 0 {
        std::process::exit(1);
    }
}
