//! Acceptance suite: every criterion is checked exactly and reported on its
//! own line. Runs as a plain binary so the lines always reach the output.

use std::time::Instant;

use hsd::clifford::{
    cg_oracle_compare, symbol_det_expected, symbol_det_poly, torus_kernel_dims, verify_algebra,
};
use hsd::exact::{q, Rational};
use hsd::sphere::{
    check_eigenvalue_bounds, dplus_kernel_formula, kernel_dimension, spectrum_block, verify_adjoint_blocks,
    verify_gram, verify_s3_identities, BlockKind, BlockStore,
};
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn algebra() -> Outcome {
    let r = verify_algebra(20);
    ensure(r.entries.len() == 21 * 11, || format!("expected 231 entries, got {}", r.entries.len()))?;
    let first = r.failures().next().map(|f| format!("{} failed at {:?}", f.check, f.params));
    match first {
        Some(why) => Err(why),
        None => Ok(format!("{} identity checks over m ≤ 20", r.entries.len())),
    }
}

fn clebsch_gordan() -> Outcome {
    for m in 0..=8u32 {
        let r = cg_oracle_compare(m);
        if let Some(f) = r.failures().next() {
            return Err(format!("m = {m}: {} {:?}", f.check, f.witness));
        }
        let mq = Rational::from_integer(m as i64);
        let expect = [
            ("cg_zero", &(&mq * &(&mq + &q(2, 1))) * &q(1, 4), m >= 1),
            ("cg_plus", &(&(&mq + &q(1, 1)) * &(&mq + &q(2, 1))) * &q(1, 2), true),
            ("cg_minus", &(&mq * &(&mq + &q(1, 1))) * &q(1, 2), m >= 2),
        ];
        for (check, value, present) in expect {
            let e = r.find(check).next().ok_or_else(|| format!("missing {check}"))?;
            if present {
                let got = e.values.get("squared_constant").and_then(|v| v.as_str()).unwrap_or("");
                ensure(got == value.to_string(), || format!("m = {m} {check}: {got} != {value}"))?;
            }
        }
    }
    Ok("squared constants exact for m ≤ 8".into())
}

fn symbol() -> Outcome {
    for m in 0..=9u32 {
        let det = symbol_det_poly(m);
        ensure(det == symbol_det_expected(m), || format!("m = {m}: determinant polynomial differs"))?;
        if m % 2 == 0 {
            ensure(det.is_zero(), || format!("m = {m}: not identically zero"))?;
        }
    }
    Ok("odd m ≤ 9 match, even m ≤ 8 vanish".into())
}

fn dirac_spin_half(store: &BlockStore) -> Outcome {
    let mut agg: std::collections::BTreeMap<Rational, usize> = Default::default();
    for n in 0..=6u32 {
        let r = spectrum_block(store, BlockKind::D0, 1, n).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("n = {n}: spectrum incomplete"))?;
        for (v, k) in r.eigenvalues() {
            *agg.entry(v.clone()).or_default() += k;
        }
        if n == 1 {
            let got: Vec<_> = r.eigenvalues().map(|(v, k)| (v.to_string(), k)).collect();
            ensure(got == vec![("-3/2".to_string(), 2), ("5/2".to_string(), 6)], || format!("block (1,1): {got:?}"))?;
        }
    }
    // degrees ≤ 6 contain +(k+3/2) for k ≤ 6 and -(k+3/2) for k ≤ 5, each (k+1)(k+2) times
    let mut expected: std::collections::BTreeMap<Rational, usize> = Default::default();
    for k in 0..=6i64 {
        let v = q(2 * k + 3, 2);
        let mult = ((k + 1) * (k + 2)) as usize;
        expected.insert(v.clone(), mult);
        if k <= 5 {
            expected.insert(-&v, mult);
        }
    }
    ensure(agg == expected, || format!("aggregate spectrum {agg:?}"))?;
    Ok(format!("{} distinct eigenvalues over n ≤ 6", agg.len()))
}

fn general_spectra(store: &BlockStore) -> Outcome {
    let kinds = [BlockKind::D0, BlockKind::DplusDminus, BlockKind::DminusDplus, BlockKind::Lap, BlockKind::LapTilde];
    let jobs: Vec<(BlockKind, u32, u32)> =
        kinds.iter().flat_map(|&k| (0..=4).flat_map(move |m| (0..=6).map(move |n| (k, m, n)))).collect();
    let bad: Vec<String> = jobs
        .par_iter()
        .filter_map(|&(k, m, n)| match spectrum_block(store, k, m, n) {
            Ok(r) if r.passed() && r.accounted == (n as usize + 1).pow(2) * (m as usize + 1) => None,
            Ok(r) => Some(format!("{k} m={m} n={n}: accounted {} of {}", r.accounted, r.dimension)),
            Err(e) => Some(format!("{k} m={m} n={n}: {e}")),
        })
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("{} blocks fully accounted", jobs.len()))
}

fn kernels(store: &BlockStore) -> Outcome {
    for m in 0..=4u32 {
        let r = kernel_dimension(store, BlockKind::Dplus, m, 6).map_err(|e| e.to_string())?;
        let want = dplus_kernel_formula(m);
        ensure(r.status.is_pass() && r.dimension == Some(want), || format!("ker D+_{m}: {:?} != {want}", r.dimension))?;
    }
    for p in 0..=2u32 {
        let r = kernel_dimension(store, BlockKind::LapTilde, 2 * p, 6).map_err(|e| e.to_string())?;
        let want = ((p + 1) * (p + 1)) as usize;
        ensure(r.status.is_pass() && r.dimension == Some(want), || format!("ker lap-tilde_{}: {:?}", 2 * p, r.dimension))?;
    }
    for m in 1..=4u32 {
        let r = kernel_dimension(store, BlockKind::Lap, m, 6).map_err(|e| e.to_string())?;
        ensure(r.per_degree.iter().all(|d| d.nullity == 0), || format!("ker lap_{m} nonzero"))?;
    }
    for m in [1u32, 3] {
        let r = kernel_dimension(store, BlockKind::D0, m, 6).map_err(|e| e.to_string())?;
        ensure(r.per_degree.iter().all(|d| d.nullity == 0), || format!("ker D0_{m} nonzero"))?;
    }
    Ok("ker D+ = 1, 4, 10, 20, 35; ker lap-tilde = 1, 4, 9".into())
}

fn curvature(store: &BlockStore) -> Outcome {
    let jobs: Vec<(u32, u32)> = (0..=4).flat_map(|m| (0..=6).map(move |n| (m, n))).collect();
    let bad: Vec<String> = jobs
        .par_iter()
        .filter_map(|&(m, n)| match verify_s3_identities(store, m, n) {
            Ok(r) if r.passed() => None,
            Ok(r) => Some(format!("m={m} n={n}: {:?}", r.failures().map(|f| &f.check).collect::<Vec<_>>())),
            Err(e) => Some(e.to_string()),
        })
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("{} (m, n) pairs, d∘d = 0 at m = 0", jobs.len()))
}

fn adjointness(store: &BlockStore) -> Outcome {
    for m in 0..=3u32 {
        for n in 0..=4u32 {
            let r = verify_adjoint_blocks(store, m, n).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("m={m} n={n} adjointness"))?;
        }
    }
    for n in 0..=2u32 {
        ensure(verify_gram(n).map_err(|e| e.to_string())?.passed(), || format!("gram n={n}"))?;
    }
    Ok("blocks m ≤ 3, n ≤ 4; Gram n ≤ 2".into())
}

fn bounds(store: &BlockStore) -> Outcome {
    let reports: Vec<_> = (0..=4u32).map(|m| check_eigenvalue_bounds(store, m, 6).map_err(|e| e.to_string())).collect::<Result<_, _>>()?;
    for r in &reports {
        ensure(r.status.is_pass(), || format!("m = {}: bound check failed", r.m))?;
    }
    let r1 = &reports[1];
    let f = r1.friedrich.as_ref().ok_or("no Friedrich check at m = 1")?;
    ensure(r1.lambda1 == q(9, 4) && f.bound == q(9, 4) && f.equality, || "m = 1 Friedrich equality".into())?;
    let r2 = &reports[2];
    let mins = r2.minimizers.as_ref().ok_or("no minimizer check at m = 2")?;
    ensure(
        r2.lambda1 == q(12, 1) && r2.lambda_bound == q(12, 1) && mins.contained && mins.operator == BlockKind::LapTilde,
        || "m = 2 equality case".into(),
    )?;
    Ok("λ₁(Δ₁) = 9/4, λ₁(Δ₂) = 12, bounds hold for m ≤ 4".into())
}

fn torus() -> Outcome {
    for m in 0..=5u32 {
        let t = torus_kernel_dims(m);
        let d0 = (m % 2 == 1).then_some(m as usize + 1);
        ensure(t.certified && t.dplus == m as usize + 1 && t.d0 == d0, || format!("m = {m}: {t:?}"))?;
    }
    Ok("m ≤ 5 certified at e₁".into())
}

type Criterion<'a> = (&'a str, Box<dyn Fn() -> Outcome + Sync + 'a>);

fn main() {
    let store = BlockStore::new();
    let criteria: Vec<Criterion> = vec![
        ("algebraic identities", Box::new(algebra)),
        ("Clebsch-Gordan consistency", Box::new(clebsch_gordan)),
        ("symbol determinant", Box::new(symbol)),
        ("Dirac spectrum, spin 1/2", Box::new(|| dirac_spin_half(&store))),
        ("general spectra", Box::new(|| general_spectra(&store))),
        ("kernel dimensions", Box::new(|| kernels(&store))),
        ("constant-curvature identities", Box::new(|| curvature(&store))),
        ("adjointness on S3", Box::new(|| adjointness(&store))),
        ("eigenvalue bounds", Box::new(|| bounds(&store))),
        ("torus kernels", Box::new(torus)),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed in {:.1}s", criteria.len() - failed, start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
