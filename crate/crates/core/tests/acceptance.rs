//! Acceptance run: prints one PASS/FAIL line per primary criterion and
//! exits non-zero if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use photonloc::algebra::exprs_vanish;
use photonloc::reps::{hawton_q, random_wavefn, rotations_m, Representation};
use photonloc::verify::{self, full_report, Expected, Report, Selection, Status, VerifyConfig};
use photonloc::{Expr, RepKind, SamplePlan, WaveFn};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn status(report: &Report, suite: &str, rep: &str, condition: &str) -> Result<Status, String> {
    report
        .conditions()
        .find(|c| c.suite == suite && c.representation == rep && c.condition == condition)
        .map(|c| c.status)
        .ok_or_else(|| format!("missing {suite} [{rep}] {condition}"))
}

fn expect(
    report: &Report,
    suite: &str,
    rep: &str,
    condition: &str,
    want: Status,
) -> Result<(), String> {
    let got = status(report, suite, rep, condition)?;
    if got == want {
        Ok(())
    } else {
        Err(format!("{suite} [{rep}] {condition}: {got}, wanted {want}"))
    }
}

fn lie_algebra(report: &Report) -> Check {
    let mut total = 0;
    for kind in RepKind::ALL {
        let conds: Vec<_> = report
            .conditions()
            .filter(|c| c.suite == "lie-algebra" && c.representation == kind.name())
            .collect();
        if conds.len() != 8 {
            return Err(format!("{}: {} bracket families", kind.name(), conds.len()));
        }
        if let Some(c) = conds.iter().find(|c| c.status != Status::Pass) {
            return Err(format!("{} {}: {}", kind.name(), c.condition, c.status));
        }
        total += conds.len();
    }
    Ok(format!(
        "{total} bracket families over 4 generator sets, 0 mismatches"
    ))
}

fn helicity(report: &Report) -> Check {
    for id in [
        "cube",
        "projector-idempotent",
        "projector-hermitian",
        "commutes-with-generators",
    ] {
        expect(report, "helicity", "original", id, Status::Pass)?;
    }
    let generators = Representation::build(RepKind::Original).generators().len();
    if generators != 10 {
        return Err(format!("{generators} generators"));
    }
    let classified: Vec<_> = report
        .conditions()
        .filter(|c| c.suite == "helicity" && c.condition.starts_with("classify:"))
        .collect();
    let count = |suffix: &str| {
        classified
            .iter()
            .filter(|c| c.condition.ends_with(suffix))
            .count()
    };
    let (t, l) = (count("transverse"), count("longitudinal"));
    let m = classified.len() - t - l;
    if t < 3 || l < 2 || m < 1 {
        return Err(format!(
            "catalog has {t} transverse, {l} longitudinal, {m} mixed"
        ));
    }
    if let Some(c) = classified.iter().find(|c| c.status != Status::Pass) {
        return Err(format!("{}: {}", c.condition, c.status));
    }
    Ok(format!(
        "L^3=L, (L^2)^2=L^2, [L,G]=0 for {generators} generators, {} functions classified ({t}T/{l}L/{m}M)",
        classified.len()
    ))
}

fn pauli_lubanski(report: &Report) -> Check {
    for kind in RepKind::ALL {
        let rep = kind.name();
        let w = match kind {
            RepKind::Original | RepKind::Tilde => "W=Lambda P",
            RepKind::Hat | RepKind::Auxiliary => "W=0",
        };
        expect(report, "pauli-lubanski", rep, w, Status::Pass)?;
        expect(report, "pauli-lubanski", rep, "P.W=0", Status::Pass)?;
    }
    Ok("W=Lambda P (original, tilde), W=0 (hat, L/K), P.W=0 in all four".into())
}

fn pryce(report: &Report, config: &VerifyConfig) -> Check {
    let five = [
        "rotation-covariance",
        "translation-covariance",
        "parity-odd",
        "time-reversal-even",
        "helicity-projector-commutes",
    ];
    for id in five {
        expect(report, "position:pryce", "original", id, Status::Pass)?;
    }
    let commute = report
        .find("position:pryce", "components-commute")
        .ok_or("missing components-commute")?;
    let witness = match (&commute.status, &commute.witness) {
        (Status::Fail, Some(w)) => w.clone(),
        _ => return Err("components of X_P commute".into()),
    };
    let again = verify::run(
        config,
        &Selection {
            suite: Some("position".into()),
            representation: Some(RepKind::Original),
            operator: Some("pryce".into()),
        },
    )
    .map_err(|e| e.to_string())?;
    let rerun = again
        .find("position:pryce", "components-commute")
        .and_then(|c| c.witness.clone());
    if rerun.as_ref() != Some(&witness) {
        return Err("noncommuting witness differs between runs".into());
    }
    let quad = report
        .find("adjoint", "quadrature (g,X_P1 f)=(X_P1 g,f)")
        .ok_or("missing quadrature check")?;
    if quad.status != Status::Pass || quad.samples != 100_000 {
        return Err(format!(
            "quadrature: {} at {} samples",
            quad.status, quad.samples
        ));
    }
    Ok(format!(
        "5 conditions pass; [X1,X2] witness {} at {:?} reproduced; self-adjoint within 3 SE at 1e5 samples",
        witness.entry,
        witness.point.unwrap_or_default()
    ))
}

fn hawton_forms(report: &Report) -> Check {
    expect(
        report,
        "hawton-forms:hawton",
        "hat",
        "closed-form=UQU^+",
        Status::Pass,
    )?;
    expect(
        report,
        "hawton-forms:hawton",
        "hat",
        "Lhat=Qhat x P",
        Status::Pass,
    )?;
    expect(
        report,
        "hawton-forms:hawton",
        "hat",
        "Khat=(Qhat P0 + P0 Qhat)/2",
        Status::Pass,
    )?;
    expect(
        report,
        "hawton-forms",
        "original",
        "K=(Q P0 + P0 Q)/2",
        Status::Pass,
    )?;
    Ok("closed form = UQU^+ componentwise; Lhat=QhatxP, Khat and K symmetrized products".into())
}

fn hawton_failures(report: &Report) -> Check {
    let suite = "rotation-witness:hawton";
    expect(
        report,
        suite,
        "original",
        "[M1,Qhat1]f=0 on f=(a(p0),0,0)",
        Status::Fail,
    )?;
    let w = report
        .find(suite, "[M1,Qhat1]f=0 on f=(a(p0),0,0)")
        .and_then(|c| c.witness.clone())
        .ok_or("no witness recorded")?;
    // independent check at a fixed point
    let f = WaveFn::new([
        (&Expr::r() * &Expr::r()).neg().exp(),
        Expr::zero(),
        Expr::zero(),
    ]);
    let (m1, q1) = (&rotations_m()[0], &hawton_q()[0]);
    let g = m1.apply(&q1.apply(&f)).sub(&q1.apply(&m1.apply(&f)));
    let at = g.eval([1.0, 1.0, 0.5]).map_err(|e| e.to_string())?;
    let norm: f64 = at.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
    if norm < 1e-6 {
        return Err(format!("[M1,Qhat1]f vanishes at (1,1,0.5): {norm:e}"));
    }
    expect(
        report,
        "position:hawton",
        "original",
        "rotation-covariance",
        Status::Fail,
    )?;

    for c in report
        .conditions()
        .filter(|c| c.suite == "position:hawton" && c.representation == "hat")
    {
        if !matches!(c.status, Status::Pass | Status::VacuousPass) {
            return Err(format!("hat {}: {}", c.condition, c.status));
        }
    }
    expect(report, "pauli-lubanski", "hat", "W=0", Status::Pass)?;

    expect(
        report,
        "position:hawton",
        "tilde",
        "helicity-projector-commutes",
        Status::Fail,
    )?;
    expect(
        report,
        "transport:hawton",
        "tilde",
        "[Qhat,tilde L^2]=U[Q,L^2]U^+",
        Status::Pass,
    )?;
    expect(
        report,
        "transport:hawton",
        "tilde",
        "[Q,L^2]=0",
        Status::Fail,
    )?;
    Ok(format!(
        "original: [M1,Qhat1]f != 0 (|.|={norm:.3e} at (1,1,0.5), witness {}); hat: all pass, W=0; tilde: [Qhat,L~^2] != 0 = U[Q,L^2]U^+",
        w.entry
    ))
}

fn commutator_oracle() -> Check {
    let ops = common::catalog_ops();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let fs: Vec<WaveFn> = (0..5).map(|_| random_wavefn(&mut rng)).collect();
    let points = SamplePlan::default().points().map_err(|e| e.to_string())?;
    let mut checked = 0;
    for _ in 0..20 {
        let (na, a) = &ops[rng.gen_range(0..ops.len())];
        let (nb, b) = &ops[rng.gen_range(0..ops.len())];
        let closed = a.commutator(b);
        for (k, f) in fs.iter().enumerate() {
            let twice = a.apply(&b.apply(f)).sub(&b.apply(&a.apply(f)));
            let diff = closed.apply(f).sub(&twice);
            let test =
                exprs_vanish(&diff.entries("f"), &points, 1e-9).map_err(|e| e.to_string())?;
            if let Some(w) = test.witness() {
                return Err(format!(
                    "[{na},{nb}] on f{k}: {} = {} at {:?}",
                    w.entry, w.value, w.point
                ));
            }
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} (pair, function) cases x {} points at 1e-9",
        points.len()
    ))
}

fn determinism(report: &Report, config: &VerifyConfig) -> Check {
    let again = full_report(config).map_err(|e| e.to_string())?;
    if again.to_structured() != report.to_structured() {
        return Err("structured reports differ between runs".into());
    }
    for seed in 1..=10 {
        let mut c = config.clone();
        c.plan.seed = seed;
        let r = full_report(&c).map_err(|e| e.to_string())?;
        if r.verdict != report.verdict {
            let bad: Vec<String> = r
                .conditions()
                .filter(|c| !c.matches())
                .map(|c| format!("{} {}", c.suite, c.condition))
                .collect();
            return Err(format!("seed {seed}: {:?} {bad:?}", r.verdict));
        }
    }
    Ok("identical bytes across two runs; verdict identical for seeds 1..=10".into())
}

fn main() -> ExitCode {
    let config = VerifyConfig::default();
    let start = Instant::now();
    let report = match full_report(&config) {
        Ok(r) => r,
        Err(e) => {
            println!("FAIL full report: {e}");
            return ExitCode::FAILURE;
        }
    };
    let elapsed = start.elapsed();
    let mut failed = 0;
    let mut line = |name: &str, check: Check| match check {
        Ok(detail) => println!("PASS {name}: {detail}"),
        Err(detail) => {
            failed += 1;
            println!("FAIL {name}: {detail}");
        }
    };
    let verdict = if report.verdict.success {
        Ok(format!(
            "{} conditions, 0 mismatches",
            report.verdict.conditions
        ))
    } else {
        let bad: Vec<String> = report
            .conditions()
            .filter(|c| !c.matches())
            .map(|c| format!("{} [{}] {}", c.suite, c.representation, c.condition))
            .collect();
        Err(format!("mismatches: {bad:?}"))
    };
    line("full report verdict", verdict);
    line("lie algebra", lie_algebra(&report));
    line("helicity structure", helicity(&report));
    line("pauli-lubanski", pauli_lubanski(&report));
    line("pryce operator", pryce(&report, &config));
    line("hawton closed form", hawton_forms(&report));
    line("hawton failures", hawton_failures(&report));
    line("commutator engine oracle", commutator_oracle());
    line("determinism", determinism(&report, &config));
    let informational = report
        .conditions()
        .filter(|c| c.expected == Expected::Informational)
        .count();
    println!(
        "info: full suite ran in {:.2}s ({} conditions, {informational} informational)",
        elapsed.as_secs_f64(),
        report.verdict.conditions
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
