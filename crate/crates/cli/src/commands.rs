use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use cpbound_core::{
    alpha_sweep, canonical_ratio, lemma1_certify, lemma2_certify, log_uniform_t, mix_seed,
    multistart_search, multistart_search_with_workers, optimal_t, proof_chain_certify,
    random_contraction, random_ginibre, random_psd, sharp_constant, theorem_certify, CertReport,
    ComplexMatrix, Family, ProofChainTrace, SearchConfig,
};

use crate::matfile::MatrixFile;
use crate::{FamilyArg, Ineq};

/// Did the checked inequality hold? Errors (bad files, bad parameters,
/// failed preconditions) travel separately as anyhow errors.
pub enum Verdict {
    Clean,
    Violated,
}

fn ineq_name(ineq: Ineq) -> &'static str {
    match ineq {
        Ineq::Lemma1 => "lemma1",
        Ineq::Lemma2 => "lemma2",
        Ineq::Theorem => "theorem",
        Ineq::Chain => "chain",
    }
}

pub fn check(path: &Path, ineq: Ineq, t: Option<f64>) -> Result<Verdict> {
    let file = MatrixFile::load(path)?;
    let ok = match ineq {
        Ineq::Lemma1 => {
            let s = file.get("S")?;
            let t_mat = file.get("T")?;
            let cert = lemma1_certify(&s, &t_mat, t.unwrap_or(1.0))?;
            println!("{}\n", cert.cauchy_schwarz);
            println!("{}\n", cert.am_gm);
            println!("{}", cert.overall);
            cert.all_satisfied()
        }
        Ineq::Lemma2 => {
            let q = file.get("Q")?;
            let x = file.get("X")?;
            let y = file.get("Y")?;
            let report = lemma2_certify(&q, &x, &y, t.unwrap_or(1.0))?;
            println!("{report}");
            report.satisfied
        }
        Ineq::Theorem => {
            let a = file.get("A")?;
            let b = file.get("B")?;
            let result = theorem_certify(&a, &b)?;
            println!("{}", result.report);
            match result.ratio {
                Some(r) => println!("ratio: {r:.16e}"),
                None => println!("ratio: undefined (both matrices are zero)"),
            }
            result.report.satisfied
        }
        Ineq::Chain => {
            let a = file.get("A")?;
            let b = file.get("B")?;
            let trace = proof_chain_certify(&a, &b, t.unwrap_or_else(optimal_t))?;
            print_chain(&trace);
            trace.all_satisfied()
        }
    };
    Ok(if ok { Verdict::Clean } else { Verdict::Violated })
}

fn print_chain(trace: &ProofChainTrace) {
    println!("t: {:.16e}", trace.t);
    println!("q0: {:.16e}", trace.q0);
    println!("q1: {:.16e}", trace.q1);
    println!("q2: {:.16e}", trace.q2);
    println!("q3: {:.16e}", trace.q3);
    println!("bound_rhs: {:.16e}", trace.bound_rhs);
    for report in &trace.stage_reports {
        println!("\n{report}");
    }
}

/// Deterministic order draw in 1..=n_max from a seed; avoids carrying a
/// second RNG stream just for a tiny uniform integer.
fn order_for(seed: u64, n_max: usize) -> usize {
    1 + (mix_seed(seed, 0xD1CE) % n_max as u64) as usize
}

/// One fuzz trial, reduced to the decisive report plus the matrices needed
/// to replay it.
struct Trial {
    satisfied: bool,
    slack: f64,
    relative_slack: f64,
    t: Option<f64>,
    replay: Vec<(&'static str, ComplexMatrix)>,
    reports: Vec<CertReport>,
}

fn run_trial(ineq: Ineq, sub: u64, n_max: usize) -> Result<Trial> {
    let n = order_for(mix_seed(sub, 0), n_max);
    Ok(match ineq {
        Ineq::Lemma1 => {
            let s = random_ginibre(n, mix_seed(sub, 1))?;
            let t_mat = random_ginibre(n, mix_seed(sub, 2))?;
            let t = log_uniform_t(mix_seed(sub, 3));
            let cert = lemma1_certify(&s, &t_mat, t)?;
            Trial {
                satisfied: cert.all_satisfied(),
                slack: cert.overall.slack,
                relative_slack: cert.overall.relative_slack,
                t: Some(t),
                replay: vec![("S", s), ("T", t_mat)],
                reports: vec![cert.cauchy_schwarz, cert.am_gm, cert.overall],
            }
        }
        Ineq::Lemma2 => {
            let q = random_contraction(n, mix_seed(sub, 1))?;
            let x = random_psd(n, mix_seed(sub, 2))?;
            let y = random_psd(n, mix_seed(sub, 3))?;
            let t = log_uniform_t(mix_seed(sub, 4));
            let report = lemma2_certify(&q, &x, &y, t)?;
            Trial {
                satisfied: report.satisfied,
                slack: report.slack,
                relative_slack: report.relative_slack,
                t: Some(t),
                replay: vec![("Q", q), ("X", x), ("Y", y)],
                reports: vec![report],
            }
        }
        Ineq::Theorem => {
            let a = random_ginibre(n, mix_seed(sub, 1))?;
            let b = random_ginibre(n, mix_seed(sub, 2))?;
            let result = theorem_certify(&a, &b)?;
            Trial {
                satisfied: result.report.satisfied,
                slack: result.report.slack,
                relative_slack: result.report.relative_slack,
                t: None,
                replay: vec![("A", a), ("B", b)],
                reports: vec![result.report],
            }
        }
        Ineq::Chain => {
            let a = random_ginibre(n, mix_seed(sub, 1))?;
            let b = random_ginibre(n, mix_seed(sub, 2))?;
            let t = log_uniform_t(mix_seed(sub, 3));
            let trace = proof_chain_certify(&a, &b, t)?;
            // Identity stages have no meaningful slack; the inequality
            // stages carry the chain's tightness.
            let (slack, relative_slack) = trace
                .stage_reports
                .iter()
                .filter(|r| !r.label.ends_with("identity"))
                .map(|r| (r.slack, r.relative_slack))
                .fold((f64::INFINITY, f64::INFINITY), |(s, rs), (a, b)| {
                    (s.min(a), rs.min(b))
                });
            Trial {
                satisfied: trace.all_satisfied(),
                slack,
                relative_slack,
                t: Some(t),
                replay: vec![("A", a), ("B", b)],
                reports: trace.stage_reports,
            }
        }
    })
}

pub fn fuzz(ineq: Ineq, trials: u64, n_max: usize, seed: u64) -> Result<Verdict> {
    if trials == 0 {
        bail!("--trials must be at least 1");
    }
    if n_max == 0 {
        bail!("--n-max must be at least 1");
    }

    let name = ineq_name(ineq);
    let mut min: Option<(f64, f64, u64, u64, Option<f64>)> = None;
    for trial in 0..trials {
        let sub = mix_seed(seed, trial);
        let outcome = run_trial(ineq, sub, n_max)?;

        if min.as_ref().is_none_or(|m| outcome.relative_slack < m.0) {
            min = Some((
                outcome.relative_slack,
                outcome.slack,
                trial,
                sub,
                outcome.t,
            ));
        }

        if !outcome.satisfied {
            let mut file = MatrixFile::new(outcome.replay[0].1.order());
            for (label, m) in &outcome.replay {
                file.insert(label, m);
            }
            let replay_path = PathBuf::from(format!("cpbound-violation-{name}-{trial}.json"));
            file.save(&replay_path)?;
            println!("VIOLATION at trial {trial} (seed {sub})");
            for report in &outcome.reports {
                println!("\n{report}");
            }
            println!("\nreplay file: {}", replay_path.display());
            match outcome.t {
                Some(t) => println!("replay: cpbound check {} --ineq {name} --t {t:e}", replay_path.display()),
                None => println!("replay: cpbound check {} --ineq {name}", replay_path.display()),
            }
            println!("\nineq: {name}");
            println!("trials: {}", trial + 1);
            println!("violations: 1");
            return Ok(Verdict::Violated);
        }
    }

    let (relative_slack, slack, trial, sub, t) = min.expect("at least one trial ran");
    println!("ineq: {name}");
    println!("trials: {trials}");
    println!("n_max: {n_max}");
    println!("seed: {seed}");
    println!("violations: 0");
    println!("min_slack: {slack:.16e}");
    println!("min_relative_slack: {relative_slack:.16e}");
    println!("min_trial: {trial}");
    println!("min_trial_seed: {sub}");
    if let Some(t) = t {
        println!("min_trial_t: {t:.16e}");
    }
    Ok(Verdict::Clean)
}

#[allow(clippy::too_many_arguments)]
pub fn search(
    p: f64,
    n: usize,
    starts: usize,
    seed: u64,
    family: FamilyArg,
    max_iters: usize,
    workers: Option<usize>,
    out: Option<&Path>,
) -> Result<Verdict> {
    let family_core = match family {
        FamilyArg::General => Family::General,
        FamilyArg::Canonical => Family::Canonical,
    };
    let config = SearchConfig {
        starts,
        seed,
        max_iters,
        ..SearchConfig::new(p, n, family_core)
    };
    let result = match workers {
        Some(w) => multistart_search_with_workers(&config, w)?,
        None => multistart_search(&config)?,
    };

    println!("p: {p}");
    println!("n: {n}");
    println!(
        "family: {}",
        match family {
            FamilyArg::General => "general",
            FamilyArg::Canonical => "canonical",
        }
    );
    println!("starts: {starts}");
    println!("seed: {seed}");
    println!("best_ratio: {:.16e}", result.best_ratio);
    if family == FamilyArg::Canonical {
        // B = [[cos a, -sin a], [0, 0]] lets the winning angle be read back
        // off the winning pair.
        let b = &result.best_pair.1;
        let alpha = (-b[(0, 1)].re).atan2(b[(0, 0)].re);
        println!("best_alpha: {alpha:.16e}");
    }
    println!("evaluations: {}", result.evaluations);
    println!("max_evaluated_ratio: {:.16e}", result.max_evaluated_ratio);
    if p == 2.0 {
        let bound = sharp_constant();
        println!("certified_bound: {bound:.16e}");
        println!("gap_to_bound: {:.16e}", bound - result.best_ratio);
    } else {
        println!("note: best_ratio is an empirical lower bound on c_p; a certified value exists only for p = 2");
    }
    println!("start best_ratio evaluations");
    for record in &result.starts {
        println!(
            "{} {:.16e} {}",
            record.index, record.best_ratio, record.evaluations
        );
    }

    if let Some(path) = out {
        let file = File::create(path)
            .with_context(|| format!("cannot create {}", path.display()))?;
        let mut w = BufWriter::new(file);
        writeln!(w, "start_index,best_ratio,evaluations")?;
        for record in &result.starts {
            writeln!(
                w,
                "{},{:.16e},{}",
                record.index, record.best_ratio, record.evaluations
            )?;
        }
        w.flush()?;
        println!("wrote: {}", path.display());
    }

    // Tripwire, not a formality: at p = 2 no evaluation may beat the
    // certified constant. Seeing one means a kernel defect, so say so loudly
    // and fail.
    if p == 2.0 && result.max_evaluated_ratio > sharp_constant() + 1e-9 {
        println!(
            "VIOLATION: evaluated ratio {:.16e} exceeds the certified bound",
            result.max_evaluated_ratio
        );
        return Ok(Verdict::Violated);
    }
    Ok(Verdict::Clean)
}

pub fn sweep(grid_points: usize, out: &Path) -> Result<Verdict> {
    let sweep = alpha_sweep(grid_points)?;

    let file =
        File::create(out).with_context(|| format!("cannot create {}", out.display()))?;
    let mut w = BufWriter::new(file);
    writeln!(w, "alpha,ratio,closed_form_ratio,abs_difference")?;
    let mut max_diff = 0.0f64;
    for row in &sweep.rows {
        let closed = canonical_ratio(row.alpha);
        let diff = (row.ratio - closed).abs();
        max_diff = max_diff.max(diff);
        writeln!(
            w,
            "{:.16e},{:.16e},{:.16e},{:.16e}",
            row.alpha, row.ratio, closed, diff
        )?;
    }
    w.flush()?;

    println!("grid_points: {grid_points}");
    println!("argmax_alpha: {:.16e}", sweep.argmax_alpha);
    println!("max_ratio: {:.16e}", sweep.max_ratio);
    println!("peak_alpha_closed_form: {:.16e}", optimal_t().acos());
    println!("sharp_constant: {:.16e}", sharp_constant());
    println!("max_abs_difference: {max_diff:.16e}");
    println!("wrote: {} ({} rows)", out.display(), sweep.rows.len());
    Ok(Verdict::Clean)
}
