//! Reproducible benchmark suites over the synthetic evaluation grid.
//!
//! `table1` measures online-algorithm update counts against the analytic
//! mistake bound; `figure4-desk` compares the Poincare and Euclidean SVMs
//! across dimension and size sweeps at workstation scale. Re-running a suite
//! with the same seeds reproduces every non-timing number exactly.

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use poincare_linear::{
    accuracy, euclidean_svm_train, generate_synthetic, learn_reference_point, perceptron_bound,
    perceptron_train, predict_binary, second_order_train, svm_train, train_test_split, Error,
    Hyperplane, LabeledDataset, SvmConfig, SynthConfig,
};

use crate::Failure;

#[derive(Args)]
pub struct BenchmarkArgs {
    /// Benchmark suite to run.
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Seeds per cell: 0, 1, ..., seeds-1.
    #[arg(long, default_value_t = 20)]
    pub seeds: u64,
    /// Worker threads; 0 uses all cores. Results are identical either way.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Path for the machine-readable JSON report.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Extend the size sweep to N = 10^6.
    #[arg(long)]
    pub full: bool,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Suite {
    /// Perceptron and second-order update counts on the 8-cell margin grid.
    Table1,
    /// Poincare vs Euclidean SVM accuracy and wall time sweeps.
    Figure4Desk,
}

struct Report {
    lines: Vec<String>,
    document: serde_json::Value,
}

pub fn run(args: &BenchmarkArgs) -> Result<(), Failure> {
    if args.seeds == 0 {
        return Err(Failure::Usage("--seeds must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| Failure::Runtime(e.to_string()))?;
    let report = pool.install(|| match args.suite {
        Suite::Table1 => table1(args.seeds),
        Suite::Figure4Desk => figure4_desk(args.seeds, args.full),
    })?;
    for line in &report.lines {
        println!("{line}");
    }
    if let Some(path) = &args.out {
        let mut text = serde_json::to_string_pretty(&report.document)
            .map_err(|e| Failure::Runtime(e.to_string()))?;
        text.push('\n');
        fs::write(path, text).map_err(|e| Failure::Runtime(e.to_string()))?;
    }
    Ok(())
}

fn seed_list(seeds: u64) -> Vec<u64> {
    (0..seeds).collect()
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

fn median(xs: &[f64]) -> f64 {
    let mut sorted = xs.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
    }
}

fn min_max(xs: &[f64]) -> (f64, f64) {
    xs.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
        (lo.min(x), hi.max(x))
    })
}

fn table1(seeds: u64) -> Result<Report, Failure> {
    const N: usize = 10_000;
    const D: usize = 10;
    const R: f64 = 0.95;
    let cells: Vec<(f64, f64)> = [1.0, 0.1, 0.01, 0.001]
        .iter()
        .flat_map(|&eps| [0.2, 0.6].iter().map(move |&p| (eps, p)))
        .collect();
    let tasks: Vec<(usize, u64)> = (0..cells.len())
        .flat_map(|ci| seed_list(seeds).into_iter().map(move |s| (ci, s)))
        .collect();

    let results: Vec<(usize, u64, usize, f64, usize, f64)> = tasks
        .par_iter()
        .map(|&(ci, seed)| {
            let (eps, p_frac) = cells[ci];
            let cfg = SynthConfig {
                n: N,
                dim: D,
                r: R,
                p_norm_fraction: p_frac,
                eps,
                seed,
            };
            let (ds, truth) = generate_synthetic(&cfg)?;
            let p = truth.p().clone();
            let t0 = Instant::now();
            let perc = perceptron_train(&ds, &p, 1_000_000)?;
            let perc_s = t0.elapsed().as_secs_f64();
            let t1 = Instant::now();
            let sop = second_order_train(&ds, &p, 1.0, 1_000_000)?;
            let sop_s = t1.elapsed().as_secs_f64();
            Ok((ci, seed, perc.updates(), perc_s, sop.mistakes(), sop_s))
        })
        .collect::<Result<_, Error>>()?;

    let mut lines = Vec::new();
    let mut cell_docs = Vec::new();
    for (ci, &(eps, p_frac)) in cells.iter().enumerate() {
        let rows: Vec<_> = results.iter().filter(|r| r.0 == ci).collect();
        let updates: Vec<usize> = rows.iter().map(|r| r.2).collect();
        let mistakes: Vec<usize> = rows.iter().map(|r| r.4).collect();
        let perc_times: Vec<f64> = rows.iter().map(|r| r.3).collect();
        let sop_times: Vec<f64> = rows.iter().map(|r| r.5).collect();
        let updates_f: Vec<f64> = updates.iter().map(|&u| u as f64).collect();
        let mistakes_f: Vec<f64> = mistakes.iter().map(|&m| m as f64).collect();
        let bound: f64 = perceptron_bound(p_frac * R, R, eps)?;
        let max_updates = *updates.iter().max().unwrap();
        let max_mistakes = *mistakes.iter().max().unwrap();
        let within = (max_updates as f64) <= bound;
        lines.push(format!(
            "suite=table1 eps={eps} p_frac={p_frac} n={N} d={D} seeds={} algo=perceptron \
             mean_updates={} max_updates={max_updates} bound={bound} within_bound={within} \
             mean_train_s={:.3}",
            rows.len(),
            mean(&updates_f),
            mean(&perc_times),
        ));
        lines.push(format!(
            "suite=table1 eps={eps} p_frac={p_frac} n={N} d={D} seeds={} algo=second-order \
             mean_mistakes={} max_mistakes={max_mistakes} mean_train_s={:.3}",
            rows.len(),
            mean(&mistakes_f),
            mean(&sop_times),
        ));
        cell_docs.push(json!({
            "eps": eps,
            "p_frac": p_frac,
            "n": N,
            "d": D,
            "seeds": seed_list(seeds),
            "bound": bound,
            "perceptron": {
                "updates": updates,
                "mean": mean(&updates_f),
                "max": max_updates,
                "within_bound": within,
                "train_s": perc_times,
            },
            "second_order": {
                "mistakes": mistakes,
                "mean": mean(&mistakes_f),
                "max": max_mistakes,
                "train_s": sop_times,
            },
        }));
    }
    Ok(Report {
        lines,
        document: json!({
            "suite": "table1",
            "protocol": {"r": R, "ridge": 1.0, "reference_point": "ground-truth"},
            "cells": cell_docs,
        }),
    })
}

struct SvmCell {
    sweep: &'static str,
    n: usize,
    d: usize,
}

struct SvmRun {
    cell: usize,
    poincare_acc: f64,
    poincare_train_s: f64,
    ref_s: f64,
    euclid_acc: f64,
    euclid_train_s: f64,
}

fn test_accuracy(h: &Hyperplane<f64>, test: &LabeledDataset<f64>) -> Result<f64, Error> {
    let predicted: Vec<i32> = test
        .points()
        .iter()
        .map(|x| predict_binary(h, x).map(|(sign, _)| if sign >= 0 { 1 } else { -1 }))
        .collect::<Result<_, Error>>()?;
    accuracy(&predicted, test.labels())
}

fn figure4_desk(seeds: u64, full: bool) -> Result<Report, Failure> {
    const R: f64 = 0.95;
    const EPS: f64 = 0.01;
    const P_FRAC: f64 = 0.4;
    const C: f64 = 1000.0;
    let mut cells = vec![
        SvmCell { sweep: "d", n: 10_000, d: 2 },
        SvmCell { sweep: "d", n: 10_000, d: 10 },
        SvmCell { sweep: "d", n: 10_000, d: 100 },
        SvmCell { sweep: "d", n: 10_000, d: 1000 },
        SvmCell { sweep: "n", n: 1_000, d: 2 },
        SvmCell { sweep: "n", n: 10_000, d: 2 },
        SvmCell { sweep: "n", n: 100_000, d: 2 },
    ];
    if full {
        cells.push(SvmCell { sweep: "n", n: 1_000_000, d: 2 });
    }
    let tasks: Vec<(usize, u64)> = (0..cells.len())
        .flat_map(|ci| seed_list(seeds).into_iter().map(move |s| (ci, s)))
        .collect();

    let results: Vec<SvmRun> = tasks
        .par_iter()
        .map(|&(ci, seed)| {
            let cell = &cells[ci];
            let cfg = SynthConfig {
                n: cell.n,
                dim: cell.d,
                r: R,
                p_norm_fraction: P_FRAC,
                eps: EPS,
                seed,
            };
            let (ds, _) = generate_synthetic(&cfg)?;
            let (train, test) = train_test_split(&ds, 0.7, seed)?;
            let svm_cfg = SvmConfig {
                c: C,
                tol: None,
                max_iters: None,
                seed,
            };
            let t0 = Instant::now();
            let p = learn_reference_point(&train)?;
            let ref_s = t0.elapsed().as_secs_f64();
            let t1 = Instant::now();
            let pm = svm_train(&train, &p, &svm_cfg)?;
            let poincare_train_s = t1.elapsed().as_secs_f64();
            let t2 = Instant::now();
            let em = euclidean_svm_train(&train, &svm_cfg)?;
            let euclid_train_s = t2.elapsed().as_secs_f64();
            Ok(SvmRun {
                cell: ci,
                poincare_acc: test_accuracy(pm.hyperplane(), &test)?,
                poincare_train_s,
                ref_s,
                euclid_acc: test_accuracy(em.hyperplane(), &test)?,
                euclid_train_s,
            })
        })
        .collect::<Result<_, Error>>()?;

    let mut lines = Vec::new();
    let mut cell_docs = Vec::new();
    for (ci, cell) in cells.iter().enumerate() {
        let rows: Vec<&SvmRun> = results.iter().filter(|r| r.cell == ci).collect();
        let p_acc: Vec<f64> = rows.iter().map(|r| r.poincare_acc).collect();
        let e_acc: Vec<f64> = rows.iter().map(|r| r.euclid_acc).collect();
        let p_time: Vec<f64> = rows.iter().map(|r| r.poincare_train_s).collect();
        let e_time: Vec<f64> = rows.iter().map(|r| r.euclid_train_s).collect();
        let r_time: Vec<f64> = rows.iter().map(|r| r.ref_s).collect();
        let (p_lo, p_hi) = min_max(&p_acc);
        let (e_lo, e_hi) = min_max(&e_acc);
        lines.push(format!(
            "suite=figure4-desk sweep={} n={} d={} seeds={} algo=poincare-svm acc_min={p_lo} \
             acc_median={} acc_max={p_hi} mean_train_s={:.3} mean_ref_s={:.3}",
            cell.sweep,
            cell.n,
            cell.d,
            rows.len(),
            median(&p_acc),
            mean(&p_time),
            mean(&r_time),
        ));
        lines.push(format!(
            "suite=figure4-desk sweep={} n={} d={} seeds={} algo=euclidean-svm acc_min={e_lo} \
             acc_median={} acc_max={e_hi} mean_train_s={:.3}",
            cell.sweep,
            cell.n,
            cell.d,
            rows.len(),
            median(&e_acc),
            mean(&e_time),
        ));
        cell_docs.push(json!({
            "sweep": cell.sweep,
            "n": cell.n,
            "d": cell.d,
            "seeds": seed_list(seeds),
            "poincare_svm": {
                "accuracies": p_acc,
                "acc_min": p_lo,
                "acc_median": median(&p_acc),
                "acc_max": p_hi,
                "train_s": p_time,
                "ref_point_s": r_time,
            },
            "euclidean_svm": {
                "accuracies": e_acc,
                "acc_min": e_lo,
                "acc_median": median(&e_acc),
                "acc_max": e_hi,
                "train_s": e_time,
            },
        }));
    }
    Ok(Report {
        lines,
        document: json!({
            "suite": "figure4-desk",
            "protocol": {
                "r": R,
                "eps": EPS,
                "p_frac": P_FRAC,
                "c": C,
                "split_fraction": 0.7,
                "reference_point": "learned",
            },
            "cells": cell_docs,
        }),
    })
}
