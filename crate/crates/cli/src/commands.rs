//! The generate, train, evaluate and hull subcommands.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, ValueEnum};
use serde_json::json;

use poincare_linear::classifiers::ClassMetrics;
use poincare_linear::{
    accuracy, euclidean_svm_train, generate_synthetic, graham_scan, learn_reference_point,
    load_dataset, load_dataset_from, ovr_predict, ovr_train, per_class_metrics, perceptron_train,
    predict_binary, quickhull, save_dataset, save_dataset_to, second_order_train, svm_train,
    Hyperplane, LabeledDataset, ModelFile, MultiClassModel, OvrBase, PoincarePoint, SvmConfig,
    SynthConfig,
};

use crate::truth::TruthFile;
use crate::Failure;

pub fn load_input(spec: &str) -> Result<LabeledDataset<f64>, Failure> {
    if spec == "-" {
        Ok(load_dataset_from(io::stdin().lock())?)
    } else {
        Ok(load_dataset(Path::new(spec))?)
    }
}

/// Writes `content` to `out`, or to stdout when no path was given.
fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, content).map_err(|e| Failure::Runtime(e.to_string())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

#[derive(Args)]
pub struct GenerateArgs {
    /// Number of points to generate.
    #[arg(long)]
    pub n: usize,
    /// Ambient dimension.
    #[arg(long)]
    pub d: usize,
    /// Euclidean norm bound for sampled points.
    #[arg(long, default_value_t = 0.95)]
    pub r: f64,
    /// Reference-point norm as a fraction of r, in [0, 1).
    #[arg(long = "p-frac", default_value_t = 0.0)]
    pub p_frac: f64,
    /// Minimum hyperbolic distance from any point to the boundary.
    #[arg(long, default_value_t = 0.01)]
    pub eps: f64,
    /// RNG seed; equal flags and seed give byte-identical output.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Dataset output path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Ground-truth sidecar path; defaults to `<out>.truth.json`.
    #[arg(long = "truth-out")]
    pub truth_out: Option<PathBuf>,
}

pub fn generate(args: &GenerateArgs) -> Result<(), Failure> {
    let cfg = SynthConfig {
        n: args.n,
        dim: args.d,
        r: args.r,
        p_norm_fraction: args.p_frac,
        eps: args.eps,
        seed: args.seed,
    };
    let (ds, truth_plane) = generate_synthetic(&cfg)?;
    let truth = TruthFile::new(&truth_plane, args.r, args.eps, args.seed);
    match &args.out {
        Some(path) => {
            save_dataset(&ds, path)?;
            let truth_path = args
                .truth_out
                .clone()
                .unwrap_or_else(|| sidecar_path(path));
            truth.save(&truth_path)?;
            println!(
                "n={} d={} eps={} p_frac={} seed={} out={} truth={}",
                ds.len(),
                ds.dim(),
                args.eps,
                args.p_frac,
                args.seed,
                path.display(),
                truth_path.display()
            );
        }
        None => {
            save_dataset_to(&ds, io::stdout().lock())?;
            if let Some(truth_path) = &args.truth_out {
                truth.save(truth_path)?;
            }
        }
    }
    Ok(())
}

fn sidecar_path(dataset_path: &Path) -> PathBuf {
    let mut name = dataset_path.as_os_str().to_owned();
    name.push(".truth.json");
    PathBuf::from(name)
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Perceptron,
    SecondOrder,
    Svm,
    EuclideanSvm,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Perceptron => "perceptron",
            Algo::SecondOrder => "second-order",
            Algo::Svm => "svm",
            Algo::EuclideanSvm => "euclidean-svm",
        }
    }
}

#[derive(Args)]
pub struct TrainArgs {
    /// Training algorithm.
    #[arg(long, value_enum)]
    pub algo: Algo,
    /// Input dataset path; `-` for stdin.
    #[arg(long)]
    pub input: String,
    /// SVM regularization weight.
    #[arg(long, default_value_t = 1000.0)]
    pub c: f64,
    /// SVM stopping tolerance; defaults to 1e-6 * N * C.
    #[arg(long)]
    pub tol: Option<f64>,
    /// SVM iteration budget; defaults to 100 * N.
    #[arg(long = "max-iters")]
    pub max_iters: Option<u64>,
    /// Epoch budget for the online algorithms.
    #[arg(long = "max-epochs", default_value_t = 1000)]
    pub max_epochs: usize,
    /// Ridge parameter for the second-order algorithm.
    #[arg(long, default_value_t = 1.0)]
    pub ridge: f64,
    /// SVM sampling seed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Reference point: `learn`, `origin`, or a ground-truth sidecar path.
    #[arg(long = "ref-point", default_value = "learn")]
    pub ref_point: String,
    /// Serialized model output path.
    #[arg(long = "out-model")]
    pub out_model: PathBuf,
}

impl TrainArgs {
    fn svm_config(&self) -> SvmConfig<f64> {
        SvmConfig {
            c: self.c,
            tol: self.tol,
            max_iters: self.max_iters,
            seed: self.seed,
        }
    }
}

fn resolve_ref_point(
    spec: &str,
    ds: &LabeledDataset<f64>,
) -> Result<(PoincarePoint<f64>, String), Failure> {
    match spec {
        "learn" => Ok((learn_reference_point(ds)?, "learn".into())),
        "origin" => Ok((PoincarePoint::origin(ds.dim()), "origin".into())),
        path => {
            let truth = TruthFile::load(Path::new(path))?;
            let p = truth.reference_point()?;
            if p.dim() != ds.dim() {
                return Err(Failure::Usage(format!(
                    "reference point has dimension {}, dataset has {}",
                    p.dim(),
                    ds.dim()
                )));
            }
            Ok((p, format!("file:{path}")))
        }
    }
}

pub fn train(args: &TrainArgs) -> Result<(), Failure> {
    let ds = load_input(&args.input)?;
    if ds.is_binary() {
        train_binary(args, &ds)
    } else {
        train_multiclass(args, &ds)
    }
}

fn train_binary(args: &TrainArgs, ds: &LabeledDataset<f64>) -> Result<(), Failure> {
    let start = Instant::now();
    let (hyperplane, stats, hyper, converged): (Hyperplane<f64>, _, _, bool) = match args.algo {
        Algo::Perceptron => {
            let (p, ref_desc) = resolve_ref_point(&args.ref_point, ds)?;
            let model = perceptron_train(ds, &p, args.max_epochs)?;
            (
                model.hyperplane().clone(),
                json!({"updates": model.updates(), "converged": model.converged()}),
                json!({"max_epochs": args.max_epochs, "ref_point": ref_desc}),
                model.converged(),
            )
        }
        Algo::SecondOrder => {
            let (p, ref_desc) = resolve_ref_point(&args.ref_point, ds)?;
            let model = second_order_train(ds, &p, args.ridge, args.max_epochs)?;
            (
                model.hyperplane().clone(),
                json!({"mistakes": model.mistakes(), "converged": model.converged()}),
                json!({"ridge": args.ridge, "max_epochs": args.max_epochs, "ref_point": ref_desc}),
                model.converged(),
            )
        }
        Algo::Svm => {
            let (p, ref_desc) = resolve_ref_point(&args.ref_point, ds)?;
            let model = svm_train(ds, &p, &args.svm_config())?;
            (
                model.hyperplane().clone(),
                json!({
                    "iterations": model.iterations(),
                    "objective": model.objective_trace().last().copied(),
                    "converged": model.converged(),
                }),
                json!({"c": args.c, "seed": args.seed, "ref_point": ref_desc}),
                model.converged(),
            )
        }
        Algo::EuclideanSvm => {
            let model = euclidean_svm_train(ds, &args.svm_config())?;
            (
                model.hyperplane().clone(),
                json!({
                    "iterations": model.iterations(),
                    "objective": model.objective_trace().last().copied(),
                    "converged": model.converged(),
                }),
                json!({"c": args.c, "seed": args.seed}),
                model.converged(),
            )
        }
    };
    let wall = start.elapsed().as_secs_f64();
    let doc = ModelFile::from_binary(args.algo.name(), &hyperplane, hyper, stats.clone());
    doc.save(&args.out_model)?;
    let mut line = format!(
        "algo={} n={} d={} converged={converged}",
        args.algo.name(),
        ds.len(),
        ds.dim()
    );
    for key in ["updates", "mistakes", "iterations", "objective"] {
        if let Some(v) = stats.get(key) {
            line.push_str(&format!(" {key}={v}"));
        }
    }
    line.push_str(&format!(
        " wall_time_s={wall:.3} model={}",
        args.out_model.display()
    ));
    println!("{line}");
    if converged {
        Ok(())
    } else {
        Err(Failure::NonConverged(format!(
            "{} did not converge within its budget",
            args.algo.name()
        )))
    }
}

fn train_multiclass(args: &TrainArgs, ds: &LabeledDataset<f64>) -> Result<(), Failure> {
    let base = match args.algo {
        Algo::Svm => OvrBase::Svm(args.svm_config()),
        Algo::Perceptron => OvrBase::Perceptron {
            max_epochs: args.max_epochs,
        },
        other => {
            return Err(Failure::Usage(format!(
                "multi-class data supports --algo svm or perceptron, not {}",
                other.name()
            )))
        }
    };
    if args.ref_point != "learn" {
        return Err(Failure::Usage(
            "multi-class training learns per-class reference points; use --ref-point learn".into(),
        ));
    }
    let start = Instant::now();
    let model = ovr_train(ds, &base)?;
    let wall = start.elapsed().as_secs_f64();
    let converged = model.entries().iter().filter(|e| e.converged()).count();
    let total = model.num_classes();
    let hyper = match args.algo {
        Algo::Svm => json!({"c": args.c, "seed": args.seed}),
        _ => json!({"max_epochs": args.max_epochs}),
    };
    let stats = json!({
        "classes": total,
        "converged_classes": converged,
        "iterations": model.entries().iter().map(|e| e.iterations()).sum::<u64>(),
    });
    let doc = ModelFile::from_multiclass(&model, hyper, stats);
    doc.save(&args.out_model)?;
    println!(
        "algo={} n={} d={} classes={total} converged={converged}/{total} wall_time_s={wall:.3} model={}",
        args.algo.name(),
        ds.len(),
        ds.dim(),
        args.out_model.display()
    );
    if converged == total {
        Ok(())
    } else {
        Err(Failure::NonConverged(format!(
            "{} of {total} class models did not converge",
            total - converged
        )))
    }
}

#[derive(Args)]
pub struct EvaluateArgs {
    /// Serialized model path.
    #[arg(long)]
    pub model: PathBuf,
    /// Input dataset path; `-` for stdin.
    #[arg(long)]
    pub input: String,
}

pub fn evaluate(args: &EvaluateArgs) -> Result<(), Failure> {
    let doc = ModelFile::<f64>::load(&args.model)?;
    let ds = load_input(&args.input)?;
    if doc.dimension != ds.dim() {
        return Err(Failure::Usage(format!(
            "model dimension {} does not match dataset dimension {}",
            doc.dimension,
            ds.dim()
        )));
    }
    let predicted: Vec<i32> = if doc.is_binary() {
        ds.require_binary()?;
        let h = doc.hyperplane(0)?;
        ds.points()
            .iter()
            .map(|x| predict_binary(&h, x).map(|(sign, _)| if sign >= 0 { 1 } else { -1 }))
            .collect::<Result<_, _>>()?
    } else {
        let model: MultiClassModel<f64> = doc.to_multiclass()?;
        ds.points()
            .iter()
            .map(|x| ovr_predict(&model, x).map(|(class, _)| class))
            .collect::<Result<_, _>>()?
    };
    let acc: f64 = accuracy(&predicted, ds.labels())?;
    let per_class: Vec<ClassMetrics<f64>> = per_class_metrics(&predicted, ds.labels())?;
    println!("n={} accuracy={acc}", ds.len());
    for m in &per_class {
        println!(
            "class={} precision={} recall={} support={}",
            m.class_id, m.precision, m.recall, m.support
        );
    }
    Ok(())
}

#[derive(Args)]
pub struct HullArgs {
    /// Input dataset path; `-` for stdin.
    #[arg(long)]
    pub input: String,
    /// Restrict the hull to the points of one class label.
    #[arg(long)]
    pub class: Option<i32>,
    /// Cross-validate Graham scan against Quickhull.
    #[arg(long)]
    pub check: bool,
    /// Output path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn hull(args: &HullArgs) -> Result<(), Failure> {
    let ds = load_input(&args.input)?;
    if ds.dim() != 2 {
        return Err(Failure::Usage(format!(
            "hull computation supports d=2 only, dataset has d={}",
            ds.dim()
        )));
    }
    let points = match args.class {
        Some(class) => {
            let subset = ds.points_with_label(class);
            if subset.is_empty() {
                return Err(Failure::Usage(format!("class {class} has no examples")));
            }
            subset
        }
        None => ds.points().to_vec(),
    };
    let hull = graham_scan(&points)?;
    let check_status = if args.check {
        let other = quickhull(&points)?;
        if vertex_key(hull.vertices()) == vertex_key(other.vertices()) {
            "MATCH"
        } else {
            "MISMATCH"
        }
    } else {
        "SKIPPED"
    };
    let mut content = format!(
        "vertices={} class={} check={check_status}\n",
        hull.len(),
        args.class.map_or("all".to_string(), |c| c.to_string()),
    );
    for v in hull.vertices() {
        content.push_str(&format!("{},{}\n", v.coords()[0], v.coords()[1]));
    }
    emit(&args.out, &content)?;
    if check_status == "MISMATCH" {
        return Err(Failure::Runtime(
            "Graham scan and Quickhull disagree on this input".into(),
        ));
    }
    Ok(())
}

/// Order-independent vertex fingerprint for cross-algorithm comparison.
fn vertex_key(vertices: &[PoincarePoint<f64>]) -> Vec<(u64, u64)> {
    let mut key: Vec<(u64, u64)> = vertices
        .iter()
        .map(|v| (v.coords()[0].to_bits(), v.coords()[1].to_bits()))
        .collect();
    key.sort_unstable();
    key
}
