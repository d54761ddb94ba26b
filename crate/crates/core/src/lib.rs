//! Linear classification on the Poincare ball model of hyperbolic space.
//!
//! The crate provides gyrovector geometry primitives, online linear
//! classifiers (perceptron and second-order perceptron), a stochastic
//! subgradient SVM, convex-hull-based reference-point selection, one-vs-rest
//! multi-class training with probability calibration, and synthetic data
//! generation. Everything is generic over the scalar type; the `f64` aliases
//! exported at the crate root are the recommended entry points.

pub mod classifiers;
pub mod data;
pub mod dataset;
pub mod error;
pub mod geometry;
pub mod hull;
mod linalg;
pub mod model_io;
pub mod scalar;

pub use classifiers::{
    accuracy, check_margin_assumption, euclidean_svm_train, ovr_predict, ovr_train,
    per_class_metrics, perceptron_bound, perceptron_train, platt_fit, predict_binary,
    second_order_bound, second_order_train, svm_train, ClassMetrics, MarginReport,
    MultiClassModel, OvrBase, PerceptronModel, PlattParams, SecondOrderModel, SvmConfig,
    SvmModel,
};
pub use data::{
    generate_synthetic, load_dataset, load_dataset_from, save_dataset, save_dataset_to,
    train_test_split, SynthConfig,
};
pub use dataset::LabeledDataset;
pub use error::{Error, Result};
pub use geometry::{
    decision_score, dist_to_hyperplane, dist_to_hyperplane_tangent, distance, eta_weight,
    exp_map, geodesic_point, hyperplane_side, log_map, mobius_add, mobius_scalar_mul, Hyperplane,
    PoincarePoint, TangentVector,
};
pub use hull::{
    graham_scan, learn_reference_point, min_distance_pair, quickhull, reference_midpoint,
    ConvexHull2D, MinDistPair,
};
pub use model_io::{ClassRecord, ModelFile};
pub use scalar::Float;

/// Double-precision point, the recommended default.
pub type Point = PoincarePoint<f64>;
/// Double-precision tangent vector.
pub type Tangent = TangentVector<f64>;
/// Double-precision hyperplane.
pub type Plane = Hyperplane<f64>;

/// Single-precision variants for memory-constrained embeddings.
pub type Point32 = PoincarePoint<f32>;
pub type Tangent32 = TangentVector<f32>;
pub type Plane32 = Hyperplane<f32>;
