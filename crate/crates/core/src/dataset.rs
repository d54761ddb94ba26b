//! Labeled point sets shared by the training algorithms.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::PoincarePoint;
use crate::scalar::Float;

/// Points in the ball with integer labels. Binary tasks use {-1, +1};
/// multi-class tasks use contiguous ids starting at 0.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct LabeledDataset<F: Float> {
    points: Vec<PoincarePoint<F>>,
    labels: Vec<i32>,
}

impl<F: Float> LabeledDataset<F> {
    /// Builds a dataset, checking nonemptiness, equal lengths, and a
    /// consistent dimension across points.
    pub fn new(points: Vec<PoincarePoint<F>>, labels: Vec<i32>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyDataset);
        }
        if points.len() != labels.len() {
            return Err(Error::InvalidArgument(format!(
                "{} points but {} labels",
                points.len(),
                labels.len()
            )));
        }
        let d = points[0].dim();
        for q in &points[1..] {
            if q.dim() != d {
                return Err(Error::DimensionMismatch { expected: d, got: q.dim() });
            }
        }
        Ok(LabeledDataset { points, labels })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }

    pub fn points(&self) -> &[PoincarePoint<F>] {
        &self.points
    }

    pub fn labels(&self) -> &[i32] {
        &self.labels
    }

    pub fn point(&self, i: usize) -> &PoincarePoint<F> {
        &self.points[i]
    }

    pub fn label(&self, i: usize) -> i32 {
        self.labels[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PoincarePoint<F>, i32)> {
        self.points.iter().zip(self.labels.iter().copied())
    }

    /// Largest point norm in the dataset.
    pub fn max_norm(&self) -> F {
        self.points
            .iter()
            .map(|p| p.norm())
            .fold(F::zero(), |a, b| a.max(b))
    }

    /// Distinct labels in ascending order.
    pub fn class_ids(&self) -> Vec<i32> {
        let mut ids: Vec<i32> = self.labels.clone();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    /// (class id, member count) pairs in ascending id order.
    pub fn class_counts(&self) -> Vec<(i32, usize)> {
        self.class_ids()
            .into_iter()
            .map(|id| (id, self.labels.iter().filter(|l| **l == id).count()))
            .collect()
    }

    /// True when every label is -1 or +1.
    pub fn is_binary(&self) -> bool {
        self.labels.iter().all(|l| *l == 1 || *l == -1)
    }

    pub fn require_binary(&self) -> Result<()> {
        if self.is_binary() {
            Ok(())
        } else {
            Err(Error::NonBinaryLabels)
        }
    }

    /// Copy with label k mapped to +1 and everything else to -1.
    pub fn relabel_one_vs_rest(&self, k: i32) -> LabeledDataset<F> {
        LabeledDataset {
            points: self.points.clone(),
            labels: self.labels.iter().map(|l| if *l == k { 1 } else { -1 }).collect(),
        }
    }

    /// Copy restricted to the given indices (order preserved).
    pub fn subset(&self, indices: &[usize]) -> Result<LabeledDataset<F>> {
        if indices.is_empty() {
            return Err(Error::EmptyDataset);
        }
        Ok(LabeledDataset {
            points: indices.iter().map(|i| self.points[*i].clone()).collect(),
            labels: indices.iter().map(|i| self.labels[*i]).collect(),
        })
    }

    /// Points carrying the given label.
    pub fn points_with_label(&self, label: i32) -> Vec<PoincarePoint<F>> {
        self.iter()
            .filter(|(_, l)| *l == label)
            .map(|(p, _)| p.clone())
            .collect()
    }
}
