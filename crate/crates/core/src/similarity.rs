//! Pairwise similarity matrices over feature columns: Pearson correlation,
//! Spearman rank correlation, and the energy coefficient mixing dispersion
//! with uncorrelation.
//!
//! Every matrix is symmetric by construction (each pair computed once) and
//! rows/columns follow the feature order of the input matrix.

use ndarray::Array2;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dataset::FeatureMatrix;
use crate::error::{Error, Result};

/// Pairwise metric used to build a [`SimilarityMatrix`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    Pearson,
    Spearman,
    Energy,
}

impl std::fmt::Display for Metric {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Metric::Pearson => write!(f, "pearson"),
            Metric::Spearman => write!(f, "spearman"),
            Metric::Energy => write!(f, "energy"),
        }
    }
}

/// Symmetric n×n similarity matrix with provenance of how it was computed.
#[derive(Debug, Clone)]
pub struct SimilarityMatrix {
    values: Array2<f64>,
    metric: Metric,
    squared: bool,
    alpha: Option<f64>,
}

impl SimilarityMatrix {
    pub fn values(&self) -> &Array2<f64> {
        &self.values
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn squared(&self) -> bool {
        self.squared
    }

    pub fn alpha(&self) -> Option<f64> {
        self.alpha
    }

    pub fn n(&self) -> usize {
        self.values.nrows()
    }

    /// Wrap a precomputed symmetric matrix. Intended for tests and for
    /// callers that produce adjacency weights by other means.
    pub fn from_values(values: Array2<f64>, metric: Metric) -> Result<Self> {
        if values.nrows() != values.ncols() {
            return Err(Error::AsymmetricMatrix);
        }
        Ok(Self {
            values,
            metric,
            squared: false,
            alpha: None,
        })
    }
}

/// Average ranks of a column, 1-based; ties receive the mean of the
/// integer ranks they span.
#[derive(Debug, Clone, PartialEq)]
pub struct RankVector {
    ranks: Vec<f64>,
}

impl RankVector {
    pub fn ranks(&self) -> &[f64] {
        &self.ranks
    }
}

pub fn rank_average(column: &[f64]) -> RankVector {
    let s = column.len();
    let mut order: Vec<usize> = (0..s).collect();
    order.sort_by(|&a, &b| column[a].total_cmp(&column[b]).then(a.cmp(&b)));
    let mut ranks = vec![0.0; s];
    let mut i = 0;
    while i < s {
        let mut j = i;
        while j + 1 < s && column[order[j + 1]] == column[order[i]] {
            j += 1;
        }
        // positions i..=j share the same value; average of ranks i+1..=j+1
        let avg = (i + j + 2) as f64 / 2.0;
        for &idx in &order[i..=j] {
            ranks[idx] = avg;
        }
        i = j + 1;
    }
    RankVector { ranks }
}

/// Feature columns as contiguous vectors, plus the names for error reporting.
fn extract_columns(x: &FeatureMatrix) -> Vec<Vec<f64>> {
    (0..x.n_features())
        .map(|j| x.column(j).to_vec())
        .collect()
}

/// Pearson correlation of every column pair.
///
/// Computed as covariance over the product of standard deviations with the
/// shared normalization cancelled:
/// `r = Σ(a−ā)(b−b̄) / sqrt(Σ(a−ā)² · Σ(b−b̄)²)`, clamped to [−1, 1].
fn correlation_matrix(columns: &[Vec<f64>], names: &[String], min_samples: usize) -> Result<Array2<f64>> {
    let n = columns.len();
    let s = columns.first().map_or(0, Vec::len);
    if s < min_samples {
        return Err(Error::InvalidConfig(format!(
            "correlation needs at least {min_samples} samples, got {s}"
        )));
    }
    let mut centered: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut sq_norms: Vec<f64> = Vec::with_capacity(n);
    for (j, col) in columns.iter().enumerate() {
        let mean = col.iter().sum::<f64>() / s as f64;
        let c: Vec<f64> = col.iter().map(|&v| v - mean).collect();
        let nrm: f64 = c.iter().map(|&v| v * v).sum();
        if nrm == 0.0 {
            return Err(Error::ZeroVariance(names[j].clone()));
        }
        centered.push(c);
        sq_norms.push(nrm);
    }

    let upper: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (i + 1..n)
                .map(|j| {
                    let dot: f64 = centered[i]
                        .iter()
                        .zip(&centered[j])
                        .map(|(&a, &b)| a * b)
                        .sum();
                    (dot / (sq_norms[i] * sq_norms[j]).sqrt()).clamp(-1.0, 1.0)
                })
                .collect()
        })
        .collect();

    let mut m = Array2::zeros((n, n));
    for i in 0..n {
        m[[i, i]] = 1.0;
        for (offset, &v) in upper[i].iter().enumerate() {
            let j = i + 1 + offset;
            m[[i, j]] = v;
            m[[j, i]] = v;
        }
    }
    Ok(m)
}

/// Pearson similarity matrix; diagonal is 1.
pub fn pearson_matrix(x: &FeatureMatrix) -> Result<SimilarityMatrix> {
    let columns = extract_columns(x);
    let values = correlation_matrix(&columns, x.feature_names(), 2)?;
    Ok(SimilarityMatrix {
        values,
        metric: Metric::Pearson,
        squared: false,
        alpha: None,
    })
}

/// Spearman similarity matrix: Pearson correlation of the average ranks.
pub fn spearman_matrix(x: &FeatureMatrix) -> Result<SimilarityMatrix> {
    let columns = extract_columns(x);
    let ranked: Vec<Vec<f64>> = columns
        .iter()
        .map(|col| rank_average(col).ranks)
        .collect();
    let values = correlation_matrix(&ranked, x.feature_names(), 2)?;
    Ok(SimilarityMatrix {
        values,
        metric: Metric::Spearman,
        squared: false,
        alpha: None,
    })
}

/// Pieces the energy coefficient is assembled from: per-feature population
/// standard deviations of min–max normalized columns, and the Spearman
/// matrix of the raw columns. Cached by grid search so many alphas can
/// share one computation.
pub(crate) struct EnergyParts {
    pub normalized_sd: Vec<f64>,
    pub spearman: Array2<f64>,
}

pub(crate) fn energy_parts(x: &FeatureMatrix) -> Result<EnergyParts> {
    let s = x.n_samples();
    let mut normalized_sd = Vec::with_capacity(x.n_features());
    for j in 0..x.n_features() {
        let col = x.column(j);
        let min = col.iter().copied().fold(f64::INFINITY, f64::min);
        let max = col.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if min == max {
            return Err(Error::ZeroVariance(x.feature_names()[j].clone()));
        }
        let span = max - min;
        let mean: f64 = col.iter().map(|&v| (v - min) / span).sum::<f64>() / s as f64;
        let var: f64 = col
            .iter()
            .map(|&v| {
                let u = (v - min) / span;
                (u - mean) * (u - mean)
            })
            .sum::<f64>()
            / s as f64;
        normalized_sd.push(var.sqrt());
    }
    let spearman = spearman_matrix(x)?.values;
    Ok(EnergyParts {
        normalized_sd,
        spearman,
    })
}

pub(crate) fn energy_values(parts: &EnergyParts, alpha: f64) -> Array2<f64> {
    let n = parts.normalized_sd.len();
    let mut m = Array2::zeros((n, n));
    for i in 0..n {
        for j in i + 1..n {
            let dispersion = parts.normalized_sd[i].max(parts.normalized_sd[j]);
            let uncorrelation = 1.0 - parts.spearman[[i, j]].abs();
            let phi = alpha * dispersion + (1.0 - alpha) * uncorrelation;
            m[[i, j]] = phi;
            m[[j, i]] = phi;
        }
    }
    m
}

/// Energy similarity matrix: `φ = α·max(σ̂_i, σ̂_j) + (1−α)·(1 − |r_s|)`
/// where σ̂ is taken on columns min–max normalized to [0, 1] and r_s is the
/// Spearman correlation of the raw columns. Diagonal is 0 so a feature
/// never pairs with itself downstream.
pub fn energy_matrix(x: &FeatureMatrix, alpha: f64) -> Result<SimilarityMatrix> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::InvalidConfig(format!(
            "alpha must lie in [0, 1], got {alpha}"
        )));
    }
    let parts = energy_parts(x)?;
    Ok(SimilarityMatrix {
        values: energy_values(&parts, alpha),
        metric: Metric::Energy,
        squared: false,
        alpha: Some(alpha),
    })
}

/// Elementwise square of a Pearson or Spearman matrix. The energy metric is
/// never squared: it already contains only positive values.
pub fn apply_square(s: &SimilarityMatrix) -> Result<SimilarityMatrix> {
    if s.metric == Metric::Energy {
        return Err(Error::InvalidConfig(
            "the energy metric is never squared".into(),
        ));
    }
    Ok(SimilarityMatrix {
        values: s.values.mapv(|v| v * v),
        metric: s.metric,
        squared: true,
        alpha: s.alpha,
    })
}
