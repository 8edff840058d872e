//! Tabular data handling: CSV ingestion, stratified splitting, constant-feature
//! pruning, standardization and stratified k-fold partitioning.
//!
//! All operations are deterministic given their inputs and an explicit seed.
//! Class labels are kept as strings; per-class bookkeeping always iterates
//! classes in sorted order so results never depend on input row order.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use ndarray::{Array2, ArrayView1};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};

/// A samples × features numeric table with named columns and optional labels.
#[derive(Debug, Clone)]
pub struct FeatureMatrix {
    values: Array2<f64>,
    feature_names: Vec<String>,
    labels: Option<Vec<String>>,
}

impl FeatureMatrix {
    /// Build a matrix from raw parts, validating the type invariants:
    /// finite values, unique feature names, label length matching rows.
    pub fn new(
        values: Array2<f64>,
        feature_names: Vec<String>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if feature_names.len() != values.ncols() {
            return Err(Error::FeatureCountMismatch {
                expected: values.ncols(),
                found: feature_names.len(),
            });
        }
        let mut seen = BTreeSet::new();
        for name in &feature_names {
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateColumn(name.clone()));
            }
        }
        if let Some((row, col)) = values
            .indexed_iter()
            .find(|(_, v)| !v.is_finite())
            .map(|((r, c), _)| (r, c))
        {
            return Err(Error::Cell {
                row: row + 1,
                column: feature_names[col].clone(),
                message: "value is not a finite number".into(),
            });
        }
        if let Some(labels) = &labels {
            if labels.len() != values.nrows() {
                return Err(Error::InvalidConfig(format!(
                    "label count {} does not match sample count {}",
                    labels.len(),
                    values.nrows()
                )));
            }
        }
        Ok(Self {
            values,
            feature_names,
            labels,
        })
    }

    pub fn n_samples(&self) -> usize {
        self.values.nrows()
    }

    pub fn n_features(&self) -> usize {
        self.values.ncols()
    }

    pub fn values(&self) -> &Array2<f64> {
        &self.values
    }

    pub fn feature_names(&self) -> &[String] {
        &self.feature_names
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn column(&self, j: usize) -> ArrayView1<'_, f64> {
        self.values.column(j)
    }

    /// Distinct class identifiers in sorted order. Empty when unlabeled.
    pub fn classes(&self) -> Vec<String> {
        match &self.labels {
            Some(labels) => {
                let set: BTreeSet<&String> = labels.iter().collect();
                set.into_iter().cloned().collect()
            }
            None => Vec::new(),
        }
    }

    /// Per-class sample counts in sorted class order.
    pub fn class_counts(&self) -> BTreeMap<String, usize> {
        let mut counts = BTreeMap::new();
        if let Some(labels) = &self.labels {
            for label in labels {
                *counts.entry(label.clone()).or_insert(0) += 1;
            }
        }
        counts
    }

    /// New matrix containing the given rows, labels carried along.
    pub fn subset_rows(&self, indices: &[usize]) -> FeatureMatrix {
        let n = self.n_features();
        let mut values = Array2::zeros((indices.len(), n));
        for (new_row, &old_row) in indices.iter().enumerate() {
            values.row_mut(new_row).assign(&self.values.row(old_row));
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| indices.iter().map(|&i| l[i].clone()).collect());
        FeatureMatrix {
            values,
            feature_names: self.feature_names.clone(),
            labels,
        }
    }

    /// New matrix containing the given columns (in the given order).
    pub fn select_features(&self, indices: &[usize]) -> FeatureMatrix {
        let s = self.n_samples();
        let mut values = Array2::zeros((s, indices.len()));
        for (new_col, &old_col) in indices.iter().enumerate() {
            values
                .column_mut(new_col)
                .assign(&self.values.column(old_col));
        }
        FeatureMatrix {
            values,
            feature_names: indices
                .iter()
                .map(|&j| self.feature_names[j].clone())
                .collect(),
            labels: self.labels.clone(),
        }
    }
}

/// Outcome of a stratified train/test split.
#[derive(Debug, Clone)]
pub struct SplitResult {
    pub train_indices: Vec<usize>,
    pub test_indices: Vec<usize>,
    pub seed: u64,
}

/// Load a CSV file into a [`FeatureMatrix`].
///
/// The first row must be a header. Every non-label cell must parse as a
/// finite real number; the label column, when named, is extracted verbatim
/// as class identifiers.
pub fn load_csv(path: &Path, label_column: Option<&str>) -> Result<FeatureMatrix> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_path(path)
        .map_err(|e| match e.kind() {
            csv::ErrorKind::Io(_) => Error::Io {
                path: path.to_path_buf(),
                source: std::io::Error::other(e.to_string()),
            },
            _ => Error::Csv {
                path: path.to_path_buf(),
                message: e.to_string(),
            },
        })?;

    let headers: Vec<String> = reader
        .headers()
        .map_err(|e| Error::Csv {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?
        .iter()
        .map(str::to_owned)
        .collect();

    let mut seen = BTreeSet::new();
    for h in &headers {
        if !seen.insert(h.as_str()) {
            return Err(Error::DuplicateColumn(h.clone()));
        }
    }

    let label_idx = match label_column {
        Some(name) => Some(
            headers
                .iter()
                .position(|h| h == name)
                .ok_or_else(|| Error::LabelColumnMissing(name.to_owned()))?,
        ),
        None => None,
    };

    let feature_names: Vec<String> = headers
        .iter()
        .enumerate()
        .filter(|(i, _)| Some(*i) != label_idx)
        .map(|(_, h)| h.clone())
        .collect();

    let mut rows: Vec<f64> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    let mut n_rows = 0usize;
    for (row_idx, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Csv {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?;
        if record.len() != headers.len() {
            return Err(Error::Csv {
                path: path.to_path_buf(),
                message: format!(
                    "row {} has {} fields, header has {}",
                    row_idx + 1,
                    record.len(),
                    headers.len()
                ),
            });
        }
        for (col_idx, cell) in record.iter().enumerate() {
            if Some(col_idx) == label_idx {
                labels.push(cell.to_owned());
                continue;
            }
            let value: f64 = cell.trim().parse().map_err(|_| Error::Cell {
                row: row_idx + 1,
                column: headers[col_idx].clone(),
                message: format!("cannot parse '{cell}' as a number"),
            })?;
            if !value.is_finite() {
                return Err(Error::Cell {
                    row: row_idx + 1,
                    column: headers[col_idx].clone(),
                    message: format!("'{cell}' is not a finite number"),
                });
            }
            rows.push(value);
        }
        n_rows += 1;
    }

    let n_features = feature_names.len();
    let values = Array2::from_shape_vec((n_rows, n_features), rows)
        .expect("row accumulation matches declared shape");
    FeatureMatrix::new(values, feature_names, label_idx.map(|_| labels))
}

/// Per-class sample indices in sorted class order.
fn class_index_lists(labels: &[String]) -> Vec<(String, Vec<usize>)> {
    let mut by_class: BTreeMap<&String, Vec<usize>> = BTreeMap::new();
    for (i, label) in labels.iter().enumerate() {
        by_class.entry(label).or_default().push(i);
    }
    by_class
        .into_iter()
        .map(|(k, v)| (k.clone(), v))
        .collect()
}

/// Apportion `target` items over classes proportionally to their sizes,
/// using largest-remainder rounding. Ties go to the earlier class.
fn largest_remainder(class_sizes: &[usize], fraction: f64, target: usize) -> Vec<usize> {
    let quotas: Vec<f64> = class_sizes.iter().map(|&c| c as f64 * fraction).collect();
    let mut counts: Vec<usize> = quotas.iter().map(|q| q.floor() as usize).collect();
    let assigned: usize = counts.iter().sum();
    let mut order: Vec<usize> = (0..class_sizes.len()).collect();
    order.sort_by(|&a, &b| {
        let ra = quotas[a] - quotas[a].floor();
        let rb = quotas[b] - quotas[b].floor();
        rb.total_cmp(&ra).then(a.cmp(&b))
    });
    for &class in order.iter().take(target.saturating_sub(assigned)) {
        counts[class] += 1;
    }
    counts
}

/// Stratified train/test split: the test part holds a `test_fraction` share
/// of every class, deterministic for a fixed seed.
pub fn stratified_split(
    data: &FeatureMatrix,
    test_fraction: f64,
    seed: u64,
) -> Result<SplitResult> {
    if !(test_fraction > 0.0 && test_fraction < 1.0) {
        return Err(Error::InvalidConfig(format!(
            "test_fraction must lie in (0, 1), got {test_fraction}"
        )));
    }
    let labels = data.labels().ok_or(Error::LabelsMissing)?;
    let classes = class_index_lists(labels);
    for (class, indices) in &classes {
        if indices.len() < 2 {
            return Err(Error::ClassTooSmall {
                class: class.clone(),
                count: indices.len(),
                required: 2,
            });
        }
    }

    let s = data.n_samples();
    let target = (s as f64 * test_fraction).round() as usize;
    if target == 0 {
        return Err(Error::EmptySplit { part: "test" });
    }
    if target >= s {
        return Err(Error::EmptySplit { part: "train" });
    }

    let sizes: Vec<usize> = classes.iter().map(|(_, idx)| idx.len()).collect();
    let test_counts = largest_remainder(&sizes, test_fraction, target);

    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut train = Vec::with_capacity(s - target);
    let mut test = Vec::with_capacity(target);
    for ((_, indices), &take) in classes.iter().zip(&test_counts) {
        let mut shuffled = indices.clone();
        shuffled.shuffle(&mut rng);
        test.extend_from_slice(&shuffled[..take]);
        train.extend_from_slice(&shuffled[take..]);
    }
    train.sort_unstable();
    test.sort_unstable();
    Ok(SplitResult {
        train_indices: train,
        test_indices: test,
        seed,
    })
}

/// Remove features that are constant on the training set, everywhere.
///
/// Constancy is exact equality of all training values. Returns the pruned
/// training matrix, the other matrices pruned identically, and the mapping
/// from new column positions to original ones.
pub fn prune_constant_features(
    train: &FeatureMatrix,
    others: &[&FeatureMatrix],
) -> Result<(FeatureMatrix, Vec<FeatureMatrix>, Vec<usize>)> {
    for other in others {
        if other.n_features() != train.n_features() {
            return Err(Error::FeatureCountMismatch {
                expected: train.n_features(),
                found: other.n_features(),
            });
        }
    }
    let kept: Vec<usize> = (0..train.n_features())
        .filter(|&j| {
            let col = train.column(j);
            match col.first() {
                Some(&first) => col.iter().any(|&v| v != first),
                None => true,
            }
        })
        .collect();
    let pruned_train = train.select_features(&kept);
    let pruned_others = others.iter().map(|m| m.select_features(&kept)).collect();
    Ok((pruned_train, pruned_others, kept))
}

/// Per-feature location/scale fitted on training data only.
/// Scale is the population standard deviation (divide by S).
#[derive(Debug, Clone)]
pub struct Standardizer {
    means: Vec<f64>,
    std_devs: Vec<f64>,
}

impl Standardizer {
    pub fn fit(train: &FeatureMatrix) -> Result<Self> {
        let s = train.n_samples() as f64;
        if train.n_samples() == 0 {
            return Err(Error::EmptyTrainingSet);
        }
        let mut means = Vec::with_capacity(train.n_features());
        let mut std_devs = Vec::with_capacity(train.n_features());
        for j in 0..train.n_features() {
            let col = train.column(j);
            let mean = col.sum() / s;
            let var = col.iter().map(|&v| (v - mean) * (v - mean)).sum::<f64>() / s;
            let sd = var.sqrt();
            if sd == 0.0 {
                return Err(Error::ZeroVariance(train.feature_names()[j].clone()));
            }
            means.push(mean);
            std_devs.push(sd);
        }
        Ok(Self { means, std_devs })
    }

    /// z = (x − μ̂) / σ̂ per feature.
    pub fn transform(&self, data: &FeatureMatrix) -> Result<FeatureMatrix> {
        if data.n_features() != self.means.len() {
            return Err(Error::FeatureCountMismatch {
                expected: self.means.len(),
                found: data.n_features(),
            });
        }
        let mut values = data.values.clone();
        for (j, mut col) in values.columns_mut().into_iter().enumerate() {
            col.mapv_inplace(|v| (v - self.means[j]) / self.std_devs[j]);
        }
        Ok(FeatureMatrix {
            values,
            feature_names: data.feature_names.clone(),
            labels: data.labels.clone(),
        })
    }

    pub fn means(&self) -> &[f64] {
        &self.means
    }

    pub fn std_devs(&self) -> &[f64] {
        &self.std_devs
    }
}

/// Stratified k-fold partition: every class is shuffled with the seed and
/// dealt into k folds whose sizes differ by at most one.
///
/// Returns `(train_indices, validation_indices)` per fold; validation sets
/// are disjoint and cover all samples.
pub fn stratified_kfold(
    data: &FeatureMatrix,
    k: usize,
    seed: u64,
) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    if k < 2 {
        return Err(Error::InvalidConfig(format!(
            "k-fold requires k >= 2, got {k}"
        )));
    }
    let labels = data.labels().ok_or(Error::LabelsMissing)?;
    let classes = class_index_lists(labels);
    for (class, indices) in &classes {
        if indices.len() < k {
            return Err(Error::ClassTooSmall {
                class: class.clone(),
                count: indices.len(),
                required: k,
            });
        }
    }

    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut validation: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (_, indices) in &classes {
        let mut shuffled = indices.clone();
        shuffled.shuffle(&mut rng);
        let base = shuffled.len() / k;
        let extra = shuffled.len() % k;
        let mut start = 0;
        for (fold, slot) in validation.iter_mut().enumerate() {
            let size = base + usize::from(fold < extra);
            slot.extend_from_slice(&shuffled[start..start + size]);
            start += size;
        }
    }

    let all: BTreeSet<usize> = (0..data.n_samples()).collect();
    Ok(validation
        .into_iter()
        .map(|mut val| {
            val.sort_unstable();
            let val_set: BTreeSet<usize> = val.iter().copied().collect();
            let train: Vec<usize> = all.difference(&val_set).copied().collect();
            (train, val)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::array;
    use std::io::Write;

    fn write_csv(content: &str) -> tempfile::NamedTempFile {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        file.write_all(content.as_bytes()).unwrap();
        file
    }

    fn labeled(values: Array2<f64>, labels: &[&str]) -> FeatureMatrix {
        let names = (0..values.ncols()).map(|j| format!("f{j}")).collect();
        FeatureMatrix::new(
            values,
            names,
            Some(labels.iter().map(|s| s.to_string()).collect()),
        )
        .unwrap()
    }

    #[test]
    fn load_csv_extracts_label_column() {
        let file = write_csv("a,b,y\n1,2,x\n3,4,y\n5,6,x\n");
        let m = load_csv(file.path(), Some("y")).unwrap();
        assert_eq!(m.n_features(), 2);
        assert_eq!(m.n_samples(), 3);
        assert_eq!(m.feature_names(), &["a".to_string(), "b".to_string()]);
        assert_eq!(m.classes(), vec!["x".to_string(), "y".to_string()]);
    }

    #[test]
    fn load_csv_rejects_nan_with_location() {
        let file = write_csv("a,b\n1,2\n3,NaN\n");
        let err = load_csv(file.path(), None).unwrap_err();
        match err {
            Error::Cell { row, column, .. } => {
                assert_eq!(row, 2);
                assert_eq!(column, "b");
            }
            other => panic!("unexpected error: {other:?}"),
        }
    }

    #[test]
    fn load_csv_without_label_column_keeps_all_columns() {
        let file = write_csv("a,b\n1,2\n3,4\n");
        let m = load_csv(file.path(), None).unwrap();
        assert!(m.labels().is_none());
        assert_eq!(m.n_features(), 2);
    }

    #[test]
    fn load_csv_rejects_duplicate_headers_and_missing_label() {
        let file = write_csv("a,a\n1,2\n");
        assert!(matches!(
            load_csv(file.path(), None),
            Err(Error::DuplicateColumn(_))
        ));
        let file = write_csv("a,b\n1,2\n");
        assert!(matches!(
            load_csv(file.path(), Some("y")),
            Err(Error::LabelColumnMissing(_))
        ));
    }

    #[test]
    fn load_csv_missing_file_is_io_error() {
        let err = load_csv(Path::new("/nonexistent/nope.csv"), None).unwrap_err();
        assert!(matches!(err, Error::Io { .. }));
    }

    #[test]
    fn split_preserves_class_proportions() {
        // 10 samples, classes {A:6, B:4}, test_fraction 0.3 -> test = 2 A + 1 B.
        let values = Array2::zeros((10, 2));
        let m = labeled(values, &["A", "A", "A", "A", "A", "A", "B", "B", "B", "B"]);
        let split = stratified_split(&m, 0.3, 0).unwrap();
        assert_eq!(split.test_indices.len(), 3);
        assert_eq!(split.train_indices.len(), 7);
        let labels = m.labels().unwrap();
        let test_a = split
            .test_indices
            .iter()
            .filter(|&&i| labels[i] == "A")
            .count();
        let test_b = split.test_indices.len() - test_a;
        assert_eq!((test_a, test_b), (2, 1));
        // disjoint and covering
        let mut all: Vec<usize> = split
            .train_indices
            .iter()
            .chain(&split.test_indices)
            .copied()
            .collect();
        all.sort_unstable();
        assert_eq!(all, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn split_is_deterministic() {
        let m = labeled(
            Array2::zeros((10, 2)),
            &["A", "A", "A", "A", "A", "A", "B", "B", "B", "B"],
        );
        let a = stratified_split(&m, 0.3, 7).unwrap();
        let b = stratified_split(&m, 0.3, 7).unwrap();
        assert_eq!(a.train_indices, b.train_indices);
        assert_eq!(a.test_indices, b.test_indices);
        let c = stratified_split(&m, 0.3, 8).unwrap();
        assert!(c.test_indices != a.test_indices || c.train_indices != a.train_indices);
    }

    #[test]
    fn split_rejects_singleton_class() {
        let m = labeled(Array2::zeros((3, 1)), &["A", "A", "B"]);
        assert!(matches!(
            stratified_split(&m, 0.3, 0),
            Err(Error::ClassTooSmall { .. })
        ));
    }

    #[test]
    fn split_rejects_empty_parts() {
        let m = labeled(Array2::zeros((4, 1)), &["A", "A", "B", "B"]);
        assert!(matches!(
            stratified_split(&m, 0.01, 0),
            Err(Error::EmptySplit { part: "test" })
        ));
        assert!(matches!(
            stratified_split(&m, 0.99, 0),
            Err(Error::EmptySplit { part: "train" })
        ));
    }

    #[test]
    fn prune_removes_train_constant_columns_everywhere() {
        let train = labeled(
            array![[5.0, 1.0, 3.0], [5.0, 2.0, 3.5], [5.0, 3.0, 4.0]],
            &["A", "A", "B"],
        );
        let test = labeled(
            array![[1.0, 9.0, 7.0], [2.0, 8.0, 7.0]], // col 2 constant in test only
            &["A", "B"],
        );
        let (ptrain, others, kept) = prune_constant_features(&train, &[&test]).unwrap();
        assert_eq!(kept, vec![1, 2]); // col 0 constant on train; col 2 kept (train varies)
        assert_eq!(ptrain.n_features(), 2);
        assert_eq!(others[0].n_features(), 2);
        assert_eq!(ptrain.feature_names(), &["f1".to_string(), "f2".to_string()]);
    }

    #[test]
    fn prune_is_identity_without_constants_and_idempotent() {
        let train = labeled(array![[1.0, 2.0], [2.0, 1.0]], &["A", "B"]);
        let (p1, _, kept1) = prune_constant_features(&train, &[]).unwrap();
        assert_eq!(kept1, vec![0, 1]);
        assert_eq!(p1.values(), train.values());
        let (p2, _, kept2) = prune_constant_features(&p1, &[]).unwrap();
        assert_eq!(kept2, vec![0, 1]);
        assert_eq!(p2.values(), p1.values());
    }

    #[test]
    fn prune_rejects_feature_count_mismatch() {
        let train = labeled(array![[1.0, 2.0], [2.0, 1.0]], &["A", "B"]);
        let other = labeled(array![[1.0], [2.0]], &["A", "B"]);
        assert!(matches!(
            prune_constant_features(&train, &[&other]),
            Err(Error::FeatureCountMismatch { .. })
        ));
    }

    #[test]
    fn standardizer_matches_population_sigma() {
        // column [1,2,3]: mean 2, population sigma sqrt(2/3)
        let m = labeled(array![[1.0], [2.0], [3.0]], &["A", "A", "B"]);
        let s = Standardizer::fit(&m).unwrap();
        let z = s.transform(&m).unwrap();
        let sigma = (2.0f64 / 3.0).sqrt();
        assert_abs_diff_eq!(z.values()[[0, 0]], -1.0 / sigma, epsilon = 1e-12);
        assert_abs_diff_eq!(z.values()[[0, 0]], -1.224_744_871_391_589, epsilon = 1e-12);
        assert_abs_diff_eq!(z.values()[[1, 0]], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(z.values()[[2, 0]], 1.224_744_871_391_589, epsilon = 1e-12);
    }

    #[test]
    fn standardized_training_columns_have_zero_mean_unit_variance() {
        let m = labeled(
            array![[1.0, 10.0], [2.0, -3.0], [4.0, 0.5], [9.0, 2.0]],
            &["A", "A", "B", "B"],
        );
        let s = Standardizer::fit(&m).unwrap();
        let z = s.transform(&m).unwrap();
        for j in 0..2 {
            let col = z.column(j);
            let mean = col.sum() / 4.0;
            let var = col.iter().map(|&v| (v - mean) * (v - mean)).sum::<f64>() / 4.0;
            assert!(mean.abs() < 1e-10);
            assert_abs_diff_eq!(var, 1.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn standardizer_rejects_constant_column() {
        let m = labeled(array![[5.0], [5.0]], &["A", "B"]);
        assert!(matches!(
            Standardizer::fit(&m),
            Err(Error::ZeroVariance(_))
        ));
    }

    #[test]
    fn kfold_balanced_classes_give_one_per_class_per_fold() {
        let m = labeled(
            Array2::zeros((9, 1)),
            &["A", "A", "A", "B", "B", "B", "C", "C", "C"],
        );
        let folds = stratified_kfold(&m, 3, 0).unwrap();
        let labels = m.labels().unwrap();
        for (_, val) in &folds {
            assert_eq!(val.len(), 3);
            let mut classes: Vec<&str> = val.iter().map(|&i| labels[i].as_str()).collect();
            classes.sort_unstable();
            assert_eq!(classes, vec!["A", "B", "C"]);
        }
    }

    #[test]
    fn kfold_uneven_classes_follow_largest_remainder_sizes() {
        // {A:6, B:4}, k=3 -> validation sizes 4,3,3 with B >= 1 in each fold.
        let m = labeled(
            Array2::zeros((10, 1)),
            &["A", "A", "A", "A", "A", "A", "B", "B", "B", "B"],
        );
        let folds = stratified_kfold(&m, 3, 0).unwrap();
        let sizes: Vec<usize> = folds.iter().map(|(_, v)| v.len()).collect();
        assert_eq!(sizes, vec![4, 3, 3]);
        let labels = m.labels().unwrap();
        for (_, val) in &folds {
            assert!(val.iter().any(|&i| labels[i] == "B"));
        }
    }

    #[test]
    fn kfold_covers_all_samples_exactly_once() {
        let m = labeled(
            Array2::zeros((10, 1)),
            &["A", "A", "A", "A", "A", "A", "B", "B", "B", "B"],
        );
        let folds = stratified_kfold(&m, 3, 42).unwrap();
        let mut all: Vec<usize> = folds.iter().flat_map(|(_, v)| v.iter().copied()).collect();
        all.sort_unstable();
        assert_eq!(all, (0..10).collect::<Vec<_>>());
        for (train, val) in &folds {
            assert!(train.iter().all(|i| !val.contains(i)));
            assert_eq!(train.len() + val.len(), 10);
        }
    }

    #[test]
    fn kfold_same_seed_same_folds() {
        let m = labeled(
            Array2::zeros((12, 1)),
            &["A", "A", "A", "A", "B", "B", "B", "B", "C", "C", "C", "C"],
        );
        assert_eq!(
            stratified_kfold(&m, 3, 5).unwrap(),
            stratified_kfold(&m, 3, 5).unwrap()
        );
    }

    #[test]
    fn kfold_rejects_class_smaller_than_k() {
        let m = labeled(Array2::zeros((4, 1)), &["A", "A", "A", "B"]);
        assert!(matches!(
            stratified_kfold(&m, 3, 0),
            Err(Error::ClassTooSmall { .. })
        ));
    }
}
