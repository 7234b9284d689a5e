use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use cpbound_core::{Complex64, ComplexMatrix};
use serde::{Deserialize, Serialize};

/// On-disk matrix container: `n` is the common order, each named matrix is a
/// row-major nested array of [re, im] pairs.
///
/// Serialization goes through serde_json, whose shortest-roundtrip float
/// encoding makes save/load bit-exact; the BTreeMap keeps key order (and so
/// the emitted bytes) deterministic.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixFile {
    pub n: usize,
    pub matrices: BTreeMap<String, Vec<Vec<[f64; 2]>>>,
}

impl MatrixFile {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            matrices: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, name: &str, m: &ComplexMatrix) {
        let n = m.order();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
            .collect();
        self.matrices.insert(name.to_string(), rows);
    }

    pub fn get(&self, name: &str) -> Result<ComplexMatrix> {
        let rows = self
            .matrices
            .get(name)
            .with_context(|| format!("matrix `{name}` is missing from the file"))?;
        if rows.len() != self.n {
            bail!(
                "matrix `{name}` has {} rows but the file declares n = {}",
                rows.len(),
                self.n
            );
        }
        let mut entries = Vec::with_capacity(self.n * self.n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != self.n {
                bail!(
                    "matrix `{name}` row {i} has {} entries but the file declares n = {}",
                    row.len(),
                    self.n
                );
            }
            entries.extend(row.iter().map(|&[re, im]| Complex64::new(re, im)));
        }
        ComplexMatrix::new(self.n, entries)
            .with_context(|| format!("matrix `{name}` is not a valid order-{} matrix", self.n))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        let file: Self = serde_json::from_str(&text)
            .with_context(|| format!("{} is not a valid matrix file", path.display()))?;
        if file.n == 0 {
            bail!("{}: matrix order must be at least 1", path.display());
        }
        Ok(file)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut text = serde_json::to_string_pretty(self).context("serializing matrix file")?;
        text.push('\n');
        fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
    }
}
