use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense square complex matrix with row-major storage.
///
/// Order is fixed at construction and always at least 1. Entries are plain
/// `Complex64`; constructors that accept caller data reject non-finite values
/// so the numerical kernels never see NaN or infinity.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    order: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Builds an order-`order` matrix from row-major entries.
    pub fn new(order: usize, entries: Vec<Complex64>) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        let expected = order * order;
        if entries.len() != expected {
            return Err(Error::BadEntryCount {
                order,
                expected,
                got: entries.len(),
            });
        }
        for (k, z) in entries.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFiniteEntry {
                    row: k / order,
                    col: k % order,
                });
            }
        }
        Ok(Self { order, entries })
    }

    pub fn zeros(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(Self {
            order,
            entries: vec![Complex64::ZERO; order * order],
        })
    }

    pub fn identity(order: usize) -> Result<Self> {
        let mut m = Self::zeros(order)?;
        for i in 0..order {
            m[(i, i)] = Complex64::ONE;
        }
        Ok(m)
    }

    /// Real diagonal matrix; handy for small fixtures.
    pub fn diagonal(diag: &[f64]) -> Result<Self> {
        let mut m = Self::zeros(diag.len())?;
        for (i, &d) in diag.iter().enumerate() {
            if !d.is_finite() {
                return Err(Error::NonFiniteEntry { row: i, col: i });
            }
            m[(i, i)] = Complex64::new(d, 0.0);
        }
        Ok(m)
    }

    /// Builds entries from a closure over (row, col). Infallible on purpose:
    /// callers supply finite values by construction.
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> Complex64) -> Result<Self> {
        let mut m = Self::zeros(order)?;
        for i in 0..order {
            for j in 0..order {
                m[(i, j)] = f(i, j);
            }
        }
        Ok(m)
    }

    /// Real rows, mostly for tests and fixtures.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut entries = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(Error::BadEntryCount {
                    order,
                    expected: order * order,
                    got: row.len() * order,
                });
            }
            entries.extend(row.iter().map(|&x| Complex64::new(x, 0.0)));
        }
        Self::new(order, entries)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn is_finite(&self) -> bool {
        self.entries
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.order;
        let mut out = Self {
            order: n,
            entries: vec![Complex64::ZERO; n * n],
        };
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.entries[i * n + j].conj();
            }
        }
        out
    }

    pub fn scale(&self, k: f64) -> Self {
        self.scale_complex(Complex64::new(k, 0.0))
    }

    pub fn scale_complex(&self, k: Complex64) -> Self {
        Self {
            order: self.order,
            entries: self.entries.iter().map(|z| z * k).collect(),
        }
    }

    /// Entrywise 2-norm; equals the Schatten 2-norm.
    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// ‖A − A*‖_F, the distance from being Hermitian.
    pub fn hermitian_defect(&self) -> f64 {
        let n = self.order;
        let mut sum = 0.0;
        for i in 0..n {
            for j in 0..n {
                let d = self.entries[i * n + j] - self.entries[j * n + i].conj();
                sum += d.norm_sqr();
            }
        }
        sum.sqrt()
    }

    /// Sum of diagonal entries.
    pub fn trace(&self) -> Complex64 {
        (0..self.order).map(|i| self.entries[i * self.order + i]).sum()
    }

    /// Max entrywise modulus; used for scale-aware tolerances.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i * self.order + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[i * self.order + j]
    }
}

// Arithmetic on references; orders must already agree. Public entry points
// validate dimensions before arithmetic, so a mismatch here is a caller bug.
impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.order, rhs.order, "matrix order mismatch in add");
        ComplexMatrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.order, rhs.order, "matrix order mismatch in sub");
        ComplexMatrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.order, rhs.order, "matrix order mismatch in mul");
        let n = self.order;
        let mut entries = vec![Complex64::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = self.entries[i * n + k];
                if aik == Complex64::ZERO {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += aik * rhs.entries[k * n + j];
                }
            }
        }
        ComplexMatrix { order: n, entries }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix(order={})", self.order)?;
        for i in 0..self.order {
            write!(f, "  [")?;
            for j in 0..self.order {
                let z = self[(i, j)];
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:+.6e}{:+.6e}i", z.re, z.im)?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
