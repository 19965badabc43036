//! Square integer matrices with arbitrary-precision entries.

use num::bigint::BigInt;
use num::traits::{One, Zero};
use std::fmt;

/// An `n x n` matrix over the integers. Entries are exact `BigInt`s; no
/// floating point enters this type anywhere.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>, // row-major, length n*n
}

impl IntMatrix {
    /// Build from row-major entries. Panics if `entries.len() != n * n`.
    pub fn new(n: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), n * n, "entry count must be n*n");
        Self { n, entries }
    }

    /// Build from rows of machine integers (convenience for tests and fixtures).
    ///
    /// Panics if the rows do not form a square matrix.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "rows must form a square matrix");
            entries.extend(row.iter().map(|&v| BigInt::from(v)));
        }
        Self { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    /// Dimension `n` of the matrix.
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.n + j] = v;
    }

    /// Row-major view of the entries.
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.n)
            .map(|i| self.entries[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.entry(i, i)).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        Self {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Add `c` to every diagonal entry.
    pub fn add_scalar_diag(&self, c: &BigInt) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            let v = m.entry(i, i) + c;
            m.set_entry(i, i, v);
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * other.entry(k, j);
                }
            }
        }
        Self { n, entries }
    }

    /// Exact `e`-th power by binary exponentiation. `pow(0)` is the identity.
    pub fn pow(&self, e: u64) -> Self {
        let mut result = Self::identity(self.n);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix({}x{})[", self.n, self.n)?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", cells.join(", "))?;
        }
        write!(f, "]")
    }
}
