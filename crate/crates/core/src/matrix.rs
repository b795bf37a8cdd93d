//! Square matrices over the polynomial ring and their exact determinants.

use crate::error::{Error, Result};
use crate::poly::MPoly;
use crate::scalar::Coefficient;

/// A square matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix<C> {
    dim: usize,
    entries: Vec<MPoly<C>>,
}

impl<C: Coefficient> PolyMatrix<C> {
    pub fn from_rows(rows: Vec<Vec<MPoly<C>>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::InvalidParameter(
                "matrix dimension must be at least 1".into(),
            ));
        }
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidParameter(
                "matrix rows must all have length equal to the row count".into(),
            ));
        }
        Ok(PolyMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a `dim x dim` matrix from `f(i, j)`. Panics if `dim == 0`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> MPoly<C>) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(
            dim,
            |i, j| if i == j { MPoly::one() } else { MPoly::zero() },
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &MPoly<C> {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[MPoly<C>]> {
        self.entries.chunks(self.dim)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.dim {
            self.entries.swap(a * self.dim + j, b * self.dim + j);
        }
    }

    /// The matrix with row `row` and column `col` removed. `None` for 1x1.
    pub fn minor(&self, row: usize, col: usize) -> Option<Self> {
        if self.dim == 1 {
            return None;
        }
        let dim = self.dim - 1;
        Some(Self::from_fn(dim, |i, j| {
            let si = if i < row { i } else { i + 1 };
            let sj = if j < col { j } else { j + 1 };
            self.get(si, sj).clone()
        }))
    }

    pub fn map(&self, f: impl Fn(&MPoly<C>) -> MPoly<C>) -> Self {
        PolyMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Determinant; Laplace expansion up to 3x3, fraction-free elimination
    /// above.
    pub fn det(&self) -> Result<MPoly<C>> {
        if self.dim <= 3 {
            Ok(self.det_cofactor())
        } else {
            self.det_bareiss()
        }
    }

    /// Bareiss elimination. Every division is exact in an integral domain, so
    /// an `Err` here means a bug, not bad input.
    pub fn det_bareiss(&self) -> Result<MPoly<C>> {
        let n = self.dim;
        let mut a: Vec<Vec<MPoly<C>>> = self.rows().map(|r| r.to_vec()).collect();
        let mut negate = false;
        let mut prev = MPoly::one();
        for k in 0..n.saturating_sub(1) {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(MPoly::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let cross = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = cross.exact_div(&prev)?;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }

    /// Laplace expansion along the first row. Exponential; an independent
    /// check on [`Self::det_bareiss`] for small matrices.
    pub fn det_cofactor(&self) -> MPoly<C> {
        let cols: Vec<usize> = (0..self.dim).collect();
        self.cofactor_rec(0, &cols)
    }

    fn cofactor_rec(&self, row: usize, cols: &[usize]) -> MPoly<C> {
        match cols.len() {
            1 => self.get(row, cols[0]).clone(),
            2 => {
                self.get(row, cols[0]) * self.get(row + 1, cols[1])
                    - self.get(row, cols[1]) * self.get(row + 1, cols[0])
            }
            _ => {
                let mut total = MPoly::zero();
                for (pos, &c) in cols.iter().enumerate() {
                    let entry = self.get(row, c);
                    if entry.is_zero() {
                        continue;
                    }
                    let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let term = entry * &self.cofactor_rec(row + 1, &rest);
                    if pos % 2 == 0 {
                        total += &term;
                    } else {
                        total -= &term;
                    }
                }
                total
            }
        }
    }
}
