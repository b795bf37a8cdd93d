//! The determinant families.

use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::sequences::SeqCache;
use crate::{Int, Poly};

pub type Matrix = PolyMatrix<Int>;

fn check_dim(dim: i64) -> Result<usize> {
    if dim < 1 {
        return Err(Error::InvalidParameter(format!(
            "dimension must be >= 1, got {dim}"
        )));
    }
    Ok(dim as usize)
}

fn check_power(k: i64) -> Result<u32> {
    u32::try_from(k).map_err(|_| Error::InvalidParameter(format!("power must be >= 0, got {k}")))
}

/// Entry `(i, j) = f(n + m i - ell j, x, q^(ell j) s)^k`.
pub fn power_matrix(seq: &SeqCache, n: i64, m: i64, ell: i64, k: i64, dim: i64) -> Result<Matrix> {
    let dim = check_dim(dim)?;
    let k = check_power(k)?;
    Ok(PolyMatrix::from_fn(dim, |i, j| {
        let (i, j) = (i as i64, j as i64);
        seq.qfib(n + m * i - ell * j, ell * j).pow(k)
    }))
}

/// Entry `(i, j) = f(n + m i)^j f(n + m i - 1, x, qs)^(k-j)`, `0 <= i, j <= k`.
pub fn lemma2_matrix(seq: &SeqCache, n: i64, m: i64, k: i64) -> Result<Matrix> {
    d_rows(seq, n, m, k, |i| i)
}

/// Like [`lemma2_matrix`] but row `i` uses index `i + [i >= j]`, skipping
/// row `j` of the taller matrix.
pub fn d_matrix(seq: &SeqCache, n: i64, m: i64, k: i64, j: i64) -> Result<Matrix> {
    d_rows(seq, n, m, k, |i| i + i64::from(i >= j))
}

fn d_rows(
    seq: &SeqCache,
    n: i64,
    m: i64,
    k: i64,
    row_index: impl Fn(i64) -> i64,
) -> Result<Matrix> {
    let dim = check_dim(k + 1)?;
    let k = k as u32;
    Ok(PolyMatrix::from_fn(dim, |i, h| {
        let idx = n + m * row_index(i as i64);
        let h = h as u32;
        seq.qfib(idx, 0).pow(h) * seq.qfib(idx - 1, 1).pow(k - h)
    }))
}

/// Entry `(i, j) = f(ell i - 1, x, qs)^j (-f(ell i, x, s))^(k-j)`.
pub fn lemma3_matrix(seq: &SeqCache, ell: i64, k: i64) -> Result<Matrix> {
    let dim = check_dim(k + 1)?;
    let k = k as u32;
    Ok(PolyMatrix::from_fn(dim, |i, j| {
        let i = i as i64;
        let j = j as u32;
        seq.qfib(ell * i - 1, 1).pow(j) * (-seq.qfib(ell * i, 0)).pow(k - j)
    }))
}

/// Determinant of `m` after `s -> q^shift s` in every entry.
pub(crate) fn det_shifted(m: &Matrix, shift: i64) -> Result<Poly> {
    Ok(m.det()?.subst_s_scale(shift as i32))
}
