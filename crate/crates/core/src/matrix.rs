//! The order-2 baseline: symmetric eigendecomposition via cyclic Jacobi
//! rotations, best rank-one approximation of matrices through the dominant
//! singular pair, and the two scalar detectors used to classify symmetric
//! matrices whose best rank-one approximation fails to be unique or
//! symmetric: the characteristic-polynomial discriminant (multiple
//! eigenvalue) and the Kronecker-sum determinant (a pair lambda_i + lambda_j
//! vanishing).
//!
//! Matrices are order-2 [`Tensor`]s; there is no separate matrix type.

use crate::error::{Error, Result};
use crate::linalg::{det_real, matmul};
use crate::tensor::{Rank1Approx, Tensor, UnitVector};

/// Full spectrum of a symmetric matrix, eigenvalues sorted descending with
/// matching orthonormal eigenvectors.
#[derive(Clone, Debug)]
pub struct SymSpectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<UnitVector>,
}

/// Dominant singular triple of a matrix: A v = sigma u, A^T u = sigma v.
#[derive(Clone, Debug)]
pub struct MatrixRank1 {
    pub sigma: f64,
    pub left: UnitVector,
    pub right: UnitVector,
}

fn as_matrix(t: &Tensor) -> Result<(usize, usize, &[f64])> {
    if t.order() != 2 {
        return Err(Error::Unsupported(format!(
            "expected an order-2 tensor, found order {}",
            t.order()
        )));
    }
    Ok((t.shape()[0], t.shape()[1], t.data()))
}

fn require_symmetric(t: &Tensor) -> Result<(usize, &[f64])> {
    let (m, n, a) = as_matrix(t)?;
    if m != n {
        return Err(Error::NotSymmetric(format!("matrix is {m}x{n}")));
    }
    let scale = t.max_abs().max(1.0);
    for i in 0..n {
        for j in (i + 1)..n {
            if (a[i * n + j] - a[j * n + i]).abs() > 1e-12 * scale {
                return Err(Error::NotSymmetric(format!(
                    "entries ({i},{j}) and ({j},{i}) differ"
                )));
            }
        }
    }
    Ok((n, a))
}

/// Fixes the sign so the first coordinate of visible magnitude is positive.
fn canonical_sign(v: &mut [f64]) {
    for &x in v.iter() {
        if x.abs() > 1e-12 {
            if x < 0.0 {
                for y in v.iter_mut() {
                    *y = -*y;
                }
            }
            return;
        }
    }
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps run until the off-diagonal Frobenius mass falls below
/// 1e-14 * ||A||_F. Eigenvalues come back sorted descending; each
/// eigenvector has its first non-negligible coordinate positive so repeated
/// runs agree exactly.
pub fn sym_eigen(t: &Tensor) -> Result<SymSpectrum> {
    let (n, data) = require_symmetric(t)?;
    let mut a = data.to_vec();
    // symmetrize away the (tolerated) asymmetry so rotations stay exact
    for i in 0..n {
        for j in (i + 1)..n {
            let avg = 0.5 * (a[i * n + j] + a[j * n + i]);
            a[i * n + j] = avg;
            a[j * n + i] = avg;
        }
    }
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let norm = t.hs_norm();
    let target = 1e-14 * norm;

    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    while off(&a) > target {
        sweeps += 1;
        if sweeps > 60 {
            return Err(Error::NonConvergence(format!(
                "jacobi sweeps exhausted, off-diagonal {:.3e}",
                off(&a)
            )));
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let tan = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + tan * tan).sqrt();
                let s = tan * c;

                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].partial_cmp(&a[i * n + i]).unwrap());

    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let mut eigenvectors = Vec::with_capacity(n);
    for &col in &order {
        let mut vec_col: Vec<f64> = (0..n).map(|r| v[r * n + col]).collect();
        canonical_sign(&mut vec_col);
        eigenvectors.push(UnitVector::normalized(&vec_col)?);
    }
    Ok(SymSpectrum {
        eigenvalues,
        eigenvectors,
    })
}

/// Best rank-one approximation of a nonzero matrix via the dominant singular
/// pair, computed from the Gram matrix on the smaller side.
pub fn best_rank1_matrix(t: &Tensor) -> Result<MatrixRank1> {
    let (m, n, a) = as_matrix(t)?;
    if t.hs_norm() == 0.0 {
        return Err(Error::DegenerateInput("zero matrix".into()));
    }
    let transpose = |a: &[f64]| -> Vec<f64> {
        let mut out = vec![0.0; m * n];
        for i in 0..m {
            for j in 0..n {
                out[j * m + i] = a[i * n + j];
            }
        }
        out
    };
    let (sigma, left, right);
    if n <= m {
        let at = transpose(a);
        let gram = matmul(&at, a, n, m, n); // A^T A
        let spec = sym_eigen(&Tensor::new(vec![n, n], gram)?)?;
        sigma = spec.eigenvalues[0].max(0.0).sqrt();
        let v = spec.eigenvectors[0].clone();
        let av = matmul(a, v.coords(), m, n, 1);
        let u: Vec<f64> = av.iter().map(|x| x / sigma).collect();
        left = UnitVector::normalized(&u)?;
        right = v;
    } else {
        let at = transpose(a);
        let gram = matmul(a, &at, m, n, m); // A A^T
        let spec = sym_eigen(&Tensor::new(vec![m, m], gram)?)?;
        sigma = spec.eigenvalues[0].max(0.0).sqrt();
        let u = spec.eigenvectors[0].clone();
        let atu = matmul(&at, u.coords(), n, m, 1);
        let v: Vec<f64> = atu.iter().map(|x| x / sigma).collect();
        left = u;
        right = UnitVector::normalized(&v)?;
    }
    Ok(MatrixRank1 { sigma, left, right })
}

/// Symmetric best rank-one approximation of a symmetric matrix, as the
/// extreme eigenvalue of largest magnitude times its eigenvector square.
///
/// The returned flag is true when lambda_1 + lambda_n vanishes within
/// 1e-10 * ||A||, the exact situation in which nonsymmetric best rank-one
/// approximations also exist. Ties |lambda_1| = |lambda_n| resolve to the
/// positive eigenvalue.
pub fn sym_best_rank1(t: &Tensor) -> Result<(Rank1Approx, bool)> {
    let norm = t.hs_norm();
    if norm == 0.0 {
        return Err(Error::DegenerateInput("zero matrix".into()));
    }
    let spec = sym_eigen(t)?;
    let n = spec.eigenvalues.len();
    let (l1, ln) = (spec.eigenvalues[0], spec.eigenvalues[n - 1]);
    let idx = if ln.abs() > l1.abs() { n - 1 } else { 0 };
    let nonsym_possible = (l1 + ln).abs() <= 1e-10 * norm;
    let approx = Rank1Approx::symmetric(spec.eigenvalues[idx], spec.eigenvectors[idx].clone(), 2);
    Ok((approx, nonsym_possible))
}

/// Coefficients of the characteristic polynomial det(xI - A), descending
/// powers and monic, by the Faddeev-LeVerrier recurrence.
fn char_poly_coeffs(a: &[f64], n: usize) -> Vec<f64> {
    let mut coeffs = vec![0.0; n + 1];
    coeffs[0] = 1.0;
    let mut m = vec![0.0; n * n]; // M_0 = 0
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{k-1} I
        let mut am = matmul(a, &m, n, n, n);
        for i in 0..n {
            am[i * n + i] += coeffs[k - 1];
        }
        m = am;
        let trace: f64 = (0..n).map(|i| {
            let mut t = 0.0;
            for j in 0..n {
                t += a[i * n + j] * m[j * n + i];
            }
            t
        }).sum();
        coeffs[k] = -trace / k as f64;
    }
    coeffs
}

/// Resultant of two real polynomials given by descending coefficients, as
/// the determinant of their Sylvester matrix.
fn resultant_real(p: &[f64], q: &[f64]) -> f64 {
    let dp = p.len() - 1;
    let dq = q.len() - 1;
    let size = dp + dq;
    if size == 0 {
        return 1.0;
    }
    let mut s = vec![0.0; size * size];
    for row in 0..dq {
        for (k, &c) in p.iter().enumerate() {
            s[row * size + row + k] = c;
        }
    }
    for row in 0..dp {
        for (k, &c) in q.iter().enumerate() {
            s[(dq + row) * size + row + k] = c;
        }
    }
    det_real(&s, size)
}

/// Discriminant of the characteristic polynomial of a symmetric matrix:
/// zero exactly when some eigenvalue is multiple, and otherwise equal to
/// prod_{i<j} (lambda_i - lambda_j)^2 >= 0.
pub fn char_discriminant(t: &Tensor) -> Result<f64> {
    let (n, a) = require_symmetric(t)?;
    if n > 6 {
        return Err(Error::Unsupported(format!(
            "char_discriminant supports n <= 6, got {n}"
        )));
    }
    if n == 1 {
        return Ok(1.0);
    }
    let p = char_poly_coeffs(a, n);
    let dp: Vec<f64> = p[..n]
        .iter()
        .enumerate()
        .map(|(i, &c)| c * (n - i) as f64)
        .collect();
    let res = resultant_real(&p, &dp);
    let sign = if (n * (n - 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * res)
}

/// Determinant of the Kronecker sum A (x) I + I (x) A, whose eigenvalues are
/// all pairwise sums lambda_i + lambda_j; it vanishes exactly when some
/// lambda_i + lambda_j = 0, in particular when lambda_1 = -lambda_n.
pub fn kronecker_sum_det(t: &Tensor) -> Result<f64> {
    let (n, a) = require_symmetric(t)?;
    if n > 6 {
        return Err(Error::Unsupported(format!(
            "kronecker_sum_det supports n <= 6, got {n}"
        )));
    }
    let nn = n * n;
    let mut k = vec![0.0; nn * nn];
    for i in 0..n {
        for j in 0..n {
            for p in 0..n {
                for q in 0..n {
                    let mut val = 0.0;
                    if j == q {
                        val += a[i * n + p];
                    }
                    if i == p {
                        val += a[j * n + q];
                    }
                    k[(i * n + j) * nn + (p * n + q)] = val;
                }
            }
        }
    }
    Ok(det_real(&k, nn))
}
