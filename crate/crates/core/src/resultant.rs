//! Sylvester resultant of two bivariate polynomials, eliminating the second
//! variable. The resultant coefficients come from evaluation-interpolation:
//! determinants of the scalar Sylvester matrix at sample points, then an
//! inverse transform back to coefficients.
//!
//! Two paths share that skeleton. The float path samples scaled roots of
//! unity and inverts by DFT. The exact path samples small integers, runs the
//! determinants in rational arithmetic, and interpolates with divided
//! differences, so fixture tensors with small dyadic entries get exact
//! resultant coefficients.

use crate::error::{Error, Result};
use crate::linalg::det_complex;
use num::{BigRational, FromPrimitive, One, ToPrimitive, Zero};
use num_complex::Complex64;

type C = Complex64;

/// Bivariate polynomial sum_{i,j} cols[j][i] x1^i x2^j; `cols[j]` holds the
/// ascending x1-coefficients of the x2^j term.
#[derive(Clone, Debug)]
pub(crate) struct BiPoly {
    pub cols: Vec<Vec<f64>>,
}

impl BiPoly {
    /// Degree in x2 after dropping negligible top columns; None for the zero
    /// polynomial.
    pub fn deg_x2(&self, scale: f64) -> Option<usize> {
        let thresh = 1e-14 * scale;
        let nonzero = |col: &Vec<f64>| col.iter().any(|c| c.abs() > thresh);
        let mut deg = None;
        for (j, col) in self.cols.iter().enumerate() {
            if nonzero(col) {
                deg = Some(j);
            }
        }
        deg
    }

    pub fn max_abs(&self) -> f64 {
        self.cols
            .iter()
            .flat_map(|c| c.iter())
            .fold(0.0_f64, |m, c| m.max(c.abs()))
    }

    pub fn deg_x1(&self) -> usize {
        self.cols
            .iter()
            .map(|col| col.iter().rposition(|c| *c != 0.0).unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    /// Substitutes x1, leaving a univariate polynomial in x2 (ascending).
    pub fn eval_x1(&self, x1: C) -> Vec<C> {
        self.cols
            .iter()
            .map(|col| {
                let mut acc = C::new(0.0, 0.0);
                for &c in col.iter().rev() {
                    acc = acc * x1 + c;
                }
                acc
            })
            .collect()
    }

    pub fn eval(&self, x1: C, x2: C) -> C {
        let uni = self.eval_x1(x1);
        let mut acc = C::new(0.0, 0.0);
        for &c in uni.iter().rev() {
            acc = acc * x2 + c;
        }
        acc
    }

    pub fn deriv_x1(&self) -> BiPoly {
        let cols = self
            .cols
            .iter()
            .map(|col| {
                if col.len() <= 1 {
                    vec![0.0]
                } else {
                    col.iter()
                        .enumerate()
                        .skip(1)
                        .map(|(i, &c)| c * i as f64)
                        .collect()
                }
            })
            .collect();
        BiPoly { cols }
    }

    pub fn deriv_x2(&self) -> BiPoly {
        if self.cols.len() <= 1 {
            return BiPoly {
                cols: vec![vec![0.0]],
            };
        }
        let cols = self
            .cols
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, col)| col.iter().map(|&c| c * j as f64).collect())
            .collect();
        BiPoly { cols }
    }
}

/// Scalar Sylvester determinant of two univariate polynomials given by
/// ascending coefficients and fixed working degrees.
fn sylvester_det_at(p: &[C], dp: usize, q: &[C], dq: usize) -> C {
    let size = dp + dq;
    if size == 0 {
        return C::new(1.0, 0.0);
    }
    let zero = C::new(0.0, 0.0);
    let mut s = vec![zero; size * size];
    // descending-coefficient staircase rows
    for row in 0..dq {
        for k in 0..=dp {
            s[row * size + row + k] = p.get(dp - k).copied().unwrap_or(zero);
        }
    }
    for row in 0..dp {
        for k in 0..=dq {
            s[(dq + row) * size + row + k] = q.get(dq - k).copied().unwrap_or(zero);
        }
    }
    det_complex(&s, size)
}

/// Resultant of p and q with respect to x2, returned as ascending real
/// coefficients in x1. Degenerate inputs (a vanishing polynomial, or an
/// identically zero resultant from a shared factor) are reported as errors.
pub(crate) fn resultant_x2(p: &BiPoly, q: &BiPoly, exact: bool) -> Result<Vec<f64>> {
    let scale = p.max_abs().max(q.max_abs()).max(1.0);
    let dp = p
        .deg_x2(scale)
        .ok_or_else(|| Error::DegenerateInput("first polynomial vanishes".into()))?;
    let dq = q
        .deg_x2(scale)
        .ok_or_else(|| Error::DegenerateInput("second polynomial vanishes".into()))?;
    if dp + dq == 0 {
        return Err(Error::DegenerateInput(
            "both polynomials constant in the eliminated variable".into(),
        ));
    }
    let bound = dq * p.deg_x1() + dp * q.deg_x1() + 1;

    let coeffs = if exact {
        resultant_exact(p, dp, q, dq, bound)?
    } else {
        resultant_float(p, dp, q, dq, bound)
    };

    let maxc = coeffs.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
    let floor = 1e-13 * scale.powi((dp + dq) as i32);
    if maxc <= floor {
        return Err(Error::DegenerateInput(
            "resultant vanishes identically".into(),
        ));
    }
    Ok(coeffs)
}

fn resultant_float(p: &BiPoly, dp: usize, q: &BiPoly, dq: usize, m: usize) -> Vec<f64> {
    // sample on the unit circle, invert by DFT
    let tau = 2.0 * std::f64::consts::PI;
    let values: Vec<C> = (0..m)
        .map(|k| {
            let z = C::from_polar(1.0, tau * k as f64 / m as f64);
            sylvester_det_at(&p.eval_x1(z), dp, &q.eval_x1(z), dq)
        })
        .collect();
    (0..m)
        .map(|j| {
            let mut acc = C::new(0.0, 0.0);
            for (k, v) in values.iter().enumerate() {
                acc += v * C::from_polar(1.0, -tau * ((j * k) % m) as f64 / m as f64);
            }
            acc.re / m as f64
        })
        .collect()
}

fn rational_cols(p: &BiPoly) -> Result<Vec<Vec<BigRational>>> {
    p.cols
        .iter()
        .map(|col| {
            col.iter()
                .map(|&c| {
                    BigRational::from_f64(c).ok_or_else(|| {
                        Error::DegenerateInput("coefficient not representable".into())
                    })
                })
                .collect()
        })
        .collect()
}

fn eval_rational(cols: &[Vec<BigRational>], x1: &BigRational) -> Vec<BigRational> {
    cols.iter()
        .map(|col| {
            let mut acc = BigRational::zero();
            for c in col.iter().rev() {
                acc = acc * x1 + c;
            }
            acc
        })
        .collect()
}

fn det_rational(mut m: Vec<BigRational>, n: usize) -> BigRational {
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&r| !m[r * n + col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot_row != col {
            for c in 0..n {
                m.swap(col * n + c, pivot_row * n + c);
            }
            det = -det;
        }
        let pivot = m[col * n + col].clone();
        det *= &pivot;
        for r in (col + 1)..n {
            if m[r * n + col].is_zero() {
                continue;
            }
            let f = &m[r * n + col] / &pivot;
            for c in col..n {
                let sub = &f * &m[col * n + c];
                m[r * n + c] -= sub;
            }
        }
    }
    det
}

fn resultant_exact(p: &BiPoly, dp: usize, q: &BiPoly, dq: usize, m: usize) -> Result<Vec<f64>> {
    let pc = rational_cols(p)?;
    let qc = rational_cols(q)?;
    let size = dp + dq;

    // integer sample points 0, 1, -1, 2, -2, ...
    let points: Vec<BigRational> = (0..m)
        .map(|k| {
            let v = if k % 2 == 1 {
                (k as i64 + 1) / 2
            } else {
                -(k as i64 / 2)
            };
            BigRational::from_i64(v).unwrap()
        })
        .collect();

    let values: Vec<BigRational> = points
        .iter()
        .map(|x1| {
            let pu = eval_rational(&pc, x1);
            let qu = eval_rational(&qc, x1);
            let mut s = vec![BigRational::zero(); size * size];
            for row in 0..dq {
                for k in 0..=dp {
                    s[row * size + row + k] =
                        pu.get(dp - k).cloned().unwrap_or_else(BigRational::zero);
                }
            }
            for row in 0..dp {
                for k in 0..=dq {
                    s[(dq + row) * size + row + k] =
                        qu.get(dq - k).cloned().unwrap_or_else(BigRational::zero);
                }
            }
            det_rational(s, size)
        })
        .collect();

    // Newton divided differences, then expansion to monomial coefficients
    let mut dd = values;
    for level in 1..m {
        for i in (level..m).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &points[i] - &points[i - level];
            dd[i] = num / den;
        }
    }
    let mut coeffs = vec![BigRational::zero(); m];
    let mut basis = vec![BigRational::zero(); m]; // prod_{k} (x - points[k])
    basis[0] = BigRational::one();
    for (k, dk) in dd.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            coeffs[j] += dk * b;
        }
        if k + 1 < m {
            let mut next = vec![BigRational::zero(); m];
            for j in 0..=k {
                if !basis[j].is_zero() {
                    next[j + 1] += &basis[j];
                    next[j] -= &basis[j] * &points[k];
                }
            }
            basis = next;
        }
    }

    Ok(coeffs
        .iter()
        .map(|c| {
            c.to_f64().unwrap_or_else(|| {
                c.numer().to_f64().unwrap_or(f64::MAX) / c.denom().to_f64().unwrap_or(1.0)
            })
        })
        .collect())
}

/// True when every entry is a dyadic rational with denominator at most 2^20
/// and magnitude at most 2^20, the regime where the exact path is fast.
pub(crate) fn all_small_dyadic(entries: &[f64]) -> bool {
    let scale = (1u64 << 20) as f64;
    entries.iter().all(|&e| {
        let scaled = e * scale;
        e.abs() <= scale && scaled.fract() == 0.0
    })
}
