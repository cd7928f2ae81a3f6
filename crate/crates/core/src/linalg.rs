//! Small dense helpers shared by the matrix and enumeration code.
//! Row-major `Vec` storage; sizes stay tiny (n <= ~40) so plain
//! partial-pivot elimination is plenty.

use num_complex::Complex64;

/// Determinant of a real n x n matrix, LU with partial pivoting.
pub(crate) fn det_real(a: &[f64], n: usize) -> f64 {
    let mut m = a.to_vec();
    let mut det = 1.0;
    for col in 0..n {
        let mut piv = col;
        for r in (col + 1)..n {
            if m[r * n + col].abs() > m[piv * n + col].abs() {
                piv = r;
            }
        }
        if m[piv * n + col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            for c in 0..n {
                m.swap(col * n + c, piv * n + c);
            }
            det = -det;
        }
        det *= m[col * n + col];
        for r in (col + 1)..n {
            let f = m[r * n + col] / m[col * n + col];
            if f != 0.0 {
                for c in col..n {
                    m[r * n + c] -= f * m[col * n + c];
                }
            }
        }
    }
    det
}

/// Determinant of a complex n x n matrix, LU with partial pivoting.
pub(crate) fn det_complex(a: &[Complex64], n: usize) -> Complex64 {
    let mut m = a.to_vec();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let mut piv = col;
        for r in (col + 1)..n {
            if m[r * n + col].norm_sqr() > m[piv * n + col].norm_sqr() {
                piv = r;
            }
        }
        if m[piv * n + col].norm_sqr() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if piv != col {
            for c in 0..n {
                m.swap(col * n + c, piv * n + c);
            }
            det = -det;
        }
        det *= m[col * n + col];
        for r in (col + 1)..n {
            let f = m[r * n + col] / m[col * n + col];
            for c in col..n {
                let sub = f * m[col * n + c];
                m[r * n + c] -= sub;
            }
        }
    }
    det
}

/// Solves the real system A x = b in place; returns None when A is
/// numerically singular.
pub(crate) fn solve_real(a: &[f64], b: &[f64], n: usize) -> Option<Vec<f64>> {
    let mut m = a.to_vec();
    let mut x = b.to_vec();
    for col in 0..n {
        let mut piv = col;
        for r in (col + 1)..n {
            if m[r * n + col].abs() > m[piv * n + col].abs() {
                piv = r;
            }
        }
        let scale: f64 = (0..n).map(|c| m[piv * n + c].abs()).sum();
        if m[piv * n + col].abs() <= 1e-300 || m[piv * n + col].abs() < 1e-14 * scale {
            return None;
        }
        if piv != col {
            for c in 0..n {
                m.swap(col * n + c, piv * n + c);
            }
            x.swap(col, piv);
        }
        for r in (col + 1)..n {
            let f = m[r * n + col] / m[col * n + col];
            if f != 0.0 {
                for c in col..n {
                    m[r * n + c] -= f * m[col * n + c];
                }
                x[r] -= f * x[col];
            }
        }
    }
    for col in (0..n).rev() {
        let mut acc = x[col];
        for c in (col + 1)..n {
            acc -= m[col * n + c] * x[c];
        }
        x[col] = acc / m[col * n + col];
    }
    Some(x)
}

/// Solves the complex system A x = b (general n, partial pivoting).
pub(crate) fn solve_complex(a: &[Complex64], b: &[Complex64], n: usize) -> Option<Vec<Complex64>> {
    let mut m = a.to_vec();
    let mut x = b.to_vec();
    for col in 0..n {
        let mut piv = col;
        for r in (col + 1)..n {
            if m[r * n + col].norm_sqr() > m[piv * n + col].norm_sqr() {
                piv = r;
            }
        }
        let scale: f64 = (0..n).map(|c| m[piv * n + c].norm()).sum();
        let p = m[piv * n + col].norm();
        if p <= 1e-300 || p < 1e-14 * scale {
            return None;
        }
        if piv != col {
            for c in 0..n {
                m.swap(col * n + c, piv * n + c);
            }
            x.swap(col, piv);
        }
        for r in (col + 1)..n {
            let f = m[r * n + col] / m[col * n + col];
            for c in col..n {
                let sub = f * m[col * n + c];
                m[r * n + c] -= sub;
            }
            let sub = f * x[col];
            x[r] -= sub;
        }
    }
    for col in (0..n).rev() {
        let mut acc = x[col];
        for c in (col + 1)..n {
            acc -= m[col * n + c] * x[c];
        }
        x[col] = acc / m[col * n + col];
    }
    Some(x)
}

/// C = A (p x q) * B (q x r), row-major.
pub(crate) fn matmul(a: &[f64], b: &[f64], p: usize, q: usize, r: usize) -> Vec<f64> {
    let mut c = vec![0.0; p * r];
    for i in 0..p {
        for k in 0..q {
            let aik = a[i * q + k];
            if aik != 0.0 {
                for j in 0..r {
                    c[i * r + j] += aik * b[k * r + j];
                }
            }
        }
    }
    c
}
