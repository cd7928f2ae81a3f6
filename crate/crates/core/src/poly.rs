//! Polynomial root finding over the complex numbers: companion matrix,
//! Parlett-Reinsch balancing, and a single-shift QR iteration for complex
//! Hessenberg matrices. Degrees stay small (<= ~40) throughout the crate,
//! so conditioning is benign; callers run a Newton polish on whatever
//! system the roots feed into.

use crate::error::{Error, Result};
use num_complex::Complex64;

type C = Complex64;

/// Polynomial with complex coefficients, ascending powers: coeffs[k] * z^k.
#[derive(Clone, Debug)]
pub(crate) struct CPoly {
    pub coeffs: Vec<C>,
}

impl CPoly {
    pub fn new(coeffs: Vec<C>) -> Self {
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self {
            coeffs: coeffs.iter().map(|&c| C::new(c, 0.0)).collect(),
        }
    }

    pub fn eval(&self, z: C) -> C {
        let mut acc = C::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn deriv(&self) -> CPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * k as f64)
            .collect();
        CPoly::new(coeffs)
    }

    /// All roots of the polynomial after trimming negligible leading
    /// coefficients (relative threshold 1e-13, which discards the
    /// near-infinite roots those would produce). Exact zero trailing
    /// coefficients contribute exact roots at the origin.
    pub fn roots(&self) -> Result<Vec<C>> {
        let maxc = self
            .coeffs
            .iter()
            .fold(0.0_f64, |m, c| m.max(c.norm()));
        if maxc == 0.0 {
            return Err(Error::DegenerateInput("zero polynomial".into()));
        }
        let mut hi = self.coeffs.len();
        while hi > 1 && self.coeffs[hi - 1].norm() <= 1e-13 * maxc {
            hi -= 1;
        }
        let mut lo = 0;
        while lo < hi - 1 && self.coeffs[lo].norm() == 0.0 {
            lo += 1;
        }
        let mut roots: Vec<C> = vec![C::new(0.0, 0.0); lo];
        let work = &self.coeffs[lo..hi];
        let n = work.len() - 1;
        if n == 0 {
            return Ok(roots);
        }
        if n == 1 {
            roots.push(-work[0] / work[1]);
            return Ok(roots);
        }

        // monic companion, last-column convention (upper Hessenberg)
        let lead = work[n];
        let mut h = vec![C::new(0.0, 0.0); n * n];
        for i in 0..n {
            h[i * n + (n - 1)] = -work[i] / lead;
            if i > 0 {
                h[i * n + (i - 1)] = C::new(1.0, 0.0);
            }
        }
        balance(&mut h, n);
        roots.extend(hessenberg_eigenvalues(h, n)?);
        Ok(roots)
    }

    /// Newton refinement; returns the input unchanged when the derivative
    /// underflows (multiple root).
    pub fn polish(&self, z0: C) -> C {
        let dp = self.deriv();
        let mut z = z0;
        for _ in 0..12 {
            let f = self.eval(z);
            let d = dp.eval(z);
            if d.norm() <= 1e-300 {
                break;
            }
            let step = f / d;
            z -= step;
            if step.norm() <= 1e-15 * (1.0 + z.norm()) {
                break;
            }
        }
        z
    }
}

/// Parlett-Reinsch balancing with power-of-two scale factors.
fn balance(h: &mut [C], n: usize) {
    for _ in 0..30 {
        let mut converged = true;
        for i in 0..n {
            let mut r = 0.0;
            let mut c = 0.0;
            for j in 0..n {
                if j != i {
                    r += h[i * n + j].norm();
                    c += h[j * n + i].norm();
                }
            }
            if r == 0.0 || c == 0.0 {
                continue;
            }
            let mut f = 1.0;
            let s = c + r;
            let mut c2 = c;
            let mut r2 = r;
            while c2 < r2 / 2.0 {
                c2 *= 2.0;
                r2 /= 2.0;
                f *= 2.0;
            }
            while c2 >= r2 * 2.0 {
                c2 /= 2.0;
                r2 *= 2.0;
                f /= 2.0;
            }
            if (c2 + r2) < 0.95 * s && f != 1.0 {
                converged = false;
                for j in 0..n {
                    h[i * n + j] /= f;
                    h[j * n + i] *= f;
                }
            }
        }
        if converged {
            break;
        }
    }
}

/// Complex Givens rotation zeroing b in (a, b): returns (c, s) with c real,
/// G = [[c, s], [-conj(s), c]], so that G (a, b)^T = (r, 0)^T.
fn givens(a: C, b: C) -> (f64, C) {
    let an = a.norm();
    let bn = b.norm();
    if bn == 0.0 {
        return (1.0, C::new(0.0, 0.0));
    }
    if an == 0.0 {
        return (0.0, b.conj() / bn);
    }
    let r = an.hypot(bn);
    let c = an / r;
    let s = (a / an) * b.conj() / r;
    (c, s)
}

/// Eigenvalues of a complex upper Hessenberg matrix by explicit single-shift
/// QR with Wilkinson shifts and occasional exceptional shifts.
fn hessenberg_eigenvalues(mut h: Vec<C>, n: usize) -> Result<Vec<C>> {
    let mut eigs = Vec::with_capacity(n);
    let mut hi = n;
    let mut stagnation = 0;
    let norm_scale: f64 = h.iter().map(|c| c.norm()).fold(0.0, f64::max).max(1.0);

    while hi > 0 {
        // locate the active block lo..hi by scanning for a negligible subdiagonal
        let mut lo = hi - 1;
        while lo > 0 {
            let s = h[(lo - 1) * n + (lo - 1)].norm() + h[lo * n + lo].norm();
            let s = if s == 0.0 { norm_scale } else { s };
            if h[lo * n + (lo - 1)].norm() <= f64::EPSILON * s {
                h[lo * n + (lo - 1)] = C::new(0.0, 0.0);
                break;
            }
            lo -= 1;
        }

        if lo == hi - 1 {
            eigs.push(h[lo * n + lo]);
            hi -= 1;
            stagnation = 0;
            continue;
        }
        if lo == hi - 2 {
            let (a, b) = (h[lo * n + lo], h[lo * n + lo + 1]);
            let (c, d) = (h[(lo + 1) * n + lo], h[(lo + 1) * n + lo + 1]);
            let tr = a + d;
            let disc = ((a - d) * (a - d) + 4.0 * b * c).sqrt();
            eigs.push((tr + disc) / 2.0);
            eigs.push((tr - disc) / 2.0);
            hi -= 2;
            stagnation = 0;
            continue;
        }

        stagnation += 1;
        if stagnation > 60 {
            return Err(Error::NonConvergence(
                "complex QR failed to deflate".into(),
            ));
        }

        let mu = if stagnation % 12 == 0 {
            // exceptional shift to break limit cycles
            h[(hi - 1) * n + (hi - 2)].norm() * C::new(0.75, 0.4)
                + h[(hi - 1) * n + (hi - 1)]
        } else {
            let (a, b) = (h[(hi - 2) * n + (hi - 2)], h[(hi - 2) * n + (hi - 1)]);
            let (c, d) = (h[(hi - 1) * n + (hi - 2)], h[(hi - 1) * n + (hi - 1)]);
            let tr = a + d;
            let disc = ((a - d) * (a - d) + 4.0 * b * c).sqrt();
            let e1 = (tr + disc) / 2.0;
            let e2 = (tr - disc) / 2.0;
            if (e1 - d).norm() <= (e2 - d).norm() {
                e1
            } else {
                e2
            }
        };

        for k in lo..hi {
            h[k * n + k] -= mu;
        }
        // QR by a chain of Givens rotations on the subdiagonal
        let mut rots = Vec::with_capacity(hi - lo - 1);
        for k in lo..(hi - 1) {
            let (c, s) = givens(h[k * n + k], h[(k + 1) * n + k]);
            rots.push((c, s));
            for col in k..hi {
                let t1 = h[k * n + col];
                let t2 = h[(k + 1) * n + col];
                h[k * n + col] = c * t1 + s * t2;
                h[(k + 1) * n + col] = -s.conj() * t1 + c * t2;
            }
        }
        // form RQ by applying the conjugated rotations on the right
        for (j, &(c, s)) in rots.iter().enumerate() {
            let k = lo + j;
            for row in lo..(k + 2).min(hi) {
                let t1 = h[row * n + k];
                let t2 = h[row * n + k + 1];
                h[row * n + k] = c * t1 + s.conj() * t2;
                h[row * n + k + 1] = -s * t1 + c * t2;
            }
        }
        for k in lo..hi {
            h[k * n + k] += mu;
        }
    }
    Ok(eigs)
}
