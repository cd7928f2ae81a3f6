//! Complete enumeration of critical points and eigenpairs for symmetric
//! tensors with two-dimensional modes.
//!
//! On Sym(2,d) the objective restricted to the circle is a trigonometric
//! polynomial f(phi) of frequency at most d, so its stationary angles are
//! the unit-circle roots of a degree-2d polynomial in z = e^{i phi}. That
//! makes the critical set finite and fully computable: companion-matrix
//! roots, a Newton polish, and deduplication yield every critical point.
//!
//! The eigenpair systems T x^{d-1} = x and T x^{d-1} = -x are solved over
//! C^2 by Sylvester-resultant elimination plus back-substitution, giving a
//! census of solution counts against the (d-1)^n - 1 bound, with the
//! odd/even real-count bounds and the roots-of-unity orbit structure.
//! Critical points on the sphere and eigenpair solutions correspond through
//! x = |lambda|^(-1/(d-2)) y, which both directions implement.
//!
//! A first-order perturbation check compares the predicted overlap
//! x^T x_1 = <S, x^(x)d> / (2-d) of an eigenpair under T -> T + eps S
//! against central finite differences of the Newton-continued solution.

use crate::error::{Error, Result};
use crate::linalg::{solve_complex, solve_real};
use crate::poly::CPoly;
use crate::resultant::{all_small_dyadic, resultant_x2, BiPoly};
use crate::tensor::{Tensor, UnitVector};
use num_complex::Complex64;
use serde::Serialize;

type C = Complex64;

const TAU: f64 = 2.0 * std::f64::consts::PI;

/// Stationary point of the objective on the circle.
#[derive(Clone, Debug)]
pub struct CriticalPoint {
    pub point: UnitVector,
    /// Critical value, the objective at the point.
    pub value: f64,
    /// Angle in [0, 2 pi) with point = (cos, sin).
    pub angle: f64,
    /// Norm of the eigen-defect T x^{d-1} - value * x.
    pub residual: f64,
}

/// Solution of one of the two eigenpair systems T x^{d-1} = +-x.
#[derive(Clone, Debug)]
pub struct EigenpairSolution {
    /// Unnormalized coordinates, possibly complex.
    pub coords: Vec<C>,
    /// +1 selects the plus system, -1 the minus system.
    pub system_sign: f64,
    /// Raised when the system Jacobian is numerically singular at the
    /// solution, i.e. the solution is not simple.
    pub multiplicity_flag: bool,
    /// Norm of the system residual after polishing.
    pub residual: f64,
}

impl EigenpairSolution {
    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_real(&self) -> bool {
        let scale = self.norm().max(1.0);
        self.coords.iter().all(|c| c.im.abs() <= 1e-8 * scale)
    }

    pub fn real_coords(&self) -> Option<Vec<f64>> {
        if self.is_real() {
            Some(self.coords.iter().map(|c| c.re).collect())
        } else {
            None
        }
    }
}

/// Counts of eigenpair solutions against the theoretical bounds.
#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub d: usize,
    pub n: usize,
    /// Distinct complex solutions of the plus system.
    pub complex_count: usize,
    /// Real solutions of the plus system.
    pub real_count_pos: usize,
    /// Real solutions of the minus system.
    pub real_count_neg: usize,
    /// (d-1)^n - 1.
    pub bound_complex: usize,
    /// Odd d: ((d-1)^n - 1)/(d-2) per system; even d: 2((d-1)^n - 1)/(d-2)
    /// jointly for both systems.
    pub bound_real: usize,
    /// False when the elimination degenerated and counts are unreliable.
    pub conclusive: bool,
    /// None when inconclusive.
    pub bounds_satisfied: Option<bool>,
    pub distinct_critical_values: bool,
    pub antipodal_pairing_ok: bool,
}

/// First-order sensitivity of an eigenpair against finite differences.
#[derive(Clone, Debug)]
pub struct PerturbationCheck {
    pub direction: Tensor,
    pub base: EigenpairSolution,
    /// <S, x^(x)d> / (2 - d), times the system sign.
    pub predicted_overlap: f64,
    pub fd_overlap: f64,
    pub rel_error: f64,
}

fn binom(n: usize, k: usize) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// Entry of a Sym(2,d) tensor whose index contains exactly `ones` ones.
fn orbit_entry(t: &Tensor, ones: usize) -> f64 {
    let d = t.order();
    let mut idx = vec![0usize; d];
    for slot in idx.iter_mut().take(d).skip(d - ones) {
        *slot = 1;
    }
    t.get(&idx)
}

fn validate_sym2(t: &Tensor) -> Result<usize> {
    let d = t.order();
    if d == 0 || t.shape().iter().any(|&n| n != 2) {
        return Err(Error::Unsupported(format!(
            "expected a 2 x ... x 2 tensor, found shape {:?}",
            t.shape()
        )));
    }
    let alpha: Vec<usize> = (0..d).collect();
    if !t.is_symmetric_wrt_eps(&alpha, 1e-12 * t.max_abs().max(1.0)) {
        return Err(Error::NotSymmetric("tensor is not symmetric".into()));
    }
    Ok(d)
}

/// Objective on the circle as a trigonometric polynomial, in both the
/// monomial basis cos^{d-k} sin^k and the Fourier basis up to frequency d.
#[derive(Clone, Debug)]
pub struct TrigPoly {
    pub degree: usize,
    /// monomial[k] multiplies cos^{d-k}(phi) sin^k(phi).
    pub monomial: Vec<f64>,
    /// cos_coeffs[v] multiplies cos(v phi).
    pub cos_coeffs: Vec<f64>,
    /// sin_coeffs[v] multiplies sin(v phi); index 0 unused.
    pub sin_coeffs: Vec<f64>,
}

impl TrigPoly {
    pub fn eval(&self, phi: f64) -> f64 {
        let (c, s) = (phi.cos(), phi.sin());
        let d = self.degree;
        self.monomial
            .iter()
            .enumerate()
            .map(|(k, &m)| m * c.powi((d - k) as i32) * s.powi(k as i32))
            .sum()
    }

    pub fn eval_fourier(&self, phi: f64) -> f64 {
        let mut acc = self.cos_coeffs[0];
        for v in 1..=self.degree {
            acc += self.cos_coeffs[v] * (v as f64 * phi).cos()
                + self.sin_coeffs[v] * (v as f64 * phi).sin();
        }
        acc
    }

    pub fn deriv_eval(&self, phi: f64) -> f64 {
        let mut acc = 0.0;
        for v in 1..=self.degree {
            let vf = v as f64;
            acc += vf
                * (-self.cos_coeffs[v] * (vf * phi).sin()
                    + self.sin_coeffs[v] * (vf * phi).cos());
        }
        acc
    }

    pub fn second_deriv_eval(&self, phi: f64) -> f64 {
        let mut acc = 0.0;
        for v in 1..=self.degree {
            let vf = v as f64;
            acc -= vf
                * vf
                * (self.cos_coeffs[v] * (vf * phi).cos()
                    + self.sin_coeffs[v] * (vf * phi).sin());
        }
        acc
    }

    /// z^d f'(phi) as a polynomial in z = e^{i phi}, degree at most 2d.
    fn derivative_z_poly(&self) -> CPoly {
        let d = self.degree;
        // spectral coefficients c_v of f, f = sum c_v e^{i v phi}
        let mut spectral = vec![C::new(0.0, 0.0); 2 * d + 1];
        spectral[d] = C::new(self.cos_coeffs[0], 0.0);
        for v in 1..=d {
            let c = C::new(self.cos_coeffs[v] / 2.0, -self.sin_coeffs[v] / 2.0);
            spectral[d + v] = c;
            spectral[d - v] = c.conj();
        }
        // f' multiplies c_v by i v; shift by z^d
        let coeffs: Vec<C> = spectral
            .iter()
            .enumerate()
            .map(|(idx, &c)| {
                let v = idx as f64 - d as f64;
                C::new(0.0, v) * c
            })
            .collect();
        CPoly::new(coeffs)
    }
}

/// The objective phi -> <T, (cos phi, sin phi)^(x)d> of a Sym(2,d) tensor.
pub fn angle_objective(t: &Tensor) -> Result<TrigPoly> {
    let d = validate_sym2(t)?;
    let monomial: Vec<f64> = (0..=d).map(|k| binom(d, k) * orbit_entry(t, k)).collect();

    // expand each cos^{d-k} sin^k into e^{i v phi} exactly:
    // cos = (z + w)/2, sin = (z - w)/(2i) with w = 1/z
    let mut spectral = vec![C::new(0.0, 0.0); 2 * d + 1]; // exponent v = idx - d
    for (k, &m) in monomial.iter().enumerate() {
        if m == 0.0 {
            continue;
        }
        let mut expand = vec![C::new(0.0, 0.0); 2 * d + 1];
        expand[d] = C::new(1.0, 0.0);
        let mul = |poly: &[C], minus: bool| {
            let mut next = vec![C::new(0.0, 0.0); poly.len()];
            for (e, &c) in poly.iter().enumerate() {
                if c != C::new(0.0, 0.0) {
                    if e + 1 < poly.len() {
                        next[e + 1] += c;
                    }
                    if e >= 1 {
                        if minus {
                            next[e - 1] -= c;
                        } else {
                            next[e - 1] += c;
                        }
                    }
                }
            }
            next
        };
        for _ in 0..(d - k) {
            expand = mul(&expand, false);
        }
        for _ in 0..k {
            expand = mul(&expand, true);
        }
        // scale by m / (2^d i^k)
        let inv_ik = match k % 4 {
            0 => C::new(1.0, 0.0),
            1 => C::new(0.0, -1.0),
            2 => C::new(-1.0, 0.0),
            _ => C::new(0.0, 1.0),
        };
        let factor = inv_ik * (m / (1u64 << d) as f64);
        for (dst, src) in spectral.iter_mut().zip(expand.iter()) {
            *dst += factor * src;
        }
    }

    let mut cos_coeffs = vec![0.0; d + 1];
    let mut sin_coeffs = vec![0.0; d + 1];
    cos_coeffs[0] = spectral[d].re;
    for v in 1..=d {
        cos_coeffs[v] = 2.0 * spectral[d + v].re;
        sin_coeffs[v] = -2.0 * spectral[d + v].im;
    }

    Ok(TrigPoly {
        degree: d,
        monomial,
        cos_coeffs,
        sin_coeffs,
    })
}

fn wrap_angle(phi: f64) -> f64 {
    let mut a = phi % TAU;
    if a < 0.0 {
        a += TAU;
    }
    a
}

fn angle_distance(a: f64, b: f64) -> f64 {
    let diff = (a - b).abs() % TAU;
    diff.min(TAU - diff)
}

fn critical_point_at(t: &Tensor, f: &TrigPoly, phi: f64) -> CriticalPoint {
    let d = t.order();
    let x = vec![phi.cos(), phi.sin()];
    let factors: Vec<&[f64]> = (0..d).map(|_| x.as_slice()).collect();
    let g = t.contract_all_but(&factors, 0).expect("validated shape");
    let value = f.eval(phi);
    let residual = g
        .iter()
        .zip(x.iter())
        .map(|(gi, xi)| (gi - value * xi) * (gi - value * xi))
        .sum::<f64>()
        .sqrt();
    CriticalPoint {
        point: UnitVector::new(x).expect("cos/sin is unit"),
        value,
        angle: phi,
        residual,
    }
}

/// All critical points of the circle objective, sorted by angle.
///
/// The stationarity equation f'(phi) = 0 becomes a degree <= 2d polynomial
/// in z = e^{i phi}; its unit-circle roots (within 1e-8) are polished by
/// Newton on f' and deduplicated within 1e-9 of angular distance.
pub fn enumerate_critical_points(t: &Tensor) -> Result<Vec<CriticalPoint>> {
    let f = angle_objective(t)?;
    if t.hs_norm() == 0.0 {
        return Err(Error::DegenerateInput("zero tensor".into()));
    }
    let zpoly = f.derivative_z_poly();
    let coeff_scale = zpoly.coeffs.iter().fold(0.0_f64, |m, c| m.max(c.norm()));
    if coeff_scale <= 1e-14 * t.max_abs().max(1.0) {
        return Err(Error::DegenerateInput(
            "objective is constant on the circle".into(),
        ));
    }

    let mut angles: Vec<f64> = Vec::new();
    for z in zpoly.roots()? {
        if (z.norm() - 1.0).abs() > 1e-8 {
            continue;
        }
        let mut phi = wrap_angle(z.arg());
        // Newton polish on f'
        for _ in 0..12 {
            let fp = f.deriv_eval(phi);
            let fpp = f.second_deriv_eval(phi);
            if fpp.abs() <= 1e-300 {
                break;
            }
            let step = fp / fpp;
            phi -= step;
            if step.abs() <= 1e-15 {
                break;
            }
        }
        angles.push(wrap_angle(phi));
    }
    angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut dedup: Vec<f64> = Vec::new();
    for phi in angles {
        let dup = dedup.iter().any(|&p| angle_distance(p, phi) <= 1e-9);
        if !dup {
            dedup.push(phi);
        }
    }
    if dedup.is_empty() {
        return Err(Error::DegenerateInput(
            "no unit-circle stationary angles found".into(),
        ));
    }
    Ok(dedup
        .into_iter()
        .map(|phi| critical_point_at(t, &f, phi))
        .collect())
}

/// Coefficient grid of the i-th component of T x^{(x)(d-1)} over (x1, x2).
fn contraction_grid(t: &Tensor, comp: usize) -> BiPoly {
    let d = t.order();
    let mut cols = Vec::with_capacity(d);
    for k in 0..d {
        let mut col = vec![0.0; d];
        col[d - 1 - k] = binom(d - 1, k) * orbit_entry_with_first(t, comp, k);
        cols.push(col);
    }
    BiPoly { cols }
}

/// Entry with first index `first` and `ones` additional indices equal to 1.
fn orbit_entry_with_first(t: &Tensor, first: usize, ones: usize) -> f64 {
    let d = t.order();
    let mut idx = vec![0usize; d];
    idx[0] = first;
    for slot in idx.iter_mut().take(d).skip(d - ones) {
        *slot = 1;
    }
    t.get(&idx)
}

/// The two polynomials of the eigenpair system T x^{d-1} = sign * x.
fn eigen_system(t: &Tensor, sign: f64) -> (BiPoly, BiPoly) {
    let mut g1 = contraction_grid(t, 0);
    g1.cols[0][1] -= sign;
    let mut g2 = contraction_grid(t, 1);
    g2.cols[1][0] -= sign;
    (g1, g2)
}

struct PolishOutcome {
    x: [C; 2],
    residual: f64,
    jacobian_singular: bool,
}

fn newton_polish_c2(
    g1: &BiPoly,
    g2: &BiPoly,
    parts: &(BiPoly, BiPoly, BiPoly, BiPoly),
    start: [C; 2],
    scale: f64,
) -> Option<PolishOutcome> {
    let (p11, p12, p21, p22) = parts;
    let mut x = start;
    for _ in 0..40 {
        let f = [g1.eval(x[0], x[1]), g2.eval(x[0], x[1])];
        let residual = (f[0].norm_sqr() + f[1].norm_sqr()).sqrt();
        let xnorm = (x[0].norm_sqr() + x[1].norm_sqr()).sqrt();
        let tol = 1e-13 * scale * (1.0 + xnorm).powi(3);
        if residual <= tol {
            break;
        }
        let j = [
            p11.eval(x[0], x[1]),
            p12.eval(x[0], x[1]),
            p21.eval(x[0], x[1]),
            p22.eval(x[0], x[1]),
        ];
        let rhs = [-f[0], -f[1]];
        let step = solve_complex(&j, &rhs, 2)?;
        x[0] += step[0];
        x[1] += step[1];
        if step[0].norm() + step[1].norm() > 1e6 * (1.0 + xnorm) {
            return None; // diverging
        }
    }
    let f = [g1.eval(x[0], x[1]), g2.eval(x[0], x[1])];
    let residual = (f[0].norm_sqr() + f[1].norm_sqr()).sqrt();
    let j = [
        p11.eval(x[0], x[1]),
        p12.eval(x[0], x[1]),
        p21.eval(x[0], x[1]),
        p22.eval(x[0], x[1]),
    ];
    let det = j[0] * j[3] - j[1] * j[2];
    let jscale = j.iter().map(|c| c.norm()).fold(0.0_f64, f64::max);
    let jacobian_singular = det.norm() <= 1e-8 * jscale.max(1.0).powi(2);
    Some(PolishOutcome {
        x,
        residual,
        jacobian_singular,
    })
}

/// All distinct nonzero solutions of T x^{d-1} = sign * x over C^2.
fn solve_eigen_system(t: &Tensor, sign: f64) -> Result<Vec<EigenpairSolution>> {
    let d = t.order();
    let (g1, g2) = eigen_system(t, sign);
    let exact = all_small_dyadic(t.data());
    let res_coeffs = resultant_x2(&g1, &g2, exact)?;
    let res_poly = CPoly::from_real(&res_coeffs);
    let parts = (g1.deriv_x1(), g1.deriv_x2(), g2.deriv_x1(), g2.deriv_x2());
    let scale = t.max_abs().max(1.0);
    // solutions satisfy ||x|| >= ||T||^{-1/(d-2)}; anything much smaller is
    // the trivial zero solution
    let min_norm = if d > 2 {
        0.5 * t.hs_norm().max(1e-12).powf(-1.0 / (d as f64 - 2.0))
    } else {
        1e-6
    };

    let mut x1_roots: Vec<C> = res_poly
        .roots()?
        .into_iter()
        .map(|z| res_poly.polish(z))
        .collect();
    // coarse dedupe of abscissas; distinct solutions over one abscissa are
    // separated during back-substitution
    x1_roots.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    let mut abscissas: Vec<C> = Vec::new();
    for r in x1_roots {
        if !abscissas
            .iter()
            .any(|a| (a - r).norm() <= 1e-7 * (1.0 + r.norm()))
        {
            abscissas.push(r);
        }
    }

    let mut solutions: Vec<EigenpairSolution> = Vec::new();
    for r in abscissas {
        // univariate candidates for x2 from whichever polynomial survives
        let u1 = g1.eval_x1(r);
        let u2 = g2.eval_x1(r);
        let pick = |u: &[C]| -> Option<CPoly> {
            let m = u.iter().fold(0.0_f64, |acc, c| acc.max(c.norm()));
            if m <= 1e-12 * scale * (1.0 + r.norm().powi(d as i32)) {
                None
            } else {
                Some(CPoly::new(u.to_vec()))
            }
        };
        let uni = match (pick(&u1), pick(&u2)) {
            (Some(p), _) => p,
            (None, Some(q)) => q,
            (None, None) => {
                return Err(Error::DegenerateInput(
                    "one-dimensional solution family".into(),
                ))
            }
        };
        let Ok(cands) = uni.roots() else { continue };
        for x2 in cands {
            let Some(out) = newton_polish_c2(&g1, &g2, &parts, [r, x2], scale) else {
                continue;
            };
            let xnorm = (out.x[0].norm_sqr() + out.x[1].norm_sqr()).sqrt();
            let accept = 1e-8 * scale * (1.0 + xnorm).powi(d as i32 - 1);
            if out.residual > accept || xnorm < min_norm {
                continue;
            }
            let dup = solutions.iter().any(|s| {
                (s.coords[0] - out.x[0]).norm() + (s.coords[1] - out.x[1]).norm()
                    <= 1e-7 * (1.0 + xnorm)
            });
            if !dup {
                solutions.push(EigenpairSolution {
                    coords: out.x.to_vec(),
                    system_sign: sign,
                    multiplicity_flag: out.jacobian_singular,
                    residual: out.residual,
                });
            }
        }
    }
    Ok(solutions)
}

/// Complete census of the eigenpair systems of a Sym(2,d) tensor, d >= 3.
///
/// Elimination degeneracies (vanishing resultant, positive-dimensional
/// families) yield an explicit inconclusive report rather than wrong counts.
pub fn eigenpair_census(t: &Tensor) -> Result<CensusReport> {
    let d = validate_sym2(t)?;
    if d < 3 {
        return Err(Error::Unsupported("census requires d >= 3".into()));
    }
    let bound_complex = (d - 1) * (d - 1) - 1;
    let bound_real = if d % 2 == 1 {
        bound_complex / (d - 2)
    } else {
        2 * bound_complex / (d - 2)
    };

    let inconclusive = |flags: (bool, bool)| CensusReport {
        d,
        n: 2,
        complex_count: 0,
        real_count_pos: 0,
        real_count_neg: 0,
        bound_complex,
        bound_real,
        conclusive: false,
        bounds_satisfied: None,
        distinct_critical_values: flags.0,
        antipodal_pairing_ok: flags.1,
    };

    let flags = match enumerate_critical_points(t) {
        Ok(points) => genericity_check(&points, d),
        Err(_) => return Ok(inconclusive((false, false))),
    };

    let plus = match solve_eigen_system(t, 1.0) {
        Ok(s) => s,
        Err(Error::DegenerateInput(_)) => return Ok(inconclusive(flags)),
        Err(e) => return Err(e),
    };
    let complex_count = plus.len();
    let real_count_pos = plus.iter().filter(|s| s.is_real()).count();

    let real_count_neg = if d % 2 == 1 {
        // negating a real plus-system solution solves the minus system
        real_count_pos
    } else {
        match solve_eigen_system(t, -1.0) {
            Ok(s) => s.iter().filter(|s| s.is_real()).count(),
            Err(Error::DegenerateInput(_)) => return Ok(inconclusive(flags)),
            Err(e) => return Err(e),
        }
    };

    let real_ok = if d % 2 == 1 {
        real_count_pos <= bound_real
    } else {
        real_count_pos + real_count_neg <= bound_real
    };
    let bounds_satisfied = Some(complex_count <= bound_complex && real_ok);

    Ok(CensusReport {
        d,
        n: 2,
        complex_count,
        real_count_pos,
        real_count_neg,
        bound_complex,
        bound_real,
        conclusive: true,
        bounds_satisfied,
        distinct_critical_values: flags.0,
        antipodal_pairing_ok: flags.1,
    })
}

/// Both eigenpair solution lists (plus system always; minus system for even
/// d, by negation for odd d).
pub fn eigenpair_solutions(t: &Tensor) -> Result<(Vec<EigenpairSolution>, Vec<EigenpairSolution>)> {
    let d = validate_sym2(t)?;
    if d < 3 {
        return Err(Error::Unsupported("eigenpair systems require d >= 3".into()));
    }
    let plus = solve_eigen_system(t, 1.0)?;
    let minus = if d % 2 == 1 {
        plus.iter()
            .map(|s| EigenpairSolution {
                coords: s.coords.iter().map(|c| -c).collect(),
                system_sign: -1.0,
                multiplicity_flag: s.multiplicity_flag,
                residual: s.residual,
            })
            .collect()
    } else {
        solve_eigen_system(t, -1.0)?
    };
    Ok((plus, minus))
}

/// Checks the generic structure of a complete critical-point list: distinct
/// critical-value magnitudes, and the antipodal pairing (odd d: -x carries
/// -lambda uniquely; even d: each nonzero lambda has exactly the pair +-x).
///
/// Returns (distinct_values, pairing_ok). Tolerance for value equality is
/// 1e-9 relative to the largest magnitude (floor 1).
pub fn genericity_check(points: &[CriticalPoint], d: usize) -> (bool, bool) {
    let maxval = points.iter().fold(0.0_f64, |m, p| m.max(p.value.abs()));
    let tol = 1e-9 * maxval.max(1.0);
    let nonzero: Vec<&CriticalPoint> = points.iter().filter(|p| p.value.abs() > tol).collect();
    if nonzero.is_empty() {
        return (false, false);
    }

    let mut pairing_ok = true;
    for p in &nonzero {
        let target = wrap_angle(p.angle + std::f64::consts::PI);
        let antipode = nonzero
            .iter()
            .find(|q| angle_distance(q.angle, target) <= 1e-7);
        match antipode {
            None => pairing_ok = false,
            Some(q) => {
                let expected = if d % 2 == 1 { -p.value } else { p.value };
                if (q.value - expected).abs() > tol {
                    pairing_ok = false;
                }
            }
        }
    }

    // cluster by signed critical value
    let mut values: Vec<(f64, f64)> = nonzero.iter().map(|p| (p.value, p.angle)).collect();
    values.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut groups: Vec<Vec<(f64, f64)>> = Vec::new();
    for v in values {
        match groups.last_mut() {
            Some(g) if (v.0 - g.last().unwrap().0).abs() <= tol => g.push(v),
            _ => groups.push(vec![v]),
        }
    }

    let mut distinct = true;
    if d % 2 == 1 {
        // one point per value
        if groups.iter().any(|g| g.len() != 1) {
            distinct = false;
        }
    } else {
        // exactly the antipodal pair per value
        for g in &groups {
            if g.len() != 2
                || angle_distance(wrap_angle(g[0].1 + std::f64::consts::PI), g[1].1) > 1e-7
            {
                distinct = false;
            }
        }
    }
    // magnitudes pairwise distinct across groups (odd d: across positive ones)
    let mut mags: Vec<f64> = groups
        .iter()
        .map(|g| g[0].0.abs())
        .filter(|m| *m > tol)
        .collect();
    mags.sort_by(|a, b| a.partial_cmp(b).unwrap());
    for w in mags.windows(2) {
        if (w[1] - w[0]).abs() <= tol {
            if d % 2 == 1 {
                // the pair (lambda, -lambda) shares a magnitude legitimately;
                // collisions only count within the same sign
                continue;
            }
            distinct = false;
        }
    }
    if d % 2 == 1 {
        let mut pos: Vec<f64> = groups
            .iter()
            .map(|g| g[0].0)
            .filter(|v| *v > tol)
            .collect();
        pos.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for w in pos.windows(2) {
            if (w[1] - w[0]).abs() <= tol {
                distinct = false;
            }
        }
    }

    (distinct, pairing_ok)
}

/// Magnitudes of the critical values, one per antipodal pair {x, -x},
/// sorted descending. Two entries agreeing is the degenerate event (two
/// genuinely different critical classes sharing a magnitude); the pair
/// itself sharing one is structural and not counted.
pub fn critical_pair_magnitudes(points: &[CriticalPoint]) -> Vec<f64> {
    let mut visited = vec![false; points.len()];
    let mut mags = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if visited[i] {
            continue;
        }
        visited[i] = true;
        let target = wrap_angle(p.angle + std::f64::consts::PI);
        if let Some((j, _)) = points
            .iter()
            .enumerate()
            .find(|(j, q)| !visited[*j] && angle_distance(q.angle, target) <= 1e-7)
        {
            visited[j] = true;
        }
        mags.push(p.value.abs());
    }
    mags.sort_by(|a, b| b.partial_cmp(a).unwrap());
    mags
}

/// Maps a nonzero critical point to the eigenpair solution
/// x = |lambda|^(-1/(d-2)) y of the system matching the sign of lambda.
pub fn sphere_to_eigenpair(p: &CriticalPoint, t: &Tensor) -> Result<EigenpairSolution> {
    let d = t.order();
    if d < 3 {
        return Err(Error::Unsupported("correspondence requires d >= 3".into()));
    }
    if p.value == 0.0 {
        return Err(Error::DegenerateInput(
            "zero critical value has no eigenpair scale".into(),
        ));
    }
    let c = p.value.abs().powf(-1.0 / (d as f64 - 2.0));
    let coords: Vec<C> = p.point.coords().iter().map(|&y| C::new(c * y, 0.0)).collect();
    let sign = p.value.signum();
    // residual of the rescaled system
    let real: Vec<f64> = coords.iter().map(|z| z.re).collect();
    let factors: Vec<&[f64]> = (0..d).map(|_| real.as_slice()).collect();
    let g = t.contract_all_but(&factors, 0)?;
    let residual = g
        .iter()
        .zip(real.iter())
        .map(|(gi, xi)| (gi - sign * xi) * (gi - sign * xi))
        .sum::<f64>()
        .sqrt();
    Ok(EigenpairSolution {
        coords,
        system_sign: sign,
        multiplicity_flag: false,
        residual,
    })
}

/// Inverse correspondence: a real eigenpair solution normalizes to the
/// critical point y = x/||x|| with |lambda| = ||x||^-(d-2).
pub fn eigenpair_to_sphere(s: &EigenpairSolution, t: &Tensor) -> Result<CriticalPoint> {
    let d = t.order();
    if d < 3 {
        return Err(Error::Unsupported("correspondence requires d >= 3".into()));
    }
    let coords = s
        .real_coords()
        .ok_or_else(|| Error::Unsupported("only real solutions map to the sphere".into()))?;
    let norm = s.norm();
    if norm == 0.0 {
        return Err(Error::DegenerateInput("zero solution".into()));
    }
    let y: Vec<f64> = coords.iter().map(|x| x / norm).collect();
    let value = s.system_sign * norm.powi(-(d as i32 - 2));
    let angle = wrap_angle(y[1].atan2(y[0]));
    let factors: Vec<&[f64]> = (0..d).map(|_| y.as_slice()).collect();
    let g = t.contract_all_but(&factors, 0)?;
    let residual = g
        .iter()
        .zip(y.iter())
        .map(|(gi, yi)| (gi - value * yi) * (gi - value * yi))
        .sum::<f64>()
        .sqrt();
    Ok(CriticalPoint {
        point: UnitVector::normalized(&y)?,
        value,
        angle,
        residual,
    })
}

/// Polishes real coordinates into a checked eigenpair solution of the
/// sign-selected system for a symmetric tensor of any mode dimension.
pub fn real_eigenpair(t: &Tensor, coords: &[f64], system_sign: f64) -> Result<EigenpairSolution> {
    let refined = newton_real_eigen(t, coords.to_vec(), system_sign)?;
    let (residual, singular) = real_system_residual(t, &refined, system_sign)?;
    Ok(EigenpairSolution {
        coords: refined.iter().map(|&x| C::new(x, 0.0)).collect(),
        system_sign,
        multiplicity_flag: singular,
        residual,
    })
}

fn real_system_eval(t: &Tensor, x: &[f64], sign: f64) -> Result<Vec<f64>> {
    let d = t.order();
    let factors: Vec<&[f64]> = (0..d).map(|_| x).collect();
    let g = t.contract_all_but(&factors, 0)?;
    Ok(g.iter().zip(x.iter()).map(|(gi, xi)| gi - sign * xi).collect())
}

fn real_system_jacobian(t: &Tensor, x: &[f64], sign: f64) -> Result<Vec<f64>> {
    let d = t.order();
    let n = t.shape()[0];
    // J = (d-1) T x^{(x)(d-2)} - sign I
    let assigns: Vec<(usize, &[f64])> = (2..d).map(|m| (m, x)).collect();
    let m = t.contract(&assigns)?;
    let mut j = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            j[i * n + k] = (d as f64 - 1.0) * m.get(&[i, k]);
        }
        j[i * n + i] -= sign;
    }
    Ok(j)
}

fn real_system_residual(t: &Tensor, x: &[f64], sign: f64) -> Result<(f64, bool)> {
    let f = real_system_eval(t, x, sign)?;
    let residual = f.iter().map(|v| v * v).sum::<f64>().sqrt();
    let n = x.len();
    let j = real_system_jacobian(t, x, sign)?;
    let singular = solve_real(&j, &vec![0.0; n], n).is_none();
    Ok((residual, singular))
}

fn newton_real_eigen(t: &Tensor, mut x: Vec<f64>, sign: f64) -> Result<Vec<f64>> {
    let n = x.len();
    let d = t.order();
    if t.shape()[0] != n {
        return Err(Error::LengthMismatch {
            mode: 0,
            expected: t.shape()[0],
            found: n,
        });
    }
    let tmax = t.max_abs().max(1.0);
    for _ in 0..60 {
        let f = real_system_eval(t, &x, sign)?;
        let fnorm = f.iter().map(|v| v * v).sum::<f64>().sqrt();
        let xnorm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        let tol = 1e-13 * tmax * (1.0 + xnorm).powi(d as i32 - 1);
        if fnorm <= tol {
            return Ok(x);
        }
        let j = real_system_jacobian(t, &x, sign)?;
        let rhs: Vec<f64> = f.iter().map(|v| -v).collect();
        let step = solve_real(&j, &rhs, n).ok_or_else(|| {
            Error::NonConvergence("singular Jacobian in eigenpair continuation".into())
        })?;
        for (xi, si) in x.iter_mut().zip(step.iter()) {
            *xi += si;
        }
    }
    Err(Error::NonConvergence(
        "eigenpair Newton did not converge".into(),
    ))
}

/// First-order response of a simple real eigenpair to T -> T + eps S,
/// compared against central finite differences with eps = 1e-6.
pub fn eigenpair_sensitivity(
    t: &Tensor,
    s: &Tensor,
    base: &EigenpairSolution,
) -> Result<PerturbationCheck> {
    let d = t.order();
    if s.shape() != t.shape() {
        return Err(Error::ShapeMismatch {
            expected: t.shape().to_vec(),
            found: s.shape().to_vec(),
        });
    }
    if d < 3 {
        return Err(Error::Unsupported("sensitivity requires d >= 3".into()));
    }
    if base.multiplicity_flag {
        return Err(Error::DegenerateInput(
            "sensitivity requires a simple eigenpair".into(),
        ));
    }
    let x = base
        .real_coords()
        .ok_or_else(|| Error::Unsupported("sensitivity requires a real eigenpair".into()))?;
    let sign = base.system_sign;

    let slices: Vec<&[f64]> = (0..d).map(|_| x.as_slice()).collect();
    let outer = Tensor::decomposable(&slices)?;
    let s_overlap = s.inner(&outer)?;
    let predicted_overlap = sign * s_overlap / (2.0 - d as f64);

    let eps = 1e-6;
    let plus = newton_real_eigen(&t.add(&s.scaled(eps))?, x.clone(), sign)?;
    let minus = newton_real_eigen(&t.sub(&s.scaled(eps))?, x.clone(), sign)?;
    let fd_overlap: f64 = x
        .iter()
        .zip(plus.iter().zip(minus.iter()))
        .map(|(xi, (p, m))| xi * (p - m) / (2.0 * eps))
        .sum();

    let rel_error = (predicted_overlap - fd_overlap).abs() / predicted_overlap.abs().max(1.0);
    Ok(PerturbationCheck {
        direction: s.clone(),
        base: base.clone(),
        predicted_overlap,
        fd_overlap,
        rel_error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use approx::assert_relative_eq;

    fn random_sym2(d: usize, rng: &mut SplitMix64) -> Tensor {
        let shape = vec![2usize; d];
        let len = 1usize << d;
        Tensor::new(shape, rng.gaussian_vec(len))
            .unwrap()
            .symmetrize()
            .unwrap()
    }

    fn family_theta0() -> Tensor {
        // t111 = 1, t122-orbit = -1, others 0
        let mut t = Tensor::zeros(&[2, 2, 2]);
        t.set(&[0, 0, 0], 1.0);
        t.set(&[0, 1, 1], -1.0);
        t.set(&[1, 0, 1], -1.0);
        t.set(&[1, 1, 0], -1.0);
        t
    }

    fn two_basis_cubes() -> Tensor {
        let e1 = [1.0, 0.0];
        let e2 = [0.0, 1.0];
        Tensor::decomposable(&[&e1, &e1, &e1])
            .unwrap()
            .add(&Tensor::decomposable(&[&e2, &e2, &e2]).unwrap())
            .unwrap()
    }

    #[test]
    fn angle_objective_of_family_is_cos3phi() {
        let f = angle_objective(&family_theta0()).unwrap();
        assert_relative_eq!(f.cos_coeffs[3], 1.0, epsilon = 1e-14);
        for v in 0..3 {
            assert_relative_eq!(f.cos_coeffs[v], 0.0, epsilon = 1e-14);
        }
        for v in 1..=3 {
            assert_relative_eq!(f.sin_coeffs[v], 0.0, epsilon = 1e-14);
        }
        for k in 0..20 {
            let phi = 0.31 * k as f64;
            assert_relative_eq!(f.eval(phi), (3.0 * phi).cos(), epsilon = 1e-12);
        }
    }

    #[test]
    fn angle_objective_of_basis_cube() {
        let e1 = [1.0, 0.0];
        let t = Tensor::decomposable(&[&e1, &e1, &e1]).unwrap();
        let f = angle_objective(&t).unwrap();
        for k in 0..20 {
            let phi = 0.17 * k as f64;
            assert_relative_eq!(f.eval(phi), phi.cos().powi(3), epsilon = 1e-13);
            assert_relative_eq!(f.eval_fourier(phi), phi.cos().powi(3), epsilon = 1e-13);
        }
    }

    #[test]
    fn fourier_matches_direct_contraction() {
        let mut rng = SplitMix64::new(90);
        let t = random_sym2(4, &mut rng);
        let f = angle_objective(&t).unwrap();
        for k in 0..100 {
            let phi = TAU * k as f64 / 100.0;
            let x = [phi.cos(), phi.sin()];
            let direct = t
                .contract(&[(0, &x[..]), (1, &x[..]), (2, &x[..]), (3, &x[..])])
                .unwrap()
                .as_scalar()
                .unwrap();
            assert_relative_eq!(f.eval(phi), direct, epsilon = 1e-12);
            assert_relative_eq!(f.eval_fourier(phi), direct, epsilon = 1e-12);
        }
    }

    #[test]
    fn family_critical_points_are_sixth_turns() {
        let points = enumerate_critical_points(&family_theta0()).unwrap();
        assert_eq!(points.len(), 6);
        for (k, p) in points.iter().enumerate() {
            let expect = k as f64 * std::f64::consts::PI / 3.0;
            assert!(angle_distance(p.angle, expect) <= 1e-9, "angle {}", p.angle);
            let expect_val = if k % 2 == 0 { 1.0 } else { -1.0 };
            assert_relative_eq!(p.value, expect_val, epsilon = 1e-12);
            assert!(p.residual <= 1e-9);
        }
    }

    #[test]
    fn basis_cubes_critical_angles() {
        let points = enumerate_critical_points(&two_basis_cubes()).unwrap();
        let angles: Vec<f64> = points.iter().map(|p| p.angle).collect();
        let quarter = std::f64::consts::FRAC_PI_2;
        for expect in [0.0, quarter, std::f64::consts::FRAC_PI_4] {
            assert!(
                angles.iter().any(|&a| angle_distance(a, expect) <= 1e-9),
                "missing angle {expect}"
            );
        }
        let at = |phi: f64| {
            points
                .iter()
                .find(|p| angle_distance(p.angle, phi) <= 1e-9)
                .unwrap()
        };
        assert_relative_eq!(at(0.0).value, 1.0, epsilon = 1e-12);
        assert_relative_eq!(at(quarter).value, 1.0, epsilon = 1e-12);
        assert_relative_eq!(
            at(std::f64::consts::FRAC_PI_4).value,
            1.0 / 2.0_f64.sqrt(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn critical_points_match_grid_sign_changes() {
        let mut rng = SplitMix64::new(91);
        for d in [3usize, 4, 5] {
            for _ in 0..5 {
                let t = random_sym2(d, &mut rng);
                let f = angle_objective(&t).unwrap();
                let points = enumerate_critical_points(&t).unwrap();
                let grid = 100_000;
                let mut crossings = Vec::new();
                let mut prev = f.deriv_eval(0.0);
                for k in 1..=grid {
                    let phi = TAU * k as f64 / grid as f64;
                    let cur = f.deriv_eval(phi);
                    if prev == 0.0 || (prev < 0.0) != (cur < 0.0) {
                        crossings.push(phi);
                    }
                    prev = cur;
                }
                for c in crossings {
                    assert!(
                        points.iter().any(|p| angle_distance(p.angle, c) <= 1e-3),
                        "d={d}: crossing at {c} has no enumerated angle"
                    );
                }
                for p in &points {
                    assert!(p.residual <= 1e-9 * t.max_abs().max(1.0));
                }
            }
        }
    }

    #[test]
    fn census_of_two_basis_cubes() {
        let report = eigenpair_census(&two_basis_cubes()).unwrap();
        assert!(report.conclusive);
        assert_eq!(report.complex_count, 3);
        assert_eq!(report.real_count_pos, 3);
        assert_eq!(report.real_count_neg, 3);
        assert_eq!(report.bound_complex, 3);
        assert_eq!(report.bound_real, 3);
        assert_eq!(report.bounds_satisfied, Some(true));
        // solutions are (1,0), (0,1), (1,1)
        let (plus, _) = eigenpair_solutions(&two_basis_cubes()).unwrap();
        for expect in [[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]] {
            assert!(
                plus.iter().any(|s| {
                    let r = s.real_coords().unwrap();
                    (r[0] - expect[0]).abs() < 1e-10 && (r[1] - expect[1]).abs() < 1e-10
                }),
                "missing solution {expect:?}"
            );
        }
        // nongeneric: two critical points share the value 1
        assert!(!report.distinct_critical_values);
    }

    #[test]
    fn census_of_family_theta0() {
        let report = eigenpair_census(&family_theta0()).unwrap();
        assert!(report.conclusive);
        assert_eq!(report.complex_count, 3);
        assert_eq!(report.real_count_pos, 3);
        assert!(!report.distinct_critical_values);
        let (plus, _) = eigenpair_solutions(&family_theta0()).unwrap();
        let expected = [
            [1.0, 0.0],
            [-0.5, 3.0_f64.sqrt() / 2.0],
            [-0.5, -(3.0_f64.sqrt()) / 2.0],
        ];
        for e in expected {
            assert!(
                plus.iter().any(|s| {
                    let r = s.real_coords().unwrap();
                    (r[0] - e[0]).abs() < 1e-9 && (r[1] - e[1]).abs() < 1e-9
                }),
                "missing {e:?}"
            );
        }
    }

    #[test]
    fn census_counts_on_random_tensors() {
        let mut rng = SplitMix64::new(92);
        for d in [3usize, 4, 5] {
            let mut generic_hits = 0;
            let trials = 10;
            for _ in 0..trials {
                let t = random_sym2(d, &mut rng);
                let report = eigenpair_census(&t).unwrap();
                assert!(report.conclusive, "d={d}");
                assert!(report.complex_count <= report.bound_complex, "d={d}");
                assert_eq!(report.bounds_satisfied, Some(true), "d={d}");
                if report.complex_count == report.bound_complex {
                    generic_hits += 1;
                }
                // real solutions match positive critical values
                let points = enumerate_critical_points(&t).unwrap();
                let pos = points.iter().filter(|p| p.value > 1e-9).count();
                assert_eq!(report.real_count_pos, pos, "d={d}");
            }
            assert!(
                generic_hits >= trials - 1,
                "d={d}: bound attained only {generic_hits}/{trials}"
            );
        }
    }

    #[test]
    fn roots_of_unity_orbit_structure() {
        let mut rng = SplitMix64::new(93);
        let t = random_sym2(5, &mut rng);
        let (plus, _) = eigenpair_solutions(&t).unwrap();
        assert_eq!(plus.len(), 15);
        // multiplying by a cube root of unity permutes the solution set
        let zeta = C::from_polar(1.0, TAU / 3.0);
        for s in &plus {
            let rotated: Vec<C> = s.coords.iter().map(|c| c * zeta).collect();
            assert!(
                plus.iter().any(|other| {
                    (other.coords[0] - rotated[0]).norm() + (other.coords[1] - rotated[1]).norm()
                        < 1e-6
                }),
                "orbit not closed"
            );
        }
    }

    #[test]
    fn genericity_flags_on_fixtures() {
        // generic random cubic: distinct and paired
        let mut rng = SplitMix64::new(94);
        let t = random_sym2(3, &mut rng);
        let points = enumerate_critical_points(&t).unwrap();
        let (distinct, pairing) = genericity_check(&points, 3);
        assert!(distinct);
        assert!(pairing);

        // e1^4 + e2^4: values collide
        let e1 = [1.0, 0.0];
        let e2 = [0.0, 1.0];
        let quartic = Tensor::decomposable(&[&e1, &e1, &e1, &e1])
            .unwrap()
            .add(&Tensor::decomposable(&[&e2, &e2, &e2, &e2]).unwrap())
            .unwrap();
        let points = enumerate_critical_points(&quartic).unwrap();
        let (distinct, _) = genericity_check(&points, 4);
        assert!(!distinct);
    }

    #[test]
    fn pair_magnitudes_of_the_family_collide() {
        let points = enumerate_critical_points(&family_theta0()).unwrap();
        let mags = critical_pair_magnitudes(&points);
        // three antipodal pairs, all sharing magnitude 1: gap exactly 0
        assert_eq!(mags.len(), 3);
        for m in &mags {
            assert_relative_eq!(*m, 1.0, epsilon = 1e-12);
        }
        assert!(mags[0] - mags[1] <= 1e-12);
    }

    #[test]
    fn enumeration_handles_order_six() {
        let mut rng = SplitMix64::new(97);
        let t = random_sym2(6, &mut rng);
        let points = enumerate_critical_points(&t).unwrap();
        assert!(points.len() >= 2 && points.len() <= 12);
        for p in &points {
            assert!(p.residual <= 1e-9 * t.max_abs().max(1.0));
        }
    }

    #[test]
    fn sphere_eigenpair_round_trip() {
        let mut rng = SplitMix64::new(95);
        for d in [3usize, 4, 5] {
            let t = random_sym2(d, &mut rng);
            let points = enumerate_critical_points(&t).unwrap();
            for p in points.iter().filter(|p| p.value.abs() > 1e-9) {
                let s = sphere_to_eigenpair(p, &t).unwrap();
                assert!(s.residual <= 1e-8 * t.max_abs().max(1.0) * 10.0);
                let back = eigenpair_to_sphere(&s, &t).unwrap();
                assert!(angle_distance(back.angle, p.angle) <= 1e-10);
                assert_relative_eq!(back.value, p.value, max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn named_round_trip_values() {
        // y = (1,1)/sqrt(2), lambda = 1/sqrt(2), d = 3 maps to x = (1,1)
        let t = two_basis_cubes();
        let points = enumerate_critical_points(&t).unwrap();
        let diag = points
            .iter()
            .find(|p| angle_distance(p.angle, std::f64::consts::FRAC_PI_4) < 1e-9)
            .unwrap();
        let s = sphere_to_eigenpair(diag, &t).unwrap();
        let r = s.real_coords().unwrap();
        assert_relative_eq!(r[0], 1.0, epsilon = 1e-10);
        assert_relative_eq!(r[1], 1.0, epsilon = 1e-10);
    }

    #[test]
    fn sensitivity_closed_form_fixture() {
        // T = e1^3 + e2^3, x = (1,0), S = e1^3: overlap -1 exactly
        let t = two_basis_cubes();
        let e1 = [1.0, 0.0];
        let s = Tensor::decomposable(&[&e1, &e1, &e1]).unwrap();
        let base = real_eigenpair(&t, &[1.0, 0.0], 1.0).unwrap();
        assert!(!base.multiplicity_flag);
        let check = eigenpair_sensitivity(&t, &s, &base).unwrap();
        assert_relative_eq!(check.predicted_overlap, -1.0, epsilon = 1e-12);
        assert_relative_eq!(check.fd_overlap, -1.0, epsilon = 1e-9);
    }

    #[test]
    fn sensitivity_orthogonal_direction_is_zero() {
        let t = two_basis_cubes();
        let e2 = [0.0, 1.0];
        let s = Tensor::decomposable(&[&e2, &e2, &e2]).unwrap();
        let base = real_eigenpair(&t, &[1.0, 0.0], 1.0).unwrap();
        let check = eigenpair_sensitivity(&t, &s, &base).unwrap();
        assert_relative_eq!(check.predicted_overlap, 0.0, epsilon = 1e-14);
        assert!(check.fd_overlap.abs() <= 1e-8);
    }

    #[test]
    fn sensitivity_matches_finite_differences_randomly() {
        let mut rng = SplitMix64::new(96);
        let mut tested = 0;
        while tested < 10 {
            let t = random_sym2(4, &mut rng);
            let s = random_sym2(4, &mut rng);
            let (plus, _) = match eigenpair_solutions(&t) {
                Ok(p) => p,
                Err(_) => continue,
            };
            let Some(base) = plus
                .iter()
                .find(|s| s.is_real() && !s.multiplicity_flag)
            else {
                continue;
            };
            let check = eigenpair_sensitivity(&t, &s, base).unwrap();
            assert!(
                check.rel_error <= 1e-5,
                "rel error {} too large",
                check.rel_error
            );
            tested += 1;
        }
    }

    #[test]
    fn census_rejects_small_d_and_asymmetric() {
        let m = Tensor::zeros(&[2, 2]);
        assert!(eigenpair_census(&m).is_err());
        let e1 = [1.0, 0.0];
        let e2 = [0.0, 1.0];
        let asym = Tensor::decomposable(&[&e1, &e2, &e2]).unwrap();
        assert!(eigenpair_census(&asym).is_err());
    }
}
