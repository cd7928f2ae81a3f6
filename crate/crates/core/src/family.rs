//! The one-parameter family of symmetric 2x2x2 tensors admitting
//! nonsymmetric best rank-one approximations:
//!
//! ```text
//! t111 = cos th,  t112 = sin th,  t122 = -cos th,  t222 = -sin th
//! ```
//!
//! (orbit entries filled symmetrically, times a positive scale). Every
//! single-mode contraction A(u) of such a tensor is a trace-zero symmetric
//! 2x2 matrix with eigenvalues +-scale, so u (x) v (x) w(u, v) with
//! w(u, v) = A(u) v / ||A(u) v|| is a best rank-one approximation for any
//! unit u, v, while exactly three of the critical points are symmetric
//! optima. The zero-trace condition on every leading 2x2 slice is the
//! necessary condition this family satisfies in all orders d.

use crate::critical::{enumerate_critical_points, CriticalPoint};
use crate::error::{Error, Result};
use crate::tensor::{next_index, Tensor, UnitVector};
use std::collections::BTreeMap;

/// Point on the family: angle in [0, 2 pi) and a positive scale.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FamilyParams {
    pub theta: f64,
    pub scale: f64,
}

/// Traces of the leading 2x2 slices over all trailing multi-indices.
#[derive(Clone, Debug)]
pub struct SliceTraceReport {
    /// Trailing multi-index (0-based) -> t[0,0,..] + t[1,1,..].
    pub traces: BTreeMap<Vec<usize>, f64>,
    pub all_traceless: bool,
    pub max_abs_trace: f64,
}

/// Builds the family tensor for the given parameters.
pub fn family_tensor(p: &FamilyParams) -> Tensor {
    let (c, s) = (p.theta.cos(), p.theta.sin());
    let mut t = Tensor::zeros(&[2, 2, 2]);
    let orbit = |t: &mut Tensor, ones: usize, v: f64| {
        let mut idx = [0usize; 3];
        for slot in idx.iter_mut().take(3).skip(3 - ones) {
            *slot = 1;
        }
        let positions = [
            [idx[0], idx[1], idx[2]],
            [idx[0], idx[2], idx[1]],
            [idx[1], idx[0], idx[2]],
            [idx[1], idx[2], idx[0]],
            [idx[2], idx[0], idx[1]],
            [idx[2], idx[1], idx[0]],
        ];
        for pos in positions {
            t.set(&pos, v);
        }
    };
    orbit(&mut t, 0, p.scale * c);
    orbit(&mut t, 1, p.scale * s);
    orbit(&mut t, 2, -p.scale * c);
    orbit(&mut t, 3, -p.scale * s);
    t
}

/// Traces of the leading 2x2 slices of a symmetric 2 x ... x 2 tensor;
/// `all_traceless` holds when every |trace| is at most `tol`.
pub fn slice_traces(t: &Tensor, tol: f64) -> Result<SliceTraceReport> {
    let d = t.order();
    if d < 2 || t.shape().iter().any(|&n| n != 2) {
        return Err(Error::Unsupported(format!(
            "slice traces need a 2 x ... x 2 tensor of order >= 2, found {:?}",
            t.shape()
        )));
    }
    let alpha: Vec<usize> = (0..d).collect();
    if !t.is_symmetric_wrt_eps(&alpha, 1e-12 * t.max_abs().max(1.0)) {
        return Err(Error::NotSymmetric("tensor is not symmetric".into()));
    }
    let mut traces = BTreeMap::new();
    let mut max_abs: f64 = 0.0;
    let trailing_shape = vec![2usize; d - 2];
    let mut trailing = vec![0usize; d - 2];
    loop {
        let mut idx0 = vec![0usize; d];
        let mut idx1 = vec![1usize, 1];
        idx1.extend_from_slice(&trailing);
        idx0[2..].copy_from_slice(&trailing);
        let trace = t.get(&idx0) + t.get(&idx1);
        max_abs = max_abs.max(trace.abs());
        traces.insert(trailing.clone(), trace);
        if d == 2 || !next_index(&mut trailing, &trailing_shape) {
            break;
        }
    }
    Ok(SliceTraceReport {
        traces,
        all_traceless: max_abs <= tol,
        max_abs_trace: max_abs,
    })
}

/// Recovers (theta, scale) when the tensor is proportional to the family
/// pattern: t122 = -t111 and t222 = -t112 within `rel_tol * ||T||`.
/// Returns None for symmetric 2x2x2 tensors outside the family.
pub fn detect_family(t: &Tensor, rel_tol: f64) -> Result<Option<FamilyParams>> {
    if t.shape() != [2, 2, 2] {
        return Err(Error::Unsupported(format!(
            "family detection needs a 2x2x2 tensor, found {:?}",
            t.shape()
        )));
    }
    let norm = t.hs_norm();
    if norm == 0.0 {
        return Err(Error::DegenerateInput("zero tensor".into()));
    }
    let alpha = [0, 1, 2];
    if !t.is_symmetric_wrt_eps(&alpha, 1e-12 * t.max_abs().max(1.0)) {
        return Err(Error::NotSymmetric("tensor is not symmetric".into()));
    }
    let tol = rel_tol * norm;
    let t111 = t.get(&[0, 0, 0]);
    let t112 = t.get(&[0, 0, 1]);
    let t122 = t.get(&[0, 1, 1]);
    let t222 = t.get(&[1, 1, 1]);
    if (t122 + t111).abs() > tol || (t222 + t112).abs() > tol {
        return Ok(None);
    }
    let scale = t111.hypot(t112);
    if scale <= tol {
        return Ok(None);
    }
    let mut theta = t112.atan2(t111);
    if theta < 0.0 {
        theta += 2.0 * std::f64::consts::PI;
    }
    Ok(Some(FamilyParams { theta, scale }))
}

/// The leading frontal section of the family pattern at angle `theta`.
fn frontal_section(theta: f64, scale: f64) -> [f64; 4] {
    let (c, s) = (theta.cos(), theta.sin());
    [scale * c, scale * s, scale * s, -scale * c]
}

/// Frobenius defect of the rotation identity
/// A((cos phi, sin phi)) = cos phi A1 + sin phi A2 = A1(theta - phi).
pub fn rotation_identity_check(p: &FamilyParams, phi: f64) -> f64 {
    let t = family_tensor(p);
    let x = [phi.cos(), phi.sin()];
    let a = t.contract(&[(0, x.as_slice())]).expect("2x2x2 tensor");
    let expect = frontal_section(p.theta - phi, p.scale);
    a.data()
        .iter()
        .zip(expect.iter())
        .map(|(got, want)| (got - want) * (got - want))
        .sum::<f64>()
        .sqrt()
}

/// The three symmetric optima of a family tensor plus the map
/// (u, v) -> w(u, v) completing any pair of unit vectors to a best
/// rank-one approximation.
pub struct FamilySolutions {
    /// Exactly three critical points with value equal to the scale.
    pub symmetric: Vec<CriticalPoint>,
    tensor: Tensor,
}

impl FamilySolutions {
    /// w(u, v) = A(u) v normalized; A(u) is invertible so this is total on
    /// unit inputs.
    pub fn w_map(&self, u: &[f64], v: &[f64]) -> Result<UnitVector> {
        let a = self.tensor.contract(&[(0, u)])?;
        let w = [
            a.get(&[0, 0]) * v[0] + a.get(&[0, 1]) * v[1],
            a.get(&[1, 0]) * v[0] + a.get(&[1, 1]) * v[1],
        ];
        UnitVector::normalized(&w)
    }

    pub fn tensor(&self) -> &Tensor {
        &self.tensor
    }
}

/// Enumerates the three symmetric best rank-one approximations of the
/// family tensor and exposes the w-map for the nonsymmetric ones.
pub fn family_solutions(p: &FamilyParams) -> Result<FamilySolutions> {
    let tensor = family_tensor(p);
    let points = enumerate_critical_points(&tensor)?;
    let positive: Vec<CriticalPoint> = points.into_iter().filter(|pt| pt.value > 0.0).collect();
    if positive.len() != 3 {
        return Err(Error::NonConvergence(format!(
            "expected 3 positive critical classes, found {}",
            positive.len()
        )));
    }
    for pt in &positive {
        if (pt.value - p.scale).abs() > 1e-9 * p.scale.max(1.0) {
            return Err(Error::NonConvergence(format!(
                "critical value {} differs from scale {}",
                pt.value, p.scale
            )));
        }
    }
    Ok(FamilySolutions {
        symmetric: positive,
        tensor,
    })
}
