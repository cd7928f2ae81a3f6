//! Dense real d-mode tensors with row-major storage (last index fastest),
//! inner products, contractions against vectors, symmetry detection, and the
//! decomposition of the mode set into maximal symmetry blocks.
//!
//! A tensor of order zero is a legal value (a scalar wrapped in a tensor), so
//! contracting away every mode composes cleanly with the other operations.

use crate::error::{Error, Result};
use itertools::Itertools;

/// Dense d-mode tensor over `f64`, row-major with the last index fastest.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<f64>,
}

/// Advances `idx` odometer-style through `shape`; returns false after the last index.
pub(crate) fn next_index(idx: &mut [usize], shape: &[usize]) -> bool {
    for k in (0..shape.len()).rev() {
        idx[k] += 1;
        if idx[k] < shape[k] {
            return true;
        }
        idx[k] = 0;
    }
    false
}

impl Tensor {
    /// Builds a tensor from its shape and row-major data.
    ///
    /// Every extent must be positive, `data.len()` must equal the product of
    /// the extents, and all entries must be finite.
    pub fn new(shape: Vec<usize>, data: Vec<f64>) -> Result<Self> {
        if shape.contains(&0) {
            return Err(Error::InvalidTensor("zero extent".into()));
        }
        let len: usize = shape.iter().product();
        if data.len() != len {
            return Err(Error::InvalidTensor(format!(
                "data length {} does not match shape product {}",
                data.len(),
                len
            )));
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidTensor("non-finite entry".into()));
        }
        Ok(Self { shape, data })
    }

    pub fn zeros(shape: &[usize]) -> Self {
        let len = shape.iter().product();
        Self {
            shape: shape.to_vec(),
            data: vec![0.0; len],
        }
    }

    /// Order-zero tensor holding a single value.
    pub fn scalar(value: f64) -> Self {
        Self {
            shape: Vec::new(),
            data: vec![value],
        }
    }

    /// Number of modes d.
    pub fn order(&self) -> usize {
        self.shape.len()
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    /// The single entry of an order-zero tensor.
    pub fn as_scalar(&self) -> Option<f64> {
        if self.shape.is_empty() {
            Some(self.data[0])
        } else {
            None
        }
    }

    #[inline]
    pub(crate) fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.shape.len());
        let mut off = 0;
        for (i, &k) in idx.iter().enumerate() {
            debug_assert!(k < self.shape[i]);
            off = off * self.shape[i] + k;
        }
        off
    }

    pub fn get(&self, idx: &[usize]) -> f64 {
        self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: f64) {
        let off = self.offset(idx);
        self.data[off] = value;
    }

    /// Inner product over all multi-indices; requires equal shapes.
    pub fn inner(&self, other: &Self) -> Result<f64> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch {
                expected: self.shape.clone(),
                found: other.shape.clone(),
            });
        }
        Ok(self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a * b)
            .sum())
    }

    /// Hilbert-Schmidt norm, sqrt of the inner product with itself.
    pub fn hs_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Outer product of the factor vectors: entry (i_1..i_d) = prod_j x_{i_j,j}.
    pub fn decomposable(factors: &[&[f64]]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidTensor("empty factor list".into()));
        }
        if factors.iter().any(|f| f.is_empty()) {
            return Err(Error::InvalidTensor("empty factor vector".into()));
        }
        let shape: Vec<usize> = factors.iter().map(|f| f.len()).collect();
        let mut out = Tensor::zeros(&shape);
        let mut idx = vec![0usize; shape.len()];
        loop {
            let mut p = 1.0;
            for (j, &k) in idx.iter().enumerate() {
                p *= factors[j][k];
            }
            let off = out.offset(&idx);
            out.data[off] = p;
            if !next_index(&mut idx, &shape) {
                break;
            }
        }
        Ok(out)
    }

    /// Contracts the assigned modes against vectors, returning the tensor of
    /// order d - |assignments|. Assigning every mode yields an order-zero
    /// tensor whose single entry is the inner product with the decomposable
    /// tensor of the assigned vectors.
    pub fn contract(&self, assignments: &[(usize, &[f64])]) -> Result<Self> {
        let d = self.order();
        let mut assigned: Vec<Option<&[f64]>> = vec![None; d];
        for &(mode, v) in assignments {
            if mode >= d {
                return Err(Error::ModeOutOfRange { mode, order: d });
            }
            if assigned[mode].is_some() {
                return Err(Error::InvalidTensor(format!("mode {mode} assigned twice")));
            }
            if v.len() != self.shape[mode] {
                return Err(Error::LengthMismatch {
                    mode,
                    expected: self.shape[mode],
                    found: v.len(),
                });
            }
            assigned[mode] = Some(v);
        }
        let kept: Vec<usize> = (0..d).filter(|&m| assigned[m].is_none()).collect();
        let out_shape: Vec<usize> = kept.iter().map(|&m| self.shape[m]).collect();
        let mut out = Tensor::zeros(&out_shape);

        let mut idx = vec![0usize; d];
        let mut out_idx = vec![0usize; kept.len()];
        loop {
            let mut w = 1.0;
            for m in 0..d {
                if let Some(v) = assigned[m] {
                    w *= v[idx[m]];
                }
            }
            if w != 0.0 {
                for (o, &m) in kept.iter().enumerate() {
                    out_idx[o] = idx[m];
                }
                let off = out.offset(&out_idx);
                out.data[off] += w * self.data[self.offset(&idx)];
            }
            if !next_index(&mut idx, &self.shape) {
                break;
            }
        }
        Ok(out)
    }

    /// Contracts every mode except `keep` against the matching factor,
    /// returning the resulting vector. `factors[keep]` is ignored.
    pub fn contract_all_but(&self, factors: &[&[f64]], keep: usize) -> Result<Vec<f64>> {
        let d = self.order();
        if keep >= d {
            return Err(Error::ModeOutOfRange {
                mode: keep,
                order: d,
            });
        }
        if factors.len() != d {
            return Err(Error::InvalidTensor(format!(
                "expected {} factors, found {}",
                d,
                factors.len()
            )));
        }
        for (m, f) in factors.iter().enumerate() {
            if m != keep && f.len() != self.shape[m] {
                return Err(Error::LengthMismatch {
                    mode: m,
                    expected: self.shape[m],
                    found: f.len(),
                });
            }
        }
        let mut out = vec![0.0; self.shape[keep]];
        let mut idx = vec![0usize; d];
        loop {
            let mut w = 1.0;
            for m in 0..d {
                if m != keep {
                    w *= factors[m][idx[m]];
                }
            }
            out[idx[keep]] += w * self.data[self.offset(&idx)];
            if !next_index(&mut idx, &self.shape) {
                break;
            }
        }
        Ok(out)
    }

    /// Exact symmetry of all entries under any transposition of two modes in
    /// `alpha`. Modes with unequal extents make this false, never an error.
    /// Sets of size below two are symmetric by convention.
    pub fn is_symmetric_wrt(&self, alpha: &[usize]) -> bool {
        self.symmetric_wrt_impl(alpha, None)
    }

    /// Like [`is_symmetric_wrt`](Self::is_symmetric_wrt) but allows an
    /// absolute entry-wise tolerance, for numerically symmetrized data.
    pub fn is_symmetric_wrt_eps(&self, alpha: &[usize], eps: f64) -> bool {
        self.symmetric_wrt_impl(alpha, Some(eps))
    }

    fn symmetric_wrt_impl(&self, alpha: &[usize], eps: Option<f64>) -> bool {
        let d = self.order();
        if alpha.iter().any(|&m| m >= d) {
            return false;
        }
        if alpha.len() < 2 {
            return true;
        }
        for pair in alpha.iter().combinations(2) {
            let (p, q) = (*pair[0], *pair[1]);
            if !self.transposition_invariant(p, q, eps) {
                return false;
            }
        }
        true
    }

    fn transposition_invariant(&self, p: usize, q: usize, eps: Option<f64>) -> bool {
        if self.shape[p] != self.shape[q] {
            return false;
        }
        let mut idx = vec![0usize; self.order()];
        let mut swapped = idx.clone();
        loop {
            swapped.copy_from_slice(&idx);
            swapped.swap(p, q);
            let a = self.data[self.offset(&idx)];
            let b = self.data[self.offset(&swapped)];
            let ok = match eps {
                None => a == b,
                Some(e) => (a - b).abs() <= e,
            };
            if !ok {
                return false;
            }
            if !next_index(&mut idx, &self.shape) {
                break;
            }
        }
        true
    }

    /// True when the tensor is invariant under every permutation of its modes.
    pub fn is_symmetric(&self) -> bool {
        let alpha: Vec<usize> = (0..self.order()).collect();
        self.is_symmetric_wrt(&alpha)
    }

    /// The unique coarsest partition of the modes such that the tensor is
    /// symmetric with respect to each block and no pair straddling two blocks.
    ///
    /// Built as the transitive closure of the pairwise relation "symmetric
    /// with respect to {p, q}": pairwise transpositions generate the full
    /// permutation group of a block.
    pub fn symmetric_decomposition(&self) -> ModePartition {
        let d = self.order();
        let mut parent: Vec<usize> = (0..d).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for p in 0..d {
            for q in (p + 1)..d {
                if self.is_symmetric_wrt(&[p, q]) {
                    let (rp, rq) = (find(&mut parent, p), find(&mut parent, q));
                    if rp != rq {
                        parent[rp] = rq;
                    }
                }
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut root_of_block: Vec<usize> = Vec::new();
        for m in 0..d {
            let r = find(&mut parent, m);
            match root_of_block.iter().position(|&x| x == r) {
                Some(i) => blocks[i].push(m),
                None => {
                    root_of_block.push(r);
                    blocks.push(vec![m]);
                }
            }
        }
        blocks.sort_by_key(|b| b[0]);
        ModePartition { blocks }
    }

    /// Average over all d! mode permutations. Requires equal extents.
    ///
    /// Each orbit's average is computed once, at the sorted representative
    /// index, and copied to every member, so the output is exactly symmetric
    /// rather than symmetric up to summation-order roundoff.
    pub fn symmetrize(&self) -> Result<Self> {
        let d = self.order();
        if d == 0 {
            return Ok(self.clone());
        }
        let n = self.shape[0];
        if self.shape.iter().any(|&k| k != n) {
            return Err(Error::InvalidTensor(
                "symmetrize requires equal extents".into(),
            ));
        }
        let mut out = Tensor::zeros(&self.shape);
        let perms: Vec<Vec<usize>> = (0..d).permutations(d).collect();
        let weight = 1.0 / perms.len() as f64;
        let mut idx = vec![0usize; d];
        let mut pidx = vec![0usize; d];
        loop {
            if idx.windows(2).all(|w| w[0] <= w[1]) {
                let mut acc = 0.0;
                for perm in &perms {
                    for (k, &pk) in perm.iter().enumerate() {
                        pidx[k] = idx[pk];
                    }
                    acc += self.data[self.offset(&pidx)];
                }
                let off = out.offset(&idx);
                out.data[off] = acc * weight;
            }
            if !next_index(&mut idx, &self.shape) {
                break;
            }
        }
        // replicate each representative across its orbit
        idx.iter_mut().for_each(|k| *k = 0);
        let mut sorted_idx = vec![0usize; d];
        loop {
            sorted_idx.copy_from_slice(&idx);
            sorted_idx.sort_unstable();
            let val = out.data[out.offset(&sorted_idx)];
            let off = out.offset(&idx);
            out.data[off] = val;
            if !next_index(&mut idx, &self.shape) {
                break;
            }
        }
        Ok(out)
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self {
            shape: self.shape.clone(),
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch {
                expected: self.shape.clone(),
                found: other.shape.clone(),
            });
        }
        Ok(Self {
            shape: self.shape.clone(),
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }
}

/// Unit vector on the Euclidean sphere, validated at construction.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitVector(Vec<f64>);

impl UnitVector {
    const NORM_TOL: f64 = 1e-12;

    /// Accepts coordinates whose 2-norm is within 1e-12 of one.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        let norm = coords.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > Self::NORM_TOL {
            return Err(Error::InvalidTensor(format!(
                "vector norm {norm} is not 1 within {}",
                Self::NORM_TOL
            )));
        }
        Ok(Self(coords))
    }

    /// Normalizes arbitrary coordinates; a (near-)zero vector is degenerate.
    pub fn normalized(coords: &[f64]) -> Result<Self> {
        let norm = coords.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !norm.is_finite() || norm < 1e-150 {
            return Err(Error::DegenerateInput("cannot normalize zero vector".into()));
        }
        Ok(Self(coords.iter().map(|x| x / norm).collect()))
    }

    /// Standard basis vector e_k in dimension n.
    pub fn standard(n: usize, k: usize) -> Self {
        let mut v = vec![0.0; n];
        v[k] = 1.0;
        Self(v)
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|x| -x).collect())
    }
}

impl AsRef<[f64]> for UnitVector {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

/// Scaled decomposable tensor: a scale times one unit factor per mode.
#[derive(Clone, Debug, PartialEq)]
pub struct Rank1Approx {
    pub scale: f64,
    pub factors: Vec<UnitVector>,
}

impl Rank1Approx {
    pub fn new(scale: f64, factors: Vec<UnitVector>) -> Self {
        Self { scale, factors }
    }

    /// All-equal factors, for symmetric candidates.
    pub fn symmetric(scale: f64, factor: UnitVector, order: usize) -> Self {
        Self {
            scale,
            factors: vec![factor; order],
        }
    }

    /// Materializes scale * (x_1 o ... o x_d) as a dense tensor.
    pub fn to_tensor(&self) -> Result<Tensor> {
        let slices: Vec<&[f64]> = self.factors.iter().map(|f| f.coords()).collect();
        Ok(Tensor::decomposable(&slices)?.scaled(self.scale))
    }
}

/// Partition of the mode set into disjoint nonempty blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModePartition {
    blocks: Vec<Vec<usize>>,
}

impl ModePartition {
    /// Validates that `blocks` are disjoint, nonempty, and cover 0..d.
    pub fn new(mut blocks: Vec<Vec<usize>>, order: usize) -> Result<Self> {
        let mut seen = vec![false; order];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidTensor("empty partition block".into()));
            }
            b.sort_unstable();
            for &m in b.iter() {
                if m >= order || seen[m] {
                    return Err(Error::InvalidTensor(format!(
                        "mode {m} repeated or out of range in partition"
                    )));
                }
                seen[m] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::InvalidTensor("partition does not cover all modes".into()));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(Self { blocks })
    }

    pub fn singletons(order: usize) -> Self {
        Self {
            blocks: (0..order).map(|m| vec![m]).collect(),
        }
    }

    pub fn whole(order: usize) -> Self {
        Self {
            blocks: vec![(0..order).collect()],
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn order(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }
}
