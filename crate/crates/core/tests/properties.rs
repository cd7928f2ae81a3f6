//! Cross-module invariants on randomized inputs.

use proptest::prelude::*;
use rank1_core::critical::{angle_objective, enumerate_critical_points, eigenpair_solutions};
use rank1_core::matrix::{best_rank1_matrix, sym_best_rank1, sym_eigen};
use rank1_core::optimizer::{certify, solve_general, solve_symmetric, SolverConfig};
use rank1_core::rng::SplitMix64;
use rank1_core::tensor::{Rank1Approx, Tensor, UnitVector};

const TAU: f64 = 2.0 * std::f64::consts::PI;

fn random_symmetric_tensor(n: usize, d: usize, rng: &mut SplitMix64) -> Tensor {
    let shape = vec![n; d];
    let len = shape.iter().product();
    Tensor::new(shape, rng.gaussian_vec(len))
        .unwrap()
        .symmetrize()
        .unwrap()
}

fn small_shape() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..4, 1..5)
}

fn unit_vectors_for(shape: &[usize], seed: u64) -> Vec<UnitVector> {
    let mut rng = SplitMix64::new(seed);
    shape
        .iter()
        .map(|&n| loop {
            if let Ok(u) = UnitVector::normalized(&rng.gaussian_vec(n)) {
                break u;
            }
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pythagoras_identity_holds(
        (shape, seed) in small_shape().prop_flat_map(|s| (Just(s), any::<u64>()))
    ) {
        let len: usize = shape.iter().product();
        let mut rng = SplitMix64::new(seed);
        let t = Tensor::new(shape.clone(), rng.gaussian_vec(len)).unwrap();
        prop_assume!(t.hs_norm() > 1e-6);
        let factors = unit_vectors_for(&shape, seed ^ 0xabcdef);
        let approx = Rank1Approx::new(1.0, factors.clone());
        let assigns: Vec<(usize, &[f64])> = factors
            .iter()
            .enumerate()
            .map(|(m, f)| (m, f.coords()))
            .collect();
        let value = t.contract(&assigns).unwrap().as_scalar().unwrap();
        let rank1 = Rank1Approx::new(value, approx.factors).to_tensor().unwrap();
        let resid2 = t.sub(&rank1).unwrap().hs_norm().powi(2);
        let norm2 = t.hs_norm().powi(2);
        let gap = (value * value + resid2 - norm2).abs() / norm2;
        prop_assert!(gap <= 1e-12, "gap {gap}");
    }

    #[test]
    fn contraction_is_multilinear(
        (shape, seed) in small_shape().prop_flat_map(|s| (Just(s), any::<u64>()))
    ) {
        let len: usize = shape.iter().product();
        let mut rng = SplitMix64::new(seed);
        let t = Tensor::new(shape.clone(), rng.gaussian_vec(len)).unwrap();
        let mode = (seed as usize) % shape.len();
        let n = shape[mode];
        let x = rng.gaussian_vec(n);
        let y = rng.gaussian_vec(n);
        let (a, b) = (rng.next_gaussian(), rng.next_gaussian());
        let combo: Vec<f64> = x.iter().zip(y.iter()).map(|(xi, yi)| a * xi + b * yi).collect();
        let lhs = t.contract(&[(mode, combo.as_slice())]).unwrap();
        let rx = t.contract(&[(mode, x.as_slice())]).unwrap().scaled(a);
        let ry = t.contract(&[(mode, y.as_slice())]).unwrap().scaled(b);
        let rhs = rx.add(&ry).unwrap();
        let scale = t.max_abs() * (x.iter().chain(y.iter()).fold(0.0f64, |m, v| m.max(v.abs())))
            * (a.abs() + b.abs()) + 1.0;
        for (l, r) in lhs.data().iter().zip(rhs.data().iter()) {
            prop_assert!((l - r).abs() <= 1e-14 * scale * shape.iter().product::<usize>() as f64);
        }
    }

    #[test]
    fn symmetric_contraction_is_mode_agnostic(seed in any::<u64>()) {
        let mut rng = SplitMix64::new(seed);
        let t = random_symmetric_tensor(3, 3, &mut rng);
        let x = rng.gaussian_vec(3);
        let base = t.contract(&[(0, x.as_slice())]).unwrap();
        for mode in 1..3 {
            let other = t.contract(&[(mode, x.as_slice())]).unwrap();
            // contracting any mode of a symmetric tensor gives the same
            // matrix up to the (symmetric) index relabeling
            for i in 0..3 {
                for j in 0..3 {
                    let diff = (base.get(&[i, j]) - other.get(&[i, j])).abs();
                    prop_assert!(diff <= 1e-12 * t.max_abs().max(1.0));
                }
            }
        }
    }

    #[test]
    fn decomposition_blocks_survive_within_block_relabeling(seed in any::<u64>()) {
        // build a tensor symmetric exactly in modes {0,1}: t_{ijk} = g(i,j) h(k)
        let mut rng = SplitMix64::new(seed);
        let mut g = [0.0; 4];
        for i in 0..2 {
            for j in i..2 {
                let v = rng.next_gaussian();
                g[i * 2 + j] = v;
                g[j * 2 + i] = v;
            }
        }
        let h = [rng.next_gaussian(), 2.0 + rng.next_f64()];
        let mut t = Tensor::zeros(&[2, 2, 2]);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    t.set(&[i, j, k], g[i * 2 + j] * h[k]);
                }
            }
        }
        let blocks = t.symmetric_decomposition();
        // swapping the two symmetric modes changes nothing
        let mut swapped = Tensor::zeros(&[2, 2, 2]);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    swapped.set(&[j, i, k], t.get(&[i, j, k]));
                }
            }
        }
        let swapped_blocks = swapped.symmetric_decomposition();
        prop_assert_eq!(blocks.blocks(), swapped_blocks.blocks());
    }
}

#[test]
fn sigma_dominates_random_bilinear_forms() {
    let mut rng = SplitMix64::new(101);
    let t = Tensor::new(vec![4, 5], rng.gaussian_vec(20)).unwrap();
    let sigma = best_rank1_matrix(&t).unwrap().sigma;
    for _ in 0..1000 {
        let x = UnitVector::normalized(&rng.gaussian_vec(4)).unwrap();
        let y = UnitVector::normalized(&rng.gaussian_vec(5)).unwrap();
        let mut form = 0.0;
        for i in 0..4 {
            for j in 0..5 {
                form += x.coords()[i] * t.get(&[i, j]) * y.coords()[j];
            }
        }
        assert!(form.abs() <= sigma + 1e-12);
    }
}

#[test]
fn symmetric_rank1_beats_random_candidates() {
    let mut rng = SplitMix64::new(102);
    for _ in 0..20 {
        let n = 3;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = rng.next_gaussian();
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        let a = Tensor::new(vec![n, n], data).unwrap();
        let (best, _) = sym_best_rank1(&a).unwrap();
        let best_err = a.sub(&best.to_tensor().unwrap()).unwrap().hs_norm();
        for _ in 0..50 {
            let s = 3.0 * rng.next_gaussian();
            let x = UnitVector::normalized(&rng.gaussian_vec(n)).unwrap();
            let y = UnitVector::normalized(&rng.gaussian_vec(n)).unwrap();
            let cand = Rank1Approx::new(s, vec![x, y]).to_tensor().unwrap();
            let err = a.sub(&cand).unwrap().hs_norm();
            assert!(best_err <= err + 1e-10);
        }
    }
}

#[test]
fn orthogonal_equivariance_of_symmetric_solve() {
    let mut rng = SplitMix64::new(103);
    for trial in 0..5 {
        let t = random_symmetric_tensor(2, 3, &mut rng);
        let phi = rng.next_f64() * TAU;
        let q = [phi.cos(), -phi.sin(), phi.sin(), phi.cos()];
        // rotate every mode: entries of the transformed tensor
        let mut rotated = Tensor::zeros(&[2, 2, 2]);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let mut acc = 0.0;
                    for a in 0..2 {
                        for b in 0..2 {
                            for c in 0..2 {
                                acc += q[i * 2 + a] * q[j * 2 + b] * q[k * 2 + c]
                                    * t.get(&[a, b, c]);
                            }
                        }
                    }
                    rotated.set(&[i, j, k], acc);
                }
            }
        }
        let cfg = SolverConfig {
            seed: trial,
            ..Default::default()
        };
        let v1 = solve_symmetric(&t, &cfg).unwrap().value.abs();
        let v2 = solve_symmetric(&rotated, &cfg).unwrap().value.abs();
        assert!((v1 - v2).abs() <= 1e-8 * v1.max(1.0), "{v1} vs {v2}");
    }
}

#[test]
fn certificates_hold_at_converged_solutions() {
    let mut rng = SplitMix64::new(104);
    for trial in 0..10 {
        let t = random_symmetric_tensor(2, 3, &mut rng);
        let cfg = SolverConfig {
            seed: trial,
            ..Default::default()
        };
        let res = solve_general(&t, &cfg).unwrap();
        assert!(res.converged);
        let cert = certify(&t, &res.approx, cfg.tol).unwrap();
        assert!(cert.is_stationary);
        assert!(cert.pythagoras_gap <= 1e-10, "pyth {}", cert.pythagoras_gap);
        assert!(cert.cert_gap <= 1e-8, "cert {}", cert.cert_gap);
    }
}

#[test]
fn eigenvalue_magnitude_identity_on_thousand_matrices() {
    let mut rng = SplitMix64::new(105);
    for n in 2..=6 {
        for _ in 0..40 {
            let mut data = vec![0.0; n * n];
            for i in 0..n {
                for j in i..n {
                    let v = rng.next_gaussian();
                    data[i * n + j] = v;
                    data[j * n + i] = v;
                }
            }
            let a = Tensor::new(vec![n, n], data).unwrap();
            let spec = sym_eigen(&a).unwrap();
            let expect = spec.eigenvalues[0].abs().max(spec.eigenvalues[n - 1].abs());
            let sigma = best_rank1_matrix(&a).unwrap().sigma;
            assert!((sigma - expect).abs() <= 1e-10 * expect.max(1.0));
        }
    }
}

/// Sign changes of f' located by bisection on a 1e5-point grid match the
/// enumerated critical angles within 1e-6, in both directions.
#[test]
fn enumeration_complete_against_grid_oracle() {
    let mut rng = SplitMix64::new(106);
    let grid = 100_000usize;
    for d in [3usize, 4, 5] {
        for _ in 0..100 {
            let t = random_symmetric_tensor(2, d, &mut rng);
            let f = angle_objective(&t).unwrap();
            let points = enumerate_critical_points(&t).unwrap();

            let mut refined: Vec<f64> = Vec::new();
            let mut prev_phi = 0.0;
            let mut prev = f.deriv_eval(0.0);
            for k in 1..=grid {
                let phi = TAU * k as f64 / grid as f64;
                let cur = f.deriv_eval(phi);
                if (prev <= 0.0 && cur > 0.0) || (prev >= 0.0 && cur < 0.0) {
                    // bisect the bracket down to 1e-10
                    let (mut lo, mut hi) = (prev_phi, phi);
                    let (mut flo, _fhi) = (prev, cur);
                    for _ in 0..60 {
                        let mid = 0.5 * (lo + hi);
                        let fmid = f.deriv_eval(mid);
                        if (flo <= 0.0) == (fmid <= 0.0) {
                            lo = mid;
                            flo = fmid;
                        } else {
                            hi = mid;
                        }
                    }
                    refined.push(0.5 * (lo + hi) % TAU);
                }
                prev = cur;
                prev_phi = phi;
            }

            let close = |a: f64, b: f64| {
                let diff = (a - b).abs() % TAU;
                diff.min(TAU - diff) <= 1e-6
            };
            for r in &refined {
                assert!(
                    points.iter().any(|p| close(p.angle, *r)),
                    "d={d}: grid crossing {r} missing from enumeration"
                );
            }
            for p in &points {
                assert!(
                    refined.iter().any(|r| close(p.angle, *r)),
                    "d={d}: enumerated angle {} not seen on grid",
                    p.angle
                );
            }
        }
    }
}

#[test]
fn enumeration_and_solvers_agree_on_the_optimum() {
    let mut rng = SplitMix64::new(107);
    for d in [3usize, 4] {
        for trial in 0..10 {
            let t = random_symmetric_tensor(2, d, &mut rng);
            let points = enumerate_critical_points(&t).unwrap();
            let exhaustive = points.iter().fold(0.0f64, |m, p| m.max(p.value.abs()));
            let cfg = SolverConfig {
                seed: trial as u64,
                ..Default::default()
            };
            let sym = solve_symmetric(&t, &cfg).unwrap().value.abs();
            let gen = solve_general(&t, &cfg).unwrap().value.abs();
            assert!((sym - exhaustive).abs() <= 1e-8, "sym {sym} vs {exhaustive}");
            assert!((gen - exhaustive).abs() <= 1e-6, "gen {gen} vs {exhaustive}");
        }
    }
}

#[test]
fn eigenpair_orbits_close_under_roots_of_unity() {
    let mut rng = SplitMix64::new(108);
    for d in [4usize, 5] {
        let t = random_symmetric_tensor(2, d, &mut rng);
        let (plus, _) = eigenpair_solutions(&t).unwrap();
        let m = d - 2;
        for k in 1..m {
            let zeta = num_complex::Complex64::from_polar(1.0, TAU * k as f64 / m as f64);
            for s in &plus {
                let rot: Vec<num_complex::Complex64> =
                    s.coords.iter().map(|c| c * zeta).collect();
                assert!(
                    plus.iter().any(|o| (o.coords[0] - rot[0]).norm()
                        + (o.coords[1] - rot[1]).norm()
                        < 1e-6 * (1.0 + s.norm())),
                    "d={d}: orbit not closed under unity root {k}"
                );
            }
        }
    }
}
