//! Reference evaluation written directly from the defining formulas, with
//! dense matrices and no shortcuts. Shares nothing with the library's
//! evaluation path except the parameter structs.

use gnbg_core::{Component, Instance};

type Mat = Vec<Vec<f64>>;

fn identity(d: usize) -> Mat {
    (0..d).map(|i| (0..d).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect()
}

fn matmul(a: &Mat, b: &Mat) -> Mat {
    let d = a.len();
    (0..d)
        .map(|i| (0..d).map(|j| (0..d).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

/// Rotation from angles: a full Givens matrix per nonzero angle, multiplied on
/// the right in row-major loop order.
pub fn rotation(theta: &[Vec<f64>]) -> Mat {
    let d = theta.len();
    let mut r = identity(d);
    for p in 0..d.saturating_sub(1) {
        for q in p + 1..d {
            let t = theta[p][q];
            if t != 0.0 {
                let mut g = identity(d);
                g[p][p] = t.cos();
                g[q][q] = t.cos();
                g[p][q] = -t.sin();
                g[q][p] = t.sin();
                r = matmul(&r, &g);
            }
        }
    }
    r
}

pub fn transform(a: f64, mu: [f64; 2], w: [f64; 4]) -> f64 {
    if a > 0.0 {
        (a.ln() + mu[0] * ((w[0] * a.ln()).sin() + (w[1] * a.ln()).sin())).exp()
    } else if a < 0.0 {
        let l = a.abs().ln();
        -(l + mu[1] * ((w[2] * l).sin() + (w[3] * l).sin())).exp()
    } else {
        0.0
    }
}

pub fn component(x: &[f64], c: &Component) -> f64 {
    let (floor, term) = component_parts(x, c);
    floor + term
}

/// The floor and the power term of one component, before they are added.
pub fn component_parts(x: &[f64], c: &Component) -> (f64, f64) {
    let d = x.len();
    let theta: Mat = (0..d).map(|i| (0..d).map(|j| c.theta[(i, j)]).collect()).collect();
    let r = rotation(&theta);
    let diff: Vec<f64> = x.iter().zip(&c.center).map(|(a, b)| a - b).collect();
    let y: Vec<f64> = (0..d).map(|i| (0..d).map(|j| r[i][j] * diff[j]).sum()).collect();
    let t: Vec<f64> = y.iter().map(|&v| transform(v, c.mu, c.omega)).collect();
    // tᵀ H t with H as a dense diagonal matrix.
    let h: Mat = (0..d)
        .map(|i| (0..d).map(|j| if i == j { c.h_diag[i] } else { 0.0 }).collect())
        .collect();
    let ht: Vec<f64> = (0..d).map(|i| (0..d).map(|j| h[i][j] * t[j]).sum()).collect();
    let quad: f64 = t.iter().zip(&ht).map(|(a, b)| a * b).sum();
    (c.floor, if quad == 0.0 { 0.0 } else { quad.powf(c.lambda) })
}

pub fn evaluate(x: &[f64], inst: &Instance) -> f64 {
    inst.components.iter().map(|c| component(x, c)).fold(f64::INFINITY, f64::min)
}

/// Reference value together with `|floor| + |term|` of the winning component,
/// the magnitude the final addition works at.
pub fn evaluate_with_scale(x: &[f64], inst: &Instance) -> (f64, f64) {
    inst.components
        .iter()
        .map(|c| {
            let (floor, term) = component_parts(x, c);
            (floor + term, floor.abs() + term.abs())
        })
        .fold((f64::INFINITY, 0.0), |best, v| if v.0 < best.0 { v } else { best })
}

/// Gap between `a` and reference `b` relative to `scale`, the size of the
/// summands that produced `b`. When floor and term nearly cancel, `b` itself
/// is far smaller than the rounding either side commits.
pub fn scaled_gap(a: f64, b: f64, scale: f64) -> f64 {
    let s = scale.max(b.abs());
    if s == 0.0 {
        a.abs()
    } else {
        (a - b).abs() / s
    }
}

/// Custom instance with every parameter drawn at random, for oracle sweeps.
pub fn random_instance(dim: usize, rng: &mut gnbg_core::GnbgRng) -> Instance {
    let count = 1 + rng.index(4);
    let components = (0..count)
        .map(|_| {
            let center = (0..dim).map(|_| rng.open_uniform(-80.0, 80.0)).collect();
            let mut c = Component::sphere(center, rng.open_uniform(-1000.0, 0.0));
            c.h_diag = (0..dim).map(|_| rng.open_uniform(0.01, 1e4)).collect();
            c.lambda = rng.open_uniform(0.05, 2.0);
            c.mu = [rng.open_uniform(0.0, 1.0), rng.open_uniform(0.0, 1.0)];
            c.omega = [(); 4].map(|_| rng.open_uniform(0.0, 60.0));
            let mut theta = gnbg_core::SquareMatrix::zeros(dim);
            for p in 0..dim {
                for q in p + 1..dim {
                    theta[(p, q)] = rng.open_uniform(-core::f64::consts::PI, core::f64::consts::PI);
                }
            }
            c.with_theta(theta).unwrap()
        })
        .collect();
    Instance::new(vec![-100.0; dim], vec![100.0; dim], components, 0, 0).unwrap()
}

/// 10⁴ (instance, point) pairs at d ∈ {1, 2, 3}, alternating suite recipes
/// (where the recipe exists at that dimension) and fully random instances.
/// Returns the worst gap between library and reference, relative to the
/// magnitude of the summands (see [`scaled_gap`]).
pub fn sweep_small_dimensions(pairs: usize, seed: u64) -> f64 {
    let mut rng = gnbg_core::GnbgRng::new(seed);
    let mut worst = 0.0f64;
    for n in 0..pairs {
        let dim = 1 + n % 3;
        let id = 1 + (n / 3 % 24) as u32;
        let inst = match (n % 2, gnbg_core::make_instance_with_dim(id, n as u64, dim)) {
            (0, Ok(inst)) => inst,
            _ => random_instance(dim, &mut rng),
        };
        let x: Vec<f64> = (0..dim).map(|_| rng.closed_uniform(-100.0, 100.0)).collect();
        let got = inst.evaluate(&x).unwrap().0;
        let (want, scale) = evaluate_with_scale(&x, &inst);
        worst = worst.max(scaled_gap(got, want, scale));
    }
    worst
}
