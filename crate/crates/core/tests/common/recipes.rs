//! Per-id checklist for the published instance recipes.

// Checks negate comparisons on purpose so that a NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::f64::consts::{FRAC_PI_4, FRAC_PI_8, PI};

use gnbg_core::{condition_number, Component, Instance};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(format!($($fmt)*));
        }
    };
}

fn all_in(v: &[f64], lo: f64, hi: f64) -> bool {
    v.iter().all(|&x| x > lo && x < hi)
}

fn unit_h(c: &Component) -> bool {
    c.h_diag.iter().all(|&h| h == 1.0)
}

fn no_rotation(c: &Component) -> bool {
    c.rotation.is_identity() && c.theta.as_slice().iter().all(|&t| t == 0.0)
}

fn above_diagonal(c: &Component) -> Vec<(usize, usize, f64)> {
    let d = c.dim();
    (0..d).flat_map(|p| (p + 1..d).map(move |q| (p, q))).map(|(p, q)| (p, q, c.theta[(p, q)])).collect()
}

fn full_theta(c: &Component) -> Check {
    for (p, q, a) in above_diagonal(c) {
        ensure!(a != 0.0 && a > -PI && a < PI, "theta({p},{q}) = {a} is not a nonzero angle in (-pi, pi)");
    }
    Ok(())
}

fn chain_theta(c: &Component) -> Check {
    for (p, q, a) in above_diagonal(c) {
        if q == p + 1 {
            ensure!(a != 0.0 && a > -PI && a < PI, "chain angle ({p},{q}) = {a}");
        } else {
            ensure!(a == 0.0, "off-chain angle ({p},{q}) = {a}");
        }
    }
    Ok(())
}

fn gated_theta(c: &Component) -> Check {
    for (p, q, a) in above_diagonal(c) {
        ensure!(a == 0.0 || (a > -PI && a < PI), "gated angle ({p},{q}) = {a}");
    }
    Ok(())
}

/// Three disjoint groups of ten, fully connected inside, one distinct angle
/// from {π/4, 3π/4, π/8} per group.
fn grouped_theta(c: &Component) -> Check {
    let d = c.dim();
    let mut group = vec![usize::MAX; d];
    let mut angles: Vec<f64> = Vec::new();
    for i in 0..d {
        if group[i] != usize::MAX {
            continue;
        }
        let members: Vec<usize> =
            (0..d).filter(|&j| j == i || c.theta[(i.min(j), i.max(j))] != 0.0).collect();
        let angle = c.theta[(members[0], members[1])];
        for &a in &members {
            ensure!(group[a] == usize::MAX, "index {a} in two groups");
            group[a] = angles.len();
        }
        angles.push(angle);
        ensure!(members.len() == 10, "group of index {i} has {} members", members.len());
    }
    ensure!(angles.len() == 3, "{} groups", angles.len());
    let mut sorted = angles.clone();
    sorted.sort_by(f64::total_cmp);
    ensure!(sorted == [FRAC_PI_8, FRAC_PI_4, 3.0 * FRAC_PI_4], "group angles {angles:?}");
    for (p, q, a) in above_diagonal(c) {
        let expected = if group[p] == group[q] { angles[group[p]] } else { 0.0 };
        ensure!(a == expected, "theta({p},{q}) = {a}, expected {expected}");
    }
    Ok(())
}

fn linspace_h(c: &Component) -> Check {
    let mut h = c.h_diag.clone();
    h.sort_by(f64::total_cmp);
    for (i, v) in h.iter().enumerate() {
        let e = 0.1 + (1e6 - 0.1) * i as f64 / 29.0;
        ensure!((v - e).abs() <= 1e-9 * e, "h[{i}] = {v}, expected {e}");
    }
    ensure!(condition_number(c) == 1e7, "condition number {}", condition_number(c));
    Ok(())
}

fn pinned_h(c: &Component, lo: f64, hi: f64, fill: (f64, f64)) -> Check {
    let n_lo = c.h_diag.iter().filter(|&&h| h == lo).count();
    let n_hi = c.h_diag.iter().filter(|&&h| h == hi).count();
    ensure!(n_lo == 1 && n_hi == 1, "pinned values occur {n_lo} and {n_hi} times");
    let rest: Vec<f64> = c.h_diag.iter().copied().filter(|&h| h != lo && h != hi).collect();
    ensure!(all_in(&rest, fill.0, fill.1), "fill outside {fill:?}");
    ensure!(condition_number(c) == hi / lo, "condition number {}", condition_number(c));
    Ok(())
}

fn fixed_mu_omega(c: &Component, mu: [f64; 2], omega: [f64; 4]) -> Check {
    ensure!(c.mu == mu && c.omega == omega, "mu {:?} omega {:?}", c.mu, c.omega);
    Ok(())
}

fn one_of_five_floors(inst: &Instance, best: f64, others: (f64, f64)) -> Check {
    ensure!(inst.components.len() == 5, "{} components", inst.components.len());
    let floors: Vec<f64> = inst.components.iter().map(|c| c.floor).collect();
    ensure!(floors.iter().filter(|&&s| s == best).count() == 1, "floors {floors:?}");
    let rest: Vec<f64> = floors.iter().copied().filter(|&s| s != best).collect();
    ensure!(all_in(&rest, others.0, others.1), "floors {floors:?}");
    ensure!(inst.sigma_min() == best, "sigma_min {}", inst.sigma_min());
    Ok(())
}

/// Every checklist item for `inst`, which must have been built from suite id
/// `inst.instance_id`.
pub fn check(inst: &Instance) -> Check {
    let id = inst.instance_id;
    ensure!(inst.dim == 30, "dimension {}", inst.dim);
    ensure!(inst.lower.iter().all(|&l| l == -100.0) && inst.upper.iter().all(|&u| u == 100.0), "bounds");
    for (k, c) in inst.components.iter().enumerate() {
        ensure!(c.rotation.orthogonality_error() <= 1e-10, "component {k} rotation not orthogonal");
        ensure!(
            c.rotation == gnbg_core::build_rotation(&c.theta).unwrap(),
            "component {k} rotation does not match theta"
        );
    }
    let cs = &inst.components;
    if id <= 15 {
        ensure!(cs.len() == 1, "{} components", cs.len());
        let c = &cs[0];
        ensure!(all_in(&c.center, -80.0, 80.0), "center outside (-80, 80)");
        ensure!(c.floor > -1200.0 && c.floor < 0.0, "floor {}", c.floor);
        let lambda = match id {
            2 | 5 | 6 => 0.05,
            14 => 0.6,
            15 => 0.1,
            _ => 1.0,
        };
        ensure!(c.lambda == lambda, "lambda {}", c.lambda);
        let zero = ([0.0; 2], [0.0; 4]);
        let f10 = ([0.2, 0.5], [20.0, 50.0, 10.0, 25.0]);
        let (mu, omega) = match id {
            1..=6 => zero,
            7 => ([0.2, 0.2], [20.0; 4]),
            8 => ([0.2, 0.2], [50.0; 4]),
            9 => ([1.0, 1.0], [20.0; 4]),
            10..=12 => f10,
            13 => ([1.0, 1.0], [50.0; 4]),
            14 => ([0.7, 0.2], [25.0, 10.0, 20.0, 50.0]),
            _ => ([1.0, 1.0], [10.0; 4]),
        };
        fixed_mu_omega(c, mu, omega)?;
        match id {
            1 | 2 | 7..=10 => {
                ensure!(unit_h(c) && no_rotation(c), "expected H = R = I");
            }
            3 => {
                linspace_h(c)?;
                ensure!(no_rotation(c), "expected R = I");
            }
            4 => {
                ensure!(c.h_diag.iter().all(|&h| (1.0..=10.0).contains(&h)), "h outside [1, 10]");
                full_theta(c)?;
            }
            5 => {
                linspace_h(c)?;
                chain_theta(c)?;
            }
            6 => {
                linspace_h(c)?;
                full_theta(c)?;
            }
            11 => {
                ensure!(unit_h(c), "expected H = I");
                full_theta(c)?;
            }
            12 => {
                ensure!(unit_h(c), "expected H = I");
                grouped_theta(c)?;
            }
            13 => {
                ensure!(unit_h(c), "expected H = I");
                full_theta(c)?;
            }
            14 => {
                pinned_h(c, 0.01, 1e3, (1.0, 1e3))?;
                full_theta(c)?;
            }
            _ => {
                pinned_h(c, 1.0, 1e5, (1.0, 1e5))?;
                full_theta(c)?;
            }
        }
        return Ok(());
    }
    match id {
        16..=20 | 24 => {
            if matches!(id, 20 | 24) {
                one_of_five_floors(inst, -100.0, (-99.0, -98.0))?;
            } else {
                one_of_five_floors(inst, -5000.0, (-4500.0, -4000.0))?;
            }
            for c in cs {
                let (lo, hi) = if id == 20 { (-75.0, -25.0) } else { (-80.0, 80.0) };
                ensure!(all_in(&c.center, lo, hi), "center outside ({lo}, {hi})");
                let lambda = if matches!(id, 20 | 24) { 0.25 } else { 1.0 };
                ensure!(c.lambda == lambda, "lambda {}", c.lambda);
                match id {
                    16 => {
                        ensure!(unit_h(c) && no_rotation(c), "expected H = R = I");
                        fixed_mu_omega(c, [0.0; 2], [0.0; 4])?;
                    }
                    17 => {
                        ensure!(all_in(&c.h_diag, 0.01, 100.0), "h outside (0.01, 100)");
                        fixed_mu_omega(c, [0.0; 2], [0.0; 4])?;
                        gated_theta(c)?;
                    }
                    18 | 20 | 24 => {
                        if id == 24 {
                            ensure!(all_in(&c.h_diag, 1.0, 1e5), "h outside (1, 1e5)");
                        } else {
                            ensure!(unit_h(c), "expected H = I");
                        }
                        ensure!(all_in(&c.mu, 0.2, 0.5), "mu {:?}", c.mu);
                        ensure!(all_in(&c.omega, 5.0, 50.0), "omega {:?}", c.omega);
                        gated_theta(c)?;
                    }
                    _ => {
                        ensure!(unit_h(c), "expected H = I");
                        ensure!(c.mu == [0.5, 0.5], "mu {:?}", c.mu);
                        ensure!(all_in(&c.omega, 50.0, 100.0), "omega {:?}", c.omega);
                        gated_theta(c)?;
                    }
                }
            }
        }
        21 => {
            let floors: Vec<f64> = cs.iter().map(|c| c.floor).collect();
            ensure!(floors == [-50.0, -45.0, -40.0, -40.0, -40.0], "floors {floors:?}");
            for (k, c) in cs.iter().enumerate() {
                ensure!(c.lambda == 0.5, "lambda {}", c.lambda);
                ensure!(all_in(&c.mu, 0.1, 0.2), "mu {:?}", c.mu);
                ensure!(all_in(&c.omega, 5.0, 10.0), "omega {:?}", c.omega);
                gated_theta(c)?;
                if k == 1 {
                    ensure!(c.center.iter().all(|&v| v == 0.0), "component 2 not at origin");
                    ensure!(unit_h(c), "component 2 H != I");
                } else {
                    ensure!(c.h_diag.iter().all(|&h| h == 5.0), "component {k} H != 5 I");
                    ensure!(c.center.iter().all(|v| v.abs() <= 90.0), "center outside [-90, 90]");
                    ensure!(c.center.iter().any(|v| v.abs() > 30.0), "center inside [-30, 30]");
                }
            }
        }
        22 => {
            ensure!(cs.len() == 2, "{} components", cs.len());
            ensure!(cs[0].floor == -1000.0 && cs[1].floor == -950.0, "floors");
            ensure!(cs[0].lambda == 1.0 && cs[1].lambda == 0.9, "lambdas");
            ensure!(all_in(&cs[0].center, 80.0, 90.0), "first center outside (80, 90)");
            ensure!(all_in(&cs[1].center, -90.0, -80.0), "second center outside (-90, -80)");
            for c in cs {
                ensure!(all_in(&c.h_diag, 1.0, 10.0), "h outside (1, 10)");
                ensure!(c.mu == [0.5, 0.5], "mu {:?}", c.mu);
                ensure!(all_in(&c.omega, 20.0, 50.0), "omega {:?}", c.omega);
                gated_theta(c)?;
            }
        }
        23 => {
            ensure!(cs.len() == 5, "{} components", cs.len());
            ensure!(all_in(&cs[0].center, -80.0, 80.0), "center outside (-80, 80)");
            for c in cs {
                ensure!(c.center == cs[0].center, "centers differ");
                ensure!(c.floor == -100.0 && c.lambda == 0.4 && unit_h(c), "floor/lambda/H");
                ensure!(c.mu == [0.5, 0.5], "mu {:?}", c.mu);
                ensure!(all_in(&c.omega, 20.0, 50.0), "omega {:?}", c.omega);
                gated_theta(c)?;
            }
        }
        _ => return Err(format!("unknown id {id}")),
    }
    Ok(())
}

/// Interaction probability used by the gated recipes.
pub fn gate_prob(id: u32) -> Option<f64> {
    match id {
        17..=21 => Some(0.5),
        22 => Some(0.7),
        23 | 24 => Some(0.75),
        _ => None,
    }
}

/// Fraction of nonzero above-diagonal angles across all components.
pub fn interaction_fraction(inst: &Instance) -> (usize, usize) {
    inst.components.iter().fold((0, 0), |(nz, total), c| {
        let pairs = above_diagonal(c);
        (nz + pairs.iter().filter(|p| p.2 != 0.0).count(), total + pairs.len())
    })
}
