//! The 24 published instance recipes.
//!
//! Every recipe is a list of [`ComponentPlan`]s expanded with a [`GnbgRng`]
//! seeded from the caller's seed. Draw order is fixed:
//!
//! 1. the index of the best component, for recipes with one distinguished floor;
//! 2. then, per component in index order: center coordinates, floor, the `H`
//!    diagonal, the angle matrix (row-major), `μ₁, μ₂`, and `ω₁..ω₄`.
//!
//! Fixed parameters consume no draws.

use alloc::{boxed::Box, format, vec, vec::Vec};
use core::f64::consts::{FRAC_PI_4, FRAC_PI_8};

use crate::component::{Component, Instance};
use crate::error::{Error, Result};
use crate::hdiag::{sample_h_diag, HStyle};
use crate::rng::GnbgRng;
use crate::rotation::build_rotation;
use crate::theta::{sample_theta, ThetaSpec, FULL_TURN};

/// Dimension of every published instance.
pub const SUITE_DIM: usize = 30;
/// Number of published instances.
pub const SUITE_SIZE: u32 = 24;
/// Box of every published instance, per coordinate.
pub const SUITE_BOUNDS: (f64, f64) = (-100.0, 100.0);

/// Placement rule for a component center.
#[derive(Debug, Clone, PartialEq)]
pub enum CenterRule {
    /// Each coordinate independently from the open interval.
    Uniform(f64, f64),
    Origin,
    /// Each coordinate has magnitude in `(inner, outer)` with a random sign,
    /// so the center lies outside `[−inner, inner]^d` and inside `[−outer, outer]^d`.
    Shell { inner: f64, outer: f64 },
    /// Reuses the center of component 0.
    SameAsFirst,
}

/// A scalar parameter that is either fixed or drawn from an open interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Param {
    Fixed(f64),
    Uniform(f64, f64),
}

impl Param {
    fn draw(self, rng: &mut GnbgRng) -> f64 {
        match self {
            Self::Fixed(v) => v,
            Self::Uniform(a, b) => rng.open_uniform(a, b),
        }
    }

    /// True when the parameter can only take the value zero.
    pub fn is_zero(self) -> bool {
        self == Self::Fixed(0.0)
    }
}

/// Sampling rules for one component.
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentPlan {
    pub center: CenterRule,
    pub floor: Param,
    pub h: HStyle,
    pub theta: ThetaSpec,
    pub lambda: f64,
    pub mu: [Param; 2],
    pub omega: [Param; 4],
}

impl ComponentPlan {
    fn expand(&self, dim: usize, first_center: Option<&[f64]>, rng: &mut GnbgRng) -> Result<Component> {
        let center = match self.center {
            CenterRule::Uniform(a, b) => (0..dim).map(|_| rng.open_uniform(a, b)).collect(),
            CenterRule::Origin => vec![0.0; dim],
            CenterRule::Shell { inner, outer } => (0..dim)
                .map(|_| {
                    let magnitude = rng.open_uniform(inner, outer);
                    if rng.index(2) == 0 {
                        -magnitude
                    } else {
                        magnitude
                    }
                })
                .collect(),
            CenterRule::SameAsFirst => first_center
                .ok_or_else(|| Error::Argument("component 0 cannot share its own center".into()))?
                .to_vec(),
        };
        let floor = self.floor.draw(rng);
        let h_diag = sample_h_diag(&self.h, dim, rng)?;
        let theta = sample_theta(&self.theta, dim, rng)?;
        let rotation = build_rotation(&theta)?;
        let mu = [self.mu[0].draw(rng), self.mu[1].draw(rng)];
        let omega = [
            self.omega[0].draw(rng),
            self.omega[1].draw(rng),
            self.omega[2].draw(rng),
            self.omega[3].draw(rng),
        ];
        Ok(Component { center, floor, h_diag, rotation, theta, lambda: self.lambda, mu, omega })
    }
}

/// One distinguished component gets `value`; the rest draw their floor from
/// `others`. The distinguished index is drawn uniformly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BestFloor {
    pub value: f64,
    pub others: (f64, f64),
}

/// Complete sampling recipe for a published instance.
#[derive(Debug, Clone, PartialEq)]
pub struct InstanceRecipe {
    pub id: u32,
    pub dim: usize,
    pub bounds: (f64, f64),
    pub components: Vec<ComponentPlan>,
    pub best_floor: Option<BestFloor>,
}

impl InstanceRecipe {
    /// Deterministically expands the recipe.
    pub fn expand(&self, seed: u64) -> Result<Instance> {
        let mut rng = GnbgRng::new(seed);
        let mut plans = self.components.clone();
        if let Some(best) = self.best_floor {
            let winner = rng.index(plans.len());
            for (k, plan) in plans.iter_mut().enumerate() {
                plan.floor = if k == winner {
                    Param::Fixed(best.value)
                } else {
                    Param::Uniform(best.others.0, best.others.1)
                };
            }
        }
        let mut components: Vec<Component> = Vec::with_capacity(plans.len());
        for plan in &plans {
            let first = components.first().map(|c| c.center.as_slice());
            let c = plan.expand(self.dim, first, &mut rng)?;
            components.push(c);
        }
        Instance::new(
            vec![self.bounds.0; self.dim],
            vec![self.bounds.1; self.dim],
            components,
            self.id,
            seed,
        )
    }
}

const ZERO2: [Param; 2] = [Param::Fixed(0.0); 2];
const ZERO4: [Param; 4] = [Param::Fixed(0.0); 4];
const SINGLE_FLOOR: Param = Param::Uniform(-1200.0, 0.0);
const SINGLE_CENTER: CenterRule = CenterRule::Uniform(-80.0, 80.0);

fn fixed2(a: f64, b: f64) -> [Param; 2] {
    [Param::Fixed(a), Param::Fixed(b)]
}

fn fixed4(w: [f64; 4]) -> [Param; 4] {
    w.map(Param::Fixed)
}

fn full_random() -> ThetaSpec {
    ThetaSpec::FullRandom { range: FULL_TURN }
}

fn gated(gate_prob: f64) -> ThetaSpec {
    ThetaSpec::GatedRandom { gate_prob, range: FULL_TURN }
}

fn single(h: HStyle, theta: ThetaSpec, lambda: f64, mu: [Param; 2], omega: [Param; 4]) -> Vec<ComponentPlan> {
    vec![ComponentPlan { center: SINGLE_CENTER, floor: SINGLE_FLOOR, h, theta, lambda, mu, omega }]
}

fn asym_f10() -> ([Param; 2], [Param; 4]) {
    (fixed2(0.2, 0.5), fixed4([20.0, 50.0, 10.0, 25.0]))
}

/// The sampling recipe for suite id `id` at dimension `dim`.
///
/// Published instances use `dim = 30`; other dimensions keep every rule and
/// exist for visualization and custom studies.
pub fn recipe(id: u32, dim: usize) -> Result<InstanceRecipe> {
    if !(1..=SUITE_SIZE).contains(&id) {
        return Err(Error::Argument(format!("id out of range: {id} (expected 1..=24)")));
    }
    if dim == 0 {
        return Err(Error::Argument("dimension must be positive".into()));
    }
    let linspace = || HStyle::LinspacePermute(0.1, 1e6);
    let mut best_floor = None;
    let components = match id {
        1 => single(HStyle::Unit, ThetaSpec::Identity, 1.0, ZERO2, ZERO4),
        2 => single(HStyle::Unit, ThetaSpec::Identity, 0.05, ZERO2, ZERO4),
        3 => single(linspace(), ThetaSpec::Identity, 1.0, ZERO2, ZERO4),
        4 => single(HStyle::Uniform(1.0, 10.0), full_random(), 1.0, ZERO2, ZERO4),
        5 => single(linspace(), ThetaSpec::Chain { range: FULL_TURN }, 0.05, ZERO2, ZERO4),
        6 => single(linspace(), full_random(), 0.05, ZERO2, ZERO4),
        7 => single(HStyle::Unit, ThetaSpec::Identity, 1.0, fixed2(0.2, 0.2), fixed4([20.0; 4])),
        8 => single(HStyle::Unit, ThetaSpec::Identity, 1.0, fixed2(0.2, 0.2), fixed4([50.0; 4])),
        9 => single(HStyle::Unit, ThetaSpec::Identity, 1.0, fixed2(1.0, 1.0), fixed4([20.0; 4])),
        10 => {
            let (mu, omega) = asym_f10();
            single(HStyle::Unit, ThetaSpec::Identity, 1.0, mu, omega)
        }
        11 => {
            let (mu, omega) = asym_f10();
            single(HStyle::Unit, full_random(), 1.0, mu, omega)
        }
        12 => {
            let (mu, omega) = asym_f10();
            let angles = vec![FRAC_PI_4, 3.0 * FRAC_PI_4, FRAC_PI_8];
            single(HStyle::Unit, ThetaSpec::Grouped { angles }, 1.0, mu, omega)
        }
        13 => single(HStyle::Unit, full_random(), 1.0, fixed2(1.0, 1.0), fixed4([50.0; 4])),
        14 => single(
            HStyle::PinnedPair {
                first: 0.01,
                second: 1e3,
                fill: Box::new(HStyle::Uniform(1.0, 1e3)),
            },
            full_random(),
            0.6,
            fixed2(0.7, 0.2),
            fixed4([25.0, 10.0, 20.0, 50.0]),
        ),
        15 => single(
            HStyle::PinnedPair {
                first: 1.0,
                second: 1e5,
                fill: Box::new(HStyle::BetaHeavyTail { alpha: 0.2, beta: 0.2, a: 1.0, b: 1e5 }),
            },
            full_random(),
            0.1,
            fixed2(1.0, 1.0),
            fixed4([10.0; 4]),
        ),
        16..=20 | 24 => {
            let base = ComponentPlan {
                center: SINGLE_CENTER,
                floor: Param::Fixed(0.0),
                h: HStyle::Unit,
                theta: ThetaSpec::Identity,
                lambda: 1.0,
                mu: ZERO2,
                omega: ZERO4,
            };
            let uniform_mu = [Param::Uniform(0.2, 0.5); 2];
            let plan = match id {
                16 => base,
                17 => ComponentPlan { h: HStyle::Uniform(0.01, 100.0), theta: gated(0.5), ..base },
                18 => ComponentPlan {
                    theta: gated(0.5),
                    mu: uniform_mu,
                    omega: [Param::Uniform(5.0, 50.0); 4],
                    ..base
                },
                19 => ComponentPlan {
                    theta: gated(0.5),
                    mu: fixed2(0.5, 0.5),
                    omega: [Param::Uniform(50.0, 100.0); 4],
                    ..base
                },
                20 => ComponentPlan {
                    center: CenterRule::Uniform(-75.0, -25.0),
                    theta: gated(0.5),
                    lambda: 0.25,
                    mu: uniform_mu,
                    omega: [Param::Uniform(5.0, 50.0); 4],
                    ..base
                },
                _ => ComponentPlan {
                    h: HStyle::Uniform(1.0, 1e5),
                    theta: gated(0.75),
                    lambda: 0.25,
                    mu: uniform_mu,
                    omega: [Param::Uniform(5.0, 50.0); 4],
                    ..base
                },
            };
            best_floor = Some(if matches!(id, 20 | 24) {
                BestFloor { value: -100.0, others: (-99.0, -98.0) }
            } else {
                BestFloor { value: -5000.0, others: (-4500.0, -4000.0) }
            });
            vec![plan; 5]
        }
        21 => [-50.0, -45.0, -40.0, -40.0, -40.0]
            .into_iter()
            .enumerate()
            .map(|(k, floor)| {
                let central = k == 1;
                ComponentPlan {
                    center: if central {
                        CenterRule::Origin
                    } else {
                        CenterRule::Shell { inner: 30.0, outer: 90.0 }
                    },
                    floor: Param::Fixed(floor),
                    h: if central { HStyle::Unit } else { HStyle::Constant(5.0) },
                    theta: gated(0.5),
                    lambda: 0.5,
                    mu: [Param::Uniform(0.1, 0.2); 2],
                    omega: [Param::Uniform(5.0, 10.0); 4],
                }
            })
            .collect(),
        22 => [(CenterRule::Uniform(80.0, 90.0), -1000.0, 1.0), (CenterRule::Uniform(-90.0, -80.0), -950.0, 0.9)]
            .into_iter()
            .map(|(center, floor, lambda)| ComponentPlan {
                center,
                floor: Param::Fixed(floor),
                h: HStyle::Uniform(1.0, 10.0),
                theta: gated(0.7),
                lambda,
                mu: fixed2(0.5, 0.5),
                omega: [Param::Uniform(20.0, 50.0); 4],
            })
            .collect(),
        23 => (0..5)
            .map(|k| ComponentPlan {
                center: if k == 0 { SINGLE_CENTER } else { CenterRule::SameAsFirst },
                floor: Param::Fixed(-100.0),
                h: HStyle::Unit,
                theta: gated(0.75),
                lambda: 0.4,
                mu: fixed2(0.5, 0.5),
                omega: [Param::Uniform(20.0, 50.0); 4],
            })
            .collect(),
        _ => unreachable!("id range checked above"),
    };
    Ok(InstanceRecipe { id, dim, bounds: SUITE_BOUNDS, components, best_floor })
}

/// Builds published instance `id` (1..=24) at dimension 30.
pub fn make_instance(id: u32, seed: u64) -> Result<Instance> {
    make_instance_with_dim(id, seed, SUITE_DIM)
}

/// Builds the recipe for `id` at an arbitrary dimension.
pub fn make_instance_with_dim(id: u32, seed: u64, dim: usize) -> Result<Instance> {
    recipe(id, dim)?.expand(seed)
}

/// Two-dimensional rendition used for landscape pictures.
///
/// Single-component instances are recentered at the origin with floor 0.
/// Multi-component instances keep their sampled floors and centers, since
/// moving them would merge the competing basins.
pub fn figure_mode_instance(id: u32, seed: u64) -> Result<Instance> {
    let mut inst = make_instance_with_dim(id, seed, 2)?;
    if let [c] = inst.components.as_mut_slice() {
        c.floor = 0.0;
        c.center = vec![0.0; 2];
    }
    Ok(inst)
}
