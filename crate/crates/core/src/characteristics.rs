//! Landscape characteristics of the suite, as published and as derived from
//! the recipes.

use alloc::vec::Vec;

use crate::component::Instance;
use crate::error::Result;
use crate::hdiag::HStyle;
use crate::suite::{recipe, CenterRule, InstanceRecipe, Param, SUITE_DIM};
use crate::theta::ThetaSpec;

/// Condition-number ratio above which a component counts as ill-conditioned.
pub const ILL_CONDITIONED_ABOVE: f64 = 1e2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Separability {
    Full,
    Partial,
    Non,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Linearity {
    SubLinear,
    Linear,
    SuperLinear,
}

impl Linearity {
    pub fn of_lambda(lambda: f64) -> Self {
        if lambda < 0.5 {
            Self::SubLinear
        } else if lambda == 0.5 {
            Self::Linear
        } else {
            Self::SuperLinear
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Characteristics {
    pub basin_local_optima: bool,
    pub separability: Separability,
    pub varying_interactions: bool,
    pub symmetric: bool,
    pub ill_conditioned: bool,
    pub linearity: Linearity,
    pub deceptive: bool,
}

/// The characteristic matrix of the published suite, for `id` in `1..=24`.
pub fn published(id: u32) -> Option<Characteristics> {
    use Linearity::{Linear as Li, SubLinear as Sl, SuperLinear as Su};
    use Separability::{Full as F, Non as N, Partial as P};
    const SEP: [Separability; 24] =
        [F, F, F, N, N, N, F, F, F, F, N, P, N, N, N, N, N, N, N, N, N, N, N, N];
    const LIN: [Linearity; 24] =
        [Su, Sl, Su, Su, Sl, Sl, Su, Su, Su, Su, Su, Su, Su, Su, Sl, Su, Su, Su, Su, Sl, Li, Su, Sl, Sl];
    const SYMMETRIC: [u8; 24] = [1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0];
    const LOCAL_OPTIMA: [u8; 24] = [0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 1, 1, 1, 1, 1, 1, 1];
    const ILL: [u8; 24] = [0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1];
    const DECEPTIVE: [u8; 24] = [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 0, 1];
    let i = usize::try_from(id).ok()?.checked_sub(1).filter(|&i| i < 24)?;
    Some(Characteristics {
        basin_local_optima: LOCAL_OPTIMA[i] == 1,
        separability: SEP[i],
        varying_interactions: id >= 17,
        symmetric: SYMMETRIC[i] == 1,
        ill_conditioned: ILL[i] == 1,
        linearity: LIN[i],
        deceptive: DECEPTIVE[i] == 1,
    })
}

/// Largest `max(h) / min(h)` a scaling rule can produce.
pub fn h_style_ratio(style: &HStyle) -> f64 {
    fn span(style: &HStyle) -> (f64, f64) {
        match style {
            HStyle::Unit => (1.0, 1.0),
            HStyle::Constant(v) => (*v, *v),
            HStyle::Uniform(a, b) | HStyle::LinspacePermute(a, b) => (*a, *b),
            HStyle::BetaHeavyTail { a, b, .. } => (*a, *b),
            HStyle::PinnedPair { first, second, fill } => {
                let (lo, hi) = span(fill);
                (lo.min(*first).min(*second), hi.max(*first).max(*second))
            }
        }
    }
    let (lo, hi) = span(style);
    hi / lo
}

/// Characteristics implied by a recipe's sampling rules.
pub fn derive(recipe: &InstanceRecipe) -> Characteristics {
    let plans = &recipe.components;
    let multi = plans.len() > 1;
    let separability = if multi {
        Separability::Non
    } else {
        match plans[0].theta {
            ThetaSpec::Identity => Separability::Full,
            ThetaSpec::Grouped { .. } => Separability::Partial,
            _ => Separability::Non,
        }
    };
    let symmetric = !multi && {
        let p = &plans[0];
        p.mu[0] == p.mu[1]
            && p.omega[0] == p.omega[2]
            && p.omega[1] == p.omega[3]
            && p.mu.iter().chain(&p.omega).all(|v| matches!(v, Param::Fixed(_)))
    };
    let linearities: Vec<Linearity> = plans.iter().map(|p| Linearity::of_lambda(p.lambda)).collect();
    Characteristics {
        basin_local_optima: plans
            .iter()
            .any(|p| !p.mu.iter().all(|m| m.is_zero()) && !p.omega.iter().all(|w| w.is_zero())),
        separability,
        varying_interactions: multi
            && plans.iter().all(|p| {
                matches!(
                    p.theta,
                    ThetaSpec::GatedRandom { .. } | ThetaSpec::FullRandom { .. } | ThetaSpec::Chain { .. }
                )
            }),
        symmetric,
        ill_conditioned: plans.iter().any(|p| h_style_ratio(&p.h) > ILL_CONDITIONED_ABOVE),
        linearity: linearities[0],
        // Components stacked on one center compete for a single basin.
        deceptive: multi && plans.iter().skip(1).any(|p| p.center != CenterRule::SameAsFirst),
    }
}

/// Separability read off a realized instance's angle matrices.
///
/// A single component with no interacting pair is fully separable; one whose
/// interaction graph splits into several nontrivial blocks is partially
/// separable; anything else, including every multi-component instance, is not.
pub fn realized_separability(inst: &Instance) -> Separability {
    if inst.components.len() > 1 {
        return Separability::Non;
    }
    let theta = &inst.components[0].theta;
    let d = theta.dim();
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    let mut any = false;
    for p in 0..d {
        for q in p + 1..d {
            if theta[(p, q)] != 0.0 {
                any = true;
                let (a, b) = (find(&mut parent, p), find(&mut parent, q));
                parent[a] = b;
            }
        }
    }
    if !any {
        return Separability::Full;
    }
    let roots = (0..d).filter(|&i| find(&mut parent, i) == i).count();
    if roots > 1 {
        Separability::Partial
    } else {
        Separability::Non
    }
}

/// Derived characteristics of published id `id`.
pub fn derive_for_id(id: u32) -> Result<Characteristics> {
    Ok(derive(&recipe(id, SUITE_DIM)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suite::{make_instance, SUITE_SIZE};

    #[test]
    fn derived_matches_published_matrix() {
        for id in 1..=SUITE_SIZE {
            assert_eq!(derive_for_id(id).unwrap(), published(id).unwrap(), "f{id}");
        }
    }

    #[test]
    fn realized_separability_matches_table() {
        for id in 1..=SUITE_SIZE {
            for seed in [1, 2, 3] {
                let inst = make_instance(id, seed).unwrap();
                assert_eq!(
                    realized_separability(&inst),
                    published(id).unwrap().separability,
                    "f{id} seed {seed}"
                );
            }
        }
    }

    #[test]
    fn published_rejects_bad_ids() {
        assert!(published(0).is_none());
        assert!(published(25).is_none());
    }
}
