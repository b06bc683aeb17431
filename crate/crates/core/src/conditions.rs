//! The conditions (single cell) and (orbit basis) for a pair `(Σ, Σ_H)`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::cone::{self, FixedCone, FixedConeMonoid};
use crate::error::{Error, Result};
use crate::lattice::{self, Q};
use crate::root_datum::{Root, RootDatum, Weight};
use crate::weyl::{self, SubsetMask, WeylElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConditionStatus {
    SingleCell,
    OrbitBasis,
    Neither,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConditionVerdict {
    pub status: ConditionStatus,
    pub parameter_i: Option<SubsetMask>,
    pub translating_w: Option<WeylElement>,
    /// `τ_[α]` for each `[Σ]`-orbit `[α] ⊂ Σ \ I`, keyed by the orbit.
    #[serde(serialize_with = "orbit_pairs")]
    pub orbit_intersections: Option<BTreeMap<SubsetMask, Weight>>,
    /// Every `I` for which (orbit basis) holds.
    pub orbit_basis_parameters: Vec<SubsetMask>,
    /// A positive root on which `(γ, -)` changes sign over the fixed cone.
    pub sign_switch: Option<Weight>,
    pub monoid: FixedConeMonoid,
}

// JSON keys must be strings, so the map goes out as a list of pairs.
fn orbit_pairs<S: serde::Serializer>(m: &Option<BTreeMap<SubsetMask, Weight>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Pair<'a> {
        orbit: &'a SubsetMask,
        tau: &'a Weight,
    }
    match m {
        None => s.serialize_none(),
        Some(m) => s.collect_seq(m.iter().map(|(orbit, tau)| Pair { orbit, tau })),
    }
}

/// `Δ_γ(θ) = 2(γ, e_θ)/(θ, θ)`, assembled from root coefficients, the inverse
/// Cartan matrix of `H` and the edges leaving `H`.
pub fn delta_gamma(datum: &RootDatum, h: SubsetMask, gamma: &Root, theta: usize) -> Result<Q> {
    if !h.contains(theta) {
        return Err(Error::NodeNotInSubset(theta + 1));
    }
    if !h.is_connected(datum) {
        return Err(Error::Disconnected(h));
    }
    let nodes: Vec<usize> = h.iter().collect();
    let pos = |i: usize| nodes.iter().position(|&x| x == i).expect("node of H");
    let c_h: Vec<Vec<i64>> = nodes.iter().map(|&i| nodes.iter().map(|&j| datum.cartan()[i][j] as i64).collect()).collect();
    let c_h_inv = lattice::inverse(&lattice::to_rational(&c_h)).expect("Cartan matrices are invertible");
    let perm = weyl::duality_permutation(datum, h);
    let dual_theta = perm[theta];
    let a = |i: usize| Q::from_integer(gamma.coeffs.get(i) as i64);

    let mut delta = a(theta) + a(dual_theta);
    for beta in h.complement(datum.rank()).iter() {
        let b = gamma.coeffs.get(beta);
        if b == 0 {
            continue;
        }
        for &vartheta in nodes.iter().filter(|&&v| datum.adjacent(beta, v)) {
            let cbar = c_h_inv[pos(vartheta)][pos(theta)] + c_h_inv[pos(vartheta)][pos(dual_theta)];
            let edge = Q::from_integer(datum.cartan()[beta][vartheta] as i64);
            let ratio = datum.root_length(beta) / datum.root_length(theta);
            delta += Q::from_integer(b as i64) * cbar * edge * ratio;
        }
    }
    Ok(delta)
}

/// `2(γ, e_θ)/(θ, θ)` computed directly from the inner product.
pub fn delta_gamma_direct(datum: &RootDatum, h: SubsetMask, gamma: &Root, theta: usize) -> Q {
    let dual = weyl::duality(datum, h).element;
    let w = datum.fundamental(theta);
    let e = w + dual.apply(&w);
    Q::from_integer(2) * datum.inner_product(&gamma.weight, &e) / datum.root_length(theta)
}

/// First positive root `γ` for which `(γ, e)` takes both signs on the generators `e`.
pub fn sign_switching_root<'a>(datum: &'a RootDatum, generators: &[Weight]) -> Option<&'a Root> {
    datum.positive_roots().iter().find(|r| {
        let signs = generators.iter().map(|e| datum.inner_product_scaled(&r.weight, e).signum());
        let (mut pos, mut neg) = (false, false);
        for s in signs {
            pos |= s > 0;
            neg |= s < 0;
        }
        pos && neg
    })
}

/// Decide (single cell).  On success returns `(w, I)` with
/// `C̄_H^[H] = w(C̄_I^[Σ])`, verified basis to basis.
pub fn check_single_cell(datum: &RootDatum, h: SubsetMask) -> Option<(WeylElement, SubsetMask)> {
    let monoid = cone::hilbert_basis(datum, h);
    single_cell_with(datum, &monoid)
}

fn single_cell_with(datum: &RootDatum, monoid: &FixedConeMonoid) -> Option<(WeylElement, SubsetMask)> {
    if sign_switching_root(datum, &monoid.generators).is_some() {
        return None;
    }
    let p = monoid.generators.iter().fold(datum.zero(), |acc, e| acc + *e);
    let (d, w0) = weyl::to_dominant(datum, &p);
    let i = SubsetMask::from_indices((0..datum.rank()).filter(|&k| d.get(k) == 0));
    let face = cone::face_fixed_basis(datum, i).ok()?;
    let w = w0.inverse();
    let mut image: Vec<Weight> = face.iter().map(|b| w.apply(b)).collect();
    image.sort();
    (image == monoid.hilbert_basis).then_some((w, i))
}

/// `ω_[α]` for a `[Σ]`-orbit of nodes.
pub fn orbit_weight(datum: &RootDatum, orbit: &[usize]) -> Weight {
    orbit.iter().fold(datum.zero(), |acc, &a| acc + datum.fundamental(a))
}

/// For every `[Σ]`-orbit `[α]` of nodes, the sorted list `W·ω_[α] ∩ C̄_H^[H]`.
pub fn orbit_intersections(datum: &RootDatum, h: SubsetMask) -> Vec<(SubsetMask, Vec<Weight>)> {
    let sigma = weyl::sigma_permutation(datum);
    let cone = FixedCone::new(datum, h);
    weyl::permutation_orbits(&sigma, SubsetMask::full(datum.rank()))
        .into_iter()
        .map(|orb| {
            let w = orbit_weight(datum, &orb);
            let all = weyl::orbit_cached(datum, &w);
            let mut hits: Vec<Weight> =
                all.par_chunks(4096).flat_map_iter(|chunk| chunk.iter().filter(|x| cone.contains(x)).copied()).collect();
            hits.sort();
            (SubsetMask::from_indices(orb), hits)
        })
        .collect()
}

fn orbit_basis_with(
    intersections: &[(SubsetMask, Vec<Weight>)],
    monoid: &FixedConeMonoid,
    i: SubsetMask,
) -> Option<BTreeMap<SubsetMask, Weight>> {
    let mut taus = BTreeMap::new();
    for (orb, hits) in intersections {
        if orb.is_subset(i) {
            continue;
        }
        if hits.len() != 1 {
            return None;
        }
        taus.insert(*orb, hits[0]);
    }
    let mut values: Vec<Weight> = taus.values().copied().collect();
    values.sort();
    values.dedup();
    (values.len() == taus.len() && values == monoid.hilbert_basis).then_some(taus)
}

/// Decide (orbit basis) with parameter `I`.
pub fn check_orbit_basis(datum: &RootDatum, h: SubsetMask, i: SubsetMask) -> Result<Option<BTreeMap<SubsetMask, Weight>>> {
    let sigma = weyl::sigma_permutation(datum);
    if weyl::permute_subset(&sigma, i) != i {
        return Err(Error::NotSymmetric(i));
    }
    let monoid = cone::hilbert_basis(datum, h);
    Ok(orbit_basis_with(&orbit_intersections(datum, h), &monoid, i))
}

/// `[Σ]`-stable subsets with the given number of `[Σ]`-orbits, sorted.
pub fn symmetric_subsets(datum: &RootDatum, orbit_count: usize) -> Vec<SubsetMask> {
    let sigma = weyl::sigma_permutation(datum);
    let orbits = weyl::permutation_orbits(&sigma, SubsetMask::full(datum.rank()));
    let mut out: Vec<SubsetMask> = (0..1u32 << orbits.len())
        .filter(|bits| bits.count_ones() as usize == orbit_count)
        .map(|bits| {
            SubsetMask::from_indices(
                orbits.iter().enumerate().filter(|(k, _)| bits & (1 << k) != 0).flat_map(|(_, o)| o.iter().copied()),
            )
        })
        .collect();
    out.sort();
    out
}

pub fn classify_condition(datum: &RootDatum, h: SubsetMask) -> ConditionVerdict {
    let monoid = cone::hilbert_basis(datum, h);
    let sign_switch = sign_switching_root(datum, &monoid.generators).map(|r| r.coeffs);
    let single = single_cell_with(datum, &monoid);
    let intersections = orbit_intersections(datum, h);
    let total = weyl::fix_rank(datum, SubsetMask::full(datum.rank()));
    let target = total - monoid.dimension;
    let passing: Vec<(SubsetMask, BTreeMap<SubsetMask, Weight>)> = symmetric_subsets(datum, target)
        .into_iter()
        .filter_map(|i| orbit_basis_with(&intersections, &monoid, i).map(|t| (i, t)))
        .collect();
    let orbit_basis_parameters: Vec<SubsetMask> = passing.iter().map(|(i, _)| *i).collect();
    match single {
        Some((w, i)) => {
            let taus = passing.iter().find(|(j, _)| *j == i).map(|(_, t)| t.clone());
            ConditionVerdict {
                status: ConditionStatus::SingleCell,
                parameter_i: Some(i),
                translating_w: Some(w),
                orbit_intersections: taus,
                orbit_basis_parameters,
                sign_switch,
                monoid,
            }
        }
        None => {
            let first = passing.first().cloned();
            ConditionVerdict {
                status: if first.is_some() { ConditionStatus::OrbitBasis } else { ConditionStatus::Neither },
                parameter_i: first.as_ref().map(|(i, _)| *i),
                translating_w: None,
                orbit_intersections: first.map(|(_, t)| t),
                orbit_basis_parameters,
                sign_switch,
                monoid,
            }
        }
    }
}

/// Whether `[Σ]I = I` and `[Σ] w⁻¹ [H] w` lies in `W_I`.
pub fn verify_fixed_cell(datum: &RootDatum, h: SubsetMask, w: &WeylElement, i: SubsetMask) -> bool {
    let n = datum.rank();
    let sigma_perm = weyl::sigma_permutation(datum);
    if weyl::permute_subset(&sigma_perm, i) != i {
        return false;
    }
    let sigma = weyl::duality(datum, SubsetMask::full(n)).element;
    let dual_h = weyl::duality(datum, h).element;
    let x = sigma.compose(&w.inverse()).compose(&dual_h).compose(w);
    i.complement(n).iter().all(|a| {
        let om = datum.fundamental(a);
        x.apply(&om) == om
    })
}
