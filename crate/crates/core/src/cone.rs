//! The cone of `[H]`-fixed `H`-dominant weights and its monoid of lattice points.
//!
//! Fixed weights lie in the span of the roots of `H`, and in the coordinates
//! `<α_j∨, ->`, `j ∈ H`, the cone is cut out by `x_j >= 0` and `x_j = x_[H]j`.
//! So it is simplicial, with one ray `e_θ = ω_θ + [H]ω_θ` per `[H]`-orbit.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice;
use crate::root_datum::{RootDatum, Weight};
use crate::weyl::{self, SubsetMask, WeylElement};

/// Membership test for `C̄_H^[H]`.
#[derive(Debug, Clone)]
pub struct FixedCone {
    pub subset: SubsetMask,
    pub dual: WeylElement,
}

impl FixedCone {
    pub fn new(datum: &RootDatum, h: SubsetMask) -> FixedCone {
        FixedCone { subset: h, dual: weyl::duality(datum, h).element }
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.subset.iter().all(|i| w.get(i) >= 0) && self.dual.apply(w) == *w
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedConeMonoid {
    pub subset: SubsetMask,
    /// `e_θ` for the least `θ` of each `[H]`-orbit on `H`.
    pub generators: Vec<Weight>,
    /// Sorted.
    pub hilbert_basis: Vec<Weight>,
    pub is_free: bool,
    /// Basis of the integer relations among the Hilbert basis, in its order.
    pub relations: Vec<Vec<i64>>,
    pub dimension: usize,
}

/// The vectors `e_θ = ω_θ + [H]ω_θ`, one per `[H]`-orbit on `H`.
pub fn fixed_cone_generators(datum: &RootDatum, h: SubsetMask) -> Vec<Weight> {
    let dual = weyl::duality(datum, h).element;
    let perm = weyl::duality_permutation(datum, h);
    weyl::permutation_orbits(&perm, h)
        .iter()
        .map(|orb| {
            let w = datum.fundamental(orb[0]);
            w + dual.apply(&w)
        })
        .collect()
}

struct Ray {
    node: usize,
    vector: Weight,
    /// Coordinate `node` of `vector`.
    step: i32,
}

/// Hilbert basis of the monoid `C̄_H^[H] ∩ X*`.
pub fn hilbert_basis(datum: &RootDatum, h: SubsetMask) -> FixedConeMonoid {
    let n = datum.rank();
    let generators = fixed_cone_generators(datum, h);
    let perm = weyl::duality_permutation(datum, h);
    let orbits = weyl::permutation_orbits(&perm, h);
    let rays: Vec<Ray> = orbits
        .iter()
        .zip(&generators)
        .map(|(orb, e)| {
            let coords: Vec<i64> = e.coords().iter().map(|&x| x as i64).collect();
            let g = lattice::gcd_all(&coords) as i32;
            let vector = Weight::new(&e.coords().iter().map(|&x| x / g).collect::<Vec<_>>());
            Ray { node: orb[0], vector, step: vector.get(orb[0]) }
        })
        .collect();

    // Lattice of fixed weights.
    let dual = weyl::duality(datum, h).element;
    let shifted: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| dual.entry(i, j) as i64 - i64::from(i == j)).collect()).collect();
    let basis: Vec<Weight> = lattice::integer_kernel(&shifted, n)
        .into_iter()
        .map(|v| Weight::new(&v.iter().map(|&x| x as i32).collect::<Vec<_>>()))
        .collect();
    debug_assert_eq!(basis.len(), rays.len());

    // Points of the half-open fundamental parallelepiped of the rays.
    let reduce = |x: &Weight| -> Weight {
        let mut y = *x;
        for r in &rays {
            let k = Integer::div_floor(&y.get(r.node), &r.step);
            if k != 0 {
                y = y.add_scaled(&r.vector, -k);
            }
        }
        y
    };
    let zero = datum.zero();
    let mut box_points: HashSet<Weight> = HashSet::from([zero]);
    let mut queue = VecDeque::from([zero]);
    while let Some(p) = queue.pop_front() {
        for b in &basis {
            let q = reduce(&(p + *b));
            if box_points.insert(q) {
                queue.push_back(q);
            }
        }
    }

    let in_monoid = |x: &Weight| h.iter().all(|i| x.get(i) >= 0);
    let candidates: BTreeSet<Weight> =
        rays.iter().map(|r| r.vector).chain(box_points.into_iter().filter(|p| !p.is_zero())).collect();
    let hilbert_basis: Vec<Weight> =
        candidates.iter().filter(|x| !candidates.iter().any(|c| c != *x && in_monoid(&(**x - *c)))).copied().collect();

    let cols: Vec<Vec<i64>> = (0..n).map(|i| hilbert_basis.iter().map(|b| b.get(i) as i64).collect()).collect();
    let relations =
        if hilbert_basis.len() > rays.len() { lattice::integer_kernel(&cols, hilbert_basis.len()) } else { Vec::new() };
    FixedConeMonoid {
        subset: h,
        is_free: hilbert_basis.len() == rays.len(),
        generators,
        hilbert_basis,
        relations,
        dimension: rays.len(),
    }
}

/// Basis of `C̄_I^[Σ] ∩ X*` for a `[Σ]`-stable `I`.
pub fn face_fixed_basis(datum: &RootDatum, i: SubsetMask) -> Result<Vec<Weight>> {
    let n = datum.rank();
    let sigma = weyl::sigma_permutation(datum);
    if weyl::permute_subset(&sigma, i) != i {
        return Err(Error::NotSymmetric(i));
    }
    Ok(weyl::permutation_orbits(&sigma, i.complement(n))
        .iter()
        .map(|orb| orb.iter().fold(datum.zero(), |acc, &a| acc + datum.fundamental(a)))
        .collect())
}
