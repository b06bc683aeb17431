//! The group ring of the weight lattice: orbit sums, their products and
//! restrictions, and classes in `h⁺` of the representation ring of `L_H`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::conditions;
use crate::cone::FixedCone;
use crate::error::{Error, Result};
use crate::root_datum::{RootDatum, Weight};
use crate::weyl::{self, SubsetMask};

/// Largest number of term pairs a single product may touch.
pub const DEFAULT_PRODUCT_CAP: usize = 100_000_000;
pub const DEFAULT_DEGREE_CAP: usize = 3;

/// A finite sum `Σ c_λ e^λ`.  Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct CharacterElement {
    terms: BTreeMap<Weight, i64>,
}

impl CharacterElement {
    pub fn new() -> CharacterElement {
        CharacterElement::default()
    }

    pub fn constant(rank: usize, c: i64) -> CharacterElement {
        CharacterElement::monomial(Weight::zero(rank), c)
    }

    pub fn monomial(w: Weight, c: i64) -> CharacterElement {
        let mut e = CharacterElement::new();
        e.add_term(w, c);
        e
    }

    pub fn add_term(&mut self, w: Weight, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(w).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn coefficient(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.terms.iter()
    }

    pub fn scale(&self, k: i64) -> CharacterElement {
        if k == 0 {
            return CharacterElement::new();
        }
        CharacterElement { terms: self.terms.iter().map(|(w, c)| (*w, c * k)).collect() }
    }

    /// The product, refusing when more than `cap` term pairs are involved.
    pub fn mul(&self, rhs: &CharacterElement, cap: usize) -> Result<CharacterElement> {
        let pairs = self.len().saturating_mul(rhs.len());
        if pairs > cap {
            return Err(Error::ProductTooLarge(pairs));
        }
        let mut acc: HashMap<Weight, i64> = HashMap::with_capacity(self.len() + rhs.len());
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                *acc.entry(*a + *b).or_insert(0) += x * y;
            }
        }
        Ok(CharacterElement { terms: acc.into_iter().filter(|(_, c)| *c != 0).collect() })
    }

    /// Whether every simple reflection in `J` preserves the element.
    pub fn is_invariant(&self, datum: &RootDatum, j: SubsetMask) -> bool {
        self.terms.iter().all(|(w, c)| j.iter().all(|i| self.coefficient(&weyl::reflect(datum, w, i)) == *c))
    }
}

impl Add for &CharacterElement {
    type Output = CharacterElement;
    fn add(self, rhs: &CharacterElement) -> CharacterElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, *c);
        }
        out
    }
}

impl Sub for &CharacterElement {
    type Output = CharacterElement;
    fn sub(self, rhs: &CharacterElement) -> CharacterElement {
        self + &(-rhs)
    }
}

impl Neg for &CharacterElement {
    type Output = CharacterElement;
    fn neg(self) -> CharacterElement {
        self.scale(-1)
    }
}

/// `S_J(ω) = Σ_{τ ∈ W_J ω} e^τ`.
pub fn symmetric_sum(datum: &RootDatum, j: SubsetMask, w: &Weight) -> Result<CharacterElement> {
    let orbit = weyl::parabolic_orbit(datum, j, w)?;
    Ok(CharacterElement { terms: orbit.into_iter().map(|t| (t, 1)).collect() })
}

/// `S̃(ω) = S(ω) - |W ω|`.
pub fn reduced_symmetric_sum(datum: &RootDatum, j: SubsetMask, w: &Weight) -> Result<CharacterElement> {
    let s = symmetric_sum(datum, j, w)?;
    let rank = s.len() as i64;
    Ok(&s - &CharacterElement::constant(datum.rank(), rank))
}

/// Coefficients `c_ω` with `elt = Σ c_ω S_J(ω)`.  Orbit sums have all
/// coefficients one, so `c_ω` is the coefficient of `e^ω` at `J`-dominant `ω`.
pub fn decompose_into_symmetric_sums(datum: &RootDatum, j: SubsetMask, elt: &CharacterElement) -> Result<BTreeMap<Weight, i64>> {
    if !elt.is_invariant(datum, j) {
        return Err(Error::NotInvariant(j));
    }
    Ok(elt.iter().filter(|(w, _)| j.iter().all(|i| w.get(i) >= 0)).map(|(w, c)| (*w, *c)).collect())
}

/// Inverse of [`decompose_into_symmetric_sums`].
pub fn recompose(datum: &RootDatum, j: SubsetMask, coeffs: &BTreeMap<Weight, i64>) -> Result<CharacterElement> {
    let mut out = CharacterElement::new();
    for (w, c) in coeffs {
        for t in weyl::parabolic_orbit(datum, j, w)? {
            out.add_term(t, *c);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Restriction {
    /// `W ω ∩ C̄_H`, sorted.
    pub dominant: Vec<Weight>,
    /// The `[H]`-fixed part of `dominant`.
    pub fixed: Vec<Weight>,
}

/// Split `W ω` into `W_H`-orbits: `S(ω) = Σ_τ S_H(τ)` over `restriction.dominant`.
pub fn restrict_and_decompose(datum: &RootDatum, h: SubsetMask, w: &Weight) -> Result<Restriction> {
    if !w.is_dominant() {
        return Err(Error::NotDominant(SubsetMask::full(datum.rank())));
    }
    let cone = FixedCone::new(datum, h);
    let dominant: Vec<Weight> =
        weyl::orbit_cached(datum, w).iter().filter(|t| h.iter().all(|i| t.get(i) >= 0)).copied().collect();
    let fixed = dominant.iter().filter(|t| cone.contains(t)).copied().collect();
    Ok(Restriction { dominant, fixed })
}

/// `ω_1 < ω_2`: the difference is a nonzero non-negative rational combination
/// of the simple roots in `J`, equivalently (for `J = Σ`) `ω_1` lies in the
/// convex hull of `W ω_2`.  No lattice condition.
pub fn dominance_less(datum: &RootDatum, j: SubsetMask, w1: &Weight, w2: &Weight) -> bool {
    let d = *w2 - *w1;
    if d.is_zero() {
        return false;
    }
    datum.root_coordinates(&d).iter().enumerate().all(|(i, c)| !c.is_negative() && (j.contains(i) || c.is_zero()))
}

/// A class in `h⁺(R(L_H))`, as the set of `τ` with `[S_H(τ)]` present.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TateClass {
    terms: BTreeSet<Weight>,
}

impl TateClass {
    pub fn zero() -> TateClass {
        TateClass::default()
    }

    pub fn one(rank: usize) -> TateClass {
        TateClass { terms: BTreeSet::from([Weight::zero(rank)]) }
    }

    /// `[S_H(τ)]`.
    pub fn basis(datum: &RootDatum, h: SubsetMask, tau: Weight) -> Result<TateClass> {
        if !FixedCone::new(datum, h).contains(&tau) {
            return Err(Error::Precondition(format!("{tau} is not an [H]-fixed H-dominant weight")));
        }
        Ok(TateClass { terms: BTreeSet::from([tau]) })
    }

    pub fn terms(&self) -> &BTreeSet<Weight> {
        &self.terms
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.terms.contains(w)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn toggle(&mut self, w: Weight) {
        if !self.terms.remove(&w) {
            self.terms.insert(w);
        }
    }

    pub fn add(&self, other: &TateClass) -> TateClass {
        let mut out = self.clone();
        for w in &other.terms {
            out.toggle(*w);
        }
        out
    }

    /// The term that dominates every other one, if there is one.
    pub fn leading(&self, datum: &RootDatum, h: SubsetMask) -> Option<Weight> {
        self.terms.iter().copied().find(|t| self.terms.iter().all(|u| u == t || dominance_less(datum, h, u, t)))
    }
}

/// The class in `h⁺` of an `[H]`-invariant `W_H`-invariant element: its
/// decomposition mod 2 with the non-self-dual orbit sums dropped.
pub fn tate_class_of(datum: &RootDatum, h: SubsetMask, elt: &CharacterElement) -> Result<TateClass> {
    let cone = FixedCone::new(datum, h);
    let mut out = TateClass::zero();
    for (w, c) in decompose_into_symmetric_sums(datum, h, elt)? {
        if c % 2 != 0 && cone.contains(&w) {
            out.toggle(w);
        }
    }
    Ok(out)
}

pub fn tate_product(datum: &RootDatum, h: SubsetMask, x: &TateClass, y: &TateClass, cap: usize) -> Result<TateClass> {
    TateMultiplier::new(datum, h, cap).product(x, y)
}

/// Multiplies Tate classes without forming whole characters: the product of
/// two orbit sums is invariant already, so only the parity of the coefficient
/// at each `H`-dominant point of the fixed cone is needed.
struct TateMultiplier<'a> {
    datum: &'a RootDatum,
    h: SubsetMask,
    cone: FixedCone,
    cap: usize,
    orbits: HashMap<Weight, Vec<Weight>>,
}

impl<'a> TateMultiplier<'a> {
    fn new(datum: &'a RootDatum, h: SubsetMask, cap: usize) -> Self {
        TateMultiplier { datum, h, cone: FixedCone::new(datum, h), cap, orbits: HashMap::new() }
    }

    fn orbit(&mut self, w: &Weight) -> Result<()> {
        if !self.orbits.contains_key(w) {
            let orbit = weyl::parabolic_orbit(self.datum, self.h, w)?;
            self.orbits.insert(*w, orbit.into_iter().collect());
        }
        Ok(())
    }

    fn product(&mut self, x: &TateClass, y: &TateClass) -> Result<TateClass> {
        let mut odd: HashSet<Weight> = HashSet::new();
        for a in &x.terms {
            self.orbit(a)?;
            for b in &y.terms {
                self.orbit(b)?;
                let (oa, ob) = (&self.orbits[a], &self.orbits[b]);
                let pairs = oa.len().saturating_mul(ob.len());
                if pairs > self.cap {
                    return Err(Error::ProductTooLarge(pairs));
                }
                for p in oa {
                    for q in ob {
                        let w = *p + *q;
                        if self.h.iter().all(|i| w.get(i) >= 0) && !odd.remove(&w) {
                            odd.insert(w);
                        }
                    }
                }
            }
        }
        let mut out = TateClass::zero();
        for w in odd {
            if self.cone.contains(&w) {
                out.toggle(w);
            }
        }
        Ok(out)
    }
}

/// Whether the restricted classes `i*[S̃(ω_[α])]`, `[α] ⊄ I`, generate
/// `h⁺(R(L_H))` freely, tested on all monomials of degree at most `degree_cap`:
/// they must be linearly independent over `F_2` and their leading terms must
/// be the distinct monoid points `Σ n_α τ_[α]`.
pub fn verify_free_generation(datum: &RootDatum, h: SubsetMask, i: SubsetMask, degree_cap: usize, cap: usize) -> Result<bool> {
    let Some(taus) = conditions::check_orbit_basis(datum, h, i)? else {
        return Err(Error::Precondition(format!("orbit-basis condition fails for H = {h}, I = {i}")));
    };
    let rank = datum.rank();
    let mut gens: Vec<(Weight, TateClass)> = Vec::new();
    for (orbit, tau) in &taus {
        let w = conditions::orbit_weight(datum, &orbit.iter().collect::<Vec<_>>());
        let size = weyl::orbit_cached(datum, &w).len();
        let mut g = TateClass::basis(datum, h, *tau)?;
        if size % 2 == 1 {
            g = g.add(&TateClass::one(rank));
        }
        gens.push((*tau, g));
    }

    let mut mult = TateMultiplier::new(datum, h, cap);
    // Monomials by total degree; each new one is an old one times a generator.
    let mut monomials: Vec<(Vec<usize>, Weight, TateClass)> =
        vec![(vec![0; gens.len()], Weight::zero(rank), TateClass::one(rank))];
    let mut frontier = vec![0usize];
    for _ in 0..degree_cap {
        let mut next = Vec::new();
        for &m in &frontier {
            let (exps, lead, class) = monomials[m].clone();
            // non-decreasing last index keeps each monomial once
            let start = exps.iter().rposition(|&e| e > 0).unwrap_or(0);
            for (k, (tau, g)) in gens.iter().enumerate().skip(start) {
                let mut e = exps.clone();
                e[k] += 1;
                let product = mult.product(&class, g)?;
                next.push(monomials.len());
                monomials.push((e, lead + *tau, product));
            }
        }
        frontier = next;
    }

    let leads: BTreeSet<Weight> = monomials.iter().map(|(_, l, _)| *l).collect();
    if leads.len() != monomials.len() {
        return Ok(false);
    }
    if monomials.iter().any(|(_, l, c)| c.leading(datum, h) != Some(*l)) {
        return Ok(false);
    }
    Ok(f2_independent(monomials.iter().map(|(_, _, c)| c)))
}

/// Gaussian elimination over `F_2` on classes viewed as sets of weights.
fn f2_independent<'a>(classes: impl Iterator<Item = &'a TateClass>) -> bool {
    let mut pivots: BTreeMap<Weight, TateClass> = BTreeMap::new();
    for c in classes {
        let mut v = c.clone();
        loop {
            let Some(top) = v.terms.iter().next_back().copied() else {
                return false;
            };
            match pivots.get(&top) {
                Some(p) => v = v.add(p),
                None => {
                    pivots.insert(top, v);
                    break;
                }
            }
        }
    }
    true
}
