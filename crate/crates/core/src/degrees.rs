//! Types of fundamental representations, the degree subset `I`, and the
//! resulting Witt-ring presentation.

use serde::Serialize;

use crate::conditions::{self, ConditionStatus};
use crate::error::{Error, Result};
use crate::root_datum::{Family, RootDatum};
use crate::weyl::{self, Involution, SubsetMask, WeylElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RepType {
    Real,
    Quaternionic,
    /// Paired with the representation at the given node.
    ComplexPair(usize),
}

impl RepType {
    /// The mark used in the types table: `*` real, `o` quaternionic, `x` complex.
    pub fn mark(self) -> char {
        match self {
            RepType::Real => '*',
            RepType::Quaternionic => 'o',
            RepType::ComplexPair(_) => 'x',
        }
    }
}

/// Self-dual fundamental representations are quaternionic iff
/// `<2ρ∨, ω_α>` is odd.
pub fn fundamental_rep_type(datum: &RootDatum, alpha: usize) -> RepType {
    let sigma = weyl::sigma_permutation(datum);
    if sigma[alpha] != alpha {
        RepType::ComplexPair(sigma[alpha])
    } else if datum.two_rho_pairing(&datum.fundamental(alpha)) % 2 != 0 {
        RepType::Quaternionic
    } else {
        RepType::Real
    }
}

/// `(b_R, b_H, b_C)` over the nodes of `s`.
pub fn type_counts(datum: &RootDatum, s: SubsetMask) -> (usize, usize, usize) {
    let mut counts = (0, 0, 0);
    for a in s.iter() {
        match fundamental_rep_type(datum, a) {
            RepType::Real => counts.0 += 1,
            RepType::Quaternionic => counts.1 += 1,
            RepType::ComplexPair(_) => counts.2 += 1,
        }
    }
    counts
}

/// Every `I` with `[Σ]I = I`, `[Σ] = [I]` on `I`, and `w_o^H` conjugate to
/// `w_o w_o^I`.  Sorted.
pub fn degree_subset_candidates(datum: &RootDatum, h: SubsetMask, budget: usize) -> Result<Vec<SubsetMask>> {
    let n = datum.rank();
    let sigma = weyl::sigma_permutation(datum);
    let w_h = Involution::new(weyl::longest_element(datum, h))?;
    let w_o = weyl::longest_element(datum, SubsetMask::full(n));

    let symmetric: Vec<(SubsetMask, Involution)> = (0..1u32 << n)
        .map(|b| SubsetMask::from_bits(b as u16))
        .filter(|&i| weyl::permute_subset(&sigma, i) == i)
        .filter(|&i| {
            let p = weyl::duality_permutation(datum, i);
            i.iter().all(|a| p[a] == sigma[a])
        })
        .map(|i| {
            let x = w_o.compose(&weyl::longest_element(datum, i));
            Involution::new(x).map(|x| (i, x))
        })
        .collect::<Result<_>>()?;

    // cheap invariants first; most candidates never reach the class
    let plausible: Vec<&(SubsetMask, Involution)> =
        symmetric.iter().filter(|(_, x)| x.ell_plus == w_h.ell_plus && x.element.trace() == w_h.element.trace()).collect();
    if plausible.is_empty() {
        return Ok(Vec::new());
    }
    let class = weyl::conjugation_class(datum, &w_h, budget)?;
    let mut out: Vec<SubsetMask> = plausible.into_iter().filter(|(_, x)| class.contains(&x.element)).map(|(i, _)| *i).collect();
    out.sort();
    Ok(out)
}

/// What the conjugacy search knows about `w_o^H`.
#[derive(Debug, Clone, Serialize)]
pub struct InvolutionSummary {
    pub ell_plus: usize,
    pub ell_minus: usize,
    pub class_size: usize,
    /// Every `K` with `w_o^K` conjugate to `w_o^H`, sorted.
    pub parabolic_conjugates: Vec<SubsetMask>,
    /// Each `I` passing (i)-(iii), with some `w` such that `w w_o^H w⁻¹ = w_o w_o^I`.
    pub degree_subsets: Vec<(SubsetMask, WeylElement)>,
}

pub fn involution_summary(datum: &RootDatum, h: SubsetMask, budget: usize) -> Result<InvolutionSummary> {
    let n = datum.rank();
    let w_h = Involution::new(weyl::longest_element(datum, h))?;
    let class = weyl::conjugation_class(datum, &w_h, budget)?;
    let parabolic_conjugates = (0..1u32 << n)
        .map(|b| SubsetMask::from_bits(b as u16))
        .filter(|&k| class.contains(&weyl::longest_element(datum, k)))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let w_o = weyl::longest_element(datum, SubsetMask::full(n));
    let degree_subsets = degree_subset_candidates(datum, h, budget)?
        .into_iter()
        .map(|i| {
            let x = w_o.compose(&weyl::longest_element(datum, i));
            let w = class.conjugator(datum, &x).expect("candidate lies in the class");
            (i, w)
        })
        .collect();
    Ok(InvolutionSummary {
        ell_plus: w_h.ell_plus,
        ell_minus: w_h.ell_minus,
        class_size: class.len(),
        parabolic_conjugates,
        degree_subsets,
    })
}

/// The unique subset `I` attached to a single-cell pair.
pub fn find_degree_subset_i(datum: &RootDatum, h: SubsetMask, budget: usize) -> Result<SubsetMask> {
    if conditions::check_single_cell(datum, h).is_none() {
        return Err(Error::Precondition(format!("{} fails the single-cell condition", h.diagram(datum.rank()))));
    }
    let found = degree_subset_candidates(datum, h, budget)?;
    let [i] = found[..] else {
        let listed: Vec<String> = found.iter().map(ToString::to_string).collect();
        return Err(Error::TheoremViolation(format!(
            "expected exactly one degree subset for H = {h}, found {} [{}]",
            found.len(),
            listed.join(" ")
        )));
    };
    let n = datum.rank();
    let expected = weyl::fix_rank(datum, SubsetMask::full(n)) - weyl::fix_rank(datum, h);
    let sigma = weyl::sigma_permutation(datum);
    let got = weyl::permutation_orbits(&sigma, i).len();
    if got != expected {
        return Err(Error::TheoremViolation(format!("degree subset {i} has {got} orbits, expected {expected}")));
    }
    Ok(i)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WittStatus {
    Exterior,
    KnownNonExterior,
    Unknown,
}

/// Which result the presentation rests on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Provenance {
    /// Full flags.
    Old,
    /// Exterior on the expected number of odd generators, degrees not pinned down.
    Main,
    MainDegrees,
    F4,
    /// A result quoted from the literature.
    Cited,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WittPresentation {
    pub status: WittStatus,
    /// `|Σ/[Σ]| - |Σ_H/[H]|` when exterior.
    pub generator_count: Option<usize>,
    pub degree1_count: Option<usize>,
    pub degree3_count: Option<usize>,
    pub parameter_i: Option<SubsetMask>,
    pub provenance: Option<Provenance>,
    pub condition: ConditionStatus,
    pub note: Option<String>,
}

/// Degree counts `(b_H(I), b_C(I)/2 + b_R(I))`.
pub fn degrees_for(datum: &RootDatum, i: SubsetMask) -> (usize, usize) {
    let (r, q, c) = type_counts(datum, i);
    (q, c / 2 + r)
}

/// `H` is W-equivalent to the tail `D_{2k}`, `k > 1`, of a `D_n` diagram.
fn is_d_even_tail(datum: &RootDatum, h: SubsetMask) -> bool {
    let ty = datum.simple_type();
    let n = ty.rank;
    if ty.family != Family::D || h.len() < 4 || h.len() % 2 != 0 {
        return false;
    }
    let tail = SubsetMask::from_indices(n - h.len()..n);
    weyl::subsets_equivalent(datum, h, tail)
}

/// `H` is `W`-equivalent to the EIII subset of `E_6`.
pub fn is_known_non_exterior(datum: &RootDatum, h: SubsetMask) -> bool {
    let ty = datum.simple_type();
    ty.family == Family::E && ty.rank == 6 && weyl::subsets_equivalent(datum, h, SubsetMask::from_nodes([1, 2, 3, 4, 5]))
}

/// The Witt-ring presentation of `G/L_H`, or a documented non-answer.
pub fn witt_presentation(datum: &RootDatum, h: SubsetMask, budget: usize) -> Result<WittPresentation> {
    let n = datum.rank();
    let expected = weyl::fix_rank(datum, SubsetMask::full(n)) - weyl::fix_rank(datum, h);
    let verdict = conditions::classify_condition(datum, h);
    let mut p = WittPresentation {
        status: WittStatus::Unknown,
        generator_count: None,
        degree1_count: None,
        degree3_count: None,
        parameter_i: verdict.parameter_i,
        provenance: None,
        condition: verdict.status,
        note: None,
    };

    if datum.simple_type().family == Family::F {
        p.status = WittStatus::Exterior;
        p.generator_count = Some(expected);
        p.degree1_count = Some(0);
        p.degree3_count = Some(expected);
        p.provenance = Some(Provenance::F4);
        return Ok(p);
    }
    match verdict.status {
        ConditionStatus::SingleCell => {
            let i = find_degree_subset_i(datum, h, budget)?;
            let (d1, d3) = degrees_for(datum, i);
            if d1 + d3 != expected {
                return Err(Error::TheoremViolation(format!("degree counts {d1} + {d3} differ from {expected}")));
            }
            p.status = WittStatus::Exterior;
            p.generator_count = Some(expected);
            p.degree1_count = Some(d1);
            p.degree3_count = Some(d3);
            p.parameter_i = Some(i);
            p.provenance = Some(if h.is_empty() { Provenance::Old } else { Provenance::MainDegrees });
        }
        ConditionStatus::OrbitBasis => {
            p.status = WittStatus::Exterior;
            p.generator_count = Some(expected);
            p.provenance = Some(Provenance::Main);
            p.note = Some("orbit-basis condition only; generator degrees are not determined".into());
        }
        ConditionStatus::Neither => {
            if is_known_non_exterior(datum, h) {
                p.status = WittStatus::KnownNonExterior;
                p.provenance = Some(Provenance::Cited);
                p.note = Some("EIII: concentrated in degree zero but non-trivial".into());
            } else if is_d_even_tail(datum, h) {
                p.provenance = Some(Provenance::Cited);
                p.note = Some(format!(
                    "D_n over D_2k: exterior, but on {} generators (two more than expected); degrees not determined here",
                    expected + 2
                ));
            }
        }
    }
    Ok(p)
}
