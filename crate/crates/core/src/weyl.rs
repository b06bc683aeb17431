//! Weyl group elements, orbits, parabolic longest elements, the duality
//! involutions `[J] = -w_o^J`, equivalence of subsets and involution conjugacy.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice;
use crate::root_datum::{RootDatum, Weight, MAX_RANK};

/// Default cap on the size of a conjugation class explored by BFS.
pub const DEFAULT_BUDGET: usize = 10_000_000;

type Matrix = [[i32; MAX_RANK]; MAX_RANK];

#[derive(Default)]
pub(crate) struct Caches {
    perms: OnceLock<Vec<[u8; MAX_RANK]>>,
    orbits: Mutex<HashMap<Weight, Arc<Vec<Weight>>>>,
}

/// A set of simple-root indices.  Ordered lexicographically by the sorted
/// list of its indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct SubsetMask {
    bits: u16,
}

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask { bits: 0 };

    pub fn full(rank: usize) -> SubsetMask {
        SubsetMask { bits: ((1u32 << rank) - 1) as u16 }
    }

    pub fn from_bits(bits: u16) -> SubsetMask {
        SubsetMask { bits }
    }

    /// From 0-based indices.
    pub fn from_indices(idx: impl IntoIterator<Item = usize>) -> SubsetMask {
        let mut m = SubsetMask::EMPTY;
        for i in idx {
            m.insert(i);
        }
        m
    }

    /// From 1-based Bourbaki node numbers.
    pub fn from_nodes(nodes: impl IntoIterator<Item = usize>) -> SubsetMask {
        SubsetMask::from_indices(nodes.into_iter().map(|n| n - 1))
    }

    pub fn bits(self) -> u16 {
        self.bits
    }

    pub fn contains(self, i: usize) -> bool {
        i < 16 && self.bits & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < MAX_RANK, "node index {i} out of range");
        self.bits |= 1 << i;
    }

    pub fn with(self, i: usize) -> SubsetMask {
        let mut m = self;
        m.insert(i);
        m
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_subset(self, other: SubsetMask) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn complement(self, rank: usize) -> SubsetMask {
        SubsetMask { bits: !self.bits & SubsetMask::full(rank).bits }
    }

    /// 0-based indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..16).filter(move |&i| self.contains(i))
    }

    /// 1-based node numbers in increasing order.
    pub fn nodes(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// Dynkin-diagram marking: `*` for nodes in the subset, `o` otherwise.
    pub fn diagram(self, rank: usize) -> String {
        (0..rank).map(|i| if self.contains(i) { '*' } else { 'o' }).collect()
    }

    /// Parse either comma-separated 1-based nodes (`2,3,4`) or a marking (`o***`).
    /// The empty subset is written `{}`, `-` or as a marking without `*`.
    pub fn parse(s: &str, rank: usize) -> Result<SubsetMask> {
        let t = s.trim();
        let err = || Error::SubsetParse(s.to_string());
        if matches!(t, "" | "-" | "{}") {
            return Ok(SubsetMask::EMPTY);
        }
        if t.chars().all(|c| c == 'o' || c == '*') {
            if t.len() != rank {
                return Err(err());
            }
            return Ok(SubsetMask::from_indices(t.chars().enumerate().filter(|(_, c)| *c == '*').map(|(i, _)| i)));
        }
        let inner = t.trim_start_matches('{').trim_end_matches('}');
        let mut m = SubsetMask::EMPTY;
        for part in inner.split(',') {
            let n: usize = part.trim().parse().map_err(|_| err())?;
            if n == 0 || n > rank {
                return Err(Error::NodeOutOfRange { index: n, rank });
            }
            m.insert(n - 1);
        }
        Ok(m)
    }

    /// Whether the induced subdiagram is connected (the empty set counts as connected).
    pub fn is_connected(self, datum: &RootDatum) -> bool {
        let Some(start) = self.iter().next() else {
            return true;
        };
        let mut seen = SubsetMask::EMPTY.with(start);
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in self.iter() {
                if !seen.contains(j) && datum.adjacent(i, j) {
                    seen.insert(j);
                    stack.push(j);
                }
            }
        }
        seen == self
    }
}

impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.nodes().iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<SubsetMask> for Vec<usize> {
    fn from(m: SubsetMask) -> Vec<usize> {
        m.nodes()
    }
}

impl TryFrom<Vec<usize>> for SubsetMask {
    type Error = String;
    fn try_from(v: Vec<usize>) -> std::result::Result<SubsetMask, String> {
        if v.iter().any(|&n| n == 0 || n > MAX_RANK) {
            return Err("node out of range".into());
        }
        Ok(SubsetMask::from_nodes(v))
    }
}

/// An element of the Weyl group, as an integer matrix on fundamental-weight
/// coordinates (column `j` is the image of `ω_j`).  Equality ignores the word.
#[derive(Clone)]
pub struct WeylElement {
    rank: u8,
    m: Matrix,
    word: Option<Vec<u8>>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.m == other.m
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rank.hash(state);
        self.m.hash(state);
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement({:?}", self.matrix())?;
        if let Some(w) = &self.word {
            write!(f, ", word {:?}", w.iter().map(|&i| i + 1).collect::<Vec<_>>())?;
        }
        write!(f, ")")
    }
}

impl Serialize for WeylElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            matrix: Vec<Vec<i32>>,
            word: Option<Vec<usize>>,
        }
        Repr { matrix: self.matrix(), word: self.word_nodes() }.serialize(s)
    }
}

impl WeylElement {
    pub fn identity(rank: usize) -> WeylElement {
        let mut m = [[0; MAX_RANK]; MAX_RANK];
        for (i, row) in m.iter_mut().enumerate().take(rank) {
            row[i] = 1;
        }
        WeylElement { rank: rank as u8, m, word: Some(Vec::new()) }
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn matrix(&self) -> Vec<Vec<i32>> {
        let n = self.rank();
        (0..n).map(|i| self.m[i][..n].to_vec()).collect()
    }

    pub fn entry(&self, row: usize, col: usize) -> i32 {
        self.m[row][col]
    }

    /// Reduced or unreduced word `s_{w[0]} s_{w[1]} ...` (0-based), if known.
    pub fn word(&self) -> Option<&[u8]> {
        self.word.as_deref()
    }

    /// The word in 1-based node numbers.
    pub fn word_nodes(&self) -> Option<Vec<usize>> {
        self.word.as_ref().map(|w| w.iter().map(|&i| i as usize + 1).collect())
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        let n = self.rank();
        let mut out = [0i32; MAX_RANK];
        for (j, &x) in w.coords().iter().enumerate() {
            if x != 0 {
                for (o, row) in out.iter_mut().zip(&self.m).take(n) {
                    *o += row[j] * x;
                }
            }
        }
        Weight::new(&out[..n])
    }

    /// `self ∘ rhs`
    pub fn compose(&self, rhs: &WeylElement) -> WeylElement {
        let word = match (&self.word, &rhs.word) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        WeylElement { rank: self.rank, m: mat_mul(&self.m, &rhs.m, self.rank()), word }
    }

    /// The negative `-w` (an automorphism of the lattice, not in W in general).
    pub fn neg(&self) -> WeylElement {
        let mut m = self.m;
        for row in m.iter_mut() {
            for x in row.iter_mut() {
                *x = -*x;
            }
        }
        WeylElement { rank: self.rank, m, word: None }
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.rank())
    }

    pub fn trace(&self) -> i32 {
        (0..self.rank()).map(|i| self.m[i][i]).sum()
    }

    /// Inverse, via the reversed word when known and by powering otherwise.
    pub fn inverse(&self) -> WeylElement {
        let word = self.word.as_ref().map(|w| w.iter().rev().copied().collect());
        let mut prev = WeylElement::identity(self.rank());
        let mut cur = self.strip();
        while !cur.is_identity() {
            prev = cur.clone();
            cur = cur.compose(&self.strip());
        }
        WeylElement { rank: self.rank, m: prev.m, word }
    }

    fn strip(&self) -> WeylElement {
        WeylElement { rank: self.rank, m: self.m, word: None }
    }

    /// Compact key for hashing in conjugacy searches.
    fn key(&self) -> [i8; MAX_RANK * MAX_RANK] {
        pack(&self.m)
    }
}

fn pack(m: &Matrix) -> [i8; MAX_RANK * MAX_RANK] {
    let mut k = [0i8; MAX_RANK * MAX_RANK];
    for i in 0..MAX_RANK {
        for j in 0..MAX_RANK {
            k[i * MAX_RANK + j] = i8::try_from(m[i][j]).expect("Weyl matrix entry out of range");
        }
    }
    k
}

fn unpack(k: &[i8; MAX_RANK * MAX_RANK]) -> Matrix {
    let mut m = [[0; MAX_RANK]; MAX_RANK];
    for i in 0..MAX_RANK {
        for j in 0..MAX_RANK {
            m[i][j] = k[i * MAX_RANK + j] as i32;
        }
    }
    m
}

fn mat_mul(a: &Matrix, b: &Matrix, n: usize) -> Matrix {
    let mut c = [[0; MAX_RANK]; MAX_RANK];
    for i in 0..n {
        for k in 0..n {
            let x = a[i][k];
            if x != 0 {
                for j in 0..n {
                    c[i][j] += x * b[k][j];
                }
            }
        }
    }
    c
}

/// `s_i m s_i` in place, using `s_i = I - α_i e_i^T`.
fn conjugate_by_reflection(datum: &RootDatum, m: &Matrix, i: usize) -> Matrix {
    let n = datum.rank();
    let a = datum.simple_root(i);
    let mut x = *m;
    // left: x = x - α_i (row i of x)
    let row_i = x[i];
    for r in 0..n {
        let c = a.get(r);
        if c != 0 {
            for j in 0..n {
                x[r][j] -= c * row_i[j];
            }
        }
    }
    // right: column i -= x α_i
    for row in x.iter_mut().take(n) {
        let s: i32 = (0..n).map(|k| row[k] * a.get(k)).sum();
        row[i] -= s;
    }
    x
}

pub fn simple_reflection(datum: &RootDatum, i: usize) -> Result<WeylElement> {
    let n = datum.rank();
    if i >= n {
        return Err(Error::NodeOutOfRange { index: i + 1, rank: n });
    }
    let mut e = WeylElement::identity(n);
    let a = datum.simple_root(i);
    for r in 0..n {
        e.m[r][i] -= a.get(r);
    }
    e.word = Some(vec![i as u8]);
    Ok(e)
}

/// The element `s_{w[0]} s_{w[1]} ...` for a 0-based word.
pub fn element_from_word(datum: &RootDatum, word: &[usize]) -> Result<WeylElement> {
    let mut e = WeylElement::identity(datum.rank());
    for &i in word {
        e = e.compose(&simple_reflection(datum, i)?);
    }
    Ok(e)
}

#[inline]
pub(crate) fn reflect(datum: &RootDatum, w: &Weight, i: usize) -> Weight {
    let c = w.get(i);
    if c == 0 {
        *w
    } else {
        w.add_scaled(&datum.simple_root(i), -c)
    }
}

fn apply_word(datum: &RootDatum, word: &[u8], w: &Weight) -> Weight {
    // Rightmost letter acts first.
    word.iter().rev().fold(*w, |acc, &i| reflect(datum, &acc, i as usize))
}

/// The dominant weight in the orbit of `w` and an element mapping `w` to it.
/// Reflects at the smallest negative coordinate at each step.
pub fn to_dominant(datum: &RootDatum, w: &Weight) -> (Weight, WeylElement) {
    let mut cur = *w;
    let mut steps: Vec<u8> = Vec::new();
    while let Some(i) = cur.coords().iter().position(|&x| x < 0) {
        cur = reflect(datum, &cur, i);
        steps.push(i as u8);
    }
    let word: Vec<usize> = steps.iter().rev().map(|&i| i as usize).collect();
    let e = element_from_word(datum, &word).expect("indices are in range");
    (cur, e)
}

/// The orbit of a `J`-dominant weight under `W_J`, by layered search along
/// minimal coset representatives.  Sorted.
pub fn parabolic_orbit(datum: &RootDatum, j: SubsetMask, w: &Weight) -> Result<Vec<Weight>> {
    if j.iter().any(|i| w.get(i) < 0) {
        return Err(Error::NotDominant(j));
    }
    let mut out = vec![*w];
    let mut layer = vec![*w];
    while !layer.is_empty() {
        let mut next: HashSet<Weight> = HashSet::new();
        for v in &layer {
            for i in j.iter() {
                if v.get(i) > 0 {
                    next.insert(reflect(datum, v, i));
                }
            }
        }
        layer = next.into_iter().collect();
        out.extend_from_slice(&layer);
    }
    out.sort_unstable();
    Ok(out)
}

/// The full Weyl orbit of any weight.  Sorted.
pub fn orbit(datum: &RootDatum, w: &Weight) -> Vec<Weight> {
    (*orbit_cached(datum, w)).clone()
}

/// Shared, cached orbit; cached by dominant representative.
pub fn orbit_cached(datum: &RootDatum, w: &Weight) -> Arc<Vec<Weight>> {
    let (d, _) = to_dominant(datum, w);
    if let Some(o) = datum.caches.orbits.lock().expect("orbit cache").get(&d) {
        return o.clone();
    }
    let full = SubsetMask::full(datum.rank());
    let o = Arc::new(parabolic_orbit(datum, full, &d).expect("dominant"));
    datum.caches.orbits.lock().expect("orbit cache").entry(d).or_insert(o).clone()
}

/// Word (leftmost letter first) of the longest element of `W_J`.
fn longest_word(datum: &RootDatum, j: SubsetMask) -> Vec<u8> {
    let mut v = datum.zero();
    for i in j.iter() {
        v.set(i, 1);
    }
    let mut steps = Vec::new();
    while let Some(i) = j.iter().find(|&i| v.get(i) > 0) {
        v = reflect(datum, &v, i);
        steps.push(i as u8);
    }
    steps.reverse();
    steps
}

pub fn longest_element(datum: &RootDatum, j: SubsetMask) -> WeylElement {
    let word: Vec<usize> = longest_word(datum, j).iter().map(|&i| i as usize).collect();
    element_from_word(datum, &word).expect("indices are in range")
}

/// A Weyl group element of order at most two, with its eigenspace dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Involution {
    pub element: WeylElement,
    pub ell_plus: usize,
    pub ell_minus: usize,
}

impl Involution {
    pub fn new(element: WeylElement) -> Result<Involution> {
        if !element.compose(&element).is_identity() {
            return Err(Error::NotInvolution);
        }
        let n = element.rank();
        let shifted: Vec<Vec<i64>> =
            (0..n).map(|i| (0..n).map(|j| element.m[i][j] as i64 - i64::from(i == j)).collect()).collect();
        let ell_plus = n - lattice::rank(&shifted);
        Ok(Involution { element, ell_plus, ell_minus: n - ell_plus })
    }
}

/// `[J] = -w_o^J`.  It is an involution of the lattice but lies in `W`
/// only when `-1` does; the stored element is the lattice map.
pub fn duality(datum: &RootDatum, j: SubsetMask) -> Involution {
    let e = longest_element(datum, j).neg();
    Involution::new(e).expect("-w_o^J squares to the identity")
}

/// The permutation of nodes induced by `[J]` on `J` (identity outside `J`).
pub fn duality_permutation(datum: &RootDatum, j: SubsetMask) -> Vec<usize> {
    let n = datum.rank();
    let perms = datum.caches.perms.get_or_init(|| {
        (0..1u32 << n).map(|bits| compute_duality_permutation(datum, SubsetMask::from_bits(bits as u16))).collect()
    });
    perms[j.bits() as usize][..n].iter().map(|&x| x as usize).collect()
}

fn compute_duality_permutation(datum: &RootDatum, j: SubsetMask) -> [u8; MAX_RANK] {
    let mut perm = [0u8; MAX_RANK];
    for (i, p) in perm.iter_mut().enumerate() {
        *p = i as u8;
    }
    let word = longest_word(datum, j);
    for i in j.iter() {
        let image = -apply_word(datum, &word, &datum.simple_root(i));
        let k = (0..datum.rank()).find(|&k| datum.simple_root(k) == image).expect("[J] permutes the simple roots of J");
        perm[i] = k as u8;
    }
    perm
}

/// The diagram involution `[Σ]` as a node permutation.
pub fn sigma_permutation(datum: &RootDatum) -> Vec<usize> {
    duality_permutation(datum, SubsetMask::full(datum.rank()))
}

/// Image of a subset under a node permutation.
pub fn permute_subset(perm: &[usize], s: SubsetMask) -> SubsetMask {
    SubsetMask::from_indices(s.iter().map(|i| perm[i]))
}

/// Orbits of a node permutation restricted to `s`, each sorted, ordered by least element.
pub fn permutation_orbits(perm: &[usize], s: SubsetMask) -> Vec<Vec<usize>> {
    let mut seen = SubsetMask::EMPTY;
    let mut out = Vec::new();
    for i in s.iter() {
        if seen.contains(i) {
            continue;
        }
        let mut orb = vec![i];
        seen.insert(i);
        let mut k = perm[i];
        while k != i {
            orb.push(k);
            seen.insert(k);
            k = perm[k];
        }
        orb.sort_unstable();
        out.push(orb);
    }
    out
}

/// `|J/[J]|`, the number of orbits of `[J]` on `J`.
pub fn fix_rank(datum: &RootDatum, j: SubsetMask) -> usize {
    permutation_orbits(&duality_permutation(datum, j), j).len()
}

/// The class of `j` under the elementary moves `J -> [J ∪ {α}](J)`.
pub fn equivalence_class(datum: &RootDatum, j: SubsetMask) -> Vec<SubsetMask> {
    let n = datum.rank();
    let mut seen: HashSet<SubsetMask> = HashSet::from([j]);
    let mut queue = VecDeque::from([j]);
    while let Some(cur) = queue.pop_front() {
        for a in cur.complement(n).iter() {
            let perm = duality_permutation(datum, cur.with(a));
            let image = permute_subset(&perm, cur);
            if seen.insert(image) {
                queue.push_back(image);
            }
        }
    }
    let mut out: Vec<SubsetMask> = seen.into_iter().collect();
    out.sort();
    out
}

pub fn subsets_equivalent(datum: &RootDatum, j: SubsetMask, k: SubsetMask) -> bool {
    j == k || (j.len() == k.len() && equivalence_class(datum, j).binary_search(&k).is_ok())
}

/// The lexicographically smallest member of the class of `j`.
pub fn canonical_subset(datum: &RootDatum, j: SubsetMask) -> SubsetMask {
    equivalence_class(datum, j)[0]
}

/// One canonical (smallest) representative per class, sorted.
pub fn subsets_up_to_equivalence(datum: &RootDatum) -> Vec<SubsetMask> {
    let n = datum.rank();
    let mut seen: HashSet<SubsetMask> = HashSet::new();
    let mut reps = Vec::new();
    for bits in 0..1u32 << n {
        let s = SubsetMask::from_bits(bits as u16);
        if seen.contains(&s) {
            continue;
        }
        let class = equivalence_class(datum, s);
        reps.push(class[0]);
        seen.extend(class);
    }
    reps.sort();
    reps
}

/// The conjugation class of an involution, with parent pointers so that a
/// conjugating element can be recovered for any member.
pub struct ConjugacyClass {
    rank: usize,
    keys: Vec<[i8; MAX_RANK * MAX_RANK]>,
    index: HashMap<[i8; MAX_RANK * MAX_RANK], u32>,
    /// (parent index, generator) for each non-root member.
    parent: Vec<(u32, u8)>,
}

impl ConjugacyClass {
    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn contains(&self, x: &WeylElement) -> bool {
        x.rank() == self.rank && self.index.contains_key(&x.key())
    }

    /// Some `w` with `w σ w⁻¹ = x`, where `σ` is the class's starting element.
    pub fn conjugator(&self, datum: &RootDatum, x: &WeylElement) -> Option<WeylElement> {
        let mut k = *self.index.get(&x.key())?;
        let mut word = Vec::new();
        while k != 0 {
            let (p, g) = self.parent[k as usize];
            word.push(g as usize);
            k = p;
        }
        // x = s_{g_m} ... s_{g_1} σ s_{g_1} ... s_{g_m}, and the walk collected g_m first.
        element_from_word(datum, &word).ok()
    }

    pub fn members(&self) -> impl Iterator<Item = WeylElement> + '_ {
        self.keys.iter().map(|k| WeylElement { rank: self.rank as u8, m: unpack(k), word: None })
    }
}

/// Breadth-first search of the conjugation class of `sigma` under the simple
/// reflections, stopping early once `target` (if given) is found.
fn conjugation_search(
    datum: &RootDatum,
    sigma: &WeylElement,
    target: Option<&WeylElement>,
    budget: usize,
) -> Result<ConjugacyClass> {
    let n = datum.rank();
    let start = sigma.key();
    let mut class = ConjugacyClass { rank: n, keys: vec![start], index: HashMap::from([(start, 0)]), parent: vec![(0, 0)] };
    let target_key = target.map(WeylElement::key);
    if target_key == Some(start) {
        return Ok(class);
    }
    let mut head = 0usize;
    while head < class.keys.len() {
        let m = unpack(&class.keys[head]);
        for i in 0..n {
            let y = pack(&conjugate_by_reflection(datum, &m, i));
            if class.index.contains_key(&y) {
                continue;
            }
            if class.keys.len() >= budget {
                return Err(Error::BudgetExceeded(budget));
            }
            class.index.insert(y, class.keys.len() as u32);
            class.keys.push(y);
            class.parent.push((head as u32, i as u8));
            if target_key == Some(y) {
                return Ok(class);
            }
        }
        head += 1;
    }
    Ok(class)
}

pub fn conjugation_class(datum: &RootDatum, sigma: &Involution, budget: usize) -> Result<ConjugacyClass> {
    conjugation_search(datum, &sigma.element, None, budget)
}

/// Whether two involutions are conjugate in `W`.
pub fn conjugate_involutions(datum: &RootDatum, sigma: &Involution, tau: &Involution, budget: usize) -> Result<bool> {
    Ok(conjugating_element(datum, sigma, tau, budget)?.is_some())
}

/// Some `w` with `w σ w⁻¹ = τ`, if the two are conjugate.
pub fn conjugating_element(
    datum: &RootDatum,
    sigma: &Involution,
    tau: &Involution,
    budget: usize,
) -> Result<Option<WeylElement>> {
    if sigma.ell_plus != tau.ell_plus || sigma.element.trace() != tau.element.trace() {
        return Ok(None);
    }
    let class = conjugation_search(datum, &sigma.element, Some(&tau.element), budget)?;
    Ok(class.conjugator(datum, &tau.element))
}
