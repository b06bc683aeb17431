//! Root data of the simple types of rank at most 8, in Bourbaki numbering.
//!
//! Weights are integer vectors in the basis of fundamental weights, so the
//! coordinate `i` of a weight is its pairing with the simple coroot `i`.
//! Node indices in this API are 0-based: index `i` is Bourbaki node `i + 1`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{self, Q};

pub const MAX_RANK: usize = 8;

const CARTAN_DATA: &str = include_str!("../data/cartan.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn from_char(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn as_char(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<SimpleType> {
        let reason = match family {
            Family::A if rank < 1 => Some("A_n needs n >= 1"),
            Family::B if rank < 2 => Some("B_n needs n >= 2"),
            Family::C if rank < 2 => Some("C_n needs n >= 2"),
            Family::D if rank < 3 => Some("D_n needs n >= 3"),
            Family::E if !(6..=8).contains(&rank) => Some("E_n needs 6 <= n <= 8"),
            Family::F if rank != 4 => Some("F has rank 4"),
            Family::G if rank != 2 => Some("G has rank 2"),
            _ if rank > MAX_RANK => Some("rank above 8 is not supported"),
            _ => None,
        };
        match reason {
            Some(reason) => Err(Error::InvalidType { family: family.as_char(), rank, reason }),
            None => Ok(SimpleType { family, rank }),
        }
    }

    /// Every supported type, ordered by family then rank.
    pub fn all() -> Vec<SimpleType> {
        let mut out = Vec::new();
        for family in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            for rank in 1..=MAX_RANK {
                if let Ok(t) = SimpleType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.as_char(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<SimpleType> {
        let t = s.trim();
        let mut chars = t.chars();
        let family = chars.next().and_then(Family::from_char).ok_or_else(|| Error::TypeParse(s.to_string()))?;
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest.parse().map_err(|_| Error::TypeParse(s.to_string()))?;
        SimpleType::new(family, rank)
    }
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    len: u8,
    coords: [i32; MAX_RANK],
}

impl Weight {
    pub fn new(coords: &[i32]) -> Weight {
        assert!(coords.len() <= MAX_RANK, "weight of length {} > 8", coords.len());
        let mut c = [0; MAX_RANK];
        c[..coords.len()].copy_from_slice(coords);
        Weight { len: coords.len() as u8, coords: c }
    }

    pub fn zero(rank: usize) -> Weight {
        Weight::new(&vec![0; rank])
    }

    /// The fundamental weight of node `i` (0-based).
    pub fn fundamental(rank: usize, i: usize) -> Weight {
        let mut w = Weight::zero(rank);
        w.coords[i] = 1;
        w
    }

    pub fn rank(&self) -> usize {
        self.len as usize
    }

    pub fn coords(&self) -> &[i32] {
        &self.coords[..self.len as usize]
    }

    pub fn get(&self, i: usize) -> i32 {
        self.coords()[i]
    }

    pub fn set(&mut self, i: usize, v: i32) {
        assert!(i < self.rank());
        self.coords[i] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|&x| x == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.coords().iter().all(|&x| x >= 0)
    }

    pub fn scale(&self, k: i32) -> Weight {
        let mut w = *self;
        for x in &mut w.coords {
            *x *= k;
        }
        w
    }

    /// `self + k * other`
    pub fn add_scaled(&self, other: &Weight, k: i32) -> Weight {
        debug_assert_eq!(self.len, other.len);
        let mut w = *self;
        for (x, y) in w.coords.iter_mut().zip(other.coords) {
            *x += k * y;
        }
        w
    }

    /// Human-readable form such as `2ω1 - ω2`.
    pub fn pretty(&self) -> String {
        let mut s = String::new();
        for (i, &c) in self.coords().iter().enumerate() {
            if c == 0 {
                continue;
            }
            if s.is_empty() {
                if c < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(if c < 0 { " - " } else { " + " });
            }
            if c.abs() != 1 {
                s.push_str(&c.abs().to_string());
            }
            s.push_str(&format!("ω{}", i + 1));
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        self.add_scaled(&rhs, 1)
    }
}

impl std::ops::Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        self.add_scaled(&rhs, -1)
    }
}

impl std::ops::Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Tuple form `(a,b,c)` used in golden files and JSON.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords().iter().map(i32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Weight, String> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| format!("weight '{s}' must be a tuple"))?;
        let coords: std::result::Result<Vec<i32>, _> = inner.split(',').map(|t| t.trim().parse::<i32>()).collect();
        let coords = coords.map_err(|e| format!("weight '{s}': {e}"))?;
        if coords.len() > MAX_RANK {
            return Err(format!("weight '{s}' is too long"));
        }
        Ok(Weight::new(&coords))
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Weight, D::Error> {
        let v = Vec::<i32>::deserialize(d)?;
        if v.len() > MAX_RANK {
            return Err(serde::de::Error::custom("weight longer than 8"));
        }
        Ok(Weight::new(&v))
    }
}

/// A positive root together with its coroot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// Coordinates in the basis of fundamental weights.
    pub weight: Weight,
    /// Coefficients in the basis of simple roots.
    pub coeffs: Weight,
    /// `<γ∨, ω_k>` for each fundamental weight.
    pub coroot: Weight,
    /// `(γ, γ)`, with long roots of length 2.
    pub norm: Q,
}

impl Root {
    pub fn coroot_pairing(&self, w: &Weight) -> i64 {
        self.coroot.coords().iter().zip(w.coords()).map(|(&a, &b)| a as i64 * b as i64).sum()
    }

    pub fn height(&self) -> i32 {
        self.coeffs.coords().iter().sum()
    }
}

/// Immutable root-system data for one simple type.
pub struct RootDatum {
    ty: SimpleType,
    cartan: Vec<Vec<i32>>,
    cartan_inverse: Vec<Vec<Q>>,
    /// `(α_i, α_i)`
    lengths: Vec<Q>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Root>,
    gram: Vec<Vec<Q>>,
    gram_scaled: Vec<Vec<i64>>,
    two_rho: Vec<i64>,
    pub(crate) caches: crate::weyl::Caches,
}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootDatum").field("type", &self.ty).finish()
    }
}

impl RootDatum {
    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    /// `C_ij = <α_i∨, α_j>`
    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn cartan_inverse(&self) -> &[Vec<Q>] {
        &self.cartan_inverse
    }

    /// `(α_i, α_i)`; equal to 2 for long roots.
    pub fn root_length(&self, i: usize) -> Q {
        self.lengths[i]
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        self.simple_roots[i]
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn fundamental(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank(), i)
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank())
    }

    /// Positive roots ordered lexicographically by simple-root coefficients.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// `(ω_i, ω_j)`
    pub fn inner_product_gram(&self) -> &[Vec<Q>] {
        &self.gram
    }

    pub fn inner_product(&self, a: &Weight, b: &Weight) -> Q {
        let mut s = Q::zero();
        for (i, &x) in a.coords().iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coords().iter().enumerate() {
                if y != 0 {
                    s += self.gram[i][j] * Q::from_integer(x as i64 * y as i64);
                }
            }
        }
        s
    }

    /// A fixed positive integer multiple of the inner product, for sign tests.
    pub fn inner_product_scaled(&self, a: &Weight, b: &Weight) -> i64 {
        let mut s = 0i64;
        for (i, &x) in a.coords().iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coords().iter().enumerate() {
                s += self.gram_scaled[i][j] * x as i64 * y as i64;
            }
        }
        s
    }

    /// The covector `<2ρ∨, ->` on fundamental-weight coordinates.
    pub fn two_rho_covector(&self) -> &[i64] {
        &self.two_rho
    }

    pub fn two_rho_pairing(&self, w: &Weight) -> i64 {
        self.two_rho.iter().zip(w.coords()).map(|(&a, &b)| a * b as i64).sum()
    }

    /// Simple-root coefficients of a weight, `C^{-1} λ`.
    pub fn root_coordinates(&self, w: &Weight) -> Vec<Q> {
        let n = self.rank();
        (0..n).map(|i| (0..n).map(|j| self.cartan_inverse[i][j] * Q::from_integer(w.get(j) as i64)).sum()).collect()
    }

    /// Weight with the given simple-root coefficients.
    pub fn weight_of_root_coeffs(&self, coeffs: &[i32]) -> Weight {
        let n = self.rank();
        let mut w = self.zero();
        for (j, &a) in coeffs.iter().enumerate() {
            if a != 0 {
                w = w.add_scaled(&self.simple_roots[j], a);
            }
        }
        debug_assert_eq!(w.rank(), n);
        w
    }

    /// Whether nodes `i` and `j` are joined in the Dynkin diagram.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }
}

fn parse_cartan_table(text: &str) -> Result<HashMap<String, Vec<Vec<i32>>>> {
    let mut out = HashMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |m: &str| Error::CartanData(format!("line {}: {m}", lineno + 1));
        let (name, body) = line.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let rows: std::result::Result<Vec<Vec<i32>>, _> =
            body.split(';').map(|r| r.split_whitespace().map(str::parse::<i32>).collect()).collect();
        let rows = rows.map_err(|e| bad(&e.to_string()))?;
        validate_cartan(&rows).map_err(|m| bad(&m))?;
        if out.insert(name.trim().to_string(), rows).is_some() {
            return Err(bad("duplicate entry"));
        }
    }
    Ok(out)
}

fn validate_cartan(c: &[Vec<i32>]) -> std::result::Result<(), String> {
    let n = c.len();
    if n == 0 || n > MAX_RANK || c.iter().any(|r| r.len() != n) {
        return Err("matrix must be square of size 1..=8".into());
    }
    for i in 0..n {
        if c[i][i] != 2 {
            return Err("diagonal entries must be 2".into());
        }
        for j in 0..n {
            if i != j && (c[i][j] > 0 || (c[i][j] == 0) != (c[j][i] == 0)) {
                return Err("off-diagonal pattern is not a generalised Cartan matrix".into());
            }
        }
    }
    symmetrizer(c).ok_or("matrix is not symmetrizable or not connected")?;
    // Positive definite: all leading principal minors positive.
    for k in 1..=n {
        let sub: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| c[i][j] as i64).collect()).collect();
        if determinant(&sub) <= Q::zero() {
            return Err("matrix is not of finite type".into());
        }
    }
    Ok(())
}

fn determinant(m: &[Vec<i64>]) -> Q {
    let mut a = lattice::to_rational(m);
    let n = a.len();
    let mut det = Q::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        det *= a[col][col];
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            for j in col..n {
                let x = a[col][j];
                a[r][j] -= f * x;
            }
        }
    }
    det
}

/// Squared lengths `d_i` with `d_i C_ij = d_j C_ji`, longest equal to 2.
fn symmetrizer(c: &[Vec<i32>]) -> Option<Vec<Q>> {
    let n = c.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    d[0] = Some(Q::one());
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        let di = d[i]?;
        for j in 0..n {
            if i == j || c[i][j] == 0 {
                continue;
            }
            let dj = di * Q::new(c[i][j] as i64, c[j][i] as i64);
            match d[j] {
                None => {
                    d[j] = Some(dj);
                    stack.push(j);
                }
                Some(x) if x != dj => return None,
                _ => {}
            }
        }
    }
    let d: Vec<Q> = d.into_iter().collect::<Option<Vec<Q>>>()?;
    let max = d.iter().copied().max()?;
    Some(d.into_iter().map(|x| x * Q::from_integer(2) / max).collect())
}

fn cartan_table() -> Result<&'static HashMap<String, Vec<Vec<i32>>>> {
    static TABLE: OnceLock<Result<HashMap<String, Vec<Vec<i32>>>>> = OnceLock::new();
    TABLE.get_or_init(|| parse_cartan_table(CARTAN_DATA)).as_ref().map_err(Clone::clone)
}

/// Build and validate the root datum of a simple type.
pub fn build_root_datum(ty: SimpleType) -> Result<RootDatum> {
    let ty = SimpleType::new(ty.family, ty.rank)?;
    let cartan = cartan_table()?.get(&ty.to_string()).cloned().ok_or_else(|| Error::CartanData(format!("no entry for {ty}")))?;
    from_cartan(ty, cartan)
}

fn from_cartan(ty: SimpleType, cartan: Vec<Vec<i32>>) -> Result<RootDatum> {
    let n = ty.rank;
    if cartan.len() != n {
        return Err(Error::CartanData(format!("entry for {ty} has the wrong size")));
    }
    let bad = |m: &str| Error::CartanData(format!("{ty}: {m}"));
    let c64: Vec<Vec<i64>> = cartan.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
    let cartan_inverse = lattice::inverse(&lattice::to_rational(&c64)).ok_or_else(|| bad("singular"))?;
    let lengths = symmetrizer(&cartan).ok_or_else(|| bad("not symmetrizable"))?;
    let simple_roots: Vec<Weight> = (0..n).map(|j| Weight::new(&(0..n).map(|i| cartan[i][j]).collect::<Vec<_>>())).collect();

    // (ω_i, ω_j) = (C^{-1})_{ij} d_i / 2
    let half = Q::new(1, 2);
    let gram: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| cartan_inverse[i][j] * lengths[i] * half).collect()).collect();
    let denom = gram.iter().flatten().fold(1i64, |l, q| num_integer::lcm(l, *q.denom()));
    let gram_scaled: Vec<Vec<i64>> =
        gram.iter().map(|r| r.iter().map(|q| (*q * Q::from_integer(denom)).to_integer()).collect()).collect();

    let positive_roots = positive_roots_by_closure(&cartan, &lengths, &simple_roots);
    if positive_roots.len() != ty.positive_root_count() {
        return Err(bad("positive root count does not match the type"));
    }
    let mut two_rho = vec![0i64; n];
    for r in &positive_roots {
        for (t, &c) in two_rho.iter_mut().zip(r.coroot.coords()) {
            *t += c as i64;
        }
    }
    let datum = RootDatum {
        ty,
        cartan,
        cartan_inverse,
        lengths,
        simple_roots,
        positive_roots,
        gram,
        gram_scaled,
        two_rho,
        caches: Default::default(),
    };
    for i in 0..n {
        if datum.two_rho_pairing(&datum.simple_roots[i]) != 2 {
            return Err(bad("<ρ∨, α> != 1 for a simple root"));
        }
    }
    Ok(datum)
}

fn positive_roots_by_closure(cartan: &[Vec<i32>], lengths: &[Q], simple: &[Weight]) -> Vec<Root> {
    let n = cartan.len();
    let mut seen: std::collections::BTreeSet<Vec<i32>> = Default::default();
    let mut stack: Vec<Vec<i32>> = (0..n).map(|i| (0..n).map(|j| i32::from(i == j)).collect()).collect();
    while let Some(b) = stack.pop() {
        if !seen.insert(b.clone()) {
            continue;
        }
        for i in 0..n {
            let p: i32 = (0..n).map(|j| cartan[i][j] * b[j]).sum();
            if p == 0 {
                continue;
            }
            let mut r = b.clone();
            r[i] -= p;
            if !seen.contains(&r) {
                stack.push(r);
            }
        }
    }
    let half = Q::new(1, 2);
    seen.into_iter()
        .filter(|b| b.iter().all(|&x| x >= 0))
        .map(|b| {
            let mut weight = Weight::zero(n);
            for (j, &a) in b.iter().enumerate() {
                weight = weight.add_scaled(&simple[j], a);
            }
            let mut norm = Q::zero();
            for j in 0..n {
                for k in 0..n {
                    norm += Q::from_integer((b[j] * b[k] * cartan[j][k]) as i64) * lengths[j] * half;
                }
            }
            let coroot: Vec<i32> = (0..n)
                .map(|k| {
                    let c = Q::from_integer(b[k] as i64) * lengths[k] / norm;
                    debug_assert!(c.is_integer());
                    c.to_integer() as i32
                })
                .collect();
            Root { weight, coeffs: Weight::new(&b), coroot: Weight::new(&coroot), norm }
        })
        .collect()
}

/// Process-wide shared datum per type, so orbit caches are reused.
pub fn shared_root_datum(ty: SimpleType) -> Result<Arc<RootDatum>> {
    static SHARED: OnceLock<Mutex<HashMap<SimpleType, Arc<RootDatum>>>> = OnceLock::new();
    let map = SHARED.get_or_init(Default::default);
    if let Some(d) = map.lock().expect("datum registry poisoned").get(&ty) {
        return Ok(d.clone());
    }
    let d = Arc::new(build_root_datum(ty)?);
    Ok(map.lock().expect("datum registry poisoned").entry(ty).or_insert(d).clone())
}
