//! Brute-force oracles shared by the integration tests.  Everything here is
//! built from the Cartan matrix alone with plain integer matrices, so it
//! shares no code path with the library beyond the input data.
#![allow(dead_code)]

pub mod props;

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use num_rational::Rational64;
use wittflag_core::{shared_root_datum, RootDatum, SimpleType, SubsetMask, Weight};

pub type Vector = Vec<i64>;
pub type Mat = Vec<Vec<i64>>;

pub fn datum(name: &str) -> Arc<RootDatum> {
    shared_root_datum(name.parse().expect("type name")).expect("datum")
}

pub fn types_up_to_rank(max: usize) -> Vec<SimpleType> {
    SimpleType::all().into_iter().filter(|t| t.rank <= max).collect()
}

pub fn all_subsets(rank: usize) -> impl Iterator<Item = SubsetMask> {
    (0u16..1 << rank).map(SubsetMask::from_bits)
}

pub fn golden(name: &str) -> String {
    let path = format!("{}/../../tables/{name}.tsv", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub fn to_vec(w: &Weight) -> Vector {
    w.coords().iter().map(|&x| i64::from(x)).collect()
}

pub fn to_weight(v: &[i64]) -> Weight {
    Weight::new(&v.iter().map(|&x| x as i32).collect::<Vec<_>>())
}

pub fn cartan(d: &RootDatum) -> Mat {
    d.cartan().iter().map(|r| r.iter().map(|&x| i64::from(x)).collect()).collect()
}

/// `α_j` in ω-coordinates: column `j` of the Cartan matrix.
pub fn simple_root(c: &Mat, j: usize) -> Vector {
    c.iter().map(|row| row[j]).collect()
}

pub fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

/// `s_i(λ) = λ - λ_i α_i`.
pub fn reflection(c: &Mat, i: usize) -> Mat {
    let n = c.len();
    let mut m = identity(n);
    for (r, row) in m.iter_mut().enumerate() {
        row[i] -= c[r][i];
    }
    m
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

pub fn apply(m: &Mat, v: &[i64]) -> Vector {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

pub fn neg(m: &Mat) -> Mat {
    m.iter().map(|r| r.iter().map(|x| -x).collect()).collect()
}

pub fn core_matrix(w: &wittflag_core::WeylElement) -> Mat {
    w.matrix().iter().map(|r| r.iter().map(|&x| i64::from(x)).collect()).collect()
}

/// A finite reflection group enumerated element by element, with reduced
/// words (0-based, leftmost letter outermost) and inverses from the search.
pub struct Group {
    pub elements: Vec<Mat>,
    pub lengths: Vec<usize>,
    pub words: Vec<Vec<usize>>,
    pub inverses: Vec<Mat>,
}

impl Group {
    pub fn generated(c: &Mat, nodes: SubsetMask) -> Group {
        let gens: Vec<(usize, Mat)> = nodes.iter().map(|i| (i, reflection(c, i))).collect();
        let id = identity(c.len());
        let mut seen: HashSet<Mat> = HashSet::from([id.clone()]);
        let mut g = Group { elements: vec![id.clone()], lengths: vec![0], words: vec![Vec::new()], inverses: vec![id] };
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for (i, s) in &gens {
                let x = mul(&g.elements[k], s);
                if seen.insert(x.clone()) {
                    let mut word = g.words[k].clone();
                    word.push(*i);
                    g.inverses.push(mul(s, &g.inverses[k]));
                    g.elements.push(x);
                    g.lengths.push(g.lengths[k] + 1);
                    g.words.push(word);
                    queue.push_back(g.elements.len() - 1);
                }
            }
        }
        g
    }

    pub fn full(d: &RootDatum) -> Group {
        let c = cartan(d);
        Group::generated(&c, SubsetMask::full(c.len()))
    }

    pub fn longest(&self) -> &Mat {
        let (k, _) = self.lengths.iter().enumerate().max_by_key(|(_, l)| **l).expect("nonempty group");
        &self.elements[k]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }
}

/// `[J] = -w_o^J`, from the enumerated parabolic subgroup.
pub fn duality(c: &Mat, j: SubsetMask) -> Mat {
    neg(Group::generated(c, j).longest())
}

/// `J ~ K` iff some `w` maps the simple roots of `J` onto those of `K`.
pub fn equivalent_brute(g: &Group, c: &Mat, j: SubsetMask, k: SubsetMask) -> bool {
    if j.len() != k.len() {
        return false;
    }
    let target: HashSet<Vector> = k.iter().map(|i| simple_root(c, i)).collect();
    let roots: Vec<Vector> = j.iter().map(|i| simple_root(c, i)).collect();
    g.elements.iter().any(|w| roots.iter().all(|r| target.contains(&apply(w, r))))
}

/// `σ ~ τ` iff `wσ = τw` for some `w`.
pub fn conjugate_brute(g: &Group, sigma: &Mat, tau: &Mat) -> bool {
    g.elements.iter().any(|w| mul(w, sigma) == mul(tau, w))
}

/// Weyl orbit by breadth-first search over simple reflections.
pub fn orbit(c: &Mat, v: &[i64]) -> HashSet<Vector> {
    let n = c.len();
    let mut seen = HashSet::from([v.to_vec()]);
    let mut queue = VecDeque::from([v.to_vec()]);
    while let Some(x) = queue.pop_front() {
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            let y: Vector = (0..n).map(|r| x[r] - x[i] * c[r][i]).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Positive coroots as covectors in the basis `α_i∨`, found by reflecting the
/// simple coroots: `s_i(c) = c - c(α_i) α_i∨`.
pub fn positive_coroots(c: &Mat) -> Vec<Vector> {
    let n = c.len();
    let unit = |i: usize| -> Vector { (0..n).map(|k| i64::from(k == i)).collect() };
    let mut seen: HashSet<Vector> = (0..n).map(unit).collect();
    let mut queue: VecDeque<Vector> = (0..n).map(unit).collect();
    while let Some(x) = queue.pop_front() {
        for i in 0..n {
            let pairing: i64 = (0..n).map(|k| x[k] * c[k][i]).sum();
            let mut y = x.clone();
            y[i] -= pairing;
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Vector> = seen.into_iter().filter(|v| v.iter().all(|&x| x >= 0)).collect();
    out.sort();
    out
}

/// Solve `C x = v` over the rationals: the simple-root coordinates of `v`.
pub fn root_coordinates(c: &Mat, v: &[i64]) -> Vec<Rational64> {
    let n = c.len();
    let mut a: Vec<Vec<Rational64>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational64> = c[i].iter().map(|&x| Rational64::from_integer(x)).collect();
            row.push(Rational64::from_integer(v[i]));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| a[r][col] != Rational64::from_integer(0)).expect("Cartan matrix is invertible");
        a.swap(col, p);
        let pivot = a[col][col];
        for x in a[col].iter_mut() {
            *x /= pivot;
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col];
                if f != Rational64::from_integer(0) {
                    let src = a[col].clone();
                    for (x, s) in a[r].iter_mut().zip(&src) {
                        *x -= f * s;
                    }
                }
            }
        }
    }
    a.into_iter().map(|r| r[n]).collect()
}

/// Whether `p` lies in the convex hull of `points` (full-dimensional, rank
/// at most 3), by enumerating supporting hyperplanes through `n` points.
pub fn in_hull(points: &[Vector], p: &[i64]) -> bool {
    let n = p.len();
    assert!((1..=3).contains(&n), "hull oracle handles rank 1 to 3");
    if n == 1 {
        let lo = points.iter().map(|q| q[0]).min().unwrap();
        let hi = points.iter().map(|q| q[0]).max().unwrap();
        return lo <= p[0] && p[0] <= hi;
    }
    let dot = |a: &[i64], b: &[i64]| -> i64 { a.iter().zip(b).map(|(x, y)| x * y).sum() };
    let sub = |a: &[i64], b: &[i64]| -> Vector { a.iter().zip(b).map(|(x, y)| x - y).collect() };
    let normal = |base: &[i64], others: &[&Vector]| -> Vector {
        if n == 2 {
            let d = sub(others[0], base);
            vec![-d[1], d[0]]
        } else {
            let (u, v) = (sub(others[0], base), sub(others[1], base));
            vec![u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
        }
    };
    let m = points.len();
    let mut facets = 0;
    let mut check = |idx: &[usize]| -> bool {
        let others: Vec<&Vector> = idx[1..].iter().map(|&k| &points[k]).collect();
        let nv = normal(&points[idx[0]], &others);
        if nv.iter().all(|&x| x == 0) {
            return true;
        }
        let c = dot(&nv, &points[idx[0]]);
        let (mut lo, mut hi) = (false, false);
        for q in points {
            let s = dot(&nv, q) - c;
            lo |= s < 0;
            hi |= s > 0;
        }
        if lo && hi {
            return true;
        }
        facets += 1;
        let s = dot(&nv, p) - c;
        if lo {
            s <= 0
        } else {
            s >= 0
        }
    };
    let inside = if n == 2 {
        (0..m).all(|a| (a + 1..m).all(|b| check(&[a, b])))
    } else {
        (0..m).all(|a| (a + 1..m).all(|b| (b + 1..m).all(|e| check(&[a, b, e]))))
    };
    assert!(!inside || facets > 0, "degenerate hull");
    inside
}

/// Whether `v` is a non-negative integer combination of `basis`, given a
/// functional `f` positive on every basis element.
pub fn in_monoid(basis: &[Vector], f: &[i64], v: &[i64], memo: &mut HashMap<Vector, bool>) -> bool {
    if v.iter().all(|&x| x == 0) {
        return true;
    }
    let fv: i64 = f.iter().zip(v).map(|(a, b)| a * b).sum();
    if fv <= 0 {
        return false;
    }
    if let Some(&r) = memo.get(v) {
        return r;
    }
    let r = basis.iter().any(|b| {
        let rest: Vector = v.iter().zip(b).map(|(x, y)| x - y).collect();
        in_monoid(basis, f, &rest, memo)
    });
    memo.insert(v.to_vec(), r);
    r
}

/// A small integer functional positive on every vector, if one exists.
pub fn positive_functional(vs: &[Vector], n: usize) -> Option<Vector> {
    let range: Vec<i64> = (-3..=3).collect();
    let mut f = vec![-3i64; n];
    loop {
        if vs.iter().all(|v| v.iter().zip(&f).map(|(a, b)| a * b).sum::<i64>() > 0) {
            return Some(f);
        }
        let mut k = 0;
        loop {
            if k == n {
                return None;
            }
            if f[k] < *range.last().unwrap() {
                f[k] += 1;
                break;
            }
            f[k] = range[0];
            k += 1;
        }
    }
}

/// `|Σ_H/[H]|` from the component types, for F4 only.
pub fn f4_fixrank(h: SubsetMask) -> usize {
    // 1-2=>3-4: components meeting both 2 and 3 are B/C, the rest type A
    let nodes: Vec<usize> = h.iter().collect();
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for &v in &nodes {
        match comps.last_mut() {
            Some(c) if *c.last().unwrap() + 1 == v => c.push(v),
            _ => comps.push(vec![v]),
        }
    }
    comps
        .iter()
        .map(|c| {
            let k = c.len();
            if c.contains(&1) && c.contains(&2) {
                k
            } else {
                k.div_ceil(2)
            }
        })
        .sum()
}
