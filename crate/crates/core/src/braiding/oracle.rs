//! Exhaustive search for braiding matrices with entries in the `N`-th roots of unity.
//!
//! Independent of the constructive proof: diagonal exponents are enumerated
//! directly, and the off-diagonal entries are then found by solving the linear
//! system the defining identities impose on their exponents modulo `N`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;

use super::{verify, BraidingError, BraidingMatrix, RootExpr, VerifyMode};
use crate::arith::{is_prime, modulo};
use crate::cycles::GenusMode;
use crate::diagram::{classify_components, ComponentType, LinkMode, LinkableDynkinDiagram};
use crate::existence::FieldSpec;

/// Largest diagram the oracle accepts.
pub const ORACLE_MAX_VERTICES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    Found {
        n: u64,
        matrix: BraidingMatrix,
    },
    /// Nothing with root order at most the bound; not a proof of non-existence.
    NoneUpTo(u64),
}

impl OracleOutcome {
    pub fn found(&self) -> bool {
        matches!(self, OracleOutcome::Found { .. })
    }
}

impl fmt::Display for OracleOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleOutcome::Found { n, matrix } => write!(f, "witness at N = {n}\n{matrix}"),
            OracleOutcome::NoneUpTo(n) => writeln!(f, "none up to N = {n}"),
        }
    }
}

/// Searches root orders `N = 1..=n_max` in turn and returns the first verified matrix.
///
/// Within one `N`, diagonal assignments are tried in lexicographic order; the
/// result does not depend on `threads`.
pub fn brute_force_exists(
    d: &LinkableDynkinDiagram,
    field: &FieldSpec,
    mode: GenusMode,
    n_max: u64,
    threads: Option<usize>,
) -> Result<OracleOutcome, BraidingError> {
    if d.size() > ORACLE_MAX_VERTICES {
        return Err(BraidingError::ScaleExceeded {
            size: d.size(),
            limit: ORACLE_MAX_VERTICES,
        });
    }
    if d.mode() == LinkMode::SelfLink {
        return Err(BraidingError::SelfLinkMode);
    }
    let search = || search_all(d, field, mode, n_max);
    match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| BraidingError::ThreadPool(e.to_string()))?
            .install(search),
        None => search(),
    }
}

fn search_all(
    d: &LinkableDynkinDiagram,
    field: &FieldSpec,
    mode: GenusMode,
    n_max: u64,
) -> Result<OracleOutcome, BraidingError> {
    let g2 = classify_components(d)
        .iter()
        .any(|(_, t)| *t == ComponentType::G2);
    let verify_mode = match mode {
        GenusMode::Finite => VerifyMode::Finite,
        GenusMode::Affine => VerifyMode::AffineHomogeneous,
    };
    for n in 1..=n_max {
        if !field.has_primitive_root(n) || (mode == GenusMode::Affine && !(is_prime(n) && n > 3)) {
            continue;
        }
        let allowed = |x: u64| {
            let ord = n / n.gcd(&x);
            match mode {
                GenusMode::Finite => ord > 2 && !(g2 && ord % 3 == 0),
                GenusMode::Affine => ord == n,
            }
        };
        let mut diagonals = diagonal_assignments(d, n, &allowed);
        diagonals.sort_unstable();
        let hit = diagonals.par_iter().find_map_first(|x| {
            let m = complete(d, n, x)?;
            verify(&m, d, verify_mode).passed().then_some(m)
        });
        if let Some(matrix) = hit {
            return Ok(OracleOutcome::Found { n, matrix });
        }
    }
    Ok(OracleOutcome::NoneUpTo(n_max))
}

/// Breadth-first vertex order over Cartan and dotted edges, so that every
/// vertex after the first of its part has an earlier neighbour.
fn search_order(d: &LinkableDynkinDiagram) -> Vec<usize> {
    let s = d.size();
    let mut seen = vec![false; s];
    let mut order = Vec::with_capacity(s);
    for r in 0..s {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let mut head = order.len();
        order.push(r);
        while head < order.len() {
            let u = order[head];
            head += 1;
            let mut next: Vec<usize> = d.cartan().neighbours(u).collect();
            next.extend(d.partner(u));
            next.sort_unstable();
            for v in next {
                if !seen[v] {
                    seen[v] = true;
                    order.push(v);
                }
            }
        }
    }
    order
}

/// All `x in (Z/n)^s` with allowed entries, `a_uv x_u = a_vu x_v` on Cartan edges and `x_u = -x_v` on dotted edges.
fn diagonal_assignments(
    d: &LinkableDynkinDiagram,
    n: u64,
    allowed: &dyn Fn(u64) -> bool,
) -> Vec<Vec<u64>> {
    let order = search_order(d);
    let candidates: Vec<u64> = (0..n).filter(|&x| allowed(x)).collect();
    let mut out = Vec::new();
    let mut x = vec![0u64; d.size()];
    let mut placed = vec![false; d.size()];
    extend(d, n, &order, 0, &candidates, &mut x, &mut placed, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn extend(
    d: &LinkableDynkinDiagram,
    n: u64,
    order: &[usize],
    t: usize,
    candidates: &[u64],
    x: &mut Vec<u64>,
    placed: &mut Vec<bool>,
    out: &mut Vec<Vec<u64>>,
) {
    if t == order.len() {
        out.push(x.clone());
        return;
    }
    let v = order[t];
    for &c in candidates {
        let ok = d
            .cartan()
            .neighbours(v)
            .filter(|&u| placed[u])
            .all(|u| modulo(d.a(u, v) * x[u] as i64, n) == modulo(d.a(v, u) * c as i64, n))
            && d.partner(v)
                .filter(|&u| placed[u])
                .map_or(true, |u| (x[u] + c) % n == 0);
        if ok {
            x[v] = c;
            placed[v] = true;
            extend(d, n, order, t + 1, candidates, x, placed, out);
            placed[v] = false;
        }
    }
}

/// Exponents tied by `value(v) = sign * value(root) + offset (mod n)`.
struct Relations {
    n: i64,
    parent: Vec<usize>,
    sign: Vec<i64>,
    offset: Vec<i64>,
    /// Per root: constraints `c * R = r (mod n)`.
    on_root: BTreeMap<usize, Vec<(i64, i64)>>,
    consistent: bool,
}

impl Relations {
    fn new(count: usize, n: u64) -> Self {
        Relations {
            n: n as i64,
            parent: (0..count).collect(),
            sign: vec![1; count],
            offset: vec![0; count],
            on_root: BTreeMap::new(),
            consistent: true,
        }
    }

    fn find(&mut self, v: usize) -> (usize, i64, i64) {
        let p = self.parent[v];
        if p == v {
            return (v, 1, 0);
        }
        let (r, s, o) = self.find(p);
        // value(v) = sign[v] * (s * R + o) + offset[v]
        let sign = self.sign[v] * s;
        let offset = (self.sign[v] * o + self.offset[v]).rem_euclid(self.n);
        self.parent[v] = r;
        self.sign[v] = sign;
        self.offset[v] = offset;
        (r, sign, offset)
    }

    fn constrain(&mut self, root: usize, c: i64, r: i64) {
        let (c, r) = (c.rem_euclid(self.n), r.rem_euclid(self.n));
        if c == 0 {
            if r != 0 {
                self.consistent = false;
            }
            return;
        }
        self.on_root.entry(root).or_default().push((c, r));
    }

    /// `value(u) + value(v) = c`.
    fn sum(&mut self, u: usize, v: usize, c: i64) {
        let (ru, su, ou) = self.find(u);
        let (rv, sv, ov) = self.find(v);
        if ru == rv {
            self.constrain(ru, su + sv, c - ou - ov);
            return;
        }
        // R_v = sv (c - ou - ov) - sv su R_u
        let sign = -sv * su;
        let offset = (sv * (c - ou - ov)).rem_euclid(self.n);
        self.parent[rv] = ru;
        self.sign[rv] = sign;
        self.offset[rv] = offset;
        if let Some(list) = self.on_root.remove(&rv) {
            for (cc, rr) in list {
                self.constrain(ru, cc * sign, rr - cc * offset);
            }
        }
    }

    /// `value(u) = c`.
    fn fix(&mut self, u: usize, c: i64) {
        let (r, s, o) = self.find(u);
        self.constrain(r, s, c - o);
    }

    /// Smallest root values meeting all constraints, then every variable.
    fn solve(mut self) -> Option<Vec<i64>> {
        if !self.consistent {
            return None;
        }
        let count = self.parent.len();
        let mut root_value = BTreeMap::new();
        for (&root, list) in &self.on_root {
            let v = (0..self.n).find(|&r| {
                list.iter()
                    .all(|&(c, rhs)| (c * r - rhs).rem_euclid(self.n) == 0)
            })?;
            root_value.insert(root, v);
        }
        Some(
            (0..count)
                .map(|v| {
                    let (r, s, o) = self.find(v);
                    (s * root_value.get(&r).copied().unwrap_or(0) + o).rem_euclid(self.n)
                })
                .collect(),
        )
    }
}

/// Off-diagonal exponents for fixed diagonal exponents `x`, or `None` when the system is unsolvable.
fn complete(d: &LinkableDynkinDiagram, n: u64, x: &[u64]) -> Option<BraidingMatrix> {
    let s = d.size();
    let var = |i: usize, j: usize| i * s + j;
    let mut rel = Relations::new(s * s, n);
    for i in 0..s {
        rel.fix(var(i, i), x[i] as i64);
        for j in i + 1..s {
            rel.sum(var(i, j), var(j, i), d.a(i, j) * x[i] as i64);
        }
    }
    for i in 0..s {
        let Some(j) = d.partner(i) else { continue };
        for k in 0..s {
            rel.sum(var(k, i), var(k, j), 0);
        }
    }
    let values = rel.solve()?;
    let rows = (0..s)
        .map(|i| {
            (0..s)
                .map(|j| RootExpr::q_pow(n, values[var(i, j)]))
                .collect()
        })
        .collect();
    BraidingMatrix::new(n, rows).ok()
}
