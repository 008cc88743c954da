#![allow(dead_code)]

use std::collections::BTreeSet;

use linkdyn::diagram::{
    link_connected_components, standard_matrix, CartanMatrix, ComponentType, LinkMode, LinkableDynkinDiagram,
    Series,
};
use proptest::prelude::*;

pub const FAMILY_COMPONENTS: [ComponentType; 5] = [
    ComponentType::Finite(Series::A, 1),
    ComponentType::Finite(Series::A, 2),
    ComponentType::Finite(Series::A, 3),
    ComponentType::Finite(Series::B, 2),
    ComponentType::G2,
];

/// Matchings between vertices of distinct components, of size at most `max_pairs`.
fn matchings(owner: &[usize], max_pairs: usize) -> Vec<Vec<(usize, usize)>> {
    let s = owner.len();
    let candidates: Vec<(usize, usize)> =
        (0..s).flat_map(|i| (i + 1..s).map(move |j| (i, j))).filter(|&(i, j)| owner[i] != owner[j]).collect();
    let mut out = vec![vec![]];
    fn extend(
        from: usize,
        cur: &mut Vec<(usize, usize)>,
        cands: &[(usize, usize)],
        max: usize,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if cur.len() == max {
            return;
        }
        for t in from..cands.len() {
            let (i, j) = cands[t];
            if cur.iter().any(|&(a, b)| a == i || a == j || b == i || b == j) {
                continue;
            }
            cur.push((i, j));
            out.push(cur.clone());
            extend(t + 1, cur, cands, max, out);
            cur.pop();
        }
    }
    extend(0, &mut Vec::new(), &candidates, max_pairs, &mut out);
    out
}

/// Every link-connected diagram whose components come from [`FAMILY_COMPONENTS`]
/// (as a nondecreasing list), with at most `max_vertices` vertices and at most
/// `max_pairs` linked pairs.
pub fn exhaustive_family(max_vertices: usize, max_pairs: usize) -> Vec<LinkableDynkinDiagram> {
    let mut lists: Vec<Vec<usize>> = Vec::new();
    fn grow(start: usize, cur: &mut Vec<usize>, size: usize, max: usize, lists: &mut Vec<Vec<usize>>) {
        for t in start..FAMILY_COMPONENTS.len() {
            let n = standard_matrix(FAMILY_COMPONENTS[t]).unwrap().size();
            if size + n > max {
                continue;
            }
            cur.push(t);
            lists.push(cur.clone());
            grow(t, cur, size + n, max, lists);
            cur.pop();
        }
    }
    grow(0, &mut Vec::new(), 0, max_vertices, &mut lists);
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for list in lists.into_iter().filter(|l| l.len() <= max_pairs + 1) {
        let parts: Vec<CartanMatrix> = list.iter().map(|&t| standard_matrix(FAMILY_COMPONENTS[t]).unwrap()).collect();
        let refs: Vec<&CartanMatrix> = parts.iter().collect();
        let cartan = CartanMatrix::direct_sum(&refs);
        let owner: Vec<usize> = parts.iter().enumerate().flat_map(|(c, m)| std::iter::repeat(c).take(m.size())).collect();
        for pairs in matchings(&owner, max_pairs) {
            let d = LinkableDynkinDiagram::new(cartan.clone(), &pairs, &pairs, LinkMode::Standard).unwrap();
            if link_connected_components(&d).len() == 1 && seen.insert(format!("{:?}", (cartan.rows(), &pairs))) {
                out.push(d);
            }
        }
    }
    out
}

/// Random diagram on `2..=max` vertices with single or double edges and a
/// random matching of dotted edges that may join neighbours.
pub fn selflink_diagram(max: usize) -> impl Strategy<Value = LinkableDynkinDiagram> {
    (2..=max)
        .prop_flat_map(|s| {
            let pairs = s * (s - 1) / 2;
            (Just(s), proptest::collection::vec(0u8..6, pairs), proptest::collection::vec(0usize..s, s))
        })
        .prop_map(|(s, kinds, order)| {
            let mut rows = CartanMatrix::diagonal(s).rows();
            let mut t = 0;
            for i in 0..s {
                for j in i + 1..s {
                    let (a, b) = match kinds[t] {
                        0 | 1 => (-1, -1),
                        2 => (-2, -1),
                        3 => (-1, -2),
                        _ => (0, 0),
                    };
                    rows[i][j] = a;
                    rows[j][i] = b;
                    t += 1;
                }
            }
            // dotted edges: pair up a shuffled prefix of the vertices
            let mut used = vec![false; s];
            let mut links = Vec::new();
            let mut pending: Option<usize> = None;
            for v in order {
                if used[v] {
                    continue;
                }
                used[v] = true;
                match pending.take() {
                    Some(u) => links.push((u.min(v), u.max(v))),
                    None => pending = Some(v),
                }
            }
            let cartan = CartanMatrix::new(rows).unwrap();
            LinkableDynkinDiagram::new(cartan, &links, &links, LinkMode::SelfLink).unwrap()
        })
}

/// All edges `(min, max, dotted)` of a diagram.
pub fn all_edges(d: &LinkableDynkinDiagram) -> Vec<(usize, usize, bool)> {
    let s = d.size();
    let mut e = Vec::new();
    for i in 0..s {
        for j in i + 1..s {
            if d.a(i, j) != 0 {
                e.push((i, j, false));
            }
            if d.is_linkable(i, j) {
                e.push((i, j, true));
            }
        }
    }
    e
}

/// Cycles as edge sets, by testing every subset of edges for being one closed simple path.
pub fn brute_force_cycles(d: &LinkableDynkinDiagram) -> BTreeSet<Vec<(usize, usize, bool)>> {
    let edges = all_edges(d);
    assert!(edges.len() <= 20, "too many edges for subset enumeration");
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << edges.len()) {
        let chosen: Vec<(usize, usize, bool)> =
            (0..edges.len()).filter(|t| mask >> t & 1 == 1).map(|t| edges[t]).collect();
        let mut degree = vec![0; d.size()];
        for &(i, j, _) in &chosen {
            degree[i] += 1;
            degree[j] += 1;
        }
        if degree.iter().any(|&k| k != 0 && k != 2) {
            continue;
        }
        // connected: walk from one vertex
        let start = chosen[0].0;
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &(i, j, _) in &chosen {
                for (a, b) in [(i, j), (j, i)] {
                    if a == u && seen.insert(b) {
                        stack.push(b);
                    }
                }
            }
        }
        if seen.len() == degree.iter().filter(|&&k| k == 2).count() {
            let mut c = chosen;
            c.sort();
            out.insert(c);
        }
    }
    out
}

/// `+1` when `u -> v` follows a double arrow (`a_uv = -2`), `-1` against it, else 0; read off the raw entries.
pub fn double_direction(d: &LinkableDynkinDiagram, u: usize, v: usize, dotted: bool) -> i64 {
    if dotted {
        return 0;
    }
    match (d.a(u, v), d.a(v, u)) {
        (-2, -1) => 1,
        (-1, -2) => -1,
        _ => 0,
    }
}

/// Height along explicit steps `(from, to, dotted)`.
pub fn height_oracle(d: &LinkableDynkinDiagram, steps: &[(usize, usize, bool)]) -> u64 {
    let mut h: i64 = 0;
    for &(u, v, dotted) in steps {
        match double_direction(d, u, v, dotted) {
            1 => h = (h - 1).max(0),
            -1 => h += 1,
            _ => {}
        }
    }
    h as u64
}
