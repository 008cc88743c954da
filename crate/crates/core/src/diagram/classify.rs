//! Finite and affine type recognition of connection components.

use std::fmt;

use petgraph::algo::is_isomorphic_matching;
use petgraph::graph::DiGraph;

use super::{CartanMatrix, LinkableDynkinDiagram};

/// Cartan type of an indecomposable component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentType {
    /// Finite type `X_n`.
    Finite(Series, usize),
    /// Affine type `X_n^(r)` in the usual twisted/untwisted labelling.
    Affine(Series, usize, u8),
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl ComponentType {
    pub const G2: ComponentType = ComponentType::Finite(Series::G, 2);
    pub const A1_AFFINE: ComponentType = ComponentType::Affine(Series::A, 1, 1);
    pub const A2_TWISTED: ComponentType = ComponentType::Affine(Series::A, 2, 2);

    pub fn is_finite(self) -> bool {
        matches!(self, ComponentType::Finite(..))
    }

    pub fn is_affine(self) -> bool {
        matches!(self, ComponentType::Affine(..))
    }
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentType::Finite(s, n) => write!(f, "{s:?}_{n}"),
            ComponentType::Affine(s, n, r) => write!(f, "{s:?}_{n}^({r})"),
            ComponentType::Other => f.write_str("other"),
        }
    }
}

struct Builder {
    n: usize,
    rows: Vec<Vec<i64>>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder {
            n,
            rows: CartanMatrix::diagonal(n).rows(),
        }
    }
    /// Sets `a_ij = a`, `a_ji = b`.
    fn edge(mut self, i: usize, j: usize, a: i64, b: i64) -> Self {
        self.rows[i][j] = a;
        self.rows[j][i] = b;
        self
    }
    fn chain(mut self, from: usize, to: usize) -> Self {
        for v in from..to {
            self = self.edge(v, v + 1, -1, -1);
        }
        self
    }
    fn build(self) -> CartanMatrix {
        debug_assert_eq!(self.rows.len(), self.n);
        CartanMatrix::new(self.rows).expect("catalog matrices are valid")
    }
}

// The row of the shorter root carries the larger |a_ij|.

fn finite_matrix(series: Series, n: usize) -> Option<CartanMatrix> {
    use Series::*;
    let m = match (series, n) {
        (A, n) if n >= 1 => Builder::new(n).chain(0, n - 1),
        (B, n) if n >= 2 => Builder::new(n).chain(0, n - 2).edge(n - 1, n - 2, -2, -1),
        (C, n) if n >= 3 => Builder::new(n).chain(0, n - 2).edge(n - 2, n - 1, -2, -1),
        (D, n) if n >= 4 => Builder::new(n).chain(0, n - 2).edge(n - 3, n - 1, -1, -1),
        (E, 6..=8) => Builder::new(n).chain(0, n - 2).edge(2, n - 1, -1, -1),
        (F, 4) => Builder::new(4)
            .edge(0, 1, -1, -1)
            .edge(2, 1, -2, -1)
            .edge(2, 3, -1, -1),
        (G, 2) => Builder::new(2).edge(1, 0, -3, -1),
        _ => return None,
    };
    Some(m.build())
}

/// Affine matrices; `n` is the Kac label, the matrix has the listed vertex count.
fn affine_matrix(series: Series, n: usize, twist: u8) -> Option<CartanMatrix> {
    use Series::*;
    let m = match (series, n, twist) {
        (A, 1, 1) => Builder::new(2).edge(0, 1, -2, -2),
        (A, n, 1) if n >= 2 => Builder::new(n + 1).chain(0, n).edge(n, 0, -1, -1),
        (B, n, 1) if n >= 3 => {
            Builder::new(n + 1)
                .chain(1, n - 1)
                .edge(0, 2, -1, -1)
                .edge(n, n - 1, -2, -1)
        }
        (C, n, 1) if n >= 2 => {
            Builder::new(n + 1)
                .chain(1, n - 1)
                .edge(1, 0, -2, -1)
                .edge(n - 1, n, -2, -1)
        }
        (D, n, 1) if n >= 4 => {
            Builder::new(n + 1)
                .chain(1, n - 1)
                .edge(0, 2, -1, -1)
                .edge(n - 2, n, -1, -1)
        }
        (E, 6, 1) => Builder::new(7)
            .chain(0, 4)
            .edge(2, 5, -1, -1)
            .edge(5, 6, -1, -1),
        (E, 7, 1) => Builder::new(8).chain(0, 6).edge(3, 7, -1, -1),
        (E, 8, 1) => Builder::new(9).chain(0, 7).edge(2, 8, -1, -1),
        (F, 4, 1) => Builder::new(5)
            .chain(0, 2)
            .edge(3, 2, -2, -1)
            .edge(3, 4, -1, -1),
        (G, 2, 1) => Builder::new(3).edge(0, 1, -1, -1).edge(2, 1, -3, -1),
        (A, 2, 2) => Builder::new(2).edge(0, 1, -4, -1),
        // A_{2l}^(2), l >= 2: both arrows point the same way along the chain
        (A, m, 2) if m >= 4 && m % 2 == 0 => {
            let l = m / 2;
            Builder::new(l + 1)
                .chain(1, l - 1)
                .edge(0, 1, -2, -1)
                .edge(l - 1, l, -2, -1)
        }
        // A_{2l-1}^(2), l >= 3: fork at one end, C-type double edge at the other
        (A, m, 2) if m >= 5 && m % 2 == 1 => {
            let l = (m + 1) / 2;
            Builder::new(l + 1)
                .chain(1, l - 1)
                .edge(0, 2, -1, -1)
                .edge(l - 1, l, -2, -1)
        }
        // D_{l+1}^(2), l >= 2: both end vertices short
        (D, m, 2) if m >= 3 => {
            let l = m - 1;
            Builder::new(l + 1)
                .chain(1, l - 1)
                .edge(0, 1, -2, -1)
                .edge(l, l - 1, -2, -1)
        }
        (E, 6, 2) => Builder::new(5)
            .chain(0, 2)
            .edge(2, 3, -2, -1)
            .edge(3, 4, -1, -1),
        (D, 4, 3) => Builder::new(3).edge(0, 1, -1, -1).edge(1, 2, -3, -1),
        _ => return None,
    };
    Some(m.build())
}

fn candidates(size: usize) -> Vec<(ComponentType, CartanMatrix)> {
    use Series::*;
    let mut out = Vec::new();
    for s in [A, B, C, D, E, F, G] {
        if let Some(m) = finite_matrix(s, size) {
            out.push((ComponentType::Finite(s, size), m));
        }
    }
    let mut push_affine = |s: Series, n: usize, r: u8| {
        if let Some(m) = affine_matrix(s, n, r) {
            if m.size() == size {
                out.push((ComponentType::Affine(s, n, r), m));
            }
        }
    };
    if size >= 2 {
        let l = size - 1;
        for s in [A, B, C, D, E, F, G] {
            push_affine(s, l, 1);
        }
        push_affine(A, 2 * l, 2);
        push_affine(A, 2 * l - 1, 2);
        push_affine(D, l + 1, 2);
        push_affine(E, 6, 2);
        push_affine(D, 4, 3);
    }
    out
}

fn as_graph(m: &CartanMatrix) -> DiGraph<(), i64> {
    let mut g = DiGraph::new();
    let nodes: Vec<_> = (0..m.size()).map(|_| g.add_node(())).collect();
    for i in 0..m.size() {
        for j in 0..m.size() {
            if i != j && m.get(i, j) != 0 {
                g.add_edge(nodes[i], nodes[j], m.get(i, j));
            }
        }
    }
    g
}

/// Type of an indecomposable Cartan matrix, `Other` when it is neither finite nor affine.
pub fn classify_matrix(m: &CartanMatrix) -> ComponentType {
    let g = as_graph(m);
    for (ty, candidate) in candidates(m.size()) {
        if is_isomorphic_matching(&g, &as_graph(&candidate), |_, _| true, |a, b| a == b) {
            return ty;
        }
    }
    ComponentType::Other
}

/// Partition into connection components of the undotted diagram, each labelled.
pub fn classify_components(d: &LinkableDynkinDiagram) -> Vec<(Vec<usize>, ComponentType)> {
    d.components()
        .into_iter()
        .map(|vs| {
            let ty = classify_matrix(&d.cartan().submatrix(&vs));
            (vs, ty)
        })
        .collect()
}

/// The catalogue matrix of a type, for building test and example diagrams.
pub fn standard_matrix(ty: ComponentType) -> Option<CartanMatrix> {
    match ty {
        ComponentType::Finite(s, n) => finite_matrix(s, n),
        ComponentType::Affine(s, n, r) => affine_matrix(s, n, r),
        ComponentType::Other => None,
    }
}
