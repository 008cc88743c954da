use std::collections::BTreeSet;
use std::fmt;

use super::{Arrow, CartanMatrix, DiagramError, EdgeKind};

/// Whether linkable vertices must sit in different components of the undotted diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum LinkMode {
    #[default]
    Standard,
    /// Linkings inside one component are allowed.
    SelfLink,
}

/// A Cartan matrix together with dotted edges (linkable pairs) and linked flags.
///
/// Vertices are 0-based here; everything user-facing prints them 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkableDynkinDiagram {
    cartan: CartanMatrix,
    partner: Vec<Option<usize>>,
    linked: BTreeSet<(usize, usize)>,
    mode: LinkMode,
}

fn ordered(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

impl LinkableDynkinDiagram {
    pub fn new(
        cartan: CartanMatrix,
        linkable: &[(usize, usize)],
        linked: &[(usize, usize)],
        mode: LinkMode,
    ) -> Result<Self, DiagramError> {
        let s = cartan.size();
        for i in 0..s {
            for j in i + 1..s {
                if EdgeKind::from_entries(cartan.get(i, j), cartan.get(j, i)).is_none() {
                    return Err(DiagramError::UnsupportedEdge {
                        i: i + 1,
                        j: j + 1,
                        a_ij: cartan.get(i, j),
                        a_ji: cartan.get(j, i),
                    });
                }
            }
        }
        let mut partner = vec![None; s];
        for &(i, j) in linkable {
            if i >= s || j >= s {
                return Err(DiagramError::VertexOutOfRange {
                    vertex: i.max(j) + 1,
                    size: s,
                });
            }
            if i == j {
                return Err(DiagramError::SelfPair { vertex: i + 1 });
            }
            for v in [i, j] {
                let other = if v == i { j } else { i };
                match partner[v] {
                    Some(p) if p == other => {}
                    Some(_) => return Err(DiagramError::SharedVertex { vertex: v + 1 }),
                    None => partner[v] = Some(other),
                }
            }
        }
        let mut linked_set = BTreeSet::new();
        for &(i, j) in linked {
            if i >= s || j >= s || partner[i] != Some(j) {
                return Err(DiagramError::LinkedNotLinkable { i: i + 1, j: j + 1 });
            }
            linked_set.insert(ordered(i, j));
        }
        let d = LinkableDynkinDiagram {
            cartan,
            partner,
            linked: linked_set,
            mode,
        };
        if mode == LinkMode::Standard {
            let comp = d.component_index();
            for (i, j) in d.linkable_pairs() {
                if comp[i] == comp[j] {
                    return Err(DiagramError::SameComponent { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(d)
    }

    /// A diagram without dotted edges.
    pub fn unlinked(cartan: CartanMatrix) -> Self {
        let s = cartan.size();
        LinkableDynkinDiagram {
            cartan,
            partner: vec![None; s],
            linked: BTreeSet::new(),
            mode: LinkMode::Standard,
        }
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn size(&self) -> usize {
        self.cartan.size()
    }

    pub fn mode(&self) -> LinkMode {
        self.mode
    }

    #[inline]
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan.get(i, j)
    }

    pub fn partner(&self, i: usize) -> Option<usize> {
        self.partner[i]
    }

    pub fn is_linkable(&self, i: usize, j: usize) -> bool {
        self.partner[i] == Some(j)
    }

    /// `λ_ij`, symmetric in its arguments.
    pub fn lambda(&self, i: usize, j: usize) -> bool {
        self.linked.contains(&ordered(i, j))
    }

    /// Linkable pairs `(i, j)` with `i < j`, ascending.
    pub fn linkable_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.size())
            .filter_map(|i| self.partner[i].filter(|&j| i < j).map(|j| (i, j)))
            .collect()
    }

    pub fn linked_pairs(&self) -> Vec<(usize, usize)> {
        self.linked.iter().copied().collect()
    }

    pub fn edge(&self, i: usize, j: usize) -> (EdgeKind, Arrow) {
        EdgeKind::from_entries(self.a(i, j), self.a(j, i)).expect("validated at construction")
    }

    fn component_index(&self) -> Vec<usize> {
        label_components(self.size(), |i| self.cartan.neighbours(i).collect())
    }

    /// Connection components of the undotted diagram, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        group_labels(&self.component_index())
    }

    fn link_component_index(&self) -> Vec<usize> {
        label_components(self.size(), |i| {
            let mut n: Vec<usize> = self.cartan.neighbours(i).collect();
            n.extend(self.partner[i]);
            n
        })
    }

    pub fn is_link_connected(&self) -> bool {
        self.link_component_index().iter().all(|&c| c == 0)
    }

    /// Induced sub-diagram on `vertices` (new labels follow the given order).
    ///
    /// Dotted edges leaving the vertex set are dropped.
    pub fn induced(&self, vertices: &[usize]) -> LinkableDynkinDiagram {
        let cartan = self.cartan.submatrix(vertices);
        let pos = |v: usize| vertices.iter().position(|&x| x == v);
        let mut partner = vec![None; vertices.len()];
        let mut linked = BTreeSet::new();
        for (new_i, &old_i) in vertices.iter().enumerate() {
            if let Some(new_j) = self.partner[old_i].and_then(pos) {
                partner[new_i] = Some(new_j);
                if self.lambda(old_i, vertices[new_j]) {
                    linked.insert(ordered(new_i, new_j));
                }
            }
        }
        LinkableDynkinDiagram {
            cartan,
            partner,
            linked,
            mode: self.mode,
        }
    }

    /// Disjoint union; vertices of later parts are shifted past earlier ones.
    pub fn disjoint_union(parts: &[&LinkableDynkinDiagram]) -> LinkableDynkinDiagram {
        let cartan = CartanMatrix::direct_sum(&parts.iter().map(|p| &p.cartan).collect::<Vec<_>>());
        let mut partner = Vec::new();
        let mut linked = BTreeSet::new();
        let mut offset = 0;
        let mut mode = LinkMode::Standard;
        for p in parts {
            partner.extend(p.partner.iter().map(|x| x.map(|j| j + offset)));
            linked.extend(p.linked.iter().map(|&(i, j)| (i + offset, j + offset)));
            offset += p.size();
            if p.mode == LinkMode::SelfLink {
                mode = LinkMode::SelfLink;
            }
        }
        LinkableDynkinDiagram {
            cartan,
            partner,
            linked,
            mode,
        }
    }
}

/// A link-connected piece of a diagram, keeping the original vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubDiagram {
    /// Original (0-based) labels, ascending; position `t` is vertex `t` of `diagram`.
    pub vertices: Vec<usize>,
    pub diagram: LinkableDynkinDiagram,
}

/// Connected components of the graph of Cartan edges and dotted edges.
pub fn link_connected_components(d: &LinkableDynkinDiagram) -> Vec<SubDiagram> {
    group_labels(&d.link_component_index())
        .into_iter()
        .map(|vertices| SubDiagram {
            diagram: d.induced(&vertices),
            vertices,
        })
        .collect()
}

fn label_components(n: usize, neighbours: impl Fn(usize) -> Vec<usize>) -> Vec<usize> {
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for root in 0..n {
        if label[root] != usize::MAX {
            continue;
        }
        label[root] = next;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for w in neighbours(v) {
                if label[w] == usize::MAX {
                    label[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    label
}

fn group_labels(label: &[usize]) -> Vec<Vec<usize>> {
    let count = label.iter().copied().max().map_or(0, |m| m + 1);
    let mut groups = vec![Vec::new(); count];
    for (v, &l) in label.iter().enumerate() {
        groups[l].push(v);
    }
    groups
}

/// Two linkable pairs whose Cartan entries disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkingViolation {
    pub first: (usize, usize),
    pub second: (usize, usize),
    /// Each entry `((i, j), (k, l))` records `a_ij != a_kl` with `i ⋯ k` and `j ⋯ l`.
    pub mismatches: Vec<((usize, usize), (usize, usize))>,
}

impl fmt::Display for LinkingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "linkable pairs {}~{} and {}~{} disagree:",
            self.first.0 + 1,
            self.first.1 + 1,
            self.second.0 + 1,
            self.second.1 + 1
        )?;
        for ((i, j), (k, l)) in &self.mismatches {
            write!(f, " a_{},{} != a_{},{}", i + 1, j + 1, k + 1, l + 1)?;
        }
        Ok(())
    }
}

/// For every two linkable pairs `i ⋯ k`, `j ⋯ l`, requires `a_ij = a_kl`
/// under both matchings of the pairs and both orientations.
pub fn pairwise_linking_consistency(d: &LinkableDynkinDiagram) -> Vec<LinkingViolation> {
    let pairs = d.linkable_pairs();
    let mut out = Vec::new();
    for (x, &(i, k)) in pairs.iter().enumerate() {
        for &(j, l) in &pairs[x + 1..] {
            let mut mismatches = Vec::new();
            // i⋯k with j⋯l, and i⋯k with l⋯j
            for (jj, ll) in [(j, l), (l, j)] {
                if d.a(i, jj) != d.a(k, ll) {
                    mismatches.push(((i, jj), (k, ll)));
                }
                if d.a(jj, i) != d.a(ll, k) {
                    mismatches.push(((jj, i), (ll, k)));
                }
            }
            if !mismatches.is_empty() {
                out.push(LinkingViolation {
                    first: (i, k),
                    second: (j, l),
                    mismatches,
                });
            }
        }
    }
    out
}
