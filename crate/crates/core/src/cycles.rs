//! Simple cycles of a linkable diagram and their invariants.
//!
//! A cycle runs over both Cartan edges and dotted edges. Cycles are stored in
//! a canonical rotation and direction: they start at their lowest vertex and
//! the first step goes to the lower of its two cycle neighbours (for a
//! two-vertex cycle through a Cartan and a dotted edge, the Cartan edge comes
//! first). That direction is also the tie-break for an ambiguous natural
//! orientation.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::diagram::{Arrow, EdgeKind, LinkableDynkinDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error(
        "{kind} edge between {i} and {j} lies on a cycle, which {mode:?} mode does not support"
    )]
    UnsupportedEdgeInMode {
        kind: EdgeKind,
        i: usize,
        j: usize,
        mode: GenusMode,
    },
    #[error("not a path: {0}")]
    NotAPath(String),
    #[error("vertex {0} is not on the cycle")]
    VertexNotOnCycle(usize),
    #[error("genus does not fit in 64 bits")]
    GenusOverflow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenusMode {
    Finite,
    Affine,
}

/// Traversal direction relative to the stored vertex order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Forward,
    Backward,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::Forward => Orientation::Backward,
            Orientation::Backward => Orientation::Forward,
        }
    }
}

/// Which arrows a natural orientation is taken with respect to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrowWeight {
    Double,
    Triple,
}

/// A closed, non-self-intersecting path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<usize>,
    /// `dotted[t]` tells whether the step `vertices[t] -> vertices[t + 1]` uses the dotted edge.
    dotted: Vec<bool>,
}

/// One traversed edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub from: usize,
    pub to: usize,
    pub dotted: bool,
}

impl Cycle {
    /// Vertices in canonical order, without repeating the first at the end.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Number of dotted edges.
    pub fn length(&self) -> usize {
        self.dotted.iter().filter(|&&x| x).count()
    }

    /// Steps around the cycle, starting at `start` (which must lie on it).
    pub fn steps_from(&self, start: usize, orientation: Orientation) -> Vec<Step> {
        let m = self.vertices.len();
        let pos = self
            .vertices
            .iter()
            .position(|&v| v == start)
            .expect("start on cycle");
        (0..m)
            .map(|t| match orientation {
                Orientation::Forward => {
                    let a = (pos + t) % m;
                    let b = (a + 1) % m;
                    Step {
                        from: self.vertices[a],
                        to: self.vertices[b],
                        dotted: self.dotted[a],
                    }
                }
                Orientation::Backward => {
                    let a = (pos + m - t) % m;
                    let b = (a + m - 1) % m;
                    Step {
                        from: self.vertices[a],
                        to: self.vertices[b],
                        dotted: self.dotted[b],
                    }
                }
            })
            .collect()
    }

    pub fn steps(&self, orientation: Orientation) -> Vec<Step> {
        self.steps_from(self.vertices[0], orientation)
    }

    /// Edges as `(min, max, dotted)`, sorted.
    pub fn edge_set(&self) -> Vec<(usize, usize, bool)> {
        let mut e: Vec<_> = self
            .steps(Orientation::Forward)
            .into_iter()
            .map(|s| (s.from.min(s.to), s.from.max(s.to), s.dotted))
            .collect();
        e.sort();
        e
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, v) in self.vertices.iter().enumerate() {
            write!(f, "{}{}", v + 1, if self.dotted[t] { " ~ " } else { " - " })?;
        }
        write!(f, "{}", self.vertices[0] + 1)
    }
}

/// Signed arrow count of a step: `+1` when it raises to the power, `-1` when it takes a root.
fn arrow_sign(d: &LinkableDynkinDiagram, step: Step, kind: EdgeKind) -> i64 {
    if step.dotted {
        return 0;
    }
    match d.edge(step.from, step.to) {
        (k, Arrow::Forward) if k == kind => 1,
        (k, Arrow::Backward) if k == kind => -1,
        _ => 0,
    }
}

fn adjacency(d: &LinkableDynkinDiagram) -> Vec<Vec<(usize, bool)>> {
    (0..d.size())
        .map(|v| {
            let mut n: Vec<(usize, bool)> = d.cartan().neighbours(v).map(|w| (w, false)).collect();
            if let Some(p) = d.partner(v) {
                n.push((p, true));
            }
            n.sort();
            n
        })
        .collect()
}

/// Every simple cycle of the mixed graph, once each, in canonical form.
pub fn enumerate_cycles(d: &LinkableDynkinDiagram) -> Vec<Cycle> {
    let adj = adjacency(d);
    let mut out = Vec::new();
    let mut on_path = vec![false; d.size()];
    for s in 0..d.size() {
        let mut vertices = vec![s];
        let mut dotted = Vec::new();
        on_path[s] = true;
        extend(&adj, s, &mut vertices, &mut dotted, &mut on_path, &mut out);
        on_path[s] = false;
    }
    out.sort();
    out
}

fn extend(
    adj: &[Vec<(usize, bool)>],
    start: usize,
    vertices: &mut Vec<usize>,
    dotted: &mut Vec<bool>,
    on_path: &mut [bool],
    out: &mut Vec<Cycle>,
) {
    let v = *vertices.last().unwrap();
    for &(w, is_dotted) in &adj[v] {
        if w == start {
            let m = vertices.len();
            let canonical = match m {
                1 => false,
                2 => !dotted[0] && is_dotted,
                _ => vertices[1] < vertices[m - 1],
            };
            if canonical {
                let mut dd = dotted.clone();
                dd.push(is_dotted);
                out.push(Cycle {
                    vertices: vertices.clone(),
                    dotted: dd,
                });
            }
        } else if w > start && !on_path[w] {
            on_path[w] = true;
            vertices.push(w);
            dotted.push(is_dotted);
            extend(adj, start, vertices, dotted, on_path, out);
            dotted.pop();
            vertices.pop();
            on_path[w] = false;
        }
    }
}

/// Signed `(double, triple)` arrow differences along `orientation`.
pub fn cycle_weights(d: &LinkableDynkinDiagram, c: &Cycle, orientation: Orientation) -> (i64, i64) {
    c.steps(orientation)
        .into_iter()
        .fold((0, 0), |(w2, w3), s| {
            (
                w2 + arrow_sign(d, s, EdgeKind::Double),
                w3 + arrow_sign(d, s, EdgeKind::Triple),
            )
        })
}

/// The orientation with at least as many arrows with it as against it.
pub fn natural_orientation(
    d: &LinkableDynkinDiagram,
    c: &Cycle,
    weight: ArrowWeight,
) -> Orientation {
    let (w2, w3) = cycle_weights(d, c, Orientation::Forward);
    let w = match weight {
        ArrowWeight::Double => w2,
        ArrowWeight::Triple => w3,
    };
    if w < 0 {
        Orientation::Backward
    } else {
        Orientation::Forward
    }
}

/// `2^w - (-1)^l`.
pub fn finite_genus(w: u32, l: usize) -> Result<u64, CycleError> {
    let p = 2u64.checked_pow(w).ok_or(CycleError::GenusOverflow)?;
    Ok(if l % 2 == 0 {
        p - 1
    } else {
        p.checked_add(1).ok_or(CycleError::GenusOverflow)?
    })
}

/// `3^w3 2^w2 - (-1)^l` when the natural orientations coincide, `|3^w3 - 2^w2 (-1)^l|` otherwise.
pub fn affine_genus(w2: u32, w3: u32, l: usize, coincide: bool) -> Result<u64, CycleError> {
    let p2 = i128::from(2u64.checked_pow(w2).ok_or(CycleError::GenusOverflow)?);
    let p3 = i128::from(3u64.checked_pow(w3).ok_or(CycleError::GenusOverflow)?);
    let sign = if l % 2 == 0 { 1 } else { -1 };
    let g = if coincide {
        p3 * p2 - sign
    } else {
        (p3 - p2 * sign).abs()
    };
    u64::try_from(g).map_err(|_| CycleError::GenusOverflow)
}

/// Weights, length and genus of one cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleInvariants {
    pub w2: u32,
    pub w3: u32,
    pub length: usize,
    pub genus: u64,
    /// Whether the natural 2- and 3-orientations agree (affine mode only).
    pub orientations_coincide: bool,
}

fn check_edges(d: &LinkableDynkinDiagram, c: &Cycle, mode: GenusMode) -> Result<(), CycleError> {
    for s in c.steps(Orientation::Forward) {
        if s.dotted {
            continue;
        }
        let (kind, _) = d.edge(s.from, s.to);
        let bad = match mode {
            GenusMode::Finite => matches!(
                kind,
                EdgeKind::Triple | EdgeKind::Quadruple | EdgeKind::A1Affine
            ),
            GenusMode::Affine => matches!(kind, EdgeKind::Quadruple | EdgeKind::A1Affine),
        };
        if bad {
            let (i, j) = (s.from.min(s.to), s.from.max(s.to));
            return Err(CycleError::UnsupportedEdgeInMode {
                kind,
                i: i + 1,
                j: j + 1,
                mode,
            });
        }
    }
    Ok(())
}

pub fn invariants(
    d: &LinkableDynkinDiagram,
    c: &Cycle,
    mode: GenusMode,
) -> Result<CycleInvariants, CycleError> {
    check_edges(d, c, mode)?;
    let (s2, s3) = cycle_weights(d, c, Orientation::Forward);
    let (w2, w3) = (s2.unsigned_abs() as u32, s3.unsigned_abs() as u32);
    let length = c.length();
    let coincide = s2.signum() * s3.signum() >= 0;
    let genus = match mode {
        GenusMode::Finite => finite_genus(w2, length)?,
        GenusMode::Affine => affine_genus(w2, w3, length, coincide)?,
    };
    Ok(CycleInvariants {
        w2,
        w3,
        length,
        genus,
        orientations_coincide: coincide,
    })
}

pub fn genus(d: &LinkableDynkinDiagram, c: &Cycle, mode: GenusMode) -> Result<u64, CycleError> {
    invariants(d, c, mode).map(|inv| inv.genus)
}

/// Clamped walk: double arrows with the direction of travel decrease `h`
/// (never below 0), double arrows against it increase `h`.
fn clamped_height(d: &LinkableDynkinDiagram, steps: impl IntoIterator<Item = Step>) -> u64 {
    let mut h: u64 = 0;
    for s in steps {
        match arrow_sign(d, s, EdgeKind::Double) {
            1 => h = h.saturating_sub(1),
            -1 => h += 1,
            _ => {}
        }
    }
    h
}

/// Height of `i` over `j` along `path`, given as the vertex sequence from `j` to `i`.
///
/// Consecutive vertices use their Cartan edge when they have one, otherwise the dotted edge.
pub fn height(
    d: &LinkableDynkinDiagram,
    i: usize,
    j: usize,
    path: &[usize],
) -> Result<u64, CycleError> {
    if path.first() != Some(&j) || path.last() != Some(&i) {
        return Err(CycleError::NotAPath(format!(
            "path must run from {} to {}",
            j + 1,
            i + 1
        )));
    }
    let mut seen = vec![false; d.size()];
    for &v in path {
        if v >= d.size() {
            return Err(CycleError::NotAPath(format!(
                "vertex {} out of range",
                v + 1
            )));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(CycleError::NotAPath(format!("vertex {} repeats", v + 1)));
        }
    }
    let mut steps = Vec::with_capacity(path.len());
    for w in path.windows(2) {
        let (a, b) = (w[0], w[1]);
        let dotted = if d.a(a, b) != 0 {
            false
        } else if d.is_linkable(a, b) {
            true
        } else {
            return Err(CycleError::NotAPath(format!(
                "{} and {} are not adjacent",
                a + 1,
                b + 1
            )));
        };
        steps.push(Step {
            from: a,
            to: b,
            dotted,
        });
    }
    Ok(clamped_height(d, steps))
}

/// Height of `i` over itself once around `c` in its natural orientation.
pub fn absolute_height(d: &LinkableDynkinDiagram, i: usize, c: &Cycle) -> Result<u64, CycleError> {
    if !c.contains(i) {
        return Err(CycleError::VertexNotOnCycle(i + 1));
    }
    let o = natural_orientation(d, c, ArrowWeight::Double);
    Ok(clamped_height(d, c.steps_from(i, o)))
}

/// Vertices of absolute height 0, in cycle order.
///
/// Only meaningful as Level 0 vertices when the genus is positive; for genus-0
/// cycles the same set is returned as a diagnostic.
pub fn level0_vertices(d: &LinkableDynkinDiagram, c: &Cycle) -> Vec<usize> {
    c.vertices()
        .iter()
        .copied()
        .filter(|&v| absolute_height(d, v, c) == Ok(0))
        .collect()
}

/// Greatest common divisor of all cycle genera; 0 without cycles or when all genera vanish.
pub fn genus_gcd(d: &LinkableDynkinDiagram, mode: GenusMode) -> Result<u64, CycleError> {
    enumerate_cycles(d)
        .iter()
        .try_fold(0u64, |g, c| Ok(g.gcd(&genus(d, c, mode)?)))
}
