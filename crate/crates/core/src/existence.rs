//! Existence criteria for linkable braiding matrices.
//!
//! [`check_finite`] and [`check_affine`] decide the three conditions of the
//! finite and affine theorems for a link-connected diagram: no forbidden fully
//! linkable component, consistent linkings, and an admissible root order
//! dividing every cycle genus. Self-linked diagrams are handled separately by
//! [`selflink_genus`] and [`selflink_order_constraint`].

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::arith::{divisors, factorize, is_prime};
use crate::braiding::{BraidingMatrix, RootExpr};
use crate::cycles::{genus_gcd, CycleError, GenusMode};
use crate::diagram::{
    classify_components, link_connected_components, pairwise_linking_consistency, ComponentType,
    EdgeKind, LinkMode, LinkableDynkinDiagram, LinkingViolation,
};
use crate::families::ExcludedShape;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExistenceError {
    #[error("diagram is not link-connected ({0} parts)")]
    NotLinkConnected(usize),
    #[error("component {{{vertices}}} has type {ty}, unsupported in {mode:?} mode")]
    UnsupportedComponentType {
        vertices: String,
        ty: ComponentType,
        mode: GenusMode,
    },
    #[error("self-linked diagrams are outside the existence theorems")]
    SelfLinkMode,
    #[error(transparent)]
    Cycle(#[from] CycleError),
    #[error("{shape} needs (n, m) = {expected:?}, got {got:?}")]
    ShapeParameterMismatch {
        shape: ExcludedShape,
        expected: (i64, i64),
        got: (i64, i64),
    },
    #[error("root order must be positive")]
    ZeroRootOrder,
    #[error("{i} and {j} are neighbouring")]
    Neighbouring { i: usize, j: usize },
    #[error("a_ij = 0: the vertices are not neighbouring")]
    NotNeighbouring,
    #[error("{i} and {j} are not linkable within one component")]
    NotSelfLinked { i: usize, j: usize },
    #[error("the path between {i} and {j} is not of a recognised type")]
    UnclassifiedPath { i: usize, j: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("the field has no primitive p-th root of unity for any prime p > 3")]
    NoPrimeAboveThree,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldKind {
    /// Contains all roots of unity.
    Cyclotomic,
    /// `GF(q)`.
    FiniteField(u64),
    /// Exactly the listed primitive root orders.
    RootOrders(BTreeSet<u64>),
}

/// Which primitive roots of unity the base field contains.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    kind: FieldKind,
}

impl FieldSpec {
    pub fn cyclotomic() -> Self {
        FieldSpec {
            kind: FieldKind::Cyclotomic,
        }
    }

    pub fn finite_field(q: u64) -> Result<Self, FieldError> {
        if factorize(q).len() != 1 {
            return Err(FieldError::NotPrimePower(q));
        }
        Self::checked(FieldKind::FiniteField(q))
    }

    pub fn root_orders(orders: impl IntoIterator<Item = u64>) -> Result<Self, FieldError> {
        Self::checked(FieldKind::RootOrders(orders.into_iter().collect()))
    }

    fn checked(kind: FieldKind) -> Result<Self, FieldError> {
        let f = FieldSpec { kind };
        if f.smallest_prime_above_3().is_none() {
            return Err(FieldError::NoPrimeAboveThree);
        }
        Ok(f)
    }

    pub fn kind(&self) -> &FieldKind {
        &self.kind
    }

    pub fn has_primitive_root(&self, d: u64) -> bool {
        match &self.kind {
            FieldKind::Cyclotomic => d >= 1,
            FieldKind::FiniteField(q) => d >= 1 && (q - 1) % d == 0,
            FieldKind::RootOrders(set) => set.contains(&d),
        }
    }

    /// Smallest prime `p > 3` with a primitive `p`-th root in the field.
    pub fn smallest_prime_above_3(&self) -> Option<u64> {
        match &self.kind {
            FieldKind::Cyclotomic => Some(5),
            FieldKind::FiniteField(q) => factorize(q - 1)
                .into_iter()
                .map(|(p, _)| p)
                .find(|&p| p > 3),
            FieldKind::RootOrders(set) => set.iter().copied().find(|&p| p > 3 && is_prime(p)),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FieldKind::Cyclotomic => f.write_str("cyclotomic"),
            FieldKind::FiniteField(q) => write!(f, "gf {q}"),
            FieldKind::RootOrders(set) => {
                let v: Vec<String> = set.iter().map(u64::to_string).collect();
                write!(f, "roots {}", v.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Yes,
    No,
    Excluded,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Yes => "yes",
            Decision::No => "no",
            Decision::Excluded => "excluded-case",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Condition 1: a component of a forbidden type has both vertices linkable.
    BothVerticesLinkable {
        vertices: Vec<usize>,
        ty: ComponentType,
    },
    /// Condition 2.
    InconsistentLinking(LinkingViolation),
    /// Condition 3.
    NoAdmissibleOrder { genus_gcd: u64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BothVerticesLinkable { vertices, ty } => {
                write!(
                    f,
                    "condition 1: both vertices of {ty} component {} are linkable",
                    one_based(vertices)
                )
            }
            Violation::InconsistentLinking(v) => write!(f, "condition 2: {v}"),
            Violation::NoAdmissibleOrder { genus_gcd } => {
                write!(
                    f,
                    "condition 3: no admissible root order divides the genus gcd {genus_gcd}"
                )
            }
        }
    }
}

fn one_based(vs: &[usize]) -> String {
    let v: Vec<String> = vs.iter().map(|v| (v + 1).to_string()).collect();
    format!("{{{}}}", v.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExistenceReport {
    pub decision: Decision,
    pub mode: GenusMode,
    /// `None` when condition 1 or 2 already failed.
    pub genus_gcd: Option<u64>,
    /// Root orders allowed by condition 3; empty when every genus is 0 (no restriction).
    pub admissible: Vec<u64>,
    pub chosen_d: Option<u64>,
    pub violations: Vec<Violation>,
    pub excluded_shape: Option<ExcludedShape>,
    pub has_g2: bool,
}

impl fmt::Display for ExistenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match self.mode {
            GenusMode::Finite => "finite",
            GenusMode::Affine => "affine",
        };
        writeln!(f, "decision: {}", self.decision)?;
        writeln!(f, "theorem: {mode}")?;
        if let Some(shape) = self.excluded_shape {
            writeln!(f, "excluded shape: {shape}")?;
        }
        if let Some(g) = self.genus_gcd {
            writeln!(f, "genus gcd: {g}")?;
        }
        if !self.admissible.is_empty() {
            let v: Vec<String> = self.admissible.iter().map(u64::to_string).collect();
            writeln!(f, "admissible d: {}", v.join(","))?;
        }
        if let Some(d) = self.chosen_d {
            writeln!(f, "chosen d: {d}")?;
        }
        for v in &self.violations {
            writeln!(f, "violated: {v}")?;
        }
        Ok(())
    }
}

fn preconditions(
    d: &LinkableDynkinDiagram,
    mode: GenusMode,
) -> Result<Vec<(Vec<usize>, ComponentType)>, ExistenceError> {
    if d.mode() == LinkMode::SelfLink {
        return Err(ExistenceError::SelfLinkMode);
    }
    let parts = link_connected_components(d).len();
    if parts != 1 {
        return Err(ExistenceError::NotLinkConnected(parts));
    }
    let comps = classify_components(d);
    for (vs, ty) in &comps {
        let ok = match mode {
            GenusMode::Finite => ty.is_finite(),
            GenusMode::Affine => ty.is_finite() || ty.is_affine(),
        };
        if !ok {
            return Err(ExistenceError::UnsupportedComponentType {
                vertices: one_based(vs),
                ty: *ty,
                mode,
            });
        }
    }
    Ok(comps)
}

/// Two components of the same two-vertex type, linked crosswise and consistently.
fn excluded_shape(
    d: &LinkableDynkinDiagram,
    comps: &[(Vec<usize>, ComponentType)],
    candidates: &[ExcludedShape],
) -> Option<ExcludedShape> {
    if comps.len() != 2
        || d.linkable_pairs().len() != 2
        || !pairwise_linking_consistency(d).is_empty()
    {
        return None;
    }
    candidates.iter().copied().find(|s| {
        comps
            .iter()
            .all(|(vs, ty)| *ty == s.component() && vs.len() == 2)
    })
}

fn forbidden_components(
    d: &LinkableDynkinDiagram,
    comps: &[(Vec<usize>, ComponentType)],
    forbidden: &[ComponentType],
) -> Vec<Violation> {
    comps
        .iter()
        .filter(|(vs, ty)| forbidden.contains(ty) && vs.iter().all(|&v| d.partner(v).is_some()))
        .map(|(vs, ty)| Violation::BothVerticesLinkable {
            vertices: vs.clone(),
            ty: *ty,
        })
        .collect()
}

fn report(mode: GenusMode, has_g2: bool) -> ExistenceReport {
    ExistenceReport {
        decision: Decision::No,
        mode,
        genus_gcd: None,
        admissible: Vec::new(),
        chosen_d: None,
        violations: Vec::new(),
        excluded_shape: None,
        has_g2,
    }
}

/// Decides the finite theorem for a link-connected diagram with finite components.
pub fn check_finite(
    d: &LinkableDynkinDiagram,
    field: &FieldSpec,
) -> Result<ExistenceReport, ExistenceError> {
    let comps = preconditions(d, GenusMode::Finite)?;
    let has_g2 = comps.iter().any(|(_, t)| *t == ComponentType::G2);
    let mut r = report(GenusMode::Finite, has_g2);
    if let Some(shape) = excluded_shape(d, &comps, &[ExcludedShape::G2xG2]) {
        r.decision = Decision::Excluded;
        r.excluded_shape = Some(shape);
        return Ok(r);
    }
    r.violations = forbidden_components(d, &comps, &[ComponentType::G2]);
    r.violations.extend(
        pairwise_linking_consistency(d)
            .into_iter()
            .map(Violation::InconsistentLinking),
    );
    if !r.violations.is_empty() {
        return Ok(r);
    }
    let g = genus_gcd(d, GenusMode::Finite)?;
    r.genus_gcd = Some(g);
    if g == 0 {
        r.chosen_d = field.smallest_prime_above_3();
    } else {
        r.admissible = divisors(g)
            .into_iter()
            .filter(|&x| x > 2 && field.has_primitive_root(x) && !(has_g2 && x % 3 == 0))
            .collect();
        r.chosen_d = r.admissible.last().copied();
    }
    match r.chosen_d {
        Some(_) => r.decision = Decision::Yes,
        None => r
            .violations
            .push(Violation::NoAdmissibleOrder { genus_gcd: g }),
    }
    Ok(r)
}

/// Decides the affine theorem (homogeneous matrices of prime order above 3).
pub fn check_affine(
    d: &LinkableDynkinDiagram,
    field: &FieldSpec,
) -> Result<ExistenceReport, ExistenceError> {
    let comps = preconditions(d, GenusMode::Affine)?;
    let has_g2 = comps.iter().any(|(_, t)| *t == ComponentType::G2);
    let mut r = report(GenusMode::Affine, has_g2);
    let shapes = [
        ExcludedShape::A1AffinexA1Affine,
        ExcludedShape::A2TwistedxA2Twisted,
    ];
    if let Some(shape) = excluded_shape(d, &comps, &shapes) {
        r.decision = Decision::Excluded;
        r.excluded_shape = Some(shape);
        return Ok(r);
    }
    r.violations = forbidden_components(
        d,
        &comps,
        &[ComponentType::A1_AFFINE, ComponentType::A2_TWISTED],
    );
    r.violations.extend(
        pairwise_linking_consistency(d)
            .into_iter()
            .map(Violation::InconsistentLinking),
    );
    if !r.violations.is_empty() {
        return Ok(r);
    }
    let g = genus_gcd(d, GenusMode::Affine)?;
    r.genus_gcd = Some(g);
    if g == 0 {
        r.chosen_d = field.smallest_prime_above_3();
    } else {
        r.admissible = factorize(g)
            .into_iter()
            .map(|(p, _)| p)
            .filter(|&p| p > 3 && field.has_primitive_root(p))
            .collect();
        r.chosen_d = r.admissible.first().copied();
    }
    match r.chosen_d {
        Some(_) => r.decision = Decision::Yes,
        None => r
            .violations
            .push(Violation::NoAdmissibleOrder { genus_gcd: g }),
    }
    Ok(r)
}

/// The explicit matrix for an excluded shape, `b_ij` over a root `q` of order `q_order` with one parameter `z1`.
///
/// Vertices 1, 2 and 3, 4 form the two components, linked 1⋯3 and 2⋯4 as in
/// [`ExcludedShape::diagram`].
pub fn excluded_case_matrix(
    shape: ExcludedShape,
    q_order: u64,
    n_m: (i64, i64),
) -> Result<BraidingMatrix, ExistenceError> {
    let expected = shape.parameters();
    if n_m != expected {
        return Err(ExistenceError::ShapeParameterMismatch {
            shape,
            expected,
            got: n_m,
        });
    }
    if q_order == 0 {
        return Err(ExistenceError::ZeroRootOrder);
    }
    let (n, m) = n_m;
    let q = |e: i64| RootExpr::q_pow(q_order, e);
    let qz = |e: i64, k: i64| q(e).with_z(1, k);
    // Column-major reading of the displayed matrix: the link identity must hold
    // along columns of (b_ij), i.e. b_ki b_kj = 1 for every row k.
    let shown = [
        [q(1), qz(0, 1), q(1), qz(-m, -1)],
        [qz(-m, -1), q(n), qz(0, 1), q(n)],
        [q(-1), qz(0, -1), q(-1), qz(m, 1)],
        [qz(m, 1), q(-n), qz(0, -1), q(-n)],
    ];
    let entries = (0..4)
        .map(|i| (0..4).map(|j| shown[j][i].clone()).collect())
        .collect();
    Ok(BraidingMatrix::new(q_order, entries).expect("square over one order"))
}

/// Genus of the cycle closed by linking `i` and `j` inside one finite or affine component.
///
/// The undotted path between them must be a chain with only single edges
/// (genus 2), exactly one double (3) or triple (4) edge, or double edges at
/// both ends (2 when they point opposite ways, 5 when aligned).
pub fn selflink_genus(
    d: &LinkableDynkinDiagram,
    i: usize,
    j: usize,
) -> Result<u64, ExistenceError> {
    let (i1, j1) = (i + 1, j + 1);
    if i >= d.size() || j >= d.size() || !d.is_linkable(i, j) {
        return Err(ExistenceError::NotSelfLinked { i: i1, j: j1 });
    }
    if d.a(i, j) != 0 {
        return Err(ExistenceError::Neighbouring { i: i1, j: j1 });
    }
    let comp = d
        .components()
        .into_iter()
        .find(|c| c.contains(&i))
        .expect("every vertex has a component");
    if !comp.contains(&j) {
        return Err(ExistenceError::NotSelfLinked { i: i1, j: j1 });
    }
    let edges: usize = comp
        .iter()
        .map(|&v| d.cartan().neighbours(v).count())
        .sum::<usize>()
        / 2;
    let unclassified = ExistenceError::UnclassifiedPath { i: i1, j: j1 };
    if edges >= comp.len() {
        return Err(unclassified);
    }
    let path = tree_path(d, i, j);
    let mut doubles = Vec::new();
    let mut triples = 0;
    for (t, w) in path.windows(2).enumerate() {
        match d.edge(w[0], w[1]) {
            (EdgeKind::Single, _) => {}
            (EdgeKind::Double, arrow) => doubles.push((t, arrow)),
            (EdgeKind::Triple, _) => triples += 1,
            _ => return Err(unclassified),
        }
    }
    let last = path.len() - 2;
    match (doubles.as_slice(), triples) {
        ([], 0) => Ok(2),
        ([_], 0) => Ok(3),
        ([], 1) => Ok(4),
        ([(0, a), (t, b)], 0) if *t == last => Ok(if a == b { 5 } else { 2 }),
        _ => Err(unclassified),
    }
}

/// Unique undotted path from `i` to `j` in a tree component.
fn tree_path(d: &LinkableDynkinDiagram, i: usize, j: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; d.size()];
    prev[i] = i;
    let mut queue = VecDeque::from([i]);
    while let Some(u) = queue.pop_front() {
        for v in d.cartan().neighbours(u) {
            if prev[v] == usize::MAX {
                prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    let mut path = vec![j];
    while *path.last().unwrap() != i {
        path.push(prev[*path.last().unwrap()]);
    }
    path.reverse();
    path
}

/// `|a_ij a_ji - a_ij - a_ji|`: the order of `b_ii` divides it when neighbouring `i` and `j` are linked.
pub fn selflink_order_constraint(a_ij: i64, a_ji: i64) -> Result<u64, ExistenceError> {
    if a_ij == 0 || a_ji == 0 {
        return Err(ExistenceError::NotNeighbouring);
    }
    Ok((a_ij * a_ji - a_ij - a_ji).unsigned_abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::{verify, VerifyMode};
    use crate::diagram::{cartan_from_edges, standard_matrix, CartanMatrix, Series};
    use crate::families::{a3_circle, double};

    fn field() -> FieldSpec {
        FieldSpec::cyclotomic()
    }

    #[test]
    fn field_specs() {
        assert!(FieldSpec::finite_field(12).is_err());
        assert_eq!(
            FieldSpec::finite_field(9),
            Err(FieldError::NoPrimeAboveThree)
        );
        let f = FieldSpec::finite_field(11).unwrap();
        assert!(f.has_primitive_root(5) && !f.has_primitive_root(7));
        assert_eq!(f.smallest_prime_above_3(), Some(5));
        let r = FieldSpec::root_orders([3, 7, 9]).unwrap();
        assert!(r.has_primitive_root(9) && !r.has_primitive_root(5));
        assert_eq!(r.to_string(), "roots 3,7,9");
    }

    #[test]
    fn a3_circles() {
        for n in [2, 4, 6] {
            assert_eq!(
                check_finite(&a3_circle(n), &field()).unwrap().decision,
                Decision::Yes
            );
        }
        for n in [3, 5] {
            let r = check_finite(&a3_circle(n), &field()).unwrap();
            assert_eq!(r.decision, Decision::No);
            assert_eq!(r.genus_gcd, Some(2));
        }
    }

    #[test]
    fn doubles_have_no_obstruction() {
        for ty in [
            (Series::A, 3),
            (Series::B, 3),
            (Series::C, 3),
            (Series::D, 4),
        ] {
            let m = standard_matrix(ComponentType::Finite(ty.0, ty.1)).unwrap();
            let r = check_finite(&double(&m), &field()).unwrap();
            assert_eq!(r.decision, Decision::Yes, "{ty:?}");
            assert_eq!(r.genus_gcd, Some(0));
            assert_eq!(r.chosen_d, Some(5));
        }
        // the double of G_2 is exactly the excluded shape
        let g2 = standard_matrix(ComponentType::G2).unwrap();
        assert_eq!(
            check_finite(&double(&g2), &field()).unwrap().decision,
            Decision::Excluded
        );
    }

    #[test]
    fn excluded_shapes() {
        let g2 = ExcludedShape::G2xG2.diagram();
        let r = check_finite(&g2, &field()).unwrap();
        assert_eq!(r.decision, Decision::Excluded);
        assert_eq!(r.excluded_shape, Some(ExcludedShape::G2xG2));
        assert_eq!(check_affine(&g2, &field()).unwrap().decision, Decision::Yes);
        for s in [
            ExcludedShape::A1AffinexA1Affine,
            ExcludedShape::A2TwistedxA2Twisted,
        ] {
            assert_eq!(
                check_affine(&s.diagram(), &field()).unwrap().excluded_shape,
                Some(s)
            );
        }
    }

    #[test]
    fn inconsistent_crosswise_g2_is_no() {
        let c = cartan_from_edges(4, &[(0, 1, -3, -1), (2, 3, -3, -1)]).unwrap();
        let d = LinkableDynkinDiagram::new(c, &[(0, 3), (1, 2)], &[], LinkMode::Standard).unwrap();
        let r = check_finite(&d, &field()).unwrap();
        assert_eq!(r.decision, Decision::No);
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::InconsistentLinking(_))));
    }

    #[test]
    fn g2_with_both_vertices_linkable() {
        let c = cartan_from_edges(4, &[(0, 1, -3, -1)]).unwrap();
        let d = LinkableDynkinDiagram::new(c, &[(0, 2), (1, 3)], &[], LinkMode::Standard).unwrap();
        let r = check_finite(&d, &field()).unwrap();
        assert!(matches!(
            r.violations[0],
            Violation::BothVerticesLinkable { .. }
        ));
    }

    #[test]
    fn affine_genus_four_is_no() {
        // G_2^(1) chain closed through two A_3 chains: one triple edge, three dotted edges
        let g21 = standard_matrix(ComponentType::Affine(Series::G, 2, 1)).unwrap();
        let a3 = standard_matrix(ComponentType::Finite(Series::A, 3)).unwrap();
        let c = CartanMatrix::direct_sum(&[&g21, &a3, &a3]);
        let d = LinkableDynkinDiagram::new(c, &[(2, 3), (5, 6), (8, 0)], &[], LinkMode::Standard)
            .unwrap();
        let r = check_affine(&d, &field()).unwrap();
        assert_eq!(r.genus_gcd, Some(4));
        assert_eq!(r.decision, Decision::No);
    }

    #[test]
    fn affine_acyclic_is_yes() {
        let a11 = standard_matrix(ComponentType::A1_AFFINE).unwrap();
        let a1 = CartanMatrix::diagonal(1);
        let d = LinkableDynkinDiagram::new(
            CartanMatrix::direct_sum(&[&a11, &a1]),
            &[(0, 2)],
            &[(0, 2)],
            LinkMode::Standard,
        )
        .unwrap();
        let r = check_affine(&d, &FieldSpec::root_orders([7]).unwrap()).unwrap();
        assert_eq!(r.decision, Decision::Yes);
        assert_eq!(r.chosen_d, Some(7));
    }

    #[test]
    fn excluded_matrices_verify() {
        for s in ExcludedShape::ALL {
            let b = excluded_case_matrix(s, 5, s.parameters()).unwrap();
            let mode = if s == ExcludedShape::G2xG2 {
                VerifyMode::Finite
            } else {
                VerifyMode::AffineHomogeneous
            };
            let r = verify(&b, &s.diagram(), mode);
            assert!(r.passed(), "{s}: {r}");
        }
        assert!(matches!(
            excluded_case_matrix(ExcludedShape::G2xG2, 5, (1, 2)),
            Err(ExistenceError::ShapeParameterMismatch { .. })
        ));
    }

    fn selflinked(ty: ComponentType, i: usize, j: usize) -> LinkableDynkinDiagram {
        LinkableDynkinDiagram::new(
            standard_matrix(ty).unwrap(),
            &[(i, j)],
            &[(i, j)],
            LinkMode::SelfLink,
        )
        .unwrap()
    }

    #[test]
    fn selflink_table() {
        use ComponentType::*;
        assert_eq!(
            selflink_genus(&selflinked(Finite(Series::A, 4), 0, 3), 0, 3).unwrap(),
            2
        );
        assert_eq!(
            selflink_genus(&selflinked(Finite(Series::B, 3), 0, 2), 0, 2).unwrap(),
            3
        );
        assert_eq!(
            selflink_genus(&selflinked(Affine(Series::G, 2, 1), 0, 2), 0, 2).unwrap(),
            4
        );
        assert_eq!(
            selflink_genus(&selflinked(Affine(Series::A, 4, 2), 0, 2), 0, 2).unwrap(),
            5
        );
        assert_eq!(
            selflink_genus(&selflinked(Affine(Series::C, 2, 1), 0, 2), 0, 2).unwrap(),
            2
        );
        let a2 = selflinked(Finite(Series::A, 2), 0, 1);
        assert!(matches!(
            selflink_genus(&a2, 0, 1),
            Err(ExistenceError::Neighbouring { .. })
        ));
        let cyc = selflinked(Affine(Series::A, 3, 1), 0, 2);
        assert!(matches!(
            selflink_genus(&cyc, 0, 2),
            Err(ExistenceError::UnclassifiedPath { .. })
        ));
    }

    #[test]
    fn selflink_orders() {
        let got: Vec<u64> = [(-1, -1), (-1, -2), (-1, -3), (-2, -2), (-1, -4)]
            .iter()
            .map(|&(a, b)| selflink_order_constraint(a, b).unwrap())
            .collect();
        assert_eq!(got, vec![3, 5, 7, 8, 9]);
        assert_eq!(
            selflink_order_constraint(-2, -1),
            selflink_order_constraint(-1, -2)
        );
        assert_eq!(
            selflink_order_constraint(0, 0),
            Err(ExistenceError::NotNeighbouring)
        );
    }
}
