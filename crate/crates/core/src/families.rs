//! Builders for the standard example diagrams: linked circles, doubles and the excluded shapes.

use crate::diagram::{
    standard_matrix, CartanMatrix, ComponentType, DiagramError, LinkMode, LinkableDynkinDiagram,
    Series,
};

fn chain_type(ty: ComponentType) -> Result<CartanMatrix, DiagramError> {
    standard_matrix(ty).ok_or(DiagramError::Empty)
}

/// `n` copies of a diagram, the last vertex of copy `t` linkable to the first vertex of copy `t + 1` (cyclically).
///
/// `n >= 2`. With `linked` every dotted edge carries λ = 1.
pub fn circle(
    ty: ComponentType,
    n: usize,
    linked: bool,
) -> Result<LinkableDynkinDiagram, DiagramError> {
    let block = chain_type(ty)?;
    let s = block.size();
    let copies: Vec<&CartanMatrix> = vec![&block; n];
    let cartan = CartanMatrix::direct_sum(&copies);
    let pairs: Vec<(usize, usize)> = (0..n).map(|t| (t * s + s - 1, ((t + 1) % n) * s)).collect();
    let lk: &[(usize, usize)] = if linked { &pairs } else { &[] };
    LinkableDynkinDiagram::new(cartan, &pairs, lk, LinkMode::Standard)
}

/// `n` copies of `A_3` linked into a circle.
pub fn a3_circle(n: usize) -> LinkableDynkinDiagram {
    circle(ComponentType::Finite(Series::A, 3), n, true).expect("valid circle")
}

/// `n` copies of `B_3` linked into a circle, all double edges aligned along the cycle.
pub fn b3_circle(n: usize) -> LinkableDynkinDiagram {
    circle(ComponentType::Finite(Series::B, 3), n, true).expect("valid circle")
}

/// Two copies of `cartan` with vertex `i` linked to `N + i`.
pub fn double(cartan: &CartanMatrix) -> LinkableDynkinDiagram {
    let n = cartan.size();
    let sum = CartanMatrix::direct_sum(&[cartan, cartan]);
    let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, n + i)).collect();
    LinkableDynkinDiagram::new(sum, &pairs, &pairs, LinkMode::Standard)
        .expect("copies are separate components")
}

/// The three shapes the theorems leave out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExcludedShape {
    G2xG2,
    A1AffinexA1Affine,
    A2TwistedxA2Twisted,
}

impl ExcludedShape {
    pub const ALL: [ExcludedShape; 3] = [
        ExcludedShape::G2xG2,
        ExcludedShape::A1AffinexA1Affine,
        ExcludedShape::A2TwistedxA2Twisted,
    ];

    /// `(n, m)` of the explicit matrix family.
    pub fn parameters(self) -> (i64, i64) {
        match self {
            ExcludedShape::G2xG2 => (3, 3),
            ExcludedShape::A1AffinexA1Affine => (1, 2),
            ExcludedShape::A2TwistedxA2Twisted => (4, 4),
        }
    }

    pub fn component(self) -> ComponentType {
        match self {
            ExcludedShape::G2xG2 => ComponentType::G2,
            ExcludedShape::A1AffinexA1Affine => ComponentType::A1_AFFINE,
            ExcludedShape::A2TwistedxA2Twisted => ComponentType::A2_TWISTED,
        }
    }

    /// Vertices 1, 2 form one component with `a_12 = -m`, `a_21 = -m/n`; 3, 4 the other; links 1⋯3 and 2⋯4.
    pub fn diagram(self) -> LinkableDynkinDiagram {
        let (n, m) = self.parameters();
        let (a, b) = (-m, -m / n);
        let rows = vec![
            vec![2, a, 0, 0],
            vec![b, 2, 0, 0],
            vec![0, 0, 2, a],
            vec![0, 0, b, 2],
        ];
        let pairs = [(0, 2), (1, 3)];
        LinkableDynkinDiagram::new(
            CartanMatrix::new(rows).expect("valid"),
            &pairs,
            &pairs,
            LinkMode::Standard,
        )
        .expect("valid")
    }
}

impl std::fmt::Display for ExcludedShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c = self.component();
        write!(f, "{c} x {c}")
    }
}
