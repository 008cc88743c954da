use std::fmt;

/// Shape of the undotted edge between two vertices, read off `(a_ij, a_ji)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    None,
    Single,
    Double,
    Triple,
    Quadruple,
    /// The `(-2, -2)` edge of `A_1^(1)`.
    A1Affine,
}

/// Direction of the arrow on an asymmetric edge, relative to the ordered pair `(i, j)`.
///
/// The arrow points from `i` to `j` when `|a_ij| > |a_ji|`, i.e. when walking
/// from `i` to `j` raises the diagonal entry to a power (`b_jj = b_ii^(a_ij/a_ji)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arrow {
    Forward,
    Backward,
    Symmetric,
}

impl EdgeKind {
    /// Classifies `(a_ij, a_ji)`; `None` for pairs outside the finite/affine taxonomy.
    pub fn from_entries(a_ij: i64, a_ji: i64) -> Option<(EdgeKind, Arrow)> {
        use Arrow::*;
        let kind = match (a_ij, a_ji) {
            (0, 0) => (EdgeKind::None, Symmetric),
            (-1, -1) => (EdgeKind::Single, Symmetric),
            (-2, -1) => (EdgeKind::Double, Forward),
            (-1, -2) => (EdgeKind::Double, Backward),
            (-3, -1) => (EdgeKind::Triple, Forward),
            (-1, -3) => (EdgeKind::Triple, Backward),
            (-4, -1) => (EdgeKind::Quadruple, Forward),
            (-1, -4) => (EdgeKind::Quadruple, Backward),
            (-2, -2) => (EdgeKind::A1Affine, Symmetric),
            _ => return Option::None,
        };
        Some(kind)
    }

    pub fn is_edge(self) -> bool {
        self != EdgeKind::None
    }
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EdgeKind::None => "none",
            EdgeKind::Single => "single",
            EdgeKind::Double => "double",
            EdgeKind::Triple => "triple",
            EdgeKind::Quadruple => "quadruple",
            EdgeKind::A1Affine => "a1affine",
        };
        f.write_str(s)
    }
}
