use std::fmt;

use super::{BraidingError, RootExpr};
use crate::arith::is_prime;
use crate::diagram::{classify_components, ComponentType, LinkableDynkinDiagram};

/// Square matrix of root expressions over one root order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidingMatrix {
    d: u64,
    entries: Vec<Vec<RootExpr>>,
}

impl BraidingMatrix {
    pub fn new(d: u64, entries: Vec<Vec<RootExpr>>) -> Result<Self, BraidingError> {
        let s = entries.len();
        if s == 0 {
            return Err(BraidingError::Parse("empty matrix".into()));
        }
        for row in &entries {
            if row.len() != s {
                return Err(BraidingError::SizeMismatch {
                    expected: s,
                    found: row.len(),
                });
            }
            if let Some(e) = row.iter().find(|e| e.root_order() != d) {
                return Err(BraidingError::OrderMismatch {
                    left: d,
                    right: e.root_order(),
                });
            }
        }
        Ok(BraidingMatrix { d, entries })
    }

    pub fn root_order(&self) -> u64 {
        self.d
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &RootExpr {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<RootExpr>] {
        &self.entries
    }

    /// Largest free-parameter index in use, 0 if none.
    pub fn max_parameter(&self) -> u32 {
        self.entries
            .iter()
            .flatten()
            .filter_map(|e| e.z_exponents().keys().next_back().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn lift(&self, d2: u64) -> Result<Self, BraidingError> {
        let entries = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.lift(d2))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BraidingMatrix { d: d2, entries })
    }

    pub fn map(&self, f: impl Fn(&RootExpr) -> RootExpr) -> Self {
        BraidingMatrix {
            d: self.d,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }

    /// Text form: a `root_order d` line followed by one line per row.
    pub fn to_text(&self) -> String {
        let mut out = format!("root_order {}\n", self.d);
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, BraidingError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| BraidingError::Parse("missing header".into()))?;
        let d: u64 = header
            .strip_prefix("root_order ")
            .and_then(|v| v.trim().parse().ok())
            .filter(|&d| d > 0)
            .ok_or_else(|| BraidingError::Parse(format!("bad header `{header}`")))?;
        let entries = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|c| RootExpr::parse(c, d))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(d, entries)
    }
}

impl fmt::Display for BraidingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Multiplicative order of `b_ii`; `None` if it carries a free parameter.
pub fn ord_diagonal(b: &BraidingMatrix, i: usize) -> Option<u64> {
    b.get(i, i).order()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// Only the defining identities.
    Basic,
    /// Diagonal orders above 2, and prime to 3 when a `G_2` component is present.
    Finite,
    /// All diagonal orders equal to one prime above 3.
    AffineHomogeneous,
}

/// One failed identity; indices 1-based in the rendering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    SizeMismatch {
        matrix: usize,
        diagram: usize,
    },
    DiagonalIsOne {
        i: usize,
    },
    DiagonalHasParameter {
        i: usize,
    },
    /// `b_ij b_ji != b_ii^{a_ij}`.
    Braiding {
        i: usize,
        j: usize,
    },
    /// `b_ki^{1-a_ij} b_kj != 1` for the linkable pair `i ⋯ j`.
    Link {
        i: usize,
        j: usize,
        k: usize,
    },
    Order {
        i: usize,
        order: u64,
    },
    NotHomogeneous {
        orders: Vec<u64>,
    },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Failure::SizeMismatch { matrix, diagram } => {
                write!(
                    f,
                    "matrix has size {matrix}, diagram has {diagram} vertices"
                )
            }
            Failure::DiagonalIsOne { i } => write!(f, "b_{0},{0} = 1", i + 1),
            Failure::DiagonalHasParameter { i } => {
                write!(f, "b_{0},{0} contains a free parameter", i + 1)
            }
            Failure::Braiding { i, j } => write!(
                f,
                "b_{0},{1} b_{1},{0} != b_{0},{0}^a_{0},{1}",
                i + 1,
                j + 1
            ),
            Failure::Link { i, j, k } => {
                write!(
                    f,
                    "link {}~{}: b_{},{}^(1-a) b_{},{} != 1",
                    i + 1,
                    j + 1,
                    k + 1,
                    i + 1,
                    k + 1,
                    j + 1
                )
            }
            Failure::Order { i, order } => {
                write!(f, "ord b_{0},{0} = {order} is not admissible", i + 1)
            }
            Failure::NotHomogeneous { ref orders } => {
                write!(f, "diagonal orders {orders:?} are not one prime > 3")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return writeln!(f, "verified: all identities hold");
        }
        writeln!(f, "verification failed: {} identities", self.failures.len())?;
        for x in &self.failures {
            writeln!(f, "  {x}")?;
        }
        Ok(())
    }
}

/// Checks the defining identities symbolically in the free parameters, plus the order conditions of `mode`.
pub fn verify(
    b: &BraidingMatrix,
    d: &LinkableDynkinDiagram,
    mode: VerifyMode,
) -> VerificationReport {
    let s = d.size();
    let mut failures = Vec::new();
    if b.size() != s {
        failures.push(Failure::SizeMismatch {
            matrix: b.size(),
            diagram: s,
        });
        return VerificationReport { failures };
    }
    for i in 0..s {
        let bii = b.get(i, i);
        if !bii.is_pure() {
            failures.push(Failure::DiagonalHasParameter { i });
        } else if bii.is_one() {
            failures.push(Failure::DiagonalIsOne { i });
        }
    }
    for i in 0..s {
        for j in 0..s {
            if i == j {
                continue;
            }
            let lhs = b.get(i, j) * b.get(j, i);
            if lhs != b.get(i, i).pow(d.a(i, j)) {
                failures.push(Failure::Braiding { i, j });
            }
        }
    }
    for i in 0..s {
        let Some(j) = d.partner(i) else { continue };
        for k in 0..s {
            if !(&b.get(k, i).pow(1 - d.a(i, j)) * b.get(k, j)).is_one() {
                failures.push(Failure::Link { i, j, k });
            }
        }
    }
    let orders: Vec<Option<u64>> = (0..s).map(|i| ord_diagonal(b, i)).collect();
    match mode {
        VerifyMode::Basic => {}
        VerifyMode::Finite => {
            let g2 = classify_components(d)
                .iter()
                .any(|(_, t)| *t == ComponentType::G2);
            for (i, o) in orders.iter().enumerate() {
                if let Some(o) = *o {
                    if o <= 2 || (g2 && o % 3 == 0) {
                        failures.push(Failure::Order { i, order: o });
                    }
                }
            }
        }
        VerifyMode::AffineHomogeneous => {
            let known: Vec<u64> = orders.iter().flatten().copied().collect();
            let homogeneous = known.len() == s && known.windows(2).all(|w| w[0] == w[1]);
            if !(homogeneous && is_prime(known[0]) && known[0] > 3) {
                failures.push(Failure::NotHomogeneous { orders: known });
            }
        }
    }
    VerificationReport { failures }
}
