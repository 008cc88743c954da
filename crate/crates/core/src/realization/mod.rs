//! Realizing braiding matrices as linking data over abelian groups.

mod a4;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub use a4::{
    a4_closed_form, a4_realizable_zp2, a4_solve_brute, a4_solve_zp2, count_magic_solutions,
    max_diagram_note_zp2, A4ClosedForm, A4Realizability, A4Solution, A4Tuple,
};

use crate::braiding::{BraidingError, BraidingMatrix, RootExpr};
use crate::diagram::{CartanMatrix, DiagramError, LinkMode, LinkableDynkinDiagram};
use crate::families::double;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizationError {
    #[error("character identity fails for the linked pair {i}~{j} on generator h_{t}")]
    LinkConstraintUnsatisfiable { i: usize, j: usize, t: usize },
    #[error("ord b_{i},{j} = {order} does not divide {p}")]
    OrderNotDividing {
        i: usize,
        j: usize,
        order: u64,
        p: u64,
    },
    #[error("matrix has size {matrix}, diagram has {diagram} vertices")]
    SizeMismatch { matrix: usize, diagram: usize },
    #[error("symmetrizer does not satisfy d_i a_ij = d_j a_ji")]
    NotSymmetrizable,
    #[error("{0} is not a prime above 3")]
    NotPrime(u64),
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Braiding(#[from] BraidingError),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// `Z/f_1 + ... + Z/f_l`, with `f_t = 0` standing for `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

impl AbelianGroup {
    pub fn new(factors: Vec<u64>) -> Self {
        AbelianGroup { factors }
    }

    pub fn free(rank: usize) -> Self {
        Self::new(vec![0; rank])
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Canonical representative of an exponent vector.
    pub fn reduce(&self, x: &[i64]) -> Vec<i64> {
        x.iter()
            .zip(&self.factors)
            .map(|(&v, &f)| if f == 0 { v } else { v.rem_euclid(f as i64) })
            .collect()
    }

    pub fn add(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        self.reduce(&x.iter().zip(y).map(|(a, b)| a + b).collect::<Vec<_>>())
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&x| {
                if x == 0 {
                    "Z".to_string()
                } else {
                    format!("Z/{x}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Group elements `g_i`, characters `χ_i` (by their values on the generators) and a linkable diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkingDatum {
    pub group: AbelianGroup,
    pub q_order: u64,
    /// `g[i]` is the exponent vector of `g_i` over the generators `h_t`.
    pub g: Vec<Vec<i64>>,
    /// `chi[j][t] = χ_j(h_t)`.
    pub chi: Vec<Vec<RootExpr>>,
    pub diagram: LinkableDynkinDiagram,
}

impl LinkingDatum {
    pub fn size(&self) -> usize {
        self.g.len()
    }

    /// `χ_j(x)` for an exponent vector `x`.
    pub fn character(&self, j: usize, x: &[i64]) -> RootExpr {
        self.chi[j]
            .iter()
            .zip(x)
            .fold(RootExpr::one(self.q_order), |acc, (v, &k)| &acc * &v.pow(k))
    }

    /// `b_ij = χ_j(g_i)`.
    pub fn braiding_matrix(&self) -> BraidingMatrix {
        let s = self.size();
        let rows = (0..s)
            .map(|i| (0..s).map(|j| self.character(j, &self.g[i])).collect())
            .collect();
        BraidingMatrix::new(self.q_order, rows).expect("square over one order")
    }

    /// First failure of `χ_i^{1-a_ij} χ_j = 1` on a generator, over all linkable pairs.
    pub fn link_failure(&self) -> Option<RealizationError> {
        let d = &self.diagram;
        for i in 0..self.size() {
            let Some(j) = d.partner(i) else { continue };
            for t in 0..self.group.rank() {
                if !(&self.chi[i][t].pow(1 - d.a(i, j)) * &self.chi[j][t]).is_one() {
                    return Some(RealizationError::LinkConstraintUnsatisfiable {
                        i: i + 1,
                        j: j + 1,
                        t: t + 1,
                    });
                }
            }
        }
        None
    }

    /// Characters respect the relations `h_t^{f_t} = 1`.
    pub fn characters_well_defined(&self) -> bool {
        self.chi.iter().all(|row| {
            row.iter()
                .zip(self.group.invariant_factors())
                .all(|(v, &f)| f == 0 || v.pow(f as i64).is_one())
        })
    }

    pub fn to_text(&self) -> String {
        let join = |v: &[String]| v.join(" ");
        let mut out = format!("root_order {}\n", self.q_order);
        let factors: Vec<String> = self
            .group
            .invariant_factors()
            .iter()
            .map(u64::to_string)
            .collect();
        out += &format!("group {}\n", join(&factors));
        if self.diagram.mode() == LinkMode::SelfLink {
            out += "mode selflink\n";
        }
        out += "cartan\n";
        for row in self.diagram.cartan().rows() {
            let r: Vec<String> = row.iter().map(i64::to_string).collect();
            out += &format!("{}\n", join(&r));
        }
        for (i, j) in self.diagram.linkable_pairs() {
            let kw = if self.diagram.lambda(i, j) {
                "link"
            } else {
                "linkable"
            };
            out += &format!("{kw} {} {}\n", i + 1, j + 1);
        }
        for gi in &self.g {
            let r: Vec<String> = gi.iter().map(i64::to_string).collect();
            out += &format!("g {}\n", join(&r));
        }
        for cj in &self.chi {
            let r: Vec<String> = cj.iter().map(RootExpr::to_string).collect();
            out += &format!("chi {}\n", join(&r));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, RealizationError> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(n, l)| (n + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let err = |line: usize, message: &str| RealizationError::Parse {
            line,
            message: message.to_string(),
        };
        let ints = |line: usize, s: &str| -> Result<Vec<i64>, RealizationError> {
            s.split_whitespace()
                .map(|t| t.parse().map_err(|_| err(line, "expected integers")))
                .collect()
        };
        let mut it = lines.into_iter().peekable();
        let (ln, l) = it.next().ok_or_else(|| err(0, "empty input"))?;
        let q_order: u64 = l
            .strip_prefix("root_order ")
            .and_then(|v| v.trim().parse().ok())
            .filter(|&d| d > 0)
            .ok_or_else(|| err(ln, "expected `root_order d`"))?;
        let (ln, l) = it.next().ok_or_else(|| err(ln, "missing group"))?;
        let factors = ints(
            ln,
            l.strip_prefix("group")
                .ok_or_else(|| err(ln, "expected `group`"))?,
        )?;
        if factors.iter().any(|&f| f < 0) {
            return Err(err(ln, "negative invariant factor"));
        }
        let group = AbelianGroup::new(factors.iter().map(|&f| f as u64).collect());
        let mut mode = LinkMode::Standard;
        if it.peek().map(|x| x.1) == Some("mode selflink") {
            it.next();
            mode = LinkMode::SelfLink;
        }
        let (ln, l) = it.next().ok_or_else(|| err(ln, "missing cartan"))?;
        if l != "cartan" {
            return Err(err(ln, "expected `cartan`"));
        }
        let mut rows: Vec<Vec<i64>> = Vec::new();
        let (mut linkable, mut linked, mut g, mut chi) =
            (Vec::new(), Vec::new(), Vec::new(), Vec::new());
        for (ln, l) in it {
            let (kw, rest) = l.split_once(' ').unwrap_or((l, ""));
            match kw {
                "link" | "linkable" => {
                    let v = ints(ln, rest)?;
                    if v.len() != 2 || v.iter().any(|&x| x < 1) {
                        return Err(err(ln, "expected two 1-based vertices"));
                    }
                    let pair = (v[0] as usize - 1, v[1] as usize - 1);
                    linkable.push(pair);
                    if kw == "link" {
                        linked.push(pair);
                    }
                }
                "g" => g.push(ints(ln, rest)?),
                "chi" => chi.push(
                    rest.split_whitespace()
                        .map(|c| RootExpr::parse(c, q_order))
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| err(ln, &e.to_string()))?,
                ),
                _ if g.is_empty() && linkable.is_empty() => rows.push(ints(ln, l)?),
                _ => return Err(err(ln, "unexpected line")),
            }
        }
        let cartan = CartanMatrix::new(rows)?;
        let diagram = LinkableDynkinDiagram::new(cartan, &linkable, &linked, mode)?;
        let s = diagram.size();
        let l = group.rank();
        if g.len() != s
            || chi.len() != s
            || g.iter().any(|x| x.len() != l)
            || chi.iter().any(|x| x.len() != l)
        {
            return Err(err(
                0,
                "need one g and one chi line per vertex, one entry per generator",
            ));
        }
        Ok(LinkingDatum {
            group,
            q_order,
            g,
            chi,
            diagram,
        })
    }
}

fn instantiated(b: &BraidingMatrix, z_values: &BTreeMap<u32, i64>) -> BraidingMatrix {
    b.map(|e| e.instantiate(z_values))
}

fn canonical_datum(
    b: BraidingMatrix,
    d: &LinkableDynkinDiagram,
    group: AbelianGroup,
) -> LinkingDatum {
    let s = b.size();
    let g = (0..s)
        .map(|i| (0..s).map(|t| i64::from(t == i)).collect())
        .collect();
    // χ_j(h_t) = χ_j(g_t) = b_tj
    let chi = (0..s)
        .map(|j| (0..s).map(|t| b.get(t, j).clone()).collect())
        .collect();
    LinkingDatum {
        group,
        q_order: b.root_order(),
        g,
        chi,
        diagram: d.clone(),
    }
}

/// Datum over `Z^s` with `g_i = e_i` and `χ_j(e_i) = b_ij`.
///
/// Free parameters are replaced by `q^{z_values[t]}` (absent ones by 1) first.
pub fn realize_free(
    b: &BraidingMatrix,
    d: &LinkableDynkinDiagram,
    z_values: &BTreeMap<u32, i64>,
) -> Result<LinkingDatum, RealizationError> {
    if b.size() != d.size() {
        return Err(RealizationError::SizeMismatch {
            matrix: b.size(),
            diagram: d.size(),
        });
    }
    let datum = canonical_datum(instantiated(b, z_values), d, AbelianGroup::free(b.size()));
    match datum.link_failure() {
        Some(e) => Err(e),
        None => Ok(datum),
    }
}

/// The same construction over `(Z/p)^s`; every entry's order must divide `p`.
pub fn realize_mod_p(
    b: &BraidingMatrix,
    d: &LinkableDynkinDiagram,
    p: u64,
    z_values: &BTreeMap<u32, i64>,
) -> Result<LinkingDatum, RealizationError> {
    if p == 0 {
        return Err(RealizationError::ZeroModulus);
    }
    if b.size() != d.size() {
        return Err(RealizationError::SizeMismatch {
            matrix: b.size(),
            diagram: d.size(),
        });
    }
    let inst = instantiated(b, z_values);
    for i in 0..inst.size() {
        for j in 0..inst.size() {
            let order = inst.get(i, j).order().expect("instantiated");
            if p % order != 0 {
                return Err(RealizationError::OrderNotDividing {
                    i: i + 1,
                    j: j + 1,
                    order,
                    p,
                });
            }
        }
    }
    let datum = canonical_datum(inst, d, AbelianGroup::new(vec![p; b.size()]));
    match datum.link_failure() {
        Some(e) => Err(e),
        None => Ok(datum),
    }
}

/// Datum of the quantized Kac–Moody algebra: two linked copies of the diagram over `Z^N`.
///
/// `g_{N+i} = g_i = e_i`, `χ_j(g_i) = q^{d_i a_ij}`, `χ_{N+j} = χ_j^{-1}`, all `λ_{i,N+i} = 1`.
pub fn double_datum(
    cartan: &CartanMatrix,
    symmetrizer: &[i64],
    q_order: u64,
) -> Result<LinkingDatum, RealizationError> {
    let n = cartan.size();
    let sym_ok = symmetrizer.len() == n
        && symmetrizer.iter().all(|&x| x > 0)
        && (0..n).all(|i| {
            (0..n).all(|j| symmetrizer[i] * cartan.get(i, j) == symmetrizer[j] * cartan.get(j, i))
        });
    if !sym_ok {
        return Err(RealizationError::NotSymmetrizable);
    }
    if q_order == 0 {
        return Err(RealizationError::ZeroModulus);
    }
    let diagram = double(cartan);
    let unit = |i: usize| (0..n).map(|t| i64::from(t == i)).collect::<Vec<i64>>();
    let g = (0..2 * n).map(|i| unit(i % n)).collect();
    let base: Vec<Vec<RootExpr>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|t| RootExpr::q_pow(q_order, symmetrizer[t] * cartan.get(t, j)))
                .collect()
        })
        .collect();
    let chi = base
        .iter()
        .cloned()
        .chain(
            base.iter()
                .map(|row| row.iter().map(RootExpr::inv).collect()),
        )
        .collect();
    Ok(LinkingDatum {
        group: AbelianGroup::free(n),
        q_order,
        g,
        chi,
        diagram,
    })
}
