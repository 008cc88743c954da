use std::collections::VecDeque;

use super::{BraidingError, BraidingMatrix, RootExpr};
use crate::arith::{is_prime, mod_inv, modulo};
use crate::cycles::GenusMode;
use crate::diagram::{LinkMode, LinkableDynkinDiagram};
use crate::existence::{check_affine, check_finite, Decision, FieldSpec};

/// Diagonal exponents `e_v` with `b_vv = q^{e_v}`, propagated breadth-first from `start` with `e_start = 1`.
///
/// Across a dotted edge `e_v = -e_u`; across a Cartan edge `e_v = e_u a_uv / a_vu (mod d)`.
/// Every edge is checked afterwards.
pub fn diagonal_exponents(
    d: &LinkableDynkinDiagram,
    q_order: u64,
    start: usize,
) -> Result<Vec<u64>, BraidingError> {
    let s = d.size();
    let mut e: Vec<Option<u64>> = vec![None; s];
    e[start] = Some(1 % q_order);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        let eu = e[u].expect("queued vertices are set");
        let mut next: Vec<usize> = d.cartan().neighbours(u).collect();
        next.extend(d.partner(u));
        next.sort_unstable();
        for v in next {
            if e[v].is_some() {
                continue;
            }
            e[v] = Some(step(d, q_order, u, v, eu)?);
            queue.push_back(v);
        }
    }
    let e: Vec<u64> = e
        .into_iter()
        .enumerate()
        .map(|(v, x)| x.ok_or(BraidingError::NotLinkConnected { vertex: v + 1 }))
        .collect::<Result<_, _>>()?;
    for u in 0..s {
        for v in d.cartan().neighbours(u) {
            let lhs = modulo(d.a(u, v) * e[u] as i64, q_order);
            let rhs = modulo(d.a(v, u) * e[v] as i64, q_order);
            if lhs != rhs {
                return Err(BraidingError::PathInconsistency { u: u + 1, v: v + 1 });
            }
        }
        if let Some(v) = d.partner(u) {
            if (e[u] + e[v]) % q_order != 0 {
                return Err(BraidingError::PathInconsistency { u: u + 1, v: v + 1 });
            }
        }
    }
    Ok(e)
}

fn step(
    d: &LinkableDynkinDiagram,
    q_order: u64,
    u: usize,
    v: usize,
    eu: u64,
) -> Result<u64, BraidingError> {
    if d.a(u, v) == 0 {
        return Ok(modulo(-(eu as i64), q_order));
    }
    let inv = mod_inv(d.a(v, u), q_order).ok_or(BraidingError::InadmissibleD {
        d: q_order,
        reason: format!("{} is not invertible modulo d", d.a(v, u)),
    })?;
    Ok(((eu as u128 * modulo(d.a(u, v), q_order) as u128 * inv as u128) % q_order as u128) as u64)
}

/// Fills every entry not yet set by `filled`, one fresh parameter per class instance starting at `z_{next_z}`.
///
/// The diagram must be in standard mode so that linkable vertices are not
/// neighbours.
pub(crate) fn fill_off_diagonal(
    d: &LinkableDynkinDiagram,
    entries: &mut [Vec<Option<RootExpr>>],
    mut next_z: u32,
) -> Result<(), BraidingError> {
    let s = d.size();
    let diag: Vec<RootExpr> = (0..s)
        .map(|i| entries[i][i].clone().expect("diagonal set"))
        .collect();
    let q_order = diag[0].root_order();
    let z_of = |id: u32, k: i64| RootExpr::one(q_order).with_z(id, k);
    for i in 0..s {
        for j in i + 1..s {
            if entries[i][j].is_some() {
                continue;
            }
            match (d.partner(i), d.partner(j)) {
                (Some(p), _) if p == j => {
                    entries[i][j] = Some(diag[i].inv());
                    entries[j][i] = Some(diag[j].inv());
                }
                (None, None) => {
                    let z = next_z;
                    next_z += 1;
                    entries[j][i] = Some(z_of(z, 1));
                    entries[i][j] = Some(&diag[i].pow(d.a(i, j)) * &z_of(z, -1));
                }
                (Some(_), None) | (None, Some(_)) => {
                    let (x, y) = if d.partner(i).is_some() {
                        (i, j)
                    } else {
                        (j, i)
                    };
                    let xp = d.partner(x).expect("linkable");
                    let (li, lk) = (x.min(xp), x.max(xp));
                    let z = next_z;
                    next_z += 1;
                    entries[y][li] = Some(z_of(z, 1));
                    entries[li][y] = Some(&diag[li].pow(d.a(li, y)) * &z_of(z, -1));
                    entries[y][lk] = Some(z_of(z, -1));
                    entries[lk][y] = Some(&diag[lk].pow(d.a(lk, y)) * &z_of(z, 1));
                }
                (Some(ip), Some(jp)) => {
                    let p = (i.min(ip), i.max(ip));
                    let q = (j.min(jp), j.max(jp));
                    let (p, q) = if p < q { (p, q) } else { (q, p) };
                    let (a, k, b, l) = [(p.0, p.1), (p.1, p.0)]
                        .into_iter()
                        .flat_map(|(a, k)| {
                            [(q.0, q.1), (q.1, q.0)]
                                .into_iter()
                                .map(move |(b, l)| (a, k, b, l))
                        })
                        .find(|&(a, k, b, l)| d.a(b, k) == 0 && d.a(a, l) == 0)
                        .ok_or(BraidingError::NoClassFourLabelling { i: i + 1, j: j + 1 })?;
                    let z = next_z;
                    next_z += 1;
                    let zp = z_of(z, 1);
                    let zm = z_of(z, -1);
                    let w = &diag[a].pow(d.a(a, b)) * &zm;
                    let w_inv = &diag[a].pow(-d.a(a, b)) * &zp;
                    entries[b][a] = Some(zp.clone());
                    entries[k][b] = Some(zp);
                    entries[a][b] = Some(w.clone());
                    entries[l][a] = Some(w);
                    entries[b][k] = Some(zm.clone());
                    entries[k][l] = Some(zm);
                    entries[a][l] = Some(w_inv.clone());
                    entries[l][k] = Some(w_inv);
                }
            }
        }
    }
    Ok(())
}

/// Builds a braiding matrix following the constructive proof of the existence theorems.
///
/// Runs the matching existence check first and refuses when it does not
/// answer yes. `d` defaults to the check's chosen order; `mode` selects the
/// finite or the homogeneous affine theorem.
pub fn construct(
    d: &LinkableDynkinDiagram,
    field: &FieldSpec,
    mode: GenusMode,
    q_order: Option<u64>,
    start: usize,
) -> Result<BraidingMatrix, BraidingError> {
    if d.mode() == LinkMode::SelfLink {
        return Err(BraidingError::SelfLinkMode);
    }
    if start >= d.size() {
        return Err(BraidingError::VertexOutOfRange {
            vertex: start + 1,
            size: d.size(),
        });
    }
    let report = match mode {
        GenusMode::Finite => check_finite(d, field)?,
        GenusMode::Affine => check_affine(d, field)?,
    };
    match report.decision {
        Decision::Yes => {}
        Decision::No => return Err(BraidingError::NotConstructible(report.to_string())),
        Decision::Excluded => {
            return Err(BraidingError::Excluded(
                report.excluded_shape.expect("excluded has a shape"),
            ))
        }
    }
    let chosen = report.chosen_d.expect("yes carries an order");
    let q_order = q_order.unwrap_or(chosen);
    let bad = |reason: &str| {
        Err(BraidingError::InadmissibleD {
            d: q_order,
            reason: reason.to_string(),
        })
    };
    if q_order <= 2 {
        return bad("d must exceed 2");
    }
    if q_order % 2 == 0 {
        return bad("d must be odd");
    }
    if report.has_g2 && q_order % 3 == 0 {
        return bad("d is divisible by 3 and a G_2 component is present");
    }
    if !field.has_primitive_root(q_order) {
        return bad("the field has no primitive d-th root of unity");
    }
    let g = report.genus_gcd.unwrap_or(0);
    if g != 0 && g % q_order != 0 {
        return bad("d does not divide the genus gcd");
    }
    if mode == GenusMode::Affine && !(is_prime(q_order) && q_order > 3) {
        return bad("homogeneous matrices need a prime d > 3");
    }
    let e = diagonal_exponents(d, q_order, start)?;
    let s = d.size();
    let mut entries: Vec<Vec<Option<RootExpr>>> = vec![vec![None; s]; s];
    for i in 0..s {
        entries[i][i] = Some(RootExpr::q_pow(q_order, e[i] as i64));
    }
    fill_off_diagonal(d, &mut entries, 1)?;
    let rows = entries
        .into_iter()
        .map(|r| r.into_iter().map(|x| x.expect("all set")).collect())
        .collect();
    BraidingMatrix::new(q_order, rows)
}
