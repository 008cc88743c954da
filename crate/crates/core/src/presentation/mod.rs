//! q-arithmetic, quantum Serre coefficients and the presentation of `u(D)`.

mod qvalue;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use qvalue::{cyclotomic_polynomial, CyclotomicValue, LaurentPoly, QValue};

use crate::realization::LinkingDatum;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("coefficient {0} still has free parameters")]
    FreeParameter(String),
}

/// `(n)_q = 1 + q + ... + q^{n-1}`.
pub fn qnumber<Q: QValue>(n: u32, q: &Q) -> Q {
    let mut acc = q.zero_like();
    let mut power = q.one_like();
    for _ in 0..n {
        acc = acc.add(&power);
        power = power.mul(q);
    }
    acc
}

pub fn qfactorial<Q: QValue>(n: u32, q: &Q) -> Q {
    (1..=n).fold(q.one_like(), |acc, k| acc.mul(&qnumber(k, q)))
}

/// Row `n` of the q-Pascal triangle, `[n, i] = [n-1, i-1] + q^i [n-1, i]`.
fn qbinomial_row<Q: QValue>(n: u32, q: &Q) -> Vec<Q> {
    let mut row = vec![q.one_like()];
    for m in 1..=n as usize {
        let mut next = Vec::with_capacity(m + 1);
        let mut qi = q.one_like();
        for i in 0..=m {
            let left = if i > 0 {
                row[i - 1].clone()
            } else {
                q.zero_like()
            };
            let right = if i < m {
                qi.mul(&row[i])
            } else {
                q.zero_like()
            };
            next.push(left.add(&right));
            qi = qi.mul(q);
        }
        row = next;
    }
    row
}

pub fn qbinomial<Q: QValue>(n: u32, i: u32, q: &Q) -> Result<Q, PresentationError> {
    if i > n {
        return Err(PresentationError::IndexOutOfRange(format!(
            "binomial [{n}, {i}] needs 0 <= i <= n"
        )));
    }
    Ok(qbinomial_row(n, q).swap_remove(i as usize))
}

/// Evaluates one of the three q-binomial identities exactly.
///
/// 1. `q^i [n,i] + [n,i-1] = [n,i] + q^{n+1-i} [n,i-1] = [n+1,i]` for `1 <= i <= n`
/// 2. `sum_i (-1)^i q^{i(i-1)/2} [n,i] = 0` for `n >= 1`
/// 3. `sum_i (-1)^i q^{(i^2+i)/2 - n i} [n,i] = 0` for `n >= 1`
///
/// `i` is ignored for the two sums.
pub fn check_identity<Q: QValue>(
    which: u8,
    n: u32,
    i: u32,
    q: &Q,
) -> Result<bool, PresentationError> {
    if n == 0 {
        return Err(PresentationError::IndexOutOfRange(
            "identities need n >= 1".into(),
        ));
    }
    let row = qbinomial_row(n, q);
    match which {
        1 => {
            if i == 0 || i > n {
                return Err(PresentationError::IndexOutOfRange(format!(
                    "identity 1 needs 1 <= i <= n, got i = {i}"
                )));
            }
            let (b, b_prev) = (&row[i as usize], &row[i as usize - 1]);
            let rhs = qbinomial_row(n + 1, q).swap_remove(i as usize);
            let first = q.pow_i(i as i64)?.mul(b).add(b_prev);
            let second = b.add(&q.pow_i((n + 1 - i) as i64)?.mul(b_prev));
            Ok(first.equals(&rhs) && second.equals(&rhs))
        }
        2 | 3 => {
            let mut sum = q.zero_like();
            for (k, b) in row.iter().enumerate() {
                let k = k as i64;
                let e = if which == 2 {
                    k * (k - 1) / 2
                } else {
                    (k * k + k) / 2 - n as i64 * k
                };
                let term = q.pow_i(e)?.mul(b);
                sum = if k % 2 == 0 {
                    sum.add(&term)
                } else {
                    sum.sub(&term)
                };
            }
            Ok(sum.is_zero())
        }
        other => Err(PresentationError::IndexOutOfRange(format!(
            "no identity {other}; choose 1, 2 or 3"
        ))),
    }
}

/// `c_k` for the word `a_i^{1-a_ij-k} a_j a_i^k`, `k = 0, ..., 1 - a_ij`.
pub fn serre_coefficients<Q: QValue>(a_ij: i64, q_i: &Q, b_ij: &Q) -> Vec<Q> {
    assert!(a_ij <= 0, "off-diagonal Cartan entries are nonpositive");
    let top = (1 - a_ij) as u32;
    let row = qbinomial_row(top, q_i);
    row.iter()
        .enumerate()
        .map(|(k, b)| {
            let k = k as i64;
            let c = b
                .mul(&q_i.pow_i(k * (k - 1) / 2).expect("nonnegative power"))
                .mul(&b_ij.pow_i(k).expect("nonnegative power"));
            if k % 2 == 0 {
                c
            } else {
                c.neg()
            }
        })
        .collect()
}

/// Generator names with exponents, left to right; an empty word is `1`.
pub type Word = Vec<(String, i64)>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Term {
    /// Group-ring terms `(exponent of q, integer coefficient)`.
    pub coefficient: Vec<(i64, i64)>,
    pub word: Word,
}

impl Term {
    fn unit(word: Word) -> Self {
        Term {
            coefficient: vec![(0, 1)],
            word,
        }
    }

    fn scaled(c: &CyclotomicValue, word: Word) -> Self {
        Term {
            coefficient: c.terms().collect(),
            word,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationKind {
    Group,
    Mixed,
    Serre,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub kind: RelationKind,
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

/// `Δ(x) = sum of left ⊗ right`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coproduct {
    pub generator: String,
    pub terms: Vec<(Word, Word)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HopfPresentation {
    pub root_order: u64,
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
    pub coproduct: Vec<Coproduct>,
}

impl HopfPresentation {
    pub fn relations_of(&self, kind: RelationKind) -> impl Iterator<Item = &Relation> {
        self.relations.iter().filter(move |r| r.kind == kind)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

fn h(t: usize) -> String {
    format!("h{}", t + 1)
}

fn a(i: usize) -> String {
    format!("a{}", i + 1)
}

fn group_word(x: &[i64]) -> Word {
    x.iter()
        .enumerate()
        .filter(|(_, &k)| k != 0)
        .map(|(t, &k)| (h(t), k))
        .collect()
}

fn serre_word(i: usize, j: usize, left: i64, right: i64) -> Word {
    [(a(i), left), (a(j), 1), (a(i), right)]
        .into_iter()
        .filter(|(_, k)| *k != 0)
        .collect()
}

/// Generators, relations and coproduct of `u(D)` for a linking datum.
pub fn emit_presentation(datum: &LinkingDatum) -> Result<HopfPresentation, PresentationError> {
    let d = datum.q_order;
    let group = &datum.group;
    let (l, s) = (group.rank(), datum.size());
    let pure = |r: &crate::braiding::RootExpr| CyclotomicValue::from_root(r);
    let mut generators: Vec<String> = (0..l).map(h).collect();
    generators.extend((0..s).map(a));

    let mut relations = Vec::new();
    for (t, &f) in group.invariant_factors().iter().enumerate() {
        if f != 0 {
            relations.push(Relation {
                kind: RelationKind::Group,
                lhs: vec![Term::unit(vec![(h(t), f as i64)])],
                rhs: vec![Term::unit(vec![])],
            });
        }
    }
    for t in 0..l {
        for u in t + 1..l {
            relations.push(Relation {
                kind: RelationKind::Group,
                lhs: vec![Term::unit(vec![(h(t), 1), (h(u), 1)])],
                rhs: vec![Term::unit(vec![(h(u), 1), (h(t), 1)])],
            });
        }
    }
    for t in 0..l {
        for j in 0..s {
            let c = pure(&datum.chi[j][t])?;
            relations.push(Relation {
                kind: RelationKind::Mixed,
                lhs: vec![Term::unit(vec![(h(t), 1), (a(j), 1)])],
                rhs: vec![Term::scaled(&c, vec![(a(j), 1), (h(t), 1)])],
            });
        }
    }
    let b = datum.braiding_matrix();
    let dg = &datum.diagram;
    for i in 0..s {
        for j in i + 1..s {
            let a_ij = dg.a(i, j);
            let coeffs = serre_coefficients(a_ij, &pure(b.get(i, i))?, &pure(b.get(i, j))?);
            let top = 1 - a_ij;
            let lhs = (0..=top)
                .map(|k| Term::scaled(&coeffs[k as usize], serre_word(i, j, top - k, k)))
                .collect();
            let rhs = if dg.lambda(i, j) {
                let x: Vec<i64> = datum.g[i]
                    .iter()
                    .zip(&datum.g[j])
                    .map(|(gi, gj)| top * gi + gj)
                    .collect();
                let minus = Term {
                    coefficient: vec![(0, -1)],
                    word: group_word(&group.reduce(&x)),
                };
                vec![Term::unit(vec![]), minus]
            } else {
                Vec::new()
            };
            relations.push(Relation {
                kind: RelationKind::Serre,
                lhs,
                rhs,
            });
        }
    }

    let mut coproduct: Vec<Coproduct> = (0..l)
        .map(|t| Coproduct {
            generator: h(t),
            terms: vec![(vec![(h(t), 1)], vec![(h(t), 1)])],
        })
        .collect();
    for i in 0..s {
        coproduct.push(Coproduct {
            generator: a(i),
            terms: vec![
                (vec![(a(i), 1)], vec![]),
                (group_word(&group.reduce(&datum.g[i])), vec![(a(i), 1)]),
            ],
        });
    }
    Ok(HopfPresentation {
        root_order: d,
        generators,
        relations,
        coproduct,
    })
}

struct WordDisplay<'a>(&'a [(String, i64)]);

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (n, (g, k)) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            if *k == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{k}")?;
            }
        }
        Ok(())
    }
}

struct CoefficientDisplay<'a>(&'a [(i64, i64)]);

impl fmt::Display for CoefficientDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        qvalue::write_terms(f, self.0.iter().copied(), "q")
    }
}

fn render_term(t: &Term) -> String {
    let c = CoefficientDisplay(&t.coefficient).to_string();
    let w = WordDisplay(&t.word).to_string();
    match (t.coefficient.as_slice(), t.word.is_empty()) {
        (_, true) => c,
        ([(0, 1)], false) => w,
        ([(0, -1)], false) => format!("-{w}"),
        ([_], false) => format!("{c} {w}"),
        _ => format!("({c}) {w}"),
    }
}

fn render_sum(terms: &[Term]) -> String {
    let mut out = String::new();
    for (n, t) in terms.iter().enumerate() {
        let r = render_term(t);
        match (n, r.strip_prefix('-')) {
            (0, _) => out.push_str(&r),
            (_, Some(rest)) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            (_, None) => {
                out.push_str(" + ");
                out.push_str(&r);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", render_sum(&self.lhs), render_sum(&self.rhs))
    }
}

impl fmt::Display for HopfPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "q: primitive root of unity of order {}", self.root_order)?;
        writeln!(f, "generators: {}", self.generators.join(" "))?;
        for r in &self.relations {
            writeln!(f, "{r}")?;
        }
        for c in &self.coproduct {
            let parts: Vec<String> = c
                .terms
                .iter()
                .map(|(x, y)| format!("{} ⊗ {}", WordDisplay(x), WordDisplay(y)))
                .collect();
            writeln!(f, "Δ({}) = {}", c.generator, parts.join(" + "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::{construct, RootExpr};
    use crate::cycles::GenusMode;
    use crate::diagram::{cartan_from_edges, CartanMatrix, LinkMode, LinkableDynkinDiagram};
    use crate::existence::FieldSpec;
    use crate::realization::{double_datum, realize_free};
    use proptest::prelude::*;
    use std::collections::{BTreeMap, BTreeSet};

    fn q() -> LaurentPoly {
        LaurentPoly::q()
    }

    #[test]
    fn small_values() {
        assert_eq!(qnumber(3, &q()).to_string(), "1 + q + q^2");
        assert_eq!(qbinomial(5, 0, &q()).unwrap(), LaurentPoly::constant(1));
        assert_eq!(qbinomial(4, 2, &q()).unwrap().at_one(), 6);
        assert_eq!(
            qbinomial(4, 2, &q()).unwrap().to_string(),
            "1 + q + 2q^2 + q^3 + q^4"
        );
        assert!(matches!(
            qbinomial(2, 3, &q()),
            Err(PresentationError::IndexOutOfRange(_))
        ));
    }

    #[test]
    fn identity_examples() {
        assert!(check_identity(2, 1, 0, &q()).unwrap());
        assert!(check_identity(1, 2, 1, &q()).unwrap());
        // q (2)_q + 1 = (3)_q
        assert_eq!(
            q().mul(&qnumber(2, &q())).add(&LaurentPoly::constant(1)),
            qnumber(3, &q())
        );
        assert!(check_identity(3, 2, 0, &CyclotomicValue::root_pow(5, 1)).unwrap());
        assert!(check_identity(1, 3, 0, &q()).is_err());
        assert!(check_identity(4, 3, 1, &q()).is_err());
    }

    #[test]
    fn identities_up_to_eight() {
        for n in 1..=8 {
            for which in [2, 3] {
                assert!(check_identity(which, n, 0, &q()).unwrap());
            }
            for i in 1..=n {
                assert!(check_identity(1, n, i, &q()).unwrap());
            }
            for d in [5u64, 7, 11] {
                for step in (1..d as i64).filter(|s| num_integer::Integer::gcd(s, &(d as i64)) == 1)
                {
                    let z = CyclotomicValue::root_pow(d, step);
                    assert!(
                        check_identity(2, n, 0, &z).unwrap()
                            && check_identity(3, n, 0, &z).unwrap()
                    );
                    for i in 1..=n {
                        assert!(check_identity(1, n, i, &z).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn pascal_matches_factorial_quotient() {
        for n in 0..=8 {
            for i in 0..=n {
                let den = qfactorial(i, &q()).mul(&qfactorial(n - i, &q()));
                assert_eq!(
                    qfactorial(n, &q()).div_exact(&den),
                    Some(qbinomial(n, i, &q()).unwrap())
                );
            }
        }
    }

    /// Coefficients of `(ad a_i)^{top}(a_j)` by iterating `x -> a_i x - (g_i . x) a_i` on words.
    fn expand_adjoint(top: usize) -> Vec<BTreeMap<(i64, i64), i64>> {
        // word a_i^{top-k} a_j a_i^k after all steps; coefficient keyed by (q_i power, b_ij power)
        let mut cur: BTreeMap<(usize, usize), BTreeMap<(i64, i64), i64>> = BTreeMap::new();
        cur.insert((0, 0), BTreeMap::from([((0, 0), 1)]));
        for _ in 0..top {
            let mut next: BTreeMap<(usize, usize), BTreeMap<(i64, i64), i64>> = BTreeMap::new();
            for (&(left, right), coeff) in &cur {
                let add = |next: &mut BTreeMap<_, BTreeMap<(i64, i64), i64>>,
                           key,
                           sign: i64,
                           dq: i64,
                           db: i64| {
                    let slot: &mut BTreeMap<(i64, i64), i64> = next.entry(key).or_default();
                    for (&(eq, eb), &c) in coeff {
                        *slot.entry((eq + dq, eb + db)).or_insert(0) += sign * c;
                    }
                };
                add(&mut next, (left + 1, right), 1, 0, 0);
                add(&mut next, (left, right + 1), -1, (left + right) as i64, 1);
            }
            cur = next;
        }
        (0..=top)
            .map(|k| cur.get(&(top - k, k)).cloned().unwrap_or_default())
            .collect()
    }

    #[test]
    fn serre_matches_adjoint_expansion() {
        for a_ij in [0i64, -1, -2, -3] {
            let top = (1 - a_ij) as usize;
            let expanded = expand_adjoint(top);
            // b_ij enters only as b^k; check with b = q^{100} to separate the variables
            let b = LaurentPoly::monomial(1, 100);
            let coeffs = serre_coefficients(a_ij, &q(), &b);
            assert_eq!(coeffs.len(), top + 1);
            for (k, c) in coeffs.iter().enumerate() {
                let want = LaurentPoly::from_terms(
                    expanded[k].iter().map(|(&(eq, eb), &c)| (eq + 100 * eb, c)),
                );
                assert_eq!(c, &want, "a_ij = {a_ij}, k = {k}");
            }
        }
    }

    #[test]
    fn serre_examples() {
        let b = LaurentPoly::monomial(1, 100);
        let c0 = serre_coefficients(0, &q(), &b);
        assert_eq!(c0, vec![LaurentPoly::constant(1), b.neg()]);
        let c1 = serre_coefficients(-1, &q(), &b);
        assert_eq!(c1[1], qnumber(2, &q()).mul(&b).neg());
        assert_eq!(c1[2], q().mul(&b).mul(&b));
        let one = LaurentPoly::constant(1);
        let at_one: Vec<i64> = serre_coefficients(-1, &one, &one)
            .iter()
            .map(LaurentPoly::at_one)
            .collect();
        assert_eq!(at_one, vec![1, -2, 1]);
    }

    proptest! {
        #[test]
        fn serre_at_one_is_signed_binomial(a_ij in -6i64..=0) {
            let one = LaurentPoly::constant(1);
            let cs: Vec<i64> = serre_coefficients(a_ij, &one, &one).iter().map(LaurentPoly::at_one).collect();
            let top = (1 - a_ij) as i64;
            let mut binom = 1i64;
            for (k, &c) in cs.iter().enumerate() {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                prop_assert_eq!(c, sign * binom);
                binom = binom * (top - k as i64) / (k as i64 + 1);
            }
            prop_assert_eq!(cs.iter().sum::<i64>(), 0);
        }

        #[test]
        fn identities_at_roots(d in 3u64..24, step in 1i64..24, n in 1u32..9) {
            let z = CyclotomicValue::root_pow(d, step);
            prop_assert!(check_identity(2, n, 0, &z).unwrap());
            prop_assert!(check_identity(3, n, 0, &z).unwrap());
            for i in 1..=n {
                prop_assert!(check_identity(1, n, i, &z).unwrap());
            }
        }
    }

    #[test]
    fn sl2_pattern() {
        let a1 = CartanMatrix::new(vec![vec![2]]).unwrap();
        let datum = double_datum(&a1, &[1], 5).unwrap();
        let p = emit_presentation(&datum).unwrap();
        assert_eq!(p.generators, ["h1", "a1", "a2"]);
        let serre: Vec<String> = p
            .relations_of(RelationKind::Serre)
            .map(|r| r.to_string())
            .collect();
        // K = g_1, E = a_1, F = a_2 g_1^{-1}: a_1 a_2 - q^{-2} a_2 a_1 = 1 - K^2
        assert_eq!(serre, ["a1 a2 - q^3 a2 a1 = 1 - h1^2"]);
        let text = p.to_string();
        assert!(text.contains("h1 a1 = q^2 a1 h1"), "{text}");
        assert!(text.contains("h1 a2 = q^3 a2 h1"), "{text}");
        assert!(text.contains("Δ(a2) = a2 ⊗ 1 + h1 ⊗ a2"), "{text}");
        assert!(text.contains("Δ(h1) = h1 ⊗ h1"), "{text}");
    }

    #[test]
    fn unlinked_datum_has_zero_right_sides() {
        let dg = LinkableDynkinDiagram::unlinked(
            cartan_from_edges(3, &[(0, 1, -1, -1), (1, 2, -2, -1)]).unwrap(),
        );
        let b = construct(&dg, &FieldSpec::cyclotomic(), GenusMode::Finite, Some(5), 0).unwrap();
        let datum = realize_free(&b, &dg, &BTreeMap::new()).unwrap();
        let p = emit_presentation(&datum).unwrap();
        let serre: Vec<&Relation> = p.relations_of(RelationKind::Serre).collect();
        assert_eq!(serre.len(), 3);
        for r in &serre {
            assert!(r.rhs.is_empty());
            assert!(r.to_string().ends_with(" = 0"));
        }
        let lens: BTreeSet<usize> = serre.iter().map(|r| r.lhs.len()).collect();
        assert_eq!(lens, BTreeSet::from([2, 3, 4]));
        // a_13 = 0: a1 a3 = b_13 a3 a1
        let b13 = RootExpr::q_pow(
            5,
            b.get(0, 2).instantiate(&BTreeMap::new()).exponent() as i64,
        );
        let minus_b13: Vec<(i64, i64)> = CyclotomicValue::from_root(&b13)
            .unwrap()
            .neg()
            .terms()
            .collect();
        assert_eq!(serre[1].lhs[1].coefficient, minus_b13);
        assert_eq!(
            serre[1].lhs[0].word,
            vec![("a1".to_string(), 1), ("a3".to_string(), 1)]
        );
    }

    #[test]
    fn linked_pair_right_side_and_json() {
        let dg = LinkableDynkinDiagram::new(
            CartanMatrix::diagonal(2),
            &[(0, 1)],
            &[(0, 1)],
            LinkMode::Standard,
        )
        .unwrap();
        let b = construct(&dg, &FieldSpec::cyclotomic(), GenusMode::Finite, Some(5), 0).unwrap();
        let datum = realize_free(&b, &dg, &BTreeMap::new()).unwrap();
        let p = emit_presentation(&datum).unwrap();
        let serre = p.relations_of(RelationKind::Serre).next().unwrap();
        assert_eq!(serre.rhs.len(), 2);
        assert_eq!(
            serre.rhs[1].word,
            vec![("h1".to_string(), 1), ("h2".to_string(), 1)]
        );
        let json: serde_json::Value = serde_json::from_str(&p.to_json()).unwrap();
        assert_eq!(
            json["relations"].as_array().unwrap().last().unwrap()["kind"],
            "serre"
        );
    }
}
