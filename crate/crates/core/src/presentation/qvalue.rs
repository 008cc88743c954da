use std::collections::BTreeMap;
use std::fmt;

use super::PresentationError;
use crate::braiding::RootExpr;

/// Exact commutative ring values the q-arithmetic runs over.
pub trait QValue: Clone + fmt::Debug + fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Integer powers; negative ones only for monomials.
    fn pow_i(&self, k: i64) -> Result<Self, PresentationError>;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn equals(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }

    fn scale(&self, c: i64) -> Self {
        let mut acc = self.zero_like();
        let term = if c < 0 { self.neg() } else { self.clone() };
        for _ in 0..c.unsigned_abs() {
            acc = acc.add(&term);
        }
        acc
    }
}

/// Laurent polynomial in `q` with integer coefficients, kept normalized.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(c: i64, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = LaurentPoly::default();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: i64, c: i64) {
        let v = self.terms.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.terms.remove(&e);
        }
    }

    /// `(exponent, coefficient)` pairs, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Image under `q -> ζ^step` in the `d`-th cyclotomic ring.
    pub fn evaluate(&self, d: u64, step: i64) -> CyclotomicValue {
        let mut v = CyclotomicValue::zero(d);
        for (e, c) in self.terms() {
            v.coeffs[(e * step).rem_euclid(d as i64) as usize] += c;
        }
        v
    }

    /// Quotient by a polynomial, if it divides exactly.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let (&dl, &dc) = divisor.terms.iter().next_back()?;
        let mut rem = self.clone();
        let mut quo = LaurentPoly::default();
        while let Some((&rl, &rc)) = rem.terms.iter().next_back() {
            if rc % dc != 0 {
                return None;
            }
            let (e, c) = (rl - dl, rc / dc);
            let lowest_divisor = *divisor.terms.keys().next().expect("nonzero");
            let lowest_rem = *rem.terms.keys().next().expect("nonzero");
            if e + lowest_divisor < lowest_rem {
                return None;
            }
            quo.add_term(e, c);
            rem = rem.sub(&LaurentPoly::monomial(c, e).mul(divisor));
        }
        Some(quo)
    }
}

impl QValue for LaurentPoly {
    fn zero_like(&self) -> Self {
        LaurentPoly::default()
    }

    fn one_like(&self) -> Self {
        LaurentPoly::constant(1)
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::default();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn pow_i(&self, k: i64) -> Result<Self, PresentationError> {
        if k >= 0 {
            let mut acc = self.one_like();
            for _ in 0..k {
                acc = acc.mul(self);
            }
            return Ok(acc);
        }
        match self.terms.iter().collect::<Vec<_>>().as_slice() {
            [(&e, &c)] if c == 1 || c == -1 => {
                let sign = if c == -1 && k % 2 != 0 { -1 } else { 1 };
                Ok(LaurentPoly::monomial(sign, e * k))
            }
            _ => Err(PresentationError::NotInvertible(self.to_string())),
        }
    }
}

pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, i64)>,
    var: &str,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        let (sign, a) = if c < 0 { ("-", -c) } else { ("+", c) };
        if first {
            if sign == "-" {
                f.write_str("-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        match (e, a) {
            (0, a) => write!(f, "{a}")?,
            (1, 1) => write!(f, "{var}")?,
            (e, 1) => write!(f, "{var}^{e}")?,
            (1, a) => write!(f, "{a}{var}")?,
            (e, a) => write!(f, "{a}{var}^{e}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms(), "q")
    }
}

/// Element of `Z[ζ_d]` stored in the group ring `Z[x]/(x^d - 1)`; equality is decided modulo `Φ_d`.
#[derive(Debug, Clone)]
pub struct CyclotomicValue {
    d: u64,
    coeffs: Vec<i64>,
}

impl CyclotomicValue {
    pub fn zero(d: u64) -> Self {
        assert!(d > 0, "root order must be positive");
        CyclotomicValue {
            d,
            coeffs: vec![0; d as usize],
        }
    }

    /// `ζ^e`.
    pub fn root_pow(d: u64, e: i64) -> Self {
        let mut v = Self::zero(d);
        v.coeffs[e.rem_euclid(d as i64) as usize] = 1;
        v
    }

    /// A parameter-free root expression.
    pub fn from_root(r: &RootExpr) -> Result<Self, PresentationError> {
        if !r.is_pure() {
            return Err(PresentationError::FreeParameter(r.to_string()));
        }
        Ok(Self::root_pow(r.root_order(), r.exponent() as i64))
    }

    pub fn root_order(&self) -> u64 {
        self.d
    }

    /// `(exponent, coefficient)` of the group-ring form, ascending, zeros dropped.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(e, &c)| (e as i64, c))
    }

    /// Canonical representative of degree below `φ(d)`.
    pub fn reduced(&self) -> Vec<i64> {
        let phi = cyclotomic_polynomial(self.d);
        let mut r = self.coeffs.clone();
        let deg = phi.len() - 1;
        for top in (deg..r.len()).rev() {
            let c = r[top];
            if c != 0 {
                for (t, &p) in phi.iter().enumerate() {
                    r[top - deg + t] -= c * p;
                }
            }
        }
        r.truncate(deg);
        r
    }
}

impl PartialEq for CyclotomicValue {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d && self.equals(other)
    }
}

impl Eq for CyclotomicValue {}

impl QValue for CyclotomicValue {
    fn zero_like(&self) -> Self {
        Self::zero(self.d)
    }

    fn one_like(&self) -> Self {
        Self::root_pow(self.d, 0)
    }

    fn add(&self, other: &Self) -> Self {
        assert_eq!(self.d, other.d, "root orders differ");
        CyclotomicValue {
            d: self.d,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.d, other.d, "root orders differ");
        let d = self.d as usize;
        let mut out = Self::zero(self.d);
        for (i, &a) in self.coeffs.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in other.coeffs.iter().enumerate().filter(|(_, &b)| b != 0) {
                out.coeffs[(i + j) % d] += a * b;
            }
        }
        out
    }

    fn neg(&self) -> Self {
        CyclotomicValue {
            d: self.d,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn is_zero(&self) -> bool {
        self.reduced().iter().all(|&c| c == 0)
    }

    fn pow_i(&self, k: i64) -> Result<Self, PresentationError> {
        if k >= 0 {
            let mut acc = self.one_like();
            for _ in 0..k {
                acc = acc.mul(self);
            }
            return Ok(acc);
        }
        match self.terms().collect::<Vec<_>>().as_slice() {
            [(e, c)] if *c == 1 || *c == -1 => {
                let mut v = Self::root_pow(self.d, e * k);
                if *c == -1 && k % 2 != 0 {
                    v = v.neg();
                }
                Ok(v)
            }
            _ => Err(PresentationError::NotInvertible(self.to_string())),
        }
    }
}

impl fmt::Display for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms(), "q")
    }
}

/// `Φ_d` as ascending integer coefficients.
pub fn cyclotomic_polynomial(d: u64) -> Vec<i64> {
    let mut num = vec![0i64; d as usize + 1];
    num[0] = -1;
    num[d as usize] = 1;
    for e in (1..d).filter(|e| d % e == 0) {
        num = divide_monic(&num, &cyclotomic_polynomial(e));
    }
    num
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quo = vec![0i64; num.len() - dd];
    for top in (dd..num.len()).rev() {
        let c = rem[top];
        quo[top - dd] = c;
        for (t, &p) in den.iter().enumerate() {
            rem[top - dd + t] -= c * p;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quo
}
