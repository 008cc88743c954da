use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_integer::Integer;

use super::BraidingError;
use crate::arith::modulo;

/// `q^e * z1^k1 * z2^k2 * ...` for a fixed primitive `d`-th root of unity `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootExpr {
    d: u64,
    exp: u64,
    z: BTreeMap<u32, i64>,
}

impl RootExpr {
    /// `q^e`.
    pub fn q_pow(d: u64, e: i64) -> Self {
        assert!(d > 0, "root order must be positive");
        RootExpr {
            d,
            exp: modulo(e, d),
            z: BTreeMap::new(),
        }
    }

    pub fn one(d: u64) -> Self {
        Self::q_pow(d, 0)
    }

    /// The free parameter `z_id`.
    pub fn z(d: u64, id: u32) -> Self {
        Self::one(d).with_z(id, 1)
    }

    /// Multiplies by `z_id^k`.
    pub fn with_z(mut self, id: u32, k: i64) -> Self {
        let e = self.z.entry(id).or_insert(0);
        *e += k;
        if *e == 0 {
            self.z.remove(&id);
        }
        self
    }

    pub fn root_order(&self) -> u64 {
        self.d
    }

    /// Exponent of `q`, in `[0, d)`.
    pub fn exponent(&self) -> u64 {
        self.exp
    }

    pub fn z_exponents(&self) -> &BTreeMap<u32, i64> {
        &self.z
    }

    pub fn is_pure(&self) -> bool {
        self.z.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.exp == 0 && self.z.is_empty()
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    pub fn pow(&self, k: i64) -> Self {
        let exp = (self.exp as i128 * k as i128).rem_euclid(self.d as i128) as u64;
        let z = self
            .z
            .iter()
            .map(|(&id, &e)| (id, e * k))
            .filter(|&(_, e)| e != 0)
            .collect();
        RootExpr { d: self.d, exp, z }
    }

    /// Multiplicative order; `None` while free parameters remain.
    pub fn order(&self) -> Option<u64> {
        self.is_pure().then(|| self.d / self.d.gcd(&self.exp))
    }

    /// The same element written over a root of order `d2`, a multiple of `d`.
    pub fn lift(&self, d2: u64) -> Result<Self, BraidingError> {
        if d2 % self.d != 0 {
            return Err(BraidingError::OrderMismatch {
                left: self.d,
                right: d2,
            });
        }
        Ok(RootExpr {
            d: d2,
            exp: self.exp * (d2 / self.d),
            z: self.z.clone(),
        })
    }

    /// Replaces each `z_t` by `q^{values[t]}` (missing ones by 1).
    pub fn instantiate(&self, values: &BTreeMap<u32, i64>) -> Self {
        let extra: i128 = self
            .z
            .iter()
            .map(|(id, &k)| k as i128 * *values.get(id).unwrap_or(&0) as i128)
            .sum();
        RootExpr::q_pow(
            self.d,
            ((self.exp as i128 + extra).rem_euclid(self.d as i128)) as i64,
        )
    }

    /// Renumbers free parameters by adding `offset`.
    pub fn shift_parameters(&self, offset: u32) -> Self {
        RootExpr {
            d: self.d,
            exp: self.exp,
            z: self.z.iter().map(|(&id, &k)| (id + offset, k)).collect(),
        }
    }
}

impl Mul for &RootExpr {
    type Output = RootExpr;

    fn mul(self, rhs: &RootExpr) -> RootExpr {
        assert_eq!(self.d, rhs.d, "root orders differ");
        let mut out = RootExpr {
            d: self.d,
            exp: (self.exp + rhs.exp) % self.d,
            z: self.z.clone(),
        };
        for (&id, &k) in &rhs.z {
            out = out.with_z(id, k);
        }
        out
    }
}

impl Mul for RootExpr {
    type Output = RootExpr;

    fn mul(self, rhs: RootExpr) -> RootExpr {
        &self * &rhs
    }
}

impl fmt::Display for RootExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^{}", self.exp)?;
        for (id, k) in &self.z {
            write!(f, "*z{id}^{k}")?;
        }
        Ok(())
    }
}

impl RootExpr {
    /// Parses the `Display` form over a given root order.
    pub fn parse(s: &str, d: u64) -> Result<Self, BraidingError> {
        let bad = || BraidingError::Parse(format!("bad entry `{s}`"));
        let mut out = RootExpr::one(d);
        for (t, factor) in s.split('*').enumerate() {
            let (base, exp) = factor.split_once('^').ok_or_else(bad)?;
            let k = i64::from_str(exp).map_err(|_| bad())?;
            if t == 0 {
                if base != "q" {
                    return Err(bad());
                }
                out = &out * &RootExpr::q_pow(d, k);
            } else if let Some(id) = base.strip_prefix('z') {
                let id = u32::from_str(id).map_err(|_| bad())?;
                if k == 0 || out.z.contains_key(&id) {
                    return Err(bad());
                }
                out = out.with_z(id, k);
            } else {
                return Err(bad());
            }
        }
        Ok(out)
    }
}
