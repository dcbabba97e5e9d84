//! Laurent-polynomial coefficients over basepoint symbols.
//!
//! The coefficient ring is `Z[s_1^{±1}, ..., s_k^{±1}]` where the symbols are
//! basepoint labels (`t_i` for link basepoints, `s_i` for pinch arcs). Symbols are
//! central: they commute with each other and with every Reeb-chord generator.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// A signed-exponent monomial in the basepoint symbols, e.g. `s1^-1*s2`.
///
/// Canonical form: no zero exponents, symbols sorted by name.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(BTreeMap<String, i64>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(sym: &str) -> Self {
        Self::var_pow(sym, 1)
    }

    pub fn var_pow(sym: &str, e: i64) -> Self {
        let mut m = BTreeMap::new();
        if e != 0 {
            m.insert(sym.to_string(), e);
        }
        Monomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, sym: &str) -> i64 {
        self.0.get(sym).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&str, i64)> {
        self.0.iter().map(|(s, &e)| (s.as_str(), e))
    }

    pub fn symbols(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(|s| s.as_str())
    }

    pub fn inv(&self) -> Self {
        Monomial(self.0.iter().map(|(s, e)| (s.clone(), -e)).collect())
    }

    pub fn pow(&self, n: i64) -> Self {
        if n == 0 {
            return Monomial::one();
        }
        Monomial(
            self.0
                .iter()
                .filter_map(|(s, e)| {
                    let p = e * n;
                    (p != 0).then(|| (s.clone(), p))
                })
                .collect(),
        )
    }
}

impl Mul for &Monomial {
    type Output = Monomial;
    fn mul(self, rhs: &Monomial) -> Monomial {
        let mut m = self.0.clone();
        for (s, e) in &rhs.0 {
            let v = m.entry(s.clone()).or_insert(0);
            *v += e;
            if *v == 0 {
                m.remove(s);
            }
        }
        Monomial(m)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (s, e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// An element of the Laurent coefficient ring: a finite `Z`-combination of monomials.
///
/// Canonical form: no zero coefficients. Equality is structural equality of the map.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Laurent(BTreeMap<Monomial, BigInt>);

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CoeffError {
    #[error("symbol {0} has no assigned value")]
    Unassigned(String),
    #[error("substitution target for {0} must be a unit (signed monomial), got {1}")]
    NonUnitSubstitution(String, String),
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent(BTreeMap::new())
    }

    pub fn one() -> Self {
        Laurent::from_monomial(Monomial::one(), BigInt::one())
    }

    pub fn int(n: i64) -> Self {
        Laurent::from_monomial(Monomial::one(), BigInt::from(n))
    }

    pub fn var(sym: &str) -> Self {
        Laurent::from_monomial(Monomial::var(sym), BigInt::one())
    }

    pub fn var_pow(sym: &str, e: i64) -> Self {
        Laurent::from_monomial(Monomial::var_pow(sym, e), BigInt::one())
    }

    pub fn from_monomial(m: Monomial, c: BigInt) -> Self {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert(m, c);
        }
        Laurent(t)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1
            && self
                .0
                .get(&Monomial::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.0.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.0.len()
    }

    /// The coefficient of a monomial (zero when absent).
    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.0.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::one())
    }

    /// Returns `(sign, monomial)` when the element is a unit `±m`, else `None`.
    pub fn as_unit(&self) -> Option<(i8, Monomial)> {
        if self.0.len() != 1 {
            return None;
        }
        let (m, c) = self.0.iter().next().unwrap();
        if c.magnitude() == BigInt::one().magnitude() {
            Some((if c.is_negative() { -1 } else { 1 }, m.clone()))
        } else {
            None
        }
    }

    pub fn symbols(&self) -> impl Iterator<Item = &str> {
        let mut seen: Vec<&str> = self
            .0
            .keys()
            .flat_map(|m| m.symbols())
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect::<Vec<_>>();
        seen.sort_unstable();
        seen.into_iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let v = self.0.entry(m.clone()).or_insert_with(BigInt::zero);
        *v += c;
        if v.is_zero() {
            self.0.remove(&m);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Laurent {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent(self.0.iter().map(|(m, v)| (m.clone(), v * c)).collect())
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Laurent {
        Laurent(self.0.iter().map(|(k, v)| (k * m, v.clone())).collect())
    }

    /// Multiplicative inverse when the element is a unit `±m`.
    pub fn unit_inv(&self) -> Option<Laurent> {
        let (s, m) = self.as_unit()?;
        Some(Laurent::from_monomial(m.inv(), BigInt::from(s)))
    }

    /// Substitute `sym := value` where `value` must be a unit (signed monomial),
    /// so that negative exponents of `sym` stay in the ring.
    pub fn substitute(&self, sym: &str, value: &Laurent) -> Result<Laurent, CoeffError> {
        let (vs, vm) = value
            .as_unit()
            .ok_or_else(|| CoeffError::NonUnitSubstitution(sym.to_string(), value.to_string()))?;
        let mut out = Laurent::zero();
        for (m, c) in &self.0 {
            let e = m.exponent(sym);
            if e == 0 {
                out.add_term(m.clone(), c);
                continue;
            }
            let rest = m * &Monomial::var_pow(sym, -e);
            let sub = vm.pow(e);
            let sign = if vs < 0 && e % 2 != 0 { -1 } else { 1 };
            out.add_term(&rest * &sub, &(c * BigInt::from(sign)));
        }
        Ok(out)
    }

    /// Evaluate under a sign specialization `sym -> ±1`; symbols absent from `eta`
    /// are an error.
    pub fn specialize(&self, eta: &BTreeMap<String, i8>) -> Result<BigInt, CoeffError> {
        let mut total = BigInt::zero();
        for (m, c) in &self.0 {
            let mut sign = 1i8;
            for (s, e) in m.exponents() {
                let v = eta
                    .get(s)
                    .copied()
                    .ok_or_else(|| CoeffError::Unassigned(s.to_string()))?;
                debug_assert!(v == 1 || v == -1);
                if v == -1 && e % 2 != 0 {
                    sign = -sign;
                }
            }
            if sign == 1 {
                total += c;
            } else {
                total -= c;
            }
        }
        Ok(total)
    }

    /// Evaluate with every symbol sent to an integer unit value from `assign`
    /// (typically `t -> -1`); like `specialize` but kept separate for clarity at
    /// call sites that evaluate full Laurent coefficients of algebra elements.
    pub fn eval_units(&self, assign: &BTreeMap<String, i8>) -> Result<BigInt, CoeffError> {
        self.specialize(assign)
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (m, c) in &rhs.0 {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        for (m, c) in &rhs.0 {
            self.add_term(m.clone(), c);
        }
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (m, c) in &rhs.0 {
            out.add_term(m.clone(), &(-c));
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent(self.0.iter().map(|(m, c)| (m.clone(), -c)).collect())
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (m1, c1) in &self.0 {
            for (m2, c2) in &rhs.0 {
                out.add_term(m1 * m2, &(c1 * c2));
            }
        }
        out
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.0 {
            let neg = c.is_negative();
            let mag = c.magnitude();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let mag_one = mag == BigInt::one().magnitude();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag_one {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_canonical() {
        let m = &Monomial::var_pow("s1", 2) * &Monomial::var_pow("s1", -2);
        assert!(m.is_one());
        let m = &Monomial::var("s2") * &Monomial::var("s1");
        assert_eq!(m.to_string(), "s1*s2");
    }

    #[test]
    fn laurent_arith_and_display() {
        let p = &Laurent::var("s1") - &Laurent::var_pow("s2", -1);
        let q = &p + &Laurent::var_pow("s2", -1);
        assert_eq!(q, Laurent::var("s1"));
        assert_eq!(p.to_string(), "s1 - s2^-1");
        let prod = &p * &p;
        assert_eq!(prod.num_terms(), 3);
    }

    #[test]
    fn specialize_examples() {
        // p = s2 at eta(s2) = -1
        let mut eta = BTreeMap::new();
        eta.insert("s2".to_string(), -1i8);
        assert_eq!(Laurent::var("s2").specialize(&eta).unwrap(), BigInt::from(-1));

        // p = s3^-1 s4^-1 + s1^-1 s2^-1 at eta = +1 everywhere -> 2
        let p = &Laurent::from_monomial(
            &Monomial::var_pow("s3", -1) * &Monomial::var_pow("s4", -1),
            BigInt::one(),
        ) + &Laurent::from_monomial(
            &Monomial::var_pow("s1", -1) * &Monomial::var_pow("s2", -1),
            BigInt::one(),
        );
        let eta: BTreeMap<String, i8> = ["s1", "s2", "s3", "s4"]
            .iter()
            .map(|s| (s.to_string(), 1i8))
            .collect();
        assert_eq!(p.specialize(&eta).unwrap(), BigInt::from(2));

        // p = s3 - s4^-1 at eta = 1 -> 0
        let p = &Laurent::var("s3") - &Laurent::var_pow("s4", -1);
        assert_eq!(p.specialize(&eta).unwrap(), BigInt::zero());
    }

    #[test]
    fn substitution_requires_unit() {
        let p = Laurent::var_pow("t1", -1);
        let bad = &Laurent::one() + &Laurent::var("s1");
        assert!(p.substitute("t1", &bad).is_err());
        let v = Laurent::from_monomial(Monomial::var("s1"), BigInt::from(-1));
        let q = p.substitute("t1", &v).unwrap();
        // (t1)^-1 with t1 = -s1 gives -s1^-1
        assert_eq!(q, Laurent::from_monomial(Monomial::var_pow("s1", -1), BigInt::from(-1)));
    }
}
