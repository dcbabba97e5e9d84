//! The unital noncommutative graded algebra generated by Reeb chords over the
//! Laurent coefficient ring. Words are sequences of chord names; coefficients are
//! central.

use crate::coeff::{CoeffError, Laurent, Monomial};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// A word of Reeb-chord generators; the empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<String>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn single(g: &str) -> Self {
        Word(vec![g.to_string()])
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(|s| s.as_str())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", self.0.join(" "))
        }
    }
}

/// An algebra element: a finite map from words to Laurent coefficients.
///
/// Canonical form: no zero coefficients, so structural equality decides equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Elem(BTreeMap<Word, Laurent>);

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum AlgError {
    #[error("generator {0} has no image")]
    MissingImage(String),
    #[error("generator {0} has no grading")]
    MissingGrading(String),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

impl Elem {
    pub fn zero() -> Self {
        Elem(BTreeMap::new())
    }

    pub fn unit() -> Self {
        Elem::from_coeff(Laurent::one())
    }

    pub fn gen(name: &str) -> Self {
        let mut m = BTreeMap::new();
        m.insert(Word::single(name), Laurent::one());
        Elem(m)
    }

    pub fn from_coeff(c: Laurent) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(Word::unit(), c);
        }
        Elem(m)
    }

    pub fn from_word(w: Word, c: Laurent) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(w, c);
        }
        Elem(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Laurent)> {
        self.0.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.0.len()
    }

    pub fn coeff_of(&self, w: &Word) -> Laurent {
        self.0.get(w).cloned().unwrap_or_else(Laurent::zero)
    }

    pub fn add_term(&mut self, w: Word, c: &Laurent) {
        if c.is_zero() {
            return;
        }
        let v = self.0.entry(w.clone()).or_insert_with(Laurent::zero);
        *v += c;
        if v.is_zero() {
            self.0.remove(&w);
        }
    }

    pub fn scale(&self, c: &Laurent) -> Elem {
        let mut out = Elem::zero();
        for (w, v) in &self.0 {
            out.add_term(w.clone(), &(v * c));
        }
        out
    }

    /// Every chord letter occurring in the element.
    pub fn letters(&self) -> impl Iterator<Item = &str> {
        let set: std::collections::BTreeSet<&str> =
            self.0.keys().flat_map(|w| w.letters()).collect();
        set.into_iter()
    }

    /// Grading of a word under `grading`; basepoint symbols live in the
    /// coefficients and have grading zero.
    pub fn word_grading(
        w: &Word,
        grading: &BTreeMap<String, i64>,
    ) -> Result<i64, AlgError> {
        let mut g = 0;
        for l in w.letters() {
            g += grading
                .get(l)
                .copied()
                .ok_or_else(|| AlgError::MissingGrading(l.to_string()))?;
        }
        Ok(g)
    }

    /// The common grading of all words, `Ok(None)` for 0 (no terms), or
    /// `Err(Mixed)` rendered as a `None` grading with a flag.
    pub fn grading(&self, grading: &BTreeMap<String, i64>) -> Result<Grading, AlgError> {
        let mut found: Option<i64> = None;
        for w in self.0.keys() {
            let g = Self::word_grading(w, grading)?;
            match found {
                None => found = Some(g),
                Some(h) if h != g => return Ok(Grading::Mixed),
                _ => {}
            }
        }
        Ok(match found {
            None => Grading::Zero,
            Some(g) => Grading::Pure(g),
        })
    }

    /// The graded Leibniz extension of `images` as a degree `-1` derivation:
    /// `D(uv) = D(u) v + (-1)^{|u|} u D(v)`.
    ///
    /// `images` must cover every chord letter in `self`; symbols differentiate
    /// to zero.
    pub fn leibniz_extend(
        &self,
        images: &BTreeMap<String, Elem>,
        grading: &BTreeMap<String, i64>,
    ) -> Result<Elem, AlgError> {
        let mut out = Elem::zero();
        for (w, c) in &self.0 {
            let mut sign_exp = 0i64; // grading of the prefix before position i
            for (i, l) in w.0.iter().enumerate() {
                let img = images
                    .get(l)
                    .ok_or_else(|| AlgError::MissingImage(l.clone()))?;
                if !img.is_zero() {
                    let prefix = Word(w.0[..i].to_vec());
                    let suffix = Word(w.0[i + 1..].to_vec());
                    let sign = if sign_exp % 2 == 0 { 1 } else { -1 };
                    for (wi, ci) in img.terms() {
                        let word = prefix.concat(wi).concat(&suffix);
                        let coeff = (c * ci).scale(&BigInt::from(sign));
                        out.add_term(word, &coeff);
                    }
                }
                sign_exp += grading
                    .get(l)
                    .copied()
                    .ok_or_else(|| AlgError::MissingGrading(l.clone()))?;
            }
        }
        Ok(out)
    }

    /// Unital multiplicative extension of a generator assignment into the
    /// coefficient ring. Basepoint symbols substitute per `sym_assign`
    /// (identity when a symbol is absent).
    pub fn eval_hom(
        &self,
        gen_assign: &BTreeMap<String, Laurent>,
        sym_assign: &BTreeMap<String, Laurent>,
    ) -> Result<Laurent, AlgError> {
        let mut total = Laurent::zero();
        for (w, c) in &self.0 {
            let mut v = Laurent::one();
            for l in w.letters() {
                let g = gen_assign
                    .get(l)
                    .ok_or_else(|| AlgError::MissingImage(l.to_string()))?;
                v = &v * g;
                if v.is_zero() {
                    break;
                }
            }
            if v.is_zero() {
                continue;
            }
            // substitute symbols in the coefficient
            let mut cc = c.clone();
            for (sym, val) in sym_assign {
                if cc.symbols().any(|s| s == sym) {
                    cc = cc.substitute(sym, val)?;
                }
            }
            total += &(&cc * &v);
        }
        Ok(total)
    }

    /// Apply an algebra map given by generator images and a symbol substitution.
    pub fn map(
        &self,
        gen_images: &BTreeMap<String, Elem>,
        sym_map: &BTreeMap<String, Laurent>,
    ) -> Result<Elem, AlgError> {
        let mut out = Elem::zero();
        for (w, c) in &self.0 {
            let mut acc = Elem::unit();
            for l in w.letters() {
                let img = gen_images
                    .get(l)
                    .ok_or_else(|| AlgError::MissingImage(l.to_string()))?;
                acc = &acc * img;
                if acc.is_zero() {
                    break;
                }
            }
            if acc.is_zero() {
                continue;
            }
            let mut cc = c.clone();
            for (sym, val) in sym_map {
                if cc.symbols().any(|s| s == sym) {
                    cc = cc.substitute(sym, val)?;
                }
            }
            out += &acc.scale(&cc);
        }
        Ok(out)
    }
}

impl Add for &Elem {
    type Output = Elem;
    fn add(self, rhs: &Elem) -> Elem {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Elem> for Elem {
    fn add_assign(&mut self, rhs: &Elem) {
        for (w, c) in &rhs.0 {
            self.add_term(w.clone(), c);
        }
    }
}

impl Sub for &Elem {
    type Output = Elem;
    fn sub(self, rhs: &Elem) -> Elem {
        let mut out = self.clone();
        for (w, c) in &rhs.0 {
            out.add_term(w.clone(), &(-c));
        }
        out
    }
}

impl Neg for &Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        Elem(self.0.iter().map(|(w, c)| (w.clone(), -c)).collect())
    }
}

impl Mul for &Elem {
    type Output = Elem;
    fn mul(self, rhs: &Elem) -> Elem {
        let mut out = Elem::zero();
        for (w1, c1) in &self.0 {
            for (w2, c2) in &rhs.0 {
                out.add_term(w1.concat(w2), &(c1 * c2));
            }
        }
        out
    }
}

impl fmt::Display for Elem {
    /// Canonical rendering: `coeff * word` terms joined by ` + `, e.g.
    /// `-s1^-1*s2 * a1 b1`. This is the stable comparison format in CLI output.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.0 {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if w.is_unit() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{w}")?;
            } else if c.num_terms() > 1 {
                write!(f, "[{c}] * {w}")?;
            } else {
                write!(f, "{c} * {w}")?;
            }
        }
        Ok(())
    }
}

/// Result of a grading query on a possibly inhomogeneous element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    /// The zero element (no terms).
    Zero,
    /// All words share this grading.
    Pure(i64),
    /// Words of different gradings are present.
    Mixed,
}

/// Convenience constructor: `coeff * g1 g2 ... gk`.
pub fn word_elem(letters: &[&str], coeff: Laurent) -> Elem {
    Elem::from_word(Word(letters.iter().map(|s| s.to_string()).collect()), coeff)
}

/// The central coefficient `±sym^±1` as a Laurent unit.
pub fn sym_unit(sign: i8, sym: &str, exp: i64) -> Laurent {
    Laurent::from_monomial(Monomial::var_pow(sym, exp), BigInt::from(sign))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gradings(pairs: &[(&str, i64)]) -> BTreeMap<String, i64> {
        pairs.iter().map(|(s, g)| (s.to_string(), *g)).collect()
    }

    #[test]
    fn unit_law_and_centrality() {
        let x = &Elem::gen("a") + &Elem::gen("b");
        assert_eq!(&Elem::unit() * &x, x);
        // (s1 a)(s2 b) = s1 s2 (a b)
        let lhs = &Elem::gen("a").scale(&Laurent::var("s1"))
            * &Elem::gen("b").scale(&Laurent::var("s2"));
        let c = &Laurent::var("s1") * &Laurent::var("s2");
        assert_eq!(lhs, word_elem(&["a", "b"], c));
    }

    #[test]
    fn distributivity_keeps_noncommutative_words() {
        let x = &Elem::gen("a") + &Elem::gen("b");
        let y = &Elem::gen("a") - &Elem::gen("b");
        let p = &x * &y;
        // a^2 - ab + ba - b^2
        assert_eq!(p.coeff_of(&Word(vec!["a".into(), "a".into()])), Laurent::one());
        assert_eq!(p.coeff_of(&Word(vec!["a".into(), "b".into()])), Laurent::int(-1));
        assert_eq!(p.coeff_of(&Word(vec!["b".into(), "a".into()])), Laurent::one());
        assert_eq!(p.coeff_of(&Word(vec!["b".into(), "b".into()])), Laurent::int(-1));
    }

    #[test]
    fn leibniz_rule_examples() {
        let g = gradings(&[("a", 1), ("b", 1)]);
        // D(a) = u, D(b) = v with u = unit, v = unit
        let mut images = BTreeMap::new();
        images.insert("a".to_string(), Elem::gen("u"));
        images.insert("b".to_string(), Elem::gen("v"));
        let gr = gradings(&[("a", 1), ("b", 1), ("u", 0), ("v", 0)]);
        let _ = g;
        let ab = word_elem(&["a", "b"], Laurent::one());
        let d = ab.leibniz_extend(&images, &gr).unwrap();
        // D(ab) = u b - a v
        let expected = &word_elem(&["u", "b"], Laurent::one()) - &word_elem(&["a", "v"], Laurent::one());
        assert_eq!(d, expected);
        // derivation kills units
        assert_eq!(Elem::unit().leibniz_extend(&images, &gr).unwrap(), Elem::zero());
    }

    #[test]
    fn eval_hom_is_multiplicative() {
        let mut assign = BTreeMap::new();
        assign.insert("a".to_string(), Laurent::var("s1"));
        assign.insert("b".to_string(), &Laurent::var("s2") - &Laurent::one());
        let syms = BTreeMap::new();
        let x = word_elem(&["a", "b"], Laurent::one());
        let v = x.eval_hom(&assign, &syms).unwrap();
        assert_eq!(v, &Laurent::var("s1") * &(&Laurent::var("s2") - &Laurent::one()));
        assert_eq!(Elem::unit().eval_hom(&assign, &syms).unwrap(), Laurent::one());
    }
}
