//! Augmentations and their invariants: enumeration over finite value sets,
//! restricted systems, Legendrian-loop monodromy orbits, the E-invariants, and
//! the degree-0-cycle distinguishing test.

use crate::alg::{AlgError, Elem, Word};
use crate::coeff::{CoeffError, Laurent, Monomial};
use crate::dga::{Dga, DgaError};
use crate::diagram::SpinConvention;
use num_bigint::BigInt;
use num_traits::Signed;
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error)]
pub enum AugError {
    #[error(transparent)]
    Dga(#[from] DgaError),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("augmentation violates e(d({0})) = 0: residue {1}")]
    NotAChainMap(String, String),
    #[error("value of nonzero-grading generator {0} is nonzero")]
    GradedSupport(String),
    #[error("search space of {0} candidates exceeds the cap {1}")]
    SearchSpace(u128, u128),
    #[error("local-system enumeration over {0} symbols exceeds the exact limit of 20")]
    TooManySymbols(usize),
    #[error("chord {0} is not a cycle: d = {1}")]
    NotACycle(String, String),
    #[error("loop monodromy does not commute with d at {0}: lhs {1} vs rhs {2}")]
    NotChainMap(String, String, String),
    #[error("{0}")]
    Invalid(String),
}

/// A k-system of augmentations: a grading-0 algebra map from the DGA into the
/// Laurent ring on `symbols`, recorded on degree-0 generators and on the source
/// coefficient symbols.
#[derive(Clone, Debug)]
pub struct AugmentationSystem {
    pub source: Dga,
    pub symbols: Vec<String>,
    pub chord_values: BTreeMap<String, Laurent>,
    pub sym_values: BTreeMap<String, Laurent>,
    pub convention: SpinConvention,
}

impl AugmentationSystem {
    /// Value on a single generator (zero off grading 0).
    pub fn chord_value(&self, g: &str) -> Laurent {
        self.chord_values.get(g).cloned().unwrap_or_else(Laurent::zero)
    }

    /// Evaluate the augmentation on an algebra element.
    pub fn eval(&self, x: &Elem) -> Result<Laurent, AugError> {
        let mut gen_assign: BTreeMap<String, Laurent> = BTreeMap::new();
        for g in &self.source.generators {
            gen_assign.insert(g.clone(), self.chord_value(g));
        }
        Ok(x.eval_hom(&gen_assign, &self.sym_values)?)
    }

    /// Re-verify graded support and `e(d(a)) = 0` for every generator.
    pub fn verify(&self) -> Result<(), AugError> {
        for g in &self.source.generators {
            if self.source.gradings[g] != 0 && !self.chord_value(g).is_zero() {
                return Err(AugError::GradedSupport(g.clone()));
            }
            let v = self.eval(self.source.d(g)?)?;
            if !v.is_zero() {
                return Err(AugError::NotAChainMap(g.clone(), v.to_string()));
            }
        }
        Ok(())
    }

    /// The value of one component's basepoint monomial.
    pub fn component_monomial_value(&self, comp: usize) -> Result<Laurent, AugError> {
        let m = &self.source.component_monomials[comp];
        let mut v = m.clone();
        for s in self.source.symbols.clone() {
            if v.symbols().any(|x| x == s) {
                let val = self
                    .sym_values
                    .get(&s)
                    .cloned()
                    .unwrap_or_else(|| Laurent::var(&s));
                v = v.substitute(&s, &val)?;
            }
        }
        Ok(v)
    }

    /// Restricted iff a sign specialization of the target symbols sends every
    /// component basepoint monomial to the spin-appropriate unit (`-1` as
    /// drawn, `+1` after `t -> -t`). Returns the forced relations.
    pub fn is_restricted(&self) -> Result<Restriction, AugError> {
        let target = match self.convention {
            SpinConvention::LieGroup => -1i8,
            SpinConvention::NullCobordant => 1i8,
        };
        let mut rows: Vec<(Vec<u8>, u8, String)> = Vec::new();
        for comp in 0..self.source.num_components {
            let v = self.component_monomial_value(comp)?;
            let Some((sign, mono)) = v.as_unit() else {
                return Err(AugError::Invalid(format!(
                    "component {} basepoint monomial evaluates to a non-unit {v}",
                    comp + 1
                )));
            };
            // eta(sign * mono) = target  <=>  <x, exponents mod 2> = [sign != target]
            let mut row = vec![0u8; self.symbols.len()];
            for (s, e) in mono.exponents() {
                if e % 2 != 0 {
                    let i = self
                        .symbols
                        .iter()
                        .position(|x| x == s)
                        .ok_or_else(|| {
                            AugError::Invalid(format!("unknown symbol {s} in component monomial"))
                        })?;
                    row[i] = 1;
                }
            }
            let rhs = u8::from(sign != target);
            rows.push((row, rhs, render_relation(sign, &mono, target)));
        }
        // GF(2) elimination
        let mut mat: Vec<(Vec<u8>, u8)> = rows.iter().map(|(r, b, _)| (r.clone(), *b)).collect();
        let n = self.symbols.len();
        let mut pivots: Vec<usize> = Vec::new();
        let mut r0 = 0usize;
        for col in 0..n {
            let Some(p) = (r0..mat.len()).find(|&r| mat[r].0[col] == 1) else {
                continue;
            };
            mat.swap(r0, p);
            for r in 0..mat.len() {
                if r != r0 && mat[r].0[col] == 1 {
                    for c in 0..n {
                        mat[r].0[c] ^= mat[r0].0[c].clone();
                    }
                    mat[r].1 ^= mat[r0].1;
                }
            }
            pivots.push(col);
            r0 += 1;
        }
        let satisfiable = mat[r0..].iter().all(|(_, b)| *b == 0);
        let witness = if satisfiable {
            let mut eta: BTreeMap<String, i8> =
                self.symbols.iter().map(|s| (s.clone(), 1i8)).collect();
            for (r, col) in pivots.iter().enumerate() {
                if mat[r].1 == 1 {
                    eta.insert(self.symbols[*col].clone(), -1);
                }
            }
            Some(eta)
        } else {
            None
        };
        Ok(Restriction {
            restricted: satisfiable,
            relations: rows.into_iter().map(|(_, _, s)| s).collect(),
            witness,
        })
    }
}

fn render_relation(sign: i8, mono: &Monomial, target: i8) -> String {
    // eta(sign*mono) = target, rendered with the sign moved across and the
    // monomial shown with positive exponents where possible
    let rhs = sign * target;
    let neg_count = mono.exponents().filter(|(_, e)| *e < 0).count();
    let pos_count = mono.exponents().filter(|(_, e)| *e > 0).count();
    let shown = if neg_count > pos_count { mono.inv() } else { mono.clone() };
    format!("{} = {}", shown, rhs)
}

#[derive(Clone, Debug)]
pub struct Restriction {
    pub restricted: bool,
    /// One relation per component, e.g. `s3*s4 = 1`.
    pub relations: Vec<String>,
    /// A satisfying sign specialization when restricted.
    pub witness: Option<BTreeMap<String, i8>>,
}

/// Finite coefficient targets for augmentation enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TargetRing {
    Z2,
    Zp(u32),
    ZBounded(i64),
}

/// A constant-target augmentation produced by `enumerate_augmentations`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstAugmentation {
    pub modulus: Option<u32>,
    pub chord_values: BTreeMap<String, i64>,
    pub sym_values: BTreeMap<String, i64>,
}

const SEARCH_CAP: u128 = 200_000_000;

/// Exhaustive enumeration of augmentations with values in a finite set, in
/// deterministic order. Coefficient symbols range over the units of the target.
pub fn enumerate_augmentations(
    dga: &Dga,
    ring: TargetRing,
) -> Result<Vec<ConstAugmentation>, AugError> {
    let deg0 = dga.degree_zero_generators();
    let (values, units, modulus): (Vec<i64>, Vec<i64>, Option<u32>) = match ring {
        TargetRing::Z2 => (vec![0, 1], vec![1], Some(2)),
        TargetRing::Zp(p) => ((0..p as i64).collect(), (1..p as i64).collect(), Some(p)),
        TargetRing::ZBounded(b) => {
            let b = b.max(1);
            ((-b..=b).collect(), vec![-1, 1], None)
        }
    };
    let space = (values.len() as u128)
        .checked_pow(deg0.len() as u32)
        .and_then(|x| x.checked_mul((units.len() as u128).checked_pow(dga.symbols.len() as u32)?))
        .unwrap_or(u128::MAX);
    if space > SEARCH_CAP {
        return Err(AugError::SearchSpace(space, SEARCH_CAP));
    }
    if let Some(p) = modulus {
        // symbol inverses are only self-inverse for p <= 3; larger moduli would
        // need modular inverses, which the exact search purposely avoids
        let has_neg = dga.differentials.values().any(|e| {
            e.terms()
                .any(|(_, c)| c.terms().any(|(m, _)| m.exponents().any(|(_, x)| x < 0)))
        });
        if has_neg && p > 3 {
            return Err(AugError::Invalid(
                "modular enumeration with inverted symbols is limited to p <= 3".into(),
            ));
        }
    }

    let to_check: Vec<(&String, &Elem)> = dga
        .generators
        .iter()
        .filter(|g| dga.gradings[*g] != 0)
        .map(|g| (g, &dga.differentials[g]))
        .collect();

    let mut out = Vec::new();
    let mut sym_assign: Vec<i64> = vec![0; dga.symbols.len()];
    enumerate_rec(0, &mut sym_assign, &units, &mut |sym_assign, out: &mut Vec<ConstAugmentation>| {
        let mut chord_assign = vec![0i64; deg0.len()];
        enumerate_rec(0, &mut chord_assign, &values, &mut |chord_assign, out: &mut Vec<ConstAugmentation>| {
            for (_, dg) in &to_check {
                let mut total: i128 = 0;
                for (w, c) in dg.terms() {
                    let wv = eval_word(w, &deg0, chord_assign, &dga.gradings, modulus);
                    if wv == 0 {
                        continue;
                    }
                    let cv = eval_coeff(c, &dga.symbols, sym_assign, modulus);
                    total += wv * cv;
                    if let Some(p) = modulus {
                        total = total.rem_euclid(p as i128);
                    }
                }
                if total != 0 {
                    return;
                }
            }
            out.push(ConstAugmentation {
                modulus,
                chord_values: deg0
                    .iter()
                    .cloned()
                    .zip(chord_assign.iter().copied())
                    .collect(),
                sym_values: dga
                    .symbols
                    .iter()
                    .cloned()
                    .zip(sym_assign.iter().copied())
                    .collect(),
            });
        }, out);
    }, &mut out);
    Ok(out)
}

fn eval_word(
    w: &Word,
    deg0: &[String],
    chord_assign: &[i64],
    gradings: &BTreeMap<String, i64>,
    modulus: Option<u32>,
) -> i128 {
    let mut v: i128 = 1;
    for l in w.letters() {
        if gradings[l] != 0 {
            return 0;
        }
        let idx = deg0.iter().position(|g| g == l).expect("degree-0 letter");
        v *= chord_assign[idx] as i128;
        if v == 0 {
            return 0;
        }
        if let Some(p) = modulus {
            v = v.rem_euclid(p as i128);
        }
    }
    v
}

fn eval_coeff(c: &Laurent, symbols: &[String], sym_assign: &[i64], modulus: Option<u32>) -> i128 {
    let mut total: i128 = 0;
    for (m, coeff) in c.terms() {
        let mut v: i128 = 1;
        for (s, e) in m.exponents() {
            let idx = symbols.iter().position(|x| x == s).expect("symbol");
            let base = sym_assign[idx] as i128;
            // units are self-inverse over Z and for p <= 3
            let reps = e.unsigned_abs();
            for _ in 0..reps {
                v *= base;
                if let Some(p) = modulus {
                    v = v.rem_euclid(p as i128);
                }
            }
        }
        let c128: i128 = coeff.to_string().parse().expect("small integer coefficient");
        total += v * c128;
        if let Some(p) = modulus {
            total = total.rem_euclid(p as i128);
        }
    }
    total
}

fn enumerate_rec<T>(
    i: usize,
    assign: &mut Vec<i64>,
    values: &[i64],
    f: &mut impl FnMut(&[i64], &mut T),
    out: &mut T,
) {
    if i == assign.len() {
        f(assign, out);
        return;
    }
    for &v in values {
        assign[i] = v;
        enumerate_rec(i + 1, assign, values, f, out);
    }
}

/// A DGA endomorphism induced by a Legendrian isotopy loop.
#[derive(Clone, Debug)]
pub struct LoopMonodromy {
    pub source: Dga,
    pub images: BTreeMap<String, Elem>,
    pub label: String,
}

impl LoopMonodromy {
    pub fn apply(&self, x: &Elem) -> Result<Elem, AugError> {
        Ok(x.map(&self.images, &BTreeMap::new())?)
    }

    /// Hard chain-map check on every generator.
    pub fn verify(&self) -> Result<(), AugError> {
        for g in &self.source.generators {
            let lhs = self.apply(self.source.d(g)?)?;
            let rhs = self.source.d_elem(&self.images[g])?;
            if lhs != rhs {
                return Err(AugError::NotChainMap(
                    g.clone(),
                    lhs.to_string(),
                    rhs.to_string(),
                ));
            }
        }
        Ok(())
    }
}

/// 2x2 matrix product over the algebra (entries multiply from the left).
pub fn mat2_mul(a: &[[Elem; 2]; 2], b: &[[Elem; 2]; 2]) -> [[Elem; 2]; 2] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut acc = Elem::zero();
            for (k, row) in b.iter().enumerate() {
                acc += &(&a[i][k] * &row[j]);
            }
            acc
        })
    })
}

/// The explicit loop monodromy of the n=1 linked family: conjugation of the
/// clasp matrix and the displayed actions on the eye chords, verified as a
/// chain map against the diagram's differential.
pub fn loop_monodromy_lambda1(dga: &Dga) -> Result<LoopMonodromy, AugError> {
    let t1 = |e: i64| Elem::from_coeff(Laurent::var_pow("t1", e));
    let t2 = |e: i64| Elem::from_coeff(Laurent::var_pow("t2", e));
    let b1 = Elem::gen("b1");
    let zero = Elem::zero();
    // M = [[0, t1], [t2, -t1 b1]], M^{-1} = [[b1 t2^{-1}, t2^{-1}], [t1^{-1}, 0]]
    let m: [[Elem; 2]; 2] = [
        [zero.clone(), t1(1)],
        [t2(1), (&t1(1) * &b1).scale(&Laurent::int(-1))],
    ];
    let m_inv: [[Elem; 2]; 2] = [[&t2(-1) * &b1, t2(-1)], [t1(-1), zero.clone()]];
    let mt: [[Elem; 2]; 2] = [
        [m[0][0].clone(), m[1][0].clone()],
        [m[0][1].clone(), m[1][1].clone()],
    ];

    let mut images: BTreeMap<String, Elem> = dga
        .generators
        .iter()
        .map(|g| (g.clone(), Elem::gen(g)))
        .collect();

    let apply_vec = |mat: &[[Elem; 2]; 2], v0: &str, v1: &str| -> (Elem, Elem) {
        let e0 = Elem::gen(v0);
        let e1 = Elem::gen(v1);
        (
            &(&mat[0][0] * &e0) + &(&mat[0][1] * &e1),
            &(&mat[1][0] * &e0) + &(&mat[1][1] * &e1),
        )
    };
    let (x0, x1) = apply_vec(&m_inv, "f2", "f4");
    images.insert("f2".into(), x0);
    images.insert("f4".into(), x1);
    let (x0, x1) = apply_vec(&m_inv, "g2", "g4");
    images.insert("g2".into(), x0);
    images.insert("g4".into(), x1);
    let (x0, x1) = apply_vec(&mt, "g3", "g1");
    images.insert("g3".into(), x0);
    images.insert("g1".into(), x1);
    let (x0, x1) = apply_vec(&mt, "f3", "f1");
    images.insert("f3".into(), x0);
    images.insert("f1".into(), x1);
    let c: [[Elem; 2]; 2] = [
        [Elem::gen("c11"), Elem::gen("c12")],
        [Elem::gen("c21"), Elem::gen("c22")],
    ];
    let mcm = mat2_mul(&mat2_mul(&m, &c), &m_inv);
    images.insert("c11".into(), mcm[0][0].clone());
    images.insert("c12".into(), mcm[0][1].clone());
    images.insert("c21".into(), mcm[1][0].clone());
    images.insert("c22".into(), mcm[1][1].clone());

    let phi = LoopMonodromy {
        source: dga.clone(),
        images,
        label: "loop".into(),
    };
    phi.verify()?;
    Ok(phi)
}

/// The orbit augmentation `e o Phi^k`, re-verified.
pub fn orbit(
    sys: &AugmentationSystem,
    phi: &LoopMonodromy,
    k: u32,
) -> Result<AugmentationSystem, AugError> {
    let mut images: BTreeMap<String, Elem> = phi
        .source
        .generators
        .iter()
        .map(|g| (g.clone(), Elem::gen(g)))
        .collect();
    for _ in 0..k {
        let mut next = BTreeMap::new();
        for (g, e) in &images {
            next.insert(g.clone(), phi.apply(e)?);
        }
        images = next;
    }
    let mut chord_values = BTreeMap::new();
    for g in sys.source.degree_zero_generators() {
        chord_values.insert(g.clone(), sys.eval(&images[&g])?);
    }
    let out = AugmentationSystem {
        source: sys.source.clone(),
        symbols: sys.symbols.clone(),
        chord_values,
        sym_values: sys.sym_values.clone(),
        convention: sys.convention,
    };
    out.verify()?;
    Ok(out)
}

/// Maximum of `|eta(e(chord))|` over sign specializations of the target
/// symbols; in restricted mode only local systems satisfying the restriction
/// constraints compete.
pub fn e_invariant(
    sys: &AugmentationSystem,
    chord: &str,
    restricted: bool,
) -> Result<BigInt, AugError> {
    let v = sys.chord_value(chord);
    max_abs_specialization(sys, &v, restricted)
}

pub fn max_abs_specialization(
    sys: &AugmentationSystem,
    v: &Laurent,
    restricted: bool,
) -> Result<BigInt, AugError> {
    let syms = &sys.symbols;
    if syms.len() > 20 {
        return Err(AugError::TooManySymbols(syms.len()));
    }
    if restricted {
        let r = sys.is_restricted()?;
        if !r.restricted {
            return Err(AugError::Invalid(
                "system is not restricted; no admissible local system".into(),
            ));
        }
    }
    let target = match sys.convention {
        SpinConvention::LieGroup => BigInt::from(-1),
        SpinConvention::NullCobordant => BigInt::from(1),
    };
    let mut best = BigInt::from(-1);
    for mask in 0u32..(1u32 << syms.len()) {
        let eta: BTreeMap<String, i8> = syms
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), if mask >> i & 1 == 1 { -1i8 } else { 1i8 }))
            .collect();
        if restricted {
            let mut ok = true;
            for comp in 0..sys.source.num_components {
                let m = sys.component_monomial_value(comp)?;
                if m.specialize(&eta)? != target {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
        }
        let a = v.specialize(&eta)?.abs();
        if a > best {
            best = a;
        }
    }
    Ok(best)
}

/// One-sided distinguishing verdict at a degree-0 cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Distinguished,
    Inconclusive,
}

/// Compare the maximized absolute values of two augmentations at a degree-0
/// cycle; differing maxima certify the systems distinct, equal maxima decide
/// nothing.
pub fn distinguish_by_cycle(
    e1: &AugmentationSystem,
    e2: &AugmentationSystem,
    chord: &str,
) -> Result<(Verdict, BigInt, BigInt), AugError> {
    let d = e1.source.d(chord)?;
    if !d.is_zero() {
        return Err(AugError::NotACycle(chord.to_string(), d.to_string()));
    }
    if e1.source.gradings.get(chord) != Some(&0) {
        return Err(AugError::Invalid(format!("{chord} is not a degree-0 chord")));
    }
    let m1 = e_invariant(e1, chord, false)?;
    let m2 = e_invariant(e2, chord, false)?;
    let verdict = if m1 != m2 {
        Verdict::Distinguished
    } else {
        Verdict::Inconclusive
    };
    Ok((verdict, m1, m2))
}

/// Lift a restricted augmentation across a pinch relating basepoints
/// `t_i, t_j` through the new symbol `s`: the lifted values are
/// `t_i -> e(t_i) s` and `t_j -> -e(t_j) s^{-1}`; the local-system choice
/// `eta(s) = -eta(e(t_i))` certifies restrictedness of the lift.
pub fn lift_restricted(
    sys: &AugmentationSystem,
    t_i: &str,
    t_j: &str,
    s: &str,
) -> Result<AugmentationSystem, AugError> {
    let r = sys.is_restricted()?;
    if !r.restricted {
        return Err(AugError::Invalid(
            "source augmentation is not restricted".into(),
        ));
    }
    if sys.symbols.iter().any(|x| x == s) {
        return Err(AugError::Invalid(format!("symbol {s} already in use")));
    }
    let vi = sys
        .sym_values
        .get(t_i)
        .cloned()
        .unwrap_or_else(|| Laurent::var(t_i));
    let vj = sys
        .sym_values
        .get(t_j)
        .cloned()
        .unwrap_or_else(|| Laurent::var(t_j));
    let mut sym_values = sys.sym_values.clone();
    sym_values.insert(t_i.to_string(), &vi * &Laurent::var(s));
    sym_values.insert(
        t_j.to_string(),
        (&vj * &Laurent::var_pow(s, -1)).scale(&BigInt::from(-1)),
    );
    let mut symbols = sys.symbols.clone();
    symbols.push(s.to_string());
    Ok(AugmentationSystem {
        source: sys.source.clone(),
        symbols,
        chord_values: sys.chord_values.clone(),
        sym_values,
        convention: sys.convention,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unknot_dga() -> Dga {
        let da = &Elem::unit() + &Elem::from_coeff(Laurent::var("t"));
        Dga::presentation(
            &[("a", 1)],
            &["t"],
            &[("a", da)],
            1,
            vec![Laurent::var("t")],
            SpinConvention::LieGroup,
        )
        .unwrap()
    }

    #[test]
    fn unknot_augmentations_force_t() {
        let dga = unknot_dga();
        let augs = enumerate_augmentations(&dga, TargetRing::ZBounded(2)).unwrap();
        assert_eq!(augs.len(), 1);
        assert_eq!(augs[0].sym_values["t"], -1);
    }

    #[test]
    fn obstructed_dga_has_no_augmentations() {
        let dga = Dga::presentation(
            &[("a", 1)],
            &[],
            &[("a", Elem::unit())],
            1,
            vec![Laurent::one()],
            SpinConvention::LieGroup,
        )
        .unwrap();
        let augs = enumerate_augmentations(&dga, TargetRing::ZBounded(2)).unwrap();
        assert!(augs.is_empty());
    }

    #[test]
    fn trefoil_z2_count_is_frozen() {
        let t = crate::diagram::trefoil();
        let dga = Dga::differential(&t).unwrap();
        let augs = enumerate_augmentations(&dga, TargetRing::Z2).unwrap();
        assert_eq!(augs.len(), 5);
    }

    #[test]
    fn restricted_examples() {
        let dga = Dga::presentation(
            &[("x", 0)],
            &["t3", "t4"],
            &[],
            2,
            vec![Laurent::var("t3"), Laurent::var("t4")],
            SpinConvention::LieGroup,
        )
        .unwrap();
        let mut sym_values = BTreeMap::new();
        sym_values.insert(
            "t3".to_string(),
            Laurent::from_monomial(
                &Monomial::var_pow("s3", -1) * &Monomial::var_pow("s4", -1),
                BigInt::from(-1),
            ),
        );
        sym_values.insert(
            "t4".to_string(),
            Laurent::from_monomial(
                &Monomial::var_pow("s1", -1) * &Monomial::var_pow("s2", -1),
                BigInt::from(-1),
            ),
        );
        let sys = AugmentationSystem {
            source: dga,
            symbols: ["s1", "s2", "s3", "s4"].iter().map(|s| s.to_string()).collect(),
            chord_values: BTreeMap::new(),
            sym_values,
            convention: SpinConvention::LieGroup,
        };
        let r = sys.is_restricted().unwrap();
        assert!(r.restricted);
        assert!(r.relations.iter().any(|x| x == "s3*s4 = 1"));
        assert!(r.relations.iter().any(|x| x == "s1*s2 = 1"));

        let dga1 = Dga::presentation(
            &[("x", 0)],
            &["t"],
            &[],
            1,
            vec![Laurent::var("t")],
            SpinConvention::LieGroup,
        )
        .unwrap();
        let sys1 = AugmentationSystem {
            source: dga1,
            symbols: vec![],
            chord_values: BTreeMap::new(),
            sym_values: [("t".to_string(), Laurent::one())].into_iter().collect(),
            convention: SpinConvention::LieGroup,
        };
        assert!(!sys1.is_restricted().unwrap().restricted);
    }

    #[test]
    fn lift_restricted_merge_value() {
        let dga = Dga::presentation(
            &[("x", 0)],
            &["ti", "tj"],
            &[],
            2,
            vec![Laurent::var("ti"), Laurent::var("tj")],
            SpinConvention::LieGroup,
        )
        .unwrap();
        let sys = AugmentationSystem {
            source: dga,
            symbols: vec![],
            chord_values: BTreeMap::new(),
            sym_values: [
                ("ti".to_string(), Laurent::int(-1)),
                ("tj".to_string(), Laurent::int(-1)),
            ]
            .into_iter()
            .collect(),
            convention: SpinConvention::LieGroup,
        };
        let lifted = lift_restricted(&sys, "ti", "tj", "s").unwrap();
        // merge case: the fused component monomial -e_-(ti) e_-(tj) s s^{-1} = -1
        // holds identically, with no condition on eta(s)
        let v = &lifted.sym_values["ti"] * &lifted.sym_values["tj"];
        assert_eq!(v, Laurent::int(-1));

        // split case: one component of the source carries both basepoints with
        // e(ti tj) = -1; the choice eta(s) = -eta(e(ti)) restores both values
        let dga1 = Dga::presentation(
            &[("x", 0)],
            &["ti", "tj"],
            &[],
            1,
            vec![&Laurent::var("ti") * &Laurent::var("tj")],
            SpinConvention::LieGroup,
        )
        .unwrap();
        let sys1 = AugmentationSystem {
            source: dga1,
            symbols: vec![],
            chord_values: BTreeMap::new(),
            sym_values: [
                ("ti".to_string(), Laurent::one()),
                ("tj".to_string(), Laurent::int(-1)),
            ]
            .into_iter()
            .collect(),
            convention: SpinConvention::LieGroup,
        };
        assert!(sys1.is_restricted().unwrap().restricted);
        let lifted1 = lift_restricted(&sys1, "ti", "tj", "s").unwrap();
        // eta(s) = -eta(e(ti)) = -1 sends both lifted values to -1
        let eta: BTreeMap<String, i8> = [("s".to_string(), -1i8)].into_iter().collect();
        assert_eq!(lifted1.sym_values["ti"].specialize(&eta).unwrap(), BigInt::from(-1));
        assert_eq!(lifted1.sym_values["tj"].specialize(&eta).unwrap(), BigInt::from(-1));

        // a non-restricted source errors
        let mut bad = sys.clone();
        bad.sym_values.insert("ti".to_string(), Laurent::one());
        assert!(lift_restricted(&bad, "ti", "tj", "s2").is_err());
    }
}
