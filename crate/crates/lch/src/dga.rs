//! The Chekanov-Eliashberg differential graded algebra of a diagram.

use crate::alg::{AlgError, Elem, Word};
use crate::coeff::Laurent;
use crate::diagram::{Diagram, DiagramError, SpinConvention};
use crate::disks::{enumerate_disks, DiskError};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug)]
pub struct Dga {
    /// Generator ids in deterministic order.
    pub generators: Vec<String>,
    pub gradings: BTreeMap<String, i64>,
    /// `(upper component c(a), lower component r(a))` per generator, when the
    /// DGA comes from a diagram.
    pub endpoints: BTreeMap<String, (usize, usize)>,
    /// Coefficient symbols (basepoint labels).
    pub symbols: Vec<String>,
    pub differentials: BTreeMap<String, Elem>,
    pub num_components: usize,
    /// Basepoint symbols per component (with their decoration), for restricted
    /// augmentation checks: the component monomial as a Laurent unit.
    pub component_monomials: Vec<Laurent>,
    pub spin: SpinConvention,
}

#[derive(Debug, thiserror::Error)]
pub enum DgaError {
    #[error(transparent)]
    Disk(#[from] DiskError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("degree violation: d({gen}) has a word of grading {got}, expected {want}")]
    Degree { gen: String, got: i64, want: i64 },
    #[error("d^2 != 0 at {gen}: residue {residue}")]
    DSquared { gen: String, residue: String },
    #[error("unknown generator {0}")]
    Unknown(String),
}

impl Dga {
    /// Assemble the DGA of a diagram by enumerating disks for every chord.
    pub fn differential(d: &Diagram) -> Result<Dga, DgaError> {
        let mut generators: Vec<String> = d.crossings.iter().map(|c| c.id.clone()).collect();
        generators.sort();
        let gradings = crate::diagram::grading_map(d);
        let mut endpoints = BTreeMap::new();
        for g in &generators {
            endpoints.insert(
                g.clone(),
                (d.chord_upper_component(g)?, d.chord_lower_component(g)?),
            );
        }
        let mut differentials = BTreeMap::new();
        for g in &generators {
            let mut da = Elem::zero();
            for disk in enumerate_disks(d, g)? {
                let (word, coeff) = disk.word_and_coeff();
                da.add_term(Word(word), &coeff);
            }
            differentials.insert(g.clone(), da);
        }
        Ok(Dga {
            generators,
            gradings,
            endpoints,
            symbols: d.symbols(),
            differentials,
            num_components: d.components.len(),
            component_monomials: (0..d.components.len())
                .map(|c| d.component_basepoint_monomial(c))
                .collect(),
            spin: d.spin,
        })
    }

    /// A hand-entered DGA presentation; checks degree drop and `d^2 = 0`.
    pub fn presentation(
        gradings: &[(&str, i64)],
        symbols: &[&str],
        differentials: &[(&str, Elem)],
        num_components: usize,
        component_monomials: Vec<Laurent>,
        spin: SpinConvention,
    ) -> Result<Dga, DgaError> {
        let mut generators: Vec<String> = gradings.iter().map(|(g, _)| g.to_string()).collect();
        generators.sort();
        let gradings: BTreeMap<String, i64> =
            gradings.iter().map(|(g, k)| (g.to_string(), *k)).collect();
        let mut diffs: BTreeMap<String, Elem> = generators
            .iter()
            .map(|g| (g.clone(), Elem::zero()))
            .collect();
        for (g, e) in differentials {
            if !diffs.contains_key(*g) {
                return Err(DgaError::Unknown(g.to_string()));
            }
            diffs.insert(g.to_string(), e.clone());
        }
        let dga = Dga {
            generators,
            gradings,
            endpoints: BTreeMap::new(),
            symbols: symbols.iter().map(|s| s.to_string()).collect(),
            differentials: diffs,
            num_components,
            component_monomials,
            spin,
        };
        dga.check_degrees()?;
        let rep = dga.check_d_squared()?;
        if !rep.pass() {
            let (gen, res) = &rep.residues[0];
            return Err(DgaError::DSquared {
                gen: gen.clone(),
                residue: res.to_string(),
            });
        }
        Ok(dga)
    }

    pub fn d(&self, gen: &str) -> Result<&Elem, DgaError> {
        self.differentials
            .get(gen)
            .ok_or_else(|| DgaError::Unknown(gen.to_string()))
    }

    /// Extend the differential to an arbitrary element by the graded Leibniz rule.
    pub fn d_elem(&self, x: &Elem) -> Result<Elem, DgaError> {
        Ok(x.leibniz_extend(&self.differentials, &self.gradings)?)
    }

    /// Every word of `d(a)` must have grading `|a| - 1`.
    pub fn check_degrees(&self) -> Result<(), DgaError> {
        for g in &self.generators {
            let want = self.gradings[g] - 1;
            for (w, _) in self.differentials[g].terms() {
                let got = Elem::word_grading(w, &self.gradings)?;
                if got != want {
                    return Err(DgaError::Degree {
                        gen: g.clone(),
                        got,
                        want,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn check_d_squared(&self) -> Result<D2Report, DgaError> {
        let mut residues = Vec::new();
        for g in &self.generators {
            let dd = self.d_elem(&self.differentials[g])?;
            if !dd.is_zero() {
                residues.push((g.clone(), dd));
            }
        }
        Ok(D2Report { residues })
    }

    /// Swap the spin-structure convention by substituting `t -> -t` for every
    /// coefficient symbol.
    pub fn convert_spin(&self) -> Result<Dga, DgaError> {
        let mut out = self.clone();
        out.spin = match self.spin {
            SpinConvention::LieGroup => SpinConvention::NullCobordant,
            SpinConvention::NullCobordant => SpinConvention::LieGroup,
        };
        let subs: BTreeMap<String, Laurent> = self
            .symbols
            .iter()
            .map(|s| {
                (
                    s.clone(),
                    Laurent::from_monomial(
                        crate::coeff::Monomial::var(s),
                        num_bigint::BigInt::from(-1),
                    ),
                )
            })
            .collect();
        let ident: BTreeMap<String, Elem> = self
            .generators
            .iter()
            .map(|g| (g.clone(), Elem::gen(g)))
            .collect();
        for g in &self.generators {
            let e = self.differentials[g].map(&ident, &subs)?;
            out.differentials.insert(g.clone(), e);
        }
        for m in out.component_monomials.iter_mut() {
            let mut v = m.clone();
            for s in &self.symbols {
                if v.symbols().any(|x| x == s) {
                    v = v.substitute(s, &subs[s]).expect("unit substitution");
                }
            }
            *m = v;
        }
        Ok(out)
    }

    /// Degree-0 generators, the support of augmentations.
    pub fn degree_zero_generators(&self) -> Vec<String> {
        self.generators
            .iter()
            .filter(|g| self.gradings[*g] == 0)
            .cloned()
            .collect()
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for g in &self.generators {
            s.push_str(&format!(
                "d {g} = {}   [|{g}| = {}]\n",
                self.differentials[g], self.gradings[g]
            ));
        }
        s
    }
}

#[derive(Clone, Debug)]
pub struct D2Report {
    pub residues: Vec<(String, Elem)>,
}

impl D2Report {
    pub fn pass(&self) -> bool {
        self.residues.is_empty()
    }
}

impl fmt::Display for D2Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass() {
            write!(f, "d^2 = 0 on all generators")
        } else {
            for (g, r) in &self.residues {
                writeln!(f, "d^2({g}) = {r}")?;
            }
            Ok(())
        }
    }
}
