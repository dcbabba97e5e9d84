//! Lagrangian-projection diagrams of oriented Legendrian links.
//!
//! A diagram is a 4-valent planar graph with over/under data at each crossing,
//! oriented arcs grouped into link components, decorated basepoints, and the face
//! structure of the planar complement. Diagrams are immutable once compiled; all
//! surgery operations produce new diagrams.

mod builder;
mod constructors;
mod lagjson;
mod surgery;

pub use builder::{compile, CrossingSpec, GeomBasePoint, Geometry};
pub use constructors::{lambda_n, minus_one_closure, trefoil, unknot, BraidWord, Lambda1Config};
pub use lagjson::{parse_diagram, serialize_diagram};
pub use surgery::{
    empty_diagram, find_bigon, fuse_basepoints, move_basepoint_over, pinch_surgery, r2_surgery,
    remove_component,
};

use crate::geom::{Pt, Q};
use std::collections::BTreeMap;
use std::fmt;

/// Which adjacent quadrant pair carries the negative orientation signs at a
/// positive crossing. The pair flanks one of the four strand rays; the choice is
/// global and is pinned by the `d^2 = 0` suite over the bundled diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum OrientConvention {
    FlankOverIn,
    FlankOverOut,
    FlankUnderIn,
    FlankUnderOut,
}

impl Default for OrientConvention {
    fn default() -> Self {
        // Validated choice: the unique option for which the bundled corpus
        // satisfies d^2 = 0 with the unknot differential equal to 1 + t.
        OrientConvention::FlankUnderIn
    }
}

/// Spin-structure convention flag carried by diagrams and DGAs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize, Default)]
pub enum SpinConvention {
    /// Diagrams computed as drawn.
    #[default]
    LieGroup,
    /// Obtained from the other convention by `t_i -> -t_i`.
    NullCobordant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ArcEnd {
    Tail,
    Head,
}

/// One of the four arc-ends around a crossing, in counterclockwise order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PortAttach {
    pub arc: usize,
    pub end: ArcEnd,
    /// Outward ray direction of this port (exact, from geometry).
    pub dir: Pt,
}

#[derive(Clone, Debug)]
pub struct Crossing {
    pub id: String,
    pub grading: i64,
    pub pos: Pt,
    /// Arc-ends in counterclockwise order. Ports `{0,2}` and `{1,3}` are the two
    /// strands through the crossing.
    pub ports: [PortAttach; 4],
    /// 0 when strand `{0,2}` is the over strand, 1 when `{1,3}` is.
    pub over_parity: u8,
}

impl Crossing {
    pub fn port_is_over(&self, port: u8) -> bool {
        port % 2 == self.over_parity
    }

    /// Is the port an outgoing end (an arc leaves the crossing there)?
    pub fn port_is_out(&self, port: u8) -> bool {
        self.ports[port as usize].end == ArcEnd::Tail
    }

    /// Smooth crossing sign: +1 when (over direction, under direction) is a
    /// positively oriented frame.
    pub fn smooth_sign(&self) -> i8 {
        let over_out = (0..4)
            .find(|&p| self.port_is_over(p) && self.port_is_out(p))
            .expect("crossing has an over out-port");
        let under_out = (0..4)
            .find(|&p| !self.port_is_over(p) && self.port_is_out(p))
            .expect("crossing has an under out-port");
        if (over_out + 1) % 4 == under_out {
            1
        } else {
            -1
        }
    }

    /// Reeb sign of quadrant `q` (spanned by ports `q` and `q+1` counterclockwise):
    /// positive exactly when port `q` lies on the over strand.
    pub fn reeb_sign(&self, q: u8) -> i8 {
        if self.port_is_over(q) {
            1
        } else {
            -1
        }
    }

    /// Orientation sign of quadrant `q` under the given convention.
    pub fn orientation_sign(&self, q: u8, conv: OrientConvention) -> i8 {
        if self.smooth_sign() < 0 {
            return 1;
        }
        let ray = match conv {
            OrientConvention::FlankOverIn => (0..4)
                .find(|&p| self.port_is_over(p) && !self.port_is_out(p)),
            OrientConvention::FlankOverOut => (0..4)
                .find(|&p| self.port_is_over(p) && self.port_is_out(p)),
            OrientConvention::FlankUnderIn => (0..4)
                .find(|&p| !self.port_is_over(p) && !self.port_is_out(p)),
            OrientConvention::FlankUnderOut => (0..4)
                .find(|&p| !self.port_is_over(p) && self.port_is_out(p)),
        }
        .expect("ray exists");
        // The two quadrants flanking ray `r` are r-1 and r.
        if q == ray || (q + 1) % 4 == ray {
            -1
        } else {
            1
        }
    }
}

#[derive(Clone, Debug)]
pub struct Arc {
    pub id: usize,
    /// `(crossing, port)` the arc leaves from.
    pub tail: (usize, u8),
    /// `(crossing, port)` the arc arrives at.
    pub head: (usize, u8),
    pub comp: usize,
    /// Basepoint indices in traversal order along the arc.
    pub basepoints: Vec<usize>,
    /// Geometric path including both crossing endpoints.
    pub path: Vec<Pt>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BasePoint {
    /// Unique id of the decoration (e.g. `s1'` for the second arc of a pinch).
    pub label: String,
    /// Laurent symbol the decoration contributes (e.g. `s1`).
    pub sym: String,
    /// Sign decoration: the basepoint is marked `sign * sym^exp`.
    pub sign: i8,
    pub exp: i8,
    pub comp: usize,
    pub arc: usize,
    pub at: Pt,
}

impl BasePoint {
    /// Laurent contribution when the boundary traverses the basepoint.
    /// `along = true` means travel agrees with the component orientation.
    pub fn contribution(&self, along: bool) -> (i8, i64) {
        let e = if along { self.exp } else { -self.exp };
        (self.sign, e as i64)
    }
}

/// A traced boundary cycle of the face structure.
#[derive(Clone, Debug)]
pub struct FaceCycle {
    /// Half-edges `(arc, forward?)` in traversal order.
    pub halfedges: Vec<(usize, bool)>,
    /// Corner after each half-edge: `(crossing, quadrant)`.
    pub corners: Vec<(usize, u8)>,
    /// Twice the signed area of the geometric path.
    pub area2: Q,
    pub face: usize,
}

#[derive(Clone, Debug)]
pub struct Face {
    pub id: usize,
    pub cycles: Vec<usize>,
    pub bounded: bool,
    /// Twice the area of the region (bounded faces only; zero for the outer face).
    pub area2: Q,
}

#[derive(Clone, Debug)]
pub struct Diagram {
    pub name: Option<String>,
    pub crossings: Vec<Crossing>,
    pub arcs: Vec<Arc>,
    /// Arc ids in traversal order per link component.
    pub components: Vec<Vec<usize>>,
    pub basepoints: Vec<BasePoint>,
    pub faces: Vec<Face>,
    pub cycles: Vec<FaceCycle>,
    pub outer_face: usize,
    /// Effective turning (in full turns) of each arc, any exact solution of the
    /// per-cycle turning equations; used for disk validity checks.
    pub turning: Vec<Q>,
    /// Face id on the left of each half-edge, indexed `[arc][forward as usize]`.
    pub left_face: Vec<[usize; 2]>,
    pub geometry: Vec<crate::geom::ClosedPolyline>,
    pub orient_convention: OrientConvention,
    pub spin: SpinConvention,
}

#[derive(Debug, thiserror::Error)]
pub enum DiagramError {
    #[error("degenerate geometry: {0}")]
    Degenerate(String),
    #[error("crossing naming failed: {0}")]
    Naming(String),
    #[error("invalid diagram: {0}")]
    Invalid(String),
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown chord {0}")]
    UnknownChord(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
}

impl Diagram {
    pub fn crossing_index(&self, id: &str) -> Option<usize> {
        self.crossings.iter().position(|c| c.id == id)
    }

    pub fn crossing(&self, id: &str) -> Result<&Crossing, DiagramError> {
        self.crossing_index(id)
            .map(|i| &self.crossings[i])
            .ok_or_else(|| DiagramError::UnknownChord(id.to_string()))
    }

    /// Component of the strand through ports `{parity, parity+2}`.
    pub fn strand_component(&self, cross: usize, parity: u8) -> usize {
        let c = &self.crossings[cross];
        let attach = &c.ports[parity as usize];
        self.arcs[attach.arc].comp
    }

    /// Component index of the chord's upper endpoint `a+` (the over strand).
    pub fn chord_upper_component(&self, id: &str) -> Result<usize, DiagramError> {
        let i = self
            .crossing_index(id)
            .ok_or_else(|| DiagramError::UnknownChord(id.to_string()))?;
        let c = &self.crossings[i];
        Ok(self.strand_component(i, c.over_parity))
    }

    /// Component index of the chord's lower endpoint `a-` (the under strand).
    pub fn chord_lower_component(&self, id: &str) -> Result<usize, DiagramError> {
        let i = self
            .crossing_index(id)
            .ok_or_else(|| DiagramError::UnknownChord(id.to_string()))?;
        let c = &self.crossings[i];
        Ok(self.strand_component(i, 1 - c.over_parity))
    }

    /// Signed crossing count of the whole projection.
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.smooth_sign() as i64).sum()
    }

    /// Signed count of the self-crossings of one component.
    pub fn component_writhe(&self, comp: usize) -> i64 {
        self.crossings
            .iter()
            .enumerate()
            .filter(|(i, _)| {
                self.strand_component(*i, 0) == comp && self.strand_component(*i, 1) == comp
            })
            .map(|(_, c)| c.smooth_sign() as i64)
            .sum()
    }

    /// Thurston-Bennequin data: per-component writhe and the total writhe.
    pub fn compute_tb(&self) -> TbReport {
        TbReport {
            per_component: (0..self.components.len())
                .map(|c| self.component_writhe(c))
                .collect(),
            total: self.writhe(),
        }
    }

    /// Basepoint symbols in a fixed order (the coefficient symbols of the DGA).
    pub fn symbols(&self) -> Vec<String> {
        let mut v: Vec<String> = self.basepoints.iter().map(|b| b.sym.clone()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Product of the sign-decorated basepoint monomials on one component.
    pub fn component_basepoint_monomial(&self, comp: usize) -> crate::coeff::Laurent {
        let mut out = crate::coeff::Laurent::one();
        for b in self.basepoints.iter().filter(|b| b.comp == comp) {
            let one = crate::coeff::Laurent::from_monomial(
                crate::coeff::Monomial::var_pow(&b.sym, b.exp as i64),
                num_bigint::BigInt::from(b.sign),
            );
            out = &out * &one;
        }
        out
    }

    /// Connected pieces of the underlying 4-valent graph (diagram pieces, not
    /// link components).
    pub fn graph_pieces(&self) -> usize {
        let n = self.crossings.len();
        if n == 0 {
            return 0;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, i: usize) -> usize {
            if p[i] != i {
                let r = find(p, p[i]);
                p[i] = r;
            }
            p[i]
        }
        for a in &self.arcs {
            let (x, y) = (a.tail.0, a.head.0);
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            if rx != ry {
                parent[rx] = ry;
            }
        }
        (0..n).filter(|&i| find(&mut parent, i) == i).count()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut checks = Vec::new();
        let mut check = |name: &str, ok: bool, detail: String| {
            checks.push(ValidationCheck {
                name: name.to_string(),
                pass: ok,
                detail,
            });
        };

        let v = self.crossings.len() as i64;
        let e = self.arcs.len() as i64;
        let f = self.faces.len() as i64;
        let pieces = self.graph_pieces() as i64;
        check(
            "euler formula",
            v - e + f == 1 + pieces,
            format!("V={v} E={e} F={f} pieces={pieces}"),
        );
        check(
            "four-valent",
            self.arcs.len() * 2 == self.crossings.len() * 4 || self.crossings.is_empty(),
            format!("E={} V={}", self.arcs.len(), self.crossings.len()),
        );

        let mut missing = Vec::new();
        for (i, _) in self.components.iter().enumerate() {
            if !self.basepoints.iter().any(|b| b.comp == i) {
                missing.push(i + 1);
            }
        }
        check(
            "missing basepoint",
            missing.is_empty(),
            if missing.is_empty() {
                "every component carries a basepoint".to_string()
            } else {
                format!("components without basepoints: {missing:?}")
            },
        );

        let mut reeb_ok = true;
        let mut orient_ok = true;
        for c in &self.crossings {
            let pattern: Vec<i8> = (0..4).map(|q| c.reeb_sign(q)).collect();
            if pattern[0] != -pattern[1] || pattern[1] != -pattern[2] || pattern[2] != -pattern[3] {
                reeb_ok = false;
            }
            let negs = (0..4)
                .filter(|&q| c.orientation_sign(q, self.orient_convention) < 0)
                .count();
            let want = if c.smooth_sign() > 0 { 2 } else { 0 };
            if negs != want {
                orient_ok = false;
            }
        }
        check(
            "Reeb sign alternation",
            reeb_ok,
            "quadrant Reeb signs read (+,-,+,-) cyclically".to_string(),
        );
        check(
            "orientation signs vs crossing sign pattern",
            orient_ok,
            "positive crossings carry two adjacent negative quadrants; negative crossings none"
                .to_string(),
        );

        let labels: Vec<&str> = self.basepoints.iter().map(|b| b.label.as_str()).collect();
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        sorted.dedup();
        check(
            "basepoint labels distinct",
            sorted.len() == labels.len(),
            format!("{} basepoints", labels.len()),
        );

        check(
            "has crossings",
            !self.crossings.is_empty(),
            "a Lagrangian projection of a Legendrian link has at least one crossing".to_string(),
        );

        ValidationReport { checks }
    }
}

#[derive(Clone, Debug)]
pub struct TbReport {
    pub per_component: Vec<i64>,
    pub total: i64,
}

#[derive(Clone, Debug)]
pub struct ValidationCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub checks: Vec<ValidationCheck>,
}

impl ValidationReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&ValidationCheck> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{} {} ({})",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            )?;
        }
        Ok(())
    }
}

/// Gradings keyed by chord id.
pub fn grading_map(d: &Diagram) -> BTreeMap<String, i64> {
    d.crossings
        .iter()
        .map(|c| (c.id.clone(), c.grading))
        .collect()
}
