//! The LagJSON interchange format.
//!
//! Canonical serialization: sorted keys, arrays in id order, rational
//! coordinates as `p/q` strings. A file carries the polyline layout (the source
//! of truth for the planar embedding) plus the derived combinatorial data
//! (crossings with quadrant signs, arcs, components, basepoints, faces), which
//! `parse_diagram` recomputes and checks field by field.

use super::builder::{compile, CrossingSpec, GeomBasePoint, Geometry};
use super::{ArcEnd, Diagram, DiagramError, OrientConvention, SpinConvention};
use crate::geom::{ClosedPolyline, Pt, Q};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
struct FileDiagram {
    arcs: Vec<FileArc>,
    basepoints: Vec<FileBasePoint>,
    components: Vec<Vec<usize>>,
    crossings: Vec<FileCrossing>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    faces: Option<Vec<FileFace>>,
    layout: Vec<Vec<[String; 2]>>,
    name: Option<String>,
    orient_convention: OrientConvention,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    outer_face: Option<usize>,
    spin: SpinConvention,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
struct FileCrossing {
    grading: i64,
    id: String,
    over_dir: [String; 2],
    pos: [String; 2],
    quadrants: [FileQuadrant; 4],
    smooth_sign: i8,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
struct FileQuadrant {
    arc: usize,
    end: String,
    orient: i8,
    reeb: i8,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
struct FileArc {
    from: [usize; 2],
    id: usize,
    to: [usize; 2],
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
struct FileBasePoint {
    arc: usize,
    at: [String; 2],
    exp: i8,
    label: String,
    position: String,
    sign: i8,
    #[serde(default)]
    sym: Option<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
struct FileFace {
    area2: String,
    bounded: bool,
    corners: Vec<Vec<(String, u8)>>,
    id: usize,
}

fn q_to_string(x: &Q) -> String {
    if x.denom() == &BigInt::from(1) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn q_from_string(s: &str) -> Result<Q, DiagramError> {
    let parse = |t: &str| {
        BigInt::from_str(t.trim()).map_err(|_| DiagramError::Syntax(format!("bad rational `{s}`")))
    };
    match s.split_once('/') {
        Some((a, b)) => {
            let d = parse(b)?;
            if d.is_zero() {
                return Err(DiagramError::Syntax(format!("zero denominator in `{s}`")));
            }
            Ok(Q::new(parse(a)?, d))
        }
        None => Ok(Q::from(parse(s)?)),
    }
}

fn pt_to_json(p: &Pt) -> [String; 2] {
    [q_to_string(&p.x), q_to_string(&p.y)]
}

fn pt_from_json(p: &[String; 2]) -> Result<Pt, DiagramError> {
    Ok(Pt::new(q_from_string(&p[0])?, q_from_string(&p[1])?))
}

/// Canonical serialization of a diagram.
pub fn serialize_diagram(d: &Diagram) -> String {
    let file = FileDiagram {
        name: d.name.clone(),
        layout: d
            .geometry
            .iter()
            .map(|poly| poly.pts.iter().map(pt_to_json).collect())
            .collect(),
        crossings: d
            .crossings
            .iter()
            .map(|c| {
                let over_out = (0..4)
                    .find(|&p| c.port_is_over(p) && c.port_is_out(p))
                    .expect("over out-port");
                FileCrossing {
                    id: c.id.clone(),
                    grading: c.grading,
                    pos: pt_to_json(&c.pos),
                    over_dir: pt_to_json(&c.ports[over_out as usize].dir),
                    smooth_sign: c.smooth_sign(),
                    quadrants: std::array::from_fn(|i| FileQuadrant {
                        arc: c.ports[i].arc,
                        end: match c.ports[i].end {
                            ArcEnd::Tail => "tail".into(),
                            ArcEnd::Head => "head".into(),
                        },
                        reeb: c.reeb_sign(i as u8),
                        orient: c.orientation_sign(i as u8, d.orient_convention),
                    }),
                }
            })
            .collect(),
        arcs: d
            .arcs
            .iter()
            .map(|a| FileArc {
                id: a.id,
                from: [a.tail.0, a.tail.1 as usize],
                to: [a.head.0, a.head.1 as usize],
            })
            .collect(),
        components: d.components.clone(),
        basepoints: d
            .basepoints
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let order = d.arcs[b.arc]
                    .basepoints
                    .iter()
                    .position(|&x| x == i)
                    .unwrap_or(0);
                let denom = d.arcs[b.arc].basepoints.len() + 1;
                FileBasePoint {
                    label: b.label.clone(),
                    sym: if b.sym == b.label { None } else { Some(b.sym.clone()) },
                    sign: b.sign,
                    exp: b.exp,
                    arc: b.arc,
                    position: q_to_string(&Q::new(
                        BigInt::from(order as i64 + 1),
                        BigInt::from(denom as i64),
                    )),
                    at: pt_to_json(&b.at),
                }
            })
            .collect(),
        faces: Some(
            d.faces
                .iter()
                .map(|f| FileFace {
                    id: f.id,
                    bounded: f.bounded,
                    area2: q_to_string(&f.area2),
                    corners: f
                        .cycles
                        .iter()
                        .map(|&ci| {
                            d.cycles[ci]
                                .corners
                                .iter()
                                .map(|(cx, qd)| (d.crossings[*cx].id.clone(), *qd))
                                .collect()
                        })
                        .collect(),
                })
                .collect(),
        ),
        outer_face: Some(d.outer_face),
        orient_convention: d.orient_convention,
        spin: d.spin,
    };
    let value = serde_json::to_value(&file).expect("serializable");
    serde_json::to_string_pretty(&sort_keys(value)).expect("serializable") + "\n"
}

fn sort_keys(v: serde_json::Value) -> serde_json::Value {
    match v {
        serde_json::Value::Object(m) => {
            let mut sorted: Vec<(String, serde_json::Value)> = m.into_iter().collect();
            sorted.sort_by(|a, b| a.0.cmp(&b.0));
            serde_json::Value::Object(sorted.into_iter().map(|(k, x)| (k, sort_keys(x))).collect())
        }
        serde_json::Value::Array(a) => {
            serde_json::Value::Array(a.into_iter().map(sort_keys).collect())
        }
        other => other,
    }
}

/// Parse a LagJSON document, recompiling the diagram from its layout and
/// checking every recorded combinatorial field against the result.
pub fn parse_diagram(text: &str) -> Result<Diagram, DiagramError> {
    let file: FileDiagram =
        serde_json::from_str(text).map_err(|e| DiagramError::Syntax(e.to_string()))?;
    if file.layout.is_empty() {
        return Err(DiagramError::Invalid(
            "missing layout: the planar embedding is required".into(),
        ));
    }
    let components: Vec<ClosedPolyline> = file
        .layout
        .iter()
        .map(|pts| {
            Ok(ClosedPolyline::new(
                pts.iter().map(pt_from_json).collect::<Result<_, _>>()?,
            ))
        })
        .collect::<Result<_, DiagramError>>()?;
    let basepoints: Vec<GeomBasePoint> = file
        .basepoints
        .iter()
        .map(|b| {
            Ok(GeomBasePoint {
                label: b.label.clone(),
                sym: b.sym.clone().unwrap_or_else(|| b.label.clone()),
                sign: b.sign,
                exp: b.exp,
                at: pt_from_json(&b.at)?,
            })
        })
        .collect::<Result<_, DiagramError>>()?;
    let specs: Vec<CrossingSpec> = file
        .crossings
        .iter()
        .map(|c| {
            Ok(CrossingSpec {
                name: c.id.clone(),
                near: pt_from_json(&c.pos)?,
                over_dir: pt_from_json(&c.over_dir)?,
                grading: c.grading,
            })
        })
        .collect::<Result<_, DiagramError>>()?;
    let d = compile(
        Geometry { components, basepoints },
        &specs,
        file.name.clone(),
        file.orient_convention,
        file.spin,
    )?;

    // cross-check the recorded data against the recompilation
    for fc in &file.crossings {
        let c = d.crossing(&fc.id)?;
        if c.smooth_sign() != fc.smooth_sign {
            return Err(DiagramError::Invalid(format!(
                "crossing {}: recorded smooth_sign {} but layout gives {}",
                fc.id,
                fc.smooth_sign,
                c.smooth_sign()
            )));
        }
        for (i, fq) in fc.quadrants.iter().enumerate() {
            if c.reeb_sign(i as u8) != fq.reeb {
                return Err(DiagramError::Invalid(format!(
                    "crossing {}: Reeb sign alternation mismatch at quadrant {i}",
                    fc.id
                )));
            }
            if c.orientation_sign(i as u8, d.orient_convention) != fq.orient {
                return Err(DiagramError::Invalid(format!(
                    "crossing {}: orientation signs vs crossing sign pattern at quadrant {i}",
                    fc.id
                )));
            }
            if c.ports[i].arc != fq.arc {
                return Err(DiagramError::Invalid(format!(
                    "crossing {}: quadrant {i} attaches arc {} but layout gives {}",
                    fc.id, fq.arc, c.ports[i].arc
                )));
            }
        }
    }
    if file.components != d.components {
        return Err(DiagramError::Invalid(
            "recorded components do not match the layout".into(),
        ));
    }
    if file.arcs.len() != d.arcs.len() {
        return Err(DiagramError::Invalid(format!(
            "recorded {} arcs but layout gives {}",
            file.arcs.len(),
            d.arcs.len()
        )));
    }
    for fa in &file.arcs {
        let a = d
            .arcs
            .get(fa.id)
            .ok_or_else(|| DiagramError::Invalid(format!("arc id {} out of range", fa.id)))?;
        if [a.tail.0, a.tail.1 as usize] != fa.from || [a.head.0, a.head.1 as usize] != fa.to {
            return Err(DiagramError::Invalid(format!(
                "arc {} endpoints do not match the layout",
                fa.id
            )));
        }
    }
    if let Some(faces) = &file.faces {
        if faces.len() != d.faces.len() {
            return Err(DiagramError::Invalid(format!(
                "recorded {} faces but layout gives {}",
                faces.len(),
                d.faces.len()
            )));
        }
        if let Some(outer) = file.outer_face {
            if outer != d.outer_face {
                return Err(DiagramError::Invalid(
                    "recorded outer face does not match the layout".into(),
                ));
            }
        }
    }
    // invariant checks (missing basepoints etc.) surface as parse errors
    let report = d.validate();
    if !report.pass() {
        let names: Vec<String> = report
            .failures()
            .iter()
            .map(|c| c.name.clone())
            .collect();
        return Err(DiagramError::Invalid(names.join("; ")));
    }
    Ok(d)
}
