//! Diagram surgery: pinch smoothing, Reidemeister-2 bigon removal, component
//! deletion and basepoint moves. Every operation edits the polyline geometry and
//! recompiles, so faces, nesting and turning data stay exact.

use super::builder::{compile, CrossingSpec, GeomBasePoint, Geometry};
use super::{ArcEnd, Diagram, DiagramError};
use crate::geom::{q, qi, ClosedPolyline, Pt, Q};
use num_traits::{Signed, Zero};

/// `(id, pos, over_dir, grading)` specs of the surviving crossings.
fn crossing_specs(d: &Diagram, skip: &[usize]) -> Vec<CrossingSpec> {
    d.crossings
        .iter()
        .enumerate()
        .filter(|(i, _)| !skip.contains(i))
        .map(|(_, c)| {
            let over_out = (0..4)
                .find(|&p| c.port_is_over(p) && c.port_is_out(p))
                .expect("over out-port");
            CrossingSpec {
                name: c.id.clone(),
                near: c.pos.clone(),
                over_dir: c.ports[over_out as usize].dir.clone(),
                grading: c.grading,
            }
        })
        .collect()
}

fn geom_basepoints(d: &Diagram) -> Vec<GeomBasePoint> {
    d.basepoints
        .iter()
        .map(|b| GeomBasePoint {
            label: b.label.clone(),
            sym: b.sym.clone(),
            sign: b.sign,
            exp: b.exp,
            at: b.at.clone(),
        })
        .collect()
}

/// Point a fraction `f` into the arc's path from its crossing end.
fn end_point(d: &Diagram, arc: usize, at_tail: bool, f: &Q) -> Pt {
    let path = &d.arcs[arc].path;
    if at_tail {
        path[0].lerp(&path[1], f)
    } else {
        let m = path.len();
        path[m - 1].lerp(&path[m - 2], f)
    }
}

/// Squared clearance from a point to all segments not incident to the given
/// crossing.
fn clearance2(d: &Diagram, cx: usize, p: &Pt) -> Q {
    let mut best: Option<Q> = None;
    for a in &d.arcs {
        let incident = a.tail.0 == cx || a.head.0 == cx;
        for s in 0..a.path.len() - 1 {
            if incident && (s == 0 || s == a.path.len() - 2) {
                continue;
            }
            let d2 = seg_dist2(p, &a.path[s], &a.path[s + 1]);
            if best.as_ref().map(|b| &d2 < b).unwrap_or(true) {
                best = Some(d2);
            }
        }
    }
    best.unwrap_or_else(|| qi(1))
}

fn seg_dist2(p: &Pt, a: &Pt, b: &Pt) -> Q {
    let ab = b.sub(a);
    let n2 = &(&ab.x * &ab.x) + &(&ab.y * &ab.y);
    if n2.is_zero() {
        let d = p.sub(a);
        return &(&d.x * &d.x) + &(&d.y * &d.y);
    }
    let ap = p.sub(a);
    let t = &(&(&ab.x * &ap.x) + &(&ab.y * &ap.y)) / &n2;
    let t = t.clamp(Q::zero(), qi(1));
    let proj = a.lerp(b, &t);
    let d = p.sub(&proj);
    &(&d.x * &d.x) + &(&d.y * &d.y)
}

fn dist2(a: &Pt, b: &Pt) -> Q {
    let d = a.sub(b);
    &(&d.x * &d.x) + &(&d.y * &d.y)
}

/// Rebuild all component polylines by walking arcs, with local rewires.
struct Jump {
    q_in: Pt,
    route: Vec<Pt>,
    q_out: Pt,
    next_arc: usize,
    bp: Option<GeomBasePoint>,
}

struct Rewire {
    /// Keyed by the incoming arc at a surgered crossing.
    jumps: std::collections::BTreeMap<usize, Jump>,
    /// Crossings removed by the surgery; arc endpoints there remain as plain
    /// polyline vertices (the strands stay collinear through them).
    removed: Vec<usize>,
    /// Arcs deleted outright (their strands are rerouted by jumps).
    skip_arcs: Vec<usize>,
}

fn rebuild_polylines(
    d: &Diagram,
    rewire: &Rewire,
    skip_comps: &[usize],
) -> Result<(Vec<ClosedPolyline>, Vec<GeomBasePoint>), DiagramError> {
    let mut new_bps = Vec::new();
    let mut visited = vec![false; d.arcs.len()];
    for &a in &rewire.skip_arcs {
        visited[a] = true;
    }
    let mut polylines = Vec::new();
    for start in 0..d.arcs.len() {
        if visited[start] || skip_comps.contains(&d.arcs[start].comp) {
            continue;
        }
        let mut pts: Vec<Pt> = Vec::new();
        let mut a = start;
        loop {
            if visited[a] {
                break;
            }
            visited[a] = true;
            let arc = &d.arcs[a];
            let mut path = arc.path.clone();
            // head end first (can shrink the path)
            let jump = rewire.jumps.get(&a);
            if let Some(j) = jump {
                let m = path.len();
                path[m - 1] = j.q_in.clone();
            } else if !rewire.removed.contains(&arc.head.0) {
                // endpoint at a surviving crossing: drop it so the crossing
                // stays in a segment interior
                path.pop();
            }
            let is_target = rewire.jumps.values().find(|j| j.next_arc == a);
            if let Some(j) = is_target {
                path[0] = j.q_out.clone();
            } else if !rewire.removed.contains(&arc.tail.0) {
                path.remove(0);
            }
            pts.extend(path.into_iter());
            match jump {
                Some(j) => {
                    if let Some(bp) = &j.bp {
                        let mid = j.q_in.lerp(&j.q_out, &q(1, 2));
                        new_bps.push(GeomBasePoint {
                            at: mid,
                            ..bp.clone()
                        });
                    }
                    pts.extend(j.route.iter().cloned());
                    a = j.next_arc;
                }
                None => {
                    let (h, p) = arc.head;
                    let c = &d.crossings[h];
                    let exit = (p + 2) % 4;
                    let pa = &c.ports[exit as usize];
                    if pa.end != ArcEnd::Tail {
                        return Err(DiagramError::Invalid(
                            "inconsistent orientation through a crossing".into(),
                        ));
                    }
                    a = pa.arc;
                }
            }
            if a == start {
                break;
            }
        }
        polylines.push(ClosedPolyline::new(dedup(pts)));
    }
    Ok((polylines, new_bps))
}

/// Surger a crossing open along its oriented smoothing, decorating the two new
/// arcs with `sym` and `-sym^{-1}` (swapped under the flag).
pub fn pinch_surgery(
    d: &Diagram,
    chord: &str,
    sym: &str,
    swap_signs: bool,
) -> Result<Diagram, DiagramError> {
    let cx = d
        .crossing_index(chord)
        .ok_or_else(|| DiagramError::UnknownChord(chord.to_string()))?;
    let c = &d.crossings[cx];
    let port_of = |over: bool, out: bool| {
        (0..4u8)
            .find(|&p| c.port_is_over(p) == over && c.port_is_out(p) == out)
            .expect("port")
    };
    let over_in = port_of(true, false);
    let over_out = port_of(true, true);
    let under_in = port_of(false, false);
    let under_out = port_of(false, true);

    // connector fraction: shrink until clear of non-incident segments
    let mut f = q(1, 4);
    let clear2 = clearance2(d, cx, &c.pos);
    loop {
        let pts = [
            end_point(d, c.ports[over_in as usize].arc, false, &f),
            end_point(d, c.ports[under_out as usize].arc, true, &f),
            end_point(d, c.ports[under_in as usize].arc, false, &f),
            end_point(d, c.ports[over_out as usize].arc, true, &f),
        ];
        let max_r2 = pts.iter().map(|p| dist2(p, &c.pos)).max().unwrap();
        if &max_r2 * &qi(4) < clear2 {
            break;
        }
        f = &f / &qi(2);
        if f < q(1, 1_000_000) {
            return Err(DiagramError::Degenerate(
                "pinch connector cannot clear surrounding geometry".into(),
            ));
        }
    }
    let q_over_in = end_point(d, c.ports[over_in as usize].arc, false, &f);
    let q_under_out = end_point(d, c.ports[under_out as usize].arc, true, &f);
    let q_under_in = end_point(d, c.ports[under_in as usize].arc, false, &f);
    let q_over_out = end_point(d, c.ports[over_out as usize].arc, true, &f);

    let (sign_a, exp_a, sign_b, exp_b) = if swap_signs {
        (-1, -1, 1, 1)
    } else {
        (1, 1, -1, -1)
    };
    let mut jumps = std::collections::BTreeMap::new();
    jumps.insert(
        c.ports[over_in as usize].arc,
        Jump {
            q_in: q_over_in,
            route: Vec::new(),
            q_out: q_under_out,
            next_arc: c.ports[under_out as usize].arc,
            bp: Some(GeomBasePoint {
                label: sym.to_string(),
                sym: sym.to_string(),
                sign: sign_a,
                exp: exp_a,
                at: Pt::of(0.0, 0.0),
            }),
        },
    );
    jumps.insert(
        c.ports[under_in as usize].arc,
        Jump {
            q_in: q_under_in,
            route: Vec::new(),
            q_out: q_over_out,
            next_arc: c.ports[over_out as usize].arc,
            bp: Some(GeomBasePoint {
                label: format!("{sym}'"),
                sym: sym.to_string(),
                sign: sign_b,
                exp: exp_b,
                at: Pt::of(0.0, 0.0),
            }),
        },
    );
    let rewire = Rewire {
        jumps,
        removed: vec![cx],
        skip_arcs: Vec::new(),
    };
    let (polylines, new_bps) = rebuild_polylines(d, &rewire, &[])?;
    if std::env::var("LCH_DEBUG_SURGERY").is_ok() {
        for (i, p) in polylines.iter().enumerate() {
            eprintln!("poly {i}: {} pts: {:?}", p.len(), p.pts.iter().take(8).collect::<Vec<_>>());
        }
    }
    let mut basepoints = geom_basepoints(d);
    basepoints.extend(new_bps);
    compile(
        Geometry {
            components: polylines,
            basepoints,
        },
        &crossing_specs(d, &[cx]),
        d.name.clone(),
        d.orient_convention,
        d.spin,
    )
}

/// Find a removable bigon face between two chords: exactly two corners at
/// `{x, y}`, two boundary arcs, no basepoints on them.
pub fn find_bigon(d: &Diagram, x_id: &str, y_id: &str) -> Option<usize> {
    let xi = d.crossing_index(x_id)?;
    let yi = d.crossing_index(y_id)?;
    for (fi, f) in d.faces.iter().enumerate() {
        if !f.bounded || f.cycles.len() != 1 {
            continue;
        }
        let cy = &d.cycles[f.cycles[0]];
        if cy.corners.len() != 2 || cy.halfedges.len() != 2 {
            continue;
        }
        let cs: Vec<usize> = cy.corners.iter().map(|(c, _)| *c).collect();
        if !((cs[0] == xi && cs[1] == yi) || (cs[0] == yi && cs[1] == xi)) {
            continue;
        }
        if cy
            .halfedges
            .iter()
            .any(|(a, _)| !d.arcs[*a].basepoints.is_empty())
        {
            continue;
        }
        return Some(fi);
    }
    None
}

/// Remove a Reidemeister-2 bigon bounded by chords `x` and `y`, pulling one
/// strand off the other.
pub fn r2_surgery(d: &Diagram, x_id: &str, y_id: &str) -> Result<Diagram, DiagramError> {
    let face = find_bigon(d, x_id, y_id).ok_or_else(|| {
        DiagramError::Invalid(format!("no removable bigon between {x_id} and {y_id}"))
    })?;
    let cy = &d.cycles[d.faces[face].cycles[0]];
    // reroute the strand whose bigon arc is geometrically longer, following an
    // offset of the shorter side; fall back to the other choice
    let mut order = [cy.halfedges[0].0, cy.halfedges[1].0];
    if d.arcs[order[0]].path.len() > d.arcs[order[1]].path.len() {
        order.swap(0, 1);
    }
    let mut last = None;
    for &beta_arc in &[order[0], order[1]] {
        let alpha_arc = if beta_arc == order[0] { order[1] } else { order[0] };
        match r2_with_choice(d, alpha_arc, beta_arc) {
            Ok(nd) => return Ok(nd),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap())
}

fn r2_with_choice(d: &Diagram, arc_a: usize, arc_b: usize) -> Result<Diagram, DiagramError> {
    let xi = d.arcs[arc_a].tail.0;
    let yi = d.arcs[arc_a].head.0;
    // alpha = strand of arc_a (rerouted), beta = strand of arc_b (kept)
    // alpha's non-bigon arcs at each crossing: the arc at the port opposite the
    // bigon arc's port
    let opp = |cr: usize, port: u8| {
        let c = &d.crossings[cr];
        let p2 = (port + 2) % 4;
        (c.ports[p2 as usize].arc, c.ports[p2 as usize].end)
    };
    let (a_tail_c, a_tail_p) = d.arcs[arc_a].tail;
    let (a_head_c, a_head_p) = d.arcs[arc_a].head;
    let (nb_x_arc, nb_x_end) = opp(a_tail_c, a_tail_p);
    let (nb_y_arc, nb_y_end) = opp(a_head_c, a_head_p);

    // beta path oriented from x to y
    let beta_x_to_y: Vec<Pt> = if d.arcs[arc_b].tail.0 == xi {
        d.arcs[arc_b].path.clone()
    } else {
        d.arcs[arc_b].path.iter().rev().cloned().collect()
    };

    // away side: the bigon is on the side of beta's start direction where
    // alpha's bigon arc starts; offset away from it
    let d_beta = beta_x_to_y[1].sub(&beta_x_to_y[0]);
    let d_alpha = d.arcs[arc_a].path[1].sub(&d.arcs[arc_a].path[0]);
    let side = crate::geom::cross(&d_beta, &d_alpha);
    if side.is_zero() {
        return Err(DiagramError::Degenerate("flat bigon".into()));
    }
    let away: i64 = if side.is_positive() { -1 } else { 1 };

    // candidate reroutes for alpha between points near x and y on its
    // non-bigon arcs; try a straight chord first, then offsets of beta's path
    let mut candidates: Vec<Vec<Pt>> = Vec::new();
    let fr = q(1, 8);
    let q_x = end_point(d, nb_x_arc, nb_x_end == ArcEnd::Tail, &fr);
    let q_y = end_point(d, nb_y_arc, nb_y_end == ArcEnd::Tail, &fr);
    candidates.push(vec![q_x.clone(), q_y.clone()]);
    for k in 3..9 {
        let eps = q(1, 1 << k);
        let mut path = vec![q_x.clone()];
        for s in 0..beta_x_to_y.len() - 1 {
            let (p1, p2) = (&beta_x_to_y[s], &beta_x_to_y[s + 1]);
            let dseg = p2.sub(p1);
            let scale = max_abs(&dseg);
            let n = Pt::new(
                &(-&dseg.y * &eps) / &scale * qi(away),
                &(&dseg.x * &eps) / &scale * qi(away),
            );
            let lo = if s == 0 { q(1, 8) } else { q(1, 16) };
            let hi = if s == beta_x_to_y.len() - 2 {
                q(7, 8)
            } else {
                q(15, 16)
            };
            path.push(offset_pt(&p1.lerp(p2, &lo), &n));
            path.push(offset_pt(&p1.lerp(p2, &hi), &n));
        }
        path.push(q_y.clone());
        candidates.push(path);
    }

    // orientation: alpha enters x from its non-bigon arc iff that arc flows in
    let alpha_forward = d.arcs[nb_x_arc].head.0 == xi && nb_x_end == ArcEnd::Head;
    let specs = crossing_specs(d, &[xi, yi]);
    let bps = geom_basepoints(d);
    let mut last_err = None;
    for cand in candidates {
        let route: Vec<Pt> = cand[1..cand.len() - 1].to_vec();
        let (src, dst, q_src, q_dst, route) = if alpha_forward {
            (nb_x_arc, nb_y_arc, q_x.clone(), q_y.clone(), route.clone())
        } else {
            (
                nb_y_arc,
                nb_x_arc,
                q_y.clone(),
                q_x.clone(),
                route.iter().rev().cloned().collect(),
            )
        };
        let mut jumps = std::collections::BTreeMap::new();
        jumps.insert(
            src,
            Jump {
                q_in: q_src,
                route,
                q_out: q_dst,
                next_arc: dst,
                bp: None,
            },
        );
        let rewire = Rewire {
            jumps,
            removed: vec![xi, yi],
            skip_arcs: vec![arc_a],
        };
        match rebuild_polylines(d, &rewire, &[]) {
            Ok((polylines, _)) => {
                if std::env::var("LCH_DEBUG_SURGERY").is_ok() {
                    for (i, p) in polylines.iter().enumerate() {
                        eprintln!("r2 poly {i} ({} pts):", p.len());
                        for pt in &p.pts {
                            eprintln!("   {:?}", pt);
                        }
                    }
                }
                match compile(
                    Geometry {
                        components: polylines,
                        basepoints: bps.clone(),
                    },
                    &specs,
                    d.name.clone(),
                    d.orient_convention,
                    d.spin,
                ) {
                    Ok(nd) => return Ok(nd),
                    Err(e) => last_err = Some(e),
                }
            }
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.unwrap_or_else(|| DiagramError::Degenerate("r2 reroute failed".into())))
}

fn max_abs(p: &Pt) -> Q {
    let ax = if p.x.is_negative() { -p.x.clone() } else { p.x.clone() };
    let ay = if p.y.is_negative() { -p.y.clone() } else { p.y.clone() };
    if ax > ay {
        ax
    } else {
        ay.max(q(1, 1000))
    }
}

fn offset_pt(p: &Pt, n: &Pt) -> Pt {
    Pt::new(&p.x + &n.x, &p.y + &n.y)
}

fn dedup(pts: Vec<Pt>) -> Vec<Pt> {
    let mut out: Vec<Pt> = Vec::with_capacity(pts.len());
    for p in pts {
        if out.last() != Some(&p) {
            out.push(p);
        }
    }
    if out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

/// Delete a split component (all its crossings must be self-crossings).
pub fn remove_component(d: &Diagram, comp: usize) -> Result<Diagram, DiagramError> {
    let mut removed = Vec::new();
    for (i, _) in d.crossings.iter().enumerate() {
        let c0 = d.strand_component(i, 0);
        let c1 = d.strand_component(i, 1);
        if c0 == comp && c1 == comp {
            removed.push(i);
        } else if c0 == comp || c1 == comp {
            return Err(DiagramError::Invalid(format!(
                "component {} still has mixed chords ({})",
                comp + 1,
                d.crossings[i].id
            )));
        }
    }
    let polylines: Vec<ClosedPolyline> = d
        .geometry
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != comp)
        .map(|(_, p)| p.clone())
        .collect();
    let basepoints: Vec<GeomBasePoint> = d
        .basepoints
        .iter()
        .filter(|b| b.comp != comp)
        .map(|b| GeomBasePoint {
            label: b.label.clone(),
            sym: b.sym.clone(),
            sign: b.sign,
            exp: b.exp,
            at: b.at.clone(),
        })
        .collect();
    if polylines.is_empty() {
        return Ok(empty_diagram(d));
    }
    compile(
        Geometry {
            components: polylines,
            basepoints,
        },
        &crossing_specs(d, &removed),
        d.name.clone(),
        d.orient_convention,
        d.spin,
    )
}

/// The empty diagram (after capping the last component).
pub fn empty_diagram(d: &Diagram) -> Diagram {
    Diagram {
        name: d.name.clone(),
        crossings: Vec::new(),
        arcs: Vec::new(),
        components: Vec::new(),
        basepoints: Vec::new(),
        faces: vec![super::Face {
            id: 0,
            cycles: Vec::new(),
            bounded: false,
            area2: Q::zero(),
        }],
        cycles: Vec::new(),
        outer_face: 0,
        turning: Vec::new(),
        left_face: Vec::new(),
        geometry: Vec::new(),
        orient_convention: d.orient_convention,
        spin: d.spin,
    }
}

/// Move a basepoint across the next crossing along (or against) its component
/// orientation. Returns the new diagram and the crossing id passed.
pub fn move_basepoint_over(
    d: &Diagram,
    label: &str,
    forward: bool,
) -> Result<(Diagram, String), DiagramError> {
    let bi = d
        .basepoints
        .iter()
        .position(|b| b.label == label)
        .ok_or_else(|| DiagramError::Invalid(format!("no basepoint {label}")))?;
    let b = &d.basepoints[bi];
    let arc = &d.arcs[b.arc];
    // the basepoint must be the one nearest the crossing it moves across
    let order = arc.basepoints.iter().position(|&x| x == bi).unwrap();
    if forward && order != arc.basepoints.len() - 1 {
        return Err(DiagramError::Invalid(format!(
            "basepoint {label} is not adjacent to the head crossing"
        )));
    }
    if !forward && order != 0 {
        return Err(DiagramError::Invalid(format!(
            "basepoint {label} is not adjacent to the tail crossing"
        )));
    }
    let (cxi, port) = if forward { arc.head } else { arc.tail };
    let c = &d.crossings[cxi];
    let exit = (port + 2) % 4;
    let target_arc = c.ports[exit as usize].arc;
    // new anchor just past the crossing on the target arc, nearer the crossing
    // than any anchor already sitting there
    let mut f = q(1, 16);
    loop {
        let at = if forward {
            end_point(d, target_arc, true, &f)
        } else {
            end_point(d, target_arc, false, &f)
        };
        if !d.basepoints.iter().any(|x| x.at == at) {
            break;
        }
        f = &f / &qi(2);
        if f < q(1, 1_000_000) {
            return Err(DiagramError::Degenerate(
                "basepoint anchor collision cannot be resolved".into(),
            ));
        }
    }
    let at = if forward {
        end_point(d, target_arc, true, &f)
    } else {
        end_point(d, target_arc, false, &f)
    };
    let mut bps = geom_basepoints(d);
    bps[bi].at = at;
    let nd = compile(
        Geometry {
            components: d.geometry.clone(),
            basepoints: bps,
        },
        &crossing_specs(d, &[]),
        d.name.clone(),
        d.orient_convention,
        d.spin,
    )?;
    Ok((nd, c.id.clone()))
}

/// Fuse two basepoints that sit adjacent on the same arc into a single one
/// labeled `merged`; requires equal exponent decorations.
pub fn fuse_basepoints(
    d: &Diagram,
    keep: &str,
    absorb: &str,
    merged: &str,
) -> Result<Diagram, DiagramError> {
    let ki = d
        .basepoints
        .iter()
        .position(|b| b.label == keep)
        .ok_or_else(|| DiagramError::Invalid(format!("no basepoint {keep}")))?;
    let ai = d
        .basepoints
        .iter()
        .position(|b| b.label == absorb)
        .ok_or_else(|| DiagramError::Invalid(format!("no basepoint {absorb}")))?;
    let (bk, ba) = (&d.basepoints[ki], &d.basepoints[ai]);
    if bk.arc != ba.arc {
        return Err(DiagramError::Invalid(format!(
            "basepoints {keep} and {absorb} are not on the same arc"
        )));
    }
    let order = &d.arcs[bk.arc].basepoints;
    let pk = order.iter().position(|&x| x == ki).unwrap();
    let pa = order.iter().position(|&x| x == ai).unwrap();
    if pk.abs_diff(pa) != 1 {
        return Err(DiagramError::Invalid(format!(
            "basepoints {keep} and {absorb} are not adjacent"
        )));
    }
    if bk.exp != ba.exp {
        return Err(DiagramError::Unsupported(
            "fusing basepoints with opposite exponents".into(),
        ));
    }
    let mut bps = Vec::new();
    for (i, b) in d.basepoints.iter().enumerate() {
        if i == ai {
            continue;
        }
        let mut gb = GeomBasePoint {
            label: b.label.clone(),
            sym: b.sym.clone(),
            sign: b.sign,
            exp: b.exp,
            at: b.at.clone(),
        };
        if i == ki {
            gb.label = merged.to_string();
            gb.sym = merged.to_string();
            gb.sign = bk.sign * ba.sign;
        }
        bps.push(gb);
    }
    compile(
        Geometry {
            components: d.geometry.clone(),
            basepoints: bps,
        },
        &crossing_specs(d, &[]),
        d.name.clone(),
        d.orient_convention,
        d.spin,
    )
}
