//! Compile exact-rational polyline geometry into a diagram.
//!
//! Components are closed polylines; crossings are the transversal intersections.
//! Faces, their nesting and areas, and the per-arc turning data all derive from
//! the geometry, so surgered diagrams can be recompiled from edited polylines.

use super::{
    Arc, ArcEnd, BasePoint, Crossing, Diagram, DiagramError, Face, FaceCycle, OrientConvention,
    PortAttach, SpinConvention,
};
use crate::geom::{angle_cmp, cross, q, segment_intersection, signed_area2, ClosedPolyline, Pt, Q};
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct GeomBasePoint {
    pub label: String,
    pub sym: String,
    pub sign: i8,
    pub exp: i8,
    pub at: Pt,
}

#[derive(Clone, Debug)]
pub struct Geometry {
    pub components: Vec<ClosedPolyline>,
    pub basepoints: Vec<GeomBasePoint>,
}

/// How a named crossing should be matched and decorated.
#[derive(Clone, Debug)]
pub struct CrossingSpec {
    pub name: String,
    pub near: Pt,
    /// Coarse direction of the over strand; the pass whose direction is more
    /// parallel to this vector is the over strand.
    pub over_dir: Pt,
    pub grading: i64,
}

struct Intersection {
    pt: Pt,
    /// The two passes: (component, segment, parameter, direction).
    passes: [Pass; 2],
}

#[derive(Clone)]
struct Pass {
    comp: usize,
    seg: usize,
    t: Q,
    dir: Pt,
}

pub fn compile(
    geometry: Geometry,
    specs: &[CrossingSpec],
    name: Option<String>,
    orient_convention: OrientConvention,
    spin: SpinConvention,
) -> Result<Diagram, DiagramError> {
    let comps = &geometry.components;
    validate_geometry(comps)?;

    // 1. All pairwise transversal intersections.
    let mut inters: Vec<Intersection> = Vec::new();
    for ci in 0..comps.len() {
        for cj in ci..comps.len() {
            for si in 0..comps[ci].len() {
                let sj_range = if ci == cj { (si + 1)..comps[cj].len() } else { 0..comps[cj].len() };
                for sj in sj_range {
                    if ci == cj {
                        // skip adjacent segments of the same polyline
                        let n = comps[ci].len();
                        if (si + 1) % n == sj || (sj + 1) % n == si {
                            continue;
                        }
                    }
                    let (a1, a2) = comps[ci].seg(si);
                    let (b1, b2) = comps[cj].seg(sj);
                    if let Some((t, u, pt)) = segment_intersection(a1, a2, b1, b2) {
                        let d1 = a2.sub(a1);
                        let d2 = b2.sub(b1);
                        inters.push(Intersection {
                            pt,
                            passes: [
                                Pass { comp: ci, seg: si, t, dir: d1 },
                                Pass { comp: cj, seg: sj, t: u, dir: d2 },
                            ],
                        });
                    }
                }
            }
        }
    }

    // no triple points
    for i in 0..inters.len() {
        for j in i + 1..inters.len() {
            if inters[i].pt == inters[j].pt {
                return Err(DiagramError::Degenerate(format!(
                    "triple point at {:?}",
                    inters[i].pt
                )));
            }
        }
    }

    // 2. Match crossings to specs (bijection by nearest spec).
    if specs.len() != inters.len() {
        return Err(DiagramError::Naming(format!(
            "expected {} crossings, geometry has {}: {:?}",
            specs.len(),
            inters.len(),
            inters.iter().map(|i| &i.pt).collect::<Vec<_>>()
        )));
    }
    let mut spec_of: Vec<Option<usize>> = vec![None; inters.len()];
    for (k, spec) in specs.iter().enumerate() {
        let mut best: Option<(usize, Q)> = None;
        for (i, inter) in inters.iter().enumerate() {
            let d = dist2(&inter.pt, &spec.near);
            if best.as_ref().map(|(_, bd)| &d < bd).unwrap_or(true) {
                best = Some((i, d));
            }
        }
        let (i, _) = best.ok_or_else(|| DiagramError::Naming("no crossings".into()))?;
        if spec_of[i].is_some() {
            return Err(DiagramError::Naming(format!(
                "two specs match the same crossing near {:?} (second: {})",
                inters[i].pt, spec.name
            )));
        }
        spec_of[i] = Some(k);
    }

    // 3. Cut events per component.
    let mut events: Vec<Vec<(usize, Q, usize, usize)>> = vec![Vec::new(); comps.len()];
    // (seg, t, intersection index, pass index)
    for (i, inter) in inters.iter().enumerate() {
        for (pi, pass) in inter.passes.iter().enumerate() {
            events[pass.comp].push((pass.seg, pass.t.clone(), i, pi));
        }
    }
    for ev in events.iter_mut() {
        ev.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    }
    for (ci, ev) in events.iter().enumerate() {
        if ev.is_empty() {
            return Err(DiagramError::Unsupported(format!(
                "component {} has no crossings; crossingless loops are not modeled",
                ci + 1
            )));
        }
    }

    // 4. Crossings with CCW-sorted ports. Port directions point away from the
    // crossing; each pass contributes its out-ray (travel direction) and in-ray
    // (reversed travel direction).
    struct ProtoCross {
        id: String,
        grading: i64,
        pos: Pt,
        over_pass: usize,
        /// (pass, outgoing?) per CCW port
        rays: Vec<(usize, bool, Pt)>,
    }
    let mut protos: Vec<ProtoCross> = Vec::new();
    for (i, inter) in inters.iter().enumerate() {
        let spec = &specs[spec_of[i].unwrap()];
        // over pass: direction more parallel to spec.over_dir
        let c0 = cross(&inter.passes[0].dir, &spec.over_dir);
        let c1 = cross(&inter.passes[1].dir, &spec.over_dir);
        let n0 = norm2(&inter.passes[0].dir);
        let n1 = norm2(&inter.passes[1].dir);
        // compare |sin| via cross^2 / |d|^2
        let lhs = &c0 * &c0 * n1.clone();
        let rhs = &c1 * &c1 * n0.clone();
        let over_pass = match lhs.cmp(&rhs) {
            std::cmp::Ordering::Less => 0,
            std::cmp::Ordering::Greater => 1,
            std::cmp::Ordering::Equal => {
                return Err(DiagramError::Naming(format!(
                    "ambiguous over direction for {} at {:?}",
                    spec.name, inter.pt
                )))
            }
        };
        let mut rays = Vec::new();
        for (pi, pass) in inter.passes.iter().enumerate() {
            rays.push((pi, true, pass.dir.clone()));
            rays.push((pi, false, Pt::new(-pass.dir.x.clone(), -pass.dir.y.clone())));
        }
        rays.sort_by(|a, b| angle_cmp(&a.2, &b.2));
        protos.push(ProtoCross {
            id: spec.name.clone(),
            grading: spec.grading,
            pos: inter.pt.clone(),
            over_pass,
            rays,
        });
    }

    // 5. Arcs per component, with geometric paths.
    let mut arcs: Vec<Arc> = Vec::new();
    let mut components: Vec<Vec<usize>> = Vec::new();
    // (intersection, pass) -> (out arc, in arc)
    let mut out_arc: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut in_arc: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (ci, ev) in events.iter().enumerate() {
        let mut comp_arcs = Vec::new();
        let poly = &comps[ci];
        for k in 0..ev.len() {
            let (s0, t0, i0, p0) = &ev[k];
            let wrap = k + 1 == ev.len();
            let (s1, t1, i1, p1) = &ev[(k + 1) % ev.len()];
            // path from event k to event k+1 along the polyline
            let mut path = vec![inters[*i0].pt.clone()];
            let direct = !wrap && s0 == s1;
            if direct {
                debug_assert!(t1 > t0);
            } else {
                // append vertices (s0+1), ..., s1 cyclically; vertex v is the
                // start of segment v
                let n = poly.len();
                let mut v = (s0 + 1) % n;
                loop {
                    path.push(poly.pts[v].clone());
                    if v == *s1 {
                        break;
                    }
                    v = (v + 1) % n;
                }
            }
            let _ = t0;
            path.push(inters[*i1].pt.clone());
            let id = arcs.len();
            arcs.push(Arc {
                id,
                tail: (0, 0), // fixed after port assembly
                head: (0, 0),
                comp: ci,
                basepoints: Vec::new(),
                path: dedup_path(path),
            });
            out_arc.insert((*i0, *p0), id);
            in_arc.insert((*i1, *p1), id);
            comp_arcs.push(id);
        }
        components.push(comp_arcs);
    }

    // 6. Assemble crossings with port attachments.
    let mut crossings: Vec<Crossing> = Vec::new();
    for (i, proto) in protos.iter().enumerate() {
        if proto.rays.len() != 4 {
            return Err(DiagramError::Degenerate("port count".into()));
        }
        let mk = |k: usize| -> Result<PortAttach, DiagramError> {
            let (pass, outgoing, dir) = &proto.rays[k];
            let arc = if *outgoing {
                *out_arc
                    .get(&(i, *pass))
                    .ok_or_else(|| DiagramError::Degenerate("missing out arc".into()))?
            } else {
                *in_arc
                    .get(&(i, *pass))
                    .ok_or_else(|| DiagramError::Degenerate("missing in arc".into()))?
            };
            Ok(PortAttach {
                arc,
                end: if *outgoing { ArcEnd::Tail } else { ArcEnd::Head },
                dir: dir.clone(),
            })
        };
        let ports = [mk(0)?, mk(1)?, mk(2)?, mk(3)?];
        // strands occupy opposite ports; determine the over parity
        let over_parity = proto
            .rays
            .iter()
            .position(|(p, _, _)| *p == proto.over_pass)
            .unwrap() as u8
            % 2;
        // sanity: rays of one pass must sit at opposite ports
        for p in 0..4usize {
            let (pa, _, _) = proto.rays[p];
            let (pb, _, _) = proto.rays[(p + 2) % 4];
            if pa != pb {
                return Err(DiagramError::Degenerate(format!(
                    "ports of {} do not alternate between the two strands",
                    proto.id
                )));
            }
        }
        crossings.push(Crossing {
            id: proto.id.clone(),
            grading: proto.grading,
            pos: proto.pos.clone(),
            ports,
            over_parity,
        });
    }

    // fix arc endpoints (crossing, port)
    for (i, c) in crossings.iter().enumerate() {
        for (pi, pa) in c.ports.iter().enumerate() {
            match pa.end {
                ArcEnd::Tail => arcs[pa.arc].tail = (i, pi as u8),
                ArcEnd::Head => arcs[pa.arc].head = (i, pi as u8),
            }
        }
    }

    // 7. Basepoints located on arcs.
    let mut basepoints: Vec<BasePoint> = Vec::new();
    let mut arc_bp_keys: BTreeMap<usize, Vec<(usize, Q, usize)>> = BTreeMap::new();
    for (bi, gb) in geometry.basepoints.iter().enumerate() {
        let mut found = None;
        'search: for arc in &arcs {
            for s in 0..arc.path.len() - 1 {
                if let Some(t) = on_segment(&arc.path[s], &arc.path[s + 1], &gb.at) {
                    found = Some((arc.id, s, t));
                    break 'search;
                }
            }
        }
        let (aid, s, t) = found.ok_or_else(|| {
            DiagramError::Degenerate(format!("basepoint {} not on any arc", gb.label))
        })?;
        basepoints.push(BasePoint {
            label: gb.label.clone(),
            sym: gb.sym.clone(),
            sign: gb.sign,
            exp: gb.exp,
            comp: arcs[aid].comp,
            arc: aid,
            at: gb.at.clone(),
        });
        arc_bp_keys.entry(aid).or_default().push((s, t, bi));
    }
    for (aid, mut keys) in arc_bp_keys {
        keys.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        arcs[aid].basepoints = keys.into_iter().map(|(_, _, b)| b).collect();
    }

    // 8. Trace face cycles: entering a crossing at port p, the face on the left
    // continues out of port p-1, turning through quadrant p-1.
    let mut cycle_of_halfedge: BTreeMap<(usize, bool), usize> = BTreeMap::new();
    let mut cycles: Vec<FaceCycle> = Vec::new();
    for a0 in 0..arcs.len() {
        for fwd0 in [true, false] {
            if cycle_of_halfedge.contains_key(&(a0, fwd0)) {
                continue;
            }
            let mut halfedges = Vec::new();
            let mut corners = Vec::new();
            let (mut a, mut fwd) = (a0, fwd0);
            loop {
                cycle_of_halfedge.insert((a, fwd), cycles.len());
                halfedges.push((a, fwd));
                let (cx, port) = if fwd { arcs[a].head } else { arcs[a].tail };
                let exit = (port + 3) % 4;
                corners.push((cx, exit));
                let pa = &crossings[cx].ports[exit as usize];
                let next = (pa.arc, pa.end == ArcEnd::Tail);
                if next == (a0, fwd0) {
                    break;
                }
                (a, fwd) = next;
            }
            // geometric path of the cycle
            let mut path: Vec<Pt> = Vec::new();
            for (a, fwd) in &halfedges {
                let p = &arcs[*a].path;
                if *fwd {
                    path.extend(p[..p.len() - 1].iter().cloned());
                } else {
                    path.extend(p[1..].iter().rev().cloned());
                }
            }
            let area2 = signed_area2(&path);
            if area2.is_zero() {
                return Err(DiagramError::Degenerate("zero-area face cycle".into()));
            }
            cycles.push(FaceCycle {
                halfedges,
                corners,
                area2,
                face: usize::MAX,
            });
        }
    }

    // 9. Group cycles into faces via containment of probe points.
    let probes: Vec<Pt> = cycles
        .iter()
        .map(|c| probe_point(c, &arcs, comps))
        .collect::<Result<_, _>>()?;
    let n = cycles.len();
    let mut contains = vec![vec![false; n]; n];
    for i in 0..n {
        let path = cycle_path(&cycles[i], &arcs);
        for (j, probe) in probes.iter().enumerate() {
            if i != j {
                contains[i][j] = winding_number(&path, probe) != 0;
            }
        }
    }
    let mut face_of_cycle: Vec<Option<usize>> = vec![None; n];
    let mut faces: Vec<Face> = Vec::new();
    // positive cycles found their own faces
    for i in 0..n {
        if cycles[i].area2.is_positive() {
            face_of_cycle[i] = Some(faces.len());
            faces.push(Face {
                id: faces.len(),
                cycles: vec![i],
                bounded: true,
                area2: cycles[i].area2.clone(),
            });
        }
    }
    // negative cycles attach to the minimal containing positive cycle, or to the
    // outer face when there is none
    let mut outer_cycles: Vec<usize> = Vec::new();
    for i in 0..n {
        if cycles[i].area2.is_positive() {
            continue;
        }
        let mut parent: Option<usize> = None;
        for p in 0..n {
            if !cycles[p].area2.is_positive() || !contains[p][i] {
                continue;
            }
            parent = Some(match parent {
                None => p,
                Some(q0) => {
                    if contains[q0][p] {
                        p
                    } else {
                        q0
                    }
                }
            });
        }
        match parent {
            Some(p) => {
                let f = face_of_cycle[p].unwrap();
                face_of_cycle[i] = Some(f);
                faces[f].cycles.push(i);
                faces[f].area2 = &faces[f].area2 + &cycles[i].area2;
            }
            None => outer_cycles.push(i),
        }
    }
    let outer_face = faces.len();
    faces.push(Face {
        id: outer_face,
        cycles: outer_cycles.clone(),
        bounded: false,
        area2: Q::zero(),
    });
    for i in outer_cycles {
        face_of_cycle[i] = Some(outer_face);
    }
    for (i, c) in cycles.iter_mut().enumerate() {
        c.face = face_of_cycle[i].unwrap();
    }

    // left faces per half-edge
    let mut left_face = vec![[usize::MAX; 2]; arcs.len()];
    for (ci, c) in cycles.iter().enumerate() {
        for (a, fwd) in &c.halfedges {
            left_face[*a][*fwd as usize] = cycles[ci].face;
        }
    }

    // 10. Per-arc effective turning: solve the per-cycle equations
    //     sum(sign * T_arc) + corners/4 = +-1.
    let turning = solve_turning(&cycles, arcs.len())?;

    Ok(Diagram {
        name,
        crossings,
        arcs,
        components,
        basepoints,
        faces,
        cycles,
        outer_face,
        turning,
        left_face,
        geometry: comps.clone(),
        orient_convention,
        spin,
    })
}

fn dedup_path(path: Vec<Pt>) -> Vec<Pt> {
    let mut out: Vec<Pt> = Vec::with_capacity(path.len());
    for p in path {
        if out.last() != Some(&p) {
            out.push(p);
        }
    }
    out
}

fn dist2(a: &Pt, b: &Pt) -> Q {
    let d = a.sub(b);
    norm2(&d)
}

fn norm2(d: &Pt) -> Q {
    &(&d.x * &d.x) + &(&d.y * &d.y)
}

/// Parameter of `p` on segment `a b` when it lies strictly inside, else `None`.
fn on_segment(a: &Pt, b: &Pt, p: &Pt) -> Option<Q> {
    let ab = b.sub(a);
    let ap = p.sub(a);
    if !cross(&ab, &ap).is_zero() {
        return None;
    }
    let n2 = norm2(&ab);
    if n2.is_zero() {
        return None;
    }
    let t = &(&(&ab.x * &ap.x) + &(&ab.y * &ap.y)) / &n2;
    if t > Q::zero() && t < crate::geom::qi(1) {
        Some(t)
    } else {
        None
    }
}

fn cycle_path(c: &FaceCycle, arcs: &[Arc]) -> Vec<Pt> {
    let mut path: Vec<Pt> = Vec::new();
    for (a, fwd) in &c.halfedges {
        let p = &arcs[*a].path;
        if *fwd {
            path.extend(p[..p.len() - 1].iter().cloned());
        } else {
            path.extend(p[1..].iter().rev().cloned());
        }
    }
    path
}

/// A point strictly inside the face traced by the cycle: offset left from the
/// midpoint of the first arc piece, scaled below the exact clearance.
fn probe_point(
    c: &FaceCycle,
    arcs: &[Arc],
    comps: &[ClosedPolyline],
) -> Result<Pt, DiagramError> {
    let (a0, fwd) = c.halfedges[0];
    let path = &arcs[a0].path;
    // midpoint of the longest piece of this arc for robustness
    let mut best = 0usize;
    let mut best_len = Q::zero();
    for s in 0..path.len() - 1 {
        let l = dist2(&path[s], &path[s + 1]);
        if l > best_len {
            best_len = l;
            best = s;
        }
    }
    let (p1, p2) = (&path[best], &path[best + 1]);
    let mid = p1.lerp(p2, &q(1, 2));
    let d = p2.sub(p1);
    let d = if fwd { d } else { Pt::new(-d.x, -d.y) };
    // left normal
    let nrm = Pt::new(-d.y.clone(), d.x.clone());
    // clearance^2: min distance^2 from mid to all segments not containing mid
    let mut clear2: Option<Q> = None;
    for poly in comps {
        for s in 0..poly.len() {
            let (a, b) = poly.seg(s);
            let d2 = point_segment_dist2(&mid, a, b);
            if d2.is_zero() {
                continue; // the segment through mid itself
            }
            if clear2.as_ref().map(|c2| &d2 < c2).unwrap_or(true) {
                clear2 = Some(d2);
            }
        }
    }
    let clear2 = clear2.unwrap_or_else(|| crate::geom::qi(1));
    // choose eps with |nrm|^2 eps^2 < clear2 / 4
    let n2 = norm2(&nrm);
    let mut eps = q(1, 4);
    while &(&(&eps * &eps) * &n2) * &crate::geom::qi(4) >= clear2 {
        eps = &eps / &crate::geom::qi(2);
        if eps < q(1, 1_000_000_000) {
            return Err(DiagramError::Degenerate(
                "cannot find probe clearance; geometry too tight".into(),
            ));
        }
    }
    Ok(Pt::new(&mid.x + &(&nrm.x * &eps), &mid.y + &(&nrm.y * &eps)))
}

fn point_segment_dist2(p: &Pt, a: &Pt, b: &Pt) -> Q {
    let ab = b.sub(a);
    let n2 = norm2(&ab);
    if n2.is_zero() {
        return dist2(p, a);
    }
    let ap = p.sub(a);
    let t = &(&(&ab.x * &ap.x) + &(&ab.y * &ap.y)) / &n2;
    let t = if t < Q::zero() {
        Q::zero()
    } else if t > crate::geom::qi(1) {
        crate::geom::qi(1)
    } else {
        t
    };
    let proj = a.lerp(b, &t);
    dist2(p, &proj)
}

/// Exact winding number of a closed polygonal path around a point off the path.
pub fn winding_number(path: &[Pt], p: &Pt) -> i64 {
    let mut w = 0i64;
    for i in 0..path.len() {
        let a = &path[i];
        let b = &path[(i + 1) % path.len()];
        // horizontal ray to the right of p; half-open rule in y
        let (ay, by) = (&a.y, &b.y);
        if ay <= &p.y && by > &p.y {
            // upward crossing: left test
            if cross(&b.sub(a), &p.sub(a)).is_negative() {
                w += 1;
            }
        } else if ay > &p.y && by <= &p.y {
            if cross(&b.sub(a), &p.sub(a)).is_positive() {
                w -= 1;
            }
        }
    }
    w
}

fn validate_geometry(comps: &[ClosedPolyline]) -> Result<(), DiagramError> {
    for (ci, poly) in comps.iter().enumerate() {
        if poly.len() < 3 {
            return Err(DiagramError::Degenerate(format!(
                "component {} has fewer than 3 vertices",
                ci + 1
            )));
        }
        for i in 0..poly.len() {
            let (a, b) = poly.seg(i);
            if a == b {
                return Err(DiagramError::Degenerate("zero-length segment".into()));
            }
        }
    }
    // no polyline vertex may lie on any other segment's interior, and no two
    // segments may overlap collinearly
    for (ci, poly) in comps.iter().enumerate() {
        for v in &poly.pts {
            for (cj, other) in comps.iter().enumerate() {
                for s in 0..other.len() {
                    let (a, b) = other.seg(s);
                    if (ci == cj) && (a == v || b == v) {
                        continue;
                    }
                    if on_segment(a, b, v).is_some() {
                        return Err(DiagramError::Degenerate(format!(
                            "vertex {v:?} of component {} lies on a segment of component {}",
                            ci + 1,
                            cj + 1
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Solve the per-cycle turning equations over Q by Gaussian elimination,
/// returning any particular solution for the per-arc turnings (in full turns).
fn solve_turning(cycles: &[FaceCycle], num_arcs: usize) -> Result<Vec<Q>, DiagramError> {
    let rows = cycles.len();
    let cols = num_arcs;
    let mut m: Vec<Vec<Q>> = vec![vec![Q::zero(); cols + 1]; rows];
    for (r, c) in cycles.iter().enumerate() {
        for (a, fwd) in &c.halfedges {
            let s = if *fwd { 1 } else { -1 };
            m[r][*a] = &m[r][*a] + &crate::geom::qi(s);
        }
        let target = if c.area2.is_positive() { 1 } else { -1 };
        // sum(T) = target - corners/4
        m[r][cols] = &crate::geom::qi(target) - &(q(c.corners.len() as i64, 4));
    }
    // Gaussian elimination
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; rows];
    let mut r0 = 0usize;
    for col in 0..cols {
        let piv = (r0..rows).find(|&r| !m[r][col].is_zero());
        let Some(piv) = piv else { continue };
        m.swap(r0, piv);
        let p = m[r0][col].clone();
        for x in m[r0].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..rows {
            if r != r0 && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for cc in 0..=cols {
                    let sub = &f * &m[r0][cc];
                    m[r][cc] = &m[r][cc] - &sub;
                }
            }
        }
        pivot_of_row[r0] = Some(col);
        r0 += 1;
        if r0 == rows {
            break;
        }
    }
    for r in r0..rows {
        if !m[r][cols].is_zero() {
            return Err(DiagramError::Degenerate(
                "inconsistent turning system (embedding data corrupt)".into(),
            ));
        }
    }
    let mut t = vec![Q::zero(); cols];
    for r in 0..r0 {
        if let Some(col) = pivot_of_row[r] {
            t[col] = m[r][cols].clone();
        }
    }
    Ok(t)
}
