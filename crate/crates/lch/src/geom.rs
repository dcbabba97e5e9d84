//! Exact rational plane geometry for diagram compilation.
//!
//! Closed polylines describe link components; crossings are transversal segment
//! intersections. Everything is computed over `BigRational` so diagram surgery can
//! be repeated without drift.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from(BigInt::from(n))
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pt {
    pub x: Q,
    pub y: Q,
}

impl Pt {
    pub fn new(x: Q, y: Q) -> Self {
        Pt { x, y }
    }

    pub fn of(x: f64, y: f64) -> Self {
        // exact: f64 grid coordinates in tenths only are used by constructors
        Pt {
            x: Q::new(BigInt::from((x * 1000.0).round() as i64), BigInt::from(1000)),
            y: Q::new(BigInt::from((y * 1000.0).round() as i64), BigInt::from(1000)),
        }
    }

    pub fn sub(&self, o: &Pt) -> Pt {
        Pt::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn lerp(&self, o: &Pt, t: &Q) -> Pt {
        Pt::new(&self.x + &(t * &(&o.x - &self.x)), &self.y + &(t * &(&o.y - &self.y)))
    }
}

impl fmt::Debug for Pt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

pub fn cross(a: &Pt, b: &Pt) -> Q {
    &(&a.x * &b.y) - &(&a.y * &b.x)
}

/// Proper interior intersection of open segments `p1p2` and `p3p4`.
/// Returns `(t, u, point)` with `t, u` strictly inside `(0, 1)`.
pub fn segment_intersection(p1: &Pt, p2: &Pt, p3: &Pt, p4: &Pt) -> Option<(Q, Q, Pt)> {
    let r = p2.sub(p1);
    let s = p4.sub(p3);
    let denom = cross(&r, &s);
    if denom.is_zero() {
        return None; // parallel or collinear: constructors must avoid overlaps
    }
    let qp = p3.sub(p1);
    let t = &cross(&qp, &s) / &denom;
    let u = &cross(&qp, &r) / &denom;
    let zero = Q::zero();
    let one = qi(1);
    if t > zero && t < one && u > zero && u < one {
        let pt = p1.lerp(p2, &t);
        Some((t, u, pt))
    } else {
        None
    }
}

/// A closed polyline with vertices in traversal order (orientation = vertex order).
#[derive(Clone, Debug)]
pub struct ClosedPolyline {
    pub pts: Vec<Pt>,
}

impl ClosedPolyline {
    pub fn new(pts: Vec<Pt>) -> Self {
        ClosedPolyline { pts }
    }

    pub fn len(&self) -> usize {
        self.pts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pts.is_empty()
    }

    pub fn seg(&self, i: usize) -> (&Pt, &Pt) {
        (&self.pts[i], &self.pts[(i + 1) % self.pts.len()])
    }

    /// Twice the signed area (shoelace); positive for counterclockwise.
    pub fn signed_area2(&self) -> Q {
        let mut a = Q::zero();
        for i in 0..self.pts.len() {
            let (p, r) = self.seg(i);
            a += cross(p, r);
        }
        a
    }
}

/// Positions along a closed polyline: `(segment index, parameter in [0,1))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PathPos {
    pub seg: usize,
    pub t: Q,
}

/// Twice the signed area of an arbitrary closed vertex cycle.
pub fn signed_area2(pts: &[Pt]) -> Q {
    let mut a = Q::zero();
    for i in 0..pts.len() {
        let p = &pts[i];
        let r = &pts[(i + 1) % pts.len()];
        a += cross(p, r);
    }
    a
}

/// Direction angle class for sorting rays around a vertex: exact comparison by
/// quadrant and slope, counterclockwise from the positive x-axis.
pub fn angle_cmp(a: &Pt, b: &Pt) -> std::cmp::Ordering {
    fn half(v: &Pt) -> u8 {
        // 0 for angle in [0, pi), 1 for [pi, 2pi)
        if v.y.is_positive() || (v.y.is_zero() && v.x.is_positive()) {
            0
        } else {
            1
        }
    }
    let (ha, hb) = (half(a), half(b));
    if ha != hb {
        return ha.cmp(&hb);
    }
    // same half-plane: compare by cross product
    let c = cross(a, b);
    if c.is_positive() {
        std::cmp::Ordering::Less
    } else if c.is_negative() {
        std::cmp::Ordering::Greater
    } else {
        std::cmp::Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intersection_basics() {
        let a = Pt::of(0.0, 0.0);
        let b = Pt::of(2.0, 2.0);
        let c = Pt::of(0.0, 2.0);
        let d = Pt::of(2.0, 0.0);
        let (t, u, p) = segment_intersection(&a, &b, &c, &d).unwrap();
        assert_eq!(p, Pt::of(1.0, 1.0));
        assert_eq!(t, q(1, 2));
        assert_eq!(u, q(1, 2));
        assert!(segment_intersection(&a, &c, &b, &d).is_none());
    }

    #[test]
    fn shoelace_orientation() {
        let sq = ClosedPolyline::new(vec![
            Pt::of(0.0, 0.0),
            Pt::of(1.0, 0.0),
            Pt::of(1.0, 1.0),
            Pt::of(0.0, 1.0),
        ]);
        assert!(sq.signed_area2().is_positive());
    }

    #[test]
    fn angle_order_ccw() {
        let e = Pt::of(1.0, 0.0);
        let n = Pt::of(0.0, 1.0);
        let w = Pt::of(-1.0, 0.0);
        let s = Pt::of(0.0, -1.0);
        let mut v = vec![w.clone(), s.clone(), e.clone(), n.clone()];
        v.sort_by(|a, b| angle_cmp(a, b));
        assert_eq!(v, vec![e, n, w, s]);
    }
}
