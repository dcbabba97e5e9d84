//! Enumeration of admissible immersed disks in a diagram.
//!
//! A disk is represented by its counterclockwise boundary itinerary from the
//! positive corner: arc traversals, convex corner turns, and (for pinch disk
//! sets) smoothed passes through the surgered chord. A closed itinerary is
//! accepted when its winding function on faces is nonnegative and its total
//! turning is one full turn. Enumeration restarts with a raised face-multiplicity
//! bound until two consecutive bounds agree.

use crate::coeff::{Laurent, Monomial};
use crate::diagram::{ArcEnd, Diagram, DiagramError};
use crate::geom::{q, Q};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

/// One step of a boundary itinerary.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Step {
    /// Traverse an arc (`forward` = along its orientation).
    Arc { arc: usize, forward: bool },
    /// Convex corner at `(crossing, quadrant)`.
    Corner { cross: usize, quadrant: u8 },
    /// Straight pass through a crossing.
    Straight { cross: usize },
    /// Smoothed pass through the pinch site (pinch enumeration only).
    Smooth { cross: usize, enter_port: u8 },
}

/// A boundary letter contributing to the disk word, in boundary order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Letter {
    Chord(String),
    /// Basepoint contribution `sign * sym^exp` as encountered.
    Basepoint { sym: String, sign: i8, exp: i64 },
}

#[derive(Clone, Debug)]
pub struct Disk {
    /// Positive corner `(crossing, quadrant)` the itinerary is rooted at.
    pub root: (usize, u8),
    pub steps: Vec<Step>,
    pub letters: Vec<Letter>,
    /// Position in `letters` of the second positive corner (pinch mode):
    /// letters before it form `w1`, letters after form `w2`.
    pub split: Option<usize>,
    /// Quadrant of the second positive corner at the pinch site.
    pub site_quadrant: Option<u8>,
    /// Product of orientation signs at every corner.
    pub corner_sign: i8,
    /// Orientation sign of the site corner alone (pinch mode).
    pub site_orient_sign: i8,
    pub windings: BTreeMap<usize, i64>,
}

impl Disk {
    /// Word and coefficient of the disk: the chord word in boundary order and
    /// the Laurent unit collecting basepoint contributions and corner signs.
    pub fn word_and_coeff(&self) -> (Vec<String>, Laurent) {
        let mut word = Vec::new();
        let mut mono = Monomial::one();
        let mut sign = self.corner_sign;
        for l in &self.letters {
            match l {
                Letter::Chord(c) => word.push(c.clone()),
                Letter::Basepoint { sym, sign: s, exp } => {
                    sign *= s;
                    mono = &mono * &Monomial::var_pow(sym, *exp);
                }
            }
        }
        (word, Laurent::from_monomial(mono, BigInt::from(sign)))
    }

    /// Canonical itinerary encoding used for ordering and stabilization checks.
    pub fn key(&self) -> String {
        format!("{:?}|{:?}", self.root, self.steps)
    }
}

#[derive(Clone, Debug)]
pub enum Mode {
    /// Disks of the differential: the root is the unique positive corner.
    Differential,
    /// Disks with exactly two positive corners, at the root chord and at
    /// `site`; the boundary may pass the site along its oriented smoothing,
    /// reading the pinch basepoints.
    TwoPositive {
        site: usize,
        sym: String,
        swap_signs: bool,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum DiskError {
    #[error("disk enumeration did not stabilize by multiplicity bound {0}")]
    Unstable(i64),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

struct Walker<'a> {
    d: &'a Diagram,
    mode: Mode,
    root: (usize, u8),
    cap: i64,
    max_steps: usize,
    /// Half-edges from which the closing port of the root is still reachable.
    can_close: Vec<[bool; 2]>,
    budget: u64,
    // mutable walk state
    steps: Vec<Step>,
    letters: Vec<Letter>,
    traversals: BTreeMap<(usize, bool), i64>,
    corner_sign: i8,
    split: Option<usize>,
    site_quadrant: Option<u8>,
    site_orient_sign: i8,
    out: Vec<Disk>,
}

/// Successor half-edges of a half-edge under the walk moves.
fn successors(d: &Diagram, mode: &Mode, he: (usize, bool)) -> Vec<(usize, bool)> {
    let arc = &d.arcs[he.0];
    let (cx, port) = if he.1 { arc.head } else { arc.tail };
    let c = &d.crossings[cx];
    let site = match mode {
        Mode::TwoPositive { site, .. } => Some(*site),
        Mode::Differential => None,
    };
    let mut out = Vec::new();
    if Some(cx) != site {
        let pa = &c.ports[((port + 2) % 4) as usize];
        out.push((pa.arc, pa.end == ArcEnd::Tail));
        let qd = (port + 3) % 4;
        if c.reeb_sign(qd) < 0 {
            let pa = &c.ports[qd as usize];
            out.push((pa.arc, pa.end == ArcEnd::Tail));
        }
    } else {
        let pa = &c.ports[((port + 2) % 4) as usize];
        out.push((pa.arc, pa.end == ArcEnd::Tail));
        let qd = (port + 3) % 4;
        if c.reeb_sign(qd) > 0 {
            let pa = &c.ports[qd as usize];
            out.push((pa.arc, pa.end == ArcEnd::Tail));
        }
        let my_end = c.ports[port as usize].end;
        if let Some(exit) =
            (0..4u8).find(|&p| p % 2 != port % 2 && c.ports[p as usize].end != my_end)
        {
            let pa = &c.ports[exit as usize];
            out.push((pa.arc, pa.end == ArcEnd::Tail));
        }
    }
    out
}

/// Half-edges from which some closing half-edge (arriving at the root's
/// closing port) is reachable under the walk moves.
fn closing_reach(d: &Diagram, mode: &Mode, root: (usize, u8)) -> Vec<[bool; 2]> {
    let (rc, rq) = root;
    let close_port = (rq + 1) % 4;
    // closing half-edges arrive at (rc, close_port)
    let closing = |he: (usize, bool)| -> bool {
        let arc = &d.arcs[he.0];
        let (cx, port) = if he.1 { arc.head } else { arc.tail };
        cx == rc && port == close_port
    };
    let mut reach = vec![[false; 2]; d.arcs.len()];
    let mut queue: Vec<(usize, bool)> = Vec::new();
    for a in 0..d.arcs.len() {
        for fwd in [false, true] {
            if closing((a, fwd)) {
                reach[a][fwd as usize] = true;
                queue.push((a, fwd));
            }
        }
    }
    // reverse-BFS over the successor relation
    let mut preds: BTreeMap<(usize, bool), Vec<(usize, bool)>> = BTreeMap::new();
    for a in 0..d.arcs.len() {
        for fwd in [false, true] {
            for nxt in successors(d, mode, (a, fwd)) {
                preds.entry(nxt).or_default().push((a, fwd));
            }
        }
    }
    while let Some(h) = queue.pop() {
        if let Some(ps) = preds.get(&h) {
            for &p in ps {
                if !reach[p.0][p.1 as usize] {
                    reach[p.0][p.1 as usize] = true;
                    queue.push(p);
                }
            }
        }
    }
    reach
}

impl<'a> Walker<'a> {
    fn run(mut self) -> Vec<Disk> {
        let (cx, qd) = self.root;
        let c = &self.d.crossings[cx];
        debug_assert_eq!(c.reeb_sign(qd), 1);
        // exit along port qd (the over ray of the positive quadrant)
        let pa = &c.ports[qd as usize];
        let start = (pa.arc, pa.end == ArcEnd::Tail);
        self.walk(start);
        self.out.sort_by(|a, b| a.key().cmp(&b.key()));
        self.out
    }

    fn walk(&mut self, he: (usize, bool)) {
        if self.steps.len() >= self.max_steps {
            return;
        }
        if !self.can_close[he.0][he.1 as usize] && std::env::var("LCH_NO_REACH_PRUNE").is_err() {
            return;
        }
        self.budget = self.budget.saturating_sub(1);
        if self.budget == 0 {
            if std::env::var("LCH_TRACE_DISKS").is_ok() {
                eprintln!("disk walker budget exhausted at {:?} steps={}", self.root, self.steps.len());
            }
            return;
        }
        let count = self.traversals.entry(he).or_insert(0);
        if *count >= self.cap {
            return;
        }
        *count += 1;
        self.steps.push(Step::Arc { arc: he.0, forward: he.1 });
        let letters_before = self.letters.len();
        // basepoints along the arc
        let arc = &self.d.arcs[he.0];
        let bps: Vec<usize> = if he.1 {
            arc.basepoints.clone()
        } else {
            arc.basepoints.iter().rev().cloned().collect()
        };
        for b in bps {
            let bp = &self.d.basepoints[b];
            let (sign, exp) = bp.contribution(he.1);
            self.letters.push(Letter::Basepoint {
                sym: bp.sym.clone(),
                sign,
                exp,
            });
        }

        let (cx, port) = if he.1 { arc.head } else { arc.tail };
        self.arrive(cx, port);

        // undo
        self.letters.truncate(letters_before);
        self.steps.pop();
        *self.traversals.get_mut(&he).unwrap() -= 1;
    }

    fn arrive(&mut self, cx: usize, port: u8) {
        let c = &self.d.crossings[cx];
        let (root_cx, root_q) = self.root;
        let site = match &self.mode {
            Mode::TwoPositive { site, .. } => Some(*site),
            Mode::Differential => None,
        };

        // close the itinerary at the root
        if cx == root_cx && port == (root_q + 1) % 4 {
            let need_split = matches!(self.mode, Mode::TwoPositive { .. });
            if !need_split || self.split.is_some() {
                self.emit();
            }
        }

        if Some(cx) != site {
            // straight pass
            let exit = (port + 2) % 4;
            self.steps.push(Step::Straight { cross: cx });
            let pa = &c.ports[exit as usize];
            self.walk((pa.arc, pa.end == ArcEnd::Tail));
            self.steps.pop();

            // convex corner through quadrant port-1
            let qd = (port + 3) % 4;
            if c.reeb_sign(qd) < 0 {
                let exit = (port + 3) % 4;
                self.steps.push(Step::Corner { cross: cx, quadrant: qd });
                self.letters.push(Letter::Chord(c.id.clone()));
                let old_sign = self.corner_sign;
                self.corner_sign *= c.orientation_sign(qd, self.d.orient_convention);
                let pa = &c.ports[exit as usize];
                self.walk((pa.arc, pa.end == ArcEnd::Tail));
                self.corner_sign = old_sign;
                self.letters.pop();
                self.steps.pop();
            }
        } else {
            // at the pinch site three moves model the saddle: a straight pass
            // (the crossing still present), a smoothed pass along the surgered
            // arcs reading the new basepoints, and the one designated positive
            // corner; negative corners are excluded at a proper site
            let exit = (port + 2) % 4;
            self.steps.push(Step::Straight { cross: cx });
            let pa = &c.ports[exit as usize];
            self.walk((pa.arc, pa.end == ArcEnd::Tail));
            self.steps.pop();
            if let Mode::TwoPositive { sym, swap_signs, .. } = &self.mode {
                let my_end = c.ports[port as usize].end;
                let exit = (0..4u8)
                    .find(|&p| p % 2 != port % 2 && c.ports[p as usize].end != my_end)
                    .expect("smoothing partner exists");
                let pair_head_port = if c.ports[port as usize].end == ArcEnd::Head {
                    port
                } else {
                    exit
                };
                let on_primary = c.port_is_over(pair_head_port) != *swap_signs;
                let (sign, exp_base) = if on_primary { (1, 1) } else { (-1, -1) };
                let along = c.ports[port as usize].end == ArcEnd::Head;
                let exp = if along { exp_base } else { -exp_base };
                self.steps.push(Step::Smooth { cross: cx, enter_port: port });
                self.letters.push(Letter::Basepoint {
                    sym: sym.clone(),
                    sign,
                    exp,
                });
                let pa = &c.ports[exit as usize];
                self.walk((pa.arc, pa.end == ArcEnd::Tail));
                self.letters.pop();
                self.steps.pop();
            }
            let qd = (port + 3) % 4;
            if c.reeb_sign(qd) > 0 && self.split.is_none() {
                let exit = (port + 3) % 4;
                self.steps.push(Step::Corner { cross: cx, quadrant: qd });
                self.split = Some(self.letters.len());
                self.site_quadrant = Some(qd);
                let old_sign = self.corner_sign;
                let site_sign = c.orientation_sign(qd, self.d.orient_convention);
                self.corner_sign *= site_sign;
                self.site_orient_sign = site_sign;
                let pa = &c.ports[exit as usize];
                self.walk((pa.arc, pa.end == ArcEnd::Tail));
                self.site_orient_sign = 1;
                self.corner_sign = old_sign;
                self.site_quadrant = None;
                self.split = None;
                self.steps.pop();
            }
        }
    }

    fn emit(&mut self) {
        let debug = std::env::var("LCH_DISK_DEBUG_EMIT").is_ok();
        if debug {
            eprintln!("candidate close: {:?}", self.steps);
        }
        // winding numbers via face adjacency from the outer face
        let Some(w) = windings(self.d, &self.steps_net()) else {
            if debug {
                eprintln!("  rejected: inconsistent winding");
            }
            return;
        };
        if w.values().any(|&x| x < 0) || w.values().any(|&x| x > self.cap) {
            if debug {
                eprintln!("  rejected: winding range {w:?}");
            }
            return;
        }
        // the disk interior sits immediately left of every boundary traversal
        for s in &self.steps {
            if let Step::Arc { arc, forward } = s {
                let lf = self.d.left_face[*arc][*forward as usize];
                if w.get(&lf).copied().unwrap_or(0) < 1 {
                    if debug {
                        eprintln!("  rejected: slit at arc {arc}");
                    }
                    return;
                }
            }
        }
        // total turning must be one full turn
        let mut turn = Q::zero();
        for s in &self.steps {
            match s {
                Step::Arc { arc, forward } => {
                    let t = &self.d.turning[*arc];
                    turn = if *forward { &turn + t } else { &turn - t };
                }
                Step::Corner { .. } => turn = &turn + &q(1, 4),
                Step::Straight { .. } => {}
                Step::Smooth { cross, enter_port } => {
                    let c = &self.d.crossings[*cross];
                    let my_end = c.ports[*enter_port as usize].end;
                    let exit = (0..4u8)
                        .find(|&p| p % 2 != enter_port % 2 && c.ports[p as usize].end != my_end)
                        .unwrap();
                    if exit == (enter_port + 3) % 4 {
                        turn = &turn + &q(1, 4);
                    } else {
                        turn = &turn - &q(1, 4);
                    }
                }
            }
        }
        // the closing corner at the root
        turn = &turn + &q(1, 4);
        if turn != crate::geom::qi(1) {
            if debug {
                eprintln!("  rejected: turning {turn}");
            }
            return;
        }
        if debug {
            eprintln!("  ACCEPTED");
        }
        let root_sign = {
            let (cx, qd) = self.root;
            self.d.crossings[cx].orientation_sign(qd, self.d.orient_convention)
        };
        self.out.push(Disk {
            root: self.root,
            steps: self.steps.clone(),
            letters: self.letters.clone(),
            split: self.split,
            site_quadrant: self.site_quadrant,
            corner_sign: self.corner_sign * root_sign,
            site_orient_sign: self.site_orient_sign,
            windings: w.into_iter().filter(|(_, v)| *v != 0).collect(),
        });
    }

    fn steps_net(&self) -> BTreeMap<usize, i64> {
        let mut net: BTreeMap<usize, i64> = BTreeMap::new();
        for s in &self.steps {
            if let Step::Arc { arc, forward } = s {
                *net.entry(*arc).or_insert(0) += if *forward { 1 } else { -1 };
            }
        }
        net
    }
}

/// Winding per face of a closed boundary with net arc traversals `net`,
/// propagated from the outer face; `None` when inconsistent.
fn windings(d: &Diagram, net: &BTreeMap<usize, i64>) -> Option<BTreeMap<usize, i64>> {
    let nf = d.faces.len();
    let mut w: Vec<Option<i64>> = vec![None; nf];
    w[d.outer_face] = Some(0);
    let mut queue = vec![d.outer_face];
    while let Some(f) = queue.pop() {
        let wf = w[f].unwrap();
        for (arc_id, arc_net) in d
            .arcs
            .iter()
            .map(|a| (a.id, net.get(&a.id).copied().unwrap_or(0)))
        {
            let l = d.left_face[arc_id][1];
            let r = d.left_face[arc_id][0];
            // w(l) - w(r) = net
            if l == f {
                let expect = wf - arc_net;
                match w[r] {
                    None => {
                        w[r] = Some(expect);
                        queue.push(r);
                    }
                    Some(x) if x != expect => return None,
                    _ => {}
                }
            }
            if r == f {
                let expect = wf + arc_net;
                match w[l] {
                    None => {
                        w[l] = Some(expect);
                        queue.push(l);
                    }
                    Some(x) if x != expect => return None,
                    _ => {}
                }
            }
        }
    }
    if w.iter().any(|x| x.is_none()) {
        return None;
    }
    Some(w.into_iter().enumerate().map(|(i, x)| (i, x.unwrap())).collect())
}

fn run_walks(d: &Diagram, chord_index: usize, mode: &Mode, cap: i64) -> Vec<Disk> {
    let c = &d.crossings[chord_index];
    let mut out = Vec::new();
    for qd in 0..4u8 {
        if c.reeb_sign(qd) > 0 {
            let w = Walker {
                d,
                mode: mode.clone(),
                root: (chord_index, qd),
                cap,
                max_steps: (d.arcs.len() as i64 * 2 * cap + 16) as usize,
                can_close: closing_reach(d, mode, (chord_index, qd)),
                budget: std::env::var("LCH_DISK_BUDGET")
                    .ok()
                    .and_then(|v| v.parse().ok())
                    .unwrap_or(200_000_000),
                steps: Vec::new(),
                letters: Vec::new(),
                traversals: BTreeMap::new(),
                corner_sign: 1,
                split: None,
                site_quadrant: None,
                site_orient_sign: 1,
                out: Vec::new(),
            };
            out.extend(w.run());
        }
    }
    out
}

const MAX_MULTIPLICITY: i64 = 16;

/// All admissible disks with a single positive corner at `chord`, in a
/// deterministic order, stabilized over the face-multiplicity bound.
pub fn enumerate_disks(d: &Diagram, chord: &str) -> Result<Vec<Disk>, DiskError> {
    let idx = d
        .crossing_index(chord)
        .ok_or_else(|| DiagramError::UnknownChord(chord.to_string()))?;
    stabilized(d, idx, &Mode::Differential)
}

/// Disks with exactly two positive corners, at `chord` and at the pinch site.
pub fn pinch_disks(
    d: &Diagram,
    chord: &str,
    site: &str,
    sym: &str,
    swap_signs: bool,
) -> Result<Vec<Disk>, DiskError> {
    let idx = d
        .crossing_index(chord)
        .ok_or_else(|| DiagramError::UnknownChord(chord.to_string()))?;
    let site_idx = d
        .crossing_index(site)
        .ok_or_else(|| DiagramError::UnknownChord(site.to_string()))?;
    stabilized(
        d,
        idx,
        &Mode::TwoPositive {
            site: site_idx,
            sym: sym.to_string(),
            swap_signs,
        },
    )
}

/// Fixed-cap two-positive enumeration, exposed for calibration tooling.
pub fn pinch_disks_capped(
    d: &Diagram,
    chord: &str,
    site: &str,
    sym: &str,
    swap_signs: bool,
    cap: i64,
) -> Result<Vec<Disk>, DiskError> {
    let idx = d
        .crossing_index(chord)
        .ok_or_else(|| DiagramError::UnknownChord(chord.to_string()))?;
    let site_idx = d
        .crossing_index(site)
        .ok_or_else(|| DiagramError::UnknownChord(site.to_string()))?;
    Ok(run_walks(
        d,
        idx,
        &Mode::TwoPositive {
            site: site_idx,
            sym: sym.to_string(),
            swap_signs,
        },
        cap,
    ))
}

fn stabilized(d: &Diagram, idx: usize, mode: &Mode) -> Result<Vec<Disk>, DiskError> {
    let trace = std::env::var("LCH_TRACE_DISKS").is_ok();
    let mut prev = run_walks(d, idx, mode, 1);
    let mut m = 2;
    loop {
        if trace {
            eprintln!("stabilize {}: M={} prev={}", d.crossings[idx].id, m, prev.len());
        }
        let next = run_walks(d, idx, mode, m);
        let same = prev.len() == next.len()
            && prev.iter().zip(next.iter()).all(|(a, b)| a.key() == b.key());
        if same {
            return Ok(prev);
        }
        prev = next;
        m += 1;
        if m > MAX_MULTIPLICITY {
            return Err(DiskError::Unstable(MAX_MULTIPLICITY));
        }
    }
}

/// Conservative properness certificate for a pinch site: among disks with one
/// convex positive corner at another chord, one convex positive corner at the
/// site, and otherwise negative convex corners, no concave corner may occur
/// away from the site or with a negative Reeb jump there.
pub fn properness_obstruction(d: &Diagram, site: &str) -> Result<Option<String>, DiskError> {
    let site_idx = d
        .crossing_index(site)
        .ok_or_else(|| DiagramError::UnknownChord(site.to_string()))?;
    for root in 0..d.crossings.len() {
        if root == site_idx {
            continue;
        }
        if let Some(bad) = concave_search(d, root, site_idx)? {
            return Ok(Some(bad));
        }
    }
    Ok(None)
}

fn concave_search(d: &Diagram, root: usize, site: usize) -> Result<Option<String>, DiskError> {
    // Depth-first over itineraries that may turn concavely (a right turn
    // covering three quadrants); flags a closed itinerary that bounds a disk
    // of the shape quantified by the properness definition (a second convex
    // positive corner at the site) but whose concave corners violate it.
    struct S<'a> {
        d: &'a Diagram,
        root: (usize, u8),
        site: usize,
        cap: i64,
        count: BTreeMap<(usize, bool), i64>,
        net: BTreeMap<usize, i64>,
        turn: Q,
        depth: usize,
        site_corner_used: bool,
        concave: Vec<(usize, i8)>, // (crossing, reeb jump sign)
        found: Option<String>,
    }
    impl<'a> S<'a> {
        fn walk(&mut self, he: (usize, bool)) {
            if self.found.is_some() || self.depth > 48 {
                return;
            }
            let cnt = self.count.entry(he).or_insert(0);
            if *cnt >= self.cap {
                return;
            }
            *cnt += 1;
            self.depth += 1;
            *self.net.entry(he.0).or_insert(0) += if he.1 { 1 } else { -1 };
            let t = self.d.turning[he.0].clone();
            self.turn = if he.1 { &self.turn + &t } else { &self.turn - &t };

            let arc = &self.d.arcs[he.0];
            let (cx, port) = if he.1 { arc.head } else { arc.tail };
            self.arrive(cx, port);

            self.turn = if he.1 { &self.turn - &t } else { &self.turn + &t };
            *self.net.get_mut(&he.0).unwrap() -= if he.1 { 1 } else { -1 };
            self.depth -= 1;
            *self.count.get_mut(&he).unwrap() -= 1;
        }
        fn arrive(&mut self, cx: usize, port: u8) {
            if self.found.is_some() {
                return;
            }
            let c = &self.d.crossings[cx];
            let (rc, rq) = self.root;
            if cx == rc
                && port == (rq + 1) % 4
                && !self.concave.is_empty()
                && self.site_corner_used
            {
                let closing = &self.turn + &q(1, 4);
                if closing == crate::geom::qi(1) {
                    if let Some(w) = windings(self.d, &self.net) {
                        if w.values().all(|&x| x >= 0) {
                            for (ccx, jump) in &self.concave {
                                if *ccx == self.site && *jump < 0 {
                                    self.found = Some(format!(
                                        "itinerary with a negative concave corner at the pinch                                          chord {} rooted at {}",
                                        self.d.crossings[*ccx].id, self.d.crossings[rc].id
                                    ));
                                    return;
                                }
                            }
                        }
                    }
                }
            }
            // straight
            let exit = (port + 2) % 4;
            let pa = &c.ports[exit as usize];
            self.walk((pa.arc, pa.end == ArcEnd::Tail));
            // convex corner (left turn): negative Reeb sign away from the
            // site, the one designated positive corner at the site
            let qd = (port + 3) % 4;
            let convex_ok = if cx == self.site {
                c.reeb_sign(qd) > 0 && !self.site_corner_used
            } else {
                c.reeb_sign(qd) < 0
            };
            if convex_ok {
                let pa = &c.ports[qd as usize];
                if cx == self.site {
                    self.site_corner_used = true;
                }
                self.turn = &self.turn + &q(1, 4);
                self.walk((pa.arc, pa.end == ArcEnd::Tail));
                self.turn = &self.turn - &q(1, 4);
                if cx == self.site {
                    self.site_corner_used = false;
                }
            }
            // concave corner (right turn), labeled by the Reeb sign of the
            // quadrant it does not cover; only site concavities can obstruct
            if self.concave.len() < 2 && cx == self.site {
                let exit = (port + 1) % 4;
                let jump = c.reeb_sign(port);
                let pa = &c.ports[exit as usize];
                self.concave.push((cx, jump));
                self.turn = &self.turn - &q(1, 4);
                self.walk((pa.arc, pa.end == ArcEnd::Tail));
                self.turn = &self.turn + &q(1, 4);
                self.concave.pop();
            }
        }
    }
    let c = &d.crossings[root];
    for qd in 0..4u8 {
        if c.reeb_sign(qd) > 0 {
            let pa = &c.ports[qd as usize];
            let mut s = S {
                d,
                root: (root, qd),
                site,
                cap: 2,
                count: BTreeMap::new(),
                net: BTreeMap::new(),
                turn: Q::zero(),
                depth: 0,
                site_corner_used: false,
                concave: Vec::new(),
                found: None,
            };
            s.walk((pa.arc, pa.end == ArcEnd::Tail));
            if let Some(b) = s.found {
                return Ok(Some(b));
            }
        }
    }
    Ok(None)
}
