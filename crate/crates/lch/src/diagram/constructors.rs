//! Constructors for the bundled diagram families.
//!
//! All constructors draw explicit rational polylines and compile them. Crossing
//! names, gradings and over-strand choices are part of the drawing data; the
//! downstream validation suite (degree drop, d^2 = 0, chain maps, reference
//! tables) pins every discrete choice.

use super::builder::{compile, CrossingSpec, GeomBasePoint, Geometry};
use super::{Diagram, DiagramError, OrientConvention, SpinConvention};
use crate::geom::{ClosedPolyline, Pt};

/// A positive braid word: letters are generator indices `1..strands`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    pub letters: Vec<usize>,
    pub strands: usize,
}

impl BraidWord {
    pub fn new(letters: Vec<i64>, strands: usize) -> Result<Self, DiagramError> {
        if strands < 2 {
            return Err(DiagramError::Invalid("braid needs at least 2 strands".into()));
        }
        let mut ls = Vec::with_capacity(letters.len());
        for l in letters {
            if l <= 0 {
                return Err(DiagramError::Invalid(format!(
                    "negative or zero braid letter {l}; only positive generators are allowed"
                )));
            }
            let idx = l as usize;
            if idx >= strands {
                return Err(DiagramError::Invalid(format!(
                    "braid letter s{idx} out of range for {strands} strands"
                )));
            }
            ls.push(idx);
        }
        Ok(BraidWord { letters: ls, strands })
    }

    /// Lane permutation of the word: `perm[lane] = lane reached on the right`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut lane_of_wire: Vec<usize> = (0..self.strands).collect();
        for &j in &self.letters {
            // generator j swaps lanes j-1 and j (0-based)
            let a = lane_of_wire.iter().position(|&l| l == j - 1).unwrap();
            let b = lane_of_wire.iter().position(|&l| l == j).unwrap();
            lane_of_wire.swap(a, b);
        }
        // wire w started at lane w and ends at lane_of_wire[w]
        lane_of_wire
    }
}

/// The one-crossing Lagrangian projection of the maximal-tb unknot: a figure
/// eight with lobes of opposite handedness, chord `a` of grading 1, basepoint `t`.
pub fn unknot() -> Diagram {
    let pts = vec![
        Pt::of(-2.0, -2.0),
        Pt::of(2.0, 2.0),
        Pt::of(5.0, 0.0),
        Pt::of(2.0, -2.0),
        Pt::of(-2.0, 2.0),
        Pt::of(-5.0, 0.0),
    ];
    let geometry = Geometry {
        components: vec![ClosedPolyline::new(pts)],
        basepoints: vec![GeomBasePoint {
            label: "t".into(),
            sym: "t".into(),
            sign: 1,
            exp: 1,
            at: Pt::of(-3.5, -1.0),
        }],
    };
    let specs = vec![CrossingSpec {
        name: "a".into(),
        near: Pt::of(0.0, 0.0),
        // the north-west strand is the over strand
        over_dir: Pt::of(-1.0, 1.0),
        grading: 1,
    }];
    compile(
        geometry,
        &specs,
        Some("unknot".into()),
        OrientConvention::default(),
        SpinConvention::LieGroup,
    )
    .expect("unknot template compiles")
}

/// Lagrangian projection of the (-1)-closure of a positive braid: the braid box
/// closed through nested resolved cusps. Braid crossings `b1..bn` have grading 0,
/// closure chords `a1..ak` grading 1; one basepoint per component.
pub fn minus_one_closure(word: &BraidWord, name: Option<String>) -> Result<Diagram, DiagramError> {
    build_closure(word, name, false, true)
}

pub fn trefoil() -> Diagram {
    let w = BraidWord::new(vec![1, 1, 1], 2).unwrap();
    minus_one_closure(&w, Some("trefoil".into())).expect("trefoil template compiles")
}

/// Template bits for the braid closure, exposed for calibration tests.
pub(crate) fn build_closure(
    word: &BraidWord,
    name: Option<String>,
    braid_over_up: bool,
    kink_horizontal_over: bool,
) -> Result<Diagram, DiagramError> {
    let k = word.strands;
    let n = word.letters.len();
    let w_box = 3.0 * n as f64 + 3.0;
    let lane_y = |lane: usize| -2.0 * (lane as f64 + 1.0);
    let ret_y = |lane: usize| -2.0 * (2.0 * k as f64 + 1.0 - (lane as f64 + 1.0)) - 1.0;
    let right_x = |lane: usize| w_box + 3.0 * (k as f64 - lane as f64);
    let left_x = |lane: usize| -3.0 * (k as f64 - lane as f64) - 2.0;

    // wire paths through the braid box (wire = strand entering at lane w)
    let mut wire_paths: Vec<Vec<Pt>> = (0..k)
        .map(|w0| vec![Pt::of(0.0, lane_y(w0))])
        .collect();
    let mut lane_of_wire: Vec<usize> = (0..k).collect();
    let mut specs: Vec<CrossingSpec> = Vec::new();
    for (m, &j) in word.letters.iter().enumerate() {
        let x0 = 1.0 + 3.0 * m as f64;
        let top_lane = j - 1;
        let bot_lane = j;
        let wt = lane_of_wire.iter().position(|&l| l == top_lane).unwrap();
        let wb = lane_of_wire.iter().position(|&l| l == bot_lane).unwrap();
        wire_paths[wt].push(Pt::of(x0, lane_y(top_lane)));
        wire_paths[wt].push(Pt::of(x0 + 2.0, lane_y(bot_lane)));
        wire_paths[wb].push(Pt::of(x0, lane_y(bot_lane)));
        wire_paths[wb].push(Pt::of(x0 + 2.0, lane_y(top_lane)));
        lane_of_wire.swap(wt, wb);
        specs.push(CrossingSpec {
            name: format!("b{}", m + 1),
            near: Pt::of(x0 + 1.0, lane_y(top_lane) - 1.0),
            over_dir: if braid_over_up {
                Pt::of(1.0, 1.0)
            } else {
                Pt::of(1.0, -1.0)
            },
            grading: 0,
        });
    }
    for (w0, path) in wire_paths.iter_mut().enumerate() {
        path.push(Pt::of(w_box, lane_y(lane_of_wire[w0])));
    }

    // closure path of each lane: right kink, deep return, left rise
    let closure_path = |lane: usize| -> Vec<Pt> {
        let y = lane_y(lane);
        let r = right_x(lane);
        vec![
            Pt::of(r + 1.2, y),
            Pt::of(r + 1.2, y + 1.0),
            Pt::of(r + 0.4, y + 1.0),
            Pt::of(r + 0.4, ret_y(lane)),
            Pt::of(left_x(lane), ret_y(lane)),
            Pt::of(left_x(lane), y),
        ]
    };
    for lane in 0..k {
        specs.push(CrossingSpec {
            name: format!("a{}", lane + 1),
            near: Pt::of(right_x(lane) + 0.4, lane_y(lane)),
            over_dir: if kink_horizontal_over {
                Pt::of(1.0, 0.0)
            } else {
                Pt::of(0.0, 1.0)
            },
            grading: 1,
        });
    }

    // assemble closed polylines by following wires through the permutation
    let perm = word.permutation();
    let mut seen = vec![false; k];
    let mut components: Vec<ClosedPolyline> = Vec::new();
    let mut basepoints: Vec<GeomBasePoint> = Vec::new();
    let mut comp_index = 0usize;
    for start in 0..k {
        if seen[start] {
            continue;
        }
        comp_index += 1;
        let mut pts: Vec<Pt> = Vec::new();
        let mut w0 = start;
        loop {
            seen[w0] = true;
            pts.extend(wire_paths[w0].iter().cloned());
            let exit_lane = perm[w0];
            pts.extend(closure_path(exit_lane));
            // the left rise ends at the box entry of lane `exit_lane`
            w0 = exit_lane;
            if w0 == start {
                break;
            }
        }
        basepoints.push(GeomBasePoint {
            label: format!("t{comp_index}"),
            sym: format!("t{comp_index}"),
            sign: 1,
            exp: 1,
            at: Pt::of(-1.0, lane_y(start)),
        });
        components.push(ClosedPolyline::new(pts));
    }

    compile(
        Geometry { components, basepoints },
        &specs,
        name,
        OrientConvention::default(),
        SpinConvention::LieGroup,
    )
}

/// Discrete drawing choices for the linked family below; the defaults are the
/// calibrated transcription (locked by the reference-table acceptance suite).
#[derive(Clone, Debug)]
pub struct Lambda1Config {
    pub sigma_reversed: bool,
    pub eyef_reversed: bool,
    pub eyeg_reversed: bool,
    pub braid_over_up: bool,
    pub clasp_descent_over: bool,
    /// Eye strand over the cable lanes, per passage: f-left, f-right, g-left, g-right.
    pub eye_over: [bool; 4],
    /// Kink vertical drop over, per eye (f, g).
    pub kink_drop_over: [bool; 2],
    /// Vertical (eye-g) strand over at the two eye-eye crossings.
    pub c_g_over: [bool; 2],
    /// Basepoint lanes: t1 on the upper bottom lane, t2 on the upper return lane.
    pub t1_upper: bool,
    pub t2_upper: bool,
}

impl Default for Lambda1Config {
    fn default() -> Self {
        // Calibrated transcription: selected by the staged search in
        // tests (d^2 = 0, degree drop, loop chain map, reference table).
        Lambda1Config {
            sigma_reversed: false,
            eyef_reversed: false,
            eyeg_reversed: false,
            braid_over_up: false,
            clasp_descent_over: false,
            eye_over: [true, true, true, true],
            kink_drop_over: [false, false],
            c_g_over: [true, true],
            t1_upper: false,
            t2_upper: false,
        }
    }
}

/// The linked family: a two-lane closed cable carrying the braid `s1^n`, with two
/// eye components clasped around the cable and each other. Chords:
/// `b1..bn, c11, c12, c21, c22, f1..f4, g1..g4, a1, a2, c1, c2`;
/// basepoints `t1, t2` on the cable and `t3, t4` on the eyes.
pub fn lambda_n(n: usize) -> Result<Diagram, DiagramError> {
    lambda_n_with(n, &Lambda1Config::default())
}

pub fn lambda_n_with(n: usize, cfg: &Lambda1Config) -> Result<Diagram, DiagramError> {
    if n < 1 {
        return Err(DiagramError::Invalid("the family needs n >= 1".into()));
    }
    if n > 8 {
        return Err(DiagramError::Invalid(
            "braid box drawn for n <= 8 only".into(),
        ));
    }

    // cable lane loops outside the braid box, from box exit back to box entry
    let box_x0 = -6.0;
    let box_x1 = box_x0 + 1.2 * n as f64;
    let lane_a_rest = vec![
        // from box exit (box_x1, -7.6) around to box entry (box_x0, -7.6)
        Pt::of(6.35, -7.6),
        Pt::of(7.45, -2.4), // ascent
        Pt::of(-10.4, -2.4),
        Pt::of(-10.4, 5.4),
        Pt::of(10.4, 5.4),
        Pt::of(10.4, -2.2),
        Pt::of(6.6, -5.2), // descent
        Pt::of(-13.6, -5.2),
        Pt::of(-14.2, -6.4),
        Pt::of(-13.4, -7.6),
    ];
    let lane_b_rest = vec![
        Pt::of(6.85, -8.4),
        Pt::of(8.5, -1.6), // ascent
        Pt::of(-9.6, -1.6),
        Pt::of(-9.6, 4.6),
        Pt::of(9.6, 4.6),
        Pt::of(9.6, -1.8),
        Pt::of(6.3, -4.4), // descent
        Pt::of(-14.4, -4.4),
        Pt::of(-15.2, -6.4),
        Pt::of(-14.2, -8.4),
    ];
    let ya = -7.6;
    let yb = -8.4;

    // wires through the braid box: lanes swap at each letter
    let mut wire_upper: Vec<Pt> = vec![Pt::of(box_x0, ya)];
    let mut wire_lower: Vec<Pt> = vec![Pt::of(box_x0, yb)];
    let mut upper_on_top = true;
    let mut specs: Vec<CrossingSpec> = Vec::new();
    for m in 0..n {
        let x0 = box_x0 + 1.2 * m as f64;
        let x1 = x0 + 1.2;
        let (yt, ybm) = (ya, yb);
        // the wire currently on top dives down, the lower one rises
        let (top_wire, bot_wire) = if upper_on_top {
            (&mut wire_upper, &mut wire_lower)
        } else {
            (&mut wire_lower, &mut wire_upper)
        };
        top_wire.push(Pt::of(x0, yt));
        top_wire.push(Pt::of(x1, ybm));
        bot_wire.push(Pt::of(x0, ybm));
        bot_wire.push(Pt::of(x1, yt));
        upper_on_top = !upper_on_top;
        specs.push(CrossingSpec {
            name: format!("b{}", m + 1),
            near: Pt::of(x0 + 0.6, -8.0),
            over_dir: if cfg.braid_over_up {
                Pt::of(1.0, 1.0)
            } else {
                Pt::of(1.0, -1.0)
            },
            grading: 0,
        });
    }
    wire_upper.push(Pt::of(box_x1, if upper_on_top { ya } else { yb }));
    wire_lower.push(Pt::of(box_x1, if upper_on_top { yb } else { ya }));

    // assemble cable components: wire exiting on lane A continues around lane A
    let mut components: Vec<ClosedPolyline> = Vec::new();
    let upper_exits_a = upper_on_top;
    if n % 2 == 1 {
        // one cable component: upper wire, then the lane it exits on, then the
        // other wire, then the other lane
        let mut pts = wire_upper.clone();
        if upper_exits_a {
            pts.extend(lane_a_rest.iter().cloned());
            pts.extend(wire_lower.iter().cloned());
            pts.extend(lane_b_rest.iter().cloned());
        } else {
            pts.extend(lane_b_rest.iter().cloned());
            pts.extend(wire_lower.iter().cloned());
            pts.extend(lane_a_rest.iter().cloned());
        }
        components.push(ClosedPolyline::new(pts));
    } else {
        let mut p1 = wire_upper.clone();
        p1.extend(lane_a_rest.iter().cloned());
        let mut p2 = wire_lower.clone();
        p2.extend(lane_b_rest.iter().cloned());
        components.push(ClosedPolyline::new(p1));
        components.push(ClosedPolyline::new(p2));
    }
    if cfg.sigma_reversed {
        for c in components.iter_mut() {
            c.pts.reverse();
        }
    }

    // clasp crossings between ascents and descents
    let clasp = [
        ("c11", Pt::of(6.91, -4.96)),
        ("c12", Pt::of(7.87, -4.20)),
        ("c21", Pt::of(7.17, -3.71)),
        ("c22", Pt::of(8.19, -2.92)),
    ];
    for (name, near) in clasp {
        specs.push(CrossingSpec {
            name: name.into(),
            near,
            over_dir: if cfg.clasp_descent_over {
                Pt::of(-1.0, -0.8)
            } else {
                Pt::of(0.2, 1.0)
            },
            grading: 1,
        });
    }

    // eye f
    let mut eye_f = vec![
        Pt::of(-6.5, -3.4),
        Pt::of(-6.5, 0.2),
        Pt::of(1.0, 0.4),
        Pt::of(3.0, 0.4),
        Pt::of(3.0, 1.2),
        Pt::of(2.0, 1.2),
        Pt::of(2.0, 0.0),
        Pt::of(3.2, -0.2),
        Pt::of(3.2, -3.4),
    ];
    if cfg.eyef_reversed {
        eye_f.reverse();
    }
    components.push(ClosedPolyline::new(eye_f));
    // eye g
    let mut eye_g = vec![
        Pt::of(-4.5, -3.0),
        Pt::of(-4.5, 1.9),
        Pt::of(-1.5, 1.9),
        Pt::of(0.5, 1.9),
        Pt::of(0.5, 2.7),
        Pt::of(-0.5, 2.7),
        Pt::of(-0.5, 1.4),
        Pt::of(1.2, 1.3),
        Pt::of(1.2, -3.0),
    ];
    if cfg.eyeg_reversed {
        eye_g.reverse();
    }
    components.push(ClosedPolyline::new(eye_g));

    let eye_over_dir = |over: bool| if over { Pt::of(0.0, 1.0) } else { Pt::of(1.0, 0.0) };
    let passages: [(&str, &str, f64, usize); 4] = [
        ("f3", "f1", -6.5, 0),
        ("f4", "f2", 3.2, 1),
        ("g3", "g1", -4.5, 2),
        ("g4", "g2", 1.2, 3),
    ];
    for (upper, lower, x, pi) in passages {
        specs.push(CrossingSpec {
            name: upper.into(),
            near: Pt::of(x, -1.6),
            over_dir: eye_over_dir(cfg.eye_over[pi]),
            grading: 0,
        });
        specs.push(CrossingSpec {
            name: lower.into(),
            near: Pt::of(x, -2.4),
            over_dir: eye_over_dir(cfg.eye_over[pi]),
            grading: 0,
        });
    }
    // kinks
    specs.push(CrossingSpec {
        name: "a1".into(),
        near: Pt::of(2.0, 0.4),
        over_dir: if cfg.kink_drop_over[0] {
            Pt::of(0.0, 1.0)
        } else {
            Pt::of(1.0, 0.0)
        },
        grading: 1,
    });
    specs.push(CrossingSpec {
        name: "a2".into(),
        near: Pt::of(-0.5, 1.9),
        over_dir: if cfg.kink_drop_over[1] {
            Pt::of(0.0, 1.0)
        } else {
            Pt::of(1.0, 0.0)
        },
        grading: 1,
    });
    // eye-eye crossings
    specs.push(CrossingSpec {
        name: "c1".into(),
        near: Pt::of(-4.5, 0.25),
        over_dir: eye_over_dir(cfg.c_g_over[0]),
        grading: 1,
    });
    specs.push(CrossingSpec {
        name: "c2".into(),
        near: Pt::of(1.2, 0.4),
        over_dir: eye_over_dir(cfg.c_g_over[1]),
        grading: 1,
    });

    let basepoints = vec![
        GeomBasePoint {
            label: "t1".into(),
            sym: "t1".into(),
            sign: 1,
            exp: 1,
            at: Pt::of(5.0, if cfg.t1_upper { -7.6 } else { -8.4 }),
        },
        GeomBasePoint {
            label: "t2".into(),
            sym: "t2".into(),
            sign: 1,
            exp: 1,
            at: Pt::of(0.0, if cfg.t2_upper { -4.4 } else { -5.2 }),
        },
        GeomBasePoint {
            label: "t3".into(),
            sym: "t3".into(),
            sign: 1,
            exp: 1,
            at: Pt::of(2.6, -0.1),
        },
        GeomBasePoint {
            label: "t4".into(),
            sym: "t4".into(),
            sign: 1,
            exp: 1,
            at: Pt::of(0.35, 1.35),
        },
    ];

    compile(
        Geometry { components, basepoints },
        &specs,
        Some(format!("lambda{n}")),
        OrientConvention::default(),
        SpinConvention::LieGroup,
    )
}
