//! Reidemeister moves on planar maps.
//!
//! Moves are addressed by darts (a slot read as "leave the crossing here"),
//! so a recorded sequence can be replayed on the diagram it came from.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{PlanarMap, Slot};
use crate::error::{Error, Result};

const E: u8 = 0;
const N: u8 = 1;
const W: u8 = 2;
const S: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    /// Removes a kink at `crossing`.
    R1Remove { crossing: usize },
    /// Adds a kink on the edge leaving `(crossing, slot)`, inside the face on its left.
    R1Add { crossing: usize, slot: u8, over: bool },
    /// Turns a free loop into a one-crossing kink.
    R1AddLoop { over: bool },
    /// Pulls apart the bigon to the left of the dart.
    R2Remove { crossing: usize, slot: u8 },
    /// Pushes the edge of dart `a` across the edge of dart `b`; both darts
    /// bound the same face.
    R2Add { a: (usize, u8), b: (usize, u8), a_over: bool },
    /// Slides a strand across the triangle to the left of the dart.
    R3 { crossing: usize, slot: u8 },
}

impl Move {
    /// Change in crossing number.
    pub fn delta(self) -> i64 {
        match self {
            Move::R1Remove { .. } => -1,
            Move::R1Add { .. } | Move::R1AddLoop { .. } => 1,
            Move::R2Remove { .. } => -2,
            Move::R2Add { .. } => 2,
            Move::R3 { .. } => 0,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Move::R1Remove { crossing } => write!(f, "R1- c{crossing}"),
            Move::R1Add { crossing, slot, over } => write!(f, "R1+ c{crossing}.{slot} {}", if over { "o" } else { "u" }),
            Move::R1AddLoop { over } => write!(f, "R1+ loop {}", if over { "o" } else { "u" }),
            Move::R2Remove { crossing, slot } => write!(f, "R2- c{crossing}.{slot}"),
            Move::R2Add { a, b, a_over } => {
                write!(f, "R2+ c{}.{} c{}.{} {}", a.0, a.1, b.0, b.1, if a_over { "o" } else { "u" })
            }
            Move::R3 { crossing, slot } => write!(f, "R3 c{crossing}.{slot}"),
        }
    }
}

fn bad(msg: &str) -> Error {
    Error::InvalidMove(msg.to_string())
}

fn check_slot(map: &PlanarMap, c: usize, s: u8) -> Result<Slot> {
    if c >= map.len() || s > 3 {
        return Err(bad("slot out of range"));
    }
    Ok(Slot::new(c, s))
}

/// Places a crossing whose frame slots are given in the E, N, W, S frame,
/// with the under-strand on E-W when `rot == 0` and on N-S when `rot == 1`.
fn framed(c: usize, rot: u8, frame: u8) -> Slot {
    Slot::new(c, (frame + 4 - rot) % 4)
}

pub fn apply(map: &PlanarMap, mv: Move) -> Result<PlanarMap> {
    match mv {
        Move::R1Remove { crossing } => r1_remove(map, crossing),
        Move::R1Add { crossing, slot, over } => r1_add(map, check_slot(map, crossing, slot)?, over),
        Move::R1AddLoop { over } => {
            if map.free_loops() == 0 {
                return Err(bad("no free loop"));
            }
            let mut out = map.clone();
            out.remove_free_loop();
            let c = out.push_crossing();
            let r = if over { 0 } else { 1 };
            out.link(Slot::new(c, r), Slot::new(c, r + 1));
            out.link(Slot::new(c, r + 2), Slot::new(c, (r + 3) % 4));
            Ok(out)
        }
        Move::R2Remove { crossing, slot } => r2_remove(map, check_slot(map, crossing, slot)?),
        Move::R2Add { a, b, a_over } => {
            r2_add(map, check_slot(map, a.0, a.1)?, check_slot(map, b.0, b.1)?, a_over)
        }
        Move::R3 { crossing, slot } => r3(map, check_slot(map, crossing, slot)?),
    }
}

fn r1_remove(map: &PlanarMap, c: usize) -> Result<PlanarMap> {
    if c >= map.len() {
        return Err(bad("crossing out of range"));
    }
    let s = (0..4u8)
        .find(|&s| map.partner(Slot::new(c, s)) == Slot::new(c, s + 1))
        .ok_or_else(|| bad("no kink at crossing"))?;
    let mut out = map.clone();
    out.splice(&[c], &[(Slot::new(c, s + 2), Slot::new(c, s + 3))]);
    Ok(out)
}

fn r1_add(map: &PlanarMap, x: Slot, over: bool) -> Result<PlanarMap> {
    let y = map.partner(x);
    let mut out = map.clone();
    let c = out.push_crossing();
    let rot = if over { 1 } else { 0 };
    out.link(x, framed(c, rot, W));
    out.link(y, framed(c, rot, S));
    out.link(framed(c, rot, E), framed(c, rot, N));
    Ok(out)
}

/// A left bigon at dart `d`, if there is one: the crossings and the slots of its two edges.
pub(crate) fn bigon(map: &PlanarMap, d: Slot) -> Option<(Slot, Slot, Slot, Slot)> {
    let t = map.partner(d);
    let d2 = t.rot(3);
    let r = map.partner(d2);
    if r.rot(3) != d || d.crossing == t.crossing {
        return None;
    }
    Some((d, t, d2, r))
}

fn r2_remove(map: &PlanarMap, d: Slot) -> Result<PlanarMap> {
    let (s1, t1, s2, r2) = bigon(map, d).ok_or_else(|| bad("no bigon at dart"))?;
    if s1.is_over() != t1.is_over() {
        return Err(bad("bigon is alternating"));
    }
    let (c1, c2) = (s1.crossing, t1.crossing);
    let mut out = map.clone();
    out.splice(&[c1, c2], &[(s1.opposite(), t1.opposite()), (s2.opposite(), r2.opposite())]);
    Ok(out)
}

fn r2_add(map: &PlanarMap, a: Slot, b: Slot, a_over: bool) -> Result<PlanarMap> {
    if a == b || map.partner(a) == b || !map.face_of(a).contains(&b) {
        return Err(bad("darts must bound one face on different edges"));
    }
    let (x1, y1, x2, y2) = (a, map.partner(a), b, map.partner(b));
    let mut out = map.clone();
    let c1 = out.push_crossing();
    let c2 = out.push_crossing();
    // Edge a runs S -> N through both new crossings, edge b runs E -> W.
    let rot = if a_over { 0 } else { 1 };
    let f1 = |k| framed(c1, rot, k);
    let f2 = |k| framed(c2, rot, k);
    out.link(f1(E), f2(W));
    out.link(f1(N), f2(N));
    out.link(f1(W), y2);
    out.link(f1(S), x1);
    out.link(f2(E), x2);
    out.link(f2(S), y1);
    Ok(out)
}

/// Whether the three sides cross in a cycle (each over one and under the
/// other), which rules out the move. `a_out` and `b_in` are the slots of side
/// AB at A and B, `c_in` the slot of side BC at C.
fn cyclic(a_out: Slot, b_in: Slot, c_in: Slot) -> bool {
    let ab_over_ca = a_out.is_over();
    let ab_over_bc = b_in.is_over();
    let bc_over_ca = c_in.is_over();
    (ab_over_ca && !bc_over_ca && !ab_over_bc) || (!ab_over_ca && bc_over_ca && ab_over_bc)
}

/// A left triangle at dart `d` with three distinct corners, as `(a_out, b_in, c_in)`.
pub(crate) fn triangle(map: &PlanarMap, d: Slot) -> Option<[Slot; 6]> {
    let b_in = map.partner(d);
    let b_out = b_in.rot(3);
    let c_in = map.partner(b_out);
    let c_out = c_in.rot(3);
    let a_in = map.partner(c_out);
    if a_in.rot(3) != d {
        return None;
    }
    let (a, b, c) = (d.crossing, b_in.crossing, c_in.crossing);
    if a == b || b == c || a == c {
        return None;
    }
    Some([d, a_in, b_out, b_in, c_out, c_in])
}

fn r3(map: &PlanarMap, d: Slot) -> Result<PlanarMap> {
    let [a_out, a_in, b_out, b_in, c_out, c_in] = triangle(map, d).ok_or_else(|| bad("no triangle at dart"))?;
    if cyclic(a_out, b_in, c_in) {
        return Err(bad("triangle strands form a cycle"));
    }
    let ports = [
        a_out.opposite(),
        a_in.opposite(),
        b_out.opposite(),
        b_in.opposite(),
        c_out.opposite(),
        c_in.opposite(),
    ];
    let ext: Vec<Slot> = ports.iter().map(|&p| map.partner(p)).collect();
    let mut out = map.clone();
    // The triangle turns half a revolution: port k takes over the outside
    // connection of port k+3. Inner triangle sides keep their pairing.
    let mut done = [false; 6];
    for k in 0..6 {
        if done[k] {
            continue;
        }
        done[k] = true;
        let target = ports[(k + 3) % 6];
        match ports.iter().position(|&p| p == ext[k]) {
            Some(j) => {
                done[j] = true;
                out.link(target, ports[(j + 3) % 6]);
            }
            None => out.link(target, ext[k]),
        }
    }
    Ok(out)
}

/// Every move that applies to `map` without adding crossings.
pub fn simplifying_moves(map: &PlanarMap) -> Vec<Move> {
    let mut out = Vec::new();
    for c in 0..map.len() {
        if (0..4u8).any(|s| map.partner(Slot::new(c, s)) == Slot::new(c, s + 1)) {
            out.push(Move::R1Remove { crossing: c });
        }
    }
    for face in map.faces() {
        match face.len() {
            2 => {
                let d = face[0];
                if bigon(map, d).is_some() && d.is_over() == map.partner(d).is_over() {
                    out.push(Move::R2Remove { crossing: d.crossing, slot: d.index });
                }
            }
            3 => {
                let d = face[0];
                if let Some([a_out, _, _, b_in, _, c_in]) = triangle(map, d) {
                    if !cyclic(a_out, b_in, c_in) {
                        out.push(Move::R3 { crossing: d.crossing, slot: d.index });
                    }
                }
            }
            _ => {}
        }
    }
    out
}

/// Crossing-increasing moves: kinks on every dart and pushes between edges of a face.
pub fn complicating_moves(map: &PlanarMap, allow_r2: bool) -> Vec<Move> {
    let mut out = Vec::new();
    if map.is_empty() && map.free_loops() > 0 {
        out.push(Move::R1AddLoop { over: true });
        out.push(Move::R1AddLoop { over: false });
        return out;
    }
    for c in 0..map.len() {
        for s in 0..4u8 {
            for over in [true, false] {
                out.push(Move::R1Add { crossing: c, slot: s, over });
            }
        }
    }
    if allow_r2 {
        for face in map.faces() {
            for (i, &a) in face.iter().enumerate() {
                for &b in &face[i + 1..] {
                    if map.partner(a) == b {
                        continue;
                    }
                    for a_over in [true, false] {
                        out.push(Move::R2Add { a: (a.crossing, a.index), b: (b.crossing, b.index), a_over });
                    }
                }
            }
        }
    }
    out
}

pub fn replay(map: &PlanarMap, moves: &[Move]) -> Result<PlanarMap> {
    moves.iter().try_fold(map.clone(), |m, &mv| apply(&m, mv))
}
