//! Schubert (pillowcase) diagrams of two-bridge links and the wedge
//! modification that turns `b(p,q)` into a candidate for `K(L(p,q); u)`.
//!
//! The pillowcase is the quotient of the Heegaard torus `R^2 / Z^2` by
//! `x -> -x`. In coordinates scaled by `2p` its corners are the four points
//! with both coordinates in `{0, p}`. The meridian `m` of the inner solid torus is
//! horizontal; its two invariant copies are the bottom edge (`Y = 0`) and
//! the top edge (`Y = p`) of the pillowcase, and they carry the two
//! under-bridges. The meridian `m'` of the outer solid torus has slope
//! `(q, p)`; its two invariant copies through the corners carry the two
//! over-bridges. Walking an over-bridge, the `k`-th step lands on the point
//! `F + k*(q, p) mod 2p`, alternately on the bottom and the top edge, so the
//! under-passes along a bridge follow the residues `q*k mod p`.
//!
//! Flattening the front face to a square `Q` and the back face to its
//! exterior, each crossing sits on the bottom or top edge of `Q`. The
//! crossing at position `u` on the bottom edge is where the equivariant arc
//! joining the two bridges meets the image of `P_0 = P_u`: this is the
//! `u`-th wedge.

use serde::{Deserialize, Serialize};

use super::map::{PlanarMap, Slot};
use super::PlanarDiagram;
use crate::error::{Error, Result};
use crate::residue::LensParams;

// Slot layout at every Schubert crossing: the edge strand runs west-east
// under the bridge, which runs north-south.
const EAST: u8 = 0;
const NORTH: u8 = 1;
const WEST: u8 = 2;
const SOUTH: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Edge {
    Bottom,
    Top,
}

/// A Schubert diagram together with the pillowcase bookkeeping needed to
/// locate wedges.
#[derive(Debug, Clone)]
pub struct SchubertDiagram {
    params: LensParams,
    map: PlanarMap,
    /// Crossing index of the bottom-edge crossing at position `k`, `1 <= k < p`.
    bottom: Vec<usize>,
}

impl SchubertDiagram {
    pub fn params(&self) -> LensParams {
        self.params
    }

    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn diagram(&self) -> PlanarDiagram {
        PlanarDiagram::from_map(&self.map)
    }

    pub fn component_count(&self) -> usize {
        self.map.component_count()
    }
}

/// Builds the Schubert diagram of `b(p, q)`; requires `q <= p/2`.
pub fn schubert_diagram(params: LensParams) -> Result<SchubertDiagram> {
    if !params.is_reduced() {
        return Err(Error::Precondition(format!("{params} is not in reduced form (q <= p/2)")));
    }
    let p = params.p();
    let q = params.q();
    let two_p = 2 * p;

    // Crossings: index by (edge, position). Bottom positions 1..p-1, then top.
    let pos_index = |edge: Edge, pos: i64| -> usize {
        match edge {
            Edge::Bottom => (pos - 1) as usize,
            Edge::Top => (p - 1 + pos - 1) as usize,
        }
    };
    let n = 2 * (p - 1) as usize;
    let mut links: Vec<(Slot, Slot)> = Vec::with_capacity(2 * n);
    let mut seen = vec![false; n];

    // Over-bridge ends at the corners, keyed by corner.
    let mut bridge_end_at = std::collections::HashMap::new();

    let start_a = (0i64, 0i64);
    let end_a = ((p * q).rem_euclid(two_p), (p * p).rem_euclid(two_p));
    let start_b = [(p, 0), (0, p), (p, p)]
        .into_iter()
        .find(|&c| c != end_a)
        .expect("four corners");

    for start in [start_a, start_b] {
        // The slot through which the bridge leaves the previous point.
        let mut prev: Option<Slot> = None;
        for k in 1..p {
            let x = (start.0 + k * q).rem_euclid(two_p);
            let y = (start.1 + k * p).rem_euclid(two_p);
            let edge = if y == 0 { Edge::Bottom } else { Edge::Top };
            debug_assert!(y == 0 || y == p);
            let front = x < p;
            let pos = if front { x } else { two_p - x };
            if pos <= 0 || pos >= p {
                return Err(Error::Precondition(format!("bridge hits a corner early at step {k}")));
            }
            let c = pos_index(edge, pos);
            if seen[c] {
                return Err(Error::Precondition("two bridges cross the same edge point".into()));
            }
            seen[c] = true;
            // Moving in the +Y direction, a bottom crossing leaves towards the
            // face containing x; a top crossing arrives from it. Between two
            // edge points a bridge may also cross the seams x = 0 or x = p,
            // so the face is read off locally at each point.
            let (before_front, after_front) = match edge {
                Edge::Bottom => (!front, front),
                Edge::Top => (front, !front),
            };
            let side = |front_side: bool| match (edge, front_side) {
                (Edge::Bottom, true) | (Edge::Top, false) => NORTH,
                (Edge::Bottom, false) | (Edge::Top, true) => SOUTH,
            };
            let enter = Slot::new(c, side(before_front));
            let exit = Slot::new(c, side(after_front));
            match prev {
                Some(s) => links.push((s, enter)),
                None => {
                    bridge_end_at.insert(start, enter);
                }
            }
            prev = Some(exit);
        }
        let end = ((start.0 + p * q).rem_euclid(two_p), (start.1 + p * p).rem_euclid(two_p));
        bridge_end_at.insert(end, prev.expect("p >= 2 gives at least one crossing"));
    }
    if bridge_end_at.len() != 4 {
        return Err(Error::Precondition("bridges do not end on four distinct corners".into()));
    }

    // Under-bridges along the bottom and top edges, west to east.
    for (edge, y) in [(Edge::Bottom, 0), (Edge::Top, p)] {
        let mut prev = bridge_end_at[&(0, y)];
        for pos in 1..p {
            let c = pos_index(edge, pos);
            links.push((prev, Slot::new(c, WEST)));
            prev = Slot::new(c, EAST);
        }
        links.push((prev, bridge_end_at[&(p, y)]));
    }

    let map = PlanarMap::from_links(n, &links, 0)?;
    let bottom = (1..p).map(|pos| pos_index(Edge::Bottom, pos)).collect();
    Ok(SchubertDiagram { params, map, bottom })
}

/// The `u`-th wedge of a Schubert diagram, counted from the left end of the
/// bottom edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeSite {
    pub index: i64,
    /// Crossing of the diagram at the wedge.
    pub crossing: usize,
    /// The under-strand (bottom edge) and over-strand (bridge) slot pairs.
    pub under: (u8, u8),
    pub over: (u8, u8),
    p: i64,
    q: i64,
}

pub fn wedge_site(diagram: &SchubertDiagram, u: i64) -> Result<WedgeSite> {
    let p = diagram.params.p();
    if u < 1 || 2 * u > p {
        return Err(Error::OutOfRange { value: u, min: 1, max: p / 2 });
    }
    extended_wedge_site(diagram, u)
}

/// Like [`wedge_site`] but accepts every bottom position `1 <= u <= p-1`,
/// so that `u` and `p-u` can be compared.
pub fn extended_wedge_site(diagram: &SchubertDiagram, u: i64) -> Result<WedgeSite> {
    let p = diagram.params.p();
    if u < 1 || u > p - 1 {
        return Err(Error::OutOfRange { value: u, min: 1, max: p - 1 });
    }
    Ok(WedgeSite {
        index: u,
        crossing: diagram.bottom[(u - 1) as usize],
        under: (WEST, EAST),
        over: (NORTH, SOUTH),
        p,
        q: diagram.params.q(),
    })
}

/// The local replacement made at a wedge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Modification {
    CrossingPositive,
    CrossingNegative,
    Smoothing,
}

impl Modification {
    pub const ALL: [Modification; 3] =
        [Modification::CrossingPositive, Modification::CrossingNegative, Modification::Smoothing];

    pub fn name(self) -> &'static str {
        match self {
            Modification::CrossingPositive => "crossing+",
            Modification::CrossingNegative => "crossing-",
            Modification::Smoothing => "smoothing",
        }
    }
}

impl std::str::FromStr for Modification {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "crossing+" | "crossing-positive" | "positive" => Ok(Modification::CrossingPositive),
            "crossing-" | "crossing-negative" | "negative" => Ok(Modification::CrossingNegative),
            "smoothing" | "smooth" => Ok(Modification::Smoothing),
            _ => Err(Error::Precondition(format!("unknown modification `{s}`"))),
        }
    }
}

/// Local tangle replacements at a crossing `c` of a map, in the slot frame of `c`.
pub mod local {
    use super::*;

    /// Joins slot pairs `(0,1),(2,3)` when `kind == 0`, `(0,3),(1,2)` when `kind == 1`.
    pub fn smooth(map: &PlanarMap, c: usize, kind: u8) -> PlanarMap {
        let mut m = map.clone();
        let s = |i| Slot::new(c, i);
        let through = if kind == 0 { [(s(0), s(1)), (s(2), s(3))] } else { [(s(0), s(3)), (s(1), s(2))] };
        m.splice(&[c], &through);
        m
    }

    /// Adds one crossing twisting the two ends leaving `c` through slots `s`
    /// and `s+1`. With `reinforce` the new crossing continues the twist of
    /// `c` (no Reidemeister II cancellation); otherwise it undoes it.
    pub fn twist(map: &PlanarMap, c: usize, s: u8, reinforce: bool) -> Result<PlanarMap> {
        let mut m = map.clone();
        let a = Slot::new(c, s);
        let b = Slot::new(c, s + 1);
        let x = m.partner(a);
        let y = m.partner(b);
        if x == b {
            return Err(Error::InvalidMove("twist across a kink".into()));
        }
        let d = m.push_crossing();
        // Frame of d: e=0, n=1, w=2, s=3, with the strand from `b` running
        // west-east and the strand from `a` entering at south, leaving north.
        // Rotating the frame by one slot swaps which strand is over.
        let a_over_at_c = a.is_over();
        let a_over_at_d = if reinforce { !a_over_at_c } else { a_over_at_c };
        let rot = if a_over_at_d { 0 } else { 1 };
        let ds = |frame_idx: u8| Slot::new(d, (frame_idx + 4 - rot) % 4);
        m.link(a, ds(3));
        m.link(b, ds(2));
        m.link(ds(1), y);
        m.link(ds(0), x);
        m.validate()?;
        Ok(m)
    }
}

/// Local replacements at a wedge, in the slot frame of the Schubert crossing
/// (west-east under-strand, north-south bridge). The vertex sits in the
/// lower-left corner of the crossing, between the west and south ends.
///
/// * `Smoothing` joins east with north and west with south.
/// * `CrossingPositive`/`CrossingNegative` add one crossing between the west
///   and south ends. Negative cancels against the wedge crossing, so up to a
///   Reidemeister II move it is the other smoothing; positive reinforces it.
pub const CALIBRATION_ID: &str = "wedge=bottom-crossing,left-origin;smoothing=EN|WS;crossing=W,S;sign=negative";

/// The crossing sign whose diagram pairs with `Smoothing` in the knot-or-link test.
pub const CALIBRATED_CROSSING: Modification = Modification::CrossingNegative;

pub fn modify(diagram: &SchubertDiagram, site: WedgeSite, mode: Modification) -> Result<PlanarMap> {
    if site.p != diagram.params.p()
        || site.q != diagram.params.q()
        || site.index < 1
        || site.index > site.p - 1
        || diagram.bottom[(site.index - 1) as usize] != site.crossing
    {
        return Err(Error::SiteMismatch);
    }
    let c = site.crossing;
    match mode {
        Modification::Smoothing => Ok(local::smooth(&diagram.map, c, 0)),
        Modification::CrossingPositive => local::twist(&diagram.map, c, WEST, true),
        Modification::CrossingNegative => local::twist(&diagram.map, c, WEST, false),
    }
}
