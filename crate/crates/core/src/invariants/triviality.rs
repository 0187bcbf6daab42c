//! Unknot recognition: cheap invariants first, then a bounded search for a
//! sequence of Reidemeister moves down to the crossingless diagram.

use std::cmp::Reverse;
use std::collections::hash_map::DefaultHasher;
use std::collections::{BinaryHeap, HashSet};
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use super::alexander::alexander_of_map;
use super::goeritz::map_determinant;
use super::jones::{jones_of_map, DEFAULT_JONES_CAP};
use super::moves::{apply, complicating_moves, simplifying_moves, Move};
use crate::diagram::{PlanarMap, Slot};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Maximum number of distinct diagrams the move search may visit.
    pub node_cap: usize,
    /// How far above the smallest crossing count seen so far the search may climb.
    pub headroom: usize,
    /// Largest diagram on which the Jones polynomial is attempted.
    pub jones_cap: usize,
}

impl Budget {
    pub const MAX_NODE_CAP: usize = 100_000_000;
    pub const MAX_HEADROOM: usize = 16;
    pub const MAX_JONES_CAP: usize = 128;

    pub fn validate(&self) -> Result<()> {
        if self.node_cap == 0 || self.node_cap > Self::MAX_NODE_CAP {
            return Err(Error::Budget("node cap must lie in [1, 10^8]"));
        }
        if self.headroom > Self::MAX_HEADROOM {
            return Err(Error::Budget("headroom must not exceed 16"));
        }
        if self.jones_cap > Self::MAX_JONES_CAP {
            return Err(Error::Budget("jones cap must not exceed 128"));
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget { node_cap: 1_000_000, headroom: 2, jones_cap: DEFAULT_JONES_CAP }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub invariant: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum TrivialityVerdict {
    /// Replaying `certificate` on the input gives the crossingless unknot.
    Trivial { certificate: Vec<Move> },
    Nontrivial { witness: Witness },
    Unknown { nodes_visited: usize, reason: String },
}

impl TrivialityVerdict {
    pub fn is_trivial(&self) -> bool {
        matches!(self, TrivialityVerdict::Trivial { .. })
    }

    pub fn is_nontrivial(&self) -> bool {
        matches!(self, TrivialityVerdict::Nontrivial { .. })
    }
}

pub fn is_trivial(map: &PlanarMap, budget: &Budget) -> Result<TrivialityVerdict> {
    budget.validate()?;
    let k = map.component_count();
    if k != 1 {
        return Err(Error::NotAKnot(k));
    }
    let det = map_determinant(map)?;
    if det != 1 {
        return Ok(nontrivial("determinant", det.to_string()));
    }
    let alex = alexander_of_map(map)?;
    if !alex.is_one() {
        return Ok(nontrivial("alexander", alex.to_string()));
    }
    if map.len() <= budget.jones_cap {
        let v = jones_of_map(map);
        if !v.is_one() {
            return Ok(nontrivial("jones", v.to_string()));
        }
    }
    match search_unknot(map, budget) {
        Search::Found(certificate) => Ok(TrivialityVerdict::Trivial { certificate }),
        Search::GaveUp { nodes, capped } => {
            let reason = if capped { "node cap reached" } else { "search space exhausted within headroom" };
            Ok(TrivialityVerdict::Unknown { nodes_visited: nodes, reason: reason.into() })
        }
    }
}

fn nontrivial(invariant: &str, value: String) -> TrivialityVerdict {
    TrivialityVerdict::Nontrivial { witness: Witness { invariant: invariant.into(), value } }
}

pub(crate) enum Search {
    Found(Vec<Move>),
    GaveUp { nodes: usize, capped: bool },
}

fn is_unknot_diagram(map: &PlanarMap) -> bool {
    map.is_empty() && map.free_loops() == 1
}

/// Best-first search on crossing count. Crossing-increasing moves of a
/// diagram are queued at the crossing count they lead to, so the search
/// only climbs when nothing lower is pending.
pub(crate) fn search_unknot(start: &PlanarMap, budget: &Budget) -> Search {
    if is_unknot_diagram(start) {
        return Search::Found(Vec::new());
    }
    struct Node {
        parent: usize,
        mv: Option<Move>,
    }
    #[derive(PartialEq, Eq, PartialOrd, Ord)]
    enum Phase {
        Simplify,
        Kinks,
        Pushes,
    }
    let mut nodes = vec![Node { parent: usize::MAX, mv: None }];
    let mut seen: HashSet<u64> = HashSet::new();
    seen.insert(canonical_hash(start));
    // (crossings, newest first, node, phase) with the node's diagram.
    let mut heap: BinaryHeap<(Reverse<usize>, usize, u8, Packed)> = BinaryHeap::new();
    heap.push((Reverse(start.len()), 0, 0, Packed::from(start)));
    let mut lowest = start.len();
    let path = |nodes: &Vec<Node>, mut i: usize| {
        let mut out = Vec::new();
        while let Some(mv) = nodes[i].mv {
            out.push(mv);
            i = nodes[i].parent;
        }
        out.reverse();
        out
    };
    while let Some((_, idx, phase, packed)) = heap.pop() {
        let map = packed.unpack();
        let phase = match phase {
            0 => Phase::Simplify,
            1 => Phase::Kinks,
            _ => Phase::Pushes,
        };
        let moves = match phase {
            Phase::Simplify => {
                let n = map.len();
                if n < lowest + budget.headroom {
                    heap.push((Reverse(n + 1), idx, 1, packed.clone()));
                }
                if n + 2 <= lowest + budget.headroom {
                    heap.push((Reverse(n + 2), idx, 2, packed));
                }
                simplifying_moves(&map)
            }
            Phase::Kinks => complicating_moves(&map, false),
            Phase::Pushes => {
                let mut all = complicating_moves(&map, true);
                all.retain(|m| matches!(m, Move::R2Add { .. }));
                all
            }
        };
        for mv in moves {
            let Ok(child) = apply(&map, mv) else { continue };
            if child.len() > lowest + budget.headroom {
                continue;
            }
            if !seen.insert(canonical_hash(&child)) {
                continue;
            }
            nodes.push(Node { parent: idx, mv: Some(mv) });
            let cidx = nodes.len() - 1;
            if is_unknot_diagram(&child) {
                return Search::Found(path(&nodes, cidx));
            }
            if nodes.len() >= budget.node_cap {
                return Search::GaveUp { nodes: nodes.len(), capped: true };
            }
            lowest = lowest.min(child.len());
            heap.push((Reverse(child.len()), cidx, 0, Packed::from(&child)));
        }
    }
    Search::GaveUp { nodes: nodes.len(), capped: false }
}

/// Compact copy of a map for the search frontier.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Packed {
    slots: Vec<u32>,
    free_loops: u32,
}

impl Packed {
    fn from(map: &PlanarMap) -> Self {
        let mut slots = Vec::with_capacity(4 * map.len());
        for c in 0..map.len() {
            for i in 0..4 {
                let t = map.partner(Slot::new(c, i));
                slots.push((t.crossing * 4) as u32 + t.index as u32);
            }
        }
        Packed { slots, free_loops: map.free_loops() as u32 }
    }

    fn unpack(&self) -> PlanarMap {
        let n = self.slots.len() / 4;
        let links: Vec<(Slot, Slot)> = self
            .slots
            .iter()
            .enumerate()
            .map(|(i, &t)| (Slot::new(i / 4, (i % 4) as u8), Slot::new(t as usize / 4, (t % 4) as u8)))
            .filter(|(a, b)| a <= b)
            .collect();
        PlanarMap::from_links(n, &links, self.free_loops as usize).expect("packed map was valid")
    }
}

/// Signed Gauss code minimised over starting point and direction. For a
/// connected knot diagram it determines the diagram on the oriented sphere.
pub fn canonical_code(map: &PlanarMap) -> Vec<u32> {
    let strands = map.strands();
    if strands.len() != 1 {
        // Multi-component diagrams are not searched; fall back to the raw pairing.
        return Packed::from(map).slots;
    }
    let orient = map.orientation();
    let strand = &strands[0];
    let len = strand.len();
    let mut best: Option<Vec<u32>> = None;
    let mut ids = vec![u32::MAX; map.len()];
    for start in 0..len {
        for forward in [true, false] {
            ids.iter_mut().for_each(|x| *x = u32::MAX);
            let mut next_id = 0;
            let mut code = Vec::with_capacity(len + 1);
            let mut smaller = false;
            for k in 0..len {
                let i = if forward { (start + k) % len } else { (start + len - k) % len };
                let s = strand[i];
                let c = s.crossing;
                if ids[c] == u32::MAX {
                    ids[c] = next_id;
                    next_id += 1;
                }
                let sym = ids[c] << 2 | (s.is_over() as u32) << 1 | (orient.sign(c) > 0) as u32;
                code.push(sym);
                // Early exit when this start is already worse than the best.
                if let Some(b) = &best {
                    if !smaller {
                        match sym.cmp(&b[k]) {
                            std::cmp::Ordering::Greater => break,
                            std::cmp::Ordering::Less => smaller = true,
                            std::cmp::Ordering::Equal => {}
                        }
                    }
                }
            }
            if code.len() == len && best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
    }
    let mut out = best.unwrap_or_default();
    out.push(map.free_loops() as u32);
    out
}

fn canonical_hash(map: &PlanarMap) -> u64 {
    let mut h = DefaultHasher::new();
    canonical_code(map).hash(&mut h);
    h.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::PlanarDiagram;
    use crate::invariants::moves::replay;

    #[test]
    fn trefoil_is_nontrivial() {
        let t = PlanarDiagram::from_pd(&[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]], 1).unwrap();
        let v = is_trivial(&t.to_map(), &Budget::default()).unwrap();
        assert!(v.is_nontrivial());
    }

    #[test]
    fn kinked_unknot_certificate_replays() {
        let mut m = PlanarMap::empty(1);
        m = apply(&m, Move::R1AddLoop { over: true }).unwrap();
        m = apply(&m, Move::R1Add { crossing: 0, slot: 0, over: false }).unwrap();
        m = apply(&m, Move::R2Add { a: (0, 1), b: (1, 2), a_over: true }).unwrap_or(m);
        let v = is_trivial(&m, &Budget::default()).unwrap();
        let TrivialityVerdict::Trivial { certificate } = v else { panic!("{v:?}") };
        let end = replay(&m, &certificate).unwrap();
        assert!(end.is_empty() && end.free_loops() == 1);
    }

    #[test]
    fn canonical_code_ignores_labelling() {
        let a = PlanarDiagram::from_pd(&[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]], 1).unwrap();
        let b = PlanarDiagram::from_pd(&[[3, 1, 4, 6], [5, 3, 6, 2], [1, 5, 2, 4]], 1).unwrap();
        assert_eq!(canonical_code(&a.to_map()), canonical_code(&b.to_map()));
        assert_ne!(canonical_code(&a.to_map()), canonical_code(&a.mirror().to_map()));
    }
}
