//! Unoriented planar 4-valent maps: the working representation behind
//! [`PlanarDiagram`](super::PlanarDiagram).
//!
//! Every crossing has four slots numbered counterclockwise. The under-strand
//! always occupies slots 0 and 2, the over-strand slots 1 and 3. A strand
//! entering through slot `s` leaves through slot `s + 2`.

use std::collections::HashSet;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub crossing: usize,
    pub index: u8,
}

impl Slot {
    pub fn new(crossing: usize, index: u8) -> Self {
        Slot { crossing, index: index % 4 }
    }

    /// The slot `k` steps counterclockwise around the same crossing.
    pub fn rot(self, k: u8) -> Self {
        Slot::new(self.crossing, (self.index + k) % 4)
    }

    /// The slot on the far side of the crossing along the same strand.
    pub fn opposite(self) -> Self {
        self.rot(2)
    }

    pub fn is_over(self) -> bool {
        self.index % 2 == 1
    }
}

const DANGLING: Slot = Slot { crossing: usize::MAX, index: 0 };

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanarMap {
    partner: Vec<[Slot; 4]>,
    free_loops: usize,
}

/// Orientation data: for each crossing, the slot where the under-strand
/// enters and the slot where the over-strand enters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    pub under_in: Vec<u8>,
    pub over_in: Vec<u8>,
    /// Edge label of each slot, numbered consecutively along each component from 1.
    pub label: Vec<[u32; 4]>,
    pub components: usize,
}

impl Orientation {
    /// Writhe contribution of crossing `c`.
    pub fn sign(&self, c: usize) -> i32 {
        match (self.over_in[c] + 4 - self.under_in[c]) % 4 {
            3 => 1,
            1 => -1,
            _ => unreachable!("over and under strands share a slot"),
        }
    }

    pub fn writhe(&self) -> i32 {
        (0..self.under_in.len()).map(|c| self.sign(c)).sum()
    }
}

impl PlanarMap {
    pub fn empty(free_loops: usize) -> Self {
        PlanarMap { partner: Vec::new(), free_loops }
    }

    /// Builds a map from explicit slot pairings; every slot must be paired exactly once.
    pub fn from_links(crossings: usize, links: &[(Slot, Slot)], free_loops: usize) -> Result<Self> {
        let mut partner = vec![[DANGLING; 4]; crossings];
        for &(a, b) in links {
            for s in [a, b] {
                if s.crossing >= crossings || s.index > 3 {
                    return Err(Error::MalformedDiagram(format!("slot {s:?} out of range")));
                }
                if partner[s.crossing][s.index as usize] != DANGLING {
                    return Err(Error::MalformedDiagram(format!("slot {s:?} linked twice")));
                }
            }
            if a == b {
                return Err(Error::MalformedDiagram(format!("slot {a:?} linked to itself")));
            }
            partner[a.crossing][a.index as usize] = b;
            partner[b.crossing][b.index as usize] = a;
        }
        let map = PlanarMap { partner, free_loops };
        map.validate()?;
        Ok(map)
    }

    pub fn validate(&self) -> Result<()> {
        for c in 0..self.len() {
            for i in 0..4u8 {
                let s = Slot::new(c, i);
                let t = self.partner(s);
                if t == DANGLING || t.crossing >= self.len() || self.partner(t) != s || t == s {
                    return Err(Error::MalformedDiagram(format!("slot {s:?} is not properly paired")));
                }
            }
        }
        if !self.is_empty() {
            let v = self.len() as i64;
            let f = self.faces().len() as i64;
            let k = self.connected_parts() as i64;
            // Euler: V - E + F = 1 + k for a plane graph with k connected parts.
            if v - 2 * v + f != 1 + k {
                return Err(Error::MalformedDiagram("pairing is not planar".into()));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn partner(&self, s: Slot) -> Slot {
        self.partner[s.crossing][s.index as usize]
    }

    pub(crate) fn link(&mut self, a: Slot, b: Slot) {
        self.partner[a.crossing][a.index as usize] = b;
        self.partner[b.crossing][b.index as usize] = a;
    }

    pub(crate) fn push_crossing(&mut self) -> usize {
        self.partner.push([DANGLING; 4]);
        self.partner.len() - 1
    }

    pub(crate) fn add_free_loops(&mut self, k: usize) {
        self.free_loops += k;
    }

    pub(crate) fn remove_free_loop(&mut self) {
        self.free_loops -= 1;
    }

    /// The face to the left of a dart: a dart is a slot read as "leave the
    /// crossing through this slot". Returns the cyclic sequence of darts.
    pub fn face_of(&self, dart: Slot) -> Vec<Slot> {
        let mut out = vec![dart];
        let mut d = self.next_in_face(dart);
        while d != dart {
            out.push(d);
            d = self.next_in_face(d);
        }
        out
    }

    pub fn next_in_face(&self, dart: Slot) -> Slot {
        self.partner(dart).rot(3)
    }

    pub fn faces(&self) -> Vec<Vec<Slot>> {
        let mut seen = HashSet::new();
        let mut faces = Vec::new();
        for c in 0..self.len() {
            for i in 0..4 {
                let d = Slot::new(c, i);
                if seen.contains(&d) {
                    continue;
                }
                let f = self.face_of(d);
                seen.extend(f.iter().copied());
                faces.push(f);
            }
        }
        faces
    }

    /// Number of connected pieces of the underlying graph (free loops excluded).
    pub fn connected_parts(&self) -> usize {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut parts = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            parts += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(c) = stack.pop() {
                for i in 0..4 {
                    let t = self.partner(Slot::new(c, i)).crossing;
                    if !seen[t] {
                        seen[t] = true;
                        stack.push(t);
                    }
                }
            }
        }
        parts
    }

    /// Closed strands through crossings, each as the list of entering slots.
    pub fn strands(&self) -> Vec<Vec<Slot>> {
        let n = self.len();
        let mut visited = vec![[false; 4]; n];
        let mut out = Vec::new();
        // Components that pass under somewhere start at an under-entry, so the
        // orientation read from a PD code (slot 0 = incoming under) is preserved.
        let starts = (0..n)
            .map(|c| Slot::new(c, 0))
            .chain((0..n).map(|c| Slot::new(c, 1)))
            .collect::<Vec<_>>();
        for start in starts {
            if visited[start.crossing][start.index as usize] {
                continue;
            }
            let mut strand = Vec::new();
            let mut enter = start;
            loop {
                let exit = enter.opposite();
                visited[enter.crossing][enter.index as usize] = true;
                visited[exit.crossing][exit.index as usize] = true;
                strand.push(enter);
                enter = self.partner(exit);
                if enter == start {
                    break;
                }
            }
            out.push(strand);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.strands().len() + self.free_loops
    }

    pub fn orientation(&self) -> Orientation {
        let n = self.len();
        let mut under_in = vec![u8::MAX; n];
        let mut over_in = vec![u8::MAX; n];
        let mut label = vec![[0u32; 4]; n];
        let strands = self.strands();
        let mut next_label = 1u32;
        for strand in &strands {
            for &enter in strand {
                if enter.is_over() {
                    over_in[enter.crossing] = enter.index;
                } else {
                    under_in[enter.crossing] = enter.index;
                }
                // The edge arriving at `enter` gets the current label, the edge
                // leaving through the opposite slot gets the next one.
                label[enter.crossing][enter.index as usize] = next_label;
                let from = self.partner(enter);
                label[from.crossing][from.index as usize] = next_label;
                next_label += 1;
            }
        }
        Orientation { under_in, over_in, label, components: strands.len() + self.free_loops }
    }

    /// Removes `crossings`, joining the outside world through the given
    /// pass-through pairs of their slots. Closed circuits made only of
    /// pass-through pairs become free loops; removed slots without a
    /// pass-through partner are dropped.
    pub(crate) fn splice(&mut self, crossings: &[usize], through: &[(Slot, Slot)]) {
        let removed: HashSet<usize> = crossings.iter().copied().collect();
        let mut thr = std::collections::HashMap::new();
        for &(a, b) in through {
            thr.insert(a, b);
            thr.insert(b, a);
        }
        let mut used: HashSet<Slot> = HashSet::new();
        let mut new_links = Vec::new();
        for &c in crossings {
            for i in 0..4 {
                let s = Slot::new(c, i);
                let outside = self.partner(s);
                if removed.contains(&outside.crossing) || used.contains(&outside) {
                    continue;
                }
                // Walk from the outside slot through the removed region.
                let mut cur = s;
                let end = loop {
                    let Some(&nxt) = thr.get(&cur) else { break None };
                    used.insert(cur);
                    used.insert(nxt);
                    let p = self.partner(nxt);
                    if !removed.contains(&p.crossing) {
                        break Some(p);
                    }
                    cur = p;
                };
                if let Some(e) = end {
                    used.insert(outside);
                    used.insert(e);
                    new_links.push((outside, e));
                }
            }
        }
        // Remaining pass-through circuits inside the removed region.
        for &(a, _) in through {
            if used.contains(&a) {
                continue;
            }
            let mut cur = a;
            loop {
                let nxt = thr[&cur];
                used.insert(cur);
                used.insert(nxt);
                cur = self.partner(nxt);
                if cur == a {
                    break;
                }
            }
            self.free_loops += 1;
        }
        for (a, b) in new_links {
            self.link(a, b);
        }
        self.remove_crossings(&removed);
    }

    /// Drops crossings and renumbers the rest, keeping relative order.
    fn remove_crossings(&mut self, removed: &HashSet<usize>) {
        let mut new_index = vec![usize::MAX; self.len()];
        let mut k = 0;
        for (c, slot) in new_index.iter_mut().enumerate() {
            if !removed.contains(&c) {
                *slot = k;
                k += 1;
            }
        }
        let old = std::mem::take(&mut self.partner);
        for (c, row) in old.into_iter().enumerate() {
            if removed.contains(&c) {
                continue;
            }
            let row = row.map(|s| Slot::new(new_index[s.crossing], s.index));
            self.partner.push(row);
        }
    }

    /// Mirror image: exchanges over and under at every crossing.
    pub fn mirror(&self) -> PlanarMap {
        let n = self.len();
        let mut partner = vec![[DANGLING; 4]; n];
        for (c, row) in partner.iter_mut().enumerate() {
            for i in 0..4u8 {
                let t = self.partner(Slot::new(c, i));
                // Rotating every crossing by one slot swaps the strand roles.
                row[((i + 3) % 4) as usize] = Slot::new(t.crossing, (t.index + 3) % 4);
            }
        }
        PlanarMap { partner, free_loops: self.free_loops }
    }
}
