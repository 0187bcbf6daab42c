//! PD-code diagrams and their text form.
//!
//! ```text
//! PD arcs=6 components=1
//! X[1,5,2,4]
//! X[3,1,4,6]
//! X[5,3,6,2]
//! ```
//!
//! Each `X[a,b,c,d]` lists the four edges at a crossing counterclockwise,
//! starting with the incoming under-strand. A diagram without crossings is a
//! header line only, and `components` counts its unknotted circles.

use std::collections::HashMap;
use std::fmt;

use super::map::{PlanarMap, Slot};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    crossings: Vec<[u32; 4]>,
    components: usize,
}

impl PlanarDiagram {
    /// `components` must be at least the number of closed strands through
    /// the crossings; any excess is carried as crossingless circles.
    pub fn from_pd(crossings: &[[u32; 4]], components: usize) -> Result<Self> {
        let d = PlanarDiagram { crossings: crossings.to_vec(), components };
        let map = d.build_map()?;
        let through = map.strands().len();
        if components < through {
            return Err(Error::MalformedDiagram(format!(
                "declared {components} components but the crossings form {through}"
            )));
        }
        if crossings.is_empty() && components == 0 {
            return Err(Error::MalformedDiagram("empty diagram".into()));
        }
        Ok(d)
    }

    /// Crossingless diagram of `k` unlinked circles.
    pub fn unlink(k: usize) -> Self {
        PlanarDiagram { crossings: Vec::new(), components: k.max(1) }
    }

    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    fn build_map(&self) -> Result<PlanarMap> {
        let mut ends: HashMap<u32, Vec<Slot>> = HashMap::new();
        for (c, x) in self.crossings.iter().enumerate() {
            for (i, &label) in x.iter().enumerate() {
                if label == 0 {
                    return Err(Error::MalformedDiagram("arc labels must be positive".into()));
                }
                ends.entry(label).or_default().push(Slot::new(c, i as u8));
            }
        }
        let mut links = Vec::with_capacity(ends.len());
        let mut labels: Vec<_> = ends.into_iter().collect();
        labels.sort_by_key(|(l, _)| *l);
        for (label, slots) in labels {
            if slots.len() != 2 {
                return Err(Error::MalformedDiagram(format!(
                    "arc {label} appears {} times, expected 2",
                    slots.len()
                )));
            }
            links.push((slots[0], slots[1]));
        }
        let map = PlanarMap::from_links(self.crossings.len(), &links, 0)?;
        // Under-strand direction must be consistent: an edge may not join two
        // incoming under slots or two outgoing ones.
        for c in 0..map.len() {
            for (i, j) in [(0u8, 0u8), (2, 2)] {
                let t = map.partner(Slot::new(c, i));
                if !t.is_over() && t.index == j {
                    return Err(Error::MalformedDiagram(format!(
                        "crossing {} has inconsistent under-strand orientation",
                        c + 1
                    )));
                }
            }
        }
        Ok(map)
    }

    pub fn to_map(&self) -> PlanarMap {
        let mut m = self.build_map().expect("validated at construction");
        let extra = self.components - m.strands().len();
        m.add_free_loops(extra);
        m
    }

    /// PD code of a map, edges labelled consecutively along each component.
    pub fn from_map(map: &PlanarMap) -> Self {
        let o = map.orientation();
        let crossings = (0..map.len())
            .map(|c| {
                let s = o.under_in[c] as usize;
                [0, 1, 2, 3].map(|k| o.label[c][(s + k) % 4])
            })
            .collect();
        PlanarDiagram { crossings, components: o.components.max(1) }
    }

    pub fn signs(&self) -> Vec<i32> {
        let o = self.to_map().orientation();
        (0..self.crossings.len()).map(|c| o.sign(c)).collect()
    }

    pub fn writhe(&self) -> i32 {
        self.signs().iter().sum()
    }

    pub fn mirror(&self) -> Self {
        Self::from_map(&self.to_map().mirror())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
        let perr = |line: usize, msg: &str| Error::Parse { line: line + 1, msg: msg.to_string() };
        let mut arcs = None;
        let mut comps = None;
        let mut words = header.split_whitespace();
        if words.next() != Some("PD") {
            return Err(perr(hline, "header must start with `PD`"));
        }
        for w in words {
            let (k, v) = w.split_once('=').ok_or_else(|| perr(hline, "expected key=value"))?;
            let v: usize = v.parse().map_err(|_| perr(hline, "expected a non-negative integer"))?;
            match k {
                "arcs" => arcs = Some(v),
                "components" => comps = Some(v),
                _ => return Err(perr(hline, "unknown header key")),
            }
        }
        let arcs = arcs.ok_or_else(|| perr(hline, "missing arcs="))?;
        let comps = comps.ok_or_else(|| perr(hline, "missing components="))?;
        let mut crossings = Vec::new();
        for (i, line) in lines {
            let body = line
                .trim()
                .strip_prefix("X[")
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| perr(i, "expected X[a,b,c,d]"))?;
            let nums: Vec<u32> = body
                .split(',')
                .map(|t| t.trim().parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| perr(i, "arc labels must be positive integers"))?;
            let x: [u32; 4] = nums.try_into().map_err(|_| perr(i, "a crossing has exactly four arcs"))?;
            crossings.push(x);
        }
        if arcs != 2 * crossings.len() {
            return Err(perr(hline, "arcs= does not match the crossing list"));
        }
        Self::from_pd(&crossings, comps)
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PD arcs={} components={}", self.arc_count(), self.components)?;
        for [a, b, c, d] in &self.crossings {
            writeln!(f, "X[{a},{b},{c},{d}]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "PD arcs=6 components=1\nX[1,5,2,4]\nX[3,1,4,6]\nX[5,3,6,2]\n";

    #[test]
    fn text_round_trip() {
        let d = PlanarDiagram::parse(TREFOIL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.to_string(), TREFOIL);
        assert_eq!(PlanarDiagram::from_map(&d.to_map()), d);
    }

    #[test]
    fn unknot_text() {
        let u = PlanarDiagram::unknot();
        assert_eq!(u.to_string(), "PD arcs=0 components=1\n");
        assert_eq!(PlanarDiagram::parse("PD arcs=0 components=2").unwrap().component_count(), 2);
    }

    #[test]
    fn parse_errors() {
        assert!(PlanarDiagram::parse("").is_err());
        assert!(PlanarDiagram::parse("PD arcs=2 components=1\nX[1,1,2]").is_err());
        assert!(PlanarDiagram::parse("PD arcs=4 components=1\nX[1,2,3,4]\nX[1,2,3,5]").is_err());
        assert!(PlanarDiagram::parse("PD arcs=6 components=1\nX[1,5,2,4]\nX[3,1,4,6]").is_err());
        assert!(PlanarDiagram::parse("PD arcs=6 components=0\nX[1,5,2,4]\nX[3,1,4,6]\nX[5,3,6,2]").is_err());
        assert!(PlanarDiagram::parse("PD arcs=0 components=0").is_err());
    }

    #[test]
    fn trefoil_signs() {
        let d = PlanarDiagram::parse(TREFOIL).unwrap();
        let s = d.signs();
        assert!(s.iter().all(|&x| x == s[0]));
        assert_eq!(d.mirror().writhe(), -d.writhe());
    }
}
