//! Numerator closures of rational tangles, built from continued fractions.
//!
//! This is an independent construction of two-bridge links used to check
//! the Schubert diagrams; it shares nothing with the pillowcase walk.

use super::map::{PlanarMap, Slot};
use super::PlanarDiagram;
use crate::arith::gcd;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum End {
    Slot(Slot),
    /// Joined by a bare arc to another port.
    Port(usize),
}

const NW: usize = 0;
const NE: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

// Crossing frame for both twist kinds: ne=0, nw=1, sw=2, se=3 (counterclockwise).
const X_NE: u8 = 0;
const X_NW: u8 = 1;
const X_SW: u8 = 2;
const X_SE: u8 = 3;

struct Builder {
    crossings: usize,
    links: Vec<(Slot, Slot)>,
    ports: [End; 4],
    free_loops: usize,
}

impl Builder {
    /// The zero tangle: arcs NW-NE and SW-SE.
    fn zero() -> Self {
        Builder {
            crossings: 0,
            links: Vec::new(),
            ports: [End::Port(NE), End::Port(NW), End::Port(SE), End::Port(SW)],
            free_loops: 0,
        }
    }

    fn attach(&mut self, port: usize, slot: Slot) {
        match self.ports[port] {
            End::Slot(s) => self.links.push((s, slot)),
            End::Port(j) => self.ports[j] = End::Slot(slot),
        }
    }

    fn crossing(&mut self, rot: u8) -> impl Fn(u8) -> Slot {
        let c = self.crossings;
        self.crossings += 1;
        move |frame| Slot::new(c, (frame + rot) % 4)
    }

    /// One twist of the two east ends.
    fn twist_east(&mut self) {
        let x = self.crossing(0);
        self.attach(NE, x(X_NW));
        self.attach(SE, x(X_SW));
        self.ports[NE] = End::Slot(x(X_NE));
        self.ports[SE] = End::Slot(x(X_SE));
    }

    /// One twist of the two south ends.
    fn twist_south(&mut self) {
        let x = self.crossing(0);
        self.attach(SW, x(X_NW));
        self.attach(SE, x(X_NE));
        self.ports[SW] = End::Slot(x(X_SW));
        self.ports[SE] = End::Slot(x(X_SE));
    }

    /// Joins NW to NE and SW to SE.
    fn numerator(mut self) -> Result<PlanarMap> {
        for (a, b) in [(NW, NE), (SW, SE)] {
            match (self.ports[a], self.ports[b]) {
                (End::Slot(s), End::Slot(t)) => self.links.push((s, t)),
                (End::Port(j), _) if j == b => self.free_loops += 1,
                (End::Port(j), End::Slot(t)) => {
                    self.ports[j] = End::Slot(t);
                }
                (End::Slot(s), End::Port(j)) => self.ports[j] = End::Slot(s),
                (End::Port(_), End::Port(_)) => unreachable!("bare arcs pair ports two by two"),
            }
        }
        PlanarMap::from_links(self.crossings, &self.links, self.free_loops)
    }
}

/// Continued-fraction terms `[a_0; a_1, ..., a_k]` of `p/q` with an odd number of terms.
pub fn odd_continued_fraction(p: i64, q: i64) -> Vec<i64> {
    let mut terms = Vec::new();
    let (mut a, mut b) = (p, q);
    while b != 0 {
        terms.push(a / b);
        (a, b) = (b, a % b);
    }
    if terms.len() % 2 == 0 {
        let last = terms.pop().expect("non-empty");
        terms.push(last - 1);
        terms.push(1);
    }
    terms
}

/// Diagram of the numerator closure `N(p/q)` of the rational tangle with
/// fraction `p/q`, for `p > q >= 1` coprime.
pub fn rational_closure(p: i64, q: i64) -> Result<PlanarDiagram> {
    if q < 1 || p <= q || gcd(p, q) != 1 {
        return Err(Error::Precondition(format!("rational closure needs p > q >= 1 coprime, got {p}/{q}")));
    }
    let terms = odd_continued_fraction(p, q);
    let mut b = Builder::zero();
    // Innermost term first; terms alternate east and south twists and the
    // integer part is applied last as east twists.
    for (i, &a) in terms.iter().rev().enumerate() {
        for _ in 0..a {
            if i % 2 == 0 {
                b.twist_east();
            } else {
                b.twist_south();
            }
        }
    }
    Ok(PlanarDiagram::from_map(&b.numerator()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::determinant;

    #[test]
    fn continued_fractions_have_odd_length_and_evaluate_back() {
        for (p, q) in [(5, 2), (7, 3), (16, 7), (13, 5), (9, 4)] {
            let terms = odd_continued_fraction(p, q);
            assert_eq!(terms.len() % 2, 1, "{p}/{q}: {terms:?}");
            let (mut num, mut den) = (1i64, 0i64);
            for &a in terms.iter().rev() {
                (num, den) = (a * num + den, num);
            }
            assert_eq!((num, den), (p, q));
        }
    }

    #[test]
    fn closure_determinant_is_numerator() {
        for (p, q) in [(3, 1), (5, 2), (7, 3), (8, 3), (13, 5)] {
            let d = rational_closure(p, q).unwrap();
            assert_eq!(determinant(&d).unwrap(), p as u128, "{p}/{q}");
        }
        assert!(rational_closure(6, 3).is_err());
    }
}
