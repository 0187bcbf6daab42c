//! Kauffman bracket and Jones polynomial.
//!
//! The bracket is evaluated by sweeping crossings in a greedy order and
//! keeping, for every partial state, how the open edge ends are joined.
//! The Jones polynomial is reported in `s = t^(1/2)`; for knots only even
//! powers of `s` occur.

use std::collections::HashMap;

use super::poly::LaurentPoly;
use crate::diagram::{PlanarDiagram, PlanarMap};
use crate::error::{Error, Result};

pub const DEFAULT_JONES_CAP: usize = 24;

/// `delta = -A^2 - A^-2`, the value of an extra loop.
fn delta() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1), (-2, -1)])
}

/// Kauffman bracket in `A`, normalised so the one-loop diagram has bracket 1.
pub fn bracket(map: &PlanarMap) -> LaurentPoly {
    let n = map.len();
    if n == 0 {
        return pow(&delta(), map.free_loops().saturating_sub(1));
    }
    let labels = map.orientation().label;
    // Partial states: open-end pairing -> accumulated polynomial.
    let mut states: HashMap<Vec<(u32, u32)>, LaurentPoly> = HashMap::new();
    states.insert(Vec::new(), LaurentPoly::one());
    let d = delta();
    for c in sweep_order(map, &labels) {
        let l = labels[c];
        let mut next: HashMap<Vec<(u32, u32)>, LaurentPoly> = HashMap::new();
        for (state, poly) in states {
            let open: HashMap<u32, u32> =
                state.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
            // A-smoothing joins slots (0,1),(2,3); B-smoothing joins (1,2),(3,0).
            for (exp, pairs) in [(1, [(0, 1), (2, 3)]), (-1, [(1, 2), (3, 0)])] {
                let mut o = open.clone();
                let mut loops = 0;
                for (x, y) in pairs {
                    loops += join(&mut o, l[x], l[y]);
                }
                let mut term = poly.shift(exp);
                for _ in 0..loops {
                    term = &term * &d;
                }
                let key = encode(&o);
                let entry = next.entry(key).or_insert_with(LaurentPoly::zero);
                *entry = &*entry + &term;
            }
        }
        next.retain(|_, p| !p.is_zero());
        states = next;
    }
    let total = states.remove(&Vec::new()).unwrap_or_else(LaurentPoly::zero);
    let mut out = total.div_exact(&d).expect("every state has at least one loop");
    for _ in 0..map.free_loops() {
        out = &out * &d;
    }
    out
}

/// Joins edge ends `x` and `y` at the current crossing; returns 1 when a loop closes.
fn join(open: &mut HashMap<u32, u32>, x: u32, y: u32) -> usize {
    if x == y {
        return 1;
    }
    let fx = open.remove(&x);
    if fx == Some(y) {
        open.remove(&y);
        return 1;
    }
    let fy = open.remove(&y);
    let fx = fx.unwrap_or(x);
    let fy = fy.unwrap_or(y);
    open.insert(fx, fy);
    open.insert(fy, fx);
    0
}

fn encode(open: &HashMap<u32, u32>) -> Vec<(u32, u32)> {
    let mut v: Vec<(u32, u32)> = open.iter().filter(|(a, b)| a < b).map(|(&a, &b)| (a, b)).collect();
    v.sort_unstable();
    v
}

/// Greedy order: next crossing is the one sharing the most edges with the
/// processed set.
fn sweep_order(map: &PlanarMap, labels: &[[u32; 4]]) -> Vec<usize> {
    let n = map.len();
    let mut done = vec![false; n];
    let mut seen_edges: HashMap<u32, u8> = HashMap::new();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let best = (0..n)
            .filter(|&c| !done[c])
            .max_by_key(|&c| {
                let shared = labels[c].iter().filter(|e| seen_edges.contains_key(e)).count();
                (shared, std::cmp::Reverse(c))
            })
            .unwrap();
        done[best] = true;
        for e in labels[best] {
            *seen_edges.entry(e).or_insert(0) += 1;
        }
        order.push(best);
    }
    order
}

fn pow(p: &LaurentPoly, k: usize) -> LaurentPoly {
    (0..k).fold(LaurentPoly::one(), |acc, _| &acc * p)
}

/// Jones polynomial in `s = t^(1/2)` of an oriented diagram.
pub fn jones_of_map(map: &PlanarMap) -> LaurentPoly {
    let writhe = map.orientation().writhe();
    let b = bracket(map);
    // (-A^3)^(-w) <D>
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let f = b.shift(-3 * writhe).scale(sign);
    // s = A^-2: every exponent of A is even.
    let inverted = f.invert_variable();
    inverted.contract(2).expect("bracket exponents share parity with 2")
}

/// Jones polynomial, refusing diagrams with more than `cap` crossings.
pub fn jones_with_cap(diagram: &PlanarDiagram, cap: usize) -> Result<LaurentPoly> {
    let n = diagram.crossing_count();
    if n > cap {
        return Err(Error::CrossingCap { crossings: n, cap });
    }
    Ok(jones_of_map(&diagram.to_map()))
}

pub fn jones(diagram: &PlanarDiagram) -> Result<LaurentPoly> {
    jones_with_cap(diagram, DEFAULT_JONES_CAP)
}

/// Converts a knot's Jones polynomial from `s` to `t`; `None` if odd powers occur.
pub fn in_t(v: &LaurentPoly) -> Option<LaurentPoly> {
    v.contract(2)
}
