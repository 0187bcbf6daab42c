//! Oracles and fixtures shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use lens_surgery::diagram::{schubert_diagram, PlanarDiagram, PlanarMap};
use lens_surgery::invariants::jones::jones_of_map;
use lens_surgery::invariants::moves::{apply, complicating_moves, simplifying_moves, Move};
use lens_surgery::invariants::LaurentPoly;
use lens_surgery::{canonical_form, LensParams};
use rand::seq::SliceRandom;
use rand::Rng;

pub type JonesSet = BTreeSet<Vec<(i32, i128)>>;

pub fn lp(p: i64, q: i64) -> LensParams {
    LensParams::new(p, q).unwrap()
}

pub fn coprime(a: i64, b: i64) -> bool {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a == 1
}

/// Canonical representatives with `p_min <= p <= p_max`.
pub fn canonical_lenses(p_min: i64, p_max: i64) -> Vec<LensParams> {
    let mut out = BTreeSet::new();
    for p in p_min..=p_max {
        for q in 1..p {
            if coprime(p, q) {
                out.insert(canonical_form(lp(p, q)));
            }
        }
    }
    out.into_iter().collect()
}

// Direct evaluation from the residue list, independent of the library's
// closed-form psi/phi.
pub fn naive_criterion_passes(p: i64, q: i64, u: i64) -> bool {
    let s: Vec<i64> = (1..p).map(|j| q * j % p).collect();
    let Some(idx) = s.iter().position(|&r| r == u) else { return false };
    let psi = idx as i64 + 1;
    let phi = s[..idx].iter().filter(|&&r| r < u).count() as i64;
    let v = p * phi - u * psi;
    v == 1 || v == -1 || v == 1 - p || v == -1 - p
}

// Brute-force orbit of q under q -> -q and q -> q^{-1} mod p.
pub fn orbit(p: i64, q: i64) -> BTreeSet<i64> {
    let inv = (1..p).find(|&x| q * x % p == 1).expect("coprime");
    [q, p - q, inv, p - inv].into_iter().collect()
}

/// Jones polynomials (in `s = t^{1/2}`) of every orientation of the
/// diagram, up to reversing all components at once. A planar map carries no
/// orientation, so for links this set, not a single polynomial, is what
/// Reidemeister moves must preserve.
pub fn oriented_jones(map: &PlanarMap) -> JonesSet {
    let base = jones_of_map(map);
    let strands = map.strands();
    let mut component = vec![[usize::MAX; 4]; map.len()];
    for (k, strand) in strands.iter().enumerate() {
        for enter in strand {
            component[enter.crossing][enter.index as usize] = k;
            component[enter.crossing][enter.opposite().index as usize] = k;
        }
    }
    let orient = map.orientation();
    let mut out = BTreeSet::new();
    for flipped in 0u32..(1 << strands.len().saturating_sub(1)) {
        // Reversing a set of components negates the sign of every crossing
        // between that set and its complement.
        let mut dw = 0i32;
        for (c, comps) in component.iter().enumerate() {
            let under = flipped >> comps[0] & 1;
            let over = flipped >> comps[1] & 1;
            if under != over {
                dw -= 2 * orient.sign(c);
            }
        }
        // V = (-A^3)^{-w} <D> with s = A^{-2}; dw is even.
        out.insert(base.shift(3 * dw / 2).terms().collect());
    }
    out
}

pub fn mirrored(set: &JonesSet) -> JonesSet {
    set.iter()
        .map(|v| LaurentPoly::from_terms(v.iter().copied()).invert_variable().terms().collect())
        .collect()
}

/// Knot and link diagrams with at most 12 crossings.
pub fn seed_diagrams() -> Vec<(String, PlanarMap)> {
    let mut seeds: Vec<(String, PlanarMap)> = vec![
        ("trefoil".into(), PlanarDiagram::from_pd(&[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]], 1).unwrap().to_map()),
        (
            "figure-eight".into(),
            PlanarDiagram::from_pd(&[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]], 1).unwrap().to_map(),
        ),
    ];
    for (p, q) in [(4, 1), (5, 2), (6, 1), (7, 2), (7, 3)] {
        seeds.push((format!("b({p},{q})"), schubert_diagram(lp(p, q)).unwrap().map().clone()));
    }
    seeds
}

/// Applies `len` random Reidemeister moves, drawing simplifying and
/// complicating moves with equal odds and only simplifying ones once the
/// diagram reaches `cap` crossings.
pub fn random_walk<R: Rng>(map: &PlanarMap, len: usize, cap: usize, rng: &mut R) -> (PlanarMap, Vec<Move>) {
    let mut map = map.clone();
    let mut moves = Vec::with_capacity(len);
    for _ in 0..len {
        let simplify = map.len() >= cap || rng.gen_bool(0.5);
        let mut options = if simplify { simplifying_moves(&map) } else { complicating_moves(&map, true) };
        if options.is_empty() {
            options = complicating_moves(&map, true);
        }
        let mv = *options.choose(rng).expect("some move applies");
        map = apply(&map, mv).unwrap_or_else(|e| panic!("{mv} failed: {e}"));
        moves.push(mv);
    }
    (map, moves)
}
