//! Alexander polynomial of a knot from its Wirtinger presentation.

use super::poly::LaurentPoly;
use crate::diagram::{PlanarDiagram, PlanarMap};
use crate::error::{Error, Result};

/// Symmetric representative with `Δ(1) = 1`.
pub fn alexander(diagram: &PlanarDiagram) -> Result<LaurentPoly> {
    alexander_of_map(&diagram.to_map())
}

pub fn alexander_of_map(map: &PlanarMap) -> Result<LaurentPoly> {
    let k = map.component_count();
    if k != 1 {
        return Err(Error::NotAKnot(k));
    }
    let n = map.len();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let orient = map.orientation();
    let strand = &map.strands()[0];
    // Arcs run from one under-passage to the next; arc i starts after the
    // i-th under-passage along the traversal.
    let unders: Vec<usize> = (0..strand.len()).filter(|&i| !strand[i].is_over()).collect();
    let arcs = unders.len();
    let mut arc_at = vec![0usize; strand.len()];
    for (i, slot) in arc_at.iter_mut().enumerate() {
        // Index of the last under-passage at or before step i (cyclically).
        let pos = unders.partition_point(|&u| u <= i);
        *slot = if pos == 0 { arcs - 1 } else { pos - 1 };
    }
    let mut incoming = vec![0usize; n];
    let mut outgoing = vec![0usize; n];
    let mut over = vec![0usize; n];
    for (i, s) in strand.iter().enumerate() {
        let c = s.crossing;
        if s.is_over() {
            over[c] = arc_at[i];
        } else {
            outgoing[c] = arc_at[i];
            incoming[c] = arc_at[(i + strand.len() - 1) % strand.len()];
        }
    }
    let t = LaurentPoly::monomial(1, 1);
    let one = LaurentPoly::one();
    let mut m = vec![vec![LaurentPoly::zero(); arcs]; n];
    for c in 0..n {
        let (a, b) = if orient.sign(c) > 0 { (t.clone(), -&one) } else { (-&one, t.clone()) };
        m[c][over[c]] = &m[c][over[c]] + &(&one - &t);
        m[c][incoming[c]] = &m[c][incoming[c]] + &a;
        m[c][outgoing[c]] = &m[c][outgoing[c]] + &b;
    }
    let minor: Vec<Vec<LaurentPoly>> = m[..n - 1].iter().map(|r| r[..arcs - 1].to_vec()).collect();
    let det = poly_det(minor)?;
    Ok(normalize(&det))
}

/// Fraction-free elimination over `Z[t, t^-1]`.
fn poly_det(mut m: Vec<Vec<LaurentPoly>>) -> Result<LaurentPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else { return Ok(LaurentPoly::zero()) };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .div_exact(&prev)
                    .ok_or_else(|| Error::MalformedDiagram("inexact polynomial elimination".into()))?;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { -&d } else { d })
}

fn normalize(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let (lo, hi) = (p.min_exp().unwrap(), p.max_exp().unwrap());
    let centred = p.shift(-(lo + hi).div_euclid(2));
    if centred.at_one() < 0 {
        -&centred
    } else {
        centred
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::goeritz::determinant;

    #[test]
    fn trefoil_and_figure_eight() {
        let t = PlanarDiagram::from_pd(&[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]], 1).unwrap();
        assert_eq!(alexander(&t).unwrap(), LaurentPoly::from_terms([(-1, 1), (0, -1), (1, 1)]));
        let f8 = PlanarDiagram::from_pd(&[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]], 1).unwrap();
        let a = alexander(&f8).unwrap();
        assert_eq!(a, LaurentPoly::from_terms([(-1, -1), (0, 3), (1, -1)]));
        assert_eq!(a.at_minus_one().unsigned_abs(), determinant(&f8).unwrap());
    }

    #[test]
    fn links_are_rejected() {
        assert!(matches!(alexander(&PlanarDiagram::unlink(2)), Err(Error::NotAKnot(2))));
    }
}
