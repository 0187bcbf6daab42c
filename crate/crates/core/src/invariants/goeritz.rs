//! Link determinant from the Goeritz matrix of a checkerboard colouring.

use std::collections::HashMap;

use crate::diagram::{PlanarDiagram, PlanarMap, Slot};
use crate::error::{Error, Result};

/// `|det|` of the Goeritz matrix; 1 for the unknot, 0 for split links.
pub fn determinant(diagram: &PlanarDiagram) -> Result<u128> {
    map_determinant(&diagram.to_map())
}

pub fn map_determinant(map: &PlanarMap) -> Result<u128> {
    if map.is_empty() {
        return Ok(if map.free_loops() == 1 { 1 } else { 0 });
    }
    if map.free_loops() > 0 || map.connected_parts() > 1 {
        return Ok(0);
    }
    let goeritz = goeritz_matrix(map)?;
    let k = goeritz.len();
    if k <= 1 {
        return Ok(1);
    }
    let minor: Vec<Vec<i128>> = goeritz[..k - 1].iter().map(|row| row[..k - 1].to_vec()).collect();
    Ok(bareiss_det(minor)?.unsigned_abs())
}

/// Goeritz matrix over the shaded faces of the colouring in which the face
/// left of dart `(0, 0)` is shaded.
pub fn goeritz_matrix(map: &PlanarMap) -> Result<Vec<Vec<i128>>> {
    let faces = map.faces();
    let mut face_of: HashMap<Slot, usize> = HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        for &d in f {
            face_of.insert(d, i);
        }
    }
    // Adjacent faces across an edge get opposite colours.
    let mut colour = vec![None::<bool>; faces.len()];
    colour[face_of[&Slot::new(0, 0)]] = Some(true);
    let mut stack = vec![face_of[&Slot::new(0, 0)]];
    while let Some(f) = stack.pop() {
        let c = colour[f].unwrap();
        for &d in &faces[f] {
            let g = face_of[&map.partner(d)];
            match colour[g] {
                None => {
                    colour[g] = Some(!c);
                    stack.push(g);
                }
                Some(x) if x == c => {
                    return Err(Error::MalformedDiagram("diagram is not checkerboard colourable".into()))
                }
                _ => {}
            }
        }
    }
    let shaded: Vec<usize> = (0..faces.len()).filter(|&f| colour[f] == Some(true)).collect();
    let index: HashMap<usize, usize> = shaded.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let k = shaded.len();
    let mut g = vec![vec![0i128; k]; k];
    for c in 0..map.len() {
        // Corner between slots s and s+1 lies in the face left of dart (c, s).
        let f0 = face_of[&Slot::new(c, 0)];
        let (eta, a, b) = if colour[f0] == Some(true) {
            (1, f0, face_of[&Slot::new(c, 2)])
        } else {
            (-1, face_of[&Slot::new(c, 1)], face_of[&Slot::new(c, 3)])
        };
        if a == b {
            continue;
        }
        let (i, j) = (index[&a], index[&b]);
        g[i][j] -= eta;
        g[j][i] -= eta;
        g[i][i] += eta;
        g[j][j] += eta;
    }
    Ok(g)
}

/// Fraction-free Gaussian elimination over the integers.
pub fn bareiss_det(mut m: Vec<Vec<i128>>) -> Result<i128> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    let ov = || Error::Overflow("integer determinant");
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| m[r][k] != 0) else { return Ok(0) };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j]
                    .checked_mul(m[k][k])
                    .and_then(|a| m[i][k].checked_mul(m[k][j]).and_then(|b| a.checked_sub(b)))
                    .ok_or_else(ov)?;
                m[i][j] = v / prev;
            }
        }
        prev = m[k][k];
    }
    Ok(sign * m[n - 1][n - 1])
}
