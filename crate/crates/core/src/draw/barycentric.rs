//! Straight-line drawing of the rectangle graph with exact rational coordinates.
//!
//! Boundary vertices are spaced evenly by their index along L or M, so twins
//! share a coordinate by construction. Every interior vertex is placed at the
//! average of its neighbours.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cut::{Corner, Place, RectangleGraph};
use crate::par;

pub type Point = (BigRational, BigRational);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicDrawing {
    pub width: BigRational,
    pub height: BigRational,
    /// Per rectangle vertex.
    pub coords: Vec<Point>,
    /// Boundary perturbation round that produced this drawing (0 = none).
    pub perturbation: u32,
}

impl PeriodicDrawing {
    /// Coordinates as exact `"p/q"` strings.
    pub fn to_json(&self) -> serde_json::Value {
        let coords: Vec<[String; 2]> = self.coords.iter().map(|(x, y)| [x.to_string(), y.to_string()]).collect();
        serde_json::json!({
            "width": self.width.to_string(),
            "height": self.height.to_string(),
            "perturbation": self.perturbation,
            "coords": coords,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DrawError {
    #[error("barycentric system is singular")]
    Singular,
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Position parameter of boundary index `i` out of `len` under perturbation
/// round `round`: `(i + δ_i) / len` with |δ_i| < 1/2 and fixed endpoints.
pub fn boundary_parameter(i: usize, len: usize, round: u32) -> BigRational {
    let base = BigRational::new(BigInt::from(i), BigInt::from(len));
    if round == 0 || i == 0 || i == len {
        return base;
    }
    let wobble = ((i as i64 * 37 + round as i64 * 11) % 7) - 3;
    base + BigRational::new(BigInt::from(wobble), BigInt::from(8 * 7 * len as i64))
}

pub fn boundary_point(place: Place, r: &RectangleGraph, w: &BigRational, h: &BigRational, round: u32) -> Option<Point> {
    let zero = BigRational::zero;
    Some(match place {
        Place::Interior => return None,
        Place::Bottom(i) => (w * boundary_parameter(i, r.l_len, round), zero()),
        Place::Top(i) => (w * boundary_parameter(i, r.l_len, round), h.clone()),
        Place::Left(j) => (zero(), h * boundary_parameter(j, r.m_len, round)),
        Place::Right(j) => (w.clone(), h * boundary_parameter(j, r.m_len, round)),
        Place::Corner(Corner::BottomLeft) => (zero(), zero()),
        Place::Corner(Corner::BottomRight) => (w.clone(), zero()),
        Place::Corner(Corner::TopLeft) => (zero(), h.clone()),
        Place::Corner(Corner::TopRight) => (w.clone(), h.clone()),
    })
}

/// Solves `a · x = rhs` (two right-hand sides) by Gaussian elimination.
fn solve(mut rows: Vec<Vec<BigRational>>, parallel: bool) -> Result<Vec<(BigRational, BigRational)>, DrawError> {
    let n = rows.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !rows[r][col].is_zero()).ok_or(DrawError::Singular)?;
        rows.swap(col, pivot);
        let inv = BigRational::one() / &rows[col][col];
        let prow: Vec<BigRational> = rows[col].iter().map(|v| v * &inv).collect();
        rows[col] = prow.clone();
        let (_, below) = rows.split_at_mut(col + 1);
        par::for_each_mut(below, parallel, |row| {
            if row[col].is_zero() {
                return;
            }
            let f = row[col].clone();
            for (k, pv) in prow.iter().enumerate().skip(col) {
                if !pv.is_zero() {
                    row[k] -= &f * pv;
                }
            }
        });
    }
    let mut sol = vec![(BigRational::zero(), BigRational::zero()); n];
    for r in (0..n).rev() {
        let mut x = rows[r][n].clone();
        let mut y = rows[r][n + 1].clone();
        for c in r + 1..n {
            if !rows[r][c].is_zero() {
                x -= &rows[r][c] * &sol[c].0;
                y -= &rows[r][c] * &sol[c].1;
            }
        }
        sol[r] = (x, y);
    }
    Ok(sol)
}

pub fn draw(
    r: &RectangleGraph,
    width: &BigRational,
    height: &BigRational,
    round: u32,
    parallel: bool,
) -> Result<PeriodicDrawing, DrawError> {
    let g = &r.graph;
    let nv = g.num_vertices();
    let mut index = vec![usize::MAX; nv];
    let interior: Vec<usize> = (0..nv).filter(|&v| r.places[v] == Place::Interior).collect();
    for (i, &v) in interior.iter().enumerate() {
        index[v] = i;
    }
    let fixed: Vec<Option<Point>> = (0..nv).map(|v| boundary_point(r.places[v], r, width, height, round)).collect();
    let n = interior.len();
    let mut rows = vec![vec![BigRational::zero(); n + 2]; n];
    for (i, &v) in interior.iter().enumerate() {
        for end in g.rotation(v) {
            let u = g.vertex_of(end.opposite());
            if u == v {
                continue;
            }
            rows[i][i] += int(1);
            match &fixed[u] {
                Some((x, y)) => {
                    rows[i][n] += x;
                    rows[i][n + 1] += y;
                }
                None => rows[i][index[u]] -= int(1),
            }
        }
    }
    let sol = solve(rows, parallel)?;
    let mut sol = sol.into_iter();
    let coords = (0..nv)
        .map(|v| match &fixed[v] {
            Some(p) => p.clone(),
            None => sol.next().unwrap(),
        })
        .collect();
    Ok(PeriodicDrawing { width: width.clone(), height: height.clone(), coords, perturbation: round })
}
