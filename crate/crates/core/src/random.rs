//! Seeded random complete complexes and fans in rank at most two.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complexes::PolyhedralComplex;
use crate::divfan::{Coefficient, CurveData, DivisorialFan, PDivisor, INFINITY_POINT, ZERO_POINT};
use crate::error::Result;
use crate::exactla::{int, ratio, QVec, Rational};
use crate::polyhedron::{Cone, Polyhedron};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Sorted distinct breakpoints with small denominators.
fn breakpoints(rng: &mut ChaCha8Rng, count: usize) -> Vec<Rational> {
    let mut pts: Vec<Rational> = Vec::new();
    while pts.len() < count {
        let q = ratio(rng.random_range(-12..=12), rng.random_range(1..=3));
        if !pts.contains(&q) {
            pts.push(q);
        }
    }
    pts.sort();
    pts
}

#[derive(Clone, Debug)]
enum Piece {
    Bounded(Rational, Rational),
    Below(Rational),
    Above(Rational),
}

fn pieces(bs: &[Rational]) -> Vec<Piece> {
    let mut out = vec![Piece::Below(bs[0].clone())];
    out.extend(bs.windows(2).map(|w| Piece::Bounded(w[0].clone(), w[1].clone())));
    out.push(Piece::Above(bs[bs.len() - 1].clone()));
    out
}

fn piece_data(p: &Piece) -> (Vec<Rational>, Option<i64>) {
    match p {
        Piece::Bounded(a, b) => (vec![a.clone(), b.clone()], None),
        Piece::Below(a) => (vec![a.clone()], Some(-1)),
        Piece::Above(a) => (vec![a.clone()], Some(1)),
    }
}

/// A subdivision of the line at `1..=max_breaks` random points.
pub fn complete_line_complex(rng: &mut ChaCha8Rng, max_breaks: usize) -> PolyhedralComplex {
    let k = rng.random_range(1..=max_breaks);
    let cells: Vec<Polyhedron> = pieces(&breakpoints(rng, k))
        .iter()
        .map(|p| {
            let (vs, r) = piece_data(p);
            let vs: Vec<QVec> = vs.into_iter().map(|v| vec![v]).collect();
            let rays: Vec<QVec> = r.into_iter().map(|d| vec![int(d)]).collect();
            Polyhedron::from_raw(1, &vs, &rays).expect("valid interval")
        })
        .collect();
    PolyhedralComplex::new(1, &cells).expect("subdivision of the line")
}

/// The product subdivision of the plane by two random line subdivisions.
pub fn complete_grid_complex(rng: &mut ChaCha8Rng, max_breaks: usize) -> PolyhedralComplex {
    let (kx, ky) = (rng.random_range(1..=max_breaks), rng.random_range(1..=max_breaks));
    let xs = pieces(&breakpoints(rng, kx));
    let ys = pieces(&breakpoints(rng, ky));
    let mut cells = Vec::new();
    for x in &xs {
        for y in &ys {
            let (xv, xr) = piece_data(x);
            let (yv, yr) = piece_data(y);
            let vs: Vec<QVec> = xv.iter().flat_map(|a| yv.iter().map(move |b| vec![a.clone(), b.clone()])).collect();
            let mut rays: Vec<QVec> = Vec::new();
            rays.extend(xr.map(|d| vec![int(d), int(0)]));
            rays.extend(yr.map(|d| vec![int(0), int(d)]));
            cells.push(Polyhedron::from_raw(2, &vs, &rays).expect("valid cell"));
        }
    }
    PolyhedralComplex::new(2, &cells).expect("grid subdivision")
}

fn cross(a: &[i64; 2], b: &[i64; 2]) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

fn angle(v: &[i64; 2]) -> f64 {
    (v[1] as f64).atan2(v[0] as f64)
}

/// A complete simplicial fan in the plane with `3..=max_rays` primitive rays.
pub fn complete_plane_fan(rng: &mut ChaCha8Rng, max_rays: usize) -> PolyhedralComplex {
    loop {
        let k = rng.random_range(3..=max_rays);
        let mut rays: Vec<[i64; 2]> = Vec::new();
        let mut tries = 0;
        while rays.len() < k && tries < 200 {
            tries += 1;
            let v = [rng.random_range(-3..=3i64), rng.random_range(-3..=3i64)];
            if v == [0, 0] || num_integer::gcd(v[0], v[1]) != 1 {
                continue;
            }
            if rays.iter().all(|r| cross(r, &v) != 0 || r[0] * v[0] + r[1] * v[1] < 0) && !rays.contains(&v) {
                rays.push(v);
            }
        }
        rays.sort_by(|a, b| angle(a).partial_cmp(&angle(b)).unwrap());
        let pointed = (0..rays.len()).all(|i| cross(&rays[i], &rays[(i + 1) % rays.len()]) > 0);
        if rays.len() < 3 || !pointed {
            continue;
        }
        let cones: Vec<Cone> = (0..rays.len())
            .map(|i| {
                let (a, b) = (rays[i], rays[(i + 1) % rays.len()]);
                Cone::from_i64(2, &[&a, &b])
            })
            .collect();
        return PolyhedralComplex::from_cones(2, &cones).expect("complete fan");
    }
}

pub fn complete_line_fan() -> PolyhedralComplex {
    PolyhedralComplex::from_cones(1, &[Cone::from_i64(1, &[&[1]]), Cone::from_i64(1, &[&[-1]])]).expect("line fan")
}

/// A random complete complex in rank one or two.
pub fn complete_complex(rng: &mut ChaCha8Rng) -> PolyhedralComplex {
    match rng.random_range(0..3) {
        0 => complete_line_complex(rng, 5),
        1 => complete_grid_complex(rng, 3),
        _ => complete_plane_fan(rng, 7),
    }
}

pub fn complete_tail_fan(rng: &mut ChaCha8Rng) -> PolyhedralComplex {
    if rng.random_bool(0.25) {
        complete_line_fan()
    } else {
        complete_plane_fan(rng, 7)
    }
}

/// `P1 × X_Σ` as a divisorial fan: every cone over the two affine charts of the base.
pub fn product_with_line(tail: &PolyhedralComplex) -> Result<DivisorialFan> {
    let curve = CurveData::rational(&[ZERO_POINT, INFINITY_POINT])?;
    let mut members = Vec::new();
    for c in tail.faces() {
        let cone = c.tail().clone();
        for excluded in [vec![ZERO_POINT], vec![INFINITY_POINT], vec![ZERO_POINT, INFINITY_POINT]] {
            let coeffs: BTreeMap<String, Coefficient> = excluded.iter().map(|l| (l.to_string(), Coefficient::Empty)).collect();
            members.push(PDivisor::new(cone.clone(), coeffs)?);
        }
    }
    Ok(DivisorialFan::new(tail.ambient(), curve, members)?.canonical())
}

pub fn int_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..rows).map(|_| (0..cols).map(|_| rng.random_range(-bound..=bound)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_complexes_are_complete() {
        let mut r = rng(7);
        for _ in 0..10 {
            let c = complete_complex(&mut r);
            assert!(c.is_complete(), "incomplete: {:?}", c.maximal_cells());
        }
        assert!(complete_plane_fan(&mut r, 6).is_fan());
    }

    #[test]
    fn product_fans_validate() {
        let mut r = rng(3);
        let s = product_with_line(&complete_tail_fan(&mut r)).unwrap();
        assert!(s.validate().passed(), "{:?}", s.validate());
        assert!(s.special_points().unwrap().is_empty());
    }
}
