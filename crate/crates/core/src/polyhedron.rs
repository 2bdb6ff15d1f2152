//! Rational cones and pointed polyhedra in V-representation.
//!
//! Inequalities are derived on demand from the homogenization
//! `K = cone{(v,1), (r,0)} ⊂ Q^{n+1}`; facets of a cone are found by testing
//! every (d-1)-subset of generators, which is plenty at rank ≤ 4.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::{
    denominator_lcm, dot, int, is_zero_vec, orthogonal_complement, primitive, rank_of, to_qvec,
    QMatrix, QVec, Rational, ZVec,
};

/// Inequalities `<a,x> ≥ 0` and equations `<e,x> = 0` cutting out a cone.
#[derive(Clone, Debug, Default)]
pub(crate) struct HRep {
    pub ineqs: Vec<QVec>,
    pub eqs: Vec<QVec>,
}

impl HRep {
    fn contains(&self, x: &[Rational]) -> bool {
        self.ineqs.iter().all(|a| !dot(a, x).is_negative())
            && self.eqs.iter().all(|e| dot(e, x).is_zero())
    }
}

fn hrep_of(gens: &[QVec], dim: usize) -> HRep {
    let gens: Vec<QVec> = gens
        .iter()
        .filter(|g| !is_zero_vec(g))
        .map(|g| to_qvec(&primitive(g)))
        .sorted()
        .dedup()
        .collect();
    let eqs = orthogonal_complement(&gens, dim);
    let d = dim - eqs.len();
    let mut normals: BTreeSet<ZVec> = BTreeSet::new();
    if d > 0 {
        for subset in gens.iter().combinations(d - 1) {
            let mut rows: Vec<QVec> = subset.into_iter().cloned().collect();
            rows.extend(eqs.iter().cloned());
            let (rank, kernel) = QMatrix::from_rows(dim, &rows).rank_and_kernel();
            if rank != dim - 1 {
                continue;
            }
            let a = &kernel[0];
            let (mut pos, mut neg) = (false, false);
            for g in &gens {
                match dot(a, g).cmp(&Rational::zero()) {
                    Ordering::Greater => pos = true,
                    Ordering::Less => neg = true,
                    Ordering::Equal => {}
                }
            }
            if pos && neg {
                continue;
            }
            let mut n = primitive(a);
            if neg {
                n = n.into_iter().map(|x| -x).collect();
            }
            normals.insert(n);
        }
    }
    HRep {
        ineqs: normals.iter().map(|n| to_qvec(n)).collect(),
        eqs: eqs.iter().map(|e| to_qvec(&primitive(e))).collect(),
    }
}

/// Generators of `{x : <w,x> ≥ 0 for w in ws, <e,x> = 0 for e in eqs}`.
fn generators_of_hrep(ws: &[QVec], eqs: &[QVec], dim: usize) -> Vec<QVec> {
    let mut gens: Vec<QVec> = ws.to_vec();
    for e in eqs {
        gens.push(e.clone());
        gens.push(e.iter().map(|x| -x).collect());
    }
    let h = hrep_of(&gens, dim);
    let mut out = h.ineqs.clone();
    for e in &h.eqs {
        out.push(e.clone());
        out.push(e.iter().map(|x| -x).collect());
    }
    out
}

/// Finitely generated cone with canonical primitive generators.
#[derive(Clone)]
pub struct Cone {
    ambient: usize,
    rays: Vec<ZVec>,
    pointed: bool,
    hrep: Arc<HRep>,
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.rays == other.rays
    }
}
impl Eq for Cone {}

impl PartialOrd for Cone {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Cone {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ambient, &self.rays).cmp(&(other.ambient, &other.rays))
    }
}
impl Hash for Cone {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.rays.hash(state);
    }
}

impl fmt::Debug for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rays = self.rays.iter().map(|r| fmt_z(r)).join(", ");
        write!(f, "cone{{{rays}}}")
    }
}

fn fmt_z(v: &[BigInt]) -> String {
    format!("({})", v.iter().join(","))
}

fn fmt_q(v: &[Rational]) -> String {
    format!("({})", v.iter().join(","))
}

impl Cone {
    /// The cone generated by `gens`; zero vectors are ignored.
    pub fn new(ambient: usize, gens: &[QVec]) -> Cone {
        for g in gens {
            assert_eq!(g.len(), ambient, "generator length does not match ambient rank");
        }
        let hrep = hrep_of(gens, ambient);
        let mut cands: Vec<ZVec> = gens
            .iter()
            .filter(|g| !is_zero_vec(g))
            .map(|g| primitive(g))
            .sorted()
            .dedup()
            .collect();
        let mut normals = hrep.ineqs.clone();
        normals.extend(hrep.eqs.iter().cloned());
        let pointed = cands.is_empty() || rank_of(&normals, ambient) == ambient;
        if pointed {
            cands.retain(|g| {
                let q = to_qvec(g);
                let mut tight: Vec<QVec> = hrep
                    .ineqs
                    .iter()
                    .filter(|a| dot(a, &q).is_zero())
                    .cloned()
                    .collect();
                tight.extend(hrep.eqs.iter().cloned());
                rank_of(&tight, ambient) + 1 == ambient
            });
        } else {
            let mut i = 0;
            while i < cands.len() {
                let others: Vec<QVec> = cands
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, g)| to_qvec(g))
                    .collect();
                if hrep_of(&others, ambient).contains(&to_qvec(&cands[i])) {
                    cands.remove(i);
                } else {
                    i += 1;
                }
            }
        }
        Cone { ambient, rays: cands, pointed, hrep: Arc::new(hrep) }
    }

    pub fn from_rays(ambient: usize, rays: &[ZVec]) -> Cone {
        let q: Vec<QVec> = rays.iter().map(|r| to_qvec(r)).collect();
        Cone::new(ambient, &q)
    }

    pub fn from_i64(ambient: usize, rays: &[&[i64]]) -> Cone {
        let q: Vec<QVec> = rays.iter().map(|r| crate::exactla::qvec(r)).collect();
        Cone::new(ambient, &q)
    }

    pub fn origin(ambient: usize) -> Cone {
        Cone::new(ambient, &[])
    }

    /// `{x : <a,x> ≥ 0 for a in ineqs, <e,x> = 0 for e in eqs}`.
    pub fn from_inequalities(ambient: usize, ineqs: &[QVec], eqs: &[QVec]) -> Cone {
        Cone::new(ambient, &generators_of_hrep(ineqs, eqs, ambient))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rays(&self) -> &[ZVec] {
        &self.rays
    }

    pub fn ray_qvecs(&self) -> Vec<QVec> {
        self.rays.iter().map(|r| to_qvec(r)).collect()
    }

    pub fn is_pointed(&self) -> bool {
        self.pointed
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.hrep.eqs.len()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.hrep.eqs.is_empty()
    }

    pub fn is_origin(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn is_simplicial(&self) -> bool {
        self.pointed && self.rays.len() == self.dim()
    }

    pub fn facet_normals(&self) -> &[QVec] {
        &self.hrep.ineqs
    }

    pub fn equations(&self) -> &[QVec] {
        &self.hrep.eqs
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.hrep.contains(x)
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.rays.iter().all(|r| self.contains(&to_qvec(r)))
    }

    /// Equality as point sets (generators may differ for non-pointed cones).
    pub fn same_set(&self, other: &Cone) -> bool {
        self.ambient == other.ambient && self.contains_cone(other) && other.contains_cone(self)
    }

    pub fn dual(&self) -> Cone {
        let mut gens = self.hrep.ineqs.clone();
        for e in self.hrep.eqs.iter() {
            gens.push(e.clone());
            gens.push(e.iter().map(|x| -x).collect());
        }
        Cone::new(self.ambient, &gens)
    }

    /// A point in the relative interior: the sum of the generators.
    pub fn interior_point(&self) -> QVec {
        let mut p = vec![Rational::zero(); self.ambient];
        for r in &self.rays {
            for (a, b) in p.iter_mut().zip(r) {
                *a += Rational::from_integer(b.clone());
            }
        }
        p
    }
}

pub fn dual_cone(c: &Cone) -> Cone {
    c.dual()
}

/// Subsets of a polyhedron's vertex and ray lists spanning a face.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceDescriptor {
    pub vertex_subset: Vec<usize>,
    pub ray_subset: Vec<usize>,
    pub dim: usize,
}

/// A nonempty pointed polyhedron `conv(vertices) + tail`.
#[derive(Clone)]
pub struct Polyhedron {
    ambient: usize,
    vertices: Vec<QVec>,
    tail: Cone,
    hom: Arc<HRep>,
    faces: OnceLock<Arc<Vec<FaceDescriptor>>>,
}

impl PartialEq for Polyhedron {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.vertices == other.vertices && self.tail == other.tail
    }
}
impl Eq for Polyhedron {}

impl PartialOrd for Polyhedron {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Polyhedron {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ambient, &self.vertices, &self.tail).cmp(&(other.ambient, &other.vertices, &other.tail))
    }
}
impl Hash for Polyhedron {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.vertices.hash(state);
        self.tail.hash(state);
    }
}

impl fmt::Display for Polyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verts = self.vertices.iter().map(|v| fmt_q(v)).join(", ");
        if self.tail.is_origin() {
            write!(f, "conv{{{verts}}}")
        } else {
            write!(f, "conv{{{verts}}} + {}", self.tail)
        }
    }
}

impl fmt::Debug for Polyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn homogenize(v: &[Rational], t: i64) -> QVec {
    let mut h = v.to_vec();
    h.push(int(t));
    h
}

impl Polyhedron {
    /// `conv(points) + cone(rays)`; redundant points are dropped.
    pub fn from_raw(ambient: usize, points: &[QVec], rays: &[QVec]) -> Result<Polyhedron> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        for v in points.iter().chain(rays) {
            if v.len() != ambient {
                return Err(Error::RankMismatch(ambient, v.len()));
            }
        }
        let tail = Cone::new(ambient, rays);
        if !tail.is_pointed() {
            return Err(Error::NotPointed);
        }
        let mut gens: Vec<QVec> = points.iter().map(|p| homogenize(p, 1)).collect();
        gens.extend(tail.ray_qvecs().iter().map(|r| homogenize(r, 0)));
        let hom = hrep_of(&gens, ambient + 1);
        let vertices: Vec<QVec> = points
            .iter()
            .filter(|p| {
                let h = homogenize(p, 1);
                let mut tight: Vec<QVec> =
                    hom.ineqs.iter().filter(|a| dot(a, &h).is_zero()).cloned().collect();
                tight.extend(hom.eqs.iter().cloned());
                rank_of(&tight, ambient + 1) == ambient
            })
            .cloned()
            .sorted()
            .dedup()
            .collect();
        Ok(Polyhedron { ambient, vertices, tail, hom: Arc::new(hom), faces: OnceLock::new() })
    }

    pub fn point(v: QVec) -> Polyhedron {
        let n = v.len();
        Polyhedron::from_raw(n, &[v], &[]).expect("a point is a polyhedron")
    }

    /// The cone as a polyhedron with apex at the origin.
    pub fn from_cone(c: &Cone) -> Result<Polyhedron> {
        Polyhedron::from_raw(c.ambient(), &[vec![Rational::zero(); c.ambient()]], &c.ray_qvecs())
    }

    /// `{x : <a,x> ≥ b}` for every `(a,b)` in `ineqs` and `<e,x> = c` for `(e,c)` in `eqs`.
    /// `None` when infeasible.
    pub fn from_hrep(
        ambient: usize,
        ineqs: &[(QVec, Rational)],
        eqs: &[(QVec, Rational)],
    ) -> Result<Option<Polyhedron>> {
        let lift = |(a, b): &(QVec, Rational)| {
            let mut h = a.clone();
            h.push(-b.clone());
            h
        };
        let hi: Vec<QVec> = ineqs.iter().map(lift).collect();
        let he: Vec<QVec> = eqs.iter().map(lift).collect();
        Self::from_hom_hrep(ambient, hi, &he)
    }

    fn from_hom_hrep(ambient: usize, mut ineqs: Vec<QVec>, eqs: &[QVec]) -> Result<Option<Polyhedron>> {
        let mut t = vec![Rational::zero(); ambient + 1];
        t[ambient] = Rational::one();
        ineqs.push(t);
        let gens = generators_of_hrep(&ineqs, eqs, ambient + 1);
        let mut points = Vec::new();
        let mut rays = Vec::new();
        for g in gens {
            let t = g[ambient].clone();
            let x: QVec = g[..ambient].to_vec();
            if t.is_zero() {
                rays.push(x);
            } else {
                points.push(x.into_iter().map(|c| c / &t).collect());
            }
        }
        if points.is_empty() {
            return Ok(None);
        }
        Polyhedron::from_raw(ambient, &points, &rays).map(Some)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn vertices(&self) -> &[QVec] {
        &self.vertices
    }

    pub fn tail(&self) -> &Cone {
        &self.tail
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.hom.eqs.len()
    }

    pub fn is_bounded(&self) -> bool {
        self.tail.is_origin()
    }

    /// A single vertex at the origin, so the polyhedron equals its tail cone.
    pub fn is_cone(&self) -> bool {
        self.vertices.len() == 1 && is_zero_vec(&self.vertices[0])
    }

    /// Recession cone recomputed from the inequality description.
    pub fn recession_cone(&self) -> Cone {
        let strip = |v: &QVec| v[..self.ambient].to_vec();
        let ineqs: Vec<QVec> = self.hom.ineqs.iter().map(strip).collect();
        let eqs: Vec<QVec> = self.hom.eqs.iter().map(strip).collect();
        Cone::from_inequalities(self.ambient, &ineqs, &eqs)
    }

    /// Affine inequalities `(a, b)` meaning `<a,x> ≥ b`, and equations.
    pub fn inequalities(&self) -> (Vec<(QVec, Rational)>, Vec<(QVec, Rational)>) {
        let split = |h: &QVec| (h[..self.ambient].to_vec(), -h[self.ambient].clone());
        let ineqs = self
            .hom
            .ineqs
            .iter()
            .filter(|h| !is_zero_vec(&h[..self.ambient]))
            .map(split)
            .collect();
        (ineqs, self.hom.eqs.iter().map(split).collect())
    }

    pub fn contains_point(&self, x: &[Rational]) -> bool {
        self.hom.contains(&homogenize(x, 1))
    }

    pub fn contains(&self, other: &Polyhedron) -> bool {
        other.vertices.iter().all(|v| self.contains_point(v))
            && other.tail.rays().iter().all(|r| self.hom.contains(&homogenize(&to_qvec(r), 0)))
    }

    /// A relative-interior point: vertex barycenter plus the sum of tail rays.
    pub fn interior_point(&self) -> QVec {
        let k = int(self.vertices.len() as i64);
        let mut p = self.tail.interior_point();
        for v in &self.vertices {
            for (a, b) in p.iter_mut().zip(v) {
                *a += b / &k;
            }
        }
        p
    }

    fn generators(&self) -> Vec<QVec> {
        let mut gens: Vec<QVec> = self.vertices.iter().map(|v| homogenize(v, 1)).collect();
        gens.extend(self.tail.ray_qvecs().iter().map(|r| homogenize(r, 0)));
        gens
    }

    /// All nonempty faces, including the polyhedron itself, sorted by dimension.
    pub fn faces(&self) -> Arc<Vec<FaceDescriptor>> {
        self.faces.get_or_init(|| Arc::new(self.compute_faces())).clone()
    }

    fn compute_faces(&self) -> Vec<FaceDescriptor> {
        let gens = self.generators();
        assert!(gens.len() <= 64, "too many generators for face enumeration");
        let nv = self.vertices.len();
        let full: u64 = if gens.len() == 64 { u64::MAX } else { (1u64 << gens.len()) - 1 };
        let vertex_bits: u64 = (1u64 << nv) - 1;
        let mut family: BTreeSet<u64> = BTreeSet::from([full]);
        for a in &self.hom.ineqs {
            let mask = gens
                .iter()
                .enumerate()
                .filter(|(_, g)| dot(a, g).is_zero())
                .fold(0u64, |m, (i, _)| m | (1 << i));
            let new: Vec<u64> = family.iter().map(|s| s & mask).collect();
            family.extend(new);
        }
        let mut faces: Vec<FaceDescriptor> = family
            .into_iter()
            .filter(|m| m & vertex_bits != 0)
            .map(|m| {
                let members: Vec<QVec> = (0..gens.len())
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| gens[i].clone())
                    .collect();
                FaceDescriptor {
                    vertex_subset: (0..nv).filter(|i| m >> i & 1 == 1).collect(),
                    ray_subset: (nv..gens.len()).filter(|i| m >> i & 1 == 1).map(|i| i - nv).collect(),
                    dim: rank_of(&members, self.ambient + 1) - 1,
                }
            })
            .collect();
        faces.sort_by(|a, b| (a.dim, &a.vertex_subset, &a.ray_subset).cmp(&(b.dim, &b.vertex_subset, &b.ray_subset)));
        faces
    }

    pub fn face_polyhedron(&self, f: &FaceDescriptor) -> Polyhedron {
        let verts: Vec<QVec> = f.vertex_subset.iter().map(|&i| self.vertices[i].clone()).collect();
        let rays: Vec<QVec> = f.ray_subset.iter().map(|&i| to_qvec(&self.tail.rays()[i])).collect();
        Polyhedron::from_raw(self.ambient, &verts, &rays).expect("faces are pointed polyhedra")
    }

    pub fn face_polyhedra(&self) -> Vec<Polyhedron> {
        self.faces().iter().map(|f| self.face_polyhedron(f)).collect()
    }

    /// The cone `λ(F)` of functionals minimized exactly on `F`.
    pub fn normal_cone(&self, f: &FaceDescriptor) -> Cone {
        let v = &self.vertices[f.vertex_subset[0]];
        let diff = |w: &QVec| -> QVec { w.iter().zip(v).map(|(a, b)| a - b).collect() };
        let mut gens: Vec<QVec> = self.vertices.iter().map(diff).collect();
        gens.extend(self.tail.ray_qvecs());
        for &i in &f.vertex_subset {
            gens.push(diff(&self.vertices[i]).iter().map(|x| -x).collect());
        }
        for &i in &f.ray_subset {
            gens.push(to_qvec(&self.tail.rays()[i]).iter().map(|x| -x).collect());
        }
        Cone::new(self.ambient, &gens).dual()
    }

    /// Normal cones in the same order as [`Polyhedron::faces`].
    pub fn normal_fan(&self) -> Vec<Cone> {
        self.faces().iter().map(|f| self.normal_cone(f)).collect()
    }

    /// `min_{x ∈ P} <u,x>`, or `None` when unbounded below.
    pub fn support_min(&self, u: &[Rational]) -> Option<Rational> {
        if self.tail.rays().iter().any(|r| dot(u, &to_qvec(r)).is_negative()) {
            return None;
        }
        self.vertices.iter().map(|v| dot(u, v)).min()
    }

    pub fn translate(&self, shift: &[Rational]) -> Polyhedron {
        let verts: Vec<QVec> = self
            .vertices
            .iter()
            .map(|v| v.iter().zip(shift).map(|(a, b)| a + b).collect())
            .collect();
        Polyhedron::from_raw(self.ambient, &verts, &self.tail.ray_qvecs()).expect("translation preserves pointedness")
    }
}

fn check_rank(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::RankMismatch(a, b))
    }
}

pub fn tail_cone(p: Option<&Polyhedron>) -> Result<Cone> {
    p.map(|p| p.tail().clone()).ok_or(Error::EmptyInput)
}

pub fn minkowski_sum(p: &Polyhedron, q: &Polyhedron) -> Result<Polyhedron> {
    check_rank(p.ambient, q.ambient)?;
    let sums: Vec<QVec> = p
        .vertices
        .iter()
        .cartesian_product(q.vertices.iter())
        .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
        .collect();
    let mut rays = p.tail.ray_qvecs();
    rays.extend(q.tail.ray_qvecs());
    Polyhedron::from_raw(p.ambient, &sums, &rays)
}

pub fn intersect(p: &Polyhedron, q: &Polyhedron) -> Result<Option<Polyhedron>> {
    check_rank(p.ambient, q.ambient)?;
    let mut ineqs = p.hom.ineqs.clone();
    ineqs.extend(q.hom.ineqs.iter().cloned());
    let mut eqs = p.hom.eqs.clone();
    eqs.extend(q.hom.eqs.iter().cloned());
    Polyhedron::from_hom_hrep(p.ambient, ineqs, &eqs)
}

pub fn is_face_of(f: &Polyhedron, p: &Polyhedron) -> Result<bool> {
    check_rank(f.ambient, p.ambient)?;
    if !p.contains(f) {
        return Ok(false);
    }
    Ok(p.faces().iter().any(|d| &p.face_polyhedron(d) == f))
}

/// Smallest positive integer scaling `v` into the lattice.
pub fn mu(v: &[Rational]) -> BigInt {
    denominator_lcm(v)
}

/// Whether the cone meets the polyhedron; `false` for the empty polyhedron.
pub fn cone_meets_polyhedron(c: &Cone, p: Option<&Polyhedron>) -> Result<bool> {
    let Some(p) = p else { return Ok(false) };
    check_rank(c.ambient(), p.ambient)?;
    let lift = |v: &QVec| homogenize(v, 0);
    let mut ineqs = p.hom.ineqs.clone();
    ineqs.extend(c.facet_normals().iter().map(lift));
    let mut eqs = p.hom.eqs.clone();
    eqs.extend(c.equations().iter().map(lift));
    let mut t = vec![Rational::zero(); p.ambient + 1];
    t[p.ambient] = Rational::one();
    ineqs.push(t);
    let gens = generators_of_hrep(&ineqs, &eqs, p.ambient + 1);
    Ok(gens.iter().any(|g| g[p.ambient].is_positive()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{qvec, ratio};

    fn interval(a: Rational, b: Rational) -> Polyhedron {
        Polyhedron::from_raw(1, &[vec![a], vec![b]], &[]).unwrap()
    }

    fn half_line(a: Rational, dir: i64) -> Polyhedron {
        Polyhedron::from_raw(1, &[vec![a]], &[qvec(&[dir])]).unwrap()
    }

    #[test]
    fn tail_cones() {
        assert!(interval(int(0), int(1)).tail().is_origin());
        assert_eq!(half_line(int(1), 1).tail(), &Cone::from_i64(1, &[&[1]]));
        let square_plus = Polyhedron::from_raw(
            2,
            &[qvec(&[0, 0]), qvec(&[1, 0]), qvec(&[0, 1]), qvec(&[1, 1])],
            &[qvec(&[1, 0]), qvec(&[0, 1])],
        )
        .unwrap();
        assert_eq!(square_plus.tail(), &Cone::from_i64(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(square_plus.vertices(), &[qvec(&[0, 0])]);
        assert_eq!(square_plus.recession_cone(), *square_plus.tail());
        assert_eq!(tail_cone(None), Err(Error::EmptyInput));
    }

    #[test]
    fn not_pointed_is_rejected() {
        let r = Polyhedron::from_raw(1, &[qvec(&[0])], &[qvec(&[1]), qvec(&[-1])]);
        assert_eq!(r.unwrap_err(), Error::NotPointed);
    }

    #[test]
    fn minkowski_examples() {
        let s = minkowski_sum(&interval(int(0), int(1)), &interval(int(0), int(1))).unwrap();
        assert_eq!(s, interval(int(0), int(2)));
        let s = minkowski_sum(&half_line(ratio(-1, 2), -1), &half_line(int(0), -1)).unwrap();
        assert_eq!(s, half_line(ratio(-1, 2), -1));
        let bad = Polyhedron::point(qvec(&[0, 0]));
        assert_eq!(minkowski_sum(&bad, &interval(int(0), int(1))), Err(Error::RankMismatch(2, 1)));
    }

    #[test]
    fn dual_examples() {
        let pos = Cone::from_i64(1, &[&[1]]);
        assert_eq!(pos.dual(), pos);
        let dual_origin = Cone::origin(1).dual();
        assert_eq!(dual_origin.rays(), &[crate::exactla::zvec(&[-1]), crate::exactla::zvec(&[1])]);
        assert!(!dual_origin.is_pointed());
        let c = Cone::from_i64(2, &[&[1, 0], &[1, 2]]);
        assert_eq!(c.dual(), Cone::from_i64(2, &[&[0, 1], &[2, -1]]));
    }

    #[test]
    fn face_examples() {
        let seg = interval(int(0), int(1));
        let faces = seg.face_polyhedra();
        assert_eq!(faces, vec![Polyhedron::point(qvec(&[0])), Polyhedron::point(qvec(&[1])), seg.clone()]);
        let hl = half_line(int(1), 1);
        assert_eq!(hl.face_polyhedra(), vec![Polyhedron::point(qvec(&[1])), hl.clone()]);
        let f2 = interval(ratio(-1, 2), int(0));
        let dims: Vec<usize> = f2.faces().iter().map(|f| f.dim).collect();
        assert_eq!(dims, vec![0, 0, 1]);
    }

    #[test]
    fn normal_fan_examples() {
        let seg = interval(int(0), int(1));
        let fan = seg.normal_fan();
        assert_eq!(fan[0], Cone::from_i64(1, &[&[1]]));
        assert_eq!(fan[1], Cone::from_i64(1, &[&[-1]]));
        assert!(fan[2].is_origin());
        let pt = Polyhedron::point(qvec(&[0]));
        assert!(pt.normal_fan()[0].same_set(&Cone::from_i64(1, &[&[1], &[-1]])));
        let hl = half_line(int(1), 1);
        let fan = hl.normal_fan();
        assert_eq!(fan[0], Cone::from_i64(1, &[&[1]]));
        assert!(fan[1].is_origin());
    }

    #[test]
    fn intersection_examples() {
        let r = intersect(&interval(int(0), int(2)), &interval(int(1), int(3))).unwrap();
        assert_eq!(r, Some(interval(int(1), int(2))));
        let r = intersect(&half_line(int(0), 1), &half_line(int(0), -1)).unwrap();
        assert_eq!(r, Some(Polyhedron::point(qvec(&[0]))));
        let r = intersect(&interval(int(0), int(1)), &interval(int(2), int(3))).unwrap();
        assert_eq!(r, None);
    }

    #[test]
    fn face_relation() {
        let seg = interval(int(0), int(1));
        assert!(is_face_of(&Polyhedron::point(qvec(&[0])), &seg).unwrap());
        assert!(!is_face_of(&seg, &interval(int(0), int(2))).unwrap());
        assert!(is_face_of(&Polyhedron::point(qvec(&[1])), &half_line(int(1), 1)).unwrap());
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu(&qvec(&[0])), BigInt::from(1));
        assert_eq!(mu(&[ratio(-1, 2)]), BigInt::from(2));
        assert_eq!(mu(&[ratio(1, 3), ratio(1, 2)]), BigInt::from(6));
    }

    #[test]
    fn cone_meets_examples() {
        let pos = Cone::from_i64(1, &[&[1]]);
        let neg = Cone::from_i64(1, &[&[-1]]);
        assert!(cone_meets_polyhedron(&pos, Some(&half_line(int(1), 1))).unwrap());
        assert!(!cone_meets_polyhedron(&Cone::origin(1), Some(&half_line(int(1), 1))).unwrap());
        assert!(cone_meets_polyhedron(&neg, Some(&half_line(ratio(-1, 2), -1))).unwrap());
        assert!(!cone_meets_polyhedron(&pos, None).unwrap());
    }

    #[test]
    fn hrep_roundtrip() {
        // 0 ≤ x ≤ 1, y ≥ x
        let p = Polyhedron::from_hrep(
            2,
            &[(qvec(&[1, 0]), int(0)), (qvec(&[-1, 0]), int(-1)), (qvec(&[-1, 1]), int(0))],
            &[],
        )
        .unwrap()
        .unwrap();
        assert_eq!(p.vertices(), &[qvec(&[0, 0]), qvec(&[1, 1])]);
        assert_eq!(p.tail(), &Cone::from_i64(2, &[&[0, 1]]));
        let empty = Polyhedron::from_hrep(1, &[(qvec(&[1]), int(1)), (qvec(&[-1]), int(0))], &[]).unwrap();
        assert!(empty.is_none());
    }

    #[test]
    fn rank_zero_ambient() {
        let p = Polyhedron::point(vec![]);
        assert_eq!(p.dim(), 0);
        assert_eq!(p.faces().len(), 1);
        assert!(Cone::origin(0).is_pointed());
        assert!(Cone::origin(0).is_full_dimensional());
    }
}
