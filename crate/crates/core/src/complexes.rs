//! Polyhedral complexes: face posets, h-numbers, shellings, Cayley fans and
//! the toric components of the associated bouquet.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactla::{dot, int, smith_normal_form, QVec, Rational, ZMatrix};
use crate::polyhedron::{intersect, is_face_of, Cone, Polyhedron};

/// Largest number of maximal cells the exhaustive shelling search accepts.
pub const SHELLING_SEARCH_CAP: usize = 9;

#[derive(Clone, Debug)]
pub struct PolyhedralComplex {
    ambient: usize,
    /// Every face, sorted by dimension and then canonically.
    faces: Vec<Polyhedron>,
    index: BTreeMap<Polyhedron, usize>,
    /// `below[i]` lists the faces of face `i` (including `i`).
    below: Vec<Vec<usize>>,
    maximal: Vec<usize>,
}

impl PartialEq for PolyhedralComplex {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.maximal_cells() == other.maximal_cells()
    }
}
impl Eq for PolyhedralComplex {}

impl PolyhedralComplex {
    /// Builds the complex generated by `cells`; cells that are faces of other
    /// cells are absorbed.
    pub fn new(ambient: usize, cells: &[Polyhedron]) -> Result<PolyhedralComplex> {
        for c in cells {
            if c.ambient() != ambient {
                return Err(Error::RankMismatch(ambient, c.ambient()));
            }
        }
        let distinct: Vec<Polyhedron> = cells.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let mut maximal_cells = Vec::new();
        for (i, c) in distinct.iter().enumerate() {
            let mut absorbed = false;
            for (j, d) in distinct.iter().enumerate() {
                if i != j && d.contains(c) {
                    if !is_face_of(c, d)? {
                        return Err(Error::InvalidComplex(format!("{c} lies inside {d} without being a face")));
                    }
                    absorbed = true;
                }
            }
            if !absorbed {
                maximal_cells.push(c.clone());
            }
        }
        for (i, a) in maximal_cells.iter().enumerate() {
            for b in &maximal_cells[i + 1..] {
                if let Some(m) = intersect(a, b)? {
                    if !is_face_of(&m, a)? || !is_face_of(&m, b)? {
                        return Err(Error::InvalidComplex(format!("{a} and {b} meet in {m}, not a common face")));
                    }
                }
            }
        }
        let mut all: BTreeSet<(usize, Polyhedron)> = BTreeSet::new();
        for c in &maximal_cells {
            for f in c.face_polyhedra() {
                all.insert((f.dim(), f));
            }
        }
        let faces: Vec<Polyhedron> = all.into_iter().map(|(_, f)| f).collect();
        let index: BTreeMap<Polyhedron, usize> = faces.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
        let below = faces
            .iter()
            .map(|f| {
                let mut b: Vec<usize> = f.face_polyhedra().iter().map(|g| index[g]).collect();
                b.sort_unstable();
                b
            })
            .collect();
        let mut maximal: Vec<usize> = maximal_cells.iter().map(|c| index[c]).collect();
        maximal.sort_unstable();
        Ok(PolyhedralComplex { ambient, faces, index, below, maximal })
    }

    /// The fan whose maximal cones are `cones`.
    pub fn from_cones(ambient: usize, cones: &[Cone]) -> Result<PolyhedralComplex> {
        let cells: Vec<Polyhedron> = cones.iter().map(Polyhedron::from_cone).collect::<Result<_>>()?;
        PolyhedralComplex::new(ambient, &cells)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn faces(&self) -> &[Polyhedron] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &Polyhedron {
        &self.faces[i]
    }

    pub fn face_id(&self, p: &Polyhedron) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Indices of the faces of face `i`, itself included.
    pub fn faces_of(&self, i: usize) -> &[usize] {
        &self.below[i]
    }

    pub fn is_face_of_idx(&self, a: usize, b: usize) -> bool {
        self.below[b].binary_search(&a).is_ok()
    }

    pub fn maximal_ids(&self) -> &[usize] {
        &self.maximal
    }

    pub fn maximal_cells(&self) -> Vec<&Polyhedron> {
        self.maximal.iter().map(|&i| &self.faces[i]).collect()
    }

    pub fn is_fan(&self) -> bool {
        self.faces.iter().all(|f| f.is_cone())
    }

    /// Vertices of the complex (its 0-dimensional faces).
    pub fn vertices(&self) -> Vec<QVec> {
        self.faces.iter().filter(|f| f.dim() == 0).map(|f| f.vertices()[0].clone()).collect()
    }

    /// The rays of a fan: its 1-dimensional cones.
    pub fn rays(&self) -> Vec<Cone> {
        self.faces.iter().filter(|f| f.is_cone() && f.dim() == 1).map(|f| f.tail().clone()).collect()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        f_vector_of(self.ambient, self.faces.iter())
    }

    pub fn h_number(&self, k: usize) -> Result<i64> {
        if k > self.ambient {
            return Err(Error::IndexOutOfRange { index: k, max: self.ambient });
        }
        Ok(h_from_f(&self.f_vector(), k))
    }

    pub fn h_vector(&self) -> Vec<i64> {
        let f = self.f_vector();
        (0..=self.ambient).map(|k| h_from_f(&f, k)).collect()
    }

    pub fn maximal_cells_containing(&self, f: usize) -> Vec<usize> {
        self.maximal.iter().copied().filter(|&m| self.is_face_of_idx(f, m)).collect()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.ambient;
        if self.maximal.is_empty() {
            return false;
        }
        if self.maximal.iter().any(|&m| self.faces[m].dim() != n) {
            return false;
        }
        if n == 0 {
            return self.maximal.len() == 1;
        }
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); self.maximal.len()];
        for (i, f) in self.faces.iter().enumerate() {
            if f.dim() + 1 != n {
                continue;
            }
            let around: Vec<usize> = self
                .maximal
                .iter()
                .enumerate()
                .filter(|&(_, &m)| self.is_face_of_idx(i, m))
                .map(|(k, _)| k)
                .collect();
            if around.len() != 2 {
                return false;
            }
            adjacency[around[0]].push(around[1]);
            adjacency[around[1]].push(around[0]);
        }
        let mut seen = vec![false; self.maximal.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Every maximal cell has `dim + 1` vertices and rays in total, i.e. its
    /// cone `cone{(v,1),(r,0)}` is simplicial.
    pub fn is_simplicial(&self) -> bool {
        self.maximal.iter().all(|&m| {
            let c = &self.faces[m];
            c.vertices().len() + c.tail().rays().len() == c.dim() + 1
        })
    }

    /// The complex of tail cones; fails when tails do not meet in faces.
    pub fn tail_fan(&self) -> Result<PolyhedralComplex> {
        let tails: Vec<Cone> = self.faces.iter().map(|f| f.tail().clone()).collect::<BTreeSet<_>>().into_iter().collect();
        PolyhedralComplex::from_cones(self.ambient, &tails)
    }

    pub fn cayley_fan(&self) -> CayleyFan {
        let mut cones: BTreeSet<Cone> = BTreeSet::new();
        let maximal: Vec<Cone> = self.maximal.iter().map(|&m| homogenized_cone(&self.faces[m])).collect();
        for c in &maximal {
            for f in Polyhedron::from_cone(c).expect("cones over pointed polyhedra are pointed").face_polyhedra() {
                cones.insert(f.tail().clone());
            }
        }
        CayleyFan { ambient: self.ambient + 1, cones: cones.into_iter().collect(), maximal }
    }

    pub fn is_smooth(&self) -> bool {
        self.cayley_fan().maximal.iter().all(is_unimodular)
    }

    /// One fan per vertex `v`: the cones `Q≥0 (Δ - v)` for cells `Δ ∋ v`.
    pub fn bouquet_components(&self) -> Vec<(QVec, PolyhedralComplex)> {
        self.vertices()
            .into_iter()
            .map(|v| {
                let cones: Vec<Cone> = self
                    .maximal_cells()
                    .into_iter()
                    .filter(|c| c.vertices().contains(&v))
                    .map(|c| {
                        let mut gens: Vec<QVec> = c
                            .vertices()
                            .iter()
                            .map(|w| w.iter().zip(&v).map(|(a, b)| a - b).collect())
                            .collect();
                        gens.extend(c.tail().ray_qvecs());
                        Cone::new(self.ambient, &gens)
                    })
                    .collect();
                let fan = PolyhedralComplex::from_cones(self.ambient, &cones).expect("local cones at a vertex form a fan");
                (v, fan)
            })
            .collect()
    }

    pub fn find_shelling(&self) -> Result<ShellingData> {
        let seed = std::env::var("TVARTOP_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
        self.find_shelling_seeded(seed)
    }

    /// Sweeps cells by random generic functionals, then falls back to an
    /// exhaustive search over prefixes.
    pub fn find_shelling_seeded(&self, seed: u64) -> Result<ShellingData> {
        let k = self.maximal.len();
        for w in sweep_functionals(self.ambient, seed) {
            if let Ok(data) = self.shelling_by_functional(&w) {
                return Ok(data);
            }
        }
        if k > SHELLING_SEARCH_CAP {
            return Err(Error::SearchBudgetExceeded(k));
        }
        let mut dead: HashSet<u32> = HashSet::new();
        let mut order = Vec::with_capacity(k);
        if self.search(0, &mut order, &mut dead) {
            self.shelling_data(&order)
        } else {
            Err(Error::NotShellable)
        }
    }

    /// Orders maximal cells by the functional on their interior points.
    pub fn shelling_by_functional(&self, w: &[Rational]) -> Result<ShellingData> {
        let points: Vec<QVec> = self.maximal.iter().map(|&m| self.faces[m].interior_point()).collect();
        let mut order: Vec<usize> = (0..self.maximal.len()).collect();
        order.sort_by_key(|&i| dot(w, &points[i]));
        self.shelling_data(&order)
    }

    fn search(&self, used: u32, order: &mut Vec<usize>, dead: &mut HashSet<u32>) -> bool {
        if order.len() == self.maximal.len() {
            return true;
        }
        if dead.contains(&used) {
            return false;
        }
        for c in 0..self.maximal.len() {
            if used >> c & 1 == 1 {
                continue;
            }
            let earlier: Vec<usize> = order.clone();
            if self.minimal_new_face(&earlier, c).is_some() {
                order.push(c);
                if self.search(used | 1 << c, order, dead) {
                    return true;
                }
                order.pop();
            }
        }
        dead.insert(used);
        false
    }

    /// The unique minimal face of cell `c` not lying in any earlier cell.
    fn minimal_new_face(&self, earlier: &[usize], c: usize) -> Option<usize> {
        let cell = self.maximal[c];
        let new: Vec<usize> = self.below[cell]
            .iter()
            .copied()
            .filter(|&f| earlier.iter().all(|&e| !self.is_face_of_idx(f, self.maximal[e])))
            .collect();
        let minimal: Vec<usize> = new
            .iter()
            .copied()
            .filter(|&f| new.iter().all(|&g| g == f || !self.is_face_of_idx(g, f)))
            .collect();
        (minimal.len() == 1).then(|| minimal[0])
    }

    /// Shelling data for an order of maximal cells (indices into
    /// [`PolyhedralComplex::maximal_cells`]).
    pub fn shelling_data(&self, order: &[usize]) -> Result<ShellingData> {
        let mut minimal_new_faces = Vec::with_capacity(order.len());
        for (i, &c) in order.iter().enumerate() {
            let g = self.minimal_new_face(&order[..i], c).ok_or(Error::NotShellable)?;
            minimal_new_faces.push(g);
        }
        let face_index = (0..self.faces.len())
            .map(|f| {
                order
                    .iter()
                    .position(|&c| self.is_face_of_idx(f, self.maximal[c]))
                    .expect("every face lies in a maximal cell")
            })
            .collect();
        Ok(ShellingData { order: order.to_vec(), minimal_new_faces, face_index })
    }
}

/// Seeded generic functionals for the shelling sweep, each followed by its negative.
pub fn sweep_functionals(ambient: usize, seed: u64) -> Vec<QVec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..8 {
        let w: QVec = (0..ambient).map(|_| int(rng.random_range(-1000..=1000))).collect();
        out.push(w.iter().map(|x| -x).collect());
        out.push(w);
    }
    out
}

/// A shelling: `order` indexes maximal cells, `minimal_new_faces[i]` is the
/// face id of `G_i`, `face_index[f]` is the first position whose cell holds `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingData {
    pub order: Vec<usize>,
    pub minimal_new_faces: Vec<usize>,
    pub face_index: Vec<usize>,
}

/// Rechecks a shelling from the polyhedra alone, without the face tables.
pub fn verify_shelling(t: &PolyhedralComplex, data: &ShellingData) -> std::result::Result<(), String> {
    let cells = t.maximal_cells();
    let mut seen: Vec<usize> = data.order.clone();
    seen.sort_unstable();
    if seen != (0..cells.len()).collect::<Vec<_>>() {
        return Err("order is not a permutation of the maximal cells".into());
    }
    for (i, &c) in data.order.iter().enumerate() {
        let earlier: Vec<&Polyhedron> = data.order[..i].iter().map(|&j| cells[j]).collect();
        let new: Vec<Polyhedron> = cells[c]
            .face_polyhedra()
            .into_iter()
            .filter(|f| !earlier.iter().any(|e| e.contains(f)))
            .collect();
        let g = t.face(data.minimal_new_faces[i]);
        if !new.contains(g) {
            return Err(format!("G_{i} = {g} is not a new face of {}", cells[c]));
        }
        for f in &new {
            if !is_face_of(g, f).map_err(|e| e.to_string())? {
                return Err(format!("new face {f} of position {i} does not contain G_{i} = {g}"));
            }
        }
    }
    Ok(())
}

pub fn f_vector_of<'a>(ambient: usize, faces: impl Iterator<Item = &'a Polyhedron>) -> Vec<usize> {
    let mut f = vec![0; ambient + 1];
    for p in faces {
        f[p.dim()] += 1;
    }
    f
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

/// `h^k = Σ_{l≥k} (-1)^{l-k} C(l,k) f_{n-l}` for a dimension-indexed `f`.
pub fn h_from_f(f: &[usize], k: usize) -> i64 {
    let n = f.len() - 1;
    (k..=n)
        .map(|l| {
            let term = binomial(l, k) * f[n - l] as i64;
            if (l - k) % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `cone{(v,1), (r,0)}` over a polyhedron.
pub fn homogenized_cone(p: &Polyhedron) -> Cone {
    let mut gens: Vec<QVec> = p
        .vertices()
        .iter()
        .map(|v| {
            let mut h = v.clone();
            h.push(Rational::one());
            h
        })
        .collect();
    for r in p.tail().ray_qvecs() {
        let mut h = r;
        h.push(Rational::zero());
        gens.push(h);
    }
    Cone::new(p.ambient() + 1, &gens)
}

/// Simplicial with primitive generators forming part of a lattice basis.
pub fn is_unimodular(c: &Cone) -> bool {
    if !c.is_simplicial() {
        return false;
    }
    if c.rays().is_empty() {
        return true;
    }
    let m = ZMatrix::from_rows(c.ambient(), c.rays());
    smith_normal_form(&m).diagonal.iter().all(|d| d == &BigInt::from(1))
}

/// Cones over the cells at height 1 and their tails at height 0.
#[derive(Clone, Debug)]
pub struct CayleyFan {
    pub ambient: usize,
    pub cones: Vec<Cone>,
    pub maximal: Vec<Cone>,
}

impl CayleyFan {
    /// The polyhedra `{x : (x,h) ∈ C}` for all cones meeting that level.
    pub fn slice(&self, height: i64) -> Vec<Polyhedron> {
        let n = self.ambient - 1;
        let h = int(height);
        let mut out: BTreeSet<Polyhedron> = BTreeSet::new();
        for c in &self.cones {
            let lift = |a: &QVec| (a[..n].to_vec(), -(&a[n] * &h));
            let ineqs: Vec<(QVec, Rational)> = c.facet_normals().iter().map(lift).collect();
            let eqs: Vec<(QVec, Rational)> = c.equations().iter().map(lift).collect();
            if let Some(p) = Polyhedron::from_hrep(n, &ineqs, &eqs).expect("slices of pointed cones are pointed") {
                out.insert(p);
            }
        }
        out.into_iter().collect()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::exactla::{qvec, ratio};

    fn cell(points: &[Rational], ray: i64) -> Polyhedron {
        let pts: Vec<QVec> = points.iter().map(|p| vec![p.clone()]).collect();
        let rays = if ray == 0 { vec![] } else { vec![qvec(&[ray])] };
        Polyhedron::from_raw(1, &pts, &rays).unwrap()
    }

    pub(crate) fn line_fan() -> PolyhedralComplex {
        PolyhedralComplex::from_cones(1, &[Cone::from_i64(1, &[&[1]]), Cone::from_i64(1, &[&[-1]])]).unwrap()
    }

    pub(crate) fn chain() -> PolyhedralComplex {
        PolyhedralComplex::new(1, &[cell(&[int(0)], -1), cell(&[int(0), int(1)], 0), cell(&[int(1)], 1)]).unwrap()
    }

    pub(crate) fn p2_fan() -> PolyhedralComplex {
        PolyhedralComplex::from_cones(
            2,
            &[
                Cone::from_i64(2, &[&[1, 0], &[0, 1]]),
                Cone::from_i64(2, &[&[0, 1], &[-1, -1]]),
                Cone::from_i64(2, &[&[-1, -1], &[1, 0]]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn f_and_h() {
        assert_eq!(line_fan().f_vector(), vec![1, 2]);
        assert_eq!(chain().f_vector(), vec![2, 3]);
        assert_eq!(p2_fan().f_vector(), vec![1, 3, 3]);
        assert_eq!(line_fan().h_vector(), vec![1, 1]);
        assert_eq!(chain().h_vector(), vec![1, 2]);
        assert_eq!(p2_fan().h_vector(), vec![1, 1, 1]);
        assert_eq!(chain().h_number(2), Err(Error::IndexOutOfRange { index: 2, max: 1 }));
    }

    #[test]
    fn completeness() {
        assert!(line_fan().is_complete());
        assert!(chain().is_complete());
        assert!(p2_fan().is_complete());
        let seg = PolyhedralComplex::new(1, &[cell(&[int(0), int(1)], 0)]).unwrap();
        assert!(!seg.is_complete());
    }

    #[test]
    fn simpliciality() {
        assert!(chain().is_simplicial());
        assert!(p2_fan().is_simplicial());
        let square = Polyhedron::from_raw(2, &[qvec(&[0, 0]), qvec(&[1, 0]), qvec(&[0, 1]), qvec(&[1, 1])], &[]).unwrap();
        assert!(!PolyhedralComplex::new(2, &[square]).unwrap().is_simplicial());
    }

    #[test]
    fn invalid_overlap() {
        let r = PolyhedralComplex::new(1, &[cell(&[int(0), int(2)], 0), cell(&[int(1), int(3)], 0)]);
        assert!(matches!(r, Err(Error::InvalidComplex(_))));
    }

    #[test]
    fn line_fan_shelling() {
        let t = line_fan();
        let cells = t.maximal_cells();
        let pos = cells.iter().position(|c| c.tail() == &Cone::from_i64(1, &[&[1]])).unwrap();
        let order = vec![pos, 1 - pos];
        let data = t.shelling_data(&order).unwrap();
        assert_eq!(t.face(data.minimal_new_faces[0]), &Polyhedron::point(qvec(&[0])));
        assert_eq!(t.face(data.minimal_new_faces[1]), cells[1 - pos]);
        verify_shelling(&t, &data).unwrap();
    }

    #[test]
    fn chain_shelling() {
        let t = chain();
        let cells = t.maximal_cells();
        let want = [cell(&[int(0)], -1), cell(&[int(0), int(1)], 0), cell(&[int(1)], 1)];
        let order: Vec<usize> = want.iter().map(|w| cells.iter().position(|c| *c == w).unwrap()).collect();
        let data = t.shelling_data(&order).unwrap();
        let g: Vec<&Polyhedron> = data.minimal_new_faces.iter().map(|&i| t.face(i)).collect();
        assert_eq!(g, vec![&Polyhedron::point(qvec(&[0])), &Polyhedron::point(qvec(&[1])), &want[2]]);
        // Starting in the middle leaves two minimal vertices.
        assert!(t.shelling_data(&[order[1], order[0], order[2]]).is_err());
        let found = t.find_shelling_seeded(3).unwrap();
        verify_shelling(&t, &found).unwrap();
    }

    #[test]
    fn p1p1_any_sweep() {
        let quadrants: Vec<Cone> = [[1, 1], [1, -1], [-1, 1], [-1, -1]]
            .iter()
            .map(|[a, b]| Cone::from_i64(2, &[&[*a, 0], &[0, *b]]))
            .collect();
        let t = PolyhedralComplex::from_cones(2, &quadrants).unwrap();
        for seed in 0..5 {
            let d = t.find_shelling_seeded(seed).unwrap();
            verify_shelling(&t, &d).unwrap();
        }
    }

    #[test]
    fn cayley_examples() {
        let pt = PolyhedralComplex::new(1, &[Polyhedron::point(qvec(&[0]))]).unwrap();
        let cf = pt.cayley_fan();
        assert_eq!(cf.cones, vec![Cone::origin(2), Cone::from_i64(2, &[&[0, 1]])]);

        let cf = chain().cayley_fan();
        assert_eq!(cf.maximal.len(), 3);
        assert_eq!(cf.slice(1), chain().faces().to_vec().into_iter().collect::<BTreeSet<_>>().into_iter().collect::<Vec<_>>());
        let tails: Vec<Polyhedron> = chain().tail_fan().unwrap().faces().to_vec().into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        assert_eq!(cf.slice(0), tails);

        let cf = line_fan().cayley_fan();
        assert_eq!(cf.maximal.len(), 2);
        assert!(cf.maximal.contains(&Cone::from_i64(2, &[&[1, 0], &[0, 1]])));
        assert!(cf.maximal.contains(&Cone::from_i64(2, &[&[-1, 0], &[0, 1]])));
    }

    #[test]
    fn smoothness() {
        assert!(chain().is_smooth());
        assert!(p2_fan().is_smooth());
        let half = PolyhedralComplex::new(1, &[cell(&[ratio(1, 2)], 1)]).unwrap();
        assert!(!half.is_smooth());
    }

    #[test]
    fn bouquet() {
        let seg = PolyhedralComplex::new(1, &[cell(&[int(0), int(1)], 0)]).unwrap();
        let comps = seg.bouquet_components();
        assert_eq!(comps.len(), 2);
        for (_, fan) in &comps {
            assert_eq!(fan.f_vector(), vec![1, 1]);
        }
        let comps = chain().bouquet_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|(_, fan)| fan.is_complete() && fan == &line_fan()));
        let comps = line_fan().bouquet_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].1, line_fan());
    }
}
