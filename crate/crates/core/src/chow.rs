//! The presentation `Q[D_ρ, D_(p,v)] / I` of the Chow ring of the toroidal
//! resolution, its Hilbert function, and specialization maps between slices.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::complexes::{sweep_functionals, PolyhedralComplex, ShellingData};
use crate::divfan::{DivisorialFan, SlicePoint};
use crate::error::{Error, Result};
use crate::exactla::{dot, int, to_qvec, PivotStrategy, QMatrix, QVec, Rational, ZVec};
use crate::polyhedron::{mu, Polyhedron};

pub const GENERIC_POINTS: [&str; 2] = ["@g1", "@g2"];
pub const MAX_GENERATORS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    Horizontal { ray: ZVec },
    Vertical { point: String, vertex: QVec },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub name: String,
}

fn fmt_vec<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl Generator {
    fn horizontal(ray: ZVec) -> Self {
        let name = format!("D_rho({})", fmt_vec(&ray));
        Generator { kind: GeneratorKind::Horizontal { ray }, name }
    }

    fn vertical(point: &str, vertex: QVec) -> Self {
        let name = format!("D_({point};{})", fmt_vec(&vertex));
        Generator { kind: GeneratorKind::Vertical { point: point.to_string(), vertex }, name }
    }
}

#[derive(Clone, Debug)]
pub struct ChowPresentation {
    pub rank: usize,
    pub generators: Vec<Generator>,
    /// Rows are relations in generator coordinates.
    pub linear_relations: QMatrix,
    /// Minimal generator sets with empty common intersection.
    pub nonface_sets: Vec<Vec<usize>>,
    faces: BTreeSet<Vec<usize>>,
}

fn subsets_closure(supports: impl IntoIterator<Item = Vec<usize>>) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for mut s in supports {
        s.sort_unstable();
        s.dedup();
        for mask in 0u32..(1 << s.len()) {
            out.insert((0..s.len()).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect::<Vec<_>>());
        }
    }
    out
}

/// Slices carrying vertical generators: special points, then two generic ones.
fn carrier_slices(s: &DivisorialFan) -> Result<Vec<(String, PolyhedralComplex)>> {
    let mut out = Vec::new();
    for p in s.special_points()? {
        let slice = s.slice(SlicePoint::Label(&p))?;
        out.push((p, slice));
    }
    let tail = s.tail_fan()?;
    for g in GENERIC_POINTS {
        out.push((g.to_string(), tail.clone()));
    }
    Ok(out)
}

pub fn presentation(s: &DivisorialFan) -> Result<ChowPresentation> {
    if s.curve().genus != 0 {
        return Err(Error::GenusNotZero(s.curve().genus));
    }
    let n = s.rank();
    if n == 0 {
        return Err(Error::Invalid("lattice rank must be at least 1".into()));
    }
    let tail = s.tail_fan()?;
    let mut rays: Vec<ZVec> = tail.rays().iter().map(|c| c.rays()[0].clone()).collect();
    rays.sort_by(|a, b| b.cmp(a));
    let mut generators: Vec<Generator> = rays.iter().cloned().map(Generator::horizontal).collect();
    let ray_index: HashMap<ZVec, usize> = rays.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();

    let carriers = carrier_slices(s)?;
    let mut vertical: BTreeMap<(String, QVec), usize> = BTreeMap::new();
    for (p, slice) in &carriers {
        for v in slice.vertices() {
            vertical.insert((p.clone(), v.clone()), generators.len());
            generators.push(Generator::vertical(p, v));
        }
    }

    let mut supports: Vec<Vec<usize>> = Vec::new();
    for f in tail.faces() {
        let mut sup: Vec<usize> = f.tail().rays().iter().map(|r| ray_index[r]).collect();
        sup.sort_unstable();
        supports.push(sup);
    }
    for (p, slice) in &carriers {
        for f in slice.faces() {
            let mut sup: Vec<usize> = f.tail().rays().iter().map(|r| ray_index[r]).collect();
            sup.extend(f.vertices().iter().map(|v| vertical[&(p.clone(), v.clone())]));
            sup.sort_unstable();
            supports.push(sup);
        }
    }
    let faces = subsets_closure(supports);

    let g = generators.len();
    let mut nonfaces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for f in &faces {
        for x in 0..g {
            if f.contains(&x) {
                continue;
            }
            let mut cand = f.clone();
            cand.push(x);
            cand.sort_unstable();
            if faces.contains(&cand) {
                continue;
            }
            let minimal = (0..cand.len()).all(|i| {
                let mut sub = cand.clone();
                sub.remove(i);
                faces.contains(&sub)
            });
            if minimal {
                nonfaces.insert(cand);
            }
        }
    }

    let mut rows: Vec<QVec> = Vec::new();
    for i in 0..n {
        let mut u = vec![Rational::zero(); n];
        u[i] = int(1);
        let row = generators
            .iter()
            .map(|gen| match &gen.kind {
                GeneratorKind::Horizontal { ray } => dot(&to_qvec(ray), &u),
                GeneratorKind::Vertical { vertex, .. } => Rational::from_integer(mu(vertex)) * dot(vertex, &u),
            })
            .collect();
        rows.push(row);
    }
    let order_row = |p: &str| -> QVec {
        generators
            .iter()
            .map(|gen| match &gen.kind {
                GeneratorKind::Vertical { point, vertex } if point == p => Rational::from_integer(mu(vertex)),
                GeneratorKind::Vertical { point, vertex } if point == GENERIC_POINTS[0] => {
                    -Rational::from_integer(mu(vertex))
                }
                _ => Rational::zero(),
            })
            .collect()
    };
    for (p, _) in carriers.iter().filter(|(p, _)| p != GENERIC_POINTS[0]) {
        rows.push(order_row(p));
    }
    Ok(ChowPresentation {
        rank: n,
        generators,
        linear_relations: QMatrix::from_rows(g, &rows),
        nonface_sets: nonfaces.into_iter().collect(),
        faces,
    })
}

type Monomial = Vec<u32>;

/// Exponent vectors of degree `d` supported exactly on `sup`.
fn monomials_on(sup: &[usize], d: u32, g: usize, out: &mut Vec<Monomial>) {
    fn rec(sup: &[usize], left: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        match sup {
            [] => {
                if left == 0 {
                    out.push(cur.clone());
                }
            }
            [x, rest @ ..] => {
                let reserve = rest.len() as u32;
                if left < reserve + 1 {
                    return;
                }
                for e in 1..=left - reserve {
                    cur[*x] = e;
                    rec(rest, left - e, cur, out);
                }
                cur[*x] = 0;
            }
        }
    }
    if sup.is_empty() {
        if d == 0 {
            out.push(vec![0; g]);
        }
        return;
    }
    rec(sup, d, &mut vec![0; g], out);
}

#[derive(Clone, Debug)]
struct DegreePiece {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    reduced: QMatrix,
    pivots: Vec<usize>,
    basis: Vec<usize>,
}

impl DegreePiece {
    fn reduce(&self, mut x: QVec) -> QVec {
        for (row, &p) in self.pivots.iter().enumerate() {
            if x[p].is_zero() {
                continue;
            }
            let c = x[p].clone();
            for j in 0..x.len() {
                let r = self.reduced.get(row, j);
                if !r.is_zero() {
                    x[j] -= &c * r;
                }
            }
        }
        self.basis.iter().map(|&b| x[b].clone()).collect()
    }
}

/// The graded quotient, computed degree by degree up to `max_degree`.
#[derive(Clone, Debug)]
pub struct ChowRing {
    pub presentation: ChowPresentation,
    pieces: Vec<DegreePiece>,
}

/// An element of one graded piece, in the standard-monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowClass {
    pub degree: usize,
    pub coordinates: QVec,
}

impl ChowClass {
    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(Zero::is_zero)
    }
}

impl ChowRing {
    pub fn new(pres: ChowPresentation, max_degree: usize) -> Result<ChowRing> {
        let g = pres.generators.len();
        if g > MAX_GENERATORS {
            return Err(Error::BudgetExceeded(format!("{g} generators exceed the cap of {MAX_GENERATORS}")));
        }
        if max_degree > pres.rank + 2 {
            return Err(Error::BudgetExceeded(format!("degree {max_degree} exceeds rank + 2 = {}", pres.rank + 2)));
        }
        let mut pieces: Vec<DegreePiece> = Vec::with_capacity(max_degree + 1);
        for d in 0..=max_degree {
            let mut monomials = Vec::new();
            for f in &pres.faces {
                monomials_on(f, d as u32, g, &mut monomials);
            }
            monomials.sort();
            let index: HashMap<Monomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
            let mut rows: Vec<QVec> = Vec::new();
            if d > 0 {
                for m in &pieces[d - 1].monomials {
                    for r in 0..pres.linear_relations.rows() {
                        let mut row = vec![Rational::zero(); monomials.len()];
                        let mut any = false;
                        for (i, c) in pres.linear_relations.row(r).iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            let mut prod = m.clone();
                            prod[i] += 1;
                            if let Some(&col) = index.get(&prod) {
                                row[col] += c;
                                any = true;
                            }
                        }
                        if any {
                            rows.push(row);
                        }
                    }
                }
            }
            let (reduced, pivots) = QMatrix::from_rows(monomials.len(), &rows).rref(PivotStrategy::FirstNonzero);
            let basis = (0..monomials.len()).filter(|c| !pivots.contains(c)).collect();
            pieces.push(DegreePiece { monomials, index, reduced, pivots, basis });
        }
        Ok(ChowRing { presentation: pres, pieces })
    }

    pub fn max_degree(&self) -> usize {
        self.pieces.len() - 1
    }

    pub fn hilbert_function(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.basis.len()).collect()
    }

    /// Standard monomials spanning degree `d`.
    pub fn basis(&self, d: usize) -> Vec<Monomial> {
        let p = &self.pieces[d];
        p.basis.iter().map(|&b| p.monomials[b].clone()).collect()
    }

    /// The class of a product of generators (indices may repeat).
    pub fn monomial_class(&self, gens: &[usize]) -> Result<ChowClass> {
        let d = gens.len();
        self.check_degree(d)?;
        let mut m = vec![0u32; self.presentation.generators.len()];
        for &i in gens {
            m[i] += 1;
        }
        Ok(self.class_of_exponents(&m))
    }

    fn class_of_exponents(&self, m: &Monomial) -> ChowClass {
        let d = m.iter().sum::<u32>() as usize;
        let piece = &self.pieces[d];
        let mut x = vec![Rational::zero(); piece.monomials.len()];
        if let Some(&i) = piece.index.get(m) {
            x[i] = int(1);
        }
        ChowClass { degree: d, coordinates: piece.reduce(x) }
    }

    fn check_degree(&self, d: usize) -> Result<()> {
        if d > self.max_degree() {
            Err(Error::BudgetExceeded(format!("degree {d} exceeds the computed range")))
        } else {
            Ok(())
        }
    }

    pub fn multiply(&self, a: &ChowClass, b: &ChowClass) -> Result<ChowClass> {
        let d = a.degree + b.degree;
        self.check_degree(d)?;
        let ba = self.basis(a.degree);
        let bb = self.basis(b.degree);
        let mut out = vec![Rational::zero(); self.pieces[d].basis.len()];
        for (x, ma) in a.coordinates.iter().zip(&ba) {
            if x.is_zero() {
                continue;
            }
            for (y, mb) in b.coordinates.iter().zip(&bb) {
                if y.is_zero() {
                    continue;
                }
                let m: Monomial = ma.iter().zip(mb).map(|(p, q)| p + q).collect();
                let c = self.class_of_exponents(&m);
                for (o, v) in out.iter_mut().zip(c.coordinates) {
                    *o += x * y * v;
                }
            }
        }
        Ok(ChowClass { degree: d, coordinates: out })
    }

    /// Product of generator monomials, each given as a list of indices.
    pub fn product_in_quotient(&self, monomials: &[Vec<usize>]) -> Result<ChowClass> {
        let all: Vec<usize> = monomials.concat();
        self.monomial_class(&all)
    }
}

pub fn hilbert_function(s: &DivisorialFan, max_degree: usize) -> Result<Vec<usize>> {
    Ok(ChowRing::new(presentation(s)?, max_degree)?.hilbert_function())
}

/// `φ_p` over shelling bases: rows are the minimal new faces of `S_p`,
/// columns those of the generic slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationMap {
    pub point: String,
    pub source: Vec<Polyhedron>,
    pub target: Vec<Polyhedron>,
    pub matrix: Vec<Vec<BigInt>>,
}

impl SpecializationMap {
    pub fn column_rank(&self) -> usize {
        if self.matrix.is_empty() {
            return 0;
        }
        let rows: Vec<QVec> = self.matrix.iter().map(|r| to_qvec(r)).collect();
        QMatrix::from_rows(self.source.len(), &rows).rank()
    }

    pub fn is_injective(&self) -> bool {
        self.column_rank() == self.source.len()
    }

    pub fn to_i64(&self) -> Vec<Vec<i64>> {
        self.matrix.iter().map(|r| r.iter().map(|x| x.to_i64().expect("small multiplicity")).collect()).collect()
    }
}

/// Shellings of the tail fan and of every special slice, preferring a single
/// sweep functional shared by all of them.
pub struct SliceShellings {
    pub tail: (PolyhedralComplex, ShellingData),
    pub slices: BTreeMap<String, (PolyhedralComplex, ShellingData)>,
    pub shared_functional: bool,
}

pub fn slice_shellings(s: &DivisorialFan) -> Result<SliceShellings> {
    let tail = s.tail_fan()?;
    let mut slices = Vec::new();
    for p in s.special_points()? {
        let c = s.slice(SlicePoint::Label(&p))?;
        slices.push((p, c));
    }
    let seed = std::env::var("TVARTOP_SEED").ok().and_then(|v| v.parse().ok()).unwrap_or(0);
    for w in sweep_functionals(s.rank(), seed) {
        let Ok(t) = tail.shelling_by_functional(&w) else { continue };
        let found: Option<BTreeMap<String, (PolyhedralComplex, ShellingData)>> = slices
            .iter()
            .map(|(p, c)| c.shelling_by_functional(&w).ok().map(|d| (p.clone(), (c.clone(), d))))
            .collect();
        if let Some(found) = found {
            return Ok(SliceShellings { tail: (tail, t), slices: found, shared_functional: true });
        }
    }
    let t = tail.find_shelling().map_err(|_| Error::NotShellableSlice("generic".into()))?;
    let mut found = BTreeMap::new();
    for (p, c) in slices {
        let d = c.find_shelling().map_err(|_| Error::NotShellableSlice(p.clone()))?;
        found.insert(p, (c, d));
    }
    Ok(SliceShellings { tail: (tail, t), slices: found, shared_functional: false })
}

fn specialization_from(point: &str, tail: &(PolyhedralComplex, ShellingData), slice: &(PolyhedralComplex, ShellingData)) -> Result<SpecializationMap> {
    let source: Vec<Polyhedron> = tail.1.minimal_new_faces.iter().map(|&i| tail.0.face(i).clone()).collect();
    let target: Vec<Polyhedron> = slice.1.minimal_new_faces.iter().map(|&i| slice.0.face(i).clone()).collect();
    let mut matrix = vec![vec![BigInt::zero(); source.len()]; target.len()];
    for (i, g) in target.iter().enumerate() {
        for (j, g0) in source.iter().enumerate() {
            if g.tail() != g0.tail() || g.dim() != g0.dim() {
                continue;
            }
            if g.vertices().len() != 1 {
                return Err(Error::NotSimplicial(format!("{g} has no unique vertex")));
            }
            matrix[i][j] = mu(&g.vertices()[0]);
        }
    }
    Ok(SpecializationMap { point: point.to_string(), source, target, matrix })
}

pub fn specialization_matrix(s: &DivisorialFan, p: SlicePoint<'_>) -> Result<SpecializationMap> {
    let sh = slice_shellings(s)?;
    match p {
        SlicePoint::Generic => specialization_from("generic", &sh.tail, &sh.tail),
        SlicePoint::Label(l) => match sh.slices.get(l) {
            Some(slice) => specialization_from(l, &sh.tail, slice),
            None => {
                // A trivial slice: specialize onto the generic shelling itself.
                s.slice(SlicePoint::Label(l))?;
                specialization_from(l, &sh.tail, &sh.tail)
            }
        },
    }
}

#[derive(Clone, Debug)]
pub struct ShellabilityReport {
    pub shellable: bool,
    pub reasons: Vec<String>,
    pub maps: Vec<SpecializationMap>,
}

pub fn is_shellable_divfan(s: &DivisorialFan) -> ShellabilityReport {
    let sh = match slice_shellings(s) {
        Ok(sh) => sh,
        Err(e) => return ShellabilityReport { shellable: false, reasons: vec![e.to_string()], maps: vec![] },
    };
    let mut reasons = Vec::new();
    let mut maps = Vec::new();
    for (p, slice) in &sh.slices {
        match specialization_from(p, &sh.tail, slice) {
            Ok(m) => {
                if !m.is_injective() {
                    reasons.push(format!("specialization at {p} has column rank {} < {}", m.column_rank(), m.source.len()));
                }
                maps.push(m);
            }
            Err(e) => reasons.push(e.to_string()),
        }
    }
    ShellabilityReport { shellable: reasons.is_empty(), reasons, maps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divfan::tests::{f2, p1p1_fan};
    use crate::divfan::{toric_downgrade, Coefficient, CurveData, PDivisor};
    use crate::exactla::{qvec, ratio};
    use crate::polyhedron::Cone;

    fn p1p1() -> DivisorialFan {
        toric_downgrade(&p1p1_fan()).unwrap()
    }

    fn index_of(p: &ChowPresentation, name: &str) -> usize {
        p.generators.iter().position(|g| g.name == name).unwrap_or_else(|| panic!("no generator {name}"))
    }

    fn row_space(m: &QMatrix) -> QMatrix {
        m.rref(PivotStrategy::FirstNonzero).0
    }

    #[test]
    fn p1p1_presentation() {
        let p = presentation(&p1p1()).unwrap();
        let names: Vec<&str> = p.generators.iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, vec!["D_rho(1)", "D_rho(-1)", "D_(@g1;0)", "D_(@g2;0)"]);
        let expected = QMatrix::from_i64(&[&[1, -1, 0, 0], &[0, 0, -1, 1]]);
        assert_eq!(row_space(&p.linear_relations), row_space(&expected));
        assert_eq!(p.nonface_sets, vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn f2_presentation() {
        let p = presentation(&f2()).unwrap();
        assert_eq!(p.generators.len(), 6);
        let a = index_of(&p, "D_rho(1)");
        let b = index_of(&p, "D_rho(-1)");
        let s = index_of(&p, "D_(0;-1/2)");
        let t = index_of(&p, "D_(0;0)");
        let u = index_of(&p, "D_(@g1;0)");
        let u2 = index_of(&p, "D_(@g2;0)");
        let row = |pairs: &[(usize, i64)]| {
            let mut r = vec![Rational::zero(); 6];
            for &(i, c) in pairs {
                r[i] = int(c);
            }
            r
        };
        let expected = QMatrix::from_rows(6, &[row(&[(a, 1), (b, -1), (s, -1)]), row(&[(s, 2), (t, 1), (u, -1)]), row(&[(u, -1), (u2, 1)])]);
        assert_eq!(row_space(&p.linear_relations), row_space(&expected));
        let nf: BTreeSet<Vec<usize>> = p.nonface_sets.iter().cloned().collect();
        let pair = |x: usize, y: usize| if x < y { vec![x, y] } else { vec![y, x] };
        for want in [pair(a, s), pair(b, t), pair(a, b), pair(s, u), pair(t, u), pair(u, u2)] {
            assert!(nf.contains(&want), "missing nonface {want:?}");
        }
    }

    #[test]
    fn hilbert_values() {
        assert_eq!(hilbert_function(&p1p1(), 3).unwrap(), vec![1, 2, 1, 0]);
        assert_eq!(hilbert_function(&f2(), 3).unwrap(), vec![1, 3, 1, 0]);
        assert!(matches!(hilbert_function(&f2(), 4), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn rank_two_product() {
        let p2 = crate::complexes::tests::p2_fan();
        let s = crate::random::product_with_line(&p2).unwrap();
        assert_eq!(hilbert_function(&s, 4).unwrap(), vec![1, 2, 2, 1, 0]);
    }

    #[test]
    fn products() {
        let ring = ChowRing::new(presentation(&p1p1()).unwrap(), 3).unwrap();
        let pres = &ring.presentation;
        let (a, b, t, t2) = (index_of(pres, "D_rho(1)"), index_of(pres, "D_rho(-1)"), index_of(pres, "D_(@g1;0)"), index_of(pres, "D_(@g2;0)"));
        assert!(!ring.product_in_quotient(&[vec![a], vec![t]]).unwrap().is_zero());
        assert!(ring.product_in_quotient(&[vec![a], vec![b]]).unwrap().is_zero());
        assert!(ring.product_in_quotient(&[vec![t], vec![t2]]).unwrap().is_zero());
        let x = ring.monomial_class(&[a]).unwrap();
        let one = ring.monomial_class(&[]).unwrap();
        assert_eq!(ring.multiply(&x, &one).unwrap(), x);

        let ring = ChowRing::new(presentation(&f2()).unwrap(), 3).unwrap();
        let pres = &ring.presentation;
        let (a, b) = (index_of(pres, "D_rho(1)"), index_of(pres, "D_rho(-1)"));
        assert!(ring.product_in_quotient(&[vec![a], vec![b]]).unwrap().is_zero());
    }

    #[test]
    fn specialization() {
        let f = f2();
        let m = specialization_matrix(&f, SlicePoint::Label("0")).unwrap();
        assert!(m.is_injective());
        // The generic vertex class specializes to 2[-1/2] + [0].
        let j = m.source.iter().position(|g| g.dim() == 0).unwrap();
        let col: BTreeMap<Polyhedron, BigInt> = m.target.iter().cloned().zip(m.matrix.iter().map(|r| r[j].clone())).collect();
        assert_eq!(col[&Polyhedron::point(vec![ratio(-1, 2)])], BigInt::from(2));
        assert_eq!(col[&Polyhedron::point(qvec(&[0]))], BigInt::from(1));
        let id = specialization_matrix(&f, SlicePoint::Generic).unwrap();
        assert_eq!(id.to_i64(), vec![vec![1, 0], vec![0, 1]]);
        let triv = specialization_matrix(&p1p1(), SlicePoint::Label("0")).unwrap();
        assert_eq!(triv.to_i64(), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn shellable_fans() {
        assert!(is_shellable_divfan(&p1p1()).shellable);
        let r = is_shellable_divfan(&f2());
        assert!(r.shellable, "{:?}", r.reasons);
        assert!(r.maps.iter().all(|m| m.is_injective()));

        // A segment slice has two minimal vertices in any order.
        let seg = Coefficient::Polyhedron(Polyhedron::from_raw(1, &[qvec(&[0]), qvec(&[1])], &[]).unwrap());
        let d = PDivisor::new(Cone::origin(1), [("0".to_string(), seg), ("q".to_string(), Coefficient::Empty)].into_iter().collect()).unwrap();
        let s = DivisorialFan::new(1, CurveData::rational(&["0", "q"]).unwrap(), vec![d]).unwrap();
        assert!(s.validate().passed());
        assert!(!is_shellable_divfan(&s).shellable);
    }

    #[test]
    fn generator_cap() {
        let mut cones = Vec::new();
        for k in -6..6i64 {
            cones.push(Cone::from_i64(2, &[&[k, 1], &[k + 1, 1]]));
        }
        cones.push(Cone::from_i64(2, &[&[6, 1], &[1, 0]]));
        cones.push(Cone::from_i64(2, &[&[-6, 1], &[-1, 0]]));
        cones.push(Cone::from_i64(2, &[&[-1, 0], &[0, -1]]));
        cones.push(Cone::from_i64(2, &[&[0, -1], &[1, 0]]));
        let fan = PolyhedralComplex::from_cones(2, &cones).unwrap();
        let s = toric_downgrade(&fan).unwrap();
        let p = presentation(&s).unwrap();
        assert_eq!(p.generators.len(), 17);
        assert!(matches!(hilbert_function(&s, 3), Err(Error::BudgetExceeded(_))));
    }
}
