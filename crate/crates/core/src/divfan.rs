//! Polyhedral divisors and divisorial fans over a marked curve.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{Signed, Zero};

use crate::complexes::PolyhedralComplex;
use crate::error::{Error, Result};
use crate::exactla::{dot, int, to_qvec, QVec, Rational};
use crate::polyhedron::{cone_meets_polyhedron, intersect, is_face_of, minkowski_sum, Cone, Polyhedron};

pub const ZERO_POINT: &str = "0";
pub const INFINITY_POINT: &str = "∞";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveData {
    pub genus: u32,
    pub marked_points: Vec<String>,
}

impl CurveData {
    pub fn new(genus: u32, marked_points: &[&str]) -> Result<CurveData> {
        let labels: Vec<String> = marked_points.iter().map(|s| s.to_string()).collect();
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::Invalid("marked point labels must be distinct".into()));
        }
        Ok(CurveData { genus, marked_points: labels })
    }

    pub fn rational(marked_points: &[&str]) -> Result<CurveData> {
        CurveData::new(0, marked_points)
    }

    fn has(&self, label: &str) -> bool {
        self.marked_points.iter().any(|p| p == label)
    }
}

/// A coefficient `Δ_p`: a tail-polyhedron or the empty set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coefficient {
    Empty,
    Polyhedron(Polyhedron),
}

impl Coefficient {
    pub fn as_polyhedron(&self) -> Option<&Polyhedron> {
        match self {
            Coefficient::Empty => None,
            Coefficient::Polyhedron(p) => Some(p),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Coefficient::Empty)
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Empty => write!(f, "∅"),
            Coefficient::Polyhedron(p) => write!(f, "{p}"),
        }
    }
}

/// `Σ Δ_p ⊗ p`; only non-trivial coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PDivisor {
    tail: Cone,
    coefficients: BTreeMap<String, Coefficient>,
}

impl PDivisor {
    pub fn new(tail: Cone, coefficients: BTreeMap<String, Coefficient>) -> Result<PDivisor> {
        if !tail.is_pointed() {
            return Err(Error::NotPointed);
        }
        let trivial = Polyhedron::from_cone(&tail)?;
        let mut kept = BTreeMap::new();
        for (label, c) in coefficients {
            if let Coefficient::Polyhedron(p) = &c {
                if p.ambient() != tail.ambient() {
                    return Err(Error::RankMismatch(tail.ambient(), p.ambient()));
                }
                if p.tail() != &tail {
                    return Err(Error::Invalid(format!("coefficient at {label} has tail {} instead of {tail}", p.tail())));
                }
                if p == &trivial {
                    continue;
                }
            }
            kept.insert(label, c);
        }
        Ok(PDivisor { tail, coefficients: kept })
    }

    pub fn rank(&self) -> usize {
        self.tail.ambient()
    }

    pub fn tail(&self) -> &Cone {
        &self.tail
    }

    pub fn trivial_coefficient(&self) -> Polyhedron {
        Polyhedron::from_cone(&self.tail).expect("tails are pointed")
    }

    /// The coefficient at `label`, with unlisted labels mapped to the tail.
    pub fn coefficient(&self, label: &str) -> Coefficient {
        self.coefficients
            .get(label)
            .cloned()
            .unwrap_or_else(|| Coefficient::Polyhedron(self.trivial_coefficient()))
    }

    /// Non-trivial coefficients by label.
    pub fn nontrivial(&self) -> &BTreeMap<String, Coefficient> {
        &self.coefficients
    }

    pub fn excluded_points(&self) -> BTreeSet<String> {
        self.coefficients.iter().filter(|(_, c)| c.is_empty()).map(|(l, _)| l.clone()).collect()
    }

    pub fn has_complete_locus(&self) -> bool {
        self.coefficients.values().all(|c| !c.is_empty())
    }

    pub fn in_locus(&self, label: &str) -> bool {
        !self.coefficient(label).is_empty()
    }

    /// Coefficient-wise intersection.
    pub fn intersect(&self, other: &PDivisor) -> Result<PDivisor> {
        let tail = Cone::from_inequalities(
            self.rank(),
            &[self.tail.facet_normals(), other.tail.facet_normals()].concat(),
            &[self.tail.equations(), other.tail.equations()].concat(),
        );
        let labels: BTreeSet<&String> = self.coefficients.keys().chain(other.coefficients.keys()).collect();
        let mut coefficients = BTreeMap::new();
        for l in labels {
            let c = match (self.coefficient(l), other.coefficient(l)) {
                (Coefficient::Polyhedron(a), Coefficient::Polyhedron(b)) => match intersect(&a, &b)? {
                    Some(p) => Coefficient::Polyhedron(p),
                    None => Coefficient::Empty,
                },
                _ => Coefficient::Empty,
            };
            coefficients.insert(l.clone(), c);
        }
        PDivisor::new(tail, coefficients)
    }
}

impl fmt::Display for PDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tail {}", self.tail)?;
        for (l, c) in &self.coefficients {
            write!(f, "; {l}: {c}")?;
        }
        Ok(())
    }
}

/// `u ↦ Σ_p min_{v ∈ Δ_p} <u,v> · p` at every marked point.
pub fn evaluate(d: &PDivisor, curve: &CurveData, u: &[Rational]) -> Result<BTreeMap<String, Rational>> {
    if u.len() != d.rank() {
        return Err(Error::RankMismatch(d.rank(), u.len()));
    }
    if d.tail.rays().iter().any(|r| dot(u, &to_qvec(r)).is_negative()) {
        return Err(Error::NotInDualCone);
    }
    let mut out = BTreeMap::new();
    for label in &curve.marked_points {
        let c = d.coefficient(label);
        let p = c.as_polyhedron().ok_or_else(|| Error::EmptyCoefficient(label.clone()))?;
        let m = p.vertices().iter().map(|v| dot(u, v)).min().expect("vertex list is nonempty");
        out.insert(label.clone(), m);
    }
    Ok(out)
}

/// Sum of the coefficients; `None` when some coefficient is empty.
pub fn degree(d: &PDivisor) -> Option<Polyhedron> {
    let mut acc = d.trivial_coefficient();
    for c in d.coefficients.values() {
        let p = c.as_polyhedron()?;
        acc = minkowski_sum(&acc, p).expect("coefficients share the ambient rank");
    }
    Some(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PDivisorCheck {
    pub accepted: bool,
    pub reasons: Vec<String>,
}

/// Properness on `P¹`: affine loci always pass; a complete locus needs
/// `deg ⊆ σ` and `0 ∉ deg`. Curves of positive genus are not checked.
pub fn is_pdivisor(d: &PDivisor, curve: &CurveData) -> PDivisorCheck {
    let mut reasons = Vec::new();
    if curve.genus != 0 {
        return PDivisorCheck { accepted: true, reasons };
    }
    if let Some(deg) = degree(d) {
        if !d.trivial_coefficient().contains(&deg) {
            reasons.push(format!("degree {deg} is not contained in the tail cone"));
        }
        if deg.contains_point(&vec![Rational::zero(); d.rank()]) {
            reasons.push(format!("degree {deg} contains the origin"));
        }
    }
    PDivisorCheck { accepted: reasons.is_empty(), reasons }
}

/// `loc = Y \ excluded`, `supp`, and `triv = Y \ triv_excluded`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Loci {
    pub excluded: BTreeSet<String>,
    pub supp: BTreeSet<String>,
    pub triv_excluded: BTreeSet<String>,
}

fn curve_minus(set: &BTreeSet<String>) -> String {
    if set.is_empty() {
        "P1".into()
    } else {
        format!("P1 \\ {{{}}}", set.iter().cloned().collect::<Vec<_>>().join(", "))
    }
}

impl Loci {
    pub fn loc_display(&self) -> String {
        curve_minus(&self.excluded)
    }

    pub fn triv_display(&self) -> String {
        curve_minus(&self.triv_excluded)
    }
}

pub fn pdivisor_loci(d: &PDivisor) -> Loci {
    let excluded = d.excluded_points();
    let supp: BTreeSet<String> = d.coefficients.iter().filter(|(_, c)| !c.is_empty()).map(|(l, _)| l.clone()).collect();
    let triv_excluded = excluded.union(&supp).cloned().collect();
    Loci { excluded, supp, triv_excluded }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SlicePoint<'a> {
    Label(&'a str),
    Generic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorialFan {
    rank: usize,
    curve: CurveData,
    members: Vec<PDivisor>,
}

/// Faces of a complex split by contraction, as face ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlicePartition {
    pub contracted: Vec<usize>,
    pub noncontracted: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct PartitionedComplex {
    pub complex: PolyhedralComplex,
    pub partition: SlicePartition,
}

impl PartitionedComplex {
    pub fn noncontracted_f_vector(&self) -> Vec<usize> {
        self.counts(&self.partition.noncontracted)
    }

    pub fn contracted_f_vector(&self) -> Vec<usize> {
        self.counts(&self.partition.contracted)
    }

    fn counts(&self, ids: &[usize]) -> Vec<usize> {
        crate::complexes::f_vector_of(self.complex.ambient(), ids.iter().map(|&i| self.complex.face(i)))
    }
}

#[derive(Clone, Debug)]
pub struct ContractedPartition {
    pub tail: PartitionedComplex,
    pub slices: BTreeMap<String, PartitionedComplex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub members: Vec<usize>,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub const FACE_CONDITION_WARNING: &str =
    "the face relation between members is checked coefficient-wise only, a necessary condition";

impl DivisorialFan {
    pub fn new(rank: usize, curve: CurveData, members: Vec<PDivisor>) -> Result<DivisorialFan> {
        if members.is_empty() {
            return Err(Error::Invalid("a divisorial fan needs at least one member".into()));
        }
        for d in &members {
            if d.rank() != rank {
                return Err(Error::RankMismatch(rank, d.rank()));
            }
            if let Some(l) = d.coefficients.keys().find(|l| !curve.has(l)) {
                return Err(Error::UnknownLabel(l.clone()));
            }
        }
        Ok(DivisorialFan { rank, curve, members })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn curve(&self) -> &CurveData {
        &self.curve
    }

    pub fn members(&self) -> &[PDivisor] {
        &self.members
    }

    /// Members sorted canonically, duplicates removed.
    pub fn canonical(&self) -> DivisorialFan {
        let members: BTreeSet<PDivisor> = self.members.iter().cloned().collect();
        DivisorialFan { rank: self.rank, curve: self.curve.clone(), members: members.into_iter().collect() }
    }

    pub fn without_member(&self, i: usize) -> DivisorialFan {
        let mut members = self.members.clone();
        members.remove(i);
        DivisorialFan { rank: self.rank, curve: self.curve.clone(), members }
    }

    /// Union of loci and of supports; `triv` is the locus minus the support.
    pub fn loci(&self) -> Loci {
        let mut excluded: BTreeSet<String> = self.curve.marked_points.iter().cloned().collect();
        let mut supp = BTreeSet::new();
        for l in self.members.iter().map(pdivisor_loci) {
            excluded = excluded.intersection(&l.excluded).cloned().collect();
            supp.extend(l.supp);
        }
        let triv_excluded = excluded.union(&supp).cloned().collect();
        Loci { excluded, supp, triv_excluded }
    }

    /// Marked points outside every locus.
    pub fn uncovered_points(&self) -> Vec<String> {
        self.curve
            .marked_points
            .iter()
            .filter(|p| self.members.iter().all(|d| !d.in_locus(p)))
            .cloned()
            .collect()
    }

    pub fn slice(&self, at: SlicePoint<'_>) -> Result<PolyhedralComplex> {
        let label = match at {
            SlicePoint::Generic => return self.tail_fan(),
            SlicePoint::Label(l) => l,
        };
        if !self.curve.has(label) {
            return Err(Error::UnknownLabel(label.to_string()));
        }
        let cells: Vec<Polyhedron> = self
            .members
            .iter()
            .filter_map(|d| d.coefficient(label).as_polyhedron().cloned())
            .collect();
        if cells.is_empty() {
            return Err(Error::PointNotCovered(label.to_string()));
        }
        PolyhedralComplex::new(self.rank, &cells)
    }

    pub fn tail_fan(&self) -> Result<PolyhedralComplex> {
        let tails: Vec<Cone> = self.members.iter().map(|d| d.tail.clone()).collect();
        PolyhedralComplex::from_cones(self.rank, &tails).map_err(|e| match e {
            Error::InvalidComplex(m) => Error::FanInvalid(m),
            other => other,
        })
    }

    /// Marked points whose slice differs from the tail fan.
    pub fn special_points(&self) -> Result<Vec<String>> {
        let tail = self.tail_fan()?;
        let mut out = Vec::new();
        for p in &self.curve.marked_points {
            match self.slice(SlicePoint::Label(p)) {
                Ok(s) if s == tail => {}
                Ok(_) => out.push(p.clone()),
                Err(Error::PointNotCovered(_)) => {}
                Err(e) => return Err(e),
            }
        }
        Ok(out)
    }

    fn complete_members(&self) -> Vec<(Cone, Polyhedron)> {
        self.members
            .iter()
            .filter(|d| d.has_complete_locus())
            .map(|d| (d.tail.clone(), degree(d).expect("complete locus has a degree")))
            .collect()
    }

    fn partition(&self, complex: PolyhedralComplex, complete: &[(Cone, Polyhedron)]) -> Result<PartitionedComplex> {
        let mut contracted = Vec::new();
        let mut noncontracted = Vec::new();
        for (i, f) in complex.faces().iter().enumerate() {
            let mut hit = false;
            for (tail, deg) in complete {
                if tail.contains_cone(f.tail()) && cone_meets_polyhedron(f.tail(), Some(deg))? {
                    hit = true;
                    break;
                }
            }
            if hit {
                contracted.push(i);
            } else {
                noncontracted.push(i);
            }
        }
        Ok(PartitionedComplex { complex, partition: SlicePartition { contracted, noncontracted } })
    }

    /// Contracted faces of the tail fan and of each covered slice.
    pub fn contracted_partition(&self) -> Result<ContractedPartition> {
        let complete = self.complete_members();
        let tail = self.partition(self.tail_fan()?, &complete)?;
        let mut slices = BTreeMap::new();
        for p in &self.curve.marked_points {
            match self.slice(SlicePoint::Label(p)) {
                Ok(s) => {
                    slices.insert(p.clone(), self.partition(s, &complete)?);
                }
                Err(Error::PointNotCovered(_)) => {}
                Err(e) => return Err(e),
            }
        }
        Ok(ContractedPartition { tail, slices })
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport { violations: Vec::new(), warnings: vec![FACE_CONDITION_WARNING.to_string()] };
        if self.curve.genus != 0 {
            report.warnings.push("properness of complete-locus members is only checked on P1".into());
        }
        let mut push = |members: Vec<usize>, message: String| report.violations.push(Violation { members, message });
        for (i, d) in self.members.iter().enumerate() {
            let check = is_pdivisor(d, &self.curve);
            for r in check.reasons {
                push(vec![i], r);
            }
        }
        let present: BTreeSet<&PDivisor> = self.members.iter().collect();
        for i in 0..self.members.len() {
            for j in i + 1..self.members.len() {
                let (a, b) = (&self.members[i], &self.members[j]);
                let m = match a.intersect(b) {
                    Ok(m) => m,
                    Err(e) => {
                        push(vec![i, j], format!("intersection failed: {e}"));
                        continue;
                    }
                };
                if !present.contains(&m) {
                    push(vec![i, j], format!("intersection {m} is not a member"));
                }
                if let Some(msg) = face_condition(a, b, &m) {
                    push(vec![i, j], msg);
                }
            }
        }
        if let Err(e) = self.tail_fan() {
            push(vec![], format!("tail fan: {e}"));
        }
        for p in &self.curve.marked_points {
            match self.slice(SlicePoint::Label(p)) {
                Ok(_) | Err(Error::PointNotCovered(_)) => {}
                Err(e) => push(vec![], format!("slice at {p}: {e}")),
            }
        }
        report
    }
}

fn face_condition(a: &PDivisor, b: &PDivisor, m: &PDivisor) -> Option<String> {
    let tail_face = |x: &PDivisor| is_face_of(&m.trivial_coefficient(), &x.trivial_coefficient()).unwrap_or(false);
    if !tail_face(a) || !tail_face(b) {
        return Some(format!("tail {} is not a common face", m.tail));
    }
    let labels: BTreeSet<&String> = a.coefficients.keys().chain(b.coefficients.keys()).collect();
    for l in labels {
        if let Some(p) = m.coefficient(l).as_polyhedron() {
            for x in [a, b] {
                let c = x.coefficient(l);
                let q = c.as_polyhedron().expect("a nonempty intersection has nonempty parts");
                if !is_face_of(p, q).unwrap_or(false) {
                    return Some(format!("coefficient {p} at {l} is not a face of {q}"));
                }
            }
        }
    }
    None
}

/// The divisorial fan on `P¹` (points "0" and "∞") of a complete fan in
/// `N ⊕ Z`, one member per cone.
pub fn toric_downgrade(fan: &PolyhedralComplex) -> Result<DivisorialFan> {
    if !fan.is_fan() || !fan.is_complete() {
        return Err(Error::NotComplete("input is not a complete fan".into()));
    }
    let n = fan.ambient() - 1;
    let curve = CurveData::rational(&[ZERO_POINT, INFINITY_POINT])?;
    let mut members = Vec::new();
    for cone in fan.faces().iter().map(|f| f.tail()) {
        let at = |h: i64| -> Result<Option<Polyhedron>> {
            let lift = |a: &QVec| (a[..n].to_vec(), -(&a[n] * int(h)));
            let ineqs: Vec<(QVec, Rational)> = cone.facet_normals().iter().map(lift).collect();
            let eqs: Vec<(QVec, Rational)> = cone.equations().iter().map(lift).collect();
            Polyhedron::from_hrep(n, &ineqs, &eqs)
        };
        let tail = at(0)?.expect("the origin lies in every cone").tail().clone();
        let mut coefficients = BTreeMap::new();
        for (label, h) in [(ZERO_POINT, 1), (INFINITY_POINT, -1)] {
            let c = match at(h)? {
                Some(p) => Coefficient::Polyhedron(p),
                None => Coefficient::Empty,
            };
            coefficients.insert(label.to_string(), c);
        }
        members.push(PDivisor::new(tail, coefficients)?);
    }
    Ok(DivisorialFan::new(n, curve, members)?.canonical())
}
