//! E-polynomial classes, Betti numbers and their mutual consistency.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::complexes::{h_from_f, homogenized_cone, is_unimodular, PolyhedralComplex};
use crate::divfan::{ContractedPartition, DivisorialFan, PartitionedComplex, SlicePoint};
use crate::error::{Error, Result};
use crate::exactla::QVec;
use crate::polyhedron::Cone;

/// Integer polynomial in `u, v`, keyed by `(deg_u, deg_v)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EPolynomial {
    terms: BTreeMap<(u32, u32), i64>,
}

impl EPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(i: u32, j: u32, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert((i, j), c);
        }
        EPolynomial { terms }
    }

    /// `L = uv`, the class of the affine line.
    pub fn lefschetz() -> Self {
        Self::monomial(1, 1, 1)
    }

    /// `L^k` coefficients, lowest degree first.
    pub fn from_l_coefficients(coeffs: &[i64]) -> Self {
        coeffs
            .iter()
            .enumerate()
            .fold(Self::zero(), |acc, (k, &c)| acc + Self::monomial(k as u32, k as u32, c))
    }

    /// `uv - g u - g v + 1`
    pub fn curve(genus: u32) -> Self {
        let g = genus as i64;
        Self::lefschetz() + Self::monomial(1, 0, -g) + Self::monomial(0, 1, -g) + Self::constant(1)
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), i64> {
        &self.terms
    }

    pub fn coefficient(&self, i: u32, j: u32) -> i64 {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn l_coefficient(&self, k: u32) -> i64 {
        self.coefficient(k, k)
    }

    pub fn is_l_polynomial(&self) -> bool {
        self.terms.keys().all(|(i, j)| i == j)
    }

    pub fn l_degree(&self) -> u32 {
        self.terms.keys().map(|&(i, j)| i.max(j)).max().unwrap_or(0)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(1), |acc, _| &acc * self)
    }

    /// Value at `u = v = 1`.
    pub fn euler_characteristic(&self) -> i64 {
        self.terms.values().sum()
    }

    /// `[[i, j, c], ...]` in key order.
    pub fn to_triples(&self) -> Vec<(u32, u32, i64)> {
        self.terms.iter().map(|(&(i, j), &c)| (i, j, c)).collect()
    }

    fn add_term(&mut self, key: (u32, u32), c: i64) {
        let e = self.terms.entry(key).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&key);
        }
    }
}

impl Add for EPolynomial {
    type Output = EPolynomial;
    fn add(mut self, rhs: EPolynomial) -> EPolynomial {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl Neg for EPolynomial {
    type Output = EPolynomial;
    fn neg(self) -> EPolynomial {
        EPolynomial { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl Sub for EPolynomial {
    type Output = EPolynomial;
    fn sub(self, rhs: EPolynomial) -> EPolynomial {
        self + (-rhs)
    }
}

impl Mul for &EPolynomial {
    type Output = EPolynomial;
    fn mul(self, rhs: &EPolynomial) -> EPolynomial {
        let mut out = EPolynomial::zero();
        for (&(a, b), &c) in &self.terms {
            for (&(x, y), &d) in &rhs.terms {
                out.add_term((a + x, b + y), c * d);
            }
        }
        out
    }
}

impl Mul for EPolynomial {
    type Output = EPolynomial;
    fn mul(self, rhs: EPolynomial) -> EPolynomial {
        &self * &rhs
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: Vec<(String, i64)>) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (n, (mono, c)) in terms.into_iter().enumerate() {
        let sign = if c < 0 { "-" } else { "+" };
        if n == 0 {
            if c < 0 {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        let a = c.abs();
        match (mono.is_empty(), a) {
            (true, _) => write!(f, "{a}")?,
            (false, 1) => write!(f, "{mono}")?,
            (false, _) => write!(f, "{a}{mono}")?,
        }
    }
    Ok(())
}

fn power(var: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl fmt::Display for EPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_l_polynomial() {
            let terms = self.terms.iter().rev().map(|(&(k, _), &c)| (power("L", k), c)).collect();
            write_terms(f, terms)
        } else {
            let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
            keys.sort_by_key(|&&(i, j)| (std::cmp::Reverse(i + j), std::cmp::Reverse(i)));
            let terms = keys
                .into_iter()
                .map(|k| (format!("{}{}", power("u", k.0), power("v", k.1)), self.terms[k]))
                .collect();
            write_terms(f, terms)
        }
    }
}

/// Special points and the excluded-point count entering `[U]`.
struct PointData {
    special: Vec<String>,
    excluded: usize,
}

fn point_data(s: &DivisorialFan) -> Result<PointData> {
    Ok(PointData { special: s.special_points()?, excluded: s.uncovered_points().len() })
}

fn require_valid(s: &DivisorialFan) -> Result<()> {
    let report = s.validate();
    if report.passed() {
        Ok(())
    } else {
        let msgs: Vec<String> = report.violations.iter().map(|v| v.message.clone()).collect();
        Err(Error::ValidationFailed(msgs.join("; ")))
    }
}

/// `[Y] - r - (marked points outside the locus)`.
fn open_part(s: &DivisorialFan, pts: &PointData) -> EPolynomial {
    EPolynomial::curve(s.curve().genus) - EPolynomial::constant((pts.special.len() + pts.excluded) as i64)
}

fn assemble(n: usize, per_k: impl Fn(usize) -> EPolynomial) -> EPolynomial {
    let torus = EPolynomial::lefschetz() - EPolynomial::constant(1);
    (0..=n).fold(EPolynomial::zero(), |acc, k| acc + &per_k(k) * &torus.pow((n - k) as u32))
}

fn scaled(p: &EPolynomial, c: usize) -> EPolynomial {
    p * &EPolynomial::constant(c as i64)
}

/// The class of `X(S)`, from orbit counts split by contraction.
pub fn grothendieck_class(s: &DivisorialFan) -> Result<EPolynomial> {
    require_valid(s)?;
    let pts = point_data(s)?;
    let part = s.contracted_partition()?;
    Ok(class_from_partition(s, &pts, &part))
}

fn class_from_partition(s: &DivisorialFan, pts: &PointData, part: &ContractedPartition) -> EPolynomial {
    let u = open_part(s, pts);
    let tail_nc = part.tail.noncontracted_f_vector();
    let tail_c = part.tail.contracted_f_vector();
    let slices_nc: Vec<Vec<usize>> = pts.special.iter().map(|p| part.slices[p].noncontracted_f_vector()).collect();
    assemble(s.rank(), |k| {
        let orbits = tail_c[k] + slices_nc.iter().map(|f| f[k]).sum::<usize>();
        scaled(&u, tail_nc[k]) + EPolynomial::constant(orbits as i64)
    })
}

/// The class of the toroidal resolution, with no contraction.
pub fn grothendieck_class_resolution(s: &DivisorialFan) -> Result<EPolynomial> {
    require_valid(s)?;
    let pts = point_data(s)?;
    let u = open_part(s, &pts);
    let tail = s.tail_fan()?.f_vector();
    let slices: Vec<Vec<usize>> = pts
        .special
        .iter()
        .map(|p| s.slice(SlicePoint::Label(p)).map(|c| c.f_vector()))
        .collect::<Result<_>>()?;
    Ok(assemble(s.rank(), |k| {
        scaled(&u, tail[k]) + EPolynomial::constant(slices.iter().map(|f| f[k]).sum::<usize>() as i64)
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Smoothness {
    Smooth,
    NotSmooth(String),
    Unverified(String),
}

/// Toroidal charts of non-contracted faces must be unimodular; each
/// complete-locus member with at most two special points is tested through
/// its toric cone in `N ⊕ Z`.
pub fn smoothness(s: &DivisorialFan) -> Result<Smoothness> {
    let pts = point_data(s)?;
    let part = s.contracted_partition()?;
    let check = |pc: &PartitionedComplex, lift: bool| -> Option<String> {
        for &i in &pc.partition.noncontracted {
            let f = pc.complex.face(i);
            let cone = if lift { homogenized_cone(f) } else { f.tail().clone() };
            if !is_unimodular(&cone) {
                return Some(format!("chart of {f} is singular"));
            }
        }
        None
    };
    if let Some(m) = check(&part.tail, false) {
        return Ok(Smoothness::NotSmooth(m));
    }
    for p in &pts.special {
        if let Some(m) = check(&part.slices[p], true) {
            return Ok(Smoothness::NotSmooth(format!("at {p}: {m}")));
        }
    }
    let n = s.rank();
    for d in s.members().iter().filter(|d| d.has_complete_locus()) {
        let nontrivial: Vec<&String> = d.nontrivial().keys().collect();
        if nontrivial.len() > 2 {
            return Ok(Smoothness::Unverified(format!("complete-locus member {d} has more than two special points")));
        }
        let mut gens: Vec<QVec> = Vec::new();
        for r in d.tail().ray_qvecs() {
            gens.push(lift(&r, 0));
        }
        let mut heights = vec![1, -1].into_iter();
        for label in &nontrivial {
            let h = heights.next().expect("at most two points");
            for v in d.coefficient(label).as_polyhedron().expect("complete locus").vertices() {
                gens.push(lift(v, h));
            }
        }
        for h in heights {
            gens.push(lift(&vec![num_traits::Zero::zero(); n], h));
        }
        let cone = Cone::new(n + 1, &gens);
        if !is_unimodular(&cone) {
            return Ok(Smoothness::NotSmooth(format!("toric chart {cone} of {d} is singular")));
        }
    }
    Ok(Smoothness::Smooth)
}

fn lift(v: &[crate::exactla::Rational], h: i64) -> QVec {
    let mut x = v.to_vec();
    x.push(crate::exactla::int(h));
    x
}

/// Betti numbers `b_0, b_2, ..., b_{2n+2}` of a smooth complete `X(S)`.
pub fn betti_numbers(s: &DivisorialFan) -> Result<Vec<i64>> {
    if s.curve().genus != 0 {
        return Err(Error::GenusNotZero(s.curve().genus));
    }
    let pts = point_data(s)?;
    let tail = s.tail_fan()?;
    if !tail.is_complete() {
        return Err(Error::NotComplete("tail fan".into()));
    }
    if !s.uncovered_points().is_empty() {
        return Err(Error::NotComplete(format!("points outside the locus: {}", s.uncovered_points().join(", "))));
    }
    for p in &pts.special {
        if !s.slice(SlicePoint::Label(p))?.is_complete() {
            return Err(Error::NotComplete(format!("slice at {p}")));
        }
    }
    let part = s.contracted_partition()?;
    Ok(betti_from_partition(s, &pts, &tail, &part)?)
}

fn betti_from_partition(
    s: &DivisorialFan,
    pts: &PointData,
    tail: &PolyhedralComplex,
    part: &ContractedPartition,
) -> Result<Vec<i64>> {
    let n = s.rank();
    let r = pts.special.len() as i64;
    let f_tail = tail.f_vector();
    let f_nc = part.tail.noncontracted_f_vector();
    let f_slices: Vec<Vec<usize>> = pts.special.iter().map(|p| part.slices[p].noncontracted_f_vector()).collect();
    let h = |f: &[usize], k: usize| if k > n { 0 } else { h_from_f(f, k) };
    let mut out = Vec::with_capacity(n + 2);
    for k in 0..=n + 1 {
        let below = if k == 0 { 0 } else { h(&f_nc, k - 1) };
        let value = h(&f_tail, k) - r * h(&f_nc, k) + below + f_slices.iter().map(|f| h(f, k)).sum::<i64>();
        if value < 0 {
            return Err(Error::NegativeBetti { degree: 2 * k, value });
        }
        out.push(value);
    }
    Ok(out)
}

/// Betti numbers `b_{2k} = h^k` of a complete simplicial bouquet.
pub fn bouquet_betti(t: &PolyhedralComplex) -> Result<Vec<i64>> {
    if !t.is_complete() {
        return Err(Error::NotComplete("complex does not cover the space".into()));
    }
    if !t.is_simplicial() {
        return Err(Error::NotSimplicial("some maximal cell is not simplicial".into()));
    }
    Ok(t.h_vector())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
    NotCertified(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "PASS"),
            Verdict::Fail(m) => write!(f, "FAIL ({m})"),
            Verdict::NotCertified(m) => write!(f, "NOT CERTIFIED ({m})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub class: EPolynomial,
    pub betti: Vec<i64>,
    pub smoothness: Smoothness,
    pub verdict: Verdict,
}

/// Compares `b_{2k}` with the `L^k` coefficient of the class.
pub fn consistency_check(s: &DivisorialFan) -> Result<ConsistencyReport> {
    let class = grothendieck_class(s)?;
    consistency_check_against(s, class)
}

/// The same comparison against a supplied class polynomial.
pub fn consistency_check_against(s: &DivisorialFan, class: EPolynomial) -> Result<ConsistencyReport> {
    let betti = betti_numbers(s)?;
    let smooth = smoothness(s)?;
    let verdict = match &smooth {
        Smoothness::Smooth => compare(&class, &betti),
        Smoothness::NotSmooth(m) | Smoothness::Unverified(m) => Verdict::NotCertified(m.clone()),
    };
    Ok(ConsistencyReport { class, betti, smoothness: smooth, verdict })
}

fn compare(class: &EPolynomial, betti: &[i64]) -> Verdict {
    if !class.is_l_polynomial() {
        return Verdict::Fail("class has mixed u,v terms".into());
    }
    if class.l_degree() as usize >= betti.len() {
        return Verdict::Fail(format!("class degree {} exceeds the dimension", class.l_degree()));
    }
    for (k, &b) in betti.iter().enumerate() {
        let c = class.l_coefficient(k as u32);
        if c != b {
            return Verdict::Fail(format!("b_{} = {b} but the L^{k} coefficient is {c}", 2 * k));
        }
    }
    Verdict::Pass
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divfan::tests::{a2, cstar, f2, p1p1_fan, ray, shifted};
    use crate::divfan::{toric_downgrade, Coefficient, CurveData, PDivisor};
    use crate::exactla::int;

    fn l(coeffs: &[i64]) -> EPolynomial {
        EPolynomial::from_l_coefficients(coeffs)
    }

    #[test]
    fn display() {
        assert_eq!(l(&[1, 2, 1]).to_string(), "L^2 + 2L + 1");
        assert_eq!(l(&[-1, 0, 1]).to_string(), "L^2 - 1");
        assert_eq!(l(&[0, -1, 1]).to_string(), "L^2 - L");
        assert_eq!(EPolynomial::curve(1).to_string(), "uv - u - v + 1");
        assert_eq!(EPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn classes() {
        assert_eq!(grothendieck_class(&a2()).unwrap(), l(&[0, 0, 1]));
        assert_eq!(grothendieck_class(&f2()).unwrap(), l(&[1, 2, 1]));
        let p1p1 = toric_downgrade(&p1p1_fan()).unwrap();
        assert_eq!(grothendieck_class(&p1p1).unwrap(), l(&[1, 2, 1]));
        // C* x A^1
        assert_eq!(grothendieck_class(&cstar()).unwrap(), l(&[0, -1, 1]));
    }

    #[test]
    fn resolution_classes() {
        let p1p1 = toric_downgrade(&p1p1_fan()).unwrap();
        assert_eq!(grothendieck_class_resolution(&p1p1).unwrap(), l(&[1, 2, 1]));
        assert_eq!(grothendieck_class_resolution(&f2()).unwrap(), l(&[1, 3, 1]));
        assert_eq!(grothendieck_class_resolution(&a2()).unwrap(), l(&[0, 1, 1]));
    }

    #[test]
    fn positive_genus_class() {
        // (E minus a point) x C*
        let d = PDivisor::new(ray(0), [("q".to_string(), Coefficient::Empty)].into_iter().collect()).unwrap();
        let s = DivisorialFan::new(1, CurveData::new(1, &["q"]).unwrap(), vec![d]).unwrap();
        let punctured = EPolynomial::curve(1) - EPolynomial::constant(1);
        let expected = &punctured * &(EPolynomial::lefschetz() - EPolynomial::constant(1));
        assert_eq!(grothendieck_class(&s).unwrap(), expected);
        assert_eq!(betti_numbers(&s), Err(Error::GenusNotZero(1)));
    }

    #[test]
    fn betti() {
        assert_eq!(betti_numbers(&f2()).unwrap(), vec![1, 2, 1]);
        let p1p1 = toric_downgrade(&p1p1_fan()).unwrap();
        assert_eq!(betti_numbers(&p1p1).unwrap(), vec![1, 2, 1]);
        assert!(matches!(betti_numbers(&a2()), Err(Error::NotComplete(_))));
        assert!(matches!(betti_numbers(&cstar()), Err(Error::NotComplete(_))));
    }

    #[test]
    fn bouquets() {
        let chain = PolyhedralComplex::new(
            1,
            &[
                shifted(int(0), -1).as_polyhedron().unwrap().clone(),
                crate::polyhedron::Polyhedron::from_raw(1, &[vec![int(0)], vec![int(1)]], &[]).unwrap(),
                shifted(int(1), 1).as_polyhedron().unwrap().clone(),
            ],
        )
        .unwrap();
        assert_eq!(bouquet_betti(&chain).unwrap(), vec![1, 2]);
        let line = PolyhedralComplex::from_cones(1, &[ray(1), ray(-1)]).unwrap();
        assert_eq!(bouquet_betti(&line).unwrap(), vec![1, 1]);
        assert_eq!(bouquet_betti(&p1p1_fan()).unwrap(), vec![1, 2, 1]);
        let half = PolyhedralComplex::from_cones(1, &[ray(1)]).unwrap();
        assert!(matches!(bouquet_betti(&half), Err(Error::NotComplete(_))));
    }

    #[test]
    fn consistency() {
        let r = consistency_check(&f2()).unwrap();
        assert_eq!(r.smoothness, Smoothness::Smooth);
        assert_eq!(r.verdict, Verdict::Pass);
        let p1p1 = toric_downgrade(&p1p1_fan()).unwrap();
        assert_eq!(consistency_check(&p1p1).unwrap().verdict, Verdict::Pass);
        // Ignoring contraction yields the resolution class, which must be caught.
        let wrong = grothendieck_class_resolution(&f2()).unwrap();
        assert!(matches!(consistency_check_against(&f2(), wrong).unwrap().verdict, Verdict::Fail(_)));
    }

    #[test]
    fn singular_chart_is_not_certified() {
        // Complete toric surface with two singular cones at the rays (1,-2).
        let fan = PolyhedralComplex::from_cones(
            2,
            &[
                Cone::from_i64(2, &[&[1, 0], &[0, 1]]),
                Cone::from_i64(2, &[&[0, 1], &[-1, 0]]),
                Cone::from_i64(2, &[&[-1, 0], &[1, -2]]),
                Cone::from_i64(2, &[&[1, -2], &[1, 0]]),
            ],
        )
        .unwrap();
        let s = toric_downgrade(&fan).unwrap();
        assert!(s.validate().passed(), "{:?}", s.validate());
        assert!(matches!(smoothness(&s).unwrap(), Smoothness::NotSmooth(_)));
        assert!(matches!(consistency_check(&s).unwrap().verdict, Verdict::NotCertified(_)));
    }
}
