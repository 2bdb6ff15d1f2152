//! Fundamental groups: the quotient `N(S) = N / N_S` and the punctured locus.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::divfan::{Coefficient, DivisorialFan, PDivisor};
use crate::error::{Error, Result};
use crate::exactla::{smith_normal_form, saturated_basis, to_qvec, QVec, ZMatrix, ZVec};

/// `Z^free_rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k` with `t_i | t_{i+1}` and `t_i ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FGAbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl FGAbelianGroup {
    pub fn trivial() -> Self {
        FGAbelianGroup { free_rank: 0, torsion: vec![] }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// The cokernel of the integer row lattice spanned by `gens` in `Z^dim`.
    pub fn quotient(gens: &[ZVec], dim: usize) -> Self {
        if gens.is_empty() {
            return FGAbelianGroup { free_rank: dim, torsion: vec![] };
        }
        let snf = smith_normal_form(&ZMatrix::from_rows(dim, gens));
        let torsion = snf.diagonal.iter().filter(|d| **d > BigInt::one()).cloned().collect();
        FGAbelianGroup { free_rank: dim - snf.rank(), torsion }
    }
}

impl fmt::Display for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = vec!["Z".to_string(); self.free_rank];
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "trivial")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LocPart {
    Trivial,
    Free(usize),
    Surface(u32),
}

impl LocPart {
    pub fn is_trivial(&self) -> bool {
        matches!(self, LocPart::Trivial | LocPart::Free(0) | LocPart::Surface(0))
    }
}

impl fmt::Display for LocPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            _ if self.is_trivial() => write!(f, "trivial"),
            LocPart::Free(1) => write!(f, "Z"),
            LocPart::Free(k) => write!(f, "F_{k}"),
            LocPart::Surface(g) => write!(f, "pi1(Sigma_{g})"),
            LocPart::Trivial => unreachable!(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pi1Description {
    pub abelian_part: FGAbelianGroup,
    pub loc_part: LocPart,
    pub log_terminal_attested: bool,
}

impl Pi1Description {
    pub fn is_trivial(&self) -> bool {
        self.abelian_part.is_trivial() && self.loc_part.is_trivial()
    }
}

impl fmt::Display for Pi1Description {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.abelian_part.is_trivial(), self.loc_part.is_trivial()) {
            (true, true) => write!(f, "trivial"),
            (false, true) => write!(f, "{}", self.abelian_part),
            (true, false) => write!(f, "{}", self.loc_part),
            (false, false) => write!(f, "{} × {}", self.abelian_part, self.loc_part),
        }
    }
}

/// Which points contribute difference spans to `N_D`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum NdReading {
    /// Every point of the curve, so generic points add `span(σ)`.
    #[default]
    AllPoints,
    /// Only marked points carrying non-trivial coefficients.
    Strict,
}

fn difference_span(p: &crate::polyhedron::Polyhedron) -> Vec<QVec> {
    let v = p.vertices();
    let mut out: Vec<QVec> = v[1..].iter().map(|x| x.iter().zip(&v[0]).map(|(a, b)| a - b).collect()).collect();
    out.extend(p.tail().ray_qvecs());
    out
}

/// Basis of `N ∩ span_Q { v1 - v2 : v1, v2 ∈ D_y }`.
pub fn lattice_nd(d: &PDivisor, reading: NdReading) -> Vec<ZVec> {
    let n = d.rank();
    let mut span: Vec<QVec> = Vec::new();
    for c in d.nontrivial().values() {
        if let Coefficient::Polyhedron(p) = c {
            span.extend(difference_span(p));
        }
    }
    if reading == NdReading::AllPoints {
        span.extend(d.tail().ray_qvecs());
    }
    saturated_basis(&span, n)
}

pub fn group_ns(s: &DivisorialFan, reading: NdReading) -> FGAbelianGroup {
    let gens: Vec<ZVec> = s.members().iter().flat_map(|d| lattice_nd(d, reading)).collect();
    FGAbelianGroup::quotient(&gens, s.rank())
}

pub fn pi1_loc(s: &DivisorialFan) -> LocPart {
    let g = s.curve().genus;
    let k = s.uncovered_points().len();
    match (g, k) {
        (0, 0) => LocPart::Trivial,
        (_, 0) => LocPart::Surface(g),
        _ => LocPart::Free(2 * g as usize + k - 1),
    }
}

pub fn fundamental_group(s: &DivisorialFan, reading: NdReading, log_terminal_attested: bool) -> Pi1Description {
    Pi1Description { abelian_part: group_ns(s, reading), loc_part: pi1_loc(s), log_terminal_attested }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointVerdict {
    /// What the unique-fixed-point criterion predicts.
    pub predicted: bool,
    pub computed: Pi1Description,
}

impl FixedPointVerdict {
    pub fn agrees(&self) -> bool {
        self.predicted == self.computed.is_trivial()
    }
}

pub fn is_simply_connected_fixed_point(s: &DivisorialFan, reading: NdReading) -> Result<FixedPointVerdict> {
    if s.curve().genus != 0 {
        return Err(Error::NotApplicable("base curve is not P1".into()));
    }
    let applies = s.members().iter().any(|d| d.has_complete_locus() && d.tail().is_full_dimensional());
    if !applies {
        return Err(Error::NotApplicable("no member with complete locus and full-dimensional tail".into()));
    }
    Ok(FixedPointVerdict { predicted: true, computed: fundamental_group(s, reading, false) })
}

/// Invariant factors of the torsion of `Z^dim / span(gens)` by enumerating cosets.
pub fn brute_force_quotient(gens: &[ZVec], dim: usize) -> FGAbelianGroup {
    use std::collections::{BTreeSet, VecDeque};
    let qgens: Vec<QVec> = gens.iter().map(|g| to_qvec(g)).collect();
    let rank = crate::exactla::rank_of(&qgens, dim);
    let bound: i64 = gens.iter().map(|g| g.iter().map(|x| i64::try_from(x).unwrap().abs()).max().unwrap_or(0)).sum::<i64>().max(1);
    let reach = 4 * bound + 2;

    // Lattice points reachable from 0 inside a large box.
    let mut lattice: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::from([vec![0i64; dim]]);
    lattice.insert(vec![0; dim]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            for sign in [1i64, -1] {
                let y: Vec<i64> = x.iter().zip(g).map(|(a, b)| a + sign * i64::try_from(b).unwrap()).collect();
                if y.iter().all(|c| c.abs() <= reach) && lattice.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
    }

    let mut box_points: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..dim {
        box_points = box_points
            .into_iter()
            .flat_map(|p| (-bound..=bound).map(move |c| [p.clone(), vec![c]].concat()))
            .collect();
    }
    let in_span = |x: &[i64]| {
        let mut with = qgens.clone();
        with.push(x.iter().map(|&c| crate::exactla::int(c)).collect());
        crate::exactla::rank_of(&with, dim) == rank
    };
    let mut reps: Vec<Vec<i64>> = Vec::new();
    for x in box_points.iter().filter(|x| in_span(x)) {
        if !reps.iter().any(|r| lattice.contains(&x.iter().zip(r).map(|(a, b)| a - b).collect::<Vec<_>>())) {
            reps.push(x.clone());
        }
    }
    let order = reps.len() as i64;
    let equivalent = |x: &[i64], y: &[i64]| lattice.contains(&x.iter().zip(y).map(|(a, b)| a - b).collect::<Vec<_>>());
    // Add x repeatedly, reducing to a representative each time to stay inside the box.
    let class_order = |x: &[i64]| {
        let zero = vec![0i64; dim];
        let mut y = x.to_vec();
        let mut k = 1;
        while !equivalent(&y, &zero) {
            let sum: Vec<i64> = y.iter().zip(x).map(|(a, b)| a + b).collect();
            y = reps.iter().find(|r| equivalent(&sum, r)).expect("cosets are closed under addition").clone();
            k += 1;
        }
        k
    };
    let exponent = reps.iter().map(|r| class_order(r)).max().unwrap_or(1);
    // Rank at most two: the torsion has at most two cyclic factors.
    assert!(dim <= 2, "brute force is limited to rank two");
    let mut torsion = Vec::new();
    let first = order / exponent;
    if first > 1 {
        torsion.push(BigInt::from(first));
    }
    if exponent > 1 {
        torsion.push(BigInt::from(exponent));
    }
    FGAbelianGroup { free_rank: dim - rank, torsion }
}
