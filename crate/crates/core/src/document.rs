//! JSON file formats. Serialization is canonical: keys sorted, rationals reduced
//! and written as integers or `"p/q"` strings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::complexes::PolyhedralComplex;
use crate::divfan::{Coefficient, CurveData, DivisorialFan, PDivisor};
use crate::error::{Error, Result};
use crate::exactla::{QVec, Rational};
use crate::polyhedron::{Cone, Polyhedron};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalDoc {
    Int(i64),
    Str(String),
}

impl RationalDoc {
    pub fn from_rational(q: &Rational) -> Self {
        match q.is_integer().then(|| q.numer().to_i64()).flatten() {
            Some(n) => RationalDoc::Int(n),
            None => RationalDoc::Str(q.to_string()),
        }
    }

    pub fn to_rational(&self) -> Result<Rational> {
        match self {
            RationalDoc::Int(n) => Ok(Rational::from_integer(BigInt::from(*n))),
            RationalDoc::Str(s) => {
                let q: Rational = s.trim().parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
                Ok(q)
            }
        }
    }
}

fn qvec_doc(v: &[Rational]) -> Vec<RationalDoc> {
    v.iter().map(RationalDoc::from_rational).collect()
}

fn parse_qvec(v: &[RationalDoc], dim: usize) -> Result<QVec> {
    if v.len() != dim {
        return Err(Error::Parse(format!("expected {dim} coordinates, got {}", v.len())));
    }
    v.iter().map(RationalDoc::to_rational).collect()
}

fn parse_zvec(v: &[i64], dim: usize) -> Result<QVec> {
    if v.len() != dim {
        return Err(Error::Parse(format!("expected {dim} coordinates, got {}", v.len())));
    }
    Ok(v.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
}

fn ray_doc(r: &[BigInt]) -> Result<Vec<i64>> {
    r.iter().map(|x| x.to_i64().ok_or_else(|| Error::Invalid("ray entry exceeds 64 bits".into()))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyhedronDoc {
    pub vertices: Vec<Vec<RationalDoc>>,
    #[serde(default)]
    pub rays: Vec<Vec<i64>>,
}

impl PolyhedronDoc {
    pub fn from_polyhedron(p: &Polyhedron) -> Result<Self> {
        Ok(PolyhedronDoc {
            vertices: p.vertices().iter().map(|v| qvec_doc(v)).collect(),
            rays: p.tail().rays().iter().map(|r| ray_doc(r)).collect::<Result<_>>()?,
        })
    }

    pub fn to_polyhedron(&self, dim: usize) -> Result<Polyhedron> {
        let vs = self.vertices.iter().map(|v| parse_qvec(v, dim)).collect::<Result<Vec<_>>>()?;
        let rs = self.rays.iter().map(|r| parse_zvec(r, dim)).collect::<Result<Vec<_>>>()?;
        Polyhedron::from_raw(dim, &vs, &rs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoefficientDoc {
    Tag(String),
    Polyhedron(PolyhedronDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveDoc {
    pub genus: u32,
    pub points: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagsDoc {
    #[serde(default)]
    pub log_terminal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PDivisorDoc {
    pub tail: Vec<Vec<i64>>,
    #[serde(default)]
    pub coefficients: BTreeMap<String, CoefficientDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanDocument {
    pub schema_version: String,
    pub lattice_rank: usize,
    pub curve: CurveDoc,
    pub pdivisors: Vec<PDivisorDoc>,
    #[serde(default)]
    pub flags: FlagsDoc,
}

fn check_schema(v: &str) -> Result<()> {
    if v == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(Error::Parse(format!("unsupported schema_version {v:?}")))
    }
}

impl FanDocument {
    pub fn from_fan(s: &DivisorialFan, log_terminal: bool) -> Result<Self> {
        let mut pdivisors = Vec::new();
        for d in s.members() {
            let mut coefficients = BTreeMap::new();
            for (l, c) in d.nontrivial() {
                let doc = match c {
                    Coefficient::Empty => CoefficientDoc::Tag("empty".into()),
                    Coefficient::Polyhedron(p) => CoefficientDoc::Polyhedron(PolyhedronDoc::from_polyhedron(p)?),
                };
                coefficients.insert(l.clone(), doc);
            }
            let tail = d.tail().rays().iter().map(|r| ray_doc(r)).collect::<Result<_>>()?;
            pdivisors.push(PDivisorDoc { tail, coefficients });
        }
        Ok(FanDocument {
            schema_version: SCHEMA_VERSION.into(),
            lattice_rank: s.rank(),
            curve: CurveDoc { genus: s.curve().genus, points: s.curve().marked_points.clone() },
            pdivisors,
            flags: FlagsDoc { log_terminal },
        })
    }

    pub fn to_fan(&self) -> Result<DivisorialFan> {
        check_schema(&self.schema_version)?;
        let n = self.lattice_rank;
        let labels: Vec<&str> = self.curve.points.iter().map(String::as_str).collect();
        let curve = CurveData::new(self.curve.genus, &labels)?;
        let mut members = Vec::new();
        for d in &self.pdivisors {
            let rays = d.tail.iter().map(|r| parse_zvec(r, n)).collect::<Result<Vec<_>>>()?;
            let tail = Cone::new(n, &rays);
            let mut coefficients = BTreeMap::new();
            for (l, c) in &d.coefficients {
                let c = match c {
                    CoefficientDoc::Tag(t) if t == "empty" => Coefficient::Empty,
                    CoefficientDoc::Tag(t) => return Err(Error::Parse(format!("unknown coefficient tag {t:?}"))),
                    CoefficientDoc::Polyhedron(p) => Coefficient::Polyhedron(p.to_polyhedron(n)?),
                };
                coefficients.insert(l.clone(), c);
            }
            members.push(PDivisor::new(tail, coefficients)?);
        }
        DivisorialFan::new(n, curve, members)
    }
}

/// A polyhedral complex given by its cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub schema_version: String,
    pub ambient: usize,
    pub cells: Vec<PolyhedronDoc>,
}

impl ComplexDocument {
    pub fn from_complex(c: &PolyhedralComplex) -> Result<Self> {
        Ok(ComplexDocument {
            schema_version: SCHEMA_VERSION.into(),
            ambient: c.ambient(),
            cells: c.maximal_cells().into_iter().map(PolyhedronDoc::from_polyhedron).collect::<Result<_>>()?,
        })
    }

    pub fn to_complex(&self) -> Result<PolyhedralComplex> {
        check_schema(&self.schema_version)?;
        let cells = self.cells.iter().map(|c| c.to_polyhedron(self.ambient)).collect::<Result<Vec<_>>>()?;
        PolyhedralComplex::new(self.ambient, &cells)
    }
}

/// A fan of cones, each listed by generating rays.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToricFanDocument {
    pub schema_version: String,
    pub lattice_rank: usize,
    pub cones: Vec<Vec<Vec<i64>>>,
}

impl ToricFanDocument {
    pub fn to_fan(&self) -> Result<PolyhedralComplex> {
        check_schema(&self.schema_version)?;
        let n = self.lattice_rank;
        let cones = self
            .cones
            .iter()
            .map(|rs| Ok(Cone::new(n, &rs.iter().map(|r| parse_zvec(r, n)).collect::<Result<Vec<_>>>()?)))
            .collect::<Result<Vec<_>>>()?;
        PolyhedralComplex::from_cones(n, &cones)
    }
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("documents serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divfan::tests::{f2, hirzebruch2_fan};
    use crate::divfan::toric_downgrade;
    use crate::exactla::ratio;

    #[test]
    fn rationals() {
        assert_eq!(RationalDoc::from_rational(&ratio(-1, 2)), RationalDoc::Str("-1/2".into()));
        assert_eq!(RationalDoc::from_rational(&ratio(4, 2)), RationalDoc::Int(2));
        assert_eq!(RationalDoc::Str("2/4".into()).to_rational().unwrap(), ratio(1, 2));
        assert!(RationalDoc::Str("x".into()).to_rational().is_err());
    }

    #[test]
    fn fan_round_trip() {
        let f = f2();
        let text = to_canonical_json(&FanDocument::from_fan(&f, false).unwrap());
        let back = parse::<FanDocument>(&text).unwrap().to_fan().unwrap();
        assert_eq!(back.canonical(), f.canonical());
        assert_eq!(to_canonical_json(&FanDocument::from_fan(&back, false).unwrap()), text);
        assert!(text.contains("\"-1/2\""));
    }

    #[test]
    fn toric_and_complex() {
        let doc: ToricFanDocument = parse(
            r#"{"schema_version":"1","lattice_rank":2,"cones":[[[1,0],[0,1]],[[0,1],[-1,2]],[[-1,2],[0,-1]],[[0,-1],[1,0]]]}"#,
        )
        .unwrap();
        let fan = doc.to_fan().unwrap();
        assert_eq!(fan, hirzebruch2_fan());
        assert_eq!(toric_downgrade(&fan).unwrap().canonical(), f2().canonical());
        let c = ComplexDocument::from_complex(&fan).unwrap();
        assert_eq!(c.to_complex().unwrap(), fan);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse::<FanDocument>("{\"schema_version\": \"1\""), Err(Error::Parse(_))));
        let bad = r#"{"schema_version":"2","lattice_rank":1,"curve":{"genus":0,"points":[]},"pdivisors":[]}"#;
        assert!(matches!(parse::<FanDocument>(bad).unwrap().to_fan(), Err(Error::Parse(_))));
    }
}
