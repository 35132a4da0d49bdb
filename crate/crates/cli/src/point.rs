//! Typed points and their JSON / CSV forms.
//!
//! JSON points are `{"space": NAME, "coords": [...]}` with complex entries as
//! `[re, im]` pairs. Pair spaces list the coordinates of both factors in order.

use std::fmt;
use std::str::FromStr;

use branchcover::{
    Cp1Point, Cp2Point, PairS2, Quaternion, Rp2Point, Rp4Point, S2Point, S4Point, S5Point, C64,
};
use serde::{Deserialize, Serialize};
use serde_json::Value as Json;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    S2,
    S3,
    S4,
    S5,
    Cp1,
    Cp2,
    Rp2,
    Rp4,
    C2,
    C3,
    PairS2,
    PairCp1,
    PairRp2,
    R6,
}

impl Space {
    pub const ALL: [Space; 14] = [
        Space::S2,
        Space::S3,
        Space::S4,
        Space::S5,
        Space::Cp1,
        Space::Cp2,
        Space::Rp2,
        Space::Rp4,
        Space::C2,
        Space::C3,
        Space::PairS2,
        Space::PairCp1,
        Space::PairRp2,
        Space::R6,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Space::S2 => "S2",
            Space::S3 => "S3",
            Space::S4 => "S4",
            Space::S5 => "S5",
            Space::Cp1 => "CP1",
            Space::Cp2 => "CP2",
            Space::Rp2 => "RP2",
            Space::Rp4 => "RP4",
            Space::C2 => "C2",
            Space::C3 => "C3",
            Space::PairS2 => "PAIR_S2",
            Space::PairCp1 => "PAIR_CP1",
            Space::PairRp2 => "PAIR_RP2",
            Space::R6 => "R6",
        }
    }

    /// Number of coordinates and whether they are complex.
    pub fn arity(&self) -> (usize, bool) {
        match self {
            Space::S2 | Space::Rp2 => (3, false),
            Space::S3 => (4, false),
            Space::S4 | Space::Rp4 => (5, false),
            Space::S5 | Space::PairS2 | Space::PairRp2 | Space::R6 => (6, false),
            Space::Cp1 | Space::C2 => (2, true),
            Space::Cp2 | Space::C3 => (3, true),
            Space::PairCp1 => (4, true),
        }
    }

    /// Column names for CSV export, complex entries split into `_re`/`_im`.
    pub fn columns(&self, prefix: &str) -> Vec<String> {
        let base: Vec<String> = match self {
            Space::S2 | Space::Rp2 => vec!["x1".into(), "x2".into(), "x3".into()],
            Space::S3 => vec!["w".into(), "x".into(), "y".into(), "z".into()],
            Space::S4 | Space::Rp4 | Space::S5 | Space::R6 => {
                (1..=self.arity().0).map(|k| format!("x{k}")).collect()
            }
            Space::PairS2 | Space::PairRp2 => ["s1", "s2", "s3", "t1", "t2", "t3"].map(String::from).to_vec(),
            Space::Cp1 | Space::Cp2 | Space::C2 | Space::C3 => {
                (0..self.arity().0).map(|k| format!("z{k}")).collect()
            }
            Space::PairCp1 => ["p0", "p1", "q0", "q1"].map(String::from).to_vec(),
        };
        let complex = self.arity().1;
        base.into_iter()
            .flat_map(|c| {
                let c = format!("{prefix}{c}");
                if complex {
                    vec![format!("{c}_re"), format!("{c}_im")]
                } else {
                    vec![c]
                }
            })
            .collect()
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Space {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Space::ALL
            .into_iter()
            .find(|sp| sp.name() == s)
            .ok_or_else(|| CliError::Usage(format!("unknown space {s:?}")))
    }
}

/// A point of one of the supported spaces.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Point {
    S2(S2Point),
    S3(Quaternion),
    S4(S4Point),
    S5(S5Point),
    Cp1(Cp1Point),
    Cp2(Cp2Point),
    Rp2(Rp2Point),
    Rp4(Rp4Point),
    C2([C64; 2]),
    C3([C64; 3]),
    PairS2(PairS2),
    PairCp1([Cp1Point; 2]),
    PairRp2([Rp2Point; 2]),
    R6([f64; 6]),
}

/// Wire form of a point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointJson {
    pub space: String,
    pub coords: Vec<Json>,
}

/// `-0.0` becomes `0.0` so that output does not depend on the sign of zero.
fn clean(x: f64) -> f64 {
    x + 0.0
}

fn real_json(x: f64) -> Json {
    Json::from(clean(x))
}

fn complex_json(z: C64) -> Json {
    Json::Array(vec![real_json(z.re), real_json(z.im)])
}

fn array<const N: usize>(v: &[f64]) -> [f64; N] {
    std::array::from_fn(|i| v[i])
}

fn carray<const N: usize>(v: &[C64]) -> [C64; N] {
    std::array::from_fn(|i| v[i])
}

fn invalid(space: Space, e: branchcover::Error) -> CliError {
    CliError::Usage(format!("invalid {space} point: {e}"))
}

impl Point {
    pub fn space(&self) -> Space {
        match self {
            Point::S2(_) => Space::S2,
            Point::S3(_) => Space::S3,
            Point::S4(_) => Space::S4,
            Point::S5(_) => Space::S5,
            Point::Cp1(_) => Space::Cp1,
            Point::Cp2(_) => Space::Cp2,
            Point::Rp2(_) => Space::Rp2,
            Point::Rp4(_) => Space::Rp4,
            Point::C2(_) => Space::C2,
            Point::C3(_) => Space::C3,
            Point::PairS2(_) => Space::PairS2,
            Point::PairCp1(_) => Space::PairCp1,
            Point::PairRp2(_) => Space::PairRp2,
            Point::R6(_) => Space::R6,
        }
    }

    /// Real coordinates, used by spaces without complex entries.
    fn reals(&self) -> Option<Vec<f64>> {
        Some(match self {
            Point::S2(p) => p.coords().to_vec(),
            Point::S3(q) => vec![q.w, q.x, q.y, q.z],
            Point::S4(p) => p.coords().to_vec(),
            Point::S5(p) => p.coords().to_vec(),
            Point::Rp2(p) => p.coords().to_vec(),
            Point::Rp4(p) => p.coords().to_vec(),
            Point::PairS2(p) => p.coords().to_vec(),
            Point::PairRp2([a, b]) => a.coords().iter().chain(b.coords()).copied().collect(),
            Point::R6(v) => v.to_vec(),
            _ => return None,
        })
    }

    fn complexes(&self) -> Option<Vec<C64>> {
        Some(match self {
            Point::Cp1(p) => p.coords().to_vec(),
            Point::Cp2(p) => p.coords().to_vec(),
            Point::C2(v) => v.to_vec(),
            Point::C3(v) => v.to_vec(),
            Point::PairCp1([a, b]) => a.coords().iter().chain(b.coords()).copied().collect(),
            _ => return None,
        })
    }

    /// Flat real columns, complex entries as `re, im`.
    pub fn flat(&self) -> Vec<f64> {
        match self.complexes() {
            Some(zs) => zs.iter().flat_map(|z| [clean(z.re), clean(z.im)]).collect(),
            None => self.reals().expect("real space").into_iter().map(clean).collect(),
        }
    }

    pub fn to_json(&self) -> PointJson {
        let coords = match self.complexes() {
            Some(zs) => zs.into_iter().map(complex_json).collect(),
            None => self.reals().expect("real space").into_iter().map(real_json).collect(),
        };
        PointJson {
            space: self.space().name().to_string(),
            coords,
        }
    }

    pub fn from_json(p: &PointJson) -> Result<Point, CliError> {
        let space: Space = p.space.parse()?;
        let (n, complex) = space.arity();
        if p.coords.len() != n {
            return Err(CliError::Usage(format!(
                "{space} takes {n} coordinates, got {}",
                p.coords.len()
            )));
        }
        if complex {
            let zs = p.coords.iter().map(parse_complex).collect::<Result<Vec<_>, _>>()?;
            Point::from_complex(space, &zs)
        } else {
            let xs = p.coords.iter().map(parse_real).collect::<Result<Vec<_>, _>>()?;
            Point::from_real(space, &xs)
        }
    }

    fn from_real(space: Space, v: &[f64]) -> Result<Point, CliError> {
        let e = |err| invalid(space, err);
        Ok(match space {
            Space::S2 => Point::S2(S2Point::new(array(v)).map_err(e)?),
            Space::S3 => {
                let q = Quaternion::new(v[0], v[1], v[2], v[3]).normalized().map_err(e)?;
                Point::S3(q)
            }
            Space::S4 => Point::S4(S4Point::new(array(v)).map_err(e)?),
            Space::S5 => Point::S5(S5Point::new(array(v)).map_err(e)?),
            Space::Rp2 => Point::Rp2(Rp2Point::new(array(v)).map_err(e)?),
            Space::Rp4 => Point::Rp4(Rp4Point::new(array(v)).map_err(e)?),
            Space::PairS2 => Point::PairS2(PairS2::new(
                S2Point::new(array(&v[..3])).map_err(e)?,
                S2Point::new(array(&v[3..])).map_err(e)?,
            )),
            Space::PairRp2 => Point::PairRp2([
                Rp2Point::new(array(&v[..3])).map_err(e)?,
                Rp2Point::new(array(&v[3..])).map_err(e)?,
            ]),
            Space::R6 => Point::R6(array(v)),
            _ => unreachable!("complex space"),
        })
    }

    fn from_complex(space: Space, z: &[C64]) -> Result<Point, CliError> {
        let e = |err| invalid(space, err);
        Ok(match space {
            Space::Cp1 => Point::Cp1(Cp1Point::new(carray(z)).map_err(e)?),
            Space::Cp2 => Point::Cp2(Cp2Point::new(carray(z)).map_err(e)?),
            Space::C2 => Point::C2(carray(z)),
            Space::C3 => Point::C3(carray(z)),
            Space::PairCp1 => Point::PairCp1([
                Cp1Point::new(carray(&z[..2])).map_err(e)?,
                Cp1Point::new(carray(&z[2..])).map_err(e)?,
            ]),
            _ => unreachable!("real space"),
        })
    }
}

fn parse_real(v: &Json) -> Result<f64, CliError> {
    v.as_f64()
        .filter(|x| x.is_finite())
        .ok_or_else(|| CliError::Usage(format!("expected a finite number, got {v}")))
}

fn parse_complex(v: &Json) -> Result<C64, CliError> {
    match v {
        Json::Array(parts) if parts.len() == 2 => Ok(C64::new(parse_real(&parts[0])?, parse_real(&parts[1])?)),
        // a bare real is accepted as a complex number with zero imaginary part
        Json::Number(_) => Ok(C64::new(parse_real(v)?, 0.0)),
        _ => Err(CliError::Usage(format!("expected [re, im], got {v}"))),
    }
}

pub fn parse_point(text: &str) -> Result<Point, CliError> {
    let p: PointJson =
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("bad point JSON: {e}")))?;
    Point::from_json(&p)
}

/// Shortest representation that parses back to the same double.
pub fn fmt_real(x: f64) -> String {
    format!("{:?}", clean(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_bit_exact() {
        let p = Point::Cp2(Cp2Point::new([C64::new(0.1, -0.3), C64::new(1.0 / 3.0, 0.0), C64::new(-2.0, 1e-17)]).unwrap());
        let text = serde_json::to_string(&p.to_json()).unwrap();
        let back = parse_point(&text).unwrap();
        assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), text);
    }

    #[test]
    fn arity_and_names() {
        assert!(parse_point(r#"{"space":"S2","coords":[1,0]}"#).is_err());
        assert!(parse_point(r#"{"space":"XX","coords":[1,0]}"#).is_err());
        assert!(parse_point(r#"{"space":"CP1","coords":[[0,0],[0,0]]}"#).is_err());
        let p = parse_point(r#"{"space":"CP1","coords":[[1,0],[0,0]]}"#).unwrap();
        assert_eq!(p.space(), Space::Cp1);
        for s in Space::ALL {
            assert_eq!(s.name().parse::<Space>().unwrap(), s);
            let (n, c) = s.arity();
            assert_eq!(s.columns("").len(), if c { 2 * n } else { n });
        }
    }

    #[test]
    fn negative_zero_is_cleaned() {
        assert_eq!(fmt_real(-0.0), "0.0");
        let j = Point::R6([-0.0; 6]).to_json();
        assert_eq!(serde_json::to_string(&j).unwrap(), r#"{"space":"R6","coords":[0.0,0.0,0.0,0.0,0.0,0.0]}"#);
    }
}
