//! Point clouds: branch sets, level sets and map graphs.

use std::fmt::Write as _;
use std::str::FromStr;

use branchcover::maps::{big_g, eth, f_hat};
use branchcover::sampling::{random_cproj, random_level_pair, random_rproj};
use branchcover::{Cp1Point, Cp2Point, RngSpec, Rp2Point, Tolerance};
use rand::Rng;

use crate::point::{fmt_real, Point, Space};
use crate::registry::{eval, lookup, random_point};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    BranchSetG,
    BranchSetEth,
    CLevel,
    MapGraph,
}

impl FromStr for Target {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "branch-set-G" => Ok(Target::BranchSetG),
            "branch-set-eth" => Ok(Target::BranchSetEth),
            "c-level" => Ok(Target::CLevel),
            "map-graph" => Ok(Target::MapGraph),
            _ => Err(CliError::Usage(format!(
                "unknown target {s:?}; expected branch-set-G, branch-set-eth, c-level or map-graph"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(CliError::Usage(format!("unknown format {s:?}; expected csv or json"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CloudSpec {
    pub target: Target,
    pub x: f64,
    pub map: Option<String>,
    pub count: u64,
    pub seed: u64,
    pub format: Format,
}

impl CloudSpec {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.count < 1 {
            return Err(CliError::Usage("--count must be at least 1".into()));
        }
        if !(-1.0..=1.0).contains(&self.x) {
            return Err(CliError::Usage(format!("--x must lie in [-1, 1], got {}", self.x)));
        }
        if self.target == Target::MapGraph {
            lookup(self.map.as_deref().ok_or_else(|| CliError::Usage("map-graph needs --map".into()))?)?;
        }
        Ok(())
    }
}

/// One row: the sampled point, plus its image for map graphs.
type Row = (Point, Option<Point>);

fn row<R: Rng>(spec: &CloudSpec, rng: &mut R, tol: &Tolerance) -> Result<Row, CliError> {
    Ok(match spec.target {
        Target::BranchSetG => {
            // G of the conic f_hat(r, r) = [u^2 : 2uv : v^2]
            let r: Cp1Point = random_cproj(rng);
            (Point::S4(big_g(&f_hat(&r, &r))), None)
        }
        Target::BranchSetEth => {
            let v: Rp2Point = random_rproj(rng);
            let x = Cp2Point::from_real(*v.coords()).expect("unit vector");
            (Point::S4(eth(&x)), None)
        }
        Target::CLevel => (Point::PairS2(random_level_pair(spec.x, rng)), None),
        Target::MapGraph => {
            let name = spec.map.as_deref().expect("validated");
            let m = lookup(name)?;
            let input = random_point(m.domain, rng);
            let image = eval(name, &input, tol)?;
            (input, Some(image))
        }
    })
}

/// Renders the cloud. Row `i` is drawn from substream `i` of the seed, so
/// output is identical for identical arguments.
pub fn render(spec: &CloudSpec, tol: &Tolerance) -> Result<String, CliError> {
    spec.validate()?;
    let rng_spec = RngSpec::new(spec.seed);
    let rows = (0..spec.count)
        .map(|i| row(spec, &mut rng_spec.stream(i), tol))
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = String::new();
    match spec.format {
        Format::Csv => {
            let (space, cols) = header(spec)?;
            writeln!(out, "# space={space} cols={}", cols.join(",")).unwrap();
            for (p, img) in &rows {
                let vals: Vec<String> = p
                    .flat()
                    .into_iter()
                    .chain(img.iter().flat_map(|q| q.flat()))
                    .map(fmt_real)
                    .collect();
                writeln!(out, "{}", vals.join(",")).unwrap();
            }
        }
        Format::Json => {
            for (p, img) in &rows {
                let line = match img {
                    None => serde_json::to_string(&p.to_json()),
                    Some(q) => serde_json::to_string(&serde_json::json!({
                        "input": p.to_json(),
                        "image": q.to_json(),
                    })),
                }
                .expect("points serialize");
                writeln!(out, "{line}").unwrap();
            }
        }
    }
    Ok(out)
}

fn header(spec: &CloudSpec) -> Result<(String, Vec<String>), CliError> {
    Ok(match spec.target {
        Target::BranchSetG | Target::BranchSetEth => (Space::S4.to_string(), Space::S4.columns("")),
        Target::CLevel => (Space::PairS2.to_string(), Space::PairS2.columns("")),
        Target::MapGraph => {
            let m = lookup(spec.map.as_deref().expect("validated"))?;
            let mut cols = m.domain.columns("in_");
            cols.extend(m.codomain.columns("out_"));
            (format!("{}->{}", m.domain, m.codomain), cols)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use branchcover::fiber::fiber_fhat;
    use branchcover::maps::g_tilde;

    fn spec(target: Target) -> CloudSpec {
        CloudSpec {
            target,
            x: 0.0,
            map: None,
            count: 50,
            seed: 1,
            format: Format::Csv,
        }
    }

    fn parse_rows(text: &str) -> Vec<Vec<f64>> {
        text.lines()
            .skip(1)
            .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
            .collect()
    }

    #[test]
    fn c_level_rows_have_the_requested_dot() {
        let tol = Tolerance::default();
        for x in [-1.0, -0.3, 0.0, 0.7, 1.0] {
            let text = render(&CloudSpec { x, ..spec(Target::CLevel) }, &tol).unwrap();
            assert!(text.starts_with("# space=PAIR_S2 cols=s1,s2,s3,t1,t2,t3\n"));
            for r in parse_rows(&text) {
                let d = r[0] * r[3] + r[1] * r[4] + r[2] * r[5];
                assert!((d - x).abs() <= 1e-12, "{x} {d}");
            }
        }
    }

    #[test]
    fn branch_set_g_rows_come_from_the_conic() {
        let tol = Tolerance::default();
        let text = render(&spec(Target::BranchSetG), &tol).unwrap();
        let rng_spec = RngSpec::new(1);
        for (i, r) in parse_rows(&text).iter().enumerate() {
            let n: f64 = r.iter().map(|v| v * v).sum();
            assert!((n - 1.0).abs() < 1e-12);
            // the row is G of a conic point, whose f_hat fiber is a double class
            let u: Cp1Point = random_cproj(&mut rng_spec.stream(i as u64));
            let z = f_hat(&u, &u);
            let fib = fiber_fhat(&z, &tol);
            assert_eq!(fib.len(), 1);
            assert_eq!(fib.classes[0].multiplicity, 2);
            let back = branchcover::PairS2::new(
                branchcover::maps::gamma_inv(&fib.classes[0].point[0]),
                branchcover::maps::gamma_inv(&fib.classes[0].point[1]),
            );
            let y = g_tilde(&back);
            let err: f64 = y.coords().iter().zip(r).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt();
            assert!(err < 1e-9);
        }
    }

    #[test]
    fn output_is_deterministic_and_validated() {
        let tol = Tolerance::default();
        let s = CloudSpec {
            map: Some("G".into()),
            format: Format::Json,
            ..spec(Target::MapGraph)
        };
        assert_eq!(render(&s, &tol).unwrap(), render(&s, &tol).unwrap());
        assert!(render(&CloudSpec { count: 0, ..spec(Target::CLevel) }, &tol).is_err());
        assert!(render(&CloudSpec { x: 1.5, ..spec(Target::CLevel) }, &tol).is_err());
        assert!(render(&spec(Target::MapGraph), &tol).is_err());
    }
}
