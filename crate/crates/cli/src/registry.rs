//! Published map registry for `eval`, `fiber` and `sample --target map-graph`.

use branchcover::fiber::{fhat_forward_error, fiber_big_g, fiber_fhat, fiber_g_real, fiber_g_tilde, fiber_lambda, Fiber};
use branchcover::maps::{
    antipodal_cp1, big_g, conj_cp, eta_kuiper, eth, f_hat, g_plus, g_real, g_tilde, gamma, gamma_inv,
    h_map, lambda_map, s3_double_cover, theta, theta_inv,
};
use branchcover::sampling::{random_cproj, random_pair, random_rproj, random_sphere, random_unit_cvec, random_unit_quaternion};
use branchcover::{DihedralElement, Error, Tolerance};
use rand::Rng;
use serde::Serialize;

use crate::point::{Point, PointJson, Space};
use crate::CliError;

#[derive(Clone, Copy, Debug)]
pub struct MapSpec {
    pub name: &'static str,
    pub domain: Space,
    pub codomain: Space,
}

pub const MAPS: &[MapSpec] = &[
    MapSpec { name: "gamma", domain: Space::S2, codomain: Space::Cp1 },
    MapSpec { name: "gamma_inv", domain: Space::Cp1, codomain: Space::S2 },
    MapSpec { name: "antipodal_cp1", domain: Space::Cp1, codomain: Space::Cp1 },
    MapSpec { name: "sigma", domain: Space::PairS2, codomain: Space::PairS2 },
    MapSpec { name: "tau", domain: Space::PairS2, codomain: Space::PairS2 },
    MapSpec { name: "f_hat", domain: Space::PairCp1, codomain: Space::Cp2 },
    MapSpec { name: "lambda", domain: Space::PairS2, codomain: Space::Cp2 },
    MapSpec { name: "c2", domain: Space::Cp2, codomain: Space::Cp2 },
    MapSpec { name: "theta", domain: Space::Cp2, codomain: Space::Cp2 },
    MapSpec { name: "theta_inv", domain: Space::Cp2, codomain: Space::Cp2 },
    MapSpec { name: "g", domain: Space::PairRp2, codomain: Space::Rp4 },
    MapSpec { name: "g_tilde", domain: Space::PairS2, codomain: Space::S4 },
    MapSpec { name: "G", domain: Space::Cp2, codomain: Space::S4 },
    MapSpec { name: "eth", domain: Space::Cp2, codomain: Space::S4 },
    MapSpec { name: "g_plus", domain: Space::PairS2, codomain: Space::S4 },
    MapSpec { name: "h", domain: Space::PairS2, codomain: Space::Rp4 },
    MapSpec { name: "eta", domain: Space::C3, codomain: Space::R6 },
    MapSpec { name: "s3_cover", domain: Space::S3, codomain: Space::PairS2 },
];

/// Maps with a closed-form fiber solver.
pub const FIBER_MAPS: &[&str] = &["f_hat", "lambda", "g", "g_tilde", "G"];

pub fn lookup(name: &str) -> Result<&'static MapSpec, CliError> {
    MAPS.iter().find(|m| m.name == name).ok_or_else(|| {
        let names: Vec<&str> = MAPS.iter().map(|m| m.name).collect();
        CliError::Usage(format!("unknown map {name:?}; known maps: {}", names.join(", ")))
    })
}

fn mismatch(spec: &MapSpec, got: Space) -> CliError {
    CliError::Usage(format!("map {} takes a {} point, got {got}", spec.name, spec.domain))
}

pub fn eval(name: &str, p: &Point, tol: &Tolerance) -> Result<Point, CliError> {
    let spec = lookup(name)?;
    if p.space() != spec.domain {
        return Err(mismatch(spec, p.space()));
    }
    Ok(match (spec.name, p) {
        ("gamma", Point::S2(s)) => Point::Cp1(gamma(s)),
        ("gamma_inv", Point::Cp1(z)) => Point::S2(gamma_inv(z)),
        ("antipodal_cp1", Point::Cp1(z)) => Point::Cp1(antipodal_cp1(z)),
        ("sigma", Point::PairS2(q)) => Point::PairS2(DihedralElement::SIGMA.apply(q)),
        ("tau", Point::PairS2(q)) => Point::PairS2(DihedralElement::TAU.apply(q)),
        ("f_hat", Point::PairCp1([a, b])) => Point::Cp2(f_hat(a, b)),
        ("lambda", Point::PairS2(q)) => Point::Cp2(lambda_map(q)),
        ("c2", Point::Cp2(z)) => Point::Cp2(conj_cp(z)),
        ("theta", Point::Cp2(z)) => Point::Cp2(theta(z)),
        ("theta_inv", Point::Cp2(z)) => Point::Cp2(theta_inv(z)),
        ("g", Point::PairRp2([a, b])) => Point::Rp4(g_real(a, b)),
        ("g_tilde", Point::PairS2(q)) => Point::S4(g_tilde(q)),
        ("G", Point::Cp2(z)) => Point::S4(big_g(z)),
        ("eth", Point::Cp2(z)) => Point::S4(eth(z)),
        ("g_plus", Point::PairS2(q)) => Point::S4(g_plus(q)),
        ("h", Point::PairS2(q)) => Point::Rp4(h_map(q)),
        ("eta", Point::C3(v)) => Point::R6(eta_kuiper(v)),
        ("s3_cover", Point::S3(q)) => {
            Point::PairS2(s3_double_cover(q, tol).map_err(|e| CliError::Usage(e.to_string()))?)
        }
        _ => unreachable!("domain checked above"),
    })
}

/// Uniform random point of a map domain.
pub fn random_point<R: Rng>(space: Space, rng: &mut R) -> Point {
    match space {
        Space::S2 => Point::S2(random_sphere(rng)),
        Space::S3 => Point::S3(random_unit_quaternion(rng)),
        Space::S4 => Point::S4(random_sphere(rng)),
        Space::S5 => Point::S5(random_sphere(rng)),
        Space::Cp1 => Point::Cp1(random_cproj(rng)),
        Space::Cp2 => Point::Cp2(random_cproj(rng)),
        Space::Rp2 => Point::Rp2(random_rproj(rng)),
        Space::Rp4 => Point::Rp4(random_rproj(rng)),
        Space::C2 => Point::C2(random_unit_cvec(rng)),
        Space::C3 => Point::C3(random_unit_cvec(rng)),
        Space::PairS2 => Point::PairS2(random_pair(rng)),
        Space::PairCp1 => Point::PairCp1([random_cproj(rng), random_cproj(rng)]),
        Space::PairRp2 => Point::PairRp2([random_rproj(rng), random_rproj(rng)]),
        Space::R6 => {
            let s = random_sphere::<6, _>(rng);
            Point::R6(*s.coords())
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberClassJson {
    pub point: PointJson,
    pub multiplicity: u32,
    pub forward_error: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberJson {
    pub map: String,
    pub target: PointJson,
    pub on_branch: bool,
    pub degree: u32,
    pub classes: Vec<FiberClassJson>,
}

fn degenerate(e: Error) -> CliError {
    match e {
        Error::DegenerateFiber(msg) => CliError::Degenerate(msg),
        other => CliError::Usage(other.to_string()),
    }
}

/// Fiber of `name` over `target`. Every class is checked by forward
/// evaluation; a class missing the target by more than `sqrt(eq_tol)` turns the
/// whole answer into a degenerate-fiber error.
pub fn fiber(name: &str, target: &Point, tol: &Tolerance) -> Result<FiberJson, CliError> {
    if !FIBER_MAPS.contains(&name) {
        return Err(CliError::Usage(format!(
            "no fiber solver for {name:?}; available: {}",
            FIBER_MAPS.join(", ")
        )));
    }
    let spec = lookup(name)?;
    if target.space() != spec.codomain {
        return Err(CliError::Usage(format!(
            "fiber of {} is taken over a {} point, got {}",
            spec.name,
            spec.codomain,
            target.space()
        )));
    }
    fn collect<T>(fib: Fiber<T>, wrap: impl Fn(&T) -> Point, err: impl Fn(&T) -> f64) -> (bool, u32, Vec<FiberClassJson>) {
        let classes = fib
            .classes
            .iter()
            .map(|c| FiberClassJson {
                point: wrap(&c.point).to_json(),
                multiplicity: c.multiplicity,
                forward_error: err(&c.point),
            })
            .collect();
        (fib.on_branch, fib.degree(), classes)
    }
    let (on_branch, degree, classes) = match target {
        Point::Cp2(z) if name == "f_hat" => collect(
            fiber_fhat(z, tol),
            |p| Point::PairCp1(*p),
            |p| fhat_forward_error(p, z),
        ),
        Point::Cp2(z) => collect(
            fiber_lambda(z, tol),
            |p| Point::PairS2(*p),
            |p| lambda_map(p).chordal_distance(z),
        ),
        Point::Rp4(y) => collect(
            fiber_g_real(y, tol).map_err(degenerate)?,
            |p| Point::PairRp2(*p),
            |p| g_real(&p[0], &p[1]).chordal_distance(y),
        ),
        Point::S4(y) if name == "g_tilde" => collect(
            fiber_g_tilde(y, tol).map_err(degenerate)?,
            |p| Point::PairS2(*p),
            |p| g_tilde(p).distance(y),
        ),
        Point::S4(y) => collect(
            fiber_big_g(y, tol).map_err(degenerate)?,
            |p| Point::Cp2(*p),
            |p| big_g(p).distance(y),
        ),
        _ => unreachable!("codomain checked above"),
    };
    let limit = tol.eq_tol.sqrt();
    if let Some(bad) = classes.iter().find(|c| !(c.forward_error <= limit)) {
        return Err(CliError::Degenerate(format!(
            "preimage misses the target by {:e} (limit {limit:e})",
            bad.forward_error
        )));
    }
    Ok(FiberJson {
        map: name.to_string(),
        target: target.to_json(),
        on_branch,
        degree,
        classes,
    })
}
