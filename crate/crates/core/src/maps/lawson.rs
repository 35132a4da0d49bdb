use crate::geometry::{Cp1Point, Cp2Point, CplxProjPoint, C64};

use super::{gamma, PairS2};

/// `([u:v], [u':v']) -> [uu' : uv' + u'v : vv']`, the symmetric product map.
/// The diagonal lands on the conic `z1^2 = 4 z0 z2`.
pub fn f_hat(p: &Cp1Point, q: &Cp1Point) -> Cp2Point {
    let [u, v] = *p.coords();
    let [u2, v2] = *q.coords();
    Cp2Point::new([u * u2, u * v2 + u2 * v, v * v2]).expect("f_hat never vanishes")
}

/// `lambda = f_hat . (gamma x gamma)`, invariant under the swap.
pub fn lambda_map(p: &PairS2) -> Cp2Point {
    f_hat(&gamma(&p.first), &gamma(&p.second))
}

/// Complex conjugation `c_n`.
pub fn conj_cp<const D: usize>(p: &CplxProjPoint<D>) -> CplxProjPoint<D> {
    p.conj()
}

const I: C64 = C64::new(0.0, 1.0);

fn apply3(m: [[C64; 3]; 3], p: &Cp2Point) -> Cp2Point {
    let z = p.coords();
    let out = std::array::from_fn(|r| m[r][0] * z[0] + m[r][1] * z[1] + m[r][2] * z[2]);
    Cp2Point::new(out).expect("invertible linear map")
}

/// `theta([u:v:w]) = [iu + w : (1 - i) v : u + iw]`.
pub fn theta(p: &Cp2Point) -> Cp2Point {
    let zero = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    apply3(
        [[I, zero, one], [zero, one - I, zero], [one, zero, I]],
        p,
    )
}

/// Matrix inverse of `theta`: `(1/2) [[-i, 0, 1], [0, 1 + i, 0], [1, 0, -i]]`.
pub fn theta_inv(p: &Cp2Point) -> Cp2Point {
    let zero = C64::new(0.0, 0.0);
    let half = C64::new(0.5, 0.0);
    apply3(
        [
            [-I * 0.5, zero, half],
            [zero, (C64::new(1.0, 0.0) + I) * 0.5, zero],
            [half, zero, -I * 0.5],
        ],
        p,
    )
}

/// `theta^2([u:v:w]) = [w : -v : u]`, in closed form.
pub fn theta_squared(p: &Cp2Point) -> Cp2Point {
    let [u, v, w] = *p.coords();
    Cp2Point::new([w, -v, u]).expect("permutation of a unit vector")
}
