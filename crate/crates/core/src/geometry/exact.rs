//! Exact rational fallbacks for near-degenerate hull decisions.
//!
//! Every f64 is a dyadic rational, so lifting to `BigRational` is lossless.
//! These routines are only consulted when a float determinant falls below the
//! fallback threshold; they either certify genuine degeneracy or return the
//! exact answer.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::la::Point;

pub type Rat = BigRational;

pub fn rat(x: f64) -> Rat {
    BigRational::from_float(x).expect("finite float")
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    let num = r.numer();
    let den = r.denom();
    // scale down so the conversion stays in range
    let bits = num.bits().max(den.bits());
    if bits <= 52 {
        let n: f64 = num.to_string().parse().unwrap_or(f64::NAN);
        let d: f64 = den.to_string().parse().unwrap_or(f64::NAN);
        n / d
    } else {
        let shift = bits - 52;
        let n = num >> shift;
        let d = den >> shift;
        let nf: f64 = n.to_string().parse().unwrap_or(f64::NAN);
        let df: f64 = d.to_string().parse().unwrap_or(f64::NAN);
        nf / df
    }
}

pub fn rat_factorial(n: usize) -> Rat {
    let mut f = BigInt::one();
    for k in 1..=n {
        f *= BigInt::from(k);
    }
    BigRational::from_integer(f)
}

/// Exact determinant by fraction-free Gaussian elimination.
pub fn rat_det(rows: &[Vec<Rat>]) -> Rat {
    let n = rows.len();
    let mut a: Vec<Vec<Rat>> = rows.to_vec();
    let mut det = Rat::one();
    for col in 0..n {
        let piv = match (col..n).find(|&r| !a[r][col].is_zero()) {
            Some(p) => p,
            None => return Rat::zero(),
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        det *= a[col][col].clone();
        for r in col + 1..n {
            let f = &a[r][col] / &a[col][col];
            for c in col..n {
                let v = &a[col][c] * &f;
                a[r][c] -= v;
            }
        }
    }
    det
}

/// Exact solve of a square system; `None` when singular.
pub fn rat_solve(rows: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = rows.len();
    let mut a = rows.to_vec();
    let mut x = b.to_vec();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        if piv != col {
            a.swap(piv, col);
            x.swap(piv, col);
        }
        for r in col + 1..n {
            let f = &a[r][col] / &a[col][col];
            for c in col..n {
                let v = &a[col][c] * &f;
                a[r][c] -= v;
            }
            let v = &x[col] * &f;
            x[r] -= v;
        }
    }
    for col in (0..n).rev() {
        let piv = a[col][col].clone();
        x[col] /= piv;
        for r in 0..col {
            let v = &a[r][col] * &x[col];
            x[r] -= v;
        }
    }
    Some(x)
}

/// Exact version of the near-degenerate hyperplane-normal decision: `None`
/// when the points are genuinely affinely dependent, otherwise the exact
/// normal mapped back to f64.
pub fn exact_hyperplane_normal(pts: &[&[f64]]) -> Option<Point> {
    let n = pts[0].len();
    if n == 1 {
        return Some(vec![1.0]);
    }
    let diffs: Vec<Vec<Rat>> = (1..n)
        .map(|i| (0..n).map(|c| rat(pts[i][c]) - rat(pts[0][c])).collect())
        .collect();
    let mut normal: Vec<Rat> = Vec::with_capacity(n);
    for j in 0..n {
        let minor: Vec<Vec<Rat>> = diffs
            .iter()
            .map(|d| {
                d.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let mut m = rat_det(&minor);
        if j % 2 == 1 {
            m = -m;
        }
        normal.push(m);
    }
    if normal.iter().all(|v| v.is_zero()) {
        return None;
    }
    // rescale to unit max entry before converting to float
    let max = normal.iter().map(|v| v.abs()).max().unwrap();
    Some(normal.iter().map(|v| rat_to_f64(&(v / &max))).collect())
}

/// Exact version of the near-singular linear solve used in vertex
/// enumeration.
pub fn exact_solve(rows: &[Point], rhs: &[f64]) -> Option<Point> {
    let rat_rows: Vec<Vec<Rat>> =
        rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect();
    let rat_rhs: Vec<Rat> = rhs.iter().map(|&v| rat(v)).collect();
    let x = rat_solve(&rat_rows, &rat_rhs)?;
    Some(x.iter().map(rat_to_f64).collect())
}
