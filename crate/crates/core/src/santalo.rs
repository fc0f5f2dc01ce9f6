//! Santaló point computation and volume-product certification.
//!
//! Two independent routes are kept deliberately separate:
//!
//! * [`santalo_functional`] evaluates |(K−z)°| = ∫_{K°} (1−⟨z,x⟩)^{−(n+1)} dx
//!   by simplicial cubature over a fixed decomposition of K° (degree-5 rules,
//!   adaptive longest-edge refinement — the integrand blows up at the
//!   hyperplane 1−⟨z,x⟩ = 0 as z approaches the boundary).
//! * [`santalo_point`] runs a damped Newton iteration whose value, gradient
//!   and Hessian come from exact polytope moments of (K−z)° itself:
//!   ∇|(K−z)°| = (n+1)∫_{(K−z)°} x dx and ∇²|(K−z)°| = (n+1)(n+2)∫ x xᵀ dx.
//!
//! Tests cross-check the two routes against each other.

use thiserror::Error;

use crate::geometry::{self, hull, ConvexBody, GeometryError, Shape};
use crate::la::{self, Mat, Point};
use crate::ledger::Ledger;
use crate::tol;

#[derive(Debug, Error)]
pub enum SantaloError {
    #[error("evaluation point lies outside the interior of the body")]
    PointOutside,
    #[error("integrand 1-<z,x> is nonpositive on the polar; integral diverges")]
    DivergentIntegral,
    #[error("Newton did not converge within {iterations} iterations (best gradient norm {grad_norm})")]
    MaxIterations { iterations: usize, grad_norm: f64, best: SantaloResult },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

pub type Result<T> = std::result::Result<T, SantaloError>;

/// Output of the Santaló point solver.
#[derive(Clone, Debug)]
pub struct SantaloResult {
    pub point: Point,
    /// |(K−z*)°| at the returned point.
    pub polar_volume: f64,
    pub iterations: usize,
    pub grad_norm: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VolumeProductMode {
    AtSantalo,
    AtOrigin,
}

// ---------------------------------------------------------------------------
// degree-5 simplex cubature
// ---------------------------------------------------------------------------

/// Barycentric nodes and weights (summing to 1) for the d-simplex.
fn simplex_rule(d: usize) -> Vec<(Vec<f64>, f64)> {
    match d {
        1 => {
            // 3-point Gauss-Legendre, degree 5
            let g = (3.0f64 / 5.0).sqrt();
            vec![
                (vec![0.5 * (1.0 - g), 0.5 * (1.0 + g)], 5.0 / 18.0),
                (vec![0.5, 0.5], 8.0 / 18.0),
                (vec![0.5 * (1.0 + g), 0.5 * (1.0 - g)], 5.0 / 18.0),
            ]
        }
        2 => {
            // 7-point Radon rule, degree 5
            let s15 = 15.0f64.sqrt();
            let a = (6.0 - s15) / 21.0;
            let b = (6.0 + s15) / 21.0;
            let wa = (155.0 - s15) / 1200.0;
            let wb = (155.0 + s15) / 1200.0;
            let mut pts = vec![(vec![1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0], 9.0 / 40.0)];
            for rot in 0..3 {
                let mut p = vec![a, a, 1.0 - 2.0 * a];
                p.rotate_right(rot);
                pts.push((p, wa));
                let mut q = vec![b, b, 1.0 - 2.0 * b];
                q.rotate_right(rot);
                pts.push((q, wb));
            }
            pts
        }
        3 => {
            // 15-point Keast rule, degree 5 (weights relative to the volume)
            let mut pts = Vec::new();
            pts.push((vec![0.25, 0.25, 0.25, 0.25], 0.1817020685825351));
            let push_orbit3 = |pts: &mut Vec<(Vec<f64>, f64)>, a: f64, w: f64| {
                // barycentric (a,a,a,1-3a) over 4 placements
                for k in 0..4 {
                    let mut p = vec![a; 4];
                    p[k] = 1.0 - 3.0 * a;
                    pts.push((p.clone(), w));
                }
            };
            push_orbit3(&mut pts, 1.0 / 3.0, 0.0361607142857143);
            push_orbit3(&mut pts, 1.0 / 11.0, 0.0698714945161738);
            // orbit (a,a,1/2-a,1/2-a), 6 placements
            let a = 0.0665501535736643;
            let w = 0.0656948493683187;
            for i in 0..3usize {
                for j in (i + 1)..4usize {
                    let mut p = vec![0.5 - a; 4];
                    p[i] = a;
                    p[j] = a;
                    pts.push((p, w));
                }
            }
            pts
        }
        _ => {
            // centroid rule; adaptivity supplies the accuracy in dimension 4
            vec![(vec![1.0 / (d as f64 + 1.0); d + 1], 1.0)]
        }
    }
}

fn apply_rule(simplex: &[Point], rule: &[(Vec<f64>, f64)], f: &dyn Fn(&[f64]) -> f64) -> f64 {
    let vol = hull::simplex_volume(simplex);
    let n = simplex[0].len();
    let mut acc = 0.0;
    for (bary, w) in rule {
        let mut x = vec![0.0; n];
        for (v, &b) in simplex.iter().zip(bary.iter()) {
            for j in 0..n {
                x[j] += b * v[j];
            }
        }
        acc += w * f(&x);
    }
    acc * vol
}

fn split_longest_edge(simplex: &[Point]) -> (Vec<Point>, Vec<Point>) {
    let mut best = (0usize, 1usize);
    let mut best_len = -1.0;
    for i in 0..simplex.len() {
        for j in (i + 1)..simplex.len() {
            let l = la::dist(&simplex[i], &simplex[j]);
            if l > best_len {
                best_len = l;
                best = (i, j);
            }
        }
    }
    let mid = la::scale(&la::add(&simplex[best.0], &simplex[best.1]), 0.5);
    let mut a = simplex.to_vec();
    a[best.0] = mid.clone();
    let mut b = simplex.to_vec();
    b[best.1] = mid;
    (a, b)
}

/// Red (all-edge-midpoint) subdivision. A single-edge bisection is blind to
/// integrand variation orthogonal to the split, which stalls the error
/// estimator; red subdivision halves every direction at once.
fn red_children(simplex: &[Point]) -> Vec<Vec<Point>> {
    let mid =
        |i: usize, j: usize| la::scale(&la::add(&simplex[i], &simplex[j]), 0.5);
    match simplex.len() {
        2 => {
            let m = mid(0, 1);
            vec![
                vec![simplex[0].clone(), m.clone()],
                vec![m, simplex[1].clone()],
            ]
        }
        3 => {
            let (m01, m02, m12) = (mid(0, 1), mid(0, 2), mid(1, 2));
            vec![
                vec![simplex[0].clone(), m01.clone(), m02.clone()],
                vec![simplex[1].clone(), m01.clone(), m12.clone()],
                vec![simplex[2].clone(), m02.clone(), m12.clone()],
                vec![m01, m02, m12],
            ]
        }
        4 => {
            // Bey's decomposition with diagonal m02–m13
            let (m01, m02, m03) = (mid(0, 1), mid(0, 2), mid(0, 3));
            let (m12, m13, m23) = (mid(1, 2), mid(1, 3), mid(2, 3));
            vec![
                vec![simplex[0].clone(), m01.clone(), m02.clone(), m03.clone()],
                vec![m01.clone(), simplex[1].clone(), m12.clone(), m13.clone()],
                vec![m02.clone(), m12.clone(), simplex[2].clone(), m23.clone()],
                vec![m03.clone(), m13.clone(), m23.clone(), simplex[3].clone()],
                vec![m01.clone(), m02.clone(), m03.clone(), m13.clone()],
                vec![m01, m02.clone(), m12.clone(), m13.clone()],
                vec![m02.clone(), m03, m13.clone(), m23.clone()],
                vec![m02, m12, m13, m23],
            ]
        }
        _ => {
            let (a, b) = split_longest_edge(simplex);
            vec![a, b]
        }
    }
}

fn integrate_adaptive(
    simplex: &[Point],
    rule: &[(Vec<f64>, f64)],
    f: &dyn Fn(&[f64]) -> f64,
    tol_abs: f64,
    depth: usize,
) -> f64 {
    let coarse = apply_rule(simplex, rule, f);
    let children = red_children(simplex);
    let fine: f64 = children.iter().map(|c| apply_rule(c, rule, f)).sum();
    if (fine - coarse).abs() <= tol_abs || depth >= 14 {
        fine
    } else {
        let child_tol = tol_abs / children.len() as f64;
        children
            .iter()
            .map(|c| integrate_adaptive(c, rule, f, child_tol, depth + 1))
            .sum()
    }
}

/// ∫_body f dx by adaptive simplicial cubature over the cached decomposition.
pub fn integrate_over_polytope(body: &ConvexBody, f: &dyn Fn(&[f64]) -> f64, rel_tol: f64) -> f64 {
    let p = body.polytope().expect("polytope");
    let rule = simplex_rule(body.dim);
    let coarse: f64 = p.simplices.iter().map(|s| apply_rule(s, &rule, f)).sum();
    let budget = rel_tol * coarse.abs().max(1e-300) / p.simplices.len() as f64;
    p.simplices
        .iter()
        .map(|s| integrate_adaptive(s, &rule, f, budget, 0))
        .sum()
}

// ---------------------------------------------------------------------------
// the functional and its minimizer
// ---------------------------------------------------------------------------

/// |(K−z)°| = ∫_{K°} (1−⟨z,x⟩)^{−(n+1)} dx by quadrature.
pub fn santalo_functional(body: &ConvexBody, z: &[f64]) -> Result<f64> {
    if !body.origin_interior(0.0) {
        return Err(SantaloError::PointOutside);
    }
    if !body.contains_interior(z, 0.0) {
        return Err(SantaloError::PointOutside);
    }
    let n = body.dim as i32;
    match body.shape() {
        Shape::Polytope(_) => {
            let polar = geometry::polar(body)?;
            // divergence check on the polar's vertices (the maximum of ⟨z,·⟩)
            let hit = polar
                .polytope()
                .unwrap()
                .vertices
                .iter()
                .any(|x| 1.0 - la::dot(z, x) <= 0.0);
            if hit {
                return Err(SantaloError::DivergentIntegral);
            }
            let zz: Point = z.to_vec();
            let f = move |x: &[f64]| (1.0 - la::dot(&zz, x)).powi(-(n + 1));
            Ok(integrate_over_polytope(&polar, &f, 1e-10))
        }
        // smooth bodies: polar coordinates, (1/n)∫ (h_K(u)−⟨z,u⟩)^{−n} dσ
        _ => Ok(smooth_polar_volume(body, z)),
    }
}

fn smooth_polar_volume(body: &ConvexBody, z: &[f64]) -> f64 {
    let n = body.dim;
    let denom = |u: &[f64]| geometry::support_function(body, u) - la::dot(z, u);
    match n {
        2 => {
            let m = 4096usize;
            let mut acc = 0.0;
            for k in 0..m {
                let th = 2.0 * std::f64::consts::PI * k as f64 / m as f64;
                let u = [th.cos(), th.sin()];
                acc += denom(&u).powi(-2);
            }
            acc * (2.0 * std::f64::consts::PI / m as f64) / 2.0
        }
        3 => {
            // Gauss-Legendre in cosθ × trapezoid in φ
            let (nodes, weights) = gauss_legendre(96);
            let mphi = 192usize;
            let mut acc = 0.0;
            for (c, w) in nodes.iter().zip(weights.iter()) {
                let s = (1.0 - c * c).sqrt();
                for k in 0..mphi {
                    let phi = 2.0 * std::f64::consts::PI * k as f64 / mphi as f64;
                    let u = [s * phi.cos(), s * phi.sin(), *c];
                    acc += w * denom(&u).powi(-3);
                }
            }
            acc * (2.0 * std::f64::consts::PI / mphi as f64) / 3.0
        }
        _ => {
            // centered smooth bodies in other dimensions: exact when z = 0
            let polar = geometry::polar(body).expect("smooth polar");
            assert!(la::norm(z) < 1e-14, "smooth-body functional needs z=0 in dim {n}");
            polar.volume()
        }
    }
}

/// Gauss-Legendre nodes/weights on [−1, 1] by Newton on Legendre polynomials.
pub fn gauss_legendre(m: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0f64, x);
            for k in 2..=m {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            let dp = m as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (mut p0, mut p1) = (1.0f64, x);
        for k in 2..=m {
            let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
            p0 = p1;
            p1 = p2;
        }
        let dp = m as f64 * (x * p1 - p0) / (x * x - 1.0);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// Exact volume/gradient/Hessian of z ↦ |(K−z)°| for a polytope K:
/// the polar (K−z)° is itself a polytope whose moments are exact.
fn polar_moments(vertices: &[Point], z: &[f64]) -> Result<(f64, Point, Mat, ConvexBody)> {
    let n = z.len() as f64;
    let verts_polar: Vec<Point> = vertices.iter().map(|v| la::sub(v, z)).collect();
    // (K−z)° has H-representation ⟨v−z, x⟩ ≤ 1 over the vertices of K
    let polar =
        ConvexBody::from_halfspaces(verts_polar.iter().map(|v| (v.clone(), 1.0)).collect())?;
    let vol = polar.volume();
    let grad = la::scale(polar.barycenter(), (n + 1.0) * vol);
    let m2 = polar.second_moment();
    let mut hess = Mat::zeros(z.len());
    for i in 0..z.len() {
        for j in 0..z.len() {
            hess[(i, j)] = (n + 1.0) * (n + 2.0) * m2[(i, j)];
        }
    }
    Ok((vol, grad, hess, polar))
}

/// The unique minimizer of z ↦ |(K−z)°| by damped Newton with interior
/// backtracking. Gradient norm at the returned point is ≤ `grad_tol`.
pub fn santalo_point(body: &ConvexBody, grad_tol: f64) -> Result<SantaloResult> {
    if !body.origin_interior(0.0) {
        return Err(SantaloError::PointOutside);
    }
    let vertices = match body.shape() {
        Shape::Polytope(p) => p.vertices.clone(),
        // balls and ellipsoids are centered by construction
        _ => {
            let polar = geometry::polar(body)?;
            return Ok(SantaloResult {
                point: vec![0.0; body.dim],
                polar_volume: polar.volume(),
                iterations: 0,
                grad_norm: 0.0,
            });
        }
    };

    let mut z = vec![0.0; body.dim];
    if !body.contains_interior(&z, tol::NEWTON_MARGIN_REL) {
        z = body.barycenter().clone();
    }
    let (mut vol, mut grad, mut hess, _polar) = polar_moments(&vertices, &z)?;
    let mut best = SantaloResult {
        point: z.clone(),
        polar_volume: vol,
        iterations: 0,
        grad_norm: la::norm(&grad),
    };

    let max_iter = 100usize;
    for it in 0..max_iter {
        let gn = la::norm(&grad);
        if gn < best.grad_norm {
            best = SantaloResult {
                point: z.clone(),
                polar_volume: vol,
                iterations: it,
                grad_norm: gn,
            };
        }
        if gn <= grad_tol {
            return Ok(SantaloResult { point: z, polar_volume: vol, iterations: it, grad_norm: gn });
        }
        let dir = match hess.solve(&grad, 1e-300) {
            Some(d) => la::scale(&d, -1.0),
            None => la::scale(&grad, -1.0 / gn.max(1.0)),
        };
        // backtrack: stay strictly interior with margin, decrease the volume
        let mut moved = false;
        let mut t = 1.0f64;
        for _ in 0..60 {
            let cand = la::axpy(&z, t, &dir);
            if body.contains_interior(&cand, tol::NEWTON_MARGIN_REL) {
                if let Ok((v2, g2, h2, _p2)) = polar_moments(&vertices, &cand) {
                    if v2 < vol {
                        z = cand;
                        vol = v2;
                        grad = g2;
                        hess = h2;
                        moved = true;
                        break;
                    }
                }
            }
            t *= 0.5;
        }
        if !moved {
            break;
        }
    }
    let gn = la::norm(&grad);
    if gn <= grad_tol {
        return Ok(SantaloResult { point: z, polar_volume: vol, iterations: max_iter, grad_norm: gn });
    }
    Err(SantaloError::MaxIterations { iterations: max_iter, grad_norm: best.grad_norm, best })
}

/// |K|·|(K−z)°| with z the Santaló point or the origin.
pub fn volume_product(body: &ConvexBody, mode: VolumeProductMode) -> Result<f64> {
    match mode {
        VolumeProductMode::AtOrigin => {
            let polar = geometry::polar(body)?;
            Ok(body.volume() * polar.volume())
        }
        VolumeProductMode::AtSantalo => {
            let res = santalo_point(body, tol::SANTALO_GRAD_TOL)?;
            Ok(body.volume() * res.polar_volume)
        }
    }
}

/// Blaschke-Santaló with barycenter correction:
/// |K||K°| ≤ |B₂ⁿ|²(1−⟨San(K°), bar(K)⟩)^{n+1}.
pub fn bs_check(body: &ConvexBody) -> Result<Ledger> {
    let n = body.dim;
    let polar = geometry::polar(body)?;
    let lhs = body.volume() * polar.volume();
    let san_polar = santalo_point(&polar, tol::SANTALO_GRAD_TOL)?;
    let bar = body.barycenter();
    let corr = la::dot(&san_polar.point, bar);
    let ub = geometry::unit_ball_volume(n);
    let rhs = ub * ub * (1.0 - corr).powi(n as i32 + 1);
    let ledger_tol = tol::LEDGER_REL * rhs.abs().max(1.0);
    let mut ledger = Ledger::compare(
        "blaschke-santalo-with-correction",
        lhs,
        rhs,
        ledger_tol,
        "volume product bounded by the corrected squared ball volume",
    );
    // for convex K the correction inner product is nonpositive
    ledger.note = format!("corr={corr}");
    if corr > 1e-7 {
        ledger.note.push_str(" (positive correction: unexpected for a convex body)");
    }
    Ok(ledger)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{cross_polytope, cube, ConvexBody};
    use crate::ledger::Verdict;
    use crate::rng::Rng;

    fn triangle() -> ConvexBody {
        ConvexBody::from_vertices(vec![vec![-1.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap()
    }

    #[test]
    fn cubature_rules_integrate_degree_five_exactly() {
        // ∫ over the unit simplex of x^p equals p!·d!/(p+d)!… use the moment
        // formula ∫ x1^p = p! / (p+d)! · d!  — checked against closed forms.
        for d in 1..=3usize {
            let rule = simplex_rule(d);
            let wsum: f64 = rule.iter().map(|(_, w)| w).sum();
            assert!((wsum - 1.0).abs() < 1e-12, "weights sum {wsum} in d={d}");
            // unit simplex with vertices 0, e_1, .., e_d
            let mut simplex = vec![vec![0.0; d]];
            for j in 0..d {
                let mut v = vec![0.0; d];
                v[j] = 1.0;
                simplex.push(v);
            }
            for p in 0..=5usize {
                let f = |x: &[f64]| x[0].powi(p as i32);
                let got = apply_rule(&simplex, &rule, &f);
                let exact = hull::factorial(p) * hull::factorial(d)
                    / hull::factorial(p + d)
                    / hull::factorial(d);
                assert!(
                    (got - exact).abs() < 1e-14,
                    "d={d} p={p}: {got} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn functional_symmetric_values() {
        let sq = cube(2, 1.0);
        let v = santalo_functional(&sq, &[0.0, 0.0]).unwrap();
        assert!((v - 2.0).abs() < 1e-9, "got {v}");
        let ball = ConvexBody::ball(2, 1.0).unwrap();
        let v = santalo_functional(&ball, &[0.0, 0.0]).unwrap();
        assert!((v - std::f64::consts::PI).abs() < 1e-8, "got {v}");
    }

    #[test]
    fn functional_cross_checks_exact_polar_volume() {
        let sq = cube(2, 1.0);
        let z = [0.3, 0.0];
        let quad = santalo_functional(&sq, &z).unwrap();
        let exact = {
            let shifted = sq.translate(&[-0.3, 0.0]).unwrap();
            geometry::polar(&shifted).unwrap().volume()
        };
        assert!((quad - exact).abs() < 1e-8 * exact, "quad {quad} vs exact {exact}");
    }

    #[test]
    fn functional_rejects_outside_points() {
        let sq = cube(2, 1.0);
        assert!(matches!(santalo_functional(&sq, &[1.5, 0.0]), Err(SantaloError::PointOutside)));
    }

    #[test]
    fn santalo_point_of_symmetric_bodies_is_origin() {
        for body in [cube(2, 1.0), cross_polytope(3, 1.0), cube(3, 0.5)] {
            let r = santalo_point(&body, 1e-8).unwrap();
            assert!(la::norm(&r.point) <= 1e-8, "point {:?}", r.point);
        }
    }

    #[test]
    fn santalo_point_translation_equivariance() {
        let t = triangle();
        let tol = 1e-8;
        let s0 = santalo_point(&t, tol).unwrap();
        let shift = [0.05, 0.1];
        let t2 = t.translate(&shift).unwrap();
        let s1 = santalo_point(&t2, tol).unwrap();
        let moved = la::add(&s0.point, &shift);
        assert!(la::dist(&moved, &s1.point) <= 2.0 * 1e-6);
    }

    #[test]
    fn santalo_point_matches_brute_force_grid() {
        // brute-force oracle: minimize the quadrature functional on a grid
        let t = triangle();
        let res = santalo_point(&t, 1e-9).unwrap();

        let polar0 = geometry::polar(&t).unwrap();
        let pd = polar0.polytope().unwrap();
        let rule = simplex_rule(2);
        // fixed cubature nodes on K°: evaluation at each z is a weighted sum
        let mut nodes: Vec<(Point, f64)> = Vec::new();
        for s in &pd.simplices {
            let (a, b) = split_longest_edge(s);
            for part in [a, b] {
                let (c, d) = split_longest_edge(&part);
                for sub in [c, d] {
                    let vol = hull::simplex_volume(&sub);
                    for (bary, w) in &rule {
                        let mut x = vec![0.0; 2];
                        for (v, &bc) in sub.iter().zip(bary.iter()) {
                            x[0] += bc * v[0];
                            x[1] += bc * v[1];
                        }
                        nodes.push((x, w * vol));
                    }
                }
            }
        }
        let eval = |z: &[f64]| -> f64 {
            nodes.iter().map(|(x, w)| w * (1.0 - la::dot(z, x)).powi(-3)).sum()
        };
        let m = 201usize;
        let mut best = (f64::INFINITY, vec![0.0, 0.0]);
        for i in 0..m {
            for j in 0..m {
                let z =
                    vec![-1.0 + 2.0 * (i as f64 + 0.5) / m as f64, (j as f64 + 0.5) / m as f64];
                if !t.contains_interior(&z, 1e-3) {
                    continue;
                }
                let v = eval(&z);
                if v < best.0 {
                    best = (v, z);
                }
            }
        }
        let spacing = 2.0 / m as f64;
        assert!(
            la::dist(&best.1, &res.point) <= spacing * 1.5,
            "newton {:?} vs grid {:?}",
            res.point,
            best.1
        );
    }

    #[test]
    fn volume_product_examples() {
        assert!(
            (volume_product(&cube(2, 1.0), VolumeProductMode::AtOrigin).unwrap() - 8.0).abs()
                < 1e-12
        );
        let ball = ConvexBody::ball(2, 1.0).unwrap();
        let pi2 = std::f64::consts::PI * std::f64::consts::PI;
        assert!(
            (volume_product(&ball, VolumeProductMode::AtOrigin).unwrap() - pi2).abs() < 1e-10
        );
        // random symmetric hexagons sit between the Mahler and BS bounds
        let mut rng = Rng::new(99);
        let mut tested = 0;
        while tested < 8 {
            let a = rng.range(0.3, 1.0);
            let b = rng.range(0.3, 1.0);
            let c = rng.range(-0.5, 0.5);
            let hex = ConvexBody::from_vertices(vec![
                vec![a, c],
                vec![-a, -c],
                vec![c, b],
                vec![-c, -b],
                vec![a - 0.2, b - 0.1],
                vec![0.2 - a, 0.1 - b],
            ]);
            let hex = match hex {
                Ok(h) => h,
                Err(_) => continue,
            };
            if !crate::geometry::is_symmetric(&hex, 1e-9) || !hex.origin_interior(1e-3) {
                continue;
            }
            let vp = volume_product(&hex, VolumeProductMode::AtSantalo).unwrap();
            assert!(vp >= 8.0 * (1.0 - 1e-6) && vp <= pi2 * (1.0 + 1e-6), "vp={vp}");
            tested += 1;
        }
    }

    #[test]
    fn bs_check_examples() {
        // centered ellipsoid: equality
        let e = ConvexBody::ellipsoid(vec![vec![2.0, 0.3], vec![0.3, 1.0]]).unwrap();
        let l = bs_check(&e).unwrap();
        assert_eq!(l.verdict, Verdict::Equality, "{l:?}");
        // centered cube: lhs 8, rhs π²
        let l = bs_check(&cube(2, 1.0)).unwrap();
        assert!((l.lhs - 8.0).abs() < 1e-9);
        assert!((l.rhs - std::f64::consts::PI.powi(2)).abs() < 1e-6);
        assert_eq!(l.verdict, Verdict::Holds);
        // shifted triangle: holds with correction factor > 1
        let t = triangle().translate(&[0.1, 0.2]).unwrap();
        let l = bs_check(&t).unwrap();
        assert_eq!(l.verdict, Verdict::Holds);
        let ub2 = geometry::unit_ball_volume(2).powi(2);
        assert!(l.rhs > ub2, "correction factor should exceed 1: {l:?}");
    }

    #[test]
    fn functional_is_strictly_convex_on_segments() {
        let mut rng = Rng::new(31_337);
        let t = triangle();
        for _ in 0..20 {
            let mut sample = |rng: &mut Rng| loop {
                let z = vec![rng.range(-0.9, 0.9), rng.range(0.01, 0.9)];
                if t.contains_interior(&z, 5e-3) {
                    return z;
                }
            };
            let a = sample(&mut rng);
            let b = sample(&mut rng);
            if la::dist(&a, &b) < 1e-3 {
                continue;
            }
            let mid = la::scale(&la::add(&a, &b), 0.5);
            let fa = santalo_functional(&t, &a).unwrap();
            let fb = santalo_functional(&t, &b).unwrap();
            let fm = santalo_functional(&t, &mid).unwrap();
            assert!(fm <= 0.5 * (fa + fb) + 1e-10, "convexity broke");
        }
    }

    #[test]
    fn first_order_characterization_at_optimum() {
        let tol = 1e-8;
        for body in [triangle(), cube(2, 1.0), cross_polytope(2, 1.0)] {
            let r = santalo_point(&body, tol).unwrap();
            let shifted = body.translate(&la::scale(&r.point, -1.0)).unwrap();
            let polar = geometry::polar(&shifted).unwrap();
            assert!(la::norm(polar.barycenter()) <= 10.0 * tol);
        }
    }

    #[test]
    fn bs_and_mahler_bounds_at_santalo_point() {
        let mut rng = Rng::new(2_024);
        let ub2 = geometry::unit_ball_volume(2).powi(2);
        let mut tested = 0;
        while tested < 12 {
            let m = 3 + rng.below(5);
            let mut vs = Vec::new();
            for _ in 0..m {
                let v = vec![rng.range(-1.0, 1.0), rng.range(-1.0, 1.0)];
                vs.push(la::scale(&v, -1.0));
                vs.push(v);
            }
            let body = match ConvexBody::from_vertices(vs) {
                Ok(b) if b.origin_interior(1e-3) => b,
                _ => continue,
            };
            let vp = volume_product(&body, VolumeProductMode::AtSantalo).unwrap();
            assert!(vp <= ub2 * (1.0 + 1e-6), "BS upper bound broke: {vp}");
            assert!(vp >= 8.0 * (1.0 - 1e-6), "Mahler lower bound broke: {vp}");
            tested += 1;
        }
    }
}
