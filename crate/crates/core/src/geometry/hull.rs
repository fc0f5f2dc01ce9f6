//! Facet/vertex enumeration and simplicial decomposition for polytopes of
//! dimension at most 4.
//!
//! Everything is exhaustive subset enumeration: at desk scale (≤ 40 vertices,
//! n ≤ 4) this is affordable and has no incremental-hull corner cases. Float
//! determinant decisions falling below `tol::EXACT_FALLBACK_DET` of the local
//! scale are re-decided in exact rational arithmetic.

use crate::geometry::exact;
use crate::la::{self, Mat, Point};
use crate::tol;

/// A facet produced by enumeration: outward normal, offset and the indices of
/// incident vertices. The halfspace is `normal·x ≤ offset`.
#[derive(Clone, Debug)]
pub struct Facet {
    pub normal: Point,
    pub offset: f64,
    pub incident: Vec<usize>,
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for i in start..=n.saturating_sub(need) {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

pub fn diameter(points: &[Point]) -> f64 {
    let mut d: f64 = 0.0;
    for p in points {
        d = d.max(2.0 * la::norm(p));
    }
    d.max(1.0)
}

/// Enumerates the facets of `conv(points)`. Points must affinely span ℝⁿ.
pub fn facets_of_points(points: &[Point]) -> Vec<Facet> {
    let n = points[0].len();
    let scale = diameter(points);
    let side_tol = tol::IRREDUNDANCY_REL * scale;
    let mut facets: Vec<Facet> = Vec::new();
    let mut seen: Vec<Vec<usize>> = Vec::new();
    let centroid = centroid_of(points);

    for sub in subsets(points.len(), n) {
        let pts: Vec<&[f64]> = sub.iter().map(|&i| points[i].as_slice()).collect();
        let mut normal = la::hyperplane_normal(&pts);
        let nn = la::norm(&normal);
        if nn <= tol::EXACT_FALLBACK_DET * scale.powi(n as i32 - 1) {
            // near-degenerate: decide exactly
            match exact::exact_hyperplane_normal(&pts) {
                Some(v) => normal = v,
                None => continue, // affinely dependent subset
            }
        }
        let normal = la::normalize(&normal);
        let offset = la::dot(&normal, points[sub[0]].as_slice());
        // supporting test
        let mut lo: f64 = 0.0;
        let mut hi: f64 = 0.0;
        for p in points {
            let s = la::dot(&normal, p) - offset;
            lo = lo.min(s);
            hi = hi.max(s);
        }
        let (normal, offset) = if hi <= side_tol {
            (normal, offset)
        } else if lo >= -side_tol {
            (la::scale(&normal, -1.0), -offset)
        } else {
            continue; // not supporting
        };
        // orient outward from the centroid
        if la::dot(&normal, &centroid) - offset > side_tol {
            continue;
        }
        let incident: Vec<usize> = (0..points.len())
            .filter(|&i| (la::dot(&normal, &points[i]) - offset).abs() <= side_tol)
            .collect();
        if incident.len() < n {
            continue;
        }
        if seen.iter().any(|s| s == &incident) {
            continue;
        }
        seen.push(incident.clone());
        facets.push(Facet { normal, offset, incident });
    }
    facets
}

/// Enumerates the vertices of `{x : a_i·x ≤ b_i}`. The system must be bounded
/// with nonempty interior for the result to be a meaningful vertex set.
pub fn vertices_of_halfspaces(halfspaces: &[(Point, f64)]) -> Vec<Point> {
    let n = halfspaces[0].0.len();
    let scale = {
        let mut s: f64 = 1.0;
        for (a, b) in halfspaces {
            let na = la::norm(a);
            if na > 0.0 {
                s = s.max(b.abs() / na);
            }
        }
        2.0 * s
    };
    let feas_tol = tol::IRREDUNDANCY_REL * scale;
    let mut verts: Vec<Point> = Vec::new();

    for sub in subsets(halfspaces.len(), n) {
        let rows: Vec<Point> = sub.iter().map(|&i| halfspaces[i].0.clone()).collect();
        let rhs: Point = sub.iter().map(|&i| halfspaces[i].1).collect();
        let m = Mat::from_rows(&rows);
        let x = match m.solve(&rhs, tol::EXACT_FALLBACK_DET) {
            Some(x) => x,
            None => match exact::exact_solve(&rows, &rhs) {
                Some(x) => x,
                None => continue,
            },
        };
        if !x.iter().all(|v| v.is_finite()) {
            continue;
        }
        if halfspaces.iter().all(|(a, b)| la::dot(a, &x) <= b + feas_tol) {
            if !verts.iter().any(|v| la::dist(v, &x) <= feas_tol) {
                verts.push(x);
            }
        }
    }
    verts
}

/// Keeps only extreme points: a point is extreme iff it lies on at least `n`
/// facets whose normals span ℝⁿ.
pub fn prune_to_extreme(points: &[Point]) -> Vec<Point> {
    let n = points[0].len();
    let facets = facets_of_points(points);
    let dia = diameter(points);
    let mut out: Vec<Point> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let normals: Vec<Point> = facets
            .iter()
            .filter(|f| f.incident.contains(&i))
            .map(|f| f.normal.clone())
            .collect();
        if normals.len() >= n
            && la::rank(&normals, 1e-9) == n
            && !out.iter().any(|q| la::dist(q, p) <= tol::IRREDUNDANCY_REL * dia)
        {
            out.push(p.clone());
        }
    }
    out
}

fn centroid_of(points: &[Point]) -> Point {
    let n = points[0].len();
    let mut c = vec![0.0; n];
    for p in points {
        for j in 0..n {
            c[j] += p[j];
        }
    }
    la::scale(&c, 1.0 / points.len() as f64)
}

/// Null vector of `rows` (k vectors in ℝⁿ with k = n−1), by cofactor
/// expansion. Zero when the rows are dependent.
fn null_vector(rows: &[Point]) -> Point {
    let n = rows[0].len();
    debug_assert_eq!(rows.len(), n - 1);
    let mut v = vec![0.0; n];
    for j in 0..n {
        let mut minor = Mat::zeros(n - 1);
        for (r, row) in rows.iter().enumerate() {
            let mut cc = 0;
            for c in 0..n {
                if c == j {
                    continue;
                }
                minor[(r, cc)] = row[c];
                cc += 1;
            }
        }
        let s = if j % 2 == 0 { 1.0 } else { -1.0 };
        v[j] = s * minor.det();
    }
    v
}

/// Triangulates the face `conv(points[idx])` of affine dimension `d` whose
/// affine hull is orthogonal to the unit vectors in `ctx`. Returns index
/// simplices of d+1 vertices each.
fn triangulate_face(
    points: &[Point],
    idx: &[usize],
    d: usize,
    ctx: &[Point],
    side_tol: f64,
) -> Vec<Vec<usize>> {
    let n = points[0].len();
    if d == 0 {
        return vec![vec![idx[0]]];
    }
    if d == 1 {
        // extremes along the edge direction
        let mut dir: Option<Point> = None;
        for &i in &idx[1..] {
            let v = la::sub(&points[i], &points[idx[0]]);
            if la::norm(&v) > side_tol {
                dir = Some(v);
                break;
            }
        }
        let dir = match dir {
            Some(v) => v,
            None => return vec![vec![idx[0]]],
        };
        let (mut imin, mut imax) = (idx[0], idx[0]);
        let (mut smin, mut smax) = (f64::INFINITY, f64::NEG_INFINITY);
        for &i in idx {
            let s = la::dot(&points[i], &dir);
            if s < smin {
                smin = s;
                imin = i;
            }
            if s > smax {
                smax = s;
                imax = i;
            }
        }
        return vec![vec![imin, imax]];
    }

    // Sub-faces of dimension d−1: supporting hyperplanes within the face's
    // affine hull, spanned by d-subsets of face vertices.
    let apex = idx[0];
    let mut out = Vec::new();
    let mut seen: Vec<Vec<usize>> = Vec::new();
    for sub in subsets(idx.len(), d) {
        let t: Vec<usize> = sub.iter().map(|&k| idx[k]).collect();
        let t0 = &points[t[0]];
        let mut rows: Vec<Point> = t[1..].iter().map(|&i| la::sub(&points[i], t0)).collect();
        for c in ctx {
            rows.push(c.clone());
        }
        if rows.len() != n - 1 {
            continue;
        }
        let nu = null_vector(&rows);
        if la::norm(&nu) <= side_tol {
            continue;
        }
        let nu = la::normalize(&nu);
        let mut lo: f64 = 0.0;
        let mut hi: f64 = 0.0;
        for &i in idx {
            let s = la::dot(&nu, &la::sub(&points[i], t0));
            lo = lo.min(s);
            hi = hi.max(s);
        }
        if lo < -side_tol && hi > side_tol {
            continue; // not supporting within the face
        }
        let face: Vec<usize> = idx
            .iter()
            .copied()
            .filter(|&i| la::dot(&nu, &la::sub(&points[i], t0)).abs() <= side_tol)
            .collect();
        if face.len() < d || face.contains(&apex) {
            continue;
        }
        let mut key = face.clone();
        key.sort_unstable();
        if seen.iter().any(|s| s == &key) {
            continue;
        }
        seen.push(key);
        let mut sub_ctx = ctx.to_vec();
        sub_ctx.push(nu);
        for mut simplex in triangulate_face(points, &face, d - 1, &sub_ctx, side_tol) {
            simplex.push(apex);
            out.push(simplex);
        }
    }
    out
}

/// Simplicial decomposition of the polytope with the given vertices and
/// facets, coned from `apex` (which must lie inside). Each simplex is a list
/// of n+1 points, the last being the apex.
pub fn triangulate(points: &[Point], facets: &[Facet], apex: &Point) -> Vec<Vec<Point>> {
    let n = points[0].len();
    let side_tol = tol::IRREDUNDANCY_REL * diameter(points);
    let mut out = Vec::new();
    for f in facets {
        let ctx = vec![f.normal.clone()];
        for simplex in triangulate_face(points, &f.incident, n - 1, &ctx, side_tol) {
            let mut pts: Vec<Point> = simplex.iter().map(|&i| points[i].clone()).collect();
            pts.push(apex.clone());
            out.push(pts);
        }
    }
    out
}

/// n! as f64 for n ≤ 20.
pub fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product::<f64>().max(1.0)
}

/// Signed volume of the simplex `pts` (n+1 points in ℝⁿ).
pub fn simplex_volume(pts: &[Point]) -> f64 {
    let n = pts[0].len();
    let rows: Vec<Point> = (0..n).map(|i| la::sub(&pts[i], &pts[n])).collect();
    Mat::from_rows(&rows).det().abs() / factorial(n)
}

pub fn simplex_centroid(pts: &[Point]) -> Point {
    let n = pts[0].len();
    let mut c = vec![0.0; n];
    for p in pts {
        for j in 0..n {
            c[j] += p[j];
        }
    }
    la::scale(&c, 1.0 / pts.len() as f64)
}

/// ∫_T x xᵀ dx over the simplex T with vertices `pts`.
pub fn simplex_second_moment(pts: &[Point]) -> Mat {
    let n = pts[0].len();
    let vol = simplex_volume(pts);
    let mut sum = vec![0.0; n];
    let mut m = Mat::zeros(n);
    for p in pts {
        for i in 0..n {
            sum[i] += p[i];
            for j in 0..n {
                m[(i, j)] += p[i] * p[j];
            }
        }
    }
    let c = vol / ((n as f64 + 1.0) * (n as f64 + 2.0));
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = c * (m[(i, j)] + sum[i] * sum[j]);
        }
    }
    m
}
