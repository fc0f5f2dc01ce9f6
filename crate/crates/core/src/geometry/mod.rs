//! Exact representations of convex bodies and the duality primitives
//! (support, radial, polar, volume, barycenter) the other modules consume.
//!
//! Bodies are immutable after construction. Polytopes carry both an
//! irredundant H-representation and V-representation plus a cached
//! simplicial decomposition, so volume, barycenter and second moments are
//! exact (up to float rounding) rather than quadrature estimates.

pub mod exact;
pub mod hanner;
pub mod hull;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::la::{self, Mat, Point};
use crate::tol;
use hull::Facet;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("origin is not interior to the body")]
    OriginNotInterior,
    #[error("body is degenerate (dimension-deficient or empty interior)")]
    DegenerateBody,
    #[error("halfspace system is unbounded")]
    Unbounded,
    #[error("ellipsoid matrix is not symmetric positive definite")]
    NotPositiveDefinite,
    #[error("dimension {0} outside the supported range 1..=4")]
    BadDimension(usize),
    #[error("invalid body serialization: {0}")]
    BadSerialization(String),
}

pub type Result<T> = std::result::Result<T, GeometryError>;

/// Halfspace-represented polytope `{x : a_i·x ≤ b_i}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HPolytope {
    pub dim: usize,
    pub halfspaces: Vec<(Point, f64)>,
}

/// Vertex-represented polytope `conv(vertices)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VPolytope {
    pub dim: usize,
    pub vertices: Vec<Point>,
}

#[derive(Clone, Debug)]
pub struct PolytopeData {
    pub halfspaces: Vec<(Point, f64)>,
    pub vertices: Vec<Point>,
    pub facets: Vec<Facet>,
    /// Simplices (n+1 points each) coned from the vertex centroid.
    pub simplices: Vec<Vec<Point>>,
}

#[derive(Clone, Debug)]
pub enum Shape {
    Polytope(PolytopeData),
    Ball { radius: f64 },
    Ellipsoid { matrix: Mat, inverse: Mat, det: f64 },
}

/// Which representation the body was built from; preserved by serialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BodyKind {
    HPolytope,
    VPolytope,
    Ball,
    Ellipsoid,
}

#[derive(Clone, Debug)]
pub struct ConvexBody {
    pub dim: usize,
    pub kind: BodyKind,
    shape: Shape,
    volume: f64,
    barycenter: Point,
}

/// Volume of the Euclidean unit ball of ℝⁿ.
pub fn unit_ball_volume(n: usize) -> f64 {
    use statrs::function::gamma::ln_gamma;
    let nf = n as f64;
    (0.5 * nf * std::f64::consts::PI.ln() - ln_gamma(0.5 * nf + 1.0)).exp()
}

fn check_dim(dim: usize) -> Result<()> {
    if (1..=4).contains(&dim) {
        Ok(())
    } else {
        Err(GeometryError::BadDimension(dim))
    }
}

impl ConvexBody {
    /// Builds a polytope from its extreme-point candidates. Non-extreme
    /// points are pruned; the irredundant H-representation is derived.
    pub fn from_vertices(vertices: Vec<Point>) -> Result<ConvexBody> {
        let dim = vertices.first().map(|v| v.len()).unwrap_or(0);
        check_dim(dim)?;
        if vertices.len() < dim + 1 {
            return Err(GeometryError::DegenerateBody);
        }
        let diffs: Vec<Point> =
            vertices[1..].iter().map(|v| la::sub(v, &vertices[0])).collect();
        if la::rank(&diffs, tol::IRREDUNDANCY_REL * hull::diameter(&vertices)) < dim {
            return Err(GeometryError::DegenerateBody);
        }
        let vertices = hull::prune_to_extreme(&vertices);
        let facets = hull::facets_of_points(&vertices);
        let halfspaces: Vec<(Point, f64)> =
            facets.iter().map(|f| (f.normal.clone(), f.offset)).collect();
        Self::assemble(dim, BodyKind::VPolytope, halfspaces, vertices, facets)
    }

    /// Builds a polytope from halfspaces, which must bound a full-dimensional
    /// region.
    pub fn from_halfspaces(halfspaces: Vec<(Point, f64)>) -> Result<ConvexBody> {
        let dim = halfspaces.first().map(|(a, _)| a.len()).unwrap_or(0);
        check_dim(dim)?;
        // bounded iff the outward normals positively span ℝⁿ,
        // i.e. 0 lies strictly inside conv(normals)
        let normals: Vec<Point> = halfspaces.iter().map(|(a, _)| la::normalize(a)).collect();
        if normals.len() < dim + 1
            || la::rank(&normals, 1e-9) < dim
            || !point_in_hull_interior(&normals, &vec![0.0; dim])
        {
            return Err(GeometryError::Unbounded);
        }
        let vertices = hull::vertices_of_halfspaces(&halfspaces);
        if vertices.len() < dim + 1 {
            return Err(GeometryError::DegenerateBody);
        }
        let facets = hull::facets_of_points(&vertices);
        if facets.is_empty() {
            return Err(GeometryError::DegenerateBody);
        }
        let irredundant: Vec<(Point, f64)> =
            facets.iter().map(|f| (f.normal.clone(), f.offset)).collect();
        Self::assemble(dim, BodyKind::HPolytope, irredundant, vertices, facets)
    }

    /// Builds a polytope trusting both representations (used by `polar`,
    /// where the H↔V swap is exact). Incidences are recomputed.
    fn from_both(
        kind: BodyKind,
        halfspaces: Vec<(Point, f64)>,
        vertices: Vec<Point>,
    ) -> Result<ConvexBody> {
        let dim = vertices[0].len();
        let side_tol = tol::IRREDUNDANCY_REL * hull::diameter(&vertices);
        let facets: Vec<Facet> = halfspaces
            .iter()
            .map(|(a, b)| {
                let na = la::norm(a);
                let incident: Vec<usize> = (0..vertices.len())
                    .filter(|&i| (la::dot(a, &vertices[i]) - b).abs() <= side_tol * na.max(1.0))
                    .collect();
                Facet { normal: la::scale(a, 1.0 / na), offset: b / na, incident }
            })
            .collect();
        Self::assemble(dim, kind, halfspaces, vertices, facets)
    }

    fn assemble(
        dim: usize,
        kind: BodyKind,
        halfspaces: Vec<(Point, f64)>,
        vertices: Vec<Point>,
        facets: Vec<Facet>,
    ) -> Result<ConvexBody> {
        let centroid = {
            let mut c = vec![0.0; dim];
            for v in &vertices {
                for j in 0..dim {
                    c[j] += v[j];
                }
            }
            la::scale(&c, 1.0 / vertices.len() as f64)
        };
        let simplices = hull::triangulate(&vertices, &facets, &centroid);
        let mut volume = 0.0;
        let mut bary = vec![0.0; dim];
        for s in &simplices {
            let v = hull::simplex_volume(s);
            let c = hull::simplex_centroid(s);
            volume += v;
            for j in 0..dim {
                bary[j] += v * c[j];
            }
        }
        if volume <= 0.0 {
            return Err(GeometryError::DegenerateBody);
        }
        let barycenter = la::scale(&bary, 1.0 / volume);
        Ok(ConvexBody {
            dim,
            kind,
            shape: Shape::Polytope(PolytopeData { halfspaces, vertices, facets, simplices }),
            volume,
            barycenter,
        })
    }

    pub fn ball(dim: usize, radius: f64) -> Result<ConvexBody> {
        check_dim(dim)?;
        if !(radius > 0.0) {
            return Err(GeometryError::DegenerateBody);
        }
        Ok(ConvexBody {
            dim,
            kind: BodyKind::Ball,
            shape: Shape::Ball { radius },
            volume: unit_ball_volume(dim) * radius.powi(dim as i32),
            barycenter: vec![0.0; dim],
        })
    }

    /// Ellipsoid `{x : xᵀAx ≤ 1}` with A symmetric positive definite.
    pub fn ellipsoid(rows: Vec<Point>) -> Result<ConvexBody> {
        let dim = rows.len();
        check_dim(dim)?;
        let m = Mat::from_rows(&rows);
        for i in 0..dim {
            for j in 0..dim {
                if (m[(i, j)] - m[(j, i)]).abs() > 1e-12 * (1.0 + m[(i, j)].abs()) {
                    return Err(GeometryError::NotPositiveDefinite);
                }
            }
        }
        let det = m.det();
        // leading principal minors must all be positive
        for k in 1..=dim {
            let sub: Vec<Point> =
                (0..k).map(|i| (0..k).map(|j| m[(i, j)]).collect()).collect();
            if Mat::from_rows(&sub).det() <= 0.0 {
                return Err(GeometryError::NotPositiveDefinite);
            }
        }
        let inverse = m.inverse(1e-300).ok_or(GeometryError::NotPositiveDefinite)?;
        Ok(ConvexBody {
            dim,
            kind: BodyKind::Ellipsoid,
            shape: Shape::Ellipsoid { matrix: m, inverse, det },
            volume: unit_ball_volume(dim) / det.sqrt(),
            barycenter: vec![0.0; dim],
        })
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn polytope(&self) -> Option<&PolytopeData> {
        match &self.shape {
            Shape::Polytope(p) => Some(p),
            _ => None,
        }
    }

    /// Cached volume.
    pub fn volume(&self) -> f64 {
        self.volume
    }

    /// Cached barycenter.
    pub fn barycenter(&self) -> &Point {
        &self.barycenter
    }

    /// Diameter proxy used for tolerances.
    pub fn scale(&self) -> f64 {
        match &self.shape {
            Shape::Polytope(p) => hull::diameter(&p.vertices),
            Shape::Ball { radius } => 2.0 * radius,
            Shape::Ellipsoid { inverse, .. } => {
                // max semi-axis = sqrt(largest eigenvalue of A⁻¹) ≤ sqrt(trace)
                let t: f64 = (0..self.dim).map(|i| inverse[(i, i)]).sum();
                2.0 * t.sqrt()
            }
        }
    }

    /// True when 0 is strictly interior with the given relative margin.
    pub fn origin_interior(&self, margin_rel: f64) -> bool {
        self.contains_interior(&vec![0.0; self.dim], margin_rel)
    }

    /// True when `x` is interior with distance at least `margin_rel·scale`
    /// from the boundary (polytopes: in halfspace slack; smooth bodies: in
    /// gauge).
    pub fn contains_interior(&self, x: &[f64], margin_rel: f64) -> bool {
        let margin = margin_rel * self.scale();
        match &self.shape {
            Shape::Polytope(p) => p
                .halfspaces
                .iter()
                .all(|(a, b)| la::dot(a, x) <= b - margin * la::norm(a)),
            Shape::Ball { radius } => la::norm(x) <= radius - margin,
            Shape::Ellipsoid { matrix, .. } => {
                let q = la::dot(x, &matrix.mul_vec(x));
                q.sqrt() <= 1.0 - margin_rel
            }
        }
    }

    /// Translates the body by `t` (polytopes only; balls/ellipsoids are
    /// centered by construction).
    pub fn translate(&self, t: &[f64]) -> Result<ConvexBody> {
        match &self.shape {
            Shape::Polytope(p) => {
                let verts: Vec<Point> = p.vertices.iter().map(|v| la::add(v, t)).collect();
                let hs: Vec<(Point, f64)> = p
                    .halfspaces
                    .iter()
                    .map(|(a, b)| (a.clone(), b + la::dot(a, t)))
                    .collect();
                ConvexBody::from_both(self.kind, hs, verts)
            }
            _ => Err(GeometryError::DegenerateBody),
        }
    }

    /// Dilation `λ·K` for λ > 0.
    pub fn dilate(&self, lambda: f64) -> Result<ConvexBody> {
        match &self.shape {
            Shape::Polytope(p) => {
                let verts: Vec<Point> =
                    p.vertices.iter().map(|v| la::scale(v, lambda)).collect();
                let hs: Vec<(Point, f64)> =
                    p.halfspaces.iter().map(|(a, b)| (a.clone(), b * lambda)).collect();
                ConvexBody::from_both(self.kind, hs, verts)
            }
            Shape::Ball { radius } => ConvexBody::ball(self.dim, radius * lambda),
            Shape::Ellipsoid { matrix, .. } => {
                let rows: Vec<Point> = (0..self.dim)
                    .map(|i| (0..self.dim).map(|j| matrix[(i, j)] / (lambda * lambda)).collect())
                    .collect();
                ConvexBody::ellipsoid(rows)
            }
        }
    }

    /// ∫_K x xᵀ dx.
    pub fn second_moment(&self) -> Mat {
        match &self.shape {
            Shape::Polytope(p) => {
                let mut m = Mat::zeros(self.dim);
                for s in &p.simplices {
                    let sm = hull::simplex_second_moment(s);
                    for i in 0..self.dim {
                        for j in 0..self.dim {
                            m[(i, j)] += sm[(i, j)];
                        }
                    }
                }
                m
            }
            Shape::Ball { radius } => {
                let c = self.volume * radius * radius / (self.dim as f64 + 2.0);
                let mut m = Mat::zeros(self.dim);
                for i in 0..self.dim {
                    m[(i, i)] = c;
                }
                m
            }
            Shape::Ellipsoid { inverse, .. } => {
                let c = self.volume / (self.dim as f64 + 2.0);
                let mut m = Mat::zeros(self.dim);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        m[(i, j)] = c * inverse[(i, j)];
                    }
                }
                m
            }
        }
    }

    /// Per-facet cones over the origin: (unit outward normal, cone volume).
    /// Requires 0 in the interior.
    pub fn facet_cones(&self) -> Result<Vec<(Point, f64)>> {
        if !self.origin_interior(0.0) {
            return Err(GeometryError::OriginNotInterior);
        }
        let p = self.polytope().ok_or(GeometryError::DegenerateBody)?;
        let origin = vec![0.0; self.dim];
        let mut out = Vec::new();
        for f in &p.facets {
            let tri = hull::triangulate(&p.vertices, std::slice::from_ref(f), &origin);
            let vol: f64 = tri.iter().map(|s| hull::simplex_volume(s)).sum();
            out.push((f.normal.clone(), vol));
        }
        Ok(out)
    }
}

/// True when `x` is strictly inside `conv(points)` (used for boundedness
/// certificates).
fn point_in_hull_interior(points: &[Point], x: &Point) -> bool {
    let facets = hull::facets_of_points(points);
    if facets.is_empty() {
        return false;
    }
    let s = hull::diameter(points);
    facets
        .iter()
        .all(|f| la::dot(&f.normal, x) < f.offset - 1e-9 * s)
}

/// sup_{x∈K} x·y — positively homogeneous of degree 1 in y.
pub fn support_function(body: &ConvexBody, y: &[f64]) -> f64 {
    match body.shape() {
        Shape::Polytope(p) => p
            .vertices
            .iter()
            .map(|v| la::dot(v, y))
            .fold(f64::NEG_INFINITY, f64::max),
        Shape::Ball { radius } => radius * la::norm(y),
        Shape::Ellipsoid { inverse, .. } => la::dot(y, &inverse.mul_vec(y)).sqrt(),
    }
}

/// ρ_K(u) = sup{t : tu ∈ K}; requires 0 in the interior of K.
pub fn radial_function(body: &ConvexBody, u: &[f64]) -> Result<f64> {
    if !body.origin_interior(0.0) {
        return Err(GeometryError::OriginNotInterior);
    }
    Ok(match body.shape() {
        Shape::Polytope(p) => {
            let mut t = f64::INFINITY;
            for (a, b) in &p.halfspaces {
                let d = la::dot(a, u);
                if d > 0.0 {
                    t = t.min(b / d);
                }
            }
            t
        }
        Shape::Ball { radius } => radius / la::norm(u),
        Shape::Ellipsoid { matrix, .. } => 1.0 / la::dot(u, &matrix.mul_vec(u)).sqrt(),
    })
}

/// Polar body K° = {y : x·y ≤ 1 ∀x ∈ K}. For polytopes this is the exact
/// H↔V swap: vertices v_i become halfspaces v_i·x ≤ 1 and halfspaces
/// a_i·x ≤ b_i become vertices a_i/b_i.
pub fn polar(body: &ConvexBody) -> Result<ConvexBody> {
    if !body.origin_interior(0.0) {
        return Err(GeometryError::OriginNotInterior);
    }
    match body.shape() {
        Shape::Polytope(p) => {
            let halfspaces: Vec<(Point, f64)> =
                p.vertices.iter().map(|v| (v.clone(), 1.0)).collect();
            let vertices: Vec<Point> = p
                .halfspaces
                .iter()
                .map(|(a, b)| la::scale(a, 1.0 / b))
                .collect();
            let kind = match body.kind {
                BodyKind::HPolytope => BodyKind::VPolytope,
                _ => BodyKind::HPolytope,
            };
            ConvexBody::from_both(kind, halfspaces, vertices)
        }
        Shape::Ball { radius } => ConvexBody::ball(body.dim, 1.0 / radius),
        Shape::Ellipsoid { inverse, .. } => {
            let rows: Vec<Point> = (0..body.dim)
                .map(|i| (0..body.dim).map(|j| inverse[(i, j)]).collect())
                .collect();
            ConvexBody::ellipsoid(rows)
        }
    }
}

/// Cached volume accessor (exact simplicial decomposition for polytopes,
/// closed form for balls and ellipsoids).
pub fn volume(body: &ConvexBody) -> f64 {
    body.volume()
}

/// Cached barycenter accessor.
pub fn barycenter(body: &ConvexBody) -> Point {
    body.barycenter().clone()
}

/// True iff the body is invariant under every single-coordinate sign flip.
pub fn is_unconditional(body: &ConvexBody, tol: f64) -> bool {
    match body.shape() {
        Shape::Ball { .. } => true,
        Shape::Ellipsoid { matrix, .. } => {
            let mut off = 0.0f64;
            let mut diag = 0.0f64;
            for i in 0..body.dim {
                diag = diag.max(matrix[(i, i)].abs());
                for j in 0..body.dim {
                    if i != j {
                        off = off.max(matrix[(i, j)].abs());
                    }
                }
            }
            off <= tol * diag.max(1.0)
        }
        Shape::Polytope(p) => {
            for axis in 0..body.dim {
                for v in &p.vertices {
                    let mut w = v.clone();
                    w[axis] = -w[axis];
                    if !p.vertices.iter().any(|u| la::dist(u, &w) <= tol) {
                        return false;
                    }
                }
            }
            true
        }
    }
}

/// True iff the body is centrally symmetric (x ∈ K ⇔ −x ∈ K).
pub fn is_symmetric(body: &ConvexBody, tol: f64) -> bool {
    match body.shape() {
        Shape::Ball { .. } | Shape::Ellipsoid { .. } => true,
        Shape::Polytope(p) => p.vertices.iter().all(|v| {
            let w = la::scale(v, -1.0);
            p.vertices.iter().any(|u| la::dist(u, &w) <= tol)
        }),
    }
}

// ---------------------------------------------------------------------------
// JSON serialization: {"kind","dim","halfspaces"|"vertices"|"radius"|"matrix"}
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct HalfspaceJson {
    normal: Point,
    offset: f64,
}

#[derive(Serialize, Deserialize)]
struct BodyJson {
    kind: BodyKind,
    dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    halfspaces: Option<Vec<HalfspaceJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<Point>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    radius: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<Vec<Point>>,
}

impl ConvexBody {
    pub fn to_json(&self) -> serde_json::Value {
        let mut j = BodyJson {
            kind: self.kind,
            dim: self.dim,
            halfspaces: None,
            vertices: None,
            radius: None,
            matrix: None,
        };
        match (&self.shape, self.kind) {
            (Shape::Polytope(p), BodyKind::HPolytope) => {
                j.halfspaces = Some(
                    p.halfspaces
                        .iter()
                        .map(|(a, b)| HalfspaceJson { normal: a.clone(), offset: *b })
                        .collect(),
                );
            }
            (Shape::Polytope(p), _) => {
                j.vertices = Some(p.vertices.clone());
            }
            (Shape::Ball { radius }, _) => j.radius = Some(*radius),
            (Shape::Ellipsoid { matrix, .. }, _) => {
                j.matrix = Some(
                    (0..self.dim)
                        .map(|i| (0..self.dim).map(|k| matrix[(i, k)]).collect())
                        .collect(),
                );
            }
        }
        serde_json::to_value(&j).expect("body serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<ConvexBody> {
        let j: BodyJson = serde_json::from_value(v.clone())
            .map_err(|e| GeometryError::BadSerialization(e.to_string()))?;
        match j.kind {
            BodyKind::HPolytope => {
                let hs = j
                    .halfspaces
                    .ok_or_else(|| GeometryError::BadSerialization("missing halfspaces".into()))?;
                ConvexBody::from_halfspaces(
                    hs.into_iter().map(|h| (h.normal, h.offset)).collect(),
                )
            }
            BodyKind::VPolytope => {
                let vs = j
                    .vertices
                    .ok_or_else(|| GeometryError::BadSerialization("missing vertices".into()))?;
                ConvexBody::from_vertices(vs)
            }
            BodyKind::Ball => ConvexBody::ball(
                j.dim,
                j.radius.ok_or_else(|| GeometryError::BadSerialization("missing radius".into()))?,
            ),
            BodyKind::Ellipsoid => ConvexBody::ellipsoid(
                j.matrix.ok_or_else(|| GeometryError::BadSerialization("missing matrix".into()))?,
            ),
        }
    }
}

// ---------------------------------------------------------------------------
// Common constructions
// ---------------------------------------------------------------------------

/// The cube [−r, r]ⁿ.
pub fn cube(dim: usize, r: f64) -> ConvexBody {
    let mut hs = Vec::new();
    for j in 0..dim {
        for s in [1.0, -1.0] {
            let mut a = vec![0.0; dim];
            a[j] = s;
            hs.push((a, r));
        }
    }
    ConvexBody::from_halfspaces(hs).expect("cube is a valid body")
}

/// The cross-polytope conv{±r e_j}.
pub fn cross_polytope(dim: usize, r: f64) -> ConvexBody {
    let mut vs = Vec::new();
    for j in 0..dim {
        for s in [1.0, -1.0] {
            let mut v = vec![0.0; dim];
            v[j] = s * r;
            vs.push(v);
        }
    }
    ConvexBody::from_vertices(vs).expect("cross-polytope is a valid body")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;

    fn triangle() -> ConvexBody {
        ConvexBody::from_vertices(vec![vec![-1.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap()
    }

    #[test]
    fn support_examples() {
        assert!((support_function(&cube(2, 1.0), &[1.0, 1.0]) - 2.0).abs() < 1e-14);
        let ball = ConvexBody::ball(2, 1.0).unwrap();
        assert!((support_function(&ball, &[0.6, 0.8]) - 1.0).abs() < 1e-14);
        assert!(support_function(&triangle(), &[0.0, -1.0]).abs() < 1e-14);
    }

    #[test]
    fn radial_examples() {
        let s = 1.0 / 2.0f64.sqrt();
        let v = radial_function(&cube(2, 1.0), &[s, s]).unwrap();
        assert!((v - 2.0f64.sqrt()).abs() < 1e-12);
        let cross = cross_polytope(2, 1.0);
        assert!((radial_function(&cross, &[1.0, 0.0]).unwrap() - 1.0).abs() < 1e-12);
        let half_square = cube(2, 0.5);
        let r = radial_function(&half_square, &[s, s]).unwrap();
        assert!((r - s).abs() < 1e-12);
    }

    #[test]
    fn polar_examples() {
        let c = cube(3, 1.0);
        let p = polar(&c).unwrap();
        // polar of the cube is the cross-polytope: volume 2ⁿ/n!
        assert!((p.volume() - 8.0 / 6.0).abs() < 1e-12);
        let b = ConvexBody::ball(2, 2.0).unwrap();
        let pb = polar(&b).unwrap();
        assert!((pb.volume() - unit_ball_volume(2) * 0.25).abs() < 1e-12);
    }

    #[test]
    fn volume_examples() {
        assert!((cube(3, 1.0).volume() - 8.0).abs() < 1e-12);
        assert!((cross_polytope(3, 1.0).volume() - 4.0 / 3.0).abs() < 1e-12);
        assert!((ConvexBody::ball(2, 1.0).unwrap().volume() - std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn barycenter_examples() {
        let t = ConvexBody::from_vertices(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]])
            .unwrap();
        let b = t.barycenter();
        assert!((b[0] - 1.0 / 3.0).abs() < 1e-14 && (b[1] - 1.0 / 3.0).abs() < 1e-14);
        let shifted = cube(2, 1.0).translate(&[1.0, 1.0]).unwrap();
        let b = shifted.barycenter();
        assert!((b[0] - 1.0).abs() < 1e-12 && (b[1] - 1.0).abs() < 1e-12);
        // any Hanner realization is centrally symmetric
        let h = hanner::HannerSpec::linf(hanner::HannerSpec::Segment, hanner::HannerSpec::Segment);
        let hb = h.realize().unwrap();
        assert!(la::norm(hb.barycenter()) < 1e-12);
    }

    #[test]
    fn unconditional_examples() {
        assert!(is_unconditional(&cube(3, 1.0), 1e-9));
        assert!(!is_unconditional(&triangle(), 1e-9));
        // rotated square: vertices {±e1, ±e2}
        assert!(is_unconditional(&cross_polytope(2, 1.0), 1e-9));
    }

    #[test]
    fn bipolar_involution_random_symmetric() {
        let mut rng = Rng::new(20240901);
        for n in 2..=4usize {
            for _ in 0..6 {
                let m = 3 + rng.below(if n < 4 { 18 } else { 8 });
                let mut vs = Vec::new();
                for _ in 0..m {
                    let v: Point = (0..n).map(|_| rng.range(-1.0, 1.0)).collect();
                    vs.push(la::scale(&v, -1.0));
                    vs.push(v);
                }
                let body = match ConvexBody::from_vertices(vs) {
                    Ok(b) => b,
                    Err(_) => continue,
                };
                if !body.origin_interior(1e-6) {
                    continue;
                }
                let bb = polar(&polar(&body).unwrap()).unwrap();
                let va = &body.polytope().unwrap().vertices;
                let vb = &bb.polytope().unwrap().vertices;
                assert_eq!(va.len(), vb.len());
                let hausdorff = va
                    .iter()
                    .map(|v| {
                        vb.iter().map(|w| la::dist(v, w)).fold(f64::INFINITY, f64::min)
                    })
                    .fold(0.0f64, f64::max);
                assert!(hausdorff < 1e-9, "hausdorff {hausdorff} at n={n}");
            }
        }
    }

    #[test]
    fn radial_support_duality() {
        let mut rng = Rng::new(7_071);
        let bodies = vec![cube(2, 1.0), cross_polytope(3, 1.5), cube(3, 0.7), triangle()];
        for body in bodies.iter().filter(|b| b.origin_interior(1e-9)) {
            let p = polar(body).unwrap();
            for _ in 0..200 {
                let u = rng.direction(body.dim);
                let lhs = radial_function(&p, &u).unwrap() * support_function(body, &u);
                assert!((lhs - 1.0).abs() < 1e-12, "duality broke: {lhs}");
            }
        }
    }

    #[test]
    fn volume_monte_carlo_oracle() {
        // rejection sampling against the cached exact volume, 3σ band
        let mut rng = Rng::new(123_456);
        let body = cross_polytope(3, 1.0);
        let n = 1_000_000usize;
        let cube_vol = 8.0;
        let mut hits = 0usize;
        for _ in 0..n {
            let x: Point = (0..3).map(|_| rng.range(-1.0, 1.0)).collect();
            if x.iter().map(|v| v.abs()).sum::<f64>() <= 1.0 {
                hits += 1;
            }
        }
        let p = body.volume() / cube_vol;
        let se = (p * (1.0 - p) / n as f64).sqrt();
        let observed = hits as f64 / n as f64;
        assert!((observed - p).abs() <= 3.0 * se, "MC volume {observed} vs {p} ± {se}");
    }

    #[test]
    fn json_round_trip_is_bit_stable() {
        let body = ConvexBody::from_vertices(vec![
            vec![0.1 + 0.2, 0.0],
            vec![-1.0 / 3.0, 0.7],
            vec![0.3, -0.9],
        ])
        .unwrap();
        let j = body.to_json();
        let back = ConvexBody::from_json(&j).unwrap();
        let j2 = back.to_json();
        assert_eq!(serde_json::to_string(&j).unwrap(), serde_json::to_string(&j2).unwrap());
    }

    #[test]
    fn degenerate_inputs_rejected() {
        let flat = ConvexBody::from_vertices(vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![2.0, 0.0],
        ]);
        assert!(flat.is_err());
        let unbounded = ConvexBody::from_halfspaces(vec![
            (vec![1.0, 0.0], 1.0),
            (vec![0.0, 1.0], 1.0),
        ]);
        assert!(unbounded.is_err());
    }
}
