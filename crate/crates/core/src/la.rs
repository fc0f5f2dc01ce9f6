//! Small dense linear algebra for dimensions up to 4.
//!
//! Points and normals are plain `Vec<f64>`; matrices are row-major.
//! Everything here is written for tiny systems (n ≤ 4), where a direct
//! Gaussian elimination with partial pivoting is exact enough and keeps the
//! crate free of heavyweight dependencies.

/// A point or vector in ℝⁿ.
pub type Point = Vec<f64>;

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn sub(a: &[f64], b: &[f64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[f64], b: &[f64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[f64], t: f64) -> Point {
    a.iter().map(|x| x * t).collect()
}

/// a + t·b
pub fn axpy(a: &[f64], t: f64, b: &[f64]) -> Point {
    a.iter().zip(b).map(|(x, y)| x + t * y).collect()
}

pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    norm(&sub(a, b))
}

pub fn normalize(a: &[f64]) -> Point {
    let n = norm(a);
    scale(a, 1.0 / n)
}

/// Row-major square matrix of side `n`.
#[derive(Clone, Debug)]
pub struct Mat {
    pub n: usize,
    pub a: Vec<f64>,
}

impl Mat {
    pub fn zeros(n: usize) -> Self {
        Mat { n, a: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        let mut a = Vec::with_capacity(n * n);
        for r in rows {
            debug_assert_eq!(r.len(), n);
            a.extend_from_slice(r);
        }
        Mat { n, a }
    }

    pub fn mul_vec(&self, x: &[f64]) -> Point {
        let n = self.n;
        (0..n).map(|i| dot(&self.a[i * n..(i + 1) * n], x)).collect()
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn det(&self) -> f64 {
        let n = self.n;
        let mut a = self.a.clone();
        let mut det = 1.0;
        for col in 0..n {
            let mut piv = col;
            for r in col + 1..n {
                if a[r * n + col].abs() > a[piv * n + col].abs() {
                    piv = r;
                }
            }
            if a[piv * n + col] == 0.0 {
                return 0.0;
            }
            if piv != col {
                for c in 0..n {
                    a.swap(piv * n + c, col * n + c);
                }
                det = -det;
            }
            det *= a[col * n + col];
            for r in col + 1..n {
                let f = a[r * n + col] / a[col * n + col];
                for c in col..n {
                    a[r * n + c] -= f * a[col * n + c];
                }
            }
        }
        det
    }

    /// Solves A x = b; `None` when the pivot falls below `tol`.
    pub fn solve(&self, b: &[f64], tol: f64) -> Option<Point> {
        let n = self.n;
        let mut a = self.a.clone();
        let mut x: Point = b.to_vec();
        for col in 0..n {
            let mut piv = col;
            for r in col + 1..n {
                if a[r * n + col].abs() > a[piv * n + col].abs() {
                    piv = r;
                }
            }
            if a[piv * n + col].abs() <= tol {
                return None;
            }
            if piv != col {
                for c in 0..n {
                    a.swap(piv * n + c, col * n + c);
                }
                x.swap(piv, col);
            }
            for r in col + 1..n {
                let f = a[r * n + col] / a[col * n + col];
                for c in col..n {
                    a[r * n + c] -= f * a[col * n + c];
                }
                x[r] -= f * x[col];
            }
        }
        for col in (0..n).rev() {
            x[col] /= a[col * n + col];
            for r in 0..col {
                x[r] -= a[r * n + col] * x[col];
            }
        }
        Some(x)
    }

    pub fn inverse(&self, tol: f64) -> Option<Mat> {
        let n = self.n;
        let mut inv = Mat::zeros(n);
        for j in 0..n {
            let mut e = vec![0.0; n];
            e[j] = 1.0;
            let col = self.solve(&e, tol)?;
            for i in 0..n {
                inv[(i, j)] = col[i];
            }
        }
        Some(inv)
    }

    pub fn transpose(&self) -> Mat {
        let n = self.n;
        let mut t = Mat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                t[(i, j)] = self[(j, i)];
            }
        }
        t
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.a[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.a[i * self.n + j]
    }
}

/// Normal of the hyperplane through `pts` (n points in ℝⁿ), via cofactor
/// expansion of the (n−1)×n difference matrix. Zero vector when the points
/// are affinely dependent.
pub fn hyperplane_normal(pts: &[&[f64]]) -> Point {
    let n = pts[0].len();
    debug_assert_eq!(pts.len(), n);
    if n == 1 {
        return vec![1.0];
    }
    let diffs: Vec<Point> = (1..n).map(|i| sub(pts[i], pts[0])).collect();
    let mut normal = vec![0.0; n];
    // component j = (−1)^j · minor obtained by deleting column j
    for j in 0..n {
        let mut minor = Mat::zeros(n - 1);
        for (r, d) in diffs.iter().enumerate() {
            let mut cc = 0;
            for c in 0..n {
                if c == j {
                    continue;
                }
                minor[(r, cc)] = d[c];
                cc += 1;
            }
        }
        let s = if j % 2 == 0 { 1.0 } else { -1.0 };
        normal[j] = s * minor.det();
    }
    normal
}

/// Rank of a set of vectors with tolerance, by modified Gram-Schmidt.
pub fn rank(vectors: &[Point], tol: f64) -> usize {
    let mut basis: Vec<Point> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for b in &basis {
            let c = dot(&w, b);
            w = axpy(&w, -c, b);
        }
        let nw = norm(&w);
        if nw > tol {
            basis.push(scale(&w, 1.0 / nw));
        }
    }
    basis.len()
}

/// Orthonormal basis of the span of `vectors`.
pub fn orthonormal_span(vectors: &[Point], tol: f64) -> Vec<Point> {
    let mut basis: Vec<Point> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for b in &basis {
            let c = dot(&w, b);
            w = axpy(&w, -c, b);
        }
        let nw = norm(&w);
        if nw > tol {
            basis.push(scale(&w, 1.0 / nw));
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_and_det() {
        let m = Mat::from_rows(&[vec![2.0, 1.0], vec![1.0, 3.0]]);
        assert!((m.det() - 5.0).abs() < 1e-14);
        let x = m.solve(&[3.0, 4.0], 1e-12).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-12 && (x[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn normal_of_plane() {
        let p0 = [0.0, 0.0, 1.0];
        let p1 = [1.0, 0.0, 1.0];
        let p2 = [0.0, 1.0, 1.0];
        let n = hyperplane_normal(&[&p0, &p1, &p2]);
        assert!(n[0].abs() < 1e-14 && n[1].abs() < 1e-14 && n[2].abs() > 0.5);
    }

    #[test]
    fn rank_detects_dependence() {
        let vs = vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![1.0, 1.0, 0.0]];
        assert_eq!(rank(&vs, 1e-10), 2);
    }
}
