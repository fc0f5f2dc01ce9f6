//! Hanner polytopes as binary trees of ℓ1/ℓ∞ sums of segments.
//!
//! The realization of a tree is a centrally symmetric polytope; the polar of
//! the realization is the realization of the tree with the sum tags swapped.
//! Volumes follow the exact recursion
//! `|K ⊕∞ L| = |K||L|` and `|K ⊕₁ L| = |K||L|·a!b!/(a+b)!`
//! (a, b the summand dimensions), evaluated in rational arithmetic, which
//! makes the volume product `|K||K°| = 4ⁿ/n!` exact.

use num_traits::One;

use super::exact::{rat_factorial, rat_to_f64, Rat};
use super::{ConvexBody, Result};
use crate::la::Point;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HannerSpec {
    Segment,
    L1(Box<HannerSpec>, Box<HannerSpec>),
    Linf(Box<HannerSpec>, Box<HannerSpec>),
}

impl HannerSpec {
    pub fn l1(a: HannerSpec, b: HannerSpec) -> HannerSpec {
        HannerSpec::L1(Box::new(a), Box::new(b))
    }

    pub fn linf(a: HannerSpec, b: HannerSpec) -> HannerSpec {
        HannerSpec::Linf(Box::new(a), Box::new(b))
    }

    pub fn dim(&self) -> usize {
        match self {
            HannerSpec::Segment => 1,
            HannerSpec::L1(a, b) | HannerSpec::Linf(a, b) => a.dim() + b.dim(),
        }
    }

    /// The tree with ℓ1 and ℓ∞ tags swapped; realizes the polar body.
    pub fn polar(&self) -> HannerSpec {
        match self {
            HannerSpec::Segment => HannerSpec::Segment,
            HannerSpec::L1(a, b) => HannerSpec::Linf(Box::new(a.polar()), Box::new(b.polar())),
            HannerSpec::Linf(a, b) => HannerSpec::L1(Box::new(a.polar()), Box::new(b.polar())),
        }
    }

    /// Vertex set of the realization (coordinates in {−1, 0, 1}).
    pub fn vertices(&self) -> Vec<Point> {
        match self {
            HannerSpec::Segment => vec![vec![-1.0], vec![1.0]],
            HannerSpec::L1(a, b) => {
                let (da, db) = (a.dim(), b.dim());
                let mut out = Vec::new();
                for v in a.vertices() {
                    let mut w = v;
                    w.extend(std::iter::repeat(0.0).take(db));
                    out.push(w);
                }
                for v in b.vertices() {
                    let mut w = vec![0.0; da];
                    w.extend(v);
                    out.push(w);
                }
                out
            }
            HannerSpec::Linf(a, b) => {
                let mut out = Vec::new();
                for va in a.vertices() {
                    for vb in b.vertices() {
                        let mut w = va.clone();
                        w.extend(vb.iter().copied());
                        out.push(w);
                    }
                }
                out
            }
        }
    }

    /// Full convex-body realization (float path).
    pub fn realize(&self) -> Result<ConvexBody> {
        ConvexBody::from_vertices(self.vertices())
    }

    /// Exact rational volume of the realization.
    pub fn volume_exact(&self) -> Rat {
        match self {
            HannerSpec::Segment => Rat::from_integer(2.into()),
            HannerSpec::Linf(a, b) => a.volume_exact() * b.volume_exact(),
            HannerSpec::L1(a, b) => {
                let (da, db) = (a.dim(), b.dim());
                a.volume_exact() * b.volume_exact() * rat_factorial(da) * rat_factorial(db)
                    / rat_factorial(da + db)
            }
        }
    }

    /// Exact volume product |K||K°| of the realization; always 4ⁿ/n!.
    pub fn volume_product_exact(&self) -> Rat {
        self.volume_exact() * self.polar().volume_exact()
    }

    pub fn volume(&self) -> f64 {
        rat_to_f64(&self.volume_exact())
    }

    /// All Hanner trees of the given dimension (tag assignments over all
    /// binary tree shapes; symmetric duplicates are not removed).
    pub fn enumerate(dim: usize) -> Vec<HannerSpec> {
        if dim == 1 {
            return vec![HannerSpec::Segment];
        }
        let mut out = Vec::new();
        for left in 1..dim {
            for a in Self::enumerate(left) {
                for b in Self::enumerate(dim - left) {
                    out.push(HannerSpec::l1(a.clone(), b.clone()));
                    out.push(HannerSpec::linf(a.clone(), b.clone()));
                }
            }
        }
        out
    }
}

/// 4ⁿ/n! as an exact rational.
pub fn mahler_bound_exact(n: usize) -> Rat {
    let mut four_n = Rat::one();
    for _ in 0..n {
        four_n *= Rat::from_integer(4.into());
    }
    four_n / rat_factorial(n)
}
