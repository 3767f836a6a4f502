//! Closed-form structure of `a x^2 + b x + c`.

use crate::error::AnalysisError;

/// Discriminants within this fraction of `max(b^2, |4ac|, 1)` count as zero.
const DOUBLE_ROOT_TOLERANCE: f64 = 1e-12;

/// `a (x - h)^2 + k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VertexForm {
    pub a: f64,
    pub h: f64,
    pub k: f64,
}

impl VertexForm {
    pub fn new(a: f64, h: f64, k: f64) -> Result<Self, AnalysisError> {
        if a == 0.0 {
            return Err(AnalysisError::NotQuadratic);
        }
        Ok(VertexForm { a, h, k })
    }

    pub fn eval(&self, x: f64) -> f64 {
        let d = x - self.h;
        self.a * d * d + self.k
    }
}

/// Real roots of a quadratic in ascending order. A repeated root is stored
/// once with multiplicity 2.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    roots: Vec<f64>,
    repeated: bool,
}

impl RootSet {
    pub fn none() -> Self {
        RootSet {
            roots: Vec::new(),
            repeated: false,
        }
    }

    fn double(r: f64) -> Self {
        RootSet {
            roots: vec![r],
            repeated: true,
        }
    }

    fn pair(r1: f64, r2: f64) -> Self {
        RootSet {
            roots: vec![r1.min(r2), r1.max(r2)],
            repeated: false,
        }
    }

    pub fn roots(&self) -> &[f64] {
        &self.roots
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// 2 for a repeated root, 1 for distinct roots, 0 when there are none.
    pub fn multiplicity(&self) -> usize {
        match (self.roots.len(), self.repeated) {
            (0, _) => 0,
            (_, true) => 2,
            _ => 1,
        }
    }
}

pub fn discriminant(a: f64, b: f64, c: f64) -> f64 {
    b * b - 4.0 * a * c
}

/// Real roots via the cancellation-free form of the quadratic formula:
/// `q = -(b + sign(b) sqrt(disc)) / 2`, roots `q / a` and `c / q`.
pub fn quadratic_roots(a: f64, b: f64, c: f64) -> Result<RootSet, AnalysisError> {
    if a == 0.0 {
        return Err(AnalysisError::NotQuadratic);
    }
    let disc = discriminant(a, b, c);
    let scale = (b * b).max((4.0 * a * c).abs()).max(1.0);
    if disc.abs() <= DOUBLE_ROOT_TOLERANCE * scale {
        return Ok(RootSet::double(-b / (2.0 * a)));
    }
    if disc < 0.0 {
        return Ok(RootSet::none());
    }
    let sqrt_disc = disc.sqrt();
    let sign = if b < 0.0 { -1.0 } else { 1.0 };
    let q = -0.5 * (b + sign * sqrt_disc);
    Ok(RootSet::pair(q / a, c / q))
}

pub fn to_vertex_form(a: f64, b: f64, c: f64) -> Result<VertexForm, AnalysisError> {
    if a == 0.0 {
        return Err(AnalysisError::NotQuadratic);
    }
    let h = -b / (2.0 * a);
    let k = c - b * b / (4.0 * a);
    Ok(VertexForm { a, h, k })
}

/// Expands `a (x - h)^2 + k` into `(a, b, c)`.
pub fn from_vertex_form(v: VertexForm) -> (f64, f64, f64) {
    let VertexForm { a, h, k } = v;
    (a, -2.0 * a * h, a * h * h + k)
}
