//! Nets of quadrics through seven points of P^3, their Hessian quartics,
//! Cayley octads, bitangents, pencils, Cremona and Gale transforms.
//!
//! Points of P^3 are labeled 1..8 in the public API; internally indices
//! start at 0. A net is `x A0 + y A1 + z A2` with `[x : y : z]` the
//! coordinates of the net plane.

mod bitangent;
mod cremona;
mod eighth;
mod gale;
mod net;
mod pencil;

use num_traits::Zero;
use thiserror::Error;

use crate::covariants::CovariantError;
use crate::io::{Ambient, PointSource};
use crate::poly::Rational;
use crate::projective::{normalize, same_point};

pub use bitangent::{bitangent_line, bitangents, Bitangent};
pub use cremona::{cremona_octad, CremonaResult};
pub use eighth::{eighth_point, eighth_point_with_seed, DEFAULT_SEED};
pub use gale::{gale_transform, gale_transform_with_forms, GaleReport};
pub use net::{
    aronhold_check, hessian_quartic, net_from_heptad, steinerian_point, AronholdReport, HessianQuartic,
    QuadricNet,
};
pub use pencil::{pencil_fiber, PencilFiber};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OctadError {
    #[error("expected {expected} points, found {found}")]
    WrongCount { expected: usize, found: usize },
    #[error("point {0} is not a point of P3")]
    WrongAmbient(usize),
    #[error("points {0} and {1} coincide")]
    RepeatedPoint(usize, usize),
    #[error("point {0} does not lie on every quadric of the net")]
    NotBasePoint(usize),
    #[error("the quadrics through the points form a space of dimension {0}, not a net (3)")]
    DimensionError(usize),
    #[error("the heptad is not an Aronhold heptad (singular Hessian quartic)")]
    NotAronhold,
    #[error("base-locus elimination stayed degenerate after {0} coordinate changes")]
    EliminationDegenerate(usize),
    #[error("label {0} is outside 1..8")]
    BadLabel(usize),
    #[error("a bitangent needs two different labels, got {0} twice")]
    SamePair(usize),
    #[error("the quadrics containing the line P{0}P{1} do not form a pencil")]
    SubfamilyDimension(usize, usize),
    #[error("the Hessian restricted to the line of P{0}P{1} is not a square")]
    NotSquare(usize, usize),
    #[error("the two net points do not span a line")]
    DependentPencil,
    #[error("every member of the pencil is singular")]
    DegeneratePencil,
    #[error("the pencil determinant has a repeated root; the fiber is singular")]
    NonSquarefree,
    #[error("the Cremona center is not four independent points")]
    DependentCenter,
    #[error("point {0} lies on a face of the Cremona tetrahedron")]
    CremonaUndefined(usize),
    #[error("point {0} coincides with the projection center")]
    ProjectionUndefined(usize),
    #[error("the point of the net plane is not on the Hessian quartic")]
    NotOnHessian,
    #[error("the quadric has corank {0}; the kernel is not a point")]
    CorankTooHigh(usize),
    #[error(transparent)]
    Covariant(#[from] CovariantError),
}

/// Eight labeled points of P^3, stored as primitive integer vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Octad {
    points: Vec<Vec<Rational>>,
}

impl Octad {
    /// Checks the count and pairwise distinctness.
    pub fn new(points: Vec<Vec<Rational>>) -> Result<Self, OctadError> {
        let points = check_points(&points, 8)?;
        Ok(Octad { points })
    }

    /// Point with label `label` in 1..8.
    pub fn point(&self, label: usize) -> Result<&[Rational], OctadError> {
        if !(1..=8).contains(&label) {
            return Err(OctadError::BadLabel(label));
        }
        Ok(&self.points[label - 1])
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn to_sources(&self) -> Vec<PointSource> {
        self.points
            .iter()
            .map(|p| PointSource { coordinates: p.clone(), ambient: Ambient::P3 })
            .collect()
    }

    /// The seven points other than `label`.
    pub fn heptad_without(&self, label: usize) -> Result<Vec<Vec<Rational>>, OctadError> {
        self.point(label)?;
        Ok(self.points.iter().enumerate().filter(|(i, _)| i + 1 != label).map(|(_, p)| p.clone()).collect())
    }
}

pub(crate) fn check_points(points: &[Vec<Rational>], expected: usize) -> Result<Vec<Vec<Rational>>, OctadError> {
    if points.len() != expected {
        return Err(OctadError::WrongCount { expected, found: points.len() });
    }
    for (i, p) in points.iter().enumerate() {
        if p.len() != 4 || p.iter().all(Zero::is_zero) {
            return Err(OctadError::WrongAmbient(i + 1));
        }
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if same_point(&points[i], &points[j]) {
                return Err(OctadError::RepeatedPoint(i + 1, j + 1));
            }
        }
    }
    Ok(points.iter().map(|p| normalize(p)).collect())
}

/// Coordinates of parsed points, rejecting anything outside P^3.
pub fn coordinates_of(points: &[PointSource]) -> Result<Vec<Vec<Rational>>, OctadError> {
    points
        .iter()
        .enumerate()
        .map(|(i, p)| if p.ambient == Ambient::P3 { Ok(p.coordinates.clone()) } else { Err(OctadError::WrongAmbient(i + 1)) })
        .collect()
}

/// The seven points used throughout the tests and examples: the coordinate
/// simplex, `[1:1:1:1]`, `[1:2:3:4]` and `[1:4:9:25]`.
pub fn standard_heptad() -> Vec<Vec<Rational>> {
    let rows: [[i64; 4]; 7] =
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 1, 1], [1, 2, 3, 4], [1, 4, 9, 25]];
    rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect()
}
