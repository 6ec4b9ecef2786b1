//! Exact computer algebra for plane quartics, their covariants, double
//! Veronese cones, nets of quadrics and Cayley octads.

pub mod cone;
pub mod covariants;
pub mod io;
pub mod octad;
pub mod poly;
pub mod projective;
pub mod theta;

pub use cone::{ConeEquation, ConeError, PluckerCounts, S4FamilyData, WeightedPoint};
pub use covariants::{CovariantError, CovariantPair, DualCurve, LineRestriction, QuarticCurve};
pub use io::{parse_poly, print_poly, Ambient, ParseError, PointSource, PolySource};
pub use octad::{HessianQuartic, Octad, OctadError, PencilFiber, QuadricNet};
pub use theta::{AronholdSystem, Parity, ThetaChar, ThetaError};
pub use poly::{Monomial, Poly, PolyError, PolyMatrix, RatMatrix, Rational};
