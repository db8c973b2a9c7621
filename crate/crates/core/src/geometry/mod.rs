//! Lines and smooth conics in the complex projective plane, their exact
//! intersections, and the incidence profile of an arrangement.

pub mod arrangement;
pub mod curve;
pub mod incidence;
pub mod intersect;

pub use arrangement::{Arrangement, ArrangementFile};
pub use curve::{CurveKind, Mat3, ProjectiveCurve};
pub use incidence::{
    check_prop_miyaoka_hypotheses, exceptional_lines, incidence_profile, IncidencePoint, MiyaokaHypotheses,
};
pub use intersect::{intersect_pair, is_transversal, AlgebraicPoint, Chart, PairPoint, PointWitness};
