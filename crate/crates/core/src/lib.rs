//! Exact computations with multigraded polynomial ideals: Gröbner bases and
//! ideal operations, the largest graded subideal `I*`, socles and indices of
//! reducibility of zero-dimensional quotients, irreducible decompositions of
//! monomial ideals, and graded modules over graded fields.

pub mod artinian;
pub mod error;
pub mod gradedfield;
pub mod groebner;
pub mod harness;
pub mod ideal;
pub mod linalg;
pub mod monomial_decomp;
pub mod parse;
pub mod ring;
pub mod scalar;
pub mod session;
pub mod star;

pub use artinian::{index_of_reducibility_primary, is_m_primary, socle, SocleBasis};
pub use error::{Error, Result};
pub use gradedfield::{graded_free_basis, HomogeneousMatrix, SupportLattice};
pub use groebner::{buchberger, GroebnerBasis};
pub use harness::{theorem51_check, PointConfiguration};
pub use ideal::{ideal_equal, intersect, quotient, saturate, Ideal};
pub use monomial_decomp::{irreducible_decomposition, MonomialIdeal};
pub use ring::{GradingMap, Monomial, MonomialOrder, Polynomial, RingSpec};
pub use scalar::{Field, Scalar};
pub use session::SessionFile;
pub use star::{star, StarResult};
