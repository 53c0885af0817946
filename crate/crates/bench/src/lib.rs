//! Fixed inputs shared by the benchmarks.

use std::sync::Arc;

use grirr_core::gradedfield::{parse_matrix, HomogeneousMatrix};
use grirr_core::harness::PointConfiguration;
use grirr_core::ideal::Ideal;
use grirr_core::parse::{parse_generators, parse_ring};
use grirr_core::ring::RingSpec;
use grirr_core::scalar::Field;

pub fn ideal(ring: &str, gens: &str) -> Ideal {
    let ring: Arc<RingSpec> = parse_ring(ring).expect("valid ring");
    Ideal::new(
        &ring,
        parse_generators(gens, &ring).expect("valid generators"),
    )
    .expect("same ring")
}

/// Cyclic 4-roots over GF(32003).
pub fn cyclic4() -> Ideal {
    ideal(
        "GF(32003)[a,b,c,d]",
        "a + b + c + d, a*b + b*c + c*d + d*a, a*b*c + b*c*d + c*d*a + d*a*b, a*b*c*d - 1",
    )
}

/// The non-graded ideal whose socle has rank 3.
pub fn four_generator_primary() -> Ideal {
    ideal("QQ[x,y]", "x^4, x^2*y^2, y^4, x^3*y - x*y^3")
}

pub fn m_primary_three_variables() -> Ideal {
    ideal("QQ[x,y,z]", "x^3, y^3, z^3, x*y*z - x^2*y, y^2*z - x*z^2")
}

/// `n` points on two lines through the origin and off them.
pub fn points(n: i64) -> PointConfiguration {
    let pts: Vec<(i64, i64)> = (1..=n).map(|k| (k, (k * k) % 7 - 3)).collect();
    PointConfiguration::from_integers(Field::Rational, &pts)
        .expect("distinct points off the origin")
}

pub fn dependent_matrix() -> HomogeneousMatrix {
    parse_matrix(
        "gfield GF(32003) rank 2 support (1,0; 0,1)\n\
         rowdeg (0,0); (1,0); (0,1); (1,1)\n\
         coldeg (0,0); (1,0); (0,1); (-1,0)\n\
         row 1*e(0,0) 2*e(-1,0) 3*e(0,-1) 4*e(1,0)\n\
         row 5*e(1,0) 6*e(0,0) 0 7*e(2,0)\n\
         row 0 8*e(-1,1) 9*e(0,0) 10*e(1,1)\n\
         row 5*e(1,1) 6*e(0,1) 0 7*e(2,1)",
    )
    .expect("valid matrix")
}
