use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{ideal_equal, intersect, Ideal};
use crate::parse::PARSE_ORDER;
use crate::ring::{GradingMap, Polynomial, RingSpec};
use crate::scalar::{Field, Scalar};
use crate::star::{star, star_of_prime_check};

/// Finitely many distinct rational points of the plane, none at the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    field: Field,
    points: Vec<(Scalar, Scalar)>,
}

impl PointConfiguration {
    pub fn new(field: Field, points: Vec<(Scalar, Scalar)>) -> Result<Self> {
        for (i, (a, b)) in points.iter().enumerate() {
            if a.field() != field || b.field() != field {
                return Err(Error::Input(format!("point {} is not over {field}", i + 1)));
            }
            if a.is_zero() && b.is_zero() {
                return Err(Error::Input("the origin is not allowed".into()));
            }
            if points[..i].contains(&(a.clone(), b.clone())) {
                return Err(Error::Input(format!("point ({a}, {b}) is repeated")));
            }
        }
        Ok(PointConfiguration { field, points })
    }

    pub fn from_integers(field: Field, points: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            field,
            points
                .iter()
                .map(|&(a, b)| (field.from_i64(a), field.from_i64(b)))
                .collect(),
        )
    }

    /// Parses `(a, b); (c, d)`.
    pub fn parse(text: &str, field: Field) -> Result<Self> {
        let tuples = crate::parse::parse_tuples(text, field)?;
        let mut points = Vec::with_capacity(tuples.len());
        for t in tuples {
            match <[Scalar; 2]>::try_from(t) {
                Ok([a, b]) => points.push((a, b)),
                Err(t) => {
                    return Err(Error::Input(format!(
                        "points need 2 coordinates, got {}",
                        t.len()
                    )))
                }
            }
        }
        Self::new(field, points)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn points(&self) -> &[(Scalar, Scalar)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `k[x,y]` over the configuration's field.
    pub fn ring(&self) -> Arc<RingSpec> {
        RingSpec::new(self.field, ["x", "y"]).expect("x, y are valid variable names")
    }
}

impl fmt::Display for PointConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .points
            .iter()
            .map(|(a, b)| format!("({a}, {b})"))
            .collect();
        f.write_str(&parts.join("; "))
    }
}

fn point_ideal(ring: &Arc<RingSpec>, a: &Scalar, b: &Scalar) -> Ideal {
    let x = Polynomial::variable(ring, PARSE_ORDER, 0);
    let y = Polynomial::variable(ring, PARSE_ORDER, 1);
    let ca = Polynomial::constant(ring, PARSE_ORDER, a.clone());
    let cb = Polynomial::constant(ring, PARSE_ORDER, b.clone());
    Ideal::new(ring, vec![&x - &ca, &y - &cb]).expect("same ring")
}

/// `∩ (x − a_i, y − b_i)` in `k[x,y]`.
pub fn ideal_of_points(config: &PointConfiguration) -> Result<Ideal> {
    let ring = config.ring();
    let mut acc = Ideal::unit(&ring);
    for (a, b) in &config.points {
        let p = point_ideal(&ring, a, b);
        acc = if acc.is_unit() {
            p
        } else {
            intersect(&acc, &p)?
        };
    }
    Ok(acc.reduced())
}

/// The projective direction `[a : b]`, normalized to `(1, b/a)` or `(0, 1)`.
pub fn direction(a: &Scalar, b: &Scalar) -> (Scalar, Scalar) {
    if a.is_zero() {
        (a.field().zero(), a.field().one())
    } else {
        (a.field().one(), b * &a.inv())
    }
}

/// `(b·x − a·y)`, the line through the origin and `(a, b)`.
pub fn line_ideal(ring: &Arc<RingSpec>, a: &Scalar, b: &Scalar) -> Ideal {
    let x = Polynomial::variable(ring, PARSE_ORDER, 0);
    let y = Polynomial::variable(ring, PARSE_ORDER, 1);
    let f = &x.scale(b) - &y.scale(a);
    Ideal::new(ring, vec![f]).expect("same ring")
}

/// The image of one point ideal under `*`.
#[derive(Clone, Debug)]
pub struct ComponentImage {
    pub point: (Scalar, Scalar),
    pub direction: (Scalar, Scalar),
    pub star: Ideal,
    /// `p*` equals the predicted line ideal.
    pub matches_line: bool,
    /// `p*` is graded and certified prime.
    pub graded_prime: bool,
}

#[derive(Clone, Debug)]
pub struct StarComparisonReport {
    /// `|Min(I)|`, the number of points.
    pub ir_i: usize,
    /// `|Min(I*)|`, the number of distinct directions.
    pub ir_istar: usize,
    /// The direction map on the points is injective.
    pub bijective: bool,
    pub ideal: Ideal,
    pub star: Ideal,
    /// `star(I)` equals the intersection of the predicted line ideals.
    pub star_matches_prediction: bool,
    /// `star(∩ p_i)` equals `∩ star(p_i)`.
    pub star_commutes: bool,
    pub details: Vec<ComponentImage>,
}

impl StarComparisonReport {
    /// All certified facts hold: the prediction, the commutation with
    /// intersection, every component image, and `ir(I) ≥ ir(I*)` with
    /// equality exactly for a bijective direction map.
    pub fn consistent(&self) -> bool {
        self.star_matches_prediction
            && self.star_commutes
            && self
                .details
                .iter()
                .all(|d| d.matches_line && d.graded_prime)
            && self.ir_i >= self.ir_istar
            && (self.ir_i == self.ir_istar) == self.bijective
    }
}

fn intersect_all(ring: &Arc<RingSpec>, ideals: &[Ideal]) -> Result<Ideal> {
    let mut acc = Ideal::unit(ring);
    for i in ideals {
        acc = if acc.is_unit() {
            i.clone()
        } else {
            intersect(&acc, i)?
        };
    }
    Ok(acc)
}

/// Compares `I = ∩ (x − a_i, y − b_i)` with `I*` under the standard grading.
pub fn theorem51_check(config: &PointConfiguration) -> Result<StarComparisonReport> {
    let ring = config.ring();
    let grading = GradingMap::standard(2);
    let ideal = ideal_of_points(config)?;
    let star_ideal = star(&ideal, &grading)?.star_ideal;

    let mut details = Vec::with_capacity(config.len());
    let mut directions = BTreeSet::new();
    let mut lines = Vec::new();
    let mut images = Vec::new();
    for (a, b) in &config.points {
        let dir = direction(a, b);
        let line = line_ideal(&ring, a, b);
        let report = star_of_prime_check(&point_ideal(&ring, a, b), &grading)?;
        let matches_line = ideal_equal(&report.star, &line)?;
        let graded_prime = report.graded && report.evidence.is_prime() == Some(true);
        if directions.insert(format!("{}:{}", dir.0, dir.1)) {
            lines.push(line);
        }
        images.push(report.star.clone());
        details.push(ComponentImage {
            point: (a.clone(), b.clone()),
            direction: dir,
            star: report.star,
            matches_line,
            graded_prime,
        });
    }
    let predicted = intersect_all(&ring, &lines)?;
    let star_matches_prediction = ideal_equal(&star_ideal, &predicted)?;
    let star_commutes = ideal_equal(&star_ideal, &intersect_all(&ring, &images)?)?;
    Ok(StarComparisonReport {
        ir_i: config.len(),
        ir_istar: directions.len(),
        bijective: directions.len() == config.len(),
        ideal,
        star: star_ideal,
        star_matches_prediction,
        star_commutes,
        details,
    })
}
