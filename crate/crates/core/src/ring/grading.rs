use std::collections::BTreeMap;

use super::{Monomial, Polynomial};
use crate::error::{Error, Result};

/// A Z^m-grading of `k[x_1..x_n]` by an `m x n` integer weight matrix.
///
/// Column `j` is the degree of `x_j`. Degrees are `Vec<i64>` and compare
/// lexicographically, which is a total group order on Z^m.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradingMap {
    nvars: usize,
    rows: Vec<Vec<i64>>,
}

/// Result of a homogeneity test. Zero is homogeneous of every degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Degree(Vec<i64>),
    Inhomogeneous,
}

impl GradingMap {
    pub fn new(nvars: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != nvars) {
            return Err(Error::Usage(format!(
                "grading row has {} entries, ring has {nvars} variables",
                bad.len()
            )));
        }
        Ok(GradingMap { nvars, rows })
    }

    /// All weights 1: the standard Z-grading.
    pub fn standard(nvars: usize) -> Self {
        GradingMap {
            nvars,
            rows: vec![vec![1; nvars]],
        }
    }

    /// The identity matrix: the fine Z^n-grading, in which the homogeneous
    /// elements are exactly the scalar multiples of monomials.
    pub fn fine(nvars: usize) -> Self {
        let rows = (0..nvars)
            .map(|i| (0..nvars).map(|j| i64::from(i == j)).collect())
            .collect();
        GradingMap { nvars, rows }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Weight of variable `j` in row `i`.
    pub fn weight(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn degree_of(&self, mono: &Monomial) -> Vec<i64> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(mono.exponents())
                    .map(|(w, &e)| w * e as i64)
                    .sum()
            })
            .collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.rows.iter().flatten().all(|&w| w >= 0)
    }

    /// Sum of the entries of `deg(x_j)` for each variable.
    pub fn column_totals(&self) -> Vec<i64> {
        (0..self.nvars)
            .map(|j| self.rows.iter().map(|r| r[j]).sum())
            .collect()
    }

    pub fn homogeneous_components(&self, f: &Polynomial) -> BTreeMap<Vec<i64>, Polynomial> {
        let mut buckets: BTreeMap<Vec<i64>, Vec<_>> = BTreeMap::new();
        for t in f.terms() {
            buckets
                .entry(self.degree_of(&t.mono))
                .or_default()
                .push((t.coeff.clone(), t.mono.clone()));
        }
        buckets
            .into_iter()
            .map(|(d, terms)| (d, Polynomial::from_terms(f.ring(), f.order(), terms)))
            .collect()
    }

    pub fn is_homogeneous(&self, f: &Polynomial) -> Homogeneity {
        let mut degrees = f.terms().iter().map(|t| self.degree_of(&t.mono));
        let Some(first) = degrees.next() else {
            return Homogeneity::Zero;
        };
        if degrees.all(|d| d == first) {
            Homogeneity::Degree(first)
        } else {
            Homogeneity::Inhomogeneous
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{MonomialOrder, RingSpec};
    use crate::scalar::Field;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn xy() -> Arc<RingSpec> {
        RingSpec::new(Field::Rational, ["x", "y"]).unwrap()
    }

    fn poly(r: &Arc<RingSpec>, terms: &[(i64, [u32; 2])]) -> Polynomial {
        Polynomial::from_terms(
            r,
            MonomialOrder::GrevLex,
            terms
                .iter()
                .map(|(c, e)| (r.field().from_i64(*c), Monomial::new(e.to_vec())))
                .collect(),
        )
    }

    #[test]
    fn degrees() {
        let x3y = Monomial::new(vec![3, 1]);
        assert_eq!(GradingMap::standard(2).degree_of(&x3y), vec![4]);
        assert_eq!(GradingMap::fine(2).degree_of(&x3y), vec![3, 1]);
        let w = GradingMap::new(2, vec![vec![2, 3]]).unwrap();
        assert_eq!(w.degree_of(&Monomial::new(vec![1, 1])), vec![5]);
    }

    #[test]
    fn components_of_paper_generators() {
        let r = xy();
        let std = GradingMap::standard(2);
        let f = poly(&r, &[(1, [1, 0]), (-1, [0, 2])]);
        let comps = std.homogeneous_components(&f);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[&vec![1]], poly(&r, &[(1, [1, 0])]));
        assert_eq!(comps[&vec![2]], poly(&r, &[(-1, [0, 2])]));
        assert_eq!(std.is_homogeneous(&f), Homogeneity::Inhomogeneous);

        let g = poly(&r, &[(1, [3, 1]), (-1, [1, 3])]);
        let comps = std.homogeneous_components(&g);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[&vec![4]], g);

        let zero = Polynomial::zero(&r, MonomialOrder::GrevLex);
        assert!(std.homogeneous_components(&zero).is_empty());
        assert_eq!(std.is_homogeneous(&zero), Homogeneity::Zero);
    }

    #[test]
    fn homogeneity_depends_on_weights() {
        let r = xy();
        let f = poly(&r, &[(1, [2, 0]), (1, [1, 1])]);
        assert_eq!(
            GradingMap::standard(2).is_homogeneous(&f),
            Homogeneity::Degree(vec![2])
        );
        let g = poly(&r, &[(1, [1, 0]), (-1, [0, 2])]);
        let w21 = GradingMap::new(2, vec![vec![2, 1]]).unwrap();
        assert_eq!(w21.is_homogeneous(&g), Homogeneity::Degree(vec![2]));
    }

    #[test]
    fn mismatched_rows_rejected() {
        assert!(GradingMap::new(3, vec![vec![1, 1]]).is_err());
    }

    proptest! {
        #[test]
        fn degree_is_additive(a in prop::collection::vec(0u32..6, 3),
                              b in prop::collection::vec(0u32..6, 3),
                              w in prop::collection::vec(prop::collection::vec(-3i64..4, 3), 1..3)) {
            let g = GradingMap::new(3, w).unwrap();
            let (a, b) = (Monomial::new(a), Monomial::new(b));
            let sum: Vec<i64> = g.degree_of(&a).iter().zip(g.degree_of(&b)).map(|(x, y)| x + y).collect();
            prop_assert_eq!(g.degree_of(&a.mul(&b)), sum);
        }

        #[test]
        fn components_partition_the_polynomial(
            terms in prop::collection::vec((-5i64..6, prop::collection::vec(0u32..4, 2)), 0..8),
            w in prop::collection::vec(-2i64..3, 2),
        ) {
            let r = xy();
            let f = Polynomial::from_terms(&r, MonomialOrder::GrevLex,
                terms.into_iter().map(|(c, e)| (r.field().from_i64(c), Monomial::new(e))).collect());
            let g = GradingMap::new(2, vec![w]).unwrap();
            let comps = g.homogeneous_components(&f);
            let mut total = Polynomial::zero(&r, MonomialOrder::GrevLex);
            for (d, c) in &comps {
                prop_assert_eq!(g.is_homogeneous(c), Homogeneity::Degree(d.clone()));
                total = &total + c;
            }
            prop_assert_eq!(total, f.clone());
            prop_assert_eq!(comps.is_empty(), f.is_zero());
        }
    }
}
