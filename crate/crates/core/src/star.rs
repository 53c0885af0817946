//! The largest graded subideal `I*`.
//!
//! [`star`] computes `I*` exactly by a torus-twist elimination. For a grading
//! matrix `W`, the substitution `x_j -> u^{W e_j} x_j` sends `f` to
//! `sum_g f_g u^g`, and an element `f` lies in the twisted extension of `I`
//! in `R[u^{±1}]` exactly when each homogeneous component `f_g` lies in `I`.
//! Contracting the twisted extension back to `R` therefore yields `I*`.
//! Laurent monomials are avoided by shifting every twisted generator by a
//! `u`-monomial (a unit once `u_1 ... u_m` is inverted) and inverting the
//! product with an auxiliary `z`.
//!
//! [`star_truncated_oracle`] is an independent realization by linear
//! algebra, degree by degree, used to cross-check the elimination.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal::{eliminate_auxiliary, Ideal, CANONICAL_ORDER};
use crate::linalg::DenseMatrix;
use crate::ring::{GradingMap, Homogeneity, Monomial, MonomialOrder, Polynomial};

/// A homogeneous element of `I` that appears as a generator of `I*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub element: Polynomial,
    pub degree: Vec<i64>,
}

#[derive(Clone, Debug)]
pub struct StarResult {
    pub star_ideal: Ideal,
    pub witnesses: Vec<Witness>,
}

fn check_grading(ideal: &Ideal, grading: &GradingMap) -> Result<()> {
    if grading.nvars() != ideal.ring().nvars() {
        return Err(Error::Usage(format!(
            "grading covers {} variables, ring has {}",
            grading.nvars(),
            ideal.ring().nvars()
        )));
    }
    Ok(())
}

pub fn star(ideal: &Ideal, grading: &GradingMap) -> Result<StarResult> {
    check_grading(ideal, grading)?;
    let base = ideal.ring();
    let m = grading.rank();
    let k = 1 + m;
    let names: Vec<String> = std::iter::once("z".to_string())
        .chain((1..=m).map(|i| format!("u{i}")))
        .collect();
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let ext = base.prepend_auxiliary(&name_refs);
    let order = MonomialOrder::Elimination(k);

    let mut gens = Vec::new();
    for g in ideal.generators().iter().filter(|g| !g.is_zero()) {
        let degrees: Vec<Vec<i64>> = g
            .terms()
            .iter()
            .map(|t| grading.degree_of(&t.mono))
            .collect();
        let shift: Vec<i64> = (0..m)
            .map(|i| degrees.iter().map(|d| d[i]).min().unwrap_or(0))
            .collect();
        let terms = g
            .terms()
            .iter()
            .zip(&degrees)
            .map(|(t, d)| {
                let mut e = Vec::with_capacity(k + base.nvars());
                e.push(0);
                e.extend(d.iter().zip(&shift).map(|(x, s)| (x - s) as u32));
                e.extend_from_slice(t.mono.exponents());
                (t.coeff.clone(), Monomial::new(e))
            })
            .collect();
        gens.push(Polynomial::from_terms(&ext, order, terms));
    }
    let zu = Polynomial::monomial(
        &ext,
        order,
        Monomial::new((0..k + base.nvars()).map(|i| u32::from(i < k)).collect()),
    );
    gens.push(&Polynomial::one(&ext, order) - &zu);

    let star_ideal = eliminate_auxiliary(&ext, base, &gens, k);
    let witnesses = star_ideal
        .generators()
        .iter()
        .map(|g| {
            let degree = match grading.is_homogeneous(g) {
                Homogeneity::Degree(d) => d,
                other => unreachable!(
                    "reduced basis of a graded ideal has homogeneous elements, got {other:?}"
                ),
            };
            debug_assert!(ideal.contains(g));
            Witness {
                element: g.clone(),
                degree,
            }
        })
        .collect();
    Ok(StarResult {
        star_ideal,
        witnesses,
    })
}

/// Whether every homogeneous component of every reduced-basis element lies in the ideal.
pub fn is_graded(ideal: &Ideal, grading: &GradingMap) -> Result<bool> {
    check_grading(ideal, grading)?;
    let gb = ideal.canonical_basis();
    Ok(gb.elements().iter().all(|g| {
        grading
            .homogeneous_components(g)
            .values()
            .all(|c| gb.contains(c))
    }))
}

fn total_weight(totals: &[i64], mono: &Monomial) -> i64 {
    totals
        .iter()
        .zip(mono.exponents())
        .map(|(w, &e)| w * e as i64)
        .sum()
}

/// `2 +` the largest total weight of a generator term.
pub fn default_oracle_bound(ideal: &Ideal, grading: &GradingMap) -> i64 {
    let totals = grading.column_totals();
    2 + ideal
        .generators()
        .iter()
        .flat_map(|g| g.terms())
        .map(|t| total_weight(&totals, &t.mono))
        .max()
        .unwrap_or(0)
}

fn monomials_up_to(totals: &[i64], bound: i64) -> Vec<Monomial> {
    fn go(totals: &[i64], i: usize, left: i64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == totals.len() {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        let mut e = 0;
        while e as i64 * totals[i] <= left {
            cur[i] = e;
            go(totals, i + 1, left - e as i64 * totals[i], cur, out);
            e += 1;
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(totals, 0, bound, &mut vec![0; totals.len()], &mut out);
    out
}

/// The ideal generated by `I ∩ R_g` for every degree `g` of total weight at
/// most `bound`, found by exact linear algebra on normal forms.
///
/// Needs nonnegative weights with every variable of positive total weight,
/// so that each truncation is finite.
pub fn star_truncated_oracle(ideal: &Ideal, grading: &GradingMap, bound: i64) -> Result<Ideal> {
    check_grading(ideal, grading)?;
    let totals = grading.column_totals();
    if !grading.is_nonnegative() || totals.iter().any(|&t| t <= 0) {
        return Err(Error::Precondition(
            "truncated oracle needs nonnegative weights and positive total weight per variable"
                .into(),
        ));
    }
    let ring = ideal.ring();
    let field = ring.field();
    let gb = ideal.canonical_basis();

    let mut by_degree: BTreeMap<Vec<i64>, Vec<Monomial>> = BTreeMap::new();
    for mono in monomials_up_to(&totals, bound.max(-1)) {
        by_degree
            .entry(grading.degree_of(&mono))
            .or_default()
            .push(mono);
    }
    let batches: Vec<Vec<Monomial>> = by_degree.into_values().collect();
    let pieces: Vec<Vec<Polynomial>> = batches
        .par_iter()
        .map(|monos| {
            let forms: Vec<Polynomial> = monos
                .iter()
                .map(|m| gb.normal_form(&Polynomial::monomial(ring, CANONICAL_ORDER, m.clone())))
                .collect();
            let mut support: Vec<Monomial> = forms
                .iter()
                .flat_map(|f| f.terms().iter().map(|t| t.mono.clone()))
                .collect();
            support.sort();
            support.dedup();
            // columns indexed by the monomials of this degree, rows by normal-form support
            let mut a = DenseMatrix::zeros(field, support.len(), monos.len());
            for (j, f) in forms.iter().enumerate() {
                for t in f.terms() {
                    let i = support.binary_search(&t.mono).unwrap();
                    a.set(i, j, t.coeff.clone());
                }
            }
            a.nullspace()
                .into_iter()
                .map(|v| {
                    Polynomial::from_terms(
                        ring,
                        CANONICAL_ORDER,
                        v.into_iter().zip(monos.iter().cloned()).collect(),
                    )
                })
                .collect()
        })
        .collect();
    let gens: Vec<Polynomial> = pieces.into_iter().flatten().collect();
    Ok(Ideal::new(ring, gens)?.reduced())
}

/// How primality of `p*` was established.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeEvidence {
    /// `(0)` in a domain.
    ZeroIdeal,
    /// A proper ideal generated by polynomials of degree one.
    Linear,
    /// The unit ideal, which is not prime.
    Unit,
    /// No certificate available for this shape of ideal.
    Undetermined,
}

impl PrimeEvidence {
    pub fn is_prime(&self) -> Option<bool> {
        match self {
            PrimeEvidence::ZeroIdeal | PrimeEvidence::Linear => Some(true),
            PrimeEvidence::Unit => Some(false),
            PrimeEvidence::Undetermined => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PrimeStarReport {
    pub star: Ideal,
    pub graded: bool,
    pub evidence: PrimeEvidence,
}

pub fn prime_evidence(ideal: &Ideal) -> PrimeEvidence {
    let gb = ideal.canonical_basis();
    if gb.is_zero_ideal() {
        PrimeEvidence::ZeroIdeal
    } else if gb.is_unit_ideal() {
        PrimeEvidence::Unit
    } else if gb.elements().iter().all(|g| g.total_degree() == Some(1)) {
        PrimeEvidence::Linear
    } else {
        PrimeEvidence::Undetermined
    }
}

/// Computes `p*` for a prime `p` and certifies that it is graded and prime.
pub fn star_of_prime_check(prime: &Ideal, grading: &GradingMap) -> Result<PrimeStarReport> {
    let star = star(prime, grading)?.star_ideal;
    let graded = is_graded(&star, grading)?;
    let evidence = prime_evidence(&star);
    Ok(PrimeStarReport {
        star,
        graded,
        evidence,
    })
}
