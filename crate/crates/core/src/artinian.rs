//! Zero-dimensional quotients `R/I`: standard monomials, m-primary tests and
//! socles `(I : m)/I` computed from multiplication matrices.
//!
//! `m` is always the ideal generated by all variables. For an m-primary `I`
//! the index of reducibility equals the socle rank.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ideal::{quotient, Ideal, CANONICAL_ORDER};
use crate::linalg::DenseMatrix;
use crate::ring::{Monomial, MonomialOrder, Polynomial};

#[derive(Clone, Debug)]
pub struct QuotientBasis {
    pub ideal: Ideal,
    pub order: MonomialOrder,
    /// Ascending in `order`.
    pub standard_monomials: Vec<Monomial>,
}

impl QuotientBasis {
    pub fn dim(&self) -> usize {
        self.standard_monomials.len()
    }

    /// Coordinates of a polynomial in normal form.
    fn coordinates(&self, f: &Polynomial) -> Vec<crate::scalar::Scalar> {
        let field = self.ideal.ring().field();
        let mut v = vec![field.zero(); self.dim()];
        for t in f.terms() {
            let i = self
                .standard_monomials
                .binary_search_by(|m| self.order.cmp(m, &t.mono))
                .expect("normal forms are supported on standard monomials");
            v[i] = t.coeff.clone();
        }
        v
    }
}

#[derive(Clone, Debug)]
pub struct SocleBasis {
    /// Normal-form representatives of a basis of `(I : m)/I`.
    pub elements: Vec<Polynomial>,
}

impl SocleBasis {
    pub fn rank(&self) -> usize {
        self.elements.len()
    }
}

pub fn standard_monomials(ideal: &Ideal) -> Result<QuotientBasis> {
    standard_monomials_in(ideal, CANONICAL_ORDER)
}

pub fn standard_monomials_in(ideal: &Ideal, order: MonomialOrder) -> Result<QuotientBasis> {
    let gb = ideal.groebner_basis(order);
    let n = ideal.ring().nvars();
    let leads: Vec<&Monomial> = gb.leading_monomials().collect();
    for i in 0..n {
        let pure = leads
            .iter()
            .any(|m| m.is_one() || (m.exponents()[i] > 0 && m.support_size() == 1));
        if !pure {
            return Err(Error::Dimension(format!(
                "ideal is not zero-dimensional: no leading monomial is a power of `{}`",
                ideal.ring().variables()[i]
            )));
        }
    }
    let standard = |m: &Monomial| !leads.iter().any(|l| l.divides(m));
    let mut seen = BTreeSet::new();
    let mut frontier = vec![Monomial::one(n)];
    while let Some(m) = frontier.pop() {
        if !standard(&m) || !seen.insert(m.clone()) {
            continue;
        }
        for i in 0..n {
            frontier.push(m.mul(&Monomial::variable(n, i)));
        }
    }
    let mut standard_monomials: Vec<Monomial> = seen.into_iter().collect();
    standard_monomials.sort_by(|a, b| order.cmp(a, b));
    Ok(QuotientBasis {
        ideal: ideal.clone(),
        order,
        standard_monomials,
    })
}

/// Proper, and every variable nilpotent modulo the ideal.
pub fn is_m_primary(ideal: &Ideal) -> bool {
    if ideal.is_unit() {
        return false;
    }
    let Ok(basis) = standard_monomials(ideal) else {
        return false;
    };
    let ring = ideal.ring();
    let bound = basis.dim() as u32 + 1;
    (0..ring.nvars())
        .all(|i| ideal.contains(&Polynomial::variable(ring, CANONICAL_ORDER, i).pow(bound)))
}

fn require_m_primary(ideal: &Ideal) -> Result<()> {
    if is_m_primary(ideal) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "ideal ({ideal}) is not primary to the maximal ideal of the variables"
        )))
    }
}

pub fn socle(ideal: &Ideal) -> Result<SocleBasis> {
    socle_in(ideal, CANONICAL_ORDER)
}

/// Socle computed on the staircase of `order`; its rank does not depend on the order.
pub fn socle_in(ideal: &Ideal, order: MonomialOrder) -> Result<SocleBasis> {
    require_m_primary(ideal)?;
    let basis = standard_monomials_in(ideal, order)?;
    let gb = ideal.groebner_basis(order);
    let ring = ideal.ring();
    let n = ring.nvars();
    let dim = basis.dim();
    // rows: for each variable x_i and each coordinate, the map b -> NF(x_i b)
    let mut stacked = DenseMatrix::zeros(ring.field(), 0, dim);
    for i in 0..n {
        let images: Vec<Vec<_>> = basis
            .standard_monomials
            .iter()
            .map(|b| {
                let prod = Polynomial::monomial(ring, order, b.mul(&Monomial::variable(n, i)));
                basis.coordinates(&gb.normal_form(&prod))
            })
            .collect();
        for row in 0..dim {
            stacked.push_row(images.iter().map(|col| col[row].clone()).collect());
        }
    }
    let elements = stacked
        .nullspace()
        .into_iter()
        .map(|v| {
            Polynomial::from_terms(
                ring,
                order,
                v.into_iter()
                    .zip(basis.standard_monomials.iter().cloned())
                    .collect(),
            )
        })
        .collect();
    Ok(SocleBasis { elements })
}

/// Whether `f` is a socle element of `R/I` lying in the span of `socle`.
pub fn socle_spans(ideal: &Ideal, socle: &SocleBasis, f: &Polynomial) -> Result<bool> {
    let basis = standard_monomials(ideal)?;
    let gb = ideal.canonical_basis();
    let mut rows = DenseMatrix::zeros(ideal.ring().field(), 0, basis.dim());
    for e in &socle.elements {
        rows.push_row(basis.coordinates(&gb.normal_form(e)));
    }
    Ok(rows.row_space_contains(&basis.coordinates(&gb.normal_form(f))))
}

/// `dim R/I − dim R/(I : m)`, the socle rank computed through the colon ideal.
pub fn socle_rank_via_colon(ideal: &Ideal) -> Result<usize> {
    require_m_primary(ideal)?;
    let ring = ideal.ring();
    let m = Ideal::new(
        ring,
        (0..ring.nvars())
            .map(|i| Polynomial::variable(ring, CANONICAL_ORDER, i))
            .collect(),
    )?;
    let colon = quotient(ideal, &m)?;
    Ok(standard_monomials(ideal)?.dim() - standard_monomials(&colon)?.dim())
}

pub fn index_of_reducibility_primary(ideal: &Ideal) -> Result<usize> {
    Ok(socle(ideal)?.rank())
}

pub fn is_irreducible_primary(ideal: &Ideal) -> Result<bool> {
    Ok(index_of_reducibility_primary(ideal)? == 1)
}
