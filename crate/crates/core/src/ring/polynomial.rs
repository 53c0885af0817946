use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{check_same_ring, same_ring, Monomial, MonomialOrder, RingSpec};
use crate::error::Result;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Scalar,
    pub mono: Monomial,
}

/// A sparse polynomial: nonzero terms strictly descending in `order`.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<RingSpec>,
    order: MonomialOrder,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<RingSpec>, order: MonomialOrder) -> Self {
        Polynomial {
            ring: ring.clone(),
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<RingSpec>, order: MonomialOrder, c: Scalar) -> Self {
        Self::from_terms(ring, order, vec![(c, Monomial::one(ring.nvars()))])
    }

    pub fn one(ring: &Arc<RingSpec>, order: MonomialOrder) -> Self {
        Self::constant(ring, order, ring.field().one())
    }

    pub fn variable(ring: &Arc<RingSpec>, order: MonomialOrder, i: usize) -> Self {
        Self::monomial(ring, order, Monomial::variable(ring.nvars(), i))
    }

    pub fn monomial(ring: &Arc<RingSpec>, order: MonomialOrder, mono: Monomial) -> Self {
        Self::from_terms(ring, order, vec![(ring.field().one(), mono)])
    }

    /// Builds a polynomial from arbitrary `(coefficient, monomial)` pairs:
    /// like monomials are merged and zero coefficients dropped.
    pub fn from_terms(
        ring: &Arc<RingSpec>,
        order: MonomialOrder,
        mut raw: Vec<(Scalar, Monomial)>,
    ) -> Self {
        debug_assert!(raw
            .iter()
            .all(|(c, m)| c.field() == ring.field() && m.len() == ring.nvars()));
        raw.sort_by(|a, b| order.cmp(&b.1, &a.1));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for (coeff, mono) in raw {
            match terms.last_mut() {
                Some(last) if last.mono == mono => last.coeff = &last.coeff + &coeff,
                _ => {
                    if let Some(last) = terms.last() {
                        if last.coeff.is_zero() {
                            terms.pop();
                        }
                    }
                    terms.push(Term { coeff, mono })
                }
            }
        }
        if terms.last().is_some_and(|t| t.coeff.is_zero()) {
            terms.pop();
        }
        Polynomial {
            ring: ring.clone(),
            order,
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.total_degree()).max()
    }

    /// The coefficient of `mono`, zero if absent.
    pub fn coefficient(&self, mono: &Monomial) -> Scalar {
        self.terms
            .iter()
            .find(|t| &t.mono == mono)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    /// The polynomial minus its leading term.
    pub(crate) fn tail(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            terms: self.terms.get(1..).unwrap_or(&[]).to_vec(),
        }
    }

    /// Re-sorts the terms for another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial {
            ring: self.ring.clone(),
            order,
            terms,
        }
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let other = other.with_order(self.order);
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let sign = |t: &Term| {
            if negate_other {
                Term {
                    coeff: -&t.coeff,
                    mono: t.mono.clone(),
                }
            } else {
                t.clone()
            }
        };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match order.cmp(&a.mono, &b.mono) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(sign(b));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        &a.coeff - &b.coeff
                    } else {
                        &a.coeff + &b.coeff
                    };
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            mono: a.mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(sign));
        Polynomial {
            ring: self.ring.clone(),
            order,
            terms: out,
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, &other.ring)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, &other.ring)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, &other.ring)?;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                raw.push((&a.coeff * &b.coeff, a.mono.mul(&b.mono)));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, self.order, raw))
    }

    /// `c * mono * self`.
    pub fn mul_term(&self, c: &Scalar, mono: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring, self.order);
        }
        // multiplication by a monomial preserves the relative order of terms
        Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    mono: t.mono.mul(mono),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.ring.nvars()))
    }

    /// `self - c * mono * g`, the elementary reduction step.
    pub(crate) fn sub_multiple(&self, c: &Scalar, mono: &Monomial, g: &Polynomial) -> Polynomial {
        self.merge(&g.mul_term(c, mono), true)
    }

    /// Divides by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring, self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let divisor = divisor.with_order(self.order);
        let lt = divisor.leading_term()?;
        let lc_inv = lt.coeff.inv();
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some(t) = rest.leading_term() {
            if !lt.mono.divides(&t.mono) {
                return None;
            }
            let c = &t.coeff * &lc_inv;
            let m = lt.mono.quotient_of(&t.mono);
            rest = rest.sub_multiple(&c, &m, &divisor);
            quotient.push((c, m));
        }
        Some(Polynomial::from_terms(&self.ring, self.order, quotient))
    }

    /// Moves the polynomial into `target`, mapping each exponent vector with
    /// `map`. Returns `None` as soon as `map` rejects a monomial.
    pub(crate) fn remap(
        &self,
        target: &Arc<RingSpec>,
        order: MonomialOrder,
        map: impl Fn(&Monomial) -> Option<Monomial>,
    ) -> Option<Polynomial> {
        let mut raw = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            raw.push((t.coeff.clone(), map(&t.mono)?));
        }
        Some(Polynomial::from_terms(target, order, raw))
    }

    /// Evaluates at a point of `k^n`.
    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        let mut acc = self.ring.field().zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (x, &e) in point.iter().zip(t.mono.exponents()) {
                if e > 0 {
                    v = &v * &x.pow(e);
                }
            }
            acc = &acc + &v;
        }
        acc
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring)
            && if self.order == other.order {
                self.terms == other.terms
            } else {
                self.terms == other.with_order(self.order).terms
            }
    }
}

impl Eq for Polynomial {}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-self.ring.field().one())
    }
}

pub fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &RingSpec, mono: &Monomial) -> fmt::Result {
    let mut first = true;
    for (name, &e) in ring.variables().iter().zip(mono.exponents()) {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{name}")?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        write!(f, "1")?;
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    /// Canonical form: descending terms, `^` for powers, `*` between
    /// variables, no `*` between a coefficient and its monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            let abs = if negative { -&t.coeff } else { t.coeff.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if t.mono.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}")?;
                }
                write_monomial(f, &self.ring, &t.mono)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn ring() -> Arc<RingSpec> {
        RingSpec::new(Field::Rational, ["x", "y"]).unwrap()
    }

    fn var(r: &Arc<RingSpec>, i: usize) -> Polynomial {
        Polynomial::variable(r, MonomialOrder::Lex, i)
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let (x, y) = (var(&r, 0), var(&r, 1));
        let y2 = &y * &y;
        let p = &(&x - &y2) * &(&x + &y2);
        assert_eq!(p.to_string(), "x^2 - y^4");
    }

    #[test]
    fn square_of_sum_and_zero() {
        let r = ring();
        let s = &var(&r, 0) + &var(&r, 1);
        assert_eq!(s.pow(2).to_string(), "x^2 + 2x*y + y^2");
        let z = Polynomial::zero(&r, MonomialOrder::Lex);
        assert_eq!(&s + &z, s);
        assert_eq!(z.to_string(), "0");
        assert!((&s - &s).is_zero());
    }

    #[test]
    fn ring_mismatch_is_usage_error() {
        let r1 = ring();
        let r2 = RingSpec::new(Field::Rational, ["x", "z"]).unwrap();
        assert!(matches!(
            var(&r1, 0).try_add(&var(&r2, 0)),
            Err(crate::error::Error::Usage(_))
        ));
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let (x, y) = (var(&r, 0), var(&r, 1));
        let f = &(&x - &y) * &(&x + &y.pow(3));
        assert_eq!(f.div_exact(&(&x - &y)).unwrap(), &x + &y.pow(3));
        assert!(x.div_exact(&y).is_none());
    }

    #[test]
    fn order_changes_keep_equality() {
        let r = ring();
        let (x, y) = (var(&r, 0), var(&r, 1));
        let f = &x + &y.pow(3);
        let g = f.with_order(MonomialOrder::GrevLex);
        assert_eq!(f, g);
        assert_eq!(g.to_string(), "y^3 + x");
    }
}
