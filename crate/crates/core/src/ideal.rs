//! Ideals and the ideal algebra built on the Gröbner engine.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::ring::{check_same_ring, Monomial, MonomialOrder, Polynomial, RingSpec};

/// Order used for equality tests and for the generators of computed ideals.
pub const CANONICAL_ORDER: MonomialOrder = MonomialOrder::GrevLex;

/// An ideal given by generators, with Gröbner bases cached per order.
#[derive(Debug)]
pub struct Ideal {
    ring: Arc<RingSpec>,
    generators: Vec<Polynomial>,
    cache: Mutex<BTreeMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl Ideal {
    pub fn new(ring: &Arc<RingSpec>, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            check_same_ring(ring, g.ring())?;
        }
        Ok(Self::new_unchecked(ring, generators))
    }

    fn new_unchecked(ring: &Arc<RingSpec>, generators: Vec<Polynomial>) -> Self {
        Ideal {
            ring: ring.clone(),
            generators,
            cache: Mutex::new(BTreeMap::new()),
        }
    }

    fn from_basis(basis: GroebnerBasis) -> Self {
        let ideal = Self::new_unchecked(basis.ring(), basis.elements().to_vec());
        ideal
            .cache
            .lock()
            .unwrap()
            .insert(basis.order(), Arc::new(basis));
        ideal
    }

    pub fn zero(ring: &Arc<RingSpec>) -> Self {
        Self::new_unchecked(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<RingSpec>) -> Self {
        Self::new_unchecked(ring, vec![Polynomial::one(ring, CANONICAL_ORDER)])
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner_basis(&self, order: MonomialOrder) -> Arc<GroebnerBasis> {
        if let Some(gb) = self.cache.lock().unwrap().get(&order) {
            return gb.clone();
        }
        // computed outside the lock; a concurrent duplicate computation yields the same basis
        let gb = Arc::new(buchberger(&self.ring, &self.generators, order));
        self.cache
            .lock()
            .unwrap()
            .entry(order)
            .or_insert(gb)
            .clone()
    }

    pub fn canonical_basis(&self) -> Arc<GroebnerBasis> {
        self.groebner_basis(CANONICAL_ORDER)
    }

    /// The same ideal, with its reduced canonical basis as generators.
    pub fn reduced(&self) -> Ideal {
        Ideal::from_basis((*self.canonical_basis()).clone())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.canonical_basis().contains(f)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        let gb = self.canonical_basis();
        other.generators.iter().all(|g| gb.contains(g))
    }

    pub fn is_unit(&self) -> bool {
        self.canonical_basis().is_unit_ideal()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(Polynomial::is_zero)
    }

    fn nonzero_generators(&self) -> impl Iterator<Item = &Polynomial> {
        self.generators.iter().filter(|g| !g.is_zero())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.nonzero_generators().map(|g| g.to_string()).collect();
        if gens.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", gens.join(", "))
        }
    }
}

pub fn ideal_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    check_same_ring(f.ring(), ideal.ring())?;
    Ok(ideal.contains(f))
}

/// Equality of ideals by comparing reduced bases in the canonical order.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    check_same_ring(a.ring(), b.ring())?;
    Ok(a.canonical_basis().elements() == b.canonical_basis().elements())
}

pub fn sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check_same_ring(a.ring(), b.ring())?;
    let gens = a.generators.iter().chain(&b.generators).cloned().collect();
    Ok(Ideal::new_unchecked(a.ring(), gens).reduced())
}

pub fn product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check_same_ring(a.ring(), b.ring())?;
    let mut gens = Vec::new();
    for f in a.nonzero_generators() {
        for g in b.nonzero_generators() {
            gens.push(f * g);
        }
    }
    Ok(Ideal::new_unchecked(a.ring(), gens).reduced())
}

fn prepend_zeros(k: usize) -> impl Fn(&Monomial) -> Option<Monomial> {
    move |m| {
        let mut e = vec![0; k];
        e.extend_from_slice(m.exponents());
        Some(Monomial::new(e))
    }
}

fn drop_leading_vars(k: usize) -> impl Fn(&Monomial) -> Option<Monomial> {
    move |m| {
        let e = m.exponents();
        e[..k]
            .iter()
            .all(|&x| x == 0)
            .then(|| Monomial::new(e[k..].to_vec()))
    }
}

/// Moves `f` into `ext`, whose first `k` variables are auxiliary.
pub(crate) fn embed(f: &Polynomial, ext: &Arc<RingSpec>, k: usize) -> Polynomial {
    f.remap(ext, MonomialOrder::Elimination(k), prepend_zeros(k))
        .expect("embedding never fails")
}

/// Computes `(gens) ∩ k[x_{k+1}..]` for polynomials in `ext` and contracts
/// the result back to `base`, dropping the first `k` variables.
pub(crate) fn eliminate_auxiliary(
    ext: &Arc<RingSpec>,
    base: &Arc<RingSpec>,
    gens: &[Polynomial],
    k: usize,
) -> Ideal {
    let gb = buchberger(ext, gens, MonomialOrder::Elimination(k));
    let kept: Vec<Polynomial> = gb
        .elements()
        .iter()
        .filter_map(|g| g.remap(base, CANONICAL_ORDER, drop_leading_vars(k)))
        .collect();
    // the t-free part of a reduced elimination basis is the reduced basis of the
    // elimination ideal for the induced order, which is grevlex on the rest
    let ideal = Ideal::new_unchecked(base, kept);
    debug_assert!({
        let gb = ideal.canonical_basis();
        gb.elements() == ideal.generators()
    });
    ideal
}

/// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check_same_ring(a.ring(), b.ring())?;
    let base = a.ring();
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(base));
    }
    let ext = base.prepend_auxiliary(&["t"]);
    let order = MonomialOrder::Elimination(1);
    let t = Polynomial::variable(&ext, order, 0);
    let one_minus_t = &Polynomial::one(&ext, order) - &t;
    let mut gens = Vec::new();
    for f in a.nonzero_generators() {
        gens.push(&t * &embed(f, &ext, 1));
    }
    for g in b.nonzero_generators() {
        gens.push(&one_minus_t * &embed(g, &ext, 1));
    }
    Ok(eliminate_auxiliary(&ext, base, &gens, 1))
}

/// `(I : f) = (1/f)·(I ∩ (f))`.
pub fn quotient_by(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    check_same_ring(ideal.ring(), f.ring())?;
    if f.is_zero() {
        return Ok(Ideal::unit(ideal.ring()));
    }
    let principal = Ideal::new_unchecked(ideal.ring(), vec![f.clone()]);
    let meet = intersect(ideal, &principal)?;
    let gens = meet
        .generators
        .iter()
        .map(|g| g.div_exact(f).expect("elements of (f) are divisible by f"))
        .collect();
    Ok(Ideal::new_unchecked(ideal.ring(), gens).reduced())
}

/// `(I : J) = ∩_j (I : j)` over the generators of `J`.
pub fn quotient(ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
    check_same_ring(ideal.ring(), by.ring())?;
    let mut acc = Ideal::unit(ideal.ring());
    for j in by.nonzero_generators() {
        let q = quotient_by(ideal, j)?;
        acc = if acc.is_unit() {
            q
        } else {
            intersect(&acc, &q)?
        };
    }
    Ok(acc)
}

/// `(I : f^∞)` by eliminating `z` from `I + (1 − z·f)`.
pub fn saturate(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    check_same_ring(ideal.ring(), f.ring())?;
    if f.is_zero() {
        return Err(Error::Usage("saturation by the zero polynomial".into()));
    }
    let base = ideal.ring();
    let ext = base.prepend_auxiliary(&["z"]);
    let order = MonomialOrder::Elimination(1);
    let z = Polynomial::variable(&ext, order, 0);
    let mut gens: Vec<Polynomial> = ideal
        .nonzero_generators()
        .map(|g| embed(g, &ext, 1))
        .collect();
    gens.push(&Polynomial::one(&ext, order) - &(&z * &embed(f, &ext, 1)));
    Ok(eliminate_auxiliary(&ext, base, &gens, 1))
}

/// `I ∩ k[remaining variables]`; the result lives in the original ring.
pub fn eliminate(ideal: &Ideal, vars: &[usize]) -> Result<Ideal> {
    let base = ideal.ring();
    let n = base.nvars();
    if let Some(&bad) = vars.iter().find(|&&v| v >= n) {
        return Err(Error::Usage(format!("variable index {bad} out of range")));
    }
    if vars.is_empty() {
        return Ok(ideal.reduced());
    }
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    for &v in vars {
        if !perm.contains(&v) {
            perm.push(v);
        }
    }
    let k = perm.len();
    perm.extend((0..n).filter(|v| !vars.contains(v)));
    let permuted = base.permuted(&perm);
    let order = MonomialOrder::Elimination(k);
    let gens: Vec<Polynomial> = ideal
        .nonzero_generators()
        .map(|g| {
            g.remap(&permuted, order, |m| {
                Some(Monomial::new(
                    perm.iter().map(|&i| m.exponents()[i]).collect(),
                ))
            })
            .unwrap()
        })
        .collect();
    let gb = buchberger(&permuted, &gens, order);
    let kept: Vec<Polynomial> = gb
        .elements()
        .iter()
        .filter_map(|g| {
            g.remap(base, CANONICAL_ORDER, |m| {
                let e = m.exponents();
                if e[..k].iter().any(|&x| x > 0) {
                    return None;
                }
                let mut out = vec![0; n];
                for (new, &old) in perm.iter().enumerate() {
                    out[old] = e[new];
                }
                Some(Monomial::new(out))
            })
        })
        .collect();
    Ok(Ideal::new_unchecked(base, kept).reduced())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_generators, parse_polynomial, parse_ring};

    fn ideal(r: &Arc<RingSpec>, text: &str) -> Ideal {
        Ideal::new(r, parse_generators(text, r).unwrap()).unwrap()
    }

    fn xy() -> Arc<RingSpec> {
        parse_ring("QQ[x,y]").unwrap()
    }

    fn assert_same(a: &Ideal, b: &Ideal) {
        assert!(ideal_equal(a, b).unwrap(), "{a} != {b}");
    }

    #[test]
    fn intersection_of_monomial_ideals() {
        let r = xy();
        let meet = intersect(&ideal(&r, "x^2, y"), &ideal(&r, "x, y^3")).unwrap();
        assert_same(&meet, &ideal(&r, "x^2, x*y, y^3"));
        let i = ideal(&r, "x^2 - y, x*y^2");
        assert_same(&intersect(&i, &i).unwrap(), &i);
        assert_same(&intersect(&i, &Ideal::unit(&r)).unwrap(), &i);
    }

    #[test]
    fn colon_ideals() {
        let r = xy();
        let m = ideal(&r, "x, y");
        let q = quotient(&ideal(&r, "x^2, x*y, y^3"), &m).unwrap();
        assert_same(&q, &ideal(&r, "x, y^2"));
        let q = quotient(&ideal(&r, "y^3, x - y^2"), &m).unwrap();
        assert_same(&q, &ideal(&r, "y^2, x - y^2"));
        let i = ideal(&r, "x^3 - y, x*y");
        assert_same(&quotient(&i, &Ideal::unit(&r)).unwrap(), &i);
    }

    #[test]
    fn saturations() {
        let r = parse_ring("QQ[t,x]").unwrap();
        let t = parse_polynomial("t", &r).unwrap();
        assert_same(&saturate(&ideal(&r, "t*x"), &t).unwrap(), &ideal(&r, "x"));
        let i = ideal(&r, "t^2 - x, x^3");
        assert_same(
            &saturate(&i, &Polynomial::one(&r, CANONICAL_ORDER)).unwrap(),
            &i,
        );
        assert!(saturate(&i, &Polynomial::zero(&r, CANONICAL_ORDER)).is_err());

        // monomial saturation oracle: drop the x- and y-parts of every generator
        // of (x^2 y, x y^2); both become 1, so the saturation is the unit ideal
        let r = xy();
        let xy = parse_polynomial("x*y", &r).unwrap();
        assert!(saturate(&ideal(&r, "x^2*y, x*y^2"), &xy).unwrap().is_unit());
        assert_same(
            &saturate(
                &ideal(&r, "x^2*y^3, y^5"),
                &parse_polynomial("x", &r).unwrap(),
            )
            .unwrap(),
            &ideal(&r, "y^3"),
        );
    }

    #[test]
    fn eliminations() {
        let r = xy();
        assert!(eliminate(&ideal(&r, "x - y^2"), &[0]).unwrap().is_zero());
        assert_same(
            &eliminate(&ideal(&r, "x - y^2, x"), &[0]).unwrap(),
            &ideal(&r, "y^2"),
        );
        let i = ideal(&r, "x^2 - y, x*y");
        assert_same(&eliminate(&i, &[]).unwrap(), &i);
        // eliminating y from a twisted cubic: y = x^2, z = x^3 leaves z - x^3 in k[x,z]
        let r3 = parse_ring("QQ[x,y,z]").unwrap();
        let e = eliminate(&ideal(&r3, "y - x^2, z - x^3"), &[1]).unwrap();
        assert_same(&e, &ideal(&r3, "z - x^3"));
    }

    #[test]
    fn equality() {
        let r = xy();
        assert!(ideal_equal(
            &ideal(&r, "x^2, x*y, y^3, x - y^2"),
            &ideal(&r, "y^3, x - y^2")
        )
        .unwrap());
        assert!(!ideal_equal(&ideal(&r, "x"), &ideal(&r, "x^2")).unwrap());
        assert!(ideal_equal(&Ideal::zero(&r), &ideal(&r, "0")).unwrap());
    }

    #[test]
    fn membership() {
        let r = xy();
        let x2 = parse_polynomial("x^2", &r).unwrap();
        assert!(ideal_membership(&x2, &ideal(&r, "x^2, x*y, y^3, x - y^2")).unwrap());
        let x = parse_polynomial("x", &r).unwrap();
        assert!(!ideal_membership(&x, &ideal(&r, "x^2, x*y, y^3")).unwrap());
        assert!(ideal_membership(&Polynomial::zero(&r, CANONICAL_ORDER), &ideal(&r, "x")).unwrap());
    }
}
