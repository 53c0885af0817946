//! Buchberger's algorithm with the Gebauer–Möller pair update.

use std::sync::Arc;

use crate::ring::{Monomial, MonomialOrder, Polynomial, RingSpec, Term};

/// A reduced Gröbner basis: monic elements sorted by descending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<RingSpec>,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().filter_map(|g| g.leading_monomial())
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.elements)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Checks the Buchberger criterion directly: every S-polynomial of a pair
    /// of basis elements reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let g = &self.elements;
        (0..g.len()).all(|i| {
            (i + 1..g.len()).all(|j| self.normal_form(&s_polynomial(&g[i], &g[j])).is_zero())
        })
    }

    /// Checks that the basis is reduced: monic, and no term of any element is
    /// divisible by the leading monomial of another.
    pub fn is_reduced(&self) -> bool {
        self.elements.iter().enumerate().all(|(i, g)| {
            g.leading_coeff().is_some_and(|c| c.is_one())
                && g.terms().iter().all(|t| {
                    self.elements
                        .iter()
                        .enumerate()
                        .all(|(j, h)| i == j || !h.leading_monomial().unwrap().divides(&t.mono))
                })
        })
    }
}

/// Full reduction of `f` by `basis`. The highest reducible term is always
/// reduced first, by the first basis element whose leading monomial divides it.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let refs: Vec<&Polynomial> = basis.iter().collect();
    normal_form_by(f, &refs)
}

fn normal_form_by(f: &Polynomial, basis: &[&Polynomial]) -> Polynomial {
    let order = basis.first().map_or(f.order(), |g| g.order());
    let mut rest = f.with_order(order);
    let mut remainder: Vec<Term> = Vec::new();
    while let Some(lt) = rest.leading_term() {
        let reducer = basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|m| m.divides(&lt.mono)));
        match reducer {
            Some(g) => {
                let glt = g.leading_term().unwrap();
                let c = if glt.coeff.is_one() {
                    lt.coeff.clone()
                } else {
                    lt.coeff
                        .try_div(&glt.coeff)
                        .expect("nonzero leading coefficient")
                };
                let m = glt.mono.quotient_of(&lt.mono);
                rest = rest.sub_multiple(&c, &m, g);
            }
            None => {
                remainder.push(lt.clone());
                rest = rest.tail();
            }
        }
    }
    // remainder terms were collected in descending order
    Polynomial::from_terms(
        f.ring(),
        order,
        remainder.into_iter().map(|t| (t.coeff, t.mono)).collect(),
    )
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (ft, gt) = (f.leading_term().unwrap(), g.leading_term().unwrap());
    let lcm = ft.mono.lcm(&gt.mono);
    let a = f.mul_term(&ft.coeff.inv(), &ft.mono.quotient_of(&lcm));
    let b = g.mul_term(&gt.coeff.inv(), &gt.mono.quotient_of(&lcm));
    &a - &b
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine {
    order: MonomialOrder,
    polys: Vec<Polynomial>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Engine {
    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().unwrap()
    }

    fn active_basis(&self) -> Vec<&Polynomial> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p)
            .collect()
    }

    /// Sugar of the pair `(i, j)` with the given lcm.
    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let d = lcm.total_degree();
        (self.sugar[i] + d - self.lm(i).total_degree())
            .max(self.sugar[j] + d - self.lm(j).total_degree())
    }

    /// Gebauer–Möller update after inserting the monic polynomial `h`.
    fn insert(&mut self, h: Polynomial, sugar: u32) {
        let hi = self.polys.len();
        self.polys.push(h);
        self.sugar.push(sugar);
        self.active.push(true);
        let hlm = self.lm(hi).clone();

        let mut candidates: Vec<(usize, Monomial)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| (g, hlm.lcm(self.lm(g))))
            .collect();
        // chain criterion among the new pairs
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        candidates.reverse();
        while let Some((g, l)) = candidates.pop() {
            let coprime = hlm.is_coprime(self.lm(g));
            let dominated = candidates
                .iter()
                .chain(kept.iter())
                .any(|(_, l2)| l2.divides(&l));
            if coprime || !dominated {
                kept.push((g, l));
            }
        }
        // product criterion
        kept.retain(|(g, _)| !hlm.is_coprime(self.lm(*g)));

        // chain criterion against the old pairs
        let polys = &self.polys;
        let lm = |i: usize| polys[i].leading_monomial().unwrap();
        self.pairs.retain(|p| {
            !(hlm.divides(&p.lcm) && lm(p.i).lcm(&hlm) != p.lcm && lm(p.j).lcm(&hlm) != p.lcm)
        });
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .map(|(g, lcm)| Pair {
                i: g,
                j: hi,
                sugar: self.pair_sugar(g, hi, &lcm),
                lcm,
            })
            .collect();
        self.pairs.extend(new_pairs);

        for g in 0..hi {
            if self.active[g] && hlm.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
    }

    /// Sugar strategy: smallest sugar, then smallest lcm, then index.
    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            p.sugar
                .cmp(&q.sugar)
                .then_with(|| order.cmp(&p.lcm, &q.lcm))
                .then((p.i, p.j).cmp(&(q.i, q.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `ring`.
pub fn buchberger(
    ring: &Arc<RingSpec>,
    gens: &[Polynomial],
    order: MonomialOrder,
) -> GroebnerBasis {
    let mut engine = Engine {
        order,
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let unit = |ring: &Arc<RingSpec>| GroebnerBasis {
        ring: ring.clone(),
        order,
        elements: vec![Polynomial::one(ring, order)],
    };

    let mut inputs: Vec<Polynomial> = gens.iter().map(|g| g.with_order(order)).collect();
    inputs.sort_by_key(|g| g.total_degree());
    for g in inputs {
        let h = normal_form_by(&g, &engine.active_basis());
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return unit(ring);
        }
        let sugar = g.total_degree().unwrap();
        engine.insert(h.monic(), sugar);
    }

    while let Some(pair) = engine.next_pair() {
        let s = s_polynomial(&engine.polys[pair.i], &engine.polys[pair.j]);
        let h = normal_form_by(&s, &engine.active_basis());
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return unit(ring);
        }
        engine.insert(h.monic(), pair.sugar);
    }

    let mut basis: Vec<Polynomial> = engine.active_basis().into_iter().cloned().collect();
    basis.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    let reduced: Vec<Polynomial> = (0..basis.len())
        .map(|i| {
            let others: Vec<Polynomial> = basis
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, p)| p.clone())
                .collect();
            let g = &basis[i];
            let lt = g.leading_term().unwrap();
            let head =
                Polynomial::from_terms(ring, order, vec![(lt.coeff.clone(), lt.mono.clone())]);
            let tail = normal_form(&(g - &head), &others);
            (&head + &tail).monic()
        })
        .collect();
    GroebnerBasis {
        ring: ring.clone(),
        order,
        elements: reduced,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::scalar::Field;

    fn ring() -> Arc<RingSpec> {
        RingSpec::new(Field::Rational, ["x", "y"]).unwrap()
    }

    fn polys(r: &Arc<RingSpec>, text: &[&str]) -> Vec<Polynomial> {
        text.iter()
            .map(|t| parse_polynomial(t, r).unwrap())
            .collect()
    }

    #[test]
    fn example_five_three_basis_under_lex() {
        let r = ring();
        let gens = polys(&r, &["x^2", "x*y", "y^3", "x - y^2"]);
        let gb = buchberger(&r, &gens, MonomialOrder::Lex);
        let shown: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, ["x - y^2", "y^3"]);
        assert!(gb.is_reduced());
        assert!(gb.s_pairs_reduce_to_zero());
    }

    #[test]
    fn zero_generators_give_empty_basis() {
        let r = ring();
        let gb = buchberger(&r, &polys(&r, &["0"]), MonomialOrder::Lex);
        assert!(gb.is_zero_ideal());
        assert!(gb.contains(&Polynomial::zero(&r, MonomialOrder::Lex)));
    }

    #[test]
    fn monomial_generators_are_minimalized() {
        let r = ring();
        let gb = buchberger(
            &r,
            &polys(&r, &["3x^2*y", "x*y", "2y^4", "x^3"]),
            MonomialOrder::GrevLex,
        );
        let shown: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, ["y^4", "x^3", "x*y"]);
    }

    #[test]
    fn normal_forms() {
        let r = ring();
        let gb = buchberger(&r, &polys(&r, &["y^3", "x - y^2"]), MonomialOrder::Lex);
        let x2 = parse_polynomial("x^2", &r).unwrap();
        assert!(gb.normal_form(&x2).is_zero());
        let m = buchberger(&r, &polys(&r, &["x", "y"]), MonomialOrder::Lex);
        let one = Polynomial::one(&r, MonomialOrder::Lex);
        assert_eq!(m.normal_form(&one), one);
        let x = parse_polynomial("x", &r).unwrap();
        let star = buchberger(&r, &polys(&r, &["x^2", "x*y", "y^3"]), MonomialOrder::Lex);
        assert!(!star.contains(&x));
    }

    #[test]
    fn unit_ideal_detected() {
        let r = ring();
        let gb = buchberger(&r, &polys(&r, &["x*y - 1", "x"]), MonomialOrder::GrevLex);
        assert!(gb.is_unit_ideal());
    }

    #[test]
    fn basis_is_canonical() {
        let r = RingSpec::new(Field::Rational, ["x", "y", "z"]).unwrap();
        let gens = polys(&r, &["x^2 - y*z", "x*y - z^2 + x", "y^2 - x*z"]);
        for order in [
            MonomialOrder::Lex,
            MonomialOrder::GrevLex,
            MonomialOrder::Elimination(1),
        ] {
            let gb = buchberger(&r, &gens, order);
            assert!(gb.is_reduced() && gb.s_pairs_reduce_to_zero());
            let mut rev = gens.clone();
            rev.reverse();
            assert_eq!(buchberger(&r, &rev, order), gb);
            assert_eq!(buchberger(&r, gb.elements(), order), gb);
            for g in &gens {
                assert!(gb.contains(g));
            }
        }
    }
}
