//! Monomial ideals and their irredundant irreducible decompositions.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{Ideal, CANONICAL_ORDER};
use crate::ring::{Monomial, Polynomial, RingSpec};

/// A monomial ideal by its minimal generators, kept as an antichain sorted
/// by descending exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

/// Removes non-minimal generators; the rest sorted by descending exponent vector.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| b.cmp(a));
    gens.dedup();
    let keep: Vec<bool> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| !gens.iter().enumerate().any(|(j, h)| j != i && h.divides(g)))
        .collect();
    gens.into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(g, _)| g)
        .collect()
}

impl MonomialIdeal {
    pub fn new(nvars: usize, generators: Vec<Monomial>) -> Self {
        debug_assert!(generators.iter().all(|g| g.len() == nvars));
        MonomialIdeal {
            nvars,
            generators: minimalize(generators),
        }
    }

    /// Requires the ideal to be monomial, i.e. its reduced basis to consist of monomials.
    pub fn from_ideal(ideal: &Ideal) -> Result<Self> {
        let gb = ideal.canonical_basis();
        let mut gens = Vec::new();
        for g in gb.elements() {
            if !g.is_monomial() {
                return Err(Error::Precondition(format!("ideal is not monomial: {g}")));
            }
            gens.push(g.leading_monomial().unwrap().clone());
        }
        Ok(MonomialIdeal::new(ideal.ring().nvars(), gens))
    }

    pub fn to_ideal(&self, ring: &Arc<RingSpec>) -> Ideal {
        Ideal::new(
            ring,
            self.generators
                .iter()
                .map(|m| Polynomial::monomial(ring, CANONICAL_ORDER, m.clone()))
                .collect(),
        )
        .expect("generators built in the same ring")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Generated by pure powers of variables (the irreducible monomial ideals).
    pub fn is_irreducible(&self) -> bool {
        !self.is_unit() && self.generators.iter().all(|g| g.support_size() == 1)
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators
            .iter()
            .all(|g| g.exponents().iter().all(|&e| e <= 1))
    }

    pub fn display<'a>(&'a self, ring: &'a RingSpec) -> impl fmt::Display + 'a {
        struct Show<'a>(&'a MonomialIdeal, &'a RingSpec);
        impl fmt::Display for Show<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                if self.0.generators.is_empty() {
                    write!(f, "0")?;
                }
                for (i, g) in self.0.generators.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    crate::ring::write_monomial(f, self.1, g)?;
                }
                write!(f, ")")
            }
        }
        Show(self, ring)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleDecomposition {
    pub components: Vec<MonomialIdeal>,
}

impl IrreducibleDecomposition {
    pub fn count(&self) -> usize {
        self.components.len()
    }

    /// The intersection of all components; the unit ideal when there are none.
    pub fn intersection(&self, nvars: usize) -> MonomialIdeal {
        self.components.iter().fold(
            MonomialIdeal::new(nvars, vec![Monomial::one(nvars)]),
            |acc, c| acc.intersect(c),
        )
    }
}

fn split(gens: Vec<Monomial>, leaves: &mut BTreeSet<MonomialIdeal>, nvars: usize) {
    let gens = minimalize(gens);
    let Some(pos) = gens.iter().position(|g| g.support_size() >= 2) else {
        leaves.insert(MonomialIdeal {
            nvars,
            generators: gens,
        });
        return;
    };
    let pivot = &gens[pos];
    let var = pivot.exponents().iter().position(|&e| e > 0).unwrap();
    let mut u = vec![0; nvars];
    u[var] = pivot.exponents()[var];
    let u = Monomial::new(u);
    let v = u.quotient_of(pivot);
    for part in [u, v] {
        let mut next = gens.clone();
        next[pos] = part;
        split(next, leaves, nvars);
    }
}

/// Splits mixed generators `m = x_i^{a_i} * v` until only pure powers remain,
/// then discards components that contain another one.
///
/// Monomial ideals form a distributive lattice in which irreducible elements
/// are meet-prime, so discarding non-minimal components leaves an irredundant
/// decomposition; this is re-checked against the full intersection.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> IrreducibleDecomposition {
    let n = ideal.nvars;
    if ideal.is_unit() {
        return IrreducibleDecomposition {
            components: Vec::new(),
        };
    }
    let mut leaves = BTreeSet::new();
    split(ideal.generators.clone(), &mut leaves, n);
    let leaves: Vec<MonomialIdeal> = leaves.into_iter().rev().collect();
    let components: Vec<MonomialIdeal> = leaves
        .iter()
        .filter(|c| !leaves.iter().any(|d| d != *c && c.contains_ideal(d)))
        .cloned()
        .collect();
    let decomposition = IrreducibleDecomposition { components };
    debug_assert!(is_irredundant(&decomposition, n));
    debug_assert_eq!(&decomposition.intersection(n), ideal);
    decomposition
}

fn is_irredundant(d: &IrreducibleDecomposition, nvars: usize) -> bool {
    (0..d.count()).all(|i| {
        let others = IrreducibleDecomposition {
            components: d
                .components
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, c)| c.clone())
                .collect(),
        };
        !d.components[i].contains_ideal(&others.intersection(nvars))
    })
}

pub fn index_of_reducibility_monomial(ideal: &MonomialIdeal) -> usize {
    irreducible_decomposition(ideal).count()
}

/// Minimal primes of a squarefree monomial ideal as variable-index sets.
pub fn minimal_primes_squarefree(ideal: &MonomialIdeal) -> Result<Vec<Vec<usize>>> {
    if !ideal.is_squarefree() {
        return Err(Error::Precondition(
            "monomial ideal is not squarefree".into(),
        ));
    }
    let mut primes: Vec<Vec<usize>> = irreducible_decomposition(ideal)
        .components
        .iter()
        .map(|c| {
            c.generators
                .iter()
                .map(|g| g.exponents().iter().position(|&e| e > 0).unwrap())
                .collect::<Vec<usize>>()
        })
        .collect();
    for p in &mut primes {
        p.sort();
    }
    primes.sort();
    Ok(primes)
}
