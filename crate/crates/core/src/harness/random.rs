use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::oracle::{groebner_sound, macaulay_membership};
use super::points::{theorem51_check, PointConfiguration};
use crate::artinian::{index_of_reducibility_primary, socle_rank_via_colon};
use crate::error::Result;
use crate::gradedfield::{
    graded_free_basis, GradedFieldPresentation, HomogeneousElement, HomogeneousMatrix,
    SupportLattice,
};
use crate::ideal::{ideal_equal, intersect, Ideal, CANONICAL_ORDER};
use crate::linalg::DenseMatrix;
use crate::monomial_decomp::{index_of_reducibility_monomial, MonomialIdeal};
use crate::ring::{GradingMap, Monomial, Polynomial, RingSpec};
use crate::scalar::{Field, DEFAULT_PRIME};
use crate::star::{is_graded, star, star_truncated_oracle};

/// Outcome of one seeded suite. Cases are generated independently from
/// `(seed, case index)`, run concurrently and reported in case order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub seed: u64,
    pub cases: usize,
    /// Individual property checks performed.
    pub checks: usize,
    pub failures: Vec<String>,
    /// Ideals whose Gröbner bases were audited for soundness.
    pub groebner_audits: usize,
    pub groebner_failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.groebner_failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} (seed {}, {} cases, {} checks, {} basis audits, {} failures)",
            self.name,
            if self.passed() { "pass" } else { "FAIL" },
            self.seed,
            self.cases,
            self.checks,
            self.groebner_audits,
            self.failures.len() + self.groebner_failures.len()
        )?;
        for msg in self.failures.iter().chain(&self.groebner_failures) {
            write!(f, "\n  {msg}")?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct CaseLog {
    case: usize,
    checks: usize,
    failures: Vec<String>,
    audits: usize,
    groebner_failures: Vec<String>,
}

impl CaseLog {
    fn new(case: usize) -> Self {
        CaseLog {
            case,
            ..Default::default()
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures
                .push(format!("case {}: {}", self.case, what()));
        }
    }

    fn audit(&mut self, ideal: &Ideal) {
        self.audits += 1;
        if !groebner_sound(ideal) {
            self.groebner_failures
                .push(format!("case {}: unsound basis for ({ideal})", self.case));
        }
    }

    fn error(&mut self, e: crate::Error) {
        self.checks += 1;
        self.failures
            .push(format!("case {}: error: {e}", self.case));
    }
}

fn case_rng(seed: u64, case: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case as u64);
    rng
}

fn run_suite<F>(name: &str, seed: u64, cases: usize, body: F) -> SuiteReport
where
    F: Fn(&mut ChaCha8Rng, &mut CaseLog) -> Result<()> + Sync,
{
    let logs: Vec<CaseLog> = (0..cases)
        .into_par_iter()
        .map(|case| {
            let mut log = CaseLog::new(case);
            if let Err(e) = body(&mut case_rng(seed, case), &mut log) {
                log.error(e);
            }
            log
        })
        .collect();
    let mut report = SuiteReport {
        name: name.to_string(),
        seed,
        cases,
        checks: 0,
        failures: Vec::new(),
        groebner_audits: 0,
        groebner_failures: Vec::new(),
    };
    for log in logs {
        report.checks += log.checks;
        report.failures.extend(log.failures);
        report.groebner_audits += log.audits;
        report.groebner_failures.extend(log.groebner_failures);
    }
    report
}

fn ring_of(field: Field, nvars: usize) -> Arc<RingSpec> {
    let names = ["x", "y", "z", "w"];
    RingSpec::new(field, names[..nvars].iter().copied()).expect("valid names")
}

fn random_points(rng: &mut ChaCha8Rng) -> Result<PointConfiguration> {
    let n = rng.gen_range(1..=6);
    let mut pts: Vec<(i64, i64)> = Vec::with_capacity(n);
    while pts.len() < n {
        let p = (rng.gen_range(-5..=5), rng.gen_range(-5..=5));
        if p != (0, 0) && !pts.contains(&p) {
            pts.push(p);
        }
    }
    PointConfiguration::from_integers(Field::Rational, &pts)
}

/// Point configurations: `ir(I) ≥ ir(I*)`, equality exactly for an injective
/// direction map, and `I*` equal to the intersection of the predicted lines.
pub fn point_suite(seed: u64, cases: usize) -> SuiteReport {
    run_suite("points", seed, cases, |rng, log| {
        let config = random_points(rng)?;
        let rep = theorem51_check(&config)?;
        log.check(rep.ir_i >= rep.ir_istar, || {
            format!("ir(I) < ir(I*) for {config}")
        });
        log.check((rep.ir_i == rep.ir_istar) == rep.bijective, || {
            format!("equality does not match injectivity for {config}")
        });
        log.check(rep.star_matches_prediction, || {
            format!("I* differs from the line prediction for {config}")
        });
        log.check(rep.star_commutes, || {
            format!("star does not commute with intersection for {config}")
        });
        for d in &rep.details {
            log.check(d.matches_line && d.graded_prime, || {
                format!(
                    "bad star image of ({}, {}) in {config}",
                    d.point.0, d.point.1
                )
            });
        }
        log.audit(&rep.ideal);
        log.audit(&rep.star);
        Ok(())
    })
}

/// Random monomial ideal containing a pure power of every variable.
fn random_primary_monomial(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    let n = rng.gen_range(1..=3);
    let powers: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=6)).collect();
    let mut gens: Vec<Monomial> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = powers[i];
            Monomial::new(e)
        })
        .collect();
    for _ in 0..rng.gen_range(0..=4) {
        let m = Monomial::new(powers.iter().map(|&p| rng.gen_range(0..p)).collect());
        if !m.is_one() {
            gens.push(m);
        }
    }
    MonomialIdeal::new(n, gens)
}

/// Irreducible-decomposition count equals socle rank on m-primary monomial ideals.
pub fn main_theorem_suite(seed: u64, cases: usize) -> SuiteReport {
    run_suite("decomposition-vs-socle", seed, cases, |rng, log| {
        let mono = random_primary_monomial(rng);
        let ring = ring_of(Field::Rational, mono.nvars());
        let ideal = mono.to_ideal(&ring);
        let count = index_of_reducibility_monomial(&mono);
        let rank = index_of_reducibility_primary(&ideal)?;
        log.check(count == rank, || {
            format!("({ideal}): {count} components, socle rank {rank}")
        });
        let colon = socle_rank_via_colon(&ideal)?;
        log.check(colon == rank, || {
            format!("({ideal}): colon rank {colon}, socle rank {rank}")
        });
        log.audit(&ideal);
        Ok(())
    })
}

fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(n)];
    for i in 0..n {
        let mut next = Vec::new();
        for m in &out {
            let mut e = m.exponents().to_vec();
            while e.iter().sum::<u32>() <= d {
                next.push(Monomial::new(e.clone()));
                e[i] += 1;
            }
        }
        out = next;
    }
    out
}

fn random_nonzero(rng: &mut ChaCha8Rng, field: Field) -> crate::scalar::Scalar {
    loop {
        let c = field.from_i64(rng.gen_range(-9..=9));
        if !c.is_zero() {
            return c;
        }
    }
}

/// A random grading with nonnegative weights and positive column totals.
fn random_grading(rng: &mut ChaCha8Rng, n: usize) -> GradingMap {
    match rng.gen_range(0..3) {
        0 => GradingMap::standard(n),
        1 => GradingMap::fine(n),
        _ => {
            let rank = rng.gen_range(1..=2);
            let mut rows: Vec<Vec<i64>> = (0..rank)
                .map(|_| (0..n).map(|_| rng.gen_range(0..=2)).collect())
                .collect();
            for j in 0..n {
                if rows.iter().all(|r| r[j] == 0) {
                    rows[0][j] = 1;
                }
            }
            GradingMap::new(n, rows).expect("well-formed weights")
        }
    }
}

/// Up to four sparse generators of degree at most 4; homogeneous for
/// `grading` when `homogeneous` is set.
fn random_ideal(
    rng: &mut ChaCha8Rng,
    ring: &Arc<RingSpec>,
    grading: &GradingMap,
    homogeneous: bool,
) -> Result<Ideal> {
    let monos = monomials_up_to(ring.nvars(), 4);
    let gens = (0..rng.gen_range(1..=4))
        .map(|_| {
            let lead = monos.choose(rng).unwrap().clone();
            let pool: Vec<&Monomial> = if homogeneous {
                let d = grading.degree_of(&lead);
                monos.iter().filter(|m| grading.degree_of(m) == d).collect()
            } else {
                monos.iter().collect()
            };
            let mut terms = vec![(random_nonzero(rng, ring.field()), lead)];
            for _ in 0..rng.gen_range(0..=2) {
                terms.push((
                    random_nonzero(rng, ring.field()),
                    (*pool.choose(rng).unwrap()).clone(),
                ));
            }
            Polynomial::from_terms(ring, CANONICAL_ORDER, terms)
        })
        .collect();
    Ideal::new(ring, gens)
}

fn star_degree_bound(s: &Ideal, grading: &GradingMap) -> i64 {
    let totals = grading.column_totals();
    s.canonical_basis()
        .elements()
        .iter()
        .flat_map(|g| g.terms())
        .map(|t| {
            totals
                .iter()
                .zip(t.mono.exponents())
                .map(|(w, &e)| w * e as i64)
                .sum::<i64>()
        })
        .max()
        .unwrap_or(0)
}

/// Algebraic laws of `*` over GF(32003), and agreement with the oracle.
/// The first 50 cases also test commutation with intersection.
pub fn star_laws_suite(seed: u64, cases: usize) -> SuiteReport {
    let field = Field::Prime(DEFAULT_PRIME);
    run_suite("star-laws", seed, cases, |rng, log| {
        let n = rng.gen_range(1..=3);
        let ring = ring_of(field, n);
        let w = random_grading(rng, n);
        let homogeneous = rng.gen_bool(0.3);
        let i = random_ideal(rng, &ring, &w, homogeneous)?;
        let s = star(&i, &w)?.star_ideal;
        log.check(i.contains_ideal(&s), || {
            format!("I* not inside I for ({i})")
        });
        let ss = star(&s, &w)?.star_ideal;
        log.check(ideal_equal(&s, &ss)?, || {
            format!("star not idempotent for ({i})")
        });
        let graded = is_graded(&i, &w)?;
        let fixed = ideal_equal(&s, &i)?;
        log.check(graded == fixed, || {
            format!("is_graded = {graded} but I* = I is {fixed} for ({i})")
        });
        let bound = star_degree_bound(&s, &w);
        let oracle = star_truncated_oracle(&i, &w, bound)?;
        log.check(ideal_equal(&oracle, &s)?, || {
            format!("oracle at {bound} differs for ({i})")
        });
        let next = star_truncated_oracle(&i, &w, bound + 1)?;
        log.check(ideal_equal(&oracle, &next)?, || {
            format!("oracle not stable past {bound} for ({i})")
        });
        log.audit(&i);
        log.audit(&s);
        if log.case < 50 {
            let homogeneous = rng.gen_bool(0.3);
            let j = random_ideal(rng, &ring, &w, homogeneous)?;
            let meet = intersect(&i, &j)?;
            let lhs = star(&meet, &w)?.star_ideal;
            let rhs = intersect(&s, &star(&j, &w)?.star_ideal)?;
            log.check(ideal_equal(&lhs, &rhs)?, || {
                format!("star does not commute with ({i}) ∩ ({j})")
            });
            log.audit(&j);
            log.audit(&meet);
        }
        Ok(())
    })
}

fn random_homogeneous(
    rng: &mut ChaCha8Rng,
    ring: &Arc<RingSpec>,
    d: u32,
    terms: usize,
) -> Polynomial {
    let pool: Vec<Monomial> = monomials_up_to(ring.nvars(), d)
        .into_iter()
        .filter(|m| m.total_degree() == d)
        .collect();
    let terms = (0..terms)
        .map(|_| {
            (
                random_nonzero(rng, ring.field()),
                pool.choose(rng).unwrap().clone(),
            )
        })
        .collect();
    Polynomial::from_terms(ring, CANONICAL_ORDER, terms)
}

/// Ideal membership by Gröbner reduction against the Macaulay-matrix oracle.
///
/// Homogeneous pairs are decided exactly by the oracle at `deg f`; planted
/// inhomogeneous members are found at the degree of their construction.
pub fn groebner_membership_suite(seed: u64, cases: usize) -> SuiteReport {
    run_suite("membership", seed, cases, |rng, log| {
        let field = if rng.gen_bool(0.5) {
            Field::Rational
        } else {
            Field::Prime(DEFAULT_PRIME)
        };
        let n = rng.gen_range(1..=3);
        let ring = ring_of(field, n);
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let d = rng.gen_range(1..=3);
                let terms = rng.gen_range(1..=3);
                random_homogeneous(rng, &ring, d, terms)
            })
            .collect();
        let ideal = Ideal::new(&ring, gens.clone())?;
        let top = gens
            .iter()
            .filter_map(Polynomial::total_degree)
            .max()
            .unwrap_or(0);
        let d = rng.gen_range(top..=top + 2).max(1);
        let f = if rng.gen_bool(0.5) {
            let mut acc = Polynomial::zero(&ring, CANONICAL_ORDER);
            for g in gens.iter().filter(|g| !g.is_zero()) {
                let dg = g.total_degree().unwrap();
                if dg <= d {
                    acc = &acc + &(&random_homogeneous(rng, &ring, d - dg, 2) * g);
                }
            }
            acc
        } else {
            let terms = rng.gen_range(1..=4);
            random_homogeneous(rng, &ring, d, terms)
        };
        let by_basis = ideal.contains(&f);
        let by_oracle = macaulay_membership(&f, &ideal, d);
        log.check(by_basis == by_oracle, || {
            format!("{f} in ({ideal}): basis says {by_basis}, oracle says {by_oracle}")
        });

        // planted member of an inhomogeneous ideal
        let mixed: Vec<Polynomial> = gens
            .iter()
            .map(|g| g + &random_homogeneous(rng, &ring, 0, 1))
            .collect();
        let mixed_ideal = Ideal::new(&ring, mixed.clone())?;
        let mut planted = Polynomial::zero(&ring, CANONICAL_ORDER);
        let mut bound = 0;
        for g in &mixed {
            let h = &random_homogeneous(rng, &ring, 1, 2) + &random_homogeneous(rng, &ring, 0, 1);
            let p = &h * g;
            bound = bound.max(p.total_degree().unwrap_or(0));
            planted = &planted + &p;
        }
        log.check(mixed_ideal.contains(&planted), || {
            format!("planted member {planted} rejected")
        });
        log.check(macaulay_membership(&planted, &mixed_ideal, bound), || {
            format!("oracle misses planted member {planted}")
        });
        log.audit(&ideal);
        log.audit(&mixed_ideal);
        Ok(())
    })
}

fn random_support(rng: &mut ChaCha8Rng) -> SupportLattice {
    if rng.gen_bool(0.5) {
        SupportLattice::full(2)
    } else {
        let (a, b, c) = (
            rng.gen_range(1..=3),
            rng.gen_range(-2..=2),
            rng.gen_range(1..=3),
        );
        SupportLattice::generated_by(2, &[vec![a, 0], vec![b, c]])
    }
}

fn random_lattice_point(rng: &mut ChaCha8Rng, lattice: &SupportLattice) -> Vec<i64> {
    let mut v = vec![0i64; 2];
    for b in lattice.basis() {
        let k = rng.gen_range(-2..=2);
        for (x, y) in v.iter_mut().zip(b) {
            *x += k * y;
        }
    }
    v
}

fn random_homogeneous_matrix(rng: &mut ChaCha8Rng) -> HomogeneousMatrix {
    let p = *[5u32, 7, DEFAULT_PRIME].choose(rng).unwrap();
    let field = Field::Prime(p);
    let support = random_support(rng);
    let rows = rng.gen_range(1..=5);
    let cols = rng.gen_range(1..=5);
    let col_degrees: Vec<Vec<i64>> = (0..cols)
        .map(|_| random_lattice_point(rng, &support))
        .collect();
    let mut row_degrees: Vec<Vec<i64>> = (0..rows)
        .map(|_| random_lattice_point(rng, &support))
        .collect();
    let elem = |rng: &mut ChaCha8Rng, r: &[i64], c: &[i64]| {
        let e: Vec<i64> = r.iter().zip(c).map(|(a, b)| a - b).collect();
        HomogeneousElement::new(random_nonzero(rng, field), e)
    };
    let mut entries: Vec<Vec<Option<HomogeneousElement>>> = row_degrees
        .iter()
        .map(|r| {
            col_degrees
                .iter()
                .map(|c| {
                    if rng.gen_bool(0.6) {
                        elem(rng, r, c)
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    // append rows that are homogeneous combinations of earlier rows
    for _ in 0..rng.gen_range(0..=2) {
        let d = random_lattice_point(rng, &support);
        let mut row: Vec<Option<HomogeneousElement>> = vec![None; cols];
        for _ in 0..rng.gen_range(1..=2) {
            let t = rng.gen_range(0..row_degrees.len());
            let Some(h) = elem(rng, &d, &row_degrees[t]) else {
                continue;
            };
            for (k, cell) in row.iter_mut().enumerate() {
                if let Some(a) = &entries[t][k] {
                    let add = h.mul(a);
                    let sum = match cell.take() {
                        None => Some(add),
                        Some(old) => HomogeneousElement::new(&old.coeff + &add.coeff, add.exponent),
                    };
                    *cell = sum;
                }
            }
        }
        row_degrees.push(d);
        entries.push(row);
    }
    HomogeneousMatrix {
        presentation: GradedFieldPresentation::new(field, support),
        row_degrees,
        col_degrees,
        entries,
    }
}

/// Rank of the scalar coefficient matrix. Writing `A = D_row · C · D_col^{-1}`
/// with diagonal matrices of units `e(row degree)` and `e(col degree)`, the
/// rank of `A` equals the rank of `C`.
fn scalar_rank(a: &HomogeneousMatrix) -> usize {
    let field = a.presentation.base_field;
    let rows = a
        .entries
        .iter()
        .map(|r| {
            r.iter()
                .map(|e| e.as_ref().map_or(field.zero(), |e| e.coeff.clone()))
                .collect()
        })
        .collect();
    DenseMatrix::new(field, a.cols(), rows).rank()
}

fn shuffled(rng: &mut ChaCha8Rng, a: &HomogeneousMatrix) -> HomogeneousMatrix {
    let mut rp: Vec<usize> = (0..a.rows()).collect();
    let mut cp: Vec<usize> = (0..a.cols()).collect();
    rp.shuffle(rng);
    cp.shuffle(rng);
    HomogeneousMatrix {
        presentation: a.presentation.clone(),
        row_degrees: rp.iter().map(|&i| a.row_degrees[i].clone()).collect(),
        col_degrees: cp.iter().map(|&j| a.col_degrees[j].clone()).collect(),
        entries: rp
            .iter()
            .map(|&i| cp.iter().map(|&j| a.entries[i][j].clone()).collect())
            .collect(),
    }
}

fn kernel_vectors_annihilate(
    a: &HomogeneousMatrix,
    rep: &crate::gradedfield::FreeModuleReport,
) -> bool {
    let field = a.presentation.base_field;
    rep.kernel_basis.iter().all(|k| {
        let degrees_ok = k.coefficients.iter().enumerate().all(|(t, c)| {
            c.as_ref().is_none_or(|c| {
                c.exponent
                    .iter()
                    .zip(&k.degree)
                    .zip(&a.row_degrees[t])
                    .all(|((e, d), r)| *e == d - r)
            })
        });
        let vanishes = (0..a.cols()).all(|col| {
            let mut sum = field.zero();
            for (t, c) in k.coefficients.iter().enumerate() {
                if let (Some(c), Some(x)) = (c, &a.entries[t][col]) {
                    sum = &sum + &(&c.coeff * &x.coeff);
                }
            }
            sum.is_zero()
        });
        degrees_ok && vanishes && k.coefficients.iter().any(Option::is_some)
    })
}

/// Homogeneous elimination over `GF(p)[G']`, `G' ⊆ Z^2`.
pub fn graded_field_suite(seed: u64, cases: usize) -> SuiteReport {
    run_suite("graded-field", seed, cases, |rng, log| {
        let a = random_homogeneous_matrix(rng);
        let rep = graded_free_basis(&a)?;
        let shape = format!(
            "{}x{} over {}",
            a.rows(),
            a.cols(),
            a.presentation.base_field
        );
        log.check(rep.pivots_are_units(), || {
            format!("non-unit pivot in {shape}")
        });
        log.check(rep.rank + rep.kernel_rank() == a.rows(), || {
            format!("row rank-nullity fails in {shape}")
        });
        log.check(rep.rank + rep.cokernel_rank() == a.cols(), || {
            format!("column rank-nullity fails in {shape}")
        });
        let oracle = scalar_rank(&a);
        log.check(rep.rank == oracle, || {
            format!("rank {} but scalar rank {oracle} in {shape}", rep.rank)
        });
        let b = shuffled(rng, &a);
        let again = graded_free_basis(&b)?;
        log.check(again.rank == rep.rank, || {
            format!("shuffling changed the rank in {shape}")
        });
        log.check(kernel_vectors_annihilate(&a, &rep), || {
            format!("bad kernel vector in {shape}")
        });
        Ok(())
    })
}

/// Every suite at `cases` cases each, in a fixed order.
pub fn run_all_suites(seed: u64, cases: usize) -> Vec<SuiteReport> {
    vec![
        point_suite(seed, cases),
        main_theorem_suite(seed, cases),
        star_laws_suite(seed, cases),
        graded_field_suite(seed, cases),
        groebner_membership_suite(seed, cases),
    ]
}
