use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::points::{ideal_of_points, theorem51_check, PointConfiguration};
use crate::artinian::{index_of_reducibility_primary, is_m_primary, socle, socle_spans};
use crate::error::Result;
use crate::ideal::{ideal_equal, Ideal};
use crate::parse::{parse_generators, parse_polynomial, parse_ring};
use crate::ring::{GradingMap, MonomialOrder, RingSpec};
use crate::scalar::Field;
use crate::star::star;

/// One named comparison between a published value and a computed one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PaperReport {
    pub records: Vec<CheckRecord>,
}

impl PaperReport {
    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.pass)
    }

    fn push(&mut self, name: impl Into<String>, expected: impl ToString, got: impl ToString) {
        let (expected, got) = (expected.to_string(), got.to_string());
        let pass = expected == got;
        self.records.push(CheckRecord {
            name: name.into(),
            expected,
            got,
            pass,
        });
    }

    fn push_ideal(&mut self, name: impl Into<String>, expected: &Ideal, got: &Ideal) -> Result<()> {
        let pass = ideal_equal(expected, got)?;
        self.records.push(CheckRecord {
            name: name.into(),
            expected: lex_line(expected),
            got: lex_line(got),
            pass,
        });
        Ok(())
    }
}

impl fmt::Display for PaperReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w_name = self
            .records
            .iter()
            .map(|r| r.name.len())
            .max()
            .unwrap_or(0)
            .max(5);
        let w_exp = self
            .records
            .iter()
            .map(|r| r.expected.len())
            .max()
            .unwrap_or(0)
            .max(8);
        writeln!(
            f,
            "{:<w_name$}  {:<w_exp$}  {:<6}  got",
            "check", "expected", "result"
        )?;
        for r in &self.records {
            let verdict = if r.pass { "pass" } else { "FAIL" };
            writeln!(
                f,
                "{:<w_name$}  {:<w_exp$}  {:<6}  {}",
                r.name, r.expected, verdict, r.got
            )?;
        }
        let passed = self.records.iter().filter(|r| r.pass).count();
        write!(f, "{passed}/{} checks passed", self.records.len())
    }
}

fn lex_line(i: &Ideal) -> String {
    let elements: Vec<String> = i
        .groebner_basis(MonomialOrder::Lex)
        .elements()
        .iter()
        .map(|g| g.to_string())
        .collect();
    if elements.is_empty() {
        "0".into()
    } else {
        elements.join(", ")
    }
}

fn ideal(ring: &Arc<RingSpec>, text: &str) -> Result<Ideal> {
    Ideal::new(ring, parse_generators(text, ring)?)
}

fn socle_and_ir(report: &mut PaperReport, prefix: &str, i: &Ideal, ir: usize) -> Result<()> {
    report.push(format!("{prefix} m-primary"), true, is_m_primary(i));
    report.push(format!("{prefix} socle rank"), ir, socle(i)?.rank());
    report.push(
        format!("{prefix} ir"),
        ir,
        index_of_reducibility_primary(i)?,
    );
    Ok(())
}

fn example_two(report: &mut PaperReport) -> Result<()> {
    let ring = parse_ring("QQ[x,y]")?;
    let w = GradingMap::standard(2);
    let x = ideal(&ring, "x")?;
    for r in 1..=3i64 {
        let roots: Vec<String> = (1..=r).map(|a| format!("(y - {a})")).collect();
        let i = ideal(&ring, &format!("x, {}", roots.join("*")))?;
        report.push_ideal(format!("collinear r={r} I*"), &x, &star(&i, &w)?.star_ideal)?;
        let points: Vec<(i64, i64)> = (1..=r).map(|a| (0, a)).collect();
        let config = PointConfiguration::from_integers(Field::Rational, &points)?;
        report.push_ideal(
            format!("collinear r={r} I as points"),
            &i,
            &ideal_of_points(&config)?,
        )?;
        let cmp = theorem51_check(&config)?;
        report.push(format!("collinear r={r} ir(I)"), r, cmp.ir_i);
        report.push(format!("collinear r={r} ir(I*)"), 1, cmp.ir_istar);
        report.push(format!("collinear r={r} bijective"), r == 1, cmp.bijective);
    }
    Ok(())
}

fn example_three(report: &mut PaperReport) -> Result<()> {
    let ring = parse_ring("QQ[x,y]")?;
    let w = GradingMap::standard(2);
    let i = ideal(&ring, "x^2, x*y, y^3, x - y^2")?;
    let expected = ideal(&ring, "x^2, x*y, y^3")?;
    let s = star(&i, &w)?.star_ideal;
    report.push_ideal("ir-rise I*", &expected, &s)?;
    socle_and_ir(report, "ir-rise I", &i, 1)?;
    socle_and_ir(report, "ir-rise I*", &s, 2)?;
    Ok(())
}

fn example_four(report: &mut PaperReport) -> Result<()> {
    let ring = parse_ring("QQ[x,y]")?;
    let i = ideal(&ring, "x^4, x^2*y^2, y^4, x^3*y - y^3*x")?;
    let expected = ideal(&ring, "x^4, x^2*y^2, y^4")?;
    let s = star(&i, &GradingMap::fine(2))?.star_ideal;
    report.push_ideal("ir-drop I* (fine grading)", &expected, &s)?;
    let standard = star(&i, &GradingMap::standard(2))?.star_ideal;
    report.push_ideal("ir-drop I* (standard grading)", &i, &standard)?;
    socle_and_ir(report, "ir-drop I", &i, 3)?;
    socle_and_ir(report, "ir-drop I*", &s, 2)?;

    let soc_star = socle(&s)?;
    for text in ["x^3*y", "x*y^3"] {
        let f = parse_polynomial(text, &ring)?;
        report.push(
            format!("ir-drop {text} in soc(I*)"),
            true,
            socle_spans(&s, &soc_star, &f)?,
        );
    }
    let soc = socle(&i)?;
    for text in ["x^3*y", "x^3 - x*y^2", "x^2*y - y^3"] {
        let f = parse_polynomial(text, &ring)?;
        report.push(
            format!("ir-drop {text} in soc(I)"),
            true,
            socle_spans(&i, &soc, &f)?,
        );
    }
    Ok(())
}

/// Recomputes every published value of the worked examples.
pub fn reproduce_paper_examples() -> Result<PaperReport> {
    let mut report = PaperReport::default();
    example_two(&mut report)?;
    example_three(&mut report)?;
    example_four(&mut report)?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_published_value_reproduces() {
        let report = reproduce_paper_examples().unwrap();
        let failures: Vec<_> = report.failures().collect();
        assert!(failures.is_empty(), "{failures:?}");
        assert!(report.records.len() >= 30);
        assert!(report.to_string().ends_with("checks passed"));
    }
}
