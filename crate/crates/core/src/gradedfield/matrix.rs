use std::fmt;

use super::{GradedFieldPresentation, SupportLattice};
use crate::error::{Error, Result};
use crate::parse::parse_field;
use crate::scalar::Scalar;

/// `coeff · e(exponent)`, a nonzero homogeneous element of degree `exponent`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogeneousElement {
    pub coeff: Scalar,
    pub exponent: Vec<i64>,
}

impl HomogeneousElement {
    pub fn new(coeff: Scalar, exponent: Vec<i64>) -> Option<Self> {
        (!coeff.is_zero()).then_some(HomogeneousElement { coeff, exponent })
    }

    pub fn mul(&self, other: &HomogeneousElement) -> HomogeneousElement {
        HomogeneousElement {
            coeff: &self.coeff * &other.coeff,
            exponent: self
                .exponent
                .iter()
                .zip(&other.exponent)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn inverse(&self) -> HomogeneousElement {
        HomogeneousElement {
            coeff: self.coeff.inv(),
            exponent: self.exponent.iter().map(|x| -x).collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.coeff.is_one() && self.exponent.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for HomogeneousElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.exponent.iter().map(i64::to_string).collect();
        write!(f, "{}*e({})", self.coeff, v.join(","))
    }
}

/// `a - b` for entries of equal degree.
fn subtract(
    a: &Option<HomogeneousElement>,
    b: &Option<HomogeneousElement>,
) -> Option<HomogeneousElement> {
    match (a, b) {
        (_, None) => a.clone(),
        (None, Some(b)) => Some(HomogeneousElement {
            coeff: -&b.coeff,
            exponent: b.exponent.clone(),
        }),
        (Some(a), Some(b)) => {
            assert_eq!(a.exponent, b.exponent, "row operation mixed degrees");
            HomogeneousElement::new(&a.coeff - &b.coeff, a.exponent.clone())
        }
    }
}

/// A matrix over `k_0[G']` with degree labels: every nonzero entry `(i, j)`
/// has degree `row_degrees[i] - col_degrees[j]`.
///
/// Row `i` is read as the image of a generator of degree `row_degrees[i]`
/// in the free module with basis of degrees `col_degrees`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousMatrix {
    pub presentation: GradedFieldPresentation,
    pub row_degrees: Vec<Vec<i64>>,
    pub col_degrees: Vec<Vec<i64>>,
    pub entries: Vec<Vec<Option<HomogeneousElement>>>,
}

impl HomogeneousMatrix {
    pub fn rows(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn cols(&self) -> usize {
        self.col_degrees.len()
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.presentation.ambient_rank();
        let field = self.presentation.base_field;
        let bad = |msg: String| Err(Error::Precondition(msg));
        if self.entries.len() != self.rows() {
            return bad(format!(
                "{} entry rows for {} row degrees",
                self.entries.len(),
                self.rows()
            ));
        }
        if self
            .row_degrees
            .iter()
            .chain(&self.col_degrees)
            .any(|d| d.len() != m)
        {
            return bad(format!("degree labels must lie in Z^{m}"));
        }
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != self.cols() {
                return bad(format!(
                    "row {i} has {} entries, expected {}",
                    row.len(),
                    self.cols()
                ));
            }
            for (j, e) in row.iter().enumerate() {
                let Some(e) = e else { continue };
                if e.coeff.field() != field {
                    return bad(format!("entry ({i},{j}) is not in {field}"));
                }
                if !self.presentation.support.contains(&e.exponent) {
                    return bad(format!(
                        "entry ({i},{j}) has degree outside the support lattice"
                    ));
                }
                let expected: Vec<i64> = self.row_degrees[i]
                    .iter()
                    .zip(&self.col_degrees[j])
                    .map(|(r, c)| r - c)
                    .collect();
                if e.exponent != expected {
                    return bad(format!(
                        "entry ({i},{j}) has degree {:?}, labels require {expected:?}",
                        e.exponent
                    ));
                }
            }
        }
        Ok(())
    }
}

/// A pivot used during elimination, with the check that it is a unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotRecord {
    pub row: usize,
    pub col: usize,
    pub pivot: HomogeneousElement,
    pub inverse: HomogeneousElement,
}

/// A homogeneous kernel vector: `sum_t coefficients[t] · e_t` has degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelVector {
    pub degree: Vec<i64>,
    pub coefficients: Vec<Option<HomogeneousElement>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModuleReport {
    pub rank: usize,
    pub rows: usize,
    pub cols: usize,
    pub pivots: Vec<PivotRecord>,
    /// Degrees of a free basis of the cokernel (the columns not hit by a pivot).
    pub cokernel_degrees: Vec<Vec<i64>>,
    /// Homogeneous free basis of the kernel of the row map.
    pub kernel_basis: Vec<KernelVector>,
}

impl FreeModuleReport {
    pub fn cokernel_rank(&self) -> usize {
        self.cokernel_degrees.len()
    }

    pub fn kernel_rank(&self) -> usize {
        self.kernel_basis.len()
    }

    /// Every recorded pivot times its inverse is `1·e(0)`.
    pub fn pivots_are_units(&self) -> bool {
        self.pivots.iter().all(|p| p.pivot.mul(&p.inverse).is_one())
    }
}

/// Row-reduces `a` pivoting only on nonzero homogeneous entries.
pub fn graded_free_basis(a: &HomogeneousMatrix) -> Result<FreeModuleReport> {
    a.validate()?;
    let (rows, cols) = (a.rows(), a.cols());
    let field = a.presentation.base_field;
    let m = a.presentation.ambient_rank();
    let mut work = a.entries.clone();
    let mut labels = a.row_degrees.clone();
    // track row operations: track[i][t] has degree labels[i] - row_degrees[t]
    let mut track: Vec<Vec<Option<HomogeneousElement>>> = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|t| {
                    (i == t).then(|| HomogeneousElement::new(field.one(), vec![0; m]).unwrap())
                })
                .collect()
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| work[i][c].is_some()) else {
            continue;
        };
        work.swap(r, p);
        track.swap(r, p);
        labels.swap(r, p);
        let pivot = work[r][c].clone().unwrap();
        let inverse = pivot.inverse();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let Some(target) = work[i][c].clone() else {
                continue;
            };
            let factor = Some(target.mul(&inverse));
            let scaled = |x: &Option<HomogeneousElement>| {
                x.as_ref().map(|x| factor.as_ref().unwrap().mul(x))
            };
            let pivot_row = work[r].clone();
            for (x, y) in work[i].iter_mut().zip(&pivot_row) {
                *x = subtract(x, &scaled(y));
            }
            let pivot_track = track[r].clone();
            for (x, y) in track[i].iter_mut().zip(&pivot_track) {
                *x = subtract(x, &scaled(y));
            }
        }
        pivots.push(PivotRecord {
            row: r,
            col: c,
            pivot,
            inverse,
        });
        r += 1;
        if r == rows {
            break;
        }
    }

    let pivot_cols: Vec<usize> = pivots.iter().map(|p| p.col).collect();
    let cokernel_degrees = (0..cols)
        .filter(|c| !pivot_cols.contains(c))
        .map(|c| a.col_degrees[c].clone())
        .collect();
    let kernel_basis = (r..rows)
        .map(|i| KernelVector {
            degree: labels[i].clone(),
            coefficients: track[i].clone(),
        })
        .collect();
    Ok(FreeModuleReport {
        rank: r,
        rows,
        cols,
        pivots,
        cokernel_degrees,
        kernel_basis,
    })
}

fn format_vec(v: &[i64]) -> String {
    format!(
        "({})",
        v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
    )
}

/// Text form, one line per record:
///
/// ```text
/// gfield GF(7) rank 2 support (1,0; 0,1)
/// rowdeg (0,0); (1,0)
/// coldeg (0,0); (0,1)
/// row 1*e(0,0) 0
/// row 0 3*e(1,-1)
/// ```
///
/// `|` may replace newlines so that a matrix fits on one line.
pub fn format_matrix(a: &HomogeneousMatrix) -> String {
    let mut lines = vec![format!(
        "gfield {} rank {} support {}",
        a.presentation.base_field,
        a.presentation.ambient_rank(),
        a.presentation.support
    )];
    let degs = |ds: &[Vec<i64>]| {
        ds.iter()
            .map(|d| format_vec(d))
            .collect::<Vec<_>>()
            .join("; ")
    };
    lines.push(
        format!("rowdeg {}", degs(&a.row_degrees))
            .trim_end()
            .to_string(),
    );
    lines.push(
        format!("coldeg {}", degs(&a.col_degrees))
            .trim_end()
            .to_string(),
    );
    for row in &a.entries {
        let cells: Vec<String> = row
            .iter()
            .map(|e| e.as_ref().map_or("0".to_string(), |e| e.to_string()))
            .collect();
        lines.push(format!("row {}", cells.join(" ")).trim_end().to_string());
    }
    lines.join("\n")
}

fn parse_int_vec(text: &str, m: usize) -> Result<Vec<i64>> {
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::parse(1, format!("expected a parenthesized vector, got `{text}`")))?;
    let v: Vec<i64> = if inner.trim().is_empty() {
        Vec::new()
    } else {
        inner
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::parse(1, format!("malformed integer vector `{text}`")))?
    };
    if v.len() != m {
        return Err(Error::parse(
            1,
            format!("vector `{text}` should have {m} entries"),
        ));
    }
    Ok(v)
}

fn parse_vec_list(text: &str, m: usize) -> Result<Vec<Vec<i64>>> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_int_vec(s, m))
        .collect()
}

/// Splits on whitespace and commas outside parentheses.
fn split_cells(text: &str) -> Vec<String> {
    let mut cells = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch.is_whitespace() || ch == ',') {
            if !cur.is_empty() {
                cells.push(std::mem::take(&mut cur));
            }
        } else {
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        cells.push(cur);
    }
    cells
}

pub fn parse_matrix(text: &str) -> Result<HomogeneousMatrix> {
    let lines: Vec<&str> = text
        .split(['\n', '|'])
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty())
        .collect();
    let header = lines
        .first()
        .ok_or_else(|| Error::parse(1, "empty matrix"))?;
    let rest = header
        .strip_prefix("gfield")
        .ok_or_else(|| Error::parse(1, "matrix must start with `gfield`"))?;
    let (field_text, rest) = rest
        .split_once("rank")
        .ok_or_else(|| Error::parse(1, "expected `rank` in gfield header"))?;
    let (rank_text, support_text) = rest
        .split_once("support")
        .ok_or_else(|| Error::parse(1, "expected `support` in gfield header"))?;
    let field = parse_field(field_text)?;
    let m: usize = rank_text
        .trim()
        .parse()
        .map_err(|_| Error::parse(1, format!("malformed rank `{}`", rank_text.trim())))?;
    let support_inner = support_text
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::parse(1, "support must be parenthesized"))?;
    let support_gens: Vec<Vec<i64>> = support_inner
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_int_vec(&format!("({s})"), m))
        .collect::<Result<_>>()?;
    let presentation =
        GradedFieldPresentation::new(field, SupportLattice::generated_by(m, &support_gens));

    let mut row_degrees = None;
    let mut col_degrees = None;
    let mut entries = Vec::new();
    for line in &lines[1..] {
        let (key, body) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match key {
            "rowdeg" => row_degrees = Some(parse_vec_list(body, m)?),
            "coldeg" => col_degrees = Some(parse_vec_list(body, m)?),
            "row" => {
                let mut row = Vec::new();
                for cell in split_cells(body) {
                    if cell == "0" {
                        row.push(None);
                        continue;
                    }
                    let (c, e) = cell
                        .split_once("*e")
                        .ok_or_else(|| Error::parse(1, format!("malformed entry `{cell}`")))?;
                    let coeff = field.parse_scalar(c)?;
                    row.push(HomogeneousElement::new(coeff, parse_int_vec(e, m)?));
                }
                entries.push(row);
            }
            other => return Err(Error::parse(1, format!("unknown matrix record `{other}`"))),
        }
    }
    let matrix = HomogeneousMatrix {
        presentation,
        row_degrees: row_degrees.unwrap_or_default(),
        col_degrees: col_degrees.unwrap_or_default(),
        entries,
    };
    Ok(matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn gf7_z2() -> GradedFieldPresentation {
        GradedFieldPresentation::new(Field::Prime(7), SupportLattice::full(2))
    }

    fn h(c: i64, v: [i64; 2]) -> Option<HomogeneousElement> {
        HomogeneousElement::new(Field::Prime(7).from_i64(c), v.to_vec())
    }

    #[test]
    fn zero_matrix_is_free_on_its_rows() {
        let a = HomogeneousMatrix {
            presentation: gf7_z2(),
            row_degrees: vec![vec![0, 0], vec![1, 0], vec![0, 3]],
            col_degrees: vec![vec![0, 0]],
            entries: vec![vec![None]; 3],
        };
        let rep = graded_free_basis(&a).unwrap();
        assert_eq!(rep.rank, 0);
        assert_eq!(rep.kernel_rank(), 3);
        let degs: Vec<_> = rep.kernel_basis.iter().map(|k| k.degree.clone()).collect();
        assert_eq!(degs, a.row_degrees);
    }

    #[test]
    fn single_unit_entry() {
        let a = HomogeneousMatrix {
            presentation: gf7_z2(),
            row_degrees: vec![vec![2, 1]],
            col_degrees: vec![vec![0, 0]],
            entries: vec![vec![h(3, [2, 1])]],
        };
        let rep = graded_free_basis(&a).unwrap();
        assert_eq!(
            (rep.rank, rep.kernel_rank(), rep.cokernel_rank()),
            (1, 0, 0)
        );
        assert!(rep.pivots_are_units());
    }

    #[test]
    fn two_independent_relations_on_three_generators() {
        let a = HomogeneousMatrix {
            presentation: gf7_z2(),
            row_degrees: vec![vec![1, 0], vec![0, 1]],
            col_degrees: vec![vec![0, 0], vec![1, 0], vec![0, 1]],
            entries: vec![
                vec![h(1, [1, 0]), h(2, [0, 0]), h(5, [1, -1])],
                vec![h(4, [0, 1]), h(1, [-1, 1]), None],
            ],
        };
        let rep = graded_free_basis(&a).unwrap();
        assert_eq!(rep.rank, 2);
        assert_eq!(rep.cokernel_rank(), 1);
        assert_eq!(rep.kernel_rank(), 0);
    }

    #[test]
    fn dependent_row_gives_homogeneous_kernel_vector() {
        // row 2 = e(1,0) * row 0
        let a = HomogeneousMatrix {
            presentation: gf7_z2(),
            row_degrees: vec![vec![0, 0], vec![0, 5], vec![1, 0]],
            col_degrees: vec![vec![0, 0], vec![0, 1]],
            entries: vec![
                vec![h(2, [0, 0]), h(3, [0, -1])],
                vec![None, h(1, [0, 4])],
                vec![h(2, [1, 0]), h(3, [1, -1])],
            ],
        };
        let rep = graded_free_basis(&a).unwrap();
        assert_eq!(rep.rank, 2);
        assert_eq!(rep.kernel_rank(), 1);
        let k = &rep.kernel_basis[0];
        assert_eq!(k.degree, vec![1, 0]);
        // every coefficient has degree k.degree - row degree
        for (t, c) in k.coefficients.iter().enumerate() {
            if let Some(c) = c {
                let want: Vec<i64> = k
                    .degree
                    .iter()
                    .zip(&a.row_degrees[t])
                    .map(|(x, y)| x - y)
                    .collect();
                assert_eq!(c.exponent, want);
            }
        }
    }

    #[test]
    fn inconsistent_degrees_rejected() {
        let a = HomogeneousMatrix {
            presentation: gf7_z2(),
            row_degrees: vec![vec![1, 0]],
            col_degrees: vec![vec![0, 0]],
            entries: vec![vec![h(1, [0, 1])]],
        };
        assert!(matches!(graded_free_basis(&a), Err(Error::Precondition(_))));
        let sub = HomogeneousMatrix {
            presentation: GradedFieldPresentation::new(
                Field::Prime(7),
                SupportLattice::generated_by(2, &[vec![1, 1], vec![0, 2]]),
            ),
            row_degrees: vec![vec![1, 0]],
            col_degrees: vec![vec![0, 0]],
            entries: vec![vec![h(1, [1, 0])]],
        };
        assert!(matches!(
            graded_free_basis(&sub),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn text_round_trip() {
        let text = "gfield GF(7) rank 2 support (1,0; 0,1)\nrowdeg (0,0); (1,0)\ncoldeg (0,0); (0,1)\nrow 1*e(0,0) 0\nrow 0 3*e(1,-1)";
        let a = parse_matrix(text).unwrap();
        assert_eq!(a.rows(), 2);
        assert_eq!(format_matrix(&a), text);
        let one_line = text.replace('\n', " | ");
        assert_eq!(parse_matrix(&one_line).unwrap(), a);
        assert!(parse_matrix("gfield GF(7) rank 2 support (1,0)\nrow 2").is_err());
    }
}
