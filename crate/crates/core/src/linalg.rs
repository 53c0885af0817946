//! Dense exact linear algebra over a coefficient field.

use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    field: Field,
    ncols: usize,
    rows: Vec<Vec<Scalar>>,
}

impl DenseMatrix {
    pub fn new(field: Field, ncols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == ncols));
        DenseMatrix { field, ncols, rows }
    }

    pub fn zeros(field: Field, nrows: usize, ncols: usize) -> Self {
        DenseMatrix {
            field,
            ncols,
            rows: vec![vec![field.zero(); ncols]; nrows],
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.rows[i][j] = v;
    }

    pub fn push_row(&mut self, row: Vec<Scalar>) {
        debug_assert_eq!(row.len(), self.ncols);
        self.rows.push(row);
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            if r == self.rows.len() {
                break;
            }
            let Some(p) = (r..self.rows.len()).find(|&i| !self.rows[i][c].is_zero()) else {
                continue;
            };
            self.rows.swap(r, p);
            let inv = self.rows[r][c].inv();
            for v in self.rows[r].iter_mut() {
                *v = &*v * &inv;
            }
            let pivot_row = self.rows[r].clone();
            for (i, row) in self.rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *v = &*v - &(&factor * p);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{v : A v = 0}`, one vector per free column, in RREF normal form.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.ncols];
                v[f] = self.field.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -&m.rows[row][f];
                }
                v
            })
            .collect()
    }

    /// Whether `v` is a linear combination of the rows.
    pub fn row_space_contains(&self, v: &[Scalar]) -> bool {
        let mut with = self.clone();
        with.push_row(v.to_vec());
        with.rank() == self.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> DenseMatrix {
        let f = Field::Rational;
        DenseMatrix::new(
            f,
            rows[0].len(),
            rows.iter()
                .map(|r| r.iter().map(|&x| f.from_i64(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_kernel() {
        let a = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ker = a.nullspace();
        assert_eq!(ker.len(), 1);
        for row in a.rows() {
            let dot = row
                .iter()
                .zip(&ker[0])
                .fold(Field::Rational.zero(), |acc, (x, y)| &acc + &(x * y));
            assert!(dot.is_zero());
        }
        assert!(a.row_space_contains(&mat(&[&[3, 4, 7]]).rows()[0]));
        assert!(!a.row_space_contains(&mat(&[&[0, 0, 1]]).rows()[0]));
    }
}
