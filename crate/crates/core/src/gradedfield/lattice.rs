use std::fmt;

/// A subgroup of Z^m given by a Hermite-normal-form row basis: rows in
/// echelon form, positive pivots, entries above each pivot reduced into
/// `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SupportLattice {
    ambient_rank: usize,
    basis: Vec<Vec<i64>>,
}

fn pivot_col(row: &[i64]) -> Option<usize> {
    row.iter().position(|&x| x != 0)
}

impl SupportLattice {
    /// The subgroup generated by `generators`, each of length `ambient_rank`.
    pub fn generated_by(ambient_rank: usize, generators: &[Vec<i64>]) -> SupportLattice {
        let mut rows: Vec<Vec<i128>> = generators
            .iter()
            .map(|g| {
                debug_assert_eq!(g.len(), ambient_rank);
                g.iter().map(|&x| x as i128).collect()
            })
            .collect();
        let mut basis: Vec<Vec<i128>> = Vec::new();
        for c in 0..ambient_rank {
            // Euclid on column c across the remaining rows
            loop {
                rows.retain(|r| r.iter().any(|&x| x != 0));
                let mut nonzero: Vec<usize> =
                    (0..rows.len()).filter(|&i| rows[i][c] != 0).collect();
                if nonzero.len() <= 1 {
                    break;
                }
                nonzero.sort_by_key(|&i| rows[i][c].abs());
                let p = nonzero[0];
                let pivot = rows[p].clone();
                for &i in &nonzero[1..] {
                    let q = rows[i][c].div_euclid(pivot[c]);
                    for (x, y) in rows[i].iter_mut().zip(&pivot) {
                        *x -= q * y;
                    }
                }
            }
            if let Some(p) = (0..rows.len()).find(|&i| rows[i][c] != 0) {
                let mut row = rows.remove(p);
                if row[c] < 0 {
                    row.iter_mut().for_each(|x| *x = -*x);
                }
                basis.push(row);
            }
        }
        // reduce entries above pivots
        for k in 0..basis.len() {
            let pc = basis[k].iter().position(|&x| x != 0).unwrap();
            let pivot = basis[k].clone();
            for row in basis.iter_mut().take(k) {
                let q = row[pc].div_euclid(pivot[pc]);
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= q * y;
                }
            }
        }
        SupportLattice {
            ambient_rank,
            basis: basis
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|x| i64::try_from(x).expect("lattice entry overflow"))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn full(ambient_rank: usize) -> SupportLattice {
        let id: Vec<Vec<i64>> = (0..ambient_rank)
            .map(|i| (0..ambient_rank).map(|j| i64::from(i == j)).collect())
            .collect();
        SupportLattice::generated_by(ambient_rank, &id)
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// Integer coordinates of `g` in the basis, if `g` lies in the lattice.
    pub fn coordinates(&self, g: &[i64]) -> Option<Vec<i64>> {
        if g.len() != self.ambient_rank {
            return None;
        }
        let mut rest: Vec<i128> = g.iter().map(|&x| x as i128).collect();
        let mut coords = Vec::with_capacity(self.basis.len());
        for row in &self.basis {
            let pc = pivot_col(row).unwrap();
            if rest[..pc].iter().any(|&x| x != 0) {
                return None;
            }
            let p = row[pc] as i128;
            if rest[pc] % p != 0 {
                return None;
            }
            let q = rest[pc] / p;
            for (x, &y) in rest.iter_mut().zip(row) {
                *x -= q * y as i128;
            }
            coords.push(q as i64);
        }
        rest.iter().all(|&x| x == 0).then_some(coords)
    }

    pub fn contains(&self, g: &[i64]) -> bool {
        self.coordinates(g).is_some()
    }
}

impl fmt::Display for SupportLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "({})", rows.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn hermite_basis() {
        let l = SupportLattice::generated_by(2, &[vec![2, 0], vec![0, 2], vec![1, 1]]);
        assert_eq!(l.basis(), &[vec![1, 1], vec![0, 2]]);
        assert_eq!(l.rank(), 2);
        assert_eq!(SupportLattice::generated_by(2, &[]).rank(), 0);
        assert_eq!(
            SupportLattice::generated_by(2, &[vec![1, 0], vec![0, 1]]),
            SupportLattice::full(2)
        );
        assert_eq!(
            SupportLattice::generated_by(3, &[vec![0, -4, 6], vec![0, 6, -9]]).basis(),
            &[vec![0, 2, -3]]
        );
    }

    #[test]
    fn membership() {
        let l = SupportLattice::generated_by(2, &[vec![1, 1], vec![0, 2]]);
        assert!(l.contains(&[1, 1]));
        assert!(!l.contains(&[1, 0]));
        assert!(l.contains(&[0, 0]));
        assert!(SupportLattice::generated_by(2, &[]).contains(&[0, 0]));
        assert!(!SupportLattice::generated_by(2, &[]).contains(&[0, 1]));
    }

    proptest! {
        #[test]
        fn generators_and_combinations_are_members(
            gens in prop::collection::vec(prop::collection::vec(-6i64..7, 3), 0..4),
            coeffs in prop::collection::vec(-3i64..4, 4),
        ) {
            let l = SupportLattice::generated_by(3, &gens);
            let mut combo = vec![0i64; 3];
            for (g, c) in gens.iter().zip(&coeffs) {
                prop_assert!(l.contains(g));
                for (x, y) in combo.iter_mut().zip(g) { *x += c * y; }
            }
            prop_assert!(l.contains(&combo));
            // the basis generates the same group as the input
            prop_assert!(l.basis().iter().all(|b| SupportLattice::generated_by(3, &gens).contains(b)));
            prop_assert_eq!(SupportLattice::generated_by(3, l.basis()), l.clone());
        }
    }
}
