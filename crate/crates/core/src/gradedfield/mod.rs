//! Graded fields `k_0[G']` with `G' ⊆ Z^m`, and graded modules over them.
//!
//! A nonzero homogeneous element of `k_0[G']` is `c·e(v)` with `c ∈ k_0^*`
//! and `v ∈ G'`, and is always a unit. Gaussian elimination that only ever
//! pivots on homogeneous entries therefore never divides by a non-unit, and
//! it exhibits free homogeneous bases for kernels and cokernels of
//! degree-consistent matrices.

mod lattice;
mod matrix;

pub use lattice::SupportLattice;
pub use matrix::{
    format_matrix, graded_free_basis, parse_matrix, FreeModuleReport, HomogeneousElement,
    HomogeneousMatrix, KernelVector, PivotRecord,
};

use crate::scalar::Field;

/// `k_0[G']` for a subgroup `G'` of Z^m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFieldPresentation {
    pub base_field: Field,
    pub support: SupportLattice,
}

impl GradedFieldPresentation {
    pub fn new(base_field: Field, support: SupportLattice) -> Self {
        GradedFieldPresentation {
            base_field,
            support,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.support.ambient_rank()
    }
}

pub fn support_lattice(ambient_rank: usize, degrees: &[Vec<i64>]) -> SupportLattice {
    SupportLattice::generated_by(ambient_rank, degrees)
}

pub fn membership_in_support(g: &[i64], lattice: &SupportLattice) -> bool {
    lattice.contains(g)
}
