//! Exact integer and rational linear algebra for lattices and their forms.

mod forms;
mod integral;
mod matrix;
mod normal_form;

pub use forms::{integer_pfaffian, wedge_top_coefficient, ExteriorForm, TwoForm};
pub use integral::{
    generated_lattice_discriminant, integral_preimage, lattice_basis, lattice_coordinates, lattices_equal,
    rational_coordinates, sublattice_index, GeneratedLattice, LatticeIndex,
};
pub use matrix::{IntMatrix, Matrix, RatMatrix};
pub use normal_form::{hermite_normal_form, smith_normal_form, Hnf, Snf};

/// Pfaffian of an alternating form.
pub fn pfaffian(form: &TwoForm) -> crate::Result<num_rational::BigRational> {
    form.pfaffian()
}
