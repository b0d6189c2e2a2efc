//! Exact computations around quantum symmetric and skew Howe duality:
//! Laurent polynomial arithmetic, the `U_q(gl_n)` action on tensor products
//! of symmetric and exterior powers, braid operators, an affine braid
//! groupoid on Laurent polynomials, lattices in `Q[z]^m` with their block
//! matrix chart, dimension counts, and the verification suites tying them
//! together.

pub mod abraid;
pub mod harness;
pub mod howemod;
pub mod kdim;
pub mod mvlattice;
pub mod qlaurent;
pub mod report;
pub mod rickard;
pub mod skewsym;
pub mod weights;
