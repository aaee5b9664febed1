//! Exact-arithmetic Gröbner basis engine.
//!
//! Three interchangeable algorithms compute Gröbner bases over the rationals
//! or a prime field GF(p):
//!
//! * [`buchberger::buchberger_basis`], the classical pair/reduce loop with no
//!   pair-discarding criteria, used as the correctness oracle;
//! * [`f5b::f5b_basis`] with [`f5b::ReductionStrategy::F5`], the
//!   signature-based F5B algorithm with the syzygy and rewritten criteria;
//! * [`fast_reduce::fast_strategy`], F5B driving a top-reduction loop that
//!   picks each reducer by the smallest shifted second monomial, which makes
//!   reducer selection cheap and keeps intermediate results short.
//!
//! Every run charges an operation counter (coefficient operations, reduction
//! steps, pair bookkeeping), and [`complexity`] evaluates closed-form cost
//! polynomials for the three algorithms so measured and predicted costs can
//! be compared side by side. [`parse`] reads the small text format for input
//! systems, [`report`] runs an algorithm and renders text or JSON reports,
//! and [`systems`] bundles classic benchmark inputs.
//!
//! Start with the `examples/` directory; each file there exercises one major
//! capability end to end.

pub mod buchberger;
pub mod complexity;
pub mod context;
pub mod error;
pub mod f5b;
pub mod fast_reduce;
pub mod field;
pub mod monomial;
pub mod parse;
pub mod polynomial;
pub mod report;
pub mod systems;

pub use context::{Context, OpCounter, OpCounts};
pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use monomial::{count_monomials, Monomial, MonomialOrder};
pub use polynomial::{degree_bound, Polynomial, Term};
