//! The computation context: variable names, active term order, coefficient
//! field, and the shared operation counter.
//!
//! Everything else in the crate is immutable data; the counter is the single
//! piece of shared mutable state and uses atomics, so a `&Context` can be
//! handed to several threads at once.

use crate::error::{domain, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

#[derive(Debug)]
pub struct Context {
    variables: Vec<String>,
    order: MonomialOrder,
    field: Field,
    counter: OpCounter,
}

impl Context {
    pub fn new<S: Into<String>>(
        variables: Vec<S>,
        order: MonomialOrder,
        field: Field,
    ) -> Result<Context> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        if variables.is_empty() {
            return Err(domain("a context needs at least one variable"));
        }
        for (i, v) in variables.iter().enumerate() {
            if variables[..i].contains(v) {
                return Err(domain(format!("duplicate variable name '{v}'")));
            }
        }
        Ok(Context {
            variables,
            order,
            field,
            counter: OpCounter::default(),
        })
    }

    pub fn n_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn counter(&self) -> &OpCounter {
        &self.counter
    }

    /// Shorthand for comparing two monomials under the context order.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    /// Builds a monomial, validating the exponent count.
    pub fn monomial(&self, exponents: &[u32]) -> Result<Monomial> {
        if exponents.len() != self.n_vars() {
            return Err(crate::error::Error::VariableCountMismatch {
                left: exponents.len(),
                right: self.n_vars(),
            });
        }
        Ok(Monomial::new(exponents.to_vec()))
    }

    /// The monomial for variable `i`.
    pub fn var(&self, i: usize) -> Result<Monomial> {
        if i >= self.n_vars() {
            return Err(domain(format!("variable index {i} out of range")));
        }
        let mut exps = vec![0u32; self.n_vars()];
        exps[i] = 1;
        Ok(Monomial::new(exps))
    }
}

/// Instrumentation shared by one computation run.
///
/// One "field op" is one executed add/sub/mul/div/negate on coefficients; one
/// "reduction step" is one subtraction of a scaled basis member from a working
/// polynomial. Exponent arithmetic is never charged. Counts are atomic so a
/// context can be read concurrently; the algorithms themselves stay
/// single-threaded.
#[derive(Debug, Default)]
pub struct OpCounter {
    field_ops: AtomicU64,
    reduction_steps: AtomicU64,
    pairs_generated: AtomicU64,
    pairs_syzygy: AtomicU64,
    pairs_rewritten: AtomicU64,
    pairs_to_zero: AtomicU64,
    pairs_kept: AtomicU64,
}

impl OpCounter {
    pub fn add_field_ops(&self, k: u64) {
        self.field_ops.fetch_add(k, AtomicOrdering::Relaxed);
    }

    pub fn count_reduction_step(&self) {
        self.reduction_steps.fetch_add(1, AtomicOrdering::Relaxed);
    }

    pub fn count_pairs_generated(&self, k: u64) {
        self.pairs_generated.fetch_add(k, AtomicOrdering::Relaxed);
    }

    pub fn count_pair_syzygy(&self) {
        self.pairs_syzygy.fetch_add(1, AtomicOrdering::Relaxed);
    }

    pub fn count_pair_rewritten(&self) {
        self.pairs_rewritten.fetch_add(1, AtomicOrdering::Relaxed);
    }

    pub fn count_pair_to_zero(&self) {
        self.pairs_to_zero.fetch_add(1, AtomicOrdering::Relaxed);
    }

    pub fn count_pair_kept(&self) {
        self.pairs_kept.fetch_add(1, AtomicOrdering::Relaxed);
    }

    pub fn reset(&self) {
        self.field_ops.store(0, AtomicOrdering::Relaxed);
        self.reduction_steps.store(0, AtomicOrdering::Relaxed);
        self.pairs_generated.store(0, AtomicOrdering::Relaxed);
        self.pairs_syzygy.store(0, AtomicOrdering::Relaxed);
        self.pairs_rewritten.store(0, AtomicOrdering::Relaxed);
        self.pairs_to_zero.store(0, AtomicOrdering::Relaxed);
        self.pairs_kept.store(0, AtomicOrdering::Relaxed);
    }

    pub fn snapshot(&self) -> OpCounts {
        OpCounts {
            field_ops: self.field_ops.load(AtomicOrdering::Relaxed),
            reduction_steps: self.reduction_steps.load(AtomicOrdering::Relaxed),
            pairs_generated: self.pairs_generated.load(AtomicOrdering::Relaxed),
            pairs_discarded_syzygy: self.pairs_syzygy.load(AtomicOrdering::Relaxed),
            pairs_discarded_rewritten: self.pairs_rewritten.load(AtomicOrdering::Relaxed),
            pairs_reduced_to_zero: self.pairs_to_zero.load(AtomicOrdering::Relaxed),
            pairs_basis_contributing: self.pairs_kept.load(AtomicOrdering::Relaxed),
        }
    }
}

/// A plain snapshot of the counter, suitable for reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpCounts {
    pub field_ops: u64,
    pub reduction_steps: u64,
    pub pairs_generated: u64,
    pub pairs_discarded_syzygy: u64,
    pub pairs_discarded_rewritten: u64,
    pub pairs_reduced_to_zero: u64,
    pub pairs_basis_contributing: u64,
}

impl OpCounts {
    /// Every generated pair must be accounted for exactly once.
    pub fn pairs_conserved(&self) -> bool {
        self.pairs_generated
            == self.pairs_discarded_syzygy
                + self.pairs_discarded_rewritten
                + self.pairs_reduced_to_zero
                + self.pairs_basis_contributing
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_rejects_bad_variable_lists() {
        assert!(Context::new(Vec::<String>::new(), MonomialOrder::Lex, Field::Rational).is_err());
        assert!(Context::new(vec!["x", "x"], MonomialOrder::Lex, Field::Rational).is_err());
        let ctx = Context::new(vec!["x", "y"], MonomialOrder::Lex, Field::Rational).unwrap();
        assert_eq!(ctx.variable_index("y"), Some(1));
        assert_eq!(ctx.variable_index("z"), None);
        assert!(ctx.monomial(&[1, 2, 3]).is_err());
    }

    #[test]
    fn counter_snapshot_and_conservation() {
        let c = OpCounter::default();
        c.count_pairs_generated(5);
        c.count_pair_syzygy();
        c.count_pair_rewritten();
        c.count_pair_to_zero();
        c.count_pair_kept();
        c.count_pair_kept();
        let s = c.snapshot();
        assert!(s.pairs_conserved());
        c.count_pairs_generated(1);
        assert!(!c.snapshot().pairs_conserved());
        c.reset();
        assert_eq!(c.snapshot().pairs_generated, 0);
    }

    #[test]
    fn counter_is_shareable_across_threads() {
        let ctx = Context::new(vec!["x"], MonomialOrder::Lex, Field::Rational).unwrap();
        std::thread::scope(|s| {
            for _ in 0..4 {
                s.spawn(|| {
                    for _ in 0..1000 {
                        ctx.counter().add_field_ops(1);
                    }
                });
            }
        });
        assert_eq!(ctx.counter().snapshot().field_ops, 4000);
    }
}
