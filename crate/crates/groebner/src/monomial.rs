//! Monomials as exponent vectors with a cached total degree, and the three
//! classical term orders (lex, graded lex, graded reverse lex).
//!
//! A monomial does not know its variable names; those live in the
//! [`Context`](crate::context::Context). All binary operations require equal
//! variable counts and report a mismatch as an error rather than truncating.

use crate::error::{domain, Error, Result};
use num::BigUint;
use num::One;
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
    degree: u64,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Monomial {
        let degree = exponents.iter().map(|&e| e as u64).sum();
        Monomial { exponents, degree }
    }

    /// The monomial 1 in `n` variables.
    pub fn one(n: usize) -> Monomial {
        Monomial {
            exponents: vec![0; n],
            degree: 0,
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn n_vars(&self) -> usize {
        self.exponents.len()
    }

    /// Total degree, cached at construction.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    fn check_len(&self, other: &Monomial) -> Result<()> {
        if self.exponents.len() != other.exponents.len() {
            return Err(Error::VariableCountMismatch {
                left: self.exponents.len(),
                right: other.exponents.len(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_len(other)?;
        let mut exps = Vec::with_capacity(self.exponents.len());
        for (a, b) in self.exponents.iter().zip(&other.exponents) {
            exps.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial::new(exps))
    }

    /// Exact quotient `self / other`, or `None` when `other` does not divide
    /// `self`. Non-divisibility is an ordinary outcome, not an error.
    pub fn div(&self, other: &Monomial) -> Result<Option<Monomial>> {
        self.check_len(other)?;
        let mut exps = Vec::with_capacity(self.exponents.len());
        for (a, b) in self.exponents.iter().zip(&other.exponents) {
            if a < b {
                return Ok(None);
            }
            exps.push(a - b);
        }
        Ok(Some(Monomial::new(exps)))
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_len(other)?;
        Ok(self
            .exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_len(other)?;
        let exps = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| *a.max(b))
            .collect();
        Ok(Monomial::new(exps))
    }
}

/// The admissible term orders this crate knows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Pure lexicographic; earlier-declared variables dominate.
    Lex,
    /// Total degree, ties by lex.
    GrLex,
    /// Total degree, ties by reverse lexicographic comparison read from the
    /// last variable: the monomial with the smaller trailing exponent wins.
    GrevLex,
}

impl MonomialOrder {
    /// Compares under the order. Both monomials must come from the same
    /// context; unequal variable counts are a caller bug.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.n_vars(), b.n_vars(), "monomials from different contexts");
        match self {
            MonomialOrder::Lex => lex_cmp(a.exponents(), b.exponents()),
            MonomialOrder::GrLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| lex_cmp(a.exponents(), b.exponents())),
            MonomialOrder::GrevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
                    if x != y {
                        // smaller exponent in the rightmost difference = greater
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::GrLex => "grlex",
            MonomialOrder::GrevLex => "grevlex",
        }
    }

    pub fn from_name(name: &str) -> Option<MonomialOrder> {
        match name {
            "lex" => Some(MonomialOrder::Lex),
            "grlex" => Some(MonomialOrder::GrLex),
            "grevlex" => Some(MonomialOrder::GrevLex),
            _ => None,
        }
    }
}

fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Number of monomials in `n_vars` variables of total degree at most
/// `degree`: the binomial coefficient C(n + d, n).
pub fn count_monomials(degree: &BigUint, n_vars: u64) -> Result<BigUint> {
    if n_vars == 0 {
        return Err(domain("count_monomials requires at least one variable"));
    }
    // Incremental exact binomial: after step k the accumulator is C(d + k, k).
    let mut acc = BigUint::one();
    for k in 1..=n_vars {
        acc = acc * (degree + BigUint::from(k)) / BigUint::from(k);
    }
    Ok(acc)
}
