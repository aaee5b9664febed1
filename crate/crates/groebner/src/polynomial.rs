//! Sparse multivariate polynomials in canonical form.
//!
//! Canonical form means: terms sorted strictly descending under the context's
//! term order, no zero coefficients stored, and the zero polynomial
//! represented by an empty term list. Every operation here returns canonical
//! output given canonical input, so the head term is always `terms[0]` and
//! head access is O(1).
//!
//! Operations that do coefficient arithmetic charge the context's
//! [`OpCounter`](crate::context::OpCounter); construction and formatting do
//! not.

use crate::context::Context;
use crate::error::{domain, Error, Result};
use crate::field::FieldElement;
use crate::monomial::Monomial;
use num::BigUint;
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coefficient: FieldElement,
    pub monomial: Monomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    /// Canonicalizes an arbitrary term list: validates it against the
    /// context, sorts, merges duplicate monomials, and drops zeros.
    pub fn from_terms(ctx: &Context, terms: Vec<(FieldElement, Monomial)>) -> Result<Polynomial> {
        let mut terms = terms;
        for (c, m) in &terms {
            if m.n_vars() != ctx.n_vars() {
                return Err(Error::VariableCountMismatch {
                    left: m.n_vars(),
                    right: ctx.n_vars(),
                });
            }
            if c.field() != ctx.field() {
                return Err(Error::FieldMismatch(format!(
                    "{} vs {}",
                    c.field(),
                    ctx.field()
                )));
            }
        }
        terms.sort_by(|a, b| ctx.cmp(&b.1, &a.1));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.monomial == m => {
                    last.coefficient = last.coefficient.add(&c)?;
                }
                _ => out.push(Term {
                    coefficient: c,
                    monomial: m,
                }),
            }
        }
        out.retain(|t| !t.coefficient.is_zero());
        let p = Polynomial { terms: out };
        debug_assert!(p.is_canonical(ctx));
        Ok(p)
    }

    /// Builds directly from terms already in strict descending order.
    pub(crate) fn from_sorted_terms(ctx: &Context, terms: Vec<Term>) -> Polynomial {
        let p = Polynomial { terms };
        debug_assert!(p.is_canonical(ctx));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Head term under the context order; the zero polynomial has none.
    pub fn head(&self) -> Result<&Term> {
        self.terms.first().ok_or(Error::ZeroPolynomial)
    }

    pub fn head_monomial(&self) -> Result<&Monomial> {
        Ok(&self.head()?.monomial)
    }

    pub fn head_coefficient(&self) -> Result<&FieldElement> {
        Ok(&self.head()?.coefficient)
    }

    /// The monomial right below the head, when the polynomial has one.
    pub fn second_monomial(&self) -> Option<&Monomial> {
        self.terms.get(1).map(|t| &t.monomial)
    }

    /// Everything but the head term.
    pub fn tail(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }

    /// Total degree: the maximum degree over all terms (not necessarily the
    /// head's degree under lex). `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    /// `self + c * u * f`, merging in one pass. Charges one field op per
    /// coefficient multiplication and one per coefficient addition performed.
    pub fn add_scaled(
        &self,
        ctx: &Context,
        c: &FieldElement,
        u: &Monomial,
        f: &Polynomial,
    ) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(self.clone());
        }
        let counter = ctx.counter();
        let mut out: Vec<Term> = Vec::with_capacity(self.terms.len() + f.terms.len());
        let mut lhs = self.terms.iter().peekable();
        let mut rhs = f.terms.iter().peekable();
        // scaling by a fixed monomial preserves the term order, so both
        // streams stay descending and a single merge suffices
        let mut scaled: Option<Term> = None;
        loop {
            if scaled.is_none() {
                if let Some(t) = rhs.next() {
                    counter.add_field_ops(1);
                    scaled = Some(Term {
                        coefficient: c.mul(&t.coefficient)?,
                        monomial: u.mul(&t.monomial)?,
                    });
                }
            }
            match (lhs.peek(), &scaled) {
                (None, None) => break,
                (Some(_), None) => out.push(lhs.next().unwrap().clone()),
                (None, Some(_)) => out.push(scaled.take().unwrap()),
                (Some(a), Some(b)) => match ctx.cmp(&a.monomial, &b.monomial) {
                    Ordering::Greater => out.push(lhs.next().unwrap().clone()),
                    Ordering::Less => out.push(scaled.take().unwrap()),
                    Ordering::Equal => {
                        counter.add_field_ops(1);
                        let sum = a.coefficient.add(&b.coefficient)?;
                        let monomial = lhs.next().unwrap().monomial.clone();
                        scaled = None;
                        if !sum.is_zero() {
                            out.push(Term {
                                coefficient: sum,
                                monomial,
                            });
                        }
                    }
                },
            }
        }
        Ok(Polynomial::from_sorted_terms(ctx, out))
    }

    /// `c * u * self`. Charges one field op per term unless `c` is zero.
    pub fn mul_term(&self, ctx: &Context, c: &FieldElement, u: &Monomial) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(Polynomial::zero());
        }
        let counter = ctx.counter();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                counter.add_field_ops(1);
                Ok(Term {
                    coefficient: c.mul(&t.coefficient)?,
                    monomial: u.mul(&t.monomial)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_sorted_terms(ctx, terms))
    }

    /// Scales so the head coefficient becomes 1.
    pub fn monic(&self, ctx: &Context) -> Result<Polynomial> {
        let inv = self.head_coefficient()?.inv()?;
        ctx.counter().add_field_ops(1);
        self.mul_term(ctx, &inv, &Monomial::one(ctx.n_vars()))
    }

    /// Canonical-form check used in debug assertions and tests.
    pub fn is_canonical(&self, ctx: &Context) -> bool {
        self.terms.iter().all(|t| {
            !t.coefficient.is_zero()
                && t.coefficient.field() == ctx.field()
                && t.monomial.n_vars() == ctx.n_vars()
        }) && self
            .terms
            .windows(2)
            .all(|w| ctx.cmp(&w[0].monomial, &w[1].monomial) == Ordering::Greater)
    }

    /// Renders with the context's variable names, e.g. `x^2*y - 1`.
    pub fn format(&self, ctx: &Context) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            let (sign_negative, magnitude) = match &t.coefficient {
                FieldElement::Rational(r) if r.numer().sign() == num::bigint::Sign::Minus => {
                    (true, t.coefficient.neg())
                }
                _ => (false, t.coefficient.clone()),
            };
            if i == 0 {
                if sign_negative {
                    out.push('-');
                }
            } else {
                out.push_str(if sign_negative { " - " } else { " + " });
            }
            let mono = format_monomial(ctx.variables(), &t.monomial);
            if t.monomial.is_one() {
                out.push_str(&magnitude.to_string());
            } else if magnitude.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{magnitude}*{mono}"));
            }
        }
        out
    }
}

pub(crate) fn format_monomial(vars: &[String], m: &Monomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                vars[i].clone()
            } else {
                format!("{}^{}", vars[i], e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Degree cap for the cost model: `(8 * maxdeg + 1) * 2^mindeg`, where maxdeg
/// and mindeg are the largest and smallest total degrees among the
/// generators.
pub fn degree_bound(polys: &[Polynomial]) -> Result<BigUint> {
    if polys.is_empty() {
        return Err(domain("degree bound of an empty system"));
    }
    let mut maxdeg: u64 = 0;
    let mut mindeg: u64 = u64::MAX;
    for p in polys {
        let d = p
            .total_degree()
            .ok_or_else(|| domain("degree bound undefined for a zero generator"))?;
        maxdeg = maxdeg.max(d);
        mindeg = mindeg.min(d);
    }
    if mindeg > 1_000_000 {
        return Err(domain(
            "degree bound exceeds the practical range (minimum degree too large)",
        ));
    }
    Ok((BigUint::from(maxdeg) * 8u32 + 1u32) << (mindeg as usize))
}
