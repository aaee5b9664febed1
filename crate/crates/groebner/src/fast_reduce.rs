//! Reducer selection by smallest shifted second monomial.
//!
//! When several basis members can cancel the head of a working polynomial,
//! the choice matters: subtracting `c * u * f_k` replaces the head with (at
//! most) `max{second monomial of h, u * (second monomial of f_k)}`. Scanning
//! a table of per-member (head, second-monomial) entries and picking the
//! eligible `k` minimizing `u * t_k2` keeps the new head as small as
//! possible, so chains of head cancellations shorten.
//!
//! Single-term members have no second monomial; their table entries carry an
//! absent marker that sorts below every monomial, so a monomial reducer
//! always wins (it introduces no new terms at all).
//!
//! [`s_poly_reduction`] drives this selection as a top-reduction loop: it
//! stops as soon as no basis head divides the working head, leaving lower
//! terms untouched. In [`ReductionMode::Safe`] a candidate is only eligible
//! when its shifted signature stays strictly below the working polynomial's
//! signature, which preserves the bookkeeping the signature criteria rely
//! on; [`ReductionMode::Literal`] skips that guard entirely.

use std::cmp::Ordering;

use crate::context::Context;
use crate::error::Result;
use crate::f5b::{cmp_signatures, f5b_basis, ReductionStrategy, SignedPolynomial};
use crate::monomial::Monomial;
use crate::polynomial::Polynomial;

#[derive(Clone, Debug)]
struct TableEntry {
    head: Monomial,
    second: Option<Monomial>,
}

/// Per-member (head monomial, second monomial) table, kept in step with a
/// basis list. Zero polynomials occupy a slot that is never selected.
#[derive(Clone, Debug, Default)]
pub struct ReducerTable {
    entries: Vec<Option<TableEntry>>,
}

impl ReducerTable {
    pub fn new() -> ReducerTable {
        ReducerTable { entries: Vec::new() }
    }

    pub fn for_polynomials(polys: &[Polynomial]) -> ReducerTable {
        let mut table = ReducerTable::new();
        for p in polys {
            table.push(p);
        }
        table
    }

    /// Appends the entry for `poly` (an inert slot when `poly` is zero).
    pub fn push(&mut self, poly: &Polynomial) {
        if poly.is_zero() {
            self.entries.push(None);
        } else {
            self.entries.push(Some(TableEntry {
                head: poly.head_monomial().expect("nonzero").clone(),
                second: poly.second_monomial().cloned(),
            }));
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Running minimum of the selection scan. `Init` means no eligible reducer
/// has been seen; `Absent` (a single-term reducer's missing second monomial)
/// beats every genuine monomial and ties with nothing.
enum RunningMin {
    Init,
    Absent,
    Shifted(Monomial),
}

fn select_reducer(
    ctx: &Context,
    h: &Polynomial,
    table: &ReducerTable,
    mut eligible: impl FnMut(usize, &Monomial) -> Result<bool>,
) -> Result<usize> {
    let hm = h.head_monomial()?;
    let mut best_index = 0usize;
    let mut best = RunningMin::Init;
    for (i, entry) in table.entries.iter().enumerate() {
        let Some(entry) = entry else { continue };
        let Some(u) = hm.div(&entry.head)? else { continue };
        if !eligible(i, &u)? {
            continue;
        }
        let candidate = match &entry.second {
            Some(t2) => Some(u.mul(t2)?),
            None => None,
        };
        // strict improvement only, so the first minimum is kept
        let better = match (&candidate, &best) {
            (None, RunningMin::Init) => true,
            (None, RunningMin::Shifted(_)) => true,
            (None, RunningMin::Absent) => false,
            (Some(c), RunningMin::Init) => ctx.cmp(c, hm) == Ordering::Less,
            (Some(_), RunningMin::Absent) => false,
            (Some(c), RunningMin::Shifted(m)) => ctx.cmp(c, m) == Ordering::Less,
        };
        if better {
            best_index = i + 1;
            best = match candidate {
                None => RunningMin::Absent,
                Some(c) => RunningMin::Shifted(c),
            };
        }
    }
    Ok(best_index)
}

/// Picks the reducer for `h` from `table`: among entries whose head divides
/// `HT(h)`, the 1-based index of the first one minimizing `u * t_k2` (with
/// `u = HT(h)/t_k1`, and absent second monomials minimal). Returns 0 when no
/// head divides `HT(h)`, an in-band outcome, not an error.
pub fn reduction_sequence(ctx: &Context, h: &Polynomial, table: &ReducerTable) -> Result<usize> {
    select_reducer(ctx, h, table, |_, _| Ok(true))
}

/// Whether [`s_poly_reduction`] enforces the signature guard.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionMode {
    /// No signature check: the selection rule alone decides.
    Literal,
    /// A candidate is skipped unless its shifted signature is strictly below
    /// the working polynomial's signature.
    Safe,
}

/// Top-reduces `sp` by `b`, choosing each reducer via [`reduction_sequence`]:
/// repeatedly subtracts `(HC/HC(f_k)) * u * f_k` until no basis head divides
/// the working head (or the polynomial vanishes). The input's signature and
/// birth stamp are kept throughout. `table` must be the reducer table of `b`.
pub fn s_poly_reduction(
    ctx: &Context,
    mut sp: SignedPolynomial,
    b: &[SignedPolynomial],
    table: &ReducerTable,
    mode: ReductionMode,
) -> Result<SignedPolynomial> {
    debug_assert_eq!(table.len(), b.len(), "table must track the basis list");
    loop {
        if sp.polynomial.is_zero() {
            return Ok(sp);
        }
        let sig = sp.signature.clone();
        let k = match mode {
            ReductionMode::Literal => select_reducer(ctx, &sp.polynomial, table, |_, _| Ok(true))?,
            ReductionMode::Safe => select_reducer(ctx, &sp.polynomial, table, |i, u| {
                Ok(cmp_signatures(ctx, &b[i].signature.mul(u)?, &sig) == Ordering::Less)
            })?,
        };
        if k == 0 {
            return Ok(sp);
        }
        let reducer = &b[k - 1];
        let head = sp.polynomial.head()?.clone();
        let rh = reducer.polynomial.head()?;
        debug_assert_eq!(
            table.entries[k - 1].as_ref().map(|e| &e.head),
            Some(&rh.monomial),
            "table entry out of step with the basis"
        );
        let u = head
            .monomial
            .div(&rh.monomial)?
            .expect("selected reducer head divides the working head");
        #[cfg(debug_assertions)]
        let head_cap: (Option<Monomial>, Option<Monomial>) = (
            sp.polynomial.second_monomial().cloned(),
            match &table.entries[k - 1].as_ref().unwrap().second {
                Some(t2) => Some(u.mul(t2)?),
                None => None,
            },
        );
        let c = head.coefficient.div(&rh.coefficient)?;
        ctx.counter().add_field_ops(2); // the division and the negation
        ctx.counter().count_reduction_step();
        let next = sp.polynomial.add_scaled(ctx, &c.neg(), &u, &reducer.polynomial)?;
        debug_assert!(
            next.is_zero() || ctx.cmp(next.head_monomial().unwrap(), &head.monomial) == Ordering::Less
        );
        // the new head is exactly max{old second monomial, u * t_k2}, except
        // that equal candidates may cancel each other partly or fully
        #[cfg(debug_assertions)]
        {
            match head_cap {
                (None, None) => debug_assert!(next.is_zero()),
                (Some(cap), None) | (None, Some(cap)) => {
                    debug_assert_eq!(next.head_monomial().unwrap(), &cap)
                }
                (Some(a), Some(b2)) => {
                    let cap = if ctx.cmp(&a, &b2) == Ordering::Less { &b2 } else { &a };
                    if a == b2 {
                        debug_assert!(
                            next.is_zero()
                                || ctx.cmp(next.head_monomial().unwrap(), cap) != Ordering::Greater
                        );
                    } else {
                        debug_assert_eq!(next.head_monomial().unwrap(), cap);
                    }
                }
            }
        }
        sp.polynomial = next;
    }
}

/// The signature-based basis loop with [`s_poly_reduction`] (safe mode) as
/// its reduction step.
pub fn fast_strategy(ctx: &Context, generators: &[Polynomial]) -> Result<Vec<Polynomial>> {
    f5b_basis(ctx, generators, ReductionStrategy::FastSafe)
}
