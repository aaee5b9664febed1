//! Signature-based Gröbner basis computation.
//!
//! Every tracked polynomial carries a signature `u*e_i`: a monomial `u` and
//! the position `i` of the input generator it descends from. Signatures are
//! compared position-first (a larger generator index always wins, ties fall
//! back to the context's monomial order), and each member also records a
//! birth stamp, its 1-based insertion position in the tracking list.
//!
//! Two signature tests discard critical pairs before any field arithmetic:
//! the syzygy test (a shifted signature monomial is divisible by the head
//! term of a lower-index member, witnessing a principal syzygy) and the
//! rewritten test (a later-born member's signature divides the shifted one,
//! so the same work would be redone). Surviving pairs are turned into signed
//! S-polynomials and reduced by a driver that drains pending work in
//! ascending signature order, admitting only reducers whose shifted
//! signature stays strictly below the target's.

use std::cmp::Ordering;

use crate::context::Context;
use crate::error::{domain, Error, Result};
use crate::fast_reduce::{s_poly_reduction, ReducerTable, ReductionMode};
use crate::monomial::Monomial;
use crate::polynomial::{format_monomial, Polynomial};

/// Module-monomial label `monomial * e_index` with a 1-based generator index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub index: usize,
    pub monomial: Monomial,
}

impl Signature {
    pub fn new(index: usize, monomial: Monomial) -> Signature {
        Signature { index, monomial }
    }

    /// The signature of `u * F` when `self` is the signature of `F`.
    pub fn mul(&self, u: &Monomial) -> Result<Signature> {
        Ok(Signature {
            index: self.index,
            monomial: self.monomial.mul(u)?,
        })
    }

    /// Renders like `e2` or `x^2*y*e1`.
    pub fn format(&self, ctx: &Context) -> String {
        if self.monomial.is_one() {
            format!("e{}", self.index)
        } else {
            format!(
                "{}*e{}",
                format_monomial(ctx.variables(), &self.monomial),
                self.index
            )
        }
    }
}

/// Position-over-term signature order: generator index first (larger index is
/// larger), then the monomial under the context order.
pub fn cmp_signatures(ctx: &Context, a: &Signature, b: &Signature) -> Ordering {
    a.index
        .cmp(&b.index)
        .then_with(|| ctx.cmp(&a.monomial, &b.monomial))
}

/// A polynomial labeled with its signature and its birth stamp (1-based
/// insertion position in the tracking list; stamps strictly increase in
/// creation order within one run).
#[derive(Clone, Debug, PartialEq)]
pub struct SignedPolynomial {
    pub signature: Signature,
    pub polynomial: Polynomial,
    pub birth: u64,
}

impl SignedPolynomial {
    /// Renders like `(y*e2, x^2*y - 1)`.
    pub fn format(&self, ctx: &Context) -> String {
        format!("({}, {})", self.signature.format(ctx), self.polynomial.format(ctx))
    }
}

/// A critical pair between tracking-list members `f` and `g` (stored as
/// indices): `lcm = u * HT(poly(f)) = v * HT(poly(g))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub lcm: Monomial,
    pub u: Monomial,
    pub f: usize,
    pub v: Monomial,
    pub g: usize,
}

/// Builds the critical pair between `b[i]` and `b[j]`. Both members must have
/// nonzero polynomial parts.
pub fn make_critical_pair(b: &[SignedPolynomial], i: usize, j: usize) -> Result<CriticalPair> {
    if i == j {
        return Err(domain("a critical pair needs two distinct members"));
    }
    for &k in &[i, j] {
        if b[k].polynomial.is_zero() {
            return Err(domain("critical pairs require nonzero polynomial parts"));
        }
    }
    let fh = b[i].polynomial.head_monomial()?;
    let gh = b[j].polynomial.head_monomial()?;
    let lcm = fh.lcm(gh)?;
    let u = lcm.div(fh)?.expect("lcm is divisible by both heads");
    let v = lcm.div(gh)?.expect("lcm is divisible by both heads");
    Ok(CriticalPair { lcm, u, f: i, v, g: j })
}

/// True when some member of `b` with a strictly smaller signature index has a
/// nonzero polynomial whose head term divides `monomial`.
pub(crate) fn shifted_divisible(
    b: &[SignedPolynomial],
    index: usize,
    monomial: &Monomial,
) -> Result<bool> {
    for h in b {
        if h.signature.index < index
            && !h.polynomial.is_zero()
            && h.polynomial.head_monomial()?.divides(monomial)?
        {
            return Ok(true);
        }
    }
    Ok(false)
}

/// True when some member of `b` with the same signature index, born after
/// `birth`, has a signature monomial dividing `monomial`.
pub(crate) fn shifted_rewritable(
    b: &[SignedPolynomial],
    index: usize,
    monomial: &Monomial,
    birth: u64,
) -> Result<bool> {
    for h in b {
        if h.signature.index == index
            && h.birth > birth
            && h.signature.monomial.divides(monomial)?
        {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Syzygy test: the pair is redundant when either shifted signature
/// `u*S(F)` or `v*S(G)` has its monomial divisible by the head term of a
/// lower-index member (a principal-syzygy witness).
pub fn syzygy_criterion(cp: &CriticalPair, b: &[SignedPolynomial]) -> Result<bool> {
    let f = &b[cp.f];
    let fu = f.signature.monomial.mul(&cp.u)?;
    if shifted_divisible(b, f.signature.index, &fu)? {
        return Ok(true);
    }
    let g = &b[cp.g];
    let gv = g.signature.monomial.mul(&cp.v)?;
    shifted_divisible(b, g.signature.index, &gv)
}

/// Rewritten test: the pair is redundant when, for either component, a member
/// born later than that component carries the same signature index and a
/// signature monomial dividing the shifted one. The birth comparison
/// automatically excludes the component itself; no other member is exempt.
pub fn rewritten_criterion(cp: &CriticalPair, b: &[SignedPolynomial]) -> Result<bool> {
    let f = &b[cp.f];
    let fu = f.signature.monomial.mul(&cp.u)?;
    if shifted_rewritable(b, f.signature.index, &fu, f.birth)? {
        return Ok(true);
    }
    let g = &b[cp.g];
    let gv = g.signature.monomial.mul(&cp.v)?;
    shifted_rewritable(b, g.signature.index, &gv, g.birth)
}

/// Signed S-polynomial of a pair: polynomial part
/// `HC(poly(G)) * u * poly(F) - HC(poly(F)) * v * poly(G)`, signature the
/// larger of the two shifted signatures, birth stamped for insertion directly
/// after the current list.
///
/// Equal shifted signatures are an error: such a pair is always caught by the
/// rewritten test first (the two components have distinct births), so hitting
/// the error means a criterion was skipped or is wrong. A zero polynomial
/// part with a live signature is a legal outcome, not an error.
pub fn spol_signed(ctx: &Context, cp: &CriticalPair, b: &[SignedPolynomial]) -> Result<SignedPolynomial> {
    let f = &b[cp.f];
    let g = &b[cp.g];
    let su = f.signature.mul(&cp.u)?;
    let sv = g.signature.mul(&cp.v)?;
    let signature = match cmp_signatures(ctx, &su, &sv) {
        Ordering::Equal => return Err(Error::SignatureCollision),
        Ordering::Greater => su,
        Ordering::Less => sv,
    };
    let fh = f.polynomial.head()?;
    let gh = g.polynomial.head()?;
    let left = f.polynomial.mul_term(ctx, &gh.coefficient, &cp.u)?;
    ctx.counter().add_field_ops(1); // negating the right-hand scale factor
    let polynomial = left.add_scaled(ctx, &fh.coefficient.neg(), &cp.v, &g.polynomial)?;
    Ok(SignedPolynomial {
        signature,
        polynomial,
        birth: b.len() as u64 + 1,
    })
}

/// Outcome of one reduction attempt: either one step was performed (the
/// result keeps the input's signature and birth and re-enters the pending
/// set) or no admissible reducer exists.
#[derive(Clone, Debug)]
pub enum ReductionStep {
    Reduced(SignedPolynomial),
    Irreducible(SignedPolynomial),
}

/// Attempts one signature-safe reduction step of `f` by the members of `b`.
///
/// A member `g` reduces `f` only when all four of these hold, with
/// `v = HT(f)/HT(g)`:
///
/// 1. `poly(g)` is nonzero and its head term divides `HT(f)`;
/// 2. the shifted signature of `v*g` is strictly below `f`'s signature;
/// 3. `v*g` is not divisible (per [`shifted_divisible`]) by `b`;
/// 4. `v*g` is not rewritable (per [`shifted_rewritable`]) by `b`.
///
/// The first admissible member in list order performs the step.
pub fn f5_reduction_step(
    ctx: &Context,
    f: SignedPolynomial,
    b: &[SignedPolynomial],
) -> Result<ReductionStep> {
    if f.polynomial.is_zero() {
        return Ok(ReductionStep::Irreducible(f));
    }
    let fh = f.polynomial.head()?.clone();
    for g in b {
        if g.polynomial.is_zero() {
            continue;
        }
        let gh = g.polynomial.head()?;
        let Some(v) = fh.monomial.div(&gh.monomial)? else {
            continue;
        };
        let shifted = g.signature.mul(&v)?;
        if cmp_signatures(ctx, &shifted, &f.signature) != Ordering::Less {
            continue;
        }
        if shifted_divisible(b, shifted.index, &shifted.monomial)? {
            continue;
        }
        if shifted_rewritable(b, shifted.index, &shifted.monomial, g.birth)? {
            continue;
        }
        let c = fh.coefficient.div(&gh.coefficient)?;
        ctx.counter().add_field_ops(2); // the division and the negation
        ctx.counter().count_reduction_step();
        let next = f.polynomial.add_scaled(ctx, &c.neg(), &v, &g.polynomial)?;
        debug_assert!(
            next.is_zero()
                || ctx.cmp(next.head_monomial().unwrap(), &fh.monomial) == Ordering::Less
        );
        return Ok(ReductionStep::Reduced(SignedPolynomial {
            signature: f.signature,
            polynomial: next,
            birth: f.birth,
        }));
    }
    Ok(ReductionStep::Irreducible(f))
}

/// Drains `todo` in ascending signature order through [`f5_reduction_step`],
/// re-queueing partial reductions, and returns the finished polynomials in
/// completion order.
pub fn reduction(
    ctx: &Context,
    mut todo: Vec<SignedPolynomial>,
    b: &[SignedPolynomial],
) -> Result<Vec<SignedPolynomial>> {
    let mut done = Vec::new();
    let mut last_signature: Option<Signature> = None;
    while !todo.is_empty() {
        let mut best = 0;
        for k in 1..todo.len() {
            if cmp_signatures(ctx, &todo[k].signature, &todo[best].signature) == Ordering::Less {
                best = k;
            }
        }
        let f = todo.swap_remove(best);
        if let Some(prev) = &last_signature {
            debug_assert!(
                cmp_signatures(ctx, prev, &f.signature) != Ordering::Greater,
                "pending polynomials must be drained in ascending signature order"
            );
        }
        last_signature = Some(f.signature.clone());
        match f5_reduction_step(ctx, f, b)? {
            ReductionStep::Irreducible(f) => done.push(f),
            ReductionStep::Reduced(f) => todo.push(f),
        }
    }
    Ok(done)
}

/// How surviving S-polynomials are reduced inside [`f5b_run`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionStrategy {
    /// The signature-safe step-by-step driver ([`reduction`]).
    F5,
    /// Second-monomial reducer selection with the signature guard kept
    /// (see [`crate::fast_reduce`]).
    FastSafe,
    /// Second-monomial reducer selection with no signature guard.
    FastLiteral,
}

/// Why a critical pair was discarded without reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiscardReason {
    Syzygy,
    Rewritten,
}

/// A discarded pair, remembered by the tracking-list indices of its members.
#[derive(Clone, Debug)]
pub struct DiscardedPair {
    pub f: usize,
    pub g: usize,
    pub reason: DiscardReason,
}

/// Full record of a signature-based run: every tracked member (including
/// signed zeros, which contribute to the rewritten test but not to the
/// ideal) and every discarded pair.
#[derive(Clone, Debug)]
pub struct F5bOutcome {
    pub members: Vec<SignedPolynomial>,
    pub discarded: Vec<DiscardedPair>,
}

impl F5bOutcome {
    /// The nonzero polynomial parts, in creation order: the computed basis.
    pub fn basis(&self) -> Vec<Polynomial> {
        self.members
            .iter()
            .filter(|m| !m.polynomial.is_zero())
            .map(|m| m.polynomial.clone())
            .collect()
    }
}

fn pair_precedes(
    ctx: &Context,
    b: &[SignedPolynomial],
    a: &CriticalPair,
    c: &CriticalPair,
) -> bool {
    match a
        .lcm
        .degree()
        .cmp(&c.lcm.degree())
        .then_with(|| ctx.cmp(&a.lcm, &c.lcm))
        .then_with(|| (b[a.f].birth, b[a.g].birth).cmp(&(b[c.f].birth, b[c.g].birth)))
    {
        Ordering::Less => true,
        _ => false,
    }
}

/// The signature-based basis loop. Returns the full run record; use
/// [`f5b_basis`] for just the polynomials.
///
/// Generators must all be nonzero (a zero generator has no meaningful
/// signature). Pairs are processed smallest lcm degree first, then smallest
/// lcm under the order, then lowest birth stamps; each popped pair is checked
/// against the syzygy test and then the rewritten test before any arithmetic.
/// Reduction results are recorded even when zero.
pub fn f5b_run(
    ctx: &Context,
    generators: &[Polynomial],
    strategy: ReductionStrategy,
) -> Result<F5bOutcome> {
    if generators.is_empty() {
        return Err(domain("cannot compute a basis for the empty system"));
    }
    for (i, g) in generators.iter().enumerate() {
        if g.is_zero() {
            return Err(domain(format!(
                "zero generator at position {} has no signature",
                i + 1
            )));
        }
    }

    let mut b: Vec<SignedPolynomial> = Vec::with_capacity(generators.len());
    let mut table = ReducerTable::new();
    for (i, g) in generators.iter().enumerate() {
        b.push(SignedPolynomial {
            signature: Signature::new(i + 1, Monomial::one(ctx.n_vars())),
            polynomial: g.clone(),
            birth: i as u64 + 1,
        });
        table.push(g);
    }

    let mut pairs: Vec<CriticalPair> = Vec::new();
    for i in 0..b.len() {
        for j in (i + 1)..b.len() {
            pairs.push(make_critical_pair(&b, i, j)?);
        }
    }
    ctx.counter().count_pairs_generated(pairs.len() as u64);
    let mut discarded: Vec<DiscardedPair> = Vec::new();

    while !pairs.is_empty() {
        let mut best = 0;
        for k in 1..pairs.len() {
            if pair_precedes(ctx, &b, &pairs[k], &pairs[best]) {
                best = k;
            }
        }
        let cp = pairs.swap_remove(best);

        if syzygy_criterion(&cp, &b)? {
            ctx.counter().count_pair_syzygy();
            discarded.push(DiscardedPair { f: cp.f, g: cp.g, reason: DiscardReason::Syzygy });
            continue;
        }
        if rewritten_criterion(&cp, &b)? {
            ctx.counter().count_pair_rewritten();
            discarded.push(DiscardedPair { f: cp.f, g: cp.g, reason: DiscardReason::Rewritten });
            continue;
        }

        let sp = spol_signed(ctx, &cp, &b)?;
        let finished = match strategy {
            ReductionStrategy::F5 => reduction(ctx, vec![sp], &b)?,
            ReductionStrategy::FastSafe => {
                vec![s_poly_reduction(ctx, sp, &b, &table, ReductionMode::Safe)?]
            }
            ReductionStrategy::FastLiteral => {
                vec![s_poly_reduction(ctx, sp, &b, &table, ReductionMode::Literal)?]
            }
        };
        for p in finished {
            debug_assert_eq!(p.birth, b.len() as u64 + 1, "birth stamps insertion order");
            let inserted = b.len();
            let is_zero = p.polynomial.is_zero();
            table.push(&p.polynomial);
            b.push(p);
            if is_zero {
                ctx.counter().count_pair_to_zero();
                continue;
            }
            ctx.counter().count_pair_kept();
            let mut fresh = 0u64;
            for q in 0..inserted {
                if b[q].polynomial.is_zero() {
                    continue;
                }
                pairs.push(make_critical_pair(&b, q, inserted)?);
                fresh += 1;
            }
            ctx.counter().count_pairs_generated(fresh);
        }
    }

    Ok(F5bOutcome { members: b, discarded })
}

/// The computed basis (nonzero polynomial parts) of [`f5b_run`].
pub fn f5b_basis(
    ctx: &Context,
    generators: &[Polynomial],
    strategy: ReductionStrategy,
) -> Result<Vec<Polynomial>> {
    Ok(f5b_run(ctx, generators, strategy)?.basis())
}
