//! The classical Buchberger algorithm with full normal-form reduction.
//!
//! This implementation deliberately omits every pair-discarding refinement
//! (no product or chain criterion): it processes each pair exactly once and
//! serves as the semantic oracle the signature-based algorithms are checked
//! against. Pairs are selected by smallest lcm under the context order, ties
//! by smallest index pair.

use crate::context::Context;
use crate::error::{domain, Result};
use crate::monomial::Monomial;
use crate::polynomial::{Polynomial, Term};
use std::cmp::Ordering;

/// S-polynomial `HC(g) * (t/HT(f)) * f - HC(f) * (t/HT(g)) * g` with
/// `t = lcm(HT(f), HT(g))`. Head terms cancel by construction.
pub fn spol(ctx: &Context, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let fh = f.head()?;
    let gh = g.head()?;
    let t = fh.monomial.lcm(&gh.monomial)?;
    let sf = t.div(&fh.monomial)?.expect("lcm divisible by both heads");
    let sg = t.div(&gh.monomial)?.expect("lcm divisible by both heads");
    let left = f.mul_term(ctx, &gh.coefficient, &sf)?;
    ctx.counter().add_field_ops(1); // negating the right-hand scale factor
    left.add_scaled(ctx, &fh.coefficient.neg(), &sg, g)
}

/// Full normal form of `h` modulo `basis`: repeatedly cancels the working
/// head against the first basis member (in list order) whose head divides it,
/// moving irreducible heads to the remainder. No term of the result is
/// divisible by any basis head. Zero members are skipped.
pub fn normal_form(ctx: &Context, h: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    let mut remainder: Vec<Term> = Vec::new();
    let mut work = h.clone();
    'outer: while !work.is_zero() {
        let head = work.head()?.clone();
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let gh = g.head()?;
            if let Some(v) = head.monomial.div(&gh.monomial)? {
                let c = head.coefficient.div(&gh.coefficient)?;
                ctx.counter().add_field_ops(2); // the division and the negation
                ctx.counter().count_reduction_step();
                let next = work.add_scaled(ctx, &c.neg(), &v, g)?;
                // the cancelled head strictly dominates whatever remains
                debug_assert!(
                    next.is_zero()
                        || ctx.cmp(next.head_monomial().unwrap(), &head.monomial)
                            == Ordering::Less
                );
                work = next;
                continue 'outer;
            }
        }
        remainder.push(head);
        work = work.tail();
    }
    // heads were moved in strictly descending order, so this is canonical
    Ok(Polynomial::from_sorted_terms(ctx, remainder))
}

/// Raw Buchberger loop. Returns a (generally unreduced) Gröbner basis that
/// contains the nonzero generators; use [`reduce_basis`] for the canonical
/// form. All-zero input is rejected.
pub fn buchberger_basis(ctx: &Context, generators: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut basis: Vec<Polynomial> = generators.iter().filter(|p| !p.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Err(domain("cannot compute a basis for the zero system"));
    }
    let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j, pair_lcm(&basis, i, j)?));
            ctx.counter().count_pairs_generated(1);
        }
    }
    while !pairs.is_empty() {
        let best = select_pair(ctx, &pairs);
        let (i, j, _) = pairs.remove(best);
        let s = spol(ctx, &basis[i], &basis[j])?;
        let h = normal_form(ctx, &s, &basis)?;
        if h.is_zero() {
            ctx.counter().count_pair_to_zero();
        } else {
            ctx.counter().count_pair_kept();
            let new = basis.len();
            for k in 0..new {
                pairs.push((k, new, basis[k].head_monomial()?.lcm(h.head_monomial()?)?));
                ctx.counter().count_pairs_generated(1);
            }
            basis.push(h);
        }
    }
    Ok(basis)
}

fn pair_lcm(basis: &[Polynomial], i: usize, j: usize) -> Result<Monomial> {
    basis[i].head_monomial()?.lcm(basis[j].head_monomial()?)
}

fn select_pair(ctx: &Context, pairs: &[(usize, usize, Monomial)]) -> usize {
    let mut best = 0;
    for k in 1..pairs.len() {
        let ord = ctx
            .cmp(&pairs[k].2, &pairs[best].2)
            .then_with(|| (pairs[k].0, pairs[k].1).cmp(&(pairs[best].0, pairs[best].1)));
        if ord == Ordering::Less {
            best = k;
        }
    }
    best
}

/// True iff every S-polynomial of the list reduces to zero modulo the list;
/// the Buchberger criterion, used across the crate as the Gröbner oracle.
pub fn is_groebner(ctx: &Context, basis: &[Polynomial]) -> Result<bool> {
    let nonzero: Vec<&Polynomial> = basis.iter().filter(|p| !p.is_zero()).collect();
    for j in 0..nonzero.len() {
        for i in 0..j {
            let s = spol(ctx, nonzero[i], nonzero[j])?;
            if !normal_form(ctx, &s, basis)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Canonicalizes a Gröbner basis: drops redundant members (head divisible by
/// another kept head), fully reduces each survivor against the others, makes
/// everything monic, and sorts by descending head term. The result is the
/// unique reduced Gröbner basis of the ideal.
pub fn reduce_basis(ctx: &Context, basis: &[Polynomial]) -> Result<Vec<Polynomial>> {
    debug_assert!(is_groebner(ctx, basis)?);
    let mut nonzero: Vec<Polynomial> = basis.iter().filter(|p| !p.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Err(domain("cannot reduce an empty basis"));
    }
    // ascending heads: any proper divisor sorts strictly lower, so one sweep
    // keeps exactly the minimal generators (first wins among equal heads)
    nonzero.sort_by(|a, b| {
        ctx.cmp(
            a.head_monomial().expect("nonzero"),
            b.head_monomial().expect("nonzero"),
        )
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    for p in nonzero {
        let head = p.head_monomial()?;
        let mut redundant = false;
        for kept in &minimal {
            if kept.head_monomial()?.divides(head)? {
                redundant = true;
                break;
            }
        }
        if !redundant {
            minimal.push(p);
        }
    }
    // tail-reduce each member against all the others; heads are pairwise
    // non-divisible so they survive, and one pass suffices
    for i in 0..minimal.len() {
        let owner = minimal[i].clone();
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        minimal[i] = normal_form(ctx, &owner, &others)?.monic(ctx)?;
    }
    minimal.sort_by(|a, b| {
        ctx.cmp(
            b.head_monomial().expect("nonzero"),
            a.head_monomial().expect("nonzero"),
        )
    });
    Ok(minimal)
}
