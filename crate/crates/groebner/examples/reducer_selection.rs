//! Picking reducers by their second monomial.
//!
//! The fast reduction keeps a table of (head, second monomial) per basis
//! member. Among all members whose head divides the target, it picks the one
//! whose shifted second monomial is smallest, so each step's new head is as
//! small as possible and chains of reductions stay short. This example shows
//! the selection on small hand-checkable inputs, then compares the safe and literal
//! bookkeeping modes on a full run.
//!
//! Run with: cargo run --example reducer_selection

use groebner::f5b::{f5b_basis, ReductionStrategy};
use groebner::fast_reduce::{reduction_sequence, ReducerTable};
use groebner::parse::parse_polynomial;
use groebner::systems::parse_bundled;
use groebner::{Context, Field, MonomialOrder};

fn main() -> groebner::Result<()> {
    let ctx = Context::new(vec!["x", "y", "z"], MonomialOrder::Lex, Field::Rational)?;
    let g1 = parse_polynomial(&ctx, "x^2 + y^2")?;
    let g2 = parse_polynomial(&ctx, "x*y + z^2")?;
    let h = parse_polynomial(&ctx, "x^2*y + z")?;
    let table = ReducerTable::for_polynomials(&[g1.clone(), g2.clone()]);

    println!("candidates for the head of h = {}:", h.format(&ctx));
    for (i, g) in [&g1, &g2].into_iter().enumerate() {
        println!("  (#{}) {}", i + 1, g.format(&ctx));
    }
    let chosen = reduction_sequence(&ctx, &h, &table)?;
    println!("chosen reducer: #{chosen}");
    println!("  #1 shifts its second monomial y^2 by u = y, giving y^3");
    println!("  #2 shifts its second monomial z^2 by u = x, giving x*z^2");
    println!("  y^3 < x*z^2 under lex, so #1 wins\n");

    // a member with a one-term polynomial has no second monomial; nothing can
    // beat it, because reducing by a monomial cancels the head outright
    let monomial = parse_polynomial(&ctx, "x*y")?;
    let table = ReducerTable::for_polynomials(&[g1.clone(), monomial]);
    let chosen = reduction_sequence(&ctx, &h, &table)?;
    println!("against {{x^2 + y^2, x*y}} the monomial member wins: #{chosen}");

    // index 0 means no head divides at all
    let table = ReducerTable::for_polynomials(&[parse_polynomial(&ctx, "z^3 + 1")?]);
    println!(
        "no divisor of x^2*y present: #{}\n",
        reduction_sequence(&ctx, &h, &table)?
    );

    // safe mode re-checks signatures before each step; literal mode trusts
    // the selection. On this input both reach the same reduced basis, but
    // they may charge different operation counts.
    let (ctx, gens) = parse_bundled("cyclic4")?;
    for (name, strategy) in [
        ("safe", ReductionStrategy::FastSafe),
        ("literal", ReductionStrategy::FastLiteral),
    ] {
        ctx.counter().reset();
        let basis = f5b_basis(&ctx, &gens, strategy)?;
        let counts = ctx.counter().snapshot();
        println!(
            "cyclic4, {name:<7} mode: {} members, {} field operations, {} reduction steps",
            basis.len(),
            counts.field_ops,
            counts.reduction_steps
        );
    }
    Ok(())
}
