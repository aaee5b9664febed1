//! The classical pair/reduce loop, step by step.
//!
//! Computes the basis of the parabola/hyperbola intersection with the plain
//! Buchberger algorithm: S-polynomial of the only initial pair, its normal
//! form, the raw basis, and the canonical reduced basis, with the operation
//! counter read along the way.
//!
//! Run with: cargo run --example buchberger_walkthrough

use groebner::buchberger::{buchberger_basis, is_groebner, normal_form, reduce_basis, spol};
use groebner::systems::parse_bundled;

fn main() -> groebner::Result<()> {
    let (ctx, gens) = parse_bundled("parabola_hyperbola")?;
    println!("generators (lex, x > y):");
    for g in &gens {
        println!("  {}", g.format(&ctx));
    }

    let sp = spol(&ctx, &gens[0], &gens[1])?;
    println!("\nS-polynomial of the pair: {}", sp.format(&ctx));
    let nf = normal_form(&ctx, &sp, &gens)?;
    println!("its normal form:          {}", nf.format(&ctx));

    ctx.counter().reset();
    let basis = buchberger_basis(&ctx, &gens)?;
    let counts = ctx.counter().snapshot();
    println!("\nraw basis after the loop:");
    for g in &basis {
        println!("  {}", g.format(&ctx));
    }
    println!(
        "counter: {} field operations, {} reduction steps, {} pairs",
        counts.field_ops, counts.reduction_steps, counts.pairs_generated
    );
    println!("is_groebner: {}", is_groebner(&ctx, &basis)?);

    let reduced = reduce_basis(&ctx, &basis)?;
    println!("\nreduced basis (monic, interreduced, sorted by head):");
    for g in &reduced {
        println!("  {}", g.format(&ctx));
    }

    // the same loop over a prime field, on a cyclic system
    let (ctx, gens) = parse_bundled("cyclic3")?;
    ctx.counter().reset();
    let reduced = reduce_basis(&ctx, &buchberger_basis(&ctx, &gens)?)?;
    let counts = ctx.counter().snapshot();
    println!("\ncyclic3 over gf 32003, grevlex:");
    for g in &reduced {
        println!("  {}", g.format(&ctx));
    }
    println!(
        "counter: {} field operations, {} reduction steps, {} pairs generated",
        counts.field_ops, counts.reduction_steps, counts.pairs_generated
    );
    Ok(())
}
