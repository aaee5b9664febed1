//! Exact polynomial arithmetic and monomial orders.
//!
//! Parses a few polynomials over the rationals and over a prime field, shows
//! how the three supported orders disagree about head terms, and counts
//! monomials below a degree cap.
//!
//! Run with: cargo run --example orders_and_arithmetic

use num::BigUint;

use groebner::parse::parse_polynomial;
use groebner::{count_monomials, Context, Field, MonomialOrder};

fn main() -> groebner::Result<()> {
    let source = "x^3 + x^2*y*z + x*y^3";
    println!("input: {source}\n");

    // terms print in descending order, so the first one is the head: lex
    // favors raw x power, grlex breaks the degree-4 tie toward x^2*y*z, and
    // grevlex breaks it the other way
    println!("canonical form by order:");
    for order in [MonomialOrder::Lex, MonomialOrder::GrLex, MonomialOrder::GrevLex] {
        let ctx = Context::new(vec!["x", "y", "z"], order, Field::Rational)?;
        let poly = parse_polynomial(&ctx, source)?;
        println!("  {:<8} {}", order.name(), poly.format(&ctx));
    }

    // coefficients never leave exact arithmetic: a rational run keeps full
    // integers, a prime-field run reduces them
    let big = "123456789123456789123456789*x - 1";
    let ctx = Context::new(vec!["x"], MonomialOrder::Lex, Field::Rational)?;
    println!("\nover q:       {}", parse_polynomial(&ctx, big)?.format(&ctx));
    let ctx = Context::new(vec!["x"], MonomialOrder::Lex, Field::prime(32003)?)?;
    println!("over gf 32003: {}", parse_polynomial(&ctx, big)?.format(&ctx));

    // like terms merge during parsing, including cancellations
    let ctx = Context::new(vec!["x", "y"], MonomialOrder::GrevLex, Field::Rational)?;
    for source in ["2*x*3*y - x*y", "x*y - y*x", "x*x*x - y"] {
        println!("\n{} -> {}", source, parse_polynomial(&ctx, source)?.format(&ctx));
    }

    println!("\nmonomials of degree <= D in n variables:");
    println!("{:>4} {:>8} {:>8} {:>8}", "D", "n=1", "n=2", "n=3");
    for d in [0u32, 1, 2, 5, 10] {
        let row: Vec<String> = (1..=3)
            .map(|n| count_monomials(&BigUint::from(d), n).map(|c| c.to_string()))
            .collect::<groebner::Result<_>>()?;
        println!("{:>4} {:>8} {:>8} {:>8}", d, row[0], row[1], row[2]);
    }
    Ok(())
}
