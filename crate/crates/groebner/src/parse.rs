//! Text format for polynomial systems.
//!
//! A system file has three header lines followed by one polynomial per line:
//!
//! ```text
//! # comments run from '#' to end of line
//! vars: x, y
//! order: lex
//! field: q
//! x^2*y - 1
//! x*y + 3
//! ```
//!
//! Headers must appear in the order `vars:`, `order:`, `field:`. Variable
//! declaration order is order precedence (the first variable is the largest).
//! `order:` is one of `lex`, `grlex`, `grevlex`. `field:` is `q` for the
//! rationals or `gf <p>` for a prime field. Polynomials are built from `+ - * ^`
//! with integer coefficients and explicit `*` between factors; blank lines and
//! comments may appear anywhere.

use num::BigInt;
use std::fmt::Write as _;

use crate::context::Context;
use crate::error::{domain, Error, Result};
use crate::field::{Field, FieldElement};
use crate::monomial::{Monomial, MonomialOrder};
use crate::polynomial::Polynomial;

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn is_valid_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if is_ident_start(c) => chars.all(is_ident_char),
        _ => false,
    }
}

/// Character scanner over a single logical line, tracking 1-based columns.
struct Scanner {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl Scanner {
    fn new(text: &str, line: usize) -> Scanner {
        Scanner {
            chars: text.chars().collect(),
            pos: 0,
            line,
        }
    }

    fn col(&self) -> usize {
        self.pos + 1
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn ident(&mut self) -> String {
        let mut out = String::new();
        while matches!(self.peek(), Some(c) if is_ident_char(c)) {
            out.push(self.bump().unwrap());
        }
        out
    }

    fn digits(&mut self) -> String {
        let mut out = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            out.push(self.bump().unwrap());
        }
        out
    }
}

/// Parses a single polynomial over the context's variables and field.
///
/// The text is one polynomial expression; terms are joined by `+` or `-`,
/// factors within a term by `*`, and exponents written `x^3`. Unknown
/// identifiers are rejected with their position.
pub fn parse_polynomial(ctx: &Context, text: &str) -> Result<Polynomial> {
    parse_polynomial_line(ctx, text, 1)
}

fn parse_polynomial_line(ctx: &Context, text: &str, line: usize) -> Result<Polynomial> {
    let mut s = Scanner::new(text, line);
    let mut terms: Vec<(FieldElement, Monomial)> = Vec::new();
    s.skip_ws();
    if s.peek().is_none() {
        return Err(parse_err(line, s.col(), "empty polynomial"));
    }
    let mut negative = match s.peek() {
        Some('+') => {
            s.bump();
            false
        }
        Some('-') => {
            s.bump();
            true
        }
        _ => false,
    };
    loop {
        terms.push(parse_term(ctx, &mut s, negative)?);
        s.skip_ws();
        match s.peek() {
            None => break,
            Some('+') => {
                s.bump();
                negative = false;
            }
            Some('-') => {
                s.bump();
                negative = true;
            }
            Some(c) => {
                return Err(parse_err(
                    s.line,
                    s.col(),
                    format!("expected '+' or '-' between terms, found '{c}'"),
                ));
            }
        }
    }
    Polynomial::from_terms(ctx, terms)
}

fn parse_term(ctx: &Context, s: &mut Scanner, negative: bool) -> Result<(FieldElement, Monomial)> {
    let mut coeff: BigInt = if negative { BigInt::from(-1) } else { BigInt::from(1) };
    let mut exps = vec![0u32; ctx.n_vars()];
    loop {
        s.skip_ws();
        let col = s.col();
        match s.peek() {
            Some(c) if c.is_ascii_digit() => {
                let digits = s.digits();
                let value: BigInt = digits.parse().expect("digit run is a valid integer");
                coeff *= value;
                s.skip_ws();
                if s.peek() == Some('^') {
                    return Err(parse_err(
                        s.line,
                        s.col(),
                        "'^' may only follow a variable",
                    ));
                }
            }
            Some(c) if is_ident_start(c) => {
                let name = s.ident();
                let Some(idx) = ctx.variable_index(&name) else {
                    return Err(parse_err(s.line, col, format!("unknown variable '{name}'")));
                };
                let mut exp: u32 = 1;
                s.skip_ws();
                if s.peek() == Some('^') {
                    s.bump();
                    s.skip_ws();
                    let ecol = s.col();
                    let digits = s.digits();
                    if digits.is_empty() {
                        return Err(parse_err(s.line, ecol, "expected an integer exponent after '^'"));
                    }
                    exp = digits
                        .parse::<u32>()
                        .map_err(|_| parse_err(s.line, ecol, "exponent does not fit in 32 bits"))?;
                }
                exps[idx] = exps[idx]
                    .checked_add(exp)
                    .ok_or_else(|| parse_err(s.line, col, "exponent does not fit in 32 bits"))?;
            }
            Some(c) => {
                return Err(parse_err(
                    s.line,
                    col,
                    format!("expected a coefficient or variable, found '{c}'"),
                ));
            }
            None => {
                return Err(parse_err(s.line, col, "expected a coefficient or variable"));
            }
        }
        s.skip_ws();
        if s.peek() == Some('*') {
            s.bump();
        } else {
            break;
        }
    }
    Ok((ctx.field().from_bigint(&coeff), Monomial::new(exps)))
}

/// Parses a field name: `q` or `gf <p>` with `p` prime.
pub fn parse_field_name(s: &str) -> Result<Field> {
    let s = s.trim();
    if s == "q" {
        return Ok(Field::Rational);
    }
    if let Some(rest) = s.strip_prefix("gf") {
        let digits = rest.trim();
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(domain(format!("invalid prime field modulus '{digits}'")));
        }
        let p: u64 = digits
            .parse()
            .map_err(|_| domain(format!("modulus '{digits}' does not fit in 64 bits")))?;
        return Field::prime(p);
    }
    Err(domain(format!("unknown field '{s}' (expected 'q' or 'gf <p>')")))
}

/// Parses a system file into a computation context and its polynomials.
pub fn parse_system(text: &str) -> Result<(Context, Vec<Polynomial>)> {
    parse_system_with_overrides(text, None, None)
}

/// Parses a system file, optionally overriding the declared order or field.
///
/// Overrides are applied before polynomials are canonicalized, so the returned
/// polynomials are sorted under the effective order and their coefficients
/// live in the effective field. The file's own header lines must still be
/// well-formed.
pub fn parse_system_with_overrides(
    text: &str,
    order_override: Option<MonomialOrder>,
    field_override: Option<Field>,
) -> Result<(Context, Vec<Polynomial>)> {
    let mut vars: Option<(Vec<String>, usize)> = None;
    let mut order: Option<MonomialOrder> = None;
    let mut field_seen = false;
    let mut ctx: Option<Context> = None;
    let mut polys: Vec<Polynomial> = Vec::new();
    let mut last_line = 0usize;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let content = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        if content.trim().is_empty() {
            continue;
        }
        let col = content.len() - content.trim_start().len() + 1;
        let trimmed = content.trim();

        if vars.is_none() {
            let Some(rest) = trimmed.strip_prefix("vars:") else {
                return Err(parse_err(line_no, col, "expected 'vars:' header"));
            };
            let names: Vec<String> = rest.split(',').map(|part| part.trim().to_string()).collect();
            for name in &names {
                if !is_valid_ident(name) {
                    return Err(parse_err(
                        line_no,
                        col,
                        format!("invalid variable name '{name}'"),
                    ));
                }
            }
            vars = Some((names, line_no));
            continue;
        }
        if order.is_none() {
            let Some(rest) = trimmed.strip_prefix("order:") else {
                return Err(parse_err(line_no, col, "expected 'order:' header"));
            };
            let name = rest.trim();
            let parsed = MonomialOrder::from_name(name).ok_or_else(|| {
                parse_err(
                    line_no,
                    col,
                    format!("unknown order '{name}' (expected lex, grlex, or grevlex)"),
                )
            })?;
            order = Some(parsed);
            continue;
        }
        if !field_seen {
            let Some(rest) = trimmed.strip_prefix("field:") else {
                return Err(parse_err(line_no, col, "expected 'field:' header"));
            };
            let file_field = match parse_field_name(rest) {
                Ok(f) => f,
                Err(Error::Domain(msg)) => return Err(parse_err(line_no, col, msg)),
                Err(e) => return Err(e),
            };
            field_seen = true;
            let (names, vars_line) = vars.clone().expect("vars header parsed");
            let use_order = order_override.unwrap_or_else(|| order.expect("order header parsed"));
            let use_field = field_override.clone().unwrap_or(file_field);
            ctx = Some(match Context::new(names, use_order, use_field) {
                Ok(c) => c,
                Err(e) => return Err(parse_err(vars_line, 1, e.to_string())),
            });
            continue;
        }

        let ctx_ref = ctx.as_ref().expect("context built after headers");
        let p = parse_polynomial_line(ctx_ref, content, line_no)?;
        if p.is_zero() {
            return Err(parse_err(line_no, col, "polynomial line reduces to zero"));
        }
        polys.push(p);
    }

    let Some(ctx) = ctx else {
        return Err(parse_err(
            last_line + 1,
            1,
            "incomplete system: expected 'vars:', 'order:', and 'field:' headers",
        ));
    };
    if polys.is_empty() {
        return Err(parse_err(last_line + 1, 1, "no polynomials in system"));
    }
    Ok((ctx, polys))
}

/// Prints a system in the file format, so that parsing the output recovers it.
///
/// Only integer coefficients are representable; a rational-coefficient
/// polynomial with a non-trivial denominator is rejected, as is the zero
/// polynomial (the format has no zero lines).
pub fn format_system(ctx: &Context, polys: &[Polynomial]) -> Result<String> {
    let mut out = String::new();
    let _ = writeln!(out, "vars: {}", ctx.variables().join(", "));
    let _ = writeln!(out, "order: {}", ctx.order().name());
    let _ = writeln!(out, "field: {}", ctx.field());
    for p in polys {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        for term in p.terms() {
            if let FieldElement::Rational(r) = &term.coefficient {
                if !r.is_integer() {
                    return Err(domain(
                        "system file coefficients must be integers; found a non-integer rational",
                    ));
                }
            }
        }
        let _ = writeln!(out, "{}", p.format(ctx));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;

    fn ctx_lex_q() -> Context {
        Context::new(vec!["x", "y"], MonomialOrder::Lex, Field::Rational).unwrap()
    }

    #[test]
    fn parses_single_polynomial_file() {
        let (ctx, polys) = parse_system("vars: x, y\norder: lex\nfield: q\nx^2*y - 1\n").unwrap();
        assert_eq!(ctx.n_vars(), 2);
        assert_eq!(ctx.order(), MonomialOrder::Lex);
        assert_eq!(ctx.field(), Field::Rational);
        assert_eq!(polys.len(), 1);
        let head = polys[0].head_monomial().unwrap();
        assert_eq!(head.exponents(), &[2, 1]);
        assert_eq!(polys[0].len(), 2);
    }

    #[test]
    fn rejects_composite_modulus() {
        let err = parse_system("vars: x\norder: lex\nfield: gf 4\nx\n").unwrap_err();
        assert!(matches!(err, Error::NonPrimeModulus(4)));
    }

    #[test]
    fn rejects_unknown_variable_with_position() {
        let err = parse_system("vars: x, y\norder: lex\nfield: q\nx + z\n").unwrap_err();
        match err {
            Error::Parse { line, column, message } => {
                assert_eq!(line, 4);
                assert_eq!(column, 5);
                assert!(message.contains('z'), "message should name z: {message}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn accepts_comments_and_blank_lines_anywhere() {
        let src = "# leading comment\n\nvars: x, y # trailing comment\n\n# between\norder: grlex\nfield: gf 32003\n\nx*y + 1 # poly comment\n\n# done\n";
        let (ctx, polys) = parse_system(src).unwrap();
        assert_eq!(ctx.order(), MonomialOrder::GrLex);
        assert_eq!(polys.len(), 1);
    }

    #[test]
    fn header_order_is_enforced() {
        let err = parse_system("order: lex\nvars: x\nfield: q\nx\n").unwrap_err();
        match err {
            Error::Parse { line, message, .. } => {
                assert_eq!(line, 1);
                assert!(message.contains("vars"), "{message}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn missing_polynomials_is_an_error() {
        let err = parse_system("vars: x\norder: lex\nfield: q\n").unwrap_err();
        match err {
            Error::Parse { message, .. } => assert!(message.contains("no polynomials"), "{message}"),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn coefficient_arithmetic_in_terms() {
        let ctx = ctx_lex_q();
        let p = parse_polynomial(&ctx, "2*x*3 - y").unwrap();
        assert_eq!(p.format(&ctx), "6*x - y");
        let p = parse_polynomial(&ctx, "-x + 4").unwrap();
        assert_eq!(p.format(&ctx), "-x + 4");
        let p = parse_polynomial(&ctx, "x*x").unwrap();
        assert_eq!(p.format(&ctx), "x^2");
        let p = parse_polynomial(&ctx, "x^2*y^3*x").unwrap();
        assert_eq!(p.head_monomial().unwrap().exponents(), &[3, 3]);
    }

    #[test]
    fn like_terms_merge_and_cancel() {
        let ctx = ctx_lex_q();
        let p = parse_polynomial(&ctx, "x + x").unwrap();
        assert_eq!(p.format(&ctx), "2*x");
        let p = parse_polynomial(&ctx, "x - x").unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn zero_polynomial_lines_rejected_in_files() {
        for body in ["0", "x - x"] {
            let src = format!("vars: x\norder: lex\nfield: q\n{body}\n");
            let err = parse_system(&src).unwrap_err();
            match err {
                Error::Parse { line, message, .. } => {
                    assert_eq!(line, 4);
                    assert!(message.contains("zero"), "{message}");
                }
                other => panic!("expected parse error, got {other:?}"),
            }
        }
    }

    #[test]
    fn syntax_errors_carry_position() {
        let ctx = ctx_lex_q();
        let err = parse_polynomial(&ctx, "x + + 2").unwrap_err();
        assert!(matches!(err, Error::Parse { column: 5, .. }), "{err:?}");
        let err = parse_polynomial(&ctx, "x^2^3").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err:?}");
        let err = parse_polynomial(&ctx, "2^3").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err:?}");
        let err = parse_polynomial(&ctx, "x y").unwrap_err();
        assert!(matches!(err, Error::Parse { column: 3, .. }), "{err:?}");
        let err = parse_polynomial(&ctx, "x ^ 4294967296").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err:?}");
        let err = parse_polynomial(&ctx, "x *").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err:?}");
        let err = parse_polynomial(&ctx, "").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err:?}");
    }

    #[test]
    fn big_integer_coefficients_stay_exact() {
        let ctx = ctx_lex_q();
        let p = parse_polynomial(&ctx, "123456789012345678901234567890*x").unwrap();
        match &p.head().unwrap().coefficient {
            FieldElement::Rational(r) => {
                assert_eq!(r, &"123456789012345678901234567890".parse::<BigRational>().unwrap());
            }
            other => panic!("expected rational, got {other:?}"),
        }
    }

    #[test]
    fn prime_field_coefficients_reduce_mod_p() {
        let ctx = Context::new(vec!["x"], MonomialOrder::Lex, Field::prime(7).unwrap()).unwrap();
        let p = parse_polynomial(&ctx, "9*x - 1").unwrap();
        assert_eq!(p.format(&ctx), "2*x + 6");
        let p = parse_polynomial(&ctx, "7*x + 1").unwrap();
        assert_eq!(p.format(&ctx), "1");
    }

    #[test]
    fn overrides_replace_order_and_field() {
        let src = "vars: x, y\norder: lex\nfield: q\nx + y^3\n";
        let (ctx, polys) = parse_system_with_overrides(src, Some(MonomialOrder::GrLex), None).unwrap();
        assert_eq!(ctx.order(), MonomialOrder::GrLex);
        assert_eq!(polys[0].head_monomial().unwrap().exponents(), &[0, 3]);

        let (ctx, polys) =
            parse_system_with_overrides(src, None, Some(Field::prime(5).unwrap())).unwrap();
        assert_eq!(ctx.field(), Field::prime(5).unwrap());
        assert_eq!(polys[0].head_monomial().unwrap().exponents(), &[1, 0]);
    }

    #[test]
    fn field_name_parsing() {
        assert_eq!(parse_field_name("q").unwrap(), Field::Rational);
        assert_eq!(parse_field_name("gf 32003").unwrap(), Field::prime(32003).unwrap());
        assert_eq!(parse_field_name("gf32003").unwrap(), Field::prime(32003).unwrap());
        assert!(parse_field_name("zz").is_err());
        assert!(matches!(parse_field_name("gf 6"), Err(Error::NonPrimeModulus(6))));
        assert!(parse_field_name("gf 99999999999999999999").is_err());
    }

    #[test]
    fn format_system_round_trips() {
        let sources = [
            "vars: x, y\norder: lex\nfield: q\nx^2*y - 1\nx*y + 3\n",
            "vars: x, y, z\norder: grevlex\nfield: gf 32003\nx*y*z - 1\nx + y + z\n",
            "vars: a\norder: grlex\nfield: q\n-3*a^5 + a - 12\n",
        ];
        for src in sources {
            let (ctx, polys) = parse_system(src).unwrap();
            let printed = format_system(&ctx, &polys).unwrap();
            let (ctx2, polys2) = parse_system(&printed).unwrap();
            assert_eq!(ctx.variables(), ctx2.variables());
            assert_eq!(ctx.order(), ctx2.order());
            assert_eq!(ctx.field(), ctx2.field());
            assert_eq!(polys, polys2, "round trip changed the system for {src:?}");
            let reprinted = format_system(&ctx2, &polys2).unwrap();
            assert_eq!(printed, reprinted);
        }
    }

    #[test]
    fn format_system_rejects_non_integer_coefficients() {
        let ctx = ctx_lex_q();
        let half = FieldElement::Rational(BigRational::new(1.into(), 2.into()));
        let p = Polynomial::from_terms(&ctx, vec![(half, ctx.var(0).unwrap())]).unwrap();
        assert!(format_system(&ctx, &[p]).is_err());
    }
}
