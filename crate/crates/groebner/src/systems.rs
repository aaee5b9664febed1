//! Benchmark systems bundled with the crate, stored in the same text format
//! the command line reads from files.

use crate::context::Context;
use crate::error::{domain, Result};
use crate::parse::parse_system;
use crate::polynomial::Polynomial;

/// A named input system in source form.
#[derive(Clone, Copy, Debug)]
pub struct BundledSystem {
    pub name: &'static str,
    pub description: &'static str,
    pub text: &'static str,
}

/// Everything shipped with the crate, smallest first.
pub const SYSTEMS: [BundledSystem; 7] = [
    BundledSystem {
        name: "line_hyperbola",
        description: "line meets hyperbola, 2 vars, lex over q",
        text: include_str!("../systems/line_hyperbola.sys"),
    },
    BundledSystem {
        name: "parabola_hyperbola",
        description: "parabola meets hyperbola, 2 vars, lex over q",
        text: include_str!("../systems/parabola_hyperbola.sys"),
    },
    BundledSystem {
        name: "cyclic3",
        description: "cyclic 3-roots, grevlex over gf 32003",
        text: include_str!("../systems/cyclic3.sys"),
    },
    BundledSystem {
        name: "cyclic4",
        description: "cyclic 4-roots, grevlex over gf 32003",
        text: include_str!("../systems/cyclic4.sys"),
    },
    BundledSystem {
        name: "cyclic5",
        description: "cyclic 5-roots, grevlex over gf 32003",
        text: include_str!("../systems/cyclic5.sys"),
    },
    BundledSystem {
        name: "katsura3",
        description: "katsura 3 magnetization, 4 vars, grevlex over gf 32003",
        text: include_str!("../systems/katsura3.sys"),
    },
    BundledSystem {
        name: "katsura4",
        description: "katsura 4 magnetization, 5 vars, grevlex over gf 32003",
        text: include_str!("../systems/katsura4.sys"),
    },
];

/// Looks a bundled system up by name.
pub fn bundled(name: &str) -> Option<&'static BundledSystem> {
    SYSTEMS.iter().find(|s| s.name == name)
}

/// Parses a bundled system by name.
pub fn parse_bundled(name: &str) -> Result<(Context, Vec<Polynomial>)> {
    let system = bundled(name).ok_or_else(|| {
        let names: Vec<&str> = SYSTEMS.iter().map(|s| s.name).collect();
        domain(format!(
            "no bundled system named '{name}' (available: {})",
            names.join(", ")
        ))
    })?;
    parse_system(system.text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::buchberger::is_groebner;
    use crate::f5b::ReductionStrategy;
    use crate::field::Field;
    use crate::monomial::MonomialOrder;
    use crate::report::{run, Algorithm};
    use crate::fast_reduce::ReductionMode;

    #[test]
    fn every_bundled_system_parses() {
        for system in &SYSTEMS {
            let (ctx, polys) = parse_bundled(system.name).unwrap();
            assert!(!polys.is_empty(), "{}", system.name);
            assert!(ctx.n_vars() >= 2, "{}", system.name);
        }
    }

    #[test]
    fn bundled_lookup() {
        assert!(bundled("cyclic4").is_some());
        assert!(bundled("cyclic9000").is_none());
        assert!(parse_bundled("cyclic9000").is_err());
    }

    #[test]
    fn shapes_match_their_names() {
        let (ctx, polys) = parse_bundled("cyclic5").unwrap();
        assert_eq!(ctx.n_vars(), 5);
        assert_eq!(polys.len(), 5);
        assert_eq!(ctx.order(), MonomialOrder::GrevLex);
        assert_eq!(ctx.field(), Field::prime(32003).unwrap());
        let degrees: Vec<u64> = polys.iter().map(|p| p.total_degree().unwrap()).collect();
        assert_eq!(degrees, vec![1, 2, 3, 4, 5]);

        let (ctx, polys) = parse_bundled("katsura4").unwrap();
        assert_eq!(ctx.n_vars(), 5);
        assert_eq!(polys.len(), 5);
        let degrees: Vec<u64> = polys.iter().map(|p| p.total_degree().unwrap()).collect();
        assert_eq!(degrees, vec![1, 2, 2, 2, 2]);
    }

    #[test]
    fn cyclic3_basis_checks_out_for_every_algorithm() {
        let (ctx, gens) = parse_bundled("cyclic3").unwrap();
        let mut bases = Vec::new();
        for algorithm in Algorithm::ALL {
            let report = run(&ctx, &gens, algorithm, ReductionMode::Safe).unwrap();
            bases.push(report.basis);
        }
        assert_eq!(bases[0], bases[1]);
        assert_eq!(bases[1], bases[2]);

        let basis = crate::f5b::f5b_basis(&ctx, &gens, ReductionStrategy::FastSafe).unwrap();
        assert!(is_groebner(&ctx, &basis).unwrap());
    }

    #[test]
    fn katsura3_solves_over_the_prime_field() {
        let (ctx, gens) = parse_bundled("katsura3").unwrap();
        let report = run(&ctx, &gens, Algorithm::F5bFast, ReductionMode::Safe).unwrap();
        assert!(report.counts.pairs_conserved());
        let basis: Vec<crate::polynomial::Polynomial> = report
            .basis
            .iter()
            .map(|s| crate::parse::parse_polynomial(&ctx, s).unwrap())
            .collect();
        assert!(is_groebner(&ctx, &basis).unwrap());
    }
}
