//! Closed-form cost model for the three basis algorithms.
//!
//! The model counts ground-field operations as a polynomial in N, the number
//! of monomials of degree at most D in n variables, where D is the a-priori
//! degree cap of the computation. Everything here is exact rational
//! arithmetic; nothing is ever rounded. The evaluators are transcriptions of
//! the analytic model, kept verbatim even where a coefficient looks odd, so
//! measured instrumentation can be compared against the model as published.
//! The model assumes m < N; evaluating outside that domain is permitted (the
//! formulas are still polynomials) and [`CostModelInput::in_model_domain`]
//! reports whether the assumption holds.

use num::{BigInt, BigRational, BigUint, One, Zero};

use crate::context::Context;
use crate::error::{domain, Result};
use crate::monomial::count_monomials;
use crate::polynomial::{degree_bound, Polynomial};

/// The model parameters: m generators, n variables, the degree cap D, and
/// N = C(n + D, n), the monomial count the model is polynomial in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CostModelInput {
    m: u64,
    n: u64,
    degree_cap: BigUint,
    monomial_count: BigUint,
}

impl CostModelInput {
    pub fn new(m: u64, n: u64, degree_cap: BigUint) -> Result<CostModelInput> {
        if m == 0 {
            return Err(domain("the cost model needs at least one generator"));
        }
        let monomial_count = count_monomials(&degree_cap, n)?;
        Ok(CostModelInput { m, n, degree_cap, monomial_count })
    }

    /// Derives the parameters of a concrete system: m = generator count,
    /// n from the context, D from [`degree_bound`].
    pub fn for_system(ctx: &Context, polys: &[Polynomial]) -> Result<CostModelInput> {
        let degree_cap = degree_bound(polys)?;
        CostModelInput::new(polys.len() as u64, ctx.n_vars() as u64, degree_cap)
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn degree_cap(&self) -> &BigUint {
        &self.degree_cap
    }

    pub fn monomial_count(&self) -> &BigUint {
        &self.monomial_count
    }

    /// The model's derivations assume m < N; outside that range the
    /// polynomials still evaluate but estimate nothing.
    pub fn in_model_domain(&self) -> bool {
        BigUint::from(self.m) < self.monomial_count
    }

    fn big_n(&self) -> BigInt {
        BigInt::from(self.monomial_count.clone())
    }
}

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn big(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Evaluates a polynomial given by descending-power coefficients.
fn horner(coeffs: &[BigRational], x: &BigInt) -> BigRational {
    let x = BigRational::from_integer(x.clone());
    let mut acc = BigRational::zero();
    for c in coeffs {
        acc = acc * &x + c;
    }
    acc
}

/// Total-cost polynomial for the plain Buchberger loop, evaluated at raw
/// (m, n, N). See [`buchberger_cost`] for the wrapped form.
pub fn buchberger_cost_at(m: u64, n: u64, monomials: &BigInt) -> BigRational {
    let (m, n) = (big(m), big(n));
    let mn = &m * &n;
    let m2n = &m * &mn;
    let c5 = rat(3, 2) * &n;
    let c4 = BigRational::one();
    let c3 = rat(2, 1) * &mn - rat(1, 2) * &n + rat(7, 1);
    let c2 = -&m2n - rat(3, 2) * &n - rat(3, 2);
    let c1 = -rat(1, 2) * &m2n - &mn - rat(3, 2) * &n - rat(1, 2);
    horner(&[c5, c4, c3, c2, c1, BigRational::zero()], monomials)
}

/// Total-cost polynomial for the signature-based loop with the step-by-step
/// reduction driver, at raw (m, n, N).
pub fn f5b_cost_at(m: u64, n: u64, monomials: &BigInt) -> BigRational {
    let (m, n) = (big(m), big(n));
    let mn = &m * &n;
    let m2 = &m * &m;
    let m2n = &m2 * &n;
    let m3 = &m2 * &m;
    let m3n = &m3 * &n;
    let c5 = rat(2, 3) * &n;
    let c4 = &mn + rat(14, 3) * &n + rat(2, 3);
    let c3 = -&m2n + &mn + &m + rat(11, 6) * &n + rat(2, 1);
    let c2 = rat(10, 3) * &m3n - rat(3, 1) * &m2n - &m2 + rat(14, 3) * &mn + rat(2, 1) * &m
        - rat(16, 3) * &n
        - rat(2, 3);
    let c1 = -rat(2, 3) * &m3n - rat(2, 3) * &m3 + &m2n + rat(17, 6) * &mn + rat(8, 3) * &m
        - rat(11, 2) * &n
        - rat(2, 1);
    let c0 = -rat(11, 2) * &m2n - rat(4, 1) * &m2 + rat(7, 2) * &mn + rat(2, 1) * &m;
    horner(&[c5, c4, c3, c2, c1, c0], monomials)
}

/// Total-cost polynomial for the signature-based loop with second-monomial
/// reducer selection, at raw (m, n, N). One degree lower in N than the other
/// two.
pub fn f5b_fast_cost_at(m: u64, n: u64, monomials: &BigInt) -> BigRational {
    let (m, n) = (big(m), big(n));
    let mn = &m * &n;
    let m2 = &m * &m;
    let m2n = &m2 * &n;
    let c4 = &mn + rat(4, 1) * &n;
    let c3 = -&m2n + &mn + &m + rat(15, 2) * &n + rat(31, 1);
    let c2 = -rat(3, 1) * &m2n - &m2 + rat(5, 1) * &mn - rat(5, 1) * &n - rat(1, 1);
    let c1 = -rat(7, 1) * &m2n + rat(10, 1) * &mn - &m2 - &m - rat(2, 1) * &n - rat(2, 1);
    let c0 = rat(4, 1) * &m2n - rat(2, 1) * &m2 + rat(2, 1) * &m;
    horner(&[c4, c3, c2, c1, c0], monomials)
}

pub fn buchberger_cost(input: &CostModelInput) -> BigRational {
    buchberger_cost_at(input.m, input.n, &input.big_n())
}

pub fn f5b_cost(input: &CostModelInput) -> BigRational {
    f5b_cost_at(input.m, input.n, &input.big_n())
}

pub fn f5b_fast_cost(input: &CostModelInput) -> BigRational {
    f5b_fast_cost_at(input.m, input.n, &input.big_n())
}

/// Dominant term of [`buchberger_cost`]: coefficient and N-power.
pub fn buchberger_cost_leading(_m: u64, n: u64) -> (BigRational, u32) {
    (rat(3, 2) * big(n), 5)
}

/// Dominant term of [`f5b_cost`]: coefficient and N-power.
pub fn f5b_cost_leading(_m: u64, n: u64) -> (BigRational, u32) {
    (rat(2, 3) * big(n), 5)
}

/// Dominant term of [`f5b_fast_cost`]: coefficient and N-power. The full
/// polynomial's N^4 coefficient is mn + 4n; this keeps its m-dominant part
/// mn, so the quotient cost / (mn N^4) tends to 1 only when m and N both
/// grow.
pub fn f5b_fast_cost_leading(m: u64, n: u64) -> (BigRational, u32) {
    (big(m) * big(n), 4)
}

/// Per-loop cost of the signature-safe step-by-step reduction, quadratic in
/// the tracked-list size B.
pub fn f5_reduction_cost_at(m: u64, n: u64, monomials: &BigInt, b_size: u64) -> BigRational {
    let (m, n) = (big(m), big(n));
    let nn = BigRational::from_integer(monomials.clone());
    let nn2 = &nn * &nn;
    let nn3 = &nn2 * &nn;
    let b = big(b_size);
    let b2 = &b * &b;
    let mn = &m * &n;
    (rat(2, 1) * &n * &nn2 + (rat(2, 1) * &n + rat(2, 1)) * &nn) * &b2
        + (rat(4, 1) * &n * &nn2 + rat(7, 1) * &n * &nn) * &b
        + (&mn + &n) * &nn3
        + (&mn + &m + rat(1, 1)) * &nn2
}

/// Per-loop cost of the second-monomial-selection reduction, linear in the
/// tracked-list size B.
pub fn fast_reduction_cost_at(m: u64, n: u64, monomials: &BigInt, b_size: u64) -> BigRational {
    let (m, n) = (big(m), big(n));
    let nn = BigRational::from_integer(monomials.clone());
    let nn2 = &nn * &nn;
    let nn3 = &nn2 * &nn;
    let b = big(b_size);
    let mn = &m * &n;
    (rat(2, 1) * &n * &nn2 + rat(7, 1) * &n * &nn) * &b
        + (&mn + &n) * &nn3
        + (&mn + &m + rat(2, 1) * &n + rat(1, 1)) * &nn2
        + (&n + rat(2, 1)) * &nn
}

pub fn f5_reduction_cost(input: &CostModelInput, b_size: u64) -> BigRational {
    f5_reduction_cost_at(input.m, input.n, &input.big_n(), b_size)
}

pub fn fast_reduction_cost(input: &CostModelInput, b_size: u64) -> BigRational {
    fast_reduction_cost_at(input.m, input.n, &input.big_n(), b_size)
}

/// One state of the pair-count simulation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairCountStep {
    pub basis_size: u64,
    pub pair_count: u64,
}

/// Full trace of the pair-count model: the state before each loop iteration
/// plus the final empty state, and the total loop count.
///
/// `total_loops` counts the drain phase by outstanding pairs, which is what
/// the recurrence actually produces. `alternate_total_loops` counts the drain
/// phase by final basis size instead; the model's symbols can be read either
/// way, so both totals are exposed.
#[derive(Clone, Debug)]
pub struct PairCountTrace {
    pub steps: Vec<PairCountStep>,
    pub growth_steps: u64,
    pub total_loops: u64,
    pub alternate_total_loops: u64,
}

/// Iterates the pair-count model: starting from m generators and C(m, 2)
/// pairs, each growth-phase loop consumes one pair and creates one pair per
/// existing member (net change: members before insertion, minus one), until
/// the basis holds `target` members; after that each loop consumes one pair
/// until none remain. Requires 1 <= m < target.
pub fn simulate_pair_counts(m: u64, target: u64) -> Result<PairCountTrace> {
    if m == 0 {
        return Err(domain("the pair-count model needs at least one generator"));
    }
    if m >= target {
        return Err(domain(
            "the pair-count model requires fewer generators than the monomial count",
        ));
    }
    let growth_steps = target - m;
    let initial = (m as u128) * (m as u128 - 1) / 2;
    // final growth-phase pair count is quadratic in target; cap the trace
    let drain = initial + (m as u128 - 1) * growth_steps as u128
        + (growth_steps as u128) * (growth_steps as u128 - 1) / 2;
    let total = growth_steps as u128 + drain;
    if total > 2_000_000 {
        return Err(domain("pair-count trace too large to materialize"));
    }

    let mut steps = Vec::with_capacity(total as usize + 1);
    let mut basis_size = m;
    let mut pair_count = initial as u64;
    steps.push(PairCountStep { basis_size, pair_count });
    for _ in 0..growth_steps {
        // one pair consumed, one new pair per member present before insertion
        // (summed in this order because the pair set may start empty)
        pair_count = pair_count + basis_size - 1;
        basis_size += 1;
        steps.push(PairCountStep { basis_size, pair_count });
    }
    while pair_count > 0 {
        pair_count -= 1;
        steps.push(PairCountStep { basis_size, pair_count });
    }
    Ok(PairCountTrace {
        steps,
        growth_steps,
        total_loops: total as u64,
        alternate_total_loops: growth_steps + target,
    })
}

/// Closed form of the growth-phase pair count after i insertions:
/// m(m-1)/2 + (m-1)i + i(i-1)/2. Requires m >= 1.
pub fn closed_form_pairs(m: u64, i: u64) -> Result<u64> {
    if m == 0 {
        return Err(domain("the pair-count model needs at least one generator"));
    }
    let m = m as u128;
    let i = i as u128;
    let value = m * (m - 1) / 2 + (m - 1) * i + i * i.saturating_sub(1) / 2;
    u64::try_from(value).map_err(|_| domain("pair count exceeds 64 bits"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Signed;

    /// Independent exact fraction over i128 for the oracle re-evaluations.
    #[derive(Clone, Copy, Debug, PartialEq, Eq)]
    struct Frac {
        num: i128,
        den: i128,
    }

    fn gcd(a: i128, b: i128) -> i128 {
        let (mut a, mut b) = (a.abs(), b.abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a.max(1)
    }

    impl Frac {
        fn new(num: i128, den: i128) -> Frac {
            assert!(den != 0);
            let sign = if den < 0 { -1 } else { 1 };
            let g = gcd(num, den);
            Frac { num: sign * num / g, den: sign * den / g }
        }

        fn add(self, o: Frac) -> Frac {
            Frac::new(self.num * o.den + o.num * self.den, self.den * o.den)
        }

        fn mul(self, o: Frac) -> Frac {
            Frac::new(self.num * o.num, self.den * o.den)
        }

        fn to_big(self) -> BigRational {
            BigRational::new(BigInt::from(self.num), BigInt::from(self.den))
        }
    }

    fn ipow(base: i128, exp: u32) -> i128 {
        base.checked_pow(exp).expect("oracle power overflow")
    }

    /// A micro term c * m^pm * n^pn * N^pN * B^pB, fully expanded so the
    /// oracle shares no coefficient grouping with the implementation.
    struct Micro {
        num: i128,
        den: i128,
        pm: u32,
        pn: u32,
        p_big_n: u32,
        pb: u32,
    }

    fn micro(num: i128, den: i128, pm: u32, pn: u32, p_big_n: u32, pb: u32) -> Micro {
        Micro { num, den, pm, pn, p_big_n, pb }
    }

    fn eval_micros(terms: &[Micro], m: i128, n: i128, big_n: i128, b: i128, reverse: bool) -> Frac {
        let mut order: Vec<&Micro> = terms.iter().collect();
        if reverse {
            order.reverse();
        }
        let mut acc = Frac::new(0, 1);
        for t in order {
            let value = Frac::new(t.num, t.den)
                .mul(Frac::new(ipow(m, t.pm), 1))
                .mul(Frac::new(ipow(n, t.pn), 1))
                .mul(Frac::new(ipow(big_n, t.p_big_n), 1))
                .mul(Frac::new(ipow(b, t.pb), 1));
            acc = acc.add(value);
        }
        acc
    }

    fn buchberger_micros() -> Vec<Micro> {
        vec![
            micro(3, 2, 0, 1, 5, 0),
            micro(1, 1, 0, 0, 4, 0),
            micro(2, 1, 1, 1, 3, 0),
            micro(-1, 2, 0, 1, 3, 0),
            micro(7, 1, 0, 0, 3, 0),
            micro(-1, 1, 2, 1, 2, 0),
            micro(-3, 2, 0, 1, 2, 0),
            micro(-3, 2, 0, 0, 2, 0),
            micro(-1, 2, 2, 1, 1, 0),
            micro(-1, 1, 1, 1, 1, 0),
            micro(-3, 2, 0, 1, 1, 0),
            micro(-1, 2, 0, 0, 1, 0),
        ]
    }

    fn f5b_micros() -> Vec<Micro> {
        vec![
            micro(2, 3, 0, 1, 5, 0),
            micro(1, 1, 1, 1, 4, 0),
            micro(14, 3, 0, 1, 4, 0),
            micro(2, 3, 0, 0, 4, 0),
            micro(-1, 1, 2, 1, 3, 0),
            micro(1, 1, 1, 1, 3, 0),
            micro(1, 1, 1, 0, 3, 0),
            micro(11, 6, 0, 1, 3, 0),
            micro(2, 1, 0, 0, 3, 0),
            micro(10, 3, 3, 1, 2, 0),
            micro(-3, 1, 2, 1, 2, 0),
            micro(-1, 1, 2, 0, 2, 0),
            micro(14, 3, 1, 1, 2, 0),
            micro(2, 1, 1, 0, 2, 0),
            micro(-16, 3, 0, 1, 2, 0),
            micro(-2, 3, 0, 0, 2, 0),
            micro(-2, 3, 3, 1, 1, 0),
            micro(-2, 3, 3, 0, 1, 0),
            micro(1, 1, 2, 1, 1, 0),
            micro(17, 6, 1, 1, 1, 0),
            micro(8, 3, 1, 0, 1, 0),
            micro(-11, 2, 0, 1, 1, 0),
            micro(-2, 1, 0, 0, 1, 0),
            micro(-11, 2, 2, 1, 0, 0),
            micro(-4, 1, 2, 0, 0, 0),
            micro(7, 2, 1, 1, 0, 0),
            micro(2, 1, 1, 0, 0, 0),
        ]
    }

    fn f5b_fast_micros() -> Vec<Micro> {
        vec![
            micro(1, 1, 1, 1, 4, 0),
            micro(4, 1, 0, 1, 4, 0),
            micro(-1, 1, 2, 1, 3, 0),
            micro(1, 1, 1, 1, 3, 0),
            micro(1, 1, 1, 0, 3, 0),
            micro(15, 2, 0, 1, 3, 0),
            micro(31, 1, 0, 0, 3, 0),
            micro(-3, 1, 2, 1, 2, 0),
            micro(-1, 1, 2, 0, 2, 0),
            micro(5, 1, 1, 1, 2, 0),
            micro(-5, 1, 0, 1, 2, 0),
            micro(-1, 1, 0, 0, 2, 0),
            micro(-7, 1, 2, 1, 1, 0),
            micro(10, 1, 1, 1, 1, 0),
            micro(-1, 1, 2, 0, 1, 0),
            micro(-1, 1, 1, 0, 1, 0),
            micro(-2, 1, 0, 1, 1, 0),
            micro(-2, 1, 0, 0, 1, 0),
            micro(4, 1, 2, 1, 0, 0),
            micro(-2, 1, 2, 0, 0, 0),
            micro(2, 1, 1, 0, 0, 0),
        ]
    }

    fn f5_reduction_micros() -> Vec<Micro> {
        vec![
            micro(2, 1, 0, 1, 2, 2),
            micro(2, 1, 0, 1, 1, 2),
            micro(2, 1, 0, 0, 1, 2),
            micro(4, 1, 0, 1, 2, 1),
            micro(7, 1, 0, 1, 1, 1),
            micro(1, 1, 1, 1, 3, 0),
            micro(1, 1, 0, 1, 3, 0),
            micro(1, 1, 1, 1, 2, 0),
            micro(1, 1, 1, 0, 2, 0),
            micro(1, 1, 0, 0, 2, 0),
        ]
    }

    fn fast_reduction_micros() -> Vec<Micro> {
        vec![
            micro(2, 1, 0, 1, 2, 1),
            micro(7, 1, 0, 1, 1, 1),
            micro(1, 1, 1, 1, 3, 0),
            micro(1, 1, 0, 1, 3, 0),
            micro(1, 1, 1, 1, 2, 0),
            micro(1, 1, 1, 0, 2, 0),
            micro(2, 1, 0, 1, 2, 0),
            micro(1, 1, 0, 0, 2, 0),
            micro(1, 1, 0, 1, 1, 0),
            micro(2, 1, 0, 0, 1, 0),
        ]
    }

    fn assert_matches_oracle(
        value: &BigRational,
        micros: &[Micro],
        m: u64,
        n: u64,
        big_n: u64,
        b: u64,
    ) {
        let forward = eval_micros(micros, m as i128, n as i128, big_n as i128, b as i128, false);
        let backward = eval_micros(micros, m as i128, n as i128, big_n as i128, b as i128, true);
        assert_eq!(forward, backward, "summation order changed the oracle value");
        assert_eq!(value, &forward.to_big(), "m={m} n={n} N={big_n} B={b}");
    }

    #[test]
    fn frozen_spot_values() {
        let n10 = BigInt::from(10);
        assert_eq!(
            buchberger_cost_at(2, 1, &n10),
            BigRational::from_integer(BigInt::from(169740))
        );
        assert_eq!(f5b_cost_at(2, 1, &n10), rat(436724, 3));
        assert_eq!(f5b_cost_at(1, 1, &BigInt::from(0)), rat(-4, 1));
        assert_eq!(f5b_fast_cost_at(1, 1, &BigInt::from(1)), rat(81, 2));
        assert_eq!(f5_reduction_cost_at(1, 1, &BigInt::from(2), 3), rat(262, 1));
        assert!(buchberger_cost_at(3, 4, &BigInt::from(0)).is_zero());
    }

    #[test]
    fn evaluators_match_independent_micro_term_oracle() {
        for m in 1..=4u64 {
            for n in 1..=4u64 {
                for big_n in 0..=12u64 {
                    let nn = BigInt::from(big_n);
                    assert_matches_oracle(
                        &buchberger_cost_at(m, n, &nn),
                        &buchberger_micros(),
                        m, n, big_n, 0,
                    );
                    assert_matches_oracle(&f5b_cost_at(m, n, &nn), &f5b_micros(), m, n, big_n, 0);
                    assert_matches_oracle(
                        &f5b_fast_cost_at(m, n, &nn),
                        &f5b_fast_micros(),
                        m, n, big_n, 0,
                    );
                    for b in 0..=5u64 {
                        assert_matches_oracle(
                            &f5_reduction_cost_at(m, n, &nn, b),
                            &f5_reduction_micros(),
                            m, n, big_n, b,
                        );
                        assert_matches_oracle(
                            &fast_reduction_cost_at(m, n, &nn, b),
                            &fast_reduction_micros(),
                            m, n, big_n, b,
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn denominators_always_divide_six() {
        for m in 1..=5u64 {
            for n in 1..=5u64 {
                for big_n in 0..=9u64 {
                    let nn = BigInt::from(big_n);
                    for value in [
                        buchberger_cost_at(m, n, &nn),
                        f5b_cost_at(m, n, &nn),
                        f5b_fast_cost_at(m, n, &nn),
                        f5_reduction_cost_at(m, n, &nn, 4),
                        fast_reduction_cost_at(m, n, &nn, 4),
                    ] {
                        let six = BigInt::from(6) % value.denom();
                        assert!(six.is_zero(), "denominator {} at m={m} n={n} N={big_n}", value.denom());
                    }
                }
            }
        }
    }

    #[test]
    fn leading_terms_dominate() {
        assert_eq!(buchberger_cost_leading(2, 3), (rat(9, 2), 5));
        assert_eq!(f5b_cost_leading(2, 3), (rat(2, 1), 5));
        assert_eq!(f5b_fast_cost_leading(2, 3), (rat(6, 1), 4));

        let huge = BigInt::from(1_000_000u64);
        // rows 1 and 2 carry the full top coefficient, so they converge at
        // fixed (m, n); row 3 keeps only the m-dominant part of its top
        // coefficient and needs m large as well
        for (value, (coeff, power)) in [
            (buchberger_cost_at(2, 3, &huge), buchberger_cost_leading(2, 3)),
            (f5b_cost_at(2, 3, &huge), f5b_cost_leading(2, 3)),
            (f5b_fast_cost_at(1000, 3, &huge), f5b_fast_cost_leading(1000, 3)),
        ] {
            let lead = coeff * BigRational::from_integer(huge.pow(power));
            let rest = (&value - &lead).abs();
            assert!(
                rest * rat(100, 1) < lead,
                "leading term is not within 1% at N=10^6: value={value} lead={lead}"
            );
        }

        // at fixed small m the deliberate gap is the 4n part of the top
        // coefficient, up to lower order in N: here 4n = 12
        let n4 = BigRational::from_integer(huge.pow(4));
        let full = f5b_fast_cost_at(2, 3, &huge);
        let (lead, _) = f5b_fast_cost_leading(2, 3);
        let gap = &full - &(lead * &n4);
        assert!((gap - rat(12, 1) * &n4).abs() * rat(100, 1) < n4);
    }

    #[test]
    fn reduction_costs_without_members() {
        for m in 1..=3u64 {
            for n in 1..=3u64 {
                for big_n in 0..=6u64 {
                    let nn = BigInt::from(big_n);
                    let nn_r = BigRational::from_integer(nn.clone());
                    let nn2 = &nn_r * &nn_r;
                    let nn3 = &nn2 * &nn_r;
                    let (mr, nr) = (big(m), big(n));
                    let mn = &mr * &nr;
                    let expect1 = (&mn + &nr) * &nn3 + (&mn + &mr + rat(1, 1)) * &nn2;
                    assert_eq!(f5_reduction_cost_at(m, n, &nn, 0), expect1);
                    let expect2 = (&mn + &nr) * &nn3
                        + (&mn + &mr + rat(2, 1) * &nr + rat(1, 1)) * &nn2
                        + (&nr + rat(2, 1)) * &nn_r;
                    assert_eq!(fast_reduction_cost_at(m, n, &nn, 0), expect2);
                }
            }
        }
    }

    #[test]
    fn member_count_dependence_is_quadratic_vs_linear() {
        for (m, n, big_n) in [(1u64, 1u64, 3u64), (2, 3, 5), (4, 2, 9)] {
            let nn = BigInt::from(big_n);
            let nn_r = BigRational::from_integer(nn.clone());
            let nr = big(n);
            // second difference of the quadratic row: constant and positive
            let expected_dd = rat(2, 1) * (rat(2, 1) * &nr * &nn_r * &nn_r + (rat(2, 1) * &nr + rat(2, 1)) * &nn_r);
            for b in 0..=6u64 {
                let f0 = f5_reduction_cost_at(m, n, &nn, b);
                let f1 = f5_reduction_cost_at(m, n, &nn, b + 1);
                let f2 = f5_reduction_cost_at(m, n, &nn, b + 2);
                let dd = f2 - f1.clone() - f1 + f0;
                assert_eq!(dd, expected_dd);
                assert!(dd > BigRational::zero());

                let g0 = fast_reduction_cost_at(m, n, &nn, b);
                let g1 = fast_reduction_cost_at(m, n, &nn, b + 1);
                let g2 = fast_reduction_cost_at(m, n, &nn, b + 2);
                // first difference constant: the row is exactly linear in B
                let expected_d = rat(2, 1) * &nr * &nn_r * &nn_r + rat(7, 1) * &nr * &nn_r;
                assert_eq!(&g1 - &g0, expected_d);
                assert_eq!(&g2 - &g1, expected_d);
            }
        }
    }

    #[test]
    fn fast_row_cheaper_for_any_nonempty_list() {
        for m in 1..=5u64 {
            for n in 1..=5u64 {
                for big_n in 1..=12u64 {
                    let nn = BigInt::from(big_n);
                    for b in 1..=8u64 {
                        assert!(
                            fast_reduction_cost_at(m, n, &nn, b) < f5_reduction_cost_at(m, n, &nn, b),
                            "m={m} n={n} N={big_n} B={b}"
                        );
                    }
                    // at B = 0 the comparison genuinely flips
                    assert!(
                        fast_reduction_cost_at(m, n, &nn, 0) > f5_reduction_cost_at(m, n, &nn, 0)
                    );
                }
            }
        }
    }

    #[test]
    fn pair_count_trace_worked_example() {
        let trace = simulate_pair_counts(3, 6).unwrap();
        let growth: Vec<(u64, u64)> = trace.steps[..4]
            .iter()
            .map(|s| (s.basis_size, s.pair_count))
            .collect();
        assert_eq!(growth, vec![(3, 3), (4, 5), (5, 8), (6, 12)]);
        assert_eq!(trace.growth_steps, 3);
        assert_eq!(trace.total_loops, 15);
        assert_eq!(trace.alternate_total_loops, 9);
        assert_eq!(trace.steps.len(), 16);
        let last = trace.steps.last().unwrap();
        assert_eq!((last.basis_size, last.pair_count), (6, 0));

        // single growth step when m = target - 1
        let trace = simulate_pair_counts(5, 6).unwrap();
        assert_eq!(trace.growth_steps, 1);
        assert_eq!(trace.steps[1].basis_size, 6);

        assert!(simulate_pair_counts(6, 6).is_err());
        assert!(simulate_pair_counts(0, 6).is_err());
    }

    #[test]
    fn closed_form_matches_recurrence_everywhere() {
        for target in 2..=40u64 {
            for m in 1..target {
                let trace = simulate_pair_counts(m, target).unwrap();
                for i in 0..=(target - m) {
                    assert_eq!(
                        trace.steps[i as usize].pair_count,
                        closed_form_pairs(m, i).unwrap(),
                        "m={m} target={target} i={i}"
                    );
                }
                // peak value at the end of the growth phase: (N^2 - 3N)/2 + m
                let t = target as i128;
                let peak = (t * t - 3 * t) / 2 + m as i128;
                assert_eq!(closed_form_pairs(m, target - m).unwrap() as i128, peak);
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_pairs(3, 0).unwrap(), 3);
        assert_eq!(closed_form_pairs(3, 1).unwrap(), 5);
        assert_eq!(closed_form_pairs(3, 3).unwrap(), 12);
        assert_eq!(closed_form_pairs(1, 0).unwrap(), 0);
    }

    #[test]
    fn asymptotic_ordering_has_a_threshold() {
        for m in 1..=5u64 {
            for n in 1..=5u64 {
                let mut run_start: Option<u64> = None;
                let mut threshold: Option<u64> = None;
                for big_n in (m + 1)..=200u64 {
                    let nn = BigInt::from(big_n);
                    let p1 = buchberger_cost_at(m, n, &nn);
                    let p2 = f5b_cost_at(m, n, &nn);
                    let p3 = f5b_fast_cost_at(m, n, &nn);
                    if p3 < p2 && p2 < p1 {
                        let start = *run_start.get_or_insert(big_n);
                        if big_n - start >= 60 {
                            threshold = Some(start);
                            break;
                        }
                    } else {
                        run_start = None;
                    }
                }
                let threshold = threshold.unwrap_or_else(|| {
                    panic!("no ordering threshold below N=200 for m={m} n={n}")
                });
                assert!(
                    threshold <= 12,
                    "threshold {threshold} unexpectedly high for m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn input_construction_and_domain() {
        let input = CostModelInput::new(2, 2, BigUint::from(2u32)).unwrap();
        assert_eq!(input.monomial_count(), &BigUint::from(6u32));
        assert!(input.in_model_domain());
        let tight = CostModelInput::new(6, 2, BigUint::from(2u32)).unwrap();
        assert!(!tight.in_model_domain());
        assert!(CostModelInput::new(0, 2, BigUint::from(2u32)).is_err());

        let ctx = Context::new(
            vec!["x", "y"],
            crate::monomial::MonomialOrder::Lex,
            crate::field::Field::Rational,
        )
        .unwrap();
        let polys = vec![
            crate::parse::parse_polynomial(&ctx, "x^2 - y").unwrap(),
            crate::parse::parse_polynomial(&ctx, "x*y - 1").unwrap(),
        ];
        let input = CostModelInput::for_system(&ctx, &polys).unwrap();
        assert_eq!(input.m(), 2);
        assert_eq!(input.n(), 2);
        // max degree 2, min degree 2: cap is 17 * 4 = 68
        assert_eq!(input.degree_cap(), &BigUint::from(68u32));
        assert_eq!(input.monomial_count(), &count_monomials(&BigUint::from(68u32), 2).unwrap());
    }
}
