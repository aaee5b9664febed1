//! The closed-form cost model, evaluated exactly.
//!
//! Prints the predicted operation counts of the three algorithms over a range
//! of monomial counts, locates the crossover past which the ranking settles,
//! shows that the two per-loop reduction costs are quadratic versus linear in
//! the tracked-list size, and walks the pair-count recurrence against its
//! closed form.
//!
//! Run with: cargo run --example cost_model

use num::BigInt;

use groebner::complexity::{
    buchberger_cost_at, closed_form_pairs, f5_reduction_cost_at, f5b_cost_at, f5b_fast_cost_at,
    fast_reduction_cost_at, simulate_pair_counts, CostModelInput,
};
use groebner::systems::parse_bundled;

fn main() -> groebner::Result<()> {
    let (m, n) = (3u64, 2u64);
    println!("predicted field operations at m = {m} generators, n = {n} variables:");
    println!("{:>6} {:>16} {:>16} {:>16}", "N", "buchberger", "f5b", "f5b-fast");
    for big_n in [5u64, 10, 20, 50, 100] {
        let nn = BigInt::from(big_n);
        println!(
            "{:>6} {:>16} {:>16} {:>16}",
            big_n,
            buchberger_cost_at(m, n, &nn).to_string(),
            f5b_cost_at(m, n, &nn).to_string(),
            f5b_fast_cost_at(m, n, &nn).to_string()
        );
    }

    // the ranking fast < f5b < buchberger holds from some threshold onward;
    // scan for the start of a long stable run
    let mut run_start = None;
    for big_n in (m + 1)..=200 {
        let nn = BigInt::from(big_n);
        let ordered = f5b_fast_cost_at(m, n, &nn) < f5b_cost_at(m, n, &nn)
            && f5b_cost_at(m, n, &nn) < buchberger_cost_at(m, n, &nn);
        match (ordered, run_start) {
            (true, None) => run_start = Some(big_n),
            (false, _) => run_start = None,
            _ => {}
        }
        if run_start.is_some_and(|s| big_n - s >= 60) {
            break;
        }
    }
    println!("\nranking stable from N = {} on", run_start.unwrap());

    // per-loop reduction cost as the tracked list grows: second differences
    // expose the degree in B
    let nn = BigInt::from(10);
    println!("\nper-loop reduction cost at m = {m}, n = {n}, N = 10:");
    println!("{:>4} {:>12} {:>12}", "B", "standard", "fast");
    for b in 0..=4u64 {
        println!(
            "{:>4} {:>12} {:>12}",
            b,
            f5_reduction_cost_at(m, n, &nn, b).to_string(),
            fast_reduction_cost_at(m, n, &nn, b).to_string()
        );
    }
    let d2_standard = f5_reduction_cost_at(m, n, &nn, 2) - f5_reduction_cost_at(m, n, &nn, 1) * BigInt::from(2)
        + f5_reduction_cost_at(m, n, &nn, 0);
    let d2_fast = fast_reduction_cost_at(m, n, &nn, 2)
        - fast_reduction_cost_at(m, n, &nn, 1) * BigInt::from(2)
        + fast_reduction_cost_at(m, n, &nn, 0);
    println!("second difference in B: standard {} (quadratic), fast {} (linear)", d2_standard, d2_fast);

    // the pair-count recurrence: one pair in, |basis| new pairs out while the
    // basis grows, then a pure drain
    println!("\npair-count recurrence at m = 3 up to 6 members:");
    let trace = simulate_pair_counts(3, 6)?;
    println!("{:>6} {:>6} {:>12}", "basis", "pairs", "closed form");
    for (i, step) in trace.steps.iter().take(4).enumerate() {
        println!(
            "{:>6} {:>6} {:>12}",
            step.basis_size,
            step.pair_count,
            closed_form_pairs(3, i as u64)?
        );
    }
    println!(
        "loops until no pair is left: {} (or {} under the basis-size drain reading)",
        trace.total_loops, trace.alternate_total_loops
    );

    // model parameters straight from a system file
    let (ctx, gens) = parse_bundled("katsura3")?;
    let input = CostModelInput::for_system(&ctx, &gens)?;
    println!(
        "\nkatsura3: m = {}, n = {}, degree cap D = {}, N = {} monomials, model domain: {}",
        input.m(),
        input.n(),
        input.degree_cap(),
        input.monomial_count(),
        input.in_model_domain()
    );
    Ok(())
}
