//! Brute-force cross-checks of the closed forms over a small grid.
use rrlrc::oracle::{run_check, Check, Grid, DEFAULT_BUDGET};

fn main() -> rrlrc::Result<()> {
    let grid = Grid { primes: vec![2, 3], degrees: vec![1, 2], s_values: vec![1, 2], etas: vec![1, 2, 3] };
    for check in [Check::Distance, Check::Dual, Check::Locality, Check::Duality, Check::Irreducible] {
        let report = run_check(check, &grid, DEFAULT_BUDGET)?;
        println!("{check:?}: {} compared, {} skipped, {} mismatches", report.rows.len(), report.out_of_budget, report.mismatches());
    }
    Ok(())
}
