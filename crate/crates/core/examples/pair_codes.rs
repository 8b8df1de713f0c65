//! Codes with two repeated roots: distance, duals and optimal members.
use rrlrc::codes::code_pair;
use rrlrc::distance::{locality, min_distance};
use rrlrc::lrcopt::{check_optimal, enumerate_optimal_pair};
use rrlrc::oracle::DEFAULT_BUDGET;
use rrlrc::FieldSpec;

fn main() -> rrlrc::Result<()> {
    let f = FieldSpec::gf(7, 1)?;
    let code = code_pair(&f, 1, 2, 3, 7)?;
    let dual = code.dual();
    println!("n={} k={} d={} root delta={:?}", code.n(), code.k(), min_distance(&code)?.d, code.delta());
    println!("dual exponents ({}, {:?}) d⊥={}", dual.i(), dual.j(), min_distance(&dual)?.d);
    println!("profile {:?}", locality(&code)?);
    println!("optimal: {}", check_optimal(&code)?.optimal);

    let f5 = FieldSpec::gf(5, 1)?;
    let found = enumerate_optimal_pair(&f5, 1, 1, DEFAULT_BUDGET)?;
    for ((i, j), report) in &found.optimal {
        let p = report.profile;
        let classes: Vec<String> = report.classes.iter().map(|c| c.to_string()).collect();
        println!("  ({i}, {j}) [{}, {}, {}] r={}  {}", p.n, p.k, p.d, p.r, classes.join(", "));
    }
    Ok(())
}
