//! Irreducibility of x^eta - a and the admissible eta for a few constants.
use rrlrc::irred::{admissible_eta, binomial_irreducible, certificate};
use rrlrc::oracle::{verify_irreducible, DEFAULT_BUDGET};
use rrlrc::FieldSpec;

fn main() -> rrlrc::Result<()> {
    let gf4 = FieldSpec::gf(2, 2)?;
    let a = gf4.elem(2)?;
    println!("certificate {}", serde_json::to_string(&certificate(&a)?).unwrap());
    for eta in 1..=10u64 {
        let fast = binomial_irreducible(eta, &a)?;
        let slow = verify_irreducible(eta as usize, &a, DEFAULT_BUDGET)?;
        println!("x^{eta} - ω: {fast} (factoring agrees: {})", fast == slow);
    }
    let gf343 = FieldSpec::gf(7, 3)?;
    let xi19 = gf343.elem(gf343.primitive_power(19))?;
    println!("GF(343), a = ξ^19: {:?}", admissible_eta(&xi19, 100)?);
    Ok(())
}
