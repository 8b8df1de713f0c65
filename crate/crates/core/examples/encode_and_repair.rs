//! Systematic encoding, random single erasures and local repair.
use rand::{Rng, SeedableRng};
use rrlrc::codec::{Repairer, SystematicEncoder};
use rrlrc::codes::code_single;
use rrlrc::FieldSpec;

fn main() -> rrlrc::Result<()> {
    let f = FieldSpec::gf(2, 2)?;
    let code = code_single(&f, 3, 4, 2, 4)?;
    let encoder = SystematicEncoder::new(&code)?;
    let mut repairer = Repairer::new(&code)?;
    let mut rng = rand::rngs::StdRng::seed_from_u64(1);
    for _ in 0..5 {
        let message: Vec<u32> = (0..code.k()).map(|_| rng.gen_range(0..4)).collect();
        let c = encoder.encode(&message)?;
        let e = rng.gen_range(0..code.n());
        let mut received: Vec<Option<u32>> = c.coeffs().iter().copied().map(Some).collect();
        received[e] = None;
        let helpers = repairer.plan(e)?.helper_indices.clone();
        let repaired = repairer.repair(&received)?;
        println!("erased {e:>2}, read {helpers:?}, recovered {} ok={}", repaired.coeffs()[e], repaired == c);
    }
    Ok(())
}
