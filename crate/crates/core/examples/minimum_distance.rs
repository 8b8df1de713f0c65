//! Distance, dual distance and locality of the length-25 negacyclic family.
use rrlrc::codes::code_single;
use rrlrc::distance::{locality, min_distance};
use rrlrc::FieldSpec;

fn main() -> rrlrc::Result<()> {
    let f = FieldSpec::gf(5, 1)?;
    println!("{:>3} {:>3} {:>3} {:>4} {:>3}  witness", "i", "k", "d", "d⊥", "r");
    for i in 1..25 {
        let code = code_single(&f, 1, 2, f.minus_one(), i)?;
        let w = min_distance(&code)?;
        let prof = locality(&code)?;
        let support: Vec<usize> = w.witness.to_vector(code.n()).iter().enumerate().filter(|(_, c)| **c != 0).map(|(t, _)| t).collect();
        println!("{i:>3} {:>3} {:>3} {:>4} {:>3}  t*={} support {support:?}", code.k(), w.d, prof.d_dual, prof.r, w.t_star);
    }
    Ok(())
}
