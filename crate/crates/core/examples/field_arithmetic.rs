//! Arithmetic in GF(9) and a few structural queries.
use rrlrc::FieldSpec;

fn main() -> rrlrc::Result<()> {
    let f = FieldSpec::gf(3, 2)?;
    println!("GF({}) modulus {:?}, primitive element {}", f.q(), f.modulus(), f.primitive());
    let g = f.elem(f.primitive())?;
    for k in 0..8 {
        let x = g.pow(k);
        println!("g^{k} = {:>2}  order {:>2}  square {}", x.repr(), x.order()?, x.is_quadratic_residue()?);
    }
    let a = f.elem(5)?;
    let b = f.elem(7)?;
    println!("5 + 7 = {}, 5 * 7 = {}, 5 / 7 = {}", a.try_add(&b)?.repr(), a.try_mul(&b)?.repr(), a.try_div(&b)?.repr());
    // the p^s-th root that turns x^(eta p^s) - lambda into (x^eta - lambda0)^(p^s)
    println!("9th root of 5: {}", a.ps_root(2)?.repr());
    Ok(())
}
