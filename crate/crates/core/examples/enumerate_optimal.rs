//! Every distance-optimal single-root code of a few families, with its class.
use rrlrc::lrcopt::enumerate_optimal_single;
use rrlrc::FieldSpec;

fn main() -> rrlrc::Result<()> {
    let gf4 = FieldSpec::gf(2, 2)?;
    let gf2 = FieldSpec::gf(2, 1)?;
    let gf27 = FieldSpec::gf(3, 3)?;
    let families = [(&gf4, 3, 4, 2), (&gf2, 1, 6, 1), (&gf27, 2, 3, gf27.minus_one())];
    for (f, eta, s, lambda0) in families {
        println!("GF({}) eta={eta} s={s} lambda0={lambda0}", f.q());
        for (i, report) in enumerate_optimal_single(f, eta, s, lambda0)? {
            let p = report.profile;
            let classes: Vec<String> = report.classes.iter().map(|c| c.to_string()).collect();
            println!("  i={i:>2} [{}, {}, {}] r={} bound={}  {}", p.n, p.k, p.d, p.r, report.d_bound, classes.join(", "));
        }
    }
    Ok(())
}
