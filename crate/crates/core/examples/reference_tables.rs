//! Regenerate the reference tables and diff them against golden values.
use rrlrc::cli::tables::{table, NAMES};

fn main() -> rrlrc::Result<()> {
    for name in NAMES {
        let t = table(name)?;
        println!("== {name}\n{}", t.render());
    }
    Ok(())
}
