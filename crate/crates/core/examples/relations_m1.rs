//! The type D Temperley-Lieb relations on the m = 1 diagram realization.

use ctld::algebra::verify_tl_d_relations;
use ctld::scalars::make_field;

fn main() -> ctld::Result<()> {
    let f = make_field("Q".parse()?)?;
    for n in [4, 5, 6] {
        let checks = verify_tl_d_relations(&f, &f.from_int(-2), n)?;
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        println!("n = {n}: {} relations, {} failed", checks.len(), failed.len());
        if n == 4 {
            for c in &checks {
                println!("    {:<28} {}", c.relation, if c.passed { "ok" } else { "FAILED" });
            }
        }
    }
    Ok(())
}
