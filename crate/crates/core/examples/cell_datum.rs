//! Check the cell datum axioms: the cellular elements form a basis, the
//! involution swaps indices, and the left action does not depend on the
//! second index.

use ctld::algebra::Algebra;
use ctld::cellular::{verify_cell_datum, Cellular};
use ctld::enumerate::DEFAULT_BUDGET;
use ctld::scalars::{make_field, parse_parameters};

fn main() -> ctld::Result<()> {
    for (field, m, n, deltas) in [("Q", 1, 4, "-2"), ("Q(zeta_2)", 2, 4, "1,0"), ("GF(2)", 2, 4, "0,0"), ("Q(zeta_3)", 3, 4, "1,0,0")] {
        let f = make_field(field.parse()?)?;
        let params = parse_parameters(&f, deltas, m)?;
        let cel = Cellular::new(Algebra::new(f, params, n)?)?;
        let start = std::time::Instant::now();
        let r = verify_cell_datum(&cel, 200, 7, DEFAULT_BUDGET)?;
        println!(
            "({m}, {n}) {field} ({deltas}): rank {} of {}, C1 {} C2 {} ({} cells) C3 {} ({} samples, seed {}) [{:.1?}]",
            r.rank,
            r.dimension,
            r.c1,
            r.c2,
            r.c2_checked,
            r.c3,
            r.c3_checked,
            r.seed,
            start.elapsed()
        );
        for failure in &r.failures {
            println!("    {failure}");
        }
    }
    Ok(())
}
