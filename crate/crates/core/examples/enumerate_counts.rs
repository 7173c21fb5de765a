//! Basis enumeration, the dimension formula and the count identities that
//! underlie the cellular structure.

use ctld::diagram::DangleClass;
use ctld::enumerate::{check_counts, dimension_formula, enum_dangles, enum_diagrams, DEFAULT_BUDGET};

fn main() -> ctld::Result<()> {
    for (m, n) in [(1, 4), (2, 4), (1, 5), (2, 5), (3, 4), (3, 5), (2, 6)] {
        let start = std::time::Instant::now();
        let c = enum_diagrams(m, n, DEFAULT_BUDGET)?.census;
        println!(
            "(m, n) = ({m}, {n}): {:>6} = {:>5} type I + {:>6} type II (formula {}) [{:.1?}]",
            c.total,
            c.type_i,
            c.type_ii,
            dimension_formula(m as u32, n as u32),
            start.elapsed()
        );
    }
    println!("{}", serde_json::to_string_pretty(&enum_diagrams(2, 4, DEFAULT_BUDGET)?.census).unwrap());

    for (k, class) in [(1, DangleClass::Plus), (1, DangleClass::Minus), (2, DangleClass::Minus1)] {
        let dangles = enum_dangles(2, 4, k, class)?;
        println!("dangles of class {class:?} with {k} arcs at (2, 4): {}", dangles.len());
        println!("    first: {}", dangles[0].to_json());
    }
    for c in check_counts(2, 4, DEFAULT_BUDGET)? {
        println!("{:<40} {:>4} {:>4} {}", c.name, c.lhs, c.rhs, if c.passed { "ok" } else { "MISMATCH" });
    }
    match enum_diagrams(3, 6, DEFAULT_BUDGET) {
        Err(e) => println!("(3, 6): {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
