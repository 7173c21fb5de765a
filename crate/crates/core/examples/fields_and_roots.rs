//! Coefficient fields and their roots of unity in the grouped order.

use ctld::scalars::{make_field, roots_of_unity};

fn main() -> ctld::Result<()> {
    for (spec, m) in [("Q(zeta_2)", 2), ("Q(zeta_3)", 3), ("Q(zeta_4)", 4), ("GF(2)", 2), ("GF(3)", 6), ("GF(2^2)", 6)] {
        let f = make_field(spec.parse()?)?;
        let roots = roots_of_unity(&f, m)?;
        let listed: Vec<String> = (1..=m as usize).map(|l| f.display(roots.xi(l))).collect();
        println!(
            "{spec:<10} char {} modulus {} m = {m}: [{}] (blocks of {})",
            f.characteristic(),
            f.modulus_json(),
            listed.join(", "),
            roots.block
        );
    }
    let f = make_field("GF(2)".parse()?)?;
    match roots_of_unity(&f, 3) {
        Ok(_) => unreachable!(),
        Err(e) => println!("GF(2), m = 3: {e}"),
    }
    Ok(())
}
