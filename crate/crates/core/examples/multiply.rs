//! Stacking diagrams: composite strands, closed loops and the resulting
//! coefficient under both loop rules.

use ctld::algebra::{Algebra, GeneratorName};
use ctld::compose::{loop_census, loop_sign_stats, LoopRule};
use ctld::diagram::Diagram;
use ctld::scalars::{make_field, parse_parameters};

fn main() -> ctld::Result<()> {
    let f = make_field("Q(zeta_3)".parse()?)?;
    let params = parse_parameters(&f, "2,0,0", 3)?;
    let alg = Algebra::new(f.clone(), params, 4)?;
    let relations = alg.clone().with_rule(LoopRule::Relations);

    let pairs = [
        ("e1 * e1", Diagram::e(4, 3, 1)?, Diagram::e(4, 3, 1)?),
        ("e1bar * e1", Diagram::e_bar(4, 3)?, Diagram::e(4, 3, 1)?),
        ("T1 * e1", Diagram::t(4, 3, 1)?, Diagram::e(4, 3, 1)?),
        ("e1 * T1 * e1", alg.multiply(&Diagram::e(4, 3, 1)?, &Diagram::t(4, 3, 1)?)?.1, Diagram::e(4, 3, 1)?),
    ];
    for (name, x, y) in &pairs {
        let census = loop_census(x, y)?;
        let (c, d) = alg.multiply(x, y)?;
        let (c2, _) = relations.multiply(x, y)?;
        println!(
            "{name:<14} loops {:?} -> {} * {d}   (relations rule: {})",
            census.loops,
            f.display(&c),
            f.display(&c2)
        );
    }

    let word: Vec<_> = ["e1bar", "e2", "e1", "T3", "e3"].iter().map(|s| s.parse::<GeneratorName>()).collect::<ctld::Result<_>>()?;
    let factors = word.iter().map(|g| alg.generator(*g)).collect::<ctld::Result<Vec<_>>>()?;
    let product = alg.product_all(&factors)?;
    println!("e1bar e2 e1 T3 e3 = {}", alg.to_json(&product));
    let (loops, violations) = loop_sign_stats();
    println!("{loops} loops traced, {violations} with a junction sign product of -1");
    Ok(())
}
