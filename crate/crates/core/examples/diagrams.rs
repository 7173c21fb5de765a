//! Building, classifying and serializing diagrams.

use ctld::diagram::{Diagram, Endpoint, StrandSpec};

fn main() -> ctld::Result<()> {
    let (n, m) = (4, 2);
    let spec = |a: &str, b: &str, dots: i64, blob: u32| -> ctld::Result<StrandSpec> {
        Ok(StrandSpec {
            ends: [a.parse::<Endpoint>()?, b.parse::<Endpoint>()?],
            dots,
            blob,
        })
    };
    let d = Diagram::validate(
        n,
        m,
        false,
        &[spec("T1", "T2", 1, 1)?, spec("T3", "B1", 0, 1)?, spec("T4", "B2", 1, 0)?, spec("B3", "B4", 0, 0)?],
    )?;
    println!("{d}: {:?}, {} arcs, exposed strands {:?}", d.classify(), d.num_arcs(), d.exposed_strands());
    println!("flip: {}", d.flip());
    let json = d.to_json();
    println!("json: {json}");
    assert_eq!(Diagram::from_json(&json)?, d);

    // a blob on an arc nested under another arc is rejected
    let bad = Diagram::validate(
        n,
        m,
        false,
        &[spec("T1", "T4", 0, 0)?, spec("T2", "T3", 0, 1)?, spec("B1", "B2", 0, 1)?, spec("B3", "B4", 0, 0)?],
    );
    println!("nested blob: {}", bad.unwrap_err());

    for (name, g) in [
        ("identity", Diagram::identity(n, m)?),
        ("e1", Diagram::e(n, m, 1)?),
        ("e1bar", Diagram::e_bar(n, m)?),
        ("T2", Diagram::t(n, m, 2)?),
    ] {
        println!("{name:<8} {g}  ({:?})", g.classify());
    }
    Ok(())
}
