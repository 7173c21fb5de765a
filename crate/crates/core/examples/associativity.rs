//! Associativity of the diagram product, exhaustively at m = 1 and on
//! seeded samples at m = 2, for both loop rules.
//!
//! The coefficient formula charges nothing for a blobbed loop without dots.
//! When delta_0 != 1 this is not associative: a strand blob that is
//! stripped in one bracketing turns a free blobbed loop into a plain one
//! costing delta_0. The relations rule charges delta_0 for every blobbed
//! cycle beyond the first and is associative for all parameters.

use ctld::algebra::{check_associativity_exhaustive, check_associativity_sampled, Algebra};
use ctld::compose::LoopRule;
use ctld::enumerate::{enum_diagrams, DEFAULT_BUDGET};
use ctld::scalars::{make_field, parse_parameters};

fn main() -> ctld::Result<()> {
    for rule in [LoopRule::Formula, LoopRule::Relations] {
        for (m, n, field, deltas) in [(1u8, 4u8, "Q", "1"), (1, 4, "Q", "0"), (1, 4, "Q", "3"), (2, 4, "Q(zeta_2)", "1,5"), (2, 4, "Q(zeta_2)", "0,0")] {
            let f = make_field(field.parse()?)?;
            let params = parse_parameters(&f, deltas, m as usize)?;
            let alg = Algebra::new(f, params, n)?.with_rule(rule);
            let basis = enum_diagrams(m, n, DEFAULT_BUDGET)?.diagrams;
            let r = if m == 1 {
                check_associativity_exhaustive(&alg, &basis)?
            } else {
                check_associativity_sampled(&alg, &basis, 2000, 1)?
            };
            println!("{rule:?} ({m}, {n}) delta = ({deltas}): {} of {} triples fail", r.failures, r.checked);
            if let Some(t) = r.examples.first() {
                println!("    e.g. {} | {} | {}", t[0], t[1], t[2]);
            }
        }
    }
    Ok(())
}
