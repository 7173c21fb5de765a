//! Simple modules of CTL(D)_{2,4} in the four field/parameter cases, and
//! the quasi-heredity decisions that follow from them.

use ctld::algebra::Algebra;
use ctld::cellular::Cellular;
use ctld::rep::{is_quasi_hereditary, quotient_quasi_hereditary, simple_modules};
use ctld::scalars::{make_field, parse_parameters};

fn main() -> ctld::Result<()> {
    for (field, deltas) in [("Q(zeta_2)", "1,0"), ("Q(zeta_2)", "0,0"), ("GF(2)", "1,0"), ("GF(2)", "0,0")] {
        let f = make_field(field.parse()?)?;
        let params = parse_parameters(&f, deltas, 2)?;
        let cel = Cellular::new(Algebra::new(f, params, 4)?)?;
        let start = std::time::Instant::now();
        let s = simple_modules(&cel)?;
        let qh = is_quasi_hereditary(&cel)?;
        let quotient = quotient_quasi_hereditary(&cel)?;
        println!(
            "{field:<10} delta = ({deltas}): {:>2} simples (predicted {:>2}), quasi-hereditary {}, quotient {}  [{:?}]",
            s.simples,
            s.predicted_simples,
            qh.quasi_hereditary,
            quotient.quasi_hereditary,
            start.elapsed()
        );
        for e in s.entries.iter().filter(|e| e.phi_nonzero) {
            println!("    {:<16} dim S = {:>2} of {:>2}", e.lambda, e.rank, e.size);
        }
    }
    Ok(())
}
