//! Bilinear forms on cell modules: the dot-algebra scalars psi, Gram
//! matrices, and the vanishing lemmas that predict which forms are zero.

use ctld::algebra::Algebra;
use ctld::cellular::{CellIndex, Cellular};
use ctld::rep::{gram, gram_lemmas, psi, psi_closed_form};
use ctld::scalars::{make_field, parse_parameters};

fn main() -> ctld::Result<()> {
    for (field, deltas) in [("Q(zeta_2)", "1,0"), ("GF(2)", "0,0")] {
        let f = make_field(field.parse()?)?;
        let params = parse_parameters(&f, deltas, 2)?;
        let cel = Cellular::new(Algebra::new(f.clone(), params, 4)?)?;
        println!("{field} ({deltas})");
        for index in [vec![1, 1], vec![1, 2], vec![2, 2]] {
            println!(
                "    psi{index:?} = {} (closed form {})",
                f.display(&psi(&cel, &index)?),
                f.display(&psi_closed_form(&cel, &index))
            );
        }
        let lambda: CellIndex = "(1,[1,1])+".parse()?;
        let g = gram(&cel, &lambda)?;
        println!("    Gram matrix of {lambda}, rank {}:", g.matrix.rank(&f));
        for i in 0..g.matrix.rows() {
            let row: Vec<String> = g.matrix.row(i).iter().map(|v| format!("{:>3}", f.display(v))).collect();
            println!("        {}", row.join(" "));
        }
        let lemmas = gram_lemmas(&cel)?;
        let held = lemmas.iter().filter(|l| l.passed).count();
        println!("    vanishing lemmas hold for {held} of {} cell indices", lemmas.len());
        for l in lemmas.iter().filter(|l| l.phi_zero) {
            println!("        {:<16} form vanishes ({})", l.lambda, l.rule);
        }
    }
    Ok(())
}
