//! The cell poset, cutting diagrams into dangles, cellular basis elements
//! and coordinates of products in the cellular basis.

use ctld::algebra::Algebra;
use ctld::cellular::{cut, glue, lambda_set, leq, strictly_less, CellIndex, Cellular};
use ctld::diagram::Diagram;
use ctld::scalars::{make_field, parse_parameters};

fn main() -> ctld::Result<()> {
    let lambdas = lambda_set(2, 4);
    println!("{} cell indices at (2, 4), smallest first:", lambdas.len());
    for l in &lambdas {
        let below = lambdas.iter().filter(|x| strictly_less(x, l)).count();
        println!("    {:<18} {below:>2} strictly below", l.to_string());
    }
    let a: CellIndex = "(1,[1,2])+".parse()?;
    let b: CellIndex = "(1,[2,2])+".parse()?;
    println!("{a} <= {b}: {}, half1- <= half2-: {}", leq(&a, &b), leq(&"half1-".parse()?, &"half2-".parse()?));

    let f = make_field("Q(zeta_2)".parse()?)?;
    let params = parse_parameters(&f, "1,0", 2)?;
    let cel = Cellular::new(Algebra::new(f.clone(), params, 4)?)?;
    let alg = cel.algebra();

    let d = alg.multiply(&Diagram::e_bar(4, 2)?, &Diagram::t(4, 2, 3)?)?.1;
    let (v1, v2, word) = cut(&d)?;
    println!("cut {d}\n    top {}\n    bottom {}\n    word {word:?}", v1.to_json(), v2.to_json());
    assert_eq!(glue(&v1, &v2, &word)?, d);

    let lambda: CellIndex = "(1,[2,1])-".parse()?;
    println!("|M({lambda})| = {}", cel.m_set(&lambda).len());
    let c = cel.cell_basis_element(&lambda, 0, 1)?;
    println!("C[{lambda}; 0, 1] = {}", alg.to_json(&c));

    let x = alg.product(&alg.basis(Diagram::e(4, 2, 2)?)?, &c)?;
    println!("e2 * C[{lambda}; 0, 1] in the cellular basis:");
    for (term, v) in cel.to_cellular(&x)? {
        println!("    {} * C[{}; {}, {}]", f.display(&v), term.lambda, term.s, term.t);
    }
    Ok(())
}
