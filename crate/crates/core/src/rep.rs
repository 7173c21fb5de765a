//! Cell modules, their bilinear forms, and the classification of simple
//! modules and quasi-heredity built on them.

use serde::Serialize;

use crate::algebra::AlgebraElement;
use crate::cellular::{layer_coefficients, strictly_less, CellIndex, Cellular};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::scalars::{ExactMatrix, Scalar};

/// `prod_j prod_{l > i_j} (xi_{i_j} - xi_l)`.
pub fn psi_closed_form(cel: &Cellular, index: &[u8]) -> Scalar {
    let f = cel.field();
    let roots = cel.roots();
    let mut out = f.one();
    for &i in index {
        for l in i as usize + 1..=roots.m() {
            out = f.mul(&out, &f.sub(roots.xi(i as usize), roots.xi(l)));
        }
    }
    out
}

/// The scalar of `C^I C^I = psi_I C^I` modulo strictly smaller indices,
/// computed by multiplying dotted identity diagrams. Strands beyond the
/// length of `index` are padded with the index m, whose strand polynomial
/// is 1.
pub fn psi(cel: &Cellular, index: &[u8]) -> Result<Scalar> {
    let alg = cel.algebra();
    let (m, n) = (alg.m(), alg.n());
    if index.len() > n as usize || index.iter().any(|&i| i == 0 || i > m) {
        return Err(Error::Invalid(format!("index {index:?} for (m, n) = ({m}, {n})")));
    }
    let mut padded = index.to_vec();
    padded.resize(n as usize, m);
    let lambda = CellIndex::Minus {
        k: 0,
        index: padded,
    };
    let c = cel.cell_basis_element(&lambda, 0, 0)?;
    let sq = alg.product(&c, &c)?;
    let mut value = cel.field().zero();
    for (term, v) in cel.to_cellular(&sq)? {
        if term.lambda == lambda {
            value = v;
        } else if !strictly_less(&term.lambda, &lambda) {
            return Err(Error::Internal(format!(
                "square of C[{lambda}] has a term at {}",
                term.lambda
            )));
        }
    }
    Ok(value)
}

#[derive(Clone, Debug)]
pub struct GramMatrix {
    pub lambda: CellIndex,
    pub matrix: ExactMatrix,
}

/// Gram matrix of the form on the cell module of `lambda`, read off from
/// `C_{U,S} C_{T,V}` with the auxiliary pair `(u, v)` of row positions.
pub fn gram_with(cel: &Cellular, lambda: &CellIndex, u: usize, v: usize) -> Result<GramMatrix> {
    let f = cel.field();
    let alg = cel.algebra();
    let size = cel.m_set(lambda).len();
    let left: Vec<AlgebraElement> = (0..size)
        .map(|s| cel.cell_basis_element(lambda, u, s))
        .collect::<Result<_>>()?;
    let right: Vec<AlgebraElement> = (0..size)
        .map(|t| cel.cell_basis_element(lambda, t, v))
        .collect::<Result<_>>()?;
    let mut matrix = ExactMatrix::zeros(f, size, size);
    for s in 0..size {
        for t in 0..size {
            let x = alg.product(&left[s], &right[t])?;
            for (term, c) in cel.to_cellular(&x)? {
                if term.lambda == *lambda {
                    if (term.s, term.t) != (u, v) {
                        return Err(Error::Internal(format!(
                            "C[{lambda}; {u}, {s}] C[{lambda}; {t}, {v}] has a term at ({}, {})",
                            term.s, term.t
                        )));
                    }
                    matrix.set(s, t, c);
                } else if !strictly_less(&term.lambda, lambda) {
                    return Err(Error::Internal(format!(
                        "C[{lambda}; {u}, {s}] C[{lambda}; {t}, {v}] has a term at {}",
                        term.lambda
                    )));
                }
            }
        }
    }
    Ok(GramMatrix {
        lambda: lambda.clone(),
        matrix,
    })
}

pub fn gram(cel: &Cellular, lambda: &CellIndex) -> Result<GramMatrix> {
    gram_with(cel, lambda, 0, 0)
}

/// Matrix of the left action of a basis diagram on the cell module:
/// column S holds the coefficients `r_a(U, S)`.
pub fn action_matrix(cel: &Cellular, lambda: &CellIndex, a: &Diagram) -> Result<ExactMatrix> {
    let f = cel.field();
    let size = cel.m_set(lambda).len();
    let mut out = ExactMatrix::zeros(f, size, size);
    for s in 0..size {
        let r = layer_coefficients(cel, a, lambda, s, 0)?.map_err(Error::Internal)?;
        for (u, c) in r {
            out.set(u, s, c);
        }
    }
    Ok(out)
}

/// Whether the form on the cell module of `lambda` is predicted nonzero:
/// for the indices with no vertical strands this needs a nonzero loop
/// parameter, otherwise every index entry must be divisible by the
/// multiplicity of the roots of unity.
pub fn predicted_nonzero(cel: &Cellular, lambda: &CellIndex) -> bool {
    let n = cel.algebra().n();
    if 2 * lambda.k(n) == n {
        return !cel.algebra().params().all_zero();
    }
    let block = cel.roots().block as u8;
    lambda.index().iter().all(|&i| i % block == 0)
}

#[derive(Clone, Debug, Serialize)]
pub struct SimpleEntry {
    pub lambda: String,
    pub size: usize,
    pub rank: usize,
    pub phi_nonzero: bool,
    pub predicted: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SimplesReport {
    pub entries: Vec<SimpleEntry>,
    pub simples: usize,
    pub predicted_simples: usize,
    pub agree: bool,
}

fn entry(cel: &Cellular, lambda: &CellIndex) -> Result<SimpleEntry> {
    let g = gram(cel, lambda)?;
    let rank = g.matrix.rank(cel.field());
    Ok(SimpleEntry {
        lambda: lambda.to_string(),
        size: g.matrix.rows(),
        rank,
        phi_nonzero: rank > 0,
        predicted: predicted_nonzero(cel, lambda),
    })
}

fn report(entries: Vec<SimpleEntry>) -> SimplesReport {
    SimplesReport {
        simples: entries.iter().filter(|e| e.phi_nonzero).count(),
        predicted_simples: entries.iter().filter(|e| e.predicted).count(),
        agree: entries.iter().all(|e| e.phi_nonzero == e.predicted),
        entries,
    }
}

/// Gram rank of every cell index; the simple modules are indexed by those
/// with nonzero form and have dimension equal to the rank.
pub fn simple_modules(cel: &Cellular) -> Result<SimplesReport> {
    let entries = cel
        .lambdas()
        .iter()
        .map(|l| entry(cel, l))
        .collect::<Result<Vec<_>>>()?;
    Ok(report(entries))
}

#[derive(Clone, Debug, Serialize)]
pub struct QhReport {
    pub lambda_count: usize,
    pub lambda0_count: usize,
    pub quasi_hereditary: bool,
    pub predicted: bool,
    pub agree: bool,
    /// Cell indices whose form vanishes.
    pub vanishing: Vec<String>,
}

fn qh_from(entries: &[SimpleEntry], predicted: bool) -> QhReport {
    let lambda0 = entries.iter().filter(|e| e.phi_nonzero).count();
    let qh = lambda0 == entries.len();
    QhReport {
        lambda_count: entries.len(),
        lambda0_count: lambda0,
        quasi_hereditary: qh,
        predicted,
        agree: qh == predicted,
        vanishing: entries
            .iter()
            .filter(|e| !e.phi_nonzero)
            .map(|e| e.lambda.clone())
            .collect(),
    }
}

/// Quasi-hereditary iff every cell form is nonzero; cross-checked against
/// "p does not divide m, and n is odd or some loop parameter is nonzero".
pub fn is_quasi_hereditary(cel: &Cellular) -> Result<QhReport> {
    let s = simple_modules(cel)?;
    let alg = cel.algebra();
    let p = alg.field().characteristic();
    let predicted = (p == 0 || alg.m() as u64 % p != 0) && (alg.n() % 2 == 1 || !alg.params().all_zero());
    Ok(qh_from(&s.entries, predicted))
}

/// The same decision for the quotient by the ideal spanned by diagrams
/// without vertical strands, realized by dropping the indices with k = n/2.
pub fn quotient_quasi_hereditary(cel: &Cellular) -> Result<QhReport> {
    let alg = cel.algebra();
    let n = alg.n();
    if n % 2 == 1 {
        return Err(Error::Invalid("the quotient is defined for even n".into()));
    }
    let entries = cel
        .lambdas()
        .iter()
        .filter(|l| 2 * l.k(n) != n)
        .map(|l| entry(cel, l))
        .collect::<Result<Vec<_>>>()?;
    let p = alg.field().characteristic();
    let predicted = p == 0 || alg.m() as u64 % p != 0;
    Ok(qh_from(&entries, predicted))
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaCheck {
    pub lambda: String,
    pub psi_zero: bool,
    pub phi_zero: bool,
    pub passed: bool,
    pub rule: String,
}

/// The vanishing lemmas for every cell index: with no vertical strands the
/// form vanishes iff all loop parameters do; otherwise psi_I = 0 forces the
/// form to vanish, and psi_I != 0 forces it not to.
pub fn gram_lemmas(cel: &Cellular) -> Result<Vec<LemmaCheck>> {
    let alg = cel.algebra();
    let n = alg.n();
    let mut out = Vec::new();
    for lambda in cel.lambdas() {
        let g = gram(cel, lambda)?;
        let phi_zero = g.matrix.is_zero();
        let (psi_zero, passed, rule) = if 2 * lambda.k(n) == n {
            let all_zero = alg.params().all_zero();
            (false, phi_zero == all_zero, "phi = 0 iff all delta_i = 0")
        } else {
            let psi_zero = psi(cel, lambda.index())?.is_zero();
            let rule = if psi_zero { "psi = 0 implies phi = 0" } else { "psi != 0 implies phi != 0" };
            (psi_zero, psi_zero == phi_zero, rule)
        };
        out.push(LemmaCheck {
            lambda: lambda.to_string(),
            psi_zero,
            phi_zero,
            passed,
            rule: rule.into(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::scalars::{make_field, validate_parameters, FieldSpec};

    fn cellular(m: u8, n: u8, spec: FieldSpec, deltas: &[i64]) -> Cellular {
        let f = make_field(spec).unwrap();
        let d = deltas.iter().map(|&v| f.from_int(v)).collect();
        let p = validate_parameters(&f, d, m as usize).unwrap();
        Cellular::new(Algebra::new(f, p, n).unwrap()).unwrap()
    }

    #[test]
    fn psi_values_at_m2() {
        let c = cellular(2, 4, FieldSpec::CyclotomicRationals(2), &[1, 0]);
        let f = c.field();
        assert_eq!(psi(&c, &[2, 2]).unwrap(), f.one());
        assert_eq!(psi(&c, &[1, 1]).unwrap(), f.from_int(4));
        let g = cellular(2, 4, FieldSpec::PrimePowerField { p: 2, r: 1 }, &[1, 0]);
        assert!(psi(&g, &[1, 1]).unwrap().is_zero());
    }

    #[test]
    fn small_grams() {
        let c = cellular(2, 4, FieldSpec::CyclotomicRationals(2), &[0, 0]);
        let g = gram(&c, &CellIndex::MinusHalf(1)).unwrap();
        assert_eq!(g.matrix.rows(), 12);
        assert!(g.matrix.is_zero());
        let g = gram(&c, &CellIndex::Minus { k: 0, index: vec![2; 4] }).unwrap();
        assert_eq!(g.matrix.rows(), 1);
        assert_eq!(g.matrix.get(0, 0), &c.field().one());
        let g = gram(&c, &CellIndex::Plus { k: 1, index: vec![2, 2] }).unwrap();
        assert!(!g.matrix.is_zero());
        assert!(g.matrix.is_symmetric());
    }
}
