use std::sync::OnceLock;

use ctld::algebra::{Algebra, AlgebraElement};
use ctld::cellular::{cut, glue, lambda_set, leq, Cellular};
use ctld::compose::LoopRule;
use ctld::diagram::{Diagram, Strand};
use ctld::enumerate::{enum_diagrams, DEFAULT_BUDGET};
use ctld::rep::{action_matrix, gram, gram_with};
use ctld::scalars::{make_field, parse_parameters, ExactMatrix, Field, Scalar};
use proptest::prelude::*;
use proptest::sample::select;

fn field(s: &str) -> Field {
    make_field(s.parse().unwrap()).unwrap()
}

fn algebra(f: &str, m: u8, n: u8, deltas: &str) -> Algebra {
    let f = field(f);
    let p = parse_parameters(&f, deltas, m as usize).unwrap();
    Algebra::new(f, p, n).unwrap()
}

fn basis_2_4() -> &'static Vec<Diagram> {
    static B: OnceLock<Vec<Diagram>> = OnceLock::new();
    B.get_or_init(|| enum_diagrams(2, 4, DEFAULT_BUDGET).unwrap().diagrams)
}

fn basis_3_4() -> &'static Vec<Diagram> {
    static B: OnceLock<Vec<Diagram>> = OnceLock::new();
    B.get_or_init(|| enum_diagrams(3, 4, DEFAULT_BUDGET).unwrap().diagrams)
}

fn basis_2_5() -> &'static Vec<Diagram> {
    static B: OnceLock<Vec<Diagram>> = OnceLock::new();
    B.get_or_init(|| enum_diagrams(2, 5, DEFAULT_BUDGET).unwrap().diagrams)
}

/// `c0 + c1 x + ... ` evaluated at the field generator.
fn element(f: &Field, coeffs: &[i64]) -> Scalar {
    let g = f.generator();
    let mut out = f.zero();
    let mut power = f.one();
    for &c in coeffs {
        out = f.add(&out, &f.mul(&f.from_int(c), &power));
        power = f.mul(&power, &g);
    }
    out
}

fn fields() -> impl Strategy<Value = &'static str> {
    select(vec!["Q", "Q(zeta_3)", "Q(zeta_4)", "GF(5)", "GF(2^3)", "GF(3^2)"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(spec in fields(), a in prop::collection::vec(-9i64..10, 3), b in prop::collection::vec(-9i64..10, 3), c in prop::collection::vec(-9i64..10, 3)) {
        let f = field(spec);
        let (a, b, c) = (element(&f, &a), element(&f, &b), element(&f, &c));
        prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
        if !a.is_zero() {
            let inv = f.inv(&a).unwrap();
            prop_assert_eq!(f.mul(&a, &inv), f.one());
        } else {
            prop_assert!(f.inv(&a).is_none());
        }
    }

    #[test]
    fn rank_of_transpose(spec in fields(), rows in 1usize..6, cols in 1usize..6, seed in prop::collection::vec(-2i64..3, 36)) {
        let f = field(spec);
        let entries: Vec<Vec<Scalar>> = (0..rows)
            .map(|i| (0..cols).map(|j| f.from_int(seed[i * 6 + j])).collect())
            .collect();
        let m = ExactMatrix::from_rows(entries);
        prop_assert_eq!(m.rank(&f), m.transpose().rank(&f));
        prop_assert!(m.rank(&f) <= rows.min(cols));
        prop_assert_eq!(m.rank(&f) + m.nullspace(&f).len(), cols);
    }

    #[test]
    fn flip_is_an_involutive_anti_automorphism(x in select(basis_2_4().clone()), y in select(basis_2_4().clone()), deltas in select(vec!["1,0", "1,5", "0,0", "4,0"])) {
        let alg = algebra("Q", 2, 4, deltas);
        prop_assert_eq!(x.flip().flip(), x.clone());
        prop_assert_eq!(x.flip().classify(), x.classify());
        let (c, xy) = alg.multiply(&x, &y).unwrap();
        let (c2, yx) = alg.multiply(&y.flip(), &x.flip()).unwrap();
        prop_assert_eq!(c, c2);
        prop_assert_eq!(xy.flip(), yx);
    }

    #[test]
    fn exposure_ignores_dots(d in select(basis_3_4().clone()), shifts in prop::collection::vec(0u8..3, 4)) {
        let strands: Vec<Strand> = d
            .strands()
            .iter()
            .zip(&shifts)
            .map(|(s, &k)| Strand { dots: (s.dots + k) % 3, ..*s })
            .collect();
        let redotted = Diagram::from_strands(d.n(), d.m(), d.blob_cycle(), strands).unwrap();
        prop_assert_eq!(redotted.exposed_strands(), d.exposed_strands());
    }

    #[test]
    fn diagram_json_round_trip(d in select(basis_2_5().clone())) {
        let text = d.to_json().to_string();
        let back = Diagram::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(back.to_json().to_string(), text);
    }

    #[test]
    fn element_json_round_trip(terms in prop::collection::vec((select(basis_3_4().clone()), -4i64..5, -4i64..5), 0..6)) {
        let alg = algebra("Q(zeta_3)", 3, 4, "1,0,0");
        let f = alg.field();
        let mut x = AlgebraElement::zero();
        for (d, a, b) in terms {
            x.add_term(f, d, &element(f, &[a, b]));
        }
        let back = alg.from_json(&alg.to_json(&x)).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn cut_then_glue_is_the_identity(d in select(basis_2_5().clone())) {
        let (v1, v2, word) = cut(&d).unwrap();
        prop_assert_eq!(v1.k(), v2.k());
        prop_assert_eq!(glue(&v1, &v2, &word).unwrap(), d);
    }

    #[test]
    fn cut_glue_at_m3(d in select(basis_3_4().clone())) {
        let (v1, v2, word) = cut(&d).unwrap();
        prop_assert_eq!(glue(&v1, &v2, &word).unwrap(), d);
    }
}

#[test]
fn leq_is_a_partial_order() {
    for (m, n) in [(2, 4), (2, 5)] {
        let lambdas = lambda_set(m, n);
        for a in &lambdas {
            assert!(leq(a, a));
            for b in &lambdas {
                if a != b && leq(a, b) {
                    assert!(!leq(b, a), "{a} and {b}");
                }
                for c in &lambdas {
                    if leq(a, b) && leq(b, c) {
                        assert!(leq(a, c), "{a} <= {b} <= {c}");
                    }
                }
            }
        }
    }
}

const CASES: [(&str, &str); 4] = [("Q", "1,0"), ("Q", "0,0"), ("GF(2)", "1,0"), ("GF(3)", "0,0")];

#[test]
fn grams_are_symmetric_and_independent_of_the_auxiliary_pair() {
    for (f, deltas) in CASES {
        let cel = Cellular::new(algebra(f, 2, 4, deltas)).unwrap();
        for l in cel.lambdas() {
            let g = gram(&cel, l).unwrap();
            assert!(g.matrix.is_symmetric(), "{f} ({deltas}) {l}");
            let size = cel.m_set(l).len();
            for (u, v) in [(size - 1, 0), (0, size - 1), (size / 2, size - 1)] {
                assert_eq!(gram_with(&cel, l, u, v).unwrap().matrix, g.matrix, "{f} ({deltas}) {l} at ({u}, {v})");
            }
        }
    }
}

fn generators(n: u8, m: u8) -> Vec<Diagram> {
    let mut g = vec![Diagram::e_bar(n, m).unwrap()];
    g.extend((1..n).map(|i| Diagram::e(n, m, i).unwrap()));
    g.extend((1..=n).map(|i| Diagram::t(n, m, i).unwrap()));
    g
}

/// Contexts that are associative algebras: the coefficient formula with
/// delta_0 = 1 (where both loop rules agree) and the relations rule for
/// any parameters.
fn module_cases() -> Vec<(LoopRule, &'static str, &'static str)> {
    let mut out = vec![
        (LoopRule::Formula, "Q", "1,0"),
        (LoopRule::Formula, "Q", "1,5"),
        (LoopRule::Formula, "GF(2)", "1,0"),
    ];
    for (f, d) in [("Q", "0,0"), ("Q", "3,0"), ("GF(2)", "0,0"), ("GF(3)", "0,0")] {
        out.push((LoopRule::Relations, f, d));
    }
    out
}

/// Number of (lambda, a, b) with `r_a r_b != c r_d` where `a b = c d`.
fn action_defects(cel: &Cellular) -> usize {
    let alg = cel.algebra();
    let f = cel.field();
    let gens = generators(4, 2);
    let mut defects = 0;
    for l in cel.lambdas() {
        for a in &gens {
            let ra = action_matrix(cel, l, a).unwrap();
            for b in &gens {
                let (c, ab) = alg.multiply(a, b).unwrap();
                let lhs = action_matrix(cel, l, &ab).unwrap();
                let rhs = ra.mul(f, &action_matrix(cel, l, b).unwrap());
                let size = lhs.rows();
                if (0..size).any(|i| (0..size).any(|j| &f.mul(&c, lhs.get(i, j)) != rhs.get(i, j))) {
                    defects += 1;
                }
            }
        }
    }
    defects
}

#[test]
fn radical_is_a_submodule() {
    for (rule, f, deltas) in module_cases() {
        let cel = Cellular::new(algebra(f, 2, 4, deltas).with_rule(rule)).unwrap();
        let field = cel.field();
        for l in cel.lambdas() {
            let g = gram(&cel, l).unwrap().matrix;
            let kernel = g.nullspace(field);
            assert_eq!(g.rank(field) + kernel.len(), cel.m_set(l).len());
            for a in generators(4, 2) {
                let act = action_matrix(&cel, l, &a).unwrap();
                for v in &kernel {
                    let image = act.mul_vec(field, v);
                    assert!(g.mul_vec(field, &image).iter().all(|x| x.is_zero()), "{rule:?} {f} ({deltas}) {l} under {a}");
                }
            }
        }
    }
}

#[test]
fn action_respects_products() {
    for (rule, f, deltas) in module_cases() {
        let cel = Cellular::new(algebra(f, 2, 4, deltas).with_rule(rule)).unwrap();
        assert_eq!(action_defects(&cel), 0, "{rule:?} {f} ({deltas})");
    }
}

#[test]
fn coefficient_formula_is_not_a_module_action_when_delta0_is_not_one() {
    for deltas in ["0,0", "3,0"] {
        let cel = Cellular::new(algebra("Q", 2, 4, deltas)).unwrap();
        assert!(action_defects(&cel) > 0, "({deltas})");
    }
}
