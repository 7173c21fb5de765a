//! Formal linear combinations of basis diagrams and the multiplication
//! context that evaluates closed loops.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::compose::{multiply_diagrams_with, LoopRule};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::scalars::{validate_parameters, Field, ParameterSet, Scalar};

/// Finitely supported map from diagrams to nonzero scalars.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<Diagram, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, d: &Diagram) -> Option<&Scalar> {
        self.terms.get(d)
    }

    /// Add `c * d` in place.
    pub fn add_term(&mut self, field: &Field, d: Diagram, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&d) {
            Some(v) => {
                let s = field.add(v, c);
                if s.is_zero() {
                    self.terms.remove(&d);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(d, c.clone());
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorName {
    EBar1,
    E(u8),
    T(u8),
    Identity,
}

impl fmt::Display for GeneratorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorName::EBar1 => write!(f, "e1bar"),
            GeneratorName::E(i) => write!(f, "e{i}"),
            GeneratorName::T(i) => write!(f, "T{i}"),
            GeneratorName::Identity => write!(f, "1"),
        }
    }
}

impl FromStr for GeneratorName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("unknown generator {s:?}"));
        match s {
            "e1bar" => Ok(GeneratorName::EBar1),
            "1" | "id" => Ok(GeneratorName::Identity),
            _ => {
                if let Some(i) = s.strip_prefix('e') {
                    i.parse().map(GeneratorName::E).map_err(|_| bad())
                } else if let Some(i) = s.strip_prefix('T') {
                    i.parse().map(GeneratorName::T).map_err(|_| bad())
                } else {
                    Err(bad())
                }
            }
        }
    }
}

/// Evaluation context: working field, loop parameters and diagram size.
#[derive(Clone, Debug)]
pub struct Algebra {
    field: Field,
    params: ParameterSet,
    rule: LoopRule,
    n: u8,
    m: u8,
}

impl Algebra {
    pub fn new(field: Field, params: ParameterSet, n: u8) -> Result<Algebra> {
        if n < 4 {
            return Err(Error::Invalid(format!("n = {n} < 4")));
        }
        let m = params.m();
        if m == 0 || m > u8::MAX as usize {
            return Err(Error::Invalid(format!("m = {m} out of range")));
        }
        Ok(Algebra {
            field,
            params,
            rule: LoopRule::Formula,
            n,
            m: m as u8,
        })
    }

    /// The same algebra evaluating loops by another rule.
    pub fn with_rule(mut self, rule: LoopRule) -> Algebra {
        self.rule = rule;
        self
    }

    pub fn rule(&self) -> LoopRule {
        self.rule
    }

    /// Context whose loop parameters are all equal to `delta` where the
    /// constraint allows it (`delta` in {0, 1} when m > 1, anything at m = 1).
    pub fn with_uniform_delta(field: Field, n: u8, m: u8, delta: i64) -> Result<Algebra> {
        let deltas = vec![field.from_int(delta); m as usize];
        let params = validate_parameters(&field, deltas, m as usize)?;
        Algebra::new(field, params, n)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn params(&self) -> &ParameterSet {
        &self.params
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    fn check(&self, d: &Diagram) -> Result<()> {
        if d.n() != self.n || d.m() != self.m {
            return Err(Error::Mismatch(format!(
                "diagram with (n, m) = ({}, {}) in an algebra with ({}, {})",
                d.n(),
                d.m(),
                self.n,
                self.m
            )));
        }
        Ok(())
    }

    pub fn basis(&self, d: Diagram) -> Result<AlgebraElement> {
        self.check(&d)?;
        let mut x = AlgebraElement::zero();
        x.add_term(&self.field, d, &self.field.one());
        Ok(x)
    }

    pub fn generator(&self, name: GeneratorName) -> Result<AlgebraElement> {
        let (n, m) = (self.n, self.m);
        let d = match name {
            GeneratorName::EBar1 => Diagram::e_bar(n, m)?,
            GeneratorName::E(i) => Diagram::e(n, m, i)?,
            GeneratorName::T(i) => Diagram::t(n, m, i)?,
            GeneratorName::Identity => Diagram::identity(n, m)?,
        };
        self.basis(d)
    }

    pub fn add(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = x.clone();
        for (d, c) in y.terms() {
            out.add_term(&self.field, d.clone(), c);
        }
        out
    }

    pub fn sub(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        self.add(x, &self.scale(&self.field.from_int(-1), y))
    }

    pub fn scale(&self, c: &Scalar, x: &AlgebraElement) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            terms: x
                .terms()
                .map(|(d, v)| (d.clone(), self.field.mul(c, v)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn multiply(&self, g1: &Diagram, g2: &Diagram) -> Result<(Scalar, Diagram)> {
        self.check(g1)?;
        self.check(g2)?;
        multiply_diagrams_with(&self.field, &self.params, self.rule, g1, g2)
    }

    pub fn product(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero();
        for (d1, c1) in x.terms() {
            for (d2, c2) in y.terms() {
                let (c, d) = self.multiply(d1, d2)?;
                if c.is_zero() {
                    continue;
                }
                let coeff = self.field.mul(&self.field.mul(c1, c2), &c);
                out.add_term(&self.field, d, &coeff);
            }
        }
        Ok(out)
    }

    pub fn product_all(&self, factors: &[AlgebraElement]) -> Result<AlgebraElement> {
        let mut acc = self.generator(GeneratorName::Identity)?;
        for f in factors {
            acc = self.product(&acc, f)?;
        }
        Ok(acc)
    }

    /// Linear extension of top-bottom inversion.
    pub fn flip(&self, x: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            terms: x.terms().map(|(d, c)| (d.flip(), c.clone())).collect(),
        }
    }

    pub fn to_json(&self, x: &AlgebraElement) -> Value {
        Value::Array(
            x.terms()
                .map(|(d, c)| json!({"diagram": d.to_json(), "scalar": self.field.scalar_to_json(c)}))
                .collect(),
        )
    }

    pub fn from_json(&self, v: &Value) -> Result<AlgebraElement> {
        let items = v
            .as_array()
            .ok_or_else(|| Error::Json("an algebra element is a list of terms".into()))?;
        let mut out = AlgebraElement::zero();
        for item in items {
            let d = Diagram::from_json(
                item.get("diagram")
                    .ok_or_else(|| Error::Json("term without diagram".into()))?,
            )?;
            self.check(&d)?;
            let c = self.field.scalar_from_json(
                item.get("scalar")
                    .ok_or_else(|| Error::Json("term without scalar".into()))?,
            )?;
            out.add_term(&self.field, d, &c);
        }
        Ok(out)
    }

    /// Diagrams reachable from the identity by right multiplication with
    /// the given generators, ignoring coefficients.
    pub fn diagram_closure(&self, gens: &[Diagram]) -> Result<BTreeSet<Diagram>> {
        let start = Diagram::identity(self.n, self.m)?;
        let mut seen = BTreeSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(d) = queue.pop_front() {
            for g in gens {
                let (_, p) = self.multiply(&d, g)?;
                if seen.insert(p.clone()) {
                    queue.push_back(p);
                }
            }
        }
        Ok(seen)
    }
}

/// Outcome of a product identity checked on basis diagram tuples.
#[derive(Clone, Debug, Default, Serialize)]
pub struct IdentityReport {
    pub checked: usize,
    pub failures: usize,
    /// Keys of the first few failing tuples.
    pub examples: Vec<Vec<String>>,
    pub seed: Option<u64>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn record(&mut self, ok: bool, tuple: &[&Diagram]) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < 5 {
                self.examples.push(tuple.iter().map(|d| d.key()).collect());
            }
        }
    }
}

fn sampled<'a>(basis: &'a [Diagram], rng: &mut ChaCha8Rng) -> &'a Diagram {
    &basis[rng.gen_range(0..basis.len())]
}

/// `(x y) z = x (y z)` on every triple of `basis`.
pub fn check_associativity_exhaustive(alg: &Algebra, basis: &[Diagram]) -> Result<IdentityReport> {
    let mut rep = IdentityReport::default();
    for x in basis {
        for y in basis {
            let (cxy, xy) = alg.multiply(x, y)?;
            for z in basis {
                rep.record(associative_at(alg, x, y, z, &cxy, &xy)?, &[x, y, z]);
            }
        }
    }
    Ok(rep)
}

/// `(x y) z = x (y z)` on `samples` seeded random triples from `basis`.
pub fn check_associativity_sampled(alg: &Algebra, basis: &[Diagram], samples: usize, seed: u64) -> Result<IdentityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = IdentityReport {
        seed: Some(seed),
        ..Default::default()
    };
    for _ in 0..samples {
        let (x, y, z) = (sampled(basis, &mut rng), sampled(basis, &mut rng), sampled(basis, &mut rng));
        let (cxy, xy) = alg.multiply(x, y)?;
        rep.record(associative_at(alg, x, y, z, &cxy, &xy)?, &[x, y, z]);
    }
    Ok(rep)
}

fn associative_at(alg: &Algebra, x: &Diagram, y: &Diagram, z: &Diagram, cxy: &Scalar, xy: &Diagram) -> Result<bool> {
    let f = alg.field();
    let (c1, left) = alg.multiply(xy, z)?;
    let (cyz, yz) = alg.multiply(y, z)?;
    let (c2, right) = alg.multiply(x, &yz)?;
    let lc = f.mul(cxy, &c1);
    let rc = f.mul(&cyz, &c2);
    Ok(if lc.is_zero() && rc.is_zero() {
        true
    } else {
        lc == rc && left == right
    })
}

/// `flip(x y) = flip(y) flip(x)` on `samples` seeded random pairs.
pub fn check_involution(alg: &Algebra, basis: &[Diagram], samples: usize, seed: u64) -> Result<IdentityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = IdentityReport {
        seed: Some(seed),
        ..Default::default()
    };
    for _ in 0..samples {
        let (x, y) = (sampled(basis, &mut rng), sampled(basis, &mut rng));
        let (c, xy) = alg.multiply(x, y)?;
        let (c2, yx) = alg.multiply(&y.flip(), &x.flip())?;
        let ok = if c.is_zero() && c2.is_zero() { true } else { c == c2 && xy.flip() == yx };
        rep.record(ok, &[x, y]);
    }
    Ok(rep)
}

/// One checked instance of a defining relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: String,
    pub passed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Node {
    Bar,
    Plain(u8),
}

impl Node {
    fn label(self) -> String {
        match self {
            Node::Bar => "1bar".into(),
            Node::Plain(i) => i.to_string(),
        }
    }
}

/// Dynkin adjacency of type D: 1bar - 2, 1 - 2, then the chain 2 - 3 - ... .
fn adjacent(x: Node, y: Node) -> bool {
    match (x, y) {
        (Node::Bar, Node::Plain(j)) | (Node::Plain(j), Node::Bar) => j == 2,
        (Node::Bar, Node::Bar) => false,
        (Node::Plain(i), Node::Plain(j)) => i.abs_diff(j) == 1,
    }
}

/// Check the defining relations of the type D Temperley-Lieb algebra on
/// the m = 1 diagram realization with loop value `delta`.
pub fn verify_tl_d_relations(field: &Field, delta: &Scalar, n: u8) -> Result<Vec<RelationCheck>> {
    let params = validate_parameters(field, vec![delta.clone()], 1)?;
    let alg = Algebra::new(field.clone(), params, n)?;
    let nodes: Vec<Node> = std::iter::once(Node::Bar)
        .chain((1..n).map(Node::Plain))
        .collect();
    let gen = |x: Node| match x {
        Node::Bar => alg.generator(GeneratorName::EBar1),
        Node::Plain(i) => alg.generator(GeneratorName::E(i)),
    };
    let mut out = Vec::new();
    for &x in &nodes {
        let ex = gen(x)?;
        let lhs = alg.product(&ex, &ex)?;
        out.push(RelationCheck {
            relation: format!("E{0} E{0} = delta E{0}", x.label()),
            passed: lhs == alg.scale(delta, &ex),
        });
    }
    for (a, &x) in nodes.iter().enumerate() {
        for &y in &nodes[a + 1..] {
            let (ex, ey) = (gen(x)?, gen(y)?);
            if adjacent(x, y) {
                for (p, q, ep, eq) in [(x, y, &ex, &ey), (y, x, &ey, &ex)] {
                    let lhs = alg.product_all(&[ep.clone(), eq.clone(), ep.clone()])?;
                    out.push(RelationCheck {
                        relation: format!("E{0} E{1} E{0} = E{0}", p.label(), q.label()),
                        passed: &lhs == ep,
                    });
                }
            } else {
                let lhs = alg.product(&ex, &ey)?;
                let rhs = alg.product(&ey, &ex)?;
                out.push(RelationCheck {
                    relation: format!("E{0} E{1} = E{1} E{0}", x.label(), y.label()),
                    passed: lhs == rhs,
                });
            }
        }
    }
    Ok(out)
}
