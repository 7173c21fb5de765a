//! The cell datum: poset of cell indices, indexing sets of dangles, the
//! cellular basis and coordinates with respect to it.
//!
//! Coordinates are computed blockwise. Cutting a diagram yields its top
//! dangle, bottom dangle and dot word; all diagrams sharing the two dangles
//! form one block, spanned by the products of the strand polynomials
//! `p_i(x) = prod_{l > i} (x - xi_l)`. Each `p_i` is monic of degree
//! `m - i`, so the change of basis inside a block is triangular.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{AlgebraElement, Algebra};
use crate::diagram::{Dangle, DangleArc, DangleClass, Diagram, Endpoint, Strand};
use crate::enumerate::{enum_dangles, enum_diagrams};
use crate::error::{Error, Result};
use crate::scalars::{roots_of_unity, ExactMatrix, Field, RootList, Scalar};

/// Element of the poset of cell indices. Index words have entries in 1..=m.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CellIndex {
    Plus { k: u8, index: Vec<u8> },
    /// k = n/2 for even n; carries the parity class 1 or 2.
    MinusHalf(u8),
    Minus { k: u8, index: Vec<u8> },
}

impl CellIndex {
    pub fn k(&self, n: u8) -> u8 {
        match self {
            CellIndex::Plus { k, .. } | CellIndex::Minus { k, .. } => *k,
            CellIndex::MinusHalf(_) => n / 2,
        }
    }

    pub fn index(&self) -> &[u8] {
        match self {
            CellIndex::Plus { index, .. } | CellIndex::Minus { index, .. } => index,
            CellIndex::MinusHalf(_) => &[],
        }
    }

    pub fn class(&self) -> DangleClass {
        match self {
            CellIndex::Plus { .. } => DangleClass::Plus,
            CellIndex::Minus { .. } => DangleClass::Minus,
            CellIndex::MinusHalf(1) => DangleClass::Minus1,
            CellIndex::MinusHalf(_) => DangleClass::Minus2,
        }
    }

    fn from_class(class: DangleClass, k: u8, index: Vec<u8>) -> CellIndex {
        match class {
            DangleClass::Plus => CellIndex::Plus { k, index },
            DangleClass::Minus => CellIndex::Minus { k, index },
            DangleClass::Minus1 => CellIndex::MinusHalf(1),
            DangleClass::Minus2 => CellIndex::MinusHalf(2),
        }
    }
}

impl fmt::Display for CellIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |w: &[u8]| w.iter().map(u8::to_string).collect::<Vec<_>>().join(",");
        match self {
            CellIndex::Plus { k, index } => write!(f, "({k},[{}])+", word(index)),
            CellIndex::Minus { k, index } => write!(f, "({k},[{}])-", word(index)),
            CellIndex::MinusHalf(i) => write!(f, "half{i}-"),
        }
    }
}

impl FromStr for CellIndex {
    type Err = Error;

    /// Accepts the `Display` forms `(k,[i,..])+`, `(k,[j,..])-`, `half1-`, `half2-`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("cannot parse cell index {s:?}"));
        match s {
            "half1-" => return Ok(CellIndex::MinusHalf(1)),
            "half2-" => return Ok(CellIndex::MinusHalf(2)),
            _ => {}
        }
        let (body, plus) = if let Some(b) = s.strip_suffix('+') {
            (b, true)
        } else {
            (s.strip_suffix('-').ok_or_else(bad)?, false)
        };
        let body = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).ok_or_else(bad)?;
        let (k, rest) = body.split_once(',').ok_or_else(bad)?;
        let k: u8 = k.trim().parse().map_err(|_| bad())?;
        let rest = rest.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        let index = if rest.trim().is_empty() {
            Vec::new()
        } else {
            rest.split(',')
                .map(|x| x.trim().parse::<u8>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        };
        Ok(if plus {
            CellIndex::Plus { k, index }
        } else {
            CellIndex::Minus { k, index }
        })
    }
}

/// All words of length r over 1..=m in lexicographic order.
pub fn index_words(m: u8, r: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|w: Vec<u8>| {
                (1..=m).map(move |i| {
                    let mut w = w.clone();
                    w.push(i);
                    w
                })
            })
            .collect();
    }
    out
}

/// Componentwise order on index words.
pub fn dominated(a: &[u8], b: &[u8]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

/// The poset listed in a linear order refining it, smallest first.
pub fn lambda_set(m: u8, n: u8) -> Vec<CellIndex> {
    let mut out = Vec::new();
    for k in (1..=n / 2).rev() {
        for index in index_words(m, (n - 2 * k) as usize) {
            out.push(CellIndex::Plus { k, index });
        }
    }
    if n % 2 == 0 {
        out.push(CellIndex::MinusHalf(1));
        out.push(CellIndex::MinusHalf(2));
    }
    for k in (0..=(n - 1) / 2).rev() {
        for index in index_words(m, (n - 2 * k) as usize) {
            out.push(CellIndex::Minus { k, index });
        }
    }
    out
}

/// The partial order on cell indices.
pub fn leq(a: &CellIndex, b: &CellIndex) -> bool {
    use CellIndex::*;
    match (a, b) {
        (Plus { k: k1, index: i1 }, Plus { k: k2, index: i2 })
        | (Minus { k: k1, index: i1 }, Minus { k: k2, index: i2 }) => {
            k1 > k2 || (k1 == k2 && dominated(i1, i2))
        }
        (Plus { .. }, MinusHalf(_) | Minus { .. }) => true,
        (MinusHalf(i), MinusHalf(j)) => i == j,
        (MinusHalf(_), Minus { .. }) => true,
        _ => false,
    }
}

pub fn strictly_less(a: &CellIndex, b: &CellIndex) -> bool {
    a != b && leq(a, b)
}

/// Cut a diagram along its vertical strands: top dangle, bottom dangle
/// (read through top-bottom inversion) and the dot word on the vertical
/// strands from left to right.
pub fn cut(d: &Diagram) -> Result<(Dangle, Dangle, Vec<u8>)> {
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    let mut word = Vec::new();
    let mut vertical_blob = false;
    for s in d.strands() {
        let arc = DangleArc {
            left: s.a.index(),
            right: s.b.index(),
            dots: s.dots,
            blob: s.blob,
        };
        if s.is_top_arc() {
            top.push(arc);
        } else if s.is_bottom_arc() {
            bottom.push(arc);
        } else {
            word.push(s.dots);
            vertical_blob |= s.blob;
        }
    }
    let has_lines = !word.is_empty();
    let top_parity = top.iter().filter(|a| a.blob).count() % 2 == 1;
    let bottom_parity = bottom.iter().filter(|a| a.blob).count() % 2 == 1;
    let (n, m, bc) = (d.n(), d.m(), d.blob_cycle());
    let v1 = Dangle::new(n, m, bc, top, has_lines && top_parity)?;
    let v2 = Dangle::new(n, m, bc, bottom, has_lines && bottom_parity)?;
    if has_lines && vertical_blob != (top_parity ^ bottom_parity) {
        return Err(Error::Internal(format!("blob parity of {d} does not cut")));
    }
    Ok((v1, v2, word))
}

/// Inverse of `cut`: `v1` on top, `v2` inverted at the bottom, free points
/// joined left to right with `word[j]` dots on the j-th vertical strand.
pub fn glue(v1: &Dangle, v2: &Dangle, word: &[u8]) -> Result<Diagram> {
    if v1.n() != v2.n() || v1.m() != v2.m() || v1.class() != v2.class() || v1.k() != v2.k() {
        return Err(Error::Mismatch(format!(
            "cannot glue dangles of classes {:?}/{} and {:?}/{}",
            v1.class(),
            v1.k(),
            v2.class(),
            v2.k()
        )));
    }
    if word.len() != v1.lines().len() {
        return Err(Error::Mismatch(format!(
            "dot word of length {} for {} vertical strands",
            word.len(),
            v1.lines().len()
        )));
    }
    let mut strands = Vec::with_capacity(v1.n() as usize);
    for a in v1.arcs() {
        strands.push(Strand {
            a: Endpoint::Top(a.left),
            b: Endpoint::Top(a.right),
            dots: a.dots,
            blob: a.blob,
        });
    }
    for a in v2.arcs() {
        strands.push(Strand {
            a: Endpoint::Bottom(a.left),
            b: Endpoint::Bottom(a.right),
            dots: a.dots,
            blob: a.blob,
        });
    }
    for (j, (&t, &b)) in v1.lines().iter().zip(v2.lines()).enumerate() {
        if word[j] >= v1.m() {
            return Err(Error::OutOfRange(format!("{} dots with m = {}", word[j], v1.m())));
        }
        strands.push(Strand {
            a: Endpoint::Top(t),
            b: Endpoint::Bottom(b),
            dots: word[j],
            blob: j == 0 && (v1.line_blob() ^ v2.line_blob()),
        });
    }
    Diagram::from_strands(v1.n(), v1.m(), v1.blob_cycle(), strands)
}

/// One cellular basis element, addressed by positions in M(lambda).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellTerm {
    pub lambda: CellIndex,
    pub s: usize,
    pub t: usize,
}

pub type CellCoords = BTreeMap<CellTerm, Scalar>;

struct RowSet {
    rows: Vec<Dangle>,
    position: HashMap<Dangle, usize>,
}

/// The cellular structure of one algebra.
pub struct Cellular {
    alg: Algebra,
    roots: RootList,
    /// `strand_polys[i - 1]` holds the coefficients of `p_i`, lowest first,
    /// padded to length m.
    strand_polys: Vec<Vec<Scalar>>,
    lambdas: Vec<CellIndex>,
    rows: BTreeMap<(DangleClass, u8), RowSet>,
}

impl Cellular {
    pub fn new(alg: Algebra) -> Result<Cellular> {
        let (m, n) = (alg.m(), alg.n());
        let field = alg.field().clone();
        let roots = roots_of_unity(&field, m as u32)?;
        let strand_polys = (1..=m as usize)
            .map(|i| {
                let mut p = vec![field.one()];
                for l in i + 1..=m as usize {
                    // multiply by (x - xi_l)
                    let mut next = vec![field.zero(); p.len() + 1];
                    for (d, c) in p.iter().enumerate() {
                        next[d + 1] = field.add(&next[d + 1], c);
                        next[d] = field.sub(&next[d], &field.mul(c, roots.xi(l)));
                    }
                    p = next;
                }
                p.resize(m as usize, field.zero());
                p
            })
            .collect();
        let lambdas = lambda_set(m, n);
        let mut rows = BTreeMap::new();
        for lam in &lambdas {
            let key = (lam.class(), lam.k(n));
            if rows.contains_key(&key) {
                continue;
            }
            let list = enum_dangles(m, n, key.1, key.0)?;
            let position = list.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
            rows.insert(key, RowSet { rows: list, position });
        }
        Ok(Cellular {
            alg,
            roots,
            strand_polys,
            lambdas,
            rows,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn field(&self) -> &Field {
        self.alg.field()
    }

    pub fn roots(&self) -> &RootList {
        &self.roots
    }

    pub fn lambdas(&self) -> &[CellIndex] {
        &self.lambdas
    }

    /// The indexing set M(lambda) as dangles.
    pub fn m_set(&self, lambda: &CellIndex) -> &[Dangle] {
        &self.rows[&(lambda.class(), lambda.k(self.alg.n()))].rows
    }

    /// Coefficients of `p_i`, lowest degree first.
    pub fn strand_poly(&self, i: u8) -> &[Scalar] {
        &self.strand_polys[i as usize - 1]
    }

    /// `prod_j p_{i_j}(T_j)` as coefficients of dot words.
    pub fn group_algebra_cell(&self, index: &[u8]) -> Vec<(Vec<u8>, Scalar)> {
        let field = self.field();
        let mut terms: Vec<(Vec<u8>, Scalar)> = vec![(Vec::new(), field.one())];
        for &i in index {
            let p = self.strand_poly(i);
            let mut next = Vec::new();
            for (w, c) in &terms {
                for (d, pc) in p.iter().enumerate() {
                    if pc.is_zero() {
                        continue;
                    }
                    let mut w2 = w.clone();
                    w2.push(d as u8);
                    next.push((w2, field.mul(c, pc)));
                }
            }
            terms = next;
        }
        terms
    }

    fn check_index(&self, lambda: &CellIndex) -> Result<()> {
        let (m, n) = (self.alg.m(), self.alg.n());
        let ok = match lambda {
            CellIndex::Plus { k, index } => {
                *k >= 1 && 2 * k <= n && index.len() == (n - 2 * k) as usize
            }
            CellIndex::Minus { k, index } => {
                2 * k < n && index.len() == (n - 2 * k) as usize
            }
            CellIndex::MinusHalf(i) => n % 2 == 0 && (*i == 1 || *i == 2),
        } && lambda.index().iter().all(|&i| 1 <= i && i <= m);
        if ok {
            Ok(())
        } else {
            Err(Error::Invalid(format!("{lambda} is not a cell index for (m, n) = ({m}, {n})")))
        }
    }

    /// `C^lambda_{S,T}` expanded in the diagram basis.
    pub fn cell_basis_element(&self, lambda: &CellIndex, s: usize, t: usize) -> Result<AlgebraElement> {
        self.check_index(lambda)?;
        let rows = self.m_set(lambda);
        let (v1, v2) = match (rows.get(s), rows.get(t)) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(Error::OutOfRange(format!(
                    "rows ({s}, {t}) with |M({lambda})| = {}",
                    rows.len()
                )))
            }
        };
        let mut out = AlgebraElement::zero();
        for (w, c) in self.group_algebra_cell(lambda.index()) {
            out.add_term(self.field(), glue(v1, v2, &w)?, &c);
        }
        Ok(out)
    }

    pub fn cell_term_element(&self, term: &CellTerm) -> Result<AlgebraElement> {
        self.cell_basis_element(&term.lambda, term.s, term.t)
    }

    /// Every cellular basis element address, in poset-refining order.
    pub fn cell_terms(&self) -> Vec<CellTerm> {
        let mut out = Vec::new();
        for lam in &self.lambdas {
            let size = self.m_set(lam).len();
            for s in 0..size {
                for t in 0..size {
                    out.push(CellTerm {
                        lambda: lam.clone(),
                        s,
                        t,
                    });
                }
            }
        }
        out
    }

    /// Coordinates of `x` in the cellular basis.
    pub fn to_cellular(&self, x: &AlgebraElement) -> Result<CellCoords> {
        let field = self.field();
        let m = self.alg.m() as usize;
        let n = self.alg.n();
        let mut blocks: BTreeMap<(DangleClass, u8, usize, usize), Vec<Scalar>> = BTreeMap::new();
        for (d, c) in x.terms() {
            let (v1, v2, word) = cut(d)?;
            let key = (v1.class(), v1.k() as u8);
            let rs = self
                .rows
                .get(&key)
                .ok_or_else(|| Error::Internal(format!("no rows for {key:?}")))?;
            let (s, t) = (rs.position[&v1], rs.position[&v2]);
            let len = m.pow(word.len() as u32);
            let block = blocks
                .entry((key.0, key.1, s, t))
                .or_insert_with(|| vec![field.zero(); len]);
            let pos = word.iter().fold(0usize, |acc, &d| acc * m + d as usize);
            block[pos] = field.add(&block[pos], c);
        }
        let mut out = CellCoords::new();
        for ((class, k, s, t), mut block) in blocks {
            let r = (n - 2 * k) as usize;
            self.monomials_to_cells(&mut block, r);
            for (pos, c) in block.into_iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut index = vec![0u8; r];
                let mut p = pos;
                for j in (0..r).rev() {
                    index[j] = (p % m) as u8 + 1;
                    p /= m;
                }
                out.insert(
                    CellTerm {
                        lambda: CellIndex::from_class(class, k, index),
                        s,
                        t,
                    },
                    c,
                );
            }
        }
        Ok(out)
    }

    /// In place: coefficients of monomials (position = dot word in base m)
    /// to coefficients of products of strand polynomials (position = index
    /// word minus one, in base m).
    fn monomials_to_cells(&self, block: &mut [Scalar], r: usize) {
        let field = self.field();
        let m = self.alg.m() as usize;
        for axis in 0..r {
            let stride = m.pow((r - 1 - axis) as u32);
            for base in 0..block.len() {
                if (base / stride) % m != 0 {
                    continue;
                }
                let mut c: Vec<Scalar> = (0..m).map(|d| block[base + d * stride].clone()).collect();
                let mut a = vec![field.zero(); m];
                for d in (0..m).rev() {
                    let i = m - d;
                    let lead = c[d].clone();
                    if !lead.is_zero() {
                        for (e, pe) in self.strand_polys[i - 1].iter().enumerate().take(d + 1) {
                            c[e] = field.sub(&c[e], &field.mul(&lead, pe));
                        }
                    }
                    a[i - 1] = lead;
                }
                for (i, v) in a.into_iter().enumerate() {
                    block[base + i * stride] = v;
                }
            }
        }
    }
}

/// Dense change of basis between the diagram basis (rows) and the cellular
/// basis (columns), built independently of the blockwise coordinates.
pub struct ChangeOfBasis {
    pub diagrams: Vec<Diagram>,
    pub cells: Vec<CellTerm>,
    pub matrix: ExactMatrix,
}

impl ChangeOfBasis {
    pub fn build(cel: &Cellular, budget: u128) -> Result<ChangeOfBasis> {
        let field = cel.field();
        let en = enum_diagrams(cel.alg.m(), cel.alg.n(), budget)?;
        let row: HashMap<&Diagram, usize> = en.diagrams.iter().enumerate().map(|(i, d)| (d, i)).collect();
        let cells = cel.cell_terms();
        let mut matrix = ExactMatrix::zeros(field, en.diagrams.len(), cells.len());
        for (j, term) in cells.iter().enumerate() {
            for (d, c) in cel.cell_term_element(term)?.terms() {
                let i = *row
                    .get(d)
                    .ok_or_else(|| Error::Internal(format!("{d} is not a basis diagram")))?;
                matrix.set(i, j, c.clone());
            }
        }
        Ok(ChangeOfBasis {
            diagrams: en.diagrams,
            cells,
            matrix,
        })
    }

    pub fn rank(&self, field: &Field) -> usize {
        self.matrix.rank(field)
    }

    /// Cellular coordinates by a dense linear solve.
    pub fn solve(&self, field: &Field, x: &AlgebraElement) -> Result<CellCoords> {
        let mut b = vec![field.zero(); self.diagrams.len()];
        for (d, c) in x.terms() {
            let i = self
                .diagrams
                .binary_search(d)
                .map_err(|_| Error::Internal(format!("{d} is not a basis diagram")))?;
            b[i] = c.clone();
        }
        let sol = self
            .matrix
            .solve(field, &b)
            .ok_or_else(|| Error::Internal("element outside the cellular span".into()))?;
        Ok(self
            .cells
            .iter()
            .cloned()
            .zip(sol)
            .filter(|(_, c)| !c.is_zero())
            .collect())
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CellDatumReport {
    pub dimension: usize,
    pub cellular_elements: usize,
    pub rank: usize,
    pub c1: bool,
    pub c2_checked: usize,
    pub c2: bool,
    pub c3_checked: usize,
    pub c3: bool,
    pub failures: Vec<String>,
    pub seed: u64,
}

impl CellDatumReport {
    pub fn passed(&self) -> bool {
        self.c1 && self.c2 && self.c3
    }
}

/// Coefficients `r_a(U, S)` of `a C^lambda_{S,T}` on the lambda layer, or a
/// description of the first term that is neither on that layer with second
/// index T nor strictly below lambda.
pub fn layer_coefficients(
    cel: &Cellular,
    a: &Diagram,
    lambda: &CellIndex,
    s: usize,
    t: usize,
) -> Result<std::result::Result<BTreeMap<usize, Scalar>, String>> {
    let alg = cel.algebra();
    let c = cel.cell_basis_element(lambda, s, t)?;
    let y = alg.product(&alg.basis(a.clone())?, &c)?;
    let mut r = BTreeMap::new();
    for (term, v) in cel.to_cellular(&y)? {
        if term.lambda == *lambda && term.t == t {
            r.insert(term.s, v);
        } else if !strictly_less(&term.lambda, lambda) {
            return Ok(Err(format!(
                "{a} * C[{lambda}; {s}, {t}] has a term at {} ({}, {})",
                term.lambda, term.s, term.t
            )));
        }
    }
    Ok(Ok(r))
}

/// Check the three cell-datum axioms: linear independence of the cellular
/// elements, the involution swapping indices, and independence of the
/// left action coefficients from the second index.
pub fn verify_cell_datum(cel: &Cellular, samples: usize, seed: u64, budget: u128) -> Result<CellDatumReport> {
    let field = cel.field();
    let alg = cel.algebra();
    let mut rep = CellDatumReport {
        seed,
        ..Default::default()
    };

    let cob = ChangeOfBasis::build(cel, budget)?;
    rep.dimension = cob.diagrams.len();
    rep.cellular_elements = cob.cells.len();
    rep.rank = cob.rank(field);
    rep.c1 = rep.rank == rep.dimension && rep.cellular_elements == rep.dimension;

    rep.c2 = true;
    for term in &cob.cells {
        let x = cel.cell_term_element(term)?;
        let y = cel.cell_basis_element(&term.lambda, term.t, term.s)?;
        rep.c2_checked += 1;
        if alg.flip(&x) != y {
            rep.c2 = false;
            rep.failures.push(format!("flip of C[{}; {}, {}]", term.lambda, term.s, term.t));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let wide: Vec<&CellIndex> = cel.lambdas().iter().filter(|l| cel.m_set(l).len() >= 2).collect();
    rep.c3 = true;
    if !wide.is_empty() {
        for _ in 0..samples {
            let a = cob.diagrams.choose(&mut rng).expect("nonempty basis");
            let lambda = *wide.choose(&mut rng).expect("nonempty");
            let size = cel.m_set(lambda).len();
            let s = rng.gen_range(0..size);
            let t = rng.gen_range(0..size);
            let t2 = (t + rng.gen_range(1..size)) % size;
            rep.c3_checked += 1;
            let r1 = layer_coefficients(cel, a, lambda, s, t)?;
            let r2 = layer_coefficients(cel, a, lambda, s, t2)?;
            match (r1, r2) {
                (Ok(x), Ok(y)) if x == y => {}
                (Ok(_), Ok(_)) => {
                    rep.c3 = false;
                    rep.failures.push(format!("r_a(U, {s}) depends on T for a = {a}, lambda = {lambda}"));
                }
                (Err(e), _) | (_, Err(e)) => {
                    rep.c3 = false;
                    rep.failures.push(e);
                }
            }
        }
    }
    Ok(rep)
}
