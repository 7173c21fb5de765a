//! Stacking two diagrams, tracing the composite strands and closed loops,
//! and reading off the multiplication coefficient.
//!
//! Dots are consolidated by walking each composite strand from its
//! reference endpoint (left end of a horizontal result, top end of a
//! vertical one) with a running sign. Crossing a junction multiplies the
//! sign by -1 exactly when the junction pairs a left end with a right end,
//! or a vertical piece with the right end of a horizontal one.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::diagram::{Diagram, Endpoint, Strand};
use crate::error::{Error, Result};
use crate::scalars::{Field, ParameterSet, Scalar};

static LOOPS_CHECKED: AtomicU64 = AtomicU64::new(0);
static SIGN_VIOLATIONS: AtomicU64 = AtomicU64::new(0);

/// Process-wide count of traced loops and of loops whose junction signs
/// did not multiply to +1.
pub fn loop_sign_stats() -> (u64, u64) {
    (
        LOOPS_CHECKED.load(Ordering::Relaxed),
        SIGN_VIOLATIONS.load(Ordering::Relaxed),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Layer {
    Upper,
    Lower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Piece {
    pub layer: Layer,
    /// Index into the layer diagram's `strands()`.
    pub strand: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositeStrand {
    pub a: Endpoint,
    pub b: Endpoint,
    pub dots: u8,
    pub blob: bool,
    pub pieces: Vec<Piece>,
}

/// `loops[i][1]` counts closed cycles with i dots and one blob,
/// `loops[i][0]` those with i dots and no blob.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LoopCensus {
    pub loops: Vec<[u32; 2]>,
}

impl LoopCensus {
    pub fn total(&self) -> u32 {
        self.loops.iter().map(|c| c[0] + c[1]).sum()
    }

    pub fn has_blob_loop(&self) -> bool {
        self.loops.iter().any(|c| c[1] > 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionTrace {
    pub strands: Vec<CompositeStrand>,
    pub census: LoopCensus,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Role {
    Left,
    Right,
    Vertical,
}

fn role(s: &Strand, e: Endpoint) -> Role {
    if s.is_vertical() {
        Role::Vertical
    } else if s.a == e {
        Role::Left
    } else {
        Role::Right
    }
}

fn junction_sign(x: Role, y: Role) -> i64 {
    use Role::*;
    match (x, y) {
        (Left, Right) | (Right, Left) => -1,
        (Vertical, Right) | (Right, Vertical) => -1,
        _ => 1,
    }
}

struct Stack<'a> {
    upper: &'a Diagram,
    lower: &'a Diagram,
    /// Per interface point (0-based): strand index in the upper and lower layer.
    upper_at: Vec<usize>,
    lower_at: Vec<usize>,
}

impl<'a> Stack<'a> {
    fn new(upper: &'a Diagram, lower: &'a Diagram) -> Stack<'a> {
        let n = upper.n() as usize;
        let mut upper_at = vec![usize::MAX; n];
        let mut lower_at = vec![usize::MAX; n];
        for (i, s) in upper.strands().iter().enumerate() {
            for e in [s.a, s.b] {
                if let Endpoint::Bottom(j) = e {
                    upper_at[j as usize - 1] = i;
                }
            }
        }
        for (i, s) in lower.strands().iter().enumerate() {
            for e in [s.a, s.b] {
                if let Endpoint::Top(j) = e {
                    lower_at[j as usize - 1] = i;
                }
            }
        }
        Stack {
            upper,
            lower,
            upper_at,
            lower_at,
        }
    }

    fn strand(&self, p: Piece) -> &Strand {
        match p.layer {
            Layer::Upper => &self.upper.strands()[p.strand],
            Layer::Lower => &self.lower.strands()[p.strand],
        }
    }

    /// Interface point (1-based) of an end of a piece, if it is not a
    /// boundary point of the product.
    fn interface(p: Piece, e: Endpoint) -> Option<u8> {
        match (p.layer, e) {
            (Layer::Upper, Endpoint::Bottom(j)) | (Layer::Lower, Endpoint::Top(j)) => Some(j),
            _ => None,
        }
    }

    /// The piece on the other side of interface point `j`.
    fn across(&self, p: Piece, j: u8) -> (Piece, Endpoint) {
        match p.layer {
            Layer::Upper => (
                Piece {
                    layer: Layer::Lower,
                    strand: self.lower_at[j as usize - 1],
                },
                Endpoint::Top(j),
            ),
            Layer::Lower => (
                Piece {
                    layer: Layer::Upper,
                    strand: self.upper_at[j as usize - 1],
                },
                Endpoint::Bottom(j),
            ),
        }
    }
}

fn other_end(s: &Strand, e: Endpoint) -> Endpoint {
    if s.a == e {
        s.b
    } else {
        s.a
    }
}

pub fn stack_and_trace(upper: &Diagram, lower: &Diagram) -> Result<CompositionTrace> {
    if upper.n() != lower.n() || upper.m() != lower.m() {
        return Err(Error::Mismatch(format!(
            "cannot stack (n, m) = ({}, {}) over ({}, {})",
            upper.n(),
            upper.m(),
            lower.n(),
            lower.m()
        )));
    }
    let n = upper.n();
    let m = upper.m() as i64;
    let st = Stack::new(upper, lower);
    let mut used_upper = vec![false; n as usize];
    let mut used_lower = vec![false; n as usize];
    let mark = |p: Piece, uu: &mut Vec<bool>, ul: &mut Vec<bool>| match p.layer {
        Layer::Upper => uu[p.strand] = true,
        Layer::Lower => ul[p.strand] = true,
    };

    let mut strands = Vec::new();
    let starts = (1..=n)
        .map(|i| (Layer::Upper, Endpoint::Top(i)))
        .chain((1..=n).map(|i| (Layer::Lower, Endpoint::Bottom(i))));
    let mut done = vec![false; 2 * n as usize];
    let slot = |e: Endpoint| match e {
        Endpoint::Top(i) => i as usize - 1,
        Endpoint::Bottom(i) => n as usize + i as usize - 1,
    };
    for (layer, start) in starts {
        if done[slot(start)] {
            continue;
        }
        let diagram = if layer == Layer::Upper { upper } else { lower };
        let idx = diagram
            .strands()
            .iter()
            .position(|s| s.a == start || s.b == start)
            .expect("every endpoint lies on a strand");
        let mut piece = Piece { layer, strand: idx };
        let mut entered = start;
        let mut sign = 1i64;
        let mut dots = 0i64;
        let mut blob = false;
        let mut pieces = Vec::new();
        let end = loop {
            let s = *st.strand(piece);
            mark(piece, &mut used_upper, &mut used_lower);
            pieces.push(piece);
            dots += sign * s.dots as i64;
            blob ^= s.blob;
            let exit = other_end(&s, entered);
            let Some(j) = Stack::interface(piece, exit) else {
                break exit;
            };
            let (next, next_end) = st.across(piece, j);
            sign *= junction_sign(role(&s, exit), role(st.strand(next), next_end));
            piece = next;
            entered = next_end;
        };
        done[slot(start)] = true;
        done[slot(end)] = true;
        strands.push(CompositeStrand {
            a: start.min(end),
            b: start.max(end),
            dots: dots.rem_euclid(m) as u8,
            blob,
            pieces,
        });
    }

    let mut loops = vec![[0u32; 2]; m as usize];
    for j in 1..=n {
        let first = Piece {
            layer: Layer::Upper,
            strand: st.upper_at[j as usize - 1],
        };
        if used_upper[first.strand] {
            continue;
        }
        // leftmost interface point of a fresh loop: walk from the upper
        // piece's left end
        let mut piece = first;
        let mut entered = Endpoint::Bottom(j);
        let mut sign = 1i64;
        let mut dots = 0i64;
        let mut blob = false;
        loop {
            let s = *st.strand(piece);
            mark(piece, &mut used_upper, &mut used_lower);
            dots += sign * s.dots as i64;
            blob ^= s.blob;
            let exit = other_end(&s, entered);
            let jj = Stack::interface(piece, exit).expect("loops stay on the interface");
            let (next, next_end) = st.across(piece, jj);
            sign *= junction_sign(role(&s, exit), role(st.strand(next), next_end));
            if next == first {
                break;
            }
            piece = next;
            entered = next_end;
        }
        LOOPS_CHECKED.fetch_add(1, Ordering::Relaxed);
        if sign != 1 {
            SIGN_VIOLATIONS.fetch_add(1, Ordering::Relaxed);
            return Err(Error::Internal(format!(
                "junction signs around the loop at interface point {j} multiply to -1"
            )));
        }
        loops[dots.rem_euclid(m) as usize][blob as usize] += 1;
    }
    Ok(CompositionTrace {
        strands,
        census: LoopCensus { loops },
    })
}

pub fn loop_census(upper: &Diagram, lower: &Diagram) -> Result<LoopCensus> {
    Ok(stack_and_trace(upper, lower)?.census)
}

/// How closed loops are turned into a coefficient.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum LoopRule {
    /// Blobbed loops with i >= 1 dots and unblobbed loops with i dots
    /// contribute delta_i; blobbed loops without dots contribute nothing.
    #[default]
    Formula,
    /// Rewrite with the loop relations: every loop with i dots contributes
    /// delta_i except one blobbed cycle, which survives; all other blobbed
    /// cycles, including those carried by type I operands, lose their blob
    /// and contribute delta_0.
    Relations,
}

pub fn census_scalar(field: &Field, params: &ParameterSet, census: &LoopCensus) -> Scalar {
    census_scalar_with(field, params, census, LoopRule::Formula, 0)
}

/// `operand_cycles` is the number of type I operands.
pub fn census_scalar_with(
    field: &Field,
    params: &ParameterSet,
    census: &LoopCensus,
    rule: LoopRule,
    operand_cycles: u32,
) -> Scalar {
    let mut exponents: Vec<u64> = census
        .loops
        .iter()
        .enumerate()
        .map(|(i, c)| c[0] as u64 + if i >= 1 { c[1] as u64 } else { 0 })
        .collect();
    if rule == LoopRule::Relations {
        let cycles = operand_cycles as u64 + census.loops.iter().map(|c| c[1] as u64).sum::<u64>();
        exponents[0] += cycles.saturating_sub(1);
    }
    let mut c = field.one();
    for (i, &e) in exponents.iter().enumerate() {
        if e > 0 {
            c = field.mul(&c, &field.pow(params.delta(i), e));
        }
    }
    c
}

/// The composite diagram and its loop census, before any scalar is formed.
pub fn compose(upper: &Diagram, lower: &Diagram) -> Result<(LoopCensus, Diagram)> {
    let trace = stack_and_trace(upper, lower)?;
    let blob_cycle = upper.blob_cycle() || lower.blob_cycle() || trace.census.has_blob_loop();
    let strands = trace
        .strands
        .iter()
        .map(|c| Strand {
            a: c.a,
            b: c.b,
            dots: c.dots,
            blob: c.blob && !blob_cycle,
        })
        .collect();
    let d = Diagram::from_strands(upper.n(), upper.m(), blob_cycle, strands)
        .map_err(|e| Error::Internal(format!("product of {upper} and {lower}: {e}")))?;
    Ok((trace.census, d))
}

pub fn multiply_diagrams(
    field: &Field,
    params: &ParameterSet,
    upper: &Diagram,
    lower: &Diagram,
) -> Result<(Scalar, Diagram)> {
    multiply_diagrams_with(field, params, LoopRule::Formula, upper, lower)
}

pub fn multiply_diagrams_with(
    field: &Field,
    params: &ParameterSet,
    rule: LoopRule,
    upper: &Diagram,
    lower: &Diagram,
) -> Result<(Scalar, Diagram)> {
    if params.m() != upper.m() as usize {
        return Err(Error::Mismatch(format!(
            "{} parameters for m = {}",
            params.m(),
            upper.m()
        )));
    }
    let (census, d) = compose(upper, lower)?;
    let operand_cycles = upper.blob_cycle() as u32 + lower.blob_cycle() as u32;
    Ok((census_scalar_with(field, params, &census, rule, operand_cycles), d))
}
