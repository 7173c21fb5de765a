//! Canonical m-cyclotomic D-admissible diagrams and dangles.
//!
//! A diagram on `n` top and `n` bottom points is a noncrossing perfect
//! matching whose strands carry a dot count modulo `m` and a blob bit.
//! Horizontal strands store their dots at the left endpoint; vertical
//! strands just store a count. A type I diagram additionally floats one
//! blobbed closed cycle in its left face, recorded as `blob_cycle`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Endpoint {
    Top(u8),
    Bottom(u8),
}

impl Endpoint {
    pub fn index(self) -> u8 {
        match self {
            Endpoint::Top(i) | Endpoint::Bottom(i) => i,
        }
    }

    pub fn is_top(self) -> bool {
        matches!(self, Endpoint::Top(_))
    }

    pub fn flipped(self) -> Endpoint {
        match self {
            Endpoint::Top(i) => Endpoint::Bottom(i),
            Endpoint::Bottom(i) => Endpoint::Top(i),
        }
    }

    /// Position on the boundary circle: tops left to right, then bottoms
    /// right to left.
    fn circle_position(self, n: u8) -> u8 {
        match self {
            Endpoint::Top(i) => i - 1,
            Endpoint::Bottom(i) => 2 * n - i,
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::Top(i) => write!(f, "T{i}"),
            Endpoint::Bottom(i) => write!(f, "B{i}"),
        }
    }
}

impl FromStr for Endpoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Json(format!("bad endpoint {s:?}"));
        let (kind, idx) = s.split_at(1.min(s.len()));
        let i: u8 = idx.parse().map_err(|_| bad())?;
        match kind {
            "T" => Ok(Endpoint::Top(i)),
            "B" => Ok(Endpoint::Bottom(i)),
            _ => Err(bad()),
        }
    }
}

/// One strand. `a < b` always; for horizontal strands `a` is the left
/// endpoint, for vertical strands `a` is the top endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Strand {
    pub a: Endpoint,
    pub b: Endpoint,
    pub dots: u8,
    pub blob: bool,
}

impl Strand {
    pub fn is_horizontal(&self) -> bool {
        self.a.is_top() == self.b.is_top()
    }

    pub fn is_vertical(&self) -> bool {
        !self.is_horizontal()
    }

    pub fn is_top_arc(&self) -> bool {
        self.is_horizontal() && self.a.is_top()
    }

    pub fn is_bottom_arc(&self) -> bool {
        self.is_horizontal() && !self.a.is_top()
    }
}

/// Raw strand as supplied by a caller. For a horizontal strand whose first
/// listed end is its right endpoint, `dots` counts right dots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrandSpec {
    pub ends: [Endpoint; 2],
    pub dots: i64,
    pub blob: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiagramType {
    TypeI,
    TypeII,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "DiagramJson", try_from = "DiagramJson")]
pub struct Diagram {
    n: u8,
    m: u8,
    blob_cycle: bool,
    strands: Vec<Strand>,
}

/// Exposed arcs on one edge: not nested inside another arc, and entirely to
/// the left of `cutoff` when there is one.
fn exposed_on_edge(arcs: &[(u8, u8)], cutoff: Option<u8>) -> Vec<bool> {
    arcs.iter()
        .map(|&(l, r)| {
            cutoff.is_none_or(|c| r < c)
                && !arcs.iter().any(|&(l2, r2)| l2 < l && r < r2)
        })
        .collect()
}

fn chords_cross(a: (u8, u8), b: (u8, u8)) -> bool {
    let (a0, a1) = (a.0.min(a.1), a.0.max(a.1));
    let (b0, b1) = (b.0.min(b.1), b.0.max(b.1));
    (a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1)
}

impl Diagram {
    /// Build, canonicalize and check a diagram.
    pub fn validate(n: u8, m: u8, blob_cycle: bool, specs: &[StrandSpec]) -> Result<Diagram> {
        if m == 0 {
            return Err(Error::Inadmissible("m must be positive".into()));
        }
        let strands = specs
            .iter()
            .map(|s| {
                let [x, y] = s.ends;
                let (a, b) = if x <= y { (x, y) } else { (y, x) };
                let horizontal = a.is_top() == b.is_top();
                let swapped = x > y;
                let raw = s.dots.rem_euclid(m as i64);
                let dots = if horizontal && swapped {
                    // right dots to left dots
                    (m as i64 - raw).rem_euclid(m as i64)
                } else {
                    raw
                };
                Strand {
                    a,
                    b,
                    dots: dots as u8,
                    blob: s.blob % 2 == 1,
                }
            })
            .collect();
        Diagram::from_strands(n, m, blob_cycle, strands)
    }

    /// Build from canonical strands (any order), checking admissibility.
    pub fn from_strands(n: u8, m: u8, blob_cycle: bool, mut strands: Vec<Strand>) -> Result<Diagram> {
        strands.sort();
        let d = Diagram {
            n,
            m,
            blob_cycle,
            strands,
        };
        d.check()?;
        Ok(d)
    }

    fn check(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Inadmissible(msg));
        let n = self.n;
        if n < 4 {
            return bad(format!("n = {n} < 4"));
        }
        if self.m == 0 {
            return bad("m must be positive".into());
        }
        if self.strands.len() != n as usize {
            return bad(format!("{} strands for n = {n}", self.strands.len()));
        }
        let mut seen = vec![false; 2 * n as usize];
        for s in &self.strands {
            if s.a >= s.b {
                return bad(format!("strand {}-{} not in canonical order", s.a, s.b));
            }
            for e in [s.a, s.b] {
                if e.index() == 0 || e.index() > n {
                    return bad(format!("endpoint {e} out of range"));
                }
                let slot = e.circle_position(n) as usize;
                if seen[slot] {
                    return bad(format!("endpoint {e} used twice"));
                }
                seen[slot] = true;
            }
            if s.dots >= self.m {
                return bad(format!("{} dots with m = {}", s.dots, self.m));
            }
        }
        for (i, s) in self.strands.iter().enumerate() {
            for t in &self.strands[i + 1..] {
                let c1 = (s.a.circle_position(n), s.b.circle_position(n));
                let c2 = (t.a.circle_position(n), t.b.circle_position(n));
                if chords_cross(c1, c2) {
                    return bad(format!("strands {}-{} and {}-{} cross", s.a, s.b, t.a, t.b));
                }
            }
        }
        let exposed = self.exposed_strands();
        let blobs = self.strands.iter().filter(|s| s.blob).count();
        for (i, s) in self.strands.iter().enumerate() {
            if s.blob && !exposed.contains(&i) {
                return bad(format!("blob on unexposed strand {}-{}", s.a, s.b));
            }
        }
        if self.blob_cycle {
            if blobs > 0 {
                return bad("type I diagram with a strand blob".into());
            }
            if !self.strands.iter().any(Strand::is_horizontal) {
                return bad("type I diagram without horizontal arcs".into());
            }
        } else if blobs % 2 == 1 {
            return bad("odd number of blobs".into());
        }
        Ok(())
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    pub fn blob_cycle(&self) -> bool {
        self.blob_cycle
    }

    pub fn strands(&self) -> &[Strand] {
        &self.strands
    }

    pub fn classify(&self) -> DiagramType {
        if self.blob_cycle {
            DiagramType::TypeI
        } else {
            DiagramType::TypeII
        }
    }

    /// Number of horizontal arcs on the top edge (equal to the bottom edge).
    pub fn num_arcs(&self) -> usize {
        self.strands.iter().filter(|s| s.is_top_arc()).count()
    }

    /// Vertical strands ordered left to right.
    pub fn verticals(&self) -> impl Iterator<Item = &Strand> {
        // canonical order sorts verticals by their top endpoint
        self.strands.iter().filter(|s| s.is_vertical())
    }

    pub fn blob_count(&self) -> usize {
        self.strands.iter().filter(|s| s.blob).count()
    }

    /// Indices (into `strands()`) of the strands exposed to the left face.
    pub fn exposed_strands(&self) -> Vec<usize> {
        let leftmost = self
            .strands
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_vertical())
            .min_by_key(|(_, s)| s.a.index());
        let (top_cut, bottom_cut) = match leftmost {
            Some((_, s)) => (Some(s.a.index()), Some(s.b.index())),
            None => (None, None),
        };
        let mut out: Vec<usize> = leftmost.map(|(i, _)| i).into_iter().collect();
        for (top, cut) in [(true, top_cut), (false, bottom_cut)] {
            let idx: Vec<usize> = (0..self.strands.len())
                .filter(|&i| {
                    let s = &self.strands[i];
                    s.is_horizontal() && s.a.is_top() == top
                })
                .collect();
            let arcs: Vec<(u8, u8)> = idx
                .iter()
                .map(|&i| (self.strands[i].a.index(), self.strands[i].b.index()))
                .collect();
            for (k, e) in exposed_on_edge(&arcs, cut).into_iter().enumerate() {
                if e {
                    out.push(idx[k]);
                }
            }
        }
        out.sort();
        out
    }

    /// Top-bottom inversion.
    pub fn flip(&self) -> Diagram {
        let strands = self
            .strands
            .iter()
            .map(|s| {
                let (x, y) = (s.a.flipped(), s.b.flipped());
                let (a, b) = if x <= y { (x, y) } else { (y, x) };
                // left endpoints stay left, so dot counts carry over
                Strand { a, b, ..*s }
            })
            .collect::<Vec<_>>();
        let mut strands = strands;
        strands.sort();
        Diagram {
            n: self.n,
            m: self.m,
            blob_cycle: self.blob_cycle,
            strands,
        }
    }

    pub fn identity(n: u8, m: u8) -> Result<Diagram> {
        let strands = (1..=n)
            .map(|i| Strand {
                a: Endpoint::Top(i),
                b: Endpoint::Bottom(i),
                dots: 0,
                blob: false,
            })
            .collect();
        Diagram::from_strands(n, m, false, strands)
    }

    /// `e_i`: arcs `{i < i+1}` on both edges, all else vertical.
    pub fn e(n: u8, m: u8, i: u8) -> Result<Diagram> {
        if i == 0 || i >= n {
            return Err(Error::OutOfRange(format!("e_{i} with n = {n}")));
        }
        Self::e_pattern(n, m, i, false)
    }

    /// `e_1bar`: `e_1` with one blob on each horizontal arc.
    pub fn e_bar(n: u8, m: u8) -> Result<Diagram> {
        Self::e_pattern(n, m, 1, true)
    }

    fn e_pattern(n: u8, m: u8, i: u8, blobs: bool) -> Result<Diagram> {
        let mut strands = vec![
            Strand {
                a: Endpoint::Top(i),
                b: Endpoint::Top(i + 1),
                dots: 0,
                blob: blobs,
            },
            Strand {
                a: Endpoint::Bottom(i),
                b: Endpoint::Bottom(i + 1),
                dots: 0,
                blob: blobs,
            },
        ];
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            strands.push(Strand {
                a: Endpoint::Top(j),
                b: Endpoint::Bottom(j),
                dots: 0,
                blob: false,
            });
        }
        Diagram::from_strands(n, m, false, strands)
    }

    /// `T_i`: all vertical, one dot on the i-th strand.
    pub fn t(n: u8, m: u8, i: u8) -> Result<Diagram> {
        Self::dotted_identity(n, m, &{
            if i == 0 || i > n {
                return Err(Error::OutOfRange(format!("T_{i} with n = {n}")));
            }
            let mut w = vec![0u8; n as usize];
            w[i as usize - 1] = 1 % m;
            w
        })
    }

    /// Identity pattern with `word[j]` dots on vertical strand j+1.
    pub fn dotted_identity(n: u8, m: u8, word: &[u8]) -> Result<Diagram> {
        if word.len() != n as usize {
            return Err(Error::Mismatch(format!("dot word of length {} for n = {n}", word.len())));
        }
        let strands = (1..=n)
            .map(|i| Strand {
                a: Endpoint::Top(i),
                b: Endpoint::Bottom(i),
                dots: word[i as usize - 1] % m,
                blob: false,
            })
            .collect();
        Diagram::from_strands(n, m, false, strands)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("diagram serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Diagram> {
        Ok(serde_json::from_value(v.clone())?)
    }

    /// Compact one-line rendering used as a stable key in reports.
    pub fn key(&self) -> String {
        let mut s = String::new();
        if self.blob_cycle {
            s.push_str("O|");
        }
        let parts: Vec<String> = self
            .strands
            .iter()
            .map(|st| {
                let mut p = format!("{}{}", st.a, st.b);
                if st.dots > 0 {
                    p.push_str(&format!(".{}", st.dots));
                }
                if st.blob {
                    p.push('*');
                }
                p
            })
            .collect();
        s.push_str(&parts.join(" "));
        s
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

#[derive(Serialize, Deserialize)]
struct StrandJson {
    ends: Vec<String>,
    dots: i64,
    blob: u32,
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    n: u8,
    m: u8,
    #[serde(rename = "blobCycle")]
    blob_cycle: bool,
    strands: Vec<StrandJson>,
}

impl From<Diagram> for DiagramJson {
    fn from(d: Diagram) -> Self {
        DiagramJson {
            n: d.n,
            m: d.m,
            blob_cycle: d.blob_cycle,
            strands: d
                .strands
                .iter()
                .map(|s| StrandJson {
                    ends: vec![s.a.to_string(), s.b.to_string()],
                    dots: s.dots as i64,
                    blob: s.blob as u32,
                })
                .collect(),
        }
    }
}

impl TryFrom<DiagramJson> for Diagram {
    type Error = Error;

    fn try_from(j: DiagramJson) -> Result<Diagram> {
        let specs = j
            .strands
            .iter()
            .map(|s| {
                if s.ends.len() != 2 {
                    return Err(Error::Json("a strand needs two ends".into()));
                }
                Ok(StrandSpec {
                    ends: [s.ends[0].parse()?, s.ends[1].parse()?],
                    dots: s.dots,
                    blob: s.blob,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Diagram::validate(j.n, j.m, j.blob_cycle, &specs)
    }
}

/// A horizontal arc of a dangle, dots at its left endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DangleArc {
    pub left: u8,
    pub right: u8,
    pub dots: u8,
    pub blob: bool,
}

/// Which dangle set an admissible dangle belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DangleClass {
    /// Type I (carries the blobbed closed cycle).
    Plus,
    /// Type II with `2k != n`.
    Minus,
    /// Type II with `2k = n` and an even number of blobs.
    Minus1,
    /// Type II with `2k = n` and an odd number of blobs.
    Minus2,
}

impl FromStr for DangleClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" => Ok(DangleClass::Plus),
            "minus" => Ok(DangleClass::Minus),
            "minus1" => Ok(DangleClass::Minus1),
            "minus2" => Ok(DangleClass::Minus2),
            _ => Err(Error::Invalid(format!("unknown dangle class {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DangleItem {
    Arc(usize),
    /// The leftmost free line.
    Line,
}

/// Half diagram of type (n, k): k arcs and n - 2k free lines on n points.
/// Only the leftmost free line may carry a blob; free lines carry no dots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "DangleJson", try_from = "DangleJson")]
pub struct Dangle {
    n: u8,
    m: u8,
    blob_cycle: bool,
    arcs: Vec<DangleArc>,
    lines: Vec<u8>,
    line_blob: bool,
}

impl Dangle {
    pub fn new(
        n: u8,
        m: u8,
        blob_cycle: bool,
        mut arcs: Vec<DangleArc>,
        line_blob: bool,
    ) -> Result<Dangle> {
        let bad = |msg: String| Err(Error::InadmissibleDangle(msg));
        if n < 4 || m == 0 {
            return bad(format!("n = {n}, m = {m}"));
        }
        arcs.sort();
        let mut used = vec![false; n as usize + 1];
        for a in &arcs {
            if a.left == 0 || a.left >= a.right || a.right > n {
                return bad(format!("arc {{{}<{}}} out of range", a.left, a.right));
            }
            for p in [a.left, a.right] {
                if used[p as usize] {
                    return bad(format!("point {p} used twice"));
                }
                used[p as usize] = true;
            }
            if a.dots >= m {
                return bad(format!("{} dots with m = {m}", a.dots));
            }
        }
        let lines: Vec<u8> = (1..=n).filter(|&p| !used[p as usize]).collect();
        for (i, a) in arcs.iter().enumerate() {
            for b in &arcs[i + 1..] {
                if chords_cross((a.left, a.right), (b.left, b.right)) {
                    return bad("arcs cross".into());
                }
            }
            if lines.iter().any(|&p| a.left < p && p < a.right) {
                return bad(format!("free line under arc {{{}<{}}}", a.left, a.right));
            }
        }
        if line_blob && lines.is_empty() {
            return bad("line blob without free lines".into());
        }
        let d = Dangle {
            n,
            m,
            blob_cycle,
            arcs,
            lines,
            line_blob,
        };
        let exposed = d.exposed();
        for (i, a) in d.arcs.iter().enumerate() {
            if a.blob && !exposed.contains(&DangleItem::Arc(i)) {
                return bad(format!("blob on unexposed arc {{{}<{}}}", a.left, a.right));
            }
        }
        if blob_cycle {
            if d.blob_count() > 0 {
                return bad("type I dangle with blobs".into());
            }
            if d.arcs.is_empty() {
                return bad("type I dangle without arcs".into());
            }
        } else if 2 * d.k() != n as usize && d.blob_count() % 2 == 1 {
            return bad("odd number of blobs".into());
        }
        Ok(d)
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    pub fn k(&self) -> usize {
        self.arcs.len()
    }

    pub fn blob_cycle(&self) -> bool {
        self.blob_cycle
    }

    pub fn arcs(&self) -> &[DangleArc] {
        &self.arcs
    }

    /// Free points, left to right.
    pub fn lines(&self) -> &[u8] {
        &self.lines
    }

    pub fn line_blob(&self) -> bool {
        self.line_blob
    }

    pub fn blob_count(&self) -> usize {
        self.arcs.iter().filter(|a| a.blob).count() + self.line_blob as usize
    }

    pub fn class(&self) -> DangleClass {
        if self.blob_cycle {
            DangleClass::Plus
        } else if 2 * self.k() == self.n as usize {
            if self.blob_count() % 2 == 0 {
                DangleClass::Minus1
            } else {
                DangleClass::Minus2
            }
        } else {
            DangleClass::Minus
        }
    }

    pub fn exposed(&self) -> Vec<DangleItem> {
        let cutoff = self.lines.first().copied();
        let pairs: Vec<(u8, u8)> = self.arcs.iter().map(|a| (a.left, a.right)).collect();
        let mut out: Vec<DangleItem> = exposed_on_edge(&pairs, cutoff)
            .into_iter()
            .enumerate()
            .filter(|(_, e)| *e)
            .map(|(i, _)| DangleItem::Arc(i))
            .collect();
        if cutoff.is_some() {
            out.push(DangleItem::Line);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("dangle serializes")
    }
}

#[derive(Serialize, Deserialize)]
struct DangleJson {
    n: u8,
    m: u8,
    #[serde(rename = "blobCycle")]
    blob_cycle: bool,
    strands: Vec<StrandJson>,
}

impl From<Dangle> for DangleJson {
    fn from(d: Dangle) -> Self {
        let mut strands: Vec<StrandJson> = d
            .arcs
            .iter()
            .map(|a| StrandJson {
                ends: vec![format!("T{}", a.left), format!("T{}", a.right)],
                dots: a.dots as i64,
                blob: a.blob as u32,
            })
            .collect();
        for (i, &p) in d.lines.iter().enumerate() {
            strands.push(StrandJson {
                ends: vec![format!("F{p}")],
                dots: 0,
                blob: (i == 0 && d.line_blob) as u32,
            });
        }
        DangleJson {
            n: d.n,
            m: d.m,
            blob_cycle: d.blob_cycle,
            strands,
        }
    }
}

impl TryFrom<DangleJson> for Dangle {
    type Error = Error;

    fn try_from(j: DangleJson) -> Result<Dangle> {
        let mut arcs = Vec::new();
        let mut line_blobs = Vec::new();
        let point = |s: &str, prefix: char| -> Result<u8> {
            s.strip_prefix(prefix)
                .and_then(|r| r.parse().ok())
                .ok_or_else(|| Error::Json(format!("bad dangle endpoint {s:?}")))
        };
        for s in &j.strands {
            match s.ends.as_slice() {
                [f] => {
                    if s.dots.rem_euclid(j.m.max(1) as i64) != 0 {
                        return Err(Error::InadmissibleDangle("dots on a free line".into()));
                    }
                    line_blobs.push((point(f, 'F')?, s.blob % 2 == 1));
                }
                [x, y] => {
                    let (x, y) = (point(x, 'T')?, point(y, 'T')?);
                    let m = j.m.max(1) as i64;
                    let raw = s.dots.rem_euclid(m);
                    let dots = if x > y { (m - raw).rem_euclid(m) } else { raw };
                    arcs.push(DangleArc {
                        left: x.min(y),
                        right: x.max(y),
                        dots: dots as u8,
                        blob: s.blob % 2 == 1,
                    });
                }
                _ => return Err(Error::Json("a dangle strand has one or two ends".into())),
            }
        }
        line_blobs.sort();
        if line_blobs.iter().skip(1).any(|(_, b)| *b) {
            return Err(Error::InadmissibleDangle("blob on a non-leftmost free line".into()));
        }
        let line_blob = line_blobs.first().is_some_and(|(_, b)| *b);
        let d = Dangle::new(j.n, j.m, j.blob_cycle, arcs, line_blob)?;
        let listed: Vec<u8> = line_blobs.iter().map(|(p, _)| *p).collect();
        if listed != d.lines {
            return Err(Error::InadmissibleDangle("free lines do not match the arcs".into()));
        }
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(x: &str, y: &str, dots: i64, blob: u32) -> StrandSpec {
        StrandSpec {
            ends: [x.parse().unwrap(), y.parse().unwrap()],
            dots,
            blob,
        }
    }

    fn e1_pattern(top_blob: u32, bottom_blob: u32) -> Vec<StrandSpec> {
        vec![
            spec("T1", "T2", 0, top_blob),
            spec("B1", "B2", 0, bottom_blob),
            spec("T3", "B3", 0, 0),
            spec("T4", "B4", 0, 0),
        ]
    }

    #[test]
    fn e1_patterns() {
        let d = Diagram::validate(4, 2, false, &e1_pattern(0, 0)).unwrap();
        assert_eq!(d.classify(), DiagramType::TypeII);
        assert_eq!(d, Diagram::e(4, 2, 1).unwrap());
        let d = Diagram::validate(4, 2, false, &e1_pattern(1, 1)).unwrap();
        assert_eq!(d.blob_count(), 2);
        assert_eq!(d, Diagram::e_bar(4, 2).unwrap());
        assert!(Diagram::validate(4, 2, false, &e1_pattern(1, 0)).is_err());
    }

    #[test]
    fn rejections() {
        // crossing
        let crossing = vec![
            spec("T1", "B2", 0, 0),
            spec("T2", "B1", 0, 0),
            spec("T3", "B3", 0, 0),
            spec("T4", "B4", 0, 0),
        ];
        assert!(Diagram::validate(4, 1, false, &crossing).is_err());
        // blob on an unexposed strand: vertical 4 is not leftmost
        let mut s = e1_pattern(1, 0);
        s[3].blob = 1;
        assert!(Diagram::validate(4, 1, false, &s).is_err());
        // type I with a strand blob
        assert!(Diagram::validate(4, 1, true, &e1_pattern(1, 1)).is_err());
        // type I without horizontal arcs
        let id: Vec<StrandSpec> = (1..=4).map(|i| spec(&format!("T{i}"), &format!("B{i}"), 0, 0)).collect();
        assert!(Diagram::validate(4, 1, true, &id).is_err());
        // n < 4
        let small: Vec<StrandSpec> = (1..=3).map(|i| spec(&format!("T{i}"), &format!("B{i}"), 0, 0)).collect();
        assert!(Diagram::validate(3, 1, false, &small).is_err());
    }

    #[test]
    fn right_dots_are_converted() {
        let s = vec![
            spec("T2", "T1", 1, 0),
            spec("B1", "B2", 0, 0),
            spec("T3", "B3", 0, 0),
            spec("T4", "B4", 0, 0),
        ];
        let d = Diagram::validate(4, 3, false, &s).unwrap();
        assert_eq!(d.strands()[0].dots, 2);
        let d = Diagram::validate(4, 2, false, &s).unwrap();
        assert_eq!(d.strands()[0].dots, 1);
    }

    #[test]
    fn blob_cycle_and_blob_parity_decide_the_type() {
        // left: blob-cycle, top arc {1<2} dotted, verticals 3->1, 4->2, bottom arc {3<4}
        let left = vec![
            spec("T1", "T2", 1, 0),
            spec("T3", "B1", 0, 0),
            spec("T4", "B2", 1, 0),
            spec("B3", "B4", 0, 0),
        ];
        let d = Diagram::validate(4, 2, true, &left).unwrap();
        assert_eq!(d.classify(), DiagramType::TypeI);
        // right: arcs {1<2} on both edges with dots/blobs, blobbed leftmost vertical
        let right = vec![
            spec("T1", "T2", 1, 1),
            spec("B1", "B2", 1, 0),
            spec("T3", "B3", 0, 1),
            spec("T4", "B4", 1, 0),
        ];
        let d = Diagram::validate(4, 2, false, &right).unwrap();
        assert_eq!(d.classify(), DiagramType::TypeII);
        assert_eq!(Diagram::identity(4, 2).unwrap().classify(), DiagramType::TypeII);
    }

    #[test]
    fn flips() {
        for i in 1..4 {
            let e = Diagram::e(4, 2, i).unwrap();
            assert_eq!(e.flip(), e);
        }
        let t = Diagram::t(4, 2, 2).unwrap();
        assert_eq!(t.flip(), t);
        let s = vec![
            spec("T1", "T2", 1, 0),
            spec("T3", "B1", 0, 0),
            spec("T4", "B2", 1, 0),
            spec("B3", "B4", 0, 0),
        ];
        let d = Diagram::validate(4, 2, true, &s).unwrap();
        let f = d.flip();
        assert_ne!(f, d);
        assert!(f.blob_cycle());
        assert_eq!(f.flip(), d);
        f.check().unwrap();
    }

    fn dangle(arcs: &[(u8, u8)]) -> Dangle {
        let arcs = arcs
            .iter()
            .map(|&(l, r)| DangleArc {
                left: l,
                right: r,
                dots: 0,
                blob: false,
            })
            .collect();
        Dangle::new(4, 2, false, arcs, false).unwrap()
    }

    #[test]
    fn dangle_exposure() {
        assert_eq!(dangle(&[(2, 3)]).exposed(), vec![DangleItem::Line]);
        assert_eq!(dangle(&[(2, 3)]).lines(), &[1, 4]);
        assert_eq!(
            dangle(&[(1, 2), (3, 4)]).exposed(),
            vec![DangleItem::Arc(0), DangleItem::Arc(1)]
        );
        assert_eq!(dangle(&[(1, 4), (2, 3)]).exposed(), vec![DangleItem::Arc(0)]);
        assert_eq!(
            dangle(&[(1, 2)]).exposed(),
            vec![DangleItem::Arc(0), DangleItem::Line]
        );
    }

    #[test]
    fn dangle_rules() {
        let arc = |l, r, blob| DangleArc {
            left: l,
            right: r,
            dots: 0,
            blob,
        };
        // free line nested under an arc
        assert!(Dangle::new(4, 1, false, vec![arc(1, 3, false)], false).is_err());
        // odd blobs allowed only at k = n/2
        assert!(Dangle::new(4, 1, false, vec![arc(1, 2, true)], false).is_err());
        assert!(Dangle::new(4, 1, false, vec![arc(1, 2, true)], true).is_ok());
        let d = Dangle::new(4, 1, false, vec![arc(1, 2, true), arc(3, 4, false)], false).unwrap();
        assert_eq!(d.class(), DangleClass::Minus2);
        // type I needs an arc and no blobs
        assert!(Dangle::new(4, 1, true, vec![], false).is_err());
        assert_eq!(
            Dangle::new(4, 1, true, vec![arc(2, 3, false)], false).unwrap().class(),
            DangleClass::Plus
        );
    }

    #[test]
    fn json_round_trip() {
        let d = Diagram::e_bar(4, 2).unwrap();
        let v = d.to_json();
        assert_eq!(
            v.to_string(),
            r#"{"blobCycle":false,"m":2,"n":4,"strands":[{"blob":1,"dots":0,"ends":["T1","T2"]},{"blob":0,"dots":0,"ends":["T3","B3"]},{"blob":0,"dots":0,"ends":["T4","B4"]},{"blob":1,"dots":0,"ends":["B1","B2"]}]}"#
        );
        assert_eq!(Diagram::from_json(&v).unwrap(), d);

        let dg = Dangle::new(
            4,
            2,
            false,
            vec![DangleArc {
                left: 1,
                right: 2,
                dots: 1,
                blob: true,
            }],
            true,
        )
        .unwrap();
        let v = dg.to_json();
        let back: Dangle = serde_json::from_value(v).unwrap();
        assert_eq!(back, dg);
    }
}
