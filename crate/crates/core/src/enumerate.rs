//! Exhaustive generation of basis diagrams and dangles.
//!
//! Diagrams are built directly from noncrossing perfect matchings of the
//! 2n boundary points, not by gluing dangles, so the count identities
//! relating the two are a genuine cross-check.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::diagram::{Dangle, DangleArc, DangleClass, Diagram, Endpoint, Strand};
use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u128 = 50_000;

pub fn catalan(n: u32) -> u128 {
    binomial(2 * n, n) / (n as u128 + 1)
}

pub fn binomial(n: u32, k: u32) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// `m^n ((n+3)/2 C(n) - 1)`.
pub fn dimension_formula(m: u32, n: u32) -> u128 {
    (m as u128).pow(n) * ((n as u128 + 3) * catalan(n) / 2 - 1)
}

/// Noncrossing partial matchings of points 1..n with k arcs in which every
/// free point can reach the boundary (no free point lies under an arc).
pub fn noncrossing_matchings(n: u8, k: u8) -> Vec<Vec<(u8, u8)>> {
    fn go(pos: u8, n: u8, arcs_left: u8, acc: &mut Vec<(u8, u8)>, out: &mut Vec<Vec<(u8, u8)>>) {
        if pos > n {
            if arcs_left == 0 {
                out.push(acc.clone());
            }
            return;
        }
        // pos free
        go(pos + 1, n, arcs_left, acc, out);
        // pos opens an arc closed at some q; the inside must be a perfect
        // noncrossing matching
        if arcs_left == 0 {
            return;
        }
        let mut q = pos + 1;
        while q <= n {
            let inner = (q - pos - 1) / 2;
            if inner < arcs_left {
                for inside in perfect_on_interval(pos + 1, q - 1) {
                    let mark = acc.len();
                    acc.push((pos, q));
                    acc.extend(inside.iter().copied());
                    go(q + 1, n, arcs_left - 1 - inner, acc, out);
                    acc.truncate(mark);
                }
            }
            q += 2;
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    for m in &mut out {
        m.sort();
    }
    out.sort();
    out
}

/// Noncrossing perfect matchings of the points lo..=hi.
fn perfect_on_interval(lo: u8, hi: u8) -> Vec<Vec<(u8, u8)>> {
    if lo > hi {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut q = lo + 1;
    while q <= hi {
        for inside in perfect_on_interval(lo + 1, q - 1) {
            for rest in perfect_on_interval(q + 1, hi) {
                let mut v = vec![(lo, q)];
                v.extend(inside.iter().copied());
                v.extend(rest);
                out.push(v);
            }
        }
        q += 2;
    }
    out
}

fn circle_endpoint(pos: u8, n: u8) -> Endpoint {
    if pos < n {
        Endpoint::Top(pos + 1)
    } else {
        Endpoint::Bottom(2 * n - pos)
    }
}

/// All strand patterns (undecorated) of (n, n) diagrams.
fn strand_patterns(n: u8) -> Vec<Vec<(Endpoint, Endpoint)>> {
    perfect_on_interval(0, 2 * n - 1)
        .into_iter()
        .map(|mm| {
            mm.into_iter()
                .map(|(x, y)| {
                    let (a, b) = (circle_endpoint(x, n), circle_endpoint(y, n));
                    (a.min(b), a.max(b))
                })
                .collect()
        })
        .collect()
}

fn words(m: u8, len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..m).map(move |d| {
                    let mut w = w.clone();
                    w.push(d);
                    w
                })
            })
            .collect();
    }
    out
}

/// Counts of the sets Q for one number k of top arcs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct KCounts {
    pub plus: u128,
    pub minus: u128,
    pub minus1: u128,
    pub minus2: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramCensus {
    pub total: u128,
    #[serde(rename = "typeI")]
    pub type_i: u128,
    #[serde(rename = "typeII")]
    pub type_ii: u128,
    #[serde(rename = "byK")]
    pub by_k: BTreeMap<u8, KCounts>,
}

pub struct Enumeration {
    pub diagrams: Vec<Diagram>,
    pub census: DiagramCensus,
}

fn check_budget(requested: u128, budget: u128) -> Result<()> {
    if requested > budget {
        return Err(Error::BudgetExceeded { requested, budget });
    }
    Ok(())
}

/// Every admissible diagram exactly once, in canonical order.
pub fn enum_diagrams(m: u8, n: u8, budget: u128) -> Result<Enumeration> {
    if n < 4 || m == 0 {
        return Err(Error::Invalid(format!("(m, n) = ({m}, {n}) needs n >= 4 and m >= 1")));
    }
    check_budget(dimension_formula(m as u32, n as u32), budget)?;
    let all_words = words(m, n as usize);
    let mut diagrams = Vec::new();
    let mut by_k: BTreeMap<u8, KCounts> = BTreeMap::new();
    for pattern in strand_patterns(n) {
        let k = pattern.iter().filter(|(a, b)| a.is_top() && b.is_top()).count() as u8;
        let bare: Vec<Strand> = pattern
            .iter()
            .map(|&(a, b)| Strand {
                a,
                b,
                dots: 0,
                blob: false,
            })
            .collect();
        let probe = Diagram::from_strands(n, m, false, bare.clone())?;
        let exposed = probe.exposed_strands();
        let strands0 = probe.strands().to_vec();
        let counts = by_k.entry(k).or_default();
        for w in &all_words {
            let dotted: Vec<Strand> = strands0
                .iter()
                .zip(w)
                .map(|(s, &d)| Strand { dots: d, ..*s })
                .collect();
            if k >= 1 {
                diagrams.push(Diagram::from_strands(n, m, true, dotted.clone())?);
                counts.plus += 1;
            }
            for mask in 0u32..(1 << exposed.len()) {
                if mask.count_ones() % 2 == 1 {
                    continue;
                }
                let mut s = dotted.clone();
                for (bit, &i) in exposed.iter().enumerate() {
                    s[i].blob = mask >> bit & 1 == 1;
                }
                let top_parity = s.iter().filter(|x| x.blob && x.is_top_arc()).count() % 2;
                diagrams.push(Diagram::from_strands(n, m, false, s)?);
                if 2 * k == n {
                    if top_parity == 0 {
                        counts.minus1 += 1;
                    } else {
                        counts.minus2 += 1;
                    }
                } else {
                    counts.minus += 1;
                }
            }
        }
    }
    diagrams.sort();
    let type_i = by_k.values().map(|c| c.plus).sum();
    let total = diagrams.len() as u128;
    Ok(Enumeration {
        census: DiagramCensus {
            total,
            type_i,
            type_ii: total - type_i,
            by_k,
        },
        diagrams,
    })
}

/// Admissible dangles of type (n, k) in one class, in canonical order.
pub fn enum_dangles(m: u8, n: u8, k: u8, class: DangleClass) -> Result<Vec<Dangle>> {
    let half = n % 2 == 0 && 2 * k == n;
    let ok = match class {
        DangleClass::Plus => k >= 1 && 2 * k <= n,
        DangleClass::Minus => 2 * k <= n && !half,
        DangleClass::Minus1 | DangleClass::Minus2 => half,
    };
    if !ok || n < 4 || m == 0 {
        return Err(Error::Invalid(format!(
            "no dangle class {class:?} for (m, n, k) = ({m}, {n}, {k})"
        )));
    }
    let mut out = Vec::new();
    for matching in noncrossing_matchings(n, k) {
        for w in words(m, k as usize) {
            let arcs: Vec<DangleArc> = matching
                .iter()
                .zip(&w)
                .map(|(&(l, r), &d)| DangleArc {
                    left: l,
                    right: r,
                    dots: d,
                    blob: false,
                })
                .collect();
            if class == DangleClass::Plus {
                out.push(Dangle::new(n, m, true, arcs, false)?);
                continue;
            }
            let probe = Dangle::new(n, m, false, arcs.clone(), false)?;
            let exposed = probe.exposed();
            for mask in 0u32..(1 << exposed.len()) {
                let mut a = probe.arcs().to_vec();
                let mut line_blob = false;
                for (bit, item) in exposed.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        match item {
                            crate::diagram::DangleItem::Arc(i) => a[*i].blob = true,
                            crate::diagram::DangleItem::Line => line_blob = true,
                        }
                    }
                }
                let d = Dangle::new(n, m, false, a, line_blob);
                if let Ok(d) = d {
                    if d.class() == class {
                        out.push(d);
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountCheck {
    pub name: String,
    pub lhs: u128,
    pub rhs: u128,
    pub passed: bool,
}

fn entry(name: String, lhs: u128, rhs: u128) -> CountCheck {
    CountCheck {
        name,
        lhs,
        rhs,
        passed: lhs == rhs,
    }
}

/// Count identities between diagrams, dangles and the closed forms.
pub fn check_counts(m: u8, n: u8, budget: u128) -> Result<Vec<CountCheck>> {
    let en = enum_diagrams(m, n, budget)?;
    let c = &en.census;
    let mut out = Vec::new();
    let g = |r: u8| (m as u128).pow(r as u32);
    let count = |k, class| enum_dangles(m, n, k, class).map(|v| v.len() as u128);
    for k in 0..=n / 2 {
        let q = c.by_k.get(&k).cloned().unwrap_or_default();
        let free = n - 2 * k;
        if k >= 1 {
            let d = count(k, DangleClass::Plus)?;
            out.push(entry(format!("|Q+({n},{k})| = m^{free} |D+({n},{k})|^2"), q.plus, g(free) * d * d));
        }
        if 2 * k == n {
            for (class, qv, label) in [(DangleClass::Minus1, q.minus1, "1"), (DangleClass::Minus2, q.minus2, "2")] {
                let d = count(k, class)?;
                out.push(entry(format!("|Q{label}-({n},{k})| = |D{label}-({n},{k})|^2"), qv, d * d));
            }
        } else {
            let d = count(k, DangleClass::Minus)?;
            out.push(entry(format!("|Q-({n},{k})| = m^{free} |D-({n},{k})|^2"), q.minus, g(free) * d * d));
        }
    }
    out.push(entry(
        "total = m^n ((n+3)/2 C(n) - 1)".into(),
        c.total,
        dimension_formula(m as u32, n as u32),
    ));
    if m == 1 {
        out.push(entry("type I = C(n) - 1".into(), c.type_i, catalan(n as u32) - 1));
        out.push(entry(
            "type II = binomial(2n, n) / 2".into(),
            c.type_ii,
            binomial(2 * n as u32, n as u32) / 2,
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert_eq!((1..=6).map(catalan).collect::<Vec<_>>(), vec![1, 2, 5, 14, 42, 132]);
        assert_eq!(dimension_formula(1, 4), 48);
        assert_eq!(dimension_formula(2, 4), 768);
        assert_eq!(dimension_formula(1, 5), 167);
        assert_eq!(dimension_formula(2, 6), 37952);
        assert_eq!(dimension_formula(3, 5), 40581);
    }

    #[test]
    fn partial_matchings() {
        assert_eq!(noncrossing_matchings(4, 1), vec![vec![(1, 2)], vec![(2, 3)], vec![(3, 4)]]);
        assert_eq!(noncrossing_matchings(4, 2), vec![vec![(1, 2), (3, 4)], vec![(1, 4), (2, 3)]]);
        assert_eq!(noncrossing_matchings(4, 0), vec![Vec::<(u8, u8)>::new()]);
        for n in 1..=7u8 {
            assert_eq!(strand_patterns(n.max(1)).len() as u128, catalan(n as u32));
        }
    }

    #[test]
    fn small_dimensions() {
        let e = enum_diagrams(1, 4, DEFAULT_BUDGET).unwrap();
        assert_eq!((e.census.total, e.census.type_i, e.census.type_ii), (48, 13, 35));
        let e = enum_diagrams(2, 4, DEFAULT_BUDGET).unwrap();
        assert_eq!((e.census.total, e.census.type_i, e.census.type_ii), (768, 208, 560));
        let mut sorted = e.diagrams.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), 768);
        assert!(matches!(
            enum_diagrams(3, 6, DEFAULT_BUDGET),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn dangle_counts() {
        let c = |k, class| enum_dangles(2, 4, k, class).unwrap().len();
        assert_eq!(c(1, DangleClass::Plus), 6);
        assert_eq!(c(2, DangleClass::Plus), 8);
        assert_eq!(c(1, DangleClass::Minus), 8);
        assert_eq!(c(0, DangleClass::Minus), 1);
        assert_eq!(c(2, DangleClass::Minus1), 12);
        assert_eq!(c(2, DangleClass::Minus2), 12);
        assert!(enum_dangles(2, 4, 0, DangleClass::Plus).is_err());
        assert!(enum_dangles(2, 4, 1, DangleClass::Minus1).is_err());
        assert!(enum_dangles(2, 4, 2, DangleClass::Minus).is_err());
    }

    #[test]
    fn identities_at_2_4() {
        for c in check_counts(2, 4, DEFAULT_BUDGET).unwrap() {
            assert!(c.passed, "{c:?}");
        }
    }
}
