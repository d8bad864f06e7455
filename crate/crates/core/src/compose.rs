//! Direct sums, existence predicates, and decomposition of orders into blocks.

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::arith::lcm;
use crate::blocks::{self, XValue};
use crate::error::{Error, Result};
use crate::matrix::UnitMatrix;

/// Default order bound for [`enumerate_part_multisets`].
pub const DEFAULT_ENUMERATION_BOUND: usize = 60;

/// Block-diagonal composition. All blocks must share a weight; root orders are
/// lifted to their lcm. At most one block may carry the formal variable.
pub fn direct_sum(blocks: &[UnitMatrix]) -> Result<UnitMatrix> {
    let first = blocks
        .first()
        .ok_or_else(|| Error::InvalidBlock("direct sum of no blocks".into()))?;
    let weight = first.weight();
    if let Some(b) = blocks.iter().find(|b| b.weight() != weight) {
        return Err(Error::MixedWeights(weight, b.weight()));
    }
    if blocks.iter().filter(|b| b.is_symbolic()).count() > 1 {
        return Err(Error::MultipleSymbolic);
    }
    let order = blocks.iter().fold(1, |acc, b| lcm(acc, b.order()));
    let vars = blocks.iter().map(|b| b.vars()).max().unwrap_or(0);
    let n: usize = blocks.iter().map(UnitMatrix::n).sum();
    let mut rows = vec![vec![crate::arith::UnitEntry::Zero; n]; n];
    let mut offset = 0;
    for b in blocks {
        let lifted = b.lift(order)?;
        for (i, row) in lifted.rows().enumerate() {
            rows[offset + i][offset..offset + b.n()].copy_from_slice(row);
        }
        offset += b.n();
    }
    UnitMatrix::new(weight, order, vars, rows)
}

/// A block label in a decomposition. The derived order is the canonical one:
/// starred weight-4 blocks ascending, then `E_{2m}` sizes ascending; for weight 3
/// the order-3 block precedes the order-4 block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Part {
    /// One of the sporadic weight-4 blocks `W5`–`W8`, by order.
    Star(u8),
    /// `E_{2m}` by its order `2m`.
    Even(usize),
    Uw33,
    Uw43,
}

impl Part {
    pub fn size(self) -> usize {
        match self {
            Part::Star(s) => s as usize,
            Part::Even(s) => s,
            Part::Uw33 => 3,
            Part::Uw43 => 4,
        }
    }

    pub fn weight(self) -> usize {
        match self {
            Part::Uw33 | Part::Uw43 => 3,
            _ => 4,
        }
    }

    pub fn is_real(self) -> bool {
        !matches!(self, Part::Star(5) | Part::Star(6) | Part::Uw33)
    }

    pub fn parse(token: &str, weight: usize) -> Result<Part> {
        let t = token.trim();
        let bad = || Error::InvalidPart(format!("{t:?} for weight {weight}"));
        match weight {
            3 => match t {
                "3" => Ok(Part::Uw33),
                "4" => Ok(Part::Uw43),
                _ => Err(bad()),
            },
            4 => {
                if let Some(s) = t.strip_suffix('*') {
                    match s.parse::<u8>() {
                        Ok(s @ 5..=8) => Ok(Part::Star(s)),
                        _ => Err(bad()),
                    }
                } else {
                    match t.parse::<usize>() {
                        Ok(s) if s >= 4 && s % 2 == 0 => Ok(Part::Even(s)),
                        _ => Err(bad()),
                    }
                }
            }
            _ => Err(Error::Unsupported(format!(
                "decompositions are defined for weights 3 and 4, not {weight}"
            ))),
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Part::Star(s) => write!(f, "{s}*"),
            Part::Even(s) => write!(f, "{s}"),
            Part::Uw33 => write!(f, "3"),
            Part::Uw43 => write!(f, "4"),
        }
    }
}

/// A multiset of block labels, kept sorted in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PartMultiset {
    weight: usize,
    parts: Vec<Part>,
    real_only: bool,
}

impl PartMultiset {
    pub fn new(weight: usize, mut parts: Vec<Part>, real_only: bool) -> Result<Self> {
        if weight != 3 && weight != 4 {
            return Err(Error::Unsupported(format!(
                "decompositions are defined for weights 3 and 4, not {weight}"
            )));
        }
        if parts.is_empty() {
            return Err(Error::InvalidPart("empty decomposition".into()));
        }
        for p in &parts {
            if p.weight() != weight {
                return Err(Error::InvalidPart(format!(
                    "{p} is not a weight-{weight} block"
                )));
            }
            if let Part::Even(s) = p {
                if *s < 4 || s % 2 == 1 {
                    return Err(Error::InvalidPart(format!("{s} is not an E_2m order")));
                }
            }
            if real_only && !p.is_real() {
                return Err(Error::InvalidPart(format!("{p} has non-real entries")));
            }
        }
        parts.sort_unstable();
        Ok(Self {
            weight,
            parts,
            real_only,
        })
    }

    /// Parses a comma- or space-separated label list such as `"5*,4"`.
    pub fn parse(weight: usize, text: &str, real_only: bool) -> Result<Self> {
        let parts = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| Part::parse(t, weight))
            .collect::<Result<Vec<_>>>()?;
        Self::new(weight, parts, real_only)
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn real_only(&self) -> bool {
        self.real_only
    }

    pub fn order(&self) -> usize {
        self.parts.iter().map(|p| p.size()).sum()
    }

    pub fn even_part_count(&self) -> usize {
        self.parts
            .iter()
            .filter(|p| matches!(p, Part::Even(_)))
            .count()
    }
}

impl fmt::Display for PartMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.parts.iter().map(Part::to_string).collect();
        write!(f, "{}", labels.join(" "))
    }
}

fn part_block(part: Part, x: XValue) -> UnitMatrix {
    match part {
        Part::Star(5) => blocks::block_w5(),
        Part::Star(6) => blocks::block_w6(),
        Part::Star(7) => blocks::block_w7(),
        Part::Star(8) => blocks::block_w8(),
        Part::Star(s) => unreachable!("no starred block of order {s}"),
        Part::Even(s) => blocks::block_e2m(s / 2, x).expect("validated size"),
        Part::Uw33 => blocks::block_uw33(),
        Part::Uw43 => blocks::block_uw43(),
    }
}

/// Direct sum of the blocks named by `parts`; every `E_{2m}` part uses `x`
/// (default 1).
pub fn compose_from_parts(parts: &PartMultiset, x: Option<XValue>) -> Result<UnitMatrix> {
    let x = x.unwrap_or(XValue::ONE);
    let xs = vec![x; parts.even_part_count()];
    compose_with_values(parts, &xs)
}

/// Like [`compose_from_parts`] with one `x` per `E_{2m}` part, in canonical part order.
pub fn compose_with_values(parts: &PartMultiset, xs: &[XValue]) -> Result<UnitMatrix> {
    if xs.len() != parts.even_part_count() {
        return Err(Error::InvalidPart(format!(
            "{} values of x for {} E_2m parts",
            xs.len(),
            parts.even_part_count()
        )));
    }
    let mut xs = xs.iter();
    let blocks: Vec<UnitMatrix> = parts
        .parts
        .iter()
        .map(|&p| {
            let x = if matches!(p, Part::Even(_)) {
                *xs.next().expect("length checked")
            } else {
                XValue::ONE
            };
            part_block(p, x)
        })
        .collect();
    direct_sum(&blocks)
}

/// Three-valued existence answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Existence {
    Exists,
    NotExists,
    Unknown,
}

impl Existence {
    fn from_bool(b: bool) -> Self {
        if b {
            Existence::Exists
        } else {
            Existence::NotExists
        }
    }
}

impl fmt::Display for Existence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Existence::Exists => "exists",
            Existence::NotExists => "not_exists",
            Existence::Unknown => "unknown",
        })
    }
}

fn sum_of(n: usize, a: usize, b: usize) -> bool {
    (0..=n / a).any(|i| (n - i * a).is_multiple_of(b))
}

/// Does a `UW(n, w)` exist? Decided for `w ≤ 4`, and for `w = 5` at orders 5, 6,
/// 7 and at orders built as direct sums of the order-5 and order-6 blocks.
pub fn exists_uw(n: usize, w: usize) -> Existence {
    if n == 0 || w == 0 || w > n {
        return Existence::NotExists;
    }
    match w {
        1 => Existence::Exists,
        2 => Existence::from_bool(n.is_multiple_of(2)),
        3 => Existence::from_bool(n != 5),
        4 => Existence::Exists,
        5 => match n {
            5 | 6 => Existence::Exists,
            7 => Existence::NotExists,
            _ if sum_of(n, 5, 6) => Existence::Exists,
            _ => Existence::Unknown,
        },
        _ => Existence::Unknown,
    }
}

/// Does a real weighing matrix `W(n, w)` exist? Decided for `w ≤ 4`.
pub fn exists_w_real(n: usize, w: usize) -> Existence {
    if n == 0 || w == 0 || w > n {
        return Existence::NotExists;
    }
    match w {
        1 => Existence::Exists,
        2 => Existence::from_bool(n.is_multiple_of(2)),
        3 => Existence::from_bool(n.is_multiple_of(4)),
        4 => Existence::from_bool(n != 5 && n != 9),
        _ => Existence::Unknown,
    }
}

/// Block labels available at order `n`, in canonical order.
pub fn available_parts(n: usize, weight: usize, real_only: bool) -> Result<Vec<Part>> {
    let parts: Vec<Part> = match weight {
        3 => vec![Part::Uw33, Part::Uw43],
        4 => (5..=8)
            .map(Part::Star)
            .chain((4..=n).step_by(2).map(Part::Even))
            .collect(),
        _ => {
            return Err(Error::Unsupported(format!(
                "decompositions are defined for weights 3 and 4, not {weight}"
            )))
        }
    };
    Ok(parts
        .into_iter()
        .filter(|p| p.size() <= n && (!real_only || p.is_real()))
        .collect())
}

/// Number of multisets of block labels whose orders sum to `n`. Labels of equal
/// order but different identity (`6*` and `6`, `8*` and `8`) count separately.
pub fn count_decompositions(n: usize, weight: usize, real_only: bool) -> Result<BigUint> {
    let parts = available_parts(n, weight, real_only)?;
    let mut ways = vec![BigUint::ZERO; n + 1];
    ways[0] = BigUint::from(1u8);
    for p in parts {
        let s = p.size();
        for total in s..=n {
            let add = ways[total - s].clone();
            ways[total] += add;
        }
    }
    Ok(ways.swap_remove(n))
}

/// All decompositions of `n`, each in canonical part order, listed in
/// lexicographic order of their part sequences.
pub fn enumerate_part_multisets(
    n: usize,
    weight: usize,
    real_only: bool,
    bound: usize,
) -> Result<Vec<PartMultiset>> {
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let parts = available_parts(n, weight, real_only)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(
        parts: &[Part],
        start: usize,
        left: usize,
        current: &mut Vec<Part>,
        out: &mut Vec<Vec<Part>>,
    ) {
        if left == 0 {
            out.push(current.clone());
            return;
        }
        for (i, &p) in parts.iter().enumerate().skip(start) {
            if p.size() <= left {
                current.push(p);
                go(parts, i, left - p.size(), current, out);
                current.pop();
            }
        }
    }
    if n > 0 {
        go(&parts, 0, n, &mut current, &mut out);
    }
    out.sort();
    out.into_iter()
        .map(|p| PartMultiset::new(weight, p, real_only))
        .collect()
}
