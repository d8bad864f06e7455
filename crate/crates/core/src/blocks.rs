//! Exact constructors for the named unit weighing matrices.
//!
//! Weight ≤ 4 blocks and the order-6 weight-5 block live over `L = 12`, so
//! `a = e^{2πi/3}` is `ζ_12^4`. The Fourier matrix `F5` lives over `L = 5`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::{lcm, UnitEntry};
use crate::error::{Error, Result};
use crate::matrix::UnitMatrix;

/// Root order shared by the weight ≤ 4 constants.
pub const BASE_ORDER: u32 = 12;

/// Value of the free parameter `x` of `E_{2m}(x)` and of the order-6 weight-5 block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum XValue {
    /// The formal unimodular variable; the block is verified symbolically.
    Formal,
    /// `ζ_order^root`.
    Root { root: u32, order: u32 },
}

impl XValue {
    pub const ONE: XValue = XValue::Root { root: 0, order: 1 };
    pub const MINUS_ONE: XValue = XValue::Root { root: 1, order: 2 };

    /// `ζ_12^k`, the value named by the CLI's `--x K`.
    pub fn base(k: u32) -> XValue {
        XValue::Root {
            root: k % BASE_ORDER,
            order: BASE_ORDER,
        }
    }

    fn matrix_order(self, base: u32) -> u32 {
        match self {
            XValue::Formal => base,
            XValue::Root { order, .. } => lcm(base, order.max(1)),
        }
    }

    /// `x^exp` as an entry over `ζ_order`.
    fn power(self, exp: i32, order: u32) -> UnitEntry {
        match self {
            XValue::Formal => UnitEntry::var(0, exp),
            XValue::Root { root, order: xo } => {
                let k = exp as i64 * root as i64 * (order / xo) as i64;
                UnitEntry::root(k.rem_euclid(order as i64) as u32)
            }
        }
    }
}

impl fmt::Display for XValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XValue::Formal => write!(f, "x"),
            XValue::Root { root, order } => write!(f, "z{order}^{root}"),
        }
    }
}

/// Tokens: `0`, `1`, `-`, `a`/`A` for `a`/`ā`, `x`/`X` for `x`/`x̄`, each
/// optionally prefixed by `-` (`-a`, `-X`).
fn build(weight: usize, x: XValue, rows: &[&str]) -> UnitMatrix {
    let order = x.matrix_order(BASE_ORDER);
    let step = order / BASE_ORDER;
    let symbolic = x == XValue::Formal;
    let parse = |tok: &str| -> UnitEntry {
        let (neg, body) = match tok {
            "-" => (true, "1"),
            t => match t.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, t),
            },
        };
        let base = match body {
            "0" => return UnitEntry::Zero,
            "1" => UnitEntry::ONE,
            "a" => UnitEntry::root(4 * step),
            "A" => UnitEntry::root(8 * step),
            "x" => x.power(1, order),
            "X" => x.power(-1, order),
            other => unreachable!("bad block token {other}"),
        };
        if neg {
            base.neg(order)
        } else {
            base
        }
    };
    let grid = rows
        .iter()
        .map(|r| r.split_whitespace().map(parse).collect())
        .collect();
    let m = UnitMatrix::new(weight, order, u8::from(symbolic), grid).expect("block shape");
    debug_assert!(m.gram_check());
    m
}

pub fn block_i1() -> UnitMatrix {
    build(1, XValue::ONE, &["1"])
}

pub fn block_b2() -> UnitMatrix {
    build(2, XValue::ONE, &["1 1", "1 -"])
}

pub fn block_uw33() -> UnitMatrix {
    build(3, XValue::ONE, &["1 1 1", "1 a A", "1 A a"])
}

pub fn block_uw43() -> UnitMatrix {
    build(
        3,
        XValue::ONE,
        &["1 1 1 0", "1 - 0 1", "1 0 - -", "0 1 - 1"],
    )
}

pub fn block_w5() -> UnitMatrix {
    build(
        4,
        XValue::ONE,
        &[
            "1 1 1 1 0",
            "1 a A 0 1",
            "1 A 0 a A",
            "1 0 a A a",
            "0 1 A a a",
        ],
    )
}

pub fn block_w6() -> UnitMatrix {
    build(
        4,
        XValue::ONE,
        &[
            "1 1 1 1 0 0",
            "1 a A 0 1 0",
            "1 A a 0 0 1",
            "1 0 0 - - -",
            "0 1 0 - -A -a",
            "0 0 1 - -a -A",
        ],
    )
}

pub fn block_w7() -> UnitMatrix {
    build(
        4,
        XValue::ONE,
        &[
            "1 1 1 1 0 0 0",
            "1 - 0 0 1 1 0",
            "1 0 - 0 - 0 1",
            "1 0 0 - 0 - -",
            "0 1 - 0 0 1 -",
            "0 1 0 - 1 0 1",
            "0 0 1 - - 1 0",
        ],
    )
}

pub fn block_w8() -> UnitMatrix {
    build(
        4,
        XValue::ONE,
        &[
            "1 1 1 1 0 0 0 0",
            "1 - 0 0 1 1 0 0",
            "1 0 - 0 - 0 1 0",
            "1 0 0 - 0 - - 0",
            "0 1 - 0 1 0 0 1",
            "0 1 0 - 0 1 0 -",
            "0 0 1 - 0 0 1 1",
            "0 0 0 0 1 - 1 -",
        ],
    )
}

/// `E_{2m}(x)`: row pairs `(2j-1, 2j)`. Pair 1 is `[1 1 1 1]`, `[1 1 - -]`;
/// pair `j` for `2 ≤ j < m` holds `[[1 -],[1 -]]` in columns `2j-3, 2j-2` and
/// `[[1 1],[- -]]` in columns `2j+1, 2j+2`; pair `m` holds `[[1 -],[1 -]]` in
/// columns `2m-3, 2m-2` and `[[x -x],[-x x]]` in the last two columns.
pub fn block_e2m(m: usize, x: XValue) -> Result<UnitMatrix> {
    if m < 2 {
        return Err(Error::InvalidBlock(format!("E_2m needs m >= 2, got {m}")));
    }
    let n = 2 * m;
    let mut rows = vec![vec!["0"; n]; n];
    let mut put = |r: usize, c: usize, tok: &'static str| rows[r - 1][c - 1] = tok;
    for (c, tok) in [(1, "1"), (2, "1"), (3, "1"), (4, "1")] {
        put(1, c, tok);
    }
    for (c, tok) in [(1, "1"), (2, "1"), (3, "-"), (4, "-")] {
        put(2, c, tok);
    }
    for j in 2..=m {
        let (top, bottom) = (2 * j - 1, 2 * j);
        put(top, 2 * j - 3, "1");
        put(top, 2 * j - 2, "-");
        put(bottom, 2 * j - 3, "1");
        put(bottom, 2 * j - 2, "-");
        if j < m {
            put(top, 2 * j + 1, "1");
            put(top, 2 * j + 2, "1");
            put(bottom, 2 * j + 1, "-");
            put(bottom, 2 * j + 2, "-");
        } else {
            put(top, n - 1, "x");
            put(top, n, "-x");
            put(bottom, n - 1, "-x");
            put(bottom, n, "x");
        }
    }
    let lines: Vec<String> = rows.iter().map(|r| r.join(" ")).collect();
    let refs: Vec<&str> = lines.iter().map(String::as_str).collect();
    Ok(build(4, x, &refs))
}

/// Fourier matrix of order 5, entry `(i, j) = ζ_5^{ij}` (0-based).
pub fn block_f5() -> UnitMatrix {
    let rows = (0..5u32)
        .map(|i| (0..5u32).map(|j| UnitEntry::root(i * j % 5)).collect())
        .collect();
    UnitMatrix::new(5, 5, 0, rows).expect("F5 shape")
}

/// The order-6 weight-5 matrix with one free unimodular parameter.
pub fn block_uw65(x: XValue) -> UnitMatrix {
    build(
        5,
        x,
        &[
            "1 1 1 1 1 0",
            "1 - x -x 0 1",
            "1 -X - 0 X -",
            "1 X 0 - -X -",
            "1 0 -x x - 1",
            "0 1 - - 1 1",
        ],
    )
}

/// A column transposition mapping `E_{2m}(1)` onto `E_{2m}(-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwapWitness {
    pub m: usize,
    /// 0-based columns exchanged.
    pub columns: (usize, usize),
    pub verified: bool,
}

/// Swapping the last two columns of `E_{2m}(1)` gives `E_{2m}(-1)`; the claim
/// is checked entry by entry.
pub fn e2m_sign_swap_equivalence(m: usize) -> Result<SwapWitness> {
    let plus = block_e2m(m, XValue::ONE)?;
    let minus = block_e2m(m, XValue::MINUS_ONE)?;
    let n = 2 * m;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(n - 2, n - 1);
    let swapped = plus.permute_cols(&perm)?;
    Ok(SwapWitness {
        m,
        columns: (n - 2, n - 1),
        verified: swapped == minus,
    })
}

/// Identifies a named block together with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BlockId {
    I1,
    B2,
    Uw33,
    Uw43,
    W5,
    W6,
    W7,
    W8,
    E2m { m: usize, x: XValue },
    F5,
    Uw65 { x: XValue },
}

impl BlockId {
    /// Validates the parameter combination for `label`.
    pub fn new(label: &str, m: Option<usize>, x: Option<XValue>) -> Result<BlockId> {
        let label = label.to_ascii_uppercase();
        let plain = |id: BlockId| {
            if m.is_some() || x.is_some() {
                Err(Error::InvalidBlock(format!("{label} takes no parameters")))
            } else {
                Ok(id)
            }
        };
        match label.as_str() {
            "I1" => plain(BlockId::I1),
            "B2" => plain(BlockId::B2),
            "UW33" => plain(BlockId::Uw33),
            "UW43" => plain(BlockId::Uw43),
            "W5" => plain(BlockId::W5),
            "W6" => plain(BlockId::W6),
            "W7" => plain(BlockId::W7),
            "W8" => plain(BlockId::W8),
            "F5" => plain(BlockId::F5),
            "E2M" => match (m, x) {
                (Some(m), Some(x)) if m >= 2 => Ok(BlockId::E2m { m, x }),
                (Some(m), Some(_)) => {
                    Err(Error::InvalidBlock(format!("E2m needs m >= 2, got {m}")))
                }
                _ => Err(Error::InvalidBlock("E2m needs both m and x".into())),
            },
            "UW65" => match (m, x) {
                (None, Some(x)) => Ok(BlockId::Uw65 { x }),
                (Some(_), _) => Err(Error::InvalidBlock("UW65 takes no m".into())),
                (None, None) => Err(Error::InvalidBlock("UW65 needs x".into())),
            },
            other => Err(Error::InvalidBlock(format!("unknown block label {other}"))),
        }
    }

    pub fn build(self) -> UnitMatrix {
        match self {
            BlockId::I1 => block_i1(),
            BlockId::B2 => block_b2(),
            BlockId::Uw33 => block_uw33(),
            BlockId::Uw43 => block_uw43(),
            BlockId::W5 => block_w5(),
            BlockId::W6 => block_w6(),
            BlockId::W7 => block_w7(),
            BlockId::W8 => block_w8(),
            BlockId::E2m { m, x } => block_e2m(m, x).expect("validated m"),
            BlockId::F5 => block_f5(),
            BlockId::Uw65 { x } => block_uw65(x),
        }
    }

    pub fn weight(self) -> usize {
        match self {
            BlockId::I1 => 1,
            BlockId::B2 => 2,
            BlockId::Uw33 | BlockId::Uw43 => 3,
            BlockId::F5 | BlockId::Uw65 { .. } => 5,
            _ => 4,
        }
    }
}

impl FromStr for XValue {
    type Err = Error;

    /// `var`/`x` for the formal variable, otherwise an integer `K` meaning `ζ_12^K`.
    fn from_str(s: &str) -> Result<XValue> {
        match s.trim() {
            "var" | "x" => Ok(XValue::Formal),
            t => t
                .parse::<i64>()
                .map(|k| XValue::base(k.rem_euclid(BASE_ORDER as i64) as u32))
                .map_err(|_| Error::InvalidBlock(format!("bad x value {t:?}"))),
        }
    }
}
