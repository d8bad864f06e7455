//! Exhaustive row-by-row classification over the alphabet `{0} ∪ {ζ_L^k}`.
//!
//! Entries are coded `0..L` for `ζ_L^k` and `L` for zero, so comparing codes
//! is comparing entries under ≺ and rows compare lexicographically by code.
//! The search only builds matrices in standard form (S1–S4), which loses
//! nothing since every unit weighing matrix over the alphabet standardizes
//! within it. Completed matrices are deduplicated by their canonical form.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use super::ring::RootTable;
use super::zero_pattern::disjoint_zero_triple;
use crate::arith::UnitEntry;
use crate::error::{Error, Result};
use crate::matrix::{canonical_form_with_budget, UnitMatrix, DEFAULT_CANONICAL_BUDGET};

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

/// Largest order the search accepts.
pub const MAX_SEARCH_ORDER: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub n: usize,
    pub w: usize,
    /// Alphabet order `L`.
    pub order: u32,
    /// Stop after this many rows (counting the fixed first row) and report the
    /// number of admissible prefixes instead of matrices.
    pub row_limit: Option<usize>,
    pub budget: u64,
    pub parallel: bool,
}

impl SearchConfig {
    pub fn new(n: usize, w: usize, order: u32) -> Self {
        Self {
            n,
            w,
            order,
            row_limit: None,
            budget: DEFAULT_NODE_BUDGET,
            parallel: false,
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }

    pub fn with_row_limit(mut self, rows: usize) -> Self {
        self.row_limit = Some(rows);
        self
    }

    fn validate(&self) -> Result<()> {
        if self.order == 0 {
            return Err(Error::ZeroOrder);
        }
        if self.n == 0 || self.n > MAX_SEARCH_ORDER {
            return Err(Error::Unsupported(format!(
                "search order must be in 1..={MAX_SEARCH_ORDER}, got {}",
                self.n
            )));
        }
        if self.w == 0 || self.w > self.n {
            return Err(Error::InvalidMatrix(format!(
                "weight {} must be in 1..={}",
                self.w, self.n
            )));
        }
        if self.row_limit == Some(0) {
            return Err(Error::Unsupported("row limit must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchOutcome {
    pub config: SearchConfig,
    /// One representative per class, sorted lexicographically by entry codes.
    #[serde(skip)]
    pub matrices: Vec<UnitMatrix>,
    pub nodes: u64,
    /// Distinct standard forms reached before merging equivalent ones.
    pub standard_forms: usize,
    /// True when every standard form was merged by its canonical form; false
    /// when canonicalization ran out of budget and some matrices are only
    /// known to be distinct standard forms.
    pub exact_classes: bool,
    /// Admissible prefixes, when a row limit cut the search short.
    pub prefixes: Option<u64>,
}

impl SearchOutcome {
    pub fn is_truncated(&self) -> bool {
        self.prefixes.is_some()
    }
}

struct Shared {
    n: usize,
    w: usize,
    l: u16,
    stop_rows: usize,
    /// Keep grids reaching `stop_rows` rather than just counting them.
    collect: bool,
    table: RootTable,
    budget: u64,
    nodes: AtomicU64,
    exhausted: AtomicBool,
}

impl Shared {
    fn zero(&self) -> u16 {
        self.l
    }

    fn tick(&self) -> Result<()> {
        let seen = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if seen > self.budget || self.exhausted.load(Ordering::Relaxed) {
            self.exhausted.store(true, Ordering::Relaxed);
            return Err(Error::BudgetExceeded(self.budget));
        }
        Ok(())
    }
}

/// Search state while filling row `i`.
struct Walker<'a> {
    sh: &'a Shared,
    grid: Vec<u16>,
    col_count: Vec<usize>,
    /// `suffix[p * (n + 1) + j]`: nonzeros of row `p` in columns `j..n`.
    suffix: Vec<usize>,
    /// `sums[(i * n + p) * dim..]`: exact partial inner product of row `i`
    /// with an earlier row `p`; `re`/`im` hold the same in floating point.
    sums: Vec<i32>,
    re: Vec<f64>,
    im: Vec<f64>,
    found: Vec<Vec<u16>>,
    prefixes: u64,
}

impl<'a> Walker<'a> {
    /// Resume from the first `rows` rows of `grid`.
    fn new(sh: &'a Shared, grid: Vec<u16>, rows: usize) -> Self {
        let n = sh.n;
        let mut w = Walker {
            sh,
            grid,
            col_count: vec![0; n],
            suffix: vec![0; n * (n + 1)],
            sums: vec![0; n * n * sh.table.dim],
            re: vec![0.0; n * n],
            im: vec![0.0; n * n],
            found: Vec::new(),
            prefixes: 0,
        };
        for i in 0..rows {
            w.close_row(i);
            for j in 0..n {
                w.col_count[j] += usize::from(w.grid[i * n + j] != sh.zero());
            }
        }
        w
    }

    fn close_row(&mut self, i: usize) {
        let n = self.sh.n;
        for j in (0..n).rev() {
            let nz = usize::from(self.grid[i * n + j] != self.sh.zero());
            self.suffix[i * (n + 1) + j] = self.suffix[i * (n + 1) + j + 1] + nz;
        }
    }

    fn row_done(&mut self, i: usize) -> Result<()> {
        let sh = self.sh;
        if i + 1 == sh.stop_rows {
            if sh.collect {
                self.found.push(self.grid.clone());
            } else {
                self.prefixes += 1;
            }
            return Ok(());
        }
        self.close_row(i);
        self.start_row(i + 1)
    }

    fn start_row(&mut self, i: usize) -> Result<()> {
        let (n, dim) = (self.sh.n, self.sh.table.dim);
        self.sums[i * n * dim..(i * n + i) * dim].fill(0);
        self.re[i * n..i * n + i].fill(0.0);
        self.im[i * n..i * n + i].fill(0.0);
        self.place(i, 0, 0, true)
    }

    /// Adds (`sign = 1`) or removes (`sign = -1`) the contribution of code `c`
    /// at `(i, j)` to each partial inner product.
    fn contribute(&mut self, i: usize, j: usize, c: u16, sign: i32) {
        let sh = self.sh;
        let (n, dim, l) = (sh.n, sh.table.dim, sh.l as u32);
        for p in 0..i {
            let q = self.grid[p * n + j];
            if q == sh.zero() {
                continue;
            }
            let k = (c as u32 + l - q as u32) % l;
            let coords = sh.table.coords(k);
            let s = i * n + p;
            for (a, &b) in self.sums[s * dim..(s + 1) * dim].iter_mut().zip(coords) {
                *a += sign * b;
            }
            self.re[s] += sign as f64 * sh.table.re[k as usize];
            self.im[s] += sign as f64 * sh.table.im[k as usize];
        }
    }

    /// Can every partial inner product still reach zero with the nonzeros left?
    fn feasible(&self, i: usize, next: usize, row_left: usize) -> bool {
        let sh = self.sh;
        let (n, dim) = (sh.n, sh.table.dim);
        (0..i).all(|p| {
            let k = self.suffix[p * (n + 1) + next].min(row_left);
            let s = i * n + p;
            if k == 0 {
                self.sums[s * dim..(s + 1) * dim].iter().all(|&c| c == 0)
            } else {
                let mag = self.re[s] * self.re[s] + self.im[s] * self.im[s];
                mag <= (k * k) as f64 + 1e-9
            }
        })
    }

    /// Fills `(i, j)`. `nz` counts nonzeros so far in the row; `tied` means the
    /// row agrees with row `i - 1` on columns `0..j`.
    fn place(&mut self, i: usize, j: usize, nz: usize, tied: bool) -> Result<()> {
        let sh = self.sh;
        let (n, w) = (sh.n, sh.w);
        if j == n {
            // rows are distinct since they are orthogonal; S4 needs strict ascent
            return if tied { Ok(()) } else { self.row_done(i) };
        }
        let rows_after = n - 1 - i;
        let need_col = w - self.col_count[j];
        let prev = self.grid[(i - 1) * n + j];
        let min_code = if tied { prev } else { 0 };

        let may_zero = nz + (n - j - 1) >= w && rows_after >= need_col;
        let may_one = nz < w && self.col_count[j] < w;
        // S1: leading nonzero of the row is 1; S2: leading nonzero of the column is 1
        let top = if !may_one {
            0
        } else if nz == 0 || self.col_count[j] == 0 {
            1
        } else {
            sh.l
        };
        for c in min_code..top {
            sh.tick()?;
            self.grid[i * n + j] = c;
            self.contribute(i, j, c, 1);
            let ok = self.feasible(i, j + 1, w - nz - 1);
            let r = if ok {
                self.col_count[j] += 1;
                let r = self.place(i, j + 1, nz + 1, tied && c == prev);
                self.col_count[j] -= 1;
                r
            } else {
                Ok(())
            };
            self.contribute(i, j, c, -1);
            r?;
        }
        if may_zero && min_code <= sh.zero() {
            sh.tick()?;
            self.grid[i * n + j] = sh.zero();
            if self.feasible(i, j + 1, w - nz) {
                self.place(i, j + 1, nz, tied && prev == sh.zero())?;
            }
        }
        Ok(())
    }
}

fn to_matrix(sh: &Shared, codes: &[u16]) -> Result<UnitMatrix> {
    let entries = codes
        .iter()
        .map(|&c| {
            if c == sh.zero() {
                UnitEntry::Zero
            } else {
                UnitEntry::root(c as u32)
            }
        })
        .collect();
    UnitMatrix::from_flat(sh.n, sh.w, sh.l as u32, 0, entries)
}

/// Every `UW(n, w)` over `{0} ∪ {ζ_L^k}` up to equivalence, one lexicographically
/// least standard form per class.
///
/// The result is exact for the alphabet: an empty list proves that no such
/// matrix has all entries among the `L`-th roots of unity, not that none exists
/// over the whole unit circle.
pub fn dfs_classify(cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    let (n, w) = (cfg.n, cfg.w);
    let l = u16::try_from(cfg.order)
        .ok()
        .filter(|&l| l < u16::MAX)
        .ok_or_else(|| Error::Unsupported(format!("alphabet order {} too large", cfg.order)))?;
    let stop_rows = cfg.row_limit.map_or(n, |r| r.min(n));
    let sh = Shared {
        n,
        w,
        l,
        stop_rows,
        collect: stop_rows == n,
        table: RootTable::new(cfg.order),
        budget: cfg.budget,
        nodes: AtomicU64::new(0),
        exhausted: AtomicBool::new(false),
    };

    // S3: first row is w ones followed by zeros.
    let mut grid = vec![l; n * n];
    grid[..w].fill(0);

    let (found, prefixes) = if stop_rows == 1 {
        let found = if n == 1 { vec![grid] } else { Vec::new() };
        (found, u64::from(n > 1))
    } else if cfg.parallel && stop_rows > 2 {
        // fan out over admissible second rows
        let shallow = Shared {
            stop_rows: 2,
            collect: true,
            table: sh.table.clone(),
            nodes: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
            ..sh
        };
        let seeds = {
            let mut wk = Walker::new(&shallow, grid, 1);
            wk.start_row(1)?;
            wk.found
        };
        sh.nodes
            .fetch_add(shallow.nodes.load(Ordering::Relaxed), Ordering::Relaxed);
        let parts: Vec<Result<(Vec<Vec<u16>>, u64)>> = seeds
            .into_par_iter()
            .map(|seed| {
                let mut wk = Walker::new(&sh, seed, 2);
                wk.start_row(2)?;
                Ok((wk.found, wk.prefixes))
            })
            .collect();
        let mut found = Vec::new();
        let mut prefixes = 0;
        for p in parts {
            let (f, c) = p?;
            found.extend(f);
            prefixes += c;
        }
        (found, prefixes)
    } else {
        let mut wk = Walker::new(&sh, grid, 1);
        wk.start_row(1)?;
        (wk.found, wk.prefixes)
    };
    let nodes = sh.nodes.load(Ordering::Relaxed);

    if stop_rows < n {
        return Ok(SearchOutcome {
            config: cfg.clone(),
            matrices: Vec::new(),
            nodes,
            standard_forms: 0,
            exact_classes: true,
            prefixes: Some(prefixes),
        });
    }

    let forms: BTreeSet<Vec<u16>> = found.into_iter().collect();
    let standard_forms = forms.len();
    let classes: Vec<Result<(Vec<u16>, bool)>> = forms
        .into_par_iter()
        .map(|codes| {
            let m = to_matrix(&sh, &codes)?;
            if n == 7 && w == 5 {
                assert!(
                    disjoint_zero_triple(&m).is_some(),
                    "internal contradiction: UW(7,5) without three zero-disjoint rows"
                );
            }
            debug_assert!(m.gram_check() && m.is_standard_form()?);
            match canonical_form_with_budget(&m, DEFAULT_CANONICAL_BUDGET) {
                Ok(c) => Ok((codes_of(&c), true)),
                Err(Error::BudgetExceeded(_)) => Ok((codes, false)),
                Err(e) => Err(e),
            }
        })
        .collect();
    let mut exact_classes = true;
    let mut reps = BTreeSet::new();
    for c in classes {
        let (codes, exact) = c?;
        exact_classes &= exact;
        reps.insert(codes);
    }
    let matrices = reps
        .iter()
        .map(|c| to_matrix(&sh, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(SearchOutcome {
        config: cfg.clone(),
        matrices,
        nodes,
        standard_forms,
        exact_classes,
        prefixes: None,
    })
}

fn codes_of(m: &UnitMatrix) -> Vec<u16> {
    m.codes().into_iter().map(|c| c as u16).collect()
}
