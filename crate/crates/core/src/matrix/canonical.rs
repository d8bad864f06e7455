//! Lexicographically least standard form of an equivalence class.
//!
//! The search places rows one at a time. Columns are kept in an ordered
//! partition whose cells hold columns that agree on every placed row; placing a
//! row sorts each cell by that row's values and splits it. A row's scaling is
//! forced when its leading column is already scaled, and otherwise is a free
//! phase that is branched over. Ties between candidate rows are explored and
//! the least complete matrix wins. Since every standard form arises from some
//! choice sequence, equal outputs mean equivalent inputs (under T1–T4).

use super::UnitMatrix;
use crate::arith::UnitEntry;
use crate::error::{Error, Result};

pub const DEFAULT_CANONICAL_BUDGET: u64 = 2_000_000;

pub fn canonical_form(w: &UnitMatrix) -> Result<UnitMatrix> {
    canonical_form_with_budget(w, DEFAULT_CANONICAL_BUDGET)
}

/// Like [`canonical_form`], failing with [`Error::BudgetExceeded`] once more
/// than `budget` candidate rows have been evaluated.
pub fn canonical_form_with_budget(w: &UnitMatrix, budget: u64) -> Result<UnitMatrix> {
    if w.is_symbolic() {
        return Err(Error::Symbolic);
    }
    if !w.gram_check() {
        return Err(Error::NotWeighing);
    }
    let n = w.n();
    let mut search = Search {
        n,
        l: w.order(),
        roots: (0..n * n)
            .map(|idx| w.get(idx / n, idx % n).root_index())
            .collect(),
        best: None,
        nodes: 0,
        budget,
    };
    let state = State {
        placed: vec![false; n],
        cells: vec![(0..n).collect()],
        col_scale: vec![None; n],
        prefix: Vec::with_capacity(n * n),
    };
    search.descend(&state)?;
    let codes = search.best.expect("search visits at least one leaf");
    let entries = codes
        .into_iter()
        .map(|c| {
            if c == w.order() {
                UnitEntry::Zero
            } else {
                UnitEntry::root(c)
            }
        })
        .collect();
    let out = UnitMatrix::from_flat(n, w.weight(), w.order(), 0, entries)?;
    debug_assert!(out.is_standard_form()?);
    Ok(out)
}

#[derive(Clone)]
struct State {
    placed: Vec<bool>,
    cells: Vec<Vec<usize>>,
    col_scale: Vec<Option<u32>>,
    prefix: Vec<u32>,
}

struct Search {
    n: usize,
    l: u32,
    roots: Vec<Option<u32>>,
    best: Option<Vec<u32>>,
    nodes: u64,
    budget: u64,
}

impl Search {
    fn root(&self, i: usize, j: usize) -> Option<u32> {
        self.roots[i * self.n + j]
    }

    fn conj(&self, k: u32) -> u32 {
        (self.l - k % self.l) % self.l
    }

    fn code(&self, state: &State, i: usize, j: usize, r: u32) -> u32 {
        match (self.root(i, j), state.col_scale[j]) {
            (None, _) => self.l,
            (Some(k), Some(c)) => (k + c + r) % self.l,
            (Some(_), None) => 0,
        }
    }

    /// Admissible row scalings for row `i`.
    fn phases(&self, state: &State, i: usize) -> Vec<u32> {
        let nonzero_cell = |cell: &Vec<usize>| cell.iter().any(|&j| self.root(i, j).is_some());
        let lead = state
            .cells
            .iter()
            .position(nonzero_cell)
            .expect("weight >= 1");
        let touched = |cell: &Vec<usize>| state.col_scale[cell[0]].is_some();
        let anchor = if touched(&state.cells[lead]) {
            Some(lead)
        } else {
            (lead + 1..state.cells.len())
                .find(|&c| touched(&state.cells[c]) && nonzero_cell(&state.cells[c]))
        };
        let mut out: Vec<u32> = match anchor {
            Some(c) => state.cells[c]
                .iter()
                .filter_map(|&j| {
                    let k = self.root(i, j)?;
                    Some(self.conj(k + state.col_scale[j].unwrap()))
                })
                .collect(),
            None => vec![0],
        };
        out.sort_unstable();
        out.dedup();
        out
    }

    fn row_vector(&self, state: &State, i: usize, r: u32) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.n);
        for cell in &state.cells {
            let start = v.len();
            v.extend(cell.iter().map(|&j| self.code(state, i, j, r)));
            v[start..].sort_unstable();
        }
        v
    }

    fn place(&self, state: &State, i: usize, r: u32, row: &[u32]) -> State {
        let mut next = state.clone();
        next.placed[i] = true;
        next.prefix.extend_from_slice(row);
        next.cells.clear();
        for cell in &state.cells {
            let mut keyed: Vec<(u32, usize)> = cell
                .iter()
                .map(|&j| (self.code(state, i, j, r), j))
                .collect();
            keyed.sort_unstable();
            for chunk in keyed.chunk_by(|a, b| a.0 == b.0) {
                next.cells.push(chunk.iter().map(|&(_, j)| j).collect());
            }
        }
        for j in 0..self.n {
            if let (Some(k), None) = (self.root(i, j), state.col_scale[j]) {
                next.col_scale[j] = Some(self.conj(k + r));
            }
        }
        next
    }

    fn descend(&mut self, state: &State) -> Result<()> {
        let depth = state.prefix.len() / self.n;
        if depth == self.n {
            if self.best.as_ref().is_none_or(|b| state.prefix < *b) {
                self.best = Some(state.prefix.clone());
            }
            return Ok(());
        }
        let mut min: Option<Vec<u32>> = None;
        let mut ties: Vec<(usize, u32)> = Vec::new();
        for i in (0..self.n).filter(|&i| !state.placed[i]) {
            for r in self.phases(state, i) {
                self.nodes += 1;
                if self.nodes > self.budget {
                    return Err(Error::BudgetExceeded(self.budget));
                }
                let v = self.row_vector(state, i, r);
                match min.as_ref().map(|m| v.cmp(m)) {
                    None | Some(std::cmp::Ordering::Less) => {
                        min = Some(v);
                        ties.clear();
                        ties.push((i, r));
                    }
                    Some(std::cmp::Ordering::Equal) => ties.push((i, r)),
                    Some(std::cmp::Ordering::Greater) => {}
                }
            }
        }
        let row = min.expect("an unplaced row remains");
        for (i, r) in ties {
            let next = self.place(state, i, r, &row);
            if let Some(b) = &self.best {
                if b[..next.prefix.len()] < next.prefix[..] {
                    return Ok(());
                }
            }
            self.descend(&next)?;
        }
        Ok(())
    }
}
