use std::cmp::Ordering;

use serde::Serialize;

use super::{Transform, UnitMatrix};
use crate::arith::{entry_cmp, UnitEntry};
use crate::error::{Error, Result};

/// A standardized matrix together with the T1–T4 operations that produce it
/// from the input. Replaying `transforms` on the input yields `matrix` exactly.
#[derive(Clone, Debug, Serialize)]
pub struct Standardized {
    #[serde(skip)]
    pub matrix: UnitMatrix,
    pub transforms: Vec<Transform>,
}

pub(crate) fn row_cmp(a: &[UnitEntry], b: &[UnitEntry]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| entry_cmp(*x, *y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

impl UnitMatrix {
    /// Checks S1–S4: leading nonzero of every row and every column is 1, the
    /// first row is `w` ones followed by zeros, and the rows ascend under ≺.
    pub fn is_standard_form(&self) -> Result<bool> {
        if self.is_symbolic() {
            return Err(Error::Symbolic);
        }
        let n = self.n;
        let leads_one = |mut it: Box<dyn Iterator<Item = UnitEntry> + '_>| {
            it.find(|e| !e.is_zero()) == Some(UnitEntry::ONE)
        };
        let s1 = (0..n).all(|i| leads_one(Box::new(self.row(i).iter().copied())));
        let s2 = (0..n).all(|j| leads_one(Box::new((0..n).map(move |i| self.get(i, j)))));
        let s3 = self.row(0).iter().enumerate().all(|(j, &e)| {
            e == if j < self.weight {
                UnitEntry::ONE
            } else {
                UnitEntry::Zero
            }
        });
        let s4 = (1..n).all(|i| row_cmp(self.row(i - 1), self.row(i)) == Ordering::Less);
        Ok(s1 && s2 && s3 && s4)
    }

    /// An equivalent matrix in standard form.
    ///
    /// Matrices already in standard form are returned unchanged. Otherwise the
    /// first row is scaled to ones and its support packed to the left with a
    /// stable column permutation; the remaining rows are then placed one at a
    /// time, each time taking the smallest row under ≺ after scaling it so its
    /// leading entry is 1 against the column scalings fixed so far. Columns are
    /// scaled when first touched, which keeps S1 and S2 consistent.
    ///
    /// Two different standard forms can still be equivalent; see
    /// [`crate::matrix::canonical_form`] for a complete invariant at small orders.
    pub fn standardize(&self) -> Result<UnitMatrix> {
        Ok(self.standardize_with_trace()?.matrix)
    }

    pub fn standardize_with_trace(&self) -> Result<Standardized> {
        if self.is_symbolic() {
            return Err(Error::Symbolic);
        }
        if !self.gram_check() {
            return Err(Error::NotWeighing);
        }
        if self.is_standard_form()? {
            return Ok(Standardized {
                matrix: self.clone(),
                transforms: Vec::new(),
            });
        }
        let n = self.n;
        let l = self.order;
        let conj = |k: u32| (l - k % l) % l;

        let col_perm: Vec<usize> = (0..n)
            .filter(|&j| !self.get(0, j).is_zero())
            .chain((0..n).filter(|&j| self.get(0, j).is_zero()))
            .collect();
        let packed = self.permute_cols(&col_perm)?;
        let root = |i: usize, j: usize| packed.get(i, j).root_index();

        let mut col_scale: Vec<Option<u32>> = vec![None; n];
        let mut row_scale: Vec<u32> = vec![0; n];

        let hypothetical = |i: usize, col_scale: &[Option<u32>]| -> (Vec<u32>, u32) {
            let lead = (0..n).find(|&j| root(i, j).is_some()).expect("weight >= 1");
            let lead_root = root(i, lead).unwrap();
            let r = match col_scale[lead] {
                Some(c) => conj(lead_root + c),
                None => conj(lead_root),
            };
            let codes = (0..n)
                .map(|j| match (root(i, j), col_scale[j]) {
                    (None, _) => l,
                    (Some(k), Some(c)) => (k + c + r) % l,
                    (Some(_), None) => 0,
                })
                .collect();
            (codes, r)
        };

        let mut order = Vec::with_capacity(n);
        let mut remaining: Vec<usize> = (0..n).collect();
        let mut next = 0usize;
        loop {
            let (_, r) = hypothetical(next, &col_scale);
            row_scale[next] = r;
            for (j, scale) in col_scale.iter_mut().enumerate() {
                if let (Some(k), None) = (root(next, j), *scale) {
                    *scale = Some(conj(k + r));
                }
            }
            order.push(next);
            remaining.retain(|&i| i != next);
            if remaining.is_empty() {
                break;
            }
            next = remaining
                .iter()
                .map(|&i| (hypothetical(i, &col_scale).0, i))
                .min()
                .map(|(_, i)| i)
                .unwrap();
        }

        let mut transforms = vec![Transform::PermuteCols(col_perm)];
        transforms.extend((0..n).map(|i| Transform::ScaleRow(i, UnitEntry::root(row_scale[i]))));
        transforms.extend((0..n).map(|j| {
            Transform::ScaleCol(
                j,
                UnitEntry::root(col_scale[j].expect("every column is touched")),
            )
        }));
        transforms.push(Transform::PermuteRows(order));
        let matrix = self.apply_all(&transforms)?;
        assert!(
            matrix.is_standard_form()?,
            "greedy standardization must satisfy S1-S4"
        );
        Ok(Standardized { matrix, transforms })
    }
}
