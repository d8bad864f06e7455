use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::UnitMatrix;
use crate::arith::UnitEntry;
use crate::error::{Error, Result};

/// One of the operations T1–T6. Permutations map new position `i` to old position `perm[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Transform {
    PermuteRows(Vec<usize>),
    PermuteCols(Vec<usize>),
    ScaleRow(usize, UnitEntry),
    ScaleCol(usize, UnitEntry),
    HermitianTranspose,
    Conjugate,
}

fn check_perm(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::InvalidPermutation(perm.len()));
    }
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidPermutation(n));
        }
    }
    Ok(())
}

impl UnitMatrix {
    fn with_entries(&self, entries: Vec<UnitEntry>) -> UnitMatrix {
        UnitMatrix {
            entries,
            ..self.clone()
        }
    }

    fn check_scalar(&self, u: UnitEntry) -> Result<()> {
        match u {
            UnitEntry::Zero => Err(Error::ZeroScale),
            UnitEntry::Unit { root, var_exp } => {
                if root >= self.order {
                    Err(Error::InvalidMatrix(format!(
                        "scalar root {root} outside 0..{}",
                        self.order
                    )))
                } else if var_exp != 0 && self.vars == 0 {
                    Err(Error::InvalidMatrix(
                        "scalar uses x in a ground matrix".into(),
                    ))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// T1.
    pub fn permute_rows(&self, perm: &[usize]) -> Result<UnitMatrix> {
        check_perm(perm, self.n)?;
        let entries = perm
            .iter()
            .flat_map(|&p| self.row(p).iter().copied())
            .collect();
        Ok(self.with_entries(entries))
    }

    /// T2.
    pub fn permute_cols(&self, perm: &[usize]) -> Result<UnitMatrix> {
        check_perm(perm, self.n)?;
        let entries = (0..self.n)
            .flat_map(|i| perm.iter().map(move |&p| (i, p)))
            .map(|(i, p)| self.get(i, p))
            .collect();
        Ok(self.with_entries(entries))
    }

    /// T3.
    pub fn scale_row(&self, i: usize, u: UnitEntry) -> Result<UnitMatrix> {
        self.check_scalar(u)?;
        if i >= self.n {
            return Err(Error::InvalidMatrix(format!("row {i} out of range")));
        }
        let mut entries = self.entries.clone();
        for e in &mut entries[i * self.n..(i + 1) * self.n] {
            *e = e.mul(u, self.order);
        }
        Ok(self.with_entries(entries))
    }

    /// T4.
    pub fn scale_col(&self, j: usize, u: UnitEntry) -> Result<UnitMatrix> {
        self.check_scalar(u)?;
        if j >= self.n {
            return Err(Error::InvalidMatrix(format!("column {j} out of range")));
        }
        let mut entries = self.entries.clone();
        for i in 0..self.n {
            let e = &mut entries[i * self.n + j];
            *e = e.mul(u, self.order);
        }
        Ok(self.with_entries(entries))
    }

    pub fn transpose(&self) -> UnitMatrix {
        let entries = (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (j, i)))
            .map(|(j, i)| self.get(j, i))
            .collect();
        self.with_entries(entries)
    }

    /// T5.
    pub fn hermitian_transpose(&self) -> UnitMatrix {
        self.transpose().conjugate()
    }

    /// T6.
    pub fn conjugate(&self) -> UnitMatrix {
        let entries = self.entries.iter().map(|e| e.conj(self.order)).collect();
        self.with_entries(entries)
    }

    pub fn apply(&self, t: &Transform) -> Result<UnitMatrix> {
        match t {
            Transform::PermuteRows(p) => self.permute_rows(p),
            Transform::PermuteCols(p) => self.permute_cols(p),
            Transform::ScaleRow(i, u) => self.scale_row(*i, *u),
            Transform::ScaleCol(j, u) => self.scale_col(*j, *u),
            Transform::HermitianTranspose => Ok(self.hermitian_transpose()),
            Transform::Conjugate => Ok(self.conjugate()),
        }
    }

    pub fn apply_all<'a>(&self, ts: impl IntoIterator<Item = &'a Transform>) -> Result<UnitMatrix> {
        ts.into_iter().try_fold(self.clone(), |m, t| m.apply(t))
    }

    /// Random composition of T1–T4, deterministic in `seed`. Scalars are
    /// `L`-th roots of unity.
    pub fn random_equivalence_scramble(&self, seed: u64) -> UnitMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ops = Vec::new();
        let mut perm: Vec<usize> = (0..self.n).collect();
        perm.shuffle(&mut rng);
        ops.push(Transform::PermuteRows(perm.clone()));
        perm.shuffle(&mut rng);
        ops.push(Transform::PermuteCols(perm));
        for i in 0..self.n {
            ops.push(Transform::ScaleRow(
                i,
                UnitEntry::root(rng.random_range(0..self.order)),
            ));
        }
        for j in 0..self.n {
            ops.push(Transform::ScaleCol(
                j,
                UnitEntry::root(rng.random_range(0..self.order)),
            ));
        }
        self.apply_all(&ops)
            .expect("generated transforms are valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> UnitMatrix {
        UnitMatrix::new(
            2,
            12,
            0,
            vec![
                vec![UnitEntry::ONE, UnitEntry::ONE],
                vec![UnitEntry::ONE, UnitEntry::root(6)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn permutation_validation() {
        let w = b2();
        assert!(w.permute_rows(&[1, 0]).is_ok());
        assert_eq!(w.permute_rows(&[0, 0]), Err(Error::InvalidPermutation(2)));
        assert_eq!(w.permute_cols(&[0]), Err(Error::InvalidPermutation(1)));
    }

    #[test]
    fn zero_scale_rejected() {
        assert_eq!(b2().scale_row(0, UnitEntry::Zero), Err(Error::ZeroScale));
        assert_eq!(b2().scale_col(1, UnitEntry::Zero), Err(Error::ZeroScale));
    }

    #[test]
    fn conjugate_of_hermitian_transpose_is_transpose() {
        let w = b2().scale_row(1, UnitEntry::root(5)).unwrap();
        assert_eq!(w.hermitian_transpose().conjugate(), w.transpose());
    }

    #[test]
    fn scramble_is_deterministic() {
        let w = b2();
        assert_eq!(
            w.random_equivalence_scramble(7),
            w.random_equivalence_scramble(7)
        );
        assert!(w.random_equivalence_scramble(7).gram_check());
    }
}
