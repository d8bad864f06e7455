use crate::arith::{totient, CycloNumber};

/// Lookup tables for sums of `L`-th roots of unity: exact power-basis
/// coordinates of every `ζ^k` (so a sum is zero iff its coordinates vanish) and
/// floating-point values used only for magnitude bounds.
#[derive(Clone, Debug)]
pub(crate) struct RootTable {
    pub order: u32,
    pub dim: usize,
    coords: Vec<i32>,
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl RootTable {
    pub fn new(order: u32) -> Self {
        let dim = totient(order) as usize;
        let mut coords = Vec::with_capacity(order as usize * dim);
        let mut re = Vec::with_capacity(order as usize);
        let mut im = Vec::with_capacity(order as usize);
        for k in 0..order {
            let z = CycloNumber::root(order, k as i64).expect("order is positive");
            coords.extend(z.reduced().into_iter().map(|c| c as i32));
            let (r, i) = z.to_complex();
            re.push(r);
            im.push(i);
        }
        Self {
            order,
            dim,
            coords,
            re,
            im,
        }
    }

    pub fn coords(&self, k: u32) -> &[i32] {
        let k = (k % self.order) as usize;
        &self.coords[k * self.dim..(k + 1) * self.dim]
    }

    pub fn add_to(&self, acc: &mut [i32], k: u32) {
        for (a, c) in acc.iter_mut().zip(self.coords(k)) {
            *a += c;
        }
    }

    pub fn sub_from(&self, acc: &mut [i32], k: u32) {
        for (a, c) in acc.iter_mut().zip(self.coords(k)) {
            *a -= c;
        }
    }

    pub fn sum_is_zero(&self, roots: &[u32]) -> bool {
        let mut acc = vec![0i32; self.dim];
        for &k in roots {
            self.add_to(&mut acc, k);
        }
        acc.iter().all(|&c| c == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinates_detect_vanishing_sums() {
        let t = RootTable::new(12);
        assert_eq!(t.dim, 4);
        assert!(t.sum_is_zero(&[0, 6]));
        assert!(t.sum_is_zero(&[0, 4, 8]));
        assert!(t.sum_is_zero(&[1, 7, 3, 9]));
        assert!(t.sum_is_zero(&[1, 5, 9]));
        assert!(!t.sum_is_zero(&[0, 0, 4, 8]));
        assert!(t.sum_is_zero(&[]));
    }
}
