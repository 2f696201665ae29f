//! Sparse exact matrices indexed by color-typed multi-indices.
//!
//! Generic over the coefficient field so the same machinery runs over
//! plain rationals or over Q(sqrt N). Flat indices are row-major with the
//! leftmost tensor factor most significant, so dumps are reproducible.

use crate::scalar::Field;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// A sparse matrix between two tensor-product index spaces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix<S> {
    row_dims: Vec<u32>,
    col_dims: Vec<u32>,
    entries: BTreeMap<(u64, u64), S>,
}

fn space_size(dims: &[u32]) -> u64 {
    dims.iter().map(|&d| d as u64).product()
}

impl<S: Field> ExactMatrix<S> {
    /// The zero matrix with the given per-factor dimensions.
    pub fn zero(row_dims: Vec<u32>, col_dims: Vec<u32>) -> Self {
        ExactMatrix { row_dims, col_dims, entries: BTreeMap::new() }
    }

    /// Identity on the space with the given factor dimensions.
    pub fn identity(dims: Vec<u32>) -> Self {
        let mut m = ExactMatrix::zero(dims.clone(), dims);
        for i in 0..m.rows() {
            m.add_entry(i, i, S::one());
        }
        m
    }

    pub fn rows(&self) -> u64 {
        space_size(&self.row_dims)
    }

    pub fn cols(&self) -> u64 {
        space_size(&self.col_dims)
    }

    pub fn row_dims(&self) -> &[u32] {
        &self.row_dims
    }

    pub fn col_dims(&self) -> &[u32] {
        &self.col_dims
    }

    /// Flatten a 1-based multi-index over `dims` (row-major, leftmost most
    /// significant).
    pub fn flatten(dims: &[u32], idx: &[u32]) -> u64 {
        debug_assert_eq!(dims.len(), idx.len());
        let mut flat = 0u64;
        for (d, i) in dims.iter().zip(idx) {
            debug_assert!(*i >= 1 && i <= d);
            flat = flat * *d as u64 + (*i as u64 - 1);
        }
        flat
    }

    /// Inverse of [`ExactMatrix::flatten`].
    pub fn unflatten(dims: &[u32], mut flat: u64) -> Vec<u32> {
        let mut idx = vec![0u32; dims.len()];
        for (slot, &d) in dims.iter().enumerate().rev() {
            idx[slot] = (flat % d as u64) as u32 + 1;
            flat /= d as u64;
        }
        idx
    }

    /// Add `v` at `(row, col)`, dropping the entry if it cancels to zero.
    pub fn add_entry(&mut self, row: u64, col: u64, v: S) {
        if v.is_zero() {
            return;
        }
        match self.entries.entry((row, col)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + v;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn get(&self, row: u64, col: u64) -> Option<&S> {
        self.entries.get(&(row, col))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u64, u64), &S)> {
        self.entries.iter()
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.is_empty()
    }

    /// Matrix sum; shapes must agree.
    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.row_dims, rhs.row_dims);
        assert_eq!(self.col_dims, rhs.col_dims);
        let mut out = self.clone();
        for (&(r, c), v) in rhs.entries.iter() {
            out.add_entry(r, c, v.clone());
        }
        out
    }

    /// Scale all entries by `s`.
    pub fn scale(&self, s: &S) -> Self {
        let mut out = ExactMatrix::zero(self.row_dims.clone(), self.col_dims.clone());
        if s.is_zero() {
            return out;
        }
        for (&(r, c), v) in self.entries.iter() {
            out.add_entry(r, c, v.clone() * s.clone());
        }
        out
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(
            space_size(&self.col_dims),
            space_size(&rhs.row_dims),
            "inner dimensions must agree"
        );
        let mut by_row: BTreeMap<u64, Vec<(u64, &S)>> = BTreeMap::new();
        for (&(r, c), v) in rhs.entries.iter() {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut out = ExactMatrix::zero(self.row_dims.clone(), rhs.col_dims.clone());
        for (&(r, mid), v) in self.entries.iter() {
            if let Some(row) = by_row.get(&mid) {
                for &(c, w) in row {
                    out.add_entry(r, c, v.clone() * w.clone());
                }
            }
        }
        out
    }

    /// Kronecker product, matching the tensor product of maps.
    pub fn kron(&self, rhs: &Self) -> Self {
        let mut row_dims = self.row_dims.clone();
        row_dims.extend_from_slice(&rhs.row_dims);
        let mut col_dims = self.col_dims.clone();
        col_dims.extend_from_slice(&rhs.col_dims);
        let rrows = rhs.rows();
        let rcols = rhs.cols();
        let mut out = ExactMatrix::zero(row_dims, col_dims);
        for (&(r1, c1), v1) in self.entries.iter() {
            for (&(r2, c2), v2) in rhs.entries.iter() {
                out.add_entry(r1 * rrows + r2, c1 * rcols + c2, v1.clone() * v2.clone());
            }
        }
        out
    }

    /// Conjugate transpose; real coefficient fields, so just the transpose.
    pub fn dagger(&self) -> Self {
        let mut out = ExactMatrix::zero(self.col_dims.clone(), self.row_dims.clone());
        for (&(r, c), v) in self.entries.iter() {
            out.add_entry(c, r, v.clone());
        }
        out
    }

    /// Exact rank by Gaussian elimination over the coefficient field,
    /// treating each matrix entry row as a vector coordinate.
    pub fn rank_of_vectors(vectors: &[ExactMatrix<S>]) -> usize {
        let mut basis: Vec<BTreeMap<(u64, u64), S>> = Vec::new();
        for v in vectors {
            let mut cur = v.entries.clone();
            for b in &basis {
                let pivot = b.keys().next().expect("basis vectors are nonzero");
                if let Some(c) = cur.get(pivot).cloned() {
                    // cur -= c * b  (basis vectors are pivot-normalized)
                    for (k, w) in b.iter() {
                        let delta = c.clone() * w.clone();
                        match cur.entry(*k) {
                            std::collections::btree_map::Entry::Vacant(e) => {
                                if !delta.is_zero() {
                                    e.insert(S::zero() - delta);
                                }
                            }
                            std::collections::btree_map::Entry::Occupied(mut e) => {
                                let nv = e.get().clone() - delta;
                                if nv.is_zero() {
                                    e.remove();
                                } else {
                                    *e.get_mut() = nv;
                                }
                            }
                        }
                    }
                }
            }
            if !cur.is_empty() {
                let pivot = cur.keys().next().copied().unwrap();
                let pv = cur.get(&pivot).unwrap().clone();
                let inv = pv.inv();
                for w in cur.values_mut() {
                    *w = w.clone() * inv.clone();
                }
                let pos = basis
                    .binary_search_by(|b| b.keys().next().unwrap().cmp(&pivot))
                    .unwrap_or_else(|e| e);
                basis.insert(pos, cur);
            }
        }
        basis.len()
    }

    /// Dump as `row col a b` lines, sorted lexicographically, under a
    /// `T <sig> N=<n>` header supplied by the caller.
    pub fn dump_entries(&self) -> String {
        let mut out = String::new();
        for (&(r, c), v) in self.entries.iter() {
            let _ = writeln!(out, "{} {} {}", r, c, dump_scalar(v));
        }
        out
    }
}

fn dump_scalar<S: Field>(v: &S) -> String {
    // Display for Scalar is `a+b*sqrtN`-shaped; dumps want `a b`.
    let s = v.to_string();
    if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        if let Some(i) = inner[1..].find(['+', '-']).map(|i| i + 1) {
            let a = &inner[..i];
            let sign = if inner.as_bytes()[i] == b'-' { "-" } else { "" };
            let b = inner[i + 1..].trim_end_matches("*sqrtN");
            return format!("{a} {sign}{b}");
        }
    }
    format!("{s} 0")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn m2(entries: &[(u64, u64, i64)]) -> ExactMatrix<Scalar> {
        let mut m = ExactMatrix::zero(vec![2], vec![2]);
        for &(r, c, v) in entries {
            m.add_entry(r, c, Scalar::from_integer(v));
        }
        m
    }

    #[test]
    fn product_and_kron() {
        let a = m2(&[(0, 0, 1), (0, 1, 2), (1, 1, 3)]);
        let b = m2(&[(0, 0, 5), (1, 0, 7)]);
        let ab = a.mul(&b);
        assert_eq!(ab.get(0, 0), Some(&Scalar::from_integer(19)));
        assert_eq!(ab.get(1, 0), Some(&Scalar::from_integer(21)));
        let k = a.kron(&b);
        assert_eq!(k.rows(), 4);
        assert_eq!(k.get(0 * 2 + 1, 0 * 2 + 0), Some(&Scalar::from_integer(7)));
    }

    #[test]
    fn rank_detects_dependence() {
        let a = m2(&[(0, 0, 1), (1, 1, 1)]);
        let b = m2(&[(0, 0, 2), (1, 1, 2)]);
        let c = m2(&[(0, 1, 1)]);
        assert_eq!(ExactMatrix::rank_of_vectors(&[a.clone(), b, c]), 2);
        assert_eq!(ExactMatrix::rank_of_vectors(&[a.clone(), a]), 1);
        assert_eq!(ExactMatrix::<Scalar>::rank_of_vectors(&[]), 0);
    }

    #[test]
    fn flatten_is_row_major_leftmost_significant() {
        let dims = [3u32, 2];
        assert_eq!(ExactMatrix::<Scalar>::flatten(&dims, &[1, 1]), 0);
        assert_eq!(ExactMatrix::<Scalar>::flatten(&dims, &[1, 2]), 1);
        assert_eq!(ExactMatrix::<Scalar>::flatten(&dims, &[2, 1]), 2);
        assert_eq!(ExactMatrix::<Scalar>::unflatten(&dims, 5), vec![3, 2]);
    }
}
