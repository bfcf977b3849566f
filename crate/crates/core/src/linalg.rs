//! Exact sparse linear algebra over a scalar field: Gaussian elimination,
//! canonical reduced row echelon form, ranks, kernel bases, and the
//! subquotient (kernel modulo image) machinery backing the cohomology
//! bases.
//!
//! All pivots are taken leftmost-first against a fixed column order, so the
//! reduced echelon form (and everything derived from it) is canonical. The
//! environment variable `ZIGZAG_ELIM_CAP` caps the number of stored nonzero
//! entries during an elimination; exceeding the cap aborts with a panic
//! rather than silently degrading.

use crate::scalar::Scalar;

use std::sync::OnceLock;

/// A sparse vector: (index, coefficient) pairs, strictly increasing indices,
/// no zero coefficients.
pub type SparseVec<K> = Vec<(usize, K)>;

/// `out = a + c * b`, merging sorted supports.
pub fn add_scaled<K: Scalar>(a: &SparseVec<K>, c: &K, b: &SparseVec<K>) -> SparseVec<K> {
    if c.is_zero() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ia, ca)), Some((ib, cb))) => {
                if ia < ib {
                    out.push((*ia, ca.clone()));
                    i += 1;
                } else if ib < ia {
                    out.push((*ib, cb.clone() * c.clone()));
                    j += 1;
                } else {
                    let v = ca.clone() + cb.clone() * c.clone();
                    if !v.is_zero() {
                        out.push((*ia, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            (Some((ia, ca)), None) => {
                out.push((*ia, ca.clone()));
                i += 1;
            }
            (None, Some((ib, cb))) => {
                out.push((*ib, cb.clone() * c.clone()));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

pub fn scale_vec<K: Scalar>(a: &SparseVec<K>, c: &K) -> SparseVec<K> {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(i, v)| (*i, v.clone() * c.clone())).collect()
}

pub fn get_entry<K: Scalar>(a: &SparseVec<K>, idx: usize) -> K {
    match a.binary_search_by_key(&idx, |(i, _)| *i) {
        Ok(pos) => a[pos].1.clone(),
        Err(_) => K::zero(),
    }
}

fn elim_cap() -> Option<usize> {
    static CAP: OnceLock<Option<usize>> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("ZIGZAG_ELIM_CAP")
            .ok()
            .and_then(|v| v.parse().ok())
    })
}

/// A sparse matrix held row-wise. Rows index the target basis of a linear
/// map, columns the source basis: `entry[r][c]` is the coefficient of
/// target-basis element `r` in the image of source-basis element `c`.
#[derive(Clone, Debug)]
pub struct SparseMat<K: Scalar> {
    pub nrows: usize,
    pub ncols: usize,
    pub rows: Vec<SparseVec<K>>,
}

impl<K: Scalar> SparseMat<K> {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMat {
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    /// Build from columns (images of the source basis vectors).
    pub fn from_columns(nrows: usize, cols: &[SparseVec<K>]) -> Self {
        let mut m = SparseMat::zero(nrows, cols.len());
        for (c, col) in cols.iter().enumerate() {
            for (r, v) in col {
                m.rows[*r].push((c, v.clone()));
            }
        }
        // column insertion order is already sorted per row
        m
    }

    pub fn add_entry(&mut self, r: usize, c: usize, v: K) {
        if v.is_zero() {
            return;
        }
        let row = &mut self.rows[r];
        match row.binary_search_by_key(&c, |(i, _)| *i) {
            Ok(pos) => {
                let nv = row[pos].1.clone() + v;
                if nv.is_zero() {
                    row.remove(pos);
                } else {
                    row[pos].1 = nv;
                }
            }
            Err(pos) => row.insert(pos, (c, v)),
        }
    }

    /// Apply to a sparse source vector, producing a target vector.
    pub fn apply(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut out: Vec<(usize, K)> = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            let mut acc = K::zero();
            for (c, a) in row {
                let x = get_entry(v, *c);
                if !x.is_zero() {
                    acc = acc + a.clone() * x;
                }
            }
            if !acc.is_zero() {
                out.push((r, acc));
            }
        }
        out
    }

    /// The transpose: rows become images of the original columns.
    pub fn transpose(&self) -> SparseMat<K> {
        let mut t = SparseMat::zero(self.ncols, self.nrows);
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                t.rows[*c].push((r, v.clone()));
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn rank(&self) -> usize {
        Rref::from_rows(self.rows.iter().cloned(), self.ncols).rank()
    }
}

/// A canonical reduced row echelon form: rows sorted by pivot column, each
/// pivot 1 and the only nonzero entry in its column among the rows.
#[derive(Clone, Debug)]
pub struct Rref<K: Scalar> {
    pub ncols: usize,
    /// Rows in increasing pivot order.
    pub rows: Vec<SparseVec<K>>,
    /// Pivot column of each row.
    pub pivots: Vec<usize>,
}

impl<K: Scalar> Rref<K> {
    pub fn new(ncols: usize) -> Self {
        Rref {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows<I: IntoIterator<Item = SparseVec<K>>>(rows: I, ncols: usize) -> Self {
        let mut rref = Rref::new(ncols);
        for row in rows {
            rref.insert(row);
        }
        rref
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce a vector modulo the row space (eliminating all pivot columns).
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut v = v.clone();
        loop {
            let hit = v.iter().find_map(|(i, c)| {
                self.pivots
                    .binary_search(i)
                    .ok()
                    .map(|pos| (pos, c.clone()))
            });
            match hit {
                Some((pos, c)) => {
                    v = add_scaled(&v, &(-c), &self.rows[pos]);
                }
                None => return v,
            }
        }
    }

    /// Reduce and also report the coefficient taken against each row.
    pub fn reduce_with_coords(&self, v: &SparseVec<K>) -> (SparseVec<K>, Vec<K>) {
        let mut coords = vec![K::zero(); self.rows.len()];
        let mut v = v.clone();
        loop {
            let hit = v.iter().find_map(|(i, c)| {
                self.pivots
                    .binary_search(i)
                    .ok()
                    .map(|pos| (pos, c.clone()))
            });
            match hit {
                Some((pos, c)) => {
                    coords[pos] = coords[pos].clone() + c.clone();
                    v = add_scaled(&v, &(-c), &self.rows[pos]);
                }
                None => return (v, coords),
            }
        }
    }

    /// Membership in the row space.
    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Insert a row, keeping the reduced echelon invariant. Returns true if
    /// the row enlarged the span.
    pub fn insert(&mut self, row: SparseVec<K>) -> bool {
        let red = self.reduce(&row);
        let Some((pivot, lead)) = red.first().cloned() else {
            return false;
        };
        let norm = scale_vec(&red, &lead.inv());
        // eliminate the new pivot from existing rows
        for r in self.rows.iter_mut() {
            let c = get_entry(r, pivot);
            if !c.is_zero() {
                *r = add_scaled(r, &(-c), &norm);
            }
        }
        let pos = self.pivots.partition_point(|p| *p < pivot);
        self.pivots.insert(pos, pivot);
        self.rows.insert(pos, norm);
        if let Some(cap) = elim_cap() {
            let total: usize = self.rows.iter().map(|r| r.len()).sum();
            assert!(
                total <= cap,
                "elimination working set ({total} entries) exceeded ZIGZAG_ELIM_CAP={cap}"
            );
        }
        true
    }

    /// Span equality with another reduced form over the same column space.
    pub fn same_span(&self, other: &Rref<K>) -> bool {
        // canonical forms are unique
        self.pivots == other.pivots && self.rows == other.rows
    }
}

/// Basis of the null space of the map represented by `mat` (vectors over the
/// source/column space), in canonical echelon form with respect to the
/// column order.
pub fn kernel_basis<K: Scalar>(mat: &SparseMat<K>) -> Vec<SparseVec<K>> {
    let rref = Rref::from_rows(mat.rows.iter().cloned(), mat.ncols);
    let pivot_of_col: std::collections::HashMap<usize, usize> = rref
        .pivots
        .iter()
        .enumerate()
        .map(|(r, c)| (*c, r))
        .collect();
    let mut out = Vec::new();
    for free in 0..mat.ncols {
        if pivot_of_col.contains_key(&free) {
            continue;
        }
        let mut v: SparseVec<K> = vec![(free, K::one())];
        for (r, row) in rref.rows.iter().enumerate() {
            let c = get_entry(row, free);
            if !c.is_zero() {
                // pivot coordinate = -entry
                v.push((rref.pivots[r], -c));
            }
        }
        v.sort_by_key(|(i, _)| *i);
        out.push(v);
    }
    out
}

/// Kernel of `mat` modulo the row space of `im` (the image of the previous
/// map), as a canonical subquotient.
#[derive(Clone, Debug)]
pub struct Subquotient<K: Scalar> {
    pub dim_ambient: usize,
    /// Reduced form of the image subspace.
    pub im: Rref<K>,
    /// Canonical representatives of the quotient basis: kernel vectors
    /// reduced modulo the image, in reduced echelon form.
    pub quo: Rref<K>,
}

impl<K: Scalar> Subquotient<K> {
    /// `outgoing`: the map whose kernel is taken (source = ambient space);
    /// `incoming`: the map whose image is quotiented out (target = ambient).
    pub fn new(outgoing: &SparseMat<K>, incoming: Option<&SparseMat<K>>) -> Self {
        let dim_ambient = outgoing.ncols;
        let im = match incoming {
            Some(mat) => {
                debug_assert_eq!(mat.nrows, dim_ambient);
                Rref::from_rows(mat.transpose().rows.iter().cloned(), dim_ambient)
            }
            None => Rref::new(dim_ambient),
        };
        let mut quo = Rref::new(dim_ambient);
        for v in kernel_basis(outgoing) {
            quo.insert(im.reduce(&v));
        }
        Subquotient {
            dim_ambient,
            im,
            quo,
        }
    }

    pub fn dim(&self) -> usize {
        self.quo.rank()
    }

    /// Coordinates of a vector in the quotient basis; `None` if the vector
    /// does not lie in `ker + im` (i.e. is not a cocycle representative).
    pub fn coords(&self, v: &SparseVec<K>) -> Option<Vec<K>> {
        let red = self.im.reduce(v);
        let (rem, coords) = self.quo.reduce_with_coords(&red);
        if rem.is_empty() {
            Some(coords)
        } else {
            None
        }
    }

    /// The canonical representative with the given quotient coordinates.
    pub fn representative(&self, coords: &[K]) -> SparseVec<K> {
        let mut v: SparseVec<K> = Vec::new();
        for (c, row) in coords.iter().zip(self.quo.rows.iter()) {
            v = add_scaled(&v, c, row);
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;
    use num_traits::Zero;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn mat(rows: &[&[i64]]) -> SparseMat<BigRational> {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = SparseMat::zero(rows.len(), ncols);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.add_entry(i, j, r(*v));
            }
        }
        m
    }

    #[test]
    fn rank_and_kernel() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        let ker = kernel_basis(&m);
        assert_eq!(ker.len(), 1);
        for v in &ker {
            assert!(m.apply(v).is_empty());
        }
    }

    #[test]
    fn rref_is_canonical() {
        let a = Rref::from_rows(
            vec![vec![(0, r(2)), (1, r(4))], vec![(1, r(1)), (2, r(1))]],
            3,
        );
        let b = Rref::from_rows(
            vec![vec![(1, r(3)), (2, r(3))], vec![(0, r(1)), (1, r(2))]],
            3,
        );
        assert!(a.same_span(&b));
        assert!(!a.contains(&vec![(2, r(1))]));
        assert!(a.contains(&vec![(0, r(1)), (1, r(2))]));
    }

    #[test]
    fn subquotient_coords() {
        // outgoing: x + y + z = 0 (kernel dim 2); incoming image spanned by (1,-1,0)
        let out = mat(&[&[1, 1, 1]]);
        let inc = mat(&[&[1], &[-1], &[0]]);
        let sq = Subquotient::new(&out, Some(&inc));
        assert_eq!(sq.dim(), 1);
        // (1,-1,0) is a kernel vector that is a boundary
        assert_eq!(
            sq.coords(&vec![(0, r(1)), (1, r(-1))]),
            Some(vec![r(0)])
        );
        // (0,1,-1) is a kernel vector that is not a boundary
        let c = sq.coords(&vec![(1, r(1)), (2, r(-1))]).unwrap();
        assert_eq!(c.len(), 1);
        assert!(!c[0].is_zero());
        // a non-cocycle has no coordinates
        assert_eq!(sq.coords(&vec![(0, r(1))]), None);
    }
}
