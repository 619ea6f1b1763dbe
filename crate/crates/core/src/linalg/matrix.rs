//! Sparse exact matrices and elimination.
//!
//! Rank uses a bucketed elimination: rows are grouped by their leading
//! column, the sparsest row of the leftmost bucket becomes the pivot and the
//! remaining rows of that bucket are reduced against it. Over ℚ the rows are
//! kept integral and primitive (fraction-free), over 𝔽ₚ plain residues are
//! used, and ℚ(ζₙ) falls back to generic scalar arithmetic.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Field, FieldDescriptor, Scalar};

type Row<T> = Vec<(usize, T)>;

/// A sparse matrix over an exact field; no explicit zeros are stored.
#[derive(Clone, Debug)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Row<Scalar>>,
}

impl PartialEq for SparseMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.field == other.field
            && self.data == other.data
    }
}

impl SparseMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, field: field.clone(), data: vec![Vec::new(); rows] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i].push((i, field.one()));
        }
        m
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets<I>(field: &Field, rows: usize, cols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet ({r}, {c}) out of bounds {rows}x{cols}");
            if v.is_zero() {
                continue;
            }
            match acc[r].get_mut(&c) {
                Some(e) => *e = &*e + &v,
                None => {
                    acc[r].insert(c, v);
                }
            }
        }
        let data = acc
            .into_iter()
            .map(|row| row.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        SparseMatrix { rows, cols, field: field.clone(), data }
    }

    pub fn from_dense(field: &Field, dense: &[Vec<Scalar>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        Self::from_triplets(
            field,
            rows,
            cols,
            dense.iter().enumerate().flat_map(|(i, r)| {
                r.iter().enumerate().map(move |(j, v)| (i, j, v.clone()))
            }),
        )
    }

    pub fn from_i64(field: &Field, dense: &[Vec<i64>]) -> Self {
        let d: Vec<Vec<Scalar>> =
            dense.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        Self::from_dense(field, &d)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn row(&self, i: usize) -> &[(usize, Scalar)] {
        &self.data[i]
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.data[r]
            .binary_search_by_key(&c, |(j, _)| *j)
            .map(|k| self.data[r][k].1.clone())
            .unwrap_or_else(|_| self.field.zero())
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, j.to_owned(), v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut d = vec![vec![self.field.zero(); self.cols]; self.rows];
        for (i, j, v) in self.entries() {
            d[i][j] = v.clone();
        }
        d
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<Row<Scalar>> = vec![Vec::new(); self.cols];
        for (i, j, v) in self.entries() {
            data[j].push((i, v.clone()));
        }
        SparseMatrix { rows: self.cols, cols: self.rows, field: self.field.clone(), data }
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (k, a) in row {
                for (j, b) in &other.data[*k] {
                    let t = a * b;
                    match acc.get_mut(j) {
                        Some(e) => *e = &*e + &t,
                        None => {
                            acc.insert(*j, t);
                        }
                    }
                }
            }
            data.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        SparseMatrix { rows: self.rows, cols: other.cols, field: self.field.clone(), data }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sum");
        Self::from_triplets(
            &self.field,
            self.rows,
            self.cols,
            self.entries()
                .chain(other.entries())
                .map(|(i, j, v)| (i, j, v.clone())),
        )
    }

    pub fn scale(&self, s: &Scalar) -> SparseMatrix {
        Self::from_triplets(
            &self.field,
            self.rows,
            self.cols,
            self.entries().map(|(i, j, v)| (i, j, v * s)),
        )
    }

    /// Applies the matrix to a dense column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                row.iter().fold(self.field.zero(), |acc, (j, a)| &acc + &(a * &v[*j]))
            })
            .collect()
    }

    /// Matrix with rows and columns permuted: entry `(i, j)` moves to `(rp[i], cp[j])`.
    pub fn permuted(&self, rp: &[usize], cp: &[usize]) -> SparseMatrix {
        Self::from_triplets(
            &self.field,
            self.rows,
            self.cols,
            self.entries().map(|(i, j, v)| (rp[i], cp[j], v.clone())),
        )
    }

    /// Block matrix `[self | other]`.
    pub fn hstack(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.rows, other.rows);
        let off = self.cols;
        Self::from_triplets(
            &self.field,
            self.rows,
            self.cols + other.cols,
            self.entries()
                .map(|(i, j, v)| (i, j, v.clone()))
                .chain(other.entries().map(|(i, j, v)| (i, j + off, v.clone()))),
        )
    }

    /// Exact rank.
    pub fn rank(&self) -> usize {
        match self.field.descriptor() {
            FieldDescriptor::Rationals => rank_rational(&self.data),
            FieldDescriptor::PrimeField(p) => rank_mod_p(&self.data, p),
            FieldDescriptor::Cyclotomic(_) => rank_generic(&self.data),
        }
    }

    /// Reduced row echelon form: nonzero rows (sparse, pivot entry 1) and pivot columns.
    pub fn rref(&self) -> (Vec<Row<Scalar>>, Vec<usize>) {
        let mut rows: Vec<BTreeMap<usize, Scalar>> = self
            .data
            .iter()
            .filter(|r| !r.is_empty())
            .map(|r| r.iter().cloned().collect())
            .collect();
        let mut pivots = Vec::new();
        let mut out: Vec<BTreeMap<usize, Scalar>> = Vec::new();
        for col in 0..self.cols {
            let Some(pos) = rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r.contains_key(&col))
                .min_by_key(|(_, r)| r.len())
                .map(|(k, _)| k)
            else {
                continue;
            };
            let mut piv = rows.swap_remove(pos);
            let inv = piv[&col].inv().expect("pivot is nonzero");
            for v in piv.values_mut() {
                *v = &*v * &inv;
            }
            for r in rows.iter_mut().chain(out.iter_mut()) {
                if let Some(f) = r.get(&col).cloned() {
                    axpy_map(r, &-f, &piv);
                }
            }
            rows.retain(|r| !r.is_empty());
            out.push(piv);
            pivots.push(col);
        }
        (out.into_iter().map(|r| r.into_iter().collect()).collect(), pivots)
    }

    /// Basis of the right null space `{v : M v = 0}` as dense vectors.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (rows, pivots) = self.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![self.field.zero(); self.cols];
                v[free] = self.field.one();
                for (r, &pc) in rows.iter().zip(&pivots) {
                    if let Ok(k) = r.binary_search_by_key(&free, |(j, _)| *j) {
                        v[pc] = -&r[k].1;
                    }
                }
                v
            })
            .collect()
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<SparseMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = self.hstack(&SparseMatrix::identity(&self.field, n));
        let (rows, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Self::from_triplets(
            &self.field,
            n,
            n,
            rows.iter().take(n).enumerate().flat_map(|(i, r)| {
                r.iter().filter(|(j, _)| *j >= n).map(move |(j, v)| (i, j - n, v.clone()))
            }),
        ))
    }
}

fn axpy_map(r: &mut BTreeMap<usize, Scalar>, f: &Scalar, piv: &BTreeMap<usize, Scalar>) {
    for (j, v) in piv {
        let t = f * v;
        let remove = match r.get_mut(j) {
            Some(e) => {
                *e = &*e + &t;
                e.is_zero()
            }
            None => {
                if !t.is_zero() {
                    r.insert(*j, t);
                }
                false
            }
        };
        if remove {
            r.remove(j);
        }
    }
}

/// Shared driver for the bucketed elimination.
fn bucket_rank<T, F>(rows: Vec<Row<T>>, mut eliminate: F) -> usize
where
    F: FnMut(&Row<T>, &Row<T>) -> Row<T>,
{
    let mut buckets: BTreeMap<usize, Vec<Row<T>>> = BTreeMap::new();
    for r in rows.into_iter().filter(|r| !r.is_empty()) {
        buckets.entry(r[0].0).or_default().push(r);
    }
    let mut rank = 0;
    while let Some((_, mut bucket)) = buckets.pop_first() {
        let k = (0..bucket.len()).min_by_key(|&k| bucket[k].len()).unwrap();
        let pivot = bucket.swap_remove(k);
        rank += 1;
        for r in bucket {
            let reduced = eliminate(&r, &pivot);
            if let Some(&(lead, _)) = reduced.first() {
                buckets.entry(lead).or_default().push(reduced);
            }
        }
    }
    rank
}

/// Merge two sorted sparse rows as `a·x + b·y`, dropping zeros.
fn combine<T, M, Z>(x: &Row<T>, y: &Row<T>, mut lin: M, is_zero: Z) -> Row<T>
where
    M: FnMut(Option<&T>, Option<&T>) -> T,
    Z: Fn(&T) -> bool,
{
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (col, v) = match (x.get(i), y.get(j)) {
            (Some((ci, a)), Some((cj, b))) if ci == cj => {
                i += 1;
                j += 1;
                (*ci, lin(Some(a), Some(b)))
            }
            (Some((ci, a)), Some((cj, _))) if ci < cj => {
                i += 1;
                (*ci, lin(Some(a), None))
            }
            (Some((ci, a)), None) => {
                i += 1;
                (*ci, lin(Some(a), None))
            }
            (_, Some((cj, b))) => {
                j += 1;
                (*cj, lin(None, Some(b)))
            }
            (None, None) => unreachable!(),
        };
        if !is_zero(&v) {
            out.push((col, v));
        }
    }
    out
}

fn primitive(mut r: Row<BigInt>) -> Row<BigInt> {
    let g = r.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for (_, v) in r.iter_mut() {
            *v /= &g;
        }
    }
    if r.first().is_some_and(|(_, v)| v.is_negative()) {
        for (_, v) in r.iter_mut() {
            *v = -&*v;
        }
    }
    r
}

fn rank_rational(data: &[Row<Scalar>]) -> usize {
    // Clear denominators row by row, then work fraction-free over ℤ.
    let rows: Vec<Row<BigInt>> = data
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |l, (_, v)| {
                l.lcm(v.as_rational().expect("rational entry").denom())
            });
            primitive(
                row.iter()
                    .map(|(j, v)| {
                        let r = v.as_rational().unwrap();
                        (*j, r.numer() * (&l / r.denom()))
                    })
                    .collect(),
            )
        })
        .collect();
    bucket_rank(rows, |r, piv| {
        let a = &piv[0].1;
        let b = &r[0].1;
        let out = combine(
            r,
            piv,
            |x, y| match (x, y) {
                (Some(x), Some(y)) => a * x - b * y,
                (Some(x), None) => a * x,
                (None, Some(y)) => -(b * y),
                (None, None) => BigInt::zero(),
            },
            Zero::is_zero,
        );
        primitive(out)
    })
}

fn rank_mod_p(data: &[Row<Scalar>], p: u64) -> usize {
    let rows: Vec<Row<u64>> = data
        .iter()
        .map(|row| {
            row.iter()
                .map(|(j, v)| match v {
                    Scalar::Modular { value, .. } => (*j, *value),
                    _ => panic!("expected residue"),
                })
                .collect()
        })
        .collect();
    let mulm = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let inv = |a: u64| {
        let (mut r, mut b, mut e) = (1u64, a, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = mulm(r, b);
            }
            b = mulm(b, b);
            e >>= 1;
        }
        r
    };
    bucket_rank(rows, |r, piv| {
        // r − (r₀/piv₀)·piv
        let f = mulm(r[0].1, inv(piv[0].1));
        let nf = (p - f) % p;
        combine(
            r,
            piv,
            |x, y| {
                let a = x.copied().unwrap_or(0);
                let b = y.map_or(0, |&y| mulm(nf, y));
                ((a as u128 + b as u128) % p as u128) as u64
            },
            |v| *v == 0,
        )
    })
}

fn rank_generic(data: &[Row<Scalar>]) -> usize {
    let rows: Vec<Row<Scalar>> = data.to_vec();
    bucket_rank(rows, |r, piv| {
        let f = -(&(&r[0].1 * &piv[0].1.inv().expect("pivot nonzero")));
        combine(
            r,
            piv,
            |x, y| match (x, y) {
                (Some(x), Some(y)) => x + &(&f * y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => &f * y,
                (None, None) => unreachable!(),
            },
            Scalar::is_zero,
        )
    })
}
