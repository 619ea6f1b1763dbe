//! Hochschild homology of truncated quiver algebras.
//!
//! The closed form covers `kΓ/𝔪ᴺ` for every `N`, with the `N ≥ 2` case
//! given by cycle counts `a_q`, `b_r` and the kernel/cokernel of
//! multiplication by `N/(N∧r)`. The oracle builds the normalized bar
//! complex relative to `kΓ₀`: chains are cyclically composable tuples
//! `(c₀; c₁, …, c_p)` of basis paths with `c₁, …, c_p` of positive length,
//! graded by total length.

use std::collections::HashMap;

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{ChainPiece, GradedChainComplex, HomologyTable, Provenance, SparseMatrix};
use crate::quiver::{AlgebraBasis, AlgebraPresentation, PresentationKind};
use crate::scalar::{ker_coker_dim_of_mult, Scalar};

/// Default cap on the dimension of one chain group of an oracle complex.
pub const DEFAULT_DIM_CAP: usize = 200_000;

/// The oracle dimension cap, overridable through `HOMQUIVER_DIM_CAP`.
pub fn dim_cap() -> usize {
    std::env::var("HOMQUIVER_DIM_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_DIM_CAP)
}

#[derive(Clone, Debug)]
pub struct HHQuery {
    pub presentation: AlgebraPresentation,
    pub max_p: usize,
    pub max_q: usize,
}

impl HHQuery {
    pub fn new(presentation: AlgebraPresentation, max_p: usize, max_q: usize) -> Self {
        HHQuery { presentation, max_p, max_q }
    }
}

/// `dim HH_{p,q}(kΓ/𝔪ᴺ)` from the cycle combinatorics of `Γ`.
pub fn hh_closed_form(query: &HHQuery) -> Result<HomologyTable> {
    let p = &query.presentation;
    let PresentationKind::Truncated(n) = p.kind else {
        return Err(Error::InvalidArgument("the closed form needs a truncated presentation".into()));
    };
    let field = p.field.descriptor();
    let quiver = &p.quiver;
    let vertices = quiver.num_vertices();
    let inv = quiver.cycle_invariants(query.max_q.max(1));
    let a = |q: usize| inv.get(&q).map_or(0, |x| x.0);
    let b = |r: usize| inv.get(&r).map_or(0, |x| x.1);
    let mut t = HomologyTable::new(field, Provenance::ClosedForm, query.max_p, query.max_q);
    t.set(0, 0, vertices);
    match n {
        0 => {
            for q in 1..=query.max_q {
                t.set(0, q, a(q));
                t.set(1, q, a(q));
            }
        }
        1 => {}
        n => {
            for q in 1..=query.max_q {
                let (c, e) = q.div_rem(&n);
                if e != 0 {
                    t.set(2 * c, q, a(q));
                    t.set(2 * c + 1, q, a(q));
                    continue;
                }
                let (mut even, mut odd) = (0, 0);
                for r in (1..=q).filter(|r| q % r == 0) {
                    let br = b(r);
                    if br == 0 {
                        continue;
                    }
                    let g = n.gcd(&r);
                    let (ker, coker) = ker_coker_dim_of_mult(field, (n / g) as u64);
                    even += (g - 1 + ker) * br;
                    odd += (g - 1 + coker) * br;
                }
                t.set(2 * c, q, even);
                t.set(2 * c - 1, q, odd);
            }
        }
    }
    Ok(t)
}

/// Finite-dimensional algebra used by the oracles; the full path algebra is
/// replaced by `kΓ/𝔪^{max_q+1}`, which agrees with it in degrees `≤ max_q`.
pub fn oracle_basis(p: &AlgebraPresentation, max_q: usize) -> Result<AlgebraBasis> {
    match p.kind {
        PresentationKind::Truncated(0) => {
            AlgebraBasis::build(&AlgebraPresentation::truncated(p.quiver.clone(), max_q + 1, &p.field))
        }
        _ => AlgebraBasis::build(p),
    }
}

/// `dim HH_{p,q}` from the relative normalized bar complex.
pub fn hh_bar_oracle(query: &HHQuery) -> Result<HomologyTable> {
    hh_bar_oracle_with_cap(query, dim_cap())
}

pub fn hh_bar_oracle_with_cap(query: &HHQuery, cap: usize) -> Result<HomologyTable> {
    let basis = oracle_basis(&query.presentation, query.max_q)?;
    let complex = bar_complex(&basis, query.max_p, query.max_q, cap)?;
    complex.homology_dims(Provenance::BruteForce)
}

/// Enumerates tuples `(c₀; c₁, …, c_p)` of basis elements that close up
/// into a cycle, with total degree `q`.
pub(crate) struct TupleEnumerator<'a> {
    basis: &'a AlgebraBasis,
    /// elements allowed after `c₀`, grouped by source vertex
    by_src: Vec<Vec<usize>>,
    normalized: bool,
}

impl<'a> TupleEnumerator<'a> {
    /// With `normalized`, the factors after `c₀` have positive degree.
    pub fn new(basis: &'a AlgebraBasis, normalized: bool) -> Self {
        let mut by_src = vec![Vec::new(); basis.quiver().num_vertices()];
        for k in 0..basis.dim() {
            if !normalized || basis.degree(k) > 0 {
                by_src[basis.element(k).src()].push(k);
            }
        }
        TupleEnumerator { basis, by_src, normalized }
    }

    /// Tuples of length `len = p + 1` with total degree `q`.
    pub fn tuples(&self, len: usize, q: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let top = self.basis.top_degree();
        for c0 in 0..self.basis.dim() {
            let d0 = self.basis.degree(c0);
            if d0 > q {
                continue;
            }
            let start = self.basis.element(c0).src();
            let mut stack = vec![c0 as u32];
            self.extend(&mut stack, len, q - d0, self.basis.element(c0).tgt(), start, top, &mut out);
        }
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        stack: &mut Vec<u32>,
        len: usize,
        remaining: usize,
        at: usize,
        close: usize,
        top: usize,
        out: &mut Vec<Vec<u32>>,
    ) {
        let left = len - stack.len();
        if left == 0 {
            if remaining == 0 && at == close {
                out.push(stack.clone());
            }
            return;
        }
        if (self.normalized && remaining < left) || remaining > left * top {
            return;
        }
        for &k in &self.by_src[at] {
            let d = self.basis.degree(k);
            if d > remaining {
                continue;
            }
            stack.push(k as u32);
            self.extend(stack, len, remaining - d, self.basis.element(k).tgt(), close, top, out);
            stack.pop();
        }
    }
}

pub(crate) fn index_of(tuples: &[Vec<u32>]) -> HashMap<&[u32], usize> {
    tuples.iter().enumerate().map(|(k, t)| (t.as_slice(), k)).collect()
}

pub(crate) fn check_cap(dim: usize, cap: usize) -> Result<()> {
    if dim > cap {
        Err(Error::DimensionCapExceeded { dim, cap })
    } else {
        Ok(())
    }
}

/// Faces `d_i` of the cyclic bar construction on a tuple, with `d_p` wrapping around.
/// Calls `emit(face index, resulting tuple, coefficient)`.
pub(crate) fn faces<F>(basis: &AlgebraBasis, t: &[u32], mut emit: F)
where
    F: FnMut(usize, Vec<u32>, &Scalar),
{
    let p = t.len() - 1;
    for i in 0..p {
        for (k, c) in basis.mul(t[i] as usize, t[i + 1] as usize) {
            let mut s = Vec::with_capacity(p);
            s.extend_from_slice(&t[..i]);
            s.push(*k as u32);
            s.extend_from_slice(&t[i + 2..]);
            emit(i, s, c);
        }
    }
    if p >= 1 {
        for (k, c) in basis.mul(t[p] as usize, t[0] as usize) {
            let mut s = Vec::with_capacity(p);
            s.push(*k as u32);
            s.extend_from_slice(&t[1..p]);
            emit(p, s, c);
        }
    }
}

/// Relative normalized Hochschild complex, groups `C_0 … C_{max_p+1}` in each degree `q ≤ max_q`.
pub fn bar_complex(basis: &AlgebraBasis, max_p: usize, max_q: usize, cap: usize) -> Result<GradedChainComplex> {
    let field = basis.field().clone();
    let en = TupleEnumerator::new(basis, true);
    let pieces: Vec<Result<(usize, ChainPiece)>> = (0..=max_q)
        .into_par_iter()
        .map(|q| {
            let groups: Vec<Vec<Vec<u32>>> = (0..=max_p + 1).map(|p| en.tuples(p + 1, q)).collect();
            for g in &groups {
                check_cap(g.len(), cap)?;
            }
            let dims: Vec<usize> = groups.iter().map(Vec::len).collect();
            let mut diffs = Vec::with_capacity(max_p + 1);
            for p in 1..=max_p + 1 {
                let target = index_of(&groups[p - 1]);
                let mut trip = Vec::new();
                for (col, t) in groups[p].iter().enumerate() {
                    faces(basis, t, |i, s, c| {
                        let row = target[s.as_slice()];
                        trip.push((row, col, if i % 2 == 0 { c.clone() } else { -c }));
                    });
                }
                diffs.push(SparseMatrix::from_triplets(&field, dims[p - 1], dims[p], trip));
            }
            Ok((q, ChainPiece::new(&field, dims, diffs)?))
        })
        .collect();
    let mut complex = GradedChainComplex::new(&field, max_p, max_q);
    for r in pieces {
        let (q, piece) = r?;
        complex.insert(q, piece);
    }
    Ok(complex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;
    use crate::scalar::{Field, FieldDescriptor};

    fn query(q: Quiver, n: usize, f: &Field, max_p: usize, max_q: usize) -> HHQuery {
        HHQuery::new(AlgebraPresentation::truncated(q, n, f), max_p, max_q)
    }

    #[test]
    fn taft_closed_form() {
        for n in 2..=6 {
            let t = hh_closed_form(&query(Quiver::crown(n).unwrap(), n, &Field::rationals(), 8, 4 * n)).unwrap();
            for (p, q, d) in t.entries() {
                let expected = if (p, q) == (0, 0) {
                    n
                } else if q > 0 && q % n == 0 && (p == 2 * (q / n) || p + 1 == 2 * (q / n)) {
                    n - 1
                } else {
                    0
                };
                assert_eq!(d, expected, "n={n} p={p} q={q}");
            }
        }
    }

    #[test]
    fn taft_two_oracle_degree_two() {
        let t = hh_bar_oracle(&query(Quiver::crown(2).unwrap(), 2, &Field::rationals(), 4, 4)).unwrap();
        assert_eq!(t.get(1, 2), 1);
        assert_eq!(t.get(2, 2), 1);
        assert_eq!((0..=4).map(|p| t.get(p, 2)).sum::<usize>(), 2);
        let c = hh_closed_form(&query(Quiver::crown(2).unwrap(), 2, &Field::rationals(), 4, 4)).unwrap();
        assert!(t.diff(&c).is_empty(), "{:?}", t.diff(&c));
    }

    #[test]
    fn truncation_one() {
        let q = Quiver::loops(2);
        let t = hh_closed_form(&query(q.clone(), 1, &Field::rationals(), 3, 3)).unwrap();
        assert_eq!(t.nonzero(), vec![(0, 0, 1)]);
        assert!(t.diff(&hh_bar_oracle(&query(q, 1, &Field::rationals(), 3, 3)).unwrap()).is_empty());
    }

    #[test]
    fn path_algebra_of_triangle() {
        let q = Quiver::crown(3).unwrap();
        let f = Field::rationals();
        let closed = hh_closed_form(&query(q.clone(), 0, &f, 2, 6)).unwrap();
        let oracle = hh_bar_oracle(&query(q, 0, &f, 2, 6)).unwrap();
        assert!(closed.diff(&oracle).is_empty(), "{:?}", closed.diff(&oracle));
        assert_eq!(oracle.get(0, 0), 3);
        for q in 1..=6 {
            let e = usize::from(q % 3 == 0);
            assert_eq!((oracle.get(0, q), oracle.get(1, q), oracle.get(2, q)), (e, e, 0));
        }
    }

    #[test]
    fn zeroth_row_is_commutator_quotient() {
        let f = Field::rationals();
        for (quiver, n) in [(Quiver::crown(2).unwrap(), 2), (Quiver::crown(3).unwrap(), 2), (Quiver::loops(2), 3)] {
            let p = AlgebraPresentation::truncated(quiver, n, &f);
            let b = AlgebraBasis::build(&p).unwrap();
            let t = hh_bar_oracle(&HHQuery::new(p, 0, 3 * n)).unwrap();
            assert_eq!(t.total(0), b.commutator_quotient_dim());
        }
    }

    #[test]
    fn dual_numbers_char_two() {
        let f2 = Field::new(FieldDescriptor::PrimeField(2)).unwrap();
        let qr = query(Quiver::loops(1), 2, &f2, 4, 6);
        let closed = hh_closed_form(&qr).unwrap();
        let oracle = hh_bar_oracle(&qr).unwrap();
        assert!(closed.diff(&oracle).is_empty(), "{:?}", closed.diff(&oracle));
        // Ker/Coker of ·2 are nonzero in characteristic 2
        assert_eq!(closed.get(2, 2), 1);
        assert_eq!(closed.get(1, 2), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let qr = query(Quiver::loops(2), 2, &Field::rationals(), 4, 6);
        assert!(matches!(hh_bar_oracle_with_cap(&qr, 10), Err(Error::DimensionCapExceeded { .. })));
    }
}
