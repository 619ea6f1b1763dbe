//! Cyclic homology of graded quiver algebras in characteristic zero.
//!
//! For a graded algebra over a field containing ℚ, Connes' sequence splits
//! into `0 → H̄C̄_{m−1} → H̄H̄_m → H̄C̄_m → 0` in each internal degree, where
//! bars denote quotients by the degree-zero part `kΓ₀`. The closed form
//! runs this recursion on the Hochschild closed form. The oracle is the total
//! complex of Tsygan's bicomplex, relative to `kΓ₀`: even columns carry `b`,
//! odd columns `−b′`, and the horizontal maps alternate `1 − t` and the norm.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hochschild::{check_cap, dim_cap, faces, hh_closed_form, index_of, oracle_basis, HHQuery, TupleEnumerator};
use crate::linalg::{ChainPiece, GradedChainComplex, HomologyTable, Provenance, SparseMatrix};
use crate::quiver::{AlgebraBasis, AlgebraPresentation, PresentationKind};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug)]
pub struct HCQuery {
    pub presentation: AlgebraPresentation,
    pub max_deg: usize,
    pub max_q: usize,
}

impl HCQuery {
    /// Query with an internal-degree bound large enough to see all of `HC_{≤ max_deg}`:
    /// `(max_deg + 2)` times the top degree. For `N = 0`, where `HC₀` is unbounded
    /// in `q`, the bound is `(max_deg + 2)·#arrows`.
    pub fn new(presentation: AlgebraPresentation, max_deg: usize) -> Self {
        let max_q = match presentation.kind {
            PresentationKind::Truncated(0) => (max_deg + 2) * presentation.quiver.num_arrows().max(1),
            PresentationKind::Truncated(n) => (max_deg + 2) * n.max(1),
            PresentationKind::Bound(_) => {
                (max_deg + 2) * AlgebraBasis::build(&presentation).map_or(0, |b| b.top_degree())
            }
        };
        HCQuery { presentation, max_deg, max_q }
    }

    pub fn with_max_q(mut self, max_q: usize) -> Self {
        self.max_q = max_q;
        self
    }
}

fn require_char_zero(p: &AlgebraPresentation) -> Result<()> {
    let d = p.field.descriptor();
    if d.contains_rationals() {
        Ok(())
    } else {
        Err(Error::UnsupportedField(d, "cyclic homology needs a field containing ℚ".into()))
    }
}

/// Graded cyclic homology from the Hochschild table: `dim HC_{m,q}` for `m ≤ max_deg`.
pub fn hc_from_hh(hh: &HomologyTable, vertices: usize) -> Result<HomologyTable> {
    let mut hc = HomologyTable::new(hh.field, hh.provenance, hh.max_p, hh.max_q);
    for q in 0..=hh.max_q {
        let mut prev = 0usize;
        for m in 0..=hh.max_p {
            let reduced_hh = hh.get(m, q) - if (m, q) == (0, 0) { vertices } else { 0 };
            let reduced_hc = reduced_hh.checked_sub(prev).ok_or_else(|| {
                Error::InvalidArgument(format!("negative reduced cyclic homology at m={m}, q={q}"))
            })?;
            prev = reduced_hc;
            let base = if q == 0 && m % 2 == 0 { vertices } else { 0 };
            hc.set(m, q, reduced_hc + base);
        }
    }
    Ok(hc)
}

/// `dim HC_{m,q}(kΓ/𝔪ᴺ)` via the split Connes sequence.
pub fn hc_closed_form(query: &HCQuery) -> Result<HomologyTable> {
    require_char_zero(&query.presentation)?;
    let hh = hh_closed_form(&HHQuery::new(query.presentation.clone(), query.max_deg, query.max_q))?;
    hc_from_hh(&hh, query.presentation.quiver.num_vertices())
}

/// The proposition's displayed totals for `N ≥ 2`, evaluated literally:
/// `HC_{2c} = #Γ₀ + Σ_{e=1}^{N−1} a_{cN+e} − Σ_{r | (c+1)N, r ∤ N} (r∧N − 1) b_r` and
/// `HC_{2c+1} = Σ_{r | N} (r − 1) b_r`.
pub fn hc_displayed_totals(presentation: &AlgebraPresentation, max_deg: usize) -> Result<Vec<i64>> {
    let Some(n) = presentation.truncation().filter(|&n| n >= 2) else {
        return Err(Error::InvalidArgument("the displayed totals cover truncations N ≥ 2".into()));
    };
    let quiver = &presentation.quiver;
    let inv = quiver.cycle_invariants((max_deg / 2 + 2) * n);
    let a = |q: usize| inv.get(&q).map_or(0, |x| x.0) as i64;
    let b = |r: usize| inv.get(&r).map_or(0, |x| x.1) as i64;
    let gcd = |x: usize, y: usize| num_integer::gcd(x, y) as i64;
    Ok((0..=max_deg)
        .map(|m| {
            let c = m / 2;
            if m % 2 == 0 {
                let mut v = quiver.num_vertices() as i64;
                v += (1..n).map(|e| a(c * n + e)).sum::<i64>();
                v -= (1..=(c + 1) * n)
                    .filter(|r| (c + 1) * n % r == 0 && n % r != 0)
                    .map(|r| (gcd(r, n) - 1) * b(r))
                    .sum::<i64>();
                v
            } else {
                (1..=n).filter(|r| n % r == 0).map(|r| (r as i64 - 1) * b(r)).sum()
            }
        })
        .collect())
}

/// Checks `dim H̄H̄_{m,q} = dim H̄C̄_{m,q} + dim H̄C̄_{m−1,q}` on every entry.
pub fn sbi_consistent(hh: &HomologyTable, hc: &HomologyTable, vertices: usize) -> bool {
    let reduce = |t: &HomologyTable, m: usize, q: usize, base: usize| t.get(m, q) as i64 - base as i64;
    let mp = hh.max_p.min(hc.max_p);
    let mq = hh.max_q.min(hc.max_q);
    (0..=mq).all(|q| {
        (0..=mp).all(|m| {
            let hh_base = if (m, q) == (0, 0) { vertices } else { 0 };
            let hc_base = |k: usize| if q == 0 && k % 2 == 0 { vertices } else { 0 };
            let lhs = reduce(hh, m, q, hh_base);
            let cur = reduce(hc, m, q, hc_base(m));
            let prev = if m == 0 { 0 } else { reduce(hc, m - 1, q, hc_base(m - 1)) };
            lhs >= 0 && cur >= 0 && lhs == cur + prev
        })
    })
}

/// The maps of the cyclic module in one internal degree.
pub(crate) struct CyclicModule {
    field: Field,
    /// `groups[j]` = basis of `A^{⊗ j+1}` (cyclically composable tuples)
    pub groups: Vec<Vec<Vec<u32>>>,
    pub b: Vec<SparseMatrix>,
    pub b_prime: Vec<SparseMatrix>,
    pub t: Vec<SparseMatrix>,
    pub norm: Vec<SparseMatrix>,
}

impl CyclicModule {
    /// Groups `A^{⊗ j+1}` for `j ≤ top` in internal degree `q`; `b[j]`, `b_prime[j]` map `j → j−1`
    /// (index 0 holds an empty placeholder).
    pub fn build(basis: &AlgebraBasis, q: usize, top: usize, cap: usize) -> Result<Self> {
        let field = basis.field().clone();
        let en = TupleEnumerator::new(basis, false);
        let groups: Vec<Vec<Vec<u32>>> = (0..=top).map(|j| en.tuples(j + 1, q)).collect();
        for g in &groups {
            check_cap(g.len(), cap)?;
        }
        let mut b = vec![SparseMatrix::zeros(&field, 0, groups[0].len())];
        let mut b_prime = b.clone();
        for j in 1..=top {
            let target = index_of(&groups[j - 1]);
            let (mut tb, mut tbp) = (Vec::new(), Vec::new());
            for (col, tuple) in groups[j].iter().enumerate() {
                faces(basis, tuple, |i, s, c| {
                    let row = target[s.as_slice()];
                    let v = if i % 2 == 0 { c.clone() } else { -c };
                    if i < j {
                        tbp.push((row, col, v.clone()));
                    }
                    tb.push((row, col, v));
                });
            }
            let (r, c) = (groups[j - 1].len(), groups[j].len());
            b.push(SparseMatrix::from_triplets(&field, r, c, tb));
            b_prime.push(SparseMatrix::from_triplets(&field, r, c, tbp));
        }
        let mut t = Vec::new();
        let mut norm = Vec::new();
        for (j, g) in groups.iter().enumerate() {
            let idx = index_of(g);
            let sign = if j % 2 == 0 { field.one() } else { field.from_i64(-1) };
            let (mut tt, mut tn) = (Vec::new(), Vec::new());
            for (col, tuple) in g.iter().enumerate() {
                // t(a₀, …, a_j) = ±(a_j, a₀, …, a_{j−1})
                let mut cur = tuple.clone();
                let mut coeff = field.one();
                tn.push((col, col, field.one()));
                for k in 1..=j {
                    cur.rotate_right(1);
                    coeff = &coeff * &sign;
                    let row = idx[cur.as_slice()];
                    if k == 1 {
                        tt.push((row, col, coeff.clone()));
                    }
                    tn.push((row, col, coeff.clone()));
                }
                if j == 0 {
                    tt.push((col, col, field.one()));
                }
            }
            t.push(SparseMatrix::from_triplets(&field, g.len(), g.len(), tt));
            norm.push(SparseMatrix::from_triplets(&field, g.len(), g.len(), tn));
        }
        Ok(CyclicModule { field, groups, b, b_prime, t, norm })
    }

    pub fn dim(&self, j: usize) -> usize {
        self.groups[j].len()
    }

    /// Offsets of the blocks `(column i, row j)` with `i + j = m` inside `Tot_m`, by column.
    pub fn tot_offsets(&self, m: usize) -> Vec<usize> {
        let mut offs = Vec::with_capacity(m + 2);
        let mut acc = 0;
        for i in 0..=m {
            offs.push(acc);
            acc += self.dim(m - i);
        }
        offs.push(acc);
        offs
    }

    pub fn tot_dim(&self, m: usize) -> usize {
        *self.tot_offsets(m).last().unwrap()
    }

    /// Total differential `Tot_m → Tot_{m−1}`.
    pub fn total_differential(&self, m: usize) -> SparseMatrix {
        let src = self.tot_offsets(m);
        let dst = self.tot_offsets(m - 1);
        let mut trip: Vec<(usize, usize, Scalar)> = Vec::new();
        let one = self.field.one();
        for i in 0..=m {
            let j = m - i;
            if j >= 1 {
                let (mat, neg) = if i % 2 == 0 { (&self.b[j], false) } else { (&self.b_prime[j], true) };
                for (r, c, v) in mat.entries() {
                    trip.push((dst[i] + r, src[i] + c, if neg { -v } else { v.clone() }));
                }
            }
            if i >= 1 {
                if i % 2 == 1 {
                    // 1 − t
                    for c in 0..self.dim(j) {
                        trip.push((dst[i - 1] + c, src[i] + c, one.clone()));
                    }
                    for (r, c, v) in self.t[j].entries() {
                        trip.push((dst[i - 1] + r, src[i] + c, -v));
                    }
                } else {
                    for (r, c, v) in self.norm[j].entries() {
                        trip.push((dst[i - 1] + r, src[i] + c, v.clone()));
                    }
                }
            }
        }
        SparseMatrix::from_triplets(&self.field, self.tot_dim(m - 1), self.tot_dim(m), trip)
    }

    /// The bicomplex identities `b² = b′² = 0`, `(1−t)N = N(1−t) = 0`, `b(1−t) = (1−t)b′`, `b′N = Nb`.
    pub fn identities_hold(&self) -> bool {
        let top = self.groups.len() - 1;
        let id = |j: usize| SparseMatrix::identity(&self.field, self.dim(j));
        let minus = |a: &SparseMatrix, b: &SparseMatrix| a.add(&b.scale(&self.field.from_i64(-1)));
        for j in 0..=top {
            let one_minus_t = minus(&id(j), &self.t[j]);
            if !one_minus_t.mul(&self.norm[j]).is_zero() || !self.norm[j].mul(&one_minus_t).is_zero() {
                return false;
            }
            if j >= 1 {
                let lower = minus(&id(j - 1), &self.t[j - 1]);
                if self.b[j].mul(&one_minus_t) != lower.mul(&self.b_prime[j]) {
                    return false;
                }
                if self.b_prime[j].mul(&self.norm[j]) != self.norm[j - 1].mul(&self.b[j]) {
                    return false;
                }
            }
            if j >= 2
                && (!self.b[j - 1].mul(&self.b[j]).is_zero() || !self.b_prime[j - 1].mul(&self.b_prime[j]).is_zero())
            {
                return false;
            }
        }
        true
    }
}

/// Checks the bicomplex identities on the cyclic module of `basis` in internal degree `q`,
/// for tensor powers up to `top + 1`.
pub fn bicomplex_identities_hold(basis: &AlgebraBasis, q: usize, top: usize) -> Result<bool> {
    Ok(CyclicModule::build(basis, q, top, dim_cap())?.identities_hold())
}

/// Total complex of the cyclic bicomplex, `Tot_0 … Tot_{max_deg+1}` per internal degree.
pub fn cyclic_total_complex(basis: &AlgebraBasis, max_deg: usize, max_q: usize, cap: usize) -> Result<GradedChainComplex> {
    let field = basis.field().clone();
    let top = max_deg + 1;
    let pieces: Vec<Result<(usize, ChainPiece)>> = (0..=max_q)
        .into_par_iter()
        .map(|q| {
            let cm = CyclicModule::build(basis, q, top, cap)?;
            let dims: Vec<usize> = (0..=top).map(|m| cm.tot_dim(m)).collect();
            for &d in &dims {
                check_cap(d, cap)?;
            }
            let diffs = (1..=top).map(|m| cm.total_differential(m)).collect();
            Ok((q, ChainPiece::new(&field, dims, diffs)?))
        })
        .collect();
    let mut complex = GradedChainComplex::new(&field, max_deg, max_q);
    for r in pieces {
        let (q, piece) = r?;
        complex.insert(q, piece);
    }
    Ok(complex)
}

/// `dim HC_{m,q}` from the total complex of the cyclic bicomplex.
pub fn hc_bicomplex_oracle(query: &HCQuery) -> Result<HomologyTable> {
    hc_bicomplex_oracle_with_cap(query, dim_cap())
}

pub fn hc_bicomplex_oracle_with_cap(query: &HCQuery, cap: usize) -> Result<HomologyTable> {
    require_char_zero(&query.presentation)?;
    let basis = oracle_basis(&query.presentation, query.max_q)?;
    let complex = cyclic_total_complex(&basis, query.max_deg, query.max_q, cap)?;
    complex.homology_dims(Provenance::BruteForce)
}

/// The chain `σᵖ(e) = (y_p e^{⊗2p+1}, z_p e^{⊗2p}, …, z_1 e^{⊗2}, y_0 e)` in `Tot_{2p}`,
/// with `coeffs = (y_p, z_p, …, y_0)`, as a dense vector in the degree-0 piece.
fn sigma_vector(cm: &CyclicModule, vertex_idx: usize, p: usize, coeffs: &[i64]) -> Result<Vec<Scalar>> {
    if coeffs.len() != 2 * p + 1 {
        return Err(Error::InvalidArgument(format!("σ^{p} has {} coefficients", 2 * p + 1)));
    }
    let m = 2 * p;
    let offs = cm.tot_offsets(m);
    let mut v = vec![cm.field.zero(); cm.tot_dim(m)];
    // column i holds e^{⊗ m−i+1} with coefficient coeffs[i]
    for (i, &c) in coeffs.iter().enumerate() {
        let j = m - i;
        let tuple = vec![vertex_idx as u32; j + 1];
        let pos = cm.groups[j]
            .iter()
            .position(|t| *t == tuple)
            .ok_or_else(|| Error::InvalidArgument("idempotent tuple missing".into()))?;
        v[offs[i] + pos] = cm.field.from_i64(c);
    }
    Ok(v)
}

/// Whether `σᵖ` built on the idempotent at `vertex` is a cycle of the total complex.
pub fn verify_sigma_cycle(basis: &AlgebraBasis, vertex: usize, p: usize, coeffs: &[i64]) -> Result<bool> {
    let cm = CyclicModule::build(basis, 0, 2 * p, dim_cap())?;
    let e = basis.idempotent(vertex);
    let v = sigma_vector(&cm, e, p, coeffs)?;
    if p == 0 {
        return Ok(true);
    }
    Ok(cm.total_differential(2 * p).apply(&v).iter().all(Scalar::is_zero))
}

/// Dimension of the span of the classes of `σᵖ(e_v)` over the given vertices in `HC_{2p}`.
pub fn sigma_class_rank(basis: &AlgebraBasis, vertices: &[usize], p: usize, coeffs: &[i64]) -> Result<usize> {
    let cm = CyclicModule::build(basis, 0, 2 * p + 1, dim_cap())?;
    let boundaries = cm.total_differential(2 * p + 1);
    let field = basis.field();
    let vecs: Vec<Vec<Scalar>> =
        vertices.iter().map(|&v| sigma_vector(&cm, basis.idempotent(v), p, coeffs)).collect::<Result<_>>()?;
    let extra = SparseMatrix::from_triplets(
        field,
        cm.tot_dim(2 * p),
        vecs.len(),
        vecs.iter().enumerate().flat_map(|(c, v)| v.iter().enumerate().map(move |(r, x)| (r, c, x.clone()))),
    );
    Ok(boundaries.hstack(&extra).rank() - boundaries.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;
    use crate::scalar::FieldDescriptor;

    fn taft(n: usize) -> AlgebraPresentation {
        AlgebraPresentation::truncated(Quiver::crown(n).unwrap(), n, &Field::rationals())
    }

    #[test]
    fn taft_closed_form_totals() {
        for n in 2..=6 {
            let t = hc_closed_form(&HCQuery::new(taft(n), 9)).unwrap();
            for c in 0..=4 {
                assert_eq!(t.total(2 * c), n, "n={n}");
                if 2 * c + 1 <= 9 {
                    assert_eq!(t.total(2 * c + 1), n - 1, "n={n}");
                }
            }
            assert_eq!(hc_displayed_totals(&taft(n), 9).unwrap(), (0..=9).map(|m| if m % 2 == 0 { n as i64 } else { n as i64 - 1 }).collect::<Vec<_>>());
        }
    }

    #[test]
    fn taft_two_oracle() {
        let q = HCQuery::new(taft(2), 2);
        let o = hc_bicomplex_oracle(&q).unwrap();
        assert_eq!((o.total(0), o.total(1), o.total(2)), (2, 1, 2));
        assert!(o.diff(&hc_closed_form(&q).unwrap()).is_empty());
    }

    #[test]
    fn semisimple_quotient() {
        let p = AlgebraPresentation::truncated(Quiver::crown(2).unwrap(), 1, &Field::rationals());
        let q = HCQuery::new(p, 2);
        let o = hc_bicomplex_oracle(&q).unwrap();
        assert_eq!((o.total(0), o.total(1), o.total(2)), (2, 0, 2));
        assert!(o.diff(&hc_closed_form(&q).unwrap()).is_empty());
    }

    #[test]
    fn rejects_positive_characteristic() {
        let f = Field::new(FieldDescriptor::PrimeField(3)).unwrap();
        let p = AlgebraPresentation::truncated(Quiver::crown(2).unwrap(), 2, &f);
        assert!(matches!(hc_closed_form(&HCQuery::new(p.clone(), 2)), Err(Error::UnsupportedField(..))));
        assert!(matches!(hc_bicomplex_oracle(&HCQuery::new(p, 2)), Err(Error::UnsupportedField(..))));
    }

    #[test]
    fn sigma_cycles_on_taft_two() {
        let b = AlgebraBasis::build(&taft(2)).unwrap();
        assert!(verify_sigma_cycle(&b, 0, 0, &[1]).unwrap());
        assert!(verify_sigma_cycle(&b, 0, 1, &[-2, 1, 1]).unwrap());
        assert!(!verify_sigma_cycle(&b, 0, 1, &[-2, 1, 2]).unwrap());
        assert_eq!(sigma_class_rank(&b, &[0, 1], 1, &[-2, 1, 1]).unwrap(), 2);
    }

    #[test]
    fn bicomplex_identities() {
        let b = AlgebraBasis::build(&taft(3)).unwrap();
        for q in 0..=4 {
            assert!(CyclicModule::build(&b, q, 3, 10_000).unwrap().identities_hold());
        }
    }

    #[test]
    fn path_algebra_closed_form() {
        let p = AlgebraPresentation::truncated(Quiver::crown(2).unwrap(), 0, &Field::rationals());
        let q = HCQuery::new(p, 3).with_max_q(6);
        let c = hc_closed_form(&q).unwrap();
        assert_eq!(c.total(0), 2 + 3);
        assert_eq!((c.total(1), c.total(2), c.total(3)), (0, 2, 0));
        let o = hc_bicomplex_oracle(&q).unwrap();
        assert!(o.diff(&c).is_empty(), "{:?}", o.diff(&c));
    }
}
