//! Finite-dimensional `Λₙ`-modules as representations of the `n`-crown.
//!
//! Every such module is a direct sum of uniserial modules `N_{i,u}` with top at
//! `i` and socle at `u`. The decomposition is read off from the ranks
//! `r_j(t)` of the length-`t` composites starting at `j`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::scalar::{Field, FieldDescriptor, Scalar};

/// The uniserial module starting at `i` and ending at `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndecLabel {
    pub i: usize,
    pub u: usize,
}

impl IndecLabel {
    pub fn new(i: usize, u: usize) -> Self {
        IndecLabel { i, u }
    }

    /// Label with top at `i` and the given length `1 ≤ l ≤ n`.
    pub fn from_start_len(n: usize, i: usize, l: usize) -> Self {
        IndecLabel { i: i % n, u: (i + l - 1) % n }
    }

    pub fn len(&self, n: usize) -> usize {
        (self.u + n - self.i) % n + 1
    }

    pub fn is_projective(&self, n: usize) -> bool {
        self.len(n) == n
    }

    pub fn all(n: usize) -> Vec<IndecLabel> {
        (0..n).flat_map(|i| (0..n).map(move |u| IndecLabel { i, u })).collect()
    }
}

impl fmt::Display for IndecLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N[{},{}]", self.i, self.u)
    }
}

impl FromStr for IndecLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix("N[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected N[i,u], got {s:?}")))?;
        let (a, b) = inner.split_once(',').ok_or_else(|| Error::Parse(format!("expected N[i,u], got {s:?}")))?;
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad index in {s:?}")));
        Ok(IndecLabel { i: parse(a)?, u: parse(b)? })
    }
}

impl Serialize for IndecLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IndecLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Multiset of labels with multiplicities.
pub type Multiset = BTreeMap<IndecLabel, usize>;

/// Multiset as a sorted JSON array `[{"label": "N[i,u]", "mult": m}, ...]`.
pub fn multiset_to_json(m: &Multiset) -> serde_json::Value {
    serde_json::Value::Array(
        m.iter().map(|(l, c)| serde_json::json!({ "label": l.to_string(), "mult": c })).collect(),
    )
}

/// A representation: spaces `V_i` and maps `a_i : V_i → V_{i+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct TaftModule {
    n: usize,
    field: Field,
    dims: Vec<usize>,
    maps: Vec<SparseMatrix>,
}

impl TaftModule {
    /// Checks shapes and that every composite of `n` consecutive maps vanishes.
    pub fn new(n: usize, field: &Field, dims: Vec<usize>, maps: Vec<SparseMatrix>) -> Result<Self> {
        if n == 0 || dims.len() != n || maps.len() != n {
            return Err(Error::InvalidArgument("module needs n spaces and n maps".into()));
        }
        for (i, m) in maps.iter().enumerate() {
            if m.cols() != dims[i] || m.rows() != dims[(i + 1) % n] {
                return Err(Error::InvalidArgument(format!("map a{i} has the wrong shape")));
            }
        }
        let module = TaftModule { n, field: field.clone(), dims, maps };
        for j in 0..n {
            if !module.composite(j, n).is_zero() {
                return Err(Error::InvalidArgument(format!("paths of length {n} from {j} act nontrivially")));
            }
        }
        Ok(module)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn map(&self, i: usize) -> &SparseMatrix {
        &self.maps[i % self.n]
    }

    /// Action of the path of length `t` from `j`: `V_j → V_{j+t}`.
    pub fn composite(&self, j: usize, t: usize) -> SparseMatrix {
        let mut acc = SparseMatrix::identity(&self.field, self.dims[j % self.n]);
        for s in 0..t {
            acc = self.maps[(j + s) % self.n].mul(&acc);
        }
        acc
    }

    pub fn direct_sum(parts: &[TaftModule]) -> Result<TaftModule> {
        let first = parts.first().ok_or_else(|| Error::InvalidArgument("empty direct sum".into()))?;
        let n = first.n;
        let field = first.field.clone();
        let mut dims = vec![0; n];
        let mut offs: Vec<Vec<usize>> = Vec::new();
        for p in parts {
            if p.n != n || p.field != field {
                return Err(Error::InvalidArgument("summands over different algebras".into()));
            }
            offs.push(dims.clone());
            for v in 0..n {
                dims[v] += p.dims[v];
            }
        }
        let maps = (0..n)
            .map(|i| {
                SparseMatrix::from_triplets(
                    &field,
                    dims[(i + 1) % n],
                    dims[i],
                    parts.iter().zip(&offs).flat_map(|(p, o)| {
                        p.maps[i].entries().map(move |(r, c, v)| (r + o[(i + 1) % n], c + o[i], v.clone()))
                    }),
                )
            })
            .collect();
        TaftModule::new(n, &field, dims, maps)
    }

    /// Change of basis `V_i ↦ P_i V_i`, so that `a_i ↦ P_{i+1} a_i P_i⁻¹`.
    pub fn conjugate(&self, change: &[SparseMatrix]) -> Result<TaftModule> {
        let n = self.n;
        let inv: Vec<SparseMatrix> = change
            .iter()
            .map(|p| p.inverse().ok_or_else(|| Error::InvalidArgument("singular change of basis".into())))
            .collect::<Result<_>>()?;
        let maps = (0..n).map(|i| change[(i + 1) % n].mul(&self.maps[i]).mul(&inv[i])).collect();
        TaftModule::new(n, &self.field, self.dims.clone(), maps)
    }
}

/// The uniserial module `N_{i,u}`: one-dimensional at `i, i+1, …, u`, identity maps along the segment.
pub fn indec_module(n: usize, label: IndecLabel, field: &Field) -> Result<TaftModule> {
    if label.i >= n || label.u >= n {
        return Err(Error::InvalidArgument(format!("{label} is not a label for n = {n}")));
    }
    let l = label.len(n);
    let mut dims = vec![0; n];
    for k in 0..l {
        dims[(label.i + k) % n] = 1;
    }
    let maps = (0..n)
        .map(|v| {
            let along = (v + n - label.i) % n < l - 1;
            let m = SparseMatrix::zeros(field, dims[(v + 1) % n], dims[v]);
            if along {
                SparseMatrix::identity(field, 1)
            } else {
                m
            }
        })
        .collect();
    TaftModule::new(n, field, dims, maps)
}

/// Basis of `Hom(M, L)`; each morphism is a list of per-vertex matrices `L_v × M_v`.
pub fn hom_basis(m: &TaftModule, l: &TaftModule) -> Result<Vec<Vec<SparseMatrix>>> {
    if m.n != l.n || m.field != l.field {
        return Err(Error::InvalidArgument("modules over different algebras".into()));
    }
    let n = m.n;
    let field = &m.field;
    // unknown f_v[r][c] at offset[v] + r·dim M_v + c
    let mut offset = vec![0; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + l.dims[v] * m.dims[v];
    }
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dims[v] + c;
    let mut trip: Vec<(usize, usize, Scalar)> = Vec::new();
    let mut row = 0;
    for i in 0..n {
        let w = (i + 1) % n;
        // L.a_i f_i − f_w M.a_i = 0, entrywise on L_w × M_i
        let la = l.maps[i].to_dense();
        let ma = m.maps[i].to_dense();
        for r in 0..l.dims[w] {
            for c in 0..m.dims[i] {
                for (k, lv) in la[r].iter().enumerate() {
                    if !lv.is_zero() {
                        trip.push((row, var(i, k, c), lv.clone()));
                    }
                }
                for (k, mrow) in ma.iter().enumerate() {
                    if !mrow[c].is_zero() {
                        trip.push((row, var(w, r, k), -&mrow[c]));
                    }
                }
                row += 1;
            }
        }
    }
    let system = SparseMatrix::from_triplets(field, row, offset[n], trip);
    Ok(system
        .kernel()
        .into_iter()
        .map(|v| {
            (0..n)
                .map(|u| {
                    SparseMatrix::from_triplets(
                        field,
                        l.dims[u],
                        m.dims[u],
                        (0..l.dims[u])
                            .flat_map(|r| (0..m.dims[u]).map(move |c| (r, c)))
                            .map(|(r, c)| (r, c, v[var(u, r, c)].clone())),
                    )
                })
                .collect()
        })
        .collect())
}

/// `dim Hom(M, L)`.
pub fn hom_dim(m: &TaftModule, l: &TaftModule) -> Result<usize> {
    Ok(hom_basis(m, l)?.len())
}

/// `M ⊗ L` with `Λₙ` acting through the coproduct: on `M_j ⊗ L_k`,
/// `a_{j+k}` sends `m ⊗ l` to `m ⊗ a_k l + ζᵏ a_j m ⊗ l`.
pub fn tensor_module(m: &TaftModule, l: &TaftModule) -> Result<TaftModule> {
    if m.n != l.n || m.field != l.field {
        return Err(Error::InvalidArgument("modules over different algebras".into()));
    }
    let n = m.n;
    let field = &m.field;
    let zeta = match (field.descriptor(), n) {
        (_, 1) => field.one(),
        (FieldDescriptor::Cyclotomic(k), _) if k as usize == n => field.zeta()?,
        (FieldDescriptor::Rationals, 2) => field.from_i64(-1),
        (d, _) => return Err(Error::UnsupportedField(d, format!("tensor products need a primitive {n}-th root of unity"))),
    };
    // block offsets of M_j ⊗ L_k inside (M⊗L)_{j+k}
    let mut offs = vec![vec![0; n]; n];
    let mut dims = vec![0; n];
    for v in 0..n {
        for j in 0..n {
            let k = (v + n - j) % n;
            offs[j][k] = dims[v];
            dims[v] += m.dims[j] * l.dims[k];
        }
    }
    let mut maps = Vec::with_capacity(n);
    for v in 0..n {
        let w = (v + 1) % n;
        let mut trip = Vec::new();
        for j in 0..n {
            let k = (v + n - j) % n;
            let (dl, dl_next) = (l.dims[k], l.dims[(k + 1) % n]);
            let zk = zeta.pow(k as u64);
            // m ⊗ a_k l ∈ M_j ⊗ L_{k+1}
            for (r, c, x) in l.maps[k].entries() {
                for a in 0..m.dims[j] {
                    trip.push((offs[j][(k + 1) % n] + a * dl_next + r, offs[j][k] + a * dl + c, x.clone()));
                }
            }
            // ζᵏ a_j m ⊗ l ∈ M_{j+1} ⊗ L_k
            for (r, c, x) in m.maps[j].entries() {
                let y = x * &zk;
                for b in 0..dl {
                    trip.push((offs[(j + 1) % n][k] + r * dl + b, offs[j][k] + c * dl + b, y.clone()));
                }
            }
        }
        maps.push(SparseMatrix::from_triplets(field, dims[w], dims[v], trip));
    }
    TaftModule::new(n, field, dims, maps)
}

/// Krull–Schmidt decomposition into uniserials, recovered from composite ranks.
///
/// With `r_j(t)` the rank of the length-`t` composite from `j` and
/// `c_j(t) = r_j(t) − r_{j−1}(t+1)` (the summands with top at `j` and length
/// `> t`), the multiplicity of the length-`l` summand with top `j` is
/// `c_j(l−1) − c_j(l)`.
pub fn decompose_serial(m: &TaftModule) -> Result<Multiset> {
    let n = m.n;
    let ranks: Vec<Vec<i64>> = (0..n)
        .map(|j| {
            let mut acc = SparseMatrix::identity(&m.field, m.dims[j]);
            let mut r = vec![m.dims[j] as i64];
            for t in 0..n {
                acc = m.maps[(j + t) % n].mul(&acc);
                r.push(acc.rank() as i64);
            }
            r
        })
        .collect();
    let r = |j: usize, t: usize| if t > n { 0 } else { ranks[j % n][t] };
    let c = |j: usize, t: usize| r(j, t) - r(j + n - 1, t + 1);
    let mut out = BTreeMap::new();
    for j in 0..n {
        for l in 1..=n {
            let mult = c(j, l - 1) - c(j, l);
            if mult < 0 {
                return Err(Error::InconsistentRankData(format!(
                    "negative multiplicity {mult} for top {j} and length {l}"
                )));
            }
            if mult > 0 {
                out.insert(IndecLabel::from_start_len(n, j, l), mult as usize);
            }
        }
    }
    // reconstruct dims and ranks from the multiset
    for j in 0..n {
        for t in 0..=n {
            let predicted: i64 = out
                .iter()
                .filter(|(lab, _)| {
                    let off = (j + n - lab.i) % n;
                    off + t < lab.len(n)
                })
                .map(|(_, &k)| k as i64)
                .sum();
            if predicted != ranks[j][t] {
                return Err(Error::InconsistentRankData(format!(
                    "reconstruction gives rank {predicted} instead of {} for the length-{t} composite from {j}",
                    ranks[j][t]
                )));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn cyc(n: usize) -> Field {
        Field::new(FieldDescriptor::Cyclotomic(n as u32)).unwrap()
    }

    fn lab(i: usize, u: usize) -> IndecLabel {
        IndecLabel::new(i, u)
    }

    #[test]
    fn uniserial_shapes() {
        let f = Field::rationals();
        let p0 = indec_module(2, lab(0, 1), &f).unwrap();
        assert_eq!(p0.dims(), &[1, 1]);
        assert_eq!(p0.map(0), &SparseMatrix::identity(&f, 1));
        assert!(lab(0, 1).is_projective(2));
        let m = indec_module(3, lab(2, 0), &f).unwrap();
        assert_eq!(m.dims(), &[1, 0, 1]);
        assert_eq!(lab(2, 0).len(3), 2);
        let total: usize = (1..=6)
            .map(|n| IndecLabel::all(n).iter().map(|x| x.len(n)).sum::<usize>() - n * n * (n + 1) / 2)
            .sum();
        assert_eq!(total, 0);
    }

    #[test]
    fn hom_dims() {
        let f = Field::rationals();
        let p0 = indec_module(2, lab(0, 1), &f).unwrap();
        let s0 = indec_module(2, lab(0, 0), &f).unwrap();
        let s1 = indec_module(2, lab(1, 1), &f).unwrap();
        assert_eq!(hom_dim(&s0, &p0).unwrap(), 0);
        assert_eq!(hom_dim(&s1, &p0).unwrap(), 1);
        for n in 1..=3 {
            for x in IndecLabel::all(n) {
                let m = indec_module(n, x, &f).unwrap();
                assert_eq!(hom_dim(&m, &m).unwrap(), 1);
            }
        }
    }

    #[test]
    fn decomposition_of_sums() {
        let f = Field::rationals();
        let p0 = indec_module(2, lab(0, 1), &f).unwrap();
        let s1 = indec_module(2, lab(1, 1), &f).unwrap();
        let sum = TaftModule::direct_sum(&[p0, s1]).unwrap();
        assert_eq!(decompose_serial(&sum).unwrap(), BTreeMap::from([(lab(0, 1), 1), (lab(1, 1), 1)]));
        for n in 1..=4 {
            for x in IndecLabel::all(n) {
                let m = indec_module(n, x, &f).unwrap();
                assert_eq!(decompose_serial(&m).unwrap(), BTreeMap::from([(x, 1)]));
            }
        }
    }

    #[test]
    fn tensor_examples() {
        let f = cyc(2);
        let p = indec_module(2, lab(0, 1), &f).unwrap();
        let pp = tensor_module(&p, &p).unwrap();
        assert_eq!(pp.dim(), 4);
        assert_eq!(decompose_serial(&pp).unwrap(), BTreeMap::from([(lab(0, 1), 1), (lab(1, 0), 1)]));
        for n in 2..=4 {
            let f = cyc(n);
            let unit = indec_module(n, lab(0, 0), &f).unwrap();
            for x in IndecLabel::all(n) {
                let m = indec_module(n, x, &f).unwrap();
                assert_eq!(decompose_serial(&tensor_module(&m, &unit).unwrap()).unwrap(), BTreeMap::from([(x, 1)]));
                assert_eq!(decompose_serial(&tensor_module(&unit, &m).unwrap()).unwrap(), BTreeMap::from([(x, 1)]));
            }
        }
        assert!(tensor_module(
            &indec_module(3, lab(0, 0), &Field::rationals()).unwrap(),
            &indec_module(3, lab(0, 0), &Field::rationals()).unwrap()
        )
        .is_err());
    }

    #[test]
    fn tensor_commutative_and_associative_up_to_decomposition() {
        for n in 2..=3 {
            let f = cyc(n);
            let mods: Vec<(IndecLabel, TaftModule)> =
                IndecLabel::all(n).into_iter().map(|x| (x, indec_module(n, x, &f).unwrap())).collect();
            for (_, a) in &mods {
                for (_, b) in &mods {
                    let ab = tensor_module(a, b).unwrap();
                    let ba = tensor_module(b, a).unwrap();
                    assert_eq!(decompose_serial(&ab).unwrap(), decompose_serial(&ba).unwrap());
                    for (_, c) in mods.iter().step_by(2) {
                        let l = tensor_module(&ab, c).unwrap();
                        let r = tensor_module(a, &tensor_module(b, c).unwrap()).unwrap();
                        assert_eq!(decompose_serial(&l).unwrap(), decompose_serial(&r).unwrap());
                    }
                }
            }
        }
    }

    fn random_invertible(f: &Field, d: usize, rng: &mut impl Rng) -> SparseMatrix {
        loop {
            let m = SparseMatrix::from_triplets(
                f,
                d,
                d,
                (0..d).flat_map(|r| (0..d).map(move |c| (r, c))).map(|(r, c)| (r, c, f.from_i64(rng.gen_range(-2..=2)))),
            );
            if m.rank() == d {
                return m;
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn decompose_recovers_conjugated_sums(n in 1usize..=4, picks in proptest::collection::vec((0usize..4, 0usize..4), 1..=6), seed in any::<u64>()) {
            let f = Field::rationals();
            let labels: Vec<IndecLabel> = picks.iter().map(|&(i, u)| lab(i % n, u % n)).collect();
            let parts: Vec<TaftModule> = labels.iter().map(|&x| indec_module(n, x, &f).unwrap()).collect();
            let sum = TaftModule::direct_sum(&parts).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let change: Vec<SparseMatrix> = sum.dims().iter().map(|&d| random_invertible(&f, d, &mut rng)).collect();
            let twisted = sum.conjugate(&change).unwrap();
            let mut expected = BTreeMap::new();
            for x in labels {
                *expected.entry(x).or_insert(0) += 1;
            }
            prop_assert_eq!(decompose_serial(&twisted).unwrap(), expected);
        }
    }

    #[test]
    fn label_text() {
        let x = lab(2, 0);
        assert_eq!(x.to_string(), "N[2,0]");
        assert_eq!("N[2,0]".parse::<IndecLabel>().unwrap(), x);
        assert_eq!(serde_json::to_string(&x).unwrap(), "\"N[2,0]\"");
        let m = BTreeMap::from([(lab(0, 1), 1), (lab(1, 0), 2)]);
        assert_eq!(multiset_to_json(&m).to_string(), r#"[{"label":"N[0,1]","mult":1},{"label":"N[1,0]","mult":2}]"#);
    }
}
