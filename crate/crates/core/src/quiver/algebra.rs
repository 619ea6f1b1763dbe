//! Truncated and bound quiver algebras with explicit monomial bases.
//!
//! Bound relations are homogeneous, so the ideal is graded and each degree is
//! handled separately: `I_d` is spanned by the degree-`d` relations together
//! with `I_{d−1}·arrows` and `arrows·I_{d−1}`. Row reduction in path
//! coordinates leaves the non-pivot paths as a basis of the quotient, and
//! every pivot path gets a rewriting rule into them.

use std::collections::{BTreeMap, HashMap};
use std::ops::Range;

use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::quiver::{Path, Quiver};
use crate::scalar::{Field, Scalar};

/// A homogeneous relation: a linear combination of parallel paths of equal length.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

impl Relation {
    pub fn new(terms: Vec<(Scalar, Path)>) -> Self {
        Relation { terms }
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.first().map(|(_, p)| p.len())
    }

    pub fn to_json_value(&self, q: &Quiver) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(c, p)| {
                    let ids: Vec<&str> = p.arrows().iter().map(|&a| q.arrow(a).id.as_str()).collect();
                    serde_json::json!({ "coeff": c.to_string(), "path": ids })
                })
                .collect(),
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum PresentationKind {
    /// `kΓ/𝔪ᴺ`; `N = 0` stands for the full path algebra.
    Truncated(usize),
    Bound(Vec<Relation>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraPresentation {
    pub quiver: Quiver,
    pub kind: PresentationKind,
    pub field: Field,
}

impl AlgebraPresentation {
    pub fn truncated(quiver: Quiver, n: usize, field: &Field) -> Self {
        AlgebraPresentation { quiver, kind: PresentationKind::Truncated(n), field: field.clone() }
    }

    /// Validates homogeneity, parallelism and field of every relation.
    pub fn bound(quiver: Quiver, relations: Vec<Relation>, field: &Field) -> Result<Self> {
        for (k, r) in relations.iter().enumerate() {
            let Some((_, first)) = r.terms.first() else {
                return Err(Error::InvalidPresentation(format!("relation {k} is empty")));
            };
            if first.is_trivial() {
                return Err(Error::InvalidPresentation(format!("relation {k} has degree 0")));
            }
            for (c, p) in &r.terms {
                if p.len() != first.len() {
                    return Err(Error::InvalidPresentation(format!("relation {k} is not homogeneous")));
                }
                if (p.src(), p.tgt()) != (first.src(), first.tgt()) {
                    return Err(Error::InvalidPresentation(format!("relation {k} mixes non-parallel paths")));
                }
                if c.descriptor() != field.descriptor() {
                    return Err(Error::InvalidPresentation(format!("relation {k} has a coefficient in another field")));
                }
            }
        }
        Ok(AlgebraPresentation { quiver, kind: PresentationKind::Bound(relations), field: field.clone() })
    }

    pub fn truncation(&self) -> Option<usize> {
        match self.kind {
            PresentationKind::Truncated(n) => Some(n),
            PresentationKind::Bound(_) => None,
        }
    }

    pub fn relations(&self) -> &[Relation] {
        match &self.kind {
            PresentationKind::Bound(r) => r,
            PresentationKind::Truncated(_) => &[],
        }
    }

    /// The same presentation over another field; bound relations must have integer coefficients.
    pub fn with_field(&self, field: &Field) -> Result<Self> {
        match &self.kind {
            PresentationKind::Truncated(n) => Ok(Self::truncated(self.quiver.clone(), *n, field)),
            PresentationKind::Bound(rels) => {
                let rels = rels
                    .iter()
                    .map(|r| {
                        let terms = r
                            .terms
                            .iter()
                            .map(|(c, p)| {
                                let v = c
                                    .as_rational()
                                    .filter(|v| v.is_integer())
                                    .ok_or_else(|| Error::UnsupportedField(field.descriptor(), "non-integer relation".into()))?;
                                Ok((field.from_bigint(v.numer()), p.clone()))
                            })
                            .collect::<Result<Vec<_>>>()?;
                        Ok(Relation::new(terms))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Self::bound(self.quiver.clone(), rels, field)
            }
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let mut v = self.quiver.to_json_value();
        match &self.kind {
            PresentationKind::Truncated(n) => {
                v["truncation"] = serde_json::json!(n);
            }
            PresentationKind::Bound(rels) => {
                v["relations"] =
                    serde_json::Value::Array(rels.iter().map(|r| r.to_json_value(&self.quiver)).collect());
            }
        }
        v
    }
}

type Combination = Vec<(usize, Scalar)>;

/// A finite-dimensional quotient with a basis of paths and structure constants.
#[derive(Clone, Debug)]
pub struct AlgebraBasis {
    presentation: AlgebraPresentation,
    elements: Vec<Path>,
    index: HashMap<Path, usize>,
    by_degree: Vec<Range<usize>>,
    reductions: HashMap<Path, Combination>,
    table: Vec<Vec<(usize, Combination)>>,
}

impl AlgebraBasis {
    /// Computes the basis, failing if degrees have not vanished by `4·#arrows`.
    pub fn build(p: &AlgebraPresentation) -> Result<Self> {
        Self::build_with_bound(p, 4 * p.quiver.num_arrows().max(1))
    }

    pub fn build_with_bound(p: &AlgebraPresentation, bound: usize) -> Result<Self> {
        let (per_degree, reductions) = match &p.kind {
            PresentationKind::Truncated(0) => {
                return Err(Error::InvalidPresentation(
                    "the full path algebra is infinite-dimensional; use a truncation".into(),
                ))
            }
            PresentationKind::Truncated(n) => {
                ((0..*n).map(|d| p.quiver.paths_of_length(d)).collect(), HashMap::new())
            }
            PresentationKind::Bound(rels) => bound_basis(p, rels, bound)?,
        };
        let mut elements = Vec::new();
        let mut by_degree = Vec::new();
        for layer in per_degree {
            if layer.is_empty() {
                break;
            }
            let start = elements.len();
            elements.extend(layer);
            by_degree.push(start..elements.len());
        }
        let index: HashMap<Path, usize> = elements.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
        let mut basis = AlgebraBasis {
            presentation: p.clone(),
            elements,
            index,
            by_degree,
            reductions,
            table: Vec::new(),
        };
        basis.table = (0..basis.dim())
            .map(|i| {
                (0..basis.dim())
                    .filter_map(|j| {
                        let path = basis.elements[i].concat(&basis.elements[j])?;
                        let nf = basis.normal_form(&path);
                        (!nf.is_empty()).then_some((j, nf))
                    })
                    .collect()
            })
            .collect();
        Ok(basis)
    }

    pub fn presentation(&self) -> &AlgebraPresentation {
        &self.presentation
    }

    pub fn quiver(&self) -> &Quiver {
        &self.presentation.quiver
    }

    pub fn field(&self) -> &Field {
        &self.presentation.field
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &Path {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Path] {
        &self.elements
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.elements[i].len()
    }

    /// Largest degree with a nonzero component.
    pub fn top_degree(&self) -> usize {
        self.by_degree.len().saturating_sub(1)
    }

    pub fn degree_range(&self, d: usize) -> Range<usize> {
        self.by_degree.get(d).cloned().unwrap_or(0..0)
    }

    pub fn degree_dims(&self) -> Vec<usize> {
        self.by_degree.iter().map(|r| r.len()).collect()
    }

    /// Index of the idempotent at vertex `v`.
    pub fn idempotent(&self, v: usize) -> usize {
        self.index[&Path::trivial(v)]
    }

    /// Expresses a path in the basis.
    pub fn normal_form(&self, p: &Path) -> Combination {
        if p.len() > self.top_degree() {
            return Vec::new();
        }
        if let Some(&k) = self.index.get(p) {
            return vec![(k, self.field().one())];
        }
        self.reductions.get(p).cloned().unwrap_or_default()
    }

    /// Product of basis elements `i·j` (path `i` followed by path `j`).
    pub fn mul(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        let row = &self.table[i];
        match row.binary_search_by_key(&j, |(k, _)| *k) {
            Ok(pos) => &row[pos].1,
            Err(_) => &[],
        }
    }

    /// Nonzero products `i·j` for fixed `i`, as `(j, i·j)`.
    pub fn products_from(&self, i: usize) -> &[(usize, Combination)] {
        &self.table[i]
    }

    pub fn mul_vec(&self, a: &[(usize, Scalar)], b: &[(usize, Scalar)]) -> Combination {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, x) in a {
            for (j, y) in b {
                for (k, z) in self.mul(*i, *j) {
                    let t = &(x * y) * z;
                    let e = acc.entry(*k).or_insert_with(|| self.field().zero());
                    *e = &*e + &t;
                }
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// Exhaustive associativity check on basis triples.
    pub fn is_associative(&self) -> bool {
        let f = self.field();
        let unit = |k: usize| vec![(k, f.one())];
        (0..self.dim()).all(|i| {
            self.table[i].iter().all(|(j, ij)| {
                (0..self.dim()).all(|k| {
                    let left = self.mul_vec(ij, &unit(k));
                    let right = self.mul_vec(&unit(i), self.mul(*j, k));
                    left == right
                })
            })
        })
    }

    /// `C[x][y]` = number of basis paths from `x` to `y`, i.e. `dim e_x A e_y`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.quiver().num_vertices();
        let mut c = vec![vec![0; n]; n];
        for p in &self.elements {
            c[p.src()][p.tgt()] += 1;
        }
        c
    }

    /// `dim A − dim [A, A]`, computed from the structure constants.
    pub fn commutator_quotient_dim(&self) -> usize {
        let f = self.field();
        let d = self.dim();
        let mut rows = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let mut t: Vec<(usize, usize, Scalar)> = Vec::new();
                for (k, v) in self.mul(i, j) {
                    t.push((0, *k, v.clone()));
                }
                for (k, v) in self.mul(j, i) {
                    t.push((0, *k, -v));
                }
                if !t.is_empty() {
                    rows.push(t);
                }
            }
        }
        let m = SparseMatrix::from_triplets(
            f,
            rows.len(),
            d,
            rows.into_iter().enumerate().flat_map(|(r, t)| t.into_iter().map(move |(_, k, v)| (r, k, v))),
        );
        d - m.rank()
    }
}

type Degrees = (Vec<Vec<Path>>, HashMap<Path, Combination>);

fn bound_basis(p: &AlgebraPresentation, rels: &[Relation], bound: usize) -> Result<Degrees> {
    let q = &p.quiver;
    let f = &p.field;
    let mut per_degree: Vec<Vec<Path>> = Vec::new();
    let mut rules: Vec<(Path, Vec<(Path, Scalar)>)> = Vec::new();
    // Ideal in the previous degree, as rows over paths.
    let mut prev_ideal: Vec<Vec<(Path, Scalar)>> = Vec::new();
    for d in 0.. {
        let paths = q.paths_of_length(d);
        let col: HashMap<&Path, usize> = paths.iter().enumerate().map(|(k, p)| (p, k)).collect();
        let mut spanning: Vec<Vec<(usize, Scalar)>> = Vec::new();
        for r in rels.iter().filter(|r| r.degree() == Some(d)) {
            spanning.push(r.terms.iter().map(|(c, p)| (col[p], c.clone())).collect());
        }
        for row in &prev_ideal {
            for a in 0..q.num_arrows() {
                let arrow = Path::arrow(q, a);
                let right: Vec<(usize, Scalar)> = row
                    .iter()
                    .filter_map(|(p, c)| p.concat(&arrow).map(|pa| (col[&pa], c.clone())))
                    .collect();
                let left: Vec<(usize, Scalar)> = row
                    .iter()
                    .filter_map(|(p, c)| arrow.concat(p).map(|ap| (col[&ap], c.clone())))
                    .collect();
                spanning.extend([right, left].into_iter().filter(|v| !v.is_empty()));
            }
        }
        let m = SparseMatrix::from_triplets(
            f,
            spanning.len(),
            paths.len(),
            spanning.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v.clone()))),
        );
        let (rref, pivots) = m.rref();
        let mut is_pivot = vec![false; paths.len()];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let standard: Vec<Path> =
            paths.iter().zip(&is_pivot).filter(|(_, &piv)| !piv).map(|(p, _)| p.clone()).collect();
        for (row, &pc) in rref.iter().zip(&pivots) {
            let rest = row
                .iter()
                .filter(|(c, _)| *c != pc)
                .map(|(c, v)| (paths[*c].clone(), -v))
                .collect();
            rules.push((paths[pc].clone(), rest));
        }
        if standard.is_empty() {
            break;
        }
        if d >= bound {
            return Err(Error::NonNilpotentQuotient(bound));
        }
        per_degree.push(standard);
        prev_ideal = rref
            .into_iter()
            .map(|row| row.into_iter().map(|(c, v)| (paths[c].clone(), v)).collect())
            .collect();
    }
    let index: HashMap<&Path, usize> =
        per_degree.iter().flatten().enumerate().map(|(k, p)| (p, k)).collect();
    let reductions = rules
        .into_iter()
        .map(|(p, rest)| (p, rest.into_iter().map(|(b, v)| (index[&b], v)).collect()))
        .collect();
    Ok((per_degree, reductions))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn taft_dimension() {
        for n in 1..=5 {
            let p = AlgebraPresentation::truncated(Quiver::crown(n).unwrap(), n, &q());
            let b = AlgebraBasis::build(&p).unwrap();
            assert_eq!(b.dim(), n * n);
            assert!(b.is_associative());
        }
    }

    #[test]
    fn truncation_one_is_semisimple() {
        let p = AlgebraPresentation::truncated(Quiver::loops(3), 1, &q());
        let b = AlgebraBasis::build(&p).unwrap();
        assert_eq!(b.dim(), 1);
        let p = AlgebraPresentation::truncated(Quiver::crown(4).unwrap(), 1, &q());
        assert_eq!(AlgebraBasis::build(&p).unwrap().dim(), 4);
    }

    #[test]
    fn full_path_algebra_rejected() {
        let p = AlgebraPresentation::truncated(Quiver::crown(2).unwrap(), 0, &q());
        assert!(AlgebraBasis::build(&p).is_err());
    }

    #[test]
    fn truncated_products_concatenate() {
        let quiver = Quiver::loops(2);
        let p = AlgebraPresentation::truncated(quiver.clone(), 3, &q());
        let b = AlgebraBasis::build(&p).unwrap();
        assert_eq!(b.dim(), 1 + 2 + 4);
        let x = b.index_of(&Path::from_ids(&quiver, &["x0"]).unwrap()).unwrap();
        let y = b.index_of(&Path::from_ids(&quiver, &["x1"]).unwrap()).unwrap();
        let xy = b.index_of(&Path::from_ids(&quiver, &["x0", "x1"]).unwrap()).unwrap();
        assert_eq!(b.mul(x, y), &[(xy, q().one())]);
        assert!(b.mul(xy, x).is_empty());
        assert!(b.is_associative());
    }

    #[test]
    fn commutative_polynomial_quotient() {
        // k<x,y>/(xy − yx, x², y²) has basis 1, x, y, xy.
        let quiver = Quiver::loops(2);
        let f = q();
        let path = |ids: &[&str]| Path::from_ids(&quiver, ids).unwrap();
        let rels = vec![
            Relation::new(vec![(f.one(), path(&["x0", "x1"])), (f.from_i64(-1), path(&["x1", "x0"]))]),
            Relation::new(vec![(f.one(), path(&["x0", "x0"]))]),
            Relation::new(vec![(f.one(), path(&["x1", "x1"]))]),
        ];
        let p = AlgebraPresentation::bound(quiver.clone(), rels, &f).unwrap();
        let b = AlgebraBasis::build(&p).unwrap();
        assert_eq!(b.degree_dims(), vec![1, 2, 1]);
        assert!(b.is_associative());
        assert_eq!(b.commutator_quotient_dim(), 4);
    }

    #[test]
    fn free_algebra_does_not_terminate() {
        let quiver = Quiver::loops(2);
        let f = q();
        let rel = Relation::new(vec![(f.one(), Path::from_ids(&quiver, &["x0", "x0"]).unwrap())]);
        let p = AlgebraPresentation::bound(quiver, vec![rel], &f).unwrap();
        assert_eq!(AlgebraBasis::build(&p).err(), Some(Error::NonNilpotentQuotient(8)));
    }

    #[test]
    fn rejects_inhomogeneous_relation() {
        let quiver = Quiver::loops(1);
        let f = q();
        let path = |ids: &[&str]| Path::from_ids(&quiver, ids).unwrap();
        let rel = Relation::new(vec![(f.one(), path(&["x0"])), (f.one(), path(&["x0", "x0"]))]);
        assert!(AlgebraPresentation::bound(quiver.clone(), vec![rel], &f).is_err());
    }
}
