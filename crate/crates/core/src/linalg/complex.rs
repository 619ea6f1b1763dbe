//! Internally graded chain complexes and their homology tables.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::scalar::{Field, FieldDescriptor};

/// One internal degree of a graded complex: `dims[p] = dim C_p` and
/// `differentials[p - 1] = d_p : C_p → C_{p−1}` (rows `dims[p−1]`, cols `dims[p]`).
#[derive(Clone, Debug)]
pub struct ChainPiece {
    pub dims: Vec<usize>,
    pub differentials: Vec<SparseMatrix>,
}

impl ChainPiece {
    pub fn new(field: &Field, dims: Vec<usize>, differentials: Vec<SparseMatrix>) -> Result<Self> {
        if differentials.len() + 1 != dims.len().max(1) {
            return Err(Error::InvalidArgument(format!(
                "{} differentials for {} chain groups",
                differentials.len(),
                dims.len()
            )));
        }
        for (k, d) in differentials.iter().enumerate() {
            let p = k + 1;
            if d.rows() != dims[p - 1] || d.cols() != dims[p] {
                return Err(Error::InvalidArgument(format!(
                    "d_{p} has shape {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    dims[p - 1],
                    dims[p]
                )));
            }
            if d.field() != field {
                return Err(Error::InvalidArgument(format!("d_{p} is over another field")));
            }
        }
        Ok(ChainPiece { dims, differentials })
    }

    fn dim(&self, p: usize) -> usize {
        self.dims.get(p).copied().unwrap_or(0)
    }
}

/// Graded complex truncated at homological degree `max_p` and internal degree `max_q`.
///
/// To get correct homology in degree `max_p`, a piece must carry `C_{max_p+1}`
/// and `d_{max_p+1}` as well.
#[derive(Clone, Debug)]
pub struct GradedChainComplex {
    pub field: Field,
    pub max_p: usize,
    pub max_q: usize,
    pub pieces: BTreeMap<usize, ChainPiece>,
}

impl GradedChainComplex {
    pub fn new(field: &Field, max_p: usize, max_q: usize) -> Self {
        GradedChainComplex { field: field.clone(), max_p, max_q, pieces: BTreeMap::new() }
    }

    pub fn insert(&mut self, q: usize, piece: ChainPiece) {
        self.pieces.insert(q, piece);
    }

    /// Checks `d_{p−1} ∘ d_p = 0` in every piece.
    pub fn check_square_zero(&self) -> Result<()> {
        for (&q, piece) in &self.pieces {
            for (k, w) in piece.differentials.windows(2).enumerate() {
                if !w[0].mul(&w[1]).is_zero() {
                    return Err(Error::NotAComplex { p: k + 2, q });
                }
            }
        }
        Ok(())
    }

    /// Homology dimensions for `p ≤ max_p` in every stored piece.
    pub fn homology_dims(&self, provenance: Provenance) -> Result<HomologyTable> {
        let results: Vec<Result<Vec<(usize, usize, usize)>>> = self
            .pieces
            .par_iter()
            .map(|(&q, piece)| {
                for (k, w) in piece.differentials.windows(2).enumerate() {
                    if !w[0].mul(&w[1]).is_zero() {
                        return Err(Error::NotAComplex { p: k + 2, q });
                    }
                }
                let ranks: Vec<usize> = piece.differentials.iter().map(SparseMatrix::rank).collect();
                let rank = |p: usize| if p == 0 { 0 } else { ranks.get(p - 1).copied().unwrap_or(0) };
                let top = piece.dims.len();
                let h: Vec<usize> = (0..top)
                    .map(|p| piece.dim(p) - rank(p) - rank(p + 1))
                    .collect();
                let euler_c: i64 =
                    (0..top).map(|p| sign(p) * piece.dim(p) as i64).sum();
                // the last group has no outgoing boundary recorded, so compare the
                // alternating sum including the top rank correction
                let euler_h: i64 = (0..top).map(|p| sign(p) * h[p] as i64).sum();
                let correction = sign(top) * rank(top) as i64;
                debug_assert_eq!(rank(top), 0);
                if euler_c != euler_h - correction {
                    return Err(Error::InvalidArgument(format!(
                        "Euler characteristic mismatch in internal degree {q}"
                    )));
                }
                Ok((0..top.min(self.max_p + 1)).map(|p| (p, q, h[p])).collect())
            })
            .collect();
        let mut table = HomologyTable::new(self.field.descriptor(), provenance, self.max_p, self.max_q);
        for r in results {
            for (p, q, d) in r? {
                table.set(p, q, d);
            }
        }
        Ok(table)
    }
}

fn sign(p: usize) -> i64 {
    if p % 2 == 0 {
        1
    } else {
        -1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    ClosedForm,
    BruteForce,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Provenance::ClosedForm => "ClosedForm",
            Provenance::BruteForce => "BruteForce",
        })
    }
}

/// Homology dimensions indexed by homological degree `p` and internal degree `q`.
///
/// Every `(p, q)` inside the bounds is stored, zeros included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyTable {
    pub field: FieldDescriptor,
    pub provenance: Provenance,
    pub max_p: usize,
    pub max_q: usize,
    entries: BTreeMap<(usize, usize), usize>,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    p: usize,
    q: usize,
    dim: usize,
}

#[derive(Serialize, Deserialize)]
struct Bounds {
    max_p: usize,
    max_q: usize,
}

#[derive(Serialize, Deserialize)]
struct TableDoc {
    field: FieldDescriptor,
    provenance: Provenance,
    entries: Vec<Entry>,
    bounds: Bounds,
}

impl HomologyTable {
    /// A table with every entry inside the bounds set to zero.
    pub fn new(field: FieldDescriptor, provenance: Provenance, max_p: usize, max_q: usize) -> Self {
        let entries = (0..=max_q)
            .flat_map(|q| (0..=max_p).map(move |p| ((p, q), 0)))
            .collect();
        HomologyTable { field, provenance, max_p, max_q, entries }
    }

    /// Sets an entry; entries outside the bounds are ignored.
    pub fn set(&mut self, p: usize, q: usize, dim: usize) {
        if p <= self.max_p && q <= self.max_q {
            self.entries.insert((p, q), dim);
        }
    }

    pub fn add(&mut self, p: usize, q: usize, dim: usize) {
        if p <= self.max_p && q <= self.max_q {
            *self.entries.entry((p, q)).or_insert(0) += dim;
        }
    }

    pub fn get(&self, p: usize, q: usize) -> usize {
        self.entries.get(&(p, q)).copied().unwrap_or(0)
    }

    /// `Σ_q dim H_{p,q}`.
    pub fn total(&self, p: usize) -> usize {
        (0..=self.max_q).map(|q| self.get(p, q)).sum()
    }

    /// Entries sorted by `(q, p)`.
    pub fn entries(&self) -> Vec<(usize, usize, usize)> {
        let mut v: Vec<(usize, usize, usize)> =
            self.entries.iter().map(|(&(p, q), &d)| (p, q, d)).collect();
        v.sort_by_key(|&(p, q, _)| (q, p));
        v
    }

    pub fn nonzero(&self) -> Vec<(usize, usize, usize)> {
        self.entries().into_iter().filter(|e| e.2 != 0).collect()
    }

    /// Positions where the two tables differ, over the common bounds: `(p, q, self, other)`.
    pub fn diff(&self, other: &HomologyTable) -> Vec<(usize, usize, usize, usize)> {
        let mp = self.max_p.min(other.max_p);
        let mq = self.max_q.min(other.max_q);
        let mut out = Vec::new();
        for q in 0..=mq {
            for p in 0..=mp {
                let (a, b) = (self.get(p, q), other.get(p, q));
                if a != b {
                    out.push((p, q, a, b));
                }
            }
        }
        out
    }

    /// Same table restricted to smaller bounds.
    pub fn restrict(&self, max_p: usize, max_q: usize) -> HomologyTable {
        let mut t = HomologyTable::new(self.field, self.provenance, max_p, max_q);
        for (p, q, d) in self.entries() {
            t.set(p, q, d);
        }
        t
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.doc()).expect("table serializes")
    }

    pub fn from_json_value(v: serde_json::Value) -> Result<Self> {
        let doc: TableDoc = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
        let mut t = HomologyTable::new(doc.field, doc.provenance, doc.bounds.max_p, doc.bounds.max_q);
        for e in doc.entries {
            if e.p > t.max_p || e.q > t.max_q {
                return Err(Error::Parse(format!("entry ({}, {}) outside bounds", e.p, e.q)));
            }
            t.set(e.p, e.q, e.dim);
        }
        Ok(t)
    }

    fn doc(&self) -> TableDoc {
        TableDoc {
            field: self.field,
            provenance: self.provenance,
            entries: self.entries().into_iter().map(|(p, q, dim)| Entry { p, q, dim }).collect(),
            bounds: Bounds { max_p: self.max_p, max_q: self.max_q },
        }
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("p,q,dim\n");
        for (p, q, d) in self.entries() {
            writeln!(s, "{p},{q},{d}").unwrap();
        }
        s
    }
}
