//! Incremental row echelon basis of a subspace, for span and membership tests.

use std::collections::BTreeMap;

use crate::scalar::{Field, Scalar};

/// Sparse vectors reduced against each other, keyed by pivot column.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    rows: BTreeMap<usize, BTreeMap<usize, Scalar>>,
}

impl Echelon {
    pub fn new(field: &Field) -> Self {
        Echelon { field: field.clone(), rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` modulo the current span.
    pub fn reduce(&self, v: &[(usize, Scalar)]) -> BTreeMap<usize, Scalar> {
        let mut cur: BTreeMap<usize, Scalar> =
            v.iter().filter(|(_, x)| !x.is_zero()).cloned().collect();
        let mut from = 0;
        while let Some((&col, coef)) = cur.range(from..).next() {
            from = col + 1;
            let Some(piv) = self.rows.get(&col) else {
                continue;
            };
            let f = coef.clone();
            for (c, x) in piv {
                let t = &f * x;
                let e = cur.entry(*c).or_insert_with(|| self.field.zero());
                *e = &*e - &t;
                if e.is_zero() {
                    cur.remove(c);
                }
            }
        }
        cur
    }

    pub fn contains(&self, v: &[(usize, Scalar)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: &[(usize, Scalar)]) -> bool {
        let r = self.reduce(v);
        let Some((&col, lead)) = r.iter().next() else {
            return false;
        };
        let inv = lead.inv().expect("leading entry is nonzero");
        let r: BTreeMap<usize, Scalar> = r.iter().map(|(c, x)| (*c, x * &inv)).collect();
        self.rows.insert(col, r);
        true
    }
}
