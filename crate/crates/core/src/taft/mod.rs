//! The Taft algebra `Λₙ = kΔₙ/𝔪ⁿ` and its Hopf structure.
//!
//! Elements act on representations, so products are written functionally:
//! `x·y` means "first `y`, then `x`", and the path of length `l` starting at
//! `e_i` is `a_{i+l−1}⋯a_{i+1}a_i`. With `g = Σ ζ^{−i} e_i` and `x = Σ a_i`
//! one gets `gⁿ = 1`, `xⁿ = 0` and `xg = ζ gx`.

mod module;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver::{AlgebraBasis, AlgebraPresentation, Path, Quiver};
use crate::scalar::{Field, FieldDescriptor, Scalar};

pub use module::{
    decompose_serial, hom_basis, hom_dim, indec_module, multiset_to_json, tensor_module, IndecLabel, Multiset, TaftModule,
};

pub(crate) type Elem = BTreeMap<usize, Scalar>;
pub(crate) type Tensor2 = BTreeMap<(usize, usize), Scalar>;
type Tensor3 = BTreeMap<(usize, usize, usize), Scalar>;

pub(crate) fn accumulate<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, v: Scalar) {
    if v.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(e) => {
            *e = &*e + &v;
            if e.is_zero() {
                map.remove(&key);
            }
        }
        None => {
            map.insert(key, v);
        }
    }
}

/// Deliberate corruption of the structure maps, used to check that the axiom checks bite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopfMutation {
    /// Negate `S(a_i)` for the given arrow.
    FlipAntipodeSign { arrow: usize },
}

/// `Λₙ` over a field; the Hopf maps need a primitive `n`-th root of unity.
#[derive(Clone, Debug)]
pub struct TaftAlgebra {
    n: usize,
    basis: AlgebraBasis,
    idx: Vec<Vec<usize>>,
    pos: Vec<(usize, usize)>,
    zeta: Option<Scalar>,
    mutation: Option<HopfMutation>,
}

impl TaftAlgebra {
    /// `Λₙ` over `ℚ(ζₙ)`.
    pub fn new(n: usize) -> Result<Self> {
        let field = Field::new(FieldDescriptor::Cyclotomic(n as u32))?;
        Self::with_field(n, &field)
    }

    pub fn with_field(n: usize, field: &Field) -> Result<Self> {
        let quiver = Quiver::crown(n)?;
        let basis = AlgebraBasis::build(&AlgebraPresentation::truncated(quiver.clone(), n, field))?;
        let mut idx = vec![vec![0; n]; n];
        let mut pos = vec![(0, 0); n * n];
        for (i, row) in idx.iter_mut().enumerate() {
            for (l, slot) in row.iter_mut().enumerate() {
                let path = if l == 0 {
                    Path::trivial(i)
                } else {
                    Path::from_arrows(&quiver, &(0..l).map(|k| (i + k) % n).collect::<Vec<_>>())?
                };
                *slot = basis.index_of(&path).expect("path of length < n is a basis element");
                pos[*slot] = (i, l);
            }
        }
        let zeta = match field.descriptor() {
            FieldDescriptor::Cyclotomic(m) if m as usize == n => Some(field.zeta()?),
            _ if n == 1 => Some(field.one()),
            FieldDescriptor::Rationals if n == 2 => Some(field.from_i64(-1)),
            FieldDescriptor::PrimeField(p) if n == 2 && p != 2 => Some(field.from_i64(-1)),
            _ => None,
        };
        Ok(TaftAlgebra { n, basis, idx, pos, zeta, mutation: None })
    }

    pub fn with_mutation(mut self, m: HopfMutation) -> Self {
        self.mutation = Some(m);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n * self.n
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn basis(&self) -> &AlgebraBasis {
        &self.basis
    }

    fn zeta(&self) -> Result<&Scalar> {
        self.zeta.as_ref().ok_or_else(|| {
            Error::UnsupportedField(self.field().descriptor(), format!("no primitive {}-th root of unity", self.n))
        })
    }

    fn q_pow(&self, k: usize) -> Result<Scalar> {
        Ok(self.zeta()?.pow((k % self.n) as u64))
    }

    /// Basis index of the path of length `l` starting at `e_i`.
    pub fn index(&self, i: usize, l: usize) -> usize {
        self.idx[i % self.n][l]
    }

    /// `(start, length)` of a basis element.
    pub fn start_len(&self, k: usize) -> (usize, usize) {
        self.pos[k]
    }

    pub fn element_name(&self, k: usize) -> String {
        match self.pos[k] {
            (i, 0) => format!("e{i}"),
            (i, 1) => format!("a{i}"),
            (i, l) => {
                let parts: Vec<String> = (0..l).rev().map(|t| format!("a{}", (i + t) % self.n)).collect();
                parts.join("")
            }
        }
    }

    fn unit(&self, k: usize) -> Elem {
        BTreeMap::from([(k, self.field().one())])
    }

    pub fn one(&self) -> Elem {
        (0..self.n).map(|i| (self.index(i, 0), self.field().one())).collect()
    }

    /// `x·y`: first `y`, then `x`.
    pub fn mul_basis(&self, x: usize, y: usize) -> &[(usize, Scalar)] {
        self.basis.mul(y, x)
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let mut out = BTreeMap::new();
        for (i, a) in x {
            for (j, b) in y {
                for (k, c) in self.mul_basis(*i, *j) {
                    accumulate(&mut out, *k, &(a * b) * c);
                }
            }
        }
        out
    }

    fn mul2(&self, x: &Tensor2, y: &Tensor2) -> Tensor2 {
        let mut out = BTreeMap::new();
        for ((a1, a2), c) in x {
            for ((b1, b2), d) in y {
                let l = self.mul_basis(*a1, *b1);
                let r = self.mul_basis(*a2, *b2);
                for (k1, s1) in l {
                    for (k2, s2) in r {
                        accumulate(&mut out, (*k1, *k2), &(&(c * d) * s1) * s2);
                    }
                }
            }
        }
        out
    }

    /// `g = Σ ζ^{−i} e_i`.
    pub fn g(&self) -> Result<Elem> {
        let z = self.zeta()?.inv().expect("ζ is a unit");
        Ok((0..self.n).map(|i| (self.index(i, 0), z.pow(i as u64))).collect())
    }

    /// `x = Σ a_i` (zero when `n = 1`).
    pub fn x(&self) -> Elem {
        if self.n == 1 {
            return BTreeMap::new();
        }
        (0..self.n).map(|i| (self.index(i, 1), self.field().one())).collect()
    }

    fn coproduct_arrow(&self, i: usize) -> Result<Tensor2> {
        let n = self.n;
        let mut out = BTreeMap::new();
        for j in 0..n {
            let k = (i + n - j) % n;
            accumulate(&mut out, (self.index(j, 0), self.index(k, 1)), self.field().one());
            accumulate(&mut out, (self.index(j, 1), self.index(k, 0)), self.q_pow(k)?);
        }
        Ok(out)
    }

    /// `Δ` on a basis element.
    pub fn coproduct(&self, k: usize) -> Result<Tensor2> {
        let (i, l) = self.pos[k];
        let n = self.n;
        if l == 0 {
            let mut out = BTreeMap::new();
            for j in 0..n {
                accumulate(&mut out, (self.index(j, 0), self.index((i + n - j) % n, 0)), self.field().one());
            }
            return Ok(out);
        }
        // a_{i+l−1} ⋯ a_i
        let mut acc = self.coproduct_arrow((i + l - 1) % n)?;
        for t in (0..l - 1).rev() {
            acc = self.mul2(&acc, &self.coproduct_arrow((i + t) % n)?);
        }
        Ok(acc)
    }

    /// `ε` on a basis element.
    pub fn counit(&self, k: usize) -> Scalar {
        match self.pos[k] {
            (0, 0) => self.field().one(),
            _ => self.field().zero(),
        }
    }

    fn antipode_arrow(&self, i: usize) -> Result<Elem> {
        let n = self.n;
        let mut c = -&self.q_pow(i + 1)?;
        if self.mutation == Some(HopfMutation::FlipAntipodeSign { arrow: i }) {
            c = -&c;
        }
        Ok(BTreeMap::from([(self.index((2 * n - i - 1) % n, 1), c)]))
    }

    /// `S` on a basis element; anti-multiplicative.
    pub fn antipode(&self, k: usize) -> Result<Elem> {
        let (i, l) = self.pos[k];
        let n = self.n;
        if l == 0 {
            return Ok(self.unit(self.index((n - i) % n, 0)));
        }
        // S(a_{i+l−1}⋯a_i) = S(a_i)⋯S(a_{i+l−1})
        let mut acc = self.antipode_arrow(i)?;
        for t in 1..l {
            acc = self.mul(&acc, &self.antipode_arrow((i + t) % n)?);
        }
        Ok(acc)
    }

    fn counit_elem(&self, x: &Elem) -> Scalar {
        x.iter().fold(self.field().zero(), |s, (k, c)| &s + &(c * &self.counit(*k)))
    }

    fn coproduct_elem(&self, x: &Elem) -> Result<Tensor2> {
        let mut out = BTreeMap::new();
        for (k, c) in x {
            for (key, v) in self.coproduct(*k)? {
                accumulate(&mut out, key, c * &v);
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Axiom {
    GeneratorRelations,
    Coassociativity,
    LeftCounit,
    RightCounit,
    CoproductMultiplicative,
    CounitMultiplicative,
    Unit,
    LeftAntipode,
    RightAntipode,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub element: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HopfReport {
    pub n: usize,
    pub checks: Vec<AxiomCheck>,
}

impl HopfReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    /// `(axiom, passed, total)` per axiom.
    pub fn summary(&self) -> Vec<(Axiom, usize, usize)> {
        let mut m: BTreeMap<Axiom, (usize, usize)> = BTreeMap::new();
        for c in &self.checks {
            let e = m.entry(c.axiom).or_default();
            e.0 += c.passed as usize;
            e.1 += 1;
        }
        m.into_iter().map(|(a, (p, t))| (a, p, t)).collect()
    }
}

/// Checks the bialgebra and antipode identities on every basis element of `Λₙ` over `ℚ(ζₙ)`.
pub fn verify_hopf_axioms(n: usize) -> Result<HopfReport> {
    verify_hopf_axioms_of(&TaftAlgebra::new(n)?)
}

pub fn verify_hopf_axioms_of(t: &TaftAlgebra) -> Result<HopfReport> {
    let f = t.field();
    let dim = t.dim();
    let mut checks = Vec::new();
    let mut push = |axiom, element: String, passed| checks.push(AxiomCheck { axiom, element, passed });

    let g = t.g()?;
    let x = t.x();
    let mut gn = t.one();
    let mut xn = t.one();
    for _ in 0..t.n {
        gn = t.mul(&gn, &g);
        xn = t.mul(&xn, &x);
    }
    let zeta = t.zeta()?.clone();
    let zgx: Elem = t.mul(&g, &x).into_iter().map(|(k, v)| (k, &v * &zeta)).collect();
    push(Axiom::GeneratorRelations, "g^n".into(), gn == t.one());
    push(Axiom::GeneratorRelations, "x^n".into(), xn.is_empty());
    push(Axiom::GeneratorRelations, "xg".into(), t.mul(&x, &g) == zgx);

    let deltas: Vec<Tensor2> = (0..dim).map(|k| t.coproduct(k)).collect::<Result<_>>()?;
    let antipodes: Vec<Elem> = (0..dim).map(|k| t.antipode(k)).collect::<Result<_>>()?;

    for k in 0..dim {
        let name = t.element_name(k);
        let d = &deltas[k];

        let mut left: Tensor3 = BTreeMap::new();
        let mut right: Tensor3 = BTreeMap::new();
        for ((a, b), c) in d {
            for ((a1, a2), c2) in &deltas[*a] {
                accumulate(&mut left, (*a1, *a2, *b), c * c2);
            }
            for ((b1, b2), c2) in &deltas[*b] {
                accumulate(&mut right, (*a, *b1, *b2), c * c2);
            }
        }
        push(Axiom::Coassociativity, name.clone(), left == right);

        let mut lc = BTreeMap::new();
        let mut rc = BTreeMap::new();
        for ((a, b), c) in d {
            accumulate(&mut lc, *b, c * &t.counit(*a));
            accumulate(&mut rc, *a, c * &t.counit(*b));
        }
        push(Axiom::LeftCounit, name.clone(), lc == t.unit(k));
        push(Axiom::RightCounit, name.clone(), rc == t.unit(k));

        let target: Elem = t.one().into_iter().map(|(j, v)| (j, &v * &t.counit(k))).filter(|(_, v)| !v.is_zero()).collect();
        let mut ls = BTreeMap::new();
        let mut rs = BTreeMap::new();
        for ((a, b), c) in d {
            for (j, v) in t.mul(&antipodes[*a], &t.unit(*b)) {
                accumulate(&mut ls, j, c * &v);
            }
            for (j, v) in t.mul(&t.unit(*a), &antipodes[*b]) {
                accumulate(&mut rs, j, c * &v);
            }
        }
        push(Axiom::LeftAntipode, name.clone(), ls == target);
        push(Axiom::RightAntipode, name.clone(), rs == target);

        for j in 0..dim {
            let prod: Elem = t.mul_basis(k, j).iter().cloned().collect();
            let pair = format!("{name}*{}", t.element_name(j));
            let lhs = t.coproduct_elem(&prod)?;
            let rhs = t.mul2(d, &deltas[j]);
            push(Axiom::CoproductMultiplicative, pair.clone(), lhs == rhs);
            let e = t.counit_elem(&prod);
            push(Axiom::CounitMultiplicative, pair, e == &t.counit(k) * &t.counit(j));
        }
    }
    let one = t.one();
    let one_one: Tensor2 = one
        .keys()
        .flat_map(|a| one.keys().map(move |b| ((*a, *b), f.one())))
        .collect();
    push(Axiom::Unit, "1".into(), t.coproduct_elem(&one)? == one_one && t.counit_elem(&one).is_one());
    Ok(HopfReport { n: t.n, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hopf_axioms_small() {
        for n in 1..=4 {
            let r = verify_hopf_axioms(n).unwrap();
            assert!(r.all_passed(), "n={n}: {:?}", r.first_failure());
        }
    }

    #[test]
    fn counit_values() {
        let t = TaftAlgebra::new(3).unwrap();
        assert!(t.counit(t.index(0, 0)).is_one());
        assert!(t.counit(t.index(1, 0)).is_zero());
        assert!(t.counit(t.index(0, 1)).is_zero());
    }

    #[test]
    fn mutated_antipode_fails() {
        for n in 2..=4 {
            for arrow in 0..n {
                let t = TaftAlgebra::new(n).unwrap().with_mutation(HopfMutation::FlipAntipodeSign { arrow });
                let r = verify_hopf_axioms_of(&t).unwrap();
                assert!(!r.all_passed(), "n={n} arrow={arrow}");
            }
        }
    }

    #[test]
    fn rationals_have_no_root_for_n3() {
        let t = TaftAlgebra::with_field(3, &Field::rationals()).unwrap();
        assert!(t.coproduct(t.index(0, 1)).is_err());
        assert_eq!(t.dim(), 9);
    }
}
