//! Grothendieck rings of `Λₙ` and Chern characters into `HC_{2p}`.
//!
//! `K₀(Λₙ)` has basis the projectives `P_j = N_{j,j−1}`; `K̄₀(Λₙ) ≅ K₀(Γ)` has
//! basis all uniserials `N_{i,u}`, identified with the projective `Γ`-modules
//! `P_{i,u}`. Products come from the Hopf tensor product, either through the
//! closed decomposition formula or by decomposing actual tensor modules.
//! Chern classes are coordinates in the basis `{σᵖ(e)}` of `HC_{2p}`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::scalar::{Field, FieldDescriptor};
use crate::taft::{decompose_serial, indec_module, tensor_module, IndecLabel, Multiset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum K0Ring {
    /// `K₀(Λₙ)`, projective modules only
    ProjLambda(usize),
    /// `K̄₀(Λₙ) ≅ K₀(Γ)`, all modules
    AllLambda(usize),
}

impl K0Ring {
    pub fn n(&self) -> usize {
        match *self {
            K0Ring::ProjLambda(n) | K0Ring::AllLambda(n) => n,
        }
    }
}

/// Integer combination of module classes; `ProjLambda` elements only use projective labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K0Element {
    ring: K0Ring,
    coeffs: BTreeMap<IndecLabel, i64>,
}

impl K0Element {
    pub fn new(ring: K0Ring, coeffs: BTreeMap<IndecLabel, i64>) -> Result<Self> {
        let n = ring.n();
        if n == 0 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        for l in coeffs.keys() {
            if l.i >= n || l.u >= n {
                return Err(Error::InvalidArgument(format!("{l} is not a label for n = {n}")));
            }
            if matches!(ring, K0Ring::ProjLambda(_)) && !l.is_projective(n) {
                return Err(Error::InvalidArgument(format!("{l} is not projective over Λ_{n}")));
            }
        }
        let coeffs = coeffs.into_iter().filter(|(_, c)| *c != 0).collect();
        Ok(K0Element { ring, coeffs })
    }

    pub fn zero(ring: K0Ring) -> Self {
        K0Element { ring, coeffs: BTreeMap::new() }
    }

    /// `[N_l]`
    pub fn basis(ring: K0Ring, l: IndecLabel) -> Result<Self> {
        Self::new(ring, BTreeMap::from([(l, 1)]))
    }

    /// `[P_j]`
    pub fn projective(ring: K0Ring, j: usize) -> Result<Self> {
        let n = ring.n();
        Self::basis(ring, IndecLabel::from_start_len(n, j, n))
    }

    pub fn unit(ring: K0Ring) -> Self {
        match ring {
            K0Ring::AllLambda(_) => Self::basis(ring, IndecLabel::new(0, 0)).expect("valid label"),
            // the trivial module is not projective; the unit of the non-unital K₀(Λₙ) is absent
            K0Ring::ProjLambda(_) => Self::zero(ring),
        }
    }

    pub fn from_multiset(ring: K0Ring, m: &Multiset) -> Result<Self> {
        Self::new(ring, m.iter().map(|(l, c)| (*l, *c as i64)).collect())
    }

    pub fn ring(&self) -> K0Ring {
        self.ring
    }

    pub fn coeffs(&self) -> &BTreeMap<IndecLabel, i64> {
        &self.coeffs
    }

    pub fn get(&self, l: IndecLabel) -> i64 {
        self.coeffs.get(&l).copied().unwrap_or(0)
    }

    /// Total dimension `Σ c_l · len(l)`.
    pub fn dim(&self) -> i64 {
        let n = self.ring.n();
        self.coeffs.iter().map(|(l, c)| c * l.len(n) as i64).sum()
    }

    pub fn add(&self, other: &K0Element) -> Result<K0Element> {
        check_ring(self, other)?;
        let mut c = self.coeffs.clone();
        for (l, v) in &other.coeffs {
            *c.entry(*l).or_insert(0) += v;
        }
        K0Element::new(self.ring, c)
    }

    pub fn scale(&self, k: i64) -> K0Element {
        K0Element {
            ring: self.ring,
            coeffs: self.coeffs.iter().filter(|_| k != 0).map(|(l, c)| (*l, c * k)).collect(),
        }
    }

    /// The same class in `K̄₀`.
    pub fn to_all(&self) -> K0Element {
        K0Element { ring: K0Ring::AllLambda(self.ring.n()), coeffs: self.coeffs.clone() }
    }

    /// Parses `"2*P[0] + P[1]"`, `"P[0,1] - N[1,1]"`; `P[j]` is the projective with top `j`.
    pub fn parse(ring: K0Ring, s: &str) -> Result<Self> {
        let n = ring.n();
        let mut coeffs = BTreeMap::new();
        let cleaned = s.replace(' ', "");
        if cleaned.is_empty() || cleaned == "0" {
            return Ok(Self::zero(ring));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = cleaned.as_bytes();
        let mut depth = 0;
        for (k, &ch) in bytes.iter().enumerate() {
            match ch {
                b'[' => depth += 1,
                b']' => depth -= 1,
                b'+' | b'-' if depth == 0 && k > start => {
                    terms.push(&cleaned[start..k]);
                    start = k;
                }
                _ => {}
            }
        }
        terms.push(&cleaned[start..]);
        for term in terms {
            let (sign, body) = match term.as_bytes().first() {
                Some(b'-') => (-1, &term[1..]),
                Some(b'+') => (1, &term[1..]),
                _ => (1, term),
            };
            let (coef, gen) = match body.split_once('*') {
                Some((c, g)) => (c.parse::<i64>().map_err(|_| Error::Parse(format!("bad coefficient in {term:?}")))?, g),
                None => (1, body),
            };
            let label = parse_generator(n, gen)?;
            *coeffs.entry(label).or_insert(0) += sign * coef;
        }
        Self::new(ring, coeffs)
    }
}

fn parse_generator(n: usize, g: &str) -> Result<IndecLabel> {
    let bad = || Error::Parse(format!("expected P[j], P[i,u] or N[i,u], got {g:?}"));
    let (kind, rest) = g.split_at(1.min(g.len()));
    let inner = rest.strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
    let nums: Vec<usize> = inner.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?;
    let label = match (kind, nums.as_slice()) {
        ("P", [j]) if *j < n => IndecLabel::from_start_len(n, *j, n),
        ("P", [j]) => return Err(Error::InvalidArgument(format!("P[{j}] is not a projective for n = {n}"))),
        ("P" | "N", [i, u]) => IndecLabel::new(*i, *u),
        _ => return Err(bad()),
    };
    if label.i >= n || label.u >= n {
        return Err(Error::InvalidArgument(format!("{label} is not a label for n = {n}")));
    }
    Ok(label)
}

impl fmt::Display for K0Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (l, c)) in self.coeffs.iter().enumerate() {
            let name = match self.ring {
                K0Ring::ProjLambda(_) => format!("P[{}]", l.i),
                K0Ring::AllLambda(_) => format!("P[{},{}]", l.i, l.u),
            };
            match (k, *c) {
                (0, 1) => write!(f, "{name}")?,
                (0, -1) => write!(f, "-{name}")?,
                (0, c) => write!(f, "{c}*{name}")?,
                (_, 1) => write!(f, " + {name}")?,
                (_, -1) => write!(f, " - {name}")?,
                (_, c) if c < 0 => write!(f, " - {}*{name}", -c)?,
                (_, c) => write!(f, " + {c}*{name}")?,
            }
        }
        Ok(())
    }
}

impl K0Element {
    pub fn to_json_value(&self) -> serde_json::Value {
        let (ring, n) = match self.ring {
            K0Ring::ProjLambda(n) => ("K0(Lambda)", n),
            K0Ring::AllLambda(n) => ("K0(Gamma)", n),
        };
        json!({
            "ring": ring,
            "n": n,
            "terms": self.coeffs.iter().map(|(l, c)| json!({"label": l.to_string(), "coeff": c})).collect::<Vec<_>>(),
            "dim": self.dim(),
        })
    }
}

fn check_ring(a: &K0Element, b: &K0Element) -> Result<()> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch(format!("{:?} vs {:?}", a.ring, b.ring)));
    }
    Ok(())
}

/// Decomposition of `N_a ⊗ N_b` from the closed formula.
///
/// Labels are lifted to `(start, length)`; the factors are ordered so that
/// the second is not longer than the first, with `s = (len a − 1) + (len b − 1)`:
/// for `s ≤ n−1` the summands are `N_{i+j+l, u+v−l}`, `0 ≤ l ≤ len b − 1`;
/// for `e = s − (n−1) ≥ 0` they are the projectives with tops `i+j+l`,
/// `0 ≤ l ≤ e`, and `N_{i+j+m, u+v−m}` for `e < m ≤ len b − 1`.
pub fn product_formula(n: usize, a: IndecLabel, b: IndecLabel) -> Multiset {
    let (a, b) = if a.len(n) >= b.len(n) { (a, b) } else { (b, a) };
    let (i, j) = (a.i, b.i);
    let (la, lb) = (a.len(n) - 1, b.len(n) - 1);
    let s = la + lb;
    // u + v as integers after lifting u = i + la, v = j + lb
    let uv = i + j + s;
    let mut out = Multiset::new();
    let mut push = |start: usize, end: usize| {
        *out.entry(IndecLabel::new(start % n, end % n)).or_insert(0) += 1;
    };
    if s <= n - 1 {
        for l in 0..=lb {
            push(i + j + l, uv - l);
        }
    } else {
        let e = s - (n - 1);
        for l in 0..=e {
            push(i + j + l, i + j + l + n - 1);
        }
        for m in e + 1..=lb {
            push(i + j + m, uv - m);
        }
    }
    out
}

/// `N_a ⊗ N_b` decomposed into uniserials over `ℚ(ζₙ)`.
pub fn k0_product_oracle(a: IndecLabel, b: IndecLabel, n: usize) -> Result<Multiset> {
    let field = Field::new(FieldDescriptor::Cyclotomic(n as u32))?;
    let ma = indec_module(n, a, &field)?;
    let mb = indec_module(n, b, &field)?;
    decompose_serial(&tensor_module(&ma, &mb)?)
}

fn bilinear(a: &K0Element, b: &K0Element, basis_product: impl Fn(IndecLabel, IndecLabel) -> Result<Multiset>) -> Result<K0Element> {
    check_ring(a, b)?;
    let mut c: BTreeMap<IndecLabel, i64> = BTreeMap::new();
    for (x, cx) in &a.coeffs {
        for (y, cy) in &b.coeffs {
            for (z, m) in basis_product(*x, *y)? {
                *c.entry(z).or_insert(0) += cx * cy * m as i64;
            }
        }
    }
    K0Element::new(a.ring, c)
}

/// Product in `K̄₀` through the closed formula; in `K₀(Λₙ)` through decomposed tensor modules.
pub fn k0_product(a: &K0Element, b: &K0Element) -> Result<K0Element> {
    let n = a.ring.n();
    match a.ring {
        K0Ring::AllLambda(_) => bilinear(a, b, |x, y| Ok(product_formula(n, x, y))),
        K0Ring::ProjLambda(_) => bilinear(a, b, |x, y| k0_product_oracle(x, y, n)),
    }
}

/// Product of arbitrary elements through decomposed tensor modules.
pub fn k0_product_via_oracle(a: &K0Element, b: &K0Element) -> Result<K0Element> {
    let n = a.ring.n();
    bilinear(a, b, |x, y| k0_product_oracle(x, y, n))
}

/// Basis pairs `(a, b)` where the closed formula and the tensor decomposition differ.
pub fn product_formula_mismatches(n: usize) -> Result<Vec<(IndecLabel, IndecLabel, Multiset, Multiset)>> {
    let labels = IndecLabel::all(n);
    let pairs: Vec<(IndecLabel, IndecLabel)> =
        labels.iter().flat_map(|&a| labels.iter().map(move |&b| (a, b))).collect();
    let results: Vec<Result<Option<_>>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let formula = product_formula(n, a, b);
            let oracle = k0_product_oracle(a, b, n)?;
            Ok((formula != oracle).then_some((a, b, formula, oracle)))
        })
        .collect();
    results.into_iter().filter_map(Result::transpose).collect()
}

/// `(y_p, z_p, y_{p−1}, z_{p−1}, …, y_1, z_1, y_0)` with `y_k = (−1)ᵏ(2k)!/k!` and `z_k = −y_k/2`.
pub fn sigma_coefficients(p: usize) -> Result<Vec<i64>> {
    let y = |k: usize| -> Option<i64> {
        let mut v: i64 = 1;
        for t in k + 1..=2 * k {
            v = v.checked_mul(t as i64)?;
        }
        Some(if k % 2 == 0 { v } else { -v })
    };
    let mut out = Vec::with_capacity(2 * p + 1);
    for k in (1..=p).rev() {
        let yk = y(k).ok_or_else(|| Error::InvalidArgument(format!("σ coefficients overflow at p = {p}")))?;
        out.push(yk);
        out.push(-yk / 2);
    }
    out.push(1);
    Ok(out)
}

/// Coordinates of a class of `HC_{2p}` in the basis `{σᵖ(e)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernClass {
    pub p: usize,
    pub ring: K0Ring,
    pub coeffs: BTreeMap<IndecLabel, BigRational>,
}

impl ChernClass {
    /// Coordinates in basis order: vertices `0..n` for `Λₙ`, labels `(i,u)` for `Γ`.
    pub fn vector(&self) -> Vec<BigRational> {
        let n = self.ring.n();
        let labels: Vec<IndecLabel> = match self.ring {
            K0Ring::ProjLambda(_) => (0..n).map(|j| IndecLabel::from_start_len(n, j, n)).collect(),
            K0Ring::AllLambda(_) => IndecLabel::all(n),
        };
        labels.iter().map(|l| self.coeffs.get(l).cloned().unwrap_or_else(BigRational::zero)).collect()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let mut coeffs = serde_json::Map::new();
        for (l, c) in &self.coeffs {
            let key = match self.ring {
                K0Ring::ProjLambda(_) => format!("sigma[{}]", l.i),
                K0Ring::AllLambda(_) => format!("sigma[{},{}]", l.i, l.u),
            };
            coeffs.insert(key, json!(c.to_string()));
        }
        json!({"basis": "sigma", "p": self.p, "coeffs": coeffs})
    }
}

/// `ch_{0,p}`: `[P_j] ↦ σⱼᵖ` on `K₀(Λₙ)`, `[N_{i,u}] ↦ σ_{i,u}ᵖ` on `K̄₀(Λₙ)`.
pub fn chern(x: &K0Element, p: usize) -> ChernClass {
    let coeffs = x.coeffs.iter().map(|(l, c)| (*l, BigRational::from_integer((*c).into()))).collect();
    ChernClass { p, ring: x.ring, coeffs }
}

/// `ch_{0,p}([L₁] ⊗ … ⊗ [L_r])` for projective `Λₙ`-modules, the product taken in `K̄₀`.
pub fn chern_of_tensor(factors: &[K0Element], p: usize) -> Result<ChernClass> {
    let Some((first, rest)) = factors.split_first() else {
        return Err(Error::InvalidArgument("empty tensor product".into()));
    };
    let n = first.ring.n();
    let mut acc = first.to_all();
    for f in rest {
        if f.ring != K0Ring::ProjLambda(n) {
            return Err(Error::RingMismatch("tensor factors must be projective Λₙ-classes".into()));
        }
        acc = k0_product(&acc, &f.to_all())?;
    }
    let proj = K0Element::new(K0Ring::ProjLambda(n), acc.coeffs)?;
    Ok(chern(&proj, p))
}

/// `(1/n²)·∏ dim L_i` times the all-ones vector.
pub fn chern_tensor_prediction(factors: &[K0Element], p: usize) -> Result<ChernClass> {
    let Some(first) = factors.first() else {
        return Err(Error::InvalidArgument("empty tensor product".into()));
    };
    let n = first.ring.n();
    let prod = factors.iter().fold(BigRational::one(), |acc, f| acc * BigRational::from_integer(f.dim().into()));
    let c = prod / BigRational::from_integer(((n * n) as i64).into());
    let coeffs = (0..n).map(|j| (IndecLabel::from_start_len(n, j, n), c.clone())).filter(|(_, c)| !c.is_zero()).collect();
    Ok(ChernClass { p, ring: K0Ring::ProjLambda(n), coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_coefficient_values() {
        assert_eq!(sigma_coefficients(0).unwrap(), vec![1]);
        assert_eq!(sigma_coefficients(1).unwrap(), vec![-2, 1, 1]);
        assert_eq!(sigma_coefficients(2).unwrap(), vec![12, -6, -2, 1, 1]);
        for p in 1..=8 {
            let s = sigma_coefficients(p).unwrap();
            let prev = sigma_coefficients(p - 1).unwrap();
            assert_eq!(s[0], -2 * (2 * p as i64 - 1) * prev[0]);
            assert_eq!(s[1], -s[0] / 2);
            assert_eq!(&s[2..], &prev[..]);
        }
    }

    #[test]
    fn formula_matches_tensor_decomposition() {
        for n in 2..=3 {
            assert!(product_formula_mismatches(n).unwrap().is_empty(), "n={n}");
        }
    }

    #[test]
    fn small_products() {
        let r = K0Ring::AllLambda(2);
        let x = K0Element::parse(r, "P[0,1]").unwrap();
        assert_eq!(k0_product(&x, &x).unwrap(), K0Element::parse(r, "P[0,1] + P[1,0]").unwrap());
        assert_eq!(k0_product(&x, &K0Element::unit(r)).unwrap(), x);
        let m = k0_product_oracle(IndecLabel::new(0, 1), IndecLabel::new(1, 0), 2).unwrap();
        assert_eq!(m.iter().map(|(l, c)| l.len(2) * c).sum::<usize>(), 4);
    }

    #[test]
    fn parse_and_display() {
        let r = K0Ring::ProjLambda(2);
        let x = K0Element::parse(r, "2*P[0] + P[1]").unwrap();
        assert_eq!(x.to_string(), "2*P[0] + P[1]");
        assert_eq!(chern(&x, 1).vector(), vec![BigRational::from_integer(2.into()), BigRational::one()]);
        assert!(K0Element::parse(r, "P[0,0]").is_err());
        let y = K0Element::parse(K0Ring::AllLambda(3), "P[0,1] - 3*N[1,1]").unwrap();
        assert_eq!((y.get(IndecLabel::new(0, 1)), y.get(IndecLabel::new(1, 1))), (1, -3));
        assert!(matches!(k0_product(&x, &y), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn tensor_of_projectives() {
        let r = K0Ring::ProjLambda(3);
        let f = [K0Element::projective(r, 0).unwrap(), K0Element::projective(r, 2).unwrap()];
        assert_eq!(chern_of_tensor(&f, 1).unwrap(), chern_tensor_prediction(&f, 1).unwrap());
    }
}
