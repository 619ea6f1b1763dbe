//! The Auslander algebra `Γ` of `Λₙ`, built twice.
//!
//! The oracle is `End(⊕ N_{i,u})ᵒᵖ` assembled from Hom spaces between the
//! uniserial modules; the presentation is the bound quiver with anticommuting
//! squares and vanishing boundary triangles. Vertex `(i,u)` stands for `N_{i,u}`
//! and a path `x → y` for a morphism `N_y → N_x`. Projectives are
//! `P_x = e_x Γ`, spanned by the paths leaving `x`.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde_json::json;

use crate::cyclic::{hc_bicomplex_oracle, HCQuery};
use crate::error::{Error, Result};
use crate::hochschild::{hh_bar_oracle, HHQuery};
use crate::linalg::{ChainPiece, Echelon, GradedChainComplex, HomologyTable, Provenance, SparseMatrix};
use crate::quiver::{AlgebraBasis, AlgebraPresentation, Path, Quiver, Relation};
use crate::scalar::{Field, FieldDescriptor, Scalar};
use crate::taft::{hom_basis, indec_module, IndecLabel, TaftModule};

type Morphism = Vec<SparseMatrix>;
type Vector = Vec<(usize, Scalar)>;

/// Invariants of `End(⊕ N)ᵒᵖ` read off from Hom spaces and their composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoAlgebra {
    /// `hom_dims[x][y] = dim Hom(N_y, N_x)`
    pub hom_dims: Vec<Vec<usize>>,
    /// `radical_layers[k] = dim radᵏ / radᵏ⁺¹`
    pub radical_layers: Vec<usize>,
    /// `irreducible[x][y] = dim (rad / rad²)(x, y)`
    pub irreducible: Vec<Vec<usize>>,
}

impl EndoAlgebra {
    pub fn dim(&self) -> usize {
        self.hom_dims.iter().flatten().sum()
    }
}

#[derive(Clone, Debug)]
pub struct AuslanderAlgebra {
    n: usize,
    labels: Vec<IndecLabel>,
    presented: AlgebraBasis,
    endo: EndoAlgebra,
}

impl AuslanderAlgebra {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertex labels; vertex `v` is `labels()[v]`.
    pub fn labels(&self) -> &[IndecLabel] {
        &self.labels
    }

    pub fn vertex(&self, label: IndecLabel) -> usize {
        label.i * self.n + label.u
    }

    pub fn presented(&self) -> &AlgebraBasis {
        &self.presented
    }

    pub fn quiver(&self) -> &Quiver {
        self.presented.quiver()
    }

    pub fn endo(&self) -> &EndoAlgebra {
        &self.endo
    }

    /// `counts[x][y]` = number of arrows `x → y`.
    pub fn arrow_counts(&self) -> Vec<Vec<usize>> {
        let q = self.quiver();
        let mut c = vec![vec![0; q.num_vertices()]; q.num_vertices()];
        for a in q.arrows() {
            c[a.src][a.tgt] += 1;
        }
        c
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        self.presented.presentation().to_json_value()
    }
}

/// The labelling `(a, b) ↔ N_{−a, −b−1}` in which `S_{a,a}` has a length-one
/// resolution `P_{a−1,a} → P_{a,a}`.
pub fn to_ar_label(n: usize, l: IndecLabel) -> (usize, usize) {
    ((n - l.i) % n, (2 * n - l.u - 1) % n)
}

pub fn from_ar_label(n: usize, a: usize, b: usize) -> IndecLabel {
    IndecLabel::new((n - a % n) % n, (2 * n - b % n - 1) % n)
}

fn vertex_name(l: IndecLabel) -> String {
    format!("e[{},{}]", l.i, l.u)
}

/// The bound quiver presentation of `Γ` over ℚ.
pub fn auslander_presentation(n: usize) -> Result<AlgebraPresentation> {
    if n < 2 {
        return Err(Error::InvalidArgument("the Auslander algebra needs n ≥ 2".into()));
    }
    let f = Field::rationals();
    let labels = IndecLabel::all(n);
    let mut arrows = Vec::new();
    for l in &labels {
        let (i, u) = (l.i, l.u);
        if u != (i + n - 1) % n {
            arrows.push((format!("a[{i},{u}]"), vertex_name(*l), vertex_name(IndecLabel::new(i, (u + 1) % n))));
        }
        if u != i {
            arrows.push((format!("b[{i},{u}]"), vertex_name(*l), vertex_name(IndecLabel::new((i + 1) % n, u))));
        }
    }
    let quiver = Quiver::new(labels.iter().map(|l| vertex_name(*l)).collect(), arrows)?;
    let path = |ids: [String; 2]| Path::from_ids(&quiver, &[ids[0].as_str(), ids[1].as_str()]);
    let mut relations = Vec::new();
    for l in &labels {
        let (i, u) = (l.i, l.u);
        let (i1, u1) = ((i + 1) % n, (u + 1) % n);
        let len = l.len(n);
        if u == i {
            relations.push(Relation::new(vec![(f.one(), path([format!("a[{i},{i}]"), format!("b[{i},{u1}]")])?)]));
        } else if (2..n).contains(&len) {
            relations.push(Relation::new(vec![
                (f.one(), path([format!("a[{i},{u}]"), format!("b[{i},{u1}]")])?),
                (f.one(), path([format!("b[{i},{u}]"), format!("a[{i1},{u}]")])?),
            ]));
        }
    }
    AlgebraPresentation::bound(quiver, relations, &f)
}

fn flatten(f: &Morphism) -> Vector {
    let mut out = Vec::new();
    let mut off = 0;
    for m in f {
        out.extend(m.entries().map(|(r, c, v)| (off + r * m.cols() + c, v.clone())));
        off += m.rows() * m.cols();
    }
    out
}

fn compose(f: &Morphism, g: &Morphism) -> Morphism {
    f.iter().zip(g).map(|(a, b)| a.mul(b)).collect()
}

/// Basis of the span of `items`, keeping the first independent ones.
fn span(field: &Field, items: impl IntoIterator<Item = Morphism>) -> Vec<Morphism> {
    let mut e = Echelon::new(field);
    items.into_iter().filter(|m| e.insert(&flatten(m))).collect()
}

/// `End(⊕ N_{i,u})ᵒᵖ` over ℚ, through Hom spaces between uniserials.
pub fn endo_oracle(n: usize) -> Result<EndoAlgebra> {
    if n < 2 {
        return Err(Error::InvalidArgument("the Auslander algebra needs n ≥ 2".into()));
    }
    let f = Field::rationals();
    let labels = IndecLabel::all(n);
    let mods: Vec<TaftModule> = labels.iter().map(|&l| indec_module(n, l, &f)).collect::<Result<_>>()?;
    let m = labels.len();
    let hom: Vec<Vec<Vec<Morphism>>> = (0..m)
        .into_par_iter()
        .map(|x| (0..m).map(|y| hom_basis(&mods[y], &mods[x])).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    for (x, row) in hom.iter().enumerate() {
        if row[x].len() != 1 {
            return Err(Error::InvalidArgument(format!("End({}) is not one-dimensional", labels[x])));
        }
    }
    let hom_dims: Vec<Vec<usize>> = hom.iter().map(|r| r.iter().map(Vec::len).collect()).collect();
    let rad1: Vec<Vec<Vec<Morphism>>> = (0..m)
        .map(|x| (0..m).map(|y| if x == y { Vec::new() } else { hom[x][y].clone() }).collect())
        .collect();
    let size = |r: &Vec<Vec<Vec<Morphism>>>| r.iter().flatten().map(Vec::len).sum::<usize>();
    let mut layers = vec![size(&hom) - size(&rad1)];
    let mut cur = rad1.clone();
    let mut irreducible = None;
    while size(&cur) > 0 {
        let next: Vec<Vec<Vec<Morphism>>> = (0..m)
            .into_par_iter()
            .map(|x| {
                (0..m)
                    .map(|z| {
                        let products = (0..m).flat_map(|y| {
                            let (c, r) = (&cur[x][y], &rad1[y][z]);
                            c.iter().flat_map(move |a| r.iter().map(move |b| compose(a, b)))
                        });
                        span(&f, products)
                    })
                    .collect()
            })
            .collect();
        if irreducible.is_none() {
            irreducible = Some(
                (0..m).map(|x| (0..m).map(|y| rad1[x][y].len() - next[x][y].len()).collect()).collect(),
            );
        }
        layers.push(size(&cur) - size(&next));
        if layers.len() > 4 * m {
            return Err(Error::InvalidArgument("radical is not nilpotent".into()));
        }
        cur = next;
    }
    Ok(EndoAlgebra { hom_dims, radical_layers: layers, irreducible: irreducible.unwrap_or_default() })
}

/// Builds both constructions and checks that they agree.
pub fn build_auslander(n: usize) -> Result<AuslanderAlgebra> {
    let presentation = auslander_presentation(n)?;
    let presented = AlgebraBasis::build(&presentation)?;
    let endo = endo_oracle(n)?;
    let g = AuslanderAlgebra { n, labels: IndecLabel::all(n), presented, endo };
    if g.presented.dim() != g.endo.dim() {
        return Err(Error::PresentationMismatch(format!(
            "dimension {} vs {}",
            g.presented.dim(),
            g.endo.dim()
        )));
    }
    if g.presented.degree_dims() != g.endo.radical_layers {
        return Err(Error::PresentationMismatch(format!(
            "graded dimensions {:?} vs radical layers {:?}",
            g.presented.degree_dims(),
            g.endo.radical_layers
        )));
    }
    if g.presented.cartan_matrix() != g.endo.hom_dims {
        return Err(Error::PresentationMismatch("Cartan matrices differ".into()));
    }
    if g.arrow_counts() != g.endo.irreducible {
        return Err(Error::PresentationMismatch("arrows differ from irreducible morphisms".into()));
    }
    Ok(g)
}

/// Free right module `⊕ₖ P_{z_k}` over a basic algebra, in path coordinates.
struct FreeModule<'a> {
    basis: &'a AlgebraBasis,
    summands: Vec<usize>,
    offsets: Vec<usize>,
    from: &'a [Vec<usize>],
    local: &'a [HashMap<usize, usize>],
}

impl<'a> FreeModule<'a> {
    fn new(basis: &'a AlgebraBasis, from: &'a [Vec<usize>], local: &'a [HashMap<usize, usize>], summands: Vec<usize>) -> Self {
        let mut offsets = vec![0];
        for &z in &summands {
            offsets.push(offsets.last().unwrap() + from[z].len());
        }
        FreeModule { basis, summands, offsets, from, local }
    }

    fn dim(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    fn decode(&self, coord: usize) -> (usize, usize) {
        let k = self.offsets.partition_point(|&o| o <= coord) - 1;
        (k, self.from[self.summands[k]][coord - self.offsets[k]])
    }

    /// `v · b` for a basis element `b`.
    fn act(&self, v: &[(usize, Scalar)], b: usize) -> Vector {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (coord, x) in v {
            let (k, c) = self.decode(*coord);
            let z = self.summands[k];
            for (d, s) in self.basis.mul(c, b) {
                let e = acc.entry(self.offsets[k] + self.local[z][d]).or_insert_with(|| self.basis.field().zero());
                *e = &*e + &(x * s);
            }
        }
        acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
    }
}

/// Terms of the minimal projective resolution of `S_x`, as lists of vertices.
pub fn minimal_resolution(basis: &AlgebraBasis, x: usize) -> Result<Vec<Vec<usize>>> {
    let q = basis.quiver();
    let nv = q.num_vertices();
    let from: Vec<Vec<usize>> =
        (0..nv).map(|z| (0..basis.dim()).filter(|&k| basis.element(k).src() == z).collect()).collect();
    let local: Vec<HashMap<usize, usize>> =
        from.iter().map(|l| l.iter().enumerate().map(|(p, &k)| (k, p)).collect()).collect();
    let arrows: Vec<usize> = (0..q.num_arrows())
        .map(|a| basis.index_of(&Path::arrow(q, a)).ok_or_else(|| Error::InvalidPresentation("an arrow vanishes".into())))
        .collect::<Result<_>>()?;
    let one = basis.field().one();
    let mut terms = vec![vec![x]];
    let mut free = FreeModule::new(basis, &from, &local, vec![x]);
    let mut kernel: Vec<Vector> = from[x]
        .iter()
        .enumerate()
        .filter(|(_, &k)| basis.degree(k) > 0)
        .map(|(p, _)| vec![(p, one.clone())])
        .collect();
    while !kernel.is_empty() {
        if terms.len() > basis.dim() + 2 {
            return Err(Error::InvalidArgument("resolution does not terminate".into()));
        }
        let mut gens: Vec<(usize, Vector)> = Vec::new();
        for z in 0..nv {
            let mut e = Echelon::new(basis.field());
            for v in &kernel {
                for (&a, arrow) in arrows.iter().zip(q.arrows()) {
                    if arrow.tgt == z {
                        e.insert(&free.act(v, a));
                    }
                }
            }
            let ez = basis.idempotent(z);
            for v in &kernel {
                let w = free.act(v, ez);
                if e.insert(&w) {
                    gens.push((z, w));
                }
            }
        }
        let cover = FreeModule::new(basis, &from, &local, gens.iter().map(|(z, _)| *z).collect());
        let mut trip = Vec::new();
        for (j, (z, w)) in gens.iter().enumerate() {
            for (l, &p) in from[*z].iter().enumerate() {
                for (r, v) in free.act(w, p) {
                    trip.push((r, cover.offsets[j] + l, v));
                }
            }
        }
        let phi = SparseMatrix::from_triplets(basis.field(), free.dim(), cover.dim(), trip);
        kernel = phi
            .kernel()
            .into_iter()
            .map(|v| v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        terms.push(cover.summands.clone());
        free = cover;
    }
    Ok(terms)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionReport {
    pub simple: IndecLabel,
    /// `terms[p]` = projectives `P_y` in homological degree `p`
    pub terms: Vec<BTreeMap<IndecLabel, usize>>,
    pub length: usize,
}

impl ResolutionReport {
    pub fn to_json_value(&self) -> serde_json::Value {
        json!({
            "simple": self.simple.to_string(),
            "length": self.length,
            "terms": self.terms.iter().map(|t| {
                t.iter().map(|(l, m)| json!({"projective": l.to_string(), "mult": m})).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

/// The expected minimal projective resolution of `S_x`, by the distance
/// `j = a − b` of the AR label `(a, b)` of `x`: `P_{a,a} ← P_{a−1,a}` for
/// `j = 0`; `P_{a,a−1} ← P_{a,a−2} ← P_{a−1,a−2}` for `j = 1`; and
/// `P_{a,a−j} ← P_{a−1,a−j} ⊕ P_{a,a−j−1} ← P_{a−1,a−j−1}` otherwise.
pub fn predicted_resolution(n: usize, label: IndecLabel) -> Vec<BTreeMap<IndecLabel, usize>> {
    let (a, b) = to_ar_label(n, label);
    let m = n as i64;
    let (a, j) = (a as i64, (a as i64 - b as i64).rem_euclid(m));
    let term = |ls: &[(i64, i64)]| {
        let mut t = BTreeMap::new();
        for &(x, y) in ls {
            *t.entry(from_ar_label(n, x.rem_euclid(m) as usize, y.rem_euclid(m) as usize)).or_insert(0) += 1;
        }
        t
    };
    match j {
        0 => vec![term(&[(a, a)]), term(&[(a - 1, a)])],
        1 => vec![term(&[(a, a - 1)]), term(&[(a, a - 2)]), term(&[(a - 1, a - 2)])],
        _ => vec![term(&[(a, a - j)]), term(&[(a - 1, a - j), (a, a - j - 1)]), term(&[(a - 1, a - j - 1)])],
    }
}

pub fn resolve_simple(g: &AuslanderAlgebra, label: IndecLabel) -> Result<ResolutionReport> {
    if label.i >= g.n || label.u >= g.n {
        return Err(Error::InvalidArgument(format!("{label} is not a vertex for n = {}", g.n)));
    }
    let terms = minimal_resolution(&g.presented, g.vertex(label))?;
    let terms: Vec<BTreeMap<IndecLabel, usize>> = terms
        .into_iter()
        .map(|t| {
            let mut m = BTreeMap::new();
            for v in t {
                *m.entry(g.labels[v]).or_insert(0) += 1;
            }
            m
        })
        .collect();
    Ok(ResolutionReport { simple: label, length: terms.len() - 1, terms })
}

/// `Ext^p(S_x, S_y)`, read off minimal resolutions; only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtTable {
    pub n: usize,
    pub entries: BTreeMap<(IndecLabel, IndecLabel, usize), usize>,
}

impl ExtTable {
    pub fn get(&self, x: IndecLabel, y: IndecLabel, p: usize) -> usize {
        self.entries.get(&(x, y, p)).copied().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.entries.keys().map(|k| k.2).max().unwrap_or(0)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries
                .iter()
                .map(|((x, y, p), d)| json!({"from": x.to_string(), "to": y.to_string(), "p": p, "dim": d}))
                .collect(),
        )
    }
}

pub fn ext_table(g: &AuslanderAlgebra) -> Result<ExtTable> {
    let reports: Vec<ResolutionReport> =
        g.labels.par_iter().map(|&l| resolve_simple(g, l)).collect::<Result<_>>()?;
    let mut entries = BTreeMap::new();
    for r in reports {
        for (p, t) in r.terms.iter().enumerate() {
            for (&y, &m) in t {
                entries.insert((r.simple, y, p), m);
            }
        }
    }
    Ok(ExtTable { n: g.n, entries })
}

/// `R_p` = pairs `(x, y)` with multiplicity `dim Ext^p(S_x, S_y)`, for `p ≤ max(3, top)`.
pub fn happel_terms(ext: &ExtTable) -> Vec<BTreeMap<(IndecLabel, IndecLabel), usize>> {
    let mut terms = vec![BTreeMap::new(); ext.max_degree().max(3) + 1];
    for (&(x, y, p), &d) in &ext.entries {
        terms[p].insert((x, y), d);
    }
    terms
}

pub fn happel_terms_json(terms: &[BTreeMap<(IndecLabel, IndecLabel), usize>]) -> serde_json::Value {
    serde_json::Value::Array(
        terms
            .iter()
            .enumerate()
            .map(|(p, t)| {
                json!({
                    "p": p,
                    "count": t.values().sum::<usize>(),
                    "pairs": t.iter().map(|((x, y), m)| json!({"from": x.to_string(), "to": y.to_string(), "mult": m})).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

/// `dim Γ ⊗_{Γᵉ} R_p`: a pair `(x, y)` contributes `dim e_y Γ e_x`.
pub fn happel_term_dims(g: &AuslanderAlgebra, terms: &[BTreeMap<(IndecLabel, IndecLabel), usize>]) -> Vec<usize> {
    let c = g.presented.cartan_matrix();
    terms
        .iter()
        .map(|t| t.iter().map(|((x, y), m)| m * c[g.vertex(*y)][g.vertex(*x)]).sum())
        .collect()
}

/// `Γ ⊗_{Γᵉ} R_•` for the resolution with generators in vertices, arrows and
/// relations; the generator pairs are checked against `Ext^{≤2}`.
pub fn happel_complex(g: &AuslanderAlgebra, ext: &ExtTable) -> Result<GradedChainComplex> {
    let basis = &g.presented;
    let q = basis.quiver();
    let field = basis.field().clone();
    let rels = basis.presentation().relations();
    let terms = happel_terms(ext);
    let mut gens: Vec<BTreeMap<(IndecLabel, IndecLabel), usize>> = vec![BTreeMap::new(); 3];
    for l in &g.labels {
        gens[0].insert((*l, *l), 1);
    }
    for a in q.arrows() {
        *gens[1].entry((g.labels[a.src], g.labels[a.tgt])).or_insert(0) += 1;
    }
    for r in rels {
        let p = &r.terms[0].1;
        *gens[2].entry((g.labels[p.src()], g.labels[p.tgt()])).or_insert(0) += 1;
    }
    if gens[..] != terms[..3] || terms[3..].iter().any(|t| !t.is_empty()) {
        return Err(Error::PresentationMismatch("resolution generators differ from Ext".into()));
    }
    let unit = |k: usize| vec![(k, field.one())];
    let nf = |arrows: &[usize], v: usize| {
        if arrows.is_empty() {
            unit(basis.idempotent(v))
        } else {
            basis.normal_form(&Path::from_arrows(q, arrows).expect("subpath of a relation"))
        }
    };
    // generators: (kind, index, src, tgt, degree); the summand is e_tgt Γ e_src
    let mut generators: Vec<(usize, usize, usize, usize, usize)> = Vec::new();
    for v in 0..q.num_vertices() {
        generators.push((0, v, v, v, 0));
    }
    for (k, a) in q.arrows().iter().enumerate() {
        generators.push((1, k, a.src, a.tgt, 1));
    }
    for (k, r) in rels.iter().enumerate() {
        let p = &r.terms[0].1;
        generators.push((2, k, p.src(), p.tgt(), p.len()));
    }
    let max_q = basis.top_degree() + rels.iter().filter_map(Relation::degree).max().unwrap_or(1);
    let mut complex = GradedChainComplex::new(&field, 2, max_q);
    for qd in 0..=max_q {
        // chains[p] = (generator, z) with z : tgt → src of degree qd − deg(generator)
        let mut chains: Vec<Vec<(usize, usize)>> = vec![Vec::new(); 3];
        for (gi, &(kind, _, s, t, d)) in generators.iter().enumerate() {
            if d > qd {
                continue;
            }
            for z in basis.degree_range(qd - d) {
                let e = basis.element(z);
                if e.src() == t && e.tgt() == s {
                    chains[kind].push((gi, z));
                }
            }
        }
        let index: Vec<HashMap<(usize, usize), usize>> =
            chains.iter().map(|c| c.iter().enumerate().map(|(k, &x)| (x, k)).collect()).collect();
        let vertex_gen = |v: usize| v;
        let arrow_gen = |a: usize| q.num_vertices() + a;
        let mut d1 = Vec::new();
        for (col, &(gi, z)) in chains[1].iter().enumerate() {
            let (_, a, s, t, _) = generators[gi];
            let av = basis.normal_form(&Path::arrow(q, a));
            for (k, c) in basis.mul_vec(&unit(z), &av) {
                d1.push((index[0][&(vertex_gen(t), k)], col, c));
            }
            for (k, c) in basis.mul_vec(&av, &unit(z)) {
                d1.push((index[0][&(vertex_gen(s), k)], col, -&c));
            }
        }
        let mut d2 = Vec::new();
        for (col, &(gi, z)) in chains[2].iter().enumerate() {
            let r = &rels[generators[gi].1];
            for (coef, path) in &r.terms {
                let arrows = path.arrows();
                for j in 0..arrows.len() {
                    let a = arrows[j];
                    let left = nf(&arrows[..j], path.src());
                    let right = nf(&arrows[j + 1..], q.arrow(a).tgt);
                    let rz = basis.mul_vec(&right, &unit(z));
                    for (k, c) in basis.mul_vec(&rz, &left) {
                        d2.push((index[1][&(arrow_gen(a), k)], col, coef * &c));
                    }
                }
            }
        }
        let dims: Vec<usize> = chains.iter().map(Vec::len).collect();
        let piece = ChainPiece::new(
            &field,
            dims.clone(),
            vec![
                SparseMatrix::from_triplets(&field, dims[0], dims[1], d1),
                SparseMatrix::from_triplets(&field, dims[1], dims[2], d2),
            ],
        )?;
        complex.insert(qd, piece);
    }
    Ok(complex)
}

/// Homology of `Γ ⊗_{Γᵉ} R_•`.
pub fn happel_homology(g: &AuslanderAlgebra) -> Result<HomologyTable> {
    let ext = ext_table(g)?;
    happel_complex(g, &ext)?.homology_dims(Provenance::BruteForce)
}

/// Internal-degree window large enough for `HH_{≤ max_deg}` and `HC_{≤ max_deg}` of `Γ`.
pub fn gamma_max_q(g: &AuslanderAlgebra, max_deg: usize) -> usize {
    (max_deg + 2) * g.presented.top_degree()
}

/// `HH₀ = k^{n²}`, `HH_{>0} = 0`, `HC_{2p} = k^{n²}`, `HC_{2p+1} = 0`, all in internal degree 0.
pub fn gamma_homology(g: &AuslanderAlgebra, max_deg: usize) -> (HomologyTable, HomologyTable) {
    let max_q = gamma_max_q(g, max_deg);
    let nn = g.n * g.n;
    let mut hh = HomologyTable::new(FieldDescriptor::Rationals, Provenance::ClosedForm, max_deg, max_q);
    hh.set(0, 0, nn);
    let mut hc = HomologyTable::new(FieldDescriptor::Rationals, Provenance::ClosedForm, max_deg, max_q);
    for p in (0..=max_deg).step_by(2) {
        hc.set(p, 0, nn);
    }
    (hh, hc)
}

/// Bar-complex and cyclic-bicomplex homology of the presented algebra.
pub fn gamma_homology_oracle(g: &AuslanderAlgebra, max_deg: usize) -> Result<(HomologyTable, HomologyTable)> {
    let max_q = gamma_max_q(g, max_deg);
    let p = g.presented.presentation().clone();
    let hh = hh_bar_oracle(&HHQuery::new(p.clone(), max_deg, max_q))?;
    let hc = hc_bicomplex_oracle(&HCQuery::new(p, max_deg).with_max_q(max_q))?;
    Ok((hh, hc))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ar_labels_round_trip() {
        for n in 2..=5 {
            for l in IndecLabel::all(n) {
                let (a, b) = to_ar_label(n, l);
                assert_eq!(from_ar_label(n, a, b), l);
            }
        }
    }

    #[test]
    fn resolutions_match_prediction() {
        for n in 2..=3 {
            let g = build_auslander(n).unwrap();
            for &l in g.labels() {
                assert_eq!(resolve_simple(&g, l).unwrap().terms, predicted_resolution(n, l), "n={n} {l}");
            }
        }
    }

    #[test]
    fn two_constructions_agree_for_n_two() {
        let g = build_auslander(2).unwrap();
        assert_eq!(g.quiver().num_vertices(), 4);
        assert_eq!(g.quiver().num_arrows(), 4);
        assert_eq!(g.presented().dim(), 10);
        assert!(g.presented().is_associative());
    }

    #[test]
    fn resolutions_have_length_at_most_two() {
        let g = build_auslander(3).unwrap();
        let lengths: Vec<usize> = g.labels().iter().map(|&l| resolve_simple(&g, l).unwrap().length).collect();
        assert!(lengths.iter().all(|&l| l <= 2));
        assert!(lengths.contains(&2));
    }

    #[test]
    fn ext_one_counts_arrows() {
        let g = build_auslander(3).unwrap();
        let ext = ext_table(&g).unwrap();
        let arrows = g.arrow_counts();
        for &x in g.labels() {
            for &y in g.labels() {
                assert_eq!(ext.get(x, y, 1), arrows[g.vertex(x)][g.vertex(y)]);
                assert_eq!(ext.get(x, y, 0), usize::from(x == y));
            }
        }
    }

    #[test]
    fn happel_complex_computes_hochschild_homology() {
        let g = build_auslander(2).unwrap();
        let ext = ext_table(&g).unwrap();
        let terms = happel_terms(&ext);
        let complex = happel_complex(&g, &ext).unwrap();
        let dims: Vec<usize> = (0..3).map(|p| complex.pieces.values().map(|c| c.dims[p]).sum()).collect();
        assert_eq!(dims, happel_term_dims(&g, &terms)[..3]);
        let h = complex.homology_dims(Provenance::BruteForce).unwrap();
        assert_eq!((h.total(0), h.total(1), h.total(2)), (4, 0, 0));
    }

    #[test]
    fn rejects_small_n() {
        assert!(build_auslander(1).is_err());
    }
}
