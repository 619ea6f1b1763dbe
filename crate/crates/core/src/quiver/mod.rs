//! Finite quivers, paths and rotation classes of cycles.

mod algebra;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::path::Path as FsPath;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use algebra::{AlgebraBasis, AlgebraPresentation, PresentationKind, Relation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite quiver. Vertices and arrows are addressed by index; names are kept for I/O.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    out: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct ArrowDoc {
    id: String,
    src: String,
    tgt: String,
}

#[derive(Serialize, Deserialize)]
struct QuiverDoc {
    vertices: Vec<String>,
    arrows: Vec<ArrowDoc>,
}

impl Quiver {
    /// Builds a quiver from vertex names and `(id, source, target)` triples.
    pub fn new<S: Into<String>>(vertices: Vec<S>, arrows: Vec<(String, String, String)>) -> Result<Self> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut pos = HashMap::new();
        for (k, v) in vertices.iter().enumerate() {
            if pos.insert(v.clone(), k).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate vertex {v}")));
            }
        }
        let mut ids = BTreeSet::new();
        let mut list = Vec::with_capacity(arrows.len());
        for (id, s, t) in arrows {
            if !ids.insert(id.clone()) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow {id}")));
            }
            let lookup = |v: &str| {
                pos.get(v)
                    .copied()
                    .ok_or_else(|| Error::InvalidQuiver(format!("arrow {id} uses unknown vertex {v}")))
            };
            list.push(Arrow { src: lookup(&s)?, tgt: lookup(&t)?, id });
        }
        Ok(Self::from_parts(vertices, list))
    }

    fn from_parts(vertices: Vec<String>, arrows: Vec<Arrow>) -> Self {
        let mut out = vec![Vec::new(); vertices.len()];
        for (k, a) in arrows.iter().enumerate() {
            out[a.src].push(k);
        }
        Quiver { vertices, arrows, out }
    }

    /// The oriented `n`-cycle: vertices `e0..e{n-1}`, arrows `a_i : e_i → e_{i+1 mod n}`.
    pub fn crown(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("crown needs n ≥ 1".into()));
        }
        let vertices = (0..n).map(|i| format!("e{i}")).collect();
        let arrows = (0..n).map(|i| Arrow { id: format!("a{i}"), src: i, tgt: (i + 1) % n }).collect();
        Ok(Self::from_parts(vertices, arrows))
    }

    /// One vertex with `k` loops `x0..x{k-1}`.
    pub fn loops(k: usize) -> Self {
        let arrows = (0..k).map(|i| Arrow { id: format!("x{i}"), src: 0, tgt: 0 }).collect();
        Self::from_parts(vec!["v".into()], arrows)
    }

    /// Accepts `crown:n`, `loops:k`, or a path to a JSON quiver file.
    pub fn from_source(source: &str) -> Result<Self> {
        if let Some(n) = source.strip_prefix("crown:") {
            let n = n.trim().parse().map_err(|_| Error::Parse(format!("bad crown size {n:?}")))?;
            return Self::crown(n);
        }
        if let Some(k) = source.strip_prefix("loops:") {
            let k = k.trim().parse().map_err(|_| Error::Parse(format!("bad loop count {k:?}")))?;
            return Ok(Self::loops(k));
        }
        let text = std::fs::read_to_string(FsPath::new(source))
            .map_err(|e| Error::Parse(format!("cannot read {source}: {e}")))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: QuiverDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::new(doc.vertices, doc.arrows.into_iter().map(|a| (a.id, a.src, a.tgt)).collect())
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let doc = QuiverDoc {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowDoc {
                    id: a.id.clone(),
                    src: self.vertices[a.src].clone(),
                    tgt: self.vertices[a.tgt].clone(),
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("quiver serializes")
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    /// Arrows leaving `v`.
    pub fn out_arrows(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// All paths of length `len`, in increasing order.
    pub fn paths_of_length(&self, len: usize) -> Vec<Path> {
        if len == 0 {
            return (0..self.num_vertices()).map(Path::trivial).collect();
        }
        let mut layer: Vec<Path> = (0..self.num_arrows()).map(|a| Path::arrow(self, a)).collect();
        for _ in 1..len {
            layer = layer
                .iter()
                .flat_map(|p| {
                    self.out[p.tgt].iter().map(move |&a| {
                        let mut arrows = p.arrows.clone();
                        arrows.push(a);
                        Path { src: p.src, tgt: self.arrows[a].tgt, arrows }
                    })
                })
                .collect();
        }
        layer.sort();
        layer
    }

    /// Arrow sequences of closed walks of length `len ≥ 1`.
    pub fn closed_walks(&self, len: usize) -> Vec<Path> {
        self.paths_of_length(len).into_iter().filter(|p| p.src == p.tgt).collect()
    }

    /// Rotation classes of cycles of length `len`, each with its least rotation.
    pub fn cycle_orbits(&self, len: usize) -> Vec<CycleOrbit> {
        let mut reps = BTreeMap::new();
        for w in self.closed_walks(len) {
            let rots = rotations(&w.arrows);
            let size = rots.len();
            let least = rots.into_iter().next().unwrap();
            reps.entry(least).or_insert(size);
        }
        reps.into_iter()
            .map(|(arrows, orbit_size)| CycleOrbit {
                representative: Path::from_arrows(self, &arrows).expect("rotation of a cycle"),
                orbit_size,
            })
            .collect()
    }

    /// `(a_r, b_r)` for `1 ≤ r ≤ max_len`: the number of rotation classes of cycles of
    /// length `r`, and of those that are not proper powers.
    ///
    /// Computed from closed-walk counts `w_r = tr(Aʳ)` by Möbius inversion:
    /// `r·b_r = Σ_{d|r} μ(r/d) w_d` and `a_r = Σ_{d|r} b_d`.
    pub fn cycle_invariants(&self, max_len: usize) -> BTreeMap<usize, (usize, usize)> {
        let walks = self.closed_walk_counts(max_len);
        let mut b = vec![0u128; max_len + 1];
        for r in 1..=max_len {
            let s: i128 = divisors(r)
                .into_iter()
                .map(|d| mobius(r / d) as i128 * walks[d] as i128)
                .sum();
            b[r] = (s / r as i128) as u128;
        }
        (1..=max_len)
            .map(|r| {
                let a: u128 = divisors(r).into_iter().map(|d| b[d]).sum();
                (r, (to_usize(a), to_usize(b[r])))
            })
            .collect()
    }

    /// `tr(Aʳ)` for `r ≤ max_len`, `A` the adjacency matrix.
    fn closed_walk_counts(&self, max_len: usize) -> Vec<u128> {
        let n = self.num_vertices();
        let mut counts = vec![0u128; max_len + 1];
        // walks[s][v] = number of paths s → v of the current length
        let mut walks: Vec<Vec<u128>> = (0..n).map(|s| (0..n).map(|v| (s == v) as u128).collect()).collect();
        counts[0] = n as u128;
        for count in counts.iter_mut().skip(1) {
            let mut next = vec![vec![0u128; n]; n];
            for s in 0..n {
                for v in 0..n {
                    let c = walks[s][v];
                    if c == 0 {
                        continue;
                    }
                    for &a in &self.out[v] {
                        let t = self.arrows[a].tgt;
                        next[s][t] = next[s][t].checked_add(c).expect("walk count overflow");
                    }
                }
            }
            walks = next;
            *count = (0..n).map(|s| walks[s][s]).sum();
        }
        counts
    }
}

fn to_usize(v: u128) -> usize {
    usize::try_from(v).expect("cycle count overflow")
}

pub(crate) fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn mobius(mut n: usize) -> i64 {
    let mut m = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            m = -m;
        }
        p += 1;
    }
    if n > 1 {
        m = -m;
    }
    m
}

/// Distinct rotations of a word, sorted.
fn rotations(w: &[usize]) -> Vec<Vec<usize>> {
    let set: BTreeSet<Vec<usize>> = (0..w.len())
        .map(|k| w[k..].iter().chain(&w[..k]).copied().collect())
        .collect();
    set.into_iter().collect()
}

/// A path: a trivial path at a vertex or a composable arrow sequence, read left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    src: usize,
    tgt: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { src: v, tgt: v, arrows: Vec::new() }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Self {
        Path { src: q.arrows[a].src, tgt: q.arrows[a].tgt, arrows: vec![a] }
    }

    pub fn from_arrows(q: &Quiver, arrows: &[usize]) -> Result<Self> {
        let (&first, rest) = arrows
            .split_first()
            .ok_or_else(|| Error::InvalidArgument("empty arrow sequence".into()))?;
        let mut tgt = q.arrows[first].tgt;
        for &a in rest {
            if q.arrows[a].src != tgt {
                return Err(Error::InvalidArgument(format!(
                    "arrow {} does not start where the path ends",
                    q.arrows[a].id
                )));
            }
            tgt = q.arrows[a].tgt;
        }
        Ok(Path { src: q.arrows[first].src, tgt, arrows: arrows.to_vec() })
    }

    /// Path from arrow ids.
    pub fn from_ids(q: &Quiver, ids: &[&str]) -> Result<Self> {
        let arrows = ids
            .iter()
            .map(|id| q.arrow_index(id).ok_or_else(|| Error::InvalidArgument(format!("unknown arrow {id}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_arrows(q, &arrows)
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn tgt(&self) -> usize {
        self.tgt
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    /// `self` followed by `other`, if composable.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.tgt != other.src {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { src: self.src, tgt: other.tgt, arrows })
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> impl fmt::Display + 'a {
        PathDisplay { path: self, quiver: q }
    }

    fn key(&self) -> (usize, usize, &[usize]) {
        (self.arrows.len(), self.src, &self.arrows)
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

struct PathDisplay<'a> {
    path: &'a Path,
    quiver: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_trivial() {
            return write!(f, "{}", self.quiver.vertex_name(self.path.src));
        }
        let ids: Vec<&str> = self.path.arrows.iter().map(|&a| self.quiver.arrows[a].id.as_str()).collect();
        write!(f, "{}", ids.join("*"))
    }
}

/// A rotation class of cycles, represented by its least rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleOrbit {
    pub representative: Path,
    pub orbit_size: usize,
}

impl CycleOrbit {
    pub fn len(&self) -> usize {
        self.representative.len()
    }

    pub fn is_primitive(&self) -> bool {
        self.orbit_size == self.len()
    }
}
