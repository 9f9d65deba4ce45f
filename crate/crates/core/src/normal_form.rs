//! Canonical forms of lattice polytopes under affine unimodular maps.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::arith::{hermite_normal_form, IntMatrix};
use crate::error::{Error, Result};
use crate::polyhedra::Polytope;

/// Canonical `d × n` vertex matrix of an affine unimodular equivalence class
/// and a 128-bit digest of it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    pub canonical_vertices: IntMatrix,
    pub digest: u128,
}

impl NormalForm {
    /// Digest as 32 lowercase hex characters.
    pub fn digest_hex(&self) -> String {
        let mut s = String::with_capacity(32);
        write!(s, "{:032x}", self.digest).expect("writing to a string");
        s
    }

    /// The canonical representative as a polytope.
    pub fn polytope(&self) -> Polytope {
        let m = &self.canonical_vertices;
        let pts: Vec<_> = (0..m.cols())
            .map(|c| {
                crate::arith::IntVector::new((0..m.rows()).map(|r| m.get(r, c).clone()).collect())
                    .expect("dimension in range")
            })
            .collect();
        Polytope::from_lattice_points(&pts).expect("canonical vertices span")
    }
}

/// Stable serialization hashed by [`digest_matrix`]: rows and columns as
/// little-endian `u64`, then per entry the little-endian `u64` byte length of
/// its magnitude, a sign byte (0 non-negative, 1 negative) and the magnitude
/// bytes in little-endian order.
pub fn serialize_matrix(m: &IntMatrix) -> Vec<u8> {
    let mut out = Vec::with_capacity(16 + m.entries().len() * 10);
    out.extend_from_slice(&(m.rows() as u64).to_le_bytes());
    out.extend_from_slice(&(m.cols() as u64).to_le_bytes());
    for v in m.entries() {
        let (sign, mag) = v.clone().into_parts();
        let bytes = mag.to_le_bytes();
        out.extend_from_slice(&(bytes.len() as u64).to_le_bytes());
        out.push(if sign == dashu_int::Sign::Negative && !v.is_zero() { 1 } else { 0 });
        out.extend_from_slice(&bytes);
    }
    out
}

pub fn digest_matrix(m: &IntMatrix) -> u128 {
    xxhash_rust::xxh3::xxh3_128(&serialize_matrix(m))
}

/// Partial ordering state: the rows placed so far and the columns grouped
/// into blocks that those rows cannot distinguish.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct State {
    used: Vec<bool>,
    blocks: Vec<Vec<usize>>,
}

impl State {
    /// Refines the blocks by row `r` (descending values); returns the row as
    /// read in the refined column order.
    fn apply(&self, pairing: &[Vec<i64>], r: usize) -> (Vec<i64>, State) {
        let row = &pairing[r];
        let mut blocks = Vec::with_capacity(self.blocks.len());
        let mut values = Vec::new();
        for b in &self.blocks {
            let mut sorted = b.clone();
            sorted.sort_by(|&x, &y| row[y].cmp(&row[x]).then(x.cmp(&y)));
            let mut start = 0;
            for i in 1..=sorted.len() {
                if i == sorted.len() || row[sorted[i]] != row[sorted[start]] {
                    blocks.push(sorted[start..i].to_vec());
                    start = i;
                }
            }
            values.extend(sorted.iter().map(|&c| row[c]));
        }
        let mut used = self.used.clone();
        used[r] = true;
        (values, State { used, blocks })
    }
}

/// Vertex orderings under which the vertex–facet pairing matrix, with rows
/// and columns permuted, is lexicographically maximal.
fn maximizing_vertex_orders(pairing: &[Vec<i64>], nverts: usize) -> Vec<Vec<usize>> {
    let nfacets = pairing.len();
    let mut states =
        alloc::vec![State { used: alloc::vec![false; nfacets], blocks: alloc::vec![(0..nverts).collect()] }];
    for _ in 0..nfacets {
        let mut best: Option<Vec<i64>> = None;
        let mut next: Vec<State> = Vec::new();
        for s in &states {
            for r in 0..nfacets {
                if s.used[r] {
                    continue;
                }
                let (values, ns) = s.apply(pairing, r);
                match &best {
                    Some(b) if values < *b => {}
                    Some(b) if values == *b => next.push(ns),
                    _ => {
                        best = Some(values);
                        next.clear();
                        next.push(ns);
                    }
                }
            }
        }
        next.sort();
        next.dedup();
        states = next;
    }
    let mut orders: Vec<Vec<usize>> = states.into_iter().map(|s| s.blocks.into_iter().flatten().collect()).collect();
    orders.sort();
    orders.dedup();
    orders
}

/// Canonical form of a full-dimensional lattice polytope.
///
/// The rows (facets) and columns (vertices) of the pairing matrix
/// `⟨v, ν⟩ − Min_P(ν)` are ordered to make it lexicographically maximal; for
/// each vertex order achieving this, the vertices are translated so the first
/// is the origin and the `d × n` vertex matrix is put into Hermite normal form.
/// The largest resulting matrix is the canonical one.
pub fn affine_normal_form(p: &Polytope) -> Result<NormalForm> {
    let vertices = p.lattice_vertices()?;
    let facets = p.facets()?;
    let d = p.ambient_dim();
    let mut pairing: Vec<Vec<i64>> = Vec::with_capacity(facets.len());
    for h in facets {
        let m = h.offset().numerator();
        let row = vertices
            .iter()
            .map(|v| {
                i64::try_from(h.normal().dot(v) - m).map_err(|_| Error::Invariant("pairing entry overflow".into()))
            })
            .collect::<Result<_>>()?;
        pairing.push(row);
    }
    let mut best: Option<IntMatrix> = None;
    for order in maximizing_vertex_orders(&pairing, vertices.len()) {
        let origin = &vertices[order[0]];
        let mut a = IntMatrix::zeros(d, vertices.len());
        for (c, &vi) in order.iter().enumerate() {
            let diff = vertices[vi].sub(origin);
            for r in 0..d {
                a.set(r, c, diff[r].clone());
            }
        }
        let (h, _) = hermite_normal_form(&a);
        if best.as_ref().is_none_or(|b| h > *b) {
            best = Some(h);
        }
    }
    let canonical_vertices = best.expect("at least one vertex order");
    let digest = digest_matrix(&canonical_vertices);
    Ok(NormalForm { canonical_vertices, digest })
}

/// Affine unimodular equivalence; polytopes of different dimension are never
/// equivalent.
pub fn are_equivalent(p: &Polytope, q: &Polytope) -> Result<bool> {
    if p.ambient_dim() != q.ambient_dim() {
        return Ok(false);
    }
    Ok(affine_normal_form(p)?.canonical_vertices == affine_normal_form(q)?.canonical_vertices)
}
