//! Classification of weakly sporadic and sporadic F-hollow lattice polytopes.

mod bfs;
mod pipelines;
mod projection;
mod summands;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

pub use bfs::{subpolytope_classes, ClassEntry, Mapper, Sequential, SubpolytopeSearch, MAX_ROOT_POINTS};
pub use pipelines::{
    classify_polygons, classify_sporadic, classify_weakly_sporadic_all, classify_weakly_sporadic_width1,
    classify_weakly_sporadic_width2, reflexive_polygons, Classifier, NoLog, SearchLog,
};
pub use projection::{is_bipyramid, is_sporadic, is_sporadic_with, projects_to_2d2, projects_to_2d2_with};
pub use summands::{cayley_polytope, minkowski_difference, minkowski_summand_pairs};

use crate::arith::{IntMatrix, IntVector, Rational};
use crate::error::{Error, Result};
use crate::fine::{gorenstein_data, GorensteinData, MultiplierProfile};
use crate::normal_form::{affine_normal_form, NormalForm};
use crate::polyhedra::Polytope;
use crate::width::{lattice_width, WidthCertificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecordFlags {
    pub f_hollow: bool,
    pub weakly_sporadic: bool,
    pub sporadic: bool,
    /// `μP` is canonically closed, i.e. `μ ≥ μ_cc`.
    pub canonically_closed_at_mu: bool,
}

/// One equivalence class with the invariants the classification reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub normal_form: NormalForm,
    /// Vertices as found, one per row.
    pub vertices: IntMatrix,
    pub width: u64,
    pub mu: Rational,
    pub dim_fine_at_mu: i32,
    pub flags: RecordFlags,
    pub gorenstein: Option<GorensteinData>,
    /// Identifier of the enumeration root or construction it came from.
    pub provenance: String,
}

impl ClassificationRecord {
    pub fn compute(p: &Polytope, provenance: &str) -> Result<Self> {
        let profile = MultiplierProfile::new(p)?;
        let cert = lattice_width(p)?;
        Self::from_parts(&profile, &cert, affine_normal_form(p)?, provenance)
    }

    /// Assembles a record from data the caller already computed.
    pub fn from_parts(
        profile: &MultiplierProfile,
        cert: &WidthCertificate,
        normal_form: NormalForm,
        provenance: &str,
    ) -> Result<Self> {
        let p = &profile.polytope;
        let vertices = IntMatrix::from_rows(p.lattice_vertices()?.into_iter().map(|v| v.into_vec()).collect())?;
        if !cert.width.is_int() {
            return Err(Error::NotLattice);
        }
        let width: u64 =
            cert.width.numerator().try_into().map_err(|_| Error::Invariant("width out of range".into()))?;
        let weakly_sporadic = profile.is_weakly_sporadic()?;
        let sporadic = match p.ambient_dim() {
            2 | 3 => projection::is_sporadic_with(profile, cert)?,
            _ => false,
        };
        Ok(Self {
            normal_form,
            vertices,
            width,
            mu: profile.mu.clone(),
            dim_fine_at_mu: profile.fine_at_mu()?.intrinsic_dim(),
            flags: RecordFlags {
                f_hollow: profile.is_f_hollow(),
                weakly_sporadic,
                sporadic,
                canonically_closed_at_mu: profile.mu >= profile.mu_cc,
            },
            gorenstein: if p.is_lattice() { gorenstein_data(profile)? } else { None },
            provenance: provenance.to_string(),
        })
    }

    pub fn polytope(&self) -> Result<Polytope> {
        let pts: Vec<IntVector> = self.vertices.row_vecs().into_iter().map(IntVector::new).collect::<Result<_>>()?;
        Polytope::from_lattice_points(&pts)
    }

    /// Recomputes every field from the vertex matrix and compares.
    pub fn verify(&self) -> Result<()> {
        let again = Self::compute(&self.polytope()?, &self.provenance)?;
        if again != *self {
            return Err(Error::Invariant(format!("record {} does not reproduce", self.normal_form.digest_hex())));
        }
        Ok(())
    }
}

/// Set of normal forms keyed by digest, confirming membership by comparing
/// full canonical matrices so digest collisions never merge classes.
#[derive(Clone, Debug, Default)]
pub struct DedupStore {
    by_digest: BTreeMap<u128, Vec<IntMatrix>>,
    len: usize,
}

impl DedupStore {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts the class and reports whether it was new.
    pub fn insert_if_absent(&mut self, nf: &NormalForm) -> bool {
        let bucket = self.by_digest.entry(nf.digest).or_default();
        if bucket.contains(&nf.canonical_vertices) {
            return false;
        }
        bucket.push(nf.canonical_vertices.clone());
        self.len += 1;
        true
    }

    pub fn contains(&self, nf: &NormalForm) -> bool {
        self.by_digest.get(&nf.digest).is_some_and(|b| b.contains(&nf.canonical_vertices))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Digests shared by more than one class.
    pub fn collisions(&self) -> usize {
        self.by_digest.values().filter(|b| b.len() > 1).count()
    }
}

/// Number of records per minimal multiplier.
pub fn mu_histogram(records: &[ClassificationRecord]) -> BTreeMap<Rational, usize> {
    let mut h = BTreeMap::new();
    for r in records {
        *h.entry(r.mu.clone()).or_insert(0) += 1;
    }
    h
}

/// Number of records per Gorenstein index, skipping non-Gorenstein ones.
pub fn gorenstein_histogram(records: &[ClassificationRecord]) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for r in records.iter().filter_map(|r| r.gorenstein.as_ref()) {
        *h.entry(r.index).or_insert(0) += 1;
    }
    h
}

/// Number of records whose polytope is a bipyramid over a triangle.
pub fn bipyramid_census(records: &[ClassificationRecord]) -> Result<usize> {
    let mut n = 0;
    for r in records {
        if is_bipyramid(&r.polytope()?)? {
            n += 1;
        }
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::shapes::{dilated_simplex, unit_fraction_simplex};

    #[test]
    fn record_of_triangle() {
        let r = ClassificationRecord::compute(&dilated_simplex(2, 2).unwrap(), "test").unwrap();
        assert_eq!(r.width, 2);
        assert_eq!(r.mu, rat(3, 2));
        assert_eq!(r.dim_fine_at_mu, 0);
        assert!(r.flags.weakly_sporadic);
        assert!(r.flags.sporadic);
        r.verify().unwrap();
        let mut bad = r.clone();
        bad.mu = rat(2, 1);
        assert!(bad.verify().is_err());
    }

    #[test]
    fn record_of_sporadic_root() {
        let r = ClassificationRecord::compute(&unit_fraction_simplex(&[2, 4, 4]).unwrap(), "root").unwrap();
        assert_eq!(r.mu, rat(5, 4));
        assert!(r.flags.sporadic);
        assert_eq!(r.gorenstein, None);
    }

    #[test]
    fn dedup_store() {
        let a = affine_normal_form(&dilated_simplex(2, 2).unwrap()).unwrap();
        let b = affine_normal_form(&dilated_simplex(2, 3).unwrap()).unwrap();
        let mut s = DedupStore::new();
        assert!(s.insert_if_absent(&a));
        assert!(!s.insert_if_absent(&a));
        assert!(s.insert_if_absent(&b));
        assert_eq!(s.len(), 2);
        assert!(s.contains(&b));
        assert_eq!(s.collisions(), 0);
    }
}
