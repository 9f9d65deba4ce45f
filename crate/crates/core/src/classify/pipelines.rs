//! The classification runs built on subpolytope enumeration.

use alloc::vec;
use alloc::vec::Vec;

use super::bfs::{ClassEntry, Mapper, Sequential, SubpolytopeSearch};
use super::projection::projects_to_2d2_with;
use super::summands::{cayley_polytope, minkowski_summand_pairs};
use super::{ClassificationRecord, DedupStore};
use crate::error::{Error, Result};
use crate::fine::{reflexive_check, MultiplierProfile};
use crate::normal_form::{affine_normal_form, NormalForm};
use crate::polyhedra::Polytope;
use crate::shapes;
use crate::width::lattice_width;

/// Persistence hook for the level-by-level searches.
pub trait SearchLog {
    /// Levels previously completed below the named root, in order.
    fn completed_levels(&mut self, root_id: &str) -> Result<Vec<Vec<ClassEntry>>>;
    /// Called after each newly completed level.
    fn level_completed(&mut self, root_id: &str, level: usize, entries: &[ClassEntry]) -> Result<()>;
}

/// [`SearchLog`] that remembers nothing.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoLog;

impl SearchLog for NoLog {
    fn completed_levels(&mut self, _root_id: &str) -> Result<Vec<Vec<ClassEntry>>> {
        Ok(Vec::new())
    }

    fn level_completed(&mut self, _root_id: &str, _level: usize, _entries: &[ClassEntry]) -> Result<()> {
        Ok(())
    }
}

/// What a candidate class must satisfy to be reported.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Filter {
    WeaklySporadic,
    WidthTwoProjecting,
    Sporadic,
}

impl Filter {
    /// Cheap tests first; builds the record only for survivors.
    fn apply(self, p: &Polytope, nf: NormalForm, provenance: &str) -> Result<Option<ClassificationRecord>> {
        let profile = MultiplierProfile::new(p)?;
        if !profile.is_weakly_sporadic()? {
            return Ok(None);
        }
        let cert = lattice_width(p)?;
        let keep = match self {
            Filter::WeaklySporadic => true,
            Filter::WidthTwoProjecting => {
                cert.width == crate::arith::Rational::from(2) && projects_to_2d2_with(p, &cert)?
            }
            Filter::Sporadic => true,
        };
        if !keep {
            return Ok(None);
        }
        let record = ClassificationRecord::from_parts(&profile, &cert, nf, provenance)?;
        if self == Filter::Sporadic && !record.flags.sporadic {
            return Ok(None);
        }
        Ok(Some(record))
    }
}

/// Runs the classifications with a chosen executor and search log.
pub struct Classifier<'a, M: Mapper> {
    mapper: &'a M,
    log: &'a mut dyn SearchLog,
}

pub const POLYGON_ROOT: &str = "2simplex2";
pub const REFLEXIVE_ROOT: &str = "4simplex2";
pub const WIDTH_TWO_ROOT: &str = "2simplex2x[0,4]";
pub const SUMMAND_PROVENANCE: &str = "reflexive-summands";
pub const DEGREE_ONE_PROVENANCE: &str = "degree-one";

impl<'a, M: Mapper> Classifier<'a, M> {
    pub fn new(mapper: &'a M, log: &'a mut dyn SearchLog) -> Self {
        Self { mapper, log }
    }

    /// Completed search below `root`, resumed from the log when possible.
    pub fn search(&mut self, root_id: &str, root: &Polytope) -> Result<SubpolytopeSearch> {
        let done = self.log.completed_levels(root_id)?;
        let mut search = if done.is_empty() {
            let s = SubpolytopeSearch::new(root)?;
            self.log.level_completed(root_id, 0, &s.levels()[0])?;
            s
        } else {
            SubpolytopeSearch::resume(root, done)?
        };
        while !search.is_finished() {
            search.step(self.mapper)?;
            let level = search.levels().len() - 1;
            self.log.level_completed(root_id, level, &search.levels()[level])?;
        }
        Ok(search)
    }

    fn filtered(&mut self, root_id: &str, root: &Polytope, filter: Filter) -> Result<Vec<ClassificationRecord>> {
        let search = self.search(root_id, root)?;
        let entries: Vec<&ClassEntry> = search.classes().collect();
        let results = self.mapper.map(&entries, |e| {
            let p = search.polytope_of(e.mask)?;
            filter.apply(&p, e.normal_form.clone(), root_id)
        });
        let mut out = Vec::new();
        for r in results {
            if let Some(r) = r? {
                out.push(r);
            }
        }
        Ok(out)
    }

    /// Weakly sporadic F-hollow lattice polygons: subpolygons of `2Δ₂`.
    pub fn polygons(&mut self) -> Result<Vec<ClassificationRecord>> {
        let records = self.filtered(POLYGON_ROOT, &shapes::dilated_simplex(2, 2)?, Filter::WeaklySporadic)?;
        Ok(merge(vec![records]))
    }

    /// Reflexive polygons: subpolygons of `4Δ₂` with a single interior
    /// lattice point at lattice distance one from every edge.
    pub fn reflexive_polygons(&mut self) -> Result<Vec<Polytope>> {
        let search = self.search(REFLEXIVE_ROOT, &shapes::dilated_simplex(2, 4)?)?;
        let entries: Vec<&ClassEntry> = search.classes().collect();
        let results = self.mapper.map(&entries, |e| -> Result<Option<(NormalForm, Polytope)>> {
            let p = search.polytope_of(e.mask)?;
            if p.lattice_points(true).len() == 1 && reflexive_check(&p)? {
                Ok(Some((e.normal_form.clone(), p)))
            } else {
                Ok(None)
            }
        });
        let mut found: Vec<(NormalForm, Polytope)> = Vec::new();
        for r in results {
            if let Some(x) = r? {
                found.push(x);
            }
        }
        found.sort_by(|a, b| a.0.digest.cmp(&b.0.digest).then_with(|| a.0.cmp(&b.0)));
        Ok(found.into_iter().map(|(_, p)| p).collect())
    }

    /// Weakly sporadic 3-polytopes of width 2 projecting onto `2Δ₂`: all lie
    /// in `2Δ₂ × [0,4]`.
    pub fn width_two(&mut self) -> Result<Vec<ClassificationRecord>> {
        let records = self.filtered(WIDTH_TWO_ROOT, &shapes::width_two_container()?, Filter::WidthTwoProjecting)?;
        Ok(merge(vec![records]))
    }

    /// Weakly sporadic 3-polytopes of width 1: Cayley polytopes of Minkowski
    /// decompositions of reflexive polygons, plus the degree-one exceptions.
    pub fn width_one(&mut self) -> Result<Vec<ClassificationRecord>> {
        let mut candidates: Vec<(Polytope, &str)> = Vec::new();
        for r in self.reflexive_polygons()? {
            for (a, b) in minkowski_summand_pairs(&r)? {
                let c = cayley_polytope(&a, &b)?;
                if c.is_full_dimensional() {
                    candidates.push((c, SUMMAND_PROVENANCE));
                }
            }
        }
        for p in [
            shapes::standard_simplex(3)?,
            shapes::lawrence_prism(&[1, 1, 0])?,
            shapes::lawrence_prism(&[2, 0, 0])?,
            shapes::dilated_simplex(2, 2)?.pyramid()?,
        ] {
            candidates.push((p, DEGREE_ONE_PROVENANCE));
        }
        let results = self.mapper.map(&candidates, |(p, prov)| {
            let nf = affine_normal_form(p)?;
            Filter::WeaklySporadic.apply(p, nf, prov)
        });
        let mut records = Vec::new();
        for (r, (_, prov)) in results.into_iter().zip(candidates.iter()) {
            match r? {
                Some(rec) => records.push(rec),
                None if *prov == DEGREE_ONE_PROVENANCE => {
                    return Err(Error::Invariant("degree-one exception is not weakly sporadic".into()));
                }
                None => {}
            }
        }
        Ok(merge(vec![records]))
    }

    /// Union of the width-1 and width-2 runs.
    pub fn weakly_sporadic_all(&mut self) -> Result<Vec<ClassificationRecord>> {
        let one = self.width_one()?;
        let two = self.width_two()?;
        Ok(merge(vec![one, two]))
    }

    /// Sporadic F-hollow 3-polytopes: subpolytopes of the three maximal
    /// hollow simplices without a projection onto the unit segment or `2Δ₂`.
    pub fn sporadic(&mut self) -> Result<Vec<ClassificationRecord>> {
        let mut runs = Vec::new();
        for (id, root) in shapes::sporadic_roots()? {
            runs.push(self.filtered(id, &root, Filter::Sporadic)?);
        }
        Ok(merge(runs))
    }
}

/// Deduplicates across runs (earlier runs win) and sorts by digest.
fn merge(runs: Vec<Vec<ClassificationRecord>>) -> Vec<ClassificationRecord> {
    let mut store = DedupStore::new();
    let mut out = Vec::new();
    for run in runs {
        for r in run {
            if store.insert_if_absent(&r.normal_form) {
                out.push(r);
            }
        }
    }
    out.sort_by(|a, b| a.normal_form.digest.cmp(&b.normal_form.digest).then_with(|| a.normal_form.cmp(&b.normal_form)));
    out
}

fn sequential<T>(f: impl FnOnce(&mut Classifier<'_, Sequential>) -> Result<T>) -> Result<T> {
    let mut log = NoLog;
    let mut c = Classifier::new(&Sequential, &mut log);
    f(&mut c)
}

pub fn classify_polygons() -> Result<Vec<ClassificationRecord>> {
    sequential(|c| c.polygons())
}

pub fn reflexive_polygons() -> Result<Vec<Polytope>> {
    sequential(|c| c.reflexive_polygons())
}

pub fn classify_weakly_sporadic_width2() -> Result<Vec<ClassificationRecord>> {
    sequential(|c| c.width_two())
}

pub fn classify_weakly_sporadic_width1() -> Result<Vec<ClassificationRecord>> {
    sequential(|c| c.width_one())
}

pub fn classify_weakly_sporadic_all() -> Result<Vec<ClassificationRecord>> {
    sequential(|c| c.weakly_sporadic_all())
}

pub fn classify_sporadic() -> Result<Vec<ClassificationRecord>> {
    sequential(|c| c.sporadic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::normal_form::are_equivalent;

    #[test]
    fn four_polygons() {
        let recs = classify_polygons().unwrap();
        assert_eq!(recs.len(), 4);
        let p20 = Polytope::from_rows(&[&[0, 0], &[2, 0], &[0, 1]]);
        let r = recs.iter().find(|r| are_equivalent(&r.polytope().unwrap(), &p20).unwrap()).unwrap();
        assert_eq!(r.mu, rat(2, 1));
        let t2 = shapes::dilated_simplex(2, 2).unwrap();
        let r = recs.iter().find(|r| are_equivalent(&r.polytope().unwrap(), &t2).unwrap()).unwrap();
        assert_eq!(r.mu, rat(3, 2));
    }

    #[test]
    fn sixteen_reflexive_polygons() {
        assert_eq!(reflexive_polygons().unwrap().len(), 16);
    }
}
