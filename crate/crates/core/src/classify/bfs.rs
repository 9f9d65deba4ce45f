//! Breadth-first enumeration of lattice subpolytopes up to equivalence.
//!
//! A subpolytope is stored as a bitmask over the lattice points of the root.
//! Deleting a vertex from a lattice-point-closed set leaves a closed set, so
//! the children of `Q` are exactly `Q ∖ {v}` for the vertices `v` of `Q`.
//! Equivalent polytopes have equally many lattice points, hence every level
//! of the search (fixed point count) is deduplicated on its own.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{IntMatrix, IntVector};
use crate::error::{Error, Result};
use crate::normal_form::{affine_normal_form, NormalForm};
use crate::polyhedra::Polytope;

/// Largest root lattice point count representable by a mask.
pub const MAX_ROOT_POINTS: usize = 128;

/// Applies a function to every item, possibly in parallel. Results come back
/// in item order.
pub trait Mapper: Sync {
    fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send;
}

/// Single-threaded [`Mapper`].
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl Mapper for Sequential {
    fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        items.iter().map(f).collect()
    }
}

/// One equivalence class found by the search: the first (least) point mask
/// reaching it, the vertices of that mask and its normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassEntry {
    pub mask: u128,
    pub vertex_mask: u128,
    pub normal_form: NormalForm,
}

/// Resumable level-by-level search below a fixed root.
#[derive(Clone, Debug)]
pub struct SubpolytopeSearch {
    points: Vec<IntVector>,
    levels: Vec<Vec<ClassEntry>>,
    finished: bool,
}

impl SubpolytopeSearch {
    pub fn new(root: &Polytope) -> Result<Self> {
        if !root.is_lattice() {
            return Err(Error::NotLattice);
        }
        if !root.is_full_dimensional() {
            return Err(Error::NotFullDimensional);
        }
        let points = root.lattice_points(false);
        if points.len() > MAX_ROOT_POINTS {
            return Err(Error::RootTooLarge(points.len()));
        }
        let mut search = Self { points, levels: Vec::new(), finished: false };
        let full = search.full_mask();
        let (vertex_mask, normal_form) = search.analyze(full)?.ok_or(Error::NotFullDimensional)?;
        search.levels.push(vec![ClassEntry { mask: full, vertex_mask, normal_form }]);
        Ok(search)
    }

    /// Continues from previously completed levels (the first being the root
    /// level as produced by [`SubpolytopeSearch::new`]).
    pub fn resume(root: &Polytope, levels: Vec<Vec<ClassEntry>>) -> Result<Self> {
        let mut search = Self::new(root)?;
        if levels.is_empty() {
            return Ok(search);
        }
        if levels[0] != search.levels[0] {
            return Err(Error::Invariant("checkpoint does not belong to this root".into()));
        }
        let n = search.points.len() as u32;
        for (k, level) in levels.iter().enumerate() {
            if level.iter().any(|e| e.mask.count_ones() + k as u32 != n || e.vertex_mask & !e.mask != 0) {
                return Err(Error::Invariant("checkpoint level is inconsistent".into()));
            }
        }
        search.finished = levels.last().is_some_and(Vec::is_empty);
        search.levels = levels;
        Ok(search)
    }

    /// Lattice points of the root in sorted order; bit `i` of a mask refers
    /// to `points()[i]`.
    pub fn points(&self) -> &[IntVector] {
        &self.points
    }

    pub fn levels(&self) -> &[Vec<ClassEntry>] {
        &self.levels
    }

    pub fn is_finished(&self) -> bool {
        self.finished
    }

    /// All classes found so far, by decreasing lattice point count.
    pub fn classes(&self) -> impl Iterator<Item = &ClassEntry> {
        self.levels.iter().flatten()
    }

    fn full_mask(&self) -> u128 {
        if self.points.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.points.len()) - 1
        }
    }

    pub fn points_of(&self, mask: u128) -> Vec<IntVector> {
        self.points.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| p.clone()).collect()
    }

    pub fn polytope_of(&self, mask: u128) -> Result<Polytope> {
        Polytope::from_lattice_points(&self.points_of(mask))
    }

    /// Vertex mask and normal form of a mask, or `None` when its hull is not
    /// full-dimensional.
    fn analyze(&self, mask: u128) -> Result<Option<(u128, NormalForm)>> {
        let d = self.points[0].dim();
        if (mask.count_ones() as usize) <= d {
            return Ok(None);
        }
        let p = self.polytope_of(mask)?;
        if !p.is_full_dimensional() {
            return Ok(None);
        }
        let mut vertex_mask = 0u128;
        for v in p.lattice_vertices()? {
            let i = self.points.binary_search(&v).map_err(|_| Error::Invariant("vertex outside root".into()))?;
            vertex_mask |= 1 << i;
        }
        Ok(Some((vertex_mask, affine_normal_form(&p)?)))
    }

    /// Computes the next level; returns `false` once the search is exhausted.
    pub fn step<M: Mapper>(&mut self, mapper: &M) -> Result<bool> {
        if self.finished {
            return Ok(false);
        }
        let last = self.levels.last().expect("root level exists");
        let mut children: BTreeSet<u128> = BTreeSet::new();
        for e in last {
            let mut vs = e.vertex_mask;
            while vs != 0 {
                let bit = vs & vs.wrapping_neg();
                children.insert(e.mask & !bit);
                vs &= !bit;
            }
        }
        let masks: Vec<u128> = children.into_iter().collect();
        let analyzed = mapper.map(&masks, |&m| self.analyze(m));
        // Masks are visited in increasing order, so each class keeps its least mask.
        let mut level: BTreeMap<(u128, IntMatrix), ClassEntry> = BTreeMap::new();
        for (mask, a) in masks.into_iter().zip(analyzed) {
            if let Some((vertex_mask, normal_form)) = a? {
                let key = (normal_form.digest, normal_form.canonical_vertices.clone());
                level.entry(key).or_insert(ClassEntry { mask, vertex_mask, normal_form });
            }
        }
        let level: Vec<ClassEntry> = level.into_values().collect();
        self.finished = level.is_empty();
        self.levels.push(level);
        Ok(!self.finished)
    }

    /// Runs to completion, reporting each newly completed level.
    pub fn run<M: Mapper>(&mut self, mapper: &M, mut on_level: impl FnMut(&[ClassEntry]) -> Result<()>) -> Result<()> {
        while self.step(mapper)? {
            on_level(self.levels.last().expect("level just pushed"))?;
        }
        Ok(())
    }
}

/// Every full-dimensional lattice subpolytope of `root` up to affine
/// unimodular equivalence, root included, by decreasing lattice point count
/// and then digest.
pub fn subpolytope_classes(root: &Polytope) -> Result<Vec<Polytope>> {
    let mut search = SubpolytopeSearch::new(root)?;
    search.run(&Sequential, |_| Ok(()))?;
    search.classes().map(|e| search.polytope_of(e.mask)).collect()
}
