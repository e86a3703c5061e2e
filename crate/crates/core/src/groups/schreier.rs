//! Stabilizer chains for permutation groups.
//!
//! A chain fixes base points one at a time; level i holds the strong
//! generators fixing the first i base points, the orbit of base point i
//! under them, and a Schreier vector from which transversal elements are
//! rebuilt on demand.  Closure runs the classical Schreier generator test:
//! every u_q g u_{g(q)}^{-1} must sift to the identity through the levels
//! below, and any nonzero residue is installed as a new strong generator
//! until the test passes everywhere.  The group order is then the product
//! of the orbit sizes.
//!
//! Everything is deterministic: base points come from an optional hint and
//! are otherwise the smallest moved points, and orbits grow in
//! breadth-first order.

use crate::error::{Error, Result};
use crate::groups::perm::Perm;

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    gens: Vec<Perm>,
    /// Orbit of `point` in breadth-first discovery order.
    orbit: Vec<usize>,
    /// Schreier vector: `path[q] = (generator index, previous point)`, with
    /// the base point as its own root.
    path: Vec<Option<(usize, usize)>>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Level {
        let mut l = Level {
            point,
            gens: Vec::new(),
            orbit: Vec::new(),
            path: vec![None; degree],
        };
        l.rebuild();
        l
    }

    fn rebuild(&mut self) {
        self.path.iter_mut().for_each(|p| *p = None);
        self.path[self.point] = Some((usize::MAX, self.point));
        self.orbit.clear();
        self.orbit.push(self.point);
        let mut head = 0;
        while head < self.orbit.len() {
            let prev = self.orbit[head];
            head += 1;
            for (gi, g) in self.gens.iter().enumerate() {
                let q = g.image(prev);
                if self.path[q].is_none() {
                    self.path[q] = Some((gi, prev));
                    self.orbit.push(q);
                }
            }
        }
    }
}

/// Stabilizer chain for the group generated by a set of permutations.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    base: Vec<usize>,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Build a chain for the generated group.  Base points follow
    /// `base_hint` first (useful for reading off point stabilizers), then
    /// smallest moved points.
    pub fn new(degree: usize, gens: &[Perm], base_hint: &[usize]) -> Result<StabilizerChain> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::LengthMismatch(degree, g.degree()));
            }
        }
        for &b in base_hint {
            if b >= degree {
                return Err(Error::CoordRange { coord: b, m: degree });
            }
        }
        let mut chain = StabilizerChain {
            degree,
            base: Vec::new(),
            levels: Vec::new(),
        };
        for &b in base_hint {
            chain.push_base_point(b);
        }
        for g in gens {
            chain.add_generator(g.clone(), 0);
        }
        chain.close();
        Ok(chain)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    /// Orbit of base point i under the level-i strong generators.
    pub fn orbit(&self, level: usize) -> &[usize] {
        &self.levels[level].orbit
    }

    /// Strong generators fixing the first `level` base points pointwise.
    /// Level 0 generates the whole group.
    pub fn level_gens(&self, level: usize) -> Vec<Perm> {
        if level >= self.levels.len() {
            Vec::new()
        } else {
            self.levels[level].gens.clone()
        }
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree && self.sift(0, p.clone()).is_none()
    }

    /// An element mapping the base prefix to `targets`, if one exists.
    pub fn element_mapping(&self, targets: &[usize]) -> Option<Perm> {
        if targets.len() > self.base.len() {
            return None;
        }
        let mut g = Perm::identity(self.degree);
        for (i, &dst) in targets.iter().enumerate() {
            let needed = g.inverse().image(dst);
            let h = self.transversal(i, needed)?;
            g = h.then(&g);
        }
        Some(g)
    }

    /// Transversal element mapping base point `level` to `q`, or None when
    /// q is outside the level orbit.
    pub fn transversal(&self, level: usize, q: usize) -> Option<Perm> {
        let lvl = &self.levels[level];
        lvl.path[q]?;
        let mut gen_indices = Vec::new();
        let mut cur = q;
        while cur != lvl.point {
            let (gi, prev) = lvl.path[cur].unwrap();
            gen_indices.push(gi);
            cur = prev;
        }
        let mut u = Perm::identity(self.degree);
        for &gi in gen_indices.iter().rev() {
            u = u.then(&lvl.gens[gi]);
        }
        Some(u)
    }

    fn push_base_point(&mut self, b: usize) {
        self.base.push(b);
        self.levels.push(Level::new(b, self.degree));
    }

    /// Install `g`, known to fix the first `level` base points, at every
    /// level it belongs to, extending the base when g fixes all of it.
    fn add_generator(&mut self, g: Perm, level: usize) {
        if g.is_identity() {
            return;
        }
        let mut i = level;
        loop {
            if i == self.base.len() {
                let b = (0..self.degree).find(|&x| g.image(x) != x).unwrap();
                self.push_base_point(b);
            }
            if !self.levels[i].gens.contains(&g) {
                self.levels[i].gens.push(g.clone());
                self.levels[i].rebuild();
            }
            if g.image(self.base[i]) != self.base[i] {
                break;
            }
            i += 1;
        }
    }

    /// Reduce p through levels starting at `level`; None when it reduces to
    /// the identity, otherwise the residue and the level it stuck at.
    fn sift(&self, level: usize, mut p: Perm) -> Option<(Perm, usize)> {
        for i in level..self.levels.len() {
            let q = p.image(self.base[i]);
            match self.transversal(i, q) {
                None => return Some((p, i)),
                Some(u) => p = p.then(&u.inverse()),
            }
        }
        if p.is_identity() {
            None
        } else {
            Some((p, self.levels.len()))
        }
    }

    fn close(&mut self) {
        let mut rounds = 0usize;
        loop {
            rounds += 1;
            assert!(rounds < 100_000, "stabilizer chain failed to close");
            let mut dirty = false;
            'scan: for i in 0..self.levels.len() {
                let orbit = self.levels[i].orbit.clone();
                let gens = self.levels[i].gens.clone();
                for &q in &orbit {
                    let uq = self.transversal(i, q).unwrap();
                    for g in &gens {
                        let r = g.image(q);
                        let ur = self.transversal(i, r).unwrap();
                        let schreier = uq.then(g).then(&ur.inverse());
                        if let Some((residue, _)) = self.sift(i + 1, schreier) {
                            self.add_generator(residue, i + 1);
                            dirty = true;
                            break 'scan;
                        }
                    }
                }
            }
            if !dirty {
                break;
            }
        }
    }
}
