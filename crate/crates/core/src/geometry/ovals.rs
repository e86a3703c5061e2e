//! Hyperovals and order-two subplanes of the plane of order four, and their
//! orbit classification.
//!
//! A hyperoval is a 6-point set meeting every line in 0 or 2 points; the
//! plane of order four has 168 of them.  A subplane of order two is a 7-point
//! set meeting every line in 1 or 3 points; there are 360.  Both families
//! split into three orbits (of 56 and 120) under the little projective
//! group, which are cycled by any collineation of non-cube determinant and
//! whose labels here are anchored as follows:
//!
//! - class 1 hyperoval: the conic {(1,t,t^2)} u {(0,0,1)} with its nucleus
//!   (0,1,0);
//! - class 1 subplane: the seven points with coordinates in {0,1};
//! - classes 2 and 3: images of class 1 under diag(1,1,w) applied once and
//!   twice.
//!
//! Every 4-point set in general position (a quadrangle) extends to exactly
//! one hyperoval, because its six secant lines cover all but two points; and
//! in characteristic 2 its three diagonal points are collinear, so adjoining
//! them closes a subplane of order two.  Both enumerations below run over
//! the 2520 quadrangles, giving each hyperoval 15 times and each subplane 7
//! times.

use crate::comb::for_each_combination;
use crate::geometry::gf4::{self, F4};
use crate::geometry::plane::{Plane, N_POINTS};
use crate::word::Word;
use std::collections::HashMap;

pub struct OvalClasses {
    /// All hyperovals, ascending.
    pub hyperovals: Vec<Word>,
    /// Orbit label 1..=3 per hyperoval, parallel to `hyperovals`.
    pub hyperoval_class: Vec<u8>,
    /// All order-two subplanes, ascending.
    pub fanos: Vec<Word>,
    /// Orbit label 1..=3 per subplane, parallel to `fanos`.
    pub fano_class: Vec<u8>,
    /// Anchor hyperovals for classes 1..=3.
    pub delta: [Word; 3],
    /// Anchor subplanes for classes 1..=3.
    pub phi: [Word; 3],
}

impl OvalClasses {
    pub fn new(plane: &Plane) -> OvalClasses {
        let (hyperovals, fanos) = enumerate(plane);
        let tau = plane.matrix_perm(&[[1, 0, 0], [0, 1, 0], [0, 0, gf4::OMEGA]]);

        let d1 = conic_with_nucleus(plane);
        let d2 = plane.apply_perm(&tau, &d1);
        let d3 = plane.apply_perm(&tau, &d2);
        let p1 = plane.rational_subplane();
        let p2 = plane.apply_perm(&tau, &p1);
        let p3 = plane.apply_perm(&tau, &p2);

        let gens = little_group_point_generators(plane);
        let hyperoval_class = classify(plane, &hyperovals, &[&d1, &d2, &d3], &gens);
        let fano_class = classify(plane, &fanos, &[&p1, &p2, &p3], &gens);

        OvalClasses {
            hyperovals,
            hyperoval_class,
            fanos,
            fano_class,
            delta: [d1, d2, d3],
            phi: [p1, p2, p3],
        }
    }

    /// Hyperovals of one class label (1..=3), ascending.
    pub fn hyperoval_family(&self, label: u8) -> Vec<Word> {
        self.hyperovals
            .iter()
            .zip(&self.hyperoval_class)
            .filter(|(_, &c)| c == label)
            .map(|(w, _)| *w)
            .collect()
    }

    /// Subplanes of one class label (1..=3), ascending.
    pub fn fano_family(&self, label: u8) -> Vec<Word> {
        self.fanos
            .iter()
            .zip(&self.fano_class)
            .filter(|(_, &c)| c == label)
            .map(|(w, _)| *w)
            .collect()
    }

    pub fn hyperoval_class_of(&self, w: &Word) -> Option<u8> {
        self.hyperovals.binary_search(w).ok().map(|i| self.hyperoval_class[i])
    }

    pub fn fano_class_of(&self, w: &Word) -> Option<u8> {
        self.fanos.binary_search(w).ok().map(|i| self.fano_class[i])
    }
}

/// The conic xz = y^2 together with its nucleus (0,1,0).
fn conic_with_nucleus(plane: &Plane) -> Word {
    let mut pts = vec![plane.point_index([0, 0, 1]), plane.point_index([0, 1, 0])];
    for t in gf4::ELEMENTS {
        pts.push(plane.point_index([1, t, gf4::mul(t, t)]));
    }
    Word::from_support(N_POINTS, &pts)
}

/// Enumerate hyperovals and order-two subplanes from quadrangle closures.
fn enumerate(plane: &Plane) -> (Vec<Word>, Vec<Word>) {
    let mut hyperovals = Vec::new();
    let mut fanos = Vec::new();
    let mut quadrangles = 0u32;
    let full = Word::all_ones(N_POINTS);
    for_each_combination(N_POINTS, 4, |q| {
        let [a, b, c, d] = [q[0], q[1], q[2], q[3]];
        let general = !plane.collinear(a, b, c)
            && !plane.collinear(a, b, d)
            && !plane.collinear(a, c, d)
            && !plane.collinear(b, c, d);
        if !general {
            return;
        }
        quadrangles += 1;
        let quad = Word::from_support(N_POINTS, q);
        // Hyperoval: the two points off all six secants complete the arc.
        let mut cover = Word::zero(N_POINTS);
        for (i, &p) in q.iter().enumerate() {
            for &r in &q[i + 1..] {
                cover = cover.or(&plane.line_word(plane.line_through(p, r)));
            }
        }
        let free = full.xor(&cover);
        assert_eq!(free.weight(), 2, "a quadrangle leaves exactly two free points");
        hyperovals.push(quad.or(&free));
        // Subplane: adjoin the three diagonal points.
        let d1 = secant_meet(plane, a, b, c, d);
        let d2 = secant_meet(plane, a, c, b, d);
        let d3 = secant_meet(plane, a, d, b, c);
        assert!(plane.collinear(d1, d2, d3), "diagonal points are collinear");
        let fano = quad.or(&Word::from_support(N_POINTS, &[d1, d2, d3]));
        assert_eq!(fano.weight(), 7);
        fanos.push(fano);
    });
    assert_eq!(quadrangles, 2520);
    hyperovals.sort();
    hyperovals.dedup();
    fanos.sort();
    fanos.dedup();
    assert_eq!(hyperovals.len(), 168);
    assert_eq!(fanos.len(), 360);
    for h in &hyperovals {
        for l in plane.line_words() {
            let k = l.and(h).weight();
            assert!(k == 0 || k == 2, "hyperoval meets every line in 0 or 2 points");
        }
    }
    for f in &fanos {
        for l in plane.line_words() {
            let k = l.and(f).weight();
            assert!(k == 1 || k == 3, "subplane meets every line in 1 or 3 points");
        }
    }
    (hyperovals, fanos)
}

/// Meeting point of lines (p q) and (r s).
fn secant_meet(plane: &Plane, p: usize, q: usize, r: usize, s: usize) -> usize {
    let l1 = plane.line_word(plane.line_through(p, q));
    let l2 = plane.line_word(plane.line_through(r, s));
    let meet = l1.and(&l2);
    assert_eq!(meet.weight(), 1);
    meet.first_set().unwrap()
}

/// Point permutations generating the little projective group: all elementary
/// transvections of the 3x3 special linear group.
pub fn little_group_point_generators(plane: &Plane) -> Vec<Vec<usize>> {
    let mut gens = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            for lam in [1, gf4::OMEGA, gf4::OMEGA2] {
                let mut m: [[F4; 3]; 3] = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
                m[i][j] = lam;
                gens.push(plane.matrix_perm(&m));
            }
        }
    }
    gens
}

/// Assign each set the label of the anchor whose orbit reaches it; every set
/// must be reached by exactly one anchor.
fn classify(plane: &Plane, sets: &[Word], anchors: &[&Word; 3], gens: &[Vec<usize>]) -> Vec<u8> {
    let index: HashMap<Word, usize> = sets.iter().enumerate().map(|(i, w)| (*w, i)).collect();
    let mut class = vec![0u8; sets.len()];
    for (label, anchor) in anchors.iter().enumerate() {
        let start = *index.get(anchor).unwrap_or_else(|| panic!("anchor must be enumerated"));
        assert_eq!(class[start], 0, "anchors lie in distinct orbits");
        class[start] = label as u8 + 1;
        let mut queue = vec![start];
        while let Some(i) = queue.pop() {
            for g in gens {
                let img = plane.apply_perm(g, &sets[i]);
                let j = index[&img];
                if class[j] == 0 {
                    class[j] = label as u8 + 1;
                    queue.push(j);
                }
            }
        }
    }
    assert!(class.iter().all(|&c| c != 0), "anchors cover every orbit");
    class
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_sizes_are_56_and_120() {
        let plane = Plane::new();
        let oc = OvalClasses::new(&plane);
        for label in 1..=3 {
            assert_eq!(oc.hyperoval_family(label).len(), 56);
            assert_eq!(oc.fano_family(label).len(), 120);
        }
        assert_eq!(oc.hyperoval_class_of(&oc.delta[0]), Some(1));
        assert_eq!(oc.hyperoval_class_of(&oc.delta[1]), Some(2));
        assert_eq!(oc.hyperoval_class_of(&oc.delta[2]), Some(3));
        assert_eq!(oc.fano_class_of(&oc.phi[0]), Some(1));
        assert_eq!(oc.fano_class_of(&oc.phi[1]), Some(2));
        assert_eq!(oc.fano_class_of(&oc.phi[2]), Some(3));
    }

    #[test]
    fn frobenius_fixes_class_one_and_swaps_the_others() {
        let plane = Plane::new();
        let oc = OvalClasses::new(&plane);
        let frob = plane.frobenius_perm();
        assert_eq!(plane.apply_perm(&frob, &oc.delta[0]), oc.delta[0]);
        assert_eq!(plane.apply_perm(&frob, &oc.delta[1]), oc.delta[2]);
        assert_eq!(plane.apply_perm(&frob, &oc.phi[1]), oc.phi[2]);
        for h in &oc.hyperoval_family(2) {
            assert_eq!(oc.hyperoval_class_of(&plane.apply_perm(&frob, h)), Some(3));
        }
    }

    #[test]
    fn anchors_intersect_consistently() {
        let plane = Plane::new();
        let oc = OvalClasses::new(&plane);
        assert_eq!(oc.delta[0].and(&oc.phi[0]).weight(), 4);
    }

    #[test]
    fn brute_force_subset_scans_agree() {
        // Independent check of the quadrangle-closure enumeration: scan all
        // 6-subsets for sets meeting no line in more than 2 points, and all
        // 7-subsets for sets meeting every line in an odd number of points.
        let plane = Plane::new();
        let oc = OvalClasses::new(&plane);
        let mut direct6 = Vec::new();
        for_each_combination(N_POINTS, 6, |s| {
            let w = Word::from_support(N_POINTS, s);
            if plane.line_words().iter().all(|l| l.and(&w).weight() <= 2) {
                direct6.push(w);
            }
        });
        assert_eq!(direct6, oc.hyperovals);
        let mut direct7 = Vec::new();
        for_each_combination(N_POINTS, 7, |s| {
            let w = Word::from_support(N_POINTS, s);
            if plane.line_words().iter().all(|l| matches!(l.and(&w).weight(), 1 | 3)) {
                direct7.push(w);
            }
        });
        assert_eq!(direct7, oc.fanos);
    }

    #[test]
    fn every_pair_of_fano_points_lies_on_a_three_point_section() {
        let plane = Plane::new();
        let oc = OvalClasses::new(&plane);
        let f = &oc.fanos[17];
        let pts = f.support();
        for (i, &p) in pts.iter().enumerate() {
            for &q in &pts[i + 1..] {
                let l = plane.line_word(plane.line_through(p, q));
                assert_eq!(l.and(f).weight(), 3);
            }
        }
    }
}
