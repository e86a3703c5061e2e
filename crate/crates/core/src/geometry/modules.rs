//! Binary codes spanned by the plane's lines and the lattice between a line
//! difference code and its dual.
//!
//! Over the binary field, the span L of the 21 line words has dimension 10
//! and minimum weight 5 (the lines themselves).  Its even-weight subcode P,
//! equivalently the span of all symmetric differences of line pairs, has
//! dimension 9 and minimum weight 8, and is self-orthogonal.  The quotient
//! dual(P)/P is a 3-dimensional binary space on which the little projective
//! group acts trivially, so its 7 nonzero cosets are permutation-invariant;
//! they are represented by a line, the three hyperoval classes, and the
//! three subplane classes, and the 2-dimensional subspaces of the quotient
//! trace out a projective plane of order two on those 7 labels.  Every
//! subspace of the quotient pulls back to an invariant code between P and
//! dual(P), which gives the full 16-node interval of that lattice.

use crate::code::Code;
use crate::error::Result;
use crate::geometry::ovals::{little_group_point_generators, OvalClasses};
use crate::geometry::plane::{Plane, N_POINTS};
use crate::word::Word;

/// Label for a nonzero coset of the line difference code inside its dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosetAnchor {
    /// Any line; all 21 lie in one coset.
    Line,
    /// A hyperoval of the given class, 1..=3.
    Hyperoval(u8),
    /// An order-two subplane of the given class, 1..=3.
    Fano(u8),
}

pub const ALL_ANCHORS: [CosetAnchor; 7] = [
    CosetAnchor::Line,
    CosetAnchor::Hyperoval(1),
    CosetAnchor::Hyperoval(2),
    CosetAnchor::Hyperoval(3),
    CosetAnchor::Fano(1),
    CosetAnchor::Fano(2),
    CosetAnchor::Fano(3),
];

pub struct PlaneModules {
    pub plane: Plane,
    pub ovals: OvalClasses,
    /// Span of the 21 lines, [21,10,5].
    pub line_code: Code,
    /// Even-weight subcode of `line_code`, spanned by line pair differences,
    /// [21,9,8].
    pub even_lines: Code,
    /// Dual of `even_lines`, [21,12,5].
    pub even_lines_dual: Code,
    /// Dual of `line_code`, [21,11,6].
    pub line_code_dual: Code,
    /// Anchor line: the one with dual vector (0,0,1).
    pub ell: Word,
}

impl PlaneModules {
    pub fn new() -> PlaneModules {
        let plane = Plane::new();
        let ovals = OvalClasses::new(&plane);
        let line_code = Code::linear(N_POINTS, plane.line_words());
        let even_lines = line_code.even_subcode();
        let even_lines_dual = even_lines.dual().expect("linear");
        let line_code_dual = line_code.dual().expect("linear");
        let ell = plane.line_word(plane.line_index([0, 0, 1]));
        assert_eq!(line_code.dim(), Some(10));
        assert_eq!(even_lines.dim(), Some(9));
        PlaneModules { plane, ovals, line_code, even_lines, even_lines_dual, line_code_dual, ell }
    }

    /// Representative word of a nonzero quotient coset.
    pub fn coset_rep(&self, a: CosetAnchor) -> Word {
        match a {
            CosetAnchor::Line => self.ell,
            CosetAnchor::Hyperoval(i) => self.ovals.delta[i as usize - 1],
            CosetAnchor::Fano(i) => self.ovals.phi[i as usize - 1],
        }
    }

    /// The code generated by `even_lines` and the given coset representatives.
    pub fn adjoin(&self, anchors: &[CosetAnchor]) -> Code {
        let extra: Vec<Word> = anchors.iter().map(|&a| self.coset_rep(a)).collect();
        self.even_lines.adjoin(&extra).expect("linear")
    }

    /// The third anchor on the quotient-plane line through two others.
    pub fn third_on_line(&self, a: CosetAnchor, b: CosetAnchor) -> Result<CosetAnchor> {
        let sum = self.coset_rep(a).xor(&self.coset_rep(b));
        for c in ALL_ANCHORS {
            if self.even_lines.contains(&sum.xor(&self.coset_rep(c))) {
                return Ok(c);
            }
        }
        Err(crate::error::Error::Construction(
            "coset sum matches no anchor".into(),
        ))
    }

    /// The 16 codes between `even_lines` and its dual: for every subspace of
    /// the 8-element quotient, the span of `even_lines` with its
    /// representatives.  Sorted by dimension, then by canonical basis.
    pub fn interval_nodes(&self) -> Vec<Code> {
        let reps: Vec<Word> = ALL_ANCHORS.iter().map(|&a| self.coset_rep(a)).collect();
        let mut nodes = Vec::new();
        // Subsets of the quotient containing 0 and closed under addition are
        // exactly its subspaces; scan all masks of the 7 nonzero cosets.
        for mask in 0u32..(1 << 7) {
            let members: Vec<Word> = (0..7).filter(|&i| mask >> i & 1 == 1).map(|i| reps[i]).collect();
            let closed = (0..members.len()).all(|i| {
                (i + 1..members.len()).all(|j| {
                    let s = members[i].xor(&members[j]);
                    members.iter().any(|r| self.even_lines.contains(&s.xor(r)))
                        || self.even_lines.contains(&s)
                })
            });
            if closed {
                nodes.push(self.even_lines.adjoin(&members).expect("linear"));
            }
        }
        sort_codes(&mut nodes);
        nodes
    }

    /// The full invariant lattice: the interval nodes plus the zero code, the
    /// repetition code, the even-weight code, and the whole space.
    pub fn lattice_nodes(&self) -> Vec<Code> {
        let mut nodes = self.interval_nodes();
        let zero = Code::linear(N_POINTS, &[]);
        let repetition = Code::linear(N_POINTS, &[Word::all_ones(N_POINTS)]);
        let even_weight = repetition.dual().expect("linear");
        let full: Vec<Word> =
            (0..N_POINTS).map(|i| Word::from_support(N_POINTS, &[i])).collect();
        nodes.push(zero);
        nodes.push(repetition);
        nodes.push(even_weight);
        nodes.push(Code::linear(N_POINTS, &full));
        sort_codes(&mut nodes);
        nodes
    }

    /// Permutation generators of the little projective group on points.
    pub fn invariance_generators(&self) -> Vec<Vec<usize>> {
        little_group_point_generators(&self.plane)
    }
}

impl Default for PlaneModules {
    fn default() -> PlaneModules {
        PlaneModules::new()
    }
}

fn sort_codes(nodes: &mut [Code]) {
    nodes.sort_by_key(|c| {
        (c.dim().unwrap(), c.basis().unwrap().to_vec())
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use CosetAnchor::*;

    fn modules() -> PlaneModules {
        PlaneModules::new()
    }

    #[test]
    fn dimensions_and_minimum_distances() {
        let m = modules();
        assert_eq!(m.even_lines.dim(), Some(9));
        assert_eq!(m.line_code.dim(), Some(10));
        assert_eq!(m.line_code_dual.dim(), Some(11));
        assert_eq!(m.even_lines_dual.dim(), Some(12));
        assert_eq!(m.even_lines.min_distance().unwrap(), 8);
        assert_eq!(m.line_code.min_distance().unwrap(), 5);
        assert_eq!(m.line_code_dual.min_distance().unwrap(), 6);
        assert_eq!(m.even_lines_dual.min_distance().unwrap(), 5);
    }

    #[test]
    fn inclusions_and_duality() {
        let m = modules();
        assert!(m.even_lines.is_subcode_of(&m.line_code).unwrap());
        assert!(m.line_code.is_subcode_of(&m.even_lines_dual).unwrap());
        assert!(m.even_lines.is_subcode_of(&m.line_code_dual).unwrap());
        assert!(m.line_code_dual.is_subcode_of(&m.even_lines_dual).unwrap());
        // The span of lines with the all-ones word is still the line span.
        let one = Word::all_ones(N_POINTS);
        assert!(m.line_code.contains(&one));
        assert!(!m.even_lines.contains(&one));
        assert!(m.even_lines.contains(&one.xor(&m.ell)));
    }

    #[test]
    fn minimum_words_are_the_geometric_objects() {
        let m = modules();
        // Weight-5 words of the line span are exactly the 21 lines.
        let mut fives = Vec::new();
        m.line_code.for_each_word(|w| {
            if w.weight() == 5 {
                fives.push(*w);
            }
        })
        .unwrap();
        fives.sort();
        let mut lines = m.plane.line_words().to_vec();
        lines.sort();
        assert_eq!(fives, lines);
        // Weight-6 words of each hyperoval join are that class, and of the
        // full dual of the line span, all 168 hyperovals.
        for label in 1..=3u8 {
            let join = m.adjoin(&[Hyperoval(label)]);
            let mut sixes = Vec::new();
            join.for_each_word(|w| {
                if w.weight() == 6 {
                    sixes.push(*w);
                }
            })
            .unwrap();
            sixes.sort();
            assert_eq!(sixes, m.ovals.hyperoval_family(label));
        }
        let mut sixes = Vec::new();
        m.line_code_dual
            .for_each_word(|w| {
                if w.weight() == 6 {
                    sixes.push(*w);
                }
            })
            .unwrap();
        assert_eq!(sixes.len(), 168);
    }

    #[test]
    fn quotient_cosets_are_labeled_by_the_seven_anchors() {
        let m = modules();
        // Anchors lie in the dual of even_lines, in seven distinct nonzero
        // cosets.
        for a in ALL_ANCHORS {
            let r = m.coset_rep(a);
            assert!(m.even_lines_dual.contains(&r));
            assert!(!m.even_lines.contains(&r));
        }
        for (i, a) in ALL_ANCHORS.iter().enumerate() {
            for b in &ALL_ANCHORS[i + 1..] {
                let s = m.coset_rep(*a).xor(&m.coset_rep(*b));
                assert!(!m.even_lines.contains(&s), "{a:?} and {b:?} share a coset");
            }
        }
        // Whole families fall in the coset of their anchor.
        for line in m.plane.line_words() {
            assert!(m.even_lines.contains(&line.xor(&m.ell)));
        }
        for label in 1..=3u8 {
            let d = m.coset_rep(Hyperoval(label));
            for h in &m.ovals.hyperoval_family(label) {
                assert!(m.even_lines.contains(&h.xor(&d)));
            }
            let f = m.coset_rep(Fano(label));
            for p in &m.ovals.fano_family(label) {
                assert!(m.even_lines.contains(&p.xor(&f)));
            }
        }
    }

    #[test]
    fn quotient_lines_form_the_expected_plane_of_order_two() {
        let m = modules();
        let expected = [
            (Line, Hyperoval(1), Fano(1)),
            (Line, Hyperoval(2), Fano(2)),
            (Line, Hyperoval(3), Fano(3)),
            (Hyperoval(1), Hyperoval(2), Hyperoval(3)),
            (Hyperoval(1), Fano(2), Fano(3)),
            (Hyperoval(2), Fano(3), Fano(1)),
            (Hyperoval(3), Fano(1), Fano(2)),
        ];
        for (a, b, c) in expected {
            assert_eq!(m.third_on_line(a, b).unwrap(), c, "{a:?}+{b:?}");
        }
    }

    #[test]
    fn interval_has_sixteen_nodes_closed_under_sum_meet_and_duality() {
        let m = modules();
        let nodes = m.interval_nodes();
        assert_eq!(nodes.len(), 16);
        let dims: Vec<usize> = nodes.iter().map(|c| c.dim().unwrap()).collect();
        let count = |d: usize| dims.iter().filter(|&&x| x == d).count();
        assert_eq!((count(9), count(10), count(11), count(12)), (1, 7, 7, 1));
        for i in 0..nodes.len() {
            for j in 0..nodes.len() {
                let s = nodes[i].sum(&nodes[j]).unwrap();
                let t = nodes[i].intersect(&nodes[j]).unwrap();
                assert!(nodes.contains(&s));
                assert!(nodes.contains(&t));
            }
            let d = nodes[i].dual().unwrap();
            assert!(nodes.contains(&d), "interval is closed under duality");
        }
    }

    #[test]
    fn full_lattice_has_twenty_invariant_nodes() {
        let m = modules();
        let nodes = m.lattice_nodes();
        assert_eq!(nodes.len(), 20);
        let gens = m.invariance_generators();
        for node in &nodes {
            for g in &gens {
                for row in node.basis().unwrap() {
                    let img = m.plane.apply_perm(g, row);
                    assert!(node.contains(&img), "node must be invariant");
                }
            }
        }
        for i in 0..nodes.len() {
            for j in 0..nodes.len() {
                assert!(nodes.contains(&nodes[i].sum(&nodes[j]).unwrap()));
                assert!(nodes.contains(&nodes[i].intersect(&nodes[j]).unwrap()));
            }
        }
    }

    #[test]
    fn specific_dualities_pair_hyperoval_and_subplane_joins() {
        let m = modules();
        let a = m.adjoin(&[Hyperoval(1)]);
        let b = m.adjoin(&[Line, Hyperoval(1)]);
        assert_eq!(a.dual().unwrap(), b);
        assert!(a.is_subcode_of(&a.dual().unwrap()).unwrap(), "self-orthogonal");
        let c = m.adjoin(&[Fano(1)]);
        let d = m.adjoin(&[Hyperoval(1), Fano(2)]);
        assert_eq!(c.dual().unwrap(), d);
        let e = m.adjoin(&[Line]);
        assert_eq!(e, m.line_code);
        assert_eq!(e.dual().unwrap(), m.line_code_dual);
        assert_eq!(
            m.line_code_dual,
            m.adjoin(&[Hyperoval(1), Hyperoval(2)])
        );
    }
}
