//! The projective plane of order four.
//!
//! Points are nonzero vectors of F4^3 up to scalars, normalized so the first
//! nonzero coordinate is 1, and indexed 0..21 in lexicographic order of the
//! normalized triple.  Lines are indexed the same way through their dual
//! vectors: line u consists of the points p with u0 p0 + u1 p1 + u2 p2 = 0.
//! Point sets (lines among them) are carried as 21-bit words so that the
//! linear-algebra layer can consume them directly.

use crate::geometry::gf4::{self, F4};
use crate::word::Word;

/// Number of points (and lines).
pub const N_POINTS: usize = 21;

/// A projective point or dual vector, normalized.
pub type Triple = [F4; 3];

/// Scale so the first nonzero coordinate becomes 1.
pub fn normalize(v: Triple) -> Triple {
    let lead = v.iter().copied().find(|&c| c != 0).expect("nonzero vector");
    let s = gf4::inv(lead);
    [gf4::mul(s, v[0]), gf4::mul(s, v[1]), gf4::mul(s, v[2])]
}

pub struct Plane {
    points: Vec<Triple>,
    lines: Vec<Triple>,
    line_words: Vec<Word>,
    line_through: Vec<Vec<usize>>,
    lines_on_point: Vec<Vec<usize>>,
}

impl Plane {
    pub fn new() -> Plane {
        let mut points: Vec<Triple> = Vec::with_capacity(N_POINTS);
        for a in gf4::ELEMENTS {
            for b in gf4::ELEMENTS {
                for c in gf4::ELEMENTS {
                    if (a, b, c) == (0, 0, 0) {
                        continue;
                    }
                    let p = normalize([a, b, c]);
                    if !points.contains(&p) {
                        points.push(p);
                    }
                }
            }
        }
        points.sort();
        assert_eq!(points.len(), N_POINTS);
        let lines = points.clone();
        let line_words: Vec<Word> = lines
            .iter()
            .map(|u| {
                let support: Vec<usize> = points
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| dot(u, p) == 0)
                    .map(|(i, _)| i)
                    .collect();
                Word::from_support(N_POINTS, &support)
            })
            .collect();
        let mut line_through = vec![vec![usize::MAX; N_POINTS]; N_POINTS];
        for p in 0..N_POINTS {
            for q in 0..N_POINTS {
                if p == q {
                    continue;
                }
                let u = normalize(cross(&points[p], &points[q]));
                let li = lines.binary_search(&u).expect("cross product is a line");
                line_through[p][q] = li;
            }
        }
        let lines_on_point: Vec<Vec<usize>> = (0..N_POINTS)
            .map(|p| (0..line_words.len()).filter(|&l| line_words[l].get(p)).collect())
            .collect();
        Plane { points, lines, line_words, line_through, lines_on_point }
    }

    pub fn points(&self) -> &[Triple] {
        &self.points
    }

    pub fn point(&self, i: usize) -> Triple {
        self.points[i]
    }

    /// Index of a point given in any scaling.
    pub fn point_index(&self, v: Triple) -> usize {
        self.points.binary_search(&normalize(v)).expect("point of the plane")
    }

    /// All 21 lines as 21-bit point sets, indexed by normalized dual vector.
    pub fn line_words(&self) -> &[Word] {
        &self.line_words
    }

    pub fn line_word(&self, i: usize) -> Word {
        self.line_words[i]
    }

    /// Dual vector of line i.
    pub fn line_vector(&self, i: usize) -> Triple {
        self.lines[i]
    }

    /// Index of the line with the given dual vector, any scaling.
    pub fn line_index(&self, v: Triple) -> usize {
        self.lines.binary_search(&normalize(v)).expect("line of the plane")
    }

    /// Index of the unique line through two distinct points.
    pub fn line_through(&self, p: usize, q: usize) -> usize {
        assert_ne!(p, q);
        self.line_through[p][q]
    }

    /// Indices of the five lines through a point.
    pub fn lines_on(&self, p: usize) -> &[usize] {
        &self.lines_on_point[p]
    }

    pub fn collinear(&self, p: usize, q: usize, r: usize) -> bool {
        if p == q || q == r || p == r {
            return true;
        }
        self.line_words[self.line_through(p, q)].get(r)
    }

    /// Is the word the characteristic vector of a line?
    pub fn is_line_word(&self, w: &Word) -> bool {
        self.line_words.contains(w)
    }

    /// The seven points with all coordinates 0 or 1: a subplane of order two.
    pub fn rational_subplane(&self) -> Word {
        let support: Vec<usize> = self
            .points
            .iter()
            .enumerate()
            .filter(|(_, p)| p.iter().all(|&c| c <= 1))
            .map(|(i, _)| i)
            .collect();
        Word::from_support(N_POINTS, &support)
    }

    /// Permutation of point indices induced by an invertible matrix acting as
    /// p -> M p.
    pub fn matrix_perm(&self, m: &[[F4; 3]; 3]) -> Vec<usize> {
        let perm: Vec<usize> = self
            .points
            .iter()
            .map(|p| self.point_index(apply_matrix(m, p)))
            .collect();
        let mut seen = vec![false; N_POINTS];
        for &i in &perm {
            assert!(!seen[i], "matrix must be invertible");
            seen[i] = true;
        }
        perm
    }

    /// Permutation of point indices induced by the field automorphism applied
    /// coordinatewise.
    pub fn frobenius_perm(&self) -> Vec<usize> {
        self.points
            .iter()
            .map(|p| self.point_index([gf4::frobenius(p[0]), gf4::frobenius(p[1]), gf4::frobenius(p[2])]))
            .collect()
    }

    /// Image of a point set under a point permutation.
    pub fn apply_perm(&self, perm: &[usize], w: &Word) -> Word {
        let support: Vec<usize> = w.support().iter().map(|&i| perm[i]).collect();
        Word::from_support(N_POINTS, &support)
    }
}

impl Default for Plane {
    fn default() -> Plane {
        Plane::new()
    }
}

pub fn apply_matrix(m: &[[F4; 3]; 3], p: &Triple) -> Triple {
    let mut out = [0u8; 3];
    for (i, row) in m.iter().enumerate() {
        let mut acc = 0;
        for (j, &c) in row.iter().enumerate() {
            acc = gf4::add(acc, gf4::mul(c, p[j]));
        }
        out[i] = acc;
    }
    out
}

fn dot(u: &Triple, p: &Triple) -> F4 {
    let mut acc = 0;
    for i in 0..3 {
        acc = gf4::add(acc, gf4::mul(u[i], p[i]));
    }
    acc
}

/// Cross product; in characteristic 2 the sign pattern disappears.
fn cross(p: &Triple, q: &Triple) -> Triple {
    [
        gf4::add(gf4::mul(p[1], q[2]), gf4::mul(p[2], q[1])),
        gf4::add(gf4::mul(p[2], q[0]), gf4::mul(p[0], q[2])),
        gf4::add(gf4::mul(p[0], q[1]), gf4::mul(p[1], q[0])),
    ]
}
