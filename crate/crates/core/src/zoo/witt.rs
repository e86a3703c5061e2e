//! The Steiner system S(5, 8, 24) assembled from the projective plane of
//! order four.
//!
//! Take the 21 plane points as coordinates 0..21 and append three new
//! points a = 21, b = 22, c = 23.  The 759 blocks of the unique Steiner
//! system on these 24 points come in four shapes:
//!
//! * each of the 21 lines together with all of a, b, c;
//! * each symmetric difference of two distinct lines, a 6-point set meeting
//!   no new point, taken together with nothing (210 blocks of weight 8
//!   already);
//! * each of the 168 hyperovals together with the pair of new points
//!   complementary to the new point matched to its class;
//! * each of the 360 Baer subplanes together with the single new point
//!   matched to its class.
//!
//! The only freedom is how the three hyperoval classes and three subplane
//! classes are matched to the new points.  The constructor tries the
//! candidate matchings in a fixed order and keeps the first one for which
//! every 5-subset of the 24 points lies in exactly one block, so the result
//! is deterministic and verified from scratch on every build.

use crate::comb::{for_each_combination, BinomTable};
use crate::error::{Error, Result};
use crate::geometry::ovals::OvalClasses;
use crate::geometry::plane::{Plane, N_POINTS};
use crate::word::Word;

/// Number of points of the Steiner system.
pub const N_WITT_POINTS: usize = 24;

/// Number of blocks of S(5, 8, 24).
pub const N_BLOCKS: usize = 759;

/// The three points appended to the plane, in coordinate order.
pub const NEW_POINTS: [usize; 3] = [21, 22, 23];

/// The Steiner system S(5, 8, 24) with its blocks as weight-8 words.
pub struct WittSystem {
    blocks: Vec<Word>,
    /// `fano_point[i]` is the new point attached to subplanes of class i+1.
    fano_point: [usize; 3],
    /// `hyperoval_point[i]` is the new point omitted from the pair attached
    /// to hyperovals of class i+1.
    hyperoval_point: [usize; 3],
}

const PERMS3: [[usize; 3]; 6] =
    [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn candidate_blocks(
    plane: &Plane,
    ovals: &OvalClasses,
    fano_point: [usize; 3],
    hyperoval_point: [usize; 3],
) -> Vec<Word> {
    let mut blocks = Vec::with_capacity(N_BLOCKS);
    let lift = |w: &Word, extra: &[usize]| {
        let mut support = w.support();
        support.extend_from_slice(extra);
        Word::from_support(N_WITT_POINTS, &support)
    };
    for i in 0..N_POINTS {
        blocks.push(lift(&plane.line_word(i), &NEW_POINTS));
    }
    for i in 0..N_POINTS {
        for j in i + 1..N_POINTS {
            blocks.push(lift(&plane.line_word(i).xor(&plane.line_word(j)), &[]));
        }
    }
    for class in 0..3 {
        let pair: Vec<usize> =
            NEW_POINTS.iter().copied().filter(|&p| p != hyperoval_point[class]).collect();
        for h in ovals.hyperoval_family(class as u8 + 1) {
            blocks.push(lift(&h, &pair));
        }
    }
    for class in 0..3 {
        for f in ovals.fano_family(class as u8 + 1) {
            blocks.push(lift(&f, &[fano_point[class]]));
        }
    }
    blocks
}

/// True when every 5-subset of the point set lies in exactly one block.
fn is_steiner_5_design(blocks: &[Word], table: &BinomTable) -> bool {
    let total = table.get(N_WITT_POINTS, 5);
    let mut seen = vec![false; total.try_into().unwrap()];
    let mut marked = 0u64;
    for block in blocks {
        let support = block.support();
        let mut clash = false;
        for_each_combination(support.len(), 5, |pick| {
            let subset: Vec<usize> = pick.iter().map(|&i| support[i]).collect();
            let rank = table.rank(&subset) as usize;
            if seen[rank] {
                clash = true;
            }
            seen[rank] = true;
            marked += 1;
        });
        if clash {
            return false;
        }
    }
    marked == total
}

impl WittSystem {
    pub fn new() -> Result<WittSystem> {
        let plane = Plane::new();
        let ovals = OvalClasses::new(&plane);
        let table = BinomTable::new(N_WITT_POINTS);
        for fp in PERMS3 {
            for hp in PERMS3 {
                let fano_point = fp.map(|i| NEW_POINTS[i]);
                let hyperoval_point = hp.map(|i| NEW_POINTS[i]);
                let blocks = candidate_blocks(&plane, &ovals, fano_point, hyperoval_point);
                debug_assert_eq!(blocks.len(), N_BLOCKS);
                if is_steiner_5_design(&blocks, &table) {
                    return Ok(WittSystem { blocks, fano_point, hyperoval_point });
                }
            }
        }
        Err(Error::Construction(
            "no matching of oval classes to new points yields a Steiner system".into(),
        ))
    }

    /// All 759 blocks as weight-8 words on 24 coordinates.
    pub fn blocks(&self) -> &[Word] {
        &self.blocks
    }

    /// The new point attached to Baer subplanes of the given class (1..=3).
    pub fn fano_point(&self, class: u8) -> usize {
        self.fano_point[class as usize - 1]
    }

    /// The new point omitted from the pair attached to hyperovals of the
    /// given class (1..=3).
    pub fn hyperoval_point(&self, class: u8) -> usize {
        self.hyperoval_point[class as usize - 1]
    }

    /// Blocks whose support contains all of `with` and none of `without`.
    pub fn blocks_selected(&self, with: &[usize], without: &[usize]) -> Vec<Word> {
        self.blocks
            .iter()
            .filter(|b| with.iter().all(|&p| b.get(p)) && without.iter().all(|&p| !b.get(p)))
            .copied()
            .collect()
    }
}
