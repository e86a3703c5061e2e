//! The Nordstrom-Robinson code, cut out of the extended Golay code along
//! an octad.
//!
//! Fix a weight-8 codeword O of the extended Golay code and reorder the 24
//! coordinates so that O occupies the first eight.  Among the 4096 Golay
//! words, keep those whose restriction to O is either zero or has exactly
//! two ones, one of them in O's first position; their restrictions to the
//! remaining 16 coordinates form the Nordstrom-Robinson code, a nonlinear
//! (16, 256, 6) code.  The 32 words restricting to zero on O form its
//! translation kernel, a [16, 5, 8] code with the weight distribution of a
//! first-order Reed-Muller code, and the other seven groups of 32 are the
//! nonzero kernel cosets.
//!
//! Deleting the last coordinate yields the punctured (15, 256, 5) code
//! with covering radius 3.
//!
//! The kernel determines a coordinate labeling by the points of F_2^4:
//! four independent weight-8 kernel words, read columnwise, send each
//! coordinate to a distinct point.  Under that labeling the kernel becomes
//! the first-order Reed-Muller code literally, and since the full code is
//! orthogonal to its kernel, it lands inside the second-order Reed-Muller
//! code, which this module also checks word by word.

use crate::code::Code;
use crate::error::{Error, Result};
use crate::word::Word;
use crate::zoo::golay::golay24;

/// The Reed-Muller code of order r in 2^k coordinates, spanned by the
/// monomials of degree at most r evaluated on F_2^k in binary order.
pub fn reed_muller(r: usize, k: usize) -> Code {
    let m = 1usize << k;
    let mut basis = Vec::new();
    for mask in 0u32..(1 << k) {
        if (mask.count_ones() as usize) <= r {
            let support: Vec<usize> =
                (0..m).filter(|&v| (v as u32) & mask == mask).collect();
            basis.push(Word::from_support(m, &support));
        }
    }
    Code::linear(m, &basis)
}

/// The (16, 256, 6) code together with the octad data used to carve it.
pub struct NordstromRobinson {
    /// The (16, 256, 6) code.
    pub code16: Code,
    /// The [16, 5, 8] translation kernel of `code16`.
    pub kernel16: Code,
    /// The Golay coordinates of the chosen octad, ascending.
    pub octad: Vec<usize>,
}

impl NordstromRobinson {
    pub fn new() -> Result<NordstromRobinson> {
        let g24 = golay24()?;
        let words = g24.enumerate()?;
        let octad_word = words
            .iter()
            .find(|w| w.weight() == 8)
            .ok_or_else(|| Error::Construction("no octad found".into()))?;
        let octad = octad_word.support();
        let rest: Vec<usize> = (0..24).filter(|i| !octad.contains(i)).collect();
        let mut sixteen = Vec::new();
        let mut kernel_words = Vec::new();
        for w in &words {
            let head = w.restrict(&octad);
            let keep = head.is_zero() || (head.weight() == 2 && head.get(0));
            if keep {
                let tail = w.restrict(&rest);
                if head.is_zero() {
                    kernel_words.push(tail);
                }
                sixteen.push(tail);
            }
        }
        let code16 = Code::explicit(16, sixteen);
        if code16.size() != 256 || code16.min_distance()? != 6 {
            return Err(Error::Construction(format!(
                "octad section is not (16, 256, 6): size {}, distance {}",
                code16.size(),
                code16.min_distance()?
            )));
        }
        let kernel16 = Code::linear(16, &kernel_words);
        if kernel16.dim() != Some(5) || kernel16.min_distance()? != 8 {
            return Err(Error::Construction("octad section kernel is not [16, 5, 8]".into()));
        }
        Ok(NordstromRobinson { code16, kernel16, octad })
    }

    /// A coordinate relabeling by F_2^4 read off four independent weight-8
    /// kernel words: position i goes to the point whose bits are the four
    /// words' entries at i.  Returns the permutation image[i] = new
    /// position of old coordinate i.
    pub fn point_labeling(&self) -> Result<Vec<usize>> {
        let eights: Vec<Word> = self
            .kernel16
            .enumerate()?
            .into_iter()
            .filter(|w| w.weight() == 8)
            .collect();
        let n = eights.len();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    'next: for d in c + 1..n {
                        let pick = [&eights[a], &eights[b], &eights[c], &eights[d]];
                        let mut image = vec![0usize; 16];
                        let mut used = [false; 16];
                        for i in 0..16 {
                            let mut point = 0usize;
                            for (bit, h) in pick.iter().enumerate() {
                                if h.get(i) {
                                    point |= 1 << bit;
                                }
                            }
                            if used[point] {
                                continue 'next;
                            }
                            used[point] = true;
                            image[i] = point;
                        }
                        return Ok(image);
                    }
                }
            }
        }
        Err(Error::Construction("no four kernel words label the coordinates".into()))
    }
}

/// The punctured (15, 256, 5) Nordstrom-Robinson code.
pub fn nordstrom_robinson15() -> Result<Code> {
    let code = NordstromRobinson::new()?.code16.puncture(15)?;
    if code.size() != 256 || code.min_distance()? != 5 {
        return Err(Error::Construction("puncturing did not give (15, 256, 5)".into()));
    }
    Ok(code)
}
