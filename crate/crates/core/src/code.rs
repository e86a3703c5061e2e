//! Binary codes, linear and explicit.
//!
//! A `Code` is a nonempty set of words of common length m.  Linear codes are
//! stored as a reduced row-echelon basis (pivot columns strictly increasing,
//! each pivot appearing in exactly one row), which makes membership testing,
//! duals, and canonical comparison cheap.  Explicit codes are stored as a
//! sorted, deduplicated word list.
//!
//! Word enumeration for linear codes walks a Gray code over the basis, so a
//! k-dimensional code is visited with one basis XOR per step.

use crate::error::{Error, Result};
use crate::word::Word;

/// Largest dimension for which codeword enumeration is permitted.
pub const MAX_ENUM_DIM: usize = 28;

#[derive(Clone, Debug)]
enum Kind {
    Linear { basis: Vec<Word> },
    Explicit { words: Vec<Word> },
}

#[derive(Clone, Debug)]
pub struct Code {
    m: usize,
    kind: Kind,
}

impl Code {
    /// Linear span of the given generators.
    pub fn linear(m: usize, generators: &[Word]) -> Code {
        let mut basis: Vec<Word> = Vec::new();
        for g in generators {
            assert_eq!(g.len(), m, "generator length mismatch");
            insert_rref(&mut basis, *g);
        }
        Code { m, kind: Kind::Linear { basis } }
    }

    /// Explicit word set; duplicates collapse.
    pub fn explicit(m: usize, words: impl IntoIterator<Item = Word>) -> Code {
        let mut words: Vec<Word> = words.into_iter().inspect(|w| assert_eq!(w.len(), m)).collect();
        words.sort();
        words.dedup();
        Code { m, kind: Kind::Explicit { words } }
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_linear(&self) -> bool {
        matches!(self.kind, Kind::Linear { .. })
    }

    /// Dimension, for linear codes.
    pub fn dim(&self) -> Option<usize> {
        match &self.kind {
            Kind::Linear { basis } => Some(basis.len()),
            Kind::Explicit { .. } => None,
        }
    }

    pub fn basis(&self) -> Option<&[Word]> {
        match &self.kind {
            Kind::Linear { basis } => Some(basis),
            Kind::Explicit { .. } => None,
        }
    }

    /// Explicit word list, when stored explicitly.
    pub fn word_list(&self) -> Option<&[Word]> {
        match &self.kind {
            Kind::Explicit { words } => Some(words),
            Kind::Linear { .. } => None,
        }
    }

    pub fn size(&self) -> u128 {
        match &self.kind {
            Kind::Linear { basis } => {
                assert!(basis.len() < 128);
                1u128 << basis.len()
            }
            Kind::Explicit { words } => words.len() as u128,
        }
    }

    pub fn contains(&self, w: &Word) -> bool {
        if w.len() != self.m {
            return false;
        }
        match &self.kind {
            Kind::Linear { basis } => reduce(basis, *w).is_zero(),
            Kind::Explicit { words } => words.binary_search(w).is_ok(),
        }
    }

    /// Visit every codeword exactly once.  Linear codes are gated at
    /// dimension `MAX_ENUM_DIM`.
    pub fn for_each_word<F: FnMut(&Word)>(&self, mut f: F) -> Result<()> {
        match &self.kind {
            Kind::Explicit { words } => {
                for w in words {
                    f(w);
                }
                Ok(())
            }
            Kind::Linear { basis } => {
                let k = basis.len();
                if k > MAX_ENUM_DIM {
                    return Err(Error::Unsupported(format!(
                        "codeword enumeration for dimension {k} exceeds {MAX_ENUM_DIM}"
                    )));
                }
                let mut cur = Word::zero(self.m);
                f(&cur);
                for step in 1u64..(1u64 << k) {
                    let flip = step.trailing_zeros() as usize;
                    cur = cur.xor(&basis[flip]);
                    f(&cur);
                }
                Ok(())
            }
        }
    }

    /// All codewords, sorted.
    pub fn enumerate(&self) -> Result<Vec<Word>> {
        let mut out = Vec::with_capacity(self.size().min(1 << MAX_ENUM_DIM) as usize);
        self.for_each_word(|w| out.push(*w))?;
        out.sort();
        Ok(out)
    }

    /// Counts of codewords by weight.
    pub fn weight_distribution(&self) -> Result<Vec<u128>> {
        let mut counts = vec![0u128; self.m + 1];
        self.for_each_word(|w| counts[w.weight()] += 1)?;
        Ok(counts)
    }

    /// Smallest distance between two distinct codewords.  For a linear code
    /// this is the minimum nonzero weight; for explicit codes a pair scan is
    /// used, gated at 2^16 words.
    pub fn min_distance(&self) -> Result<usize> {
        match &self.kind {
            Kind::Linear { basis } => {
                if basis.is_empty() {
                    return Err(Error::Undefined("minimum distance of the zero code".into()));
                }
                let mut best = self.m + 1;
                self.for_each_word(|w| {
                    let wt = w.weight();
                    if wt > 0 && wt < best {
                        best = wt;
                    }
                })?;
                Ok(best)
            }
            Kind::Explicit { words } => {
                if words.len() < 2 {
                    return Err(Error::Undefined(
                        "minimum distance of a code with fewer than two words".into(),
                    ));
                }
                if words.len() > 1 << 16 {
                    return Err(Error::Unsupported(format!(
                        "pair scan over {} words exceeds 2^16",
                        words.len()
                    )));
                }
                let mut best = self.m + 1;
                for i in 0..words.len() {
                    for j in i + 1..words.len() {
                        best = best.min(words[i].distance(&words[j]));
                    }
                }
                Ok(best)
            }
        }
    }

    /// Dual code under the standard inner product.
    pub fn dual(&self) -> Result<Code> {
        let basis = match &self.kind {
            Kind::Linear { basis } => basis,
            Kind::Explicit { .. } => {
                return Err(Error::Unsupported("dual of a non-linear code".into()))
            }
        };
        let pivots: Vec<usize> = basis.iter().map(|r| r.first_set().unwrap()).collect();
        let mut is_pivot = vec![false; self.m];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut gens = Vec::with_capacity(self.m - basis.len());
        for f in 0..self.m {
            if is_pivot[f] {
                continue;
            }
            let mut v = Word::zero(self.m);
            v.set(f, true);
            for (row, &p) in basis.iter().zip(&pivots) {
                if row.get(f) {
                    v.set(p, true);
                }
            }
            gens.push(v);
        }
        Ok(Code::linear(self.m, &gens))
    }

    /// Linear span of this code's words.
    pub fn span(&self) -> Result<Code> {
        match &self.kind {
            Kind::Linear { basis } => Ok(Code::linear(self.m, basis)),
            Kind::Explicit { words } => Ok(Code::linear(self.m, words)),
        }
    }

    /// Span of this linear code together with extra words.
    pub fn adjoin(&self, extra: &[Word]) -> Result<Code> {
        match &self.kind {
            Kind::Linear { basis } => {
                let mut gens = basis.clone();
                gens.extend_from_slice(extra);
                Ok(Code::linear(self.m, &gens))
            }
            Kind::Explicit { .. } => {
                Err(Error::Unsupported("adjoining words needs a linear code".into()))
            }
        }
    }

    /// Sum (span of the union) of two linear codes.
    pub fn sum(&self, other: &Code) -> Result<Code> {
        match &other.kind {
            Kind::Linear { basis } => self.adjoin(basis),
            Kind::Explicit { .. } => {
                Err(Error::Unsupported("sums need linear codes".into()))
            }
        }
    }

    /// Intersection of two linear codes, via duality.
    pub fn intersect(&self, other: &Code) -> Result<Code> {
        self.dual()?.sum(&other.dual()?)?.dual()
    }

    /// Is every word of this linear code in the other code?
    pub fn is_subcode_of(&self, other: &Code) -> Result<bool> {
        match &self.kind {
            Kind::Linear { basis } => Ok(basis.iter().all(|w| other.contains(w))),
            Kind::Explicit { words } => Ok(words.iter().all(|w| other.contains(w))),
        }
    }

    /// Delete coordinate `i` from every word (set semantics).
    pub fn puncture(&self, i: usize) -> Result<Code> {
        if i >= self.m {
            return Err(Error::CoordRange { coord: i, m: self.m });
        }
        match &self.kind {
            Kind::Linear { basis } => {
                let rows: Vec<Word> = basis.iter().map(|w| w.puncture(i).unwrap()).collect();
                Ok(Code::linear(self.m - 1, &rows))
            }
            Kind::Explicit { words } => {
                Ok(Code::explicit(self.m - 1, words.iter().map(|w| w.puncture(i).unwrap())))
            }
        }
    }

    /// Keep only words that vanish at coordinate `i`, then delete it.
    pub fn shorten(&self, i: usize) -> Result<Code> {
        if i >= self.m {
            return Err(Error::CoordRange { coord: i, m: self.m });
        }
        match &self.kind {
            Kind::Linear { basis } => {
                let mut clearing: Option<Word> = None;
                let mut rows = Vec::with_capacity(basis.len());
                for r in basis {
                    if r.get(i) {
                        match &clearing {
                            None => clearing = Some(*r),
                            Some(c) => rows.push(r.xor(c)),
                        }
                    } else {
                        rows.push(*r);
                    }
                }
                let rows: Vec<Word> = rows.iter().map(|w| w.puncture(i).unwrap()).collect();
                Ok(Code::linear(self.m - 1, &rows))
            }
            Kind::Explicit { words } => Ok(Code::explicit(
                self.m - 1,
                words.iter().filter(|w| !w.get(i)).map(|w| w.puncture(i).unwrap()),
            )),
        }
    }

    /// Append an overall parity-check coordinate.
    pub fn extend_parity(&self) -> Code {
        match &self.kind {
            Kind::Linear { basis } => {
                let rows: Vec<Word> = basis.iter().map(|w| w.extend(w.parity())).collect();
                Code::linear(self.m + 1, &rows)
            }
            Kind::Explicit { words } => {
                Code::explicit(self.m + 1, words.iter().map(|w| w.extend(w.parity())))
            }
        }
    }

    /// Subcode of even-weight words.
    pub fn even_subcode(&self) -> Code {
        match &self.kind {
            Kind::Linear { basis } => {
                let mut odd: Option<Word> = None;
                let mut rows = Vec::with_capacity(basis.len());
                for r in basis {
                    if r.parity() {
                        match &odd {
                            None => odd = Some(*r),
                            Some(o) => rows.push(r.xor(o)),
                        }
                    } else {
                        rows.push(*r);
                    }
                }
                Code::linear(self.m, &rows)
            }
            Kind::Explicit { words } => {
                Code::explicit(self.m, words.iter().filter(|w| !w.parity()).copied())
            }
        }
    }

    /// Serialize in the code file format: a header line, then one word per
    /// line with coordinate 0 leftmost.  Linear codes list a canonical basis.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        match &self.kind {
            Kind::Linear { basis } => {
                out.push_str(&format!("m={} kind=linear\n", self.m));
                for w in basis {
                    out.push_str(&w.to_string());
                    out.push('\n');
                }
            }
            Kind::Explicit { words } => {
                out.push_str(&format!("m={} kind=explicit\n", self.m));
                for w in words {
                    out.push_str(&w.to_string());
                    out.push('\n');
                }
            }
        }
        out
    }

    pub fn from_file_string(text: &str) -> Result<Code> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty code file".into()))?;
        let mut m: Option<usize> = None;
        let mut kind: Option<&str> = None;
        for field in header.split_whitespace() {
            if let Some(v) = field.strip_prefix("m=") {
                m = Some(v.parse().map_err(|_| Error::Parse(format!("bad m field {v:?}")))?);
            } else if let Some(v) = field.strip_prefix("kind=") {
                kind = Some(v);
            } else {
                return Err(Error::Parse(format!("unexpected header field {field:?}")));
            }
        }
        let m = m.ok_or_else(|| Error::Parse("header missing m=".into()))?;
        let words: Vec<Word> = lines
            .map(|l| {
                let w: Word = l.trim().parse()?;
                if w.len() != m {
                    return Err(Error::Parse(format!(
                        "word length {} does not match m={m}",
                        w.len()
                    )));
                }
                Ok(w)
            })
            .collect::<Result<_>>()?;
        match kind {
            Some("linear") => Ok(Code::linear(m, &words)),
            Some("explicit") => Ok(Code::explicit(m, words)),
            other => Err(Error::Parse(format!("bad kind field {other:?}"))),
        }
    }

    pub fn write_to(&self, path: &std::path::Path) -> Result<()> {
        std::fs::write(path, self.to_file_string())?;
        Ok(())
    }

    pub fn read_from(path: &std::path::Path) -> Result<Code> {
        let text = std::fs::read_to_string(path)?;
        Code::from_file_string(&text)
    }
}

/// Set equality of the underlying word sets.
impl PartialEq for Code {
    fn eq(&self, other: &Code) -> bool {
        if self.m != other.m || self.size() != other.size() {
            return false;
        }
        match (&self.kind, &other.kind) {
            (Kind::Linear { basis: a }, Kind::Linear { basis: b }) => a == b,
            (Kind::Explicit { words: a }, Kind::Explicit { words: b }) => a == b,
            (Kind::Explicit { words }, Kind::Linear { .. }) => {
                words.iter().all(|w| other.contains(w))
            }
            (Kind::Linear { .. }, Kind::Explicit { words }) => {
                words.iter().all(|w| self.contains(w))
            }
        }
    }
}

impl Eq for Code {}

fn reduce(basis: &[Word], mut w: Word) -> Word {
    for row in basis {
        let p = row.first_set().unwrap();
        if w.get(p) {
            w = w.xor(row);
        }
    }
    w
}

fn insert_rref(basis: &mut Vec<Word>, w: Word) {
    let w = reduce(basis, w);
    let Some(p) = w.first_set() else { return };
    for row in basis.iter_mut() {
        if row.get(p) {
            *row = row.xor(&w);
        }
    }
    let at = basis.partition_point(|r| r.first_set().unwrap() < p);
    basis.insert(at, w);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn span_finds_rank_and_canonical_basis() {
        let c = Code::linear(3, &[w("110"), w("011"), w("101")]);
        assert_eq!(c.dim(), Some(2));
        let d = Code::linear(3, &[w("101"), w("011")]);
        assert_eq!(c, d, "same row space must give identical canonical basis");
    }

    #[test]
    fn dual_of_even_weight_code_is_repetition() {
        let even = Code::linear(5, &[w("11000"), w("01100"), w("00110"), w("00011")]);
        let dual = even.dual().unwrap();
        assert_eq!(dual.dim(), Some(1));
        assert!(dual.contains(&Word::all_ones(5)));
        assert_eq!(even.dual().unwrap().dual().unwrap(), even);
    }

    #[test]
    fn dual_dimensions_are_complementary() {
        let c = Code::linear(7, &[w("1110000"), w("0011100"), w("0000111")]);
        assert_eq!(c.dim().unwrap() + c.dual().unwrap().dim().unwrap(), 7);
        let d = c.dual().unwrap();
        c.for_each_word(|a| {
            d.for_each_word(|b| assert!(!a.dot(b))).unwrap();
        })
        .unwrap();
    }

    #[test]
    fn enumeration_counts_match_size() {
        let c = Code::linear(6, &[w("110000"), w("001100"), w("000011")]);
        assert_eq!(c.enumerate().unwrap().len(), 8);
        assert_eq!(c.size(), 8);
    }

    #[test]
    fn min_distance_of_repetition_code() {
        let rep = Code::linear(9, &[Word::all_ones(9)]);
        assert_eq!(rep.min_distance().unwrap(), 9);
    }

    #[test]
    fn zero_code_min_distance_is_undefined() {
        let zero = Code::linear(4, &[]);
        assert!(matches!(zero.min_distance(), Err(Error::Undefined(_))));
    }

    #[test]
    fn explicit_membership_and_dedup() {
        let c = Code::explicit(4, vec![w("0000"), w("1100"), w("1100"), w("0011")]);
        assert_eq!(c.size(), 3);
        assert!(c.contains(&w("1100")));
        assert!(!c.contains(&w("1111")));
    }

    #[test]
    fn puncture_then_extend_parity_restores_even_code() {
        let even = Code::linear(6, &[w("110000"), w("011000"), w("001100"), w("000110")])
            .even_subcode();
        let back = even.puncture(5).unwrap().extend_parity();
        assert_eq!(back, even);
    }

    #[test]
    fn shorten_keeps_words_vanishing_at_coordinate() {
        let c = Code::linear(4, &[w("1100"), w("0110"), w("0011")]);
        let s = c.shorten(0).unwrap();
        assert_eq!(s.dim(), Some(2));
        let direct: Vec<Word> = c
            .enumerate()
            .unwrap()
            .into_iter()
            .filter(|v| !v.get(0))
            .map(|v| v.puncture(0).unwrap())
            .collect();
        assert_eq!(s, Code::explicit(3, direct).span().unwrap());
    }

    #[test]
    fn even_subcode_halves_codes_with_odd_words() {
        let c = Code::linear(5, &[w("10000"), w("01000"), w("00111")]);
        let e = c.even_subcode();
        assert_eq!(e.dim(), Some(2));
        e.for_each_word(|v| assert!(!v.parity())).unwrap();
    }

    #[test]
    fn file_round_trip_both_kinds() {
        let lin = Code::linear(5, &[w("11010"), w("00111")]);
        assert_eq!(Code::from_file_string(&lin.to_file_string()).unwrap(), lin);
        let exp = Code::explicit(3, vec![w("000"), w("111")]);
        assert_eq!(Code::from_file_string(&exp.to_file_string()).unwrap(), exp);
    }

    #[test]
    fn sum_and_intersection_are_lattice_operations() {
        let a = Code::linear(6, &[w("110000"), w("001100")]);
        let b = Code::linear(6, &[w("001100"), w("000011")]);
        let s = a.sum(&b).unwrap();
        let i = a.intersect(&b).unwrap();
        assert_eq!(s.dim(), Some(3));
        assert_eq!(i.dim(), Some(1));
        assert!(i.contains(&w("001100")));
        assert!(i.is_subcode_of(&a).unwrap() && i.is_subcode_of(&b).unwrap());
        assert!(a.is_subcode_of(&s).unwrap() && b.is_subcode_of(&s).unwrap());
        // Dimension formula: dim(a) + dim(b) = dim(a+b) + dim(a^b).
        assert_eq!(
            a.dim().unwrap() + b.dim().unwrap(),
            s.dim().unwrap() + i.dim().unwrap()
        );
    }

    #[test]
    fn explicit_span_matches_linear_construction() {
        let lin = Code::linear(6, &[w("110011"), w("001111")]);
        let spanned = Code::explicit(6, lin.enumerate().unwrap()).span().unwrap();
        assert_eq!(spanned, lin);
    }
}
