//! Subset iteration and ranking helpers.

/// Visit every k-subset of {0..m-1} in colexicographic order.  For words on a
/// fixed length this is ascending order of the packed integer value.
pub fn for_each_combination<F: FnMut(&[usize])>(m: usize, k: usize, mut f: F) {
    if k > m {
        return;
    }
    if k == 0 {
        f(&[]);
        return;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        f(&c);
        let mut i = 0;
        while i + 1 < k && c[i] + 1 == c[i + 1] {
            c[i] = i;
            i += 1;
        }
        c[i] += 1;
        if c[k - 1] >= m {
            return;
        }
    }
}

/// Visit every k-subset of {0..m-1} in lexicographic order of the ascending
/// support sequence, so {0,1} comes first and subsets touching coordinate 0
/// precede all others.
pub fn for_each_combination_lex<F: FnMut(&[usize])>(m: usize, k: usize, mut f: F) {
    if k > m {
        return;
    }
    if k == 0 {
        f(&[]);
        return;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        f(&c);
        let mut i = k;
        while i > 0 && c[i - 1] == m - k + (i - 1) {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        c[i - 1] += 1;
        for j in i..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// Binomial coefficients as u64 (panics on overflow); cached table.
#[derive(Clone)]
pub struct BinomTable {
    n: usize,
    rows: Vec<Vec<u64>>,
}

impl BinomTable {
    pub fn new(n: usize) -> BinomTable {
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut row = vec![1u64; i + 1];
            for j in 1..i {
                row[j] = rows[i - 1][j - 1].checked_add(rows[i - 1][j]).expect("binomial overflow");
            }
            rows.push(row);
        }
        BinomTable { n, rows }
    }

    #[inline]
    pub fn get(&self, n: usize, k: usize) -> u64 {
        if k > n {
            0
        } else {
            self.rows[n][k]
        }
    }

    /// Colex rank of a strictly increasing subset.
    pub fn rank(&self, subset: &[usize]) -> u64 {
        subset.iter().enumerate().map(|(i, &e)| self.get(e, i + 1)).sum()
    }

    pub fn max_n(&self) -> usize {
        self.n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combination_count_and_order() {
        let mut seen = Vec::new();
        for_each_combination(6, 3, |c| seen.push(c.to_vec()));
        assert_eq!(seen.len(), 20);
        assert_eq!(seen[0], vec![0, 1, 2]);
        assert_eq!(seen[1], vec![0, 1, 3]);
        assert_eq!(seen[19], vec![3, 4, 5]);
        let tb = BinomTable::new(6);
        for (i, c) in seen.iter().enumerate() {
            assert_eq!(tb.rank(c), i as u64, "colex rank of {c:?}");
        }
    }

    #[test]
    fn lex_combination_order() {
        let mut seen = Vec::new();
        for_each_combination_lex(5, 3, |c| seen.push(c.to_vec()));
        assert_eq!(seen.len(), 10);
        assert_eq!(seen[0], vec![0, 1, 2]);
        assert_eq!(seen[1], vec![0, 1, 3]);
        assert_eq!(seen[3], vec![0, 2, 3]);
        assert_eq!(seen[9], vec![2, 3, 4]);
        let mut sorted = seen.clone();
        sorted.sort();
        assert_eq!(seen, sorted, "lex enumeration is sorted as sequences");
    }

    #[test]
    fn binomials_match_pascal() {
        let tb = BinomTable::new(30);
        assert_eq!(tb.get(30, 15), 155117520);
        assert_eq!(tb.get(24, 5), 42504);
        assert_eq!(tb.get(5, 9), 0);
    }
}
