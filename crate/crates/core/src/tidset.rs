/// Fixed-width bitset over transaction positions `0..len`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TidSet {
    words: Vec<u64>,
    len: usize,
}

impl TidSet {
    pub fn empty(len: usize) -> Self {
        TidSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = TidSet::empty(len);
        s.insert_range(0, len);
        s
    }

    /// Sets positions `start..end`.
    pub fn insert_range(&mut self, start: usize, end: usize) {
        for pos in start..end.min(self.len) {
            self.insert(pos);
        }
    }

    pub fn width(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, pos: usize) {
        assert!(pos < self.len, "position {pos} out of range {}", self.len);
        self.words[pos / 64] |= 1 << (pos % 64);
    }

    pub fn contains(&self, pos: usize) -> bool {
        pos < self.len && self.words[pos / 64] & (1 << (pos % 64)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersect_with(&mut self, other: &TidSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &TidSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &TidSet) -> TidSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn union(&self, other: &TidSet) -> TidSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    /// popcount(self ∩ other) without allocating.
    pub fn intersection_count(&self, other: &TidSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_disjoint(&self, other: &TidSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset_of(&self, other: &TidSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + bit)
            })
        })
    }
}

impl std::fmt::Debug for TidSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
