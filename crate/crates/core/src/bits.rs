//! Fixed-width bitset with shifted-or, the reachable-sum kernel of the
//! zero-sum searches.

#[derive(Clone, Debug)]
pub(crate) struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub(crate) fn new(len: usize) -> Self {
        BitSet { words: vec![0; len.div_ceil(64).max(1)], len }
    }

    #[inline]
    pub(crate) fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn copy_from(&mut self, src: &BitSet) {
        self.words.copy_from_slice(&src.words);
    }

    /// `self |= src << k`, dropping bits at or above `len`.
    pub(crate) fn or_shifted_up(&mut self, src: &BitSet, k: usize) {
        let nw = self.words.len();
        let (ws, bs) = (k / 64, k % 64);
        if ws >= nw {
            return;
        }
        for i in (ws..nw).rev() {
            let j = i - ws;
            let mut v = src.words[j] << bs;
            if bs > 0 && j >= 1 {
                v |= src.words[j - 1] >> (64 - bs);
            }
            self.words[i] |= v;
        }
        self.mask_tail();
    }

    /// `self |= src >> k`.
    pub(crate) fn or_shifted_down(&mut self, src: &BitSet, k: usize) {
        let nw = self.words.len();
        let (ws, bs) = (k / 64, k % 64);
        if ws >= nw {
            return;
        }
        for i in 0..nw - ws {
            let j = i + ws;
            let mut v = src.words[j] >> bs;
            if bs > 0 && j + 1 < nw {
                v |= src.words[j + 1] << (64 - bs);
            }
            self.words[i] |= v;
        }
    }

    /// `self |= rotate(src, k)` on the cyclic group of order `len`.
    pub(crate) fn or_rotated(&mut self, src: &BitSet, k: usize) {
        let k = k % self.len;
        if k == 0 {
            for (d, s) in self.words.iter_mut().zip(&src.words) {
                *d |= s;
            }
            return;
        }
        self.or_shifted_up(src, k);
        self.or_shifted_down(src, self.len - k);
    }

    fn mask_tail(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << rem) - 1;
        }
    }
}
