//! Fixed-length bitset used by the subset-sum dynamic programs.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64).max(1)],
        }
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    /// `self |= self << shift`, dropping bits that move past `len`.
    pub fn or_shifted(&mut self, shift: usize) {
        if shift >= self.len {
            return;
        }
        let (word_shift, bit_shift) = (shift / 64, shift % 64);
        for i in (word_shift..self.words.len()).rev() {
            let src = i - word_shift;
            let mut v = self.words[src] << bit_shift;
            if bit_shift != 0 && src > 0 {
                v |= self.words[src - 1] >> (64 - bit_shift);
            }
            self.words[i] |= v;
        }
        self.trim();
    }

    /// Returns `self` rotated by `shift` positions modulo `len`.
    pub fn rotated(&self, shift: usize) -> Bits {
        let mut out = Bits::new(self.len);
        if self.len == 0 {
            return out;
        }
        for i in self.ones() {
            out.set((i + shift) % self.len);
        }
        out
    }

    pub fn union_with(&mut self, other: &Bits) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    fn trim(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.get_mut(self.len / 64) {
                *last &= (1u64 << rem) - 1;
            }
        }
        if self.len == 0 {
            self.words[0] = 0;
        }
    }
}
