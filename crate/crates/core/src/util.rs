//! Fixed-width bit vectors shared by the set-system and graph code.

/// A bit vector of fixed length. Bit `i` lives at `words[i / 64]`, position
/// `i % 64` (little-endian within each word). Bits past `len` are kept zero.
///
/// The derived `Ord` is a container order for use in sorted collections; the
/// numeric "value order" (the vector read as a little-endian integer) is
/// [`Bits::cmp_value`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_indices(len: usize, ones: &[usize]) -> Self {
        let mut b = Bits::new(len);
        for &i in ones {
            b.set(i, true);
        }
        b
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        assert!(i < self.len);
        if v {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Size of the symmetric difference. Both operands must share a length.
    pub fn xor_count(&self, other: &Bits) -> usize {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    pub fn and(&self, other: &Bits) -> Bits {
        assert_eq!(self.len, other.len);
        Bits {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// Compares the vectors as little-endian integers.
    pub fn cmp_value(&self, other: &Bits) -> std::cmp::Ordering {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
            match a.cmp(b) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        std::cmp::Ordering::Equal
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    #[test]
    fn value_order_vs_container_order() {
        let a = Bits::from_indices(70, &[0]); // value 1
        let b = Bits::from_indices(70, &[69]); // value 2^69
        assert_eq!(a.cmp_value(&b), Ordering::Less);
        assert_eq!(a.xor_count(&b), 2);
        assert_eq!(a.and(&b).count_ones(), 0);
    }

    #[test]
    fn iter_ones_roundtrip() {
        let ones = [3usize, 17, 64, 64 + 5];
        let b = Bits::from_indices(130, &ones);
        assert_eq!(b.iter_ones().collect::<Vec<_>>(), ones);
        assert_eq!(b.count_ones(), 4);
    }
}
