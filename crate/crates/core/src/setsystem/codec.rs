//! Prefix-difference codec for set families.
//!
//! The stream carries the family in greedy order: the seed row verbatim,
//! then for each later row a back-pointer to its nearest earlier row and the
//! symmetric difference against it. Fields are fixed-width and packed
//! MSB-first:
//!
//! - `n`, `m` as two 64-bit big-endian headers;
//! - the seed row as `n` raw bits, element 1 first;
//! - per later row `i`: the pointer minus 1 in `ceil(log2 m)` bits, the
//!   difference size `delta_i` in `ceil(log2 (n + 1))` bits, then the
//!   difference elements, strictly ascending, each minus 1 in
//!   `ceil(log2 n)` bits;
//! - zero padding to a byte boundary.

use crate::error::{Error, Result};
use crate::setsystem::{greedy_ordering, SetFamily};
use crate::util::Bits;

/// Bits needed to write any value in `[0, x)`; 0 for `x <= 1`.
pub fn ceil_log2(x: u64) -> u32 {
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}

/// Exact encoded size in bits (header and payload, excluding byte padding):
/// `128 + n + (m - 1) * (ceil_log2(m) + ceil_log2(n + 1)) + ceil_log2(n) * sum(deltas)`.
pub fn encoded_bit_length(n: usize, m: usize, deltas: &[usize]) -> usize {
    let total_delta: usize = deltas.iter().sum();
    128 + n
        + (m - 1) * (ceil_log2(m as u64) + ceil_log2(n as u64 + 1)) as usize
        + ceil_log2(n as u64) as usize * total_delta
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Encoded {
    pub bytes: Vec<u8>,
    /// Meaningful bits in `bytes`; the rest of the last byte is zero padding.
    pub bit_length: usize,
}

struct BitWriter {
    buf: Vec<u8>,
    nbits: usize,
}

impl BitWriter {
    fn new() -> Self {
        BitWriter {
            buf: Vec::new(),
            nbits: 0,
        }
    }

    fn push_bit(&mut self, bit: bool) {
        if self.nbits % 8 == 0 {
            self.buf.push(0);
        }
        if bit {
            *self.buf.last_mut().unwrap() |= 0x80 >> (self.nbits % 8);
        }
        self.nbits += 1;
    }

    fn push_bits(&mut self, value: u64, width: u32) {
        debug_assert!(width == 64 || value >> width == 0);
        for b in (0..width).rev() {
            self.push_bit(value >> b & 1 == 1);
        }
    }
}

struct BitReader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> BitReader<'a> {
    fn new(bytes: &'a [u8]) -> Self {
        BitReader { bytes, pos: 0 }
    }

    fn read_bit(&mut self) -> Result<bool> {
        let byte = self
            .bytes
            .get(self.pos / 8)
            .ok_or_else(|| Error::MalformedStream("truncated stream".into()))?;
        let bit = byte >> (7 - self.pos % 8) & 1 == 1;
        self.pos += 1;
        Ok(bit)
    }

    fn read_bits(&mut self, width: u32) -> Result<u64> {
        let mut v = 0u64;
        for _ in 0..width {
            v = v << 1 | self.read_bit()? as u64;
        }
        Ok(v)
    }
}

pub fn encode(f: &SetFamily) -> Encoded {
    let (n, m) = (f.n(), f.m());
    let greedy = greedy_ordering(f);
    let wj = ceil_log2(m as u64);
    let wd = ceil_log2(n as u64 + 1);
    let we = ceil_log2(n as u64);

    let mut w = BitWriter::new();
    w.push_bits(n as u64, 64);
    w.push_bits(m as u64, 64);
    let seed = f.row(greedy.order[0]);
    for e in 0..n {
        w.push_bit(seed.get(e));
    }
    for t in 0..m - 1 {
        let row = f.row(greedy.order[t + 1]);
        let against = f.row(greedy.order[greedy.pointers[t] - 1]);
        w.push_bits((greedy.pointers[t] - 1) as u64, wj);
        w.push_bits(greedy.deltas[t] as u64, wd);
        let mut count = 0;
        for e in 0..n {
            if row.get(e) != against.get(e) {
                w.push_bits(e as u64, we);
                count += 1;
            }
        }
        debug_assert_eq!(count, greedy.deltas[t]);
    }
    debug_assert_eq!(w.nbits, encoded_bit_length(n, m, &greedy.deltas));
    Encoded {
        bit_length: w.nbits,
        bytes: w.buf,
    }
}

/// Decodes a stream produced by [`encode`]. The rows come back in the
/// transmitted (greedy) order. Rejects truncation, out-of-range pointers,
/// sizes or elements, unsorted or duplicate difference elements, nonzero
/// padding, and trailing bytes.
pub fn decode(bytes: &[u8]) -> Result<SetFamily> {
    let mut r = BitReader::new(bytes);
    let n = r.read_bits(64)?;
    let m = r.read_bits(64)?;
    if n < 1 || n > 1 << 20 {
        return Err(Error::MalformedStream(format!(
            "ground size {n} outside [1, 2^20]"
        )));
    }
    if m < 1 || m > 1 << 24 {
        return Err(Error::MalformedStream(format!(
            "row count {m} outside [1, 2^24]"
        )));
    }
    let (n, m) = (n as usize, m as usize);
    let wj = ceil_log2(m as u64);
    let wd = ceil_log2(n as u64 + 1);
    let we = ceil_log2(n as u64);

    let mut seed = Bits::new(n);
    for e in 0..n {
        if r.read_bit()? {
            seed.set(e, true);
        }
    }
    let mut rows = vec![seed];
    for i in 2..=m {
        let j = r.read_bits(wj)? as usize + 1;
        if j >= i {
            return Err(Error::MalformedStream(format!(
                "row {i} points at position {j}, expected one below {i}"
            )));
        }
        let delta = r.read_bits(wd)? as usize;
        if delta > n {
            return Err(Error::MalformedStream(format!(
                "difference size {delta} exceeds ground size {n}"
            )));
        }
        let mut row = rows[j - 1].clone();
        let mut prev: Option<usize> = None;
        for _ in 0..delta {
            let e = r.read_bits(we)? as usize;
            if e >= n {
                return Err(Error::MalformedStream(format!(
                    "element {} outside [1, {n}]",
                    e + 1
                )));
            }
            if prev.is_some_and(|p| p >= e) {
                return Err(Error::MalformedStream(
                    "difference elements must strictly ascend".into(),
                ));
            }
            prev = Some(e);
            row.set(e, !row.get(e));
        }
        rows.push(row);
    }
    let consumed = r.pos;
    if bytes.len() * 8 - consumed >= 8 {
        return Err(Error::MalformedStream("trailing bytes".into()));
    }
    while r.pos < bytes.len() * 8 {
        if r.read_bit()? {
            return Err(Error::MalformedStream("nonzero padding".into()));
        }
    }
    SetFamily::new(n, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn width_helper() {
        assert_eq!(ceil_log2(0), 0);
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(3), 2);
        assert_eq!(ceil_log2(4), 2);
        assert_eq!(ceil_log2(5), 3);
        assert_eq!(ceil_log2(1 << 20), 20);
        assert_eq!(ceil_log2((1 << 20) + 1), 21);
    }

    #[test]
    fn roundtrip_small_family() {
        let f = SetFamily::from_sets(2, &[vec![], vec![1], vec![2]]).unwrap();
        let enc = encode(&f);
        // 128 header + 2 seed + 2 * (2 + 2 + 1 * 1) = 140.
        assert_eq!(enc.bit_length, 140);
        assert_eq!(enc.bytes.len(), 18);
        let back = decode(&enc.bytes).unwrap();
        assert!(back.multiset_eq(&f));
        // Rows come back in greedy order: {}, {1}, {2}.
        assert_eq!(back.row(0).count_ones(), 0);
        assert!(back.row(1).get(0));
        assert!(back.row(2).get(1));
    }

    #[test]
    fn single_row_family() {
        let f = SetFamily::from_sets(5, &[vec![2, 4]]).unwrap();
        let enc = encode(&f);
        assert_eq!(enc.bit_length, 128 + 5);
        let back = decode(&enc.bytes).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn rejects_malformed_streams() {
        let f = SetFamily::from_sets(6, &[vec![1, 2], vec![2, 3], vec![5]]).unwrap();
        let enc = encode(&f);
        // Truncation.
        assert!(matches!(
            decode(&enc.bytes[..enc.bytes.len() - 1]),
            Err(Error::MalformedStream(_))
        ));
        // Trailing bytes.
        let mut long = enc.bytes.clone();
        long.push(0);
        assert!(matches!(decode(&long), Err(Error::MalformedStream(_))));
        // Nonzero padding.
        if enc.bit_length % 8 != 0 {
            let mut pad = enc.bytes.clone();
            *pad.last_mut().unwrap() |= 1;
            assert!(matches!(decode(&pad), Err(Error::MalformedStream(_))));
        }
        // Zero row count.
        let mut zero = vec![0u8; 16];
        zero[7] = 1;
        assert!(matches!(decode(&zero), Err(Error::MalformedStream(_))));
    }

    #[test]
    fn bit_length_formula_matches() {
        let f = SetFamily::from_sets(
            9,
            &[vec![1, 2, 3], vec![3, 4], vec![], vec![1, 9], vec![3, 4]],
        )
        .unwrap();
        let g = greedy_ordering(&f);
        let enc = encode(&f);
        assert_eq!(enc.bit_length, encoded_bit_length(9, 5, &g.deltas));
        assert_eq!(enc.bytes.len(), enc.bit_length.div_ceil(8));
        assert!(decode(&enc.bytes).unwrap().multiset_eq(&f));
    }
}
