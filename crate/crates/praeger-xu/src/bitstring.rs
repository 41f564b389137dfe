//! Fixed-length binary words and the primitive word operations
//! (reversal, single-bit flips, parity) that every group action
//! in this crate reduces to.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Hard upper limit on word length.
pub const MAX_WORD_LEN: usize = 24;

/// Parity of the number of ones in a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// A binary word of fixed length `k`, 1 <= k <= 24.
///
/// Position 0 is the leftmost bit, so `"011"` has bit 0 = 0, bit 1 = 1,
/// bit 2 = 1. Internally the word is packed as the integer whose binary
/// numeral reads the word left to right (bit 0 most significant); that
/// integer is exposed as [`BitWord::numeral`] and is what vertex ids and
/// display ordering are built on. Words of different lengths never
/// compare equal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitWord {
    len: u8,
    bits: u32,
}

impl BitWord {
    fn check_len(len: usize) -> Result<()> {
        if len == 0 || len > MAX_WORD_LEN {
            return Err(Error::InvalidParams(format!(
                "word length must be in 1..={MAX_WORD_LEN}, got {len}"
            )));
        }
        Ok(())
    }

    /// The all-zeros word of length `len`.
    pub fn zeros(len: usize) -> Result<Self> {
        Self::check_len(len)?;
        Ok(BitWord {
            len: len as u8,
            bits: 0,
        })
    }

    /// The all-ones word of length `len`.
    pub fn ones(len: usize) -> Result<Self> {
        Self::check_len(len)?;
        Ok(BitWord {
            len: len as u8,
            bits: (1u32 << len) - 1,
        })
    }

    /// Builds a word from its numeral (bit 0 most significant).
    pub fn from_numeral(numeral: u32, len: usize) -> Result<Self> {
        Self::check_len(len)?;
        if numeral >> len != 0 {
            return Err(Error::InvalidParams(format!(
                "numeral {numeral} does not fit in {len} bits"
            )));
        }
        Ok(BitWord {
            len: len as u8,
            bits: numeral,
        })
    }

    /// Builds a word from individual bits, position 0 first.
    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        Self::check_len(bits.len())?;
        let mut packed = 0u32;
        for &b in bits {
            packed = (packed << 1) | b as u32;
        }
        Ok(BitWord {
            len: bits.len() as u8,
            bits: packed,
        })
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        false // length is always >= 1
    }

    /// The packed numeral with bit 0 most significant.
    pub fn numeral(&self) -> u32 {
        self.bits
    }

    /// Bit at position `j` (0-based from the left).
    pub fn get(&self, j: usize) -> Result<bool> {
        if j >= self.len() {
            return Err(Error::BitIndex {
                index: j,
                len: self.len(),
            });
        }
        Ok((self.bits >> (self.len() - 1 - j)) & 1 == 1)
    }

    /// The word read right to left.
    pub fn reverse(&self) -> Self {
        let k = self.len();
        BitWord {
            len: self.len,
            bits: self.bits.reverse_bits() >> (32 - k),
        }
    }

    /// The word with bit `j` flipped.
    pub fn flip(&self, j: usize) -> Result<Self> {
        if j >= self.len() {
            return Err(Error::BitIndex {
                index: j,
                len: self.len(),
            });
        }
        Ok(BitWord {
            len: self.len,
            bits: self.bits ^ (1 << (self.len() - 1 - j)),
        })
    }

    /// Parity of the number of ones.
    pub fn parity(&self) -> Parity {
        if self.bits.count_ones() % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// True iff the word equals its reversal.
    pub fn is_palindrome(&self) -> bool {
        *self == self.reverse()
    }

    /// All words of length `len` in numeral order.
    pub fn all(len: usize) -> Result<impl Iterator<Item = BitWord> + Clone> {
        Self::check_len(len)?;
        Ok((0u32..1 << len).map(move |w| BitWord {
            len: len as u8,
            bits: w,
        }))
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.len() {
            let bit = (self.bits >> (self.len() - 1 - j)) & 1;
            write!(f, "{bit}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

impl FromStr for BitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || s.len() > MAX_WORD_LEN {
            return Err(Error::Parse(format!("bad word length in {s:?}")));
        }
        let mut bits = 0u32;
        for c in s.chars() {
            bits = (bits << 1)
                | match c {
                    '0' => 0,
                    '1' => 1,
                    _ => return Err(Error::Parse(format!("bad bit character {c:?} in {s:?}"))),
                };
        }
        Ok(BitWord {
            len: s.len() as u8,
            bits,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BitWord {
        s.parse().unwrap()
    }

    #[test]
    fn reverse_matches_definition() {
        assert_eq!(w("001").reverse(), w("100"));
        assert_eq!(w("101").reverse(), w("101"));
        assert_eq!(w("0110").reverse(), w("0110"));
        assert_eq!(w("0010").reverse(), w("0100"));
    }

    #[test]
    fn reverse_is_involutive_exhaustively() {
        for len in 1..=12 {
            for word in BitWord::all(len).unwrap() {
                assert_eq!(word.reverse().reverse(), word);
            }
        }
    }

    #[test]
    fn flip_changes_exactly_one_position() {
        assert_eq!(w("000").flip(1).unwrap(), w("010"));
        assert_eq!(w("111").flip(0).unwrap(), w("011"));
        assert!(w("101").flip(3).is_err());
    }

    #[test]
    fn flips_are_commuting_involutions() {
        for len in 1..=6 {
            for word in BitWord::all(len).unwrap() {
                for j in 0..len {
                    assert_eq!(word.flip(j).unwrap().flip(j).unwrap(), word);
                    for j2 in 0..len {
                        if j2 != j {
                            assert_eq!(
                                word.flip(j).unwrap().flip(j2).unwrap(),
                                word.flip(j2).unwrap().flip(j).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parity_counts_ones() {
        assert_eq!(w("00").parity(), Parity::Even);
        assert_eq!(w("01").parity(), Parity::Odd);
        assert_eq!(w("11").parity(), Parity::Even);
    }

    #[test]
    fn flip_toggles_parity() {
        for len in 1..=8 {
            for word in BitWord::all(len).unwrap() {
                for j in 0..len {
                    assert_ne!(word.flip(j).unwrap().parity(), word.parity());
                }
            }
        }
    }

    #[test]
    fn palindromes() {
        assert!(w("010").is_palindrome());
        assert!(!w("011").is_palindrome());
        assert!(w("0").is_palindrome());
        assert!(w("1").is_palindrome());
    }

    #[test]
    fn display_and_parse_round_trip() {
        for len in 1..=8 {
            for word in BitWord::all(len).unwrap() {
                let text = word.to_string();
                assert_eq!(text.len(), len);
                assert_eq!(text.parse::<BitWord>().unwrap(), word);
            }
        }
    }

    #[test]
    fn words_of_different_lengths_differ() {
        assert_ne!(w("01"), w("001"));
        assert_ne!(BitWord::zeros(2).unwrap(), BitWord::zeros(3).unwrap());
    }

    #[test]
    fn numeral_reads_left_to_right() {
        assert_eq!(w("011").numeral(), 3);
        assert_eq!(w("100").numeral(), 4);
        assert_eq!(BitWord::from_numeral(5, 3).unwrap(), w("101"));
        assert!(BitWord::from_numeral(8, 3).is_err());
    }
}
