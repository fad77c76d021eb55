use core::fmt;

use alloc::vec::Vec;

/// Largest supported system size.
pub const MAX_CELLS: usize = 64;

/// Boolean state of a system of `len` cells.
///
/// Cells are numbered from 1, as in the strategy alphabet `1..=len`. Cell 1
/// is emitted first and is the most significant digit of the textual form.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CellState {
    // bit (i - 1) holds cell i
    word: u64,
    len: u8,
}

impl CellState {
    /// All cells cleared. Panics if `len` is 0 or above [`MAX_CELLS`].
    pub fn zeros(len: usize) -> Self {
        assert!(
            (1..=MAX_CELLS).contains(&len),
            "cell count {len} outside 1..={MAX_CELLS}"
        );
        Self {
            word: 0,
            len: len as u8,
        }
    }

    /// Builds a state from cell values in order `x_1, ..., x_len`.
    pub fn from_bits(bits: &[bool]) -> Self {
        let mut state = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                state.word |= 1 << i;
            }
        }
        state
    }

    /// The low `len` bits of `value`, most significant bit in cell 1.
    pub fn from_big_endian(value: u64, len: usize) -> Self {
        let mut state = Self::zeros(len);
        for cell in 1..=len {
            if value >> (len - cell) & 1 == 1 {
                state.word |= 1 << (cell - 1);
            }
        }
        state
    }

    pub fn len(&self) -> usize {
        usize::from(self.len)
    }

    /// Always false; a state has at least one cell.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Value of cell `cell` (1-based).
    pub fn get(&self, cell: usize) -> bool {
        assert!(
            (1..=self.len()).contains(&cell),
            "cell {cell} outside 1..={}",
            self.len()
        );
        self.word >> (cell - 1) & 1 == 1
    }

    /// Negates cell `cell` (1-based) in place.
    pub fn flip(&mut self, cell: usize) {
        assert!(
            (1..=self.len()).contains(&cell),
            "cell {cell} outside 1..={}",
            self.len()
        );
        self.word ^= 1 << (cell - 1);
    }

    /// Componentwise negation of every cell.
    pub fn complement(&self) -> Self {
        Self {
            word: !self.word & self.mask(),
            len: self.len,
        }
    }

    /// Number of cells that differ. Panics on a length mismatch.
    pub fn hamming(&self, other: &Self) -> usize {
        assert_eq!(self.len, other.len, "cell count mismatch");
        (self.word ^ other.word).count_ones() as usize
    }

    /// Cells in emission order `x_1, ..., x_len`.
    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (1..=self.len()).map(move |cell| self.get(cell))
    }

    pub fn to_vec(&self) -> Vec<bool> {
        self.iter().collect()
    }

    /// The state read as a big-endian integer (cell 1 most significant).
    pub fn to_big_endian(&self) -> u64 {
        self.iter().fold(0, |acc, b| (acc << 1) | u64::from(b))
    }

    fn mask(&self) -> u64 {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len) - 1
        }
    }
}

impl fmt::Display for CellState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for CellState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CellState({self})")
    }
}

/// One chaotic iteration under the vectorial negation: only cell `strategy`
/// is updated, and the negation restricted to that cell flips it.
///
/// Panics if `strategy` is outside `1..=x.len()`.
pub fn chaotic_step(x: CellState, strategy: usize) -> CellState {
    let mut next = x;
    next.flip(strategy);
    next
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::parse_ascii;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn cells(text: &str) -> CellState {
        CellState::from_bits(&parse_ascii(text).unwrap())
    }

    #[test]
    fn flips_only_the_selected_cell() {
        assert_eq!(chaotic_step(cells("10100"), 2), cells("11100"));
        assert_eq!(chaotic_step(cells("11110"), 5), cells("11111"));
    }

    #[test]
    fn big_endian_places_msb_in_cell_one() {
        let x = CellState::from_big_endian(484_076 % 32, 5);
        assert_eq!(x.to_string(), "01100");
        assert_eq!(x.to_big_endian(), 12);
        assert_eq!(
            CellState::from_big_endian(u64::MAX, 64).to_big_endian(),
            u64::MAX
        );
    }

    #[test]
    #[should_panic(expected = "outside")]
    fn strategy_out_of_range_is_a_contract_violation() {
        chaotic_step(cells("10100"), 6);
    }

    #[test]
    #[should_panic(expected = "outside")]
    fn strategy_zero_is_a_contract_violation() {
        chaotic_step(cells("10100"), 0);
    }

    proptest! {
        #[test]
        fn step_is_an_involution(word in any::<u64>(), len in 1usize..=64, s in 1usize..=64) {
            let s = (s - 1) % len + 1;
            let x = CellState::from_big_endian(word, len);
            prop_assert_eq!(chaotic_step(chaotic_step(x, s), s), x);
            prop_assert_eq!(chaotic_step(x, s).hamming(&x), 1);
        }

        #[test]
        fn stepping_every_cell_complements(word in any::<u64>(), len in 1usize..=64) {
            let x = CellState::from_big_endian(word, len);
            let swept = (1..=len).fold(x, chaotic_step);
            prop_assert_eq!(swept, x.complement());
        }
    }
}
