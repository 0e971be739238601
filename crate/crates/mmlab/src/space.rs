//! Materialized code space with id-based feedback.
//!
//! Strategies and the benchmark runner work over dense `u32` code ids
//! (positions in lexicographic enumeration order). For small spaces the full
//! pairwise feedback table is precomputed; the table is an invisible
//! optimization — results are identical to calling [`crate::code::feedback`]
//! directly, which the tests assert.

use crate::code::{enumerate_space, feedback_unchecked, Alphabet, Code, Feedback, GameHistory};
use crate::error::{Error, Result};

/// Dense index of a code within its enumerated space.
pub type CodeId = u32;

/// Precompute the pairwise table only while it stays a few dozen MB.
const TABLE_MAX_CODES: usize = 4096;

pub struct Space {
    alphabet: Alphabet,
    codes: Vec<Code>,
    /// `table[g * n + c]` = encoded feedback of guess `g` against secret `c`.
    table: Option<Vec<u8>>,
    /// log2 of 0..=n, shared by entropy scoring so every caller sees
    /// identical floating-point values.
    log2: Vec<f64>,
}

impl Space {
    /// Enumerates the space (guarded by the default limit) and precomputes
    /// the feedback table when the space is small enough.
    pub fn new(alphabet: Alphabet) -> Result<Self> {
        let codes = enumerate_space(&alphabet)?;
        let n = codes.len();
        let table = if n <= TABLE_MAX_CODES && Self::encodable(alphabet.ell()) {
            let mut table = vec![0u8; n * n];
            for (g, guess) in codes.iter().enumerate() {
                let row = &mut table[g * n..(g + 1) * n];
                for (slot, secret) in row.iter_mut().zip(&codes) {
                    let fb = feedback_unchecked(guess.symbols(), secret.symbols());
                    *slot = encode(fb, alphabet.ell());
                }
            }
            Some(table)
        } else {
            None
        };
        let mut log2 = Vec::with_capacity(n + 1);
        log2.push(0.0); // unused; keeps indexing by count direct
        for i in 1..=n {
            log2.push((i as f64).log2());
        }
        Ok(Space {
            alphabet,
            codes,
            table,
            log2,
        })
    }

    fn encodable(ell: u16) -> bool {
        // encoded value = black * (ell + 1) + white <= ell * (ell + 1)
        (ell as u32) * (ell as u32 + 1) <= u8::MAX as u32
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn codes(&self) -> &[Code] {
        &self.codes
    }

    pub fn code(&self, id: CodeId) -> &Code {
        &self.codes[id as usize]
    }

    /// Id of a code valid for this space's alphabet.
    pub fn id_of(&self, code: &Code) -> Result<CodeId> {
        if code.len() != self.alphabet.ell() as usize {
            return Err(Error::LengthMismatch {
                expected: self.alphabet.ell() as usize,
                got: code.len(),
            });
        }
        for &s in code.symbols() {
            if (s as u16) >= self.alphabet.kappa() {
                return Err(Error::SymbolOutOfRange {
                    symbol: s as u16,
                    kappa: self.alphabet.kappa(),
                });
            }
        }
        Ok(code.index(&self.alphabet) as CodeId)
    }

    /// All ids, in enumeration order.
    pub fn all_ids(&self) -> Vec<CodeId> {
        (0..self.codes.len() as CodeId).collect()
    }

    #[inline]
    pub fn feedback_between(&self, guess: CodeId, secret: CodeId) -> Feedback {
        decode(self.encoded_feedback(guess, secret), self.alphabet.ell())
    }

    /// Feedback in the compact `black * (ell + 1) + white` encoding.
    #[inline]
    pub(crate) fn encoded_feedback(&self, guess: CodeId, secret: CodeId) -> u8 {
        match &self.table {
            Some(table) => table[guess as usize * self.codes.len() + secret as usize],
            None => encode(
                feedback_unchecked(
                    self.codes[guess as usize].symbols(),
                    self.codes[secret as usize].symbols(),
                ),
                self.alphabet.ell(),
            ),
        }
    }

    /// Number of distinct encoded feedback values representable for `ell`.
    pub(crate) fn encoded_range(&self) -> usize {
        let ell = self.alphabet.ell() as usize;
        ell * (ell + 1) + 1
    }

    #[inline]
    pub(crate) fn log2_of(&self, count: usize) -> f64 {
        self.log2[count]
    }

    /// Ids of `ids` members that would have produced `fb` for `guess`.
    pub fn narrow(&self, ids: &[CodeId], guess: CodeId, fb: Feedback) -> Vec<CodeId> {
        let encoded = encode(fb, self.alphabet.ell());
        ids.iter()
            .copied()
            .filter(|&c| self.encoded_feedback(guess, c) == encoded)
            .collect()
    }

    /// Ids consistent with an entire history (replays every turn).
    pub fn consistent_ids(&self, history: &GameHistory) -> Result<Vec<CodeId>> {
        let mut ids = self.all_ids();
        for turn in history.turns() {
            let guess = self.id_of(&turn.guess)?;
            ids = self.narrow(&ids, guess, turn.feedback);
        }
        Ok(ids)
    }
}

#[inline]
pub(crate) fn encode(fb: Feedback, ell: u16) -> u8 {
    (fb.black * (ell + 1) + fb.white) as u8
}

#[inline]
pub(crate) fn decode(encoded: u8, ell: u16) -> Feedback {
    let e = encoded as u16;
    Feedback {
        black: e / (ell + 1),
        white: e % (ell + 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::feedback;

    #[test]
    fn table_matches_direct_feedback() {
        // Oracle equivalence: the memoized table must be invisible.
        for (kappa, ell) in [(3u16, 2u16), (4, 3), (6, 4)] {
            let a = Alphabet::new(kappa, ell).unwrap();
            let space = Space::new(a).unwrap();
            assert!(space.table.is_some());
            let n = space.len();
            let step = (n / 50).max(1); // sample pairs on larger spaces
            for g in (0..n).step_by(step) {
                for c in (0..n).step_by(step) {
                    let via_table = space.feedback_between(g as CodeId, c as CodeId);
                    let direct = feedback(space.code(g as CodeId), space.code(c as CodeId)).unwrap();
                    assert_eq!(via_table, direct);
                }
            }
        }
    }

    #[test]
    fn encode_decode_round_trip() {
        let ell = 4u16;
        for black in 0..=ell {
            for white in 0..=(ell - black) {
                let fb = Feedback { black, white };
                assert_eq!(decode(encode(fb, ell), ell), fb);
            }
        }
    }

    #[test]
    fn consistent_ids_matches_filter() {
        use crate::code::{filter_consistent, Code};
        let a = Alphabet::new(4, 3).unwrap();
        let space = Space::new(a).unwrap();
        let secret = Code::parse("BCA", &a).unwrap();
        let guess = Code::parse("AAB", &a).unwrap();
        let fb = feedback(&guess, &secret).unwrap();
        let history: GameHistory = [(guess, fb)].into_iter().collect();

        let ids = space.consistent_ids(&history).unwrap();
        let by_filter = filter_consistent(space.codes(), &history).unwrap();
        let by_ids: Vec<Code> = ids.iter().map(|&i| space.code(i).clone()).collect();
        assert_eq!(by_ids, by_filter);
        assert!(by_ids.contains(&secret));
    }

    #[test]
    fn id_round_trip_and_validation() {
        let a = Alphabet::new(6, 4).unwrap();
        let space = Space::new(a).unwrap();
        let code = Code::parse("FADE", &a).unwrap();
        let id = space.id_of(&code).unwrap();
        assert_eq!(space.code(id), &code);

        let a2 = Alphabet::new(6, 2).unwrap();
        let short = Code::parse("AB", &a2).unwrap();
        assert!(space.id_of(&short).is_err());
    }
}
