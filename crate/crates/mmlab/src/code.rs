//! Codes, the feedback rule, game history, and the consistency predicate.
//!
//! Everything else in the crate is defined in terms of these types and the
//! two pure functions [`feedback`] and [`is_consistent`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Symbols are integer indices `0..kappa`; letters are presentation only.
pub type Symbol = u8;

/// Default cap on guesses per game; exceeding it records a failed game.
pub const DEFAULT_GUESS_CAP: usize = 15;

/// Default ceiling on how many codes [`enumerate_space`] will materialize.
pub const DEFAULT_SPACE_LIMIT: u64 = 10_000_000;

/// Problem size: `kappa` symbols, codes of length `ell`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    kappa: u16,
    ell: u16,
}

impl Alphabet {
    /// At most 256 symbols (symbols are stored as bytes); `ell >= 1`.
    pub fn new(kappa: u16, ell: u16) -> Result<Self> {
        if kappa == 0 || kappa > 256 || ell == 0 {
            return Err(Error::InvalidAlphabet {
                kappa: kappa as u64,
                ell: ell as u64,
            });
        }
        Ok(Alphabet { kappa, ell })
    }

    /// Number of symbols (`kappa`).
    pub fn kappa(&self) -> u16 {
        self.kappa
    }

    /// Code length (`ell`).
    pub fn ell(&self) -> u16 {
        self.ell
    }

    /// `kappa^ell`, or `None` if it does not fit a `u128`.
    pub fn space_size(&self) -> Option<u128> {
        (self.kappa as u128).checked_pow(self.ell as u32)
    }

    fn check_symbols(&self, symbols: &[Symbol]) -> Result<()> {
        if symbols.len() != self.ell as usize {
            return Err(Error::LengthMismatch {
                expected: self.ell as usize,
                got: symbols.len(),
            });
        }
        for &s in symbols {
            if (s as u16) >= self.kappa {
                return Err(Error::SymbolOutOfRange {
                    symbol: s as u16,
                    kappa: self.kappa,
                });
            }
        }
        Ok(())
    }
}

/// A length-`ell` sequence of symbol indices; the atom of the search space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Code {
    symbols: Vec<Symbol>,
}

impl Code {
    pub fn new(symbols: Vec<Symbol>, alphabet: &Alphabet) -> Result<Self> {
        alphabet.check_symbols(&symbols)?;
        Ok(Code { symbols })
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// The code at `index` in lexicographic enumeration order.
    pub fn from_index(index: u64, alphabet: &Alphabet) -> Code {
        let ell = alphabet.ell as usize;
        let kappa = alphabet.kappa as u64;
        let mut symbols = vec![0u8; ell];
        let mut rest = index;
        for slot in symbols.iter_mut().rev() {
            *slot = (rest % kappa) as u8;
            rest /= kappa;
        }
        Code { symbols }
    }

    /// Position of this code in lexicographic enumeration order.
    pub fn index(&self, alphabet: &Alphabet) -> u64 {
        let kappa = alphabet.kappa as u64;
        self.symbols
            .iter()
            .fold(0u64, |acc, &s| acc * kappa + s as u64)
    }

    /// Parses the letter form (`'A'` is symbol 0). Round-trips with
    /// [`fmt::Display`] for alphabets of at most 26 symbols.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Code> {
        let mut symbols = Vec::with_capacity(text.len());
        for ch in text.chars() {
            if !ch.is_ascii_uppercase() {
                return Err(Error::InvalidCodeText(text.to_string()));
            }
            symbols.push((ch as u8) - b'A');
        }
        Code::new(symbols, alphabet).map_err(|_| Error::InvalidCodeText(text.to_string()))
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            if s < 26 {
                write!(f, "{}", (b'A' + s) as char)?;
            } else {
                write!(f, "<{}>", s)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Code {
    // Codes read better as letters in assertions and diagnostics.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Codemaker response: exact matches (black) and misplaced matches (white).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Feedback {
    pub black: u16,
    pub white: u16,
}

impl Feedback {
    pub fn new(black: u16, white: u16) -> Self {
        Feedback { black, white }
    }

    /// True when the guess equals the secret for codes of length `ell`.
    pub fn is_win(&self, ell: u16) -> bool {
        self.black == ell
    }
}

impl fmt::Display for Feedback {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}b{}w", self.black, self.white)
    }
}

impl FromStr for Feedback {
    type Err = Error;

    /// Parses the `"2b1w"` form.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::InvalidFeedbackText(s.to_string());
        let rest = s.trim();
        let b_pos = rest.find(['b', 'B']).ok_or_else(err)?;
        let w_pos = rest.find(['w', 'W']).ok_or_else(err)?;
        if w_pos != rest.len() - 1 || b_pos >= w_pos {
            return Err(err());
        }
        let black: u16 = rest[..b_pos].trim().parse().map_err(|_| err())?;
        let white: u16 = rest[b_pos + 1..w_pos].trim().parse().map_err(|_| err())?;
        Ok(Feedback { black, white })
    }
}

/// One played turn.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Turn {
    pub guess: Code,
    pub feedback: Feedback,
}

/// Ordered record of played guesses and their feedback; the constraint that
/// defines which codes are still candidates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GameHistory {
    turns: Vec<Turn>,
}

impl GameHistory {
    pub fn new() -> Self {
        GameHistory { turns: Vec::new() }
    }

    /// Records a turn. Re-playing a guess is rejected: it can never gain
    /// information and indicates a solver bug.
    pub fn push(&mut self, guess: Code, feedback: Feedback) -> Result<()> {
        if self.turns.iter().any(|t| t.guess == guess) {
            return Err(Error::DuplicateGuess(guess.to_string()));
        }
        self.turns.push(Turn { guess, feedback });
        Ok(())
    }

    pub fn turns(&self) -> &[Turn] {
        &self.turns
    }

    pub fn len(&self) -> usize {
        self.turns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.turns.is_empty()
    }
}

impl FromIterator<(Code, Feedback)> for GameHistory {
    fn from_iter<I: IntoIterator<Item = (Code, Feedback)>>(iter: I) -> Self {
        let turns = iter
            .into_iter()
            .map(|(guess, feedback)| Turn { guess, feedback })
            .collect();
        GameHistory { turns }
    }
}

/// The feedback rule: black counts positions where guess and secret agree;
/// white counts symbols present in both (by multiset intersection) minus the
/// black ones.
pub fn feedback(guess: &Code, secret: &Code) -> Result<Feedback> {
    if guess.len() != secret.len() {
        return Err(Error::LengthMismatch {
            expected: secret.len(),
            got: guess.len(),
        });
    }
    Ok(feedback_unchecked(guess.symbols(), secret.symbols()))
}

/// Allocation-free feedback over raw symbol slices of equal length.
pub(crate) fn feedback_unchecked(guess: &[Symbol], secret: &[Symbol]) -> Feedback {
    let mut black = 0u16;
    for (g, s) in guess.iter().zip(secret) {
        if g == s {
            black += 1;
        }
    }
    // Multiset intersection: for each distinct symbol of the guess, count its
    // occurrences in both codes. O(ell^2) but allocation-free; ell is small.
    let mut matched = 0u16;
    for (i, &g) in guess.iter().enumerate() {
        if guess[..i].contains(&g) {
            continue; // already counted this symbol
        }
        let in_guess = guess[i..].iter().filter(|&&x| x == g).count();
        let in_secret = secret.iter().filter(|&&x| x == g).count();
        matched += in_guess.min(in_secret) as u16;
    }
    Feedback {
        black,
        white: matched - black,
    }
}

/// True iff `candidate` would have produced every recorded feedback.
pub fn is_consistent(candidate: &Code, history: &GameHistory) -> Result<bool> {
    for turn in history.turns() {
        if feedback(&turn.guess, candidate)? != turn.feedback {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All `kappa^ell` codes in lexicographic order, guarded by
/// [`DEFAULT_SPACE_LIMIT`].
pub fn enumerate_space(alphabet: &Alphabet) -> Result<Vec<Code>> {
    enumerate_space_with_limit(alphabet, DEFAULT_SPACE_LIMIT)
}

/// As [`enumerate_space`] with an explicit code-count ceiling.
pub fn enumerate_space_with_limit(alphabet: &Alphabet, limit: u64) -> Result<Vec<Code>> {
    let size = alphabet.space_size().ok_or(Error::SpaceTooLarge {
        size: u128::MAX,
        limit,
    })?;
    if size > limit as u128 {
        return Err(Error::SpaceTooLarge { size, limit });
    }
    let n = size as u64;
    let mut codes = Vec::with_capacity(n as usize);
    let ell = alphabet.ell() as usize;
    let kappa = alphabet.kappa() as u16;
    let mut current = vec![0u8; ell];
    loop {
        codes.push(Code {
            symbols: current.clone(),
        });
        // Odometer increment in lexicographic order.
        let mut pos = ell;
        loop {
            if pos == 0 {
                return Ok(codes);
            }
            pos -= 1;
            if (current[pos] as u16) + 1 < kappa {
                current[pos] += 1;
                for slot in &mut current[pos + 1..] {
                    *slot = 0;
                }
                break;
            }
        }
    }
}

/// Members of `pool` consistent with `history`, in pool order.
pub fn filter_consistent(pool: &[Code], history: &GameHistory) -> Result<Vec<Code>> {
    let mut out = Vec::new();
    for code in pool {
        if is_consistent(code, history)? {
            out.push(code.clone());
        }
    }
    Ok(out)
}
