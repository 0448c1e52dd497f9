//! Alphabets, words over letters and over set-letters, and validated
//! forbidden-word specifications of one-dimensional shifts of finite type.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::score::ExactScore;

pub const MAX_ALPHABET: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(symbols: &[S]) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if symbols.len() > MAX_ALPHABET {
            return Err(Error::AlphabetTooLarge(symbols.len()));
        }
        let mut seen = BTreeSet::new();
        for s in symbols {
            if !seen.insert(s.as_ref()) {
                return Err(Error::DuplicateSymbol(s.as_ref().to_string()));
            }
        }
        Ok(Alphabet { symbols: symbols.iter().map(|s| s.as_ref().to_string()).collect() })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, letter: u8) -> &str {
        &self.symbols[letter as usize]
    }

    pub fn index_of(&self, symbol: &str) -> Option<u8> {
        self.symbols.iter().position(|s| s == symbol).map(|i| i as u8)
    }

    /// Mask with every letter set.
    pub fn full_mask(&self) -> u64 {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }
}

/// A word over letter indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.0.iter().map(|&a| alphabet.symbol(a)).collect::<Vec<_>>().join("")
    }

    /// True if `other` occurs in `self` as a contiguous subword.
    pub fn contains(&self, other: &Word) -> bool {
        other.len() <= self.len() && self.0.windows(other.len()).any(|w| w == other.0.as_slice())
    }
}

/// A nonempty set of letters, stored as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetLetter(u64);

impl SetLetter {
    pub fn new(mask: u64) -> Option<Self> {
        (mask != 0).then_some(SetLetter(mask))
    }

    pub fn singleton(letter: u8) -> Self {
        SetLetter(1u64 << letter)
    }

    pub fn from_letters(letters: &[u8]) -> Option<Self> {
        SetLetter::new(letters.iter().fold(0u64, |m, &a| m | (1u64 << a)))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn size(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, letter: u8) -> bool {
        self.0 >> letter & 1 == 1
    }

    pub fn letters(self) -> impl Iterator<Item = u8> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                return None;
            }
            let a = m.trailing_zeros() as u8;
            m &= m - 1;
            Some(a)
        })
    }

    /// Lowest letter of the set.
    pub fn first(self) -> u8 {
        self.0.trailing_zeros() as u8
    }

    /// The `i`-th smallest letter; `i < size()`.
    pub fn nth(self, i: usize) -> u8 {
        self.letters().nth(i).expect("index within set size")
    }

    pub fn is_disjoint(self, other: SetLetter) -> bool {
        self.0 & other.0 == 0
    }

    pub fn render(self, alphabet: &Alphabet) -> String {
        if self.size() == 1 {
            return alphabet.symbol(self.first()).to_string();
        }
        let inner: Vec<&str> = self.letters().map(|a| alphabet.symbol(a)).collect();
        format!("{{{}}}", inner.join(","))
    }

    pub fn symbols(self, alphabet: &Alphabet) -> Vec<String> {
        self.letters().map(|a| alphabet.symbol(a).to_string()).collect()
    }
}

/// A word over set-letters.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetWord(pub Vec<SetLetter>);

impl SetWord {
    pub fn new(cells: Vec<SetLetter>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::InvalidWord("set-word must be nonempty".into()));
        }
        Ok(SetWord(cells))
    }

    /// Builds a set-word from per-cell letter lists, e.g. `&[&[0], &[0, 1]]`.
    pub fn from_sets(sets: &[&[u8]]) -> Result<Self> {
        let cells = sets
            .iter()
            .map(|s| SetLetter::from_letters(s).ok_or_else(|| Error::InvalidWord("empty cell".into())))
            .collect::<Result<Vec<_>>>()?;
        SetWord::new(cells)
    }

    pub fn cells(&self) -> &[SetLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &SetWord) -> SetWord {
        SetWord(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    /// Lexicographically least rotation under the mask order.
    pub fn least_rotation(&self) -> SetWord {
        let m = self.0.len();
        (0..m)
            .map(|r| SetWord((0..m).map(|i| self.0[(r + i) % m]).collect()))
            .min()
            .expect("nonempty word")
    }

    pub fn reversed(&self) -> SetWord {
        SetWord(self.0.iter().rev().copied().collect())
    }

    pub fn is_rotation_of(&self, other: &SetWord) -> bool {
        self.len() == other.len() && self.least_rotation() == other.least_rotation()
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.0.iter().map(|c| c.render(alphabet)).collect::<Vec<_>>().join("")
    }

    pub fn symbols(&self, alphabet: &Alphabet) -> Vec<Vec<String>> {
        self.0.iter().map(|c| c.symbols(alphabet)).collect()
    }
}

/// Canonical score `(prod |cell|, len)` of a set-word.
pub fn independence_score(w: &SetWord) -> ExactScore {
    let p = w.0.iter().fold(BigUint::from(1u32), |acc, c| acc * c.size());
    ExactScore::new(p, w.len() as u64).canonicalize()
}

/// A validated shift of finite type: alphabet plus minimized forbidden list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubshiftSpec {
    alphabet: Alphabet,
    forbidden: Vec<Word>,
    memory: usize,
}

impl SubshiftSpec {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn sigma(&self) -> usize {
        self.alphabet.len()
    }

    /// Minimized forbidden words, sorted by length then lexicographically.
    pub fn forbidden(&self) -> &[Word] {
        &self.forbidden
    }

    /// Memory `k`: longest forbidden word length minus one (0 for none).
    pub fn memory(&self) -> usize {
        self.memory
    }

    /// Letters occurring in some forbidden word.
    pub fn constrained_mask(&self) -> u64 {
        self.forbidden.iter().flat_map(|w| w.0.iter()).fold(0u64, |m, &a| m | 1u64 << a)
    }

    pub fn free_mask(&self) -> u64 {
        self.alphabet.full_mask() & !self.constrained_mask()
    }

    /// True if the letter word contains no forbidden word.
    pub fn word_is_legal(&self, w: &[u8]) -> bool {
        !self.forbidden.iter().any(|f| f.len() <= w.len() && w.windows(f.len()).any(|x| x == f.0.as_slice()))
    }

    /// True if some forbidden word ends exactly at the last position of `w`.
    pub fn forbidden_ends_at_last(&self, w: &[u8]) -> bool {
        self.forbidden.iter().any(|f| f.len() <= w.len() && w.ends_with(&f.0))
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        parse_symbols(&self.alphabet, text).map(Word)
    }

    pub fn to_model_file(&self) -> ModelFile {
        let single = self.alphabet.symbols.iter().all(|s| s.chars().count() == 1);
        let forbidden = self
            .forbidden
            .iter()
            .map(|w| {
                if single {
                    RawWord::Text(w.render(&self.alphabet))
                } else {
                    RawWord::Symbols(w.0.iter().map(|&a| self.alphabet.symbol(a).to_string()).collect())
                }
            })
            .collect();
        ModelFile { alphabet: self.alphabet.symbols.clone(), forbidden }
    }
}

fn parse_symbols(alphabet: &Alphabet, text: &str) -> Result<Vec<u8>> {
    text.chars()
        .map(|c| {
            let s = c.to_string();
            alphabet
                .index_of(&s)
                .ok_or_else(|| Error::UnknownSymbol { symbol: s, word: text.to_string() })
        })
        .collect()
}

/// A forbidden word as written in a model file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RawWord {
    /// Concatenation of single-character symbols.
    Text(String),
    /// Explicit symbol list, for multi-character symbols.
    Symbols(Vec<String>),
}

impl RawWord {
    fn describe(&self) -> String {
        match self {
            RawWord::Text(t) => t.clone(),
            RawWord::Symbols(s) => s.join(" "),
        }
    }
}

/// JSON model document: `{"alphabet":["0","1"],"forbidden":["11"]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub alphabet: Vec<String>,
    pub forbidden: Vec<RawWord>,
}

impl ModelFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::ModelFile(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("model file serializes")
    }

    pub fn into_spec(self, max_len: usize) -> Result<SubshiftSpec> {
        validate_spec(&self.alphabet, &self.forbidden, max_len)
    }
}

/// Validates raw symbols and forbidden words into a [`SubshiftSpec`].
///
/// Forbidden words that contain another forbidden word are dropped.
pub fn validate_spec<S: AsRef<str>>(alphabet: &[S], forbidden: &[RawWord], max_len: usize) -> Result<SubshiftSpec> {
    let alphabet = Alphabet::new(alphabet)?;
    let mut words = BTreeSet::new();
    for raw in forbidden {
        let letters = match raw {
            RawWord::Text(t) => parse_symbols(&alphabet, t)?,
            RawWord::Symbols(syms) => syms
                .iter()
                .map(|s| {
                    alphabet
                        .index_of(s)
                        .ok_or_else(|| Error::UnknownSymbol { symbol: s.clone(), word: raw.describe() })
                })
                .collect::<Result<Vec<_>>>()?,
        };
        if letters.is_empty() {
            return Err(Error::EmptyForbiddenWord);
        }
        if letters.len() > max_len {
            return Err(Error::ForbiddenTooLong { word: raw.describe(), len: letters.len(), cap: max_len });
        }
        words.insert(Word(letters));
    }
    Ok(SubshiftSpec::from_words(alphabet, words.into_iter().collect()))
}

impl SubshiftSpec {
    /// Builds a spec from already-indexed words, minimizing the list.
    pub fn from_words(alphabet: Alphabet, mut words: Vec<Word>) -> SubshiftSpec {
        words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        words.dedup();
        let mut kept: Vec<Word> = Vec::with_capacity(words.len());
        for w in words {
            if !kept.iter().any(|f| w.contains(f)) {
                kept.push(w);
            }
        }
        let memory = kept.iter().map(Word::len).max().map_or(0, |l| l - 1);
        SubshiftSpec { alphabet, forbidden: kept, memory }
    }
}

impl fmt::Display for SubshiftSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self
            .forbidden
            .iter()
            .map(|w| w.0.iter().map(|&a| self.alphabet.symbol(a)).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "alphabet [{}], forbidden [{}], k = {}", self.alphabet.symbols.join(" "), words.join(", "), self.memory)
    }
}
