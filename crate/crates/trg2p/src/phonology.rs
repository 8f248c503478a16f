//! Phoneme inventory, base letter mapping, metaphoneme resolution,
//! epenthesis and token normalization.

use crate::error::{G2pError, Result};
use std::collections::HashMap;
use std::fmt;
use std::ops::Range;
use std::sync::OnceLock;

const FEATURES_TSV: &str = include_str!("../data/phoneme_features.tsv");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct PhonemeInfo {
    symbol: &'static str,
    vowel: bool,
    // vowels: front / rounded / high / long
    // consonants: voiced / palatal
    f0: bool,
    f1: bool,
    f2: bool,
    f3: bool,
}

struct Inventory {
    infos: Vec<PhonemeInfo>,
    by_symbol: HashMap<&'static str, u8>,
}

fn inventory() -> &'static Inventory {
    static INV: OnceLock<Inventory> = OnceLock::new();
    INV.get_or_init(|| {
        let mut infos = Vec::new();
        let mut by_symbol = HashMap::new();
        for line in FEATURES_TSV.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            let flag = |s: &str| s == "1";
            let info = PhonemeInfo {
                symbol: cols[0],
                vowel: cols[1] == "vowel",
                f0: flag(cols[2]),
                f1: flag(cols[3]),
                f2: flag(cols.get(4).unwrap_or(&"-")),
                f3: flag(cols.get(5).unwrap_or(&"-")),
            };
            by_symbol.insert(info.symbol, infos.len() as u8);
            infos.push(info);
        }
        Inventory { infos, by_symbol }
    })
}

/// One SAMPA phoneme. Feature flags are fully determined by the symbol.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Phoneme(u8);

impl Phoneme {
    fn info(self) -> &'static PhonemeInfo {
        &inventory().infos[self.0 as usize]
    }

    pub fn symbol(self) -> &'static str {
        self.info().symbol
    }

    pub fn is_vowel(self) -> bool {
        self.info().vowel
    }

    pub fn front(self) -> bool {
        self.is_vowel() && self.info().f0
    }

    pub fn rounded(self) -> bool {
        self.is_vowel() && self.info().f1
    }

    pub fn high(self) -> bool {
        self.is_vowel() && self.info().f2
    }

    pub fn long(self) -> bool {
        self.is_vowel() && self.info().f3
    }

    pub fn voiced(self) -> bool {
        if self.is_vowel() {
            true
        } else {
            self.info().f0
        }
    }

    pub fn palatal(self) -> bool {
        !self.is_vowel() && self.info().f1
    }

    /// Long counterpart of a short vowel (a -> a:). Identity on long vowels
    /// and consonants.
    pub fn long_form(self) -> Phoneme {
        if self.is_vowel() && !self.long() {
            phoneme(&format!("{}:", self.symbol())).unwrap()
        } else {
            self
        }
    }

    /// Short counterpart of a long vowel (a: -> a). Identity otherwise.
    pub fn short_form(self) -> Phoneme {
        if self.long() {
            phoneme(self.symbol().trim_end_matches(':')).unwrap()
        } else {
            self
        }
    }
}

impl fmt::Debug for Phoneme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Look up a phoneme by its SAMPA symbol.
pub fn phoneme(symbol: &str) -> Result<Phoneme> {
    inventory()
        .by_symbol
        .get(symbol)
        .map(|&id| Phoneme(id))
        .ok_or_else(|| G2pError::UnknownPhoneme(symbol.to_string()))
}

/// All inventory symbols, in table order.
pub fn inventory_symbols() -> Vec<&'static str> {
    inventory().infos.iter().map(|i| i.symbol).collect()
}

/// A pronunciation: a phone sequence plus an optional stress index counted
/// over vowel phonemes (0-based). Every syllable carries exactly one vowel,
/// so the stressed vowel ordinal doubles as the stressed syllable ordinal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Pron {
    pub phones: Vec<Phoneme>,
    pub stress: Option<usize>,
}

impl Pron {
    pub fn new(phones: Vec<Phoneme>) -> Pron {
        Pron {
            phones,
            stress: None,
        }
    }

    /// Parse a space-joined SAMPA token string. Empty input is invalid.
    pub fn parse(s: &str) -> Result<Pron> {
        let phones: Vec<Phoneme> = s
            .split_whitespace()
            .map(phoneme)
            .collect::<Result<Vec<_>>>()?;
        if phones.is_empty() {
            return Err(G2pError::EmptyToken);
        }
        Ok(Pron::new(phones))
    }

    pub fn vowel_count(&self) -> usize {
        self.phones.iter().filter(|p| p.is_vowel()).count()
    }

    /// Phone index of the n-th vowel (0-based ordinal).
    pub fn vowel_index(&self, ordinal: usize) -> Option<usize> {
        self.phones
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_vowel())
            .nth(ordinal)
            .map(|(i, _)| i)
    }

    pub fn last_vowel_index(&self) -> Option<usize> {
        self.phones.iter().rposition(|p| p.is_vowel())
    }
}

impl fmt::Display for Pron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<&str> = self.phones.iter().map(|p| p.symbol()).collect();
        write!(f, "{}", toks.join(" "))
    }
}

impl fmt::Debug for Pron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ── Letter mapping ──────────────────────────────────────────────────────────

/// Default letter → SAMPA mapping for the 29 Turkish letters. N and w never
/// come from here; they only enter through lexicon entries.
static LETTER_MAP: &[(char, &str)] = &[
    ('a', "a"),
    ('b', "b"),
    ('c', "dZ"),
    ('ç', "tS"),
    ('d', "d"),
    ('e', "e"),
    ('f', "f"),
    ('g', "g"),
    ('ğ', "G"),
    ('h', "h"),
    ('ı', "1"),
    ('i', "i"),
    ('j', "Z"),
    ('k', "k"),
    ('l', "l"),
    ('m', "m"),
    ('n', "n"),
    ('o', "o"),
    ('ö', "2"),
    ('p', "p"),
    ('r', "r"),
    ('s', "s"),
    ('ş', "S"),
    ('t', "t"),
    ('u', "u"),
    ('ü', "y"),
    ('v', "v"),
    ('y', "j"),
    ('z', "z"),
];

/// Map a single Turkish letter to its default phoneme.
pub fn base_map_char(c: char) -> Result<Phoneme> {
    LETTER_MAP
        .iter()
        .find(|(l, _)| *l == c)
        .map(|(_, sym)| phoneme(sym).unwrap())
        .ok_or(G2pError::UnknownGrapheme(c))
}

/// Map a whole grapheme string letter by letter.
pub fn base_map(word: &str) -> Result<Vec<Phoneme>> {
    word.chars().map(base_map_char).collect()
}

pub const TURKISH_VOWEL_CHARS: &[char] = &['a', 'e', 'ı', 'i', 'o', 'ö', 'u', 'ü'];

/// (front, rounded, high) for a Turkish vowel letter.
pub fn char_vowel_features(c: char) -> Option<(bool, bool, bool)> {
    match c {
        'a' => Some((false, false, false)),
        'e' => Some((true, false, false)),
        'ı' => Some((false, false, true)),
        'i' => Some((true, false, true)),
        'o' => Some((false, true, false)),
        'ö' => Some((true, true, false)),
        'u' => Some((false, true, true)),
        'ü' => Some((true, true, true)),
        _ => None,
    }
}

pub fn char_is_vowel(c: char) -> bool {
    char_vowel_features(c).is_some()
}

pub fn char_is_voiceless(c: char) -> bool {
    matches!(c, 'p' | 'ç' | 't' | 'k' | 'f' | 's' | 'ş' | 'h')
}

/// Harmonic high vowel for a (front, rounded) context.
pub fn high_vowel_char(front: bool, rounded: bool) -> char {
    match (front, rounded) {
        (false, false) => 'ı',
        (false, true) => 'u',
        (true, false) => 'i',
        (true, true) => 'ü',
    }
}

/// Harmonic low vowel for a front/back context.
pub fn low_vowel_char(front: bool) -> char {
    if front {
        'e'
    } else {
        'a'
    }
}

// ── Metaphonemes ────────────────────────────────────────────────────────────

/// Suffix template placeholders: A (low, two-way harmony), H (high, four-way
/// harmony), D (voicing-assimilated dental stop).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetaGrapheme {
    A,
    H,
    D,
}

impl MetaGrapheme {
    pub fn from_char(c: char) -> Option<MetaGrapheme> {
        match c {
            'A' => Some(MetaGrapheme::A),
            'H' => Some(MetaGrapheme::H),
            'D' => Some(MetaGrapheme::D),
            _ => None,
        }
    }
}

/// Resolve a metaphoneme against a left-context phone sequence, producing the
/// surfaced grapheme.
pub fn resolve_meta(meta: MetaGrapheme, context: &[Phoneme]) -> Result<char> {
    match meta {
        MetaGrapheme::A => {
            let v = last_vowel(context).ok_or(G2pError::MissingHarmonyContext('A'))?;
            Ok(low_vowel_char(v.front()))
        }
        MetaGrapheme::H => {
            let v = last_vowel(context).ok_or(G2pError::MissingHarmonyContext('H'))?;
            Ok(high_vowel_char(v.front(), v.rounded()))
        }
        MetaGrapheme::D => {
            let last = context.last().ok_or(G2pError::MissingHarmonyContext('D'))?;
            Ok(if last.voiced() { 'd' } else { 't' })
        }
    }
}

fn last_vowel(phones: &[Phoneme]) -> Option<Phoneme> {
    phones.iter().rev().copied().find(|p| p.is_vowel())
}

// ── Epenthesis ──────────────────────────────────────────────────────────────

/// Break up a word-initial consonant cluster by inserting the harmonic high
/// vowel after the first consonant (kral -> kıral, prens -> pirens). The
/// vowel agrees with the first vowel of the word; words without a vowel are
/// returned unchanged.
pub fn epenthesize(word: &str) -> String {
    let chars: Vec<char> = word.chars().collect();
    if chars.len() < 2 || char_is_vowel(chars[0]) || char_is_vowel(chars[1]) {
        return word.to_string();
    }
    let Some((front, rounded, _)) = chars.iter().copied().find_map(char_vowel_features) else {
        return word.to_string();
    };
    let mut out = String::new();
    out.push(chars[0]);
    out.push(high_vowel_char(front, rounded));
    out.extend(&chars[1..]);
    out
}

// ── Allophones ──────────────────────────────────────────────────────────────

/// Pick k/l/g allophones per syllable: a syllable containing a front vowel
/// takes the palatal set (c, l, gj), a back syllable the plain set (k, 5, g).
/// `spans` are syllable ranges over `pron.phones`; positions outside every
/// span are left untouched.
pub fn apply_allophones(pron: &Pron, spans: &[Range<usize>]) -> Pron {
    let mut out = pron.clone();
    for span in spans {
        let front = pron.phones[span.clone()]
            .iter()
            .any(|p| p.is_vowel() && p.front());
        for i in span.clone() {
            let sym = out.phones[i].symbol();
            let repl = match (sym, front) {
                ("k", true) => Some("c"),
                ("c", false) => Some("k"),
                ("g", true) => Some("gj"),
                ("gj", false) => Some("g"),
                ("l", false) => Some("5"),
                ("5", true) => Some("l"),
                _ => None,
            };
            if let Some(r) = repl {
                out.phones[i] = phoneme(r).unwrap();
            }
        }
    }
    out
}

// ── Normalization ───────────────────────────────────────────────────────────

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedToken {
    /// Lowercased token, surrounding punctuation stripped, internal
    /// apostrophe preserved as '.
    pub text: String,
    /// The raw token started with an uppercase letter.
    pub upper_hint: bool,
    /// The normalized text contains an apostrophe.
    pub has_apostrophe: bool,
}

/// Turkish-aware lowercasing: dotted/dotless i fold locally (I -> ı, İ -> i),
/// everything else via standard case mapping.
pub fn fold_char(c: char) -> char {
    match c {
        'I' => 'ı',
        'İ' => 'i',
        _ => c.to_lowercase().next().unwrap_or(c),
    }
}

/// Normalize a raw token: unify apostrophe variants, strip surrounding
/// non-alphanumeric characters, fold case. Errors on an empty remainder.
pub fn normalize(raw: &str) -> Result<NormalizedToken> {
    let unified: String = raw
        .chars()
        .map(|c| match c {
            '\u{2019}' | '\u{02BC}' | '`' => '\'',
            c => c,
        })
        .collect();
    let trimmed = unified.trim_matches(|c: char| !c.is_alphanumeric());
    let trimmed = trimmed.trim_matches('\'');
    if trimmed.is_empty() {
        return Err(G2pError::EmptyToken);
    }
    let upper_hint = trimmed.chars().next().map(|c| c.is_uppercase()).unwrap_or(false);
    let text: String = trimmed.chars().map(fold_char).collect();
    let has_apostrophe = text.contains('\'');
    Ok(NormalizedToken {
        text,
        upper_hint,
        has_apostrophe,
    })
}
