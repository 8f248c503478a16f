//! Root lexicon, suffix templates, n-gram and letter-name tables.
//!
//! All tables load from tab-separated UTF-8 files; `#` starts a comment line.
//! The bundled copies are compiled in; `--lexicon-dir` swaps in replacements
//! at runtime.

use crate::error::{G2pError, Result};
use crate::phonology::{self, MetaGrapheme, Pron};
use std::collections::{HashMap, HashSet};
use std::path::Path;
use std::sync::OnceLock;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Genre {
    Ordinary,
    Proper,
    Geographical,
    Compound,
    Abbreviation,
    Foreign,
}

impl Genre {
    pub fn parse(s: &str) -> Option<Genre> {
        match s {
            "ordinary" => Some(Genre::Ordinary),
            "proper" => Some(Genre::Proper),
            "geographical" => Some(Genre::Geographical),
            "compound" => Some(Genre::Compound),
            "abbreviation" => Some(Genre::Abbreviation),
            "foreign" => Some(Genre::Foreign),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Genre::Ordinary => "ordinary",
            Genre::Proper => "proper",
            Genre::Geographical => "geographical",
            Genre::Compound => "compound",
            Genre::Abbreviation => "abbreviation",
            Genre::Foreign => "foreign",
        }
    }
}

/// Word classes a root can head for suffixation purposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pos {
    #[default]
    Nominal,
    Verbal,
    Both,
}

impl Pos {
    pub fn verbal(self) -> bool {
        matches!(self, Pos::Verbal | Pos::Both)
    }

    pub fn nominal(self) -> bool {
        matches!(self, Pos::Nominal | Pos::Both)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootEntry {
    pub surface: String,
    /// Listed pronunciations; empty means rule-generated.
    pub prons: Vec<Pron>,
    pub genres: Vec<Genre>,
    pub pos: Pos,
    pub lengthens_final_vowel: bool,
    pub no_final_voicing: bool,
    pub fixed_stress_syllable: Option<usize>,
    pub compound_stress_syllable: Option<usize>,
}

/// One element of a suffix template's meta form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TemplatePiece {
    Literal(char),
    Meta(MetaGrapheme),
    /// Bracketed buffer consonant ([s], [y], [n]): surfaces only when the
    /// left context ends in a vowel.
    BufferConsonant(char),
    /// Bracketed high vowel ([H]): surfaces only when the left context ends
    /// in a consonant.
    BufferHigh,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuffixTemplate {
    pub meta_form: String,
    pub pieces: Vec<TemplatePiece>,
    pub tag: String,
    pub stress_shifting: bool,
}

impl SuffixTemplate {
    /// Verb-selecting templates must open the suffix chain on a verbal root.
    pub fn verb_initial(&self) -> bool {
        self.tag.starts_with("<V>")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NGramClass {
    English,
    Turkish,
    TurkishizedEnglish,
}

#[derive(Debug, Clone)]
pub struct NGramTable {
    pub class: NGramClass,
    pub grams: HashSet<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LetterRegister {
    Turkish,
    English,
}

#[derive(Debug, Clone)]
pub struct LetterNameTable {
    pub register: LetterRegister,
    pub names: HashMap<char, Pron>,
}

impl LetterNameTable {
    pub fn name_of(&self, c: char) -> Result<&Pron> {
        self.names.get(&c).ok_or(G2pError::UnknownGrapheme(c))
    }
}

/// Surface-keyed exceptional pronunciations (fast-speech lexicalizations).
#[derive(Debug, Clone, PartialEq)]
pub struct VariantEntry {
    pub surface: String,
    /// Analysis tag that must be present for the entry to fire; None fires
    /// unconditionally.
    pub required_tag: Option<String>,
    pub prons: Vec<Pron>,
}

/// One ordered rewrite step of the English-ish reading table. Alternatives
/// branch the output.
#[derive(Debug, Clone, PartialEq)]
pub struct RewriteRule {
    pub pattern: String,
    /// Pattern anchored to the end of the word (written with a trailing `$`).
    pub at_end: bool,
    pub alternatives: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct Lexicon {
    entries: Vec<RootEntry>,
    by_surface: HashMap<String, Vec<usize>>,
    pub suffixes: Vec<SuffixTemplate>,
    pub ngrams_english: NGramTable,
    pub ngrams_turkish: NGramTable,
    pub ngrams_trenglish: NGramTable,
    pub letters_turkish: LetterNameTable,
    pub letters_english: LetterNameTable,
    pub variants: Vec<VariantEntry>,
    pub rewrites: Vec<RewriteRule>,
}

impl Lexicon {
    /// All root entries in file order.
    pub fn roots(&self) -> &[RootEntry] {
        &self.entries
    }

    /// Entries for a surface form, optionally narrowed to one genre,
    /// preserving file order.
    pub fn lookup_root(&self, surface: &str, genre: Option<Genre>) -> Vec<&RootEntry> {
        let Some(idxs) = self.by_surface.get(surface) else {
            return Vec::new();
        };
        idxs.iter()
            .map(|&i| &self.entries[i])
            .filter(|e| genre.is_none_or(|g| e.genres.contains(&g)))
            .collect()
    }

    pub fn variants_for(&self, surface: &str) -> Vec<&VariantEntry> {
        self.variants
            .iter()
            .filter(|v| v.surface == surface)
            .collect()
    }

    pub fn ngrams(&self, class: NGramClass) -> &NGramTable {
        match class {
            NGramClass::English => &self.ngrams_english,
            NGramClass::Turkish => &self.ngrams_turkish,
            NGramClass::TurkishizedEnglish => &self.ngrams_trenglish,
        }
    }

    pub fn letters(&self, register: LetterRegister) -> &LetterNameTable {
        match register {
            LetterRegister::Turkish => &self.letters_turkish,
            LetterRegister::English => &self.letters_english,
        }
    }
}

// ── Parsing ─────────────────────────────────────────────────────────────────

pub const LEXICON_FILES: &[&str] = &[
    "roots.tsv",
    "suffixes.tsv",
    "ngrams_english.tsv",
    "ngrams_turkish.tsv",
    "ngrams_trenglish.tsv",
    "letternames_turkish.tsv",
    "letternames_english.tsv",
    "variants.tsv",
    "english_rewrites.tsv",
];

fn data_lines(content: &str) -> impl Iterator<Item = (usize, &str)> {
    content
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

fn parse_err(file: &str, line: usize, msg: impl Into<String>) -> G2pError {
    G2pError::Parse {
        file: file.to_string(),
        line,
        msg: msg.into(),
    }
}

fn parse_pron(file: &str, line: usize, tok: &str) -> Result<Pron> {
    Pron::parse(tok).map_err(|e| match e {
        G2pError::UnknownPhoneme(t) => parse_err(file, line, format!("invalid SAMPA token '{t}'")),
        e => parse_err(file, line, e.to_string()),
    })
}

fn parse_pron_list(file: &str, line: usize, field: &str) -> Result<Vec<Pron>> {
    if field == "-" {
        return Ok(Vec::new());
    }
    field
        .split('|')
        .map(|p| parse_pron(file, line, p.trim()))
        .collect()
}

type RootTables = (Vec<RootEntry>, HashMap<String, Vec<usize>>);

fn parse_roots(file: &str, content: &str) -> Result<RootTables> {
    let mut entries = Vec::new();
    let mut by_surface: HashMap<String, Vec<usize>> = HashMap::new();
    let mut seen: HashSet<(String, Genre)> = HashSet::new();
    for (ln, line) in data_lines(content) {
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 4 {
            return Err(parse_err(file, ln, format!("expected 4 columns, got {}", cols.len())));
        }
        let surface = cols[0].to_string();
        if surface.is_empty() {
            return Err(parse_err(file, ln, "empty surface"));
        }
        let genres: Vec<Genre> = cols[1]
            .split(',')
            .map(|g| {
                Genre::parse(g.trim()).ok_or_else(|| parse_err(file, ln, format!("unknown genre '{g}'")))
            })
            .collect::<Result<_>>()?;
        if genres.is_empty() {
            return Err(parse_err(file, ln, "no genre"));
        }
        for g in &genres {
            if !seen.insert((surface.clone(), *g)) {
                return Err(parse_err(
                    file,
                    ln,
                    format!("duplicate entry for ({surface}, {})", g.name()),
                ));
            }
        }
        let prons = parse_pron_list(file, ln, cols[2])?;
        let mut entry = RootEntry {
            surface: surface.clone(),
            prons,
            genres,
            pos: Pos::Nominal,
            lengthens_final_vowel: false,
            no_final_voicing: false,
            fixed_stress_syllable: None,
            compound_stress_syllable: None,
        };
        if cols[3] != "-" {
            for flag in cols[3].split(',') {
                let (key, val) = flag
                    .split_once('=')
                    .ok_or_else(|| parse_err(file, ln, format!("bad flag '{flag}'")))?;
                match key.trim() {
                    "lengthens" => entry.lengthens_final_vowel = val == "1",
                    "no_voicing" => entry.no_final_voicing = val == "1",
                    "stress" => {
                        entry.fixed_stress_syllable =
                            Some(val.parse().map_err(|_| {
                                parse_err(file, ln, format!("bad stress index '{val}'"))
                            })?)
                    }
                    "compound_stress" => {
                        entry.compound_stress_syllable =
                            Some(val.parse().map_err(|_| {
                                parse_err(file, ln, format!("bad stress index '{val}'"))
                            })?)
                    }
                    "pos" => {
                        entry.pos = match val {
                            "n" => Pos::Nominal,
                            "v" => Pos::Verbal,
                            "nv" => Pos::Both,
                            _ => return Err(parse_err(file, ln, format!("bad pos '{val}'"))),
                        }
                    }
                    other => return Err(parse_err(file, ln, format!("unknown flag '{other}'"))),
                }
            }
        }
        validate_root(file, ln, &entry)?;
        by_surface.entry(surface).or_default().push(entries.len());
        entries.push(entry);
    }
    Ok((entries, by_surface))
}

fn validate_root(file: &str, ln: usize, entry: &RootEntry) -> Result<()> {
    let surface_vowels = entry
        .surface
        .chars()
        .filter(|&c| phonology::char_is_vowel(c))
        .count();
    let vowel_counts: Vec<usize> = if entry.prons.is_empty() {
        vec![surface_vowels]
    } else {
        entry.prons.iter().map(Pron::vowel_count).collect()
    };
    let fixed = entry
        .fixed_stress_syllable
        .into_iter()
        .chain(entry.compound_stress_syllable);
    for idx in fixed {
        if vowel_counts.iter().any(|&n| idx >= n) {
            return Err(parse_err(
                file,
                ln,
                format!("stress index {idx} out of range for '{}'", entry.surface),
            ));
        }
    }
    if entry.lengthens_final_vowel {
        for pron in &entry.prons {
            let last = pron.last_vowel_index();
            if last.is_none_or(|i| pron.phones[i].long()) {
                return Err(parse_err(
                    file,
                    ln,
                    format!("'{}' lengthens but has no short final vowel", entry.surface),
                ));
            }
        }
        if entry.prons.is_empty() && surface_vowels == 0 {
            return Err(parse_err(
                file,
                ln,
                format!("'{}' lengthens but has no vowel", entry.surface),
            ));
        }
    }
    for pron in &entry.prons {
        if pron.stress.is_some_and(|s| s >= pron.vowel_count()) {
            return Err(parse_err(
                file,
                ln,
                format!("stress ordinal out of range in pron for '{}'", entry.surface),
            ));
        }
    }
    Ok(())
}

fn parse_template_pieces(file: &str, ln: usize, meta: &str) -> Result<Vec<TemplatePiece>> {
    let mut pieces = Vec::new();
    let mut chars = meta.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '[' => {
                let inner = chars
                    .next()
                    .ok_or_else(|| parse_err(file, ln, "unterminated bracket"))?;
                if chars.next() != Some(']') {
                    return Err(parse_err(file, ln, "unterminated bracket"));
                }
                match inner {
                    's' | 'y' | 'n' => pieces.push(TemplatePiece::BufferConsonant(inner)),
                    'H' => pieces.push(TemplatePiece::BufferHigh),
                    other => {
                        return Err(parse_err(file, ln, format!("bad buffer '[{other}]'")))
                    }
                }
            }
            c => {
                if let Some(m) = MetaGrapheme::from_char(c) {
                    pieces.push(TemplatePiece::Meta(m));
                } else if c.is_alphabetic() && c.is_lowercase() {
                    pieces.push(TemplatePiece::Literal(c));
                } else {
                    return Err(parse_err(file, ln, format!("bad template char '{c}'")));
                }
            }
        }
    }
    if pieces.is_empty() {
        return Err(parse_err(file, ln, "empty template"));
    }
    Ok(pieces)
}

fn parse_suffixes(file: &str, content: &str) -> Result<Vec<SuffixTemplate>> {
    let mut out = Vec::new();
    for (ln, line) in data_lines(content) {
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 3 {
            return Err(parse_err(file, ln, format!("expected 3 columns, got {}", cols.len())));
        }
        let meta_form = cols[0].trim_start_matches('-').to_string();
        let pieces = parse_template_pieces(file, ln, &meta_form)?;
        let tag = cols[1].to_string();
        if !tag.starts_with('<') || !tag.ends_with('>') {
            return Err(parse_err(file, ln, format!("bad tag '{tag}'")));
        }
        let stress_shifting = match cols[2] {
            "0" => false,
            "1" => true,
            other => return Err(parse_err(file, ln, format!("bad stress_shifting '{other}'"))),
        };
        out.push(SuffixTemplate {
            meta_form,
            pieces,
            tag,
            stress_shifting,
        });
    }
    Ok(out)
}

fn parse_ngrams(file: &str, content: &str, class: NGramClass) -> Result<NGramTable> {
    let mut grams = HashSet::new();
    for (ln, line) in data_lines(content) {
        let gram = line.trim();
        let n = gram.chars().count();
        if !(3..=4).contains(&n) {
            return Err(parse_err(file, ln, format!("gram '{gram}' must be 3 or 4 letters")));
        }
        grams.insert(gram.to_string());
    }
    Ok(NGramTable { class, grams })
}

fn parse_letternames(
    file: &str,
    content: &str,
    register: LetterRegister,
) -> Result<LetterNameTable> {
    let mut names = HashMap::new();
    for (ln, line) in data_lines(content) {
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 2 {
            return Err(parse_err(file, ln, format!("expected 2 columns, got {}", cols.len())));
        }
        let mut letters = cols[0].chars();
        let letter = letters
            .next()
            .ok_or_else(|| parse_err(file, ln, "empty letter"))?;
        if letters.next().is_some() {
            return Err(parse_err(file, ln, format!("'{}' is not a single letter", cols[0])));
        }
        let pron = parse_pron(file, ln, cols[1])?;
        if names.insert(letter, pron).is_some() {
            return Err(parse_err(file, ln, format!("duplicate letter '{letter}'")));
        }
    }
    // The tables must be total over a-z; the Turkish register also covers the
    // Turkish-specific letters.
    let mut required: Vec<char> = ('a'..='z').collect();
    if register == LetterRegister::Turkish {
        required.extend(['ç', 'ğ', 'ı', 'ö', 'ş', 'ü']);
    }
    for c in required {
        if !names.contains_key(&c) {
            return Err(parse_err(file, 0, format!("missing letter '{c}'")));
        }
    }
    Ok(LetterNameTable { register, names })
}

fn parse_variants(file: &str, content: &str) -> Result<Vec<VariantEntry>> {
    let mut out = Vec::new();
    for (ln, line) in data_lines(content) {
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 3 {
            return Err(parse_err(file, ln, format!("expected 3 columns, got {}", cols.len())));
        }
        let required_tag = if cols[1] == "-" {
            None
        } else {
            Some(cols[1].to_string())
        };
        let prons = parse_pron_list(file, ln, cols[2])?;
        if prons.is_empty() {
            return Err(parse_err(file, ln, "variant entry without prons"));
        }
        out.push(VariantEntry {
            surface: cols[0].to_string(),
            required_tag,
            prons,
        });
    }
    Ok(out)
}

fn parse_rewrites(file: &str, content: &str) -> Result<Vec<RewriteRule>> {
    let mut out = Vec::new();
    for (ln, line) in data_lines(content) {
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 2 {
            return Err(parse_err(file, ln, format!("expected 2 columns, got {}", cols.len())));
        }
        let (pattern, at_end) = match cols[0].strip_suffix('$') {
            Some(p) => (p.to_string(), true),
            None => (cols[0].to_string(), false),
        };
        if pattern.is_empty() {
            return Err(parse_err(file, ln, "empty pattern"));
        }
        let alternatives: Vec<String> = cols[1]
            .split(';')
            .map(|a| if a == "-" { String::new() } else { a.to_string() })
            .collect();
        out.push(RewriteRule {
            pattern,
            at_end,
            alternatives,
        });
    }
    Ok(out)
}

fn build(read: impl Fn(&str) -> Result<String>) -> Result<Lexicon> {
    let roots_src = read("roots.tsv")?;
    let (entries, by_surface) = parse_roots("roots.tsv", &roots_src)?;
    let suffixes = parse_suffixes("suffixes.tsv", &read("suffixes.tsv")?)?;
    let ngrams_english = parse_ngrams("ngrams_english.tsv", &read("ngrams_english.tsv")?, NGramClass::English)?;
    let ngrams_turkish = parse_ngrams("ngrams_turkish.tsv", &read("ngrams_turkish.tsv")?, NGramClass::Turkish)?;
    let ngrams_trenglish = parse_ngrams(
        "ngrams_trenglish.tsv",
        &read("ngrams_trenglish.tsv")?,
        NGramClass::TurkishizedEnglish,
    )?;
    let letters_turkish = parse_letternames(
        "letternames_turkish.tsv",
        &read("letternames_turkish.tsv")?,
        LetterRegister::Turkish,
    )?;
    let letters_english = parse_letternames(
        "letternames_english.tsv",
        &read("letternames_english.tsv")?,
        LetterRegister::English,
    )?;
    let variants = parse_variants("variants.tsv", &read("variants.tsv")?)?;
    let rewrites = parse_rewrites("english_rewrites.tsv", &read("english_rewrites.tsv")?)?;
    Ok(Lexicon {
        entries,
        by_surface,
        suffixes,
        ngrams_english,
        ngrams_turkish,
        ngrams_trenglish,
        letters_turkish,
        letters_english,
        variants,
        rewrites,
    })
}

/// Load all lexicon tables from a directory.
pub fn load_lexicon(dir: &Path) -> Result<Lexicon> {
    build(|name| {
        let path = dir.join(name);
        std::fs::read_to_string(&path).map_err(|_| G2pError::MissingFile(path.display().to_string()))
    })
}

static EMBEDDED_SOURCES: &[(&str, &str)] = &[
    ("roots.tsv", include_str!("../data/roots.tsv")),
    ("suffixes.tsv", include_str!("../data/suffixes.tsv")),
    ("ngrams_english.tsv", include_str!("../data/ngrams_english.tsv")),
    ("ngrams_turkish.tsv", include_str!("../data/ngrams_turkish.tsv")),
    ("ngrams_trenglish.tsv", include_str!("../data/ngrams_trenglish.tsv")),
    (
        "letternames_turkish.tsv",
        include_str!("../data/letternames_turkish.tsv"),
    ),
    (
        "letternames_english.tsv",
        include_str!("../data/letternames_english.tsv"),
    ),
    ("variants.tsv", include_str!("../data/variants.tsv")),
    ("english_rewrites.tsv", include_str!("../data/english_rewrites.tsv")),
];

/// The compiled-in lexicon.
pub fn embedded() -> &'static Lexicon {
    static LEX: OnceLock<Lexicon> = OnceLock::new();
    LEX.get_or_init(|| {
        build(|name| {
            EMBEDDED_SOURCES
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, c)| c.to_string())
                .ok_or_else(|| G2pError::MissingFile(name.to_string()))
        })
        .expect("embedded lexicon must parse")
    })
}
