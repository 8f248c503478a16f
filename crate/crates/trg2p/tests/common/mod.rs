//! Shared plumbing for the integration suites: the bundled expectation
//! corpus, its row format, and token canonicalization.

#![allow(dead_code)]

use trg2p::lexicon::Lexicon;
use trg2p::pipeline::{Engine, Options};
use trg2p::prosody::Mode;
use trg2p::stemmer::{classify, expansion_table, stem_candidates, StemCandidate, WordClass};

pub const CORPUS: &str = include_str!("../data/golden.tsv");

/// Normalize a pronunciation string for comparison: syllable dashes become
/// spaces, dotted/dotless capital-I spellings fold to `1`, and split digraph
/// pairs (g j, d Z, t S, stressed or not) merge into single tokens.
pub fn canon(s: &str) -> String {
    let spaced = s.replace('-', " ");
    let mut toks: Vec<String> = Vec::new();
    for raw in spaced.split_whitespace() {
        let tok: String = raw
            .chars()
            .map(|c| if c == 'ı' || c == 'I' { '1' } else { c })
            .collect();
        if let Some(prev) = toks.last() {
            let stripped = prev.strip_prefix('+').unwrap_or(prev);
            let merged = match (stripped, tok.as_str()) {
                ("g", "j") => Some("gj"),
                ("d", "Z") => Some("dZ"),
                ("t", "S") => Some("tS"),
                _ => None,
            };
            if let Some(m) = merged {
                let plus = prev.starts_with('+');
                toks.pop();
                toks.push(if plus { format!("+{m}") } else { m.to_string() });
                continue;
            }
        }
        toks.push(tok);
    }
    toks.join(" ")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Pron,
    Stem,
    Class,
}

#[derive(Debug, Clone)]
pub struct Row {
    pub kind: Kind,
    pub input: String,
    pub mode: Mode,
    pub variants: bool,
    /// Exact output-set match instead of containment.
    pub exact: bool,
    /// Required members; each member lists acceptable alternatives.
    pub members: Vec<Vec<String>>,
    pub line: usize,
}

pub fn parse_corpus() -> Vec<Row> {
    let mut rows = Vec::new();
    for (i, line) in CORPUS.lines().enumerate() {
        let line = line.trim_end();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols.len(), 5, "line {}: expected 5 columns", i + 1);
        let kind = match cols[0] {
            "pron" => Kind::Pron,
            "stem" => Kind::Stem,
            "class" => Kind::Class,
            other => panic!("line {}: unknown kind {other}", i + 1),
        };
        let mode = match cols[2] {
            "tts" => Mode::Tts,
            _ => Mode::Asr,
        };
        let variants = cols[3] == "variants";
        let (exact, expect) = match cols[4].strip_prefix('=') {
            Some(rest) => (true, rest),
            None => (false, cols[4]),
        };
        let members = expect
            .split(';')
            .map(|m| m.split('|').map(canon).collect())
            .collect();
        rows.push(Row {
            kind,
            input: cols[1].to_string(),
            mode,
            variants,
            exact,
            members,
            line: i + 1,
        });
    }
    rows
}

/// Run one corpus row; Err carries a human-readable mismatch report.
pub fn check_row(engine: &Engine, row: &Row) -> Result<(), String> {
    match row.kind {
        Kind::Pron => check_pron(engine, row),
        Kind::Stem => check_stem(engine.lexicon(), row),
        Kind::Class => check_class(engine.lexicon(), row),
    }
}

fn check_pron(engine: &Engine, row: &Row) -> Result<(), String> {
    let opts = Options {
        mode: row.mode,
        variants: row.variants,
    };
    let got = engine
        .g2p_word(&row.input, &opts)
        .map_err(|e| format!("line {}: {} -> error {}", row.line, row.input, e.code()))?;
    let out: Vec<String> = got.prons.iter().map(|p| canon(&p.rendered)).collect();
    for member in &row.members {
        if !member.iter().any(|alt| out.contains(alt)) {
            return Err(format!(
                "line {}: {} missing {:?}; got {:?}",
                row.line, row.input, member, out
            ));
        }
    }
    if row.exact && out.len() != row.members.len() {
        return Err(format!(
            "line {}: {} expected exactly {} prons; got {:?}",
            row.line,
            row.input,
            row.members.len(),
            out
        ));
    }
    Ok(())
}

/// The stemmer's pick for a word: the best-ranked cut whose stem does not
/// read as mistyped Turkish, mirroring the engine's fallback order.
pub fn chosen_stem(lex: &Lexicon, word: &str) -> Option<StemCandidate> {
    let expansions = expansion_table(lex);
    stem_candidates(lex, &expansions, word)
        .into_iter()
        .find(|c| classify(lex, &c.stem) != WordClass::Mistyped)
}

fn check_stem(lex: &Lexicon, row: &Row) -> Result<(), String> {
    let want = &row.members[0][0];
    if let Some((stem, chain)) = want.split_once('+') {
        let expansions = expansion_table(lex);
        let cands = stem_candidates(lex, &expansions, &row.input);
        let hit = cands.iter().any(|c| {
            let joined: String = c.suffixes.iter().map(|s| s.realized.as_str()).collect();
            c.stem == stem && joined == chain
        });
        return if hit {
            Ok(())
        } else {
            Err(format!(
                "line {}: {} has no candidate {}+{}",
                row.line, row.input, stem, chain
            ))
        };
    }
    match chosen_stem(lex, &row.input) {
        Some(c) if &c.stem == want => Ok(()),
        Some(c) => Err(format!(
            "line {}: {} stemmed to {}, wanted {}",
            row.line, row.input, c.stem, want
        )),
        None => Err(format!("line {}: {} produced no stem", row.line, row.input)),
    }
}

fn check_class(lex: &Lexicon, row: &Row) -> Result<(), String> {
    let got = match classify(lex, &row.input) {
        WordClass::Abbreviation => "abbreviation",
        WordClass::ForeignDual | WordClass::ForeignTurkishOnly => "foreign",
        WordClass::Mistyped => "mistyped",
    };
    if got == row.members[0][0] {
        Ok(())
    } else {
        Err(format!(
            "line {}: {} classified as {got}, wanted {}",
            row.line, row.input, row.members[0][0]
        ))
    }
}
