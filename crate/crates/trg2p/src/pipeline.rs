//! Word-level orchestration: normalize the token, route it through the
//! analyzer, the apostrophe boundary, or the unknown-word heuristics, then
//! resolve soft g, expand variants, render, and deduplicate.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::Result;
use crate::foreign::{abbreviation_prons, foreign_prons, read_as_turkish};
use crate::lexicon::{Genre, Lexicon, Pos, RootEntry};
use crate::morphology::{
    analyze, chain_position_ok, is_voiceless_stop, Analysis, SuffixUse, MAX_CHAIN,
};
use crate::native::{assemble, combine};
use crate::phonology::{apply_allophones, base_map, char_is_vowel, epenthesize, normalize, Pron};
use crate::postphon::{resolve_soft_g, with_variants};
use crate::prosody::{ordinary_stress, render, syllable_spans, Mode};
use crate::stemmer::{
    classify, devoiced_stem, expansion_table, stem_candidates, StemCandidate, WordClass,
};

#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub mode: Mode,
    pub variants: bool,
}

impl Default for Options {
    fn default() -> Options {
        Options {
            mode: Mode::Asr,
            variants: false,
        }
    }
}

/// Which route produced a pronunciation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Native,
    Abbreviation,
    Foreign,
    /// Letter-by-letter fallback for words that read like misspelled Turkish.
    Letter,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Native => "native",
            Source::Abbreviation => "abbreviation",
            Source::Foreign => "foreign",
            Source::Letter => "letter",
        }
    }
}

#[derive(Debug, Clone)]
pub struct PronOut {
    pub pron: Pron,
    pub rendered: String,
    pub source: Source,
    pub tag: String,
}

#[derive(Debug, Clone)]
pub struct WordResult {
    pub surface: String,
    pub prons: Vec<PronOut>,
}

#[derive(Debug, Clone)]
struct Draft {
    pron: Pron,
    source: Source,
    tag: String,
}

fn drafts_of(prons: Vec<Pron>, source: Source, tag: &str) -> Vec<Draft> {
    prons
        .into_iter()
        .map(|pron| Draft {
            pron,
            source,
            tag: tag.to_string(),
        })
        .collect()
}

pub struct Engine<'a> {
    lex: &'a Lexicon,
    expansions: Vec<Vec<String>>,
}

impl<'a> Engine<'a> {
    pub fn new(lex: &'a Lexicon) -> Engine<'a> {
        Engine {
            lex,
            expansions: expansion_table(lex),
        }
    }

    pub fn lexicon(&self) -> &Lexicon {
        self.lex
    }

    /// All pronunciations of one token, deduplicated on the rendered form.
    pub fn g2p_word(&self, raw: &str, opts: &Options) -> Result<WordResult> {
        let tok = normalize(raw)?;
        let drafts = if tok.has_apostrophe {
            self.apostrophe_drafts(&tok.text)?
        } else {
            let analyses = analyze(self.lex, &tok.text);
            if analyses.is_empty() {
                let cands = stem_candidates(self.lex, &self.expansions, &tok.text);
                self.stem_drafts(&tok.text, &cands)?
            } else {
                self.analysis_drafts(&analyses)?
            }
        };
        self.finish(&tok.text, drafts, opts)
    }

    pub fn run_batch(&self, tokens: &[String], opts: &Options) -> Vec<Result<WordResult>> {
        tokens
            .par_iter()
            .map(|t| self.g2p_word(t, opts))
            .collect()
    }

    fn analysis_drafts(&self, analyses: &[Analysis]) -> Result<Vec<Draft>> {
        let mut out = Vec::new();
        let mut first_err = None;
        for a in analyses {
            match self.one_analysis(a) {
                Ok(ds) => out.extend(ds),
                Err(e) => {
                    first_err.get_or_insert(e);
                }
            }
        }
        match first_err {
            Some(e) if out.is_empty() => Err(e),
            _ => Ok(out),
        }
    }

    fn one_analysis(&self, a: &Analysis) -> Result<Vec<Draft>> {
        match a.genre {
            Genre::Abbreviation => {
                let root_prons = if a.root.prons.is_empty() {
                    let hint = a.root.genres.contains(&Genre::Foreign);
                    abbreviation_prons(self.lex, &a.root.surface, hint)?
                } else {
                    a.root.prons.clone()
                };
                let prons = assemble(self.lex, a, &root_prons, true)?;
                Ok(drafts_of(prons, Source::Abbreviation, &a.tag))
            }
            Genre::Foreign => {
                let root_prons = if a.root.prons.is_empty() {
                    match classify(self.lex, &a.root.surface) {
                        WordClass::ForeignTurkishOnly => {
                            vec![read_as_turkish(&a.root.surface)?]
                        }
                        _ => foreign_prons(self.lex, &a.root.surface)?,
                    }
                } else {
                    a.root.prons.clone()
                };
                let prons = assemble(self.lex, a, &root_prons, true)?;
                Ok(drafts_of(prons, Source::Foreign, &a.tag))
            }
            _ => Ok(drafts_of(combine(self.lex, a)?, Source::Native, &a.tag)),
        }
    }

    /// Words written with an explicit stem boundary. A lexicon stem takes its
    /// own route per genre; an unknown stem goes through classification with
    /// the boundary fixed in place.
    fn apostrophe_drafts(&self, text: &str) -> Result<Vec<Draft>> {
        let (left, right) = text.split_once('\'').expect("normalized apostrophe token");
        let rest: String = right.chars().filter(|&c| c != '\'').collect();
        if rest.is_empty() {
            let analyses = analyze(self.lex, left);
            if !analyses.is_empty() {
                return self.analysis_drafts(&analyses);
            }
            let cands = stem_candidates(self.lex, &self.expansions, left);
            return self.stem_drafts(left, &cands);
        }

        let mut out = Vec::new();
        let mut first_err = None;
        for entry in self.lex.lookup_root(left, None) {
            let boundary_voiced = left.chars().last().is_some_and(is_voiceless_stop)
                && rest.chars().next().is_some_and(char_is_vowel)
                && !entry.no_final_voicing;
            for chain in self.written_chains(entry.pos, &rest) {
                for &genre in &entry.genres {
                    let a = Analysis {
                        root: entry,
                        genre,
                        root_realized: left.to_string(),
                        root_voiced: false,
                        boundary_voiced,
                        suffixes: chain.clone(),
                        tag: chain_tag(self.lex, entry.pos, &chain),
                    };
                    match self.one_analysis(&a) {
                        Ok(ds) => out.extend(ds),
                        Err(e) => {
                            first_err.get_or_insert(e);
                        }
                    }
                }
            }
        }
        if !out.is_empty() {
            return Ok(out);
        }
        if let Some(e) = first_err {
            return Err(e);
        }

        let joined: String = text.chars().filter(|&c| c != '\'').collect();
        let chains = self.written_chains(Pos::Nominal, &rest);
        if chains.is_empty() {
            let cands = stem_candidates(self.lex, &self.expansions, &joined);
            return self.stem_drafts(&joined, &cands);
        }
        let mut cands = Vec::new();
        for chain in chains {
            if let Some(devoiced) = devoiced_stem(left, &chain) {
                cands.push(StemCandidate {
                    stem: devoiced,
                    written_stem: left.to_string(),
                    suffixes: chain.clone(),
                });
            }
            cands.push(StemCandidate {
                stem: left.to_string(),
                written_stem: left.to_string(),
                suffixes: chain,
            });
        }
        self.stem_drafts(&joined, &cands)
    }

    /// Every way the suffix templates can spell out `rest`, left to right.
    fn written_chains(&self, pos: Pos, rest: &str) -> Vec<Vec<SuffixUse>> {
        fn descend(
            expansions: &[Vec<String>],
            lex: &Lexicon,
            pos: Pos,
            rest: &str,
            stack: &mut Vec<SuffixUse>,
            out: &mut Vec<Vec<SuffixUse>>,
        ) {
            if rest.is_empty() {
                if !stack.is_empty() {
                    out.push(stack.clone());
                }
                return;
            }
            if stack.len() == MAX_CHAIN {
                return;
            }
            for (ti, forms) in expansions.iter().enumerate() {
                if !chain_position_ok(pos, stack.len(), &lex.suffixes[ti]) {
                    continue;
                }
                for form in forms {
                    let Some(shorter) = rest.strip_prefix(form.as_str()) else {
                        continue;
                    };
                    stack.push(SuffixUse {
                        template: ti,
                        realized: form.clone(),
                    });
                    descend(expansions, lex, pos, shorter, stack, out);
                    stack.pop();
                }
            }
        }
        let mut out = Vec::new();
        let mut stack = Vec::new();
        descend(&self.expansions, self.lex, pos, rest, &mut stack, &mut out);
        out
    }

    /// Try stem cuts in rank order; the first one that classifies as an
    /// abbreviation or a foreign word wins. When every cut reads as mistyped
    /// Turkish the whole word goes through the letter route.
    fn stem_drafts(&self, whole: &str, cands: &[StemCandidate]) -> Result<Vec<Draft>> {
        for c in cands {
            let nominal_ok = c.suffixes.iter().enumerate().all(|(i, u)| {
                chain_position_ok(Pos::Nominal, i, &self.lex.suffixes[u.template])
            });
            if !nominal_ok {
                continue;
            }
            let class = classify(self.lex, &c.stem);
            if class == WordClass::Mistyped {
                continue;
            }
            if let Ok(ds) = self.assemble_stem(c, class) {
                if !ds.is_empty() {
                    return Ok(ds);
                }
            }
        }
        let pron = letters_pron(whole)?;
        Ok(vec![Draft {
            pron,
            source: Source::Letter,
            tag: "<N>".to_string(),
        }])
    }

    fn assemble_stem(&self, c: &StemCandidate, class: WordClass) -> Result<Vec<Draft>> {
        let listed = |genre: Genre| -> Option<Vec<Pron>> {
            self.lex
                .lookup_root(&c.stem, Some(genre))
                .iter()
                .find(|e| !e.prons.is_empty())
                .map(|e| e.prons.clone())
        };
        let (root_prons, source, genre) = match class {
            WordClass::Abbreviation => {
                let hint = !self.lex.lookup_root(&c.stem, Some(Genre::Foreign)).is_empty();
                let prons = match listed(Genre::Abbreviation) {
                    Some(p) => p,
                    None => abbreviation_prons(self.lex, &c.stem, hint)?,
                };
                (prons, Source::Abbreviation, Genre::Abbreviation)
            }
            WordClass::ForeignTurkishOnly => {
                let prons = match listed(Genre::Foreign) {
                    Some(p) => p,
                    None => vec![read_as_turkish(&c.stem)?],
                };
                (prons, Source::Foreign, Genre::Foreign)
            }
            WordClass::ForeignDual => {
                let prons = match listed(Genre::Foreign) {
                    Some(p) => p,
                    None => foreign_prons(self.lex, &c.stem)?,
                };
                (prons, Source::Foreign, Genre::Foreign)
            }
            WordClass::Mistyped => return Ok(Vec::new()),
        };
        let root = RootEntry {
            surface: c.stem.clone(),
            prons: Vec::new(),
            genres: vec![genre],
            pos: Pos::Nominal,
            lengthens_final_vowel: false,
            no_final_voicing: false,
            fixed_stress_syllable: None,
            compound_stress_syllable: None,
        };
        let a = Analysis {
            root: &root,
            genre,
            root_realized: c.written_stem.clone(),
            root_voiced: c.stem != c.written_stem,
            boundary_voiced: false,
            suffixes: c.suffixes.clone(),
            tag: chain_tag(self.lex, Pos::Nominal, &c.suffixes),
        };
        let prons = assemble(self.lex, &a, &root_prons, true)?;
        Ok(drafts_of(prons, source, &a.tag))
    }

    fn finish(&self, surface: &str, drafts: Vec<Draft>, opts: &Options) -> Result<WordResult> {
        let mut seen = HashSet::new();
        let mut prons = Vec::new();
        for d in drafts {
            for resolved in resolve_soft_g(&d.pron) {
                let expanded = if opts.variants {
                    with_variants(self.lex, &resolved, surface, &d.tag)
                } else {
                    vec![resolved]
                };
                for pron in expanded {
                    let rendered = render(&pron, opts.mode)?;
                    if seen.insert(rendered.clone()) {
                        prons.push(PronOut {
                            pron,
                            rendered,
                            source: d.source,
                            tag: d.tag.clone(),
                        });
                    }
                }
            }
        }
        Ok(WordResult {
            surface: surface.to_string(),
            prons,
        })
    }
}

fn chain_tag(lex: &Lexicon, pos: Pos, chain: &[SuffixUse]) -> String {
    let mut tag = String::from(if pos == Pos::Verbal { "<V>" } else { "<N>" });
    for u in chain {
        tag.push_str(&lex.suffixes[u.template].tag);
    }
    tag
}

/// Read a word letter by letter as written Turkish: epenthesis, base phones,
/// syllable allophones, final stress.
fn letters_pron(word: &str) -> Result<Pron> {
    let spelled = epenthesize(word);
    let pron = Pron::new(base_map(&spelled)?);
    let spans = syllable_spans(&pron.phones)?;
    let mut out = apply_allophones(&pron, &spans);
    out.stress = Some(ordinary_stress(out.vowel_count(), None));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon;

    fn engine() -> Engine<'static> {
        Engine::new(lexicon::embedded())
    }

    fn asr(word: &str) -> Vec<String> {
        let opts = Options::default();
        engine()
            .g2p_word(word, &opts)
            .unwrap()
            .prons
            .into_iter()
            .map(|p| p.rendered)
            .collect()
    }

    fn asr_variants(word: &str) -> Vec<String> {
        let opts = Options {
            variants: true,
            ..Options::default()
        };
        engine()
            .g2p_word(word, &opts)
            .unwrap()
            .prons
            .into_iter()
            .map(|p| p.rendered)
            .collect()
    }

    #[test]
    fn native_words_go_through_the_analyzer() {
        assert!(asr("zamana").contains(&"z a m a: n a".to_string()));
        assert!(asr("gidiyor").contains(&"gj i d i j o r".to_string()));
        assert!(asr("Kadınlar").contains(&"k a d 1 n 5 a r".to_string()));
    }

    #[test]
    fn apostrophe_boundary_voices_unless_blocked() {
        assert!(asr("Zonguldak'a").contains(&"z o n gj u 5 d a:".to_string()));
        assert!(asr("Ahmet'e").contains(&"a h m e d e".to_string()));
        assert_eq!(asr("Sarp'a"), vec!["s a r p a".to_string()]);
        assert!(asr("Minsk'e").contains(&"m i n s c e".to_string()));
    }

    #[test]
    fn apostrophe_suffixes_attach_to_spell_outs() {
        assert!(asr("TR'nin").contains(&"t e: r e: n i n".to_string()));
        assert!(asr("AKP'nin").contains(&"a: c e: p e: n i n".to_string()));
    }

    #[test]
    fn bare_abbreviations_dispatch_on_shape() {
        assert_eq!(asr("tr"), vec!["t e: r e:".to_string()]);
        assert!(asr("tüik").contains(&"t y: i c".to_string()));
        assert!(asr("sat").contains(&"s a t".to_string()));
    }

    #[test]
    fn unknown_stems_classify_and_keep_their_suffixes() {
        let got = asr("facebuğumdan");
        assert!(got.contains(&"f a dZ e b u: m d a n".to_string()), "{got:?}");
        assert!(got.contains(&"f e j s b u: m d a n".to_string()), "{got:?}");
        let stm = asr("stm");
        assert_eq!(stm, vec!["s e: t e: m e:".to_string()]);
    }

    #[test]
    fn turkishized_spellings_skip_the_english_register() {
        assert_eq!(asr("feysbuk"), vec!["f e j s b u k".to_string()]);
    }

    #[test]
    fn mistyped_words_fall_back_to_letters() {
        assert_eq!(asr("kelimelik"), vec!["c e l i m e l i c".to_string()]);
    }

    #[test]
    fn variants_are_opt_in_and_input_first() {
        let plain = asr("gidiyor");
        assert_eq!(plain, vec!["gj i d i j o r".to_string()]);
        let with = asr_variants("gidiyor");
        assert_eq!(with[0], "gj i d i j o r");
        assert!(with.contains(&"gj i d i j o".to_string()), "{with:?}");
    }

    #[test]
    fn word_errors_surface_as_codes() {
        let opts = Options::default();
        let e = engine().g2p_word("...", &opts).unwrap_err();
        assert_eq!(e.code(), "EmptyToken");
        let e = engine().g2p_word("w1x2", &opts).unwrap_err();
        assert_eq!(e.code(), "UnknownGrapheme");
    }

    #[test]
    fn tts_mode_renders_stress_and_syllables() {
        let opts = Options {
            mode: Mode::Tts,
            variants: false,
        };
        let got = engine().g2p_word("kısadır", &opts).unwrap();
        let rendered: Vec<&str> = got.prons.iter().map(|p| p.rendered.as_str()).collect();
        assert!(rendered.contains(&"k 1-s a-d +1 r"), "{rendered:?}");
    }
}
