//! Heuristic stemming and register classification for words the analyzer
//! cannot reach: out-of-lexicon stems wearing ordinary Turkish suffixes
//! (loanwords, brand names, typos, unlisted abbreviations).

use crate::lexicon::{Genre, Lexicon, NGramClass};
use crate::morphology::{realize_template, shape_matches, template_expansions, SuffixUse};
use crate::phonology::{char_is_vowel, char_vowel_features};

/// Deepest suffix strip the stemmer attempts.
pub const MAX_STRIP: usize = 3;

/// One way to cut an unknown word into stem + suffix chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StemCandidate {
    /// Proposed dictionary form (final stop devoiced when the boundary says
    /// so); what classification runs on.
    pub stem: String,
    /// The stem exactly as written in the word.
    pub written_stem: String,
    pub suffixes: Vec<SuffixUse>,
}

impl StemCandidate {
    pub fn stripped(&self) -> usize {
        self.suffixes.iter().map(|s| s.realized.chars().count()).sum()
    }
}

/// Expansion tables for every suffix template, computed once per engine.
pub fn expansion_table(lex: &Lexicon) -> Vec<Vec<String>> {
    lex.suffixes.iter().map(template_expansions).collect()
}

/// All stem cuts of `word`, deepest strip first. A devoiced stem candidate
/// precedes its raw spelling when a voiced stop sits between vowels at the
/// boundary. The zero-strip cut is always present and last.
pub fn stem_candidates(
    lex: &Lexicon,
    expansions: &[Vec<String>],
    word: &str,
) -> Vec<StemCandidate> {
    let mut cuts: Vec<(String, Vec<SuffixUse>)> = Vec::new();
    let mut queue: Vec<(String, Vec<SuffixUse>)> = vec![(word.to_string(), Vec::new())];
    while let Some((rest, chain)) = queue.pop() {
        cuts.push((rest.clone(), chain.clone()));
        if chain.len() == MAX_STRIP {
            continue;
        }
        for (ti, forms) in expansions.iter().enumerate() {
            for form in forms {
                let Some(shorter) = rest.strip_suffix(form.as_str()) else { continue };
                if shorter.is_empty() {
                    continue;
                }
                let mut longer_chain = vec![SuffixUse {
                    template: ti,
                    realized: form.clone(),
                }];
                longer_chain.extend(chain.iter().cloned());
                queue.push((shorter.to_string(), longer_chain));
            }
        }
    }

    let mut out: Vec<StemCandidate> = Vec::new();
    let mut push = |c: StemCandidate| {
        if !out.contains(&c) {
            out.push(c);
        }
    };
    for (written, chain) in cuts {
        if !segments_check_out(lex, &written, &chain) {
            continue;
        }
        if let Some(devoiced) = devoiced_stem(&written, &chain) {
            push(StemCandidate {
                stem: devoiced,
                written_stem: written.clone(),
                suffixes: chain.clone(),
            });
        }
        push(StemCandidate {
            stem: written.clone(),
            written_stem: written,
            suffixes: chain,
        });
    }
    out.sort_by(|a, b| {
        b.stripped()
            .cmp(&a.stripped())
            .then(a.suffixes.len().cmp(&b.suffixes.len()))
    });
    out
}

/// Re-realize each stripped segment against the written prefix before it.
/// A vowel-less prefix cannot anchor harmony, so its segments are held to
/// shape compatibility only.
fn segments_check_out(lex: &Lexicon, stem: &str, chain: &[SuffixUse]) -> bool {
    let mut prefix = stem.to_string();
    for u in chain {
        if prefix.chars().any(char_is_vowel) {
            match realize_template(&lex.suffixes[u.template], &prefix) {
                Some(r) if r == u.realized => {}
                _ => return false,
            }
        } else {
            let end = prefix.chars().last().expect("stem cuts are nonempty");
            if !shape_matches(&lex.suffixes[u.template], end, &u.realized) {
                return false;
            }
        }
        prefix.push_str(&u.realized);
    }
    true
}

pub fn devoiced_stem(written: &str, chain: &[SuffixUse]) -> Option<String> {
    let next_is_vowel = chain
        .first()
        .and_then(|u| u.realized.chars().next())
        .is_some_and(char_is_vowel);
    if !next_is_vowel {
        return None;
    }
    let mut chars: Vec<char> = written.chars().collect();
    let n = chars.len();
    if n < 2 || !char_is_vowel(chars[n - 2]) {
        return None;
    }
    let devoiced = match chars[n - 1] {
        'b' => 'p',
        'c' => 'ç',
        'd' => 't',
        'g' | 'ğ' => 'k',
        _ => return None,
    };
    chars[n - 1] = devoiced;
    Some(chars.into_iter().collect())
}

/// How an out-of-lexicon stem should be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordClass {
    Abbreviation,
    /// Both the letter-faithful and the English-flavored register.
    ForeignDual,
    /// Turkishized spelling: the letter-faithful register is the only one.
    ForeignTurkishOnly,
    /// Reads like (possibly misspelled) Turkish; letter rules apply.
    Mistyped,
}

fn gram_score(lex: &Lexicon, class: NGramClass, word: &str) -> f64 {
    let table = lex.ngrams(class);
    let chars: Vec<char> = word.chars().collect();
    let mut hits = 0.0;
    let mut total = 0usize;
    for n in [3usize, 4] {
        if chars.len() < n {
            continue;
        }
        for w in chars.windows(n) {
            total += 1;
            let gram: String = w.iter().collect();
            if table.grams.contains(&gram) {
                hits += if n == 4 { 2.0 } else { 1.0 };
            }
        }
    }
    if total == 0 {
        0.0
    } else {
        hits / total as f64
    }
}

fn violates_backness_harmony(word: &str) -> bool {
    let mut front = false;
    let mut back = false;
    for c in word.chars() {
        if let Some((is_front, _, _)) = char_vowel_features(c) {
            front |= is_front;
            back |= !is_front;
        }
    }
    front && back
}

/// Classify an unknown stem: lexicon genre hits first, very short stems
/// spell out, the rest goes to an n-gram vote with a disharmony bonus for
/// the foreign side.
pub fn classify(lex: &Lexicon, stem: &str) -> WordClass {
    if !lex.lookup_root(stem, Some(Genre::Abbreviation)).is_empty() {
        return WordClass::Abbreviation;
    }
    let foreign_hit = !lex.lookup_root(stem, Some(Genre::Foreign)).is_empty();
    if !foreign_hit && stem.chars().count() <= 3 {
        return WordClass::Abbreviation;
    }
    let english = gram_score(lex, NGramClass::English, stem);
    let trenglish = gram_score(lex, NGramClass::TurkishizedEnglish, stem);
    if foreign_hit {
        return if trenglish > english {
            WordClass::ForeignTurkishOnly
        } else {
            WordClass::ForeignDual
        };
    }
    let turkish = gram_score(lex, NGramClass::Turkish, stem);
    let bonus = if violates_backness_harmony(stem) { 1.0 } else { 0.0 };
    let foreign = english + trenglish + bonus;
    if foreign > turkish {
        if trenglish > english {
            WordClass::ForeignTurkishOnly
        } else {
            WordClass::ForeignDual
        }
    } else {
        WordClass::Mistyped
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon;

    fn lex() -> &'static Lexicon {
        lexicon::embedded()
    }

    fn cuts(word: &str) -> Vec<(String, Vec<String>)> {
        let exp = expansion_table(lex());
        stem_candidates(lex(), &exp, word)
            .into_iter()
            .map(|c| (c.stem, c.suffixes.into_iter().map(|s| s.realized).collect()))
            .collect()
    }

    #[test]
    fn strips_suffixes_and_devoices_boundaries() {
        let got = cuts("facebuğumdan");
        let best = &got[0];
        assert_eq!(best.0, "facebuk");
        assert_eq!(best.1, ["um", "dan"]);
        let raw_pos = got.iter().position(|c| c.0 == "facebuğ").unwrap();
        assert!(got.iter().position(|c| c.0 == "facebuk").unwrap() < raw_pos);
    }

    #[test]
    fn keeps_unvoiced_loanword_boundaries() {
        let got = cuts("feysbukumdan");
        assert_eq!(got[0].0, "feysbuk");
        assert_eq!(got[0].1, ["um", "dan"]);
    }

    #[test]
    fn vowelless_stems_skip_harmony_checks() {
        let got = cuts("thyde");
        assert!(
            got.iter().any(|c| c.0 == "thy" && c.1 == ["de"]),
            "{got:?}"
        );
    }

    #[test]
    fn harmony_rejects_bad_segmentations() {
        let got = cuts("feysbukimden");
        assert!(!got.iter().any(|c| c.0 == "feysbuk" && c.1.len() == 2), "{got:?}");
    }

    #[test]
    fn zero_strip_cut_is_last() {
        let got = cuts("feysbuk");
        assert_eq!(got.last().unwrap().0, "feysbuk");
    }

    #[test]
    fn classification_order() {
        assert_eq!(classify(lex(), "stm"), WordClass::Abbreviation);
        assert_eq!(classify(lex(), "thy"), WordClass::Abbreviation);
        assert_eq!(classify(lex(), "tr"), WordClass::Abbreviation);
        assert_eq!(classify(lex(), "facebuk"), WordClass::ForeignDual);
        assert_eq!(classify(lex(), "feysbuk"), WordClass::ForeignTurkishOnly);
        assert_eq!(classify(lex(), "kelimelik"), WordClass::Mistyped);
    }
}
