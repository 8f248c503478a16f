//! Syllabification, stress placement and final rendering.

use crate::error::{G2pError, Result};
use crate::phonology::{Phoneme, Pron};
use std::ops::Range;

/// A pronunciation split into syllables. Concatenating the syllables yields
/// the original phone sequence; every syllable contains exactly one vowel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyllabifiedPron {
    pub syllables: Vec<Pron>,
    pub stress_syllable: Option<usize>,
}

fn is_cluster(phones: &[Phoneme]) -> bool {
    // str / ktr / ctr / ntr onset clusters stay together.
    phones.len() == 3
        && matches!(phones[0].symbol(), "s" | "k" | "c" | "n")
        && phones[1].symbol() == "t"
        && phones[2].symbol() == "r"
}

/// Syllable boundaries over a phone sequence.
///
/// Scans left to right; for the syllable whose vowel sits at `pos`, the cut
/// point depends on how far away the next vowel is: adjacent vowel or a
/// single consonant between them puts the cut right after `pos`; two
/// consonants split them one each; three or more consonants keep the first
/// two (or only the first, when the following three form an str/ktr/ctr/ntr
/// cluster) in the current syllable. Trailing consonants attach to the last
/// syllable.
#[allow(clippy::if_same_then_else)]
pub fn syllable_spans(phones: &[Phoneme]) -> Result<Vec<Range<usize>>> {
    if !phones.iter().any(|p| p.is_vowel()) {
        return Err(G2pError::NoVowel);
    }
    let mut spans: Vec<Range<usize>> = Vec::new();
    let mut start = 0;
    while start < phones.len() {
        let Some(rel) = phones[start..].iter().position(|p| p.is_vowel()) else {
            spans
                .last_mut()
                .expect("leading vowel guaranteed by the NoVowel guard")
                .end = phones.len();
            break;
        };
        let pos = start + rel;
        let more = phones[pos + 1..].iter().any(|p| p.is_vowel());
        let cut = if !more {
            phones.len()
        } else if phones[pos + 1].is_vowel() || phones[pos + 2].is_vowel() {
            pos + 1
        } else if phones[pos + 3].is_vowel() {
            pos + 2
        } else if is_cluster(&phones[pos + 1..pos + 4]) {
            pos + 2
        } else {
            pos + 3
        };
        spans.push(start..cut);
        start = cut;
    }
    Ok(spans)
}

/// Split a pronunciation into syllables, carrying the stress index over as a
/// syllable ordinal (one vowel per syllable makes the two coincide).
pub fn syllabify(pron: &Pron) -> Result<SyllabifiedPron> {
    let spans = syllable_spans(&pron.phones)?;
    let syllables = spans
        .iter()
        .map(|s| Pron::new(pron.phones[s.clone()].to_vec()))
        .collect();
    Ok(SyllabifiedPron {
        syllables,
        stress_syllable: pron.stress,
    })
}

/// Sezer stress for geographical names, computed on the bare root: two
/// syllables stress the first; longer roots stress the penult when it is
/// closed (ends in a consonant; a long vowel does not close), otherwise the
/// antepenult. Returns a root-relative syllable ordinal.
pub fn sezer_stress(root: &Pron) -> Result<usize> {
    let spans = syllable_spans(&root.phones)?;
    let n = spans.len();
    if n <= 2 {
        return Ok(0);
    }
    let penult = &spans[n - 2];
    let closed = !root.phones[penult.end - 1].is_vowel();
    Ok(if closed { n - 2 } else { n - 3 })
}

/// Ordinary-word stress: final syllable, unless a stress-shifting suffix is
/// present, in which case the syllable immediately left of it. `anchor` is
/// the vowel ordinal of the leftmost shifting suffix's last vowel.
pub fn ordinary_stress(total_vowels: usize, anchor: Option<usize>) -> usize {
    match anchor {
        Some(a) => a.saturating_sub(1),
        None => total_vowels.saturating_sub(1),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Asr,
    Tts,
}

/// Render a pronunciation: ASR mode joins the phone tokens with spaces; TTS
/// mode additionally marks the stressed vowel with a leading `+` and joins
/// syllables with `-`.
pub fn render(pron: &Pron, mode: Mode) -> Result<String> {
    match mode {
        Mode::Asr => Ok(pron.to_string()),
        Mode::Tts => {
            let spans = syllable_spans(&pron.phones)?;
            let stress = pron.stress.unwrap_or_else(|| pron.vowel_count() - 1);
            let stress_idx = pron
                .vowel_index(stress)
                .or_else(|| pron.last_vowel_index())
                .ok_or(G2pError::NoVowel)?;
            let mut syllables = Vec::with_capacity(spans.len());
            for span in spans {
                let mut toks = Vec::with_capacity(span.len());
                for i in span {
                    let sym = pron.phones[i].symbol();
                    if i == stress_idx {
                        toks.push(format!("+{sym}"));
                    } else {
                        toks.push(sym.to_string());
                    }
                }
                syllables.push(toks.join(" "));
            }
            Ok(syllables.join("-"))
        }
    }
}
