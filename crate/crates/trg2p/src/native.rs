//! Pronunciation assembly for analyzed words: root phones plus suffix phones,
//! final-vowel lengthening, boundary voicing on the phone side, syllable
//! allophones, and the stress ordinal.
//!
//! Roots with listed pronunciations keep them verbatim: the whole word is
//! allophonized and the root-sized prefix is then restored, so only the
//! suffix phones pick up syllable coloring.

use crate::error::Result;
use crate::lexicon::{Genre, Lexicon};
use crate::morphology::Analysis;
use crate::phonology::{apply_allophones, base_map, epenthesize, Phoneme, Pron};
use crate::prosody::{ordinary_stress, sezer_stress, syllable_spans};

/// Voiced counterpart of a final voiceless stop on the phone side. The
/// plain velar becomes the soft-g placeholder, its palatal twin stays velar.
pub fn voiced_stop(p: Phoneme) -> Option<Phoneme> {
    let sym = match p.symbol() {
        "p" => "b",
        "t" => "d",
        "tS" => "dZ",
        "k" => "G",
        "c" => "gj",
        _ => return None,
    };
    Some(crate::phonology::phoneme(sym).expect("voiced stop symbols are in the inventory"))
}

/// All pronunciations of one analysis, parallel over the root's listed
/// alternatives. Stress ordinals are set; soft g is not yet resolved.
pub fn combine(lex: &Lexicon, a: &Analysis) -> Result<Vec<Pron>> {
    let listed = !a.root.prons.is_empty();
    let root_prons: Vec<Pron> = if listed {
        a.root.prons.clone()
    } else {
        vec![Pron::new(base_map(&epenthesize(&a.root_realized))?)]
    };
    assemble(lex, a, &root_prons, listed)
}

/// Attach an analysis's suffix phones to externally supplied root
/// pronunciations. With `protect_root` the root phones come through
/// allophonization untouched; otherwise the whole word is recolored.
pub fn assemble(
    lex: &Lexicon,
    a: &Analysis,
    root_prons: &[Pron],
    protect_root: bool,
) -> Result<Vec<Pron>> {
    let listed = protect_root;
    let mut segments: Vec<Vec<Phoneme>> = Vec::new();
    for u in &a.suffixes {
        segments.push(base_map(&u.realized)?);
    }

    let mut out = Vec::new();
    for bare in root_prons {
        let mut root = bare.clone();
        if (listed && a.root_voiced) || a.boundary_voiced {
            if let Some(last) = root.phones.last_mut() {
                if let Some(v) = voiced_stop(*last) {
                    *last = v;
                }
            }
        }
        let suffix_starts_with_vowel = segments
            .first()
            .and_then(|s| s.first())
            .is_some_and(|p| p.is_vowel());
        if a.root.lengthens_final_vowel && suffix_starts_with_vowel {
            if let Some(i) = root.last_vowel_index() {
                root.phones[i] = root.phones[i].long_form();
            }
        }

        let root_len = root.phones.len();
        let mut phones = root.phones.clone();
        for seg in &segments {
            phones.extend_from_slice(seg);
        }
        let full = Pron::new(phones);
        let spans = syllable_spans(&full.phones)?;
        let mut word = apply_allophones(&full, &spans);
        if listed {
            word.phones[..root_len].copy_from_slice(&root.phones);
        }
        word.stress = Some(stress_ordinal(lex, a, bare, &root, &segments)?);
        out.push(word);
    }
    Ok(out)
}

fn stress_ordinal(
    lex: &Lexicon,
    a: &Analysis,
    bare_root: &Pron,
    root: &Pron,
    segments: &[Vec<Phoneme>],
) -> Result<usize> {
    let seg_vowels: Vec<usize> = segments
        .iter()
        .map(|s| s.iter().filter(|p| p.is_vowel()).count())
        .collect();
    let root_vowels = root.vowel_count();
    let total = root_vowels + seg_vowels.iter().sum::<usize>();

    if let Some(n) = a.root.fixed_stress_syllable {
        return Ok(n);
    }
    if a.genre == Genre::Compound {
        if let Some(n) = a.root.compound_stress_syllable {
            return Ok(n);
        }
    }
    if matches!(a.genre, Genre::Proper | Genre::Geographical) {
        return sezer_stress(bare_root);
    }
    let mut acc = root_vowels;
    for (u, &vc) in a.suffixes.iter().zip(&seg_vowels) {
        if lex.suffixes[u.template].stress_shifting && vc > 0 {
            return Ok(ordinary_stress(total, Some(acc + vc - 1)));
        }
        acc += vc;
    }
    Ok(ordinary_stress(total, None))
}
