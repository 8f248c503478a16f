//! Readings for words outside native morphology: abbreviations spelled or
//! read as words by their consonant-vowel shape, and foreign items in two
//! registers, a letter-faithful Turkish one and an English-flavored one
//! driven by orthographic rewrite rules.

use crate::error::Result;
use crate::lexicon::{LetterRegister, Lexicon};
use crate::phonology::{
    apply_allophones, base_map_char, char_is_vowel, epenthesize, phoneme, Phoneme, Pron,
};
use crate::prosody::syllable_spans;

/// Name every letter in sequence.
pub fn spell_out(lex: &Lexicon, word: &str, register: LetterRegister) -> Result<Pron> {
    let table = lex.letters(register);
    let mut phones = Vec::new();
    for c in word.chars() {
        phones.extend_from_slice(&table.name_of(c)?.phones);
    }
    let mut p = Pron::new(phones);
    p.stress = Some(p.vowel_count().saturating_sub(1));
    Ok(p)
}

/// Read an abbreviation as an ordinary word. Adjacent vowel letters of one
/// height fuse into a long vowel plus the second vowel; mixed heights take a
/// j between them.
pub fn word_read(word: &str) -> Result<Pron> {
    let chars: Vec<char> = word.chars().collect();
    let mut phones: Vec<Phoneme> = Vec::new();
    for (i, &c) in chars.iter().enumerate() {
        let p = base_map_char(c)?;
        if i > 0 && char_is_vowel(chars[i - 1]) && char_is_vowel(c) {
            let prev = phones.last_mut().expect("vowel letter mapped a phone");
            if prev.high() == p.high() {
                *prev = prev.long_form();
            } else {
                phones.push(phoneme("j").expect("j is in the inventory"));
            }
        }
        phones.push(p);
    }
    let full = Pron::new(phones);
    let spans = syllable_spans(&full.phones)?;
    let mut p = apply_allophones(&full, &spans);
    p.stress = Some(p.vowel_count().saturating_sub(1));
    Ok(p)
}

/// All rule readings of an abbreviation, dispatched on its consonant-vowel
/// shape. `foreign_hint` prepends an English spell-out.
pub fn abbreviation_prons(lex: &Lexicon, word: &str, foreign_hint: bool) -> Result<Vec<Pron>> {
    let shape: String = word
        .chars()
        .map(|c| if char_is_vowel(c) { 'V' } else { 'C' })
        .collect();
    let mut out = Vec::new();
    if foreign_hint {
        out.push(spell_out(lex, word, LetterRegister::English)?);
    }
    let (word_reading, spelling) = if !shape.contains('V') || word.chars().count() == 2 {
        (false, true)
    } else {
        match shape.as_str() {
            "CVC" | "VCV" | "CVV" | "CVVC" => (true, false),
            "VCC" | "VVC" => (true, true),
            "CCV" => (false, true),
            _ => (true, true),
        }
    };
    if word_reading {
        out.push(word_read(word)?);
    }
    if spelling {
        out.push(spell_out(lex, word, LetterRegister::Turkish)?);
    }
    Ok(out)
}

/// Map foreign-only letters onto Turkish ones.
fn fold_foreign(word: &str) -> String {
    let mut out = String::new();
    for c in word.chars() {
        match c {
            'q' => out.push('k'),
            'w' => out.push('v'),
            'x' => out.push_str("ks"),
            c => out.push(c),
        }
    }
    out
}

/// Read a Turkish-orthography string aloud: epenthesis, letter phones,
/// syllable allophones, final stress.
pub fn read_as_turkish(word: &str) -> Result<Pron> {
    let spelled = epenthesize(&fold_foreign(word));
    let mut phones = Vec::new();
    for c in spelled.chars() {
        phones.push(base_map_char(c)?);
    }
    let full = Pron::new(phones);
    let spans = syllable_spans(&full.phones)?;
    let mut p = apply_allophones(&full, &spans);
    p.stress = Some(p.vowel_count().saturating_sub(1));
    Ok(p)
}

/// Cap on English-register respellings per word.
const MAX_RESPELLINGS: usize = 8;

/// Rewrite a foreign spelling into Turkish-orthography candidates. Rules are
/// tried in table order at each position, the first match applies, and a
/// rule's alternatives fork the result set.
pub fn respell(lex: &Lexicon, word: &str) -> Vec<String> {
    let chars: Vec<char> = word.chars().collect();
    let mut done = Vec::new();
    let mut work: Vec<(usize, String)> = vec![(0, String::new())];
    while let Some((pos, acc)) = work.pop() {
        if done.len() >= MAX_RESPELLINGS {
            break;
        }
        if pos == chars.len() {
            if !done.contains(&acc) {
                done.push(acc);
            }
            continue;
        }
        let rest: String = chars[pos..].iter().collect();
        let rule = lex.rewrites.iter().find(|r| {
            rest.starts_with(&r.pattern) && (!r.at_end || rest == r.pattern)
        });
        match rule {
            Some(r) => {
                let consumed = r.pattern.chars().count();
                for alt in &r.alternatives {
                    let mut next = acc.clone();
                    next.push_str(alt);
                    work.push((pos + consumed, next));
                }
            }
            None => {
                let mut next = acc;
                next.push(chars[pos]);
                work.push((pos + 1, next));
            }
        }
    }
    done
}

/// Both registers of a foreign word: the Turkish letter-faithful reading
/// first, then each English-flavored respelling.
pub fn foreign_prons(lex: &Lexicon, word: &str) -> Result<Vec<Pron>> {
    let mut out = Vec::new();
    let mut push = |p: Pron| {
        if !out.contains(&p) {
            out.push(p);
        }
    };
    push(read_as_turkish(word)?);
    for respelled in respell(lex, word) {
        if let Ok(p) = read_as_turkish(&respelled) {
            push(p);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon;

    fn lex() -> &'static Lexicon {
        lexicon::embedded()
    }

    fn strs(prons: Vec<Pron>) -> Vec<String> {
        prons.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn spelling_out() {
        assert_eq!(
            spell_out(lex(), "tr", LetterRegister::Turkish).unwrap().to_string(),
            "t e: r e:"
        );
        assert_eq!(
            spell_out(lex(), "ab", LetterRegister::Turkish).unwrap().to_string(),
            "a: b e:"
        );
        assert_eq!(
            spell_out(lex(), "ai", LetterRegister::English).unwrap().to_string(),
            "e j a j"
        );
    }

    #[test]
    fn word_reading_with_vowel_junctions() {
        assert_eq!(word_read("tüik").unwrap().to_string(), "t y: i c");
        assert_eq!(word_read("tai").unwrap().to_string(), "t a j i");
        assert_eq!(word_read("aal").unwrap().to_string(), "a: a 5");
        assert_eq!(word_read("aet").unwrap().to_string(), "a: e t");
        assert_eq!(word_read("sat").unwrap().to_string(), "s a t");
        assert_eq!(word_read("itü").unwrap().to_string(), "i t y");
    }

    #[test]
    fn shape_dispatch() {
        let got = strs(abbreviation_prons(lex(), "tr", false).unwrap());
        assert_eq!(got, ["t e: r e:"]);
        let got = strs(abbreviation_prons(lex(), "akp", false).unwrap());
        assert!(got.contains(&"a: c e: p e:".into()), "{got:?}");
        let got = strs(abbreviation_prons(lex(), "aft", false).unwrap());
        assert!(got.contains(&"a f t".into()), "{got:?}");
        let got = strs(abbreviation_prons(lex(), "aal", false).unwrap());
        assert!(got.contains(&"a: a 5".into()) && got.contains(&"a: a: l e:".into()), "{got:?}");
        let got = strs(abbreviation_prons(lex(), "dna", false).unwrap());
        assert_eq!(got, ["d e: n e: a:"]);
    }

    #[test]
    fn foreign_dual_register() {
        let got = strs(foreign_prons(lex(), "facebuk").unwrap());
        assert!(got.contains(&"f a dZ e b u k".into()), "{got:?}");
        assert!(got.contains(&"f e j s b u k".into()), "{got:?}");
    }

    #[test]
    fn respelling_applies_ordered_rules() {
        assert!(respell(lex(), "facebook").contains(&"feysbuk".to_string()));
        assert!(respell(lex(), "chat").contains(&"çat".to_string()));
        let forks = respell(lex(), "google");
        assert!(forks.len() >= 2, "{forks:?}");
        assert!(forks.len() <= MAX_RESPELLINGS);
    }

    #[test]
    fn foreign_letters_fold() {
        let got = strs(foreign_prons(lex(), "windows").unwrap());
        assert!(got.iter().any(|p| p.starts_with("v i n d o")), "{got:?}");
    }
}
