//! Post-phonological adjustments: soft-g resolution and fast-speech variants.
//!
//! Soft g is carried through assembly as the placeholder G and resolved here
//! against its vowel neighborhood. Resolution branches (a written form can be
//! heard several ways), recurses left to right, and always terminates with a
//! G-free pronunciation. Vowel merges shift the stress ordinal along.

use crate::lexicon::Lexicon;
use crate::phonology::{phoneme, Phoneme, Pron};

fn ph(sym: &str) -> Phoneme {
    phoneme(sym).expect("fixed symbol is in the inventory")
}

/// Remove the phone at `g`, keep stress.
fn dropped(pron: &Pron, g: usize) -> Pron {
    let mut p = pron.clone();
    p.phones.remove(g);
    p
}

/// Replace the phone at `g`, keep stress.
fn replaced(pron: &Pron, g: usize, with: Phoneme) -> Pron {
    let mut p = pron.clone();
    p.phones[g] = with;
    p
}

/// Merge prev + G + next into one long vowel `kept`, decrementing stress
/// ordinals that pointed at or beyond the removed second vowel.
fn merged(pron: &Pron, g: usize, kept: Phoneme) -> Pron {
    let removed_ordinal = pron.phones[..=g + 1]
        .iter()
        .filter(|p| p.is_vowel())
        .count();
    let mut p = pron.clone();
    p.phones[g - 1] = kept.long_form();
    p.phones.drain(g..=g + 1);
    if let Some(s) = p.stress {
        if s >= removed_ordinal {
            p.stress = Some(s - 1);
        }
    }
    p
}

/// All hearings of `pron` with every soft-g placeholder resolved.
pub fn resolve_soft_g(pron: &Pron) -> Vec<Pron> {
    let Some(g) = pron.phones.iter().position(|p| p.symbol() == "G") else {
        return vec![pron.clone()];
    };
    let prev = (g > 0).then(|| pron.phones[g - 1]).filter(|p| p.is_vowel());
    let next = pron.phones.get(g + 1).copied().filter(|p| p.is_vowel());
    let j = ph("j");

    let branches: Vec<Pron> = match (prev, next) {
        (Some(v), None) => {
            if v.front() {
                vec![replaced(pron, g, j)]
            } else {
                let mut p = dropped(pron, g);
                p.phones[g - 1] = v.long_form();
                vec![p]
            }
        }
        (Some(a), Some(b)) => {
            let same = a.short_form() == b.short_form();
            match (same, a.front(), b.front()) {
                (true, false, _) => vec![merged(pron, g, b)],
                (true, true, _) => vec![merged(pron, g, b), replaced(pron, g, j)],
                _ if a.short_form() == ph("e") && b.short_form() == ph("i") => {
                    vec![replaced(pron, g, j), merged(pron, g, b)]
                }
                _ if a.short_form() == ph("i") && b.short_form() == ph("e") => {
                    vec![replaced(pron, g, j)]
                }
                _ if a.rounded() && b.rounded() => vec![dropped(pron, g)],
                _ if a.rounded() != b.rounded() => vec![dropped(pron, g)],
                _ if a.short_form() == ph("a") && b.short_form() == ph("1") => {
                    vec![dropped(pron, g), merged(pron, g, a)]
                }
                _ if a.short_form() == ph("1") && b.short_form() == ph("a") => {
                    vec![dropped(pron, g)]
                }
                _ if a.front() || b.front() => vec![replaced(pron, g, j)],
                _ => vec![dropped(pron, g)],
            }
        }
        (None, _) => {
            if next.is_some_and(|v| v.front()) {
                vec![replaced(pron, g, j)]
            } else {
                vec![dropped(pron, g)]
            }
        }
    };

    let mut out = Vec::new();
    for b in branches {
        for r in resolve_soft_g(&b) {
            if !out.contains(&r) {
                out.push(r);
            }
        }
    }
    out
}

/// Fast-speech variants of a resolved pronunciation: the input always comes
/// first, each rule appends its hearing when it applies, lexical variant rows
/// follow, and duplicates collapse.
pub fn with_variants(lex: &Lexicon, pron: &Pron, surface: &str, tag: &str) -> Vec<Pron> {
    let mut out = vec![pron.clone()];
    let mut push = |p: Pron| {
        if !out.contains(&p) {
            out.push(p);
        }
    };

    // l after n assimilates
    let lateral = [ph("l"), ph("5")];
    let n = ph("n");
    let mut assimilated = pron.clone();
    let mut hit = false;
    for i in 1..assimilated.phones.len() {
        if assimilated.phones[i - 1] == n && lateral.contains(&assimilated.phones[i]) {
            assimilated.phones[i] = n;
            hit = true;
        }
    }
    if hit {
        push(assimilated);
    }

    // progressive -yor loses its r at the end of the word or before a consonant
    if tag.contains("<prog>") {
        let (jj, o, r) = (ph("j"), ph("o"), ph("r"));
        let mut dropped = pron.clone();
        let mut hit = false;
        let mut i = 0;
        while i + 2 < dropped.phones.len() + 1 {
            let p = &dropped.phones;
            if i + 2 < p.len()
                && p[i] == jj
                && p[i + 1] == o
                && p[i + 2] == r
                && p.get(i + 3).is_none_or(|x| !x.is_vowel())
            {
                dropped.phones.remove(i + 2);
                hit = true;
            }
            i += 1;
        }
        if hit {
            push(dropped);
        }
    }

    // i + j contracts to a long i
    let (i_short, jj) = (ph("i"), ph("j"));
    let mut contracted = pron.clone();
    let mut hit = false;
    let mut i = 0;
    while i + 1 < contracted.phones.len() {
        if contracted.phones[i] == i_short && contracted.phones[i + 1] == jj {
            contracted.phones[i] = ph("i:");
            contracted.phones.remove(i + 1);
            hit = true;
        }
        i += 1;
    }
    if hit {
        push(contracted);
    }

    for row in lex.variants_for(surface) {
        let applies = row.required_tag.as_ref().is_none_or(|t| tag.contains(t.as_str()));
        if applies {
            for vp in &row.prons {
                let mut vp = vp.clone();
                if vp.stress.is_none() {
                    vp.stress = Some(vp.vowel_count().saturating_sub(1));
                }
                push(vp);
            }
        }
    }
    out
}
