//! Morphological analysis: root lookup plus suffix-template chains.
//!
//! A word is matched root-prefix-first (longest prefix wins the top of the
//! list) and the remainder is consumed by suffix templates realized against
//! the growing left context. Final stops voice before vowel-initial suffixes
//! on the orthographic side (`kitap` + `[y]A` is spelled `kitaba`), so the
//! analyzer matches the voiced spelling back to the voiceless lexicon form.

use crate::lexicon::{Genre, Lexicon, Pos, RootEntry, SuffixTemplate, TemplatePiece};
use crate::phonology::{
    char_is_voiceless, char_is_vowel, char_vowel_features, high_vowel_char, low_vowel_char,
    MetaGrapheme,
};

/// Longest suffix chain the analyzer will consider.
pub const MAX_CHAIN: usize = 6;

/// One realized suffix template inside an analysis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixUse {
    /// Index into `Lexicon::suffixes`.
    pub template: usize,
    /// Surface letters the template contributed.
    pub realized: String,
}

/// A single morphological reading of a word.
#[derive(Debug, Clone)]
pub struct Analysis<'a> {
    pub root: &'a RootEntry,
    pub genre: Genre,
    /// Root as spelled in the word; differs from `root.surface` when the
    /// final stop voiced before a vowel-initial suffix.
    pub root_realized: String,
    pub root_voiced: bool,
    /// Voicing applies on the phone side only, leaving the spelling intact
    /// (apostrophe boundaries: `Zonguldak'a` keeps its `k`).
    pub boundary_voiced: bool,
    pub suffixes: Vec<SuffixUse>,
    pub tag: String,
}

impl Analysis<'_> {
    pub fn realized_word(&self) -> String {
        let mut w = self.root_realized.clone();
        for s in &self.suffixes {
            w.push_str(&s.realized);
        }
        w
    }
}

fn devoiced(c: char) -> Option<char> {
    match c {
        'b' => Some('p'),
        'c' => Some('ç'),
        'd' => Some('t'),
        'g' | 'ğ' => Some('k'),
        _ => None,
    }
}

pub fn is_voiceless_stop(c: char) -> bool {
    matches!(c, 'p' | 'ç' | 't' | 'k')
}

/// Voice the final stop of `w` in place: p>b, ç>c, t>d, and k to ğ after a
/// vowel but g after a consonant.
fn voice_final(w: &mut String) {
    let Some(last) = w.chars().last() else { return };
    let voiced = match last {
        'p' => 'b',
        'ç' => 'c',
        't' => 'd',
        'k' => {
            let prev = w.chars().rev().nth(1);
            if prev.is_some_and(char_is_vowel) {
                'ğ'
            } else {
                'g'
            }
        }
        _ => return,
    };
    w.pop();
    w.push(voiced);
}

/// Realize a template's pieces against the left context `left`.
///
/// Buffer letters surface by the last letter of the running context, harmony
/// metaphonemes by its last vowel, and D by the voicing of the last letter.
/// Returns None when harmony is needed but no vowel is in scope.
pub fn realize_template(tpl: &SuffixTemplate, left: &str) -> Option<String> {
    let last_left = left.chars().last()?;
    let mut out = String::new();
    for piece in &tpl.pieces {
        let end = out.chars().last().unwrap_or(last_left);
        let harmony = || {
            out.chars()
                .rev()
                .chain(left.chars().rev())
                .find(|&c| char_is_vowel(c))
                .and_then(char_vowel_features)
        };
        match piece {
            TemplatePiece::Literal(c) => out.push(*c),
            TemplatePiece::BufferConsonant(c) => {
                if char_is_vowel(end) {
                    out.push(*c);
                }
            }
            TemplatePiece::BufferHigh => {
                if !char_is_vowel(end) {
                    let (front, rounded, _) = harmony()?;
                    out.push(high_vowel_char(front, rounded));
                }
            }
            TemplatePiece::Meta(MetaGrapheme::A) => {
                let (front, _, _) = harmony()?;
                out.push(low_vowel_char(front));
            }
            TemplatePiece::Meta(MetaGrapheme::H) => {
                let (front, rounded, _) = harmony()?;
                out.push(high_vowel_char(front, rounded));
            }
            TemplatePiece::Meta(MetaGrapheme::D) => {
                out.push(if char_is_voiceless(end) { 't' } else { 'd' });
            }
        }
    }
    Some(out)
}

/// Every surface string a template can realize as, across all harmony,
/// buffer, and voicing choices. Used where no left context is available to
/// resolve them (suffix stripping, apostrophe boundaries).
pub fn template_expansions(tpl: &SuffixTemplate) -> Vec<String> {
    let mut forms = vec![String::new()];
    for piece in &tpl.pieces {
        let choices: Vec<Vec<char>> = match piece {
            TemplatePiece::Literal(c) => vec![vec![*c]],
            TemplatePiece::BufferConsonant(c) => vec![vec![*c], vec![]],
            TemplatePiece::BufferHigh => {
                let mut v: Vec<Vec<char>> =
                    ['ı', 'i', 'u', 'ü'].iter().map(|&c| vec![c]).collect();
                v.push(vec![]);
                v
            }
            TemplatePiece::Meta(MetaGrapheme::A) => vec![vec!['a'], vec!['e']],
            TemplatePiece::Meta(MetaGrapheme::H) => {
                ['ı', 'i', 'u', 'ü'].iter().map(|&c| vec![c]).collect()
            }
            TemplatePiece::Meta(MetaGrapheme::D) => vec![vec!['d'], vec!['t']],
        };
        forms = forms
            .iter()
            .flat_map(|f| {
                choices.iter().map(move |c| {
                    let mut s = f.clone();
                    s.extend(c);
                    s
                })
            })
            .collect();
    }
    forms.retain(|f| !f.is_empty());
    forms.sort();
    forms.dedup();
    forms
}

/// Whether `realized` is a possible surface of `tpl` after a left context
/// ending in `left_end` when harmony cannot be resolved. Buffer presence and
/// the D alternation depend only on the neighboring character, so they are
/// enforced; A and H accept any of their vowels.
pub fn shape_matches(tpl: &SuffixTemplate, left_end: char, realized: &str) -> bool {
    fn step(pieces: &[TemplatePiece], prev: char, rest: &[char]) -> bool {
        let Some((piece, more)) = pieces.split_first() else {
            return rest.is_empty();
        };
        match piece {
            TemplatePiece::Literal(c) => rest.first() == Some(c) && step(more, *c, &rest[1..]),
            TemplatePiece::BufferConsonant(c) => {
                if char_is_vowel(prev) {
                    rest.first() == Some(c) && step(more, *c, &rest[1..])
                } else {
                    step(more, prev, rest)
                }
            }
            TemplatePiece::BufferHigh => {
                if char_is_vowel(prev) {
                    step(more, prev, rest)
                } else {
                    rest.first()
                        .is_some_and(|&c| matches!(c, 'ı' | 'i' | 'u' | 'ü'))
                        && step(more, rest[0], &rest[1..])
                }
            }
            TemplatePiece::Meta(MetaGrapheme::A) => {
                rest.first().is_some_and(|&c| matches!(c, 'a' | 'e'))
                    && step(more, rest[0], &rest[1..])
            }
            TemplatePiece::Meta(MetaGrapheme::H) => {
                rest.first()
                    .is_some_and(|&c| matches!(c, 'ı' | 'i' | 'u' | 'ü'))
                    && step(more, rest[0], &rest[1..])
            }
            TemplatePiece::Meta(MetaGrapheme::D) => {
                let want = if char_is_voiceless(prev) { 't' } else { 'd' };
                rest.first() == Some(&want) && step(more, want, &rest[1..])
            }
        }
    }
    let chars: Vec<char> = realized.chars().collect();
    step(&tpl.pieces, left_end, &chars)
}

pub fn chain_position_ok(pos: Pos, position: usize, tpl: &SuffixTemplate) -> bool {
    if position == 0 {
        if tpl.verb_initial() {
            pos.verbal()
        } else {
            pos.nominal()
        }
    } else {
        !tpl.verb_initial()
    }
}

/// Spell out `root` followed by the given template chain, or None when the
/// chain is ungrammatical for the root or harmony cannot resolve.
pub fn realize_chain(lex: &Lexicon, root: &RootEntry, chain: &[usize]) -> Option<String> {
    let mut w = root.surface.clone();
    for (i, &ti) in chain.iter().enumerate() {
        let tpl = &lex.suffixes[ti];
        if !chain_position_ok(root.pos, i, tpl) {
            return None;
        }
        let r = realize_template(tpl, &w)?;
        if r.is_empty() {
            return None;
        }
        let voices = r.chars().next().is_some_and(char_is_vowel)
            && w.chars().last().is_some_and(is_voiceless_stop)
            && (i > 0 || !root.no_final_voicing);
        if voices {
            voice_final(&mut w);
        }
        w.push_str(&r);
    }
    Some(w)
}

/// All morphological readings of `word`, one per root match, template chain,
/// and root genre. Longer root matches come first.
pub fn analyze<'a>(lex: &'a Lexicon, word: &str) -> Vec<Analysis<'a>> {
    let chars: Vec<char> = word.chars().collect();
    let mut out = Vec::new();
    for plen in (1..=chars.len()).rev() {
        let prefix: String = chars[..plen].iter().collect();
        let rest_vowel = chars.get(plen).copied().is_some_and(char_is_vowel);
        for root in lex.lookup_root(&prefix, None) {
            collect_chains(lex, root, &chars, prefix.clone(), false, &mut out);
        }
        let Some(last) = prefix.chars().last() else { continue };
        let (Some(dev), true) = (devoiced(last), rest_vowel) else { continue };
        let mut devprefix: String = prefix.chars().take(plen - 1).collect();
        devprefix.push(dev);
        for root in lex.lookup_root(&devprefix, None) {
            if !root.no_final_voicing {
                collect_chains(lex, root, &chars, prefix.clone(), true, &mut out);
            }
        }
    }
    out
}

fn collect_chains<'a>(
    lex: &'a Lexicon,
    root: &'a RootEntry,
    word: &[char],
    realized_root: String,
    root_voiced: bool,
    out: &mut Vec<Analysis<'a>>,
) {
    let mut chains: Vec<Vec<SuffixUse>> = Vec::new();
    let mut stack = Vec::new();
    descend(lex, root, word, &realized_root, &mut stack, &mut chains);
    for chain in chains {
        let mut tag = String::from(if root.pos == crate::lexicon::Pos::Verbal {
            "<V>"
        } else {
            "<N>"
        });
        for s in &chain {
            tag.push_str(&lex.suffixes[s.template].tag);
        }
        for &genre in &root.genres {
            out.push(Analysis {
                root,
                genre,
                root_realized: realized_root.clone(),
                root_voiced,
                boundary_voiced: false,
                suffixes: chain.clone(),
                tag: tag.clone(),
            });
        }
    }
}

fn descend(
    lex: &Lexicon,
    root: &RootEntry,
    word: &[char],
    w: &str,
    stack: &mut Vec<SuffixUse>,
    chains: &mut Vec<Vec<SuffixUse>>,
) {
    let wlen = w.chars().count();
    if wlen == word.len() {
        chains.push(stack.clone());
        return;
    }
    if stack.len() == MAX_CHAIN {
        return;
    }
    for (ti, tpl) in lex.suffixes.iter().enumerate() {
        if !chain_position_ok(root.pos, stack.len(), tpl) {
            continue;
        }
        let Some(r) = realize_template(tpl, w) else { continue };
        if r.is_empty() {
            continue;
        }
        let mut next = w.to_string();
        let voices = r.chars().next().is_some_and(char_is_vowel)
            && next.chars().last().is_some_and(is_voiceless_stop)
            && (!stack.is_empty() || !root.no_final_voicing);
        if voices {
            voice_final(&mut next);
        }
        let voiced_char = if voices { next.chars().last() } else { None };
        next.push_str(&r);
        let nv: Vec<char> = next.chars().collect();
        if nv.len() > word.len() || nv[..nv.len() - 1] != word[..nv.len() - 1] {
            continue;
        }
        let last = nv[nv.len() - 1];
        let exact = last == word[nv.len() - 1];
        if !exact {
            // A template-final stop may only show up voiced in the word when
            // the suffix that voices it is still to come.
            let mut probe = next.clone();
            voice_final(&mut probe);
            let pending = is_voiceless_stop(last)
                && probe.ends_with(word[nv.len() - 1])
                && nv.len() < word.len()
                && char_is_vowel(word[nv.len()]);
            if !pending {
                continue;
            }
        }
        // When this suffix voiced the previous segment's final stop, the
        // earlier segment's spelling changes with it (ecek + im > eceğim).
        let mut restored = None;
        if let (Some(vc), Some(prev)) = (voiced_char, stack.last_mut()) {
            restored = Some(prev.realized.clone());
            prev.realized.pop();
            prev.realized.push(vc);
        }
        stack.push(SuffixUse {
            template: ti,
            realized: r,
        });
        descend(lex, root, word, &next, stack, chains);
        stack.pop();
        if let (Some(orig), Some(prev)) = (restored, stack.last_mut()) {
            prev.realized = orig;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon;

    fn lex() -> &'static Lexicon {
        lexicon::embedded()
    }

    fn analyses(word: &str) -> Vec<String> {
        analyze(lex(), word)
            .iter()
            .map(|a| {
                let mut s = format!("{}[{}]", a.root.surface, a.genre.name());
                for u in &a.suffixes {
                    s.push('+');
                    s.push_str(&u.realized);
                }
                s
            })
            .collect()
    }

    #[test]
    fn bare_root_has_one_reading_per_genre() {
        let got = analyses("aydın");
        assert!(got.contains(&"aydın[ordinary]".into()));
        assert!(got.contains(&"aydın[proper]".into()));
        assert!(got.contains(&"aydın[geographical]".into()));
    }

    #[test]
    fn voiced_final_stop_matches_voiceless_root() {
        let got = analyses("kitaba");
        assert!(got.contains(&"kitap[ordinary]+a".into()), "{got:?}");
        let got = analyses("cesede");
        assert!(got.contains(&"ceset[ordinary]+e".into()), "{got:?}");
        let got = analyses("çekici");
        assert!(got.contains(&"çekiç[ordinary]+i".into()), "{got:?}");
        let got = analyses("rengi");
        assert!(got.contains(&"renk[ordinary]+i".into()), "{got:?}");
        let got = analyses("sokağı");
        assert!(got.contains(&"sokak[ordinary]+ı".into()), "{got:?}");
    }

    #[test]
    fn unvoiced_spelling_is_rejected_when_voicing_is_obligatory() {
        assert!(analyses("kitapa").is_empty());
        assert!(!analyses("cumhuriyete").is_empty());
        assert!(analyses("cumhuriyede").is_empty());
    }

    #[test]
    fn suffix_chains_realize_with_harmony() {
        let got = analyses("zamanında");
        assert!(got.contains(&"zaman[ordinary]+ı+nda".into()), "{got:?}");
        let got = analyses("evimizden");
        assert!(got.contains(&"ev[ordinary]+imiz+den".into()), "{got:?}");
        let got = analyses("gidiyordum");
        assert!(got.contains(&"git[ordinary]+iyor+du+m".into()), "{got:?}");
        let got = analyses("gideceğim");
        assert!(got.contains(&"git[ordinary]+eceğ+im".into()), "{got:?}");
    }

    #[test]
    fn internal_template_stops_voice_before_vowels() {
        let w = realize_chain(
            lex(),
            one_root("git"),
            &[tpl("[y]AcAk"), tpl("[H]m")],
        );
        assert_eq!(w.as_deref(), Some("gideceğim"));
        let w = realize_chain(lex(), one_root("bil"), &[tpl("DHk"), tpl("[H]m")]);
        assert_eq!(w.as_deref(), Some("bildiğim"));
    }

    #[test]
    fn verbal_templates_need_verbal_roots() {
        assert!(realize_chain(lex(), one_root("ev"), &[tpl("[H]yor")]).is_none());
        assert!(realize_chain(lex(), one_root("git"), &[tpl("[y]A")]).is_none());
        assert!(realize_chain(lex(), one_root("git"), &[tpl("[H]yor"), tpl("[y]DH")]).is_some());
    }

    #[test]
    fn no_voicing_roots_keep_their_stop() {
        let w = realize_chain(lex(), one_root("at"), &[tpl("[y]H")]);
        assert_eq!(w.as_deref(), Some("atı"));
        let w = realize_chain(lex(), one_root("kitap"), &[tpl("[y]H")]);
        assert_eq!(w.as_deref(), Some("kitabı"));
        let w = realize_chain(lex(), one_root("renk"), &[tpl("[y]H")]);
        assert_eq!(w.as_deref(), Some("rengi"));
    }

    #[test]
    fn koyun_family_is_ambiguous() {
        let got = analyses("koyun");
        assert!(got.contains(&"koyun[ordinary]".into()));
        assert!(got.contains(&"koyu[ordinary]+n".into()), "{got:?}");
        assert!(got.contains(&"koy[ordinary]+un".into()), "{got:?}");
        assert!(got.contains(&"koy[ordinary]+u+n".into()), "{got:?}");
    }

    #[test]
    fn analyses_round_trip_through_realize() {
        for word in ["kitaba", "gidiyordum", "zamanında", "koyundan", "aydından"] {
            for a in analyze(lex(), word) {
                let chain: Vec<usize> = a.suffixes.iter().map(|s| s.template).collect();
                assert_eq!(
                    realize_chain(lex(), a.root, &chain).as_deref(),
                    Some(word),
                    "chain for {word} must respell itself"
                );
            }
        }
    }

    fn one_root(surface: &str) -> &'static crate::lexicon::RootEntry {
        lex()
            .lookup_root(surface, None)
            .into_iter()
            .next()
            .unwrap_or_else(|| panic!("{surface} must be in the lexicon"))
    }

    fn tpl(meta: &str) -> usize {
        lex()
            .suffixes
            .iter()
            .position(|t| t.meta_form == meta)
            .unwrap_or_else(|| panic!("{meta} must be a bundled template"))
    }
}
