//! Inflects roots into full noun declensions and verb conjugations.
//!
//! Output pairs every surface form with its root, which makes the generator a
//! source of gold data for the stemmers.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::script::{GraphemeWord, PULLI};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Paradigm {
    Noun,
    Verb,
}

impl FromStr for Paradigm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "noun" => Ok(Paradigm::Noun),
            "verb" => Ok(Paradigm::Verb),
            other => Err(format!(
                "unknown paradigm `{other}` (expected noun or verb)"
            )),
        }
    }
}

impl fmt::Display for Paradigm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Paradigm::Noun => "noun",
            Paradigm::Verb => "verb",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParadigmError {
    #[error("root `{0}` is shorter than two letters")]
    TooShort(String),
    #[error("no {paradigm} pattern for root `{root}`: {reason}")]
    Unsupported {
        root: String,
        paradigm: Paradigm,
        reason: &'static str,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedForm {
    pub surface: GraphemeWord,
    pub stem: GraphemeWord,
    /// Paradigm cell, e.g. `plural dative` or `present 1sg`.
    pub cell: String,
}

/// A vowel-initial case ending split into the vowel sign that fuses with the
/// preceding consonant and the rest.
struct Ending {
    name: &'static str,
    sign: &'static str,
    rest: &'static str,
}

const fn ending(name: &'static str, sign: &'static str, rest: &'static str) -> Ending {
    Ending { name, sign, rest }
}

const ACCUSATIVE: Ending = ending("accusative", "\u{0BC8}", "");
const DATIVE: Ending = ending("dative", "\u{0BC1}", "க்கு");
const SOCIATIVE: Ending = ending("sociative", "\u{0BCB}", "டு");
const GENITIVE: Ending = ending("genitive", "\u{0BC1}", "டைய");
const INSTRUMENTAL: Ending = ending("instrumental", "\u{0BBE}", "ல்");
const LOCATIVE_ANIMATE: Ending = ending("locative", "\u{0BBF}", "டம்");
const ABLATIVE_ANIMATE: Ending = ending("ablative", "\u{0BBF}", "டமிருந்து");
const LOCATIVE: Ending = ending("locative", "\u{0BBF}", "ல்");
const ABLATIVE: Ending = ending("ablative", "\u{0BBF}", "லிருந்து");
const VOCATIVE: Ending = ending("vocative", "\u{0BC7}", "");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum NounClass {
    /// maram: oblique in -aththu, plural -ngaL.
    Am,
    /// PeN: short monosyllable whose final consonant doubles before a vowel.
    Geminating,
    /// kiLi, malai: -y- glide before vowel-initial endings.
    Glide,
}

const GEMINATING: [char; 4] = ['ண', 'ன', 'ல', 'ள'];
const SHORT_SIGNS: [char; 4] = ['\u{0BBF}', '\u{0BC1}', '\u{0BC6}', '\u{0BCA}'];
const SHORT_VOWELS: [char; 5] = ['அ', 'இ', 'உ', 'எ', 'ஒ'];

fn is_consonant(c: char) -> bool {
    ('\u{0B95}'..='\u{0BB9}').contains(&c)
}

fn is_vowel_sign(c: char) -> bool {
    ('\u{0BBE}'..='\u{0BCC}').contains(&c)
}

fn unsupported(root: &GraphemeWord, paradigm: Paradigm, reason: &'static str) -> ParadigmError {
    ParadigmError::Unsupported {
        root: root.to_string(),
        paradigm,
        reason,
    }
}

fn noun_class(root: &GraphemeWord) -> Result<NounClass, ParadigmError> {
    let last: Vec<char> = root.last().unwrap_or("").chars().collect();
    let prev: Vec<char> = root
        .grapheme(root.len() - 2)
        .unwrap_or("")
        .chars()
        .collect();
    let prev_is_bare = prev.last() == Some(&PULLI);
    match last.as_slice() {
        ['ம', PULLI] if !prev_is_bare => Ok(NounClass::Am),
        [c, PULLI] if GEMINATING.contains(c) => {
            let short = match prev.as_slice() {
                [v] if SHORT_VOWELS.contains(v) => true,
                [c] => is_consonant(*c),
                [c, s] => is_consonant(*c) && SHORT_SIGNS.contains(s),
                _ => false,
            };
            if root.len() == 2 && short {
                Ok(NounClass::Geminating)
            } else {
                Err(unsupported(
                    root,
                    Paradigm::Noun,
                    "only short monosyllables ending in ண், ன், ல், ள் are covered",
                ))
            }
        }
        [_, '\u{0BBF}'] | [_, '\u{0BC8}'] => Ok(NounClass::Glide),
        _ => Err(unsupported(
            root,
            Paradigm::Noun,
            "expected an -am, a geminating consonant, or an -i/-ai ending",
        )),
    }
}

fn join(parts: &[&str]) -> GraphemeWord {
    GraphemeWord::new(&parts.concat())
}

fn noun_forms(root: &GraphemeWord) -> Result<Vec<GeneratedForm>, ParadigmError> {
    let class = noun_class(root)?;
    let r = root.as_str();
    let head = root.prefix(root.len() - 1);
    let h = head.as_str();
    let last = root.last().unwrap_or("");
    let final_consonant: String = last.chars().take(1).collect();

    let (locative, ablative) = match class {
        NounClass::Am => (LOCATIVE, ABLATIVE),
        _ => (LOCATIVE_ANIMATE, ABLATIVE_ANIMATE),
    };
    let cases = [
        &ACCUSATIVE,
        &DATIVE,
        &SOCIATIVE,
        &GENITIVE,
        &INSTRUMENTAL,
        &locative,
        &ablative,
    ];

    let mut out = Vec::new();
    let mut push = |surface: GraphemeWord, cell: String| {
        out.push(GeneratedForm {
            surface,
            stem: root.clone(),
            cell,
        })
    };

    push(root.clone(), "singular nominative".into());
    for e in cases {
        let surface = match class {
            NounClass::Am => join(&[h, "த்த", e.sign, e.rest]),
            NounClass::Geminating => join(&[r, &final_consonant, e.sign, e.rest]),
            NounClass::Glide if e.name == "dative" => join(&[r, "க்கு"]),
            NounClass::Glide => join(&[r, "ய", e.sign, e.rest]),
        };
        push(surface, format!("singular {}", e.name));
    }
    // -am nouns: the vocative only swaps the pulli for -e, which no
    // length-reducing rule can undo.
    match class {
        NounClass::Am => {}
        NounClass::Geminating => push(
            join(&[r, &final_consonant, VOCATIVE.sign]),
            "singular vocative".into(),
        ),
        NounClass::Glide => push(join(&[r, "ய", VOCATIVE.sign]), "singular vocative".into()),
    }

    let plural_base = match class {
        NounClass::Am => format!("{h}ங்க"),
        _ => format!("{r}க"),
    };
    push(join(&[&plural_base, "ள்"]), "plural nominative".into());
    for e in cases.into_iter().chain([&VOCATIVE]) {
        push(
            join(&[&plural_base, "ள", e.sign, e.rest]),
            format!("plural {}", e.name),
        );
    }
    Ok(out)
}

/// Finite endings for strong verbs, one row per person/number/gender, one
/// column per tense: past, present, future, future negative.
const VERB_CELLS: [(&str, [&str; 4]); 10] = [
    ("1sg", ["த்தேன்", "க்கிறேன்", "ப்பேன்", "க்கமாட்டேன்"]),
    ("2sg", ["த்தாய்", "க்கிறாய்", "ப்பாய்", "க்கமாட்டாய்"]),
    ("3sg.m", ["த்தான்", "க்கிறான்", "ப்பான்", "க்கமாட்டான்"]),
    ("3sg.f", ["த்தாள்", "க்கிறாள்", "ப்பாள்", "க்கமாட்டாள்"]),
    ("3sg.hon", ["த்தார்", "க்கிறார்", "ப்பார்", "க்கமாட்டார்"]),
    ("3sg.n", ["த்தது", "க்கிறது", "க்கும்", "க்காது"]),
    ("1pl", ["த்தோம்", "க்கிறோம்", "ப்போம்", "க்கமாட்டோம்"]),
    ("2pl", ["த்தீர்கள்", "க்கிறீர்கள்", "ப்பீர்கள்", "க்கமாட்டீர்கள்"]),
    ("3pl", ["த்தார்கள்", "க்கிறார்கள்", "ப்பார்கள்", "க்கமாட்டார்கள்"]),
    ("3pl.n", ["த்தன", "க்கின்றன", "க்கும்", "க்காது"]),
];

const TENSES: [&str; 4] = ["past", "present", "future", "future-negative"];

const NON_FUTURE_NEGATIVE: &str = "க்கவில்லை";

fn verb_forms(root: &GraphemeWord) -> Result<Vec<GeneratedForm>, ParadigmError> {
    let ends_in_vowel_sign = root
        .last()
        .and_then(|g| g.chars().last())
        .is_some_and(is_vowel_sign);
    if !ends_in_vowel_sign {
        return Err(unsupported(
            root,
            Paradigm::Verb,
            "strong verbs ending in a vowel sign only",
        ));
    }
    let r = root.as_str();
    let mut out = Vec::with_capacity(41);
    for (tense_idx, tense) in TENSES.iter().enumerate() {
        for (png, row) in VERB_CELLS.iter() {
            out.push(GeneratedForm {
                surface: join(&[r, row[tense_idx]]),
                stem: root.clone(),
                cell: format!("{tense} {png}"),
            });
        }
    }
    out.push(GeneratedForm {
        surface: join(&[r, NON_FUTURE_NEGATIVE]),
        stem: root.clone(),
        cell: "non-future negative".into(),
    });
    Ok(out)
}

/// Every inflected form of `root` in the given paradigm.
///
/// Nouns yield singular and plural nominative, seven oblique cases and the
/// vocative. Verbs yield the 40 tense and person cells plus the non-future
/// negative; a few cells share a surface form (`-kkum`, `-kkaathu`).
pub fn generate_forms(
    root: &GraphemeWord,
    paradigm: Paradigm,
) -> Result<Vec<GeneratedForm>, ParadigmError> {
    if root.len() < 2 {
        return Err(ParadigmError::TooShort(root.to_string()));
    }
    match paradigm {
        Paradigm::Noun => noun_forms(root),
        Paradigm::Verb => verb_forms(root),
    }
}
