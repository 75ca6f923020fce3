//! Bundled evaluation data: a root list expanded through the paradigm
//! generator, plus hand-checked forms the generator does not produce.

use crate::eval::{load_gold, GoldEntry};
use crate::ruleset::{generate_forms, Paradigm};
use crate::script::GraphemeWord;

static ROOTS: &str = include_str!("../data/roots.tsv");
static HAND_FORMS: &str = include_str!("../data/hand_forms.tsv");

pub fn bundled_roots() -> Vec<(GraphemeWord, Paradigm)> {
    ROOTS
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let (root, paradigm) = l.split_once('\t').expect("root<TAB>paradigm");
            (
                GraphemeWord::new(root),
                paradigm.parse().expect("bundled paradigm name"),
            )
        })
        .collect()
}

/// Every generated form of every bundled root, in root order.
pub fn paradigm_gold() -> Vec<GoldEntry> {
    bundled_roots()
        .iter()
        .flat_map(|(root, paradigm)| {
            generate_forms(root, *paradigm).expect("bundled roots are supported")
        })
        .map(|f| GoldEntry {
            surface: f.surface,
            expected_stem: f.stem,
        })
        .collect()
}

pub fn hand_gold() -> Vec<GoldEntry> {
    load_gold(HAND_FORMS).expect("bundled hand forms parse")
}

/// Generated forms followed by the hand-checked ones.
pub fn bundled_gold() -> Vec<GoldEntry> {
    let mut gold = paradigm_gold();
    gold.extend(hand_gold());
    gold
}
