use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Anchor {
    pub label: &'static str,
    pub quote: &'static str,
}

// (check id, location, verbatim quote), generated from data/anchors.tsv
// after every quote was found in the source text.
include!(concat!(env!("OUT_DIR"), "/anchors.rs"));

pub fn anchor_for(id: &str) -> Option<Anchor> {
    ANCHORS
        .iter()
        .find(|(key, _, _)| *key == id)
        .map(|&(_, label, quote)| Anchor { label, quote })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_unique() {
        let mut ids: Vec<&str> = ANCHORS.iter().map(|a| a.0).collect();
        ids.sort();
        let n = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn quotes_verbatim_in_source() {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../paper.md");
        let Ok(text) = std::fs::read_to_string(path) else { return };
        for (id, _, quote) in ANCHORS {
            assert!(text.contains(quote), "{id}");
        }
    }
}
