use arthur_core::paramfile::{parse_parameter, serialize_parameter};
use arthur_core::parameters::ArthurParameter;
use proptest::prelude::*;

/// Labels plus the block multiset; instance order is not part of the content.
fn content(psi: &ArthurParameter) -> (Vec<String>, Vec<(String, u32, u32)>) {
    let labels = psi.labels().map(|l| format!("{l:?}")).collect();
    let blocks = psi.sorted_blocks().iter().map(|b| (b.rho.to_string(), b.a, b.b)).collect();
    (labels, blocks)
}

fn source(labels: &[(u32, bool)], blocks: &[(usize, u32, u32, u32)]) -> String {
    let mut text = String::new();
    for (i, (dim, symp)) in labels.iter().enumerate() {
        let kind = if *symp { "symp" } else { "orth" };
        text.push_str(&format!("rho l{i} dim={dim} selfdual={kind}\n"));
    }
    for &(i, a, b, mult) in blocks {
        text.push_str(&format!("block l{} a={a} b={b} mult={mult}  # note\n", i % labels.len()));
    }
    text
}

proptest! {
    #[test]
    fn canonical_text_is_a_fixed_point(
        labels in prop::collection::vec((1u32..4, any::<bool>()), 1..4),
        blocks in prop::collection::vec((0usize..4, 1u32..8, 1u32..8, 1u32..3), 0..6),
    ) {
        let psi = parse_parameter(&source(&labels, &blocks)).unwrap();
        let canonical = serialize_parameter(&psi);
        let again = parse_parameter(&canonical).unwrap();
        prop_assert_eq!(content(&again), content(&psi));
        prop_assert_eq!(serialize_parameter(&again), canonical);
        let total: u32 = blocks.iter().map(|b| b.3).sum();
        prop_assert_eq!(psi.len(), total as usize);
        let dim: u64 = blocks
            .iter()
            .map(|&(i, a, b, m)| u64::from(labels[i % labels.len()].0 * a * b * m))
            .sum();
        prop_assert_eq!(psi.dimension(), dim);
    }
}

#[test]
fn corpus_files_round_trip() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/corpus");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        if !name.starts_with('p') {
            continue;
        }
        let psi = parse_parameter(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(content(&parse_parameter(&serialize_parameter(&psi)).unwrap()), content(&psi), "{name}");
        seen += 1;
    }
    assert_eq!(seen, 18);
}

#[test]
fn bad_corpus_files_are_rejected() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/corpus");
    for name in ["b01_unknown_rho.txt", "b02_bad_value.txt", "b03_mult_zero.txt", "b04_duplicate_rho.txt"] {
        let text = std::fs::read_to_string(format!("{dir}/{name}")).unwrap();
        let err = parse_parameter(&text).unwrap_err();
        assert!(err.to_string().starts_with("line "), "{name}: {err}");
    }
}
