//! Fixed inputs shared by the benchmarks.

use subatomic_core::{Domain, DomainId, GenPoly, SeqElem};

pub fn element(id: DomainId, text: &str) -> (Domain, GenPoly) {
    let d = Domain::new(id);
    let f = d.parse(text).expect("fixture parses");
    (d, f)
}

pub fn sequences() -> Vec<SeqElem> {
    let mut out = Vec::new();
    for limit in [0u64, 3, 5, 6, 8, 10] {
        for a in [0u64, 7, 14] {
            for b in [0u64, 7, 21] {
                out.push(SeqElem::new(limit, [(1, a), (2, b)]));
            }
        }
    }
    out
}
