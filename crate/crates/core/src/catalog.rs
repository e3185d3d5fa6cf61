//! The shipped rank-1 and rank-2 lattices.
//!
//! | name    | Gram               | notable classes (second basis vector) |
//! |---------|--------------------|---------------------------------------|
//! | rank1   | `[[4]]`            | only multiples of H                   |
//! | line    | `[[4,1],[1,-2]]`   | a line L                              |
//! | conic   | `[[4,2],[2,-2]]`   | a conic Q                             |
//! | cubic   | `[[4,3],[3,-2]]`   | a twisted cubic T                     |
//! | gen6    | `[[4,6],[6,4]]`    | D₆ with D₆² = 4, D₆·H = 6             |
//! | quartel | `[[4,4],[4,0]]`    | an elliptic quartic E                 |

use crate::format::LatticeFile;
use crate::lattice::PolarizedK3Lattice;

pub const SOURCES: [(&str, &str); 6] = [
    ("rank1", include_str!("../catalog/rank1.json")),
    ("line", include_str!("../catalog/line.json")),
    ("conic", include_str!("../catalog/conic.json")),
    ("cubic", include_str!("../catalog/cubic.json")),
    ("gen6", include_str!("../catalog/gen6.json")),
    ("quartel", include_str!("../catalog/quartel.json")),
];

/// Loads a catalog lattice by name.
pub fn by_name(name: &str) -> Option<PolarizedK3Lattice> {
    let (_, text) = SOURCES.iter().find(|(n, _)| *n == name)?;
    let file = LatticeFile::from_json(text).expect("catalog file parses");
    Some(file.into_lattice().expect("catalog lattice is admissible"))
}

pub fn all() -> Vec<PolarizedK3Lattice> {
    SOURCES.iter().map(|(n, _)| by_name(n).unwrap()).collect()
}

pub fn rank1() -> PolarizedK3Lattice {
    by_name("rank1").unwrap()
}

pub fn line() -> PolarizedK3Lattice {
    by_name("line").unwrap()
}

pub fn conic() -> PolarizedK3Lattice {
    by_name("conic").unwrap()
}

pub fn cubic() -> PolarizedK3Lattice {
    by_name("cubic").unwrap()
}

pub fn gen6() -> PolarizedK3Lattice {
    by_name("gen6").unwrap()
}

pub fn quartel() -> PolarizedK3Lattice {
    by_name("quartel").unwrap()
}
