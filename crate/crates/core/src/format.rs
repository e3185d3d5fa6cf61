//! JSON lattice documents.
//!
//! ```json
//! { "name": "line", "gram": [[4, 1], [1, -2]], "polarization": [1, 0],
//!   "search_bound_degree": 32 }
//! ```
//!
//! `search_bound_degree` is optional. Unknown keys are rejected.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{
    validate_admissible, PolarizedK3Lattice, ValidationReport, DEFAULT_SEARCH_BOUND_DEGREE,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeFile {
    pub name: String,
    pub gram: Vec<Vec<i64>>,
    pub polarization: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search_bound_degree: Option<u32>,
}

impl LatticeFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("lattice file serializes")
    }

    pub fn validate(&self) -> ValidationReport {
        validate_admissible(
            &self.gram,
            &self.polarization,
            self.search_bound_degree
                .unwrap_or(DEFAULT_SEARCH_BOUND_DEGREE),
        )
    }

    pub fn into_lattice(self) -> Result<PolarizedK3Lattice> {
        if self.search_bound_degree == Some(0) {
            return Err(Error::Parse("search_bound_degree must be positive".into()));
        }
        PolarizedK3Lattice::new(
            self.name,
            self.gram,
            self.polarization,
            self.search_bound_degree,
        )
    }
}

impl From<&PolarizedK3Lattice> for LatticeFile {
    fn from(lat: &PolarizedK3Lattice) -> Self {
        LatticeFile {
            name: lat.name().to_string(),
            gram: lat.gram().to_vec(),
            polarization: lat.polarization().coords().to_vec(),
            search_bound_degree: Some(lat.search_bound_degree()),
        }
    }
}

/// Parses `"0,1"` or `"-1, 2"` into coordinates.
pub fn parse_coords(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad coordinate {s:?}: {e}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_minimal_document() {
        let f = LatticeFile::from_json(r#"{"name":"x","gram":[[4]],"polarization":[1]}"#).unwrap();
        assert_eq!(f.search_bound_degree, None);
        let lat = f.into_lattice().unwrap();
        assert_eq!(lat.search_bound_degree(), DEFAULT_SEARCH_BOUND_DEGREE);
    }

    #[test]
    fn rejects_unknown_keys_and_floats() {
        assert!(LatticeFile::from_json(
            r#"{"name":"x","gram":[[4]],"polarization":[1],"extra":1}"#
        )
        .is_err());
        assert!(
            LatticeFile::from_json(r#"{"name":"x","gram":[[4.5]],"polarization":[1]}"#).is_err()
        );
    }

    #[test]
    fn inadmissible_file_carries_report() {
        let f =
            LatticeFile::from_json(r#"{"name":"bad","gram":[[2]],"polarization":[1]}"#).unwrap();
        match f.into_lattice() {
            Err(Error::Inadmissible(report)) => assert!(!report.is_ok()),
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn coordinate_parsing() {
        assert_eq!(parse_coords("0,1").unwrap(), vec![0, 1]);
        assert_eq!(parse_coords(" -2 , 3 ").unwrap(), vec![-2, 3]);
        assert!(parse_coords("1,x").is_err());
        assert!(parse_coords("").is_err());
    }
}
