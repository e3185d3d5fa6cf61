//! Exact lattice computations for line bundles on quartic K3 surfaces.
//!
//! A Picard lattice is given by a Gram matrix and the hyperplane class `H`
//! (`H² = 4`). From that data alone the crate decides effectivity, computes
//! `(h⁰, h¹, h²)` of any class, and classifies the initialized ACM line
//! bundles in two independent ways: by their numerical invariants, and by
//! brute-force vanishing of `h¹` over all twists.
//!
//! ```
//! use quartic_acm::{acm, catalog, cohomology, DivisorClass, EffectiveCone};
//!
//! let cone = EffectiveCone::new(catalog::line());
//! let line = DivisorClass::new(vec![0, 1]);
//! assert_eq!(acm::classify_numeric(&cone, &line), acm::TheoremCase::CaseA);
//! assert!(acm::is_acm_oracle(&cone, &line).unwrap());
//! assert_eq!(cohomology::cohomology(&cone, &line).h0, 1);
//! ```

pub mod acm;
pub mod catalog;
pub mod cohomology;
pub mod cone;
pub mod error;
pub mod format;
pub mod harness;
pub mod lattice;

pub use cone::{EffectiveCone, Root, RootOrder};
pub use error::{Error, Result};
pub use lattice::{DivisorClass, PolarizedK3Lattice};
