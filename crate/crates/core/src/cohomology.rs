//! Line-bundle cohomology from lattice data alone.
//!
//! On a K3 surface `Pic = NS`, so `h⁰` is a function of the class. The
//! computation rules, all classical:
//!
//! * a (−2)-curve `R` with `D·R < 0` is a fixed component of `|D|`, so
//!   `h⁰(D) = h⁰(D − R)`;
//! * for nef `M` with `M² > 0`, `h¹(M) = h²(M) = 0` (Kawamata–Viehweg /
//!   Ramanujam), hence `h⁰ = χ = 2 + M²/2`;
//! * nef `M ≠ 0` with `M² = 0` is `k·E` for an elliptic pencil `E`, and
//!   `h⁰(kE) = k + 1` (Saint-Donat);
//! * Serre duality with `K = 0`: `h²(D) = h⁰(−D)`.

use std::fmt;

use serde::Serialize;

use crate::cone::{EffectiveCone, RootOrder};
use crate::error::{Error, Result};
use crate::lattice::DivisorClass;

/// `(h⁰, h¹, h²)` of a line bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CohomologySignature {
    pub h0: u64,
    pub h1: u64,
    pub h2: u64,
}

impl CohomologySignature {
    pub fn euler_char(&self) -> i64 {
        self.h0 as i64 - self.h1 as i64 + self.h2 as i64
    }
}

impl fmt::Display for CohomologySignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h0={} h1={} h2={}", self.h0, self.h1, self.h2)
    }
}

/// `D = M + F` with `M` nef (or zero) and `F` a sum of irreducible roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZariskiDecomposition {
    pub nef_part: DivisorClass,
    /// Distinct irreducible roots with multiplicities, sorted by class.
    pub fixed_part: Vec<(DivisorClass, u32)>,
}

impl ZariskiDecomposition {
    pub fn fixed_is_empty(&self) -> bool {
        self.fixed_part.is_empty()
    }

    pub fn fixed_sum(&self) -> DivisorClass {
        let zero = DivisorClass::zero(self.nef_part.len());
        self.fixed_part
            .iter()
            .fold(zero, |acc, (r, m)| &acc + &(i64::from(*m) * r))
    }
}

pub fn zariski_reduce(cone: &EffectiveCone, d: &DivisorClass) -> Result<ZariskiDecomposition> {
    zariski_reduce_ordered(cone, d, RootOrder::Ascending)
}

/// Peels irreducible roots meeting the current class negatively until none
/// is left. `order` only changes which root is peeled first.
pub fn zariski_reduce_ordered(
    cone: &EffectiveCone,
    d: &DivisorClass,
    order: RootOrder,
) -> Result<ZariskiDecomposition> {
    let lat = cone.lattice();
    lat.class(d.coords().to_vec())?;
    if !cone.is_effective(d) {
        return Err(Error::NotEffective(d.clone()));
    }
    let mut current = d.clone();
    let mut fixed: Vec<DivisorClass> = Vec::new();
    loop {
        let degree = lat.degree(&current);
        let Some(root) = cone.find_irreducible_root(degree, order, |r| lat.pair(&current, r) < 0)
        else {
            break;
        };
        current = &current - &root;
        fixed.push(root);
    }
    fixed.sort();
    let mut fixed_part: Vec<(DivisorClass, u32)> = Vec::new();
    for r in fixed {
        match fixed_part.last_mut() {
            Some((last, m)) if *last == r => *m += 1,
            _ => fixed_part.push((r, 1)),
        }
    }
    Ok(ZariskiDecomposition {
        nef_part: current,
        fixed_part,
    })
}

/// `h⁰(O(D))`.
pub fn h0(cone: &EffectiveCone, d: &DivisorClass) -> u64 {
    if !cone.is_effective(d) {
        return 0;
    }
    let nef = zariski_reduce(cone, d)
        .expect("effective class reduces")
        .nef_part;
    let lat = cone.lattice();
    let square = lat.square(&nef);
    if nef.is_zero() {
        1
    } else if square > 0 {
        (2 + square / 2) as u64
    } else {
        debug_assert_eq!(square, 0, "nef part with negative square");
        nef.content() as u64 + 1
    }
}

/// Full cohomology signature of `O(D)`.
pub fn cohomology(cone: &EffectiveCone, d: &DivisorClass) -> CohomologySignature {
    let h0 = h0(cone, d);
    let h2 = h0_dual(cone, d);
    let chi = cone.lattice().euler_char(d);
    let h1 = h0 as i64 + h2 as i64 - chi;
    assert!(
        h1 >= 0,
        "negative h1 for {d}: h0={h0} h2={h2} chi={chi} (internal inconsistency)"
    );
    CohomologySignature {
        h0,
        h1: h1 as u64,
        h2,
    }
}

fn h0_dual(cone: &EffectiveCone, d: &DivisorClass) -> u64 {
    h0(cone, &-d)
}

/// Nefness, certified for effective classes (and zero) only; any other class
/// reports `false`.
pub fn is_nef(cone: &EffectiveCone, d: &DivisorClass) -> bool {
    if d.is_zero() {
        return true;
    }
    if !cone.is_effective(d) {
        return false;
    }
    let lat = cone.lattice();
    if lat.square(d) < 0 {
        return false;
    }
    cone.find_irreducible_root(lat.degree(d), RootOrder::Ascending, |r| lat.pair(d, r) < 0)
        .is_none()
}

/// Base-point-freeness of `|D|` for non-zero effective `D`.
///
/// With no fixed part, a nef `D` of positive square has base points exactly
/// when `D = kE + Γ` with `E·D = 1` (Saint-Donat); any such `E` has degree at
/// most `D·H`.
pub fn is_base_point_free(cone: &EffectiveCone, d: &DivisorClass) -> Result<bool> {
    require_nonzero_effective(cone, d)?;
    let decomposition = zariski_reduce(cone, d)?;
    if !decomposition.fixed_is_empty() {
        return Ok(false);
    }
    let lat = cone.lattice();
    if lat.square(d) == 0 {
        return Ok(true);
    }
    Ok(!cone
        .isotropic_primitives(lat.degree(d))
        .iter()
        .any(|e| lat.pair(e, d) == 1))
}

/// Every splitting `D = A + B` into non-zero effective classes has
/// `A·B ≥ k`. Vacuously true for classes that do not split.
pub fn is_k_connected(cone: &EffectiveCone, d: &DivisorClass, k: i64) -> Result<bool> {
    let lat = cone.lattice();
    Ok(cone
        .decompositions(d)?
        .iter()
        .all(|(a, b)| lat.pair(a, b) >= k))
}

fn require_nonzero_effective(cone: &EffectiveCone, d: &DivisorClass) -> Result<()> {
    cone.lattice().class(d.coords().to_vec())?;
    if d.is_zero() {
        return Err(Error::ZeroClass);
    }
    if !cone.is_effective(d) {
        return Err(Error::NotEffective(d.clone()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn class(v: &[i64]) -> DivisorClass {
        DivisorClass::new(v.to_vec())
    }

    fn sig(h0: u64, h1: u64, h2: u64) -> CohomologySignature {
        CohomologySignature { h0, h1, h2 }
    }

    #[test]
    fn zariski_examples() {
        let line = EffectiveCone::new(catalog::line());
        let z = zariski_reduce(&line, &class(&[1, 1])).unwrap();
        assert_eq!(z.nef_part, class(&[1, 0]));
        assert_eq!(z.fixed_part, vec![(class(&[0, 1]), 1)]);

        let z = zariski_reduce(&line, &class(&[1, 0])).unwrap();
        assert_eq!(z.nef_part, class(&[1, 0]));
        assert!(z.fixed_is_empty());

        let conic = EffectiveCone::new(catalog::conic());
        let z = zariski_reduce(&conic, &class(&[0, 2])).unwrap();
        assert!(z.nef_part.is_zero());
        assert_eq!(z.fixed_part, vec![(class(&[0, 1]), 2)]);
        assert_eq!(z.fixed_sum(), class(&[0, 2]));
    }

    #[test]
    fn zariski_rejects_non_effective() {
        let line = EffectiveCone::new(catalog::line());
        assert!(matches!(
            zariski_reduce(&line, &class(&[1, -2])),
            Err(Error::NotEffective(_))
        ));
    }

    #[test]
    fn cohomology_examples() {
        let line = EffectiveCone::new(catalog::line());
        assert_eq!(cohomology(&line, &class(&[1, 0])), sig(4, 0, 0));
        assert_eq!(cohomology(&line, &class(&[1, -1])), sig(2, 0, 0));
        assert_eq!(cohomology(&line, &class(&[0, 0])), sig(1, 0, 1));
        assert_eq!(cohomology(&line, &class(&[3, 0])).h0, 20);

        let conic = EffectiveCone::new(catalog::conic());
        let c = cohomology(&conic, &class(&[0, 2]));
        assert_eq!(c, sig(1, 3, 0));
        assert_eq!(c.euler_char(), -2);
    }

    #[test]
    fn nef_examples() {
        let line = EffectiveCone::new(catalog::line());
        assert!(is_nef(&line, &class(&[1, 0])));
        assert!(!is_nef(&line, &class(&[1, 1])));
        assert!(is_nef(&line, &class(&[1, -1])));
        assert!(!is_nef(&line, &class(&[-1, 0])));
        assert!(is_nef(&line, &class(&[0, 0])));
    }

    #[test]
    fn base_point_freeness_examples() {
        let line = EffectiveCone::new(catalog::line());
        assert!(is_base_point_free(&line, &class(&[1, -1])).unwrap());
        assert!(!is_base_point_free(&line, &class(&[1, 1])).unwrap());
        for lat in catalog::all() {
            let cone = EffectiveCone::new(lat);
            let two_h = cone.lattice().twist(2);
            assert!(is_base_point_free(&cone, &two_h).unwrap());
        }
        assert!(matches!(
            is_base_point_free(&line, &class(&[0, 0])),
            Err(Error::ZeroClass)
        ));
    }

    #[test]
    fn connectedness_examples() {
        let line = EffectiveCone::new(catalog::line());
        assert!(is_k_connected(&line, &class(&[1, 0]), 2).unwrap());
        assert!(!is_k_connected(&line, &class(&[1, 0]), 4).unwrap());
        for k in 0..10 {
            assert!(is_k_connected(&line, &class(&[0, 1]), k).unwrap());
        }
        let conic = EffectiveCone::new(catalog::conic());
        assert!(!is_k_connected(&conic, &class(&[0, 2]), 1).unwrap());
    }
}
