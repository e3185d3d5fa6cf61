//! Effectivity, (−2)-roots and irreducible classes.
//!
//! A class of positive degree with `D² ≥ −2` is effective by Riemann–Roch
//! (`χ ≥ 1` and `−D` has negative degree). Below that, an effective `D` has
//! negative square only through (−2)-curves `R` with `D·R < 0`, each of which
//! is a fixed component of `|D|`, so `D − R` is again effective. Peeling off
//! such roots either reaches the Riemann–Roch range or gets stuck, and
//! getting stuck certifies non-effectivity.

use std::collections::HashMap;
use std::sync::RwLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, PolarizedK3Lattice};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Root {
    pub class: DivisorClass,
    pub degree: i64,
    pub irreducible: bool,
}

/// Order in which candidate roots are tried during peeling.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RootOrder {
    /// Increasing degree, then lexicographic coordinates.
    #[default]
    Ascending,
    Descending,
}

/// Effective-cone queries over one lattice, with transparent caches.
#[derive(Debug)]
pub struct EffectiveCone {
    lattice: PolarizedK3Lattice,
    /// `roots[d - 1]` holds the effective-side roots of degree `d`.
    roots: RwLock<Vec<Vec<Root>>>,
    effective: RwLock<HashMap<DivisorClass, bool>>,
}

impl EffectiveCone {
    pub fn new(lattice: PolarizedK3Lattice) -> Self {
        EffectiveCone {
            lattice,
            roots: RwLock::new(Vec::new()),
            effective: RwLock::new(HashMap::new()),
        }
    }

    pub fn lattice(&self) -> &PolarizedK3Lattice {
        &self.lattice
    }

    fn ensure_roots(&self, max_degree: i64) {
        let Ok(max_degree) = usize::try_from(max_degree) else {
            return;
        };
        if self.roots.read().unwrap().len() >= max_degree {
            return;
        }
        let mut roots = self.roots.write().unwrap();
        while roots.len() < max_degree {
            let degree = roots.len() as i64 + 1;
            let lat = &self.lattice;
            let d = i128::from(degree);
            let slice = lat
                .classes_of_degree(degree, d * d + 4)
                .into_iter()
                .filter(|c| lat.square(c) == -2)
                .map(|class| {
                    // A root is reducible iff some lower-degree irreducible
                    // root meets it negatively: that root is then a component
                    // and the residual has square >= -2 and positive degree.
                    let irreducible = !roots
                        .iter()
                        .flatten()
                        .any(|r: &Root| r.irreducible && lat.pair(&class, &r.class) < 0);
                    Root {
                        class,
                        degree,
                        irreducible,
                    }
                })
                .collect();
            roots.push(slice);
        }
    }

    /// All classes `R` with `R² = −2` and `1 ≤ R·H ≤ max_degree`, sorted by
    /// degree then coordinates.
    pub fn roots_up_to_degree(&self, max_degree: i64) -> Vec<Root> {
        self.ensure_roots(max_degree);
        let roots = self.roots.read().unwrap();
        roots
            .iter()
            .take(usize::try_from(max_degree).unwrap_or(0))
            .flatten()
            .cloned()
            .collect()
    }

    pub fn irreducible_roots_up_to_degree(&self, max_degree: i64) -> Vec<Root> {
        let mut roots = self.roots_up_to_degree(max_degree);
        roots.retain(|r| r.irreducible);
        roots
    }

    /// First irreducible root of degree at most `max_degree` (in `order`)
    /// satisfying `pred`.
    pub fn find_irreducible_root(
        &self,
        max_degree: i64,
        order: RootOrder,
        mut pred: impl FnMut(&DivisorClass) -> bool,
    ) -> Option<DivisorClass> {
        if max_degree < 1 {
            return None;
        }
        self.ensure_roots(max_degree);
        let roots = self.roots.read().unwrap();
        let slices = &roots[..max_degree as usize];
        let hit = match order {
            RootOrder::Ascending => slices
                .iter()
                .flatten()
                .find(|r| r.irreducible && pred(&r.class)),
            RootOrder::Descending => slices
                .iter()
                .rev()
                .flat_map(|s| s.iter().rev())
                .find(|r| r.irreducible && pred(&r.class)),
        };
        hit.map(|r| r.class.clone())
    }

    /// Whether `D` is the class of an effective divisor. The zero class counts
    /// as effective.
    pub fn is_effective(&self, d: &DivisorClass) -> bool {
        let lat = &self.lattice;
        if d.is_zero() {
            return true;
        }
        let degree = lat.degree(d);
        if degree <= 0 {
            return false;
        }
        if lat.square(d) >= -2 {
            return true;
        }
        if let Some(&known) = self.effective.read().unwrap().get(d) {
            return known;
        }

        let mut visited = vec![d.clone()];
        let mut current = d.clone();
        let verdict = loop {
            if current.is_zero() {
                break true;
            }
            let degree = lat.degree(&current);
            if degree <= 0 {
                break false;
            }
            if lat.square(&current) >= -2 {
                break true;
            }
            if let Some(&known) = self.effective.read().unwrap().get(&current) {
                break known;
            }
            match self
                .find_irreducible_root(degree, RootOrder::Ascending, |r| lat.pair(&current, r) < 0)
            {
                Some(root) => {
                    current = &current - &root;
                    visited.push(current.clone());
                }
                None => break false,
            }
        };

        // Every class on the peeling path is effective iff `d` is.
        let mut memo = self.effective.write().unwrap();
        for class in visited {
            if lat.square(&class) < -2 {
                memo.insert(class, verdict);
            }
        }
        verdict
    }

    /// Effective classes of exactly this degree, sorted lexicographically.
    pub fn effective_classes_of_degree(&self, degree: i64) -> Vec<DivisorClass> {
        if degree < 1 {
            return Vec::new();
        }
        let mut out = self.lattice.effective_candidates(degree);
        out.retain(|c| self.is_effective(c));
        out
    }

    fn require_nonzero_effective(&self, d: &DivisorClass) -> Result<()> {
        if d.len() != self.lattice.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.lattice.rank(),
                found: d.len(),
            });
        }
        if d.is_zero() {
            return Err(Error::ZeroClass);
        }
        if !self.is_effective(d) {
            return Err(Error::NotEffective(d.clone()));
        }
        Ok(())
    }

    /// All splittings `D = A + B` into non-zero effective classes, listed by
    /// `A` in increasing degree. Each unordered pair appears twice.
    pub fn decompositions(&self, d: &DivisorClass) -> Result<Vec<(DivisorClass, DivisorClass)>> {
        self.require_nonzero_effective(d)?;
        let total = self.lattice.degree(d);
        let mut out = Vec::new();
        for a_degree in 1..total {
            for a in self.effective_classes_of_degree(a_degree) {
                let b = d - &a;
                if self.is_effective(&b) {
                    out.push((a, b));
                }
            }
        }
        Ok(out)
    }

    /// True iff `D` admits no splitting into two non-zero effective classes.
    pub fn is_irreducible_class(&self, d: &DivisorClass) -> Result<bool> {
        self.require_nonzero_effective(d)?;
        let lat = &self.lattice;
        let total = lat.degree(d);
        if lat.square(d) == -2 {
            self.ensure_roots(total);
            let roots = self.roots.read().unwrap();
            if let Some(r) = roots[total as usize - 1].iter().find(|r| &r.class == d) {
                return Ok(r.irreducible);
            }
        }
        for a_degree in 1..total {
            for a in self.effective_classes_of_degree(a_degree) {
                if self.is_effective(&(d - &a)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Primitive classes `E` with `E² = 0` and `1 ≤ E·H ≤ max_degree`. Such
    /// classes are automatically effective. Exhaustive in every rank: the
    /// isotropic slice of degree `e` lies in the ellipsoid `N(x) = e²`.
    pub fn isotropic_primitives(&self, max_degree: i64) -> Vec<DivisorClass> {
        let lat = &self.lattice;
        (1..=max_degree)
            .flat_map(|e| {
                lat.classes_of_degree(e, i128::from(e) * i128::from(e))
                    .into_iter()
                    .filter(|c| lat.square(c) == 0 && c.is_primitive())
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn class(v: &[i64]) -> DivisorClass {
        DivisorClass::new(v.to_vec())
    }

    #[test]
    fn effectivity_examples() {
        let line = EffectiveCone::new(catalog::line());
        assert!(line.is_effective(&class(&[0, 1])));
        assert!(!line.is_effective(&class(&[-1, 0])));
        assert!(line.is_effective(&class(&[0, 0])));

        let conic = EffectiveCone::new(catalog::conic());
        assert!(conic.is_effective(&class(&[0, 2])));

        let cubic = EffectiveCone::new(catalog::cubic());
        assert!(!cubic.is_effective(&class(&[1, -1])));
    }

    #[test]
    fn h_minus_two_l_is_not_effective() {
        let line = EffectiveCone::new(catalog::line());
        assert!(!line.is_effective(&class(&[1, -2])));
        assert!(line.is_effective(&class(&[0, 3])));
        assert!(line.is_effective(&class(&[1, -1])));
    }

    #[test]
    fn root_lists() {
        let line = EffectiveCone::new(catalog::line());
        assert_eq!(
            line.roots_up_to_degree(4),
            vec![Root {
                class: class(&[0, 1]),
                degree: 1,
                irreducible: true
            }]
        );
        let gen6 = EffectiveCone::new(catalog::gen6());
        assert!(gen6.roots_up_to_degree(16).is_empty());
        // The plane of Q cuts out a residual conic H - Q.
        let conic = EffectiveCone::new(catalog::conic());
        assert_eq!(
            conic.roots_up_to_degree(2),
            vec![
                Root {
                    class: class(&[0, 1]),
                    degree: 2,
                    irreducible: true
                },
                Root {
                    class: class(&[1, -1]),
                    degree: 2,
                    irreducible: true
                },
            ]
        );
    }

    #[test]
    fn irreducibility_examples() {
        let line = EffectiveCone::new(catalog::line());
        assert!(line.is_irreducible_class(&class(&[0, 1])).unwrap());
        let conic = EffectiveCone::new(catalog::conic());
        assert!(!conic.is_irreducible_class(&class(&[0, 2])).unwrap());
        let rank1 = EffectiveCone::new(catalog::rank1());
        assert!(rank1.is_irreducible_class(&class(&[1])).unwrap());
        assert!(!rank1.is_irreducible_class(&class(&[2])).unwrap());
    }

    #[test]
    fn irreducibility_preconditions() {
        let line = EffectiveCone::new(catalog::line());
        assert!(matches!(
            line.is_irreducible_class(&class(&[0, 0])),
            Err(Error::ZeroClass)
        ));
        assert!(matches!(
            line.is_irreducible_class(&class(&[-1, 0])),
            Err(Error::NotEffective(_))
        ));
    }

    #[test]
    fn isotropic_examples() {
        let line = EffectiveCone::new(catalog::line());
        assert_eq!(
            line.isotropic_primitives(6),
            vec![class(&[1, -1]), class(&[1, 2])]
        );
        let cubic = EffectiveCone::new(catalog::cubic());
        assert!(cubic.isotropic_primitives(16).is_empty());
        let quartel = EffectiveCone::new(catalog::quartel());
        assert_eq!(
            quartel.isotropic_primitives(4),
            vec![class(&[0, 1]), class(&[2, -1])]
        );
    }

    #[test]
    fn decompositions_of_h_on_line() {
        let line = EffectiveCone::new(catalog::line());
        let splits = line.decompositions(&class(&[1, 0])).unwrap();
        assert_eq!(
            splits,
            vec![
                (class(&[0, 1]), class(&[1, -1])),
                (class(&[1, -1]), class(&[0, 1])),
            ]
        );
    }
}
