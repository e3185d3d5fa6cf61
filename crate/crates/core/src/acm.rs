//! Initialized ACM line bundles on a quartic surface.
//!
//! Two independent routes live here. [`classify_numeric`] reads only
//! `(D², D·H)` and two emptiness conditions. [`is_acm_oracle`] never looks at
//! those patterns: it evaluates `h¹(D + lH)` on every twist inside a window
//! outside of which vanishing is certified by nef-and-big classes.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::cohomology::{cohomology, h0, is_nef};
use crate::cone::EffectiveCone;
use crate::error::{Error, Result};
use crate::lattice::DivisorClass;

pub const DEFAULT_TWIST_CAP: i64 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NoneReason {
    NotEffective,
    ZeroClass,
    NumericMismatch,
    EmptinessViolated,
}

impl NoneReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            NoneReason::NotEffective => "not-effective",
            NoneReason::ZeroClass => "zero-class",
            NoneReason::NumericMismatch => "numeric-mismatch",
            NoneReason::EmptinessViolated => "emptiness-violated",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremCase {
    CaseA,
    CaseB,
    CaseC,
    CaseD,
    None(NoneReason),
}

impl TheoremCase {
    pub fn is_none(&self) -> bool {
        matches!(self, TheoremCase::None(_))
    }

    /// Short label: `A`, `B`, `C`, `D`, or `none:<reason>`.
    pub fn label(&self) -> String {
        match self {
            TheoremCase::CaseA => "A".into(),
            TheoremCase::CaseB => "B".into(),
            TheoremCase::CaseC => "C".into(),
            TheoremCase::CaseD => "D".into(),
            TheoremCase::None(r) => format!("none:{}", r.as_str()),
        }
    }
}

impl fmt::Display for TheoremCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl Serialize for TheoremCase {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

/// Numeric pattern of one case: `D² = square` and
/// `min_degree ≤ D·H ≤ max_degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseRule {
    pub square: i64,
    pub min_degree: i64,
    pub max_degree: i64,
    /// Also require `D − H` and `2H − D` to be non-effective.
    pub require_emptiness: bool,
}

impl CaseRule {
    fn matches(&self, square: i64, degree: i64) -> bool {
        square == self.square && (self.min_degree..=self.max_degree).contains(&degree)
    }
}

/// The four patterns checked by [`classify_numeric_with`]. The default is the
/// quartic classification; altering it is how the equivalence check is
/// shown to detect mislabelled cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NumericRules {
    pub case_a: CaseRule,
    pub case_b: CaseRule,
    pub case_c: CaseRule,
    pub case_d: CaseRule,
}

impl Default for NumericRules {
    fn default() -> Self {
        let rule = |square, min_degree, max_degree, require_emptiness| CaseRule {
            square,
            min_degree,
            max_degree,
            require_emptiness,
        };
        NumericRules {
            case_a: rule(-2, 1, 3, false),
            case_b: rule(0, 3, 4, false),
            case_c: rule(2, 5, 5, false),
            case_d: rule(4, 6, 6, true),
        }
    }
}

/// `h⁰(D) > 0` and `h⁰(D − H) = 0`.
pub fn is_initialized(cone: &EffectiveCone, d: &DivisorClass) -> bool {
    let h = cone.lattice().polarization();
    h0(cone, d) > 0 && h0(cone, &(d - h)) == 0
}

pub fn classify_numeric(cone: &EffectiveCone, d: &DivisorClass) -> TheoremCase {
    classify_numeric_with(cone, d, &NumericRules::default())
}

pub fn classify_numeric_with(
    cone: &EffectiveCone,
    d: &DivisorClass,
    rules: &NumericRules,
) -> TheoremCase {
    if d.is_zero() {
        return TheoremCase::None(NoneReason::ZeroClass);
    }
    if !cone.is_effective(d) {
        return TheoremCase::None(NoneReason::NotEffective);
    }
    let lat = cone.lattice();
    let square = lat.square(d);
    let degree = lat.degree(d);
    let candidates = [
        (TheoremCase::CaseA, &rules.case_a),
        (TheoremCase::CaseB, &rules.case_b),
        (TheoremCase::CaseC, &rules.case_c),
        (TheoremCase::CaseD, &rules.case_d),
    ];
    let Some((case, rule)) = candidates
        .into_iter()
        .find(|(_, rule)| rule.matches(square, degree))
    else {
        return TheoremCase::None(NoneReason::NumericMismatch);
    };
    if rule.require_emptiness {
        let h = lat.polarization();
        let below = d - h;
        let above = &lat.twist(2) - d;
        if cone.is_effective(&below) || cone.is_effective(&above) {
            return TheoremCase::None(NoneReason::EmptinessViolated);
        }
    }
    case
}

/// Twists outside the open interval `(l_minus, l_plus)` have `h¹ = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TwistWindow {
    pub l_minus: i64,
    pub l_plus: i64,
}

impl TwistWindow {
    /// Twists that still need an explicit `h¹` computation.
    pub fn interior(&self) -> std::ops::Range<i64> {
        self.l_minus + 1..self.l_plus
    }
}

fn ceil_div4(a: i64) -> i64 {
    -((-a).div_euclid(4))
}

fn is_nef_and_big(cone: &EffectiveCone, d: &DivisorClass) -> bool {
    cone.lattice().square(d) > 0 && cone.is_effective(d) && is_nef(cone, d)
}

/// Smallest `l ≥ start` (start clamped to the cap) with `d + lH` nef and big.
fn first_nef_big_twist(
    cone: &EffectiveCone,
    d: &DivisorClass,
    cap: i64,
    side: &'static str,
    original: &DivisorClass,
) -> Result<i64> {
    let lat = cone.lattice();
    let h = lat.polarization();
    let mut l = ceil_div4(2 - lat.degree(d)).clamp(-cap, cap);
    let mut shifted = d + &(l * h);
    loop {
        if is_nef_and_big(cone, &shifted) {
            return Ok(l);
        }
        if l >= cap {
            return Err(Error::TwistCapExceeded {
                class: original.clone(),
                cap,
                side,
                last: l,
            });
        }
        l += 1;
        shifted = &shifted + h;
    }
}

pub fn twist_window(cone: &EffectiveCone, d: &DivisorClass) -> Result<TwistWindow> {
    twist_window_capped(cone, d, DEFAULT_TWIST_CAP)
}

/// Window of twists bounded by certified nef-and-big classes: `D + l_plus·H`
/// and `−(D + l_minus·H)` are both nef with positive square, and adding
/// further multiples of the ample `H` keeps them so.
pub fn twist_window_capped(
    cone: &EffectiveCone,
    d: &DivisorClass,
    cap: i64,
) -> Result<TwistWindow> {
    cone.lattice().class(d.coords().to_vec())?;
    let l_plus = first_nef_big_twist(cone, d, cap, "positive", d)?;
    let l_minus = -first_nef_big_twist(cone, &-d, cap, "negative", d)?;
    debug_assert!(l_minus < l_plus);
    Ok(TwistWindow { l_minus, l_plus })
}

/// `h¹(D + lH) = 0` for every integer `l`, decided by brute force over the
/// twist window.
pub fn is_acm_oracle(cone: &EffectiveCone, d: &DivisorClass) -> Result<bool> {
    let window = twist_window(cone, d)?;
    let h = cone.lattice().polarization();
    Ok(window
        .interior()
        .all(|l| cohomology(cone, &(d + &(l * h))).h1 == 0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Lemma22Branch {
    /// `D·H ≤ 3` and `h¹(H − D) = 0`.
    LowDegree,
    /// `D·H ≤ 7` and `h¹(H − D) = h¹(2H − D) = 0`.
    TwoTwists,
}

/// Which of the two sufficient ACM criteria for an effective `D` with
/// `h¹(D) = 0` applies, if any. Branch order: the low-degree one first.
pub fn lemma22_branch(cone: &EffectiveCone, d: &DivisorClass) -> Result<Option<Lemma22Branch>> {
    let lat = cone.lattice();
    lat.class(d.coords().to_vec())?;
    if !cone.is_effective(d) {
        return Err(Error::NotEffective(d.clone()));
    }
    if cohomology(cone, d).h1 != 0 {
        return Ok(None);
    }
    let degree = lat.degree(d);
    if degree > 7 {
        return Ok(None);
    }
    let h1_h_minus = cohomology(cone, &(&lat.twist(1) - d)).h1;
    if h1_h_minus != 0 {
        return Ok(None);
    }
    if degree <= 3 {
        return Ok(Some(Lemma22Branch::LowDegree));
    }
    let h1_2h_minus = cohomology(cone, &(&lat.twist(2) - d)).h1;
    Ok((h1_2h_minus == 0).then_some(Lemma22Branch::TwoTwists))
}

pub fn lemma22_sufficient(cone: &EffectiveCone, d: &DivisorClass) -> Result<bool> {
    Ok(lemma22_branch(cone, d)?.is_some())
}
