//! Even hyperbolic lattices carrying a degree-4 polarization.
//!
//! Everything here is exact integer arithmetic. Pairings accumulate in `i128`
//! with checked operations; an overflow is a hard error (a panic on the
//! internal fast path, [`Error::Overflow`] through [`PolarizedK3Lattice::intersect`]).
//!
//! Bounded enumeration rests on one quadratic form. Writing `e = x·H`, the form
//!
//! ```text
//! N(x) = (x·H)² − 2·x²
//! ```
//!
//! is positive definite whenever the lattice has signature (1, ρ−1) and
//! H² = 4: on `x = a·H + y` with `y ⊥ H` it equals `8a² − 2y²`. An effective
//! class of degree `e` satisfies `x² ≥ −2e²`, so `N(x) ≤ 5e²`, and every class
//! we ever need to enumerate sits inside an explicit ellipsoid `N(x) ≤ c`.
//! The coordinate box of that ellipsoid is `x_i² ≤ c · cof_ii / det` where
//! `cof`/`det` come from the Gram matrix of `N`.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_SEARCH_BOUND_DEGREE: u32 = 32;

/// Integer coordinates of a divisor class in the lattice's fixed basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DivisorClass(Vec<i64>);

impl DivisorClass {
    pub fn new(coords: Vec<i64>) -> Self {
        DivisorClass(coords)
    }

    pub fn zero(rank: usize) -> Self {
        DivisorClass(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Greatest common divisor of the coordinates (0 for the zero class).
    pub fn content(&self) -> i64 {
        self.0.iter().fold(0i64, |g, &c| gcd(g, c.abs()))
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    /// Divides every coordinate by `k`; `None` unless `k` divides all of them.
    pub fn div_exact(&self, k: i64) -> Option<Self> {
        if k == 0 || self.0.iter().any(|c| c % k != 0) {
            return None;
        }
        Some(DivisorClass(self.0.iter().map(|c| c / k).collect()))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i64, i64) -> Option<i64>) -> Self {
        assert_eq!(self.len(), other.len(), "divisor classes of different rank");
        DivisorClass(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| f(a, b).expect("coordinate overflow"))
                .collect(),
        )
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Index<usize> for DivisorClass {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;

    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        self.zip_with(rhs, i64::checked_add)
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;

    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self.zip_with(rhs, i64::checked_sub)
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;

    fn add(self, rhs: DivisorClass) -> DivisorClass {
        &self + &rhs
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;

    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        &self - &rhs
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;

    fn neg(self) -> DivisorClass {
        DivisorClass(
            self.0
                .iter()
                .map(|c| c.checked_neg().expect("coordinate overflow"))
                .collect(),
        )
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;

    fn neg(self) -> DivisorClass {
        -&self
    }
}

impl Mul<&DivisorClass> for i64 {
    type Output = DivisorClass;

    fn mul(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass(
            rhs.0
                .iter()
                .map(|c| c.checked_mul(self).expect("coordinate overflow"))
                .collect(),
        )
    }
}

impl Mul<DivisorClass> for i64 {
    type Output = DivisorClass;

    fn mul(self, rhs: DivisorClass) -> DivisorClass {
        self * &rhs
    }
}

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Inertia of a real symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zero == 0 {
            write!(f, "({}, {})", self.positive, self.negative)
        } else {
            write!(
                f,
                "({}, {}, {} null)",
                self.positive, self.negative, self.zero
            )
        }
    }
}

/// Coefficients `[c_0, …, c_{n−1}, 1]` of `det(λI − A)` by Faddeev–LeVerrier.
fn characteristic_polynomial(a: &[Vec<i64>]) -> Option<Vec<i128>> {
    let n = a.len();
    let a: Vec<Vec<i128>> = a
        .iter()
        .map(|row| row.iter().map(|&v| v as i128).collect())
        .collect();
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    // m holds M_k; M_1 = I.
    let mut m: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect();
    for k in 1..=n {
        let am = mat_mul(&a, &m)?;
        let mut trace = 0i128;
        for (i, row) in am.iter().enumerate() {
            trace = trace.checked_add(row[i])?;
        }
        let c = trace.checked_neg()? / k as i128;
        coeffs[n - k] = c;
        m = am;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = row[i].checked_add(c)?;
        }
    }
    Some(coeffs)
}

fn mat_mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Option<Vec<Vec<i128>>> {
    let n = a.len();
    let mut out = vec![vec![0i128; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut s = 0i128;
            for (k, bk) in b.iter().enumerate() {
                s = s.checked_add(a[i][k].checked_mul(bk[j])?)?;
            }
            out[i][j] = s;
        }
    }
    Some(out)
}

fn sign_changes(coeffs: impl Iterator<Item = i128>) -> usize {
    let mut last = 0i128;
    let mut changes = 0;
    for c in coeffs.filter(|&c| c != 0) {
        if last != 0 && (c > 0) != (last > 0) {
            changes += 1;
        }
        last = c;
    }
    changes
}

/// Exact inertia of a symmetric integer matrix.
///
/// The characteristic polynomial of a symmetric matrix is real-rooted, so
/// Descartes' rule of signs counts its positive and negative roots exactly.
/// Returns `None` on `i128` overflow.
pub fn signature(gram: &[Vec<i64>]) -> Option<Signature> {
    let coeffs = characteristic_polynomial(gram)?;
    let zero = coeffs.iter().take_while(|&&c| c == 0).count();
    let positive = sign_changes(coeffs.iter().copied());
    let negative = sign_changes(
        coeffs
            .iter()
            .enumerate()
            .map(|(j, &c)| if j % 2 == 1 { -c } else { c }),
    );
    Some(Signature {
        positive,
        negative,
        zero,
    })
}

/// Fraction-free (Bareiss) determinant.
fn determinant(mut m: Vec<Vec<i128>>) -> Option<i128> {
    let n = m.len();
    if n == 0 {
        return Some(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return Some(0);
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j]
                    .checked_mul(m[k][k])?
                    .checked_sub(m[i][k].checked_mul(m[k][j])?)?;
                m[i][j] = t / prev;
            }
        }
        prev = m[k][k];
    }
    m[n - 1][n - 1].checked_mul(sign)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    EmptyGram,
    NotSquare,
    NotSymmetric {
        row: usize,
        col: usize,
    },
    OddDiagonal {
        index: usize,
        value: i64,
    },
    Signature {
        positive: usize,
        negative: usize,
        zero: usize,
    },
    PolarizationLength {
        expected: usize,
        found: usize,
    },
    PolarizationDegree {
        square: i64,
    },
    /// A (−2)-class orthogonal to H, so H is not ample.
    RootOrthogonalToPolarization {
        class: DivisorClass,
    },
    /// An isotropic class of degree ≤ 2; such a class is effective and
    /// would cut a g¹₂ on a plane quartic.
    LowDegreeIsotropic {
        class: DivisorClass,
        degree: i64,
    },
    ArithmeticOverflow,
}

impl Violation {
    /// Hard violations make the remaining checks meaningless.
    pub fn is_hard(&self) -> bool {
        matches!(
            self,
            Violation::EmptyGram
                | Violation::NotSquare
                | Violation::NotSymmetric { .. }
                | Violation::Signature { .. }
                | Violation::PolarizationLength { .. }
                | Violation::PolarizationDegree { .. }
                | Violation::ArithmeticOverflow
        )
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyGram => write!(f, "gram matrix is empty"),
            Violation::NotSquare => write!(f, "gram matrix is not square"),
            Violation::NotSymmetric { row, col } => {
                write!(f, "gram matrix is not symmetric at ({row}, {col})")
            }
            Violation::OddDiagonal { index, value } => {
                write!(
                    f,
                    "diagonal entry {index} is odd ({value}); lattice is not even"
                )
            }
            Violation::Signature {
                positive,
                negative,
                zero,
            } => write!(
                f,
                "signature is {} but must be (1, {})",
                Signature {
                    positive: *positive,
                    negative: *negative,
                    zero: *zero
                },
                positive + negative + zero - 1
            ),
            Violation::PolarizationLength { expected, found } => write!(
                f,
                "polarization has {found} coordinates, lattice rank is {expected}"
            ),
            Violation::PolarizationDegree { square } => {
                write!(f, "H^2 = {square}, expected 4")
            }
            Violation::RootOrthogonalToPolarization { class } => {
                write!(f, "(-2)-class {class} is orthogonal to H; H is not ample")
            }
            Violation::LowDegreeIsotropic { class, degree } => write!(
                f,
                "effective isotropic class {class} has degree {degree} <= 2"
            ),
            Violation::ArithmeticOverflow => write!(f, "integer overflow during validation"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub search_bound_degree: u32,
    /// Whether the bounded checks were exhaustive. The ampleness and
    /// low-degree isotropic checks enumerate finite ellipsoids, so this is
    /// true whenever they ran at all.
    pub exact: bool,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            write!(f, "ok")?;
        } else {
            for (i, v) in self.violations.iter().enumerate() {
                if i > 0 {
                    writeln!(f)?;
                }
                write!(f, "violation: {v}")?;
            }
        }
        if !self.exact {
            write!(f, "\n(bounded checks skipped after a hard violation)")?;
        }
        Ok(())
    }
}

/// Runs every admissibility check on raw lattice data and reports all
/// violations found. Structural failures (shape, symmetry, signature, H²)
/// stop the run before the enumeration-based checks.
pub fn validate_admissible(
    gram: &[Vec<i64>],
    polarization: &[i64],
    search_bound_degree: u32,
) -> ValidationReport {
    let mut violations = Vec::new();
    let report = |violations, exact| ValidationReport {
        violations,
        search_bound_degree,
        exact,
    };

    let n = gram.len();
    if n == 0 {
        violations.push(Violation::EmptyGram);
        return report(violations, false);
    }
    if gram.iter().any(|row| row.len() != n) {
        violations.push(Violation::NotSquare);
        return report(violations, false);
    }
    let mut asymmetric = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    if let Some((row, col)) = asymmetric.find(|&(i, j)| gram[i][j] != gram[j][i]) {
        violations.push(Violation::NotSymmetric { row, col });
        return report(violations, false);
    }
    for (i, row) in gram.iter().enumerate() {
        if row[i] % 2 != 0 {
            violations.push(Violation::OddDiagonal {
                index: i,
                value: row[i],
            });
        }
    }
    match signature(gram) {
        Some(sig) if sig.positive == 1 && sig.zero == 0 => {}
        Some(sig) => violations.push(Violation::Signature {
            positive: sig.positive,
            negative: sig.negative,
            zero: sig.zero,
        }),
        None => violations.push(Violation::ArithmeticOverflow),
    }
    if polarization.len() != n {
        violations.push(Violation::PolarizationLength {
            expected: n,
            found: polarization.len(),
        });
    } else {
        let h = DivisorClass::new(polarization.to_vec());
        match try_pair(gram, &h, &h) {
            Some(4) => {}
            Some(square) => violations.push(Violation::PolarizationDegree { square }),
            None => violations.push(Violation::ArithmeticOverflow),
        }
    }
    if violations.iter().any(Violation::is_hard) {
        return report(violations, false);
    }

    let Some(geometry) = EllipsoidBox::new(gram, polarization) else {
        violations.push(Violation::ArithmeticOverflow);
        return report(violations, false);
    };
    let probe = Probe {
        gram,
        geometry: &geometry,
    };
    // Roots orthogonal to H live in a negative definite lattice: N(x) = 4.
    for class in probe.classes_of_degree(0, 4) {
        if try_pair(gram, &class, &class) == Some(-2) && class.0 > DivisorClass::zero(n).0 {
            violations.push(Violation::RootOrthogonalToPolarization { class });
        }
    }
    for degree in 1..=2 {
        for class in probe.classes_of_degree(degree, i128::from(degree * degree)) {
            if try_pair(gram, &class, &class) == Some(0) {
                violations.push(Violation::LowDegreeIsotropic { class, degree });
            }
        }
    }
    report(violations, true)
}

fn try_pair(gram: &[Vec<i64>], x: &DivisorClass, y: &DivisorClass) -> Option<i64> {
    let mut acc = 0i128;
    for (i, row) in gram.iter().enumerate() {
        if x[i] == 0 {
            continue;
        }
        let mut inner = 0i128;
        for (j, &g) in row.iter().enumerate() {
            inner = inner.checked_add(i128::from(g).checked_mul(i128::from(y[j]))?)?;
        }
        acc = acc.checked_add(inner.checked_mul(i128::from(x[i]))?)?;
    }
    i64::try_from(acc).ok()
}

/// Coordinate box of the ellipsoid `N(x) ≤ c` together with the linear form
/// `x ↦ x·H`, used to solve for one coordinate.
#[derive(Clone, Debug)]
struct EllipsoidBox {
    /// `G·h`, so that `x·H = Σ dual[i]·x[i]`.
    dual: Vec<i64>,
    /// Diagonal cofactors of the Gram matrix of `N`.
    cofactors: Vec<i128>,
    determinant: i128,
    /// Coordinate solved from the degree constraint.
    pivot: usize,
}

impl EllipsoidBox {
    fn new(gram: &[Vec<i64>], polarization: &[i64]) -> Option<Self> {
        let n = gram.len();
        let mut dual = Vec::with_capacity(n);
        for row in gram {
            let mut s = 0i64;
            for (g, h) in row.iter().zip(polarization) {
                s = s.checked_add(g.checked_mul(*h)?)?;
            }
            dual.push(s);
        }
        // N = dual·dualᵀ − 2G
        let form: Vec<Vec<i128>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| i128::from(dual[i]) * i128::from(dual[j]) - 2 * i128::from(gram[i][j]))
                    .collect()
            })
            .collect();
        let determinant = determinant(form.clone())?;
        if determinant <= 0 {
            return None;
        }
        let mut cofactors = Vec::with_capacity(n);
        for i in 0..n {
            let minor: Vec<Vec<i128>> = (0..n)
                .filter(|&r| r != i)
                .map(|r| (0..n).filter(|&c| c != i).map(|c| form[r][c]).collect())
                .collect();
            cofactors.push(self::determinant(minor)?);
        }
        let pivot = (0..n).max_by_key(|&i| (dual[i].unsigned_abs(), std::cmp::Reverse(i)))?;
        if dual[pivot] == 0 {
            return None;
        }
        Some(EllipsoidBox {
            dual,
            cofactors,
            determinant,
            pivot,
        })
    }

    fn bounds(&self, max_form: i128) -> Option<Vec<i64>> {
        self.cofactors
            .iter()
            .map(|&cof| {
                let sq = max_form.checked_mul(cof)? / self.determinant;
                i64::try_from(sq.isqrt()).ok()
            })
            .collect()
    }
}

struct Probe<'a> {
    gram: &'a [Vec<i64>],
    geometry: &'a EllipsoidBox,
}

impl Probe<'_> {
    fn classes_of_degree(&self, degree: i64, max_form: i128) -> Vec<DivisorClass> {
        let mut out = Vec::new();
        if max_form < 0 {
            return out;
        }
        let geo = self.geometry;
        let Some(bounds) = geo.bounds(max_form) else {
            panic!("enumeration box overflow at degree {degree}");
        };
        let n = self.gram.len();
        let free: Vec<usize> = (0..n).filter(|&i| i != geo.pivot).collect();
        let mut coords = vec![0i64; n];
        self.walk(&free, 0, degree, max_form, &bounds, &mut coords, &mut out);
        out.sort();
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn walk(
        &self,
        free: &[usize],
        depth: usize,
        degree: i64,
        max_form: i128,
        bounds: &[i64],
        coords: &mut Vec<i64>,
        out: &mut Vec<DivisorClass>,
    ) {
        let geo = self.geometry;
        if depth == free.len() {
            let partial: i64 = free.iter().map(|&i| geo.dual[i] * coords[i]).sum();
            let rest = degree - partial;
            let p = geo.pivot;
            if rest % geo.dual[p] != 0 {
                return;
            }
            let xp = rest / geo.dual[p];
            if xp.abs() > bounds[p] {
                return;
            }
            coords[p] = xp;
            let class = DivisorClass(coords.clone());
            let square = try_pair(self.gram, &class, &class).expect("lattice arithmetic overflow");
            let form = i128::from(degree) * i128::from(degree) - 2 * i128::from(square);
            if form <= max_form {
                out.push(class);
            }
            coords[p] = 0;
            return;
        }
        let i = free[depth];
        for v in -bounds[i]..=bounds[i] {
            coords[i] = v;
            self.walk(free, depth + 1, degree, max_form, bounds, coords, out);
        }
        coords[i] = 0;
    }
}

/// A validated, immutable polarized lattice of quartic type.
#[derive(Clone, Debug)]
pub struct PolarizedK3Lattice {
    name: String,
    gram: Vec<Vec<i64>>,
    polarization: DivisorClass,
    search_bound_degree: u32,
    geometry: EllipsoidBox,
}

impl PolarizedK3Lattice {
    /// Builds the lattice, rejecting it with the full report unless every
    /// admissibility check passes.
    pub fn new(
        name: impl Into<String>,
        gram: Vec<Vec<i64>>,
        polarization: Vec<i64>,
        search_bound_degree: Option<u32>,
    ) -> Result<Self> {
        let bound = search_bound_degree.unwrap_or(DEFAULT_SEARCH_BOUND_DEGREE);
        let report = validate_admissible(&gram, &polarization, bound);
        if !report.is_ok() {
            return Err(Error::Inadmissible(report));
        }
        let geometry = EllipsoidBox::new(&gram, &polarization).ok_or(Error::Overflow)?;
        Ok(PolarizedK3Lattice {
            name: name.into(),
            gram,
            polarization: DivisorClass(polarization),
            search_bound_degree: bound,
            geometry,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn polarization(&self) -> &DivisorClass {
        &self.polarization
    }

    pub fn search_bound_degree(&self) -> u32 {
        self.search_bound_degree
    }

    /// Re-runs the admissibility checks; always ok for a constructed lattice.
    pub fn validate(&self) -> ValidationReport {
        validate_admissible(
            &self.gram,
            self.polarization.coords(),
            self.search_bound_degree,
        )
    }

    pub fn zero(&self) -> DivisorClass {
        DivisorClass::zero(self.rank())
    }

    /// Checks the coordinate count and wraps it as a class of this lattice.
    pub fn class(&self, coords: Vec<i64>) -> Result<DivisorClass> {
        if coords.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: coords.len(),
            });
        }
        Ok(DivisorClass(coords))
    }

    /// `l·H` as a class.
    pub fn twist(&self, l: i64) -> DivisorClass {
        l * &self.polarization
    }

    /// The intersection pairing `xᵀ·G·y`.
    pub fn intersect(&self, x: &DivisorClass, y: &DivisorClass) -> Result<i64> {
        for c in [x, y] {
            if c.len() != self.rank() {
                return Err(Error::DimensionMismatch {
                    expected: self.rank(),
                    found: c.len(),
                });
            }
        }
        try_pair(&self.gram, x, y).ok_or(Error::Overflow)
    }

    /// Pairing for classes already known to belong to this lattice.
    ///
    /// Panics on a rank mismatch or on overflow.
    pub fn pair(&self, x: &DivisorClass, y: &DivisorClass) -> i64 {
        assert_eq!(x.len(), self.rank(), "class rank mismatch");
        assert_eq!(y.len(), self.rank(), "class rank mismatch");
        try_pair(&self.gram, x, y).expect("lattice arithmetic overflow")
    }

    pub fn square(&self, x: &DivisorClass) -> i64 {
        self.pair(x, x)
    }

    /// `x·H`.
    pub fn degree(&self, x: &DivisorClass) -> i64 {
        assert_eq!(x.len(), self.rank(), "class rank mismatch");
        x.0.iter()
            .zip(&self.geometry.dual)
            .try_fold(0i64, |acc, (a, b)| acc.checked_add(a.checked_mul(*b)?))
            .expect("lattice arithmetic overflow")
    }

    /// Riemann–Roch on a K3 surface: `χ(O(D)) = 2 + D²/2`.
    pub fn euler_char(&self, x: &DivisorClass) -> i64 {
        2 + self.square(x) / 2
    }

    /// All classes `x` with `x·H = degree` and `(x·H)² − 2x² ≤ max_form`,
    /// sorted lexicographically. Complete: the box is derived from the
    /// positive definite form, not guessed.
    pub fn classes_of_degree(&self, degree: i64, max_form: i128) -> Vec<DivisorClass> {
        Probe {
            gram: &self.gram,
            geometry: &self.geometry,
        }
        .classes_of_degree(degree, max_form)
    }

    /// Every class of the given degree that could be effective
    /// (`x² ≥ −2·degree²`).
    pub fn effective_candidates(&self, degree: i64) -> Vec<DivisorClass> {
        let d = i128::from(degree);
        self.classes_of_degree(degree, 5 * d * d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line() -> PolarizedK3Lattice {
        PolarizedK3Lattice::new("line", vec![vec![4, 1], vec![1, -2]], vec![1, 0], None).unwrap()
    }

    #[test]
    fn pairing_examples() {
        let lat = line();
        let h = lat.polarization().clone();
        let l = DivisorClass::new(vec![0, 1]);
        assert_eq!(lat.intersect(&h, &h).unwrap(), 4);
        assert_eq!(lat.intersect(&h, &l).unwrap(), 1);
        let e = &h - &l;
        assert_eq!(lat.intersect(&e, &e).unwrap(), 0);
    }

    #[test]
    fn intersect_rejects_wrong_rank() {
        let lat = line();
        let bad = DivisorClass::new(vec![1, 0, 0]);
        assert!(matches!(
            lat.intersect(&bad, lat.polarization()),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        ));
        assert!(lat.class(vec![1]).is_err());
    }

    #[test]
    fn euler_characteristic_examples() {
        let lat = line();
        assert_eq!(lat.euler_char(&lat.zero()), 2);
        assert_eq!(lat.euler_char(&lat.twist(3)), 20);
        let gen6 = PolarizedK3Lattice::new("gen6", vec![vec![4, 6], vec![6, 4]], vec![1, 0], None)
            .unwrap();
        let d6 = DivisorClass::new(vec![0, 1]);
        let diff = gen6.polarization() - &d6;
        assert_eq!(gen6.square(&diff), -4);
        assert_eq!(gen6.euler_char(&diff), 0);
    }

    #[test]
    fn signature_of_small_forms() {
        let sig = signature(&[vec![4, 1], vec![1, -2]]).unwrap();
        assert_eq!((sig.positive, sig.negative, sig.zero), (1, 1, 0));
        let sig = signature(&[vec![4, 0], vec![0, 2]]).unwrap();
        assert_eq!((sig.positive, sig.negative, sig.zero), (2, 0, 0));
        let sig = signature(&[vec![0, 0], vec![0, -2]]).unwrap();
        assert_eq!((sig.positive, sig.negative, sig.zero), (0, 1, 1));
        // U ⊕ A1(-1): hyperbolic plane plus a negative root
        let sig = signature(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, -2]]).unwrap();
        assert_eq!((sig.positive, sig.negative, sig.zero), (1, 2, 0));
    }

    #[test]
    fn validate_accepts_line() {
        let report = validate_admissible(&[vec![4, 1], vec![1, -2]], &[1, 0], 32);
        assert!(report.is_ok(), "{report}");
        assert!(report.exact);
    }

    #[test]
    fn validate_rejects_wrong_degree() {
        let report = validate_admissible(&[vec![2]], &[1], 32);
        assert_eq!(
            report.violations,
            vec![Violation::PolarizationDegree { square: 2 }]
        );
    }

    #[test]
    fn validate_rejects_definite_form() {
        let report = validate_admissible(&[vec![4, 0], vec![0, 2]], &[1, 0], 32);
        assert!(report.violations.contains(&Violation::Signature {
            positive: 2,
            negative: 0,
            zero: 0
        }));
    }

    #[test]
    fn validate_rejects_asymmetric_and_odd() {
        let report = validate_admissible(&[vec![4, 1], vec![0, -2]], &[1, 0], 32);
        assert_eq!(
            report.violations,
            vec![Violation::NotSymmetric { row: 0, col: 1 }]
        );
        let report = validate_admissible(&[vec![4, 1], vec![1, -3]], &[1, 0], 32);
        assert!(matches!(
            report.violations[0],
            Violation::OddDiagonal { index: 1, .. }
        ));
    }

    #[test]
    fn validate_rejects_orthogonal_root() {
        // H ⊕ A1(-1): the root (0,1) has degree 0
        let report = validate_admissible(&[vec![4, 0], vec![0, -2]], &[1, 0], 32);
        assert_eq!(
            report.violations,
            vec![Violation::RootOrthogonalToPolarization {
                class: DivisorClass::new(vec![0, 1])
            }]
        );
    }

    #[test]
    fn validate_rejects_degree_two_pencil() {
        // E = (0,1) isotropic with E·H = 2
        let report = validate_admissible(&[vec![4, 2], vec![2, 0]], &[1, 0], 32);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::LowDegreeIsotropic { degree: 2, .. })));
    }

    #[test]
    fn degree_slices_of_line() {
        let lat = line();
        let roots: Vec<_> = (1..=4)
            .flat_map(|d| lat.classes_of_degree(d, i128::from(d * d + 4)))
            .filter(|c| lat.square(c) == -2)
            .collect();
        assert_eq!(roots, vec![DivisorClass::new(vec![0, 1])]);
    }

    #[test]
    fn class_arithmetic() {
        let a = DivisorClass::new(vec![2, -4]);
        assert_eq!(a.content(), 2);
        assert_eq!(a.div_exact(2), Some(DivisorClass::new(vec![1, -2])));
        assert_eq!(a.div_exact(3), None);
        assert_eq!(-&a, DivisorClass::new(vec![-2, 4]));
        assert_eq!(3 * &a, DivisorClass::new(vec![6, -12]));
        assert_eq!(a.to_string(), "(2, -4)");
    }
}
