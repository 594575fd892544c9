//! Exact multivector arithmetic for the 3D geometric algebras G(p,q).
//!
//! Blades are stored as 3-bit masks (bit `i` set iff `e_{i+1}` is a factor),
//! so the internal coefficient index of a blade is its mask. Two external
//! orders exist on top of that:
//!
//! * [`BASIS_ORDER`]: `1, e1, e2, e3, e12, e23, e13, e123`, used for text
//!   output and Cayley tables;
//! * [`COEFF_ORDER`]: the `x0..x7` order `1, e12, e23, e13, e1, e2, e3, e123`
//!   that groups the even part first, used by serialization and by the
//!   diagonal norm formula.
//!
//! The bivector `e13` is always the ascending product `e1 e3`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Rational;

/// Metric signs `(λ1, λ2, λ3)` of a diagonal quadratic form on R³.
///
/// The blade product sign table is computed once at construction.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    lambdas: [i8; 3],
    signs: [[i8; 8]; 8],
}

/// `(p, q)` pairs in the row order used throughout the crate.
pub const CANONICAL_PQ: [(u32, u32); 4] = [(3, 0), (2, 1), (1, 2), (0, 3)];

impl Signature {
    pub fn new(lambdas: [i8; 3]) -> Result<Self> {
        if lambdas.iter().any(|&l| l != 1 && l != -1) {
            return Err(Error::InvalidSignature(lambdas));
        }
        let mut signs = [[0i8; 8]; 8];
        for (a, row) in signs.iter_mut().enumerate() {
            for (b, s) in row.iter_mut().enumerate() {
                *s = reorder_and_contract(Blade(a as u8), Blade(b as u8), &lambdas).0;
            }
        }
        Ok(Signature { lambdas, signs })
    }

    /// The metric triple used for `G(p,q)`:
    /// `G(3,0) = (1,1,1)`, `G(2,1) = (1,1,-1)`, `G(1,2) = (-1,-1,1)`,
    /// `G(0,3) = (-1,-1,-1)`.
    ///
    /// Every choice has `λ1 λ2 = +1`, so `e12` squares to `-1` in all four.
    pub fn from_pq(p: u32, q: u32) -> Result<Self> {
        let lambdas = match (p, q) {
            (3, 0) => [1, 1, 1],
            (2, 1) => [1, 1, -1],
            (1, 2) => [-1, -1, 1],
            (0, 3) => [-1, -1, -1],
            _ => return Err(Error::InvalidPq { p, q }),
        };
        Signature::new(lambdas)
    }

    /// The four signatures of [`CANONICAL_PQ`], in that order.
    pub fn canonical() -> [Signature; 4] {
        CANONICAL_PQ.map(|(p, q)| Signature::from_pq(p, q).expect("canonical pq"))
    }

    /// All eight metric triples.
    pub fn all() -> Vec<Signature> {
        (0..8u8)
            .map(|m| {
                let l = |i: u8| if m >> i & 1 == 1 { -1 } else { 1 };
                Signature::new([l(0), l(1), l(2)]).expect("valid triple")
            })
            .collect()
    }

    pub fn lambdas(&self) -> [i8; 3] {
        self.lambdas
    }

    pub fn lambda(&self, i: usize) -> i8 {
        self.lambdas[i]
    }

    pub fn p(&self) -> u32 {
        self.lambdas.iter().filter(|&&l| l == 1).count() as u32
    }

    pub fn q(&self) -> u32 {
        3 - self.p()
    }

    pub fn is_canonical(&self) -> bool {
        Signature::from_pq(self.p(), self.q()).is_ok_and(|s| s == *self)
    }

    /// Sign of the product of two blades; the resulting blade is `a ^ b`.
    #[inline]
    pub fn product_sign(&self, a: Blade, b: Blade) -> i8 {
        self.signs[a.index()][b.index()]
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.p(), self.q())?;
        if !self.is_canonical() {
            let [a, b, c] = self.lambdas;
            write!(f, "[{a},{b},{c}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Signature({:?})", self.lambdas)
    }
}

/// A basis blade of G(p,q) encoded as a generator bitmask in `0..8`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Blade(u8);

impl Blade {
    pub const SCALAR: Blade = Blade(0b000);
    pub const E1: Blade = Blade(0b001);
    pub const E2: Blade = Blade(0b010);
    pub const E3: Blade = Blade(0b100);
    pub const E12: Blade = Blade(0b011);
    pub const E13: Blade = Blade(0b101);
    pub const E23: Blade = Blade(0b110);
    pub const E123: Blade = Blade(0b111);

    pub fn from_mask(mask: u8) -> Option<Blade> {
        (mask < 8).then_some(Blade(mask))
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn grade(self) -> u8 {
        self.0.count_ones() as u8
    }

    pub fn is_even(self) -> bool {
        self.grade().is_multiple_of(2)
    }

    pub fn label(self) -> &'static str {
        match self.0 {
            0 => "1",
            1 => "e1",
            2 => "e2",
            3 => "e12",
            4 => "e3",
            5 => "e13",
            6 => "e23",
            _ => "e123",
        }
    }

    pub fn from_label(label: &str) -> Option<Blade> {
        BASIS_ORDER.iter().copied().find(|b| b.label() == label)
    }

    /// Generator indices (1-based) in ascending order.
    pub fn generators(self) -> Vec<usize> {
        (0..3).filter(|i| self.0 >> i & 1 == 1).map(|i| i + 1).collect()
    }

    /// Position in [`BASIS_ORDER`].
    pub fn basis_position(self) -> usize {
        BASIS_ORDER.iter().position(|&b| b == self).expect("all blades listed")
    }

    /// Position in [`COEFF_ORDER`] (the `x_i` index).
    pub fn coeff_position(self) -> usize {
        COEFF_ORDER.iter().position(|&b| b == self).expect("all blades listed")
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub const BASIS_ORDER: [Blade; 8] = [
    Blade::SCALAR,
    Blade::E1,
    Blade::E2,
    Blade::E3,
    Blade::E12,
    Blade::E23,
    Blade::E13,
    Blade::E123,
];

pub const COEFF_ORDER: [Blade; 8] = [
    Blade::SCALAR,
    Blade::E12,
    Blade::E23,
    Blade::E13,
    Blade::E1,
    Blade::E2,
    Blade::E3,
    Blade::E123,
];

/// Concatenates the generator lists of `a` and `b`, sorts them with adjacent
/// transpositions (each flips the sign) and contracts each repeated pair
/// `e_i e_i` to `λ_i`.
fn reorder_and_contract(a: Blade, b: Blade, lambdas: &[i8; 3]) -> (i8, Blade) {
    // pairs (i in a, j in b) with i > j: each must be swapped past the other
    let mut swaps = 0;
    let mut rest = a.0 >> 1;
    while rest != 0 {
        swaps += (rest & b.0).count_ones();
        rest >>= 1;
    }
    let mut sign = if swaps % 2 == 0 { 1 } else { -1 };
    let repeated = a.0 & b.0;
    for (i, &l) in lambdas.iter().enumerate() {
        if repeated >> i & 1 == 1 {
            sign *= l;
        }
    }
    (sign, Blade(a.0 ^ b.0))
}

/// Product of two basis blades: `a b = sign · out`.
pub fn blade_product(a: Blade, b: Blade, sig: &Signature) -> (i8, Blade) {
    (sig.product_sign(a, b), Blade(a.0 ^ b.0))
}

/// The four grade involutions, each a per-grade sign pattern.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Involution {
    Reversion,
    Inversion,
    CliffordConjugation,
    FullGradeInversion,
}

impl Involution {
    pub const ALL: [Involution; 4] = [
        Involution::Reversion,
        Involution::Inversion,
        Involution::CliffordConjugation,
        Involution::FullGradeInversion,
    ];

    /// Sign applied to grades 0, 1, 2, 3.
    pub fn grade_signs(self) -> [i8; 4] {
        match self {
            Involution::Reversion => [1, 1, -1, -1],
            Involution::Inversion => [1, -1, 1, -1],
            Involution::CliffordConjugation => [1, -1, -1, 1],
            Involution::FullGradeInversion => [1, -1, -1, -1],
        }
    }

    pub fn sign_on(self, blade: Blade) -> i8 {
        self.grade_signs()[blade.grade() as usize]
    }

    pub fn apply(self, x: &Multivector) -> Multivector {
        let coeffs = std::array::from_fn(|i| x.coeffs[i].signed(self.sign_on(Blade(i as u8))));
        Multivector { sig: x.sig, coeffs }
    }

    pub fn name(self) -> &'static str {
        match self {
            Involution::Reversion => "reversion",
            Involution::Inversion => "inversion",
            Involution::CliffordConjugation => "clifford-conjugation",
            Involution::FullGradeInversion => "full-grade-inversion",
        }
    }
}

/// An element of G(p,q) with exact coefficients indexed by blade mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multivector {
    sig: Signature,
    coeffs: [Rational; 8],
}

/// Even (grades 0, 2) and odd (grades 1, 3) parts of a multivector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedParts {
    pub even: Multivector,
    pub odd: Multivector,
}

impl GradedParts {
    pub fn recombine(&self) -> Multivector {
        &self.even + &self.odd
    }
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector { sig, coeffs: Default::default() }
    }

    pub fn scalar(sig: Signature, value: Rational) -> Self {
        let mut m = Self::zero(sig);
        m.coeffs[0] = value;
        m
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, Rational::one())
    }

    pub fn blade(sig: Signature, blade: Blade) -> Self {
        Self::term(sig, blade, Rational::one())
    }

    pub fn term(sig: Signature, blade: Blade, coeff: Rational) -> Self {
        let mut m = Self::zero(sig);
        m.coeffs[blade.index()] = coeff;
        m
    }

    /// Coefficients indexed by blade mask.
    pub fn from_mask_coeffs(sig: Signature, coeffs: [Rational; 8]) -> Self {
        Multivector { sig, coeffs }
    }

    /// Coefficients `x0..x7` in [`COEFF_ORDER`].
    pub fn from_even_first(sig: Signature, xs: [Rational; 8]) -> Self {
        let mut m = Self::zero(sig);
        for (x, b) in xs.into_iter().zip(COEFF_ORDER) {
            m.coeffs[b.index()] = x;
        }
        m
    }

    pub fn even_first_coeffs(&self) -> [Rational; 8] {
        COEFF_ORDER.map(|b| self.coeffs[b.index()].clone())
    }

    pub fn mask_coeffs(&self) -> &[Rational; 8] {
        &self.coeffs
    }

    pub fn coeff(&self, blade: Blade) -> &Rational {
        &self.coeffs[blade.index()]
    }

    pub fn set_coeff(&mut self, blade: Blade, value: Rational) {
        self.coeffs[blade.index()] = value;
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Blades carrying a nonzero coefficient, in [`BASIS_ORDER`].
    pub fn support(&self) -> Vec<Blade> {
        BASIS_ORDER.iter().copied().filter(|b| !self.coeffs[b.index()].is_zero()).collect()
    }

    /// True when every nonzero coefficient sits on a blade whose grade is in `grades`.
    pub fn has_grades_only(&self, grades: &[u8]) -> bool {
        self.support().iter().all(|b| grades.contains(&b.grade()))
    }

    pub fn scalar_part(&self) -> Rational {
        self.coeffs[0].clone()
    }

    pub fn scale(&self, k: &Rational) -> Multivector {
        Multivector { sig: self.sig, coeffs: std::array::from_fn(|i| &self.coeffs[i] * k) }
    }

    fn check_same(&self, other: &Multivector) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch {
                left: self.sig.to_string(),
                right: other.sig.to_string(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Multivector) -> Result<Multivector> {
        self.check_same(other)?;
        Ok(Multivector { sig: self.sig, coeffs: std::array::from_fn(|i| &self.coeffs[i] + &other.coeffs[i]) })
    }

    pub fn try_sub(&self, other: &Multivector) -> Result<Multivector> {
        self.check_same(other)?;
        Ok(Multivector { sig: self.sig, coeffs: std::array::from_fn(|i| &self.coeffs[i] - &other.coeffs[i]) })
    }

    /// Geometric product; fails if the signatures differ.
    pub fn gp(&self, other: &Multivector) -> Result<Multivector> {
        self.check_same(other)?;
        let mut out: [Rational; 8] = Default::default();
        for (a, xa) in self.coeffs.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in other.coeffs.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let term = xa * yb;
                if self.sig.signs[a][b] > 0 {
                    out[a ^ b] += term;
                } else {
                    out[a ^ b] -= term;
                }
            }
        }
        Ok(Multivector { sig: self.sig, coeffs: out })
    }

    pub fn grade_select(&self, k: u8) -> Result<Multivector> {
        if k > 3 {
            return Err(Error::InvalidGrade(k));
        }
        Ok(self.filter(|b| b.grade() == k))
    }

    fn filter(&self, keep: impl Fn(Blade) -> bool) -> Multivector {
        let coeffs = std::array::from_fn(|i| {
            if keep(Blade(i as u8)) {
                self.coeffs[i].clone()
            } else {
                Rational::zero()
            }
        });
        Multivector { sig: self.sig, coeffs }
    }

    pub fn even_part(&self) -> Multivector {
        self.filter(Blade::is_even)
    }

    pub fn odd_part(&self) -> Multivector {
        self.filter(|b| !b.is_even())
    }

    pub fn parity_split(&self) -> GradedParts {
        GradedParts { even: self.even_part(), odd: self.odd_part() }
    }

    /// Symmetric part `(xy + yx) / 2`.
    pub fn inner(&self, other: &Multivector) -> Result<Multivector> {
        let sum = self.gp(other)?.try_add(&other.gp(self)?)?;
        Ok(sum.scale(&Rational::new(1, 2)))
    }

    /// Antisymmetric part `(xy - yx) / 2`.
    pub fn wedge(&self, other: &Multivector) -> Result<Multivector> {
        let diff = self.gp(other)?.try_sub(&other.gp(self)?)?;
        Ok(diff.scale(&Rational::new(1, 2)))
    }

    pub fn reversion(&self) -> Multivector {
        Involution::Reversion.apply(self)
    }

    pub fn inversion(&self) -> Multivector {
        Involution::Inversion.apply(self)
    }

    pub fn clifford_conjugation(&self) -> Multivector {
        Involution::CliffordConjugation.apply(self)
    }

    pub fn full_grade_inversion(&self) -> Multivector {
        Involution::FullGradeInversion.apply(self)
    }

    /// Parses `a0 + a1*e1 + ... + a7*e123`. Terms may appear in any order and
    /// repeat (they accumulate); a bare label has coefficient 1 and a bare
    /// number is a scalar.
    pub fn parse(sig: Signature, text: &str) -> Result<Multivector> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty multivector".into()));
        }
        let mut out = Multivector::zero(sig);
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, c) in compact.char_indices() {
            if (c == '+' || c == '-') && i > 0 && !compact[..i].ends_with(['*', '/', '+', '-']) {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        for raw in terms {
            let (negate, body) = match raw.as_bytes().first() {
                Some(b'+') => (false, &raw[1..]),
                Some(b'-') => (true, &raw[1..]),
                _ => (false, raw),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in `{text}`")));
            }
            let (coeff, label) = match body.rsplit_once('*') {
                Some((c, l)) => (c.parse::<Rational>()?, l),
                None if body.starts_with('e') => (Rational::one(), body),
                None => (body.parse::<Rational>()?, "1"),
            };
            let blade = Blade::from_label(label)
                .ok_or_else(|| Error::Parse(format!("unknown blade label `{label}`")))?;
            let coeff = if negate { -coeff } else { coeff };
            out.coeffs[blade.index()] += coeff;
        }
        Ok(out)
    }
}

/// Geometric product of two multivectors of the same signature.
pub fn geometric_product(x: &Multivector, y: &Multivector) -> Result<Multivector> {
    x.gp(y)
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for b in BASIS_ORDER {
            let c = &self.coeffs[b.index()];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if b == Blade::SCALAR {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*{b}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.sig)
    }
}

// Operators panic on signature mismatch; use the `try_*` / `gp` methods to
// get an error instead.
impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        self.try_add(rhs).expect("signature mismatch in +")
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self.try_sub(rhs).expect("signature mismatch in -")
    }
}

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.gp(rhs).expect("signature mismatch in geometric product")
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector { sig: self.sig, coeffs: std::array::from_fn(|i| -&self.coeffs[i]) }
    }
}

#[derive(Serialize, Deserialize)]
struct MultivectorRepr {
    signature: [i8; 3],
    coeffs: [Rational; 8],
}

/// Serialized as `{ "signature": [λ1, λ2, λ3], "coeffs": [x0, ..., x7] }`
/// with coefficients in [`COEFF_ORDER`] and written as rational strings.
impl Serialize for Multivector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MultivectorRepr { signature: self.sig.lambdas, coeffs: self.even_first_coeffs() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Multivector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = MultivectorRepr::deserialize(deserializer)?;
        let sig = Signature::new(repr.signature).map_err(serde::de::Error::custom)?;
        Ok(Multivector::from_even_first(sig, repr.coeffs))
    }
}
