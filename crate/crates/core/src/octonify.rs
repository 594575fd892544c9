//! The parity-split products `•` and `•₋` that turn G(p,q) into an
//! octonionic composition algebra, with their conjugation and norm.
//!
//! With `x = x₊ + x₋` split into even and odd parts and `~` the Clifford
//! conjugation:
//!
//! ```text
//! x • y  = (x₊y₊ + ỹ₋x₋) + (y₋x₊ + x₋ỹ₊)
//! x •₋ y = (x₊y₊ - ỹ₋x₋) + (y₋x₊ + x₋ỹ₊)
//! ```

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::canonical::{find_zero_divisor, AlgebraTable, Entry, HurwitzClass};
use crate::error::{Error, Result};
use crate::ga::{Blade, Multivector, Signature, BASIS_ORDER, COEFF_ORDER};
use crate::sampling::SampleConfig;
use crate::scalar::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum BulletVariant {
    Plus,
    Minus,
}

impl BulletVariant {
    pub const ALL: [BulletVariant; 2] = [BulletVariant::Plus, BulletVariant::Minus];

    /// `+` or `-`, as accepted on the command line.
    pub fn sign_char(self) -> char {
        match self {
            BulletVariant::Plus => '+',
            BulletVariant::Minus => '-',
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BulletVariant::Plus => "•",
            BulletVariant::Minus => "•₋",
        }
    }
}

impl fmt::Display for BulletVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for BulletVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(BulletVariant::Plus),
            "-" | "minus" => Ok(BulletVariant::Minus),
            _ => Err(Error::Parse(format!("variant must be + or -, got `{s}`"))),
        }
    }
}

pub fn bullet_product(x: &Multivector, y: &Multivector, variant: BulletVariant) -> Result<Multivector> {
    let (xp, xm) = (x.even_part(), x.odd_part());
    let (yp, ym) = (y.even_part(), y.odd_part());
    let cross = ym.clifford_conjugation().gp(&xm)?;
    let even = match variant {
        BulletVariant::Plus => xp.gp(&yp)?.try_add(&cross)?,
        BulletVariant::Minus => xp.gp(&yp)?.try_sub(&cross)?,
    };
    let odd = ym.gp(&xp)?.try_add(&xm.gp(&yp.clifford_conjugation())?)?;
    even.try_add(&odd)
}

/// The minus variant read as "reversion in place of Clifford conjugation":
/// `x₊y₊ + y₋†x₋ + y₋x₊ + x₋y₊†`. Agrees with
/// [`bullet_product`]`(.., Minus)`, which is the form used everywhere else.
pub fn bullet_minus_by_reversion(x: &Multivector, y: &Multivector) -> Result<Multivector> {
    let (xp, xm) = (x.even_part(), x.odd_part());
    let (yp, ym) = (y.even_part(), y.odd_part());
    let even = xp.gp(&yp)?.try_add(&ym.reversion().gp(&xm)?)?;
    let odd = ym.gp(&xp)?.try_add(&xm.gp(&yp.reversion())?)?;
    even.try_add(&odd)
}

/// `x* = (x̃₊, -x₋)`, which coincides with the full grade inversion.
pub fn octonion_conjugate(x: &Multivector) -> Multivector {
    let parts = x.parity_split();
    let out = parts
        .even
        .clifford_conjugation()
        .try_sub(&parts.odd)
        .expect("parts share a signature");
    debug_assert_eq!(out, x.full_grade_inversion());
    out
}

/// Signs of the diagonal norm in coefficient order `x0..x7`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct NormDiagonal {
    pub signs: [i8; 8],
}

impl NormDiagonal {
    pub fn is_positive_definite(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }

    /// `Σ signs[i] · x_i²`.
    pub fn evaluate(&self, x: &Multivector) -> Rational {
        x.even_first_coeffs().iter().zip(self.signs).map(|(c, s)| c.square().signed(s)).sum()
    }
}

impl fmt::Display for NormDiagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<&str> = self.signs.iter().map(|&s| if s > 0 { "+" } else { "-" }).collect();
        write!(f, "({})", cells.join(","))
    }
}

/// Plus: `(1, λ1λ2, λ2λ3, λ1λ3, λ1, λ2, λ3, λ1λ2λ3)`; minus negates the
/// last four.
pub fn norm_diagonal(sig: Signature, variant: BulletVariant) -> NormDiagonal {
    let flip = match variant {
        BulletVariant::Plus => 1,
        BulletVariant::Minus => -1,
    };
    let signs = COEFF_ORDER.map(|b| {
        let lam: i8 = b.generators().iter().map(|&g| sig.lambda(g - 1)).product();
        if b.is_even() {
            lam
        } else {
            lam * flip
        }
    });
    NormDiagonal { signs }
}

/// `N(x)`. Plus: `⟨x x†⟩₀`. Minus: the diagonal from [`norm_diagonal`].
pub fn octonion_norm(x: &Multivector, variant: BulletVariant) -> Rational {
    match variant {
        BulletVariant::Plus => x.gp(&x.reversion()).expect("same signature").scalar_part(),
        BulletVariant::Minus => norm_diagonal(x.signature(), variant).evaluate(x),
    }
}

/// The scalar `s` with `x • x* = s`, or `None` if that product is not scalar.
pub fn norm_via_bullet(x: &Multivector, variant: BulletVariant) -> Option<Rational> {
    let p = bullet_product(x, &octonion_conjugate(x), variant).expect("same signature");
    p.has_grades_only(&[0]).then(|| p.scalar_part())
}

/// `(N(x₊), N(x₋))` for the plus norm.
pub fn parity_norm_decomposition(x: &Multivector) -> (Rational, Rational) {
    (octonion_norm(&x.even_part(), BulletVariant::Plus), octonion_norm(&x.odd_part(), BulletVariant::Plus))
}

/// `O` when the norm diagonal is positive definite, `Os` otherwise.
pub fn classify(sig: Signature, variant: BulletVariant) -> HurwitzClass {
    if norm_diagonal(sig, variant).is_positive_definite() {
        HurwitzClass::O
    } else {
        HurwitzClass::Os
    }
}

/// Inputs that falsify an identity, with a description of the failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub inputs: Vec<Multivector>,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inputs: Vec<String> = self.inputs.iter().map(|x| format!("[{x}]")).collect();
        write!(f, "{}: {}", inputs.join(", "), self.detail)
    }
}

fn basis_pairs(sig: Signature) -> Vec<(Multivector, Multivector)> {
    BASIS_ORDER
        .iter()
        .flat_map(|&a| BASIS_ORDER.iter().map(move |&b| (Multivector::blade(sig, a), Multivector::blade(sig, b))))
        .collect()
}

/// Runs `check` over all basis pairs, then over `cfg.trials` random pairs,
/// and returns the first failure in that order.
pub fn first_failing_pair<F>(sig: Signature, cfg: &SampleConfig, check: F) -> Option<Counterexample>
where
    F: Fn(&Multivector, &Multivector) -> Option<String> + Sync,
{
    let mut pairs = basis_pairs(sig);
    pairs.extend(cfg.sampler().pairs(sig, cfg.trials));
    pairs.par_iter().find_map_first(|(x, y)| {
        check(x, y).map(|detail| Counterexample { inputs: vec![x.clone(), y.clone()], detail })
    })
}

/// `N(x • y) = N(x) N(y)` on the basis grid and `cfg.trials` random pairs.
pub fn check_composition(sig: Signature, variant: BulletVariant, cfg: &SampleConfig) -> Option<Counterexample> {
    first_failing_pair(sig, cfg, |x, y| {
        let p = bullet_product(x, y, variant).expect("same signature");
        let (np, nx, ny) = (octonion_norm(&p, variant), octonion_norm(x, variant), octonion_norm(y, variant));
        (np != &nx * &ny).then(|| format!("N(x{variant}y) = {np}, N(x)N(y) = {}", &nx * &ny))
    })
}

/// `x(xy) = (xx)y` and `(yx)x = y(xx)` on the basis grid and random pairs.
pub fn check_alternativity(sig: Signature, variant: BulletVariant, cfg: &SampleConfig) -> Option<Counterexample> {
    first_failing_pair(sig, cfg, |x, y| {
        let m = |a: &Multivector, b: &Multivector| bullet_product(a, b, variant).expect("same signature");
        let xx = m(x, x);
        if m(x, &m(x, y)) != m(&xx, y) {
            Some("left alternative law fails".into())
        } else if m(&m(y, x), x) != m(y, &xx) {
            Some("right alternative law fails".into())
        } else {
            None
        }
    })
}

/// `(x•y)•z - x•(y•z)`.
pub fn associator(x: &Multivector, y: &Multivector, z: &Multivector, variant: BulletVariant) -> Result<Multivector> {
    let left = bullet_product(&bullet_product(x, y, variant)?, z, variant)?;
    let right = bullet_product(x, &bullet_product(y, z, variant)?, variant)?;
    left.try_sub(&right)
}

/// First basis triple, lexicographic in [`BASIS_ORDER`], with a nonzero
/// associator. Failing to find one is an internal inconsistency.
pub fn nonassociativity_witness(sig: Signature, variant: BulletVariant) -> Result<[Blade; 3]> {
    for a in BASIS_ORDER {
        for b in BASIS_ORDER {
            for c in BASIS_ORDER {
                let [x, y, z] = [a, b, c].map(|k| Multivector::blade(sig, k));
                if !associator(&x, &y, &z, variant)?.is_zero() {
                    return Ok([a, b, c]);
                }
            }
        }
    }
    Err(Error::Inconsistency(format!("{sig} with {variant} is associative on all basis triples")))
}

/// The product on the blade basis in [`BASIS_ORDER`], labelled with blade
/// labels; conjugation signs come from [`octonion_conjugate`].
pub fn cayley_table_bullet(sig: Signature, variant: BulletVariant) -> Result<AlgebraTable> {
    let mut rows = Vec::with_capacity(8);
    for a in BASIS_ORDER {
        let mut row = Vec::with_capacity(8);
        for b in BASIS_ORDER {
            let p = bullet_product(&Multivector::blade(sig, a), &Multivector::blade(sig, b), variant)?;
            row.push(monomial(&p).ok_or_else(|| {
                Error::Inconsistency(format!("{a} {variant} {b} = {p} is not a signed blade"))
            })?);
        }
        rows.push(row);
    }
    let conj = BASIS_ORDER
        .iter()
        .map(|&b| {
            let c = octonion_conjugate(&Multivector::blade(sig, b));
            if c.coeff(b).is_negative() {
                -1
            } else {
                1
            }
        })
        .collect();
    AlgebraTable::new(
        bullet_table_name(sig, variant),
        BASIS_ORDER.iter().map(|b| b.label().to_string()).collect(),
        rows,
        conj,
        0,
    )
}

pub fn bullet_table_name(sig: Signature, variant: BulletVariant) -> String {
    format!("{sig}{variant}")
}

/// `±` one blade, as a table entry in [`BASIS_ORDER`] positions.
pub(crate) fn monomial(x: &Multivector) -> Option<Entry> {
    let support = x.support();
    let [b] = support.as_slice() else { return None };
    let c = x.coeff(*b);
    if c.is_one() {
        Some(Entry::new(b.basis_position(), 1))
    } else if (-c).is_one() {
        Some(Entry::new(b.basis_position(), -1))
    } else {
        None
    }
}

/// A pair `x • y = 0` of nonzero elements with `N(x) = N(y) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BulletZeroDivisor {
    pub x: Multivector,
    pub y: Multivector,
}

/// Zero divisors of the bullet algebra, or `None` when the norm is positive
/// definite. A split norm without a witness is an inconsistency.
pub fn bullet_zero_divisor(sig: Signature, variant: BulletVariant) -> Result<Option<BulletZeroDivisor>> {
    let table = cayley_table_bullet(sig, variant)?;
    let Some(zd) = find_zero_divisor(&table) else {
        return if classify(sig, variant) == HurwitzClass::O {
            Ok(None)
        } else {
            Err(Error::Inconsistency(format!("no binomial zero divisor in split {sig}{variant}")))
        };
    };
    let lift = |coords: &[Rational]| {
        let mut m = Multivector::zero(sig);
        for (c, b) in coords.iter().zip(BASIS_ORDER) {
            m.set_coeff(b, c.clone());
        }
        m
    };
    let (x, y) = (lift(&zd.left), lift(&zd.right));
    if !bullet_product(&x, &y, variant)?.is_zero() {
        return Err(Error::Inconsistency("table zero divisor does not lift".into()));
    }
    Ok(Some(BulletZeroDivisor { x, y }))
}
