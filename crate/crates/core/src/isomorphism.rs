//! Subalgebras of G(p,q), the biquaternion factorization
//! `G(p,q) ≅ Ps(G) ⊗ G(p,q)₊`, the involution dictionary and signed-basis
//! isomorphism search between monomial tables.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{
    build_biquaternion, build_table, is_positive_definite, AlgebraTable, BiquaternionConjugation, Entry,
    HurwitzClass, BIQUATERNION_FACTORS, BIQUATERNION_LABELS,
};
use crate::error::{Error, Result};
use crate::ga::{blade_product, Blade, Involution, Multivector, Signature, BASIS_ORDER};
use crate::octonify::{cayley_table_bullet, classify, BulletVariant};
use crate::scalar::Rational;

/// Geometric product restricted to `blades`; the conjugation is reversion.
/// Fails if the span is not closed.
fn blade_subtable(sig: Signature, name: String, blades: &[Blade]) -> Result<AlgebraTable> {
    let mut rows = Vec::with_capacity(blades.len());
    for &a in blades {
        let mut row = Vec::with_capacity(blades.len());
        for &b in blades {
            let (s, c) = blade_product(a, b, &sig);
            let k = blades
                .iter()
                .position(|&x| x == c)
                .ok_or_else(|| Error::Inconsistency(format!("{name}: {a}·{b} = {c} leaves the span")))?;
            row.push(Entry::new(k, s));
        }
        rows.push(row);
    }
    let conj = blades.iter().map(|&b| Involution::Reversion.sign_on(b)).collect();
    AlgebraTable::new(name, blades.iter().map(|b| b.label().to_string()).collect(), rows, conj, 0)
}

/// The full geometric product on [`BASIS_ORDER`].
pub fn geometric_cayley_table(sig: Signature) -> AlgebraTable {
    blade_subtable(sig, sig.to_string(), &BASIS_ORDER).expect("full basis is closed")
}

pub const EVEN_BASIS: [Blade; 4] = [Blade::SCALAR, Blade::E12, Blade::E23, Blade::E13];
pub const PSEUDOSCALAR_BASIS: [Blade; 2] = [Blade::SCALAR, Blade::E123];

/// The even subalgebra on `{1, e12, e23, e13}`.
pub fn even_subalgebra_table(sig: Signature) -> Result<AlgebraTable> {
    blade_subtable(sig, format!("{sig}+"), &EVEN_BASIS)
}

/// The pseudoscalar subalgebra on `{1, e123}`.
pub fn pseudoscalar_table(sig: Signature) -> AlgebraTable {
    blade_subtable(sig, format!("Ps({sig})"), &PSEUDOSCALAR_BASIS).expect("pseudoscalar span is closed")
}

/// `H` if the reversion norm on the even subalgebra is definite, else `Hs`.
pub fn even_class(sig: Signature) -> HurwitzClass {
    let t = even_subalgebra_table(sig).expect("even subalgebra is closed");
    if is_positive_definite(&t) {
        HurwitzClass::H
    } else {
        HurwitzClass::Hs
    }
}

/// `C` iff `(e1e2e3)² = -1`.
pub fn pseudoscalar_class(sig: Signature) -> HurwitzClass {
    if blade_product(Blade::E123, Blade::E123, &sig).0 < 0 {
        HurwitzClass::C
    } else {
        HurwitzClass::Cs
    }
}

/// A signed blade `sign · blade`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SignedBlade {
    pub sign: i8,
    pub blade: Blade,
}

impl SignedBlade {
    fn mul(self, other: SignedBlade, sig: &Signature) -> SignedBlade {
        let (s, b) = blade_product(self.blade, other.blade, sig);
        SignedBlade { sign: s * self.sign * other.sign, blade: b }
    }

    pub fn to_multivector(self, sig: Signature) -> Multivector {
        Multivector::term(sig, self.blade, Rational::from_integer(self.sign as i64))
    }
}

/// Images of the biquaternion units in G(p,q).
///
/// `i` is the first of `e12, e23, e13` squaring to `-1`, `j` the next one
/// cyclically, `k = i j` and `ι = e123`. For every signature from
/// [`Signature::from_pq`] this gives `i = e12`, `j = e23`, `k = λ2 e13`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BiquaternionFrame {
    pub sig: Signature,
    pub iota: SignedBlade,
    pub i: SignedBlade,
    pub j: SignedBlade,
    pub k: SignedBlade,
}

impl BiquaternionFrame {
    pub fn new(sig: Signature) -> Self {
        let cycle = [Blade::E12, Blade::E23, Blade::E13];
        let first = (0..3)
            .find(|&n| blade_product(cycle[n], cycle[n], &sig).0 < 0)
            .expect("an odd number of bivectors square to -1");
        let plain = |b| SignedBlade { sign: 1, blade: b };
        let (i, j) = (plain(cycle[first]), plain(cycle[(first + 1) % 3]));
        BiquaternionFrame { sig, iota: plain(Blade::E123), i, j, k: i.mul(j, &sig) }
    }

    /// Images of `1, ι, i, j, k, ιi, ιj, ιk`.
    pub fn basis(&self) -> [SignedBlade; 8] {
        let one = SignedBlade { sign: 1, blade: Blade::SCALAR };
        let quat = [one, self.i, self.j, self.k];
        let cplx = [one, self.iota];
        BIQUATERNION_FACTORS.map(|(c, h)| cplx[c].mul(quat[h], &self.sig))
    }
}

/// `x = z0 + z1 i + z2 j + z3 k` with each `z_n = re + im ι`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiquaternionCoords {
    /// `z[n] = [re, im]`.
    pub z: [[Rational; 2]; 4],
}

impl BiquaternionCoords {
    /// Coordinates on `1, ι, i, j, k, ιi, ιj, ιk`.
    pub fn flat(&self) -> Vec<Rational> {
        BIQUATERNION_FACTORS.iter().map(|&(c, h)| self.z[h][c].clone()).collect()
    }

    pub fn from_flat(flat: &[Rational]) -> Result<Self> {
        if flat.len() != 8 {
            return Err(Error::DimensionMismatch(flat.len(), 8));
        }
        let mut z: [[Rational; 2]; 4] = Default::default();
        for (&(c, h), v) in BIQUATERNION_FACTORS.iter().zip(flat) {
            z[h][c] = v.clone();
        }
        Ok(BiquaternionCoords { z })
    }
}

pub fn biquaternion_decompose(x: &Multivector) -> BiquaternionCoords {
    let frame = BiquaternionFrame::new(x.signature());
    let flat: Vec<Rational> = frame.basis().iter().map(|sb| x.coeff(sb.blade).signed(sb.sign)).collect();
    BiquaternionCoords::from_flat(&flat).expect("eight coordinates")
}

pub fn biquaternion_recompose(sig: Signature, coords: &BiquaternionCoords) -> Multivector {
    let frame = BiquaternionFrame::new(sig);
    let mut out = Multivector::zero(sig);
    for (sb, v) in frame.basis().iter().zip(coords.flat()) {
        out.set_coeff(sb.blade, v.signed(sb.sign));
    }
    out
}

/// The geometric product written in the biquaternion basis of
/// [`BiquaternionFrame`], with biquaternion labels.
pub fn transported_table(sig: Signature) -> Result<AlgebraTable> {
    let basis = BiquaternionFrame::new(sig).basis();
    let position = |b: Blade| basis.iter().position(|sb| sb.blade == b).expect("frame spans all blades");
    let rows = basis
        .iter()
        .map(|&a| {
            basis
                .iter()
                .map(|&b| {
                    let p = a.mul(b, &sig);
                    let n = position(p.blade);
                    Entry::new(n, p.sign * basis[n].sign)
                })
                .collect()
        })
        .collect();
    let mut conj = vec![-1; 8];
    conj[0] = 1;
    AlgebraTable::new(
        format!("{sig} in biquaternion basis"),
        BIQUATERNION_LABELS.iter().map(|s| s.to_string()).collect(),
        rows,
        conj,
        0,
    )
}

/// `build_biquaternion(Ps class, even class)`.
pub fn expected_biquaternion(sig: Signature) -> AlgebraTable {
    build_biquaternion(pseudoscalar_class(sig), even_class(sig)).expect("valid factor classes")
}

/// First entry where the transported table and [`expected_biquaternion`]
/// differ, as `(row, column)`.
pub fn factorization_mismatch(sig: Signature) -> Result<Option<(usize, usize)>> {
    let (t, e) = (transported_table(sig)?, expected_biquaternion(sig));
    Ok((0..8).flat_map(|i| (0..8).map(move |j| (i, j))).find(|&(i, j)| t.entry(i, j) != e.entry(i, j)))
}

/// Involution of G(p,q) and the biquaternion conjugation it corresponds to.
pub const INVOLUTION_PAIRS: [(Involution, BiquaternionConjugation); 3] = [
    (Involution::Reversion, BiquaternionConjugation::Dagger),
    (Involution::Inversion, BiquaternionConjugation::Bar),
    (Involution::CliffordConjugation, BiquaternionConjugation::Tilde),
];

/// One transported comparison: `decompose(inv(b))` against `conj(decompose(b))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DictionaryCheck {
    pub involution: Involution,
    pub conjugation: BiquaternionConjugation,
    /// Biquaternion label of the basis element.
    pub element: &'static str,
    pub passed: bool,
}

/// Compares each involution with its conjugation on the 8 biquaternion basis
/// elements.
pub fn involution_dictionary(sig: Signature) -> Vec<DictionaryCheck> {
    let basis = BiquaternionFrame::new(sig).basis();
    let mut out = Vec::with_capacity(24);
    for (inv, conj) in INVOLUTION_PAIRS {
        for (n, sb) in basis.iter().enumerate() {
            let x = sb.to_multivector(sig);
            let lhs = biquaternion_decompose(&inv.apply(&x)).flat();
            let rhs: Vec<Rational> =
                biquaternion_decompose(&x).flat().iter().enumerate().map(|(m, c)| c.signed(conj.sign_on(m))).collect();
            out.push(DictionaryCheck { involution: inv, conjugation: conj, element: BIQUATERNION_LABELS[n], passed: lhs == rhs });
        }
    }
    out
}

/// A signed basis map `e_i -> map[i].sign · f_{map[i].index}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsomorphismWitness {
    pub source: AlgebraTable,
    pub target: AlgebraTable,
    pub map: Vec<Entry>,
}

#[derive(Serialize)]
struct WitnessExport<'a> {
    source: &'a str,
    target: &'a str,
    map: Vec<(usize, i8)>,
}

impl IsomorphismWitness {
    /// `{source, target, map: [[target_index, sign], ...]}`.
    pub fn to_json(&self) -> String {
        let export = WitnessExport {
            source: self.source.name(),
            target: self.target.name(),
            map: self.map.iter().map(|e| (e.index, e.sign)).collect(),
        };
        serde_json::to_string(&export).expect("witness serializes")
    }

    /// `e1 -> -f3` style lines.
    pub fn describe(&self) -> Vec<String> {
        self.map
            .iter()
            .enumerate()
            .map(|(i, &e)| format!("{} -> {}", self.source.label(i), self.target.entry_label(e)))
            .collect()
    }
}

/// Re-checks bijectivity, the unit and the full product grid.
pub fn verify_witness(w: &IsomorphismWitness) -> bool {
    let (s, t) = (&w.source, &w.target);
    let n = s.dim();
    if t.dim() != n || w.map.len() != n || w.map[s.unit()] != Entry::new(t.unit(), 1) {
        return false;
    }
    let mut hit = vec![false; n];
    for e in &w.map {
        if e.sign == 0 || e.index >= n || std::mem::replace(&mut hit[e.index], true) {
            return false;
        }
    }
    let image = |e: Entry| if e.sign == 0 { Entry::ZERO } else { Entry::new(w.map[e.index].index, w.map[e.index].sign * e.sign) };
    (0..n).all(|i| {
        (0..n).all(|j| {
            let (a, b) = (w.map[i], w.map[j]);
            let prod = t.entry(a.index, b.index);
            image(s.entry(i, j)) == Entry::new(prod.index, prod.sign * a.sign * b.sign)
        })
    })
}

/// Generators chosen greedily in index order, and for every other index a
/// word `(parent, generator)` with `e_parent e_generator = ± e_index`.
struct GeneratorPlan {
    generators: Vec<usize>,
    /// `(index, parent, generator)` in BFS order.
    steps: Vec<(usize, usize, usize)>,
}

fn generator_plan(table: &AlgebraTable) -> GeneratorPlan {
    let n = table.dim();
    let mut generators = Vec::new();
    let span = |gens: &[usize]| -> Vec<(usize, usize, usize)> {
        let mut seen = vec![false; n];
        seen[table.unit()] = true;
        let mut steps = Vec::new();
        let mut queue = VecDeque::from([table.unit()]);
        while let Some(a) = queue.pop_front() {
            for &g in gens {
                let e = table.entry(a, g);
                if e.sign != 0 && !seen[e.index] {
                    seen[e.index] = true;
                    steps.push((e.index, a, g));
                    queue.push_back(e.index);
                }
            }
        }
        steps
    };
    let mut steps = Vec::new();
    for i in (0..n).filter(|&i| i != table.unit()) {
        if steps.iter().all(|&(k, _, _)| k != i) {
            generators.push(i);
            steps = span(&generators);
        }
    }
    GeneratorPlan { generators, steps }
}

/// Square of a basis element when it is `± unit`.
fn unit_square(t: &AlgebraTable, i: usize) -> Option<i8> {
    let e = t.entry(i, i);
    (e.index == t.unit()).then_some(e.sign)
}

/// Whether `i, j` commute (+1), anticommute (-1) or neither (0).
fn commutation(t: &AlgebraTable, i: usize, j: usize) -> i8 {
    let (a, b) = (t.entry(i, j), t.entry(j, i));
    if a == b {
        1
    } else if a == b.negate() {
        -1
    } else {
        0
    }
}

/// Searches signed basis maps. Generators of the source (chosen greedily in
/// index order) are sent to `±` target elements, trying indices in order and
/// `+` before `-`, pruned by matching squares and (anti)commutation; each
/// assignment is extended along products and the whole grid is verified. The
/// first witness in that order is returned, also when searched in parallel.
pub fn find_isomorphism(source: &AlgebraTable, target: &AlgebraTable) -> Result<Option<IsomorphismWitness>> {
    if source.dim() != target.dim() {
        return Err(Error::DimensionMismatch(source.dim(), target.dim()));
    }
    for t in [source, target] {
        if !t.is_signed_monomial() {
            return Err(Error::InvalidTable(format!("{} is not signed-monomial", t.name())));
        }
    }
    let plan = generator_plan(source);
    let candidates: Vec<Entry> = (0..target.dim())
        .filter(|&k| k != target.unit())
        .flat_map(|k| [Entry::new(k, 1), Entry::new(k, -1)])
        .collect();
    let compatible = |assigned: &[Entry], g: usize, c: Entry| {
        if unit_square(source, plan.generators[g]) != unit_square(target, c.index) {
            return false;
        }
        assigned.iter().enumerate().all(|(h, prev)| {
            prev.index != c.index
                && commutation(source, plan.generators[h], plan.generators[g]) == commutation(target, prev.index, c.index)
        })
    };
    if plan.generators.is_empty() {
        let w = IsomorphismWitness { source: source.clone(), target: target.clone(), map: vec![Entry::new(target.unit(), 1)] };
        return Ok(verify_witness(&w).then_some(w));
    }
    let first: Vec<Entry> = candidates.iter().copied().filter(|&c| compatible(&[], 0, c)).collect();
    let map = first.par_iter().find_map_first(|&c| {
        let mut assigned = vec![c];
        search(source, target, &plan, &candidates, &compatible, &mut assigned)
    });
    Ok(map.map(|map| IsomorphismWitness { source: source.clone(), target: target.clone(), map }))
}

fn search(
    source: &AlgebraTable,
    target: &AlgebraTable,
    plan: &GeneratorPlan,
    candidates: &[Entry],
    compatible: &(dyn Fn(&[Entry], usize, Entry) -> bool + Sync),
    assigned: &mut Vec<Entry>,
) -> Option<Vec<Entry>> {
    let g = assigned.len();
    if g == plan.generators.len() {
        return extend(source, target, plan, assigned);
    }
    for &c in candidates {
        if compatible(assigned, g, c) {
            assigned.push(c);
            if let Some(m) = search(source, target, plan, candidates, compatible, assigned) {
                return Some(m);
            }
            assigned.pop();
        }
    }
    None
}

/// Extends generator images multiplicatively and verifies the result.
fn extend(source: &AlgebraTable, target: &AlgebraTable, plan: &GeneratorPlan, images: &[Entry]) -> Option<Vec<Entry>> {
    let n = source.dim();
    let mut map = vec![Entry::ZERO; n];
    map[source.unit()] = Entry::new(target.unit(), 1);
    for (&g, &img) in plan.generators.iter().zip(images) {
        map[g] = img;
    }
    for &(k, parent, g) in &plan.steps {
        if plan.generators.contains(&k) {
            continue;
        }
        let (a, b) = (map[parent], map[g]);
        let prod = target.entry(a.index, b.index);
        // e_parent e_g = s e_k  =>  phi(e_k) = s phi(e_parent) phi(e_g)
        let s = source.entry(parent, g).sign;
        map[k] = Entry::new(prod.index, prod.sign * a.sign * b.sign * s);
    }
    let w = IsomorphismWitness { source: source.clone(), target: target.clone(), map };
    verify_witness(&w).then_some(w.map)
}

/// One row of the correspondence between G(p,q) and the Hurwitz algebras.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ClassificationRow {
    pub sig: Signature,
    pub pseudoscalar: HurwitzClass,
    pub even: HurwitzClass,
    pub plus: HurwitzClass,
    pub minus: HurwitzClass,
}

impl ClassificationRow {
    /// `ℂ⊗ℍ` style label of the biquaternion factorization.
    pub fn tensor_label(&self) -> String {
        format!("{}⊗{}", self.pseudoscalar.symbol(), self.even.symbol())
    }
}

pub fn classification_row(sig: Signature) -> ClassificationRow {
    ClassificationRow {
        sig,
        pseudoscalar: pseudoscalar_class(sig),
        even: even_class(sig),
        plus: classify(sig, BulletVariant::Plus),
        minus: classify(sig, BulletVariant::Minus),
    }
}

/// Outcome of matching a table against a class and its partner.
#[derive(Clone, Debug)]
pub struct CrossCheck {
    pub witness: Option<IsomorphismWitness>,
    /// True when no witness exists against the partner class.
    pub partner_rejected: bool,
}

/// Finds an isomorphism onto `build_table(class)` and confirms none exists
/// onto the other class of the same dimension.
pub fn cross_check(source: &AlgebraTable, class: HurwitzClass) -> Result<CrossCheck> {
    let witness = find_isomorphism(source, &build_table(class))?;
    let partner_rejected = class.partner() == class || find_isomorphism(source, &build_table(class.partner()))?.is_none();
    Ok(CrossCheck { witness, partner_rejected })
}

/// Witness from the bullet algebra onto its classified octonion table.
pub fn bullet_isomorphism(sig: Signature, variant: BulletVariant) -> Result<IsomorphismWitness> {
    let source = cayley_table_bullet(sig, variant)?;
    let class = classify(sig, variant);
    find_isomorphism(&source, &build_table(class))?.ok_or_else(|| {
        Error::Inconsistency(format!("{} classified as {class} but no signed-basis isomorphism found", source.name()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::Sampler;

    fn sig(p: u32, q: u32) -> Signature {
        Signature::from_pq(p, q).unwrap()
    }

    #[test]
    fn subalgebra_examples() {
        let t = even_subalgebra_table(sig(3, 0)).unwrap();
        assert_eq!(t.entry(1, 2), Entry::new(3, 1));
        for s in Signature::all() {
            let t = even_subalgebra_table(s).unwrap();
            assert_eq!(t.entry(1, 2), Entry::new(3, s.lambda(1)));
        }
        assert_eq!(even_class(sig(3, 0)), HurwitzClass::H);
        assert_eq!(even_class(sig(1, 2)), HurwitzClass::Hs);
        assert_eq!(even_class(sig(0, 3)), HurwitzClass::H);
        assert_eq!(pseudoscalar_class(sig(3, 0)), HurwitzClass::C);
        assert_eq!(pseudoscalar_class(sig(2, 1)), HurwitzClass::Cs);
        assert_eq!(pseudoscalar_class(sig(1, 2)), HurwitzClass::C);
        assert_eq!(geometric_cayley_table(sig(0, 3)).entry(1, 1), Entry::new(0, -1));
    }

    #[test]
    fn frame_for_canonical_signatures() {
        for s in Signature::canonical() {
            let f = BiquaternionFrame::new(s);
            assert_eq!((f.i.blade, f.j.blade, f.k.blade), (Blade::E12, Blade::E23, Blade::E13));
            assert_eq!(f.k.sign, s.lambda(1));
        }
    }

    #[test]
    fn decompose_examples() {
        let s = sig(2, 1);
        let one = biquaternion_decompose(&Multivector::one(s));
        assert_eq!(one.flat()[0], Rational::one());
        assert!(one.flat()[1..].iter().all(Rational::is_zero));
        let i = biquaternion_decompose(&Multivector::blade(s, Blade::E12));
        assert_eq!(i.z[1], [Rational::one(), Rational::zero()]);
        // e1 = -λ2λ3 ι j in every signature
        for s in Signature::canonical() {
            let c = biquaternion_decompose(&Multivector::blade(s, Blade::E1));
            let expected = Rational::from_integer(-(s.lambda(1) * s.lambda(2)) as i64);
            assert_eq!(c.z[2], [Rational::zero(), expected]);
        }
    }

    #[test]
    fn decompose_round_trips() {
        let mut r = Sampler::new(4);
        for s in Signature::all() {
            for _ in 0..50 {
                let x = r.multivector(s);
                assert_eq!(biquaternion_recompose(s, &biquaternion_decompose(&x)), x);
            }
        }
    }

    #[test]
    fn factorization_all_signatures() {
        for s in Signature::all() {
            assert_eq!(factorization_mismatch(s).unwrap(), None, "{s}");
            let t = transported_table(s).unwrap();
            assert!((0..8).all(|i| t.entry(1, i) == t.entry(i, 1)));
        }
    }

    #[test]
    fn dictionary_all_pass() {
        for s in Signature::all() {
            let checks = involution_dictionary(s);
            assert_eq!(checks.len(), 24);
            assert!(checks.iter().all(|c| c.passed), "{s}");
        }
    }

    #[test]
    fn wrong_pairing_fails_dictionary() {
        let s = sig(3, 0);
        let x = Multivector::blade(s, Blade::E123);
        let lhs = biquaternion_decompose(&Involution::Reversion.apply(&x)).flat();
        let rhs: Vec<Rational> = biquaternion_decompose(&x)
            .flat()
            .iter()
            .enumerate()
            .map(|(m, c)| c.signed(BiquaternionConjugation::Tilde.sign_on(m)))
            .collect();
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn isomorphism_examples() {
        let bullet = cayley_table_bullet(sig(3, 0), BulletVariant::Plus).unwrap();
        let w = find_isomorphism(&bullet, &build_table(HurwitzClass::O)).unwrap().unwrap();
        assert!(verify_witness(&w));
        assert!(find_isomorphism(&build_table(HurwitzClass::O), &build_table(HurwitzClass::Os)).unwrap().is_none());
        let even = even_subalgebra_table(sig(0, 3)).unwrap();
        assert!(find_isomorphism(&even, &build_table(HurwitzClass::H)).unwrap().is_some());
        assert!(matches!(
            find_isomorphism(&even, &build_table(HurwitzClass::O)),
            Err(Error::DimensionMismatch(4, 8))
        ));
    }

    #[test]
    fn identity_and_perturbed_witnesses() {
        for class in HurwitzClass::ALL {
            let t = build_table(class);
            let id = IsomorphismWitness {
                source: t.clone(),
                target: t.clone(),
                map: (0..t.dim()).map(|i| Entry::new(i, 1)).collect(),
            };
            assert!(verify_witness(&id));
        }
        let bullet = cayley_table_bullet(sig(1, 2), BulletVariant::Minus).unwrap();
        let mut w = bullet_isomorphism(sig(1, 2), BulletVariant::Minus).unwrap();
        assert!(verify_witness(&w));
        w.map[3] = w.map[3].negate();
        assert!(!verify_witness(&w));
        assert_eq!(w.source, bullet);
    }

    #[test]
    fn search_is_deterministic() {
        let a = bullet_isomorphism(sig(2, 1), BulletVariant::Plus).unwrap();
        let b = bullet_isomorphism(sig(2, 1), BulletVariant::Plus).unwrap();
        assert_eq!(a.map, b.map);
        let json: serde_json::Value = serde_json::from_str(&a.to_json()).unwrap();
        assert_eq!(json["map"][0], serde_json::json!([0, 1]));
        assert_eq!(json["target"], "Os");
    }

    #[test]
    fn generator_plan_for_bullet_tables() {
        let t = cayley_table_bullet(sig(3, 0), BulletVariant::Plus).unwrap();
        assert_eq!(generator_plan(&t).generators, vec![1, 2, 3]);
        let h = build_table(HurwitzClass::H);
        assert_eq!(generator_plan(&h).generators, vec![1, 2]);
    }

    #[test]
    fn classification_rows() {
        let row = classification_row(sig(3, 0));
        assert_eq!(row.tensor_label(), "ℂ⊗ℍ");
        assert_eq!((row.plus, row.minus), (HurwitzClass::O, HurwitzClass::Os));
        let row = classification_row(sig(0, 3));
        assert_eq!(row.tensor_label(), "ℂs⊗ℍ");
    }

    #[test]
    fn cross_checks() {
        for s in Signature::canonical() {
            let c = cross_check(&pseudoscalar_table(s), pseudoscalar_class(s)).unwrap();
            assert!(c.witness.is_some() && c.partner_rejected);
            let c = cross_check(&even_subalgebra_table(s).unwrap(), even_class(s)).unwrap();
            assert!(c.witness.is_some() && c.partner_rejected);
        }
    }
}
