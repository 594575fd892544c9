//! Structure-constant tables for the seven Hurwitz algebras and the four
//! biquaternion algebras, with conjugation, norm and property checks.
//!
//! Every table is signed-monomial: the product of two basis elements is
//! `±` a single basis element (a zero sign is allowed by [`AlgebraTable`]
//! but never produced here).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sampling::{SampleConfig, Sampler};
use crate::scalar::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum HurwitzClass {
    R,
    C,
    Cs,
    H,
    Hs,
    O,
    Os,
}

impl HurwitzClass {
    pub const ALL: [HurwitzClass; 7] = [
        HurwitzClass::R,
        HurwitzClass::C,
        HurwitzClass::Cs,
        HurwitzClass::H,
        HurwitzClass::Hs,
        HurwitzClass::O,
        HurwitzClass::Os,
    ];

    pub fn dim(self) -> usize {
        match self {
            HurwitzClass::R => 1,
            HurwitzClass::C | HurwitzClass::Cs => 2,
            HurwitzClass::H | HurwitzClass::Hs => 4,
            HurwitzClass::O | HurwitzClass::Os => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            HurwitzClass::R => "R",
            HurwitzClass::C => "C",
            HurwitzClass::Cs => "Cs",
            HurwitzClass::H => "H",
            HurwitzClass::Hs => "Hs",
            HurwitzClass::O => "O",
            HurwitzClass::Os => "Os",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            HurwitzClass::R => "ℝ",
            HurwitzClass::C => "ℂ",
            HurwitzClass::Cs => "ℂs",
            HurwitzClass::H => "ℍ",
            HurwitzClass::Hs => "ℍs",
            HurwitzClass::O => "𝕆",
            HurwitzClass::Os => "𝕆s",
        }
    }

    pub fn is_division(self) -> bool {
        matches!(self, HurwitzClass::R | HurwitzClass::C | HurwitzClass::H | HurwitzClass::O)
    }

    /// The other class of the same dimension (division <-> split). `R` maps to itself.
    pub fn partner(self) -> HurwitzClass {
        match self {
            HurwitzClass::R => HurwitzClass::R,
            HurwitzClass::C => HurwitzClass::Cs,
            HurwitzClass::Cs => HurwitzClass::C,
            HurwitzClass::H => HurwitzClass::Hs,
            HurwitzClass::Hs => HurwitzClass::H,
            HurwitzClass::O => HurwitzClass::Os,
            HurwitzClass::Os => HurwitzClass::O,
        }
    }

    /// Only the reals carry a total order compatible with the algebra; this is
    /// a static fact, not something derived from a table.
    pub fn is_totally_ordered(self) -> bool {
        self == HurwitzClass::R
    }
}

impl fmt::Display for HurwitzClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HurwitzClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        HurwitzClass::ALL
            .into_iter()
            .find(|c| c.name() == s || c.symbol() == s)
            .ok_or_else(|| Error::Parse(format!("unknown Hurwitz algebra `{s}`")))
    }
}

/// One structure constant: `e_i e_j = sign · e_index`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Entry {
    pub index: usize,
    pub sign: i8,
}

impl Entry {
    pub const ZERO: Entry = Entry { index: 0, sign: 0 };

    pub fn new(index: usize, sign: i8) -> Entry {
        if sign == 0 {
            Entry::ZERO
        } else {
            Entry { index, sign }
        }
    }

    pub fn negate(self) -> Entry {
        Entry::new(self.index, -self.sign)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraTable {
    name: String,
    labels: Vec<String>,
    product: Vec<Entry>,
    conj_signs: Vec<i8>,
    unit: usize,
    class: Option<HurwitzClass>,
}

impl AlgebraTable {
    /// Validates index ranges, sign values, the unit law and `conj[unit] = +1`.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        product: Vec<Vec<Entry>>,
        conj_signs: Vec<i8>,
        unit: usize,
    ) -> Result<Self> {
        let name = name.into();
        let dim = labels.len();
        let bad = |msg: String| Err(Error::InvalidTable(format!("{name}: {msg}")));
        if dim == 0 || product.len() != dim || product.iter().any(|r| r.len() != dim) {
            return bad(format!("product must be {dim}x{dim}"));
        }
        if conj_signs.len() != dim || conj_signs.iter().any(|&s| s != 1 && s != -1) {
            return bad("conjugation signs must be ±1, one per basis element".into());
        }
        if unit >= dim || conj_signs[unit] != 1 {
            return bad("unit must exist and be fixed by conjugation".into());
        }
        let mut flat = Vec::with_capacity(dim * dim);
        for row in &product {
            for e in row {
                if e.index >= dim || !(-1..=1).contains(&e.sign) {
                    return bad(format!("entry {e:?} out of range"));
                }
                flat.push(Entry::new(e.index, e.sign));
            }
        }
        let table = AlgebraTable { name, labels, product: flat, conj_signs, unit, class: None };
        for i in 0..dim {
            if table.entry(unit, i) != Entry::new(i, 1) || table.entry(i, unit) != Entry::new(i, 1) {
                return Err(Error::InvalidTable(format!(
                    "{}: unit law fails at `{}`",
                    table.name, table.labels[i]
                )));
            }
        }
        Ok(table)
    }

    fn with_class(mut self, class: HurwitzClass) -> Self {
        self.class = Some(class);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn conj_signs(&self) -> &[i8] {
        &self.conj_signs
    }

    /// The Hurwitz class the table was built from, if any.
    pub fn class(&self) -> Option<HurwitzClass> {
        self.class
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> Entry {
        self.product[i * self.dim() + j]
    }

    /// Product of a signed basis element with basis element `j` on the right.
    pub fn mul_entry_right(&self, left: Entry, j: usize) -> Entry {
        if left.sign == 0 {
            return Entry::ZERO;
        }
        let e = self.entry(left.index, j);
        Entry::new(e.index, e.sign * left.sign)
    }

    /// Product of basis element `i` with a signed basis element on the right.
    pub fn mul_entry_left(&self, i: usize, right: Entry) -> Entry {
        if right.sign == 0 {
            return Entry::ZERO;
        }
        let e = self.entry(i, right.index);
        Entry::new(e.index, e.sign * right.sign)
    }

    pub fn is_signed_monomial(&self) -> bool {
        self.product.iter().all(|e| e.sign != 0)
    }

    /// Renders `sign · e_index` with this table's labels: `e4`, `-e3`, `-1`, `0`.
    pub fn entry_label(&self, e: Entry) -> String {
        match e.sign {
            0 => "0".to_string(),
            s if s > 0 => self.labels[e.index].clone(),
            _ => format!("-{}", self.labels[e.index]),
        }
    }

    pub fn basis(&self, i: usize) -> Element<'_> {
        let mut coords = vec![Rational::zero(); self.dim()];
        coords[i] = Rational::one();
        Element { table: self, coords }
    }

    pub fn one(&self) -> Element<'_> {
        self.basis(self.unit)
    }

    pub fn zero(&self) -> Element<'_> {
        Element { table: self, coords: vec![Rational::zero(); self.dim()] }
    }

    pub fn element(&self, coords: Vec<Rational>) -> Result<Element<'_>> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch(coords.len(), self.dim()));
        }
        Ok(Element { table: self, coords })
    }

    pub fn export(&self) -> TableExport {
        TableExport {
            name: self.name.clone(),
            dim: self.dim(),
            basis_labels: self.labels.clone(),
            product: (0..self.dim())
                .map(|i| {
                    (0..self.dim())
                        .map(|j| {
                            let e = self.entry(i, j);
                            ExportEntry { k: e.index, s: e.sign }
                        })
                        .collect()
                })
                .collect(),
            conj: self.conj_signs.clone(),
        }
    }

    pub fn from_export(export: &TableExport) -> Result<Self> {
        if export.dim != export.basis_labels.len() {
            return Err(Error::InvalidTable(format!("{}: dim disagrees with labels", export.name)));
        }
        let product = export
            .product
            .iter()
            .map(|row| row.iter().map(|e| Entry { index: e.k, sign: e.s }).collect())
            .collect();
        AlgebraTable::new(export.name.clone(), export.basis_labels.clone(), product, export.conj.clone(), 0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.export()).expect("table export serializes")
    }

    /// Cayley table with labels as header row and first column.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![String::new()];
        header.extend(self.labels.iter().cloned());
        w.write_record(&header).expect("in-memory csv");
        for i in 0..self.dim() {
            let mut row = vec![self.labels[i].clone()];
            row.extend((0..self.dim()).map(|j| self.entry_label(self.entry(i, j))));
            w.write_record(&row).expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf8 labels")
    }

    /// Column-aligned Cayley table.
    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.entry_label(self.entry(i, j))).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .chain(self.labels.iter())
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(1);
        let pad = |s: &str| format!("{s:>width$}");
        let mut out = String::new();
        out.push_str(&format!("{}\n", self.name));
        out.push_str(&pad(""));
        out.push_str(" |");
        for l in &self.labels {
            out.push(' ');
            out.push_str(&pad(l));
        }
        out.push('\n');
        out.push_str(&"-".repeat((width + 1) * (self.dim() + 1) + 1));
        out.push('\n');
        for (i, row) in cells.iter().enumerate() {
            out.push_str(&pad(&self.labels[i]));
            out.push_str(" |");
            for c in row {
                out.push(' ');
                out.push_str(&pad(c));
            }
            out.push('\n');
        }
        out
    }
}

/// JSON export schema: `{name, dim, basis_labels, product: [[{k, s}]], conj}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableExport {
    pub name: String,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    pub product: Vec<Vec<ExportEntry>>,
    pub conj: Vec<i8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportEntry {
    pub k: usize,
    pub s: i8,
}

/// A vector of an algebra given by a table.
#[derive(Clone, Debug)]
pub struct Element<'t> {
    table: &'t AlgebraTable,
    coords: Vec<Rational>,
}

impl PartialEq for Element<'_> {
    fn eq(&self, other: &Self) -> bool {
        same_table(self.table, other.table) && self.coords == other.coords
    }
}

impl Eq for Element<'_> {}

fn same_table(a: &AlgebraTable, b: &AlgebraTable) -> bool {
    std::ptr::eq(a, b) || a == b
}

impl<'t> Element<'t> {
    pub fn table(&self) -> &'t AlgebraTable {
        self.table
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    fn check_same(&self, other: &Element<'_>) -> Result<()> {
        if !same_table(self.table, other.table) {
            return Err(Error::TableMismatch {
                left: self.table.name.clone(),
                right: other.table.name.clone(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Element<'t>) -> Result<Element<'t>> {
        self.check_same(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(Element { table: self.table, coords })
    }

    pub fn sub(&self, other: &Element<'t>) -> Result<Element<'t>> {
        self.check_same(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Ok(Element { table: self.table, coords })
    }

    pub fn scale(&self, k: &Rational) -> Element<'t> {
        Element { table: self.table, coords: self.coords.iter().map(|c| c * k).collect() }
    }

    pub fn mul(&self, other: &Element<'t>) -> Result<Element<'t>> {
        table_product(self, other)
    }

    /// Coefficient of the unit when every other coordinate is zero.
    pub fn as_scalar(&self) -> Option<Rational> {
        let u = self.table.unit;
        self.coords
            .iter()
            .enumerate()
            .all(|(i, c)| i == u || c.is_zero())
            .then(|| self.coords[u].clone())
    }

    /// `c0*1 + c1*e1 + ...` using the table's labels.
    pub fn render(&self) -> String {
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{}*{}", c, self.table.labels[i]))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Bilinear extension of the structure constants.
pub fn table_product<'t>(u: &Element<'t>, v: &Element<'t>) -> Result<Element<'t>> {
    u.check_same(v)?;
    let t = u.table;
    let mut out = vec![Rational::zero(); t.dim()];
    for (i, a) in u.coords.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in v.coords.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let e = t.entry(i, j);
            match e.sign {
                0 => {}
                s if s > 0 => out[e.index] += a * b,
                _ => out[e.index] -= a * b,
            }
        }
    }
    Ok(Element { table: t, coords: out })
}

/// Applies the table's conjugation signs.
pub fn conjugate<'t>(u: &Element<'t>) -> Element<'t> {
    let coords = u.coords.iter().zip(&u.table.conj_signs).map(|(c, &s)| c.signed(s)).collect();
    Element { table: u.table, coords }
}

/// `n(u)` from `u · conj(u) = n(u) 1`.
pub fn norm(u: &Element<'_>) -> Result<Rational> {
    let p = table_product(u, &conjugate(u))?;
    p.as_scalar().ok_or_else(|| {
        Error::Inconsistency(format!(
            "{}: u·conj(u) is not scalar for u = {}",
            u.table.name,
            u.render()
        ))
    })
}

/// `n(u+v) - n(u) - n(v)`.
pub fn polarize(u: &Element<'_>, v: &Element<'_>) -> Result<Rational> {
    let s = u.add(v)?;
    Ok(norm(&s)? - norm(u)? - norm(v)?)
}

/// Per-basis signs `d_i` with `e_i · conj(e_i) = d_i 1`; zero if that product
/// is not a multiple of the unit.
pub fn diagonal_signs(table: &AlgebraTable) -> Vec<i8> {
    (0..table.dim())
        .map(|i| {
            let e = table.entry(i, i);
            if e.index == table.unit {
                e.sign * table.conj_signs[i]
            } else {
                0
            }
        })
        .collect()
}

/// The diagonal form `Σ d_i u_i²`. Agrees with [`norm`] on Hurwitz tables and
/// stays defined where `u · conj(u)` is not scalar.
pub fn quadratic_form(u: &Element<'_>) -> Rational {
    diagonal_signs(u.table)
        .iter()
        .zip(&u.coords)
        .map(|(&d, c)| c.square().signed(d))
        .sum()
}

pub fn is_positive_definite(table: &AlgebraTable) -> bool {
    diagonal_signs(table).iter().all(|&d| d == 1)
}

/// A verified pair with `left · right = 0`, both nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroDivisor {
    pub left: Vec<Rational>,
    pub right: Vec<Rational>,
}

/// Searches binomials `1 + e_i`, `e_i - 1` (for `e_i² = +1`) and `e_i ± e_j` (for
/// opposite-sign squares) for a pair whose product is exactly zero. Returns
/// the first pair in index order.
pub fn find_zero_divisor(table: &AlgebraTable) -> Option<ZeroDivisor> {
    let dim = table.dim();
    let u = table.unit;
    let square = |i: usize| {
        let e = table.entry(i, i);
        if e.index == u {
            e.sign
        } else {
            0
        }
    };
    let binomial = |i: usize, j: usize, sj: i8| {
        let mut c = vec![Rational::zero(); dim];
        c[i] = Rational::one();
        c[j] = Rational::from_integer(sj as i64);
        c
    };
    let mut candidates = Vec::new();
    for i in (0..dim).filter(|&i| i != u && square(i) == 1) {
        candidates.push(binomial(u, i, 1));
        candidates.push(binomial(i, u, -1));
    }
    for i in (0..dim).filter(|&i| i != u) {
        for j in (i + 1..dim).filter(|&j| j != u) {
            if square(i) != 0 && square(i) == -square(j) {
                candidates.push(binomial(i, j, 1));
                candidates.push(binomial(i, j, -1));
            }
        }
    }
    for l in &candidates {
        for r in &candidates {
            let (le, re) = (Element { table, coords: l.clone() }, Element { table, coords: r.clone() });
            if table_product(&le, &re).is_ok_and(|p| p.is_zero()) {
                return Some(ZeroDivisor { left: l.clone(), right: r.clone() });
            }
        }
    }
    None
}

/// Results of [`check_properties`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyRecord {
    /// Static annotation; `None` for tables not built from a Hurwitz class.
    pub totally_ordered: Option<bool>,
    pub commutative: bool,
    pub associative: bool,
    pub alternative: bool,
    pub flexible: bool,
    pub composition: bool,
    pub positive_definite: bool,
    pub zero_divisor: Option<ZeroDivisor>,
}

/// Sample sizes for the randomized part of [`check_properties_with`].
#[derive(Clone, Copy, Debug)]
pub struct PropertyConfig {
    /// Random pairs for alternativity and flexibility.
    pub identity_trials: usize,
    /// Random pairs for the composition law.
    pub composition_trials: usize,
    pub seed: u64,
}

impl Default for PropertyConfig {
    fn default() -> Self {
        PropertyConfig {
            identity_trials: 1_000,
            composition_trials: 10_000,
            seed: crate::sampling::DEFAULT_SEED,
        }
    }
}

pub fn check_properties(table: &AlgebraTable) -> PropertyRecord {
    check_properties_with(table, &PropertyConfig::default())
}

pub fn check_properties_with(table: &AlgebraTable, cfg: &PropertyConfig) -> PropertyRecord {
    let dim = table.dim();
    let idx = || 0..dim;

    let commutative = idx().all(|i| idx().all(|j| table.entry(i, j) == table.entry(j, i)));
    let associative = idx().all(|i| {
        idx().all(|j| {
            idx().all(|k| {
                table.mul_entry_right(table.entry(i, j), k) == table.mul_entry_left(i, table.entry(j, k))
            })
        })
    });

    // basis pairs first, then random pairs: these identities are quadratic in x
    let basis_alt = idx().all(|i| {
        idx().all(|j| {
            let xx = table.entry(i, i);
            table.mul_entry_left(i, table.entry(i, j)) == table.mul_entry_right(xx, j)
                && table.mul_entry_right(table.entry(j, i), i) == table.mul_entry_left(j, xx)
        })
    });
    let basis_flex = idx().all(|i| {
        idx().all(|j| table.mul_entry_left(i, table.entry(j, i)) == table.mul_entry_right(table.entry(i, j), i))
    });

    let pairs = random_pairs(table, &SampleConfig::new(cfg.identity_trials, cfg.seed).derive(1));
    let alternative = basis_alt && pairs.iter().all(|(x, y)| is_alternative_on(x, y));
    let flexible = basis_flex && pairs.iter().all(|(x, y)| is_flexible_on(x, y));

    let basis_comp = idx().all(|i| {
        idx().all(|j| {
            let (bi, bj) = (table.basis(i), table.basis(j));
            let p = table_product(&bi, &bj).expect("same table");
            quadratic_form(&p) == quadratic_form(&bi) * quadratic_form(&bj)
        })
    });
    let composition = basis_comp
        && random_pairs(table, &SampleConfig::new(cfg.composition_trials, cfg.seed).derive(2))
            .iter()
            .all(|(x, y)| {
                let p = table_product(x, y).expect("same table");
                quadratic_form(&p) == quadratic_form(x) * quadratic_form(y)
            });

    PropertyRecord {
        totally_ordered: table.class.map(HurwitzClass::is_totally_ordered),
        commutative,
        associative,
        alternative,
        flexible,
        composition,
        positive_definite: is_positive_definite(table),
        zero_divisor: find_zero_divisor(table),
    }
}

fn random_pairs<'t>(table: &'t AlgebraTable, cfg: &SampleConfig) -> Vec<(Element<'t>, Element<'t>)> {
    let mut s: Sampler = cfg.sampler();
    (0..cfg.trials)
        .map(|_| {
            let x = Element { table, coords: s.coords(table.dim()) };
            let y = Element { table, coords: s.coords(table.dim()) };
            (x, y)
        })
        .collect()
}

/// `x(xy) = (xx)y` and `(yx)x = y(xx)`.
pub fn is_alternative_on(x: &Element<'_>, y: &Element<'_>) -> bool {
    let xx = m(x, x);
    m(x, &m(x, y)) == m(&xx, y) && m(&m(y, x), x) == m(y, &xx)
}

/// `x(yx) = (xy)x`.
pub fn is_flexible_on(x: &Element<'_>, y: &Element<'_>) -> bool {
    m(x, &m(y, x)) == m(&m(x, y), x)
}

fn m<'t>(a: &Element<'t>, b: &Element<'t>) -> Element<'t> {
    table_product(a, b).expect("same table")
}

fn imaginary_labels(n: usize) -> Vec<String> {
    std::iter::once("1".to_string()).chain((1..=n).map(|i| format!("e{i}"))).collect()
}

/// Fills a table from the squares of the imaginary units and a list of
/// ordered products `e_a e_b = sign e_c` (1-based imaginary indices), adding
/// the anticommuted products. Panics if two rules disagree.
fn table_from_rules(
    class: HurwitzClass,
    squares: &[i8],
    rules: &[(usize, usize, usize, i8)],
) -> AlgebraTable {
    let dim = squares.len() + 1;
    let mut product = vec![vec![Entry::ZERO; dim]; dim];
    for i in 0..dim {
        product[0][i] = Entry::new(i, 1);
        product[i][0] = Entry::new(i, 1);
    }
    for (i, &s) in squares.iter().enumerate() {
        product[i + 1][i + 1] = Entry::new(0, s);
    }
    let mut set = |a: usize, b: usize, e: Entry| {
        let slot = &mut product[a][b];
        assert!(slot.sign == 0 || *slot == e, "conflicting rule for e{a} e{b}");
        *slot = e;
    };
    for &(a, b, c, s) in rules {
        set(a, b, Entry::new(c, s));
        set(b, a, Entry::new(c, -s));
    }
    debug_assert!(product.iter().flatten().all(|e| e.sign != 0), "incomplete table for {class}");
    AlgebraTable::new(class.name(), imaginary_labels(dim - 1), product, {
        let mut c = vec![-1; dim];
        c[0] = 1;
        c
    }, 0)
    .expect("canonical table is valid")
    .with_class(class)
}

/// Positive triples of the split-octonion sign rule.
pub const SPLIT_OCTONION_TRIPLES: [(usize, usize, usize); 7] =
    [(1, 2, 3), (1, 5, 4), (1, 7, 6), (2, 6, 4), (2, 5, 7), (3, 7, 4), (3, 6, 5)];

/// Builds the structure constants of a Hurwitz algebra on `{1, e1, ..}`.
///
/// * `C`/`Cs`: `e1² = ∓1`.
/// * `H`: `e_i² = -1`, `e_i e_{i+1} = e_{i+2}` (indices mod 3).
/// * `Hs`: `e1² = -1`, `e2² = e3² = +1`, `e_{i+1} e_i = (-1)^i e_{i+2}`.
/// * `O`: `e_i² = -1`, `e_i e_{i+1} = e_{i+3}` (indices mod 7 in `1..=7`),
///   with each triple `(i, i+1, i+3)` closed cyclically.
/// * `Os`: `e_i² = -1` for `i <= 3`, `+1` otherwise. For each triple
///   `(a, b, c)` of [`SPLIT_OCTONION_TRIPLES`], `e_a e_b = e_c` and the other
///   two rotations follow from alternativity: `e_b e_c = -e_b² e_a`,
///   `e_c e_a = -e_a² e_b`. When all three squares are `-1` this is the plain
///   cyclic rule.
pub fn build_table(class: HurwitzClass) -> AlgebraTable {
    let wrap = |i: usize, n: usize| (i - 1) % n + 1;
    match class {
        HurwitzClass::R => table_from_rules(class, &[], &[]),
        HurwitzClass::C => table_from_rules(class, &[-1], &[]),
        HurwitzClass::Cs => table_from_rules(class, &[1], &[]),
        HurwitzClass::H => {
            let rules: Vec<_> = (1..=3).map(|i| (i, wrap(i + 1, 3), wrap(i + 2, 3), 1)).collect();
            table_from_rules(class, &[-1, -1, -1], &rules)
        }
        HurwitzClass::Hs => {
            // e_{i+1} e_i = (-1)^i e_{i+2}
            let rules: Vec<_> = (1..=3)
                .map(|i| (wrap(i + 1, 3), i, wrap(i + 2, 3), if i % 2 == 0 { 1 } else { -1 }))
                .collect();
            table_from_rules(class, &[-1, 1, 1], &rules)
        }
        HurwitzClass::O => {
            let mut rules = Vec::new();
            for i in 1..=7 {
                let (a, b, c) = (i, wrap(i + 1, 7), wrap(i + 3, 7));
                rules.extend([(a, b, c, 1), (b, c, a, 1), (c, a, b, 1)]);
            }
            table_from_rules(class, &[-1; 7], &rules)
        }
        HurwitzClass::Os => {
            let squares = [-1, -1, -1, 1, 1, 1, 1];
            let sq = |i: usize| squares[i - 1];
            let mut rules = Vec::new();
            for (a, b, c) in SPLIT_OCTONION_TRIPLES {
                rules.extend([(a, b, c, 1), (b, c, a, -sq(b)), (c, a, b, -sq(a))]);
            }
            table_from_rules(class, &squares, &rules)
        }
    }
}

/// Basis of a biquaternion algebra: `1, ι, i, j, k, ιi, ιj, ιk`.
pub const BIQUATERNION_LABELS: [&str; 8] = ["1", "iota", "i", "j", "k", "iota*i", "iota*j", "iota*k"];

/// `(complex index, quaternion index)` of each biquaternion basis element.
pub const BIQUATERNION_FACTORS: [(usize, usize); 8] =
    [(0, 0), (1, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3)];

fn biquaternion_index(c: usize, h: usize) -> usize {
    BIQUATERNION_FACTORS.iter().position(|&f| f == (c, h)).expect("all factor pairs listed")
}

/// The tensor product `C ⊗ H` with `(z1 ⊗ q1)(z2 ⊗ q2) = z1 z2 ⊗ q1 q2`.
///
/// Conjugation signs negate every non-unit basis element; under the
/// resulting diagonal form the algebra is not a composition algebra.
pub fn build_biquaternion(c: HurwitzClass, h: HurwitzClass) -> Result<AlgebraTable> {
    if !matches!(c, HurwitzClass::C | HurwitzClass::Cs) || !matches!(h, HurwitzClass::H | HurwitzClass::Hs) {
        return Err(Error::Parse(format!("biquaternion factors must be C|Cs and H|Hs, got {c}, {h}")));
    }
    let (ct, ht) = (build_table(c), build_table(h));
    let product = BIQUATERNION_FACTORS
        .iter()
        .map(|&(ci, hi)| {
            BIQUATERNION_FACTORS
                .iter()
                .map(|&(cj, hj)| {
                    let (ec, eh) = (ct.entry(ci, cj), ht.entry(hi, hj));
                    Entry::new(biquaternion_index(ec.index, eh.index), ec.sign * eh.sign)
                })
                .collect()
        })
        .collect();
    let mut conj = vec![-1; 8];
    conj[0] = 1;
    AlgebraTable::new(
        format!("{}⊗{}", c.name(), h.name()),
        BIQUATERNION_LABELS.iter().map(|s| s.to_string()).collect(),
        product,
        conj,
        0,
    )
}

/// The three conjugations of `z ⊗ q`: `tilde = z ⊗ q̃`, `bar = z̄ ⊗ q`,
/// `dagger = z̄ ⊗ q̃`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BiquaternionConjugation {
    Tilde,
    Bar,
    Dagger,
}

impl BiquaternionConjugation {
    pub const ALL: [BiquaternionConjugation; 3] =
        [BiquaternionConjugation::Tilde, BiquaternionConjugation::Bar, BiquaternionConjugation::Dagger];

    /// Sign on biquaternion basis element `index`.
    pub fn sign_on(self, index: usize) -> i8 {
        let (c, h) = BIQUATERNION_FACTORS[index];
        let tilde = if h == 0 { 1 } else { -1 };
        let bar = if c == 0 { 1 } else { -1 };
        match self {
            BiquaternionConjugation::Tilde => tilde,
            BiquaternionConjugation::Bar => bar,
            BiquaternionConjugation::Dagger => tilde * bar,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BiquaternionConjugation::Tilde => "tilde",
            BiquaternionConjugation::Bar => "bar",
            BiquaternionConjugation::Dagger => "dagger",
        }
    }
}

pub fn biquaternion_conjugation<'t>(x: &Element<'t>, which: BiquaternionConjugation) -> Result<Element<'t>> {
    if x.table.dim() != 8 {
        return Err(Error::DimensionMismatch(x.table.dim(), 8));
    }
    let coords = x.coords.iter().enumerate().map(|(i, c)| c.signed(which.sign_on(i))).collect();
    Ok(Element { table: x.table, coords })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn el<'t>(t: &'t AlgebraTable, c: &[i64]) -> Element<'t> {
        t.element(c.iter().map(|&n| r(n)).collect()).unwrap()
    }

    /// Brute-force multiplication from a dense 3-index structure tensor,
    /// built straight from the table entries.
    fn dense_product(t: &AlgebraTable, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let n = t.dim();
        let mut gamma = vec![vec![vec![0i64; n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                let e = t.entry(i, j);
                gamma[i][j][e.index] += e.sign as i64;
            }
        }
        (0..n)
            .map(|k| {
                let mut acc = Rational::zero();
                for i in 0..n {
                    for j in 0..n {
                        acc += &(&u[i] * &v[j]) * &r(gamma[i][j][k]);
                    }
                }
                acc
            })
            .collect()
    }

    #[test]
    fn class_names_round_trip() {
        for c in HurwitzClass::ALL {
            assert_eq!(c.name().parse::<HurwitzClass>().unwrap(), c);
            assert_eq!(c.symbol().parse::<HurwitzClass>().unwrap(), c);
            assert_eq!(build_table(c).dim(), c.dim());
        }
        assert!("Q".parse::<HurwitzClass>().is_err());
    }

    #[test]
    fn table_examples() {
        let o = build_table(HurwitzClass::O);
        assert_eq!(o.entry(1, 2), Entry::new(4, 1));
        let os = build_table(HurwitzClass::Os);
        assert_eq!(os.entry(1, 5), Entry::new(4, 1));
        let hs = build_table(HurwitzClass::Hs);
        assert_eq!(hs.entry(2, 1), Entry::new(3, -1));
        assert_eq!(hs.entry(3, 2), Entry::new(1, 1));
        assert_eq!(hs.entry(1, 3), Entry::new(2, -1));
    }

    #[test]
    fn octonion_rule_holds_for_every_index() {
        let o = build_table(HurwitzClass::O);
        for i in 1..=7usize {
            let (b, c) = ((i % 7) + 1, ((i + 2) % 7) + 1);
            assert_eq!(o.entry(i, b), Entry::new(c, 1));
            assert_eq!(o.entry(i, i), Entry::new(0, -1));
        }
    }

    #[test]
    fn split_octonion_triples_cover_each_pair_once() {
        let mut seen = std::collections::HashSet::new();
        for (a, b, c) in SPLIT_OCTONION_TRIPLES {
            for pair in [(a, b), (b, c), (a, c)] {
                let key = (pair.0.min(pair.1), pair.0.max(pair.1));
                assert!(seen.insert(key), "pair {key:?} listed twice");
            }
        }
        assert_eq!(seen.len(), 21);
    }

    #[test]
    fn literal_levi_civita_split_rule_is_not_alternative() {
        // e_i e_j = ε_ijk e_k on all rotations of each triple, squares as for Os
        let squares = [-1i8, -1, -1, 1, 1, 1, 1];
        let mut rules = Vec::new();
        for (a, b, c) in SPLIT_OCTONION_TRIPLES {
            rules.extend([(a, b, c, 1), (b, c, a, 1), (c, a, b, 1)]);
        }
        let t = table_from_rules(HurwitzClass::Os, &squares, &rules);
        let props = check_properties_with(&t, &PropertyConfig { identity_trials: 20, composition_trials: 20, seed: 1 });
        assert!(!props.alternative);
        assert!(!props.composition);
    }

    #[test]
    fn product_examples() {
        let cs = build_table(HurwitzClass::Cs);
        assert!(table_product(&el(&cs, &[1, 1]), &el(&cs, &[-1, 1])).unwrap().is_zero());
        let h = build_table(HurwitzClass::H);
        // (e1 + e2) e3 = -e2 + e1
        assert_eq!(table_product(&el(&h, &[0, 1, 1, 0]), &h.basis(3)).unwrap(), el(&h, &[0, 1, -1, 0]));
        let x = el(&h, &[2, -1, 3, 5]);
        assert_eq!(table_product(&h.one(), &x).unwrap(), x);
        let c = build_table(HurwitzClass::C);
        assert!(matches!(table_product(&c.one(), &cs.one()), Err(Error::TableMismatch { .. })));
    }

    #[test]
    fn product_matches_dense_tensor_oracle() {
        let mut s = Sampler::new(3);
        for class in HurwitzClass::ALL {
            let t = build_table(class);
            for _ in 0..50 {
                let (u, v) = (s.coords(t.dim()), s.coords(t.dim()));
                let fast = table_product(&t.element(u.clone()).unwrap(), &t.element(v.clone()).unwrap()).unwrap();
                assert_eq!(fast.coords(), dense_product(&t, &u, &v).as_slice());
            }
        }
    }

    #[test]
    fn conjugation_norm_polarization() {
        for class in HurwitzClass::ALL {
            let t = build_table(class);
            assert_eq!(conjugate(&t.one()), t.one());
            if t.dim() > 1 {
                assert_eq!(conjugate(&t.basis(1)), t.basis(1).scale(&r(-1)));
            }
            assert_eq!(norm(&t.one()).unwrap(), r(1));
            assert_eq!(polarize(&t.one(), &t.zero()).unwrap(), r(0));
        }
        let c = build_table(HurwitzClass::C);
        assert_eq!(conjugate(&el(&c, &[3, 2])), el(&c, &[3, -2]));
        assert_eq!(norm(&el(&c, &[3, 4])).unwrap(), r(25));
        let cs = build_table(HurwitzClass::Cs);
        assert_eq!(norm(&el(&cs, &[1, 1])).unwrap(), r(0));
        let real = build_table(HurwitzClass::R);
        assert_eq!(polarize(&real.one(), &real.one()).unwrap(), r(2));
        let h = build_table(HurwitzClass::H);
        assert_eq!(polarize(&h.basis(1), &h.basis(2)).unwrap(), r(0));
    }

    #[test]
    fn conjugation_matches_polarization_formula() {
        // conj(x) = <x,1> 1 - x
        let mut s = Sampler::new(11);
        for class in HurwitzClass::ALL {
            let t = build_table(class);
            for _ in 0..20 {
                let x = t.element(s.coords(t.dim())).unwrap();
                let pairing = polarize(&x, &t.one()).unwrap();
                let expected = t.one().scale(&pairing).sub(&x).unwrap();
                assert_eq!(conjugate(&x), expected);
                let n = norm(&x).unwrap();
                assert_eq!(polarize(&x, &x).unwrap(), &n * &r(2));
                assert_eq!(n, quadratic_form(&x));
            }
        }
    }

    #[test]
    fn conjugation_is_anti_automorphism() {
        for class in HurwitzClass::ALL {
            let t = build_table(class);
            for i in 0..t.dim() {
                for j in 0..t.dim() {
                    let lhs = conjugate(&table_product(&t.basis(i), &t.basis(j)).unwrap());
                    let rhs = table_product(&conjugate(&t.basis(j)), &conjugate(&t.basis(i))).unwrap();
                    assert_eq!(lhs, rhs, "{class} {i} {j}");
                }
            }
        }
    }

    #[test]
    fn property_examples() {
        let cfg = PropertyConfig { identity_trials: 200, composition_trials: 500, seed: 5 };
        let o = check_properties_with(&build_table(HurwitzClass::O), &cfg);
        assert!(!o.associative && o.alternative && o.composition);
        let h = check_properties_with(&build_table(HurwitzClass::H), &cfg);
        assert!(!h.commutative && h.associative);
        let cs = check_properties_with(&build_table(HurwitzClass::Cs), &cfg);
        assert!(cs.commutative);
        let zd = cs.zero_divisor.unwrap();
        assert_eq!(zd.left, vec![r(1), r(1)]);
        assert_eq!(zd.right, vec![r(-1), r(1)]);
        assert_eq!(check_properties_with(&build_table(HurwitzClass::R), &cfg).totally_ordered, Some(true));
    }

    #[test]
    fn biquaternion_examples() {
        let chh = build_biquaternion(HurwitzClass::C, HurwitzClass::H).unwrap();
        assert_eq!(chh.entry(1, 2), Entry::new(5, 1));
        assert_eq!(chh.entry(2, 1), Entry::new(5, 1));
        assert_eq!(chh.entry(2, 3), Entry::new(4, 1));
        let csh = build_biquaternion(HurwitzClass::Cs, HurwitzClass::H).unwrap();
        assert_eq!(csh.entry(1, 1), Entry::new(0, 1));
        for (c, h) in [(HurwitzClass::C, HurwitzClass::Hs), (HurwitzClass::Cs, HurwitzClass::Hs)] {
            let t = build_biquaternion(c, h).unwrap();
            // ι is central
            assert!((0..8).all(|i| t.entry(1, i) == t.entry(i, 1)));
        }
        assert!(build_biquaternion(HurwitzClass::H, HurwitzClass::C).is_err());
    }

    #[test]
    fn biquaternion_conjugation_signs() {
        use BiquaternionConjugation::*;
        let t = build_biquaternion(HurwitzClass::C, HurwitzClass::H).unwrap();
        let iota = t.basis(1);
        assert_eq!(biquaternion_conjugation(&iota, Tilde).unwrap(), iota);
        assert_eq!(biquaternion_conjugation(&iota, Bar).unwrap(), iota.scale(&r(-1)));
        assert_eq!(biquaternion_conjugation(&t.basis(5), Dagger).unwrap(), t.basis(5));
        for i in 0..8 {
            assert_eq!(Dagger.sign_on(i), Bar.sign_on(i) * Tilde.sign_on(i));
        }
        let dagger: Vec<i8> = (0..8).map(|i| Dagger.sign_on(i)).collect();
        assert_eq!(dagger, vec![1, -1, -1, -1, -1, 1, 1, 1]);
        let h = build_table(HurwitzClass::H);
        assert!(biquaternion_conjugation(&h.one(), Bar).is_err());
    }

    #[test]
    fn biquaternions_are_not_composition_algebras() {
        let cfg = PropertyConfig { identity_trials: 50, composition_trials: 200, seed: 9 };
        for c in [HurwitzClass::C, HurwitzClass::Cs] {
            for h in [HurwitzClass::H, HurwitzClass::Hs] {
                let t = build_biquaternion(c, h).unwrap();
                let p = check_properties_with(&t, &cfg);
                assert!(!p.composition, "{}", t.name());
                assert!(p.associative);
            }
        }
    }

    #[test]
    fn table_validation() {
        let labels = vec!["1".to_string(), "e1".to_string()];
        let good = vec![vec![Entry::new(0, 1), Entry::new(1, 1)], vec![Entry::new(1, 1), Entry::new(0, -1)]];
        assert!(AlgebraTable::new("c", labels.clone(), good.clone(), vec![1, -1], 0).is_ok());
        assert!(AlgebraTable::new("c", labels.clone(), good.clone(), vec![-1, -1], 0).is_err());
        let mut bad = good.clone();
        bad[0][1] = Entry::new(1, -1);
        assert!(AlgebraTable::new("c", labels.clone(), bad, vec![1, -1], 0).is_err());
        let mut bad = good;
        bad[1][1] = Entry::new(5, 1);
        assert!(AlgebraTable::new("c", labels, bad, vec![1, -1], 0).is_err());
    }

    #[test]
    fn exports() {
        let h = build_table(HurwitzClass::H);
        let csv = h.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], ",1,e1,e2,e3");
        assert_eq!(lines[2], "e1,e1,-1,e3,-e2");
        let json: serde_json::Value = serde_json::from_str(&h.to_json()).unwrap();
        assert_eq!(json["dim"], 4);
        assert_eq!(json["product"][1][1], serde_json::json!({"k": 0, "s": -1}));
        assert_eq!(json["conj"], serde_json::json!([1, -1, -1, -1]));
        let back = AlgebraTable::from_export(&serde_json::from_str(&h.to_json()).unwrap()).unwrap();
        assert_eq!(back.export(), h.export());
        assert!(h.to_text().contains("-e2"));
    }
}
