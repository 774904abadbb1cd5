//! Truncated graded polynomial rings over the rationals.
//!
//! A ring is a free commutative polynomial algebra on named generators of
//! declared degree, with every monomial of total degree above `n` set to
//! zero. This is the model for the rational Chow ring of an `n`-dimensional
//! base: Chern classes, Segre classes, divisor data and the like are all
//! elements of such a ring.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `num / den` as an exact rational.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| Error::Parse(format!("bad rational `{s}`")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

/// Serialized form of a [`GeneratorTable`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingConfig {
    pub generators: Vec<Generator>,
    pub n: u32,
}

/// Generator names and degrees plus the truncation degree.
#[derive(Debug, PartialEq, Eq)]
pub struct GeneratorTable {
    generators: Vec<Generator>,
    n: u32,
}

/// Shared handle to a ring; elements keep one so mixed-ring arithmetic can
/// be detected.
pub type Ring = Arc<GeneratorTable>;

impl GeneratorTable {
    pub fn new<'a>(generators: impl IntoIterator<Item = (&'a str, u32)>, n: u32) -> Result<Ring> {
        let generators: Vec<Generator> = generators
            .into_iter()
            .map(|(name, degree)| Generator {
                name: name.to_string(),
                degree,
            })
            .collect();
        Self::from_config(RingConfig { generators, n })
    }

    pub fn from_config(config: RingConfig) -> Result<Ring> {
        for (i, g) in config.generators.iter().enumerate() {
            if g.name.is_empty() || !g.name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::Parse(format!("bad generator name `{}`", g.name)));
            }
            if config.generators[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(Arc::new(GeneratorTable {
            generators: config.generators,
            n: config.n,
        }))
    }

    /// Generators `c1, ..., c_min(rank, n)` with `deg c_k = k`.
    pub fn chern(rank: u32, n: u32) -> Ring {
        let names: Vec<String> = (1..=rank.min(n)).map(|k| format!("c{k}")).collect();
        Self::new(names.iter().map(|s| s.as_str()).zip(1..), n).expect("generated names are valid")
    }

    pub fn config(&self) -> RingConfig {
        RingConfig {
            generators: self.generators.clone(),
            n: self.n,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// Parses a monomial key such as `b0*c1^2`; `1` is the unit monomial.
    pub fn parse_monomial(&self, key: &str) -> Result<Monomial> {
        let mut exps = vec![0u32; self.generators.len()];
        let key = key.trim();
        if key != "1" {
            for factor in key.split('*') {
                let factor = factor.trim();
                let (name, exp) = match factor.split_once('^') {
                    Some((name, e)) => (
                        name.trim(),
                        e.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad exponent in `{key}`")))?,
                    ),
                    None => (factor, 1),
                };
                let idx = self
                    .index_of(name)
                    .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
                exps[idx] += exp;
            }
        }
        Ok(self.monomial(exps))
    }

    fn monomial(&self, exps: Vec<u32>) -> Monomial {
        let degree = exps
            .iter()
            .zip(&self.generators)
            .map(|(e, g)| e * g.degree)
            .sum();
        Monomial { degree, exps }
    }

    /// Canonical key of a monomial: factors in declaration order, `*`
    /// separated, `^` exponents; `1` for the unit.
    pub fn monomial_key(&self, m: &Monomial) -> String {
        let factors: Vec<String> = m
            .exps
            .iter()
            .zip(&self.generators)
            .filter(|(e, _)| **e > 0)
            .map(|(&e, g)| match e {
                1 => g.name.clone(),
                _ => format!("{}^{}", g.name, e),
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

pub trait RingExt {
    fn zero(&self) -> GradedElement;
    fn one(&self) -> GradedElement;
    fn constant(&self, q: Rational) -> GradedElement;
    fn generator(&self, name: &str) -> Result<GradedElement>;
}

impl RingExt for Ring {
    fn zero(&self) -> GradedElement {
        GradedElement {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    fn one(&self) -> GradedElement {
        self.constant(Rational::one())
    }

    fn constant(&self, q: Rational) -> GradedElement {
        let mut e = self.zero();
        e.insert(self.monomial(vec![0; self.generators.len()]), q);
        e
    }

    fn generator(&self, name: &str) -> Result<GradedElement> {
        let idx = self
            .index_of(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        let mut exps = vec![0; self.generators.len()];
        exps[idx] = 1;
        let mut e = self.zero();
        e.insert(self.monomial(exps), Rational::one());
        Ok(e)
    }
}

/// Exponent vector over a ring's generators, with its cached total degree.
///
/// Ordered by degree, then by exponents of earlier generators first
/// (`c1^2` before `c1*c2`... before `c2`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of a truncated graded ring. Zero coefficients are never
/// stored, and neither are monomials above the truncation degree.
#[derive(Clone)]
pub struct GradedElement {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl GradedElement {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the monomial spelled by `key` (see
    /// [`GeneratorTable::parse_monomial`]).
    pub fn coeff_of(&self, key: &str) -> Result<Rational> {
        Ok(self.coeff(&self.ring.parse_monomial(key)?))
    }

    fn insert(&mut self, m: Monomial, q: Rational) {
        if m.degree > self.ring.n || q.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += q;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_ring(&self, other: &GradedElement) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &GradedElement) -> Result<GradedElement> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, q) in &other.terms {
            out.insert(m.clone(), q.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &GradedElement) -> Result<GradedElement> {
        self.try_add(&-other)
    }

    /// Graded product; monomials above degree `n` are dropped.
    pub fn try_mul(&self, other: &GradedElement) -> Result<GradedElement> {
        self.check_ring(other)?;
        let n = self.ring.n;
        let mut out = self.ring.zero();
        for (ma, qa) in &self.terms {
            for (mb, qb) in &other.terms {
                if ma.degree + mb.degree > n {
                    continue;
                }
                let exps = ma.exps.iter().zip(&mb.exps).map(|(x, y)| x + y).collect();
                out.insert(
                    Monomial {
                        degree: ma.degree + mb.degree,
                        exps,
                    },
                    qa * qb,
                );
            }
        }
        Ok(out)
    }

    pub fn scale(&self, q: &Rational) -> GradedElement {
        if q.is_zero() {
            return self.ring.zero();
        }
        GradedElement {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> GradedElement {
        (0..k).fold(self.ring.one(), |acc, _| &acc * self)
    }

    /// The homogeneous component of degree `k`.
    pub fn degree_part(&self, k: u32) -> GradedElement {
        GradedElement {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree == k)
                .map(|(m, q)| (m.clone(), q.clone()))
                .collect(),
        }
    }

    /// `true` when every term has degree `k` (vacuously for zero).
    pub fn is_homogeneous_of(&self, k: u32) -> bool {
        self.terms.keys().all(|m| m.degree == k)
    }

    pub fn expect_degree(&self, k: u32) -> Result<()> {
        if self.is_homogeneous_of(k) {
            Ok(())
        } else {
            let found: Vec<String> = self.terms.keys().map(|m| m.degree.to_string()).collect();
            Err(Error::DegreeMismatch {
                expected: k,
                found: found.join(","),
            })
        }
    }

    /// Whether any stored monomial involves the named generator.
    pub fn involves(&self, name: &str) -> bool {
        match self.ring.index_of(name) {
            Some(i) => self.terms.keys().any(|m| m.exps[i] > 0),
            None => false,
        }
    }

    /// The constant term, if the element is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, q) = self.terms.iter().next().unwrap();
                m.exps.iter().all(|&e| e == 0).then(|| q.clone())
            }
            _ => None,
        }
    }

    /// Ring homomorphism into `target`: each generator listed in `images`
    /// goes to the given element, every other generator to the generator of
    /// the same name in `target`.
    pub fn substitute(
        &self,
        target: &Ring,
        images: &[(&str, GradedElement)],
    ) -> Result<GradedElement> {
        let mut gen_images = Vec::with_capacity(self.ring.generators.len());
        for g in &self.ring.generators {
            let img = match images.iter().find(|(name, _)| *name == g.name) {
                Some((_, e)) => {
                    if !same_ring(e.ring(), target) {
                        return Err(Error::RingMismatch);
                    }
                    e.clone()
                }
                None => target.generator(&g.name)?,
            };
            gen_images.push(img);
        }
        let mut out = target.zero();
        for (m, q) in &self.terms {
            let mut term = target.constant(q.clone());
            for (img, &e) in gen_images.iter().zip(&m.exps) {
                if e > 0 {
                    term = &term * &img.pow(e);
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// JSON form: `[{"monomial": {"c1": 2}, "coeff": "1/4"}, ...]`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, q)| {
                    let mono: Map<String, Value> = m
                        .exps
                        .iter()
                        .zip(&self.ring.generators)
                        .filter(|(e, _)| **e > 0)
                        .map(|(&e, g)| (g.name.clone(), json!(e)))
                        .collect();
                    json!({ "monomial": mono, "coeff": q.to_string() })
                })
                .collect(),
        )
    }

    pub fn from_json(ring: &Ring, value: &Value) -> Result<GradedElement> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::Parse("graded element must be a JSON array".into()))?;
        let mut out = ring.zero();
        for item in items {
            let mono = item
                .get("monomial")
                .and_then(Value::as_object)
                .ok_or_else(|| Error::Parse("term is missing a `monomial` object".into()))?;
            let coeff = match item.get("coeff") {
                Some(Value::String(s)) => parse_rational(s)?,
                Some(Value::Number(n)) if n.is_i64() => Rational::from(BigInt::from(n.as_i64().unwrap())),
                _ => return Err(Error::Parse("term is missing a `coeff` string".into())),
            };
            let mut exps = vec![0u32; ring.generators.len()];
            for (name, e) in mono {
                let idx = ring
                    .index_of(name)
                    .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
                let e = e
                    .as_u64()
                    .and_then(|e| u32::try_from(e).ok())
                    .ok_or_else(|| Error::Parse(format!("bad exponent for `{name}`")))?;
                exps[idx] += e;
            }
            out.insert(ring.monomial(exps), coeff);
        }
        Ok(out)
    }
}

impl PartialEq for GradedElement {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for GradedElement {}

impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, q)) in self.terms.iter().enumerate() {
            let negative = q.is_negative();
            let abs = q.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = self.ring.monomial_key(m);
            if mono == "1" {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedElement({self})")
    }
}

impl Serialize for GradedElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

// Operator forms panic on mixed-ring operands; use the `try_*` methods when
// operands come from untrusted input.
impl<'a> Add<&'a GradedElement> for &'a GradedElement {
    type Output = GradedElement;
    fn add(self, rhs: &GradedElement) -> GradedElement {
        self.try_add(rhs).expect("ring mismatch in addition")
    }
}

impl<'a> Sub<&'a GradedElement> for &'a GradedElement {
    type Output = GradedElement;
    fn sub(self, rhs: &GradedElement) -> GradedElement {
        self.try_sub(rhs).expect("ring mismatch in subtraction")
    }
}

impl<'a> Mul<&'a GradedElement> for &'a GradedElement {
    type Output = GradedElement;
    fn mul(self, rhs: &GradedElement) -> GradedElement {
        self.try_mul(rhs).expect("ring mismatch in multiplication")
    }
}

impl Neg for &GradedElement {
    type Output = GradedElement;
    fn neg(self) -> GradedElement {
        GradedElement {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, q)| (m.clone(), -q)).collect(),
        }
    }
}

impl Add for GradedElement {
    type Output = GradedElement;
    fn add(self, rhs: GradedElement) -> GradedElement {
        &self + &rhs
    }
}

impl Sub for GradedElement {
    type Output = GradedElement;
    fn sub(self, rhs: GradedElement) -> GradedElement {
        &self - &rhs
    }
}

impl Mul for GradedElement {
    type Output = GradedElement;
    fn mul(self, rhs: GradedElement) -> GradedElement {
        &self * &rhs
    }
}

impl Neg for GradedElement {
    type Output = GradedElement;
    fn neg(self) -> GradedElement {
        -&self
    }
}

/// A total characteristic class `1 + x_1 + x_2 + ... + x_n`, stored by
/// homogeneous components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSeries {
    ring: Ring,
    comps: Vec<GradedElement>,
}

impl ClassSeries {
    /// `comps[k]` must be homogeneous of degree `k` and `comps[0]` must be 1.
    /// Missing components are zero.
    pub fn new(ring: &Ring, comps: Vec<GradedElement>) -> Result<ClassSeries> {
        let n = ring.n as usize;
        let mut out = vec![ring.zero(); n + 1];
        out[0] = ring.one();
        if comps.first().map(|c| *c != ring.one()).unwrap_or(true) {
            return Err(Error::NotUnipotent);
        }
        for (k, c) in comps.into_iter().enumerate() {
            if !same_ring(c.ring(), ring) {
                return Err(Error::RingMismatch);
            }
            if !c.is_homogeneous_of(k as u32) {
                return Err(Error::InhomogeneousComponent { index: k });
            }
            if k <= n {
                out[k] = c;
            }
        }
        Ok(ClassSeries {
            ring: ring.clone(),
            comps: out,
        })
    }

    /// Splits a total class into homogeneous components.
    pub fn from_total(total: &GradedElement) -> Result<ClassSeries> {
        let ring = total.ring().clone();
        let comps = (0..=ring.n).map(|k| total.degree_part(k)).collect();
        Self::new(&ring, comps)
    }

    /// `1 + c1 + ... + c_min(rank, n)` using the generators named `c{k}`.
    pub fn chern(ring: &Ring, rank: u32) -> Result<ClassSeries> {
        let mut comps = vec![ring.one()];
        for k in 1..=rank.min(ring.n) {
            comps.push(ring.generator(&format!("c{k}"))?);
        }
        Self::new(ring, comps)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Component of degree `k`; 1 for `k = 0`, zero outside `0..=n`.
    pub fn component(&self, k: i64) -> GradedElement {
        if k < 0 || k as usize >= self.comps.len() {
            self.ring.zero()
        } else {
            self.comps[k as usize].clone()
        }
    }

    pub fn components(&self) -> &[GradedElement] {
        &self.comps
    }

    pub fn total(&self) -> GradedElement {
        self.comps.iter().fold(self.ring.zero(), |acc, c| &acc + c)
    }

    /// The multiplicative inverse series, `t` with `self · t = 1`.
    pub fn invert(&self) -> ClassSeries {
        let mut t: Vec<GradedElement> = vec![self.ring.one()];
        for k in 1..self.comps.len() {
            let mut acc = self.ring.zero();
            for j in 1..=k {
                acc = &acc + &(&self.comps[j] * &t[k - j]);
            }
            t.push(-acc);
        }
        ClassSeries {
            ring: self.ring.clone(),
            comps: t,
        }
    }

    /// Segre classes in the unsigned convention: `s_k = (-1)^k (1/c)_k`,
    /// so `s_1 = c_1` and `s_2 = c_1^2 - c_2`.
    pub fn unsigned_segre(&self) -> ClassSeries {
        let mut inv = self.invert();
        for (k, comp) in inv.comps.iter_mut().enumerate() {
            if k % 2 == 1 {
                *comp = -&*comp;
            }
        }
        inv
    }
}

/// Jacobi–Trudi determinant `det[c_{seq_i + j - i}]` of size `seq.len()`,
/// with `c_0 = 1` and `c_k = 0` outside `0..=n`.
///
/// `seq` need not be a partition; the determinant itself takes care of
/// signs and vanishing.
pub fn schur_det(seq: &[i64], c: &ClassSeries) -> GradedElement {
    let k = seq.len();
    if k == 0 {
        return c.ring.one();
    }
    assert!(k <= 63, "determinant too large");
    let entries: Vec<Vec<GradedElement>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| c.component(seq[i] + j as i64 - i as i64))
                .collect()
        })
        .collect();
    let mut memo: HashMap<u64, GradedElement> = HashMap::new();
    minor(&entries, 0, (1u64 << k) - 1, &mut memo, &c.ring)
}

// Laplace expansion along row `row` over the columns set in `cols`.
fn minor(
    entries: &[Vec<GradedElement>],
    row: usize,
    cols: u64,
    memo: &mut HashMap<u64, GradedElement>,
    ring: &Ring,
) -> GradedElement {
    if cols == 0 {
        return ring.one();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = ring.zero();
    let mut position = 0;
    for j in 0..entries.len() {
        if cols & (1 << j) == 0 {
            continue;
        }
        let entry = &entries[row][j];
        if !entry.is_zero() {
            let sub = minor(entries, row + 1, cols & !(1 << j), memo, ring);
            if !sub.is_zero() {
                let term = entry * &sub;
                acc = if position % 2 == 0 { &acc + &term } else { &acc - &term };
            }
        }
        position += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// `c2 - (r-1)/(2r) c1^2`.
pub fn discriminant(r: u32, c1: &GradedElement, c2: &GradedElement) -> Result<GradedElement> {
    if r == 0 {
        return Err(Error::InvalidSetup("discriminant needs positive rank".into()));
    }
    c1.expect_degree(1)?;
    c2.expect_degree(2)?;
    let coeff = rat(r as i64 - 1, 2 * r as i64);
    c2.try_sub(&c1.try_mul(c1)?.scale(&coeff))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> Ring {
        GeneratorTable::chern(2, 2)
    }

    #[test]
    fn unit_and_truncation() {
        let r = ring2();
        let c1 = r.generator("c1").unwrap();
        let c2 = r.generator("c2").unwrap();
        assert_eq!(&r.one() * &c1, c1);
        assert_eq!((&c1 * &c1).to_string(), "c1^2");
        assert!((&c1 * &c2).is_zero());
    }

    #[test]
    fn mixed_rings_rejected() {
        let a = GeneratorTable::chern(2, 2).generator("c1").unwrap();
        let b = GeneratorTable::chern(3, 3).generator("c1").unwrap();
        assert_eq!(a.try_mul(&b), Err(Error::RingMismatch));
        assert_eq!(a.try_add(&b), Err(Error::RingMismatch));
        // structurally identical tables are the same ring
        let c = GeneratorTable::chern(2, 2).generator("c1").unwrap();
        assert!(a.try_add(&c).is_ok());
    }

    #[test]
    fn duplicate_generators_rejected() {
        assert_eq!(
            GeneratorTable::new([("c1", 1), ("c1", 1)], 2).unwrap_err(),
            Error::DuplicateGenerator("c1".into())
        );
    }

    #[test]
    fn inversion_examples() {
        let r = ring2();
        let one = ClassSeries::new(&r, vec![r.one()]).unwrap();
        assert!(one.unsigned_segre().components()[1..].iter().all(|c| c.is_zero()));

        let c = ClassSeries::chern(&r, 2).unwrap();
        let s = c.unsigned_segre();
        assert_eq!(s.component(1).to_string(), "c1");
        assert_eq!(s.component(2).to_string(), "c1^2 - c2");

        let line = GeneratorTable::chern(1, 5);
        let s = ClassSeries::chern(&line, 1).unwrap().unsigned_segre();
        let c1 = line.generator("c1").unwrap();
        for k in 0..=5 {
            assert_eq!(s.component(k), c1.pow(k as u32));
        }
    }

    #[test]
    fn from_total_rejects_bad_constant() {
        let r = ring2();
        let c1 = r.generator("c1").unwrap();
        let two = r.constant(rat(2, 1));
        assert_eq!(ClassSeries::from_total(&(&two + &c1)), Err(Error::NotUnipotent));
        assert_eq!(ClassSeries::from_total(&c1), Err(Error::NotUnipotent));
        assert!(ClassSeries::from_total(&(&r.one() + &c1)).is_ok());
    }

    #[test]
    fn inhomogeneous_component_rejected() {
        let r = ring2();
        let c1 = r.generator("c1").unwrap();
        assert_eq!(
            ClassSeries::new(&r, vec![r.one(), c1.pow(2)]),
            Err(Error::InhomogeneousComponent { index: 1 })
        );
    }

    #[test]
    fn schur_det_examples() {
        let r = GeneratorTable::chern(4, 4);
        let c = ClassSeries::chern(&r, 4).unwrap();
        for k in 0..=4 {
            assert_eq!(schur_det(&[k], &c), c.component(k));
        }
        assert_eq!(schur_det(&[], &c), r.one());
        let s = c.unsigned_segre();
        assert_eq!(schur_det(&[1, 1], &s), c.component(2));
        // negative last entry gives a zero last row
        assert!(schur_det(&[2, -1], &c).is_zero());
        // (0, 2) straightens to -(1, 1)
        assert_eq!(schur_det(&[0, 2], &c), -schur_det(&[1, 1], &c));
    }

    #[test]
    fn schur_det_row_swap() {
        let r = GeneratorTable::chern(4, 4);
        let c = ClassSeries::chern(&r, 4).unwrap();
        // (a, b) -> (b - 1, a + 1) swaps the two rows
        for (a, b) in [(1, 2), (0, 3), (2, 2), (3, 0)] {
            assert_eq!(schur_det(&[a, b], &c), -schur_det(&[b - 1, a + 1], &c));
        }
        // equal rows: seq_{i+1} = seq_i + 1
        assert!(schur_det(&[1, 2], &c).is_zero());
        assert!(schur_det(&[0, 1, 3], &c).is_zero());
    }

    #[test]
    fn discriminant_examples() {
        let r = ring2();
        let c1 = r.generator("c1").unwrap();
        let c2 = r.generator("c2").unwrap();
        assert_eq!(discriminant(2, &c1, &c2).unwrap().to_string(), "-1/4*c1^2 + c2");
        assert_eq!(discriminant(1, &c1, &c2).unwrap(), c2);
        assert!(discriminant(3, &r.zero(), &r.zero()).unwrap().is_zero());
        assert!(discriminant(0, &c1, &c2).is_err());
        assert!(discriminant(2, &c2, &c2).is_err());
    }

    #[test]
    fn degree_part_examples() {
        let r = ring2();
        let c1 = r.generator("c1").unwrap();
        let c2 = r.generator("c2").unwrap();
        let a = &(&r.one() + &c1) + &c2;
        assert_eq!(a.degree_part(2), c2);
        assert!(c1.degree_part(0).is_zero());

        let rb = GeneratorTable::new([("c1", 1), ("c2", 2), ("b0", 0), ("b1", 1)], 2).unwrap();
        let [c1, c2, b0, b1] = ["c1", "c2", "b0", "b1"].map(|g| rb.generator(g).unwrap());
        let a = &(&b0 * &c2) + &(&b1 * &c1);
        assert_eq!(a.degree_part(2), a);
    }

    #[test]
    fn json_round_trip_and_order() {
        let r = ring2();
        let c1 = r.generator("c1").unwrap();
        let c2 = r.generator("c2").unwrap();
        let a = &(&c1 * &c1).scale(&rat(-1, 4)) + &c2;
        let v = a.to_json();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"[{"monomial":{"c1":2},"coeff":"-1/4"},{"monomial":{"c2":1},"coeff":"1"}]"#
        );
        assert_eq!(GradedElement::from_json(&r, &v).unwrap(), a);
        assert!(GradedElement::from_json(&r, &json!([{"monomial": {"x": 1}, "coeff": "1"}])).is_err());
    }

    #[test]
    fn substitute_specializes() {
        let src = GeneratorTable::new([("b0", 0), ("b1", 1), ("c1", 1)], 2).unwrap();
        let dst = GeneratorTable::chern(2, 2);
        let e = &(&src.generator("b0").unwrap() * &src.generator("c1").unwrap())
            + &src.generator("b1").unwrap();
        let out = e
            .substitute(&dst, &[("b0", dst.one()), ("b1", dst.zero())])
            .unwrap();
        assert_eq!(out, dst.generator("c1").unwrap());
    }
}
