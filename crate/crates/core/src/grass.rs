//! Classes on a Grassmann bundle `Gr_d(E) -> X` and their push-forward.
//!
//! A [`FiberedClass`] is a finite sum `Σ α_μ ⊗ Δ_μ(s(Q))` where `Q` is the
//! rank-`d` universal quotient, `α_μ` lives in the base ring and `Δ_μ(s(Q))`
//! is the Schur class of `Q` for a partition `μ` of length at most `d`.
//! Since `c1(Q) = s1(Q)`, the class `χ = c1(Q)` is the single basis term
//! `μ = (1)`, and multiplying by `χ` is the one-box Pieri rule.
//!
//! Push-forward acts termwise by `Δ_μ(s(Q)) ↦ Δ_{μ-ε}(s(E))`, where `ε` is
//! the `d × (r-d)` rectangle.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::chow::{rat, schur_det, ClassSeries, GradedElement, Rational, Ring, RingExt};
use crate::error::{Error, Result};
use crate::partition::{syt_count_bounded, Partition};

/// Base dimension `n`, rank `r` of `E` and quotient rank `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSetup")]
pub struct GrassSetup {
    pub n: u32,
    pub r: u32,
    pub d: u32,
}

#[derive(Deserialize)]
struct RawSetup {
    n: u32,
    r: u32,
    d: u32,
}

impl TryFrom<RawSetup> for GrassSetup {
    type Error = Error;
    fn try_from(raw: RawSetup) -> Result<Self> {
        GrassSetup::new(raw.n, raw.r, raw.d)
    }
}

impl GrassSetup {
    pub fn new(n: u32, r: u32, d: u32) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidSetup(format!("rank r = {r} must be at least 2")));
        }
        if d == 0 || d >= r {
            return Err(Error::InvalidSetup(format!(
                "quotient rank d = {d} must satisfy 0 < d < r = {r}"
            )));
        }
        Ok(GrassSetup { n, r, d })
    }

    /// Relative dimension `d(r-d)`.
    pub fn reldim(&self) -> u32 {
        self.d * (self.r - self.d)
    }

    /// `m = d(r-d) + 1`.
    pub fn m(&self) -> u32 {
        self.reldim() + 1
    }

    /// The rectangle `ε`: `d` parts equal to `r - d`.
    pub fn eps(&self) -> Partition {
        Partition::rectangle(self.d as usize, (self.r - self.d) as usize)
    }

    /// `χ = c1(Q)`.
    pub fn chi(&self, ring: &Ring) -> FiberedClass {
        FiberedClass::basis(ring, self.d, Partition::row(1), ring.one())
            .expect("(1) has length 1")
    }

    /// `θ_d = χ - (d/r) π^* c1(E)`.
    pub fn theta(&self, c1: &GradedElement) -> Result<FiberedClass> {
        c1.expect_degree(1)?;
        let ring = c1.ring();
        let mut out = self.chi(ring);
        out.insert(
            Partition::empty(),
            -c1.scale(&rat(self.d as i64, self.r as i64)),
        );
        Ok(out)
    }

    /// Divisor class `χ·π^*β0 + π^*β1`.
    pub fn leray_hirsch_divisor(
        &self,
        beta0: &GradedElement,
        beta1: &GradedElement,
    ) -> Result<FiberedClass> {
        beta0.expect_degree(0)?;
        beta1.expect_degree(1)?;
        beta0.try_add(beta1)?;
        let mut out = FiberedClass::zero(beta0.ring(), self.d);
        out.insert(Partition::row(1), beta0.clone());
        out.insert(Partition::empty(), beta1.clone());
        Ok(out)
    }

    /// On a projective bundle (`d = 1`), the class `Σ_i π^*β_i · ξ^{N-i}`
    /// with `N = betas.len() - 1` and `deg β_i = i`.
    pub fn d1_polynomial_class(&self, betas: &[GradedElement]) -> Result<FiberedClass> {
        if self.d != 1 {
            return Err(Error::InvalidSetup(format!(
                "polynomial classes in ξ need d = 1, got d = {}",
                self.d
            )));
        }
        let Some(first) = betas.first() else {
            return Err(Error::InvalidSetup("need at least β0".into()));
        };
        let codim = betas.len() - 1;
        if codim == 0 || codim as u32 > self.r - 1 {
            return Err(Error::InvalidSetup(format!(
                "codimension N = {codim} must satisfy 1 <= N <= r - 1 = {}",
                self.r - 1
            )));
        }
        let mut out = FiberedClass::zero(first.ring(), 1);
        for (i, beta) in betas.iter().enumerate() {
            beta.expect_degree(i as u32)?;
            let b = out.ring.zero().try_add(beta)?;
            out.insert(Partition::row(codim - i), b);
        }
        Ok(out)
    }

    /// Push-forward to the base: `α ⊗ Δ_μ ↦ α · Δ_{μ-ε}(s(E))`, with `μ`
    /// zero-padded to length `d`. `segre` holds the unsigned Segre classes
    /// of `E`.
    pub fn pushforward(&self, class: &FiberedClass, segre: &ClassSeries) -> Result<GradedElement> {
        if class.d != self.d {
            return Err(Error::InvalidSetup(format!(
                "class lives on Gr_{} but setup has d = {}",
                class.d, self.d
            )));
        }
        let ring = segre.ring();
        let n = ring.n() as usize;
        let reldim = self.reldim() as usize;
        let eps = self.eps().padded(self.d as usize);
        let mut out = ring.zero();
        for (mu, alpha) in &class.terms {
            // Δ_{μ-ε} has degree |μ| - d(r-d); anything above n is truncated.
            if mu.weight() > reldim + n {
                continue;
            }
            let seq: Vec<i64> = mu
                .padded(self.d as usize)
                .iter()
                .zip(&eps)
                .map(|(a, b)| a - b)
                .collect();
            let delta = schur_det(&seq, segre);
            out = out.try_add(&alpha.try_mul(&delta)?)?;
        }
        Ok(out)
    }

    /// `π_* χ^N = Σ_{|λ| = N - d(r-d), ℓ(λ) <= d} f^{λ+ε} Δ_λ(s(E))`.
    ///
    /// Zero below the relative dimension and above `d(r-d) + n`.
    pub fn pushforward_chi_power_closedform(&self, power: u32, segre: &ClassSeries) -> GradedElement {
        let ring = segre.ring();
        let mut out = ring.zero();
        if power < self.reldim() || power - self.reldim() > ring.n() {
            return out;
        }
        let d = self.d as usize;
        let eps = self.eps();
        for lambda in Partition::all_of_weight((power - self.reldim()) as usize, d) {
            let shape = lambda.add(&eps, d).expect("length <= d");
            let f = Rational::from(syt_count_bounded(&shape, d));
            let delta = schur_det(&lambda.padded(lambda.len()), segre);
            out = &out + &delta.scale(&f);
        }
        out
    }

    /// Both sides of the three `f`-number identities relating `f^{ε+λ}` to
    /// `f^ε` for `λ = (1), (1,1), (2)`.
    pub fn f_identities(&self) -> FIdentities {
        let d = self.d as usize;
        let (m, r, dd) = (self.m() as i64, self.r as i64, self.d as i64);
        let eps = self.eps();
        let f_eps = BigInt::from(eps.syt_count_formula());
        let f_of = |extra: Partition| -> Rational {
            match extra.add(&eps, d) {
                Ok(shape) => Rational::from(BigInt::from(shape.syt_count_formula())),
                // ε + λ needs more than d rows: no such Schur term
                Err(_) => Rational::zero(),
            }
        };
        let base = Rational::from(f_eps.clone());
        FIdentities {
            f_eps,
            plus_box: Identity {
                lhs: f_of(Partition::row(1)),
                rhs: &base * rat(m * dd, r),
            },
            plus_column: Identity {
                lhs: f_of(Partition::column(2)),
                rhs: &base * rat(m * (m + 1) * dd * (dd - 1), 2 * r * (r - 1)),
            },
            plus_row: Identity {
                lhs: f_of(Partition::row(2)),
                rhs: &base * rat(m * (m + 1) * dd * (dd + 1), 2 * r * (r + 1)),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub lhs: Rational,
    pub rhs: Rational,
}

impl Identity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `f^{ε+1} = (md/r) f^ε`, `f^{ε+p(2)} = m(m+1)d(d-1)/(2r(r-1)) f^ε`,
/// `f^{ε+2} = m(m+1)d(d+1)/(2r(r+1)) f^ε`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FIdentities {
    pub f_eps: BigInt,
    pub plus_box: Identity,
    pub plus_column: Identity,
    pub plus_row: Identity,
}

/// A base-linear combination of Schur classes of the universal quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberedClass {
    ring: Ring,
    d: u32,
    terms: BTreeMap<Partition, GradedElement>,
}

impl FiberedClass {
    pub fn zero(ring: &Ring, d: u32) -> Self {
        FiberedClass {
            ring: ring.clone(),
            d,
            terms: BTreeMap::new(),
        }
    }

    /// The unit class `1 ⊗ Δ_∅`.
    pub fn unit(ring: &Ring, d: u32) -> Self {
        let mut out = Self::zero(ring, d);
        out.insert(Partition::empty(), ring.one());
        out
    }

    pub fn basis(ring: &Ring, d: u32, mu: Partition, coeff: GradedElement) -> Result<Self> {
        let mut out = Self::zero(ring, d);
        out.checked_insert(mu, coeff)?;
        Ok(out)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn quotient_rank(&self) -> u32 {
        self.d
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &GradedElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mu: &Partition) -> GradedElement {
        self.terms.get(mu).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    // Callers guarantee len(mu) <= d and the ring matches.
    fn insert(&mut self, mu: Partition, coeff: GradedElement) {
        debug_assert!(mu.len() <= self.d as usize);
        if coeff.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&mu) {
            Some(prev) => &prev + &coeff,
            None => coeff,
        };
        if !sum.is_zero() {
            self.terms.insert(mu, sum);
        }
    }

    fn checked_insert(&mut self, mu: Partition, coeff: GradedElement) -> Result<()> {
        if mu.len() > self.d as usize {
            return Err(Error::PartitionTooLong {
                partition: mu.to_string(),
                len: mu.len(),
                max: self.d as usize,
            });
        }
        let coeff = self.ring.zero().try_add(&coeff)?;
        self.insert(mu, coeff);
        Ok(())
    }

    fn check_compatible(&self, other: &FiberedClass) -> Result<()> {
        if self.d != other.d {
            return Err(Error::InvalidSetup(format!(
                "quotient ranks differ: {} vs {}",
                self.d, other.d
            )));
        }
        self.ring.zero().try_add(&other.ring.zero()).map(|_| ())
    }

    pub fn try_add(&self, other: &FiberedClass) -> Result<FiberedClass> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (mu, a) in &other.terms {
            out.insert(mu.clone(), a.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, q: &Rational) -> FiberedClass {
        let mut out = Self::zero(&self.ring, self.d);
        for (mu, a) in &self.terms {
            out.insert(mu.clone(), a.scale(q));
        }
        out
    }

    /// Multiplication by `χ`: the one-box Pieri rule, dropping shapes with
    /// more than `d` rows.
    pub fn mul_by_chi(&self) -> FiberedClass {
        let mut out = Self::zero(&self.ring, self.d);
        for (mu, a) in &self.terms {
            for nu in mu.pieri_add_box(self.d as usize) {
                out.insert(nu, a.clone());
            }
        }
        out
    }

    /// Multiplication by the pullback of a base class.
    pub fn mul_by_pullback(&self, alpha: &GradedElement) -> Result<FiberedClass> {
        let mut out = Self::zero(&self.ring, self.d);
        for (mu, a) in &self.terms {
            out.insert(mu.clone(), a.try_mul(alpha)?);
        }
        Ok(out)
    }

    /// Whether the class is `a·χ + π^*α`.
    pub fn is_affine_in_chi(&self) -> bool {
        self.terms.keys().all(|mu| mu.weight() <= 1)
    }

    /// Product with another class. Supported when one factor is affine in
    /// `χ`, or on a projective bundle where every Schur class is a power of
    /// `ξ`.
    pub fn try_mul(&self, other: &FiberedClass) -> Result<FiberedClass> {
        self.check_compatible(other)?;
        if other.is_affine_in_chi() {
            let chi_part = self.mul_by_chi().mul_by_pullback(&other.coeff(&Partition::row(1)))?;
            let base_part = self.mul_by_pullback(&other.coeff(&Partition::empty()))?;
            return chi_part.try_add(&base_part);
        }
        if self.is_affine_in_chi() {
            return other.try_mul(self);
        }
        if self.d == 1 {
            let mut out = Self::zero(&self.ring, 1);
            for (a, x) in &self.terms {
                for (b, y) in &other.terms {
                    out.insert(Partition::row(a.weight() + b.weight()), x.try_mul(y)?);
                }
            }
            return Ok(out);
        }
        Err(Error::UnsupportedProduct(
            "general Schur products need Littlewood-Richardson coefficients".into(),
        ))
    }

    /// `(a·χ + π^*α)^N`, expanded binomially with iterated Pieri steps.
    pub fn power(&self, exponent: u32) -> Result<FiberedClass> {
        if !self.is_affine_in_chi() {
            return Err(Error::UnsupportedProduct(
                "power() needs a class of the form a·χ + π^*α".into(),
            ));
        }
        let a = self.coeff(&Partition::row(1));
        let alpha = self.coeff(&Partition::empty());
        let mut out = Self::zero(&self.ring, self.d);
        let mut chi_k = Self::unit(&self.ring, self.d);
        for k in 0..=exponent {
            let c = binomial(BigInt::from(exponent), BigInt::from(k));
            let coeff = (&a.pow(k) * &alpha.pow(exponent - k)).scale(&Rational::from(c));
            out = out.try_add(&chi_k.mul_by_pullback(&coeff)?)?;
            if k < exponent {
                chi_k = chi_k.mul_by_chi();
            }
        }
        Ok(out)
    }

    /// JSON form: `[{"mu": [2,1], "coeff": <graded element>}, ...]`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(mu, a)| json!({ "mu": mu, "coeff": a.to_json() }))
                .collect(),
        )
    }

    pub fn from_json(ring: &Ring, d: u32, value: &Value) -> Result<FiberedClass> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::Parse("fibered class must be a JSON array".into()))?;
        let mut out = Self::zero(ring, d);
        for item in items {
            let mu: Partition = serde_json::from_value(
                item.get("mu")
                    .cloned()
                    .ok_or_else(|| Error::Parse("term is missing `mu`".into()))?,
            )
            .map_err(|e| Error::Parse(format!("bad `mu`: {e}")))?;
            let coeff = GradedElement::from_json(
                ring,
                item.get("coeff")
                    .ok_or_else(|| Error::Parse("term is missing `coeff`".into()))?,
            )?;
            out.checked_insert(mu, coeff)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::GeneratorTable;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn base(r: u32, n: u32) -> (Ring, ClassSeries) {
        let ring = GeneratorTable::chern(r, n);
        let s = ClassSeries::chern(&ring, r).unwrap().unsigned_segre();
        (ring, s)
    }

    #[test]
    fn setup_validation() {
        assert!(GrassSetup::new(2, 1, 1).is_err());
        assert!(GrassSetup::new(2, 3, 0).is_err());
        assert!(GrassSetup::new(2, 3, 3).is_err());
        let s = GrassSetup::new(2, 5, 2).unwrap();
        assert_eq!(s.eps(), p(&[3, 3]));
        assert_eq!(s.m(), 7);
        assert_eq!(s.eps().weight() as u32, s.reldim());
        assert!(serde_json::from_str::<GrassSetup>(r#"{"n":2,"r":2,"d":2}"#).is_err());
    }

    #[test]
    fn chi_is_single_box() {
        let s = GrassSetup::new(2, 3, 2).unwrap();
        let (ring, _) = base(3, 2);
        let chi = s.chi(&ring);
        assert_eq!(chi.terms().count(), 1);
        assert_eq!(chi.coeff(&p(&[1])), ring.one());
    }

    #[test]
    fn theta_examples() {
        let (ring, _) = base(3, 2);
        let c1 = ring.generator("c1").unwrap();
        let s = GrassSetup::new(2, 3, 2).unwrap();
        assert_eq!(s.theta(&ring.zero()).unwrap(), s.chi(&ring));
        let t = s.theta(&c1).unwrap();
        assert_eq!(t.coeff(&Partition::empty()), c1.scale(&rat(-2, 3)));
        let t = GrassSetup::new(2, 2, 1).unwrap().theta(&c1).unwrap();
        assert_eq!(t.coeff(&Partition::empty()), c1.scale(&rat(-1, 2)));
        assert!(s.theta(&ring.one()).is_err());
    }

    #[test]
    fn mul_by_chi_examples() {
        let (ring, _) = base(3, 2);
        let unit = FiberedClass::unit(&ring, 2);
        assert_eq!(unit.mul_by_chi(), GrassSetup::new(2, 3, 2).unwrap().chi(&ring));
        let xi3 = FiberedClass::basis(&ring, 1, p(&[3]), ring.one()).unwrap();
        assert_eq!(
            xi3.mul_by_chi(),
            FiberedClass::basis(&ring, 1, p(&[4]), ring.one()).unwrap()
        );
        let sq = FiberedClass::basis(&ring, 2, p(&[1]), ring.one()).unwrap().mul_by_chi();
        assert_eq!(sq.coeff(&p(&[2])), ring.one());
        assert_eq!(sq.coeff(&p(&[1, 1])), ring.one());
        assert_eq!(sq.terms().count(), 2);
    }

    #[test]
    fn mul_by_pullback_examples() {
        let ring = GeneratorTable::new([("c1", 1), ("c2", 2), ("b0", 0)], 2).unwrap();
        let s = GrassSetup::new(2, 3, 1).unwrap();
        let f = s.chi(&ring).power(2).unwrap();
        assert_eq!(f.mul_by_pullback(&ring.one()).unwrap(), f);
        assert!(f.mul_by_pullback(&ring.zero()).unwrap().is_zero());
        let b0 = ring.generator("b0").unwrap();
        let g = f.mul_by_pullback(&b0).unwrap();
        assert_eq!(g.coeff(&p(&[2])), b0);
        let other = GeneratorTable::chern(5, 5).one();
        assert!(f.mul_by_pullback(&other).is_err());
    }

    #[test]
    fn power_examples() {
        let (ring, _) = base(4, 2);
        let s1 = GrassSetup::new(2, 4, 1).unwrap();
        assert_eq!(s1.chi(&ring).power(0).unwrap(), FiberedClass::unit(&ring, 1));
        assert_eq!(
            s1.chi(&ring).power(5).unwrap(),
            FiberedClass::basis(&ring, 1, p(&[5]), ring.one()).unwrap()
        );
        let s2 = GrassSetup::new(2, 4, 2).unwrap();
        let sq = s2.chi(&ring).power(2).unwrap();
        assert_eq!(sq.coeff(&p(&[2])), ring.one());
        assert_eq!(sq.coeff(&p(&[1, 1])), ring.one());
        // power of a non-affine class is refused
        assert!(sq.power(2).is_err());
    }

    #[test]
    fn pushforward_examples_f1() {
        for (r, d) in [(2, 1), (3, 1), (3, 2), (4, 2), (5, 2)] {
            let setup = GrassSetup::new(2, r, d).unwrap();
            let (ring, segre) = base(r, 2);
            let chi = setup.chi(&ring);
            let f_eps = Rational::from(BigInt::from(setup.eps().syt_count_formula()));
            let m = setup.m();
            let low = setup.pushforward(&chi.power(m - 1).unwrap(), &segre).unwrap();
            assert_eq!(low, ring.constant(f_eps.clone()));
            let high = setup.pushforward(&chi.power(m).unwrap(), &segre).unwrap();
            let c1 = ring.generator("c1").unwrap();
            assert_eq!(high, c1.scale(&(f_eps * rat((m * d) as i64, r as i64))));
            for below in 0..setup.reldim() {
                assert!(setup
                    .pushforward(&chi.power(below).unwrap(), &segre)
                    .unwrap()
                    .is_zero());
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        let setup = GrassSetup::new(2, 4, 1).unwrap();
        let (ring, segre) = base(4, 2);
        for i in 0..=2 {
            assert_eq!(
                setup.pushforward_chi_power_closedform(3 + i, &segre),
                segre.component(i as i64)
            );
        }
        assert!(setup.pushforward_chi_power_closedform(2, &segre).is_zero());
        assert!(setup.pushforward_chi_power_closedform(6, &segre).is_zero());
        let _ = ring;
    }

    #[test]
    fn f_identity_examples() {
        let ids = GrassSetup::new(2, 2, 1).unwrap().f_identities();
        assert_eq!(ids.plus_box.lhs, rat(1, 1));
        assert_eq!(ids.plus_box.rhs, rat(1, 1));
        assert_eq!(ids.plus_column.lhs, rat(0, 1));
        assert!(ids.plus_column.holds());
        let ids = GrassSetup::new(2, 3, 1).unwrap().f_identities();
        assert!(ids.plus_box.holds());
        assert_eq!(ids.plus_box.rhs, rat(1, 1));
        let ids = GrassSetup::new(2, 4, 2).unwrap().f_identities();
        assert_eq!(ids.f_eps, BigInt::from(2));
        assert_eq!(ids.plus_box.lhs, rat(5, 1));
        assert_eq!(ids.plus_box.rhs, rat(5, 1));
        assert_eq!(ids.plus_row.lhs, rat(9, 1));
        assert!(ids.plus_row.holds() && ids.plus_column.holds());
    }

    #[test]
    fn leray_hirsch_examples() {
        let ring = GeneratorTable::new([("c1", 1), ("b0", 0), ("b1", 1), ("H", 1)], 2).unwrap();
        let s = GrassSetup::new(2, 3, 2).unwrap();
        assert_eq!(
            s.leray_hirsch_divisor(&ring.one(), &ring.zero()).unwrap(),
            s.chi(&ring)
        );
        let h = ring.generator("H").unwrap();
        let z = s.leray_hirsch_divisor(&ring.zero(), &h).unwrap();
        assert_eq!(z.coeff(&Partition::empty()), h);
        assert_eq!(z.terms().count(), 1);
        assert!(s.leray_hirsch_divisor(&h, &h).is_err());
        assert!(s.leray_hirsch_divisor(&ring.one(), &ring.one()).is_err());
    }

    #[test]
    fn d1_polynomial_class_examples() {
        let ring = GeneratorTable::new([("b0", 0), ("b1", 1), ("b2", 2)], 2).unwrap();
        let [b0, b1, b2] = ["b0", "b1", "b2"].map(|g| ring.generator(g).unwrap());
        let s = GrassSetup::new(2, 4, 1).unwrap();
        assert_eq!(
            s.d1_polynomial_class(&[b0.clone(), b1.clone()]).unwrap(),
            s.leray_hirsch_divisor(&b0, &b1).unwrap()
        );
        let z = s.d1_polynomial_class(&[b0.clone(), b1.clone(), b2.clone()]).unwrap();
        assert_eq!(z.coeff(&p(&[2])), b0);
        assert_eq!(z.coeff(&p(&[1])), b1);
        assert_eq!(z.coeff(&Partition::empty()), b2);
        let zeros = vec![ring.zero(); 3];
        assert!(s.d1_polynomial_class(&zeros).unwrap().is_zero());
        assert!(s.d1_polynomial_class(&[b1.clone(), b1.clone()]).is_err());
        assert!(GrassSetup::new(2, 4, 2).unwrap().d1_polynomial_class(&[b0, b1]).is_err());
        assert!(GrassSetup::new(2, 2, 1)
            .unwrap()
            .d1_polynomial_class(&[ring.one(), ring.zero(), ring.zero()])
            .is_err());
    }

    #[test]
    fn products() {
        let (ring, _) = base(4, 2);
        let s = GrassSetup::new(2, 4, 2).unwrap();
        let chi = s.chi(&ring);
        let sq = chi.power(2).unwrap();
        assert_eq!(sq.try_mul(&chi).unwrap(), chi.power(3).unwrap());
        assert_eq!(chi.try_mul(&sq).unwrap(), chi.power(3).unwrap());
        assert!(sq.try_mul(&sq).is_err());
        let s1 = GrassSetup::new(2, 4, 1).unwrap();
        let xi2 = s1.chi(&ring).power(2).unwrap();
        assert_eq!(xi2.try_mul(&xi2).unwrap(), s1.chi(&ring).power(4).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let (ring, _) = base(3, 2);
        let s = GrassSetup::new(2, 3, 2).unwrap();
        let c1 = ring.generator("c1").unwrap();
        let f = s.theta(&c1).unwrap().power(3).unwrap();
        let v = f.to_json();
        assert_eq!(FiberedClass::from_json(&ring, 2, &v).unwrap(), f);
        let too_long = json!([{ "mu": [1, 1, 1], "coeff": [{"monomial": {}, "coeff": "1"}] }]);
        assert!(matches!(
            FiberedClass::from_json(&ring, 2, &too_long),
            Err(Error::PartitionTooLong { .. })
        ));
    }
}
