//! Segre-class inequality expressions for classes on a projective bundle.
//!
//! For a class `[Z] = Σ_{i=0}^N π^*β_i · ξ^{N-i}` on `P(E)`, the quantities
//!
//! ```text
//! Σ_{i=0}^{r-1} β_i · s_{k-i}(E) · H^{n-k},   1 <= k <= n,
//! ```
//!
//! are formed symbolically in a ring with generators `b0..bN`, `c1..`, `H`
//! and evaluated against a table of intersection numbers. Terms with
//! `i > N` are absent since `β_i = 0` there.
//!
//! Nothing here decides whether the input data comes from an H-nef bundle;
//! [`check_inequalities`] only reports signs.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_json::Value;

use crate::chow::{parse_rational, ClassSeries, GeneratorTable, GradedElement, Monomial, Rational, Ring, RingExt};
use crate::error::{Error, Result};

fn check_params(r: u32, n: u32, codim: u32) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidSetup(format!("rank r = {r} must be at least 2")));
    }
    if n == 0 {
        return Err(Error::InvalidSetup("base dimension n must be positive".into()));
    }
    if codim == 0 || codim > r - 1 {
        return Err(Error::InvalidSetup(format!(
            "codimension N = {codim} must satisfy 1 <= N <= r - 1 = {}",
            r - 1
        )));
    }
    Ok(())
}

fn chern_names(r: u32, n: u32) -> Vec<(String, u32)> {
    (1..=r.min(n)).map(|k| (format!("c{k}"), k)).collect()
}

/// Ring with `b0..bN` (`deg b_i = i`), `c1..c_min(r,n)` and `H`, truncated
/// at `n`. Declaration order is also the key order of intersection tables.
pub fn segre_ring(r: u32, n: u32, codim: u32) -> Result<Ring> {
    check_params(r, n, codim)?;
    let mut gens: Vec<(String, u32)> = (0..=codim).map(|i| (format!("b{i}"), i)).collect();
    gens.extend(chern_names(r, n));
    gens.push(("H".into(), 1));
    GeneratorTable::new(gens.iter().map(|(s, d)| (s.as_str(), *d)), n)
}

/// Ring with only `c1..c_min(r,n)` and `H`.
pub fn classical_ring(r: u32, n: u32) -> Result<Ring> {
    let mut gens = chern_names(r, n);
    gens.push(("H".into(), 1));
    GeneratorTable::new(gens.iter().map(|(s, d)| (s.as_str(), *d)), n)
}

/// `Σ_i b_i · s_{k-i}(E) · H^{n-k}` with unsigned Segre classes expanded in
/// Chern generators.
pub fn segre_lhs_symbolic(r: u32, n: u32, k: u32, codim: u32) -> Result<GradedElement> {
    if k == 0 || k > n {
        return Err(Error::InvalidSetup(format!("k = {k} must satisfy 1 <= k <= n = {n}")));
    }
    let ring = segre_ring(r, n, codim)?;
    let segre = ClassSeries::chern(&ring, r)?.unsigned_segre();
    let h_power = ring.generator("H")?.pow(n - k);
    let mut out = ring.zero();
    for i in 0..=(r - 1).min(k) {
        // β_i vanishes past the codimension
        if i > codim {
            continue;
        }
        let beta = ring.generator(&format!("b{i}"))?;
        let term = &(&beta * &segre.component((k - i) as i64)) * &h_power;
        out = &out + &term;
    }
    Ok(out)
}

/// `s_k(E) · H^{n-k}` in [`classical_ring`].
pub fn classical_segre_term(r: u32, n: u32, k: u32) -> Result<GradedElement> {
    let ring = classical_ring(r, n)?;
    let segre = ClassSeries::chern(&ring, r)?.unsigned_segre();
    Ok(&segre.component(k as i64) * &ring.generator("H")?.pow(n - k))
}

/// Intersection numbers of top-degree monomials.
#[derive(Debug, Clone)]
pub struct IntersectionTable {
    ring: Ring,
    values: BTreeMap<Monomial, Rational>,
}

impl IntersectionTable {
    pub fn new(ring: &Ring) -> Self {
        IntersectionTable {
            ring: ring.clone(),
            values: BTreeMap::new(),
        }
    }

    /// Adds an entry; the key must name a monomial of degree exactly `n`.
    pub fn insert(&mut self, key: &str, value: Rational) -> Result<()> {
        let m = self.ring.parse_monomial(key)?;
        if m.degree() != self.ring.n() {
            return Err(Error::Parse(format!(
                "table key `{key}` has degree {}, expected {}",
                m.degree(),
                self.ring.n()
            )));
        }
        self.values.insert(m, value);
        Ok(())
    }

    /// Reads `{"b0*c1^2": "4", ...}`; values may be rational strings or
    /// integers.
    pub fn from_json(ring: &Ring, value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("intersection table must be a JSON object".into()))?;
        let mut table = Self::new(ring);
        for (key, v) in obj {
            let q = match v {
                Value::String(s) => parse_rational(s)?,
                Value::Number(num) => match num.as_i64() {
                    Some(i) => Rational::from_integer(i.into()),
                    None => return Err(Error::Parse(format!("non-integer number for `{key}`; use a \"p/q\" string"))),
                },
                _ => return Err(Error::Parse(format!("bad value for `{key}`"))),
            };
            table.insert(key, q)?;
        }
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Canonical keys `b0*c1*H` of the monomials in `expr`.
pub fn monomial_keys(expr: &GradedElement) -> Vec<String> {
    expr.terms().map(|(m, _)| expr.ring().monomial_key(m)).collect()
}

/// Linear evaluation of `expr` on `table`. Every monomial of `expr` must
/// be present; the error lists all that are not.
pub fn evaluate(expr: &GradedElement, table: &IntersectionTable) -> Result<Rational> {
    expr.try_add(&table.ring.zero())?;
    let keys = monomial_keys(expr);
    let mut missing = Vec::new();
    let mut total = Rational::zero();
    for ((m, q), key) in expr.terms().zip(keys) {
        match table.values.get(m) {
            Some(v) => total += q * v,
            None => missing.push(key),
        }
    }
    if missing.is_empty() {
        Ok(total)
    } else {
        Err(Error::MissingMonomials(missing))
    }
}

/// Every monomial appearing in some `k`-expression, in first-seen order.
pub fn required_monomials(r: u32, n: u32, codim: u32) -> Result<Vec<String>> {
    let mut out: Vec<String> = Vec::new();
    for k in 1..=n {
        for key in monomial_keys(&segre_lhs_symbolic(r, n, k, codim)?) {
            if !out.contains(&key) {
                out.push(key);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityValue {
    pub k: u32,
    pub expression: String,
    pub value: String,
    pub nonnegative: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub r: u32,
    pub n: u32,
    #[serde(rename = "N")]
    pub codim: u32,
    pub values: Vec<InequalityValue>,
    pub violations: Vec<u32>,
}

/// Evaluates every `k = 1..=n` expression on `table` and flags negative
/// values. Missing table entries across all `k` are reported together.
pub fn check_inequalities(
    r: u32,
    n: u32,
    codim: u32,
    table: &IntersectionTable,
) -> Result<InequalityReport> {
    let mut values = Vec::new();
    let mut missing: Vec<String> = Vec::new();
    for k in 1..=n {
        let expr = segre_lhs_symbolic(r, n, k, codim)?;
        match evaluate(&expr, table) {
            Ok(v) => values.push(InequalityValue {
                k,
                expression: expr.to_string(),
                nonnegative: !v.is_negative(),
                value: v.to_string(),
            }),
            Err(Error::MissingMonomials(keys)) => {
                for key in keys {
                    if !missing.contains(&key) {
                        missing.push(key);
                    }
                }
            }
            Err(e) => return Err(e),
        }
    }
    if !missing.is_empty() {
        return Err(Error::MissingMonomials(missing));
    }
    let violations = values.iter().filter(|v| !v.nonnegative).map(|v| v.k).collect();
    Ok(InequalityReport {
        r,
        n,
        codim,
        values,
        violations,
    })
}
