//! Exact reproductions of the push-forward identities.
//!
//! Every case compares two [`GradedElement`]s and passes iff their
//! difference is exactly zero. Scalar identities live in a ring with no
//! generators. Cases are independent, so [`run_suite`] evaluates them in
//! parallel and returns them in a fixed order.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::{Map, Value};

use crate::chow::{
    discriminant, parse_rational, rat, schur_det, ClassSeries, GeneratorTable, GradedElement,
    Rational, Ring, RingExt,
};
use crate::error::{Error, Result};
use crate::grass::GrassSetup;
use crate::ineq;
use crate::partition::{Partition, DEFAULT_SYT_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseKind {
    Delta,
    #[serde(rename = "f1f2")]
    F1F2,
    Corollary,
    GIdentities,
    Syt,
    Duality,
    Inversion,
    Segre,
    ClassicalSegre,
}

impl CaseKind {
    pub const ALL: [CaseKind; 9] = [
        CaseKind::Delta,
        CaseKind::F1F2,
        CaseKind::Corollary,
        CaseKind::GIdentities,
        CaseKind::Syt,
        CaseKind::Duality,
        CaseKind::Inversion,
        CaseKind::Segre,
        CaseKind::ClassicalSegre,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseKind::Delta => "delta",
            CaseKind::F1F2 => "f1f2",
            CaseKind::Corollary => "corollary",
            CaseKind::GIdentities => "g-identities",
            CaseKind::Syt => "syt",
            CaseKind::Duality => "duality",
            CaseKind::Inversion => "inversion",
            CaseKind::Segre => "segre",
            CaseKind::ClassicalSegre => "classical-segre",
        }
    }

    pub fn parse(s: &str) -> Result<CaseKind> {
        CaseKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = CaseKind::ALL.iter().map(|k| k.as_str()).collect();
                Error::Parse(format!("unknown case kind `{s}`; expected one of {}", names.join(", ")))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseId {
    pub kind: CaseKind,
    pub name: String,
    pub params: Map<String, Value>,
}

impl CaseId {
    fn new(kind: CaseKind, name: &str, params: &[(&str, Value)]) -> Self {
        CaseId {
            kind,
            name: name.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        }
    }

    pub fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Outcome of one exact comparison. `elapsed` is wall-clock time and is
/// left out of the serialized form so that reports are reproducible.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub case: CaseId,
    pub status: Status,
    #[serde(serialize_with = "as_text")]
    pub lhs: GradedElement,
    #[serde(serialize_with = "as_text")]
    pub rhs: GradedElement,
    #[serde(serialize_with = "as_text")]
    pub residual: GradedElement,
    #[serde(skip)]
    pub elapsed: Duration,
}

fn as_text<S: Serializer>(e: &GradedElement, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&e.to_string())
}

impl VerificationReport {
    pub fn new(case: CaseId, lhs: GradedElement, rhs: GradedElement) -> Self {
        let residual = &lhs - &rhs;
        let status = if residual.is_zero() { Status::Pass } else { Status::Fail };
        VerificationReport {
            case,
            status,
            lhs,
            rhs,
            residual,
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// The same comparison with `delta` added to the right-hand side. Used
    /// for negative controls.
    pub fn perturbed(&self, delta: &Rational) -> Self {
        let rhs = &self.rhs + &self.rhs.ring().constant(delta.clone());
        let mut out = Self::new(self.case.clone(), self.lhs.clone(), rhs);
        out.elapsed = self.elapsed;
        out
    }
}

fn scalar_ring() -> Ring {
    GeneratorTable::new([], 0).expect("empty table")
}

fn scalar(q: Rational) -> GradedElement {
    scalar_ring().constant(q)
}

fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from(v.into())
}

fn chern_setup(r: u32, n: u32) -> (Ring, ClassSeries, ClassSeries) {
    let ring = GeneratorTable::chern(r, n);
    let c = ClassSeries::chern(&ring, r).expect("chern ring has its generators");
    let s = c.unsigned_segre();
    (ring, c, s)
}

fn setup(n: u32, r: u32, d: u32) -> Result<GrassSetup> {
    GrassSetup::new(n, r, d)
}

/// `π_*(θ_d^m · [Z])` in degree 2 against
/// `-m(m+1)(m-1)/(r(r+1)(r-1)) · f^ε · β0 · Δ(E)`, with formal `β0`, `β1`.
///
/// The right-hand side has no `β1`, so a passing case also shows that
/// every `β1` monomial cancels; [`delta_engine_value`] exposes the raw
/// engine value for a direct check.
pub fn verify_delta(r: u32, d: u32) -> Result<VerificationReport> {
    let (lhs, rhs) = delta_sides(r, d)?;
    Ok(VerificationReport::new(
        CaseId::new(CaseKind::Delta, "delta", &[("r", r.into()), ("d", d.into())]),
        lhs,
        rhs,
    ))
}

/// Ring `b0, b1, c1, c2` used by the discriminant computation.
pub fn delta_ring() -> Ring {
    GeneratorTable::new([("b0", 0), ("b1", 1), ("c1", 1), ("c2", 2)], 2).expect("valid table")
}

/// Degree-2 part of `π_*(θ_d^m · (χ·β0 + β1))`.
pub fn delta_engine_value(r: u32, d: u32) -> Result<GradedElement> {
    let setup = setup(2, r, d)?;
    let ring = delta_ring();
    let c1 = ring.generator("c1")?;
    let (b0, b1) = (ring.generator("b0")?, ring.generator("b1")?);
    let segre = ClassSeries::chern(&ring, r)?.unsigned_segre();
    let z = setup.leray_hirsch_divisor(&b0, &b1)?;
    let integrand = setup.theta(&c1)?.power(setup.m())?.try_mul(&z)?;
    Ok(setup.pushforward(&integrand, &segre)?.degree_part(2))
}

fn delta_sides(r: u32, d: u32) -> Result<(GradedElement, GradedElement)> {
    let lhs = delta_engine_value(r, d)?;
    let ring = lhs.ring().clone();
    let setup = setup(2, r, d)?;
    let (m, ri) = (setup.m() as i64, r as i64);
    let f_eps = int(setup.eps().syt_count_formula());
    let coeff = -rat(m * (m + 1) * (m - 1), ri * (ri + 1) * (ri - 1)) * f_eps;
    let disc = discriminant(r, &ring.generator("c1")?, &ring.generator("c2")?)?;
    let rhs = (&ring.generator("b0")? * &disc).scale(&coeff);
    Ok((lhs, rhs))
}

/// The three low push-forwards `π_*χ^{m-1}`, `π_*χ^m`, `π_*χ^{m+1}` on a
/// surface base.
pub fn verify_f1_f2(r: u32, d: u32) -> Result<Vec<VerificationReport>> {
    let setup = setup(2, r, d)?;
    let (ring, c, segre) = chern_setup(r, 2);
    let (m, ri, di) = (setup.m(), r as i64, d as i64);
    let mi = m as i64;
    let f_eps = int(setup.eps().syt_count_formula());
    let chi = setup.chi(&ring);
    let push = |k: u32| -> Result<GradedElement> { setup.pushforward(&chi.power(k)?, &segre) };
    let c1 = c.component(1);
    let c2 = c.component(2);
    let params = [("r", Value::from(r)), ("d", Value::from(d))];

    let low = VerificationReport::new(
        CaseId::new(CaseKind::F1F2, "f1.chi^(m-1)", &params),
        push(m - 1)?,
        ring.constant(f_eps.clone()),
    );
    let mid = VerificationReport::new(
        CaseId::new(CaseKind::F1F2, "f1.chi^m", &params),
        push(m)?,
        c1.scale(&(&f_eps * rat(mi * di, ri))),
    );
    let row_coeff = &f_eps * rat(mi * (mi + 1) * di * (di + 1), 2 * ri * (ri + 1));
    let col_coeff = &f_eps * rat(mi * (mi + 1) * di * (di - 1), 2 * ri * (ri - 1));
    let expected = &(&(&c1 * &c1) - &c2).scale(&row_coeff) + &c2.scale(&col_coeff);
    let high = VerificationReport::new(
        CaseId::new(CaseKind::F1F2, "f2.chi^(m+1)", &params),
        push(m + 1)?,
        expected,
    );
    Ok(vec![low, mid, high])
}

/// Pieri-route `π_*χ^N` against the tableau-count closed form.
pub fn verify_corollary_chi(r: u32, d: u32, n: u32, power: u32) -> Result<VerificationReport> {
    let setup = setup(n, r, d)?;
    let (ring, _, segre) = chern_setup(r, n);
    let lhs = setup.pushforward(&setup.chi(&ring).power(power)?, &segre)?;
    let rhs = setup.pushforward_chi_power_closedform(power, &segre);
    Ok(VerificationReport::new(
        CaseId::new(
            CaseKind::Corollary,
            "corollary",
            &[("r", r.into()), ("d", d.into()), ("n", n.into()), ("N", power.into())],
        ),
        lhs,
        rhs,
    ))
}

/// The `f`-number identities, three cases per `(r, d)`.
pub fn verify_f_identities(r: u32, d: u32) -> Result<Vec<VerificationReport>> {
    let ids = setup(0, r, d)?.f_identities();
    let params = [("r", Value::from(r)), ("d", Value::from(d))];
    Ok([
        ("g1.eps+1", ids.plus_box),
        ("g1.eps+p(2)", ids.plus_column),
        ("g2.eps+2", ids.plus_row),
    ]
    .into_iter()
    .map(|(name, id)| {
        VerificationReport::new(
            CaseId::new(CaseKind::GIdentities, name, &params),
            scalar(id.lhs),
            scalar(id.rhs),
        )
    })
    .collect())
}

/// Tableau count by formula vs. brute force, and the corner-removal
/// recursion on brute-force counts.
pub fn verify_syt(lambda: &Partition) -> Result<Vec<VerificationReport>> {
    let params = [("partition", Value::from(lambda.to_string()))];
    let brute = |p: &Partition| p.syt_count_bruteforce(DEFAULT_SYT_CAP).map(int);
    let mut out = vec![VerificationReport::new(
        CaseId::new(CaseKind::Syt, "syt.formula", &params),
        scalar(int(lambda.syt_count_formula())),
        scalar(brute(lambda)?),
    )];
    if !lambda.is_empty() {
        let mut sum = Rational::zero();
        for smaller in lambda.remove_corner() {
            sum += brute(&smaller)?;
        }
        out.push(VerificationReport::new(
            CaseId::new(CaseKind::Syt, "syt.recursion", &params),
            scalar(brute(lambda)?),
            scalar(sum),
        ));
    }
    Ok(out)
}

/// `Δ_{λ̄}(c) = Δ_λ(s)` over a generic Chern series of rank `n`.
pub fn verify_duality(lambda: &Partition, n: u32) -> Result<VerificationReport> {
    if lambda.weight() as u32 > n {
        return Err(Error::InvalidSetup(format!(
            "|λ| = {} exceeds n = {n}",
            lambda.weight()
        )));
    }
    let (_, c, s) = chern_setup(n, n);
    let conj = lambda.conjugate();
    Ok(VerificationReport::new(
        CaseId::new(
            CaseKind::Duality,
            "duality",
            &[("partition", lambda.to_string().into()), ("n", n.into())],
        ),
        schur_det(&conj.padded(conj.len()), &c),
        schur_det(&lambda.padded(lambda.len()), &s),
    ))
}

/// `c · c^{-1} = 1` for a generic Chern series of rank `n`.
pub fn verify_inversion(n: u32) -> Result<VerificationReport> {
    let (ring, c, _) = chern_setup(n, n);
    Ok(VerificationReport::new(
        CaseId::new(CaseKind::Inversion, "inversion", &[("n", n.into())]),
        &c.total() * &c.invert().total(),
        ring.one(),
    ))
}

/// On `P(E)`: `π_*ξ^{r-1+i} = s_i(E)`.
pub fn verify_segre_identity(r: u32, i: u32) -> Result<VerificationReport> {
    let n = i.max(1);
    let setup = setup(n, r, 1)?;
    let (ring, _, segre) = chern_setup(r, n);
    let lhs = setup.pushforward(&setup.chi(&ring).power(r - 1 + i)?, &segre)?;
    Ok(VerificationReport::new(
        CaseId::new(CaseKind::Segre, "segre", &[("r", r.into()), ("i", i.into())]),
        lhs,
        segre.component(i as i64),
    ))
}

/// With `β0 = 1` and `β_i = 0` for `i > 0`, the inequality expression is
/// `s_k(E)·H^{n-k}`.
pub fn verify_classical_segre(r: u32, n: u32, k: u32) -> Result<VerificationReport> {
    let codim = r - 1;
    let target = ineq::classical_ring(r, n)?;
    let expr = ineq::segre_lhs_symbolic(r, n, k, codim)?;
    let mut images = vec![("b0".to_string(), target.one())];
    for i in 1..=codim {
        images.push((format!("b{i}"), target.zero()));
    }
    let images: Vec<(&str, GradedElement)> =
        images.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
    Ok(VerificationReport::new(
        CaseId::new(
            CaseKind::ClassicalSegre,
            "classical-segre",
            &[("r", r.into()), ("n", n.into()), ("k", k.into())],
        ),
        expr.substitute(&target, &images)?,
        ineq::classical_segre_term(r, n, k)?,
    ))
}

/// Adds `by` to the right-hand side of every case of `kind`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Perturbation {
    pub kind: CaseKind,
    pub by: String,
}

/// Parameter ranges of a suite run. Every field has a default, so `{}` is
/// the full default sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    /// Case kinds to run; `None` runs all of them.
    pub only: Option<Vec<CaseKind>>,
    pub r_min: u32,
    pub r_max: u32,
    /// Restrict rank-indexed cases to this `r`.
    pub r: Option<u32>,
    /// Restrict Grassmannian cases to this `d`.
    pub d: Option<u32>,
    pub corollary_n: u32,
    /// Corollary powers run over `0..=d(r-d) + corollary_extra`.
    pub corollary_extra: u32,
    pub g_r_max: u32,
    pub syt_max_weight: u32,
    pub duality_max_weight: u32,
    pub inversion_degree: u32,
    pub segre_i_max: u32,
    pub classical_r_max: u32,
    pub classical_n_max: u32,
    pub perturb: Option<Perturbation>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            only: None,
            r_min: 2,
            r_max: 6,
            r: None,
            d: None,
            corollary_n: 4,
            corollary_extra: 4,
            g_r_max: 8,
            syt_max_weight: 8,
            duality_max_weight: 5,
            inversion_degree: 6,
            segre_i_max: 4,
            classical_r_max: 4,
            classical_n_max: 4,
            perturb: None,
        }
    }
}

impl SuiteConfig {
    /// A config that runs nothing.
    pub fn empty() -> Self {
        SuiteConfig {
            only: Some(Vec::new()),
            ..Self::default()
        }
    }

    fn runs(&self, kind: CaseKind) -> bool {
        self.only.as_ref().is_none_or(|ks| ks.contains(&kind))
    }

    fn ranks(&self, max: u32) -> Vec<u32> {
        (self.r_min.max(2)..=max)
            .filter(|r| self.r.is_none_or(|want| want == *r))
            .collect()
    }

    fn quotient_ranks(&self, r: u32) -> Vec<u32> {
        (1..r).filter(|d| self.d.is_none_or(|want| want == *d)).collect()
    }
}

#[derive(Debug, Clone)]
enum CaseSpec {
    Delta(u32, u32),
    F1F2(u32, u32),
    Corollary(u32, u32, u32, u32),
    GIdentities(u32, u32),
    Syt(Partition),
    Duality(Partition, u32),
    Inversion(u32),
    Segre(u32, u32),
    ClassicalSegre(u32, u32, u32),
}

fn plan(config: &SuiteConfig) -> Vec<CaseSpec> {
    let mut cases = Vec::new();
    if config.runs(CaseKind::Delta) {
        for r in config.ranks(config.r_max) {
            for d in config.quotient_ranks(r) {
                cases.push(CaseSpec::Delta(r, d));
            }
        }
    }
    if config.runs(CaseKind::F1F2) {
        for r in config.ranks(config.r_max) {
            for d in config.quotient_ranks(r) {
                cases.push(CaseSpec::F1F2(r, d));
            }
        }
    }
    if config.runs(CaseKind::Corollary) {
        for r in config.ranks(config.r_max) {
            for d in config.quotient_ranks(r) {
                for power in 0..=d * (r - d) + config.corollary_extra {
                    cases.push(CaseSpec::Corollary(r, d, config.corollary_n, power));
                }
            }
        }
    }
    if config.runs(CaseKind::GIdentities) {
        for r in config.ranks(config.g_r_max) {
            for d in config.quotient_ranks(r) {
                cases.push(CaseSpec::GIdentities(r, d));
            }
        }
    }
    if config.runs(CaseKind::Syt) {
        for w in 0..=config.syt_max_weight as usize {
            for p in Partition::all_of_weight(w, w) {
                cases.push(CaseSpec::Syt(p));
            }
        }
    }
    if config.runs(CaseKind::Duality) {
        let n = config.duality_max_weight;
        for w in 0..=n as usize {
            for p in Partition::all_of_weight(w, w) {
                cases.push(CaseSpec::Duality(p, n));
            }
        }
    }
    if config.runs(CaseKind::Inversion) {
        for n in 0..=config.inversion_degree {
            cases.push(CaseSpec::Inversion(n));
        }
    }
    if config.runs(CaseKind::Segre) {
        for r in config.ranks(config.r_max) {
            for i in 0..=config.segre_i_max {
                cases.push(CaseSpec::Segre(r, i));
            }
        }
    }
    if config.runs(CaseKind::ClassicalSegre) {
        for r in config.ranks(config.classical_r_max) {
            for n in 1..=config.classical_n_max {
                for k in 1..=n {
                    cases.push(CaseSpec::ClassicalSegre(r, n, k));
                }
            }
        }
    }
    cases
}

fn run_case(spec: &CaseSpec) -> Result<Vec<VerificationReport>> {
    let start = Instant::now();
    let mut reports = match spec {
        CaseSpec::Delta(r, d) => vec![verify_delta(*r, *d)?],
        CaseSpec::F1F2(r, d) => verify_f1_f2(*r, *d)?,
        CaseSpec::Corollary(r, d, n, k) => vec![verify_corollary_chi(*r, *d, *n, *k)?],
        CaseSpec::GIdentities(r, d) => verify_f_identities(*r, *d)?,
        CaseSpec::Syt(p) => verify_syt(p)?,
        CaseSpec::Duality(p, n) => vec![verify_duality(p, *n)?],
        CaseSpec::Inversion(n) => vec![verify_inversion(*n)?],
        CaseSpec::Segre(r, i) => vec![verify_segre_identity(*r, *i)?],
        CaseSpec::ClassicalSegre(r, n, k) => vec![verify_classical_segre(*r, *n, *k)?],
    };
    let per_case = start.elapsed() / reports.len().max(1) as u32;
    for rep in &mut reports {
        rep.elapsed = per_case;
    }
    Ok(reports)
}

/// Runs every configured case; output order depends only on `config`.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let perturb = match &config.perturb {
        Some(p) => Some((p.kind, parse_rational(&p.by)?)),
        None => None,
    };
    let specs = plan(config);
    let batches: Vec<Vec<VerificationReport>> = specs
        .par_iter()
        .map(run_case)
        .collect::<Result<_>>()?;
    let cases: Vec<VerificationReport> = batches
        .into_iter()
        .flatten()
        .map(|rep| match &perturb {
            Some((kind, by)) if *kind == rep.case.kind => rep.perturbed(by),
            _ => rep,
        })
        .collect();
    Ok(SuiteReport::new(cases))
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub all_pass: bool,
    pub cases: Vec<VerificationReport>,
}

impl SuiteReport {
    pub fn new(cases: Vec<VerificationReport>) -> Self {
        let passed = cases.iter().filter(|c| c.passed()).count();
        SuiteReport {
            total: cases.len(),
            passed,
            failed: cases.len() - passed,
            all_pass: passed == cases.len(),
            cases,
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text table; failing rows also show both sides.
    pub fn render_table(&self, timings: bool) -> String {
        let mut out = String::new();
        let width = self
            .cases
            .iter()
            .map(|c| c.case.name.len() + c.case.params_text().len() + 1)
            .max()
            .unwrap_or(0);
        for c in &self.cases {
            let label = format!("{} {}", c.case.name, c.case.params_text());
            let status = if c.passed() { "PASS" } else { "FAIL" };
            let _ = write!(out, "{status}  {label:<width$}  residual: {}", c.residual);
            if timings {
                let _ = write!(out, "  ({:.3} ms)", c.elapsed.as_secs_f64() * 1e3);
            }
            out.push('\n');
            if !c.passed() {
                let _ = writeln!(out, "      lhs: {}", c.lhs);
                let _ = writeln!(out, "      rhs: {}", c.rhs);
            }
        }
        let _ = writeln!(
            out,
            "{} cases, {} passed, {} failed",
            self.total, self.passed, self.failed
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_low_rank_values() {
        let rep = verify_delta(2, 1).unwrap();
        assert!(rep.passed(), "{}", rep.residual);
        assert_eq!(rep.lhs.to_string(), "1/4*b0*c1^2 - b0*c2");
        let rep = verify_delta(3, 1).unwrap();
        assert!(rep.passed());
        // coefficient -1 on b0·Δ(E) = b0·(c2 - c1²/3)
        assert_eq!(rep.lhs.to_string(), "1/3*b0*c1^2 - b0*c2");
    }

    #[test]
    fn delta_engine_value_is_beta1_free() {
        for (r, d) in [(2, 1), (3, 2), (4, 2)] {
            assert!(!delta_engine_value(r, d).unwrap().involves("b1"));
        }
    }

    #[test]
    fn f1_f2_low_rank() {
        let reps = verify_f1_f2(2, 1).unwrap();
        assert!(reps.iter().all(|r| r.passed()));
        let texts: Vec<String> = reps.iter().map(|r| r.lhs.to_string()).collect();
        assert_eq!(texts, vec!["1", "c1", "c1^2 - c2"]);
        let reps = verify_f1_f2(4, 2).unwrap();
        assert!(reps.iter().all(|r| r.passed()));
        assert_eq!(reps[1].lhs.to_string(), "5*c1");
    }

    #[test]
    fn corollary_edges() {
        let rep = verify_corollary_chi(3, 1, 2, 1).unwrap();
        assert!(rep.passed() && rep.lhs.is_zero());
        let rep = verify_corollary_chi(4, 2, 2, 4).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.lhs.to_string(), "2");
        assert!(verify_corollary_chi(5, 2, 4, 8).unwrap().passed());
    }

    #[test]
    fn duality_examples() {
        let rep = verify_duality(&Partition::row(1), 1).unwrap();
        assert_eq!(rep.lhs.to_string(), "c1");
        let rep = verify_duality(&Partition::column(2), 2).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.lhs.to_string(), "c2");
        let rep = verify_duality(&"[2,1]".parse().unwrap(), 3).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.lhs.to_string(), "c1*c2 - c3");
        assert!(verify_duality(&Partition::row(3), 2).is_err());
    }

    #[test]
    fn segre_identity_examples() {
        let texts: Vec<String> = (0..=2)
            .map(|i| verify_segre_identity(3, i).unwrap().lhs.to_string())
            .collect();
        assert_eq!(texts, vec!["1", "c1", "c1^2 - c2"]);
    }

    #[test]
    fn perturbation_fails_with_residual() {
        let rep = verify_delta(2, 1).unwrap().perturbed(&rat(1, 7));
        assert!(!rep.passed());
        assert_eq!(rep.residual.to_string(), "-1/7");
    }

    #[test]
    fn empty_sweep() {
        let rep = run_suite(&SuiteConfig::empty()).unwrap();
        assert_eq!(rep.total, 0);
        assert!(rep.all_pass);
    }

    #[test]
    fn only_filter_selects_single_case() {
        let config = SuiteConfig {
            only: Some(vec![CaseKind::Delta]),
            r: Some(2),
            d: Some(1),
            ..SuiteConfig::default()
        };
        let rep = run_suite(&config).unwrap();
        assert_eq!(rep.total, 1);
        assert_eq!(rep.cases[0].case.name, "delta");
    }

    #[test]
    fn config_parsing() {
        let c: SuiteConfig = serde_json::from_str(r#"{"only": ["delta", "g-identities"], "r_max": 3}"#).unwrap();
        assert_eq!(c.only, Some(vec![CaseKind::Delta, CaseKind::GIdentities]));
        assert_eq!(c.r_max, 3);
        assert_eq!(c.corollary_n, 4);
        assert!(serde_json::from_str::<SuiteConfig>(r#"{"bogus": 1}"#).is_err());
        assert!(serde_json::from_str::<SuiteConfig>(r#"{"only": ["nope"]}"#).is_err());
        assert_eq!(CaseKind::parse("f1f2").unwrap(), CaseKind::F1F2);
        assert!(CaseKind::parse("f3").is_err());
    }
}
