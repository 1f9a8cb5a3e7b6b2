//! Formula-versus-oracle comparisons and the spec samplers they draw from.
//!
//! Every check is a pure job; [`run`] fans the jobs out with [`crate::par`]
//! and keeps the records in job order, so a report is deterministic for a
//! given configuration.

pub mod sample;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{gcd, lcm, mult_order, pow_mod};
use crate::closed_form::{
    finite_cohomology, q8_h2_action, vz_cohomology, CohClass, DerivedInvariants, Ring, Symbol,
};
use crate::error::{Error, Result};
use crate::group::{validate, CheckedSpec, Family, GroupSpec, ThetaSpec};
use crate::linalg::FinAb;
use crate::oracle::{stated_cup_oracle, Limits, Oracle};
use crate::par::{self, Mode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "MISMATCH",
            Verdict::Skipped => "skipped",
        })
    }
}

/// Groups of checks selectable with `--only`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// `H^n` of finite kernels.
    Groups,
    /// Cohomology with twisted `Z_a` coefficients.
    Twisted,
    /// Induced actions of the twist.
    Action,
    /// `H^n` of the infinite groups via invariants and coinvariants.
    Fz,
    /// Products `H^2 × H^2 → H^4` of finite kernels.
    Ring,
    /// The family-1 cup table against the cochain-level products.
    Cup,
    /// Periodicity at group and ring level.
    Period,
}

impl CheckKind {
    pub const ALL: [CheckKind; 7] = [
        CheckKind::Groups,
        CheckKind::Twisted,
        CheckKind::Action,
        CheckKind::Fz,
        CheckKind::Ring,
        CheckKind::Cup,
        CheckKind::Period,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::Groups => "groups",
            CheckKind::Twisted => "twisted",
            CheckKind::Action => "action",
            CheckKind::Fz => "fz",
            CheckKind::Ring => "ring",
            CheckKind::Cup => "cup",
            CheckKind::Period => "period",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::validation(format!("check kind in {:?}", CheckKind::ALL.map(|k| k.name()))))
    }
}

/// A deliberate error injected into the formula side, to show that the
/// harness reports disagreements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Perturbation {
    /// `A_j` computed from `c_a^j + 1` instead of `c_a^j - 1`.
    FlipGcd,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub kind: CheckKind,
    pub spec: String,
    pub item: String,
    pub formula: String,
    pub oracle: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    fn compare(kind: CheckKind, spec: String, item: String, formula: String, oracle: String) -> Self {
        let verdict = if formula == oracle {
            Verdict::Match
        } else {
            Verdict::Mismatch
        };
        Check {
            kind,
            spec,
            item,
            formula,
            oracle,
            verdict,
            note: None,
        }
    }

    fn skipped(kind: CheckKind, spec: String, item: String, reason: String) -> Self {
        Check {
            kind,
            spec,
            item,
            formula: String::new(),
            oracle: String::new(),
            verdict: Verdict::Skipped,
            note: Some(reason),
        }
    }

    /// Turns an oracle-side failure into a record: capacity and unsupported
    /// cases are skips, anything else a mismatch.
    fn from_error(kind: CheckKind, spec: String, item: String, formula: String, e: Error) -> Self {
        match e {
            Error::Capacity { .. } | Error::Unsupported(_) => {
                Check::skipped(kind, spec, item, e.to_string())
            }
            e => Check {
                kind,
                spec,
                item,
                formula,
                oracle: format!("error: {e}"),
                verdict: Verdict::Mismatch,
                note: None,
            },
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub matched: usize,
    pub mismatched: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl VerifyReport {
    fn new(checks: Vec<Check>) -> Self {
        let count = |v| checks.iter().filter(|c| c.verdict == v).count();
        let summary = Summary {
            total: checks.len(),
            matched: count(Verdict::Match),
            mismatched: count(Verdict::Mismatch),
            skipped: count(Verdict::Skipped),
        };
        VerifyReport { checks, summary }
    }

    pub fn is_success(&self) -> bool {
        self.summary.mismatched == 0
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Mismatch)
    }

    pub fn skipped(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Skipped)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Caps for the oracle; larger groups or degrees are skipped.
    pub limits: Limits,
    /// Number of sampled specs per family for `cup` and `period`.
    pub samples: usize,
    pub seed: u64,
    pub only: Option<CheckKind>,
    pub family: Option<Family>,
    pub perturbation: Option<Perturbation>,
    pub mode: Mode,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            limits: Limits {
                max_order: 32,
                max_degree: 6,
                ..Limits::default()
            },
            samples: 20,
            seed: 0x5eed,
            only: None,
            family: None,
            perturbation: None,
            mode: Mode::default_mode(),
        }
    }
}

type Job = Box<dyn Fn() -> Vec<Check> + Send + Sync>;

/// Runs the configured grid.
pub fn run(config: &VerifyConfig) -> VerifyReport {
    let jobs = jobs(config);
    let checks = par::map_with(config.mode, &jobs, |job| job());
    VerifyReport::new(checks.into_iter().flatten().collect())
}

fn wanted(config: &VerifyConfig, kind: CheckKind) -> bool {
    config.only.is_none_or(|k| k == kind)
}

fn in_family(config: &VerifyConfig, s: &CheckedSpec) -> bool {
    config.family.is_none_or(|f| s.spec.family() == f)
}

fn checked(spec: GroupSpec, theta: Option<ThetaSpec>) -> CheckedSpec {
    validate(spec, theta).expect("grid specs are valid")
}

/// Finite kernels of both families.
pub fn finite_grid() -> Vec<CheckedSpec> {
    [
        GroupSpec::Cyclic { m: 5 },
        GroupSpec::Cyclic { m: 12 },
        GroupSpec::Metacyclic { a: 7, b: 3, r: 2 },
        GroupSpec::Metacyclic { a: 5, b: 4, r: 2 },
        GroupSpec::Metacyclic { a: 9, b: 2, r: 8 },
        GroupSpec::Quaternion { i: 3 },
        GroupSpec::Quaternion { i: 4 },
        GroupSpec::Quaternion { i: 5 },
        GroupSpec::ZbTimesQ { b: 3, i: 3 },
        GroupSpec::ZaZbQ {
            a: 5,
            b: 3,
            i: 3,
            r: 1,
            r_x: 4,
            r_y: 4,
        },
    ]
    .into_iter()
    .map(|s| checked(s, None))
    .collect()
}

/// Twisted specs small enough for the oracle, covering each case of the
/// quaternion action.
pub fn twisted_grid() -> Vec<CheckedSpec> {
    let meta = |a, b, r, c, c_a, c_b| {
        checked(
            GroupSpec::Metacyclic { a, b, r },
            Some(ThetaSpec::metacyclic(c, c_a, c_b)),
        )
    };
    let q = |i, theta| checked(GroupSpec::Quaternion { i }, Some(theta));
    let zq = |theta| checked(GroupSpec::ZbTimesQ { b: 3, i: 3 }, Some(theta));
    vec![
        meta(7, 3, 2, 0, 1, 1),
        meta(7, 3, 2, 0, 2, 1),
        meta(7, 3, 2, 1, 4, 1),
        meta(7, 3, 2, 0, 6, 1),
        meta(5, 4, 2, 0, 2, 1),
        meta(9, 2, 8, 0, 2, 1),
        checked(GroupSpec::Cyclic { m: 12 }, Some(ThetaSpec::metacyclic(0, 1, 5))),
        checked(GroupSpec::Cyclic { m: 12 }, Some(ThetaSpec::metacyclic(0, 1, 11))),
        q(3, ThetaSpec::standard(1, 1, 3, 0)),
        q(3, ThetaSpec::standard(1, 1, 1, 1)),
        q(3, ThetaSpec::general((0, 1), (1, 0))),
        q(3, ThetaSpec::general((0, 1), (1, 1))),
        q(4, ThetaSpec::standard(1, 1, 3, 2)),
        q(4, ThetaSpec::standard(1, 1, 1, 1)),
        q(4, ThetaSpec::standard(1, 1, 5, 1)),
        q(4, ThetaSpec::standard(1, 1, 7, 0)),
        zq(ThetaSpec::standard(1, 2, 1, 0)),
        zq(ThetaSpec::standard(1, 2, 3, 1)),
        zq(ThetaSpec::standard(1, 1, 5, 0)),
    ]
}

fn jobs(config: &VerifyConfig) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    let limits = config.limits;
    let top = limits.max_degree;
    if wanted(config, CheckKind::Groups) {
        for s in finite_grid().into_iter().filter(|s| in_family(config, s)) {
            jobs.push(Box::new(move || groups_checks(&s, limits)));
        }
    }
    if wanted(config, CheckKind::Ring) {
        for s in finite_grid().into_iter().filter(|s| in_family(config, s)) {
            jobs.push(Box::new(move || vec![ring_check(&s, limits)]));
        }
    }
    if wanted(config, CheckKind::Twisted) && config.family != Some(Family::Metacyclic) {
        jobs.push(Box::new(move || twisted_checks(limits)));
    }
    for s in twisted_grid().into_iter().filter(|s| in_family(config, s)) {
        if wanted(config, CheckKind::Action) && s.spec.family() == Family::Quaternionic {
            let s = s.clone();
            jobs.push(Box::new(move || action_checks(&s, limits)));
        }
        if wanted(config, CheckKind::Fz) {
            let s = s.clone();
            let perturb = config.perturbation;
            jobs.push(Box::new(move || fz_checks(&s, top, limits, perturb)));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let family_one: Vec<CheckedSpec> = (0..config.samples)
        .map(|_| sample::metacyclic(&mut rng, 50, 10))
        .collect();
    let family_two: Vec<CheckedSpec> = (0..config.samples)
        .map(|_| sample::quaternionic(&mut rng, 15, 7))
        .collect();
    if config.family != Some(Family::Quaternionic) {
        if wanted(config, CheckKind::Cup) {
            for s in family_one.clone() {
                jobs.push(Box::new(move || cup_checks(&s)));
            }
        }
        if wanted(config, CheckKind::Period) {
            for s in family_one {
                jobs.push(Box::new(move || period_checks(&s)));
            }
        }
    }
    if config.family != Some(Family::Metacyclic) && wanted(config, CheckKind::Period) {
        for s in family_two {
            jobs.push(Box::new(move || period_checks(&s)));
        }
    }
    jobs
}

fn spec_label(s: &CheckedSpec) -> String {
    match &s.theta {
        None => s.spec.to_string(),
        Some(t) => format!("{} ⋊ Z, {}", s.spec, theta_label(t)),
    }
}

fn theta_label(t: &ThetaSpec) -> String {
    use crate::group::QuaternionTwist::*;
    let base = format!("c={} c_a={} c_b={}", t.c, t.c_a, t.c_b);
    match t.twist {
        Standard { k: 1, ell: 0 } => base,
        Standard { k, ell } => format!("{base} k={k} ℓ={ell}"),
        General { x_image, y_image } => format!(
            "{base} x↦x^{}y^{} y↦x^{}y^{}",
            x_image.0, x_image.1, y_image.0, y_image.1
        ),
    }
}

fn oracle_for(s: &CheckedSpec, top: usize, limits: Limits) -> Result<Oracle> {
    let order = s.spec.order() as usize;
    if order > limits.max_order {
        return Err(Error::Capacity {
            what: format!("oracle for a group of order {order}"),
            size: order,
            limit: limits.max_order,
        });
    }
    // cohomology in degree n needs the resolution through n + 1
    let limits = Limits {
        max_degree: limits.max_degree + 1,
        ..limits
    };
    Oracle::new(s, top.min(limits.max_degree), limits)
}

fn groups_checks(s: &CheckedSpec, limits: Limits) -> Vec<Check> {
    let label = spec_label(s);
    let top = limits.max_degree;
    let oracle = oracle_for(s, top + 1, limits);
    (0..=top)
        .map(|n| {
            let item = format!("H^{n}");
            let formula = finite_cohomology(s, n as u64).group.to_string();
            let got = oracle.as_ref().map_err(Clone::clone).and_then(|o| o.integral(n));
            match got {
                Ok(h) => Check::compare(CheckKind::Groups, label.clone(), item, formula, h.group().to_string()),
                Err(e) => Check::from_error(CheckKind::Groups, label.clone(), item, formula, e),
            }
        })
        .collect()
}

/// `Z_a` twisted by `Z_b × Q_8` through `(r, r_x, r_y)^j` on `Z_3 × Q_8`:
/// its cohomology is `Z_{ε_j}` in degree 0 and vanishes above.
fn twisted_checks(limits: Limits) -> Vec<Check> {
    let s = checked(GroupSpec::ZbTimesQ { b: 3, i: 3 }, None);
    let label = "Z_3 × Q_8 with Z̃_5 (r=1, r_x=r_y=4)".to_string();
    let oracle = oracle_for(&s, 4, limits);
    let mut out = Vec::new();
    for j in [1u64, 2] {
        // ε_j = gcd(5, r^j - 1, r_x^j - 1, r_y^j - 1)
        let eps = [1u64, 4, 4]
            .into_iter()
            .fold(5, |e, x| gcd(e, (pow_mod(x, j, 5) + 4) % 5));
        for p in 0..=3usize {
            let item = format!("H^{p}, j={j}");
            let formula = if p == 0 { FinAb::cyclic(eps) } else { FinAb::trivial() }.to_string();
            let got = oracle
                .as_ref()
                .map_err(Clone::clone)
                .and_then(|o| o.cohomology(&o.twisted_coefficients(5, (1, 4, 4), j)?, p));
            out.push(match got {
                Ok(h) => Check::compare(CheckKind::Twisted, label.clone(), item, formula, h.group().to_string()),
                Err(e) => Check::from_error(CheckKind::Twisted, label.clone(), item, formula, e),
            });
        }
    }
    out
}

/// Basis-free summary of the action on `H^2 = Z_{ε_1} ⊕ Z_b ⊕ Z_2^2`: its
/// order and its invariants.
fn action_checks(s: &CheckedSpec, limits: Limits) -> Vec<Check> {
    let label = spec_label(s);
    let theta = s.theta_or_identity();
    let inv = DerivedInvariants::new(s);
    let t = q8_h2_action(&theta);
    let mut out = Vec::new();
    let oracle = oracle_for(s, 5, limits);
    let eps = inv.ladder(1);
    let order = [
        t.order(),
        mult_order(inv.c_a % eps, eps).unwrap_or(1),
        mult_order(inv.c_b, inv.b).unwrap_or(1),
    ]
    .into_iter()
    .fold(1, lcm);
    let fixed = FinAb::from_cyclic_orders(
        0,
        [inv.a_j(1), inv.b_j(1)]
            .into_iter()
            .chain(std::iter::repeat_n(2, t.fixed_rank() as usize)),
    );
    let formula2 = format!("order {order}, invariants {fixed}");
    let got = oracle.as_ref().map_err(Clone::clone).and_then(|o| {
        let a = o.induced_action(2)?;
        let order = a.order(64).map_or("?".to_string(), |k| k.to_string());
        Ok(format!("order {order}, invariants {}", a.invariants()?))
    });
    out.push(match got {
        Ok(v) => Check::compare(CheckKind::Action, label.clone(), "θ^* on H^2".into(), formula2, v),
        Err(e) => Check::from_error(CheckKind::Action, label.clone(), "θ^* on H^2".into(), formula2, e),
    });
    // on H^4 = Z_{2^i} (times Z_b) the twist multiplies by k^2 on the 2-part
    let two_i = inv.two_i();
    let formula4 = FinAb::from_cyclic_orders(0, [inv.b_j(2), inv.c_j(2)]).to_string();
    let got = oracle
        .as_ref()
        .map_err(Clone::clone)
        .and_then(|o| o.induced_action(4)?.invariants());
    let item = format!("invariants of θ^* on H^4 (2^i = {two_i})");
    out.push(match got {
        Ok(v) => Check::compare(CheckKind::Action, label.clone(), item, formula4, v.to_string()),
        Err(e) => Check::from_error(CheckKind::Action, label, item, formula4, e),
    });
    out
}

/// The formula for `H^n(F ⋊ Z)`, optionally perturbed.
pub fn formula_fz(s: &CheckedSpec, n: u64, perturbation: Option<Perturbation>) -> FinAb {
    let g = vz_cohomology(s, n);
    match perturbation {
        None => g.group,
        Some(Perturbation::FlipGcd) => {
            let inv = DerivedInvariants::new(s);
            let j = n / 2;
            let orders = g.summands.iter().map(|sm| {
                if n >= 2 && sm.name == format!("Z_{{A_{j}}}") {
                    let plus = (pow_mod(inv.c_a, j, inv.a) + 1) % inv.a;
                    gcd(plus, inv.ladder(j))
                } else {
                    sm.order
                }
            });
            let free = g.summands.iter().filter(|sm| sm.order == 0).count();
            FinAb::from_cyclic_orders(free, orders.filter(|&o| o != 0))
        }
    }
}

fn fz_checks(s: &CheckedSpec, top: usize, limits: Limits, perturb: Option<Perturbation>) -> Vec<Check> {
    let label = spec_label(s);
    let oracle = oracle_for(s, top + 1, limits);
    (0..=top)
        .map(|n| {
            let item = format!("H^{n}");
            let formula = formula_fz(s, n as u64, perturb).to_string();
            let got = oracle.as_ref().map_err(Clone::clone).and_then(|o| o.fz_cohomology(n));
            match got {
                Ok(h) => Check::compare(CheckKind::Fz, label.clone(), item, formula, h.to_string()),
                Err(e) => Check::from_error(CheckKind::Fz, label.clone(), item, formula, e),
            }
        })
        .collect()
}

/// Order of an element of `⊕ Z_{o_i}` with coordinates `c_i`.
fn element_order(coords: &[BigInt], orders: &[BigInt]) -> BigInt {
    coords
        .iter()
        .zip(orders)
        .map(|(c, o)| if o.is_zero() { BigInt::zero() } else { o / c.gcd(o) })
        .fold(BigInt::from(1), |acc, x| if x.is_zero() || acc.is_zero() { BigInt::zero() } else { acc.lcm(&x) })
}

/// All coefficient tuples of `⊕ Z_{o_i}`.
fn tuples(orders: &[u64]) -> Vec<Vec<u64>> {
    orders.iter().fold(vec![Vec::new()], |acc, &o| {
        acc.into_iter()
            .flat_map(|t| {
                (0..o.max(1)).map(move |c| {
                    let mut t = t.clone();
                    t.push(c);
                    t
                })
            })
            .collect()
    })
}

/// Histogram of orders of `x ⌣ y` over all ordered pairs in `H^2 × H^2`,
/// a basis-independent fingerprint of the product.
type Histogram = BTreeMap<u64, usize>;

fn render_histogram(h: &Histogram) -> String {
    h.iter()
        .map(|(o, c)| format!("{c}×ord{o}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn formula_histogram(s: &CheckedSpec) -> Result<Histogram> {
    let ring = Ring::finite(s);
    let gens: Vec<Symbol> = ring
        .generators(4)?
        .into_iter()
        .filter(|g| g.degree() == 2)
        .collect();
    let orders: Vec<u64> = gens.iter().map(|&g| ring.order(g)).collect::<Result<_>>()?;
    let elems = tuples(&orders);
    let class = |t: &[u64]| ring.class(2, gens.iter().zip(t).map(|(&g, &c)| (g, c as i64)));
    let mut hist = Histogram::new();
    for x in &elems {
        for y in &elems {
            let p = ring.cup(&class(x)?, &class(y)?)?;
            let ord = p.terms.iter().try_fold(1u64, |acc, (&sym, &c)| {
                let o = ring.order(sym)?;
                Ok::<u64, Error>(lcm(acc, o / gcd(c, o)))
            })?;
            *hist.entry(ord).or_insert(0) += 1;
        }
    }
    Ok(hist)
}

fn oracle_histogram(s: &CheckedSpec, limits: Limits) -> Result<Histogram> {
    let o = oracle_for(s, 5, limits)?;
    let h2 = o.integral(2)?;
    let h4 = o.integral(4)?;
    let reps = h2.representatives().to_vec();
    let orders4 = h4.orders();
    let mut cmp = o.comparison();
    // products of basis classes; the rest follows by bilinearity
    let mut table = vec![vec![Vec::new(); reps.len()]; reps.len()];
    for (i, x) in reps.iter().enumerate() {
        for (j, y) in reps.iter().enumerate() {
            table[i][j] = h4.classify(&cmp.cup(x, 2, y, 2)?)?;
        }
    }
    let orders2: Vec<u64> = h2
        .orders()
        .iter()
        .map(|o| o.to_u64().ok_or_else(|| Error::Unsupported("free H^2".into())))
        .collect::<Result<_>>()?;
    let elems = tuples(&orders2);
    let mut hist = Histogram::new();
    for x in &elems {
        for y in &elems {
            let mut coords = vec![BigInt::zero(); orders4.len()];
            for (i, &xi) in x.iter().enumerate() {
                for (j, &yj) in y.iter().enumerate() {
                    for (c, t) in coords.iter_mut().zip(&table[i][j]) {
                        *c += t * (xi * yj);
                    }
                }
            }
            let ord = element_order(&coords, &orders4)
                .to_u64()
                .ok_or_else(|| Error::Unsupported("order overflow".into()))?;
            *hist.entry(ord).or_insert(0) += 1;
        }
    }
    Ok(hist)
}

fn ring_check(s: &CheckedSpec, limits: Limits) -> Check {
    let label = spec_label(s);
    let item = "orders of H^2 ⌣ H^2 → H^4".to_string();
    let formula = match formula_histogram(s) {
        Ok(h) => render_histogram(&h),
        Err(e) => format!("error: {e}"),
    };
    match oracle_histogram(s, limits) {
        Ok(h) => Check::compare(CheckKind::Ring, label, item, formula, render_histogram(&h)),
        Err(e) => Check::from_error(CheckKind::Ring, label, item, formula, e),
    }
}

/// The fourteen rules of the family-1 table as functions of `(i, j)`.
pub fn cup_rules() -> [(&'static str, fn(u64, u64) -> (Symbol, Symbol)); 14] {
    use Symbol::*;
    [
        ("φ_a^i ⌣ η", |i, _| (A(i), Eta)),
        ("φ_b^i ⌣ η", |i, _| (B(i), Eta)),
        ("ψ_a^i ⌣ η", |i, _| (EtaA(i), Eta)),
        ("ψ_b^i ⌣ η", |i, _| (EtaB(i), Eta)),
        ("φ_a^i ⌣ φ_a^j", |i, j| (A(i), A(j))),
        ("φ_b^i ⌣ φ_b^j", |i, j| (B(i), B(j))),
        ("φ_a^i ⌣ φ_b^j", |i, j| (A(i), B(j))),
        ("φ_a^i ⌣ ψ_a^j", |i, j| (A(i), EtaA(j))),
        ("φ_b^i ⌣ ψ_b^j", |i, j| (B(i), EtaB(j))),
        ("φ_a^i ⌣ ψ_b^j", |i, j| (A(i), EtaB(j))),
        ("φ_b^i ⌣ ψ_a^j", |i, j| (B(i), EtaA(j))),
        ("ψ_a^i ⌣ ψ_a^j", |i, j| (EtaA(i), EtaA(j))),
        ("ψ_a^i ⌣ ψ_b^j", |i, j| (EtaA(i), EtaB(j))),
        ("ψ_b^i ⌣ ψ_b^j", |i, j| (EtaB(i), EtaB(j))),
    ]
}

/// Index range used for the cup table: one full period and one step past.
fn cup_indices(s: &CheckedSpec) -> Vec<u64> {
    let p = DerivedInvariants::new(s).p;
    (1..=(p + 1).min(4)).collect()
}

fn render_class(c: &Result<CohClass>) -> String {
    match c {
        Ok(c) => c.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn cup_checks(s: &CheckedSpec) -> Vec<Check> {
    let label = spec_label(s);
    let ring = Ring::twisted(s);
    let idx = cup_indices(s);
    cup_rules()
        .into_iter()
        .map(|(name, rule)| {
            let mut formula = Vec::new();
            let mut oracle = Vec::new();
            for &i in &idx {
                for &j in &idx {
                    let (x, y) = rule(i, j);
                    if x.degree() == 1 || y.degree() == 1 {
                        if j != idx[0] {
                            continue;
                        }
                    }
                    formula.push(format!("{x}·{y}={}", render_class(&ring.cup_symbols(x, y))));
                    oracle.push(format!("{x}·{y}={}", render_class(&stated_cup_oracle(s, x, y))));
                }
            }
            let item = format!("{name}, i,j ≤ {}", idx.len());
            Check::compare(CheckKind::Cup, label.clone(), item, formula.join("; "), oracle.join("; "))
        })
        .collect()
}

/// The generators of one period of the twisted ring, shifted by `p`.
fn shifted(s: Symbol, by: u64) -> Option<Symbol> {
    use Symbol::*;
    Some(match s {
        A(j) => A(j + by),
        B(j) => B(j + by),
        EtaA(j) => EtaA(j + by),
        EtaB(j) => EtaB(j + by),
        Delta(m) => Delta(m + by / 2),
        Gamma(m) => Gamma(m + by / 2),
        GammaPrime(m) => GammaPrime(m + by / 2),
        EtaDelta(m) => EtaDelta(m + by / 2),
        EtaGamma(m) => EtaGamma(m + by / 2),
        EtaGammaPrime(m) => EtaGammaPrime(m + by / 2),
        _ => return None,
    })
}

fn period_checks(s: &CheckedSpec) -> Vec<Check> {
    let label = spec_label(s);
    let ring = Ring::twisted(s);
    let mut out = Vec::new();
    let (period, class) = match ring.periodicity() {
        Ok(x) => x,
        Err(e) => {
            return vec![Check::compare(
                CheckKind::Period,
                label,
                "period".into(),
                "a period".into(),
                format!("error: {e}"),
            )]
        }
    };
    let groups: Vec<String> = (2..=2 + 2 * period)
        .map(|n| vz_cohomology(s, n).group.to_string())
        .collect();
    let shifted_groups: Vec<String> = (2..=2 + 2 * period)
        .map(|n| vz_cohomology(s, n + period).group.to_string())
        .collect();
    out.push(Check::compare(
        CheckKind::Period,
        label.clone(),
        format!("H^n ≅ H^(n+{period}), 2 ≤ n ≤ {}", 2 + 2 * period),
        groups.join(", "),
        shifted_groups.join(", "),
    ));
    // cup with the period class moves each generator of one period up
    let gens = match ring.generators(period + 1) {
        Ok(g) => g,
        Err(e) => {
            out.push(Check::compare(CheckKind::Period, label, "generators".into(), String::new(), format!("error: {e}")));
            return out;
        }
    };
    let p = ring.invariants().p;
    let by = period / 2;
    let mut want = Vec::new();
    let mut got = Vec::new();
    for g in gens.into_iter().filter(|g| g.degree() >= 2) {
        let Some(t) = shifted(g, if ring.invariants().is_metacyclic() { p } else { by }) else {
            continue;
        };
        want.push(format!("{g}→{}", render_class(&ring.generator(t))));
        let prod = ring.generator(g).and_then(|x| ring.cup(&class, &x));
        got.push(format!("{g}→{}", render_class(&prod)));
    }
    out.push(Check::compare(
        CheckKind::Period,
        label.clone(),
        "period class ⌣ generator = shifted generator".into(),
        want.join("; "),
        got.join("; "),
    ));
    // the same shift on cochain representatives, family 1
    if ring.invariants().is_metacyclic() {
        let mut want = Vec::new();
        let mut got = Vec::new();
        for j in 1..=p {
            for (x, t) in [
                (Symbol::A(j), Symbol::A(j + p)),
                (Symbol::B(j), Symbol::B(j + p)),
                (Symbol::EtaA(j), Symbol::EtaA(j + p)),
                (Symbol::EtaB(j), Symbol::EtaB(j + p)),
            ] {
                want.push(format!("{x}→{}", render_class(&ring.generator(t))));
                let sum = stated_cup_oracle(s, Symbol::A(p), x)
                    .and_then(|u| Ok((u, stated_cup_oracle(s, Symbol::B(p), x)?)))
                    .and_then(|(u, v)| ring.add(&u, &v));
                got.push(format!("{x}→{}", render_class(&sum)));
            }
        }
        out.push(Check::compare(
            CheckKind::Period,
            label,
            "cochain-level shift by the period class".into(),
            want.join("; "),
            got.join("; "),
        ));
    }
    out
}
