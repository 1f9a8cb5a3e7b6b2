use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::invariants::{DerivedInvariants, H2Action};
use crate::error::{Error, Result};
use crate::group::CheckedSpec;

/// Named additive generators.
///
/// `A(j)` and `B(j)` generate the `Z_{A_j}` and `Z_{B_j}` summands of
/// `H^{2j}` (the classes `φ_a^j`, `φ_b^j`, or `(a/A_j)α_2^j`, `(b/B_j)β_2^j`).
/// `Delta(m)` generates the quaternion summand of `H^{4m}`; `Gamma(m)` and
/// `GammaPrime(m)` are `γ_2 δ_4^m` and `γ_2' δ_4^m`. The `Eta*` symbols are
/// the odd-degree companions in the coinvariants, generated by the image of
/// the untwisted class (`ψ_a^j` is `EtaA(j)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Symbol {
    One,
    Eta,
    A(u64),
    B(u64),
    Delta(u64),
    Gamma(u64),
    GammaPrime(u64),
    EtaA(u64),
    EtaB(u64),
    EtaDelta(u64),
    EtaGamma(u64),
    EtaGammaPrime(u64),
}

use Symbol::*;

impl Symbol {
    pub fn degree(&self) -> u64 {
        match *self {
            One => 0,
            Eta => 1,
            A(j) | B(j) => 2 * j,
            Delta(m) => 4 * m,
            Gamma(m) | GammaPrime(m) => 4 * m + 2,
            EtaA(_) | EtaB(_) | EtaDelta(_) | EtaGamma(_) | EtaGammaPrime(_) => {
                self.even_part().degree() + 1
            }
        }
    }

    /// Drops the `η` factor of a companion symbol.
    pub fn even_part(&self) -> Symbol {
        match *self {
            EtaA(j) => A(j),
            EtaB(j) => B(j),
            EtaDelta(m) => Delta(m),
            EtaGamma(m) => Gamma(m),
            EtaGammaPrime(m) => GammaPrime(m),
            Eta => One,
            s => s,
        }
    }

    /// `η` companion of an even symbol.
    pub fn with_eta(&self) -> Option<Symbol> {
        Some(match *self {
            One => Eta,
            A(j) => EtaA(j),
            B(j) => EtaB(j),
            Delta(m) => EtaDelta(m),
            Gamma(m) => EtaGamma(m),
            GammaPrime(m) => EtaGammaPrime(m),
            _ => return None,
        })
    }

    pub fn has_eta(&self) -> bool {
        self.degree() % 2 == 1
    }

    fn is_quaternionic(&self) -> bool {
        matches!(
            self.even_part(),
            Delta(_) | Gamma(_) | GammaPrime(_)
        )
    }

    fn index_ok(&self) -> bool {
        match self.even_part() {
            A(j) | B(j) | Delta(j) => j > 0,
            _ => true,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// An integer combination of generators in one degree, coefficients
/// reduced modulo the generator orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CohClass {
    pub degree: u64,
    pub terms: BTreeMap<Symbol, u64>,
}

impl CohClass {
    pub fn zero(degree: u64) -> Self {
        CohClass {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, s: Symbol) -> u64 {
        self.terms.get(&s).copied().unwrap_or(0)
    }
}

impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, c)| if *c == 1 { s.to_string() } else { format!("{c}·{s}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A listed generator with its degree and additive order (0 for `Z`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingGenerator {
    pub symbol: Symbol,
    pub name: String,
    pub degree: u64,
    pub order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductRule {
    pub left: Symbol,
    pub right: Symbol,
    pub product: CohClass,
    pub rendered: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingPresentation {
    pub degree_bound: u64,
    pub generators: Vec<RingGenerator>,
    pub relations: Vec<ProductRule>,
}

/// The cohomology ring of the finite kernel, or of the twisted infinite
/// group when `twisted` is set.
#[derive(Clone, Debug)]
pub struct Ring {
    inv: DerivedInvariants,
    twisted: bool,
}

fn exact(num: u128, den: u128, what: &str) -> Result<u128> {
    if den == 0 || num % den != 0 {
        return Err(Error::Class(format!(
            "{what}: coefficient {num}/{den} is not an integer"
        )));
    }
    Ok(num / den)
}

impl Ring {
    /// Ring of the finite kernel; any twist on `spec` is ignored.
    pub fn finite(spec: &CheckedSpec) -> Self {
        let mut plain = spec.clone();
        plain.theta = None;
        Ring {
            inv: DerivedInvariants::new(&plain),
            twisted: false,
        }
    }

    /// Ring of `F ⋊_θ Z`.
    pub fn twisted(spec: &CheckedSpec) -> Self {
        Ring {
            inv: DerivedInvariants::new(spec),
            twisted: true,
        }
    }

    pub fn invariants(&self) -> &DerivedInvariants {
        &self.inv
    }

    pub fn is_twisted(&self) -> bool {
        self.twisted
    }

    fn h2(&self) -> H2Action {
        self.inv.h2_action.unwrap_or_else(H2Action::identity)
    }

    fn check_symbol(&self, s: Symbol) -> Result<()> {
        if !s.index_ok() {
            return Err(Error::Class(format!("{s} has index 0")));
        }
        if s.has_eta() && !self.twisted {
            return Err(Error::Class(format!("{s} needs the Z factor")));
        }
        if s.is_quaternionic() && self.inv.is_metacyclic() {
            return Err(Error::Class(format!("{s} needs a quaternion factor")));
        }
        Ok(())
    }

    /// Additive order of a generator; 0 means infinite.
    pub fn order(&self, s: Symbol) -> Result<u64> {
        self.check_symbol(s)?;
        let inv = &self.inv;
        Ok(match s.even_part() {
            One => 0,
            A(j) => inv.a_j(j),
            B(j) => inv.b_j(j),
            Delta(m) => inv.q_top_order(m),
            Gamma(_) | GammaPrime(_) => 2,
            _ => unreachable!(),
        })
    }

    /// Order, in the finite kernel, of the class whose image generates the
    /// coinvariant companion: `E_j` (the `δ` or `ε` ladder) for `A(j)`, `b`
    /// for `B(j)`, `2^i` for `Delta(m)` and 2 for the `γ` classes.
    fn ladder(&self, s: Symbol) -> u64 {
        match s.even_part() {
            A(j) => self.inv.ladder(j),
            B(_) => self.inv.b,
            Delta(_) => self.inv.two_i(),
            Gamma(_) | GammaPrime(_) => 2,
            _ => 1,
        }
    }

    /// Builds a class from raw integer coefficients and normalizes it.
    pub fn class<I>(&self, degree: u64, terms: I) -> Result<CohClass>
    where
        I: IntoIterator<Item = (Symbol, i64)>,
    {
        let mut raw: BTreeMap<Symbol, i128> = BTreeMap::new();
        for (s, c) in terms {
            self.check_symbol(s)?;
            if s.degree() != degree {
                return Err(Error::Class(format!(
                    "{s} has degree {} but the class has degree {degree}",
                    s.degree()
                )));
            }
            *raw.entry(s).or_insert(0) += i128::from(c);
        }
        self.normalize(degree, raw)
    }

    pub fn generator(&self, s: Symbol) -> Result<CohClass> {
        self.class(s.degree(), [(s, 1)])
    }

    fn normalize(&self, degree: u64, raw: BTreeMap<Symbol, i128>) -> Result<CohClass> {
        let mut terms = BTreeMap::new();
        for (s, c) in raw {
            let ord = self.order(s)?;
            let c = if ord == 0 {
                if c < 0 {
                    return Err(Error::Class(format!(
                        "negative coefficient {c} on {s} is not supported"
                    )));
                }
                c as u64
            } else {
                c.rem_euclid(i128::from(ord)) as u64
            };
            if c != 0 {
                terms.insert(s, c);
            }
        }
        if self.twisted && !self.inv.is_metacyclic() && degree % 4 >= 2 {
            self.fix_gamma_part(degree, &mut terms)?;
        }
        Ok(CohClass { degree, terms })
    }

    /// Under a nontrivial action on `H^2(Q)`, even classes must be fixed and
    /// odd classes live in the coinvariants; odd ones are reduced to the
    /// smallest representative of their coset.
    fn fix_gamma_part(&self, degree: u64, terms: &mut BTreeMap<Symbol, u64>) -> Result<()> {
        let t = self.h2();
        let m = (degree - 2) / 4;
        let (g, gp) = if degree % 2 == 0 {
            (Gamma(m), GammaPrime(m))
        } else {
            (EtaGamma(m), EtaGammaPrime(m))
        };
        let v = [
            terms.get(&g).copied().unwrap_or(0) as u8,
            terms.get(&gp).copied().unwrap_or(0) as u8,
        ];
        let w = if degree % 2 == 0 {
            if t.apply(v) != v {
                return Err(Error::Class(format!(
                    "γ-part {v:?} in degree {degree} is not invariant under the twist"
                )));
            }
            v
        } else {
            let mut best = v;
            for b in t.boundary_vectors() {
                let c = [(v[0] + b[0]) % 2, (v[1] + b[1]) % 2];
                if c < best {
                    best = c;
                }
            }
            best
        };
        terms.remove(&g);
        terms.remove(&gp);
        if w[0] == 1 {
            terms.insert(g, 1);
        }
        if w[1] == 1 {
            terms.insert(gp, 1);
        }
        Ok(())
    }

    /// Product of two even generators, as (target, coefficient relative to
    /// the target generator).
    fn even_product(&self, x: Symbol, y: Symbol) -> Result<Option<(Symbol, u128)>> {
        let inv = &self.inv;
        let (x, y) = if x <= y { (x, y) } else { (y, x) };
        let a = u128::from(inv.a);
        let b = u128::from(inv.b);
        let two_i = u128::from(inv.two_i());
        let c2 = |m: u64| u128::from(inv.q_top_order(m));
        let half = two_i / 2;
        let quaternion_square = inv.i.is_some_and(|i| i > 3);
        Ok(match (x, y) {
            (One, s) => Some((s, 1)),
            (A(i), A(j)) => {
                let (ai, aj, aij) = (
                    u128::from(inv.a_j(i)),
                    u128::from(inv.a_j(j)),
                    u128::from(inv.a_j(i + j)),
                );
                Some((A(i + j), exact(a * aij, ai * aj, "A·A")?))
            }
            (B(i), B(j)) => {
                let (bi, bj, bij) = (
                    u128::from(inv.b_j(i)),
                    u128::from(inv.b_j(j)),
                    u128::from(inv.b_j(i + j)),
                );
                Some((B(i + j), exact(b * bij, bi * bj, "B·B")?))
            }
            (Delta(m), Delta(n)) => Some((
                Delta(m + n),
                exact(two_i * c2(m + n), c2(m) * c2(n), "Δ·Δ")?,
            )),
            (Delta(m), Gamma(n)) => Some((Gamma(m + n), exact(two_i, c2(m), "Δ·γ")?)),
            (Delta(m), GammaPrime(n)) => {
                Some((GammaPrime(m + n), exact(two_i, c2(m), "Δ·γ'")?))
            }
            (Gamma(_), Gamma(_)) => None,
            (Gamma(m), GammaPrime(n)) => {
                let t = m + n + 1;
                Some((Delta(t), exact(half * c2(t), two_i, "γ·γ'")?))
            }
            (GammaPrime(m), GammaPrime(n)) if quaternion_square => {
                let t = m + n + 1;
                Some((Delta(t), exact(half * c2(t), two_i, "γ'·γ'")?))
            }
            _ => None,
        })
    }

    /// `x · η(y)` for even `x`, `y`, as a multiple of the companion generator.
    fn mixed_product(&self, x: Symbol, y: Symbol) -> Result<Option<(Symbol, u128)>> {
        let inv = &self.inv;
        let a = u128::from(inv.a);
        let b = u128::from(inv.b);
        let two_i = u128::from(inv.two_i());
        let half = two_i / 2;
        let c2 = |m: u64| u128::from(inv.q_top_order(m));
        let quaternion_square = inv.i.is_some_and(|i| i > 3);
        let out = match (x, y) {
            (One, s) => Some((s, 1)),
            (s, One) => Some((s, exact(u128::from(self.ladder(s)), u128::from(self.order(s)?), "X·η")?)),
            (A(i), A(j)) => {
                let ai = u128::from(inv.a_j(i));
                let ej = u128::from(inv.ladder(j));
                let eij = u128::from(inv.ladder(i + j));
                Some((A(i + j), exact(a * eij, ej * ai, "A·ηA")?))
            }
            (B(i), B(j)) => Some((B(i + j), exact(b, u128::from(inv.b_j(i)), "B·ηB")?)),
            (Delta(m), Delta(n)) => Some((Delta(m + n), exact(two_i, c2(m), "Δ·ηΔ")?)),
            (Delta(m), Gamma(n)) => Some((Gamma(m + n), exact(two_i, c2(m), "Δ·ηγ")?)),
            (Delta(m), GammaPrime(n)) => {
                Some((GammaPrime(m + n), exact(two_i, c2(m), "Δ·ηγ'")?))
            }
            (Gamma(m), Delta(n)) => Some((Gamma(m + n), 1)),
            (GammaPrime(m), Delta(n)) => Some((GammaPrime(m + n), 1)),
            (Gamma(m), GammaPrime(n)) | (GammaPrime(m), Gamma(n)) => {
                Some((Delta(m + n + 1), half))
            }
            (GammaPrime(m), GammaPrime(n)) if quaternion_square => {
                Some((Delta(m + n + 1), half))
            }
            _ => None,
        };
        Ok(out.map(|(s, c)| (s.with_eta().expect("even target"), c)))
    }

    /// Cup product of two generators.
    pub fn cup_symbols(&self, x: Symbol, y: Symbol) -> Result<CohClass> {
        self.check_symbol(x)?;
        self.check_symbol(y)?;
        let degree = x.degree() + y.degree();
        let hit = match (x.has_eta(), y.has_eta()) {
            (true, true) => None,
            (false, false) => self.even_product(x, y)?,
            (false, true) => self.mixed_product(x, y.even_part())?,
            (true, false) => self.mixed_product(y, x.even_part())?,
        };
        let raw = match hit {
            None => BTreeMap::new(),
            Some((s, c)) => {
                // a target of order 1 is the zero class
                let ord = self.order(s)?;
                let c = if ord == 0 { c } else { c % u128::from(ord) };
                BTreeMap::from([(s, c as i128)])
            }
        };
        self.normalize(degree, raw)
    }

    /// Bilinear extension of `cup_symbols`.
    pub fn cup(&self, u: &CohClass, v: &CohClass) -> Result<CohClass> {
        let degree = u.degree + v.degree;
        let mut raw: BTreeMap<Symbol, i128> = BTreeMap::new();
        for (&s, &cs) in &u.terms {
            for (&t, &ct) in &v.terms {
                let p = self.cup_symbols(s, t)?;
                for (w, cw) in p.terms {
                    let m = modulus(self.order(w)?);
                    let c = i128::from(cs) * i128::from(ct) % m * i128::from(cw) % m;
                    let e = raw.entry(w).or_insert(0);
                    *e = (*e + c) % m;
                }
            }
        }
        self.normalize(degree, raw)
    }

    pub fn add(&self, u: &CohClass, v: &CohClass) -> Result<CohClass> {
        if u.degree != v.degree {
            return Err(Error::Class(format!(
                "cannot add classes of degrees {} and {}",
                u.degree, v.degree
            )));
        }
        let raw = u
            .terms
            .iter()
            .chain(&v.terms)
            .fold(BTreeMap::new(), |mut m, (&s, &c)| {
                *m.entry(s).or_insert(0i128) += i128::from(c);
                m
            });
        self.normalize(u.degree, raw)
    }

    /// Period and periodicity class of the twisted group.
    pub fn periodicity(&self) -> Result<(u64, CohClass)> {
        let p = self.inv.p;
        let (deg, terms) = if self.inv.is_metacyclic() {
            (2 * p, vec![(A(p), 1), (B(p), 1)])
        } else if p % 2 == 0 {
            (2 * p, vec![(A(p), 1), (B(p), 1), (Delta(p / 2), 1)])
        } else {
            (4 * p, vec![(A(2 * p), 1), (B(2 * p), 1), (Delta(p), 1)])
        };
        Ok((deg, self.class(deg, terms)?))
    }

    /// Every nonzero generator in degrees `1..=bound` (plus `1`). Under a
    /// nontrivial action on `H^2(Q)` the `γ` classes are not listed.
    pub fn generators(&self, bound: u64) -> Result<Vec<Symbol>> {
        let mut out = vec![One];
        if self.twisted {
            out.push(Eta);
        }
        let quaternionic = !self.inv.is_metacyclic();
        for j in 1..=bound / 2 {
            let mut even = vec![A(j), B(j)];
            if quaternionic {
                if j % 2 == 0 {
                    even.push(Delta(j / 2));
                } else {
                    even.push(Gamma((j - 1) / 2));
                    even.push(GammaPrime((j - 1) / 2));
                }
            }
            for s in even {
                if self.order(s)? == 1 {
                    continue;
                }
                if matches!(s, Gamma(_) | GammaPrime(_)) && self.twisted && !self.h2().is_trivial()
                {
                    continue;
                }
                if s.degree() <= bound {
                    out.push(s);
                }
                if self.twisted && s.degree() < bound {
                    out.push(s.with_eta().unwrap());
                }
            }
        }
        out.sort_by_key(|s| (s.degree(), *s));
        Ok(out)
    }

    /// Generators and all pairwise products up to the degree bound.
    pub fn presentation(&self, bound: u64) -> Result<RingPresentation> {
        let gens = self.generators(bound)?;
        let mut generators = Vec::new();
        for &s in &gens {
            generators.push(RingGenerator {
                symbol: s,
                name: self.symbol_name(s),
                degree: s.degree(),
                order: self.order(s)?,
            });
        }
        let mut relations = Vec::new();
        for (ix, &x) in gens.iter().enumerate() {
            if x == One {
                continue;
            }
            for &y in &gens[ix..] {
                if y == One || x.degree() + y.degree() > bound {
                    continue;
                }
                let product = self.cup_symbols(x, y)?;
                relations.push(ProductRule {
                    left: x,
                    right: y,
                    rendered: format!(
                        "{} ⌣ {} = {}",
                        self.symbol_name(x),
                        self.symbol_name(y),
                        self.render(&product)
                    ),
                    product,
                });
            }
        }
        Ok(RingPresentation {
            degree_bound: bound,
            generators,
            relations,
        })
    }

    /// Default degree bound for presentations: one full period past degree 2.
    pub fn default_bound(&self) -> u64 {
        2 * self.inv.period() + 2
    }

    pub fn symbol_name(&self, s: Symbol) -> String {
        let inv = &self.inv;
        if inv.is_metacyclic() {
            return match s {
                One => "1".into(),
                Eta => "η".into(),
                A(j) => format!("φ_a^{j}"),
                B(j) => format!("φ_b^{j}"),
                EtaA(j) => format!("ψ_a^{j}"),
                EtaB(j) => format!("ψ_b^{j}"),
                _ => format!("{s}"),
            };
        }
        let power = |base: &str, e: u64| match e {
            0 => String::new(),
            1 => base.to_string(),
            e => format!("{base}{}", superscript(e)),
        };
        let scaled = |num: u64, den: u64, name: &str, body: String| {
            if num == den {
                body
            } else {
                format!("({name})·{body}")
            }
        };
        let (a_name, b_name) = if self.twisted {
            ("a/A", "b/B")
        } else {
            ("a/ε", "b/b")
        };
        match s {
            One => "1".into(),
            Eta => "η".into(),
            A(j) => scaled(
                inv.a,
                inv.a_j(j),
                &format!("{a_name}_{j}"),
                power("α_2", j),
            ),
            B(j) => scaled(inv.b, inv.b_j(j), &format!("{b_name}_{j}"), power("β_2", j)),
            Delta(m) => scaled(
                inv.two_i(),
                inv.q_top_order(m),
                &format!("2^i/C_{}", 2 * m),
                power("δ_4", m),
            ),
            Gamma(m) => format!("γ_2{}", power("δ_4", m)),
            GammaPrime(m) => format!("γ_2'{}", power("δ_4", m)),
            other => format!("η·{}", self.symbol_name(other.even_part())),
        }
    }

    /// Renders with the family's conventional names.
    pub fn render(&self, c: &CohClass) -> String {
        if c.is_zero() {
            return "0".into();
        }
        c.terms
            .iter()
            .map(|(&s, &k)| {
                if k == 1 {
                    self.symbol_name(s)
                } else {
                    format!("{k}·{}", self.symbol_name(s))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Checks graded commutativity on every pair of listed generators.
    pub fn check_commutativity(&self, bound: u64) -> Result<()> {
        let gens = self.generators(bound)?;
        for &x in &gens {
            for &y in &gens {
                let xy = self.cup_symbols(x, y)?;
                let yx = self.cup_symbols(y, x)?;
                let sign_odd = x.degree() % 2 == 1 && y.degree() % 2 == 1;
                let expected = if sign_odd { self.negate(&yx)? } else { yx };
                if xy != expected {
                    return Err(Error::Class(format!(
                        "{x}·{y} = {xy} but {y}·{x} = {expected}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Checks associativity on every triple of listed generators.
    pub fn check_associativity(&self, bound: u64) -> Result<()> {
        let gens = self.generators(bound)?;
        for &x in &gens {
            for &y in &gens {
                for &z in &gens {
                    if x.degree() + y.degree() + z.degree() > bound {
                        continue;
                    }
                    let gx = self.generator(x)?;
                    let gy = self.generator(y)?;
                    let gz = self.generator(z)?;
                    let l = self.cup(&self.cup(&gx, &gy)?, &gz)?;
                    let r = self.cup(&gx, &self.cup(&gy, &gz)?)?;
                    if l != r {
                        return Err(Error::Class(format!(
                            "({x}·{y})·{z} = {l} but {x}·({y}·{z}) = {r}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn negate(&self, c: &CohClass) -> Result<CohClass> {
        let raw = c
            .terms
            .iter()
            .map(|(&s, &k)| (s, -i128::from(k)))
            .collect::<BTreeMap<_, _>>();
        if raw.keys().any(|&s| self.order(s).ok() == Some(0)) {
            return Err(Error::Class("cannot negate a class with a free part".into()));
        }
        self.normalize(c.degree, raw)
    }
}

fn modulus(order: u64) -> i128 {
    if order == 0 {
        i128::MAX
    } else {
        i128::from(order)
    }
}

fn superscript(n: u64) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}
