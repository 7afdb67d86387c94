//! Finitely presented graded-commutative rings with even-degree generators.
//!
//! A ring is given by generators (each of positive even cohomological
//! degree), homogeneous rewrite rules `head -> tail`, and a top degree above
//! which everything vanishes. At construction time every monomial of degree
//! at most the top degree is rewritten to normal form and the result is
//! cached, so arithmetic on [`RingElement`]s never rewrites again.
//!
//! Degrees are cohomological: a Chow class of codimension `k` lives in
//! degree `2k`. The same ring therefore serves as a Chow ring and as an
//! integral cohomology ring.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Maximum number of rewrite steps spent normalizing a single monomial.
pub const REWRITE_BUDGET: usize = 10_000;

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error(
        "relation {relation} is not homogeneous: head has degree {head_degree}, a tail term has degree {tail_degree}"
    )]
    NonHomogeneousRelation {
        relation: usize,
        head_degree: u32,
        tail_degree: u32,
    },
    #[error("rewriting did not terminate within {budget} steps (monomial {monomial})")]
    RewriteBudgetExceeded { budget: usize, monomial: String },
    #[error("fundamental monomial {0} is reducible by the relations")]
    FundamentalMonomialReducible(String),
    #[error("generator {name} has degree {degree}; only positive even degrees are admitted")]
    OddDegreeGenerator { name: String, degree: u32 },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("elements belong to different rings ({left} and {right})")]
    RingMismatch { left: String, right: String },
    #[error("element is not homogeneous of top degree {top_degree}")]
    NotTopDegree { top_degree: u32 },
    #[error("ring {0} has no mod-2 companion")]
    NoCompanionRing(String),
    #[error("ring {0} is not a Kunneth square")]
    NotKunnethRing(String),
    #[error("cannot parse element: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientDomain {
    Integers,
    IntegersMod2,
}

/// Exponent vector over the generator list of a ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(generators: usize) -> Self {
        Monomial(vec![0; generators])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn quotient(&self, divisor: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&divisor.0).map(|(a, b)| a - b).collect())
    }

    fn product(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

/// A rewrite rule `head -> tail` with exact-integer tail coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub head: Vec<u32>,
    pub tail: Vec<(Vec<u32>, BigInt)>,
}

impl Relation {
    pub fn new(head: Vec<u32>, tail: Vec<(Vec<u32>, BigInt)>) -> Self {
        Relation { head, tail }
    }

    /// Parses both sides against a generator name list, e.g. `("x^2", "2*y")`.
    pub fn parse(generators: &[&str], head: &str, tail: &str) -> Result<Self, RingError> {
        let head_text = head;
        let head_terms = parse_terms(generators, head_text)?;
        let [(head, coeff)] = head_terms.as_slice() else {
            return Err(RingError::Parse(format!(
                "relation head `{head_text}` must be one monomial"
            )));
        };
        if !coeff.is_one() {
            return Err(RingError::Parse(format!("relation head `{head_text}` must be monic")));
        }
        let tail = if tail.trim() == "0" {
            Vec::new()
        } else {
            parse_terms(generators, tail)?
        };
        Ok(Relation {
            head: head.clone(),
            tail,
        })
    }
}

/// Input data for [`make_ring`].
#[derive(Debug, Clone)]
pub struct RingPresentation {
    pub name: String,
    pub generators: Vec<(String, u32)>,
    pub relations: Vec<Relation>,
    pub top_degree: u32,
    pub domain: CoefficientDomain,
    pub fundamental: Vec<u32>,
    /// Generator names for the mod-2 companion; `None` reuses `generators`.
    pub mod2_names: Option<Vec<String>>,
}

#[derive(Debug)]
struct RingData {
    id: u64,
    name: String,
    generators: Vec<(String, u32)>,
    relations: Vec<(Monomial, Vec<(Monomial, BigInt)>)>,
    top_degree: u32,
    domain: CoefficientDomain,
    fundamental: Monomial,
    bases: BTreeMap<u32, Vec<Monomial>>,
    normal_forms: HashMap<Monomial, Vec<(Monomial, BigInt)>>,
    companion: Option<GradedRing>,
    kunneth_base: Option<GradedRing>,
}

/// An immutable, cheaply cloneable handle to a constructed ring.
#[derive(Clone)]
pub struct GradedRing(Arc<RingData>);

impl fmt::Debug for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedRing({}#{})", self.0.name, self.0.id)
    }
}

impl PartialEq for GradedRing {
    fn eq(&self, other: &Self) -> bool {
        self.0.id == other.0.id
    }
}

impl Eq for GradedRing {}

/// Builds a ring, its per-degree bases and (for integral rings) its mod-2
/// companion.
pub fn make_ring(p: &RingPresentation) -> Result<GradedRing, RingError> {
    let companion = match p.domain {
        CoefficientDomain::Integers => Some(build(&mod2_presentation(p), None, None)?),
        CoefficientDomain::IntegersMod2 => None,
    };
    build(p, companion, None)
}

fn mod2_presentation(p: &RingPresentation) -> RingPresentation {
    let names = p
        .mod2_names
        .clone()
        .unwrap_or_else(|| p.generators.iter().map(|(n, _)| n.clone()).collect());
    RingPresentation {
        name: format!("{}/2", p.name),
        generators: names.into_iter().zip(p.generators.iter().map(|g| g.1)).collect(),
        relations: p
            .relations
            .iter()
            .map(|r| Relation {
                head: r.head.clone(),
                tail: r
                    .tail
                    .iter()
                    .map(|(m, c)| (m.clone(), c.mod_floor(&BigInt::from(2))))
                    .filter(|(_, c)| !c.is_zero())
                    .collect(),
            })
            .collect(),
        top_degree: p.top_degree,
        domain: CoefficientDomain::IntegersMod2,
        fundamental: p.fundamental.clone(),
        mod2_names: None,
    }
}

fn weighted_degree(generators: &[(String, u32)], exps: &[u32]) -> u32 {
    generators.iter().zip(exps).map(|((_, d), e)| d * e).sum()
}

fn reduce_coefficient(domain: CoefficientDomain, c: BigInt) -> BigInt {
    match domain {
        CoefficientDomain::Integers => c,
        CoefficientDomain::IntegersMod2 => c.mod_floor(&BigInt::from(2)),
    }
}

fn build(
    p: &RingPresentation,
    companion: Option<GradedRing>,
    kunneth_base: Option<GradedRing>,
) -> Result<GradedRing, RingError> {
    let n = p.generators.len();
    let mut seen = std::collections::HashSet::new();
    for (name, degree) in &p.generators {
        if name.is_empty() || !seen.insert(name.as_str()) {
            return Err(RingError::InvalidPresentation(format!(
                "generator names must be nonempty and unique (`{name}`)"
            )));
        }
        if !valid_name(name) {
            return Err(RingError::InvalidPresentation(format!(
                "generator name `{name}` must start with a letter and contain only letters, digits or `_`"
            )));
        }
        if *degree == 0 || degree % 2 != 0 {
            return Err(RingError::OddDegreeGenerator {
                name: name.clone(),
                degree: *degree,
            });
        }
    }
    if !p.top_degree.is_multiple_of(2) {
        return Err(RingError::InvalidPresentation(format!(
            "top degree {} is odd",
            p.top_degree
        )));
    }

    let mut relations = Vec::with_capacity(p.relations.len());
    for (i, r) in p.relations.iter().enumerate() {
        if r.head.len() != n || r.tail.iter().any(|(m, _)| m.len() != n) {
            return Err(RingError::InvalidPresentation(format!(
                "relation {i} has exponent vectors of the wrong length"
            )));
        }
        let head = Monomial(r.head.clone());
        if head.is_one() {
            return Err(RingError::InvalidPresentation(format!(
                "relation {i} rewrites the unit"
            )));
        }
        let head_degree = weighted_degree(&p.generators, &r.head);
        let mut tail = Vec::new();
        for (m, c) in &r.tail {
            let tail_degree = weighted_degree(&p.generators, m);
            if tail_degree != head_degree {
                return Err(RingError::NonHomogeneousRelation {
                    relation: i,
                    head_degree,
                    tail_degree,
                });
            }
            let c = reduce_coefficient(p.domain, c.clone());
            if !c.is_zero() {
                tail.push((Monomial(m.clone()), c));
            }
        }
        relations.push((head, tail));
    }

    if p.fundamental.len() != n {
        return Err(RingError::InvalidPresentation(
            "fundamental monomial has the wrong length".into(),
        ));
    }
    let fundamental = Monomial(p.fundamental.clone());
    if weighted_degree(&p.generators, &p.fundamental) != p.top_degree {
        return Err(RingError::InvalidPresentation(format!(
            "fundamental monomial is not of top degree {}",
            p.top_degree
        )));
    }

    let mut monomials = Vec::new();
    enumerate_monomials(&p.generators, p.top_degree, &mut vec![0; n], 0, 0, &mut monomials);

    let reducible = |m: &Monomial| relations.iter().any(|(h, _)| h.divides(m));
    if reducible(&fundamental) {
        return Err(RingError::FundamentalMonomialReducible(format_monomial(
            &p.generators,
            &fundamental,
        )));
    }

    let mut bases: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
    let mut normal_forms = HashMap::with_capacity(monomials.len());
    for m in monomials {
        let nf = rewrite(&p.generators, &relations, p.domain, p.top_degree, &m)?;
        let degree = weighted_degree(&p.generators, &m.0);
        if !reducible(&m) {
            bases.entry(degree).or_default().push(m.clone());
        }
        normal_forms.insert(m, nf);
    }
    for basis in bases.values_mut() {
        basis.sort_by(|a, b| b.cmp(a));
    }

    Ok(GradedRing(Arc::new(RingData {
        id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
        name: p.name.clone(),
        generators: p.generators.clone(),
        relations,
        top_degree: p.top_degree,
        domain: p.domain,
        fundamental,
        bases,
        normal_forms,
        companion,
        kunneth_base,
    })))
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn enumerate_monomials(
    generators: &[(String, u32)],
    top: u32,
    current: &mut Vec<u32>,
    index: usize,
    degree: u32,
    out: &mut Vec<Monomial>,
) {
    if index == generators.len() {
        out.push(Monomial(current.clone()));
        return;
    }
    let step = generators[index].1;
    let mut d = degree;
    let mut e = 0;
    while d <= top {
        current[index] = e;
        enumerate_monomials(generators, top, current, index + 1, d, out);
        e += 1;
        d += step;
    }
    current[index] = 0;
}

/// Rewrites one monomial to normal form, combining like terms as it goes.
fn rewrite(
    generators: &[(String, u32)],
    relations: &[(Monomial, Vec<(Monomial, BigInt)>)],
    domain: CoefficientDomain,
    top: u32,
    start: &Monomial,
) -> Result<Vec<(Monomial, BigInt)>, RingError> {
    let mut pending: BTreeMap<Monomial, BigInt> = BTreeMap::new();
    pending.insert(start.clone(), BigInt::one());
    let mut done: BTreeMap<Monomial, BigInt> = BTreeMap::new();
    let mut steps = 0usize;
    while let Some((m, c)) = pending.pop_last() {
        let c = reduce_coefficient(domain, c);
        if c.is_zero() || weighted_degree(generators, &m.0) > top {
            continue;
        }
        match relations.iter().find(|(h, _)| h.divides(&m)) {
            Some((head, tail)) => {
                steps += 1;
                if steps > REWRITE_BUDGET {
                    return Err(RingError::RewriteBudgetExceeded {
                        budget: REWRITE_BUDGET,
                        monomial: format_monomial(generators, start),
                    });
                }
                let q = m.quotient(head);
                for (t, tc) in tail {
                    *pending.entry(q.product(t)).or_insert_with(BigInt::zero) += &c * tc;
                }
            }
            None => *done.entry(m).or_insert_with(BigInt::zero) += c,
        }
    }
    Ok(done
        .into_iter()
        .map(|(m, c)| (m, reduce_coefficient(domain, c)))
        .filter(|(_, c)| !c.is_zero())
        .collect())
}

fn format_monomial(generators: &[(String, u32)], m: &Monomial) -> String {
    let parts: Vec<String> = generators
        .iter()
        .zip(&m.0)
        .filter(|(_, &e)| e > 0)
        .map(|((name, _), &e)| if e == 1 { name.clone() } else { format!("{name}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl GradedRing {
    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn id(&self) -> u64 {
        self.0.id
    }

    pub fn generators(&self) -> &[(String, u32)] {
        &self.0.generators
    }

    pub fn top_degree(&self) -> u32 {
        self.0.top_degree
    }

    /// Complex dimension of the underlying space (half the top degree).
    pub fn complex_dimension(&self) -> u32 {
        self.0.top_degree / 2
    }

    pub fn domain(&self) -> CoefficientDomain {
        self.0.domain
    }

    pub fn fundamental_monomial(&self) -> &Monomial {
        &self.0.fundamental
    }

    pub fn companion(&self) -> Option<&GradedRing> {
        self.0.companion.as_ref()
    }

    pub fn kunneth_base(&self) -> Option<&GradedRing> {
        self.0.kunneth_base.as_ref()
    }

    /// Normal-form monomials of the given degree, largest first.
    pub fn basis(&self, degree: u32) -> &[Monomial] {
        self.0.bases.get(&degree).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Degrees with a nonempty basis, ascending.
    pub fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.bases.keys().copied()
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        weighted_degree(&self.0.generators, &m.0)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        format_monomial(&self.0.generators, m)
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.0.generators.iter().position(|(n, _)| n == name)
    }

    pub fn zero(&self) -> RingElement {
        RingElement {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> RingElement {
        self.scalar(BigInt::one())
    }

    pub fn scalar(&self, c: impl Into<BigInt>) -> RingElement {
        self.from_terms([(Monomial::one(self.0.generators.len()), c.into())])
    }

    /// The generator with the given name, as an element.
    pub fn generator(&self, name: &str) -> Option<RingElement> {
        let i = self.generator_index(name)?;
        let mut e = vec![0; self.0.generators.len()];
        e[i] = 1;
        Some(self.from_terms([(Monomial(e), BigInt::one())]))
    }

    pub fn monomial(&self, m: &Monomial) -> RingElement {
        self.from_terms([(m.clone(), BigInt::one())])
    }

    /// Normalizes an arbitrary linear combination of monomials.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> RingElement {
        let mut out: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            let Some(nf) = self.0.normal_forms.get(&m) else {
                // Only monomials above the top degree are missing from the table.
                continue;
            };
            for (b, bc) in nf {
                *out.entry(b.clone()).or_insert_with(BigInt::zero) += &c * bc;
            }
        }
        self.clean(out)
    }

    fn clean(&self, terms: BTreeMap<Monomial, BigInt>) -> RingElement {
        let domain = self.0.domain;
        RingElement {
            ring: self.clone(),
            terms: terms
                .into_iter()
                .map(|(m, c)| (m, reduce_coefficient(domain, c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Parses an expression such as `2*x^2*y - y + 3` over this ring's
    /// generator names.
    pub fn parse_element(&self, text: &str) -> Result<RingElement, RingError> {
        let names: Vec<&str> = self.0.generators.iter().map(|(n, _)| n.as_str()).collect();
        let terms = parse_terms(&names, text)?;
        Ok(self.from_terms(terms.into_iter().map(|(e, c)| (Monomial(e), c))))
    }

    fn check_same(&self, other: &GradedRing) -> Result<(), RingError> {
        if self == other {
            Ok(())
        } else {
            Err(RingError::RingMismatch {
                left: self.0.name.clone(),
                right: other.0.name.clone(),
            })
        }
    }

    /// The element `a x 1` of the Kunneth square, for `a` in the base ring.
    pub fn cross_left(&self, a: &RingElement) -> Result<RingElement, RingError> {
        self.cross(a, 0)
    }

    /// The element `1 x a` of the Kunneth square, for `a` in the base ring.
    pub fn cross_right(&self, a: &RingElement) -> Result<RingElement, RingError> {
        self.cross(a, 1)
    }

    fn cross(&self, a: &RingElement, slot: usize) -> Result<RingElement, RingError> {
        let base = self
            .kunneth_base()
            .ok_or_else(|| RingError::NotKunnethRing(self.0.name.clone()))?;
        base.check_same(&a.ring)?;
        let n = base.0.generators.len();
        Ok(self.from_terms(a.terms.iter().map(|(m, c)| {
            let mut e = vec![0; 2 * n];
            e[slot * n..(slot + 1) * n].copy_from_slice(&m.0);
            (Monomial(e), c.clone())
        })))
    }
}

/// The ring of `X x X`: generators `g_1`, `g_2` for each generator `g`,
/// the relations of `r` on each copy and doubled top degree.
pub fn kunneth_square(r: &GradedRing) -> Result<GradedRing, RingError> {
    let companion = match r.companion() {
        Some(c) => Some(build(&square_presentation(c), None, Some(c.clone()))?),
        None => None,
    };
    build(&square_presentation(r), companion, Some(r.clone()))
}

fn square_presentation(r: &GradedRing) -> RingPresentation {
    let n = r.0.generators.len();
    let generators = (1..=2)
        .flat_map(|slot| {
            r.0.generators
                .iter()
                .map(move |(name, d)| (format!("{name}_{slot}"), *d))
        })
        .collect();
    let embed = |m: &Monomial, slot: usize| {
        let mut e = vec![0; 2 * n];
        e[slot * n..(slot + 1) * n].copy_from_slice(&m.0);
        e
    };
    let relations = (0..2)
        .flat_map(|slot| {
            r.0.relations.iter().map(move |(h, t)| Relation {
                head: embed(h, slot),
                tail: t.iter().map(|(m, c)| (embed(m, slot), c.clone())).collect(),
            })
        })
        .collect();
    RingPresentation {
        name: format!("{}x{}", r.0.name, r.0.name),
        generators,
        relations,
        top_degree: 2 * r.0.top_degree,
        domain: r.0.domain,
        fundamental: r.0.fundamental.0.iter().chain(&r.0.fundamental.0).copied().collect(),
        mod2_names: None,
    }
}

/// Pulls back along the diagonal `X -> X x X`: `g_1` and `g_2` both map
/// to `g`.
pub fn restrict_to_diagonal(a: &RingElement) -> Result<RingElement, RingError> {
    let base = a
        .ring
        .kunneth_base()
        .ok_or_else(|| RingError::NotKunnethRing(a.ring.0.name.clone()))?;
    let n = base.0.generators.len();
    Ok(base.from_terms(a.terms.iter().map(|(m, c)| {
        let e = (0..n).map(|i| m.0[i] + m.0[i + n]).collect();
        (Monomial(e), c.clone())
    })))
}

/// Exact element of a [`GradedRing`]: a sparse combination of normal-form
/// monomials, truncated above the top degree.
#[derive(Clone)]
pub struct RingElement {
    ring: GradedRing,
    terms: BTreeMap<Monomial, BigInt>,
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for RingElement {}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.ring.0.name)
    }
}

impl RingElement {
    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// `Some(d)` when every term has degree `d`; the zero element is
    /// homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|m| self.ring.monomial_degree(m));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| self.ring.monomial_degree(m) == degree)
    }

    /// The part of this element in one degree.
    pub fn component(&self, degree: u32) -> RingElement {
        RingElement {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| self.ring.monomial_degree(m) == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coordinate with respect to the single basis monomial of `degree`.
    /// Returns `None` when that degree has a basis of size other than one.
    pub fn cyclic_coordinate(&self, degree: u32) -> Option<BigInt> {
        match self.ring.basis(degree) {
            [b] => Some(self.coefficient(b)),
            _ => None,
        }
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.ring.check_same(&other.ring)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            *terms.entry(m.clone()).or_insert_with(BigInt::zero) += c;
        }
        Ok(self.ring.clean(terms))
    }

    /// Normal-form product, truncated above the top degree.
    pub fn multiply(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.ring.check_same(&other.ring)?;
        let top = self.ring.0.top_degree;
        let mut products = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, ca) in &self.terms {
            let da = self.ring.monomial_degree(a);
            for (b, cb) in &other.terms {
                if da + self.ring.monomial_degree(b) <= top {
                    products.push((a.product(b), ca * cb));
                }
            }
        }
        Ok(self.ring.from_terms(products))
    }

    pub fn scale(&self, k: &BigInt) -> RingElement {
        self.ring
            .clean(self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect())
    }

    pub fn pow(&self, e: u32) -> RingElement {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficient of the fundamental monomial of a top-degree element.
    pub fn degree_evaluate(&self) -> Result<BigInt, RingError> {
        let top = self.ring.0.top_degree;
        if !self.is_homogeneous_of(top) {
            return Err(RingError::NotTopDegree { top_degree: top });
        }
        Ok(self.coefficient(&self.ring.0.fundamental))
    }

    /// Coefficientwise reduction into the mod-2 companion ring.
    pub fn reduce_mod2(&self) -> Result<RingElement, RingError> {
        let target = self
            .ring
            .companion()
            .ok_or_else(|| RingError::NoCompanionRing(self.ring.0.name.clone()))?;
        Ok(target.from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c.clone()))))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| {
            self.ring
                .monomial_degree(b)
                .cmp(&self.ring.monomial_degree(a))
                .then_with(|| b.cmp(a))
        });
        for (i, (m, c)) in ordered.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let mono = self.ring.format_monomial(m);
            match (abs.is_one(), m.is_one()) {
                (_, true) => write!(f, "{abs}")?,
                (true, false) => f.write_str(&mono)?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&RingElement> for &RingElement {
            type Output = RingElement;
            /// Panics when the operands live in different rings; use the
            /// `try_*` / [`RingElement::multiply`] methods to get an error.
            fn $method(self, rhs: &RingElement) -> RingElement {
                let f: fn(&RingElement, &RingElement) -> Result<RingElement, RingError> = $body;
                f(self, rhs).expect("ring mismatch in element arithmetic")
            }
        }
        impl $trait<RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.try_add(b));
forward_binop!(Sub, sub, |a, b| a.try_add(&-b));
forward_binop!(Mul, mul, |a, b| a.multiply(b));

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.scale(&BigInt::from(-1))
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

/// A ring element with a common rational denominator, used for Chern
/// characters and Todd classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalClass {
    numer: RingElement,
    denom: BigInt,
}

impl RationalClass {
    pub fn new(numer: RingElement, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        let mut g = denom.clone();
        for c in numer.terms.values() {
            g = g.gcd(c);
        }
        if denom.is_negative() {
            g = -g;
        }
        let numer = numer
            .ring
            .clean(numer.terms.iter().map(|(m, c)| (m.clone(), c / &g)).collect());
        RationalClass {
            numer,
            denom: denom / g,
        }
    }

    pub fn integral(a: RingElement) -> Self {
        RationalClass {
            numer: a,
            denom: BigInt::one(),
        }
    }

    pub fn ring(&self) -> &GradedRing {
        &self.numer.ring
    }

    pub fn numerator(&self) -> &RingElement {
        &self.numer
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn try_add(&self, other: &RationalClass) -> Result<RationalClass, RingError> {
        let a = self.numer.scale(&other.denom);
        let b = other.numer.scale(&self.denom);
        Ok(RationalClass::new(a.try_add(&b)?, &self.denom * &other.denom))
    }

    pub fn multiply(&self, other: &RationalClass) -> Result<RationalClass, RingError> {
        Ok(RationalClass::new(
            self.numer.multiply(&other.numer)?,
            &self.denom * &other.denom,
        ))
    }

    /// Rational coefficient of a monomial.
    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        BigRational::new(self.numer.coefficient(m), self.denom.clone())
    }

    pub fn degree_evaluate(&self) -> Result<BigRational, RingError> {
        Ok(BigRational::new(self.numer.degree_evaluate()?, self.denom.clone()))
    }
}

impl fmt::Display for RationalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "({})/{}", self.numer, self.denom)
        }
    }
}

/// Parses `c*g^e*h - 2*g + 5` into exponent vectors over `generators`.
fn parse_terms(generators: &[&str], text: &str) -> Result<Vec<(Vec<u32>, BigInt)>, RingError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(RingError::Parse("empty expression".into()));
    }
    let mut terms = Vec::new();
    let mut rest = compact.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let mut sign = BigInt::one();
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r;
        } else if !first {
            return Err(RingError::Parse(format!("expected `+` or `-` before `{rest}`")));
        }
        first = false;
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (term, tail) = rest.split_at(end);
        rest = tail;
        if term.is_empty() {
            return Err(RingError::Parse(format!("missing term in `{text}`")));
        }
        let mut coeff = sign;
        let mut exps = vec![0u32; generators.len()];
        for factor in term.split('*') {
            if factor.is_empty() {
                return Err(RingError::Parse(format!("empty factor in `{term}`")));
            }
            if factor.chars().all(|c| c.is_ascii_digit()) {
                coeff *= factor
                    .parse::<BigInt>()
                    .map_err(|e| RingError::Parse(format!("{factor}: {e}")))?;
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<u32>()
                        .map_err(|_| RingError::Parse(format!("bad exponent in `{factor}`")))?,
                ),
                None => (factor, 1),
            };
            let i = generators
                .iter()
                .position(|g| *g == name)
                .ok_or_else(|| RingError::Parse(format!("unknown generator `{name}`")))?;
            exps[i] += exp;
        }
        terms.push((exps, coeff));
    }
    Ok(terms)
}
