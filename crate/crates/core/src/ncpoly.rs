//! Exact arithmetic in the down-up algebra A = A(0,1,0).
//!
//! A is presented as k<x,y,z> / ([x,z], [y,z], xy + yx - z) and carries the
//! PBW basis of ordered monomials x^n1 y^n2 z^n3. Everything here keeps
//! elements in normal form: a sorted, sparse map from basis monomials to
//! nonzero scalars. The grading is |x| = |y| = 1, |z| = 2, which makes all
//! three relations homogeneous.
//!
//! Two independent product routes exist on purpose. `AlgebraElement::mul`
//! uses the closed form below; `normal_form_word` rewrites generator words
//! with the oriented rules
//!
//! ```text
//!   y x  ->  z - x y,     z x  ->  x z,     z y  ->  y z
//! ```
//!
//! applied to completion. The test suite checks that both routes, and both
//! redex strategies, agree.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::{FieldSpec, Scalar};

/// A generator of the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    X,
    Y,
    Z,
}

impl Gen {
    pub fn weight(self) -> u32 {
        match self {
            Gen::X | Gen::Y => 1,
            Gen::Z => 2,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Gen::X => 'x',
            Gen::Y => 'y',
            Gen::Z => 'z',
        }
    }
}

/// A PBW basis monomial x^n1 y^n2 z^n3.
///
/// The total order is graded, then lexicographic in (n1, n2, n3); canonical
/// printing follows this order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PbwMonomial {
    pub n1: u32,
    pub n2: u32,
    pub n3: u32,
}

impl PbwMonomial {
    pub const ONE: PbwMonomial = PbwMonomial { n1: 0, n2: 0, n3: 0 };

    pub fn new(n1: u32, n2: u32, n3: u32) -> Self {
        PbwMonomial { n1, n2, n3 }
    }

    pub fn weight(&self) -> u32 {
        self.n1 + self.n2 + 2 * self.n3
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    /// True when the monomial lies in the center k[x^2, y^2, z].
    pub fn is_central(&self) -> bool {
        self.n1 % 2 == 0 && self.n2 % 2 == 0
    }
}

impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.weight(), self.n1, self.n2, self.n3).cmp(&(
            other.weight(),
            other.n1,
            other.n2,
            other.n3,
        ))
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (sym, e) in [('x', self.n1), ('y', self.n2), ('z', self.n3)] {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{sym}")?;
            } else {
                write!(f, "{sym}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A monomial of the center S = k[x^2, y^2, z]: (x^2)^e1 (y^2)^e2 z^e3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CenterMonomial {
    pub e1: u32,
    pub e2: u32,
    pub e3: u32,
}

impl CenterMonomial {
    pub fn new(e1: u32, e2: u32, e3: u32) -> Self {
        CenterMonomial { e1, e2, e3 }
    }

    pub fn to_pbw(self) -> PbwMonomial {
        PbwMonomial::new(2 * self.e1, 2 * self.e2, self.e3)
    }

    pub fn weight(self) -> u32 {
        2 * (self.e1 + self.e2 + self.e3)
    }
}

/// All PBW monomials of the given weight, in canonical order.
pub fn monomials_of_weight(w: u32) -> Vec<PbwMonomial> {
    let mut out = Vec::new();
    for n1 in 0..=w {
        for n2 in 0..=(w - n1) {
            let rest = w - n1 - n2;
            if rest % 2 == 0 {
                out.push(PbwMonomial::new(n1, n2, rest / 2));
            }
        }
    }
    // Constructed in ascending (n1, n2) order already; the weight is fixed,
    // so this is the canonical graded-lex order.
    out
}

/// All center monomials of the given weight, in canonical order of their
/// PBW images.
pub fn center_monomials_of_weight(w: u32) -> Vec<CenterMonomial> {
    if w % 2 != 0 {
        return Vec::new();
    }
    let half = w / 2;
    let mut out = Vec::new();
    for e1 in 0..=half {
        for e2 in 0..=(half - e1) {
            out.push(CenterMonomial::new(e1, e2, half - e1 - e2));
        }
    }
    out.sort_by_key(|c| c.to_pbw());
    out
}

/// Normal-form product of two basis monomials.
///
/// Since x^2 and y^2 are central, the only noncommutative step is moving an
/// odd block of y's past an odd block of x's, and
///
/// ```text
///   y^b x^a = x^(a-1) y^(b-1) z - x^a y^b     (a, b odd)
/// ```
///
/// so a monomial product has at most two terms.
pub fn pbw_product(a: &PbwMonomial, b: &PbwMonomial) -> ((PbwMonomial, i64), Option<(PbwMonomial, i64)>) {
    let straight = PbwMonomial::new(a.n1 + b.n1, a.n2 + b.n2, a.n3 + b.n3);
    if a.n2 % 2 == 0 || b.n1 % 2 == 0 {
        ((straight, 1), None)
    } else {
        let swapped = PbwMonomial::new(a.n1 + b.n1 - 1, a.n2 + b.n2 - 1, a.n3 + b.n3 + 1);
        ((swapped, 1), Some((straight, -1)))
    }
}

/// An element of A in PBW normal form: a finite sparse sum of basis
/// monomials with nonzero coefficients. Structural equality is semantic
/// equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<PbwMonomial, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement { terms: BTreeMap::new() }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::monomial(PbwMonomial::ONE, field.one())
    }

    pub fn generator(g: Gen, field: FieldSpec) -> Self {
        let m = match g {
            Gen::X => PbwMonomial::new(1, 0, 0),
            Gen::Y => PbwMonomial::new(0, 1, 0),
            Gen::Z => PbwMonomial::new(0, 0, 1),
        };
        Self::monomial(m, field.one())
    }

    pub fn monomial(m: PbwMonomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        AlgebraElement { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (PbwMonomial, Scalar)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in it {
            out.add_term(m, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    /// Leading (first in canonical order) term.
    pub fn leading(&self) -> Option<(&PbwMonomial, &Scalar)> {
        self.terms.first_key_value()
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let sum = old.add(&c);
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(*m, c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(m, v)| (*m, v.mul(c))).collect(),
        }
    }

    pub fn scale_i64(&self, n: i64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(m, v)| (*m, v.scale_i64(n))).collect(),
        }
    }

    /// Noncommutative product, output in normal form.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                let c = ca.mul(cb);
                let (first, second) = pbw_product(ma, mb);
                out.add_term(first.0, c.scale_i64(first.1));
                if let Some((m, sign)) = second {
                    out.add_term(m, c.scale_i64(sign));
                }
            }
        }
        out
    }

    /// weight(w) of a homogeneous element; `None` when inhomogeneous or zero.
    pub fn weight(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let w = it.next()?.weight();
        if it.all(|m| m.weight() == w) {
            Some(w)
        } else {
            None
        }
    }

    /// True when every monomial lies in k[x^2, y^2, z].
    pub fn is_central_form(&self) -> bool {
        self.terms.keys().all(|m| m.is_central())
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            let neg = c.is_negative();
            let mag = if neg { c.neg() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// The commutator [g, a] = g a - a g.
pub fn commutator(g: Gen, a: &AlgebraElement, field: FieldSpec) -> AlgebraElement {
    let ge = AlgebraElement::generator(g, field);
    ge.mul(a).sub(&a.mul(&ge))
}

/// The anticommutator map xi_x : a -> x a + a x.
pub fn xi_x(a: &AlgebraElement, field: FieldSpec) -> AlgebraElement {
    let x = AlgebraElement::generator(Gen::X, field);
    x.mul(a).add(&a.mul(&x))
}

/// The anticommutator map xi_y : a -> y a + a y.
pub fn xi_y(a: &AlgebraElement, field: FieldSpec) -> AlgebraElement {
    let y = AlgebraElement::generator(Gen::Y, field);
    y.mul(a).add(&a.mul(&y))
}

/// Which redex a rewriting step contracts first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RewriteStrategy {
    LeftmostRedex,
    RightmostRedex,
}

/// Normal form of a generator word by rewriting, with a choice of strategy.
///
/// This is the reference semantics for `normal_form`; the closed-form
/// product above must agree with it (tested, not assumed).
pub fn normal_form_word_with(
    word: &[Gen],
    coeff: Scalar,
    strategy: RewriteStrategy,
) -> AlgebraElement {
    let field = coeff.field();
    let mut pending: Vec<(Vec<Gen>, Scalar)> = vec![(word.to_vec(), coeff)];
    let mut done = AlgebraElement::zero();

    while let Some((w, c)) = pending.pop() {
        if c.is_zero() {
            continue;
        }
        let redex = match strategy {
            RewriteStrategy::LeftmostRedex => (0..w.len().saturating_sub(1)).find(|&i| is_redex(w[i], w[i + 1])),
            RewriteStrategy::RightmostRedex => (0..w.len().saturating_sub(1)).rev().find(|&i| is_redex(w[i], w[i + 1])),
        };
        match redex {
            None => {
                // Word is ordered: count exponents.
                let m = PbwMonomial::new(
                    w.iter().filter(|g| **g == Gen::X).count() as u32,
                    w.iter().filter(|g| **g == Gen::Y).count() as u32,
                    w.iter().filter(|g| **g == Gen::Z).count() as u32,
                );
                done.add_term(m, c);
            }
            Some(i) => match (w[i], w[i + 1]) {
                // y x -> z - x y
                (Gen::Y, Gen::X) => {
                    let mut with_z = Vec::with_capacity(w.len() - 1);
                    with_z.extend_from_slice(&w[..i]);
                    with_z.push(Gen::Z);
                    with_z.extend_from_slice(&w[i + 2..]);
                    let mut with_xy = w.clone();
                    with_xy[i] = Gen::X;
                    with_xy[i + 1] = Gen::Y;
                    pending.push((with_z, c.clone()));
                    pending.push((with_xy, c.neg()));
                }
                // z x -> x z, z y -> y z
                (Gen::Z, _) => {
                    let mut swapped = w.clone();
                    swapped.swap(i, i + 1);
                    pending.push((swapped, c));
                }
                _ => unreachable!("not a redex"),
            },
        }
        let _ = field;
    }
    done
}

fn is_redex(a: Gen, b: Gen) -> bool {
    matches!((a, b), (Gen::Y, Gen::X) | (Gen::Z, Gen::X) | (Gen::Z, Gen::Y))
}

/// Normal form of a scalar-weighted generator word.
pub fn normal_form(word: &[Gen], coeff: Scalar) -> AlgebraElement {
    normal_form_word_with(word, coeff, RewriteStrategy::LeftmostRedex)
}
