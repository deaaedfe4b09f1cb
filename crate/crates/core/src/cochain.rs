//! Cochains of the four-term dg complex computing Hochschild cohomology.
//!
//! A degree-i cochain is a finite sum of components `label (x) a` where the
//! label is a degree-i monomial of the skew exterior algebra and `a` is an
//! algebra element in normal form. The differential is
//!
//! ```text
//!   a        |->  t (x) [x,a]  +  u (x) [y,a]
//!   t (x) a  |->  t^u (x) (ya + ay)
//!   u (x) a  |->  t^u (x) (xa + ax)
//!   v (x) a  |->  t^v (x) [x,a]  +  u^v (x) [y,a]  +  t^u (x) a
//!   t^u      |->  0
//!   t^v (x) a |-> t^u^v (x) (ya + ay)
//!   u^v (x) a |-> t^u^v (x) (xa + ax)
//!   t^u^v    |->  0
//! ```
//!
//! extended linearly. With the label weight offsets from `wedge`, every
//! component of d is weight homogeneous; d raises the weight of a degree
//! 0, 1, 2 cochain by 2, 4, 2 respectively.

use std::collections::BTreeMap;
use std::fmt;

use crate::ncpoly::{commutator, xi_x, xi_y, AlgebraElement, Gen};
use crate::scalar::{FieldSpec, Scalar};
use crate::wedge::WedgeMonomial;

/// Weight gained by the differential out of each cohomological degree.
pub const DIFFERENTIAL_WEIGHT_SHIFT: [u32; 3] = [2, 4, 2];

/// A cochain of fixed cohomological degree.
///
/// Components are stored sparsely; stored algebra elements are nonzero and
/// in normal form. Degree 4 is allowed as the (always zero) target of the
/// top differential.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    degree: u8,
    components: BTreeMap<WedgeMonomial, AlgebraElement>,
}

impl Cochain {
    pub fn zero(degree: u8) -> Self {
        Cochain { degree, components: BTreeMap::new() }
    }

    /// A single component `label (x) a`.
    pub fn from_part(label: WedgeMonomial, a: AlgebraElement) -> Self {
        let mut c = Cochain::zero(label.degree());
        c.add_part(label, a);
        c
    }

    /// A degree-0 cochain from an algebra element.
    pub fn scalar_cochain(a: AlgebraElement) -> Self {
        Self::from_part(WedgeMonomial::One, a)
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, label: WedgeMonomial) -> Option<&AlgebraElement> {
        self.components.get(&label)
    }

    pub fn components(&self) -> impl Iterator<Item = (&WedgeMonomial, &AlgebraElement)> {
        self.components.iter()
    }

    pub fn add_part(&mut self, label: WedgeMonomial, a: AlgebraElement) {
        assert_eq!(
            label.degree(),
            self.degree,
            "component degree does not match cochain degree"
        );
        if a.is_zero() {
            return;
        }
        match self.components.remove(&label) {
            None => {
                self.components.insert(label, a);
            }
            Some(old) => {
                let sum = old.add(&a);
                if !sum.is_zero() {
                    self.components.insert(label, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "degree mismatch in cochain sum");
        let mut out = self.clone();
        for (l, a) in other.components() {
            out.add_part(*l, a.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Cochain {
            degree: self.degree,
            components: self.components.iter().map(|(l, a)| (*l, a.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Cochain::zero(self.degree);
        }
        Cochain {
            degree: self.degree,
            components: self.components.iter().map(|(l, a)| (*l, a.scale(c))).collect(),
        }
    }

    pub fn scale_i64(&self, n: i64) -> Self {
        if n == 0 {
            return Cochain::zero(self.degree);
        }
        Cochain {
            degree: self.degree,
            components: self.components.iter().map(|(l, a)| (*l, a.scale_i64(n))).collect(),
        }
    }

    /// Right multiplication of every algebra factor; the module action of
    /// the center (callers pass central `s`, for which left and right
    /// multiplication agree).
    pub fn mul_algebra_right(&self, s: &AlgebraElement) -> Self {
        let mut out = Cochain::zero(self.degree);
        for (l, a) in self.components() {
            out.add_part(*l, a.mul(s));
        }
        out
    }

    /// Left multiplication of every algebra factor.
    pub fn mul_algebra_left(&self, s: &AlgebraElement) -> Self {
        let mut out = Cochain::zero(self.degree);
        for (l, a) in self.components() {
            out.add_part(*l, s.mul(a));
        }
        out
    }

    /// Weight of a homogeneous cochain (label offset plus monomial weight
    /// on every term); `None` when inhomogeneous or zero.
    pub fn weight(&self) -> Option<u32> {
        let mut weight = None;
        for (l, a) in self.components() {
            let aw = a.weight()?;
            let w = l.weight_offset() + aw;
            match weight {
                None => weight = Some(w),
                Some(prev) if prev == w => {}
                Some(_) => return None,
            }
        }
        weight
    }

    /// The differential. Degree-3 input yields the zero cochain of degree 4.
    pub fn differential(&self, field: FieldSpec) -> Cochain {
        let out_degree = (self.degree + 1).min(4);
        let mut out = Cochain::zero(out_degree);
        for (label, a) in self.components() {
            match label {
                WedgeMonomial::One => {
                    out.add_part(WedgeMonomial::T, commutator(Gen::X, a, field));
                    out.add_part(WedgeMonomial::U, commutator(Gen::Y, a, field));
                }
                WedgeMonomial::T => {
                    out.add_part(WedgeMonomial::Tu, xi_y(a, field));
                }
                WedgeMonomial::U => {
                    out.add_part(WedgeMonomial::Tu, xi_x(a, field));
                }
                WedgeMonomial::V => {
                    out.add_part(WedgeMonomial::Tv, commutator(Gen::X, a, field));
                    out.add_part(WedgeMonomial::Uv, commutator(Gen::Y, a, field));
                    out.add_part(WedgeMonomial::Tu, a.clone());
                }
                WedgeMonomial::Tu => {}
                WedgeMonomial::Tv => {
                    out.add_part(WedgeMonomial::Tuv, xi_y(a, field));
                }
                WedgeMonomial::Uv => {
                    out.add_part(WedgeMonomial::Tuv, xi_x(a, field));
                }
                WedgeMonomial::Tuv => {}
            }
        }
        out
    }
}

impl fmt::Display for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (l, a) in self.components() {
            // Pull a leading minus out of the component for readability.
            let neg = a.leading().map(|(_, c)| c.is_negative()).unwrap_or(false);
            let body = if neg { a.neg() } else { a.clone() };
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
            write!(f, "{} # ({})", l.label(), body)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::PbwMonomial;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    #[test]
    fn differential_of_x() {
        // d(x) = u (x) (z - 2 x y)
        let x = Cochain::scalar_cochain(AlgebraElement::generator(Gen::X, q()));
        let d = x.differential(q());
        let mut want_u = AlgebraElement::monomial(PbwMonomial::new(0, 0, 1), q().one());
        want_u.add_term(PbwMonomial::new(1, 1, 0), q().integer(-2));
        assert_eq!(d, Cochain::from_part(WedgeMonomial::U, want_u));
    }

    #[test]
    fn differential_of_t_x() {
        // d(t (x) x) = t^u (x) z
        let c = Cochain::from_part(WedgeMonomial::T, AlgebraElement::generator(Gen::X, q()));
        let d = c.differential(q());
        assert_eq!(
            d,
            Cochain::from_part(WedgeMonomial::Tu, AlgebraElement::generator(Gen::Z, q()))
        );
    }

    #[test]
    fn differential_of_v_one() {
        // d(v (x) 1) = t^u (x) 1
        let c = Cochain::from_part(WedgeMonomial::V, AlgebraElement::one(q()));
        let d = c.differential(q());
        assert_eq!(d, Cochain::from_part(WedgeMonomial::Tu, AlgebraElement::one(q())));
    }

    #[test]
    fn top_degree_maps_to_zero() {
        let c = Cochain::from_part(WedgeMonomial::Tuv, AlgebraElement::one(q()));
        let d = c.differential(q());
        assert_eq!(d.degree(), 4);
        assert!(d.is_zero());
    }

    #[test]
    fn weight_uses_label_offsets() {
        // t (x) x and v (x) 2z both sit in weight 2; their sum is homogeneous.
        let t_x = Cochain::from_part(WedgeMonomial::T, AlgebraElement::generator(Gen::X, q()));
        assert_eq!(t_x.weight(), Some(2));
        let v_z = Cochain::from_part(
            WedgeMonomial::V,
            AlgebraElement::generator(Gen::Z, q()).scale_i64(2),
        );
        assert_eq!(v_z.weight(), Some(2));
        assert_eq!(t_x.add(&v_z).weight(), Some(2));
        // t^u^v (x) 1 sits in weight 4.
        let top = Cochain::from_part(WedgeMonomial::Tuv, AlgebraElement::one(q()));
        assert_eq!(top.weight(), Some(4));
    }

    #[test]
    fn differential_shifts_weight_consistently() {
        for (deg, shift) in DIFFERENTIAL_WEIGHT_SHIFT.iter().enumerate() {
            for label in WedgeMonomial::by_degree(deg as u8) {
                for w in 0..=6u32 {
                    for m in crate::ncpoly::monomials_of_weight(w) {
                        let c = Cochain::from_part(*label, AlgebraElement::monomial(m, q().one()));
                        let d = c.differential(q());
                        if !d.is_zero() {
                            assert_eq!(d.weight(), Some(c.weight().unwrap() + shift));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn display_matches_grammar() {
        let mut c = Cochain::from_part(WedgeMonomial::Tv, AlgebraElement::generator(Gen::X, q()));
        c.add_part(
            WedgeMonomial::Uv,
            AlgebraElement::generator(Gen::Y, q()).neg(),
        );
        assert_eq!(c.to_string(), "t^v # (x) - u^v # (y)");
    }
}
