//! Per-(degree, weight) slices of the dg complex.
//!
//! A slice holds the ordered basis of its component together with the
//! matrix of the differential into the next degree. The differential out of
//! degree i lands `DIFFERENTIAL_WEIGHT_SHIFT[i]` weights higher, so the
//! matrix of slice (i, w) has rows indexed by the basis of
//! (i+1, w + shift).

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use crate::cochain::{Cochain, DIFFERENTIAL_WEIGHT_SHIFT};
use crate::linalg::Matrix;
use crate::ncpoly::{monomials_of_weight, AlgebraElement, PbwMonomial};
use crate::scalar::FieldSpec;
use crate::wedge::WedgeMonomial;

/// The ordered basis of the degree-i, weight-w component: all pairs
/// `(label, monomial)` with `deg(label) = i` and
/// `weight_offset(label) + weight(monomial) = w`, labels in canonical
/// order, monomials in graded-lex order.
pub fn weight_basis(degree: u8, weight: u32) -> Vec<(WedgeMonomial, PbwMonomial)> {
    let mut out = Vec::new();
    for label in WedgeMonomial::by_degree(degree) {
        let offset = label.weight_offset();
        if weight < offset {
            continue;
        }
        for m in monomials_of_weight(weight - offset) {
            out.push((*label, m));
        }
    }
    out
}

/// Expands a cochain in the basis of its slice. Fails if a term falls
/// outside the slice (wrong degree or weight).
pub fn coordinates_in_basis(
    c: &Cochain,
    basis: &[(WedgeMonomial, PbwMonomial)],
    field: FieldSpec,
) -> Option<Vec<crate::scalar::Scalar>> {
    let index: BTreeMap<(WedgeMonomial, PbwMonomial), usize> = basis
        .iter()
        .enumerate()
        .map(|(i, key)| (*key, i))
        .collect();
    let mut v = vec![field.zero(); basis.len()];
    for (label, a) in c.components() {
        for (m, coeff) in a.terms() {
            let idx = index.get(&(*label, *m))?;
            v[*idx] = coeff.clone();
        }
    }
    Some(v)
}

/// Rebuilds the cochain with the given coordinates in a slice basis.
pub fn cochain_from_coordinates(
    degree: u8,
    basis: &[(WedgeMonomial, PbwMonomial)],
    coords: &[crate::scalar::Scalar],
) -> Cochain {
    assert_eq!(basis.len(), coords.len());
    let mut c = Cochain::zero(degree);
    for ((label, m), coeff) in basis.iter().zip(coords) {
        if !coeff.is_zero() {
            c.add_part(*label, AlgebraElement::monomial(*m, coeff.clone()));
        }
    }
    c
}

/// One unit of linear algebra: a slice of the complex with its outgoing
/// differential in matrix form.
#[derive(Debug, Clone)]
pub struct WeightSlice {
    pub degree: u8,
    pub weight: u32,
    pub basis: Vec<(WedgeMonomial, PbwMonomial)>,
    /// Weight of the target slice (this weight plus the degree shift).
    pub target_weight: u32,
    pub target_basis: Vec<(WedgeMonomial, PbwMonomial)>,
    /// Matrix of d with columns indexed by `basis`, rows by `target_basis`.
    pub matrix: Matrix,
}

impl WeightSlice {
    pub fn build(degree: u8, weight: u32, field: FieldSpec) -> Self {
        let basis = weight_basis(degree, weight);
        let (target_weight, target_basis) = if (degree as usize) < DIFFERENTIAL_WEIGHT_SHIFT.len() {
            let tw = weight + DIFFERENTIAL_WEIGHT_SHIFT[degree as usize];
            (tw, weight_basis(degree + 1, tw))
        } else {
            (weight, Vec::new())
        };
        let mut matrix = Matrix::zero(target_basis.len(), basis.len(), field);
        let index: BTreeMap<(WedgeMonomial, PbwMonomial), usize> = target_basis
            .iter()
            .enumerate()
            .map(|(i, key)| (*key, i))
            .collect();
        for (col, (label, m)) in basis.iter().enumerate() {
            let c = Cochain::from_part(*label, AlgebraElement::monomial(*m, field.one()));
            let d = c.differential(field);
            for (dl, da) in d.components() {
                for (dm, coeff) in da.terms() {
                    let row = *index
                        .get(&(*dl, *dm))
                        .expect("differential left the target slice");
                    matrix.set(row, col, coeff.clone());
                }
            }
        }
        WeightSlice {
            degree,
            weight,
            basis,
            target_weight,
            target_basis,
            matrix,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Write-once cache of slices keyed by (degree, weight).
pub struct SliceCache {
    field: FieldSpec,
    slices: Mutex<BTreeMap<(u8, u32), Arc<WeightSlice>>>,
}

impl SliceCache {
    pub fn new(field: FieldSpec) -> Self {
        SliceCache {
            field,
            slices: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, degree: u8, weight: u32) -> Arc<WeightSlice> {
        if let Some(s) = self.slices.lock().unwrap().get(&(degree, weight)) {
            return Arc::clone(s);
        }
        // Built outside the lock; concurrent builders produce identical
        // values, the first insert wins.
        let built = Arc::new(WeightSlice::build(degree, weight, self.field));
        let mut guard = self.slices.lock().unwrap();
        Arc::clone(guard.entry((degree, weight)).or_insert(built))
    }
}

/// A d∘d violation witness.
#[derive(Debug, Clone)]
pub struct ComplexViolation {
    pub degree: u8,
    pub weight: u32,
    pub basis_cochain: String,
    pub image: String,
}

/// Report of the d∘d = 0 sweep.
#[derive(Debug, Clone)]
pub struct ComplexReport {
    pub weight_bound: u32,
    pub cochains_checked: usize,
    pub violations: Vec<ComplexViolation>,
}

impl ComplexReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Applies the differential twice to every basis cochain of degree 0..=2
/// and weight <= `w_max`, recording any nonzero composite.
pub fn check_complex(field: FieldSpec, w_max: u32) -> ComplexReport {
    let mut checked = 0usize;
    let mut violations = Vec::new();
    for degree in 0u8..=2 {
        for weight in 0..=w_max {
            for (label, m) in weight_basis(degree, weight) {
                let c = Cochain::from_part(label, AlgebraElement::monomial(m, field.one()));
                let dd = c.differential(field).differential(field);
                checked += 1;
                if !dd.is_zero() {
                    violations.push(ComplexViolation {
                        degree,
                        weight,
                        basis_cochain: c.to_string(),
                        image: dd.to_string(),
                    });
                }
            }
        }
    }
    ComplexReport {
        weight_bound: w_max,
        cochains_checked: checked,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::Gen;

    fn q() -> FieldSpec {
        FieldSpec::Rational
    }

    #[test]
    fn basis_examples() {
        // degree 0, weight 2: x^2, x*y, y^2, z
        let b = weight_basis(0, 2);
        assert_eq!(b.len(), 4);
        let monos: Vec<PbwMonomial> = b.iter().map(|(_, m)| *m).collect();
        assert!(monos.contains(&PbwMonomial::new(2, 0, 0)));
        assert!(monos.contains(&PbwMonomial::new(1, 1, 0)));
        assert!(monos.contains(&PbwMonomial::new(0, 2, 0)));
        assert!(monos.contains(&PbwMonomial::new(0, 0, 1)));
        // degree 3, weight 4: only the top label tensor 1
        let b = weight_basis(3, 4);
        assert_eq!(b.len(), 1);
        assert_eq!(b[0], (WedgeMonomial::Tuv, PbwMonomial::ONE));
        // degree 0, weight 0: just 1
        assert_eq!(weight_basis(0, 0), vec![(WedgeMonomial::One, PbwMonomial::ONE)]);
    }

    #[test]
    fn basis_is_deterministic_and_ordered() {
        let b1 = weight_basis(1, 6);
        let b2 = weight_basis(1, 6);
        assert_eq!(b1, b2);
        // labels appear in canonical order t, u, v
        let labels: Vec<WedgeMonomial> = b1.iter().map(|(l, _)| *l).collect();
        let mut seen = Vec::new();
        for l in labels {
            if seen.last() != Some(&l) {
                seen.push(l);
            }
        }
        assert_eq!(seen, vec![WedgeMonomial::T, WedgeMonomial::U, WedgeMonomial::V]);
    }

    #[test]
    fn top_slice_has_no_rows() {
        let s = WeightSlice::build(3, 7, q());
        assert_eq!(s.matrix.rows, 0);
    }

    #[test]
    fn degree0_weight0_is_zero_map() {
        let s = WeightSlice::build(0, 0, q());
        assert_eq!(s.dim(), 1);
        assert!(s.matrix.is_zero());
    }

    #[test]
    fn slice_2_3_tv_column() {
        // d(t^v (x) 1) = t^u^v (x) 2y: a single entry 2 in the t^v column
        let s = WeightSlice::build(2, 3, q());
        assert_eq!(s.basis.len(), 2); // t^v (x) 1 and u^v (x) 1
        let col = s
            .basis
            .iter()
            .position(|&(l, m)| l == WedgeMonomial::Tv && m == PbwMonomial::ONE)
            .unwrap();
        assert_eq!(s.target_weight, 5);
        let y_row = s
            .target_basis
            .iter()
            .position(|&(l, m)| l == WedgeMonomial::Tuv && m == PbwMonomial::new(0, 1, 0))
            .unwrap();
        assert_eq!(*s.matrix.at(y_row, col), q().integer(2));
        for r in 0..s.matrix.rows {
            if r != y_row {
                assert!(s.matrix.at(r, col).is_zero());
            }
        }
    }

    #[test]
    fn composite_matrices_vanish() {
        // matrix route for d.d = 0, complementing the cochain route
        let cache = SliceCache::new(q());
        for degree in 0u8..=2 {
            for w in 0..=8u32 {
                let s = cache.get(degree, w);
                let next = cache.get(degree + 1, s.target_weight);
                assert_eq!(next.basis, s.target_basis);
                let composite = next.matrix.mul(&s.matrix);
                assert!(composite.is_zero(), "d.d != 0 at ({degree}, {w})");
            }
        }
    }

    #[test]
    fn check_complex_passes_small() {
        let r = check_complex(q(), 6);
        assert!(r.passed());
        assert!(r.cochains_checked > 0);
    }

    #[test]
    fn dd_of_x_vanishes() {
        let x = Cochain::scalar_cochain(AlgebraElement::generator(Gen::X, q()));
        assert!(x.differential(q()).differential(q()).is_zero());
    }
}
