//! Exact homology of the complex, one (degree, weight) slice at a time.
//!
//! For each slice we row-reduce the outgoing differential for its kernel
//! and the incoming differential for its image, choose a deterministic
//! complement of the boundaries inside the cycles (greedy over the
//! canonical kernel basis), and keep an explicit preimage witness for every
//! boundary basis vector. Cocycles reduce to coordinates in the complement;
//! boundary membership comes with a witness, non-membership with the
//! residual class.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::cochain::{Cochain, DIFFERENTIAL_WEIGHT_SHIFT};
use crate::complex::{cochain_from_coordinates, coordinates_in_basis, SliceCache, WeightSlice};
use crate::hilbert;
use crate::linalg::{rref, solve, Matrix, SpanTracker};
use crate::ncpoly::{AlgebraElement, Gen, PbwMonomial};
use crate::scalar::{FieldSpec, Scalar};
use crate::wedge::WedgeMonomial;

/// Cycles, boundaries and a chosen complement for one slice.
#[derive(Debug)]
pub struct SliceHomology {
    pub degree: u8,
    pub weight: u32,
    pub dim_cochains: usize,
    pub dim_cycles: usize,
    pub dim_boundaries: usize,
    pub dim_homology: usize,
    /// Canonical kernel basis of the outgoing differential.
    pub cycle_basis: Vec<Vec<Scalar>>,
    /// Boundary basis vectors with explicit preimage cochains.
    pub boundary_basis: Vec<(Vec<Scalar>, Cochain)>,
    /// Complement representatives: coordinates and cochains.
    pub rep_vectors: Vec<Vec<Scalar>>,
    pub rep_cochains: Vec<Cochain>,
    slice: Arc<WeightSlice>,
    /// Columns: boundaries then representatives.
    reduction_matrix: Matrix,
}

/// A cocycle reduced against the chosen complement basis.
#[derive(Debug, Clone)]
pub struct CohomologyClass {
    pub degree: u8,
    pub weight: u32,
    /// Coordinates in the slice's complement basis.
    pub coordinates: Vec<Scalar>,
    pub representative: Cochain,
}

impl CohomologyClass {
    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(|c| c.is_zero())
    }
}

/// Outcome of a boundary-membership test.
#[derive(Debug, Clone)]
pub enum BoundaryTest {
    Boundary { witness: Cochain },
    NotBoundary { class: CohomologyClass },
}

impl BoundaryTest {
    pub fn is_boundary(&self) -> bool {
        matches!(self, BoundaryTest::Boundary { .. })
    }
}

#[derive(Debug, Clone)]
pub enum ReduceError {
    NotCocycle { image: String },
    Inhomogeneous,
    DegreeOutOfRange(u8),
}

impl std::fmt::Display for ReduceError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ReduceError::NotCocycle { image } => write!(f, "not a cocycle; d(c) = {image}"),
            ReduceError::Inhomogeneous => write!(f, "cochain is not weight homogeneous"),
            ReduceError::DegreeOutOfRange(d) => write!(f, "degree {d} outside 0..=3"),
        }
    }
}

impl std::error::Error for ReduceError {}

/// Shared engine: slice cache plus memoized slice homology.
pub struct HomologyEngine {
    field: FieldSpec,
    pub slices: SliceCache,
    homology: Mutex<BTreeMap<(u8, u32), Arc<SliceHomology>>>,
}

impl HomologyEngine {
    pub fn new(field: FieldSpec) -> Self {
        HomologyEngine {
            field,
            slices: SliceCache::new(field),
            homology: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn homology(&self, degree: u8, weight: u32) -> Arc<SliceHomology> {
        if let Some(h) = self.homology.lock().unwrap().get(&(degree, weight)) {
            return Arc::clone(h);
        }
        let built = Arc::new(self.compute_homology(degree, weight));
        let mut guard = self.homology.lock().unwrap();
        Arc::clone(guard.entry((degree, weight)).or_insert(built))
    }

    fn compute_homology(&self, degree: u8, weight: u32) -> SliceHomology {
        assert!(degree <= 3, "complex is zero above degree 3");
        let slice = self.slices.get(degree, weight);
        let dim = slice.dim();

        let outgoing = rref(slice.matrix.clone());
        let cycle_basis = outgoing.kernel_basis();

        // Image of the incoming differential, with witnesses read off the
        // pivot columns: column j of the incoming matrix is d applied to
        // source basis cochain j.
        let mut boundary_basis: Vec<(Vec<Scalar>, Cochain)> = Vec::new();
        if degree > 0 {
            let shift = DIFFERENTIAL_WEIGHT_SHIFT[(degree - 1) as usize];
            if weight >= shift {
                let prev = self.slices.get(degree - 1, weight - shift);
                debug_assert_eq!(prev.target_weight, weight);
                debug_assert_eq!(prev.target_basis, slice.basis);
                let reduced = rref(prev.matrix.clone());
                for &col in &reduced.pivots {
                    let vector = prev.matrix.column(col);
                    let (label, m) = prev.basis[col];
                    let witness =
                        Cochain::from_part(label, AlgebraElement::monomial(m, self.field.one()));
                    boundary_basis.push((vector, witness));
                }
            }
        }

        // Deterministic greedy complement: the first kernel vectors
        // independent of the boundaries, in canonical order.
        let mut tracker = SpanTracker::new(dim, self.field);
        for (v, _) in &boundary_basis {
            let grew = tracker.insert(v);
            debug_assert!(grew, "boundary basis vectors must be independent");
        }
        let mut rep_vectors = Vec::new();
        for v in &cycle_basis {
            if tracker.insert(v) {
                rep_vectors.push(v.clone());
            }
        }
        let rep_cochains: Vec<Cochain> = rep_vectors
            .iter()
            .map(|v| cochain_from_coordinates(degree, &slice.basis, v))
            .collect();

        let columns: Vec<Vec<Scalar>> = boundary_basis
            .iter()
            .map(|(v, _)| v.clone())
            .chain(rep_vectors.iter().cloned())
            .collect();
        let reduction_matrix = Matrix::from_columns(&columns, dim, self.field);

        SliceHomology {
            degree,
            weight,
            dim_cochains: dim,
            dim_cycles: cycle_basis.len(),
            dim_boundaries: boundary_basis.len(),
            dim_homology: rep_vectors.len(),
            cycle_basis,
            boundary_basis,
            rep_vectors,
            rep_cochains,
            slice,
            reduction_matrix,
        }
    }

    /// Reduces a homogeneous cocycle to its class coordinates.
    pub fn reduce_to_class(&self, c: &Cochain) -> Result<CohomologyClass, ReduceError> {
        if c.degree() > 3 {
            return Err(ReduceError::DegreeOutOfRange(c.degree()));
        }
        let image = c.differential(self.field);
        if !image.is_zero() {
            return Err(ReduceError::NotCocycle { image: image.to_string() });
        }
        if c.is_zero() {
            return Ok(CohomologyClass {
                degree: c.degree(),
                weight: 0,
                coordinates: Vec::new(),
                representative: c.clone(),
            });
        }
        let weight = c.weight().ok_or(ReduceError::Inhomogeneous)?;
        let h = self.homology(c.degree(), weight);
        let coords = coordinates_in_basis(c, &h.slice.basis, self.field)
            .expect("homogeneous cochain expands in its slice basis");
        let solution = solve(&h.reduction_matrix, &coords)
            .expect("every cocycle lies in boundaries + complement");
        let class_coords = solution[h.dim_boundaries..].to_vec();
        Ok(CohomologyClass {
            degree: c.degree(),
            weight,
            coordinates: class_coords,
            representative: c.clone(),
        })
    }

    /// Boundary membership with witness; non-membership with residual
    /// class coordinates.
    pub fn is_boundary(&self, c: &Cochain) -> Result<BoundaryTest, ReduceError> {
        if c.is_zero() {
            return Ok(BoundaryTest::Boundary {
                witness: Cochain::zero(c.degree().saturating_sub(1)),
            });
        }
        let image = c.differential(self.field);
        if !image.is_zero() {
            return Err(ReduceError::NotCocycle { image: image.to_string() });
        }
        let weight = c.weight().ok_or(ReduceError::Inhomogeneous)?;
        let h = self.homology(c.degree(), weight);
        let coords = coordinates_in_basis(c, &h.slice.basis, self.field)
            .expect("homogeneous cochain expands in its slice basis");
        let solution = solve(&h.reduction_matrix, &coords)
            .expect("every cocycle lies in boundaries + complement");
        let (alpha, beta) = solution.split_at(h.dim_boundaries);
        if beta.iter().all(|s| s.is_zero()) {
            let mut witness = Cochain::zero(c.degree().saturating_sub(1));
            for (a, (_, pre)) in alpha.iter().zip(&h.boundary_basis) {
                if !a.is_zero() {
                    witness = witness.add(&pre.scale(a));
                }
            }
            Ok(BoundaryTest::Boundary { witness })
        } else {
            Ok(BoundaryTest::NotBoundary {
                class: CohomologyClass {
                    degree: c.degree(),
                    weight,
                    coordinates: beta.to_vec(),
                    representative: c.clone(),
                },
            })
        }
    }

    /// One row of the dimensions table.
    pub fn dims_row(&self, degree: u8, weight: u32) -> DimsRow {
        let h = self.homology(degree, weight);
        let expected = hilbert::expected_hh_dim(degree, weight);
        DimsRow {
            degree,
            weight,
            dim_cochains: h.dim_cochains,
            dim_cycles: h.dim_cycles,
            dim_boundaries: h.dim_boundaries,
            dim_homology: h.dim_homology,
            expected_homology: expected,
            matches: h.dim_homology == expected,
        }
    }

    /// The full dimensions table for degrees 0..=3 and weights 0..=w_max,
    /// computed in parallel, emitted in (degree, weight) order.
    pub fn dims_table(&self, w_max: u32) -> Vec<DimsRow> {
        let keys: Vec<(u8, u32)> = (0u8..=3)
            .flat_map(|i| (0..=w_max).map(move |w| (i, w)))
            .collect();
        let mut rows: Vec<DimsRow> = keys
            .par_iter()
            .map(|&(i, w)| self.dims_row(i, w))
            .collect();
        rows.sort_by_key(|r| (r.degree, r.weight));
        rows
    }
}

/// One line of the exported dimensions table.
#[derive(Debug, Clone, serde::Serialize)]
pub struct DimsRow {
    pub degree: u8,
    pub weight: u32,
    pub dim_cochains: usize,
    pub dim_cycles: usize,
    pub dim_boundaries: usize,
    pub dim_homology: usize,
    pub expected_homology: usize,
    pub matches: bool,
}

/// The named generating classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum GeneratorName {
    M0,
    M1,
    TauY,
    MuX,
    Nu0,
    Nu1,
    Nu2,
    Nu3,
    Q1,
    Qxy,
}

pub const ALL_GENERATORS: [GeneratorName; 10] = [
    GeneratorName::M0,
    GeneratorName::M1,
    GeneratorName::TauY,
    GeneratorName::MuX,
    GeneratorName::Nu0,
    GeneratorName::Nu1,
    GeneratorName::Nu2,
    GeneratorName::Nu3,
    GeneratorName::Q1,
    GeneratorName::Qxy,
];

impl GeneratorName {
    pub fn label(self) -> &'static str {
        match self {
            GeneratorName::M0 => "m0",
            GeneratorName::M1 => "m1",
            GeneratorName::TauY => "tau_y",
            GeneratorName::MuX => "mu_x",
            GeneratorName::Nu0 => "nu0",
            GeneratorName::Nu1 => "nu1",
            GeneratorName::Nu2 => "nu2",
            GeneratorName::Nu3 => "nu3",
            GeneratorName::Q1 => "q1",
            GeneratorName::Qxy => "qxy",
        }
    }

    pub fn degree(self) -> u8 {
        match self {
            GeneratorName::M0 | GeneratorName::M1 | GeneratorName::TauY | GeneratorName::MuX => 1,
            GeneratorName::Nu0 | GeneratorName::Nu1 | GeneratorName::Nu2 | GeneratorName::Nu3 => 2,
            GeneratorName::Q1 | GeneratorName::Qxy => 3,
        }
    }

    pub fn weight(self) -> u32 {
        match self {
            GeneratorName::M0 | GeneratorName::M1 | GeneratorName::TauY | GeneratorName::MuX => 2,
            GeneratorName::Nu1 | GeneratorName::Q1 => 4,
            _ => 6,
        }
    }

    /// The canonical cocycle representative.
    pub fn representative(self, field: FieldSpec) -> Cochain {
        let one = field.one();
        let mono = |n1, n2, n3, k: i64| {
            AlgebraElement::monomial(PbwMonomial::new(n1, n2, n3), field.integer(k))
        };
        let gen = |g| AlgebraElement::generator(g, field);
        match self {
            // t (x) x - u (x) y
            GeneratorName::M0 => {
                let mut c = Cochain::from_part(WedgeMonomial::T, gen(Gen::X));
                c.add_part(WedgeMonomial::U, gen(Gen::Y).neg());
                c
            }
            // t (x) x + u (x) y - v (x) 2z
            GeneratorName::M1 => {
                let mut c = Cochain::from_part(WedgeMonomial::T, gen(Gen::X));
                c.add_part(WedgeMonomial::U, gen(Gen::Y));
                c.add_part(WedgeMonomial::V, mono(0, 0, 1, -2));
                c
            }
            // t (x) y - v (x) 2y^2
            GeneratorName::TauY => {
                let mut c = Cochain::from_part(WedgeMonomial::T, gen(Gen::Y));
                c.add_part(WedgeMonomial::V, mono(0, 2, 0, -2));
                c
            }
            // u (x) x - v (x) 2x^2
            GeneratorName::MuX => {
                let mut c = Cochain::from_part(WedgeMonomial::U, gen(Gen::X));
                c.add_part(WedgeMonomial::V, mono(2, 0, 0, -2));
                c
            }
            // t^v (x) x^2 y - u^v (x) x y^2
            GeneratorName::Nu0 => {
                let mut c = Cochain::from_part(WedgeMonomial::Tv, mono(2, 1, 0, 1));
                c.add_part(WedgeMonomial::Uv, mono(1, 2, 0, -1));
                c
            }
            // t^v (x) x - u^v (x) y
            GeneratorName::Nu1 => {
                let mut c = Cochain::from_part(WedgeMonomial::Tv, gen(Gen::X));
                c.add_part(WedgeMonomial::Uv, gen(Gen::Y).neg());
                c
            }
            // t^v (x) (2 x y^2 - y z)
            GeneratorName::Nu2 => {
                let a = mono(1, 2, 0, 2).add(&mono(0, 1, 1, -1));
                Cochain::from_part(WedgeMonomial::Tv, a)
            }
            // u^v (x) (2 x^2 y - x z)
            GeneratorName::Nu3 => {
                let a = mono(2, 1, 0, 2).add(&mono(1, 0, 1, -1));
                Cochain::from_part(WedgeMonomial::Uv, a)
            }
            // t^u^v (x) 1
            GeneratorName::Q1 => Cochain::from_part(
                WedgeMonomial::Tuv,
                AlgebraElement::monomial(PbwMonomial::ONE, one),
            ),
            // t^u^v (x) x y
            GeneratorName::Qxy => Cochain::from_part(WedgeMonomial::Tuv, mono(1, 1, 0, 1)),
        }
    }
}

/// A certified named generator: representative plus its reduced class.
#[derive(Debug, Clone)]
pub struct NamedGenerator {
    pub name: GeneratorName,
    pub cochain: Cochain,
    pub class: CohomologyClass,
}

/// Builds and certifies all ten named generators: each must be weight
/// homogeneous at its stated weight, a cocycle, and not a boundary.
pub fn named_generators(engine: &HomologyEngine) -> Result<Vec<NamedGenerator>, String> {
    let mut out = Vec::new();
    for name in ALL_GENERATORS {
        let c = name.representative(engine.field());
        if c.degree() != name.degree() {
            return Err(format!("{}: degree mismatch", name.label()));
        }
        match c.weight() {
            Some(w) if w == name.weight() => {}
            other => {
                return Err(format!(
                    "{}: expected weight {}, found {:?}",
                    name.label(),
                    name.weight(),
                    other
                ))
            }
        }
        let class = engine
            .reduce_to_class(&c)
            .map_err(|e| format!("{}: {}", name.label(), e))?;
        if class.is_zero() {
            return Err(format!("{}: representative is a boundary", name.label()));
        }
        out.push(NamedGenerator { name, cochain: c, class });
    }
    Ok(out)
}

/// Looks a generator up in a certified registry.
pub fn find_generator(registry: &[NamedGenerator], name: GeneratorName) -> &NamedGenerator {
    registry
        .iter()
        .find(|g| g.name == name)
        .expect("registry holds all generators")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine() -> HomologyEngine {
        HomologyEngine::new(FieldSpec::Rational)
    }

    #[test]
    fn degree0_weight2_is_the_center_slice() {
        let e = engine();
        let h = e.homology(0, 2);
        assert_eq!(h.dim_homology, 3);
        // spanned by x^2, y^2, z: every representative must be central
        for rep in &h.rep_cochains {
            let a = rep.component(WedgeMonomial::One).unwrap();
            assert!(a.is_central_form());
        }
    }

    #[test]
    fn degree3_weight4_survives() {
        let e = engine();
        let h = e.homology(3, 4);
        assert_eq!(h.dim_cochains, 1);
        assert_eq!(h.dim_boundaries, 0);
        assert_eq!(h.dim_homology, 1);
    }

    #[test]
    fn degree1_weight0_vanishes() {
        let e = engine();
        let h = e.homology(1, 0);
        assert_eq!(h.dim_homology, 0);
    }

    #[test]
    fn boundaries_reduce_to_zero_with_witness() {
        let e = engine();
        let f = e.field();
        let vx = Cochain::from_part(WedgeMonomial::V, AlgebraElement::generator(Gen::X, f));
        let b = vx.differential(f);
        match e.is_boundary(&b).unwrap() {
            BoundaryTest::Boundary { witness } => {
                assert_eq!(witness.differential(f), b);
            }
            BoundaryTest::NotBoundary { .. } => panic!("image of d must be a boundary"),
        }
    }

    #[test]
    fn t_commutator_is_boundary() {
        // t (x) (xy - yx) = d(y)
        let e = engine();
        let f = e.field();
        let x = AlgebraElement::generator(Gen::X, f);
        let y = AlgebraElement::generator(Gen::Y, f);
        let c = Cochain::from_part(WedgeMonomial::T, x.mul(&y).sub(&y.mul(&x)));
        let class = e.reduce_to_class(&c).unwrap();
        assert!(class.is_zero());
    }

    #[test]
    fn tu_x_is_boundary_via_halving() {
        // t^u (x) x = d(u (x) 1/2); needs division by 2
        let e = engine();
        let f = e.field();
        let c = Cochain::from_part(WedgeMonomial::Tu, AlgebraElement::generator(Gen::X, f));
        match e.is_boundary(&c).unwrap() {
            BoundaryTest::Boundary { witness } => assert_eq!(witness.differential(f), c),
            BoundaryTest::NotBoundary { .. } => panic!("t^u (x) x is a boundary"),
        }
    }

    #[test]
    fn top_class_is_not_boundary() {
        let e = engine();
        let c = GeneratorName::Q1.representative(e.field());
        assert!(!e.is_boundary(&c).unwrap().is_boundary());
    }

    #[test]
    fn named_generators_certify() {
        let e = engine();
        let registry = named_generators(&e).unwrap();
        assert_eq!(registry.len(), 10);
    }

    #[test]
    fn m0_reduces_to_nonzero_weight2_class() {
        let e = engine();
        let c = GeneratorName::M0.representative(e.field());
        let class = e.reduce_to_class(&c).unwrap();
        assert!(!class.is_zero());
        assert_eq!(class.weight, 2);
    }

    #[test]
    fn rejects_non_cocycles() {
        let e = engine();
        let f = e.field();
        // t (x) y is not a cocycle: d = t^u (x) 2y^2
        let c = Cochain::from_part(WedgeMonomial::T, AlgebraElement::generator(Gen::Y, f));
        assert!(matches!(
            e.reduce_to_class(&c),
            Err(ReduceError::NotCocycle { .. })
        ));
    }

    #[test]
    fn exactness_bookkeeping_small() {
        // dim Z + rank(outgoing) = dim, per slice
        let e = engine();
        for degree in 0u8..=3 {
            for w in 0..=8u32 {
                let h = e.homology(degree, w);
                let out_rank = h.dim_cochains - h.dim_cycles;
                assert_eq!(h.dim_cycles + out_rank, h.dim_cochains);
                assert!(h.dim_homology == h.dim_cycles - h.dim_boundaries);
            }
        }
    }
}
