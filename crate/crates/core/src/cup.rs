//! The multiplicative layer: a dg product on the complex, a Leibniz gate,
//! and verification of the multiplication tables and the module structure
//! of the cohomology over the center.
//!
//! The product is not prescribed, so candidate rules are validated
//! empirically: a rule only counts if d(fg) = d(f)g + (-1)^deg(f) f d(g)
//! holds exactly on a screening set, and table verification is marked
//! unsound unless the full Leibniz gate passed.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::cochain::Cochain;
use crate::complex::weight_basis;
use crate::homology::{
    find_generator, BoundaryTest, CohomologyClass, GeneratorName, HomologyEngine, NamedGenerator,
    ALL_GENERATORS,
};
use crate::linalg::{rref, Matrix, SpanTracker};
use crate::ncpoly::{center_monomials_of_weight, AlgebraElement};
use crate::report::{CheckResult, CheckStatus};
use crate::scalar::{FieldSpec, Scalar};
use crate::tables::{all_entries, central, erratum_for, TableEntry};
use crate::wedge::{wedge, WedgeMonomial};

/// Candidate sign conventions for the product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductRule {
    /// (l (x) a) * (m (x) b) = (l ^ m) (x) (a b); no sign beyond the wedge
    /// signs, the algebra factor sitting in cohomological degree 0.
    Direct,
    /// Wedge factors multiplied in reversed order.
    WedgeReversed,
    /// Algebra factors multiplied in reversed order.
    AlgebraReversed,
}

pub const CANDIDATE_RULES: [ProductRule; 3] = [
    ProductRule::Direct,
    ProductRule::WedgeReversed,
    ProductRule::AlgebraReversed,
];

impl ProductRule {
    pub fn label(self) -> &'static str {
        match self {
            ProductRule::Direct => "direct",
            ProductRule::WedgeReversed => "wedge-reversed",
            ProductRule::AlgebraReversed => "algebra-reversed",
        }
    }
}

/// Bilinear product of cochains under the given rule. Degree adds; above
/// the top of the complex every wedge vanishes and the zero cochain comes
/// back.
pub fn cup_with(rule: ProductRule, f: &Cochain, g: &Cochain) -> Cochain {
    let degree = (f.degree() + g.degree()).min(4);
    let mut out = Cochain::zero(degree);
    for (l1, a1) in f.components() {
        for (l2, a2) in g.components() {
            let (signed, algebra) = match rule {
                ProductRule::Direct => (wedge(*l1, *l2), a1.mul(a2)),
                ProductRule::WedgeReversed => (wedge(*l2, *l1), a1.mul(a2)),
                ProductRule::AlgebraReversed => (wedge(*l1, *l2), a2.mul(a1)),
            };
            if let Some((sign, label)) = signed {
                out.add_part(label, algebra.scale_i64(sign));
            }
        }
    }
    out
}

/// One failed Leibniz identity.
#[derive(Debug, Clone)]
pub struct LeibnizViolation {
    pub left_degree: u8,
    pub right_degree: u8,
    pub left: String,
    pub right: String,
    pub residual: String,
}

/// Outcome of the Leibniz gate for one rule.
#[derive(Debug, Clone)]
pub struct LeibnizReport {
    pub rule: ProductRule,
    pub exhaustive_weight_bound: u32,
    pub exhaustive_pairs: usize,
    pub random_pairs: usize,
    pub random_weight_bound: u32,
    pub seed: u64,
    /// First violation per (left degree, right degree) pair.
    pub violations: Vec<LeibnizViolation>,
}

impl LeibnizReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn leibniz_residual(rule: ProductRule, f: &Cochain, g: &Cochain, field: FieldSpec) -> Cochain {
    let lhs = cup_with(rule, f, g).differential(field);
    let sign = if f.degree() % 2 == 0 { 1 } else { -1 };
    let rhs = cup_with(rule, &f.differential(field), g)
        .add(&cup_with(rule, f, &g.differential(field)).scale_i64(sign));
    lhs.sub(&rhs)
}

/// Exhaustive Leibniz check over all homogeneous basis pairs of weight at
/// most `w_max`, plus seeded random homogeneous pairs of weight at most
/// `random_w_max`.
pub fn check_leibniz(
    field: FieldSpec,
    rule: ProductRule,
    w_max: u32,
    random_pairs: usize,
    random_w_max: u32,
    seed: u64,
) -> LeibnizReport {
    let mut violations: Vec<LeibnizViolation> = Vec::new();
    let mut seen_degrees: Vec<(u8, u8)> = Vec::new();
    let mut exhaustive = 0usize;

    let basis_cochains: Vec<Vec<Cochain>> = (0u8..=3)
        .map(|deg| {
            (0..=w_max)
                .flat_map(|w| weight_basis(deg, w))
                .map(|(l, m)| Cochain::from_part(l, AlgebraElement::monomial(m, field.one())))
                .collect()
        })
        .collect();

    for d1 in 0u8..=3 {
        for d2 in 0u8..=3 {
            for f in &basis_cochains[d1 as usize] {
                for g in &basis_cochains[d2 as usize] {
                    exhaustive += 1;
                    let r = leibniz_residual(rule, f, g, field);
                    if !r.is_zero() && !seen_degrees.contains(&(d1, d2)) {
                        seen_degrees.push((d1, d2));
                        violations.push(LeibnizViolation {
                            left_degree: d1,
                            right_degree: d2,
                            left: f.to_string(),
                            right: g.to_string(),
                            residual: r.to_string(),
                        });
                    }
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random_pairs {
        let f = random_homogeneous_cochain(&mut rng, field, random_w_max);
        let g = random_homogeneous_cochain(&mut rng, field, random_w_max);
        let r = leibniz_residual(rule, &f, &g, field);
        if !r.is_zero() {
            let key = (f.degree(), g.degree());
            if !seen_degrees.contains(&key) {
                seen_degrees.push(key);
                violations.push(LeibnizViolation {
                    left_degree: f.degree(),
                    right_degree: g.degree(),
                    left: f.to_string(),
                    right: g.to_string(),
                    residual: r.to_string(),
                });
            }
        }
    }

    LeibnizReport {
        rule,
        exhaustive_weight_bound: w_max,
        exhaustive_pairs: exhaustive,
        random_pairs,
        random_weight_bound: random_w_max,
        seed,
        violations,
    }
}

/// A random nonzero homogeneous cochain of weight <= w_max.
pub fn random_homogeneous_cochain(rng: &mut ChaCha8Rng, field: FieldSpec, w_max: u32) -> Cochain {
    loop {
        let degree = rng.gen_range(0u8..=3);
        let weight = rng.gen_range(0..=w_max);
        let basis = weight_basis(degree, weight);
        if basis.is_empty() {
            continue;
        }
        let mut c = Cochain::zero(degree);
        for (l, m) in &basis {
            if rng.gen_bool(0.4) {
                let k = loop {
                    let k = rng.gen_range(-3i64..=3);
                    if k != 0 {
                        break k;
                    }
                };
                c.add_part(*l, AlgebraElement::monomial(*m, field.integer(k)));
            }
        }
        if !c.is_zero() {
            return c;
        }
    }
}

/// Picks the first candidate rule passing a quick Leibniz screen.
/// Returns the chosen rule and a log line per rejected candidate.
pub fn select_product_rule(field: FieldSpec) -> (ProductRule, Vec<String>, bool) {
    let mut log = Vec::new();
    for rule in CANDIDATE_RULES {
        let screen = check_leibniz(field, rule, 4, 0, 0, 0);
        if screen.passed() {
            return (rule, log, true);
        }
        let v = &screen.violations[0];
        log.push(format!(
            "rule {} fails Leibniz on ({}) * ({}): residual {}",
            rule.label(),
            v.left,
            v.right,
            v.residual
        ));
    }
    (ProductRule::Direct, log, false)
}

/// Verification context shared by the table and module checks.
pub struct CupVerifier<'a> {
    pub engine: &'a HomologyEngine,
    pub registry: &'a [NamedGenerator],
    pub rule: ProductRule,
}

impl<'a> CupVerifier<'a> {
    pub fn new(engine: &'a HomologyEngine, registry: &'a [NamedGenerator], rule: ProductRule) -> Self {
        CupVerifier { engine, registry, rule }
    }

    fn field(&self) -> FieldSpec {
        self.engine.field()
    }

    fn rep(&self, name: GeneratorName) -> &Cochain {
        &find_generator(self.registry, name).cochain
    }

    fn expected_cochain(&self, degree: u8, combo: &[(GeneratorName, AlgebraElement)]) -> Cochain {
        let mut e = Cochain::zero(degree);
        for (name, coeff) in combo {
            e = e.add(&self.rep(*name).mul_algebra_right(coeff));
        }
        e
    }

    fn combo_string(combo: &[(GeneratorName, AlgebraElement)]) -> String {
        if combo.is_empty() {
            return "0".to_string();
        }
        combo
            .iter()
            .map(|(n, c)| format!("({}) {}", c, n.label()))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Verifies one table entry modulo boundaries. A stated expectation
    /// that fails falls back to its documented erratum; only an entry with
    /// neither verified is a failure.
    pub fn verify_table(&self, entry: &TableEntry) -> CheckResult {
        let product = cup_with(self.rule, self.rep(entry.left), self.rep(entry.right));
        let degree = product.degree();
        let stated = self.expected_cochain(degree, &entry.expected);
        let diff = product.sub(&stated);
        let note = entry.note.map(|n| format!(" [{n}]")).unwrap_or_default();

        match self.engine.is_boundary(&diff) {
            Ok(BoundaryTest::Boundary { .. }) => CheckResult {
                id: format!("table:{}", entry.id),
                location: entry.location.to_string(),
                status: CheckStatus::Pass,
                detail: format!(
                    "{} * {} = {} modulo boundaries{note}",
                    entry.left.label(),
                    entry.right.label(),
                    Self::combo_string(&entry.expected)
                ),
                witness_or_residual: None,
            },
            Ok(BoundaryTest::NotBoundary { class }) => self.verify_erratum(entry, &product, class, &note),
            Err(e) => CheckResult {
                id: format!("table:{}", entry.id),
                location: entry.location.to_string(),
                status: CheckStatus::Fail,
                detail: format!("difference is not even a cocycle: {e}"),
                witness_or_residual: Some(diff.to_string()),
            },
        }
    }

    fn verify_erratum(
        &self,
        entry: &TableEntry,
        product: &Cochain,
        stated_residual: CohomologyClass,
        note: &str,
    ) -> CheckResult {
        let id = format!("table:{}", entry.id);
        let residual_str = format!(
            "stated form misses by class coordinates {:?} at weight {}",
            stated_residual
                .coordinates
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>(),
            stated_residual.weight
        );
        let Some(erratum) = erratum_for(entry.id, self.field()) else {
            return CheckResult {
                id,
                location: entry.location.to_string(),
                status: CheckStatus::Fail,
                detail: format!(
                    "{} * {} does not equal {} modulo boundaries and no correction is documented{note}",
                    entry.left.label(),
                    entry.right.label(),
                    Self::combo_string(&entry.expected)
                ),
                witness_or_residual: Some(residual_str),
            };
        };
        let corrected = self.expected_cochain(product.degree(), &erratum.corrected);
        let diff = product.sub(&corrected);
        match self.engine.is_boundary(&diff) {
            Ok(BoundaryTest::Boundary { .. }) => CheckResult {
                id,
                location: entry.location.to_string(),
                status: CheckStatus::PassCorrected,
                detail: format!(
                    "{} * {} = {} modulo boundaries; stated value {} is refuted. {}{note}",
                    entry.left.label(),
                    entry.right.label(),
                    Self::combo_string(&erratum.corrected),
                    Self::combo_string(&entry.expected),
                    erratum.note
                ),
                witness_or_residual: Some(residual_str),
            },
            _ => CheckResult {
                id,
                location: entry.location.to_string(),
                status: CheckStatus::Fail,
                detail: format!(
                    "neither the stated value {} nor the documented correction {} matches",
                    Self::combo_string(&entry.expected),
                    Self::combo_string(&erratum.corrected)
                ),
                witness_or_residual: Some(residual_str),
            },
        }
    }

    /// Runs every table entry, the graded-commutativity checks, the
    /// degree-vanishing checks and the unit law.
    pub fn verify_all_tables(&self) -> Vec<CheckResult> {
        let mut out: Vec<CheckResult> = all_entries(self.field())
            .iter()
            .map(|e| self.verify_table(e))
            .collect();
        out.push(self.graded_commutativity());
        out.push(self.degree_vanishing());
        out.push(self.unit_law());
        out
    }

    /// f g - (-1)^(ij) g f must be a boundary for all generator pairs.
    pub fn graded_commutativity(&self) -> CheckResult {
        let mut failures = Vec::new();
        let mut pairs = 0usize;
        for a in ALL_GENERATORS {
            for b in ALL_GENERATORS {
                if a.degree() + b.degree() > 3 {
                    continue; // both products land above the complex
                }
                pairs += 1;
                let fg = cup_with(self.rule, self.rep(a), self.rep(b));
                let gf = cup_with(self.rule, self.rep(b), self.rep(a));
                let sign = if (a.degree() * b.degree()) % 2 == 0 { 1 } else { -1 };
                let diff = fg.sub(&gf.scale_i64(sign));
                match self.engine.is_boundary(&diff) {
                    Ok(BoundaryTest::Boundary { .. }) => {}
                    _ => failures.push(format!("{} vs {}", a.label(), b.label())),
                }
            }
        }
        CheckResult {
            id: "tables:graded-commutativity".to_string(),
            location: "graded commutativity of the product".to_string(),
            status: if failures.is_empty() { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: format!("{pairs} generator pairs checked"),
            witness_or_residual: if failures.is_empty() { None } else { Some(failures.join("; ")) },
        }
    }

    /// Products of total degree above 3 vanish identically in the complex.
    pub fn degree_vanishing(&self) -> CheckResult {
        let mut failures = Vec::new();
        let mut pairs = 0usize;
        for a in ALL_GENERATORS {
            for b in ALL_GENERATORS {
                if a.degree() + b.degree() <= 3 {
                    continue;
                }
                pairs += 1;
                let fg = cup_with(self.rule, self.rep(a), self.rep(b));
                if !fg.is_zero() {
                    failures.push(format!("{} * {}", a.label(), b.label()));
                }
            }
        }
        CheckResult {
            id: "tables:degree-vanishing".to_string(),
            location: "products of total degree > 3".to_string(),
            status: if failures.is_empty() { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: format!("{pairs} generator pairs are identically zero cochains"),
            witness_or_residual: if failures.is_empty() { None } else { Some(failures.join("; ")) },
        }
    }

    /// cup(1, f) = cup(f, 1) = f.
    pub fn unit_law(&self) -> CheckResult {
        let one = Cochain::scalar_cochain(AlgebraElement::one(self.field()));
        let mut ok = true;
        for g in ALL_GENERATORS {
            let f = self.rep(g);
            if &cup_with(self.rule, &one, f) != f || &cup_with(self.rule, f, &one) != f {
                ok = false;
            }
        }
        CheckResult {
            id: "product:unit-law".to_string(),
            location: "unit of the product".to_string(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: "1 # (1) is a two-sided unit on all named generators".to_string(),
            witness_or_residual: None,
        }
    }

    /// The z action on m0: z m0 = 2 x^2 tau_y - 2 y^2 mu_x modulo
    /// boundaries.
    pub fn z_action_on_m0(&self) -> CheckResult {
        let f = self.field();
        let z = central(f, 1, 0, 0, 1);
        let lhs = self.rep(GeneratorName::M0).mul_algebra_right(&z);
        let rhs = self
            .rep(GeneratorName::TauY)
            .mul_algebra_right(&central(f, 2, 1, 0, 0))
            .add(&self.rep(GeneratorName::MuX).mul_algebra_right(&central(f, -2, 0, 1, 0)));
        let diff = lhs.sub(&rhs);
        let status = match self.engine.is_boundary(&diff) {
            Ok(BoundaryTest::Boundary { .. }) => CheckStatus::Pass,
            _ => CheckStatus::Fail,
        };
        CheckResult {
            id: "modules:z-action-m0".to_string(),
            location: "z action on the degree-1 torsion generator".to_string(),
            status,
            detail: "z m0 = 2 x^2 tau_y - 2 y^2 mu_x modulo boundaries".to_string(),
            witness_or_residual: None,
        }
    }

    /// The z action on nu0. The stated coefficients
    /// (-2x^2y^2, +x^2, +y^2) on (nu1, nu2, nu3) are evaluated literally,
    /// and the actual coefficients are solved for independently from the
    /// slice linear algebra; the two are reported side by side.
    pub fn z_action_on_nu0(&self) -> CheckResult {
        let f = self.field();
        let z_nu0 = self
            .rep(GeneratorName::Nu0)
            .mul_algebra_right(&central(f, 1, 0, 0, 1));
        let basis_terms: [(GeneratorName, AlgebraElement); 3] = [
            (GeneratorName::Nu1, central(f, 1, 1, 1, 0)),
            (GeneratorName::Nu2, central(f, 1, 1, 0, 0)),
            (GeneratorName::Nu3, central(f, 1, 0, 1, 0)),
        ];
        // Solve for the actual coefficients in class coordinates.
        let target = self
            .engine
            .reduce_to_class(&z_nu0)
            .expect("z nu0 is a cocycle");
        let h = self.engine.homology(2, target.weight);
        let columns: Vec<Vec<Scalar>> = basis_terms
            .iter()
            .map(|(n, c)| {
                self.engine
                    .reduce_to_class(&self.rep(*n).mul_algebra_right(c))
                    .expect("S multiples of cocycles are cocycles")
                    .coordinates
            })
            .collect();
        let matrix = Matrix::from_columns(&columns, h.dim_homology, f);
        let solved = crate::linalg::solve(&matrix, &target.coordinates);

        let literal = self.expected_cochain(
            2,
            &[
                (GeneratorName::Nu1, central(f, -2, 1, 1, 0)),
                (GeneratorName::Nu2, central(f, 1, 1, 0, 0)),
                (GeneratorName::Nu3, central(f, 1, 0, 1, 0)),
            ],
        );
        let literal_holds = matches!(
            self.engine.is_boundary(&z_nu0.sub(&literal)),
            Ok(BoundaryTest::Boundary { .. })
        );

        match solved {
            Some(coeffs) => {
                let expected: Vec<Scalar> =
                    [2i64, -1, 1].iter().map(|k| f.integer(*k)).collect();
                let corrected_holds = coeffs == expected;
                // the corrected identity is in fact an exact cochain identity
                let corrected = self.expected_cochain(
                    2,
                    &[
                        (GeneratorName::Nu1, central(f, 2, 1, 1, 0)),
                        (GeneratorName::Nu2, central(f, -1, 1, 0, 0)),
                        (GeneratorName::Nu3, central(f, 1, 0, 1, 0)),
                    ],
                );
                let exact = z_nu0.sub(&corrected).is_zero();
                let status = if literal_holds {
                    CheckStatus::Pass
                } else if corrected_holds && exact {
                    CheckStatus::PassCorrected
                } else {
                    CheckStatus::Fail
                };
                CheckResult {
                    id: "modules:z-action-nu0".to_string(),
                    location: "z action on the degree-2 torsion generator".to_string(),
                    status,
                    detail: format!(
                        "solved z nu0 = ({}) x^2y^2 nu1 + ({}) x^2 nu2 + ({}) y^2 nu3 \
                         (exact cochain identity: {exact}); stated coefficients (-2, +1, +1) \
                         {}",
                        coeffs[0],
                        coeffs[1],
                        coeffs[2],
                        if literal_holds { "hold" } else { "are refuted" }
                    ),
                    witness_or_residual: if literal_holds {
                        None
                    } else {
                        Some(z_nu0.sub(&literal).to_string())
                    },
                }
            }
            None => CheckResult {
                id: "modules:z-action-nu0".to_string(),
                location: "z action on the degree-2 torsion generator".to_string(),
                status: CheckStatus::Fail,
                detail: "z nu0 does not lie in the span of x^2y^2 nu1, x^2 nu2, y^2 nu3".to_string(),
                witness_or_residual: Some(z_nu0.to_string()),
            },
        }
    }

    /// x^2, y^2 and z all annihilate the class of q1.
    pub fn q1_annihilated(&self) -> CheckResult {
        let f = self.field();
        let q1 = self.rep(GeneratorName::Q1);
        let mut ok = true;
        for s in [central(f, 1, 1, 0, 0), central(f, 1, 0, 1, 0), central(f, 1, 0, 0, 1)] {
            match self.engine.is_boundary(&q1.mul_algebra_right(&s)) {
                Ok(BoundaryTest::Boundary { .. }) => {}
                _ => ok = false,
            }
        }
        CheckResult {
            id: "modules:q1-annihilated".to_string(),
            location: "annihilator of the degree-3 socle class".to_string(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: "x^2 q1, y^2 q1, z q1 are all boundaries".to_string(),
            witness_or_residual: None,
        }
    }

    /// Center multiples of the named generators span each homology slice
    /// with exactly the predicted dimension. m0 and nu0 are multiplied
    /// only by k[x^2, y^2]; with that restriction the number of multiples
    /// equals the dimension, so the count doubles as a directness check.
    pub fn span_check(&self, w_max: u32) -> Vec<CheckResult> {
        let mut out = Vec::new();
        for degree in 1u8..=3 {
            let mut all_ok = true;
            let mut lines = Vec::new();
            for w in 0..=w_max {
                let h = self.engine.homology(degree, w);
                let mut tracker = SpanTracker::new(h.dim_homology, self.field());
                let mut count = 0usize;
                for g in ALL_GENERATORS.iter().filter(|g| g.degree() == degree) {
                    for s in self.center_multiples(*g, w) {
                        let c = self.rep(*g).mul_algebra_right(&s);
                        let class = self
                            .engine
                            .reduce_to_class(&c)
                            .expect("central multiple of a cocycle");
                        count += 1;
                        tracker.insert(&class.coordinates);
                    }
                }
                let ok = tracker.rank() == h.dim_homology && count == h.dim_homology;
                if !ok {
                    all_ok = false;
                    lines.push(format!(
                        "degree {degree} weight {w}: {} multiples, rank {}, dim {}",
                        count,
                        tracker.rank(),
                        h.dim_homology
                    ));
                }
            }
            out.push(CheckResult {
                id: format!("modules:span:degree{degree}"),
                location: "generation and direct-sum structure over the center".to_string(),
                status: if all_ok { CheckStatus::Pass } else { CheckStatus::Fail },
                detail: format!(
                    "center multiples of the degree-{degree} generators exhaust homology \
                     for every weight <= {w_max}, in matching number"
                ),
                witness_or_residual: if all_ok { None } else { Some(lines.join("; ")) },
            });
        }
        out
    }

    /// The central monomials that may multiply a generator to reach
    /// weight w, drawn from the generator's coefficient module: m0 and nu0
    /// take k[x^2, y^2] multiples, q1 only scalars (its class is killed by
    /// the maximal ideal), everything else the full center.
    fn center_multiples(&self, g: GeneratorName, w: u32) -> Vec<AlgebraElement> {
        if w < g.weight() {
            return Vec::new();
        }
        let need = w - g.weight();
        if g == GeneratorName::Q1 {
            return if need == 0 {
                vec![AlgebraElement::one(self.field())]
            } else {
                Vec::new()
            };
        }
        let restricted = matches!(g, GeneratorName::M0 | GeneratorName::Nu0);
        center_monomials_of_weight(need)
            .into_iter()
            .filter(|c| !restricted || c.e3 == 0)
            .map(|c| AlgebraElement::monomial(c.to_pbw(), self.field().one()))
            .collect()
    }

    /// All module-structure checks.
    pub fn verify_module_structure(&self, w_max: u32) -> Vec<CheckResult> {
        let mut out = vec![self.z_action_on_m0(), self.z_action_on_nu0(), self.q1_annihilated()];
        out.extend(self.span_check(w_max));
        out
    }

    /// The linear relation among the four degree-2 module generators.
    ///
    /// The four cochains nu2 x^2, 2x^2y^2 nu1, y^2 nu3, z nu0 span only a
    /// three-dimensional space; the kernel is computed from scratch, must
    /// be one-dimensional, and is compared against the stated sign pattern
    /// (+, -, +, -), which does not sum to zero.
    pub fn relation_among_v_generators(&self) -> CheckResult {
        let f = self.field();
        let terms: [Cochain; 4] = [
            self.rep(GeneratorName::Nu2).mul_algebra_right(&central(f, 1, 1, 0, 0)),
            self.rep(GeneratorName::Nu1).mul_algebra_right(&central(f, 2, 1, 1, 0)),
            self.rep(GeneratorName::Nu3).mul_algebra_right(&central(f, 1, 0, 1, 0)),
            self.rep(GeneratorName::Nu0).mul_algebra_right(&central(f, 1, 0, 0, 1)),
        ];
        let w = terms[0].weight().expect("homogeneous");
        let basis = weight_basis(2, w);
        let columns: Vec<Vec<Scalar>> = terms
            .iter()
            .map(|c| crate::complex::coordinates_in_basis(c, &basis, f).expect("in slice"))
            .collect();
        let matrix = Matrix::from_columns(&columns, basis.len(), f);
        let kernel = rref(matrix).kernel_basis();

        // stated combination: + nu2 x^2 - 2x^2y^2 nu1 + y^2 nu3 - z nu0
        let stated = terms[0].sub(&terms[1]).add(&terms[2]).sub(&terms[3]);
        // machine relation normalized to leading coefficient 1
        let normalized: Option<Vec<Scalar>> = kernel.first().map(|v| {
            let lead = v.iter().find(|s| !s.is_zero()).expect("nonzero kernel vector");
            let inv = lead.inv();
            v.iter().map(|s| s.mul(&inv)).collect()
        });
        let expected: Vec<Scalar> = [1i64, -1, -1, 1].iter().map(|k| f.integer(*k)).collect();
        let machine_matches = normalized.as_deref() == Some(&expected[..]);

        let corrected = terms[0].sub(&terms[1]).sub(&terms[2]).add(&terms[3]);
        let status = if stated.is_zero() {
            CheckStatus::Pass
        } else if kernel.len() == 1 && machine_matches && corrected.is_zero() {
            CheckStatus::PassCorrected
        } else {
            CheckStatus::Fail
        };
        CheckResult {
            id: "relation:v-generators".to_string(),
            location: "four-term relation among the degree-2 generators".to_string(),
            status,
            detail: format!(
                "kernel of [nu2 x^2 | 2x^2y^2 nu1 | y^2 nu3 | z nu0] has dimension {}; \
                 the unique relation is nu2 x^2 - 2x^2y^2 nu1 - y^2 nu3 + z nu0 = 0 \
                 (exact zero cochain: {}); the stated pattern (+, -, +, -) evaluates to a \
                 nonzero cochain",
                kernel.len(),
                corrected.is_zero()
            ),
            witness_or_residual: if stated.is_zero() { None } else { Some(stated.to_string()) },
        }
    }

    /// The two redundant degree-2 cycles lie in the center span of the
    /// nu classes at their weight.
    pub fn redundant_cycles(&self) -> CheckResult {
        let f = self.field();
        // t^v (x) 2x^3 - u^v (x) xz and t^v (x) yz - u^v (x) 2y^3
        let mut r1 = Cochain::from_part(
            WedgeMonomial::Tv,
            AlgebraElement::monomial(crate::ncpoly::PbwMonomial::new(3, 0, 0), f.integer(2)),
        );
        r1.add_part(
            WedgeMonomial::Uv,
            AlgebraElement::monomial(crate::ncpoly::PbwMonomial::new(1, 0, 1), f.integer(-1)),
        );
        let mut r2 = Cochain::from_part(
            WedgeMonomial::Tv,
            AlgebraElement::monomial(crate::ncpoly::PbwMonomial::new(0, 1, 1), f.integer(1)),
        );
        r2.add_part(
            WedgeMonomial::Uv,
            AlgebraElement::monomial(crate::ncpoly::PbwMonomial::new(0, 3, 0), f.integer(-2)),
        );

        let mut ok = true;
        let mut details = Vec::new();
        for (name, c) in [("t^v#(2x^3)-u^v#(xz)", &r1), ("t^v#(yz)-u^v#(2y^3)", &r2)] {
            let class = match self.engine.reduce_to_class(c) {
                Ok(cl) => cl,
                Err(e) => {
                    ok = false;
                    details.push(format!("{name}: {e}"));
                    continue;
                }
            };
            let w = class.weight;
            let h = self.engine.homology(2, w);
            let mut tracker = SpanTracker::new(h.dim_homology, f);
            for nu in [GeneratorName::Nu0, GeneratorName::Nu1, GeneratorName::Nu2, GeneratorName::Nu3] {
                for s in self.unrestricted_center_multiples(nu, w) {
                    let cl = self
                        .engine
                        .reduce_to_class(&self.rep(nu).mul_algebra_right(&s))
                        .expect("central multiple of a cocycle");
                    tracker.insert(&cl.coordinates);
                }
            }
            if tracker.contains(&class.coordinates) {
                details.push(format!("{name}: in the center span of nu0..nu3 at weight {w}"));
            } else {
                ok = false;
                details.push(format!("{name}: NOT in the span at weight {w}"));
            }
        }
        CheckResult {
            id: "remark:redundant-cycles".to_string(),
            location: "redundant degree-2 generators".to_string(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: details.join("; "),
            witness_or_residual: None,
        }
    }

    fn unrestricted_center_multiples(&self, g: GeneratorName, w: u32) -> Vec<AlgebraElement> {
        if w < g.weight() {
            return Vec::new();
        }
        center_monomials_of_weight(w - g.weight())
            .into_iter()
            .map(|c| AlgebraElement::monomial(c.to_pbw(), self.field().one()))
            .collect()
    }

    /// Generation of the whole cohomology by four degree-1 classes, nu1
    /// and q1 over the center, plus the two non-membership facts.
    pub fn finite_generation(&self, w_max: u32) -> Vec<CheckResult> {
        let f = self.field();
        let deg1: Vec<&Cochain> = [GeneratorName::M0, GeneratorName::M1, GeneratorName::TauY, GeneratorName::MuX]
            .iter()
            .map(|g| self.rep(*g))
            .collect();

        // cochain-level products of the degree-1 generators
        let mut deg2_products: Vec<Cochain> = Vec::new();
        for a in &deg1 {
            for b in &deg1 {
                let p = cup_with(self.rule, a, b);
                if !p.is_zero() {
                    deg2_products.push(p);
                }
            }
        }
        let mut deg2_span_set = deg2_products.clone();
        deg2_span_set.push(self.rep(GeneratorName::Nu1).clone());

        let mut deg3_products: Vec<Cochain> = Vec::new();
        for a in &deg1 {
            for p in &deg2_span_set {
                let q = cup_with(self.rule, a, p);
                if !q.is_zero() {
                    deg3_products.push(q);
                }
            }
        }
        let mut deg3_span_set = deg3_products.clone();
        deg3_span_set.push(self.rep(GeneratorName::Q1).clone());

        let deg1_refs: Vec<Cochain> = deg1.iter().map(|c| (*c).clone()).collect();
        let sets: [(&str, u8, &[Cochain]); 3] = [
            ("degree 1", 1, &deg1_refs),
            ("degree 2", 2, &deg2_span_set),
            ("degree 3", 3, &deg3_span_set),
        ];

        let mut all_ok = true;
        let mut lines = Vec::new();
        for (label, degree, set) in sets {
            for w in 0..=w_max {
                let h = self.engine.homology(degree, w);
                if h.dim_homology == 0 {
                    continue;
                }
                let mut tracker = SpanTracker::new(h.dim_homology, f);
                for c in set {
                    self.insert_center_multiples(c, w, &mut tracker);
                }
                if tracker.rank() != h.dim_homology {
                    all_ok = false;
                    lines.push(format!(
                        "{label} weight {w}: rank {} < dim {}",
                        tracker.rank(),
                        h.dim_homology
                    ));
                }
            }
        }
        let generation = CheckResult {
            id: "generation:algebra".to_string(),
            location: "finite generation over the center".to_string(),
            status: if all_ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: format!(
                "the center, four degree-1 classes, nu1 and q1 generate all \
                 homology up to weight {w_max}"
            ),
            witness_or_residual: if all_ok { None } else { Some(lines.join("; ")) },
        };

        // nu1 is not a combination of center multiples of degree-1 products.
        let nu1_class = self
            .engine
            .reduce_to_class(self.rep(GeneratorName::Nu1))
            .expect("nu1 is a cocycle");
        let h = self.engine.homology(2, nu1_class.weight);
        let mut tracker = SpanTracker::new(h.dim_homology, f);
        for p in &deg2_products {
            self.insert_center_multiples(p, nu1_class.weight, &mut tracker);
        }
        let nu1_outside = !tracker.contains(&nu1_class.coordinates);
        let nu1_check = CheckResult {
            id: "generation:nu1-outside-products".to_string(),
            location: "nu1 against HH1*HH1".to_string(),
            status: if nu1_outside { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: format!(
                "center span of degree-1 products at weight {} has rank {}; nu1 lies outside",
                nu1_class.weight,
                tracker.rank()
            ),
            witness_or_residual: None,
        };

        // q1 is not a combination of center multiples of HH1 * HH2 products.
        let q1_class = self
            .engine
            .reduce_to_class(self.rep(GeneratorName::Q1))
            .expect("q1 is a cocycle");
        let h = self.engine.homology(3, q1_class.weight);
        let mut tracker = SpanTracker::new(h.dim_homology, f);
        for a in &deg1 {
            for nu in [GeneratorName::Nu0, GeneratorName::Nu1, GeneratorName::Nu2, GeneratorName::Nu3] {
                let p = cup_with(self.rule, a, self.rep(nu));
                self.insert_center_multiples(&p, q1_class.weight, &mut tracker);
            }
        }
        for p in &deg3_products {
            self.insert_center_multiples(p, q1_class.weight, &mut tracker);
        }
        let q1_outside = !tracker.contains(&q1_class.coordinates);
        let q1_check = CheckResult {
            id: "generation:q1-outside-products".to_string(),
            location: "q1 against HH1*HH2".to_string(),
            status: if q1_outside { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: format!(
                "center span of degree-1 times degree-2 products at weight {} has rank {}; \
                 q1 lies outside",
                q1_class.weight,
                tracker.rank()
            ),
            witness_or_residual: None,
        };

        vec![generation, nu1_check, q1_check]
    }

    fn insert_center_multiples(&self, c: &Cochain, w: u32, tracker: &mut SpanTracker) {
        let Some(cw) = c.weight() else { return };
        if w < cw || (w - cw) % 2 != 0 {
            return;
        }
        for s in center_monomials_of_weight(w - cw) {
            let m = c.mul_algebra_right(&AlgebraElement::monomial(s.to_pbw(), self.field().one()));
            if m.is_zero() {
                continue;
            }
            if let Ok(class) = self.engine.reduce_to_class(&m) {
                tracker.insert(&class.coordinates);
            }
        }
    }
}

/// Sorts check results by id for deterministic reports.
pub fn sort_checks(mut checks: Vec<CheckResult>) -> Vec<CheckResult> {
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::named_generators;
    use crate::ncpoly::Gen;

    fn setup() -> (HomologyEngine, Vec<NamedGenerator>) {
        let engine = HomologyEngine::new(FieldSpec::Rational);
        let registry = named_generators(&engine).unwrap();
        (engine, registry)
    }

    #[test]
    fn cup_examples() {
        let f = FieldSpec::Rational;
        let x = Cochain::scalar_cochain(AlgebraElement::generator(Gen::X, f));
        let t1 = Cochain::from_part(WedgeMonomial::T, AlgebraElement::one(f));
        // x * (t (x) 1) = t (x) x
        assert_eq!(
            cup_with(ProductRule::Direct, &x, &t1),
            Cochain::from_part(WedgeMonomial::T, AlgebraElement::generator(Gen::X, f))
        );
        // (t (x) x) * (u (x) y) = t^u (x) xy
        let tx = Cochain::from_part(WedgeMonomial::T, AlgebraElement::generator(Gen::X, f));
        let uy = Cochain::from_part(WedgeMonomial::U, AlgebraElement::generator(Gen::Y, f));
        let got = cup_with(ProductRule::Direct, &tx, &uy);
        assert_eq!(
            got,
            Cochain::from_part(
                WedgeMonomial::Tu,
                AlgebraElement::monomial(crate::ncpoly::PbwMonomial::new(1, 1, 0), f.one())
            )
        );
    }

    #[test]
    fn leibniz_spot_example() {
        // d((t (x) 1) x) with f = x, g = t (x) 1
        let f = FieldSpec::Rational;
        let x = Cochain::scalar_cochain(AlgebraElement::generator(Gen::X, f));
        let t1 = Cochain::from_part(WedgeMonomial::T, AlgebraElement::one(f));
        assert!(leibniz_residual(ProductRule::Direct, &x, &t1, f).is_zero());
        // and f = g = 1
        let one = Cochain::scalar_cochain(AlgebraElement::one(f));
        assert!(leibniz_residual(ProductRule::Direct, &one, &one, f).is_zero());
    }

    #[test]
    fn direct_rule_screens_clean() {
        let (rule, log, sound) = select_product_rule(FieldSpec::Rational);
        assert_eq!(rule, ProductRule::Direct);
        assert!(sound);
        assert!(log.is_empty());
    }

    #[test]
    fn leibniz_small_exhaustive() {
        let report = check_leibniz(FieldSpec::Rational, ProductRule::Direct, 5, 50, 6, 0);
        assert!(report.passed(), "violations: {:?}", report.violations);
    }

    #[test]
    fn q1_products_vanish_in_positive_degree() {
        let (engine, registry) = setup();
        let v = CupVerifier::new(&engine, &registry, ProductRule::Direct);
        for g in ALL_GENERATORS {
            let p = cup_with(v.rule, v.rep(GeneratorName::Q1), v.rep(g));
            assert!(p.is_zero(), "q1 * {} should vanish", g.label());
        }
    }

    #[test]
    fn table_entry_m0_tau_y_passes_as_stated() {
        let (engine, registry) = setup();
        let v = CupVerifier::new(&engine, &registry, ProductRule::Direct);
        let entries = all_entries(engine.field());
        let e = entries.iter().find(|e| e.id == "m0*tau_y").unwrap();
        let r = v.verify_table(e);
        assert_eq!(r.status, CheckStatus::Pass, "{}", r.detail);
    }

    #[test]
    fn table_entry_m0_m1_is_corrected() {
        let (engine, registry) = setup();
        let v = CupVerifier::new(&engine, &registry, ProductRule::Direct);
        let entries = all_entries(engine.field());
        let e = entries.iter().find(|e| e.id == "m0*m1").unwrap();
        let r = v.verify_table(e);
        assert_eq!(r.status, CheckStatus::PassCorrected, "{}", r.detail);
    }

    #[test]
    fn squares_vanish() {
        let (engine, registry) = setup();
        let v = CupVerifier::new(&engine, &registry, ProductRule::Direct);
        for e in crate::tables::square_entries(engine.field()) {
            let r = v.verify_table(&e);
            assert_eq!(r.status, CheckStatus::Pass, "{}: {}", e.id, r.detail);
        }
    }

    #[test]
    fn relation_is_machine_derived() {
        let (engine, registry) = setup();
        let v = CupVerifier::new(&engine, &registry, ProductRule::Direct);
        let r = v.relation_among_v_generators();
        assert_eq!(r.status, CheckStatus::PassCorrected, "{}", r.detail);
        assert!(r.witness_or_residual.is_some());
    }
}
